import pytest

from solweights.errors import UnknownSpec
from solweights.groups import conjugacy_classes, fingerprint, isomorphic
from solweights.zoo import named_group, sl2_with_quaternion_frame, wreath_product


def gl_order(n):
    out = 1
    for i in range(n):
        out *= (1 << n) - (1 << i)
    return out


@pytest.mark.parametrize("spec,order", [
    ("S7", 5040),
    ("A7", 2520),
    ("C12", 12),
    ("D8", 8),
    ("GL(3,2)", 168),
    ("GL(4,2)", 20160),
    ("wr(S3,C2)", 72),
    ("wr(S3,S3)", 1296),
    ("wr(C3,C3)", 81),
    ("dih(C3xC3)", 18),
    ("m108", 108),
    ("m324", 324),
    ("x(S3,S3)", 36),
    ("x(wr(S3,C2),S3)", 432),
    ("SL2(5)", 120),
    ("SL2(25)", 15600),
    ("quat(8)", 8),
    ("quat(32)", 32),
    ("1", 1),
])
def test_registry_orders(spec, order):
    assert named_group(spec).order == order


def test_gl_order_formula():
    assert gl_order(3) == 168
    assert gl_order(4) == 20160
    assert named_group("GL(4,2)").action.n == 15


def test_sl2_order_formula():
    for q, spec in ((5, "SL2(5)"), (25, "SL2(25)")):
        assert named_group(spec).order == q * (q - 1) * (q + 1)


def test_wreath_c2_c2_is_dihedral():
    W = named_group("wr(C2,C2)")
    assert W.order == 8
    assert isomorphic(W, named_group("D8"))


def test_wreath_c3_c3_exponent_nine():
    W = named_group("wr(C3,C3)")
    assert W.order == 81
    assert W.exponent() == 9


def test_wreath_order_formula():
    base = named_group("S3")
    top = named_group("S3")
    W = wreath_product(base, top)
    assert W.order == base.order ** 3 * top.order


def test_generalized_dihedral_classes():
    G = named_group("dih(C3xC3)")
    assert sorted(c.size for c in conjugacy_classes(G)) == [1, 2, 2, 2, 2, 9]


def test_m324_structure():
    G = named_group("m324")
    inv = G.marks["inverter"]
    rot = G.marks["rot"]
    swap = G.marks["swap"]
    # the block permutation part commutes with the inversion
    assert G.mul(inv, rot) == G.mul(rot, inv)
    assert G.mul(inv, swap) == G.mul(swap, inv)


def test_quaternion_frame_relations():
    for level in (0, 1, 2):
        act, x, y, R, c = sl2_with_quaternion_frame(level)
        n = 2 ** (level + 2)
        xp = x
        for _ in range(n - 1):
            xp = act.mul(xp, x)
        assert xp == act.identity
        assert act.mul(act.mul(y, y), act.mul(y, y)) == act.identity
        assert act.mul(act.mul(act.inv(y), x), y) == act.inv(x)
        assert act.mul(c, c) == act.inv(x)
        assert R.order == 2 ** (level + 3)


def test_unknown_specs():
    for bad in ("Q8", "GL(4,3)", "wr(S3)", "SL2(7)", ""):
        with pytest.raises(UnknownSpec):
            named_group(bad)


def test_direct_product_marks():
    G = named_group("x(S3,S3)")
    gens_a, gens_b = G.marks["factor_gens"]
    from solweights.groups import FiniteGroup

    A = FiniteGroup.generate(G.action, gens_a)
    B = FiniteGroup.generate(G.action, gens_b)
    assert A.order == B.order == 6
    # factors commute elementwise
    assert all(G.mul(a, b) == G.mul(b, a) for a in gens_a for b in gens_b)
