import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solweights.errors import CapExceeded, NotNormal
from solweights.fields import prime_field, tower_field
from solweights.groups import (
    FiniteGroup,
    MatrixAction,
    PermAction,
    abelian_invariants,
    abelianization,
    center,
    centralizer,
    class_index_table,
    conjugacy_classes,
    derived_subgroup,
    double_cosets,
    fingerprint,
    identify,
    induced_outer,
    isomorphic,
    normalizer,
    odd_core,
    quotient_group,
    subgroup_orbit,
    sylow_subgroup,
    trivial_intersection,
)
from solweights.zoo import (
    alternating_group,
    cyclic_group,
    named_group,
    symmetric_group,
)


# -- oracles -----------------------------------------------------------------


def count_sl2_matrices(p):
    """Brute force: all 2x2 matrices over GF(p) with determinant one."""
    return sum(1 for a in range(p) for b in range(p) for c in range(p)
               for d in range(p) if (a * d - b * c) % p == 1)


def partitions(n):
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


# -- closure and enumeration --------------------------------------------------


def test_closure_s3_from_transpositions():
    G = FiniteGroup.generate(PermAction(3), [(1, 0, 2), (0, 2, 1)])
    assert G.order == 6


def test_closure_quaternion_sixteen():
    # x, y with y^-1 x y = x^-1 at the second tower level give order 16
    G = named_group("quat(16)")
    assert G.order == 16


def test_closure_sl2_5_against_brute_force():
    oracle = count_sl2_matrices(5)
    assert oracle == 120
    assert named_group("SL2(5)").order == oracle


def test_closure_cap():
    with pytest.raises(CapExceeded):
        FiniteGroup.generate(PermAction(7), [(1, 2, 3, 4, 5, 6, 0)], cap=3)


def test_enumeration_deterministic():
    gens = [(1, 0, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2)]
    a = FiniteGroup.generate(PermAction(4), gens)
    b = FiniteGroup.generate(PermAction(4), gens)
    assert a.elements == b.elements


# -- conjugacy classes ---------------------------------------------------------


def test_classes_s3():
    G = symmetric_group(3)
    assert sorted(c.size for c in conjugacy_classes(G)) == [1, 2, 3]


def test_classes_a7_count():
    assert len(conjugacy_classes(alternating_group(7))) == 9


def test_classes_s7_equals_partitions():
    assert partitions(7) == 15
    assert len(conjugacy_classes(symmetric_group(7))) == 15


def test_class_sizes_sum_and_centralizer_product():
    for spec in ("S5", "A7", "wr(S3,C2)", "m108"):
        G = named_group(spec)
        classes = conjugacy_classes(G)
        assert sum(c.size for c in classes) == G.order
        for c in classes:
            assert c.size * c.centralizer_order == G.order


# -- centralizers --------------------------------------------------------------


def test_centralizer_identity_is_whole_group():
    G = symmetric_group(4)
    assert centralizer(G, G.identity).order == G.order


def test_centralizer_seven_cycle():
    # oracle: |A7| / #7-cycles-in-class; the 7-cycles split in two classes of
    # size 6!/2 = 360, so the centralizer has order 2520/360 = 7
    G = alternating_group(7)
    g = (1, 2, 3, 4, 5, 6, 0)
    assert 2520 // 360 == 7
    assert centralizer(G, g).order == 7


def test_centralizer_three_three_is_odd():
    G = alternating_group(7)
    g = (1, 2, 0, 4, 5, 3, 6)
    c = centralizer(G, g)
    assert c.order == 9
    assert c.order % 2 == 1


# -- subgroup orbits ------------------------------------------------------------


def test_orbit_of_normal_subgroup():
    G = symmetric_group(4)
    V = FiniteGroup.generate(G.action, [(1, 0, 3, 2), (2, 3, 0, 1)], cap=5)
    cert = subgroup_orbit(G.action, G.generators, V, ambient_order=G.order)
    assert cert.orbit_size == 1
    assert cert.normalizer_order == G.order


def test_orbit_q8_in_sl2_5():
    sl2 = named_group("SL2(5)")
    Q = FiniteGroup.generate(sl2.action, [(2, 0, 0, 3), (0, 4, 1, 0)], cap=9)
    assert Q.order == 8
    cert = subgroup_orbit(sl2.action, sl2.generators, Q, ambient_order=120)
    assert (cert.orbit_size, cert.normalizer_order) == (5, 24)
    # oracle: exhaustive normalizer scan
    assert normalizer(sl2, Q).order == 24


def test_orbit_stabilizer_product():
    G = symmetric_group(5)
    P = FiniteGroup.generate(G.action, [(1, 0, 2, 3, 4)], cap=3)
    cert = subgroup_orbit(G.action, G.generators, P, ambient_order=G.order)
    assert cert.orbit_size * cert.normalizer_order == G.order


# -- Sylow subgroups -------------------------------------------------------------


def test_sylow_s7_at_two():
    # 7! = 5040 = 2^4 * 315
    assert 5040 == 2 ** 4 * 315
    assert sylow_subgroup(symmetric_group(7), 2).order == 16


def test_sylow_a7_at_three_elementary():
    P = sylow_subgroup(alternating_group(7), 3)
    assert P.order == 9
    assert abelian_invariants(P) == (3, 3)


def test_sylow_gl42_at_two():
    # |GL_4(2)| = 20160 = 2^6 * 315
    assert 20160 == 2 ** 6 * 315
    assert sylow_subgroup(named_group("GL(4,2)"), 2).order == 64


# -- double cosets ----------------------------------------------------------------


def test_double_coset_whole_group():
    G = symmetric_group(4)
    dcs = double_cosets(G, G)
    assert len(dcs) == 1 and dcs[0][1] == G.order


def test_double_cosets_partition():
    G = symmetric_group(5)
    S = sylow_subgroup(G, 2)
    dcs = double_cosets(G, S)
    assert sum(size for _, size in dcs) == G.order


def test_trivial_intersection_constant_on_cosets():
    rng = random.Random(19)
    G = symmetric_group(5)
    S = sylow_subgroup(G, 2)
    for rep, _ in double_cosets(G, S):
        base = trivial_intersection(G, S, rep)
        for _ in range(3):
            s1 = rng.choice(S.elements)
            s2 = rng.choice(S.elements)
            other = G.mul(G.mul(s1, rep), s2)
            assert trivial_intersection(G, S, other) == base


# -- quotients ----------------------------------------------------------------------


def test_quotient_by_self_trivial():
    G = symmetric_group(4)
    assert quotient_group(G, G).order == 1


def test_quotient_not_normal():
    G = symmetric_group(3)
    H = FiniteGroup.generate(G.action, [(1, 0, 2)], cap=3)
    with pytest.raises(NotNormal):
        quotient_group(G, H)


def test_quotient_class_count_central():
    G = named_group("quat(8)")
    Z = center(G)
    Q = quotient_group(G, Z)
    assert Q.order == G.order // Z.order
    assert len(conjugacy_classes(Q)) <= len(conjugacy_classes(G))


# -- fingerprints and isomorphism -----------------------------------------------------


def test_fingerprint_separates_c6_s3():
    assert fingerprint(cyclic_group(6)) != fingerprint(symmetric_group(3))


def test_fingerprint_generalized_dihedral():
    G = named_group("dih(C3xC3)")
    fp = fingerprint(G)
    assert fp.center_order == 1
    assert fp.abelian_invariants == (2,)
    assert fp.class_sizes == (1, 2, 2, 2, 2, 9)


def test_isomorphic_small():
    assert isomorphic(named_group("wr(C2,C2)"), named_group("D8"))
    assert not isomorphic(named_group("quat(8)"), named_group("D8"))
    assert identify(named_group("quat(8)"), named_group("D8")) is None


@settings(max_examples=20, deadline=None)
@given(st.randoms(use_true_random=False))
def test_fingerprint_relabeling_invariance(rnd):
    """Conjugating all generators by a random permutation fixes the print."""
    G = named_group("wr(S3,C2)")
    n = G.action.n
    relabel = list(range(n))
    rnd.shuffle(relabel)
    relabel = tuple(relabel)
    inv = G.action.inv(relabel)
    gens = [G.action.mul(G.action.mul(inv, g), relabel) for g in G.generators]
    H = FiniteGroup.generate(G.action, gens)
    assert fingerprint(H) == fingerprint(G)


# -- induced outer automorphisms --------------------------------------------------------


def test_induced_outer_abelian_trivial():
    P = cyclic_group(6)
    out = induced_outer(P.generators, P)
    assert out.order == 1


def test_induced_outer_q8_in_sl2_5():
    sl2 = named_group("SL2(5)")
    Q = FiniteGroup.generate(sl2.action, [(2, 0, 0, 3), (0, 4, 1, 0)], cap=9)
    N = normalizer(sl2, Q)
    out = induced_outer(N.generators, Q, action=sl2.action)
    # |N| = 24, image in Aut(Q8) has order 12, Inn has order 4
    assert N.order == 24
    assert out.order == 3


# -- structural helpers -------------------------------------------------------------------


def test_derived_and_abelianization():
    G = symmetric_group(4)
    D = derived_subgroup(G)
    assert D.order == 12
    assert abelian_invariants(abelianization(G)) == (2,)


def test_odd_core():
    assert odd_core(named_group("S3")).order == 3
    assert odd_core(named_group("A7")).order == 1
    assert odd_core(named_group("m108")).order == 27


def test_class_index_table_consistent():
    G = named_group("S5")
    table = class_index_table(G)
    classes = conjugacy_classes(G)
    for ci, c in enumerate(classes):
        assert table[G.index[c.rep]] == ci
    from collections import Counter

    counts = Counter(table)
    for ci, c in enumerate(classes):
        assert counts[ci] == c.size
