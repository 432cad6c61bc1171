"""Degree-1 and degree-2 mod-p cohomology certificates, p odd.

All computations go through restriction to an abelian or controlled Sylow
p-subgroup P:

* P cyclic: H^1(P) is one-dimensional, an automorphism t -> t^k acting by k,
  and the Bockstein identifies H^2 with H^1 as modules; the answer is the
  fixed space under the automorphisms induced by the normalizer.
* P elementary abelian of rank 2 or 3: H^2(P) decomposes as the Bockstein
  copy of the dual module plus the exterior square of the dual; the answer
  is the common fixed space under the induced action.
* Sylow C3 wr C3, normal: the wreath decomposition splits H^2 into base
  invariants, a middle term that vanishes by explicit cocycle count, and the
  quotient's H^2; the outer action is then applied to each summand.
* A three-term spectral argument and a direct-product additivity rule
  handle the remaining composite groups.

Conversion to k-coefficients (k algebraically closed, characteristic 2) uses
injectivity of restriction on the p-primary part together with the exponent
of H^2 of the Sylow subgroup, giving an elementary abelian p-part of order
p^dim.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import Inconclusive, UnsupportedSylow, WrongSylowShape
from .groups import (
    FiniteGroup,
    abelian_invariants,
    abelianization,
    normalizer,
    quotient_group,
    sylow_subgroup,
)
from .linalg import det, exterior_square, fixed_space, mat_vec, transpose

PATHS = (
    "cyclic-sylow-vanishing",
    "elementary-abelian-invariants",
    "wreath-nakaoka",
    "three-term-vanishing",
    "kunneth",
)


@dataclass
class H2Certificate:
    group: str
    prime: int
    dim: int
    path: str
    invariant_vectors: list[list[int]] = field(default_factory=list)
    basis_labels: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "prime": self.prime,
            "dim": self.dim,
            "path": self.path,
            "invariant_vectors": self.invariant_vectors,
            "basis_labels": self.basis_labels,
            "notes": self.notes,
        }


@dataclass
class KxCertificate:
    group: str
    parts: dict[int, H2Certificate]
    conclusion: str  # "0" or "C3" etc.

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "parts": {p: c.to_json() for p, c in self.parts.items()},
            "kx": self.conclusion,
        }


# ---------------------------------------------------------------------------
# degree one
# ---------------------------------------------------------------------------


def is_p_perfect(G: FiniteGroup, p: int) -> bool:
    """True iff the abelianization has trivial p-part."""
    ab = abelianization(G)
    return ab.order % p != 0


def h1_dim(G: FiniteGroup, p: int) -> int:
    """dim Hom(G, F_p) = p-rank of the abelianization."""
    inv = abelian_invariants(abelianization(G))
    return sum(1 for d in inv if d % p == 0)


# ---------------------------------------------------------------------------
# module data for an abelian Sylow subgroup
# ---------------------------------------------------------------------------


def elementary_basis(P: FiniteGroup) -> list[tuple]:
    """Greedy basis of an elementary abelian group in enumeration order."""
    basis: list[tuple] = []
    span = {P.identity}
    for e in P.elements:
        if e in span:
            continue
        basis.append(e)
        span = set(FiniteGroup.generate(P.action, basis, cap=P.order + 1).elements)
        if len(span) == P.order:
            break
    return basis


def _discrete_log_table(P: FiniteGroup, basis: list[tuple], p: int) -> dict[tuple, tuple]:
    """Map each element of P to its exponent vector over the basis."""
    table = {}
    rank = len(basis)

    def rec(i: int, acc, vec):
        if i == rank:
            table[acc] = tuple(vec)
            return
        current = acc
        for e in range(p):
            rec(i + 1, current, vec + [e])
            current = P.action.mul(current, basis[i])

    rec(0, P.identity, [])
    if len(table) != P.order:
        raise RuntimeError("basis does not span the elementary abelian group")
    return table


def action_matrices(G: FiniteGroup, P: FiniteGroup, p: int,
                    basis: list[tuple] | None = None,
                    acting: list[tuple] | None = None) -> tuple[list, list[tuple]]:
    """Matrices over GF(p) of the conjugation action on the elementary
    abelian subgroup P, for generators of N_G(P) (or a supplied list)."""
    basis = basis or elementary_basis(P)
    logs = _discrete_log_table(P, basis, p)
    if acting is None:
        N = normalizer(G, P)
        acting = list(N.generators)
    mats = []
    for g in acting:
        cols = []
        for b in basis:
            img = G.conj(b, g)
            vec = logs.get(img)
            if vec is None:
                raise RuntimeError("conjugation does not preserve the subgroup")
            cols.append(vec)
        # columns are images of basis vectors
        mats.append([[cols[j][i] for j in range(len(basis))] for i in range(len(basis))])
    return mats, basis


def _dual(p: int, m: list[list[int]]) -> list[list[int]]:
    """Action on the dual module: transpose of the inverse (here we only need
    fixed spaces, so the transpose of the matrix works equally; we use the
    honest contragredient for definiteness)."""
    n = len(m)
    # invert over GF(p)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] % p)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = pow(aug[c][c], -1, p)
        aug[c] = [(x * inv) % p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] % p:
                coeff = aug[i][c]
                aug[i] = [(aug[i][j] - coeff * aug[c][j]) % p for j in range(2 * n)]
    minv = [row[n:] for row in aug]
    return transpose(minv)


def h2_module_matrices(p: int, mats: list[list[list[int]]], rank: int):
    """Per-generator action on H^2(V) = (Bockstein copy of V*) + Lambda^2 V*."""
    blocks = []
    for m in mats:
        dual = _dual(p, m)
        lam = exterior_square(p, dual, rank)
        n1, n2 = rank, len(lam)
        block = [[0] * (n1 + n2) for _ in range(n1 + n2)]
        for i in range(n1):
            for j in range(n1):
                block[i][j] = dual[i][j]
        for i in range(n2):
            for j in range(n2):
                block[n1 + i][n1 + j] = lam[i][j]
        blocks.append(block)
    return blocks


def _h2_basis_labels(rank: int) -> list[str]:
    labels = [f"y{i + 1}" for i in range(rank)]
    labels += [f"x{i + 1}x{j + 1}" for i in range(rank) for j in range(i + 1, rank)]
    return labels


# ---------------------------------------------------------------------------
# the abelian-Sylow path
# ---------------------------------------------------------------------------


def h2_abelian_sylow(G: FiniteGroup, p: int, basis: list[tuple] | None = None,
                     name: str | None = None) -> H2Certificate:
    """H^2(G, F_p) for odd p when the Sylow p-subgroup is cyclic or
    elementary abelian of rank 2 or 3 (stable elements over an abelian
    Sylow subgroup)."""
    if p == 2:
        raise UnsupportedSylow("odd primes only")
    P = sylow_subgroup(G, p)
    gname = name or G.name or "group"
    if basis is None:
        marked = G.marks.get("v_basis")
        if marked and all(m in P.index for m in marked):
            basis = list(marked)
    if P.order == 1:
        return H2Certificate(gname, p, 0, "cyclic-sylow-vanishing",
                             notes=["trivial Sylow subgroup"])
    invs = abelian_invariants(P) if _is_abelian(P) else None
    if invs is not None and len(invs) == 1:
        # cyclic case: automorphism t -> t^k acts on H^1 and H^2 by k
        N = normalizer(G, P)
        gen = P.generators[0] if P.generators else P.identity
        n = P.order
        ks = set()
        for g in N.generators:
            img = G.conj(gen, g)
            k = _power_exponent(P, gen, img)
            ks.add(k % p)
        dim = 1 if all(k == 1 for k in ks) else 0
        cert = H2Certificate(gname, p, dim, "cyclic-sylow-vanishing",
                             notes=[f"normalizer power exponents mod {p}: {sorted(ks)}"])
        if dim:
            cert.invariant_vectors = [[1]]
            cert.basis_labels = ["y1"]
        return cert
    if invs is not None and all(d == p for d in invs) and len(invs) in (2, 3):
        rank = len(invs)
        mats, basis = action_matrices(G, P, p, basis=basis)
        blocks = h2_module_matrices(p, mats, rank)
        fixed = fixed_space(p, blocks, rank + rank * (rank - 1) // 2)
        cert = H2Certificate(gname, p, len(fixed), "elementary-abelian-invariants",
                             invariant_vectors=fixed,
                             basis_labels=_h2_basis_labels(rank))
        if rank == 2:
            dets = {det(p, m) for m in mats}
            in_sl = dets <= {1}
            cert.notes.append(f"determinant criterion: Aut_G(V) in SL(V) is {in_sl}")
            v_fixed = fixed_space(p, [_dual(p, m) for m in mats], rank)
            if not v_fixed and len(fixed) != (1 if in_sl else 0):
                raise RuntimeError("rank-2 fixed points disagree with determinant criterion")
        return cert
    raise UnsupportedSylow(
        f"Sylow {p}-subgroup of {gname} is neither cyclic nor elementary abelian of rank <= 3")


def _is_abelian(P: FiniteGroup) -> bool:
    mul = P.action.mul
    gens = P.generators
    return all(mul(a, b) == mul(b, a) for a in gens for b in gens)


def _power_exponent(P: FiniteGroup, gen: tuple, img: tuple) -> int:
    acc = P.identity
    for k in range(P.order):
        if acc == img:
            return k
        acc = P.action.mul(acc, gen)
    raise RuntimeError("image is not a power of the generator")


# ---------------------------------------------------------------------------
# the wreath path (Sylow C3 wr C3, normal)
# ---------------------------------------------------------------------------


def h2_wreath_c3(G: FiniteGroup, name: str | None = None) -> H2Certificate:
    """H^2(G, F_3) when the Sylow 3-subgroup W = C3 wr C3 is normal in G.

    The decomposition of H^2(W) has three summands: invariants of the base
    rotation on H^2(base), a middle term H^1(C3, H^1(base)) that is checked
    to vanish by exhaustive 1-cocycle enumeration, and H^2 of the rotation
    quotient.  Fixed points of the outer 2-group action are then taken;
    on the quotient summand an outer element acting on the rotation by
    t -> t^k acts by k.
    """
    p = 3
    gname = name or G.name or "group"
    W = sylow_subgroup(G, p)
    if W.order != 81:
        raise WrongSylowShape(f"Sylow 3-subgroup of {gname} has order {W.order}, need 81")
    for g in G.generators:
        for w in W.generators:
            if G.conj(w, g) not in W.index:
                raise WrongSylowShape("Sylow 3-subgroup is not normal")
    base = _wreath_base(G, W)
    if base is None:
        raise WrongSylowShape("no elementary abelian rank-3 base of index 3 found")
    basis = base.marks.get("v_basis") or elementary_basis(base)
    rho = next(e for e in W.elements if e not in base.index)
    # outer generator transversal: generators of G modulo W, as elements
    outer = [g for g in G.generators if g not in W.index]

    logs = _discrete_log_table(base, basis, p)
    acting = [rho] + outer
    mats, basis = action_matrices(G, base, p, basis=basis, acting=acting)
    blocks = h2_module_matrices(p, mats, rank=3)
    fixed_a = fixed_space(p, blocks, 6)

    # middle term: H^1(C3, H^1(base)) by cocycle enumeration over f(rho);
    # a 1-cocycle is determined by its value on rho, subject to the norm
    # condition, and coboundaries are the image of rho - 1
    rho_dual = _dual(p, mats[0])
    cocycles = 0
    coboundaries = set()
    vectors = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    for v in vectors:
        total = list(v)
        acc = list(v)
        for _ in range(2):
            acc = mat_vec(3, rho_dual, acc)
            total = [(total[i] + acc[i]) % 3 for i in range(3)]
        if all(t == 0 for t in total):
            cocycles += 1
    for v in vectors:
        img = mat_vec(3, rho_dual, list(v))
        coboundaries.add(tuple((img[i] - v[i]) % 3 for i in range(3)))
    if cocycles != len(coboundaries):
        raise Inconclusive("middle wreath term does not vanish")
    middle_dim = 0

    # quotient summand H^2(C3): outer element acts by its power exponent on
    # the rotation coset
    ks = []
    for g in outer:
        img = G.conj(rho, g)
        k = _rotation_exponent(W, base, rho, img)
        ks.append(k % 3)
    quotient_dim = 1 if all(k == 1 for k in ks) else 0

    dim = len(fixed_a) + middle_dim + quotient_dim
    cert = H2Certificate(gname, p, dim, "wreath-nakaoka",
                         invariant_vectors=fixed_a,
                         basis_labels=_h2_basis_labels(3))
    cert.notes.append(f"summands: base-invariants {len(fixed_a)}, middle {middle_dim}, "
                      f"quotient {quotient_dim}")
    cert.notes.append(f"middle-term cocycles {cocycles}, coboundaries {len(coboundaries)}")
    cert.notes.append(f"outer rotation exponents: {ks}")
    return cert


def _wreath_base(G: FiniteGroup, W: FiniteGroup) -> FiniteGroup | None:
    """The elementary abelian rank-3 subgroup of index 3 in W (the base)."""
    marks = G.marks.get("v_basis")
    if marks:
        base = FiniteGroup.generate(W.action, list(marks), cap=28)
        if base.order == 27:
            base.marks["v_basis"] = list(marks)
            return base
    # search: order-27 abelian subgroups of W of exponent 3
    seen = set()
    for e in W.elements:
        if W.element_order(e) != 3:
            continue
        members = [x for x in W.elements
                   if W.element_order(x) in (1, 3) and W.mul(x, e) == W.mul(e, x)]
        candidate = [x for x in members
                     if all(W.mul(x, y) == W.mul(y, x) for y in members)]
        if len(candidate) == 27:
            base = FiniteGroup.from_elements(W.action, candidate)
            if all(base.element_order(x) in (1, 3) for x in base.elements):
                return base
    return None


def _rotation_exponent(W: FiniteGroup, base: FiniteGroup, rho: tuple, img: tuple) -> int:
    """k with img in base * rho^k."""
    acc = W.identity
    for k in range(3):
        # test img * acc^-1 * ... : img in base . rho^k  <=>  img * (rho^k)^-1 in base
        if W.mul(img, W.inv(acc)) in base.index:
            return k
        acc = W.mul(acc, rho)
    raise RuntimeError("image does not lie in the rotation cosets")


# ---------------------------------------------------------------------------
# three-term vanishing and direct products
# ---------------------------------------------------------------------------


def three_term_vanishing(G: FiniteGroup, N: FiniteGroup, p: int,
                         name: str | None = None) -> H2Certificate:
    """Certify H^2(G, F_p) = 0 from a normal subgroup N when the three
    relevant spectral terms all vanish:

        H^0(G/N, H^2(N)) = 0,  H^1(G/N, H^1(N)) = 0,  H^2(G/N, F_p) = 0.

    Raises Inconclusive when some term is nonzero or not computable.
    """
    gname = name or G.name or "group"
    for g in G.generators:
        for n in N.generators:
            if G.conj(n, g) not in N.index:
                raise Inconclusive("given subgroup is not normal")
    h2n = h2_dim(N, p, name="base")
    if h2n.dim != 0:
        raise Inconclusive(f"H^2 of the base is nonzero (dim {h2n.dim})")
    if not is_p_perfect(N, p):
        raise Inconclusive("base is not p-perfect, H^1 term not certified zero")
    Q = quotient_group(G, N)
    h2q = h2_abelian_sylow(Q, p, name="quotient")  # depth-1 recursion only
    if h2q.dim != 0:
        raise Inconclusive(f"H^2 of the quotient is nonzero (dim {h2q.dim})")
    cert = H2Certificate(gname, p, 0, "three-term-vanishing")
    cert.notes.append("terms: H0(Q,H2(N))=0 (coefficients vanish), "
                      "H1(Q,H1(N))=0 (base p-perfect), H2(Q)=0")
    return cert


def h2_kunneth(G: FiniteGroup, p: int, name: str | None = None) -> H2Certificate:
    """H^2 of a marked direct product of p-perfect factors, by additivity."""
    gname = name or G.name or "group"
    factor_gens = G.marks.get("factor_gens")
    if not factor_gens:
        raise Inconclusive("no direct-product marks available")
    total = 0
    for gens in factor_gens:
        factor = FiniteGroup.generate(G.action, gens, cap=G.order + 1)
        if not is_p_perfect(factor, p):
            raise Inconclusive("factor is not p-perfect")
        total += h2_dim(factor, p, name="factor").dim
    cert = H2Certificate(gname, p, total, "kunneth")
    return cert


# ---------------------------------------------------------------------------
# dispatcher and k^x conversion
# ---------------------------------------------------------------------------


def h2_dim(G: FiniteGroup, p: int, name: str | None = None) -> H2Certificate:
    """H^2(G, F_p) by the first applicable path."""
    gname = name or G.name or "group"
    P = sylow_subgroup(G, p)
    if P.order == 1 or (_is_abelian(P) and (len(abelian_invariants(P)) == 1
                                            or (P.exponent() == p and P.order in (p * p, p ** 3)))):
        return h2_abelian_sylow(G, p, name=gname)
    if p == 3 and P.order == 81:
        try:
            return h2_wreath_c3(G, name=gname)
        except WrongSylowShape:
            pass
    base_gens = G.marks.get("base_gens")
    if base_gens:
        base = FiniteGroup.generate(G.action, list(base_gens), cap=G.order + 1)
        try:
            return three_term_vanishing(G, base, p, name=gname)
        except Inconclusive:
            pass
    if G.marks.get("factor_gens"):
        return h2_kunneth(G, p, name=gname)
    raise UnsupportedSylow(f"no implemented path for {gname} at p = {p}")


def _odd_primes(n: int) -> list[int]:
    out = []
    d = 3
    while n % 2 == 0:
        n //= 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 1:
        out.append(n)
    return out


def odd_h2_kx(G: FiniteGroup, name: str | None = None) -> KxCertificate:
    """The odd part of H^2(G, k^x) for k algebraically closed of
    characteristic 2, prime by prime.

    A nonzero F_p-dimension converts to a p-part of order p^dim: restriction
    to a Sylow p-subgroup is injective on the p-primary part (the index is
    coprime to p), and H^2 of a cyclic Sylow subgroup vanishes while an
    elementary abelian one has exponent p, bounding the exponent by p.
    """
    gname = name or G.name or "group"
    parts: dict[int, H2Certificate] = {}
    factors = []
    for p in _odd_primes(G.order):
        cert = h2_dim(G, p, name=gname)
        if cert.dim:
            P = sylow_subgroup(G, p)
            if _is_abelian(P) and P.exponent() == p:
                cert.notes.append(
                    f"k^x conversion: restriction to the Sylow {p}-subgroup is "
                    f"injective on the {p}-part (index {G.order // P.order} coprime "
                    f"to {p}); H^2 of the elementary abelian Sylow subgroup has "
                    f"exponent {p}, so the {p}-part is (C{p})^{cert.dim}")
            else:
                cert.notes.append(
                    "k^x conversion: exponent bound unavailable for this Sylow shape")
                raise UnsupportedSylow(
                    f"cannot bound the exponent of the {p}-part for {gname}")
            factors.append((p, cert.dim))
        parts[p] = cert
    if not factors:
        conclusion = "0"
    else:
        pieces = []
        for p, d in factors:
            pieces.extend([f"C{p}"] * d)
        conclusion = " x ".join(pieces)
    return KxCertificate(group=gname, parts=parts, conclusion=conclusion)
