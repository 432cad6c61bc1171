"""Exact computation engine for finite groups given by generators.

Elements are plain hashable tuples; an *action* object supplies the
multiplication, inversion and identity for one element kind:

* ``PermAction(n)`` -- permutations of 0..n-1 as image tuples,
* ``MatrixAction(field)`` -- 2x2 matrices over a finite field as flat
  entry tuples (row major), determinant constraint recorded,
* ``CentralTripleAction(field)`` -- triples of 2x2 matrices together with a
  permutation of three coordinates, stored modulo the central sign
  identification (m1, m2, m3, pi) ~ (-m1, -m2, -m3, pi); of the two
  representatives the lexicographically smaller tuple is kept.

Groups cache their full element enumeration (breadth-first closure from the
identity, deterministic in the generator order) and structural data derived
from it.  Groups are immutable after construction; every operation here is a
pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import (
    CapExceeded,
    DoesNotNormalize,
    ElementNotInGroup,
    NotNormal,
    OrbitCapExceeded,
    SubgroupNotContained,
)
from .fields import FiniteField

DEFAULT_CAP = 5_000_000

Element = tuple


# ---------------------------------------------------------------------------
# element actions
# ---------------------------------------------------------------------------


class PermAction:
    """Permutations of {0..n-1}; composition is (a*b)(i) = a[b[i]]."""

    kind = "perm"

    def __init__(self, n: int):
        self.n = n
        self.identity: Element = tuple(range(n))

    def mul(self, a: Element, b: Element) -> Element:
        return tuple(map(a.__getitem__, b))

    def inv(self, a: Element) -> Element:
        out = [0] * self.n
        for i, ai in enumerate(a):
            out[ai] = i
        return tuple(out)

    def __repr__(self):
        return f"PermAction({self.n})"

    def __eq__(self, other):
        return isinstance(other, PermAction) and other.n == self.n

    def __hash__(self):
        return hash(("perm", self.n))


class MatrixAction:
    """2x2 matrices over a finite field, flat tuples (a, b, c, d)."""

    kind = "matrix"

    def __init__(self, field: FiniteField, det: int | None = 1):
        self.field = field
        self.det = det  # recorded determinant constraint, not enforced per op
        self.identity: Element = (1, 0, 0, 1)

    def mul(self, x: Element, y: Element) -> Element:
        f = self.field
        a, b, c, d = x
        e, g, h, i = y
        return (
            f.add(f.mul(a, e), f.mul(b, h)),
            f.add(f.mul(a, g), f.mul(b, i)),
            f.add(f.mul(c, e), f.mul(d, h)),
            f.add(f.mul(c, g), f.mul(d, i)),
        )

    def inv(self, x: Element) -> Element:
        f = self.field
        a, b, c, d = x
        dt = f.sub(f.mul(a, d), f.mul(b, c))
        di = f.inv(dt)
        return (
            f.mul(d, di),
            f.mul(f.neg(b), di),
            f.mul(f.neg(c), di),
            f.mul(a, di),
        )

    def determinant(self, x: Element) -> int:
        f = self.field
        a, b, c, d = x
        return f.sub(f.mul(a, d), f.mul(b, c))

    def __repr__(self):
        return f"MatrixAction({self.field!r})"

    def __eq__(self, other):
        return isinstance(other, MatrixAction) and other.field is self.field

    def __hash__(self):
        return hash(("matrix", id(self.field)))


class CentralTripleAction:
    """Triples of 2x2 matrices with a coordinate permutation, modulo signs.

    Elements are ((m1), (m2), (m3), pi) with each m a flat 2x2 tuple over the
    field and pi a permutation tuple of (0, 1, 2).  The product permutes the
    second factor's matrix triple by the first factor's pi before multiplying
    componentwise; pi parts compose as functions.  Both central
    representatives are formed and the lexicographically smaller is stored.
    """

    kind = "central-triple"

    def __init__(self, field: FiniteField):
        self.field = field
        self.mat = MatrixAction(field)
        one = self.mat.identity
        self.identity: Element = (one, one, one, (0, 1, 2))

    def canonical(self, m1: Element, m2: Element, m3: Element, pi: Element) -> Element:
        neg = self.field.neg
        alt = (
            tuple(neg(v) for v in m1),
            tuple(neg(v) for v in m2),
            tuple(neg(v) for v in m3),
            pi,
        )
        cand = (m1, m2, m3, pi)
        return cand if cand <= alt else alt

    def make(self, m1: Element, m2: Element, m3: Element, pi: Element = (0, 1, 2)) -> Element:
        return self.canonical(m1, m2, m3, pi)

    def mul(self, x: Element, y: Element) -> Element:
        a1, a2, a3, p = x
        b = (y[0], y[1], y[2])
        q = y[3]
        mm = self.mat.mul
        # permuted[p[i]] = b[i]
        permuted = [None, None, None]
        permuted[p[0]] = b[0]
        permuted[p[1]] = b[1]
        permuted[p[2]] = b[2]
        return self.canonical(
            mm(a1, permuted[0]),
            mm(a2, permuted[1]),
            mm(a3, permuted[2]),
            (p[q[0]], p[q[1]], p[q[2]]),
        )

    def inv(self, x: Element) -> Element:
        a1, a2, a3, p = x
        q = [0, 0, 0]
        for i, pi in enumerate(p):
            q[pi] = i
        mi = self.mat.inv
        inv_ms = (mi(a1), mi(a2), mi(a3))
        # ((t, p))^-1 = ((t^-1)^{p^-1}, p^-1): slot q[i] receives inv(t_i)
        out = [None, None, None]
        out[q[0]] = inv_ms[0]
        out[q[1]] = inv_ms[1]
        out[q[2]] = inv_ms[2]
        return self.canonical(out[0], out[1], out[2], tuple(q))

    def __repr__(self):
        return f"CentralTripleAction({self.field!r})"

    def __eq__(self, other):
        return isinstance(other, CentralTripleAction) and other.field is self.field

    def __hash__(self):
        return hash(("central-triple", id(self.field)))


Action = PermAction | MatrixAction | CentralTripleAction


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjClass:
    rep: Element
    size: int
    centralizer_order: int


class FiniteGroup:
    """A finite group with full element enumeration.

    Enumeration order is the breadth-first closure order from the identity,
    deterministic given the generator order.
    """

    def __init__(self, action: Action, generators: Sequence[Element],
                 elements: list[Element], index: dict[Element, int],
                 name: str | None = None, marks: dict | None = None):
        self.action = action
        self.generators = tuple(generators)
        self.elements = elements
        self.index = index
        self.order = len(elements)
        self.name = name
        self.marks = marks or {}
        self._classes: list[ConjClass] | None = None
        self._center: FiniteGroup | None = None
        self._derived: FiniteGroup | None = None
        self._sylow: dict[int, FiniteGroup] = {}

    # -- construction -------------------------------------------------------

    @classmethod
    def generate(cls, action: Action, generators: Sequence[Element],
                 cap: int | None = None, name: str | None = None,
                 marks: dict | None = None) -> "FiniteGroup":
        """Closure of the generators under the action, breadth first."""
        cap = DEFAULT_CAP if cap is None else cap
        identity = action.identity
        elements = [identity]
        index = {identity: 0}
        mul = action.mul
        gens = [g for g in generators if g != identity]
        pos = 0
        while pos < len(elements):
            current = elements[pos]
            pos += 1
            for g in gens:
                nxt = mul(current, g)
                if nxt not in index:
                    index[nxt] = len(elements)
                    elements.append(nxt)
                    if len(elements) > cap:
                        raise CapExceeded(
                            f"closure exceeded cap {cap}"
                            + (f" while generating {name}" if name else "")
                        )
        return cls(action, generators, elements, index, name=name, marks=marks)

    @classmethod
    def from_elements(cls, action: Action, elements: Iterable[Element],
                      name: str | None = None, marks: dict | None = None) -> "FiniteGroup":
        """Group from a closed element set, with a greedy small generating set.

        The element list is re-enumerated in closure order of the chosen
        generators so enumeration conventions match generated groups.
        """
        element_set = set(elements)
        gens: list[Element] = []
        closed = {action.identity}
        for e in sorted(element_set):
            if e in closed:
                continue
            gens.append(e)
            group = cls.generate(action, gens, cap=len(element_set) + 1)
            closed = set(group.elements)
        if closed != element_set:
            raise ValueError("element set is not closed under the group operations")
        return cls.generate(action, gens, cap=len(element_set) + 1, name=name, marks=marks)

    # -- basic queries -------------------------------------------------------

    @property
    def identity(self) -> Element:
        return self.action.identity

    def __contains__(self, e: Element) -> bool:
        return e in self.index

    def __len__(self) -> int:
        return self.order

    def __repr__(self):
        label = self.name or "group"
        return f"<{label} of order {self.order}>"

    def mul(self, a: Element, b: Element) -> Element:
        return self.action.mul(a, b)

    def inv(self, a: Element) -> Element:
        return self.action.inv(a)

    def conj(self, x: Element, g: Element) -> Element:
        """x^g = g^-1 x g."""
        mul = self.action.mul
        return mul(mul(self.action.inv(g), x), g)

    def element_order(self, a: Element) -> int:
        order = 1
        acc = a
        identity = self.action.identity
        mul = self.action.mul
        while acc != identity:
            acc = mul(acc, a)
            order += 1
        return order

    def power(self, a: Element, e: int) -> Element:
        if e < 0:
            return self.power(self.action.inv(a), -e)
        acc = self.action.identity
        base = a
        while e:
            if e & 1:
                acc = self.action.mul(acc, base)
            base = self.action.mul(base, base)
            e >>= 1
        return acc

    def is_subgroup_of(self, other: "FiniteGroup") -> bool:
        return all(e in other.index for e in self.elements)

    def subgroup(self, generators: Sequence[Element], name: str | None = None) -> "FiniteGroup":
        for g in generators:
            if g not in self.index:
                raise ElementNotInGroup(f"generator not in {self!r}")
        return FiniteGroup.generate(self.action, generators, cap=self.order + 1, name=name)

    def exponent(self) -> int:
        from math import lcm
        result = 1
        for e in self.elements:
            result = lcm(result, self.element_order(e))
        return result


# ---------------------------------------------------------------------------
# conjugacy classes, centralizers, normalizers
# ---------------------------------------------------------------------------


def conjugacy_classes(G: FiniteGroup) -> list[ConjClass]:
    """Conjugacy classes by orbit of representatives under generator conjugation."""
    if G._classes is not None:
        return G._classes
    mul = G.action.mul
    gen_pairs = [(G.action.inv(g), g) for g in G.generators]
    seen = [False] * G.order
    classes: list[ConjClass] = []
    for start, e in enumerate(G.elements):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [e]
        frontier = [e]
        while frontier:
            new_frontier = []
            for x in frontier:
                for ginv, g in gen_pairs:
                    y = mul(mul(ginv, x), g)
                    yi = G.index[y]
                    if not seen[yi]:
                        seen[yi] = True
                        orbit.append(y)
                        new_frontier.append(y)
            frontier = new_frontier
        size = len(orbit)
        if G.order % size:
            raise RuntimeError("class size does not divide group order")
        classes.append(ConjClass(rep=e, size=size, centralizer_order=G.order // size))
    G._classes = classes
    return classes


def class_index_table(G: FiniteGroup) -> list[int]:
    """Map element index -> conjugacy class index."""
    table = [-1] * G.order
    mul = G.action.mul
    gen_pairs = [(G.action.inv(g), g) for g in G.generators]
    for ci, cls in enumerate(conjugacy_classes(G)):
        frontier = [cls.rep]
        table[G.index[cls.rep]] = ci
        while frontier:
            new_frontier = []
            for x in frontier:
                for ginv, g in gen_pairs:
                    y = mul(mul(ginv, x), g)
                    yi = G.index[y]
                    if table[yi] < 0:
                        table[yi] = ci
                        new_frontier.append(y)
            frontier = new_frontier
    return table


def centralizer(G: FiniteGroup, g: Element) -> FiniteGroup:
    """The subgroup {h in G : hg = gh}."""
    if g not in G.index:
        raise ElementNotInGroup("element not in group")
    mul = G.action.mul
    members = [h for h in G.elements if mul(h, g) == mul(g, h)]
    return FiniteGroup.from_elements(G.action, members)


def centralizer_of_subgroup(G: FiniteGroup, P: FiniteGroup) -> FiniteGroup:
    mul = G.action.mul
    gens = [g for g in P.generators] or [P.identity]
    members = [h for h in G.elements if all(mul(h, g) == mul(g, h) for g in gens)]
    return FiniteGroup.from_elements(G.action, members)


def _normalizes(G: FiniteGroup, g: Element, P: FiniteGroup) -> bool:
    mul = G.action.mul
    ginv = G.action.inv(g)
    for x in P.generators:
        if mul(mul(ginv, x), g) not in P.index:
            return False
    return True


def normalizer(G: FiniteGroup, P: FiniteGroup) -> FiniteGroup:
    """N_G(P) by direct scan of G (P need not be a subgroup of G)."""
    members = [h for h in G.elements if _normalizes(G, h, P)]
    return FiniteGroup.from_elements(G.action, members)


def center(G: FiniteGroup) -> FiniteGroup:
    if G._center is None:
        mul = G.action.mul
        gens = G.generators or (G.identity,)
        members = [h for h in G.elements if all(mul(h, g) == mul(g, h) for g in gens)]
        G._center = FiniteGroup.from_elements(G.action, members)
    return G._center


# ---------------------------------------------------------------------------
# subgroup conjugation orbits
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitCertificate:
    orbit_size: int
    normalizer_order: int | None


def subgroup_orbit(action: Action, ambient_generators: Sequence[Element],
                   P: FiniteGroup, cap: int = 200_000,
                   ambient_order: int | None = None) -> OrbitCertificate:
    """Orbit of P under conjugation by the ambient generators.

    Conjugates are keyed by their sorted element tuple, so distinct subgroups
    are never merged.  When the ambient order is known the normalizer order
    follows by orbit-stabilizer.
    """
    mul = action.mul
    inv = action.inv
    start = tuple(sorted(P.elements))
    seen = {start}
    frontier = [start]
    total_elements = len(start)
    while frontier:
        new_frontier = []
        for sub in frontier:
            for g in ambient_generators:
                ginv = inv(g)
                conj = tuple(sorted(mul(mul(ginv, x), g) for x in sub))
                if conj not in seen:
                    seen.add(conj)
                    new_frontier.append(conj)
                    total_elements += len(conj)
                    if len(seen) > cap:
                        raise OrbitCapExceeded(f"subgroup orbit exceeded cap {cap}")
        frontier = new_frontier
    norm_order = None
    if ambient_order is not None:
        if ambient_order % len(seen):
            raise RuntimeError("orbit size does not divide ambient order")
        norm_order = ambient_order // len(seen)
    return OrbitCertificate(orbit_size=len(seen), normalizer_order=norm_order)


# ---------------------------------------------------------------------------
# Sylow subgroups
# ---------------------------------------------------------------------------


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def sylow_subgroup(G: FiniteGroup, p: int) -> FiniteGroup:
    """A Sylow p-subgroup by the normalizer extension loop.

    Starting from the trivial group, repeatedly pass to the normalizer and
    extend by the p-part of its first element whose p-power lands inside.
    Ties are broken by enumeration order, so the result is deterministic.
    """
    cached = G._sylow.get(p)
    if cached is not None:
        return cached
    target = _p_part(G.order, p)
    current = G.subgroup([])
    mul = G.action.mul
    while current.order < target:
        extended = False
        for h in G.elements:
            if h in current.index:
                continue
            if not _normalizes(G, h, current):
                continue
            o = G.element_order(h)
            m = o // _p_part(o, p)
            x = G.power(h, m)  # the p-part of h
            if x in current.index:
                continue
            current = G.subgroup(list(current.generators) + [x])
            extended = True
            break
        if not extended:
            raise RuntimeError("Sylow extension loop stalled")
    G._sylow[p] = current
    return current


# ---------------------------------------------------------------------------
# double cosets
# ---------------------------------------------------------------------------


def double_cosets(G: FiniteGroup, S: FiniteGroup) -> list[tuple[Element, int]]:
    """Partition of G into S-S double cosets.

    Representatives are first elements in enumeration order; along with each
    representative the coset size is returned.
    """
    if not S.is_subgroup_of(G):
        raise SubgroupNotContained("S is not a subgroup of G")
    mul = G.action.mul
    visited = bytearray(G.order)
    out = []
    s_elements = S.elements
    for i, x in enumerate(G.elements):
        if visited[i]:
            continue
        right = [mul(x, s) for s in s_elements]
        size = 0
        for s1 in s_elements:
            for xs in right:
                j = G.index[mul(s1, xs)]
                if not visited[j]:
                    visited[j] = 1
                    size += 1
        out.append((x, size))
    return out


def trivial_intersection(G: FiniteGroup, S: FiniteGroup, x: Element) -> bool:
    """Whether S meets its conjugate S^x trivially."""
    mul = G.action.mul
    xinv = G.action.inv(x)
    count = 0
    for s in S.elements:
        if mul(mul(xinv, s), x) in S.index:
            count += 1
            if count > 1:
                return False
    return True


# ---------------------------------------------------------------------------
# quotients
# ---------------------------------------------------------------------------


def quotient_group(G: FiniteGroup, N: FiniteGroup) -> FiniteGroup:
    """G/N as a permutation group on the cosets of N.

    Coset labels are canonical representatives: the first element of each
    coset in G's enumeration order.  The label list is stored in
    ``marks["coset_reps"]``.
    """
    if not N.is_subgroup_of(G):
        raise SubgroupNotContained("N is not a subgroup of G")
    for g in G.generators:
        if not _normalizes(G, g, N):
            raise NotNormal("N is not normal in G")
    mul = G.action.mul
    coset_of = [-1] * G.order
    reps: list[Element] = []
    for i, e in enumerate(G.elements):
        if coset_of[i] >= 0:
            continue
        cid = len(reps)
        reps.append(e)
        for n in N.elements:
            coset_of[G.index[mul(n, e)]] = cid
    n_cosets = len(reps)
    if n_cosets * N.order != G.order:
        raise RuntimeError("coset decomposition inconsistent")
    action = PermAction(n_cosets)
    gen_perms = []
    for g in G.generators:
        gen_perms.append(tuple(coset_of[G.index[mul(r, g)]] for r in reps))
    Q = FiniteGroup.generate(action, gen_perms, cap=n_cosets + 1,
                             marks={"coset_reps": reps})
    if Q.order != n_cosets:
        raise RuntimeError("quotient order mismatch")
    return Q


def derived_subgroup(G: FiniteGroup) -> FiniteGroup:
    if G._derived is not None:
        return G._derived
    mul = G.action.mul
    inv = G.action.inv
    comms = set()
    for a in G.generators:
        for b in G.generators:
            comms.add(mul(mul(inv(a), inv(b)), mul(a, b)))
    current = FiniteGroup.generate(G.action, sorted(comms), cap=G.order + 1)
    # normal closure under generator conjugation
    while True:
        extra = []
        for g in G.generators:
            ginv = inv(g)
            for x in current.generators:
                y = mul(mul(ginv, x), g)
                if y not in current.index:
                    extra.append(y)
        if not extra:
            break
        current = FiniteGroup.generate(G.action, list(current.generators) + extra,
                                       cap=G.order + 1)
    G._derived = current
    return current


def abelianization(G: FiniteGroup) -> FiniteGroup:
    return quotient_group(G, derived_subgroup(G))


def abelian_invariants(A: FiniteGroup) -> tuple[int, ...]:
    """Invariant factors (d1 >= d2 >= ..., each dividing the previous) of an
    abelian group, by repeatedly splitting off an element of maximal order."""
    factors = []
    current = A
    while current.order > 1:
        best = None
        best_order = 0
        for e in current.elements:
            o = current.element_order(e)
            if o > best_order:
                best, best_order = e, o
        factors.append(best_order)
        current = quotient_group(current, current.subgroup([best]))
    return tuple(factors)


def largest_normal_subgroup(G: FiniteGroup, order_ok: Callable[[int], bool]) -> FiniteGroup:
    """Largest normal subgroup generated by classes whose normal closure has
    admissible order (used with 'odd' for the 2'-core and '2-power' for O_2)."""
    gens: list[Element] = []
    for cls in conjugacy_classes(G):
        closure_gens = gens + [cls.rep]
        candidate = _normal_closure(G, closure_gens)
        if order_ok(candidate.order):
            gens = list(candidate.generators)
    return _normal_closure(G, gens)


def _normal_closure(G: FiniteGroup, seed: Sequence[Element]) -> FiniteGroup:
    mul = G.action.mul
    inv = G.action.inv
    current = FiniteGroup.generate(G.action, list(seed), cap=G.order + 1)
    while True:
        extra = []
        for g in G.generators:
            ginv = inv(g)
            for x in current.generators:
                y = mul(mul(ginv, x), g)
                if y not in current.index:
                    extra.append(y)
        if not extra:
            break
        current = FiniteGroup.generate(G.action, list(current.generators) + extra,
                                       cap=G.order + 1)
    return current


def odd_core(G: FiniteGroup) -> FiniteGroup:
    """O_{2'}(G), the largest normal odd-order subgroup."""
    return largest_normal_subgroup(G, lambda n: n % 2 == 1)


def two_core(G: FiniteGroup) -> FiniteGroup:
    """O_2(G), the largest normal 2-subgroup."""
    return largest_normal_subgroup(G, lambda n: n == _p_part(n, 2))


def p_core(G: FiniteGroup, p: int) -> FiniteGroup:
    return largest_normal_subgroup(G, lambda n: n == _p_part(n, p))


# ---------------------------------------------------------------------------
# fingerprints and isomorphism identification
# ---------------------------------------------------------------------------


ISO_SEARCH_LIMIT = 400


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    class_sizes: tuple[int, ...]
    center_order: int
    derived_orders: tuple[int, ...]
    abelian_invariants: tuple[int, ...]
    exponent: int
    sylow_orders: tuple[tuple[int, int], ...]


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def fingerprint(G: FiniteGroup) -> GroupFingerprint:
    """Isomorphism-invariant record of structural data."""
    sizes = tuple(sorted(c.size for c in conjugacy_classes(G)))
    derived_orders = []
    current = G
    while True:
        nxt = derived_subgroup(current)
        derived_orders.append(nxt.order)
        if nxt.order == current.order or nxt.order == 1:
            break
        current = nxt
    ab = abelian_invariants(abelianization(G))
    sylows = tuple((p, _p_part(G.order, p)) for p in _prime_factors(G.order))
    return GroupFingerprint(
        order=G.order,
        class_sizes=sizes,
        center_order=center(G).order,
        derived_orders=tuple(derived_orders),
        abelian_invariants=ab,
        exponent=G.exponent(),
        sylow_orders=sylows,
    )


def _greedy_generators(G: FiniteGroup) -> list[Element]:
    gens: list[Element] = []
    closed = {G.identity}
    for e in G.elements:
        if e in closed:
            continue
        gens.append(e)
        closed = set(FiniteGroup.generate(G.action, gens, cap=G.order + 1).elements)
        if len(closed) == G.order:
            break
    return gens


def _extend_iso(G: FiniteGroup, H: FiniteGroup, gens: list[Element],
                images: list[Element]) -> bool:
    """Check the partial map gens -> images extends to an isomorphism."""
    mapping = {G.identity: H.identity}
    frontier = [G.identity]
    mulg = G.action.mul
    mulh = H.action.mul
    while frontier:
        new_frontier = []
        for x in frontier:
            fx = mapping[x]
            for g, fg in zip(gens, images):
                y = mulg(x, g)
                fy = mulh(fx, fg)
                known = mapping.get(y)
                if known is None:
                    mapping[y] = fy
                    new_frontier.append(y)
                elif known != fy:
                    return False
        frontier = new_frontier
    if len(mapping) != G.order:
        return False
    # injectivity: a well-defined surjection between equal orders is bijective
    return len(set(mapping.values())) == H.order


def isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Exhaustive generator-mapping isomorphism search (orders <= 400).

    The first generator image only ranges over class representatives of H,
    since composing with an inner automorphism is free.
    """
    if G.order != H.order:
        return False
    if G.order > ISO_SEARCH_LIMIT:
        raise CapExceeded(f"isomorphism search limited to order {ISO_SEARCH_LIMIT}")
    if fingerprint(G) != fingerprint(H):
        return False
    gens = _greedy_generators(G)
    if not gens:
        return True
    g_orders = [G.element_order(g) for g in gens]
    g_class_sizes = []
    table_g = class_index_table(G)
    classes_g = conjugacy_classes(G)
    for g in gens:
        g_class_sizes.append(classes_g[table_g[G.index[g]]].size)
    classes_h = conjugacy_classes(H)
    table_h = class_index_table(H)
    h_orders = [H.element_order(e) for e in H.elements]

    def candidates(k: int) -> list[Element]:
        if k == 0:
            return [c.rep for c in classes_h
                    if H.element_order(c.rep) == g_orders[0] and c.size == g_class_sizes[0]]
        return [e for i, e in enumerate(H.elements)
                if h_orders[i] == g_orders[k]
                and classes_h[table_h[i]].size == g_class_sizes[k]]

    images: list[Element] = []

    def backtrack(k: int) -> bool:
        if k == len(gens):
            return _extend_iso(G, H, gens, images)
        for cand in candidates(k):
            images.append(cand)
            # quick partial check: orders of short words must match
            ok = True
            if k:
                word = G.action.mul(gens[k - 1], gens[k])
                fword = H.action.mul(images[k - 1], images[k])
                ok = G.element_order(word) == H.element_order(fword)
            if ok and backtrack(k + 1):
                return True
            images.pop()
        return False

    return backtrack(0)


def identify(G: FiniteGroup, reference: FiniteGroup) -> str | None:
    """Two-tier identification against a reference group.

    Returns "isomorphism-verified" when the exhaustive search succeeds
    (order <= 400), "fingerprint-verified" when only fingerprints match
    (the documented weaker guarantee), or None on fingerprint mismatch.
    """
    if fingerprint(G) != fingerprint(reference):
        return None
    if G.order <= ISO_SEARCH_LIMIT:
        return "isomorphism-verified" if isomorphic(G, reference) else None
    return "fingerprint-verified"


# ---------------------------------------------------------------------------
# induced outer automorphism groups
# ---------------------------------------------------------------------------


def conjugation_permutation(N_action: Action, g: Element, P: FiniteGroup) -> Element:
    """The permutation x -> x^g of P's element indices."""
    mul = N_action.mul
    ginv = N_action.inv(g)
    images = []
    for x in P.elements:
        y = mul(mul(ginv, x), g)
        yi = P.index.get(y)
        if yi is None:
            raise DoesNotNormalize("element does not normalize the subgroup")
        images.append(yi)
    return tuple(images)


def induced_outer(N_generators: Sequence[Element], P: FiniteGroup,
                  action: Action | None = None) -> FiniteGroup:
    """Image of <N_generators> in Aut(P), modulo Inn(P), as a quotient group.

    The automorphism group is never enumerated.  Cosets of Inn(P) inside the
    image are explored by orbit, each coset keyed by the minimum of its
    element tuples; the result is the regular permutation action of the outer
    group on those cosets.
    """
    action = action or P.action
    perm_action = PermAction(P.order)
    gen_perms = [conjugation_permutation(action, g, P) for g in N_generators]
    inner_gens = [conjugation_permutation(action, g, P) for g in P.generators]
    inner = FiniteGroup.generate(perm_action, inner_gens, cap=P.order ** 2)
    inner_elements = inner.elements
    pmul = perm_action.mul

    def coset_key(phi: Element) -> Element:
        return min(pmul(psi, phi) for psi in inner_elements)

    start = coset_key(perm_action.identity)
    keys = {start: 0}
    reps = [start]
    frontier = [start]
    while frontier:
        new_frontier = []
        for rep in frontier:
            for gp in gen_perms:
                key = coset_key(pmul(rep, gp))
                if key not in keys:
                    keys[key] = len(reps)
                    reps.append(key)
                    new_frontier.append(key)
        frontier = new_frontier
    n = len(reps)
    out_action = PermAction(n)
    out_gens = []
    for gp in gen_perms:
        out_gens.append(tuple(keys[coset_key(pmul(rep, gp))] for rep in reps))
    Q = FiniteGroup.generate(out_action, out_gens, cap=n + 1)
    if Q.order != n:
        raise RuntimeError("outer quotient action is not regular")
    return Q
