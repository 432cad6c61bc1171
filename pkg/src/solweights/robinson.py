"""Counting 2-blocks of defect zero from group data.

The count is the GF(2) rank of N N^T, where N is indexed by the defect-zero
conjugacy classes (odd centralizer order) against representatives of the
S-S double cosets that meet the defect-zero elements and whose conjugate of
S intersects S trivially; the (i, j) entry is |y_i^G meet x_j S| mod 2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import CapExceeded
from .groups import (
    ConjClass,
    FiniteGroup,
    class_index_table,
    conjugacy_classes,
    odd_core,
    sylow_subgroup,
)
from .linalg import gf2_rank, gram_gf2
from .util import parallel_map


@dataclass
class RobinsonData:
    group: FiniteGroup
    sylow: FiniteGroup
    classes: list[ConjClass]                 # defect-zero classes, Y
    y0_size: int                             # |Y_0|, elements of defect zero
    coset_reps: list[tuple]                  # canonical double-coset reps
    coset_defect_zero: list[list[tuple]]     # defect-zero elements per coset
    x_reps: list[tuple]                      # chosen f(D) per coset, X
    raw_counts: list[list[int]]              # |y_i^G meet x_j S| before mod 2
    matrix_rows: list[int]                   # N over GF(2), bit-packed rows

    @property
    def n_shape(self) -> tuple[int, int]:
        return len(self.classes), len(self.x_reps)

    def gram_rank(self) -> int:
        return gf2_rank(gram_gf2(self.matrix_rows))

    def bound(self) -> int:
        return min(len(self.x_reps), len(self.classes))

    def to_json(self, name: str | None = None) -> dict:
        G = self.group
        return {
            "group": name or G.name or "group",
            "order": G.order,
            "sylow_order": self.sylow.order,
            "classes": [
                {"size": c.size, "centralizer_order": c.centralizer_order}
                for c in conjugacy_classes(G)
            ],
            "defect_zero": [
                {"size": c.size, "centralizer_order": c.centralizer_order}
                for c in self.classes
            ],
            "x_count": len(self.x_reps),
            "rank": self.gram_rank(),
            "count": self.gram_rank(),
            "bound": self.bound(),
        }


def defect_zero_classes(G: FiniteGroup) -> list[ConjClass]:
    """The conjugacy classes with odd centralizer order."""
    return [c for c in conjugacy_classes(G) if c.centralizer_order % 2 == 1]


def robinson_matrix(G: FiniteGroup, sylow: FiniteGroup | None = None,
                    rng: random.Random | None = None,
                    threads: int = 1) -> RobinsonData:
    """Assemble the defect-zero data and the GF(2) matrix N.

    The double-coset scan walks G once, marking visited elements in a bitmap.
    Kept cosets contain a defect-zero element and satisfy the trivial
    intersection condition (constant on each coset).  f(D) defaults to the
    first defect-zero element of D in enumeration order; passing an rng picks
    it uniformly instead.
    """
    S = sylow if sylow is not None else sylow_subgroup(G, 2)
    all_classes = conjugacy_classes(G)
    class_table = class_index_table(G)
    dz_classes = [c for c in all_classes if c.centralizer_order % 2 == 1]
    dz_class_ids = {ci: row for row, ci in enumerate(
        ci for ci, c in enumerate(all_classes) if c.centralizer_order % 2 == 1)}
    mul = G.action.mul
    inv = G.action.inv
    s_elements = S.elements
    s_index = S.index

    visited = bytearray(G.order)
    coset_reps: list[tuple] = []
    coset_dz: list[list[tuple]] = []
    y0_size = 0
    for i, x in enumerate(G.elements):
        if visited[i]:
            continue
        right = [mul(x, s) for s in s_elements]
        dz_members: list[tuple] = []
        for s1 in s_elements:
            for xs in right:
                y = mul(s1, xs)
                j = G.index[y]
                if not visited[j]:
                    visited[j] = 1
                    row = dz_class_ids.get(class_table[j])
                    if row is not None:
                        dz_members.append(y)
        y0_size += len(dz_members)
        if not dz_members:
            continue
        # trivial intersection is constant on the double coset
        xinv = inv(x)
        meet = 0
        for s in s_elements:
            if mul(mul(xinv, s), x) in s_index:
                meet += 1
                if meet > 1:
                    break
        if meet == 1:
            # keep in enumeration order of the defect-zero members
            dz_members.sort(key=G.index.__getitem__)
            coset_reps.append(x)
            coset_dz.append(dz_members)

    if rng is None:
        x_reps = [members[0] for members in coset_dz]
    else:
        x_reps = [rng.choice(members) for members in coset_dz]

    def column(xj: tuple) -> list[int]:
        counts = [0] * len(dz_classes)
        for s in s_elements:
            row = dz_class_ids.get(class_table[G.index[mul(xj, s)]])
            if row is not None:
                counts[row] += 1
        return counts

    columns = parallel_map(column, x_reps, threads)
    raw = [[columns[j][i] for j in range(len(x_reps))] for i in range(len(dz_classes))]
    rows = []
    for i in range(len(dz_classes)):
        bits = 0
        for j in range(len(x_reps)):
            if raw[i][j] & 1:
                bits |= 1 << j
        rows.append(bits)
    return RobinsonData(
        group=G, sylow=S, classes=dz_classes, y0_size=y0_size,
        coset_reps=coset_reps, coset_defect_zero=coset_dz,
        x_reps=x_reps, raw_counts=raw, matrix_rows=rows,
    )


def defect_zero_block_count(G: FiniteGroup, threads: int = 1) -> tuple[int, int]:
    """(rank of N N^T over GF(2), the bound min(|X|, |Y|))."""
    data = robinson_matrix(G, threads=threads)
    return data.gram_rank(), data.bound()


def two_complement_shortcut(G: FiniteGroup) -> int | None:
    """Defect-zero class count when G has a normal 2-complement, else None.

    The odd-order elements of such a group are exactly the normal complement,
    so it suffices that they form a subgroup of odd index equal to the full
    odd part.
    """
    odd_part = G.order
    while odd_part % 2 == 0:
        odd_part //= 2
    odd_elements = [e for e in G.elements if G.element_order(e) % 2 == 1]
    if len(odd_elements) != odd_part:
        return None
    # closure check: the odd elements must already form a subgroup
    try:
        complement = FiniteGroup.generate(G.action, odd_elements, cap=odd_part + 1)
    except CapExceeded:
        return None
    if complement.order != odd_part:
        return None
    return len(defect_zero_classes(G))


def defect_zero_lower_bound(G: FiniteGroup) -> int:
    """Number of defect-zero G-classes lying inside the odd core O_{2'}(G)."""
    core = odd_core(G)
    return sum(1 for c in defect_zero_classes(G) if c.rep in core.index)


def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    """Nontrivial cycle lengths of a permutation, sorted descending."""
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length > 1:
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


# ---------------------------------------------------------------------------
# choice invariance
# ---------------------------------------------------------------------------


@dataclass
class InvarianceReport:
    group: str
    baseline: int
    runs: int
    variations: list[str] = field(default_factory=list)
    ranks: list[int] = field(default_factory=list)

    @property
    def all_equal(self) -> bool:
        return all(r == self.baseline for r in self.ranks)


def choice_invariance(G: FiniteGroup, runs: int = 20, seed: int = 0,
                      name: str | None = None) -> InvarianceReport:
    """Re-run the rank computation under randomized choices.

    Three kinds of variation: re-picking the defect-zero representative
    f(D) in each kept double coset, replacing S by a random conjugate, and
    permuting the generator list (which changes the enumeration order and
    everything downstream).  The rank must never move.
    """
    rng = random.Random(seed)
    base = robinson_matrix(G)
    report = InvarianceReport(group=name or G.name or "group",
                              baseline=base.gram_rank(), runs=runs)
    heavy = G.order > 4000
    schedule = []
    n_gens = runs // 3 if not heavy else max(2, runs // 6)
    n_sylow = runs // 3 if not heavy else max(3, runs // 5)
    n_fpick = runs - n_gens - n_sylow
    schedule += ["fpick"] * n_fpick + ["sylow"] * n_sylow + ["gens"] * n_gens
    for kind in schedule:
        if kind == "fpick":
            data = robinson_matrix(G, sylow=base.sylow, rng=rng)
            report.ranks.append(data.gram_rank())
        elif kind == "sylow":
            g = rng.choice(G.elements)
            conj = [G.conj(s, g) for s in base.sylow.elements]
            S2 = FiniteGroup.from_elements(G.action, conj)
            data = robinson_matrix(G, sylow=S2)
            report.ranks.append(data.gram_rank())
        else:
            gens = list(G.generators)
            rng.shuffle(gens)
            extra = rng.choice(G.elements)
            G2 = FiniteGroup.generate(G.action, gens + [extra], cap=G.order + 1)
            data = robinson_matrix(G2)
            report.ranks.append(data.gram_rank())
        report.variations.append(kind)
    return report
