"""Finite fields: prime fields GF(p) and the quadratic tower over GF(5).

Tower levels are GF(5^(2^k)).  Level 0 is GF(5) with designated generator
omega_0 = 2 (multiplicative order 4); level k+1 adjoins z with z^2 = omega_k,
and omega_{k+1} = z then has order 2^(k+3).  Elements are encoded as integers
in [0, size): a level-(k+1) element a + b*z is encoded as
enc(a) + enc(b) * 5^(2^k).  Subfield elements keep their encoding under this
convention, so embedding up the tower is the identity on encodings.

Fields with at most TABLE_MAX elements get full add/mul/inv tables; larger
levels fall back to recursive pair arithmetic with memoised product caches
(adequate here, since only small matrix groups live over the big levels).
"""

from __future__ import annotations

TABLE_MAX = 1024

_PRIME_CACHE: dict[int, "FiniteField"] = {}
_TOWER_CACHE: dict[int, "FiniteField"] = {}


class FiniteField:
    """A finite field with integer-encoded elements.

    Either a prime field GF(p) or a level of the quadratic tower over GF(5).
    Use :func:`prime_field` / :func:`tower_field` to construct; instances are
    cached and compared by identity.
    """

    def __init__(self, char: int, level: int, base: "FiniteField | None"):
        self.char = char
        self.level = level
        self.base = base
        if base is None:
            self.size = char
        else:
            self.size = base.size * base.size
        self.half = None if base is None else base.size
        # designated generator of the 2-power torsion: order 2^(level+2) at
        # characteristic 5
        if char == 5:
            self.omega = 2 if base is None else base.size  # z = (0, 1)
        else:
            self.omega = None
        self._tables_ready = False
        self._mul_cache: dict[tuple[int, int], int] = {}
        self._inv_cache: dict[int, int] = {}
        if self.size <= TABLE_MAX:
            self._build_tables()
        if base is not None:
            self._check_irreducible()
        self._verify_axioms()

    # -- construction helpers ----------------------------------------------

    def _build_tables(self):
        n = self.size
        add = [[0] * n for _ in range(n)]
        mul = [[0] * n for _ in range(n)]
        for a in range(n):
            row_a, row_m = add[a], mul[a]
            for b in range(a, n):
                s = self._add_slow(a, b)
                p = self._mul_slow(a, b)
                row_a[b] = s
                add[b][a] = s
                row_m[b] = p
                mul[b][a] = p
        self.add_table = add
        self.mul_table = mul
        self.neg_table = [self._neg_slow(a) for a in range(n)]
        inv = [0] * n
        for a in range(1, n):
            for b in range(1, n):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        self.inv_table = inv
        self._tables_ready = True

    def _check_irreducible(self):
        # z^2 - omega_base irreducible over the base iff omega_base is a
        # non-square there; equivalent to omega^((q-1)/2) != 1
        base = self.base
        w = base.omega
        e = (base.size - 1) // 2
        if base.pow(w, e) == 1:
            raise ValueError("defining element is a square; tower step not irreducible")

    def _verify_axioms(self):
        # seeded associativity/distributivity spot checks; inverses are
        # checked exhaustively on table-backed fields
        import random

        rng = random.Random(self.size)
        for _ in range(24):
            a = rng.randrange(self.size)
            b = rng.randrange(self.size)
            c = rng.randrange(self.size)
            if self.mul(a, self.mul(b, c)) != self.mul(self.mul(a, b), c):
                raise AssertionError("multiplication is not associative")
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                raise AssertionError("multiplication does not distribute")
        if self._tables_ready:
            for a in range(1, self.size):
                if self.mul(a, self.inv_table[a]) != 1:
                    raise AssertionError("inverse table is wrong")

    # -- arithmetic ----------------------------------------------------------

    def _split(self, a: int) -> tuple[int, int]:
        return a % self.half, a // self.half

    def _join(self, lo: int, hi: int) -> int:
        return lo + hi * self.half

    def _add_slow(self, a: int, b: int) -> int:
        if self.base is None:
            return (a + b) % self.char
        base = self.base
        a0, a1 = self._split(a)
        b0, b1 = self._split(b)
        return self._join(base.add(a0, b0), base.add(a1, b1))

    def _neg_slow(self, a: int) -> int:
        if self.base is None:
            return (-a) % self.char
        base = self.base
        a0, a1 = self._split(a)
        return self._join(base.neg(a0), base.neg(a1))

    def _mul_slow(self, a: int, b: int) -> int:
        if self.base is None:
            return (a * b) % self.char
        # (a0 + a1 z)(b0 + b1 z) = (a0 b0 + a1 b1 w) + (a0 b1 + a1 b0) z
        base = self.base
        a0, a1 = self._split(a)
        b0, b1 = self._split(b)
        w = base.omega
        lo = base.add(base.mul(a0, b0), base.mul(base.mul(a1, b1), w))
        hi = base.add(base.mul(a0, b1), base.mul(a1, b0))
        return self._join(lo, hi)

    def add(self, a: int, b: int) -> int:
        if self._tables_ready:
            return self.add_table[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self._tables_ready:
            return self.neg_table[a]
        return self._neg_slow(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._tables_ready:
            return self.mul_table[a][b]
        key = (a, b) if a <= b else (b, a)
        cached = self._mul_cache.get(key)
        if cached is None:
            cached = self._mul_slow(a, b)
            self._mul_cache[key] = cached
        return cached

    def pow(self, a: int, e: int) -> int:
        result = 1
        acc = a
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self._tables_ready:
            return self.inv_table[a]
        cached = self._inv_cache.get(a)
        if cached is None:
            cached = self.pow(a, self.size - 2)
            self._inv_cache[a] = cached
        return cached

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("order of zero field element")
        order = 1
        acc = a
        while acc != 1:
            acc = self.mul(acc, a)
            order += 1
        return order

    def embed(self, a: int) -> int:
        """Embed a base-field encoding into this field (identity by design)."""
        return a

    def __repr__(self):
        if self.base is None:
            return f"GF({self.char})"
        return f"GF({self.char}^{2 ** self.level})"


def prime_field(p: int) -> FiniteField:
    """GF(p) for a prime p (2, 3, 5 are the ones used here)."""
    field = _PRIME_CACHE.get(p)
    if field is None:
        field = FiniteField(p, 0, None)
        _PRIME_CACHE[p] = field
    return field


def tower_field(level: int) -> FiniteField:
    """GF(5^(2^level)) in the fixed quadratic tower."""
    if level < 0:
        raise ValueError("tower level must be non-negative")
    field = _TOWER_CACHE.get(level)
    if field is None:
        if level == 0:
            field = prime_field(5)
        else:
            field = FiniteField(5, level, tower_field(level - 1))
        _TOWER_CACHE[level] = field
    return field


def field_tower(level: int) -> tuple[FiniteField, FiniteField, int]:
    """Return (F_q, F_{q^2}, omega) for q = 5^(2^level), level <= 3.

    omega is the designated element of F_q of multiplicative order
    2^(level+2); F_{q^2} extends F_q by z with z^2 = omega.
    """
    if not 0 <= level <= 3:
        raise ValueError("field tower is provided for levels 0..3 only")
    fq = tower_field(level)
    fq2 = tower_field(level + 1)
    return fq, fq2, fq.omega
