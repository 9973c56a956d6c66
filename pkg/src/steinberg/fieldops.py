"""Exact coefficient fields (Q and prime fields) and sparse linear algebra.

Vectors are dicts {index: nonzero coefficient}; subspaces are kept as row
echelon bases with pivots at the smallest nonzero index, which makes every
reduction and every choice of complement deterministic.
"""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    name = "QQ"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def of(n) -> Fraction:
        return Fraction(n)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def of(self, n) -> int:
        if isinstance(n, Fraction):
            den = n.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return n.numerator % self.p * pow(den, -1, self.p) % self.p
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def __repr__(self):
        return self.name


_GF_CACHE: dict[int, PrimeField] = {}
QQ = RationalField()


def field_of(char) -> RationalField | PrimeField:
    """char 0 or 'QQ' gives Q; a prime gives GF(p)."""
    if char in (0, "QQ", None):
        return QQ
    p = int(char)
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]


# -- sparse vectors ------------------------------------------------------------


def vec_iadd_scaled(field, acc: dict, v: dict, c) -> None:
    """acc += c * v in place, dropping zeros."""
    if c == field.zero:
        return
    for i, x in v.items():
        s = field.add(acc.get(i, field.zero), field.mul(c, x))
        if s == field.zero:
            acc.pop(i, None)
        else:
            acc[i] = s


def vec_scale(field, v: dict, c) -> dict:
    if c == field.zero:
        return {}
    return {i: field.mul(c, x) for i, x in v.items()}


def vec_sub(field, u: dict, v: dict) -> dict:
    out = dict(u)
    vec_iadd_scaled(field, out, v, field.neg(field.one))
    return out


def apply_op(field, op_cols, v: dict) -> dict:
    """Apply a sparse column-major operator to a sparse vector."""
    out: dict = {}
    for j, c in v.items():
        vec_iadd_scaled(field, out, op_cols[j], c)
    return out


class Echelon:
    """Row echelon basis of a subspace; pivots at least nonzero index."""

    def __init__(self, field):
        self.field = field
        self.rows: dict[int, dict] = {}  # pivot index -> row with that pivot = 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        f = self.field
        out = dict(v)
        while True:
            hit = None
            for i in out:
                if i in self.rows:
                    hit = i
                    break
            if hit is None:
                return out
            vec_iadd_scaled(f, out, self.rows[hit], f.neg(out[hit]))

    def insert(self, v: dict) -> bool:
        """Reduce v and add it to the basis; False if dependent."""
        f = self.field
        r = self.reduce(v)
        if not r:
            return False
        piv = min(r)
        inv = f.inv(r[piv])
        row = {i: f.mul(inv, c) for i, c in r.items()}
        # keep older rows fully reduced against the new pivot
        for p, old in list(self.rows.items()):
            if piv in old:
                vec_iadd_scaled(f, old, row, f.neg(old[piv]))
        self.rows[piv] = row
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def pivot_indices(self) -> list[int]:
        return sorted(self.rows)


def span_rank(field, vectors) -> int:
    ech = Echelon(field)
    for v in vectors:
        ech.insert(v)
    return ech.rank


def solve_dense(field, rows: list[list], rhs: list):
    """Solve A x = b for dense square-ish A; None when inconsistent/deficient.

    Used for small startup systems only.
    """
    f = field
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    nrows, ncols = len(m), len(m[0]) - 1
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if m[i][c] != f.zero:
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = f.inv(m[r][c])
        m[r] = [f.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != f.zero:
                coef = m[i][c]
                m[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    for i in range(r, nrows):
        if m[i][ncols] != f.zero:
            return None
    if len(pivots) < ncols:
        return None
    x = [f.zero] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][ncols]
    return x
