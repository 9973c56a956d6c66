"""Character-level algebra of B-representations.

A B-representation enters every computation here only through its multiset of
torus weights, so the module works with canonical weight multisets and a small
expression language naming the standard constructions:

    atoms       b, n, g, g/b, F(a,b)        (F(a) in the SL2 case)
    operators   *  (tensor),  +  (direct sum),  wedge^j(.),  sym^k(.),
                dual(.),  tw(a,b)(.)         (twist by a character)

ASCII input also accepts the unicode aliases ``⊗`` and ``⊕``.  Parsing is
whitespace-insensitive and the printer round-trips through the parser.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .weights import A2, RootDatum, Weight


class WeightMultiset:
    """Finite multiset of weights; canonical (sorted) and immutable."""

    __slots__ = ("items", "_hash")

    def __init__(self, data):
        if isinstance(data, dict):
            pairs = data.items()
        else:
            acc: dict[Weight, int] = {}
            for w in data:
                acc[w] = acc.get(w, 0) + 1
            pairs = acc.items()
        items = tuple(sorted((w, m) for w, m in pairs if m != 0))
        if any(m < 0 for _, m in items):
            raise ValueError("negative multiplicity")
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "_hash", hash(items))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("WeightMultiset is immutable")

    def __eq__(self, other):
        return isinstance(other, WeightMultiset) and self.items == other.items

    def __hash__(self):
        return self._hash

    def __iter__(self):
        return iter(self.items)

    def __repr__(self):
        inner = ", ".join(f"{w}:{m}" for w, m in self.items)
        return "{" + inner + "}"

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.items)

    def multiplicity(self, mu: Weight) -> int:
        for w, m in self.items:
            if w == mu:
                return m
        return 0

    def weights_list(self) -> list[Weight]:
        """The multiset expanded to a sorted list of length ``dimension``."""
        out: list[Weight] = []
        for w, m in self.items:
            out.extend([w] * m)
        return out

    # -- constructions -----------------------------------------------------

    def add(self, other: "WeightMultiset") -> "WeightMultiset":
        acc = dict(self.items)
        for w, m in other.items:
            acc[w] = acc.get(w, 0) + m
        return WeightMultiset(acc)

    def tensor(self, other: "WeightMultiset") -> "WeightMultiset":
        acc: dict[Weight, int] = {}
        for w1, m1 in self.items:
            for w2, m2 in other.items:
                key = tuple(a + b for a, b in zip(w1, w2))
                acc[key] = acc.get(key, 0) + m1 * m2
        return WeightMultiset(acc)

    def wedge(self, j: int) -> "WeightMultiset":
        if j < 0:
            raise ValueError("wedge power must be nonnegative")
        basis = self.weights_list()
        acc: dict[Weight, int] = {}
        for combo in itertools.combinations(basis, j):
            key = _wsum(combo, self._rank())
            acc[key] = acc.get(key, 0) + 1
        return WeightMultiset(acc)

    def sym(self, k: int) -> "WeightMultiset":
        if k < 0:
            raise ValueError("sym power must be nonnegative")
        basis = self.weights_list()
        acc: dict[Weight, int] = {}
        for combo in itertools.combinations_with_replacement(basis_indices(basis), k):
            key = _wsum([basis[i] for i in combo], self._rank())
            acc[key] = acc.get(key, 0) + 1
        return WeightMultiset(acc)

    def dual(self) -> "WeightMultiset":
        return WeightMultiset({tuple(-x for x in w): m for w, m in self.items})

    def twist(self, lam: Weight) -> "WeightMultiset":
        return WeightMultiset({tuple(a + b for a, b in zip(w, lam)): m for w, m in self.items})

    def _rank(self) -> int:
        return len(self.items[0][0]) if self.items else 0


def basis_indices(basis):
    # combinations_with_replacement over indices, not weights: repeated equal
    # weights are distinct basis slots
    return range(len(basis))


def _wsum(weights, rank: int) -> Weight:
    if not weights:
        return (0,) * rank
    return tuple(sum(w[i] for w in weights) for i in range(len(weights[0])))


# -- expression trees ---------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    name: str  # 'b', 'n', 'g', 'g/b'


@dataclass(frozen=True)
class FAtom:
    highest: Weight


@dataclass(frozen=True)
class Tensor:
    left: "RepExpr"
    right: "RepExpr"


@dataclass(frozen=True)
class Sum:
    left: "RepExpr"
    right: "RepExpr"


@dataclass(frozen=True)
class Wedge:
    power: int
    arg: "RepExpr"


@dataclass(frozen=True)
class SymPow:
    power: int
    arg: "RepExpr"


@dataclass(frozen=True)
class Dual:
    arg: "RepExpr"


@dataclass(frozen=True)
class Twist:
    shift: Weight
    arg: "RepExpr"


RepExpr = Atom | FAtom | Tensor | Sum | Wedge | SymPow | Dual | Twist


class RepParseError(ValueError):
    """Malformed rep expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_ALIASES = {"⊗": "*", "⊕": "+"}


class _Parser:
    def __init__(self, text: str):
        self.text = "".join(_TOKEN_ALIASES.get(c, c) for c in text)
        self.pos = 0

    def error(self, msg: str):
        raise RepParseError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, s: str):
        self.skip_ws()
        if not self.text.startswith(s, self.pos):
            self.error(f"expected {s!r}")
        self.pos += len(s)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def int_tuple(self) -> tuple[int, ...]:
        self.eat("(")
        vals = [self.integer()]
        while self.peek() == ",":
            self.eat(",")
            vals.append(self.integer())
        self.eat(")")
        return tuple(vals)

    def parse(self) -> RepExpr:
        e = self.sum_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error(f"trailing input {self.text[self.pos:]!r}")
        return e

    def sum_expr(self) -> RepExpr:
        e = self.tensor_expr()
        while self.peek() == "+":
            self.eat("+")
            e = Sum(e, self.tensor_expr())
        return e

    def tensor_expr(self) -> RepExpr:
        e = self.factor()
        while self.peek() == "*":
            self.eat("*")
            e = Tensor(e, self.factor())
        return e

    def factor(self) -> RepExpr:
        self.skip_ws()
        rest = self.text[self.pos:]
        if rest.startswith("("):
            self.eat("(")
            e = self.sum_expr()
            self.eat(")")
            return e
        for kw, cls in (("wedge^", Wedge), ("sym^", SymPow)):
            if rest.startswith(kw):
                self.eat(kw)
                power = self.integer()
                self.eat("(")
                arg = self.sum_expr()
                self.eat(")")
                return cls(power, arg)
        for kw in ("twist", "tw"):
            if rest.startswith(kw):
                self.eat(kw)
                shift = self.int_tuple()
                self.eat("(")
                arg = self.sum_expr()
                self.eat(")")
                return Twist(shift, arg)
        if rest.startswith("dual"):
            self.eat("dual")
            self.eat("(")
            arg = self.sum_expr()
            self.eat(")")
            return Dual(arg)
        if rest.startswith("F"):
            self.eat("F")
            return FAtom(self.int_tuple())
        if rest.startswith("g/b"):
            self.eat("g/b")
            return Atom("g/b")
        for name in ("b", "n", "g"):
            if rest.startswith(name):
                self.eat(name)
                return Atom(name)
        self.error("expected an atom or operator")


def parse_rep(text: str) -> RepExpr:
    return _Parser(text).parse()


def print_rep(expr: RepExpr) -> str:
    """Canonical printer; ``parse_rep(print_rep(e)) == e``."""

    def go(e: RepExpr, level: int) -> str:
        # level 0 = sum context, 1 = tensor context
        if isinstance(e, Atom):
            return e.name
        if isinstance(e, FAtom):
            return "F(" + ",".join(str(c) for c in e.highest) + ")"
        if isinstance(e, Sum):
            s = go(e.left, 0) + " + " + go(e.right, 1)
            return "(" + s + ")" if level >= 1 else s
        if isinstance(e, Tensor):
            s = go(e.left, 1) + "*" + go(e.right, 2)
            return "(" + s + ")" if level >= 2 else s
        if isinstance(e, Wedge):
            return f"wedge^{e.power}(" + go(e.arg, 0) + ")"
        if isinstance(e, SymPow):
            return f"sym^{e.power}(" + go(e.arg, 0) + ")"
        if isinstance(e, Dual):
            return "dual(" + go(e.arg, 0) + ")"
        if isinstance(e, Twist):
            return "tw(" + ",".join(str(c) for c in e.shift) + ")(" + go(e.arg, 0) + ")"
        raise TypeError(f"not a rep expression: {e!r}")

    return go(expr, 0)


# -- atoms and evaluation ------------------------------------------------------


def _atom_multiset(name: str, datum: RootDatum) -> WeightMultiset:
    zero = (0,) * datum.rank
    neg_roots = []
    shifted = [datum.simple_roots[0]]
    if datum.rank == 2:
        shifted = [datum.simple_roots[0], datum.simple_roots[1], datum.rho]
    neg_roots = [tuple(-x for x in r) for r in shifted]
    if name == "n":
        return WeightMultiset(neg_roots)
    if name == "b":
        return WeightMultiset(neg_roots + [zero] * datum.rank)
    if name == "g/b":
        return WeightMultiset(shifted)
    if name == "g":
        return WeightMultiset(neg_roots + shifted + [zero] * datum.rank)
    raise RepParseError(f"unknown atom {name!r}", 0)


def _kostant_partition(v: Weight, datum: RootDatum) -> int:
    """Number of ways to write v as a nonnegative sum of positive roots."""
    if datum.rank == 1:
        (a,) = v
        return 1 if a >= 0 and a % 2 == 0 else 0
    # v = x*alpha + y*beta; each rho in the sum trades one alpha and one beta
    v1, v2 = v
    if (v1 + 2 * v2) % 3 != 0:
        return 0
    x = (2 * v1 + v2) // 3
    y = (v1 + 2 * v2) // 3
    if (2 * v1 + v2) % 3 != 0 or x < 0 or y < 0:
        return 0
    return min(x, y) + 1


def irreducible_multiset(highest: Weight, datum: RootDatum) -> WeightMultiset:
    """Weight multiset of V(highest) via the Kostant multiplicity formula."""
    if len(highest) != datum.rank:
        raise ValueError(f"weight {highest} has wrong rank for this datum")
    if not datum.dominant(highest):
        raise ValueError(f"F({highest}): highest weight must be dominant")
    acc: dict[Weight, int] = {}
    # candidate weights lie under highest in the root order
    lam_rho = datum.add(highest, datum.rho)
    candidates = _weights_under(highest, datum)
    for mu in candidates:
        mult = 0
        mu_rho = datum.add(mu, datum.rho)
        for w in datum.weyl:
            diff = datum.sub(w.act(lam_rho), mu_rho)
            mult += (-1) ** w.length * _kostant_partition(diff, datum)
        if mult:
            acc[mu] = mult
    return WeightMultiset(acc)


def _weights_under(highest: Weight, datum: RootDatum) -> list[Weight]:
    if datum.rank == 1:
        (a,) = highest
        return [(a - 2 * k,) for k in range(a + 1)]
    out = []
    a, b = highest
    # mu = highest - x*alpha - y*beta with x, y >= 0 bounded by the hull
    for x in range(a + b + 1):
        for y in range(a + b + 1):
            out.append((a - 2 * x + y, b + x - 2 * y))
    return out


def build_rep(expr: RepExpr | str, datum: RootDatum = A2) -> WeightMultiset:
    """Evaluate a rep expression to its weight multiset."""
    if isinstance(expr, str):
        expr = parse_rep(expr)
    if isinstance(expr, Atom):
        return _atom_multiset(expr.name, datum)
    if isinstance(expr, FAtom):
        return irreducible_multiset(expr.highest, datum)
    if isinstance(expr, Tensor):
        return build_rep(expr.left, datum).tensor(build_rep(expr.right, datum))
    if isinstance(expr, Sum):
        return build_rep(expr.left, datum).add(build_rep(expr.right, datum))
    if isinstance(expr, Wedge):
        return build_rep(expr.arg, datum).wedge(expr.power)
    if isinstance(expr, SymPow):
        return build_rep(expr.arg, datum).sym(expr.power)
    if isinstance(expr, Dual):
        return build_rep(expr.arg, datum).dual()
    if isinstance(expr, Twist):
        if len(expr.shift) != datum.rank:
            raise RepParseError(f"twist {expr.shift} has wrong rank", 0)
        return build_rep(expr.arg, datum).twist(expr.shift)
    raise TypeError(f"not a rep expression: {expr!r}")


def weight_multiplicity(rep: WeightMultiset, mu: Weight) -> int:
    return rep.multiplicity(mu)


def binomial_dim_checks(rep: WeightMultiset, j: int, k: int) -> tuple[int, int]:
    """(expected wedge dim, expected sym dim) for sanity assertions."""
    d = rep.dimension
    return comb(d, j), comb(d + k - 1, k)
