"""Root datum, Weyl group and dot action for SL3 (and the rank-1 SL2 case).

Conventions
-----------
Weights are integer tuples in the fundamental-weight basis.  For SL3 the
basis is (w1, w2) = (L1, -L3), where L1, L2, L3 are the diagonal characters
of the torus labelled so that L1 is the *bottom right* entry and L3 the top
left.  Then

    rho = (1, 1),   alpha = L1 - L2 = (2, -1),   beta = L2 - L3 = (-1, 2),

the positive roots are {alpha, beta, rho} (rho = alpha + beta), and pairing a
weight (a, b) with the simple coroots gives a and b respectively.  Dominant
means a >= 0 and b >= 0.  For SL2 a weight is a 1-tuple (a,) with rho = (1,)
and alpha = (2,).

The dot action is w . lam = w(lam + rho) - rho.  For a prime l, the closed
bottom alcove is

    Cbar(l) = { lam : 0 <= <lam + rho, kappa_vee> <= l  for all kappa > 0 }

and the decidable ("BWB") locus is the union of its dot translates.

Everything here is immutable and uses exact integer arithmetic only.
"""

from __future__ import annotations

from dataclasses import dataclass

Weight = tuple[int, ...]


@dataclass(frozen=True)
class WeylElement:
    """An element of the Weyl group, stored with its length and action matrix.

    The matrix acts on column vectors of fundamental-weight coordinates:
    (w.matrix @ lam) is the ordinary (undotted) action.
    """

    name: str
    length: int
    matrix: tuple[tuple[int, ...], ...]

    def act(self, lam: Weight) -> Weight:
        return tuple(sum(row[j] * lam[j] for j in range(len(lam))) for row in self.matrix)

    def __repr__(self) -> str:
        return f"W({self.name})"


def _mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


class RootDatum:
    """Rank-1 or rank-2 (type A) root datum with its full Weyl group.

    Attributes:
        rank: 1 for SL2, 2 for SL3.
        rho: the half-sum of positive roots, in fundamental-weight coordinates.
        simple_roots: (alpha,) or (alpha, beta).
        positive_coroots: pairing vectors; <lam, c> = dot(lam, c).
        weyl: all Weyl elements, sorted by (length, name).
    """

    def __init__(self, rank: int):
        if rank not in (1, 2):
            raise ValueError(f"unsupported rank {rank}")
        self.rank = rank
        if rank == 1:
            self.rho: Weight = (1,)
            self.simple_roots: tuple[Weight, ...] = ((2,),)
            self.positive_coroots: tuple[Weight, ...] = ((1,),)
            refl = (WeylElement("sa", 1, ((-1,),)),)
        else:
            self.rho = (1, 1)
            self.simple_roots = ((2, -1), (-1, 2))
            # alpha_vee, beta_vee, rho_vee = alpha_vee + beta_vee
            self.positive_coroots = ((1, 0), (0, 1), (1, 1))
            refl = (
                WeylElement("sa", 1, ((-1, 0), (1, 1))),
                WeylElement("sb", 1, ((1, 1), (0, -1))),
            )
        self.weyl = self._generate(refl)
        self._by_name = {w.name: w for w in self.weyl}
        self._check_tables()

    def _generate(self, refl: tuple[WeylElement, ...]) -> tuple[WeylElement, ...]:
        n = self.rank
        ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        seen = {ident: ("e", 0)}
        frontier = [ident]
        while frontier:
            nxt = []
            for mat in frontier:
                name, length = seen[mat]
                for s in refl:
                    m2 = _mat_mul(mat, s.matrix)
                    if m2 not in seen:
                        # reduced word grows on the right
                        nm = s.name if name == "e" else name + "." + s.name
                        seen[m2] = (nm, length + 1)
                        nxt.append(m2)
            frontier = nxt
        elems = [WeylElement(name, length, mat) for mat, (name, length) in seen.items()]
        elems.sort(key=lambda w: (w.length, w.name))
        return tuple(elems)

    def _check_tables(self) -> None:
        # coordinate identities promised by the stored root table
        for root, coroot in zip(self.simple_roots, self.positive_coroots):
            assert self.pairing(root, coroot) == 2
            assert self.pairing(self.rho, coroot) == 1
        if self.rank == 1:
            assert self.simple_roots[0] == (2,)
        else:
            alpha, beta = self.simple_roots
            assert self.add(alpha, beta) == self.rho
        lengths = sorted(w.length for w in self.weyl)
        assert lengths == ([0, 1] if self.rank == 1 else [0, 1, 1, 2, 2, 3])

    # -- basic weight arithmetic ------------------------------------------

    @staticmethod
    def pairing(lam: Weight, coroot: Weight) -> int:
        return sum(x * c for x, c in zip(lam, coroot))

    @staticmethod
    def add(a: Weight, b: Weight) -> Weight:
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def sub(a: Weight, b: Weight) -> Weight:
        return tuple(x - y for x, y in zip(a, b))

    @staticmethod
    def neg(a: Weight) -> Weight:
        return tuple(-x for x in a)

    def dominant(self, lam: Weight) -> bool:
        return all(x >= 0 for x in lam)

    # -- Weyl group --------------------------------------------------------

    def element(self, name: str) -> WeylElement:
        return self._by_name[name]

    @property
    def identity(self) -> WeylElement:
        return self._by_name["e"]

    @property
    def w0(self) -> WeylElement:
        return max(self.weyl, key=lambda w: w.length)

    def compose(self, w1: WeylElement, w2: WeylElement) -> WeylElement:
        mat = _mat_mul(w1.matrix, w2.matrix)
        for w in self.weyl:
            if w.matrix == mat:
                return w
        raise AssertionError("Weyl group not closed under composition")

    def inverse(self, w: WeylElement) -> WeylElement:
        for v in self.weyl:
            if _mat_mul(w.matrix, v.matrix) == self.identity.matrix:
                return v
        raise AssertionError("Weyl element without inverse")

    def dot_action(self, w: WeylElement, lam: Weight) -> Weight:
        """The rho-shifted action w . lam = w(lam + rho) - rho."""
        return self.sub(w.act(self.add(lam, self.rho)), self.rho)

    # -- singularity and the bounded alcove region --------------------------

    def singular(self, mu: Weight) -> bool:
        """True iff mu + rho lies on some wall <. , kappa_vee> = 0."""
        shifted = self.add(mu, self.rho)
        return any(self.pairing(shifted, c) == 0 for c in self.positive_coroots)

    def in_cbar(self, lam: Weight, l: int) -> bool:
        """Membership in the closed bottom alcove Cbar(l)."""
        shifted = self.add(lam, self.rho)
        return all(0 <= self.pairing(shifted, c) <= l for c in self.positive_coroots)

    def in_c0(self, lam: Weight, l: int) -> bool:
        return self.dominant(lam) and self.in_cbar(lam, l)

    def in_bwb_locus(self, mu: Weight, l: int) -> bool:
        """Membership in the union of dot translates of Cbar(l)."""
        return any(self.in_cbar(self.dot_action(self.inverse(w), mu), l) for w in self.weyl)

    def locate(self, mu: Weight, l: int):
        """Place mu relative to the dot-Weyl chambers and the bound l.

        Returns Singular() when mu + rho lies on a wall; otherwise the unique
        (w, lam) with lam dominant and w . lam = mu, wrapped as Located when
        l = 0 or mu is inside the locus, and as OutsideLocus when l > 0 and
        the orbit leaves the bounded region.
        """
        if l != 0 and not _is_prime(l):
            raise ValueError(f"l must be 0 or a prime, got {l}")
        if self.singular(mu):
            return Singular()
        hits = []
        for w in self.weyl:
            lam = self.dot_action(self.inverse(w), mu)
            if self.dominant(lam):
                hits.append((w, lam))
        assert len(hits) == 1, f"regular weight {mu} with {len(hits)} dominant representatives"
        w, lam = hits[0]
        if l > 0 and not self.in_cbar(lam, l):
            return OutsideLocus(w, lam)
        return Located(w, lam)


@dataclass(frozen=True)
class Singular:
    pass


@dataclass(frozen=True)
class Located:
    w: WeylElement
    lam: Weight


@dataclass(frozen=True)
class OutsideLocus:
    w: WeylElement
    lam: Weight


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


A1 = RootDatum(1)
A2 = RootDatum(2)

# Named SL3 weights (fundamental-weight coordinates).
L1: Weight = (1, 0)
L2: Weight = (-1, 1)
L3: Weight = (0, -1)
RHO: Weight = A2.rho
ALPHA: Weight = A2.simple_roots[0]
BETA: Weight = A2.simple_roots[1]

assert A2.sub(L1, L2) == ALPHA and A2.sub(L2, L3) == BETA and A2.sub(L1, L3) == RHO
assert A2.add(A2.add(L1, L2), L3) == (0, 0)


# -- divisor class group of the special fibre (n = 3) ------------------------


@dataclass(frozen=True, order=True)
class ClassGroupElement:
    """Element of X*(T) / <3(L1 + L3)> = Z x Z/3."""

    free_part: int
    torsion_part: int  # residue mod 3, normalized to {0, 1, 2}

    def __post_init__(self):
        if not 0 <= self.torsion_part < 3:
            raise ValueError("torsion part must be reduced mod 3")

    def __str__(self) -> str:
        return f"({self.free_part}, {self.torsion_part} mod 3)"


def class_reduce(lam: Weight) -> ClassGroupElement:
    """Reduction X*(T) -> Z x Z/3, (a, b) -> (a + b, b mod 3).

    The kernel is exactly the subgroup generated by 3(L1 + L3) = (3, -3).
    """
    a, b = lam
    return ClassGroupElement(a + b, b % 3)


def iota(lam: Weight) -> Weight:
    """Involution induced by A -> A^{-T}: interchanges L1 and -L3, i.e. swaps
    fundamental-weight coordinates."""
    a, b = lam
    return (b, a)


def self_dual_classes(omega: Weight = RHO) -> list[tuple[ClassGroupElement, Weight]]:
    """All classes [lam] with [omega - lam] = [iota(lam)] in the class group.

    Returned as (class, canonical representative) pairs; representatives are
    chosen with second coordinate in {0, 1, -1}.  For omega = rho these are
    the classes of L1, -L3 and 2L1 + L3.
    """
    # [omega] = [lam] + [iota lam]; with s = a + b this reads
    # 2s = free(omega) and s = torsion(omega) mod 3.
    target = class_reduce(omega)
    if target.free_part % 2 != 0:
        return []
    s = target.free_part // 2
    if s % 3 != target.torsion_part % 3:
        return []
    out = []
    for b in (0, 1, -1):
        rep = (s - b, b)
        out.append((class_reduce(rep), rep))
    return out
