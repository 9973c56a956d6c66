"""The named ideals of the Steinberg-component computations and their checks.

Six cases are modelled.  The ambient rings use degrevlex with the entries of
M row-major first, then the entries of N row-major (traceless ambients drop
the last diagonal entry of each matrix and write it as minus the others).

    n2      pairs of traceless 2x2 matrices; generators det M, det N,
            tr(MN), entries of MN - NM.
    n3-z    pairs of traceless 3x3 matrices; generators tr M^2, tr MN,
            tr N^2, tr M^3, tr N^3 and all entries of M^2N, N^2M, NM^2, MN^2.
    n3-x    full 3x3 pairs; the n3-z traces plus tr M, tr N and the entries
            of MN - NM, with only M^2N and MN^2 among the cubic products.
    gl-n2   (Phi, Sigma) in GL2 x GL2 with inverse-determinant variables u, v:
            commutation with Sigma^q expanded through (Sigma-I)^2 = 0, the
            two characteristic polynomials, and tr(Phi(Sigma-I)).
    gl-n3   the 3x3 analogue, with Sigma^q = I + q(Sigma-I) + C(q,2)(Sigma-I)^2
            and the two extra cubic matrix relations.
    cnil    the commuting-nilpotent chart equation (see liealg).

The verification campaigns pair the Groebner side against independent
oracles: pseudorandom parametrized points (Schwartz-Zippel bounded), the
character-level section counts of the flag-variety bundles, and integer
invariant factors for the degree-3 span.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import breps, bwb
from .fieldops import Echelon, field_of
from .polyalg import (GradedDims, IdealBasis, IntMatrix, PolyRing, groebner,
                      hilbert_function, homogenize_by_elimination, normal_form,
                      quotient_invariant_factors, snf)
from .weights import A1, A2, Weight

CASE_TAGS = ("n2", "n3-z", "n3-x", "gl-n2", "gl-n3", "cnil")

EVAL_PRIME = 2**31 - 1  # fixed prime for randomized point evaluation


class UnsupportedCase(ValueError):
    pass


@dataclass(frozen=True)
class IdealCase:
    """Descriptor: which named ideal, over which characteristic, which q."""

    tag: str
    char: int = 0
    q: object = None  # None = symbolic (gl and cnil cases only)

    def __post_init__(self):
        if self.tag not in CASE_TAGS:
            raise UnsupportedCase(f"unknown case tag {self.tag!r}")
        if self.tag.startswith("gl") and self.char in (2, 3):
            raise UnsupportedCase("gl cases need characteristic 0 or l > 3")

    @property
    def ambient(self) -> str:
        return "traceless" if self.tag in ("n2", "n3-z") else "full-matrix"


# -- polynomial matrices ----------------------------------------------------------


def _zeros(ring, n):
    return [[ring.zero() for _ in range(n)] for _ in range(n)]


def mat_mul(ring, a, b):
    n = len(a)
    out = _zeros(ring, n)
    for i in range(n):
        for j in range(n):
            acc = ring.zero()
            for k in range(n):
                acc = ring.add(acc, ring.mul(a[i][k], b[k][j]))
            out[i][j] = acc
    return out


def mat_sub(ring, a, b):
    return [[ring.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_add(ring, a, b):
    return [[ring.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(ring, a, c):
    return [[ring.scale(x, c) for x in row] for row in a]


def mat_trace(ring, a):
    t = ring.zero()
    for i in range(len(a)):
        t = ring.add(t, a[i][i])
    return t


def mat_identity(ring, n, c=1):
    out = _zeros(ring, n)
    for i in range(n):
        out[i][i] = ring.const(c)
    return out


def mat_det(ring, a):
    n = len(a)
    if n == 2:
        return ring.sub(ring.mul(a[0][0], a[1][1]), ring.mul(a[0][1], a[1][0]))
    if n == 3:
        acc = ring.zero()
        for (i, j, k), sgn in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                               ((2, 1, 0), -1), ((1, 0, 2), -1), ((0, 2, 1), -1)):
            term = ring.mul(ring.mul(a[0][i], a[1][j]), a[2][k])
            acc = ring.add(acc, ring.scale(term, sgn))
        return acc
    raise ValueError("determinant modelled for n <= 3 only")


def mat_e2(ring, a):
    """Second elementary symmetric function of the eigenvalues (n = 3)."""
    acc = ring.zero()
    for i in range(3):
        for j in range(i + 1, 3):
            minor = ring.sub(ring.mul(a[i][i], a[j][j]), ring.mul(a[i][j], a[j][i]))
            acc = ring.add(acc, minor)
    return acc


def _matrix_names(prefix: str, n: int, traceless: bool) -> list[str]:
    names = [f"{prefix}{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    if traceless:
        names.remove(f"{prefix}{n}{n}")
    return names


def _var_matrix(ring, prefix: str, n: int, traceless: bool):
    m = _zeros(ring, n)
    for i in range(n):
        for j in range(n):
            if traceless and i == j == n - 1:
                acc = ring.zero()
                for k in range(n - 1):
                    acc = ring.sub(acc, ring.var(f"{prefix}{k + 1}{k + 1}"))
                m[i][j] = acc
            else:
                m[i][j] = ring.var(f"{prefix}{i + 1}{j + 1}")
    return m


@dataclass
class CaseData:
    case: IdealCase
    ring: PolyRing
    gens: list
    mats: dict

    def ideal(self) -> IdealBasis:
        return IdealBasis(self.ring, list(self.gens))


def build_case(case: IdealCase) -> CaseData:
    tag = case.tag
    if tag == "cnil":
        from .liealg import cn_ideal_reduction

        rep = cn_ideal_reduction(case.q, 3, case.char)
        # same variable layout as the reduction's own ring
        ring = PolyRing(("q", "r", "a", "b", "c", "d", "e", "f") if case.q is None
                        else ("a", "b", "c", "d", "e", "f"), case.char)
        return CaseData(case, ring, [e for _, e in rep.entries], {"report": rep})
    if tag == "n2":
        ring = PolyRing(_matrix_names("m", 2, True) + _matrix_names("n", 2, True), case.char)
        M = _var_matrix(ring, "m", 2, True)
        N = _var_matrix(ring, "n", 2, True)
        comm = mat_sub(ring, mat_mul(ring, M, N), mat_mul(ring, N, M))
        gens = [mat_det(ring, M), mat_det(ring, N), mat_trace(ring, mat_mul(ring, M, N))]
        gens += [comm[i][j] for i in range(2) for j in range(2) if comm[i][j]]
        return CaseData(case, ring, gens, {"M": M, "N": N})
    if tag == "n3-z":
        ring = PolyRing(_matrix_names("m", 3, True) + _matrix_names("n", 3, True), case.char)
        M = _var_matrix(ring, "m", 3, True)
        N = _var_matrix(ring, "n", 3, True)
        M2, N2 = mat_mul(ring, M, M), mat_mul(ring, N, N)
        gens = [mat_trace(ring, M2), mat_trace(ring, mat_mul(ring, M, N)), mat_trace(ring, N2),
                mat_trace(ring, mat_mul(ring, M2, M)), mat_trace(ring, mat_mul(ring, N2, N))]
        for prod in (mat_mul(ring, M2, N), mat_mul(ring, N2, M),
                     mat_mul(ring, N, M2), mat_mul(ring, M, N2)):
            gens += [prod[i][j] for i in range(3) for j in range(3)]
        return CaseData(case, ring, gens, {"M": M, "N": N})
    if tag == "n3-x":
        ring = PolyRing(_matrix_names("m", 3, False) + _matrix_names("n", 3, False), case.char)
        M = _var_matrix(ring, "m", 3, False)
        N = _var_matrix(ring, "n", 3, False)
        M2, N2 = mat_mul(ring, M, M), mat_mul(ring, N, N)
        comm = mat_sub(ring, mat_mul(ring, M, N), mat_mul(ring, N, M))
        gens = [mat_trace(ring, M), mat_trace(ring, N),
                mat_trace(ring, M2), mat_trace(ring, mat_mul(ring, M, N)), mat_trace(ring, N2)]
        gens += [comm[i][j] for i in range(3) for j in range(3)]
        gens += [mat_trace(ring, mat_mul(ring, M2, M)), mat_trace(ring, mat_mul(ring, N2, N))]
        for prod in (mat_mul(ring, M2, N), mat_mul(ring, M, N2)):
            gens += [prod[i][j] for i in range(3) for j in range(3)]
        return CaseData(case, ring, gens, {"M": M, "N": N})
    if tag in ("gl-n2", "gl-n3"):
        n = 2 if tag == "gl-n2" else 3
        symbolic = case.q is None
        names = (("q",) if symbolic else ()) + tuple(
            _matrix_names("f", n, False) + _matrix_names("s", n, False) + ["u", "v"])
        ring = PolyRing(names, case.char)
        Phi = _var_matrix(ring, "f", n, False)
        Sigma = _var_matrix(ring, "s", n, False)

        def qp(k):
            if symbolic:
                return ring.pow(ring.var("q"), k)
            return ring.const(ring.domain.of(case.q) ** k if k else 1)

        qpoly = qp(1)
        Nmat = mat_sub(ring, Sigma, mat_identity(ring, n))
        gens = []
        if n == 2:
            sigma_q = mat_add(ring, mat_identity(ring, n), mat_scale_poly(ring, Nmat, qpoly))
            comm = mat_sub(ring, mat_mul(ring, Phi, Sigma), mat_mul(ring, sigma_q, Phi))
            gens += [comm[i][j] for i in range(n) for j in range(n)]
            gens.append(ring.sub(mat_trace(ring, Phi), ring.add(ring.const(1), qp(1))))
            gens.append(ring.sub(mat_det(ring, Phi), qp(1)))
            gens.append(ring.sub(mat_trace(ring, Sigma), ring.const(2)))
            gens.append(ring.sub(mat_det(ring, Sigma), ring.const(1)))
            gens.append(mat_trace(ring, mat_mul(ring, Phi, Nmat)))
        else:
            # Sigma^q = I + q(Sigma - I) + C(q,2)(Sigma - I)^2; needs 1/2
            N2 = mat_mul(ring, Nmat, Nmat)
            cq2 = ring.scale(ring.mul(qpoly, ring.sub(qpoly, ring.const(1))), Fraction(1, 2))
            sigma_q = mat_add(ring, mat_identity(ring, n),
                              mat_add(ring, mat_scale_poly(ring, Nmat, qpoly),
                                      mat_scale_poly(ring, N2, cq2)))
            comm = mat_sub(ring, mat_mul(ring, Phi, Sigma), mat_mul(ring, sigma_q, Phi))
            gens += [comm[i][j] for i in range(n) for j in range(n)]
            gens.append(ring.sub(mat_trace(ring, Phi),
                                 ring.add(ring.add(ring.const(1), qp(1)), qp(2))))
            gens.append(ring.sub(mat_e2(ring, Phi),
                                 ring.add(ring.add(qp(1), qp(2)), qp(3))))
            gens.append(ring.sub(mat_det(ring, Phi), qp(3)))
            gens.append(ring.sub(mat_trace(ring, Sigma), ring.const(3)))
            gens.append(ring.sub(mat_e2(ring, Sigma), ring.const(3)))
            gens.append(ring.sub(mat_det(ring, Sigma), ring.const(1)))
            gens.append(mat_trace(ring, mat_mul(ring, Phi, Nmat)))
            phi_q2 = mat_sub(ring, Phi, mat_identity_poly(ring, n, qp(2)))
            phi_q1 = mat_sub(ring, Phi, mat_identity_poly(ring, n, qp(1)))
            rel1 = mat_mul(ring, phi_q2, N2)
            rel2 = mat_mul(ring, mat_mul(ring, phi_q2, phi_q1), Nmat)
            gens += [rel1[i][j] for i in range(n) for j in range(n)]
            gens += [rel2[i][j] for i in range(n) for j in range(n)]
        gens.append(ring.sub(ring.mul(ring.var("u"), mat_det(ring, Phi)), ring.const(1)))
        gens.append(ring.sub(ring.mul(ring.var("v"), mat_det(ring, Sigma)), ring.const(1)))
        return CaseData(case, ring, gens, {"Phi": Phi, "Sigma": Sigma})
    raise UnsupportedCase(case.tag)


def mat_scale_poly(ring, a, p):
    return [[ring.mul(x, p) for x in row] for row in a]


def mat_identity_poly(ring, n, p):
    out = _zeros(ring, n)
    for i in range(n):
        out[i][i] = dict(p)
    return out


def make_ideal(case: IdealCase) -> IdealBasis:
    """The literal generator list of the named case, in ambient coordinates."""
    return build_case(case).ideal()


# -- randomized parametrization containment ------------------------------------------


@dataclass
class ParamReport:
    case: IdealCase
    trials: int
    seed: int
    failures: list
    control_detected: bool
    bound_exponent: int  # failure probability <= 10^-bound_exponent

    @property
    def passed(self) -> bool:
        return not self.failures and self.control_detected

    @property
    def bound_text(self) -> str:
        return f"<= 10^-{self.bound_exponent}"


def _eval_poly(poly, point, p=EVAL_PRIME):
    total = 0
    for mono, coeff in poly.items():
        c = coeff
        if isinstance(c, Fraction):
            c = c.numerator * pow(c.denominator, -1, p)
        term = c % p
        for i, e in enumerate(mono):
            if e:
                term = term * pow(point[i], e, p) % p
        total = (total + term) % p
    return total


def _rand_matrix(rng, n, p=EVAL_PRIME):
    return [[rng.randrange(p) for _ in range(n)] for _ in range(n)]


def _det_mod(a, p=EVAL_PRIME):
    n = len(a)
    if n == 2:
        return (a[0][0] * a[1][1] - a[0][1] * a[1][0]) % p
    return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])) % p


def _inv_mod(a, p=EVAL_PRIME):
    n = len(a)
    d = _det_mod(a, p)
    dinv = pow(d, -1, p)
    if n == 2:
        adj = [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]
    else:
        adj = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                r = [k for k in range(3) if k != j]
                c = [k for k in range(3) if k != i]
                minor = a[r[0]][c[0]] * a[r[1]][c[1]] - a[r[0]][c[1]] * a[r[1]][c[0]]
                adj[i][j] = (-1) ** (i + j) * minor
    return [[adj[i][j] * dinv % p for j in range(n)] for i in range(n)]


def _mulm(a, b, p=EVAL_PRIME):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n)] for i in range(n)]


def _conj(g, m, p=EVAL_PRIME):
    return _mulm(_mulm(g, m, p), _inv_mod(g, p), p)


def _rand_invertible(rng, n, p=EVAL_PRIME):
    while True:
        g = _rand_matrix(rng, n, p)
        if _det_mod(g, p):
            return g


def _point_for_case(case: IdealCase, rng, ring) -> list[int]:
    p = EVAL_PRIME
    tag = case.tag
    if tag in ("n2", "n3-z", "n3-x", "cnil"):
        n = 2 if tag == "n2" else 3
        g = _rand_invertible(rng, n)
        if tag == "n3-x":
            # commuting pair: upper-triangular (a, b, c=t*a) and (d, e, f=t*d)
            a, d, t, b, e = (rng.randrange(p) for _ in range(5))
            m = [[0, a, b], [0, 0, t * a % p], [0, 0, 0]]
            nn = [[0, d, e], [0, 0, t * d % p], [0, 0, 0]]
        elif tag == "cnil":
            # chart point of the commuting-nilpotent hypersurface at given q
            if case.q is None:
                q = rng.randrange(2, p - 1)
                while q in (0, 1, p - 1):
                    q = rng.randrange(2, p - 1)
            else:
                q = case.q % p
            a, b, c, d = (rng.randrange(p) for _ in range(4))
            if q == 1:
                while a == 0:
                    a = rng.randrange(p)
                e = rng.randrange(p)
                f = d * c % p * pow(a, -1, p) % p
            else:
                f = rng.randrange(p)
                e = (q * d * c - a * f) % p * pow(q * q - q, -1, p) % p
            vals = {"a": a, "b": b, "c": c, "d": d, "e": e, "f": f, "q": q,
                    "r": pow(q, -1, p)}
            return [vals[nm] for nm in ring.names]
        else:
            m = [[0] * n for _ in range(n)]
            nn = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    m[i][j] = rng.randrange(p)
                    nn[i][j] = rng.randrange(p)
        M = _conj(g, m)
        N = _conj(g, nn)
        vals = {}
        for prefix, mat in (("m", M), ("n", N)):
            for i in range(n):
                for j in range(n):
                    vals[f"{prefix}{i + 1}{j + 1}"] = mat[i][j]
        return [vals[nm] for nm in ring.names]
    if tag in ("gl-n2", "gl-n3"):
        n = 2 if tag == "gl-n2" else 3
        if case.q is None:
            q = rng.randrange(2, p - 1)
            while q in (0, 1, p - 1):
                q = rng.randrange(2, p - 1)
        else:
            q = case.q % p
            if q in (0, 1, p - 1):
                raise UnsupportedCase(
                    "parametrized points need a generic q; use the symbolic descriptor")
        g = _rand_invertible(rng, n)
        diag = [[pow(q, n - 1 - i, p) if i == j else 0 for j in range(n)] for i in range(n)]
        phi = _conj(g, diag)
        if n == 2:
            nil = [[0, rng.randrange(p)], [0, 0]]
        else:
            nil = [[0, rng.randrange(p), 0], [0, 0, rng.randrange(p)], [0, 0, 0]]
        N = _conj(g, nil)
        inv2 = pow(2, -1, p)
        N2 = _mulm(N, N)
        sigma = [[(int(i == j) + N[i][j] + (N2[i][j] * inv2 if n == 3 else 0)) % p
                  for j in range(n)] for i in range(n)]
        vals = {"q": q, "u": pow(q, -(n * (n - 1) // 2), p), "v": 1}
        for prefix, mat in (("f", phi), ("s", sigma)):
            for i in range(n):
                for j in range(n):
                    vals[f"{prefix}{i + 1}{j + 1}"] = mat[i][j]
        return [vals[nm] for nm in ring.names]
    raise UnsupportedCase(tag)


def parametrization_check(case: IdealCase, trials: int = 200, seed: int = 0) -> ParamReport:
    """Evaluate every generator at `trials` pseudorandom parametrized points.

    All generators must vanish identically on the parametrization; a
    deliberately non-member control polynomial must be detected.  The
    reported bound is the Schwartz-Zippel probability that a nonzero
    polynomial of (conservative) degree 100 vanishes at every trial.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    data = build_case(case)
    rng = random.Random(seed)
    failures = []
    control = None
    if data.ring.n >= 2:
        control = data.ring.add(
            data.ring.mul(data.ring.var(data.ring.names[0]), data.ring.var(data.ring.names[1])),
            data.ring.const(1))
    control_hit = False
    for t in range(trials):
        point = _point_for_case(case, rng, data.ring)
        for k, gen in enumerate(data.gens):
            if _eval_poly(gen, point):
                failures.append((t, k))
        if control is not None and _eval_poly(control, point):
            control_hit = True
    # (100 / EVAL_PRIME)^trials <= 10^-exponent
    exponent = len(str((EVAL_PRIME // 100) ** trials)) - 1
    return ParamReport(case, trials, seed, failures, control_hit, exponent)


# -- Hilbert-function bridge to the character side ------------------------------------


@dataclass
class HilbertCross:
    case: IdealCase
    bound: int
    groebner_dims: GradedDims
    character_dims: GradedDims

    @property
    def passed(self) -> bool:
        return self.groebner_dims.dims == self.character_dims.dims


def character_section_dims(tag: str, bound: int, twist: Weight | None = None) -> GradedDims:
    """Degree-k section counts of the relevant bundle on the flag variety, by
    Euler characteristics of sym^k((g/b) + (g/b)) (optionally twisted)."""
    datum = A1 if tag == "n2" else A2
    dims = []
    for k in range(bound + 1):
        rep = breps.build_rep(f"sym^{k}(g/b + g/b)", datum)
        if twist is not None:
            rep = rep.twist(twist)
        dims.append(bwb.euler_char(rep, datum).dimension(datum))
    return GradedDims(tuple(dims))


def hilbert_cross_check(case: IdealCase, bound: int, _gb_cache: dict = {}) -> HilbertCross:
    """dim (S/I)_k from the truncated Groebner basis versus the character side."""
    if case.tag not in ("n2", "n3-z"):
        raise UnsupportedCase("hilbert cross check covers n2 and n3-z")
    if case.char not in (0,) and case.char < 5:
        raise UnsupportedCase("needs characteristic 0 or l >= 5")
    key = (case.tag, case.char, bound)
    if key not in _gb_cache:
        _gb_cache[key] = groebner(make_ideal(case), bound)
    gb = _gb_cache[key]
    gdims = hilbert_function(gb, bound)
    cdims = character_section_dims(case.tag, bound)
    return HilbertCross(case, bound, gdims, cdims)


# -- the degree-3 span and its integer invariant factors -------------------------------


@dataclass
class Span17Report:
    ambient: str
    char: int
    rank: int
    rank_reducers: int
    quotient_free_rank: int
    quotient_torsion: list
    snf_factors: list
    snf_primes: set

    @property
    def passed(self) -> bool:
        all_primes = self.snf_primes | _prime_divisors(self.quotient_torsion)
        return self.quotient_free_rank == 17 and all_primes <= {2} and self.rank == 17


def _prime_divisors(factors) -> set:
    primes = set()
    for d in factors:
        dd = abs(d)
        f = 2
        while f * f <= dd:
            if dd % f == 0:
                primes.add(f)
                while dd % f == 0:
                    dd //= f
            f += 1
        if dd > 1:
            primes.add(dd)
    return primes


def _degree3_rows(ring, polys):
    monos = sorted({m for p in polys for m in p}, key=lambda m: (sum(m), m))
    assert all(sum(m) == 3 for m in monos)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for p in polys:
        row = [0] * len(monos)
        for m, c in p.items():
            row[index[m]] = int(c) if not isinstance(c, Fraction) else int(c)
        rows.append(row)
    return rows


def _field_rank(char, int_rows) -> int:
    fld = field_of(char)
    ech = Echelon(fld)
    for row in int_rows:
        vec = {i: fld.of(x) for i, x in enumerate(row) if fld.of(x) != fld.zero}
        ech.insert(vec)
    return ech.rank


def span17_check(char: int = 0) -> dict:
    """Rank of the span of the M^2N and NM^2 entries modulo the listed
    degree-3 reducers, in both ambients, plus the invariant factors of the
    integer quotient lattice."""
    out = {}
    for ambient in ("traceless", "full-matrix"):
        traceless = ambient == "traceless"
        ring = PolyRing(_matrix_names("m", 3, traceless) + _matrix_names("n", 3, traceless), "ZZ")
        M = _var_matrix(ring, "m", 3, traceless)
        N = _var_matrix(ring, "n", 3, traceless)
        M2 = mat_mul(ring, M, M)
        span_polys = []
        for prod in (mat_mul(ring, M2, N), mat_mul(ring, N, M2)):
            span_polys += [prod[i][j] for i in range(3) for j in range(3)]
        trmn = mat_trace(ring, mat_mul(ring, M, N))
        trm2 = mat_trace(ring, M2)
        reducers = []
        reducers += [ring.mul(M[i][j], trmn) for i in range(3) for j in range(3) if M[i][j]]
        reducers += [ring.mul(N[i][j], trm2) for i in range(3) for j in range(3) if N[i][j]]
        if not traceless:
            trm_sq = ring.mul(mat_trace(ring, M), mat_trace(ring, M))
            reducers += [ring.mul(N[i][j], trm_sq) for i in range(3) for j in range(3) if N[i][j]]
        arow = _degree3_rows(ring, span_polys + reducers)
        a_part = arow[: len(span_polys)]
        b_part = arow[len(span_polys):]
        rk_all = _field_rank(char, a_part + b_part)
        rk_red = _field_rank(char, b_part)
        free, torsion = quotient_invariant_factors(a_part, b_part)
        factors = snf(IntMatrix([list(r) for r in arow]))
        out[ambient] = Span17Report(ambient, char, rk_all - rk_red, rk_red, free, torsion,
                                    factors, _prime_divisors(factors))
    return out


# -- multiplicities of the self-dual divisorial sheaves --------------------------------

MULTIPLICITY_WEIGHTS: dict[Weight, str] = {
    (1, 0): "L1",
    (0, 1): "-L3",
    (2, -1): "2L1+L3",
    (1, 1): "L1-L3",
}


def multiplicity(lam: Weight) -> int:
    """Fibre dimension at the origin of the divisorial sheaf attached to lam.

    The three dominant-side cases are the dimensions of the corresponding
    irreducibles placed in degree 0; the remaining case 2L1+L3 = alpha
    contributes two copies of the adjoint representation in degree 1.
    """
    if lam not in MULTIPLICITY_WEIGHTS:
        raise UnsupportedCase(f"multiplicity not verified for weight {lam}")
    if lam == (2, -1):
        return 2 * bwb.weyl_dim((1, 1))
    return bwb.weyl_dim(lam)


# -- gl-case cross checks ----------------------------------------------------------


@dataclass
class SpecializationReport:
    tag: str
    char: int
    forward_ok: bool  # specialized gl generators lie in the target ideal
    backward_ok: bool  # target generators lie in the specialized gl ideal

    @property
    def passed(self) -> bool:
        return self.forward_ok and self.backward_ok


def gl_specialization_check(tag: str, char: int = 5) -> SpecializationReport:
    """At q = 1 the gl-case ideal, written with Phi = I + M, Sigma = I + N and
    the inverse variables set to 1, coincides with the nilpotent-side ideal
    (n2 with trace generators, resp. n3-x).  Both containments are certified
    by mutual normal-form reduction against degree-complete bases."""
    if tag not in ("gl-n2", "gl-n3"):
        raise UnsupportedCase(tag)
    n = 2 if tag == "gl-n2" else 3
    gl = build_case(IdealCase(tag, char, q=1))
    if n == 2:
        target_ring = PolyRing(_matrix_names("m", 2, False) + _matrix_names("n", 2, False), char)
        M = _var_matrix(target_ring, "m", 2, False)
        N = _var_matrix(target_ring, "n", 2, False)
        comm = mat_sub(target_ring, mat_mul(target_ring, M, N), mat_mul(target_ring, N, M))
        target_gens = [mat_trace(target_ring, M), mat_trace(target_ring, N),
                       mat_det(target_ring, M), mat_det(target_ring, N),
                       mat_trace(target_ring, mat_mul(target_ring, M, N))]
        target_gens += [comm[i][j] for i in range(2) for j in range(2) if comm[i][j]]
    else:
        target = build_case(IdealCase("n3-x", char))
        target_ring, target_gens = target.ring, target.gens
    # substitute f_ij -> delta_ij + m_ij, s_ij -> delta_ij + n_ij, u = v = 1
    images = {"u": target_ring.const(1), "v": target_ring.const(1)}
    for i in range(n):
        for j in range(n):
            delta = target_ring.const(1 if i == j else 0)
            images[f"f{i + 1}{j + 1}"] = target_ring.add(delta, target_ring.var(f"m{i + 1}{j + 1}"))
            images[f"s{i + 1}{j + 1}"] = target_ring.add(delta, target_ring.var(f"n{i + 1}{j + 1}"))
    specialized = [map_poly(gl.ring, g, target_ring, images) for g in gl.gens]
    specialized = [g for g in specialized if g]
    bound = max(max((target_ring.degree(g) for g in specialized), default=0),
                max((target_ring.degree(g) for g in target_gens), default=0))
    spec_homog = homogenize_by_elimination(target_ring, specialized)
    g_spec = groebner(IdealBasis(target_ring, spec_homog), bound)
    g_target = groebner(IdealBasis(target_ring, list(target_gens)), bound)
    forward = all(not normal_form(g, g_target) for g in specialized)
    backward = all(not normal_form(g, g_spec) for g in target_gens)
    return SpecializationReport(tag, char, forward, backward)


def map_poly(src: PolyRing, p, dst: PolyRing, images: dict):
    """Push a polynomial through variable -> polynomial images in dst."""
    out = dst.zero()
    for mono, coeff in p.items():
        term = dst.const(coeff)
        for i, e in enumerate(mono):
            if not e:
                continue
            img = images.get(src.names[i])
            if img is None:
                img = dst.var(src.names[i])
            for _ in range(e):
                term = dst.mul(term, img)
        out = dst.add(out, term)
    return out


@dataclass
class ChartReport:
    tag: str
    checked: int
    nonvanishing: list

    @property
    def passed(self) -> bool:
        return not self.nonvanishing


def chart_symbolic_check(tag: str) -> ChartReport:
    """Fully expanded verification on the standard chart.

    For gl-n2 / gl-n3: Phi = diag(q^{n-1}, ..., 1) exactly and N the free
    allowed-position nilpotent (x E12 [+ y E23]), Sigma the truncated
    exponential, u = r^{n(n-1)/2}, v = 1, inside Q[q, r, params]/(qr - 1).
    Every generator must reduce to zero; conjugation covariance of the
    generator list transports the identity off the chart.  For cnil the
    chart check is the symbolic reduction itself.
    """
    if tag == "cnil":
        from .liealg import cn_ideal_reduction

        rep = cn_ideal_reduction(None)
        return ChartReport(tag, len(rep.entries) + 1, [] if rep.passed else ["normalized-generator"])
    if tag not in ("gl-n2", "gl-n3"):
        raise UnsupportedCase(tag)
    n = 2 if tag == "gl-n2" else 3
    gl = build_case(IdealCase(tag, 0, q=None))
    names = ("q", "r", "x", "y")[: 2 + (n - 1)]
    chart = PolyRing(names, 0)
    q = chart.var("q")
    r = chart.var("r")
    nil = _zeros(chart, n)
    nil[0][1] = chart.var("x")
    if n == 3:
        nil[1][2] = chart.var("y")
    nil2 = mat_mul(chart, nil, nil)
    sigma = mat_identity(chart, n)
    sigma = mat_add(chart, sigma, nil)
    if n == 3:
        sigma = mat_add(chart, sigma, mat_scale(chart, nil2, Fraction(1, 2)))
    images = {"q": q, "u": chart.pow(r, n * (n - 1) // 2), "v": chart.const(1)}
    for i in range(n):
        for j in range(n):
            images[f"f{i + 1}{j + 1}"] = chart.pow(q, n - 1 - i) if i == j else chart.zero()
            images[f"s{i + 1}{j + 1}"] = sigma[i][j]
    rel = groebner(IdealBasis(chart, [chart.sub(chart.mul(q, r), chart.const(1))]), None)
    bad = []
    for k, g in enumerate(gl.gens):
        val = map_poly(gl.ring, g, chart, images)
        if normal_form(val, rel):
            bad.append(k)
    return ChartReport(tag, len(gl.gens), bad)


# -- the commutator layer over the nilpotent-pair ring ---------------------------------


@dataclass
class CommutatorLayerReport:
    char: int
    bound: int
    new_generators_degree2: int
    hf_quotient: GradedDims
    character_dims: tuple

    @property
    def passed(self) -> bool:
        return (self.new_generators_degree2 == 8
                and tuple(self.hf_quotient.dims) == self.character_dims)


def commutator_layer_check(char: int = 5, bound: int = 5) -> CommutatorLayerReport:
    """The ideal of the reduced fibre over the nilpotent-pair ring.

    Degreewise, dim (S/J)_k must equal the section count of the structure
    sheaf minus that of its rho-twist shifted by two (the ideal sheaf of the
    commuting locus is the rho-twist, generated in degree 2); the degree-2
    difference counts the commutator entries, 8 new generators.
    """
    gJ = groebner(make_ideal(IdealCase("n3-x", char)), bound)
    hfJ = hilbert_function(gJ, bound)
    base = character_section_dims("n3-z", bound)
    tw = character_section_dims("n3-z", bound, twist=(1, 1))
    expected = tuple(base[k] - (tw[k - 2] if k >= 2 else 0) for k in range(bound + 1))
    new2 = base[2] - expected[2] if len(expected) > 2 else 0
    return CommutatorLayerReport(char, bound, new2, hfJ, expected)
