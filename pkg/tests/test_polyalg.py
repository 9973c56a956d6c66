import itertools
import random
from fractions import Fraction

import pytest

from steinberg.polyalg import (DomainError, GradedDims, IdealBasis, IntMatrix, PolyRing,
                               TruncationError, groebner, hilbert_function,
                               homogenize_by_elimination, hnf_rowspace, krull_dim,
                               min_gen_degrees, normal_form, quotient_invariant_factors, snf)


def ring6(char=0):
    return PolyRing(("a", "b", "c", "d", "e", "f"), char)


def test_groebner_trivial_cases():
    R = PolyRing(("x", "y"), 0)
    g = groebner(IdealBasis(R, [R.var("x"), R.var("y")]), None)
    assert [R.to_text(p) for p in g.gb] == ["1*y", "1*x"]
    R6 = ring6()
    af_cd = R6.from_text("1*a*f - 1*c*d")
    g = groebner(IdealBasis(R6, [af_cd]), None)
    assert len(g.gb) == 1 and g.gb_complete
    assert R6.scale(g.gb[0], -1) == af_cd or g.gb[0] == af_cd


def test_groebner_determinism_five_runs():
    texts = set()
    for _ in range(5):
        R = PolyRing(("m11", "m12", "m21", "n11", "n12", "n21"), 0)
        M = [[R.var("m11"), R.var("m12")], [R.var("m21"), R.neg(R.var("m11"))]]
        N = [[R.var("n11"), R.var("n12")], [R.var("n21"), R.neg(R.var("n11"))]]

        def mul(A, B):
            return [[R.add(R.mul(A[i][0], B[0][j]), R.mul(A[i][1], B[1][j]))
                     for j in range(2)] for i in range(2)]

        MN, NM = mul(M, N), mul(N, M)
        gens = [R.sub(R.mul(M[0][0], M[1][1]), R.mul(M[0][1], M[1][0])),
                R.sub(R.mul(N[0][0], N[1][1]), R.mul(N[0][1], N[1][0])),
                R.add(MN[0][0], MN[1][1])]
        gens += [R.sub(MN[i][j], NM[i][j]) for i in range(2) for j in range(2)]
        g = groebner(IdealBasis(R, gens), None)
        texts.add(tuple(R.to_text(p) for p in g.gb))
    assert len(texts) == 1


def test_normal_form_properties():
    R6 = ring6()
    gens = [R6.from_text("1*a*f - 1*c*d"), R6.from_text("1*a*c"), R6.from_text("1*d*f")]
    g = groebner(IdealBasis(R6, gens), None)
    for p in gens:
        assert normal_form(p, g) == {}
    rng = random.Random(4)
    names = R6.names
    for _ in range(20):
        p = {}
        for _ in range(4):
            mono = [0] * 6
            for _ in range(rng.randrange(4)):
                mono[rng.randrange(6)] += 1
            p = R6.add(p, R6.monomial(mono, rng.randrange(-3, 4)))
        q = R6.from_text("1*b^2 - 2*e")
        r_p, r_q = normal_form(p, g), normal_form(q, g)
        # idempotent and linear
        assert normal_form(r_p, g) == r_p
        assert normal_form(R6.add(p, q), g) == R6.add(r_p, r_q)
    assert normal_form(R6.var("b"), g) == R6.var("b")


def test_hilbert_function_examples():
    R6 = ring6()
    g0 = groebner(IdealBasis(R6, []), 3)
    assert hilbert_function(g0, 3).dims == (1, 6, 21, 56)
    g1 = groebner(IdealBasis(R6, [R6.from_text("1*a*f - 1*c*d")]), 3)
    assert hilbert_function(g1, 3).dims == (1, 6, 20, 50)


def test_hilbert_function_rank_oracle():
    # independent oracle: dim I_k as the rank of the monomial-multiple matrix
    R = PolyRing(("x", "y", "z"), 0)
    gens = [R.from_text("1*x*y - 1*z^2"), R.from_text("1*x^2 + 1*y*z")]
    g = groebner(IdealBasis(R, gens), 5)
    hf = hilbert_function(g, 5)
    for k in range(6):
        monos_k = _monomials(3, k)
        rows = []
        for gen in gens:
            d = R.degree(gen)
            if d > k:
                continue
            for m in _monomials(3, k - d):
                prod = R.mul_term(gen, m, Fraction(1))
                rows.append([prod.get(mono, Fraction(0)) for mono in monos_k])
        rank = _rank_q(rows)
        assert hf[k] == len(monos_k) - rank


def _monomials(n, k):
    out = []
    for combo in itertools.combinations_with_replacement(range(n), k):
        mono = [0] * n
        for i in combo:
            mono[i] += 1
        out.append(tuple(mono))
    return out


def _rank_q(rows):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = [x / rows[r][c] for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                k = rows[i][c]
                rows[i] = [x - k * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def test_macaulay_leading_term_agreement():
    # the Hilbert function of the ideal agrees with that of its leading-term
    # (monomial) ideal, recomputed through a fresh Groebner run on the lms
    R = PolyRing(("x", "y", "z", "w"), 5)
    gens = [R.from_text("1*x*y - 1*z*w"), R.from_text("1*y^2*z - 1*x*w^2"),
            R.from_text("1*x^3 - 1*w^3")]
    g = groebner(IdealBasis(R, gens), 6)
    lts = [{R.lm(p): R.domain.one} for p in g.gb]
    g_lt = groebner(IdealBasis(R, lts), 6)
    assert hilbert_function(g, 6).dims == hilbert_function(g_lt, 6).dims


def test_min_gen_degrees():
    R6 = ring6()
    gens = [R6.from_text("1*a*f - 1*c*d"), R6.from_text("1*a^2*f - 1*a*c*d"),
            R6.from_text("1*b^3")]
    g = groebner(IdealBasis(R6, gens), 4)
    # the second generator is a multiple of the first
    assert min_gen_degrees(g, 4).dims == (0, 0, 1, 1, 0)


def test_krull_dim_examples():
    R6 = ring6()
    af_cd = R6.from_text("1*a*f - 1*c*d")
    assert krull_dim(groebner(IdealBasis(R6, [af_cd]), None)) == 5
    g = groebner(IdealBasis(R6, [af_cd, R6.from_text("1*a*c"), R6.from_text("1*d*f")]), None)
    assert krull_dim(g) == 4
    assert krull_dim(groebner(IdealBasis(R6, []), None)) == 6
    with pytest.raises(TruncationError):
        krull_dim(groebner(IdealBasis(R6, [af_cd]), 1))


def test_groebner_rejects_zz():
    RZ = PolyRing(("x", "y"), "ZZ")
    with pytest.raises(DomainError):
        groebner(IdealBasis(RZ, [RZ.var("x")]), None)


def test_truncation_errors():
    R6 = ring6()
    g = groebner(IdealBasis(R6, [R6.from_text("1*a*f - 1*c*d")]), 3)
    with pytest.raises(TruncationError):
        normal_form(R6.pow(R6.var("a"), 4), g)
    with pytest.raises(TruncationError):
        hilbert_function(g, 4)
    inhom = IdealBasis(R6, [R6.from_text("1*a^2 - 1*b")])
    with pytest.raises(TruncationError):
        groebner(inhom, 3)


def test_snf_examples():
    assert snf(IntMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == [1, 1, 1]
    assert snf(IntMatrix([[2, 0], [0, 4]])) == [2, 4]
    assert snf(IntMatrix([[0, 0], [0, 0]])) == []


def test_snf_divisibility_and_minor_gcd_oracle():
    import math

    rng = random.Random(9)
    for _ in range(40):
        rows = rng.randrange(1, 4)
        cols = rng.randrange(1, 4)
        a = [[rng.randrange(-6, 7) for _ in range(cols)] for _ in range(rows)]
        invs = snf(IntMatrix([list(r) for r in a]))
        for x, y in zip(invs, invs[1:]):
            assert y % x == 0
        # product of the first k invariant factors = gcd of all k x k minors
        for k in range(1, min(rows, cols) + 1):
            gcd = 0
            for rsel in itertools.combinations(range(rows), k):
                for csel in itertools.combinations(range(cols), k):
                    gcd = math.gcd(gcd, _det_int([[a[i][j] for j in csel] for i in rsel]))
            prod = 1
            for d in invs[:k]:
                prod *= d
            if len(invs) >= k:
                assert prod == gcd
            else:
                assert gcd == 0


def _det_int(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    det = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        det += (-1) ** j * m[0][j] * _det_int(minor)
    return det


def test_hnf_and_quotient_invariants():
    basis = hnf_rowspace([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    # echelon with strictly increasing pivots
    leads = [next(j for j, x in enumerate(r) if x) for r in basis]
    assert leads == sorted(leads) and len(set(leads)) == len(leads)
    free, torsion = quotient_invariant_factors([[1, 0], [0, 1]], [[2, 0]])
    assert (free, torsion) == (1, [2])
    free, torsion = quotient_invariant_factors([[1, 0]], [])
    assert (free, torsion) == (1, [])


def test_text_round_trip():
    R6 = ring6()
    p = R6.from_text("2*a^2*f - 3*c*d + 1")
    assert R6.from_text(R6.to_text(p)) == p
    assert R6.to_text(R6.zero()) == "0"
    q = R6.from_text("1/2*a - 1*b")
    assert q[(1, 0, 0, 0, 0, 0)] == Fraction(1, 2)
    with pytest.raises(ValueError):
        R6.from_text("1*zz")


def test_int_matrix_text_round_trip():
    m = IntMatrix([[1, -2, 3], [0, 5, -6]])
    assert IntMatrix.from_text(m.to_text()).rows == m.rows
    with pytest.raises(ValueError):
        IntMatrix.from_text("1 2\n3\n")


def test_homogenize_by_elimination():
    R = PolyRing(("x", "y"), 0)
    gens = [R.var("x"), R.add(R.scale(R.var("x"), 2), R.from_text("1*y^2"))]
    out = homogenize_by_elimination(R, gens)
    assert all(R.is_homogeneous(p) for p in out)
    assert sorted(R.degree(p) for p in out) == [1, 2]
    with pytest.raises(ValueError):
        homogenize_by_elimination(R, [R.from_text("1*x^2 - 1*y")])


def test_graded_dims_validation():
    with pytest.raises(ValueError):
        GradedDims((1, -1))
    assert str(GradedDims((1, 2, 3))) == "[1, 2, 3]"
