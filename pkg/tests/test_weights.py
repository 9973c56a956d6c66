import random

import pytest

from steinberg.weights import (A1, A2, ALPHA, BETA, L1, L2, L3, RHO, ClassGroupElement,
                               Located, OutsideLocus, Singular, class_reduce, iota,
                               self_dual_classes)


def test_root_table_identities():
    assert RHO == (1, 1)
    assert ALPHA == (2, -1)
    assert BETA == (-1, 2)
    assert A2.add(ALPHA, BETA) == RHO
    assert A2.sub(L1, L2) == ALPHA and A2.sub(L2, L3) == BETA
    assert A2.pairing((5, -3), A2.positive_coroots[0]) == 5
    assert A2.pairing((5, -3), A2.positive_coroots[1]) == -3


def test_weyl_group_structure():
    lengths = sorted(w.length for w in A2.weyl)
    assert lengths == [0, 1, 1, 2, 2, 3]
    # faithful group of order 6: all matrices distinct, closed under product
    mats = {w.matrix for w in A2.weyl}
    assert len(mats) == 6
    for w1 in A2.weyl:
        for w2 in A2.weyl:
            assert A2.compose(w1, w2).matrix in mats


def test_dot_action_examples():
    e = A2.identity
    assert A2.dot_action(e, (4, -7)) == (4, -7)
    # s_alpha . 0 = -alpha, since s_alpha(rho) = rho - alpha
    sa = A2.element("sa")
    assert sa.act(RHO) == A2.sub(RHO, ALPHA)
    assert A2.dot_action(sa, (0, 0)) == (-2, 1)
    # w0 . (-2 rho) = 0: oracle by enumerating all six elements
    hits = [w for w in A2.weyl if A2.dot_action(w, (-2, -2)) == (0, 0)]
    assert [w.length for w in hits] == [3]
    assert A2.dot_action(A2.w0, (-2, -2)) == (0, 0)


def test_dot_action_group_law():
    rng = random.Random(11)
    lams = [(rng.randrange(-9, 10), rng.randrange(-9, 10)) for _ in range(12)]
    for w1 in A2.weyl:
        for w2 in A2.weyl:
            w12 = A2.compose(w1, w2)
            for lam in lams:
                assert A2.dot_action(w1, A2.dot_action(w2, lam)) == A2.dot_action(w12, lam)


def test_locate_examples():
    assert A2.locate((0, 0), 5) == Located(A2.identity, (0, 0))
    assert isinstance(A2.locate((-1, -1), 5), Singular)
    res = A2.locate((-2, 1), 5)
    assert isinstance(res, Located) and res.w.name == "sa" and res.lam == (0, 0)


def test_locate_brute_force_oracle():
    # oracle: try every Weyl element by undotted matrix action on mu + rho
    for a in range(-7, 8):
        for b in range(-7, 8):
            mu = (a, b)
            shifted = A2.add(mu, RHO)
            singular = any(A2.pairing(shifted, c) == 0 for c in A2.positive_coroots)
            doms = []
            for w in A2.weyl:
                img = A2.inverse(w).act(shifted)
                if all(x >= 1 for x in img):
                    doms.append((w, A2.sub(img, RHO)))
            res = A2.locate(mu, 0)
            if singular:
                assert doms == [] and isinstance(res, Singular)
            else:
                assert len(doms) == 1
                assert isinstance(res, Located)
                assert (res.w, res.lam) == doms[0]


def test_locate_outside_locus():
    res = A2.locate((5, 5), 5)
    assert isinstance(res, OutsideLocus)
    assert isinstance(A2.locate((5, 5), 13), Located)  # pairing with rho-vee is 12
    with pytest.raises(ValueError):
        A2.locate((0, 0), 4)  # 4 is not prime


def test_bwb_locus_membership():
    assert A2.in_bwb_locus((0, 0), 5)
    assert A2.in_bwb_locus((-2, 1), 5)
    assert not A2.in_bwb_locus((5, 5), 5)
    # 2rho is outside for l = 5, inside for l = 7
    assert not A2.in_bwb_locus((2, 2), 5)
    assert A2.in_bwb_locus((2, 2), 7)


def test_sl2_datum():
    assert A1.rho == (1,)
    assert sorted(w.length for w in A1.weyl) == [0, 1]
    assert A1.dot_action(A1.element("sa"), (-2,)) == (0,)
    assert isinstance(A1.locate((-1,), 0), Singular)


def test_class_reduce_examples():
    assert class_reduce((3, -3)) == ClassGroupElement(0, 0)
    assert class_reduce((0, 0)) == ClassGroupElement(0, 0)
    assert class_reduce(RHO) == ClassGroupElement(2, 1)


def test_class_reduce_kernel_box():
    for a in range(-30, 31):
        for b in range(-30, 31):
            in_kernel = class_reduce((a, b)) == ClassGroupElement(0, 0)
            assert in_kernel == ((a, b) in {(3 * k, -3 * k) for k in range(-10, 11)})


def test_class_reduce_homomorphism():
    rng = random.Random(5)
    for _ in range(200):
        x = (rng.randrange(-40, 41), rng.randrange(-40, 41))
        y = (rng.randrange(-40, 41), rng.randrange(-40, 41))
        s = class_reduce(A2.add(x, y))
        cx, cy = class_reduce(x), class_reduce(y)
        assert s.free_part == cx.free_part + cy.free_part
        assert s.torsion_part == (cx.torsion_part + cy.torsion_part) % 3


def test_iota_involution():
    assert iota(RHO) == RHO
    for a in range(-10, 11):
        for b in range(-10, 11):
            assert iota(iota((a, b))) == (a, b)
    # lattice automorphism
    assert iota(A2.add((2, 5), (-1, 3))) == A2.add(iota((2, 5)), iota((-1, 3)))


def test_self_dual_classes():
    sd = self_dual_classes(RHO)
    assert len(sd) == 3
    assert [rep for _, rep in sd] == [(1, 0), (0, 1), (2, -1)]
    for cls, rep in sd:
        assert class_reduce(A2.sub(RHO, rep)) == class_reduce(iota(rep))
        assert class_reduce(rep) == cls
    # oracle: coset enumeration over a box finds exactly these three classes
    found = set()
    for a in range(-12, 13):
        for b in range(-12, 13):
            if class_reduce(A2.sub(RHO, (a, b))) == class_reduce(iota((a, b))):
                c = class_reduce((a, b))
                found.add((c.free_part, c.torsion_part))
    assert found == {(1, 0), (1, 1), (1, 2)}
