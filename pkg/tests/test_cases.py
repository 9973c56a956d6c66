import pytest

from steinberg.cases import (IdealCase, UnsupportedCase, build_case, chart_symbolic_check,
                             character_section_dims, commutator_layer_check,
                             gl_specialization_check, hilbert_cross_check, make_ideal,
                             multiplicity, parametrization_check, span17_check)
from steinberg.polyalg import groebner, hilbert_function, min_gen_degrees


def test_case_descriptors():
    with pytest.raises(UnsupportedCase):
        IdealCase("bogus")
    with pytest.raises(UnsupportedCase):
        IdealCase("gl-n3", 3)
    assert IdealCase("n3-z").ambient == "traceless"
    assert IdealCase("n3-x").ambient == "full-matrix"


def test_generator_counts():
    assert len(make_ideal(IdealCase("n2")).gens) == 7  # 3 + the 4 commutator entries
    assert make_ideal(IdealCase("n2")).ring.n == 6
    # the literal cubic list: 3 quadratic traces, 2 cubic traces, 36 entries
    zn = make_ideal(IdealCase("n3-z"))
    assert zn.ring.n == 16 and len(zn.gens) == 41
    xn = make_ideal(IdealCase("n3-x"))
    assert xn.ring.n == 18 and len(xn.gens) == 34
    assert make_ideal(IdealCase("gl-n3", 0, q=1)).ring.n == 20
    assert make_ideal(IdealCase("gl-n3", 0, q=None)).ring.n == 21


def test_n2_presentation():
    for char in (0, 5):
        gb = groebner(make_ideal(IdealCase("n2", char)), 5)
        assert min_gen_degrees(gb, 5).dims == (0, 0, 6, 0, 0, 0)
    hc = hilbert_cross_check(IdealCase("n2", 5), 6)
    assert hc.passed
    assert hc.character_dims[1] == 6


def test_n3z_presentation_low_degree():
    gb = groebner(make_ideal(IdealCase("n3-z", 5)), 3)
    assert min_gen_degrees(gb, 3).dims == (0, 0, 3, 36)
    assert hilbert_function(gb, 3).dims == (1, 16, 133, 732)
    assert character_section_dims("n3-z", 3).dims == (1, 16, 133, 732)


def test_character_sections_sl2_degree_one():
    assert character_section_dims("n2", 1).dims == (1, 6)


def test_parametrization_pass_and_control():
    for tag in ("n2", "n3-z", "n3-x", "gl-n2", "gl-n3", "cnil"):
        rep = parametrization_check(IdealCase(tag), trials=25, seed=3)
        assert rep.passed, (tag, rep.failures[:3])
        assert rep.bound_exponent > 6
    with pytest.raises(ValueError):
        parametrization_check(IdealCase("n2"), trials=0)


def test_parametrization_detects_nonmember():
    # the control polynomial is exactly a deliberately added non-member
    rep = parametrization_check(IdealCase("n3-z"), trials=10, seed=0)
    assert rep.control_detected


def test_parametrization_reproducible():
    a = parametrization_check(IdealCase("n3-x"), trials=15, seed=42)
    b = parametrization_check(IdealCase("n3-x"), trials=15, seed=42)
    assert (a.failures, a.control_detected, a.bound_exponent) == \
        (b.failures, b.control_detected, b.bound_exponent)


def test_span17():
    reports = span17_check(0)
    for ambient in ("traceless", "full-matrix"):
        r = reports[ambient]
        assert r.rank == 17 and r.quotient_free_rank == 17
        assert r.quotient_torsion == []
        assert r.snf_primes == {2}
    f5 = span17_check(5)["traceless"]
    assert f5.rank == 17 and f5.passed


def test_multiplicities():
    assert [multiplicity(w) for w in ((1, 0), (0, 1), (2, -1), (1, 1))] == [3, 3, 16, 8]
    with pytest.raises(UnsupportedCase):
        multiplicity((4, 4))


def test_gl_specialization_small():
    rep = gl_specialization_check("gl-n2", 5)
    assert rep.passed


def test_chart_symbolic():
    for tag in ("gl-n2", "gl-n3", "cnil"):
        assert chart_symbolic_check(tag).passed
    with pytest.raises(UnsupportedCase):
        chart_symbolic_check("n2")


def test_commutator_layer_quick():
    rep = commutator_layer_check(5, 3)
    assert rep.new_generators_degree2 == 8
    assert rep.hf_quotient.dims == rep.character_dims


def test_gl_ideal_members_vanish_on_unipotent_pairs():
    # direct spot check: the q = 1 gl-n2 generators vanish at Phi = Sigma = I
    data = build_case(IdealCase("gl-n2", 0, q=1))
    point = {"f11": 1, "f12": 0, "f21": 0, "f22": 1,
             "s11": 1, "s12": 0, "s21": 0, "s22": 1, "u": 1, "v": 1}
    vals = [point[nm] for nm in data.ring.names]
    from steinberg.cases import _eval_poly

    assert all(_eval_poly(g, vals) == 0 for g in data.gens)


def test_generators_reduce_to_zero_in_their_ideals():
    from steinberg.polyalg import normal_form

    for tag, bound in (("n3-z", 3), ("n3-x", 3), ("n2", 2)):
        ideal = make_ideal(IdealCase(tag, 5))
        gb = groebner(ideal, bound)
        for g in ideal.gens:
            assert not normal_form(g, gb)


def test_multiplicity_euler_characteristic_oracle():
    from steinberg.bwb import euler_char
    from steinberg.breps import WeightMultiset, build_rep

    # dominant cases: the fibre dimension is the section count of O(lam)
    for lam in ((1, 0), (0, 1), (1, 1)):
        assert multiplicity(lam) == euler_char(WeightMultiset([lam])).dimension()
    # the alpha case: minus the Euler characteristic of the twisted pair
    assert multiplicity((2, -1)) == -euler_char(build_rep("tw(2,-1)(b + b)")).dimension()
