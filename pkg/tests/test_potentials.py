import logging
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from src.errors import ExplicitOutOfRange, PotentialSpecError
from src.potentials.means import (
    default_offsets,
    describe_potential,
    mean_profile,
    periodicity_check,
    von_neumann_mean,
)
from src.potentials.sequence import angle_words, reduced_angles, sample_sequence
from src.potentials.spec import (
    PotentialKind,
    PotentialSpec,
    TrigTerm,
    potential_bound,
    potential_from_mapping,
    potential_to_mapping,
)


# ---------------------------------------------------------------------------
# sample_sequence
# ---------------------------------------------------------------------------

def test_constant_window():
    spec = PotentialSpec.constant(1.5)
    assert sample_sequence(spec, -2, 2).tolist() == [1.5] * 5


def test_cosine_at_zero_is_v_of_one():
    spec = PotentialSpec.almost_mathieu(theta=0.7315)
    assert sample_sequence(spec, 0, 0)[0] == pytest.approx(2.0, abs=1e-15)


def test_almost_mathieu_first_site(almost_mathieu):
    assert sample_sequence(almost_mathieu, 1, 1)[0] == pytest.approx(1.0806046117362795, abs=1e-15)


@pytest.mark.parametrize("centre", [0, 1_000, -123_457, 10_000_000])
def test_cosine_matches_high_precision(almost_mathieu, centre):
    mpmath.mp.dps = 40
    n = np.arange(centre - 8, centre + 9)
    got = sample_sequence(almost_mathieu, int(n[0]), int(n[-1]))
    want = np.array([float(2 * mpmath.cos(mpmath.mpf(int(k)))) for k in n])
    np.testing.assert_allclose(got, want, rtol=0, atol=1e-14)


def test_theta_over_pi_matches_high_precision():
    mpmath.mp.dps = 40
    t = 0.3183098861837907
    spec = PotentialSpec.cosine((0.5, -1.0, 0.25), theta_over_pi=t)
    n = np.arange(9_999_990, 10_000_010)
    got = sample_sequence(spec, int(n[0]), int(n[-1]))
    want = []
    for k in n:
        c = mpmath.cos(int(k) * mpmath.mpf(t) * mpmath.pi)
        want.append(float(0.5 - c + 0.25 * c ** 2))
    np.testing.assert_allclose(got, np.array(want), rtol=0, atol=1e-14)


def test_rational_multiple_of_pi_is_periodic_to_roundoff():
    spec = PotentialSpec.cosine((0.0, 2.0), theta_over_pi=0.4)
    d = sample_sequence(spec, 0, 10_005)
    assert np.max(np.abs(d[5:] - d[:-5])) < 1e-12


def test_reduced_angles_stay_near_principal_range():
    hi, lo = angle_words(0.0, theta_over_pi=0.77)
    r = reduced_angles(np.arange(-50_000, 50_000, 7), hi, lo)
    assert np.all(np.abs(r) <= np.pi + 1e-12)


def test_trig_polynomial_sum():
    spec = PotentialSpec.trig([(1.0, 0.5, 0.0), (0.25, 2.0, 1.0)])
    n = np.arange(-3, 4)
    want = np.cos(0.5 * n) + 0.25 * np.cos(2.0 * n + 1.0)
    np.testing.assert_allclose(sample_sequence(spec, -3, 3), want, atol=1e-15)


def test_explicit_window_and_range():
    spec = PotentialSpec.explicit([7.0, 8.0, 9.0], origin=-1)
    assert sample_sequence(spec, -1, 1).tolist() == [7.0, 8.0, 9.0]
    assert sample_sequence(spec, 0, 0).tolist() == [8.0]
    with pytest.raises(ExplicitOutOfRange):
        sample_sequence(spec, -2, 1)


def test_reversed_range_rejected(free_spec):
    with pytest.raises(ValueError, match="lo=3"):
        sample_sequence(free_spec, 3, 2)


# ---------------------------------------------------------------------------
# PotentialSpec validation and codec
# ---------------------------------------------------------------------------

def test_cosine_needs_exactly_one_angle():
    with pytest.raises(PotentialSpecError):
        PotentialSpec.cosine((0.0, 2.0))
    with pytest.raises(PotentialSpecError):
        PotentialSpec.cosine((0.0, 2.0), theta=1.0, theta_over_pi=0.5)


@pytest.mark.parametrize("kwargs, key", [
    (dict(kind="cosine", coeffs=(), theta=1.0), "coeffs"),
    (dict(kind="cosine", coeffs=(1.0, np.nan), theta=1.0), "coeffs"),
    (dict(kind="trig"), "terms"),
    (dict(kind="explicit"), "samples"),
    (dict(kind="spiral"), "kind"),
])
def test_invalid_specs_name_their_key(kwargs, key):
    with pytest.raises(PotentialSpecError) as info:
        PotentialSpec(**kwargs)
    assert info.value.key == key


def test_polynomial_degree_cap():
    with pytest.raises(PotentialSpecError, match="degree"):
        PotentialSpec.cosine([1.0] * 66, theta=1.0)


def test_bound_covers_samples(rng):
    spec = PotentialSpec.cosine(tuple(rng.normal(size=5)), theta=0.913)
    d = sample_sequence(spec, -2_000, 2_000)
    assert np.max(np.abs(d)) <= potential_bound(spec) + 1e-12
    assert potential_bound(PotentialSpec.almost_mathieu(1.0, coupling=1.5)) == pytest.approx(3.0)
    assert potential_bound(PotentialSpec.explicit([-4.0, 1.0])) == 4.0


def test_mapping_with_fraction_angle():
    spec = potential_from_mapping({"kind": "cosine", "coeffs": "0, 2", "theta_over_pi": "1/3"})
    assert spec.kind is PotentialKind.COSINE_COMPOSED
    assert spec.theta_over_pi == float(Fraction(1, 3))
    assert spec.theta == pytest.approx(np.pi / 3)


def test_mapping_trig_terms_and_back():
    block = {"kind": "trig", "terms": "1 0.5; 0.25 2 1"}
    spec = potential_from_mapping(block)
    assert spec.terms == (TrigTerm(1.0, 0.5, 0.0), TrigTerm(0.25, 2.0, 1.0))
    assert potential_from_mapping(potential_to_mapping(spec)) == spec


@pytest.mark.parametrize("block, key", [
    ({}, "kind"),
    ({"kind": "cosine", "coeffs": "0 2"}, "theta"),
    ({"kind": "cosine", "coeffs": "0 x", "theta": "1"}, "coeffs"),
    ({"kind": "trig", "terms": "1 2 3 4"}, "terms"),
    ({"kind": "constant"}, "value"),
    ({"kind": "explicit", "samples": "1, 2", "origin": "a"}, "origin"),
])
def test_mapping_errors_name_their_key(block, key):
    with pytest.raises(PotentialSpecError) as info:
        potential_from_mapping(block)
    assert info.value.key == key


# ---------------------------------------------------------------------------
# Means and periodicity
# ---------------------------------------------------------------------------

def test_constant_mean_has_no_defect():
    est = von_neumann_mean(PotentialSpec.constant(3.0), 500)
    assert est.value == 3.0
    assert est.uniformity_defect == 0.0
    assert est.offsets == tuple(default_offsets(500))


def test_single_character_mean_obeys_geometric_bound():
    R, phi = 10_000, 2.0
    est = von_neumann_mean(PotentialSpec.trig([(1.0, phi, 0.0)]), R)
    bound = 2.0 / ((2 * R + 1) * abs(1.0 - np.exp(1j * phi)))
    assert abs(est.value) <= bound * (1 + 1e-9)


def test_cosine_mean_matches_partial_sum_formula():
    R = 100_000
    est = von_neumann_mean(PotentialSpec.cosine((0.0, 1.0), theta=1.0), R)
    exact = np.sin(R + 0.5) / ((2 * R + 1) * np.sin(0.5))
    assert est.value == pytest.approx(exact, abs=1e-12)
    assert abs(est.value) < 1e-3


def test_mean_is_linear():
    R = 1_000
    a = PotentialSpec.trig([(1.0, 0.7, 0.3)])
    b = PotentialSpec.trig([(2.0, 1.3, 0.0)])
    combo = PotentialSpec.trig([(2.0, 0.7, 0.3), (-6.0, 1.3, 0.0)])
    lhs = von_neumann_mean(combo, R).value
    rhs = 2.0 * von_neumann_mean(a, R).value - 3.0 * von_neumann_mean(b, R).value
    assert lhs == pytest.approx(rhs, abs=1e-12 * R * 8.0)


def test_defect_bounds_every_offset(almost_mathieu):
    R = 2_000
    est = von_neumann_mean(almost_mathieu, R)
    for k in est.offsets:
        shifted = float(np.mean(sample_sequence(almost_mathieu, k - R, k + R)))
        assert abs(shifted - est.value) <= est.uniformity_defect + 1e-15


def test_mean_rejects_bad_arguments(free_spec):
    with pytest.raises(ValueError, match="window_radius"):
        von_neumann_mean(free_spec, 0)
    with pytest.raises(ValueError, match="offsets"):
        von_neumann_mean(free_spec, 10, offsets=[])


def test_mean_profile_quiet_for_constant(caplog):
    with caplog.at_level(logging.WARNING):
        estimates = mean_profile(PotentialSpec.constant(-1.0), [10, 100, 1_000])
    assert [e.window_radius for e in estimates] == [10, 100, 1_000]
    assert not [r for r in caplog.records if r.levelno >= logging.WARNING]


def test_constant_is_periodic_one():
    result = periodicity_check(PotentialSpec.constant(0.25), max_period=10, tol=1e-9)
    assert result.period == 1
    assert str(result) == "periodic(1)"


@pytest.mark.parametrize("spec", [
    PotentialSpec.cosine((0.0, 2.0), theta=np.pi / 3),
    PotentialSpec.cosine((0.0, 2.0), theta_over_pi=1.0 / 3.0),
])
def test_sixth_of_a_turn_is_periodic_six(spec):
    assert periodicity_check(spec, max_period=1_000, tol=1e-9).period == 6


def test_one_radian_has_no_short_period(almost_mathieu):
    result = periodicity_check(almost_mathieu, max_period=1_000, tol=1e-9)
    assert not result.periodic
    assert str(result) == "no_period_up_to(1000)"


def test_describe_potential(almost_mathieu):
    info = describe_potential(almost_mathieu, max_period=500)
    assert info["kind"] == "cosine"
    assert info["bound"] == 2.0
    assert info["claimed_nonperiodic"] is True
    assert describe_potential(PotentialSpec.constant(1.0), max_period=5)["period"] == 1
