import logging
from math import comb

import numpy as np
import pytest

from src.errors import UnresolvedEndpoint
from src.potentials.spec import PotentialSpec
from src.specmeasure.classify import (
    SpectralClass,
    classify_spectrum,
    classify_theta_sweep,
    find_gaps,
    interval_counts,
)
from src.specmeasure.crosscheck import bilateral_crosscheck, offset_robustness
from src.specmeasure.distribution import (
    compression_cdf,
    estimate_distribution,
    sup_distance,
    validate_grid,
    validate_schedule,
)
from src.specmeasure.empirical import EmpiricalMeasure, PiecewisePolynomial, cesaro_functional, counting
from src.specmeasure.moments import moment_match, trace_moments
from src.specmeasure.oracles import (
    arcsine_cdf,
    arcsine_mass,
    central_binomial_moments,
    closest_gap_label,
    free_eigenvalues,
    gap_labels,
    walk_count,
)
from src.tridiag.bisection import eigenvalues
from src.tridiag.matrix import TridiagonalMatrix, build_unilateral

TOL = 1e-10


def free_measure(n: int) -> EmpiricalMeasure:
    return EmpiricalMeasure(eigenvalues(TridiagonalMatrix(np.zeros(n)), TOL))


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def test_free_eigenvalues_increasing():
    values = free_eigenvalues(10)
    assert np.all(np.diff(values) > 0)
    assert values[-1] == pytest.approx(2 * np.cos(np.pi / 11))


def test_arcsine_mass_of_centre_interval():
    assert arcsine_mass(-0.1, 0.1) == pytest.approx(2 / np.pi * np.arcsin(0.05))
    assert arcsine_mass(-0.1, 0.1) == pytest.approx(0.03184, abs=1e-5)
    assert arcsine_cdf(-3.0) == 0.0 and arcsine_cdf(3.0) == 1.0


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_walk_enumeration_matches_central_binomial(m):
    assert walk_count(2 * m) == comb(2 * m, m) == central_binomial_moments(2 * m)[-1]


def test_gap_labels_sorted_in_unit_interval():
    labels = gap_labels(1.0, 5)
    assert labels[0] == 0.0 and labels[-1] == 1.0
    assert np.all(np.diff(labels) > 0)
    assert np.any(np.isclose(labels, 1.0 / (2 * np.pi)))


def test_closest_gap_label_exact_and_wrapped():
    assert closest_gap_label(1.0, 1.0 / (2 * np.pi), 5) == (1, 0.0)
    k, distance = closest_gap_label(1.0, 1.0 - 1.0 / (2 * np.pi) + 1e-3, 5)
    assert k == -1
    assert distance == pytest.approx(1e-3, abs=1e-12)
    # distance wraps around 1 to the k = 0 label
    k, distance = closest_gap_label(1.0, 0.999999, 5)
    assert k == 0
    assert distance == pytest.approx(1e-6, abs=1e-12)


def test_closest_gap_label_agrees_with_label_table():
    labels = gap_labels(0.7, 4)
    for ids in np.linspace(0.0, 1.0, 37):
        _, distance = closest_gap_label(0.7, ids, 4)
        offsets = np.abs(ids - labels)
        assert distance == pytest.approx(np.min(np.minimum(offsets, 1.0 - offsets)), abs=1e-15)


# ---------------------------------------------------------------------------
# Empirical measures
# ---------------------------------------------------------------------------

def test_total_mass_is_one(almost_mathieu):
    E = EmpiricalMeasure(eigenvalues(build_unilateral(almost_mathieu, 50), TOL))
    assert E.total_mass() == pytest.approx(1.0)
    assert cesaro_functional(E, PiecewisePolynomial.constant(1.0)) == pytest.approx(1.0)


def test_first_moment_of_two_site_chain():
    E = free_measure(2)
    assert cesaro_functional(E, PiecewisePolynomial.monomial(1)) == pytest.approx(0.0, abs=TOL)


def test_second_moment_of_free_chain():
    E = free_measure(10)
    want = np.mean(free_eigenvalues(10) ** 2)
    got = cesaro_functional(E, PiecewisePolynomial.monomial(2))
    assert got == pytest.approx(want, abs=1e-9)
    assert got == pytest.approx(1.8, abs=1e-9)


def test_polynomial_functional_is_linear_in_moments():
    E = free_measure(10)
    got = cesaro_functional(E, PiecewisePolynomial.polynomial([1.0, 0.0, 3.0]))
    assert got == pytest.approx(1.0 + 3.0 * 1.8, abs=1e-9)


def test_piecewise_indicator_is_half_open():
    f = PiecewisePolynomial.indicator(-1.0, 1.0)
    np.testing.assert_array_equal(f([-1.0, 0.0, 1.0, 1.5]), [0.0, 1.0, 1.0, 0.0])
    g = PiecewisePolynomial((0.0,), ((0.0, -1.0), (0.0, 1.0)))
    np.testing.assert_allclose(g([-2.0, 3.0]), [2.0, 3.0])
    with pytest.raises(ValueError):
        PiecewisePolynomial((1.0, 0.0), ((0.0,), (1.0,), (0.0,)))


@pytest.mark.parametrize("n, a, b, want", [
    (2, -2.0, 0.0, 1),
    (2, 5.0, 6.0, 0),
    (10, 0.0, 2.0, 5),
])
def test_counting(n, a, b, want):
    assert counting(free_measure(n), a, b) == want


def test_counting_rejects_unresolved_endpoint():
    E = free_measure(2)
    with pytest.raises(UnresolvedEndpoint) as info:
        counting(E, -0.5, 1.0)
    assert info.value.endpoint == 1.0
    with pytest.raises(ValueError):
        counting(E, 0.5, 0.5)


def test_cdf_of_empirical_measure():
    E = free_measure(2)
    np.testing.assert_allclose(E.cdf(np.array([-2.0, 0.0, 2.0])), [0.0, 0.5, 1.0])


# ---------------------------------------------------------------------------
# Distribution estimates
# ---------------------------------------------------------------------------

def test_free_cdfs_approach_arcsine(free_spec):
    grid = np.linspace(-2.5, 2.5, 501)
    est = estimate_distribution(free_spec, [10, 100, 1000], grid, TOL)
    dev = [sup_distance(cdf, arcsine_cdf(grid)) for cdf in est.cdfs]
    assert dev[-1] < 2e-3
    assert dev[0] > dev[1] > dev[2]
    assert list(est.to_frame().columns) == ["x", "n=10", "n=100", "n=1000"]


def test_arcsine_acceptance(free_spec):
    grid = np.linspace(-2.2, 2.2, 2001)
    cdf = compression_cdf(build_unilateral(free_spec, 4096), grid)
    assert sup_distance(cdf, arcsine_cdf(grid)) <= 2e-3


def test_single_dimension_schedule(almost_mathieu):
    grid = np.linspace(-4.5, 4.5, 101)
    est = estimate_distribution(almost_mathieu, [64], grid, TOL)
    np.testing.assert_array_equal(est.limit_cdf, compression_cdf(build_unilateral(almost_mathieu, 64), grid))
    assert not est.convergence_profile.any()
    assert est.cauchy_sups.size == 0
    assert est.richardson_cdf is None


def test_cauchy_differences_shrink(almost_mathieu):
    grid = np.linspace(-4.2, 4.2, 841)
    est = estimate_distribution(almost_mathieu, [256, 512, 1024, 2048], grid, TOL)
    sups = est.cauchy_sups
    assert sups.size == 3
    assert sups[-1] < sups[0]

    richardson = est.richardson_cdf
    assert richardson is not None
    assert np.all((richardson >= 0) & (richardson <= 1))
    assert np.all(np.diff(richardson) >= 0)


def test_estimate_independent_of_threads(almost_mathieu):
    grid = np.linspace(-4.5, 4.5, 201)
    a = estimate_distribution(almost_mathieu, [100, 200, 400], grid, TOL, n_jobs=1)
    b = estimate_distribution(almost_mathieu, [100, 200, 400], grid, TOL, n_jobs=3)
    np.testing.assert_array_equal(a.cdfs, b.cdfs)


def test_narrow_grid_warns(free_spec, caplog):
    with caplog.at_level(logging.WARNING):
        estimate_distribution(free_spec, [20], np.linspace(-1.0, 1.0, 11), TOL)
    assert "Gershgorin" in caplog.text


@pytest.mark.parametrize("schedule", [[], [10, 10], [0, 5], [20, 10]])
def test_bad_schedules(schedule):
    with pytest.raises(ValueError, match="schedule"):
        validate_schedule(schedule)


def test_bad_grids():
    with pytest.raises(ValueError):
        validate_grid([0.0])
    with pytest.raises(ValueError):
        validate_grid([1.0, 0.0])


# ---------------------------------------------------------------------------
# Moments
# ---------------------------------------------------------------------------

def test_trace_moments_of_free_operator(free_spec):
    trace = trace_moments(free_spec, 8, 50)
    np.testing.assert_array_equal(trace.moments, central_binomial_moments(8))
    assert trace.K == 8


def test_trace_moments_basics():
    assert trace_moments(PotentialSpec.constant(0.7), 1, 10).moments.tolist() == pytest.approx([1.0, 0.7])
    assert trace_moments(PotentialSpec.almost_mathieu(1.0), 0, 3).moments.tolist() == [1.0]
    with pytest.raises(ValueError, match="window_radius"):
        trace_moments(PotentialSpec.constant(0.0), 4, 4)


def test_trace_moments_stay_within_norm_bound(caplog):
    c = -1.5
    with caplog.at_level(logging.WARNING, logger="src.specmeasure.moments"):
        trace = trace_moments(PotentialSpec.constant(c), 14, 40)
    assert not [r for r in caplog.records if r.levelno >= logging.WARNING]
    assert trace.bound == pytest.approx(abs(c) + 2.0)
    free = central_binomial_moments(14)
    for k in range(15):
        want = sum(comb(k, j) * c ** (k - j) * free[j] for j in range(k + 1))
        assert trace.moments[k] == pytest.approx(want, rel=1e-12, abs=1e-9)
        assert abs(trace.moments[k]) <= trace.bound ** k


def test_second_trace_moment_is_mean_square_plus_two(almost_mathieu):
    R = 5_000
    trace = trace_moments(almost_mathieu, 2, R)
    d = 2 * np.cos(np.arange(-R, R + 1))
    assert trace.moments[1] == pytest.approx(np.mean(d), abs=1e-12)
    assert trace.moments[2] == pytest.approx(np.mean(d ** 2) + 2.0, abs=1e-12)


def test_moment_match_zeroth_moment_exact(almost_mathieu):
    report = moment_match(almost_mathieu, [64], 0, 10)
    assert report.abs_diff.tolist() == [0.0]


def test_moment_match_free_operator(free_spec):
    report = moment_match(free_spec, [512, 2048], 6, 100)
    assert report.n == 2048
    assert report.flagged.size == 0
    np.testing.assert_allclose(report.cesaro[1::2], 0.0, atol=1e-7)
    assert report.abs_diff[2] == pytest.approx(2.0 / 2048, abs=1e-9)
    assert list(report.to_frame().columns) == ["k", "cesaro", "trace", "abs_diff"]


def test_moment_match_explicit_threshold(free_spec):
    report = moment_match(free_spec, [256], 4, 50, tol=1e-6)
    assert set(report.flagged.tolist()) == {2, 4}


@pytest.mark.slow
def test_moment_acceptance(almost_mathieu):
    report = moment_match(almost_mathieu, [4096], 6, 100_000)
    bound = 10.0 * np.maximum(1.0, np.abs(report.trace)) / np.sqrt(4096)
    assert np.all(report.abs_diff <= bound)


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

SCHEDULE = (256, 512, 1024)


def test_free_centre_is_in_spectrum_and_outside_is_gap(free_spec):
    report = classify_spectrum(free_spec, np.array([0.0, 3.0]), 0.1, SCHEDULE)
    assert report.labels == (SpectralClass.IN, SpectralClass.GAP)
    assert report.evidence[0] >= 1e-3
    assert report.evidence[1] == 0


def test_gap_dichotomy_for_free_operator(free_spec):
    schedule = [256, 512, 1024, 2048, 4096]
    for n in schedule:
        assert interval_counts(free_spec, n, np.array([2.6]), 0.1)[0] == 0
    for n in schedule[2:]:
        density = interval_counts(free_spec, n, np.array([0.0]), 0.1)[0] / n
        assert density == pytest.approx(arcsine_mass(-0.1, 0.1), rel=0.2)


def test_point_meeting_both_criteria_is_undecided(free_spec):
    report = classify_spectrum(free_spec, np.array([0.0]), 0.1, [100, 200], density_floor=1e-3, gap_cap=100)
    assert report.labels == (SpectralClass.UND,)


def test_find_gaps_on_free_operator(free_spec):
    grid = np.linspace(-3.5, 3.5, 71)
    report = classify_spectrum(free_spec, grid, 0.05, SCHEDULE)
    gaps = find_gaps(report)
    assert len(gaps) == 2
    left, right = gaps
    assert left.first_center == pytest.approx(-3.5)
    assert left.start == pytest.approx(-3.55)
    assert right.end == pytest.approx(3.55)
    assert left.max_count == right.max_count == 0
    assert set(report.to_frame().columns) == {"x", "class", "evidence", "h", "floor", "cap"}


def test_classification_argument_checks(free_spec):
    with pytest.raises(ValueError, match="h"):
        classify_spectrum(free_spec, [0.0], 0.0, SCHEDULE)
    with pytest.raises(ValueError, match="gap_cap"):
        classify_spectrum(free_spec, [0.0], 0.1, SCHEDULE, gap_cap=-1)


def test_theta_sweep(almost_mathieu):
    grid = np.linspace(-4.2, 4.2, 43)
    sweep = classify_theta_sweep(almost_mathieu, [0.25, 0.5], grid, 0.1, (32, 64))
    assert [t for t, _ in sweep] == [0.25, 0.5]
    threaded = classify_theta_sweep(almost_mathieu, [0.25, 0.5], grid, 0.1, (32, 64), n_jobs=2)
    assert [r.labels for _, r in sweep] == [r.labels for _, r in threaded]
    with pytest.raises(ValueError):
        classify_theta_sweep(PotentialSpec.constant(0.0), [0.5], grid, 0.1, (32,))


@pytest.mark.slow
def test_almost_mathieu_gaps_carry_labels(almost_mathieu):
    grid = np.linspace(-4.2, 4.2, 841)
    report = classify_spectrum(almost_mathieu, grid, 0.005, (512, 1024, 2048))
    # runs touching the grid ends lie outside the spectrum
    interior = [g for g in find_gaps(report)
                if g.first_center > grid[0] and g.last_center < grid[-1]]
    assert interior

    widest = max(interior, key=lambda g: g.end - g.start)
    centre = 0.5 * (widest.first_center + widest.last_center)
    n = 2048
    ids = compression_cdf(build_unilateral(almost_mathieu, n), np.array([centre]))[0]
    _, distance = closest_gap_label(1.0, ids, 3)
    assert distance <= 20.0 / n

    # the witnessed gap persists at a larger dimension
    assert interval_counts(almost_mathieu, 4096, np.array([centre]), 0.005)[0] <= report.gap_cap


# ---------------------------------------------------------------------------
# Cross-checks
# ---------------------------------------------------------------------------

def test_constant_bilateral_matches_unilateral():
    report = bilateral_crosscheck(PotentialSpec.constant(0.4), [4, 16], np.linspace(-3, 3, 61))
    assert report.distances.tolist() == [0.0, 0.0]
    assert report.dimensions.tolist() == [9, 33]


def test_symmetric_explicit_potential_distance_recorded(rng):
    m = 200
    half = rng.uniform(-1.0, 1.0, size=2 * m + 2)
    samples = np.concatenate([half[:0:-1], half])
    spec = PotentialSpec.explicit(samples, origin=-(2 * m + 1))
    report = bilateral_crosscheck(spec, [m], np.linspace(-3.5, 3.5, 141))
    assert 0.0 < report.distances[0] < 0.25


def test_bilateral_distances_shrink(almost_mathieu):
    report = bilateral_crosscheck(almost_mathieu, [128, 256, 512], np.linspace(-4.2, 4.2, 841))
    assert report.distances[-1] < report.distances[0]
    assert list(report.to_frame().columns) == ["m", "dimension", "sup_distance"]


def test_offset_robustness(almost_mathieu):
    grid = np.linspace(-4.2, 4.2, 421)
    assert set(offset_robustness(PotentialSpec.constant(1.0), 64, grid).values()) == {0.0}
    distances = offset_robustness(almost_mathieu, 1024, grid)
    assert distances[0] == 0.0
    assert max(distances.values()) < 0.05


@pytest.mark.slow
def test_bilateral_acceptance(almost_mathieu):
    grid = np.linspace(-4.2, 4.2, 2001)
    bilateral = bilateral_crosscheck(almost_mathieu, [1024], grid)
    cauchy = estimate_distribution(almost_mathieu, [1024, 2048], grid, TOL).cauchy_sups[-1]
    assert bilateral.distances[0] <= 3.0 * cauchy
