from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from medians.construction import (
    Classification,
    Parameters,
    Route,
    assemble_triangle,
    closed_form,
    compute_mn,
    compute_pq_rational,
    compute_tu,
    construct,
    construct_grid,
    factorizations,
    integerize,
    mn_forms,
    square_conditions,
)
from medians.exceptions import DegenerateRatioError, ParameterError
from medians.triangle import duality_identities, verify

from conftest import FIRST_EXAMPLE, SECOND_EXAMPLE

pytestmark = pytest.mark.construction

ROUTES = [Route.RATIONAL_PIPELINE, Route.CLOSED_FORM]


def nondegenerate(f, g):
    return f != g and f != 3 * g


generators = st.integers(min_value=1, max_value=1000)


@pytest.mark.parametrize(
    "f,g,expected",
    [
        (2, 1, (Fraction(1, 4), Fraction(11, 16))),
        (1, 2, (Fraction(19, 16), Fraction(-31, 4))),
        (1, 1, (Fraction(1), Fraction(-1))),
    ],
)
def test_compute_mn(f, g, expected):
    assert compute_mn(Parameters(f, g)) == expected


@pytest.mark.parametrize(
    "m,n,expected",
    [
        (Fraction(1, 4), Fraction(11, 16), (Fraction(15, 4), Fraction(-975, 256))),
        (Fraction(19, 16), Fraction(-31, 4), (Fraction(-105, 4), Fraction(19425, 256))),
        (Fraction(3), Fraction(1), (Fraction(16), Fraction(0))),
    ],
)
def test_compute_pq_rational(m, n, expected):
    assert compute_pq_rational(m, n) == expected


@pytest.mark.parametrize(
    "p,q,expected",
    [
        (Fraction(15, 4), Fraction(-975, 256), (64, -65)),
        (Fraction(-105, 4), Fraction(19425, 256), (-64, 185)),
        (Fraction(3), Fraction(0), (1, 0)),
        (Fraction(0), Fraction(-5, 3), (0, -1)),
    ],
)
def test_integerize(p, q, expected):
    assert integerize(p, q) == expected


def test_integerize_zero_pair():
    with pytest.raises(DegenerateRatioError, match="degenerate ratio"):
        integerize(Fraction(0), Fraction(0))


@pytest.mark.parametrize(
    "m,n,p,q,expected",
    [
        (Fraction(1, 4), Fraction(11, 16), 64, -65, (-79, 51)),
        (Fraction(19, 16), Fraction(-31, 4), -64, 185, (-101, -471)),
        (Fraction(7, 3), Fraction(1, 5), 0, 9, (9, -9)),
    ],
)
def test_compute_tu(m, n, p, q, expected):
    assert compute_tu(m, n, p, q) == expected


@pytest.mark.parametrize(
    "f,g,m,n,p,q,expected",
    [
        (2, 1, Fraction(1, 4), Fraction(11, 16), 64, -65, (-131, 127, -158, 255, -261, 204)),
        (1, 2, Fraction(19, 16), Fraction(-31, 4), -64, 185, (619, -377, -404, 477, 975, -942)),
        (2, 1, Fraction(1, 4), Fraction(11, 16), 0, 0, (0, 0, 0, 0, 0, 0)),
    ],
)
def test_assemble_triangle(f, g, m, n, p, q, expected):
    assert assemble_triangle(Parameters(f, g), m, n, p, q) == expected


def test_closed_form_second_example():
    result = closed_form(Parameters(1, 2))
    assert (result.p, result.q, result.t, result.u) == (-64, 185, -101, -471)
    a, b, c, x, y, z = result.sextuple
    assert (c, z) == (-404, -942)
    assert (b - a, a + b, x + y, x - y) == (-996, 242, 1452, -498)


@pytest.mark.parametrize(
    "f,g,magnitudes",
    [(1, 1, (40, 32, 8)), (3, 1, (432, 216, 648))],
)
def test_closed_form_collinear(f, g, magnitudes):
    result = closed_form(Parameters(f, g))
    assert tuple(abs(v) for v in result.sextuple[:3]) == magnitudes


def test_first_example_pipeline():
    outcome = construct(Parameters(2, 1))
    trace = outcome.trace
    assert (trace.m, trace.n) == (Fraction(1, 4), Fraction(11, 16))
    assert (trace.p_rat, trace.q_rat) == (Fraction(15, 4), Fraction(-975, 256))
    assert (trace.p, trace.q) == (64, -65)
    assert (trace.t, trace.u) == (-79, 51)
    assert trace.raw == (-131, 127, -158, 255, -261, 204)
    assert outcome.classification is Classification.VALID
    assert outcome.triangle.as_tuple() == FIRST_EXAMPLE


@pytest.mark.parametrize("route", ROUTES, ids=lambda r: r.value)
def test_second_example(route):
    outcome = construct(Parameters(1, 2), route)
    assert (outcome.trace.p, outcome.trace.q) == (-64, 185)
    assert (outcome.trace.t, outcome.trace.u) == (-101, -471)
    assert outcome.triangle.as_tuple() == SECOND_EXAMPLE


def test_closed_form_trace_has_no_rationals():
    trace = construct(Parameters(1, 2), Route.CLOSED_FORM).trace
    assert trace.m is None and trace.p_rat is None


@pytest.mark.parametrize("route", ROUTES, ids=lambda r: r.value)
def test_degenerate_parameters(route):
    pairs = [(g, g) for g in range(1, 21)] + [(3 * g, g) for g in range(1, 7)]
    for f, g in pairs:
        outcome = construct(Parameters(f, g), route)
        assert outcome.classification is Classification.DEGENERATE, (f, g)
        assert outcome.triangle is None


def test_indeterminate_ratio_trace():
    trace = construct(Parameters(3, 1)).trace
    assert (trace.p_rat, trace.q_rat) == (0, 0)
    assert (trace.p, trace.q) == (0, 0)
    assert trace.raw == (0,) * 6


@pytest.mark.parametrize("f,g", [(0, 1), (1, -2), (True, 1), (1.5, 2)])
def test_parameters_must_be_positive_integers(f, g):
    with pytest.raises(ParameterError):
        Parameters(f, g)


def test_route_equivalence_sweep():
    for f in range(1, 31):
        for g in range(1, 31):
            if gcd(f, g) != 1 or not nondegenerate(f, g):
                continue
            pipeline = construct(Parameters(f, g), Route.RATIONAL_PIPELINE)
            closed = construct(Parameters(f, g), Route.CLOSED_FORM)
            assert pipeline.classification is closed.classification, (f, g)
            assert pipeline.triangle == closed.triangle, (f, g)
            if pipeline.is_valid:
                report = verify(pipeline.triangle.as_tuple())
                assert report.ok and report.primitive, (f, g)
                assert all(duality_identities(pipeline.triangle)), (f, g)


@pytest.mark.properties
@settings(max_examples=2_000, deadline=None)
@given(generators, generators)
def test_ratio_consistency(f, g):
    assume(nondegenerate(f, g))
    params = Parameters(f, g)
    pipeline = construct(params).trace
    closed = closed_form(params)
    assert closed.p * pipeline.q == closed.q * pipeline.p
    assert gcd(pipeline.p, pipeline.q) == 1


@pytest.mark.properties
@settings(max_examples=1_000, deadline=None)
@given(generators, generators, st.sampled_from(ROUTES))
def test_construction_identities(f, g, route):
    assume(nondegenerate(f, g))
    params = Parameters(f, g)
    trace = construct(params, route).trace
    a, b, c, x, y, z = trace.raw
    p, q = trace.p, trace.q
    conditions = square_conditions(params, p, q)
    assert x * x - y * y == 3 * (b * b - a * a)
    assert c * c == conditions["c2"]
    assert z * z == conditions["z2"]
    assert x * x + y * y == conditions["x2_plus_y2"]
    assert a * a + b * b == conditions["a2_plus_b2"]
    assert c == 2 * g * trace.t and z == 2 * f * trace.u


@pytest.mark.properties
@settings(max_examples=1_000, deadline=None)
@given(generators, generators)
def test_targeted_squares(f, g):
    assume(nondegenerate(f, g))
    trace = construct(Parameters(f, g)).trace
    base = trace.p * trace.p + trace.q * trace.q
    assert trace.t * trace.t == base + 2 * trace.m * trace.p * trace.q
    assert trace.u * trace.u == base + 2 * trace.n * trace.p * trace.q


@pytest.mark.properties
@settings(max_examples=1_000, deadline=None)
@given(generators, generators)
def test_mn_forms_match_unscaled_pair(f, g):
    params = Parameters(f, g)
    m, n = compute_mn(params)
    p, q = compute_pq_rational(m, n)
    c, z = mn_forms(params)
    assert c == g * (m - n) * p + 2 * g * q
    assert z == f * (m - n) * p - 2 * f * q


@pytest.mark.properties
@pytest.mark.timeout(120)
@settings(max_examples=10_000, deadline=None)
@given(generators, generators)
def test_factorizations(f, g):
    for name, (scaled, factored) in factorizations(Parameters(f, g)).items():
        assert scaled == factored, name


@pytest.mark.properties
@settings(max_examples=500, deadline=None)
@given(st.integers(min_value=1, max_value=200), st.integers(min_value=1, max_value=200),
       st.integers(min_value=1, max_value=50))
def test_scaling_parameters(f, g, k):
    base = construct(Parameters(f, g))
    scaled = construct(Parameters(k * f, k * g))
    assert scaled.classification is base.classification
    assert scaled.triangle == base.triangle


def test_construct_grid_order():
    results = construct_grid(range(1, 4), range(1, 3))
    assert [pair for pair, _ in results] == [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)]
    assert results[2][1].triangle.as_tuple() == FIRST_EXAMPLE


def test_construct_grid_workers_agree():
    serial = construct_grid(range(1, 7), range(1, 7), Route.CLOSED_FORM)
    parallel = construct_grid(range(1, 7), range(1, 7), Route.CLOSED_FORM, workers=2)
    assert serial == parallel
