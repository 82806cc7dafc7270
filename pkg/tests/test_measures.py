import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import exp1

from viscowave.errors import DivergenceError, DomainError
from viscowave.measures import (
    ExpDensity,
    FunctionDensity,
    PowerDensity,
    RadonMeasure,
    SumDensity,
    TableDensity,
    check_bs1,
    check_licm,
    check_twoineq,
    integrate,
    integrate_density,
    tail_mass,
)

EXP = RadonMeasure(density=ExpDensity(((1.0, 1.0),)))


class TestIntegrate:
    def test_single_atom(self):
        assert integrate(RadonMeasure.atom(1.0, 2.0), lambda r: r / (1 + r)) == pytest.approx(1.0)

    def test_exponential_density_against_e1(self):
        oracle = 1.0 - math.e * exp1(1.0)
        assert integrate(EXP, lambda r: r / (1 + r)) == pytest.approx(oracle, rel=1e-10)
        assert oracle == pytest.approx(0.403653, abs=1e-6)

    def test_empty_measure(self):
        assert integrate(RadonMeasure(), math.cos) == 0.0

    def test_domain_is_half_open(self):
        m = RadonMeasure(atoms=((1.0, 1.0), (2.0, 5.0)))
        assert integrate(m, lambda r: 1.0, (0.0, 1.0)) == 1.0
        assert integrate(m, lambda r: 1.0, (1.0, 2.0)) == 5.0

    def test_non_finite_integrand_at_atom(self):
        with pytest.raises(DomainError):
            integrate(RadonMeasure.atom(1.0, 1.0), lambda r: math.inf)

    def test_power_density_moment(self):
        m = RadonMeasure(density=PowerDensity(1.0, -0.5, 0.0, 1.0))
        assert integrate(m, lambda r: 1.0) == pytest.approx(2.0, rel=1e-10)

    def test_table_density_is_piecewise_linear(self):
        m = RadonMeasure(density=TableDensity((0.0, 1.0, 3.0), (0.0, 2.0, 0.0)))
        assert integrate(m, lambda r: 1.0) == pytest.approx(3.0, rel=1e-12)

    def test_sum_density(self):
        d = SumDensity((ExpDensity(((1.0, 1.0),)), PowerDensity(1.0, 0.0, 0.0, 2.0)))
        assert integrate(RadonMeasure(density=d), lambda r: 1.0) == pytest.approx(3.0)

    def test_function_density(self):
        d = FunctionDensity(lambda r: math.exp(-r * r), hint=-math.inf)
        val = integrate(RadonMeasure(density=d), lambda r: 1.0)
        assert val == pytest.approx(math.sqrt(math.pi) / 2.0, rel=1e-10)

    def test_additive_over_domains(self):
        m = RadonMeasure(atoms=((0.5, 1.0),), density=PowerDensity(1.0, -1.5, 0.0, math.inf))
        phi = lambda r: r / (1.0 + r)  # noqa: E731
        whole = integrate(m, phi)
        parts = integrate(m, phi, (0.0, 1.0)) + integrate(m, phi, (1.0, math.inf))
        assert parts == pytest.approx(whole, rel=1e-9)

    def test_linear_in_integrand(self):
        phi = lambda r: 1.0 / (1.0 + r)  # noqa: E731
        psi = lambda r: r * math.exp(-r)  # noqa: E731
        lhs = integrate(EXP, lambda r: 2.0 * phi(r) - 3.0 * psi(r))
        rhs = 2.0 * integrate(EXP, phi) - 3.0 * integrate(EXP, psi)
        assert lhs == pytest.approx(rhs, rel=1e-9)

    def test_complex_integrand(self):
        val, _ = integrate_density(lambda r: np.exp(-r) * np.exp(1j * r), 0.0, math.inf)
        assert val == pytest.approx(1.0 / (1.0 - 1j), rel=1e-10)


class TestIntegrability:
    def test_bs1_atom(self):
        chk = check_bs1(RadonMeasure.atom(1.0, 2.0))
        assert chk.holds and chk.value == pytest.approx(1.0)

    def test_bs1_power_tail(self):
        chk = check_bs1(RadonMeasure(density=PowerDensity(1.0, -2.0, 1.0, math.inf)))
        assert chk.holds and chk.value == pytest.approx(math.log(2.0), rel=1e-9)

    def test_bs1_divergent_at_zero(self):
        assert not check_bs1(RadonMeasure(density=PowerDensity(1.0, -2.0, 0.0, 1.0))).holds

    def test_twoineq_examples(self):
        assert check_twoineq(RadonMeasure.atom(1.0, 1.0)) == (1.0, 0.0, True)
        assert check_twoineq(RadonMeasure(atoms=((0.5, 2.0), (2.0, 3.0)))) == (1.0, 3.0, True)
        head, tail, holds = check_twoineq(RadonMeasure(density=PowerDensity(1.0, -1.5, 0.0, 1.0)))
        assert holds and head == pytest.approx(2.0, rel=1e-9) and tail == 0.0

    def test_licm_examples(self):
        assert check_licm(RadonMeasure.atom(1.0, 4.0)) == (2.0, True)
        assert not check_licm(RadonMeasure(density=PowerDensity(1.0, 0.0))).holds
        chk = check_licm(RadonMeasure(density=PowerDensity(1.0, 0.5, 0.0, 1.0)))
        # int_0^1 sqrt(r)/(1+r) dr = 2 - pi/2
        assert chk.holds and chk.value == pytest.approx(2.0 - math.pi / 2.0, rel=1e-9)

    def test_atom_at_zero_is_rejected(self):
        with pytest.raises(DomainError):
            RadonMeasure.atom(0.0, 1.0)

    def test_negative_weight_is_rejected(self):
        with pytest.raises(DomainError):
            RadonMeasure(atoms=((1.0, -1.0),))

    def test_divergence_is_reported_by_integrate(self):
        with pytest.raises(DivergenceError):
            integrate(RadonMeasure(density=PowerDensity(1.0, 0.0)), lambda r: 1.0 / (1.0 + r))


class TestTailMass:
    def test_atom_boundaries(self):
        m = RadonMeasure.atom(1.0, 5.0)
        assert tail_mass(m, 0.5) == 5.0
        assert tail_mass(m, 1.0) == 0.0

    def test_exponential(self):
        assert tail_mass(EXP, 2.0) == pytest.approx(math.exp(-2.0), rel=1e-10)

    def test_rejects_non_positive(self):
        with pytest.raises(DomainError):
            tail_mass(EXP, 0.0)

    def test_non_increasing_and_vanishing(self):
        m = RadonMeasure(atoms=((0.3, 1.0), (3.0, 0.5)),
                         density=PowerDensity(0.5, -1.5, 0.0, math.inf))
        r = np.geomspace(1e-3, 1e6, 40)
        k = np.array([tail_mass(m, x) for x in r])
        assert np.all(np.diff(k) <= 1e-12)
        # density part of the tail is r**-0.5
        assert k[-1] == pytest.approx(1e-3, rel=1e-9)


# -- randomized measures ------------------------------------------------------

pos = st.floats(1e-3, 1e3)
weights = st.floats(0.0, 10.0)


@st.composite
def measures(draw):
    atoms = draw(st.lists(st.tuples(pos, weights), max_size=4))
    kind = draw(st.sampled_from(["none", "power", "exp", "table"]))
    dens = None
    if kind == "power":
        lo = draw(st.sampled_from([0.0, 0.5]))
        hi = draw(st.sampled_from([1.0, 4.0, math.inf]))
        dens = PowerDensity(draw(st.floats(0.1, 2.0)), draw(st.floats(-2.6, 0.6)), lo, hi)
    elif kind == "exp":
        dens = ExpDensity(((draw(st.floats(0.1, 2.0)), draw(st.floats(0.05, 20.0))),))
    elif kind == "table":
        dens = TableDensity((0.1, 1.0, 5.0), (draw(weights), draw(weights), 0.0))
    return RadonMeasure(atoms=tuple(atoms), density=dens)


@settings(max_examples=60, deadline=None)
@given(measures())
def test_bs1_and_twoineq_agree(m):
    assert check_bs1(m).holds == check_twoineq(m).holds


@settings(max_examples=30, deadline=None)
@given(measures())
def test_tail_mass_non_increasing(m):
    if not check_twoineq(m).holds:
        return
    r = np.geomspace(1e-2, 1e2, 12)
    k = [tail_mass(m, x) for x in r]
    assert all(b <= a * (1 + 1e-9) + 1e-12 for a, b in zip(k, k[1:]))
