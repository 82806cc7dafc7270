"""Acceptance criteria, one test per criterion.

Each test records a one-line verdict that ``conftest.py`` prints in the
terminal summary as ``ACCEPTANCE <n> PASS|FAIL: <detail>``.
"""

import math
import time

import numpy as np
import pytest

from corpus import bound_corpus, stieltjes_corpus, upper_half_plane
from viscowave.acoustics import (
    GaussianWindow,
    Material,
    bound_constants,
    curve,
    fit_powerlaw,
    greens_function,
    verify_bound,
    wavenumber,
)
from viscowave.duality import bf_to_crf, crf_to_bf
from viscowave.matfun import (
    BernsteinRepr,
    CrfRepr,
    ExpSumKernel,
    PowerKernel,
    cbf_power,
    cbf_product,
    check_bf_differences,
    classify_crf,
    eval_bf,
    limit_slope,
    nevanlinna_check,
    stretched_exp_creep,
)
from viscowave.measures import RadonMeasure

pytestmark = pytest.mark.acceptance


@pytest.fixture
def verdict(record_property):
    def _record(number, ok, detail):
        record_property("acceptance", f"ACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}: "
                                      f"{detail}")
        return ok
    return _record


def test_criterion_01_newtonian_exponent(verdict):
    t0 = time.perf_counter()
    mat = Material(CrfRepr(0.0, 1.0), 1.0)
    fit = fit_powerlaw(curve(mat, np.geomspace(1.0, 100.0, 200)), (1.0, 100.0))
    elapsed = time.perf_counter() - t0
    ok = (abs(fit.alpha - 0.5) <= 0.005
          and abs(fit.A - 1.0 / math.sqrt(2.0)) <= 0.01 / math.sqrt(2.0)
          and elapsed < 1.0)
    assert verdict(1, ok, f"alpha={fit.alpha:.6f} A={fit.A:.6f} ({elapsed:.3f} s)")


def test_criterion_02_linear_bound(verdict):
    t0 = time.perf_counter()
    grid = np.geomspace(1e-3, 1e6, 300)
    worst = -math.inf
    failures = []
    corpus = bound_corpus()
    for name, mat in corpus:
        rep = verify_bound(mat, grid)
        c = rep.constants
        scale = float(c.bound(grid[-1]))
        rel = rep.max_violation / scale
        worst = max(worst, rel)
        if not (rep.holds and rep.max_violation <= 1e-9 * scale):
            failures.append(name)
    elapsed = time.perf_counter() - t0
    ok = not failures and len(corpus) >= 10 and elapsed < 30.0
    assert verdict(2, ok, f"{len(corpus)} materials, worst violation/scale={worst:.3e}, "
                          f"failures={failures} ({elapsed:.1f} s)")


def test_criterion_03_duality_roundtrip(verdict):
    t = np.geomspace(1e-3, 1e3, 50)
    worst = 0.0
    for _, mat in bound_corpus():
        J = mat.J
        back = bf_to_crf(crf_to_bf(J))
        for x in t:
            j = J(x)
            worst = max(worst, abs(back(x) - j) / (1.0 + j))
    assert verdict(3, worst <= 1e-8, f"max |J'-J|/(1+J) = {worst:.3e}")


def test_criterion_04_classifier_fidelity(verdict):
    grid = np.linspace(0.01, 3.0, 300)
    f_half, _ = stretched_exp_creep(0.5)
    f_3half, _ = stretched_exp_creep(1.5)
    half = [check_bf_differences(f_half, n, grid, 0.05) for n in range(1, 9)]
    three = check_bf_differences(f_3half, 8, grid, 0.05)
    t = np.linspace(0.0, 4.0, 401)
    crf_ok = all(classify_crf(np.column_stack([t, f(t)])).passed for f in (f_half, f_3half))
    witness = three.witness
    near = witness is not None and abs(witness - 1.0 / 3.0) <= 0.05
    ok = all(v.passed for v in half) and not three.passed and crf_ok and near
    assert verdict(4, ok, f"alpha=1/2 bernstein={all(v.passed for v in half)} (orders 1..8); "
                          f"alpha=3/2 bernstein={three.passed} witness={witness:.4f} "
                          f"(target 1/3 +- 0.05); crf both={crf_ok}")


def test_criterion_05_limit_slope(verdict):
    g = BernsteinRepr(3.0, 2.0, RadonMeasure.atom(1.0, 1.0))
    diag = limit_slope(g, [1e2, 1e3, 1e4])
    gaps = [r - 2.0 for r in diag.ratios]
    decreasing = all(b < a for a, b in zip(diag.ratios, diag.ratios[1:]))
    within = all(abs(gap) <= lim for gap, lim in zip(gaps, (5e-2, 5e-3, 5e-4)))
    assert verdict(5, decreasing and within and diag.slope == 2.0,
                   f"f(T)/T - 2 = {', '.join(f'{x:.2e}' for x in gaps)}")


def test_criterion_06_sandwich(verdict):
    g = BernsteinRepr(0.0, 0.0, RadonMeasure.atom(1.0, 1.0))
    t = np.linspace(0.0, 100.0, 10_000)
    f = np.array([eval_bf(g, x) for x in t])
    direct = -np.expm1(-t)
    ulp = np.spacing(np.maximum(f, 1.0))
    lower = t / (1.0 + t) <= f + ulp
    upper = f <= 2.0 * t / (1.0 + t) + ulp
    same = np.abs(f - direct) <= ulp
    ok = bool(lower.all() and upper.all() and same.all())
    assert verdict(6, ok, f"{t.size} points, lower={int(lower.sum())} upper={int(upper.sum())}")


def _front_material():
    return Material(CrfRepr(1.0, 0.0, ExpSumKernel(((1.0, 1.0),))), 1.0)


def test_criterion_07_wavefront_causality(verdict):
    window = GaussianWindow(20.0)
    dt = math.pi / (6.5 * window.width)
    t = -0.5 + dt * np.arange(2048)
    sig = greens_function(_front_material(), 2.0, t, window)
    ok = sig.pre_front_energy < 1e-3 and abs(sig.front_arrival - 2.0) <= 2.0 * dt
    assert verdict(7, ok, f"pre-front energy={sig.pre_front_energy:.2e}, "
                          f"arrival={sig.front_arrival:.5f} (dt={dt:.4f})")


def test_criterion_08_high_frequency_slope(verdict):
    mat = _front_material()
    gaps = [abs(abs(wavenumber(mat, w)) / w - 1.0) for w in (1e3, 1e4, 1e5)]
    ok = gaps[0] > gaps[1] > gaps[2]
    assert verdict(8, ok, "| |kappa|/omega - 1 | = " + ", ".join(f"{g:.3e}" for g in gaps))


def test_criterion_09_cbf_suite(verdict):
    z = upper_half_plane(200, seed=1)
    corpus = stieltjes_corpus()
    members = [nevanlinna_check(s, z).passed for s in corpus]
    powers = [nevanlinna_check(cbf_power(s, a), z).passed
              for s in corpus for a in (0.0, 0.3, 0.5, 1.0)]
    products = [nevanlinna_check(cbf_product(f, g, a), z).passed
                for f, g in zip(corpus, corpus[1:] + corpus[:1]) for a in (0.25, 0.5)]
    negative = nevanlinna_check(lambda w: w * w, z).passed
    ok = all(members) and all(powers) and all(products) and not negative
    assert verdict(9, ok, f"members {sum(members)}/{len(members)}, powers "
                          f"{sum(powers)}/{len(powers)}, products {sum(products)}/"
                          f"{len(products)}, z^2 passes={negative}")


def test_criterion_10_low_frequency_exponent(verdict):
    mat = Material(CrfRepr(1.0, 0.0, PowerKernel(1.0, 0.5)), 1.0)
    band = (1e-4, 1e-2)
    fit = fit_powerlaw(curve(mat, np.geomspace(*band, 50)), band)
    oracle = fit_powerlaw(curve(mat, np.geomspace(*band, 500), route="laplace"), band)
    ok = abs(fit.alpha - oracle.alpha) <= 0.05
    assert verdict(10, ok, f"alpha={fit.alpha:.4f}, oracle={oracle.alpha:.4f} "
                           f"(low-frequency asymptote 1-alpha/2=0.75)")


def test_bound_constants_are_finite_for_corpus():
    # guards criterion 2 against silently skipping degenerate materials
    kinds = {name: bound_constants(mat).kind for name, mat in bound_corpus()}
    assert kinds["newtonian"] == "sqrt"
    assert all(k == "linear" for n, k in kinds.items() if n != "newtonian")
