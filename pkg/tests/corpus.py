"""Shared test materials."""

import numpy as np

from viscowave.acoustics import Material
from viscowave.duality import bf_to_crf
from viscowave.matfun import (
    BernsteinRepr,
    CrfRepr,
    ExpSumKernel,
    PowerKernel,
    StieltjesRepr,
    SumKernel,
    TableKernel,
)
from viscowave.measures import ExpDensity, PowerDensity, RadonMeasure, TableDensity

ATOM = RadonMeasure.atom(1.0, 1.0)


def bound_corpus():
    """Materials for the frequency-bound and round-trip checks (name, Material)."""
    return [
        ("atom", Material(bf_to_crf(BernsteinRepr(0.0, 0.0, ATOM)))),
        ("two-atoms", Material(bf_to_crf(
            BernsteinRepr(0.5, 0.0, RadonMeasure(atoms=((0.1, 2.0), (10.0, 1.0))))), 2.5)),
        ("maxwell", Material(CrfRepr(0.0, 0.0, ExpSumKernel(((1.0, 1.0),))))),
        ("prony", Material(CrfRepr(1.0, 0.0, ExpSumKernel(((1.0, 1.0), (0.5, 10.0)))))),
        ("slow-prony", Material(CrfRepr(0.0, 0.0, ExpSumKernel(((1.0, 1e-4),))))),
        ("power-0.3", Material(CrfRepr(1.0, 0.0, PowerKernel(1.0, 0.3)))),
        ("power-0.5", Material(CrfRepr(0.0, 0.5, PowerKernel(0.5, 0.5)))),
        ("power-0.8", Material(CrfRepr(0.2, 0.1, PowerKernel(2.0, 0.8)), 0.3)),
        ("elastic", Material(CrfRepr(1.0, 0.0))),
        ("newtonian", Material(CrfRepr(0.0, 1.0))),
        ("table", Material(CrfRepr(0.5, 0.0, TableKernel((0.5, 1.0, 2.0), (3.0, 2.0, 1.0))))),
        ("mixture", Material(CrfRepr(1.0, 0.2, SumKernel((
            PowerKernel(1.0, 0.5), ExpSumKernel(((2.0, 3.0),)),
            TableKernel((1.0,), (1.0,))))))),
    ]


def crf_corpus():
    """A broader set of creep compliances (at least 20) for duality checks."""
    out = [m.J for _, m in bound_corpus()]
    out += [
        CrfRepr(0.3, 0.0, PowerKernel(0.7, 0.1)),
        CrfRepr(0.0, 2.0, PowerKernel(1.5, 0.95)),
        CrfRepr(2.0, 3.0),
        CrfRepr(0.0, 0.0, ExpSumKernel(((3.0, 0.01), (2.0, 1.0), (1.0, 100.0)))),
        CrfRepr(0.1, 0.0, TableKernel((0.1, 0.2, 5.0), (10.0, 1.0, 0.5))),
        CrfRepr(0.0, 0.5, SumKernel((PowerKernel(0.2, 0.4), ExpSumKernel(((1.0, 5.0),))))),
        CrfRepr(1.0, 0.0, SumKernel((TableKernel((3.0,), (0.25,)), PowerKernel(1.0, 0.6)))),
        CrfRepr(0.0, 0.0, PowerKernel(1.0, 0.5)),
        CrfRepr(5.0, 0.01, ExpSumKernel(((0.1, 0.1),))),
    ]
    return out


def bernstein_corpus():
    """Bernstein triples whose measures mix atoms and densities."""
    return [
        BernsteinRepr(0.0, 0.0, ATOM),
        BernsteinRepr(1.0, 0.0),
        BernsteinRepr(3.0, 2.0, ATOM),
        BernsteinRepr(0.0, 0.0, RadonMeasure(density=ExpDensity(((1.0, 1.0),)))),
        BernsteinRepr(0.2, 0.1, RadonMeasure(density=PowerDensity(0.5, -1.5))),
        BernsteinRepr(0.0, 1.0, RadonMeasure(atoms=((0.5, 1.0), (4.0, 2.0)),
                                             density=ExpDensity(((2.0, 3.0),), lo=0.5))),
        BernsteinRepr(0.0, 0.0, RadonMeasure(density=TableDensity((0.5, 1.0, 3.0),
                                                                  (0.0, 2.0, 0.0)))),
    ]


def stieltjes_corpus():
    return [
        StieltjesRepr(0.0, 0.0, ATOM),
        StieltjesRepr(1.0, 2.0),
        StieltjesRepr(0.0, 1.0, RadonMeasure(atoms=((0.1, 1.0), (10.0, 3.0)))),
        StieltjesRepr(0.5, 0.0, RadonMeasure(density=PowerDensity(1.0, -0.5))),
        StieltjesRepr(0.0, 0.0, RadonMeasure(density=ExpDensity(((1.0, 2.0),)))),
        StieltjesRepr(0.0, 0.3, RadonMeasure(atoms=((2.0, 1.0),),
                                             density=TableDensity((0.5, 1.0, 2.0),
                                                                  (0.0, 1.0, 0.0)))),
    ]


def upper_half_plane(n, seed=0):
    rng = np.random.default_rng(seed)
    return rng.uniform(-20.0, 20.0, n) + 1j * 10.0 ** rng.uniform(-3.0, 2.0, n)
