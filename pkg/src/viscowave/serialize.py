"""JSON round-trips for measures, kernels, representations and materials.

The wire format is described by ``schemas/config-v1.schema.json``.  Infinite
upper support limits are written as ``null``.
"""

from __future__ import annotations

import json
import math
from functools import lru_cache
from importlib import resources
from typing import Any

import jsonschema

from .acoustics import Material
from .duality import bf_to_crf
from .errors import DomainError
from .matfun import (
    BernsteinRepr,
    CrfRepr,
    ExpSumKernel,
    Kernel,
    PowerKernel,
    StieltjesRepr,
    SumKernel,
    TableKernel,
    TailKernel,
)
from .measures import (
    Density,
    ExpDensity,
    PowerDensity,
    RadonMeasure,
    SumDensity,
    TableDensity,
)

__all__ = [
    "SCHEMA_VERSION",
    "load_schema",
    "validate_config",
    "density_to_dict",
    "density_from_dict",
    "measure_to_dict",
    "measure_from_dict",
    "kernel_to_dict",
    "kernel_from_dict",
    "crf_to_dict",
    "crf_from_dict",
    "bernstein_to_dict",
    "bernstein_from_dict",
    "stieltjes_from_dict",
    "material_to_dict",
    "material_from_dict",
]

SCHEMA_VERSION = 1
_SCHEMA_FILE = "config-v1.schema.json"


@lru_cache(maxsize=1)
def load_schema() -> dict:
    text = resources.files("viscowave.schemas").joinpath(_SCHEMA_FILE).read_text()
    return json.loads(text)


def _validate(instance: Any, ref: str | None = None) -> None:
    schema = load_schema()
    if ref is not None:
        schema = {"$defs": schema["$defs"], "$ref": f"#/$defs/{ref}"}
    try:
        jsonschema.validate(instance, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise DomainError(f"invalid {ref or 'config'} at {where}: {exc.message}") from None


def validate_config(cfg: dict) -> None:
    """Raise :class:`DomainError` unless ``cfg`` matches the config schema."""
    _validate(cfg)


def _hi_out(hi):
    return None if math.isinf(hi) else hi


def _hi_in(hi):
    return math.inf if hi is None else float(hi)


def _pairs(seq):
    return tuple((float(x), float(y)) for x, y in seq)


# -- densities and measures -------------------------------------------------


def density_to_dict(d: Density) -> dict:
    if isinstance(d, PowerDensity):
        return {"kind": "power", "c": d.c, "exponent": d.exponent, "lo": d.lo,
                "hi": _hi_out(d.hi)}
    if isinstance(d, ExpDensity):
        return {"kind": "exp", "terms": [list(t) for t in d.terms], "lo": d.lo,
                "hi": _hi_out(d.hi)}
    if isinstance(d, TableDensity):
        return {"kind": "table", "r": list(d.r), "values": list(d.values)}
    if isinstance(d, SumDensity):
        return {"kind": "sum", "components": [density_to_dict(c) for c in d.components]}
    raise TypeError(f"{type(d).__name__} has no JSON form")


def density_from_dict(obj: dict) -> Density:
    kind = obj["kind"]
    if kind == "power":
        return PowerDensity(float(obj["c"]), float(obj["exponent"]),
                            float(obj.get("lo", 0.0)), _hi_in(obj.get("hi")))
    if kind == "exp":
        return ExpDensity(_pairs(obj["terms"]), float(obj.get("lo", 0.0)),
                          _hi_in(obj.get("hi")))
    if kind == "table":
        return TableDensity(tuple(map(float, obj["r"])), tuple(map(float, obj["values"])))
    if kind == "sum":
        return SumDensity(tuple(density_from_dict(c) for c in obj["components"]))
    raise DomainError(f"unknown density kind {kind!r}")


def measure_to_dict(m: RadonMeasure) -> dict:
    return {"atoms": [list(a) for a in m.atoms],
            "density": None if m.density is None else density_to_dict(m.density)}


def measure_from_dict(obj: dict, validate: bool = True) -> RadonMeasure:
    if validate:
        _validate(obj, "measure")
    dens = obj.get("density")
    return RadonMeasure(atoms=_pairs(obj.get("atoms", ())),
                        density=None if dens is None else density_from_dict(dens))


# -- kernels ----------------------------------------------------------------


def kernel_to_dict(k: Kernel) -> dict:
    if isinstance(k, PowerKernel):
        return {"kind": "power", "c": k.c, "alpha": k.alpha}
    if isinstance(k, ExpSumKernel):
        return {"kind": "expsum", "terms": [list(t) for t in k.terms]}
    if isinstance(k, TableKernel):
        return {"kind": "table", "knots": list(k.knots), "levels": list(k.levels)}
    if isinstance(k, SumKernel):
        return {"kind": "sum", "components": [kernel_to_dict(c) for c in k.components]}
    if isinstance(k, TailKernel):
        return {"kind": "tail", "measure": measure_to_dict(k.measure)}
    raise TypeError(f"{type(k).__name__} has no JSON form")


def kernel_from_dict(obj: dict, validate: bool = True) -> Kernel:
    if validate:
        _validate(obj, "kernel")
    kind = obj["kind"]
    if kind == "power":
        return PowerKernel(float(obj["c"]), float(obj["alpha"]))
    if kind == "expsum":
        return ExpSumKernel(_pairs(obj["terms"]))
    if kind == "table":
        return TableKernel(tuple(map(float, obj["knots"])), tuple(map(float, obj["levels"])))
    if kind == "sum":
        return SumKernel(tuple(kernel_from_dict(c, False) for c in obj["components"]))
    if kind == "tail":
        return TailKernel(measure_from_dict(obj["measure"], False))
    raise DomainError(f"unknown kernel kind {kind!r}")


# -- representations ---------------------------------------------------------


def crf_to_dict(J: CrfRepr) -> dict:
    return {"a": J.a, "b": J.b, "kernel": kernel_to_dict(J.kernel)}


def crf_from_dict(obj: dict, validate: bool = True) -> CrfRepr:
    if validate:
        _validate(obj, "crf")
    kernel = obj.get("kernel")
    if kernel is None:
        return CrfRepr(float(obj.get("a", 0.0)), float(obj.get("b", 0.0)))
    return CrfRepr(float(obj.get("a", 0.0)), float(obj.get("b", 0.0)),
                   kernel_from_dict(kernel, False))


def bernstein_to_dict(g: BernsteinRepr) -> dict:
    return {"a": g.a, "b": g.b, "measure": measure_to_dict(g.measure)}


def bernstein_from_dict(obj: dict, validate: bool = True) -> BernsteinRepr:
    if validate:
        _validate(obj, "bernstein")
    m = measure_from_dict(obj.get("measure", {}), False)
    return BernsteinRepr(float(obj.get("a", 0.0)), float(obj.get("b", 0.0)), m)


def stieltjes_from_dict(obj: dict, validate: bool = True) -> StieltjesRepr:
    if validate:
        _validate(obj, "bernstein")
    m = measure_from_dict(obj.get("measure", {}), False)
    return StieltjesRepr(float(obj.get("a", 0.0)), float(obj.get("b", 0.0)), m)


def material_to_dict(mat: Material) -> dict:
    return {"rho": mat.rho, "crf": crf_to_dict(mat.J)}


def material_from_dict(obj: dict, validate: bool = True) -> Material:
    """Material from ``{"rho": ..., "crf": {...}}`` or ``{"rho": ..., "bernstein": {...}}``.

    A Bernstein description is mapped to its creep compliance first.
    """
    if validate:
        _validate(obj, "material")
    rho = float(obj.get("rho", 1.0))
    if "crf" in obj:
        return Material(crf_from_dict(obj["crf"], False), rho)
    return Material(bf_to_crf(bernstein_from_dict(obj["bernstein"], False)), rho)
