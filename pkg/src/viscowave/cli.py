"""Command-line front end.

Every subcommand reads an optional JSON config (``--config``) validated
against ``schemas/config-v1.schema.json``; flags override config entries.

Exit codes: 0 success (bound holds), 1 bound violated, 2 configuration,
input or numerical error (a JSON object on stderr), 3 power-law fit
impossible.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import __version__
from .acoustics import (
    AttenuationCurve,
    GaussianWindow,
    Material,
    bound_constants,
    curve,
    fit_powerlaw,
    greens_function,
    verify_bound,
    wavefront_speed,
)
from .errors import FitError, PrecisionError, ViscowaveError
from .matfun import (
    check_bf_differences,
    classify_crf,
    eval_bf,
    nevanlinna_check,
    stretched_exp_creep,
)
from .serialize import (
    bernstein_from_dict,
    crf_from_dict,
    material_from_dict,
    stieltjes_from_dict,
    validate_config,
)

__all__ = ["main", "build_parser", "parse_grid", "parse_band"]

EXIT_OK, EXIT_VIOLATED, EXIT_CONFIG, EXIT_FIT = 0, 1, 2, 3

DEFAULT_GRID = "1e-3:1e6:300:log"
DEFAULT_FIT_GRID = "1e-2:1e2:200:log"
DEFAULT_CLASSIFY_GRID = "0.01:3:300:lin"
DEFAULT_ORDER = 8
DEFAULT_STEP = 0.05
DEFAULT_WIDTH = 20.0
DEFAULT_X = 1.0
# Longest synthesis record the green command builds on its own.
_MAX_SAMPLES = 2**20


class ConfigError(ViscowaveError):
    """Bad command-line input or configuration."""


# -- parsing helpers --------------------------------------------------------


def parse_grid(spec: Any, default_spacing: str = "log") -> np.ndarray:
    """``"lo:hi:n[:log|lin]"``, ``{"lo", "hi", "n", "spacing"}`` or an explicit list."""
    if isinstance(spec, (list, tuple)):
        return np.asarray(spec, dtype=float)
    if isinstance(spec, dict):
        lo, hi, n = spec["lo"], spec["hi"], spec["n"]
        spacing = spec.get("spacing", default_spacing)
    else:
        parts = str(spec).split(":")
        if len(parts) not in (3, 4):
            raise ConfigError(f"grid must look like lo:hi:n[:log|lin], got {spec!r}")
        try:
            lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise ConfigError(f"cannot parse grid {spec!r}") from None
        spacing = parts[3] if len(parts) == 4 else default_spacing
    lo, hi, n = float(lo), float(hi), int(n)
    if spacing not in ("log", "lin"):
        raise ConfigError(f"grid spacing must be log or lin, got {spacing!r}")
    if n < 0 or (n > 1 and not hi > lo):
        raise ConfigError(f"grid needs hi > lo and n >= 0, got {spec!r}")
    if spacing == "log":
        if lo <= 0.0:
            raise ConfigError("log grid needs lo > 0")
        return np.geomspace(lo, hi, n)
    return np.linspace(lo, hi, n)


def parse_band(spec: Any) -> tuple[float, float]:
    if isinstance(spec, (list, tuple)):
        vals = spec
    else:
        vals = str(spec).split(":")
    try:
        lo, hi = (float(v) for v in vals)
    except ValueError:
        raise ConfigError(f"band must look like lo:hi, got {spec!r}") from None
    if not 0.0 < lo < hi:
        raise ConfigError(f"band needs 0 < lo < hi, got {spec!r}")
    return lo, hi


def _clean(obj):
    """Replace non-finite floats by ``None`` so the JSON stays standard."""
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return v if math.isfinite(v) else None
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def _dumps(obj) -> str:
    return json.dumps(_clean(obj), indent=2, allow_nan=False) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- configuration ----------------------------------------------------------


def _read_json(path: Path) -> Any:
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_config(args) -> tuple[dict, Path]:
    base = Path.cwd()
    cfg: dict = {}
    if args.config:
        path = Path(args.config)
        cfg = _read_json(path)
        if not isinstance(cfg, dict):
            raise ConfigError("config must be a JSON object")
        base = path.parent
    if getattr(args, "material", None):
        raw = args.material.strip()
        cfg["material"] = json.loads(raw) if raw.startswith("{") else raw
        if not raw.startswith("{"):
            base = Path.cwd()
    validate_config(cfg)
    return cfg, base


def _material(cfg: dict, base: Path) -> Material:
    spec = cfg.get("material")
    if spec is None:
        raise ConfigError("no material given (config 'material' or --material)")
    if isinstance(spec, str):
        path = Path(spec)
        if not path.is_absolute():
            path = base / path
        spec = _read_json(path)
    return material_from_dict(spec)


def _setting(args, cfg, name, default=None):
    val = getattr(args, name, None)
    if val is not None:
        return val
    return cfg.get(name, default)


# -- subcommands --------------------------------------------------------------


def cmd_curves(args, cfg, base) -> int:
    mat = _material(cfg, base)
    grid = parse_grid(_setting(args, cfg, "grid", DEFAULT_GRID))
    route = _setting(args, cfg, "route", "spectral")
    c = curve(mat, grid, route=route)
    _emit(c.to_csv(), _setting(args, cfg, "out"))
    return EXIT_OK


def _classify_target(cfg, base):
    """Return ``(f, samples_only_data, stieltjes_or_None, label)``."""
    fn = cfg.get("function")
    if fn is None:
        J = _material(cfg, base).J
        return J, None, None, "material creep compliance"
    kind = fn["kind"]
    if kind == "stretched_exp":
        f, _ = stretched_exp_creep(fn["alpha"])
        return f, None, None, f"stretched exponential creep, alpha={fn['alpha']}"
    if kind == "power_law":
        c, e = float(fn.get("c", 1.0)), float(fn["exponent"])
        return (lambda t: c * np.asarray(t, float) ** e), None, None, f"{c} t^{e}"
    if kind == "crf":
        return crf_from_dict(fn["crf"]), None, None, "creep compliance"
    if kind == "bernstein":
        g = bernstein_from_dict(fn["bernstein"])
        return (lambda t: eval_bf(g, t)), None, None, "Bernstein representation"
    if kind == "stieltjes":
        s = stieltjes_from_dict(fn["stieltjes"])
        return (lambda t: s(t).real), None, s, "complete Bernstein representation"
    data = np.column_stack([fn["t"], fn["f"]])
    return None, data, None, "samples"


def _guarded(fn):
    try:
        return fn().to_dict()
    except PrecisionError as exc:
        return {"pass": None, "error": "precision", "message": str(exc)}


def cmd_classify(args, cfg, base) -> int:
    opts = cfg.get("classify", {})
    f, data, stieltjes, label = _classify_target(cfg, base)
    grid = parse_grid(_setting(args, cfg, "grid", opts.get("grid", DEFAULT_CLASSIFY_GRID)),
                      default_spacing="lin")
    tol = _setting(args, cfg, "tolerance", 1e-9)
    order = int(getattr(args, "order", None) or opts.get("order", DEFAULT_ORDER))
    h = float(getattr(args, "step", None) or opts.get("h", DEFAULT_STEP))
    report: dict[str, Any] = {"function": label}
    if data is None:
        t = grid[grid >= 0.0]
        data = np.column_stack([t, [float(f(x)) for x in t]])
    report["crf"] = classify_crf(data, tol).to_dict()
    if f is not None:
        report["bernstein"] = _guarded(
            lambda: check_bf_differences(f, order, grid, h, tol))
        report["bernstein"]["class"] = "bernstein"
    if stieltjes is not None:
        rng = np.random.default_rng(int(opts.get("seed", 0)))
        n = int(opts.get("samples", 200))
        z = rng.uniform(-10, 10, n) + 1j * 10.0 ** rng.uniform(-3, 2, n)
        report["nevanlinna"] = _guarded(lambda: nevanlinna_check(stieltjes, z, tol))
    _emit(_dumps(report), _setting(args, cfg, "out"))
    return EXIT_OK


def cmd_bound(args, cfg, base) -> int:
    mat = _material(cfg, base)
    grid = parse_grid(_setting(args, cfg, "grid", DEFAULT_GRID))
    consts = bound_constants(mat)
    if args.scale_constants is not None:
        consts = consts.scaled(args.scale_constants)
    rep = verify_bound(mat, grid, consts, tol=_setting(args, cfg, "tolerance"),
                       route=_setting(args, cfg, "route", "spectral"))
    out = rep.to_dict()
    if args.scale_constants is not None:
        out["scaled_by"] = args.scale_constants
    _emit(_dumps(out), _setting(args, cfg, "out"))
    return EXIT_OK if rep.holds else EXIT_VIOLATED


def _default_time_grid(mat: Material, x: float, window: GaussianWindow) -> np.ndarray:
    dt = math.pi / (6.5 * window.width)
    speed = wavefront_speed(mat)
    lead = 8.0 * window.sigma
    # diffusive materials need a long record for the slowly decaying tail
    span = 4.0 * x / speed + 2.0 * lead if math.isfinite(speed) else 400.0 * mat.rho * x * x
    n = 1 << max(3, math.ceil(math.log2(span / dt)))
    n = min(n, _MAX_SAMPLES)
    return -lead + dt * np.arange(n)


def cmd_green(args, cfg, base) -> int:
    mat = _material(cfg, base)
    x = float(_setting(args, cfg, "x", DEFAULT_X))
    wcfg = dict(cfg.get("window", {}))
    if args.width is not None:
        wcfg["width"] = args.width
    if args.amplitude is not None:
        wcfg["amplitude"] = args.amplitude
    window = GaussianWindow(float(wcfg.get("width", DEFAULT_WIDTH)),
                            float(wcfg.get("amplitude", 1.0)))
    spec = _setting(args, cfg, "grid", cfg.get("t_grid"))
    t = (_default_time_grid(mat, x, window) if spec is None
         else parse_grid(spec, default_spacing="lin"))
    sig = greens_function(mat, x, t, window,
                          leak_tol=float(_setting(args, cfg, "leak_tol", 1e-3)),
                          route=_setting(args, cfg, "route", "laplace"))
    out = _setting(args, cfg, "out")
    if out:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("t", "u"))
        for ti, ui in zip(sig.t, sig.u):
            w.writerow((repr(float(ti)), repr(float(ui))))
        Path(out).write_text(buf.getvalue())
    report = sig.report()
    report["window"] = {"kind": "gaussian", "width": window.width,
                        "amplitude": window.amplitude}
    text = _dumps(report)
    if args.report:
        Path(args.report).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_fit(args, cfg, base) -> int:
    src = getattr(args, "curve_file", None) or cfg.get("curve_file")
    band_spec = _setting(args, cfg, "band")
    if src:
        path = Path(src)
        if not path.is_absolute() and not args.curve_file:
            path = base / path
        c = AttenuationCurve.from_csv(path)
    else:
        mat = _material(cfg, base)
        spec = _setting(args, cfg, "grid")
        if spec is None and band_spec is not None:
            lo, hi = parse_band(band_spec)
            spec = f"{lo}:{hi}:200:log"
        grid = parse_grid(spec or DEFAULT_FIT_GRID)
        c = curve(mat, grid, route=_setting(args, cfg, "route", "spectral"))
    band = parse_band(band_spec) if band_spec is not None else None
    res = fit_powerlaw(c, band)
    out = res.to_dict()
    out["band"] = list(band) if band else [float(c.omega[0]), float(c.omega[-1])]
    _emit(_dumps(out), _setting(args, cfg, "out"))
    return EXIT_OK


# -- argument parser --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration")
    common.add_argument("--material", help="material as inline JSON or a file path")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--grid", help="grid lo:hi:n[:log|lin]")
    common.add_argument("--tolerance", type=float, help="acceptance tolerance")
    common.add_argument("--route", choices=("spectral", "laplace"),
                        help="evaluate p^2 J~(p) from the Levy measure or the kernel transform")

    p = argparse.ArgumentParser(prog="viscowave", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("curves", parents=[common],
                       help=f"attenuation/dispersion CSV (default grid {DEFAULT_GRID})")
    s.set_defaults(func=cmd_curves)

    s = sub.add_parser("classify", parents=[common],
                       help="CrF / Bernstein / Nevanlinna verdicts as JSON "
                            f"(default grid {DEFAULT_CLASSIFY_GRID})")
    s.add_argument("--order", type=int, help=f"difference order (default {DEFAULT_ORDER})")
    s.add_argument("--step", type=float, help=f"difference step (default {DEFAULT_STEP})")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("bound", parents=[common],
                       help=f"linear attenuation bound report (default grid {DEFAULT_GRID})")
    s.add_argument("--scale-constants", type=float, metavar="F",
                   help="multiply the bound constants by F (negative controls)")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("green", parents=[common],
                       help="band-limited Green's function: CSV signal to --out, JSON report")
    s.add_argument("--x", type=float, help=f"distance (default {DEFAULT_X})")
    s.add_argument("--width", type=float,
                   help=f"Gaussian window width in rad/s (default {DEFAULT_WIDTH})")
    s.add_argument("--amplitude", type=float, help="window amplitude (default 1)")
    s.add_argument("--leak-tol", dest="leak_tol", type=float,
                   help="relative leakage level (default 1e-3)")
    s.add_argument("--report", help="write the JSON report here instead of stdout")
    s.set_defaults(func=cmd_green)

    s = sub.add_parser("fit", parents=[common],
                       help=f"power-law fit of the attenuation (default grid {DEFAULT_FIT_GRID})")
    s.add_argument("--band", help="fit band lo:hi")
    s.add_argument("--curve-file", dest="curve_file",
                   help="CSV with omega and atten columns instead of a material")
    s.set_defaults(func=cmd_fit)
    return p


def _fail(code: int, exc: BaseException) -> int:
    err = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    sys.stderr.write(json.dumps(err) + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg, base = load_config(args)
        return args.func(args, cfg, base)
    except FitError as exc:
        return _fail(EXIT_FIT, exc)
    except (ViscowaveError, OSError, ValueError, KeyError) as exc:
        return _fail(EXIT_CONFIG, exc)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
