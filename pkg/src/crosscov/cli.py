"""Command-line front end.

Subcommands cover evaluation (eval, cone-eval, grid), structure queries
(support, ssets, symcheck), the inverse problem (cone-recover, reconstruct),
the counterexample catalog (catalog, verify) and figure output (render).
Outputs are deterministic for fixed inputs and seeds.  Exit codes: 0 on
success, 1 on domain or file errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import io
import os
import sys
from dataclasses import dataclass

from . import covariogram, formats, render
from .catalog import make_cone_counterexample, make_pair, verify_equal_covariogram
from .cones import ConePair, cone_cov_eval, oracle_from_pair, recover_cone_pair
from .errors import BadResolution, CrossCovError
from .rational import format_decimal, format_rational
from .reconstruct import PolygonCovOracle, assemble
from .synisothesis import symmetry_witness, trivial_associates


@dataclass(frozen=True)
class RunConfig:
    """Validated per-invocation settings shared by the subcommand handlers."""

    subcommand: str
    inputs: tuple
    output: str | None
    probes: int
    seed: int
    nx: int
    ny: int
    decimal: int | None

    def __post_init__(self):
        for path in self.inputs:
            if not os.path.isfile(path):
                raise FileNotFoundError(f"input file not found: {path}")
        if self.probes < 1:
            raise ValueError(f"probe count must be >= 1, got {self.probes}")
        if self.nx < 2 or self.ny < 2:
            raise BadResolution(f"grid resolution must be >= 2, got {self.nx}x{self.ny}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosscov",
        description="Exact cross covariogram computations for planar convex "
        "polygons and cones.",
    )
    parser.add_argument(
        "--config",
        help="key=value settings file (flags win over file values)",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, inputs=(), out=False, x=False, probes=False, grid=False):
        for name in inputs:
            p.add_argument(name)
        if out:
            p.add_argument("--out", help="output path (default: stdout)")
        if x:
            p.add_argument("--x", required=True, help="evaluation point, e.g. 1/2,0")
        if probes:
            p.add_argument("--probes", type=int, default=None)
            p.add_argument("--seed", type=int, default=None)
        if grid:
            p.add_argument("--nx", type=int, default=None)
            p.add_argument("--ny", type=int, default=None)
        p.add_argument("--decimal", type=int, default=None, metavar="N",
                       help="print values as decimals with N digits instead of p/q")

    common(sub.add_parser("eval", help="g_{K,L} at one point"),
           inputs=("k_json", "l_json"), x=True)
    common(sub.add_parser("support", help="support polygon K+(-L) as JSON"),
           inputs=("k_json", "l_json"), out=True)
    common(sub.add_parser("ssets", help="second singular set segments as JSON"),
           inputs=("k_json", "l_json"), out=True)
    common(sub.add_parser("grid", help="covariogram values on a lattice as CSV"),
           inputs=("k_json", "l_json"), out=True, grid=True)
    p = sub.add_parser("render", help="SVG heatmap of a pair, or a built-in figure")
    p.add_argument("inputs", nargs="*", metavar="K.json L.json")
    p.add_argument("--figure", choices=render.FIGURES,
                   help="built-in recipe instead of a polygon pair")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--nx", type=int, default=None)
    p.add_argument("--ny", type=int, default=None)
    p.add_argument("--decimal", type=int, default=None)
    common(sub.add_parser("cone-eval", help="cone covariogram at one point"),
           inputs=("cones_json",), x=True)
    common(sub.add_parser("cone-recover",
                          help="recover the cone pair from its covariogram"),
           inputs=(), out=True)
    sub.choices["cone-recover"].add_argument("--oracle-pair", required=True,
                                             dest="cones_json",
                                             help="cone pair JSON used as the oracle")
    p = sub.add_parser("reconstruct",
                       help="recover a polygon pair from its covariogram")
    p.add_argument("--hidden", required=True, dest="pair_json",
                   help="pair JSON; the oracle is built from it internally")
    p.add_argument("--probes", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--decimal", type=int, default=None)
    p = sub.add_parser("catalog", help="emit a counterexample pair")
    p.add_argument("--family", required=True, choices=("1", "2", "3", "4", "cones"))
    p.add_argument("--params", dest="params_json",
                   help="parameter JSON (default: small reference values)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--decimal", type=int, default=None)
    common(sub.add_parser("verify",
                          help="exact covariogram equality of two pairs"),
           inputs=("p_json", "q_json"), probes=True)
    common(sub.add_parser("symcheck",
                          help="symmetry point certificate, if one exists"),
           inputs=("k_json", "l_json"), out=True)
    return parser


def _read_config_file(path):
    """TOML-like key=value lines; '#' starts a comment; keys are flat."""
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


_CONFIG_INTS = {"probes", "seed", "nx", "ny", "decimal"}


def _setting(args, config, name, default):
    flag = getattr(args, name, None)
    if flag is not None:
        return flag
    if name in config:
        return int(config[name]) if name in _CONFIG_INTS else config[name]
    return default


def _config_from_args(args) -> RunConfig:
    config = _read_config_file(args.config) if args.config else {}
    inputs = []
    for attr in ("k_json", "l_json", "p_json", "q_json", "cones_json",
                 "pair_json", "params_json"):
        value = getattr(args, attr, None)
        if value is not None:
            inputs.append(value)
    inputs.extend(getattr(args, "inputs", ()) or ())
    return RunConfig(
        subcommand=args.subcommand,
        inputs=tuple(inputs),
        output=getattr(args, "out", None),
        probes=_setting(args, config, "probes", 1000),
        seed=_setting(args, config, "seed", 0),
        nx=_setting(args, config, "nx", 41),
        ny=_setting(args, config, "ny", 41),
        decimal=_setting(args, config, "decimal", None),
    )


def _emit(cfg: RunConfig, text: str):
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(cfg: RunConfig, obj):
    buf = io.StringIO()
    formats.dump_json(obj, buf)
    _emit(cfg, buf.getvalue())


def _fmt_value(cfg: RunConfig, v) -> str:
    if cfg.decimal is not None:
        return format_decimal(v, cfg.decimal)
    return format_rational(v)


def _load_pair_args(args):
    k = formats.polygon_from_json(formats.load_json(args.k_json))
    l = formats.polygon_from_json(formats.load_json(args.l_json))
    return k, l


def _cmd_eval(cfg, args):
    k, l = _load_pair_args(args)
    x = formats.parse_point(args.x)
    print(_fmt_value(cfg, covariogram.eval(k, l, x)))
    return 0


def _cmd_support(cfg, args):
    k, l = _load_pair_args(args)
    _emit_json(cfg, formats.polygon_to_json(covariogram.support(k, l)))
    return 0


def _cmd_ssets(cfg, args):
    k, l = _load_pair_args(args)
    _emit_json(cfg, formats.segments_to_json(covariogram.second_singular_set(k, l)))
    return 0


def _cmd_grid(cfg, args):
    k, l = _load_pair_args(args)
    grid = covariogram.sample_grid(k, l, cfg.nx, cfg.ny)
    buf = io.StringIO()
    formats.write_grid_csv(grid, buf, cfg.decimal if cfg.decimal is not None else 6)
    _emit(cfg, buf.getvalue())
    return 0


def _cmd_render(cfg, args):
    if args.figure:
        if args.inputs:
            raise ValueError("--figure takes no polygon inputs")
        _emit(cfg, render.render_figure(args.figure))
        return 0
    if len(args.inputs) != 2:
        raise ValueError("render needs K.json and L.json, or --figure")
    k = formats.polygon_from_json(formats.load_json(args.inputs[0]))
    l = formats.polygon_from_json(formats.load_json(args.inputs[1]))
    _emit(cfg, render.render_heatmap(k, l, cfg.nx, cfg.ny))
    return 0


def _cmd_cone_eval(cfg, args):
    a, b = formats.cone_pair_from_json(formats.load_json(args.cones_json))
    pair = ConePair(a, b)
    x = formats.parse_point(args.x)
    print(_fmt_value(cfg, cone_cov_eval(pair, x)))
    return 0


def _cone_pair_json(pair: ConePair):
    return formats.cone_pair_to_json(pair.a, pair.b)


def _cmd_cone_recover(cfg, args):
    a, b = formats.cone_pair_from_json(formats.load_json(args.cones_json))
    oracle = oracle_from_pair(ConePair(a, b))
    result = recover_cone_pair(oracle)
    _emit_json(cfg, {
        "case": result.case,
        "ambiguous": result.ambiguous,
        "rays": [[str(r.dx), str(r.dy)] for r in result.rays],
        "solutions": [_cone_pair_json(sol) for sol in result.solutions],
    })
    return 0


def _cmd_reconstruct(cfg, args):
    hidden = formats.pair_from_json(formats.load_json(args.pair_json))
    result = assemble(PolygonCovOracle.from_pair(hidden.first, hidden.second))
    witness = None
    for i, pair in enumerate(result.pairs):
        w = trivial_associates(pair, hidden)
        if w is not None:
            witness = {
                "pair_index": i,
                "branch": w.branch,
                "x": formats.point_to_json(w.x),
            }
            break
    report = verify_equal_covariogram(result.pairs[0], hidden,
                                      n=cfg.probes, seed=cfg.seed)
    _emit_json(cfg, {
        "kind": result.kind,
        "pairs": [formats.pair_to_json(p) for p in result.pairs],
        "transform": None if result.transform is None else
        [[format_rational(c) for c in row] for row in result.transform],
        "params": None if result.params is None else
        formats.params_to_json(result.params),
        "witness": witness,
        "oracle_equal": report.equal,
        "probes": report.probes,
    })
    return 0


_DEFAULT_12 = {"alpha": "1", "beta": "1", "gamma": "1", "delta": "1"}
_DEFAULT_34 = {"alpha": "1", "beta": "1", "gamma": "2", "delta": "3/2", "m": "0"}


def _cmd_catalog(cfg, args):
    if args.family == "cones":
        first, second = make_cone_counterexample()
        payload = _cone_pair_json(first)
        payload["alternate"] = _cone_pair_json(second)
        _emit_json(cfg, payload)
        return 0
    family = int(args.family)
    if args.params_json:
        data = formats.load_json(args.params_json)
    else:
        data = dict(_DEFAULT_12 if family in (1, 2) else _DEFAULT_34)
    params = formats.params_from_json(data, family)
    _emit_json(cfg, formats.pair_to_json(make_pair(family, params)))
    return 0


def _cmd_verify(cfg, args):
    p = formats.pair_from_json(formats.load_json(args.p_json))
    q = formats.pair_from_json(formats.load_json(args.q_json))
    report = verify_equal_covariogram(p, q, n=cfg.probes, seed=cfg.seed)
    if report.equal:
        print(f"EQUAL ({report.probes} probes)")
    else:
        x = report.witness
        vp = covariogram.eval(p.first, p.second, x)
        vq = covariogram.eval(q.first, q.second, x)
        print(f"DIFFER at {format_rational(x.x)},{format_rational(x.y)}: "
              f"{_fmt_value(cfg, vp)} vs {_fmt_value(cfg, vq)}")
    return 0


def _cmd_symcheck(cfg, args):
    k, l = _load_pair_args(args)
    found = symmetry_witness(k, l)
    if found is None:
        _emit_json(cfg, {"found": False, "z": None, "branch": None})
    else:
        z, branch = found
        _emit_json(cfg, {"found": True, "z": formats.point_to_json(z),
                         "branch": branch})
    return 0


_DISPATCH = {
    "eval": _cmd_eval,
    "support": _cmd_support,
    "ssets": _cmd_ssets,
    "grid": _cmd_grid,
    "render": _cmd_render,
    "cone-eval": _cmd_cone_eval,
    "cone-recover": _cmd_cone_recover,
    "reconstruct": _cmd_reconstruct,
    "catalog": _cmd_catalog,
    "verify": _cmd_verify,
    "symcheck": _cmd_symcheck,
}


def run(argv=None) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        cfg = _config_from_args(args)
        return _DISPATCH[cfg.subcommand](cfg, args)
    except CrossCovError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 1
    except (OSError, ValueError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
