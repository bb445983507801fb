"""JSON and CSV serialization shared by the command-line subcommands.

Rationals travel as strings ("3/4", "2", "0.25") so files round-trip
exactly; nothing in this module touches floats except the fixed-precision
decimal rendering for CSV.  Schema problems raise ValueError with the
offending key, geometric validity is checked by the geometry constructors.
"""

from __future__ import annotations

import json

from .catalog import Parall12Params, Parall34Params
from .geometry import ConvexPolygon, Direction, PlanarCone, Point2, validate_polygon
from .rational import format_decimal, format_rational, rational
from .synisothesis import PairOfBodies


def parse_point(text: str) -> Point2:
    """Point from "x,y" with rational or decimal components, e.g. "1/2,0"."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'x,y', got {text!r}")
    return Point2(rational(parts[0]), rational(parts[1]))


def point_to_json(p: Point2):
    return [format_rational(p.x), format_rational(p.y)]


def point_from_json(data) -> Point2:
    if not isinstance(data, (list, tuple)) or len(data) != 2:
        raise ValueError(f"point must be a 2-element array, got {data!r}")
    return Point2(rational(str(data[0])), rational(str(data[1])))


def polygon_to_json(p: ConvexPolygon):
    return {"vertices": [point_to_json(v) for v in p.vertices]}


def polygon_from_json(data) -> ConvexPolygon:
    if not isinstance(data, dict) or "vertices" not in data:
        raise ValueError("polygon JSON needs a 'vertices' key")
    return validate_polygon([point_from_json(v) for v in data["vertices"]])


def cone_to_json(c: PlanarCone):
    if c.kind != "pointed":
        raise ValueError(f"only pointed cones are serialized, got {c.kind}")
    return {
        "lower": [str(c.lower.dx), str(c.lower.dy)],
        "upper": [str(c.upper.dx), str(c.upper.dy)],
    }


def cone_from_json(data) -> PlanarCone:
    if not isinstance(data, dict) or "lower" not in data or "upper" not in data:
        raise ValueError("cone JSON needs 'lower' and 'upper' keys")
    lo = point_from_json(data["lower"])
    hi = point_from_json(data["upper"])
    return PlanarCone.pointed(Direction.of(lo), Direction.of(hi))


def pair_to_json(pair: PairOfBodies):
    return {
        "first": polygon_to_json(pair.first),
        "second": polygon_to_json(pair.second),
    }


def pair_from_json(data) -> PairOfBodies:
    if not isinstance(data, dict) or "first" not in data or "second" not in data:
        raise ValueError("pair JSON needs 'first' and 'second' keys")
    return PairOfBodies(
        polygon_from_json(data["first"]), polygon_from_json(data["second"])
    )


def cone_pair_to_json(a: PlanarCone, b: PlanarCone):
    return {"a": cone_to_json(a), "b": cone_to_json(b)}


def cone_pair_from_json(data):
    """The two pointed cones of a cone-pair file, as (a, b)."""
    if not isinstance(data, dict) or "a" not in data or "b" not in data:
        raise ValueError("cone pair JSON needs 'a' and 'b' keys")
    return cone_from_json(data["a"]), cone_from_json(data["b"])


def params_from_json(data, family: int):
    """Family parameters; families 3 and 4 additionally read "m" (default 0)."""
    if not isinstance(data, dict):
        raise ValueError("params JSON must be an object")
    values = {}
    for key in ("alpha", "beta", "gamma", "delta"):
        if key not in data:
            raise ValueError(f"params JSON is missing {key!r}")
        values[key] = rational(str(data[key]))
    y = point_from_json(data["y"]) if "y" in data else Point2(rational(0), rational(0))
    if family in (1, 2):
        return Parall12Params(y=y, **values)
    return Parall34Params(m=rational(str(data.get("m", "0"))), y=y, **values)


def params_to_json(params):
    out = {
        "alpha": format_rational(params.alpha),
        "beta": format_rational(params.beta),
        "gamma": format_rational(params.gamma),
        "delta": format_rational(params.delta),
        "y": point_to_json(params.y),
    }
    if isinstance(params, Parall34Params):
        out["m"] = format_rational(params.m)
    return out


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(obj, fh):
    """Canonical rendering: sorted keys, two-space indent, trailing newline."""
    fh.write(json.dumps(obj, indent=2, sort_keys=True))
    fh.write("\n")


def segments_to_json(segments):
    return {"segments": [[point_to_json(a), point_to_json(b)] for a, b in segments]}


def write_grid_csv(grid, fh, digits: int = 6):
    """CSV rows x,y,value (fixed-precision decimals) plus exact p/q columns.

    Rows run bottom-up then left-to-right, matching the grid layout, so the
    output is byte-identical for identical inputs.
    """
    fh.write("x,y,value,x_exact,y_exact,value_exact\n")
    for iy in range(grid.ny):
        for ix in range(grid.nx):
            p = grid.point_at(ix, iy)
            v = grid.values[iy][ix]
            fh.write(
                f"{format_decimal(p.x, digits)},{format_decimal(p.y, digits)},"
                f"{format_decimal(v, digits)},{format_rational(p.x)},"
                f"{format_rational(p.y)},{format_rational(v)}\n"
            )
