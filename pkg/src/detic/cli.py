"""Command-line front end: ``detic <command> [options]``.

Exit codes: 0 success, 1 a verification or check failed, 2 bad input,
3 an enumeration cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import gaussian, info, rate_region, schemes
from .channel import ChannelGains
from .polytope import HalfspaceSystem, as_fraction, polygon
from .svg import line_plot

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(ValueError):
    pass


def canonical(obj):
    """Recursively replace Fractions by their ``p/q`` string form."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    return obj


def dump_json(obj) -> str:
    return json.dumps(canonical(obj), sort_keys=True, indent=2) + "\n"


def dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(["" if v is None else str(v) for v in r])
    return buf.getvalue()


def load_json_arg(text: str | None, what: str):
    """Parse ``text`` as inline JSON, or else as the path of a JSON file."""
    if text is None:
        raise InputError(f"--input is required ({what})")
    stripped = text.strip()
    if not stripped.startswith(("{", "[")):
        path = Path(text)
        if not path.is_file():
            raise InputError(f"--input is neither inline JSON nor an existing file: {text!r}")
        stripped = path.read_text()
    try:
        return json.loads(stripped)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON for {what}: {e}") from None


def parse_rational(text: str, what: str) -> Fraction:
    try:
        return as_fraction(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{what} must be a rational like 2/3 or 0.25, got {text!r}") from None


def _system_payload(sys_: HalfspaceSystem) -> dict:
    return {
        "variables": list(sys_.variables),
        "constraints": sys_.describe(),
        "vertices": [list(v) for v in polygon(sys_).vertices],
    }


def _vertex_rows(label: str, sys_: HalfspaceSystem):
    return [(label, *v) for v in polygon(sys_).vertices]


def _require_format(args, allowed):
    if args.format not in allowed:
        raise InputError(f"{args.command} supports --format {'/'.join(allowed)}, not {args.format}")


# ---------------------------------------------------------------- commands


def cmd_region(args) -> tuple[str, int]:
    _require_format(args, ("json", "csv"))
    g = ChannelGains.from_dict(load_json_arg(args.input, "channel gains"))
    closed = rate_region.closed_form_region(g)
    projected = rate_region.project_compound(rate_region.compound_mac_region(g, literal=args.literal))
    equal = rate_region.region_equal(closed, projected)
    if args.format == "csv":
        rows = _vertex_rows("closed_form", closed) + _vertex_rows("projected", projected)
        return dump_csv(("region", "r1", "r2"), rows), EXIT_OK
    payload = {
        "gains": g.to_dict(),
        "closed_form": _system_payload(closed),
        "projected": _system_payload(projected),
        "equal": equal,
        "sum_capacity": rate_region.sum_capacity(g),
    }
    return dump_json(payload), EXIT_OK


def _alpha_grid(args) -> list[Fraction]:
    if args.alpha is not None:
        return [parse_rational(args.alpha, "--alpha")]
    lo = parse_rational(args.alpha_min, "--alpha-min")
    hi = parse_rational(args.alpha_max, "--alpha-max")
    step = parse_rational(args.step, "--step")
    if lo < 0 or hi < lo or step <= 0:
        raise InputError("need 0 <= alpha-min <= alpha-max and step > 0")
    count = int((hi - lo) / step) + 1
    return [lo + k * step for k in range(count)]


def cmd_wcurve(args) -> tuple[str, int]:
    alphas = _alpha_grid(args)
    if any(a < 0 for a in alphas):
        raise InputError("alpha must be nonnegative")
    w = [rate_region.wcurve(a) for a in alphas]
    tin = [rate_region.tin_line(a) if a <= 1 else None for a in alphas]
    if args.format == "svg":
        return line_plot(alphas, {"W-curve": w, "treat interference as noise": tin}), EXIT_OK
    if args.format == "csv":
        return dump_csv(("alpha", "wcurve", "tin"), zip(alphas, w, tin)), EXIT_OK
    return dump_json([{"alpha": a, "wcurve": c, "tin": t} for a, c, t in zip(alphas, w, tin)]), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    _require_format(args, ("json",))
    if args.preset:
        s = schemes.preset(args.preset, args.n)
    else:
        s = schemes.LevelScheme.from_dict(load_json_arg(args.input, "scheme"))
    report = schemes.verify_zero_error(s.gains, s, cap=args.cap)
    payload = {
        "scheme": s.to_dict(),
        "report": report.to_dict(),
        "rate_point": schemes.scheme_rate_point(s).coords,
        "in_capacity_region": schemes.in_capacity_region(s),
    }
    return dump_json(payload), EXIT_OK if report.zero_error else EXIT_FAIL


def cmd_lemmas(args) -> tuple[str, int]:
    _require_format(args, ("json",))
    rep = {
        "uniform_sum": info.sweep_uniform_sum(args.max_value),
        "quantized_sum": info.sweep_quantized_sum(min(args.max_value, 5)),
        "side_information": info.sweep_side_information(args.samples, args.seed),
    }
    body = {k: v.to_dict() for k, v in rep.items()}
    ok = all(v.ok for v in rep.values())
    return dump_json({"all_ok": ok, "sweeps": body}), EXIT_OK if ok else EXIT_FAIL


_DIRECTIONS = {
    "det-to-gauss": gaussian.DET_TO_GAUSS,
    "det→gauss": gaussian.DET_TO_GAUSS,
    "gauss-to-det": gaussian.GAUSS_TO_DET,
    "gauss→det": gaussian.GAUSS_TO_DET,
}


def cmd_gap(args) -> tuple[str, int]:
    _require_format(args, ("json", "text"))
    if args.direction not in _DIRECTIONS:
        raise InputError(f"--direction must be one of {sorted(_DIRECTIONS)}")
    ledger = gaussian.gap_ledger(_DIRECTIONS[args.direction], args.mode)
    if args.format == "text":
        return ledger.to_text() + "\n", EXIT_OK
    body = ledger.to_dict()
    body["theorem_gap"] = gaussian.theorem_gap(args.mode)
    return dump_json(body), EXIT_OK


def cmd_bounds(args) -> tuple[str, int]:
    _require_format(args, ("json", "csv"))
    p = gaussian.GaussianParams.from_dict(load_json_arg(args.input, "Gaussian parameters"))
    inner, outer = gaussian.gaussian_region_bounds(p)
    det = rate_region.closed_form_region(gaussian.map_to_deterministic(p))
    if args.format == "csv":
        rows = _vertex_rows("inner", inner) + _vertex_rows("deterministic", det) + _vertex_rows("outer", outer)
        return dump_csv(("region", "r1", "r2"), rows), EXIT_OK
    payload = {
        "params": p.to_dict(),
        "gains": gaussian.map_to_deterministic(p).to_dict(),
        "gap_per_user": gaussian.theorem_gap(p.field_mode),
        "inner": _system_payload(inner),
        "deterministic": _system_payload(det),
        "outer": _system_payload(outer),
    }
    return dump_json(payload), EXIT_OK


def cmd_gdof(args) -> tuple[str, int]:
    _require_format(args, ("json", "csv"))
    if args.alpha is None:
        raise InputError("--alpha is required")
    region = gaussian.gdof_region_mac(parse_rational(args.alpha, "--alpha"), classical=args.classical)
    if args.format == "csv":
        return dump_csv(("region", "d1", "d2"), _vertex_rows("gdof", region)), EXIT_OK
    return dump_json(_system_payload(region)), EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="inline JSON or path to a JSON file")
    common.add_argument("--output", help="write here instead of stdout")
    common.add_argument("--format", default="json", choices=("json", "csv", "svg", "text"))

    p = argparse.ArgumentParser(prog="detic", description="Deterministic interference channel toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("region", parents=[common], help="closed-form and projected capacity regions")
    r.add_argument("--literal", action="store_true", help="project the uncorrected private+cross rows")
    r.set_defaults(func=cmd_region)

    w = sub.add_parser("wcurve", parents=[common], help="normalized symmetric capacity against alpha")
    w.add_argument("--alpha", help="a single alpha (overrides the range)")
    w.add_argument("--alpha-min", default="0")
    w.add_argument("--alpha-max", default="3")
    w.add_argument("--step", default="1/12")
    w.set_defaults(func=cmd_wcurve)

    for name in ("verify", "simulate"):
        v = sub.add_parser(name, parents=[common], help="exhaustive zero-error check of a level scheme")
        v.add_argument("--preset", help="built-in scheme: " + ", ".join(sorted(schemes.PRESETS) + ["collision", "empty"]))
        v.add_argument("--n", type=int, help="size parameter for the preset")
        v.add_argument("--cap", type=int, default=schemes.DEFAULT_CAP, help="maximum number of message pairs")
        v.set_defaults(func=cmd_verify)

    lm = sub.add_parser("lemmas", parents=[common], help="sweep the entropy lemmas")
    lm.add_argument("--max-value", type=int, default=6)
    lm.add_argument("--samples", type=int, default=500)
    lm.add_argument("--seed", type=int, default=0)
    lm.set_defaults(func=cmd_lemmas)

    gp = sub.add_parser("gap", parents=[common], help="itemized gap ledger")
    gp.add_argument("--direction", default="gauss-to-det")
    gp.add_argument("--mode", default="real", choices=(gaussian.REAL, gaussian.COMPLEX))
    gp.set_defaults(func=cmd_gap)

    b = sub.add_parser("bounds", parents=[common], help="inner and outer regions for Gaussian parameters")
    b.set_defaults(func=cmd_bounds)

    gd = sub.add_parser("gdof", parents=[common], help="MAC generalized degrees-of-freedom region")
    gd.add_argument("--alpha")
    gd.add_argument("--classical", action="store_true")
    gd.set_defaults(func=cmd_gdof)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    raw = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(raw)
    if args.command == "wcurve" and "--format" not in raw:
        args.format = "csv"
    if getattr(args, "cap", 1) is not None and getattr(args, "cap", 1) <= 0:
        print("error: --cap must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        text, code = args.func(args)
    except (schemes.EnumerationCapError, info.OracleCapError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, ValueError, KeyError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
