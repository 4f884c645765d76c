"""Command-line front end: ``mixspin {eval,sweep,critical,figure,validate}``.

Exit codes: 0 success, 2 usage error, 3 domain error (singular R, T <= 0,
no threshold in bracket), 4 validation tolerance exceeded.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import re
import sys
import tempfile
from dataclasses import asdict
from pathlib import Path

from . import __version__
from .analysis import (
    PRESET_IDS,
    Axis,
    SampleBox,
    SweepSpec,
    evaluate_point,
    figure_preset,
    find_threshold,
    preset_metadata,
    sweep,
    validate_modes,
)
from .analysis.sweep import Status
from .analysis.validation import R_KINDS
from .couplings import Coupling, CouplingKind
from .errors import DomainError, NoThreshold
from .results import Mode

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_TOLERANCE = 0, 2, 3, 4

CSV_HEADER = ("coupling", "mode", "R", "J", "B", "T", "negativity", "log_Z",
              "neg_block_12", "neg_block_56", "status")


class UsageError(Exception):
    pass


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def record_row(r) -> dict:
    return {
        "coupling": r.coupling.value, "mode": r.mode.value, "R": r.R, "J": r.J, "B": r.B, "T": r.T,
        "negativity": r.negativity, "log_Z": r.log_z, "neg_block_12": r.neg_block_12,
        "neg_block_56": r.neg_block_56, "status": r.status.value,
    }


def _csv_field(v) -> str:
    return "" if v is None else repr(v)


def render_records(records, fmt: str, metadata: dict | None = None) -> str:
    """Records as CSV or JSON; the CSV path skips the per-row dicts."""
    if fmt == "json":
        return render([record_row(r) for r in records], fmt, metadata)
    lines = [",".join(CSV_HEADER)]
    prefix: dict = {}
    for r in records:
        key = (r.coupling, r.mode, r.status)
        if key not in prefix:
            prefix[key] = (f"{r.coupling.value},{r.mode.value},", f",{r.status.value}")
        head, tail = prefix[key]
        nums = map(_csv_field, (r.R, r.J, r.B, r.T, r.negativity, r.log_z, r.neg_block_12, r.neg_block_56))
        lines.append(head + ",".join(nums) + tail)
    lines.append("")
    return "\n".join(lines)


def render(rows: list[dict], fmt: str, metadata: dict | None = None, header=CSV_HEADER) -> str:
    if fmt == "json":
        doc = {"metadata": metadata or {}, "records": rows}
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(row[h]) for h in header) + "\n")
    return buf.getvalue()


def write_output(text: str, out: str | None):
    """Write to ``out`` atomically (temp file + rename), or to stdout."""
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def parse_values(name: str, text: str):
    """A float, a comma list, or start:stop:count -> float or Axis."""
    try:
        if ":" in text:
            parts = text.split(":")
            if len(parts) != 3:
                raise UsageError(f"--{name.lower()}: range must be start:stop:count, got {text!r}")
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
            return Axis.linear(name, start, stop, count)
        if "," in text:
            return Axis.explicit(name, [float(v) for v in text.split(",")])
        return float(text)
    except ValueError as exc:
        raise UsageError(f"--{name.lower()}: {exc}") from None


def _default_workers() -> int:
    env = os.environ.get("MIXSPIN_WORKERS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def _shared(p: argparse.ArgumentParser, values=True):
    p.add_argument("--coupling", choices=[k.value for k in CouplingKind], default="inverse-square")
    p.add_argument("--j0", type=float, default=1.0)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="canonical")
    if values:
        p.add_argument("--r")
        p.add_argument("--j")
        p.add_argument("--b")
        p.add_argument("--t")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.add_argument("--workers", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixspin", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"mixspin {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    _shared(sub.add_parser("eval", help="evaluate one point"))
    _shared(sub.add_parser("sweep", help="evaluate a grid (axes ordered as given)"))

    p = sub.add_parser("critical", help="locate an epsilon-crossing of N")
    _shared(p)
    p.add_argument("--axis", choices=["R", "J", "T", "B"], required=True)
    p.add_argument("--lo", type=float, required=True, help="entangled end of the bracket")
    p.add_argument("--hi", type=float, required=True, help="disentangled end of the bracket")
    p.add_argument("--epsilon", type=float, default=1e-6)

    p = sub.add_parser("figure", help="regenerate a figure dataset")
    p.add_argument("preset", choices=PRESET_IDS, metavar="ID", help=", ".join(PRESET_IDS))
    p.add_argument("--mode", choices=[m.value for m in Mode], default="canonical")
    p.add_argument("--family", help="comma list overriding the curve-family values")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("validate", help="audit one mode against another")
    p.add_argument("--mode", choices=[m.value for m in Mode], default="published")
    p.add_argument("--against", choices=[m.value for m in Mode], default="canonical")
    p.add_argument("--coupling", action="append",
                   choices=[k.value for k in R_KINDS], help="repeatable; default all three")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=1e-10)
    p.add_argument("--max-ratio", type=float, default=None,
                   help="reject samples with |J|/(sqrt2 T) or |B|/T above this")
    for name in ("r", "b", "t"):
        p.add_argument(f"--box-{name}", metavar="LO:HI", help=f"sampling interval for {name.upper()}")
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--out")
    return parser


def _coupling(args) -> Coupling:
    return Coupling(CouplingKind(args.coupling), args.j0)


def _position(args, coupling: Coupling):
    """(name, raw text) of the R or J flag after checking the pairing rules."""
    if coupling.kind is CouplingKind.CONSTANT:
        if args.r is not None:
            raise UsageError("the constant coupling takes --j, not --r")
        if args.j is None:
            raise UsageError("--j is required for the constant coupling")
        return "J", args.j
    if args.j is not None:
        raise UsageError("--j is only valid with --coupling constant")
    if args.r is None:
        raise UsageError("--r is required")
    return "R", args.r


def _flag_position(argv: list[str], flag: str) -> int:
    for i, a in enumerate(argv):
        if a == flag or a.startswith(flag + "="):
            return i
    return len(argv)


def _point_values(args, coupling):
    name, raw = _position(args, coupling)
    vals = {}
    for key, text in ((name, raw), ("B", args.b), ("T", args.t)):
        if text is None:
            raise UsageError(f"--{key.lower()} is required")
        v = parse_values(key, text)
        if isinstance(v, Axis):
            raise UsageError(f"--{key.lower()} must be a single value here")
        vals[key] = v
    if not vals["T"] > 0:
        raise DomainError(f"temperature must be positive, got {vals['T']!r}")
    return name, vals


def cmd_eval(args, argv) -> int:
    coupling = _coupling(args)
    name, vals = _point_values(args, coupling)
    rec = evaluate_point(coupling, Mode(args.mode), vals[name], vals["B"], vals["T"])
    if rec.status is Status.DOMAIN_ERROR:
        raise DomainError(f"{coupling.kind.value} coupling is singular at {name}={vals[name]!r}")
    write_output(render([record_row(rec)], args.format, {"tool_version": __version__}), args.out)
    return EXIT_OK


def cmd_sweep(args, argv) -> int:
    coupling = _coupling(args)
    name, raw = _position(args, coupling)
    axes, fixed = [], {}
    for key, text in ((name, raw), ("B", args.b), ("T", args.t)):
        if text is None:
            raise UsageError(f"--{key.lower()} is required")
        v = parse_values(key, text)
        if isinstance(v, Axis):
            axes.append((_flag_position(argv, f"--{key.lower()}"), v))
        else:
            fixed[key] = v
    axes = [a for _, a in sorted(axes, key=lambda t: t[0])]
    spec = SweepSpec(coupling, Mode(args.mode), tuple(axes), fixed)
    records = sweep(spec, workers=args.workers or _default_workers())
    meta = {
        "tool_version": __version__,
        "axes": [{"name": a.name, "values": a.descriptor, "count": len(a)} for a in spec.axes],
        "fixed": spec.fixed,
    }
    write_output(render_records(records, args.format, meta), args.out)
    return EXIT_OK


def cmd_critical(args, argv) -> int:
    coupling = _coupling(args)
    pos_name = "J" if coupling.kind is CouplingKind.CONSTANT else "R"
    if args.axis not in (pos_name, "T", "B"):
        raise UsageError(f"--axis {args.axis} is not available for the {coupling.kind.value} coupling")
    fixed = {}
    for key, text in ((pos_name, args.j if pos_name == "J" else args.r), ("B", args.b), ("T", args.t)):
        if key == args.axis:
            if text is not None:
                raise UsageError(f"--{key.lower()} is the search axis; give --lo/--hi instead")
            continue
        if text is None:
            raise UsageError(f"--{key.lower()} is required")
        v = parse_values(key, text)
        if isinstance(v, Axis):
            raise UsageError(f"--{key.lower()} must be a single value here")
        fixed[key] = v
    if "T" in fixed and not fixed["T"] > 0:
        raise DomainError(f"temperature must be positive, got {fixed['T']!r}")
    cp = find_threshold(coupling, Mode(args.mode), args.axis, fixed, (args.lo, args.hi), args.epsilon)
    row = asdict(cp)
    row["bracket_lo"], row["bracket_hi"] = row.pop("bracket")
    header = ("axis", "value", "epsilon", "bracket_lo", "bracket_hi", "iterations", "contour_only")
    write_output(render([row], args.format, {"tool_version": __version__, "fixed": fixed}, header), args.out)
    return EXIT_OK


def cmd_figure(args, argv) -> int:
    family = None
    if args.family is not None:
        try:
            family = [float(v) for v in args.family.split(",")]
        except ValueError as exc:
            raise UsageError(f"--family: {exc}") from None
    spec = figure_preset(args.preset, Mode(args.mode), family)
    records = sweep(spec, workers=args.workers or _default_workers())
    meta = {"tool_version": __version__, "mode": spec.mode.value, **preset_metadata(args.preset, spec)}
    write_output(render_records(records, args.format, meta), args.out)
    if args.format == "csv" and args.out is not None:
        write_output(json.dumps(meta, indent=1) + "\n", args.out + ".meta.json")
    return EXIT_OK


def _interval(flag: str, text: str | None, default):
    if text is None:
        return default
    try:
        lo, hi = (float(v) for v in text.split(":"))
    except ValueError:
        raise UsageError(f"{flag}: expected LO:HI, got {text!r}") from None
    if not lo < hi:
        raise UsageError(f"{flag}: LO must be below HI")
    return (lo, hi)


def cmd_validate(args, argv) -> int:
    kinds = [CouplingKind(k) for k in args.coupling] if args.coupling else list(R_KINDS)
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    box = None
    if args.box_r or args.box_b or args.box_t:
        if args.box_r is None:
            raise UsageError("--box-r is required when overriding the sampling box")
        box = SampleBox(
            r=_interval("--box-r", args.box_r, None),
            b=_interval("--box-b", args.box_b, (0.0, 4.0)),
            t=_interval("--box-t", args.box_t, (0.05, 3.0)),
        )
        if box.t[0] <= 0:
            raise DomainError("sampled temperatures must be positive")
    report = validate_modes(Mode(args.mode), Mode(args.against), kinds, args.samples, args.seed,
                            box=box, max_ratio=args.max_ratio)
    doc = report.to_dict()
    doc.update(tolerance=args.tolerance, seed=args.seed, tool_version=__version__,
               passed=not report.exceeds(args.tolerance))
    if args.format == "json":
        text = json.dumps(doc, indent=1) + "\n"
    else:
        header = ("coupling", "R", "B", "T", "delta_N")
        text = render(doc["worst"], "csv", header=header)
    write_output(text, args.out)
    if report.exceeds(args.tolerance):
        print(f"mixspin: max |delta N| = {report.max_abs_delta_n!r} exceeds tolerance {args.tolerance!r}",
              file=sys.stderr)
        return EXIT_TOLERANCE
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "sweep": cmd_sweep, "critical": cmd_critical,
            "figure": cmd_figure, "validate": cmd_validate}


_NEGATIVE = re.compile(r"^-\.?\d")


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--r -3:3:91`` as ``--r=-3:3:91``; argparse would read the value as a flag."""
    out: list[str] = []
    for a in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NEGATIVE.match(a):
            out[-1] = f"{out[-1]}={a}"
        else:
            out.append(a)
    return out


def run(argv: list[str] | None = None) -> int:
    argv = _attach_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, argv)
    except (DomainError, NoThreshold) as exc:
        print(f"mixspin: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, ValueError) as exc:
        print(f"mixspin: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
