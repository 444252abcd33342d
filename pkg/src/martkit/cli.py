"""Command-line front end.

Exit codes: 0 the analysis ran (whatever the verdict), 2 invalid input,
3 an event enumeration exceeded the cap (``MARTKIT_EVENT_CAP``),
4 an internal invariant was violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import workspace as wsio
from .condexp import cond_exp
from .errors import CapacityError, MartkitError
from .martingale import CHARACTERIZATIONS, InvariantViolation, classify, transform
from .process import is_adapted, is_predictable, is_predictable_shifted, is_progressive
from .sigma import Partition

EXIT_OK, EXIT_INVALID, EXIT_CAPACITY, EXIT_INVARIANT = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _read(path: str) -> wsio.Workspace:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise wsio.WorkspaceError(f"cannot read {path}: {exc.strerror}") from None
    return wsio.loads(text)


def cmd_validate(args) -> int:
    ws = _read(args.file)
    f = ws.filtration()
    _emit({"valid": True, "outcomes": ws.space.n, "times": len(ws.process), "dimension": ws.dimension,
           "filtration_atoms": [len(p) for p in f.parts]})
    return EXIT_OK


def _render_text(report) -> str:
    doc = report.to_json()
    lines = [f"adapted: {doc['adapted']}", f"kind: {doc['kind']}"]
    for name in ("martingale", "submartingale", "supermartingale"):
        part = doc[name]
        line = f"{name}: {part['verdict']}"
        ce = part["counterexample"]
        if ce:
            event = "{" + ",".join(ce.get("event_labels", map(str, ce["event"]))) + "}"
            line += f"  (i={ce['i']}, j={ce['j']}, event {event}, lhs {ce['lhs']}, rhs {ce['rhs']})"
        lines.append(line)
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> int:
    ws = _read(args.file)
    chosen = [name for name in CHARACTERIZATIONS if getattr(args, name)]
    if args.all or not chosen:
        chosen = list(CHARACTERIZATIONS)
    report = classify(ws.space, ws.filtration(), ws.process, chosen)
    if args.text:
        sys.stdout.write(_render_text(report))
    else:
        _emit(report.to_json())
    return EXIT_OK


def _time(value: str, horizon: int, flag: str) -> int:
    try:
        t = int(value)
    except ValueError:
        raise UsageError(f"{flag}: expected a time index, got {value!r}") from None
    if not 0 <= t <= horizon:
        raise UsageError(f"{flag}: time {t} outside 0..{horizon}")
    return t


def cmd_condexp(args) -> int:
    ws = _read(args.file)
    x = ws.process
    if args.sigma.lstrip().startswith("["):
        try:
            sigma = Partition(ws.space.n, json.loads(args.sigma))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"--sigma: {exc}") from None
    else:
        sigma = ws.filtration()[_time(args.sigma, x.horizon, "--sigma")]
    t = x.horizon if args.of == "terminal" else _time(args.of, x.horizon, "--of")
    result = cond_exp(ws.space, sigma, x[t])
    doc = result.to_json()
    doc["null_atom_labels"] = [[ws.space.labels[w] for w in a] for a in result.null_atoms]
    _emit(doc)
    return EXIT_OK


def cmd_process(args) -> int:
    ws = _read(args.file)
    x = ws.process if args.subject == "process" else ws.transform
    if x is None:
        raise UsageError("workspace has no \"transform\" process")
    f = ws.filtration()
    checks = ("adapted", "progressive", "predictable") if args.check == "all" else (args.check,)
    out = {}
    if "adapted" in checks:
        out["adapted"] = is_adapted(x, f)
    if "progressive" in checks:
        out["progressive"] = is_progressive(x, f)
    if "predictable" in checks:
        via_sigma, shifted = is_predictable(x, f), is_predictable_shifted(x, f)
        out["predictable"] = {"sigma_p": via_sigma, "shifted": shifted}
        if via_sigma != shifted:
            _emit(out)
            raise InvariantViolation("predictable sigma-algebra and shifted characterization disagree")
    _emit(out)
    return EXIT_OK


def cmd_transform(args) -> int:
    ws = _read(args.file)
    if ws.transform is None:
        raise UsageError("workspace has no \"transform\" process to use as stakes")
    spec = ws.filtration_spec
    if spec["type"] == "natural":
        spec = ws.filtration().to_json()
    y = transform(ws.transform, ws.process)
    text = wsio.dumps(wsio.Workspace(ws.dimension, ws.space, y, spec))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="martkit", description="Exact martingale analysis on finite spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that a workspace is well formed")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="martingale / sub / super classification")
    p.add_argument("file")
    p.add_argument("--pairwise", action="store_true")
    p.add_argument("--succ", dest="successor", action="store_true")
    p.add_argument("--set-integral", dest="set_integral", action="store_true")
    p.add_argument("--difference", action="store_true")
    p.add_argument("--all", action="store_true", help="run all four characterizations (default)")
    p.add_argument("--text", action="store_true", help="human-readable summary instead of JSON")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("condexp", help="conditional expectation of one time slice")
    p.add_argument("file")
    p.add_argument("--sigma", required=True, help="time index t (uses F_t) or a partition such as [[0,1],[2,3]]")
    p.add_argument("--of", default="terminal", help="time index of the process slice, or 'terminal'")
    p.set_defaults(func=cmd_condexp)

    p = sub.add_parser("process", help="adapted / progressive / predictable checks")
    p.add_argument("file")
    p.add_argument("--check", choices=("adapted", "progressive", "predictable", "all"), default="all")
    p.add_argument("--subject", choices=("process", "transform"), default="process")
    p.set_defaults(func=cmd_process)

    p = sub.add_parser("transform", help="write the workspace of the martingale transform")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transform)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (wsio.WorkspaceError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except MartkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
