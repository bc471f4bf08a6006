"""Command-line front end.

::

    kneading expand      --system ordinary --number 3/7
    kneading period      --system farey --number "(-1+1*sqrt(2))/1"
    kneading reconstruct --system ordinary --preperiod 1 --period 2
    kneading validate    partition.json
    kneading convergents --system odd --number "(sqrt(2))/2" -n 5

``--system`` is ``ordinary``, ``odd``, ``farey`` or the path of a partition
file.  ``--format machine`` prints one JSON object per invocation instead of
the text report.  Exit status is 0 on success, 1 on any domain error and 2
on command-line misuse.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import errors
from .dynamics import DEFAULT_MAX_STEPS, CylinderState, expand, gamma_interval, push_cylinder
from .exact import QuadSurd, minimal_polynomial
from .lagrange import detect_period, reconstruct
from .partition import FAREY, ODD, ORDINARY, odd_digit_form
from .syntax import format_value, load_partition, parse_digits, parse_number

BUILTIN_SYSTEMS = {"ordinary": ORDINARY, "odd": ODD, "farey": FAREY}


def resolve_system(name):
    """Return ``(partition, description)`` for a ``--system`` argument."""
    if name in BUILTIN_SYSTEMS:
        return BUILTIN_SYSTEMS[name], name
    P = load_partition(name)
    desc = {"file": name, "Q": [str(q) for q in P.points], "epsilon": P.signs}
    return P, desc


def _system_label(desc):
    return desc if isinstance(desc, str) else desc["file"]


def odd_form(digits, status, value):
    """Nested-fraction rendering ``1/(b1+e1/(b2+...))`` of an odd expansion."""
    if not digits:
        return format_value(value)
    pairs = [odd_digit_form(a) for a in digits]
    b, e = pairs[-1]
    sign = "+" if e > 0 else "-"
    if status == "zero":
        s = f"{b}"
    elif status == "one":
        s = f"{b}{sign}1"
    else:
        s = f"{b}{sign}G^{len(digits)}x"
    for b, e in reversed(pairs[:-1]):
        s = f"{b}{'+' if e > 0 else '-'}1/({s})"
    return f"1/({s})"


def polynomial_str(c, d, e):
    terms = [(c, "X^2"), (d, "X"), (e, "")]
    out = ""
    for k, mono in terms:
        if k == 0:
            continue
        mag = abs(k)
        body = mono if (mag == 1 and mono) else f"{mag}{mono}"
        if not out:
            out = ("-" if k < 0 else "") + body
        else:
            out += (" - " if k < 0 else " + ") + body
    return out


def _parse_in_unit_interval(text):
    x = parse_number(text)
    if not (0 < x < 1):
        raise errors.OutOfDomain(f"{format_value(x)} is not in (0, 1)")
    return x


def cmd_expand(args):
    P, desc = resolve_system(args.system)
    x = _parse_in_unit_interval(args.number)
    exp = expand(P, x, args.max_steps)
    record = {
        "command": "expand",
        "system": desc,
        "input": format_value(x),
        "digits": list(exp.digits),
        "terminal": exp.status,
        "terminal_value": format_value(exp.value),
    }
    if P is ODD:
        record["odd_form"] = [list(odd_digit_form(a)) for a in exp.digits]
        record["odd_pretty"] = odd_form(exp.digits, exp.status, exp.value)
    lines = [
        f"system: {_system_label(desc)}",
        f"input: {record['input']}",
        f"digits: {' '.join(map(str, exp.digits))}",
    ]
    n = len(exp.digits)
    if exp.status == "ongoing":
        lines.append(f"terminal: ongoing after {n} steps, G^{n}x = {record['terminal_value']}")
    else:
        lines.append(f"terminal: {exp.status} (G^{n}x = {record['terminal_value']})")
    if "odd_pretty" in record:
        lines.append(f"odd form: {record['odd_pretty']}")
    return record, lines


def cmd_period(args):
    P, desc = resolve_system(args.system)
    x = _parse_in_unit_interval(args.number)
    if not isinstance(x, QuadSurd):
        raise errors.NotQuadratic(
            f"{format_value(x)} is rational; its expansion terminates, use 'expand'"
        )
    rep = detect_period(P, x, args.max_steps)
    cert = rep.certificate
    record = {
        "command": "period",
        "system": desc,
        "input": format_value(x),
        "preperiod": rep.preperiod,
        "period": rep.period,
        "preperiod_digits": list(rep.preperiod_digits),
        "period_digits": list(rep.period_digits),
        "certificate": {
            "H": cert.H.rows(),
            "lambda": format_value(cert.lam),
            "lambda_bar": format_value(cert.lam_bar),
            "trace": cert.H.trace,
            "det": cert.H.det,
            "t_shift": cert.t_shift,
        },
        "detect_index": rep.detect_index,
        "detect_gap": rep.detect_gap,
        "nonnegative_from": rep.nonnegative_from,
    }
    lines = [
        f"system: {_system_label(desc)}",
        f"input: {record['input']}",
        f"preperiod ({rep.preperiod}): {' '.join(map(str, rep.preperiod_digits))}",
        f"period ({rep.period}): {' '.join(map(str, rep.period_digits))}",
        f"H = {cert.H}  lambda = {record['certificate']['lambda']}"
        f"  trace = {cert.H.trace}  det = {cert.H.det}",
        f"H_t = H_(t+r) first at t = {rep.detect_index}, r = {rep.detect_gap}",
    ]
    return record, lines


def cmd_reconstruct(args):
    P, desc = resolve_system(args.system)
    pre = parse_digits(args.preperiod)
    per = parse_digits(args.period)
    if not per:
        raise errors.KneadingError("--period must name at least one digit")
    x = reconstruct(P, pre, per)
    c, d, e = minimal_polynomial(x)
    record = {
        "command": "reconstruct",
        "system": desc,
        "preperiod_digits": pre,
        "period_digits": per,
        "value": format_value(x),
        "minimal_polynomial": [c, d, e],
    }
    lines = [
        f"system: {_system_label(desc)}",
        f"value: {record['value']}",
        f"minimal polynomial: {polynomial_str(c, d, e)}",
    ]
    return record, lines


def cmd_validate(args):
    P = load_partition(args.path)
    branches = []
    lines = [f"OK: {args.path} ({len(P.branches)} branches)"]
    for b in P.branches:
        branches.append({
            "index": b.index,
            "lo": str(b.lo),
            "hi": str(b.hi),
            "right_closed": b.right_closed,
            "eps": b.eps,
            "matrix": b.matrix.rows(),
        })
        lines.append(f"  {b.index}: {b.interval_str()}  eps={b.eps:+d}  G={b.matrix}")
    record = {"command": "validate", "path": args.path, "valid": True,
              "branches": branches}
    return record, lines


def cmd_convergents(args):
    P, desc = resolve_system(args.system)
    x = _parse_in_unit_interval(args.number)
    state = CylinderState()
    lo, hi, length = gamma_interval(state)
    rows = [{"n": 0, "digit": None, "lo": str(lo), "hi": str(hi), "length": str(length)}]
    value = x
    for k in range(1, args.n + 1):
        if value == 0 or value == 1:
            break
        b = P.locate(value)
        value = b.matrix(value)
        state = push_cylinder(state, b)
        lo, hi, length = gamma_interval(state)
        rows.append({"n": k, "digit": b.index, "lo": str(lo), "hi": str(hi),
                     "length": str(length)})
    record = {"command": "convergents", "system": desc,
              "input": format_value(x), "rows": rows}
    lines = [f"system: {_system_label(desc)}", f"input: {record['input']}"]
    for r in rows:
        digit = "-" if r["digit"] is None else r["digit"]
        lines.append(f"{r['n']:>4}  {digit!s:>4}  [{r['lo']}, {r['hi']}]  length {r['length']}")
    return record, lines


def _error_record(command, exc, args):
    record = {"command": command, "ok": False, "error": type(exc).__name__,
              "message": str(exc)}
    if command == "validate":
        record = {"command": "validate", "path": args.path, "valid": False,
                  "error": type(exc).__name__, "message": str(exc)}
    index = getattr(exc, "index", None)
    if index is not None:
        record["index"] = index
    determinant = getattr(exc, "determinant", None)
    if determinant is not None:
        record["determinant"] = determinant
    column = getattr(exc, "column", None)
    if column is not None:
        record["column"] = column
    return record


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kneading",
        description="Generalized continued fractions from unimodular partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, number=True):
        p.add_argument("--system", default="ordinary",
                       help="ordinary, odd, farey, or a partition file")
        if number:
            p.add_argument("--number", required=True,
                           help="u/v or (a+b*sqrt(d))/c, strictly inside (0, 1)")
        p.add_argument("--format", choices=("text", "machine"), default="text")

    p = sub.add_parser("expand", help="kneading digits of a number")
    common(p)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("period", help="preperiod and period of a quadratic irrational")
    common(p)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("reconstruct", help="quadratic irrational from a periodic word")
    common(p, number=False)
    p.add_argument("--preperiod", default="", help="digits, e.g. '1,3' (may be empty)")
    p.add_argument("--period", required=True, help="digits, e.g. '2' or '1 2 2 1'")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("validate", help="check a partition file")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convergents", help="cylinder intervals along the expansion")
    common(p)
    p.add_argument("-n", type=int, default=10, help="number of steps")
    p.set_defaults(func=cmd_convergents)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_steps", 1) < 1:
        parser.error("--max-steps must be at least 1")
    if getattr(args, "n", 0) < 0:
        parser.error("-n must be nonnegative")
    try:
        record, lines = args.func(args)
    except errors.KneadingError as exc:
        if args.format == "machine":
            print(json.dumps(_error_record(args.command, exc, args)), file=stdout)
        else:
            print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if args.format == "machine":
        print(json.dumps(record), file=stdout)
    else:
        print("\n".join(lines), file=stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
