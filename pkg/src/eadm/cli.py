"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 inconsistent assessment.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import engine
from .model import ModelError, format_number, load_model
from .oracle import DEFAULT_RESOLUTION
from .ternary import UnsupportedDimension, export_ternary

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2

EPILOG = """\
exit codes:
  0  success
  1  input error (unreadable or malformed model, unknown option name)
  2  inconsistent assessment (no compatible mass function; empty choice)
"""


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are input errors; 2 is reserved for inconsistency
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _fmt_mass(p, model):
    return {label: format_number(x) for label, x in zip(model.outcomes.labels, p)}


def _query(model, spec: str) -> list[str]:
    names = [s.strip() for s in spec.split(",") if s.strip()]
    if not names:
        raise InputError("empty query set")
    unknown = [s for s in names if s not in model.options]
    if unknown:
        raise InputError(f"unknown option(s) in query: {', '.join(unknown)}")
    return list(dict.fromkeys(names))


def _engine_kwargs(args) -> dict:
    return {"exact": not args.float, "max_tuples": args.max_tuples}


def cmd_extend(args, out) -> int:
    model = load_model(args.model)
    names = _query(model, args.set)
    verdicts = engine.extension_verdicts(model.option_set(names), model.assessment,
                                         **_engine_kwargs(args))
    chosen, rejected, witnesses = [], [], {}
    for name in names:
        verdict = verdicts[model.options[name]]
        if verdict.admissible:
            chosen.append(name)
            witnesses[name] = _fmt_mass(verdict.witness, model)
        else:
            rejected.append(name)
    status = EXIT_OK if chosen else EXIT_INCONSISTENT
    if args.json:
        report = {"command": "extend", "chosen": chosen, "rejected": rejected,
                  "consistent": bool(chosen), "exact": not args.float}
        if args.witness:
            report["witnesses"] = witnesses
        print(json.dumps(report), file=out)
        return status
    print("chosen: " + ", ".join(chosen), file=out)
    print("rejected: " + ", ".join(rejected), file=out)
    if not chosen:
        print("inconsistent assessment: nothing can be chosen", file=out)
    if args.witness:
        for name in chosen:
            print(f"witness {name}: " + ", ".join(
                f"{k}={v}" for k, v in witnesses[name].items()), file=out)
    return status


def cmd_consistent(args, out) -> int:
    model = load_model(args.model)
    ok = engine.is_consistent(model.assessment, model.outcomes.n, **_engine_kwargs(args))
    if args.json:
        print(json.dumps({"command": "consistent", "consistent": ok}), file=out)
    else:
        print("consistent" if ok else "inconsistent", file=out)
    return EXIT_OK if ok else EXIT_INCONSISTENT


def cmd_witness(args, out) -> int:
    model = load_model(args.model)
    p = engine.find_witness(model.assessment, model.outcomes.n, **_engine_kwargs(args))
    if args.json:
        print(json.dumps({"command": "witness", "consistent": p is not None,
                          "witness": None if p is None else _fmt_mass(p, model)}),
              file=out)
    elif p is None:
        print("inconsistent", file=out)
    else:
        print(", ".join(f"{k}={v}" for k, v in _fmt_mass(p, model).items()), file=out)
    return EXIT_OK if p is not None else EXIT_INCONSISTENT


def cmd_plot(args, out) -> int:
    model = load_model(args.model)
    names = _query(model, args.set) if args.set else []
    data = export_ternary(model, names, args.grid, args.out_dir, args.prefix)
    inside = sum(row.in_credal for row in data.grid)
    if args.json:
        print(json.dumps({"command": "plot", "grid_points": len(data.grid),
                          "in_credal": inside, "lines": len(data.lines),
                          "out_dir": str(args.out_dir)}), file=out)
    else:
        print(f"wrote {len(data.grid)} grid points ({inside} in credal set) "
              f"and {len(data.lines)} lines to {args.out_dir}", file=out)
    return EXIT_OK


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # flags are accepted before or after the subcommand; the subcommand copy
    # must not overwrite a value given before it
    def default(value):
        return argparse.SUPPRESS if suppress else value

    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=default(False),
                        help="emit one JSON object on stdout")
    common.add_argument("--float", action="store_true", default=default(False),
                        help="solve in floating point (tolerance 1e-9); approximate")
    common.add_argument("--max-tuples", type=int, metavar="CAP",
                        default=default(engine.DEFAULT_MAX_TUPLES),
                        help="warn when a search has more difference tuples than CAP")
    common.add_argument("--grid", type=int, metavar="N",
                        default=default(DEFAULT_RESOLUTION),
                        help="simplex grid resolution for plot export")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="eadm", parents=[_global_flags(False)], epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description="E-admissible choice from a finite assessment of rejections.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _global_flags(True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_, epilog=EPILOG,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("model", help="model file (JSON, schema eadm-model/1)")
        p.set_defaults(func=func)
        return p

    p = add("extend", cmd_extend, "choose from a set of named options")
    p.add_argument("--set", required=True, help="comma-separated option names")
    p.add_argument("--witness", action="store_true",
                   help="print a witnessing mass function per chosen option")
    add("consistent", cmd_consistent, "check that the assessment is consistent")
    add("witness", cmd_witness, "print one mass function compatible with the assessment")
    p = add("plot", cmd_plot, "export ternary-plot CSV data (3 outcomes only)")
    p.add_argument("--set", default="", help="comma-separated option names to flag")
    p.add_argument("--out-dir", default=".", help="directory for the CSV files")
    p.add_argument("--prefix", default="ternary", help="CSV file name prefix")
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always", engine.LargeProductWarning)
            return args.func(args, out)
    except (ModelError, InputError, UnsupportedDimension, OSError) as exc:
        if args.json:
            code = getattr(exc, "code", type(exc).__name__)
            print(json.dumps({"command": args.command, "error": str(exc),
                              "code": code}), file=out)
        print(f"eadm: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
