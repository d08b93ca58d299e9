"""Command-line front door.

Subcommands compute single values (totient, totatives, trace, cosets,
progression, solve), reproduce the classical tables (table-phi, table-ord2),
and run the verification sweeps (verify).  Output goes to stdout as aligned
text by default, or as JSON lines / CSV via --format; diagnostics go to
stderr as a single line.

Exit codes: 0 success / all laws verified, 1 usage or domain error,
2 a verification suite found a violation, 3 internal error.
"""

import argparse
import csv
import json
import os
import sys

from . import __version__
from ._backend import active_backend
from .arith import factorize
from .errors import DomainError
from .power_residues import coset_decomposition, power_trace
from .progression import (count_coprime_terms, progression_residues,
                          solve_progression_congruence)
from .report import ReportRow
from .totient import totatives, totient
from .verify import DEFAULT_SEED, SUITE_NAMES, run_suites

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the CLI contract reserves 2 for
    # verification violations and uses 1 for usage problems.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


# ---------------------------------------------------------------------------
# command handlers: each returns (rows, exit_code)


def _cmd_totient(args):
    phi = totient(args.n)
    outputs = {"phi": phi, "factorization": str(factorize(args.n))}
    if args.parts:
        outputs["parts"] = list(totatives(args.n))
    return [ReportRow("totient_table", {"n": args.n}, outputs)], EXIT_OK


def _cmd_totatives(args):
    ts = totatives(args.n)
    outputs = {"count": len(ts), "parts": list(ts)}
    return [ReportRow("totient_table", {"n": args.n}, outputs)], EXIT_OK


def _cmd_table_phi(args):
    if args.lo > args.hi:
        raise DomainError(f"empty range: {args.lo} > {args.hi}")
    rows = [ReportRow("totient_table", {"n": n}, {"phi": totient(n)})
            for n in range(args.lo, args.hi + 1)]
    return rows, EXIT_OK


def _ratio_label(phi, order):
    # order divides phi exactly; the table prints the reduced fraction label.
    k = phi // order
    return "n" if k == 1 else f"n/{k}"


def _cmd_table_ord2(args):
    for name, v in (("lo", args.lo), ("hi", args.hi)):
        if v % 2 == 0:
            raise DomainError(f"{name} must be odd, got {v}")
    if args.lo < 3:
        raise DomainError(f"lo must be >= 3, got {args.lo}")
    if args.lo > args.hi:
        raise DomainError(f"empty range: {args.lo} > {args.hi}")
    rows = []
    for n in range(args.lo, args.hi + 1, 2):
        phi = totient(n)
        order = power_trace(2, n).order
        rows.append(ReportRow("order_table", {"n": n},
                              {"phi": phi, "ord2": order,
                               "ratio": _ratio_label(phi, order)}))
    return rows, EXIT_OK


def _cmd_trace(args):
    tr = power_trace(args.x, args.n)
    row = ReportRow("trace", {"x": args.x, "n": args.n},
                    {"cycle": list(tr.cycle), "order": tr.order})
    return [row], EXIT_OK


def _cmd_cosets(args):
    dec = coset_decomposition(args.x, args.n)
    row = ReportRow("coset", {"x": args.x, "n": args.n},
                    {"subgroup": list(dec.subgroup),
                     "cosets": [list(c) for c in dec.cosets],
                     "order": dec.order, "index": dec.index,
                     "phi": dec.order * dec.index})
    return [row], EXIT_OK


def _cmd_progression(args):
    tr = progression_residues(args.a, args.d, args.n)
    coprime = count_coprime_terms(args.a, args.d, args.n)
    row = ReportRow("trace", {"a": args.a, "d": args.d, "n": args.n},
                    {"residues": list(tr.residues), "coprime": coprime})
    return [row], EXIT_OK


def _cmd_solve(args):
    sol = solve_progression_congruence(args.a, args.d, args.n, args.r)
    row = ReportRow("trace", {"a": args.a, "d": args.d, "n": args.n,
                              "r": args.r},
                    {"nu": sol.nu, "mu": sol.mu})
    return [row], EXIT_OK


def _cmd_verify(args):
    if args.max < 2:
        raise DomainError(f"--max must be >= 2, got {args.max}")
    reports = run_suites(args.theorem or ["all"], args.max, args.seed)
    rows = []
    violated = False
    for rep in reports:
        rows.extend(rep.violations)
        status = "ok" if rep.ok else "violated"
        violated = violated or not rep.ok
        rows.append(ReportRow("verify",
                              {"suite": rep.name, "max": args.max,
                               "seed": args.seed},
                              {"cases": rep.cases,
                               "violations": len(rep.violations)},
                              status))
    return rows, EXIT_VIOLATION if violated else EXIT_OK


# ---------------------------------------------------------------------------
# rendering


def _fmt_list(value):
    return " ".join(str(v) for v in value)


def _text_lines(row):
    k, i, o = row.kind, row.inputs, row.outputs
    if k == "totient_table":
        if "parts" in o and "phi" not in o:      # totatives command
            yield f"totatives({i['n']}): {_fmt_list(o['parts'])}"
            yield f"count = {o['count']}"
        else:
            yield f"phi({i['n']}) = {o['phi']}"
            if "factorization" in o:
                yield f"{i['n']} = {o['factorization']}"
            if "parts" in o:
                yield f"totatives: {_fmt_list(o['parts'])}"
    elif k == "order_table":
        yield f"{i['n']:>8} {o['phi']:>8} {o['ord2']:>8}   {o['ratio']}"
    elif k == "trace":
        if "cycle" in o:
            yield f"cycle: {_fmt_list(o['cycle'])}"
            yield f"order nu = {o['order']}"
        elif "residues" in o:
            yield f"residues: {_fmt_list(o['residues'])}"
            yield f"coprime terms: {o['coprime']}"
        else:
            a0 = i["a"] % i["n"] if i["a"] < 0 else i["a"]
            yield f"nu = {o['nu']}, mu = {o['mu']}"
            yield (f"{a0} + {o['nu']}*{i['d']} "
                   f"= {o['mu']}*{i['n']} + {i['r']}")
    elif k == "coset":
        yield " | ".join("{" + ", ".join(str(v) for v in c) + "}"
                         for c in o["cosets"])
        yield f"nu = {o['order']}, m = {o['index']}, phi = {o['phi']}"
    elif k == "verify":
        if row.status == "violated" and "law" in o:
            where = " ".join(f"{key}={val}" for key, val in i.items()
                             if key != "suite")
            detail = " ".join(f"{key}={val}" for key, val in o.items()
                              if key != "law")
            yield f"VIOLATION {i['suite']} {o['law']}: {where} {detail}"
        else:
            yield (f"{i['suite']:<8} max={i['max']:<8} "
                   f"cases={o['cases']:<10} violations={o['violations']:<4} "
                   f"{row.status}")


_PHI_HEADER = f"{'n':>8} {'phi(n)':>8}"
_ORD2_HEADER = f"{'N':>8} {'phi(N)':>8} {'ord(2)':>8}   ratio"


def _render_text(rows, out):
    header_done = False
    for row in rows:
        if not header_done and row.kind == "order_table":
            print(_ORD2_HEADER, file=out)
            header_done = True
        if (not header_done and row.kind == "totient_table"
                and set(row.outputs) == {"phi"}):
            print(_PHI_HEADER, file=out)
            header_done = True
        if row.kind == "totient_table" and set(row.outputs) == {"phi"}:
            print(f"{row.inputs['n']:>8} {row.outputs['phi']:>8}", file=out)
        else:
            for line in _text_lines(row):
                print(line, file=out)


def _render_json(rows, out):
    for row in rows:
        print(json.dumps(row.as_obj()), file=out)


def _csv_cell(value):
    if isinstance(value, (list, tuple)):
        if value and isinstance(value[0], (list, tuple)):
            return "|".join(_fmt_list(c) for c in value)
        return _fmt_list(value)
    return value


def _render_csv(rows, out):
    records = []
    fields = []
    for row in rows:
        record = {"kind": row.kind}
        record.update(row.inputs)
        record.update({k: _csv_cell(v) for k, v in row.outputs.items()})
        record["status"] = row.status
        for key in record:
            if key not in fields:
                fields.append(key)
        records.append(record)
    if not records:
        return
    fields.remove("status")
    fields.append("status")  # keep status last even when schemas differ
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n",
                            restval="")
    writer.writeheader()
    writer.writerows(records)


_RENDERERS = {"text": _render_text, "json": _render_json, "csv": _render_csv}


# ---------------------------------------------------------------------------
# parser


def build_parser():
    # global flags, accepted both before and after the subcommand; SUPPRESS
    # keeps the subparser from clobbering a value parsed at the root
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default=argparse.SUPPRESS,
                        help="output format (default: text)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized suites "
                             f"(default: {DEFAULT_SEED})")

    parser = _Parser(prog="phiord",
                     description="Totients, multiplicative orders, power-"
                                 "residue cosets, and Euler-Fermat checks.")
    parser.add_argument("--version", action="version",
                        version=f"phiord {__version__} ({active_backend()})")
    parser.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help=argparse.SUPPRESS)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("totient", parents=[common],
                       help="phi(n) and the factorization of n")
    p.add_argument("n", type=_positive)
    p.add_argument("--parts", action="store_true",
                   help="also list the totatives")
    p.set_defaults(handler=_cmd_totient)

    p = sub.add_parser("totatives", parents=[common],
                       help="the residues in [0, n) coprime to n")
    p.add_argument("n", type=_positive)
    p.set_defaults(handler=_cmd_totatives)

    p = sub.add_parser("table-phi", parents=[common],
                       help="phi(n) for n in [lo, hi]")
    p.add_argument("lo", type=_positive)
    p.add_argument("hi", type=_positive)
    p.set_defaults(handler=_cmd_table_phi)

    p = sub.add_parser("table-ord2", parents=[common],
                       help="least k with 2**k == 1 (mod N), for odd N "
                            "in [lo, hi]")
    p.add_argument("lo", type=_positive)
    p.add_argument("hi", type=_positive)
    p.set_defaults(handler=_cmd_table_ord2)

    p = sub.add_parser("trace", parents=[common],
                       help="the cycle of power residues of x mod n")
    p.add_argument("x", type=int)
    p.add_argument("n", type=_positive)
    p.set_defaults(handler=_cmd_trace)

    p = sub.add_parser("cosets", parents=[common],
                       help="coset partition of the totatives by x's powers")
    p.add_argument("x", type=int)
    p.add_argument("n", type=_positive)
    p.set_defaults(handler=_cmd_cosets)

    p = sub.add_parser("progression", parents=[common],
                       help="residues of one period of a, a+d, a+2d, ... mod n")
    p.add_argument("a", type=int)
    p.add_argument("d", type=_positive)
    p.add_argument("n", type=_positive)
    p.set_defaults(handler=_cmd_progression)

    p = sub.add_parser("solve", parents=[common],
                       help="term index nu with a + nu*d == r (mod n)")
    p.add_argument("a", type=int)
    p.add_argument("d", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("r", type=int)
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("verify", parents=[common],
                       help="run verification sweeps; exit 0 iff no violation")
    p.add_argument("--max", type=int, default=200,
                   help="largest modulus to sweep (default: 200)")
    p.add_argument("--theorem", action="append", choices=SUITE_NAMES,
                   default=None, metavar="NAME",
                   help="suite to run: t1..t11, oracle, or all "
                        "(repeatable; default: all)")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rows, code = args.handler(args)
        _RENDERERS[args.format](rows, sys.stdout)
    except DomainError as exc:
        print(f"phiord: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); silence the flush at exit
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK
    except Exception as exc:  # pragma: no cover - internal failure path
        print(f"phiord: internal error: {type(exc).__name__}: {exc}",
              file=sys.stderr)
        return EXIT_INTERNAL
    return code


if __name__ == "__main__":
    sys.exit(main())
