"""Command-line front end: ``anfield {classify,data,jw,sixj,theta,verify}``.

Results go to stdout; progress of long sweeps goes to stderr.  Exit codes: 0 success,
1 verification failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import enum
import io
import json
import math
import sys
from fractions import Fraction
from typing import Any, Sequence

from anfield.classification import classification_record
from anfield.cyclotomic import CyclotomicNumber, approx_complex
from anfield.fusion import CategoryParams, is_admissible, qdim, sixj_table, theta_symbol
from anfield.modular import BraidingParams, conductor, modularity_rank, s_matrix, t_matrix
from anfield.symbolic import DELTA, RationalFunction
from anfield.temperley_lieb import jones_wenzl
from anfield.verify import SUITES, run_suite, worker_count

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad parameters; reported on stderr with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def to_jsonable(obj: Any, digits: int) -> Any:
    """Convert library values to plain JSON data (cyclotomics use their canonical form)."""
    if isinstance(obj, CyclotomicNumber):
        return obj.to_json(digits)
    if isinstance(obj, RationalFunction):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return [obj.numerator, obj.denominator]
    if isinstance(obj, enum.Enum):
        return str(obj.value)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name), digits) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x, digits) for x in obj]
    return obj


def dump_json(obj: Any, digits: int) -> str:
    return json.dumps(to_jsonable(obj, digits), sort_keys=True, indent=2)


def exact_text(x) -> str:
    if isinstance(x, CyclotomicNumber) and x.is_rational():
        return str(x.to_rational())
    return repr(x)


def approx_text(x, digits: int) -> str:
    re, im = approx_complex(x, digits)
    if not im:
        return f"{re:f}"
    sign = "-" if im < 0 else "+"
    return f"{re:f} {sign} {abs(im):f}i"


def _csv_rows(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _value_columns(x, digits: int) -> list:
    re, im = approx_complex(x, digits)
    return [exact_text(x), f"{re:f}", f"{im:f}"]


def _grid(rows: Sequence[Sequence]) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells) + "\n"


def _table_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    return _grid([list(header)] + [list(row) for row in rows])


# ---------------------------------------------------------------------------
# Parameter validation
# ---------------------------------------------------------------------------


def _level(k: int) -> int:
    if k < 1:
        raise UsageError(f"--k must be at least 1, got {k}")
    return k


def _monoidal(k: int, m: int, pivotal: int = 1) -> CategoryParams:
    _level(k)
    if math.gcd(m, k + 2) != 1:
        raise UsageError(f"--m {m} must be coprime to k + 2 = {k + 2}")
    return CategoryParams(k, m, pivotal)


def _braided(k: int, ell: int, pivotal: int) -> BraidingParams:
    _level(k)
    if math.gcd(ell, k + 2) != 1:
        raise UsageError(f"--ell {ell} must satisfy gcd(l, k + 2) = 1, but gcd({ell}, {k + 2}) = {math.gcd(ell, k + 2)}")
    return BraidingParams(k, ell, pivotal)


def _pivotal(text: str) -> int:
    if text in ("+", "+1", "1", "plus"):
        return 1
    if text in ("-", "-1", "minus"):
        return -1
    raise argparse.ArgumentTypeError(f"pivotal must be + or -, not {text!r}")


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_classify(args) -> tuple[int, str]:
    record = classification_record(_level(args.k))
    if args.format == "json":
        return EXIT_OK, dump_json(record, args.digits) + "\n"
    if args.format == "csv":
        rows = [[b["ell"][0], " ".join(map(str, b["ell"])), b["name"] or "", b["m"], b["invertible_subcategory"], b["modular"]] for b in record["braided"]]
        return EXIT_OK, _csv_rows(["ell", "ells", "name", "m", "invertible_subcategory", "modular"], rows)
    out = [f"Level k = {args.k}", "", "Monoidal categories C_{k,m} (q = exp(m pi i/(k+2))):"]
    rows = []
    for entry in record["monoidal"]:
        algebras = "; ".join(f"{a['object']} -> {a['module_category']}" for a in entry["algebra_objects"]) or "-"
        rows.append([entry["m"], approx_text(entry["delta"], args.digits), entry["centre"]["expression"], algebras])
    out.append(_table_text(["m", "delta", "Drinfeld centre", "algebra objects"], rows))
    out.append("Braided categories C^br_{k,l}:")
    rows = [
        [" ".join(map(str, b["ell"])), b["name"] or "", b["m"], b["invertible_subcategory"], "yes" if b["modular"] else "no"]
        for b in record["braided"]
    ]
    out.append(_table_text(["l", "name", "m", "invertible subcategory", "modular"], rows))
    out.append("Monoidal equivalence classes (by l): " + "; ".join("{" + ", ".join(map(str, c)) + "}" for c in record["monoidal_classes"]))
    out.append("Galois orbits (by l): " + "; ".join("{" + ", ".join(map(str, o)) + "}" for o in record["galois_orbits"]))
    out.append("Galois orbits (by m): " + "; ".join("{" + ", ".join(map(str, o)) + "}" for o in record["monoidal_galois_orbits"]))
    aut = record["autoequivalences"]
    out.append(f"Auto-equivalences: tensor {aut['tensor']}, braided {aut['braided']}")
    return EXIT_OK, "\n".join(out) + "\n"


def cmd_data(args) -> tuple[int, str]:
    if args.ell is None:
        raise UsageError("data needs --ell")
    bp = _braided(args.k, args.ell, args.pivotal)
    k = bp.k
    dims = [qdim(bp.category, a) for a in range(k + 1)]
    S, T = s_matrix(bp), t_matrix(bp)
    rank = modularity_rank(bp)
    record = {
        "k": k,
        "ell": bp.ell,
        "m": bp.m,
        "pivotal": "+" if bp.pivotal == 1 else "-",
        "s": bp.s,
        "delta": bp.delta,
        "dims": dims,
        "S": S,
        "T": T,
        "conductor": conductor(bp),
        "rank": rank,
        "is_modular": rank == k + 1,
    }
    if args.format == "json":
        return EXIT_OK, dump_json(record, args.digits) + "\n"
    if args.format == "csv":
        rows = [["s", "", ""] + _value_columns(bp.s, args.digits), ["delta", "", ""] + _value_columns(bp.delta, args.digits)]
        rows += [["dims", a, ""] + _value_columns(d, args.digits) for a, d in enumerate(dims)]
        for name, mat in (("S", S), ("T", T)):
            rows += [[name, i, j] + _value_columns(x, args.digits) for i, row in enumerate(mat) for j, x in enumerate(row)]
        rows += [[key, "", "", record[key], "", ""] for key in ("conductor", "rank", "is_modular")]
        return EXIT_OK, _csv_rows(["field", "row", "col", "exact", "re", "im"], rows)
    out = [f"C^br_(k={k}, l={bp.ell}, {record['pivotal']})  monoidal class m = {bp.m}"]
    out.append(f"s = {exact_text(bp.s)}  ~ {approx_text(bp.s, args.digits)}")
    out.append(f"delta = {exact_text(bp.delta)}  ~ {approx_text(bp.delta, args.digits)}")
    out.append("dims: " + ", ".join(approx_text(d, args.digits) for d in dims))
    for name, mat in (("S", S), ("T", T)):
        out.append(f"{name}:")
        out.append(_grid([[approx_text(x, args.digits) for x in row] for row in mat]).rstrip())
    out.append(f"conductor = {record['conductor']}, rank S = {rank}, modular = {record['is_modular']}")
    return EXIT_OK, "\n".join(out) + "\n"


def cmd_jw(args) -> tuple[int, str]:
    if args.n < 0:
        raise UsageError(f"--n must be non-negative, got {args.n}")
    if args.k is None:
        delta = DELTA
    else:
        params = _monoidal(args.k, args.m, args.pivotal)
        delta = params.delta if params.pivotal == 1 else -params.delta
    try:
        f = jones_wenzl(args.n, delta)
    except ZeroDivisionError as exc:
        raise UsageError(f"f^({args.n}) does not exist here: {exc}") from None
    if args.format == "json":
        return EXIT_OK, json.dumps(f.to_json(lambda c: to_jsonable(c, args.digits)), sort_keys=True, indent=2) + "\n"
    terms = sorted(f.items(), key=lambda kv: kv[0].pairing)
    rows = [[exact_text(c), json.dumps([list(p) for p in d.pairs()])] for d, c in terms]
    if args.format == "csv":
        return EXIT_OK, _csv_rows(["coefficient", "pairs"], rows)
    return EXIT_OK, f"f^({args.n}): {len(rows)} terms\n" + _table_text(["coefficient", "pairs"], rows)


def _theta_rows(params: CategoryParams):
    r = range(params.k + 1)
    return [((a, b, c), theta_symbol(params, a, b, c)) for a in r for b in r for c in r if is_admissible(a, b, c, params.k)]


def _sixj_rows(params: CategoryParams):
    table = sixj_table(params.k, params.m)
    return table.items()


def _emit_labelled(args, params: CategoryParams, names: Sequence[str], rows) -> str:
    if args.format == "json":
        record = {
            "k": params.k,
            "m": params.m,
            "pivotal": "+" if params.pivotal == 1 else "-",
            "entries": [{"labels": list(labels), "value": value} for labels, value in rows],
        }
        return dump_json(record, args.digits) + "\n"
    if args.format == "csv":
        return _csv_rows(list(names) + ["exact", "re", "im"], [list(labels) + _value_columns(v, args.digits) for labels, v in rows])
    return _table_text(list(names) + ["value", "approx"], [list(labels) + [exact_text(v), approx_text(v, args.digits)] for labels, v in rows])


def cmd_theta(args) -> tuple[int, str]:
    params = _monoidal(args.k, args.m, args.pivotal)
    return EXIT_OK, _emit_labelled(args, params, ["a", "b", "c"], _theta_rows(params))


def cmd_sixj(args) -> tuple[int, str]:
    params = _monoidal(args.k, args.m, args.pivotal)
    return EXIT_OK, _emit_labelled(args, params, ["a", "b", "e", "c", "d", "f"], _sixj_rows(params))


def cmd_verify(args) -> tuple[int, str]:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    if args.k_max is not None and args.k_max < 0:
        raise UsageError("--k-max must be non-negative")

    def progress(line: str) -> None:
        print(line, file=sys.stderr, flush=True)

    try:
        workers = worker_count()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = run_suite(args.suite, k_max=args.k_max, progress=progress, workers=workers)
    code = EXIT_OK if result.passed else EXIT_FAIL
    if args.format == "json":
        return code, dump_json(result, args.digits) + "\n"
    lines = [f"{result.name}: {'PASS' if result.passed else 'FAIL'} ({result.checked} checks)"]
    lines += [f"  failure: {json.dumps(to_jsonable(f, args.digits), sort_keys=True)}" for f in result.failures]
    return code, "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--digits", type=_positive, default=12, help="decimal places in approximate annotations")

    parser = _Parser(prog="anfield", description="Exact data of fusion categories with A_n fusion rules.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="classification record at level k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("data", parents=[common], help="s, delta, dims, S, T, conductor, rank")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--pivotal", type=_pivotal, default=1)
    p.set_defaults(func=cmd_data)

    p = sub.add_parser("jw", parents=[common], help="Jones-Wenzl projector (symbolic unless --k is given)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--pivotal", type=_pivotal, default=1)
    p.set_defaults(func=cmd_jw)

    for name, func, help_text in (("theta", cmd_theta, "all theta symbols"), ("sixj", cmd_sixj, "all 6j symbols")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--m", type=int, default=1)
        p.add_argument("--pivotal", type=_pivotal, default=1)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite: " + ", ".join(SUITES))
    p.add_argument("suite")
    p.add_argument("--k-max", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"anfield {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
