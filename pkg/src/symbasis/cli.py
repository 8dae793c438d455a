"""Command line interface.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 missing data.
"""

import argparse
import json
import sys
from pathlib import Path

from . import bases, fixtures, modular, transition
from .errors import DataNotFoundError, DatasetError
from .linalg import ExactMatrix, smith_normal_form
from .partitions import Partition, is_prime, verify_length_identities
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text):
    """``"5"`` -> [5]; ``"1..8"`` -> [1, ..., 8]."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or LO..HI") from None


def _partition(text):
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _store(args):
    paths = getattr(args, "dataset", None) or []
    return modular.DatasetStore.from_files(paths)


def _emit(text, args):
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------------- commands

def cmd_basis(args):
    lam = _partition(args.partition)
    p = args.p
    kind = args.kind
    if kind == "schur":
        poly = bases.schur(lam)
    elif kind == "q":
        if not lam.is_strict():
            raise UsageError(f"{lam} is not strict")
        poly = bases.qfun(lam)
    elif kind == "w":
        poly = bases.w_basis(lam)
    elif kind == "reduced":
        poly = bases.p_reduced_schur(lam, p)
    elif kind == "brauer":
        if not lam.is_regular(p):
            raise UsageError(f"{lam} is not {p}-regular")
        poly = bases.brauer_schur(lam, _store(args), p)
    elif kind == "wp":
        poly = bases.w_basis_p(lam, p, _store(args))
    if args.format == "json":
        text = json.dumps(poly.to_json()) + "\n"
    elif args.format == "csv":
        text = "exps,coef\n" + "".join(
            f"\"{json.dumps(t['exps'])}\",{t['coef']}\n" for t in poly.to_json())
    else:
        text = str(poly) + "\n"
    _emit(text, args)
    return EXIT_OK


def _build(kind, n, p, args):
    if kind == "cartan":
        return modular.cartan(_store(args).get(p, n))
    if p == 2 and not args.brauer:
        a = transition.build_A(n)
    else:
        a = transition.build_A_p(n, p, _store(args))
    if kind == "A":
        return a
    if kind == "gram":
        return transition.gram(a)
    if kind == "stembridge":
        return transition.stembridge_submatrix(a)
    raise UsageError(f"unknown matrix kind {kind!r}")


def _render_matrix(m, fmt):
    if fmt == "json":
        return json.dumps(m.to_json()) + "\n"
    if fmt == "csv":
        return m.to_csv()
    return m.to_markdown()


def cmd_matrix(args):
    m = _build(args.kind, args.n, args.p, args)
    if args.paper_order:
        table = fixtures.load_table(args.paper_order)
        try:
            m = fixtures.align(m, table)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(_render_matrix(m, args.format), args)
    return EXIT_OK


def _in_scope(check, scope):
    name = check.name
    if scope == "all" or check.status == "skipped":
        return True
    if scope == "det":
        return name.startswith(("integral", "det"))
    if scope == "blocks":
        return name.startswith("block") and "elementary" not in name
    return "elementary" in name


def _filter(report, scope):
    return [c for c in report.checks if _in_scope(c, scope)]


def run_verify(scope, ns, p, store, basis=None):
    reports = []
    for n in ns:
        if scope in ("all", "lengths"):
            reports.append(verify_length_identities(n))
        if scope in ("all", "det", "blocks", "divisors"):
            tr = transition.verify_all(n, p, store, basis=basis)
            r = Report(f"transition n={n} p={p} basis={tr.basis}")
            r.extend(_filter(tr, scope))
            reports.append(r)
        if scope in ("all", "decomp", "divisors") and p == 2 and n >= 1:
            cd = transition.compare_decomposition(n, store.get(2, n) if store.has(2, n) else None)
            if scope == "divisors":
                cd.checks = [c for c in cd.checks if "SNF" in c.name]
            reports.append(cd)
    return reports


def cmd_verify(args):
    config = json.loads(Path(args.config).read_text()) if args.config else {}
    ns = parse_range(args.range or str(config.get("range", "1..10")))
    p = args.p if args.p_given else config.get("p", args.p)
    strict = args.strict or config.get("strict", False)
    store = _store(args)
    reports = run_verify(args.scope, ns, p, store, "brauer" if args.brauer else None)
    ok = all(r.ok for r in reports)
    skipped = any(r.skips for r in reports)
    if args.format == "json":
        text = json.dumps({"scope": args.scope, "p": p, "n": ns, "ok": ok,
                           "reports": [r.to_json() for r in reports]}, indent=1) + "\n"
    else:
        lines = []
        for r in reports:
            lines.append(f"# {r.title}")
            lines.extend(c.line() for c in r.checks)
        lines.append("OK" if ok else "FAILED")
        text = "\n".join(lines) + "\n"
    _emit(text, args)
    if not ok:
        return EXIT_FAIL
    if strict and skipped:
        return EXIT_DATA
    return EXIT_OK


def cmd_snf(args):
    source = args.source
    if Path(source).suffix == ".json" and Path(source).exists():
        m = ExactMatrix.from_json(Path(source).read_text())
        result = {"divisors": smith_normal_form(m)}
    else:
        if args.n is None:
            raise UsageError("snf KIND needs N")
        m = _build(source, args.n, args.p, args)
        if source == "gram":
            result = {"blocks": {f"{a},{b}": smith_normal_form(blk)
                                 for (a, b), blk in transition.gram_blocks(m)}}
        else:
            result = {"divisors": smith_normal_form(m)}
    _emit(json.dumps(result) + "\n", args)
    return EXIT_OK


def cmd_dataset(args):
    if args.action == "validate":
        for path in args.files:
            ds = modular.load(path)
            sys.stdout.write(f"{path}: ok (p={ds.p}, n={ds.n}, {len(ds.regular)} regular labels)\n")
        return EXIT_OK
    # bootstrap
    if len(args.files) != 1:
        raise UsageError("dataset bootstrap takes one transition-matrix source")
    src = args.files[0]
    path = Path(src)
    if path.suffix == ".json" and path.exists():
        data = json.loads(path.read_text())
        m = ExactMatrix.from_json(data).as_int()
        p = data.get("p", args.p)
        n = data.get("n", m.row_labels[0].weight)
    else:
        table = fixtures.load_table(src)
        m, p, n = table.matrix, table.p, table.n
    ds = modular.derive_bootstrap(m, p, n, source_note=f"bootstrap from {src}")
    text = json.dumps(ds.to_json(), indent=1) + "\n"
    _emit(text, args)
    return EXIT_OK


# ---------------------------------------------------------------------- parser

def _common(sub, formats=("text", "json", "csv", "md")):
    sub.add_argument("--p", type=int, default=2)
    sub.add_argument("--dataset", action="append", default=[],
                     help="dataset JSON file (repeatable); the bundled data is always loaded")
    sub.add_argument("--format", choices=formats, default=formats[0])
    sub.add_argument("--out", help="write output to this file")
    sub.add_argument("--brauer", action="store_true",
                     help="use the Brauer-Schur compound basis even for p=2")


def build_parser():
    parser = argparse.ArgumentParser(prog="symbasis",
                                     description="Schur, Q and compound bases and their transition matrices")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("basis", help="print a basis element")
    sp.add_argument("kind", choices=["schur", "q", "w", "wp", "reduced", "brauer"])
    sp.add_argument("partition")
    _common(sp)
    sp.set_defaults(func=cmd_basis)

    sp = subs.add_parser("matrix", help="print a transition, Gram, Stembridge or Cartan matrix")
    sp.add_argument("kind", choices=["A", "gram", "stembridge", "cartan"])
    sp.add_argument("n", type=int)
    sp.add_argument("--paper-order", help="fixture name or path whose label order to use")
    _common(sp, ("md", "json", "csv", "text"))
    sp.set_defaults(func=cmd_matrix)

    sp = subs.add_parser("verify", help="run verification checks")
    sp.add_argument("scope", choices=["all", "lengths", "det", "blocks", "divisors", "decomp"])
    sp.add_argument("range", nargs="?", help="N or LO..HI (default 1..10)")
    sp.add_argument("--strict", action="store_true", help="treat skipped checks as failures")
    sp.add_argument("--config", help="JSON file with defaults for range, p, strict")
    _common(sp, ("text", "json"))
    sp.set_defaults(func=cmd_verify)

    sp = subs.add_parser("snf", help="elementary divisors of a matrix")
    sp.add_argument("source", help="matrix JSON file, or one of A, gram, stembridge, cartan")
    sp.add_argument("n", type=int, nargs="?")
    _common(sp, ("json",))
    sp.set_defaults(func=cmd_snf)

    sp = subs.add_parser("dataset", help="validate or bootstrap modular datasets")
    sp.add_argument("action", choices=["validate", "bootstrap"])
    sp.add_argument("files", nargs="+")
    _common(sp, ("json",))
    sp.set_defaults(func=cmd_dataset)
    return parser


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.p_given = "--p" in argv
    if not is_prime(args.p):
        sys.stderr.write(f"error: p={args.p} is not prime\n")
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (DataNotFoundError, FileNotFoundError) as exc:
        sys.stderr.write(f"missing data: {exc}\n")
        return EXIT_DATA
    except DatasetError as exc:
        sys.stderr.write(f"invalid dataset: {exc}\n")
        return EXIT_FAIL
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
