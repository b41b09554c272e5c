"""Command-line front end: load catalogs or builtins, run the exact checks,
emit stable human tables and machine JSON.

Exit codes: 0 success (or "admits"), 1 honest negative verdict / failed
verification, 2 parse or usage errors.  JSON output is deterministic
(sorted keys, no timing data); timings only appear in the human text.
"""

import argparse
import json
import os
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .catalog import (CatalogError, builtin, parse_catalog_file, parse_form)
from .cecomplex import betti_numbers, build_complex
from .detect import contact_decide, symplectic_decide, verify_claimed_form
from .liealg import direct_product, instantiate_params, jacobi_violation, \
    upper_central_series

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2

_HAS_Y = re.compile(r"\by\b")


def _parse_bindings(pairs):
    bindings = {}
    for pair in pairs or ():
        name, eq, value = pair.partition("=")
        if not eq or not name or not value:
            raise ValueError("--param expects name=rational, got %r" % pair)
        bindings[name.strip()] = Fraction(value.strip())
    return bindings


def _load_selection(args):
    """Resolve --builtin/path/--name into (algebra, entry-or-None) pairs."""
    bindings = _parse_bindings(getattr(args, "param", None))
    if args.builtin:
        g = builtin(args.builtin)
        if bindings:
            g = instantiate_params(g, bindings)
        return [(g, None)]
    if not args.path:
        raise ValueError("supply a catalog path or --builtin NAME")
    entries = parse_catalog_file(args.path)
    if getattr(args, "name", None):
        entries = [e for e in entries if e.name == args.name]
        if not entries:
            raise ValueError("no algebra named %r in %s" % (args.name, args.path))
    return [(e.algebra(bindings or None), e) for e in entries]


def _single_selection(args):
    pairs = _load_selection(args)
    if len(pairs) != 1:
        raise ValueError("catalog holds %d algebras; select one with --name"
                         % len(pairs))
    return pairs[0]


def _fmt_ints(values):
    return ",".join(str(v) for v in values)


def _symplectic_report(g, space):
    verdict = symplectic_decide(g)
    out = {
        "space": space,
        "admits": verdict.admits,
        "pfaffian_nvars": verdict.pfaffian_nvars,
        "pfaffian_degree": verdict.pfaffian_degree,
        "certificate": verdict.certificate_kind,
    }
    if verdict.witness is not None:
        out["witness"] = verdict.witness.render(g.dual_labels)
    return out


def _contact_report(g):
    verdict = contact_decide(g)
    out = {"admits": verdict.admits}
    if verdict.witness is not None:
        out["witness"] = verdict.witness.render(g.dual_labels)
    return out


def _claimed_form_report(g, kind, expr):
    out = {"kind": kind, "expr": expr}
    try:
        has_y = bool(_HAS_Y.search(expr))
        target = direct_product(g, builtin("abelian:1")) if has_y else g
        form = parse_form(expr, g.dim, has_y)
        report = verify_claimed_form(target, form, kind)
        out["passed"] = report.passed
        out["checks"] = {name: ok for name, ok in report.checks}
    except (CatalogError, ValueError) as exc:
        out["passed"] = False
        out["error"] = str(exc)
    return out


def _analyze(g, entry=None, decisions=True):
    """One RunReport row; timing is returned separately from the row."""
    start = time.perf_counter()
    row = {"name": g.name, "dim": g.dim}
    bad = jacobi_violation(g)
    row["jacobi"] = bad is None
    if bad is not None:
        row["jacobi_violation"] = list(bad)
    else:
        ucs = upper_central_series(g)
        row["ucs_dims"] = list(ucs.dims)
        row["nilpotent"] = ucs.is_nilpotent
        row["betti"] = [r.betti for r in betti_numbers(build_complex(g))]
        if decisions:
            if g.dim % 2 == 0:
                row["symplectic"] = _symplectic_report(g, "g")
            else:
                ga = direct_product(g, builtin("abelian:1"))
                row["symplectic"] = _symplectic_report(ga, "g x a")
                row["contact"] = _contact_report(g)
        if entry is not None and entry.claimed_forms:
            row["claimed_forms"] = [
                _claimed_form_report(g, kind, expr)
                for kind, expr in entry.claimed_forms]
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return row, elapsed_ms


def _write_json(path, payload):
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _bool_word(flag):
    return "yes" if flag else "no"


# ---- subcommands -----------------------------------------------------------


def _cmd_check(args):
    rows = []
    all_jacobi = True
    for g, entry in _load_selection(args):
        row, ms = _analyze(g, entry, decisions=False)
        rows.append(row)
        all_jacobi &= row["jacobi"]
        print("algebra: %s" % row["name"])
        print("dim: %d" % row["dim"])
        print("jacobi: %s" % _bool_word(row["jacobi"]))
        if not row["jacobi"]:
            print("jacobi violated at: (%s)" % _fmt_ints(row["jacobi_violation"]))
        else:
            print("ucs: %s" % _fmt_ints(row["ucs_dims"]))
            print("nilpotent: %s" % _bool_word(row["nilpotent"]))
            print("betti: %s" % _fmt_ints(row["betti"]))
        print("time: %d ms" % ms)
    if args.json:
        _write_json(args.json, {"algebras": rows})
    return EXIT_OK if all_jacobi else EXIT_NO


def _cmd_symplectic(args):
    g, _ = _single_selection(args)
    if args.times_a:
        g = direct_product(g, builtin("abelian:1"))
    if g.dim % 2:
        raise ValueError("dimension %d is odd; symplectic needs an even total "
                         "dimension (try --times-a)" % g.dim)
    start = time.perf_counter()
    report = _symplectic_report(g, "g")
    ms = int((time.perf_counter() - start) * 1000)
    row = {"name": g.name, "dim": g.dim, "symplectic": report}
    print("algebra: %s" % g.name)
    print("dim: %d" % g.dim)
    print("symplectic: %s" % _bool_word(report["admits"]))
    if report["admits"]:
        print("witness: %s" % report["witness"])
    else:
        print("certificate: Pfaffian ≡ 0 (%d cocycle variables, degree %d)"
              % (report["pfaffian_nvars"], report["pfaffian_degree"]))
    print("time: %d ms" % ms)
    if args.json:
        _write_json(args.json, row)
    return EXIT_OK if report["admits"] else EXIT_NO


def _cmd_contact(args):
    g, _ = _single_selection(args)
    if g.dim % 2 == 0:
        raise ValueError("dimension %d is even; contact needs odd dimension"
                         % g.dim)
    start = time.perf_counter()
    report = _contact_report(g)
    ms = int((time.perf_counter() - start) * 1000)
    print("algebra: %s" % g.name)
    print("dim: %d" % g.dim)
    print("contact: %s" % _bool_word(report["admits"]))
    if report["admits"]:
        print("witness: %s" % report["witness"])
    print("time: %d ms" % ms)
    if args.json:
        _write_json(args.json, {"name": g.name, "dim": g.dim, "contact": report})
    return EXIT_OK if report["admits"] else EXIT_NO


def _cmd_verify_form(args):
    g, _ = _single_selection(args)
    target = direct_product(g, builtin("abelian:1")) if args.times_a else g
    form = parse_form(args.form, g.dim, has_y=args.times_a)
    report = verify_claimed_form(target, form, args.kind)
    print("algebra: %s" % target.name)
    print("form (%s): %s" % (args.kind, form.render(target.dual_labels)))
    for name, ok in report.checks:
        print("%s: %s" % (name, _bool_word(ok)))
    print("result: %s" % report.summary())
    if args.json:
        _write_json(args.json, {
            "name": target.name, "dim": target.dim, "kind": args.kind,
            "form": form.render(target.dual_labels),
            "passed": report.passed,
            "checks": {name: ok for name, ok in report.checks}})
    return EXIT_OK if report.passed else EXIT_NO


def _worker_count():
    raw = os.environ.get("NILSYM_THREADS")
    if raw is None or not raw.strip():
        return os.cpu_count() or 1
    if not raw.strip().isdigit() or int(raw) < 1:
        raise ValueError("NILSYM_THREADS must be a positive integer, got %r" % raw)
    return int(raw)


def _cmd_report(args):
    directory = args.dir
    workers = _worker_count()
    try:
        names = sorted(n for n in os.listdir(directory) if n.endswith(".cat"))
    except OSError as exc:
        raise ValueError("cannot read directory %s: %s" % (directory, exc))
    errors = []
    work = []  # (file, entry)
    for fname in names:
        path = os.path.join(directory, fname)
        try:
            for entry in parse_catalog_file(path):
                work.append((fname, entry))
        except (CatalogError, OSError) as exc:
            errors.append({"file": fname, "error": str(exc)})

    def run(item):
        fname, entry = item
        try:
            g = entry.algebra()
            row, ms = _analyze(g, entry, decisions=True)
            row["file"] = fname
            return row, ms, None
        except (CatalogError, ValueError) as exc:
            return None, 0, {"file": fname, "entry": entry.name, "error": str(exc)}

    if work:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, work))
    else:
        results = []
    rows = []
    timings = {}
    for row, ms, err in results:
        if err is not None:
            errors.append(err)
        else:
            rows.append(row)
            timings[(row["dim"], row["name"])] = ms
    rows.sort(key=lambda r: (r["dim"], r["name"]))

    flagged = False
    for row in rows:
        bits = ["%-16s" % row["name"], "dim=%d" % row["dim"],
                "jacobi=%s" % _bool_word(row["jacobi"])]
        if row["jacobi"]:
            bits.append("ucs=%s" % _fmt_ints(row["ucs_dims"]))
            bits.append("betti=%s" % _fmt_ints(row["betti"]))
            sym = row.get("symplectic")
            if sym:
                bits.append("symplectic(%s)=%s" % (sym["space"],
                                                   _bool_word(sym["admits"])))
            if "contact" in row:
                bits.append("contact=%s" % _bool_word(row["contact"]["admits"]))
            forms = row.get("claimed_forms", [])
            if forms:
                good = sum(1 for f in forms if f["passed"])
                bits.append("forms=%d/%d pass" % (good, len(forms)))
                if good < len(forms):
                    flagged = True
        else:
            flagged = True
        bits.append("time=%dms" % timings[(row["dim"], row["name"])])
        print("  ".join(bits))
    for err in errors:
        print("error: %s" % json.dumps(err, sort_keys=True), file=sys.stderr)
    if args.json:
        _write_json(args.json, {"algebras": rows, "errors": errors})
    return EXIT_ERROR if (errors or flagged) else EXIT_OK


# ---- argument parsing --------------------------------------------------------


def _add_source(sub, with_name=True):
    sub.add_argument("path", nargs="?", help="catalog file (.cat)")
    sub.add_argument("--builtin", metavar="NAME",
                     help="bundled algebra: abelian:N, heisenberg:N, g13457C")
    if with_name:
        sub.add_argument("--name", help="select one algebra from the catalog")
    sub.add_argument("--param", action="append", metavar="NAME=RATIONAL",
                     help="bind a structure-constant parameter, e.g. lambda=1/2")
    sub.add_argument("--json", metavar="PATH",
                     help="write a machine-readable report ('-' for stdout)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nilsym",
        description="Exact symplectic/contact detection for nilpotent Lie "
                    "algebras given by rational structure constants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="Jacobi, upper central series, Betti numbers")
    _add_source(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("symplectic", help="decide existence of a symplectic form")
    _add_source(p)
    p.add_argument("--times-a", action="store_true",
                   help="decide on g x a (one-dimensional factor appended)")
    p.set_defaults(func=_cmd_symplectic)

    p = sub.add_parser("contact", help="decide existence of a contact form")
    _add_source(p)
    p.set_defaults(func=_cmd_contact)

    p = sub.add_parser("verify-form",
                       help="verify a claimed symplectic/contact form")
    _add_source(p)
    p.add_argument("--form", required=True, metavar="EXPR",
                   help='form expression, e.g. "x1^x2 + x3^x4 + x5^y"')
    p.add_argument("--kind", required=True, choices=("symplectic", "contact"))
    p.add_argument("--times-a", action="store_true",
                   help="verify on g x a; enables the y generator")
    p.set_defaults(func=_cmd_verify_form)

    p = sub.add_parser("report", help="aggregate report over a catalog directory")
    p.add_argument("dir", help="directory of .cat files")
    p.add_argument("--json", metavar="PATH", help="write the aggregated JSON")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CatalogError, ValueError, ZeroDivisionError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
