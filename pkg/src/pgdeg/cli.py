"""Command-line front end.

Exit codes: 0 success, 1 validation/mathematical failure, 2 I/O or format
error, 3 budget exceeded (partial results are still emitted)."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import corpus
from .closure import EmptyNotClosedError
from .degree import degree, sphere_degree_check, replay_sphere_lower_bound
from .documents import (canonical_json, dump_document, load_document)
from .roots import (abelian_table, build, c3_worked_example, a2_example,
                    degree_table, max_really_abelian, parse_type, punctured_weyl,
                    verify_named_free_sets)
from .segal import (SegalVariant, check_lower_segal_spiny, check_lower_segal_words,
                    check_segal_generic, is_pass)
from .symcore import (GroupWords, PartialGroupoid, ResourceLimitExceeded,
                      WordPresentation)


def _emit(doc, fmt="json", out=None):
    if fmt == "json":
        text = canonical_json(doc)
    else:
        text = _as_table(doc)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _as_table(doc):
    if isinstance(doc, dict):
        rows = [(str(k), json.dumps(v, sort_keys=True, default=str))
                for k, v in sorted(doc.items())]
        width = max((len(k) for k, _ in rows), default=0)
        return "".join(f"{k:<{width}}  {v}\n" for k, v in rows)
    if isinstance(doc, list):
        return "".join(_as_table(row) + "\n" for row in doc)
    return str(doc) + "\n"


def _load_target(spec):
    """file path | corpus:SPEC | weyl:TYPE -> presentation/base object."""
    if spec.startswith("corpus:"):
        return corpus.make(spec.split(":", 1)[1])
    if spec.startswith("weyl:"):
        label = spec.split(":", 1)[1]
        [(t, n)] = parse_type(label)
        _, act, L = punctured_weyl(build(t, n))
        return L
    with open(spec, encoding="utf-8") as fh:
        return load_document(json.load(fh))


def _base_of(target):
    if isinstance(target, WordPresentation):
        return target.pg
    return target


def cmd_validate(args):
    try:
        obj = _load_target(args.target)
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 2
    if hasattr(obj, "validate"):
        report = obj.validate()
        _emit({"valid": not report, "violations": [str(v) for v in report]},
              args.format)
        return 0 if not report else 1
    _emit({"valid": True, "violations": [],
           "note": "presentation kind has no structural validator"}, args.format)
    return 0


def cmd_degree(args):
    target = _base_of(_load_target(args.target))
    rep = degree(target, method=args.method, n_max=args.nmax)
    _emit(rep.to_json(), args.format)
    if args.method == "both" and rep.agree is False:
        return 1
    return 0


def cmd_helly(args):
    obj = _load_target(args.target)
    try:
        h, witness = obj.helly_number(return_witness=True)
    except EmptyNotClosedError:
        _emit({"helly_number": None, "error": "empty set not closed"}, args.format)
        return 1
    _emit({"helly_number": h,
           "witness": [sorted(map(str, a)) for a in witness]}, args.format)
    return 0


def cmd_segal(args):
    target = _base_of(_load_target(args.target))
    variant = SegalVariant(args.variant.replace("_", "-"), args.k)
    checker = args.checker
    if checker == "auto":
        if isinstance(target, (PartialGroupoid, GroupWords)) \
                and getattr(target, "symmetric", True) and variant.kind == "lower-odd":
            checker = "starry"
        elif isinstance(target, (PartialGroupoid, GroupWords)):
            checker = "words"
        else:
            checker = "generic"
    if checker == "starry":
        res = check_lower_segal_spiny(target, args.k, args.nmax)
    elif checker == "words":
        res = check_lower_segal_words(target, args.k, args.nmax,
                                      variant_kind=variant.kind)
    else:
        pres = WordPresentation(target) if isinstance(target, PartialGroupoid) else target
        res = check_segal_generic(pres, variant, args.nmax)
    if is_pass(res):
        _emit({"pass": True, "condition": variant.degree_name(),
               "n_max": args.nmax, "checker": checker}, args.format)
        return 0
    _emit({"pass": False, "condition": variant.degree_name(),
           "checker": checker, "witness": res.to_json()}, args.format)
    return 1


def cmd_action(args):
    obj = _load_target(args.target)
    if args.domains:
        doms = {str(e): sorted(map(str, obj.dom_edge(e)))
                for e in obj._edges()}
        _emit({"domains": doms}, args.format)
        return 0
    report = obj.validate()
    _emit({"valid": not report, "violations": [str(v) for v in report]},
          args.format)
    return 0 if not report else 1


def cmd_roots(args):
    labels = [s.strip() for s in args.types.split(",") if s.strip()]
    if args.verify:
        out = {}
        if args.verify == "c3":
            r = c3_worked_example()
            out = {"faces_match": r["faces_match"], "word_empty": r["word_empty"],
                   "domains": {str(k): [list(v) for v in vs]
                               for k, vs in r["domains"].items()}}
            code = 0 if r["faces_match"] and r["word_empty"] else 1
        elif args.verify == "a2":
            r = a2_example()
            out = {k: (sorted(map(list, v)) if isinstance(v, (set, frozenset))
                       else (list(v) if isinstance(v, tuple) else v))
                   for k, v in r.items()}
            code = 0 if r["dom_is_beta"] and not r["pair_is_simplex"] else 1
        else:  # gamma
            out = {"sets": []}
            code = 0
            for label in labels or ["E6", "E7", "E8", "F4"]:
                [(t, n)] = parse_type(label)
                rep = verify_named_free_sets(build(t, n))
                out["sets"].append({k: rep[k] for k in ("type", "size", "free")})
                if not rep["free"]:
                    code = 1
        _emit(out, args.format)
        return code

    table = args.table or "degrees"
    if table == "degrees":
        rows = degree_table(labels, long_running=args.long_running)
    elif table == "abelian":
        rows = abelian_table(labels)
    else:
        rows = []
        for label in labels:
            [(t, n)] = parse_type(label)
            rs = build(t, n)
            v, w = max_really_abelian(rs, return_witness=True)
            from .roots import TableRow
            rows.append(TableRow(label, len(rs.positive), None, v, None,
                                 "searched", sorted(w)))
    payload = [r.to_json() for r in rows]
    if args.out:
        _write_delimited(payload, args.out)
    _emit(payload, args.format)
    if args.figures:
        _render_figures(rows, labels, table, args.figures)
    if table == "degrees" and any(r.degree is None for r in rows):
        return 3
    return 0


def _write_delimited(payload, path):
    import csv
    keys = ["type", "positive_roots", "h_Z", "h_R", "degree", "provenance"]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, fieldnames=keys, extrasaction="ignore")
        w.writeheader()
        for row in payload:
            w.writerow(row)


def _render_figures(rows, labels, table, outdir):
    from . import plots
    os.makedirs(outdir, exist_ok=True)
    written = [plots.degree_bar_chart(rows, os.path.join(outdir, f"{table}.png"))]
    for label in labels:
        parts = parse_type(label)
        if len(parts) == 1 and parts[0][1] == 3:
            rs = build(*parts[0])
            _, wit = max_really_abelian(rs, return_witness=True)
            written.append(plots.free_set_projection(
                rs, wit, os.path.join(outdir, f"{label}_witness.png")))
    print("\n".join(f"figure: {p}" for p in written), file=sys.stderr)


def cmd_corpus(args):
    obj = corpus.make(args.spec)
    base = _base_of(obj)
    doc = dump_document(base)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(doc))
    else:
        _emit(doc, "json")
    return 0


def cmd_sphere(args):
    if args.witness:
        if args.n >= 2:
            ok = replay_sphere_lower_bound(args.n)
            _emit({"n": args.n, "explicit_family_refutes": ok}, args.format)
            return 0 if ok else 1
        _emit({"n": args.n, "note": "n=1 refuted by the generic witness"},
              args.format)
        return 0
    rep = sphere_degree_check(args.n, n_max=args.nmax)
    _emit(rep.to_json(), args.format)
    ok = rep.upper_pass and not is_pass(rep.lower_witness)
    return 0 if ok else 1


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="pgdeg",
        description="degree of partial groupoids: Segal checks, Helly numbers, "
                    "punctured Weyl tables")
    ap.add_argument("--format", choices=("json", "table"), default="json")
    ap.add_argument("--threads", type=int,
                    default=int(os.environ.get("PGDEG_THREADS", "0")) or None,
                    help="accepted for compatibility; results are identical")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a JSON document")
    p.add_argument("target")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("degree", help="degree of a partial groupoid")
    p.add_argument("target", help="file, corpus:SPEC, or weyl:TYPE")
    p.add_argument("--method", choices=("helly", "brute", "both"), default="both")
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(fn=cmd_degree)

    p = sub.add_parser("helly", help="Helly number of a closure-space document")
    p.add_argument("target")
    p.set_defaults(fn=cmd_helly)

    p = sub.add_parser("segal", help="bounded higher-Segal check")
    p.add_argument("target")
    p.add_argument("--variant", default="lower-odd",
                   choices=("lower-odd", "lower-even", "upper-even", "upper-odd"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--checker", default="auto",
                   choices=("auto", "generic", "words", "starry"))
    p.set_defaults(fn=cmd_segal)

    p = sub.add_parser("action", help="validate an action or list domains")
    p.add_argument("target")
    p.add_argument("--validate", action="store_true")
    p.add_argument("--domains", action="store_true")
    p.set_defaults(fn=cmd_action)

    p = sub.add_parser("roots", help="root-system tables and verifications")
    p.add_argument("types", help="comma-separated, e.g. A3,B4,F4 or A1xA1")
    p.add_argument("--table", choices=("degrees", "abelian", "really-abelian"))
    p.add_argument("--verify", choices=("c3", "gamma", "a2"))
    p.add_argument("--long-running", action="store_true")
    p.add_argument("--out", help="write the table as CSV here")
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(fn=cmd_roots)

    p = sub.add_parser("corpus", help="construct a named example")
    p.add_argument("spec", help="e.g. na, sphere:2, skeleton:2,4, bcom:S3")
    p.add_argument("--emit", help="write the JSON document here")
    p.set_defaults(fn=cmd_corpus)

    p = sub.add_parser("sphere", help="symmetric sphere degree suite")
    p.add_argument("n", type=int)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--check", action="store_true")
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(fn=cmd_sphere)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ResourceLimitExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except json.JSONDecodeError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, AssertionError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
