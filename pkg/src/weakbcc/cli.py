"""Command-line front end.

Exit codes: 0 success / property holds, 1 usage or parse error,
2 property absent (or not a weak BCC-algebra), 3 not isomorphic.
JSON output always uses element indices; text output uses labels.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from pathlib import Path

from .audit import COUNTEREXAMPLE, audit_algebra, audit_catalog, parse_theorems
from .axioms import check_axioms, classify
from .enumeration import FILTERS, are_isomorphic, enumerate_order, load_catalog, save_catalog
from .model import Algebra, ParseError, read_table
from .properties import CATALOG, check_identity, circle_group_check, condition_s, property_vector
from .structure import PrerequisiteError, derive_order

EXIT_OK, EXIT_USAGE, EXIT_ABSENT, EXIT_NOT_ISO = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, message: str, payload: dict | None = None):
        super().__init__(message)
        self.code = code
        self.payload = payload


def _verdict(v) -> dict:
    d = {"holds": v.holds}
    if not v:
        d["witness"] = v.witness.to_dict() if v.witness else None
    return d


def _load(path: str) -> Algebra:
    try:
        return read_table(path)
    except FileNotFoundError:
        raise _Fail(EXIT_USAGE, f"{path}: no such file")
    except ParseError as exc:
        raise _Fail(EXIT_USAGE, f"{path}: {exc}")
    except (OSError, UnicodeDecodeError) as exc:
        raise _Fail(EXIT_USAGE, f"{path}: {exc}")


def _require_weak(a: Algebra) -> dict:
    rep = classify(a)
    if not rep.is_weak_bcc:
        raise _Fail(
            EXIT_ABSENT,
            f"{a.name or 'input'} is not a weak BCC-algebra",
            {"classification": rep.to_dict()},
        )
    return rep


def _fmt_witness(a: Algebra, w) -> str:
    if w is None:
        return ""
    parts = ", ".join(f"{k}={a.label(v)}" for k, v in w.assignment)
    if w.lhs is None:
        return f"({parts})"
    side = "!=" if w.relation == "=" else "not <="
    return f"({parts}: {a.label(w.lhs)} {side} {a.label(w.rhs)})"


def _fmt_table(a: Algebra, rows) -> list[str]:
    lab = [a.label(x) for x in a.elements]
    w = max(len(s) for s in lab)
    head = " " * w + " | " + " ".join(s.rjust(w) for s in lab)
    lines = [head, "-" * len(head)]
    for x, row in enumerate(rows):
        lines.append(lab[x].rjust(w) + " | " + " ".join(a.label(v).rjust(w) for v in row))
    return lines


# --- subcommands -------------------------------------------------------------------
# each returns (exit code, result payload, human-readable lines)


def cmd_check(args):
    a = _load(args.file)
    axioms = check_axioms(a)
    rep = classify(a)
    result = {
        "axioms": {k: _verdict(v) for k, v in axioms.items()},
        "classification": rep.to_dict(),
    }
    flags = [k for k, v in rep.flags().items() if v]
    if rep.is_weak_bcc:
        solid = check_identity(a, derive_order(a), "I_SOLID")
        result["solid"] = _verdict(solid)
        if solid:
            flags.append("solid")
    lines = [f"{a.name}: order {a.order}"]
    for k, v in axioms.items():
        lines.append(f"  axiom ({k}): {'ok' if v else 'fails ' + _fmt_witness(a, v.witness)}")
    lines.append("  flags: " + (", ".join(flags) if flags else "none"))
    result["flags"] = flags
    return (EXIT_OK if rep.is_weak_bcc else EXIT_ABSENT), result, lines


def _branch_payload(a: Algebra, o):
    return {
        "I(G)": o.roots,
        "branches": {str(r): b for r, b in o.branches().items()},
        "phi": list(o.phi),
    }


def cmd_classify(args):
    a = _load(args.file)
    rep = _require_weak(a)
    o = derive_order(a)
    pv = property_vector(a, o)
    s = pv["condition_s"]
    props = {k: _verdict(v) for k, v in pv["checks"].items()}
    result = {
        "classification": rep.to_dict(),
        **_branch_payload(a, o),
        "properties": props,
        "group_like": pv["group_like"],
        "restricted": pv["restricted"],
        "involutory": pv["involutory"],
        "greatest": {str(r): g for r, g in sorted(pv["greatest"].items())},
        "min_fold": pv["min_fold"],
        "condition_s": s.to_dict(),
    }
    if args.scope:
        result["scope"] = args.scope
        result["identities"] = _scoped_identities(a, o, args.scope)

    L = a.label
    lines = [f"{a.name}: order {a.order}"]
    lines.append("  class: " + ", ".join(f"{k}={v}" for k, v in rep.flags().items()))
    lines.append("  I(G): {" + ", ".join(L(r) for r in o.roots) + "}")
    for r, b in o.branches().items():
        lines.append(f"  B({L(r)}) = {{" + ", ".join(L(x) for x in b) + "}")
    for k, v in pv["checks"].items():
        lines.append(f"  {k}: {str(v.holds).lower()} {_fmt_witness(a, v.witness)}".rstrip())
    lines.append(f"  group_like: {str(pv['group_like']).lower()}")
    lines.append(f"  restricted: {str(pv['restricted']).lower()}")
    lines.append(f"  involutory: {json.dumps(pv['involutory'])}")
    lines.append(f"  min_fold: {pv['min_fold']}")
    if s.holds:
        lines.append("  condition_s: true")
    else:
        x, y = s.failing_pair
        aset = ", ".join(L(z) for z in sorted(s.failing_set))
        lines.append(f"  condition_s: false at ({L(x)}, {L(y)}), A = {{{aset}}}")
    if args.scope:
        for tag, v in result["identities"].items():
            lines.append(f"  [{args.scope}] {tag}: {v}")
    return EXIT_OK, result, lines


def _scoped_identities(a: Algebra, o, scope: str) -> dict:
    out = {}
    for tag, decl in sorted(CATALOG.items()):
        if decl.needs in ("power", "circle"):
            continue
        try:
            v = check_identity(a, o, tag, scope=scope)
        except PrerequisiteError:
            continue
        out[tag] = _verdict(v)
    return out


def cmd_branches(args):
    a = _load(args.file)
    _require_weak(a)
    o = derive_order(a)
    result = _branch_payload(a, o)
    L = a.label
    lines = [f"{a.name}: I(G) = {{" + ", ".join(L(r) for r in o.roots) + "}"]
    for r, b in o.branches().items():
        lines.append(f"  B({L(r)}) = {{" + ", ".join(L(x) for x in b) + "}")
    return EXIT_OK, result, lines


def cmd_circle(args):
    a = _load(args.file)
    _require_weak(a)
    o = derive_order(a)
    s = condition_s(a, o)
    if not s.holds:
        x, y = s.failing_pair
        raise _Fail(
            EXIT_ABSENT,
            f"condition (S) fails: A({a.label(x)}, {a.label(y)}) has no greatest element",
            {"condition_s": s.to_dict()},
        )
    g = circle_group_check(a, s)
    result = {"condition_s": s.to_dict(), "group": g.to_dict()}
    lines = [f"{a.name}: circle table"] + _fmt_table(a, s.circle)
    lines.append(f"group: {str(g.is_group).lower()}, abelian: {str(g.is_abelian).lower()}")
    for k, w in sorted(g.witnesses.items()):
        lines.append(f"  {k} fails {_fmt_witness(a, w)}")
    return EXIT_OK, result, lines


def _jobs(args) -> int:
    return args.jobs if args.jobs else (os.cpu_count() or 1)


def cmd_audit(args):
    try:
        tags = parse_theorems(args.theorems)
    except KeyError as exc:
        raise _Fail(EXIT_USAGE, str(exc.args[0]))
    if args.file:
        a = _load(args.file)
        _require_weak(a)
        rep = audit_algebra(a, tags)
        lines = [f"{a.name}: " + ", ".join(f"{k} {v}" for k, v in rep.summary().items())]
        for tag, res in rep.results.items():
            line = f"  {tag}: {res.status}"
            if res.status == COUNTEREXAMPLE:
                line += " " + _fmt_witness(a, res.witness)
            elif res.status != "holds":
                failed = [h for h, ok in res.hypotheses.items() if not ok]
                line += " (" + ", ".join(f"{h}=false" for h in failed) + ")"
            lines.append(line)
        code = EXIT_ABSENT if rep.counterexamples else EXIT_OK
        return code, rep.to_dict(), lines

    if args.catalog:
        d = Path(args.catalog)
        if not d.is_dir():
            raise _Fail(EXIT_USAGE, f"{d}: not a directory")
        try:
            models = load_catalog(d)
        except (ParseError, OSError) as exc:
            raise _Fail(EXIT_USAGE, f"{d}: {exc}")
    else:
        if args.order < 1:
            raise _Fail(EXIT_USAGE, "--order must be positive")
        models = enumerate_order(args.order, jobs=_jobs(args)).algebras()
    cat = audit_catalog(models, tags, jobs=_jobs(args))
    lines = [f"{cat.models} models, {len(cat.counterexamples)} counterexamples"]
    for tag, c in sorted(cat.status_counts.items()):
        lines.append(f"  {tag}: " + ", ".join(f"{k} {v}" for k, v in c.items()))
    for ce in cat.counterexamples:
        lines.append(f"  COUNTEREXAMPLE {ce['theorem']} on {ce['model']}: {ce['witness']}")
    return (EXIT_ABSENT if cat.counterexamples else EXIT_OK), cat.to_dict(), lines


def cmd_enumerate(args):
    if args.order < 1:
        raise _Fail(EXIT_USAGE, "--order must be positive")
    cat = enumerate_order(args.order, args.filter, jobs=_jobs(args))
    vectors = Counter(
        ",".join(k for k, v in e.report.flags().items() if v) or "none" for e in cat.entries
    )
    result = {
        "order": cat.order,
        "filter": cat.filter,
        "count": len(cat),
        "by_class": dict(sorted(vectors.items())),
        "entries": [e.key for e in cat.entries],
    }
    if args.out:
        try:
            result["written_to"] = str(save_catalog(cat, args.out))
        except OSError as exc:
            raise _Fail(EXIT_USAGE, f"cannot write catalog: {exc}")
    lines = [f"order {cat.order}, filter {cat.filter or 'none'}: {len(cat)} classes"]
    lines += [f"  {k}: {v}" for k, v in sorted(vectors.items())]
    if args.out:
        lines.append(f"written to {result['written_to']}")
    return EXIT_OK, result, lines


def cmd_iso(args):
    a, b = _load(args.file_a), _load(args.file_b)
    cert = are_isomorphic(a, b)
    if cert is None:
        return EXIT_NOT_ISO, {"isomorphic": False}, [f"{a.name} and {b.name} are not isomorphic"]
    mapping = list(cert.mapping)
    lines = [f"{a.name} ~ {b.name}"]
    lines += [f"  {a.label(x)} -> {b.label(y)}" for x, y in enumerate(mapping)]
    return EXIT_OK, {"isomorphic": True, "mapping": mapping}, lines


# --- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weakbcc", description="Finite weak BCC-algebra toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="check axioms and class flags")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("classify", parents=[common], help="full property vector")
    s.add_argument("file")
    s.add_argument("--scope", choices=["branchwise", "global"], help="also evaluate every identity at this scope")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("branches", parents=[common], help="minimal elements and branches")
    s.add_argument("file")
    s.set_defaults(func=cmd_branches)

    s = sub.add_parser("circle", parents=[common], help="circle table under condition (S)")
    s.add_argument("file")
    s.set_defaults(func=cmd_circle)

    s = sub.add_parser("audit", parents=[common], help="audit theorems on models")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--file")
    src.add_argument("--catalog", help="directory of .bcc files")
    src.add_argument("--order", type=int, help="audit every class of this order")
    s.add_argument("--theorems", default="all", help="comma-separated tags or 'all'")
    s.add_argument("--jobs", type=int, default=None)
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("enumerate", parents=[common], help="enumerate isomorphism classes")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--filter", choices=sorted(FILTERS))
    s.add_argument("--out", help="write the catalog under this directory")
    s.add_argument("--jobs", type=int, default=None)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("iso", parents=[common], help="test two tables for isomorphism")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.set_defaults(func=cmd_iso)
    return p


def _inputs(args) -> list[str]:
    names = [getattr(args, k, None) for k in ("file", "file_a", "file_b", "catalog")]
    return [Path(n).name for n in names if n]


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        code, result, lines = args.func(args)
        error = None
    except _Fail as exc:
        code, result, lines, error = exc.code, exc.payload, [], str(exc)

    if args.json:
        report = {"command": args.command, "inputs": _inputs(args), "exit_code": code, "result": result}
        if error:
            report["error"] = error
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        if error:
            print(f"weakbcc {args.command}: {error}", file=sys.stderr)
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
