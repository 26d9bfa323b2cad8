"""Command-line front end.

Every command prints a JSON report on stdout; errors go to stderr.  Exit
codes: 0 success, 1 validation or parse error, 2 precondition violation,
3 theorem-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import groups
from .congruence import is_group_with_identity, principal_congruence, quotient
from .errors import InvalidParams, SemigroupError
from .factory import CorpusSpec, build_corpus, double, group_catalog, group_name, left_group, resolve
from .fileio import dumps, dumps_json, from_semigroup, load
from .semigroup import check_order, idempotents, is_left_simple
from .series import (
    factors,
    find_composition_series,
    is_composition_series,
    jordan_holder_check,
    schreier_refine,
    series_isomorphic,
    validate_series,
)
from .subsets import enumerate_ru_subsemigroups, subset_report
from .verify import Limits, certify_member


def _emit(report: dict, args, start: float) -> None:
    if not getattr(args, "golden", False):
        report["timing"] = {"seconds": round(time.perf_counter() - start, 4)}
    sys.stdout.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")


def _pair(S, pair):
    return None if pair is None else [S.labels[pair[0]], S.labels[pair[1]]]


def _set(S, X) -> list[str]:
    return [S.labels[i] for i in X]


def _quotient_summary(Q) -> dict:
    G = Q.quotient
    return {
        "order": G.order,
        "group": group_name(G) if groups.is_group(G) else None,
        "classes": list(G.labels),
        "table": [list(r) for r in G.rows],
    }


def cmd_check(args) -> dict:
    S = load(args.file).semigroup()
    idem = idempotents(S)
    return {
        "command": "check",
        "file": args.file,
        "results": {
            "order": S.order,
            "associative": True,
            "left_simple": is_left_simple(S),
            "idempotents": len(idem),
            "idempotent_elements": _set(S, idem),
            "is_group": groups.is_group(S),
            "group_name": group_name(S) if groups.is_group(S) else None,
        },
    }


def cmd_subset(args) -> dict:
    sf = load(args.file)
    S = sf.semigroup()
    H = sf.subset(args.name)
    rep = subset_report(S, H)
    results = {
        "subset": args.name,
        "members": _set(S, H),
        "subsemigroup": rep.is_subsemigroup,
        "reflexive": rep.is_reflexive,
        "left_unitary": rep.is_left_unitary,
        "right_unitary": rep.is_right_unitary,
        "unitary": rep.is_unitary,
        "witnesses": {k: _pair(S, v) for k, v in rep.witnesses.items()},
    }
    if rep.is_reflexive_unitary:
        pc = principal_congruence(S, H)
        Q = quotient(S, pc.congruence)
        results["quotient"] = _quotient_summary(Q)
        results["quotient"]["group_with_identity_H"] = is_group_with_identity(Q, pc.h_class)
    return {"command": "subset", "file": args.file, "results": results}


def _series_from_names(sf, S, names):
    return validate_series(S, [S.full()] + [sf.subset(n) for n in names])


def _series_dict(S, ns) -> dict:
    return {
        "length": ns.length,
        "chain": [_set(S, X) for X in ns.chain],
        "factors": [group_name(q.quotient) for q in factors(ns).factors],
    }


def cmd_series(args) -> dict:
    sf = load(args.file)
    S = sf.semigroup()
    action = args.action
    if action == "validate":
        ns = _series_from_names(sf, S, args.names)
        ok, reason = is_composition_series(ns)
        results = _series_dict(S, ns)
        results.update({"valid": True, "composition_series": ok, "reason": reason})
    elif action == "refine":
        if not args.first or not args.second:
            raise InvalidParams("refine needs --first and --second subset lists")
        a = _series_from_names(sf, S, args.first)
        b = _series_from_names(sf, S, args.second)
        ra, rb, iso = schreier_refine(a, b)
        results = {
            "first": _series_dict(S, ra),
            "second": _series_dict(S, rb),
            "pairing": list(iso.permutation),
            "isomorphic": series_isomorphic(ra, rb) is not None,
        }
    elif action == "compose":
        check_order(S)
        found = find_composition_series(S, all=args.all)
        results = {"series": [_series_dict(S, ns) for ns in found]}
    elif action == "jordan-holder":
        check_order(S)
        rep = jordan_holder_check(S)
        results = {
            "series": [_series_dict(S, ns) for ns in rep.series],
            "length": rep.length,
            "factors": sorted(group_name(G) for G in rep.factors),
            "pairwise_isomorphic": True,
            "pairs_checked": rep.pairs_checked,
        }
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidParams(action)
    return {"command": f"series {action}", "file": args.file, "results": results}


def cmd_enumerate(args) -> dict:
    S = load(args.file).semigroup()
    found = enumerate_ru_subsemigroups(S)
    return {"command": "enumerate", "file": args.file,
            "results": {"count": len(found), "subsemigroups": [_set(S, X) for X in found]}}


def cmd_generate(args) -> dict:
    if args.kind == "left-group":
        if len(args.params) != 2 or not args.params[0].isdigit():
            raise InvalidParams("usage: generate left-group M GROUP")
        m, gname = int(args.params[0]), args.params[1]
        if m < 1 or gname not in group_catalog():
            raise InvalidParams(f"need m >= 1 and a group from {', '.join(group_catalog())}")
        S = left_group(m, group_catalog()[gname])
        name = f"L{m}x{gname}"
    else:
        if len(args.params) != 1:
            raise InvalidParams("usage: generate double NAME")
        S = double(resolve(args.params[0]))
        name = f"double({args.params[0]})"
    sf = from_semigroup(S)
    text = dumps_json(sf) if args.json else dumps(sf)
    if not args.output:
        sys.stdout.write(text)
        return None
    with open(args.output, "w") as fh:
        fh.write(text)
    return {"command": "generate", "results": {"name": name, "order": S.order, "output": args.output}}


def cmd_certify(args) -> dict:
    spec = CorpusSpec(max_order=args.max_order)
    corpus = sorted(build_corpus(spec), key=lambda m: m.name)
    limits = Limits()
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(certify_member, corpus, [limits] * len(corpus)))
    else:
        rows = [certify_member(m, limits) for m in corpus]
    members = [r.as_dict(args.golden) for r in rows]
    checks = [c["check"] for c in members[0]["checks"]] if members else []
    matrix = {m["name"]: {c["check"]: c["status"] for c in m["checks"]} for m in members}
    failures = [
        {"member": m["name"], "check": c["check"], "witness": c.get("witness")}
        for m in members for c in m["checks"] if c["status"] == "fail"
    ]
    return {
        "command": "certify",
        "corpus": {"max_order": spec.max_order, "members": len(members)},
        "checks": checks,
        "matrix": matrix,
        "members": members,
        "failures": failures,
        "passed": not failures,
    }


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leftsimple", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--golden", action="store_true", help="omit timing fields (byte-stable output)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="validate a semigroup file")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("subset", parents=[common], help="report on a named subset")
    c.add_argument("file")
    c.add_argument("name")
    c.set_defaults(func=cmd_subset)

    c = sub.add_parser("series", parents=[common], help="normal and composition series")
    c.add_argument("file")
    c.add_argument("action", choices=["validate", "refine", "compose", "jordan-holder"])
    c.add_argument("names", nargs="*", help="subset names S1 S2 ... (validate)")
    c.add_argument("--first", nargs="+", help="first series for refine")
    c.add_argument("--second", nargs="+", help="second series for refine")
    c.add_argument("--all", action="store_true", help="compose: list every composition series")
    c.set_defaults(func=cmd_series)

    c = sub.add_parser("enumerate", parents=[common], help="all reflexive unitary subsemigroups")
    c.add_argument("file")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("generate", parents=[common], help="write a left group or a doubled semigroup")
    c.add_argument("kind", choices=["left-group", "double"])
    c.add_argument("params", nargs="+")
    c.add_argument("-o", "--output")
    c.add_argument("--json", action="store_true", help="write the JSON mirror format")
    c.set_defaults(func=cmd_generate)

    c = sub.add_parser("certify", parents=[common], help="run every theorem check over the corpus")
    c.add_argument("--max-order", type=int, default=CorpusSpec().max_order)
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_certify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except SemigroupError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return exc.exit_code
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    if report is None:
        return 0
    _emit(report, args, start)
    if report.get("passed") is False:
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
