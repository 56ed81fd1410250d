"""Command-line front end: ``cp2bundles info`` and ``cp2bundles verify``.

Exit status is 0 on success, 1 when a verification case fails and 2 for usage
errors (including inadmissible parameters).
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from typing import Any, Sequence

from . import bordism, bundles, kreck_stolz, mcg_action
from .bundles import BundleParams, NotRealizableError
from .intlat import lattice_equal

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _matrices(mats) -> list[list[list[int]]]:
    return [m.tolist() for m in mcg_action.sorted_matrices(mats)]


def _torelli_payload(n: int) -> dict[str, Any]:
    res = kreck_stolz.torelli_group(n)
    o2, o1 = res.generator_orders
    return {
        "n": n,
        "group": str(res),
        "generator_orders": {"g2": o2, "g1": o1},
        "invariant_factors": list(res.group.invariant_factors),
    }


def cmd_info(args) -> tuple[str, dict[str, Any]]:
    milnor_k = None
    if args.milnor is not None:
        if args.r is not None or args.k is not None or args.l is not None:
            raise UsageError("--milnor cannot be combined with --r/--k/--l")
        if args.milnor < 1:
            raise UsageError("--milnor needs K >= 1")
        milnor_k = args.milnor
        params = bundles.milnor_params(milnor_k)
    elif args.r is not None:
        if args.k is not None or args.l is not None:
            raise UsageError("--r cannot be combined with --k/--l")
        try:
            params = bundles.params_for_r(args.r)
        except NotRealizableError as exc:
            raise UsageError(str(exc)) from None
    elif args.k is not None and args.l is not None:
        params = BundleParams(args.k, args.l)
    else:
        raise UsageError("give one of --k K --l L, --r R or --milnor K")

    r = params.r
    canonical = bundles.params_for_r(r)
    torelli_known = r % 8 == 5
    if args.torelli:
        if milnor_k is not None and milnor_k % 2 == 0:
            raise UsageError(f"Torelli group of M_k is known only for odd k, got k={milnor_k}")
        if not torelli_known:
            raise UsageError(f"Torelli group is computed only for r in 8Z+5, got r={r}")

    image = mcg_action.image_of_R(params)
    payload: dict[str, Any] = {
        "r": r,
        "presentation": {"k": params.k, "l": params.l},
        "canonical": {"k": canonical.k, "l": canonical.l},
    }
    if milnor_k is not None:
        payload["milnor_k"] = milnor_k
    payload.update({
        "spin": bundles.is_spin(r),
        "c1": bundles.chern_c1(params).terms(),
        "p1": bundles.pontrjagin_p1(params).terms(),
        "image_of_R": {"tag": "S3" if r == -3 else "Z2", "matrices": _matrices(image)},
        "torelli": _torelli_payload((r - 5) // 8) if torelli_known else mcg_action.NOT_COMPUTED,
    })
    if torelli_known:
        facts = bundles.homotopy_facts(r)
        payload["homotopy"] = {"pi3": facts.pi3, "pi4": facts.pi4, "pi5": facts.pi5_description, "pi6": facts.pi6}
    return "info", payload


def _check_range(lo: int, hi: int, what: str) -> range:
    if lo > hi:
        raise UsageError(f"malformed {what} range: {lo} > {hi}")
    return range(lo, hi + 1)


def _suite_lattice(args) -> list[dict[str, Any]]:
    cases = []
    for l in _check_range(args.l_min, args.l_max, "l"):
        got = kreck_stolz.lattice_L(l)
        closed = kreck_stolz.lattice_L_closed_form(l)
        cases.append({"l": l, "passed": lattice_equal(got, closed), "hnf": got.tolist(),
                      "closed_form": [closed[i, i] for i in range(3)]})
    return cases


def _suite_table(args) -> list[dict[str, Any]]:
    cases = []
    names = list(bordism.signature_zero_basis())
    for l in _check_range(args.l_min, args.l_max, "l"):
        alpha, beta = kreck_stolz.alpha_beta(l)
        kernel_ok = kreck_stolz.ghat_star(alpha, l).is_zero() and kreck_stolz.ghat_star(beta, l).is_zero()
        table = kreck_stolz.char_table(l)
        printed = kreck_stolz.printed_char_table(l)
        mismatches = [
            {"row": names[i], "column": kreck_stolz.TABLE_COLUMNS[j], "computed": table[i, j], "printed": printed[i, j]}
            for i in range(table.nrows) for j in range(3) if table[i, j] != printed[i, j]
        ]
        cases.append({"l": l, "passed": kernel_ok and not mismatches, "kernel": kernel_ok,
                      "table": table.tolist(), "mismatches": mismatches})
    return cases


def _suite_bordism(args) -> tuple[list[dict[str, Any]], list[str]]:
    report = bordism.verify_appendix(correct_m7=not args.no_m7_correction)
    cases = [{"check": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks]
    return cases, report.notes


def _suite_automorphisms(args) -> list[dict[str, Any]]:
    if (args.k is None) != (args.l is None):
        raise UsageError("give both --k and --l, or neither")
    if args.k is not None:
        box = [BundleParams(args.k, args.l)]
    else:
        box = [BundleParams(k, l) for k in _check_range(args.k_min, args.k_max, "k")
               for l in _check_range(args.l_min, args.l_max, "l")]
    if args.bound is not None and args.bound < 1:
        raise UsageError("--bound must be >= 1")
    cases = []
    for p in box:
        bound = args.bound if args.bound is not None else mcg_action.default_bound(p)
        classified = mcg_action.image_of_R(p)
        brute = mcg_action.brute_force_automorphisms(p, bound)
        cases.append({"k": p.k, "l": p.l, "r": p.r, "bound": bound, "passed": classified == brute,
                      "found": len(brute), "matrices": _matrices(brute)})
    return cases


def cmd_verify(args) -> tuple[str, dict[str, Any]]:
    notes: list[str] = []
    if args.suite == "lattice":
        cases = _suite_lattice(args)
    elif args.suite == "table":
        cases = _suite_table(args)
    elif args.suite == "bordism":
        cases, notes = _suite_bordism(args)
    else:
        cases = _suite_automorphisms(args)
    failed = sum(not c["passed"] for c in cases)
    payload = {"suite": args.suite, "cases": len(cases), "failed": failed, "results": cases}
    if notes:
        payload["notes"] = notes
    return ("fail" if failed else "pass"), payload


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cp2bundles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="invariants of N_r")
    info.add_argument("--k", type=int)
    info.add_argument("--l", type=int)
    info.add_argument("--r", type=int)
    info.add_argument("--milnor", type=int, metavar="K")
    info.add_argument("--torelli", action="store_true", help="fail unless the Torelli group can be reported")
    info.add_argument("--json", action="store_true")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=["lattice", "table", "bordism", "automorphisms"])
    verify.add_argument("--l-min", type=int, default=None)
    verify.add_argument("--l-max", type=int, default=None)
    verify.add_argument("--k-min", type=int, default=-5)
    verify.add_argument("--k-max", type=int, default=5)
    verify.add_argument("--k", type=int)
    verify.add_argument("--l", type=int)
    verify.add_argument("--bound", type=int)
    verify.add_argument("--no-m7-correction", action="store_true",
                        help="compare M7 with the row as printed")
    verify.add_argument("--json", action="store_true")
    return parser


_DEFAULT_L_RANGE = {"lattice": (-50, 50), "table": (-27, 27), "automorphisms": (-5, 5), "bordism": (0, 0)}


def _render_text(report: dict[str, Any]) -> str:
    lines = [f"$ cp2bundles {report['command']}", f"status: {report['status']}"]
    payload = report["payload"]
    if "suite" in payload:
        lines.append(f"suite {payload['suite']}: {payload['cases']} cases, {payload['failed']} failed")
        for case in payload["results"]:
            if not case["passed"]:
                lines.append(f"  FAIL {json.dumps({k: v for k, v in case.items() if k not in ('table', 'matrices')})}")
        for note in payload.get("notes", []):
            lines.append(f"  note: {note}")
        return "\n".join(lines)
    for key, value in payload.items():
        if key == "image_of_R":
            lines.append(f"image_of_R: {value['tag']} ({len(value['matrices'])} matrices)")
            for m in value["matrices"]:
                lines.append(f"  {m}")
        elif key == "torelli" and isinstance(value, dict):
            lines.append(f"torelli: {value['group']}  (g2 order {value['generator_orders']['g2']}, "
                         f"g1 order {value['generator_orders']['g1']})")
        elif key in ("c1", "p1"):
            lines.append(f"{key}: " + (" + ".join(f"{v}*{k}" for k, v in value.items()).replace("+ -", "- ") or "0"))
        elif isinstance(value, dict):
            lines.append(f"{key}: " + ", ".join(f"{k}={v}" for k, v in value.items()))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        lo, hi = _DEFAULT_L_RANGE[args.suite]
        args.l_min = lo if args.l_min is None else args.l_min
        args.l_max = hi if args.l_max is None else args.l_max
    command = " ".join(shlex.quote(a) for a in argv if a != "--json")
    try:
        if args.command == "info":
            status, payload = cmd_info(args)
        else:
            status, payload = cmd_verify(args)
    except UsageError as exc:
        report = {"command": command, "status": "error", "payload": {"error": str(exc)}}
        if args.json:
            print(json.dumps(report, indent=2, ensure_ascii=False))
        else:
            print(f"cp2bundles: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {"command": command, "status": status, "payload": payload}
    if args.json:
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        print(_render_text(report))
    return EXIT_FAIL if status == "fail" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
