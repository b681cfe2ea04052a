"""Command-line front end.

Exit status: 0 when every requested check passes, 1 when a check fails,
2 on input or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import builtin
from .certificates import check_certificate, load_certificate
from .division import StaffordInstance, in_V
from .klein import eval_word, parse_spoly
from .laurent import divides, parse_rpoly
from .presentations import euler_characteristic, load_presentation
from .verify import default_witness, full_report, stafford_verdict
from .words import parse_word


def _resolve_presentation(name_or_path: str):
    if name_or_path in builtin.PRESENTATIONS:
        return builtin.named_presentation(name_or_path)
    return load_presentation(name_or_path)


def _add_format(sub) -> None:
    sub.add_argument(
        "--format", choices=("json", "text"), default="text", help="output format"
    )


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_verify_paper(args) -> int:
    report = full_report()
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.all_ok else 1


def cmd_chi(args) -> int:
    p = _resolve_presentation(args.presentation)
    value = euler_characteristic(p)
    _emit(args, {"command": "chi", "value": value}, str(value))
    return 0


def cmd_normal_form(args) -> int:
    w = parse_word(args.word, ("x", "y"))
    nf = str(eval_word(w).to_word())
    _emit(args, {"command": "normal-form", "word": args.word, "value": nf}, nf)
    return 0


def cmd_fox(args) -> int:
    from .presentations import fox_derivative

    combo = fox_derivative(parse_word(args.word), args.generator)
    _emit(
        args,
        {"command": "fox", "word": args.word, "generator": args.generator,
         "value": str(combo)},
        str(combo),
    )
    return 0


def _instance_from(args) -> StaffordInstance:
    return StaffordInstance(parse_rpoly(args.r), parse_rpoly(args.s))


def cmd_member(args) -> int:
    inst = _instance_from(args)
    v = parse_spoly(args.element)
    ok = in_V(v, inst)
    _emit(
        args,
        {"command": "member", "element": str(v), "r": str(inst.r),
         "s": str(inst.s), "value": ok},
        "true" if ok else "false",
    )
    return 0 if ok else 1


def cmd_divides(args) -> int:
    a = parse_rpoly(args.a)
    b = parse_rpoly(args.b)
    ok = divides(a, b)
    _emit(
        args,
        {"command": "divides", "a": str(a), "b": str(b), "value": ok},
        "true" if ok else "false",
    )
    return 0 if ok else 1


def cmd_certificate(args) -> int:
    cert = load_certificate(args.certificate)
    if args.presentation is not None:
        src = _resolve_presentation(args.presentation)
    elif cert.source is not None:
        src = _resolve_presentation(cert.source)
    else:
        raise ValueError("certificate names no source; pass --presentation")
    ok = check_certificate(src, cert)
    _emit(
        args,
        {"command": "certificate", "target": str(cert.target), "value": ok},
        "pass" if ok else "fail",
    )
    return 0 if ok else 1


def cmd_stafford(args) -> int:
    inst = _instance_from(args)
    witness = default_witness() if inst == builtin.stafford_instance() else None
    verdict = stafford_verdict(inst, witness)
    payload = {
        "command": "stafford",
        "r": str(inst.r),
        "s": str(inst.s),
        "condition_i": verdict.condition_i,
        "condition_ii": verdict.condition_ii,
        "witnesses_ok": verdict.witnesses_ok,
        "degree_one": str(verdict.degree_one) if verdict.degree_one else None,
        "monic": str(verdict.monic) if verdict.monic else None,
    }
    lines = [
        f"condition_i   {'ok' if verdict.condition_i else 'FAIL'}"
        + ("" if witness else "  (no unit-combination witness for this instance)"),
        f"condition_ii  {'ok' if verdict.condition_ii else 'FAIL'}",
        f"witnesses_ok  {'ok' if verdict.witnesses_ok else 'FAIL'}",
        f"degree_one    {payload['degree_one']}",
        f"monic         {payload['monic']}",
    ]
    _emit(args, payload, "\n".join(lines))
    ok = verdict.condition_i and verdict.condition_ii and verdict.witnesses_ok
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kleinverify",
        description=(
            "Exact checks around the Klein bottle group ring: presentation "
            "equivalence certificates, boundary factorizations, and the "
            "stably-free-not-free verdict for the kernel module."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify-paper", help="run the whole replication suite")
    _add_format(sp)
    sp.set_defaults(func=cmd_verify_paper)

    sp = sub.add_parser("chi", help="Euler characteristic of a presentation")
    sp.add_argument("--presentation", default="Q", help="P, Q, or a JSON file path")
    _add_format(sp)
    sp.set_defaults(func=cmd_chi)

    sp = sub.add_parser("normal-form", help="normal form y^m x^n of a word")
    sp.add_argument("word", help="word in x, y, e.g. 'y^-1 x y'")
    _add_format(sp)
    sp.set_defaults(func=cmd_normal_form)

    sp = sub.add_parser("fox", help="free derivative of a word")
    sp.add_argument("word")
    sp.add_argument("generator")
    _add_format(sp)
    sp.set_defaults(func=cmd_fox)

    sp = sub.add_parser("member", help="membership of an element in the module V")
    sp.add_argument("element", help="twisted-ring element, e.g. 'y^2*(1) + (-1)'")
    sp.add_argument("--r", default=builtin.R_STRING, help="Laurent polynomial r")
    sp.add_argument("--s", default=builtin.S_STRING, help="Laurent polynomial s")
    _add_format(sp)
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("divides", help="exact divisibility in Z[x, x^-1]")
    sp.add_argument("a")
    sp.add_argument("b")
    _add_format(sp)
    sp.set_defaults(func=cmd_divides)

    sp = sub.add_parser("certificate", help="check a product-of-conjugates certificate")
    sp.add_argument("--certificate", required=True, help="certificate JSON file")
    sp.add_argument("--presentation", help="P, Q, or a JSON file path (overrides the certificate's source)")
    _add_format(sp)
    sp.set_defaults(func=cmd_certificate)

    sp = sub.add_parser("stafford", help="non-freeness conditions for an instance (r, s)")
    sp.add_argument("--r", default=builtin.R_STRING)
    sp.add_argument("--s", default=builtin.S_STRING)
    _add_format(sp)
    sp.set_defaults(func=cmd_stafford)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
