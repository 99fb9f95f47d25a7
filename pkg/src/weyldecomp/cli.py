"""Command-line interface.

Verbs operate on one root system selected with ``--type`` (e.g. ``--type F4``)
and print either plain text or, with ``--json``, a stable JSON document.
Exit codes: 0 for success / checks passed, 1 for failed checks or library
errors, 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .decompose import (
    canonical_decomposition,
    dn_orthogonality_pattern,
    enumerate_max_orthogonal,
    epsilon_factorization,
    parabolic_tower,
    recursion_relation_check,
    verify_decomposition,
)
from .errors import Orthogonal, WeylError
from .rootsys import RootSystem, build_root_system, format_root, parse_type, pairing2
from .weyl import (
    classify_longest,
    compose,
    count_reduced_words,
    length_of,
    longest_element,
    reflection_of,
)
from .words import (
    check_lambda_v,
    check_permutation_lemma,
    classify_conjugation,
    conjugated_root,
    predicted_conjugate,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(f"{self.prog}: error: {message}")


def _type_arg(text: str) -> RootSystem:
    try:
        return build_root_system(parse_type(text))
    except WeylError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="weyldecomp", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")
    verbs = {
        "info": "basic facts about the root system",
        "w0": "the longest element and its classification",
        "decompose": "the canonical orthogonal decomposition",
        "verify": "check the canonical decomposition (exit 0 iff all pass)",
        "unique": "enumerate all qualifying decompositions (exit 0 iff exactly one)",
        "tower": "the ascending parabolic chain behind the decomposition",
        "recursion": "check the cross-rank recursion (exit 0 iff it holds)",
        "count-words": "count reduced words for the longest element",
        "check-identities": "run the per-family identity suites (exit 0 iff all pass)",
        "export": "emit the full JSON document for the system",
    }
    for name, help_text in verbs.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--type",
            dest="rs",
            required=True,
            type=_type_arg,
            metavar="TYPE",
            help="root system type, e.g. A5 or F4",
        )
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        if name == "export":
            p.add_argument(
                "--format",
                choices=["json"],
                default="json",
                help="output format (json is the only format)",
            )
        if name == "unique":
            p.add_argument(
                "--bound",
                type=int,
                default=40,
                metavar="N",
                help="positive-root-count guard for the exhaustive search (default 40)",
            )
    return parser


def _compact(value) -> str:
    return json.dumps(value, separators=(",", ":"))


def _render_json(value, indent: int) -> str:
    """Deterministic pretty-printing: any value whose compact form is short
    stays on one line (so coefficient vectors read as ``[0,1,2,0]``), longer
    containers expand one level at two-space indentation."""
    flat = _compact(value)
    if not isinstance(value, (dict, list)) or (indent > 0 and len(flat) <= 80):
        return flat
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(value, dict):
        rows = [
            f"{inner}{json.dumps(k)}: {_render_json(v, indent + 2)}"
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(rows) + "\n" + pad + "}"
    rows = [f"{inner}{_render_json(v, indent + 2)}" for v in value]
    return "[\n" + ",\n".join(rows) + "\n" + pad + "]"


def _dumps(payload: dict) -> str:
    return _render_json(payload, 0) + "\n"


def _fmt_set(J) -> str:
    return "{" + ",".join(str(i) for i in J) + "}"


def _factor_payload(factor) -> dict:
    entry: dict = {"coeffs": list(factor.root), "kind": factor.kind}
    if factor.kind == "highest":
        entry["support"] = list(factor.span)
    return entry


def _factor_text(factor) -> str:
    if factor.kind == "highest":
        return f"{format_root(factor.root)} (highest of {_fmt_set(factor.span)})"
    return f"{format_root(factor.root)} (simple)"


def _cmd_info(ns) -> tuple[int, str]:
    rs = ns.rs
    n_pos = len(rs.positive_roots)
    cls = classify_longest(rs)
    if ns.json:
        payload = {
            "type": str(rs.type),
            "rank": rs.rank,
            "positive_root_count": n_pos,
            "longest_length": n_pos,
            "classification": cls.kind,
        }
        if cls.kind == "minus_automorphism":
            payload["automorphism"] = list(cls.automorphism)
        payload["highest_root"] = list(rs.highest_root)
        return 0, _dumps(payload)
    lines = [
        f"type: {rs.type}",
        f"rank: {rs.rank}",
        f"positive roots: {n_pos}",
        f"longest length: {n_pos}",
        f"classification: {cls.kind}",
        f"highest root: {format_root(rs.highest_root)}",
    ]
    return 0, "\n".join(lines) + "\n"


def _cmd_w0(ns) -> tuple[int, str]:
    rs = ns.rs
    w0 = longest_element(rs)
    cls = classify_longest(rs)
    if ns.json:
        payload = {
            "type": str(rs.type),
            "classification": cls.kind,
            "automorphism": list(cls.automorphism),
            "length": length_of(rs, w0),
            "matrix": [list(row) for row in w0],
        }
        return 0, _dumps(payload)
    lines = [f"classification: {cls.kind}"]
    if cls.kind == "minus_automorphism":
        lines.append(
            "automorphism: " + " ".join(f"{i}->{s}" for i, s in enumerate(cls.automorphism, 1))
        )
    lines.append(f"length: {length_of(rs, w0)}")
    lines.append("matrix:")
    width = max(len(str(e)) for row in w0 for e in row)
    for row in w0:
        lines.append("  " + " ".join(f"{e:>{width}}" for e in row))
    return 0, "\n".join(lines) + "\n"


def _cmd_decompose(ns) -> tuple[int, str]:
    rs = ns.rs
    dec = canonical_decomposition(rs)
    if ns.json:
        return 0, _dumps(
            {
                "type": str(rs.type),
                "factors": [_factor_payload(f) for f in dec.factors],
            }
        )
    lines = [f"factors: {len(dec.factors)}"]
    for i, f in enumerate(dec.factors, 1):
        lines.append(f"{i}: {_factor_text(f)}")
    return 0, "\n".join(lines) + "\n"


def _cmd_verify(ns) -> tuple[int, str]:
    rs = ns.rs
    report = verify_decomposition(rs, canonical_decomposition(rs))
    checks = {
        "orthogonal": report.orthogonal,
        "highest_root_ok": report.highest_root_ok,
        "chain_ok": report.chain_ok,
        "product_is_w0": report.product_is_w0,
        "count_ok": report.count_ok,
    }
    ok = report.all_ok()
    code = 0 if ok else 1
    if ns.json:
        return code, _dumps({"type": str(rs.type), "checks": checks, "ok": ok})
    lines = [f"{name}: {str(value).lower()}" for name, value in checks.items()]
    lines.append(f"result: {'PASS' if ok else 'FAIL'}")
    return code, "\n".join(lines) + "\n"


def _cmd_unique(ns) -> tuple[int, str]:
    rs = ns.rs
    decs = enumerate_max_orthogonal(rs, size_bound=ns.bound)
    code = 0 if len(decs) == 1 else 1
    if ns.json:
        return code, _dumps(
            {
                "type": str(rs.type),
                "count": len(decs),
                "decompositions": [
                    [_factor_payload(f) for f in d.factors] for d in decs
                ],
                "unique": len(decs) == 1,
            }
        )
    lines = [f"decompositions found: {len(decs)}"]
    for i, d in enumerate(decs, 1):
        lines.append(f"{i}: " + " | ".join(format_root(r) for r in d.roots))
    lines.append(f"result: {'UNIQUE' if len(decs) == 1 else 'NOT UNIQUE'}")
    return code, "\n".join(lines) + "\n"


def _cmd_tower(ns) -> tuple[int, str]:
    rs = ns.rs
    tower = parabolic_tower(rs)
    if ns.json:
        return 0, _dumps(
            {
                "type": str(rs.type),
                "tower": [list(J) for J in tower.supports],
            }
        )
    chain = " < ".join(_fmt_set(J) for J in tower.supports)
    return 0, f"tower: {chain}\n"


def _cmd_recursion(ns) -> tuple[int, str]:
    rs = ns.rs
    holds = recursion_relation_check(rs)
    code = 0 if holds else 1
    if ns.json:
        return code, _dumps({"type": str(rs.type), "recursion_holds": holds})
    return code, f"recursion relation holds: {str(holds).lower()}\n"


def _cmd_count_words(ns) -> tuple[int, str]:
    rs = ns.rs
    count = count_reduced_words(rs, longest_element(rs))
    if ns.json:
        return 0, _dumps({"type": str(rs.type), "count": str(count)})
    return 0, f"reduced words for the longest element: {count}\n"


def _conjugation_suite(rs: RootSystem) -> tuple[bool, int, int]:
    """Sweep ordered pairs of distinct positive roots; return (ok, pairs, named)."""
    refl = {r: reflection_of(rs, r) for r in rs.positive_roots}
    pairs = 0
    named = 0
    for a in rs.positive_roots:
        for b in rs.positive_roots:
            if a == b:
                continue
            pairs += 1
            conj = conjugated_root(rs, a, b)
            literal = compose(compose(refl[a], refl[b]), refl[a])
            if refl[conj] != literal:
                return False, pairs, named
            try:
                case = classify_conjugation(rs, a, b)
            except Orthogonal:
                if conj != b:
                    return False, pairs, named
                continue
            if case is not None:
                named += 1
                if predicted_conjugate(rs, a, b, case) != conj:
                    return False, pairs, named
    return True, pairs, named


def _interval_suite(rs: RootSystem) -> tuple[bool, int]:
    checked = 0
    for n in range(2, rs.rank + 1):
        for k in range(1, n):
            checked += 1
            if not (check_lambda_v(rs, k, n) and check_permutation_lemma(rs, k, n)):
                return False, checked
    return True, checked


def _frame_suite(rs: RootSystem) -> bool:
    roots = epsilon_factorization(rs)
    if any(
        pairing2(rs, roots[i], roots[j]) != 0
        for i in range(len(roots))
        for j in range(i + 1, len(roots))
    ):
        return False
    product = None
    for r in roots:
        s = reflection_of(rs, r)
        product = s if product is None else compose(product, s)
    return product == longest_element(rs)


def _cmd_check_identities(ns) -> tuple[int, str]:
    rs = ns.rs
    checks: dict[str, bool] = {}
    lines: list[str] = []
    ok, pairs, named = _conjugation_suite(rs)
    checks["conjugation"] = ok
    lines.append(
        f"conjugation identities: {'PASS' if ok else 'FAIL'} "
        f"({pairs} pairs, {named} named cases)"
    )
    if rs.family == "A" and rs.rank >= 2:
        ok, checked = _interval_suite(rs)
        checks["intervals"] = ok
        lines.append(f"interval identities: {'PASS' if ok else 'FAIL'} ({checked} pairs)")
    if rs.family in ("B", "C"):
        ok = _frame_suite(rs)
        checks["coordinate_frame"] = ok
        lines.append(f"coordinate-frame factorization: {'PASS' if ok else 'FAIL'}")
    if rs.family == "D" and rs.rank >= 4:
        ok = dn_orthogonality_pattern(rs)
        checks["cross_pairing"] = ok
        lines.append(f"cross-pairing parity: {'PASS' if ok else 'FAIL'}")
    all_ok = all(checks.values())
    code = 0 if all_ok else 1
    if ns.json:
        return code, _dumps({"type": str(rs.type), "checks": checks, "ok": all_ok})
    lines.append(f"result: {'PASS' if all_ok else 'FAIL'}")
    return code, "\n".join(lines) + "\n"


def _cmd_export(ns) -> tuple[int, str]:
    rs = ns.rs
    dec = canonical_decomposition(rs)
    cls = classify_longest(rs)
    tower = parabolic_tower(rs)
    payload: dict = {
        "type": str(rs.type),
        "rank": rs.rank,
        "positive_root_count": len(rs.positive_roots),
        "longest_length": length_of(rs, longest_element(rs)),
        "w0_classification": cls.kind,
    }
    if cls.kind == "minus_automorphism":
        payload["automorphism"] = list(cls.automorphism)
    payload["factors"] = [_factor_payload(f) for f in dec.factors]
    payload["tower"] = [list(J) for J in tower.supports]
    return 0, _dumps(payload)


_HANDLERS = {
    "info": _cmd_info,
    "w0": _cmd_w0,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "unique": _cmd_unique,
    "tower": _cmd_tower,
    "recursion": _cmd_recursion,
    "count-words": _cmd_count_words,
    "check-identities": _cmd_check_identities,
    "export": _cmd_export,
}


def run(argv) -> tuple[int, str, str]:
    """Execute a CLI invocation; returns (exit code, stdout text, stderr text)."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except _UsageError as exc:
        return 2, "", f"{exc}\n"
    except SystemExit as exc:  # --help prints directly and exits
        return int(exc.code or 0), "", ""
    try:
        code, out = _HANDLERS[ns.verb](ns)
    except WeylError as exc:
        return 1, "", f"error: {exc}\n"
    return code, out, ""


def main(argv=None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


def entry() -> None:
    raise SystemExit(main())
