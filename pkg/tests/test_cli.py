"""Command-line verbs, exit codes, JSON schema, output stability."""
from __future__ import annotations

import json

from weyldecomp.cli import run
from weyldecomp.decompose import (
    canonical_decomposition,
    decomposition_from_roots,
    parabolic_tower,
)
from weyldecomp.rootsys import system
from weyldecomp.weyl import classify_longest


def invoke(*argv):
    return run(list(argv))


def test_info_text():
    code, out, err = invoke("info", "--type", "F4")
    assert code == 0 and err == ""
    assert out == (
        "type: F4\n"
        "rank: 4\n"
        "positive roots: 24\n"
        "longest length: 24\n"
        "classification: minus_identity\n"
        "highest root: 2a1+3a2+4a3+2a4\n"
    )


def test_info_json():
    code, out, _ = invoke("info", "--type", "G2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "type": "G2",
        "rank": 2,
        "positive_root_count": 6,
        "longest_length": 6,
        "classification": "minus_identity",
        "highest_root": [3, 2],
    }


def test_info_json_reports_automorphism():
    code, out, _ = invoke("info", "--type", "A3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["classification"] == "minus_automorphism"
    assert payload["automorphism"] == [3, 2, 1]


def test_w0_json_minus_identity():
    code, out, _ = invoke("w0", "--type", "G2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["classification"] == "minus_identity"
    assert payload["matrix"] == [[-1, 0], [0, -1]]
    assert payload["length"] == 6


def test_w0_json_minus_automorphism():
    _, out, _ = invoke("w0", "--type", "A3", "--json")
    payload = json.loads(out)
    assert payload["classification"] == "minus_automorphism"
    assert payload["automorphism"] == [3, 2, 1]


def test_decompose_text():
    code, out, _ = invoke("decompose", "--type", "F4")
    assert code == 0
    assert out == (
        "factors: 4\n"
        "1: a2 (simple)\n"
        "2: a2+2a3 (highest of {2,3})\n"
        "3: a2+2a3+2a4 (highest of {2,3,4})\n"
        "4: 2a1+3a2+4a3+2a4 (highest of {1,2,3,4})\n"
    )


def test_decompose_json_schema():
    _, out, _ = invoke("decompose", "--type", "F4", "--json")
    payload = json.loads(out)
    assert payload["factors"] == [
        {"coeffs": [0, 1, 0, 0], "kind": "simple"},
        {"coeffs": [0, 1, 2, 0], "kind": "highest", "support": [2, 3]},
        {"coeffs": [0, 1, 2, 2], "kind": "highest", "support": [2, 3, 4]},
        {"coeffs": [2, 3, 4, 2], "kind": "highest", "support": [1, 2, 3, 4]},
    ]


def test_verify_passes():
    code, out, _ = invoke("verify", "--type", "E7")
    assert code == 0
    assert "result: PASS" in out
    code, out, _ = invoke("verify", "--type", "E7", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["checks"] == {
        "orthogonal": True,
        "highest_root_ok": True,
        "chain_ok": True,
        "product_is_w0": True,
        "count_ok": True,
    }


def test_unique_exit_codes_and_bound():
    code, out, _ = invoke("unique", "--type", "B3")
    assert code == 0
    assert "decompositions found: 1" in out
    assert "result: UNIQUE" in out
    # E7 exceeds the default guard -> library error -> exit 1
    code, _, err = invoke("unique", "--type", "E7")
    assert code == 1
    assert "error:" in err
    # raising the bound lets the search run
    code, out, _ = invoke("unique", "--type", "E7", "--bound", "63", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 1
    assert payload["unique"] is True


def test_tower():
    code, out, _ = invoke("tower", "--type", "F4")
    assert code == 0
    assert out == "tower: {2} < {2,3} < {2,3,4} < {1,2,3,4}\n"
    _, out, _ = invoke("tower", "--type", "E8", "--json")
    assert json.loads(out)["tower"] == [
        [2, 3, 4, 5],
        [2, 3, 4, 5, 6, 7],
        [1, 2, 3, 4, 5, 6, 7],
        [1, 2, 3, 4, 5, 6, 7, 8],
    ]


def test_recursion_exit_codes():
    code, out, _ = invoke("recursion", "--type", "C3")
    assert code == 0
    assert out == "recursion relation holds: true\n"
    code, _, err = invoke("recursion", "--type", "G2")
    assert code == 1
    assert "error:" in err


def test_count_words_decimal_string():
    code, out, _ = invoke("count-words", "--type", "A5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == "292864"
    assert isinstance(payload["count"], str)
    code, out, _ = invoke("count-words", "--type", "A5")
    assert "292864" in out


def test_check_identities():
    for t in ["A3", "B3", "C3", "D4", "F4", "G2"]:
        code, out, _ = invoke("check-identities", "--type", t)
        assert code == 0, (t, out)
        assert "result: PASS" in out
    _, out, _ = invoke("check-identities", "--type", "A3", "--json")
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["checks"]["conjugation"] is True
    assert payload["checks"]["intervals"] is True
    _, out, _ = invoke("check-identities", "--type", "D4", "--json")
    assert json.loads(out)["checks"]["cross_pairing"] is True


def test_export_schema():
    code, out, _ = invoke("export", "--type", "F4")
    assert code == 0
    payload = json.loads(out)
    assert list(payload.keys()) == [
        "type",
        "rank",
        "positive_root_count",
        "longest_length",
        "w0_classification",
        "factors",
        "tower",
    ]
    assert payload["type"] == "F4"
    assert payload["rank"] == 4
    assert payload["positive_root_count"] == 24
    assert payload["w0_classification"] == "minus_identity"
    assert payload["factors"][0] == {"coeffs": [0, 1, 0, 0], "kind": "simple"}
    assert payload["factors"][1] == {
        "coeffs": [0, 1, 2, 0],
        "kind": "highest",
        "support": [2, 3],
    }


def test_export_format_flag():
    plain = invoke("export", "--type", "B3")
    explicit = invoke("export", "--type", "B3", "--format", "json")
    assert plain == explicit
    code, out, err = invoke("export", "--type", "B3", "--format", "xml")
    assert code == 2 and out == ""
    assert "xml" in err


def test_export_round_trips_to_internal_objects():
    _, out, _ = invoke("export", "--type", "D5")
    payload = json.loads(out)
    rs = system(payload["type"])
    dec = canonical_decomposition(rs)
    assert payload["rank"] == rs.rank
    assert payload["positive_root_count"] == len(rs.positive_roots)
    assert payload["w0_classification"] == classify_longest(rs).kind
    rebuilt = decomposition_from_roots(
        rs, [tuple(f["coeffs"]) for f in payload["factors"]]
    )
    assert rebuilt.factors == dec.factors
    assert [f["kind"] for f in payload["factors"]] == [f.kind for f in dec.factors]
    assert [tuple(J) for J in payload["tower"]] == list(parabolic_tower(rs).supports)


def test_export_includes_automorphism_when_nontrivial():
    _, out, _ = invoke("export", "--type", "E6")
    payload = json.loads(out)
    assert payload["w0_classification"] == "minus_automorphism"
    assert payload["automorphism"] == [6, 2, 5, 4, 3, 1]
    _, out, _ = invoke("export", "--type", "E8")
    assert "automorphism" not in json.loads(out)


def test_output_is_stable():
    first = invoke("export", "--type", "E7")
    second = invoke("export", "--type", "E7")
    assert first == second
    a = invoke("decompose", "--type", "D5", "--json")
    b = invoke("decompose", "--type", "D5", "--json")
    assert a == b


def test_usage_errors_exit_2():
    code, out, err = invoke("verify", "--type", "Z9")
    assert code == 2 and out == ""
    assert "Z9" in err
    code, _, err = invoke("verify", "--type", "A3", "--nope")
    assert code == 2
    assert "--nope" in err
    code, _, err = invoke("verify")
    assert code == 2
    assert "--type" in err
    code, _, err = invoke("frobnicate", "--type", "A3")
    assert code == 2
    assert "frobnicate" in err


def test_inadmissible_type_is_usage_error():
    code, _, err = invoke("info", "--type", "E5")
    assert code == 2
    assert "E5" in err


def test_one_based_indices_in_json():
    _, out, _ = invoke("decompose", "--type", "C3", "--json")
    payload = json.loads(out)
    supports = [f["support"] for f in payload["factors"] if f["kind"] == "highest"]
    assert supports == [[2, 3], [1, 2, 3]]
