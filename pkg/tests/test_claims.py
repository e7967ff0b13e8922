import json

import pytest

from wittenzeta.claims import NORMALIZATION, evaluate, find_claim, load_claims, load_manifest, preset_poly

FAST_KINDS = {"abscissa", "residue", "value", "values", "vanish", "dzero", "ialpha", "g2_constant"}


def test_manifest_shape():
    m = load_manifest()
    assert m["version"] == 1
    ids = [c["id"] for c in m["claims"]]
    assert len(ids) == len(set(ids))
    for c in m["claims"]:
        assert c["provenance"] in ("PAPER", "DERIVED")


def test_table1_cells_present():
    ids = {c["id"] for c in load_claims(table1_only=True)}
    for case in "ABG":
        for kind in ("abscissa", "residue", "omega0", "vanish", "dzero", "poles"):
            assert f"{kind}:{case}" in ids


def test_presets():
    assert preset_poly("G").coeffs == preset_poly("G2").coeffs
    assert NORMALIZATION == {"A2": 2, "B2": 6, "G2": 120}
    with pytest.raises(ValueError):
        preset_poly("E8")


@pytest.mark.parametrize("cid", [c["id"] for c in load_claims() if c["kind"] in FAST_KINDS])
def test_fast_claims_pass(cid):
    r = evaluate(find_claim(cid))
    assert r.passed, r.to_json()
    json.dumps(r.to_json())


def test_g3_is_derived_with_sign_note():
    c = find_claim("g2:G3")
    assert c["provenance"] == "DERIVED" and float(c["expected"]) < 0


def test_mutated_claim_fails():
    c = dict(find_claim("omega0:G"))
    c["expected"] = "5/13"
    assert not evaluate(c).passed


def test_unknown_kind():
    with pytest.raises(ValueError):
        evaluate({"id": "x", "kind": "nope", "provenance": "DERIVED"})
