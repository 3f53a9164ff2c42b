import json
from dataclasses import replace
from importlib import resources
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given, strategies as st

from kodaira_monodromy.albert import AlbertClass, AlbertType, SignatureIV, enumerate_albert_classes, enumerate_signatures
from kodaira_monodromy.domains import domain_dimension
from kodaira_monodromy.hodge import HodgeDecomposition, SimpleSummandClass, enumerate_decompositions
from kodaira_monodromy.obstructions import (
    KEY_SIMPLE_IMAG_QUAD,
    KEY_SIMPLE_Q,
    KEY_SIMPLE_REAL_CUBIC,
    KEY_SPLIT_Q,
    KEY_SPLIT_REAL_QUAD,
    RULES,
    FeasibilityStatus,
    FeasibilityVerdict,
    KnowledgeBase,
    LocusRecord,
    apply_exclusions,
    assess,
    builtin_locus_records,
    decomposable_codim,
    decomposable_strata,
    gci_feasible,
    generic_signature,
    outcome_key,
    rule,
)

I, II, III, IV = AlbertType.I, AlbertType.II, AlbertType.III, AlbertType.IV
SOURCE_TEXT = Path(__file__).parents[1] / "paper.md"

E = SimpleSummandClass(2, AlbertClass(I, 1, 1, 2, 1))
E_CM = SimpleSummandClass(2, AlbertClass(IV, 1, 1, 1, 1), SignatureIV(((1, 0),)))
CUBIC = SimpleSummandClass(6, AlbertClass(I, 3, 1, 2, 3))
QUAT4 = SimpleSummandClass(4, AlbertClass(II, 1, 2, 1, 2))
DEF4 = SimpleSummandClass(4, AlbertClass(III, 1, 2, 1, 2))
IQ4 = SimpleSummandClass(4, AlbertClass(IV, 1, 1, 2, 2), SignatureIV(((1, 1),)))
Q4 = SimpleSummandClass(4, AlbertClass(I, 1, 1, 4, 2))


def dec(*parts):
    return HodgeDecomposition(tuple(parts))


def test_rule_set_and_citations():
    assert [r.id for r in RULES] == ["R1", "R2", "R3", "R4", "R5", "R6"]
    assert len(rule("R5").citations) == 2
    for r in RULES:
        assert r.description and r.citations and all(r.citations)


def test_citations_are_verbatim_anchors():
    if not SOURCE_TEXT.exists():
        pytest.skip("source text not present")
    text = SOURCE_TEXT.read_text(encoding="utf-8")
    for r in RULES:
        for c in r.citations:
            assert c in text, (r.id, c)
    for rec in builtin_locus_records():
        assert rec.citation in text, rec.name


def test_exclusion_examples():
    assert apply_exclusions(dec((E, 3))).rule_id == "R3"
    e_prime = SimpleSummandClass(2, AlbertClass(IV, 1, 1, 1, 1), SignatureIV(((0, 1),)))
    assert apply_exclusions(dec((E, 2), (e_prime, 1))).rule_id == "R3"
    assert apply_exclusions(dec((QUAT4, 1), (E, 1))).rule_id == "R4"
    assert apply_exclusions(dec((DEF4, 1), (E, 1))).rule_id == "R5"
    assert apply_exclusions(dec((IQ4, 1), (E, 1))).rule_id == "R5"
    v = apply_exclusions(dec((CUBIC, 1)))
    assert not v.excluded and v.status is FeasibilityStatus.POSSIBLE_NOT_GCI
    sextic = SimpleSummandClass(6, AlbertClass(IV, 3, 1, 1, 3), SignatureIV(((1, 0), (0, 1), (1, 0))))
    assert apply_exclusions(dec((sextic, 1))).rule_id == "R6"
    assert apply_exclusions(dec((E_CM, 3))).rule_id == "R6"


def test_verdict_invariant():
    with pytest.raises(ValueError):
        FeasibilityVerdict(FeasibilityStatus.EXCLUDED)
    with pytest.raises(ValueError):
        FeasibilityVerdict(FeasibilityStatus.REALIZED_GCI, "R1")


def test_genus3_rule_tally():
    tally = {}
    for d in enumerate_decompositions(3):
        v = apply_exclusions(d)
        tally[v.rule_id] = tally.get(v.rule_id, 0) + 1
    assert tally == {None: 10, "R3": 16, "R4": 3, "R5": 12, "R6": 28}


def test_codim_examples():
    assert decomposable_codim(AlbertClass(I, 3, 1, 2, 3), 3) == 2
    assert decomposable_codim(AlbertClass(IV, 1, 1, 3, 3), 3) == 1
    assert decomposable_codim(AlbertClass(I, 1, 1, 6, 3), 3) == 2
    # the only stratum of the real cubic class is E^3 with one-dimensional moduli
    strata = decomposable_strata(AlbertClass(I, 3, 1, 2, 3))
    assert [(s.shape, s.dimension) for s in strata] == [("2^3", 1)]
    ball = {s.shape: s.dimension for s in decomposable_strata(AlbertClass(IV, 1, 1, 3, 3))}
    assert ball["4+2"] == 1 and ball["2^2+2'"] == 1
    assert max(ball.values()) == 1


def test_generic_signature():
    assert generic_signature(AlbertClass(IV, 1, 1, 3, 3)) == SignatureIV(((2, 1),))
    assert generic_signature(AlbertClass(IV, 1, 1, 2, 2)) == SignatureIV(((1, 1),))


def test_codim_bounds_exhaustive():
    for n in range(1, 6):
        for c in enumerate_albert_classes(n):
            sigs = enumerate_signatures(c) if c.albert_type is IV else [None]
            for sig in sigs:
                codim = decomposable_codim(c, n, sig)
                assert 0 <= codim <= domain_dimension(c, sig)


def test_siegel_cross_check():
    for g in range(2, 7):
        # largest product is A_1 x A_{g-1}: codim g(g+1)/2 - 1 - (g-1)g/2 = g - 1
        assert decomposable_codim(AlbertClass(I, 1, 1, 2 * g, g)) == g - 1


def test_shipped_records():
    recs = {r.realizes or r.annotates: r for r in builtin_locus_records()}
    assert len(builtin_locus_records()) >= 5
    siegel = recs[KEY_SIMPLE_Q]
    assert (siegel.dim, siegel.boundary_codim) == (6, 3)
    hilbert = recs[KEY_SIMPLE_REAL_CUBIC]
    assert (hilbert.dim, hilbert.decomposable_codim, hilbert.boundary_codim) == (3, 2, 3)
    assert gci_feasible(hilbert)
    picard = KnowledgeBase.builtin().realizing(KEY_SIMPLE_IMAG_QUAD)[0]
    assert (picard.dim, picard.decomposable_codim, picard.boundary_codim) == (2, 1, 2)
    assert not gci_feasible(picard)
    prod = recs[KEY_SPLIT_Q]
    assert (prod.decomposable_codim, prod.boundary_codim) == (2, 2) and gci_feasible(prod)
    quad = recs[KEY_SPLIT_REAL_QUAD]
    assert quad.decomposable_codim == 1 and not gci_feasible(quad)
    assert KnowledgeBase.builtin().annotating(KEY_SIMPLE_IMAG_QUAD)


def test_codims_agree_with_records():
    kb = KnowledgeBase.builtin()
    assert decomposable_codim(AlbertClass(I, 3, 1, 2, 3)) == kb.realizing(KEY_SIMPLE_REAL_CUBIC)[0].decomposable_codim
    assert decomposable_codim(AlbertClass(IV, 1, 1, 3, 3)) == kb.realizing(KEY_SIMPLE_IMAG_QUAD)[0].decomposable_codim
    assert decomposable_codim(AlbertClass(I, 1, 1, 6, 3)) == kb.realizing(KEY_SIMPLE_Q)[0].decomposable_codim


def rec(dim, dc, bc):
    return LocusRecord("x", 3, dim, dc, bc, "anchor")


@given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10), st.integers(0, 3), st.integers(0, 3))
def test_gci_monotone(dim, dc, bc, up_dc, up_bc):
    dim = max(dim, dc + up_dc, bc + up_bc - 1)
    if bc > dim + 1:
        return
    before, after = rec(dim, dc, bc), rec(dim, dc + up_dc, bc + up_bc)
    assert not gci_feasible(before) or gci_feasible(after)


def test_record_invariants():
    with pytest.raises(ValueError):
        rec(2, 3, 1)
    with pytest.raises(ValueError):
        rec(2, 1, 4)
    with pytest.raises(ValueError):
        LocusRecord("x", 3, 2, 1, 1, "")


def test_outcome_keys():
    assert outcome_key(dec((CUBIC, 1))) == KEY_SIMPLE_REAL_CUBIC
    assert outcome_key(dec((Q4, 1), (E_CM, 1))) == KEY_SPLIT_Q
    assert outcome_key(dec((E, 3))) is None


def test_assess_upgrades_and_notes():
    assert assess(dec((CUBIC, 1))).status is FeasibilityStatus.REALIZED_GCI
    v = assess(dec((SimpleSummandClass(6, AlbertClass(IV, 1, 1, 3, 3), SignatureIV(((2, 1),))), 1)))
    assert v.status is FeasibilityStatus.POSSIBLE_NOT_GCI and v.locus.startswith("Picard")
    v = assess(dec((CUBIC, 1)), KnowledgeBase([]))
    assert v.status is FeasibilityStatus.POSSIBLE_NOT_GCI
    assert "no locus record: GCI realizability unknown" in v.notes


def schema(name):
    return json.loads(resources.files("kodaira_monodromy").joinpath("schemas", name).read_text("utf-8"))


def test_kb_json_round_trip(tmp_path):
    kb = KnowledgeBase.builtin()
    jsonschema.validate(json.loads(kb.to_json()), schema("locus_kb.schema.json"))
    path = tmp_path / "kb.json"
    kb.dump(path)
    back = KnowledgeBase.load(path)
    assert back.records == kb.records
    assert all(r.verified for r in back)
    assert back.fingerprint() == kb.fingerprint()
    assert back.to_json() == kb.to_json()


def test_user_records_are_unverified():
    raw = [{"name": "my locus", "ambient_genus": 3, "dim": 2, "decomposable_codim": 2,
            "boundary_codim": 2, "citation": "private communication", "realizes": KEY_SIMPLE_IMAG_QUAD}]
    kb = KnowledgeBase.from_json(json.dumps(raw))
    assert not kb.records[0].verified
    full = KnowledgeBase.builtin().extended(kb.records)
    assert full.fingerprint() != KnowledgeBase.builtin().fingerprint()
    d = dec((SimpleSummandClass(6, AlbertClass(IV, 1, 1, 3, 3), SignatureIV(((2, 1),))), 1))
    v = assess(d, full)
    assert v.status is FeasibilityStatus.REALIZED_GCI
    assert any("unverified" in n for n in v.notes)


@pytest.mark.parametrize("payload", [
    '{"format": "other", "records": []}',
    '[{"name": "x"}]',
    '[{"name": "x", "ambient_genus": 3, "dim": 2, "decomposable_codim": 1, "boundary_codim": 1, '
    '"citation": "c", "colour": "red"}]',
    '[{"name": "x", "ambient_genus": 3, "dim": "2", "decomposable_codim": 1, "boundary_codim": 1, "citation": "c"}]',
    '{"records": 5}',
])
def test_bad_kb_files(payload):
    with pytest.raises(ValueError):
        KnowledgeBase.from_json(payload)


def test_modified_shipped_record_loses_verification():
    r = replace(builtin_locus_records()[0], boundary_codim=1)
    kb = KnowledgeBase.from_json(json.dumps([r.to_dict()]))
    assert not kb.records[0].verified
