"""End-to-end classification of connected monodromy groups for a fibre genus."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .domains import domain_spec
from .errors import UnresolvedError, UsageError
from .hodge import HodgeDecomposition, enumerate_decompositions, hodge_group, monodromy_group
from .obstructions import (
    FeasibilityStatus,
    FeasibilityVerdict,
    KnowledgeBase,
    assess,
    outcome_key,
    rule,
)

__all__ = ["OutcomeRow", "ExcludedEntry", "ClassificationReport", "classify", "GENUS_CITATION"]

ENGINE = "kodaira-monodromy"
GENUS_CITATION = r"fibers $F_b$ of genus at least $3$"
UNRESOLVED = "unresolved by paper"

# anchors for the group attached to each moving summand class
_GROUP_CITATIONS = {
    "6[I;l=1;q=1]": r"The group $Sp(6)$ if $L=\mathbb{Q}$",
    "6[I;l=3;q=1]": r"The group $R_{L/\mathbb{Q}}SL(_LV)$ if $L$ is a totally real field",
    "6[IV;l=1;q=1]": r"The group $SU(M,^{-})$, if $L$ is an imaginary quadratic field",
    "4[I;l=1;q=1]": r"The group $Sp(4)$ if $L_2=\mathbb{Q}$",
    "4[I;l=2;q=1]": r"if $L_2$ is a totally real quadratic field",
}
_TRIVIAL_ON_CONSTANT = r"the connected monodromy group acts trivially on $V_1$"
_MONODROMY_CITATION = r"the connected monodromy group $T$ of $\mathbb{V}$ satisfies"

_STATUS_RANK = {FeasibilityStatus.REALIZED_GCI: 0, FeasibilityStatus.POSSIBLE_NOT_GCI: 1}


@dataclass
class OutcomeRow:
    key: str
    shape: str
    endomorphism_class: str
    albert: dict
    signatures: list[str]
    domain: str
    domain_dimension: int
    constant_summands: list[str]
    hodge_group: str
    monodromy: str
    complexified_label: str
    real_dimension: int | None
    representation: str
    gci: bool | None
    status: str
    locus: str | None
    citations: list[str]
    notes: list[str] = field(default_factory=list)
    sort_key: tuple = field(default=(), repr=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "key": self.key,
            "shape": self.shape,
            "endomorphism_class": self.endomorphism_class,
            "albert": self.albert,
            "signatures": self.signatures,
            "domain": self.domain,
            "domain_dimension": self.domain_dimension,
            "constant_summands": self.constant_summands,
            "hodge_group": self.hodge_group,
            "monodromy": self.monodromy,
            "complexified_label": self.complexified_label,
            "real_dimension": self.real_dimension,
            "representation": self.representation,
            "gci": self.gci,
            "status": self.status,
            "locus": self.locus,
            "citations": self.citations,
            "notes": self.notes,
        }


@dataclass(frozen=True)
class ExcludedEntry:
    decomposition: HodgeDecomposition
    verdict: FeasibilityVerdict

    def to_dict(self) -> dict:
        return {
            "shape": self.decomposition.shape_label,
            "decomposition": str(self.decomposition),
            "rule_id": self.verdict.rule_id,
            "citations": list(rule(self.verdict.rule_id).citations),
        }


@dataclass
class ClassificationReport:
    genus: int
    rows: list[OutcomeRow]
    excluded: list[ExcludedEntry]
    engine_version: str
    kb_fingerprint: str
    footnotes: list[str]

    @property
    def complexified_labels(self) -> list[str]:
        return [r.complexified_label for r in self.rows]

    @property
    def gci_flags(self) -> list[bool | None]:
        return [r.gci for r in self.rows]

    def to_dict(self) -> dict[str, Any]:
        return {
            "engine": {"name": ENGINE, "version": self.engine_version},
            "genus": self.genus,
            "kb_fingerprint": self.kb_fingerprint,
            "rows": [r.to_dict() for r in self.rows],
            "excluded": [e.to_dict() for e in self.excluded],
            "footnotes": self.footnotes,
        }


def _moving(d: HodgeDecomposition):
    return [s for _, s in d.non_constant()]


def _build_row(key: str, members: list[tuple[HodgeDecomposition, FeasibilityVerdict]],
               kb: KnowledgeBase, footnotes: list[str]) -> OutcomeRow:
    d0, v0 = members[0]
    moving = _moving(d0)
    lead = moving[0]
    signatures = sorted({str(s.sig) for d, _ in members for s in _moving(d) if s.sig is not None})
    constants = sorted({str(s) for d, _ in members for s in d.summands if s.locally_constant})

    citations = []
    for s in d0.summands:
        if s.constancy_rule:
            citations.extend(rule(s.constancy_rule).citations)
    citations.append(_MONODROMY_CITATION)

    notes: list[str] = []
    try:
        hg = hodge_group(lead) if len(moving) == 1 else None
        t = monodromy_group(d0, v0)
        hg_label = hg.label
        mono, cx, rdim, rep = t.label, t.complexified_label, t.real_dimension, t.representation
        for note in t.notes:
            if note not in footnotes:
                footnotes.append(note)
    except UnresolvedError as exc:
        hg_label = mono = cx = UNRESOLVED
        rdim, rep = None, ""
        notes.append(str(exc))

    anchor = _GROUP_CITATIONS.get(f"{lead.dim}[{lead.endo.key}]")
    if anchor:
        citations.append(anchor)
    if not d0.is_simple and any(s.locally_constant for s in d0.summands):
        citations.append(_TRIVIAL_ON_CONSTANT)

    status = v0.status
    if status is FeasibilityStatus.REALIZED_GCI:
        gci = True
    elif v0.locus is not None:
        gci = False
    else:
        gci = None
    for r in kb.realizing(key):
        citations.append(r.citation)
        if not r.verified:
            notes.append(f"locus record {r.name!r} is user-supplied and unverified")
    for r in kb.annotating(key):
        citations.append(r.citation)
        notes.append(f"{r.name}: {r.notes}" if r.notes else r.name)
    notes.extend(n for n in v0.notes if n.startswith(("GCI", "no locus")) or ": decomposable codim" in n)

    specs = [domain_spec(s.endo, s.sig) for s in moving]
    return OutcomeRow(
        key=key,
        shape=d0.shape_label,
        endomorphism_class=" + ".join(s.endo.description for s in moving),
        albert=lead.endo.to_dict(),
        signatures=signatures,
        domain=" x ".join(sp.label for sp in specs),
        domain_dimension=sum(sp.total_dimension for sp in specs),
        constant_summands=constants,
        hodge_group=hg_label,
        monodromy=mono,
        complexified_label=cx,
        real_dimension=rdim,
        representation=rep,
        gci=gci,
        status=status.value,
        locus=v0.locus,
        citations=list(dict.fromkeys(citations)),
        notes=list(dict.fromkeys(notes)),
        sort_key=(_STATUS_RANK[status], tuple(-s.dim for s in moving), tuple(s.endo.sort_key for s in moving)),
    )


def classify(genus: int, kb: KnowledgeBase | None = None) -> ClassificationReport:
    """Run the whole pipeline for fibres of the given genus.

    Surviving decompositions are grouped by their outcome key, so the
    endomorphisms of locally constant summands and the choice of signature
    do not multiply rows.  Rows come realized first, then by moving summand.
    """
    if isinstance(genus, bool) or not isinstance(genus, int):
        raise UsageError(f"genus must be an integer, got {genus!r}")
    if genus < 3:
        raise UsageError(f"fiber genus must be >= 3 (got {genus}): {GENUS_CITATION}")
    kb = KnowledgeBase.builtin() if kb is None else kb

    groups: dict[str, list] = {}
    excluded = []
    for d in enumerate_decompositions(genus):
        v = assess(d, kb)
        if v.excluded:
            excluded.append(ExcludedEntry(d, v))
            continue
        groups.setdefault(outcome_key(d), []).append((d, v))

    footnotes: list[str] = []
    rows = [_build_row(key, members, kb, footnotes) for key, members in groups.items()]
    rows.sort(key=lambda r: (r.sort_key, r.key))
    return ClassificationReport(genus, rows, excluded, __version__, kb.fingerprint(), footnotes)
