"""Exclusion rules, locus knowledge base and codimension arithmetic.

A decomposition of the fibre Hodge structure either violates one of the
shipped exclusion rules or survives them.  A survivor is *realized* by a
general complete intersection (GCI) fibration when the Shimura locus it lives
on has decomposable locus and Satake boundary both of codimension at least 2.
"""
from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import asdict, dataclass, field
from itertools import product
from pathlib import Path

from .albert import AlbertClass, AlbertType, SignatureIV, enumerate_signatures
from .domains import domain_dimension
from .errors import DomainError
from .hodge import HodgeDecomposition, SimpleSummandClass, enumerate_shapes, shape_label

__all__ = [
    "ExclusionRule",
    "RULES",
    "rule",
    "FeasibilityStatus",
    "FeasibilityVerdict",
    "apply_exclusions",
    "Stratum",
    "decomposable_strata",
    "decomposable_codim",
    "generic_signature",
    "LocusRecord",
    "gci_feasible",
    "builtin_locus_records",
    "KnowledgeBase",
    "outcome_key",
    "assess",
]


@dataclass(frozen=True)
class ExclusionRule:
    id: str
    description: str
    citations: tuple[str, ...]


RULES: tuple[ExclusionRule, ...] = (
    ExclusionRule(
        "R1",
        "two-dimensional summand forces locally constant projection",
        (r"induced by projection onto the $i$-th factor",),
    ),
    ExclusionRule(
        "R2",
        "CM summand is locally constant",
        (r"is a point and hence the variation",),
    ),
    ExclusionRule(
        "R3",
        "some simple summand of dim >= 4 must be non-constant",
        (r"of dimension at least $4$ on which",),
    ),
    ExclusionRule(
        "R4",
        "4-dim simple summand with indefinite quaternion endomorphisms is forbidden",
        (r"an indefinite quaternion algebra",),
    ),
    ExclusionRule(
        "R5",
        "4-dim simple summand cannot have imaginary quadratic or Type III endomorphisms",
        (
            r"cannot have endomorphism algebra an imaginary quadratic field",
            r"the Type III case also cannot occur",
        ),
    ),
    ExclusionRule(
        "R6",
        "CM-type total structure forbidden",
        (r"cannot be of CM type",),
    ),
)

_RULES_BY_ID = {r.id: r for r in RULES}


def rule(rule_id: str) -> ExclusionRule:
    return _RULES_BY_ID[rule_id]


class FeasibilityStatus(str, enum.Enum):
    REALIZED_GCI = "RealizedGCI"
    POSSIBLE_NOT_GCI = "PossibleNotGCI"
    EXCLUDED = "Excluded"


@dataclass(frozen=True)
class FeasibilityVerdict:
    status: FeasibilityStatus
    rule_id: str | None = None
    notes: tuple[str, ...] = ()
    locus: str | None = None

    def __post_init__(self):
        if (self.status is FeasibilityStatus.EXCLUDED) != (self.rule_id is not None):
            raise ValueError("rule_id is set exactly when the verdict is Excluded")

    @property
    def excluded(self) -> bool:
        return self.status is FeasibilityStatus.EXCLUDED

    def to_dict(self) -> dict:
        return {"status": self.status.value, "rule_id": self.rule_id,
                "notes": list(self.notes), "locus": self.locus}


def _excluded(rule_id: str, notes: list[str]) -> FeasibilityVerdict:
    return FeasibilityVerdict(FeasibilityStatus.EXCLUDED, rule_id, tuple(notes))


def _is_forbidden_quaternion(s: SimpleSummandClass) -> bool:
    return s.dim == 4 and s.endo.albert_type is AlbertType.II


def _is_forbidden_shimura(s: SimpleSummandClass) -> bool:
    if s.dim != 4:
        return False
    e = s.endo
    return e.albert_type is AlbertType.III or (e.albert_type is AlbertType.IV and e.l == 1 and e.q == 1)


def apply_exclusions(d: HodgeDecomposition) -> FeasibilityVerdict:
    """Run R1-R6 over ``d``.

    Class-level prohibitions (R4, R5) are checked before the CM and
    constancy tests (R6, R3), so a forbidden algebra is reported under its
    own rule even when its domain happens to be a point.  A survivor comes
    back as ``PossibleNotGCI``; see :func:`assess` for the upgrade.
    """
    notes = []
    for i, s in enumerate(d.summands):
        if s.constancy_rule:
            notes.append(f"V_{i + 1} locally constant ({s.constancy_rule})")

    for i, s in enumerate(d.summands):
        if _is_forbidden_quaternion(s):
            return _excluded("R4", notes + [f"V_{i + 1} has {s.endo.description}"])
    for i, s in enumerate(d.summands):
        if _is_forbidden_shimura(s):
            return _excluded("R5", notes + [f"V_{i + 1} has {s.endo.description}"])
    if all(s.is_cm for s in d.summands):
        return _excluded("R6", notes + ["every simple summand is of CM type"])
    if not any(s.dim >= 4 and not s.locally_constant for s in d.summands):
        return _excluded("R3", notes + ["no non-constant simple summand of dimension >= 4"])
    return FeasibilityVerdict(FeasibilityStatus.POSSIBLE_NOT_GCI, None, tuple(notes + ["survives exclusions"]))


# -- decomposable locus -------------------------------------------------------


def generic_signature(c: AlbertClass) -> SignatureIV:
    """First signature (in enumeration order) of maximal domain dimension."""
    sigs = enumerate_signatures(c)
    best = max(domain_dimension(c, s) for s in sigs)
    return next(s for s in sigs if domain_dimension(c, s) == best)


@dataclass(frozen=True)
class Stratum:
    """Largest decomposable sub-locus of one shape inside a Mumford-Tate domain."""

    shape: str
    dimension: int
    pieces: tuple[str, ...]

    def to_dict(self) -> dict:
        return asdict(self)


def _block_options(c: AlbertClass, k: int, e: int) -> list[tuple[int, SignatureIV | None, str]]:
    """Ways for ``c`` to act on an isotypic block ``W^e`` with ``dim W = 2k``.

    Each option is ``(moduli of W, signature contributed, description)``.
    Either ``L`` sits in ``M_e(Q)`` (needs ``[L:Q] | e``; ``W`` is free) or
    ``L`` acts on ``W`` itself.  Proper intermediate subfields are not modelled.
    """
    deg = c.degree_L
    typ_iv = c.albert_type is AlbertType.IV
    out = []
    if e % deg == 0:
        free = AlbertClass(AlbertType.I, 1, 1, 2 * k, k)
        contrib = None
        if typ_iv:
            mult = c.q * k * e // deg
            contrib = SignatureIV(((mult, mult),) * c.l)
        out.append((domain_dimension(free), contrib, f"{2 * k}-dim free, L in M_{e}(Q)"))
    if (2 * k) % deg == 0:
        try:
            own = AlbertClass(c.albert_type, c.l, c.q, 2 * k // deg, k)
        except DomainError:
            own = None
        if own is not None:
            if typ_iv:
                for sig in enumerate_signatures(own):
                    out.append((domain_dimension(own, sig), sig.scaled(e),
                                f"{2 * k}-dim with L-action, signature {sig}"))
            else:
                out.append((domain_dimension(own), None, f"{2 * k}-dim with L-action"))
    return out


def decomposable_strata(c: AlbertClass, n: int | None = None,
                        sig: SignatureIV | None = None) -> list[Stratum]:
    """Non-simple shapes compatible with an ``L``-action, with their best dimension.

    Sub-locus dimension sums the moduli of the distinct simple factors;
    repeated factors contribute nothing extra.
    """
    n = c.n if n is None else n
    if n != c.n:
        raise DomainError(f"class is for n = {c.n}, asked about n = {n}")
    if c.albert_type is AlbertType.IV:
        sig = generic_signature(c) if sig is None else sig
        sig.check(c)
    elif sig is not None:
        raise DomainError("signatures only defined for Type IV")

    strata = []
    for shape in enumerate_shapes(n):
        if shape == ((n, 1),):
            continue
        best: tuple[int, tuple[str, ...]] | None = None
        for choice in product(*(_block_options(c, k, e) for k, e in shape)):
            if sig is not None:
                total = SignatureIV(((0, 0),) * c.l)
                for _, contrib, _ in choice:
                    total = total + contrib
                if total != sig:
                    continue
            dim = sum(o[0] for o in choice)
            if best is None or dim > best[0]:
                best = (dim, tuple(o[2] for o in choice))
        if best is not None:
            strata.append(Stratum(shape_label(shape), best[0], best[1]))
    return strata


def decomposable_codim(c: AlbertClass, n: int | None = None, sig: SignatureIV | None = None) -> int:
    """Codimension of the decomposable locus in the Mumford-Tate domain of ``c``.

    With no compatible non-simple shape the locus is empty and the full
    domain dimension is returned.  Type IV classes default to the generic
    signature.
    """
    if c.albert_type is AlbertType.IV and sig is None:
        sig = generic_signature(c)
    d = domain_dimension(c, sig)
    strata = decomposable_strata(c, n, sig)
    if not strata:
        return d
    return d - max(s.dimension for s in strata)


# -- knowledge base ------------------------------------------------------------


@dataclass(frozen=True)
class LocusRecord:
    name: str
    ambient_genus: int
    dim: int
    decomposable_codim: int
    boundary_codim: int
    citation: str
    realizes: str | None = None
    annotates: str | None = None
    notes: str = ""
    verified: bool = field(default=True, compare=False)

    def __post_init__(self):
        if min(self.dim, self.decomposable_codim, self.boundary_codim) < 0 or self.ambient_genus < 1:
            raise ValueError(f"negative or zero field in locus record {self.name!r}")
        if self.decomposable_codim > self.dim:
            raise ValueError(f"{self.name}: decomposable_codim exceeds dim")
        if self.boundary_codim > self.dim + 1:
            raise ValueError(f"{self.name}: boundary_codim exceeds dim + 1")
        if not self.citation:
            raise ValueError(f"{self.name}: citation anchor is required")

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "ambient_genus": self.ambient_genus,
            "dim": self.dim,
            "decomposable_codim": self.decomposable_codim,
            "boundary_codim": self.boundary_codim,
            "citation": self.citation,
        }
        for key in ("realizes", "annotates"):
            if getattr(self, key) is not None:
                d[key] = getattr(self, key)
        if self.notes:
            d["notes"] = self.notes
        return d

    @classmethod
    def from_dict(cls, raw: dict, verified: bool = False) -> LocusRecord:
        required = ("name", "ambient_genus", "dim", "decomposable_codim", "boundary_codim", "citation")
        missing = [k for k in required if k not in raw]
        if missing:
            raise ValueError(f"locus record missing fields: {', '.join(missing)}")
        unknown = set(raw) - set(required) - {"realizes", "annotates", "notes"}
        if unknown:
            raise ValueError(f"unknown locus record fields: {', '.join(sorted(unknown))}")
        for k in required[1:5]:
            if not isinstance(raw[k], int) or isinstance(raw[k], bool):
                raise ValueError(f"{k} must be an integer")
        return cls(
            name=str(raw["name"]),
            ambient_genus=raw["ambient_genus"],
            dim=raw["dim"],
            decomposable_codim=raw["decomposable_codim"],
            boundary_codim=raw["boundary_codim"],
            citation=str(raw["citation"]),
            realizes=raw.get("realizes"),
            annotates=raw.get("annotates"),
            notes=str(raw.get("notes", "")),
            verified=verified,
        )


def gci_feasible(r: LocusRecord) -> bool:
    """Both codimension conditions for a general complete intersection curve."""
    return r.decomposable_codim >= 2 and r.boundary_codim >= 2


KEY_SIMPLE_Q = "6[I;l=1;q=1]"
KEY_SIMPLE_REAL_CUBIC = "6[I;l=3;q=1]"
KEY_SIMPLE_IMAG_QUAD = "6[IV;l=1;q=1]"
KEY_SPLIT_Q = "4[I;l=1;q=1]+2[*]"
KEY_SPLIT_REAL_QUAD = "4[I;l=2;q=1]+2[*]"


def builtin_locus_records() -> list[LocusRecord]:
    """The shipped loci for genus 3."""
    return [
        LocusRecord(
            "Siegel modular variety A_3[n]", 3, 6, 2, 3,
            r"the decomposable locus $\mathcal{A}_3[n]^{\mathrm{dec}}$ has codimension $2$",
            realizes=KEY_SIMPLE_Q,
            notes="boundary codim 3 = dim A_3 - dim A_2, from dimension g(g+1)/2",
        ),
        LocusRecord(
            "Hilbert modular threefold (totally real cubic L)", 3, 3, 2, 3,
            r"consists of a finite collection of points",
            realizes=KEY_SIMPLE_REAL_CUBIC,
            notes="decomposable locus is the E^3 stratum, a union of curves",
        ),
        LocusRecord(
            "Picard modular surface (imaginary quadratic L, signature (2,1))", 3, 2, 1, 2,
            r"the decomposable locus of $\overline{D}$ has codimension $1$",
            realizes=KEY_SIMPLE_IMAG_QUAD,
            notes="Satake boundary is finitely many points",
        ),
        LocusRecord(
            "Hecke translate of E_0 x A_2[n]", 3, 3, 2, 2,
            r"has codimension $2$ in $\mathcal{B}^*$",
            realizes=KEY_SPLIT_Q,
            notes="mixing isogenies only keep the E_1 x E_2^2 points decomposable; compactification A_2[n]^*",
        ),
        LocusRecord(
            "Hecke translate of E_0 x Hilbert modular surface (real quadratic L_2)", 3, 2, 1, 2,
            r"has a connected component lying in $\mathcal{A}_3[n]^{\mathrm{dec}}$",
            realizes=KEY_SPLIT_REAL_QUAD,
            notes="the translated E_0 x E^2 curve stays decomposable, so the decomposable part is a divisor",
        ),
        LocusRecord(
            "Picard modular surface, discriminant 23", 3, 2, 1, 2,
            r"an imaginary quadratic field $L$ with discriminant $23$",
            annotates=KEY_SIMPLE_IMAG_QUAD,
            notes="compactification resolves to P^2, so every complete curve meets the decomposable locus: "
                  "no such fibration for this field",
        ),
    ]


class KnowledgeBase:
    """Immutable collection of locus records with JSON round-tripping.

    File format: ``{"format": "kodaira-loci", "version": 1, "records": [...]}``
    (a bare list of records is also accepted on load).
    """

    FORMAT = "kodaira-loci"
    VERSION = 1

    def __init__(self, records):
        self._records = tuple(records)

    @classmethod
    def builtin(cls) -> KnowledgeBase:
        return cls(builtin_locus_records())

    @property
    def records(self) -> tuple[LocusRecord, ...]:
        return self._records

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self):
        return iter(self._records)

    def extended(self, extra) -> KnowledgeBase:
        return KnowledgeBase(self._records + tuple(extra))

    def realizing(self, key: str) -> list[LocusRecord]:
        return [r for r in self._records if r.realizes == key]

    def annotating(self, key: str) -> list[LocusRecord]:
        return [r for r in self._records if r.annotates == key]

    def to_json(self) -> str:
        payload = {"format": self.FORMAT, "version": self.VERSION,
                   "records": [r.to_dict() for r in self._records]}
        return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def fingerprint(self) -> str:
        canon = json.dumps([r.to_dict() for r in self._records], sort_keys=True, ensure_ascii=False)
        return hashlib.sha256(canon.encode("utf-8")).hexdigest()[:16]

    def dump(self, path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def from_json(cls, text: str) -> KnowledgeBase:
        raw = json.loads(text)
        if isinstance(raw, dict):
            if raw.get("format", cls.FORMAT) != cls.FORMAT:
                raise ValueError(f"not a locus knowledge base: format {raw.get('format')!r}")
            raw = raw.get("records", [])
        if not isinstance(raw, list):
            raise ValueError("knowledge base must be a list of records")
        shipped = builtin_locus_records()
        records = []
        for item in raw:
            if not isinstance(item, dict):
                raise ValueError("each locus record must be an object")
            rec = LocusRecord.from_dict(item)
            if rec in shipped:
                rec = LocusRecord.from_dict(item, verified=True)
            records.append(rec)
        return cls(records)

    @classmethod
    def load(cls, path) -> KnowledgeBase:
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def outcome_key(d: HodgeDecomposition) -> str | None:
    """Moving summands with their classes, then the shape of the rest.

    Locally constant parts are written ``{dim}[*]`` because the outcome does
    not depend on their endomorphisms.  ``None`` if nothing varies.
    """
    moving = [i for i, _ in d.non_constant()]
    if not moving:
        return None

    def block(j: int, star: bool) -> str:
        s, e = d.parts[j]
        return f"{s.dim}" + (f"^{e}" if e > 1 else "") + ("[*]" if star else f"[{s.endo.key}]")

    rest = [j for j in range(len(d.parts)) if j not in moving]
    return "+".join([block(j, False) for j in moving] + [block(j, True) for j in rest])


def assess(d: HodgeDecomposition, kb: KnowledgeBase | None = None) -> FeasibilityVerdict:
    """Exclusions, then the GCI test against the loci realizing ``d``."""
    verdict = apply_exclusions(d)
    if verdict.excluded:
        return verdict
    kb = KnowledgeBase.builtin() if kb is None else kb
    key = outcome_key(d)
    records = kb.realizing(key) if key else []
    if not records:
        return FeasibilityVerdict(FeasibilityStatus.POSSIBLE_NOT_GCI, None,
                                  verdict.notes + ("no locus record: GCI realizability unknown",))
    for r in records:
        if gci_feasible(r):
            tag = "" if r.verified else " (unverified record)"
            return FeasibilityVerdict(FeasibilityStatus.REALIZED_GCI, None,
                                      verdict.notes + (f"GCI conditions hold on {r.name}{tag}",), r.name)
    r = records[0]
    return FeasibilityVerdict(
        FeasibilityStatus.POSSIBLE_NOT_GCI, None,
        verdict.notes + (f"{r.name}: decomposable codim {r.decomposable_codim}, "
                         f"boundary codim {r.boundary_codim}",), r.name)
