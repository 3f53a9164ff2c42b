"""Decompositions of the fibre Hodge structure and the groups attached to them.

A decomposition ``V = V_1^{n_1} + ... + V_k^{n_k}`` is recorded as a tuple of
``(SimpleSummandClass, multiplicity)`` parts.  Summands of the same dimension
are told apart by position only: the engine does not distinguish two
elliptic curves that both have endomorphisms by ``Q``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from itertools import combinations_with_replacement, product
from typing import TYPE_CHECKING

from .albert import AlbertClass, AlbertType, SignatureIV, enumerate_albert_classes, enumerate_signatures
from .domains import domain_dimension, is_cm
from .errors import DomainError, InconsistencyError, UnresolvedError

if TYPE_CHECKING:
    from .obstructions import FeasibilityVerdict

__all__ = [
    "SimpleSummandClass",
    "HodgeDecomposition",
    "GroupFamily",
    "GroupDescriptor",
    "enumerate_shapes",
    "enumerate_decompositions",
    "summand_options",
    "hodge_group",
    "derived_subgroup",
    "monodromy_group",
    "monodromy_contributions",
    "product_group",
]


@dataclass(frozen=True)
class SimpleSummandClass:
    dim: int
    endo: AlbertClass
    sig: SignatureIV | None = None

    def __post_init__(self):
        if self.dim < 2 or self.dim % 2:
            raise DomainError(f"summand dimension must be positive and even, got {self.dim}")
        if self.endo.n * 2 != self.dim:
            raise DomainError(f"class is for dimension {2 * self.endo.n}, summand has {self.dim}")
        # validates the signature against the class
        domain_dimension(self.endo, self.sig)

    @property
    def domain_dimension(self) -> int:
        return domain_dimension(self.endo, self.sig)

    @property
    def is_cm(self) -> bool:
        return is_cm(self.endo, self.sig)

    @property
    def constancy_rule(self) -> str | None:
        """Id of the rule forcing this summand's variation to be locally constant."""
        if self.dim == 2:
            return "R1"
        if self.is_cm:
            return "R2"
        return None

    @property
    def locally_constant(self) -> bool:
        return self.constancy_rule is not None

    @property
    def sort_key(self) -> tuple:
        sig = self.sig.pairs if self.sig else ()
        return (-self.dim, self.endo.sort_key, tuple((-r, -s) for r, s in sig))

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "endo": self.endo.to_dict(),
            "signature": [list(p) for p in self.sig.pairs] if self.sig else None,
            "domain_dimension": self.domain_dimension,
            "locally_constant": self.locally_constant,
        }

    def __str__(self) -> str:
        s = f"{self.dim}-dim, {self.endo.description}"
        if self.sig is not None:
            s += f", signature {self.sig}"
        return s


@dataclass(frozen=True)
class HodgeDecomposition:
    parts: tuple[tuple[SimpleSummandClass, int], ...]

    def __post_init__(self):
        if not self.parts:
            raise DomainError("empty decomposition")
        if any(mult < 1 for _, mult in self.parts):
            raise DomainError("multiplicities must be positive")

    @property
    def total(self) -> int:
        return sum(s.dim * e for s, e in self.parts)

    @property
    def n(self) -> int:
        return self.total // 2

    @property
    def is_simple(self) -> bool:
        return len(self.parts) == 1 and self.parts[0][1] == 1

    @property
    def shape(self) -> tuple[tuple[int, int], ...]:
        """Blocks ``(dim, multiplicity)`` in canonical order."""
        return tuple((s.dim, e) for s, e in self.parts)

    @property
    def shape_label(self) -> str:
        return shape_label(tuple((d // 2, e) for d, e in self.shape))

    @property
    def summands(self) -> list[SimpleSummandClass]:
        return [s for s, _ in self.parts]

    def non_constant(self) -> list[tuple[int, SimpleSummandClass]]:
        return [(i, s) for i, s in enumerate(self.summands) if not s.locally_constant]

    def to_dict(self) -> dict:
        return {
            "shape": self.shape_label,
            "parts": [dict(s.to_dict(), multiplicity=e) for s, e in self.parts],
        }

    def __str__(self) -> str:
        return " + ".join(f"[{s}]" + (f"^{e}" if e > 1 else "") for s, e in self.parts)


def shape_label(shape: tuple[tuple[int, int], ...]) -> str:
    """Render blocks of half-dimensions, e.g. ``((1, 2), (1, 1))`` -> ``2^2+2'``."""
    seen: dict[int, int] = {}
    bits = []
    for k, e in shape:
        primes = seen.get(k, 0)
        seen[k] = primes + 1
        bits.append(f"{2 * k}" + "'" * primes + (f"^{e}" if e > 1 else ""))
    return "+".join(bits)


def enumerate_shapes(n: int) -> list[tuple[tuple[int, int], ...]]:
    """All multisets of blocks ``(k, e)`` with ``sum k*e = n``.

    ``k`` is the half-dimension of a simple summand and ``e`` its
    multiplicity.  Order: larger summands first, then fewer blocks.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    blocks = sorted(((k, e) for k in range(1, n + 1) for e in range(1, n // k + 1)), reverse=True)
    found = []

    def rec(remaining: int, start: int, acc: list):
        if remaining == 0:
            found.append(tuple(acc))
            return
        for i in range(start, len(blocks)):
            k, e = blocks[i]
            if k * e <= remaining:
                acc.append(blocks[i])
                rec(remaining - k * e, i, acc)
                acc.pop()

    rec(n, 0, [])
    return sorted(found, key=lambda sh: (tuple(-k for k, _ in sh), tuple(-e for _, e in sh)))


def summand_options(k: int) -> list[SimpleSummandClass]:
    """Every (class, signature) dressing for a simple ``2k``-dimensional summand."""
    options = []
    for c in enumerate_albert_classes(k):
        if c.albert_type is AlbertType.IV:
            options.extend(SimpleSummandClass(2 * k, c, sig) for sig in enumerate_signatures(c))
        else:
            options.append(SimpleSummandClass(2 * k, c))
    return options


def enumerate_decompositions(n: int) -> list[HodgeDecomposition]:
    """All decompositions of a ``2n``-dimensional structure, fully dressed.

    Blocks of equal ``(k, e)`` receive dressings as a multiset, so the same
    decomposition never appears twice under relabelling.
    """
    out = []
    for shape in enumerate_shapes(n):
        groups: list[tuple[tuple[int, int], int]] = []
        for block in shape:
            if groups and groups[-1][0] == block:
                groups[-1] = (block, groups[-1][1] + 1)
            else:
                groups.append((block, 1))
        per_group = []
        for (k, e), count in groups:
            opts = summand_options(k)
            per_group.append([[(opts[i], e) for i in combo]
                              for combo in combinations_with_replacement(range(len(opts)), count)])
        for choice in product(*per_group):
            parts = tuple(p for chunk in choice for p in chunk)
            out.append(HodgeDecomposition(parts))
    return out


class GroupFamily(str, enum.Enum):
    SP = "Sp"
    RES_SL = "ResScalarsSL"
    U_HERMITIAN = "U_Hermitian"
    SU_HERMITIAN = "SU_Hermitian"
    TORUS = "Torus"
    PRODUCT = "Product"
    TRIVIAL = "Trivial"


@dataclass(frozen=True)
class GroupDescriptor:
    """Symbolic record of a rational algebraic group.

    ``derived`` is ``None`` when the group is its own derived subgroup.
    """

    family: GroupFamily
    label: str
    complexified_label: str
    real_dimension: int
    factors: tuple[GroupDescriptor, ...] = ()
    derived: GroupDescriptor | None = None
    representation: str = ""
    notes: tuple[str, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        d = {
            "family": self.family.value,
            "label": self.label,
            "complexified_label": self.complexified_label,
            "real_dimension": self.real_dimension,
        }
        if self.factors:
            d["factors"] = [f.to_dict() for f in self.factors]
        if self.derived is not None:
            d["derived"] = self.derived.to_dict()
        if self.representation:
            d["representation"] = self.representation
        if self.notes:
            d["notes"] = list(self.notes)
        return d


TRIVIAL = GroupDescriptor(GroupFamily.TRIVIAL, "1", "1", 0)


def sp(two_k: int) -> GroupDescriptor:
    k = two_k // 2
    return GroupDescriptor(GroupFamily.SP, f"Sp({two_k})", f"Sp({two_k})", k * (2 * k + 1))


def res_sl(l: int, rank: int, label: str) -> GroupDescriptor:
    cx = "×".join([f"SL({rank})"] * l)
    return GroupDescriptor(GroupFamily.RES_SL, label, cx, l * (rank * rank - 1))


def product_group(*groups: GroupDescriptor) -> GroupDescriptor:
    groups = tuple(g for g in groups if g.family is not GroupFamily.TRIVIAL)
    if not groups:
        return TRIVIAL
    if len(groups) == 1:
        return groups[0]
    return GroupDescriptor(
        GroupFamily.PRODUCT,
        " × ".join(g.label for g in groups),
        "×".join(g.complexified_label for g in groups),
        sum(g.real_dimension for g in groups),
        factors=groups,
    )


_SU_M = GroupDescriptor(
    GroupFamily.SU_HERMITIAN,
    "SU(M,¯)",
    "SU(3)",
    8,
    notes=(
        "M = M_3(L^op) is the centralizer of L in End_Q(V); isomorphic over Qbar to SU(3)",
        "label reproduced as printed; the complexification of a special unitary group is SL(3)",
    ),
)

# (summand dim, Albert type, l, q) -> Hodge group, per Ribet for simple
# structures of prime abelian dimension.
_RIBET = {
    (6, AlbertType.I, 1, 1): sp(6),
    (6, AlbertType.I, 3, 1): res_sl(3, 2, "R_{L/Q}SL(_LV)"),
    (6, AlbertType.IV, 1, 1): GroupDescriptor(
        GroupFamily.U_HERMITIAN, "U(M,¯)", "U(3)", 9, derived=_SU_M,
        notes=("isomorphic over Qbar to U(3)",),
    ),
    (4, AlbertType.I, 1, 1): sp(4),
    (4, AlbertType.I, 2, 1): res_sl(2, 2, "R_{L_2/Q}SL(_{L_2}V_2)"),
    (2, AlbertType.I, 1, 1): sp(2),
    (2, AlbertType.IV, 1, 1): GroupDescriptor(
        GroupFamily.TORUS, "U_L(1)", "GL(1)", 1, derived=TRIVIAL,
        notes=("CM elliptic summand: commutative Hodge group",),
    ),
}


def hodge_group(s: SimpleSummandClass) -> GroupDescriptor:
    """Hodge group of a simple summand, for the cases with a known answer.

    Raises :class:`UnresolvedError` for anything outside the table, and for
    CM summands of dimension greater than 2.
    """
    key = (s.dim, s.endo.albert_type, s.endo.l, s.endo.q)
    if key not in _RIBET or (s.dim > 2 and s.is_cm):
        raise UnresolvedError(f"Hodge group of {s}")
    return _RIBET[key]


def derived_subgroup(g: GroupDescriptor) -> GroupDescriptor:
    return g if g.derived is None else g.derived


def _block_name(d: HodgeDecomposition, i: int) -> str:
    s, e = d.parts[i]
    return f"V_{i + 1}" + (f"^{e}" if e > 1 else "") + f" (dim {s.dim})"


def monodromy_group(d: HodgeDecomposition, feasibility: FeasibilityVerdict) -> GroupDescriptor:
    """Connected monodromy group of a decomposition that survived the exclusions.

    The group is trivial on locally constant summands.  On the single
    non-constant summand it is the derived subgroup of the Hodge group; that
    subgroup is simple and the monodromy is infinite, so the normal subgroup
    allowed by André's theorem is the whole derived group.
    """
    if feasibility.excluded:
        raise DomainError(f"decomposition was excluded by {feasibility.rule_id}")
    moving = d.non_constant()
    if len(moving) != 1:
        msg = f"{len(moving)} non-constant summands in {d}"
        if d.n == 3:
            raise InconsistencyError(msg)
        raise UnresolvedError(msg)
    i, s = moving[0]
    t = derived_subgroup(hodge_group(s))
    trivial_on = [_block_name(d, j) for j in range(len(d.parts)) if j != i]
    rep = f"acts on {_block_name(d, i)}"
    if trivial_on:
        rep += "; trivial on " + ", ".join(trivial_on)
    return replace(t, representation=rep)


def monodromy_contributions(d: HodgeDecomposition, feasibility: FeasibilityVerdict) -> list[GroupDescriptor]:
    """Per-summand view: the monodromy group on the moving summand, trivial elsewhere."""
    t = monodromy_group(d, feasibility)
    return [t if not s.locally_constant else TRIVIAL for s in d.summands]
