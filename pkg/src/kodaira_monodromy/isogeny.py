"""Decompositions up to isogeny as multisets of formal simple objects.

Polarizable rational Hodge structures form a semisimple category, so an
abelian variety up to isogeny is its multiset of simple constituents.  Two
products are isogenous iff the multisets agree, and a map between two
indecomposable factors can be nonzero iff they share a constituent.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from .errors import DomainError

__all__ = [
    "FormalSimple",
    "PolarizedProduct",
    "is_isogenous",
    "mixing_exists",
    "in_z_locus",
    "search_space",
    "InclusionCheck",
    "verify_inclusion_Y_in_Z",
]


@dataclass(frozen=True, order=True)
class FormalSimple:
    label: str
    dim: int

    def __post_init__(self):
        if self.dim < 2 or self.dim % 2:
            raise DomainError(f"simple object needs positive even dimension, got {self.dim}")


@dataclass(frozen=True)
class PolarizedProduct:
    """Product of indecomposable polarized factors, each given by its constituents.

    Factors and constituents are stored sorted; the product is unordered.
    """

    factors: tuple[tuple[FormalSimple, ...], ...]
    _content: Counter = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        factors = tuple(sorted(tuple(sorted(f)) for f in self.factors))
        if not factors or any(not f for f in factors):
            raise DomainError("factors must be non-empty")
        labels: dict[str, int] = {}
        for f in factors:
            for x in f:
                if labels.setdefault(x.label, x.dim) != x.dim:
                    raise DomainError(f"label {x.label!r} used with two dimensions")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "_content", Counter(x for f in factors for x in f))

    @classmethod
    def of(cls, *factors) -> PolarizedProduct:
        return cls(tuple(tuple(f) for f in factors))

    @property
    def total_dim(self) -> int:
        return sum(x.dim for f in self.factors for x in f)

    @property
    def content(self) -> Counter:
        return Counter(self._content)

    def __str__(self) -> str:
        return " x ".join("{" + ",".join(x.label for x in f) + "}" for f in self.factors)


def is_isogenous(p: PolarizedProduct, q: PolarizedProduct) -> bool:
    return p._content == q._content


def mixing_exists(p: PolarizedProduct, q: PolarizedProduct) -> bool:
    """Is there an isogeny ``p -> q`` hitting every factor of ``q`` from every factor of ``p``?"""
    if not is_isogenous(p, q):
        return False
    for a in p.factors:
        la = {x.label for x in a}
        for b in q.factors:
            if la.isdisjoint(x.label for x in b):
                return False
    return True


def in_z_locus(p: PolarizedProduct) -> bool:
    """``p`` is isogenous to ``E_1 x E_2^2`` (with ``E_1 = E_2`` allowed)."""
    content = p._content
    if any(x.dim != 2 for x in content):
        return False
    return any(c >= 2 for c in content.values())


def search_space(twos: list[FormalSimple], fours: list[FormalSimple]) -> list[PolarizedProduct]:
    """Decomposable threefolds: shapes (2)+(4) and (2)+(2)+(2).

    A 4-dimensional factor is either a simple surface or an indecomposable
    surface isogenous to a product of two elliptic constituents.
    """
    surfaces = [(s,) for s in fours] + list(combinations_with_replacement(twos, 2))
    seen = {}
    for e, s in product(twos, surfaces):
        p = PolarizedProduct(((e,), s))
        seen[p] = None
    for triple in combinations_with_replacement(twos, 3):
        p = PolarizedProduct(tuple((e,) for e in triple))
        seen[p] = None
    return list(seen)


@dataclass(frozen=True)
class InclusionCheck:
    holds: bool
    pairs_checked: int
    mixing_pairs: int
    counterexamples: tuple[tuple[PolarizedProduct, PolarizedProduct], ...] = ()


def verify_inclusion_Y_in_Z(alphabet_size: int, four_dim_labels: int | None = None) -> InclusionCheck:
    """Exhaustively check that mixing isogenies between decomposable threefolds
    only exist from points isogenous to ``E_1 x E_2^2``.

    The alphabet has ``four_dim_labels`` simple surfaces (default 1, or 0 for
    a one-letter alphabet) and the rest elliptic labels.  Counterexamples are
    collected and returned rather than raised.
    """
    if not 1 <= alphabet_size <= 4:
        raise DomainError(f"alphabet_size must be in 1..4, got {alphabet_size}")
    if four_dim_labels is None:
        four_dim_labels = 1 if alphabet_size > 1 else 0
    n_twos = alphabet_size - four_dim_labels
    if n_twos < 1 or four_dim_labels < 0:
        raise DomainError("need at least one two-dimensional label")
    twos = [FormalSimple(f"e{i + 1}", 2) for i in range(n_twos)]
    fours = [FormalSimple("s" if four_dim_labels == 1 else f"s{i + 1}", 4) for i in range(four_dim_labels)]
    space = search_space(twos, fours)
    bad = []
    mixing = 0
    for p, q in product(space, repeat=2):
        if mixing_exists(p, q):
            mixing += 1
            if not in_z_locus(p):
                bad.append((p, q))
    return InclusionCheck(not bad, len(space) ** 2, mixing, tuple(bad))
