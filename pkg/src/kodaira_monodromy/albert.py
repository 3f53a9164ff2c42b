"""Endomorphism-algebra classes of simple weight-1 rational Hodge structures.

A simple polarizable Hodge structure ``V`` of type ``{(-1,0),(0,-1)}`` and
dimension ``2n`` has a division algebra ``L`` of endomorphisms with positive
(Rosati) involution.  Albert's classification puts ``L`` in one of four types.
We work at the granularity of type and degrees only: two real cubic fields are
the same class here.

Notation: ``F0`` is the centre of ``L``, ``F`` the subfield of ``F0`` fixed by
the involution, ``l = [F:Q]``, ``q**2 = [L:F0]`` and ``2n = m [L:Q]``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from .errors import DomainError

__all__ = [
    "AlbertType",
    "AlbertClass",
    "SignatureIV",
    "enumerate_albert_classes",
    "enumerate_signatures",
    "degree_of",
]


class AlbertType(str, enum.Enum):
    I = "I"  # totally real field
    II = "II"  # totally indefinite quaternion algebra over F
    III = "III"  # totally definite quaternion algebra over F
    IV = "IV"  # central simple algebra over a CM field F0

    @property
    def rank(self) -> int:
        return ("I", "II", "III", "IV").index(self.value)


def degree_of(albert_type: AlbertType, l: int, q: int) -> int:
    """Return ``[L:Q]`` for the given type and degrees."""
    albert_type = AlbertType(albert_type)
    if albert_type is AlbertType.I:
        return l
    if albert_type in (AlbertType.II, AlbertType.III):
        return 4 * l
    return 2 * l * q * q


_REAL_NAMES = {1: "Q", 2: "totally real quadratic field", 3: "totally real cubic field"}


def _describe(t: AlbertType, l: int, q: int) -> str:
    over = "Q" if l == 1 else f"a totally real field of degree {l}"
    if t is AlbertType.I:
        return _REAL_NAMES.get(l, f"totally real field of degree {l}")
    if t is AlbertType.II:
        return f"indefinite quaternion algebra over {over}"
    if t is AlbertType.III:
        return f"definite quaternion algebra over {over}"
    if q == 1:
        return "imaginary quadratic field" if l == 1 else f"CM field of degree {2 * l}"
    cm = "an imaginary quadratic field" if l == 1 else f"a CM field of degree {2 * l}"
    return f"division algebra of degree {q} over {cm}"


@dataclass(frozen=True, order=False)
class AlbertClass:
    """Symbolic endomorphism algebra of a ``2n``-dimensional simple structure."""

    albert_type: AlbertType
    l: int
    q: int
    m: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "albert_type", AlbertType(self.albert_type))
        t = self.albert_type
        if min(self.l, self.q, self.m, self.n) < 1:
            raise DomainError(f"degrees must be positive: {self!r}")
        if t is AlbertType.I and self.q != 1:
            raise DomainError("Type I has q = 1")
        if t in (AlbertType.II, AlbertType.III) and self.q != 2:
            raise DomainError(f"Type {t.value} has q = 2")
        if self.m * self.degree_L != 2 * self.n:
            raise DomainError(f"2n != m[L:Q] for {self!r}")
        if self.n % self.l:
            raise DomainError(f"l = {self.l} does not divide n = {self.n}")
        if t is AlbertType.I and self.m % 2:
            raise DomainError("Type I requires m even")

    @property
    def degree_L(self) -> int:
        return degree_of(self.albert_type, self.l, self.q)

    @property
    def description(self) -> str:
        return _describe(self.albert_type, self.l, self.q)

    @property
    def is_commutative(self) -> bool:
        return self.albert_type is AlbertType.I or (
            self.albert_type is AlbertType.IV and self.q == 1
        )

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.albert_type.rank, self.l, self.q, self.m)

    @property
    def key(self) -> str:
        """Compact stable identifier, e.g. ``I;l=3;q=1``."""
        return f"{self.albert_type.value};l={self.l};q={self.q}"

    def to_dict(self) -> dict:
        return {
            "albert_type": self.albert_type.value,
            "l": self.l,
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "degree_L": self.degree_L,
            "description": self.description,
        }

    def __str__(self) -> str:
        return f"{self.description} [Type {self.albert_type.value}, l={self.l}, q={self.q}, m={self.m}]"


@dataclass(frozen=True)
class SignatureIV:
    """Multiplicities ``(r_nu, s_nu)`` of ``chi_nu`` and its conjugate on ``V^{1,0}``."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(r), int(s)) for r, s in self.pairs)
        if any(r < 0 or s < 0 for r, s in pairs):
            raise DomainError(f"negative multiplicity in signature {pairs}")
        object.__setattr__(self, "pairs", pairs)

    @property
    def l(self) -> int:
        return len(self.pairs)

    def check(self, c: AlbertClass) -> None:
        """Raise :class:`DomainError` unless this signature fits ``c``."""
        if c.albert_type is not AlbertType.IV:
            raise DomainError("signatures only defined for Type IV")
        if self.l != c.l:
            raise DomainError(f"signature has {self.l} pairs, class has l = {c.l}")
        for r, s in self.pairs:
            if r + s != c.m * c.q:
                raise DomainError(f"r + s = {r + s} != mq = {c.m * c.q}")

    def __add__(self, other: SignatureIV) -> SignatureIV:
        if self.l != other.l:
            raise DomainError("cannot add signatures of different length")
        return SignatureIV(tuple((a + c, b + d) for (a, b), (c, d) in zip(self.pairs, other.pairs)))

    def scaled(self, k: int) -> SignatureIV:
        return SignatureIV(tuple((k * r, k * s) for r, s in self.pairs))

    def __str__(self) -> str:
        return " ".join(f"({r},{s})" for r, s in self.pairs)


def enumerate_albert_classes(n: int) -> list[AlbertClass]:
    """Every admissible endomorphism class for a simple ``2n``-dimensional structure.

    The result is sorted by (type, l, q) and always starts with ``L = Q``.
    For Type IV every ``q`` with ``2 l q^2 | 2n`` is tried; no value of ``q``
    is singled out.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    out = []
    for l in range(1, n + 1):
        if n % l:
            continue
        if (2 * n) % (2 * l) == 0 and ((2 * n) // l) % 2 == 0:
            out.append(AlbertClass(AlbertType.I, l, 1, 2 * n // l, n))
        if (2 * n) % (4 * l) == 0:
            for t in (AlbertType.II, AlbertType.III):
                out.append(AlbertClass(t, l, 2, 2 * n // (4 * l), n))
        q = 1
        while 2 * l * q * q <= 2 * n:
            if (2 * n) % (2 * l * q * q) == 0:
                out.append(AlbertClass(AlbertType.IV, l, q, 2 * n // (2 * l * q * q), n))
            q += 1
    return sorted(out, key=lambda c: c.sort_key)


def enumerate_signatures(c: AlbertClass) -> list[SignatureIV]:
    """All ``(mq+1)**l`` signatures for a Type IV class, lexicographically.

    Pairs are ordered by decreasing ``r``, so for ``l = 1, mq = 3`` the list
    is ``(3,0), (2,1), (1,2), (0,3)``.
    """
    if c.albert_type is not AlbertType.IV:
        raise DomainError("signatures only defined for Type IV")
    mq = c.m * c.q
    single = [(r, mq - r) for r in range(mq, -1, -1)]
    return [SignatureIV(p) for p in product(single, repeat=c.l)]
