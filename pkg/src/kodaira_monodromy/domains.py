"""Irreducible Hermitian symmetric domains and Mumford-Tate domain dimensions.

Three Cartan families occur as factors:

* ``I_{r,s}``  -- the ``r x s`` ball ``D^1_{r,s}``, dimension ``r s``
* ``II_r``    -- skew-symmetric ``D^2_r``, dimension ``r(r-1)/2``
* ``III_r``   -- Siegel space ``D^3_r``, dimension ``r(r+1)/2``

The connected Mumford-Tate domain through a simple structure with
endomorphism class ``c`` is a product of ``l`` such factors.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .albert import AlbertClass, AlbertType, SignatureIV
from .errors import DomainError

__all__ = [
    "CartanKind",
    "IrreducibleDomain",
    "DomainSpec",
    "domain_spec",
    "domain_dimension",
    "is_cm",
]


class CartanKind(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class IrreducibleDomain:
    kind: CartanKind
    r: int
    s: int = 0  # only used by the ball family

    def __post_init__(self):
        object.__setattr__(self, "kind", CartanKind(self.kind))
        if self.r < 0 or self.s < 0:
            raise DomainError(f"negative domain parameter in {self!r}")
        if self.kind is not CartanKind.I and self.s:
            raise DomainError("only the ball family takes two parameters")

    @classmethod
    def ball(cls, r: int, s: int) -> IrreducibleDomain:
        return cls(CartanKind.I, r, s)

    @classmethod
    def type_ii(cls, r: int) -> IrreducibleDomain:
        return cls(CartanKind.II, r)

    @classmethod
    def type_iii(cls, r: int) -> IrreducibleDomain:
        return cls(CartanKind.III, r)

    @property
    def dimension(self) -> int:
        r = self.r
        if self.kind is CartanKind.I:
            return r * self.s
        if self.kind is CartanKind.II:
            return r * (r - 1) // 2
        return r * (r + 1) // 2

    @property
    def label(self) -> str:
        if self.kind is CartanKind.I:
            return f"D^1_{{{self.r},{self.s}}}"
        if self.kind is CartanKind.II:
            return f"D^2_{self.r}"
        return f"D^3_{self.r}"


@dataclass(frozen=True)
class DomainSpec:
    factors: tuple[IrreducibleDomain, ...]

    @property
    def total_dimension(self) -> int:
        return sum(f.dimension for f in self.factors)

    @property
    def label(self) -> str:
        if not self.factors:
            return "point"
        return " x ".join(f.label for f in self.factors)

    def to_dict(self) -> dict:
        return {"factors": [f.label for f in self.factors], "total_dimension": self.total_dimension}


def _check(c: AlbertClass, sig: SignatureIV | None) -> None:
    if c.albert_type is AlbertType.IV:
        if sig is None:
            raise DomainError("Type IV classes need a signature")
        sig.check(c)
    elif sig is not None:
        raise DomainError("signatures only defined for Type IV")


def domain_spec(c: AlbertClass, sig: SignatureIV | None = None) -> DomainSpec:
    """Factor list of the Mumford-Tate domain for class ``c``."""
    _check(c, sig)
    t = c.albert_type
    if t is AlbertType.I:
        factor = IrreducibleDomain.type_iii(c.m // 2)
        return DomainSpec((factor,) * c.l)
    if t is AlbertType.II:
        return DomainSpec((IrreducibleDomain.type_iii(c.m),) * c.l)
    if t is AlbertType.III:
        return DomainSpec((IrreducibleDomain.type_ii(c.m),) * c.l)
    return DomainSpec(tuple(IrreducibleDomain.ball(r, s) for r, s in sig.pairs))


def _exact_half(num: int) -> int:
    half, rem = divmod(num, 2)
    if rem:
        raise ArithmeticError(f"non-integral domain dimension {num}/2")
    return half


def domain_dimension(c: AlbertClass, sig: SignatureIV | None = None) -> int:
    """Dimension ``d`` from the closed formulas (independent of :func:`domain_spec`)."""
    _check(c, sig)
    m, l = c.m, c.l
    t = c.albert_type
    if t is AlbertType.I:
        # (1/2)(m/2)(m/2 + 1) l, kept integral: m is even for Type I
        return _exact_half(_exact_half(m) * (_exact_half(m) + 1) * l)
    if t is AlbertType.II:
        return _exact_half(m * (m + 1) * l)
    if t is AlbertType.III:
        return _exact_half(m * (m - 1) * l)
    return sum(r * s for r, s in sig.pairs)


def is_cm(c: AlbertClass, sig: SignatureIV | None = None) -> bool:
    """True when the Mumford-Tate domain is a point."""
    return domain_dimension(c, sig) == 0
