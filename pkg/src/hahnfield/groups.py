"""Presentable ordered abelian groups: Hahn sums over catalog chains.

A group presentation names a linearly ordered index chain (a finite order,
the integers, or the rationals) and assigns each chain point an Archimedean
component from a small catalog: the integers ``Int``, the rationals ``Rat``,
or the quadratic group ``RatRoot2`` of values ``a + b*r2``.  Elements are
finitely supported tuples ``(point, value)``; addition is componentwise and
the order is lexicographic by the smallest support point, so points further
down the chain carry infinitesimally smaller weight.

Values are immutable; every operation returns a fresh element.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import (
    BadOverrideError,
    ComponentOutOfClassError,
    MixedPresentationsError,
    NotDivisibleError,
)
from .scalars import Scalar

Point = Union[int, Fraction]


class ChainKind(enum.Enum):
    FINITE = "Finite"
    INTEGERS = "Integers"
    RATIONALS = "Rationals"


@dataclass(frozen=True)
class Chain:
    """A catalog linear order indexing the Archimedean components."""

    kind: ChainKind
    size: int = 0

    def __post_init__(self):
        if self.kind is ChainKind.FINITE:
            if self.size < 0:
                raise ValueError("finite chain needs a non-negative point count")
        elif self.size != 0:
            raise ValueError("size is only meaningful for finite chains")

    @classmethod
    def finite(cls, n: int) -> "Chain":
        return cls(ChainKind.FINITE, n)

    @classmethod
    def integers(cls) -> "Chain":
        return cls(ChainKind.INTEGERS)

    @classmethod
    def rationals(cls) -> "Chain":
        return cls(ChainKind.RATIONALS)

    def canonical_point(self, p: Point) -> Point:
        """Validate ``p`` and normalize its representation for this chain."""
        if self.kind is ChainKind.RATIONALS:
            if isinstance(p, (int, Fraction)):
                return Fraction(p)
            raise ValueError(f"chain point {p!r} is not a rational")
        if isinstance(p, Fraction):
            if p.denominator != 1:
                raise ValueError(f"chain point {p} is not an integer index")
            p = int(p)
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValueError(f"chain point {p!r} is not an integer index")
        if self.kind is ChainKind.FINITE and not 0 <= p < self.size:
            raise ValueError(f"chain point {p} outside Finite({self.size})")
        return p

    def max_point(self) -> Optional[Point]:
        if self.kind is ChainKind.FINITE and self.size > 0:
            return self.size - 1
        return None

    def to_text(self) -> str:
        if self.kind is ChainKind.FINITE:
            return f"Finite({self.size})"
        return self.kind.value

    def __repr__(self) -> str:
        return f"Chain({self.to_text()})"


class ArchClass(enum.Enum):
    """Catalog of Archimedean component groups, up to ordered-group isomorphism.

    The three members are pairwise non-isomorphic: Int is not divisible, Rat
    and RatRoot2 are divisible but have rational dimension 1 and 2.
    """

    INT = "Int"
    RAT = "Rat"
    RAT_ROOT2 = "RatRoot2"

    @property
    def token(self) -> str:
        return self.value

    @property
    def divisible(self) -> bool:
        return self is not ArchClass.INT

    def contains(self, v: Scalar) -> bool:
        if self is ArchClass.INT:
            return v.is_integer()
        if self is ArchClass.RAT:
            return v.is_rational()
        return True

    @classmethod
    def from_token(cls, token: str) -> "ArchClass":
        for member in cls:
            if member.value == token:
                return member
        raise ValueError(f"unknown component class {token!r}")


@dataclass(frozen=True)
class GroupPresentation:
    """A Hahn sum over a catalog chain with catalog components.

    ``overrides`` reassigns individual points of a finite chain; infinite
    chains are uniform.  The trivial group is the empty finite chain.
    """

    chain: Chain
    default: ArchClass
    overrides: tuple[tuple[int, ArchClass], ...] = ()

    def __post_init__(self):
        if not self.overrides:
            return
        if self.chain.kind is not ChainKind.FINITE:
            raise BadOverrideError("component overrides require a finite chain")
        seen = set()
        for p, cls_ in self.overrides:
            if not isinstance(p, int) or not 0 <= p < self.chain.size:
                raise BadOverrideError(f"override point {p} outside {self.chain.to_text()}")
            if p in seen:
                raise BadOverrideError(f"duplicate override for point {p}")
            if not isinstance(cls_, ArchClass):
                raise BadOverrideError(f"override for point {p} is not a component class")
            seen.add(p)
        canonical = tuple(sorted(self.overrides))
        object.__setattr__(self, "overrides", canonical)

    @property
    def is_trivial(self) -> bool:
        return self.chain.kind is ChainKind.FINITE and self.chain.size == 0

    def component_at(self, p: Point) -> ArchClass:
        p = self.chain.canonical_point(p)
        for q, cls_ in self.overrides:
            if q == p:
                return cls_
        return self.default

    def component_classes(self) -> tuple[ArchClass, ...]:
        """The distinct component classes actually assigned, in enum order."""
        if self.is_trivial:
            return ()
        if self.chain.kind is ChainKind.FINITE:
            used = {self.component_at(i) for i in range(self.chain.size)}
        else:
            used = {self.default}
        return tuple(c for c in ArchClass if c in used)

    @property
    def divisible(self) -> bool:
        return all(c.divisible for c in self.component_classes())

    @property
    def has_minimal_positive(self) -> bool:
        """True when a smallest positive element exists.

        That happens exactly when the chain has a maximal point whose
        component is the integers: the unit there is below every other
        positive element.
        """
        mp = self.chain.max_point()
        return mp is not None and self.component_at(mp) is ArchClass.INT

    def zero(self) -> "GroupElement":
        return GroupElement(self, ())

    def element(self, terms: Iterable[tuple[Point, object]]) -> "GroupElement":
        return GroupElement(self, terms)

    def to_text(self) -> str:
        parts = [self.default.token]
        parts += [f"{p}:{c.token}" for p, c in self.overrides]
        return f"HahnSum({self.chain.to_text()}; {', '.join(parts)})"

    def __repr__(self) -> str:
        return f"GroupPresentation({self.to_text()})"


class GroupElement:
    """A finitely supported element of a Hahn-sum presentation.

    Stored as ``(point, value)`` pairs, strictly ascending by point, with all
    zero values removed; equality is structural equality of this canonical
    form.
    """

    __slots__ = ("group", "terms")

    def __init__(self, group: GroupPresentation, terms: Iterable[tuple[Point, object]] = ()):
        merged: dict[Point, Scalar] = {}
        for p, v in terms:
            p = group.chain.canonical_point(p)
            if not isinstance(v, Scalar):
                v = Scalar(v)
            if p in merged:
                v = merged[p] + v
            merged[p] = v
        canon = []
        for p in sorted(merged):
            v = merged[p]
            if v.is_zero():
                continue
            cls_ = group.component_at(p)
            if not cls_.contains(v):
                raise ComponentOutOfClassError(
                    f"value {v} at point {p} is outside component {cls_.token}"
                )
            canon.append((p, v))
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "terms", tuple(canon))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("GroupElement is immutable")

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def min_point(self) -> Optional[Point]:
        return self.terms[0][0] if self.terms else None

    def sign(self) -> int:
        """Lexicographic sign: the sign of the value at the smallest support point."""
        return self.terms[0][1].sign() if self.terms else 0

    def value_at(self, p: Point) -> Scalar:
        p = self.group.chain.canonical_point(p)
        for q, v in self.terms:
            if q == p:
                return v
        return Scalar(0)

    # -- group operations ----------------------------------------------------

    def _check_same(self, other: "GroupElement") -> None:
        if self.group != other.group:
            raise MixedPresentationsError(
                f"elements of {self.group.to_text()} and {other.group.to_text()}"
            )

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        self._check_same(other)
        return GroupElement(self.group, list(self.terms) + list(other.terms))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, [(p, -v) for p, v in self.terms])

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self + (-other)

    def scale(self, q: Union[int, Fraction]) -> "GroupElement":
        """Multiply every component by the rational ``q``.

        Integer components must stay integers; otherwise the element would
        leave the group and NotDivisibleError is raised.
        """
        q = Fraction(q)
        out = []
        for p, v in self.terms:
            w = v * q
            cls_ = self.group.component_at(p)
            if not cls_.contains(w):
                raise NotDivisibleError(
                    f"component {v} at point {p} is not divisible by {q.denominator}"
                )
            out.append((p, w))
        return GroupElement(self.group, out)

    # -- order ---------------------------------------------------------------

    def _cmp(self, other: "GroupElement") -> int:
        self._check_same(other)
        i = j = 0
        a, b = self.terms, other.terms
        while i < len(a) and j < len(b):
            pa, va = a[i]
            pb, vb = b[j]
            if pa < pb:
                return va.sign()
            if pb < pa:
                return (-vb).sign()
            d = (va - vb).sign()
            if d:
                return d
            i += 1
            j += 1
        if i < len(a):
            return a[i][1].sign()
        if j < len(b):
            return (-b[j][1]).sign()
        return 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.group, self.terms))

    def __lt__(self, other: "GroupElement") -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other: "GroupElement") -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other: "GroupElement") -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other: "GroupElement") -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self._cmp(other) >= 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- text ----------------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "{}"
        inner = ", ".join(f"({p}, {v.to_text()})" for p, v in self.terms)
        return "{" + inner + "}"

    def __repr__(self) -> str:
        return f"GroupElement({self.to_text()})"


@dataclass(frozen=True)
class OrderInvariants:
    """Decidable order-theoretic facts about a presentation.

    ``rank_dense`` follows the convention that a dense order has at least
    two points, so singleton and empty chains report False.  The negative
    cone is dense exactly when the group has no minimal positive element.
    """

    is_trivial: bool
    rank_finite: Optional[int]
    rank_dense: bool
    rank_has_min: bool
    rank_has_max: bool
    negcone_dense: bool
    negcone_has_endpoints: bool
    divisible: bool


def order_invariants(group: GroupPresentation) -> OrderInvariants:
    """Exact order invariants of the rank chain and of the negative cone."""
    chain = group.chain
    if chain.kind is ChainKind.FINITE:
        rank_finite: Optional[int] = chain.size
        rank_dense = False
        rank_has_min = rank_has_max = chain.size >= 1
    elif chain.kind is ChainKind.INTEGERS:
        rank_finite = None
        rank_dense = False
        rank_has_min = rank_has_max = False
    else:
        rank_finite = None
        rank_dense = True
        rank_has_min = rank_has_max = False
    minimal_positive = group.has_minimal_positive
    trivial = group.is_trivial
    return OrderInvariants(
        is_trivial=trivial,
        rank_finite=rank_finite,
        rank_dense=rank_dense,
        rank_has_min=rank_has_min,
        rank_has_max=rank_has_max,
        negcone_dense=not minimal_positive,
        negcone_has_endpoints=(not trivial) and minimal_positive,
        divisible=group.divisible,
    )
