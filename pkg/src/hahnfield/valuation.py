"""Valuation-theoretic classification and the canonical decompositions.

Every nonzero series falls into exactly one class by the sign of its
valuation: infinitesimal (positive), finite unit (zero) or infinite
(negative).  The finite elements form the valuation ring; its maximal ideal
is the infinitesimals, and the residue map sends a finite series to its
constant coefficient.

The two decompositions split a series along the same line.  Additively,
terms with negative exponents form the infinite part, the constant
coefficient represents the residue field, and positive exponents the
infinitesimal part; the split is exact and unique because the three
supports cannot overlap.  Multiplicatively, a positive series factors
exactly as ``coeff * t^exponent * one_unit`` with the one-unit
infinitesimally close to 1.  Both decompositions fix the canonical
representatives available inside the power-series field (monomials and
constants); any other choice of complements is order-isomorphic to these.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NonPositiveError, NotFiniteError
from .scalars import Scalar
from .series import Series


class ValuationClass(enum.Enum):
    ZERO = "Zero"
    INFINITESIMAL = "Infinitesimal"
    FINITE_UNIT = "FiniteUnit"
    INFINITE = "Infinite"

    @property
    def token(self) -> str:
        return self.value


def classify(x: Series) -> ValuationClass:
    """Place ``x`` in the valuation partition by the sign of its valuation."""
    if x.is_zero():
        return ValuationClass.ZERO
    v = x.valuation()
    s = v.sign()
    if s > 0:
        return ValuationClass.INFINITESIMAL
    if s == 0:
        return ValuationClass.FINITE_UNIT
    return ValuationClass.INFINITE


def is_finite(x: Series) -> bool:
    """Membership in the valuation ring: zero or valuation >= 0."""
    return classify(x) is not ValuationClass.INFINITE


def residue(x: Series) -> Scalar:
    """The image of a finite series in the residue field: its constant coefficient."""
    if classify(x) is ValuationClass.INFINITE:
        raise NotFiniteError("residue is defined on the valuation ring only")
    return x.coefficient_at(x.group.zero())


@dataclass(frozen=True)
class AdditiveDecomposition:
    """Exact split of a series into infinite + constant + infinitesimal parts."""

    infinite_part: Series
    constant_part: Scalar
    infinitesimal_part: Series

    def recompose(self) -> Series:
        x = self.infinite_part
        return x + Series.constant(x.field, x.group, self.constant_part) + self.infinitesimal_part


@dataclass(frozen=True)
class MultiplicativeDecomposition:
    """Exact factorization ``unit_coeff * t^exponent * one_unit`` of a positive series."""

    exponent: "object"  # GroupElement; kept untyped to avoid an import cycle in docs
    unit_coeff: Scalar
    one_unit: Series

    def recompose(self) -> Series:
        u = self.one_unit
        return Series.monomial(u.field, u.group, self.exponent, self.unit_coeff) * u


def decompose_additive(x: Series) -> AdditiveDecomposition:
    """Split terms by exponent sign.  Recomposition is exactly ``x``."""
    neg, pos = [], []
    const = Scalar(0)
    for g, c in x.terms:
        s = g.sign()
        if s < 0:
            neg.append((g, c))
        elif s == 0:
            const = c
        else:
            pos.append((g, c))
    return AdditiveDecomposition(
        infinite_part=Series(x.field, x.group, neg),
        constant_part=const,
        infinitesimal_part=Series(x.field, x.group, pos),
    )


def decompose_multiplicative(x: Series) -> MultiplicativeDecomposition:
    """Factor a positive series as ``c * t^v(x) * (1 + infinitesimal)``.

    Division by the leading monomial is exact for finitely supported
    series, so no truncation bound is ever needed here.
    """
    if x.sign() <= 0:
        raise NonPositiveError("multiplicative decomposition needs a positive series")
    g0, c0 = x.leading()
    one_unit = x * Series.monomial(x.field, x.group, -g0, c0.inverse())
    return MultiplicativeDecomposition(exponent=g0, unit_coeff=c0, one_unit=one_unit)
