"""Deterministic random generators for property checks.

Everything takes an explicit :class:`random.Random` so that suites are
reproducible from a seed.  Magnitudes are kept small: denominators and
numerators stay below 13 so that comparisons against ``1/n`` and ``n`` for
``n <= 100`` can separate the valuation classes without ambiguity.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .groups import ArchClass, ChainKind, GroupElement, GroupPresentation, Point
from .scalars import Field, Scalar
from .series import Series


def random_rational(rng: random.Random, max_num: int = 12, max_den: int = 12) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_nonzero_rational(rng: random.Random, max_num: int = 12, max_den: int = 12) -> Fraction:
    while True:
        q = random_rational(rng, max_num, max_den)
        if q:
            return q


def random_scalar(rng: random.Random, field: Field) -> Scalar:
    if field is Field.ROOT2 and rng.random() < 0.5:
        return Scalar(random_rational(rng), random_rational(rng))
    return Scalar(random_rational(rng))


def random_nonzero_scalar(rng: random.Random, field: Field) -> Scalar:
    while True:
        s = random_scalar(rng, field)
        if not s.is_zero():
            return s


def random_chain_point(rng: random.Random, group: GroupPresentation) -> Point:
    chain = group.chain
    if chain.kind is ChainKind.FINITE:
        if chain.size == 0:
            raise ValueError("the trivial group has no chain points")
        return rng.randint(0, chain.size - 1)
    if chain.kind is ChainKind.INTEGERS:
        return rng.randint(-6, 6)
    return Fraction(rng.randint(-12, 12), rng.randint(1, 6))


def _random_component_value(rng: random.Random, cls: ArchClass) -> Scalar:
    if cls is ArchClass.INT:
        v = rng.randint(-12, 12)
        return Scalar(v if v else 1)
    if cls is ArchClass.RAT:
        return Scalar(random_nonzero_rational(rng))
    if rng.random() < 0.5:
        return Scalar(random_rational(rng), random_nonzero_rational(rng))
    return Scalar(random_nonzero_rational(rng))


def random_group_element(
    rng: random.Random,
    group: GroupPresentation,
    max_terms: int = 3,
    nonzero: bool = False,
) -> GroupElement:
    if group.is_trivial:
        if nonzero:
            raise ValueError("the trivial group has no nonzero elements")
        return group.zero()
    while True:
        n = rng.randint(1 if nonzero else 0, max_terms)
        terms = []
        for _ in range(n):
            p = random_chain_point(rng, group)
            terms.append((p, _random_component_value(rng, group.component_at(p))))
        g = GroupElement(group, terms)
        if g or not nonzero:
            return g


def random_positive_element(rng: random.Random, group: GroupPresentation, max_terms: int = 3) -> GroupElement:
    g = random_group_element(rng, group, max_terms, nonzero=True)
    return -g if g.sign() < 0 else g


def random_series(
    rng: random.Random,
    field: Field,
    group: GroupPresentation,
    max_terms: int = 4,
    min_terms: int = 0,
) -> Series:
    if group.is_trivial:
        return Series.constant(field, group, random_scalar(rng, field))
    n = rng.randint(min_terms, max_terms)
    terms = []
    for _ in range(n):
        terms.append((random_group_element(rng, group), random_nonzero_scalar(rng, field)))
    return Series(field, group, terms)


def random_nonzero_series(
    rng: random.Random,
    field: Field,
    group: GroupPresentation,
    max_terms: int = 4,
) -> Series:
    while True:
        x = random_series(rng, field, group, max_terms, min_terms=1)
        if x:
            return x


def random_ip_carrier(
    rng: random.Random,
    field: Field,
    group: GroupPresentation,
    max_terms: int = 3,
) -> Series:
    """A random member of the canonical integer part, as a plain series.

    Finitely many terms with strictly negative exponents plus an integer
    constant; the integer-part module wraps these in IPElement.
    """
    const = rng.randint(-12, 12)
    terms: list = [(group.zero(), Scalar(const))]
    if not group.is_trivial:
        for _ in range(rng.randint(0, max_terms)):
            g = random_group_element(rng, group, nonzero=True)
            if g.sign() > 0:
                g = -g
            terms.append((g, random_nonzero_scalar(rng, field)))
    return Series(field, group, terms)
