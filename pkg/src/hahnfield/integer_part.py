"""The canonical integer part of the power-series field, with an exact floor.

The subring consists of the series whose nonconstant terms all have
negative exponents and whose constant term is a rational integer.  It is
discretely ordered (no member lies strictly between 0 and 1) and every
series has a floor inside it: split off the infinite part, take the exact
scalar floor of the constant, and subtract one more when the constant is an
exact integer but the infinitesimal tail is negative.  That last branch is
driven by an exact sign test, never by approximation.

Constant terms stay rational integers even over the quadratic coefficient
field; admitting ``a + b*r2`` constants would put members arbitrarily close
to 0 and destroy discreteness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Union

from .errors import IPMembershipError
from .groups import GroupPresentation
from .sampling import random_ip_carrier, random_series
from .scalars import Field, Scalar
from .series import Series
from .valuation import ValuationClass, classify, decompose_additive


class IPElement:
    """A member of the integer part, wrapping its carrier series.

    Construction validates the membership invariants and raises
    IPMembershipError otherwise.  Ring operations stay inside the subring,
    so they return IPElement again.
    """

    __slots__ = ("carrier",)

    def __init__(self, carrier: Series):
        for g, c in carrier.terms:
            s = g.sign()
            if s > 0:
                raise IPMembershipError(
                    f"term with positive exponent {g.to_text()} is not integer-part material"
                )
            if s == 0 and not c.is_integer():
                raise IPMembershipError(f"constant term {c} is not a rational integer")
        object.__setattr__(self, "carrier", carrier)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("IPElement is immutable")

    # -- ring structure -------------------------------------------------------

    @staticmethod
    def _carrier_of(other) -> Union[Series, int]:
        if isinstance(other, IPElement):
            return other.carrier
        if isinstance(other, int):
            return other
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "IPElement":
        o = self._carrier_of(other)
        if o is NotImplemented:
            return NotImplemented
        return IPElement(self.carrier + o)

    __radd__ = __add__

    def __sub__(self, other) -> "IPElement":
        o = self._carrier_of(other)
        if o is NotImplemented:
            return NotImplemented
        return IPElement(self.carrier - o)

    def __mul__(self, other) -> "IPElement":
        o = self._carrier_of(other)
        if o is NotImplemented:
            return NotImplemented
        return IPElement(self.carrier * o)

    __rmul__ = __mul__

    def __neg__(self) -> "IPElement":
        return IPElement(-self.carrier)

    # -- order and equality ----------------------------------------------------

    def _other_series(self, other):
        if isinstance(other, IPElement):
            return other.carrier
        return other

    def __eq__(self, other) -> bool:
        return self.carrier == self._other_series(other)

    def __hash__(self) -> int:
        return hash(("IPElement", self.carrier))

    def __lt__(self, other) -> bool:
        return self.carrier < self._other_series(other)

    def __le__(self, other) -> bool:
        return self.carrier <= self._other_series(other)

    def __gt__(self, other) -> bool:
        return self.carrier > self._other_series(other)

    def __ge__(self, other) -> bool:
        return self.carrier >= self._other_series(other)

    def constant(self) -> int:
        """The integer constant term."""
        c = self.carrier.coefficient_at(self.carrier.group.zero())
        return c.a.numerator

    def to_text(self) -> str:
        return self.carrier.to_text()

    def __repr__(self) -> str:
        return f"IPElement({self.to_text()!r})"


def is_ip_member(x: Series) -> bool:
    """True when ``x`` satisfies the integer-part invariants."""
    try:
        IPElement(x)
    except IPMembershipError:
        return False
    return True


def floor(x: Series) -> IPElement:
    """The unique integer-part element ``z`` with ``z <= x < z + 1``."""
    dec = decompose_additive(x)
    c = dec.constant_part
    z_const = c.floor()
    if c.is_integer() and dec.infinitesimal_part.sign() < 0:
        z_const -= 1
    return IPElement(dec.infinite_part + Series.constant(x.field, x.group, z_const))


@dataclass(frozen=True)
class FamilyResult:
    """Outcome of one invariant family in the randomized suite."""

    name: str
    checked: int
    passed: bool
    counterexample: Optional[str] = None


@dataclass(frozen=True)
class IPCheckReport:
    field: Field
    group_text: str
    sample_count: int
    seed: int
    families: tuple[FamilyResult, ...]

    @property
    def ok(self) -> bool:
        return all(f.passed for f in self.families)

    def lines(self) -> list[str]:
        out = [
            f"integer-part check over ({self.field.token}, {self.group_text}) "
            f"with {self.sample_count} samples, seed {self.seed}"
        ]
        for f in self.families:
            status = "PASS" if f.passed else "FAIL"
            line = f"  {f.name}: {status} ({f.checked} checked)"
            if f.counterexample:
                line += f"  counterexample: {f.counterexample}"
            out.append(line)
        return out


def ip_closure_check(
    field: Field,
    group: GroupPresentation,
    sample_count: int = 1000,
    seed: int = 42,
) -> IPCheckReport:
    """Randomized validation of the integer-part invariants.

    Four families, deterministic in the seed: ring closure under +, -, *;
    the floor contract on arbitrary series; finite members being exactly
    their integer constants; and discreteness (no nonzero member of
    absolute value below 1).  The first counterexample of a family is
    reported verbatim.
    """
    if sample_count <= 0:
        raise ValueError("sample_count must be positive")
    rng = random.Random(seed)
    families = []

    checked, failure = 0, None
    for _ in range(sample_count):
        z1 = IPElement(random_ip_carrier(rng, field, group))
        z2 = IPElement(random_ip_carrier(rng, field, group))
        checked += 1
        try:
            z1 + z2, z1 - z2, z1 * z2
        except IPMembershipError:
            failure = f"{z1.to_text()} , {z2.to_text()}"
            break
    families.append(FamilyResult("closure under + - *", checked, failure is None, failure))

    checked, failure = 0, None
    for _ in range(sample_count):
        x = random_series(rng, field, group)
        z = floor(x)
        checked += 1
        if not (z.carrier <= x < z.carrier + 1):
            failure = f"x = {x.to_text()}, floor = {z.to_text()}"
            break
    families.append(FamilyResult("floor contract z <= x < z+1", checked, failure is None, failure))

    checked, failure = 0, None
    for _ in range(sample_count):
        z = IPElement(random_ip_carrier(rng, field, group))
        checked += 1
        if classify(z.carrier) is ValuationClass.INFINITE:
            continue
        if z.carrier != Series.constant(field, group, z.constant()):
            failure = z.to_text()
            break
    families.append(FamilyResult("finite members are integers", checked, failure is None, failure))

    checked, failure = 0, None
    zero = Series.zero(field, group)
    one = Series.constant(field, group, 1)
    for _ in range(sample_count):
        z = IPElement(random_ip_carrier(rng, field, group))
        checked += 1
        if z.carrier == zero:
            continue
        if abs(z.carrier) < one:
            failure = z.to_text()
            break
    families.append(FamilyResult("no member strictly inside (0, 1)", checked, failure is None, failure))

    return IPCheckReport(
        field=field,
        group_text=group.to_text(),
        sample_count=sample_count,
        seed=seed,
        families=tuple(families),
    )
