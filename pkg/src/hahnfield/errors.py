"""Exception hierarchy shared by all hahnfield modules.

Domain errors (bad operands, unsatisfiable preconditions) derive from
:class:`HahnError`.  Errors raised while reading textual input derive from
:class:`ParseError` and always carry the character offset of the offending
token, so front ends can point at the problem.
"""

from __future__ import annotations


class HahnError(Exception):
    """Base class for all library-level errors."""


class MixedPresentationsError(HahnError):
    """Group elements from two different group presentations were combined."""


class ComponentOutOfClassError(HahnError):
    """A component value does not belong to the Archimedean class of its slot."""


class NotDivisibleError(HahnError):
    """Rational scaling would take an integer component outside its group."""


class BadOverrideError(HahnError):
    """A component override is not allowed for the given chain."""


class MixedCarriersError(HahnError):
    """Series over different coefficient fields or groups were combined."""


class LeadingOfZeroError(HahnError):
    """The zero series has no leading term."""


class NonPositiveRadicandError(HahnError):
    """n-th roots of scalars are defined for positive arguments only."""


class NonPositiveError(HahnError):
    """The operation requires a strictly positive series."""


class NoExactRootError(HahnError):
    """The leading coefficient has no exact n-th root in the coefficient field."""


class NotDivisibleExponentError(HahnError):
    """The leading exponent is not divisible by n in the value group."""


class TruncationUnreachableError(HahnError):
    """No finitely supported result can satisfy the requested valuation bound.

    Happens when the expansion step valuation is infinitesimal relative to
    the bound: no finite number of steps ever pushes the residual past it.
    """


class NotFiniteError(HahnError):
    """The residue map is only defined on finite elements (the valuation ring)."""


class IPMembershipError(HahnError):
    """The series violates the integer-part invariants."""


class ResidueMismatchError(HahnError):
    """The target Archimedean class does not match the coefficient field."""


class ParseError(HahnError):
    """Malformed textual input.  ``position`` is a 0-based character offset."""

    def __init__(self, position: int, message: str):
        super().__init__(f"at position {position}: {message}")
        self.position = position
        self.message = message


class UnknownIdentError(ParseError):
    """An identifier in an expression is not bound in the session."""


class ExponentOutsideGroupError(ParseError):
    """A ``t^{...}`` exponent does not describe an element of the active group."""
