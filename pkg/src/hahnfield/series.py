"""Finitely supported generalized power series with exact arithmetic.

A :class:`Series` is a finite sum of terms ``c * t^g`` where the exponents
``g`` come from a group presentation and the coefficients from a coefficient
field.  Addition is pointwise, multiplication is the convolution of the
finitely many term pairs, and the order is lexicographic: the sign of a
series is the sign of the coefficient at its smallest exponent, which makes
``t`` (exponent one) a positive infinitesimal and ``t^{-1}`` infinite.

Inverses and n-th roots of non-monomials do not have finite support, so
they are produced as truncations carrying a certified residual-valuation
bound: ``x.inv_trunc(N)`` returns ``y`` with ``v(x*y - 1) > N``, and
``x.root_trunc(n, N)`` returns ``r`` with ``v(r^n - x) > N + (n-1)*v(x)/n``.
When no finitely supported truncation can reach the bound (the expansion
step is infinitesimal relative to it) the operation refuses with
:class:`~hahnfield.errors.TruncationUnreachableError` instead of looping.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import (
    LeadingOfZeroError,
    MixedCarriersError,
    NoExactRootError,
    NonPositiveError,
    NotDivisibleError,
    NotDivisibleExponentError,
    TruncationUnreachableError,
)
from .groups import GroupElement, GroupPresentation
from .scalars import Field, Scalar, nth_root

CoeffLike = Union[Scalar, int, Fraction]


class _Infinity:
    """Valuation of the zero series; larger than every group element."""

    _instance: Optional["_Infinity"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __gt__(self, other) -> bool:
        return not isinstance(other, _Infinity)

    def __ge__(self, other) -> bool:
        return True

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, _Infinity)

    def __eq__(self, other) -> bool:
        return isinstance(other, _Infinity)

    def __hash__(self) -> int:
        return hash("hahnfield-infinity")

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()


class Series:
    """A finitely supported element of the power-series field.

    Terms are stored strictly ascending by exponent with no zero
    coefficients; equality is structural.  Instances are immutable and all
    operations are pure, so values can be shared freely.
    """

    __slots__ = ("field", "group", "terms")

    def __init__(
        self,
        field: Field,
        group: GroupPresentation,
        terms: Iterable[tuple[GroupElement, CoeffLike]] = (),
    ):
        merged: dict[GroupElement, Scalar] = {}
        for g, c in terms:
            if not isinstance(g, GroupElement):
                raise TypeError(f"exponent {g!r} is not a group element")
            if g.group != group:
                raise MixedCarriersError(
                    f"exponent from {g.group.to_text()} in a series over {group.to_text()}"
                )
            if not isinstance(c, Scalar):
                c = Scalar(c)
            if not field.contains(c):
                raise ValueError(f"coefficient {c} lies outside field {field.token}")
            if g in merged:
                c = merged[g] + c
            merged[g] = c
        canon = tuple((g, c) for g, c in sorted(merged.items(), key=lambda t: t[0]) if not c.is_zero())
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "terms", canon)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Series is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field, group: GroupPresentation) -> "Series":
        return cls(field, group, ())

    @classmethod
    def constant(cls, field: Field, group: GroupPresentation, c: CoeffLike) -> "Series":
        return cls(field, group, [(group.zero(), c)])

    @classmethod
    def monomial(
        cls,
        field: Field,
        group: GroupPresentation,
        exponent: GroupElement,
        coeff: CoeffLike = 1,
    ) -> "Series":
        return cls(field, group, [(exponent, coeff)])

    def one(self) -> "Series":
        """The multiplicative unit over the same carriers."""
        return Series.constant(self.field, self.group, 1)

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self) -> Union[GroupElement, _Infinity]:
        """The smallest support exponent; INFINITY for the zero series."""
        return self.terms[0][0] if self.terms else INFINITY

    def leading(self) -> tuple[GroupElement, Scalar]:
        if not self.terms:
            raise LeadingOfZeroError("the zero series has no leading term")
        return self.terms[0]

    def coefficient_at(self, g: GroupElement) -> Scalar:
        for h, c in self.terms:
            if h == g:
                return c
        return Scalar(0)

    def sign(self) -> int:
        return self.terms[0][1].sign() if self.terms else 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            if other.field != self.field or other.group != self.group:
                raise MixedCarriersError(
                    f"series over ({other.field.token}, {other.group.to_text()}) mixed with "
                    f"({self.field.token}, {self.group.to_text()})"
                )
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return Series.constant(self.field, self.group, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "Series":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Series(self.field, self.group, list(self.terms) + list(o.terms))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(self.field, self.group, [(g, -c) for g, c in self.terms])

    def __sub__(self, other) -> "Series":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Series":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "Series":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        acc: dict[GroupElement, Scalar] = {}
        for gx, cx in self.terms:
            for gy, cy in o.terms:
                g = gx + gy
                c = cx * cy
                prev = acc.get(g)
                acc[g] = c if prev is None else prev + c
        return Series(self.field, self.group, acc.items())

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Series":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("negative series powers are not finitely supported; use inv_trunc")
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order ---------------------------------------------------------------

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare series with {type(other).__name__}")
        return (self - o).sign()

    def __eq__(self, other) -> bool:
        if isinstance(other, (Scalar, int, Fraction)):
            other = Series.constant(self.field, self.group, other)
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.field == other.field
            and self.group == other.group
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.field, self.group, self.terms))

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __abs__(self) -> "Series":
        return -self if self.sign() < 0 else self

    # -- truncated inversion and roots ----------------------------------------

    def _check_bound(self, bound: GroupElement) -> None:
        if not isinstance(bound, GroupElement):
            raise TypeError("truncation bound must be a group element")
        if bound.group != self.group:
            raise MixedCarriersError("truncation bound from a different group")

    def _prune_above(self, cutoff: GroupElement) -> "Series":
        kept = [(g, c) for g, c in self.terms if not g > cutoff]
        if len(kept) == len(self.terms):
            return self
        return Series(self.field, self.group, kept)

    @staticmethod
    def _check_reachable(step: GroupElement, target: GroupElement) -> None:
        """Ensure some multiple of ``step > 0`` exceeds ``target``.

        Fails exactly when the target is positive and supported strictly
        before the step's smallest point: multiples of the step then stay
        below the target forever.
        """
        if target.sign() <= 0:
            return
        if step.min_point() > target.min_point():
            raise TruncationUnreachableError(
                f"expansion step {step.to_text()} is infinitesimal relative to "
                f"bound {target.to_text()}; no finite truncation reaches it"
            )

    def inv_trunc(self, bound: GroupElement) -> "Series":
        """A truncated inverse ``y`` with ``v(self * y - 1) > bound``.

        Exact (``self * y == 1``) whenever the geometric expansion
        terminates, in particular for monomials.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero series")
        self._check_bound(bound)
        g0, c0 = self.leading()
        head = Series.monomial(self.field, self.group, -g0, c0.inverse())
        eps = self * head - 1
        if eps.is_zero():
            return head
        self._check_reachable(eps.valuation(), bound)
        neg_eps = -eps
        s = self.one()
        pw = self.one()
        while True:
            pw = (pw * neg_eps)._prune_above(bound)
            if pw.is_zero():
                break
            s = s + pw
        return head * s

    def root_trunc(self, n: int, bound: GroupElement) -> "Series":
        """A truncated positive n-th root ``r`` with
        ``v(r^n - self) > bound + (n-1) * v(self)/n``.

        Requires ``self > 0``, a leading exponent divisible by ``n`` in the
        group, and a leading coefficient with an exact n-th root in the
        coefficient field; exact when the binomial expansion terminates.
        """
        if n <= 0:
            raise ValueError("root order must be positive")
        if self.sign() <= 0:
            raise NonPositiveError("roots are defined for positive series only")
        self._check_bound(bound)
        g0, c0 = self.leading()
        try:
            g_root = g0.scale(Fraction(1, n))
        except NotDivisibleError as exc:
            raise NotDivisibleExponentError(
                f"leading exponent {g0.to_text()} is not divisible by {n}"
            ) from exc
        c_root = nth_root(c0, n, self.field)
        if c_root is None:
            raise NoExactRootError(
                f"leading coefficient {c0} has no exact {n}-th root in {self.field.token}"
            )
        head = Series.monomial(self.field, self.group, g_root, c_root)
        eps = self * Series.monomial(self.field, self.group, -g0, c0.inverse()) - 1
        if eps.is_zero():
            return head
        target = bound - g_root
        self._check_reachable(eps.valuation(), target)
        s = self.one()
        pw = self.one()
        binom = Scalar(1)
        alpha = Fraction(1, n)
        j = 0
        while True:
            j += 1
            binom = binom * (alpha - (j - 1)) / j
            pw = (pw * eps)._prune_above(target)
            if pw.is_zero():
                break
            s = s + pw * binom
        return head * s

    # -- text ----------------------------------------------------------------

    def _exponent_text(self, g: GroupElement) -> str:
        terms = g.terms
        if len(terms) == 1 and terms[0][0] == 0:
            return terms[0][1].to_text()
        return ", ".join(f"({p}, {v.to_text()})" for p, v in terms)

    def to_text(self) -> str:
        """Canonical printed form; reparsing it reproduces the series.

        Terms ascend by exponent.  The zero-exponent term prints as a bare
        scalar, every other term as ``c*t^{g}`` with quadratic coefficients
        parenthesized.  A single value ``v`` inside ``t^{...}`` abbreviates
        the exponent supported at chain point 0.
        """
        if not self.terms:
            return "0"
        rendered: list[str] = []
        for g, c in self.terms:
            if g.is_zero():
                rendered.append(c.to_text())
            elif c.b != 0:
                rendered.append(f"({c.to_text()})*t^{{{self._exponent_text(g)}}}")
            else:
                rendered.append(f"{c.to_text()}*t^{{{self._exponent_text(g)}}}")
        out = []
        for i, piece in enumerate(rendered):
            if i == 0:
                out.append(piece)
            elif piece.startswith("-"):
                out.append(f" - {piece[1:]}")
            else:
                out.append(f" + {piece}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Series({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()
