"""Exact coefficient arithmetic in the rationals and in the quadratic field Q(r2).

A :class:`Scalar` stores an exact value ``a + b*r2`` (``r2`` denoting the
positive square root of 2) as a pair of :class:`fractions.Fraction`.  The
rationals embed as ``b == 0``.  All operations are exact; there is no
floating-point fallback anywhere.

Sign determination never approximates: for ``d = a + b*r2`` with ``a`` and
``b`` of opposite signs, ``sign(d) = sign(a) * sign(a^2 - 2*b^2)``.  The
floor of an irrational scalar is obtained by bracketing r2 between
consecutive continued-fraction convergents until the bracket for the value
contains no integer; the rational case is settled first, so the loop always
terminates.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Optional, Union

from .errors import NonPositiveRadicandError

RationalLike = Union[int, Fraction]
ScalarLike = Union["Scalar", int, Fraction]


class Field(enum.Enum):
    """Coefficient field: the rationals, or the quadratic extension by r2."""

    RAT = "Rat"
    ROOT2 = "Root2"

    @property
    def token(self) -> str:
        return self.value

    def contains(self, x: "Scalar") -> bool:
        return self is Field.ROOT2 or x.b == 0

    @classmethod
    def from_token(cls, token: str) -> "Field":
        for member in cls:
            if member.value == token:
                return member
        raise ValueError(f"unknown field {token!r} (expected Rat or Root2)")


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


class Scalar:
    """An exact element ``a + b*r2`` of Q(r2), with the rationals at ``b == 0``."""

    __slots__ = ("a", "b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Scalar is immutable")

    # -- classification ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x: ScalarLike) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: ScalarLike) -> "Scalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "Scalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self) -> "Scalar":
        return Scalar(-self.a, -self.b)

    def __mul__(self, other: ScalarLike) -> "Scalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("scalar inverse of zero")
        # (a + b*r2)^-1 = (a - b*r2) / (a^2 - 2 b^2); the norm is nonzero
        # because r2 is irrational.
        norm = self.a * self.a - 2 * self.b * self.b
        return Scalar(self.a / norm, -self.b / norm)

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Scalar(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order --------------------------------------------------------------

    def sign(self) -> int:
        if self.b == 0:
            return _sign(self.a)
        if self.a == 0:
            return _sign(self.b)
        sa = _sign(self.a)
        if sa == _sign(self.b):
            return sa
        return sa * _sign(self.a * self.a - 2 * self.b * self.b)

    def _cmp(self, other: ScalarLike) -> int:
        o = self._coerce(other)
        return (self - o).sign()

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        # Rational scalars hash like the plain numbers they equal.
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other: ScalarLike) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: ScalarLike) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: ScalarLike) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: ScalarLike) -> bool:
        return self._cmp(other) >= 0

    def __abs__(self) -> "Scalar":
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- floor --------------------------------------------------------------

    def floor(self) -> int:
        """The unique integer ``z`` with ``z <= self < z + 1``, exactly."""
        if self.b == 0:
            return math.floor(self.a)
        # Irrational case: a + b*r2 with b != 0 is never an integer, so
        # shrinking the bracket eventually excludes every integer boundary.
        prev, cur = Fraction(1), Fraction(3, 2)  # consecutive convergents of r2
        while True:
            lo, hi = (prev, cur) if prev < cur else (cur, prev)
            if self.b > 0:
                xlo, xhi = self.a + self.b * lo, self.a + self.b * hi
            else:
                xlo, xhi = self.a + self.b * hi, self.a + self.b * lo
            flo, fhi = math.floor(xlo), math.floor(xhi)
            if flo == fhi:
                return flo
            prev, cur = cur, 1 + 1 / (1 + cur)

    # -- text ---------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical literal: ``a/b`` when rational, else ``a+b*r2`` / ``a-b*r2``."""
        if self.b == 0:
            return str(self.a)
        if self.b > 0:
            return f"{self.a}+{self.b}*r2"
        return f"{self.a}-{-self.b}*r2"

    def __repr__(self) -> str:
        return f"Scalar({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()


SQRT2 = Scalar(0, 1)


# -- exact integer and rational roots ----------------------------------------


def _int_nth_root(k: int, n: int) -> int:
    """Floor of the real n-th root of ``k >= 0`` by integer Newton iteration."""
    if k < 2:
        return k
    x = 1 << (k.bit_length() // n + 1)
    while True:
        y = ((n - 1) * x + k // x ** (n - 1)) // n
        if y >= x:
            return x
        x = y


def _exact_int_root(k: int, n: int) -> Optional[int]:
    r = _int_nth_root(k, n)
    return r if r**n == k else None


def _exact_rat_root(q: Fraction, n: int) -> Optional[Fraction]:
    """The exact rational n-th root of ``q``, or None.  Odd ``n`` allows q < 0."""
    if q < 0:
        if n % 2 == 0:
            return None
        r = _exact_rat_root(-q, n)
        return None if r is None else -r
    num = _exact_int_root(q.numerator, n)
    if num is None:
        return None
    den = _exact_int_root(q.denominator, n)
    if den is None:
        return None
    return Fraction(num, den)


_TRIAL_LIMIT = 1_000_000
_DIVISOR_CAP = 20_000


def _divisors(k: int) -> Optional[list[int]]:
    """All positive divisors of ``k > 0``, or None when enumeration is too big.

    Trial division up to a fixed limit; any remaining cofactor is treated as
    prime.  A composite cofactor with two huge prime factors would make the
    list incomplete, which only narrows the candidate search below.
    """
    factors: dict[int, int] = {}
    p = 2
    while p * p <= k and p <= _TRIAL_LIMIT:
        while k % p == 0:
            factors[p] = factors.get(p, 0) + 1
            k //= p
        p += 1 if p == 2 else 2
    if k > 1:
        factors[k] = factors.get(k, 0) + 1
    divs = [1]
    for prime, mult in factors.items():
        divs = [d * prime**e for d in divs for e in range(mult + 1)]
        if len(divs) > _DIVISOR_CAP:
            return None
    return divs


def _rational_root_candidates(coeffs: list[Fraction]) -> list[Fraction]:
    """Candidate rational roots of the polynomial with the given coefficients.

    ``coeffs[i]`` multiplies ``s**i``.  Uses the rational root theorem after
    clearing denominators; always includes 0.
    """
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    # strip factors of s so the constant term is nonzero
    while ints and ints[0] == 0:
        ints.pop(0)
    if not ints:
        return [Fraction(0)]
    ps = _divisors(abs(ints[0]))
    qs = _divisors(abs(ints[-1]))
    if ps is None or qs is None:
        return [Fraction(0)]
    seen = {Fraction(0)}
    for p in ps:
        for q in qs:
            seen.add(Fraction(p, q))
            seen.add(Fraction(-p, q))
    return sorted(seen)


def _power_sum_poly(n: int, t: Fraction) -> list[Fraction]:
    """Coefficients (in s) of p_n where p_0 = 2, p_1 = s, p_k = s*p_{k-1} - t*p_{k-2}.

    ``p_n(s)`` equals ``y^n + conj(y)^n`` for any ``y`` with ``y + conj(y) = s``
    and ``y * conj(y) = t``.
    """
    prev = [Fraction(2)]
    cur = [Fraction(0), Fraction(1)]
    if n == 0:
        return prev
    for _ in range(n - 1):
        shifted = [Fraction(0)] + cur
        nxt = [c - t * (prev[i] if i < len(prev) else 0) for i, c in enumerate(shifted)]
        prev, cur = cur, nxt
    return cur


def _poly_eval(coeffs: list[Fraction], s: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * s + c
    return acc


def nth_root(x: Scalar, n: int, field: Field) -> Optional[Scalar]:
    """An exact positive n-th root of ``x > 0`` inside ``field``, or None.

    For the rationals this reduces to exact integer roots of numerator and
    denominator.  In Q(r2) the root ``y = c + d*r2`` is recovered through its
    conjugate: ``t = y*conj(y)`` must be a rational n-th root of the norm of
    ``x``, and ``s = y + conj(y)`` must be a rational zero of the power-sum
    polynomial ``p_n(s) - (x + conj(x))``; candidates for ``s`` come from the
    rational root theorem.
    """
    if n <= 0:
        raise ValueError("root order must be positive")
    if not field.contains(x):
        raise ValueError("scalar does not belong to the requested field")
    if x.sign() <= 0:
        raise NonPositiveRadicandError("n-th roots are defined for positive scalars")
    if n == 1:
        return x
    if x.b == 0:
        r = _exact_rat_root(x.a, n)
        if r is not None:
            return Scalar(r)
        if field is Field.RAT:
            return None
    if field is Field.RAT:
        return None

    norm = x.a * x.a - 2 * x.b * x.b
    root_abs = _exact_rat_root(abs(norm), n)
    if root_abs is None:
        return None
    if n % 2 == 1:
        t_candidates = [root_abs if norm > 0 else -root_abs]
    else:
        if norm < 0:
            return None
        t_candidates = [root_abs, -root_abs]

    trace = 2 * x.a
    for t in t_candidates:
        poly = _power_sum_poly(n, t)
        poly[0] -= trace
        for s in _rational_root_candidates(poly):
            if _poly_eval(poly, s) != 0:
                continue
            c = s / 2
            d_sq = (c * c - t) / 2
            if d_sq < 0:
                continue
            d = _exact_rat_root(d_sq, 2)
            if d is None:
                continue
            for dd in {d, -d}:
                y = Scalar(c, dd)
                if y.sign() > 0 and y**n == x:
                    return y
    return None
