"""Exact extended rationals: Fraction values plus +inf/-inf.

Costs of plays live in Q ∪ {+inf, -inf} with the convention 0 * (±inf) = 0,
which is what makes scale-zero prefix decompositions work even when the tail
cost is infinite.  No floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction, "ExtRational"]

_POS = "+inf"
_NEG = "-inf"


class ExtRational:
    """A Fraction, or one of the two infinities.  Immutable and totally ordered."""

    __slots__ = ("_value",)

    def __init__(self, value: Union[int, str, Fraction, "ExtRational"]):
        if isinstance(value, ExtRational):
            object.__setattr__(self, "_value", value._value)
            return
        if isinstance(value, bool):
            raise TypeError("bool is not a rational")
        if isinstance(value, (int, Fraction)):
            object.__setattr__(self, "_value", Fraction(value))
            return
        if isinstance(value, str):
            s = value.strip()
            if s in (_POS, "inf"):
                object.__setattr__(self, "_value", _POS)
                return
            if s == _NEG:
                object.__setattr__(self, "_value", _NEG)
                return
            object.__setattr__(self, "_value", Fraction(s))
            return
        raise TypeError(f"cannot build ExtRational from {type(value).__name__}")

    def __setattr__(self, name, value):
        raise AttributeError("ExtRational is immutable")

    # -- classification ----------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return isinstance(self._value, Fraction)

    @property
    def finite(self) -> Fraction:
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self._value

    def _sign(self) -> int:
        """Sign as -1/0/+1; infinities count with their sign."""
        if self._value == _POS:
            return 1
        if self._value == _NEG:
            return -1
        v: Fraction = self._value
        return (v > 0) - (v < 0)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other: RationalLike) -> "ExtRational":
        if isinstance(other, ExtRational):
            return other
        if isinstance(other, bool):
            return NotImplemented  # type: ignore[return-value]
        if isinstance(other, (int, Fraction)):
            return ExtRational(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: RationalLike) -> "ExtRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._value, o._value
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            return ExtRational(a + b)
        infs = {x for x in (a, b) if not isinstance(x, Fraction)}
        if infs == {_POS, _NEG}:
            raise ArithmeticError("+inf + -inf is undefined")
        return ExtRational(_POS if _POS in infs else _NEG)

    __radd__ = __add__

    def __neg__(self) -> "ExtRational":
        if self._value == _POS:
            return ExtRational(_NEG)
        if self._value == _NEG:
            return ExtRational(_POS)
        return ExtRational(-self._value)

    def __sub__(self, other: RationalLike) -> "ExtRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: RationalLike) -> "ExtRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: RationalLike) -> "ExtRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        sa, sb = self._sign(), o._sign()
        # 0 * anything = 0, including infinities.
        if sa == 0 or sb == 0:
            return ExtRational(0)
        if not self.is_finite or not o.is_finite:
            return ExtRational(_POS if sa * sb > 0 else _NEG)
        return ExtRational(self._value * o._value)

    __rmul__ = __mul__

    # -- order --------------------------------------------------------------

    def _key(self):
        if self._value == _NEG:
            return (0, Fraction(0))
        if self._value == _POS:
            return (2, Fraction(0))
        return (1, self._value)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._value == o._value

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._key() < o._key()

    def __le__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._key() <= o._key()

    def __gt__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._key() > o._key()

    def __ge__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._key() >= o._key()

    def __hash__(self):
        return hash(self._value)

    # -- formatting -----------------------------------------------------------

    def __str__(self) -> str:
        if isinstance(self._value, Fraction):
            return format_rational(self._value)
        return self._value

    def __repr__(self) -> str:
        return f"ExtRational({str(self)!r})"


POS_INF = ExtRational(_POS)
NEG_INF = ExtRational(_NEG)


def format_rational(q: Fraction) -> str:
    """Render a Fraction as "7" or "7/3" (never a float)."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(raw) -> Fraction:
    """Parse a JSON-level rational: an int, or a "num/den" / "num" string.

    Floats are rejected on purpose; every number in a game document is exact.
    """
    if isinstance(raw, bool):
        raise ValueError("expected a rational, got a bool")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {raw!r}") from exc
    if isinstance(raw, float):
        raise ValueError("floats are not accepted; use \"num/den\" strings")
    raise ValueError(f"not a rational: {raw!r}")
