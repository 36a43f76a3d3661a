"""Monoid-with-zero alphabets and their canonical elements.

Every alphabet contains an absorbing element ``0`` and an identity ``1``.
Beyond those two shared elements, three concrete monoids are supported:

* the trivial monoid ``{0, 1}``,
* the free cyclic monoid ``{0, 1, z, z^2, ...}`` with an adjoined zero,
* the exact rationals of modulus at least one, together with ``0``.

Elements are immutable, interned and totally ordered, so they can serve as
dictionary keys and as letters of words in the harmonic algebra.  The
rational instance is restricted to exact rationals (rather than arbitrary
complex numbers of modulus >= 1) so that element equality, and hence word
normalization, stays decidable.

Element literals: ``0``, ``1``, ``z``, ``z^3``, ``5/2``, ``-3``.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = [
    "MonoidElement",
    "MonoidMismatchError",
    "ZERO",
    "UNIT",
    "cyclic",
    "rational",
    "parse_element",
    "format_element",
]


class MonoidMismatchError(ValueError):
    """Raised when elements of different concrete monoids are combined."""


_KIND_ZERO = "zero"
_KIND_UNIT = "unit"
_KIND_CYCLIC = "cyclic"
_KIND_RATIONAL = "rational"

_RANK = {_KIND_ZERO: 0, _KIND_UNIT: 1, _KIND_CYCLIC: 2, _KIND_RATIONAL: 3}


class MonoidElement:
    """A canonical element of a monoid with zero.

    Instances are immutable and should be obtained through :data:`ZERO`,
    :data:`UNIT`, :func:`cyclic` or :func:`rational`, which intern them.
    """

    __slots__ = ("kind", "value", "_hash")

    def __init__(self, kind: str, value):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "_hash", hash((kind, value)))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("MonoidElement is immutable")

    @property
    def is_zero(self) -> bool:
        return self.kind == _KIND_ZERO

    @property
    def is_unit(self) -> bool:
        return self.kind == _KIND_UNIT

    def sort_key(self) -> tuple:
        return (_RANK[self.kind], self.value)

    def __mul__(self, other: "MonoidElement") -> "MonoidElement":
        if not isinstance(other, MonoidElement):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        if self.is_unit:
            return other
        if other.is_unit:
            return self
        if self.kind != other.kind:
            raise MonoidMismatchError(
                f"cannot multiply {self} ({self.kind}) with {other} ({other.kind})"
            )
        if self.kind == _KIND_CYCLIC:
            return cyclic(self.value + other.value)
        return rational(self.value * other.value)

    def __pow__(self, n: int) -> "MonoidElement":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        if n == 0:
            return UNIT
        if self.is_zero or self.is_unit:
            return self
        if self.kind == _KIND_CYCLIC:
            return cyclic(self.value * n)
        return rational(self.value**n)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, MonoidElement):
            return NotImplemented
        return self.kind == other.kind and self.value == other.value

    def __lt__(self, other: "MonoidElement") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "MonoidElement") -> bool:
        return self.sort_key() <= other.sort_key()

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return format_element(self)


ZERO = MonoidElement(_KIND_ZERO, 0)
UNIT = MonoidElement(_KIND_UNIT, 0)

_cyclic_cache: dict[int, MonoidElement] = {}
_rational_cache: dict[Fraction, MonoidElement] = {}


def cyclic(exponent: int) -> MonoidElement:
    """The element ``z^exponent`` of the free cyclic monoid (``z^0`` is ``1``)."""
    if not isinstance(exponent, int) or exponent < 0:
        raise ValueError("cyclic exponent must be a non-negative integer")
    if exponent == 0:
        return UNIT
    elem = _cyclic_cache.get(exponent)
    if elem is None:
        elem = _cyclic_cache.setdefault(exponent, MonoidElement(_KIND_CYCLIC, exponent))
    return elem


def rational(value) -> MonoidElement:
    """An exact rational element of modulus >= 1 (``1`` canonicalizes to the unit)."""
    q = Fraction(value)
    if q == 0:
        raise ValueError("0 is represented by the dedicated zero element")
    if q == 1:
        return UNIT
    if abs(q) < 1:
        raise ValueError(f"rational element must have modulus >= 1, got {q}")
    elem = _rational_cache.get(q)
    if elem is None:
        elem = _rational_cache.setdefault(q, MonoidElement(_KIND_RATIONAL, q))
    return elem


_CYCLIC_RE = re.compile(r"^z(?:\^(\d+))?$")
_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_element(text: str) -> MonoidElement:
    """Parse an element literal (``0``, ``1``, ``z``, ``z^4``, ``-5/2``)."""
    text = text.strip()
    if text == "0":
        return ZERO
    if text == "1":
        return UNIT
    m = _CYCLIC_RE.match(text)
    if m:
        return cyclic(int(m.group(1)) if m.group(1) else 1)
    if _RATIONAL_RE.match(text):
        return rational(Fraction(text))
    raise ValueError(f"not an element literal: {text!r}")


def format_element(elem: MonoidElement) -> str:
    """Canonical text form; ``parse_element`` inverts it."""
    if elem.is_zero:
        return "0"
    if elem.is_unit:
        return "1"
    if elem.kind == _KIND_CYCLIC:
        return "z" if elem.value == 1 else f"z^{elem.value}"
    return str(elem.value)
