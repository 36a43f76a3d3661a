"""Commutative calculus of the sine-coefficient generators.

``w_value(z, n)`` is the harmonic-algebra element ``(2n+1)! s[z^n,2]...s[z,2]``
(the x^{2n+1} coefficient of the formal sine, cleared of its factorial).  The
subalgebra these elements generate is modelled abstractly by :class:`WPoly`,
a commutative polynomial ring with one generator ``W_n`` per index ``n >= 1``
and ``W_0 = 1``.  ``eval_w`` is the ring homomorphism sending ``W_n`` to
``w_value(z, n)`` and monomial products to harmonic products.

The defect of the formal addition formula and the coefficients of the formal
Pythagorean combination are computed here purely in ``WPoly`` arithmetic;
membership in the ideal generated by ``g_gen(m, n) = W_{m+n} - W_m W_n`` is
decided by :func:`reduce_ap`, the substitution ``W_n -> W_1^n`` whose kernel
is exactly that ideal.  Deciding membership is supported only for elements
presented as ``WPoly`` (the generated subring); general ideal membership in
the full harmonic algebra is out of scope.

``verify_addition`` / ``verify_pythagoras`` cross-check the abstract
coefficients against series computed directly from the trig module: two
independent routes that must agree exactly.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import comb, factorial
from typing import Iterator

from .halg import HPoly, harmonic, s_chain
from .monoid import MonoidElement
from .reporting import CheckResult
from .series import Series1, Series2
from .trig import cosine, sine

__all__ = [
    "DEFAULT_MAX_INDEX",
    "WIndexError",
    "NoWitnessError",
    "WPoly",
    "set_max_index",
    "g_gen",
    "w_value",
    "eval_w",
    "reduce_ap",
    "format_reduced",
    "addition_defect_coeff",
    "pythagoras_coeff",
    "ap_witness_addition",
    "addition_series2",
    "pythagoras_series",
    "verify_addition",
    "verify_pythagoras",
]

DEFAULT_MAX_INDEX = 8
_max_index = DEFAULT_MAX_INDEX

_F0 = Fraction(0)
_F1 = Fraction(1)


class WIndexError(ValueError):
    """A generator index above the configured cap (raised, never truncated)."""


class NoWitnessError(ValueError):
    """No single-generator witness exists (even total degree)."""


def set_max_index(n: int) -> None:
    """Raise or lower the generator-index cap (default 8)."""
    global _max_index
    if n < 1:
        raise ValueError("max index must be positive")
    _max_index = n


def _check_index(n: int) -> None:
    if n > _max_index:
        raise WIndexError(f"generator index {n} exceeds the configured cap {_max_index}")


class WPoly:
    """Polynomial in the commuting generators ``W_1, W_2, ...`` over the rationals.

    Terms map sorted index multisets (tuples) to coefficients; the empty
    multiset is the constant term.  The weight of a monomial is twice the sum
    of its indices, matching the word weight of its harmonic-algebra image.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[tuple[int, ...], Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                key = tuple(sorted(key))
                for n in key:
                    if not isinstance(n, int) or n < 1:
                        raise ValueError("generator indices must be positive integers")
                    _check_index(n)
                c = Fraction(c)
                if not c:
                    continue
                acc = data.get(key, _F0) + c
                if acc:
                    data[key] = acc
                elif key in data:
                    del data[key]
        self.terms = data

    @classmethod
    def _raw(cls, terms: dict[tuple[int, ...], Fraction]) -> "WPoly":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls) -> "WPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "WPoly":
        return cls._raw({(): _F1})

    @classmethod
    def rational(cls, c) -> "WPoly":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def gen(cls, n: int) -> "WPoly":
        """The generator ``W_n`` (``W_0`` is the constant 1)."""
        if n < 0:
            raise ValueError("generator index must be non-negative")
        if n == 0:
            return cls.one()
        _check_index(n)
        return cls._raw({(n,): _F1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "WPoly") -> "WPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc = out.get(key, _F0) + c
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
        return WPoly._raw(out)

    def __sub__(self, other: "WPoly") -> "WPoly":
        return self + (-other)

    def __neg__(self) -> "WPoly":
        return WPoly._raw({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return WPoly.zero()
            return WPoly._raw({k: v * c for k, v in self.terms.items()})
        if not isinstance(other, WPoly):
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                key = tuple(sorted(ka + kb))
                for n in key:
                    _check_index(n)
                acc = out.get(key, _F0) + ca * cb
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return WPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "WPoly":
        return self * (_F1 / Fraction(scalar))

    def __eq__(self, other) -> bool:
        if isinstance(other, WPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == WPoly.rational(other).terms
        return NotImplemented

    __hash__ = None

    def weights(self) -> set[int]:
        """Weights (twice the index sums) of the monomials present."""
        return {2 * sum(k) for k in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"

        def monomial_text(key: tuple[int, ...]) -> str:
            if not key:
                return ""
            parts = []
            for n in sorted(set(key), reverse=True):
                e = key.count(n)
                parts.append(f"W{n}" if e == 1 else f"W{n}^{e}")
            return "*".join(parts)

        chunks = []
        for key in sorted(self.terms, key=lambda k: (2 * sum(k), k), reverse=True):
            c = self.terms[key]
            mono = monomial_text(key)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"WPoly({self})"


def g_gen(m: int, n: int) -> WPoly:
    """The relation generator ``W_{m+n} - W_m W_n`` (zero when m or n is 0)."""
    if m < 0 or n < 0:
        raise ValueError("indices must be non-negative")
    _check_index(max(m + n, 1))
    return WPoly.gen(m + n) - WPoly.gen(m) * WPoly.gen(n)


@functools.lru_cache(maxsize=None)
def w_value(z: MonoidElement, n: int) -> HPoly:
    """The element ``(2n+1)! s[z^n,2] s[z^{n-1},2] ... s[z,2]``."""
    if n < 0:
        raise ValueError("index must be non-negative")
    return HPoly.from_word(s_chain(z, 2, n)) * factorial(2 * n + 1)


@functools.lru_cache(maxsize=None)
def _eval_monomial(key: tuple[int, ...], z: MonoidElement) -> HPoly:
    out = HPoly.one()
    for n in key:
        out = harmonic(out, w_value(z, n))
    return out


def eval_w(p: WPoly, z: MonoidElement) -> HPoly:
    """Ring homomorphism into the harmonic algebra: ``W_n -> w_value(z, n)``."""
    out = HPoly.zero()
    for key, c in p.terms.items():
        out = out + _eval_monomial(key, z) * c
    return out


def reduce_ap(p: WPoly) -> dict[int, Fraction]:
    """Substitute ``W_n -> W_1^n``; the result is a univariate polynomial in ``W_1``.

    The kernel of this substitution is exactly the ideal generated by all
    ``g_gen(m, n)``, so ``p`` lies in that ideal iff the result is empty, and
    then ``eval_w(p, z)`` lies in the corresponding harmonic-algebra ideal.
    """
    out: dict[int, Fraction] = {}
    for key, c in p.terms.items():
        deg = sum(key)
        acc = out.get(deg, _F0) + c
        if acc:
            out[deg] = acc
        elif deg in out:
            del out[deg]
    return out


def format_reduced(reduced: dict[int, Fraction]) -> str:
    """Text form of a ``reduce_ap`` result, e.g. ``2*W1^2 + 1``."""
    if not reduced:
        return "0"
    chunks = []
    for deg in sorted(reduced, reverse=True):
        c = reduced[deg]
        mono = "" if deg == 0 else ("W1" if deg == 1 else f"W1^{deg}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(chunks)


def _sine_wcoeff(n: int) -> WPoly:
    """W-form coefficient of the formal sine at degree ``n``."""
    if n % 2 == 0 or n < 0:
        return WPoly.zero()
    return WPoly.gen((n - 1) // 2) / factorial(n)


def _cosine_wcoeff(n: int) -> WPoly:
    """W-form coefficient of the formal cosine at degree ``n``."""
    if n % 2 == 1 or n < 0:
        return WPoly.zero()
    return WPoly.gen(n // 2) / factorial(n)


def addition_defect_coeff(i: int, j: int) -> WPoly:
    """Coefficient of ``x^i y^j`` in ``S(x+y) - S(x)*C(y) - C(x)*S(y)``.

    Computed entirely in WPoly arithmetic from the three series' coefficients;
    identically zero when ``i + j`` is even.
    """
    if i < 0 or j < 0:
        raise ValueError("degrees must be non-negative")
    shifted = _sine_wcoeff(i + j) * comb(i + j, i)
    return shifted - _sine_wcoeff(i) * _cosine_wcoeff(j) - _cosine_wcoeff(i) * _sine_wcoeff(j)


def pythagoras_coeff(n: int) -> WPoly:
    """Coefficient of ``x^{2n}`` in ``-W_1 * S(x)^2 + C(x)^2`` (odd degrees vanish)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    cos_sq = WPoly.zero()
    for i in range(n + 1):
        cos_sq = cos_sq + WPoly.gen(i) * WPoly.gen(n - i) / (
            factorial(2 * i) * factorial(2 * n - 2 * i)
        )
    sin_sq = WPoly.zero()
    for i in range(n):
        sin_sq = sin_sq + WPoly.gen(1) * WPoly.gen(i) * WPoly.gen(n - i - 1) / (
            factorial(2 * i + 1) * factorial(2 * n - 2 * i - 1)
        )
    return cos_sq - sin_sq


def ap_witness_addition(i: int, j: int) -> tuple[Fraction, int, int]:
    """The unique ``(scalar, m, n)`` with ``addition_defect_coeff(i, j) = scalar * g_gen(m, n)``.

    Recovers the relation generators from the defect coefficients (the
    converse direction of the membership equivalence); raises
    :class:`NoWitnessError` when ``i + j`` is even and checks the claimed
    factorization exactly before returning.
    """
    if (i + j) % 2 == 0:
        raise NoWitnessError(f"no generator witness at even total degree ({i},{j})")
    m = (i - 1) // 2 if i % 2 == 1 else i // 2
    n = (i + j - 1) // 2 - m
    scalar = Fraction(1, factorial(i) * factorial(j))
    if addition_defect_coeff(i, j) != g_gen(m, n) * scalar:
        raise AssertionError(f"witness factorization failed at ({i},{j})")
    return scalar, m, n


def addition_series2(z: MonoidElement, order: int) -> Series2:
    """The addition-formula defect computed directly on truncated series."""
    s = sine(z, order)
    c = cosine(z, order)
    return (
        s.shift_sum()
        - Series2.from_x(s).star(Series2.from_y(c))
        - Series2.from_x(c).star(Series2.from_y(s))
    )


def pythagoras_series(z: MonoidElement, order: int) -> Series1:
    """``-w_value(z,1) * S(x)^2 + C(x)^2`` computed directly on truncated series."""
    s = sine(z, order)
    c = cosine(z, order)
    return c.star(c) - s.star(s).mul_poly(w_value(z, 1))


def verify_addition(
    z: MonoidElement, max_degree: int = 9, bridge: bool = True
) -> Iterator[CheckResult]:
    """Forward membership, witness recovery and the two-route bridge check."""
    direct = addition_series2(z, max_degree) if bridge else None
    for total in range(max_degree + 1):
        for i in range(total + 1):
            j = total - i
            wp = addition_defect_coeff(i, j)
            reduced = reduce_ap(wp)
            record = {
                "degrees": [i, j],
                "wpoly": str(wp),
                "reduced": format_reduced(reduced),
            }
            ok = not reduced
            if total % 2 == 1:
                try:
                    scalar, m, n = ap_witness_addition(i, j)
                    record["witness"] = {"scalar": str(scalar), "m": m, "n": n}
                except AssertionError as exc:
                    record["witness"] = {"error": str(exc)}
                    ok = False
            if direct is not None:
                ok = ok and direct.coeff(i, j) == eval_w(wp, z)
            yield CheckResult(item=f"addition-coefficient x^{i}y^{j}", passed=ok, data=record)


def verify_pythagoras(
    z: MonoidElement, max_n: int = 5, bridge: bool = True
) -> Iterator[CheckResult]:
    """Membership delta check plus the two-route bridge and odd-degree parity."""
    direct = pythagoras_series(z, 2 * max_n) if bridge else None
    for n in range(max_n + 1):
        wp = pythagoras_coeff(n)
        reduced = reduce_ap(wp)
        expected = {0: _F1} if n == 0 else {}
        ok = reduced == expected
        if direct is not None:
            ok = ok and direct.coeff(2 * n) == eval_w(wp, z)
            if 2 * n + 1 <= direct.order:
                ok = ok and direct.coeff(2 * n + 1).is_zero
        yield CheckResult(
            item=f"pythagoras-coefficient x^{2 * n}",
            passed=ok,
            data={
                "degrees": [2 * n],
                "wpoly": str(wp),
                "reduced": format_reduced(reduced),
            },
        )
