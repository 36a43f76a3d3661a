"""Truncated formal power series with harmonic-polynomial coefficients.

A series carries an explicit truncation order (inclusive) and stores only the
coefficients it actually knows; asking for a coefficient beyond the order is
an error rather than a silent zero.  Binary operations reconcile operands to
the smaller order.  Multiplication is the Cauchy product with the harmonic
product on coefficients, so all arithmetic stays exact.

``exp_star`` and ``log_star`` are computed degree by degree through the
differential recurrence g' = f' * g, which needs one harmonic product per
degree instead of nested powers.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable

from .halg import HPoly, harmonic

__all__ = ["DEFAULT_ORDER", "OrderError", "Series1", "Series2"]

DEFAULT_ORDER = 12

_F1 = Fraction(1)


class OrderError(ValueError):
    """Access past the truncation order of a series."""


def _clean(coeffs: dict, order: int) -> dict:
    out = {}
    for key, poly in coeffs.items():
        if isinstance(poly, (int, Fraction)):
            poly = HPoly.rational(poly)
        if poly.is_zero:
            continue
        out[key] = poly
    return out


class Series1:
    """Univariate truncated series; ``coeffs[n]`` is the coefficient of ``var**n``."""

    __slots__ = ("coeffs", "order", "var")

    def __init__(self, coeffs: dict[int, HPoly] | None, order: int, var: str = "x"):
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = coeffs or {}
        if any(n < 0 or n > order for n in coeffs):
            raise OrderError("coefficient degree outside truncation range")
        self.coeffs = _clean(coeffs, order)
        self.order = order
        self.var = var

    @classmethod
    def zero(cls, order: int, var: str = "x") -> "Series1":
        return cls({}, order, var)

    @classmethod
    def one(cls, order: int, var: str = "x") -> "Series1":
        return cls({0: HPoly.one()}, order, var)

    def coeff(self, n: int) -> HPoly:
        if n > self.order or n < 0:
            raise OrderError(f"degree {n} beyond truncation order {self.order}")
        return self.coeffs.get(n, HPoly.zero())

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _match(self, other: "Series1") -> int:
        if not isinstance(other, Series1):
            raise TypeError("expected a univariate series")
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
        return min(self.order, other.order)

    def truncate(self, order: int) -> "Series1":
        if order >= self.order:
            return self
        return Series1({n: p for n, p in self.coeffs.items() if n <= order}, order, self.var)

    def add(self, other: "Series1") -> "Series1":
        order = self._match(other)
        out = {n: p for n, p in self.coeffs.items() if n <= order}
        for n, p in other.coeffs.items():
            if n <= order:
                out[n] = out.get(n, HPoly.zero()) + p
        return Series1(out, order, self.var)

    def __add__(self, other: "Series1") -> "Series1":
        return self.add(other)

    def __sub__(self, other: "Series1") -> "Series1":
        return self.add(other.scale(-1))

    def scale(self, c: Fraction | int) -> "Series1":
        return Series1({n: p * c for n, p in self.coeffs.items()}, self.order, self.var)

    def mul_poly(self, h: HPoly) -> "Series1":
        """Multiply every coefficient harmonically by a fixed polynomial."""
        return Series1({n: harmonic(h, p) for n, p in self.coeffs.items()}, self.order, self.var)

    def star(self, other: "Series1") -> "Series1":
        """Cauchy product with harmonic multiplication of coefficients."""
        order = self._match(other)
        out: dict[int, HPoly] = {}
        for i, p in self.coeffs.items():
            if i > order:
                continue
            for j, q in other.coeffs.items():
                n = i + j
                if n > order:
                    continue
                term = harmonic(p, q)
                out[n] = out.get(n, HPoly.zero()) + term
        return Series1(out, order, self.var)

    def inverse(self) -> "Series1":
        """Harmonic-product inverse; needs an invertible rational constant term."""
        c0 = self.coeffs.get(0, HPoly.zero())
        c = c0.coeff(())
        if not c or c0 != HPoly.rational(c):
            raise ValueError("constant term is not a nonzero rational multiple of 1")
        inv_c = _F1 / c
        out: dict[int, HPoly] = {0: HPoly.rational(inv_c)}
        for n in range(1, self.order + 1):
            acc = HPoly.zero()
            for k in range(1, n + 1):
                fk = self.coeffs.get(k)
                if fk is None:
                    continue
                acc = acc + harmonic(fk, out.get(n - k, HPoly.zero()))
            out[n] = acc * (-inv_c)
        return Series1(out, self.order, self.var)

    def exp_star(self) -> "Series1":
        """Exponential with respect to the harmonic product (zero constant term)."""
        if 0 in self.coeffs:
            raise ValueError("exp_star needs a zero constant term")
        out: dict[int, HPoly] = {0: HPoly.one()}
        for n in range(1, self.order + 1):
            acc = HPoly.zero()
            for k in range(1, n + 1):
                fk = self.coeffs.get(k)
                if fk is None:
                    continue
                acc = acc + harmonic(fk * k, out.get(n - k, HPoly.zero()))
            out[n] = acc / n
        return Series1(out, self.order, self.var)

    def log_star(self) -> "Series1":
        """Inverse of ``exp_star`` (constant term must be 1)."""
        if self.coeffs.get(0, HPoly.zero()) != HPoly.one():
            raise ValueError("log_star needs constant term 1")
        out: dict[int, HPoly] = {}
        for n in range(1, self.order + 1):
            acc = self.coeffs.get(n, HPoly.zero()) * n
            for k in range(1, n):
                fk = out.get(k)
                if fk is None:
                    continue
                acc = acc - harmonic(fk * k, self.coeffs.get(n - k, HPoly.zero()))
            out[n] = acc / n
        return Series1(out, self.order, self.var)

    def derivative(self) -> "Series1":
        """Formal derivative; the output order drops by one."""
        if self.order == 0:
            return Series1.zero(0, self.var)
        out = {n - 1: p * n for n, p in self.coeffs.items() if n >= 1}
        return Series1(out, self.order - 1, self.var)

    def shift_up(self, k: int) -> "Series1":
        """Multiply by ``var**k``; knowledge extends to order + k."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return Series1({n + k: p for n, p in self.coeffs.items()}, self.order + k, self.var)

    def negate_argument(self) -> "Series1":
        """Substitute ``-var`` for ``var`` (flip odd-degree coefficients)."""
        return Series1(
            {n: (p if n % 2 == 0 else -p) for n, p in self.coeffs.items()},
            self.order,
            self.var,
        )

    def shift_sum(self) -> "Series2":
        """Substitute ``x + y`` for the variable: binomially spread coefficients."""
        out: dict[tuple[int, int], HPoly] = {}
        for n, p in self.coeffs.items():
            for i in range(n + 1):
                out[(i, n - i)] = p * comb(n, i)
        return Series2(out, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series1):
            return NotImplemented
        return self.var == other.var and self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [
            f"{self.var}^{n}*({p})" if n else f"({p})"
            for n, p in sorted(self.coeffs.items())
        ]
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Series1(order={self.order}, {self})"


class Series2:
    """Bivariate truncated series; keys are ``(i, j)`` with ``i + j <= order``."""

    __slots__ = ("coeffs", "order", "vars")

    def __init__(
        self,
        coeffs: dict[tuple[int, int], HPoly] | None,
        order: int,
        vars: tuple[str, str] = ("x", "y"),
    ):
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = coeffs or {}
        if any(i < 0 or j < 0 or i + j > order for i, j in coeffs):
            raise OrderError("coefficient degree outside truncation range")
        self.coeffs = _clean(coeffs, order)
        self.order = order
        self.vars = vars

    @classmethod
    def zero(cls, order: int) -> "Series2":
        return cls({}, order)

    @classmethod
    def from_x(cls, f: Series1) -> "Series2":
        """Inject a univariate series as a series in the first variable."""
        return cls({(n, 0): p for n, p in f.coeffs.items()}, f.order)

    @classmethod
    def from_y(cls, f: Series1) -> "Series2":
        return cls({(0, n): p for n, p in f.coeffs.items()}, f.order)

    def coeff(self, i: int, j: int) -> HPoly:
        if i < 0 or j < 0 or i + j > self.order:
            raise OrderError(f"degree ({i},{j}) beyond truncation order {self.order}")
        return self.coeffs.get((i, j), HPoly.zero())

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _match(self, other: "Series2") -> int:
        if not isinstance(other, Series2):
            raise TypeError("expected a bivariate series")
        if self.vars != other.vars:
            raise ValueError("variable mismatch")
        return min(self.order, other.order)

    def truncate(self, order: int) -> "Series2":
        if order >= self.order:
            return self
        return Series2(
            {k: p for k, p in self.coeffs.items() if k[0] + k[1] <= order}, order, self.vars
        )

    def add(self, other: "Series2") -> "Series2":
        order = self._match(other)
        out = {k: p for k, p in self.coeffs.items() if k[0] + k[1] <= order}
        for k, p in other.coeffs.items():
            if k[0] + k[1] <= order:
                out[k] = out.get(k, HPoly.zero()) + p
        return Series2(out, order, self.vars)

    def __add__(self, other: "Series2") -> "Series2":
        return self.add(other)

    def __sub__(self, other: "Series2") -> "Series2":
        return self.add(other.scale(-1))

    def scale(self, c: Fraction | int) -> "Series2":
        return Series2({k: p * c for k, p in self.coeffs.items()}, self.order, self.vars)

    def star(self, other: "Series2") -> "Series2":
        order = self._match(other)
        out: dict[tuple[int, int], HPoly] = {}
        for (a, b), p in self.coeffs.items():
            if a + b > order:
                continue
            for (c, d), q in other.coeffs.items():
                i, j = a + c, b + d
                if i + j > order:
                    continue
                key = (i, j)
                out[key] = out.get(key, HPoly.zero()) + harmonic(p, q)
        return Series2(out, order, self.vars)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        return self.vars == other.vars and self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        x, y = self.vars
        parts = []
        for (i, j), p in sorted(self.coeffs.items()):
            pre = "".join(s for s in (f"{x}^{i}*" if i else "", f"{y}^{j}*" if j else ""))
            parts.append(f"{pre}({p})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Series2(order={self.order}, {self})"
