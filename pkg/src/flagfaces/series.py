"""Truncated formal power series with exact rational coefficients.

A :class:`TruncatedSeries` stores the coefficients of ``t^0 .. t^order``.
Coefficients are Python ``int`` when integral and ``fractions.Fraction``
otherwise; both are exact and compare equal across types. Binary operations
truncate to the smaller operand order.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from . import kernels

Number = Union[int, Fraction]


class SeriesError(ValueError):
    pass


def _exact(x) -> Number:
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, (Rational, str)):
        f = Fraction(x)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"not an exact rational: {x!r}")


class TruncatedSeries:
    """Formal power series ``c_0 + c_1 t + ... + c_order t^order``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable, *, _trusted: bool = False):
        c = tuple(coeffs) if _trusted else tuple(_exact(x) for x in coeffs)
        if not c:
            raise SeriesError("empty series")
        self._c = c

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __len__(self):
        return len(self._c)

    def __getitem__(self, k):
        return self._c[k]

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self._c[: n + 1] == other._c[: n + 1]

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"TruncatedSeries({[str(x) for x in self._c]})"

    def __str__(self):
        terms = []
        for k, x in enumerate(self._c):
            if x == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k and x == 1:
                coef = ""
            elif k and x == -1:
                coef = "-"
            else:
                coef = f"({x})" if isinstance(x, Fraction) and mono else str(x)
            terms.append(f"{coef}{'*' if coef not in ('', '-') and mono else ''}{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(t^{self.order + 1})"

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise SeriesError(f"cannot extend series of order {self.order} to {order}")
        return TruncatedSeries(self._c[: order + 1], _trusted=True)

    def __add__(self, other):
        other = _coerce(other, self.order)
        n = min(self.order, other.order)
        return TruncatedSeries((self._c[k] + other._c[k] for k in range(n + 1)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries((-x for x in self._c), _trusted=True)

    def __sub__(self, other):
        return self + (-_coerce(other, self.order))

    def __rsub__(self, other):
        return _coerce(other, self.order) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        return int_pow(self, e)


def _coerce(x, order) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    return constant(x, order)


def _wrap(coeffs) -> TruncatedSeries:
    return TruncatedSeries(coeffs)


def from_coeffs(c: Sequence) -> TruncatedSeries:
    return TruncatedSeries(c)


def constant(x, order: int) -> TruncatedSeries:
    return TruncatedSeries([x] + [0] * order)


def monomial(k: int, order: int, coef=1) -> TruncatedSeries:
    """``coef * t^k`` at the given order (zero if ``k > order``)."""
    c = [0] * (order + 1)
    if k <= order:
        c[k] = coef
    return TruncatedSeries(c)


def scale(a: TruncatedSeries, x) -> TruncatedSeries:
    x = _exact(x)
    return _wrap(c * x for c in a.coeffs)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return _wrap(kernels.series_mul(list(a.coeffs), list(b.coeffs), n))


def inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; requires a nonzero constant term."""
    if a[0] == 0:
        raise SeriesError("non-unit series")
    return _wrap(kernels.series_inverse(list(a.coeffs), a.order))


def log(a: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm of a series with constant term 1.

    Uses ``L' = a'/a``, i.e. ``n L_n = n a_n - sum_{k<n} k L_k a_{n-k}``.
    """
    if a[0] != 1:
        raise SeriesError("log requires unit constant term")
    return _wrap(kernels.series_log(list(a.coeffs), a.order))


def int_pow(a: TruncatedSeries, e: int) -> TruncatedSeries:
    if isinstance(e, bool) or not isinstance(e, int):
        raise TypeError("exponent must be an integer")
    if e == 0:
        return constant(1, a.order)
    if a[0] != 0:
        return _wrap(kernels.series_pow(list(a.coeffs), e, a.order))
    if e < 0:
        raise SeriesError("non-unit series")
    result, base = None, a
    while e:
        if e & 1:
            result = base if result is None else mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Formal derivative; the result has order ``a.order - 1`` (at least 0)."""
    if a.order == 0:
        return constant(0, 0)
    return _wrap(k * a[k] for k in range(1, a.order + 1))
