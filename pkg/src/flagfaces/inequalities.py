"""Face-number inequalities for flag complexes.

For an f-vector ``(f_0, ..., f_n)`` put ``alpha_k = sum_i f_i * C(k-1, i)`` and

    D(t) = 1 + sum_k alpha_k (-t)^k,        Q(t) = 1 / D(t).

For a flag complex, ``Q`` is the Poincaré series of a free graded-commutative
algebra ``prod_i (1 - (-t)^i)^((-1)^(i+1) v_i)``, so every generator count
``v_N`` is a non-negative integer. ``v_N`` is computed three ways:

* from the alpha values directly (Newton power sums plus Möbius inversion),
* from the coefficients of ``Q`` by the same inversion with opposite signs,
* by peeling the product factors off ``Q`` one degree at a time.

The integer ``N * v_N`` is the quantity whose sign is checked.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import kernels
from .series import TruncatedSeries, constant, from_coeffs, int_pow, inverse, log, monomial, mul
from .symfun import binomial, divisors, moebius, power_sums

DEFAULT_MAX_N = 10


def default_order(max_n: int) -> int:
    return max(16, max_n)


def alpha_sequence(f: Sequence[int], count: int) -> tuple[int, ...]:
    """``alpha_1 .. alpha_count``; faces beyond ``len(f)`` contribute nothing."""
    if count < 1:
        raise ValueError("count must be positive")
    return tuple(
        sum(f[i] * binomial(n - 1, i) for i in range(min(n, len(f))))
        for n in range(1, count + 1)
    )


def dseries_from_alpha(alpha: Sequence[int]) -> TruncatedSeries:
    """``1 + sum_n alpha_n (-t)^n`` at order ``len(alpha)``."""
    return from_coeffs([1] + [a if n % 2 == 0 else -a for n, a in enumerate(alpha, 1)])


def dseries_from_f_direct(f: Sequence[int], order: int) -> TruncatedSeries:
    """``1 + sum_i (-1)^(i+1) f_i t^(i+1) / (1+t)^(i+1)`` at the given order.

    Built only from products with ``inverse((1+t)^(i+1))``; independent of the
    alpha route and used to cross-check it.
    """
    one_plus_t = from_coeffs([1, 1] + [0] * (order - 1)) if order >= 1 else constant(1, 0)
    total = constant(1, order)
    for i, fi in enumerate(f):
        if not fi:
            continue
        term = mul(monomial(i + 1, order), inverse(int_pow(one_plus_t, i + 1)))
        total = total + term * (fi if i % 2 else -fi)
    return total


def qseries(f: Sequence[int], order: int) -> TruncatedSeries:
    return inverse(dseries_from_alpha(alpha_sequence(f, order)))


def theorem_lhs(alpha: Sequence[int], max_n: int) -> list[int]:
    """``(-1)^N sum_{d|N} mu(N/d) (-1)^d p_d(alpha)`` for ``N = 1..max_n``."""
    p = power_sums(alpha, max_n)
    out = []
    for n in range(1, max_n + 1):
        acc = 0
        for d in divisors(n):
            mu = moebius(n // d)
            if mu:
                acc += mu * (p[d - 1] if d % 2 == 0 else -p[d - 1])
        out.append(acc if n % 2 == 0 else -acc)
    return out


def v_by_theorem(alpha: Sequence[int], n: int) -> tuple[int, int | Fraction]:
    """``(lhs, v)`` with ``v = lhs / N``; raises if ``alpha`` is too short."""
    if n > len(alpha):
        raise ValueError("insufficient elementary values")
    lhs = theorem_lhs(alpha, n)[-1]
    return lhs, kernels.exact_div(lhs, n)


def lemma_vs(q: TruncatedSeries, max_n: int) -> list:
    if q[0] != 1:
        raise ValueError("series must have constant term 1")
    if max_n > q.order:
        raise ValueError("series order too small")
    p = power_sums(q.coeffs[1:], max_n)
    out = []
    for n in range(1, max_n + 1):
        acc = sum(moebius(n // d) * p[d - 1] for d in divisors(n))
        out.append(kernels.exact_div(acc if n % 2 else -acc, n))
    return out


def v_by_lemma(q: TruncatedSeries, n: int):
    """``(-1)^(N+1)/N sum_{d|N} mu(N/d) p_d(s)`` with ``s`` the coefficients of ``q``."""
    return lemma_vs(q, n)[-1]


@dataclass
class VSequence:
    values: list
    integral: list[bool]
    halted_at: int | None = None

    @property
    def message(self) -> str | None:
        if self.halted_at is None:
            return None
        return f"non-integral generator dimension at degree {self.halted_at}"


def peel_factor(i: int, v: int, order: int) -> TruncatedSeries:
    """``(1 - (-t)^i)^((-1)^(i+1) v)``, which is ``1 + v t^i + O(t^(2i))``."""
    base = from_coeffs([1] + [0] * order)
    if i <= order:
        base = base + monomial(i, order, -((-1) ** i))
    return int_pow(base, v if i % 2 else -v)


def v_by_peeling(q: TruncatedSeries) -> VSequence:
    """Strip ``prod_i (1 - (-t)^i)^((-1)^(i+1) v_i)`` off ``q`` degree by degree.

    Stops at the first non-integral ``v_i``; that value is still reported.
    """
    if q[0] != 1:
        raise ValueError("series must have constant term 1")
    residual = q
    values, integral = [], []
    for i in range(1, q.order + 1):
        v = residual[i]
        ok = isinstance(v, int)
        values.append(v)
        integral.append(ok)
        if not ok:
            return VSequence(values, integral, halted_at=i)
        if v:
            residual = mul(residual, peel_factor(i, -v, q.order))
    return VSequence(values, integral)


def reconstruct(v: Sequence[int], order: int) -> TruncatedSeries:
    """Product of the free-algebra factors for generator counts ``v``."""
    out = constant(1, order)
    for i, vi in enumerate(v, 1):
        if vi:
            out = mul(out, peel_factor(i, vi, order))
    return out


@dataclass
class NRecord:
    n: int
    lhs: int
    v: int | Fraction
    holds: bool

    @property
    def v_integral(self) -> bool:
        return isinstance(self.v, int)


@dataclass
class InequalityReport:
    fvector: tuple[int, ...]
    alpha: tuple[int, ...]
    max_n: int
    records: list[NRecord] = field(default_factory=list)
    all_hold: bool = True
    routes_agree: bool = True
    q: TruncatedSeries | None = None
    peeled: VSequence | None = None

    def violations(self) -> list[NRecord]:
        return [r for r in self.records if not r.holds]


def check_inequalities(f: Sequence[int], max_n: int = DEFAULT_MAX_N, order: int | None = None) -> InequalityReport:
    """Evaluate the inequality family for ``N = 1..max_n`` along all three routes.

    Any f-vector is accepted; a failing ``N`` certifies that no flag complex
    has this f-vector. Route disagreement is reported, never raised.
    """
    if max_n < 1:
        raise ValueError("max_n must be positive")
    order = default_order(max_n) if order is None else order
    if order < max_n:
        raise ValueError("order must be at least max_n")
    f = tuple(f)
    alpha = alpha_sequence(f, order)
    q = inverse(dseries_from_alpha(alpha))

    lhs = theorem_lhs(alpha, max_n)
    by_theorem = [kernels.exact_div(x, n) for n, x in enumerate(lhs, 1)]
    by_lemma = lemma_vs(q, max_n)
    peeled = v_by_peeling(q)

    agree = by_theorem == by_lemma
    k = min(max_n, len(peeled.values))
    agree = agree and peeled.values[:k] == by_theorem[:k]

    records = [NRecord(n, x, by_theorem[n - 1], x >= 0) for n, x in enumerate(lhs, 1)]
    return InequalityReport(
        fvector=f,
        alpha=alpha,
        max_n=max_n,
        records=records,
        all_hold=all(r.holds for r in records),
        routes_agree=agree,
        q=q,
        peeled=peeled,
    )


def closed_form_small_n(f: Sequence[int], n: int) -> int:
    """Hand-expanded left sides for ``N = 1, 2, 3``.

    ``N=2``: ``2 (C(f0,2) - f1)``; ``N=3``: ``3 (f2 - C(f0,3) + (f0-2)(C(f0,2) - f1))``.
    """
    f0, f1, f2 = (tuple(f) + (0, 0, 0))[:3]
    if n == 1:
        return f0
    if n == 2:
        return 2 * (binomial(f0, 2) - f1)
    if n == 3:
        return 3 * (f2 - binomial(f0, 3) + (f0 - 2) * (binomial(f0, 2) - f1))
    raise ValueError("closed forms exist only for N in {1, 2, 3}")


def log_route_power_sums(q: TruncatedSeries, max_n: int) -> list:
    """``(-1)^(N+1) N [t^N] log q`` for ``N = 1..max_n``."""
    lq = log(q)
    return [(-1) ** (n + 1) * n * lq[n] for n in range(1, max_n + 1)]


def homotopy_ranks(v: Sequence) -> list[tuple[int, object]]:
    """Relabel generator counts as ranks ``pi_(i+1) = v_i``.

    Read off ``prod_r (1 + t^(2r-1))^pi_(2r) / (1 - t^(2r))^pi_(2r+1)``.
    Annotational only; nothing is claimed about the ``pi_2`` entry.
    """
    return [(i + 1, x) for i, x in enumerate(v, 1)]
