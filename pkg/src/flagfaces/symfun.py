"""Newton power sums from elementary symmetric values, and divisor arithmetic."""
from __future__ import annotations

from math import comb, isqrt
from typing import Sequence

from . import kernels


def power_sums(e: Sequence, count: int) -> list:
    """Power sums ``p_1 .. p_count`` of a root multiset given ``e_1, e_2, ...``.

    ``e[0]`` holds ``e_1``. Integer inputs give integer outputs. Raises
    ``ValueError`` if fewer than ``count`` elementary values are supplied;
    callers must pass explicit zeros rather than rely on padding.
    """
    if count > len(e):
        raise ValueError("insufficient elementary values")
    if count <= 0:
        return []
    return kernels.power_sums(list(e[:count]), count)


def power_sum(e: Sequence, d: int):
    """The Newton polynomial ``p_d`` evaluated at elementary values ``e``."""
    if d < 1:
        raise ValueError("degree must be positive")
    return power_sums(e, d)[-1]


def elementary_from_roots(roots: Sequence[int], count: int | None = None) -> list:
    """``e_1 .. e_count`` of the given roots (zeros beyond ``len(roots)``)."""
    count = len(roots) if count is None else count
    # coefficients of prod (1 + r t)
    poly = [1]
    for r in roots:
        poly = [a + r * b for a, b in zip(poly + [0], [0] + poly)]
    poly += [0] * max(0, count + 1 - len(poly))
    return poly[1 : count + 1]


def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError("undefined")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("undefined")
    f = factorize(n)
    if any(k > 1 for k in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("undefined")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)
