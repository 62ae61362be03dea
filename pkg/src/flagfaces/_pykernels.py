"""Pure-Python hot kernels.

These are the reference implementations; ``_ckernels.pyx`` mirrors every
function here with the same signature and must return identical values.
Series kernels take dense coefficient lists of exact numbers (``int`` or
``Fraction``) and return lists truncated to ``order + 1`` entries.
"""
from fractions import Fraction
from math import comb


def exact_div(x, d):
    """``x / d`` kept as ``int`` when exact, else a ``Fraction``."""
    if type(x) is int and type(d) is int:
        q, r = divmod(x, d)
        if not r:
            return q
        return Fraction(x, d)
    r = Fraction(x) / d
    return r.numerator if r.denominator == 1 else r


def series_mul(a, b, order):
    out = []
    for n in range(order + 1):
        acc = 0
        for k in range(n + 1):
            x = a[k]
            if x:
                y = b[n - k]
                if y:
                    acc += x * y
        out.append(acc)
    return out


def series_inverse(a, order):
    a0 = a[0]
    if a0 == 1:
        inv0 = 1
    elif a0 == -1:
        inv0 = -1
    else:
        inv0 = exact_div(1, a0)
    b = [inv0]
    for n in range(1, order + 1):
        acc = 0
        for k in range(1, n + 1):
            x = a[k]
            if x:
                acc += x * b[n - k]
        b.append(-acc * inv0)
    return b


def series_log(a, order):
    # a[0] == 1 is checked by the caller
    out = [0]
    for n in range(1, order + 1):
        acc = 0
        for k in range(1, n):
            y = a[n - k]
            if y:
                acc += k * out[k] * y
        out.append(a[n] - exact_div(acc, n) if acc else a[n])
    return out


def series_pow(a, e, order):
    """``a**e`` for a unit series via the J.C.P. Miller recurrence."""
    a0 = a[0]
    if e >= 0:
        b0 = a0 ** e
    else:
        b0 = exact_div(1, a0 ** (-e))
    b = [b0]
    nz = [k for k in range(1, order + 1) if a[k]]
    for n in range(1, order + 1):
        acc = 0
        for k in nz:
            if k > n:
                break
            acc += ((e + 1) * k - n) * a[k] * b[n - k]
        b.append(exact_div(acc, n * a0) if acc else 0)
    return b


def power_sums(e, count):
    """Power sums ``p_1..p_count`` from elementary values ``e_1..e_count``.

    Newton's identities: ``p_k = sum_{j<k} (-1)^(j-1) e_j p_(k-j) + (-1)^(k-1) k e_k``.
    """
    p = [0]
    for k in range(1, count + 1):
        acc = k * e[k - 1]
        if not k & 1:
            acc = -acc
        for j in range(1, k):
            x = e[j - 1]
            if x:
                if j & 1:
                    acc += x * p[k - j]
                else:
                    acc -= x * p[k - j]
        p.append(acc)
    return p[1:]


def count_cliques(adj, m):
    """Number of cliques of each size ``0..m`` (index 0 is the empty clique).

    Pivoted recursion: every clique is a set of held vertices plus any subset
    of pivot vertices along one root-to-leaf path, so leaves add binomials.
    """
    counts = [0] * (m + 1)
    if m == 0:
        counts[0] = 1
        return counts
    binom = [[comb(p, j) for j in range(p + 1)] for p in range(m + 1)]

    def rec(cand, held, piv):
        if not cand:
            row = binom[piv]
            for j in range(piv + 1):
                counts[held + j] += row[j]
            return
        best, best_deg = -1, -1
        c = cand
        while c:
            low = c & -c
            u = low.bit_length() - 1
            d = (cand & adj[u]).bit_count()
            if d > best_deg:
                best, best_deg = u, d
            c ^= low
        rec(cand & adj[best], held, piv + 1)
        cand &= ~(1 << best)
        rest = cand & ~adj[best]
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rec(cand & adj[v], held + 1, piv)
            cand &= ~low
            rest ^= low

    rec((1 << m) - 1, 0, 0)
    return counts
