# cython: boundscheck=False, wraparound=False
"""Compiled counterparts of ``_pykernels``.

Series kernels still operate on Python integers and fractions (coefficients
grow without bound), so the gain there comes from typed loops only. Clique
counting runs on machine words for graphs with at most 64 vertices.
"""
from libc.stdint cimport uint64_t

from flagfaces._pykernels import exact_div
from flagfaces._pykernels import count_cliques as _py_count_cliques


cdef extern from * nogil:
    int popcount64 "__builtin_popcountll"(unsigned long long)
    int ctz64 "__builtin_ctzll"(unsigned long long)


cpdef list series_mul(list a, list b, Py_ssize_t order):
    cdef Py_ssize_t n, k
    cdef list out = []
    cdef object acc, x, y
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


cpdef list series_inverse(list a, Py_ssize_t order):
    cdef Py_ssize_t n, k
    cdef object a0 = a[0], inv0, acc, x
    if a0 == 1:
        inv0 = 1
    elif a0 == -1:
        inv0 = -1
    else:
        inv0 = exact_div(1, a0)
    cdef list b = [inv0]
    for n in range(1, order + 1):
        acc = 0
        for k in range(1, n + 1):
            x = a[k]
            if x:
                acc += x * b[n - k]
        b.append(-acc * inv0)
    return b


cpdef list series_log(list a, Py_ssize_t order):
    cdef Py_ssize_t n, k
    cdef object acc, y
    cdef list out = [0]
    for n in range(1, order + 1):
        acc = 0
        for k in range(1, n):
            y = a[n - k]
            if y:
                acc += k * out[k] * y
        out.append(a[n] - exact_div(acc, n) if acc else a[n])
    return out


cpdef list series_pow(list a, object e, Py_ssize_t order):
    cdef Py_ssize_t n, k, i, nnz
    cdef object a0 = a[0], acc
    if e >= 0:
        b0 = a0 ** e
    else:
        b0 = exact_div(1, a0 ** (-e))
    cdef list b = [b0]
    cdef list nz = [k for k in range(1, order + 1) if a[k]]
    nnz = len(nz)
    for n in range(1, order + 1):
        acc = 0
        for i in range(nnz):
            k = nz[i]
            if k > n:
                break
            acc += ((e + 1) * k - n) * a[k] * b[n - k]
        b.append(exact_div(acc, n * a0) if acc else 0)
    return b


cpdef list power_sums(object e, Py_ssize_t count):
    cdef Py_ssize_t k, j
    cdef object acc, x
    cdef list ev = list(e)
    cdef list p = [0]
    for k in range(1, count + 1):
        acc = k * ev[k - 1]
        if not k & 1:
            acc = -acc
        for j in range(1, k):
            x = ev[j - 1]
            if x:
                if j & 1:
                    acc += x * p[k - j]
                else:
                    acc -= x * p[k - j]
        p.append(acc)
    return p[1:]


cdef uint64_t _binom[65][65]
cdef bint _binom_ready = False


cdef void _fill_binom():
    cdef int p, j
    for p in range(65):
        for j in range(65):
            _binom[p][j] = 0
        _binom[p][0] = 1
        for j in range(1, p + 1):
            _binom[p][j] = _binom[p - 1][j - 1] + _binom[p - 1][j]


cdef void _rec(const uint64_t* adj, uint64_t cand, int held, int piv,
               uint64_t* counts) noexcept nogil:
    cdef uint64_t c, rest, low
    cdef int u, v, best, d, best_deg, j
    if cand == 0:
        for j in range(piv + 1):
            counts[held + j] += _binom[piv][j]
        return
    best = -1
    best_deg = -1
    c = cand
    while c:
        u = ctz64(c)
        d = popcount64(cand & adj[u])
        if d > best_deg:
            best = u
            best_deg = d
        c &= c - 1
    _rec(adj, cand & adj[best], held, piv + 1, counts)
    cand &= ~((<uint64_t>1) << best)
    rest = cand & ~adj[best]
    while rest:
        v = ctz64(rest)
        low = (<uint64_t>1) << v
        _rec(adj, cand & adj[v], held + 1, piv, counts)
        cand &= ~low
        rest &= rest - 1


def count_cliques(adj, Py_ssize_t m):
    """Clique counts per size ``0..m``; machine-word path for ``m <= 64``."""
    global _binom_ready
    if m > 64:
        return _py_count_cliques(adj, m)
    if m == 0:
        return [1]
    if not _binom_ready:
        _fill_binom()
        _binom_ready = True
    cdef uint64_t cadj[64]
    cdef uint64_t counts[65]
    cdef Py_ssize_t i
    for i in range(m):
        cadj[i] = <uint64_t>adj[i]
    for i in range(m + 1):
        counts[i] = 0
    cdef uint64_t full = ~(<uint64_t>0) if m == 64 else (((<uint64_t>1) << m) - 1)
    with nogil:
        _rec(cadj, full, 0, 0, counts)
    return [counts[i] for i in range(m + 1)]
