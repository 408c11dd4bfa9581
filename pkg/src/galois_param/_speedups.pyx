# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_purepy``."""

from libc.stdint cimport uint64_t, int64_t
from libc.math cimport sqrt
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

from . import _purepy


def roots_mod_p(coeffs, long long p):
    if p >= (1 << 31):
        return _purepy.roots_mod_p(coeffs, p)
    cdef vector[long long] cs
    for c in coeffs:
        cs.push_back(c % p)
    while cs.size() and cs.back() == 0:
        cs.pop_back()
    if cs.size() == 0:
        return list(range(p))
    cdef long long x, acc
    cdef Py_ssize_t i, n = cs.size()
    out = []
    for x in range(p):
        acc = 0
        for i in range(n - 1, -1, -1):
            acc = (acc * x + cs[i]) % p
        if acc == 0:
            out.append(x)
    return out


cdef inline uint64_t _encode(object perm):
    cdef uint64_t code = 0
    cdef int i
    for i in range(len(perm)):
        code |= (<uint64_t>perm[i]) << (4 * i)
    return code


cdef inline uint64_t _compose(uint64_t x, uint64_t g, int degree):
    # result[i] = x[g[i]]
    cdef uint64_t out = 0
    cdef int i, gi
    for i in range(degree):
        gi = (g >> (4 * i)) & 15
        out |= ((x >> (4 * gi)) & 15) << (4 * i)
    return out


cdef tuple _decode(uint64_t code, int degree):
    return tuple([(code >> (4 * i)) & 15 for i in range(degree)])


cdef vector[uint64_t] _closure_codes(gens, int degree, Py_ssize_t stop_at):
    cdef vector[uint64_t] gv
    for g in gens:
        gv.push_back(_encode(g))
    cdef uint64_t ident = 0
    cdef int i
    for i in range(degree):
        ident |= (<uint64_t>i) << (4 * i)
    cdef unordered_set[uint64_t] seen
    cdef vector[uint64_t] order
    seen.insert(ident)
    order.push_back(ident)
    cdef size_t head = 0
    cdef uint64_t x, y
    cdef size_t k
    while head < order.size():
        x = order[head]
        head += 1
        for k in range(gv.size()):
            y = _compose(x, gv[k], degree)
            if seen.insert(y).second:
                order.push_back(y)
                if stop_at > 0 and <Py_ssize_t>order.size() > stop_at:
                    return order
    return order


def closure(gens, int degree, Py_ssize_t stop_at=0):
    if degree > 16:
        return _purepy.closure(gens, degree, stop_at)
    cdef vector[uint64_t] codes = _closure_codes(gens, degree, stop_at)
    return [_decode(c, degree) for c in codes]


def closure_size(gens, int degree, Py_ssize_t stop_at=0):
    if degree > 16:
        return _purepy.closure_size(gens, degree, stop_at)
    return <Py_ssize_t>_closure_codes(gens, degree, stop_at).size()


cdef inline int64_t _isqrt(int64_t n):
    cdef int64_t r = <int64_t>sqrt(<double>n)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def ternary_search(a, b, c, bound):
    if c == 0:
        raise ValueError("c must be nonzero")
    limit = 1 << 61
    if max(abs(a), abs(b), abs(c)) * (bound + 1) ** 2 * 2 >= limit:
        return _purepy.ternary_search(a, b, c, bound)
    cdef int64_t A = a, Bc = b, C = c, N = bound
    cdef int64_t x, y, num, z2, z, ax
    for x in range(N + 1):
        ax = A * x * x
        for y in range(N + 1):
            if x == 0 and y == 0:
                continue
            num = -(ax + Bc * y * y)
            if num % C != 0:
                continue
            z2 = num // C
            if z2 < 0:
                continue
            z = _isqrt(z2)
            if z * z == z2 and z <= N:
                return (int(x), int(y), int(z))
    return None
