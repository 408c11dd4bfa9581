"""Reference implementations of the hot loops.

These are the semantics the compiled extension must reproduce exactly; the
test-suite runs both side by side.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Sequence


def roots_mod_p(coeffs: Sequence[int], p: int) -> list[int]:
    """All x in [0, p) with sum(coeffs[i] * x**i) == 0 mod p (brute force)."""
    cs = [c % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return list(range(p))
    rev = cs[::-1]
    out = []
    for x in range(p):
        acc = 0
        for c in rev:
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out


def _compose(p: tuple, q: tuple) -> tuple:
    return tuple(p[i] for i in q)


def closure(gens: Sequence[Sequence[int]], degree: int, stop_at: int = 0) -> list[tuple]:
    """Breadth-first closure of ``gens`` under composition, identity first.

    If ``stop_at`` is positive the search halts as soon as more than
    ``stop_at`` elements are known; the partial list is returned.
    """
    ident = tuple(range(degree))
    gens = [tuple(g) for g in gens]
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _compose(x, g)
            if y not in seen:
                seen.add(y)
                order.append(y)
                if stop_at and len(order) > stop_at:
                    return order
                queue.append(y)
    return order


def closure_size(gens: Sequence[Sequence[int]], degree: int, stop_at: int = 0) -> int:
    return len(closure(gens, degree, stop_at))


def ternary_search(a: int, b: int, c: int, bound: int):
    """Find (x, y, z) != 0 with a x^2 + b y^2 + c z^2 = 0 and 0 <= x, y, |z| <= bound.

    x and y are scanned in lexicographic order; z is recovered from a
    perfect-square test, so the search is O(bound^2).
    """
    if c == 0:
        raise ValueError("c must be nonzero")
    for x in range(bound + 1):
        ax = a * x * x
        for y in range(bound + 1):
            if x == 0 and y == 0:
                continue
            num = -(ax + b * y * y)
            if num % c:
                continue
            z2 = num // c
            if z2 < 0:
                continue
            z = math.isqrt(z2)
            if z * z == z2 and z <= bound:
                return (x, y, z)
    return None
