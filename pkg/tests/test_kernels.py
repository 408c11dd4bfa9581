from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galois_param import _purepy, kernels

try:
    from galois_param import _speedups
except ImportError:  # pragma: no cover - depends on the build
    _speedups = None

needs_ext = pytest.mark.skipif(_speedups is None, reason="compiled extension not built")


def test_backend_name_is_known():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("coeffs, p, expected", [
    ([6, -5, 1], 7, [2, 3]),
    ([1, 0, 1], 7, []),
    ([1, 1, 1, 1, 1], 11, [3, 4, 5, 9]),
    ([0, 0], 5, [0, 1, 2, 3, 4]),
])
def test_roots_mod_p_examples(backend, coeffs, p, expected):
    assert backend.roots_mod_p(coeffs, p) == expected


def test_closure_of_s4(backend):
    elems = backend.closure([(1, 0, 2, 3), (1, 2, 3, 0)], 4)
    assert len(elems) == 24
    assert elems[0] == (0, 1, 2, 3)
    assert backend.closure_size([(1, 0, 2, 3), (1, 2, 3, 0)], 4) == 24


def test_closure_stop_at(backend):
    assert backend.closure_size([(1, 2, 3, 4, 5, 0), (1, 0, 2, 3, 4, 5)], 6, 100) > 100


def test_ternary_search_examples(backend):
    assert backend.ternary_search(1, 1, -2, 5) is not None
    assert backend.ternary_search(1, 1, 1, 10) is None
    x, y, z = backend.ternary_search(3, -5, 2, 6)
    assert 3 * x * x - 5 * y * y + 2 * z * z == 0 and (x, y) != (0, 0)


@needs_ext
@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=1, max_size=7), st.sampled_from([2, 3, 5, 7, 11, 13, 101, 997]))
def test_roots_backends_agree(coeffs, p):
    assert _speedups.roots_mod_p(coeffs, p) == _purepy.roots_mod_p(coeffs, p)


@needs_ext
@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.integers(1, 3), st.randoms(use_true_random=False))
def test_closure_backends_agree(n, k, rnd):
    gens = []
    for _ in range(k):
        g = list(range(n))
        rnd.shuffle(g)
        gens.append(tuple(g))
    assert _speedups.closure(gens, n) == _purepy.closure(gens, n)
    assert _speedups.closure_size(gens, n) == _purepy.closure_size(gens, n)


@needs_ext
def test_ternary_backends_agree_on_grid():
    rng = random.Random(7)
    for _ in range(400):
        a, b, c = (rng.choice([i for i in range(-20, 21) if i]) for _ in range(3))
        B = rng.randint(1, 12)
        assert _speedups.ternary_search(a, b, c, B) == _purepy.ternary_search(a, b, c, B)


@needs_ext
def test_ternary_falls_back_for_huge_coefficients():
    a, b, c = 10**18, 10**18, -(2 * 10**18)
    assert _speedups.ternary_search(a, b, c, 3) == _purepy.ternary_search(a, b, c, 3)


@needs_ext
def test_closure_falls_back_above_degree_16():
    n = 17
    cyc = tuple((i + 1) % n for i in range(n))
    assert _speedups.closure_size([cyc], n) == 17


def test_composition_convention(backend):
    # closure products are x o g with (x o g)[i] = x[g[i]]
    g, h = (1, 0, 2), (0, 2, 1)
    elems = set(backend.closure([g, h], 3))
    assert set(itertools.permutations(range(3))) == elems
