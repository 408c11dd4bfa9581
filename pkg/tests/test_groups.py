from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galois_param.groups import (
    AnType,
    CycleType,
    SnType,
    alternating,
    an_class_splits,
    an_label_of,
    class_power,
    conjugate_in_An,
    cycle_type,
    cycle_type_power,
    cyclic,
    dihedral,
    find_class_set_cor53,
    from_cycles,
    group_from_wire,
    group_to_wire,
    inverse,
    is_g_complete,
    is_g_complete_by_subgroups,
    is_rational_class_set,
    klein_four,
    mul,
    perm_order,
    power,
    power_closure,
    psl2_group,
    real_tuple_construction,
    symmetric,
)

perms = st.integers(1, 9).flatmap(lambda n: st.permutations(range(n)).map(tuple))


def test_mul_convention():
    p = from_cycles(3, [(0, 1)])
    q = from_cycles(3, [(1, 2)])
    # (p*q)(i) = p(q(i))
    assert mul(p, q) == tuple(p[q[i]] for i in range(3))


@given(perms)
def test_inverse_and_order(g):
    n = len(g)
    assert mul(g, inverse(g)) == tuple(range(n))
    assert power(g, perm_order(g)) == tuple(range(n))


@given(perms, st.integers(1, 40))
def test_cycle_type_power_matches_explicit_power(g, a):
    assert cycle_type_power(cycle_type(g), a) == cycle_type(power(g, a))


@pytest.mark.parametrize("text,degree,expected", [
    ("1^3 2^1", None, ((1, 3), (2, 1))),
    ("[2^1]", 5, ((1, 3), (2, 1))),
    ("5", None, ((5, 1),)),
    ("2 2 3", 9, ((1, 2), (2, 2), (3, 1))),
])
def test_cycle_type_parse(text, degree, expected):
    assert CycleType.parse(text, degree).counts == expected


def test_cycle_type_parse_rejects_short_degree():
    with pytest.raises(ValueError):
        CycleType.parse("5^1", 3)


def test_cycle_type_sparse_at_large_degree():
    ct = CycleType.parse("7^86400", 604800)
    assert ct.order == 7
    assert ct.power(7) == CycleType.parse("1^604800")
    assert ct.power(3) == ct


def test_a5_five_cycles_split():
    g = from_cycles(5, [(0, 1, 2, 3, 4)])
    assert not conjugate_in_An(g, power(g, 2))
    assert conjugate_in_An(g, power(g, 4))
    assert an_label_of(g) != an_label_of(power(g, 2))


def _even_types(n):
    def parts(m, largest):
        if m == 0:
            yield []
            return
        for k in range(min(m, largest), 0, -1):
            for rest in parts(m - k, k):
                yield [k] + rest
    for p in parts(n, n):
        ct = CycleType.from_lengths(p)
        if ct.is_even:
            yield ct


@pytest.mark.parametrize("n", range(2, 7))
def test_an_class_splits_matches_conjugacy(n):
    A = alternating(n)
    for ct in _even_types(n):
        g = ct.representative()
        t = from_cycles(n, [(0, 1)])
        splits = not conjugate_in_An(g, mul(mul(t, g), t))
        assert an_class_splits(ct) == splits, ct
        # class count in A_n agrees as well
        size = sum(s for rep, s in A.classes if cycle_type(rep) == ct)
        assert size > 0


def test_an_class_splits_rejects_odd():
    with pytest.raises(ValueError):
        an_class_splits(CycleType.parse("2^1", 4))


def test_class_counts_of_small_groups():
    assert len(symmetric(5).classes) == 7
    assert len(alternating(5).classes) == 5
    assert len(dihedral(4).classes) == 5
    assert sum(s for _, s in symmetric(4).classes) == 24
    assert psl2_group(5).order == 60
    assert psl2_group(7).order == 168
    assert len(psl2_group(7).classes) == 6


def test_psl2_class_orders():
    orders = sorted(perm_order(rep) for rep, _ in psl2_group(7).classes)
    assert orders == [1, 2, 3, 4, 7, 7]


def test_power_closure_s5_trinomial_triple():
    S5 = symmetric(5)
    triple = [SnType(CycleType.parse(t, 5)) for t in ("2^1 3^1", "1^3 2^1", "5^1")]
    closure = power_closure(S5, triple)
    types = {str(C.ct) for C in closure}
    assert types == {"2^1 3^1", "1^2 3^1", "1^3 2^1", "5^1", "1^5"}
    assert SnType(CycleType.parse("1^1 4^1")) not in closure


def test_class_power_in_an_uses_split_labels():
    A5 = alternating(5)
    g = from_cycles(5, [(0, 1, 2, 3, 4)])
    C = an_label_of(g)
    assert isinstance(C, AnType)
    assert class_power(A5, C, 2) == an_label_of(power(g, 2))
    assert class_power(A5, C, 2) != C


def test_rational_class_sets():
    S5 = symmetric(5)
    assert is_rational_class_set(S5, [SnType(CycleType.parse("5^1"))])
    A5 = alternating(5)
    five = an_label_of(from_cycles(5, [(0, 1, 2, 3, 4)]))
    assert not is_rational_class_set(A5, [five])


SMALL_GROUPS = {
    "S3": lambda: symmetric(3),
    "A4": lambda: alternating(4),
    "S4": lambda: symmetric(4),
    "D4": lambda: dihedral(4),
    "Z6": lambda: cyclic(6),
}


@pytest.mark.parametrize("name", ["S3", "D4", "Z6"])
def test_g_complete_matches_subgroup_oracle(name):
    G = SMALL_GROUPS[name]()
    labels = G.class_labels()
    for r in range(1, len(labels) + 1):
        for subset in itertools.combinations(labels, r):
            assert is_g_complete(G, subset).complete == is_g_complete_by_subgroups(G, subset), subset


def test_g_complete_witness_is_non_generating():
    S4 = symmetric(4)
    trans = S4.label_of(from_cycles(4, [(0, 1)]))
    res = is_g_complete(S4, [trans])
    assert not res.complete
    assert not S4.generated_by(res.witness)


def test_s5_trinomial_triple_is_g_complete():
    S5 = symmetric(5)
    triple = [S5.label_of(CycleType.parse(t, 5).representative()) for t in ("2^1 3^1", "1^3 2^1", "5^1")]
    assert is_g_complete(S5, triple).complete


@pytest.mark.parametrize("G", [klein_four(), symmetric(4), dihedral(4), cyclic(6)], ids=str)
def test_class_set_search_finds_witness(G):
    found = find_class_set_cor53(G)
    assert found is not None
    classes, missing = found
    assert missing not in power_closure(G, classes)


@pytest.mark.parametrize("n", [2, 3, 4, 8, 9])
def test_class_set_search_fails_for_cyclic_prime_power(n):
    assert find_class_set_cor53(cyclic(n)) is None


def test_real_tuple_construction_s4():
    rt = real_tuple_construction(symmetric(4))
    assert rt.verified


def test_group_wire_round_trip():
    for G in (symmetric(6), alternating(7), cyclic(5), klein_four(), psl2_group(5), dihedral(3)):
        assert group_from_wire(group_to_wire(G)) == G


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 7), st.randoms(use_true_random=False))
def test_conjugate_in_an_agrees_with_class_enumeration(n, rnd: random.Random):
    A = alternating(n)
    g, h = rnd.choice(A.elements), rnd.choice(A.elements)
    assert conjugate_in_An(g, h) == (A.class_index(g) == A.class_index(h))
