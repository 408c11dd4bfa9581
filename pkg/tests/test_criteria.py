from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galois_param import criteria as C
from galois_param.algebra import RatPoly, is_square_rational
from galois_param.extensions import FieldKind, builder_quadratic_sqrt, fixture_names, load_fixture
from galois_param.groups import Abstract, CycleType, SnType, symmetric

V = C.Verdict
T = RatPoly([0, 1])


def test_all_of_precedence():
    e, r, i = V.established(), V.refuted("no"), V.inconclusive("?")
    m = V.empirical(100, [3, 7])
    assert C.all_of([e, m, i, r]).status == C.REFUTED
    assert C.all_of([e, m, i]).status == C.INCONCLUSIVE
    assert C.all_of([e, m]).status == C.EMPIRICAL
    assert C.all_of([e, e]).status == C.ESTABLISHED


def test_any_of_precedence():
    e, r, i = V.established(), V.refuted("no"), V.inconclusive("?")
    m = V.empirical(100, [3, 7])
    assert C.any_of([r, i, m, e]).status == C.ESTABLISHED
    assert C.any_of([r, i, m]).status == C.EMPIRICAL
    assert C.any_of([r, i]).status == C.INCONCLUSIVE
    assert C.any_of([r, r]).status == C.REFUTED


def test_order_only_outside():
    assert C.order_only_outside(19, [2, 3, 55]).status == C.ESTABLISHED
    assert C.order_only_outside(5, [2, 3, 55]).status == C.INCONCLUSIVE


def test_four_cycle_outside_s5_trinomial_closure():
    morse = load_fixture("morse_y5_plus_y")
    tri = load_fixture("trinomial_s5")
    four = SnType(CycleType.parse("1^1 4^1"))
    assert C.class_outside_closure(four, morse, tri).status == C.ESTABLISHED
    five = SnType(CycleType.parse("5^1"))
    assert C.class_outside_closure(five, morse, tri).status == C.REFUTED


@pytest.mark.parametrize("name", fixture_names())
def test_self_comparison_is_refuted(name):
    E = load_fixture(name)
    assert C.eval_inertia_hypothesis(E, E).overall.status == C.REFUTED


_RANK = {C.REFUTED: 0, C.INCONCLUSIVE: 1, C.EMPIRICAL: 2, C.ESTABLISHED: 3}


@pytest.mark.parametrize("name", fixture_names())
def test_branch_point_hypothesis_monotone_in_prime_bound(name):
    E2 = load_fixture(name)
    E1 = load_fixture("sqrt_t")
    lo = C.eval_branch_point_hypothesis(E1, E2, prime_bound=500)
    hi = C.eval_branch_point_hypothesis(E1, E2, prime_bound=3000)
    assert _RANK[hi.overall.status] >= _RANK[lo.overall.status]
    assert len(hi.certificates.get("witnesses", [])) >= len(lo.certificates.get("witnesses", []))


def test_branch_point_hypothesis_phi5():
    rep = C.eval_branch_point_hypothesis(load_fixture("sqrt_t"), load_fixture("sqrt_phi5"))
    assert rep.overall.status == C.EMPIRICAL
    assert rep.overall.witness_count >= 100
    assert all(p % 5 not in (0, 1) for p in rep.overall.witnesses)


def test_branch_point_hypothesis_gated_by_rational_branch_point():
    rep = C.eval_branch_point_hypothesis(load_fixture("sqrt_phi5"), load_fixture("sqrt_t"))
    assert rep.overall.status == C.INCONCLUSIVE


def test_field_hypothesis_failure_is_inconclusive():
    E1 = load_fixture("trinomial_s5")
    E2 = load_fixture("morse_y5_plus_y")
    rep = C.eval_inertia_criterion(3, E1, E2)
    assert rep.overall.status == C.ESTABLISHED
    wire = E2.to_wire()
    wire["field"] = FieldKind("dedekind").to_wire()
    E2d = type(E2).from_wire(wire)
    rep = C.eval_inertia_criterion(3, E1, E2d)
    assert rep.conditions["(IC3-2)"].status == C.REFUTED
    assert rep.overall.status == C.INCONCLUSIVE


def test_inertia_criterion_rejects_bad_variant():
    E = load_fixture("sqrt_t")
    with pytest.raises(ValueError):
        C.eval_inertia_criterion(4, E, E)


def test_ramification_variant_orbit_choice():
    th, b = C.thompson_descriptor(), C.baby_monster_descriptor()
    assert C.eval_ramification_variant(th, b).status == C.ESTABLISHED
    j2, morse = C.j2_descriptor(), C.morse_class_descriptor(604807)
    assert C.eval_ramification_variant(j2, morse, orbits="rational").status == C.REFUTED
    assert C.eval_ramification_variant(j2, morse, orbits="all").status == C.ESTABLISHED


def test_g_complete_condition_in_ic1():
    tri = load_fixture("trinomial_s5")
    morse = load_fixture("morse_y5_plus_y")
    rep = C.eval_inertia_criterion(1, morse, tri)
    assert rep.conditions["(IC1-3)"].status == C.ESTABLISHED


nz = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@settings(max_examples=100, deadline=None)
@given(nz, nz, nz)
def test_quadratic_parametricity_classification(a, b, c):
    disc = b * b - 4 * a * c
    if disc == 0:
        return
    rep = C.case_prop31(a, b, c, count=3)
    assert (rep.overall.status == C.ESTABLISHED) == is_square_rational(disc)


def test_sqrt_t2_plus_1_refuted_by_primes_3_mod_4():
    rep = C.case_prop31()
    assert rep.overall.status == C.REFUTED
    assert rep.overall.counterexample == [3, 7, 11, 19, 23, 31, 43, 47, 59, 67]


def test_orbit_splitting_fields_disjointness():
    f2, f3, f8 = T * T - 2, T * T - 3, T * T - 8
    E = builder_quadratic_sqrt(f2 * f3, factors=[f2, f3])
    rep = C.eval_cor61(E)
    assert rep.conditions["(1) linear disjointness"].status == C.ESTABLISHED
    E = builder_quadratic_sqrt(f2 * f8, factors=[f2, f8])
    assert C.eval_cor61(E).conditions["(1) linear disjointness"].status == C.REFUTED


@pytest.mark.parametrize("n", [4, 5, 6, 7, 9, 12, 101])
def test_sn_general_morse(n):
    rep = C.eval_sn_general(C.morse_class_descriptor(n))
    # Morse inertia is [1^(n-2) 2^1] and [n^1]: every [m^1 (n-m)^1] is absent
    assert rep.conditions["(1)"].status == C.REFUTED
    assert rep.conditions["(2)"].status == C.ESTABLISHED


def test_sn_general_trinomial_s4_has_every_needed_class():
    rep = C.case_cor72(4, "E2")
    assert rep.overall.status == C.REFUTED


@pytest.mark.parametrize("case,expected", [
    ("prop32", C.ESTABLISHED),
    ("prop34", C.ESTABLISHED),
    ("cor53_search", C.ESTABLISHED),
    ("cor66", C.ESTABLISHED),
    ("cor75", C.ESTABLISHED),
    ("cor76", C.ESTABLISHED),
    ("cor77", C.ESTABLISHED),
    ("cor79", C.ESTABLISHED),
    ("cor710", C.ESTABLISHED),
])
def test_case_study_defaults(case, expected):
    assert C.run_case_study(case).overall.status == expected


@pytest.mark.parametrize("case", ["cor64", "cor65"])
def test_census_case_studies_are_empirical(case):
    assert C.run_case_study(case).overall.status == C.EMPIRICAL


@pytest.mark.parametrize("n", range(604800, 604811))
def test_j2_against_morse_family_rational_orbits(n):
    v = C.eval_ramification_variant(C.j2_descriptor(), C.morse_class_descriptor(n), orbits="rational")
    assert (v.status == C.ESTABLISHED) == (n % 7 != 0)


@pytest.mark.parametrize("p,expected", [(2, C.ESTABLISHED), (7, C.ESTABLISHED), (11, C.ESTABLISHED),
                                        (23, C.ESTABLISHED), (3, C.REFUTED), (5, C.REFUTED),
                                        (13, C.REFUTED), (17, C.INCONCLUSIVE)])
def test_co1_prime_condition(p, expected):
    assert C.case_cor710(p).overall.status == expected


def test_unknown_case():
    with pytest.raises(KeyError):
        C.run_case_study("nope")


def test_abstract_label_fallback_uses_orders():
    e1, e2 = C.monster_descriptors()
    v = C.class_outside_closure(Abstract("71?", 71), e2, e1)
    assert v.status == C.ESTABLISHED


def test_named_group():
    assert C.named_group("S5") == symmetric(5)
    assert C.named_group("PSL2(7)").order == 168
    assert C.named_group("V4").order == 4
