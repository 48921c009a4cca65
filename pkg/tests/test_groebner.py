from itertools import product
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lwe_groebner.algebra import DRL_ORDER, LEX_ORDER, Polynomial, PrimeField, parse_polynomial, reduce
from lwe_groebner.errors import CapExceeded, DegreeTooLow, NotZeroDimensional, UnitIdeal
from lwe_groebner.groebner import (
    IN_GENERIC_COORDINATES, NOT_DETECTED, binary_iteration_dreg, build_macaulay, buchberger, count_columns,
    degree_of_regularity, extract_solutions, generic_coordinates_test, is_groebner_basis, lazard_solve,
    macaulay_bound, refined_solve, refined_solving_degree, regularity_basis, system_macaulay_bound,
)
from lwe_groebner.lwe_model import LweParams, build_arora_ge, domain_polynomial, sample_full_rank

from strategies import as_term_sets, brute_force_zeros, polynomials, sympy_reduced_gb

F7 = PrimeField(7)


def P(text, n=2, field=F7):
    return parse_polynomial(text, field, n)


# -- Macaulay matrices --------------------------------------------------------

def test_macaulay_inhomogeneous_example():
    f = P("1*x1^2+6*x1", n=1)
    M = build_macaulay([f], 3)
    assert M.columns == [(3,), (2,), (1,), (0,)]
    assert [label[1] for label in M.row_labels] == [(1,), (0,)]
    assert M.row_polynomial(0) == f * P("1*x1", n=1)
    assert M.row_polynomial(1) == f


def test_macaulay_homogeneous_example():
    M = build_macaulay([P("1*x1+1*x2")], 2, homogeneous=True)
    assert M.shape == (2, 3)
    assert {label[1] for label in M.row_labels} == {(1, 0), (0, 1)}


def test_column_counts():
    assert count_columns(3, 4, homogeneous=True) == comb(6, 4) == 15
    assert count_columns(3, 4, homogeneous=False) == sum(comb(2 + k, k) for k in range(5))


@given(st.lists(polynomials(q=5, nvars=2, nonzero=True, max_degree=2), min_size=1, max_size=3), st.integers(0, 2))
def test_rows_are_labelled_products(F, extra):
    d = max(int(f.degree()) for f in F) + extra
    M = build_macaulay(F, d)
    keys = [DRL_ORDER.key(c) for c in M.columns]
    assert all(a > b for a, b in zip(keys, keys[1:]))
    for i, (gi, shift) in enumerate(M.row_labels):
        assert M.row_polynomial(i) == F[gi].shift(shift)


def test_degree_too_low():
    with pytest.raises(DegreeTooLow):
        build_macaulay([P("1*x1^3")], 2)


# -- engines -----------------------------------------------------------------

def test_linear_system_solves_at_degree_one():
    F = [P("1*x1+6"), P("1*x2+5")]
    res, d = lazard_solve(F)
    assert d == 1
    assert as_term_sets(res.basis) == as_term_sets(F)


def test_already_groebner():
    F = [P("1*x1^2+6*x1"), P("1*x1*x2"), P("1*x2^2+6*x2")]
    res, d = lazard_solve(F)
    assert d == 2
    assert as_term_sets(res.basis) == sympy_reduced_gb(F)


def test_square_system_within_macaulay_bound():
    inst = sample_full_rank(LweParams(11, 2, 2, error_domain=(0, 1), t=None), 1)
    F = build_arora_ge(inst).expanded
    res, d = lazard_solve(F)
    assert d <= macaulay_bound([2, 2], 2) == 3
    assert d <= (2 + 1) * (2 - 1) + 1


def test_cap_exceeded_reports_profile():
    # x1*x2 - 1, x1^2 - x2 needs degree above 2
    F = [P("1*x1*x2+6"), P("1*x1^2+6*x2")]
    with pytest.raises(CapExceeded) as info:
        lazard_solve(F, d_cap=2)
    assert info.value.profile["cap"] == 2
    assert info.value.profile["profile"][0]["d"] == 2


def test_unit_ideal_detected():
    F = [P("1*x1+6"), P("1*x1+5")]
    res, _ = lazard_solve(F)
    assert res.is_unit
    assert extract_solutions(res) == []


@st.composite
def small_systems(draw):
    q = draw(st.sampled_from([5, 7, 11]))
    n = draw(st.integers(1, 3))
    k = draw(st.integers(1, 3))
    return [draw(polynomials(q=q, nvars=n, nonzero=True, max_degree=2, max_terms=4)) for _ in range(k)]


@given(small_systems())
@settings(max_examples=40)
def test_lazard_matches_sympy(F):
    try:
        res, _ = lazard_solve(F, d_cap=8)
    except CapExceeded:
        return
    assert as_term_sets(res.basis) == sympy_reduced_gb(F)


@given(small_systems(), st.sampled_from([DRL_ORDER, LEX_ORDER]))
@settings(max_examples=40)
def test_buchberger_matches_sympy(F, order):
    res = buchberger(F, order)
    assert as_term_sets(res.basis) == sympy_reduced_gb(F, "grevlex" if order is DRL_ORDER else "lex")
    assert is_groebner_basis(res.basis, order, generators=F)


def test_buchberger_lex_example():
    F = [P("1*x1*x2+6"), P("1*x1^2+6*x2")]
    G = buchberger(F, LEX_ORDER).basis
    assert is_groebner_basis(G, LEX_ORDER, generators=F)
    assert as_term_sets(G) == sympy_reduced_gb(F, "lex")


def test_buchberger_triangular_is_fixed():
    F = [P("1*x1^3+6*x1"), P("1*x2^2+6*x2")]
    res = buchberger(F)
    assert as_term_sets(res.basis) == as_term_sets(F)
    assert res.stats["pairs"] == 0


def test_refined_example():
    F = [P("1*x1^2+6*x2"), P("1*x2^2+6*x1")]
    res, it = refined_solve(F, d=2)
    oracle = sympy_reduced_gb(F)
    if res:
        assert as_term_sets(res.basis) == oracle
    else:
        assert res.degree == 2
        # the oracle basis must then need a row outside the degree-2 span
        assert any(sum(e) > 2 for g in oracle for e, _ in g) or len(oracle) > res.rank
    n_monos = sum(comb(1 + k, k) for k in range(3))
    assert it <= n_monos - len(F) + 1


@pytest.mark.parametrize("seed", range(6))
def test_refined_not_above_lazard_and_bisection(seed):
    inst = sample_full_rank(LweParams(7, 2, 3, error_domain=(-1, 0, 1), t=None), seed)
    F = build_arora_ge(inst).expanded
    res_l, d_l = lazard_solve(F)
    res_r, d_r, _ = refined_solving_degree(F)
    assert d_r <= d_l
    assert as_term_sets(res_r.basis) == as_term_sets(res_l.basis)
    if d_r > 3:
        assert not refined_solve(F, d=d_r - 1)[0]


# -- regularity ---------------------------------------------------------------

def test_dreg_of_two_squares():
    prof = degree_of_regularity([P("1*x1^2"), P("1*x2^2")], cap=6)
    assert prof.d_reg == 3
    assert prof.per_degree_dims[2] == (2, 2, 3)


def test_dreg_minimal_case():
    F = [P("1*x1^2+1"), P("1*x1*x2"), P("1*x2^2+3*x1")]
    assert degree_of_regularity(F, cap=5).d_reg == 2


def test_dreg_infinite_up_to_cap():
    prof = degree_of_regularity([P("1*x1*x2")], cap=6)
    assert not prof.finite
    assert prof.to_dict()["d_reg"] == "infinite-up-to-cap"


@pytest.mark.parametrize("seed", range(5))
def test_binary_iteration_matches_capped_dreg(seed):
    from lwe_groebner.dist_analysis import random_square_free_quadratics

    rng = np.random.default_rng(seed)
    F = random_square_free_quadratics(5, 4, PrimeField(7), rng)
    a = degree_of_regularity(F, 5, quotient_exponent_caps=2).d_reg
    b = binary_iteration_dreg(F, 5)
    assert a == b


def test_generic_coordinates_examples():
    assert generic_coordinates_test([P("1*x1*x2+1")], cap=8) == NOT_DETECTED
    n = 3
    F = [domain_polynomial([0, 1], F7, n, i) for i in range(n)]
    assert generic_coordinates_test(F, cap=n + 1) == IN_GENERIC_COORDINATES
    with pytest.raises(UnitIdeal):
        generic_coordinates_test([P("1*x1+6"), P("1*x1+5")], cap=3)


@pytest.mark.parametrize("seed", range(5))
def test_arora_ge_in_generic_coordinates(seed):
    inst = sample_full_rank(LweParams(11, 3, 3, error_domain=(-1, 0, 1), t=None), seed)
    F = build_arora_ge(inst).expanded
    assert generic_coordinates_test(F, cap=system_macaulay_bound(F)) == IN_GENERIC_COORDINATES


@pytest.mark.parametrize("seed", range(6))
def test_dreg_at_most_solving_degree(seed):
    inst = sample_full_rank(LweParams(7, 2, 4, error_domain=(-1, 0, 1), t=None), seed)
    F = build_arora_ge(inst).expanded
    prof = degree_of_regularity(F, cap=system_macaulay_bound(F))
    _, d = lazard_solve(F)
    assert prof.finite and prof.d_reg <= d


def test_regularity_basis_properties():
    F = [P("1*x1^2+3*x2"), P("1*x2^2+1*x1+1"), P("1*x1*x2+2")]
    d = degree_of_regularity(F, 6).d_reg
    B = regularity_basis(F, d)
    assert max(b.degree() for b in B) <= d
    lms = [b.leading_monomial() for b in B]
    for e in product(range(d + 1), repeat=2):
        if sum(e) == d:
            assert any(all(x >= y for x, y in zip(e, lm)) for lm in lms)
    for b in B:
        if b.degree() == d:
            assert (b - Polynomial.monomial(F7, *b.leading_term())).degree() < d
    assert all(reduce(f, buchberger(B).basis).is_zero() for f in F)


# -- solutions ----------------------------------------------------------------

def test_extract_triangular():
    F = [P("1*x1+4"), P("1*x2^2+6*x2")]
    assert extract_solutions(buchberger(F)) == [(3, 0), (3, 1)]


def test_extract_positive_dimensional():
    with pytest.raises(NotZeroDimensional):
        extract_solutions(buchberger([P("1*x1*x2")]))


@pytest.mark.parametrize("seed", range(5))
def test_extract_planted_secret(seed):
    inst = sample_full_rank(LweParams(11, 3, 6, error_domain=(-1, 0, 1), t=None), seed)
    F = build_arora_ge(inst).expanded
    res, _ = lazard_solve(F)
    sols = extract_solutions(res)
    assert tuple(inst.secret) in sols
    assert sols == brute_force_zeros(F, 11, 3)
