from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lwe_groebner import estimator as est
from lwe_groebner.algebra import PrimeField, parse_polynomial
from lwe_groebner.errors import DegreeExceedsField, EmptyDomain, HintTooWide, NullHint
from lwe_groebner.hints import (
    Approximate, HammingWeight, Modular, Perfect, apply_approximate, apply_hints, apply_modular, apply_perfect,
    apply_value_set, dump_hints, hamming_candidates, hamming_weight, load_hints, project_point,
)
from lwe_groebner.lwe_model import LweParams, build_arora_ge, domain_polynomial, error_polynomial, sample_instance

from strategies import brute_force_zeros


def univariate_degree(system, var):
    degs = [f.degree() for f in system if f.variables() == [var]]
    return min(degs) if degs else None


# -- Hamming weights ----------------------------------------------------------

def test_signed16_weights():
    assert hamming_weight(3) == 2
    assert hamming_weight(-1) == 16
    assert hamming_weight(-2) == 15
    with pytest.raises(ValueError):
        hamming_weight(1 << 15)


def test_candidates_signed16():
    assert hamming_candidates(range(-5, 6), 2) == [3, 5]


def test_candidates_weight_zero():
    assert hamming_candidates(range(-5, 6), 0) == [0]
    assert hamming_candidates(range(-2, 3), 0, "signed_interval") == [0]


def test_candidates_signed_interval():
    assert hamming_candidates(range(-2, 3), 1, "signed_interval") == [1, 2]
    assert hamming_candidates(range(-2, 3), 2, "signed_interval") == [-2, -1]


@pytest.mark.xfail(strict=True, reason="no 16-bit representation yields {-2, 4}: 4 has weight 1 in both, "
                                       "and signed16 gives -2 weight 15")
@pytest.mark.parametrize("representation", ["signed16", "signed_interval"])
def test_candidates_with_modular_side_condition(representation):
    cands = hamming_candidates(range(-5, 6), 2, representation)
    assert [v for v in cands if v % 3 == 1] == [-2, 4]


def test_candidates_with_modular_side_condition_computed():
    cands = hamming_candidates(range(-5, 6), 2, "signed_interval")
    assert [v for v in cands if v % 3 == 1] == [-2]
    assert [v for v in hamming_candidates(range(-5, 6), 2) if v % 3 == 1] == []


def test_hint_validation():
    with pytest.raises(ValueError):
        Modular((1,), 0, 1)
    with pytest.raises(ValueError):
        HammingWeight(0, 17)
    with pytest.raises(ValueError):
        Approximate((1,), 0, -1.0)


# -- perfect hints ------------------------------------------------------------

F13 = PrimeField(13)


def test_perfect_substitution_example():
    f = parse_polynomial("1*x1^2+12*x1*x2", F13, 2)
    out, j = apply_perfect([f], Perfect((1, 0), 3))
    assert j == 0
    assert out == [parse_polynomial("9+10*x1", F13, 1)]  # 9 - 3 x2, renamed


def test_null_hint():
    f = parse_polynomial("1*x1^2", F13, 2)
    with pytest.raises(NullHint):
        apply_perfect([f], Perfect((0, 0), 3))
    with pytest.raises(NullHint):
        apply_modular([f], Modular((0, 0), 1, 3), [[0, 1]] * 2)


@pytest.mark.parametrize("seed", range(5))
def test_perfect_hint_keeps_projected_secret(seed):
    inst = sample_instance(LweParams(13, 3, 5, error_domain=(-1, 0, 1), t=None), seed)
    F = build_arora_ge(inst).expanded
    l = sum(inst.secret) % 13
    out, j = apply_perfect(F, Perfect((1, 1, 1), l))
    assert all(f.nvars == 2 for f in out)
    proj = project_point(inst.secret, j)
    assert all(f.evaluate(proj) == 0 for f in out)
    # solution sets correspond bijectively
    full = [p for p in brute_force_zeros(F, 13, 3) if sum(p) % 13 == l]
    assert sorted(tuple(project_point(p, j)) for p in full) == brute_force_zeros(out, 13, 2)


def test_two_perfect_hints():
    inst = sample_instance(LweParams(13, 3, 5, error_domain=(0, 1), t=None), 4)
    s = inst.secret
    F = build_arora_ge(inst).expanded
    out, elim = apply_hints(F, [Perfect((1, 0, 0), s[0]), Perfect((1, 0), s[1])])
    assert out[0].nvars == 1 and elim == [0, 0]
    assert all(f.evaluate([s[2]]) == 0 for f in out)


def test_perfect_hints_commute_with_estimation():
    inst = sample_instance(LweParams(13, 4, 8, error_domain=(0, 1), t=None), 2)
    F = build_arora_ge(inst).expanded
    out, _ = apply_hints(F, [Perfect((1, 2, 0, 0), 5)])
    rep = est.estimate(est.EstimationQuery(4, 8, 2, "general", 2.0, perfect_hints=1))
    assert out[0].nvars == rep.n_effective == 3


# -- value sets ---------------------------------------------------------------

def test_value_set_replaces_interval():
    F = PrimeField(3329)
    system = [domain_polynomial(range(-5, 6), F, 1, 0)]
    assert univariate_degree(system, 0) == 11
    out = apply_value_set(system, 0, hamming_candidates(range(-5, 6), 2))
    assert univariate_degree(out, 0) == 2
    assert {v for v in range(3329) if all(f.evaluate([v]) == 0 for f in out)} == {3, 5}


def test_value_set_small_interval():
    F = PrimeField(3329)
    system = [domain_polynomial(range(-2, 3), F, 2, 1)]
    out = apply_value_set(system, 1, hamming_candidates(range(-2, 3), 1, "signed_interval"))
    assert univariate_degree(out, 1) == 2
    out0 = apply_value_set(system, 1, hamming_candidates(range(-2, 3), 0, "signed_interval"))
    assert univariate_degree(out0, 1) == 1


def test_value_set_errors():
    F = PrimeField(11)
    system = [domain_polynomial([0, 1], F, 1, 0)]
    with pytest.raises(EmptyDomain):
        apply_value_set(system, 0, [])
    with pytest.raises(EmptyDomain):
        apply_value_set(system, 0, [5, 6])


@given(st.sets(st.integers(0, 10), min_size=1, max_size=8), st.sets(st.integers(0, 10), min_size=1, max_size=11))
def test_value_set_never_raises_degree(current, values):
    F = PrimeField(11)
    system = [domain_polynomial(sorted(current), F, 2, 0)]
    before = univariate_degree(system, 0)
    try:
        out = apply_value_set(system, 0, sorted(values))
    except EmptyDomain:
        assert not current & values
        return
    assert univariate_degree(out, 0) <= before
    roots = {v for v in range(11) if all(f.evaluate([v, 0]) == 0 for f in out)}
    assert roots == current & values or roots == current


# -- modular and approximate hints ----------------------------------------------

def test_modular_hint_roots():
    F = PrimeField(13)
    system = [domain_polynomial([0, 1], F, 3, i) for i in range(3)]
    out = apply_modular(system, Modular((1, 1, 1), 1, 2), [[0, 1]] * 3)
    sols = brute_force_zeros(out, 13, 3)
    assert sols == sorted(p for p in product((0, 1), repeat=3) if sum(p) % 2 == 1)


def test_modular_too_wide():
    F = PrimeField(13)
    system = [domain_polynomial(range(13), F, 6, 0)]
    with pytest.raises(HintTooWide):
        apply_modular(system, Modular((1,) * 6, 0, 2), [list(range(13))] * 6)


def test_approximate_degrees():
    F = PrimeField(13)
    base = [error_polynomial(2, F, 2, 0)]
    out = apply_approximate(base, Approximate((1, 1), 4, 0.0))
    assert out[-1].degree() == 1
    out = apply_approximate(base, Approximate((1, 1), 4, 0.3), t=3.0)
    assert out[-1].degree() == 3 < error_polynomial(2, F).degree()
    with pytest.raises(DegreeExceedsField):
        apply_approximate(base, Approximate((1, 1), 4, 3.0), t=3.0)


@pytest.mark.parametrize("seed", range(8))
def test_honest_hints_keep_secret(seed):
    rng = np.random.default_rng(seed)
    n, q = int(rng.integers(2, 5)), int(rng.choice([7, 11, 13]))
    inst = sample_instance(LweParams(q, n, n + 2, error_domain=(-1, 0, 1), t=None, secret_domain=(-2, -1, 0, 1, 2)),
                           seed)
    s = inst.secret
    lifted = [PrimeField(q).lift(x) for x in s]
    F = build_arora_ge(inst).expanded + [domain_polynomial(range(-2, 3), PrimeField(q), n, i) for i in range(n)]
    v = [int(x) for x in rng.integers(0, 3, size=n)]
    v[0] = 1
    inner = sum(a * b for a, b in zip(v, lifted))
    e = int(rng.integers(-1, 2))
    hints = [
        Modular(tuple(v), inner % 3, 3),
        Approximate(tuple(v), (inner + e) % q, 0.34),
        HammingWeight(n - 1, hamming_weight(lifted[-1], "signed_interval"), "signed_interval"),
    ]
    out, _ = apply_hints(F, hints, domain=range(-2, 3), t=3.0)
    assert tuple(s) in brute_force_zeros(out, q, n)


# -- JSON ---------------------------------------------------------------------

def test_hints_json_round_trip():
    hints = [Perfect((1, 0, 2), 3), Modular((1, 1, 1), 1, 2), Approximate((0, 1, 1), 5, 0.5),
             HammingWeight(2, 3, "signed_interval")]
    assert load_hints(dump_hints(hints)) == hints
    assert load_hints('[{"kind":"hamming","var":0,"weight":2,"repr":"signed16"}]') == [HammingWeight(0, 2)]
