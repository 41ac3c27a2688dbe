import cmath

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bchwork.bch import C, C_TILDE, build_code
from bchwork.errors import EvenM, EvenQ, FieldMismatch, NotPrime, UnsupportedM
from bchwork.tables import expected_weights
from bchwork.trace import (
    CharacterContext,
    TraceCodeSpec,
    character_identity_holds,
    characterize_min_weight,
    charsum_check,
    closed_form_weights,
    direct_weights,
    exponent_congruence_check,
    gauss_closed_form,
    gauss_sum,
    min_weight_census,
    min_weight_mask,
    odd_m_unit,
    pair_weights,
    predicted_weight,
    scaled_gauss,
    structure_facts,
    trace_codeword,
    trace_weight_distribution,
)
from bchwork.weights import weight_distribution

VARIANT = {"delta2": C_TILDE, "delta2-full": C, "delta3": C_TILDE, "delta3-full": C}


def pointwise_codeword(spec, a, b, c=0, e=0):
    """Oracle: evaluate the trace polynomial one position at a time."""
    F, sub = spec.field, spec.sub
    ex = spec.exponents
    out = []
    for j in range(spec.n):
        x = F.alpha_pow(j)
        val = F.add(F.mul(a, F.pow(x, ex[0])), F.mul(b, F.pow(x, ex[1])))
        if len(ex) > 2:
            val = F.add(val, F.mul(c, F.pow(x, ex[2])))
        t = sub.trace(val)
        out.append(int(sub.small.add(t, e)))
    return np.array(out)


def test_zero_parameters_give_zero_word():
    for family in VARIANT:
        assert not trace_codeword(TraceCodeSpec(3, 3, family), 0, 0).any()


def test_linear_term_alone_is_balanced():
    spec = TraceCodeSpec(2, 5)
    for b in (1, 2, 17, 31):
        assert np.count_nonzero(trace_codeword(spec, 0, b)) == 16


def test_pair_multiset_q3_m3():
    w = pair_weights(TraceCodeSpec(3, 3))
    vals, counts = np.unique(w, return_counts=True)
    assert dict(zip(vals.tolist(), counts.tolist())) == {0: 1, 15: 312, 18: 260, 21: 156}


@given(st.sampled_from(["delta2", "delta3-full"]), st.data())
def test_codeword_matches_pointwise_evaluation(family, data):
    spec = TraceCodeSpec(3, 3, family)
    order = spec.field.order
    a, b, c = (data.draw(st.integers(0, order - 1)) for _ in range(3))
    e = data.draw(st.integers(0, 2))
    if family == "delta2":
        c = e = 0
    assert np.array_equal(trace_codeword(spec, a, b, c, e), pointwise_codeword(spec, a, b, c, e))


def test_codeword_errors():
    spec = TraceCodeSpec(2, 4)
    with pytest.raises(FieldMismatch):
        trace_codeword(spec, 16, 0)
    with pytest.raises(FieldMismatch):
        trace_codeword(TraceCodeSpec(2, 4, "delta2-full"), 0, 0, e=2)


@pytest.mark.parametrize("family,q,m", [
    ("delta2", 2, 4), ("delta2", 2, 5), ("delta2-full", 2, 5), ("delta3", 2, 5),
    ("delta3-full", 2, 4), ("delta3", 3, 4), ("delta3-full", 3, 4), ("delta2", 3, 4),
    ("delta2-full", 3, 3), ("delta2", 4, 3)])
def test_trace_form_equals_polynomial_form(family, q, m):
    spec = TraceCodeSpec(q, m, family)
    dist, _ = trace_weight_distribution(spec)
    index = 2 if family.startswith("delta2") else 3
    assert dist == weight_distribution(build_code(q, m, f"auto{index}", VARIANT[family]))


def test_trace_distribution_matches_tables():
    dist, _ = trace_weight_distribution(TraceCodeSpec(2, 5))
    assert dist.counts == expected_weights(2, 5, 2).counts
    dist, _ = trace_weight_distribution(TraceCodeSpec(3, 4, "delta3"))
    assert dist.counts == expected_weights(3, 4, 3).counts


def test_gauss_examples():
    assert abs(gauss_sum(3) - 1j * 3**0.5) < 1e-12
    assert abs(gauss_sum(5) - 5**0.5) < 1e-12
    assert abs(scaled_gauss(5, 4) - 5**0.5) < 1e-12
    assert abs(scaled_gauss(5, 2) + 5**0.5) < 1e-12


@pytest.mark.parametrize("q", [3, 5, 7, 11, 13])
def test_gauss_magnitude_and_scaling(q):
    g = gauss_sum(q)
    assert abs(abs(g) - q**0.5) <= 1e-9 * q**0.5
    assert abs(g - gauss_closed_form(q)) <= 1e-9 * q**0.5
    for a in range(1, q):
        eta = 1 if pow(a, (q - 1) // 2, q) == 1 else -1
        assert abs(scaled_gauss(q, a) - eta * g) <= 1e-9 * q**0.5


def test_gauss_errors():
    with pytest.raises(EvenQ):
        gauss_sum(2)
    with pytest.raises(NotPrime):
        gauss_sum(9)


def test_characters_unit_modulus():
    ctx = CharacterContext(3, 3)
    vals = [ctx.chi_big(x) for x in range(27)]
    assert np.allclose(np.abs(vals), 1)
    assert abs(sum(vals)) < 1e-9
    assert ctx.chi(0) == 1
    assert sorted(ctx.eta(t) for t in (1, 2)) == [-1, 1]
    assert abs(ctx.chi(1) - cmath.exp(2j * cmath.pi / 3)) < 1e-12 or \
        abs(ctx.chi(1) - cmath.exp(-2j * cmath.pi / 3)) < 1e-12


@pytest.mark.parametrize("q,m", [(2, 4), (3, 3), (3, 4), (3, 6), (5, 3), (4, 3), (9, 2)])
def test_character_identity(q, m):
    assert character_identity_holds(q, m)


def test_predicted_examples():
    spec = TraceCodeSpec(3, 3)
    assert predicted_weight(spec, 0, 5) == (18, 18)

    spec = TraceCodeSpec(3, 4)
    F = spec.field
    qh = 9
    kernel = [a for a in range(1, 81) if F.add(F.pow(a, qh), a) == 0]
    regular = [a for a in range(1, 81) if F.add(F.pow(a, qh), a) != 0]
    assert predicted_weight(spec, kernel[0], 0) == (0, 0)
    # (q-1)(q^(m-1) + q^((m-2)/2)) = 2 * (27 + 3); (q-1)(q^(m-1) + q^(m/2)) = 72 never occurs
    assert predicted_weight(spec, regular[0], 0) == (60, 60)
    assert 72 not in set(pair_weights(spec).ravel().tolist())


@pytest.mark.parametrize("q,m", [(3, 3), (3, 4), (3, 5), (5, 3)])
def test_three_predictions_agree(q, m):
    rep = charsum_check(TraceCodeSpec(q, m))
    assert rep["direct_mismatches"] == 0
    assert rep["closed_form_mismatches"] == 0
    assert rep["max_imag"] < rep["tolerance"]
    assert sum(rep["case_tallies"].values()) == rep["pairs"] - 1
    assert rep["ok"]


def test_binary_direct_summation():
    spec = TraceCodeSpec(2, 5)
    direct, raw = direct_weights(spec)
    assert np.array_equal(direct, pair_weights(spec))
    with pytest.raises(EvenQ):
        closed_form_weights(spec)


def test_printed_odd_m_factor_fails_when_q_is_3_mod_4():
    spec = TraceCodeSpec(3, 3)
    truth = pair_weights(spec)
    assert not np.array_equal(closed_form_weights(spec, literal=True), truth)
    assert np.array_equal(closed_form_weights(spec), truth)
    assert odd_m_unit(3, 3) == -odd_m_unit(3, 3, literal=True)
    assert odd_m_unit(5, 3) == odd_m_unit(5, 3, literal=True) == 1
    with pytest.raises(EvenM):
        odd_m_unit(3, 4)


def test_characterization_examples():
    spec = TraceCodeSpec(3, 4)
    assert not any(characterize_min_weight(spec, 0, b) for b in range(81))
    census = min_weight_census(spec)
    assert census["sets_equal"]
    assert census["codewords"] == 480
    assert census["pairs_passing"] == 480 * census["multiplicity"]

    census = min_weight_census(TraceCodeSpec(3, 5))
    assert census["sets_equal"]
    assert census["pairs_passing"] == census["codewords"] == 21780


def test_characterization_matches_minimum_on_small_fields():
    for q, m in [(3, 3), (5, 3), (7, 3)]:
        spec = TraceCodeSpec(q, m)
        w = pair_weights(spec)
        assert np.array_equal(min_weight_mask(spec), w == w[w > 0].min())


def test_structure_fact_examples():
    rep = structure_facts(3, 3)
    assert rep["permutation_count"] == 26 and rep["ok"]
    rep = structure_facts(3, 4)
    assert rep["non_permutation_count"] == 8
    assert rep["kernel_solutions"] == 9
    assert rep["ok"]
    assert structure_facts(5, 4)["ok"] and structure_facts(3, 5)["ok"]
    with pytest.raises(EvenQ):
        structure_facts(2, 3)


def test_exponent_congruence_examples():
    assert exponent_congruence_check(3, 5)
    assert exponent_congruence_check(2, 5)
    assert exponent_congruence_check(5, 5)
    assert exponent_congruence_check(2, 7)
    with pytest.raises(EvenM):
        exponent_congruence_check(3, 4)
    with pytest.raises(UnsupportedM):
        exponent_congruence_check(3, 3)


def test_prime_power_is_labelled_experimental():
    rep = charsum_check(TraceCodeSpec(9, 3))
    assert rep["experimental"] is True
    assert rep["direct_mismatches"] == 0
    assert charsum_check(TraceCodeSpec(3, 3))["experimental"] is False
