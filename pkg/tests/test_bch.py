import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bchwork.bch import (
    C,
    C_TILDE,
    bose_distance,
    build_code,
    dimension_formula,
    encode,
    generic_delta3,
    normalize_variant,
)
from bchwork.cyclotomic import closed_form_leader, union_of_cosets
from bchwork.errors import DeltaOutOfRange, LengthMismatch, UnsupportedM
from bchwork.polyring import Poly, x_n_minus_one
from bchwork.weights import weight_distribution

GRID = [(2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (3, 3), (3, 4), (3, 5), (4, 3), (5, 3)]


def test_build_examples():
    assert build_code(2, 4, 5, C).k == 7
    assert build_code(2, 5, 11, C_TILDE).k == 10
    assert build_code(3, 4, 44, C_TILDE).k == 10


def test_dimension_formula_examples():
    assert dimension_formula(2, 6, 2, C_TILDE) == 9
    assert dimension_formula(2, 7, 3, C) == 22
    assert dimension_formula(3, 3, 3, C_TILDE) == 7
    assert dimension_formula(3, 3, 3, C) == 8


@pytest.mark.parametrize("q,m", GRID)
@pytest.mark.parametrize("index", [2, 3])
def test_dimension_formula_matches_construction(q, m, index):
    for variant in (C, C_TILDE):
        code = build_code(q, m, f"auto{index}", variant)
        assert code.k == dimension_formula(q, m, index, variant)
        assert code.delta == closed_form_leader(index, q, m)[0]
    assert build_code(q, m, f"auto{index}", C).k == build_code(q, m, f"auto{index}", C_TILDE).k + 1


def test_bose_examples():
    assert bose_distance(build_code(2, 4, 5)) == 5
    assert bose_distance(build_code(2, 4, 4)) == 5
    assert bose_distance(build_code(2, 5, 11)) == 11


@pytest.mark.parametrize("q,m", GRID)
def test_generator_times_check_and_roots(q, m):
    for index in (2, 3):
        for variant in (C, C_TILDE):
            code = build_code(q, m, f"auto{index}", variant)
            small = code.generator.field
            assert code.generator * code.check == x_n_minus_one(small, code.n)
            big, sub = code.field, code.sub
            for i in range(1, code.delta):
                assert code.generator.evaluate_in(sub, big.alpha_pow(i)) == 0
            one_is_root = code.generator.evaluate_in(sub, 1) == 0
            assert one_is_root == (variant == C_TILDE)
            assert code.zeros == union_of_cosets(range(1, code.delta), q, m) | (
                {0} if variant == C_TILDE else set())


def test_encode_trivial_cases():
    code = build_code(2, 5, 11, C_TILDE)
    assert not encode(code, [0] * code.k).any()
    msg = [1] + [0] * (code.k - 1)
    word = encode(code, msg)
    assert list(word[: code.generator.degree + 1]) == list(code.generator.coeffs)
    assert not word[code.generator.degree + 1:].any()


@pytest.mark.parametrize("q,m,index,variant", [
    (2, 5, 2, C_TILDE), (3, 4, 3, C), (4, 3, 2, C), (5, 3, 3, C_TILDE)])
def test_encode_roots_and_cyclic_closure(q, m, index, variant):
    code = build_code(q, m, f"auto{index}", variant)
    rng = np.random.default_rng(1234)
    big, sub = code.field, code.sub
    for _ in range(100):
        msg = rng.integers(0, q, code.k)
        word = encode(code, msg)
        assert code.contains(word)
        assert code.contains(np.roll(word, 1))
        poly = Poly(code.generator.field, word)
        for i in range(1, code.delta, max(1, code.delta // 10)):
            assert poly.evaluate_in(sub, big.alpha_pow(i)) == 0


@given(st.sampled_from([(2, 4), (2, 5), (3, 3)]), st.data())
def test_same_code_across_bose_window(qm, data):
    q, m = qm
    n = q**m - 1
    delta = data.draw(st.integers(2, n - 2))
    code = build_code(q, m, delta)
    bose = bose_distance(code)
    assert bose >= delta
    if bose < n:
        same = build_code(q, m, bose)
        assert same.generator == code.generator
        if code.k <= 12:
            assert weight_distribution(code) == weight_distribution(same)


def test_generic_delta3_at_m3():
    assert generic_delta3(3, 3) == 8
    assert build_code(3, 3, 8, C_TILDE).k == 10
    assert build_code(3, 3, 8, C).k == 11


def test_variant_aliases():
    assert normalize_variant("ctilde") == C_TILDE
    assert normalize_variant("c") == C
    with pytest.raises(ValueError):
        normalize_variant("d")


def test_errors():
    with pytest.raises(DeltaOutOfRange):
        build_code(2, 4, 1)
    with pytest.raises(DeltaOutOfRange):
        build_code(2, 4, 15)
    with pytest.raises(LengthMismatch):
        encode(build_code(2, 4, 5), [1, 0])
    with pytest.raises(LengthMismatch):
        build_code(2, 4, 5).contains([0] * 14)
    with pytest.raises(UnsupportedM):
        dimension_formula(2, 2, 3)
