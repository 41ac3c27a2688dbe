from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bchwork.errors import (
    CapExceeded,
    FieldDivisionByZero,
    FieldMismatch,
    NotASubfield,
    NotPrime,
)
from bchwork.gf import extension_field, make_field, prime_power, symbol_tables


def naive_mulmod(a, b, f, p):
    """Schoolbook product of coefficient lists reduced by monic f, all over GF(p)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    d = len(f) - 1
    for s in range(len(out) - 1, d - 1, -1):
        c = out[s]
        if c:
            for j in range(d + 1):
                out[s - d + j] = (out[s - d + j] - c * f[j]) % p
    return (out + [0] * d)[:d]


def order_of_x(f, p):
    d = len(f) - 1
    x = [0, 1] + [0] * (d - 2) if d > 1 else [(-f[0]) % p]
    one = [1] + [0] * (d - 1)
    y, k = list(x), 1
    while y != one:
        y = naive_mulmod(y, x, f, p)
        k += 1
        if k > p**d:
            return None
    return k


def smallest_primitive(p, d):
    """First monic degree-d polynomial, in the package's integer order, with x of order p^d - 1."""
    for code in range(p**d):
        low = [(code // p**i) % p for i in range(d)]
        f = low + [1]
        if f[0] == 0:
            continue
        if order_of_x(f, p) == p**d - 1:
            return tuple(f)
    return None


@pytest.mark.parametrize("p,d", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_modulus_is_smallest_primitive(p, d):
    F = make_field(p, d)
    assert F.modulus == smallest_primitive(p, d)
    assert F.order_of(F.alpha) == p**d - 1


def test_gf2_prime_field():
    F = make_field(2, 1)
    assert F.order == 2 and F.alpha == 1


def test_gf16_modulus_and_alpha():
    F = make_field(2, 4)
    assert F.modulus == (1, 1, 0, 0, 1)  # x^4 + x + 1
    assert F.order_of(F.alpha) == 15
    assert F.pow(F.alpha, 4) == F.add(F.alpha, 1)
    assert F.pow(F.alpha, 15) == 1


def test_gf27_alpha_order_exhaustive():
    F = make_field(3, 3)
    seen, x = set(), 1
    for _ in range(26):
        x = F.mul(x, F.alpha)
        seen.add(x)
    assert len(seen) == 26 and x == 1


def test_gf16_inverses():
    F = make_field(2, 4)
    for a in range(1, 16):
        assert F.mul(F.inv(a), a) == 1


def test_trace_examples_gf16():
    F = make_field(2, 4)
    a = F.alpha
    manual = F.add(F.add(a, F.pow(a, 2)), F.add(F.pow(a, 4), F.pow(a, 8)))
    assert F.trace(a, 2) == manual == 0
    assert F.trace(1, 2) == 0
    assert F.trace(0, 2) == 0


@pytest.mark.parametrize("p,d", [(2, 4), (3, 3), (2, 6), (5, 2)])
def test_axioms_exhaustive_pairs(p, d):
    F = make_field(p, d)
    xs = F.elements()
    a, b = np.meshgrid(xs, xs, indexing="ij")
    a, b = a.ravel(), b.ravel()
    assert np.array_equal(F.vadd(a, b), F.vadd(b, a))
    assert np.array_equal(F.vmul(a, b), F.vmul(b, a))
    # scalar and vector paths agree
    for x, y in zip(a[:: max(1, a.size // 400)], b[:: max(1, a.size // 400)]):
        assert F.add(int(x), int(y)) == F.vadd(np.array([x]), np.array([y]))[0]
        assert F.mul(int(x), int(y)) == F.vmul(np.array([x]), np.array([y]))[0]
    for c in range(0, F.order, max(1, F.order // 7)):
        lhs = F.vmul(np.full_like(a, c), F.vadd(a, b))
        rhs = F.vadd(F.vmul(np.full_like(a, c), a), F.vmul(np.full_like(b, c), b))
        assert np.array_equal(lhs, rhs)


FIELDS = [(2, 4), (2, 8), (3, 3), (3, 5), (5, 3), (7, 2), (2, 12), (3, 7)]


@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms_random(pd, data):
    F = make_field(*pd)
    el = st.integers(0, F.order - 1)
    x, y, z = data.draw(el), data.draw(el), data.draw(el)
    assert F.add(F.add(x, y), z) == F.add(x, F.add(y, z))
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.add(x, F.neg(x)) == 0
    assert F.sub(F.add(x, y), y) == x
    if x:
        assert F.mul(x, F.inv(x)) == 1
        assert F.div(F.mul(x, y), x) == y


@given(st.sampled_from([(2, 5), (3, 3), (5, 2)]), st.data())
def test_table_free_arithmetic_matches(pd, data):
    F = make_field(*pd)
    G = make_field(*pd, tables=False)
    x = data.draw(st.integers(0, F.order - 1))
    y = data.draw(st.integers(0, F.order - 1))
    e = data.draw(st.integers(-50, 50))
    assert F.mul(x, y) == G.mul(x, y)
    if x:
        assert F.pow(x, e) == G.pow(x, e)
        assert F.log_of(x) == G.log_of(x)


@pytest.mark.parametrize("p,d", [(2, 10), (3, 6), (5, 4)])
def test_frobenius_additive_all_pairs(p, d):
    F = make_field(p, d)
    xs = F.elements()
    a = np.repeat(xs, xs.size)
    b = np.tile(xs, xs.size)
    lhs = F.vpow(F.vadd(a, b), p)
    rhs = F.vadd(F.vpow(a, p), F.vpow(b, p))
    assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("q,m", [(2, 4), (2, 6), (3, 3), (3, 4), (4, 3), (5, 2), (9, 2), (8, 2)])
def test_trace_fixed_by_frobenius_and_balanced(q, m):
    F = extension_field(q, m)
    t = F.vtrace(F.elements(), q)
    assert np.array_equal(F.vpow(t, q), t)
    sub = F.subfield(q)
    small = sub.vto_small(t)
    counts = np.bincount(small, minlength=q)
    assert np.all(counts == q ** (m - 1))


@given(st.sampled_from([(2, 6), (3, 4), (4, 3)]), st.data())
def test_trace_is_linear_over_subfield(qm, data):
    q, m = qm
    F = extension_field(q, m)
    sub = F.subfield(q)
    x = data.draw(st.integers(0, F.order - 1))
    y = data.draw(st.integers(0, F.order - 1))
    c = sub.from_small(data.draw(st.integers(0, q - 1)))
    lhs = F.trace(F.add(F.mul(c, x), y), q)
    rhs = F.add(F.mul(c, F.trace(x, q)), F.trace(y, q))
    assert lhs == rhs


@pytest.mark.parametrize("q,m", [(4, 2), (4, 3), (8, 2), (9, 2)])
def test_subfield_embedding_is_a_homomorphism(q, m):
    F = extension_field(q, m)
    sub = F.subfield(q)
    add, mul = symbol_tables(q)
    for a, b in product(range(q), repeat=2):
        ea, eb = sub.from_small(a), sub.from_small(b)
        assert F.add(ea, eb) == sub.from_small(int(add[a, b]))
        assert F.mul(ea, eb) == sub.from_small(int(mul[a, b]))
        assert F.pow(ea, q) == ea


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(2) == (2, 1)
    with pytest.raises(NotPrime):
        prime_power(12)


def test_errors():
    with pytest.raises(NotPrime):
        make_field(4, 2)
    with pytest.raises(CapExceeded):
        make_field(2, 25)
    F = make_field(2, 4)
    with pytest.raises(FieldDivisionByZero):
        F.inv(0)
    with pytest.raises(FieldMismatch):
        F.add(16, 1)
    with pytest.raises(NotASubfield):
        F.trace(3, 8)
    with pytest.raises(NotASubfield):
        F.subfield(4).to_small(F.alpha)
    big = make_field(2, 30, tables=False)
    assert big.mul(big.alpha, 1) == big.alpha
