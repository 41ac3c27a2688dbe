"""Narrow-sense primitive BCH codes C(q,m,delta) and their subcodes C~(q,m,delta).

``C`` has generator lcm(m_1, ..., m_{delta-1}); ``C-tilde`` additionally has the
root 1, i.e. generator (x - 1) * g.  Both are cyclic of length n = q^m - 1.
"""

from dataclasses import dataclass, field as dc_field

import numpy as np

from .cyclotomic import closed_form_leader, union_of_cosets
from .errors import DeltaOutOfRange, LengthMismatch, UnsupportedM
from .gf import extension_field
from .polyring import Poly, minimal_polynomial, poly_lcm, x_n_minus_one

C = "C"
C_TILDE = "C-tilde"
_ALIASES = {
    "c": C,
    "C": C,
    "ctilde": C_TILDE,
    "c-tilde": C_TILDE,
    "C-tilde": C_TILDE,
    "Ctilde": C_TILDE,
    "tilde": C_TILDE,
}


def normalize_variant(variant):
    try:
        return _ALIASES[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; use 'C' or 'C-tilde'") from None


@dataclass(frozen=True)
class BchCode:
    q: int
    m: int
    n: int
    delta: int
    variant: str
    generator: Poly
    check: Poly
    field: object = dc_field(repr=False, compare=False)

    @property
    def k(self):
        return self.n - self.generator.degree

    @property
    def is_tilde(self):
        return self.variant == C_TILDE

    @property
    def sub(self):
        return self.field.subfield(self.q)

    @property
    def modulus(self):
        return self.field.modulus

    @property
    def zeros(self):
        """Exponents i with generator(alpha^i) = 0."""
        z = union_of_cosets(range(1, self.delta), self.q, self.m)
        if self.is_tilde:
            z.add(0)
        return z

    def generator_matrix(self):
        """k x n matrix of small-field symbols whose rows are x^i g(x)."""
        g = np.array(self.generator.coeffs, dtype=np.uint8)
        G = np.zeros((self.k, self.n), dtype=np.uint8)
        for i in range(self.k):
            G[i, i : i + len(g)] = g
        return G

    def contains(self, word):
        """True if the symbol vector ``word`` (length n) is a codeword."""
        if len(word) != self.n:
            raise LengthMismatch(f"expected {self.n} symbols, got {len(word)}")
        return (Poly(self.generator.field, list(word)) % self.generator).is_zero()

    def params(self):
        return {"q": self.q, "m": self.m, "n": self.n, "k": self.k,
                "delta": self.delta, "variant": self.variant}


def resolve_delta(q, m, delta):
    """Accept an integer or the strings 'auto1'/'auto2'/'auto3'."""
    if isinstance(delta, str):
        if not delta.startswith("auto"):
            return int(delta)
        return closed_form_leader(int(delta[4:]), q, m)[0]
    return delta


def build_code(q, m, delta, variant=C):
    """Construct C(q,m,delta) or C~(q,m,delta)."""
    variant = normalize_variant(variant)
    delta = resolve_delta(q, m, delta)
    n = q**m - 1
    if not 2 <= delta < n:
        raise DeltaOutOfRange(f"delta must satisfy 2 <= delta < {n}, got {delta}")
    big = extension_field(q, m)
    small = big.subfield(q).small
    g = Poly.one(small)
    seen = set()
    for i in range(1, delta):
        if i in seen:
            continue
        mp = minimal_polynomial(i, q, m, big)
        seen.update(union_of_cosets([i], q, m))
        g = poly_lcm(g, mp)
    if variant == C_TILDE:
        g = poly_lcm(g, minimal_polynomial(0, q, m, big))
    if g.degree != len(seen) + (variant == C_TILDE):
        raise AssertionError("generator degree disagrees with the root count")
    check, rem = divmod(x_n_minus_one(small, n), g)
    if not rem.is_zero():
        raise AssertionError("generator does not divide x^n - 1")
    return BchCode(q=q, m=m, n=n, delta=delta, variant=variant,
                   generator=g, check=check, field=big)


def dimension_formula(q, m, k_index, variant=C):
    """Closed-form dimension for delta_2 (k_index=2) or delta_3 (k_index=3)."""
    variant = normalize_variant(variant)
    extra = 1 if variant == C else 0
    if k_index == 2:
        if m < 2:
            raise UnsupportedM("delta_2 needs m >= 2")
        base = 2 * m if m % 2 else 3 * m // 2
    elif k_index == 3:
        if m < 3:
            raise UnsupportedM("delta_3 needs m >= 3")
        if m == 3:
            base = 7
        else:
            base = 3 * m if m % 2 else 5 * m // 2
    else:
        raise ValueError("k_index must be 2 or 3")
    return base + extra


def generic_delta3(q, m):
    """(q-1)q^(m-1) - 1 - q^floor((m+1)/2) without the m = 3 special case."""
    return (q - 1) * q ** (m - 1) - 1 - q ** ((m + 1) // 2)


def bose_distance(code):
    """Smallest positive integer outside the cosets of 1..delta-1."""
    covered = union_of_cosets(range(1, code.delta), code.q, code.m)
    d = 1
    while d in covered:
        d += 1
    return d


def encode(code, message):
    """Non-systematic encoding: message polynomial times generator."""
    if len(message) != code.k:
        raise LengthMismatch(f"message needs {code.k} symbols, got {len(message)}")
    prod = Poly(code.generator.field, list(message)) * code.generator
    word = np.zeros(code.n, dtype=np.uint8)
    word[: len(prod.coeffs)] = prod.coeffs
    return word
