"""Finite fields GF(p^d) with integer-encoded elements.

An element is the integer ``sum(c_i * p**i)`` where ``c_0 + c_1 x + ...`` is its
polynomial-basis representative modulo the field modulus.  The modulus is the
smallest primitive polynomial of degree ``d`` (ordered by that same integer
encoding), so ``alpha = x`` has order ``p**d - 1`` and every output of the
package is deterministic.

Scalar methods take and return Python ints; methods prefixed with ``v`` take
numpy integer arrays and are what the enumeration code leans on.
"""

from functools import lru_cache
from math import gcd

import numpy as np

from .errors import (
    CapExceeded,
    FieldDivisionByZero,
    FieldMismatch,
    NotASubfield,
    NotPrime,
)

TABLE_CAP = 2**24


def is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_factors(n):
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q):
    """Return ``(p, e)`` with ``q == p**e``; raise NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    if not is_prime(p):
        raise NotPrime(f"{q} is not a prime power")
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, e


# --- dense polynomials over GF(p), low degree first -------------------------


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(_ptrim(a)) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
    return a


def _pmulmod(a, b, f, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, f, p)


def _ppowmod(a, e, f, p):
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(f, p):
    # Ben-Or: f of degree d is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= d/2
    d = len(f) - 1
    xp = [0, 1]
    for _ in range(d // 2):
        xp = _ppowmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, diff, p)) > 1:
            return False
    return True


def _is_primitive(f, p):
    d = len(f) - 1
    n = p**d - 1
    if f[0] == 0:
        return False
    if _ppowmod([0, 1], n, f, p) != [1]:
        return False
    return all(_ppowmod([0, 1], n // r, f, p) != [1] for r in prime_factors(n))


def find_primitive_modulus(p, d):
    """Smallest primitive monic polynomial of degree ``d`` over GF(p), low first."""
    for low in range(1, p**d):
        f = [(low // p**i) % p for i in range(d)] + [1]
        if _is_primitive(f, p):
            return tuple(f)
    raise AssertionError(f"no primitive polynomial of degree {d} over GF({p})")


class GF:
    """The field GF(p^d); build instances with :func:`make_field`."""

    def __init__(self, p, d, modulus, tables=True, cap=TABLE_CAP):
        self.p = p
        self.d = d
        self.order = p**d
        self.n = self.order - 1
        self.modulus = tuple(modulus)
        self._places = [p**i for i in range(d)]
        if not _is_irreducible(list(self.modulus), p):
            raise AssertionError(f"modulus {self.modulus} is reducible")
        if d == 1:
            # x mod (x + c) is the constant -c
            self.alpha = (-self.modulus[0]) % p
        else:
            self.alpha = p
        self.exp = self.log = None
        if tables:
            if self.order > cap:
                raise CapExceeded(
                    f"GF({p}^{d}) has {self.order} elements, above the table cap "
                    f"{cap}; pass tables=False to use polynomial arithmetic"
                )
            self._build_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.d})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def _build_tables(self):
        n = self.n
        exp = np.zeros(n, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            if log[x] != -1:
                raise AssertionError("alpha is not primitive")
            log[x] = i
            x = self._mul_poly(x, self.alpha)
        if x != 1:
            raise AssertionError("alpha is not primitive")
        exp.setflags(write=False)
        log.setflags(write=False)
        self.exp, self.log = exp, log

    @property
    def has_tables(self):
        return self.exp is not None

    # --- representation ------------------------------------------------------

    def coeffs(self, x):
        """Polynomial-basis coordinates of ``x``, low degree first (length d)."""
        self._check(x)
        return [(x // pl) % self.p for pl in self._places]

    def element(self, coeffs):
        if len(coeffs) != self.d or any(not 0 <= c < self.p for c in coeffs):
            raise FieldMismatch(f"{coeffs!r} is not a coordinate vector of {self}")
        return sum(c * pl for c, pl in zip(coeffs, self._places))

    def elements(self):
        return np.arange(self.order, dtype=np.int64)

    def _check(self, x):
        if not 0 <= x < self.order:
            raise FieldMismatch(f"{x} is not an element of {self}")

    # --- scalar arithmetic ---------------------------------------------------

    def add(self, x, y):
        self._check(x)
        self._check(y)
        if self.p == 2:
            return x ^ y
        p = self.p
        return sum(((x // pl + y // pl) % p) * pl for pl in self._places)

    def neg(self, x):
        self._check(x)
        p = self.p
        return sum(((-(x // pl)) % p) * pl for pl in self._places)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def _mul_poly(self, x, y):
        p, f = self.p, list(self.modulus)
        a = [(x // pl) % p for pl in self._places]
        b = [(y // pl) % p for pl in self._places]
        r = _pmulmod(_ptrim(a), _ptrim(b), f, p)
        return sum(c * self._places[i] for i, c in enumerate(r))

    def mul(self, x, y):
        self._check(x)
        self._check(y)
        if x == 0 or y == 0:
            return 0
        if self.exp is None:
            return self._mul_poly(x, y)
        return int(self.exp[(self.log[x] + self.log[y]) % self.n])

    def pow(self, x, e):
        self._check(x)
        if x == 0:
            if e < 0:
                raise FieldDivisionByZero("0 has no inverse")
            return 1 if e == 0 else 0
        e %= self.n
        if self.exp is not None:
            return int(self.exp[self.log[x] * e % self.n])
        result, base = 1, x
        while e:
            if e & 1:
                result = self._mul_poly(result, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return result

    def inv(self, x):
        if x == 0:
            raise FieldDivisionByZero(f"0 has no inverse in {self}")
        return self.pow(x, -1)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def alpha_pow(self, i):
        return self.pow(self.alpha, i)

    def log_of(self, x):
        if x == 0:
            raise FieldDivisionByZero("log of 0")
        self._check(x)
        if self.exp is not None:
            return int(self.log[x])
        y, i = 1, 0
        while y != x:
            y = self._mul_poly(y, self.alpha)
            i += 1
        return i

    def order_of(self, x):
        """Multiplicative order of a nonzero element."""
        return self.n // gcd(self.log_of(x), self.n)

    def frobenius(self, x, k=1):
        return self.pow(x, self.p**k)

    def subfield_degree(self, q):
        p, e = prime_power(q)
        if p != self.p or self.d % e:
            raise NotASubfield(f"GF({q}) is not a subfield of {self}")
        return e

    def trace(self, x, q=None):
        """Trace of ``x`` down to GF(q); the result is an element of this field."""
        q = q or self.p
        e = self.subfield_degree(q)
        out, y = 0, x
        for _ in range(self.d // e):
            out = self.add(out, y)
            y = self.pow(y, q)
        return out

    # --- vectorized arithmetic (requires tables) -----------------------------

    def _need_tables(self):
        if self.exp is None:
            raise CapExceeded(f"{self} was built without log tables")

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pl in self._places:
            out += (((a // pl) + (b // pl)) % p) * pl
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        out = np.zeros_like(a)
        for pl in self._places:
            out += ((-(a // pl)) % self.p) * pl
        return out

    def vmul(self, a, b):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        zero = (a == 0) | (b == 0)
        la = self.log[a]
        lb = self.log[b]
        out = self.exp[(la + lb) % self.n]
        return np.where(zero, 0, out)

    def vpow(self, a, e):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        out = self.exp[(self.log[a] * (e % self.n)) % self.n]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    def vinv(self, a):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise FieldDivisionByZero("0 has no inverse")
        return self.exp[(-self.log[a]) % self.n]

    def vtrace(self, a, q=None):
        q = q or self.p
        e = self.subfield_degree(q)
        a = np.asarray(a, dtype=np.int64)
        out = np.zeros_like(a)
        y = a
        for _ in range(self.d // e):
            out = self.vadd(out, y)
            y = self.vpow(y, q)
        return out

    def subfield(self, q):
        return _subfield(self, q)


class Subfield:
    """GF(q) sitting inside a bigger field GF(q^m).

    ``small`` is GF(q) built on its own (smallest primitive modulus); ``embed``
    maps its integer encoding into the big field and ``project`` maps back
    (``-1`` outside the subfield).  Codeword symbols always use the small
    encoding, which for prime q is just the residue 0..q-1.
    """

    def __init__(self, big, q):
        e = big.subfield_degree(q)
        self.big = big
        self.q = q
        self.m = big.d // e
        self.small = make_field(big.p, e)
        small = self.small
        step = big.n // (q - 1)
        root = None
        for j in range(1, q):
            if gcd(j, q - 1) != 1:
                continue
            beta = big.alpha_pow(step * j)
            acc = 0
            for c in reversed(small.modulus):
                acc = big.add(big.mul(acc, beta), c)
            if acc == 0:
                root = beta
                break
        if root is None:
            raise AssertionError("no root of the subfield modulus found")
        powers = [big.pow(root, i) for i in range(e)]
        embed = np.zeros(q, dtype=np.int64)
        for s in range(q):
            acc = 0
            for c, bp in zip(small.coeffs(s), powers):
                acc = big.add(acc, big.mul(c, bp))
            embed[s] = acc
        project = np.full(big.order, -1, dtype=np.int64)
        project[embed] = np.arange(q)
        if len(set(embed.tolist())) != q:
            raise AssertionError("subfield embedding is not injective")
        self.embed = embed
        self.project = project
        self.add_table, self.mul_table = symbol_tables(q)
        for t in (embed, project):
            t.setflags(write=False)

    def to_small(self, x):
        s = int(self.project[x])
        if s < 0:
            raise NotASubfield(f"{x} does not lie in GF({self.q})")
        return s

    def from_small(self, s):
        return int(self.embed[s])

    def vto_small(self, xs):
        s = self.project[np.asarray(xs, dtype=np.int64)]
        if np.any(s < 0):
            raise NotASubfield(f"value outside GF({self.q})")
        return s

    def trace(self, x):
        """Trace to GF(q), in the small encoding."""
        return self.to_small(self.big.trace(x, self.q))

    def vtrace(self, xs):
        return self.vto_small(self.big.vtrace(xs, self.q))


@lru_cache(maxsize=None)
def _subfield(big, q):
    return Subfield(big, q)


@lru_cache(maxsize=64)
def _make_field_cached(p, d, tables, cap):
    modulus = find_primitive_modulus(p, d)
    return GF(p, d, modulus, tables=tables, cap=cap)


def make_field(p, d, *, tables=True, cap=TABLE_CAP):
    """Construct GF(p^d) with its smallest primitive modulus.

    >>> F = make_field(2, 4)
    >>> F.modulus
    (1, 1, 0, 0, 1)
    >>> F.order_of(F.alpha)
    15
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if d < 1:
        raise ValueError("extension degree must be >= 1")
    if tables and p**d > cap:
        raise CapExceeded(
            f"GF({p}^{d}) exceeds the table cap {cap}; pass tables=False"
        )
    return _make_field_cached(p, d, tables, cap)


def extension_field(q, m, **kwargs):
    """GF(q^m) realized as GF(p^(e*m)) for q = p^e."""
    p, e = prime_power(q)
    return make_field(p, e * m, **kwargs)


@lru_cache(maxsize=None)
def symbol_tables(q):
    """(add, mul) lookup tables of GF(q) in its own integer encoding, uint8."""
    p, e = prime_power(q)
    F = make_field(p, e)
    add = np.array([[F.add(a, b) for b in range(q)] for a in range(q)], dtype=np.uint8)
    mul = np.array([[F.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.uint8)
    add.setflags(write=False)
    mul.setflags(write=False)
    return add, mul
