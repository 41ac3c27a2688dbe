"""Dense univariate polynomials over a finite field, and minimal polynomials."""

from functools import lru_cache

from .cyclotomic import coset_of
from .errors import FieldDivisionByZero, FieldMismatch, NotASubfield, OutOfRange
from .gf import extension_field


@lru_cache(maxsize=None)
def _ops(field):
    """Plain-list lookup tables for a small coefficient field."""
    q = field.order
    add = [[field.add(a, b) for b in range(q)] for a in range(q)]
    mul = [[field.mul(a, b) for b in range(q)] for a in range(q)]
    neg = [field.neg(a) for a in range(q)]
    inv = [0] + [field.inv(a) for a in range(1, q)]
    return add, mul, neg, inv


class Poly:
    """Polynomial over ``field`` with coefficients low degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        c = [int(x) for x in coeffs]
        for x in c:
            if not 0 <= x < field.order:
                raise FieldMismatch(f"coefficient {x} not in {field}")
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, field, degree, coeff=1):
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def one(cls, field):
        return cls(field, [1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def _same(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return True

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        self._same(other)
        add = _ops(self.field)[0]
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = add[out[i]][y]
        return Poly(self.field, out)

    def __neg__(self):
        neg = _ops(self.field)[2]
        return Poly(self.field, [neg[c] for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Poly(self.field, [other])
        self._same(other)
        add, mul = _ops(self.field)[:2]
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.field, [])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                row = mul[x]
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add[out[i + j]][row[y]]
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._same(other)
        if other.is_zero():
            raise FieldDivisionByZero("polynomial division by zero")
        add, mul, neg, inv = _ops(self.field)
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        il = inv[b[-1]]
        qt = [0] * max(0, len(r) - db)
        for s in range(len(r) - 1 - db, -1, -1):
            c = mul[r[s + db]][il]
            if c:
                qt[s] = c
                nc = neg[c]
                for j, y in enumerate(b):
                    r[s + j] = add[r[s + j]][mul[nc][y]]
        return Poly(self.field, qt), Poly(self.field, r[:db] if db else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        mul, inv = _ops(self.field)[1], _ops(self.field)[3]
        il = inv[self.lead]
        return Poly(self.field, [mul[c][il] for c in self.coeffs])

    def __call__(self, x):
        """Evaluate at an element of the coefficient field (Horner)."""
        add, mul = _ops(self.field)[:2]
        acc = 0
        for c in reversed(self.coeffs):
            acc = add[mul[acc][x]][c]
        return acc

    def evaluate_in(self, sub, x):
        """Evaluate at ``x`` in the big field of ``sub`` (a Subfield of it)."""
        if sub.small != self.field:
            raise FieldMismatch("subfield does not match the coefficient field")
        big = sub.big
        acc = 0
        for c in reversed(self.coeffs):
            acc = big.add(big.mul(acc, x), sub.from_small(c))
        return acc

    def reciprocal(self):
        """x^deg * f(1/x): coefficients reversed."""
        return Poly(self.field, self.coeffs[::-1])

    def __repr__(self):
        return f"Poly({self.field}, {list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def poly_gcd(a, b):
    """Monic greatest common divisor."""
    a._same(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a, b):
    if a.is_zero() or b.is_zero():
        return Poly(a.field, [])
    return ((a * b) // poly_gcd(a, b)).monic()


def x_n_minus_one(field, n):
    neg = _ops(field)[2]
    return Poly(field, [neg[1]] + [0] * (n - 1) + [1])


def minimal_polynomial(i, q, m, field=None):
    """Minimal polynomial of alpha^i over GF(q), alpha primitive in GF(q^m).

    Built as the product of (x - alpha^j) over the coset of i in GF(q^m), then
    each coefficient is checked to lie in GF(q) before being converted.
    """
    big = field or extension_field(q, m)
    n = q**m - 1
    if big.order != q**m:
        raise FieldMismatch(f"{big} is not GF({q}^{m})")
    if not 0 <= i < n:
        raise OutOfRange(f"{i} not in [0, {n})")
    sub = big.subfield(q)
    prod = [1]
    for j in coset_of(i, q, m).elements:
        root = big.neg(big.alpha_pow(j))
        nxt = [0] * (len(prod) + 1)
        for t, c in enumerate(prod):
            nxt[t + 1] = big.add(nxt[t + 1], c)
            nxt[t] = big.add(nxt[t], big.mul(c, root))
        prod = nxt
    coeffs = []
    for c in prod:
        s = int(sub.project[c])
        if s < 0:
            raise NotASubfield(f"coefficient {c} of m_{i} escapes GF({q})")
        coeffs.append(s)
    return Poly(sub.small, coeffs)
