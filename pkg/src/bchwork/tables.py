"""Expected weight distributions and (n, k, d) parameter rows, as exact formulas.

Count expressions are evaluated with ``Fraction`` so a transcription slip that
produces a non-integer shows up as an error instead of silently rounding.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bch import C, C_TILDE, generic_delta3
from .cyclotomic import closed_form_leader
from .gf import is_prime
from .weights import EXPECTED, WeightDistribution


def _exact(rows):
    out = {}
    for w, c in rows:
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError(f"count {c} for weight {w} is not an integer")
        out[int(w)] = out.get(int(w), 0) + int(c)
    return out


# ---------------------------------------------------------------------------
# delta_2, C-tilde


def delta2_binary_odd(q, m):
    n, a = 2**m - 1, 2 ** ((m - 1) // 2)
    return [
        (0, 1),
        (2 ** (m - 1) - a, n * (a + 1) * 2 ** ((m - 3) // 2)),
        (2 ** (m - 1), n * (2 ** (m - 1) + 1)),
        (2 ** (m - 1) + a, n * (a - 1) * 2 ** ((m - 3) // 2)),
    ]


def delta2_binary_even(q, m):
    r = 2 ** ((m - 2) // 2)
    s = 2 ** (m // 2) - 1
    return [
        (0, 1),
        (2 ** (m - 1) - r, s * (2 ** (m - 1) + r)),
        (2 ** (m - 1), 2**m - 1),
        (2 ** (m - 1) + r, s * (2 ** (m - 1) - r)),
    ]


def delta2_oddq_odd(q, m):
    n, base, r = q**m - 1, (q - 1) * q ** (m - 1), q ** ((m - 1) // 2)
    return [
        (0, 1),
        (base - r, Fraction((q - 1) * n * (q ** (m - 1) + r), 2)),
        (base, n * (q ** (m - 1) + 1)),
        (base + r, Fraction((q - 1) * n * (q ** (m - 1) - r), 2)),
    ]


def delta2_oddq_even(q, m):
    base, r = (q - 1) * q ** (m - 1), q ** ((m - 2) // 2)
    return [
        (0, 1),
        (base - r, (q - 1) * (q ** ((3 * m - 2) // 2) - r)),
        (base, q**m - 1),
        ((q - 1) * (q ** (m - 1) + r), r * (q**m - q ** ((m + 2) // 2) + q - 1)),
    ]


# ---------------------------------------------------------------------------
# delta_3, C-tilde


def delta3_binary_odd(q, m):
    n, t = 2**m - 1, 2 ** (m - 1)
    a, b = 2 ** ((m + 1) // 2), 2 ** ((m - 1) // 2)
    return [
        (0, 1),
        (t - a, Fraction(n * 2 ** ((m - 5) // 2) * (2 ** ((m - 3) // 2) + 1) * (t - 1), 3)),
        (t - b, Fraction(n * 2 ** ((m - 3) // 2) * (b + 1) * (5 * t + 4), 3)),
        (t, n * (9 * 2 ** (2 * m - 4) + 3 * 2 ** (m - 3) + 1)),
        (t + b, Fraction(n * 2 ** ((m - 3) // 2) * (b - 1) * (5 * t + 4), 3)),
        (t + a, Fraction(n * 2 ** ((m - 5) // 2) * (2 ** ((m - 3) // 2) - 1) * (t - 1), 3)),
    ]


def delta3_binary_even(q, m):
    t, h = 2 ** (m - 1), 2 ** (m // 2)
    r = 2 ** ((m - 2) // 2)
    s = h - 1
    small = 2 ** ((m - 4) // 2)
    return [
        (0, 1),
        (t - h, Fraction(s * (2 ** (m - 3) + small) * (2 ** (m + 1) + h - 1), 3)),
        (t - r, Fraction(s * (t + r) * (2**m + 2 ** ((m + 2) // 2) + 4), 3)),
        (t, s * (2 ** (2 * m - 1) + 2 ** ((3 * m - 4) // 2) - 2 ** (m - 2) + h + 1)),
        (t + r, Fraction(s * (t - r) * (2**m + 2 ** ((m + 2) // 2) + 4), 3)),
        (t + h, Fraction(s * (2 ** (m - 3) - small) * (2 ** (m + 1) + h - 1), 3)),
    ]


def delta3_oddq_even(q, m):
    n, base = q**m - 1, (q - 1) * q ** (m - 1)
    half, r = q ** (m // 2), q ** ((m - 2) // 2)
    r4 = q ** ((m - 4) // 2)
    lead = q ** (m + 1) - 2 * q**m + q
    F = Fraction
    return [
        (0, 1),
        (base - half,
         F(n * ((q * q - 1) * (q ** ((3 * m - 6) // 2) + q ** (m - 2))
                + 2 * (r - 1) * (q ** (m - 3) + r4)), 2 * (q + 1))),
        ((q - 1) * (q ** (m - 1) - r),
         F(q * (half + 1) * n * (q ** (m - 1) + (q - 1) * r), 2 * (q + 1))),
        (base - r, F(lead * (half - 1) * (q ** (m - 1) + r), 2)),
        (base, n * (1 + q ** ((3 * m - 2) // 2) - q ** ((3 * m - 4) // 2)
                    + 2 * q ** ((3 * m - 6) // 2) - q ** (m - 2))),
        (base + r, F(q * (half + 1) * n * (q - 1) * (q ** (m - 1) - r), 2 * (q + 1))),
        ((q - 1) * (q ** (m - 1) + r),
         F(lead * (half - 1) * (q ** (m - 1) - (q - 1) * r), 2 * (q - 1))),
        (base + half, F(r * n * (q - 1) * (q ** (m - 2) - r), 2)),
        ((q - 1) * (q ** (m - 1) + half),
         F((r - 1) * n * (q ** (m - 3) - (q - 1) * r4), q * q - 1)),
    ]


def delta3_oddq_odd(q, m):
    n, base = q**m - 1, (q - 1) * q ** (m - 1)
    a, b = q ** ((m + 1) // 2), q ** ((m - 1) // 2)
    c = q ** ((m - 3) // 2)
    d = q ** ((m + 3) // 2)
    F = Fraction
    mid = q ** (m + 3) - q ** (m + 2) - q ** (m - 1)
    return [
        (0, 1),
        (base - a, F(n * (q ** (m - 3) + c) * (q ** (m - 1) - 1), 2 * (q + 1))),
        ((q - 1) * (q ** (m - 1) - b),
         F(n * (q ** (m - 1) + b) * (q ** (m - 2) + (q - 1) * c), 2)),
        (base - b, F(n * (q ** (m - 2) + c) * (mid - d + b + q**3), 2 * (q + 1))),
        (base, n * (1 + (q * q - q + 1) * q ** (m - 3) + (q - 1) * q ** (2 * m - 4)
                    + (q - 2) * q ** (2 * m - 2) + q ** (2 * m - 1))),
        (base + b, F(n * (q ** (m - 2) - c) * (mid + d - b + q**3), 2 * (q + 1))),
        ((q - 1) * (q ** (m - 1) + b),
         F(n * (q ** (m - 1) - b) * (q ** (m - 2) - (q - 1) * c), 2)),
        (base + a, F(n * (q ** (m - 3) - c) * (q ** (m - 1) - 1), 2 * (q + 1))),
    ]


@dataclass(frozen=True)
class ExpectedTable:
    identifier: str
    caption: str
    delta_index: int
    variant: str
    applies: Callable
    formula: Callable

    def evaluate(self, q, m):
        if not self.applies(q, m):
            raise ValueError(f"{self.identifier} does not cover (q, m) = ({q}, {m})")
        counts = _exact(self.formula(q, m))
        dist = WeightDistribution(counts, n=q**m - 1, q=q, source=EXPECTED)
        return dist


def _odd_prime_q(q):
    return q % 2 == 1 and is_prime(q)


WEIGHT_TABLES = (
    ExpectedTable("delta2-binary-odd-m", "C-tilde(2,m,delta2), odd m", 2, C_TILDE,
                  lambda q, m: q == 2 and m % 2 == 1 and m >= 3, delta2_binary_odd),
    ExpectedTable("delta2-binary-even-m", "C-tilde(2,m,delta2), even m", 2, C_TILDE,
                  lambda q, m: q == 2 and m % 2 == 0 and m >= 4, delta2_binary_even),
    ExpectedTable("delta2-oddq-odd-m", "C-tilde(q,m,delta2), odd prime q, odd m", 2, C_TILDE,
                  lambda q, m: _odd_prime_q(q) and m % 2 == 1 and m >= 3, delta2_oddq_odd),
    ExpectedTable("delta2-oddq-even-m", "C-tilde(q,m,delta2), odd prime q, even m", 2, C_TILDE,
                  lambda q, m: _odd_prime_q(q) and m % 2 == 0 and m >= 4, delta2_oddq_even),
    ExpectedTable("delta3-binary-odd-m", "C-tilde(2,m,delta3), odd m", 3, C_TILDE,
                  lambda q, m: q == 2 and m % 2 == 1 and m >= 5, delta3_binary_odd),
    ExpectedTable("delta3-binary-even-m", "C-tilde(2,m,delta3), even m", 3, C_TILDE,
                  lambda q, m: q == 2 and m % 2 == 0 and m >= 4, delta3_binary_even),
    ExpectedTable("delta3-oddq-even-m", "C-tilde(q,m,delta3), odd prime q, even m", 3, C_TILDE,
                  lambda q, m: _odd_prime_q(q) and m % 2 == 0 and m >= 4, delta3_oddq_even),
    ExpectedTable("delta3-oddq-odd-m", "C-tilde(q,m,delta3), odd prime q, odd m", 3, C_TILDE,
                  lambda q, m: _odd_prime_q(q) and m % 2 == 1 and m >= 5, delta3_oddq_odd),
)


def table_for(q, m, delta_index):
    """The weight table covering C-tilde(q, m, delta_index), or None."""
    for t in WEIGHT_TABLES:
        if t.delta_index == delta_index and t.applies(q, m):
            return t
    return None


def expected_weights(q, m, delta_index):
    t = table_for(q, m, delta_index)
    if t is None:
        raise ValueError(f"no weight table for delta_{delta_index} at (q, m) = ({q}, {m})")
    return t.evaluate(q, m)


# ---------------------------------------------------------------------------
# worked enumerators (delta_3, C-tilde)

WORKED_EXAMPLES = {
    (2, 4): {0: 1, 4: 105, 6: 280, 8: 435, 10: 168, 12: 35},
    (2, 5): {0: 1, 8: 465, 12: 8680, 16: 18259, 20: 5208, 24: 155},
    (3, 4): {0: 1, 45: 3040, 48: 9900, 51: 10080, 54: 16640, 57: 14400,
             60: 3528, 63: 1440, 72: 20},
    (3, 5): {0: 1, 135: 29040, 144: 359370, 153: 3855060, 162: 6719372,
             171: 3188592, 180: 182952, 189: 14520},
}


def worked_example(q, m):
    return WeightDistribution(WORKED_EXAMPLES[(q, m)], n=q**m - 1, q=q, source=EXPECTED)


# ---------------------------------------------------------------------------
# parameter rows


@dataclass(frozen=True)
class ParamRow:
    table: str
    n: int
    k: int
    d: int
    q: int
    m: int
    variant: str
    delta: int
    note: str = ""


def _rows(table, variant, delta_index, printed, corrections=None):
    corrections = corrections or {}
    out = []
    for i, (n, k, d, m, q) in enumerate(printed):
        note = ""
        if i in corrections:
            n, k, d, m, q = corrections[i][0]
            note = corrections[i][1]
        if delta_index == 3 and m == 3:
            delta = generic_delta3(q, m)
            note = note or "generic third-leader formula at m = 3"
        else:
            delta = closed_form_leader(delta_index, q, m)[0]
        if q**m - 1 != n:
            raise ValueError(f"row {i} of {table}: n = {n} but q^m - 1 = {q**m - 1}")
        out.append(ParamRow(table, n, k, d, q, m, variant, delta, note))
    return tuple(out)


PARAM_TABLES = {
    "delta2-ctilde-params": _rows(
        "delta2-ctilde-params", C_TILDE, 2,
        [(15, 6, 6, 4, 1), (31, 10, 12, 5, 2), (63, 9, 28, 6, 2), (127, 14, 56, 7, 2),
         (256, 12, 120, 8, 2), (26, 6, 15, 3, 3), (80, 6, 51, 4, 3), (242, 10, 153, 5, 3)],
        {0: ((15, 6, 6, 4, 2), "printed q = 1, corrected to q = 2"),
         4: ((255, 12, 120, 8, 2), "printed n = 256, corrected to n = 255")},
    ),
    "delta2-c-params": _rows(
        "delta2-c-params", C, 2,
        [(15, 7, 5, 4, 2), (31, 11, 11, 5, 2), (63, 10, 27, 6, 2), (127, 15, 55, 7, 2),
         (255, 13, 119, 8, 2), (26, 7, 14, 3, 3), (80, 7, 50, 4, 3), (242, 11, 152, 5, 3)],
    ),
    "delta3-ctilde-params": _rows(
        "delta3-ctilde-params", C_TILDE, 3,
        [(15, 10, 4, 4, 2), (31, 15, 8, 5, 2), (63, 15, 24, 6, 2), (127, 21, 48, 7, 2),
         (255, 20, 112, 8, 2), (26, 10, 9, 3, 3), (80, 10, 45, 4, 3), (242, 15, 135, 5, 3)],
    ),
    "delta3-c-params": _rows(
        "delta3-c-params", C, 3,
        [(15, 11, 3, 4, 2), (31, 16, 7, 5, 2), (63, 16, 23, 6, 2), (127, 22, 47, 7, 2),
         (255, 21, 111, 8, 2), (26, 11, 8, 3, 3), (81, 11, 44, 4, 3), (242, 16, 134, 5, 3)],
        {6: ((80, 11, 44, 4, 3), "printed n = 81, corrected to n = 80")},
    ),
}


# ---------------------------------------------------------------------------
# the m = 3 conjecture


def m3_conjecture(q):
    """(delta, expected d-tilde, expected d) for the m = 3 codes with q > 2."""
    delta = q**3 - q**2 - q - 2
    return delta, delta + 1, delta
