"""Exhaustive weight distributions, minimum and dual distances.

Every linear code here is given by a generator matrix over GF(q) in the small
symbol encoding (see :func:`bchwork.gf.symbol_tables`).  Enumeration expands
the rows into a GF(p)-basis and walks all p^(k*e) = q^k combinations with a
Gray code, so each codeword costs O(n) symbol updates.
"""

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb

import numpy as np

from . import _kernels
from .bch import BchCode
from .errors import BudgetExceeded
from .gf import prime_power, symbol_tables

DEFAULT_BUDGET = 2**31

ENUMERATED = "enumerated"
PREDICTED = "predicted"
EXPECTED = "expected"


@dataclass(frozen=True)
class WeightDistribution:
    """Exact counts A_w of codewords of each weight w (zero weights omitted)."""

    counts: dict
    n: int
    q: int
    source: str = ENUMERATED

    def __post_init__(self):
        clean = {int(w): int(c) for w, c in sorted(self.counts.items()) if c}
        object.__setattr__(self, "counts", clean)
        if any(not 0 <= w <= self.n for w in clean):
            raise ValueError("weight outside [0, n]")
        if any(c < 0 for c in clean.values()):
            raise ValueError("negative count")

    def __eq__(self, other):
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return (self.n, self.q, self.counts) == (other.n, other.q, other.counts)

    def __getitem__(self, w):
        return self.counts.get(w, 0)

    @property
    def total(self):
        return sum(self.counts.values())

    @property
    def dimension(self):
        t, k = self.total, 0
        while t > 1:
            if t % self.q:
                raise ValueError(f"total {self.total} is not a power of {self.q}")
            t //= self.q
            k += 1
        return k

    @property
    def weights(self):
        return [w for w in self.counts if w]

    @property
    def min_weight(self):
        return min(self.weights)

    @property
    def max_weight(self):
        return max(self.weights)

    def enumerator(self):
        """Weight enumerator as text, e.g. ``1 + 105z^4 + 280z^6``."""
        parts = []
        for w, c in self.counts.items():
            parts.append(str(c) if w == 0 else f"{c}z^{w}")
        return " + ".join(parts)

    def to_csv(self):
        lines = ["weight,count"]
        lines += [f"{w},{c}" for w, c in self.counts.items()]
        return "\n".join(lines) + "\n"

    def to_markdown(self):
        lines = ["| weight | count |", "|---:|---:|"]
        lines += [f"| {w} | {c} |" for w, c in self.counts.items()]
        return "\n".join(lines) + "\n"

    def to_json(self):
        return {"n": self.n, "q": self.q, "source": self.source,
                "counts": {str(w): c for w, c in self.counts.items()}}

    @classmethod
    def from_json(cls, obj):
        return cls({int(w): c for w, c in obj["counts"].items()},
                   n=obj["n"], q=obj["q"], source=obj.get("source", ENUMERATED))

    @classmethod
    def from_histogram(cls, hist, n, q, source=ENUMERATED):
        return cls({w: int(c) for w, c in enumerate(hist) if c}, n=n, q=q, source=source)


# ---------------------------------------------------------------------------
# enumeration


def gfp_basis_rows(G, q):
    """Expand a GF(q) generator matrix into rows spanning the code over GF(p)."""
    p, e = prime_power(q)
    G = np.ascontiguousarray(G, dtype=np.uint8)
    if e == 1:
        return G
    mul = symbol_tables(q)[1]
    rows = [mul[p**t][G] for t in range(e)]
    return np.ascontiguousarray(np.concatenate(rows, axis=0))


def _pack_bits(rows):
    n = rows.shape[1]
    nw = (n + 63) // 64
    out = np.zeros((rows.shape[0], nw), dtype=np.uint64)
    for i in range(n):
        out[:, i // 64] |= rows[:, i].astype(np.uint64) << np.uint64(i % 64)
    return out


def _block_bases(rows, add, p, n_outer):
    """Codeword offsets for every assignment of the outer (prefix) digits."""
    K = rows.shape[0]
    outer = rows[K - n_outer:]
    bases = []
    for digits in product(range(p), repeat=n_outer):
        word = np.zeros(rows.shape[1], dtype=np.uint8)
        for d, r in zip(digits, outer):
            for _ in range(d):
                word = add[word, r]
        bases.append(word)
    return bases


def enumeration_work(q, k, n):
    return q**k * n


def _check_budget(q, k, n, budget, what="enumeration"):
    work = enumeration_work(q, k, n)
    if budget is not None and work > budget:
        raise BudgetExceeded(work, budget, what)
    return work


def matrix_histogram(G, q, workers=1, prefix_digits=None):
    """Weight histogram (length n+1) of the row space of ``G`` over GF(q)."""
    p, _ = prime_power(q)
    rows = gfp_basis_rows(G, q)
    K, n = rows.shape
    if prefix_digits is None:
        prefix_digits = 0
        while workers > 1 and p**prefix_digits < 4 * workers and prefix_digits < K:
            prefix_digits += 1
    prefix_digits = min(prefix_digits, K)
    n_inner = K - prefix_digits
    add = np.ascontiguousarray(symbol_tables(q)[0])
    bases = _block_bases(rows, add, p, prefix_digits)

    if q == 2:
        packed = _pack_bits(rows)
        packed_bases = [_pack_bits(b[None, :])[0] for b in bases]

        def run(i):
            h = np.zeros(n + 1, dtype=np.int64)
            _kernels.gray_histogram_packed(packed, packed_bases[i], n_inner, h)
            return h
    else:
        def run(i):
            h = np.zeros(n + 1, dtype=np.int64)
            _kernels.gray_histogram(rows, bases[i], add, p, n_inner, h)
            return h

    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            parts = list(ex.map(run, range(len(bases))))
    else:
        parts = [run(i) for i in range(len(bases))]
    hist = np.zeros(n + 1, dtype=np.int64)
    for h in parts:
        hist += h
    if int(hist.sum()) != p**K:
        raise AssertionError("histogram total does not match the message count")
    return hist


def matrix_weight_distribution(G, q, budget=DEFAULT_BUDGET, workers=1):
    G = np.asarray(G, dtype=np.uint8)
    k, n = G.shape
    _check_budget(q, k, n, budget)
    return WeightDistribution.from_histogram(matrix_histogram(G, q, workers), n, q)


def _cache_path(cache_dir, code):
    mod = "".join(map(str, code.modulus))
    name = f"q{code.q}_m{code.m}_d{code.delta}_{code.variant}_mod{mod}.json"
    return os.path.join(cache_dir, name)


def weight_distribution(code, budget=DEFAULT_BUDGET, workers=1, cache_dir=None):
    """Exact weight distribution of a BCH code by enumerating all q^k messages.

    With ``cache_dir`` the histogram is stored as one JSON file per
    (q, m, delta, variant, modulus) and reused on later calls.
    """
    if cache_dir:
        path = _cache_path(cache_dir, code)
        if os.path.exists(path):
            with open(path) as fh:
                return WeightDistribution.from_json(json.load(fh))
    _check_budget(code.q, code.k, code.n, budget)
    hist = matrix_histogram(code.generator_matrix(), code.q, workers)
    dist = WeightDistribution.from_histogram(hist, code.n, code.q)
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(dist.to_json(), fh, sort_keys=True)
        os.replace(tmp, path)
    return dist


def min_distance(code, budget=DEFAULT_BUDGET, dist=None):
    """Smallest nonzero weight; checked against the BCH bound d >= delta."""
    dist = dist or weight_distribution(code, budget)
    d = dist.min_weight
    if isinstance(code, BchCode) and d < code.delta:
        raise AssertionError(f"BCH bound violated: d = {d} < delta = {code.delta}")
    return d


def wmin_wmax(code, budget=DEFAULT_BUDGET, dist=None):
    dist = dist or weight_distribution(code, budget)
    return dist.min_weight, dist.max_weight


def secret_sharing_ratio_holds(wmin, wmax, q):
    """True when wmin / wmax > (q - 1) / q."""
    return Fraction(wmin, wmax) > Fraction(q - 1, q)


def min_weight_codewords(code, weight=None, budget=DEFAULT_BUDGET):
    """All codewords of the given weight (minimum distance by default).

    Returns an array of shape (A_w, n) in Gray enumeration order.
    """
    if isinstance(code, BchCode):
        G, q = code.generator_matrix(), code.q
    else:
        G, q = code
    G = np.asarray(G, dtype=np.uint8)
    k, n = G.shape
    _check_budget(q, k, n, budget)
    dist = matrix_weight_distribution(G, q, budget=None)
    target = dist.min_weight if weight is None else weight
    p, _ = prime_power(q)
    rows = gfp_basis_rows(G, q)
    add = np.ascontiguousarray(symbol_tables(q)[0])
    out = np.zeros((dist[target], n), dtype=np.uint8)
    base = np.zeros(n, dtype=np.uint8)
    count = _kernels.gray_collect(rows, base, add, p, rows.shape[0], target, out, 0)
    if count != dist[target]:
        raise AssertionError("collected count disagrees with the distribution")
    return out


# ---------------------------------------------------------------------------
# duals


def dual_generator(code):
    """Generator of the dual code: the reciprocal of the check polynomial, made monic."""
    return code.check.reciprocal().monic()


def dual_generator_matrix(code):
    g = dual_generator(code)
    kd = code.n - g.degree
    coeffs = np.array(g.coeffs, dtype=np.uint8)
    G = np.zeros((kd, code.n), dtype=np.uint8)
    for i in range(kd):
        G[i, i : i + len(coeffs)] = coeffs
    return G


def _dependency_search(G, q, max_weight, budget):
    """Smallest w such that some w columns of G are dependent, with a
    codeword of the dual supported on position 0 (valid for cyclic codes).

    Meet-in-the-middle over supports {0} + L + R with max(L) < min(R).
    """
    add, mul = symbol_tables(q)
    G = np.asarray(G, dtype=np.uint8)
    k, n = G.shape
    nonzero = range(1, q)
    neg = {a: next(b for b in range(q) if add[a, b] == 0) for a in range(q)}
    cols = [tuple(int(x) for x in G[:, j]) for j in range(n)]
    scaled = {(j, c): tuple(int(mul[c, x]) for x in cols[j]) for j in range(n) for c in nonzero}

    def vsum(u, v):
        return tuple(int(add[a, b]) for a, b in zip(u, v))

    zero = tuple([0] * k)
    target0 = tuple(neg[x] for x in cols[0])
    work = 0
    for w in range(1, max_weight + 1):
        s = w - 1
        if s == 0:
            if target0 == zero:
                return w
            continue
        a = s // 2
        b = s - a
        work += comb(n - 1, b) * (q - 1) ** b + comb(n - 1, a) * (q - 1) ** a
        if budget is not None and work * k > budget:
            raise BudgetExceeded(work * k, budget, "dual low-weight search")
        right = {}
        for pos in combinations(range(1, n), b):
            for coefs in product(nonzero, repeat=b):
                v = zero
                for j, c in zip(pos, coefs):
                    v = vsum(v, scaled[j, c])
                if right.get(v, 0) < pos[0]:
                    right[v] = pos[0]
        for pos in combinations(range(1, n), a):
            hi = pos[-1] if pos else 0
            for coefs in product(nonzero, repeat=a):
                v = target0
                for j, c in zip(pos, coefs):
                    v = vsum(v, tuple(neg[x] for x in scaled[j, c]))
                if right.get(v, 0) > hi:
                    return w
    return None


def dual_min_distance(code, budget=DEFAULT_BUDGET, method="auto", max_weight=16):
    """Minimum distance of the dual of a BCH code.

    ``method='enumerate'`` walks the whole dual; ``'search'`` looks for the
    fewest dependent columns of the generator matrix, exhaustively by weight.
    ``'auto'`` enumerates when q^(n-k) * n fits the budget and searches otherwise.
    """
    kd = code.n - code.k
    if method == "auto":
        fits = enumeration_work(code.q, kd, code.n) <= budget
        method = "enumerate" if fits else "search"
    if method == "enumerate":
        return matrix_weight_distribution(dual_generator_matrix(code), code.q, budget).min_weight
    d = _dependency_search(code.generator_matrix(), code.q, max_weight, budget)
    if d is None:
        raise BudgetExceeded(None, budget, f"no dual codeword up to weight {max_weight}")
    return d


def krawtchouk(j, i, n, q):
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
               for s in range(j + 1))


def macwilliams(dist):
    """Weight distribution of the dual code via the MacWilliams identity."""
    n, q, size = dist.n, dist.q, dist.total
    out = {}
    for j in range(n + 1):
        s = sum(c * krawtchouk(j, i, n, q) for i, c in dist.counts.items())
        if s % size:
            raise ValueError("MacWilliams transform is not integral; input is not a linear code")
        if s:
            out[j] = s // size
    return WeightDistribution(out, n=n, q=q, source=PREDICTED)


def cyclic_shift(word, k=1):
    return np.roll(np.asarray(word), k)


def row_reduce(G, q):
    """Reduced row echelon form over GF(q); returns the nonzero rows."""
    add, mul = symbol_tables(q)
    inv = [0] + [next(b for b in range(1, q) if mul[a, b] == 1) for a in range(1, q)]
    neg = [next(b for b in range(q) if add[a, b] == 0) for a in range(q)]
    A = np.array(G, dtype=np.uint8, copy=True)
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i, c]), None)
        if piv is None:
            continue
        A[[r, piv]] = A[[piv, r]]
        A[r] = mul[inv[A[r, c]]][A[r]]
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = add[A[i], mul[neg[A[i, c]]][A[r]]]
        r += 1
        if r == rows:
            break
    return A[:r]


def rank(G, q):
    return row_reduce(G, q).shape[0]
