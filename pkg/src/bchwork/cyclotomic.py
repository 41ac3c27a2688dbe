"""q-cyclotomic cosets modulo n = q^m - 1 and the three largest coset leaders."""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import CapExceeded, KTooLarge, OutOfRange, UnsupportedM

SCAN_CAP = 10**7
_CHUNK = 1 << 22


@dataclass(frozen=True)
class Coset:
    leader: int
    size: int
    elements: tuple

    def __contains__(self, i):
        return i in self.elements


@dataclass(frozen=True)
class CosetTable:
    q: int
    m: int
    n: int
    leaders: tuple
    sizes: tuple

    def __iter__(self):
        return iter(zip(self.leaders, self.sizes))

    def __len__(self):
        return len(self.leaders)


def _n(q, m):
    if m < 1:
        raise UnsupportedM(f"m must be positive, got {m}")
    return q**m - 1


def coset_of(i, q, m):
    """The coset ``{i q^j mod n}`` with its leader and size."""
    n = _n(q, m)
    if not 0 <= i < n:
        raise OutOfRange(f"{i} not in [0, {n})")
    elems = [i]
    x = i * q % n
    while x != i:
        elems.append(x)
        x = x * q % n
    return Coset(leader=min(elems), size=len(elems), elements=tuple(sorted(elems)))


def coset_table(q, m, cap=SCAN_CAP):
    """All coset leaders (ascending) with their sizes, by exhaustive scan."""
    n = _n(q, m)
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the scan cap {cap}")
    leaders, sizes = [], []
    for lo in range(0, n, _CHUNK):
        hi = min(n, lo + _CHUNK)
        s = _kernels.leader_scan(q, m, n, lo, hi)
        idx = np.nonzero(s)[0]
        leaders.extend((idx + lo).tolist())
        sizes.extend(s[idx].tolist())
    return CosetTable(q=q, m=m, n=n, leaders=tuple(leaders), sizes=tuple(sizes))


def closed_form_leader(k, q, m):
    """``(delta_k, |C_delta_k|)`` for the largest (k=1), second and third leaders.

    m = 3, k = 3 uses delta_3 = delta_2 - 1 with a singleton coset; k = 3 needs
    m >= 3.
    """
    if m < 2:
        raise UnsupportedM("closed forms need m >= 2")
    top = (q - 1) * q ** (m - 1) - 1
    if k == 1:
        return top, m
    if k == 2:
        delta = top - q ** ((m - 1) // 2)
        return delta, (m if m % 2 else m // 2)
    if k == 3:
        if m == 2:
            raise UnsupportedM("no closed form for the third leader when m = 2")
        if m == 3:
            return top - q - 1, 1
        return top - q ** ((m + 1) // 2), m
    raise ValueError(f"k must be 1, 2 or 3, got {k}")


def kth_largest_leader_exhaustive(k, q, m, cap=SCAN_CAP):
    """The k-th largest coset leader and its coset size, found by scanning."""
    if k < 1:
        raise ValueError("k must be >= 1")
    table = coset_table(q, m, cap=cap)
    if k > len(table):
        raise KTooLarge(f"only {len(table)} cosets modulo {table.n}")
    return table.leaders[-k], table.sizes[-k]


def union_of_cosets(indices, q, m):
    """Union of the cosets containing each index."""
    out = set()
    for i in indices:
        if i not in out:
            out.update(coset_of(i, q, m).elements)
    return out
