"""Counting total dominating sets by size.

Two independent routes produce D_t(G, x):

* :func:`count_total_dominating_sets` walks the include/exclude tree over
  the vertices (highest degree first), carrying the coverage bitmask, and
  cuts any branch whose remaining vertices cannot finish covering V.
* :func:`total_domination_polynomial_ie` evaluates the alternating sum
  over all subsets S of (-1)^|S| (x+1)^(n-|N(S)|), bucketing subsets by
  ``(parity, |N(S)|)`` with a meet-in-the-middle split of the vertex set.

Both are word-parallel numba kernels; counts stay below 2**cap so int64 is
enough inside the kernels and the results are widened to Python ints.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

import numba
import numpy as np

from .errors import ResourceError
from .graph import Graph
from .polynomial import Polynomial, binomial_shift

_MAX_KERNEL_ORDER = 62


@dataclass(frozen=True)
class CountTable:
    n: int
    counts: tuple[int, ...]

    def __getitem__(self, i):
        return self.counts[i]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def polynomial(self) -> Polynomial:
        return Polynomial(self.counts)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.counts])

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        counts = tuple(int(c) for c in json.loads(text))
        return cls(len(counts) - 1, counts)


# ---------------------------------------------------------------------------
# numba kernels


@numba.njit(cache=True, nogil=True)
def _dfs_count(adj_ordered, tail_cover, full, start_depth, start_cov, start_size,
               binom, counts):
    """Accumulate into ``counts`` every completion of one search prefix."""
    n = adj_ordered.shape[0]
    cap = 2 * n + 2
    st_depth = np.empty(cap, np.int64)
    st_cov = np.empty(cap, np.int64)
    st_size = np.empty(cap, np.int64)
    st_depth[0] = start_depth
    st_cov[0] = start_cov
    st_size[0] = start_size
    top = 1
    while top > 0:
        top -= 1
        d = st_depth[top]
        cov = st_cov[top]
        size = st_size[top]
        if cov == full:
            # every completion of an already-total-dominating set counts
            rem = n - d
            for j in range(rem + 1):
                counts[size + j] += binom[rem, j]
            continue
        if d == n:
            continue
        if (cov | tail_cover[d]) != full:
            continue
        # exclude branch
        st_depth[top] = d + 1
        st_cov[top] = cov
        st_size[top] = size
        top += 1
        # include branch
        st_depth[top] = d + 1
        st_cov[top] = cov | adj_ordered[d]
        st_size[top] = size + 1
        top += 1


@numba.njit(cache=True, nogil=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@numba.njit(cache=True, nogil=True)
def _half_covers(adj, offset, width):
    """N(S) and |S| parity for every subset S of vertices offset..offset+width-1."""
    size = 1 << width
    cover = np.zeros(size, np.int64)
    parity = np.zeros(size, np.int64)
    for s in range(1, size):
        low = s & -s
        v = 0
        while (low >> v) != 1:
            v += 1
        prev = s ^ low
        cover[s] = cover[prev] | adj[offset + v]
        parity[s] = parity[prev] ^ 1
    return cover, parity


@numba.njit(cache=True, nogil=True)
def _ie_buckets(lo_cover, lo_par, hi_cover, hi_par, hi_start, hi_stop, n, buckets):
    """buckets[parity, |N(S)|] += 1 for S = hi | lo over a slice of hi halves."""
    for h in range(hi_start, hi_stop):
        hc = hi_cover[h]
        hp = hi_par[h]
        for l in range(lo_cover.shape[0]):
            buckets[hp ^ lo_par[l], _popcount(hc | lo_cover[l])] += 1


# ---------------------------------------------------------------------------
# drivers


def _check(g: Graph, cap: int | None) -> None:
    g.require_within_cap(cap)
    if g.n > _MAX_KERNEL_ORDER:
        raise ResourceError(f"order {g.n} exceeds the 64-bit kernel limit {_MAX_KERNEL_ORDER}")


def _binom_table(n: int) -> np.ndarray:
    table = np.zeros((n + 1, n + 1), np.int64)
    for r in range(n + 1):
        for j in range(r + 1):
            table[r, j] = comb(r, j)
    return table


def search_order(g: Graph) -> list[int]:
    """Vertices by descending degree, ties by index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def count_total_dominating_sets(g: Graph, *, cap: int | None = None,
                                prefix_bits: int | None = None,
                                workers: int = 1) -> CountTable:
    """counts[i] = number of i-subsets D with N(D) = V.

    The first ``prefix_bits`` decisions (default ``min(8, n)``) are expanded
    into independent jobs; each job fills a private row which are summed at
    the end, so the result does not depend on ``workers``.
    """
    _check(g, cap)
    n = g.n
    order = search_order(g)
    adj_ordered = np.array([g.adj[v] for v in order], dtype=np.int64)
    tail = np.zeros(n + 1, dtype=np.int64)
    for d in range(n - 1, -1, -1):
        tail[d] = tail[d + 1] | adj_ordered[d]
    full = (1 << n) - 1
    binom = _binom_table(n)

    k = min(8, n) if prefix_bits is None else max(0, min(prefix_bits, n))
    rows = np.zeros((1 << k, n + 1), dtype=np.int64)

    def run(prefix: int) -> None:
        cov = 0
        size = 0
        for d in range(k):
            if prefix >> d & 1:
                cov |= int(adj_ordered[d])
                size += 1
        _dfs_count(adj_ordered, tail, full, k, cov, size, binom, rows[prefix])

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, range(1 << k)))
    else:
        for prefix in range(1 << k):
            run(prefix)

    totals = [0] * (n + 1)
    for row in rows:
        for i, c in enumerate(row):
            totals[i] += int(c)
    return CountTable(n, tuple(totals))


def total_domination_polynomial(g: Graph, **kwargs) -> Polynomial:
    return count_total_dominating_sets(g, **kwargs).polynomial()


def ie_buckets(g: Graph, *, cap: int | None = None, workers: int = 1) -> np.ndarray:
    """2 x (n+1) table: subsets counted by (|S| mod 2, |N(S)|)."""
    _check(g, cap)
    n = g.n
    adj = np.array(g.adj, dtype=np.int64)
    lo_w = n // 2
    hi_w = n - lo_w
    lo_cover, lo_par = _half_covers(adj, 0, lo_w)
    hi_cover, hi_par = _half_covers(adj, lo_w, hi_w)
    n_hi = 1 << hi_w
    chunks = max(1, workers)
    bounds = [n_hi * i // chunks for i in range(chunks + 1)]
    parts = np.zeros((chunks, 2, n + 1), dtype=np.int64)

    def run(i):
        _ie_buckets(lo_cover, lo_par, hi_cover, hi_par, bounds[i], bounds[i + 1], n, parts[i])

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, range(chunks)))
    else:
        run(0)
    return parts.sum(axis=0)


def total_domination_polynomial_ie(g: Graph, *, cap: int | None = None,
                                   workers: int = 1) -> Polynomial:
    buckets = ie_buckets(g, cap=cap, workers=workers)
    n = g.n
    result = Polynomial()
    for size in range(n + 1):
        signed = int(buckets[0, size]) - int(buckets[1, size])
        if signed:
            result = result + signed * binomial_shift(n - size)
    return result


def total_domination_number(g: Graph, **kwargs) -> int | None:
    """Smallest size of a total dominating set, or None if there is none."""
    table = count_total_dominating_sets(g, **kwargs)
    for i, c in enumerate(table.counts):
        if c:
            return i
    return None
