"""Slow, obviously-correct reference computations used only by the tests.

Nothing here imports the package's counting or root code: graphs are
plain (n, edge list) pairs and subsets are enumerated with itertools.
"""

from itertools import combinations
from math import comb


def brute_counts(n, edges):
    """d_t(G, i) for i = 0..n by checking every subset directly."""
    nbrs = {v: set() for v in range(n)}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    counts = [0] * (n + 1)
    for size in range(n + 1):
        for d in combinations(range(n), size):
            covered = set()
            for v in d:
                covered |= nbrs[v]
            if len(covered) == n:
                counts[size] += 1
    return counts


def brute_ie(n, edges):
    """Coefficients of sum_S (-1)^|S| (x+1)^(n-|N(S)|), expanded term by term."""
    nbrs = {v: set() for v in range(n)}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    coeffs = [0] * (n + 1)
    for size in range(n + 1):
        for s in combinations(range(n), size):
            cover = set()
            for v in s:
                cover |= nbrs[v]
            e = n - len(cover)
            for k in range(e + 1):
                coeffs[k] += (-1) ** size * comb(e, k)
    return coeffs


def trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_add(*ps):
    out = [0] * max(len(p) for p in ps)
    for p in ps:
        for i, c in enumerate(p):
            out[i] += c
    return trim(out)


def pascal(k):
    row = [1]
    for _ in range(k):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row
