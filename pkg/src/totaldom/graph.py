"""Simple undirected graphs stored as per-vertex neighbourhood bitmasks.

A vertex set is a plain ``int`` used as a bitmask over ``0..n-1``.  Python
integers are unbounded, so constructors work at any order; only the
exponential routines in :mod:`totaldom.enumeration` enforce a cap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError, ResourceError

DEFAULT_CAP = 26
CAP_ENV_VAR = "TOTALDOM_CAP"


def resolve_cap(cap: int | None = None) -> int:
    """Explicit argument wins, then the environment variable, then 26."""
    if cap is not None:
        return int(cap)
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{CAP_ENV_VAR}={env!r} is not an integer") from None
    return DEFAULT_CAP


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InputError("adjacency length must equal vertex count")
        for v, mask in enumerate(self.adj):
            if mask >> self.n:
                raise InputError(f"neighbourhood of {v} has bits outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            m = mask
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")
                m ^= low

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v, mask in enumerate(self.adj):
            for u in iter_bits(mask >> (v + 1) << (v + 1)):
                out.append((v, u))
        return out

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def has_isolated_vertex(self) -> bool:
        return any(m == 0 for m in self.adj)

    def require_within_cap(self, cap: int | None = None) -> None:
        limit = resolve_cap(cap)
        if self.n == 0:
            raise InputError("graph has no vertices")
        if self.n > limit:
            raise ResourceError(f"order {self.n} exceeds enumeration cap {limit}")


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_set(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise InputError("vertex count must be nonnegative")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"self-loop ({u}, {v}) is not allowed in a simple graph")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def open_neighborhood(g: Graph, s: int) -> int:
    """Union of N(v) over the vertices v in ``s``."""
    out = 0
    for v in iter_bits(s):
        out |= g.adj[v]
    return out


def closed_neighborhood(g: Graph, s: int) -> int:
    return open_neighborhood(g, s) | s


def is_total_dominating(g: Graph, d: int) -> bool:
    return open_neighborhood(g, d) == g.full


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


# ---------------------------------------------------------------------------
# families


def _positive(name: str, value: int, least: int = 1) -> None:
    if value < least:
        raise InputError(f"{name} requires n >= {least}, got {value}")


def empty_graph(n: int) -> Graph:
    _positive("empty_graph", n)
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    _positive("complete", n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    _positive("path", n)
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    _positive("cycle", n, 3)
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def star(n: int) -> Graph:
    """K_{1,n}: centre 0 and leaves 1..n."""
    _positive("star", n)
    return from_edge_list(n + 1, [(0, v) for v in range(1, n + 1)])


def friendship(n: int) -> Graph:
    """n triangles glued at vertex 0; triangle i is {0, 2i-1, 2i}."""
    _positive("friendship", n)
    edges = []
    for i in range(1, n + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return from_edge_list(2 * n + 1, edges)


def book(n: int) -> Graph:
    """n four-cycles sharing the spine edge 0-1; page i is 0, 2i, 2i+1, 1."""
    _positive("book", n)
    edges = [(0, 1)]
    for i in range(1, n + 1):
        a, b = 2 * i, 2 * i + 1
        edges += [(0, a), (1, b), (a, b)]
    return from_edge_list(2 * n + 2, edges)


def complete_bipartite(m: int, n: int) -> Graph:
    _positive("complete_bipartite", m)
    _positive("complete_bipartite", n)
    return from_edge_list(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = tuple(mask << g.n for mask in h.adj)
    return Graph(g.n + h.n, g.adj + shifted)


def join(g: Graph, h: Graph) -> Graph:
    if g.n == 0 or h.n == 0:
        raise InputError("join needs two nonempty graphs")
    h_all = ((1 << h.n) - 1) << g.n
    g_all = g.full
    adj = [mask | h_all for mask in g.adj]
    adj += [(mask << g.n) | g_all for mask in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def corona(g: Graph, h: Graph) -> Graph:
    """Frucht-Harary corona: copy i of ``h`` sits at n + i*m .. n + i*m + m - 1
    and every vertex of it is joined to vertex i of ``g``.  Copies keep the
    internal edges of ``h``."""
    if g.n == 0 or h.n == 0:
        raise InputError("corona needs two nonempty graphs")
    n, m = g.n, h.n
    block = (1 << m) - 1
    adj = [g.adj[i] | (block << (n + i * m)) for i in range(n)]
    for i in range(n):
        base = n + i * m
        for j in range(m):
            adj.append((h.adj[j] << base) | (1 << i))
    return Graph(n * (1 + m), tuple(adj))


# ---------------------------------------------------------------------------
# edge-list text format


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first data line, then one ``u v`` pair per line.

    ``#`` starts a comment.  Errors carry the 1-based line number.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise InputError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise InputError(f"line {lineno}: expected a vertex count")
            n = nums[0]
            continue
        if len(nums) != 2:
            raise InputError(f"line {lineno}: expected an edge 'u v'")
        u, v = nums
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise InputError(f"line {lineno}: invalid edge ({u}, {v}) for n={n}")
        edges.append((u, v))
    if n is None:
        raise InputError("no vertex count found")
    return from_edge_list(n, edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
