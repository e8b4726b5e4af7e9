"""Undirected simple graphs on contiguous integer ids.

Vertices are ``0..n-1``.  Adjacency is stored both as sorted tuples (for
deterministic iteration) and as Python-int bitmasks (for O(1) set algebra
at desk scale).  External string labels exist only at the parse/print
boundary; everything else works on ids.  Graphs are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

INFINITY = float("inf")


class ParseError(ValueError):
    """Malformed edge-list document; carries the offending 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass(frozen=True)
class ClawWitness:
    """An induced claw: ``center`` adjacent to three pairwise non-adjacent leaves."""

    center: int
    leaves: tuple[int, int, int]


class Graph:
    """Immutable simple graph with sorted neighbor lists and bitmask adjacency."""

    __slots__ = ("n", "_adj", "_bits", "labels", "_index", "_edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self.n = n
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)
        self._bits: tuple[int, ...] = tuple(sum(1 << w for w in s) for s in adj)
        if labels is None:
            labels = [str(v) for v in range(n)]
        if len(labels) != n:
            raise ValueError("label table size must equal vertex count")
        self.labels: tuple[str, ...] = tuple(labels)
        self._index = {name: v for v, name in enumerate(self.labels)}
        if len(self._index) != n:
            raise ValueError("vertex labels must be distinct")
        self._edge_count = m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def nbit(self, v: int) -> int:
        """Neighborhood of ``v`` as a bitmask."""
        return self._bits[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (self._bits[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edge_count(self) -> int:
        return self._edge_count

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    def label(self, v: int) -> str:
        return self.labels[v]

    def vertex(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown vertex label {label!r}") from None

    def mask_of(self, vs: Iterable[int]) -> int:
        return sum(1 << v for v in vs)

    def to_edge_list(self) -> str:
        """Emit the parseable edge-list form with a vertex-count header.

        Edges are label-sorted (endpoints too), so the output is a canonical
        form: parsing and printing it again reproduces it byte for byte.
        """
        lines = [f"vertices: {self.n}"]
        pairs = sorted(
            tuple(sorted((self.labels[u], self.labels[v]))) for u, v in self.edges()
        )
        lines.extend(f"{a} {b}" for a, b in pairs)
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self._edge_count})"


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    One edge per line as ``u v`` with distinct labels; ``#`` starts a comment;
    an optional ``vertices: N`` header declares the total count (needed for
    trailing isolated vertices).  Ids are assigned by first appearance.
    Duplicate edges, self-loops and malformed lines are rejected with their
    line number.
    """
    index: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    header_n: int | None = None

    def vid(name: str) -> int:
        if name not in index:
            index[name] = len(labels)
            labels.append(name)
        return index[name]

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if header_n is not None:
                raise ParseError("repeated 'vertices:' header", line_no)
            body = line[len("vertices:"):].strip()
            if not body.isdigit():
                raise ParseError(f"bad vertex count {body!r}", line_no)
            header_n = int(body)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line_no)
        a, b = parts
        if a == b:
            raise ParseError(f"self-loop at {a!r}", line_no)
        u, v = vid(a), vid(b)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {a!r} {b!r}", line_no)
        seen.add(key)
        edges.append((u, v))

    n = len(labels)
    if header_n is not None:
        if header_n < n:
            raise ParseError(f"header declares {header_n} vertices but {n} labels appear")
        while len(labels) < header_n:
            name = str(len(labels))
            while name in index:
                name = "_" + name
            index[name] = len(labels)
            labels.append(name)
        n = header_n
    return Graph(n, edges, labels)


def find_claw(g: Graph) -> ClawWitness | None:
    """Return the first induced claw, or None if ``g`` is claw-free.

    Deterministic: lowest center id, then lexicographically smallest leaf
    triple (neighbor lists are sorted, so ``combinations`` enumerates in order).
    """
    for center in g.vertices():
        nbrs = g.neighbors(center)
        if len(nbrs) < 3:
            continue
        for a, b, c in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return ClawWitness(center, (a, b, c))
    return None


def bfs_distances(g: Graph, source: int) -> list[int | float]:
    """Distances from ``source``; unreachable vertices get ``INFINITY``."""
    dist: list[int | float] = [INFINITY] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for w in g.neighbors(u):
            if dist[w] is INFINITY:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> int | float:
    """Shortest-path length between ``u`` and ``v``; INFINITY across components."""
    if u == v:
        return 0
    dist = {u: 0}
    q = deque([u])
    while q:
        x = q.popleft()
        for w in g.neighbors(x):
            if w not in dist:
                dist[w] = dist[x] + 1
                if w == v:
                    return dist[w]
                q.append(w)
    return INFINITY


def diameter(g: Graph) -> int:
    """Maximum pairwise distance.  Raises ValueError on disconnected input."""
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    best = 0
    for v in g.vertices():
        dist = bfs_distances(g, v)
        far = max(dist)
        if far is INFINITY:
            raise ValueError("graph is disconnected")
        best = max(best, int(far))
    return best


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return all(d is not INFINITY for d in bfs_distances(g, 0))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in g.vertices():
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    q.append(w)
        comps.append(sorted(comp))
    return comps


def neighborhood_count_sets(g: Graph, s: Iterable[int]) -> dict[int, set[int]]:
    """Partition V(g) minus ``s`` by the number of neighbors inside ``s``.

    Keys run from 0 to the maximum observed count; intermediate empty classes
    are included so callers can assert absences.
    """
    smask = g.mask_of(s)
    counts: dict[int, set[int]] = {0: set()}
    for v in g.vertices():
        if (smask >> v) & 1:
            continue
        c = (g.nbit(v) & smask).bit_count()
        counts.setdefault(c, set()).add(v)
    top = max(counts)
    return {i: counts.get(i, set()) for i in range(top + 1)}


def line_graph(g: Graph) -> Graph:
    """One vertex per edge of ``g``; adjacency iff the source edges share an endpoint."""
    src = list(g.edges())
    n = len(src)
    edges = []
    for a, b in combinations(range(n), 2):
        ua, va = src[a]
        ub, vb = src[b]
        if {ua, va} & {ub, vb}:
            edges.append((a, b))
    labels = [f"{g.label(u)}-{g.label(v)}" for u, v in src]
    return Graph(n, edges, labels)


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vs`` plus the new-id -> old-id table."""
    old = sorted(set(vs))
    pos = {v: t for t, v in enumerate(old)}
    edges = [(pos[u], pos[v]) for u, v in g.edges() if u in pos and v in pos]
    labels = [g.label(v) for v in old]
    return Graph(len(old), edges, labels), old


def gen_claw_free(n: int, density: float = 0.3, seed: int = 0) -> Graph:
    """Random claw-free graph, deterministic under a fixed seed.

    Starts from G(n, density) and repairs: while a claw exists, delete the
    edge from the lexicographically first claw's center to its first leaf.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    edges = set()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                edges.add((u, v))
    g = Graph(n, sorted(edges))
    while (w := find_claw(g)) is not None:
        c, l = w.center, w.leaves[0]
        edges.discard((min(c, l), max(c, l)))
        g = Graph(n, sorted(edges))
    return g
