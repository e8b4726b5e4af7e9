"""Brute-force ground truth: BFS over solution graphs and exact alpha.

States are independent sets encoded as bitmasks and keyed in hash sets, so
the oracle is exact and deterministic (moves expand in lexicographic order,
giving shortest certificates with a canonical tie-break).  Exceeding a state
cap is a distinct outcome, never silently treated as unreachable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .model import TJ, TS, IndependentSet, Move, ReconfigSequence


class CapExceeded(RuntimeError):
    """Search state space exceeded the configured cap; result is inconclusive."""


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _moves_from(g: Graph, mask: int, model: str):
    """Valid moves from a state, in lexicographic (src, dst) order."""
    for u in _bits(mask):
        rest = mask & ~(1 << u)
        targets = g.neighbors(u) if model == TS else g.vertices()
        for v in targets:
            if (mask >> v) & 1:
                continue
            if g.nbit(v) & rest:
                continue
            yield u, v


def oracle_reachable(
    g: Graph,
    i: IndependentSet,
    j: IndependentSet,
    model: str = TS,
    cap: int = 10**6,
) -> ReconfigSequence | None:
    """Shortest move sequence from ``i`` to ``j``, or None if unreachable.

    Plain BFS over the solution graph; raises CapExceeded when more than
    ``cap`` states are visited.
    """
    if len(i) != len(j):
        raise ValueError("sets must have equal size")
    start, goal = i.mask, j.mask
    if start == goal:
        return ReconfigSequence(model, i, ())
    parent: dict[int, tuple[int, Move]] = {}
    seen = {start}
    q = deque([start])
    while q:
        cur = q.popleft()
        for u, v in _moves_from(g, cur, model):
            nxt = (cur & ~(1 << u)) | (1 << v)
            if nxt in seen:
                continue
            seen.add(nxt)
            if len(seen) > cap:
                raise CapExceeded(f"visited more than {cap} states")
            parent[nxt] = (cur, Move(u, v))
            if nxt == goal:
                moves = []
                back = nxt
                while back != start:
                    back, mv = parent[back]
                    moves.append(mv)
                moves.reverse()
                return ReconfigSequence(model, i, tuple(moves))
            q.append(nxt)
    return None


def enumerate_independent_sets(g: Graph, k: int):
    """All independent sets of size ``k`` as bitmasks, in lexicographic vertex order."""
    if k == 0:
        yield 0
        return

    def grow(mask: int, lowest: int, left: int):
        if left == 0:
            yield mask
            return
        for v in range(lowest, g.n - left + 1):
            if g.nbit(v) & mask:
                continue
            yield from grow(mask | (1 << v), v + 1, left - 1)

    yield from grow(0, 0, k)


@dataclass(frozen=True)
class SolutionGraphStats:
    """Exact size, component structure and diameters of a solution graph."""

    model: str
    k: int
    nodes: int
    components: int
    diameters: tuple[int, ...]

    @property
    def max_diameter(self) -> int:
        return max(self.diameters, default=0)

    def csv_row(self) -> str:
        return f"{self.k},{self.model},{self.nodes},{self.components},{self.max_diameter}"


def solution_graph(g: Graph, k: int, model: str, cap: int = 10**6):
    """Nodes (masks) and undirected edge set of the size-``k`` solution graph."""
    nodes = []
    for mask in enumerate_independent_sets(g, k):
        nodes.append(mask)
        if len(nodes) > cap:
            raise CapExceeded(f"more than {cap} independent sets of size {k}")
    node_set = set(nodes)
    edges = set()
    for mask in nodes:
        for u, v in _moves_from(g, mask, model):
            nxt = (mask & ~(1 << u)) | (1 << v)
            if nxt in node_set:
                edges.add((min(mask, nxt), max(mask, nxt)))
    return nodes, edges


def solution_graph_stats(g: Graph, k: int, model: str, cap: int = 10**6) -> SolutionGraphStats:
    """Enumerate the full solution graph and measure its components exactly."""
    nodes, edges = solution_graph(g, k, model, cap)
    adj: dict[int, list[int]] = {m: [] for m in nodes}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)

    seen: set[int] = set()
    diameters = []
    for s in nodes:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        q = deque([s])
        while q:
            cur = q.popleft()
            for w in adj[cur]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    q.append(w)
        # exact diameter by BFS from every node of the component
        best = 0
        for src in comp:
            dist = {src: 0}
            q = deque([src])
            while q:
                cur = q.popleft()
                for w in adj[cur]:
                    if w not in dist:
                        dist[w] = dist[cur] + 1
                        q.append(w)
            best = max(best, max(dist.values()))
        diameters.append(best)
    return SolutionGraphStats(model, k, len(nodes), len(diameters), tuple(diameters))


def brute_alpha(g: Graph, max_n: int = 25) -> int:
    """Exact maximum independent set size by branch and bound."""
    if g.n > max_n:
        raise CapExceeded(f"brute_alpha capped at n={max_n}, got {g.n}")

    nbits = [g.nbit(v) for v in g.vertices()]
    best = 0

    def search(candidates: int, size: int):
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if candidates == 0:
            best = max(best, size)
            return
        low = candidates & -candidates
        v = low.bit_length() - 1
        search(candidates & ~low & ~nbits[v], size + 1)  # take v
        search(candidates & ~low, size)  # skip v
    search((1 << g.n) - 1, 0)
    return best
