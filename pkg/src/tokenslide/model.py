"""Independent sets, moves, move sequences and symmetric-difference structure.

A move sequence stores only its start set and the ordered moves; intermediate
sets are recomputed during validation, which keeps certificates compact.
All types are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .graph import Graph

TS = "TS"
TJ = "TJ"
MODELS = (TS, TJ)


class NotIndependentError(ValueError):
    """Vertex set contains an edge; ``edge`` names an offending pair."""

    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"vertices {edge[0]} and {edge[1]} are adjacent")
        self.edge = edge


class StructuralError(ValueError):
    """The symmetric difference has a degree-3 vertex; the host graph is not claw-free."""


class SequenceError(ValueError):
    """A move sequence violates a rule; carries the first bad step index."""

    def __init__(self, step: int, rule: str):
        super().__init__(f"step {step}: {rule}")
        self.step = step
        self.rule = rule


@dataclass(frozen=True)
class IndependentSet:
    """Sorted vertex set validated as pairwise non-adjacent against one graph."""

    graph: Graph
    vertices: tuple[int, ...]

    @property
    def mask(self) -> int:
        return self.graph.mask_of(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in set(self.vertices)

    def as_set(self) -> set[int]:
        return set(self.vertices)

    def labels(self) -> list[str]:
        return [self.graph.label(v) for v in self.vertices]

    def replace(self, vertices: Iterable[int]) -> "IndependentSet":
        """Rebind (and re-validate) a new vertex set against the same graph."""
        return make_independent_set(self.graph, vertices)


def make_independent_set(g: Graph, vs: Iterable[int]) -> IndependentSet:
    """Validate ``vs`` as an independent set of ``g``; raises NotIndependentError."""
    vertices = tuple(sorted(set(vs)))
    for v in vertices:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    mask = g.mask_of(vertices)
    for v in vertices:
        hit = g.nbit(v) & mask
        if hit:
            w = hit.bit_length() - 1
            raise NotIndependentError((min(v, w), max(v, w)))
    return IndependentSet(g, vertices)


class Move(NamedTuple):
    src: int
    dst: int


@dataclass(frozen=True)
class ReconfigSequence:
    """An ordered list of moves under a model tag, anchored at a start set."""

    model: str
    start: IndependentSet
    moves: tuple[Move, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)

    def end_vertices(self) -> tuple[int, ...]:
        """Final vertex set after applying all moves (no validity checking)."""
        cur = set(self.start.vertices)
        for src, dst in self.moves:
            cur.discard(src)
            cur.add(dst)
        return tuple(sorted(cur))

    def to_json(self) -> dict:
        g = self.start.graph
        return {
            "model": self.model,
            "start": [g.label(v) for v in self.start.vertices],
            "moves": [[g.label(a), g.label(b)] for a, b in self.moves],
        }


def validate_sequence(g: Graph, seq: ReconfigSequence) -> IndependentSet:
    """Check a sequence move by move and return the final independent set.

    Rules per step: the moved token must be present, the target free, the
    result independent, and (TS only) source-target must be an edge of ``g``.
    Raises SequenceError naming the first violating step.
    """
    if seq.model not in MODELS:
        raise ValueError(f"unknown model {seq.model!r}")
    if seq.start.graph is not g:
        raise ValueError("sequence start is bound to a different graph")
    cur = set(seq.start.vertices)
    mask = seq.start.mask
    for step, (src, dst) in enumerate(seq.moves):
        if src == dst:
            raise SequenceError(step, f"degenerate move {src}->{dst}")
        if src not in cur:
            raise SequenceError(step, f"no token on {src}")
        if dst in cur:
            raise SequenceError(step, f"target {dst} already occupied")
        if seq.model == TS and not g.has_edge(src, dst):
            raise SequenceError(step, f"{src}{dst} is not an edge")
        rest = mask & ~(1 << src)
        if g.nbit(dst) & rest:
            w = (g.nbit(dst) & rest).bit_length() - 1
            raise SequenceError(step, f"target {dst} adjacent to token on {w}")
        cur.discard(src)
        cur.add(dst)
        mask = rest | (1 << dst)
    return IndependentSet(g, tuple(sorted(cur)))


@dataclass(frozen=True)
class SymDiffDecomposition:
    """Path and cycle components of G[I∆J], in canonical vertex order."""

    paths: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]


def decompose_symdiff(g: Graph, i: IndependentSet, j: IndependentSet) -> SymDiffDecomposition:
    """Split G[i∆j] into path and cycle components.

    Every vertex of the symmetric difference has degree <= 2 there when the
    host graph is claw-free; a degree-3 vertex raises StructuralError.
    Cycles are listed starting at their smallest i-side vertex, followed by
    the smaller of its two cycle neighbors, so downstream indexing is
    deterministic.  Paths start at their smaller endpoint.
    """
    if i.graph is not g or j.graph is not g:
        raise ValueError("sets must be bound to the given graph")
    sym = sorted(i.as_set() ^ j.as_set())
    smask = g.mask_of(sym)
    nbr: dict[int, list[int]] = {}
    for v in sym:
        ns = [w for w in g.neighbors(v) if (smask >> w) & 1]
        if len(ns) > 2:
            raise StructuralError(
                f"vertex {v} has degree {len(ns)} in the symmetric difference; host graph is not claw-free"
            )
        nbr[v] = ns

    unseen = set(sym)
    paths: list[tuple[int, ...]] = []
    cycles: list[tuple[int, ...]] = []

    def walk(start: int, first: int | None) -> list[int]:
        out = [start]
        prev, cur = start, first
        while cur is not None and cur != start:
            out.append(cur)
            nxt = [w for w in nbr[cur] if w != prev]
            prev, cur = cur, (nxt[0] if nxt else None)
        return out

    # Path components first: walk from endpoints (degree <= 1).
    for v in sym:
        if v in unseen and len(nbr[v]) <= 1:
            comp = walk(v, nbr[v][0] if nbr[v] else None)
            unseen.difference_update(comp)
            if comp[0] > comp[-1]:
                comp.reverse()
            paths.append(tuple(comp))
    # Remaining components are cycles (all degree 2).
    iset = i.as_set()
    while unseen:
        start = min(v for v in unseen if v in iset)
        a, b = nbr[start]
        comp = walk(start, min(a, b))
        unseen.difference_update(comp)
        if len(comp) % 2 != 0:
            raise StructuralError(f"odd cycle of length {len(comp)} in symmetric difference")
        for t, v in enumerate(comp):
            if (v in iset) != (t % 2 == 0):
                raise StructuralError("cycle does not alternate between the two sets")
        cycles.append(tuple(comp))

    paths.sort(key=lambda p: p[0])
    cycles.sort(key=lambda c: c[0])
    return SymDiffDecomposition(tuple(paths), tuple(cycles))
