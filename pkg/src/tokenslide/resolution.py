"""Bad-cycle machinery: resolvability tests and cycle turning.

A bad cycle is a chordless alternating even cycle of G[I∆J].  Turning it
(swapping its token side for its free side) is possible exactly when some
token slide sequence makes the cycle's free side acyclic against the current
set; such a sequence resolves the cycle, and the last resolving move always
runs from the class N_2(B) to N_1(B).

Resolving sequences come in two flavors, checked by two polynomial routes:

* external: all pre-resolution moves happen outside the cycle's neighborhood.
  Under a maximum host set this reduces to an augmenting-path search between
  the classes N_0(B) and N_1(B) in the graph minus the cycle.
* internal: all pre-resolution moves stay on vertices with two cycle
  neighbors.  For cycles of length >= 8 this reduces to a directed-path
  search in an auxiliary layered digraph (built for both cycle
  orientations); shorter cycles are handled by enumerating the O(n^3)
  candidate sets directly.

``is_resolvable_brute`` is the exhaustive ground truth the polynomial
routes are validated against.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .alternating import find_augmenting_path, free_vertices, is_maximum
from .graph import Graph, induced_subgraph
from .model import (
    TS,
    IndependentSet,
    Move,
    ReconfigSequence,
    decompose_symdiff,
    make_independent_set,
    validate_sequence,
)
from .oracle import CapExceeded, _bits

FILTER_ALL = "all"
FILTER_INTERNAL = "internal-only"
FILTER_EXTERNAL = "external-only"
FILTERS = (FILTER_ALL, FILTER_INTERNAL, FILTER_EXTERNAL)

KIND_EXTERNAL = "external"
KIND_INTERNAL_DIGRAPH = "internal-digraph"
KIND_INTERNAL_ENUMERATION = "internal-enumeration"

FORWARD = "forward"
REVERSED = "reversed"


@dataclass(frozen=True)
class BadCycle:
    """A chordless alternating even cycle with its derived structure.

    ``vertices`` lists the cycle in order with ``vertices[0]`` on the token
    side; ``a`` and ``b`` are the token side and the free side; ``n_classes``
    holds N_0(B), N_1(B), N_2(B); ``layers[t]`` collects the vertices whose
    B-neighborhood equals that of the t-th token-side cycle vertex.
    """

    graph: Graph
    vertices: tuple[int, ...]
    a: frozenset[int]
    b: frozenset[int]
    n_classes: tuple[frozenset[int], frozenset[int], frozenset[int]]
    layers: tuple[frozenset[int], ...]

    @property
    def half(self) -> int:
        return len(self.vertices) // 2

    @property
    def n0(self) -> frozenset[int]:
        return self.n_classes[0]

    @property
    def n1(self) -> frozenset[int]:
        return self.n_classes[1]

    @property
    def n2(self) -> frozenset[int]:
        return self.n_classes[2]

    def b_mask(self) -> int:
        return self.graph.mask_of(self.b)


def bad_cycle(g: Graph, i: IndependentSet, cycle: Iterable[int]) -> BadCycle:
    """Build and validate a BadCycle from cycle vertices in order (token side first)."""
    vs = tuple(cycle)
    if len(vs) < 4 or len(vs) % 2 != 0:
        raise ValueError(f"bad cycle must have even length >= 4, got {len(vs)}")
    imask = i.mask
    cmask = g.mask_of(vs)
    for t, v in enumerate(vs):
        if bool((imask >> v) & 1) != (t % 2 == 0):
            raise ValueError("cycle does not alternate against the host set")
        prev, nxt = vs[t - 1], vs[(t + 1) % len(vs)]
        if not (g.has_edge(v, prev) and g.has_edge(v, nxt)):
            raise ValueError("consecutive cycle vertices must be adjacent")
        if g.nbit(v) & cmask != (1 << prev) | (1 << nxt):
            raise ValueError(f"cycle has a chord at vertex {v}")
    a = frozenset(vs[0::2])
    b = frozenset(vs[1::2])
    bmask = g.mask_of(b)
    classes: list[set[int]] = [set(), set(), set()]
    for v in g.vertices():
        if (bmask >> v) & 1:
            continue
        c = (g.nbit(v) & bmask).bit_count()
        if c > 2:
            raise ValueError(
                f"vertex {v} has {c} neighbors on the free side; host graph is not claw-free"
            )
        classes[c].add(v)
    layers = []
    for t in range(len(vs) // 2):
        want = g.nbit(vs[2 * t]) & bmask
        layers.append(frozenset(v for v in g.vertices() if not (bmask >> v) & 1 and g.nbit(v) & bmask == want))
    return BadCycle(
        g,
        vs,
        a,
        b,
        (frozenset(classes[0]), frozenset(classes[1]), frozenset(classes[2])),
        tuple(layers),
    )


def extract_bad_cycles(g: Graph, i: IndependentSet, j: IndependentSet) -> list[BadCycle]:
    """All cycle components of G[i∆j] as BadCycles against ``i``, canonical order."""
    dec = decompose_symdiff(g, i, j)
    return [bad_cycle(g, i, c) for c in dec.cycles]


def _has_cycle_in_union(g: Graph, mask: int) -> bool:
    """Cycle detection on the subgraph induced by the bitmask ``mask``."""
    verts = _bits(mask)
    parent = {v: v for v in verts}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in verts:
        nb = g.nbit(u) & mask
        while nb:
            low = nb & -nb
            v = low.bit_length() - 1
            nb ^= low
            if u < v:
                ru, rv = find(u), find(v)
                if ru == rv:
                    return True
                parent[ru] = rv
    return False


def _brute_search(
    g: Graph,
    i: IndependentSet,
    c: BadCycle,
    move_filter: str,
    cap: int,
    want_sequence: bool,
):
    """Shared BFS engine behind the brute resolvability checks.

    Explores token-slide moves restricted by ``move_filter``; the final
    (resolving) move is exempt from the filter.  Returns a move list when a
    reachable set leaves the cycle's free side acyclic, else None.
    """
    if move_filter not in FILTERS:
        raise ValueError(f"unknown move filter {move_filter!r}")
    bmask = c.b_mask()
    n0mask = g.mask_of(c.n0)
    n2mask = g.mask_of(c.n2)

    def allowed(u: int, v: int) -> bool:
        if move_filter == FILTER_ALL:
            return True
        if move_filter == FILTER_INTERNAL:
            return (n2mask >> u) & 1 and (n2mask >> v) & 1
        return (n0mask >> u) & 1 and (n0mask >> v) & 1

    start = i.mask
    parent: dict[int, tuple[int, Move]] = {}
    seen = {start}
    q = deque([start])
    while q:
        cur = q.popleft()
        for u in _bits(cur):
            rest = cur & ~(1 << u)
            for v in g.neighbors(u):
                if (cur >> v) & 1 or g.nbit(v) & rest:
                    continue
                nxt = rest | (1 << v)
                if not _has_cycle_in_union(g, nxt | bmask):
                    if not want_sequence:
                        return []
                    moves = [Move(u, v)]
                    back = cur
                    while back != start:
                        back, mv = parent[back]
                        moves.append(mv)
                    moves.reverse()
                    return moves
                if not allowed(u, v) or nxt in seen:
                    continue
                seen.add(nxt)
                if len(seen) > cap:
                    raise CapExceeded(f"visited more than {cap} states")
                parent[nxt] = (cur, Move(u, v))
                q.append(nxt)
    return None


def is_resolvable_brute(
    g: Graph,
    i: IndependentSet,
    c: BadCycle,
    move_filter: str = FILTER_ALL,
    cap: int = 10**6,
) -> bool:
    """Exhaustively decide resolvability under a move filter (ground truth)."""
    return _brute_search(g, i, c, move_filter, cap, want_sequence=False) is not None


def shortest_resolving_sequence(
    g: Graph,
    i: IndependentSet,
    c: BadCycle,
    move_filter: str = FILTER_ALL,
    cap: int = 10**6,
) -> list[Move] | None:
    """A shortest resolving move list under the filter, or None."""
    return _brute_search(g, i, c, move_filter, cap, want_sequence=True)


@dataclass(frozen=True)
class ResolutionCertificate:
    """Replayable evidence that a bad cycle resolves.

    ``witness`` is an augmenting path (external), a digraph path starting at
    an N_1(B) vertex (internal-digraph), or an explicit move list
    (internal-enumeration).  The payload replays to a resolving sequence
    whose last move runs from N_2(B) to N_1(B).
    """

    kind: str
    cycle: tuple[int, ...]
    witness: tuple
    orientation: str | None = None

    def to_json(self, g: Graph) -> dict:
        out = {
            "kind": self.kind,
            "cycle": [g.label(v) for v in self.cycle],
        }
        if self.kind == KIND_INTERNAL_ENUMERATION:
            out["witness"] = [[g.label(a), g.label(b)] for a, b in self.witness]
        else:
            out["witness"] = [g.label(v) for v in self.witness]
        if self.orientation is not None:
            out["orientation"] = self.orientation
        return out


@dataclass(frozen=True)
class LayerDigraph:
    """Auxiliary digraph whose b-to-token-side paths certify internal resolvability."""

    orientation: str
    oriented_cycle: tuple[int, ...]
    layers: tuple[frozenset[int], ...]
    arcs: tuple[tuple[int, ...], ...]


def _oriented(c: BadCycle, orientation: str) -> tuple[int, ...]:
    if orientation == FORWARD:
        return c.vertices
    if orientation == REVERSED:
        return (c.vertices[0],) + tuple(reversed(c.vertices[1:]))
    raise ValueError(f"unknown orientation {orientation!r}")


def build_layer_digraph(g: Graph, i: IndependentSet, c: BadCycle, orientation: str = FORWARD) -> LayerDigraph:
    """Build the layered digraph for one cycle orientation.

    Arcs go from each layer to the cyclically next one between non-adjacent
    vertices, plus from each N_1(B) vertex to the non-neighbors in the layer
    matching its single free-side neighbor.  Defined for cycles of length at
    least 8; shorter cycles are decided by enumeration instead.
    """
    if len(c.vertices) < 8:
        raise ValueError("layer digraph requires cycle length >= 8")
    oriented = _oriented(c, orientation)
    n = len(oriented) // 2
    bmask = c.b_mask()
    layers = []
    for t in range(n):
        want = g.nbit(oriented[2 * t]) & bmask
        layers.append(frozenset(v for v in g.vertices() if not (bmask >> v) & 1 and g.nbit(v) & bmask == want))
    arcs: list[set[int]] = [set() for _ in range(g.n)]
    for t in range(n):
        nxt = layers[(t + 1) % n]
        for u in layers[t]:
            for v in nxt:
                if u != v and not g.has_edge(u, v):
                    arcs[u].add(v)
    pos = {v: t for t, v in enumerate(oriented)}
    for bvert in sorted(c.n1):
        bn = g.nbit(bvert) & bmask
        anchor = bn.bit_length() - 1  # the single free-side neighbor
        p = pos[anchor]  # odd position 2t-1 in the oriented cycle
        t = ((p + 1) // 2) % n
        for v in layers[t]:
            if v != bvert and not g.has_edge(bvert, v):
                arcs[bvert].add(v)
    return LayerDigraph(orientation, oriented, tuple(layers), tuple(tuple(sorted(s)) for s in arcs))


def _digraph_path(d: LayerDigraph, source: int, targets: frozenset[int]) -> list[int] | None:
    """Shortest directed path from ``source`` to the target set (BFS)."""
    if source in targets:
        return [source]
    parent: dict[int, int] = {source: source}
    q = deque([source])
    while q:
        u = q.popleft()
        for v in d.arcs[u]:
            if v in parent:
                continue
            parent[v] = u
            if v in targets:
                path = [v]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            q.append(v)
    return None


def externally_resolvable(g: Graph, i: IndependentSet, c: BadCycle) -> ResolutionCertificate | None:
    """Augmenting-path characterization of external resolvability.

    Requires ``i`` maximum (precondition error otherwise; non-maximum
    instances are handled by the non-maximum shortcut upstream).  First
    screens for a one-move resolve (an N_1(B) vertex whose only token
    neighbor sits on the cycle): a single-move resolving sequence has no
    pre-resolution moves at all, so it counts as external (and internal)
    even though it outlines no augmenting path.  Otherwise searches, for
    every pair x in N_0(B), y in N_1(B) in ascending order, for an
    (i minus cycle tokens)-augmenting path between them in the graph with
    the cycle removed.
    """
    if not is_maximum(g, i):
        raise ValueError("externally_resolvable requires a maximum independent set")
    imask = i.mask
    for y in sorted(c.n1):
        if (g.nbit(y) & imask).bit_count() == 1:
            # the single token neighbor is on the cycle (tokens adjacent to
            # the free side are exactly the cycle tokens), so sliding it to
            # y resolves in one move
            return ResolutionCertificate(KIND_EXTERNAL, c.vertices, (y,))
    removed = c.a | c.b
    sub, old_ids = induced_subgraph(g, [v for v in g.vertices() if v not in removed])
    to_sub = {v: t for t, v in enumerate(old_ids)}
    rest = make_independent_set(sub, [to_sub[v] for v in i.vertices if v not in c.a])
    fv = free_vertices(sub, rest)
    rest_set = rest.as_set()
    for x in sorted(c.n0):
        sx = to_sub[x]
        if sx in rest_set or sx not in fv:
            continue
        for y in sorted(c.n1):
            sy = to_sub[y]
            if sy in rest_set or sy not in fv:
                continue
            path = find_augmenting_path(sub, rest, sx, sy)
            if path is not None:
                witness = tuple(old_ids[v] for v in path.vertices)
                return ResolutionCertificate(KIND_EXTERNAL, c.vertices, witness)
    return None


def internally_resolvable(g: Graph, i: IndependentSet, c: BadCycle, cap: int = 10**6) -> ResolutionCertificate | None:
    """Digraph route for cycles of length >= 8, enumeration below.

    Digraph route: search both orientations for a directed path from an
    N_1(B) vertex whose token neighbors all lie on the cycle to any
    token-side cycle vertex; the first hit (ascending source order, BFS) is
    returned.  Enumeration route: breadth-first search over the restricted
    family of sets that keep all off-cycle tokens fixed, looking for one
    that leaves the free side acyclic.
    """
    if len(c.vertices) >= 8:
        imask = i.mask
        amask = g.mask_of(c.a)
        sources = sorted(b for b in c.n1 if g.nbit(b) & imask & ~amask == 0)
        for orientation in (FORWARD, REVERSED):
            d = build_layer_digraph(g, i, c, orientation)
            for b in sources:
                path = _digraph_path(d, b, c.a)
                if path is not None:
                    return ResolutionCertificate(
                        KIND_INTERNAL_DIGRAPH, c.vertices, tuple(path), orientation
                    )
        return None

    # Short cycles: only the <= 3 cycle tokens may move, so the family of
    # candidate sets is O(n^3) and plain BFS over it is exact.
    bmask = c.b_mask()
    fixed = i.mask & ~g.mask_of(c.a)
    start = i.mask
    parent: dict[int, tuple[int, Move]] = {}
    seen = {start}
    q = deque([start])
    while q:
        cur = q.popleft()
        for u in _bits(cur & ~fixed):
            rest = cur & ~(1 << u)
            for v in g.neighbors(u):
                if (cur >> v) & 1 or g.nbit(v) & rest:
                    continue
                nxt = rest | (1 << v)
                if not _has_cycle_in_union(g, nxt | bmask):
                    moves = [Move(u, v)]
                    back = cur
                    while back != start:
                        back, mv = parent[back]
                        moves.append(mv)
                    moves.reverse()
                    return ResolutionCertificate(
                        KIND_INTERNAL_ENUMERATION, c.vertices, tuple(moves)
                    )
                if nxt in seen:
                    continue
                seen.add(nxt)
                if len(seen) > cap:
                    raise CapExceeded(f"visited more than {cap} states")
                parent[nxt] = (cur, Move(u, v))
                q.append(nxt)
    return None


def _resolving_moves(g: Graph, c: BadCycle, cert: ResolutionCertificate) -> list[Move]:
    """Expand a certificate into the explicit resolving move list."""
    amask = g.mask_of(c.a)
    if cert.kind == KIND_EXTERNAL:
        path = list(cert.witness)
        if len(path) % 2 == 0:
            raise RuntimeError("external witness must have an odd number of vertices")
        moves = []
        for t in range(len(path) // 2):
            moves.append(Move(path[2 * t + 1], path[2 * t]))
        y = path[-1]
        anchors = _bits(g.nbit(y) & amask)
        if len(anchors) != 1:
            raise RuntimeError("external witness endpoint must have one cycle-token neighbor")
        moves.append(Move(anchors[0], y))
        return moves
    if cert.kind == KIND_INTERNAL_DIGRAPH:
        oriented = _oriented(c, cert.orientation or FORWARD)
        two_n = len(oriented)
        n = two_n // 2
        path = list(cert.witness)
        m = len(path) - 1
        if m < 1 or path[-1] not in c.a:
            raise RuntimeError("digraph witness must end on the token side")
        t = oriented.index(path[-1]) // 2
        ext = path + [oriented[(2 * (t + jj)) % two_n] for jj in range(1, n)]
        return [Move(ext[m - jj + n], ext[m - jj]) for jj in range(1, m + 1)]
    if cert.kind == KIND_INTERNAL_ENUMERATION:
        return [Move(*mv) for mv in cert.witness]
    raise ValueError(f"unknown certificate kind {cert.kind!r}")


def resolve_and_turn(g: Graph, i: IndependentSet, c: BadCycle, cert: ResolutionCertificate) -> ReconfigSequence:
    """Turn a resolvable cycle: a validated slide sequence from ``i`` to i∆V(C).

    Three phases: (1) replay the certificate's resolving prefix; (2) rotate
    the cycle's tokens onto its free side, starting with the resolving move;
    (3) reverse the off-cycle prefix moves so every non-cycle token returns
    home.  A replay failure means the certificate was invalid for this
    instance and raises RuntimeError.
    """
    resolving = _resolving_moves(g, c, cert)
    if not resolving:
        raise RuntimeError("certificate expands to an empty move list")
    prefix, last = resolving[:-1], resolving[-1]
    bmask = c.b_mask()

    cur = set(i.vertices)
    out: list[Move] = []

    def apply(mv: Move):
        if mv.src not in cur or mv.dst in cur:
            raise RuntimeError(f"certificate replay failed at move {mv}")
        cur.discard(mv.src)
        cur.add(mv.dst)
        out.append(mv)

    for mv in prefix:
        apply(mv)

    # Identify the current cycle: walk free-side vertices and their two
    # token neighbors alternately.  The prefix keeps one token per layer, so
    # the walk closes after the full cycle.
    curmask = g.mask_of(cur)
    b_order = [v for v in c.vertices if v in c.b]
    start_b = min(b_order)
    first_tokens = _bits(g.nbit(start_b) & curmask)
    if len(first_tokens) != 2:
        raise RuntimeError("replay lost the cycle structure before the resolving move")
    cp = [start_b, min(first_tokens)]
    while True:
        tok = cp[-1]
        nxt_b = _bits(g.nbit(tok) & bmask & ~(1 << cp[-2]))
        if len(nxt_b) != 1:
            raise RuntimeError("cycle token does not have exactly two free-side neighbors")
        if nxt_b[0] == start_b:
            break
        cp.append(nxt_b[0])
        toks = _bits(g.nbit(nxt_b[0]) & curmask & ~(1 << tok))
        if len(toks) != 1:
            raise RuntimeError("free-side vertex does not have exactly two token neighbors")
        cp.append(toks[0])

    u, v = last
    if u not in cp:
        raise RuntimeError("resolving move does not start on the current cycle")
    w_candidates = _bits(g.nbit(v) & bmask)
    if len(w_candidates) != 1:
        raise RuntimeError("resolving move target must have exactly one free-side neighbor")
    w = w_candidates[0]
    # Rotate/flip cp so it reads u, w, ... around the cycle.
    k = cp.index(u)
    cp = cp[k:] + cp[:k]
    if cp[1] != w:
        cp = [cp[0]] + cp[:0:-1]
    if cp[1] != w:
        raise RuntimeError("resolving move target is not beside its source on the cycle")

    two_n = len(cp)
    apply(last)
    for t in range(two_n - 2, 1, -2):
        apply(Move(cp[t], cp[t + 1]))
    apply(Move(v, cp[1]))

    # Unwind: reverse external prefix moves; internal ones stay (their tokens
    # are now parked on the free side).
    for mv in reversed(prefix):
        src_off = g.nbit(mv.src) & bmask == 0
        dst_off = g.nbit(mv.dst) & bmask == 0
        if src_off and dst_off:
            apply(Move(mv.dst, mv.src))
        elif g.nbit(mv.src) & bmask != g.nbit(mv.dst) & bmask:
            raise RuntimeError("prefix move changes free-side neighborhoods")

    seq = ReconfigSequence(TS, i, tuple(out))
    endset = validate_sequence(g, seq)
    want = tuple(sorted(i.as_set() ^ set(c.vertices)))
    if endset.vertices != want:
        raise RuntimeError("turn did not end at the symmetric difference with the cycle")
    return seq
