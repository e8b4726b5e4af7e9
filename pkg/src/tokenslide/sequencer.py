"""Constructive builders for full reconfiguration certificates.

Three building blocks:

* a slide builder for the cycle-free case, driven by a potential that
  combines the number of unmatched tokens with their minimum distance and
  strictly decreases at every step (which also yields the
  2 * |I \\ J| * diam(G) length bound);
* a jump builder for the no-cycle case that moves every unmatched token
  exactly once;
* a jump builder for non-maximum sets that parks a token on an undominated
  vertex to unwind each cycle, sliding along an augmenting path first when
  the set is dominating.

``assemble_yes_certificate`` stitches cycle turns and the slide builder into
one validated end-to-end sequence, and ``expand_jumps_to_slides`` converts a
jump certificate into a slide certificate on a connected graph by expanding
each non-edge jump through the slide builder.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .alternating import find_any_augmenting_path, is_dominating, is_maximum
from .graph import Graph, bfs_distances, diameter, is_connected
from .model import (
    TJ,
    TS,
    IndependentSet,
    Move,
    ReconfigSequence,
    decompose_symdiff,
    make_independent_set,
    validate_sequence,
)
from .resolution import (
    ResolutionCertificate,
    extract_bad_cycles,
    externally_resolvable,
    internally_resolvable,
    resolve_and_turn,
)


@dataclass(frozen=True)
class PotentialState:
    """Progress measure of the slide builder: strictly decreases per step."""

    md: int
    phi: int


def potential(g: Graph, iv: set[int], jv: set[int], diam: int) -> PotentialState | None:
    """Potential of a pair of sets, or None once they coincide."""
    only_i = sorted(iv - jv)
    only_j = jv - iv
    if not only_i:
        return None
    md = min(d for u in only_i for v, d in enumerate(bfs_distances(g, u)) if v in only_j)
    return PotentialState(int(md), (len(only_i) - 1) * diam + int(md))


def _shortest_path(g: Graph, u: int, v: int) -> list[int]:
    """Deterministic shortest path: BFS with ascending neighbor expansion."""
    parent = {u: u}
    q = deque([u])
    while q:
        x = q.popleft()
        if x == v:
            break
        for w in g.neighbors(x):
            if w not in parent:
                parent[w] = x
                q.append(w)
    if v not in parent:
        raise ValueError(f"no path between {u} and {v}")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def ts_sequence_acyclic(g: Graph, i: IndependentSet, j: IndependentSet) -> ReconfigSequence:
    """Slide sequence between sets whose symmetric difference has no cycles.

    Preconditions: connected claw-free host, equal sizes, no cycles in
    G[i∆j].  The result is validated and its length is at most
    2 * |i \\ j| * diam(g).

    While the working copies differ, either the symmetric difference has a
    path component (move its end token, on whichever side), or it is
    edgeless and a closest unmatched token walks a shortest path toward its
    target, falling back to the blocking token closest to the target when
    the direct walk is obstructed.
    """
    if i.graph is not g or j.graph is not g:
        raise ValueError("sets must be bound to the given graph")
    if len(i) != len(j):
        raise ValueError("sets must have equal size")
    if not is_connected(g):
        raise ValueError("host graph must be connected")
    if decompose_symdiff(g, i, j).cycles:
        raise ValueError("symmetric difference must contain no cycles")

    diam = diameter(g) if g.n else 0
    iv, jv = i.as_set(), j.as_set()
    front: list[Move] = []
    back: list[Move] = []
    prev_phi: int | None = None

    while iv != jv:
        pot = potential(g, iv, jv, diam)
        assert pot is not None
        if prev_phi is not None and pot.phi >= prev_phi:
            raise RuntimeError("potential failed to decrease; inputs violate preconditions")
        prev_phi = pot.phi

        ci = make_independent_set(g, iv)
        cj = make_independent_set(g, jv)
        dec = decompose_symdiff(g, ci, cj)
        nontrivial = [p for p in dec.paths if len(p) >= 2]
        if nontrivial:
            p = min(nontrivial, key=lambda q: min(q[0], q[-1]))
            end = p[0] if p[0] < p[-1] else p[-1]
            nb = p[1] if end == p[0] else p[-2]
            if end in jv:
                front.append(Move(nb, end))
                iv.discard(nb)
                iv.add(end)
            else:
                back.append(Move(nb, end))
                jv.discard(nb)
                jv.add(end)
            continue

        # Edgeless difference: closest pair, lexicographic tie-break.
        best = None
        for u in sorted(iv - jv):
            du = bfs_distances(g, u)
            for v in sorted(jv - iv):
                cand = (du[v], u, v)
                if best is None or cand < best:
                    best = cand
        _, u, v = best
        path = _shortest_path(g, u, v)
        rest = iv - {u}
        blocked = [
            t
            for t in range(1, len(path))
            if path[t] in rest or any(w in rest for w in g.neighbors(path[t]))
        ]
        if not blocked:
            for t in range(len(path) - 1):
                front.append(Move(path[t], path[t + 1]))
            iv.discard(u)
            iv.add(v)
        else:
            t = max(blocked)
            if t >= len(path) - 1:
                raise RuntimeError("shortest-path endpoint blocked; inputs violate preconditions")
            holders = [w for w in g.neighbors(path[t]) if w in rest]
            if path[t] in rest or len(holders) != 1:
                raise RuntimeError("blocking token not unique; host graph is not claw-free")
            x = holders[0]
            front.append(Move(x, path[t]))
            for s in range(t, len(path) - 1):
                front.append(Move(path[s], path[s + 1]))
            iv.discard(x)
            iv.add(v)

    moves = front + [Move(b, a) for a, b in reversed(back)]
    seq = ReconfigSequence(TS, i, tuple(moves))
    endset = validate_sequence(g, seq)
    if endset.vertices != j.vertices:
        raise RuntimeError("acyclic builder did not reach the target set")
    bound = 2 * len(i.as_set() - j.as_set()) * diam
    if len(moves) > bound:
        raise RuntimeError(f"sequence length {len(moves)} exceeds bound {bound}")
    return seq


def _symdiff_has_cycle(g: Graph, srcs: set[int], dsts: set[int]) -> bool:
    """Union-find cycle check on the bipartite src/dst difference graph."""
    parent = {v: v for v in srcs | dsts}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in srcs:
        for v in g.neighbors(u):
            if v not in dsts:
                continue
            ru, rv = find(u), find(v)
            if ru == rv:
                return True
            parent[ru] = rv
    return False


def tj_sequence_no_even_cycles(g: Graph, i: IndependentSet, j: IndependentSet) -> ReconfigSequence:
    """Jump sequence of length exactly |i \\ j| when G[i∆j] has no cycles.

    Greedy: repeatedly pick the smallest target vertex with at most one
    unmoved source neighbor.  A forest always offers one, and vacating a
    source never blocks later placements, so the greedy order always
    completes with each token jumping exactly once.
    """
    if i.graph is not g or j.graph is not g:
        raise ValueError("sets must be bound to the given graph")
    if len(i) != len(j):
        raise ValueError("sets must have equal size")
    srcs = i.as_set() - j.as_set()
    dsts = j.as_set() - i.as_set()
    # any cycle in the difference is even (src and dst sides are independent)
    if _symdiff_has_cycle(g, srcs, dsts):
        raise ValueError("symmetric difference contains an (even) cycle")

    moves: list[Move] = []
    while dsts:
        pick = None
        for v in sorted(dsts):
            nbrs = [u for u in g.neighbors(v) if u in srcs]
            if len(nbrs) <= 1:
                pick = (v, nbrs[0] if nbrs else min(srcs))
                break
        if pick is None:
            raise RuntimeError("no placeable target; symmetric difference has a cycle")
        v, u = pick
        moves.append(Move(u, v))
        srcs.discard(u)
        dsts.discard(v)

    seq = ReconfigSequence(TJ, i, tuple(moves))
    endset = validate_sequence(g, seq)
    if endset.vertices != j.vertices:
        raise RuntimeError("jump builder did not reach the target set")
    return seq


def tj_sequence_nonmaximum(g: Graph, i: IndependentSet, j: IndependentSet) -> ReconfigSequence:
    """Jump sequence between equal-size sets when ``i`` is not maximum.

    If cycles are present and ``i`` dominates, slide along an augmenting
    path first (afterwards its far endpoint is undominated).  Then park a
    token on the smallest undominated vertex, unwind each cycle from the
    parked position (around the cycle, then the parked token fills the last
    gap), and finish with the exact-length jump builder.
    """
    if i.graph is not g or j.graph is not g:
        raise ValueError("sets must be bound to the given graph")
    if len(i) != len(j):
        raise ValueError("sets must have equal size")
    if is_maximum(g, i):
        raise ValueError("tj_sequence_nonmaximum requires a non-maximum set")

    cur = i.as_set()
    moves: list[Move] = []

    def current() -> IndependentSet:
        return make_independent_set(g, cur)

    if decompose_symdiff(g, i, j).cycles:
        if is_dominating(g, cur):
            path = find_any_augmenting_path(g, current())
            if path is None:
                raise RuntimeError("dominating non-maximum set admits no augmenting path")
            p = path.vertices
            for t in range(len(p) // 2, 0, -1):
                moves.append(Move(p[2 * t - 1], p[2 * t]))
                cur.discard(p[2 * t - 1])
                cur.add(p[2 * t])
        undominated = [
            v for v in g.vertices() if v not in cur and not any(w in cur for w in g.neighbors(v))
        ]
        if not undominated:
            raise RuntimeError("expected an undominated vertex after augmenting")
        w = min(undominated)
        while True:
            cycles = decompose_symdiff(g, current(), j).cycles
            if not cycles:
                break
            if w in cur or any(x in cur for x in g.neighbors(w)):
                raise RuntimeError("parking vertex became dominated")
            cyc = cycles[0]
            tokens, others = list(cyc[0::2]), list(cyc[1::2])
            moves.append(Move(tokens[0], w))
            cur.discard(tokens[0])
            cur.add(w)
            for t in range(len(tokens) - 1, 0, -1):
                moves.append(Move(tokens[t], others[t]))
                cur.discard(tokens[t])
                cur.add(others[t])
            moves.append(Move(w, others[0]))
            cur.discard(w)
            cur.add(others[0])

    tail = tj_sequence_no_even_cycles(g, current(), j)
    moves.extend(tail.moves)
    seq = ReconfigSequence(TJ, i, tuple(moves))
    endset = validate_sequence(g, seq)
    if endset.vertices != j.vertices:
        raise RuntimeError("non-maximum jump builder did not reach the target set")
    return seq


def assemble_yes_certificate(
    g: Graph,
    i: IndependentSet,
    j: IndependentSet,
    model: str,
    certs: dict[tuple[int, ...], ResolutionCertificate],
) -> ReconfigSequence:
    """Turn every cycle of G[i∆j], then bridge the remaining paths by slides.

    ``certs`` maps cycle vertex tuples (as extracted against ``i``) to their
    certificates.  After the first turn the working set changes, so later
    cycles are re-certified against the current set; they stay resolvable
    because a turn can always be undone by slides.  All emitted moves are
    slides, so the result is also a valid jump sequence and is tagged with
    the requested ``model``.
    """
    cur = i
    out: list[Move] = []
    first = True
    while True:
        cycles = extract_bad_cycles(g, cur, j)
        if not cycles:
            break
        c = cycles[0]
        cert = certs.get(c.vertices) if first else None
        if cert is None:
            cert = externally_resolvable(g, cur, c) or internally_resolvable(g, cur, c)
        if cert is None:
            raise RuntimeError("cycle lost resolvability during assembly")
        turn = resolve_and_turn(g, cur, c, cert)
        out.extend(turn.moves)
        cur = make_independent_set(g, cur.as_set() ^ set(c.vertices))
        first = False
    tail = ts_sequence_acyclic(g, cur, j)
    out.extend(tail.moves)
    seq = ReconfigSequence(model, i, tuple(out))
    endset = validate_sequence(g, seq)
    if endset.vertices != j.vertices:
        raise RuntimeError("assembled certificate did not reach the target set")
    return seq


def expand_jumps_to_slides(g: Graph, seq: ReconfigSequence) -> ReconfigSequence:
    """Rewrite a jump sequence as slides on a connected host.

    Each jump across a non-edge is expanded through the acyclic slide
    builder on the two-vertex difference it induces.
    """
    if not is_connected(g):
        raise ValueError("jump expansion requires a connected graph")
    cur = seq.start
    out: list[Move] = []
    for mv in seq.moves:
        nxt = make_independent_set(g, (cur.as_set() - {mv.src}) | {mv.dst})
        if g.has_edge(mv.src, mv.dst):
            out.append(mv)
        else:
            out.extend(ts_sequence_acyclic(g, cur, nxt).moves)
        cur = nxt
    ts = ReconfigSequence(TS, seq.start, tuple(out))
    endset = validate_sequence(g, ts)
    if endset.vertices != seq.end_vertices():
        raise RuntimeError("jump expansion changed the endpoint")
    return ts
