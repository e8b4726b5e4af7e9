"""Seed-reproducible random instances for cross-checking and fuzzing.

All randomness flows through one ``random.Random`` handed in by the caller,
so corpora are bit-reproducible.  Generated hosts are connected and
claw-free; the two sets always have equal size.
"""

from __future__ import annotations

import random

from .graph import Graph, connected_components, gen_claw_free, induced_subgraph
from .model import IndependentSet, make_independent_set


def random_independent_vertices(g: Graph, rng: random.Random, k: int, tries: int = 40) -> list[int] | None:
    """A uniform-ish random independent set of size ``k``, or None."""
    verts = list(g.vertices())
    for _ in range(tries):
        rng.shuffle(verts)
        picked: list[int] = []
        mask = 0
        for v in verts:
            if g.nbit(v) & mask:
                continue
            picked.append(v)
            mask |= 1 << v
            if len(picked) == k:
                return sorted(picked)
    return None


def random_connected_instance(
    rng: random.Random, max_n: int, max_k: int = 4
) -> tuple[Graph, IndependentSet, IndependentSet]:
    """A connected claw-free host with two equal-size independent sets."""
    while True:
        n = rng.randint(3, max(3, max_n))
        density = rng.uniform(0.15, 0.55)
        g = gen_claw_free(n, density, seed=rng.getrandbits(32))
        comp = max(connected_components(g), key=len)
        if len(comp) < 2:
            continue
        if len(comp) < g.n:
            g, _ = induced_subgraph(g, comp)
        k = rng.randint(1, max_k)
        iv = random_independent_vertices(g, rng, k)
        jv = random_independent_vertices(g, rng, k)
        if iv is None or jv is None:
            continue
        return g, make_independent_set(g, iv), make_independent_set(g, jv)


def decorated_even_cycle(rng: random.Random, half: int, extras: int) -> Graph:
    """An even cycle with hugger vertices attached over short runs.

    Each extra vertex is adjacent to a run of 3 or 4 consecutive cycle
    vertices; extras with overlapping runs are joined by an edge (the usual
    way such gadgets stay claw-free).  Callers must still screen the result
    with find_claw; this routine only biases toward claw-freeness.
    """
    two_n = 2 * half
    edges = [(t, (t + 1) % two_n) for t in range(two_n)]
    runs: list[set[int]] = []
    vid = two_n
    for _ in range(extras):
        start = rng.randrange(two_n)
        length = rng.choice((3, 4))
        run = {(start + d) % two_n for d in range(length)}
        for c in sorted(run):
            edges.append((vid, c))
        for other, orun in enumerate(runs):
            if run & orun:
                edges.append((vid, two_n + other))
        runs.append(run)
        vid += 1
    norm = sorted({(min(u, v), max(u, v)) for u, v in edges})
    return Graph(vid, norm)
