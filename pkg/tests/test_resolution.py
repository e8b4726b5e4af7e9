"""Bad cycles: structure, resolvability characterizations, turning.

Ground truth throughout is the exhaustive BFS (is_resolvable_brute /
shortest_resolving_sequence); the polynomial routes must agree with it on
every fuzzed instance.
"""

import random

import pytest

from tokenslide import (
    Move,
    brute_alpha,
    build_layer_digraph,
    extract_bad_cycles,
    externally_resolvable,
    internally_resolvable,
    is_maximum,
    is_resolvable_brute,
    make_independent_set,
    resolve_and_turn,
    shortest_resolving_sequence,
    validate_sequence,
)
from tokenslide.resolution import FILTER_ALL, FILTER_EXTERNAL, FILTER_INTERNAL

from families import (
    chained_huggers,
    cycle_with_free_neighbor,
    planted_cycle_corpus,
    plain_cycle,
    ring_with_tail,
)


def corpus(seed=2024, count=60):
    return planted_cycle_corpus(random.Random(seed), count)


class TestExtract:
    def test_c6(self, c6):
        g, i, j, _ = c6
        cycles = extract_bad_cycles(g, i, j)
        assert len(cycles) == 1
        c = cycles[0]
        assert {g.label(v) for v in c.a} == {"v0", "v2", "v4"}
        assert {g.label(v) for v in c.b} == {"v1", "v3", "v5"}

    def test_p4_empty(self, p4):
        g, i, j, _ = p4
        assert extract_bad_cycles(g, i, j) == []

    def test_fig1(self, fig1):
        g, i, j, _ = fig1
        cycles = extract_bad_cycles(g, i, j)
        assert len(cycles) == 1
        c = cycles[0]
        assert len(c.vertices) == 8
        assert {g.label(v) for v in c.n1} == {"b"}
        assert c.n0 == frozenset()

    def test_neighborhood_properties_on_corpus(self):
        """The four structural facts about bad-cycle neighborhoods."""
        checked = 0
        for g, i, j in corpus():
            imask = i.mask
            for c in extract_bad_cycles(g, i, j):
                checked += 1
                bmask = c.b_mask()
                amask = g.mask_of(c.a)
                # (a) nobody outside B has three or more B-neighbors
                for v in g.vertices():
                    if not (bmask >> v) & 1:
                        assert (g.nbit(v) & bmask).bit_count() <= 2
                # (b) no edges between the two- and zero-neighbor classes
                for v in c.n2:
                    assert not any(w in c.n0 for w in g.neighbors(v))
                # (c) N(B)\A == N(A)\B
                nb = {v for v in g.vertices() if g.nbit(v) & bmask and not (bmask >> v) & 1}
                na = {v for v in g.vertices() if g.nbit(v) & amask and not (amask >> v) & 1}
                assert nb - c.a == na - c.b
                # (d) tokens adjacent to B are exactly the cycle tokens
                assert {v for v in nb if (imask >> v) & 1} == set(c.a)
        assert checked >= 30


class TestBruteResolvability:
    def test_c6_standalone_unresolvable(self, c6):
        g, i, j, _ = c6
        c = extract_bad_cycles(g, i, j)[0]
        for f in (FILTER_ALL, FILTER_INTERNAL, FILTER_EXTERNAL):
            assert not is_resolvable_brute(g, i, c, f)

    def test_fig1_internal_only(self, fig1):
        g, i, j, _ = fig1
        c = extract_bad_cycles(g, i, j)[0]
        assert is_resolvable_brute(g, i, c, FILTER_INTERNAL)
        assert not is_resolvable_brute(g, i, c, FILTER_EXTERNAL)
        assert is_resolvable_brute(g, i, c, FILTER_ALL)

    def test_internal_or_external_covers_all(self):
        """A resolvable cycle is internally or externally resolvable."""
        for g, i, j in corpus():
            for c in extract_bad_cycles(g, i, j):
                full = is_resolvable_brute(g, i, c, FILTER_ALL)
                split = is_resolvable_brute(g, i, c, FILTER_INTERNAL) or is_resolvable_brute(
                    g, i, c, FILTER_EXTERNAL
                )
                assert full == split

    def test_shortest_sequences_have_pre_resolution_structure(self):
        """Before the resolving move: tokens stay in the 0/2 classes and
        every move preserves its token's B-neighborhood."""
        for g, i, j in corpus(seed=5, count=40):
            for c in extract_bad_cycles(g, i, j):
                seq = shortest_resolving_sequence(g, i, c, FILTER_ALL)
                if seq is None:
                    continue
                bmask = c.b_mask()
                cur = i.as_set()
                for mv in seq[:-1]:
                    assert g.nbit(mv.src) & bmask == g.nbit(mv.dst) & bmask
                    cur.discard(mv.src)
                    cur.add(mv.dst)
                    for v in cur:
                        assert (g.nbit(v) & bmask).bit_count() in (0, 2)
                last = seq[-1]
                assert (g.nbit(last.src) & bmask).bit_count() == 2
                assert (g.nbit(last.dst) & bmask).bit_count() == 1


class TestExternal:
    def test_fig1_none(self, fig1):
        g, i, j, _ = fig1
        c = extract_bad_cycles(g, i, j)[0]
        assert externally_resolvable(g, i, c) is None

    def test_c6_none(self, c6):
        g, i, j, _ = c6
        c = extract_bad_cycles(g, i, j)[0]
        assert externally_resolvable(g, i, c) is None

    def test_ring_with_tail_certificate(self):
        g, i, j = ring_with_tail(4)
        c = extract_bad_cycles(g, i, j)[0]
        cert = externally_resolvable(g, i, c)
        assert cert is not None and cert.kind == "external"
        x, t, y = g.n - 1, g.n - 2, g.n - 3
        assert cert.witness == (x, t, y)

    def test_requires_maximum(self, p5):
        g = p5[0]
        i = make_independent_set(g, [g.vertex("v1"), g.vertex("v3")])
        j = make_independent_set(g, [g.vertex("v0"), g.vertex("v2")])
        # fabricate a cycle from another instance to hit the precondition
        gc, ic, jc = plain_cycle(3)
        c = extract_bad_cycles(gc, ic, jc)[0]
        with pytest.raises(ValueError, match="maximum"):
            externally_resolvable(g, i, c)

    def test_agrees_with_brute_on_corpus(self):
        compared = 0
        for g, i, j in corpus():
            if not is_maximum(g, i):
                continue
            for c in extract_bad_cycles(g, i, j):
                compared += 1
                got = externally_resolvable(g, i, c) is not None
                want = is_resolvable_brute(g, i, c, FILTER_EXTERNAL)
                assert got == want
        assert compared >= 20


class TestLayerDigraph:
    def test_fig1_expected_arcs(self, fig1):
        g, i, j, _ = fig1
        c = extract_bad_cycles(g, i, j)[0]
        d = build_layer_digraph(g, i, c, "forward")
        want = [
            ("b", "u1"),
            ("u1", "u2"),
            ("u2", "u3"),
            ("u3", "u4"),
            ("u4", "c2"),
            ("c0", "c2"),
            ("c2", "c4"),
            ("c4", "c6"),
            ("c6", "c0"),
        ]
        for a, b in want:
            assert g.vertex(b) in d.arcs[g.vertex(a)], f"missing arc {a}->{b}"

    def test_arc_definition_scan(self, fig1):
        g, i, j, _ = fig1
        c = extract_bad_cycles(g, i, j)[0]
        n = c.half
        for orientation in ("forward", "reversed"):
            d = build_layer_digraph(g, i, c, orientation)
            layer_of = {}
            for t, layer in enumerate(d.layers):
                for v in layer:
                    layer_of[v] = t
            for u in g.vertices():
                for v in d.arcs[u]:
                    assert not g.has_edge(u, v)
                    assert layer_of[v] is not None
                    if u in layer_of:
                        assert layer_of[v] == (layer_of[u] + 1) % n
                    else:
                        assert u in c.n1

    def test_short_cycle_rejected(self, c6):
        g, i, j, _ = c6
        c = extract_bad_cycles(g, i, j)[0]
        with pytest.raises(ValueError, match=">= 8"):
            build_layer_digraph(g, i, c)


class TestInternal:
    def test_fig1_digraph_path(self, fig1):
        g, i, j, _ = fig1
        c = extract_bad_cycles(g, i, j)[0]
        cert = internally_resolvable(g, i, c)
        assert cert is not None and cert.kind == "internal-digraph"
        assert [g.label(v) for v in cert.witness] == ["b", "u1", "u2", "u3", "u4", "c2"]

    def test_c6_enumeration_finds_nothing(self, c6):
        g, i, j, _ = c6
        c = extract_bad_cycles(g, i, j)[0]
        assert internally_resolvable(g, i, c) is None

    def test_agrees_with_brute_on_long_cycles(self):
        compared = 0
        for g, i, j in corpus():
            for c in extract_bad_cycles(g, i, j):
                if len(c.vertices) < 8:
                    continue
                compared += 1
                got = internally_resolvable(g, i, c) is not None
                want = is_resolvable_brute(g, i, c, FILTER_INTERNAL)
                assert got == want
        assert compared >= 15

    def test_agrees_with_brute_on_short_cycles(self):
        compared = 0
        for g, i, j in corpus(seed=77):
            for c in extract_bad_cycles(g, i, j):
                if len(c.vertices) >= 8:
                    continue
                compared += 1
                got = internally_resolvable(g, i, c) is not None
                want = is_resolvable_brute(g, i, c, FILTER_INTERNAL)
                assert got == want
        assert compared >= 10


class TestResolveAndTurn:
    def test_fig1_turn_validates(self, fig1):
        g, i, j, _ = fig1
        c = extract_bad_cycles(g, i, j)[0]
        cert = internally_resolvable(g, i, c)
        seq = resolve_and_turn(g, i, c, cert)
        end = validate_sequence(g, seq)
        assert end.vertices == j.vertices

    def test_one_move_resolve_then_turn(self):
        """Certificate whose digraph path has length one (m=1)."""
        g, i, j = cycle_with_free_neighbor(4)
        c = extract_bad_cycles(g, i, j)[0]
        cert = internally_resolvable(g, i, c)
        assert cert is not None and len(cert.witness) == 2
        seq = resolve_and_turn(g, i, c, cert)
        # the pure rotation: resolving move, half-1 backward slides, final fill
        assert len(seq) == c.half + 1
        assert validate_sequence(g, seq).vertices == j.vertices

    def test_external_turn(self):
        g, i, j = ring_with_tail(5)
        c = extract_bad_cycles(g, i, j)[0]
        cert = externally_resolvable(g, i, c)
        seq = resolve_and_turn(g, i, c, cert)
        end = validate_sequence(g, seq)
        assert set(end.vertices) == i.as_set() ^ set(c.vertices)

    def test_endpoints_on_corpus(self):
        turned = 0
        for g, i, j in corpus(seed=11, count=40):
            for c in extract_bad_cycles(g, i, j):
                cert = None
                if is_maximum(g, i):
                    cert = externally_resolvable(g, i, c)
                cert = cert or internally_resolvable(g, i, c)
                if cert is None:
                    continue
                turned += 1
                seq = resolve_and_turn(g, i, c, cert)
                end = validate_sequence(g, seq)
                assert set(end.vertices) == i.as_set() ^ set(c.vertices)
        assert turned >= 10


class TestTokensMoveOnce:
    def test_external_shortest_sequences(self):
        """Under a maximum set, shortest external resolving sequences never
        move a token twice, and the moved tokens trace odd paths."""
        checked = 0
        for g, i, j in corpus(seed=13, count=50):
            if not is_maximum(g, i):
                continue
            for c in extract_bad_cycles(g, i, j):
                seq = shortest_resolving_sequence(g, i, c, FILTER_EXTERNAL)
                if seq is None:
                    continue
                checked += 1
                sources = [mv.src for mv in seq]
                dests = [mv.dst for mv in seq]
                assert len(set(sources)) == len(sources)
                assert all(s in i.as_set() for s in sources)
                assert not (set(sources) & set(dests))
                # components of the start/end difference are odd paths
                start = i.as_set()
                end = (start - set(sources)) | set(dests)
                sym = start ^ end
                for comp_vertices in _components_within(g, sym):
                    deg = {
                        v: sum(1 for w in g.neighbors(v) if w in comp_vertices)
                        for v in comp_vertices
                    }
                    assert len(comp_vertices) % 2 == 0
                    assert sorted(deg.values())[-1] <= 2
                    assert sum(1 for d in deg.values() if d <= 1) == 2 or len(comp_vertices) == 2
        assert checked >= 5


def _components_within(g, vs):
    left = set(vs)
    while left:
        s = left.pop()
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in left:
                    left.discard(w)
                    comp.add(w)
                    stack.append(w)
        yield comp


class TestChainedHuggers:
    def test_bridge_makes_internally_resolvable(self):
        for half in (4, 5, 6):
            g, i, j = chained_huggers(half, with_bridge=True)
            c = extract_bad_cycles(g, i, j)[0]
            cert = internally_resolvable(g, i, c)
            assert cert is not None
            seq = resolve_and_turn(g, i, c, cert)
            assert validate_sequence(g, seq).vertices == j.vertices

    def test_no_bridge_unresolvable(self):
        g, i, j = chained_huggers(4, with_bridge=False)
        c = extract_bad_cycles(g, i, j)[0]
        assert internally_resolvable(g, i, c) is None
        assert not is_resolvable_brute(g, i, c, FILTER_ALL)
