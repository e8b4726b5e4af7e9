"""Free vertices, augmenting paths, maximum testing.

The independent oracles here: exhaustive enumeration of all simple paths
(for augmenting-path existence) and exhaustive alpha computation (for
maximality), both written directly against adjacency with no reuse of the
code under test.
"""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tokenslide import (
    brute_alpha,
    find_any_augmenting_path,
    find_augmenting_path,
    free_vertices,
    gen_claw_free,
    is_dominating,
    is_maximum,
    make_independent_set,
)
from tokenslide.fuzz import random_independent_vertices


def enumerate_augmenting_paths(g, iset, x=None, y=None):
    """Oracle: all chordless alternating paths with free endpoints, by brute DFS.

    Walks every simple path, then filters by the definition: alternation,
    chordlessness (checked against the full adjacency), endpoints free and
    outside the set, length >= 2.
    """
    ivs = set(iset)
    free = {
        v
        for v in g.vertices()
        if v not in ivs and sum(1 for w in g.neighbors(v) if w in ivs) <= 1
    }
    found = []

    def dfs(path):
        last = path[-1]
        if len(path) >= 3 and len(path) % 2 == 1 and path[0] in free and last in free:
            if alternating(path) and chordless(path):
                found.append(tuple(path))
        for w in g.neighbors(last):
            if w not in path:
                dfs(path + [w])

    def alternating(path):
        return all((path[t] in ivs) + (path[t + 1] in ivs) == 1 for t in range(len(path) - 1))

    def chordless(path):
        for a, b in combinations(range(len(path)), 2):
            adjacent = g.has_edge(path[a], path[b])
            if adjacent != (b - a == 1):
                return False
        return True

    starts = sorted(free) if x is None else [x]
    for s in starts:
        dfs([s])
    if y is not None:
        found = [p for p in found if p[-1] == y or p[0] == y]
        found = [p for p in found if {p[0], p[-1]} == {x, y}]
    return found


def brute_is_maximum(g, vs):
    return len(vs) == brute_alpha(g)


class TestFreeVertices:
    def test_p3(self, p3):
        g = p3[0]
        i = make_independent_set(g, [g.vertex("b")])
        assert {g.label(v) for v in free_vertices(g, i)} == {"a", "c"}

    def test_c6_alternating_none(self, c6):
        g, i, _, _ = c6
        assert free_vertices(g, i) == set()

    def test_fig1_matches_brute_count(self, fig1):
        g, i, _, _ = fig1
        ivs = i.as_set()
        want = {
            v
            for v in g.vertices()
            if v not in ivs and sum(1 for w in g.neighbors(v) if w in ivs) <= 1
        }
        got = free_vertices(g, i)
        assert got == want
        # b has two set neighbors (c0 and c2), so the only free vertex is u4
        assert {g.label(v) for v in got} == {"u4"}


class TestFindAugmentingPath:
    def test_p3_smallest(self, p3):
        g = p3[0]
        i = make_independent_set(g, [g.vertex("b")])
        p = find_augmenting_path(g, i, g.vertex("a"), g.vertex("c"))
        assert [g.label(v) for v in p.vertices] == ["a", "b", "c"]

    def test_c6_pair_matches_enumeration_oracle(self, c6):
        g = c6[0]
        i = make_independent_set(g, [g.vertex("v0"), g.vertex("v3")])
        x, y = g.vertex("v1"), g.vertex("v5")
        oracle = enumerate_augmenting_paths(g, i.as_set(), x, y)
        got = find_augmenting_path(g, i, x, y)
        # the enumeration finds v1,v0,v5 (and its reverse): the path exists
        assert ((got is None) == (not oracle))
        assert got is not None
        assert got.vertices == (x, g.vertex("v0"), y)

    def test_p5_full_path(self, p5):
        g = p5[0]
        i = make_independent_set(g, [g.vertex("v1"), g.vertex("v3")])
        p = find_augmenting_path(g, i, g.vertex("v0"), g.vertex("v4"))
        assert [g.label(v) for v in p.vertices] == ["v0", "v1", "v2", "v3", "v4"]

    def test_non_free_endpoint_rejected(self, c6):
        g, i, _, _ = c6
        with pytest.raises(ValueError, match="free"):
            find_augmenting_path(g, i, g.vertex("v1"), g.vertex("v3"))

    def test_swap_grows_set(self, p5):
        g = p5[0]
        i = make_independent_set(g, [g.vertex("v1"), g.vertex("v3")])
        p = find_augmenting_path(g, i, g.vertex("v0"), g.vertex("v4"))
        swapped = make_independent_set(g, p.swap_vertices())
        assert len(swapped) == len(i) + 1


class TestFindAnyAugmentingPath:
    def test_p3(self, p3):
        g = p3[0]
        i = make_independent_set(g, [g.vertex("b")])
        assert find_any_augmenting_path(g, i) is not None

    def test_c6_maximum_has_none(self, c6):
        g, i, _, _ = c6
        assert find_any_augmenting_path(g, i) is None

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6), st.integers(4, 10))
    def test_existence_matches_alpha_oracle(self, seed, n):
        rng = random.Random(seed)
        g = gen_claw_free(n, 0.4, seed)
        k = rng.randint(1, 3)
        iv = random_independent_vertices(g, rng, k)
        if iv is None:
            return
        i = make_independent_set(g, iv)
        if not is_dominating(g, iv):
            return  # augmenting paths are only forced for dominating sets
        has_path = find_any_augmenting_path(g, i) is not None
        if brute_is_maximum(g, iv):
            assert not has_path
        else:
            assert has_path  # dominating non-maximum admits one


class TestIsMaximum:
    def test_c6(self, c6):
        g, i, _, _ = c6
        assert is_maximum(g, i)

    def test_p3_center_not_maximum(self, p3):
        g = p3[0]
        assert not is_maximum(g, make_independent_set(g, [g.vertex("b")]))

    def test_fig1_maximum(self, fig1):
        g, i, _, _ = fig1
        assert is_maximum(g, i)
        assert brute_alpha(g) == len(i)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10**6), st.integers(3, 12))
    def test_matches_exhaustive_alpha(self, seed, n):
        rng = random.Random(seed)
        g = gen_claw_free(n, 0.45, seed)
        k = rng.randint(1, 4)
        iv = random_independent_vertices(g, rng, k)
        if iv is None:
            return
        i = make_independent_set(g, iv)
        assert is_maximum(g, i) == brute_is_maximum(g, iv)


class TestIsDominating:
    def test_examples(self, c6, fig1):
        g = c6[0]
        assert is_dominating(g, [g.vertex("v0"), g.vertex("v3")])
        assert not is_dominating(g, [g.vertex("v0")])
        g, i, _, _ = fig1
        assert is_dominating(g, i.vertices)


class TestDefinitionEquivalence:
    """Both directions of the augmenting-path definition equivalence."""

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6), st.integers(4, 8))
    def test_returned_paths_swap_to_independent_sets(self, seed, n):
        rng = random.Random(seed)
        g = gen_claw_free(n, 0.45, seed)
        k = rng.randint(1, 3)
        iv = random_independent_vertices(g, rng, k)
        if iv is None:
            return
        i = make_independent_set(g, iv)
        p = find_any_augmenting_path(g, i)
        if p is None:
            return
        make_independent_set(g, p.swap_vertices())  # raises if not independent
        # chordless: the induced subgraph on the path is exactly the path
        for a, b in combinations(range(len(p.vertices)), 2):
            assert g.has_edge(p.vertices[a], p.vertices[b]) == (b - a == 1)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6), st.integers(4, 7))
    def test_alternating_walks_with_independent_swap_are_chordless(self, seed, n):
        g = gen_claw_free(n, 0.5, seed)
        rng = random.Random(seed)
        iv = random_independent_vertices(g, rng, rng.randint(1, 3))
        if iv is None:
            return
        ivs = set(iv)

        def swap_ok(path):
            out = set(ivs)
            for t, v in enumerate(path):
                (out.add if t % 2 == 0 else out.discard)(v)
            return all(not g.has_edge(a, b) for a in out for b in out if a < b)

        def alternating(path):
            return all((path[t] in ivs) + (path[t + 1] in ivs) == 1 for t in range(len(path) - 1))

        def chordless(path):
            return all(
                g.has_edge(path[a], path[b]) == (b - a == 1)
                for a, b in combinations(range(len(path)), 2)
            )

        def dfs(path):
            last = path[-1]
            if (
                len(path) >= 3
                and len(path) % 2 == 1
                and path[0] not in ivs
                and last not in ivs
                and alternating(path)
                and swap_ok(path)
            ):
                assert chordless(path)
            if len(path) > 7:
                return
            for w in g.neighbors(last):
                if w not in path:
                    dfs(path + [w])

        for s in g.vertices():
            if s not in ivs:
                dfs([s])
