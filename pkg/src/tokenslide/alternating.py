"""Free vertices, chordless alternating paths and maximum-set testing.

The augmenting-path engine is exact depth-first backtracking over chordless
alternating extensions.  It is always correct on claw-free inputs but does
not carry a polynomial-time guarantee; at the desk scale this library
targets (n up to a few dozen) that is a non-issue.  Search order is
smallest-vertex-first, so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph
from .model import IndependentSet


@dataclass(frozen=True)
class AlternatingPath:
    """A chordless alternating path; even positions lie outside the host set."""

    vertices: tuple[int, ...]
    host: IndependentSet

    def __len__(self) -> int:
        return len(self.vertices) - 1

    def swap_vertices(self) -> tuple[int, ...]:
        """The host set after augmenting along this path (grows it by one)."""
        out = self.host.as_set()
        for t, v in enumerate(self.vertices):
            if t % 2 == 0:
                out.add(v)
            else:
                out.discard(v)
        return tuple(sorted(out))


def free_vertices(g: Graph, i: IndependentSet) -> set[int]:
    """Vertices outside ``i`` with at most one neighbor in ``i``."""
    imask = i.mask
    return {
        v
        for v in g.vertices()
        if not (imask >> v) & 1 and (g.nbit(v) & imask).bit_count() <= 1
    }


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex of ``g`` has a closed neighbor in ``s``."""
    smask = g.mask_of(s)
    for v in g.vertices():
        if not ((smask >> v) & 1 or g.nbit(v) & smask):
            return False
    return True


def find_augmenting_path(g: Graph, i: IndependentSet, x: int, y: int) -> AlternatingPath | None:
    """Chordless alternating path from ``x`` to ``y`` with both endpoints free.

    Preconditions: x != y and both free with respect to ``i`` (error
    otherwise).  Returns None when no such path exists.  Paths have even
    length >= 2: odd positions carry tokens of ``i``, even positions do not.
    """
    if x == y:
        raise ValueError("endpoints must differ")
    fv = free_vertices(g, i)
    if x not in fv or y not in fv:
        raise ValueError(f"endpoints must be free vertices, got {x}, {y}")
    imask = i.mask

    path = [x]
    pmask = 1 << x

    def extend(last: int) -> bool:
        nonlocal pmask
        t = len(path)  # position the next vertex would take
        want_token = t % 2 == 1
        for w in g.neighbors(last):
            if (pmask >> w) & 1:
                continue
            if bool((imask >> w) & 1) != want_token:
                continue
            if g.nbit(w) & pmask != 1 << last:
                continue  # chord against an earlier path vertex
            if w == y:
                if t >= 2:
                    path.append(w)
                    return True
                continue
            path.append(w)
            pmask |= 1 << w
            if extend(w):
                return True
            path.pop()
            pmask &= ~(1 << w)
        return False

    if extend(x):
        return AlternatingPath(tuple(path), i)
    return None


def find_any_augmenting_path(g: Graph, i: IndependentSet) -> AlternatingPath | None:
    """First augmenting path over all free-vertex pairs in ascending order."""
    fv = sorted(free_vertices(g, i))
    imask = i.mask
    # A path endpoint needs exactly one token neighbor to start alternating.
    starts = [v for v in fv if (g.nbit(v) & imask).bit_count() == 1]
    for a_idx, x in enumerate(starts):
        for y in starts[a_idx + 1:]:
            p = find_augmenting_path(g, i, x, y)
            if p is not None:
                return p
    return None


def is_maximum(g: Graph, i: IndependentSet) -> bool:
    """True iff ``i`` has maximum size: it dominates and admits no augmenting path.

    Requires a claw-free host graph (both directions of the test rely on it).
    """
    return is_dominating(g, i.vertices) and find_any_augmenting_path(g, i) is None
