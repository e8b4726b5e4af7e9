"""Top-level polynomial decision procedure with certificate emission.

Decision logic, given equal-size independent sets I and J:

* slides cannot cross components, so the slide question splits over
  connected components;
* inside a component, a non-maximum restriction is always reconfigurable
  (park-and-unwind via jumps, each jump expanded to slides);
* a maximum restriction is reconfigurable exactly when every cycle of the
  symmetric difference is internally or externally resolvable;
* for jumps, a globally non-maximum set is always reconfigurable, and a
  maximum one behaves exactly like sliding (every jump out of a maximum
  set is forced along an edge).

Non-claw-free inputs are REJECTED with a claw witness by default, because
the decision logic is only proven there; ``force_oracle`` reroutes such
instances to the exhaustive oracle instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .alternating import is_maximum
from .graph import ClawWitness, Graph, connected_components, find_claw, induced_subgraph
from .model import (
    TJ,
    TS,
    IndependentSet,
    Move,
    NotIndependentError,
    ReconfigSequence,
    make_independent_set,
    validate_sequence,
)
from .oracle import CapExceeded, oracle_reachable
from .resolution import (
    BadCycle,
    bad_cycle,
    extract_bad_cycles,
    externally_resolvable,
    internally_resolvable,
)
from .sequencer import (
    assemble_yes_certificate,
    expand_jumps_to_slides,
    tj_sequence_nonmaximum,
)

YES = "YES"
NO = "NO"
REJECTED = "REJECTED"


@dataclass
class Decision:
    """Outcome with a checkable certificate.

    YES carries a validated move sequence; NO carries the first unresolvable
    cycle and the component it lives in (when the answer is cycle-driven);
    REJECTED carries a claw witness.  ``stats`` reports cycle counts and the
    certificate length.
    """

    answer: str
    model: str
    graph: Graph
    certificate: Any = None
    component: list[int] | None = None
    reason: str | None = None
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        g = self.graph
        cert: Any = None
        if isinstance(self.certificate, ReconfigSequence):
            cert = {"kind": "sequence", **self.certificate.to_json()}
        elif isinstance(self.certificate, BadCycle):
            cert = {
                "kind": "unresolvable-cycle",
                "cycle": [g.label(v) for v in self.certificate.vertices],
                "component": [g.label(v) for v in (self.component or [])],
            }
        elif isinstance(self.certificate, ClawWitness):
            cert = {
                "kind": "claw",
                "center": g.label(self.certificate.center),
                "leaves": [g.label(v) for v in self.certificate.leaves],
            }
        elif isinstance(self.certificate, tuple):  # offending edge
            cert = {"kind": "not-independent", "edge": [g.label(v) for v in self.certificate]}
        return {
            "version": 1,
            "answer": self.answer,
            "model": self.model,
            "reason": self.reason,
            "certificate": cert,
            "stats": self.stats,
        }


def _component_ts(
    g: Graph, i: IndependentSet, j: IndependentSet, stats: dict
) -> tuple[ReconfigSequence | None, BadCycle | None]:
    """Slide decision inside one connected component.

    Returns (sequence, None) on YES and (None, unresolvable cycle) on NO.
    """
    if not is_maximum(g, i):
        jumps = tj_sequence_nonmaximum(g, i, j)
        return expand_jumps_to_slides(g, jumps), None
    cycles = extract_bad_cycles(g, i, j)
    certs = {}
    for c in cycles:
        stats["cycles"] += 1
        cert = externally_resolvable(g, i, c)
        if cert is not None:
            stats["resolvedExternally"] += 1
        else:
            cert = internally_resolvable(g, i, c)
            if cert is not None:
                stats["resolvedInternally"] += 1
        if cert is None:
            return None, c
        certs[c.vertices] = cert
    return assemble_yes_certificate(g, i, j, TS, certs), None


def decide(
    g: Graph,
    i: IndependentSet,
    j: IndependentSet,
    model: str = TS,
    force_oracle: bool = False,
    oracle_cap: int = 10**6,
) -> Decision:
    """Decide reachability and emit a certificate.

    Every YES certificate is re-validated before it is returned; a NO names
    the first unresolvable cycle.  Inputs whose host graph contains a claw
    are REJECTED (or handed to the exhaustive oracle under ``force_oracle``).
    """
    if model not in (TS, TJ):
        raise ValueError(f"unknown model {model!r}")
    if i.graph is not g or j.graph is not g:
        raise ValueError("sets must be bound to the given graph")
    stats = {"cycles": 0, "resolvedExternally": 0, "resolvedInternally": 0, "sequenceLength": None}

    if len(i) != len(j):
        return Decision(NO, model, g, reason="size-mismatch", stats=stats)

    claw = find_claw(g)
    if claw is not None:
        if not force_oracle:
            return Decision(
                REJECTED, model, g, certificate=claw, reason="not-claw-free", stats=stats
            )
        try:
            seq = oracle_reachable(g, i, j, model, cap=oracle_cap)
        except CapExceeded:
            return Decision(REJECTED, model, g, reason="inconclusive", stats=stats)
        if seq is None:
            return Decision(NO, model, g, reason="oracle-unreachable", stats=stats)
        stats["sequenceLength"] = len(seq)
        return Decision(YES, model, g, certificate=seq, stats=stats)

    if i.vertices == j.vertices:
        seq = ReconfigSequence(model, i, ())
        stats["sequenceLength"] = 0
        return Decision(YES, model, g, certificate=seq, stats=stats)

    if model == TJ and not is_maximum(g, i):
        seq = tj_sequence_nonmaximum(g, i, j)
        validate_sequence(g, seq)
        stats["sequenceLength"] = len(seq)
        return Decision(YES, model, g, certificate=seq, stats=stats)

    # Slide semantics (also jumps from a maximum set): solve per component.
    moves: list[Move] = []
    for comp in connected_components(g):
        compset = set(comp)
        iv = [v for v in i.vertices if v in compset]
        jv = [v for v in j.vertices if v in compset]
        if len(iv) != len(jv):
            return Decision(
                NO, model, g, component=comp, reason="component-token-count", stats=stats
            )
        if iv == jv:
            continue
        sub, old_ids = induced_subgraph(g, comp)
        to_sub = {v: t for t, v in enumerate(old_ids)}
        si = make_independent_set(sub, [to_sub[v] for v in iv])
        sj = make_independent_set(sub, [to_sub[v] for v in jv])
        seq_c, bad = _component_ts(sub, si, sj, stats)
        if bad is not None:
            lifted = tuple(old_ids[v] for v in bad.vertices)
            cyc = extract_bad_cycles(g, i, j)
            ours = next((c for c in cyc if c.vertices == lifted), None)
            if ours is None:
                ours = bad_cycle(g, i, lifted)
            return Decision(
                NO,
                model,
                g,
                certificate=ours,
                component=comp,
                reason="unresolvable-cycle",
                stats=stats,
            )
        moves.extend(Move(old_ids[a], old_ids[b]) for a, b in seq_c.moves)

    seq = ReconfigSequence(model, i, tuple(moves))
    endset = validate_sequence(g, seq)
    if endset.vertices != j.vertices:
        raise RuntimeError("assembled decision certificate did not reach the target")
    stats["sequenceLength"] = len(seq)
    return Decision(YES, model, g, certificate=seq, stats=stats)


def decide_vertex_cover(g: Graph, cov_i, cov_j, model: str = TS) -> Decision:
    """Decide on vertex covers by passing to their complements.

    A cover's complement must be independent; otherwise the instance is
    rejected with a witness edge.
    """
    stats = {"cycles": 0, "resolvedExternally": 0, "resolvedInternally": 0, "sequenceLength": None}
    comp_i = [v for v in g.vertices() if v not in set(cov_i)]
    comp_j = [v for v in g.vertices() if v not in set(cov_j)]
    try:
        i = make_independent_set(g, comp_i)
    except NotIndependentError as e:
        return Decision(REJECTED, model, g, certificate=e.edge, reason="not-a-cover", stats=stats)
    try:
        j = make_independent_set(g, comp_j)
    except NotIndependentError as e:
        return Decision(REJECTED, model, g, certificate=e.edge, reason="not-a-cover", stats=stats)
    return decide(g, i, j, model)
