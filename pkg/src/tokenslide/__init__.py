"""Independent set reconfiguration in claw-free graphs.

Decides whether one independent set can be transformed into another by
token slides (along edges) or token jumps (anywhere), emits verifiable
move-sequence certificates for reachable instances, and ships an exhaustive
solution-graph oracle for validating the polynomial procedure on small
inputs.
"""

from .alternating import (
    AlternatingPath,
    find_any_augmenting_path,
    find_augmenting_path,
    free_vertices,
    is_dominating,
    is_maximum,
)
from .decider import NO, REJECTED, YES, Decision, decide, decide_vertex_cover
from .graph import (
    ClawWitness,
    Graph,
    ParseError,
    connected_components,
    diameter,
    distance,
    find_claw,
    gen_claw_free,
    induced_subgraph,
    line_graph,
    neighborhood_count_sets,
    parse_graph,
)
from .model import (
    TJ,
    TS,
    IndependentSet,
    Move,
    NotIndependentError,
    ReconfigSequence,
    SequenceError,
    StructuralError,
    SymDiffDecomposition,
    decompose_symdiff,
    make_independent_set,
    validate_sequence,
)
from .oracle import (
    CapExceeded,
    SolutionGraphStats,
    brute_alpha,
    oracle_reachable,
    solution_graph,
    solution_graph_stats,
)
from .resolution import (
    BadCycle,
    LayerDigraph,
    ResolutionCertificate,
    bad_cycle,
    build_layer_digraph,
    extract_bad_cycles,
    externally_resolvable,
    internally_resolvable,
    is_resolvable_brute,
    resolve_and_turn,
    shortest_resolving_sequence,
)
from .sequencer import (
    assemble_yes_certificate,
    expand_jumps_to_slides,
    tj_sequence_no_even_cycles,
    tj_sequence_nonmaximum,
    ts_sequence_acyclic,
)

__version__ = "0.1.0"
