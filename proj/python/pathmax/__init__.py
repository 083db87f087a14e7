"""Counting and maximizing length-k paths in semiring-labelled directed graphs."""

from ._core import (
    Edge,
    Error,
    Graph,
    HypothesisError,
    Label,
    LimitError,
    Mode,
    ParseError,
    Path,
    ShapeClass,
    ShapeKind,
    StepKind,
    Trace,
    TraceStep,
    VerifyReport,
    acyclic_bound,
    balance_labels,
    canonical_form,
    canonical_graph,
    check_no_short_loops,
    chirvasitu_violation,
    classify_extremal_shape,
    construct_extremal_acyclic,
    construct_extremal_loop,
    construct_extremal_rational,
    count_k_paths,
    enumerate_acyclic_graphs,
    enumerate_graphs,
    enumerate_k_paths,
    exclusive_content,
    exclusive_content_sum,
    find_loop_from_repetition,
    girth,
    loop_bound,
    merge_edges,
    optimize,
    path_content,
    permutation_loop_witness,
    read_graph_file,
    semiring_bound,
    shrink_loop,
    verify_acyclic_bound,
    verify_bound,
    write_graph_file,
)

__all__ = [name for name in dir() if not name.startswith("_")]
