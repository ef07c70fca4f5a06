"""Linear rankwidth-1 vertex deletion: recognition, solvers, kernel and oracles."""

from ._core import (
    Error,
    Graph,
    InputError,
    ResourceLimit,
    classify_component,
    complete_graph,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    domino_graph,
    eval_kexpression,
    find_obstruction,
    gem_graph,
    gen_necklace,
    gen_thread_graph,
    house_graph,
    is_thread_graph,
    kernelize,
    linear_rankwidth,
    mu,
    necklace_decomposition,
    obstruction_catalog,
    parse_dimacs,
    parse_kexpression,
    path_graph,
    read_graph,
    solve,
    solve_bruteforce,
    solve_kexpression,
    star_graph,
    sunflower_compress,
    thread_decomposition,
    to_dimacs,
    vc_reduction,
    vertex_cover_bruteforce,
    write_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
