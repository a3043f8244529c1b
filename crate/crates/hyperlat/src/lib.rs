//! Posets of acyclic orientations of hypergraphs on `[n]`.
//!
//! A hypergraph orients each edge by choosing a source vertex; the acyclic
//! choices are the vertices of a polytope whose skeleton, oriented by
//! increasing flips, transitively closes to a poset. This crate builds those
//! posets, projects the weak order of permutations onto them, computes their
//! lattice operations and join irreducibles in closed form when the edges
//! are intervals, and cross-checks every structural characterization
//! (lattice, distributive, semidistributive, semilattice quotient) against
//! definitional brute-force oracles over all small instances.

pub mod hypergraph;
pub mod lattice;
pub mod orientation;
pub mod poset;
pub mod verify;
pub mod weak;

pub use hypergraph::{
    interval_hypergraph_at, interval_hypergraph_count, interval_hypergraphs,
    interval_hypergraphs_bounded, max_ground_set, non_singleton_intervals, Hypergraph,
    HypergraphError, Interval, IntervalHypergraph, SchroederTree, Vertex, VertexSet,
    DEFAULT_ENUMERATION_BOUND, DEFAULT_MAX_GROUND_SET,
};
pub use orientation::{Orientation, OrientationError, VertexPoset};
pub use weak::{
    all_permutations, weak_join, weak_leq, weak_meet, InversionSet, Permutation,
    PermutationError, WeakOrderTables,
};
pub use poset::{Poset, PosetError};
pub use lattice::{
    catalan, chain_size_product, flip_closure_poset, hyp_join, hyp_meet, inversion_compatible,
    irreducibles_below, join_via_weak_order, leq_source, meet_via_weak_order,
    order_equivalences, orientation_from_lower_set, pair_irreducible_orientation,
    pair_irreducible_orientations, pair_irreducibles, pair_preceq,
    projection_is_join_morphism, projection_is_join_morphism_on_pairs,
    projection_is_meet_morphism, projection_is_meet_morphism_on_pairs, source_order_poset,
    tamari_size_product, vertex_irreducible_orientation, vertex_irreducibles, vertex_preceq,
    weak_bounds_leq, HypergraphPoset, OrderConditions, PairIrreducible, VertexIrreducible,
};
pub use verify::{
    check_instance, verdict_text, verify_sweep, Check, CheckOptions, InstanceReport,
    MorphismMode, SplitMix64,
};
