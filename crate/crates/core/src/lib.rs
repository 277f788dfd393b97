//! Exact combinatorics and commutative algebra of finite simplicial complexes:
//! face and h-vectors, Stanley-Reisner Hilbert series, reduced simplicial
//! homology over exact fields, Serre conditions, cover-ideal graph screens,
//! and an exhaustive search facility around a family of pure complexes whose
//! h-vector meets every classical necessary condition yet admits no (S_2)
//! realization.
//!
//! All arithmetic is exact: integer, rational (fraction-free), or prime-field.
//! No floating point is used anywhere.

pub mod arith;
pub mod complex;
pub mod family;
pub mod graph;
pub mod homology;
pub mod hvector;
pub mod poly;
pub mod serre;

pub use arith::binomial;
pub use complex::{f_to_h, h_to_f, ComplexError, FVector, Face, HVector, SimplicialComplex};
pub use family::{
    build_family, exhaustive_nonexistence_search, expected_hvector, family_decomposition,
    family_hilbert_oracle, verify_counterexample, CounterexampleReport, FamilyDecomposition,
    FamilyError, SearchMatch, SearchReport,
};
pub use graph::{
    cofacet_graph, has_induced_c4, s2_graph_obstruction, Graph, GraphError, InducedC4,
    ObstructionVerdict,
};
pub use homology::{
    boundary_matrix, rank, reduced_betti, reduced_betti_through, BettiTable, FieldSpec,
    HomologyError, IntMatrix,
};
pub use hvector::{
    check_necessary_conditions, gpsy_sums, hilbert_from_f, hilbert_from_h, is_m_vector,
    macaulay_bound, zero_tail_ok, ConditionReport, HVectorError,
};
pub use poly::{HilbertSeries, IntPolynomial, PolyError};
pub use serre::{is_cohen_macaulay, is_serre, SerreVerdict, SerreWitness};
