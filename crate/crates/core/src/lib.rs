//! Finite semirings and rings as validated operation tables, their
//! zero-divisor graphs, and machinery for classifying those graphs against
//! a fixed catalog of families.
//!
//! The crate is organized around a small pipeline:
//!
//! * [`algebra`] — the table representation ([`FiniteSemiring`]), axiom
//!   validation, structural predicates, and brute-force isomorphism testing;
//! * [`builders`] — constructors for concrete algebras (modular rings,
//!   Galois fields, presented quotient rings, matrix ambients, generated
//!   subsemiring closures);
//! * [`zdg`] — zero-divisor sets, zero-divisor graphs, and graph metrics;
//! * [`shapes`] — recognition of the named graph families and induced
//!   pattern search;
//! * [`constructions`] — parameterized factories that realize each family,
//!   together with the expected shape claim;
//! * [`enumerate`] — isomorph-free exhaustive generation of small
//!   commutative semirings;
//! * [`harness`] — the structural-theorem checks run over a corpus.

pub mod algebra;
pub mod builders;
pub mod constructions;
pub mod enumerate;
pub mod harness;
pub mod shapes;
pub mod zdg;

pub use algebra::{
    find_isomorphism, validate, AlgebraError, Axiom, AxiomReport, ElementId, FiniteSemiring,
    IsoWitness, SemiringTables, Violation,
};
pub use builders::{
    bool_matrix_ambient, chain, direct_product, galois_field, generated_closure,
    lattice_matrix_ambient, modular_ring, presented_ring, t2, Ambient, BoolMatrix, BuildError,
    RingPresentation, DEFAULT_CLOSURE_CAP,
};
pub use constructions::{ring_corpus, Construction};
pub use enumerate::{canonical_form, enumerate_semirings, EnumFilter};
pub use harness::{run_suite, CheckReport, CorpusEntry, SuiteResult, TheoremId, Verdict};
pub use shapes::{
    classify, find_induced, find_induced_all, is_complete_multipartite, is_regular, synthesize,
    ForbiddenConfig, GraphShape, ShapeError, ShapeTag,
};
pub use zdg::{
    diameter, girth, graph, is_connected, to_dot, triangle_count, zero_divisor_set, Diameter,
    Girth, ZdGraph,
};
