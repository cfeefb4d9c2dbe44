//! Factorization theory of graph agglomeration monoids and their Diophantine
//! presentations.
//!
//! An agglomeration of a finite multigraph `G` weighs vertices and edges with
//! nonnegative integers so that no edge outweighs its ends. Under pointwise
//! addition these form a finitely generated Krull monoid `A(G)` whose atoms
//! are the indicators of connected subgraphs. The crate computes sets of
//! lengths, elasticities, catenary degrees and related invariants of `A(G)`,
//! its divisor theory, Hilbert bases of the matching Diophantine monoids, and
//! the combinatorial Bass-ring data that realises such monoids.
//!
//! Element arithmetic is generic over the unsigned [`Weight`] type; the
//! aliases below fix the common choices.

pub mod agglomeration;
pub mod bassring;
pub mod diophantine;
pub mod divisor_theory;
pub mod dot;
pub mod elasticity;
pub mod engine;
pub mod factorization;
pub mod io;
pub mod linalg;
pub mod multigraph;
pub mod scalar;

pub use agglomeration::{atoms, davenport, max_length_atoms, Agglomeration, AgglomerationError};
pub use bassring::{BassRingSpec, SingularIdeal, SpecError};
pub use diophantine::{DiophantineError, DiophantineMonoid, IntMatrix, TransferMap};
pub use divisor_theory::{basis_witnesses, class_group_rank, phi, DivisorImage};
pub use elasticity::{elasticity, rho_k, ElasticityReport, RhoK};
pub use factorization::{
    catenary_degree, factorizations, is_factorial, is_half_factorial, length_set, omega_bounded, AggMonoid,
    Factorization, FactorizationError, LengthSet,
};
pub use multigraph::{
    connected_components, degree, enumerate_connected_subgraphs, is_acyclic, parse_graph, spanning_trees,
    tree_packing_number, GraphError, Multigraph, Subgraph,
};
pub use scalar::{format_rational, parse_rational, Rational, Weight};

/// Agglomeration with machine-word weights.
pub type Agg = Agglomeration<u64>;

/// Agglomeration with arbitrary-precision weights.
pub type BigAgg = Agglomeration<num_bigint::BigUint>;

/// Integer matrix over `i64`, the default for Diophantine systems.
pub type Matrix = IntMatrix<i64>;
