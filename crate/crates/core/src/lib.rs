//! Game solving for orbit equivalence relations on exactly computable
//! finite instances.
//!
//! The crate models finite topological spaces, finite groups with identity
//! neighborhood chains, and continuous actions; builds the Becker embedding
//! game and the Hjorth isomorphism game as finite safety arenas; solves
//! them by attractor computation with capture ranks; and checks every game
//! value against an independent brute-force oracle. Groupoids generalize
//! the action picture, and concrete model families (finite relational
//! structures, injective sequences, diagonal operators with symbolic
//! eigenvalues) ground the games in exactly checkable combinatorics.

mod arena_build;

pub mod actions;
pub mod becker;
pub mod catalog;
pub mod groupoids;
pub mod groups;
pub mod hjorth;
pub mod models;
pub mod quotient;
pub mod sets;
pub mod solver;
pub mod spaces;
pub mod sweeps;
pub mod turbulence;
pub mod validate;

pub use actions::{GroupAction, OrbitPartition};
pub use becker::{becker_arena, becker_embeddable, becker_witness, BeckerVerdict};
pub use catalog::{full_catalog, CatalogInstance};
pub use groupoids::{
    action_groupoid, groupoid_local_orbit, restrict_groupoid, FiniteGroupoid,
};
pub use groups::TopGroup;
pub use hjorth::{hjorth_arena, hjorth_isomorphic, hjorth_witness, HjorthVerdict};
pub use models::{
    diag_reduction_check, eq_plus, f_embedding_exists, logic_becker_game, logic_hjorth_game,
    ran_subset, shift, symbolic_becker_seq, DiagUnitary, RelStructure, SeqInstance,
};
pub use quotient::{
    becker_digraph, cli_obstruction_check, hjorth_graph, quotient_homomorphism_check, GraphKind,
    ObstructionReport, OrbitQuotientGraph,
};
pub use sets::IdxSet;
pub use solver::{
    bounded_play_check, extract_strategy, relation_at_rank, solve_closed_game, Arena, Player,
    SolveResult, Strategy,
};
pub use spaces::{FiniteSpace, PointSetReport};
pub use turbulence::{local_orbit, turbulence_report, TurbulenceReport};
pub use validate::{ValidationReport, Violation};
