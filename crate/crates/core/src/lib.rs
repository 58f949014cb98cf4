//! Exact invariants of finitely generated multi-parameter persistence
//! modules over prime fields: Betti diagrams through Koszul homology,
//! one-parameter bar decompositions, persistence contours with their
//! simple noise systems, and the contour-stabilized rank invariant with
//! its min-rank reformulation.

pub mod band;
pub mod barcode;
pub mod contour;
pub mod error;
pub mod field;
pub mod frame;
pub mod graph;
pub mod grid;
pub mod io;
pub mod koszul;
pub mod matrix;
pub mod minrank;
pub mod multiset;
pub mod noise;
pub mod pipeline;
pub mod rational;
pub mod stablerank;
pub mod stepfn;
pub mod subspace;
pub mod tame;

pub use band::{band_functor, BandSpec};
pub use barcode::{bar_decomposition, Barcode};
pub use contour::{Contour, ContourPoint};
pub use error::{Error, Result, SEARCH_BUDGET, SUBSPACE_ENUMERATION_BUDGET};
pub use field::FieldScalar;
pub use frame::{Frame, Subframe};
pub use graph::{chromatic_witness, graph_to_minrank, Graph};
pub use grid::GridPoint;
pub use koszul::{betti_diagram, euler_characteristic, koszul_complex_at, BettiDiagram, KoszulComplexAt};
pub use matrix::PrimeFieldMatrix;
pub use minrank::{minrank_solve, reduce_to_minrank, MinRankInstance};
pub use multiset::{interleaving_distance, RationalMultiset};
pub use noise::{domain_shift, noise_contains, shift, ShiftResult};
pub use pipeline::{hardness_pipeline, PipelineReport};
pub use rational::Rational;
pub use stablerank::{fingerprint_r1, stable_rank_bruteforce, stable_rank_r1, StableRankFunction};
pub use stepfn::{stabilize, step_interleaving_distance, StepFunction};
pub use subspace::{
    cokernel_projection, enumerate_subspaces, gaussian_binomial, image, kernel, sum_contains,
    Subspace,
};
pub use tame::TameModule;
