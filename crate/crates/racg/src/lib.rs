//! Computations in right-angled Coxeter systems.
//!
//! A system is given by its commutation graph: generators are involutions,
//! an edge means the two generators commute, a non-edge means their product
//! has infinite order. On top of that single piece of data the crate
//! provides:
//!
//! * the word problem via ShortLex normal forms ([`Presentation::reduce`],
//!   [`Presentation::equal`]);
//! * descent sets and coset representatives ([`Presentation::right_descents`],
//!   [`Presentation::coset_min_rep`]);
//! * Cayley balls with descent indexing and an empirical quasi-density
//!   check ([`Ball`], [`quasi_dense_check`]);
//! * structural analysis: spherical subsets, the ∞-graph decomposition,
//!   and the boundary-minimality verdict ([`Presentation::boundary_minimal`]);
//! * constructive quasi-density witnesses with empirical certification and
//!   a hole finder for the negative direction ([`find_witness`],
//!   [`certify_witness`], [`find_hole`]);
//! * exhaustive structural check suites ([`verify`]) and deliberately slow
//!   reference implementations for differential testing ([`naive`]).
//!
//! Deterministic throughout: generator order (the declaration order) breaks
//! every tie, and equal inputs produce byte-equal outputs.

mod ball;
mod descent;
mod error;
pub mod naive;
mod presentation;
mod structure;
pub mod verify;
mod witness;
mod word;

pub use ball::{
    quasi_dense_check, quasi_dense_check_in, quasi_dense_check_with_cap, Ball,
    QuasiDensityVerdict, DEFAULT_BALL_CAP,
};
pub use error::{Error, Result};
pub use presentation::{Gen, GenSet, Presentation, ProductOrder, MAX_GENERATORS};
pub use structure::{Decomposition, MinimalityVerdict};
pub use witness::{
    apply_step, certify_witness, certify_witness_with_cap, find_hole, find_hole_with_cap,
    find_witness, CertificationReport, Hole, InclusionFailure, QuasiDensityWitness,
    WitnessOutcome,
};
pub use word::NormalForm;
