//! Word calculus for twisted involutions in Coxeter groups.
//!
//! A Coxeter system acts on its twisted involutions through a monoid of
//! letter operators; reduced expressions in that monoid behave like reduced
//! words, with braid moves and a short list of initial moves connecting all
//! expressions of a fixed element. This crate provides exact arithmetic for
//! arbitrary systems, the monoid action and its expression combinatorics,
//! descent maximality graphs, the minimal move set with its rewrite graphs,
//! and verification suites that sweep these claims at desk scale.

pub mod classify;
pub mod error;
pub mod field;
pub mod matrix;
pub mod maximality;
pub mod moves;
pub mod system;
pub mod sysfile;
pub mod twist;
pub mod verify;
pub mod words;

pub use classify::{ComponentType, FiniteType};
pub use error::{Error, Result};
pub use field::{NumberField, Scalar};
pub use matrix::{Automorphism, Bond, CoxeterMatrix, Generator, Word};
pub use maximality::MaximalityGraph;
pub use moves::{
    EdgeKind, ExpressionGraph, InitialMove, MoveApplication, MoveSet, MoveTag, PathStep,
};
pub use sysfile::SystemFile;
pub use system::{CoxeterSystem, Element, Side};
pub use twist::{Twist, TwistedInvolution};
pub use verify::{CheckResult, VerificationReport};
