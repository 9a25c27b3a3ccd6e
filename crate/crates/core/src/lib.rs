//! Logical filters, Leibniz and relative congruences, and equational
//! definability checks over finite algebras.
//!
//! Everything here is a pure function of its inputs. Carriers are always
//! `{0, …, n-1}`; labels only matter for display. Every potentially
//! exponential computation draws from a [`Budget`] and fails with
//! [`Error::SizeBudgetExceeded`] instead of running away.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod algebra;
pub mod budget;
pub mod candidate;
pub mod checks;
pub mod class;
pub mod congruence;
mod error;
#[cfg(test)]
mod fixtures;
pub mod filters;
pub mod hom;
pub mod set;
pub mod term;

pub use algebra::{Algebra, Elem, Product, Signature, Symbol};
pub use budget::{Budget, Limits};
pub use candidate::{Candidate, EqSet, Variant};
pub use class::ClassSpec;
pub use congruence::Partition;
pub use error::{Error, Result};
pub use filters::{BoundLogic, LogicSpec, Matrix};
pub use set::ElemSet;
pub use term::{Equation, Rule, Term};
