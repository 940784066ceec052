//! Exact construction of non-associative connected Hopf algebras from Lie
//! triples, with the hyporeductive and pseudoreductive operations and the
//! Sabinin brackets of hyporeductive triple algebras.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod combo;
pub mod envelope;
pub mod error;
pub mod examples;
pub mod free_nonassoc;
pub mod hta;
pub mod hypo_pseudo;
pub mod lie;
pub mod linalg;
pub mod rational;
pub mod report;
