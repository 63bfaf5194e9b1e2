//! Verification toolkit for idempotent monads, adjunctions and star-modules.
//!
//! The abstract layer ([`fincat`], [`monadics`], [`adjunctions`]) works with
//! finite categories given by composition tables and checks every law and
//! every condition by exhaustive search. The concrete layer ([`ffla`],
//! [`algmod`], [`starlab`]) works with finite-dimensional algebras over prime
//! fields and decides, on dimension-bounded windows of modules, whether a
//! bimodule induces a star pair of functors `(P ⊗_S -, Hom_R(P, -))`.

pub mod adjunctions;
pub mod algmod;
pub mod cli;
pub mod error;
pub mod ffla;
pub mod fincat;
pub mod monadics;
pub mod corpus;
pub mod report;
pub mod starlab;

pub use error::{Error, Law, Result, Violation};
