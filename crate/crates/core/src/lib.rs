//! Computer algebra for free bicommutative algebras.
//!
//! A bicommutative algebra satisfies left-commutativity `a(bc) = b(ac)` and
//! right-commutativity `(ab)c = (ac)b`. The free algebra has a monomial basis
//! indexed by pairs of multisets (a column and a row of a hook Young diagram),
//! which is what [`BasisWord`] encodes. On top of that basis this crate
//! provides:
//!
//! * exact arithmetic on [`BicomElement`]s and the involution `*`,
//! * commutator/anti-commutator brackets, the Dynkin map and the Lie and
//!   Jordan membership criteria with constructive re-expression
//!   ([`operators`]),
//! * a brute-force rewrite closure of nonassociative words that serves as
//!   ground truth for the product rule ([`oracle`]),
//! * nonassociative polynomials, evaluation in the free algebra or in a
//!   finite-dimensional algebra ([`magma`]),
//! * multilinear T-ideal consequence spaces and the verifiers built on
//!   them ([`consequences`]),
//! * exact rational linear algebra ([`exactlin`]) and an expression parser
//!   ([`parse`]).

pub mod bicom;
pub mod consequences;
pub mod error;
pub mod exactlin;
pub mod identities;
pub mod magma;
pub mod operators;
pub mod oracle;
pub mod parse;
pub mod rational;
pub mod tree;

pub use bicom::{BasisWord, BicomElement, Generator, Multidegree};
pub use error::{Error, Result};
pub use exactlin::RationalMatrix;
pub use magma::{FiniteAlgebra, MagmaPoly, MagmaWord, Product};
pub use operators::{BracketExpr, BracketOp, BracketTree};
pub use rational::Rational;
pub use tree::Tree;
