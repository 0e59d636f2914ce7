//! Presentation ideals of blowup algebras of n-dimensional Ferrers diagrams.
//!
//! A Ferrers diagram `D ⊂ ℕⁿ` defines the monomial ideal generated by
//! `x_a = x[1,a_1]·…·x[n,a_n]`, `a ∈ D`. This crate builds the candidate
//! Gröbner bases of the special fiber and the multi-Rees algebra of such
//! ideals from interchange binomials of tableaux, and checks them against a
//! brute-force toric kernel.

pub mod diagram;
pub mod error;
pub mod exchange;
pub mod fixtures;
pub mod groebner;
pub mod oracle;
pub mod point;
pub mod poly;
pub mod presentation;
pub mod tableau;

pub use diagram::{DiagramCollection, DiagramSpec, FerrersDiagram, StandardizabilityWitness};
pub use error::{Error, Result};
pub use exchange::{ExchangeInstance, ExchangeReport, IdealCollection};
pub use groebner::{BinomialBasis, Budget, GBReport};
pub use oracle::{MapKind, OracleBudget, ToricInstance, VerificationReport};
pub use point::{pt, sigma_cmp, LatticePoint};
pub use poly::{Binomial, Monomial, MonomialOrder, Universe, VarId, Variable};
pub use presentation::PresentationCandidate;
pub use tableau::Tableau;
