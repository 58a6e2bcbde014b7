//! Frobenius splittings, compatibly split ideals, and sharp counting
//! bounds over F_p[x_1..x_n].
//!
//! The library decides, for desk-scale inputs:
//! - pseudo-prime and intersection-compatible systems of ideals, with the
//!   dimension-stratified counts e(d) against the binomial bound C(n, d)
//!   and the 2^n total bound;
//! - Frobenius splittings theta = Phi^e ∘ u, the compatibility predicate
//!   u·J ⊆ J^[q], Frobenius bracket powers and roots, and Fedder's
//!   F-purity test;
//! - exhaustive sharpness verification of the binomial bound over all
//!   subsets of the coordinate-prime arrangement for n ≤ 4.

pub mod error;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod ideal;
pub mod input;
pub mod monomial;
pub mod monomial_ideal;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;
pub mod systems;

pub use error::Error;
pub use field::PrimeField;
pub use groebner::{buchberger, buchberger_in, normal_form, GroebnerBasis};
pub use ideal::{DeclaredFlags, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use monomial_ideal::MonomialIdeal;
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::{ring, Ring};
