//! Exact factorization theory for numerical monoids.
//!
//! A numerical monoid `<n_1, ..., n_k>` is the set of nonnegative integer
//! combinations of coprime positive generators. This crate answers
//! membership and Frobenius queries in O(1) after building the Apéry table,
//! enumerates complete factorization sets, computes length sets with a
//! bitset DP, and derives elasticity, delta sets and ω-primality from them.
//!
//! The [`mcnugget`] module carries closed forms for `<6, 9, 20>` together
//! with the canned expansion and length tables for `0..=50`.
//!
//! ```
//! use nummon::NumericalMonoid;
//!
//! let m = NumericalMonoid::new(&[6, 9, 20, 27]).unwrap();
//! assert_eq!(m.generators(), &[6, 9, 20]);
//! assert_eq!(m.frobenius(), 43);
//! assert!(!m.contains(43));
//! assert_eq!(nummon::omega(&m, 6).unwrap(), 3);
//! ```

pub mod cli;
mod error;
pub mod factor;
pub mod mcnugget;
pub mod monoid;
pub mod omega;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use factor::{
    delta_set, elasticity, factorizations, length_set, max_length, min_length, monoid_delta_set,
    monoid_elasticity, unique_factorization_elements, DeltaSet, Factorization, FactorizationSet,
    LengthSet, LengthTable,
};
pub use monoid::{frobenius_sylvester, NumericalMonoid};
pub use omega::{bullets, omega, omega_threshold, prime_witness, Bullet};
pub use rational::Rational;
