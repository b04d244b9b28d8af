//! Demazure operators on the representation ring of the maximal torus of a
//! reductive group, and the descent test that recognises restrictions of
//! `G`-representations among `T`-characters.
//!
//! Characters are finite sums `Σ c_λ e^λ` with weights in fundamental-weight
//! coordinates. The coefficient ring is a type parameter; [`Character`] uses
//! arbitrary-size integers and [`Character64`] uses `i64`.
//!
//! ```
//! use std::sync::Arc;
//! use ::demazure::{descent, Character, RootDatum, Weight, WeylGroup};
//!
//! let a2: Arc<RootDatum> = Arc::new("A2".parse().unwrap());
//! let group = WeylGroup::new(a2);
//! let adjoint: Character = descent::weyl_character(&group, &Weight::new(vec![1, 1])).unwrap();
//! assert_eq!(adjoint.dimension(), 8u32.into());
//! assert_eq!(::demazure::demazure::apply(1, &adjoint).unwrap(), adjoint);
//! ```

pub mod braid;
pub mod charring;
pub mod demazure;
pub mod descent;
pub mod error;
pub mod format;
pub mod rootdata;
pub mod sample;
pub mod scalar;
pub mod verify;
pub mod weyl;

use num_bigint::BigInt;

pub use braid::BraidElement;
pub use charring::CharacterOf;
pub use descent::{GDecompositionOf, TheoremCheck};
pub use error::{Error, Result};
pub use rootdata::{RootDatum, Series, Weight};
pub use scalar::Coefficient;
pub use weyl::{Side, WeylElement, WeylGroup, Word};

pub type Character = CharacterOf<BigInt>;
pub type Character64 = CharacterOf<i64>;
pub type GDecomposition = GDecompositionOf<BigInt>;
pub type GDecomposition64 = GDecompositionOf<i64>;
