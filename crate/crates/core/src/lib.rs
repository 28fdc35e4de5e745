//! Decide, certify and cross-validate linear resolutions of monomial ideals
//! generated in degree two and of their powers.

pub mod analysis;
pub mod betti;
pub mod chordal;
pub mod complex;
pub mod conditions;
pub mod error;
pub mod field;
pub mod graph;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod quotients;
pub mod rees;

pub use error::{Error, Result};
pub use field::{FieldSpec, Fp};
pub use graph::Graph;
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;

/// GF(2), the characteristic in which the Terai ideal loses linearity.
pub type Gf2 = Fp<2>;
pub type Gf3 = Fp<3>;
/// Machine-width integers for fraction-free elimination over the rationals.
pub type SmallInt = i128;
/// Arbitrary-precision integers for fraction-free elimination.
pub type BigInt = num_bigint::BigInt;
