//! Exact arithmetic in skew polynomial rings `K[X^{±1}; θ]` over a finite
//! field tower `F ⊂ K`, their fraction fields, Taylor expansions at rational
//! points, and skew residues.

pub mod commutative_oracle;
pub mod error;
pub mod field_tower;
pub mod fractions;
pub mod poly;
pub mod random;
pub mod residues;
pub mod skew_ring;
pub mod taylor;
pub mod verify;

pub use error::{Error, Result};
pub use field_tower::{Fe, FieldConfig, Tower};
