//! Exact computations for Nichols algebras of diagonal type.
//!
//! The crate is `no_std` and only needs `alloc`. Layers, bottom up:
//!
//! - [`scalars`]: rational functions over ℚ(ζ_N) with canonical forms.
//! - [`lattice`]: ℤⁿ, the bicharacter χ and the reflection coefficients.
//! - [`weyl`]: the Weyl groupoid, fullness/finiteness and the root set Δ.
//! - [`words`]: lexicographic order, Lyndon words, Shirshov splits.
//! - [`balgebra`]: the braided tensor algebra, skew derivations, brackets.
//! - [`nichols`]: graded components, standard words, roots, heights,
//!   Hilbert series and the finiteness decision.
//! - [`lie`]: the braided and ordinary Lie algebras generated by V.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod balgebra;
pub mod error;
pub mod lattice;
pub mod lie;
pub mod linalg;
pub mod nichols;
pub mod scalars;
pub mod weyl;
pub mod words;

pub use error::{Error, ScalarError};
pub use lattice::{Bicharacter, LatticeVector, MValue};
pub use scalars::{CycloContext, Order, Scalar};
pub use balgebra::{BracketKind, Element};
pub use weyl::{ArithmeticVerdict, GroupoidGraph, GroupoidState, RootSet};
pub use words::Word;
pub use nichols::{Caps, DimVerdict, FinitenessReport, Height, HilbertSeries, NicholsAlgebra, RootDatum};
pub use lie::{LieSpan, Witness};
