//! Exact-arithmetic free graded differential Lie algebras, truncated at a
//! fixed word length, with Maurer-Cartan points, flows, BCH series, and the
//! cell models of points, 1-complexes, the one-vertex disc and the bigon.

pub mod calculus;
pub mod error;
pub mod lie;
pub mod models;
pub mod scalar;

pub use error::{Error, Result};
pub use lie::{AlgebraContext, AlgebraElement, Generator, GeneratorMorphism, Word};
pub use models::{CellModel, SymmetricBigonData, VerificationReport};
pub use scalar::Rational;
