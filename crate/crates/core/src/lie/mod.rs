//! Free graded Lie algebras in their tensor-algebra representation.

mod context;
mod element;
mod morphism;
mod primitive;
pub mod serial;

pub use context::{gen, AlgebraContext, Generator, DEFAULT_ORDER};
pub use element::{scaled, AlgebraElement, Word};
pub use morphism::GeneratorMorphism;
pub use primitive::{is_primitive, PRIMITIVITY_GUARD};
pub use serial::{decode, encode, render_latex, render_text};
