//! Hom spaces, decompositions, Loewy series, projectives and Ext.
mod algebra;
mod decompose;
mod engine;
mod ext;
mod hom;
mod loewy;
mod meataxe;
mod projective;

pub use algebra::GroupAlgebra;
pub use decompose::{Decomposition, Piece};
pub use engine::{Config, Engine, Simple, SimpleLabel, SpechtPair};
pub use ext::{p_prime_young, ExtRoute};
pub use hom::{hom_dim, hom_space, is_homomorphism, HomSpace, Presentation};
pub use loewy::{LabeledLayer, Loewy};
pub use meataxe::Split;
pub use projective::ProjectivePresentation;

#[cfg(test)]
mod tests;
