//! Formal contexts, derivation operators and concept enumeration, with the
//! standard context `K(L_n)` of the dominance lattice.

mod concepts;
mod context;
pub mod format;

pub use concepts::{
    concept_lattice_isomorphic_to_ln, concept_leq, concept_of_objects, concepts,
    enumerate_concepts, Concept, Concepts, ISOMORPHISM_LIMIT,
};
pub use context::{standard_context, standard_context_with, FormalContext};
