//! Bracketings of a word and the associahedra they form.

mod bracketing;
mod cone;
mod loday;
mod operators;

pub use bracketing::{build_k, enumerate_bracketings, facet_signature, Bracketing, FacetSignature};
pub use cone::{associahedron_as_cone, enlarged_complex, missing_face_pieces, verify_q, verify_theorem_a};
pub use loday::{loday_realization, verify_loday, verify_loday_with};
pub use operators::{degeneracy, embed, verify_degeneracy_relations, verify_embed_identities};
