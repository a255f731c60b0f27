#![no_std]
//! Face posets of associahedra and their relatives, with exhaustive
//! verification of the isomorphisms between the models.

extern crate alloc;

pub mod associahedron;
pub mod complex;
pub mod cubeahedron;
pub mod error;
pub mod hull;
pub mod iso;
pub mod multiplihedron;
pub mod poset;
pub mod report;
pub mod trees;

pub use complex::{
    boundary_subcomplex, cone_complex, cone_over_pieces, product_complex, union_complex, verify_cone_product,
    verify_cross_cone, CellComplex, ConedBall, Piece,
};
pub use error::ModelError;
pub use iso::{check_order_iso, check_order_iso_by, search_iso};
pub use poset::{close_order, Description, FacePoset, OrderError, Poset};
pub use report::Report;
