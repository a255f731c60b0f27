//! Painted trees, the expression model of the multiplihedron, and its
//! collapse onto the associahedron.

mod expression;
mod maps;
mod order;
mod painted;

pub use expression::{
    collapse_codomain, enumerate_expressions, enumerate_flat_expressions, Argument, Block, Expression, Factor,
    FlatExpression, Term,
};
pub use maps::{
    bracketing_to_flat, flat_to_bracketing, tree_to_expression, verify_codomain_collapse, verify_flat_bracketing_iso,
    verify_tree_expression_iso,
};
pub use order::{build_frak_j, build_jprime, expression_moves, flat_moves};
pub use painted::{build_jtree, collapse_edges, enumerate_painted_trees, NodeKind, PaintedTree};
