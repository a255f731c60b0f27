//! The expression posets, generated by coarsening moves:
//!
//! * drop a domain bracket, or a codomain bracket inside a product;
//! * turn a word of two or more factors into the dotted list of the same
//!   factors, or a bracketed dot segment into its factors as segments;
//! * merge a product of blocks into one dotted block (`)f(` becomes `.`).
//!
//! In the flat poset any two adjacent blocks may merge.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::expression::{
    enumerate_expressions, enumerate_flat_expressions, Argument, Block, Expression, Factor, FlatExpression, Term,
};
use crate::error::ModelError;
use crate::poset::FacePoset;

fn splice(items: &[Factor], i: usize, inner: &[Factor]) -> Vec<Factor> {
    let mut v = items[..i].to_vec();
    v.extend(inner.iter().cloned());
    v.extend(items[i + 1..].iter().cloned());
    v
}

/// Factor lists reachable by dropping one domain bracket at any depth.
fn drop_bracket(items: &[Factor]) -> Vec<Vec<Factor>> {
    let mut out = Vec::new();
    for (i, x) in items.iter().enumerate() {
        if let Factor::Group(g) = x {
            out.push(splice(items, i, g));
            for g2 in drop_bracket(g) {
                let mut v = items.to_vec();
                v[i] = Factor::Group(g2);
                out.push(v);
            }
        }
    }
    out
}

fn block_moves(b: &Block) -> Vec<Block> {
    let mut out = Vec::new();
    match &b.arg {
        Argument::Word(w) => {
            out.extend(drop_bracket(w).into_iter().map(|w2| Block { arg: Argument::Word(w2) }));
            if w.len() >= 2 {
                out.push(Block { arg: Argument::Dotted(w.clone()) });
            }
        }
        Argument::Dotted(s) => {
            for (i, x) in s.iter().enumerate() {
                if let Factor::Group(g) = x {
                    out.push(Block { arg: Argument::Dotted(splice(s, i, g)) });
                    for g2 in drop_bracket(g) {
                        let mut v = s.clone();
                        v[i] = Factor::Group(g2);
                        out.push(Block { arg: Argument::Dotted(v) });
                    }
                }
            }
        }
    }
    out
}

fn term_moves(t: &Term) -> Vec<Term> {
    match t {
        Term::Block(b) => block_moves(b).into_iter().map(Term::Block).collect(),
        Term::Product(items) => {
            let mut out = Vec::new();
            for (i, x) in items.iter().enumerate() {
                for y in term_moves(x) {
                    let mut v = items.clone();
                    v[i] = y;
                    out.push(Term::Product(v));
                }
                if let Term::Product(inner) = x {
                    let mut v = items[..i].to_vec();
                    v.extend(inner.iter().cloned());
                    v.extend(items[i + 1..].iter().cloned());
                    out.push(Term::Product(v));
                }
            }
            let blocks: Option<Vec<&Block>> =
                items.iter().map(|x| if let Term::Block(b) = x { Some(b) } else { None }).collect();
            if let Some(blocks) = blocks {
                out.push(Term::Block(Block::merged(blocks)));
            }
            out
        }
    }
}

/// Expressions one coarsening move above `e`.
pub fn expression_moves(e: &Expression) -> Vec<Expression> {
    term_moves(&e.root).into_iter().map(|root| Expression { root }).collect()
}

/// Flat expressions one coarsening move above `e`.
pub fn flat_moves(e: &FlatExpression) -> Vec<FlatExpression> {
    let mut out = Vec::new();
    for (i, b) in e.blocks.iter().enumerate() {
        for b2 in block_moves(b) {
            let mut v = e.blocks.clone();
            v[i] = b2;
            out.push(FlatExpression { blocks: v });
        }
    }
    for i in 1..e.blocks.len() {
        let mut v = e.blocks[..i - 1].to_vec();
        v.push(Block::merged(&e.blocks[i - 1..=i]));
        v.extend(e.blocks[i + 1..].iter().cloned());
        out.push(FlatExpression { blocks: v });
    }
    out
}

fn build<T: Ord + core::fmt::Display>(elements: Vec<T>, moves: impl Fn(&T) -> Vec<T>) -> Result<FacePoset, ModelError> {
    let index: BTreeMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut pairs = Vec::new();
    for (i, e) in elements.iter().enumerate() {
        for m in moves(e) {
            let j = *index
                .get(&m)
                .ok_or_else(|| ModelError::invalid("move", format!("{e} moves to {m}, which is not enumerated")))?;
            pairs.push((i, j));
        }
    }
    let labels = elements.iter().map(|e| format!("{e}")).collect();
    Ok(FacePoset::from_generators(labels, &pairs)?)
}

/// All expressions over `a1..an` under the coarsening moves; rank is chain
/// height and gradedness is checked.
pub fn build_frak_j(n: usize) -> Result<FacePoset, ModelError> {
    build(enumerate_expressions(n)?, expression_moves)
}

/// All flat expressions over `a1..an` under the flat coarsening moves.
pub fn build_jprime(n: usize) -> Result<FacePoset, ModelError> {
    build(enumerate_flat_expressions(n)?, flat_moves)
}
