//! Painted trees to expressions, and flat expressions to bracketings of one
//! more letter.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::expression::{
    collapse_codomain, enumerate_expressions, enumerate_flat_expressions, Argument, Block, Expression, Factor,
    FlatExpression, Term,
};
use super::order::{build_frak_j, build_jprime};
use super::painted::{build_jtree, enumerate_painted_trees, NodeKind, PaintedTree};
use crate::associahedron::{build_k, Bracketing};
use crate::error::ModelError;
use crate::iso::check_order_iso_by;
use crate::report::Report;

enum Labelled {
    Factor(Factor),
    Term(Term),
}

/// Labels each node from the leaves down: a `U` node brackets its factors, a
/// `T` node applies `f` to them separated by dots, a `P` node multiplies its
/// blocks. Redundant brackets are dropped.
pub fn tree_to_expression(t: &PaintedTree) -> Result<Expression, ModelError> {
    fn walk(t: &PaintedTree, next: &mut usize) -> Labelled {
        match t {
            PaintedTree::Leaf => {
                *next += 1;
                Labelled::Factor(Factor::Atom(*next))
            }
            PaintedTree::Node { kind, children } => {
                let parts: Vec<Labelled> = children.iter().map(|c| walk(c, next)).collect();
                let factors = || {
                    parts
                        .iter()
                        .filter_map(|p| if let Labelled::Factor(f) = p { Some(f.clone()) } else { None })
                        .collect::<Vec<_>>()
                };
                match kind {
                    NodeKind::U => Labelled::Factor(Factor::Group(factors())),
                    NodeKind::T => {
                        let xs = factors();
                        Labelled::Term(Term::Block(if xs.len() == 1 {
                            Block::word(xs)
                        } else {
                            Block { arg: Argument::Dotted(xs) }
                        }))
                    }
                    NodeKind::P => Labelled::Term(Term::Product(
                        parts
                            .into_iter()
                            .filter_map(|p| if let Labelled::Term(t) = p { Some(t) } else { None })
                            .collect(),
                    )),
                }
            }
        }
    }
    t.validate()?;
    match walk(t, &mut 0) {
        Labelled::Term(root) => Ok(Expression { root }),
        Labelled::Factor(_) => Err(ModelError::invalid("painted tree", "root is not painted")),
    }
}

fn collect_groups(f: &Factor, out: &mut BTreeSet<(usize, usize)>) {
    if let Factor::Group(items) = f {
        out.insert(f.span());
        items.iter().for_each(|x| collect_groups(x, out));
    }
}

/// `C1 (C2 (.. (Ck a(n+1))..))`, where `Ci` lists the dot segments of block
/// `i` (a dot-free word counts as one bracketed segment unless it is a
/// single letter).
pub fn flat_to_bracketing(e: &FlatExpression) -> Result<Bracketing, ModelError> {
    let last = e.blocks.last().and_then(|b| b.segments().last().map(|f| f.span().1));
    let n = last.ok_or_else(|| ModelError::invalid("flat expression", "no blocks"))?;
    let mut brackets = BTreeSet::new();
    for (i, b) in e.blocks.iter().enumerate() {
        let segments = b.segments();
        segments.iter().for_each(|f| collect_groups(f, &mut brackets));
        if i > 0 {
            brackets.insert((segments[0].span().0, n + 1));
        }
    }
    Bracketing::new(n + 1, brackets)
}

/// Inverse of [`flat_to_bracketing`]: the brackets ending at the last letter
/// mark where blocks start.
pub fn bracketing_to_flat(b: &Bracketing) -> Result<FlatExpression, ModelError> {
    fn units(lo: usize, hi: usize, exclude: (usize, usize), b: &Bracketing) -> Vec<Factor> {
        let mut out = Vec::new();
        let mut pos = lo;
        while pos <= hi {
            let end =
                b.brackets().iter().filter(|&&(l, r)| l == pos && r <= hi && (l, r) != exclude).map(|&(_, r)| r).max();
            match end {
                Some(r) => {
                    out.push(Factor::Group(units(pos, r, (pos, r), b)));
                    pos = r + 1;
                }
                None => {
                    out.push(Factor::Atom(pos));
                    pos += 1;
                }
            }
        }
        out
    }
    let m = b.letters();
    ModelError::too_small("bracketing to flat expression", m, 2)?;
    let mut starts: Vec<usize> = Vec::from([1]);
    starts.extend(b.brackets().iter().filter(|&&(_, r)| r == m).map(|&(l, _)| l));
    let blocks = starts
        .iter()
        .enumerate()
        .map(|(i, &lo)| {
            let hi = starts.get(i + 1).map_or(m - 1, |s| s - 1);
            let us = units(lo, hi, (0, 0), b);
            if us.len() >= 2 {
                Block { arg: Argument::Dotted(us) }
            } else {
                Block::word(us)
            }
        })
        .collect();
    Ok(FlatExpression { blocks })
}

/// Painted trees and expressions on `n` letters are isomorphic posets via
/// [`tree_to_expression`]; both sides are enumerated independently.
pub fn verify_tree_expression_iso(n: usize) -> Report {
    let mut report = Report::new("painted trees to expressions");
    let run = |report: &mut Report| -> Result<(), ModelError> {
        let (trees, exprs) = (build_jtree(n)?, build_frak_j(n)?);
        let mut images = BTreeSet::new();
        for t in enumerate_painted_trees(n)? {
            let e = tree_to_expression(&t)?;
            report.require(t.dimension() == trees.rank(trees.index_of(&format!("{t}")).expect("enumerated")), || {
                format!("{t} has rank other than its dimension")
            });
            images.insert(format!("{e}"));
        }
        report.count("expressions", enumerate_expressions(n)?.len()).count("images", images.len());
        let iso = check_order_iso_by(&trees, &exprs, |label| {
            let t: PaintedTree = label.parse().ok()?;
            tree_to_expression(&t).ok().map(|e| format!("{e}"))
        });
        let (d, c) = (iso.get("domain").unwrap_or(0), iso.get("codomain").unwrap_or(0));
        report.count("domain", d).count("codomain", c);
        report.absorb(iso);
        Ok(())
    };
    if let Err(e) = run(&mut report) {
        report.fail(format!("construction failed: {e}"));
    }
    report
}

/// Flat expressions on `n` letters and bracketings of `n + 1` letters are
/// isomorphic posets via [`flat_to_bracketing`]; the inverse round-trips and
/// top maps to top.
pub fn verify_flat_bracketing_iso(n: usize) -> Report {
    let mut report = Report::new("flat expressions to bracketings");
    let run = |report: &mut Report| -> Result<(), ModelError> {
        let (flat, k) = (build_jprime(n)?, build_k(n + 1)?);
        for e in enumerate_flat_expressions(n)? {
            let b = flat_to_bracketing(&e)?;
            let back = bracketing_to_flat(&b)?;
            report.require(back == e, || format!("{e} -> {b} -> {back}"));
        }
        let same_shape = flat.f_vector() == k.f_vector();
        report.require(same_shape, || format!("f-vectors {:?} and {:?}", flat.f_vector(), k.f_vector()));
        if let (Some(a), Some(b)) = (flat.top(), k.top()) {
            let image = flat_to_bracketing(&flat.label(a).parse()?)?;
            report.require(format!("{image}") == k.label(b), || format!("top {} maps to {image}", flat.label(a)));
        } else {
            report.fail("missing top element");
        }
        let iso = check_order_iso_by(&flat, &k, |label| {
            let e: FlatExpression = label.parse().ok()?;
            flat_to_bracketing(&e).ok().map(|b| format!("{b}"))
        });
        let (d, c) = (iso.get("domain").unwrap_or(0), iso.get("codomain").unwrap_or(0));
        report.count("domain", d).count("codomain", c);
        report.absorb(iso);
        Ok(())
    };
    if let Err(e) = run(&mut report) {
        report.fail(format!("construction failed: {e}"));
    }
    report
}

/// Erasing codomain brackets is onto the flat expressions and order
/// preserving.
pub fn verify_codomain_collapse(n: usize) -> Report {
    let mut report = Report::new("codomain collapse");
    let run = |report: &mut Report| -> Result<(), ModelError> {
        let (full, flat) = (build_frak_j(n)?, build_jprime(n)?);
        let image: Vec<usize> = (0..full.len())
            .map(|x| {
                let e: Expression = full.label(x).parse().expect("labels parse");
                flat.index_of(&format!("{}", collapse_codomain(&e))).expect("image is a flat expression")
            })
            .collect();
        let hit: BTreeSet<usize> = image.iter().copied().collect();
        report.count("domain", full.len()).count("codomain", flat.len()).count("image", hit.len());
        report.require(hit.len() == flat.len(), || String::from("some flat expression has no preimage"));
        for x in 0..full.len() {
            for &y in full.poset().covers_up(x) {
                report.require(flat.le(image[x], image[y]), || {
                    format!("{} <= {} but images are not", full.label(x), full.label(y))
                });
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut report) {
        report.fail(format!("construction failed: {e}"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn tree_images() {
        let img = |s: &str| tree_to_expression(&s.parse().unwrap()).unwrap().to_string();
        assert_eq!(img("(p (t (u * *)) (p (t *) (t * *)))"), "f(a1a2)(f(a3)f(a4.a5))");
        assert_eq!(img("(t * * *)"), "f(a1.a2.a3)");
        assert_eq!(img("(t (u * *))"), "f(a1a2)");
    }

    #[test]
    fn flat_images() {
        let img = |s: &str| flat_to_bracketing(&s.parse().unwrap()).unwrap().to_string();
        assert_eq!(img("f(a1.a2.a3)"), "a1a2a3a4");
        assert_eq!(img("f(a1)f(a2)"), "a1(a2a3)");
        assert_eq!(img("f((a1a2).(a3a4))f((a5a6).(a7a8).(a9a10))"), "(a1a2)(a3a4)((a5a6)(a7a8)(a9a10)a11)");
        assert_eq!(img("f(a1a2)"), "(a1a2)a3");
    }

    #[test]
    fn flat_inverse() {
        let b: Bracketing = "(a1a2)(a3a4)((a5a6)(a7a8)(a9a10)a11)".parse().unwrap();
        assert_eq!(bracketing_to_flat(&b).unwrap().to_string(), "f((a1a2).(a3a4))f((a5a6).(a7a8).(a9a10))");
    }

    #[test]
    fn small_isomorphisms() {
        for n in 1..=3 {
            let r = verify_tree_expression_iso(n);
            assert!(r.pass, "{r}");
            let r = verify_flat_bracketing_iso(n);
            assert!(r.pass, "{r}");
            let r = verify_codomain_collapse(n);
            assert!(r.pass, "{r}");
        }
        assert_eq!(verify_tree_expression_iso(3).get("domain"), Some(13));
    }
}
