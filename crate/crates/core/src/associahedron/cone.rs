//! The associahedron as a cone over its enlarged predecessor.
//!
//! `enlarged_complex(n)` is the part of the boundary of `K_(n+1)` made of the
//! facets whose bracket avoids the last letter. Its complement in `K_(n+1)`
//! consists of the faces through the right comb vertex, and each of those is
//! the cone over its intersection with the enlargement.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::bracketing::{build_k, enumerate_bracketings, facet_signature, Bracketing};
use super::operators::embed;
use crate::complex::{
    cone_complex, cone_over_pieces, product_complex, verify_cone_product, CellComplex, ConedBall, Piece, APEX, CONE_TOP,
};
use crate::error::ModelError;
use crate::iso::{check_order_iso, check_order_iso_by, search_iso};
use crate::report::Report;

/// Down-closure in `K_(n+1)` of the facets whose bracket avoids letter `n + 1`.
pub fn enlarged_complex(n: usize) -> Result<CellComplex, ModelError> {
    ModelError::too_small("enlarged complex", n, 2)?;
    let k = build_k(n + 1)?;
    let seeds: Vec<usize> =
        k.elements_of_rank(n - 2).filter(|&f| !k.label(f).ends_with(&format!("a{})", n + 1))).collect();
    Ok(CellComplex::new(k.subcomplex(seeds)))
}

/// The enlargement on `m` letters, empty when `m < 2`.
fn enlarged_or_empty(m: usize) -> Result<CellComplex, ModelError> {
    if m < 2 {
        Ok(CellComplex::empty())
    } else {
        enlarged_complex(m)
    }
}

/// `K_p` seen as a cone with apex the right comb over the enlargement of
/// `K_(p-1)`.
pub fn associahedron_as_cone(p: usize) -> Result<ConedBall, ModelError> {
    Ok(ConedBall {
        cells: CellComplex::new(build_k(p)?),
        apex: format!("{}", Bracketing::right_comb(p)),
        base: enlarged_or_empty(p - 1)?,
    })
}

/// For every face of `K_n` through the right comb, other than the comb and
/// the top, the part of the enlargement it contains.
///
/// The facet `K_s x_s K_t` contributes the images of `K^_(s-1) x K_t` and
/// `K_s x K^_(t-1)` under substitution at slot `s`; a smaller face is the
/// meet of the facets through it and gets the intersection of their pieces.
pub fn missing_face_pieces(n: usize) -> Result<Vec<Piece>, ModelError> {
    ModelError::too_small("missing faces", n, 3)?;
    let labels = |c: &CellComplex| -> BTreeSet<String> { c.cells().labels().iter().cloned().collect() };
    let mut facet_pieces: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
    for s in 2..n {
        let t = n - s + 1;
        let (outer_hat, inner_hat) = (labels(&enlarged_or_empty(s - 1)?), labels(&enlarged_or_empty(t - 1)?));
        let mut cells = BTreeSet::new();
        for o in enumerate_bracketings(s)? {
            let o_hat = outer_hat.contains(&format!("{o}"));
            for i in enumerate_bracketings(t)? {
                if o_hat || inner_hat.contains(&format!("{i}")) {
                    cells.insert(format!("{}", embed(&o, s, &i)?));
                }
            }
        }
        facet_pieces.insert(s, cells);
    }
    let starts: Vec<usize> = (2..n).collect();
    let mut pieces = Vec::new();
    // Proper non-empty subsets of the comb's brackets.
    for mask in 1u32..(1 << starts.len()) - 1 {
        let chosen: Vec<usize> =
            starts.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &s)| s).collect();
        let face = Bracketing::new(n, chosen.iter().map(|&s| (s, n)))?;
        let mut cells = facet_pieces[&chosen[0]].clone();
        for s in &chosen[1..] {
            cells.retain(|c| facet_pieces[s].contains(c));
        }
        pieces.push(Piece { name: format!("{face}"), cells });
    }
    Ok(pieces)
}

/// `K_n` is the cone over the enlargement of `K_(n-1)` with apex the right
/// comb. Checks:
///
/// * the cone over the missing-face pieces is isomorphic to `K_n` by the
///   natural map and by a search anchored at apex and at the facet
///   `(a1..a(n-1))an`;
/// * each piece is exactly the part of the enlargement below its face;
/// * the faces through the comb are exactly the facets `K_p x_p K_q` and the
///   comb lies in `n - 2` of them;
/// * every other vertex lies in the enlargement.
///
/// The cell-by-cell cone of the enlargement is compared as a note only: it
/// agrees with `K_n` up to `n = 4` and is larger from `n = 5` on.
pub fn verify_theorem_a(n: usize) -> Report {
    let mut report = Report::new("cone construction");
    if n < 2 {
        report.fail(format!("needs n >= 2, got {n}"));
        return report;
    }
    if let Err(e) = theorem_a_into(n, &mut report) {
        report.fail(format!("construction failed: {e}"));
    }
    report
}

fn theorem_a_into(n: usize, report: &mut Report) -> Result<(), ModelError> {
    let k = build_k(n)?;
    let base = enlarged_or_empty(n - 1)?;
    let comb = format!("{}", Bracketing::right_comb(n));
    let top = format!("{}", Bracketing::empty(n));
    let pieces = if n >= 3 { missing_face_pieces(n)? } else { Vec::new() };
    let cone = cone_over_pieces(&base, &pieces)?;
    report.count("domain", cone.len()).count("codomain", k.len());

    let natural = check_order_iso_by(cone.cells(), &k, |cell| {
        Some(match cell {
            APEX => comb.clone(),
            CONE_TOP => top.clone(),
            _ => cell.strip_prefix("@*").unwrap_or(cell).into(),
        })
    });
    report.absorb(natural);

    let mut anchors: BTreeMap<String, String> = BTreeMap::new();
    anchors.insert(APEX.into(), comb.clone());
    if n >= 3 {
        let facet = format!("{}", Bracketing::new(n, [(1, n - 1)])?);
        anchors.insert(facet.clone(), facet);
    }
    let searched = search_iso(cone.cells(), &k, &anchors);
    match &searched {
        Some(map) => {
            report.absorb(check_order_iso(cone.cells(), &k, map));
        }
        None => {
            report.fail(format!("no isomorphism extends {APEX} -> {comb}"));
        }
    }

    for piece in &pieces {
        let face = k.index_of(&piece.name).expect("piece names are faces");
        let below: BTreeSet<String> = base
            .cells()
            .labels()
            .iter()
            .filter(|l| k.le(k.index_of(l).expect("base lies in K"), face))
            .cloned()
            .collect();
        report.require(below == piece.cells, || {
            format!("piece of {} differs from its intersection with the base", piece.name)
        });
    }

    let apex = k.index_of(&comb).expect("comb is a vertex");
    let mut through_comb = 0;
    if n >= 3 {
        for f in k.elements_of_rank(n - 3) {
            let sig = facet_signature(&k.label(f).parse()?)?;
            let contains = k.le(apex, f);
            through_comb += usize::from(contains);
            report.require(contains == (sig.r == sig.p), || {
                format!("facet {} (p={}, r={}) and the comb", k.label(f), sig.p, sig.r)
            });
        }
        report.require(through_comb == n - 2, || format!("comb lies in {through_comb} facets"));
    }
    report.count("facets through apex", through_comb);

    let mut others = 0;
    for v in k.elements_of_rank(0).filter(|&v| v != apex) {
        others += 1;
        let label = k.label(v);
        report.require(base.cells().index_of(label).is_some(), || format!("vertex {label} is missing from the base"));
    }
    report.count("other vertices", others);

    let literal = cone_complex(&base)?;
    if literal.len() == k.len() && search_iso(literal.cells(), &k, &anchors).is_some() {
        report.note(format!("cell-by-cell cone also matches ({} cells)", literal.len()));
    } else {
        report.note(format!("cell-by-cell cone has {} cells against {}", literal.len(), k.len()));
    }
    Ok(())
}

/// `K_p x K_q` is the cone over `(K^_(p-1) x K_q) u (K_p x K^_(q-1))`, and
/// substitution at slot `r` maps it isomorphically onto the facet
/// `K_p x_r K_q` of `K_(p+q-1)`.
pub fn verify_q(p: usize, q: usize, r: usize) -> Report {
    let mut report = Report::new("product as cone");
    if p < 2 || q < 2 || r == 0 || r > p {
        report.fail(format!("needs p, q >= 2 and 1 <= r <= p, got ({p}, {q}, {r})"));
        return report;
    }
    let run = |report: &mut Report| -> Result<(), ModelError> {
        let (x, y) = (associahedron_as_cone(p)?, associahedron_as_cone(q)?);
        let sub = verify_cone_product(&x, &y);
        for key in ["domain", "codomain"] {
            if let Some(v) = sub.get(key) {
                report.count(key, v);
            }
        }
        report.absorb(sub);

        let product = product_complex(&x.cells, &y.cells)?;
        let whole = build_k(p + q - 1)?;
        let facet = whole.index_of(&format!("{}", Bracketing::new(p + q - 1, [(r, r + q - 1)])?)).expect("facet");
        let face = whole.subcomplex([facet]);
        let mut inclusion = check_order_iso_by(product.cells(), &face, |cell| {
            let (o, i) = cell.strip_prefix('<')?.strip_suffix('>')?.split_once('|')?;
            let e = embed(&o.parse().ok()?, r, &i.parse().ok()?).ok()?;
            Some(format!("{e}"))
        });
        inclusion.check = format!("facet inclusion at slot {r}");
        report.absorb(inclusion);
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
    use crate::complex::boundary_subcomplex;
    use alloc::vec;

    #[test]
    fn small_enlargements() {
        let two = enlarged_complex(2).unwrap();
        assert_eq!(two.cells().labels(), &[String::from("(a1a2)a3")]);
        let three = enlarged_complex(3).unwrap();
        assert_eq!(three.cells().f_vector(), vec![4, 3]);
        let ends = boundary_subcomplex(&three).unwrap();
        assert_eq!(ends.cells().f_vector(), vec![2]);
        assert!(enlarged_complex(1).is_err());
    }

    #[test]
    fn literal_cone_over_c_shape_is_pentagon() {
        let c = cone_complex(&enlarged_complex(3).unwrap()).unwrap();
        assert_eq!(c.len(), 11);
        assert_eq!(c.cells().f_vector(), vec![5, 5, 1]);
    }

    #[test]
    fn cone_construction_small() {
        for n in 2..=5 {
            let r = verify_theorem_a(n);
            assert!(r.pass, "{r}");
        }
        assert_eq!(verify_theorem_a(5).get("facets through apex"), Some(3));
    }

    #[test]
    fn products_as_cones() {
        for (p, q) in [(2, 2), (2, 3), (3, 3), (4, 3), (3, 4)] {
            let r = verify_q(p, q, 1);
            assert!(r.pass, "{r}");
        }
        assert_eq!(verify_q(3, 3, 2).get("codomain"), Some(9));
        assert!(!verify_q(3, 3, 4).pass);
    }
}
