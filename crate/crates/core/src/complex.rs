//! Polytopal cell complexes as face posets: boundary, cone, product and union.
//!
//! Cell labels are canonical strings, so two complexes built from the same
//! model share a cell exactly when the labels are equal. Constructions add
//! labels of their own:
//!
//! | cell               | label     |
//! |--------------------|-----------|
//! | cone apex          | `@`       |
//! | apex joined with G | `@*G`     |
//! | whole cone         | `@^`      |
//! | product cell (x,y) | `<x\|y>`  |

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::iso::{check_order_iso, check_order_iso_by, search_iso};
use crate::poset::{FacePoset, OrderError};
use crate::report::Report;

pub const APEX: &str = "@";
pub const CONE_TOP: &str = "@^";

/// A down-closed collection of cells; need not have a greatest element.
#[derive(Debug, Clone)]
pub struct CellComplex {
    cells: FacePoset,
}

impl CellComplex {
    pub fn new(cells: FacePoset) -> Self {
        Self { cells }
    }

    pub fn empty() -> Self {
        Self { cells: FacePoset::empty() }
    }

    /// A single vertex with the given label.
    pub fn point(label: &str) -> Self {
        Self::new(FacePoset::from_generators(alloc::vec![label.into()], &[]).expect("point"))
    }

    pub fn cells(&self) -> &FacePoset {
        &self.cells
    }

    pub fn into_cells(self) -> FacePoset {
        self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Maximal cells, in index order.
    pub fn top_cells(&self) -> Vec<usize> {
        self.cells.maximal_elements()
    }

    /// Common rank of the top cells. `Ok(None)` for the empty complex.
    pub fn pure_dimension(&self) -> Result<Option<usize>, OrderError> {
        let mut ranks: Vec<usize> = self.top_cells().iter().map(|&c| self.cells.rank(c)).collect();
        ranks.sort_unstable();
        ranks.dedup();
        match ranks.as_slice() {
            [] => Ok(None),
            [d] => Ok(Some(*d)),
            _ => Err(OrderError::MixedTopRanks(ranks)),
        }
    }
}

/// Down-closure of the codimension-one cells lying in exactly one top cell.
pub fn boundary_subcomplex(c: &CellComplex) -> Result<CellComplex, OrderError> {
    let Some(d) = c.pure_dimension()? else { return Ok(CellComplex::empty()) };
    if d == 0 {
        return Ok(CellComplex::empty());
    }
    let fp = c.cells();
    let free: Vec<usize> = fp
        .elements_of_rank(d - 1)
        .filter(|&g| fp.covers_up(g).iter().filter(|&&t| fp.rank(t) == d).count() == 1)
        .collect();
    if free.is_empty() {
        return Ok(CellComplex::empty());
    }
    Ok(CellComplex::new(fp.subcomplex(free)))
}

/// A named set of base cells coned off by a single apex cell `@*name`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub name: String,
    pub cells: BTreeSet<String>,
}

/// The cone over `c`: `c`, an apex, the join of the apex with every boundary
/// cell, and one top cell above everything. The cone over the empty complex
/// is a point.
pub fn cone_complex(c: &CellComplex) -> Result<CellComplex, OrderError> {
    let boundary = boundary_subcomplex(c)?;
    let bd = boundary.cells();
    let pieces: Vec<Piece> = (0..bd.len())
        .map(|g| Piece {
            name: bd.label(g).into(),
            cells: bd.downward_closure([g]).into_iter().map(|h| bd.label(h).into()).collect(),
        })
        .collect();
    cone_over_pieces(c, &pieces)
}

/// Cone over `c` in which each piece of its boundary, rather than each
/// boundary cell, is joined to the apex. With one piece per boundary cell
/// (its closure) this is [`cone_complex`].
///
/// `@*P` has rank one more than the top rank in `P`, and `@*P <= @*Q` iff
/// `P` is contained in `Q`.
pub fn cone_over_pieces(c: &CellComplex, pieces: &[Piece]) -> Result<CellComplex, OrderError> {
    let base = c.cells();
    if base.index_of(APEX).is_some() {
        return Err(OrderError::LabelClash(APEX.into()));
    }
    if c.is_empty() {
        return Ok(CellComplex::point(APEX));
    }
    let d = c.pure_dimension()?.expect("non-empty complex");

    let mut labels: Vec<String> = base.labels().to_vec();
    let mut ranks: Vec<usize> = base.ranks().to_vec();
    let mut pairs = base.cover_pairs();

    let apex = labels.len();
    labels.push(APEX.into());
    ranks.push(0);
    let joins = labels.len();
    for (k, piece) in pieces.iter().enumerate() {
        let mut top_rank = None;
        for cell in &piece.cells {
            let x = base.index_of(cell).ok_or_else(|| OrderError::UnknownElement(cell.clone()))?;
            top_rank = top_rank.max(Some(base.rank(x)));
            pairs.push((x, joins + k));
        }
        labels.push(format!("@*{}", piece.name));
        ranks.push(top_rank.map_or(0, |r| r + 1));
        pairs.push((apex, joins + k));
    }
    for (k, p) in pieces.iter().enumerate() {
        for (l, q) in pieces.iter().enumerate() {
            if k != l && p.cells.len() < q.cells.len() && p.cells.is_subset(&q.cells) {
                pairs.push((joins + k, joins + l));
            }
        }
    }
    let top = labels.len();
    labels.push(CONE_TOP.into());
    ranks.push(d + 1);
    pairs.extend(c.top_cells().into_iter().map(|t| (t, top)));
    pairs.extend((0..pieces.len()).map(|k| (joins + k, top)));
    pairs.push((apex, top));
    Ok(CellComplex::new(FacePoset::with_ranks(labels, &ranks, &pairs)?))
}

/// Cartesian product with componentwise order; ranks add.
pub fn product_complex(c: &CellComplex, d: &CellComplex) -> Result<CellComplex, OrderError> {
    let (a, b) = (c.cells(), d.cells());
    let m = b.len();
    let mut labels = Vec::with_capacity(a.len() * m);
    let mut ranks = Vec::with_capacity(a.len() * m);
    for x in 0..a.len() {
        for y in 0..m {
            labels.push(format!("<{}|{}>", a.label(x), b.label(y)));
            ranks.push(a.rank(x) + b.rank(y));
        }
    }
    let mut pairs = Vec::new();
    for (x, x2) in a.cover_pairs() {
        for y in 0..m {
            pairs.push((x * m + y, x2 * m + y));
        }
    }
    for (y, y2) in b.cover_pairs() {
        for x in 0..a.len() {
            pairs.push((x * m + y, x * m + y2));
        }
    }
    Ok(CellComplex::new(FacePoset::with_ranks(labels, &ranks, &pairs)?))
}

/// Label-wise union. Shared cells must carry the same rank.
pub fn union_complex(c: &CellComplex, d: &CellComplex) -> Result<CellComplex, OrderError> {
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut ranks: Vec<usize> = Vec::new();
    let mut pairs = Vec::new();
    for part in [c.cells(), d.cells()] {
        let mut local = Vec::with_capacity(part.len());
        for x in 0..part.len() {
            let label = part.label(x);
            let i = match index.get(label) {
                Some(&i) => {
                    if ranks[i] != part.rank(x) {
                        return Err(OrderError::LabelClash(label.into()));
                    }
                    i
                }
                None => {
                    index.insert(label.into(), labels.len());
                    labels.push(label.into());
                    ranks.push(part.rank(x));
                    labels.len() - 1
                }
            };
            local.push(i);
        }
        pairs.extend(part.cover_pairs().into_iter().map(|(x, y)| (local[x], local[y])));
    }
    Ok(CellComplex::new(FacePoset::with_ranks(labels, &ranks, &pairs)?))
}

/// A complex together with an apex and a base subcomplex such that every
/// cell outside the base lies above the apex, e.g. a cone and its base.
#[derive(Debug, Clone)]
pub struct ConedBall {
    pub cells: CellComplex,
    pub apex: String,
    pub base: CellComplex,
}

impl ConedBall {
    pub fn cone_of(base: &CellComplex) -> Result<Self, OrderError> {
        Ok(Self { cells: cone_complex(base)?, apex: APEX.into(), base: base.clone() })
    }

    /// Labels of the cells lying above the apex.
    fn apex_faces(&self) -> Vec<usize> {
        let fp = self.cells.cells();
        let a = fp.index_of(&self.apex).expect("apex is a cell");
        (0..fp.len()).filter(|&f| fp.le(a, f)).collect()
    }

    /// Base cells below `f`.
    fn base_below(&self, f: usize) -> Vec<String> {
        let fp = self.cells.cells();
        let base = self.base.cells();
        base.labels().iter().filter(|l| fp.index_of(l).is_some_and(|g| fp.le(g, f))).cloned().collect()
    }

    fn closure(&self, f: usize) -> Vec<String> {
        let fp = self.cells.cells();
        fp.downward_closure([f]).into_iter().map(|g| fp.label(g).into()).collect()
    }

    fn check(&self, report: &mut Report) -> bool {
        let fp = self.cells.cells();
        let Some(a) = fp.index_of(&self.apex) else {
            report.fail(format!("apex {} is not a cell", self.apex));
            return false;
        };
        let ok = fp.top().is_some() && self.base.cells().labels().iter().all(|l| fp.index_of(l).is_some());
        report.require(ok, || String::from("coned ball needs a top cell and a base inside it"))
            && (0..fp.len()).all(|f| {
                let in_base = self.base.cells().index_of(fp.label(f)).is_some();
                report.require(in_base != fp.le(a, f), || {
                    format!("{} is neither in the base nor above the apex", fp.label(f))
                })
            })
    }
}

fn pair_label(a: &str, b: &str) -> String {
    format!("<{a}|{b}>")
}

/// Face-poset form of `C(X) x C(Y) = C((X x C(Y)) u (C(X) x Y))`.
///
/// The right-hand cone joins the apex to one piece per pair of apex faces
/// `(F, G)`: the part of `F x G` lying in the base. The natural map
/// `@*<F|G> -> <F|G>` is checked, and an isomorphism is also searched for
/// from the anchor `@ -> <apex|apex>` alone.
pub fn verify_cone_product(x: &ConedBall, y: &ConedBall) -> Report {
    let mut report = Report::new("cross cone");
    if !x.check(&mut report) || !y.check(&mut report) {
        return report;
    }
    let build = || -> Result<(CellComplex, CellComplex), OrderError> {
        let lhs = product_complex(&x.cells, &y.cells)?;
        let z = union_complex(&product_complex(&x.base, &y.cells)?, &product_complex(&x.cells, &y.base)?)?;
        let (xf, yf) = (x.cells.cells(), y.cells.cells());
        let (x_top, y_top) = (xf.top().expect("checked"), yf.top().expect("checked"));
        let (x_apex, y_apex) = (xf.index_of(&x.apex).expect("checked"), yf.index_of(&y.apex).expect("checked"));
        let mut pieces = Vec::new();
        for f in x.apex_faces() {
            for g in y.apex_faces() {
                if (f == x_apex && g == y_apex) || (f == x_top && g == y_top) {
                    continue;
                }
                let mut cells = BTreeSet::new();
                for (outer, inner) in [(x.base_below(f), y.closure(g)), (x.closure(f), y.base_below(g))] {
                    for a in &outer {
                        cells.extend(inner.iter().map(|b| pair_label(a, b)));
                    }
                }
                pieces.push(Piece { name: pair_label(xf.label(f), yf.label(g)), cells });
            }
        }
        Ok((lhs, cone_over_pieces(&z, &pieces)?))
    };
    let (lhs, rhs) = match build() {
        Ok(pair) => pair,
        Err(e) => {
            report.fail(format!("construction failed: {e}"));
            return report;
        }
    };
    report.count("domain", rhs.len()).count("codomain", lhs.len());
    let (xf, yf) = (x.cells.cells(), y.cells.cells());
    let apex_image = pair_label(&x.apex, &y.apex);
    let top_image = pair_label(xf.label(xf.top().expect("checked")), yf.label(yf.top().expect("checked")));
    let natural = check_order_iso_by(rhs.cells(), lhs.cells(), |cell| {
        Some(match cell {
            APEX => apex_image.clone(),
            CONE_TOP => top_image.clone(),
            _ => cell.strip_prefix("@*").unwrap_or(cell).into(),
        })
    });
    report.absorb(natural);
    let anchors = [(String::from(APEX), apex_image.clone())].into_iter().collect();
    match search_iso(rhs.cells(), lhs.cells(), &anchors) {
        Some(map) => {
            report.absorb(check_order_iso(rhs.cells(), lhs.cells(), &map));
        }
        None => {
            report.fail(format!("no isomorphism extends {APEX} -> {apex_image}"));
        }
    }
    report
}

/// [`verify_cone_product`] for literal cones over `x` and `y`.
pub fn verify_cross_cone(x: &CellComplex, y: &CellComplex) -> Report {
    match (ConedBall::cone_of(x), ConedBall::cone_of(y)) {
        (Ok(cx), Ok(cy)) => verify_cone_product(&cx, &cy),
        (Err(e), _) | (_, Err(e)) => {
            let mut report = Report::new("cross cone");
            report.fail(format!("construction failed: {e}"));
            report
        }
    }
}
