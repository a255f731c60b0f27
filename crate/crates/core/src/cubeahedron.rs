//! Design tubings of a path graph and the cubeahedron they form.
//!
//! Nodes of the path `P_n` are `1..=n`, with an edge between `i` and `i + 1`.
//! Every tube is an interval of nodes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::associahedron::{build_k, Bracketing};
use crate::error::ModelError;
use crate::iso::check_order_iso_by;
use crate::multiplihedron::{build_jprime, flat_moves, flat_to_bracketing, Argument, Block, Factor, FlatExpression};
use crate::poset::FacePoset;
use crate::report::Report;

/// A round tube is any node interval, the whole path included. A square tube
/// is a single node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DesignTube {
    Round { lo: usize, hi: usize },
    Square { node: usize },
}

impl DesignTube {
    pub fn nodes(&self) -> (usize, usize) {
        match *self {
            Self::Round { lo, hi } => (lo, hi),
            Self::Square { node } => (node, node),
        }
    }

    pub fn is_round(&self) -> bool {
        matches!(self, Self::Round { .. })
    }
}

fn nested(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1)
}

/// Two round tubes must be nested or far apart. Any pair with a square must
/// not be nested, which leaves distinct squares always compatible.
pub fn compatible(a: &DesignTube, b: &DesignTube) -> bool {
    let (x, y) = (a.nodes(), b.nodes());
    if a.is_round() && b.is_round() {
        nested(x, y) || x.1 + 1 < y.0 || y.1 + 1 < x.0
    } else {
        !nested(x, y)
    }
}

impl fmt::Display for DesignTube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Round { lo, hi } if lo == hi => write!(f, "r{lo}"),
            Self::Round { lo, hi } => write!(f, "r{lo}..{hi}"),
            Self::Square { node } => write!(f, "s{node}"),
        }
    }
}

/// A set of pairwise compatible design tubes on `P_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DesignTubing {
    n: usize,
    tubes: BTreeSet<DesignTube>,
}

impl DesignTubing {
    pub fn new(n: usize, tubes: impl IntoIterator<Item = DesignTube>) -> Result<Self, ModelError> {
        ModelError::too_small("path graph", n, 1)?;
        let tubes: BTreeSet<DesignTube> = tubes.into_iter().collect();
        for t in &tubes {
            let (lo, hi) = t.nodes();
            if lo < 1 || lo > hi || hi > n {
                return Err(ModelError::invalid("design tube", format!("{t} is not an interval of 1..={n}")));
            }
        }
        for (i, a) in tubes.iter().enumerate() {
            if let Some(b) = tubes.iter().skip(i + 1).find(|b| !compatible(a, b)) {
                return Err(ModelError::invalid("design tubing", format!("{a} and {b} are incompatible")));
            }
        }
        Ok(Self { n, tubes })
    }

    pub fn empty(n: usize) -> Result<Self, ModelError> {
        Self::new(n, [])
    }

    pub fn nodes(&self) -> usize {
        self.n
    }

    pub fn tubes(&self) -> &BTreeSet<DesignTube> {
        &self.tubes
    }

    pub fn len(&self) -> usize {
        self.tubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tubes.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.n - self.tubes.len()
    }

    /// Parses the form printed by `Display`, e.g. `{r2..3,s1}`, for `P_n`.
    pub fn parse(n: usize, input: &str) -> Result<Self, ModelError> {
        let err = |reason: String| ModelError::parse("design tubing", input, reason);
        let body = input
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| err("expected braces".into()))?;
        let number = |s: &str| s.parse::<usize>().map_err(|_| err(format!("bad node {s:?}")));
        let mut tubes = Vec::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let tube = if let Some(rest) = item.strip_prefix('r') {
                match rest.split_once("..") {
                    Some((lo, hi)) => DesignTube::Round { lo: number(lo)?, hi: number(hi)? },
                    None => {
                        let k = number(rest)?;
                        DesignTube::Round { lo: k, hi: k }
                    }
                }
            } else if let Some(rest) = item.strip_prefix('s') {
                DesignTube::Square { node: number(rest)? }
            } else {
                return Err(err(format!("unknown tube {item:?}")));
            };
            tubes.push(tube);
        }
        Self::new(n, tubes)
    }
}

impl fmt::Display for DesignTubing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, t) in self.tubes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("}")
    }
}

/// All design tubes on `P_n`, rounds before squares.
pub fn design_tubes(n: usize) -> Vec<DesignTube> {
    let rounds = (1..=n).flat_map(|lo| (lo..=n).map(move |hi| DesignTube::Round { lo, hi }));
    rounds.chain((1..=n).map(|node| DesignTube::Square { node })).collect()
}

/// Every set of pairwise compatible items, in lexicographic order of index
/// lists.
fn compatible_sets<T: Copy>(items: &[T], ok: impl Fn(&T, &T) -> bool) -> Vec<Vec<T>> {
    fn grow<T: Copy>(
        items: &[T],
        ok: &dyn Fn(&T, &T) -> bool,
        from: usize,
        chosen: &mut Vec<T>,
        out: &mut Vec<Vec<T>>,
    ) {
        out.push(chosen.clone());
        for i in from..items.len() {
            if chosen.iter().all(|c| ok(c, &items[i])) {
                chosen.push(items[i]);
                grow(items, ok, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(items, &ok, 0, &mut Vec::new(), &mut out);
    out
}

/// Every design tubing on `P_n`, the empty one included.
pub fn enumerate_design_tubings(n: usize) -> Result<Vec<DesignTubing>, ModelError> {
    ModelError::too_small("design tubing enumeration", n, 1)?;
    let mut all: Vec<DesignTubing> = compatible_sets(&design_tubes(n), compatible)
        .into_iter()
        .map(|tubes| DesignTubing { n, tubes: tubes.into_iter().collect() })
        .collect();
    all.sort();
    Ok(all)
}

fn tubing_poset<T: Ord + Clone>(
    tubings: &[BTreeSet<T>],
    label: impl Fn(&BTreeSet<T>) -> String,
    dimension: usize,
) -> Result<FacePoset, ModelError> {
    let index: BTreeMap<&BTreeSet<T>, usize> = tubings.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let mut pairs = Vec::new();
    for (i, u) in tubings.iter().enumerate() {
        for t in u {
            let mut smaller = u.clone();
            smaller.remove(t);
            pairs.push((i, index[&smaller]));
        }
    }
    let labels = tubings.iter().map(label).collect();
    let ranks: Vec<usize> = tubings.iter().map(|u| dimension - u.len()).collect();
    Ok(FacePoset::with_ranks(labels, &ranks, &pairs)?)
}

/// The cubeahedron of `P_n`: design tubings ordered by reverse inclusion, of
/// rank `n` minus the number of tubes.
pub fn build_cp(n: usize) -> Result<FacePoset, ModelError> {
    let all: Vec<BTreeSet<DesignTube>> = enumerate_design_tubings(n)?.into_iter().map(|u| u.tubes).collect();
    tubing_poset(&all, |u| format!("{}", DesignTubing { n, tubes: u.clone() }), n)
}

/// Ordinary tubings of the path with `m` nodes: proper intervals, pairwise
/// nested or far apart.
pub fn enumerate_tubings(m: usize) -> Result<Vec<BTreeSet<(usize, usize)>>, ModelError> {
    ModelError::too_small("tubing enumeration", m, 1)?;
    let tubes: Vec<(usize, usize)> =
        (1..=m).flat_map(|lo| (lo..=m).map(move |hi| (lo, hi))).filter(|&t| t != (1, m)).collect();
    let far_or_nested = |a: &(usize, usize), b: &(usize, usize)| nested(*a, *b) || a.1 + 1 < b.0 || b.1 + 1 < a.0;
    let mut all: Vec<BTreeSet<(usize, usize)>> =
        compatible_sets(&tubes, far_or_nested).into_iter().map(|v| v.into_iter().collect()).collect();
    all.sort();
    Ok(all)
}

fn tubing_label(u: &BTreeSet<(usize, usize)>) -> String {
    let parts: Vec<String> = u.iter().map(|&(lo, hi)| format!("[{lo},{hi}]")).collect();
    format!("{{{}}}", parts.join(","))
}

/// Ordinary tubings of the path with `m` nodes under reverse inclusion.
pub fn build_tubings(m: usize) -> Result<FacePoset, ModelError> {
    tubing_poset(&enumerate_tubings(m)?, tubing_label, m - 1)
}

/// Reads a design tubing on `P_n` as a flat expression in `a1..a(n+1)`.
///
/// The letters sit between the nodes: node `k` lies between `a_k` and
/// `a_(k+1)`. A square at `k` starts a new block there, an empty node
/// becomes a dot, and a round tube on nodes `k..h` brackets `a_k..a_(h+1)`.
pub fn tubing_to_expression(u: &DesignTubing) -> Result<FlatExpression, ModelError> {
    let n = u.n;
    let mut spans = BTreeSet::new();
    let mut covered = BTreeSet::new();
    let mut cuts = BTreeSet::new();
    for t in &u.tubes {
        match *t {
            DesignTube::Round { lo, hi } => {
                spans.insert((lo, hi + 1));
                covered.extend(lo..=hi);
            }
            DesignTube::Square { node } => {
                cuts.insert(node);
            }
        }
    }
    fn factor(lo: usize, hi: usize, spans: &BTreeSet<(usize, usize)>) -> Factor {
        if lo == hi {
            return Factor::Atom(lo);
        }
        let mut items = Vec::new();
        let mut pos = lo;
        while pos <= hi {
            let end = spans.iter().filter(|&&(l, r)| l == pos && r <= hi && (l, r) != (lo, hi)).map(|&(_, r)| r).max();
            let r = end.unwrap_or(pos);
            items.push(factor(pos, r, spans));
            pos = r + 1;
        }
        Factor::Group(items)
    }
    let mut blocks = Vec::new();
    let mut units = Vec::new();
    let mut start = 1;
    for k in 1..=n + 1 {
        let boundary = k == n + 1 || cuts.contains(&k) || !covered.contains(&k);
        if !boundary {
            continue;
        }
        units.push(factor(start, k, &spans));
        start = k + 1;
        if k == n + 1 || cuts.contains(&k) {
            let done = core::mem::take(&mut units);
            blocks.push(if done.len() >= 2 { Block { arg: Argument::Dotted(done) } } else { Block::word(done) });
        }
    }
    Ok(FlatExpression { blocks })
}

/// The cubeahedron of `P_n` is isomorphic to the collapsed multiplihedron on
/// `n + 1` letters via [`tubing_to_expression`]. Also checks that it is
/// simple, that every maximal tubing has `n` tubes, and that removing a tube
/// is a single generating move of the expression order.
pub fn verify_cubeahedron_iso(n: usize) -> Report {
    let mut report = Report::new("design tubings to flat expressions");
    let run = |report: &mut Report| -> Result<(), ModelError> {
        let (cp, flat) = (build_cp(n)?, build_jprime(n + 1)?);
        let image =
            |label: &str| -> Option<FlatExpression> { tubing_to_expression(&DesignTubing::parse(n, label).ok()?).ok() };
        report.require(cp.is_simple(), || format!("cubeahedron of P_{n} is not simple"));
        for v in cp.elements_of_rank(0) {
            let size = DesignTubing::parse(n, cp.label(v))?.len();
            report.require(size == n, || format!("maximal tubing {} has {size} tubes", cp.label(v)));
        }
        for (x, y) in cp.cover_pairs() {
            let (a, b) = (image(cp.label(x)), image(cp.label(y)));
            let single = match (&a, &b) {
                (Some(a), Some(b)) => flat_moves(a).contains(b),
                _ => false,
            };
            report.require(single, || format!("{} -> {} is not one move", cp.label(x), cp.label(y)));
        }
        report.absorb(check_order_iso_by(&cp, &flat, |label| image(label).map(|e| format!("{e}"))));
        report.count("domain", cp.len()).count("codomain", flat.len());
        Ok(())
    };
    if let Err(e) = run(&mut report) {
        report.fail(format!("construction failed: {e}"));
    }
    report
}

/// Composing with [`flat_to_bracketing`] identifies the cubeahedron of `P_n`
/// with `K_(n+2)`, and so do ordinary tubings of the path with `n + 1` nodes
/// under node interval `[i, j]` to bracket `(a_i..a_(j+1))`.
pub fn verify_composed(n: usize) -> Report {
    let mut report = Report::new("design tubings to bracketings");
    let run = |report: &mut Report| -> Result<(), ModelError> {
        let (cp, k) = (build_cp(n)?, build_k(n + 2)?);
        let composed = check_order_iso_by(&cp, &k, |label| {
            let e = tubing_to_expression(&DesignTubing::parse(n, label).ok()?).ok()?;
            flat_to_bracketing(&e).ok().map(|b| format!("{b}"))
        });
        report.absorb(composed);
        let tubings = build_tubings(n + 1)?;
        let lookup: BTreeMap<String, String> = enumerate_tubings(n + 1)?
            .iter()
            .map(|u| {
                let b = Bracketing::new(n + 2, u.iter().map(|&(lo, hi)| (lo, hi + 1)))?;
                Ok((tubing_label(u), format!("{b}")))
            })
            .collect::<Result<_, ModelError>>()?;
        let mut ordinary = check_order_iso_by(&tubings, &k, |label| lookup.get(label).cloned());
        ordinary.check = "ordinary tubings to bracketings".into();
        report.absorb(ordinary);
        report.count("domain", cp.len()).count("codomain", k.len()).count("tubings", tubings.len());
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

    fn round(lo: usize, hi: usize) -> DesignTube {
        DesignTube::Round { lo, hi }
    }

    #[test]
    fn compatibility_rules() {
        let sq = |node| DesignTube::Square { node };
        assert!(compatible(&round(1, 2), &sq(3)));
        assert!(!compatible(&round(1, 2), &round(2, 3)));
        assert!(!compatible(&round(1, 2), &sq(2)));
        assert!(!compatible(&round(1, 1), &round(2, 2)));
        assert!(compatible(&round(1, 1), &round(3, 3)));
        assert!(compatible(&sq(1), &sq(2)));
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=3).map(|n| enumerate_design_tubings(n).unwrap().len()).collect();
        assert_eq!(counts, [3, 11, 45]);
        assert_eq!(build_cp(2).unwrap().f_vector(), [5, 5, 1]);
        assert_eq!(build_tubings(3).unwrap().f_vector(), [5, 5, 1]);
    }

    #[test]
    fn expression_images() {
        let img = |n: usize, s: &str| tubing_to_expression(&DesignTubing::parse(n, s).unwrap()).unwrap().to_string();
        assert_eq!(img(3, "{}"), "f(a1.a2.a3.a4)");
        assert_eq!(img(1, "{s1}"), "f(a1)f(a2)");
        assert_eq!(img(1, "{r1}"), "f(a1a2)");
        assert_eq!(img(3, "{r2}"), "f(a1.(a2a3).a4)");
        assert_eq!(img(3, "{r1..3}"), "f(a1a2a3a4)");
        assert_eq!(img(3, "{r1..3,r2}"), "f(a1(a2a3)a4)");
        assert_eq!(img(3, "{r1,s3}"), "f((a1a2).a3)f(a4)");
    }

    #[test]
    fn parse_round_trip_and_rejection() {
        let u = DesignTubing::parse(3, "{r2..3,s1}").unwrap();
        assert_eq!(u.to_string(), "{r2..3,s1}");
        assert!(DesignTubing::parse(3, "{r1..2,s2}").is_err());
        assert!(DesignTubing::parse(2, "{r1..3}").is_err());
    }

    #[test]
    fn small_isomorphisms() {
        for n in 1..=3 {
            let r = verify_cubeahedron_iso(n);
            assert!(r.pass, "{r}");
            let r = verify_composed(n);
            assert!(r.pass, "{r}");
        }
    }
}
