//! Finite posets and graded face posets.
//!
//! Orders are stored as one strict up-set bitset per element, so `le` is a
//! single bit probe. Every [`FacePoset`] is checked for gradedness when it is
//! built and its elements are kept sorted by `(rank, label)`, which makes
//! indices, iteration order and every derived output deterministic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

/// Errors raised while building or combining posets.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderError {
    #[error("order relation contains a cycle: {0:?}")]
    Cycle(Vec<String>),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("duplicate element {0:?}")]
    DuplicateElement(String),
    #[error("cover {lower:?} < {upper:?} goes from rank {lower_rank} to rank {upper_rank}")]
    NotGraded { lower: String, upper: String, lower_rank: usize, upper_rank: usize },
    #[error("element {label:?} has rank {found}, expected {expected}")]
    RankMismatch { label: String, expected: usize, found: usize },
    #[error("cell {0:?} appears with two different ranks")]
    LabelClash(String),
    #[error("top cells have mixed ranks {0:?}")]
    MixedTopRanks(Vec<usize>),
}

/// A finite partial order over string labels.
#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    above: Vec<FixedBitSet>,
}

/// Builds the reflexive-transitive closure of `covers` over `elements`.
///
/// The stored cover relation is the transitive reduction of the input, so it
/// equals `covers` whenever no input pair is implied by the others.
pub fn close_order(elements: &[String], covers: &[(String, String)]) -> Result<Poset, OrderError> {
    let mut index = BTreeMap::new();
    for (i, l) in elements.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(OrderError::DuplicateElement(l.clone()));
        }
    }
    let mut pairs = Vec::with_capacity(covers.len());
    for (a, b) in covers {
        let ia = *index.get(a).ok_or_else(|| OrderError::UnknownElement(a.clone()))?;
        let ib = *index.get(b).ok_or_else(|| OrderError::UnknownElement(b.clone()))?;
        pairs.push((ia, ib));
    }
    Poset::from_index_pairs(elements.to_vec(), &pairs)
}

impl Poset {
    /// Closes a generating relation given by index pairs `(lower, upper)`.
    pub(crate) fn from_index_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, OrderError> {
        let n = labels.len();
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(OrderError::DuplicateElement(l.clone()));
            }
        }
        let mut gens: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in pairs {
            if a == b {
                return Err(OrderError::Cycle(vec![labels[a].clone()]));
            }
            gens[a].push(b);
        }
        for g in gens.iter_mut() {
            g.sort_unstable();
            g.dedup();
        }
        let order = topological_order(&gens)
            .map_err(|cycle| OrderError::Cycle(cycle.into_iter().map(|i| labels[i].clone()).collect()))?;

        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &x in order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            for &y in &gens[x] {
                set.insert(y);
                set.union_with(&above[y]);
            }
            above[x] = set;
        }

        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for x in 0..n {
            for &y in &gens[x] {
                let implied = gens[x].iter().any(|&z| z != y && above[z].contains(y));
                if !implied {
                    up[x].push(y);
                    down[y].push(x);
                }
            }
        }
        for d in down.iter_mut() {
            d.sort_unstable();
        }
        Ok(Self { labels, index, up, down, above })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// `x <= y`.
    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.above[x].contains(y)
    }

    /// `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// Elements covering `x`.
    pub fn covers_up(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    /// Elements covered by `x`.
    pub fn covers_down(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// All cover pairs `(lower, upper)` in index order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, ups) in self.up.iter().enumerate() {
            out.extend(ups.iter().map(|&y| (x, y)));
        }
        out
    }

    /// Strict up-set of `x`.
    pub fn strictly_above(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.above[x].ones()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].is_empty()).collect()
    }

    /// Reflexivity, antisymmetry and transitivity of the stored relation,
    /// checked pair by pair.
    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        for x in 0..n {
            if self.above[x].contains(x) {
                return false;
            }
            for y in self.above[x].ones() {
                if self.above[y].contains(x) {
                    return false;
                }
                if !self.above[y].is_subset(&self.above[x]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Kahn's algorithm; on failure returns one directed cycle.
fn topological_order(gens: &[Vec<usize>]) -> Result<Vec<usize>, Vec<usize>> {
    let n = gens.len();
    let mut indeg = vec![0usize; n];
    for g in gens {
        for &y in g {
            indeg[y] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).rev().filter(|&x| indeg[x] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in gens[x].iter().rev() {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                stack.push(y);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // Every leftover node keeps a leftover predecessor; walk backwards until a repeat.
    let leftover: Vec<bool> = (0..n).map(|x| indeg[x] > 0).collect();
    let mut pred = vec![usize::MAX; n];
    for x in (0..n).filter(|&x| leftover[x]) {
        for &y in &gens[x] {
            if leftover[y] {
                pred[y] = x;
            }
        }
    }
    let mut cur = (0..n).find(|&x| leftover[x]).expect("leftover node");
    let mut seen = BTreeMap::new();
    let mut walk = Vec::new();
    while !seen.contains_key(&cur) {
        seen.insert(cur, walk.len());
        walk.push(cur);
        cur = pred[cur];
    }
    let mut cycle: Vec<usize> = walk[seen[&cur]..].to_vec();
    cycle.reverse();
    Err(cycle)
}

/// A graded poset of faces: every cover raises the rank by exactly one and
/// minimal elements have rank zero.
#[derive(Debug, Clone)]
pub struct FacePoset {
    poset: Poset,
    rank: Vec<usize>,
}

impl FacePoset {
    /// Closes the relation generated by `pairs` (each `(lower, upper)`),
    /// assigns ranks by chain height and rejects non-graded results.
    pub fn from_generators(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, OrderError> {
        let poset = Poset::from_index_pairs(labels, pairs)?;
        let n = poset.len();
        let mut rank = vec![0usize; n];
        // x < y implies |up(x)| > |up(y)|, so larger up-sets come first.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| core::cmp::Reverse(poset.above[x].count_ones(..)));
        for &x in &order {
            for &y in &poset.up[x] {
                rank[y] = rank[y].max(rank[x] + 1);
            }
        }
        for (x, y) in poset.cover_pairs() {
            if rank[y] != rank[x] + 1 {
                return Err(OrderError::NotGraded {
                    lower: poset.labels[x].clone(),
                    upper: poset.labels[y].clone(),
                    lower_rank: rank[x],
                    upper_rank: rank[y],
                });
            }
        }
        Ok(Self::canonicalize(poset, rank))
    }

    /// Like [`FacePoset::from_generators`], then checks the computed ranks
    /// against `expected`.
    pub fn with_ranks(labels: Vec<String>, expected: &[usize], pairs: &[(usize, usize)]) -> Result<Self, OrderError> {
        let by_label: BTreeMap<String, usize> = labels.iter().cloned().zip(expected.iter().copied()).collect();
        let fp = Self::from_generators(labels, pairs)?;
        for i in 0..fp.len() {
            let want = by_label[fp.label(i)];
            if fp.rank(i) != want {
                return Err(OrderError::RankMismatch { label: fp.label(i).into(), expected: want, found: fp.rank(i) });
            }
        }
        Ok(fp)
    }

    /// Builds from label/rank records and label cover pairs, as read from an
    /// external description.
    pub fn from_labelled(elements: &[(String, usize)], covers: &[(String, String)]) -> Result<Self, OrderError> {
        let labels: Vec<String> = elements.iter().map(|(l, _)| l.clone()).collect();
        let ranks: Vec<usize> = elements.iter().map(|(_, r)| *r).collect();
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(OrderError::DuplicateElement(l.clone()));
            }
        }
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            let ia = *index.get(a.as_str()).ok_or_else(|| OrderError::UnknownElement(a.clone()))?;
            let ib = *index.get(b.as_str()).ok_or_else(|| OrderError::UnknownElement(b.clone()))?;
            pairs.push((ia, ib));
        }
        Self::with_ranks(labels, &ranks, &pairs)
    }

    fn canonicalize(poset: Poset, rank: Vec<usize>) -> Self {
        let n = poset.len();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by(|&a, &b| (rank[a], &poset.labels[a]).cmp(&(rank[b], &poset.labels[b])));
        let mut new_of = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            new_of[old] = new;
        }
        let labels: Vec<String> = perm.iter().map(|&o| poset.labels[o].clone()).collect();
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let new_rank = perm.iter().map(|&o| rank[o]).collect();
        let remap = |v: &Vec<usize>| {
            let mut out: Vec<usize> = v.iter().map(|&o| new_of[o]).collect();
            out.sort_unstable();
            out
        };
        let up = perm.iter().map(|&o| remap(&poset.up[o])).collect();
        let down = perm.iter().map(|&o| remap(&poset.down[o])).collect();
        let above = perm
            .iter()
            .map(|&o| {
                let mut set = FixedBitSet::with_capacity(n);
                for y in poset.above[o].ones() {
                    set.insert(new_of[y]);
                }
                set
            })
            .collect();
        Self { poset: Poset { labels, index, up, down, above }, rank: new_rank }
    }

    pub fn empty() -> Self {
        Self::canonicalize(
            Poset { labels: Vec::new(), index: BTreeMap::new(), up: Vec::new(), down: Vec::new(), above: Vec::new() },
            Vec::new(),
        )
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.poset.index_of(label)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.poset.le(x, y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.poset.lt(x, y)
    }

    pub fn covers_up(&self, x: usize) -> &[usize] {
        self.poset.covers_up(x)
    }

    pub fn covers_down(&self, x: usize) -> &[usize] {
        self.poset.covers_down(x)
    }

    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        self.poset.cover_pairs()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        self.poset.maximal_elements()
    }

    /// Highest rank present, `None` for the empty poset.
    pub fn dimension(&self) -> Option<usize> {
        self.rank.iter().copied().max()
    }

    /// The greatest element, if there is one.
    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [t] if (0..self.len()).all(|x| self.le(x, *t)) => Some(*t),
            _ => None,
        }
    }

    /// Number of elements of each rank, starting at rank 0.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; self.dimension().map_or(0, |d| d + 1)];
        for &r in &self.rank {
            f[r] += 1;
        }
        f
    }

    /// Elements of rank `r`, in index order.
    pub fn elements_of_rank(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&x| self.rank[x] == r)
    }

    /// Alternating sum of the f-vector with the top rank left out. For the face
    /// poset of a `d`-polytope this is the Euler characteristic of the boundary
    /// sphere, `1 + (-1)^(d-1)`.
    pub fn boundary_euler_characteristic(&self) -> i64 {
        let f = self.f_vector();
        let d = f.len().saturating_sub(1);
        f.iter().take(d).enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    /// True iff every vertex lies below exactly `d` elements of rank `d - 1`,
    /// where `d` is the rank of the top element. A vertex counts as lying
    /// below itself, so an interval is simple.
    pub fn is_simple(&self) -> bool {
        let Some(d) = self.dimension() else { return false };
        if d == 0 {
            return true;
        }
        self.elements_of_rank(0).all(|v| {
            let own = usize::from(d == 1);
            own + self.poset.strictly_above(v).filter(|&y| self.rank[y] == d - 1).count() == d
        })
    }

    /// The smallest down-closed set containing `seeds`.
    pub fn downward_closure(&self, seeds: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<usize> = seeds.into_iter().collect();
        while let Some(x) = stack.pop() {
            if out.insert(x) {
                stack.extend(self.covers_down(x).iter().copied());
            }
        }
        out
    }

    /// The induced subposet on the downward closure of `seeds`. Covers of a
    /// down-closed subset are exactly the restricted covers.
    pub fn subcomplex(&self, seeds: impl IntoIterator<Item = usize>) -> FacePoset {
        let keep = self.downward_closure(seeds);
        let new_of: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let labels: Vec<String> = keep.iter().map(|&x| self.label(x).into()).collect();
        let mut pairs = Vec::new();
        for &x in &keep {
            for y in self.covers_down(x) {
                pairs.push((new_of[y], new_of[&x]));
            }
        }
        // Restricted covers of a graded poset stay graded with the same ranks.
        Self::from_generators(labels, &pairs).expect("down-closed subposet of a graded poset")
    }

    /// Elements with ranks and covers by label, for export.
    pub fn describe(&self) -> Description {
        let elems = (0..self.len()).map(|i| (self.label(i).into(), self.rank(i))).collect();
        let covers =
            self.cover_pairs().into_iter().map(|(a, b)| (self.label(a).into(), self.label(b).into())).collect();
        (elems, covers)
    }
}

/// `(label, rank)` per element and `(lower, upper)` per cover.
pub type Description = (Vec<(String, usize)>, Vec<(String, String)>);

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn s(x: &str) -> String {
        x.to_string()
    }

    #[test]
    fn singleton_closure() {
        let p = close_order(&[s("x")], &[]).unwrap();
        assert!(p.le(0, 0));
        assert!(!p.lt(0, 0));
        assert!(p.is_partial_order());
    }

    #[test]
    fn transitivity_is_inferred() {
        let p = close_order(&[s("a"), s("b"), s("c")], &[(s("a"), s("b")), (s("b"), s("c"))]).unwrap();
        assert!(p.le(0, 2));
        assert!(!p.le(2, 0));
        assert_eq!(p.cover_pairs(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn redundant_pair_is_not_a_cover() {
        let p =
            close_order(&[s("a"), s("b"), s("c")], &[(s("a"), s("b")), (s("b"), s("c")), (s("a"), s("c"))]).unwrap();
        assert_eq!(p.cover_pairs(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn cycle_is_reported() {
        let err = close_order(&[s("a"), s("b"), s("c")], &[(s("a"), s("b")), (s("b"), s("c")), (s("c"), s("a"))])
            .unwrap_err();
        match err {
            OrderError::Cycle(c) => {
                assert_eq!(c.len(), 3);
                let set: BTreeSet<_> = c.into_iter().collect();
                assert_eq!(set, [s("a"), s("b"), s("c")].into_iter().collect());
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(close_order(&[s("a")], &[(s("a"), s("a"))]), Err(OrderError::Cycle(_))));
    }

    #[test]
    fn unknown_and_duplicate_elements() {
        assert!(matches!(close_order(&[s("a")], &[(s("a"), s("z"))]), Err(OrderError::UnknownElement(_))));
        assert!(matches!(close_order(&[s("a"), s("a")], &[]), Err(OrderError::DuplicateElement(_))));
    }

    #[test]
    fn non_graded_poset_is_rejected() {
        // Chains 0<1<2<3 and 0<4<3 have different lengths.
        let labels = vec![s("0"), s("1"), s("2"), s("3"), s("4")];
        let err = FacePoset::from_generators(labels, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)]).unwrap_err();
        assert!(matches!(err, OrderError::NotGraded { .. }));
    }

    #[test]
    fn square_pyramid_is_not_simple() {
        // 5 vertices, 8 edges, 5 faces (4 triangles + square), top.
        let mut labels: Vec<String> = Vec::new();
        let verts = ["b0", "b1", "b2", "b3", "apex"];
        labels.extend(verts.iter().map(|v| s(v)));
        let edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)];
        for (a, b) in edges {
            labels.push(alloc::format!("e{a}{b}"));
        }
        let faces: [&[usize]; 5] = [&[0, 1, 2, 3], &[0, 4, 5], &[1, 5, 6], &[2, 6, 7], &[3, 7, 4]];
        for i in 0..faces.len() {
            labels.push(alloc::format!("f{i}"));
        }
        labels.push(s("top"));
        let mut pairs = Vec::new();
        for (e, (a, b)) in edges.iter().enumerate() {
            pairs.push((*a, 5 + e));
            pairs.push((*b, 5 + e));
        }
        for (f, es) in faces.iter().enumerate() {
            for e in es.iter() {
                pairs.push((5 + e, 13 + f));
            }
            pairs.push((13 + f, 18));
        }
        let p = FacePoset::from_generators(labels, &pairs).unwrap();
        assert_eq!(p.f_vector(), vec![5, 8, 5, 1]);
        assert_eq!(p.boundary_euler_characteristic(), 2);
        assert!(!p.is_simple());
    }

    #[test]
    fn interval_is_simple() {
        let p = FacePoset::from_generators(vec![s("l"), s("r"), s("e")], &[(0, 2), (1, 2)]).unwrap();
        assert!(p.is_simple());
        assert_eq!(p.f_vector(), vec![2, 1]);
        assert_eq!(p.top(), p.index_of("e"));
        assert_eq!(p.boundary_euler_characteristic(), 2);
    }

    #[test]
    fn elements_sorted_by_rank_then_label() {
        let p = FacePoset::from_generators(vec![s("top"), s("b"), s("a")], &[(1, 0), (2, 0)]).unwrap();
        assert_eq!(p.labels(), &[s("a"), s("b"), s("top")]);
        assert_eq!(p.ranks(), &[0, 0, 1]);
    }

    #[test]
    fn given_ranks_are_checked() {
        let err = FacePoset::with_ranks(vec![s("a"), s("b")], &[0, 2], &[(0, 1)]).unwrap_err();
        assert!(matches!(err, OrderError::RankMismatch { .. }));
    }
}
