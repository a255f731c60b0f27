//! Painted trees and their refinement order.
//!
//! The root edge is painted and leaf edges are not. Internal nodes come in
//! three kinds: `U` (unpainted in and out), `P` (painted in and out) and `T`
//! (painted in, unpainted out), where paint stops.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::ModelError;
use crate::poset::FacePoset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeKind {
    U,
    P,
    T,
}

impl NodeKind {
    fn painted_above(self) -> bool {
        self == NodeKind::P
    }

    fn painted_below(self) -> bool {
        self != NodeKind::U
    }

    fn min_arity(self) -> usize {
        if self == NodeKind::T {
            1
        } else {
            2
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PaintedTree {
    Leaf,
    Node { kind: NodeKind, children: Vec<PaintedTree> },
}

impl PaintedTree {
    pub fn node(kind: NodeKind, children: Vec<PaintedTree>) -> Self {
        PaintedTree::Node { kind, children }
    }

    /// A single `T` node over `n` leaves.
    pub fn corolla(n: usize) -> Self {
        Self::node(NodeKind::T, vec![PaintedTree::Leaf; n])
    }

    pub fn kind(&self) -> Option<NodeKind> {
        match self {
            PaintedTree::Leaf => None,
            PaintedTree::Node { kind, .. } => Some(*kind),
        }
    }

    pub fn children(&self) -> &[PaintedTree] {
        match self {
            PaintedTree::Leaf => &[],
            PaintedTree::Node { children, .. } => children,
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            PaintedTree::Leaf => 1,
            PaintedTree::Node { children, .. } => children.iter().map(Self::leaf_count).sum(),
        }
    }

    /// Checks the node rules below a painted or unpainted edge.
    fn check(&self, painted: bool) -> Result<(), String> {
        match self {
            PaintedTree::Leaf if painted => Err("leaf edges are unpainted".into()),
            PaintedTree::Leaf => Ok(()),
            PaintedTree::Node { kind, children } => {
                if kind.painted_below() != painted {
                    return Err(format!("{kind:?} node below an edge of the wrong paint"));
                }
                if children.len() < kind.min_arity() {
                    return Err(format!("{kind:?} node with {} children", children.len()));
                }
                children.iter().try_for_each(|c| c.check(kind.painted_above()))
            }
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        self.check(true).map_err(|reason| ModelError::invalid("painted tree", format!("{self}: {reason}")))
    }

    /// `sum (arity - 2)` over `U`, `P` plus `sum (arity - 1)` over `T`.
    pub fn dimension(&self) -> usize {
        match self {
            PaintedTree::Leaf => 0,
            PaintedTree::Node { kind, children } => {
                children.len() - kind.min_arity() + children.iter().map(Self::dimension).sum::<usize>()
            }
        }
    }

    /// Number of internal non-root nodes, i.e. collapsible edges.
    pub fn internal_edges(&self) -> usize {
        fn count(t: &PaintedTree) -> usize {
            t.children().iter().filter(|c| c.kind().is_some()).map(|c| 1 + count(c)).sum()
        }
        count(self)
    }
}

impl fmt::Display for PaintedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PaintedTree::Leaf => f.write_str("*"),
            PaintedTree::Node { kind, children } => {
                f.write_str(match kind {
                    NodeKind::U => "(u",
                    NodeKind::P => "(p",
                    NodeKind::T => "(t",
                })?;
                for c in children {
                    write!(f, " {c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for PaintedTree {
    type Err = ModelError;

    /// Parses `*`, `(u ..)`, `(p ..)` and `(t ..)` and checks the node rules.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ModelError::parse("painted tree", input, reason);
        let mut stack: Vec<(Option<NodeKind>, Vec<PaintedTree>)> = vec![(None, Vec::new())];
        let mut chars = input.chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                '*' => stack.last_mut().expect("non-empty").1.push(PaintedTree::Leaf),
                '(' => {
                    while chars.next_if(|c| c.is_whitespace()).is_some() {}
                    let kind = match chars.next() {
                        Some('u') => NodeKind::U,
                        Some('p') => NodeKind::P,
                        Some('t') => NodeKind::T,
                        _ => return Err(err("expected node kind u, p or t after '('")),
                    };
                    stack.push((Some(kind), Vec::new()));
                }
                ')' => {
                    let (Some(kind), children) = stack.pop().expect("non-empty") else {
                        return Err(err("unbalanced ')'"));
                    };
                    stack.last_mut().ok_or_else(|| err("unbalanced ')'"))?.1.push(Self::node(kind, children));
                }
                c if c.is_whitespace() => {}
                c => return Err(err(&format!("unexpected character {c:?}"))),
            }
        }
        let [(None, mut top)] = <[_; 1]>::try_from(stack).map_err(|_| err("unbalanced '('"))? else {
            return Err(err("unbalanced '('"));
        };
        if top.len() != 1 {
            return Err(err("expected exactly one tree"));
        }
        let t = top.pop().expect("one tree");
        t.validate()?;
        Ok(t)
    }
}

/// Sequences of at least `min_parts` trees from `table`, sizes summing to `n`.
fn forests(table: &[Vec<PaintedTree>], n: usize, min_parts: usize) -> Vec<Vec<PaintedTree>> {
    let mut out = Vec::new();
    for first in 1..=n {
        for t in table.get(first).into_iter().flatten() {
            if first == n {
                if min_parts <= 1 {
                    out.push(vec![t.clone()]);
                }
                continue;
            }
            for rest in forests(table, n - first, min_parts.saturating_sub(1)) {
                let mut f = vec![t.clone()];
                f.extend(rest);
                out.push(f);
            }
        }
    }
    out
}

/// Every painted tree with `n` leaves.
pub fn enumerate_painted_trees(n: usize) -> Result<Vec<PaintedTree>, ModelError> {
    ModelError::too_small("painted tree enumeration", n, 1)?;
    let mut unpainted: Vec<Vec<PaintedTree>> = vec![Vec::new(), vec![PaintedTree::Leaf]];
    for m in 2..=n {
        let ts = forests(&unpainted, m, 2).into_iter().map(|f| PaintedTree::node(NodeKind::U, f)).collect();
        unpainted.push(ts);
    }
    let mut painted: Vec<Vec<PaintedTree>> = vec![Vec::new()];
    for m in 1..=n {
        let mut ts: Vec<PaintedTree> =
            forests(&unpainted, m, 1).into_iter().map(|f| PaintedTree::node(NodeKind::T, f)).collect();
        // Smaller painted trees only, so `painted[m]` is not read before it exists.
        ts.extend(forests(&painted, m, 2).into_iter().map(|f| PaintedTree::node(NodeKind::P, f)));
        painted.push(ts);
    }
    Ok(painted.swap_remove(n))
}

/// Contracts the internal edges whose lower node has a preorder position
/// (among internal non-root nodes) in `edges`. Each merged node takes the
/// kind its edges allow: unpainted input gives `U`; painted input gives `P`
/// over painted outputs and `T` over unpainted ones. `None` when some merged
/// node has mixed outputs.
pub fn collapse_edges(t: &PaintedTree, edges: &BTreeSet<usize>) -> Option<PaintedTree> {
    // Returns the rebuilt children of `t` with collapsed subtrees spliced in.
    fn rebuild(t: &PaintedTree, edges: &BTreeSet<usize>, next: &mut usize) -> Option<Vec<PaintedTree>> {
        let mut out = Vec::new();
        for c in t.children() {
            match c {
                PaintedTree::Leaf => out.push(PaintedTree::Leaf),
                PaintedTree::Node { kind, .. } => {
                    let id = *next;
                    *next += 1;
                    let grand = rebuild(c, edges, next)?;
                    if edges.contains(&id) {
                        out.extend(grand);
                    } else {
                        out.push(PaintedTree::node(settle(kind.painted_below(), &grand)?, grand));
                    }
                }
            }
        }
        Some(out)
    }
    fn settle(painted_below: bool, children: &[PaintedTree]) -> Option<NodeKind> {
        if !painted_below {
            return Some(NodeKind::U);
        }
        let painted: Vec<bool> = children.iter().map(|c| c.kind().is_some_and(NodeKind::painted_below)).collect();
        if painted.iter().all(|&p| p) {
            Some(NodeKind::P)
        } else if painted.iter().all(|&p| !p) {
            Some(NodeKind::T)
        } else {
            None
        }
    }
    let kind = t.kind()?;
    let mut next = 0;
    let children = rebuild(t, edges, &mut next)?;
    let out = PaintedTree::node(settle(kind.painted_below(), &children)?, children);
    out.validate().ok()?;
    Some(out)
}

/// Painted trees ordered by refinement: `s <= t` when `t` is obtained from
/// `s` by collapsing some internal edges. Rank is [`PaintedTree::dimension`].
pub fn build_jtree(n: usize) -> Result<FacePoset, ModelError> {
    let trees = enumerate_painted_trees(n)?;
    let index: BTreeMap<&PaintedTree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut pairs = Vec::new();
    for (i, t) in trees.iter().enumerate() {
        let m = t.internal_edges();
        for mask in 1u64..(1 << m) {
            let edges: BTreeSet<usize> = (0..m).filter(|b| mask >> b & 1 == 1).collect();
            if let Some(c) = collapse_edges(t, &edges) {
                let j =
                    *index.get(&c).ok_or_else(|| ModelError::invalid("collapse", format!("{c} is not enumerated")))?;
                pairs.push((i, j));
            }
        }
    }
    let labels = trees.iter().map(|t| format!("{t}")).collect();
    let ranks: Vec<usize> = trees.iter().map(PaintedTree::dimension).collect();
    Ok(FacePoset::with_ranks(labels, &ranks, &pairs)?)
}
