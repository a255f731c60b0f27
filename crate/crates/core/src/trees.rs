//! Plane rooted trees, their bracketings, Loday weights and leaf deletion.
//!
//! Leaves are numbered `0..n` from left to right. Internal vertex `i`
//! (`1 <= i < n`) of a binary tree is the one sitting between leaves `i - 1`
//! and `i`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::associahedron::Bracketing;
use crate::error::ModelError;

/// A plane rooted tree whose internal nodes have at least two children.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        Self { children: Vec::new() }
    }

    pub fn node(children: Vec<PlaneTree>) -> Result<Self, ModelError> {
        if children.len() < 2 {
            return Err(ModelError::invalid("plane tree", "internal node with fewer than two children"));
        }
        Ok(Self { children })
    }

    /// One internal node over `n` leaves.
    pub fn corolla(n: usize) -> Result<Self, ModelError> {
        ModelError::too_small("corolla", n, 2)?;
        Ok(Self { children: vec![Self::leaf(); n] })
    }

    /// `((..(* *) *) ..) *)`: every internal node is the first child of its parent.
    pub fn left_comb(n: usize) -> Result<Self, ModelError> {
        ModelError::too_small("comb", n, 2)?;
        Ok((2..n)
            .fold(Self { children: vec![Self::leaf(), Self::leaf()] }, |t, _| Self { children: vec![t, Self::leaf()] }))
    }

    /// `(* (* .. (* *)..))`: every internal node is the last child of its parent.
    pub fn right_comb(n: usize) -> Result<Self, ModelError> {
        ModelError::too_small("comb", n, 2)?;
        Ok((2..n)
            .fold(Self { children: vec![Self::leaf(), Self::leaf()] }, |t, _| Self { children: vec![Self::leaf(), t] }))
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn leaf_count(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(Self::leaf_count).sum()
        }
    }

    pub fn internal_count(&self) -> usize {
        if self.is_leaf() {
            0
        } else {
            1 + self.children.iter().map(Self::internal_count).sum::<usize>()
        }
    }

    pub fn is_binary(&self) -> bool {
        self.is_leaf() || (self.children.len() == 2 && self.children.iter().all(Self::is_binary))
    }

    fn write_sexpr(&self, out: &mut String) {
        if self.is_leaf() {
            out.push('*');
            return;
        }
        out.push('(');
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            c.write_sexpr(out);
        }
        out.push(')');
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_sexpr(&mut s);
        f.write_str(&s)
    }
}

impl FromStr for PlaneTree {
    type Err = ModelError;

    /// Parses `*` for a leaf and `(c1 c2 ...)` for a node; spaces are optional.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ModelError::parse("plane tree", input, reason);
        let mut stack: Vec<Vec<PlaneTree>> = vec![Vec::new()];
        for ch in input.chars() {
            match ch {
                '*' => stack.last_mut().expect("stack is never empty").push(Self::leaf()),
                '(' => stack.push(Vec::new()),
                ')' => {
                    if stack.len() < 2 {
                        return Err(err("unbalanced ')'"));
                    }
                    let children = stack.pop().expect("checked");
                    let node = Self::node(children).map_err(|_| err("node with fewer than two children"))?;
                    stack.last_mut().expect("checked").push(node);
                }
                c if c.is_whitespace() => {}
                c => return Err(err(&alloc::format!("unexpected character {c:?}"))),
            }
        }
        match stack.as_mut_slice() {
            [top] if top.len() == 1 => Ok(top.pop().expect("one tree")),
            [_] => Err(err("expected exactly one tree")),
            _ => Err(err("unbalanced '('")),
        }
    }
}

/// Rooted plane binary trees with `n` leaves; there are Catalan(n - 1).
pub fn enumerate_binary_trees(n: usize) -> Result<Vec<PlaneTree>, ModelError> {
    ModelError::too_small("binary tree enumeration", n, 2)?;
    let mut by_size: Vec<Vec<PlaneTree>> = vec![Vec::new(), vec![PlaneTree::leaf()]];
    for m in 2..=n {
        let mut trees = Vec::new();
        for left in 1..m {
            for l in &by_size[left] {
                for r in &by_size[m - left] {
                    trees.push(PlaneTree { children: vec![l.clone(), r.clone()] });
                }
            }
        }
        by_size.push(trees);
    }
    Ok(by_size.swap_remove(n))
}

/// All plane trees with `n` leaves and internal arities at least two.
pub fn enumerate_plane_trees(n: usize) -> Result<Vec<PlaneTree>, ModelError> {
    ModelError::too_small("plane tree enumeration", n, 2)?;
    // forests[m]: sequences of one or more trees with m leaves in total.
    let mut trees: Vec<Vec<PlaneTree>> = vec![Vec::new(), vec![PlaneTree::leaf()]];
    let mut forests: Vec<Vec<Vec<PlaneTree>>> = vec![Vec::new(), vec![vec![PlaneTree::leaf()]]];
    for m in 2..=n {
        let mut multi = Vec::new();
        for first in 1..m {
            for t in &trees[first] {
                for rest in &forests[m - first] {
                    let mut f = Vec::with_capacity(rest.len() + 1);
                    f.push(t.clone());
                    f.extend(rest.iter().cloned());
                    multi.push(f);
                }
            }
        }
        let ts: Vec<PlaneTree> = multi.iter().map(|f| PlaneTree { children: f.clone() }).collect();
        multi.extend(ts.iter().map(|t| vec![t.clone()]));
        trees.push(ts);
        forests.push(multi);
    }
    Ok(trees.swap_remove(n))
}

/// Every internal non-root node spanning leaves `k..=l` becomes the bracket
/// `[k + 1, l + 1]` on letters `1..=n`.
pub fn tree_to_bracketing(t: &PlaneTree) -> Result<Bracketing, ModelError> {
    fn walk(t: &PlaneTree, start: usize, root: bool, out: &mut Vec<(usize, usize)>) -> usize {
        if t.is_leaf() {
            return 1;
        }
        let mut width = 0;
        for c in &t.children {
            width += walk(c, start + width, false, out);
        }
        if !root {
            out.push((start + 1, start + width));
        }
        width
    }
    let n = t.leaf_count();
    ModelError::too_small("tree to bracketing", n, 2)?;
    let mut brackets = Vec::new();
    walk(t, 0, true, &mut brackets);
    Bracketing::new(n, brackets)
}

/// Inverse of [`tree_to_bracketing`].
pub fn bracketing_to_tree(b: &Bracketing) -> Result<PlaneTree, ModelError> {
    fn build(lo: usize, hi: usize, b: &Bracketing) -> PlaneTree {
        if lo == hi {
            return PlaneTree::leaf();
        }
        let mut children = Vec::new();
        let mut pos = lo;
        while pos <= hi {
            let end = b
                .brackets()
                .iter()
                .filter(|&&(l, r)| l == pos && r <= hi && (l, r) != (lo, hi))
                .map(|&(_, r)| r)
                .max()
                .unwrap_or(pos);
            children.push(build(pos, end, b));
            pos = end + 1;
        }
        PlaneTree { children }
    }
    ModelError::too_small("bracketing to tree", b.letters(), 2)?;
    Ok(build(1, b.letters(), b))
}

/// Loday coordinates of a binary tree: entry `i - 1` is the product of the
/// leaf counts of the left and right subtrees of internal vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LodayPoint {
    pub coords: Vec<u64>,
}

impl LodayPoint {
    pub fn sum(&self) -> u64 {
        self.coords.iter().sum()
    }
}

impl fmt::Display for LodayPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

pub fn loday_point(t: &PlaneTree) -> Result<LodayPoint, ModelError> {
    fn walk(t: &PlaneTree, start: usize, coords: &mut [u64]) -> usize {
        if t.is_leaf() {
            return 1;
        }
        let left = walk(&t.children[0], start, coords);
        let right = walk(&t.children[1], start + left, coords);
        coords[start + left - 1] = (left * right) as u64;
        left + right
    }
    if !t.is_binary() {
        return Err(ModelError::invalid("binary tree", alloc::format!("{t} has a node of arity other than two")));
    }
    let n = t.leaf_count();
    ModelError::too_small("loday point", n, 2)?;
    let mut coords = vec![0; n - 1];
    walk(t, 0, &mut coords);
    Ok(LodayPoint { coords })
}

/// Removes leaf `j` (1-indexed) and smooths away any node left with a single
/// child, the root included.
pub fn delete_leaf(t: &PlaneTree, j: usize) -> Result<PlaneTree, ModelError> {
    let n = t.leaf_count();
    ModelError::too_small("leaf deletion", n, 3)?;
    if j == 0 || j > n {
        return Err(ModelError::OutOfRange { index: j, max: n });
    }
    Ok(remove_leaf(t, j - 1))
}

/// Leaf removal without the size check; may return a single leaf.
pub(crate) fn remove_leaf(t: &PlaneTree, index: usize) -> PlaneTree {
    fn walk(t: &PlaneTree, index: &mut usize) -> Option<PlaneTree> {
        if t.is_leaf() {
            let hit = *index == 0;
            *index = index.wrapping_sub(1);
            return if hit { None } else { Some(t.clone()) };
        }
        let mut kept: Vec<PlaneTree> = t.children.iter().filter_map(|c| walk(c, index)).collect();
        match kept.len() {
            0 => None,
            1 => kept.pop(),
            _ => Some(PlaneTree { children: kept }),
        }
    }
    let mut i = index;
    walk(t, &mut i).unwrap_or_else(PlaneTree::leaf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn tree(s: &str) -> PlaneTree {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["*", "(* *)", "((* *) * (* * *))"] {
            assert_eq!(tree(s).to_string(), s);
        }
        assert_eq!(tree("((**)*)").to_string(), "((* *) *)");
        assert!("(*)".parse::<PlaneTree>().is_err());
        assert!("(* *".parse::<PlaneTree>().is_err());
        assert!("* *".parse::<PlaneTree>().is_err());
        assert!("(* x)".parse::<PlaneTree>().is_err());
    }

    #[test]
    fn small_binary_tree_counts() {
        let counts: Vec<usize> = (2..=5).map(|n| enumerate_binary_trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 5, 14]);
        assert!(enumerate_binary_trees(1).is_err());
    }

    #[test]
    fn small_plane_tree_counts() {
        let counts: Vec<usize> = (2..=5).map(|n| enumerate_plane_trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 3, 11, 45]);
    }

    #[test]
    fn bracketing_of_combs_and_corolla() {
        let left = tree_to_bracketing(&PlaneTree::left_comb(4).unwrap()).unwrap();
        assert_eq!(left.to_string(), "((a1a2)a3)a4");
        let right = tree_to_bracketing(&PlaneTree::right_comb(4).unwrap()).unwrap();
        assert_eq!(right.to_string(), "a1(a2(a3a4))");
        assert!(tree_to_bracketing(&PlaneTree::corolla(5).unwrap()).unwrap().is_empty());
        let balanced = tree_to_bracketing(&tree("((* *) (* *))")).unwrap();
        assert_eq!(balanced.brackets().iter().copied().collect::<Vec<_>>(), [(1, 2), (3, 4)]);
    }

    #[test]
    fn loday_weights() {
        let point = |s: &str| loday_point(&tree(s)).unwrap().coords;
        assert_eq!(point("(* *)"), [1]);
        assert_eq!(point("(* (* *))"), [2, 1]);
        assert_eq!(point("((* *) *)"), [1, 2]);
        assert_eq!(point("(((* *) *) *)"), [1, 2, 3]);
        assert_eq!(point("((* *) (* *))"), [1, 4, 1]);
        assert!(loday_point(&tree("(* * *)")).is_err());
    }

    #[test]
    fn leaf_deletion() {
        let t = PlaneTree::left_comb(3).unwrap();
        assert_eq!(delete_leaf(&t, 2).unwrap().to_string(), "(* *)");
        assert_eq!(delete_leaf(&PlaneTree::corolla(4).unwrap(), 1).unwrap(), PlaneTree::corolla(3).unwrap());
        assert_eq!(delete_leaf(&tree("((* *) (* *))"), 4).unwrap().to_string(), "((* *) *)");
        assert!(matches!(delete_leaf(&t, 4), Err(ModelError::OutOfRange { .. })));
        assert!(delete_leaf(&tree("(* *)"), 1).is_err());
    }
}
