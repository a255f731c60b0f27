//! Order-isomorphism checking and search between face posets.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::poset::FacePoset;
use crate::report::Report;

/// Checks that `map` is a rank-preserving bijection `p -> q` with
/// `x <= y` iff `map(x) <= map(y)`. Failures carry a witness.
pub fn check_order_iso(p: &FacePoset, q: &FacePoset, map: &BTreeMap<String, String>) -> Report {
    check_order_iso_by(p, q, |label| map.get(label).cloned())
}

/// As [`check_order_iso`], with the mapping given as a function on labels.
pub fn check_order_iso_by<F>(p: &FacePoset, q: &FacePoset, mut map: F) -> Report
where
    F: FnMut(&str) -> Option<String>,
{
    let mut report = Report::new("order isomorphism");
    report.count("domain", p.len()).count("codomain", q.len());
    let mut image = Vec::with_capacity(p.len());
    let mut used = BTreeMap::new();
    for x in 0..p.len() {
        let Some(target) = map(p.label(x)) else {
            report.fail(format!("{} has no image", p.label(x)));
            return report;
        };
        let Some(y) = q.index_of(&target) else {
            report.fail(format!("{} maps to {target}, which is not an element", p.label(x)));
            return report;
        };
        if let Some(prev) = used.insert(y, x) {
            report.fail(format!("{} and {} both map to {target}", p.label(prev), p.label(x)));
            return report;
        }
        if p.rank(x) != q.rank(y) {
            report.fail(format!("{} (rank {}) maps to {target} (rank {})", p.label(x), p.rank(x), q.rank(y)));
            return report;
        }
        image.push(y);
    }
    if p.len() != q.len() {
        let missing = (0..q.len()).find(|y| !used.contains_key(y)).map(|y| q.label(y)).unwrap_or("?");
        report.fail(format!("not surjective: {missing} has no preimage"));
        return report;
    }
    for x in 0..p.len() {
        for y in 0..p.len() {
            if p.le(x, y) != q.le(image[x], image[y]) {
                let (a, b) = (p.label(x), p.label(y));
                report.fail(if p.le(x, y) {
                    format!("{a} <= {b} but images are unrelated")
                } else {
                    format!("{a} !<= {b} but images satisfy <=")
                });
                return report;
            }
        }
    }
    report
}

/// Searches for an order isomorphism `p -> q` extending `anchors`.
///
/// Rank-stratified backtracking: elements of `p` are assigned in breadth-first
/// order over the Hasse diagram starting from the anchors, candidates are the
/// Hasse neighbours of an already placed neighbour's image with the same rank
/// and up/down degree, and each candidate is checked against every placed
/// element in both directions. Candidates are tried in index order, so the
/// result is deterministic.
pub fn search_iso(
    p: &FacePoset,
    q: &FacePoset,
    anchors: &BTreeMap<String, String>,
) -> Option<BTreeMap<String, String>> {
    let n = p.len();
    if n != q.len() || p.f_vector() != q.f_vector() {
        return None;
    }
    let sig = |fp: &FacePoset, x: usize| (fp.rank(x), fp.covers_up(x).len(), fp.covers_down(x).len());
    let p_sigs: BTreeMap<_, usize> = (0..n).fold(BTreeMap::new(), |mut m, x| {
        *m.entry(sig(p, x)).or_default() += 1;
        m
    });
    let q_sigs: BTreeMap<_, usize> = (0..n).fold(BTreeMap::new(), |mut m, x| {
        *m.entry(sig(q, x)).or_default() += 1;
        m
    });
    if p_sigs != q_sigs {
        return None;
    }

    let mut fixed: Vec<(usize, usize)> = Vec::new();
    for (a, b) in anchors {
        let (x, y) = (p.index_of(a)?, q.index_of(b)?);
        if sig(p, x) != sig(q, y) {
            return None;
        }
        fixed.push((x, y));
    }
    let targets: BTreeSet<usize> = fixed.iter().map(|&(_, y)| y).collect();
    if targets.len() != fixed.len() {
        return None;
    }

    // Assignment order and, for each free element, a placed Hasse neighbour.
    let mut order: Vec<usize> = fixed.iter().map(|&(x, _)| x).collect();
    let mut placed = vec![false; n];
    for &x in &order {
        placed[x] = true;
    }
    let mut via: Vec<Option<(usize, bool)>> = vec![None; n];
    let mut queue: VecDeque<usize> = order.iter().copied().collect();
    loop {
        while let Some(x) = queue.pop_front() {
            let ups = p.covers_up(x).iter().map(|&y| (y, true));
            let downs = p.covers_down(x).iter().map(|&y| (y, false));
            for (y, upward) in ups.chain(downs) {
                if !placed[y] {
                    placed[y] = true;
                    via[y] = Some((x, upward));
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        match (0..n).find(|&x| !placed[x]) {
            Some(x) => {
                placed[x] = true;
                order.push(x);
                queue.push_back(x);
            }
            None => break,
        }
    }

    let mut image = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    let consistent = |image: &[usize], done: &[usize], x: usize, y: usize| {
        done.iter().all(|&z| {
            let w = image[z];
            p.le(z, x) == q.le(w, y) && p.le(x, z) == q.le(y, w)
        })
    };

    let n_fixed = fixed.len();
    for (i, &(x, y)) in fixed.iter().enumerate() {
        if !consistent(&image, &order[..i], x, y) {
            return None;
        }
        image[x] = y;
        taken[y] = true;
    }

    let candidates = |image: &[usize], taken: &[bool], x: usize| -> Vec<usize> {
        let pool: Vec<usize> = match via[x] {
            Some((parent, true)) => q.covers_up(image[parent]).to_vec(),
            Some((parent, false)) => q.covers_down(image[parent]).to_vec(),
            None => (0..n).collect(),
        };
        pool.into_iter().filter(|&y| !taken[y] && sig(q, y) == sig(p, x)).collect()
    };

    // Explicit stack of (candidate list, cursor) per free position.
    let mut stack: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut pos = n_fixed;
    if pos < n {
        stack.push((candidates(&image, &taken, order[pos]), 0));
    }
    while pos < n {
        let x = order[pos];
        let frame = stack.last_mut().expect("frame for current position");
        if image[x] != usize::MAX {
            taken[image[x]] = false;
            image[x] = usize::MAX;
        }
        let mut next = None;
        while frame.1 < frame.0.len() {
            let y = frame.0[frame.1];
            frame.1 += 1;
            if consistent(&image, &order[..pos], x, y) {
                next = Some(y);
                break;
            }
        }
        match next {
            Some(y) => {
                image[x] = y;
                taken[y] = true;
                pos += 1;
                if pos < n {
                    stack.push((candidates(&image, &taken, order[pos]), 0));
                }
            }
            None => {
                stack.pop();
                if pos == n_fixed {
                    return None;
                }
                pos -= 1;
            }
        }
    }
    Some((0..n).map(|x| (p.label(x).into(), q.label(image[x]).into())).collect())
}
