//! Counting oracles that share no code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(2m, m) / (m + 1)`.
pub fn catalan(m: u64) -> u64 {
    binomial(2 * m, m) / (m + 1)
}

/// Little Schröder numbers from `(n+1) s(n+1) = 3(2n-1) s(n) - (n-2) s(n-1)`,
/// starting at `s(1) = s(2) = 1`. Entry `n` counts all faces of `K_n`.
pub fn little_schroder(n: usize) -> u64 {
    let mut s = vec![0i64, 1, 1];
    for m in 2..n {
        let m_i = m as i64;
        let next = (3 * (2 * m_i - 1) * s[m] - (m_i - 2) * s[m - 1]) / (m_i + 1);
        s.push(next);
    }
    s[n] as u64
}

/// Painted binary trees: a `T` node over an unpainted binary tree, or a `P`
/// node over two painted ones.
pub fn painted_binary(n: usize) -> u64 {
    let mut a = vec![0u64; n + 1];
    for m in 1..=n {
        a[m] = catalan(m as u64 - 1) + (1..m).map(|i| a[i] * a[m - i]).sum::<u64>();
    }
    a[n]
}

/// Brute force over all subsets of intervals of length 2..n-1: the subsets
/// with no two crossing intervals.
pub fn brute_force_bracketings(n: usize) -> BTreeSet<BTreeSet<(usize, usize)>> {
    let intervals: Vec<(usize, usize)> =
        (1..=n).flat_map(|l| (l + 1..=n).map(move |r| (l, r))).filter(|&(l, r)| (l, r) != (1, n)).collect();
    let crossing = |a: (usize, usize), b: (usize, usize)| {
        (a.0 < b.0 && b.0 <= a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 <= b.1 && b.1 < a.1)
    };
    (0u64..1 << intervals.len())
        .map(|mask| (0..intervals.len()).filter(|i| mask >> i & 1 == 1).map(|i| intervals[i]).collect::<Vec<_>>())
        .filter(|set| set.iter().all(|&a| set.iter().all(|&b| !crossing(a, b))))
        .map(|set| set.into_iter().collect())
        .collect()
}

/// Brute force over all subsets of design tubes on a path with `n` nodes,
/// with the compatibility rules written out directly.
pub fn brute_force_design_tubings(n: usize) -> usize {
    #[derive(Clone, Copy)]
    struct Tube {
        lo: usize,
        hi: usize,
        square: bool,
    }
    let mut tubes = Vec::new();
    for lo in 1..=n {
        for hi in lo..=n {
            tubes.push(Tube { lo, hi, square: false });
        }
        tubes.push(Tube { lo, hi: lo, square: true });
    }
    let ok = |a: Tube, b: Tube| {
        let nested = (a.lo <= b.lo && b.hi <= a.hi) || (b.lo <= a.lo && a.hi <= b.hi);
        if a.square || b.square {
            !nested
        } else {
            nested || a.hi + 1 < b.lo || b.hi + 1 < a.lo
        }
    };
    (0u64..1 << tubes.len())
        .filter(|mask| {
            let chosen: Vec<Tube> = (0..tubes.len()).filter(|i| mask >> i & 1 == 1).map(|i| tubes[i]).collect();
            chosen.iter().enumerate().all(|(i, &a)| chosen[i + 1..].iter().all(|&b| ok(a, b)))
        })
        .count()
}

/// Euler characteristic of the boundary sphere of a `d`-dimensional ball.
pub fn sphere_euler(d: usize) -> i64 {
    if d.is_multiple_of(2) {
        0
    } else {
        2
    }
}
