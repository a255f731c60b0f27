//! Exact convex-hull membership by phase-one simplex over big rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Whether `point` is a convex combination of `others`.
///
/// Solves `sum l_i o_i = point`, `sum l_i = 1`, `l >= 0` for feasibility with
/// Bland's rule, so the answer is exact and the run terminates.
pub fn in_convex_hull(point: &[i64], others: &[Vec<i64>]) -> bool {
    let d = point.len();
    let k = others.len();
    if k == 0 {
        return false;
    }
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let m = d + 1;
    // Row i: [A_i (k) | artificial (m) | rhs].
    let width = k + m + 1;
    let mut t: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = vec![BigRational::zero(); width];
            let rhs = if i < d { q(point[i]) } else { BigRational::one() };
            let sign = if rhs.is_negative() { -BigRational::one() } else { BigRational::one() };
            for (j, o) in others.iter().enumerate() {
                row[j] = if i < d { q(o[i]) } else { BigRational::one() } * &sign;
            }
            row[k + i] = BigRational::one();
            row[width - 1] = rhs * sign;
            row
        })
        .collect();
    let mut basis: Vec<usize> = (k..k + m).collect();
    // Reduced costs of the sum of artificials, and minus its current value.
    let mut cost = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..k {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }
    while let Some(enter) = (0..k + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else { break };
        let pivot = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            *x -= &f * p;
        }
        basis[r] = enter;
    }
    cost[width - 1].is_zero()
}

/// Whether `points[i]` is not a convex combination of the other points.
pub fn is_extreme(points: &[Vec<i64>], i: usize) -> bool {
    let others: Vec<Vec<i64>> = points.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
    !in_convex_hull(&points[i], &others)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_corners_and_centre() {
        let sq = vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2]];
        assert!(in_convex_hull(&[1, 1], &sq));
        assert!(in_convex_hull(&[2, 1], &sq));
        assert!(!in_convex_hull(&[3, 1], &sq));
        assert!(!in_convex_hull(&[-1, 0], &sq));
        for i in 0..4 {
            assert!(is_extreme(&sq, i));
        }
        let with_centre = vec![vec![0, 0], vec![2, 0], vec![1, 1], vec![0, 2], vec![2, 2]];
        assert!(!is_extreme(&with_centre, 2));
    }

    #[test]
    fn collinear_points() {
        let line = vec![vec![0], vec![1], vec![3]];
        assert!(is_extreme(&line, 0));
        assert!(!is_extreme(&line, 1));
        assert!(is_extreme(&line, 2));
        assert!(!in_convex_hull(&[1], &[]));
    }
}
