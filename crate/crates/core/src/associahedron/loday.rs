//! Loday's integer realization: one point per binary tree.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::ModelError;
use crate::hull::is_extreme;
use crate::report::Report;
use crate::trees::{enumerate_binary_trees, loday_point, LodayPoint, PlaneTree};

/// Every binary tree with `n` leaves paired with its point.
pub fn loday_realization(n: usize) -> Result<Vec<(PlaneTree, LodayPoint)>, ModelError> {
    enumerate_binary_trees(n)?.into_iter().map(|t| loday_point(&t).map(|p| (t, p))).collect()
}

/// Checks that every point has coordinate sum `n(n-1)/2`, that the points are
/// pairwise distinct and, if `extremality` is set, that no point lies in the
/// hull of the others.
pub fn verify_loday_with(n: usize, extremality: bool) -> Report {
    let mut report = Report::new("loday realization");
    let points = match loday_realization(n) {
        Ok(p) => p,
        Err(e) => {
            report.fail(format!("{e}"));
            return report;
        }
    };
    let target = (n * (n - 1) / 2) as u64;
    report.count("points", points.len()).count("sum", target as usize);
    for (t, p) in &points {
        report.require(p.sum() == target, || format!("{t} has point {p} with sum {}", p.sum()));
    }
    let distinct: BTreeSet<&LodayPoint> = points.iter().map(|(_, p)| p).collect();
    report.require(distinct.len() == points.len(), || String::from("two trees share a point"));
    if extremality {
        let coords: Vec<Vec<i64>> = points.iter().map(|(_, p)| p.coords.iter().map(|&c| c as i64).collect()).collect();
        let mut extreme = 0;
        for (i, (t, p)) in points.iter().enumerate() {
            if report.require(is_extreme(&coords, i), || format!("{t} with point {p} lies in the hull of the others")) {
                extreme += 1;
            }
        }
        report.count("extreme", extreme);
    }
    report
}

/// Sums, distinctness and exact extremality.
pub fn verify_loday(n: usize) -> Report {
    verify_loday_with(n, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_and_four_leaves() {
        let r = verify_loday(3);
        assert!(r.pass, "{r}");
        assert_eq!(r.get("extreme"), Some(2));
        let r = verify_loday(4);
        assert!(r.pass, "{r}");
        assert_eq!((r.get("points"), r.get("sum"), r.get("extreme")), (Some(5), Some(6), Some(5)));
        let pts: Vec<_> = loday_realization(4).unwrap().into_iter().map(|(_, p)| p.coords).collect();
        assert!(pts.contains(&alloc::vec![1, 4, 1]));
    }
}
