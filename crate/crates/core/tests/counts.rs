mod common;

use std::collections::BTreeSet;

use associahedra::associahedron::{build_k, enumerate_bracketings};
use associahedra::cubeahedron::{build_cp, enumerate_design_tubings};
use associahedra::multiplihedron::{build_jprime, build_jtree, enumerate_flat_expressions, enumerate_painted_trees};
use associahedra::trees::{enumerate_binary_trees, enumerate_plane_trees};
use common::*;

#[test]
fn binary_trees_are_catalan() {
    for n in 2..=9 {
        assert_eq!(enumerate_binary_trees(n).unwrap().len() as u64, catalan(n as u64 - 1), "n = {n}");
    }
}

#[test]
fn plane_trees_are_little_schroder() {
    for n in 2..=8 {
        assert_eq!(enumerate_plane_trees(n).unwrap().len() as u64, little_schroder(n), "n = {n}");
    }
}

#[test]
fn bracketings_match_brute_force() {
    for n in 2..=7 {
        let ours: BTreeSet<BTreeSet<(usize, usize)>> =
            enumerate_bracketings(n).unwrap().iter().map(|b| b.brackets().clone()).collect();
        assert_eq!(ours, brute_force_bracketings(n), "n = {n}");
    }
}

#[test]
fn associahedron_vertices_and_facets() {
    for n in 3..=8 {
        let f = build_k(n).unwrap().f_vector();
        assert_eq!(f[0] as u64, catalan(n as u64 - 1));
        assert_eq!(f[n - 3], n * (n - 1) / 2 - 1);
        assert_eq!(f.iter().sum::<usize>() as u64, little_schroder(n));
    }
}

#[test]
fn painted_tree_vertices() {
    for n in 1..=5 {
        let j = build_jtree(n).unwrap();
        assert_eq!(j.f_vector()[0] as u64, painted_binary(n), "n = {n}");
        assert_eq!(j.len(), enumerate_painted_trees(n).unwrap().len());
    }
}

#[test]
fn flat_expressions_count_faces_of_next_associahedron() {
    for n in 1..=6 {
        assert_eq!(enumerate_flat_expressions(n).unwrap().len() as u64, little_schroder(n + 1));
        assert_eq!(build_jprime(n).unwrap().len() as u64, little_schroder(n + 1));
    }
}

#[test]
fn design_tubings_match_brute_force() {
    for n in 1..=4 {
        let ours = enumerate_design_tubings(n).unwrap().len();
        assert_eq!(ours, brute_force_design_tubings(n), "n = {n}");
        assert_eq!(ours as u64, little_schroder(n + 2));
    }
    assert_eq!(build_cp(5).unwrap().len() as u64, little_schroder(7));
}

#[test]
fn spheres_everywhere() {
    for n in 2..=7 {
        assert_eq!(build_k(n).unwrap().boundary_euler_characteristic(), sphere_euler(n - 2));
    }
    for n in 1..=4 {
        assert_eq!(build_jtree(n).unwrap().boundary_euler_characteristic(), sphere_euler(n - 1));
        assert_eq!(build_cp(n).unwrap().boundary_euler_characteristic(), sphere_euler(n));
    }
}
