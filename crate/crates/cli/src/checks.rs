//! Verification suites behind `assoc verify`.

use associahedra::associahedron::{
    verify_degeneracy_relations, verify_embed_identities, verify_loday_with, verify_q, verify_theorem_a,
};
use associahedra::complex::{verify_cross_cone, CellComplex};
use associahedra::cubeahedron::{verify_composed, verify_cubeahedron_iso};
use associahedra::multiplihedron::{verify_codomain_collapse, verify_flat_bracketing_iso, verify_tree_expression_iso};
use associahedra::Report;

use crate::args::{Check, Model};

/// Largest leaf count for which hull membership is decided exactly.
pub const EXTREMALITY_LIMIT: usize = 6;

const EACH: [Check; 10] = [
    Check::Cone,
    Check::Q,
    Check::Loday,
    Check::Identities,
    Check::Degeneracy,
    Check::Phi,
    Check::Phiprime,
    Check::Collapse,
    Check::Cubeahedron,
    Check::Composed,
];

impl Check {
    /// The model whose size cap bounds `n`.
    pub fn model(self) -> Model {
        match self {
            Check::Phi | Check::Collapse => Model::J,
            Check::Phiprime => Model::Jprime,
            Check::Cubeahedron | Check::Composed => Model::Cp,
            _ => Model::K,
        }
    }

    /// Individual checks; `All` expands to every other one.
    pub fn expand(self) -> Vec<Check> {
        if self == Check::All {
            EACH.to_vec()
        } else {
            vec![self]
        }
    }
}

/// Runs one check at size `n`. For `Q`, every `p, q >= 2` with `p + q <= n`
/// and every slot is covered, along with the point times point cross cone.
pub fn run(check: Check, n: usize) -> Vec<Report> {
    let at = |r: Report| vec![tag(r, format!("n={n}"))];
    match check {
        Check::Cone => at(verify_theorem_a(n)),
        Check::Q => {
            let mut out = vec![verify_cross_cone(&CellComplex::point("x"), &CellComplex::point("y"))];
            for p in 2..n {
                for q in 2..=n.saturating_sub(p) {
                    out.extend((1..=p).map(|r| tag(verify_q(p, q, r), format!("p={p} q={q} r={r}"))));
                }
            }
            out
        }
        Check::Loday => at(verify_loday_with(n, n <= EXTREMALITY_LIMIT)),
        Check::Identities => at(verify_embed_identities(n)),
        Check::Degeneracy => at(verify_degeneracy_relations(n)),
        Check::Phi => at(verify_tree_expression_iso(n)),
        Check::Phiprime => at(verify_flat_bracketing_iso(n)),
        Check::Collapse => at(verify_codomain_collapse(n)),
        Check::Cubeahedron => at(verify_cubeahedron_iso(n)),
        Check::Composed => at(verify_composed(n)),
        Check::All => EACH.iter().flat_map(|&c| run(c, n.min(c.model().cap()))).collect(),
    }
}

fn tag(mut r: Report, size: String) -> Report {
    r.check = format!("{} [{size}]", r.check);
    r
}
