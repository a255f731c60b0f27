//! Text, JSON, DOT and CSV renderings.

use std::fmt::Write as _;

use associahedra::associahedron::Bracketing;
use associahedra::cubeahedron::{DesignTube, DesignTubing};
use associahedra::{FacePoset, Report};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Serialize)]
struct Element<'a> {
    id: &'a str,
    rank: usize,
}

#[derive(Serialize)]
struct PosetJson<'a> {
    elements: Vec<Element<'a>>,
    covers: Vec<[&'a str; 2]>,
}

/// `{"elements":[{"id","rank"}],"covers":[[lower,upper]]}`.
pub fn poset_json(p: &FacePoset) -> Result<String, CliError> {
    let doc = PosetJson {
        elements: (0..p.len()).map(|i| Element { id: p.label(i), rank: p.rank(i) }).collect(),
        covers: p.cover_pairs().into_iter().map(|(a, b)| [p.label(a), p.label(b)]).collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

fn quoted(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram with edges pointing up and one `rank=same` group per rank.
pub fn poset_dot(p: &FacePoset, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quoted(name));
    out.push_str("  rankdir=BT;\n");
    let ranks = p.f_vector().len();
    for r in 0..ranks {
        let ids: Vec<String> = p.elements_of_rank(r).map(|i| quoted(p.label(i))).collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
    }
    for (a, b) in p.cover_pairs() {
        let _ = writeln!(out, "  {} -> {};", quoted(p.label(a)), quoted(p.label(b)));
    }
    out.push_str("}\n");
    out
}

/// `id,rank` rows.
pub fn poset_csv(p: &FacePoset) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "rank"])?;
    for i in 0..p.len() {
        w.write_record([p.label(i), &p.rank(i).to_string()])?;
    }
    finish_csv(w)
}

pub fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Serialize)]
struct BracketingJson {
    n: usize,
    brackets: Vec<[usize; 2]>,
}

/// `{"n":4,"brackets":[[2,3]]}`.
pub fn bracketing_json(b: &Bracketing) -> Value {
    let doc = BracketingJson { n: b.letters(), brackets: b.brackets().iter().map(|&(l, r)| [l, r]).collect() };
    serde_json::to_value(doc).expect("plain data serializes")
}

/// `{"n":3,"tubes":[{"kind":"round","nodes":[2]}]}`, tubes sorted by kind
/// then first node.
pub fn tubing_json(u: &DesignTubing) -> Value {
    let tubes: Vec<Value> = u
        .tubes()
        .iter()
        .map(|t| {
            let (lo, hi) = t.nodes();
            let kind = match t {
                DesignTube::Round { .. } => "round",
                DesignTube::Square { .. } => "square",
            };
            json!({ "kind": kind, "nodes": (lo..=hi).collect::<Vec<_>>() })
        })
        .collect();
    json!({ "n": u.nodes(), "tubes": tubes })
}

pub fn report_json(r: &Report) -> Value {
    let counts: serde_json::Map<String, Value> = r.counts.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    json!({ "check": r.check, "pass": r.pass, "counts": counts, "witness": r.witness, "notes": r.notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use associahedra::associahedron::build_k;

    #[test]
    fn dot_of_k3() {
        let dot = poset_dot(&build_k(3).unwrap(), "k3");
        assert_eq!(dot.matches(" -> ").count(), 2);
        assert!(dot.contains("\"(a1a2)a3\" -> \"a1a2a3\";"));
    }

    #[test]
    fn json_shapes() {
        let b: Bracketing = "a1(a2a3)a4".parse().unwrap();
        assert_eq!(serde_json::to_string(&bracketing_json(&b)).unwrap(), r#"{"n":4,"brackets":[[2,3]]}"#);
        let u = DesignTubing::parse(3, "{r2,s1}").unwrap();
        assert_eq!(
            tubing_json(&u).to_string(),
            r#"{"n":3,"tubes":[{"kind":"round","nodes":[2]},{"kind":"square","nodes":[1]}]}"#
        );
    }

    #[test]
    fn escaping() {
        assert_eq!(quoted("a\"b"), "\"a\\\"b\"");
    }
}
