//! The `assoc` command: enumeration, coordinates, maps and verification over
//! the face posets in `associahedra`.

pub mod args;
pub mod checks;
pub mod error;
pub mod models;
pub mod render;

use std::fs;
use std::io::Write;

use associahedra::associahedron::{loday_realization, Bracketing};
use associahedra::cubeahedron::{tubing_to_expression, DesignTubing};
use associahedra::multiplihedron::{flat_to_bracketing, tree_to_expression, FlatExpression, PaintedTree};
use serde_json::json;

use args::{Bijection, Cli, Command, Common, Format, Model};
use error::CliError;

/// What a command printed and whether every verification in it passed.
pub struct Outcome {
    pub text: String,
    pub pass: bool,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let (common, outcome) = match &cli.command {
        Command::Enumerate(a) => (&a.common, enumerate(a.model, a.n, &a.common)?),
        Command::Fvector(a) => (&a.common, fvector(a.model, a.n, &a.common)?),
        Command::Coords(a) => (&a.common, coords(a.n, &a.common)?),
        Command::Map(a) => (&a.common, map(a.via, &a.element, a.n, a.common.format)?),
        Command::Verify(a) => (&a.common, verify(a.check, a.n, &a.common)?),
    };
    emit(common, &outcome.text)?;
    Ok(outcome)
}

fn emit(common: &Common, text: &str) -> Result<(), CliError> {
    match &common.output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "stdout".into(), source })
        }
    }
}

fn done(text: String) -> Outcome {
    Outcome { text, pass: true }
}

fn unsupported(format: Format, what: &str) -> CliError {
    CliError::Usage(format!("{what} has no {format:?} output").to_lowercase())
}

fn enumerate(model: Model, n: usize, common: &Common) -> Result<Outcome, CliError> {
    models::check_cap(model, n, common.allow_large)?;
    let poset = model.build(n)?;
    Ok(done(match common.format {
        Format::Text => poset.labels().iter().map(|l| format!("{l}\n")).collect(),
        Format::Json => render::poset_json(&poset)?,
        Format::Dot => render::poset_dot(&poset, &format!("{}{n}", model.name())),
        Format::Csv => render::poset_csv(&poset)?,
    }))
}

fn fvector(model: Model, n: usize, common: &Common) -> Result<Outcome, CliError> {
    models::check_cap(model, n, common.allow_large)?;
    let f = model.build(n)?.f_vector();
    let joined = |sep: &str| f.iter().map(usize::to_string).collect::<Vec<_>>().join(sep);
    Ok(done(match common.format {
        Format::Text => joined(" ") + "\n",
        Format::Csv => {
            format!("{}\n{}\n", (0..f.len()).map(|d| format!("f{d}")).collect::<Vec<_>>().join(","), joined(","))
        }
        Format::Json => serde_json::to_string(&json!({ "model": model.name(), "n": n, "f_vector": f }))? + "\n",
        Format::Dot => return Err(unsupported(Format::Dot, "fvector")),
    }))
}

fn coords(n: usize, common: &Common) -> Result<Outcome, CliError> {
    models::check_cap(Model::K, n, common.allow_large)?;
    let rows = loday_realization(n)?;
    Ok(done(match common.format {
        Format::Text => rows.iter().map(|(t, m)| format!("{t}\t{m}\n")).collect(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec![String::from("tree")];
            header.extend((1..n).map(|i| format!("x{i}")));
            w.write_record(&header)?;
            for (t, m) in &rows {
                let mut record = vec![t.to_string()];
                record.extend(m.coords.iter().map(u64::to_string));
                w.write_record(&record)?;
            }
            render::finish_csv(w)?
        }
        Format::Json => {
            let doc: Vec<_> = rows.iter().map(|(t, m)| json!({ "tree": t.to_string(), "coords": m.coords })).collect();
            serde_json::to_string_pretty(&doc)? + "\n"
        }
        Format::Dot => return Err(unsupported(Format::Dot, "coords")),
    }))
}

fn map(via: Bijection, element: &str, n: Option<usize>, format: Format) -> Result<Outcome, CliError> {
    let tubing = || -> Result<DesignTubing, CliError> {
        let n = n.ok_or_else(|| CliError::Usage("tubings need --n, the number of path nodes".into()))?;
        Ok(DesignTubing::parse(n, element)?)
    };
    let bracketing_out = |b: &Bracketing| match format {
        Format::Json => render::bracketing_json(b),
        _ => json!(b.to_string()),
    };
    let (input, output) = match via {
        Bijection::Phi => {
            let t: PaintedTree = element.parse()?;
            (json!(t.to_string()), json!(tree_to_expression(&t)?.to_string()))
        }
        Bijection::Phiprime => {
            let e: FlatExpression = element.parse()?;
            (json!(e.to_string()), bracketing_out(&flat_to_bracketing(&e)?))
        }
        Bijection::Tubing => {
            let u = tubing()?;
            (render::tubing_json(&u), json!(tubing_to_expression(&u)?.to_string()))
        }
        Bijection::Composed => {
            let u = tubing()?;
            (render::tubing_json(&u), bracketing_out(&flat_to_bracketing(&tubing_to_expression(&u)?)?))
        }
    };
    Ok(done(match format {
        Format::Text => format!("{}\n", output.as_str().expect("text output is a string")),
        Format::Json => serde_json::to_string(&json!({ "input": input, "output": output }))? + "\n",
        other => return Err(unsupported(other, "map")),
    }))
}

fn verify(check: args::Check, n: usize, common: &Common) -> Result<Outcome, CliError> {
    if check != args::Check::All {
        models::check_cap(check.model(), n, common.allow_large)?;
    }
    let reports = checks::run(check, n);
    let pass = reports.iter().all(|r| r.pass);
    let text = match common.format {
        Format::Text => reports
            .iter()
            .flat_map(|r| std::iter::once(format!("{r}\n")).chain(r.notes.iter().map(|n| format!("  note: {n}\n"))))
            .collect(),
        Format::Json => {
            let doc = json!({ "pass": pass, "reports": reports.iter().map(render::report_json).collect::<Vec<_>>() });
            serde_json::to_string_pretty(&doc)? + "\n"
        }
        other => return Err(unsupported(other, "verify")),
    };
    Ok(Outcome { text, pass })
}
