//! Size caps and poset construction per model.

use associahedra::associahedron::build_k;
use associahedra::cubeahedron::build_cp;
use associahedra::multiplihedron::{build_jprime, build_jtree};
use associahedra::FacePoset;

use crate::args::Model;
use crate::error::CliError;

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::K => "k",
            Model::J => "j",
            Model::Jprime => "jprime",
            Model::Cp => "cp",
        }
    }

    /// Largest `n` run without `--allow-large`.
    pub fn cap(self) -> usize {
        match self {
            Model::K => 8,
            Model::J => 5,
            Model::Jprime => 6,
            Model::Cp => 5,
        }
    }

    pub fn build(self, n: usize) -> Result<FacePoset, CliError> {
        Ok(match self {
            Model::K => build_k(n)?,
            Model::J => build_jtree(n)?,
            Model::Jprime => build_jprime(n)?,
            Model::Cp => build_cp(n)?,
        })
    }
}

/// Rejects `n` above the cap unless overridden, warning on stderr when it is.
pub fn check_cap(model: Model, n: usize, allow_large: bool) -> Result<(), CliError> {
    if n <= model.cap() {
        return Ok(());
    }
    if allow_large {
        eprintln!("warning: n = {n} exceeds the {} cap of {}; this may take a long time", model.name(), model.cap());
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "n = {n} exceeds the {} cap of {}; pass --allow-large to run anyway",
            model.name(),
            model.cap()
        )))
    }
}
