//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "assoc", version, about = "Associahedra, multiplihedra and cubeahedra as face posets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every face of a model, one per line in text mode.
    Enumerate(ModelArgs),
    /// Print the number of faces in each dimension.
    Fvector(ModelArgs),
    /// Print the integer coordinates of the binary trees with `n` leaves.
    Coords(CoordsArgs),
    /// Send one element across a bijection.
    Map(MapArgs),
    /// Run verification reports; exits 1 if any fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Allow `n` above the default size cap (prints a warning).
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: Model,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CoordsArgs {
    /// Number of leaves.
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    /// Which bijection to apply.
    #[arg(long, value_enum)]
    pub via: Bijection,
    /// The element, in its canonical text form.
    #[arg(long)]
    pub element: String,
    /// Number of path nodes; needed for tubings.
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub check: Check,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Model {
    /// Bracketings of `n` letters.
    K,
    /// Painted trees with `n` leaves.
    J,
    /// Flat expressions in `n` letters.
    Jprime,
    /// Design tubings of the path with `n` nodes.
    Cp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Bijection {
    /// Painted tree to expression.
    Phi,
    /// Flat expression to bracketing.
    Phiprime,
    /// Design tubing to flat expression.
    Tubing,
    /// Design tubing to bracketing.
    Composed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Bracketings as a cone with apex the right comb.
    Cone,
    /// Products of associahedra as cones and as facets, all `p + q <= n`.
    Q,
    /// Integer coordinates: sums, distinctness and, up to 6 leaves, extremality.
    Loday,
    /// Substitution identities up to `n` letters.
    Identities,
    /// Degeneracy relations up to `n` letters.
    Degeneracy,
    /// Painted trees against expressions.
    Phi,
    /// Flat expressions against bracketings of one more letter.
    Phiprime,
    /// Erasing codomain brackets.
    Collapse,
    /// Design tubings against flat expressions.
    Cubeahedron,
    /// Design tubings against bracketings, and ordinary tubings.
    Composed,
    /// Every check above, each at the smaller of `n` and its model's cap.
    All,
}
