mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hermsym_core::hermitian::HermitianFamily;
use hermsym_core::Error;

#[derive(Parser, Debug)]
#[command(name = "hermsym", version, about = "Exact invariants of Hermitian symmetric spaces")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyName {
    #[value(name = "AIII")]
    Aiii,
    #[value(name = "CI")]
    Ci,
    #[value(name = "DIII")]
    Diii,
    #[value(name = "BDI")]
    Bdi,
    #[value(name = "EIII")]
    Eiii,
    #[value(name = "EVII")]
    Evii,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
}

impl FamilyArgs {
    pub fn resolve(&self) -> Result<HermitianFamily, Error> {
        resolve_family(self.family, self.p, self.q, self.n)
    }
}

pub fn resolve_family(
    name: FamilyName,
    p: Option<usize>,
    q: Option<usize>,
    n: Option<usize>,
) -> Result<HermitianFamily, Error> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::InvalidParameters(format!("--{flag} is required for this family")))
    };
    let f = match name {
        FamilyName::Aiii => HermitianFamily::AIII { p: need(p, "p")?, q: need(q, "q")? },
        FamilyName::Ci => HermitianFamily::CI { n: need(n, "n")? },
        FamilyName::Diii => HermitianFamily::DIII { n: need(n, "n")? },
        FamilyName::Bdi => HermitianFamily::BDI { n: need(n, "n")? },
        FamilyName::Eiii => HermitianFamily::EIII,
        FamilyName::Evii => HermitianFamily::EVII,
    };
    f.validate()?;
    Ok(f)
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormName {
    Matrix,
    Adjoint,
    #[value(name = "simply-connected", alias = "sc")]
    SimplyConnected,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum JordanOp {
    Det,
    Rank,
    NormalForm,
    Parabolic,
    Echo,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root data, cascade size, restricted multiplicities and N.
    Info(FamilyArgs),
    /// Appendix tables 1-5.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        which: u8,
        /// Sweep every family whose complex Lie algebra has rank at most this.
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        #[arg(long, value_enum)]
        family: Option<FamilyName>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// The strongly orthogonal cascade in simple-root coordinates.
    Cascade(FamilyArgs),
    /// Restricted-root classes and multiplicities.
    Restricted(FamilyArgs),
    /// Cocharacter lattice and Toledo character data of a group form.
    Lattice {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = FormName::Matrix)]
        form: FormName,
    },
    /// Milnor-Wood type bounds on the Toledo invariant.
    Bound {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = FormName::Matrix)]
        form: FormName,
        #[arg(long)]
        genus: i64,
        /// Rational `num/den` or integer.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lambda: String,
        /// Defaults to the rank r of G/H.
        #[arg(long)]
        rk_plus: Option<usize>,
        /// Defaults to the rank r of G/H.
        #[arg(long)]
        rk_minus: Option<usize>,
        /// Degree of the twisting line bundle L instead of 2g-2.
        #[arg(long, allow_hyphen_values = true)]
        twist_degree: Option<i64>,
        /// Report whether this Toledo invariant is maximal (requires lambda = 0).
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
    },
    /// Jordan determinant, rank and normal form of an element of m+ read as JSON.
    Jordan {
        /// File path, or `-` for stdin.
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        op: JordanOp,
    },
    /// Cayley transform structure of a classical matrix model.
    Cayley(FamilyArgs),
    /// Maximal tube subgroup and the group L' for non-tube families.
    Fibration(FamilyArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.render(cli.format).as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
