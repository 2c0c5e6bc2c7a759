use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::Args;
use dispersion::instances::{generate, write_instance, Family, GeneratorSpec};
use dispersion::Gamma;

use crate::error::CliResult;
use crate::output::{family_parser, gamma_parser};
use crate::Status;

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_parser = family_parser())]
    family: Family,

    #[arg(long)]
    n: usize,

    #[arg(long)]
    k: usize,

    #[arg(long, value_parser = gamma_parser(), default_value = "2")]
    gamma: Gamma,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Side of the square, or length of the segment.
    #[arg(long, default_value_t = 100.0)]
    extent: f64,

    /// Output file; `-` writes to stdout. Defaults to
    /// `<dir>/fixtures/<family>/<n>_<k>_<gamma>_<seed>.txt`.
    #[arg(long, short)]
    out: Option<PathBuf>,

    /// Directory the default fixture tree is created under.
    #[arg(long, default_value = ".", conflicts_with = "out")]
    dir: PathBuf,
}

pub fn run(args: &GenArgs, out: &mut dyn Write) -> CliResult<Status> {
    let spec = GeneratorSpec {
        family: args.family,
        n: args.n,
        k: args.k,
        gamma: args.gamma,
        seed: args.seed,
        extent: args.extent,
    };
    let instance = generate(&spec)?;
    let path = match &args.out {
        Some(p) if p.as_os_str() == "-" => {
            write_instance(&instance, &mut *out)?;
            return Ok(Status::Ok);
        }
        Some(p) => p.clone(),
        None => args.dir.join(spec.fixture_path()),
    };
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let mut file = BufWriter::new(File::create(&path)?);
    write_instance(&instance, &mut file)?;
    file.flush()?;
    writeln!(out, "{}", path.display())?;
    Ok(Status::Ok)
}
