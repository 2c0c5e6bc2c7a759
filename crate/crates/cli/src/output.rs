//! Number formatting, instance digests and shared argument parsers.

use std::fs::File;
use std::path::Path;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use dispersion::instances::{read_instance, to_canonical_string, Family};
use dispersion::{Gamma, Instance64, Method};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

/// Shortest decimal that round-trips the value rounded to 12 significant
/// digits; `.` is always the decimal separator.
pub fn num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    rounded.to_string()
}

/// SHA-256 of the instance's canonical text form, so the digest does not
/// depend on comments, spacing or how the coordinates were spelled.
pub fn digest(instance: &Instance64) -> String {
    hex::encode(Sha256::digest(to_canonical_string(instance).as_bytes()))
}

pub fn load_instance(path: &Path) -> CliResult<Instance64> {
    let file = File::open(path)
        .map_err(|e| CliError::Input(format!("cannot open {}: {e}", path.display())))?;
    read_instance(file).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn algorithm_parser() -> impl TypedValueParser<Value = Method> {
    PossibleValuesParser::new(["greedy", "framework", "oracle"])
        .map(|s| s.parse::<Method>().expect("listed value"))
}

pub fn family_parser() -> impl TypedValueParser<Value = Family> {
    PossibleValuesParser::new(["uniform", "collinear", "grid", "clustered"])
        .map(|s| s.parse::<Family>().expect("listed value"))
}

pub fn gamma_parser() -> impl TypedValueParser<Value = Gamma> {
    PossibleValuesParser::new(["1", "2"]).map(|s| {
        let g: usize = s.parse().expect("listed value");
        Gamma::try_from(g).expect("listed value")
    })
}
