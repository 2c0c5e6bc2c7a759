//! Instance generation and the text format.

mod format;
mod generate;

pub use format::{read_instance, to_canonical_string, write_instance};
pub use generate::{generate, Family, GeneratorSpec, UnitRng};
