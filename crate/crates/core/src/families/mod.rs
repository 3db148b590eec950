//! Constructors for the graph families used throughout the crate.

mod explore;
mod grki;
mod named;
mod script;

pub use explore::{catalog_f3_cubic, family_members, random_script};
pub use grki::{build_g_rki, GrkiError};
pub use named::{build_named, named, NameError, NamedGraph};
pub use script::{parse_script, run_script, write_script, BuildScript, Family, ScriptError, ScriptOutput, Step};
