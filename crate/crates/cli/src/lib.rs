//! Front end for `boxkite-core`: renders structures as Markdown, CSV, JSON
//! or DOT and checks computed results against embedded reference tables.

mod error;

pub mod doc;
pub mod emit;
pub mod fixtures;
pub mod render;
pub mod select;
pub mod verify;

pub use emit::{emit, RenderSpec, Target};
pub use error::{CliError, Result};
pub use render::Format;
pub use select::StrutSelection;
pub use verify::{verify, Check, Section, Status, VerificationReport};

const ROMAN: [&str; 7] = ["I", "II", "III", "IV", "V", "VI", "VII"];

/// Roman numeral naming the sedenion box-kite with strut constant `s`.
pub fn roman(s: u32) -> Option<&'static str> {
    ROMAN.get((s as usize).checked_sub(1)?).copied()
}

/// Inverse of [`roman`].
pub fn from_roman(text: &str) -> Option<u32> {
    ROMAN.iter().position(|&r| r == text).map(|i| i as u32 + 1)
}
