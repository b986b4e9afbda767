//! Reference tables transcribed from the published listings, embedded at
//! compile time. Each file starts with a `# anchor:` line naming the table
//! it was copied from.

use std::str::FromStr;

use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixture {
    pub id: &'static str,
    pub text: &'static str,
}

macro_rules! fixture {
    ($id:literal) => {
        Fixture { id: $id, text: include_str!(concat!("../fixtures/", $id, ".txt")) }
    };
}

pub const FIXTURES: &[Fixture] = &[
    fixture!("o_trips"),
    fixture!("s_trips"),
    fixture!("progression"),
    fixture!("strut_table"),
    fixture!("tray_racks"),
    fixture!("trigrams"),
    fixture!("automorphemes"),
    fixture!("quizzical"),
    fixture!("mock_octonion"),
    fixture!("switching_yard"),
    fixture!("sync_table"),
    fixture!("pathion_s1_assessors"),
    fixture!("pathion_s1_kites"),
    fixture!("pathion_s9_kites"),
    fixture!("census_claims"),
];

/// Looks up a fixture by id. Panics on an unknown id, which is a programming
/// error.
pub fn fixture(id: &str) -> &'static Fixture {
    FIXTURES.iter().find(|f| f.id == id).unwrap_or_else(|| panic!("no fixture named {id}"))
}

/// A data line and its 1-based line number.
#[derive(Debug, Clone, Copy)]
pub struct Record {
    pub fixture: &'static str,
    pub line: usize,
    pub text: &'static str,
}

impl Record {
    pub fn fields(&self) -> Vec<&'static str> {
        self.text.split_whitespace().collect()
    }

    pub fn error(&self, message: impl Into<String>) -> CliError {
        CliError::Fixture { id: self.fixture, line: self.line, message: message.into() }
    }

    pub fn parse<T: FromStr>(&self, field: &str) -> Result<T> {
        field.parse().map_err(|_| self.error(format!("cannot parse {field:?}")))
    }

    /// Every whitespace- or comma-separated integer on the line.
    pub fn numbers(&self) -> Result<Vec<u32>> {
        self.text
            .split(|c: char| c.is_whitespace() || c == ',' || c == '|')
            .filter(|t| !t.is_empty())
            .map(|t| self.parse(t))
            .collect()
    }
}

impl Fixture {
    /// Text after the `# anchor:` header.
    pub fn anchor(&self) -> &'static str {
        self.header("anchor:").unwrap_or(self.id)
    }

    /// Value of a `# key ...` comment line.
    pub fn header(&self, key: &str) -> Option<&'static str> {
        self.text.lines().find_map(|l| l.strip_prefix('#')?.trim_start().strip_prefix(key).map(str::trim))
    }

    /// Non-blank, non-comment lines.
    pub fn records(&self) -> impl Iterator<Item = Record> + '_ {
        let id = self.id;
        self.text.lines().enumerate().filter_map(move |(i, l)| {
            let text = l.trim();
            (!text.is_empty() && !text.starts_with('#')).then_some(Record { fixture: id, line: i + 1, text })
        })
    }

    /// Parses a `low,high` pair.
    pub fn pair(record: &Record, field: &str) -> Result<(u32, u32)> {
        let (a, b) = field.split_once(',').ok_or_else(|| record.error(format!("expected low,high: {field:?}")))?;
        Ok((record.parse(a)?, record.parse(b)?))
    }
}
