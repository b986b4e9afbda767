use std::fmt::Write as _;
use std::str::FromStr;

use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
    Dot,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Markdown => "md",
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Dot => "dot",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        match text {
            "md" | "markdown" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            _ => Err(format!("unknown format {text:?} (md, csv, json, dot)")),
        }
    }
}

/// A plain grid of strings with a header row.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TextTable {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl TextTable {
    pub fn new<S: ToString>(headers: impl IntoIterator<Item = S>) -> Self {
        TextTable { headers: headers.into_iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(|c| c.to_string()).collect();
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_markdown(&self) -> String {
        let escape = |c: &str| c.replace('|', "\\|");
        let mut out = String::new();
        let line =
            |cells: &[String]| format!("| {} |\n", cells.iter().map(|c| escape(c)).collect::<Vec<_>>().join(" | "));
        out.push_str(&line(&self.headers));
        out.push_str(&format!("|{}\n", "---|".repeat(self.headers.len())));
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.headers)?;
        for row in &self.rows {
            writer.write_record(row)?;
        }
        let bytes = writer.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Everything one target can be rendered as. Sections are shared by the
/// Markdown and CSV renderings; JSON and DOT are prepared by the target.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub title: String,
    pub sections: Vec<(Option<String>, TextTable)>,
    pub json: String,
    pub dot: Option<String>,
}

impl Document {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Markdown => {
                let mut out = format!("# {}\n", self.title);
                for (heading, table) in &self.sections {
                    if let Some(h) = heading {
                        let _ = write!(out, "\n## {h}\n");
                    }
                    out.push('\n');
                    out.push_str(&table.to_markdown());
                }
                Ok(out)
            }
            Format::Csv => {
                let parts = self.sections.iter().map(|(_, t)| t.to_csv()).collect::<Result<Vec<_>>>()?;
                Ok(parts.join("\n"))
            }
            Format::Json => Ok(format!("{}\n", self.json)),
            Format::Dot => {
                self.dot.clone().ok_or_else(|| CliError::usage("dot output is only available for graph targets"))
            }
        }
    }
}

/// Parses the body rows of a Markdown table produced by
/// [`TextTable::to_markdown`].
pub fn parse_markdown_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| l.starts_with('|') && !l.starts_with("|---"))
        .skip(1)
        .map(|l| l.trim_matches('|').split(" | ").map(|c| c.trim().replace("\\|", "|")).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> TextTable {
        let mut t = TextTable::new(["x", "y"]);
        t.push(["1", "a,b"]);
        t.push(["2", "c"]);
        t
    }

    #[test]
    fn markdown_layout() {
        assert_eq!(sample().to_markdown(), "| x | y |\n|---|---|\n| 1 | a,b |\n| 2 | c |\n");
        assert_eq!(parse_markdown_rows(&sample().to_markdown()), vec![vec!["1", "a,b"], vec!["2", "c"]]);
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(sample().to_csv().unwrap(), "x,y\n1,\"a,b\"\n2,c\n");
    }

    #[test]
    fn dot_requires_a_graph() {
        let doc = Document { title: "t".into(), ..Default::default() };
        assert!(matches!(doc.render(Format::Dot), Err(CliError::Usage(_))));
    }

    #[test]
    fn format_names_round_trip() {
        for f in [Format::Markdown, Format::Csv, Format::Json, Format::Dot] {
            assert_eq!(f.name().parse::<Format>().unwrap(), f);
        }
    }
}
