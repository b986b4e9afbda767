use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::{CliError, Result};

/// `--strut` argument: `all`, a single value, a range `a-b`, or a comma list
/// of either.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrutSelection {
    All,
    Listed(Vec<(u32, u32)>),
}

impl StrutSelection {
    pub fn single(s: u32) -> Self {
        StrutSelection::Listed(vec![(s, s)])
    }

    /// Expands to sorted strut constants valid for `2^n`-ions.
    pub fn resolve(&self, n: u32) -> Result<Vec<u32>> {
        let half = 1u32 << (n - 1);
        match self {
            StrutSelection::All => Ok((1..half).collect()),
            StrutSelection::Listed(ranges) => {
                let mut out = BTreeSet::new();
                for &(a, b) in ranges {
                    if a == 0 || b >= half {
                        return Err(CliError::usage(format!(
                            "strut {a}-{b} outside 1..{} for dimension {}",
                            half - 1,
                            1u64 << n
                        )));
                    }
                    out.extend(a..=b);
                }
                Ok(out.into_iter().collect())
            }
        }
    }

    /// The one strut constant this selection names, if it names exactly one.
    pub fn as_single(&self) -> Option<u32> {
        match self {
            StrutSelection::Listed(r) if r.len() == 1 && r[0].0 == r[0].1 => Some(r[0].0),
            _ => None,
        }
    }
}

impl FromStr for StrutSelection {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        if text == "all" {
            return Ok(StrutSelection::All);
        }
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("invalid strut constant {t:?}"));
        let ranges = text
            .split(',')
            .map(|part| match part.split_once('-') {
                Some((a, b)) => {
                    let (a, b) = (num(a)?, num(b)?);
                    if a > b {
                        return Err(format!("empty range {part:?}"));
                    }
                    Ok((a, b))
                }
                None => num(part).map(|a| (a, a)),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(StrutSelection::Listed(ranges))
    }
}

impl fmt::Display for StrutSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrutSelection::All => write!(f, "all"),
            StrutSelection::Listed(r) => {
                let parts: Vec<String> =
                    r.iter().map(|&(a, b)| if a == b { a.to_string() } else { format!("{a}-{b}") }).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_lists() {
        let sel: StrutSelection = "1-3,9,16".parse().unwrap();
        assert_eq!(sel.resolve(6).unwrap(), vec![1, 2, 3, 9, 16]);
        assert_eq!(sel.to_string(), "1-3,9,16");
        assert_eq!(sel.as_single(), None);
        assert_eq!("5".parse::<StrutSelection>().unwrap().as_single(), Some(5));
    }

    #[test]
    fn all_spans_the_low_half() {
        assert_eq!(StrutSelection::All.resolve(4).unwrap(), (1..8).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_out_of_range() {
        assert!("8".parse::<StrutSelection>().unwrap().resolve(4).is_err());
        assert!("0".parse::<StrutSelection>().unwrap().resolve(5).is_err());
        assert!("4-2".parse::<StrutSelection>().is_err());
        assert!("x".parse::<StrutSelection>().is_err());
    }
}
