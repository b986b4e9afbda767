use std::fmt;

use crate::algebra::{Hypercomplex, Sign};
use crate::{Error, Result};

/// A plane spanned by a low unit `e_low` and a high unit `e_high` whose
/// diagonals `e_low ± e_high` carry primitive zero divisors.
///
/// With `H = 2^(n-1)`: `0 < low < H < high < 2^n` and `low xor high = H + s`
/// for a strut constant `0 < s < H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assessor {
    n: u32,
    low: u32,
    high: u32,
}

impl Assessor {
    pub fn new(n: u32, low: u32, high: u32) -> Result<Self> {
        let invalid = Error::InvalidAssessor { low, high, n };
        if !(4..=crate::MAX_DIM_EXPONENT).contains(&n) {
            return Err(invalid);
        }
        let half = 1u32 << (n - 1);
        let excess = low ^ high;
        if low == 0 || low >= half || high <= half || high >= 2 * half || excess == half {
            return Err(invalid);
        }
        Ok(Assessor { n, low, high })
    }

    pub fn dim_exponent(&self) -> u32 {
        self.n
    }

    pub fn low(&self) -> u32 {
        self.low
    }

    pub fn high(&self) -> u32 {
        self.high
    }

    /// `low xor high`, the "excess" `2^(n-1) + s`.
    pub fn excess(&self) -> u32 {
        self.low ^ self.high
    }

    pub fn strut_constant(&self) -> u32 {
        self.excess() ^ (1 << (self.n - 1))
    }

    pub fn diagonal(&self, orientation: Orientation) -> Diagonal {
        Diagonal { assessor: *self, orientation }
    }

    pub fn slash(&self) -> Diagonal {
        self.diagonal(Orientation::Slash)
    }

    pub fn backslash(&self) -> Diagonal {
        self.diagonal(Orientation::Backslash)
    }

    /// The same low unit paired with the high unit one level up
    /// (`high + 2^(n-1)` in the 2^(n+1)-ions).
    pub fn lift(&self) -> Result<Assessor> {
        Assessor::new(self.n + 1, self.low, self.high + (1 << (self.n - 1)))
    }
}

impl fmt::Display for Assessor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.low, self.high)
    }
}

/// Which diagonal of an assessor: `/` is `e_low + e_high`, `\` is
/// `e_low - e_high`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Slash,
    Backslash,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Slash => Orientation::Backslash,
            Orientation::Backslash => Orientation::Slash,
        }
    }

    pub fn high_sign(self) -> Sign {
        match self {
            Orientation::Slash => Sign::Plus,
            Orientation::Backslash => Sign::Minus,
        }
    }

    pub fn glyph(self) -> char {
        match self {
            Orientation::Slash => '/',
            Orientation::Backslash => '\\',
        }
    }

    /// Orientation of the next diagonal along an edge: kept on `+`, flipped
    /// on `-`.
    pub fn across(self, edge: EdgeSign) -> Orientation {
        match edge {
            EdgeSign::Plus => self,
            EdgeSign::Minus => self.flipped(),
        }
    }
}

/// An oriented diagonal line of an assessor plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    pub assessor: Assessor,
    pub orientation: Orientation,
}

impl Diagonal {
    /// Canonical representative, coefficient `+1` on the low unit.
    pub fn representative(&self) -> Hypercomplex {
        let a = &self.assessor;
        Hypercomplex::from_terms(a.n, [(a.low, 1), (a.high, self.orientation.high_sign().to_i64())])
            .expect("assessor indices fit their dimension")
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = self.orientation.high_sign();
        write!(f, "(e{} {} e{})", self.assessor.low, sign, self.assessor.high)
    }
}

/// Box-kite edge label: `+` when like-oriented diagonals zero-divide, `-`
/// when oppositely oriented ones do.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeSign {
    Plus,
    Minus,
}

impl EdgeSign {
    pub fn toggled(self) -> EdgeSign {
        match self {
            EdgeSign::Plus => EdgeSign::Minus,
            EdgeSign::Minus => EdgeSign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            EdgeSign::Plus => '+',
            EdgeSign::Minus => '-',
        }
    }
}

impl fmt::Display for EdgeSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// True iff the canonical representatives multiply to exactly zero.
pub fn is_zero_divisor_pair(d1: &Diagonal, d2: &Diagonal) -> Result<bool> {
    Ok(d1.representative().checked_mul(&d2.representative())?.is_zero())
}

/// Edge label between two assessors, or `None` when no diagonal pairing
/// zero-divides. Errors if both pairings do.
pub fn edge_sign(u: &Assessor, v: &Assessor) -> Result<Option<EdgeSign>> {
    use Orientation::{Backslash, Slash};
    let zero = |a: Orientation, b: Orientation| is_zero_divisor_pair(&u.diagonal(a), &v.diagonal(b));
    let like = (zero(Slash, Slash)?, zero(Backslash, Backslash)?);
    let opposite = (zero(Slash, Backslash)?, zero(Backslash, Slash)?);
    match (like, opposite) {
        ((false, false), (false, false)) => Ok(None),
        ((true, true), (false, false)) => Ok(Some(EdgeSign::Plus)),
        ((false, false), (true, true)) => Ok(Some(EdgeSign::Minus)),
        _ => Err(Error::EdgeSignConflict(u.low, v.low)),
    }
}

fn check_strut(n: u32, s: u32) -> Result<()> {
    if !(4..=crate::MAX_DIM_EXPONENT).contains(&n) || s == 0 || s >= 1 << (n - 1) {
        return Err(Error::StrutOutOfRange { s, n });
    }
    Ok(())
}

/// The `2^(n-1) - 2` assessors `(o, o xor (2^(n-1) + s))` for `0 < o < 2^(n-1)`,
/// `o != s`, in ascending low-index order.
pub fn assessors_for_strut(n: u32, s: u32) -> Result<Vec<Assessor>> {
    check_strut(n, s)?;
    let half = 1u32 << (n - 1);
    let excess = half + s;
    (1..half).filter(|&o| o != s).map(|o| Assessor::new(n, o, o ^ excess)).collect()
}

/// Every assessor of the 2^n-ions, grouped by strut constant.
pub fn all_assessors(n: u32) -> Result<Vec<Assessor>> {
    check_strut(n, 1)?;
    let mut out = Vec::new();
    for s in 1..(1u32 << (n - 1)) {
        out.extend(assessors_for_strut(n, s)?);
    }
    Ok(out)
}
