use std::fmt;
use std::ops::{Mul, Neg};

use crate::{Error, Result, MAX_DIM_EXPONENT};

/// A sign in {+1, -1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// `Plus` for positive integers, `Minus` for negative ones, `None` for zero.
    pub fn of(value: i64) -> Option<Sign> {
        match value.signum() {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A signed basis unit `±e_index` of a 2^n-ion algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisBlade {
    pub sign: Sign,
    pub index: u32,
}

impl BasisBlade {
    pub fn new(sign: Sign, index: u32) -> Self {
        BasisBlade { sign, index }
    }

    pub fn positive(index: u32) -> Self {
        BasisBlade::new(Sign::Plus, index)
    }
}

impl Neg for BasisBlade {
    type Output = BasisBlade;

    fn neg(self) -> BasisBlade {
        BasisBlade::new(-self.sign, self.index)
    }
}

impl fmt::Display for BasisBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}e{}", self.sign, self.index)
    }
}

pub(crate) fn check_dim(n: u32) -> Result<()> {
    if n > MAX_DIM_EXPONENT {
        return Err(Error::UnsupportedDimension(n));
    }
    Ok(())
}

pub(crate) fn check_index(index: u32, n: u32) -> Result<()> {
    check_dim(n)?;
    if index >= 1 << n {
        return Err(Error::IndexOutOfRange { index, n });
    }
    Ok(())
}

/// Sign of the conjugate of a basis unit: the real unit is self-conjugate,
/// every imaginary unit flips.
#[inline]
fn conj_sign(index: u32) -> Sign {
    if index == 0 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Sign of `e_p * e_q` in the 2^n-ions.
///
/// Doubling rule: `(a, b)(c, d) = (ac - d*b, da + bc*)`, where `*` is
/// conjugation. Restricted to basis units each level reduces to one of four
/// cases on the top bit, so the recursion unrolls into a loop over levels.
/// The result depends only on `p` and `q` (lower algebras embed unchanged),
/// so callers need not pass `n` once indices are validated.
pub fn blade_sign(mut p: u32, mut q: u32) -> Sign {
    let mut sign = Sign::Plus;
    let top = 32 - (p | q).leading_zeros();
    for level in (1..=top).rev() {
        let half = 1u32 << (level - 1);
        match (p >= half, q >= half) {
            (false, false) => {}
            // (a, 0)(0, d) = (0, d a)
            (false, true) => (p, q) = (q - half, p),
            // (0, b)(c, 0) = (0, b c*)
            (true, false) => {
                sign = sign * conj_sign(q);
                p -= half;
            }
            // (0, b)(0, d) = (-d* b, 0)
            (true, true) => {
                sign = sign * -conj_sign(q - half);
                (p, q) = (q - half, p - half);
            }
        }
    }
    sign
}

/// Product of basis units `e_a * e_b` in the 2^n-ions: index `a xor b`,
/// sign from the doubling recursion.
pub fn blade_mul(a: u32, b: u32, n: u32) -> Result<BasisBlade> {
    check_index(a, n)?;
    check_index(b, n)?;
    Ok(BasisBlade::new(blade_sign(a, b), a ^ b))
}
