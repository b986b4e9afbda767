use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::blade::{blade_sign, check_dim, check_index, Sign};
use crate::{Error, Result};

/// Exact coefficient ring for [`Hypercomplex`]. Blanket-implemented for any
/// signed ring type (`i64`, `BigInt`, `Ratio<i64>`, ...).
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Add<Output = Self> + Mul<Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = T> + Add<Output = T> + Mul<Output = T>
{
}

/// An element of the 2^n-ions with exact coefficients, stored sparsely.
///
/// Zero coefficients are never stored, so structural equality is algebraic
/// equality and `is_zero` is an emptiness test.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypercomplex<T = i64> {
    n: u32,
    coeffs: BTreeMap<u32, T>,
}

impl<T: Coefficient> Hypercomplex<T> {
    pub fn zero(n: u32) -> Result<Self> {
        check_dim(n)?;
        Ok(Hypercomplex { n, coeffs: BTreeMap::new() })
    }

    /// The basis unit `e_index`.
    pub fn basis(n: u32, index: u32) -> Result<Self> {
        Self::from_terms(n, [(index, T::one())])
    }

    /// Sums the given `(index, coefficient)` terms; repeated indices add up.
    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (u32, T)>) -> Result<Self> {
        let mut out = Self::zero(n)?;
        for (index, coeff) in terms {
            check_index(index, n)?;
            out.accumulate(index, coeff);
        }
        Ok(out)
    }

    pub fn dim_exponent(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `e_index` (zero when absent).
    pub fn coeff(&self, index: u32) -> T {
        self.coeffs.get(&index).cloned().unwrap_or_else(T::zero)
    }

    /// Nonzero terms in ascending index order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &T)> + '_ {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Converts every coefficient, e.g. integers into rationals.
    pub fn map_coeffs<U: Coefficient>(&self, mut f: impl FnMut(&T) -> U) -> Hypercomplex<U> {
        let mut out = Hypercomplex { n: self.n, coeffs: BTreeMap::new() };
        for (&i, c) in &self.coeffs {
            out.accumulate(i, f(c));
        }
        out
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = Hypercomplex { n: self.n, coeffs: BTreeMap::new() };
        for (&i, c) in &self.coeffs {
            out.accumulate(i, c.clone() * k.clone());
        }
        out
    }

    fn accumulate(&mut self, index: u32, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(index).or_insert_with(T::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.accumulate(i, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// Bilinear extension of the basis product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = Hypercomplex { n: self.n, coeffs: BTreeMap::new() };
        for (&i, x) in &self.coeffs {
            for (&j, y) in &other.coeffs {
                let term = x.clone() * y.clone();
                let term = match blade_sign(i, j) {
                    Sign::Plus => term,
                    Sign::Minus => -term,
                };
                out.accumulate(i ^ j, term);
            }
        }
        Ok(out)
    }
}

impl Hypercomplex<i64> {
    /// Greatest common divisor of the coefficients' absolute values (0 for
    /// the zero element).
    pub fn content(&self) -> i64 {
        self.coeffs.values().fold(0i64, |g, &c| g.gcd(&c))
    }

    /// Divides out the positive content, returning `(content, primitive part)`.
    pub fn primitive_part(&self) -> (i64, Self) {
        let g = self.content();
        if g == 0 {
            return (0, self.clone());
        }
        let coeffs = self.coeffs.iter().map(|(&i, &c)| (i, c / g)).collect();
        (g, Hypercomplex { n: self.n, coeffs })
    }
}

impl<T: Coefficient> Neg for &Hypercomplex<T> {
    type Output = Hypercomplex<T>;

    fn neg(self) -> Hypercomplex<T> {
        let coeffs = self.coeffs.iter().map(|(&i, c)| (i, -c.clone())).collect();
        Hypercomplex { n: self.n, coeffs }
    }
}

impl<T: Coefficient> Neg for Hypercomplex<T> {
    type Output = Hypercomplex<T>;

    fn neg(self) -> Hypercomplex<T> {
        -&self
    }
}

// Operator forms panic on dimension mismatch; use the `checked_*` methods
// when operands come from untrusted input.
impl<T: Coefficient> Add for &Hypercomplex<T> {
    type Output = Hypercomplex<T>;

    fn add(self, rhs: &Hypercomplex<T>) -> Hypercomplex<T> {
        self.checked_add(rhs).expect("hypercomplex addition across dimensions")
    }
}

impl<T: Coefficient> Sub for &Hypercomplex<T> {
    type Output = Hypercomplex<T>;

    fn sub(self, rhs: &Hypercomplex<T>) -> Hypercomplex<T> {
        self.checked_sub(rhs).expect("hypercomplex subtraction across dimensions")
    }
}

impl<T: Coefficient> Mul for &Hypercomplex<T> {
    type Output = Hypercomplex<T>;

    fn mul(self, rhs: &Hypercomplex<T>) -> Hypercomplex<T> {
        self.checked_mul(rhs).expect("hypercomplex product across dimensions")
    }
}

impl<T: Coefficient + fmt::Display> fmt::Display for Hypercomplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})e{i}")?;
        }
        Ok(())
    }
}

impl<T: Coefficient> fmt::Debug for Hypercomplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypercomplex").field("n", &self.n).field("coeffs", &self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hc(terms: &[(u32, i64)]) -> Hypercomplex {
        Hypercomplex::from_terms(4, terms.iter().copied()).unwrap()
    }

    #[test]
    fn zero_divisor_pair() {
        let x = hc(&[(3, 1), (10, 1)]);
        let y = hc(&[(6, 1), (15, -1)]);
        assert!((&x * &y).is_zero());
    }

    #[test]
    fn switched_product_doubles() {
        let x = hc(&[(3, 1), (10, 1)]);
        let y = hc(&[(6, 1), (15, 1)]);
        assert_eq!(&x * &y, hc(&[(5, 2), (12, 2)]));
    }

    #[test]
    fn real_unit_is_identity() {
        let x = hc(&[(0, 4), (3, -2), (13, 7)]);
        let one = Hypercomplex::basis(4, 0).unwrap();
        assert_eq!(&x * &one, x);
        assert_eq!(&one * &x, x);
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let x = hc(&[(3, 1), (3, -1), (5, 0)]);
        assert!(x.is_zero());
        assert_eq!(x.len(), 0);
    }

    #[test]
    fn mismatched_dimensions() {
        let x = Hypercomplex::<i64>::basis(4, 1).unwrap();
        let y = Hypercomplex::<i64>::basis(5, 1).unwrap();
        assert_eq!(x.checked_mul(&y), Err(Error::DimensionMismatch { left: 4, right: 5 }));
        assert!(Hypercomplex::<i64>::basis(4, 16).is_err());
    }

    #[test]
    fn primitive_part() {
        let (g, p) = hc(&[(5, -4), (12, 6)]).primitive_part();
        assert_eq!(g, 2);
        assert_eq!(p, hc(&[(5, -2), (12, 3)]));
    }
}
