use std::fmt;

use super::blade::{blade_sign, check_dim, Sign};
use crate::{Error, Result};

/// Three distinct nonzero indices with `a xor b = c`, in a chosen order.
///
/// Every trip spans a quaternion copy with the real unit. The orientation is
/// `+` when `e_a e_b = +e_c` (equivalently for every cyclic rotation).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trip {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Trip {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 || a == b || a ^ b != c {
            return Err(Error::NotATrip { a, b, c });
        }
        Ok(Trip { a, b, c })
    }

    pub fn indices(&self) -> [u32; 3] {
        [self.a, self.b, self.c]
    }

    pub fn orientation(&self) -> Sign {
        blade_sign(self.a, self.b)
    }

    pub fn contains(&self, index: u32) -> bool {
        self.indices().contains(&index)
    }

    /// Ascending signing order: the positively oriented rotation that starts
    /// at the smallest index.
    pub fn aso(&self) -> Trip {
        let lo = self.a.min(self.b).min(self.c);
        let (x, y) = match lo {
            l if l == self.a => (self.b, self.c),
            l if l == self.b => (self.c, self.a),
            _ => (self.a, self.b),
        };
        // rotations preserve orientation, a transposition flips it
        let (x, y) = if self.orientation().is_plus() { (x, y) } else { (y, x) };
        Trip { a: lo, b: x, c: y }
    }

    pub fn is_aso(&self) -> bool {
        *self == self.aso()
    }

    pub fn max_index(&self) -> u32 {
        self.a.max(self.b).max(self.c)
    }
}

impl fmt::Display for Trip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Orientation of the trip `(a, b, c)`: `+` iff `e_a e_b = +e_c`.
pub fn trip_orientation(a: u32, b: u32, c: u32) -> Result<Sign> {
    Ok(Trip::new(a, b, c)?.orientation())
}

/// Which trips [`enumerate_trips`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripFilter {
    /// All indices below 8.
    Octonion,
    /// Largest index in 8..16.
    Sedenion,
    All,
}

impl TripFilter {
    fn accepts(self, trip: &Trip) -> bool {
        let max = trip.max_index();
        match self {
            TripFilter::Octonion => max < 8,
            TripFilter::Sedenion => (8..16).contains(&max),
            TripFilter::All => true,
        }
    }
}

/// Every trip of the 2^n-ions passing `filter`, once each, in ASO form,
/// sorted lexicographically.
pub fn enumerate_trips(n: u32, filter: TripFilter) -> Result<Vec<Trip>> {
    check_dim(n)?;
    let size = 1u32 << n;
    let mut out = Vec::new();
    for a in 1..size {
        for b in (a + 1)..size {
            let c = a ^ b;
            if c <= b {
                continue;
            }
            let trip = Trip { a, b, c }.aso();
            if filter.accepts(&trip) {
                out.push(trip);
            }
        }
    }
    out.sort();
    Ok(out)
}
