use std::collections::BTreeSet;

use super::boxkite::{BoxKite, Sail};
use crate::algebra::{enumerate_trips, Trip, TripFilter};
use crate::{Error, Result};

/// Sail order of the GoTo listing.
pub const GOTO_ORDER: [Sail; 4] = [Sail::ABC, Sail::ADE, Sail::FDB, Sail::FCE];

fn check_otrip(otrip: &Trip) -> Result<()> {
    if otrip.max_index() >= 8 {
        let [a, b, c] = otrip.indices();
        return Err(Error::NotAnOTrip { a, b, c });
    }
    Ok(())
}

/// Axes of the quasi-octonion "automorpheme" over an O-trip: the trip plus
/// the four sedenion units in 9..16 that are not `o xor 8` for a trip member.
pub fn automorpheme(otrip: &Trip) -> Result<BTreeSet<u32>> {
    check_otrip(otrip)?;
    let excluded: BTreeSet<u32> = otrip.indices().iter().map(|o| o ^ 8).collect();
    Ok(otrip.indices().into_iter().chain((9..16).filter(|i| !excluded.contains(i))).collect())
}

/// Axes of the octonion copy over an O-trip: the trip, `8`, and `o xor 8`
/// for each trip member.
pub fn octonion_copy(otrip: &Trip) -> Result<BTreeSet<u32>> {
    check_otrip(otrip)?;
    Ok(otrip.indices().into_iter().chain([8]).chain(otrip.indices().map(|o| o ^ 8)).collect())
}

/// The ZD-free "8-ball" quaternion `{s, 2^(n-1), 2^(n-1) + s}` in ASO form.
pub fn eight_ball(n: u32, s: u32) -> Result<Trip> {
    let half = 1u32 << n.saturating_sub(1);
    if n < 4 || s == 0 || s >= half {
        return Err(Error::StrutOutOfRange { s, n });
    }
    Ok(Trip::new(s, half, half + s)?.aso())
}

/// The O-trip formed by a sail's low indices, in ASO form.
pub fn sail_otrip(bk: &BoxKite, sail: Sail) -> Result<Trip> {
    let [x, y, z] = sail.vertices.map(|v| bk.vertex(v).low());
    Ok(Trip::new(x, y, z)?.aso())
}

/// 1-based positions, in the sorted O-trip list, of the O-trips of sails
/// ABC, ADE, FDB, FCE.
pub fn goto_numbers(bk: &BoxKite) -> Result<[usize; 4]> {
    if bk.dim_exponent() != 4 {
        return Err(Error::UnsupportedDimension(bk.dim_exponent()));
    }
    let otrips = enumerate_trips(3, TripFilter::All)?;
    let mut out = [0; 4];
    for (slot, sail) in GOTO_ORDER.iter().enumerate() {
        let trip = sail_otrip(bk, *sail)?;
        out[slot] = otrips.iter().position(|t| *t == trip).expect("sail low parts form an O-trip") + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kite::build_box_kite;

    fn set(xs: &[u32]) -> BTreeSet<u32> {
        xs.iter().copied().collect()
    }

    #[test]
    fn automorphemes_of_box_kite_one() {
        let t = |a, b, c| Trip::new(a, b, c).unwrap();
        assert_eq!(automorpheme(&t(3, 6, 5)).unwrap(), set(&[3, 6, 5, 9, 10, 12, 15]));
        assert_eq!(automorpheme(&t(3, 4, 7)).unwrap(), set(&[3, 4, 7, 9, 10, 13, 14]));
        assert_eq!(automorpheme(&t(2, 4, 6)).unwrap(), set(&[2, 4, 6, 9, 11, 13, 15]));
        assert!(automorpheme(&t(1, 8, 9)).is_err());
    }

    #[test]
    fn octonion_copy_axes() {
        let t = Trip::new(1, 2, 3).unwrap();
        assert_eq!(octonion_copy(&t).unwrap(), set(&[1, 2, 3, 8, 9, 10, 11]));
    }

    #[test]
    fn goto() {
        assert_eq!(goto_numbers(&build_box_kite(1).unwrap()).unwrap(), [7, 6, 4, 5]);
        assert_eq!(goto_numbers(&build_box_kite(4).unwrap()).unwrap(), [1, 3, 5, 7]);
    }

    #[test]
    fn eight_balls() {
        assert_eq!(eight_ball(4, 1).unwrap(), Trip::new(1, 8, 9).unwrap());
        assert_eq!(eight_ball(4, 3).unwrap(), Trip::new(3, 8, 11).unwrap());
        assert!(eight_ball(4, 8).is_err());
    }
}
