use crate::algebra::{Sign, Trip};
use crate::kite::{BoxKite, Sail, SailKind, Vertex};
use crate::Result;

/// One of a sail's four trips, written in vertex-slot order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyncTrip {
    pub indices: [u32; 3],
    pub orientation: Sign,
}

/// The four trips of one sail and whether they follow the trip-sync pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SailSync {
    pub sail: Sail,
    pub kind: SailKind,
    /// `(a, b, c)`, `(a, B, C)`, `(A, b, C)`, `(A, B, c)`: lower case are the
    /// vertices' low indices, upper case their high indices.
    pub trips: [SyncTrip; 4],
    /// Orientation the trip-sync pattern predicts for each trip.
    pub expected: [Sign; 4],
}

impl SailSync {
    pub fn holds(&self) -> bool {
        self.trips.iter().zip(self.expected.iter()).all(|(t, &e)| t.orientation == e)
    }

    /// Trips whose orientation contradicts the prediction.
    pub fn counterexamples(&self) -> Vec<SyncTrip> {
        self.trips.iter().zip(self.expected.iter()).filter(|(t, &e)| t.orientation != e).map(|(t, _)| *t).collect()
    }

    pub fn positive_count(&self) -> usize {
        self.trips.iter().filter(|t| t.orientation.is_plus()).count()
    }
}

/// Trip-sync data for every sail of a box-kite, in `ABC, ADE, FCE, FDB` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripSyncReport {
    pub n: u32,
    pub s: u32,
    pub vertices: Vec<(u32, u32)>,
    pub sails: Vec<SailSync>,
}

impl TripSyncReport {
    pub fn holds(&self) -> bool {
        self.sails.iter().all(SailSync::holds)
    }
}

/// Evaluates the orientation of each sail's O-trip and three mixed trips.
///
/// Predicted pattern: all four positive on the zigzag sail; on a trefoil,
/// only the O-trip and the mixed trip that keeps the low index of the
/// sail's single `A`, `B` or `C` vertex are positive.
pub fn trip_sync_report(bk: &BoxKite) -> Result<TripSyncReport> {
    let mut sails = Vec::with_capacity(4);
    for sail in Sail::ALL {
        let kind = bk.sail_kind(sail);
        let lo = sail.vertices.map(|v| bk.vertex(v).low());
        let hi = sail.vertices.map(|v| bk.vertex(v).high());
        let patterns = [[lo[0], lo[1], lo[2]], [lo[0], hi[1], hi[2]], [hi[0], lo[1], hi[2]], [hi[0], hi[1], lo[2]]];
        let mut trips = [SyncTrip { indices: [0; 3], orientation: Sign::Plus }; 4];
        for (slot, idx) in patterns.iter().enumerate() {
            let trip = Trip::new(idx[0], idx[1], idx[2])?;
            trips[slot] = SyncTrip { indices: *idx, orientation: trip.orientation() };
        }
        let expected = match kind {
            SailKind::Zigzag => [Sign::Plus; 4],
            SailKind::Trefoil => {
                let mut e = [Sign::Plus, Sign::Minus, Sign::Minus, Sign::Minus];
                let shared = sail.vertices.iter().position(|v| matches!(v, Vertex::A | Vertex::B | Vertex::C));
                e[1 + shared.expect("every trefoil touches ABC")] = Sign::Plus;
                e
            }
        };
        sails.push(SailSync { sail, kind, trips, expected });
    }
    Ok(TripSyncReport {
        n: bk.dim_exponent(),
        s: bk.strut_constant(),
        vertices: bk.vertices().iter().map(|a| (a.low(), a.high())).collect(),
        sails,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kite::build_box_kite;

    fn orient(sync: &SailSync) -> Vec<([u32; 3], bool)> {
        sync.trips.iter().map(|t| (t.indices, t.orientation.is_plus())).collect()
    }

    #[test]
    fn box_kite_one() {
        let report = trip_sync_report(&build_box_kite(1).unwrap()).unwrap();
        assert!(report.holds());
        assert_eq!(
            orient(&report.sails[0]),
            vec![([3, 6, 5], true), ([3, 15, 12], true), ([10, 6, 12], true), ([10, 15, 5], true)]
        );
        assert_eq!(
            orient(&report.sails[1]),
            vec![([3, 4, 7], true), ([3, 13, 14], true), ([10, 4, 14], false), ([10, 13, 7], false)]
        );
        let fdb = &report.sails[3];
        assert_eq!(fdb.sail, Sail::FDB);
        let positive_mixed: Vec<_> = fdb.trips[1..].iter().filter(|t| t.orientation.is_plus()).collect();
        assert_eq!(positive_mixed.len(), 1);
        assert_eq!(positive_mixed[0].indices, [11, 13, 6]);
    }

    #[test]
    fn all_sedenion_kites_sync() {
        for s in 1..8 {
            let report = trip_sync_report(&build_box_kite(s).unwrap()).unwrap();
            assert!(report.holds(), "box-kite {s}");
            for sail in &report.sails {
                let expected = if sail.kind == SailKind::Zigzag { 4 } else { 2 };
                assert_eq!(sail.positive_count(), expected);
            }
        }
    }
}
