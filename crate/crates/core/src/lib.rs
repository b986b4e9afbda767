//! Exact-integer Cayley-Dickson arithmetic and the zero-divisor geometry of
//! the sedenions and higher 2^n-ions.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`]: signed basis products (index = XOR, sign by the doubling
//!   recursion), integer multivectors, trips and finite unit loops.
//! * [`kite`]: assessors, diagonals, box-kites with computed edge signs,
//!   sails, tray-racks, trigram codes, automorphemes and GoTo numbers.
//! * [`lariat`]: products of oriented lines modulo positive scale, giving the
//!   quizzical quaternion lariats, mock octonion tables, the 16x16 switching
//!   yard and the trip-sync report for each box-kite.
//! * [`emanation`]: assessor enumeration and box-kite search for arbitrary
//!   `(n, s)`, pathion lifts, trip-sync sweeps and census counts.
//!
//! Everything stays in the integers; zero tests are exact.

pub mod algebra;
pub mod emanation;
mod error;
pub mod kite;
pub mod lariat;

pub use algebra::{
    blade_mul, check_identity, enumerate_trips, loop_closure, trip_orientation, BasisBlade, Hypercomplex, LoopIdentity,
    Sign, Trip, TripFilter, UnitLoop,
};
pub use emanation::{
    census, emanation_assessors, find_box_kites, pathion_lift, trip_sync_sweep, zd_graph, Census, EmanationContext,
    ZdGraph,
};
pub use error::{Error, Result};
pub use kite::{build_box_kite, Assessor, BoxKite, Diagonal, EdgeSign, Orientation, Sail, Strut, Vertex};
pub use lariat::{lariat_product, Cell, LariatTable, LineSymbol};

/// Largest supported dimension exponent (algebras of dimension 2^20).
pub const MAX_DIM_EXPONENT: u32 = 20;
