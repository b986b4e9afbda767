//! Cayley-Dickson basis arithmetic, trips and finite unit loops.

mod blade;
mod hypercomplex;
mod trip;
mod unit_loop;

pub use blade::{blade_mul, blade_sign, BasisBlade, Sign};
pub use hypercomplex::{Coefficient, Hypercomplex};
pub use trip::{enumerate_trips, trip_orientation, Trip, TripFilter};
pub use unit_loop::{check_identity, loop_closure, IdentityCheck, LoopElement, LoopIdentity, UnitLoop};
