//! Sedenion-style zero-divisor structure: assessors and their diagonals,
//! box-kites with computed edge signs, sails, tray-racks, trigram codes,
//! automorphemes and GoTo numbers.
//!
//! Box-kites are built for any dimension; the sedenion-only helpers
//! ([`goto_numbers`], [`automorpheme`]) reject other dimensions.

mod assessor;
mod automorpheme;
mod boxkite;

pub use assessor::{
    all_assessors, assessors_for_strut, edge_sign, is_zero_divisor_pair, Assessor, Diagonal, EdgeSign, Orientation,
};
pub use automorpheme::{automorpheme, eight_ball, goto_numbers, octonion_copy, sail_otrip, GOTO_ORDER};
pub use boxkite::{
    build_box_kite, orientation_pattern, sail_six_cycle, tray_racks, trigram_code, BoxKite, Sail, SailKind, Strut,
    TrayRack, Trigram, Vertex, ZeroProduct, EDGES, TRIGRAM_ORDER,
};
