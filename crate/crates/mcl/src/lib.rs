//! Exact computations on the rank-2 Picard lattice of the space of degree-3
//! rational space curves, together with the Gröbner-basis machinery needed to
//! check the fiber geometry of the flip between the stable-map and
//! Hilbert-scheme compactifications.
//!
//! Everything is carried out over the rationals with no floating point and no
//! tolerances: two values agree when they are equal.

pub mod cones;
pub mod exact;
pub mod ideal;
pub mod picard;
pub mod poly;
pub mod verify;
