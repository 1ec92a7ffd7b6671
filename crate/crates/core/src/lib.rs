//! Exact combinatorial engine for curves, pants decompositions and
//! subsurface projections on low-complexity surfaces.

pub mod cornered;
pub mod farey;
pub mod lamination;
pub mod pants;
pub mod window;
