//! Exact projective geometry of P³: points, planes, Plücker lines,
//! transforms, and the placement of a fourth line relative to the canonical
//! skew triple.

mod classify;
mod objects;
mod transform;
mod transversal;

pub use classify::{classify_l4, classify_l4_with_transform, CaseTag};
pub use objects::{lines_skew, pairing, LineP3, PlaneP3, PointP3, PLUCKER_PAIRS};
pub use transform::{
    canonical_lines, m_abc, m_abc_symbolic, normalize_three_skew_lines, solve_abc, ProjTransform,
};
pub use transversal::{transversals_of_four_lines, TransversalResult};
