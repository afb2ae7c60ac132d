use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::configs::{squared_distance, SphereFamilyConfig};
use crate::counter::sphere_rich_quadruples;
use crate::rational::Rational;

/// Distinct squared distances from each pin. `P` is covered by `sizes[i]`
/// spheres around pin `i`, so every point of `P` is rich for the four
/// families of covering spheres.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PinnedDistanceReport {
    pub points: u64,
    pub sizes: [usize; 4],
    pub max_distances: usize,
    /// `max_distances / |P|^{3/8}`.
    pub ratio: f64,
    /// `ln max_distances / ln |P|`, absent for `|P| ≤ 1`.
    pub log_exponent: Option<f64>,
}

impl PinnedDistanceReport {
    fn new(points: u64, sizes: [usize; 4]) -> PinnedDistanceReport {
        let max_distances = sizes.into_iter().max().unwrap_or(0);
        let p = points as f64;
        let ratio = if points == 0 { 0.0 } else { max_distances as f64 / p.powf(3.0 / 8.0) };
        let log_exponent = (points > 1).then(|| (max_distances as f64).ln() / p.ln());
        PinnedDistanceReport { points, sizes, max_distances, ratio, log_exponent }
    }
}

/// Distances are compared squared, which keeps them rational.
pub fn pinned_distance_demo(pins: &[[Rational; 3]; 4], points: &[[Rational; 3]]) -> PinnedDistanceReport {
    let distinct: BTreeSet<&[Rational; 3]> = points.iter().collect();
    let sizes = pins.each_ref().map(|q| {
        distinct.iter().map(|p| squared_distance(p, q)).collect::<BTreeSet<_>>().len()
    });
    PinnedDistanceReport::new(distinct.len() as u64, sizes)
}

/// The demo on the real rich points of four sphere families, pinned at the
/// centres. Irrational points are never constructed: a rich point is fixed
/// by its radius quadruple, so the distance sets are the radii that occur.
pub fn pinned_distances_of_construction(families: [&SphereFamilyConfig; 4]) -> PinnedDistanceReport {
    let (quads, _) = sphere_rich_quadruples(families);
    let mut sets: [BTreeSet<&Rational>; 4] = Default::default();
    let mut points = 0;
    for (t, count) in &quads {
        if *count == 0 {
            continue;
        }
        points += count;
        for (set, ti) in sets.iter_mut().zip(t) {
            set.insert(ti);
        }
    }
    PinnedDistanceReport::new(points, sets.map(|s| s.len()))
}
