//! Exact brute-force rich-point counters.

use std::collections::{BTreeSet, HashSet};

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::configs::{squared_distance, Config, Pencil2D, PlanarConfig, SheafConfig, SphereFamilyConfig};
use crate::geom3::{lines_skew, LineP3, PlaneP3, PointP3};
use crate::linalg;
use crate::polyalg::MPoly;
use crate::rational::{self, Rational};

/// General-position hypotheses that failed for an input.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flag {
    AxialLinesNotSkew,
    TransversalInAllSheaves,
    CoplanarCenters,
    CollinearCenters,
    CoincidentCenters,
    ConnectingLineRemoved,
    PointAtPencilCenter,
    Classification(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichPointReport {
    /// Four-rich points off the axial lines (and off any common line).
    pub finite_count: u64,
    pub common_line_detected: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub common_lines: Vec<LineP3>,
    pub axial_point_hits: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub axial_hits_per_family: Vec<u64>,
    pub degenerate_flags: Vec<Flag>,
}

/// Rich points of four sheaves, split by where they lie.
#[derive(Debug, Clone, Default)]
pub struct PlaneRichPoints {
    pub finite: BTreeSet<PointP3>,
    /// `axial[k]` holds the rich points on the axial line of sheaf `k`.
    pub axial: [BTreeSet<PointP3>; 4],
    pub common_lines: BTreeSet<LineP3>,
    pub flags: Vec<Flag>,
}

#[derive(Default)]
struct PairOutput {
    points: Vec<PointP3>,
    common: Vec<LineP3>,
}

pub fn rich_points_of_planes(sheaves: [&SheafConfig; 4]) -> PlaneRichPoints {
    let mut flags = Vec::new();
    let skew = (0..4).all(|i| (i + 1..4).all(|j| lines_skew(&sheaves[i].axial, &sheaves[j].axial)));
    if !skew {
        flags.push(Flag::AxialLinesNotSkew);
    }
    let axials: Vec<&LineP3> = sheaves.iter().map(|s| &s.axial).collect();
    let fourth: HashSet<&PlaneP3> = sheaves[3].planes.iter().collect();
    let pairs: Vec<(&PlaneP3, &PlaneP3)> = sheaves[0]
        .planes
        .iter()
        .flat_map(|h1| sheaves[1].planes.iter().map(move |h2| (h1, h2)))
        .collect();

    let outputs: Vec<PairOutput> = pairs
        .par_iter()
        .map(|(h1, h2)| {
            let mut out = PairOutput::default();
            let Ok(m) = LineP3::meet(h1, h2) else {
                return out;
            };
            for h3 in &sheaves[2].planes {
                if m.lies_in(h3) {
                    // m is rich for three sheaves; it is a common line if some
                    // fourth plane contains it, else it meets each of them once
                    if sheaves[3].planes.iter().any(|h4| m.lies_in(h4)) {
                        out.common.push(m.clone());
                    } else {
                        out.points.extend(sheaves[3].planes.iter().filter_map(|h4| m.meet_plane(h4).ok()));
                    }
                } else if let Ok(p) = m.meet_plane(h3) {
                    out.points.push(p);
                }
            }
            out
        })
        .collect();

    let mut rich = PlaneRichPoints { flags, ..Default::default() };
    for out in outputs {
        rich.common_lines.extend(out.common);
        for p in out.points {
            match axials.iter().position(|l| l.contains_point(&p)) {
                Some(3) => {
                    rich.axial[3].insert(p);
                }
                Some(k) => {
                    if axials[3].plane_through(&p).is_ok_and(|h| fourth.contains(&h)) {
                        rich.axial[k].insert(p);
                    }
                }
                None => {
                    if axials[3].plane_through(&p).is_ok_and(|h| fourth.contains(&h)) {
                        rich.finite.insert(p);
                    }
                }
            }
        }
    }
    if !rich.common_lines.is_empty() {
        let on_common = |p: &PointP3| rich.common_lines.iter().any(|l| l.contains_point(p));
        rich.finite.retain(|p| !on_common(p));
        for set in rich.axial.iter_mut() {
            set.retain(|p| !on_common(p));
        }
    }
    rich
}

pub fn count(config: &Config) -> RichPointReport {
    match config {
        Config::Sheaves { .. } => count_planes(config.sheaves().expect("four sheaves")),
        Config::Spheres { .. } => count_spheres(config.families().expect("four families")),
        Config::Planar { pencils, .. } => count_2d(pencils),
    }
}

pub fn count_planes(sheaves: [&SheafConfig; 4]) -> RichPointReport {
    let rich = rich_points_of_planes(sheaves);
    let mut flags = rich.flags;
    if !rich.common_lines.is_empty() {
        flags.push(Flag::TransversalInAllSheaves);
    }
    let per_family: Vec<u64> = rich.axial.iter().map(|s| s.len() as u64).collect();
    RichPointReport {
        finite_count: rich.finite.len() as u64,
        common_line_detected: !rich.common_lines.is_empty(),
        common_lines: rich.common_lines.into_iter().collect(),
        axial_point_hits: per_family.iter().sum(),
        axial_hits_per_family: per_family,
        degenerate_flags: flags,
    }
}

fn sub3(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    std::array::from_fn(|i| &a[i] - &b[i])
}

fn dot3(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn norm2(a: &[Rational; 3]) -> Rational {
    dot3(a, a)
}

pub fn sphere_center_flags(centers: &[[Rational; 3]; 4]) -> Vec<Flag> {
    let mut flags = Vec::new();
    if (0..4).any(|i| (i + 1..4).any(|j| centers[i] == centers[j])) {
        flags.push(Flag::CoincidentCenters);
    }
    let d = |i: usize, j: usize| sub3(&centers[j], &centers[i]);
    let triples = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];
    if triples.iter().any(|&(i, j, k)| cross(&d(i, j), &d(i, k)).iter().all(Zero::is_zero)) {
        flags.push(Flag::CollinearCenters);
    }
    if dot3(&cross(&d(0, 1), &d(0, 2)), &d(0, 3)).is_zero() {
        flags.push(Flag::CoplanarCenters);
    }
    flags
}

/// Real four-rich points of four concentric-sphere families.
///
/// For a triple of spheres about non-collinear centres `c_a, c_b, c_c` the
/// common points are `p0 ± λ v` with `v` normal to the centre plane,
/// `p0` in that plane and `λ² = s` rational. The squared distance to the
/// fourth centre is `|p0 − c_d|² + s|v|² + λ·2v·(c_a − c_d)`, so it is
/// rational when `c_d` is coplanar with the triple, and otherwise only when
/// `s` is a rational square. Each rich point determines its radii, so the
/// sum over triples needs no deduplication.
pub fn count_spheres(families: [&SphereFamilyConfig; 4]) -> RichPointReport {
    let (hits, flags) = sphere_rich_quadruples(families);
    let finite_count = hits.iter().map(|(_, k)| k).sum();
    RichPointReport { finite_count, degenerate_flags: flags, ..Default::default() }
}

/// Squared-radius quadruples (in family order) carrying real rich points,
/// with the number of points on each.
pub fn sphere_rich_quadruples(families: [&SphereFamilyConfig; 4]) -> (Vec<([Rational; 4], u64)>, Vec<Flag>) {
    let centers: [[Rational; 3]; 4] = std::array::from_fn(|i| families[i].center.clone());
    let flags = sphere_center_flags(&centers);
    let order = [(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 3, 1), (1, 2, 3, 0)];
    let Some(&(a, b, c, d)) = order.iter().find(|&&(a, b, c, _)| {
        !cross(&sub3(&centers[b], &centers[a]), &sub3(&centers[c], &centers[a])).iter().all(Zero::is_zero)
    }) else {
        // all centres on one line: rich points come in circles
        return (Vec::new(), flags);
    };
    let (ca, cb, cc, cd) = (&centers[a], &centers[b], &centers[c], &centers[d]);
    let u1 = sub3(cb, ca);
    let u2 = sub3(cc, ca);
    let v = cross(&u1, &u2);
    let v2 = norm2(&v);
    let mu = rational::int(2) * dot3(&v, &sub3(ca, cd));
    // rows: 2u1·p = |cb|² − |ca|² + ta − tb, 2u2·p = |cc|² − |ca|² + ta − tc, v·p = v·ca
    let two = rational::int(2);
    let m = vec![
        u1.iter().map(|x| &two * x).collect::<Vec<_>>(),
        u2.iter().map(|x| &two * x).collect(),
        v.to_vec(),
    ];
    let inv = linalg::inverse(&m).expect("centre triple is not collinear");
    let base_rhs = [norm2(cb) - norm2(ca), norm2(cc) - norm2(ca), dot3(&v, ca)];
    let p_base: [Rational; 3] = linalg::mat_vec(&inv, &base_rhs).try_into().unwrap();
    let col = |j: usize| -> [Rational; 3] { std::array::from_fn(|i| inv[i][j].clone()) };
    let (e0, e1) = (col(0), col(1));
    let radii_d: HashSet<&Rational> = families[d].squared_radii.iter().collect();
    let place = |ta: &Rational, tb: &Rational, tc: &Rational, td: Rational| -> [Rational; 4] {
        let mut q: [Rational; 4] = Default::default();
        q[a] = ta.clone();
        q[b] = tb.clone();
        q[c] = tc.clone();
        q[d] = td;
        q
    };
    let hits: Vec<([Rational; 4], u64)> = families[a]
        .squared_radii
        .par_iter()
        .flat_map_iter(|ta| {
            let mut local = Vec::new();
            for tb in &families[b].squared_radii {
                for tc in &families[c].squared_radii {
                    // p0 = p_base + (ta − tb) e0 + (ta − tc) e1
                    let (k0, k1) = (ta - tb, ta - tc);
                    let p0: [Rational; 3] = std::array::from_fn(|i| &p_base[i] + &k0 * &e0[i] + &k1 * &e1[i]);
                    let s = (ta - norm2(&sub3(&p0, ca))) / &v2;
                    if s.is_negative() {
                        continue;
                    }
                    let t_mid = norm2(&sub3(&p0, cd)) + &s * &v2;
                    if s.is_zero() || mu.is_zero() {
                        if radii_d.contains(&t_mid) {
                            local.push((place(ta, tb, tc, t_mid), if s.is_zero() { 1 } else { 2 }));
                        }
                    } else if let Some(lambda) = rational::sqrt_exact(&s) {
                        for sign in [1, -1] {
                            let t = &t_mid + &mu * &lambda * rational::int(sign);
                            if radii_d.contains(&t) {
                                local.push((place(ta, tb, tc, t), 1));
                            }
                        }
                    }
                }
            }
            local
        })
        .collect();
    (hits, flags)
}

/// Quadruple enumeration: the three difference equations against family 1,
/// a unique point in rank 3, a line meeting the first sphere in rank 2.
pub fn count_spheres_by_quadruples(families: [&SphereFamilyConfig; 4]) -> RichPointReport {
    let centers: [[Rational; 3]; 4] = std::array::from_fn(|i| families[i].center.clone());
    let flags = sphere_center_flags(&centers);
    let c1 = &centers[0];
    let two = rational::int(2);
    let m: Vec<Vec<Rational>> = (1..4).map(|i| sub3(&centers[i], c1).iter().map(|x| &two * x).collect()).collect();
    let rank = linalg::rank(&m);
    let kernel = linalg::nullspace(&m, 3);
    let mut count = 0u64;
    let fam = |i: usize| &families[i].squared_radii;
    for t1 in fam(0) {
        for t2 in fam(1) {
            for t3 in fam(2) {
                for t4 in fam(3) {
                    let ts = [t2, t3, t4];
                    let rhs: Vec<Rational> =
                        (0..3).map(|i| norm2(&centers[i + 1]) - norm2(c1) + t1 - ts[i]).collect();
                    count += match rank {
                        3 => {
                            let p: [Rational; 3] = linalg::solve(&m, &rhs).unwrap().try_into().unwrap();
                            u64::from(&norm2(&sub3(&p, c1)) == t1)
                        }
                        2 => {
                            let v: [Rational; 3] = kernel[0].clone().try_into().unwrap();
                            let mut aug = m.clone();
                            aug.push(v.to_vec());
                            let mut r = rhs.clone();
                            r.push(dot3(&v, c1));
                            match linalg::solve(&aug, &r) {
                                None => 0,
                                Some(p0) => {
                                    let p0: [Rational; 3] = p0.try_into().unwrap();
                                    let w = sub3(&p0, c1);
                                    let qa = norm2(&v);
                                    let qb = &two * dot3(&v, &w);
                                    let qc = norm2(&w) - t1;
                                    let disc = &qb * &qb - rational::int(4) * &qa * &qc;
                                    if disc.is_positive() {
                                        2
                                    } else if disc.is_zero() {
                                        1
                                    } else {
                                        0
                                    }
                                }
                            }
                        }
                        _ => 0,
                    };
                }
            }
        }
    }
    RichPointReport { finite_count: count, degenerate_flags: flags, ..Default::default() }
}

fn slope_between(p: &[Rational; 2], q: &[Rational; 2]) -> Option<Rational> {
    let dx = &q[0] - &p[0];
    (!dx.is_zero()).then(|| (&q[1] - &p[1]) / dx)
}

/// Slopes of the two line pencils after removing the line joining their
/// centres, with a flag if anything was removed.
pub fn effective_slopes(cfg: &PlanarConfig) -> (Vec<Rational>, Vec<Rational>, Vec<Flag>) {
    let (p3, p4) = (cfg.lines1.center(), cfg.lines2.center());
    let connecting = slope_between(p3, p4);
    let mut flags = Vec::new();
    let mut keep = |vals: &[Rational]| -> Vec<Rational> {
        let kept: Vec<Rational> = vals.iter().filter(|t| Some(*t) != connecting.as_ref()).cloned().collect();
        if kept.len() != vals.len() && !flags.contains(&Flag::ConnectingLineRemoved) {
            flags.push(Flag::ConnectingLineRemoved);
        }
        kept
    };
    let s1 = keep(cfg.lines1.values());
    let s2 = keep(cfg.lines2.values());
    (s1, s2, flags)
}

/// Intersection of the lines of slopes `t3` through `p3` and `t4` through `p4`.
pub fn line_intersection(p3: &[Rational; 2], t3: &Rational, p4: &[Rational; 2], t4: &Rational) -> Option<[Rational; 2]> {
    let den = t3 - t4;
    if den.is_zero() {
        return None;
    }
    let x = (t3 * &p3[0] - &p3[1] - t4 * &p4[0] + &p4[1]) / den;
    let y = &p3[1] + t3 * (&x - &p3[0]);
    Some([x, y])
}

pub fn planar_rich_points(cfg: &PlanarConfig) -> (BTreeSet<[Rational; 2]>, Vec<Flag>) {
    let (p3, p4) = (cfg.lines1.center(), cfg.lines2.center());
    let (p1, p2) = (cfg.circles1.center(), cfg.circles2.center());
    let (s1, s2, mut flags) = effective_slopes(cfg);
    if p3 == p4 || p1 == p2 {
        flags.push(Flag::CoincidentCenters);
    }
    let r1: HashSet<&Rational> = cfg.circles1.values().iter().collect();
    let r2: HashSet<&Rational> = cfg.circles2.values().iter().collect();
    let points: BTreeSet<[Rational; 2]> = s1
        .par_iter()
        .flat_map_iter(|t3| {
            s2.iter().filter_map(|t4| {
                let p = line_intersection(p3, t3, p4, t4)?;
                (r1.contains(&squared_distance(&p, p1)) && r2.contains(&squared_distance(&p, p2))).then_some(p)
            })
        })
        .collect();
    if points.iter().any(|p| p == p3 || p == p4) {
        flags.push(Flag::PointAtPencilCenter);
    }
    (points, flags)
}

pub fn count_2d(cfg: &PlanarConfig) -> RichPointReport {
    let (points, flags) = planar_rich_points(cfg);
    RichPointReport { finite_count: points.len() as u64, degenerate_flags: flags, ..Default::default() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleCount {
    pub real: u64,
    pub complex: u64,
}

/// Points on one circle from each of three concentric families, counted over
/// ℝ and, for reference, over ℂ (affine points only).
pub fn count_circle_triples(families: &[Pencil2D; 3]) -> TripleCount {
    let centers: [[Rational; 3]; 3] = std::array::from_fn(|i| {
        let c = families[i].center();
        [c[0].clone(), c[1].clone(), Rational::zero()]
    });
    let (ca, cb, cc) = (&centers[0], &centers[1], &centers[2]);
    let u = sub3(cb, ca);
    let u2 = norm2(&u);
    // in-plane normal to the centre line
    let v = [-u[1].clone(), u[0].clone(), Rational::zero()];
    let mu = rational::int(2) * dot3(&v, &sub3(ca, cc));
    let radii_c: HashSet<&Rational> = families[2].values().iter().collect();
    let (real, complex) = families[0]
        .values()
        .par_iter()
        .map(|ta| {
            let (mut real, mut complex) = (0u64, 0u64);
            for tb in families[1].values() {
                // radical line 2u·p = |cb|² − |ca|² + ta − tb, p0 = ca + κu
                let kappa = (norm2(cb) - norm2(ca) + ta - tb - rational::int(2) * dot3(&u, ca)) / (rational::int(2) * &u2);
                let p0: [Rational; 3] = std::array::from_fn(|i| &ca[i] + &kappa * &u[i]);
                let s = (ta - norm2(&sub3(&p0, ca))) / &u2;
                let t_mid = norm2(&sub3(&p0, cc)) + &s * &u2;
                if s.is_zero() {
                    let hit = u64::from(radii_c.contains(&t_mid));
                    real += hit;
                    complex += hit;
                } else if mu.is_zero() {
                    let hit = 2 * u64::from(radii_c.contains(&t_mid));
                    complex += hit;
                    if s.is_positive() {
                        real += hit;
                    }
                } else if let Some(lambda) = rational::sqrt_exact(&s) {
                    for sign in [1, -1] {
                        let hit = u64::from(radii_c.contains(&(&t_mid + &mu * &lambda * rational::int(sign))));
                        real += hit;
                        complex += hit;
                    }
                }
            }
            (real, complex)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    TripleCount { real, complex }
}

/// Grid tuples (in `grids` order) where `f` vanishes.
pub fn f_solutions(f: &MPoly, grids: &[(&str, Vec<Rational>)]) -> Vec<Vec<Rational>> {
    fn walk(f: &MPoly, grids: &[(&str, Vec<Rational>)], prefix: &mut Vec<Rational>, out: &mut Vec<Vec<Rational>>) {
        match grids.split_first() {
            None => {
                if f.is_zero() {
                    out.push(prefix.clone());
                }
            }
            Some(((var, values), rest)) => {
                for v in values {
                    let g = f.subs_value(var, v);
                    // a constant nonzero partial evaluation cannot vanish below
                    if g.is_constant() && !g.is_zero() {
                        continue;
                    }
                    prefix.push(v.clone());
                    walk(&g, rest, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let Some(((var, first), rest)) = grids.split_first() else {
        return if f.is_zero() { vec![Vec::new()] } else { Vec::new() };
    };
    first
        .par_iter()
        .map(|v| {
            let mut out = Vec::new();
            let mut prefix = vec![v.clone()];
            walk(&f.subs_value(var, v), rest, &mut prefix, &mut out);
            out
        })
        .flatten()
        .collect()
}

pub fn count_f_solutions(f: &MPoly, grids: &[(&str, Vec<Rational>)]) -> u64 {
    f_solutions(f, grids).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::{build_degenerate_sheaves, build_elekes_lifted, build_elekes_planar, planted_planar};
    use crate::rational::{frac, int};

    fn plane(v: [i64; 4]) -> PlaneP3 {
        PlaneP3::from_ints(v).unwrap()
    }

    #[test]
    fn single_point_through_four_planes() {
        // canonical axial lines plus l4 = {x+y+z=0} ∩ {2x+3y+1=0}; point (6,3,2)
        let p = PointP3::affine(int(6), int(3), int(2));
        let axials = [
            LineP3::meet(&plane([1, 0, 0, 0]), &plane([0, 1, 0, 0])).unwrap(),
            LineP3::meet(&plane([0, 0, 1, 0]), &plane([0, 1, 0, -1])).unwrap(),
            LineP3::meet(&plane([1, 0, 0, -1]), &plane([0, 0, 1, -1])).unwrap(),
            LineP3::meet(&plane([1, 1, 1, 0]), &plane([2, 3, 0, 1])).unwrap(),
        ];
        let sheaves: Vec<SheafConfig> = axials
            .iter()
            .map(|l| SheafConfig::new(l.clone(), vec![l.plane_through(&p).unwrap()]).unwrap())
            .collect();
        let r = count_planes([&sheaves[0], &sheaves[1], &sheaves[2], &sheaves[3]]);
        assert_eq!(r.finite_count, 1);
        assert!(!r.common_line_detected);
        assert!(r.degenerate_flags.is_empty());
    }

    #[test]
    fn degenerate_sheaves_share_a_line() {
        let (sheaves, l5) = build_degenerate_sheaves(3);
        let r = count_planes([&sheaves[0], &sheaves[1], &sheaves[2], &sheaves[3]]);
        assert!(r.common_line_detected);
        assert_eq!(r.common_lines, vec![l5]);
        assert!(r.degenerate_flags.contains(&Flag::TransversalInAllSheaves));
    }

    #[test]
    fn planted_sphere_point() {
        let centers = [[0, 0, 0], [1, 0, 0], [2, 1, 0], [3, 5, 7]].map(|c| c.map(int));
        let p = [int(1), int(2), int(3)];
        let fams: Vec<SphereFamilyConfig> = centers
            .iter()
            .map(|c| SphereFamilyConfig { center: c.clone(), squared_radii: vec![squared_distance(&p, c), int(100)] })
            .collect();
        let fams = [&fams[0], &fams[1], &fams[2], &fams[3]];
        assert_eq!(count_spheres(fams).finite_count, 1);
        assert_eq!(count_spheres_by_quadruples(fams).finite_count, 1);
    }

    #[test]
    fn lifted_construction_paths_agree() {
        let fams = build_elekes_lifted(6, &int(60));
        let fams = [&fams[0], &fams[1], &fams[2], &fams[3]];
        let fast = count_spheres(fams);
        let slow = count_spheres_by_quadruples(fams);
        assert_eq!(fast.finite_count, slow.finite_count);
        assert!(fast.finite_count > 0);
        assert!(fast.degenerate_flags.contains(&Flag::CoplanarCenters));
        assert!(fast.degenerate_flags.contains(&Flag::CollinearCenters));
    }

    #[test]
    fn planted_planar_point() {
        let centers = [[0, 0], [1, 0], [2, 3], [5, 7]].map(|c| c.map(int));
        let cfg = planted_planar([int(1), int(1)], centers).unwrap();
        assert_eq!(count_2d(&cfg).finite_count, 1);
    }

    #[test]
    fn parallel_lines_never_meet() {
        let cfg = PlanarConfig {
            lines1: Pencil2D::Lines { center: [int(0), int(1)], slopes: vec![int(2)] },
            lines2: Pencil2D::Lines { center: [int(3), int(0)], slopes: vec![int(2)] },
            circles1: Pencil2D::Circles { center: [int(0), int(0)], squared_radii: vec![int(1)] },
            circles2: Pencil2D::Circles { center: [int(1), int(0)], squared_radii: vec![int(1)] },
        };
        assert_eq!(count_2d(&cfg).finite_count, 0);
    }

    #[test]
    fn elekes_triples_by_enumeration() {
        // oracle: (i, j, k) with i + k = 2j + 2 and (i − k)² ≤ 16 j (two points unless equality)
        let n = 12i64;
        let fams = build_elekes_planar(n as usize);
        let mut real = 0u64;
        let mut complex = 0u64;
        for i in 1..=n {
            for k in 1..=n {
                if (i + k) % 2 != 0 {
                    continue;
                }
                let j = (i + k - 2) / 2;
                if !(1..=n).contains(&j) {
                    continue;
                }
                let y2 = frac(16 * j - (i - k) * (i - k), 16);
                let pts = if y2.is_zero() { 1 } else { 2 };
                complex += pts;
                if !y2.is_negative() {
                    real += pts;
                }
            }
        }
        assert_eq!(count_circle_triples(&fams), TripleCount { real, complex });
    }

    #[test]
    fn f_solution_counts() {
        let f = crate::parse_poly("x + y + z + w").unwrap();
        let g01 = vec![int(0), int(1)];
        let grids: Vec<(&str, Vec<Rational>)> = ["x", "y", "z", "w"].iter().map(|v| (*v, g01.clone())).collect();
        assert_eq!(count_f_solutions(&f, &grids), 1);
        let f = crate::parse_poly("x*y").unwrap();
        assert_eq!(count_f_solutions(&f, &grids[..2]), 3);
    }
}
