//! Input configurations: sheaves of planes, concentric-sphere families and
//! planar pencils, with the extremal constructions and seeded generators.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom3::{lines_skew, CaseTag, LineP3, PlaneP3, PointP3};
use crate::linalg;
use crate::rational::{int, serde_rational_array, serde_rational_vec, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheafConfig {
    pub axial: LineP3,
    pub planes: Vec<PlaneP3>,
}

impl SheafConfig {
    pub fn new(axial: LineP3, planes: Vec<PlaneP3>) -> Result<SheafConfig> {
        let cfg = SheafConfig { axial, planes };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(p) = self.planes.iter().find(|p| !self.axial.lies_in(p)) {
            return Err(Error::InvalidConfig(format!("plane {p:?} misses the axial line")));
        }
        let distinct: BTreeSet<_> = self.planes.iter().collect();
        if distinct.len() != self.planes.len() {
            return Err(Error::InvalidConfig("repeated plane in sheaf".into()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.planes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.planes.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereFamilyConfig {
    #[serde(with = "serde_rational_array")]
    pub center: [Rational; 3],
    #[serde(with = "serde_rational_vec")]
    pub squared_radii: Vec<Rational>,
}

impl SphereFamilyConfig {
    pub fn validate(&self, positive: bool) -> Result<()> {
        let distinct: BTreeSet<_> = self.squared_radii.iter().collect();
        if distinct.len() != self.squared_radii.len() {
            return Err(Error::InvalidConfig("repeated squared radius".into()));
        }
        if positive && self.squared_radii.iter().any(|r| !r.is_positive()) {
            return Err(Error::InvalidConfig("nonpositive squared radius".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "pencil", rename_all = "snake_case")]
pub enum Pencil2D {
    Lines {
        #[serde(with = "serde_rational_array")]
        center: [Rational; 2],
        #[serde(with = "serde_rational_vec")]
        slopes: Vec<Rational>,
    },
    Circles {
        #[serde(with = "serde_rational_array")]
        center: [Rational; 2],
        #[serde(with = "serde_rational_vec")]
        squared_radii: Vec<Rational>,
    },
}

impl Pencil2D {
    pub fn center(&self) -> &[Rational; 2] {
        match self {
            Pencil2D::Lines { center, .. } | Pencil2D::Circles { center, .. } => center,
        }
    }

    pub fn values(&self) -> &[Rational] {
        match self {
            Pencil2D::Lines { slopes, .. } => slopes,
            Pencil2D::Circles { squared_radii, .. } => squared_radii,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let vals = self.values();
        let distinct: BTreeSet<_> = vals.iter().collect();
        if distinct.len() != vals.len() {
            return Err(Error::InvalidConfig("repeated pencil member".into()));
        }
        if let Pencil2D::Circles { squared_radii, .. } = self {
            if squared_radii.iter().any(Zero::is_zero) {
                return Err(Error::InvalidConfig("zero squared radius".into()));
            }
        }
        Ok(())
    }
}

/// Two line pencils and two circle pencils.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarConfig {
    pub lines1: Pencil2D,
    pub lines2: Pencil2D,
    pub circles1: Pencil2D,
    pub circles2: Pencil2D,
}

impl PlanarConfig {
    pub fn validate(&self) -> Result<()> {
        for (p, want_lines) in [(&self.lines1, true), (&self.lines2, true), (&self.circles1, false), (&self.circles2, false)] {
            if matches!(p, Pencil2D::Lines { .. }) != want_lines {
                return Err(Error::InvalidConfig("pencil kind out of place".into()));
            }
            p.validate()?;
        }
        Ok(())
    }
}

/// Serialized input: `{"kind": ..., "n": ..., ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Config {
    Sheaves {
        n: usize,
        sheaves: Vec<SheafConfig>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed_transversal: Option<LineP3>,
        #[serde(default)]
        resamples: usize,
    },
    Spheres {
        n: usize,
        families: Vec<SphereFamilyConfig>,
        #[serde(default)]
        resamples: usize,
    },
    Planar {
        n: usize,
        #[serde(flatten)]
        pencils: PlanarConfig,
        #[serde(default)]
        resamples: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConfigKind {
    Sheaves,
    Spheres,
    Planar,
}

impl std::str::FromStr for ConfigKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ConfigKind> {
        match s {
            "sheaves" => Ok(ConfigKind::Sheaves),
            "spheres" => Ok(ConfigKind::Spheres),
            "planar" | "2d" => Ok(ConfigKind::Planar),
            other => Err(Error::InvalidConfig(format!("unknown kind {other:?}"))),
        }
    }
}

impl Config {
    pub fn kind(&self) -> ConfigKind {
        match self {
            Config::Sheaves { .. } => ConfigKind::Sheaves,
            Config::Spheres { .. } => ConfigKind::Spheres,
            Config::Planar { .. } => ConfigKind::Planar,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Config::Sheaves { sheaves, .. } => {
                if sheaves.len() != 4 {
                    return Err(Error::InvalidConfig(format!("expected 4 sheaves, got {}", sheaves.len())));
                }
                sheaves.iter().try_for_each(SheafConfig::validate)
            }
            Config::Spheres { families, .. } => {
                if families.len() != 4 {
                    return Err(Error::InvalidConfig(format!("expected 4 sphere families, got {}", families.len())));
                }
                families.iter().try_for_each(|f| f.validate(false))
            }
            Config::Planar { pencils, .. } => pencils.validate(),
        }
    }

    pub fn sheaves(&self) -> Option<[&SheafConfig; 4]> {
        match self {
            Config::Sheaves { sheaves, .. } if sheaves.len() == 4 => {
                Some([&sheaves[0], &sheaves[1], &sheaves[2], &sheaves[3]])
            }
            _ => None,
        }
    }

    pub fn families(&self) -> Option<[&SphereFamilyConfig; 4]> {
        match self {
            Config::Spheres { families, .. } if families.len() == 4 => {
                Some([&families[0], &families[1], &families[2], &families[3]])
            }
            _ => None,
        }
    }

    pub fn pencils(&self) -> Option<&PlanarConfig> {
        match self {
            Config::Planar { pencils, .. } => Some(pencils),
            _ => None,
        }
    }
}

fn q4(v: [i64; 4]) -> [Rational; 4] {
    v.map(int)
}

/// `(base, dir)` of the canonical pencil `base + m·dir`. `dir` itself is the
/// one plane of the sheaf the parametrization misses.
pub fn canonical_pencil(index: usize, case: &CaseTag) -> ([Rational; 4], [Rational; 4]) {
    match index {
        1 => (q4([1, 0, 0, 0]), q4([0, -1, 0, 0])),
        2 => (q4([0, 1, 0, -1]), q4([0, 0, -1, 0])),
        3 => (q4([0, 0, 1, -1]), q4([-1, 0, 0, 1])),
        4 => match case {
            CaseTag::Case1 { s1, s2 } => ([s1.clone(), s2.clone(), int(0), int(1)], q4([1, 1, 1, 0])),
            CaseTag::Case1AtInfinity => (q4([1, 1, 1, 0]), q4([0, 0, 0, -1])),
            CaseTag::Case2 { alpha } => (
                [alpha.clone(), -(int(1) + alpha), int(0), int(1)],
                [alpha.clone(), int(0), int(1), int(0)],
            ),
        },
        _ => panic!("sheaf index {index} outside 1..=4"),
    }
}

fn pencil_member(base: &[Rational; 4], dir: &[Rational; 4], m: &Rational) -> PlaneP3 {
    PlaneP3::new(std::array::from_fn(|i| &base[i] + m * &dir[i])).expect("pencil members are nonzero")
}

/// Parameter `m` of a plane in the canonical pencil, `None` for the excluded
/// plane `dir`. Panics if the plane is not in the pencil.
pub fn pencil_parameter(index: usize, case: &CaseTag, plane: &PlaneP3) -> Option<Rational> {
    let (base, dir) = canonical_pencil(index, case);
    let h = plane.to_rationals();
    // h ∝ base + m dir: solve h = λ base + μ dir
    let a = vec![base.to_vec(), dir.to_vec()];
    let sol = linalg::solve(&linalg::transpose(&a), &h).expect("plane lies in the canonical pencil");
    if sol[0].is_zero() {
        None
    } else {
        Some(&sol[1] / &sol[0])
    }
}

pub fn sheaf_from_parameters(index: usize, params: &[Rational], case: &CaseTag) -> SheafConfig {
    let (base, dir) = canonical_pencil(index, case);
    let axial = LineP3::meet(&PlaneP3::new(base.clone()).unwrap(), &PlaneP3::new(dir.clone()).unwrap())
        .expect("pencil generators are distinct planes");
    let planes = params.iter().map(|m| pencil_member(&base, &dir, m)).collect();
    SheafConfig { axial, planes }
}

fn pt(v: [i64; 4]) -> PointP3 {
    PointP3::from_ints(v).unwrap()
}

/// Four pairwise skew axial lines all meeting a common line `l5`, and sheaves
/// whose first plane is the span of `l_i` and `l5`.
pub fn build_degenerate_sheaves(n: usize) -> ([SheafConfig; 4], LineP3) {
    assert!(n >= 1);
    let l5 = LineP3::join(&pt([0, 0, 0, 1]), &pt([1, 2, 3, 1])).unwrap();
    let on = |t: i64| pt([t, 2 * t, 3 * t, 1]);
    let axials = [
        LineP3::join(&on(1), &pt([1, 0, 0, 0])).unwrap(),
        LineP3::join(&on(2), &pt([0, 1, 0, 0])).unwrap(),
        LineP3::join(&on(-1), &pt([0, 0, 1, 0])).unwrap(),
        LineP3::join(&on(3), &pt([1, 1, -1, 0])).unwrap(),
    ];
    let probe = pt([0, 0, 0, 1]);
    let sheaves = axials.map(|l| {
        let spanning = l.plane_through(&probe).expect("l5 point off the axial line");
        let (g1, g2) = l.two_planes();
        let other = if g1 == spanning { g2 } else { g1 };
        let (base, dir) = (spanning.to_rationals(), other.to_rationals());
        let planes = (0..n as i64).map(|k| pencil_member(&base, &dir, &int(k))).collect();
        SheafConfig { axial: l, planes }
    });
    (sheaves, l5)
}

pub fn elekes_centers(d: &Rational) -> [[Rational; 3]; 4] {
    [
        [int(-1), int(0), int(0)],
        [int(0), int(0), int(0)],
        [int(1), int(0), int(0)],
        [int(0), d.clone(), int(0)],
    ]
}

/// The planar three-circle construction lifted to space, with a fourth centre
/// `(0, D, 0)` carrying squared radii `D² + m`.
pub fn build_elekes_lifted(n: usize, d: &Rational) -> [SphereFamilyConfig; 4] {
    assert!(n >= 2);
    let base: Vec<Rational> = (1..=n as i64).map(int).collect();
    let far: Vec<Rational> = (1..=n as i64).map(|m| d * d + int(m)).collect();
    let centers = elekes_centers(d);
    std::array::from_fn(|i| SphereFamilyConfig {
        center: centers[i].clone(),
        squared_radii: if i == 3 { far.clone() } else { base.clone() },
    })
}

/// Circles of squared radius `1..=n` about `(-1,0)`, `(0,0)`, `(1,0)`.
pub fn build_elekes_planar(n: usize) -> [Pencil2D; 3] {
    let radii: Vec<Rational> = (1..=n as i64).map(int).collect();
    [-1, 0, 1].map(|x| Pencil2D::Circles { center: [int(x), int(0)], squared_radii: radii.clone() })
}

const MAX_ATTEMPTS: usize = 1000;

struct Sampler {
    rng: ChaCha8Rng,
    resamples: usize,
}

impl Sampler {
    fn int(&mut self, range: i64) -> i64 {
        self.rng.gen_range(-range..=range)
    }

    fn vec3(&mut self, range: i64) -> [i64; 3] {
        [self.int(range), self.int(range), self.int(range)]
    }

    /// Draws until `draw` returns a value, counting rejections.
    fn until<T>(&mut self, mut draw: impl FnMut(&mut Self) -> Option<T>) -> Result<T> {
        for _ in 0..MAX_ATTEMPTS {
            if let Some(v) = draw(self) {
                return Ok(v);
            }
            self.resamples += 1;
        }
        Err(Error::ExhaustedRetries { attempts: MAX_ATTEMPTS })
    }
}

fn affine_point(v: [i64; 3]) -> PointP3 {
    pt([v[0], v[1], v[2], 1])
}

/// Deterministic generic-position configuration with `n` planted four-rich
/// points, so counts are not trivially zero.
pub fn random_config(kind: ConfigKind, n: usize, seed: u64) -> Result<Config> {
    let mut s = Sampler { rng: ChaCha8Rng::seed_from_u64(seed), resamples: 0 };
    match kind {
        ConfigKind::Sheaves => random_sheaves(&mut s, n),
        ConfigKind::Spheres => random_spheres(&mut s, n),
        ConfigKind::Planar => random_planar(&mut s, n),
    }
}

fn random_sheaves(s: &mut Sampler, n: usize) -> Result<Config> {
    let axials: Vec<LineP3> = s.until(|s| {
        let lines: Vec<LineP3> = (0..4)
            .map(|_| LineP3::join(&affine_point(s.vec3(4)), &affine_point(s.vec3(4))))
            .collect::<Result<_>>()
            .ok()?;
        let skew = (0..4).all(|i| (i + 1..4).all(|j| lines_skew(&lines[i], &lines[j])));
        skew.then_some(lines)
    })?;
    let mut planes: Vec<Vec<PlaneP3>> = vec![Vec::new(); 4];
    for _ in 0..n {
        let through = s.until(|s| {
            let p = affine_point(s.vec3(6));
            let hs: Vec<PlaneP3> = axials.iter().map(|l| l.plane_through(&p)).collect::<Result<_>>().ok()?;
            let fresh = hs.iter().zip(&planes).all(|(h, existing)| !existing.contains(h));
            fresh.then_some(hs)
        })?;
        for (h, list) in through.into_iter().zip(planes.iter_mut()) {
            list.push(h);
        }
    }
    let sheaves = axials.into_iter().zip(planes).map(|(axial, planes)| SheafConfig { axial, planes }).collect();
    Ok(Config::Sheaves { n, sheaves, seed_transversal: None, resamples: s.resamples })
}

pub fn squared_distance<const N: usize>(p: &[Rational; N], c: &[Rational; N]) -> Rational {
    p.iter().zip(c).map(|(a, b)| (a - b) * (a - b)).sum()
}

/// Non-coplanar, no three collinear.
pub fn centers_in_general_position(c: &[[Rational; 3]; 4]) -> bool {
    let diff = |i: usize, j: usize| -> Vec<Rational> { (0..3).map(|k| &c[j][k] - &c[i][k]).collect() };
    let coplanar = linalg::rank(&[diff(0, 1), diff(0, 2), diff(0, 3)]) < 3;
    let collinear = (0..4).any(|i| {
        (i + 1..4).any(|j| (j + 1..4).any(|k| linalg::rank(&[diff(i, j), diff(i, k)]) < 2))
    });
    !coplanar && !collinear
}

fn random_spheres(s: &mut Sampler, n: usize) -> Result<Config> {
    let centers: [[Rational; 3]; 4] = s.until(|s| {
        let c: [[Rational; 3]; 4] = std::array::from_fn(|_| s.vec3(4).map(int));
        centers_in_general_position(&c).then_some(c)
    })?;
    let mut radii: Vec<Vec<Rational>> = vec![Vec::new(); 4];
    for _ in 0..n {
        let ts = s.until(|s| {
            let p = s.vec3(6).map(int);
            let ts: Vec<Rational> = centers.iter().map(|c| squared_distance(&p, c)).collect();
            let fresh = ts.iter().zip(&radii).all(|(t, existing)| !existing.contains(t));
            fresh.then_some(ts)
        })?;
        for (t, list) in ts.into_iter().zip(radii.iter_mut()) {
            list.push(t);
        }
    }
    let families = centers
        .into_iter()
        .zip(radii)
        .map(|(center, squared_radii)| SphereFamilyConfig { center, squared_radii })
        .collect();
    Ok(Config::Spheres { n, families, resamples: s.resamples })
}

fn slope(from: &[Rational; 2], to: &[Rational; 2]) -> Option<Rational> {
    let dx = &to[0] - &from[0];
    (!dx.is_zero()).then(|| (&to[1] - &from[1]) / dx)
}

fn random_planar(s: &mut Sampler, n: usize) -> Result<Config> {
    let centers: [[Rational; 2]; 4] = s.until(|s| {
        let c: [[Rational; 2]; 4] = std::array::from_fn(|_| [int(s.int(5)), int(s.int(5))]);
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| c[i] != c[j]));
        // keep the connecting line of the line-pencil centres non-vertical
        (distinct && c[2][0] != c[3][0]).then_some(c)
    })?;
    let connecting = slope(&centers[2], &centers[3]);
    let mut vals: Vec<Vec<Rational>> = vec![Vec::new(); 4];
    for _ in 0..n {
        let row = s.until(|s| {
            let p = [int(s.int(7)), int(s.int(7))];
            let t3 = slope(&centers[2], &p)?;
            let t4 = slope(&centers[3], &p)?;
            if Some(&t3) == connecting.as_ref() || Some(&t4) == connecting.as_ref() {
                return None;
            }
            let row = vec![squared_distance(&p, &centers[0]), squared_distance(&p, &centers[1]), t3, t4];
            if row[0].is_zero() || row[1].is_zero() {
                return None;
            }
            row.iter().zip(&vals).all(|(v, existing)| !existing.contains(v)).then_some(row)
        })?;
        for (v, list) in row.into_iter().zip(vals.iter_mut()) {
            list.push(v);
        }
    }
    let mut vals = vals.into_iter();
    let mut next = || vals.next().unwrap();
    let (r1, r2, s1, s2) = (next(), next(), next(), next());
    let pencils = PlanarConfig {
        lines1: Pencil2D::Lines { center: centers[2].clone(), slopes: s1 },
        lines2: Pencil2D::Lines { center: centers[3].clone(), slopes: s2 },
        circles1: Pencil2D::Circles { center: centers[0].clone(), squared_radii: r1 },
        circles2: Pencil2D::Circles { center: centers[1].clone(), squared_radii: r2 },
    };
    Ok(Config::Planar { n, pencils, resamples: s.resamples })
}

/// A planar configuration with the single four-rich point `p`.
pub fn planted_planar(p: [Rational; 2], centers: [[Rational; 2]; 4]) -> Result<PlanarConfig> {
    let t3 = slope(&centers[2], &p).ok_or_else(|| Error::InvalidConfig("vertical line".into()))?;
    let t4 = slope(&centers[3], &p).ok_or_else(|| Error::InvalidConfig("vertical line".into()))?;
    let cfg = PlanarConfig {
        lines1: Pencil2D::Lines { center: centers[2].clone(), slopes: vec![t3] },
        lines2: Pencil2D::Lines { center: centers[3].clone(), slopes: vec![t4] },
        circles1: Pencil2D::Circles { center: centers[0].clone(), squared_radii: vec![squared_distance(&p, &centers[0])] },
        circles2: Pencil2D::Circles { center: centers[1].clone(), squared_radii: vec![squared_distance(&p, &centers[1])] },
    };
    cfg.validate()?;
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom3::{transversals_of_four_lines, TransversalResult};
    use crate::rational::frac;

    #[test]
    fn canonical_sheaf_planes() {
        let case = CaseTag::Case1 { s1: int(0), s2: int(0) };
        let s1 = sheaf_from_parameters(1, &[int(2)], &case);
        assert_eq!(s1.planes[0], PlaneP3::from_ints([1, -2, 0, 0]).unwrap());
        let s2 = sheaf_from_parameters(2, &[int(1)], &case);
        assert_eq!(s2.planes[0], PlaneP3::from_ints([0, 1, -1, -1]).unwrap());
        let s4 = sheaf_from_parameters(4, &[int(0)], &CaseTag::Case2 { alpha: int(1) });
        assert_eq!(s4.planes[0], PlaneP3::from_ints([1, -2, 0, 1]).unwrap());
        for s in [&s1, &s2, &s4] {
            s.validate().unwrap();
        }
    }

    #[test]
    fn pencil_parameter_inverts_membership() {
        let case = CaseTag::Case1 { s1: frac(1, 2), s2: int(-3) };
        for index in 1..=4 {
            let m = frac(7, 3);
            let s = sheaf_from_parameters(index, &[m.clone()], &case);
            assert_eq!(pencil_parameter(index, &case, &s.planes[0]), Some(m));
            let (_, dir) = canonical_pencil(index, &case);
            assert_eq!(pencil_parameter(index, &case, &PlaneP3::new(dir).unwrap()), None);
        }
    }

    #[test]
    fn degenerate_construction() {
        for n in [1, 4] {
            let (sheaves, l5) = build_degenerate_sheaves(n);
            for s in &sheaves {
                s.validate().unwrap();
                assert_eq!(s.planes.len(), n);
                assert!(l5.lies_in(&s.planes[0]));
            }
            for i in 0..4 {
                for j in i + 1..4 {
                    assert!(lines_skew(&sheaves[i].axial, &sheaves[j].axial));
                }
            }
            let ls: Vec<&LineP3> = sheaves.iter().map(|s| &s.axial).collect();
            match transversals_of_four_lines([ls[0], ls[1], ls[2], ls[3]]).unwrap() {
                TransversalResult::Lines(ts) => assert!(ts.contains(&l5)),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn elekes_triples_share_a_circle() {
        // (4, 2, 2): x = 1/2, y² + z² = 7/4
        let fams = build_elekes_lifted(4, &int(40));
        let x = frac(1, 2);
        let rho2 = int(2) - &x * &x;
        assert_eq!(rho2, frac(7, 4));
        for (fam, t) in fams[..3].iter().zip([4, 2, 2]) {
            let c = &fam.center;
            // on the circle (x, y, z) with y² + z² = rho2
            assert_eq!((&x - &c[0]) * (&x - &c[0]) + &rho2, int(t));
        }
    }

    #[test]
    fn random_configs_are_deterministic_and_generic() {
        for kind in [ConfigKind::Sheaves, ConfigKind::Spheres, ConfigKind::Planar] {
            let a = random_config(kind, 4, 7).unwrap();
            assert_eq!(a, random_config(kind, 4, 7).unwrap());
            a.validate().unwrap();
        }
        let Config::Sheaves { sheaves, .. } = random_config(ConfigKind::Sheaves, 3, 1).unwrap() else { unreachable!() };
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(lines_skew(&sheaves[i].axial, &sheaves[j].axial));
            }
        }
        let Config::Spheres { families, .. } = random_config(ConfigKind::Spheres, 3, 1).unwrap() else { unreachable!() };
        let c: [[Rational; 3]; 4] = std::array::from_fn(|i| families[i].center.clone());
        assert!(centers_in_general_position(&c));
    }

    #[test]
    fn json_schema_round_trip() {
        let cfg = random_config(ConfigKind::Planar, 2, 3).unwrap();
        let text = serde_json::to_string(&cfg).unwrap();
        assert!(text.starts_with("{\"kind\":\"planar\",\"n\":2"));
        assert_eq!(serde_json::from_str::<Config>(&text).unwrap(), cfg);
    }
}
