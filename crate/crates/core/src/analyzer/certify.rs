use num_traits::Zero;

use super::{constant, AnalysisCertificate, Irreducibility, Setting, SheafParameters};
use crate::configs::{canonical_pencil, pencil_parameter, Config, PlanarConfig, SheafConfig, SphereFamilyConfig};
use crate::counter::{count_planes, effective_slopes, sphere_center_flags, Flag};
use crate::eliminate::{self, EliminationResult};
use crate::error::{Error, Result};
use crate::geom3::{
    canonical_lines, classify_l4_with_transform, lines_skew, normalize_three_skew_lines, transversals_of_four_lines,
    CaseTag, LineP3, PlaneP3, ProjTransform, TransversalResult,
};
use crate::polyalg::{linear_in_var_reducibility, linear_in_var_reducibility_over, quadratic_reducibility};
use crate::ratfun::{degeneracy_test_3d, degeneracy_test_4d, degeneracy_test_4d_implicit, solve_linear_variable};
use crate::rational::Rational;

const THEOREM_4D: &str = "Elekes-Szabo bound for F(x,y,z,w) on an n x n x n x n grid";
const THEOREM_3D: &str = "Solymosi-Zahl bound for F(x,y,z) on an n x n x n grid";

pub fn certify(config: &Config) -> AnalysisCertificate {
    match config {
        Config::Sheaves { .. } => certify_sheaves(config.sheaves().expect("four sheaves")),
        Config::Spheres { .. } => certify_spheres(config.families().expect("four families")),
        Config::Planar { pencils, .. } => certify_2d(pencils),
    }
}

/// Sheaves mapped so that the first three axial lines are canonical and the
/// fourth is in the normal form of its case.
#[derive(Debug, Clone)]
pub struct NormalizedSheaves {
    pub case: CaseTag,
    pub transform: ProjTransform,
    pub sheaves: [SheafConfig; 4],
    pub parameters: [SheafParameters; 4],
}

pub fn normalize_sheaves(sheaves: [&SheafConfig; 4]) -> Result<NormalizedSheaves> {
    let t = normalize_three_skew_lines(&sheaves[0].axial, &sheaves[1].axial, &sheaves[2].axial)?;
    let l4 = t.apply_line(&sheaves[3].axial)?;
    let (case, s) = classify_l4_with_transform(&l4)?;
    let transform = s.compose(&t);
    let mapped: Vec<SheafConfig> = sheaves
        .iter()
        .map(|sh| {
            Ok(SheafConfig {
                axial: transform.apply_line(&sh.axial)?,
                planes: sh.planes.iter().map(|h| transform.apply_plane(h)).collect::<Result<_>>()?,
            })
        })
        .collect::<Result<_>>()?;
    let canonical = canonical_lines();
    for (i, sh) in mapped.iter().enumerate() {
        let (base, dir) = canonical_pencil(i + 1, &case);
        let axis = LineP3::meet(&PlaneP3::new(base).unwrap(), &PlaneP3::new(dir).unwrap())?;
        if sh.axial != axis || (i < 3 && sh.axial != canonical[i]) {
            return Err(Error::DegenerateInput(format!("sheaf {} did not normalize", i + 1)));
        }
    }
    let parameters: Vec<SheafParameters> = mapped
        .iter()
        .enumerate()
        .map(|(i, sh)| {
            let all: Vec<Option<Rational>> = sh.planes.iter().map(|h| pencil_parameter(i + 1, &case, h)).collect();
            SheafParameters {
                excluded: all.iter().filter(|m| m.is_none()).count(),
                values: all.into_iter().flatten().collect(),
            }
        })
        .collect();
    Ok(NormalizedSheaves {
        case,
        transform,
        sheaves: mapped.try_into().unwrap(),
        parameters: parameters.try_into().unwrap(),
    })
}

fn transversal_in_all_sheaves(sheaves: [&SheafConfig; 4]) -> bool {
    let axials = [&sheaves[0].axial, &sheaves[1].axial, &sheaves[2].axial, &sheaves[3].axial];
    match transversals_of_four_lines(axials) {
        Ok(TransversalResult::Lines(ts)) => {
            ts.iter().any(|t| sheaves.iter().all(|s| s.planes.iter().any(|h| t.lies_in(h))))
        }
        // a rational plane holding an irrational line holds its conjugate too,
        // which would put the skew axial lines in one plane
        Ok(TransversalResult::IrrationalPair { .. }) => false,
        _ => count_planes(sheaves).common_line_detected,
    }
}

/// Elimination for the normal form, with the variable solved for and the
/// order of the remaining three in the degeneracy test.
fn sheaf_elimination(case: &CaseTag) -> Result<(EliminationResult, &'static str, [&'static str; 3])> {
    Ok(match case {
        CaseTag::Case1 { s1, s2 } => {
            (eliminate::eliminate_planes_case1(&constant(s1), &constant(s2)), "z", ["y", "w", "x"])
        }
        CaseTag::Case1AtInfinity => (eliminate::eliminate_planes_at_infinity(), "w", ["x", "y", "z"]),
        CaseTag::Case2 { alpha } => (eliminate::eliminate_planes_case2(&constant(alpha))?, "x", ["z", "w", "y"]),
    })
}

pub fn certify_sheaves(sheaves: [&SheafConfig; 4]) -> AnalysisCertificate {
    let mut cert = AnalysisCertificate::empty(Setting::Sheaves);
    let skew = (0..4).all(|i| (i + 1..4).all(|j| lines_skew(&sheaves[i].axial, &sheaves[j].axial)));
    if !skew {
        cert.hypothesis_flags.push(Flag::AxialLinesNotSkew);
        return cert;
    }
    if transversal_in_all_sheaves(sheaves) {
        cert.hypothesis_flags.push(Flag::TransversalInAllSheaves);
    }
    let normal = match normalize_sheaves(sheaves) {
        Ok(n) => n,
        Err(e) => {
            cert.hypothesis_flags.push(Flag::Classification(e.to_string()));
            return cert;
        }
    };
    cert.case = Some(normal.case.clone());
    cert.transform = Some(normal.transform);
    cert.normalized_parameters = normal.parameters.to_vec();
    let (elim, solved, order) = match sheaf_elimination(&normal.case) {
        Ok(v) => v,
        Err(e) => {
            cert.hypothesis_flags.push(Flag::Classification(e.to_string()));
            return cert;
        }
    };
    cert.parameters = elim.parameters.clone();
    match linear_in_var_reducibility(&elim.f, "w") {
        Ok(ev) => cert.irreducibility = Some(Irreducibility::Linear(ev)),
        Err(e) => cert.notes.push(format!("irreducibility: {e}")),
    }
    match solve_linear_variable(&elim.f, solved).and_then(|f| degeneracy_test_4d(&f, order)) {
        Ok(v) => cert.degeneracy = Some(v),
        Err(e) => cert.notes.push(format!("degeneracy: {e}")),
    }
    cert.f = Some(elim.f.reordered(&elim.parameter_refs()));
    cert.conclude("8/3", THEOREM_4D);
    cert
}

pub fn certify_spheres(families: [&SphereFamilyConfig; 4]) -> AnalysisCertificate {
    let mut cert = AnalysisCertificate::empty(Setting::Spheres);
    let centers: [[Rational; 3]; 4] = std::array::from_fn(|i| families[i].center.clone());
    cert.hypothesis_flags = sphere_center_flags(&centers);
    let elim = eliminate::spheres_polynomial(&centers.clone().map(|c| c.map(|x| constant(&x))));
    cert.parameters = elim.parameters.clone();
    let vars = ["t1", "t2", "t3", "t4"];
    match quadratic_reducibility(&elim.f, &vars) {
        Ok(ev) => cert.irreducibility = Some(Irreducibility::Quadratic(ev)),
        Err(e) => cert.notes.push(format!("irreducibility: {e}")),
    }
    // F is quadratic in t4, so the test runs on the implicit surface
    match degeneracy_test_4d_implicit(&elim.f, ["t1", "t2", "t3"], "t4") {
        Ok(v) => cert.degeneracy = Some(v),
        Err(e) => cert.notes.push(format!("degeneracy: {e}")),
    }
    cert.f = Some(elim.f.reordered(&elim.parameter_refs()));
    cert.conclude("8/3", THEOREM_4D);
    cert
}

/// Planar input after the similarity taking the circle centres to `(0,0)`
/// and `(1,0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedPlanar {
    /// Line-pencil centres `(a, b)` and `(c, d)`.
    pub centers: [Rational; 4],
    pub r1: Vec<Rational>,
    pub r2: Vec<Rational>,
    pub s1: Vec<Rational>,
    pub s2: Vec<Rational>,
    pub flags: Vec<Flag>,
}

/// `z ↦ (z − p1)/(p2 − p1)` on complex coordinates. Squared radii scale by
/// `1/|p2 − p1|²`; a slope `t` becomes `(t u − v)/(u + t v)` with
/// `p2 − p1 = u + iv`, and lines turned vertical are dropped.
pub fn normalize_planar(cfg: &PlanarConfig) -> Result<NormalizedPlanar> {
    let (p1, p2) = (cfg.circles1.center(), cfg.circles2.center());
    let (p3, p4) = (cfg.lines1.center(), cfg.lines2.center());
    if p1 == p2 || p3 == p4 {
        return Err(Error::CoincidentCenters);
    }
    let (s1, s2, flags) = effective_slopes(cfg);
    let u = &p2[0] - &p1[0];
    let v = &p2[1] - &p1[1];
    let w2 = &u * &u + &v * &v;
    let to_unit = |p: &[Rational; 2]| -> (Rational, Rational) {
        let (x, y) = (&p[0] - &p1[0], &p[1] - &p1[1]);
        ((&x * &u + &y * &v) / &w2, (&y * &u - &x * &v) / &w2)
    };
    let (a, b) = to_unit(p3);
    let (c, d) = to_unit(p4);
    let slope = |t: &Rational| -> Option<Rational> {
        let den = &u + t * &v;
        (!den.is_zero()).then(|| (t * &u - &v) / den)
    };
    let scale = |r: &Rational| r / &w2;
    Ok(NormalizedPlanar {
        centers: [a, b, c, d],
        r1: cfg.circles1.values().iter().map(scale).collect(),
        r2: cfg.circles2.values().iter().map(scale).collect(),
        s1: s1.iter().filter_map(slope).collect(),
        s2: s2.iter().filter_map(slope).collect(),
        flags,
    })
}

pub fn certify_2d(cfg: &PlanarConfig) -> AnalysisCertificate {
    let mut cert = AnalysisCertificate::empty(Setting::Planar);
    let normal = match normalize_planar(cfg) {
        Ok(n) => n,
        Err(_) => {
            cert.hypothesis_flags.push(Flag::CoincidentCenters);
            return cert;
        }
    };
    if normal.flags.contains(&Flag::ConnectingLineRemoved) {
        cert.notes.push("line joining the line-pencil centres removed".into());
    }
    let [a, b, c, d] = normal.centers.each_ref().map(constant);
    let elim = match eliminate::eliminate_2d(&a, &b, &c, &d) {
        Ok(e) => e,
        Err(_) => {
            cert.hypothesis_flags.push(Flag::CoincidentCenters);
            return cert;
        }
    };
    cert.parameters = elim.parameters.clone();
    match linear_in_var_reducibility_over(&elim.f, "t1", &["t3", "t4"]) {
        Ok(ev) => cert.irreducibility = Some(Irreducibility::Linear(ev)),
        Err(e) => cert.notes.push(format!("irreducibility: {e}")),
    }
    match eliminate::solve_2d_for_t1(&elim).and_then(|f| degeneracy_test_3d(&f, ["t3", "t4"])) {
        Ok(v) => cert.degeneracy = Some(v),
        Err(e) => cert.notes.push(format!("degeneracy: {e}")),
    }
    cert.f = Some(elim.f.reordered(&elim.parameter_refs()));
    cert.conclude("12/7", THEOREM_3D);
    cert
}
