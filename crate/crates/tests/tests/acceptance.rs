//! Acceptance criteria 1-9. Prints one line per criterion and exits nonzero
//! if any of them fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use fourrich::analyzer::{certify, normalize_planar, normalize_sheaves, scaling_experiment, Generator};
use fourrich::configs::{
    build_degenerate_sheaves, canonical_pencil, centers_in_general_position, pencil_parameter, random_config,
    squared_distance, ConfigKind, Pencil2D, PlanarConfig, SheafConfig,
};
use fourrich::counter::{count, count_2d, count_f_solutions, count_planes, effective_slopes, f_solutions, line_intersection};
use fourrich::eliminate::{self, EliminationResult};
use fourrich::geom3::{canonical_lines, m_abc, m_abc_symbolic, solve_abc, CaseTag};
use fourrich::golden;
use fourrich::polyalg::{determinant, equal_up_to_scalar, quadratic_reducibility, resultant, QuadraticReducibility};
use fourrich::ratfun::{
    degeneracy_test_3d, degeneracy_test_4d, degeneracy_test_4d_implicit, degeneracy_test_4d_with_witness, rf_equal,
    solve_linear_variable, DegeneracyStatus,
};
use fourrich::rational::{frac, int};
use fourrich::{parse_poly, MPoly, RatFun, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_0004;
/// Criterion 6, lifted construction.
const LIFTED_MIN_EXPONENT: f64 = 2.7;
/// Criterion 6, planar three-circle base.
const PLANAR_EXPONENT_WINDOW: (f64, f64) = (1.9, 2.1);
/// Criterion 9.
const BOUND_EXPONENT_SLACK: f64 = 0.1;
const SPECIALIZATIONS: usize = 20;
const PLANTED: usize = 100;
const CROSS_CHECK_CONFIGS: u64 = 25;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(failures: Vec<String>, ok: impl Into<String>) -> Outcome {
        if failures.is_empty() {
            Outcome { pass: true, detail: ok.into() }
        } else {
            Outcome { pass: false, detail: failures.join("; ") }
        }
    }
}

fn sym(s: &str) -> MPoly {
    MPoly::var(s)
}

fn k(q: &Rational) -> MPoly {
    MPoly::constant(q.clone())
}

fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ stream)
}

fn rat(r: &mut ChaCha8Rng, range: i64) -> Rational {
    frac(r.gen_range(-range..=range), r.gen_range(1..=4))
}

fn nonzero_rat(r: &mut ChaCha8Rng, range: i64) -> Rational {
    loop {
        let q = rat(r, range);
        if !q.is_zero() {
            return q;
        }
    }
}

fn point3(r: &mut ChaCha8Rng, range: i64) -> [Rational; 3] {
    [rat(r, range), rat(r, range), rat(r, range)]
}

fn golden_polynomials() -> Outcome {
    let mut failures = Vec::new();
    let case1 = eliminate::eliminate_planes_case1(&sym("s1"), &sym("s2")).f;
    if equal_up_to_scalar(&case1, &golden::load("case1_F")).is_none() {
        let corrected = equal_up_to_scalar(&case1, &golden::load("case1_F_corrected")).is_some();
        failures.push(if corrected {
            "case 1 differs from the printed F; it equals the printed F with the sign of the trailing \
             2(s1 xy + s1 x + s2 y + s2 + 1) group flipped"
                .to_string()
        } else {
            "case 1 differs from the printed F".to_string()
        });
    }
    let at_inf = golden::load("at_infinity_F").rename("m1", "x").rename("m2", "y").rename("m3", "z").rename("m4", "w");
    if equal_up_to_scalar(&eliminate::eliminate_planes_at_infinity().f, &at_inf).is_none() {
        failures.push("case 1 at infinity".into());
    }
    let case2 = eliminate::eliminate_planes_case2(&sym("alpha")).unwrap().f;
    if equal_up_to_scalar(&case2, &golden::load("case2_F")).is_none() {
        failures.push("case 2".into());
    }
    let planar = eliminate::eliminate_2d(&sym("a"), &sym("b"), &sym("c"), &sym("d")).unwrap().f;
    if equal_up_to_scalar(&planar, &golden::load("planar_F")).is_none() {
        failures.push("planar".into());
    }
    Outcome::from_failures(failures, "4/4 derived polynomials equal the printed ones up to scalar")
}

fn golden_resultants() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut check = |e: &EliminationResult, wrt: &str, over: &[(&str, &str)]| {
        let fw = e.f.partial(wrt);
        for (v, name) in over {
            checked += 1;
            let r = resultant(&e.f, &fw, v).unwrap();
            if equal_up_to_scalar(&r, &golden::load(name)).is_none() {
                failures.push(name.to_string());
            }
        }
    };
    let xyz = |prefix: &'static str| -> Vec<(&'static str, &'static str)> {
        match prefix {
            "case1" => vec![("x", "case1_res_x"), ("y", "case1_res_y"), ("z", "case1_res_z")],
            _ => vec![("x", "case2_res_x"), ("y", "case2_res_y"), ("z", "case2_res_z")],
        }
    };
    check(&eliminate::eliminate_planes_case1(&sym("s1"), &sym("s2")), "w", &xyz("case1"));
    check(&eliminate::eliminate_planes_case2(&sym("alpha")).unwrap(), "w", &xyz("case2"));
    check(
        &eliminate::eliminate_2d(&sym("a"), &sym("b"), &sym("c"), &sym("d")).unwrap(),
        "t1",
        &[("t3", "planar_res_t3"), ("t4", "planar_res_t4")],
    );
    let ok = format!("{checked}/{checked} resultants equal the printed factored forms up to scalar");
    Outcome::from_failures(failures, ok)
}

fn status_4d(f: &MPoly, solve: &str, order: [&str; 3]) -> Option<DegeneracyStatus> {
    let g = solve_linear_variable(f, solve).ok()?;
    degeneracy_test_4d(&g, order).ok().map(|v| v.status)
}

fn degeneracy_certificates() -> Outcome {
    use DegeneracyStatus::{DegenerateConsistent, NonDegenerate};
    let mut r = rng(3);
    let mut failures = Vec::new();
    let mut expect = |label: String, got: Option<DegeneracyStatus>, want: DegeneracyStatus| {
        if got != Some(want) {
            failures.push(format!("{label}: {got:?}"));
        }
    };
    let case1 = |s1: MPoly, s2: MPoly| eliminate::eliminate_planes_case1(&s1, &s2).f;
    expect("case 1 symbolic".into(), status_4d(&case1(sym("s1"), sym("s2")), "z", ["y", "w", "x"]), NonDegenerate);
    for i in 0..SPECIALIZATIONS {
        let (s1, s2) = (rat(&mut r, 6), rat(&mut r, 6));
        expect(format!("case 1 #{i} s1={s1} s2={s2}"), status_4d(&case1(k(&s1), k(&s2)), "z", ["y", "w", "x"]), NonDegenerate);
    }

    let case2 = eliminate::eliminate_planes_case2(&sym("alpha")).unwrap().f;
    expect("case 2 symbolic".into(), status_4d(&case2, "x", ["z", "w", "y"]), NonDegenerate);
    let f = solve_linear_variable(&case2, "x").unwrap();
    let (verdict, expr) = degeneracy_test_4d_with_witness(&f, ["z", "w", "y"]).unwrap();
    let closed = RatFun::new(
        parse_poly("2*(w - y)*(w*(z - 1) - 1)").unwrap(),
        parse_poly("alpha*(y*(z - 1) - 1)^3").unwrap(),
    )
    .unwrap();
    let witness_ok =
        verdict.witness.as_deref() == Some("d/dy (f_z/f_w)") && expr.is_some_and(|e| rf_equal(&e, &closed));
    for i in 0..SPECIALIZATIONS {
        let alpha = loop {
            let a = nonzero_rat(&mut r, 6);
            if a != int(-1) {
                break a;
            }
        };
        let f = eliminate::eliminate_planes_case2(&k(&alpha)).unwrap().f;
        expect(format!("case 2 #{i} alpha={alpha}"), status_4d(&f, "x", ["z", "w", "y"]), NonDegenerate);
    }

    let at_inf = eliminate::eliminate_planes_at_infinity().f;
    expect("case 1 at infinity".into(), status_4d(&at_inf, "w", ["x", "y", "z"]), NonDegenerate);

    let mut spheres = 0;
    while spheres < SPECIALIZATIONS {
        let centers = [point3(&mut r, 5), point3(&mut r, 5), point3(&mut r, 5), point3(&mut r, 5)];
        if !centers_in_general_position(&centers) {
            continue;
        }
        let f = eliminate::spheres_polynomial(&centers.clone().map(|c| c.map(|x| k(&x)))).f;
        let got = degeneracy_test_4d_implicit(&f, ["t1", "t2", "t3"], "t4").ok().map(|v| v.status);
        expect(format!("spheres #{spheres}"), got, NonDegenerate);
        spheres += 1;
    }

    let planar = |a: MPoly, b: MPoly, c: MPoly, d: MPoly| -> Option<DegeneracyStatus> {
        let e = eliminate::eliminate_2d(&a, &b, &c, &d).ok()?;
        let t1 = eliminate::solve_2d_for_t1(&e).ok()?;
        degeneracy_test_3d(&t1, ["t3", "t4"]).ok().map(|v| v.status)
    };
    expect("planar symbolic".into(), planar(sym("a"), sym("b"), sym("c"), sym("d")), NonDegenerate);
    let mut done = 0;
    while done < SPECIALIZATIONS {
        let v: [Rational; 4] = std::array::from_fn(|_| rat(&mut r, 5));
        if v[0] == v[2] && v[1] == v[3] {
            continue;
        }
        let [a, b, c, d] = v.each_ref().map(k);
        expect(format!("planar #{done} centres {v:?}"), planar(a, b, c, d), NonDegenerate);
        done += 1;
    }

    for (label, src, solve) in [
        ("control x+y+z+w", "x + y + z + w", "w"),
        ("control xyz*w - 1", "x*y*z*w - 1", "w"),
        ("control x^2 + y^3 - z + w", "x^2 + y^3 - z + w", "w"),
    ] {
        expect(label.into(), status_4d(&parse_poly(src).unwrap(), solve, ["x", "y", "z"]), DegenerateConsistent);
    }
    if !witness_ok {
        failures.push(format!("case 2 witness {:?} does not match the closed form", verdict.witness));
    }
    let ok = format!(
        "NonDegenerate for symbolic and {SPECIALIZATIONS} specializations of every F, case 2 witness matches, \
         3 controls DegenerateConsistent"
    );
    Outcome::from_failures(failures, ok)
}

/// Sheaf parameters of the planes through an affine point, `None` if the
/// point is on an excluded plane.
fn plane_tuple(case: &CaseTag, p: &[Rational; 3]) -> Option<Vec<(&'static str, Rational)>> {
    let h = [p[0].clone(), p[1].clone(), p[2].clone(), int(1)];
    let dot = |v: &[Rational; 4]| -> Rational { v.iter().zip(&h).map(|(a, b)| a * b).sum() };
    ["x", "y", "z", "w"]
        .into_iter()
        .enumerate()
        .map(|(i, name)| {
            let (base, dir) = canonical_pencil(i + 1, case);
            let d = dot(&dir);
            (!d.is_zero()).then(|| (name, -dot(&base) / d))
        })
        .collect()
}

fn off_locus(e: &EliminationResult, values: &[(&str, Rational)]) -> bool {
    e.excluded_locus.iter().all(|g| g.eval(values).is_some_and(|v| !v.is_zero()))
}

fn planted_check(
    label: &str,
    e: &EliminationResult,
    mut planted: impl FnMut() -> Option<Vec<(&'static str, Rational)>>,
    mut random: impl FnMut() -> Vec<(&'static str, Rational)>,
    failures: &mut Vec<String>,
) {
    let (mut kept, mut attempts) = (0, 0);
    while kept < PLANTED && attempts < 50 * PLANTED {
        attempts += 1;
        let Some(vals) = planted() else { continue };
        if !off_locus(e, &vals) {
            continue;
        }
        kept += 1;
        if e.f.eval(&vals) != Some(Rational::zero()) {
            failures.push(format!("{label}: planted {vals:?} gives F != 0"));
            return;
        }
    }
    if kept < PLANTED {
        failures.push(format!("{label}: only {kept} planted solutions found"));
    }
    let zeros = (0..PLANTED).filter(|_| e.f.eval(&random()) == Some(Rational::zero())).count();
    if zeros > 0 {
        failures.push(format!("{label}: {zeros} random tuples vanish"));
    }
}

fn vanishing_oracles() -> Outcome {
    let mut r = rng(4);
    let mut failures = Vec::new();
    let cases = [
        ("case 1", CaseTag::Case1 { s1: rat(&mut r, 5), s2: rat(&mut r, 5) }),
        ("case 1 at infinity", CaseTag::Case1AtInfinity),
        ("case 2", CaseTag::Case2 { alpha: frac(7, 3) }),
    ];
    for (label, case) in &cases {
        let e = match case {
            CaseTag::Case1 { s1, s2 } => eliminate::eliminate_planes_case1(&k(s1), &k(s2)),
            CaseTag::Case1AtInfinity => eliminate::eliminate_planes_at_infinity(),
            CaseTag::Case2 { alpha } => eliminate::eliminate_planes_case2(&k(alpha)).unwrap(),
        };
        let mut r2 = r.clone();
        let mut r3 = r.clone();
        planted_check(
            label,
            &e,
            || plane_tuple(case, &point3(&mut r2, 9)),
            || ["x", "y", "z", "w"].into_iter().map(|v| (v, rat(&mut r3, 9))).collect(),
            &mut failures,
        );
    }

    let centers = loop {
        let c = [point3(&mut r, 4), point3(&mut r, 4), point3(&mut r, 4), point3(&mut r, 4)];
        if centers_in_general_position(&c) {
            break c;
        }
    };
    let e = eliminate::spheres_polynomial(&centers.clone().map(|c| c.map(|x| k(&x))));
    let (mut r2, mut r3) = (r.clone(), r.clone());
    planted_check(
        "spheres",
        &e,
        || {
            let p = point3(&mut r2, 9);
            Some(["t1", "t2", "t3", "t4"].into_iter().zip(&centers).map(|(t, c)| (t, squared_distance(&p, c))).collect())
        },
        || ["t1", "t2", "t3", "t4"].into_iter().map(|t| (t, rat(&mut r3, 40))).collect(),
        &mut failures,
    );

    let [a, b, c, d] = [frac(1, 3), int(2), int(-2), frac(5, 2)];
    let e = eliminate::eliminate_2d(&k(&a), &k(&b), &k(&c), &k(&d)).unwrap();
    let (mut r2, mut r3) = (r.clone(), r.clone());
    planted_check(
        "planar",
        &e,
        || {
            let (x, y) = (rat(&mut r2, 9), rat(&mut r2, 9));
            if x == a || x == c {
                return None;
            }
            let t3 = (&y - &b) / (&x - &a);
            let t4 = (&y - &d) / (&x - &c);
            Some(vec![("t1", &x * &x + &y * &y), ("t3", t3), ("t4", t4)])
        },
        || ["t1", "t3", "t4"].into_iter().map(|t| (t, rat(&mut r3, 9))).collect(),
        &mut failures,
    );
    Outcome::from_failures(failures, format!("5 eliminations: {PLANTED} planted zeros each, {PLANTED} random non-zeros each"))
}

fn plane_elimination(case: &CaseTag) -> EliminationResult {
    match case {
        CaseTag::Case1 { s1, s2 } => eliminate::eliminate_planes_case1(&k(s1), &k(s2)),
        CaseTag::Case1AtInfinity => eliminate::eliminate_planes_at_infinity(),
        CaseTag::Case2 { alpha } => eliminate::eliminate_planes_case2(&k(alpha)).unwrap(),
    }
}

/// `count_F = finite + Σ |M_i| · axial_i`: a rich point on axial line `i`
/// lies on every plane of sheaf `i`.
fn cross_check_sheaves(seed: u64, n: usize) -> Result<(), String> {
    let cfg = random_config(ConfigKind::Sheaves, n, seed).map_err(|e| e.to_string())?;
    let sheaves = cfg.sheaves().unwrap();
    let normal = normalize_sheaves(sheaves).map_err(|e| e.to_string())?;
    let reduced: Vec<SheafConfig> = sheaves
        .iter()
        .zip(&normal.sheaves)
        .enumerate()
        .map(|(i, (orig, mapped))| SheafConfig {
            axial: orig.axial.clone(),
            planes: orig
                .planes
                .iter()
                .zip(&mapped.planes)
                .filter(|(_, h)| pencil_parameter(i + 1, &normal.case, h).is_some())
                .map(|(h, _)| h.clone())
                .collect(),
        })
        .collect();
    let report = count_planes([&reduced[0], &reduced[1], &reduced[2], &reduced[3]]);
    if report.common_line_detected {
        return Err("common line".into());
    }
    let grids: Vec<(&str, Vec<Rational>)> =
        ["x", "y", "z", "w"].into_iter().zip(&normal.parameters).map(|(v, p)| (v, p.values.clone())).collect();
    let f_count = count_f_solutions(&plane_elimination(&normal.case).f, &grids);
    let sizes: Vec<u64> = normal.parameters.iter().map(|p| p.values.len() as u64).collect();
    let axial: u64 = report.axial_hits_per_family.iter().zip(&sizes).map(|(h, m)| h * m).sum();
    let expected = report.finite_count + axial;
    (f_count == expected)
        .then_some(())
        .ok_or(format!("seed {seed} n {n}: F solutions {f_count}, counter {} + axial {axial}", report.finite_count))
}

/// Lines perpendicular to the circle-centre axis become vertical after
/// normalization and have no slope; like excluded planes they are removed
/// before counting.
fn without_vertical(cfg: &PlanarConfig) -> PlanarConfig {
    let (p1, p2) = (cfg.circles1.center(), cfg.circles2.center());
    let (u, v) = (&p2[0] - &p1[0], &p2[1] - &p1[1]);
    let keep = |pencil: &Pencil2D| match pencil {
        Pencil2D::Lines { center, slopes } => Pencil2D::Lines {
            center: center.clone(),
            slopes: slopes.iter().filter(|t| !(&u + *t * &v).is_zero()).cloned().collect(),
        },
        other => other.clone(),
    };
    PlanarConfig { lines1: keep(&cfg.lines1), lines2: keep(&cfg.lines2), ..cfg.clone() }
}

fn cross_check_planar(seed: u64, n: usize) -> Result<usize, String> {
    let cfg = random_config(ConfigKind::Planar, n, seed).map_err(|e| e.to_string())?;
    let original = cfg.pencils().unwrap();
    let cfg = without_vertical(original);
    let removed = original.lines1.values().len() + original.lines2.values().len()
        - cfg.lines1.values().len()
        - cfg.lines2.values().len();
    let normal = normalize_planar(&cfg).map_err(|e| e.to_string())?;
    let (s1, s2, _) = effective_slopes(&cfg);
    if normal.s1.len() != s1.len() || normal.s2.len() != s2.len() {
        return Err(format!("seed {seed}: normalization dropped a line"));
    }
    let [a, b, c, d] = normal.centers.clone();
    let e = eliminate::eliminate_2d(&k(&a), &k(&b), &k(&c), &k(&d)).map_err(|e| e.to_string())?;
    let grids = [("t1", normal.r1.clone()), ("t3", normal.s1.clone()), ("t4", normal.s2.clone())];
    let r2: BTreeSet<&Rational> = normal.r2.iter().collect();
    let (p3, p4) = ([a, b], [c, d]);
    let mut points = BTreeSet::new();
    let mut accepted = 0;
    for tuple in f_solutions(&e.f, &grids) {
        let Some(p) = line_intersection(&p3, &tuple[1], &p4, &tuple[2]) else { continue };
        // the circle about (1, 0) is decided by the point itself
        if r2.contains(&squared_distance(&p, &[int(1), int(0)])) {
            accepted += 1;
            points.insert(p);
        }
    }
    let counted = count_2d(&cfg).finite_count;
    if points.len() != accepted {
        return Err(format!("seed {seed}: a rich point has two parameter tuples"));
    }
    (counted == accepted as u64)
        .then_some(removed)
        .ok_or(format!("seed {seed} n {n}: F tuples {accepted}, counter {counted}"))
}

fn cross_validation() -> Outcome {
    let mut failures = Vec::new();
    let mut vertical = 0;
    for i in 0..CROSS_CHECK_CONFIGS {
        let n = 3 + (i as usize % 6);
        if let Err(e) = cross_check_sheaves(SEED + i, n) {
            failures.push(format!("sheaves {e}"));
        }
        match cross_check_planar(SEED + i, n) {
            Ok(removed) => vertical += removed,
            Err(e) => failures.push(format!("planar {e}")),
        }
    }
    Outcome::from_failures(
        failures,
        format!(
            "{CROSS_CHECK_CONFIGS} sheaf and {CROSS_CHECK_CONFIGS} planar configs agree exactly, n in 3..=8 \
             ({vertical} slope-less lines removed)"
        ),
    )
}

fn constructions() -> Outcome {
    let mut failures = Vec::new();
    for n in [2, 5, 10] {
        let (sheaves, _) = build_degenerate_sheaves(n);
        if !count_planes(sheaves.each_ref()).common_line_detected {
            failures.push(format!("degenerate sheaves n={n}: no common line"));
        }
    }
    let exponent = |g: Generator, ns: &[usize]| {
        scaling_experiment(g, ns, SEED).ok().and_then(|rows| rows[0].fitted_exponent).unwrap_or(f64::NAN)
    };
    let lifted = exponent(Generator::ElekesLifted { d_per_n: 10 }, &[10, 20, 40]);
    if lifted.is_nan() || lifted < LIFTED_MIN_EXPONENT {
        failures.push(format!("lifted exponent {lifted:.3} < {LIFTED_MIN_EXPONENT}"));
    }
    let real = exponent(Generator::ElekesPlanar { complex: false }, &[20, 40, 80]);
    let complex = exponent(Generator::ElekesPlanar { complex: true }, &[20, 40, 80]);
    let (lo, hi) = PLANAR_EXPONENT_WINDOW;
    if !(lo..=hi).contains(&real) {
        failures.push(format!(
            "planar real three-rich exponent {real:.3} outside [{lo}, {hi}] (over C: {complex:.3})"
        ));
    }
    let ok = format!("common lines at n=2,5,10; lifted {lifted:.3}; planar real {real:.3} (over C {complex:.3})");
    let mut out = Outcome::from_failures(failures, ok);
    if !out.pass {
        out.detail = format!("{} [lifted {lifted:.3}]", out.detail);
    }
    out
}

fn sphere_reducibility() -> Outcome {
    let bs = [int(0), int(1), int(2), int(-1), frac(1, 2)];
    let es = [int(0), int(1), int(3), int(-2), frac(1, 3)];
    let others = [
        (int(2), int(1), int(2)),
        (int(3), int(2), int(-1)),
        (int(-1), int(0), int(3)),
        (frac(5, 2), int(3), int(1)),
        (int(-3), int(-2), int(5)),
    ];
    let t = ["t1", "t2", "t3", "t4"];
    let mut failures = Vec::new();
    for b in &bs {
        for e in &es {
            for (a, c, d) in &others {
                let centers = [
                    [int(0), int(0), int(0)],
                    [int(1), int(0), int(0)],
                    [a.clone(), b.clone(), int(0)],
                    [c.clone(), d.clone(), e.clone()],
                ];
                let f = eliminate::spheres_polynomial(&centers.map(|p| p.map(|x| k(&x)))).f;
                let verdict = quadratic_reducibility(&f, &t).map(|ev| ev.verdict);
                let product = verdict == Ok(QuadraticReducibility::ProductOfLinears);
                let be_zero = (b * e).is_zero();
                if product != be_zero {
                    failures.push(format!("a={a} b={b} c={c} d={d} e={e}: {verdict:?}"));
                }
            }
        }
    }
    Outcome::from_failures(failures, "125/125 grid points: ProductOfLinears exactly when b*e = 0")
}

fn transform_algebra() -> Outcome {
    let mut r = rng(8);
    let mut failures = Vec::new();
    let lines = canonical_lines();
    let mut tried = 0;
    while tried < 50 {
        let (a, b, c) = (rat(&mut r, 5), rat(&mut r, 5), rat(&mut r, 5));
        let m = m_abc(&a, &b, &c);
        if !m.is_invertible() {
            continue;
        }
        tried += 1;
        for (i, l) in lines.iter().enumerate() {
            if m.apply_line(l).as_ref() != Ok(l) {
                failures.push(format!("m_abc({a},{b},{c}) moves line {}", i + 1));
            }
        }
    }
    let det = determinant(m_abc_symbolic(&sym("A"), &sym("B"), &sym("C")));
    let den = parse_poly("1 + t3").unwrap();
    let sub = |src: &str| RatFun::new(parse_poly(src).unwrap(), den.clone()).unwrap();
    let composed = RatFun::from_poly(det)
        .substitute("A", &sub("t1 - t3 - 1"))
        .substitute("B", &sub("-1"))
        .substitute("C", &sub("-t1 - t2 + 2*t3 - 1"));
    let expected =
        RatFun::new(parse_poly("(1 + t1 + t2 + t3 + t2*t3)^2").unwrap(), parse_poly("(1 + t3)^4").unwrap()).unwrap();
    if !rf_equal(&composed, &expected) {
        failures.push(format!("det m_abc(solve_abc(t)) = {composed}"));
    }
    // the symbolic substitution mirrors solve_abc; confirm on a sample
    let (t1, t2, t3) = (frac(2, 3), int(-4), frac(5, 7));
    let (a, b, c) = solve_abc(&t1, &t2, &t3).unwrap();
    let vals = [("t1", t1), ("t2", t2), ("t3", t3)];
    if Some(m_abc(&a, &b, &c).determinant()) != expected.eval(&vals) {
        failures.push("solve_abc sample disagrees with the identity".into());
    }
    Outcome::from_failures(failures, "50 random m_abc fix the canonical lines; determinant identity holds symbolically")
}

/// One-sided check: `count(n) ≤ C · n^{e + slack}` with `C` fixed at the
/// smallest `n`.
fn bound_check(kind: ConfigKind, exponent: f64, ns: &[usize], seeds: u64) -> Result<String, String> {
    let mut rows = Vec::new();
    let mut skipped = 0;
    for &n in ns {
        for s in 0..seeds {
            let cfg = random_config(kind, n, SEED + 1000 * s + n as u64).map_err(|e| e.to_string())?;
            if !certify(&cfg).is_certified() {
                skipped += 1;
                continue;
            }
            rows.push((n, count(&cfg).finite_count));
        }
    }
    let n0 = ns[0];
    let c = rows
        .iter()
        .filter(|(n, _)| *n == n0)
        .map(|(_, k)| (*k).max(1) as f64 / (n0 as f64).powf(exponent))
        .fold(0.0, f64::max);
    if c == 0.0 {
        return Err(format!("{kind:?}: no certified configuration at n={n0}"));
    }
    for (n, k) in &rows {
        let bound = c * (*n as f64).powf(exponent + BOUND_EXPONENT_SLACK);
        if *k as f64 > bound {
            return Err(format!("{kind:?}: n={n} count {k} > {bound:.1}"));
        }
    }
    Ok(format!("{kind:?} {} configs ({skipped} uncertified skipped)", rows.len()))
}

fn bound_checks() -> Outcome {
    let ns = [3, 5, 8, 12];
    let checks = [
        bound_check(ConfigKind::Sheaves, 8.0 / 3.0, &ns, 3),
        bound_check(ConfigKind::Spheres, 8.0 / 3.0, &ns, 3),
        bound_check(ConfigKind::Planar, 12.0 / 7.0, &ns, 3),
    ];
    let (ok, failures): (Vec<_>, Vec<_>) = checks.into_iter().partition(Result::is_ok);
    let ok: Vec<String> = ok.into_iter().map(Result::unwrap).collect();
    Outcome::from_failures(
        failures.into_iter().map(Result::unwrap_err).collect(),
        format!("no certified configuration exceeds C n^(e + {BOUND_EXPONENT_SLACK}): {}", ok.join(", ")),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("golden polynomials", golden_polynomials),
        ("golden resultants", golden_resultants),
        ("degeneracy certificates", degeneracy_certificates),
        ("vanishing oracles", vanishing_oracles),
        ("counter vs F cross-validation", cross_validation),
        ("construction reproduction", constructions),
        ("spheres reducibility law", sphere_reducibility),
        ("transform algebra", transform_algebra),
        ("one-sided bound checks", bound_checks),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let verdict = if out.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!out.pass);
        println!("criterion {} {verdict} [{name}] ({:.1}s): {}", i + 1, start.elapsed().as_secs_f64(), out.detail);
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
