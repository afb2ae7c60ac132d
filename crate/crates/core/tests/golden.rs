//! Derived polynomials against the transcribed printed forms.

use fourrich::eliminate::{self, EliminationResult};
use fourrich::golden;
use fourrich::polyalg::{equal_up_to_scalar, resultant};
use fourrich::MPoly;

fn sym(s: &str) -> MPoly {
    MPoly::var(s)
}

fn resultants(e: &EliminationResult, wrt: &str, over: &[&str]) -> Vec<MPoly> {
    let fw = e.f.partial(wrt);
    over.iter().map(|v| resultant(&e.f, &fw, v).unwrap()).collect()
}

#[test]
fn at_infinity_matches_printed() {
    let e = eliminate::eliminate_planes_at_infinity();
    let printed = golden::load("at_infinity_F")
        .rename("m1", "x")
        .rename("m2", "y")
        .rename("m3", "z")
        .rename("m4", "w");
    assert!(equal_up_to_scalar(&e.f, &printed).is_some());
}

#[test]
fn case2_matches_printed() {
    let e = eliminate::eliminate_planes_case2(&sym("alpha")).unwrap();
    assert!(equal_up_to_scalar(&e.f, &golden::load("case2_F")).is_some());
    for (r, name) in resultants(&e, "w", &["x", "y", "z"]).iter().zip(["case2_res_x", "case2_res_y", "case2_res_z"]) {
        assert!(equal_up_to_scalar(r, &golden::load(name)).is_some(), "{name}");
    }
}

#[test]
fn planar_matches_printed() {
    let e = eliminate::eliminate_2d(&sym("a"), &sym("b"), &sym("c"), &sym("d")).unwrap();
    assert!(equal_up_to_scalar(&e.f, &golden::load("planar_F")).is_some());
    for (r, name) in resultants(&e, "t1", &["t3", "t4"]).iter().zip(["planar_res_t3", "planar_res_t4"]) {
        assert!(equal_up_to_scalar(r, &golden::load(name)).is_some(), "{name}");
    }
}

#[test]
fn case1_resultants_match_printed() {
    let e = eliminate::eliminate_planes_case1(&sym("s1"), &sym("s2"));
    for (r, name) in resultants(&e, "w", &["x", "y", "z"]).iter().zip(["case1_res_x", "case1_res_y", "case1_res_z"]) {
        assert!(equal_up_to_scalar(r, &golden::load(name)).is_some(), "{name}");
    }
}

#[test]
fn case1_matches_corrected_form_only() {
    let e = eliminate::eliminate_planes_case1(&sym("s1"), &sym("s2"));
    assert!(equal_up_to_scalar(&e.f, &golden::load("case1_F_corrected")).is_some());
    assert!(equal_up_to_scalar(&e.f, &golden::load("case1_F")).is_none());
}
