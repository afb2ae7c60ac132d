//! Transcribed printed polynomials, compared up to a nonzero scalar.

use crate::error::Result;
use crate::polyalg::{parse_poly, MPoly};

macro_rules! golden {
    ($($name:ident => $file:literal,)*) => {
        pub const ALL: &[(&str, &str)] = &[$((stringify!($name), include_str!(concat!("../golden/", $file))),)*];
    };
}

golden! {
    case1_F => "case1_F.txt",
    case1_F_corrected => "case1_F_corrected.txt",
    case1_f_denominator => "case1_f_denominator.txt",
    at_infinity_F => "at_infinity_F.txt",
    case2_F => "case2_F.txt",
    case2_f_denominator => "case2_f_denominator.txt",
    planar_F => "planar_F.txt",
    planar_t1_numerator => "planar_t1_numerator.txt",
    case1_res_x => "case1_res_x.txt",
    case1_res_y => "case1_res_y.txt",
    case1_res_z => "case1_res_z.txt",
    case2_res_x => "case2_res_x.txt",
    case2_res_y => "case2_res_y.txt",
    case2_res_z => "case2_res_z.txt",
    planar_res_t3 => "planar_res_t3.txt",
    planar_res_t4 => "planar_res_t4.txt",
}

/// Drops `#` comment lines and joins the rest.
pub fn parse_golden(text: &str) -> Result<MPoly> {
    let body: Vec<&str> = text.lines().filter(|l| !l.trim_start().starts_with('#')).collect();
    parse_poly(&body.join(" "))
}

/// Panics on an unknown name or a malformed file; both are build defects.
pub fn load(name: &str) -> MPoly {
    let (_, text) = ALL.iter().find(|(n, _)| *n == name).unwrap_or_else(|| panic!("no golden file {name}"));
    parse_golden(text).unwrap_or_else(|e| panic!("golden {name}: {e}"))
}
