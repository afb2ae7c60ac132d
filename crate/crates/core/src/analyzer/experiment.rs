use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::configs::{build_degenerate_sheaves, build_elekes_lifted, build_elekes_planar, random_config, ConfigKind};
use crate::counter::{count, count_circle_triples, count_planes, count_spheres, Flag, RichPointReport};
use crate::error::{Error, Result};
use crate::rational::int;

pub const CSV_HEADER: [&str; 6] = ["n", "count", "common_line", "axial_hits", "seconds", "fitted_exponent"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "snake_case")]
pub enum Generator {
    /// Lifted three-circle construction with fourth centre at `D = d_per_n · n`.
    ElekesLifted { d_per_n: i64 },
    /// Three collinear circle pencils; three-rich points over ℝ or ℂ.
    ElekesPlanar { complex: bool },
    DegenerateSheaves,
    Random { kind: ConfigKind },
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Generator> {
        Ok(match s {
            "elekes-lifted" => Generator::ElekesLifted { d_per_n: 10 },
            "elekes-planar" => Generator::ElekesPlanar { complex: false },
            "elekes-planar-complex" => Generator::ElekesPlanar { complex: true },
            "degenerate-sheaves" => Generator::DegenerateSheaves,
            other => match other.strip_prefix("random-") {
                Some(kind) => Generator::Random { kind: kind.parse()? },
                None => return Err(Error::InvalidConfig(format!("unknown generator {other:?}"))),
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingRow {
    pub n: usize,
    pub count: u64,
    pub common_line: bool,
    pub axial_hits: u64,
    pub seconds: f64,
    pub flags: Vec<Flag>,
    /// Same value on every row of one experiment.
    pub fitted_exponent: Option<f64>,
}

fn run_one(generator: Generator, n: usize, seed: u64) -> Result<RichPointReport> {
    Ok(match generator {
        Generator::ElekesLifted { d_per_n } => {
            let fams = build_elekes_lifted(n, &int(d_per_n * n as i64));
            count_spheres(fams.each_ref())
        }
        Generator::ElekesPlanar { complex } => {
            let t = count_circle_triples(&build_elekes_planar(n));
            RichPointReport { finite_count: if complex { t.complex } else { t.real }, ..Default::default() }
        }
        Generator::DegenerateSheaves => count_planes(build_degenerate_sheaves(n).0.each_ref()),
        Generator::Random { kind } => count(&random_config(kind, n, seed.wrapping_add(n as u64))?),
    })
}

/// Counts for each `n` and one least-squares exponent over the rows.
pub fn scaling_experiment(generator: Generator, n_list: &[usize], seed: u64) -> Result<Vec<ScalingRow>> {
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let start = Instant::now();
        let report = run_one(generator, n, seed)?;
        rows.push(ScalingRow {
            n,
            count: report.finite_count,
            common_line: report.common_line_detected,
            axial_hits: report.axial_point_hits,
            seconds: start.elapsed().as_secs_f64(),
            flags: report.degenerate_flags,
            fitted_exponent: None,
        });
    }
    let fitted = fit_exponent(&rows);
    for row in &mut rows {
        row.fitted_exponent = fitted;
    }
    Ok(rows)
}

/// OLS slope of `ln count` on `ln n`. Rows with a common line or a zero
/// count are left out; `None` unless three distinct `n` remain.
pub fn fit_exponent(rows: &[ScalingRow]) -> Option<f64> {
    if rows.iter().any(|r| r.common_line) {
        return None;
    }
    let pts: Vec<(f64, f64)> =
        rows.iter().filter(|r| r.count > 0).map(|r| ((r.n as f64).ln(), (r.count as f64).ln())).collect();
    let mut ns: Vec<usize> = rows.iter().filter(|r| r.count > 0).map(|r| r.n).collect();
    ns.dedup();
    if ns.len() < 3 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    Some(sxy / sxx)
}

pub fn write_csv<W: Write>(rows: &[ScalingRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.count.to_string(),
            r.common_line.to_string(),
            r.axial_hits.to_string(),
            format!("{:.6}", r.seconds),
            r.fitted_exponent.map(|e| format!("{e:.6}")).unwrap_or_default(),
        ])?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(n: usize, count: u64) -> ScalingRow {
        ScalingRow { n, count, common_line: false, axial_hits: 0, seconds: 0.0, flags: vec![], fitted_exponent: None }
    }

    #[test]
    fn fit_recovers_power_law() {
        let rows: Vec<ScalingRow> = [4, 8, 16, 32].map(|n| row(n, 3 * (n as u64).pow(2))).to_vec();
        assert!((fit_exponent(&rows).unwrap() - 2.0).abs() < 1e-9);
        assert_eq!(fit_exponent(&rows[..2]), None);
        let mut flagged = rows.clone();
        flagged[0].common_line = true;
        assert_eq!(fit_exponent(&flagged), None);
    }

    #[test]
    fn csv_layout() {
        let rows = scaling_experiment(Generator::ElekesPlanar { complex: true }, &[3, 4, 5], 0).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,count,common_line,axial_hits,seconds,fitted_exponent"));
        assert_eq!(lines.count(), 3);
    }

    #[test]
    fn degenerate_rows_have_no_exponent() {
        let rows = scaling_experiment(Generator::DegenerateSheaves, &[2, 3, 4], 0).unwrap();
        assert!(rows.iter().all(|r| r.common_line && r.fitted_exponent.is_none()));
    }

    #[test]
    fn generator_names() {
        assert_eq!("random-spheres".parse::<Generator>().unwrap(), Generator::Random { kind: ConfigKind::Spheres });
        assert!("nope".parse::<Generator>().is_err());
    }
}
