//! End-to-end certificates per configuration, scaling experiments and the
//! pinned-distance demo.

mod certify;
mod distances;
mod experiment;

use serde::{Deserialize, Serialize};

use crate::counter::Flag;
use crate::geom3::{CaseTag, ProjTransform};
use crate::polyalg::{MPoly, QuadraticEvidence, ReducibilityEvidence};
use crate::ratfun::DegeneracyVerdict;
use crate::rational::{serde_rational_vec, Rational};

pub use certify::{
    certify, certify_2d, certify_sheaves, certify_spheres, normalize_planar, normalize_sheaves, NormalizedPlanar,
    NormalizedSheaves,
};
pub use distances::{pinned_distance_demo, pinned_distances_of_construction, PinnedDistanceReport};
pub use experiment::{fit_exponent, scaling_experiment, write_csv, Generator, ScalingRow, CSV_HEADER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Setting {
    Sheaves,
    Spheres,
    Planar,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Irreducibility {
    /// Degree one in a variable: resultants against the derivative.
    Linear(ReducibilityEvidence),
    /// Total degree two: rank of the quadratic form.
    Quadratic(QuadraticEvidence),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        match self {
            Irreducibility::Linear(e) => e.verdict == crate::polyalg::LinearReducibility::Irreducible,
            Irreducibility::Quadratic(e) => e.verdict == crate::polyalg::QuadraticReducibility::Irreducible,
        }
    }
}

/// Parameters of one normalized sheaf in its canonical pencil.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheafParameters {
    #[serde(with = "serde_rational_vec")]
    pub values: Vec<Rational>,
    /// Planes equal to the pencil's missing member.
    pub excluded: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisCertificate {
    pub setting: Setting,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<CaseTag>,
    #[serde(rename = "F")]
    pub f: Option<MPoly>,
    pub parameters: Vec<String>,
    pub irreducibility: Option<Irreducibility>,
    pub degeneracy: Option<DegeneracyVerdict>,
    /// `8/3` or `12/7`, present only when every check passed.
    pub bound_exponent: Option<String>,
    /// Theorem that supplies the exponent once its hypotheses are verified.
    pub theorem: Option<String>,
    pub hypothesis_flags: Vec<Flag>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transform: Option<ProjTransform>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub normalized_parameters: Vec<SheafParameters>,
}

impl AnalysisCertificate {
    fn empty(setting: Setting) -> AnalysisCertificate {
        AnalysisCertificate {
            setting,
            case: None,
            f: None,
            parameters: Vec::new(),
            irreducibility: None,
            degeneracy: None,
            bound_exponent: None,
            theorem: None,
            hypothesis_flags: Vec::new(),
            notes: Vec::new(),
            transform: None,
            normalized_parameters: Vec::new(),
        }
    }

    pub fn is_certified(&self) -> bool {
        self.bound_exponent.is_some()
    }

    /// Sets the bound iff irreducible, non-degenerate and unflagged.
    fn conclude(&mut self, exponent: &str, theorem: &str) {
        let ok = self.hypothesis_flags.is_empty()
            && self.irreducibility.as_ref().is_some_and(Irreducibility::is_irreducible)
            && self.degeneracy.as_ref().is_some_and(DegeneracyVerdict::is_non_degenerate);
        if ok {
            self.bound_exponent = Some(exponent.to_string());
            self.theorem = Some(theorem.to_string());
        }
    }
}

pub(crate) fn constant(q: &Rational) -> MPoly {
    MPoly::constant(q.clone())
}
