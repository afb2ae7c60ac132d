//! Exact-arithmetic tools for four-rich point problems in P³ and the plane.

pub mod analyzer;
pub mod configs;
pub mod counter;
pub mod eliminate;
pub mod error;
pub mod geom3;
pub mod golden;
pub mod linalg;
pub mod polyalg;
pub mod ratfun;
pub mod rational;

pub use error::{Error, Result};
pub use polyalg::{parse_poly, MPoly};
pub use ratfun::RatFun;
pub use rational::Rational;
