//! Exact symbolic analysis of Abel equations `x' = A x³ + B x² + C x`.

pub mod classifier;
pub mod darboux;
pub mod degree;
pub mod equation;
pub mod error;
pub mod factor;
pub mod finder;
pub mod generator;
pub mod linalg;
pub mod numeric;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;
pub mod scalar;
pub mod structure;
pub mod trig;

pub use degree::Degree;
pub use equation::{AbelEquation, DynEquation};
pub use error::{Error, Result};
pub use finder::{find_invariant_curves, InvariantCurve};
pub use poly::Poly;
pub use ring::{AbelRing, CurveRing, RingTag};
pub use scalar::{BaseField, Field, Gaussian, QuadExt, Rational, RealField};
pub use trig::TrigPoly;
