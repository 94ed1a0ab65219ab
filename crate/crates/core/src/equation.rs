//! Abel equations `x' = A x³ + B x² + C x` and their JSON documents.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::parse::parse_expr;
use crate::poly::Poly;
use crate::ring::{AbelRing, RingTag};
use crate::scalar::{Gaussian, Rational};
use crate::trig::TrigPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct AbelEquation<R> {
    pub a: R,
    pub b: R,
    pub c: R,
}

impl<R> AbelEquation<R> {
    /// Build without validation (lifted equations, out-of-scope fixtures).
    pub fn unchecked(a: R, b: R, c: R) -> Self {
        AbelEquation { a, b, c }
    }
}

impl<R: AbelRing> AbelEquation<R> {
    /// Build and enforce the standing assumptions `A, B, C ≢ 0`, `deg A > 0`.
    pub fn new(a: R, b: R, c: R) -> Result<Self> {
        let eq = AbelEquation { a, b, c };
        eq.validate()?;
        Ok(eq)
    }

    pub fn validate(&self) -> Result<()> {
        if self.a.is_zero() {
            return Err(Error::OutOfScope(
                "A ≡ 0 makes the equation a Bernoulli/Riccati-type equation".into(),
            ));
        }
        if self.b.is_zero() {
            return Err(Error::OutOfScope(
                "B ≡ 0 is treated separately in prior work".into(),
            ));
        }
        if self.c.is_zero() {
            return Err(Error::OutOfScope(
                "C ≡ 0 is treated separately in prior work".into(),
            ));
        }
        if self.a.is_constant() {
            return Err(Error::OutOfScope(
                "constant A is treated separately in prior work (deg A must be positive)".into(),
            ));
        }
        Ok(())
    }

    pub fn tag(&self) -> RingTag {
        R::TAG
    }

    pub fn from_strings(a: &str, b: &str, c: &str) -> Result<Self> {
        AbelEquation::new(parse_expr(a)?, parse_expr(b)?, parse_expr(c)?)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": R::TAG.name(),
            "A": self.a.render(),
            "B": self.b.render(),
            "C": self.c.render(),
        })
    }

    pub fn render(&self) -> String {
        format!(
            "x' = ({})·x³ + ({})·x² + ({})·x",
            self.a.render(),
            self.b.render(),
            self.c.render()
        )
    }
}

/// An equation over whichever ring its document names.
#[derive(Clone, Debug, PartialEq)]
pub enum DynEquation {
    PolyRational(AbelEquation<Poly<Rational>>),
    PolyGaussian(AbelEquation<Poly<Gaussian>>),
    Trig(AbelEquation<TrigPoly<Rational>>),
}

impl DynEquation {
    pub fn tag(&self) -> RingTag {
        match self {
            DynEquation::PolyRational(_) => RingTag::PolyRational,
            DynEquation::PolyGaussian(_) => RingTag::PolyGaussian,
            DynEquation::Trig(_) => RingTag::Trig,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            DynEquation::PolyRational(e) => e.to_json(),
            DynEquation::PolyGaussian(e) => e.to_json(),
            DynEquation::Trig(e) => e.to_json(),
        }
    }

    pub fn from_parts(ring: RingTag, a: &str, b: &str, c: &str) -> Result<Self> {
        Ok(match ring {
            RingTag::PolyRational => {
                DynEquation::PolyRational(AbelEquation::from_strings(a, b, c)?)
            }
            RingTag::PolyGaussian => {
                DynEquation::PolyGaussian(AbelEquation::from_strings(a, b, c)?)
            }
            RingTag::Trig => DynEquation::Trig(AbelEquation::from_strings(a, b, c)?),
        })
    }

    /// Load from a JSON document with keys `ring`, `A`, `B`, `C`. A given
    /// `ring_override` replaces the document's ring.
    pub fn from_json(doc: &Value, ring_override: Option<RingTag>) -> Result<Self> {
        let obj = doc
            .as_object()
            .ok_or_else(|| Error::Document("equation document must be a JSON object".into()))?;
        let field = |k: &str| -> Result<&str> {
            obj.get(k)
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Document(format!("missing string field '{k}'")))
        };
        let ring = match ring_override {
            Some(r) => r,
            None => {
                let name = field("ring")?;
                RingTag::parse(name)
                    .ok_or_else(|| Error::Document(format!("unknown ring '{name}'")))?
            }
        };
        DynEquation::from_parts(ring, field("A")?, field("B")?, field("C")?)
    }

    pub fn from_json_str(text: &str, ring_override: Option<RingTag>) -> Result<Self> {
        let v: Value = serde_json::from_str(text)?;
        DynEquation::from_json(&v, ring_override)
    }
}

impl From<AbelEquation<Poly<Rational>>> for DynEquation {
    fn from(e: AbelEquation<Poly<Rational>>) -> Self {
        DynEquation::PolyRational(e)
    }
}

impl From<AbelEquation<Poly<Gaussian>>> for DynEquation {
    fn from(e: AbelEquation<Poly<Gaussian>>) -> Self {
        DynEquation::PolyGaussian(e)
    }
}

impl From<AbelEquation<TrigPoly<Rational>>> for DynEquation {
    fn from(e: AbelEquation<TrigPoly<Rational>>) -> Self {
        DynEquation::Trig(e)
    }
}
