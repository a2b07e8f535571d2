//! The JSON instance file format.
//!
//! Lattice data (weights, `q`, identity-polytope coordinates) is written as
//! strings (`"-3"`, `"1/2"`) so exact values survive any JSON tooling. Plain
//! JSON integers are accepted on input as well. Coefficient magnitudes are
//! ordinary JSON numbers.

use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::Error;
use crate::exact::{format_rational, parse_rational, Rational};
use crate::lattice::{LatticeContext, Weight};
use crate::numeric::CoefficientVector;
use crate::polytope::RationalPolytope;
use crate::stability::{deg_of_v, FrameFamily, PairInstance, WeightSupport};

/// An integer stored as a JSON string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactInt(pub i64);

/// A rational stored as a JSON string `"n"` or `"n/d"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactRational(pub Rational);

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

struct ExactVisitor;

impl Visitor<'_> for ExactVisitor {
    type Value = Rational;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an exact number as a string like \"-3\" or \"1/2\", or a JSON integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
        parse_rational(v).map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
        Ok(crate::exact::int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
        i64::try_from(v).map(crate::exact::int).map_err(|_| E::custom("integer out of range"))
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(ExactVisitor).map(ExactRational)
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = d.deserialize_any(ExactVisitor)?;
        crate::exact::to_i64(&r).map(ExactInt).map_err(de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Free,
    Sl,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameSpec {
    pub v_support: Vec<Vec<ExactInt>>,
    pub w_support: Vec<Vec<ExactInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_coeffs: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w_coeffs: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<ExactInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity_polytope: Option<Vec<Vec<ExactRational>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep_weights: Option<Vec<Vec<ExactInt>>>,
    pub frames: Vec<FrameSpec>,
}

/// A located problem with an instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for SchemaError {}

fn schema(location: impl Into<String>, message: impl fmt::Display) -> SchemaError {
    SchemaError { location: location.into(), message: message.to_string() }
}

/// An instance file checked against every invariant.
#[derive(Debug, Clone)]
pub struct ValidatedInstance {
    pub context: LatticeContext,
    pub q: i64,
    pub family: FrameFamily,
    /// `(v, w)` coefficient vectors per frame; unit coefficients by default.
    pub coefficients: Vec<(CoefficientVector, CoefficientVector)>,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, SchemaError> {
        serde_json::from_str(text)
            .map_err(|e| schema(format!("line {}, column {}", e.line(), e.column()), e))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance files always serialize");
        s.push('\n');
        s
    }

    pub fn validate(&self) -> Result<ValidatedInstance, SchemaError> {
        let context = match (self.mode, self.rank, self.matrix_size) {
            (Mode::Free, Some(r), None) => LatticeContext::free(r).map_err(|e| schema("rank", e))?,
            (Mode::Sl, None, Some(n)) => LatticeContext::sl(n).map_err(|e| schema("matrix_size", e))?,
            (Mode::Free, _, _) => return Err(schema("rank", "free mode requires `rank` and no `matrix_size`")),
            (Mode::Sl, _, _) => return Err(schema("matrix_size", "sl mode requires `matrix_size` and no `rank`")),
        };
        let dim = context.ambient_dim();

        let weights = |loc: &str, raw: &[Vec<ExactInt>]| -> Result<Vec<Weight>, SchemaError> {
            raw.iter()
                .enumerate()
                .map(|(i, c)| {
                    if c.len() != dim {
                        return Err(schema(format!("{loc}[{i}]"), format!("expected {dim} coordinates, found {}", c.len())));
                    }
                    Ok(Weight::new(c.iter().map(|x| x.0).collect()))
                })
                .collect()
        };

        let identity = match (self.mode, &self.identity_polytope) {
            (Mode::Free, Some(pts)) => {
                for (i, p) in pts.iter().enumerate() {
                    if p.len() != dim {
                        return Err(schema(
                            format!("identity_polytope[{i}]"),
                            format!("expected {dim} coordinates, found {}", p.len()),
                        ));
                    }
                }
                let points = pts.iter().map(|p| p.iter().map(|x| x.0.clone()).collect()).collect();
                Some(RationalPolytope::new(points).map_err(|e| schema("identity_polytope", e))?)
            }
            (Mode::Free, None) => return Err(schema("identity_polytope", "required in free mode")),
            (Mode::Sl, Some(_)) => return Err(schema("identity_polytope", "not allowed in sl mode")),
            (Mode::Sl, None) => None,
        };

        let q = match (self.mode, self.q, &self.rep_weights) {
            (_, Some(q), None) => {
                if q.0 <= 0 {
                    return Err(schema("q", "must be a positive integer"));
                }
                q.0
            }
            (Mode::Sl, None, Some(rep)) => {
                let ws = weights("rep_weights", rep)?;
                let support = WeightSupport::new(context, ws).map_err(|e| schema("rep_weights", e))?;
                deg_of_v(&support, &context).map_err(|e| schema("rep_weights", e))?
            }
            (Mode::Sl, Some(_), Some(_)) => return Err(schema("q", "give exactly one of `q` and `rep_weights`")),
            (Mode::Sl, None, None) => return Err(schema("q", "sl mode requires `q` or `rep_weights`")),
            (Mode::Free, _, Some(_)) => return Err(schema("rep_weights", "only allowed in sl mode")),
            (Mode::Free, None, None) => return Err(schema("q", "required in free mode")),
        };

        if self.frames.is_empty() {
            return Err(schema("frames", "at least one frame is required"));
        }
        let mut pairs = Vec::with_capacity(self.frames.len());
        let mut coefficients = Vec::with_capacity(self.frames.len());
        for (k, frame) in self.frames.iter().enumerate() {
            let side = |name: &str, raw: &[Vec<ExactInt>], coeffs: &Option<Vec<f64>>| {
                let loc = format!("frames[{k}].{name}_support");
                if raw.is_empty() {
                    return Err(schema(&loc, "must be nonempty"));
                }
                let ws = weights(&loc, raw)?;
                let support = WeightSupport::new(context, ws).map_err(|e| schema(&loc, e))?;
                let coeffs = match coeffs {
                    None => CoefficientVector::unit(support.clone()),
                    Some(c) => {
                        let cloc = format!("frames[{k}].{name}_coeffs");
                        if support.len() != raw.len() {
                            return Err(schema(&cloc, "coefficients given for a support with repeated weights"));
                        }
                        CoefficientVector::new(support.clone(), c.clone()).map_err(|e| schema(&cloc, e))?
                    }
                };
                Ok((support, coeffs))
            };
            let (v, cv) = side("v", &frame.v_support, &frame.v_coeffs)?;
            let (w, cw) = side("w", &frame.w_support, &frame.w_coeffs)?;
            let pair = PairInstance::new(v, w, q, identity.clone()).map_err(|e| schema(format!("frames[{k}]"), e))?;
            pairs.push(pair);
            coefficients.push((cv, cw));
        }
        let family = FrameFamily::new(pairs).map_err(|e| schema("frames", e))?;
        Ok(ValidatedInstance { context, q, family, coefficients })
    }
}

impl From<Error> for SchemaError {
    fn from(e: Error) -> Self {
        schema("instance", e)
    }
}

/// Integer coordinate rows in file form.
pub fn exact_rows(rows: &[Vec<i64>]) -> Vec<Vec<ExactInt>> {
    rows.iter().map(|r| r.iter().map(|&x| ExactInt(x)).collect()).collect()
}
