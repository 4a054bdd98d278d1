//! Curve arrangements on ℙ² and ℙ¹×ℙ¹: points (including infinitely near
//! ones), multiplicities, local intersection numbers, singularity types and
//! Bézout completeness certificates.

mod classify;
pub mod intersect;
pub mod local;
mod locus;
mod point;

pub use classify::{classify_singularity, strict_transform_smooth_after_blowup, SingType, SingularPointRecord};
pub use intersect::{bezout_total, certify_complete, intersection_mult, intersection_mult_local, BezoutCertificate};
pub use locus::{component_singular_points, singular_locus_certify, LocusCertificate};
pub use point::{Dir, SurfPoint};

use crate::algebra::{AlgebraError, Base, Field, Form};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("zero curve")]
    ZeroCurve,
    #[error("{a} and {b} share a component")]
    CommonComponent { a: String, b: String },
    #[error("intersection list for {a}, {b} is incomplete: {deficit} missing")]
    IncompleteList { a: String, b: String, deficit: u64 },
    #[error("intersection list for {a}, {b} over-counts by {excess}")]
    OverCount { a: String, b: String, excess: u64 },
    #[error("tangent cone does not split over the working field: {cone}")]
    UnsplitTangentCone { cone: String },
    #[error("singular points of {component} not resolved: {factor}")]
    ComponentSingularityUnresolved { component: String, factor: String },
    #[error("claimed point {point} has multiplicity {mult} < 2")]
    NotSingular { point: String, mult: u32 },
    #[error("component {component} is not reduced")]
    NotReduced { component: String },
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("duplicate or conjugate points: {0}")]
    DuplicatePoint(String),
    #[error("Galois-orbit points need curves with rational coefficients ({0} is not)")]
    GaloisNeedsRationalCurves(String),
    #[error("no admissible shear found")]
    ShearSearchExhausted,
    #[error("unknown component {0}")]
    UnknownComponent(String),
    #[error("component {name} lives on {found:?}, arrangement on {expected:?}")]
    BaseMismatch { name: String, found: Base, expected: Base },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub name: String,
    pub form: Form,
    /// Coefficient in the divisor `Σ nᵢ Cᵢ`.
    pub coeff: u32,
}

/// A divisor `Σ nᵢ Cᵢ` on a base surface over a working field.
#[derive(Clone, Debug)]
pub struct Arrangement {
    base: Base,
    field: Field,
    components: Vec<Component>,
}

impl Arrangement {
    pub fn new(base: Base, field: Field, components: Vec<Component>) -> Result<Arrangement, ArrangementError> {
        for c in &components {
            if c.form.base() != base {
                return Err(ArrangementError::BaseMismatch { name: c.name.clone(), found: c.form.base(), expected: base });
            }
            if c.form.is_zero() {
                return Err(ArrangementError::ZeroCurve);
            }
        }
        Ok(Arrangement { base, field, components })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, name: &str) -> Result<&Component, ArrangementError> {
        self.components.iter().find(|c| c.name == name).ok_or_else(|| ArrangementError::UnknownComponent(name.into()))
    }

    /// Class of the divisor: weighted sum of bidegrees (or degrees).
    pub fn class(&self) -> (u32, u32) {
        self.components.iter().fold((0, 0), |(a, b), c| {
            let (x, y) = c.form.degree();
            (a + c.coeff * x, b + c.coeff * y)
        })
    }

    /// `Σ nᵢ · mult_at(Cᵢ, p)`.
    pub fn mult_at(&self, p: &SurfPoint) -> Result<u32, ArrangementError> {
        self.components.iter().try_fold(0, |acc, c| Ok(acc + c.coeff * mult_at(&c.form, &self.field, p)?))
    }

    /// Galois-orbit points are only meaningful when every curve is defined
    /// over ℚ.
    pub fn check_galois(&self, points: &[SurfPoint]) -> Result<(), ArrangementError> {
        if !points.iter().any(SurfPoint::is_galois) {
            return Ok(());
        }
        for c in &self.components {
            if !c.form.chart(&self.field, 0).is_rational() {
                return Err(ArrangementError::GaloisNeedsRationalCurves(c.name.clone()));
            }
        }
        Ok(())
    }
}

/// Multiplicity of a curve at a point; infinitely near points use the
/// strict transform.
pub fn mult_at(form: &Form, field: &Field, p: &SurfPoint) -> Result<u32, ArrangementError> {
    Ok(local::local_germ(form, field, p)?.order().unwrap_or(0))
}
