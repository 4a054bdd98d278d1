use super::local::root_germ;
use super::{ArrangementError, SurfPoint};
use crate::algebra::{resultant_y, Base, Fe, Field, Form, Poly2};
use serde::{Deserialize, Serialize};

const MAX_SHEAR: i64 = 64;

/// `f(x + s·y, y)`
pub(crate) fn shear(f: &Poly2, s: &Fe) -> Poly2 {
    let fld = f.field();
    let px = Poly2::x(fld).add(&Poly2::y(fld).scale(s));
    f.compose(&px, &Poly2::y(fld))
}

/// Whether the sheared polynomial has a nonzero constant leading
/// coefficient in `y`.
pub(crate) fn monic_in_y(f: &Poly2) -> bool {
    match (f.total_degree(), f.deg_y()) {
        (Some(d), Some(dy)) => d == dy && !f.coeff(0, dy).is_zero(),
        _ => false,
    }
}

/// Local intersection multiplicity at the origin of two germs.
///
/// After a shear `x ↦ x + s·y` (s = 0, 1, 2, … first valid) the first germ
/// has constant leading coefficient in `y` and the two restrictions to
/// `x = 0` share no root other than `y = 0`; then the multiplicity is the
/// order at 0 of `Res_y`.
pub fn intersection_mult_local(f: &Poly2, g: &Poly2) -> Result<u32, ArrangementError> {
    let fld = f.field().clone();
    let zero = Fe::zero(&fld);
    if f.is_zero() || g.is_zero() {
        return Err(ArrangementError::ZeroCurve);
    }
    if !f.eval(&zero, &zero).is_zero() || !g.eval(&zero, &zero).is_zero() {
        return Ok(0);
    }
    for s in 0..MAX_SHEAR {
        let sf = Fe::from_int(&fld, s);
        let (fs, gs) = (shear(f, &sf), shear(g, &sf));
        if !monic_in_y(&fs) {
            continue;
        }
        let common = fs.eval_x(&zero).gcd(&gs.eval_x(&zero));
        let only_origin = common.coeffs().iter().rev().skip(1).all(Fe::is_zero);
        if !only_origin {
            continue;
        }
        let r = resultant_y(&fs, &gs)?;
        return match r.ord0() {
            None => Err(ArrangementError::CommonComponent { a: "germ".into(), b: "germ".into() }),
            Some(k) => Ok(k as u32),
        };
    }
    Err(ArrangementError::ShearSearchExhausted)
}

/// Local intersection multiplicity of two curves at a point of the base.
pub fn intersection_mult(c1: &Form, c2: &Form, field: &Field, p: &SurfPoint) -> Result<u32, ArrangementError> {
    if p.level() > 0 {
        return Err(ArrangementError::InvalidPoint(format!("{p} is infinitely near")));
    }
    intersection_mult_local(&root_germ(c1, field, p), &root_germ(c2, field, p))
}

/// Bézout number of two curve classes.
pub fn bezout_total(base: Base, d1: (u32, u32), d2: (u32, u32)) -> u64 {
    match base {
        Base::P2 => d1.0 as u64 * d2.0 as u64,
        Base::P1xP1 => d1.0 as u64 * d2.1 as u64 + d2.0 as u64 * d1.1 as u64,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BezoutCertificate {
    pub total: u64,
    /// `(point, intersection multiplicity, orbit size)` for each claimed
    /// point lying on both curves.
    pub points: Vec<(String, u32, usize)>,
}

/// Whether two curves share a component, tested chart by chart.
pub fn share_component(c1: &Form, c2: &Form, field: &Field) -> bool {
    (0..c1.base().num_charts()).any(|c| {
        let (a, b) = (c1.chart(field, c), c2.chart(field, c));
        a.gcd(&b).total_degree().unwrap_or(0) > 0
    })
}

pub(crate) fn check_distinct(claimed: &[SurfPoint]) -> Result<(), ArrangementError> {
    for (i, p) in claimed.iter().enumerate() {
        for q in &claimed[i + 1..] {
            let clash = if p.is_galois() { p.may_be_conjugate(q) } else { q.may_be_conjugate(p) };
            if clash {
                return Err(ArrangementError::DuplicatePoint(format!("{p} and {q}")));
            }
        }
    }
    Ok(())
}

/// Certifies that `claimed` contains every intersection point of two
/// curves: the weighted sum of local multiplicities must equal the Bézout
/// number.
pub fn certify_complete(
    names: (&str, &str),
    c1: &Form,
    c2: &Form,
    field: &Field,
    claimed: &[SurfPoint],
) -> Result<BezoutCertificate, ArrangementError> {
    if share_component(c1, c2, field) {
        return Err(ArrangementError::CommonComponent { a: names.0.into(), b: names.1.into() });
    }
    check_distinct(claimed)?;
    let total = bezout_total(c1.base(), c1.degree(), c2.degree());
    let mut points = Vec::new();
    let mut sum = 0u64;
    for p in claimed {
        let i = intersection_mult(c1, c2, field, p)?;
        if i > 0 {
            let w = p.orbit_size();
            sum += i as u64 * w as u64;
            points.push((p.to_string(), i, w));
        }
    }
    match sum.cmp(&total) {
        std::cmp::Ordering::Less => Err(ArrangementError::IncompleteList { a: names.0.into(), b: names.1.into(), deficit: total - sum }),
        std::cmp::Ordering::Greater => Err(ArrangementError::OverCount { a: names.0.into(), b: names.1.into(), excess: sum - total }),
        std::cmp::Ordering::Equal => Ok(BezoutCertificate { total, points }),
    }
}
