use super::intersect::{certify_complete, check_distinct, monic_in_y, shear, BezoutCertificate};
use super::{Arrangement, ArrangementError, Component, SurfPoint};
use crate::algebra::{resultant_y, Fe, Field, Poly2, UPoly};
use crate::par::par_map;
use serde::{Deserialize, Serialize};

const SHEARS: i64 = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusCertificate {
    /// `(component, component, certificate)` for every pair.
    pub pairs: Vec<(String, String, BezoutCertificate)>,
    /// Claimed points at which each component is singular.
    pub component_singular: Vec<(String, Vec<String>)>,
}

/// Certifies that the claimed points are singular and that the arrangement
/// has no other singular points.
pub fn singular_locus_certify(arr: &Arrangement, claimed: &[SurfPoint]) -> Result<LocusCertificate, ArrangementError> {
    let field = arr.field();
    check_distinct(claimed)?;
    arr.check_galois(claimed)?;
    for p in claimed {
        let m = arr.mult_at(p)?;
        if m < 2 {
            return Err(ArrangementError::NotSingular { point: p.to_string(), mult: m });
        }
    }
    let comps = arr.components();
    let pairs: Vec<(usize, usize)> = (0..comps.len()).flat_map(|i| (i + 1..comps.len()).map(move |j| (i, j))).collect();
    let certs = par_map(&pairs, |&(i, j)| {
        let (a, b) = (&comps[i], &comps[j]);
        certify_complete((&a.name, &b.name), &a.form, &b.form, field, claimed).map(|c| (a.name.clone(), b.name.clone(), c))
    });
    let pairs = certs.into_iter().collect::<Result<Vec<_>, _>>()?;
    let singular = par_map(comps, |c| component_singular_points(c, field, claimed).map(|pts| (c.name.clone(), pts)));
    let component_singular = singular.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(LocusCertificate { pairs, component_singular })
}

fn unresolved(c: &Component, detail: String) -> ArrangementError {
    ArrangementError::ComponentSingularityUnresolved { component: c.name.clone(), factor: detail }
}

/// Locates the singular points of one component, which must all be claimed.
///
/// In every chart and for a shear making the curve monic in `y`, the
/// x-coordinates of singular points are roots of
/// `gcd(Res(F,F_x), Res(F,F_y), Res(F_x,F_y))`. Claimed values are divided
/// out (whole ℚ-minimal polynomials for Galois points) and the rest must be
/// constant. On each remaining line `gcd(F, F_x, F_y)` must be a product of
/// claimed `y`-values.
pub fn component_singular_points(c: &Component, field: &Field, claimed: &[SurfPoint]) -> Result<Vec<String>, ArrangementError> {
    let mut found = Vec::new();
    for p in claimed {
        if super::local::local_germ(&c.form, field, p)?.order().unwrap_or(0) >= 2 {
            found.push(p.to_string());
        }
    }
    for chart in 0..c.form.base().num_charts() {
        let f = c.form.chart(field, chart);
        if f.total_degree().unwrap_or(0) <= 1 {
            continue;
        }
        let pts: Vec<(Fe, Fe, bool)> = claimed
            .iter()
            .filter(|p| p.level() == 0)
            .filter_map(|p| p.affine_in_chart(chart).map(|(a, b)| (a, b, p.is_galois())))
            .collect();
        let mut last = String::new();
        let mut ok = false;
        for s in 0..SHEARS {
            match check_chart(c, &f, &Fe::from_int(field, s), &pts)? {
                None => {
                    ok = true;
                    break;
                }
                Some(residual) => last = residual,
            }
        }
        if !ok {
            return Err(unresolved(c, format!("chart {chart}: {last}")));
        }
    }
    Ok(found)
}

/// `None` when the chart is certified with this shear, otherwise a
/// description of the residual factor.
fn check_chart(c: &Component, f: &Poly2, s: &Fe, pts: &[(Fe, Fe, bool)]) -> Result<Option<String>, ArrangementError> {
    let fs = shear(f, s);
    if !monic_in_y(&fs) {
        return Ok(Some("shear not admissible".into()));
    }
    let (fx, fy) = (fs.deriv_x(), fs.deriv_y());
    let r2 = resultant_y(&fs, &fy)?;
    if r2.is_zero() {
        return Err(ArrangementError::NotReduced { component: c.name.clone() });
    }
    let mut g = r2;
    if !fx.is_zero() {
        let r1 = resultant_y(&fs, &fx)?;
        if r1.is_zero() {
            return Err(ArrangementError::NotReduced { component: c.name.clone() });
        }
        g = g.gcd(&r1);
        let r3 = resultant_y(&fx, &fy)?;
        if !r3.is_zero() {
            g = g.gcd(&r3);
        }
    }
    // lines x = a − s·b through the claimed points
    let mut lines: Vec<(Fe, bool)> = Vec::new();
    for (a, b, gal) in pts {
        let l = a - &(s * b);
        if !lines.iter().any(|(m, _)| *m == l) {
            lines.push((l, *gal));
        }
    }
    for (l, gal) in &lines {
        let d = if *gal { UPoly::from_rational(g.field(), &l.minpoly()) } else { UPoly::linear_root(l) };
        g = g.strip(&d).0;
    }
    if g.degree().unwrap_or(0) > 0 {
        return Ok(Some(format!("unclaimed x-values {:?}", g.monic())));
    }
    for (l, _) in &lines {
        let mut h = fs.eval_x(l).gcd(&fx.eval_x(l)).gcd(&fy.eval_x(l));
        for (a, b, _) in pts {
            if &(a - &(s * b)) == l {
                h = h.strip(&UPoly::linear_root(b)).0;
            }
        }
        if h.degree().unwrap_or(0) > 0 {
            return Err(unresolved(c, format!("unclaimed singular point on the line x = {l}: {:?}", h.monic())));
        }
    }
    Ok(None)
}
