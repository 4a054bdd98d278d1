//! Local germs at points, blow-ups and tangent cones.

use super::{ArrangementError, Dir, SurfPoint};
use crate::algebra::{Field, Form, Poly2, UPoly};

/// The curve in the canonical chart of the root point, moved to the origin.
pub fn root_germ(form: &Form, field: &Field, p: &SurfPoint) -> Poly2 {
    let (a, b) = p.local_coords();
    form.chart(field, p.canonical_chart()).translate(&a, &b)
}

/// Blows up the origin and returns the strict transform, re-centred at the
/// point of the exceptional line in direction `dir`, together with the
/// multiplicity that was removed.
///
/// `Slope(λ)`: `g(u, u(v+λ)) / u^m`, exceptional line `u = 0`.
/// `Vertical`: `g(uv, v) / v^m`, exceptional line `v = 0`.
pub fn blow_up(g: &Poly2, dir: &Dir) -> (Poly2, u32) {
    let f = g.field();
    let m = g.order().unwrap_or(0);
    let (x, y) = (Poly2::x(f), Poly2::y(f));
    match dir {
        Dir::Slope(l) => {
            let py = x.mul(&y.add(&Poly2::constant(l.clone())));
            (g.compose(&x, &py).div_monomial(m, 0).expect("divisible by u^m"), m)
        }
        Dir::Vertical => {
            let px = x.mul(&y);
            (g.compose(&px, &y).div_monomial(0, m).expect("divisible by v^m"), m)
        }
    }
}

/// Local equation of the new exceptional line at the point reached by `dir`.
pub fn exceptional_germ(field: &Field, dir: &Dir) -> Poly2 {
    match dir {
        Dir::Slope(_) => Poly2::x(field),
        Dir::Vertical => Poly2::y(field),
    }
}

/// Germ of the (strict transform of the) curve at a possibly infinitely near
/// point.
pub fn local_germ(form: &Form, field: &Field, p: &SurfPoint) -> Result<Poly2, ArrangementError> {
    if form.is_zero() {
        return Err(ArrangementError::ZeroCurve);
    }
    let mut g = root_germ(form, field, p);
    for d in p.path() {
        g = blow_up(&g, d).0;
    }
    Ok(g)
}

/// Tangent cone of a germ at the origin.
#[derive(Clone, Debug)]
pub struct Cone {
    pub mult: u32,
    /// `h(1, λ)` for the lowest homogeneous part `h`.
    slopes: UPoly,
    /// Multiplicity of the direction `x = 0` in the cone.
    vertical: u32,
}

impl Cone {
    pub fn of(g: &Poly2) -> Cone {
        let f = g.field();
        let Some(m) = g.order() else {
            return Cone { mult: 0, slopes: UPoly::one(f), vertical: 0 };
        };
        let h = g.homogeneous_part(m);
        let slopes = h.dehomogenize_binary();
        let vertical = m - slopes.degree().unwrap_or(0) as u32;
        Cone { mult: m, slopes, vertical }
    }

    /// Number of distinct tangent directions over the algebraic closure.
    pub fn distinct_directions(&self) -> u32 {
        if self.mult == 0 {
            return 0;
        }
        self.slopes.squarefree_part().degree().unwrap_or(0) as u32 + u32::from(self.vertical > 0)
    }

    pub fn is_ordinary(&self) -> bool {
        self.distinct_directions() == self.mult
    }

    /// Directions occurring at least twice in the cone.
    pub fn repeated_directions(&self) -> Result<Vec<Dir>, ArrangementError> {
        let rep = self.slopes.gcd(&self.slopes.derivative());
        let mut out = self.roots(&rep)?;
        if self.vertical >= 2 {
            out.push(Dir::Vertical);
        }
        Ok(out)
    }

    /// All directions of the cone.
    pub fn all_directions(&self) -> Result<Vec<Dir>, ArrangementError> {
        let mut out = self.roots(&self.slopes)?;
        if self.vertical >= 1 {
            out.push(Dir::Vertical);
        }
        Ok(out)
    }

    fn roots(&self, p: &UPoly) -> Result<Vec<Dir>, ArrangementError> {
        let mut roots =
            p.roots_in_field().ok_or_else(|| ArrangementError::UnsplitTangentCone { cone: format!("{:?}", p.squarefree_part()) })?;
        roots.sort();
        Ok(roots.into_iter().map(Dir::Slope).collect())
    }
}

/// Product of germs with multiplicities.
pub fn product(field: &Field, germs: &[(Poly2, u32)]) -> Poly2 {
    germs.iter().fold(Poly2::one(field), |acc, (g, n)| acc.mul(&g.pow(*n)))
}

/// Order of vanishing at 0 of a germ restricted to the line `dir` through
/// the origin.
pub fn order_along(g: &Poly2, dir: &Dir) -> Option<usize> {
    let f = g.field();
    let line = match dir {
        Dir::Slope(l) => {
            let t = Poly2::x(f);
            g.compose(&t, &t.scale(l))
        }
        Dir::Vertical => g.compose(&Poly2::zero(f), &Poly2::x(f)),
    };
    line.to_upoly_x().and_then(|u| u.ord0())
}
