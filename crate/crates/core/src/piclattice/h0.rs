use super::{DivClass, LatticeError, SurfaceLattice};
use crate::algebra::{linalg, Base, Fe, Field, Form, Poly2};
use crate::arrangement::local::root_germ;
use crate::arrangement::{Dir, SurfPoint};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H0Report {
    pub monomials: usize,
    pub conditions: usize,
    pub rank: usize,
    pub h0: usize,
}

/// Dimension of the space of forms of the base degree of `d` satisfying the
/// point conditions encoded by its exceptional coefficients, computed as
/// `monomials − rank` of the exact condition matrix.
///
/// A coefficient `−m` on a level-0 slot asks for multiplicity `m` at the
/// point. On a level-1 slot below a point of (virtual) multiplicity `m`, a
/// coefficient `−m'` asks the strict transform to have multiplicity `m'`:
/// with `Fₖ` the local homogeneous parts, the coefficient of `vʲ` in
/// `F_{m+i}(1, v+λ)` vanishes for `i + j < m'`. Positive coefficients
/// impose nothing (the exceptional curve is a fixed component).
pub fn h0_interpolation(lat: &SurfaceLattice, d: &DivClass, field: &Field) -> Result<H0Report, LatticeError> {
    if d.base.len() != lat.base_class((0, 0)).base.len() || d.exc.len() != lat.slots().len() {
        return Err(LatticeError::LatticeMismatch);
    }
    let (deg, monos): ((u32, u32), Vec<(u32, u32)>) = match lat.base() {
        Base::P2 => {
            if d.base[0] < 0 {
                return Ok(H0Report { monomials: 0, conditions: 0, rank: 0, h0: 0 });
            }
            let n = d.base[0] as u32;
            ((n, 0), (0..=n).flat_map(|i| (0..=n - i).map(move |j| (i, j))).collect())
        }
        Base::P1xP1 => {
            if d.base[0] < 0 || d.base[1] < 0 {
                return Ok(H0Report { monomials: 0, conditions: 0, rank: 0, h0: 0 });
            }
            let (a, b) = (d.base[0] as u32, d.base[1] as u32);
            ((a, b), (0..=a).flat_map(|i| (0..=b).map(move |j| (i, j))).collect())
        }
    };
    let forms: Vec<Form> =
        monos.iter().map(|&(i, j)| Form::from_affine(lat.base(), &Poly2::monomial(field, i, j), deg).expect("monomial fits")).collect();

    // one multiplicity per distinct point; conjugate slots must agree
    let mut points: Vec<(SurfPoint, i64)> = Vec::new();
    for (slot, &c) in lat.slots().iter().zip(&d.exc) {
        match points.iter().find(|(p, _)| *p == slot.point) {
            Some((_, prev)) if *prev != c => {
                return Err(LatticeError::UnsupportedCondition(format!("conjugate slots of {} carry different coefficients", slot.point)));
            }
            Some(_) => {}
            None => points.push((slot.point.clone(), c)),
        }
    }
    let coef_of = |p: &SurfPoint| points.iter().find(|(q, _)| q == p).map(|(_, c)| *c).unwrap_or(0);

    let mut rows: Vec<Vec<Fe>> = Vec::new();
    for (p, c) in &points {
        let m = -c;
        if m <= 0 {
            continue;
        }
        let m = m as u32;
        let new_rows: Vec<Vec<Fe>> = match p.level() {
            0 => {
                let germs: Vec<Poly2> = forms.iter().map(|f| root_germ(f, field, p)).collect();
                (0..m).flat_map(|i| (0..m - i).map(move |j| (i, j))).map(|(i, j)| germs.iter().map(|g| g.coeff(i, j)).collect()).collect()
            }
            1 => {
                let parent = p.parent().expect("level 1");
                let pm = -coef_of(&parent);
                if pm < 0 {
                    return Err(LatticeError::UnsupportedCondition(format!("negative multiplicity at {parent} below a condition at {p}")));
                }
                let pm = pm as u32;
                let dir = &p.path()[0];
                let lifted: Vec<Poly2> = forms.iter().map(|f| blow_up_total(&root_germ(f, field, &parent), dir)).collect();
                (0..m)
                    .flat_map(|i| (0..m - i).map(move |j| (i, j)))
                    .map(|(i, j)| {
                        lifted
                            .iter()
                            .map(|g| match dir {
                                Dir::Slope(_) => g.coeff(pm + i, j),
                                Dir::Vertical => g.coeff(j, pm + i),
                            })
                            .collect()
                    })
                    .collect()
            }
            _ => return Err(LatticeError::UnsupportedDepth(p.to_string())),
        };
        if p.is_galois() {
            let deg = field.degree();
            for r in new_rows {
                for k in 0..deg {
                    rows.push(r.iter().map(|v| Fe::from_q(field, v.coeffs()[k].clone())).collect());
                }
            }
        } else {
            rows.extend(new_rows);
        }
    }
    let rank = linalg::rank(&rows);
    Ok(H0Report { monomials: monos.len(), conditions: rows.len(), rank, h0: monos.len() - rank })
}

/// `g(u, u(v+λ))` or `g(uv, v)` without dividing out the exceptional line.
fn blow_up_total(g: &Poly2, dir: &Dir) -> Poly2 {
    let f = g.field();
    let (x, y) = (Poly2::x(f), Poly2::y(f));
    match dir {
        Dir::Slope(l) => g.compose(&x, &x.mul(&y.add(&Poly2::constant(l.clone())))),
        Dir::Vertical => g.compose(&x.mul(&y), &y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::NumberField;

    #[test]
    fn pencil_without_conditions() {
        let q = NumberField::rationals();
        let l = SurfaceLattice::new(Base::P1xP1);
        let r = h0_interpolation(&l, &l.base_class((0, 1)), &q).unwrap();
        assert_eq!((r.monomials, r.h0), (2, 2));
        assert_eq!(h0_interpolation(&l, &l.base_class((-1, 3)), &q).unwrap().h0, 0);
    }

    #[test]
    fn conics_through_points() {
        let q = NumberField::rationals();
        let e = |v: i64| Fe::from_int(&q, v);
        let mut l = SurfaceLattice::new(Base::P2);
        for (i, (a, b)) in [(0, 0), (1, 0), (0, 1), (2, 3)].iter().enumerate() {
            l = l.blow_up(&SurfPoint::p2_affine(e(*a), e(*b)), &format!("P{i}")).unwrap();
        }
        let mut c = l.base_class((2, 0));
        c.exc = vec![-1; 4];
        assert_eq!(h0_interpolation(&l, &c, &q).unwrap().h0, 2);
        // a double point at the origin plus two simple points: 6 − 3 − 2
        c.exc = vec![-2, -1, -1, 0];
        assert_eq!(h0_interpolation(&l, &c, &q).unwrap().h0, 1);
    }

    #[test]
    fn infinitely_near_tangency() {
        // conics through the origin tangent to y = 0: 6 − 1 − 1 = 4
        let q = NumberField::rationals();
        let o = SurfPoint::p2_affine(Fe::from_int(&q, 0), Fe::from_int(&q, 0));
        let near = o.infinitely_near(Dir::Slope(Fe::from_int(&q, 0)));
        let l = SurfaceLattice::new(Base::P2).blow_up(&o, "O").unwrap().blow_up(&near, "O").unwrap();
        let mut c = l.base_class((2, 0));
        c.exc = vec![-1, -1];
        assert_eq!(h0_interpolation(&l, &c, &q).unwrap().h0, 4);
        // only the infinitely near condition: virtual multiplicity 0 at O means passing through O
        c.exc = vec![0, -1];
        assert_eq!(h0_interpolation(&l, &c, &q).unwrap().h0, 5);
    }
}
