//! Sylvester resultants.
//!
//! The determinant of the Sylvester matrix over `K[x]` is obtained exactly by
//! evaluating at `x = 0, 1, …, N` and interpolating, where `N` bounds its
//! degree (sum over rows of the largest entry degree).

use super::{linalg, AlgebraError, Fe, Poly2, UPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Resultant eliminating `var`, returned as a polynomial in the other variable
/// (placed in the `x` slot when `y` is eliminated and in the `y` slot when `x`
/// is eliminated).
pub fn resultant(p: &Poly2, q: &Poly2, var: Var) -> Result<Poly2, AlgebraError> {
    match var {
        Var::Y => Ok(Poly2::from_upoly_x(&resultant_y(p, q)?)),
        Var::X => Ok(Poly2::from_upoly_x(&resultant_y(&p.swap_xy(), &q.swap_xy())?).swap_xy()),
    }
}

/// `Res_y(p, q)` as a univariate polynomial in `x`.
pub fn resultant_y(p: &Poly2, q: &Poly2) -> Result<UPoly, AlgebraError> {
    if p.is_zero() || q.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    let f = p.field().clone();
    let a = p.as_poly_in_y();
    let b = q.as_poly_in_y();
    let (m, n) = (a.len() - 1, b.len() - 1);
    if m == 0 {
        return Ok(a[0].pow(n as u32));
    }
    if n == 0 {
        return Ok(b[0].pow(m as u32));
    }
    let da = a.iter().filter_map(UPoly::degree).max().unwrap_or(0);
    let db = b.iter().filter_map(UPoly::degree).max().unwrap_or(0);
    let bound = n * da + m * db;
    let size = m + n;
    let xs: Vec<Fe> = (0..=bound).map(|i| Fe::from_int(&f, i as i64)).collect();
    let ys: Vec<Fe> = xs
        .iter()
        .map(|x| {
            let av: Vec<Fe> = a.iter().map(|c| c.eval(x)).collect();
            let bv: Vec<Fe> = b.iter().map(|c| c.eval(x)).collect();
            let mut mat = vec![vec![Fe::zero(&f); size]; size];
            // rows hold coefficients from the highest power of y down
            for r in 0..n {
                for (k, c) in av.iter().enumerate() {
                    mat[r][r + m - k] = c.clone();
                }
            }
            for r in 0..m {
                for (k, c) in bv.iter().enumerate() {
                    mat[n + r][r + n - k] = c.clone();
                }
            }
            linalg::det(mat)
        })
        .collect();
    Ok(interpolate(&xs, &ys))
}

/// Newton interpolation through the given nodes.
pub fn interpolate(xs: &[Fe], ys: &[Fe]) -> UPoly {
    let f = xs[0].field().clone();
    let n = xs.len();
    let mut coef: Vec<Fe> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = &xs[i] - &xs[i - j];
            coef[i] = num.div(&den).expect("distinct nodes");
        }
    }
    let mut out = UPoly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        out = out.mul(&UPoly::linear_root(&xs[i])).add(&UPoly::constant(coef[i].clone()));
    }
    UPoly::new(&f, out.coeffs().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_expr, NumberField};

    fn p(s: &str) -> Poly2 {
        parse_expr(s, &NumberField::rationals(), &Default::default()).unwrap()
    }

    fn up(s: &str) -> UPoly {
        p(s).to_upoly_x().unwrap()
    }

    #[test]
    fn spec_examples() {
        // Sylvester convention gives 1 - x^2; equal to x^2 - 1 up to sign
        let r = resultant_y(&p("x-y"), &p("xy-1")).unwrap();
        assert_eq!(r.monic(), up("x^2-1"));
        assert_eq!(r, up("1-x^2"));
        let r = resultant_y(&p("x-y"), &p("x+y")).unwrap();
        assert_eq!(r.monic(), up("x"));
        assert!(resultant_y(&p("x^2+y^2-1"), &p("x^2+y^2-1")).unwrap().is_zero());
        assert_eq!(resultant_y(&p("0"), &p("x")), Err(AlgebraError::ZeroInput));
    }

    #[test]
    fn eliminate_x() {
        let r = resultant(&p("x-y"), &p("xy-1"), Var::X).unwrap();
        assert_eq!(r.normalize(), p("y^2-1"));
    }

    #[test]
    fn agrees_with_product_formula() {
        // Res_y((y-x)(y-2), y^2-x) = (x^2-x)(4-x)
        let r = resultant_y(&p("(y-x)*(y-2)"), &p("y^2-x")).unwrap();
        assert_eq!(r, up("(x^2-x)*(4-x)"));
    }
}
