use super::{Fe, Field, Q};
use std::fmt;

/// Dense univariate polynomial over a number field, low degree first, no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UPoly {
    field: Field,
    c: Vec<Fe>,
}

impl UPoly {
    pub fn zero(f: &Field) -> UPoly {
        UPoly { field: f.clone(), c: Vec::new() }
    }

    pub fn constant(c: Fe) -> UPoly {
        let f = c.field().clone();
        UPoly::new(&f, vec![c])
    }

    pub fn one(f: &Field) -> UPoly {
        UPoly::constant(Fe::one(f))
    }

    /// `x − a`
    pub fn linear_root(a: &Fe) -> UPoly {
        let f = a.field().clone();
        UPoly::new(&f, vec![-a, Fe::one(&f)])
    }

    pub fn new(f: &Field, mut c: Vec<Fe>) -> UPoly {
        while c.last().is_some_and(Fe::is_zero) {
            c.pop();
        }
        UPoly { field: f.clone(), c }
    }

    pub fn from_rational(f: &Field, c: &[Q]) -> UPoly {
        UPoly::new(f, c.iter().map(|v| Fe::from_q(f, v.clone())).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.c.get(i).cloned().unwrap_or_else(|| Fe::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Fe> {
        self.c.last()
    }

    /// Order of vanishing at 0; `None` for the zero polynomial.
    pub fn ord0(&self) -> Option<usize> {
        self.c.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect();
        UPoly::new(&self.field, c)
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect();
        UPoly::new(&self.field, c)
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(&self.field);
        }
        let mut c = vec![Fe::zero(&self.field); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        UPoly::new(&self.field, c)
    }

    pub fn scale(&self, k: &Fe) -> UPoly {
        UPoly::new(&self.field, self.c.iter().map(|a| a * k).collect())
    }

    pub fn pow(&self, e: u32) -> UPoly {
        (0..e).fold(UPoly::one(&self.field), |acc, _| acc.mul(self))
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.c[dd].inv().expect("nonzero leading coefficient");
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (UPoly::zero(&self.field), self.clone());
        }
        let mut quo = vec![Fe::zero(&self.field); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = &r[k] * &inv;
            for i in 0..=dd {
                r[k - dd + i] = &r[k - dd + i] - &(&c * &d.c[i]);
            }
            quo[k - dd] = c;
        }
        r.truncate(dd);
        (UPoly::new(&self.field, quo), UPoly::new(&self.field, r))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> UPoly {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        let c = self.c.iter().enumerate().skip(1).map(|(i, a)| a.scale(&super::q(i as i64))).collect();
        UPoly::new(&self.field, c)
    }

    /// Product of the distinct irreducible factors (monic).
    pub fn squarefree_part(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return UPoly::one(&self.field);
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    pub fn eval(&self, x: &Fe) -> Fe {
        self.c.iter().rev().fold(Fe::zero(&self.field), |acc, c| &(&acc * x) + c)
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: &Fe) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = UPoly::linear_root(a);
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_exact(&lin) {
            p = q;
            k += 1;
        }
        k
    }

    /// Divides out every power of `d`, returning the cofactor and the exponent.
    pub fn strip(&self, d: &UPoly) -> (UPoly, usize) {
        let mut p = self.clone();
        let mut k = 0;
        if d.degree().unwrap_or(0) == 0 || p.is_zero() {
            return (p, 0);
        }
        while let Some(q) = p.div_exact(d) {
            p = q;
            k += 1;
        }
        (p, k)
    }

    /// Roots that lie in the coefficient field, when they can be found
    /// exactly: all of them for linear factors of the squarefree part and for
    /// polynomials over ℚ, otherwise `None`.
    pub fn roots_in_field(&self) -> Option<Vec<Fe>> {
        let sf = self.squarefree_part();
        match sf.degree() {
            None | Some(0) => Some(Vec::new()),
            Some(1) => {
                let m = sf.monic();
                Some(vec![-&m.c[0]])
            }
            _ => {
                let rat: Option<Vec<Q>> = sf.c.iter().map(|c| c.as_rational().cloned()).collect();
                if self.field.is_rational() {
                    let rat = rat.expect("coefficients in ℚ");
                    let roots = super::qpoly::rational_roots(&rat);
                    if roots.len() == sf.degree().unwrap() {
                        return Some(roots.into_iter().map(|r| Fe::from_q(&self.field, r)).collect());
                    }
                }
                None
            }
        }
    }

    /// `p(a·x + b)`
    pub fn compose_linear(&self, a: &Fe, b: &Fe) -> UPoly {
        let lin = UPoly::new(&self.field, vec![b.clone(), a.clone()]);
        self.c.iter().rev().fold(UPoly::zero(&self.field), |acc, c| acc.mul(&lin).add(&UPoly::constant(c.clone())))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| if i == 0 { format!("({c})") } else { format!("({c})X^{i}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::NumberField;

    #[test]
    fn gcd_and_squarefree() {
        let k = NumberField::rationals();
        let p = UPoly::from_rational(&k, &[super::super::q(1), super::super::q(-2), super::super::q(1)]);
        let q1 = UPoly::from_rational(&k, &[super::super::q(-1), super::super::q(1)]);
        assert_eq!(p.gcd(&q1), q1);
        assert_eq!(p.squarefree_part(), q1);
        assert_eq!(p.root_multiplicity(&Fe::from_int(&k, 1)), 2);
        assert_eq!(p.roots_in_field().unwrap(), vec![Fe::from_int(&k, 1)]);
    }
}
