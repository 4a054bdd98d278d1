use super::{qpoly, AlgebraError, Q};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// ℚ[t]/(m(t)) with `m` monic and irreducible, degree 1 to 4.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    min_poly: Vec<Q>,
}

pub type Field = Arc<NumberField>;

impl NumberField {
    /// Certifies irreducibility of `min_poly` (coefficients low degree first).
    pub fn new(min_poly: Vec<Q>) -> Result<Field, AlgebraError> {
        let mut m = min_poly;
        qpoly::trim(&mut m);
        let deg = qpoly::degree(&m).unwrap_or(0);
        if deg == 0 || deg > 4 {
            return Err(AlgebraError::UnsupportedDegree(deg));
        }
        if !m[deg].is_one() {
            return Err(AlgebraError::NotMonic);
        }
        if deg >= 2 {
            if let Some(r) = qpoly::rational_roots(&m).first() {
                return Err(AlgebraError::ReduciblePolynomial(format!("rational root {r}")));
            }
            if deg == 4 {
                if let Some((a, b)) = qpoly::quartic_has_quadratic_factor(&m) {
                    return Err(AlgebraError::ReduciblePolynomial(format!("quadratic factors {} and {}", fmt_q(&a), fmt_q(&b))));
                }
            }
        }
        Ok(Arc::new(NumberField { min_poly: m }))
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Field, AlgebraError> {
        Self::new(coeffs.iter().map(|&c| super::q(c)).collect())
    }

    pub fn rationals() -> Field {
        Arc::new(NumberField { min_poly: vec![Q::zero(), Q::one()] })
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[Q] {
        &self.min_poly
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }
}

fn fmt_q(p: &[Q]) -> String {
    let parts: Vec<String> = p.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(i, c)| format!("({c})t^{i}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Element of a [`NumberField`], stored as its reduced representative.
#[derive(Clone)]
pub struct Fe {
    field: Field,
    c: Vec<Q>,
}

impl Fe {
    pub fn zero(f: &Field) -> Fe {
        Fe { field: f.clone(), c: vec![Q::zero(); f.degree()] }
    }

    pub fn one(f: &Field) -> Fe {
        Fe::from_q(f, Q::one())
    }

    pub fn from_q(f: &Field, v: Q) -> Fe {
        let mut c = vec![Q::zero(); f.degree()];
        c[0] = v;
        Fe { field: f.clone(), c }
    }

    pub fn from_int(f: &Field, v: i64) -> Fe {
        Fe::from_q(f, super::q(v))
    }

    /// The class of `t`.
    pub fn generator(f: &Field) -> Fe {
        Fe::from_poly(f, &[Q::zero(), Q::one()])
    }

    /// Reduces an arbitrary rational polynomial in `t` modulo the minimal polynomial.
    pub fn from_poly(f: &Field, p: &[Q]) -> Fe {
        let (_, r) = qpoly::divrem(p, &f.min_poly);
        let mut c = r;
        c.resize(f.degree(), Q::zero());
        Fe { field: f.clone(), c }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Q> {
        if self.c[1..].iter().all(Zero::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Fe, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Fe::from_q(&self.field, Q::one() / r));
        }
        let s = qpoly::inverse_mod(&self.c, &self.field.min_poly).expect("minimal polynomial is irreducible");
        Ok(Fe::from_poly(&self.field, &s))
    }

    pub fn div(&self, other: &Fe) -> Result<Fe, AlgebraError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Fe {
        let mut base = self.clone();
        let mut acc = Fe::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, k: &Q) -> Fe {
        Fe { field: self.field.clone(), c: self.c.iter().map(|x| x * k).collect() }
    }

    /// Minimal polynomial over ℚ, monic, coefficients low degree first.
    pub fn minpoly(&self) -> Vec<Q> {
        let mut powers = vec![Fe::one(&self.field)];
        loop {
            let next = powers.last().expect("nonempty") * self;
            let cols: Vec<Vec<Q>> = powers.iter().map(|p| p.c.clone()).collect();
            if let Some(c) = super::linalg::solve_in_span(&cols, &next.c) {
                let mut m: Vec<Q> = c.into_iter().map(|v| -v).collect();
                m.push(Q::one());
                return m;
            }
            powers.push(next);
        }
    }

    /// Evaluates a rational polynomial (low degree first) at this element.
    pub fn eval_rational_poly(&self, p: &[Q]) -> Fe {
        p.iter().rev().fold(Fe::zero(&self.field), |acc, c| &(&acc * self) + &Fe::from_q(&self.field, c.clone()))
    }

    /// Dimension over ℚ of the subfield generated by `elems`.
    pub fn generated_degree(field: &Field, elems: &[Fe]) -> usize {
        let mut basis = vec![Fe::one(field)];
        let mut i = 0;
        while i < basis.len() {
            for e in elems {
                let cand = &basis[i] * e;
                let cols: Vec<Vec<Q>> = basis.iter().map(|b| b.c.clone()).collect();
                if super::linalg::solve_in_span(&cols, &cand.c).is_none() {
                    basis.push(cand);
                }
            }
            i += 1;
        }
        basis.len()
    }

    fn check(&self, other: &Fe) {
        debug_assert!(Arc::ptr_eq(&self.field, &other.field) || self.field == other.field, "mixed number fields");
    }
}

impl PartialEq for Fe {
    fn eq(&self, other: &Fe) -> bool {
        self.c == other.c
    }
}

impl Eq for Fe {}

impl PartialOrd for Fe {
    fn partial_cmp(&self, other: &Fe) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fe {
    fn cmp(&self, other: &Fe) -> Ordering {
        self.c.cmp(&other.c)
    }
}

impl std::hash::Hash for Fe {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl Add for &Fe {
    type Output = Fe;
    fn add(self, o: &Fe) -> Fe {
        self.check(o);
        Fe { field: self.field.clone(), c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Fe {
    type Output = Fe;
    fn sub(self, o: &Fe) -> Fe {
        self.check(o);
        Fe { field: self.field.clone(), c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        Fe { field: self.field.clone(), c: self.c.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Fe {
    type Output = Fe;
    fn mul(self, o: &Fe) -> Fe {
        self.check(o);
        let n = self.c.len();
        if n == 1 {
            return Fe { field: self.field.clone(), c: vec![&self.c[0] * &o.c[0]] };
        }
        let mut prod = vec![Q::zero(); 2 * n - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        // reduce with the monic minimal polynomial, highest degree first
        let m = &self.field.min_poly;
        for k in (n..2 * n - 1).rev() {
            let top = std::mem::take(&mut prod[k]);
            if top.is_zero() {
                continue;
            }
            for (i, mi) in m.iter().enumerate().take(n) {
                if !mi.is_zero() {
                    prod[k - n + i] -= &top * mi;
                }
            }
        }
        prod.truncate(n);
        Fe { field: self.field.clone(), c: prod }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Fe {
            type Output = Fe;
            fn $m(self, o: Fe) -> Fe {
                (&self).$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        -&self
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let mono = match i {
                0 => format!("{a}"),
                1 if a.is_one() => "t".to_string(),
                1 => format!("{a}*t"),
                _ if a.is_one() => format!("t^{i}"),
                _ => format!("{a}*t^{i}"),
            };
            out += match (out.is_empty(), neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            out += &mono;
        }
        if out.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{out}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qf;

    #[test]
    fn field_make_examples() {
        assert_eq!(NumberField::from_ints(&[0, 1]).unwrap().degree(), 1);
        assert_eq!(NumberField::from_ints(&[3, 0, 1]).unwrap().degree(), 2);
        assert_eq!(NumberField::from_ints(&[3, 0, 3, 0, 1]).unwrap().degree(), 4);
        assert!(matches!(NumberField::from_ints(&[-1, 0, 1]), Err(AlgebraError::ReduciblePolynomial(_))));
        assert!(matches!(NumberField::from_ints(&[2, 0, 3, 0, 1]), Err(AlgebraError::ReduciblePolynomial(_))));
        assert!(matches!(NumberField::from_ints(&[1, 0, 0, 0, 0, 1]), Err(AlgebraError::UnsupportedDegree(5))));
        assert!(matches!(NumberField::from_ints(&[1, 2]), Err(AlgebraError::NotMonic)));
    }

    #[test]
    fn arithmetic_examples() {
        let k = NumberField::from_ints(&[3, 0, 1]).unwrap();
        let t = Fe::generator(&k);
        assert_eq!(&t * &t, Fe::from_int(&k, -3));
        let xp = Fe::from_poly(&k, &[qf(3, 2), qf(1, 2)]);
        let xm = Fe::from_poly(&k, &[qf(3, 2), qf(-1, 2)]);
        assert_eq!(&xp * &xm, Fe::from_int(&k, 3));
        let qq = NumberField::rationals();
        let s = &Fe::from_q(&qq, qf(1, 2)) + &Fe::from_q(&qq, qf(1, 3));
        assert_eq!(s.as_rational(), Some(&qf(5, 6)));
        assert_eq!(Fe::zero(&k).inv(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn quartic_inverse() {
        let k = NumberField::from_ints(&[3, 0, 3, 0, 1]).unwrap();
        let t = Fe::generator(&k);
        let x = &(&t * &t) + &Fe::from_int(&k, 5);
        assert!((&x * &x.inv().unwrap()).is_one());
        assert_eq!(t.pow(4), &(&(&t * &t) * &Fe::from_int(&k, -3)) - &Fe::from_int(&k, 3));
    }

    #[test]
    fn minimal_polynomials() {
        let k = NumberField::from_ints(&[3, 0, 3, 0, 1]).unwrap();
        let t = Fe::generator(&k);
        assert_eq!(t.minpoly(), k.min_poly().to_vec());
        // t² satisfies s² + 3s + 3
        assert_eq!((&t * &t).minpoly(), vec![qf(3, 1), qf(3, 1), qf(1, 1)]);
        assert_eq!(Fe::from_int(&k, 5).minpoly(), vec![qf(-5, 1), qf(1, 1)]);
        assert!(t.eval_rational_poly(&t.minpoly()).is_zero());
        assert_eq!(Fe::generated_degree(&k, &[&t * &t]), 2);
        assert_eq!(Fe::generated_degree(&k, &[t.clone(), t.inv().unwrap()]), 4);
        assert_eq!(Fe::generated_degree(&k, &[]), 1);
    }
}
