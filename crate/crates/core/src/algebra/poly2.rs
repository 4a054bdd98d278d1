use super::{Fe, Field, UPoly, Q};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse polynomial in two variables `x`, `y` over a number field. Keys are
/// `(deg_x, deg_y)`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly2 {
    field: Field,
    t: BTreeMap<(u32, u32), Fe>,
}

impl Poly2 {
    pub fn zero(f: &Field) -> Poly2 {
        Poly2 { field: f.clone(), t: BTreeMap::new() }
    }

    pub fn constant(c: Fe) -> Poly2 {
        let mut p = Poly2::zero(&c.field().clone());
        p.add_term((0, 0), c);
        p
    }

    pub fn one(f: &Field) -> Poly2 {
        Poly2::constant(Fe::one(f))
    }

    pub fn x(f: &Field) -> Poly2 {
        Poly2::monomial(f, 1, 0)
    }

    pub fn y(f: &Field) -> Poly2 {
        Poly2::monomial(f, 0, 1)
    }

    pub fn monomial(f: &Field, i: u32, j: u32) -> Poly2 {
        let mut p = Poly2::zero(f);
        p.add_term((i, j), Fe::one(f));
        p
    }

    pub fn from_terms(f: &Field, terms: impl IntoIterator<Item = ((u32, u32), Fe)>) -> Poly2 {
        let mut p = Poly2::zero(f);
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Fe> {
        &self.t
    }

    pub fn coeff(&self, i: u32, j: u32) -> Fe {
        self.t.get(&(i, j)).cloned().unwrap_or_else(|| Fe::zero(&self.field))
    }

    pub fn add_term(&mut self, k: (u32, u32), c: Fe) {
        if c.is_zero() {
            return;
        }
        match self.t.get_mut(&k) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.t.remove(&k);
                }
            }
            None => {
                self.t.insert(k, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.t.keys().map(|(i, j)| i + j).max()
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.t.keys().map(|k| k.0).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.t.keys().map(|k| k.1).max()
    }

    /// Lowest total degree of a term: the multiplicity at the origin.
    pub fn order(&self) -> Option<u32> {
        self.t.keys().map(|(i, j)| i + j).min()
    }

    /// Homogeneous part of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly2 {
        Poly2 { field: self.field.clone(), t: self.t.iter().filter(|((i, j), _)| i + j == d).map(|(k, v)| (*k, v.clone())).collect() }
    }

    pub fn add(&self, o: &Poly2) -> Poly2 {
        let mut p = self.clone();
        for (k, c) in &o.t {
            p.add_term(*k, c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Poly2) -> Poly2 {
        let mut p = self.clone();
        for (k, c) in &o.t {
            p.add_term(*k, -c);
        }
        p
    }

    pub fn neg(&self) -> Poly2 {
        Poly2 { field: self.field.clone(), t: self.t.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn mul(&self, o: &Poly2) -> Poly2 {
        let mut p = Poly2::zero(&self.field);
        for ((a, b), c) in &self.t {
            for ((d, e), g) in &o.t {
                p.add_term((a + d, b + e), c * g);
            }
        }
        p
    }

    pub fn scale(&self, k: &Fe) -> Poly2 {
        if k.is_zero() {
            return Poly2::zero(&self.field);
        }
        Poly2 { field: self.field.clone(), t: self.t.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Poly2 {
        let mut base = self.clone();
        let mut acc = Poly2::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn deriv_x(&self) -> Poly2 {
        let mut p = Poly2::zero(&self.field);
        for ((i, j), c) in &self.t {
            if *i > 0 {
                p.add_term((i - 1, *j), c.scale(&super::q(*i as i64)));
            }
        }
        p
    }

    pub fn deriv_y(&self) -> Poly2 {
        let mut p = Poly2::zero(&self.field);
        for ((i, j), c) in &self.t {
            if *j > 0 {
                p.add_term((*i, j - 1), c.scale(&super::q(*j as i64)));
            }
        }
        p
    }

    pub fn eval(&self, x: &Fe, y: &Fe) -> Fe {
        let mut acc = Fe::zero(&self.field);
        for ((i, j), c) in &self.t {
            acc = &acc + &(&(c * &x.pow(*i)) * &y.pow(*j));
        }
        acc
    }

    /// Substitutes polynomials for `x` and `y`.
    pub fn compose(&self, px: &Poly2, py: &Poly2) -> Poly2 {
        let dx = self.deg_x().unwrap_or(0) as usize;
        let dy = self.deg_y().unwrap_or(0) as usize;
        let mut powx = vec![Poly2::one(&self.field)];
        for i in 0..dx {
            let next = powx[i].mul(px);
            powx.push(next);
        }
        let mut powy = vec![Poly2::one(&self.field)];
        for j in 0..dy {
            let next = powy[j].mul(py);
            powy.push(next);
        }
        let mut out = Poly2::zero(&self.field);
        for ((i, j), c) in &self.t {
            out = out.add(&powx[*i as usize].mul(&powy[*j as usize]).scale(c));
        }
        out
    }

    /// `f(x + a, y + b)`: moves the point `(a, b)` to the origin.
    pub fn translate(&self, a: &Fe, b: &Fe) -> Poly2 {
        let f = &self.field;
        let px = Poly2::x(f).add(&Poly2::constant(a.clone()));
        let py = Poly2::y(f).add(&Poly2::constant(b.clone()));
        self.compose(&px, &py)
    }

    pub fn swap_xy(&self) -> Poly2 {
        Poly2 { field: self.field.clone(), t: self.t.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect() }
    }

    /// Divides by `x^a y^b`; `None` unless every term is divisible.
    pub fn div_monomial(&self, a: u32, b: u32) -> Option<Poly2> {
        let mut p = Poly2::zero(&self.field);
        for ((i, j), c) in &self.t {
            if *i < a || *j < b {
                return None;
            }
            p.add_term((i - a, j - b), c.clone());
        }
        Some(p)
    }

    /// Coefficients as a polynomial in `y` with coefficients in `K[x]`.
    pub fn as_poly_in_y(&self) -> Vec<UPoly> {
        let dy = match self.deg_y() {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut cols: Vec<Vec<Fe>> = vec![Vec::new(); dy + 1];
        for ((i, j), c) in &self.t {
            let col = &mut cols[*j as usize];
            if col.len() <= *i as usize {
                col.resize(*i as usize + 1, Fe::zero(&self.field));
            }
            col[*i as usize] = c.clone();
        }
        cols.into_iter().map(|c| UPoly::new(&self.field, c)).collect()
    }

    pub fn from_poly_in_y(f: &Field, cols: &[UPoly]) -> Poly2 {
        let mut p = Poly2::zero(f);
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col.coeffs().iter().enumerate() {
                p.add_term((i as u32, j as u32), c.clone());
            }
        }
        p
    }

    /// Univariate polynomial in `y` after substituting `x = a`.
    pub fn eval_x(&self, a: &Fe) -> UPoly {
        let cols = self.as_poly_in_y();
        UPoly::new(&self.field, cols.iter().map(|c| c.eval(a)).collect())
    }

    /// Univariate polynomial in `x` after substituting `y = b`.
    pub fn eval_y(&self, b: &Fe) -> UPoly {
        self.swap_xy().eval_x(b)
    }

    /// Interprets a polynomial free of `y` as univariate in `x`.
    pub fn to_upoly_x(&self) -> Option<UPoly> {
        if self.deg_y().unwrap_or(0) > 0 {
            return None;
        }
        Some(self.eval_y(&Fe::zero(&self.field)))
    }

    pub fn from_upoly_x(p: &UPoly) -> Poly2 {
        Poly2::from_terms(p.field(), p.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())))
    }

    /// Binary form `h(1, λ)` of a homogeneous polynomial, as a polynomial in λ.
    pub fn dehomogenize_binary(&self) -> UPoly {
        self.eval_x(&Fe::one(&self.field))
    }

    /// Leading coefficient in the (total degree, then x-degree) order; used
    /// to normalise gcds.
    fn lead_coeff(&self) -> Option<&Fe> {
        self.t.iter().max_by_key(|((i, j), _)| (i + j, *i)).map(|(_, c)| c)
    }

    pub fn normalize(&self) -> Poly2 {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    /// Greatest common divisor in `K[x, y]`, normalised; gcd(0, q) = q.
    pub fn gcd(&self, o: &Poly2) -> Poly2 {
        if self.is_zero() {
            return o.normalize();
        }
        if o.is_zero() {
            return self.normalize();
        }
        let a = self.as_poly_in_y();
        let b = o.as_poly_in_y();
        let (ca, pa) = content_split(&a);
        let (cb, pb) = content_split(&b);
        let c = ca.gcd(&cb);
        let mut u = pa;
        let mut v = pb;
        if u.len() < v.len() {
            std::mem::swap(&mut u, &mut v);
        }
        while !(v.is_empty() || v.iter().all(UPoly::is_zero)) {
            let r = prem(&u, &v);
            u = v;
            v = if r.is_empty() { r } else { content_split(&r).1 };
        }
        let g = if u.len() <= 1 { vec![UPoly::one(&self.field)] } else { u };
        let gp = Poly2::from_poly_in_y(&self.field, &g);
        gp.mul(&Poly2::from_upoly_x(&c)).normalize()
    }

    /// Exact quotient in `K[x, y]`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Poly2) -> Option<Poly2> {
        if d.is_zero() {
            return None;
        }
        let mut r = self.as_poly_in_y();
        let dv = d.as_poly_in_y();
        let dd = dv.len() - 1;
        let lc = &dv[dd];
        if r.len() < dv.len() {
            return r.is_empty().then(|| Poly2::zero(&self.field));
        }
        let mut quo = vec![UPoly::zero(&self.field); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = r[k].div_exact(lc)?;
            for i in 0..=dd {
                r[k - dd + i] = r[k - dd + i].sub(&c.mul(&dv[i]));
            }
            quo[k - dd] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly2::from_poly_in_y(&self.field, &quo))
    }

    pub fn is_rational(&self) -> bool {
        self.t.values().all(|c| c.as_rational().is_some())
    }

    pub fn rational_coeffs(&self) -> Option<BTreeMap<(u32, u32), Q>> {
        self.t.iter().map(|(k, c)| c.as_rational().map(|q| (*k, q.clone()))).collect()
    }
}

fn trim_cols(mut v: Vec<UPoly>) -> Vec<UPoly> {
    while v.last().is_some_and(UPoly::is_zero) {
        v.pop();
    }
    v
}

/// Splits a polynomial in `K[x][y]` into content (in `K[x]`) and primitive part.
fn content_split(p: &[UPoly]) -> (UPoly, Vec<UPoly>) {
    let f = p[0].field().clone();
    let c = p.iter().fold(UPoly::zero(&f), |acc, q| acc.gcd(q));
    if c.is_zero() {
        return (UPoly::zero(&f), Vec::new());
    }
    let pp = p.iter().map(|q| q.div_exact(&c).expect("content divides")).collect();
    (c, trim_cols(pp))
}

/// Pseudo-remainder of `a` by `b` in `K[x][y]`.
fn prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<UPoly> = a.to_vec();
    while r.len() > db {
        let k = r.len() - 1;
        let lr = r[k].clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for i in 0..=db {
            r[k - db + i] = r[k - db + i].sub(&lr.mul(&b[i]));
        }
        r = trim_cols(r);
        if r.len() == k + 1 {
            // leading term did not cancel; cannot happen
            unreachable!("pseudo-division failed to reduce degree");
        }
    }
    r
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in self.t.iter().rev() {
            let mut mono = String::new();
            if *i > 0 {
                mono.push('x');
                if *i > 1 {
                    mono.push_str(&format!("^{i}"));
                }
            }
            if *j > 0 {
                mono.push('y');
                if *j > 1 {
                    mono.push_str(&format!("^{j}"));
                }
            }
            let cs = format!("{c}");
            let simple = c.as_rational().is_some();
            let (neg, body) = if simple && cs.starts_with('-') { (true, cs[1..].to_string()) } else { (false, cs) };
            let coeff = if !mono.is_empty() && body == "1" {
                String::new()
            } else if simple {
                body
            } else {
                format!("({body})")
            };
            let term = match (coeff.is_empty(), mono.is_empty()) {
                (true, _) => mono,
                (false, true) => coeff,
                (false, false) => format!("{coeff}*{mono}"),
            };
            if first {
                write!(f, "{}{}", if neg { "-" } else { "" }, term)?;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, term)?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_expr, NumberField};

    fn p(s: &str) -> Poly2 {
        parse_expr(s, &NumberField::rationals(), &Default::default()).unwrap()
    }

    #[test]
    fn gcd_of_products() {
        let a = p("(x-y)^2*(x+1)");
        let b = p("(x-y)*(y+2)");
        assert_eq!(a.gcd(&b), p("x-y").normalize());
        assert_eq!(p("x").gcd(&p("y")), p("1"));
        assert_eq!(p("(x^2-3)*(x*y-1)").gcd(&p("(x^2-3)*(y-7)")), p("x^2-3").normalize());
    }

    #[test]
    fn exact_division() {
        let a = p("(x-y)*(x*y+3)");
        assert_eq!(a.div_exact(&p("x-y")).unwrap(), p("x*y+3"));
        assert!(a.div_exact(&p("x+y")).is_none());
        assert_eq!(p("x^2-1").div_exact(&p("x+1")).unwrap(), p("x-1"));
    }

    #[test]
    fn translate_and_order() {
        let f = p("(x-1)^2 + (y-2)^3");
        let k = f.field().clone();
        let g = f.translate(&Fe::from_int(&k, 1), &Fe::from_int(&k, 2));
        assert_eq!(g, p("x^2+y^3"));
        assert_eq!(g.order(), Some(2));
    }
}
