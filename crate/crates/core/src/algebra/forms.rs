use super::{AlgebraError, Fe, Field, Poly2};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// The two rational base surfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Base {
    P2,
    P1xP1,
}

impl Base {
    pub fn num_charts(self) -> usize {
        match self {
            Base::P2 => 3,
            Base::P1xP1 => 4,
        }
    }
}

/// Bihomogeneous form on ℙ¹×ℙ¹; exponents `[u₀, u₁, v₀, v₁]` with
/// `x = u₁/u₀`, `y = v₁/v₀`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiForm {
    pub bidegree: (u32, u32),
    terms: BTreeMap<[u32; 4], Fe>,
}

/// Homogeneous form on ℙ²; exponents `[X, Y, Z]` with `x = X/Z`, `y = Y/Z`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjForm {
    pub degree: u32,
    terms: BTreeMap<[u32; 3], Fe>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Form {
    Bi(BiForm),
    Proj(ProjForm),
}

impl BiForm {
    pub fn from_affine(p: &Poly2, bidegree: (u32, u32)) -> Result<BiForm, AlgebraError> {
        let (a, b) = bidegree;
        let mut terms = BTreeMap::new();
        for ((i, j), c) in p.terms() {
            if *i > a || *j > b {
                return Err(AlgebraError::DegreeOverflow { found: format!("({i},{j})"), declared: format!("({a},{b})") });
            }
            terms.insert([a - i, *i, b - j, *j], c.clone());
        }
        Ok(BiForm { bidegree, terms })
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 4], Fe> {
        &self.terms
    }

    /// Evaluates at homogeneous coordinates `[u₀, u₁, v₀, v₁]`.
    pub fn eval(&self, c: &[Fe]) -> Fe {
        let f = c[0].field().clone();
        self.terms.iter().fold(Fe::zero(&f), |acc, (e, k)| {
            let m = (0..4).fold(k.clone(), |m, i| &m * &c[i].pow(e[i]));
            &acc + &m
        })
    }
}

impl ProjForm {
    pub fn from_affine(p: &Poly2, degree: u32) -> Result<ProjForm, AlgebraError> {
        let mut terms = BTreeMap::new();
        for ((i, j), c) in p.terms() {
            if i + j > degree {
                return Err(AlgebraError::DegreeOverflow { found: format!("{}", i + j), declared: format!("{degree}") });
            }
            terms.insert([*i, *j, degree - i - j], c.clone());
        }
        Ok(ProjForm { degree, terms })
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 3], Fe> {
        &self.terms
    }

    pub fn eval(&self, c: &[Fe]) -> Fe {
        let f = c[0].field().clone();
        self.terms.iter().fold(Fe::zero(&f), |acc, (e, k)| {
            let m = (0..3).fold(k.clone(), |m, i| &m * &c[i].pow(e[i]));
            &acc + &m
        })
    }
}

impl Form {
    pub fn from_affine(base: Base, p: &Poly2, degree: (u32, u32)) -> Result<Form, AlgebraError> {
        match base {
            Base::P2 => Ok(Form::Proj(ProjForm::from_affine(p, degree.0)?)),
            Base::P1xP1 => Ok(Form::Bi(BiForm::from_affine(p, degree)?)),
        }
    }

    pub fn base(&self) -> Base {
        match self {
            Form::Bi(_) => Base::P1xP1,
            Form::Proj(_) => Base::P2,
        }
    }

    /// `(a, b)` on ℙ¹×ℙ¹ and `(d, 0)` on ℙ².
    pub fn degree(&self) -> (u32, u32) {
        match self {
            Form::Bi(b) => b.bidegree,
            Form::Proj(p) => (p.degree, 0),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Form::Bi(b) => b.terms.is_empty(),
            Form::Proj(p) => p.terms.is_empty(),
        }
    }

    /// Affine polynomial in chart `c`.
    ///
    /// ℙ¹×ℙ¹: bit 0 of `c` selects `x = u₁/u₀` (0) or `x = u₀/u₁` (1), bit 1
    /// does the same for `y`. ℙ²: chart 0 is `Z = 1` with `(x, y) = (X, Y)`,
    /// chart 1 is `Y = 1` with `(X, Z)`, chart 2 is `X = 1` with `(Y, Z)`.
    pub fn chart(&self, field: &Field, c: usize) -> Poly2 {
        match self {
            Form::Bi(b) => {
                let (fx, fy) = (c & 1, (c >> 1) & 1);
                Poly2::from_terms(
                    field,
                    b.terms.iter().map(|(e, k)| {
                        let i = if fx == 0 { e[1] } else { e[0] };
                        let j = if fy == 0 { e[3] } else { e[2] };
                        ((i, j), k.clone())
                    }),
                )
            }
            Form::Proj(p) => Poly2::from_terms(
                field,
                p.terms.iter().map(|(e, k)| {
                    let key = match c {
                        0 => (e[0], e[1]),
                        1 => (e[0], e[2]),
                        _ => (e[1], e[2]),
                    };
                    (key, k.clone())
                }),
            ),
        }
    }

    pub fn eval(&self, coords: &[Fe]) -> Fe {
        match self {
            Form::Bi(b) => b.eval(coords),
            Form::Proj(p) => p.eval(coords),
        }
    }

    pub fn mul(&self, o: &Form, field: &Field) -> Form {
        let a = self.chart(field, 0).mul(&o.chart(field, 0));
        let (d1, d2) = (self.degree(), o.degree());
        Form::from_affine(self.base(), &a, (d1.0 + d2.0, d1.1 + d2.1)).expect("degrees add")
    }

    pub fn add(&self, o: &Form, field: &Field) -> Form {
        debug_assert_eq!(self.degree(), o.degree());
        let a = self.chart(field, 0).add(&o.chart(field, 0));
        Form::from_affine(self.base(), &a, self.degree()).expect("same degree")
    }

    pub fn scale(&self, k: &Fe, field: &Field) -> Form {
        let a = self.chart(field, 0).scale(k);
        Form::from_affine(self.base(), &a, self.degree()).expect("same degree")
    }
}

impl fmt::Display for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = ["u0", "u1", "v0", "v1"];
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = (0..4)
                    .filter(|&i| e[i] > 0)
                    .map(|i| if e[i] == 1 { names[i].to_string() } else { format!("{}^{}", names[i], e[i]) })
                    .collect();
                format!("({c})*{}", if mono.is_empty() { "1".to_string() } else { mono.join("*") })
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
