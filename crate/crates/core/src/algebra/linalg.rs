//! Gaussian elimination over a number field and over ℚ.
#![allow(clippy::needless_range_loop)]

use super::{Fe, Q};
use num_traits::Zero;

/// Rank of a matrix over a number field. Rows may be of unequal length only
/// if empty.
pub fn rank(rows: &[Vec<Fe>]) -> usize {
    let mut m: Vec<Vec<Fe>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, piv);
        let inv = m[r][col].inv().expect("nonzero pivot");
        let prow: Vec<Fe> = m[r].iter().map(|v| v * &inv).collect();
        for i in (r + 1)..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for j in col..ncols {
                m[i][j] = &m[i][j] - &(&f * &prow[j]);
            }
        }
        m[r] = prow;
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Determinant of a square matrix over a number field.
pub fn det(mut m: Vec<Vec<Fe>>) -> Fe {
    let n = m.len();
    let f = m[0][0].field().clone();
    let mut acc = Fe::one(&f);
    for col in 0..n {
        let Some(piv) = (col..n).find(|&i| !m[i][col].is_zero()) else { return Fe::zero(&f) };
        if piv != col {
            m.swap(col, piv);
            acc = -&acc;
        }
        let p = m[col][col].clone();
        acc = &acc * &p;
        let inv = p.inv().expect("nonzero pivot");
        for i in (col + 1)..n {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] * &inv;
            for j in col..n {
                m[i][j] = &m[i][j] - &(&factor * &m[col][j]);
            }
        }
    }
    acc
}

/// Rank of a rational matrix.
pub fn rank_q(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, piv);
        for i in (r + 1)..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &m[r][col];
            for j in col..ncols {
                let v = &f * &m[r][j];
                m[i][j] -= v;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Coefficients `c` with `Σ cᵢ·cols[i] = v`, if `v` lies in the span.
pub fn solve_in_span(cols: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    let n = v.len();
    let k = cols.len();
    // augmented n × (k+1) system
    let mut m: Vec<Vec<Q>> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).chain(std::iter::once(v[i].clone())).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(piv) = (r..n).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, piv);
        let inv = Q::from_integer(1.into()) / &m[r][col];
        for j in 0..=k {
            let v = &m[r][j] * &inv;
            m[r][j] = v;
        }
        for i in 0..n {
            if i == r || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for j in 0..=k {
                let v = &f * &m[r][j];
                m[i][j] -= v;
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut out = vec![Q::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = m[i][k].clone();
    }
    Some(out)
}

/// Signs of the diagonal after symmetric elimination of a rational symmetric
/// matrix: `(positive, negative, zero)` counts (Sylvester's law of inertia).
pub fn inertia(sym: &[Vec<Q>]) -> (usize, usize, usize) {
    let n = sym.len();
    let mut m: Vec<Vec<Q>> = sym.to_vec();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut alive: Vec<usize> = (0..n).collect();
    while !alive.is_empty() {
        // pick a nonzero diagonal entry, or create one by a congruence
        let piv = alive.iter().copied().find(|&i| !m[i][i].is_zero());
        let p = match piv {
            Some(p) => p,
            None => {
                let pair = alive.iter().flat_map(|&i| alive.iter().map(move |&j| (i, j))).find(|&(i, j)| i != j && !m[i][j].is_zero());
                match pair {
                    None => {
                        zero += alive.len();
                        break;
                    }
                    Some((i, j)) => {
                        // row/col i += row/col j makes m[i][i] = 2 m[i][j] ≠ 0
                        for k in 0..n {
                            let v = m[j][k].clone();
                            m[i][k] += v;
                        }
                        for k in 0..n {
                            let v = m[k][j].clone();
                            m[k][i] += v;
                        }
                        i
                    }
                }
            }
        };
        let d = m[p][p].clone();
        if d > Q::zero() {
            pos += 1;
        } else {
            neg += 1;
        }
        alive.retain(|&i| i != p);
        for &i in &alive {
            if m[i][p].is_zero() {
                continue;
            }
            let f = &m[i][p] / &d;
            for k in 0..n {
                let v = &f * &m[p][k];
                m[i][k] -= v;
            }
            for k in 0..n {
                let v = &f * &m[k][p];
                m[k][i] -= v;
            }
        }
    }
    (pos, neg, zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, NumberField};

    #[test]
    fn rank_and_det() {
        let k = NumberField::rationals();
        let e = |v: i64| Fe::from_int(&k, v);
        let m = vec![vec![e(1), e(2)], vec![e(2), e(4)]];
        assert_eq!(rank(&m), 1);
        assert!(det(m).is_zero());
        let m = vec![vec![e(0), e(1)], vec![e(1), e(0)]];
        assert_eq!(det(m.clone()), e(-1));
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn hyperbolic_plane_inertia() {
        let h = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(inertia(&h), (1, 1, 0));
        let d = vec![vec![q(1), q(0), q(0)], vec![q(0), q(-1), q(0)], vec![q(0), q(0), q(0)]];
        assert_eq!(inertia(&d), (1, 1, 1));
    }

    #[test]
    fn span_membership() {
        let cols = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        assert_eq!(solve_in_span(&cols, &[q(2), q(3), q(5)]), Some(vec![q(2), q(3)]));
        assert_eq!(solve_in_span(&cols, &[q(2), q(3), q(4)]), None);
        assert_eq!(rank_q(&cols), 2);
    }
}
