//! Dense univariate polynomials over ℚ, coefficients stored low degree first.

use super::Q;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn trim(p: &mut Vec<Q>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &[Q]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut out: Vec<Q> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Q::zero);
            x + b.get(i).cloned().unwrap_or_else(Q::zero)
        })
        .collect();
    trim(&mut out);
    out
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let nb: Vec<Q> = b.iter().map(|c| -c).collect();
    add(a, &nb)
}

pub fn mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; panics on a zero divisor.
pub fn divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let db = degree(b).expect("division by zero polynomial");
    let mut r: Vec<Q> = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let lc = b[db].clone();
    let mut quo = vec![Q::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lc;
        for i in 0..=db {
            r[dr - db + i] -= &c * &b[i];
        }
        quo[dr - db] = c;
        trim(&mut r);
    }
    trim(&mut quo);
    (quo, r)
}

pub fn monic(p: &[Q]) -> Vec<Q> {
    match degree(p) {
        None => Vec::new(),
        Some(d) => {
            let lc = p[d].clone();
            p[..=d].iter().map(|c| c / &lc).collect()
        }
    }
}

pub fn gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

/// Returns `s` with `s·a ≡ gcd(a, m) (mod m)`.
pub fn inverse_mod(a: &[Q], m: &[Q]) -> Option<Vec<Q>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1): (Vec<Q>, Vec<Q>) = (Vec::new(), vec![Q::one()]);
    while !r1.is_empty() {
        let (qq, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&qq, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let inv = Q::one() / &r0[0];
    let (_, s) = divrem(&s0.iter().map(|c| c * &inv).collect::<Vec<_>>(), m);
    Some(s)
}

pub fn eval(p: &[Q], x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

pub fn derivative(p: &[Q]) -> Vec<Q> {
    let mut out: Vec<Q> = p.iter().enumerate().skip(1).map(|(i, c)| c * Q::from_integer((i as i64).into())).collect();
    trim(&mut out);
    out
}

fn lcm_of_denominators(p: &[Q]) -> num_bigint::BigInt {
    p.iter().fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// Positive divisors of a nonzero integer. Intended for the tiny constants that
/// appear in defining polynomials.
fn divisors(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = num_bigint::BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let e = &n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out
}

/// Rational roots of `p` via the rational-root theorem.
pub fn rational_roots(p: &[Q]) -> Vec<Q> {
    let mut p = p.to_vec();
    trim(&mut p);
    let mut roots = Vec::new();
    if p.len() <= 1 {
        return roots;
    }
    while p[0].is_zero() {
        if !roots.contains(&Q::zero()) {
            roots.push(Q::zero());
        }
        p.remove(0);
    }
    let l = lcm_of_denominators(&p);
    let ints: Vec<num_bigint::BigInt> = p.iter().map(|c| (c * Q::from_integer(l.clone())).to_integer()).collect();
    let a0 = ints[0].clone();
    let an = ints.last().unwrap().clone();
    for num in divisors(&a0) {
        for den in divisors(&an) {
            for sign in [1i32, -1] {
                let r = Q::new(&num * num_bigint::BigInt::from(sign), den.clone());
                if eval(&p, &r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Monic quartic over ℚ: does it split as a product of two rational quadratics?
pub fn quartic_has_quadratic_factor(p: &[Q]) -> Option<(Vec<Q>, Vec<Q>)> {
    debug_assert_eq!(degree(p), Some(4));
    let p = monic(p);
    // Substitute t = s/L to obtain a monic integer polynomial in s.
    let l = lcm_of_denominators(&p);
    let lq = Q::from_integer(l.clone());
    let mut scaled = Vec::with_capacity(5);
    let mut pw = Q::one();
    for i in (0..=4).rev() {
        scaled.push(&p[i] * &pw);
        pw *= &lq;
    }
    scaled.reverse();
    // L^(4-i)·a_i is integral because every denominator divides L.
    let ints: Vec<num_bigint::BigInt> = scaled.iter().map(|c| c.to_integer()).collect();
    let scale = lq;
    let (d, c, b, a) = (&ints[0], &ints[1], &ints[2], &ints[3]);
    if d.is_zero() {
        return None;
    }
    // (t² + p t + q)(t² + r t + s) with q s = d, p + r = a, q + s + p r = b, p s + q r = c.
    for qq in divisors(d) {
        for sign in [1i32, -1] {
            let qv = &qq * num_bigint::BigInt::from(sign);
            let sv = d / &qv;
            let prod = b - &qv - &sv;
            // p, r roots of z² − a z + prod
            let disc = a * a - num_bigint::BigInt::from(4) * &prod;
            if disc.is_negative() {
                continue;
            }
            let sq = disc.sqrt();
            if &sq * &sq != disc {
                continue;
            }
            let two = num_bigint::BigInt::from(2);
            let hi: num_bigint::BigInt = (a + &sq) / &two;
            let lo: num_bigint::BigInt = (a - &sq) / &two;
            for (pv, rv) in [(hi.clone(), lo.clone()), (lo, hi)] {
                if &pv + &rv != *a || &pv * &rv != prod {
                    continue;
                }
                if &pv * &sv + &qv * &rv == *c {
                    // undo the scaling t -> t / scale
                    let s2: Q = &scale * &scale;
                    let f1 = vec![Q::from_integer(qv.clone()) / &s2, Q::from_integer(pv.clone()) / &scale, Q::one()];
                    let f2 = vec![Q::from_integer(sv.clone()) / &s2, Q::from_integer(rv.clone()) / &scale, Q::one()];
                    return Some((f1, f2));
                }
            }
        }
    }
    None
}
