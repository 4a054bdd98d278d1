//! Exact evaluation of the volume inequalities and the integer threshold
//! solvers behind the genus and geometric-genus bounds.

use crate::algebra::{q, Q};
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("{op} needs p_g(X) >= {min}, got {pg}")]
    RegimeTooSmall { op: &'static str, pg: u64, min: u64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Upper end of the search range for `K_{F₀}²`.
pub const K2_SEARCH_CAP: u64 = 200;

fn ceil(x: &Q) -> i64 {
    x.ceil().to_integer().to_i64().expect("fits in i64")
}

fn positive(name: &str, x: &Q) -> Result<(), BoundsError> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(BoundsError::InvalidInput(format!("{name} must be positive, got {x}")))
    }
}

/// Right-hand side `p·β·ξ` of `K³ ≥ pβξ`.
pub fn vol_inequality_rhs(p: u64, beta: &Q, xi: &Q) -> Result<Q, BoundsError> {
    if p == 0 {
        return Err(BoundsError::InvalidInput("p must be at least 1".into()));
    }
    positive("beta", beta)?;
    Ok(q(p as i64) * beta * xi)
}

pub fn vol_inequality_holds(k3: &Q, p: u64, beta: &Q, xi: &Q) -> Result<bool, BoundsError> {
    Ok(*k3 >= vol_inequality_rhs(p, beta, xi)?)
}

/// `ξ ≥ (2g − 2) / (1 + 1/p + 1/β)`.
pub fn xi_lower_bound(g_c: u64, p: u64, beta: &Q) -> Result<Q, BoundsError> {
    if g_c < 2 || p == 0 {
        return Err(BoundsError::InvalidInput(format!("need g(C) >= 2 and p >= 1, got ({g_c}, {p})")));
    }
    positive("beta", beta)?;
    let den = Q::one() + Q::new(1.into(), (p as i64).into()) + beta.recip();
    Ok(q(2 * g_c as i64 - 2) / den)
}

/// Whether the ξ bound lands exactly on `g − 2`, where a strict
/// `π*(K_X)·C > g(C) − 2` cannot be concluded.
pub fn xi_on_strictness_boundary(g_c: u64, p: u64, beta: &Q) -> Result<bool, BoundsError> {
    Ok(xi_lower_bound(g_c, p, beta)? == q(g_c as i64 - 2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop31 {
    pub ceiling_form: i64,
    pub refined: Option<i64>,
    pub best: i64,
}

/// `K³ ≥ ⌈(2g−2)/(2 + 1/(p_g−2))⌉·(p_g−2)`, refined to `(g−1)(p_g−2)` for
/// `p_g ≥ 84`.
pub fn prop31_bound(g_c: u64, pg_x: u64) -> Result<Prop31, BoundsError> {
    if pg_x < 3 || g_c < 2 {
        return Err(BoundsError::InvalidInput(format!("need p_g(X) >= 3 and g(C) >= 2, got ({pg_x}, {g_c})")));
    }
    let m = pg_x as i64 - 2;
    let frac = q(2 * g_c as i64 - 2) / (q(2) + Q::new(1.into(), m.into()));
    let ceiling_form = ceil(&frac) * m;
    let refined = (pg_x >= 84).then(|| (g_c as i64 - 1) * m);
    Ok(Prop31 { ceiling_form, refined, best: refined.map_or(ceiling_form, |r| r.max(ceiling_form)) })
}

/// Genus bounds from the Albanese cases, which stay far below the main
/// case in the regime `p_g ≥ 84`.
pub const ALBANESE_CASE_CAPS: [u64; 3] = [28, 37, 36];

/// Largest `g` with `(g − 1)(p_g − 2) ≤ 72·(5/4)·p_g`.
pub fn thm32_max_genus(pg_x: u64) -> Result<u64, BoundsError> {
    if pg_x < 84 {
        return Err(BoundsError::RegimeTooSmall { op: "thm32_max_genus", pg: pg_x, min: 84 });
    }
    let main = 90 * pg_x / (pg_x - 2) + 1;
    Ok(ALBANESE_CASE_CAPS.iter().copied().fold(main, u64::max))
}

fn k2_slope_term(k: &Q) -> Q {
    (q(4) * (q(20) * k + q(1))).recip()
}

/// Lower bound for `K_X³` in terms of `K_{F₀}²` and `p_g(X)`.
pub fn prop41_lower_bound(k_f0_sq: u64, pg_x: u64, b: u8) -> Result<Q, BoundsError> {
    if k_f0_sq == 0 {
        return Err(BoundsError::InvalidInput("K_F0^2 must be at least 1".into()));
    }
    let k = q(k_f0_sq as i64);
    let lead = &k + k2_slope_term(&k);
    match b {
        1 => Ok(lead * q(pg_x as i64)),
        0 => {
            if pg_x <= parity_threshold_pg() {
                return Err(BoundsError::RegimeTooSmall { op: "prop41_lower_bound", pg: pg_x, min: parity_threshold_pg() + 1 });
            }
            Ok(lead * q(pg_x as i64 - 1) - q(4) * &k / (q(2) * (q(20) * &k + q(1))))
        }
        _ => Err(BoundsError::InvalidInput(format!("b must be 0 or 1, got {b}"))),
    }
}

/// Largest `p_g` with `2(p_g − 1)² ≤ 72·(3/2)·p_g`; beyond it `K_X·N² = 0`.
pub fn parity_threshold_pg() -> u64 {
    (1..).take_while(|&p: &u64| 2 * (p - 1) * (p - 1) <= 108 * p).last().unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Irregularity {
    Zero,
    Positive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm42 {
    #[serde(rename = "max_K2")]
    pub max_k2: u64,
    pub max_pg_f: u64,
}

/// `K ≤ RHS(K)` at `p_g(X)` for the given case.
fn thm42_feasible(k2: u64, pg_x: u64, b: u8, q_f: Irregularity) -> bool {
    let k = q(k2 as i64);
    let slope = k2_slope_term(&k);
    if b == 1 {
        return &k + slope <= q(72);
    }
    let frac = q(2) * &k / (q(20) * &k + q(1));
    let coeff = match q_f {
        Irregularity::Positive => q(36) * &k + frac,
        Irregularity::Zero => frac,
    };
    k <= q(72) - slope + coeff / q(pg_x as i64 - 1)
}

/// Largest feasible `K_{F₀}²` and the resulting bound on `p_g(F)`: Noether
/// `K² ≥ 2p_g − 4`, or Debarre `K² ≥ 2p_g` when `q(F) > 0` and `b = 0`.
pub fn thm42_max_k2(pg_x: u64, b: u8, q_f: Irregularity) -> Result<Thm42, BoundsError> {
    if b > 1 {
        return Err(BoundsError::InvalidInput(format!("b must be 0 or 1, got {b}")));
    }
    if b == 0 && pg_x <= parity_threshold_pg() {
        return Err(BoundsError::RegimeTooSmall { op: "thm42_max_K2", pg: pg_x, min: parity_threshold_pg() + 1 });
    }
    let max_k2 = (1..=K2_SEARCH_CAP).filter(|&k| thm42_feasible(k, pg_x, b, q_f)).max().unwrap_or(0);
    let s = surface_inequalities_inverse(max_k2, b == 0 && q_f == Irregularity::Positive);
    Ok(Thm42 { max_k2, max_pg_f: s })
}

fn surface_inequalities_inverse(k2: u64, debarre: bool) -> u64 {
    if debarre {
        k2 / 2
    } else {
        (k2 + 4) / 2
    }
}

/// Smallest `p_g(X)` from which `max_K2 ≤ target` holds (b = 0), found by
/// bisection on the monotone feasibility test.
pub fn thm42_flip(target: u64, q_f: Irregularity) -> Result<u64, BoundsError> {
    let ok = |pg: u64| thm42_max_k2(pg, 0, q_f).map(|r| r.max_k2 <= target);
    let mut lo = parity_threshold_pg() + 1;
    if ok(lo)? {
        return Ok(lo);
    }
    let mut hi = lo;
    while !ok(hi)? {
        hi = hi.checked_mul(2).ok_or_else(|| BoundsError::InvalidInput(format!("no threshold for K2 <= {target}")))?;
    }
    // invariant: !ok(lo), ok(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInequalities {
    #[serde(rename = "noether_min_K2")]
    pub noether_min_k2: i64,
    #[serde(rename = "debarre_min_K2")]
    pub debarre_min_k2: Option<i64>,
}

pub fn surface_inequalities(pg_f: u64, q_f: u64) -> SurfaceInequalities {
    let p = pg_f as i64;
    SurfaceInequalities { noether_min_k2: 2 * p - 4, debarre_min_k2: (q_f > 0).then_some(2 * p) }
}

/// `K³ ≤ 72χ(ω)`.
pub fn miyaoka_yau_check(k3: &Q, chi_omega: &Q) -> bool {
    *k3 <= q(72) * chi_omega
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qf;

    #[test]
    fn volume_and_xi() {
        assert_eq!(vol_inequality_rhs(1, &q(1), &q(2)).unwrap(), q(2));
        assert_eq!(vol_inequality_rhs(2, &qf(3, 2), &q(4)).unwrap(), q(12));
        assert_eq!(vol_inequality_rhs(1, &q(1), &qf(4, 3)).unwrap(), qf(4, 3));
        assert!(vol_inequality_holds(&q(12), 2, &qf(3, 2), &q(4)).unwrap());
        assert_eq!(xi_lower_bound(2, 1, &q(1)).unwrap(), qf(2, 3));
        assert_eq!(xi_lower_bound(166, 1, &q(82)).unwrap(), q(164));
        assert!(xi_on_strictness_boundary(166, 1, &q(82)).unwrap());
        let big = xi_lower_bound(10, 1_000_000, &q(1_000_000)).unwrap();
        assert!(big < q(18) && big > qf(179_999, 10_000));
    }

    #[test]
    fn prop31_examples() {
        assert_eq!(prop31_bound(3, 4).unwrap().ceiling_form, 4);
        assert_eq!(prop31_bound(2, 3).unwrap().ceiling_form, 1);
        let r = prop31_bound(91, 183).unwrap();
        assert_eq!(r.refined, Some(16290));
        assert_eq!(r.best, 16290);
    }

    #[test]
    fn genus_thresholds() {
        assert_eq!(thm32_max_genus(183).unwrap(), 91);
        assert_eq!(thm32_max_genus(182).unwrap(), 92);
        assert_eq!(thm32_max_genus(1_000_000_000).unwrap(), 91);
        assert!(matches!(thm32_max_genus(83), Err(BoundsError::RegimeTooSmall { .. })));
    }

    #[test]
    fn prop41_examples() {
        assert_eq!(prop41_lower_bound(2, 5, 1).unwrap(), qf(1645, 164));
        assert_eq!(prop41_lower_bound(1, 56, 0).unwrap(), qf(85, 84) * q(55) - qf(2, 21));
        assert!(prop41_lower_bound(1, 55, 0).is_err());
    }

    #[test]
    fn parity() {
        assert_eq!(parity_threshold_pg(), 55);
        let holds = |p: u64| 2 * (p - 1) * (p - 1) <= 108 * p;
        assert!(holds(55));
        assert!(!holds(56));
    }

    #[test]
    fn thm42_examples() {
        assert_eq!(thm42_max_k2(10, 1, Irregularity::Zero).unwrap(), Thm42 { max_k2: 71, max_pg_f: 37 });
        assert_eq!(thm42_max_k2(3890, 0, Irregularity::Positive).unwrap(), Thm42 { max_k2: 72, max_pg_f: 36 });
        assert_eq!(thm42_max_k2(33_616_518, 0, Irregularity::Positive).unwrap(), Thm42 { max_k2: 71, max_pg_f: 35 });
        assert_eq!(thm42_max_k2(865, 0, Irregularity::Zero).unwrap(), Thm42 { max_k2: 71, max_pg_f: 37 });
    }

    #[test]
    fn thm42_sharp_thresholds() {
        let flip = thm42_flip(71, Irregularity::Zero).unwrap();
        assert_eq!(flip, 578);
        assert!(flip <= 865);
        assert!(thm42_flip(72, Irregularity::Positive).unwrap() <= 3890);
        assert!(thm42_flip(71, Irregularity::Positive).unwrap() <= 33_616_518);
    }

    #[test]
    fn surface_and_my() {
        assert_eq!(surface_inequalities(37, 0).noether_min_k2, 70);
        assert_eq!(surface_inequalities(36, 1).debarre_min_k2, Some(72));
        assert_eq!(surface_inequalities(2, 0), SurfaceInequalities { noether_min_k2: 0, debarre_min_k2: None });
        assert!(miyaoka_yau_check(&q(72), &q(3)));
        // equality is allowed
        assert!(miyaoka_yau_check(&q(72), &q(1)));
        assert!(!miyaoka_yau_check(&q(73), &q(1)));
        assert!(miyaoka_yau_check(&q(0), &q(0)));
    }
}
