//! Divisibility gaps in weighted degrees, Frobenius numbers, and the
//! degree from which an ideal is generated by a single component.

use crate::error::{Error, Result};
use crate::monideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::ring::RingDescriptor;

/// `G*(w)`: the least `B >= 0` such that every monomial of degree `n + q`
/// with `n > B` has a divisor of degree exactly `q`.
///
/// A monomial with `a_v >= q / w_v` for some `v` is divisible by
/// `X_v^{q / w_v}`, so only the box `a_v < q / w_v` has to be searched.
/// Peeling one divisor of degree `q` at a time extends the statement to all
/// multiples `hq`.
pub fn gap_bound(ring: &RingDescriptor) -> u64 {
    let q = ring.lcm_weight();
    let weights = ring.weights();
    let limits: Vec<u32> = weights.iter().map(|w| (q / w) as u32).collect();
    let mut worst = 0u64;
    let mut exps = vec![0u32; weights.len()];
    loop {
        let m = Monomial::new(exps.clone());
        let d = m.degree_with(weights);
        if d > q + worst && m.divisor_of_degree(weights, q).is_none() {
            worst = d - q;
        }
        // odometer over the box
        let mut v = 0;
        loop {
            if v == exps.len() {
                return worst;
            }
            exps[v] += 1;
            if exps[v] < limits[v] {
                break;
            }
            exps[v] = 0;
            v += 1;
        }
    }
}

/// All monomials of degree `big` without a divisor of degree exactly `small`.
pub fn gap_witnesses(ring: &RingDescriptor, small: u64, big: u64) -> Result<Vec<Monomial>> {
    if small > big {
        return Err(Error::Precondition(format!("divisor degree {small} exceeds {big}")));
    }
    Ok(monomials_of_degree(ring, big)
        .into_iter()
        .filter(|m| m.divisor_of_degree(ring.weights(), small).is_none())
        .collect())
}

/// The largest degree `t` with `R_t = 0`, or `-1` when every degree is
/// attained.
pub fn frobenius_number(ring: &RingDescriptor) -> Result<i64> {
    let g = ring.gcd_weight();
    if g != 1 {
        return Err(Error::FrobeniusUndefined(g));
    }
    let mut weights: Vec<u64> = ring.groups().iter().map(|g| g.weight).collect();
    weights.sort_unstable();
    let smallest = weights[0] as usize;
    let mut representable = vec![true];
    let mut last_gap: i64 = -1;
    let mut run = 1usize;
    let mut t = 0usize;
    // once `smallest` consecutive degrees are attained, all later ones are
    while run < smallest {
        t += 1;
        let ok = weights
            .iter()
            .any(|&w| w as usize <= t && representable[t - w as usize]);
        representable.push(ok);
        if ok {
            run += 1;
        } else {
            run = 0;
            last_gap = t as i64;
        }
    }
    Ok(last_gap)
}

/// Outcome of the generation-stabilization probe for every candidate degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationReport {
    pub limit: u64,
    /// Least candidate `l` that passed, if any.
    pub degree: Option<u64>,
    /// For each rejected candidate `l`: a degree `r` and a monomial of `I_r`
    /// outside `I_l R_{r-l}`.
    pub failures: Vec<(u64, u64, Monomial)>,
}

/// Least `l <= limit - q` such that `I_r = I_l R_{r-l}` for every
/// `l <= r <= limit`.
///
/// Candidates above `limit - q` are not considered: the condition would be
/// checked on less than one period of degrees and holds trivially at
/// `l = limit`.
pub fn stabilization_degree(ideal: &MonomialIdeal, limit: u64) -> Option<u64> {
    stabilization_report(ideal, limit).degree
}

pub fn stabilization_report(ideal: &MonomialIdeal, limit: u64) -> StabilizationReport {
    let ring = ideal.ring();
    let q = ring.lcm_weight();
    let mut failures = Vec::new();
    if limit < q {
        return StabilizationReport {
            limit,
            degree: None,
            failures,
        };
    }
    let components: Vec<Vec<Monomial>> = (0..=limit)
        .map(|r| {
            monomials_of_degree(ring, r)
                .into_iter()
                .filter(|m| ideal.contains(m))
                .collect()
        })
        .collect();
    for l in 0..=limit - q {
        match first_failure(ideal, &components, l, limit) {
            None => {
                return StabilizationReport {
                    limit,
                    degree: Some(l),
                    failures,
                }
            }
            Some((r, m)) => failures.push((l, r, m)),
        }
    }
    StabilizationReport {
        limit,
        degree: None,
        failures,
    }
}

fn first_failure(ideal: &MonomialIdeal, components: &[Vec<Monomial>], l: u64, limit: u64) -> Option<(u64, Monomial)> {
    let weights = ideal.ring().weights();
    for r in l..=limit {
        for u in &components[r as usize] {
            // u lies in I_l R_{r-l} iff some generator g | v | u with deg v = l
            let covered = ideal.generators().iter().any(|g| {
                let dg = g.degree_with(weights);
                dg <= l && g.divides(u) && u.div(g).divisor_of_degree(weights, l - dg).is_some()
            });
            if !covered {
                return Some((r, u.clone()));
            }
        }
    }
    None
}
