//! Exponent vectors and the enumeration of monomials by weighted degree.

use std::fmt;

use crate::error::{Error, Result};
use crate::order::TermOrder;
use crate::ring::RingDescriptor;

/// A monomial `X^a` stored as its exponent vector in flat variable order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, v: usize, power: u32) -> Self {
        let mut e = vec![0; nvars];
        e[v] = power;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Weighted degree `sum a_v w_v`, without length checks.
    pub fn degree_with(&self, weights: &[u64]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum()
    }

    /// Weighted degree in `ring`; fails on a length mismatch.
    pub fn weighted_degree(&self, ring: &RingDescriptor) -> Result<u64> {
        if self.0.len() != ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: ring.nvars(),
                got: self.0.len(),
            });
        }
        Ok(self.degree_with(ring.weights()))
    }

    pub fn total_exponent(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.div(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v)
    }

    /// `self * X_v^k`.
    pub fn mul_var(&self, v: usize, k: u32) -> Monomial {
        let mut e = self.0.clone();
        e[v] += k;
        Monomial(e)
    }

    /// Renders the monomial with the given variable names, e.g. `x^2*y`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mon: self, names }
    }

    /// A divisor of `self` of weighted degree exactly `target`, if one exists.
    pub fn divisor_of_degree(&self, weights: &[u64], target: u64) -> Option<Monomial> {
        let t = target as usize;
        // choice[v][d]: exponent of X_v on the first path found to degree d
        let n = self.0.len();
        let mut reachable = vec![false; t + 1];
        reachable[0] = true;
        let mut choice: Vec<Vec<u32>> = Vec::with_capacity(n);
        for v in 0..n {
            let w = weights[v] as usize;
            let mut next = vec![false; t + 1];
            let mut pick = vec![u32::MAX; t + 1];
            for d in 0..=t {
                if !reachable[d] {
                    continue;
                }
                for k in 0..=self.0[v] {
                    let nd = d + k as usize * w;
                    if nd > t {
                        break;
                    }
                    if !next[nd] {
                        next[nd] = true;
                        pick[nd] = k;
                    }
                }
            }
            reachable = next;
            choice.push(pick);
        }
        if !reachable[t] {
            return None;
        }
        let mut exps = vec![0u32; n];
        let mut d = t;
        for v in (0..n).rev() {
            let k = choice[v][d];
            exps[v] = k;
            d -= k as usize * weights[v] as usize;
        }
        debug_assert_eq!(d, 0);
        Some(Monomial(exps))
    }
}

pub struct MonomialDisplay<'a> {
    mon: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mon.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, &e) in self.mon.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.names[v])?;
            } else {
                write!(f, "{}^{}", self.names[v], e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of weighted degree exactly `d`, largest first in the default
/// order of `ring`.
pub fn monomials_of_degree(ring: &RingDescriptor, d: u64) -> Vec<Monomial> {
    monomials_of_degree_in(ring.weights(), d, &TermOrder::default_for(ring))
}

/// All monomials of degree `d` for the given weights, sorted descending by `order`.
pub fn monomials_of_degree_in(weights: &[u64], d: u64, order: &TermOrder) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; weights.len()];
    enumerate(weights, 0, d, &mut cur, &mut out);
    out.sort_by(|a, b| order.compare(b, a));
    out
}

fn enumerate(weights: &[u64], v: usize, rest: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if v == weights.len() {
        if rest == 0 {
            out.push(Monomial(cur.clone()));
        }
        return;
    }
    if v + 1 == weights.len() {
        if rest % weights[v] == 0 {
            cur[v] = (rest / weights[v]) as u32;
            out.push(Monomial(cur.clone()));
            cur[v] = 0;
        }
        return;
    }
    let mut k = 0u64;
    while k * weights[v] <= rest {
        cur[v] = k as u32;
        enumerate(weights, v + 1, rest - k * weights[v], cur, out);
        k += 1;
    }
    cur[v] = 0;
}

/// Number of monomials of each degree `0..=max_degree`.
pub fn count_monomials_by_degree(weights: &[u64], max_degree: u64) -> Vec<i64> {
    let n = max_degree as usize;
    let mut counts = vec![0i64; n + 1];
    counts[0] = 1;
    for &w in weights {
        let w = w as usize;
        for d in w..=n {
            counts[d] += counts[d - w];
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn weighted_degree_examples() {
        let r23 = RingDescriptor::from_weights(&[2, 3]).unwrap();
        assert_eq!(m(&[2, 1]).weighted_degree(&r23).unwrap(), 7);
        let r = RingDescriptor::from_weights(&[1, 6, 10, 15]).unwrap();
        assert_eq!(m(&[1, 4, 2, 1]).weighted_degree(&r).unwrap(), 60);
        assert_eq!(Monomial::one(2).weighted_degree(&r23).unwrap(), 0);
        assert!(m(&[1]).weighted_degree(&r23).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let r23 = RingDescriptor::from_weights(&[2, 3]).unwrap();
        assert_eq!(monomials_of_degree(&r23, 5), vec![m(&[1, 1])]);
        assert!(monomials_of_degree(&r23, 1).is_empty());
        let r27 = RingDescriptor::from_weights(&[2, 7]).unwrap();
        assert_eq!(monomials_of_degree(&r27, 28), vec![m(&[14, 0]), m(&[7, 2]), m(&[0, 4])]);
    }

    #[test]
    fn counts_match_enumeration() {
        let r = RingDescriptor::new(&[(1, 1), (2, 2), (5, 1)]).unwrap();
        let counts = count_monomials_by_degree(r.weights(), 30);
        for d in 0..=30 {
            assert_eq!(counts[d as usize], monomials_of_degree(&r, d).len() as i64);
        }
    }

    #[test]
    fn divisor_search() {
        let w = [1, 6, 10, 15];
        assert_eq!(m(&[1, 4, 2, 1]).divisor_of_degree(&w, 30), None);
        let d = m(&[1, 4, 2, 1]).divisor_of_degree(&w, 31).unwrap();
        assert_eq!(d.degree_with(&w), 31);
        assert!(d.divides(&m(&[1, 4, 2, 1])));
        assert_eq!(m(&[2, 1]).divisor_of_degree(&[2, 3], 6), None);
    }
}
