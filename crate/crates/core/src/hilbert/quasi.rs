//! Quasi-polynomial form of a Hilbert function: for `t >= N_0`,
//! `H(t) = p_j(t)` where `j = t mod q`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::HilbertSeries;
use crate::error::{Error, Result};

const MAX_RETRIES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: u64,
    /// `polys[j]` holds the coefficients of `p_j`, constant term first.
    polys: Vec<Vec<BigRational>>,
    threshold: u64,
    pole_order: usize,
}

impl QuasiPolynomial {
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    /// The pole order `d`; every `p_j` has degree at most `d - 1`.
    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    pub fn polynomial(&self, residue: usize) -> &[BigRational] {
        &self.polys[residue]
    }

    pub fn polynomials(&self) -> &[Vec<BigRational>] {
        &self.polys
    }

    /// `p_{t mod q}(t)`; equals the Hilbert function for `t >= threshold`.
    pub fn evaluate(&self, t: u64) -> BigRational {
        evaluate(&self.polys[(t % self.period) as usize], t)
    }

    /// True iff every coefficient lies in `[q^{d-1} (d-1)!]^{-1} Z`.
    pub fn denominators_bounded(&self) -> bool {
        let bound = denominator_bound(self.period, self.pole_order);
        self.polys.iter().flatten().all(|c| (&bound % c.denom()).is_zero())
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, p) in self.polys.iter().enumerate() {
            let terms: Vec<String> = p
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| match k {
                    0 => format!("{c}"),
                    1 => format!("({c})*t"),
                    _ => format!("({c})*t^{k}"),
                })
                .collect();
            let body = if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            };
            writeln!(f, "p_{j}(t) = {body}")?;
        }
        write!(f, "valid for t >= {}", self.threshold)
    }
}

/// `q^{d-1} (d-1)!`, or 1 when `d <= 1`.
pub fn denominator_bound(q: u64, d: usize) -> BigInt {
    if d <= 1 {
        return BigInt::one();
    }
    let mut b = BigInt::from(q).pow(d as u32 - 1);
    for k in 2..d as u64 {
        b *= k;
    }
    b
}

/// Interpolates the residue-class polynomials of `hs` and checks each of
/// them on two further values of its class.
pub fn quasi_polynomial(hs: &HilbertSeries) -> Result<QuasiPolynomial> {
    let q = hs.ring().lcm_weight();
    let d = hs.pole_order();
    if hs.is_zero() || d == 0 {
        let threshold = hs.numerator().len() as i64 - hs.denominator_poly().len() as i64 + 1;
        return Ok(QuasiPolynomial {
            period: q,
            polys: vec![Vec::new(); q as usize],
            threshold: threshold.max(0) as u64,
            pole_order: 0,
        });
    }
    // coefficients agree with a quasi-polynomial past deg g - deg D
    let deg_g = hs.numerator().len() as i64 - 1;
    let deg_den = hs.denominator_poly().len() as i64 - 1;
    let mut threshold = (deg_g - deg_den + 1).max(0) as u64;

    for _ in 0..MAX_RETRIES {
        let top = threshold + q * (d as u64 + 2);
        let values = hs.expand(top);
        let mut polys = Vec::with_capacity(q as usize);
        let mut ok = true;
        for j in 0..q {
            let start = first_in_class(threshold, j, q);
            let xs: Vec<u64> = (0..d as u64).map(|k| start + k * q).collect();
            let ys: Vec<BigRational> = xs.iter().map(|&x| rat(values[x as usize])).collect();
            let p = interpolate(&xs, &ys);
            for extra in 0..2 {
                let x = start + (d as u64 + extra) * q;
                if evaluate(&p, x) != rat(values[x as usize]) {
                    ok = false;
                }
            }
            polys.push(p);
        }
        if ok {
            let qp = QuasiPolynomial {
                period: q,
                polys,
                threshold,
                pole_order: d,
            };
            if !qp.denominators_bounded() {
                return Err(Error::Internal("quasi-polynomial denominators exceed the bound".into()));
            }
            return Ok(qp);
        }
        threshold += q;
    }
    Err(Error::NoConvergence(MAX_RETRIES))
}

fn first_in_class(from: u64, j: u64, q: u64) -> u64 {
    from + (j + q - from % q) % q
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn evaluate(p: &[BigRational], t: u64) -> BigRational {
    let x = rat(t as i64);
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
}

/// Lagrange interpolation through `(xs[k], ys[k])`.
fn interpolate(xs: &[u64], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut out = vec![BigRational::zero(); n];
    for i in 0..n {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for k in 0..n {
            if k == i {
                continue;
            }
            let xk = rat(xs[k] as i64);
            // basis *= (t - xk)
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (e, c) in basis.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * &xk;
            }
            basis = next;
            denom *= rat(xs[i] as i64) - xk;
        }
        let scale = &ys[i] / denom;
        for (e, c) in basis.iter().enumerate() {
            out[e] += c * &scale;
        }
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}
