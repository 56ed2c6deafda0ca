//! Hilbert functions and Hilbert–Serre series of quotients `R/I`.
//!
//! The series of `R/I` is stored as its numerator `g(t)` over the fixed
//! denominator `prod_i (1 - t^{q_i})^{l_i}`; the numerator is computed for
//! monomial ideals by pivot splitting.

mod gap;
mod quasi;

use std::collections::HashMap;
use std::fmt;

use crate::monideal::MonomialIdeal;
use crate::monomial::{count_monomials_by_degree, Monomial};
use crate::ring::RingDescriptor;

pub use gap::{
    frobenius_number, gap_bound, gap_witnesses, stabilization_degree, stabilization_report, StabilizationReport,
};
pub use quasi::{denominator_bound, quasi_polynomial, QuasiPolynomial};

/// Which graded object a Hilbert function value refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `H_I(d) = dim_K I_d`.
    Ideal,
    /// `H_{R/I}(d) = dim_K R_d - dim_K I_d`.
    Quotient,
}

/// `g(t) / prod (1 - t^{q_i})^{l_i}`, the Hilbert series of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    ring: RingDescriptor,
    numerator: Vec<i64>,
}

impl HilbertSeries {
    pub fn new(ring: &RingDescriptor, numerator: Vec<i64>) -> Self {
        HilbertSeries {
            ring: ring.clone(),
            numerator: trim(numerator),
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    /// Coefficients of `g(t)`, constant term first.
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// The factors `(q_i, l_i)` of the denominator.
    pub fn denominator(&self) -> Vec<(u64, usize)> {
        self.ring.groups().iter().map(|g| (g.weight, g.count)).collect()
    }

    /// Coefficients of the expanded denominator polynomial.
    pub fn denominator_poly(&self) -> Vec<i64> {
        let mut out = vec![1i64];
        for &w in self.ring.weights() {
            let mut f = vec![0i64; w as usize + 1];
            f[0] = 1;
            f[w as usize] = -1;
            out = poly_mul(&out, &f);
        }
        out
    }

    /// `H_{R/I}(0), ..., H_{R/I}(max_degree)`.
    pub fn expand(&self, max_degree: u64) -> Vec<i64> {
        let counts = count_monomials_by_degree(self.ring.weights(), max_degree);
        (0..=max_degree as usize)
            .map(|d| {
                self.numerator
                    .iter()
                    .enumerate()
                    .take(d + 1)
                    .map(|(k, g)| g * counts[d - k])
                    .sum()
            })
            .collect()
    }

    /// `H_{R/I}(d)`.
    pub fn coefficient(&self, d: u64) -> i64 {
        let counts = count_monomials_by_degree(self.ring.weights(), d);
        self.numerator
            .iter()
            .enumerate()
            .take(d as usize + 1)
            .map(|(k, g)| g * counts[d as usize - k])
            .sum()
    }

    /// Order of the pole of the series at `t = 1`, i.e. the Krull dimension
    /// of `R/I` (zero for the zero series).
    pub fn pole_order(&self) -> usize {
        if self.numerator.is_empty() {
            return 0;
        }
        let (_, mult) = divide_out_one_minus_t(&self.numerator);
        self.ring.nvars() - mult
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num: Vec<String> = self
            .numerator
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{k}"),
            })
            .collect();
        let num = if num.is_empty() {
            "0".to_string()
        } else {
            num.join(" + ").replace("+ -", "- ")
        };
        let den: Vec<String> = self
            .denominator()
            .iter()
            .map(|&(q, l)| {
                if l == 1 {
                    format!("(1-t^{q})")
                } else {
                    format!("(1-t^{q})^{l}")
                }
            })
            .collect();
        write!(f, "({num}) / ({})", den.join("*"))
    }
}

/// The Hilbert series of `R/I`.
pub fn hilbert_series(ideal: &MonomialIdeal) -> HilbertSeries {
    let mut memo = HashMap::new();
    let num = numerator(ideal.ring().weights(), ideal.generators().to_vec(), &mut memo);
    HilbertSeries::new(ideal.ring(), num)
}

/// `H_I(d)` or `H_{R/I}(d)` by direct enumeration of the monomials of degree `d`.
pub fn hilbert_function(ideal: &MonomialIdeal, d: u64, convention: Convention) -> i64 {
    let inside = ideal.count_in_degree(d) as i64;
    match convention {
        Convention::Ideal => inside,
        Convention::Quotient => count_monomials_by_degree(ideal.ring().weights(), d)[d as usize] - inside,
    }
}

/// A table of `H_I` or `H_{R/I}` for `from..=to`, via the series.
pub fn hilbert_table(ideal: &MonomialIdeal, from: u64, to: u64, convention: Convention) -> Vec<(u64, i64)> {
    let hs = hilbert_series(ideal);
    let quotient = hs.expand(to);
    let total = count_monomials_by_degree(ideal.ring().weights(), to);
    (from..=to)
        .map(|d| {
            let v = quotient[d as usize];
            match convention {
                Convention::Quotient => (d, v),
                Convention::Ideal => (d, total[d as usize] - v),
            }
        })
        .collect()
}

type Memo = HashMap<Vec<Monomial>, Vec<i64>>;

/// Numerator of `HS(R/I)` by splitting on a pivot `m = X_v^e`:
/// `N(I) = N(I + (m)) + t^{deg m} N(I : m)`.
fn numerator(weights: &[u64], gens: Vec<Monomial>, memo: &mut Memo) -> Vec<i64> {
    let gens = crate::monideal::minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let pure = |m: &Monomial| m.support().count() == 1;
    let mixed: Vec<&Monomial> = gens.iter().filter(|m| !pure(m)).collect();
    if mixed.is_empty() {
        let mut out = vec![1i64];
        for g in &gens {
            out = poly_mul(&out, &one_minus_t_pow(g.degree_with(weights)));
        }
        return out;
    }
    if gens.len() == 1 {
        return one_minus_t_pow(gens[0].degree_with(weights));
    }
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let n = weights.len();
    let mut freq = vec![0usize; n];
    for m in &mixed {
        for v in m.support() {
            freq[v] += 1;
        }
    }
    let v = (0..n).max_by_key(|&v| (freq[v], std::cmp::Reverse(v))).unwrap();
    let mut exps: Vec<u32> = mixed.iter().map(|m| m.exp(v)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2].max(1);
    let pivot = Monomial::var(n, v, e);

    let mut plus = gens.clone();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens.iter().map(|u| u.div(&u.gcd(&pivot))).collect();

    let a = numerator(weights, plus, memo);
    let b = numerator(weights, colon, memo);
    let shift = pivot.degree_with(weights) as usize;
    let mut out = a;
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, 0);
    }
    for (k, c) in b.iter().enumerate() {
        out[k + shift] += c;
    }
    let out = trim(out);
    memo.insert(gens, out.clone());
    out
}

pub(crate) fn one_minus_t_pow(d: u64) -> Vec<i64> {
    if d == 0 {
        return Vec::new();
    }
    let mut v = vec![0i64; d as usize + 1];
    v[0] = 1;
    v[d as usize] = -1;
    v
}

pub(crate) fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Divides by `(1 - t)` as long as `g(1) = 0`; returns the quotient and the
/// multiplicity.
pub(crate) fn divide_out_one_minus_t(g: &[i64]) -> (Vec<i64>, usize) {
    let mut cur = g.to_vec();
    let mut mult = 0;
    while !cur.is_empty() && cur.iter().sum::<i64>() == 0 {
        // g = (1 - t) h  <=>  h_k = sum_{i <= k} g_i
        let mut h = Vec::with_capacity(cur.len() - 1);
        let mut acc = 0i64;
        for c in &cur[..cur.len() - 1] {
            acc += c;
            h.push(acc);
        }
        cur = trim(h);
        mult += 1;
    }
    (cur, mult)
}
