//! Graded free resolutions of `R/I`, Betti tables, the weighted regularity
//! formula and depth.
//!
//! A resolution is built from Schreyer frames: the Gröbner basis of each
//! syzygy module comes for free from the S-pairs of the previous level,
//! under the order induced by the previous leading terms. Sorting each
//! level by the exponent of one variable makes that variable vanish from
//! all later leading terms, so the frames stop after at most `n` steps.
//! The frame is then made minimal by cancelling constant entries.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::vector::{cancel_pair, ModuleOrder, Vector};
use crate::groebner::Ideal;
use crate::hilbert::Convention;
use crate::monideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::{Coeff, Polynomial};
use crate::ring::RingDescriptor;

/// Rows index the target basis, columns the source basis.
pub type Matrix = Vec<Vec<Polynomial>>;

/// Graded Betti numbers `beta_{ij}`: multiplicity of `R(-j)` at level `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), usize>,
    correction: i64,
}

impl BettiTable {
    fn from_shifts(ring: &RingDescriptor, shifts: &[Vec<u64>]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, level) in shifts.iter().enumerate() {
            for &j in level {
                *entries.entry((i, j)).or_insert(0) += 1;
            }
        }
        BettiTable {
            entries,
            correction: ring.regularity_shift(),
        }
    }

    pub fn get(&self, i: usize, j: u64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `(i, j, beta_ij)` in increasing `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u64, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `b_i = max { j : beta_ij != 0 }`.
    pub fn max_shift(&self, i: usize) -> Option<u64> {
        self.entries
            .range((i, 0)..=(i, u64::MAX))
            .next_back()
            .map(|(&(_, j), _)| j)
    }

    /// Total rank of level `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.entries.range((i, 0)..=(i, u64::MAX)).map(|(_, b)| b).sum()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `max_i { b_i - i } - sum_j l_j (q_j - 1)`; `None` for the zero module.
    pub fn regularity(&self) -> Option<i64> {
        let top = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()?;
        Some(top - self.correction)
    }

    /// `sum_i (-1)^i sum_j beta_ij t^j`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let len = self.entries.keys().map(|&(_, j)| j as usize + 1).max().unwrap_or(0);
        let mut out = vec![0i64; len];
        for (&(i, j), &b) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += sign * b as i64;
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// The table of `I` from the table of `R/I`: level `i + 1` becomes level `i`.
    pub fn of_ideal(&self) -> BettiTable {
        BettiTable {
            entries: self
                .entries
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), &b)| ((i - 1, j), b))
                .collect(),
            correction: self.correction,
        }
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(pd) = self.projective_dimension() else {
            return write!(f, "0");
        };
        for i in 0..=pd {
            let row: Vec<String> = self
                .entries
                .range((i, 0)..=(i, u64::MAX))
                .map(|(&(_, j), &b)| {
                    if b == 1 {
                        format!("R(-{j})")
                    } else {
                        format!("R(-{j})^{b}")
                    }
                })
                .collect();
            writeln!(f, "{i}: {}", row.join(" + "))?;
        }
        Ok(())
    }
}

/// A graded free resolution `... -> F_1 -> F_0 = R -> R/I -> 0`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: RingDescriptor,
    shifts: Vec<Vec<u64>>,
    differentials: Vec<Matrix>,
    minimal: bool,
}

impl FreeResolution {
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    /// Shifts of `F_0, F_1, ...`, each sorted increasingly.
    pub fn shifts(&self) -> Vec<Vec<u64>> {
        self.shifts
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.sort_unstable();
                s
            })
            .collect()
    }

    /// Shifts of the resolution of `I` itself, i.e. of `F_1, F_2, ...`.
    pub fn ideal_shifts(&self) -> Vec<Vec<u64>> {
        self.shifts().into_iter().skip(1).collect()
    }

    /// `d_k : F_k -> F_{k-1}` for `k >= 1`.
    pub fn differential(&self, k: usize) -> &Matrix {
        &self.differentials[k - 1]
    }

    /// Index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.shifts.len().saturating_sub(1)
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_shifts(&self.ring, &self.shifts)
    }

    /// True iff some entry is a nonzero constant.
    pub fn has_unit_entries(&self) -> bool {
        (1..self.shifts.len()).any(|k| {
            let d = self.differential(k);
            d.iter().enumerate().any(|(r, row)| {
                row.iter()
                    .enumerate()
                    .any(|(c, e)| !e.is_zero() && self.shifts[k][c] == self.shifts[k - 1][r])
            })
        })
    }

    /// Every entry homogeneous of degree `target shift - source shift`, and
    /// `d_{k-1} d_k = 0`.
    pub fn is_complex(&self) -> bool {
        let w = self.ring.weights();
        for k in 1..self.shifts.len() {
            let d = self.differential(k);
            for (r, row) in d.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    if e.is_zero() {
                        continue;
                    }
                    let Some(deg) = self.shifts[k][c].checked_sub(self.shifts[k - 1][r]) else {
                        return false;
                    };
                    if e.monomials().any(|m| m.degree_with(w) != deg) {
                        return false;
                    }
                }
            }
            if k >= 2
                && !mat_mul(self.differential(k - 1), d, self.ring.nvars())
                    .iter()
                    .flatten()
                    .all(Polynomial::is_zero)
            {
                return false;
            }
        }
        true
    }
}

fn mat_mul(a: &Matrix, b: &Matrix, nvars: usize) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| {
                    (0..inner).fold(Polynomial::zero(nvars), |acc, t| {
                        if row[t].is_zero() || b[t][c].is_zero() {
                            acc
                        } else {
                            acc.add(&row[t].mul(&b[t][c]))
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// The order on `F_k` induced by the leading terms of the images of its
/// basis, ties broken by preferring lower indices.
#[derive(Clone, Debug)]
struct InducedOrder {
    mono: TermOrder,
    leads: Vec<Vec<i64>>,
    degrees: Vec<u64>,
    width: usize,
}

impl InducedOrder {
    fn base(mono: &TermOrder) -> Self {
        let len = mono.key(&Monomial::one(mono.weights().len())).len();
        InducedOrder {
            mono: mono.clone(),
            leads: vec![vec![0; len]],
            degrees: vec![0],
            width: len + 1,
        }
    }

    fn induced(&self, gens: &[Vector]) -> Self {
        InducedOrder {
            mono: self.mono.clone(),
            leads: gens.iter().map(|g| g.lead().unwrap().key.clone()).collect(),
            degrees: gens
                .iter()
                .map(|g| {
                    let t = g.lead().unwrap();
                    self.degree(&t.mon, t.comp)
                })
                .collect(),
            width: self.width + 1,
        }
    }
}

impl ModuleOrder for InducedOrder {
    fn key(&self, mon: &Monomial, comp: usize) -> Vec<i64> {
        let mut k = self.leads[comp].clone();
        for (a, b) in k.iter_mut().zip(self.mono.key(mon)) {
            *a += b;
        }
        k.push(-(comp as i64));
        k
    }

    fn shift_key(&self, m: &Monomial) -> Vec<i64> {
        let mut k = self.mono.key(m);
        k.resize(self.width, 0);
        k
    }

    fn comp_degree(&self, comp: usize) -> u64 {
        self.degrees[comp]
    }

    fn weights(&self) -> &[u64] {
        self.mono.weights()
    }
}

/// Reduces the S-vector of `gens[i]` and `gens[j]` to zero, recording the
/// syzygy in `F_k` (ordered by `next`).
fn schreyer_syzygy(order: &InducedOrder, next: &InducedOrder, gens: &[Vector], i: usize, j: usize) -> Result<Vector> {
    let (li, lj) = (gens[i].lead().unwrap(), gens[j].lead().unwrap());
    let lcm = li.mon.lcm(&lj.mon);
    let (mi, mj) = (lcm.div(&li.mon), lcm.div(&lj.mon));
    let (a, b) = cancel_pair(&li.coeff, &lj.coeff);
    let mut h = gens[i].mul_monomial(order, &mi).combine(&a, &b, &mj, &gens[j], order);
    let mut sigma: Vec<(Monomial, usize, BigInt)> = vec![(mi, i, a), (mj, j, -b)];
    let mut steps = 0usize;
    while let Some(t) = h.lead() {
        let l = (0..gens.len())
            .find(|&l| {
                let g = gens[l].lead().unwrap();
                g.comp == t.comp && g.mon.divides(&t.mon)
            })
            .ok_or_else(|| Error::Internal("syzygy frame is not a Gröbner basis".into()))?;
        let g = gens[l].lead().unwrap();
        let m = t.mon.div(&g.mon);
        let (c1, c2) = cancel_pair(&t.coeff, &g.coeff);
        h = h.combine(&c1, &c2, &m, &gens[l], order);
        for s in &mut sigma {
            s.2 *= &c1;
        }
        sigma.push((m, l, -c2));
        steps += 1;
        if steps % 8 == 0 {
            let g = sigma.iter().fold(h.content(), |acc, s| acc.gcd(&s.2));
            if !g.is_zero() && !g.is_one() {
                h.divide_exact(&g);
                for s in &mut sigma {
                    s.2 = &s.2 / &g;
                }
            }
        }
    }
    let mut v = Vector::from_triples(next, sigma);
    v.make_primitive();
    Ok(v)
}

/// Schreyer frames: the Gröbner bases `G_1, G_2, ...` of `I` and its
/// successive syzygy modules, with the orders of `F_0, F_1, ...`.
fn frames(ideal: &Ideal, mono: &TermOrder) -> Result<(Vec<InducedOrder>, Vec<Vec<Vector>>)> {
    let nvars = ideal.ring().nvars();
    let base = InducedOrder::base(mono);
    let gb = ideal.groebner_basis(mono);
    let mut cur: Vec<Vector> = gb.elements().iter().map(|g| Vector::from_poly(&base, g, 0)).collect();
    let mut orders = vec![base];
    let mut levels = Vec::new();
    while !cur.is_empty() {
        let k = levels.len();
        if k > nvars {
            return Err(Error::Internal(format!("resolution longer than {nvars}")));
        }
        if k < nvars {
            cur.sort_by_key(|g| std::cmp::Reverse(g.lead().unwrap().mon.exp(k)));
        }
        let order = orders.last().unwrap();
        let next = order.induced(&cur);
        let mut syz = Vec::new();
        for i in 0..cur.len() {
            let li = cur[i].lead().unwrap();
            let mut cands: Vec<(Monomial, usize)> = Vec::new();
            for j in i + 1..cur.len() {
                let lj = cur[j].lead().unwrap();
                if lj.comp == li.comp {
                    cands.push((li.mon.lcm(&lj.mon).div(&li.mon), j));
                }
            }
            let keep = minimalize(cands.iter().map(|c| c.0.clone()).collect());
            for m in keep {
                let j = cands.iter().find(|c| c.0 == m).unwrap().1;
                syz.push(schreyer_syzygy(order, &next, &cur, i, j)?);
            }
        }
        levels.push(cur);
        orders.push(next);
        cur = syz;
    }
    Ok((orders, levels))
}

/// A graded free resolution of `R/I`; minimal when `minimal` is set.
pub fn free_resolution(ideal: &Ideal, minimal: bool) -> Result<FreeResolution> {
    let ring = ideal.ring();
    let nvars = ring.nvars();
    let (orders, levels) = frames(ideal, &TermOrder::wdegrevlex(ring))?;
    let mut shifts: Vec<Vec<u64>> = orders.iter().map(|o| o.degrees.clone()).collect();
    let mut differentials: Vec<Matrix> = levels
        .iter()
        .enumerate()
        .map(|(k, gens)| {
            let rows = shifts[k].len();
            (0..rows)
                .map(|r| gens.iter().map(|g| g.component_poly(nvars, r)).collect())
                .collect()
        })
        .collect();
    if minimal {
        for k in 1..shifts.len() {
            while let Some((r, c)) = find_unit(&differentials[k - 1], &shifts[k - 1], &shifts[k]) {
                cancel_unit(&mut differentials, &mut shifts, k, r, c);
            }
        }
        while shifts.len() > 1 && shifts.last().unwrap().is_empty() {
            shifts.pop();
            differentials.pop();
        }
        if shifts.len() == 1 && shifts[0].is_empty() {
            shifts.clear();
        }
    }
    Ok(FreeResolution {
        ring: ring.clone(),
        shifts,
        differentials,
        minimal,
    })
}

fn find_unit(d: &Matrix, target: &[u64], source: &[u64]) -> Option<(usize, usize)> {
    d.iter().enumerate().find_map(|(r, row)| {
        row.iter()
            .enumerate()
            .find(|(c, e)| !e.is_zero() && source[*c] == target[r])
            .map(|(c, _)| (r, c))
    })
}

/// Splits off `0 -> R e_c -> R e_r -> 0` from level `k`, where `d_k` has
/// the unit `u` at `(r, c)`.
fn cancel_unit(ds: &mut [Matrix], shifts: &mut [Vec<u64>], k: usize, r: usize, c: usize) {
    let d = &mut ds[k - 1];
    let u = d[r][c].coeff(&Monomial::one(d[r][c].nvars()));
    let inv = Coeff::one() / u;
    let pivot_col: Vec<Polynomial> = d.iter().map(|row| row[c].clone()).collect();
    let ncols = d[r].len();
    for c2 in 0..ncols {
        if c2 == c || d[r][c2].is_zero() {
            continue;
        }
        let factor = d[r][c2].scale(&inv);
        for (s, row) in d.iter_mut().enumerate() {
            if s != r && !pivot_col[s].is_zero() {
                row[c2] = row[c2].sub(&pivot_col[s].mul(&factor));
            }
        }
    }
    d.remove(r);
    for row in d.iter_mut() {
        row.remove(c);
    }
    if k >= 2 {
        for row in ds[k - 2].iter_mut() {
            row.remove(r);
        }
    }
    if k < ds.len() {
        ds[k].remove(c);
    }
    shifts[k - 1].remove(r);
    shifts[k].remove(c);
}

/// Betti table of the minimal resolution of `R/I`.
pub fn betti(ideal: &Ideal) -> Result<BettiTable> {
    Ok(free_resolution(ideal, true)?.betti())
}

pub fn monomial_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti(&Ideal::from_monomial_ideal(ideal))
}

/// Weighted Castelnuovo–Mumford regularity of `I` or `R/I`; `None` for the
/// zero module.
pub fn regularity(ideal: &Ideal, convention: Convention) -> Result<Option<i64>> {
    let table = betti(ideal)?;
    Ok(match convention {
        Convention::Quotient => table.regularity(),
        Convention::Ideal => table.of_ideal().regularity(),
    })
}

/// `depth R/I = l - pd R/I` (Auslander–Buchsbaum).
pub fn depth(ideal: &Ideal) -> Result<usize> {
    let table = betti(ideal)?;
    let pd = table
        .projective_dimension()
        .ok_or_else(|| Error::Precondition("R/I is zero".into()))?;
    Ok(ideal.ring().nvars() - pd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy_yz_x5() -> (RingDescriptor, Ideal, Ideal) {
        let r = RingDescriptor::from_weights(&[2, 4, 5]).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[&[1, 1, 0], &[0, 1, 1], &[5, 0, 0]]);
        let g = MonomialIdeal::from_exponents(&r, &[&[3, 0, 0], &[2, 0, 1], &[1, 2, 0], &[0, 3, 1]]);
        (r, Ideal::from_monomial_ideal(&i), Ideal::from_monomial_ideal(&g))
    }

    #[test]
    fn xy_yz_x5_shifts() {
        let (_, i, g) = xy_yz_x5();
        let res = free_resolution(&i, true).unwrap();
        assert!(res.is_complex() && !res.has_unit_entries());
        assert_eq!(res.ideal_shifts(), vec![vec![6, 9, 10], vec![11, 14]]);
        let res = free_resolution(&g, true).unwrap();
        assert!(res.is_complex() && !res.has_unit_entries());
        assert_eq!(
            res.ideal_shifts(),
            vec![vec![6, 9, 10, 17], vec![11, 14, 17, 19], vec![19]]
        );
    }

    #[test]
    fn xy_yz_x5_invariants() {
        let (_, i, g) = xy_yz_x5();
        assert_eq!(regularity(&i, Convention::Ideal).unwrap(), Some(5));
        assert_eq!(regularity(&g, Convention::Ideal).unwrap(), Some(10));
        assert_eq!(depth(&i).unwrap(), 1);
        assert_eq!(depth(&g).unwrap(), 0);
        let t = betti(&g).unwrap().of_ideal();
        assert_eq!(
            (t.max_shift(0), t.max_shift(1), t.max_shift(2)),
            (Some(17), Some(19), Some(19))
        );
    }

    #[test]
    fn trivial_cases() {
        let r = RingDescriptor::new(&[(1, 3)]).unwrap();
        let zero = Ideal::zero(&r);
        let t = betti(&zero).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1)]);
        assert_eq!(t.regularity(), Some(0));
        assert_eq!(depth(&zero).unwrap(), 3);
        assert!(betti(&Ideal::unit(&r)).unwrap().is_zero());
        let r = RingDescriptor::from_weights(&[2, 3]).unwrap();
        assert_eq!(betti(&Ideal::zero(&r)).unwrap().regularity(), Some(-3));
        let f = Polynomial::var(2, 0).pow(3).add(&Polynomial::var(2, 1).pow(2));
        let res = free_resolution(&Ideal::new(&r, vec![f]).unwrap(), true).unwrap();
        assert_eq!(res.ideal_shifts(), vec![vec![6]]);
    }

    #[test]
    fn non_minimal_frame_is_a_complex() {
        let r = RingDescriptor::new(&[(1, 2), (2, 1)]).unwrap();
        let x = |v| Polynomial::var(3, v);
        let i = Ideal::new(
            &r,
            vec![x(0).mul(&x(1)).sub(&x(2)), x(0).pow(2).mul(&x(2)), x(1).pow(4)],
        )
        .unwrap();
        let frame = free_resolution(&i, false).unwrap();
        assert!(frame.is_complex());
        let min = free_resolution(&i, true).unwrap();
        assert!(min.is_complex() && !min.has_unit_entries());
        assert_eq!(min.betti().hilbert_numerator(), i.hilbert_series().numerator());
    }

    #[test]
    fn stable_depth_example() {
        let r = RingDescriptor::from_weights(&[1, 2, 4]).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[&[2, 0, 0], &[1, 1, 0]]);
        assert_eq!(depth(&Ideal::from_monomial_ideal(&i)).unwrap(), 1);
        let m = MonomialIdeal::maximal(&r);
        assert_eq!(depth(&Ideal::from_monomial_ideal(&m)).unwrap(), 0);
    }
}
