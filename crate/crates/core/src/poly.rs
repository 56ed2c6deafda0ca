//! Sparse polynomials with arbitrary precision rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::ring::RingDescriptor;

pub type Coeff = BigRational;

/// A polynomial as a map from monomials to nonzero coefficients. The map is
/// the canonical form: two polynomials are equal iff their maps are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(Monomial::one(nvars), Coeff::one())
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial, c: Coeff) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        Self::monomial(Monomial::var(nvars, v, 1), Coeff::one())
    }

    /// Builds a polynomial from terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.nvars);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Coeff::one())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(u, a)| (u.mul(m), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Weighted degrees of all terms, sorted and deduplicated.
    pub fn term_degrees(&self, weights: &[u64]) -> Vec<u64> {
        let mut d: Vec<u64> = self.terms.keys().map(|m| m.degree_with(weights)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self, ring: &RingDescriptor) -> bool {
        self.term_degrees(ring.weights()).len() <= 1
    }

    /// The common weighted degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self, ring: &RingDescriptor) -> Result<Option<u64>> {
        let degs = self.term_degrees(ring.weights());
        match degs.len() {
            0 => Ok(None),
            1 => Ok(Some(degs[0])),
            _ => Err(Error::NotHomogeneous(degs)),
        }
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(&Monomial, &Coeff)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| order.compare(b.0, a.0));
        t
    }

    /// Substitutes `images[v]` for every variable `X_v`; the images may live
    /// in a ring with a different number of variables.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let target_vars = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = Polynomial::zero(target_vars);
        let mut power_cache: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(p.nvars), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target_vars, c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut power_cache[v];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(&images[v]);
                    cache.push(next);
                }
                term = term.mul(&cache[e as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Clears denominators and divides out the integer content, keeping the
    /// sign of the leading term under `order` positive.
    pub fn primitive(&self, order: &TermOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den / c.denom());
            g = num_integer::Integer::gcd(&g, &n);
        }
        let lead_negative = self.leading_term(order).map(|(_, c)| c.is_negative()).unwrap_or(false);
        if lead_negative {
            g = -g;
        }
        let factor = BigRational::new(den, g);
        self.scale(&factor)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String], order: &'a TermOrder) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            names,
            order,
        }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
    order: &'a TermOrder,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.sorted_terms(self.order).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display_with(self.names))?;
            } else {
                write!(f, "{abs}*{}", m.display_with(self.names))?;
            }
        }
        Ok(())
    }
}

pub fn coeff_from_int(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn x(n: usize, v: usize) -> Polynomial {
        Polynomial::var(n, v)
    }

    #[test]
    fn arithmetic() {
        let f = x(2, 0).add(&x(2, 1));
        let sq = f.pow(2);
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&m(&[1, 1])), coeff_from_int(2));
        assert!(f.sub(&f).is_zero());
        assert_eq!(f.mul(&Polynomial::zero(2)), Polynomial::zero(2));
    }

    #[test]
    fn homogeneity() {
        let r = RingDescriptor::from_weights(&[2, 3]).unwrap();
        let f = x(2, 0).pow(3).add(&x(2, 1).pow(2));
        assert_eq!(f.homogeneous_degree(&r).unwrap(), Some(6));
        let g = x(2, 0).add(&x(2, 1));
        assert_eq!(g.homogeneous_degree(&r), Err(Error::NotHomogeneous(vec![2, 3])));
    }

    #[test]
    fn substitution() {
        // Y -> Y + X^2 on Y gives Y + X^2
        let images = vec![x(2, 0), x(2, 1).add(&x(2, 0).pow(2))];
        let out = x(2, 1).substitute(&images);
        assert_eq!(out, x(2, 1).add(&x(2, 0).pow(2)));
    }

    #[test]
    fn primitive_form() {
        let r = RingDescriptor::new(&[(1, 2)]).unwrap();
        let o = TermOrder::wdeglex(&r);
        let f = Polynomial::from_terms(
            2,
            vec![
                (m(&[1, 0]), BigRational::new((-2).into(), 3.into())),
                (m(&[0, 1]), BigRational::new(4.into(), 9.into())),
            ],
        );
        let p = f.primitive(&o);
        assert_eq!(p.coeff(&m(&[1, 0])), coeff_from_int(3));
        assert_eq!(p.coeff(&m(&[0, 1])), coeff_from_int(-2));
    }
}
