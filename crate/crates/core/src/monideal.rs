//! Monomial ideals represented by their minimal generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree_in, Monomial};
use crate::order::TermOrder;
use crate::ring::RingDescriptor;

/// A monomial ideal: an antichain of monomials under divisibility, kept in
/// canonical (exponent-vector) order so that equal ideals compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingDescriptor,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: &RingDescriptor, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != ring.nvars() {
                return Err(Error::LengthMismatch {
                    expected: ring.nvars(),
                    got: g.nvars(),
                });
            }
        }
        Ok(Self::from_gens_unchecked(ring, gens))
    }

    /// Builds from exponent vectors; panics on a length mismatch.
    pub fn from_exponents(ring: &RingDescriptor, gens: &[&[u32]]) -> Self {
        let gens = gens.iter().map(|e| Monomial::new(e.to_vec())).collect();
        Self::new(ring, gens).expect("exponent vectors match the ring")
    }

    pub(crate) fn from_gens_unchecked(ring: &RingDescriptor, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: minimalize(gens),
        }
    }

    pub fn zero(ring: &RingDescriptor) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &RingDescriptor) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: vec![Monomial::one(ring.nvars())],
        }
    }

    /// The graded maximal ideal `m`.
    pub fn maximal(ring: &RingDescriptor) -> Self {
        let n = ring.nvars();
        Self::from_gens_unchecked(ring, (0..n).map(|v| Monomial::var(n, v, 1)).collect())
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Generators sorted descending in `order`.
    pub fn sorted_generators(&self, order: &TermOrder) -> Vec<Monomial> {
        let mut g = self.gens.clone();
        g.sort_by(|a, b| order.compare(b, a));
        g
    }

    pub fn generator_degrees(&self) -> Vec<u64> {
        self.gens.iter().map(|g| g.degree_with(self.ring.weights())).collect()
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.generator_degrees().into_iter().max().unwrap_or(0)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Self::from_gens_unchecked(&self.ring, g)
    }

    pub fn add_generator(&self, m: Monomial) -> MonomialIdeal {
        let mut g = self.gens.clone();
        g.push(m);
        Self::from_gens_unchecked(&self.ring, g)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b));
            }
        }
        Self::from_gens_unchecked(&self.ring, g)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.lcm(b));
            }
        }
        Self::from_gens_unchecked(&self.ring, g)
    }

    /// `I : m` for a monomial `m`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        let g = self.gens.iter().map(|u| u.div(&u.gcd(m))).collect();
        Self::from_gens_unchecked(&self.ring, g)
    }

    /// `I : J`.
    pub fn colon(&self, other: &MonomialIdeal) -> MonomialIdeal {
        if other.is_zero() {
            return MonomialIdeal::unit(&self.ring);
        }
        other
            .gens
            .iter()
            .map(|m| self.colon_monomial(m))
            .reduce(|a, b| a.intersection(&b))
            .expect("nonempty")
    }

    /// `I : m^infinity`.
    pub fn saturate_monomial(&self, m: &Monomial) -> MonomialIdeal {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_monomial(m);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// `I : J^infinity`.
    pub fn saturate(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(other);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Monomials of `I` in degree `d`, largest first in `order`.
    pub fn component(&self, d: u64, order: &TermOrder) -> Vec<Monomial> {
        monomials_of_degree_in(self.ring.weights(), d, order)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// Monomials of degree `d` outside `I`.
    pub fn standard_monomials(&self, d: u64) -> Vec<Monomial> {
        let order = TermOrder::default_for(&self.ring);
        monomials_of_degree_in(self.ring.weights(), d, &order)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// `dim_K I_d`, by enumeration.
    pub fn count_in_degree(&self, d: u64) -> usize {
        let order = TermOrder::default_for(&self.ring);
        monomials_of_degree_in(self.ring.weights(), d, &order)
            .iter()
            .filter(|m| self.contains(m))
            .count()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// True iff some power of every variable lies in the ideal.
    pub fn is_artinian(&self) -> bool {
        (0..self.ring.nvars()).all(|v| self.gens.iter().any(|g| g.exp(v) > 0 && g.support().all(|u| u == v)))
    }

    /// Same generators, viewed in another ring with the same number of variables.
    pub fn in_ring(&self, ring: &RingDescriptor) -> Result<MonomialIdeal> {
        MonomialIdeal::new(ring, self.gens.clone())
    }

    pub fn display_with<'a>(&'a self, order: &'a TermOrder) -> MonomialIdealDisplay<'a> {
        MonomialIdealDisplay { ideal: self, order }
    }
}

pub struct MonomialIdealDisplay<'a> {
    ideal: &'a MonomialIdeal,
    order: &'a TermOrder,
}

impl fmt::Display for MonomialIdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.ideal.ring.names();
        let parts: Vec<String> = self
            .ideal
            .sorted_generators(self.order)
            .iter()
            .map(|m| m.display_with(names).to_string())
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = TermOrder::default_for(&self.ring);
        write!(f, "{}", self.display_with(&order))
    }
}

/// Removes duplicates and non-minimal monomials; returns the antichain in
/// canonical order.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_exponent());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}
