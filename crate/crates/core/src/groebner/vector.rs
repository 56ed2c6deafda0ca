//! Sparse vectors of a graded free module with integer coefficients, kept
//! sorted by a module term order. Polynomials are the one-component case.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::{Coeff, Polynomial};

/// A monomial order on `F = sum_c R e_c`, given as an integer key per term.
///
/// The key must be injective, and additive in the monomial:
/// `key(m * u, c) = key(u, c) + shift_key(m)`.
pub trait ModuleOrder {
    fn key(&self, mon: &Monomial, comp: usize) -> Vec<i64>;
    fn shift_key(&self, m: &Monomial) -> Vec<i64>;
    /// Degree of the basis element `e_c`.
    fn comp_degree(&self, comp: usize) -> u64;
    fn weights(&self) -> &[u64];

    fn degree(&self, mon: &Monomial, comp: usize) -> u64 {
        mon.degree_with(self.weights()) + self.comp_degree(comp)
    }
}

impl ModuleOrder for TermOrder {
    fn key(&self, mon: &Monomial, _comp: usize) -> Vec<i64> {
        TermOrder::key(self, mon)
    }

    fn shift_key(&self, m: &Monomial) -> Vec<i64> {
        TermOrder::key(self, m)
    }

    fn comp_degree(&self, _comp: usize) -> u64 {
        0
    }

    fn weights(&self) -> &[u64] {
        TermOrder::weights(self)
    }
}

/// Position over term: a lower component index beats everything in higher
/// components, ties broken by a monomial order.
#[derive(Clone, Debug)]
pub struct PotOrder {
    pub mono: TermOrder,
    pub shifts: Vec<u64>,
}

impl ModuleOrder for PotOrder {
    fn key(&self, mon: &Monomial, comp: usize) -> Vec<i64> {
        let mut k = vec![-(comp as i64)];
        k.extend(self.mono.key(mon));
        k
    }

    fn shift_key(&self, m: &Monomial) -> Vec<i64> {
        let mut k = vec![0];
        k.extend(self.mono.key(m));
        k
    }

    fn comp_degree(&self, comp: usize) -> u64 {
        self.shifts[comp]
    }

    fn weights(&self) -> &[u64] {
        self.mono.weights()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub key: Vec<i64>,
    pub mon: Monomial,
    pub comp: usize,
    pub coeff: BigInt,
}

/// Terms sorted by strictly decreasing key; coefficients nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vector {
    pub terms: Vec<Term>,
}

fn add_keys(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Builds from unsorted `(monomial, component, coefficient)` triples,
    /// merging duplicates.
    pub fn from_triples<O: ModuleOrder + ?Sized>(order: &O, triples: Vec<(Monomial, usize, BigInt)>) -> Self {
        let mut terms: Vec<Term> = triples
            .into_iter()
            .filter(|t| !t.2.is_zero())
            .map(|(mon, comp, coeff)| Term {
                key: order.key(&mon, comp),
                mon,
                comp,
                coeff,
            })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.key == t.key => last.coeff += t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Vector { terms: out }
    }

    /// A polynomial as a vector in component `comp`, with denominators cleared.
    pub fn from_poly<O: ModuleOrder + ?Sized>(order: &O, p: &Polynomial, comp: usize) -> Self {
        let den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let triples = p
            .terms()
            .map(|(m, c)| (m.clone(), comp, c.numer() * (&den / c.denom())))
            .collect();
        let mut v = Vector::from_triples(order, triples);
        v.make_primitive();
        v
    }

    /// The entries of component `comp` as a polynomial.
    pub fn component_poly(&self, nvars: usize, comp: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| (t.mon.clone(), Coeff::from_integer(t.coeff.clone()))),
        )
    }

    pub fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|t| (t.mon.clone(), Coeff::from_integer(t.coeff.clone()))),
        )
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for t in &self.terms {
            g = g.gcd(&t.coeff);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the content and makes the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = self.content();
        if self.terms[0].coeff.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for t in &mut self.terms {
                t.coeff = &t.coeff / &g;
            }
        }
    }

    pub fn scale(&mut self, c: &BigInt) {
        if c.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.coeff *= c;
        }
    }

    pub fn divide_exact(&mut self, c: &BigInt) {
        if c.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.coeff = &t.coeff / c;
        }
    }

    /// `m * self`, keys shifted additively.
    pub fn mul_monomial<O: ModuleOrder + ?Sized>(&self, order: &O, m: &Monomial) -> Vector {
        let sk = order.shift_key(m);
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    key: add_keys(&t.key, &sk),
                    mon: t.mon.mul(m),
                    comp: t.comp,
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// `a * self - b * m * other`.
    pub fn combine<O: ModuleOrder + ?Sized>(
        &self,
        a: &BigInt,
        b: &BigInt,
        m: &Monomial,
        other: &Vector,
        order: &O,
    ) -> Vector {
        let sk = order.shift_key(m);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let mut shifted: Option<Vec<i64>> = None;
        while i < self.terms.len() || j < other.terms.len() {
            if j < other.terms.len() && shifted.is_none() {
                shifted = Some(add_keys(&other.terms[j].key, &sk));
            }
            let ord = match (i < self.terms.len(), j < other.terms.len()) {
                (true, true) => self.terms[i].key.cmp(shifted.as_ref().unwrap()),
                (true, false) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    let t = &self.terms[i];
                    out.push(Term {
                        key: t.key.clone(),
                        mon: t.mon.clone(),
                        comp: t.comp,
                        coeff: &t.coeff * a,
                    });
                    i += 1;
                }
                Ordering::Less => {
                    let t = &other.terms[j];
                    out.push(Term {
                        key: shifted.take().unwrap(),
                        mon: t.mon.mul(m),
                        comp: t.comp,
                        coeff: -(&t.coeff * b),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].coeff * a - &other.terms[j].coeff * b;
                    if !c.is_zero() {
                        let t = &self.terms[i];
                        out.push(Term {
                            key: t.key.clone(),
                            mon: t.mon.clone(),
                            comp: t.comp,
                            coeff: c,
                        });
                    }
                    shifted = None;
                    i += 1;
                    j += 1;
                }
            }
        }
        Vector { terms: out }
    }

    /// Largest coefficient size in bits, a cheap growth indicator.
    pub fn max_bits(&self) -> u64 {
        self.terms.iter().map(|t| t.coeff.bits()).max().unwrap_or(0)
    }
}

/// Scalars `(a, b)` with `a * c1 = b * c2` minimal, for cancelling `c1` against `c2`.
pub fn cancel_pair(c1: &BigInt, c2: &BigInt) -> (BigInt, BigInt) {
    let g = c1.gcd(c2);
    (c2 / &g, c1 / &g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    #[test]
    fn combine_cancels_leads() {
        let r = RingDescriptor::new(&[(1, 2)]).unwrap();
        let o = TermOrder::wdeglex(&r);
        let x = Monomial::new(vec![1, 0]);
        let f = Vector::from_triples(
            &o,
            vec![
                (Monomial::new(vec![2, 0]), 0, 3.into()),
                (Monomial::new(vec![0, 2]), 0, 1.into()),
            ],
        );
        let g = Vector::from_triples(
            &o,
            vec![
                (Monomial::new(vec![1, 0]), 0, 2.into()),
                (Monomial::new(vec![0, 1]), 0, 1.into()),
            ],
        );
        let (a, b) = cancel_pair(&f.terms[0].coeff, &g.terms[0].coeff);
        let h = f.combine(&a, &b, &x, &g, &o);
        // 2(3x^2 + y^2) - 3x(2x + y) = -3xy + 2y^2
        assert_eq!(h.len(), 2);
        assert_eq!(h.terms[0].mon, Monomial::new(vec![1, 1]));
        assert_eq!(h.terms[0].coeff, BigInt::from(-3));
        assert_eq!(h.terms[0].key, o.key(&Monomial::new(vec![1, 1])));
    }

    #[test]
    fn pot_prefers_low_components() {
        let r = RingDescriptor::new(&[(1, 2)]).unwrap();
        let o = PotOrder {
            mono: TermOrder::wdeglex(&r),
            shifts: vec![0, 3],
        };
        let a = o.key(&Monomial::one(2), 0);
        let b = o.key(&Monomial::new(vec![5, 5]), 1);
        assert!(a > b);
        assert_eq!(o.degree(&Monomial::new(vec![1, 0]), 1), 4);
    }
}
