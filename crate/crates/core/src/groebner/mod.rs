//! Homogeneous ideals, Gröbner bases, initial and generic initial ideals.

pub mod engine;
mod ops;
pub mod vector;

use std::fmt;

use num_rational::BigRational;

use crate::automorphism::GradedAutomorphism;
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_series, Convention, HilbertSeries};
use crate::monideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ring::RingDescriptor;

use engine::{groebner_basis, interreduce, Basis, Options};
use vector::Vector;

pub use ops::{find_avoiding_form, gin, gin_with_automorphisms, minimal_avoiding_degree};

/// A homogeneous ideal given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: RingDescriptor,
    gens: Vec<Polynomial>,
}

impl Ideal {
    /// Checks that every generator lives in `ring` and is homogeneous; zero
    /// generators are dropped.
    pub fn new(ring: &RingDescriptor, gens: Vec<Polynomial>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.nvars() != ring.nvars() {
                return Err(Error::LengthMismatch {
                    expected: ring.nvars(),
                    got: g.nvars(),
                });
            }
            if g.is_zero() {
                continue;
            }
            g.homogeneous_degree(ring)?;
            out.push(g);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
        })
    }

    pub fn from_monomial_ideal(ideal: &MonomialIdeal) -> Self {
        let one = BigRational::from_integer(1.into());
        Ideal {
            ring: ideal.ring().clone(),
            gens: ideal
                .generators()
                .iter()
                .map(|m| Polynomial::monomial(m.clone(), one.clone()))
                .collect(),
        }
    }

    pub fn zero(ring: &RingDescriptor) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &RingDescriptor) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring.nvars())],
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The monomial ideal with the same generators, if all are monomials.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if self.gens.iter().all(Polynomial::is_monomial) {
            let gens = self
                .gens
                .iter()
                .map(|g| g.monomials().next().unwrap().clone())
                .collect();
            Some(MonomialIdeal::from_gens_unchecked(&self.ring, gens))
        } else {
            None
        }
    }

    pub fn groebner_basis(&self, order: &TermOrder) -> GroebnerBasis {
        self.groebner_basis_with(order, None)
    }

    /// Gröbner basis driven by a known Hilbert series of `R/I`.
    pub fn groebner_basis_with(&self, order: &TermOrder, target: Option<&HilbertSeries>) -> GroebnerBasis {
        let input = self.gens.iter().map(|g| Vector::from_poly(order, g, 0)).collect();
        let opts = Options {
            max_degree: None,
            target: target.map(|t| (&self.ring, t)),
            product_criterion: true,
        };
        let raw = groebner_basis(order, input, &opts);
        GroebnerBasis::from_vectors(&self.ring, order, interreduce(order, raw))
    }

    pub fn initial_ideal(&self, order: &TermOrder) -> MonomialIdeal {
        if let Some(m) = self.as_monomial_ideal() {
            return m;
        }
        self.groebner_basis(order).initial_ideal()
    }

    /// Initial ideal computed with the Hilbert series of `R/I` known in advance.
    pub fn initial_ideal_with(&self, order: &TermOrder, target: &HilbertSeries) -> MonomialIdeal {
        if let Some(m) = self.as_monomial_ideal() {
            return m;
        }
        self.groebner_basis_with(order, Some(target)).initial_ideal()
    }

    /// Hilbert series of `R/I`, through the initial ideal in the default order.
    pub fn hilbert_series(&self) -> HilbertSeries {
        hilbert_series(&self.initial_ideal(&TermOrder::default_for(&self.ring)))
    }

    pub fn hilbert_function(&self, d: u64, convention: Convention) -> i64 {
        let init = self.initial_ideal(&TermOrder::default_for(&self.ring));
        crate::hilbert::hilbert_function(&init, d, convention)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner_basis(&TermOrder::default_for(&self.ring)).contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let gb = self.groebner_basis(&TermOrder::default_for(&self.ring));
        other.gens.iter().all(|g| gb.contains(g))
    }

    /// Equality as ideals, by comparing reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        let o = TermOrder::default_for(&self.ring);
        self.ring == other.ring && self.groebner_basis(&o).elements == other.groebner_basis(&o).elements
    }

    pub fn apply(&self, phi: &GradedAutomorphism) -> Result<Ideal> {
        if phi.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ideal::new(&self.ring, phi.apply_all(&self.gens)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn display_with<'a>(&'a self, order: &'a TermOrder) -> IdealDisplay<'a> {
        IdealDisplay { ideal: self, order }
    }
}

pub struct IdealDisplay<'a> {
    ideal: &'a Ideal,
    order: &'a TermOrder,
}

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.ideal.ring.names();
        let parts: Vec<String> = self
            .ideal
            .gens
            .iter()
            .map(|g| g.display_with(names, self.order).to_string())
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A reduced Gröbner basis: monic elements sorted by decreasing lead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingDescriptor,
    order: TermOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    fn from_vectors(ring: &RingDescriptor, order: &TermOrder, vs: Vec<Vector>) -> Self {
        let elements = vs.iter().map(|v| v.to_poly(ring.nvars()).monic(order)).collect();
        GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            elements,
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(&self.order).unwrap().clone())
            .collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_gens_unchecked(&self.ring, self.leading_monomials())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// True iff every S-polynomial reduces to zero.
    pub fn is_groebner_basis(&self) -> bool {
        let o = &self.order;
        for (i, f) in self.elements.iter().enumerate() {
            for g in &self.elements[i + 1..] {
                let (mf, cf) = f.leading_term(o).unwrap();
                let (mg, cg) = g.leading_term(o).unwrap();
                let l = mf.lcm(mg);
                let s = f
                    .mul_monomial(&l.div(mf), &cf.recip())
                    .sub(&g.mul_monomial(&l.div(mg), &cg.recip()));
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Same basis as an ideal.
    pub fn to_ideal(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            gens: self.elements.clone(),
        }
    }
}

/// Remainder of `f` on division by `divisors`: no term of the result is
/// divisible by a leading monomial of a divisor, and `f - result` lies in
/// the ideal they generate.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &TermOrder) -> Polynomial {
    if f.is_zero() {
        return f.clone();
    }
    let fv = Vector::from_poly(order, f, 0);
    let scale = f.leading_term(order).unwrap().1 / BigRational::from_integer(fv.lead().unwrap().coeff.clone());
    let basis = Basis::from_elements(
        divisors
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| Vector::from_poly(order, g, 0))
            .collect(),
    );
    let (r, lambda) = engine::reduce(order, fv, &basis, true, None);
    r.to_poly(f.nvars()).scale(&(scale / lambda))
}

/// The reduced Gröbner basis of `ideal`.
pub fn buchberger(ideal: &Ideal, order: &TermOrder) -> GroebnerBasis {
    ideal.groebner_basis(order)
}

/// The ideal of leading monomials of `ideal`.
pub fn initial_ideal(ideal: &Ideal, order: &TermOrder) -> MonomialIdeal {
    ideal.initial_ideal(order)
}
