//! Colon ideals, saturation, intersection, generic initial ideals and
//! weighted prime avoidance.

use num_bigint::BigInt;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::engine::{groebner_basis, Options};
use super::vector::{PotOrder, Vector};
use super::Ideal;
use crate::automorphism::{random_nonzero_coeff, AutomorphismMode, GradedAutomorphism};
use crate::error::{Error, Result};
use crate::monideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ring::RingDescriptor;

/// Runs Buchberger on a two-component module under position-over-term and
/// returns the second components of the elements with lead in component 1.
fn eliminate_first(
    ring: &RingDescriptor,
    shifts: [u64; 2],
    input: Vec<Vec<(Monomial, usize, BigInt)>>,
) -> Result<Ideal> {
    let order = PotOrder {
        mono: TermOrder::default_for(ring),
        shifts: shifts.to_vec(),
    };
    let vectors = input.into_iter().map(|t| Vector::from_triples(&order, t)).collect();
    let gb = groebner_basis(&order, vectors, &Options::default());
    let gens = gb
        .iter()
        .filter(|v| v.lead().unwrap().comp == 1)
        .map(|v| v.component_poly(ring.nvars(), 1))
        .collect();
    Ideal::new(ring, gens)
}

fn integer_triples(order: &TermOrder, p: &Polynomial, comp: usize) -> Vec<(Monomial, usize, BigInt)> {
    Vector::from_poly(order, p, 0)
        .terms
        .into_iter()
        .map(|t| (t.mon, comp, t.coeff))
        .collect()
}

impl Ideal {
    /// `I : f`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        if f.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let Some(df) = f.homogeneous_degree(&self.ring)? else {
            return Err(Error::ZeroDivisor);
        };
        if let (Some(m), true) = (self.as_monomial_ideal(), f.is_monomial()) {
            let u = f.monomials().next().unwrap();
            return Ok(Ideal::from_monomial_ideal(&m.colon_monomial(u)));
        }
        let o = TermOrder::default_for(&self.ring);
        // (f, 1) and (g, 0): elements with vanishing first entry give I : f
        let mut first = integer_triples(&o, f, 0);
        first.push((Monomial::one(self.ring.nvars()), 1, BigInt::one()));
        let mut input = vec![first];
        input.extend(self.gens.iter().map(|g| integer_triples(&o, g, 0)));
        eliminate_first(&self.ring, [0, df], input)
    }

    /// `I : J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        if other.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersection(&c)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// `I : f^infinity`.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(f)?;
            if next.same_ideal(&cur) {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `I : J^infinity`.
    pub fn saturate_ideal(&self, other: &Ideal) -> Result<Ideal> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_ideal(other)?;
            if next.same_ideal(&cur) {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `I ∩ J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        if let (Some(a), Some(b)) = (self.as_monomial_ideal(), other.as_monomial_ideal()) {
            return Ok(Ideal::from_monomial_ideal(&a.intersection(&b)));
        }
        let o = TermOrder::default_for(&self.ring);
        // (a, a) and (b, 0): second entries of elements with first entry 0 span I ∩ J
        let mut input = Vec::new();
        for a in &self.gens {
            let mut t = integer_triples(&o, a, 0);
            t.extend(integer_triples(&o, a, 1));
            input.push(t);
        }
        input.extend(other.gens.iter().map(|b| integer_triples(&o, b, 0)));
        eliminate_first(&self.ring, [0, 0], input)
    }
}

/// The common initial ideal of `phi(I)` for `trials` random automorphisms
/// drawn from `seed`. Disagreement between the trials is reported as a
/// genericity failure; agreement is evidence, not proof, of genericity.
pub fn gin(ideal: &Ideal, order: &TermOrder, seed: u64, trials: usize) -> Result<MonomialIdeal> {
    gin_with_automorphisms(ideal, order, seed, trials).map(|(g, _)| g)
}

/// Like [`gin`], also returning the automorphisms that were used.
pub fn gin_with_automorphisms(
    ideal: &Ideal,
    order: &TermOrder,
    seed: u64,
    trials: usize,
) -> Result<(MonomialIdeal, Vec<GradedAutomorphism>)> {
    if trials == 0 {
        return Err(Error::Precondition("at least one trial is required".into()));
    }
    let ring = ideal.ring();
    let target = crate::hilbert::hilbert_series(&ideal.initial_ideal(order));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut results: Vec<MonomialIdeal> = Vec::with_capacity(trials);
    let mut autos = Vec::with_capacity(trials);
    for _ in 0..trials {
        let phi = GradedAutomorphism::random_with(ring, AutomorphismMode::General, &mut rng);
        let image = ideal.apply(&phi)?;
        results.push(image.groebner_basis_with(order, Some(&target)).initial_ideal());
        autos.push(phi);
    }
    if results.iter().all(|r| r == &results[0]) {
        Ok((results.swap_remove(0), autos))
    } else {
        let shown: Vec<String> = results.iter().map(|r| r.display_with(order).to_string()).collect();
        Err(Error::GenericityFailure(format!(
            "trials disagree: {}",
            shown.join(" vs ")
        )))
    }
}

fn check_primes(ring: &RingDescriptor, primes: &[MonomialIdeal]) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::with_capacity(primes.len());
    for p in primes {
        if p.ring().nvars() != ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let mut vars = Vec::new();
        for g in p.generators() {
            if g.total_exponent() != 1 {
                return Err(Error::Precondition(format!(
                    "{} is not generated by variables",
                    p.display_with(&TermOrder::default_for(ring))
                )));
            }
            vars.push(g.support().next().unwrap());
        }
        if vars.len() == ring.nvars() {
            return Err(Error::NoAvoidingForm("a prime contains every variable".into()));
        }
        out.push(vars);
    }
    Ok(out)
}

fn outside(m: &Monomial, prime: &[usize]) -> bool {
    prime.iter().all(|&v| m.exp(v) == 0)
}

/// A form of degree `q = lcm(q_i)` lying in none of the given monomial
/// primes, with seeded random coefficients.
pub fn find_avoiding_form(ring: &RingDescriptor, primes: &[MonomialIdeal], seed: u64) -> Result<Polynomial> {
    let primes = check_primes(ring, primes)?;
    let q = ring.lcm_weight();
    let n = ring.nvars();
    if primes.is_empty() {
        let e = (q / ring.weight(0)) as u32;
        return Ok(Polynomial::monomial(Monomial::var(n, 0, e), One::one()));
    }
    let basis = monomials_of_degree(ring, q);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let f = Polynomial::from_terms(n, basis.iter().map(|m| (m.clone(), random_nonzero_coeff(&mut rng))));
        // f avoids a monomial prime iff some term survives setting its variables to 0
        if primes.iter().all(|p| f.monomials().any(|m| outside(m, p))) {
            return Ok(f);
        }
    }
}

/// The least positive degree carrying a form outside every given prime.
pub fn minimal_avoiding_degree(ring: &RingDescriptor, primes: &[MonomialIdeal]) -> Result<u64> {
    let primes = check_primes(ring, primes)?;
    let q = ring.lcm_weight();
    for d in 1..=q {
        let mons = monomials_of_degree(ring, d);
        if primes.iter().all(|p| mons.iter().any(|m| outside(m, p))) {
            return Ok(d);
        }
    }
    Err(Error::Internal("degree q always avoids proper monomial primes".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, v: usize) -> Polynomial {
        Polynomial::var(n, v)
    }

    #[test]
    fn colon_examples() {
        let r = RingDescriptor::from_weights(&[1, 2, 4]).unwrap();
        let i = Ideal::new(&r, vec![x(3, 0).pow(2)]).unwrap();
        let c = i.colon(&x(3, 0)).unwrap();
        assert!(c.same_ideal(&Ideal::new(&r, vec![x(3, 0)]).unwrap()));
        let one = Polynomial::one(3);
        assert!(i.colon(&one).unwrap().same_ideal(&i));
        assert_eq!(i.colon(&Polynomial::zero(3)), Err(Error::ZeroDivisor));
    }

    #[test]
    fn colon_non_monomial() {
        // (x(y + z), y^2) : (y + z) contains x
        let r = RingDescriptor::new(&[(1, 3)]).unwrap();
        let f = x(3, 0).mul(&x(3, 1).add(&x(3, 2)));
        let i = Ideal::new(&r, vec![f, x(3, 1).pow(2)]).unwrap();
        let c = i.colon(&x(3, 1).add(&x(3, 2))).unwrap();
        assert!(c.contains(&x(3, 0)));
        for g in c.generators() {
            assert!(i.contains(&g.mul(&x(3, 1).add(&x(3, 2)))));
        }
    }

    #[test]
    fn intersection_of_principal() {
        let r = RingDescriptor::new(&[(1, 2)]).unwrap();
        let a = Ideal::new(&r, vec![x(2, 0).add(&x(2, 1))]).unwrap();
        let b = Ideal::new(&r, vec![x(2, 0)]).unwrap();
        let c = a.intersection(&b).unwrap();
        let expected = Ideal::new(&r, vec![x(2, 0).mul(&x(2, 0).add(&x(2, 1)))]).unwrap();
        assert!(c.same_ideal(&expected));
    }

    #[test]
    fn gin_two_three() {
        let r = RingDescriptor::from_weights(&[2, 3]).unwrap();
        let o = TermOrder::wdegrevlex(&r);
        let i = Ideal::new(&r, vec![x(2, 0).pow(2)]).unwrap();
        assert_eq!(
            gin(&i, &o, 1, 3).unwrap(),
            MonomialIdeal::from_exponents(&r, &[&[2, 0]])
        );
        let i = Ideal::new(&r, vec![x(2, 1)]).unwrap();
        assert_eq!(
            gin(&i, &o, 1, 3).unwrap(),
            MonomialIdeal::from_exponents(&r, &[&[0, 1]])
        );
    }

    #[test]
    fn gin_of_xy_yz_x5() {
        let r = RingDescriptor::from_weights(&[2, 4, 5]).unwrap();
        let o = TermOrder::wdegrevlex(&r);
        let i = Ideal::new(&r, vec![x(3, 0).mul(&x(3, 1)), x(3, 1).mul(&x(3, 2)), x(3, 0).pow(5)]).unwrap();
        let expected = MonomialIdeal::from_exponents(&r, &[&[3, 0, 0], &[2, 0, 1], &[1, 2, 0], &[0, 3, 1]]);
        assert_eq!(gin(&i, &o, 7, 2).unwrap(), expected);
    }

    #[test]
    fn avoiding_forms() {
        let r = RingDescriptor::from_weights(&[2, 3]).unwrap();
        let px = MonomialIdeal::from_exponents(&r, &[&[1, 0]]);
        let py = MonomialIdeal::from_exponents(&r, &[&[0, 1]]);
        let f = find_avoiding_form(&r, &[px.clone(), py.clone()], 5).unwrap();
        assert_eq!(f.homogeneous_degree(&r).unwrap(), Some(6));
        assert_eq!(minimal_avoiding_degree(&r, &[px.clone(), py.clone()]), Ok(6));
        let none = find_avoiding_form(&r, &[], 0).unwrap();
        assert_eq!(none, x(2, 0).pow(3));
        let m = MonomialIdeal::maximal(&r);
        assert!(matches!(find_avoiding_form(&r, &[m], 0), Err(Error::NoAvoidingForm(_))));
    }
}
