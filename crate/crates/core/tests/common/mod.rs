#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use wgr_core::monomial::monomials_of_degree;
use wgr_core::poly::coeff_from_int;
use wgr_core::stability::stability_violation;
use wgr_core::{Ideal, Monomial, MonomialIdeal, Polynomial, RingDescriptor};

/// A ring from an arbitrary list of weights, grouped as the library expects.
pub fn ring_of(weights: &[u64]) -> RingDescriptor {
    let mut w = weights.to_vec();
    w.sort_unstable();
    let mut groups: Vec<(u64, usize)> = Vec::new();
    for x in w {
        match groups.last_mut() {
            Some((g, n)) if *g == x => *n += 1,
            _ => groups.push((x, 1)),
        }
    }
    RingDescriptor::new(&groups).unwrap()
}

pub fn random_ring(rng: &mut ChaCha8Rng, max_vars: usize, max_weight: u64) -> RingDescriptor {
    let n = rng.gen_range(1..=max_vars);
    let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=max_weight)).collect();
    ring_of(&weights)
}

pub fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, max_exp: u32) -> Monomial {
    loop {
        let e: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
        let m = Monomial::new(e);
        if !m.is_one() {
            return m;
        }
    }
}

/// A proper nonzero monomial ideal with up to `max_gens` generators.
pub fn random_monomial_ideal(
    rng: &mut ChaCha8Rng,
    ring: &RingDescriptor,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k).map(|_| random_monomial(rng, ring.nvars(), max_exp)).collect();
    MonomialIdeal::new(ring, gens).unwrap()
}

/// The smallest strongly stable ideal containing `ideal`.
pub fn stable_closure(ideal: &MonomialIdeal) -> MonomialIdeal {
    let mut cur = ideal.clone();
    while let Some(v) = stability_violation(&cur) {
        cur = cur.add_generator(v.missing);
    }
    cur
}

/// A random homogeneous polynomial of degree `d` with small integer
/// coefficients and at most `terms` terms; `None` if `R_d = 0`.
pub fn random_form(rng: &mut ChaCha8Rng, ring: &RingDescriptor, d: u64, terms: usize) -> Option<Polynomial> {
    let mut mons = monomials_of_degree(ring, d);
    if mons.is_empty() {
        return None;
    }
    mons.shuffle(rng);
    let t = rng.gen_range(1..=terms.min(mons.len()));
    Some(Polynomial::from_terms(
        ring.nvars(),
        mons.into_iter().take(t).map(|m| {
            let c = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
            (m, coeff_from_int(c))
        }),
    ))
}

/// A random homogeneous ideal with `1..=max_gens` generators of degree at
/// most `max_degree`.
pub fn random_homogeneous_ideal(
    rng: &mut ChaCha8Rng,
    ring: &RingDescriptor,
    max_gens: usize,
    max_degree: u64,
    terms: usize,
) -> Ideal {
    let k = rng.gen_range(1..=max_gens);
    let mut gens = Vec::new();
    while gens.len() < k {
        let d = rng.gen_range(1..=max_degree);
        if let Some(f) = random_form(rng, ring, d, terms) {
            gens.push(f);
        }
    }
    Ideal::new(ring, gens).unwrap()
}

/// `dim_K (R/I)_d` by listing monomials.
pub fn quotient_count(ideal: &MonomialIdeal, d: u64) -> i64 {
    monomials_of_degree(ideal.ring(), d)
        .iter()
        .filter(|m| !ideal.contains(m))
        .count() as i64
}
