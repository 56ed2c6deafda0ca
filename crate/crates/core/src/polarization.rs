//! Polarization of monomial ideals and complete polarization.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::automorphism::random_coeff;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::{hilbert_series, HilbertSeries};
use crate::monideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::TermOrder;
use crate::poly::{coeff_from_int, Polynomial};
use crate::ring::RingDescriptor;

/// Rounds of [`completely_polarize`] before giving up.
pub const MAX_ROUNDS: usize = 50;

/// A squarefree ideal in an extended ring, with the variable each new
/// variable specializes to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub ring: RingDescriptor,
    /// `origin[v]` is the original variable behind extended variable `v`.
    pub origin: Vec<usize>,
}

impl Polarization {
    /// The original ideal, by sending every copy to its origin.
    pub fn specialize(&self, ring: &RingDescriptor) -> MonomialIdeal {
        let gens = self
            .ideal
            .generators()
            .iter()
            .map(|m| {
                let mut e = vec![0u32; ring.nvars()];
                for v in m.support() {
                    e[self.origin[v]] += m.exp(v);
                }
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal::from_gens_unchecked(ring, crate::monideal::minimalize(gens))
    }
}

/// Replaces each `X^t` in a generator by `X X_1 ... X_{t-1}`, the copies
/// having the weight of `X` and sitting right after it in its group.
pub fn polarize(ideal: &MonomialIdeal) -> Polarization {
    let ring = ideal.ring();
    let n = ring.nvars();
    let copies: Vec<usize> = (0..n)
        .map(|v| {
            ideal
                .generators()
                .iter()
                .map(|m| m.exp(v) as usize)
                .max()
                .unwrap_or(0)
                .max(1)
        })
        .collect();
    let mut first = Vec::with_capacity(n);
    let mut origin = Vec::new();
    let mut names = Vec::new();
    for v in 0..n {
        first.push(origin.len());
        for k in 0..copies[v] {
            origin.push(v);
            names.push(if k == 0 {
                ring.name(v).to_string()
            } else {
                format!("{}_{k}", ring.name(v))
            });
        }
    }
    let groups: Vec<(u64, usize)> = ring
        .groups()
        .iter()
        .enumerate()
        .map(|(g, wg)| (wg.weight, ring.group_vars(g).map(|v| copies[v]).sum()))
        .collect();
    let ext = RingDescriptor::with_names(&groups, names).expect("same weights as the original ring");
    let gens = ideal
        .generators()
        .iter()
        .map(|m| {
            let mut e = vec![0u32; origin.len()];
            for v in m.support() {
                for k in 0..m.exp(v) as usize {
                    e[first[v] + k] = 1;
                }
            }
            Monomial::new(e)
        })
        .collect();
    Polarization {
        ideal: MonomialIdeal::from_gens_unchecked(&ext, gens),
        ring: ext,
        origin,
    }
}

/// One round: polarize, cut back to `R` by sending every extended variable
/// to a random form of its weight (a generic change of coordinates followed
/// by killing the new variables), then take the initial ideal.
fn round(
    ideal: &MonomialIdeal,
    order: &TermOrder,
    target: &HilbertSeries,
    rng: &mut ChaCha8Rng,
) -> Result<MonomialIdeal> {
    let ring = ideal.ring();
    let pol = polarize(ideal);
    let images: Vec<Polynomial> = pol
        .ring
        .weights()
        .iter()
        .map(|&w| {
            Polynomial::from_terms(
                ring.nvars(),
                monomials_of_degree(ring, w).into_iter().map(|m| (m, random_coeff(rng))),
            )
        })
        .collect();
    let gens = pol
        .ideal
        .generators()
        .iter()
        .map(|m| Polynomial::monomial(m.clone(), coeff_from_int(1)).substitute(&images))
        .collect();
    let cut = Ideal::new(ring, gens)?;
    let initial = cut.initial_ideal_with(order, target);
    if hilbert_series(&initial) != *target {
        return Err(Error::GenericityFailure(
            "cut by forms that are not a regular sequence".into(),
        ));
    }
    Ok(initial)
}

/// Iterates [`round`] to a fixed point `I^pol`, a strongly stable ideal with
/// the Hilbert function of `I`. Each round is repeated `trials` times with
/// fresh forms and must agree.
pub fn completely_polarize(
    ideal: &MonomialIdeal,
    order: &TermOrder,
    seed: u64,
    trials: usize,
) -> Result<MonomialIdeal> {
    let target = hilbert_series(ideal);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = ideal.clone();
    for _ in 0..MAX_ROUNDS {
        let next = round(&cur, order, &target, &mut rng)?;
        for _ in 1..trials {
            if round(&cur, order, &target, &mut rng)? != next {
                return Err(Error::GenericityFailure("random cuts disagree".into()));
            }
        }
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::NoConvergence(MAX_ROUNDS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::is_strongly_stable;

    #[test]
    fn polarize_square() {
        let r = RingDescriptor::from_weights(&[2, 3]).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[&[2, 0]]);
        let p = polarize(&i);
        assert_eq!(p.ring.weights(), &[2, 2, 3]);
        assert_eq!(p.ideal.generators(), &[Monomial::new(vec![1, 1, 0])]);
        assert_eq!(p.origin, vec![0, 0, 1]);
        assert_eq!(p.specialize(&r), i);
    }

    #[test]
    fn squarefree_is_fixed() {
        let r = RingDescriptor::from_weights(&[1, 2, 4]).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[&[1, 1, 0], &[0, 1, 1]]);
        let p = polarize(&i);
        assert_eq!(p.ring, r);
        assert_eq!(p.ideal, i);
    }

    #[test]
    fn weighted_example() {
        let r = RingDescriptor::from_weights(&[1, 2, 4]).unwrap();
        let i = MonomialIdeal::from_exponents(
            &r,
            &[
                &[8, 0, 0],
                &[6, 1, 0],
                &[4, 2, 0],
                &[2, 3, 0],
                &[0, 4, 0],
                &[2, 1, 1],
                &[6, 0, 1],
            ],
        );
        let pol = completely_polarize(&i, &TermOrder::lex(&r), 1, 2).unwrap();
        let expected = MonomialIdeal::from_exponents(
            &r,
            &[
                &[8, 0, 0],
                &[6, 1, 0],
                &[4, 2, 0],
                &[4, 0, 1],
                &[2, 3, 0],
                &[2, 2, 1],
                &[0, 4, 0],
            ],
        );
        assert_eq!(pol, expected);
        assert!(is_strongly_stable(&pol));
    }
}
