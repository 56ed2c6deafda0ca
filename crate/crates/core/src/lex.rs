//! Lexsegments, shadows, lexicographic ideals and lexifiability.
//!
//! Lex orders are given as a [`TermOrder`]; only its variable priority
//! matters, since inside one degree every lex-type order agrees.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::{gap_bound, hilbert_series};
use crate::monideal::MonomialIdeal;
use crate::monomial::{count_monomials_by_degree, monomials_of_degree_in, Monomial};
use crate::order::{OrderKind, TermOrder};
use crate::ring::RingDescriptor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LexifyOutcome {
    /// The lexicographic ideal with the Hilbert function of the input.
    Lexifiable(MonomialIdeal),
    /// In degree `degree` the candidate built from lower degrees already
    /// needs the top `candidate` monomials, more than `hilbert = H_I(degree)`.
    NotLexifiable {
        degree: u64,
        hilbert: usize,
        candidate: usize,
    },
    /// No verdict up to `max_degree`.
    Inconclusive { max_degree: u64 },
}

impl LexifyOutcome {
    pub fn is_lexifiable(&self) -> bool {
        matches!(self, LexifyOutcome::Lexifiable(_))
    }
}

fn common_degree(ring: &RingDescriptor, a: &[Monomial]) -> Result<Option<u64>> {
    let mut degrees = a.iter().map(|m| m.degree_with(ring.weights()));
    let Some(d) = degrees.next() else {
        return Ok(None);
    };
    if degrees.any(|e| e != d) {
        return Err(Error::MixedDegrees);
    }
    Ok(Some(d))
}

/// The `k` largest monomials of degree `d`.
pub fn lex_segment(ring: &RingDescriptor, d: u64, k: usize, order: &TermOrder) -> Result<Vec<Monomial>> {
    let mut all = monomials_of_degree_in(ring.weights(), d, order);
    if k > all.len() {
        return Err(Error::SegmentTooLarge {
            degree: d,
            k,
            available: all.len(),
        });
    }
    all.truncate(k);
    Ok(all)
}

/// True iff `a` is closed upwards in its degree.
pub fn is_lexsegment(ring: &RingDescriptor, a: &[Monomial], order: &TermOrder) -> Result<bool> {
    let Some(d) = common_degree(ring, a)? else {
        return Ok(true);
    };
    let set: BTreeSet<&Monomial> = a.iter().collect();
    let all = monomials_of_degree_in(ring.weights(), d, order);
    Ok(all.iter().take(set.len()).all(|m| set.contains(m)))
}

/// `Shad_i(A) = { u m : u in A, m in R_i }`, largest first in `order`.
pub fn shadow(ring: &RingDescriptor, a: &[Monomial], i: u64, order: &TermOrder) -> Result<Vec<Monomial>> {
    common_degree(ring, a)?;
    let multipliers = monomials_of_degree_in(ring.weights(), i, order);
    let mut out: Vec<Monomial> = a
        .iter()
        .flat_map(|u| multipliers.iter().map(move |m| u.mul(m)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    out.sort_by(|x, y| order.compare(y, x));
    Ok(out)
}

/// The first degree `i <= d + q + G*(w)` whose component is not a
/// lexsegment, `d` the largest generator degree. `None` means that `I` is
/// lexicographic.
pub fn first_non_lex_degree(ideal: &MonomialIdeal, order: &TermOrder) -> Option<u64> {
    let ring = ideal.ring();
    let bound = ideal.max_generator_degree() + ring.lcm_weight() + gap_bound(ring);
    (0..=bound).find(|&i| {
        let all = monomials_of_degree_in(ring.weights(), i, order);
        let inside: Vec<bool> = all.iter().map(|m| ideal.contains(m)).collect();
        inside.iter().skip_while(|b| **b).any(|b| *b)
    })
}

pub fn is_lexicographic_ideal(ideal: &MonomialIdeal, order: &TermOrder) -> bool {
    first_non_lex_degree(ideal, order).is_none()
}

/// `4 (d + q + G*(w))`, `d` the largest generator degree.
pub fn default_lexify_bound(ideal: &MonomialIdeal) -> u64 {
    let ring = ideal.ring();
    4 * (ideal.max_generator_degree() + ring.lcm_weight() + gap_bound(ring))
}

/// Builds the candidate `L = sum_d <LEX(I_d)>` degree by degree. Fails as
/// soon as the ideal generated by the lower components needs more than
/// `H_I(d)` top monomials in degree `d`. Succeeds once the candidate has had
/// no new generator for `q + G*(w)` degrees and its Hilbert series equals
/// that of `I`; then all its components are lexsegments.
pub fn lexify(ideal: &MonomialIdeal, order: &TermOrder, max_degree: Option<u64>) -> LexifyOutcome {
    let ring = ideal.ring();
    let weights = ring.weights();
    let window = ring.lcm_weight() + gap_bound(ring);
    let max_degree = max_degree.unwrap_or_else(|| default_lexify_bound(ideal));
    let target = hilbert_series(ideal);
    let quotient = target.expand(max_degree);
    let total = count_monomials_by_degree(weights, max_degree);
    let mut gens: Vec<Monomial> = Vec::new();
    let mut last_new = 0u64;
    let mut checked = false;
    for d in 0..=max_degree {
        let k = (total[d as usize] - quotient[d as usize]) as usize;
        let all = monomials_of_degree_in(weights, d, order);
        let covered: Vec<bool> = all.iter().map(|m| gens.iter().any(|g| g.divides(m))).collect();
        let required = covered.iter().rposition(|b| *b).map_or(0, |p| p + 1);
        if required > k {
            return LexifyOutcome::NotLexifiable {
                degree: d,
                hilbert: k,
                candidate: required,
            };
        }
        for (m, c) in all.into_iter().zip(&covered).take(k) {
            if !c {
                gens.push(m);
                last_new = d;
                checked = false;
            }
        }
        if !checked && d >= last_new + window {
            checked = true;
            let candidate = MonomialIdeal::from_gens_unchecked(ring, gens.clone());
            if hilbert_series(&candidate) == target {
                return LexifyOutcome::Lexifiable(candidate);
            }
        }
    }
    LexifyOutcome::Inconclusive { max_degree }
}

/// Lexifies the initial ideal, which has the same Hilbert function.
pub fn lexify_ideal(ideal: &Ideal, order: &TermOrder, max_degree: Option<u64>) -> LexifyOutcome {
    let initial = ideal.initial_ideal(&TermOrder::wdegrevlex(ideal.ring()));
    lexify(&initial, order, max_degree)
}

/// [`lexify`] under every priority permutation of the variables.
pub fn lexify_all_orders(ideal: &MonomialIdeal, max_degree: Option<u64>) -> Vec<(TermOrder, LexifyOutcome)> {
    let ring = ideal.ring();
    (0..ring.nvars())
        .permutations(ring.nvars())
        .map(|p| {
            let order = TermOrder::with_priority(OrderKind::Lex, ring, p).expect("a permutation");
            let outcome = lexify(ideal, &order, max_degree);
            (order, outcome)
        })
        .collect()
}

fn two_var_weights(ring: &RingDescriptor) -> Result<(u64, u64)> {
    if ring.nvars() != 2 {
        return Err(Error::Precondition("two variables required".into()));
    }
    let (q1, q2) = (ring.weight(0), ring.weight(1));
    if q1.gcd(&q2) != 1 {
        return Err(Error::Precondition("weights must be coprime".into()));
    }
    Ok((q1, q2))
}

/// The least `delta = d + beta q_2` divisible by `q_1`, as `(delta, beta)`.
/// When `q_1 | d` this is `(d, 0)`.
pub fn delta(d: u64, ring: &RingDescriptor) -> Result<(u64, u64)> {
    let (q1, q2) = two_var_weights(ring)?;
    let beta = (0..q1)
        .find(|b| (d + b * q2) % q1 == 0)
        .ok_or_else(|| Error::Internal("no beta below q_1".into()))?;
    Ok((d + beta * q2, beta))
}

/// Criterion for monomial ideals of `K[X, Y]` with coprime weights whose
/// components in the generator degrees `d_1 < ... < d_r` are lexsegments:
/// lexicographic iff `q_1 | d_1`, or some later `d_s` has `q_1 | d_s` and
/// `d_s <= delta_i` for every `i` with `q_1 ∤ d_i`.
pub fn two_var_lex_test(ideal: &MonomialIdeal) -> Result<bool> {
    let ring = ideal.ring();
    let (q1, _) = two_var_weights(ring)?;
    let order = TermOrder::lex(ring);
    let degrees: Vec<u64> = ideal
        .generator_degrees()
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    for &d in &degrees {
        if !is_lexsegment(ring, &ideal.component(d, &order), &order)? {
            return Err(Error::Precondition(format!(
                "component in degree {d} is not a lexsegment"
            )));
        }
    }
    let Some(&d1) = degrees.first() else {
        return Ok(true);
    };
    if d1 % q1 == 0 {
        return Ok(true);
    }
    let mut min_delta = u64::MAX;
    for &d in degrees.iter().filter(|&&d| d % q1 != 0) {
        min_delta = min_delta.min(delta(d, ring)?.0);
    }
    Ok(degrees[1..].iter().any(|&d| d % q1 == 0 && d <= min_delta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn segments_and_shadows() {
        let r = RingDescriptor::from_weights(&[2, 7]).unwrap();
        let o = TermOrder::lex(&r);
        assert_eq!(lex_segment(&r, 28, 2, &o).unwrap(), vec![mono(&[14, 0]), mono(&[7, 2])]);
        assert!(lex_segment(&r, 28, 4, &o).is_err());
        let r = RingDescriptor::from_weights(&[2, 3]).unwrap();
        let o = TermOrder::lex(&r);
        assert_eq!(lex_segment(&r, 5, 1, &o).unwrap(), vec![mono(&[1, 1])]);
        assert!(is_lexsegment(&r, &[mono(&[1, 1])], &o).unwrap());
        let s = shadow(&r, &[mono(&[1, 1])], 3, &o).unwrap();
        assert_eq!(s, vec![mono(&[1, 2])]);
        assert!(!is_lexsegment(&r, &s, &o).unwrap());
        assert!(is_lexsegment(&r, &[], &o).unwrap());
        assert_eq!(
            is_lexsegment(&r, &[mono(&[1, 0]), mono(&[0, 1])], &o),
            Err(Error::MixedDegrees)
        );
    }

    #[test]
    fn lexicographic_examples() {
        let r = RingDescriptor::new(&[(2, 2), (3, 1)]).unwrap();
        let o = TermOrder::lex(&r);
        let i = MonomialIdeal::from_exponents(&r, &[&[3, 0, 0], &[2, 1, 0]]);
        assert!(is_lexicographic_ideal(&i, &o));
        let i = MonomialIdeal::from_exponents(&r, &[&[3, 0, 0], &[2, 1, 0], &[1, 2, 0]]);
        assert!(!is_lexicographic_ideal(&i, &o));
        let i = MonomialIdeal::from_exponents(&r, &[&[3, 0, 0], &[2, 1, 0], &[1, 2, 0], &[2, 0, 2]]);
        assert!(is_lexicographic_ideal(&i, &o));
    }

    #[test]
    fn lexify_two_seven() {
        let r = RingDescriptor::from_weights(&[2, 7]).unwrap();
        let o = TermOrder::lex(&r);
        let ideal = |g: &[&[u32]]| MonomialIdeal::from_exponents(&r, g);
        let l1 = ideal(&[&[14, 0], &[7, 3]]);
        assert!(is_lexicographic_ideal(&l1, &o));
        assert_eq!(
            lexify(&ideal(&[&[7, 2], &[0, 5]]), &o, None),
            LexifyOutcome::Lexifiable(l1.clone())
        );
        assert_eq!(
            lexify(&ideal(&[&[14, 0], &[0, 5]]), &o, None),
            LexifyOutcome::Lexifiable(ideal(&[&[14, 0], &[7, 3], &[0, 7]]))
        );
        let witness = |g: &[&[u32]]| match lexify(&ideal(g), &o, None) {
            LexifyOutcome::NotLexifiable { degree, .. } => degree,
            other => panic!("{other:?}"),
        };
        assert_eq!(witness(&[&[7, 2], &[14, 1]]), 42);
        assert_eq!(witness(&[&[0, 4], &[7, 3]]), 42);
        assert_eq!(witness(&[&[0, 4], &[14, 1]]), 56);
    }

    #[test]
    fn lexify_both_orders_fail() {
        let r = RingDescriptor::from_weights(&[2, 3]).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[&[3, 3], &[2, 4]]);
        let outcomes = lexify_all_orders(&i, None);
        assert_eq!(outcomes.len(), 2);
        for (_, o) in outcomes {
            assert_eq!(
                o,
                LexifyOutcome::NotLexifiable {
                    degree: 18,
                    hilbert: 1,
                    candidate: 2
                }
            );
        }
        // (Y) depends on the order
        let y = MonomialIdeal::from_exponents(&r, &[&[0, 1]]);
        let outcomes = lexify_all_orders(&y, None);
        assert!(!outcomes[0].1.is_lexifiable());
        assert_eq!(outcomes[1].1, LexifyOutcome::Lexifiable(y));
    }

    #[test]
    fn lexify_weighted_three_variables() {
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
        let l = MonomialIdeal::from_exponents(
            &r,
            &[
                &[8, 0, 0],
                &[6, 1, 0],
                &[4, 2, 0],
                &[4, 0, 1],
                &[2, 3, 0],
                &[2, 1, 1],
                &[2, 0, 2],
                &[0, 6, 0],
            ],
        );
        assert_eq!(lexify(&i, &TermOrder::lex(&r), None), LexifyOutcome::Lexifiable(l));
    }

    #[test]
    fn delta_values() {
        let r = RingDescriptor::from_weights(&[2, 3]).unwrap();
        assert_eq!(delta(5, &r).unwrap(), (8, 1));
        assert_eq!(delta(6, &r).unwrap(), (6, 0));
        let r = RingDescriptor::from_weights(&[2, 7]).unwrap();
        assert_eq!(delta(35, &r).unwrap(), (42, 1));
        let r = RingDescriptor::from_weights(&[2, 4]).unwrap();
        assert!(delta(5, &r).is_err());
    }

    #[test]
    fn two_variable_criterion() {
        let r = RingDescriptor::from_weights(&[2, 7]).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[&[14, 0], &[7, 3]]);
        assert!(two_var_lex_test(&i).unwrap());
        let r = RingDescriptor::from_weights(&[2, 3]).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[&[1, 1]]);
        assert!(!two_var_lex_test(&i).unwrap());
        assert!(!is_lexicographic_ideal(&i, &TermOrder::lex(&r)));
        let i = MonomialIdeal::from_exponents(&r, &[&[4, 0]]);
        assert!(two_var_lex_test(&i).unwrap());
        // (XY, X^4): 8 <= delta(5) = 8
        let i = MonomialIdeal::from_exponents(&r, &[&[1, 1], &[4, 0]]);
        assert!(two_var_lex_test(&i).unwrap());
        assert!(is_lexicographic_ideal(&i, &TermOrder::lex(&r)));
    }
}
