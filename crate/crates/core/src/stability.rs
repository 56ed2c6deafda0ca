//! Strong stability of monomial ideals and fixedness under the group `T`.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::automorphism::{lighter_monomials, random_nonzero_coeff, AutomorphismMode, Elementary, GradedAutomorphism};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::ring::RingDescriptor;

/// One of the moves in the definition of strong stability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exchange {
    /// `X_from -> X_to`, `X_to` an earlier variable of the same group.
    Within { from: usize, to: usize },
    /// `X_var -> v`, `v` a monomial of the same weight in lighter groups.
    Lighter { var: usize, replacement: Monomial },
}

/// A generator, an exchange applied to it, and the resulting monomial that
/// is missing from the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub generator: Monomial,
    pub exchange: Exchange,
    pub missing: Monomial,
}

impl Violation {
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> ViolationDisplay<'a> {
        ViolationDisplay { v: self, names }
    }
}

pub struct ViolationDisplay<'a> {
    v: &'a Violation,
    names: &'a [String],
}

impl fmt::Display for ViolationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exchange = match &self.v.exchange {
            Exchange::Within { from, to } => format!("{}->{}", self.names[*from], self.names[*to]),
            Exchange::Lighter { var, replacement } => {
                format!("{}->{}", self.names[*var], replacement.display_with(self.names))
            }
        };
        write!(
            f,
            "{} under {} gives {}, not in the ideal",
            self.v.generator.display_with(self.names),
            exchange,
            self.v.missing.display_with(self.names)
        )
    }
}

/// The first violated exchange among the minimal generators, if any.
/// Closure of the generators suffices: a multiple `wu` of a generator `u`
/// either maps to a multiple of the image of `u` or keeps `u` as a divisor.
pub fn stability_violation(ideal: &MonomialIdeal) -> Option<Violation> {
    let ring = ideal.ring();
    let lighter: Vec<Vec<Monomial>> = (0..ring.num_groups()).map(|g| lighter_monomials(ring, g)).collect();
    for u in ideal.generators() {
        for v in u.support() {
            let g = ring.group_of(v);
            let base = u.div(&Monomial::var(ring.nvars(), v, 1));
            for to in ring.group_vars(g).take_while(|&t| t < v) {
                let image = base.mul_var(to, 1);
                if !ideal.contains(&image) {
                    return Some(Violation {
                        generator: u.clone(),
                        exchange: Exchange::Within { from: v, to },
                        missing: image,
                    });
                }
            }
            for s in &lighter[g] {
                let image = base.mul(s);
                if !ideal.contains(&image) {
                    return Some(Violation {
                        generator: u.clone(),
                        exchange: Exchange::Lighter {
                            var: v,
                            replacement: s.clone(),
                        },
                        missing: image,
                    });
                }
            }
        }
    }
    None
}

pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    stability_violation(ideal).is_none()
}

/// Every elementary generator of `T` with seeded random nonzero scalars:
/// one diagonal move per variable, one triangular move per ordered pair of
/// variables in a group, one nonlinear move per variable and lighter monomial.
pub fn elementary_sweep(ring: &RingDescriptor, seed: u64) -> Vec<Elementary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for v in 0..ring.nvars() {
        let g = ring.group_of(v);
        out.push(Elementary::Diagonal {
            var: v,
            scalar: random_nonzero_coeff(&mut rng),
        });
        for source in ring.group_vars(g).take_while(|&s| s < v) {
            out.push(Elementary::Triangular {
                var: v,
                source,
                scalar: random_nonzero_coeff(&mut rng),
            });
        }
        for m in lighter_monomials(ring, g) {
            out.push(Elementary::NonLinear {
                var: v,
                monomial: m,
                scalar: random_nonzero_coeff(&mut rng),
            });
        }
    }
    out
}

/// Randomized test of `phi(I) = I` for `phi` in `T`: every elementary
/// generator (with random scalars) and `trials` random elements of `T` are
/// applied. Since `phi` preserves Hilbert functions, `phi(I) ⊆ I` suffices.
/// A `false` answer is always correct; `true` is probabilistic.
pub fn is_t_fixed(ideal: &Ideal, trials: usize, seed: u64) -> bool {
    let ring = ideal.ring();
    let gb = ideal.groebner_basis(&TermOrder::default_for(ring));
    let maps_into = |phi: &GradedAutomorphism| {
        phi.apply_all(ideal.generators())
            .map(|images| images.iter().all(|f| gb.contains(f)))
            .unwrap_or(false)
    };
    for e in elementary_sweep(ring, seed) {
        let phi = e.to_automorphism(ring).expect("elementary moves are automorphisms");
        if !maps_into(&phi) {
            return false;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    (0..trials).all(|_| {
        let phi = GradedAutomorphism::random_with(ring, AutomorphismMode::UpperTriangular, &mut rng);
        maps_into(&phi)
    })
}

/// Weights `(n+1, ..., 2n)` for monomials in `n` variables. Then `2 q_1 > q_n`,
/// so no variable has a lighter monomial of its own weight and every monomial
/// ideal is strongly stable.
pub fn weights_making_stable(monomials: &[Monomial]) -> Result<RingDescriptor> {
    let n = monomials
        .first()
        .map(Monomial::nvars)
        .ok_or_else(|| Error::Precondition("no monomials given".into()))?;
    if let Some(m) = monomials.iter().find(|m| m.nvars() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            got: m.nvars(),
        });
    }
    let weights: Vec<u64> = (n as u64 + 1..=2 * n as u64).collect();
    RingDescriptor::from_weights(&weights)
}

/// Depth of `R/I` for a strongly stable `I` in a ring with `q_i | q_{i+1}`:
/// the number of variables after the last variable (in flat order) that
/// divides a minimal generator.
pub fn stable_depth(ideal: &MonomialIdeal) -> Result<usize> {
    let ring = ideal.ring();
    if !ring.has_divisibility_chain() {
        return Err(Error::Precondition("weights must divide each other in order".into()));
    }
    if ideal.is_unit() {
        return Err(Error::Precondition("the unit ideal has no depth".into()));
    }
    if let Some(v) = stability_violation(ideal) {
        return Err(Error::Precondition(format!(
            "ideal is not strongly stable: {}",
            v.display_with(ring.names())
        )));
    }
    let last = ideal.generators().iter().filter_map(|g| g.support().max()).max();
    Ok(match last {
        None => ring.nvars(),
        Some(v) => ring.nvars() - 1 - v,
    })
}
