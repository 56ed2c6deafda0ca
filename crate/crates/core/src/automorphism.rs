//! Graded automorphisms of a weighted polynomial ring.
//!
//! Every graded automorphism has the normal form
//! `X_ij -> sum_h A_i[j][h] X_ih + psi_ij`, where `A_i` is invertible and
//! `psi_ij` is homogeneous of degree `q_i` in the lighter groups `1..i-1`.
//!
//! `A_i[j][h]` is the coefficient of `X_ih` in the image of `X_ij`. The
//! subgroup `T` consists of automorphisms with `A_i[j][h] = 0` for `h > j`:
//! each variable is sent to a combination of itself and earlier (larger)
//! variables of its group, which is the direction of the exchanges in the
//! definition of strong stability.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree_in, Monomial};
use crate::order::TermOrder;
use crate::poly::{Coeff, Polynomial};
use crate::ring::RingDescriptor;

/// Entries of random matrices and nonlinear parts are drawn from
/// `[-RANDOM_BOUND, RANDOM_BOUND]`.
pub const RANDOM_BOUND: i64 = 1_000_000;

type Matrix = Vec<Vec<Coeff>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutomorphismMode {
    /// Arbitrary invertible `A_i`.
    General,
    /// `A_i` lower triangular in the `A_i[j][h]` indexing, i.e. an element of `T`.
    UpperTriangular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAutomorphism {
    ring: RingDescriptor,
    linear: Vec<Matrix>,
    nonlinear: Vec<Polynomial>,
}

/// The generators of `T`: diagonal scalings, elementary triangular moves and
/// elementary nonlinear moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elementary {
    /// `X_v -> c X_v`.
    Diagonal { var: usize, scalar: Coeff },
    /// `X_v -> X_v + c X_source`, `source` an earlier variable of the same group.
    Triangular { var: usize, source: usize, scalar: Coeff },
    /// `X_v -> X_v + c m`, `m` a monomial of degree `q_i` in lighter groups.
    NonLinear {
        var: usize,
        monomial: Monomial,
        scalar: Coeff,
    },
}

impl Elementary {
    pub fn var(&self) -> usize {
        match self {
            Elementary::Diagonal { var, .. }
            | Elementary::Triangular { var, .. }
            | Elementary::NonLinear { var, .. } => *var,
        }
    }

    pub fn to_automorphism(&self, ring: &RingDescriptor) -> Result<GradedAutomorphism> {
        let n = ring.nvars();
        let mut images: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(n, v)).collect();
        match self {
            Elementary::Diagonal { var, scalar } => {
                images[*var] = Polynomial::var(n, *var).scale(scalar);
            }
            Elementary::Triangular { var, source, scalar } => {
                images[*var] = images[*var].add(&Polynomial::var(n, *source).scale(scalar));
            }
            Elementary::NonLinear { var, monomial, scalar } => {
                images[*var] = images[*var].add(&Polynomial::monomial(monomial.clone(), scalar.clone()));
            }
        }
        GradedAutomorphism::from_images(ring, images)
    }
}

impl GradedAutomorphism {
    pub fn identity(ring: &RingDescriptor) -> Self {
        let linear = ring.groups().iter().map(|g| identity_matrix(g.count)).collect();
        GradedAutomorphism {
            ring: ring.clone(),
            linear,
            nonlinear: vec![Polynomial::zero(ring.nvars()); ring.nvars()],
        }
    }

    /// Builds and validates an automorphism from its normal form data.
    pub fn new(ring: &RingDescriptor, linear: Vec<Matrix>, nonlinear: Vec<Polynomial>) -> Result<Self> {
        if linear.len() != ring.num_groups() || nonlinear.len() != ring.nvars() {
            return Err(Error::InvalidAutomorphism("shape does not match the ring".into()));
        }
        for (g, a) in linear.iter().enumerate() {
            let l = ring.groups()[g].count;
            if a.len() != l || a.iter().any(|row| row.len() != l) {
                return Err(Error::InvalidAutomorphism(format!("A_{} is not {l}x{l}", g + 1)));
            }
            if determinant(a).is_zero() {
                return Err(Error::InvalidAutomorphism(format!("A_{} is singular", g + 1)));
            }
        }
        for (v, psi) in nonlinear.iter().enumerate() {
            if psi.nvars() != ring.nvars() {
                return Err(Error::RingMismatch);
            }
            let g = ring.group_of(v);
            let q = ring.groups()[g].weight;
            let first_own = ring.var_index(g, 0);
            for m in psi.monomials() {
                if m.degree_with(ring.weights()) != q {
                    return Err(Error::InvalidAutomorphism(format!(
                        "nonlinear part of {} is not homogeneous of degree {q}",
                        ring.name(v)
                    )));
                }
                if m.support().any(|u| u >= first_own) {
                    return Err(Error::InvalidAutomorphism(format!(
                        "nonlinear part of {} involves non-lighter variables",
                        ring.name(v)
                    )));
                }
            }
        }
        Ok(GradedAutomorphism {
            ring: ring.clone(),
            linear,
            nonlinear,
        })
    }

    /// Recovers the normal form from the images of the variables.
    pub fn from_images(ring: &RingDescriptor, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != ring.nvars() {
            return Err(Error::InvalidAutomorphism("one image per variable required".into()));
        }
        let n = ring.nvars();
        let mut linear: Vec<Matrix> = ring
            .groups()
            .iter()
            .map(|g| vec![vec![Coeff::zero(); g.count]; g.count])
            .collect();
        let mut nonlinear = Vec::with_capacity(n);
        for (v, img) in images.iter().enumerate() {
            if img.nvars() != n {
                return Err(Error::RingMismatch);
            }
            let g = ring.group_of(v);
            let j = ring.index_in_group(v);
            let mut psi = Polynomial::zero(n);
            for (m, c) in img.terms() {
                let own = ring.group_vars(g);
                if m.total_exponent() == 1 && own.contains(&m.support().next().unwrap_or(usize::MAX)) {
                    let h = ring.index_in_group(m.support().next().unwrap());
                    linear[g][j][h] = c.clone();
                } else {
                    psi.add_term(m.clone(), c.clone());
                }
            }
            nonlinear.push(psi);
        }
        GradedAutomorphism::new(ring, linear, nonlinear)
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn linear_part(&self, group: usize) -> &[Vec<Coeff>] {
        &self.linear[group]
    }

    pub fn nonlinear_part(&self, var: usize) -> &Polynomial {
        &self.nonlinear[var]
    }

    /// `phi(X_v)`.
    pub fn image(&self, v: usize) -> Polynomial {
        let n = self.ring.nvars();
        let g = self.ring.group_of(v);
        let j = self.ring.index_in_group(v);
        let mut img = self.nonlinear[v].clone();
        for (h, c) in self.linear[g][j].iter().enumerate() {
            img.add_term(Monomial::var(n, self.ring.var_index(g, h), 1), c.clone());
        }
        img
    }

    pub fn images(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars()).map(|v| self.image(v)).collect()
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        Ok(f.substitute(&self.images()))
    }

    /// Applies the automorphism to several polynomials sharing one image table.
    pub fn apply_all(&self, fs: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let images = self.images();
        fs.iter()
            .map(|f| {
                if f.nvars() != self.ring.nvars() {
                    Err(Error::RingMismatch)
                } else {
                    Ok(f.substitute(&images))
                }
            })
            .collect()
    }

    /// `self o other`, i.e. `f -> self(other(f))`.
    pub fn compose(&self, other: &GradedAutomorphism) -> Result<GradedAutomorphism> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mine = self.images();
        let images = other.images().iter().map(|p| p.substitute(&mine)).collect();
        GradedAutomorphism::from_images(&self.ring, images)
    }

    pub fn inverse(&self) -> GradedAutomorphism {
        let n = self.ring.nvars();
        let mut inv_images: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(n, v)).collect();
        for g in 0..self.ring.num_groups() {
            let vars: Vec<usize> = self.ring.group_vars(g).collect();
            let a_inv = invert(&self.linear[g]).expect("validated automorphisms have invertible blocks");
            // X_g - psi_g evaluated at the inverse images of the lighter groups
            let shifted: Vec<Polynomial> = vars
                .iter()
                .map(|&v| Polynomial::var(n, v).sub(&self.nonlinear[v].substitute(&inv_images)))
                .collect();
            for (j, &v) in vars.iter().enumerate() {
                let mut img = Polynomial::zero(n);
                for (h, s) in shifted.iter().enumerate() {
                    img = img.add(&s.scale(&a_inv[j][h]));
                }
                inv_images[v] = img;
            }
        }
        GradedAutomorphism::from_images(&self.ring, inv_images).expect("inverse of an automorphism")
    }

    pub fn is_identity(&self) -> bool {
        *self == GradedAutomorphism::identity(&self.ring)
    }

    /// Membership in `T`.
    pub fn is_upper_triangular(&self) -> bool {
        self.linear.iter().all(|a| {
            a.iter()
                .enumerate()
                .all(|(j, row)| row.iter().skip(j + 1).all(Zero::is_zero))
        })
    }

    /// A seeded random automorphism. Matrix entries are integers from
    /// `[-RANDOM_BOUND, RANDOM_BOUND]`, resampled until invertible; the
    /// nonlinear parts get independent random coefficients on every monomial
    /// of degree `q_i` in the lighter groups.
    pub fn random(ring: &RingDescriptor, mode: AutomorphismMode, seed: u64) -> GradedAutomorphism {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(ring, mode, &mut rng)
    }

    pub fn random_with<R: Rng>(ring: &RingDescriptor, mode: AutomorphismMode, rng: &mut R) -> GradedAutomorphism {
        let n = ring.nvars();
        let mut linear = Vec::with_capacity(ring.num_groups());
        for g in ring.groups() {
            loop {
                let a: Matrix = (0..g.count)
                    .map(|j| {
                        (0..g.count)
                            .map(|h| {
                                if mode == AutomorphismMode::UpperTriangular && h > j {
                                    Coeff::zero()
                                } else {
                                    random_coeff(rng)
                                }
                            })
                            .collect()
                    })
                    .collect();
                if !determinant(&a).is_zero() {
                    linear.push(a);
                    break;
                }
            }
        }
        let mut nonlinear = Vec::with_capacity(n);
        for v in 0..n {
            let g = ring.group_of(v);
            let basis = lighter_monomials(ring, g);
            let psi = Polynomial::from_terms(n, basis.into_iter().map(|m| (m, random_coeff(rng))));
            nonlinear.push(psi);
        }
        GradedAutomorphism::new(ring, linear, nonlinear).expect("random data is valid")
    }

    /// Factors an element of `T` into diagonal, triangular and nonlinear
    /// elementary automorphisms whose composition, in the returned order,
    /// equals `self`. Trivial factors (scalar 1 or 0) are omitted.
    ///
    /// Works from the last variable backwards: `phi = eta_1 o ... o eta_s o
    /// tau_1 o ... o tau_k o delta o phi'` where `phi'` agrees with `phi` except
    /// that it fixes the current variable.
    pub fn decompose(&self) -> Result<Vec<Elementary>> {
        if !self.is_upper_triangular() {
            return Err(Error::NotInT);
        }
        let mut out = Vec::new();
        for v in (0..self.ring.nvars()).rev() {
            let g = self.ring.group_of(v);
            let j = self.ring.index_in_group(v);
            let row = &self.linear[g][j];
            let diag = row[j].clone();
            for (m, c) in self.nonlinear[v].terms() {
                out.push(Elementary::NonLinear {
                    var: v,
                    monomial: m.clone(),
                    scalar: c / &diag,
                });
            }
            for (h, a) in row.iter().enumerate().take(j) {
                if !a.is_zero() {
                    out.push(Elementary::Triangular {
                        var: v,
                        source: self.ring.var_index(g, h),
                        scalar: a / &diag,
                    });
                }
            }
            if !diag.is_one() {
                out.push(Elementary::Diagonal { var: v, scalar: diag });
            }
        }
        Ok(out)
    }

    /// Composes a sequence of elementary automorphisms, first element outermost.
    pub fn compose_sequence(ring: &RingDescriptor, seq: &[Elementary]) -> Result<GradedAutomorphism> {
        let mut acc = GradedAutomorphism::identity(ring);
        for e in seq {
            acc = acc.compose(&e.to_automorphism(ring)?)?;
        }
        Ok(acc)
    }
}

/// Monomials of degree `q_g` in the groups lighter than `g`.
pub fn lighter_monomials(ring: &RingDescriptor, g: usize) -> Vec<Monomial> {
    if g == 0 {
        return Vec::new();
    }
    let q = ring.groups()[g].weight;
    let first_own = ring.var_index(g, 0);
    let prefix_weights = &ring.weights()[..first_own];
    let order = TermOrder::default_for(&ring.prefix(g - 1));
    let n = ring.nvars();
    monomials_of_degree_in(prefix_weights, q, &order)
        .into_iter()
        .map(|m| {
            let mut e = m.exponents().to_vec();
            e.resize(n, 0);
            Monomial::new(e)
        })
        .collect()
}

pub(crate) fn random_coeff<R: Rng>(rng: &mut R) -> Coeff {
    Coeff::from_integer(BigInt::from(rng.gen_range(-RANDOM_BOUND..=RANDOM_BOUND)))
}

pub(crate) fn random_nonzero_coeff<R: Rng>(rng: &mut R) -> Coeff {
    loop {
        let c = random_coeff(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

fn identity_matrix(l: usize) -> Matrix {
    (0..l)
        .map(|j| {
            (0..l)
                .map(|h| if h == j { Coeff::one() } else { Coeff::zero() })
                .collect()
        })
        .collect()
}

pub(crate) fn determinant(a: &Matrix) -> Coeff {
    let n = a.len();
    let mut m = a.clone();
    let mut det = Coeff::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Coeff::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m: Vec<Vec<Coeff>> = a
        .iter()
        .zip(identity_matrix(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot, col);
        let p = m[col][col].recip();
        for c in 0..2 * n {
            m[col][c] = &m[col][c] * &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in 0..2 * n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}
