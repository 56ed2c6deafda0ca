//! Buchberger's algorithm for homogeneous submodules of graded free modules.
//!
//! Pairs are processed degree by degree (normal strategy), pruned with the
//! Gebauer–Möller criteria, and reduced fraction-free. An optional target
//! Hilbert series lets the computation skip degrees whose leading terms are
//! already complete and stop as soon as the basis is provably complete.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::vector::{cancel_pair, ModuleOrder, Vector};
use crate::hilbert::{hilbert_series, HilbertSeries};
use crate::monideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::RingDescriptor;

#[derive(Clone, Debug, Default)]
pub struct Options<'a> {
    /// Discard pairs and inputs above this degree (truncated basis).
    pub max_degree: Option<u64>,
    /// Hilbert series of `R/in(I)`, known in advance. One-component input only.
    pub target: Option<(&'a RingDescriptor, &'a HilbertSeries)>,
    /// Enables the product criterion; valid for one-component input.
    pub product_criterion: bool,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u64,
}

struct Lead {
    mon: Monomial,
    comp: usize,
    mask: u64,
}

fn support_mask(m: &Monomial) -> u64 {
    m.support().fold(0u64, |acc, v| acc | (1u64 << (v % 64)))
}

/// A basis under construction together with its lead data.
pub struct Basis {
    pub elements: Vec<Vector>,
    leads: Vec<Lead>,
}

impl Basis {
    pub fn new() -> Self {
        Basis {
            elements: Vec::new(),
            leads: Vec::new(),
        }
    }

    pub fn from_elements(elements: Vec<Vector>) -> Self {
        let mut b = Basis::new();
        for e in elements {
            b.push(e);
        }
        b
    }

    pub fn push(&mut self, v: Vector) {
        let t = v.lead().expect("basis elements are nonzero");
        self.leads.push(Lead {
            mon: t.mon.clone(),
            comp: t.comp,
            mask: support_mask(&t.mon),
        });
        self.elements.push(v);
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of the first element whose lead divides `mon * e_comp`.
    pub fn find_reducer(&self, mon: &Monomial, comp: usize, skip: Option<usize>) -> Option<usize> {
        let mask = support_mask(mon);
        self.leads
            .iter()
            .enumerate()
            .position(|(k, l)| Some(k) != skip && l.comp == comp && l.mask & !mask == 0 && l.mon.divides(mon))
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.leads.iter().map(|l| l.mon.clone()).collect()
    }
}

impl Default for Basis {
    fn default() -> Self {
        Self::new()
    }
}

/// Reduces `f` by `basis`. With `full`, every term is reduced, otherwise only
/// the lead. Returns the remainder and the scalar `lambda` such that the
/// remainder equals `lambda * f` modulo the submodule.
pub fn reduce<O: ModuleOrder + ?Sized>(
    order: &O,
    f: Vector,
    basis: &Basis,
    full: bool,
    skip: Option<usize>,
) -> (Vector, BigRational) {
    let mut p = f;
    let mut lambda = BigRational::one();
    let mut pos = 0;
    let mut steps = 0usize;
    while pos < p.terms.len() {
        let t = &p.terms[pos];
        match basis.find_reducer(&t.mon, t.comp, skip) {
            Some(k) => {
                let g = &basis.elements[k];
                let lead = g.lead().unwrap();
                let m = t.mon.div(&lead.mon);
                let (a, b) = cancel_pair(&t.coeff, &lead.coeff);
                p = p.combine(&a, &b, &m, g, order);
                lambda *= BigRational::from_integer(a);
                steps += 1;
                if steps % 8 == 0 {
                    let c = p.content();
                    if !c.is_zero() && !c.is_one() {
                        p.divide_exact(&c);
                        lambda /= BigRational::from_integer(c);
                    }
                }
            }
            None if full => pos += 1,
            None => break,
        }
    }
    (p, lambda)
}

/// Gröbner basis of the submodule generated by `input`. Elements are
/// primitive; the result is not interreduced.
pub fn groebner_basis<O: ModuleOrder + ?Sized>(order: &O, input: Vec<Vector>, opts: &Options) -> Vec<Vector> {
    let mut inputs: Vec<(u64, Vector)> = input
        .into_iter()
        .filter(|v| !v.is_zero())
        .map(|mut v| {
            v.make_primitive();
            let t = v.lead().unwrap();
            (order.degree(&t.mon, t.comp), v)
        })
        .collect();
    inputs.sort_by_key(|(d, _)| *d);
    let mut inputs = inputs.into_iter().peekable();

    let mut basis = Basis::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut lead_hs: Option<HilbertSeries> = None;

    loop {
        let next_pair = pairs.iter().map(|p| p.degree).min();
        let next_input = inputs.peek().map(|(d, _)| *d);
        let d = match (next_pair, next_input) {
            (None, None) => break,
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
        };
        if opts.max_degree.is_some_and(|m| d > m) {
            break;
        }
        let (todo_pairs, rest): (Vec<Pair>, Vec<Pair>) = pairs.into_iter().partition(|p| p.degree == d);
        pairs = rest;
        let mut todo: Vec<Vector> = Vec::new();
        while inputs.peek().is_some_and(|(e, _)| *e == d) {
            todo.push(inputs.next().unwrap().1);
        }
        if let Some((ring, target)) = opts.target {
            let hs = lead_hs.get_or_insert_with(|| lead_series(ring, &basis));
            if hs.coefficient(d) == target.coefficient(d) {
                continue;
            }
        }
        let mut todo_pairs = todo_pairs;
        todo_pairs.sort_by_key(|p| (p.j, p.i));
        for p in &todo_pairs {
            todo.push(s_vector(order, &basis, p));
        }
        let mut added = false;
        for f in todo {
            let (mut h, _) = reduce(order, f, &basis, true, None);
            if h.is_zero() {
                continue;
            }
            h.make_primitive();
            update(&mut pairs, &basis, &h, order, opts.product_criterion);
            basis.push(h);
            added = true;
        }
        if added {
            lead_hs = None;
        }
        if let Some((ring, target)) = opts.target {
            let hs = lead_hs.get_or_insert_with(|| lead_series(ring, &basis));
            if hs == target {
                break;
            }
        }
    }
    basis.elements
}

fn lead_series(ring: &RingDescriptor, basis: &Basis) -> HilbertSeries {
    let ideal = MonomialIdeal::new(ring, basis.lead_monomials()).expect("leads live in the ring");
    hilbert_series(&ideal)
}

fn s_vector<O: ModuleOrder + ?Sized>(order: &O, basis: &Basis, p: &Pair) -> Vector {
    let gi = &basis.elements[p.i];
    let gj = &basis.elements[p.j];
    let li = gi.lead().unwrap();
    let lj = gj.lead().unwrap();
    let mi = p.lcm.div(&li.mon);
    let mj = p.lcm.div(&lj.mon);
    let (a, b) = cancel_pair(&li.coeff, &lj.coeff);
    gi.mul_monomial(order, &mi).combine(&a, &b, &mj, gj, order)
}

/// Gebauer–Möller update for a new element `h` about to become index `basis.len()`.
fn update<O: ModuleOrder + ?Sized>(pairs: &mut Vec<Pair>, basis: &Basis, h: &Vector, order: &O, product: bool) {
    let hl = h.lead().unwrap();
    let hm = &hl.mon;
    let new = basis.len();

    let candidates: Vec<(usize, Monomial, bool)> = basis
        .leads
        .iter()
        .enumerate()
        .filter(|(_, l)| l.comp == hl.comp)
        .map(|(k, l)| (k, l.mon.lcm(hm), product && l.mon.is_coprime(hm)))
        .collect();

    // keep (h, g) unless another lcm(h, g') strictly divides lcm(h, g); among
    // equal lcms keep the first, and keep coprime pairs for the chain test
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (idx, (k, lcm, coprime)) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(idx2, (_, other, _))| idx2 != idx && other.divides(lcm) && (other != lcm || idx2 < idx));
        if *coprime || !dominated {
            kept.push((*k, lcm.clone(), *coprime));
        }
    }
    // a coprime pair among equal lcms makes the whole class redundant
    let coprime_lcms: Vec<Monomial> = kept.iter().filter(|c| c.2).map(|c| c.1.clone()).collect();
    let fresh: Vec<Pair> = kept
        .into_iter()
        .filter(|(_, lcm, coprime)| !coprime && !coprime_lcms.contains(lcm))
        .map(|(k, lcm, _)| Pair {
            i: k,
            j: new,
            degree: order.degree(&lcm, hl.comp),
            lcm,
        })
        .collect();

    pairs.retain(|p| {
        if basis.leads[p.i].comp != hl.comp || !hm.divides(&p.lcm) {
            return true;
        }
        let li = &basis.leads[p.i].mon;
        let lj = &basis.leads[p.j].mon;
        li.lcm(hm) == p.lcm || lj.lcm(hm) == p.lcm
    });
    pairs.extend(fresh);
}

/// Removes elements with non-minimal leads and reduces all tails. The result
/// is sorted by decreasing lead.
pub fn interreduce<O: ModuleOrder + ?Sized>(order: &O, elements: Vec<Vector>) -> Vec<Vector> {
    let mut elems: Vec<Vector> = elements.into_iter().filter(|v| !v.is_zero()).collect();
    elems.sort_by(|a, b| a.lead().unwrap().key.cmp(&b.lead().unwrap().key));
    let mut minimal: Vec<Vector> = Vec::new();
    for e in elems {
        let t = e.lead().unwrap();
        let redundant = minimal.iter().any(|m| {
            let l = m.lead().unwrap();
            l.comp == t.comp && l.mon.divides(&t.mon)
        });
        if !redundant {
            minimal.push(e);
        }
    }
    let basis = Basis::from_elements(minimal.clone());
    let mut out: Vec<Vector> = minimal
        .into_iter()
        .enumerate()
        .map(|(k, e)| {
            let (mut r, _) = reduce(order, e, &basis, true, Some(k));
            r.make_primitive();
            r
        })
        .collect();
    out.sort_by(|a, b| b.lead().unwrap().key.cmp(&a.lead().unwrap().key));
    out
}

/// Scales a primitive integer vector to leading coefficient one.
pub fn monic_scale(v: &Vector) -> BigRational {
    match v.lead() {
        Some(t) => BigRational::new(BigInt::one(), t.coeff.clone()),
        None => BigRational::one(),
    }
}
