//! Term orders on monomials of a weighted ring.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::RingDescriptor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Weighted degree first, ties broken lexicographically.
    WDegLex,
    /// Weighted degree first, ties broken by reverse lex: the last differing
    /// variable in priority order decides and the smaller exponent wins.
    WDegRevLex,
    /// Pure lexicographic, ignoring degree.
    Lex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::WDegLex => "wdeglex",
            OrderKind::WDegRevLex => "wdegrevlex",
            OrderKind::Lex => "lex",
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wdeglex" | "deglex" => Ok(OrderKind::WDegLex),
            "wdegrevlex" | "degrevlex" | "revlex" => Ok(OrderKind::WDegRevLex),
            "lex" => Ok(OrderKind::Lex),
            other => Err(Error::Precondition(format!("unknown term order `{other}`"))),
        }
    }
}

/// A term order: a kind plus a variable priority, `priority[0]` being the
/// largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    priority: Vec<usize>,
    weights: Vec<u64>,
}

impl TermOrder {
    /// Order of the given kind with the flat priority `X_11 > X_12 > ... > X_{n l_n}`.
    pub fn new(kind: OrderKind, ring: &RingDescriptor) -> Self {
        TermOrder {
            kind,
            priority: (0..ring.nvars()).collect(),
            weights: ring.weights().to_vec(),
        }
    }

    /// Order with an explicit priority permutation.
    pub fn with_priority(kind: OrderKind, ring: &RingDescriptor, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ring.nvars()];
        if priority.len() != ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: ring.nvars(),
                got: priority.len(),
            });
        }
        for &v in &priority {
            if v >= seen.len() || seen[v] {
                return Err(Error::Precondition("priority is not a permutation".into()));
            }
            seen[v] = true;
        }
        Ok(TermOrder {
            kind,
            priority,
            weights: ring.weights().to_vec(),
        })
    }

    /// The default order: weighted degree lex with the flat priority.
    pub fn default_for(ring: &RingDescriptor) -> Self {
        TermOrder::new(OrderKind::WDegLex, ring)
    }

    pub fn wdeglex(ring: &RingDescriptor) -> Self {
        TermOrder::new(OrderKind::WDegLex, ring)
    }

    pub fn wdegrevlex(ring: &RingDescriptor) -> Self {
        TermOrder::new(OrderKind::WDegRevLex, ring)
    }

    pub fn lex(ring: &RingDescriptor) -> Self {
        TermOrder::new(OrderKind::Lex, ring)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn is_degree_compatible(&self) -> bool {
        self.kind != OrderKind::Lex
    }

    /// Same priority, different kind.
    pub fn with_kind(&self, kind: OrderKind) -> Self {
        TermOrder {
            kind,
            priority: self.priority.clone(),
            weights: self.weights.clone(),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let ea = a.exponents();
        let eb = b.exponents();
        match self.kind {
            OrderKind::Lex => self.lex_cmp(ea, eb),
            OrderKind::WDegLex => a
                .degree_with(&self.weights)
                .cmp(&b.degree_with(&self.weights))
                .then_with(|| self.lex_cmp(ea, eb)),
            OrderKind::WDegRevLex => a
                .degree_with(&self.weights)
                .cmp(&b.degree_with(&self.weights))
                .then_with(|| {
                    for &v in self.priority.iter().rev() {
                        match ea[v].cmp(&eb[v]) {
                            Ordering::Equal => continue,
                            o => return o.reverse(),
                        }
                    }
                    Ordering::Equal
                }),
        }
    }

    fn lex_cmp(&self, ea: &[u32], eb: &[u32]) -> Ordering {
        for &v in &self.priority {
            match ea[v].cmp(&eb[v]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// An integer vector whose lexicographic order agrees with this term
    /// order. The map is additive: `key(m*n) = key(m) + key(n)`.
    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        let e = m.exponents();
        let mut out = Vec::with_capacity(e.len() + 1);
        match self.kind {
            OrderKind::Lex => out.extend(self.priority.iter().map(|&v| e[v] as i64)),
            OrderKind::WDegLex => {
                out.push(m.degree_with(&self.weights) as i64);
                out.extend(self.priority.iter().map(|&v| e[v] as i64));
            }
            OrderKind::WDegRevLex => {
                out.push(m.degree_with(&self.weights) as i64);
                out.extend(self.priority.iter().rev().map(|&v| -(e[v] as i64)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_of_degree;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn examples() {
        let r = RingDescriptor::from_weights(&[2, 3]).unwrap();
        let lex = TermOrder::wdeglex(&r);
        assert_eq!(lex.compare(&m(&[4, 0]), &m(&[1, 2])), Ordering::Greater);
        assert_eq!(lex.compare(&m(&[1, 2]), &m(&[1, 2])), Ordering::Equal);
        let rev = TermOrder::wdegrevlex(&r);
        assert_eq!(rev.compare(&m(&[3, 0]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn revlex_against_definition_on_degree_six() {
        // brute force over every degree-6 pair: last differing exponent, smaller wins
        let r = RingDescriptor::from_weights(&[2, 3]).unwrap();
        let rev = TermOrder::wdegrevlex(&r);
        let mons = monomials_of_degree(&r, 6);
        for a in &mons {
            for b in &mons {
                let mut expected = Ordering::Equal;
                for v in (0..2).rev() {
                    if a.exp(v) != b.exp(v) {
                        expected = b.exp(v).cmp(&a.exp(v));
                        break;
                    }
                }
                assert_eq!(rev.compare(a, b), expected);
            }
        }
    }

    #[test]
    fn keys_agree_with_compare() {
        let r = RingDescriptor::new(&[(1, 2), (3, 1)]).unwrap();
        for kind in [OrderKind::WDegLex, OrderKind::WDegRevLex, OrderKind::Lex] {
            let o = TermOrder::with_priority(kind, &r, vec![2, 0, 1]).unwrap();
            let mut mons = Vec::new();
            for d in 0..8 {
                mons.extend(monomials_of_degree(&r, d));
            }
            for a in &mons {
                for b in &mons {
                    assert_eq!(o.compare(a, b), o.key(a).cmp(&o.key(b)));
                }
            }
        }
    }

    #[test]
    fn reversed_priority() {
        let r = RingDescriptor::from_weights(&[2, 3]).unwrap();
        let o = TermOrder::with_priority(OrderKind::Lex, &r, vec![1, 0]).unwrap();
        assert_eq!(o.compare(&m(&[0, 1]), &m(&[5, 0])), Ordering::Greater);
        assert!(TermOrder::with_priority(OrderKind::Lex, &r, vec![0, 0]).is_err());
    }
}
