//! Weighted polynomial rings `K[X_1, ..., X_n]` where the variables of group
//! `i` all carry the positive weight `q_i`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// One block of variables sharing a weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightGroup {
    pub weight: u64,
    pub count: usize,
}

/// The ring `(R, w)`: weight groups with strictly increasing weights, plus
/// the flattened per-variable data derived from them.
///
/// Variables are stored in flat order `X_11, X_12, ..., X_{n l_n}`; lighter
/// groups come first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    groups: Vec<WeightGroup>,
    weights: Vec<u64>,
    group_of: Vec<usize>,
    index_in_group: Vec<usize>,
    names: Vec<String>,
}

impl RingDescriptor {
    /// Builds a ring from `(weight, count)` pairs with default variable names.
    pub fn new(groups: &[(u64, usize)]) -> Result<Self> {
        let names = default_names(groups);
        Self::with_names(groups, names)
    }

    /// Convenience constructor: one variable per listed weight, e.g. `(2,4,5)`.
    pub fn from_weights(weights: &[u64]) -> Result<Self> {
        let groups: Vec<(u64, usize)> = weights.iter().map(|&w| (w, 1)).collect();
        Self::new(&groups)
    }

    /// Builds a ring with user supplied names, one per variable in flat order.
    pub fn with_names(groups: &[(u64, usize)], names: Vec<String>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (k, &(w, c)) in groups.iter().enumerate() {
            if w == 0 {
                return Err(Error::InvalidRing("weights must be positive".into()));
            }
            if c == 0 {
                return Err(Error::InvalidRing(format!("group {} has no variables", k + 1)));
            }
            if k > 0 && groups[k - 1].0 >= w {
                return Err(Error::InvalidRing("group weights must be strictly increasing".into()));
            }
        }
        let mut weights = Vec::new();
        let mut group_of = Vec::new();
        let mut index_in_group = Vec::new();
        for (g, &(w, c)) in groups.iter().enumerate() {
            for j in 0..c {
                weights.push(w);
                group_of.push(g);
                index_in_group.push(j);
            }
        }
        if names.len() != weights.len() {
            return Err(Error::InvalidRing(format!(
                "expected {} variable names, got {}",
                weights.len(),
                names.len()
            )));
        }
        Ok(RingDescriptor {
            groups: groups
                .iter()
                .map(|&(weight, count)| WeightGroup { weight, count })
                .collect(),
            weights,
            group_of,
            index_in_group,
            names,
        })
    }

    pub fn groups(&self) -> &[WeightGroup] {
        &self.groups
    }

    /// Number of weight groups `n`.
    pub fn num_groups(&self) -> usize {
        self.groups.len()
    }

    /// Total number of variables `l`.
    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Flat weight vector `w`.
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, var: usize) -> u64 {
        self.weights[var]
    }

    pub fn group_of(&self, var: usize) -> usize {
        self.group_of[var]
    }

    pub fn index_in_group(&self, var: usize) -> usize {
        self.index_in_group[var]
    }

    /// Flat index of the variable `X_{group, index}` (both zero based).
    pub fn var_index(&self, group: usize, index: usize) -> usize {
        self.groups[..group].iter().map(|g| g.count).sum::<usize>() + index
    }

    /// Flat indices of the variables of one group.
    pub fn group_vars(&self, group: usize) -> std::ops::Range<usize> {
        let start = self.var_index(group, 0);
        start..start + self.groups[group].count
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    /// `q = lcm(q_1, ..., q_n)`.
    pub fn lcm_weight(&self) -> u64 {
        self.groups.iter().fold(1u64, |acc, g| acc.lcm(&g.weight))
    }

    pub fn gcd_weight(&self) -> u64 {
        self.groups.iter().fold(0u64, |acc, g| acc.gcd(&g.weight))
    }

    /// True iff `q_i | q_{i+1}` for every consecutive pair of groups.
    pub fn has_divisibility_chain(&self) -> bool {
        self.groups.windows(2).all(|p| p[1].weight % p[0].weight == 0)
    }

    /// `sum_j l_j (q_j - 1)`, the correction term of the weighted regularity
    /// formula.
    pub fn regularity_shift(&self) -> i64 {
        self.groups.iter().map(|g| g.count as i64 * (g.weight as i64 - 1)).sum()
    }

    /// The same ring with all weights divided by their gcd.
    pub fn normalize(&self) -> RingDescriptor {
        let g = self.gcd_weight();
        let groups: Vec<(u64, usize)> = self.groups.iter().map(|x| (x.weight / g, x.count)).collect();
        RingDescriptor::with_names(&groups, self.names.clone()).expect("dividing by gcd keeps weights valid")
    }

    /// The prefix subring `R_[i]` on groups `0..=last_group`.
    pub fn prefix(&self, last_group: usize) -> RingDescriptor {
        let groups: Vec<(u64, usize)> = self.groups[..=last_group].iter().map(|g| (g.weight, g.count)).collect();
        let l: usize = groups.iter().map(|g| g.1).sum();
        RingDescriptor::with_names(&groups, self.names[..l].to_vec()).expect("prefix of a valid ring")
    }

    /// The ring with the same weights and different names.
    pub fn renamed(&self, names: Vec<String>) -> Result<RingDescriptor> {
        let groups: Vec<(u64, usize)> = self.groups.iter().map(|g| (g.weight, g.count)).collect();
        RingDescriptor::with_names(&groups, names)
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .names
            .iter()
            .zip(&self.weights)
            .map(|(n, w)| format!("{n}:{w}"))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

fn default_names(groups: &[(u64, usize)]) -> Vec<String> {
    let l: usize = groups.iter().map(|g| g.1).sum();
    if l <= 4 && groups.iter().all(|g| g.1 == 1) {
        return ["X", "Y", "Z", "T"][..l].iter().map(|s| s.to_string()).collect();
    }
    let mut names = Vec::with_capacity(l);
    for (i, g) in groups.iter().enumerate() {
        for j in 0..g.1 {
            names.push(format!("X{}_{}", i + 1, j + 1));
        }
    }
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_data() {
        let r = RingDescriptor::new(&[(2, 2), (3, 1)]).unwrap();
        assert_eq!(r.nvars(), 3);
        assert_eq!(r.weights(), &[2, 2, 3]);
        assert_eq!(r.lcm_weight(), 6);
        assert_eq!(r.group_vars(1), 2..3);
        assert_eq!(r.var_index(0, 1), 1);
        assert!(!r.has_divisibility_chain());
        assert!(RingDescriptor::from_weights(&[1, 2, 4])
            .unwrap()
            .has_divisibility_chain());
    }

    #[test]
    fn rejects_bad_groups() {
        assert!(RingDescriptor::from_weights(&[3, 2]).is_err());
        assert!(RingDescriptor::from_weights(&[2, 2]).is_err());
        assert!(RingDescriptor::new(&[(2, 0)]).is_err());
        assert!(RingDescriptor::from_weights(&[0, 1]).is_err());
    }

    #[test]
    fn normalize_divides_by_gcd() {
        let r = RingDescriptor::from_weights(&[4, 6]).unwrap();
        assert_eq!(r.normalize().weights(), &[2, 3]);
        assert_eq!(r.regularity_shift(), 3 + 5);
    }
}
