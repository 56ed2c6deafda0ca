//! Graded Betti numbers of monomial ideals against the upper Koszul
//! simplicial complex formula `beta_{i,b}(I) = dim H~_{i-1}(K^b(I))`.

mod common;

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use wgr_core::resolution::{free_resolution, monomial_betti};
use wgr_core::{Ideal, Monomial, MonomialIdeal, RingDescriptor};

const P: i64 = 1_000_003;

fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], P - 2);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c] * inv % P;
                for k in 0..ncols {
                    rows[r][k] = (rows[r][k] - f * rows[rank][k]).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64) -> i64 {
    let mut acc = 1;
    b = b.rem_euclid(P);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

/// Reduced Betti numbers of a simplicial complex given by its faces as
/// sorted vertex lists (the empty face included).
fn reduced_homology(faces: &[Vec<usize>]) -> Vec<usize> {
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    // by_dim[k] holds faces with k vertices, i.e. of dimension k - 1
    let by_dim: Vec<Vec<&Vec<usize>>> = (0..=top)
        .map(|k| faces.iter().filter(|f| f.len() == k).collect())
        .collect();
    let boundary_rank = |k: usize| -> usize {
        if k == 0 || k > top {
            return 0;
        }
        let index: BTreeMap<&Vec<usize>, usize> = by_dim[k - 1].iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let rows: Vec<Vec<i64>> = by_dim[k]
            .iter()
            .map(|f| {
                let mut row = vec![0i64; by_dim[k - 1].len()];
                for drop in 0..f.len() {
                    let mut g = (*f).clone();
                    g.remove(drop);
                    row[index[&g]] = if drop % 2 == 0 { 1 } else { P - 1 };
                }
                row
            })
            .collect();
        rank_mod_p(rows)
    };
    let ranks: Vec<usize> = (0..=top + 1).map(boundary_rank).collect();
    (0..=top).map(|k| by_dim[k].len() - ranks[k] - ranks[k + 1]).collect()
}

/// `beta_{i,j}(I)` by summing the Koszul formula over the lcm lattice.
fn koszul_betti(ideal: &MonomialIdeal) -> BTreeMap<(usize, u64), usize> {
    let gens = ideal.generators();
    let weights = ideal.ring().weights();
    let mut lattice = std::collections::BTreeSet::new();
    for mask in 1u32..(1 << gens.len()) {
        let m = (0..gens.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| gens[k].clone())
            .reduce(|a, b| a.lcm(&b))
            .unwrap();
        lattice.insert(m);
    }
    let mut out = BTreeMap::new();
    for m in lattice {
        let support: Vec<usize> = m.support().collect();
        let faces: Vec<Vec<usize>> = (0u32..(1 << support.len()))
            .map(|mask| {
                (0..support.len())
                    .filter(|k| mask >> k & 1 == 1)
                    .map(|k| support[k])
                    .collect::<Vec<_>>()
            })
            .filter(|f| {
                let mut e = m.exponents().to_vec();
                f.iter().for_each(|&v| e[v] -= 1);
                ideal.contains(&Monomial::new(e))
            })
            .collect();
        // index k holds H~_{k-1}, which is beta_k at m
        for (k, h) in reduced_homology(&faces).into_iter().enumerate() {
            if h > 0 {
                *out.entry((k, m.degree_with(weights))).or_insert(0) += h;
            }
        }
    }
    out
}

#[test]
fn homology_of_small_complexes() {
    // two points: H~_0 = 1
    assert_eq!(reduced_homology(&[vec![], vec![0], vec![1]]), vec![0, 1]);
    // hollow triangle: H~_1 = 1
    let faces = vec![vec![], vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2]];
    assert_eq!(reduced_homology(&faces), vec![0, 0, 1]);
    // the irrelevant complex {empty}: H~_{-1} = 1
    assert_eq!(reduced_homology(&[vec![]]), vec![1]);
}

#[test]
fn xy_yz_x5_against_formula() {
    let r = RingDescriptor::from_weights(&[2, 4, 5]).unwrap();
    let i = MonomialIdeal::from_exponents(&r, &[&[1, 1, 0], &[0, 1, 1], &[5, 0, 0]]);
    let table = monomial_betti(&i).unwrap().of_ideal();
    let ours: BTreeMap<(usize, u64), usize> = table.entries().map(|(i, j, b)| ((i, j), b)).collect();
    assert_eq!(ours, koszul_betti(&i));
}

#[test]
fn random_monomial_ideals_against_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let r = random_ring(&mut rng, 4, 5);
        let i = random_monomial_ideal(&mut rng, &r, 5, 3);
        let table = monomial_betti(&i).unwrap().of_ideal();
        let ours: BTreeMap<(usize, u64), usize> = table.entries().map(|(i, j, b)| ((i, j), b)).collect();
        assert_eq!(ours, koszul_betti(&i), "{:?} in {:?}", i.generators(), r.weights());
    }
}

#[test]
fn nonminimal_frames_are_complexes_with_the_same_euler_data() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..30 {
        let r = random_ring(&mut rng, 3, 4);
        let i = Ideal::from_monomial_ideal(&random_monomial_ideal(&mut rng, &r, 4, 3));
        let frame = free_resolution(&i, false).unwrap();
        let min = free_resolution(&i, true).unwrap();
        assert!(frame.is_complex());
        assert!(min.is_complex() && !min.has_unit_entries());
        assert_eq!(frame.betti().hilbert_numerator(), min.betti().hilbert_numerator());
    }
}
