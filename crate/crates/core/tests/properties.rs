use proptest::prelude::*;
use wgr_core::hilbert::{hilbert_function, hilbert_series, Convention};
use wgr_core::monomial::monomials_of_degree;
use wgr_core::poly::coeff_from_int;
use wgr_core::{Ideal, Monomial, MonomialIdeal, OrderKind, Polynomial, RingDescriptor, TermOrder};

fn ring() -> impl Strategy<Value = RingDescriptor> {
    prop::collection::vec(1u64..=4, 1..=3).prop_map(|mut w| {
        w.sort_unstable();
        let mut groups: Vec<(u64, usize)> = Vec::new();
        for x in w {
            match groups.last_mut() {
                Some((g, n)) if *g == x => *n += 1,
                _ => groups.push((x, 1)),
            }
        }
        RingDescriptor::new(&groups).unwrap()
    })
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..=4, n).prop_map(Monomial::new)
}

fn polynomial(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(n), -4i64..=4), 0..5)
        .prop_map(move |terms| Polynomial::from_terms(n, terms.into_iter().map(|(m, c)| (m, coeff_from_int(c)))))
}

fn ring_and_ideal() -> impl Strategy<Value = (RingDescriptor, MonomialIdeal)> {
    ring().prop_flat_map(|r| {
        let n = r.nvars();
        prop::collection::vec(monomial(n).prop_filter("non-unit", |m| !m.is_one()), 1..=4)
            .prop_map(move |gens| (r.clone(), MonomialIdeal::new(&r, gens).unwrap()))
    })
}

fn kind() -> impl Strategy<Value = OrderKind> {
    prop_oneof![
        Just(OrderKind::Lex),
        Just(OrderKind::WDegLex),
        Just(OrderKind::WDegRevLex)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in polynomial(3), b in polynomial(3), c in polynomial(3)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.pow(2), a.mul(&a));
    }

    #[test]
    fn orders_are_multiplicative(r in ring(), k in kind(), seed in 0u64..1000) {
        let n = r.nvars();
        let mons: Vec<Monomial> = (0..3)
            .map(|i| Monomial::new((0..n).map(|v| ((seed >> (3 * (i * n + v))) & 3) as u32).collect()))
            .collect();
        let o = TermOrder::new(k, &r);
        let (a, b, c) = (&mons[0], &mons[1], &mons[2]);
        prop_assert_eq!(o.compare(a, b), o.compare(&a.mul(c), &b.mul(c)));
        prop_assert_eq!(o.compare(a, b), o.compare(b, a).reverse());
        if !c.is_one() {
            prop_assert_eq!(o.compare(&a.mul(c), a), std::cmp::Ordering::Greater);
        }
        if o.is_degree_compatible() {
            let (da, db) = (a.degree_with(r.weights()), b.degree_with(r.weights()));
            if da != db {
                prop_assert_eq!(o.compare(a, b), da.cmp(&db));
            }
        }
    }

    #[test]
    fn hilbert_conventions_add_up((r, i) in ring_and_ideal(), d in 0u64..20) {
        let total = monomials_of_degree(&r, d).len() as i64;
        let h_i = hilbert_function(&i, d, Convention::Ideal);
        let h_q = hilbert_function(&i, d, Convention::Quotient);
        prop_assert_eq!(h_i + h_q, total);
        prop_assert_eq!(h_i, i.count_in_degree(d) as i64);
        prop_assert_eq!(hilbert_series(&i).coefficient(d), h_q);
    }

    #[test]
    fn series_of_sum_and_intersection((r, i) in ring_and_ideal(), seed in 0u64..1000) {
        let j = MonomialIdeal::new(&r, vec![Monomial::new((0..r.nvars()).map(|v| ((seed >> v) & 3) as u32 + 1).collect())]).unwrap();
        let (s, x) = (i.sum(&j), i.intersection(&j));
        for d in 0..15 {
            prop_assert_eq!(
                s.count_in_degree(d) + x.count_in_degree(d),
                i.count_in_degree(d) + j.count_in_degree(d)
            );
        }
    }

    #[test]
    fn groebner_bases_are_groebner((r, i) in ring_and_ideal(), k in kind(), c in 1i64..5) {
        // perturb the first generator by a multiple of another monomial of its degree
        let gens: Vec<Polynomial> = i.generators().iter().map(|m| Polynomial::monomial(m.clone(), coeff_from_int(1))).collect();
        let d = i.generators()[0].degree_with(r.weights());
        let extra = monomials_of_degree(&r, d).into_iter().last().unwrap();
        let mut gens = gens;
        gens[0] = gens[0].add(&Polynomial::monomial(extra, coeff_from_int(c)));
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let o = TermOrder::new(k, &r);
        let gb = ideal.groebner_basis(&o);
        prop_assert!(gb.is_groebner_basis());
        for g in &gens {
            prop_assert!(gb.normal_form(g).is_zero());
        }
        prop_assert_eq!(hilbert_series(&gb.initial_ideal()), ideal.hilbert_series());
    }

    #[test]
    fn colon_and_saturation_laws((r, i) in ring_and_ideal(), v in 0usize..3) {
        let m = Monomial::var(r.nvars(), v % r.nvars(), 1);
        let c = i.colon_monomial(&m);
        prop_assert!(c.contains_ideal(&i));
        for g in c.generators() {
            prop_assert!(i.contains(&g.mul(&m)));
        }
        let s = i.saturate_monomial(&m);
        prop_assert_eq!(s.colon_monomial(&m), s.clone());
    }
}
