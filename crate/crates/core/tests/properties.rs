use std::collections::BTreeSet;

use proptest::prelude::*;

use degcx::cohomology::{scan_cohomology, takayama_dim};
use degcx::complex::kunneth_join_dims;
use degcx::format::{complex_from_json, complex_to_json, ideal_to_text, parse_ideal};
use degcx::primes::symbolic_membership;
use degcx::{
    degree_complex, minimal_primes, symbolic_power_ideal, ExponentVector, MonomialIdeal, SimplicialComplex,
    VertexSet,
};

fn ideal_on(n: usize, vars: VertexSet, max_exp: i32) -> impl Strategy<Value = MonomialIdeal> {
    let gen = proptest::collection::vec(0..=max_exp, n).prop_map(move |mut v| {
        for (i, e) in v.iter_mut().enumerate() {
            if !vars.contains(i) {
                *e = 0;
            }
        }
        ExponentVector::new(v)
    });
    proptest::collection::vec(gen, 0..=4).prop_map(move |gens| {
        let gens = gens.into_iter().filter(|g| g.total() > 0).collect();
        MonomialIdeal::minimalize(n, gens).unwrap()
    })
}

fn ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    ideal_on(n, VertexSet::full(n), 3)
}

fn squarefree_on(n: usize, vars: VertexSet) -> impl Strategy<Value = MonomialIdeal> {
    ideal_on(n, vars, 1)
}

fn degree(n: usize, lo: i32, hi: i32) -> impl Strategy<Value = ExponentVector> {
    proptest::collection::vec(lo..=hi, n).prop_map(ExponentVector::new)
}

fn complex_on(n: usize, vars: VertexSet) -> impl Strategy<Value = SimplicialComplex> {
    let masks = proptest::collection::vec(any::<u32>(), 0..=5);
    (masks, 0..10u8).prop_map(move |(masks, kind)| match kind {
        0 => SimplicialComplex::void(n),
        1 => SimplicialComplex::irrelevant(n),
        _ => SimplicialComplex::from_faces(n, masks.into_iter().map(|m| VertexSet(m).intersection(vars))),
    })
}

fn face_set(c: &SimplicialComplex) -> BTreeSet<u32> {
    c.faces().into_iter().map(|f| f.bits()).collect()
}

/// `x^γ ∈ I·S_W` by searching `δ ∈ ℕ^W` with `x^{γ+δ} ∈ I`.
fn membership_by_search(i: &MonomialIdeal, gamma: &ExponentVector, w: VertexSet) -> bool {
    let n = i.n();
    let rho = i.max_exponents();
    let bounds: Vec<i32> = (0..n)
        .map(|k| if w.contains(k) { rho[k] + (-gamma.get(k)).max(0) } else { 0 })
        .collect();
    let mut delta = vec![0i32; n];
    loop {
        let shifted: Vec<i32> = (0..n).map(|k| gamma.get(k) + delta[k]).collect();
        if shifted.iter().all(|&e| e >= 0) && i.contains_monomial(&ExponentVector::new(shifted)) {
            return true;
        }
        let mut k = 0;
        loop {
            if k == n {
                return false;
            }
            if delta[k] < bounds[k] {
                delta[k] += 1;
                break;
            }
            delta[k] = 0;
            k += 1;
        }
    }
}

/// Every exponent vector in the box `[0, hi]^n`.
fn box_points(n: usize, hi: i32) -> Vec<ExponentVector> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i32>| {
                (0..=hi).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(ExponentVector::new).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn sum_and_intersection_laws(a in ideal(4), b in ideal(4), c in ideal(4)) {
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(a.intersection(&b).unwrap(), b.intersection(&a).unwrap());
        prop_assert_eq!(a.sum(&b).unwrap().sum(&c).unwrap(), a.sum(&b.sum(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.intersection(&b).unwrap().intersection(&c).unwrap(),
            a.intersection(&b.intersection(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.product(&b.sum(&c).unwrap()).unwrap(),
            a.product(&b).unwrap().sum(&a.product(&c).unwrap()).unwrap()
        );
        let ab = a.product(&b).unwrap();
        let meet = a.intersection(&b).unwrap();
        prop_assert!(meet.contains(&ab));
        prop_assert!(a.contains(&meet) && b.contains(&meet));
    }

    #[test]
    fn disjoint_squarefree_intersection_is_product(
        a in squarefree_on(6, VertexSet::range(0, 3)),
        b in squarefree_on(6, VertexSet::range(3, 6)),
    ) {
        prop_assert_eq!(a.intersection(&b).unwrap(), a.product(&b).unwrap());
    }

    #[test]
    fn binomial_expansion_on_disjoint_blocks(
        a in ideal_on(4, VertexSet::range(0, 2), 2),
        b in ideal_on(4, VertexSet::range(2, 4), 2),
        s in 0u32..=3,
    ) {
        let lhs = a.sum(&b).unwrap().power_or_unit(s);
        let mut rhs = MonomialIdeal::zero(4);
        for i in 0..=s {
            rhs = rhs.sum(&a.power_or_unit(i).product(&b.power_or_unit(s - i)).unwrap()).unwrap();
        }
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.power_or_unit(0), MonomialIdeal::unit(4));
    }

    #[test]
    fn localized_membership_matches_search(i in ideal(4), g in degree(4, -2, 3), mask in 0u32..16) {
        let neg = g.negative_support();
        let face = VertexSet(mask).difference(neg);
        let got = i.localized_membership(&g, face).unwrap();
        prop_assert_eq!(got, membership_by_search(&i, &g, face.union(neg)));
        for v in 0..4 {
            if !neg.contains(v) && !face.contains(v) && got {
                prop_assert!(i.localized_membership(&g, face.union(VertexSet::singleton(v))).unwrap());
            }
        }
    }

    #[test]
    fn degree_complex_is_antitone_in_the_ideal(a in ideal(4), b in ideal(4), g in degree(4, -1, 3)) {
        let small = degree_complex(&a, &g).unwrap();
        let big = degree_complex(&a.sum(&b).unwrap(), &g).unwrap();
        prop_assert!(face_set(&big).is_subset(&face_set(&small)));
        prop_assert!(degree_complex(&MonomialIdeal::unit(4), &g).unwrap().is_void());
    }

    #[test]
    fn degree_complex_matches_the_definition(i in ideal(4), g in degree(4, -2, 3)) {
        let c = degree_complex(&i, &g).unwrap();
        let neg = g.negative_support();
        for f in VertexSet::full(4).subsets() {
            let expected = f.is_disjoint(neg) && !membership_by_search(&i, &g, f.union(neg));
            prop_assert_eq!(c.contains_face(f), expected, "face {}", f);
        }
    }

    #[test]
    fn negative_entries_normalize_to_minus_one(i in ideal(4), g in degree(4, -4, 3)) {
        let normal = ExponentVector::new(g.entries().iter().map(|&e| e.max(-1)).collect());
        prop_assert_eq!(degree_complex(&i, &g).unwrap(), degree_complex(&i, &normal).unwrap());
        for p in 0..=4 {
            prop_assert_eq!(takayama_dim(&i, &g, p).unwrap(), takayama_dim(&i, &normal, p).unwrap());
        }
    }

    #[test]
    fn high_degrees_give_cones(i in ideal(4), g in degree(4, -1, 5)) {
        let rho = i.max_exponents();
        let c = degree_complex(&i, &g).unwrap();
        for v in 0..4 {
            if g.get(v) >= rho[v] {
                for f in c.faces() {
                    prop_assert!(c.contains_face(f.union(VertexSet::singleton(v))));
                }
                prop_assert!(c.reduced_homology().is_zero());
                for p in 0..=4 {
                    prop_assert_eq!(takayama_dim(&i, &g, p).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn zero_degree_complex_sees_only_the_radical(i in ideal(4)) {
        prop_assume!(!i.is_unit());
        let zero = ExponentVector::zeros(4);
        prop_assert_eq!(degree_complex(&i, &zero).unwrap(), degree_complex(&i.radical(), &zero).unwrap());
    }

    #[test]
    fn h0_is_the_irrelevant_indicator(i in ideal(3), g in degree(3, -1, 3)) {
        let h0 = takayama_dim(&i, &g, 0).unwrap();
        let irrelevant = g.negative_support().is_empty() && degree_complex(&i, &g).unwrap().is_irrelevant();
        prop_assert_eq!(h0, irrelevant as u64);
    }

    #[test]
    fn symbolic_powers_match_the_prime_oracle(i in squarefree_on(4, VertexSet::full(4)), s in 1u32..=3) {
        prop_assume!(!i.is_zero());
        let sym = symbolic_power_ideal(&i, s).unwrap();
        let primes = minimal_primes(&i).unwrap();
        let oracle = |m: &ExponentVector| primes.primes().iter().all(|p| m.total_on(*p) >= s as i64);
        for m in box_points(4, s as i32) {
            prop_assert_eq!(sym.contains_monomial(&m), oracle(&m), "monomial {:?}", m);
            prop_assert_eq!(symbolic_membership(&i, s, &m).unwrap(), oracle(&m));
        }
        prop_assert!(sym.contains(&i.power(s).unwrap()));
        for t in 1..s {
            prop_assert!(symbolic_power_ideal(&i, t).unwrap().contains(&sym));
        }
    }

    #[test]
    fn minimal_primes_are_minimal_transversals(i in squarefree_on(5, VertexSet::full(5))) {
        prop_assume!(!i.is_zero());
        let supports: Vec<VertexSet> = i.generators().iter().map(|g| g.support()).collect();
        let covers = |p: VertexSet| supports.iter().all(|s| !s.is_disjoint(p));
        let expected: Vec<VertexSet> = VertexSet::full(5)
            .subsets()
            .filter(|&p| covers(p) && p.iter().all(|v| !covers(p.difference(VertexSet::singleton(v)))))
            .collect();
        let got: BTreeSet<u32> = minimal_primes(&i).unwrap().primes().iter().map(|p| p.bits()).collect();
        let want: BTreeSet<u32> = expected.iter().map(|p| p.bits()).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn complex_lattice_laws(
        a in complex_on(5, VertexSet::full(5)),
        b in complex_on(5, VertexSet::full(5)),
        c in complex_on(5, VertexSet::full(5)),
    ) {
        prop_assert_eq!(a.union(&a).unwrap(), a.clone());
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
        prop_assert_eq!(a.union(&b).unwrap(), b.union(&a).unwrap());
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(a.union(&b).unwrap().union(&c).unwrap(), a.union(&b.union(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.intersect(&b).unwrap().intersect(&c).unwrap(),
            a.intersect(&b.intersect(&c).unwrap()).unwrap()
        );
        let (fa, fb) = (face_set(&a), face_set(&b));
        prop_assert_eq!(face_set(&a.union(&b).unwrap()), fa.union(&fb).copied().collect::<BTreeSet<_>>());
        prop_assert_eq!(face_set(&a.intersect(&b).unwrap()), fa.intersection(&fb).copied().collect::<BTreeSet<_>>());
    }

    #[test]
    fn euler_characteristic_is_alternating_homology(a in complex_on(6, VertexSet::full(6))) {
        prop_assert_eq!(a.euler_characteristic(), a.reduced_homology().alternating_sum());
        for facet in a.facets() {
            for f in facet.subsets() {
                prop_assert!(a.contains_face(f));
            }
        }
    }

    #[test]
    fn join_follows_kunneth(a in complex_on(7, VertexSet::range(0, 4)), b in complex_on(7, VertexSet::range(4, 7))) {
        let j = a.join(&b).unwrap();
        prop_assert_eq!(j.reduced_homology(), kunneth_join_dims(&a.reduced_homology(), &b.reduced_homology()));
        let mut expected = BTreeSet::new();
        for f in a.faces() {
            for g in b.faces() {
                expected.insert(f.union(g).bits());
            }
        }
        prop_assert_eq!(face_set(&j), expected);
    }

    #[test]
    fn text_and_json_round_trip(i in ideal(5), c in complex_on(5, VertexSet::full(5))) {
        prop_assert_eq!(parse_ideal(&ideal_to_text(&i)).unwrap(), i);
        prop_assert_eq!(complex_from_json(&complex_to_json(&c)).unwrap(), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(24) })]

    #[test]
    fn tables_are_symmetric_under_renaming(i in ideal(3), perm in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        let table = scan_cohomology(&i).unwrap();
        let renamed = scan_cohomology(&i.permute(&perm)).unwrap();
        prop_assert_eq!(table.len(), renamed.len());
        for ((p, g), d) in &table.entries {
            let mut moved = vec![0; 3];
            for (k, &target) in perm.iter().enumerate() {
                moved[target] = g.get(k);
            }
            prop_assert_eq!(renamed.get(*p, &ExponentVector::new(moved)), *d);
        }
        prop_assert_eq!(table.reg().map(|w| w.value), renamed.reg().map(|w| w.value));
    }

    #[test]
    fn table_entries_pass_the_gate(i in ideal(3)) {
        let table = scan_cohomology(&i).unwrap();
        let zero = degree_complex(&i, &ExponentVector::zeros(3)).unwrap();
        let rho = i.max_exponents();
        for ((p, g), d) in &table.entries {
            prop_assert!(*d > 0 && *p <= 3);
            prop_assert!(zero.contains_face(g.negative_support()));
            for k in 0..3 {
                prop_assert!(g.get(k) >= -1 && g.get(k) <= (rho[k] - 1).max(-1));
            }
        }
    }
}
