mod common;

use cliquepeel::clique::{component_cores, intersection_graph, max_cliques, omega};
use cliquepeel::coloring::{
    chromatic_number, fractional_chromatic, fractional_chromatic_certified, seven_sixths_bound, reed_bound,
    RationalValue,
};
use cliquepeel::generate::{gen_er, gen_hypothesis, gen_multigraph};
use cliquepeel::io::{graph_from_json, graph_to_json, parse_dimacs, write_dimacs};
use cliquepeel::main_lemma::{destroy_clique, extend_to_maximal, verify_destruction, Verification};
use cliquepeel::transversal::{find_transversal, is_valid_transversal, TransversalInstance};
use cliquepeel::{Graph, VertexSet};
use common::*;
use proptest::prelude::*;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0u64..=100, any::<u64>()).prop_map(|(n, p, s)| lcg_graph(n, p, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn max_cliques_match_subset_scan(g in small_graph(10)) {
        let f = max_cliques(&g).unwrap();
        let got: Vec<Vec<usize>> = f.cliques().iter().map(VertexSet::to_vec).collect();
        let (w, want) = brute_max_cliques(&g);
        prop_assert_eq!(f.omega(), w);
        prop_assert_eq!(omega(&g), w);
        prop_assert_eq!(got, want);
    }

    #[test]
    fn chromatic_number_matches_enumeration(g in small_graph(7)) {
        let (chi, cert) = chromatic_number(&g);
        prop_assert_eq!(chi, brute_chromatic(&g));
        prop_assert!(cert.verify(&g));
    }

    #[test]
    fn fractional_certificate_is_optimal(g in small_graph(9)) {
        let cert = fractional_chromatic_certified(&g, 14).unwrap();
        let zero = RationalValue::integer(0);
        // Primal: nonnegative weights on independent sets covering each vertex.
        let mut cover = vec![(0i64, 1i64); g.n()];
        let mut total = (0i64, 1i64);
        let add = |a: (i64, i64), b: RationalValue| {
            let r = RationalValue::new(a.0 * b.denominator + b.numerator * a.1, a.1 * b.denominator);
            (r.numerator, r.denominator)
        };
        for (s, w) in &cert.set_weights {
            prop_assert!(*w > zero);
            prop_assert!(g.is_independent(s));
            total = add(total, *w);
            for v in s.iter() {
                cover[v] = add(cover[v], *w);
            }
        }
        for c in &cover {
            prop_assert!(RationalValue::new(c.0, c.1) >= RationalValue::integer(1));
        }
        prop_assert_eq!(RationalValue::new(total.0, total.1), cert.value);
        // Dual: nonnegative vertex weights with every independent set <= 1.
        prop_assert!(cert.vertex_weights.iter().all(|y| *y >= zero));
        for mask in 0u32..(1 << g.n()) {
            if !is_independent_mask(&g, mask) {
                continue;
            }
            let sum = mask_to_vec(mask).into_iter().fold((0, 1), |a, v| add(a, cert.vertex_weights[v]));
            prop_assert!(RationalValue::new(sum.0, sum.1) <= RationalValue::integer(1));
        }
        let dual = cert.vertex_weights.iter().fold((0, 1), |a, y| add(a, *y));
        prop_assert_eq!(RationalValue::new(dual.0, dual.1), cert.value);
    }

    #[test]
    fn sandwich_omega_chi_star_chi(g in small_graph(9)) {
        let w = omega(&g) as i64;
        let chi = chromatic_number(&g).0 as i64;
        let fs = fractional_chromatic(&g).unwrap();
        prop_assert!(RationalValue::integer(w) <= fs);
        prop_assert!(fs <= RationalValue::integer(chi));
    }

    #[test]
    fn transversal_search_is_exact(
        sizes in prop::collection::vec(1usize..=4, 1..=12),
        density in 0u64..=60,
        seed in any::<u64>(),
    ) {
        let n: usize = sizes.iter().sum();
        let mut parts = Vec::new();
        let mut next = 0;
        for s in &sizes {
            parts.push((next..next + s).collect::<Vec<_>>());
            next += s;
        }
        let raw = lcg_graph(n, density, seed);
        let part_of: Vec<usize> = parts.iter().enumerate().flat_map(|(i, p)| p.iter().map(move |_| i)).collect();
        let cross: Vec<_> = raw.edges().into_iter().filter(|&(u, v)| part_of[u] != part_of[v]).collect();
        let aux = Graph::from_edges(n, &cross).unwrap();
        let refs: Vec<&[usize]> = parts.iter().map(Vec::as_slice).collect();
        let t = TransversalInstance::from_parts(aux.clone(), &refs).unwrap();
        let found = find_transversal(&t);
        prop_assert_eq!(found.is_some(), brute_transversal_exists(&aux, &parts));
        if let Some(tr) = found {
            prop_assert!(is_valid_transversal(&t, &tr));
        }
    }

    #[test]
    fn line_graph_clique_at_least_max_degree(n in 2usize..=8, m in 1usize..=14, seed in any::<u64>()) {
        let h = gen_multigraph(n, m, seed);
        let (l, _) = h.line_graph();
        prop_assert!(brute_omega(&l) >= h.max_degree());
    }

    #[test]
    fn dimacs_and_json_round_trip(g in small_graph(12)) {
        prop_assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g.clone());
        prop_assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn extension_is_maximal_and_lowers_degrees(g in small_graph(10), pick in any::<usize>()) {
        let v = pick % g.n();
        let seed = VertexSet::from_iter_with_capacity(g.n(), [v]);
        let grown = extend_to_maximal(&g, &seed).unwrap();
        prop_assert!(seed.is_subset(&grown));
        prop_assert!(g.is_maximal_independent(&grown));
        let (rest, _) = g.remove_vertices(&grown);
        if rest.n() > 0 {
            prop_assert!(rest.max_degree() < g.max_degree());
        }
    }

    #[test]
    fn destroy_clique_drops_omega_by_one(g in small_graph(10)) {
        let w = brute_omega(&g);
        let d = g.max_degree();
        match destroy_clique(&g) {
            Ok(cert) => {
                prop_assert!(4 * w >= 3 * (d + 1));
                let (rest, _) = g.remove_vertices(&cert.independent_set);
                prop_assert_eq!(brute_omega(&rest) + 1, w);
                prop_assert_eq!(verify_destruction(&g, &cert), Verification::Pass);
            }
            Err(cliquepeel::Error::Hypothesis { .. }) => prop_assert!(4 * w < 3 * (d + 1)),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn kostochka_core_bound(g in small_graph(10)) {
        let w = brute_omega(&g) as i64;
        let d = g.max_degree() as i64;
        prop_assume!(3 * w > 2 * (d + 1));
        let f = max_cliques(&g).unwrap();
        let x = intersection_graph(&f);
        for comp in x.components() {
            for (a, &i) in comp.iter().enumerate() {
                for &j in &comp[a + 1..] {
                    prop_assert!(x.adjacent(i, j));
                }
            }
        }
        for c in component_cores(&x) {
            prop_assert!(c.core.len() as i64 >= 2 * w - (d + 1));
        }
    }
}

#[test]
fn er_is_deterministic() {
    let a = gen_er(30, 0.4, 99);
    let b = gen_er(30, 0.4, 99);
    assert_eq!(write_dimacs(&a), write_dimacs(&b));
}

#[test]
fn hypothesis_generator_meets_hypothesis_by_brute_force() {
    for seed in 0..40 {
        let k = 2 + (seed as usize % 5);
        let g = gen_hypothesis(k, 3, 0.4, seed).unwrap();
        let w = brute_omega(&g);
        assert_eq!(w, k);
        assert!(4 * w >= 3 * (g.max_degree() + 1));
    }
}

#[test]
fn fractional_matches_vertex_transitive_formula() {
    // For vertex-transitive graphs χ* = n / α.
    for g in [Graph::cycle(5), Graph::cycle(7), Graph::petersen(), Graph::complete(4), Graph::cycle(6)] {
        let expected = RationalValue::new(g.n() as i64, brute_alpha(&g) as i64);
        assert_eq!(fractional_chromatic(&g).unwrap(), expected, "{g:?}");
    }
}

#[test]
fn seven_sixths_below_reed_under_three_quarters() {
    for w in 1..=200usize {
        for d in 0..=200usize {
            if 4 * w < 3 * (d + 1) {
                assert!(seven_sixths_bound(w) <= reed_bound(w, d), "omega={w} delta={d}");
            }
        }
    }
}
