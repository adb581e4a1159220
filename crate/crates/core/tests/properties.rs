mod common;

use gnp_square::coloring::{
    clique_number, degeneracy_color, exact_chromatic_number, greedy_list_color, is_k_choosable, three_stage_color,
    validate, ChoosabilityCaps, ListAssignment, ListPolicy,
};
use gnp_square::graph::io::{format_edge_list, parse_edge_list};
use gnp_square::graph::{bfs_distances, bfs_layers, degeneracy_order, max_subgraph_density, sample_gnp, square, GnpParams};
use gnp_square::params::{compute_params, compute_theta, delta1_for, q_for, ParamOverrides, Part, Partition};
use gnp_square::verify::{check_cor1, check_cor2, cor1_counts, cor2_counts, count_type1, count_type2};
use gnp_square::Graph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::btree_set((0..n, 0..n), 0..=2 * n).prop_map(move |pairs| {
            let mut edges: Vec<(usize, usize)> = pairs.into_iter().filter(|(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, edges).expect("valid pairs")
        })
    })
}

fn sampled(max_n: usize) -> impl Strategy<Value = (usize, f64, u64)> {
    (1..=max_n).prop_flat_map(|n| (Just(n), 0.0..=(n as f64).min(6.0), any::<u64>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn square_matches_distance_oracle(g in graph(24)) {
        let g2 = square(&g);
        g2.check_invariants().unwrap();
        prop_assert_eq!(g2.edges().collect::<Vec<_>>(), common::square_pairs(&g));
    }

    #[test]
    fn square_contains_graph_and_respects_degree_bound(g in graph(40)) {
        let g2 = square(&g);
        prop_assert!(g.edges().all(|(u, v)| g2.has_edge(u, v)));
        let d = g.max_degree();
        prop_assert!(g2.max_degree() <= d * d);
    }

    #[test]
    fn bfs_layers_are_distance_shells(g in graph(20), root_seed in any::<usize>(), depth in 0usize..6) {
        let root = root_seed % g.num_vertices();
        let dist = common::distances(&g);
        let layers = bfs_layers(&g, root, depth).unwrap();
        for (t, layer) in layers.iter().enumerate() {
            for &v in layer {
                prop_assert_eq!(dist[root][v], t);
                if t > 0 {
                    prop_assert!(g.neighbors(v).iter().any(|&w| dist[root][w] == t - 1));
                    prop_assert!(g.neighbors(v).iter().all(|&w| dist[root][w] + 1 >= t));
                }
            }
        }
        let listed: usize = layers.iter().map(Vec::len).sum();
        let within = (0..g.num_vertices()).filter(|&v| dist[root][v] <= depth).count();
        prop_assert_eq!(listed, within);
        let flat = bfs_distances(&g, root, depth);
        for v in 0..g.num_vertices() {
            let expected = (dist[root][v] <= depth).then_some(dist[root][v]);
            prop_assert_eq!(flat[v], expected);
        }
    }

    #[test]
    fn density_matches_enumeration_and_sandwiches_degeneracy(g in graph(13)) {
        let found = max_subgraph_density(&g).unwrap();
        let (e, s) = common::densest_by_enumeration(&g);
        prop_assert_eq!(*found.density.numer() as usize * s, e * *found.density.denom() as usize);
        let members = gnp_square::graph::membership(g.num_vertices(), &found.witness);
        prop_assert_eq!(g.edges_within(&members) * *found.density.denom() as usize,
            found.witness.len() * *found.density.numer() as usize);

        let d = degeneracy_order(&g).degeneracy;
        prop_assert_eq!(d, common::degeneracy_by_cores(&g));
        // rho <= d <= 2 rho, as integer cross-products.
        prop_assert!(e <= d * s);
        prop_assert!(d * s <= 2 * e);
    }

    #[test]
    fn density_matches_plain_flow(blocks in proptest::collection::vec((3usize..9, 0.3f64..1.0), 1..5), (n, c, seed) in sampled(40)) {
        // Sparse background plus a few dense random blocks, so the core and
        // component reductions have something to prune.
        let mut edges: std::collections::BTreeSet<(usize, usize)> = sample_gnp(&GnpParams::new(n, c.min(3.0), seed)).unwrap().edges().collect();
        let mut offset = 0;
        let mut total = n;
        for (i, &(size, p)) in blocks.iter().enumerate() {
            let base = total;
            total += size;
            for u in 0..size {
                for v in u + 1..size {
                    if ((u * 31 + v * 17 + i * 7) % 100) as f64 / 100.0 < p {
                        edges.insert((base + u, base + v));
                    }
                }
            }
            if n > 0 {
                edges.insert(((offset % n).min(base), base));
            }
            offset += 13;
        }
        let g = Graph::from_edges(total, edges).unwrap();
        let found = max_subgraph_density(&g).unwrap();
        let (e, s) = common::densest_by_plain_flow(&g);
        prop_assert_eq!(*found.density.numer() as usize * s, e * *found.density.denom() as usize);
    }

    #[test]
    fn degeneracy_lists_always_suffice(g in graph(30), seed in any::<u64>(), spread in 1usize..4) {
        let g2 = square(&g);
        let k = degeneracy_order(&g2).degeneracy + 1;
        let lists = ListAssignment::random(g2.num_vertices(), k, spread * k, seed);
        let coloring = degeneracy_color(&g2, &lists).unwrap();
        prop_assert!(common::is_proper(&g2, coloring.colors()));
        prop_assert!(validate(&coloring, &g2, Some(&lists)).unwrap().is_proper());
    }

    #[test]
    fn greedy_takes_smallest_free_color(g in graph(25), seed in any::<u64>()) {
        let n = g.num_vertices();
        let lists = ListAssignment::random(n, g.max_degree() + 1, 2 * g.max_degree() + 2, seed);
        let order: Vec<usize> = (0..n).rev().collect();
        let coloring = greedy_list_color(&g, &order, &lists).unwrap();
        let mut seen = vec![None; n];
        for &v in &order {
            let used: Vec<usize> = g.neighbors(v).iter().filter_map(|&w| seen[w]).collect();
            let expected = lists.list(v).iter().copied().filter(|c| !used.contains(c)).min();
            prop_assert_eq!(coloring.color(v), expected);
            seen[v] = expected;
        }
    }

    #[test]
    fn pipeline_coloring_bounds((n, c, seed) in sampled(400), eps in prop::option::of(0.05f64..=1.0)) {
        let g1 = sample_gnp(&GnpParams::new(n, c, seed)).unwrap();
        let g2 = square(&g1);
        let ov = ParamOverrides { theta: Some(0.3), epsilon: eps, ..Default::default() };
        let params = compute_params(&g1, c, &ov).unwrap();
        let (coloring, metrics) = three_stage_color(&g1, &g2, &params, &ListPolicy::adaptive()).unwrap();
        prop_assert!(common::is_proper(&g2, coloring.colors()));
        prop_assert!(metrics.colors_used > g1.max_degree());
        prop_assert!(metrics.q_min <= g2.max_degree() + 1);
        for stage in &metrics.stages {
            prop_assert!(stage.max_colored_neighbors < metrics.q_min);
        }
        let (again, _) = three_stage_color(&g1, &g2, &params, &ListPolicy::adaptive()).unwrap();
        prop_assert_eq!(again, coloring);
    }

    #[test]
    fn partition_is_consistent((n, c, seed) in sampled(300), eps in 0.05f64..=1.0) {
        let g1 = sample_gnp(&GnpParams::new(n, c, seed)).unwrap();
        let ov = ParamOverrides { theta: Some(0.3), epsilon: Some(eps), ..Default::default() };
        let params = compute_params(&g1, c, &ov).unwrap();
        let part = Partition::new(&g1, &params);
        let threshold = params.epsilon_degree();
        prop_assert!(!part.v_eps().is_empty());
        for v in 0..n {
            let high = g1.degree(v) >= threshold;
            let near_high = g1.neighbors(v).iter().any(|&w| g1.degree(w) >= threshold);
            let expected = if high { Part::High } else if near_high { Part::Neighbor } else { Part::Rest };
            prop_assert_eq!(part.part(v), expected);
        }
        let sizes = part.v_eps().len() + part.w_minus_v().len() + part.rest().len();
        prop_assert_eq!(sizes, n);
    }

    #[test]
    fn formulas_monotone_in_degree(theta in 0.0f64..3.0, d in 0usize..500) {
        prop_assert!(delta1_for(theta, d) <= delta1_for(theta, d + 1));
        prop_assert!(q_for(theta, d) <= q_for(theta, d + 1));
        prop_assert!(delta1_for(theta, d) <= q_for(theta, d));
        prop_assert_eq!(q_for(0.0, d), d);
        prop_assert_eq!(delta1_for(0.0, d), d);
    }

    #[test]
    fn neighbor_counts_match_distance_oracle((n, c, seed) in sampled(120), eps in 0.05f64..=1.0) {
        let g1 = sample_gnp(&GnpParams::new(n, c, seed)).unwrap();
        let g2 = square(&g1);
        let ov = ParamOverrides { theta: Some(0.3), epsilon: Some(eps), ..Default::default() };
        let params = compute_params(&g1, c, &ov).unwrap();
        let part = Partition::new(&g1, &params);
        let (in_v, in_w) = (part.in_v_eps(), part.in_w_eps());
        let dist = common::distances(&g1);
        prop_assert_eq!(cor1_counts(&g2, &in_v), common::near_count(&dist, &in_v));
        let near_w = common::near_count(&dist, &in_w);
        let expected: Vec<Option<usize>> = (0..n).map(|v| (!in_v[v]).then_some(near_w[v])).collect();
        prop_assert_eq!(cor2_counts(&g2, &in_v, &in_w), expected);
    }

    #[test]
    fn type_counts_match_enumeration(g in graph(40), picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..20)) {
        let mut s: Vec<usize> = picks.iter().map(|i| i.index(g.num_vertices())).collect();
        s.sort_unstable();
        s.dedup();
        let t1 = count_type1(&g, &s);
        let (histogram, a1) = common::type1_by_pairs(&g, &s);
        prop_assert_eq!(t1.histogram, histogram);
        prop_assert_eq!(t1.a1, a1);
        prop_assert_eq!(count_type2(&g, &s), common::type2_by_triples(&g, &s));
    }

    #[test]
    fn edge_list_round_trip(g in graph(50)) {
        let text = format_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn sampling_is_deterministic((n, c, seed) in sampled(2000)) {
        let p = GnpParams::new(n, c, seed);
        let a = sample_gnp(&p).unwrap();
        a.check_invariants().unwrap();
        prop_assert_eq!(format_edge_list(&a), format_edge_list(&sample_gnp(&p).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chromatic_number_matches_brute_force(g in graph(7)) {
        let chi = exact_chromatic_number(&g, 16).unwrap();
        prop_assert_eq!(chi, common::chromatic_by_assignments(&g));
        prop_assert!(clique_number(&g, 16).unwrap() <= chi);
        prop_assert!(chi <= degeneracy_order(&g).degeneracy + 1);
    }

    #[test]
    fn choosability_is_monotone(g in graph(5)) {
        let caps = ChoosabilityCaps { max_n: 8, max_k: 6 };
        let verdicts: Vec<bool> = (1..=g.max_degree() + 1)
            .map(|k| is_k_choosable(&g, k, caps).unwrap().is_choosable())
            .collect();
        prop_assert!(verdicts.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(verdicts.last(), Some(&true));
        let chi = exact_chromatic_number(&g, 16).unwrap();
        prop_assert!(chi == 1 || !verdicts[chi - 2]);
    }

    #[test]
    fn unique_hub_keeps_neighbor_checks_tight(leaves in 1usize..8, tail in 0usize..8) {
        // A star whose center is the only vertex of maximum degree, plus a path hanging off one leaf.
        let mut edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
        let mut prev = 1;
        for v in leaves + 1..leaves + 1 + tail.min(leaves.saturating_sub(1).max(1)) {
            edges.push((prev, v));
            prev = v;
        }
        let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap() + 1;
        let g1 = Graph::from_edges(n, edges).unwrap();
        prop_assume!((1..n).all(|v| g1.degree(v) < g1.degree(0)));
        let g2 = square(&g1);
        let ov = ParamOverrides { theta: Some(0.3), epsilon: Some(1.0), ..Default::default() };
        let params = compute_params(&g1, 1.0, &ov).unwrap();
        prop_assert!(cor1_counts(&g2, &Partition::new(&g1, &params).in_v_eps()).iter().all(|&k| k <= 1));
        prop_assert!(check_cor1(&g1, &g2, &params).unwrap().holds);
        prop_assert!(check_cor2(&g1, &g2, &params).unwrap().holds);
    }
}

#[test]
fn theta_positive_and_peaks_once() {
    let ns: Vec<usize> = (0..200).map(|i| (17.0 * 1.2f64.powi(i)) as usize).take_while(|&n| n < 1 << 62).collect();
    let thetas: Vec<f64> = ns.iter().map(|&n| compute_theta(n).unwrap()).collect();
    assert!(thetas.iter().all(|&t| t > 0.0));
    let peak = thetas.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).unwrap().0;
    assert!(thetas[..=peak].windows(2).all(|w| w[0] < w[1]));
    assert!(thetas[peak..].windows(2).all(|w| w[0] > w[1]));
    // The peak sits where ln ln n = e.
    let at = (1.0f64.exp().exp()).exp();
    assert!((ns[peak] as f64 / at).ln().abs() < 0.4);
}
