//! Randomized cross-cutting properties: switching invariance, the pairing
//! characterization, and agreement between the independent computation
//! paths (eigenvalues, exact moments, two polynomial algorithms).

use estrada_core::estrada::{ee_from_moments, estrada_index, moment_sequence};
use estrada_core::graph::SwitchingCertificate;
use estrada_core::spectra::{char_poly, char_poly_schwenk, eigenvalues, interlacing_check};
use estrada_core::SignedGraph;
use num_traits::ToPrimitive;
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn arb_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let m_max = n * (n - 1) / 2;
        proptest::collection::vec((any::<bool>(), any::<bool>()), m_max).prop_map(move |slots| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    let (present, positive) = slots[idx];
                    idx += 1;
                    if present {
                        edges.push((u, v, if positive { 1 } else { -1 }));
                    }
                }
            }
            SignedGraph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn graph_and_mask(max_n: usize) -> impl Strategy<Value = (SignedGraph, Vec<bool>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |mask| (g.clone(), mask))
    })
}

fn cut_from_mask(g: &SignedGraph, mask: &[bool]) -> SwitchingCertificate {
    let verts: Vec<usize> = (0..g.n()).filter(|&v| mask[v]).collect();
    SwitchingCertificate::from_set(g.n(), &verts).unwrap()
}

proptest! {
    #[test]
    fn switching_preserves_polynomial_and_index((g, mask) in graph_and_mask(7)) {
        let cut = cut_from_mask(&g, &mask);
        let h = g.switch(&cut).unwrap();
        prop_assert_eq!(char_poly(&g), char_poly(&h));
        let eg = estrada_index(&g, TOL).unwrap().value;
        let eh = estrada_index(&h, TOL).unwrap().value;
        prop_assert!((eg - eh).abs() < 1e-10);
        prop_assert!(g.is_switching_equivalent(&h));
        prop_assert!(h.is_switching_equivalent(&g));
        prop_assert!(g.is_switching_equivalent(&g));
    }

    #[test]
    fn switching_twice_restores_the_graph((g, mask) in graph_and_mask(7)) {
        let cut = cut_from_mask(&g, &mask);
        let twice = g.switch(&cut).unwrap().switch(&cut).unwrap();
        prop_assert_eq!(g, twice);
    }

    #[test]
    fn pairing_means_symmetric_spectrum(g in arb_graph(6)) {
        let s = eigenvalues(&g, TOL).unwrap();
        let v = s.values();
        let symmetric = (0..v.len()).all(|i| (v[i] + v[v.len() - 1 - i]).abs() < 1e-8);
        prop_assert_eq!(g.has_pairing_property(), symmetric);
    }

    #[test]
    fn moments_match_eigenvalue_power_sums(g in arb_graph(7)) {
        let s = eigenvalues(&g, TOL).unwrap();
        let ms = moment_sequence(&g, 8);
        let radius = g.max_degree().max(1) as f64;
        for k in 0..=8usize {
            let power_sum: f64 = s.values().iter().map(|mu| mu.powi(k as i32)).sum();
            let exact = ms.get(k).to_f64().unwrap();
            let scale = 1e-10 * g.n() as f64 * radius.powi(k as i32) + 1e-9;
            prop_assert!((power_sum - exact).abs() < scale,
                "k={} exact={} summed={}", k, exact, power_sum);
        }
    }

    #[test]
    fn vertex_deletion_polynomial_matches_direct(g in arb_graph(8)) {
        let direct = char_poly(&g);
        for u in 0..g.n() {
            prop_assert_eq!(&char_poly_schwenk(&g, u).unwrap(), &direct);
        }
    }

    #[test]
    fn eigenvalues_are_polynomial_roots(g in arb_graph(7)) {
        let phi = char_poly(&g);
        for &mu in eigenvalues(&g, TOL).unwrap().values() {
            prop_assert!(phi.eval_f64(mu).abs() < 1e-5);
        }
    }

    #[test]
    fn induced_subgraphs_interlace((g, mask) in graph_and_mask(7)) {
        let verts: Vec<usize> = (0..g.n()).filter(|&v| mask[v]).collect();
        prop_assume!(!verts.is_empty());
        prop_assert!(interlacing_check(&g, &verts, TOL).unwrap());
    }

    #[test]
    fn series_index_matches_eigenvalue_index(g in arb_graph(7)) {
        let direct = estrada_index(&g, TOL).unwrap().value;
        let series = ee_from_moments(&g, 1e-10).unwrap();
        prop_assert!((series.value - direct).abs() < 1e-8);
        prop_assert!(series.error_bound.unwrap() <= 1e-10);
    }
}
