//! Property-based invariants: structural bounds, route agreement, and
//! rotation algebra over randomized inputs.

use proptest::prelude::*;
use rcm_core::config::Caps;
use rcm_core::graphs::{self, EdgeSubset, Graph};
use rcm_core::partition::{self, RcParams};
use rcm_core::rank2::Rank2Frame;
use rcm_core::subgraph_poly::{self, SubgraphVector};

fn caps() -> Caps {
    Caps::default()
}

/// Random simple graph on up to 6 vertices as an edge subset of K6.
fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=6, any::<u16>()).prop_map(|(n, bits)| {
        let mut edges = Vec::new();
        let mut idx = 0;
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if bits >> idx & 1 == 1 {
                    edges.push((u, v));
                }
                idx += 1;
            }
        }
        Graph::new(n, edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn component_count_bounds(g in small_graph(), bits in any::<u64>()) {
        let a = EdgeSubset(bits & EdgeSubset::full(g.m()).0);
        let k = graphs::components(&g, a);
        prop_assert!(k <= g.n());
        prop_assert!(k >= g.n().saturating_sub(a.len() as usize));
        prop_assert_eq!(graphs::components(&g, EdgeSubset::EMPTY), g.n());
    }

    #[test]
    fn zero_weight_collapses_to_q_power(g in small_graph(), q in 0.5f64..6.0) {
        let z = partition::z_rc(&g, RcParams::new(q, 0.0).unwrap(), &caps()).unwrap();
        let expect = q.powi(g.n() as i32);
        prop_assert!((z - expect).abs() <= 1e-12 * expect.abs());
    }

    #[test]
    fn tutte_route_agrees(g in small_graph(), q in 0.5f64..6.0, w in 0.05f64..4.0) {
        let p = RcParams::new(q, w).unwrap();
        let a = partition::z_rc(&g, p, &caps()).unwrap();
        let b = partition::z_rc_via_tutte(&g, p, &caps()).unwrap();
        let scale = a.abs().max(b.abs()).max(1.0);
        prop_assert!((a - b).abs() <= 1e-10 * scale, "{} vs {}", a, b);
    }

    #[test]
    fn rotation_preserves_gram(
        a1 in 0.1f64..3.0, a2 in 0.1f64..3.0,
        b1 in -3.0f64..3.0, b2 in -3.0f64..3.0,
        t in 0.0f64..std::f64::consts::TAU,
    ) {
        let f = Rank2Frame { a1, a2, b1, b2 };
        let (n11, n12, n22) = f.gram();
        let r = f.rotate(t);
        let (m11, m12, m22) = r.gram();
        prop_assert!((n11 - m11).abs() <= 1e-12 * (1.0 + n11.abs()));
        prop_assert!((n12 - m12).abs() <= 1e-12 * (1.0 + n12.abs()));
        prop_assert!((n22 - m22).abs() <= 1e-12 * (1.0 + n22.abs()));
    }

    #[test]
    fn graded_form_evaluates_to_plain_form(
        seed in 0u64..500,
        x0 in -2.0f64..2.0, x1 in -2.0f64..2.0, x2 in -2.0f64..2.0, x3 in -2.0f64..2.0,
    ) {
        let g = graphs::random_regular(8, 3, seed).unwrap();
        let x = SubgraphVector::new(vec![x0, x1, x2, x3]).unwrap();
        let direct = subgraph_poly::f_eval(&g, &x, &caps()).unwrap();
        let graded = subgraph_poly::f_z_coeffs(&g, &x, &caps()).unwrap();
        let scale = direct.abs().max(1.0);
        prop_assert!((graded.eval(1.0) - direct).abs() <= 1e-10 * scale);
        // total count of subsets is invariant in the all-ones weight
        let ones = SubgraphVector::new(vec![1.0; 4]).unwrap();
        let count = subgraph_poly::f_eval(&g, &ones, &caps()).unwrap();
        prop_assert!((count - 4096.0).abs() < 1e-9);
    }
}
