//! Cell verification and the explicit configuration families.

use laglab_core::lagrangian::symmetry_classes;
use laglab_core::verify::*;
use laglab_core::{binomial, enumerate_left_compressed, lagrangian, SolverOptions};

fn opts() -> VerifyOptions {
    VerifyOptions::default()
}

#[test]
fn every_cell_up_to_six_passes_with_colex_among_the_witnesses() {
    let reports = sweep(6, &opts()).unwrap();
    assert_eq!(reports.len(), 4 + 7 + 11);
    for r in &reports {
        assert!(r.all_pass, "cell ({}, {}) failed: gap {}", r.t, r.m, r.gap);
        assert!(r.colex_among_witnesses, "({}, {})", r.t, r.m);
        assert!(r.max_value >= r.colex_value - 1e-9);
        assert_eq!(r.uncertified, 0);
        let count = enumerate_left_compressed(r.t, r.m as usize).unwrap().count() as u64;
        assert_eq!(r.graph_count, count);

        let s = check_support_bound(r);
        assert!(s.edge_bound && s.vertex_bound && s.pass, "{s:?}");
    }
}

#[test]
fn sweep_order_is_by_cell() {
    let reports = sweep(5, &opts()).unwrap();
    let keys: Vec<(u32, u64)> = reports.iter().map(|r| (r.t, r.m)).collect();
    assert_eq!(keys, sweep_cells(5));
    assert_eq!(keys.first(), Some(&(4, 1)));
    assert_eq!(keys.last(), Some(&(5, 10)));
}

#[test]
fn low_end_of_the_window_holds_for_all_three_slacks() {
    for t in 5..=7 {
        for slack in [t as u64 - 1, t as u64 - 4, t as u64 - 5] {
            for m in lower_window(t, slack) {
                let r = verify_cell(t, m, &opts()).unwrap();
                assert!(r.gap >= -1e-7 && r.all_pass, "({t}, {m})");
            }
        }
    }
}

#[test]
fn near_complete_cells_at_seven() {
    for m in near_complete_window(7) {
        let r = verify_cell(7, m, &opts()).unwrap();
        assert!(r.all_pass, "m = {m}");
    }
}

#[test]
fn delta_bound_on_plateau_cells() {
    for t in 5..=6 {
        for a in delta_range(t) {
            let c = check_delta_bound(t, a, &opts()).unwrap();
            assert_eq!(c.bound, 2 * (t as i64 - a - 2));
            assert!(c.pass, "{c:?}");
        }
    }
}

#[test]
fn witnesses_are_canonical_and_sorted() {
    let r = verify_cell(6, 16, &opts()).unwrap();
    assert!(r.witnesses.len() >= 2);
    let ranks: Vec<Vec<u64>> = r
        .witnesses
        .iter()
        .map(|w| {
            laglab_core::RGraph::parse_edge_list(&w.edges)
                .unwrap()
                .ranks()
                .collect()
        })
        .collect();
    let mut sorted = ranks.clone();
    sorted.sort();
    assert_eq!(ranks, sorted);
    for w in &r.witnesses {
        assert!((w.value - r.max_value).abs() <= WITNESS_TOL);
    }
}

#[test]
fn every_configuration_at_seven_and_eight_passes() {
    let solver = SolverOptions::default();
    let mut seen = std::collections::BTreeSet::new();
    for t in [7, 8, 9] {
        for spec in all_configurations(t) {
            let g = build_configuration(&spec).unwrap();
            assert!(g.is_left_compressed());
            assert_eq!(g.m() as u64, binomial(t as u64, 3) - spec.family.a() as u64);
            let check = check_theorem_inequality(&spec, &solver).unwrap();
            assert!(check.certified, "{check:?}");
            assert!(check.pass && check.margin >= -INEQUALITY_TOL, "{check:?}");
            seen.insert(spec.family.name());
        }
    }
    // Every family has at least one in-range member among these t.
    assert_eq!(seen.len(), 1 + 5 + 6, "{seen:?}");
}

#[test]
fn corner_optimum_has_three_weight_classes() {
    for t in [8u32, 9, 10] {
        let spec = ConfigurationSpec::new(t, Family::Corner { a: 6 });
        let g = build_configuration(&spec).unwrap();
        let classes = symmetry_classes(&g).unwrap();
        let expect: Vec<Vec<u32>> = vec![(1..=t - 5).collect(), (t - 4..=t - 1).collect(), vec![t]];
        assert_eq!(classes, expect);

        let res = lagrangian(&g, &SolverOptions::default());
        assert!(res.certified);
        let w = res.weighting.as_slice();
        for class in &expect {
            let first = w[class[0] as usize - 1];
            for &v in class {
                assert!((w[v as usize - 1] - first).abs() <= 1e-8, "{w:?}");
            }
        }
        let (alpha, beta, gamma) = (w[0], w[t as usize - 2], w[t as usize - 1]);
        if t == 8 {
            // Degenerate: the optimum is uniform on the clique [7].
            assert!((alpha - beta).abs() <= 1e-8 && gamma == 0.0, "{w:?}");
        } else {
            assert!(alpha - beta > 1e-8 && beta - gamma > 1e-8 && gamma > 1e-8, "{w:?}");
        }
    }
}
