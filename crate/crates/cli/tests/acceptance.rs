//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use laglab_core::lagrangian::kkt_check;
use laglab_core::verify::{
    all_configurations, check_delta_bound, check_support_bound, check_theorem_inequality, delta_range,
    sweep, VerifyOptions,
};
use laglab_core::{binomial, enumerate_left_compressed, lagrangian, Edge, RGraph, SolverOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(limit: Duration, elapsed: Duration) -> bool {
    elapsed <= limit
}

fn laglab(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_laglab"))
        .args(args)
        .env_remove("LAGLAB_SEED")
        .output()
        .expect("binary runs")
}

/// Largest clique by checking every vertex subset.
fn brute_clique(g: &RGraph) -> u32 {
    let n = g.n();
    let adjacent = |i: u32, j: u32| g.contains(&Edge::new(vec![i.min(j), i.max(j)]).unwrap());
    (0u32..1 << n)
        .filter(|mask| {
            let vs: Vec<u32> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            vs.iter()
                .enumerate()
                .all(|(k, &i)| vs[k + 1..].iter().all(|&j| adjacent(i, j)))
        })
        .map(|mask| mask.count_ones())
        .max()
        .unwrap_or(0)
}

fn clique_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let opts = SolverOptions::default();
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let n = rng.gen_range(2..=9u32);
        let p = rng.gen_range(0.1..0.95);
        let g = RGraph::from_ranks(2, n, (0..binomial(n as u64, 2)).filter(|_| rng.gen_bool(p))).unwrap();
        let w = brute_clique(&g);
        let expected = if g.is_empty() { 0.0 } else { 0.5 * (1.0 - 1.0 / w as f64) };
        worst = worst.max((lagrangian(&g, &opts).value - expected).abs());
    }
    let el = start.elapsed();
    outcome(
        worst <= 1e-7 && within(Duration::from_secs(120), el),
        format!("200 random 2-graphs, n <= 9: max |error| = {worst:.2e} (tol 1e-7), {el:.1?}"),
    )
}

fn complete_graphs() -> Outcome {
    let opts = SolverOptions::default();
    let mut worst = 0.0f64;
    for t in 3..=8u32 {
        let exact = binomial(t as u64, 3) as f64 / (t as f64).powi(3);
        worst = worst.max((lagrangian(&RGraph::complete(3, t), &opts).value - exact).abs());
    }
    outcome(worst <= 1e-8, format!("[t]^(3), t = 3..8: max |error| = {worst:.2e} (tol 1e-8)"))
}

fn plateau() -> Outcome {
    let start = Instant::now();
    let opts = SolverOptions::default();
    let mut worst = 0.0f64;
    let mut cells = 0;
    for t in 5..=7u64 {
        let flat = binomial(t - 1, 3) as f64 / ((t - 1) as f64).powi(3);
        let lo = binomial(t - 1, 3);
        for m in lo..=lo + binomial(t - 2, 2) {
            worst = worst.max((lagrangian(&RGraph::colex(3, m), &opts).value - flat).abs());
            cells += 1;
        }
    }
    let el = start.elapsed();
    outcome(
        worst <= 1e-7 && within(Duration::from_secs(60), el),
        format!("{cells} colex graphs on the flat window, t = 5..7: max deviation {worst:.2e} (tol 1e-7), {el:.1?}"),
    )
}

/// Run `sweep --t-max N` through the binary and check every cell.
fn sweep_cells_pass(t_max: &str) -> (bool, usize, f64, Duration) {
    let start = Instant::now();
    let out = laglab(&["sweep", "--t-max", t_max]);
    let el = start.elapsed();
    let text = String::from_utf8(out.stdout).unwrap();
    let mut ok = out.status.code() == Some(0);
    let mut worst_gap = f64::INFINITY;
    let mut cells = 0;
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        let gap: f64 = v["gap"].to_string().parse().unwrap();
        worst_gap = worst_gap.min(gap);
        ok &= gap >= -1e-7 && v["all_pass"] == true && v["colex_among_witnesses"] == true;
        cells += 1;
    }
    (ok, cells, worst_gap, el)
}

fn exhaustive_sweep() -> Outcome {
    let (ok, cells, gap, el) = sweep_cells_pass("6");
    let pass = ok && cells == 22 && within(Duration::from_secs(600), el);
    outcome(
        pass,
        format!("sweep --t-max 6: {cells} cells, min gap {gap:.2e}, colex always a witness, {el:.1?}"),
    )
}

fn stretch_sweep() -> Outcome {
    let (ok, cells, gap, el) = sweep_cells_pass("7");
    outcome(
        ok && within(Duration::from_secs(7200), el),
        format!("sweep --t-max 7: {cells} cells, min gap {gap:.2e}, {el:.1?}"),
    )
}

fn configurations() -> Outcome {
    let start = Instant::now();
    let opts = SolverOptions::default();
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut families = BTreeSet::new();
    for t in [7u32, 8, 9] {
        for spec in all_configurations(t) {
            match check_theorem_inequality(&spec, &opts) {
                Ok(c) if c.pass && c.certified => {}
                Ok(c) => failures.push(format!("{} at t={t} (margin {:.2e})", c.family, c.margin)),
                Err(e) => failures.push(format!("{} at t={t}: {e}", spec.family)),
            }
            families.insert(spec.family.name());
            checked += 1;
        }
    }
    let el = start.elapsed();
    let pass = failures.is_empty() && families.len() == 12 && within(Duration::from_secs(600), el);
    outcome(
        pass,
        format!(
            "{checked} configurations over {} families at t = 7, 8, 9: {} failures{}, {el:.1?}",
            families.len(),
            failures.len(),
            if failures.is_empty() { String::new() } else { format!(" [{}]", failures.join("; ")) }
        ),
    )
}

fn structural() -> Outcome {
    let opts = SolverOptions::default();
    let mut notes = Vec::new();
    let mut pass = true;

    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut mono = 0;
    for _ in 0..500 {
        let n = rng.gen_range(4..=7u32);
        let big = RGraph::from_ranks(3, n, (0..binomial(n as u64, 3)).filter(|_| rng.gen_bool(0.5))).unwrap();
        let small = RGraph::new(3, n, big.edges().iter().filter(|_| rng.gen_bool(0.6)).cloned()).unwrap();
        if lagrangian(&small, &opts).value <= lagrangian(&big, &opts).value + 1e-9 {
            mono += 1;
        }
    }
    pass &= mono == 500;
    notes.push(format!("monotone {mono}/500"));

    let mut solves = 0;
    let mut skipped = 0;
    let mut worst_pair = 0.0f64;
    let mut ordered = true;
    for t in 4..=7u32 {
        for m in 1..=binomial(t as u64, 3) as usize {
            for g in enumerate_left_compressed(t, m).unwrap() {
                let res = lagrangian(&g, &opts);
                if !res.certified {
                    skipped += 1;
                    continue;
                }
                solves += 1;
                let rep = kkt_check(&g, &res.weighting, res.value, opts.support_threshold).unwrap();
                worst_pair = worst_pair.max(rep.pair_equation_residual.unwrap_or(f64::INFINITY));
                ordered &= res.weighting.as_slice().windows(2).all(|w| w[0] >= w[1]);
            }
        }
    }
    pass &= worst_pair <= 1e-8 && ordered && solves > 0;
    notes.push(format!(
        "{solves} certified compressed solves ({skipped} uncertified): pair residual {worst_pair:.2e}, ordered {ordered}"
    ));

    let reports = sweep(6, &VerifyOptions::default()).unwrap();
    let bounds = reports.iter().map(check_support_bound).collect::<Vec<_>>();
    let witnesses: usize = bounds.iter().map(|b| b.witnesses.len()).sum();
    let support_ok = bounds.iter().all(|b| b.pass && b.edge_bound && b.vertex_bound);
    pass &= support_ok;
    notes.push(format!("support bounds on {witnesses} witnesses {support_ok}"));

    let mut delta_cells = 0;
    let mut delta_ok = true;
    for t in 5..=6u32 {
        for a in delta_range(t) {
            delta_ok &= check_delta_bound(t, a, &VerifyOptions::default()).is_ok_and(|c| c.pass);
            delta_cells += 1;
        }
    }
    pass &= delta_ok;
    notes.push(format!("difference bound on {delta_cells} cells {delta_ok}"));

    outcome(pass, notes.join("; "))
}

fn all_triples(t: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for c in 3..=t {
        for b in 2..c {
            for a in 1..b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn enumeration_oracle() -> Outcome {
    let start = Instant::now();
    let mut mismatches = 0;
    let mut cells = 0;
    for t in 3..=5u32 {
        let triples = all_triples(t);
        let mut counts = vec![0u64; triples.len() + 1];
        for mask in 0u64..1 << triples.len() {
            let set: BTreeSet<[u32; 3]> =
                (0..triples.len()).filter(|k| mask >> k & 1 == 1).map(|k| triples[k]).collect();
            let closed = set.iter().all(|e| {
                (0..3).all(|pos| {
                    (1..e[pos]).filter(|v| !e.contains(v)).all(|v| {
                        let mut f = *e;
                        f[pos] = v;
                        f.sort();
                        set.contains(&f)
                    })
                })
            });
            if closed {
                counts[set.len()] += 1;
            }
        }
        for (m, &want) in counts.iter().enumerate() {
            cells += 1;
            if enumerate_left_compressed(t, m).unwrap().count() as u64 != want {
                mismatches += 1;
            }
        }
    }
    let el = start.elapsed();
    outcome(
        mismatches == 0 && within(Duration::from_secs(60), el),
        format!("{cells} (t, m) pairs with t <= 5: {mismatches} mismatches, {el:.1?}"),
    )
}

fn determinism() -> Outcome {
    let one = laglab(&["sweep", "--t-max", "5", "--workers", "1"]);
    let eight = laglab(&["sweep", "--t-max", "5", "--workers", "8"]);
    let same = one.stdout == eight.stdout && !one.stdout.is_empty();
    outcome(
        same && one.status.success() && eight.status.success(),
        format!("sweep --t-max 5 with 1 and 8 workers: {} bytes, identical {same}", one.stdout.len()),
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("2-graph clique oracle", clique_oracle),
        ("complete 3-graph values", complete_graphs),
        ("colex plateau", plateau),
        ("exhaustive sweep to t = 6", exhaustive_sweep),
        ("configuration families", configurations),
        ("structural invariants", structural),
        ("enumeration oracle", enumeration_oracle),
        ("determinism across workers", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += usize::from(!o.pass);
        println!("criterion {} {name}: {} ({})", k + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    let s = stretch_sweep();
    println!("stretch (non-gating) sweep to t = 7: {} ({})", if s.pass { "PASS" } else { "FAIL" }, s.detail);
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
