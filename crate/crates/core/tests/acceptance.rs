//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Expected values come from the brute-force references in
//! `common` or from closed forms computed here.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use gnp_square::coloring::{
    degeneracy_color, exact_chromatic_number, is_k_choosable, three_stage_color, ChoosabilityCaps, ListAssignment,
    ListPolicy,
};
use gnp_square::graph::io::format_edge_list;
use gnp_square::graph::{degeneracy_order, max_subgraph_density, sample_gnp, square, GnpParams};
use gnp_square::harness::{run_sweep, summary_csv, to_jsonl, trials_csv, SweepSpec, TrialConfig};
use gnp_square::params::{compute_params, ParamOverrides, Partition};
use gnp_square::verify::{cor1_counts, cor2_counts, count_type1, count_type2, Claim};
use gnp_square::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xACCE_0000 + tag)
}

/// A small random graph: size uniform in `lo..=hi`, mean degree up to 4.
fn small_graph(r: &mut ChaCha8Rng, lo: usize, hi: usize) -> (Graph, f64) {
    let n = r.random_range(lo..=hi);
    let c = r.random_range(0.0..=4.0f64.min(n as f64));
    (sample_gnp(&GnpParams::new(n, c, r.random())).unwrap(), c)
}

fn squaring() -> Outcome {
    let start = Instant::now();
    let mut r = rng(1);
    let mut mismatches = 0;
    for i in 0..200 {
        let n = r.random_range(1..=64usize);
        let c = [1.0f64, 2.0, 4.0][i % 3].min(n as f64);
        let g = sample_gnp(&GnpParams::new(n, c, r.random())).unwrap();
        if square(&g).edges().collect::<Vec<_>>() != common::square_pairs(&g) {
            mismatches += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        mismatches == 0 && secs < 5.0,
        format!("200 graphs (n <= 64, c in {{1,2,4}}): {mismatches} mismatches, {secs:.2} s (limit 5 s)"),
    )
}

fn coloring_soundness() -> Outcome {
    let start = Instant::now();
    let (mut trials, mut bad) = (0, Vec::new());
    for n in [1_000, 10_000, 100_000] {
        for c in [0.5, 1.0, 2.0, 5.0] {
            for seed in 0..20 {
                trials += 1;
                let g1 = sample_gnp(&GnpParams::new(n, c, seed)).unwrap();
                let g2 = square(&g1);
                let params = compute_params(&g1, c, &ParamOverrides::default()).unwrap();
                let (coloring, m) = three_stage_color(&g1, &g2, &params, &ListPolicy::adaptive()).unwrap();
                let ok = common::is_proper(&g2, coloring.colors())
                    && m.colors_used > g1.max_degree()
                    && m.q_min <= g2.max_degree() + 1;
                if !ok {
                    bad.push((n, c, seed));
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        bad.is_empty() && secs < 600.0,
        format!("{trials} trials: {} failures {:?}, {secs:.1} s (limit 600 s)", bad.len(), bad),
    )
}

fn square_edge_mean() -> Outcome {
    let (n, c) = (10_000usize, 2.0f64);
    let nf = n as f64;
    let expected = (c * c * (nf - 1.0) * (nf - 2.0) + c * nf * nf) / (2.0 * nf);
    let cap = c * (c + 1.0) * nf;
    let counts: Vec<usize> = (0..100)
        .map(|seed| square(&sample_gnp(&GnpParams::new(n, c, seed)).unwrap()).num_edges())
        .collect();
    let mean = counts.iter().sum::<usize>() as f64 / counts.len() as f64;
    let max = *counts.iter().max().unwrap();
    let rel = (mean - expected).abs() / expected;
    outcome(
        rel <= 0.02 && (max as f64) < cap,
        format!(
            "100 seeds: mean {mean:.1} vs {expected:.4} (rel. error {:.3}%, limit 2%), max {max} (limit < {cap})",
            100.0 * rel
        ),
    )
}

fn degeneracy_lists() -> Outcome {
    let mut r = rng(4);
    let mut failures = 0;
    for _ in 0..500 {
        let (g1, _) = small_graph(&mut r, 1, 30);
        // Squares give denser instances than the sampled graphs themselves.
        let g = if r.random_bool(0.5) { square(&g1) } else { g1 };
        let k = degeneracy_order(&g).degeneracy + 1;
        // A palette barely above k forces heavy overlap between lists.
        let palette = k + r.random_range(0..=k);
        let lists = ListAssignment::random(g.num_vertices(), k, palette, r.random());
        match degeneracy_color(&g, &lists) {
            Ok(col) if common::is_proper(&g, col.colors())
                && (0..g.num_vertices()).all(|v| lists.contains(v, col.color(v).unwrap())) => {}
            _ => failures += 1,
        }
    }
    outcome(failures == 0, format!("500 graphs (n <= 30), (degeneracy+1)-lists: {failures} failures"))
}

fn oracle_sandwich() -> Outcome {
    let start = Instant::now();
    let mut r = rng(5);
    let (mut failures, mut choosability_runs) = (Vec::new(), 0);
    let caps = ChoosabilityCaps { max_n: 9, max_k: 9 };
    for i in 0..100 {
        let (g1, c) = small_graph(&mut r, 1, 9);
        let g2 = square(&g1);
        // Below 17 vertices the degree formula is undefined; fix theta.
        let ov = ParamOverrides {
            theta: Some(0.5),
            ..Default::default()
        };
        let params = compute_params(&g1, c, &ov).unwrap();
        let (_, m) = three_stage_color(&g1, &g2, &params, &ListPolicy::adaptive()).unwrap();
        let chi = exact_chromatic_number(&g2, 16).unwrap();
        let mut ok = g1.max_degree() < chi && chi <= m.colors_used;
        if g1.num_vertices() <= 6 {
            choosability_runs += 1;
            let choice = (1..=g2.num_vertices())
                .find(|&k| is_k_choosable(&g2, k, caps).unwrap().is_choosable())
                .unwrap();
            ok &= chi <= choice;
        }
        if !ok {
            failures.push(i);
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "100 graphs (n <= 9), {choosability_runs} with exact choice number: {} failures, {:.1} s",
            failures.len(),
            start.elapsed().as_secs_f64()
        ),
    )
}

fn density_cross_check() -> Outcome {
    let mut r = rng(6);
    let (mut wrong, mut sandwich) = (0, 0);
    for _ in 0..200 {
        let (g1, _) = small_graph(&mut r, 1, 15);
        let g = if r.random_bool(0.5) { square(&g1) } else { g1 };
        let found = max_subgraph_density(&g).unwrap();
        let (num, den) = (*found.density.numer() as usize, *found.density.denom() as usize);
        let (e, s) = common::densest_by_enumeration(&g);
        if num * s != e * den {
            wrong += 1;
        }
        let d = degeneracy_order(&g).degeneracy;
        if !(num <= d * den && d * den <= 2 * num) {
            sandwich += 1;
        }
    }
    outcome(
        wrong == 0 && sandwich == 0,
        format!("200 graphs (n <= 15): {wrong} density mismatches, {sandwich} sandwich failures"),
    )
}

fn checker_consistency() -> Outcome {
    let mut r = rng(7);
    let (mut cor, mut types) = (0, 0);
    for seed in 0..50 {
        let n = r.random_range(2..=200usize);
        let c = r.random_range(0.5..=4.0f64.min(n as f64));
        let g1 = sample_gnp(&GnpParams::new(n, c, seed)).unwrap();
        let g2 = square(&g1);
        let eps = [0.3, 0.5, 0.8, 1.0][seed as usize % 4];
        let ov = ParamOverrides {
            theta: Some(0.5),
            epsilon: Some(eps),
            ..Default::default()
        };
        let params = compute_params(&g1, c, &ov).unwrap();
        let part = Partition::new(&g1, &params);
        let (in_v, in_w) = (part.in_v_eps(), part.in_w_eps());
        let dist = common::distances(&g1);
        let near_w = common::near_count(&dist, &in_w);
        let cor2: Vec<Option<usize>> = (0..n).map(|v| (!in_v[v]).then_some(near_w[v])).collect();
        if cor1_counts(&g2, &in_v) != common::near_count(&dist, &in_v) || cor2_counts(&g2, &in_v, &in_w) != cor2 {
            cor += 1;
        }
        for _ in 0..5 {
            let size = r.random_range(1..=n);
            let s = rand::seq::index::sample(&mut r, n, size).into_vec();
            let mut s = s;
            s.sort_unstable();
            let t1 = count_type1(&g1, &s);
            let (hist, a1) = common::type1_by_pairs(&g1, &s);
            if t1.histogram != hist || t1.a1 != a1 || count_type2(&g1, &s) != common::type2_by_triples(&g1, &s) {
                types += 1;
            }
        }
    }
    outcome(
        cor == 0 && types == 0,
        format!("50 seeds (n <= 200): {cor} neighbor-count mismatches, {types} type-count mismatches over 250 subsets"),
    )
}

fn determinism() -> Outcome {
    let spec = SweepSpec {
        ns: vec![300, 2_000],
        cs: vec![1.5, 3.0],
        seeds: (0..4).collect(),
        epsilons: vec![0.5],
        base: TrialConfig::new(0, 0.0, 0).with_checks(Claim::ALL),
    };
    let one = to_jsonl(&run_sweep(&spec, Some(1)).unwrap());
    let many = to_jsonl(&run_sweep(&spec, Some(4)).unwrap());
    let p = GnpParams::new(5_000, 2.0, 11);
    let a = format_edge_list(&sample_gnp(&p).unwrap());
    let b = format_edge_list(&sample_gnp(&p).unwrap());
    let sq = format_edge_list(&square(&sample_gnp(&p).unwrap())) == format_edge_list(&square(&sample_gnp(&p).unwrap()));
    outcome(
        one == many && a == b && sq,
        format!(
            "JSONL ({} bytes) identical across 1 and 4 threads: {}; edge lists identical: {}",
            one.len(),
            one == many,
            a == b && sq
        ),
    )
}

/// Recomputes every summary cell from the raw JSON lines and compares.
fn recompute_summary(jsonl: &str, summary: &str) -> Result<usize, String> {
    let rows: Vec<Value> = jsonl.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let mut lines = summary.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let mut checked = 0;
    for line in lines {
        let cells: BTreeMap<&str, &str> = header.iter().copied().zip(line.split(',')).collect();
        let n: u64 = cells["n"].parse().unwrap();
        let eps: f64 = cells["epsilon"].parse().unwrap();
        let group: Vec<&Value> = rows
            .iter()
            .filter(|r| r["config"]["n"] == n && r["config"]["overrides"]["epsilon"].as_f64() == Some(eps))
            .collect();
        let ratios: Vec<f64> = group
            .iter()
            .map(|r| r["coloring"]["metrics"]["q_min"].as_f64().unwrap() / r["graph"]["max_degree_g1"].as_f64().unwrap())
            .collect();
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        let mut close = |name: &str, want: f64| -> Result<(), String> {
            let got: f64 = cells[name].parse().map_err(|_| format!("{name} unparsable"))?;
            if (got - want).abs() > 1e-12 * want.abs().max(1.0) {
                return Err(format!("n={n} eps={eps} {name}: csv {got} vs recomputed {want}"));
            }
            checked += 1;
            Ok(())
        };
        close("trials", group.len() as f64)?;
        close("q_min_ratio_mean", mean)?;
        close("q_min_ratio_max", ratios.iter().copied().fold(f64::MIN, f64::max))?;
        for (claim, part, column) in [
            ("lemma1", None, "viol_lemma1"),
            ("cor1", None, "viol_cor1"),
            ("cor2", None, "viol_cor2"),
            ("lemma3", None, "viol_lemma3"),
            ("sparse-bounds", Some("combined"), "viol_sparse_combined"),
            ("all-subsets-density", None, "viol_all_subsets_density"),
        ] {
            let verdicts: Vec<bool> = group
                .iter()
                .flat_map(|r| r["checks"].as_array().unwrap().iter())
                .filter(|v| v["claim"] == claim && v["part"].as_str() == part)
                .map(|v| v["holds"].as_bool().unwrap())
                .collect();
            let rate = verdicts.iter().filter(|h| !**h).count() as f64 / verdicts.len() as f64;
            close(column, rate)?;
        }
        let (mut trials, mut violations) = (0.0, 0.0);
        for v in group.iter().flat_map(|r| r["checks"].as_array().unwrap().iter()) {
            if v["claim"] == "sparse-bounds" && v["part"] == "a1" {
                trials += v["tally"]["trials"].as_f64().unwrap();
                violations += v["tally"]["violations"].as_f64().unwrap();
            }
        }
        close("subset_rate_a1", violations / trials)?;
    }
    Ok(checked)
}

fn sweep_trend() -> Outcome {
    let start = Instant::now();
    let spec = SweepSpec {
        ns: vec![1_000, 10_000, 100_000],
        cs: vec![2.0],
        seeds: (0..20).collect(),
        epsilons: vec![0.3, 0.5],
        base: TrialConfig::new(0, 0.0, 0).with_checks(Claim::ALL),
    };
    let records = run_sweep(&spec, None).unwrap();
    let jsonl = to_jsonl(&records);
    let summary = summary_csv(&records);
    let failed = trials_csv(&records).lines().filter(|l| !l.ends_with(",ok")).count() - 1;

    println!("      n  eps  mean q_min/Δ  mean colors/Δ  viol: lemma1 cor1 cor2 lemma3 sparse-comb all-subsets");
    let mut lines = summary.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    for line in lines {
        let cell: BTreeMap<&str, &str> = header.iter().copied().zip(line.split(',')).collect();
        let num = |k: &str| cell[k].parse::<f64>().unwrap_or(f64::NAN);
        println!(
            "  {:>6}  {:.1}  {:>12.3}  {:>13.3}        {:>5.2} {:>4.2} {:>4.2} {:>6.2} {:>11.2} {:>11.2}",
            cell["n"],
            num("epsilon"),
            num("q_min_ratio_mean"),
            num("colors_ratio_mean"),
            num("viol_lemma1"),
            num("viol_cor1"),
            num("viol_cor2"),
            num("viol_lemma3"),
            num("viol_sparse_combined"),
            num("viol_all_subsets_density"),
        );
    }
    match recompute_summary(&jsonl, &summary) {
        Ok(cells) => outcome(
            failed == 0,
            format!(
                "{} trials, {failed} failed; {cells} summary numbers recomputed from JSONL; {:.1} s",
                records.len(),
                start.elapsed().as_secs_f64()
            ),
        ),
        Err(e) => outcome(false, e),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("squaring correctness", squaring),
        ("coloring soundness", coloring_soundness),
        ("square edge count", square_edge_mean),
        ("degeneracy list coloring", degeneracy_lists),
        ("oracle sandwich", oracle_sandwich),
        ("density cross-check", density_cross_check),
        ("checker consistency", checker_consistency),
        ("determinism", determinism),
        ("sweep trend and recomputation", sweep_trend),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("{} {}. {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
