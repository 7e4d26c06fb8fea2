//! Acceptance criteria, one test per criterion. Each test prints a single
//! `PASS`/`FAIL` line (visible with `--nocapture`) before asserting.

use std::time::Instant;

use blockcolor::characterization::{find_decomposition, generate_with_alphamin, replay, verify_certificate, CharError};
use blockcolor::decomposition::decompose;
use blockcolor::families::clique_with_pendants;
use blockcolor::gls::{build_gls, color_nplus2, color_uniform, color_uniform_with, BinPackingInstance, Deferral};
use blockcolor::invariants::{alpha_min, bounds_report_with_cap, is_ais};
use blockcolor::oracle::{
    brute_alpha_min, check_coloring, enumerate_block_graphs, equitable_chromatic_number, filter_count_block_graphs,
    maximum_independent_sets, spectrum, DEFAULT_NODE_BUDGET,
};
use blockcolor::sweep::{run_sweep, SweepCheck, SweepOptions};

fn report(id: u32, name: &str, pass: bool, detail: String) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} [{status}] {name}: {detail}");
    assert!(pass, "criterion {id} ({name}) failed: {detail}");
}

fn uniform_instances(a_max: usize, n_max: usize, k_max: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=a_max {
        for n in 1..=n_max {
            for k in 1..=k_max {
                if (a * n) % k == 0 && a <= a * n / k {
                    out.push((a, n, k, a * n / k));
                }
            }
        }
    }
    out
}

/// Multisets of item sizes in `1..=cap` summing to `total`, largest first.
fn partitions(total: usize, cap: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=cap.min(total)).rev() {
        for mut rest in partitions(total - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn criterion_01_dc_at_most_alpha_min_up_to_nine() {
    let opts = SweepOptions::new(9);
    let r = run_sweep(SweepCheck::DcLeAlphaMin, &opts).unwrap();
    report(
        1,
        "dc <= alpha_min sweep",
        r.passed() && r.skipped == 0 && r.scope.graphs == 759,
        format!(
            "{} graphs, {} skipped, {} violations, {} ms",
            r.scope.graphs,
            r.skipped,
            r.violations.len(),
            r.runtime_ms
        ),
    );
}

#[test]
fn criterion_02_conjecture_window_up_to_nine() {
    let opts = SweepOptions::new(9);
    let r = run_sweep(SweepCheck::Conjecture, &opts).unwrap();
    report(
        2,
        "L <= chi_eq <= L + 1 sweep",
        r.passed() && r.skipped == 0 && r.scope.graphs == 759,
        format!(
            "{} graphs, {} undecided, {} violations, {} ms",
            r.scope.graphs,
            r.skipped,
            r.violations.len(),
            r.runtime_ms
        ),
    );
}

#[test]
fn criterion_03_pendant_family_has_gap_one() {
    let mut ok = true;
    let mut details = Vec::new();
    for k in [2usize, 3] {
        let start = Instant::now();
        let g = clique_with_pendants(k);
        let p = bounds_report_with_cap(&g, 0).unwrap();
        let chi = equitable_chromatic_number(&g, DEFAULT_NODE_BUDGET).unwrap();
        ok &= chi == k + 2 && p.lower_bound == k + 1;
        details.push(format!(
            "k={k}: n={} L={} chi_eq={chi} ({:?})",
            g.n(),
            p.lower_bound,
            start.elapsed()
        ));
    }
    report(3, "clique-with-pendants family", ok, details.join("; "));
}

#[test]
fn criterion_04_example_closed_forms() {
    let inst = BinPackingInstance::new(vec![3, 3, 3, 3], 3, 4).unwrap();
    let g = build_gls(&inst).unwrap();
    let order = g.graph.n();
    let omega = decompose(&g.graph).omega();
    let amin = alpha_min(&g.graph).unwrap().0;
    report(
        4,
        "GLS closed forms on the example instance",
        order == 68 && omega == 4 && amin == 17,
        format!("|V|={order} omega={omega} alpha_min={amin}"),
    );
}

#[test]
fn criterion_05_uniform_algorithm() {
    let mut cases = 0;
    let mut failures = Vec::new();
    let mut literal_failures = 0;
    for (a, n, k, b) in uniform_instances(3, 4, 3) {
        for t in k + 2..=k + 6 {
            cases += 1;
            match color_uniform(a, n, k, b, t) {
                Ok(res) => {
                    let check = check_coloring(&res.gls.graph, &res.coloring).unwrap();
                    let inv = res.matrix.check_invariants();
                    if !(check.proper && check.equitable) || inv.is_err() {
                        failures.push(format!("a={a} n={n} k={k} B={b} t={t}: {check:?} {inv:?}"));
                    }
                }
                Err(e) => failures.push(format!("a={a} n={n} k={k} B={b} t={t}: {e}")),
            }
            let literal = color_uniform_with(a, n, k, b, t, Deferral::FirstEmptyLaterRow);
            let literal_ok = literal
                .map(|res| {
                    let c = check_coloring(&res.gls.graph, &res.coloring).unwrap();
                    c.proper && c.equitable && res.matrix.check_invariants().is_ok()
                })
                .unwrap_or(false);
            if !literal_ok {
                literal_failures += 1;
            }
        }
    }
    println!("criterion  5 [INFO] first-empty-later-row deferral fails {literal_failures} of {cases} cases");
    report(
        5,
        "uniform GLS t-colouring",
        failures.is_empty() && cases > 0,
        format!("{cases} cases, {} failures {:?}", failures.len(), failures),
    );
}

#[test]
fn criterion_06_uniform_spectrum_gap_free() {
    let mut instances = 0;
    let mut failures = Vec::new();
    for (a, n, k, b) in uniform_instances(20, 20, 20) {
        if (k + 1) * (k * b + n + 1) > 20 {
            continue;
        }
        let inst = BinPackingInstance::uniform(a, n, k, b).unwrap();
        let g = build_gls(&inst).unwrap();
        let nv = g.graph.n();
        let s = spectrum(&g.graph, nv, DEFAULT_NODE_BUDGET).unwrap();
        instances += 1;
        let chi_ok = (s.chi_eq == Some(k + 1)) == (b % a == 0);
        let above_ok = (k + 2..=nv).all(|t| s.feasible.contains(&t));
        if !(chi_ok && above_ok && s.unknown.is_empty()) {
            failures.push(format!("a={a} n={n} k={k} B={b}: {s:?}"));
        }
    }
    report(
        6,
        "uniform GLS spectrum",
        failures.is_empty() && instances >= 5,
        format!("{instances} instances, {} failures {:?}", failures.len(), failures),
    );
}

#[test]
fn criterion_07_nplus2_colouring() {
    let mut instances = vec![BinPackingInstance::new(vec![3, 3, 3, 3], 3, 4).unwrap()];
    for k in 1..=3usize {
        for b in 1..=4usize {
            for items in partitions(k * b, b) {
                instances.push(BinPackingInstance::new(items, k, b).unwrap());
            }
        }
    }
    let mut failures = Vec::new();
    let mut example_sizes = Vec::new();
    for (i, inst) in instances.iter().enumerate() {
        let g = build_gls(inst).unwrap();
        match color_nplus2(&g) {
            Ok(c) => {
                let check = check_coloring(&g.graph, &c).unwrap();
                if !(check.proper && check.equitable) || c.t != inst.items.len() + 2 {
                    failures.push(format!("{inst:?}: {check:?}"));
                }
                if i == 0 {
                    example_sizes = c.class_sizes();
                    example_sizes.sort_unstable();
                }
            }
            Err(e) => failures.push(format!("{inst:?}: {e}")),
        }
    }
    let example_ok = example_sizes == vec![11, 11, 11, 11, 12, 12];
    report(
        7,
        "(n+2)-colouring of GLS graphs",
        failures.is_empty() && example_ok && instances.len() >= 20,
        format!(
            "{} instances, example sizes {example_sizes:?}, {} failures {:?}",
            instances.len(),
            failures.len(),
            failures
        ),
    );
}

#[test]
fn criterion_08_ais_matches_definition() {
    let graphs = enumerate_block_graphs(8).unwrap();
    let mut checked = 0;
    let mut disagreements = Vec::new();
    for g in &graphs {
        let sets = maximum_independent_sets(g, 64).unwrap();
        for w in 0..g.n() {
            checked += 1;
            let oracle = sets.iter().all(|s| s.contains(&w));
            if is_ais(g, w).unwrap() != oracle {
                disagreements.push(format!("{:?} w={w}", g.edges().collect::<Vec<_>>()));
            }
        }
    }
    report(
        8,
        "AIS test vs all maximum independent sets",
        disagreements.is_empty(),
        format!(
            "{} graphs, {checked} vertices, {} disagreements {:?}",
            graphs.len(),
            disagreements.len(),
            disagreements
        ),
    );
}

#[test]
fn criterion_09_characterization_round_trip() {
    let mut gen_failures = Vec::new();
    for seed in 0..200u64 {
        let r = 1 + (seed % 5) as usize;
        let outcome = generate_with_alphamin(r, 3, seed).and_then(|(_, cert)| {
            let rep = verify_certificate(&cert)?;
            let graphs = replay(&cert)?;
            let prefixes_ok = graphs
                .iter()
                .enumerate()
                .all(|(i, g)| brute_alpha_min(g, 64).ok() == Some(i + 1));
            Ok(rep.valid && rep.r == r && prefixes_ok)
        });
        if !matches!(outcome, Ok(true)) {
            gen_failures.push(format!("seed {seed} r={r}: {outcome:?}"));
        }
    }
    let mut decomposed = 0;
    let mut skipped = 0;
    let mut dec_failures = Vec::new();
    for g in enumerate_block_graphs(8).unwrap() {
        match find_decomposition(&g) {
            Err(CharError::NoCutVertex | CharError::NoCutVertexWitness) => skipped += 1,
            Ok(Some(d)) => {
                let rep = verify_certificate(&d.certificate).unwrap();
                if rep.valid && rep.r == brute_alpha_min(&g, 64).unwrap() {
                    decomposed += 1;
                } else {
                    dec_failures.push(format!("{:?}: {:?}", g.edges().collect::<Vec<_>>(), rep.violation));
                }
            }
            other => dec_failures.push(format!("{:?}: {other:?}", g.edges().collect::<Vec<_>>())),
        }
    }
    report(
        9,
        "certificate generation and recovery",
        gen_failures.is_empty() && dec_failures.is_empty(),
        format!(
            "200 generated ({} failures); {decomposed} decomposed, {skipped} without cut-vertex witness, {} failures {:?} {:?}",
            gen_failures.len(),
            dec_failures.len(),
            gen_failures,
            dec_failures
        ),
    );
}

#[test]
fn criterion_10_enumerator_matches_filter_oracle() {
    let fixture: serde_json::Value =
        serde_json::from_str(include_str!("fixtures/block_graph_counts.json")).unwrap();
    let pinned: Vec<usize> = serde_json::from_value(fixture["counts"].clone()).unwrap();
    let graphs = enumerate_block_graphs(6).unwrap();
    let enumerated: Vec<usize> = (1..=6).map(|n| graphs.iter().filter(|g| g.n() == n).count()).collect();
    let filtered: Vec<usize> = (1..=6).map(|n| filter_count_block_graphs(n).unwrap()).collect();
    report(
        10,
        "enumerator vs filter oracle",
        enumerated == filtered && filtered == pinned,
        format!("enumerated {enumerated:?}, filtered {filtered:?}, pinned {pinned:?}"),
    );
}
