//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use modcomp::census::{cograph_codes, run_census, CensusConfig, CensusMode, CensusReport, Restrict};
use modcomp::generate::{random_bipartite_dh, random_module_composed};
use modcomp::oracles::{class_membership, cograph_module_sequence, contains_induced, is_cograph, ClassId};
use modcomp::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Default)]
struct Witnesses {
    sequences: u64,
    sequence_failures: u64,
    independent: u64,
    independent_failures: u64,
}

impl Witnesses {
    fn sequence(&mut self, g: &Graph, seq: &ModuleSequence) -> bool {
        let ok = verify_module_sequence(g, seq).unwrap_or(false);
        self.sequences += 1;
        self.sequence_failures += u64::from(!ok);
        ok
    }

    fn independent(&mut self, g: &Graph, seq: &ModuleSequence) -> bool {
        let ok = verify_independent_module_sequence(g, seq).unwrap_or(false);
        self.independent += 1;
        self.independent_failures += u64::from(!ok);
        ok
    }

    fn absorb_census(&mut self, report: &CensusReport) {
        self.sequences += report.sequences_verified;
        self.sequence_failures += report.sequence_failures;
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Recognizer against the elimination oracle; returns (graphs, disagreements, yes).
fn compare(g: &Graph, w: &mut Witnesses) -> (bool, bool) {
    let fast = recognize(g);
    let slow = brute_force_recognize(g).expect("n <= 12");
    if let Some(seq) = fast.sequence() {
        w.sequence(g, seq);
    }
    if let Some(seq) = slow.sequence() {
        w.sequence(g, seq);
    }
    (fast.is_yes() == slow.is_yes(), fast.is_yes())
}

fn criterion_1(w: &mut Witnesses) -> Outcome {
    let (mut graphs, mut disagreements, mut yes) = (0u64, 0u64, 0u64);
    let mut tally = |g: &Graph, w: &mut Witnesses| {
        let (agree, y) = compare(g, w);
        graphs += 1;
        disagreements += u64::from(!agree);
        yes += u64::from(y);
    };
    for code in 0..1u64 << 15 {
        tally(&Graph::from_edge_code(6, code), w);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let n = rng.gen_range(7..=10);
        // Sparse and dense graphs are the ones that tend to be module-composed.
        let p = rng.gen_range(0.05..0.95);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        tally(&Graph::from_edges(n, edges).unwrap(), w);
    }
    outcome(
        disagreements == 0 && graphs == 32_768 + 10_000,
        format!("{graphs} graphs, {disagreements} disagreements, {yes} module-composed"),
    )
}

/// All labeled trees on `n` vertices via Pruefer sequences.
fn labeled_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![Graph::from_edges(n, (n == 2).then_some((0, 1))).unwrap()];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut index| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = index % n;
                    index /= n;
                    d
                })
                .collect();
            let mut degree = vec![1usize; n];
            for &x in &seq {
                degree[x] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &x in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, x));
                degree[leaf] -= 1;
                degree[x] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

fn criterion_2(w: &mut Witnesses) -> Outcome {
    use NamedGraph::*;
    let mut no: Vec<NamedGraph> = (5..=8).map(Cycle).collect();
    no.extend((5..=7).map(CoCycle));
    no.extend([House, Domino, CoK33MinusEdge, Sun(3), CoTwoC4]);
    let mut yes: Vec<(String, Graph)> =
        [Cycle(4), Path(4), Gem].into_iter().map(|g| (g.to_string(), g.build().unwrap())).collect();
    yes.extend((1..=6).map(|k| (format!("K{k}"), Complete(k).build().unwrap())));
    let mut trees = 0;
    for n in 1..=8 {
        for t in labeled_trees(n) {
            assert!(t.is_connected() && t.m() + 1 == n);
            yes.push((format!("tree {t:?}"), t));
            trees += 1;
        }
    }
    let mut wrong = Vec::new();
    for named in &no {
        let g = named.build().unwrap();
        if recognize(&g).is_yes() || brute_force_recognize(&g).unwrap().is_yes() {
            wrong.push(named.to_string());
        }
    }
    for (name, g) in &yes {
        let ok = match recognize(g).into_sequence() {
            Some(seq) => w.sequence(g, &seq),
            None => false,
        };
        if !ok {
            wrong.push(name.clone());
        }
    }
    outcome(
        wrong.is_empty(),
        format!("{} NO graphs, {} YES graphs ({trees} labeled trees), mismatches: {wrong:?}", no.len(), yes.len()),
    )
}

fn criterion_4(w: &mut Witnesses) -> Outcome {
    let cfg = CensusConfig {
        mode: CensusMode::Exhaustive { min_n: 1, max_n: 7 },
        classes: vec![
            ClassId::Bipartite,
            ClassId::HhdgFree,
            ClassId::DominoFree,
            ClassId::HoleFree,
            ClassId::Chordal62,
        ],
        restrict: Restrict::Bipartite,
        max_counterexamples: 3,
        jobs: None,
    };
    let report = run_census(&cfg).expect("census runs");
    w.absorb_census(&report);
    let ids = [
        "bipartite-mc-iff-level-test",
        "bipartite-mc-iff-distance-hereditary",
        "bipartite-mc-iff-domino-hole-free",
        "bipartite-mc-iff-chordal62",
        "recognizer-agrees-with-elimination",
    ];
    let tallies: Vec<_> = ids.iter().map(|id| report.implication(id).unwrap()).collect();
    let complete = tallies.iter().all(|t| t.evaluated == report.graphs_in_scope);
    let violations: u64 = tallies.iter().map(|t| t.violations).sum();
    let mc = report.count(modcomp::census::Feature::Recognized).unwrap().members;
    outcome(
        complete && violations == 0 && report.sequence_failures == 0,
        format!(
            "{} bipartite labeled graphs on <= 7 vertices, {mc} in all four classes, {violations} violations",
            report.graphs_in_scope
        ),
    )
}

/// P4-freeness on adjacency masks: for an edge b-c, a P4 a-b-c-d exists iff
/// some a in N(b) \ N[c] misses some d in N(c) \ N[b].
fn p4_free(masks: &[u64; 8]) -> bool {
    for b in 0..8 {
        let mut higher = masks[b] >> (b + 1) << (b + 1);
        while higher != 0 {
            let c = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            let left = masks[b] & !masks[c] & !(1 << c);
            let right = masks[c] & !masks[b] & !(1 << b);
            if left != 0 && right != 0 {
                let mut l = left;
                while l != 0 {
                    let a = l.trailing_zeros() as usize;
                    l &= l - 1;
                    if right & !masks[a] != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn criterion_5(w: &mut Witnesses) -> Outcome {
    let started = Instant::now();
    let pairs: Vec<(usize, usize)> = (1..8).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    assert_eq!(pairs.len(), 28);
    // Gray-code sweep over all 2^28 labeled graphs on 8 vertices.
    let mut masks = [0u64; 8];
    let mut filtered = Vec::with_capacity(1_400_000);
    for step in 0u64..1 << 28 {
        if step > 0 {
            let (u, v) = pairs[step.trailing_zeros() as usize];
            masks[u] ^= 1 << v;
            masks[v] ^= 1 << u;
        }
        if p4_free(&masks) {
            filtered.push(step ^ (step >> 1));
        }
    }
    filtered.sort_unstable();
    let sweep = started.elapsed();
    let constructive = cograph_codes(8).unwrap();
    let same_family = filtered == constructive;

    let co2c4 = NamedGraph::CoTwoC4.build().unwrap();
    let (mut bad, mut with_co2c4, mut sequences) = (0u64, 0u64, 0u64);
    for &code in &filtered {
        let g = Graph::from_edge_code(8, code);
        let free = contains_induced(&g, &co2c4).unwrap().is_none();
        with_co2c4 += u64::from(!free);
        let mc = brute_force_recognize(&g).unwrap().is_yes();
        let recognized = recognize(&g);
        let seq = cograph_module_sequence(&g).unwrap();
        let seq_ok = match &seq {
            Some(s) => {
                sequences += 1;
                w.sequence(&g, s)
            }
            None => true,
        };
        if let Some(s) = recognized.sequence() {
            w.sequence(&g, s);
        }
        if !is_cograph(&g) || mc != free || recognized.is_yes() != free || seq.is_some() != free || !seq_ok {
            bad += 1;
        }
    }
    // Labeled copies of co-2C4: 8! / |Aut(2C4)| = 40320 / (8 * 8 * 2).
    let expected_co2c4 = 40_320 / 128;
    outcome(
        same_family && filtered.len() == 1_320_064 && with_co2c4 == expected_co2c4 && bad == 0,
        format!(
            "{} labeled cographs on 8 vertices (sweep {:.1?}, matches cotree enumeration: {same_family}), \
             {with_co2c4} contain co-2C4, {sequences} cotree sequences, {bad} mismatches",
            filtered.len(),
            sweep
        ),
    )
}

fn criterion_6(w: &mut Witnesses) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut orders, mut failures) = (0u64, 0u64);
    for seed in 0..1000u64 {
        let n = rng.gen_range(1..=200);
        let g = random_bipartite_dh(n, seed).unwrap();
        for _ in 0..3 {
            let start = rng.gen_range(0..n);
            let order = lex_bfs(&g, start, TieBreak::Seeded(rng.gen())).unwrap();
            orders += 1;
            failures += u64::from(!w.independent(&g, &order));
        }
        if let Some(seq) = independent_module_sequence(&g) {
            w.independent(&g, &seq);
        } else {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{orders} Lex-BFS orders on 1000 graphs, {failures} failures"))
}

fn census_6() -> CensusReport {
    let cfg = CensusConfig {
        mode: CensusMode::Exhaustive { min_n: 1, max_n: 6 },
        classes: Vec::new(),
        restrict: Restrict::All,
        max_counterexamples: 3,
        jobs: None,
    };
    run_census(&cfg).expect("census runs")
}

fn criterion_7(census: &CensusReport, w: &mut Witnesses) -> Outcome {
    let hhds = census.implication("mc-hhds-free").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = 0u64;
    for _ in 0..500 {
        let n = rng.gen_range(1..=7);
        let (g, seq) = random_module_composed(n, rng.gen());
        let recognized = recognize(&g).into_sequence();
        let yes = w.sequence(&g, &seq) && recognized.is_some_and(|s| w.sequence(&g, &s));
        let perfect = class_membership(&g, ClassId::Perfect).unwrap().member;
        let weakly = class_membership(&g, ClassId::WeaklyChordal).unwrap().member;
        failures += u64::from(!(yes && perfect && weakly));
    }
    outcome(
        hhds.violations == 0 && hhds.evaluated == census.graphs_in_scope && failures == 0,
        format!(
            "census n <= 6: {} violations of module-composed => HHDS-free in {}; \
             random YES-sample: {failures} of 500 not perfect or not weakly chordal",
            hhds.violations, hhds.evaluated
        ),
    )
}

fn criterion_8(census: &CensusReport) -> Outcome {
    let tp = census.implication("trivially-perfect-mc").unwrap();
    let co = census.implication("co2c4-p4-free-mc").unwrap();
    let members = |c| census.count(modcomp::census::Feature::Class(c)).unwrap().members;
    outcome(
        tp.violations == 0 && co.violations == 0 && tp.evaluated == census.graphs_in_scope,
        format!(
            "{} trivially perfect and {} (co-2C4, P4)-free graphs among {}, {} violations",
            members(ClassId::TriviallyPerfect),
            members(ClassId::Cograph),
            census.graphs_in_scope,
            tp.violations + co.violations
        ),
    )
}

fn criterion_9(w: &mut Witnesses) -> Outcome {
    let mut slowest = Duration::ZERO;
    let mut all_yes = true;
    for seed in 0..3 {
        let (g, _) = random_module_composed(500, seed);
        let started = Instant::now();
        let result = recognize(&g);
        slowest = slowest.max(started.elapsed());
        all_yes &= result.sequence().is_some_and(|s| w.sequence(&g, s));
    }
    let g = random_bipartite_dh(100_000, 9).unwrap();
    let started = Instant::now();
    let bdh = check_bdh(&g);
    let seq = independent_module_sequence(&g);
    let bdh_time = started.elapsed();
    let seq_ok = seq.is_some_and(|s| w.independent(&g, &s));
    outcome(
        all_yes && bdh && seq_ok && slowest < Duration::from_secs(60) && bdh_time < Duration::from_secs(10),
        format!(
            "recognize n=500: {slowest:.2?} (limit 60s); level test + sequence n=100000, m={}: {bdh_time:.2?} (limit 10s)",
            g.m()
        ),
    )
}

fn main() -> ExitCode {
    // Accept and ignore libtest arguments such as `--nocapture`.
    let mut w = Witnesses::default();
    let mut results: Vec<(u8, Outcome)> = Vec::new();
    let mut run = |k: u8, f: &mut dyn FnMut(&mut Witnesses) -> Outcome, w: &mut Witnesses| {
        let started = Instant::now();
        let o = f(w);
        println!("{} criterion {k}: {} [{:.1?}]", if o.pass { "PASS" } else { "FAIL" }, o.detail, started.elapsed());
        results.push((k, o));
    };
    run(1, &mut criterion_1, &mut w);
    run(2, &mut criterion_2, &mut w);
    run(4, &mut criterion_4, &mut w);
    run(5, &mut criterion_5, &mut w);
    run(6, &mut criterion_6, &mut w);
    let census = census_6();
    w.absorb_census(&census);
    run(7, &mut |w| criterion_7(&census, w), &mut w);
    run(8, &mut |_| criterion_8(&census), &mut w);
    run(9, &mut criterion_9, &mut w);
    let pass3 = w.sequence_failures == 0 && w.independent_failures == 0;
    println!(
        "{} criterion 3: {} module-sequences verified ({} failures), {} independent module-sequences verified ({} failures)",
        if pass3 { "PASS" } else { "FAIL" },
        w.sequences,
        w.sequence_failures,
        w.independent,
        w.independent_failures
    );
    let failed = results.iter().filter(|(_, o)| !o.pass).count() + usize::from(!pass3);
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
