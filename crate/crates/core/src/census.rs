//! Census over exhaustive or random graph families.
//!
//! Every graph in scope is evaluated on a set of [`Feature`]s (class
//! oracles, the recognizer, the level test and the cograph construction) and
//! each [`Implication`] between features is tallied. Work is spread over a
//! rayon pool; partial results merge by an associative, order-independent
//! reduction, so the report depends only on the configuration.
//!
//! Exhaustive mode enumerates labeled graphs by edge code (see
//! [`Graph::from_edge_code`]); counts are labeled counts.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::low_mask;
use crate::oracles::{class_membership, cograph_module_sequence, is_cograph, ClassId};
use crate::{
    check_bdh, independent_module_sequence, recognize, verify_independent_module_sequence, verify_module_sequence,
    Error, Graph, Result,
};

/// Report layout version.
pub const FORMAT_VERSION: u32 = 1;
/// Largest vertex count for exhaustive mode.
pub const MAX_EXHAUSTIVE: usize = 7;
/// Largest vertex count at which the exhaustive elimination oracle runs.
pub const MAX_BRUTE_FORCE: usize = 12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CensusMode {
    /// All labeled graphs with `min_n..=max_n` vertices.
    Exhaustive { min_n: usize, max_n: usize },
    /// `count` random graphs, each with a uniform vertex count in
    /// `min_n..=max_n` and independent edges of probability `p`.
    Random { count: usize, min_n: usize, max_n: usize, p: f64, seed: u64 },
}

/// Restricts the census to a subfamily.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Restrict {
    #[default]
    All,
    Bipartite,
    Cograph,
}

impl std::str::FromStr for Restrict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "all" => Ok(Restrict::All),
            "bipartite" => Ok(Restrict::Bipartite),
            "cograph" | "cographs" => Ok(Restrict::Cograph),
            other => Err(Error::InvalidParameter(format!("unknown restriction `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusConfig {
    pub mode: CensusMode,
    /// Oracles to run. Empty means every oracle whose size limit admits the
    /// largest graph in scope.
    pub classes: Vec<ClassId>,
    pub restrict: Restrict,
    /// Counterexamples stored per implication.
    pub max_counterexamples: usize,
    /// Worker threads; `None` uses the global rayon pool.
    #[serde(skip)]
    pub jobs: Option<usize>,
}

impl CensusConfig {
    pub fn exhaustive(max_n: usize) -> Self {
        CensusConfig {
            mode: CensusMode::Exhaustive { min_n: max_n, max_n },
            classes: Vec::new(),
            restrict: Restrict::All,
            max_counterexamples: 5,
            jobs: None,
        }
    }

    fn max_n(&self) -> usize {
        match self.mode {
            CensusMode::Exhaustive { max_n, .. } | CensusMode::Random { max_n, .. } => max_n,
        }
    }

    /// Checks ranges and oracle size limits; returns the oracles to run.
    pub fn validate(&self) -> Result<Vec<ClassId>> {
        let (min_n, max_n) = match self.mode {
            CensusMode::Exhaustive { min_n, max_n } => {
                crate::guard("exhaustive census", max_n, MAX_EXHAUSTIVE)?;
                (min_n, max_n)
            }
            CensusMode::Random { min_n, max_n, p, .. } => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::InvalidParameter(format!("edge probability {p} is outside [0, 1]")));
                }
                (min_n, max_n)
            }
        };
        if min_n > max_n {
            return Err(Error::InvalidParameter(format!("empty vertex range {min_n}..{max_n}")));
        }
        if self.classes.is_empty() {
            return Ok(ClassId::ALL.into_iter().filter(|c| c.admits(max_n)).collect());
        }
        for &c in &self.classes {
            if let Some(max) = c.max_vertices() {
                crate::guard(c.name(), max_n, max)?;
            }
        }
        let mut classes = self.classes.clone();
        classes.sort();
        classes.dedup();
        Ok(classes)
    }
}

/// A boolean property evaluated on every graph in scope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Feature {
    Class(ClassId),
    /// The tree-driven recognizer answers YES.
    Recognized,
    /// The bipartite distance-hereditary level test succeeds.
    LevelTest,
    /// The cotree construction yields a module-sequence (cographs only).
    CographSequence,
}

const FEATURES: usize = ClassId::ALL.len() + 3;

impl Feature {
    fn index(self) -> usize {
        match self {
            Feature::Class(c) => ClassId::ALL.iter().position(|&x| x == c).unwrap(),
            Feature::Recognized => ClassId::ALL.len(),
            Feature::LevelTest => ClassId::ALL.len() + 1,
            Feature::CographSequence => ClassId::ALL.len() + 2,
        }
    }

    fn all() -> impl Iterator<Item = Feature> {
        ClassId::ALL.into_iter().map(Feature::Class).chain([
            Feature::Recognized,
            Feature::LevelTest,
            Feature::CographSequence,
        ])
    }

    pub fn name(self) -> String {
        match self {
            Feature::Class(c) => c.name().to_string(),
            Feature::Recognized => "recognized".into(),
            Feature::LevelTest => "level-test".into(),
            Feature::CographSequence => "cograph-sequence".into(),
        }
    }
}

/// `scope => (premise => conclusion)`, or `<=>` when `equivalence` is set.
/// Premise and conclusion are conjunctions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Implication {
    pub id: &'static str,
    pub scope: Option<Feature>,
    pub premise: Vec<Feature>,
    pub conclusion: Vec<Feature>,
    pub equivalence: bool,
}

impl Implication {
    pub fn statement(&self) -> String {
        let conj = |fs: &[Feature]| fs.iter().map(|f| f.name()).collect::<Vec<_>>().join(" & ");
        let arrow = if self.equivalence { "<=>" } else { "=>" };
        let body = format!("{} {arrow} {}", conj(&self.premise), conj(&self.conclusion));
        match self.scope {
            Some(s) => format!("[{}] {body}", s.name()),
            None => body,
        }
    }

    /// `None` if some referenced feature was not evaluated.
    fn check(&self, values: &Values) -> Option<bool> {
        if let Some(s) = self.scope {
            if !values.get(s)? {
                return None;
            }
        }
        let all = |fs: &[Feature]| fs.iter().try_fold(true, |acc, &f| Some(acc & values.get(f)?));
        let (p, c) = (all(&self.premise)?, all(&self.conclusion)?);
        Some(if self.equivalence { p == c } else { !p || c })
    }
}

/// The inclusions and equivalences tallied by every census.
pub fn implications() -> Vec<Implication> {
    use ClassId::*;
    use Feature::{Class as C, CographSequence, LevelTest, Recognized};
    let imp = |id, scope, premise: Vec<Feature>, conclusion: Vec<Feature>, equivalence| Implication {
        id,
        scope,
        premise,
        conclusion,
        equivalence,
    };
    vec![
        imp("recognizer-agrees-with-elimination", None, vec![Recognized], vec![C(ModuleComposed)], true),
        imp("mc-hhds-free", None, vec![Recognized], vec![C(HhdsFree)], false),
        imp("mc-perfect", None, vec![Recognized], vec![C(Perfect)], false),
        imp("mc-weakly-chordal", None, vec![Recognized], vec![C(WeaklyChordal)], false),
        imp("hhd-free-weakly-chordal", None, vec![C(HhdFree)], vec![C(WeaklyChordal)], false),
        imp("hhds-free-perfect", None, vec![C(HhdsFree)], vec![C(Perfect)], false),
        imp("trivially-perfect-mc", None, vec![C(TriviallyPerfect)], vec![Recognized], false),
        imp("co2c4-p4-free-mc", None, vec![C(Co2C4Free), C(P4Free)], vec![Recognized], false),
        imp("cograph-mc-iff-co2c4-free", Some(C(Cograph)), vec![Recognized], vec![C(Co2C4Free)], true),
        imp("cograph-sequence-iff-co2c4-free", Some(C(Cograph)), vec![CographSequence], vec![C(Co2C4Free)], true),
        imp("imc-hhdg-free", None, vec![C(IndependentModuleComposed)], vec![C(HhdgFree)], false),
        imp("imc-iff-level-test", None, vec![C(IndependentModuleComposed)], vec![LevelTest], true),
        imp("imc-mc", None, vec![C(IndependentModuleComposed)], vec![Recognized], false),
        imp("bipartite-mc-iff-level-test", Some(C(Bipartite)), vec![Recognized], vec![LevelTest], true),
        imp("bipartite-mc-iff-distance-hereditary", Some(C(Bipartite)), vec![Recognized], vec![C(HhdgFree)], true),
        imp(
            "bipartite-mc-iff-domino-hole-free",
            Some(C(Bipartite)),
            vec![Recognized],
            vec![C(DominoFree), C(HoleFree)],
            true,
        ),
        imp("bipartite-mc-iff-chordal62", Some(C(Bipartite)), vec![Recognized], vec![C(Chordal62)], true),
        imp("cograph-iff-p4-free", None, vec![C(Cograph)], vec![C(P4Free)], true),
        imp("hhds-iff-hhd-and-sun-free", None, vec![C(HhdsFree)], vec![C(HhdFree), C(SunFree)], true),
        imp("trivially-perfect-co2c4-p4-free", None, vec![C(TriviallyPerfect)], vec![C(Co2C4Free), C(P4Free)], false),
    ]
}

#[derive(Clone, Debug, Default)]
struct Values {
    values: [Option<bool>; FEATURES],
    /// Witness per feature for negative class verdicts.
    witnesses: Vec<Option<Vec<usize>>>,
    sequence_checks: u64,
    sequence_failures: u64,
}

impl Values {
    fn get(&self, f: Feature) -> Option<bool> {
        self.values[f.index()]
    }

    fn set(&mut self, f: Feature, v: bool) {
        self.values[f.index()] = Some(v);
    }
}

fn evaluate(g: &Graph, classes: &[ClassId]) -> Result<Values> {
    let mut values = Values { witnesses: vec![None; FEATURES], ..Values::default() };
    let run = |values: &mut Values, c: ClassId| -> Result<()> {
        let m = class_membership(g, c)?;
        values.set(Feature::Class(c), m.member);
        values.witnesses[Feature::Class(c).index()] = m.witness;
        Ok(())
    };
    for &c in classes {
        run(&mut values, c)?;
    }
    for c in [ClassId::Cograph, ClassId::Bipartite] {
        if values.get(Feature::Class(c)).is_none() {
            run(&mut values, c)?;
        }
    }
    if g.n() <= MAX_BRUTE_FORCE && values.get(Feature::Class(ClassId::ModuleComposed)).is_none() {
        run(&mut values, ClassId::ModuleComposed)?;
    }

    let (mut checks, mut failures) = (0, 0);
    let mut tally = |ok: bool| {
        checks += 1;
        failures += u64::from(!ok);
    };
    let recognized = recognize(g).into_sequence();
    if let Some(seq) = &recognized {
        tally(verify_module_sequence(g, seq)?);
    }
    let level = check_bdh(g);
    if level {
        let seq = independent_module_sequence(g);
        tally(seq.map_or(Ok(false), |s| verify_independent_module_sequence(g, &s))?);
    }
    let cograph_seq = if values.get(Feature::Class(ClassId::Cograph)) == Some(true) {
        let seq = cograph_module_sequence(g)?;
        if let Some(s) = &seq {
            tally(verify_module_sequence(g, s)?);
        }
        Some(seq.is_some())
    } else {
        None
    };
    values.sequence_checks = checks;
    values.sequence_failures = failures;
    values.set(Feature::Recognized, recognized.is_some());
    values.set(Feature::LevelTest, level);
    if let Some(v) = cograph_seq {
        values.set(Feature::CographSequence, v);
    }
    Ok(values)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureCount {
    pub feature: String,
    pub evaluated: u64,
    pub members: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Position of the graph in the enumeration.
    pub index: u64,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Witness of the first failed class in the conclusion (or premise, for
    /// the reverse direction of an equivalence), if that oracle gave one.
    pub witness: Option<Vec<usize>>,
    /// Whether re-evaluating the graph from its edge list reproduces the
    /// violation.
    pub rechecked: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationTally {
    pub id: String,
    pub statement: String,
    pub evaluated: u64,
    pub violations: u64,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub format_version: u32,
    pub config: CensusConfig,
    pub classes: Vec<ClassId>,
    pub graphs_examined: u64,
    pub graphs_in_scope: u64,
    /// Module-sequences produced (recognizer, level test, cotree) and checked.
    pub sequences_verified: u64,
    pub sequence_failures: u64,
    pub oracle_evaluations: u64,
    pub counts: Vec<FeatureCount>,
    pub implications: Vec<ImplicationTally>,
    pub notes: Vec<String>,
}

impl CensusReport {
    pub fn total_violations(&self) -> u64 {
        self.implications.iter().map(|t| t.violations).sum()
    }

    pub fn implication(&self, id: &str) -> Option<&ImplicationTally> {
        self.implications.iter().find(|t| t.id == id)
    }

    pub fn count(&self, feature: Feature) -> Option<&FeatureCount> {
        let name = feature.name();
        self.counts.iter().find(|c| c.feature == name)
    }

    /// Passes when no implication is violated and every sequence verified.
    pub fn is_clean(&self) -> bool {
        self.total_violations() == 0 && self.sequence_failures == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    /// Human-readable summary.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graphs examined: {}, in scope: {}", self.graphs_examined, self.graphs_in_scope);
        let _ = writeln!(s, "sequences verified: {} ({} failures)", self.sequences_verified, self.sequence_failures);
        for c in &self.counts {
            let _ = writeln!(s, "  {:<30} {:>9} / {}", c.feature, c.members, c.evaluated);
        }
        for t in &self.implications {
            let status = if t.violations == 0 { "ok" } else { "VIOLATED" };
            let _ = writeln!(s, "  [{status}] {:<38} {} violations in {}", t.id, t.violations, t.evaluated);
        }
        for note in &self.notes {
            let _ = writeln!(s, "note: {note}");
        }
        s
    }
}

/// Partial result of a slice of the enumeration.
#[derive(Clone, Debug)]
struct Partial {
    examined: u64,
    in_scope: u64,
    sequence_checks: u64,
    sequence_failures: u64,
    oracle_evaluations: u64,
    counts: [(u64, u64); FEATURES],
    tallies: Vec<(u64, u64, Vec<Counterexample>)>,
    error: Option<(u64, Error)>,
}

impl Partial {
    fn new(implications: usize) -> Self {
        Partial {
            examined: 0,
            in_scope: 0,
            sequence_checks: 0,
            sequence_failures: 0,
            oracle_evaluations: 0,
            counts: [(0, 0); FEATURES],
            tallies: vec![(0, 0, Vec::new()); implications],
            error: None,
        }
    }

    fn merge(mut self, other: Partial, keep: usize) -> Partial {
        self.examined += other.examined;
        self.in_scope += other.in_scope;
        self.sequence_checks += other.sequence_checks;
        self.sequence_failures += other.sequence_failures;
        self.oracle_evaluations += other.oracle_evaluations;
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            a.0 += b.0;
            a.1 += b.1;
        }
        for (a, b) in self.tallies.iter_mut().zip(other.tallies) {
            a.0 += b.0;
            a.1 += b.1;
            a.2.extend(b.2);
            a.2.sort_by_key(|c| c.index);
            a.2.truncate(keep);
        }
        self.error = match (self.error, other.error) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

struct Job<'a> {
    classes: &'a [ClassId],
    restrict: Restrict,
    implications: &'a [Implication],
    keep: usize,
}

impl Job<'_> {
    fn absorb(&self, mut acc: Partial, index: u64, g: Graph) -> Partial {
        if acc.error.is_some() {
            return acc;
        }
        acc.examined += 1;
        let in_scope = match self.restrict {
            Restrict::All => true,
            Restrict::Bipartite => crate::is_bipartite(&g).is_some(),
            Restrict::Cograph => is_cograph(&g),
        };
        if !in_scope {
            return acc;
        }
        acc.in_scope += 1;
        let values = match evaluate(&g, self.classes) {
            Ok(v) => v,
            Err(e) => {
                acc.error = Some((index, e));
                return acc;
            }
        };
        acc.sequence_checks += values.sequence_checks;
        acc.sequence_failures += values.sequence_failures;
        for f in Feature::all() {
            if let Some(v) = values.get(f) {
                let slot = &mut acc.counts[f.index()];
                slot.0 += 1;
                slot.1 += u64::from(v);
                acc.oracle_evaluations += u64::from(matches!(f, Feature::Class(_)));
            }
        }
        for (imp, tally) in self.implications.iter().zip(acc.tallies.iter_mut()) {
            let Some(holds) = imp.check(&values) else { continue };
            tally.0 += 1;
            if holds {
                continue;
            }
            tally.1 += 1;
            if tally.2.len() < self.keep {
                tally.2.push(self.counterexample(imp, index, &g, &values));
            }
        }
        acc
    }

    fn counterexample(&self, imp: &Implication, index: u64, g: &Graph, values: &Values) -> Counterexample {
        let failed = imp
            .conclusion
            .iter()
            .chain(&imp.premise)
            .find(|&&f| values.get(f) == Some(false))
            .and_then(|&f| values.witnesses[f.index()].clone());
        let edges = g.edges().collect::<Vec<_>>();
        let again = Graph::from_edges(g.n(), edges.iter().copied()).expect("edges came from a graph");
        let rechecked = evaluate(&again, self.classes).is_ok_and(|v| imp.check(&v) == Some(false));
        Counterexample { index, n: g.n(), edges, witness: failed, rechecked }
    }
}

/// Runs the census described by `cfg`.
pub fn run_census(cfg: &CensusConfig) -> Result<CensusReport> {
    let classes = cfg.validate()?;
    let implications = implications();
    let job =
        Job { classes: &classes, restrict: cfg.restrict, implications: &implications, keep: cfg.max_counterexamples };
    let work = || -> Partial {
        let empty = || Partial::new(implications.len());
        let keep = cfg.max_counterexamples;
        match cfg.mode {
            CensusMode::Exhaustive { min_n, max_n } => (min_n..=max_n)
                .map(|n| {
                    let codes = 1u64 << (n * n.saturating_sub(1) / 2);
                    let base = (min_n..n).map(|k| 1u64 << (k * k.saturating_sub(1) / 2)).sum::<u64>();
                    (0..codes)
                        .into_par_iter()
                        .fold(empty, |acc, code| job.absorb(acc, base + code, Graph::from_edge_code(n, code)))
                        .reduce(empty, |a, b| a.merge(b, keep))
                })
                .fold(empty(), |a, b| a.merge(b, keep)),
            CensusMode::Random { count, min_n, max_n, p, seed } => (0..count as u64)
                .into_par_iter()
                .fold(empty, |acc, i| job.absorb(acc, i, random_instance(seed, i, min_n, max_n, p)))
                .reduce(empty, |a, b| a.merge(b, keep)),
        }
    };
    let partial = match cfg.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };
    if let Some((_, e)) = partial.error {
        return Err(e);
    }

    let counts = Feature::all()
        .filter_map(|f| {
            let (evaluated, members) = partial.counts[f.index()];
            (evaluated > 0).then(|| FeatureCount { feature: f.name(), evaluated, members })
        })
        .collect();
    let tallies = implications
        .iter()
        .zip(partial.tallies)
        .map(|(imp, (evaluated, violations, counterexamples))| ImplicationTally {
            id: imp.id.to_string(),
            statement: imp.statement(),
            evaluated,
            violations,
            counterexamples,
        })
        .collect();
    let mut notes = Vec::new();
    if cfg.max_n() < 8 {
        notes.push("co-2C4 has 8 vertices, so every co-2C4 equivalence holds vacuously here".to_string());
    }
    if matches!(cfg.mode, CensusMode::Exhaustive { .. }) {
        notes.push("exhaustive counts are over labeled graphs".to_string());
    }
    Ok(CensusReport {
        format_version: FORMAT_VERSION,
        config: cfg.clone(),
        classes,
        graphs_examined: partial.examined,
        graphs_in_scope: partial.in_scope,
        sequences_verified: partial.sequence_checks,
        sequence_failures: partial.sequence_failures,
        oracle_evaluations: partial.oracle_evaluations,
        counts,
        implications: tallies,
        notes,
    })
}

/// The `index`-th graph of a random census, independent of scheduling.
pub fn random_instance(seed: u64, index: u64, min_n: usize, max_n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let n = rng.gen_range(min_n..=max_n);
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).expect("edges are in range")
}

/// Edge codes of all labeled cographs on `n <= 11` vertices, sorted.
///
/// Built constructively: a cograph on a vertex set S with at least two
/// vertices is either disconnected (its component through the smallest vertex
/// is a connected cograph C, the rest any cograph) or the complement of a
/// disconnected cograph.
pub fn cograph_codes(n: usize) -> Result<Vec<u64>> {
    crate::guard("cograph_codes", n, 11)?;
    if n == 0 {
        return Ok(vec![0]);
    }
    let pair_bit = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        1u64 << (b * (b - 1) / 2 + a)
    };
    let size = 1usize << n;
    let mut complete = vec![0u64; size];
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        complete[s] = complete[rest] | crate::graph::bits(rest as u64).fold(0, |acc, u| acc | pair_bit(u, v));
    }
    // all[S] = every cograph on S, connected[S] = the connected ones.
    let mut all: Vec<Vec<u64>> = vec![Vec::new(); size];
    let mut connected: Vec<Vec<u64>> = vec![Vec::new(); size];
    all[0].push(0);
    let mut masks: Vec<usize> = (1..size).collect();
    masks.sort_by_key(|s| s.count_ones());
    for s in masks {
        if s.count_ones() == 1 {
            all[s].push(0);
            connected[s].push(0);
            continue;
        }
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut disconnected = Vec::new();
        // Proper subsets C of S containing the smallest vertex.
        let mut sub = (rest - 1) & rest;
        loop {
            let c = sub | low;
            for &a in &connected[c] {
                for &b in &all[s ^ c] {
                    disconnected.push(a | b);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        connected[s] = disconnected.iter().map(|&d| d ^ complete[s]).collect();
        all[s] = disconnected;
        let joined = connected[s].clone();
        all[s].extend(joined);
    }
    let mut out = std::mem::take(&mut all[size - 1]);
    out.sort_unstable();
    Ok(out)
}

/// Whether the graph with this edge code is P4-free (`n <= 11`).
pub fn code_is_p4_free(n: usize, code: u64) -> bool {
    crate::oracles::find_p4(&Graph::from_edge_code(n, code).masks()).is_none()
}

/// Adjacency masks of the graph with edge code `code`, for callers that
/// sweep codes without building a [`Graph`].
pub fn code_masks(n: usize, code: u64) -> Vec<u64> {
    let mut masks = vec![0u64; n];
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if code >> bit & 1 == 1 {
                masks[u] |= 1 << v;
                masks[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    debug_assert!(masks.iter().all(|m| m & !low_mask(n) == 0));
    masks
}
