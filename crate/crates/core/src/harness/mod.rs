//! Verification campaigns: run one claim over a corpus of graphs and collect
//! per-graph records plus a summary.

mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::atoms::{has_induced_minimal_atom, AtomError};
use crate::families::{build_g_rki, named, random_script, run_script, write_script, Family, GrkiError, ScriptError};
use crate::graph::{
    enumerate_graphs, enumerate_regular_graphs, girth, has_induced_cycle, neighbor_connected_induced_cycles,
    parse_graph6, write_graph6, Girth, Graph, GraphError, SparseGraph,
};
use crate::solver::{grundy_exact_with, partial_grundy_exact_with, SolveOptions, SolverError};
use crate::twins::{cubic_grundy_linear, f3_membership, twin_grundy_upper_bound, TwinError};

pub use report::{write_csv, write_jsonl};

/// Environment variable capping the worker pool.
pub const THREADS_ENV: &str = "GRUNDYLAB_THREADS";

/// Highest level checked by ATOM-EQ.
pub const ATOM_EQ_MAX_LEVEL: usize = 5;

/// Upper bound `2r^3 - r^2 + r` on the order of a connected r-regular graph
/// whose partial Grundy number is below `r + 1`.
pub const fn n_r_bound(r: u64) -> u64 {
    2 * r * r * r - r * r + r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Claim {
    /// Connected cubic: the linear classifier equals Γ, and Γ <= 3 iff F3.
    #[serde(rename = "CUBIC-CHAR")]
    CubicChar,
    /// Connected cubic: ∂Γ = 4, except ∂Γ(K3,3) = 2.
    #[serde(rename = "CUBIC-PARTIAL")]
    CubicPartial,
    /// Connected r-regular without induced C4: Γ = r + 1. For r = 2 all
    /// cycles are checked and C4 is the listed exception.
    #[serde(rename = "C4FREE-R")]
    C4FreeR,
    /// Γ >= t iff an induced minimal t-atom exists, for t <= 5.
    #[serde(rename = "ATOM-EQ")]
    AtomEq,
    /// Γ(G_{r,k,i}) = k over all part vectors.
    #[serde(rename = "GRKI")]
    Grki,
    /// Regular outputs of random GSTAR(r) scripts have Γ < r + 1.
    #[serde(rename = "GR-SOUND")]
    GrSound,
}

impl Claim {
    pub const ALL: [Claim; 6] = [
        Claim::CubicChar,
        Claim::CubicPartial,
        Claim::C4FreeR,
        Claim::AtomEq,
        Claim::Grki,
        Claim::GrSound,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::CubicChar => "CUBIC-CHAR",
            Claim::CubicPartial => "CUBIC-PARTIAL",
            Claim::C4FreeR => "C4FREE-R",
            Claim::AtomEq => "ATOM-EQ",
            Claim::Grki => "GRKI",
            Claim::GrSound => "GR-SOUND",
        }
    }

    /// Whether the claim runs over a graph corpus (as opposed to graphs it
    /// constructs itself).
    pub fn takes_input(self) -> bool {
        !matches!(self, Claim::Grki | Claim::GrSound)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| HarnessError::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("unknown claim `{0}`; expected one of CUBIC-CHAR, CUBIC-PARTIAL, C4FREE-R, ATOM-EQ, GRKI, GR-SOUND")]
    UnknownClaim(String),
    #[error("{claim} needs --r")]
    MissingR { claim: Claim },
    #[error("{claim} does not apply to r = {r}")]
    BadR { claim: Claim, r: usize },
    #[error("{claim} builds its own graphs and takes no input file")]
    InputNotAccepted { claim: Claim },
    #[error("input line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("thread pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Script(#[from] ScriptError),
    #[error(transparent)]
    Grki(#[from] GrkiError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Twin(#[from] TwinError),
    #[error(transparent)]
    Atom(#[from] AtomError),
}

/// Where the graphs come from.
#[derive(Clone, Debug)]
pub enum Source {
    /// The claim's own enumerator, bounded by `max_n`.
    Enumerate,
    /// Graphs read from a file or standard input, in order.
    Graphs(Vec<Graph>),
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub claim: Claim,
    pub r: Option<usize>,
    pub max_n: usize,
    /// Node budget per solver call.
    pub budget: u64,
    /// Worker count; `None` reads `GRUNDYLAB_THREADS`, then uses all cores.
    pub threads: Option<usize>,
    /// Regular script outputs GR-SOUND draws.
    pub samples: usize,
    pub seed: u64,
}

impl CampaignConfig {
    pub fn new(claim: Claim, r: Option<usize>, max_n: usize) -> Self {
        CampaignConfig {
            claim,
            r,
            max_n,
            budget: crate::solver::DEFAULT_BUDGET,
            threads: None,
            samples: 200,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    /// The solver ran out of budget or the graph is outside its range.
    Unknown,
    /// The graph does not satisfy the claim's hypotheses.
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

/// Case split used for 4-regular graphs without induced C4: by girth, then
/// by the presence of K4, an induced Petersen graph, or a neighbor-connected
/// induced cycle of length equal to the girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Stratum {
    #[serde(rename = "G3_K4")]
    G3K4,
    #[serde(rename = "G3")]
    G3,
    /// Girth 4 forces an induced C4, so C4-free graphs never land here.
    #[serde(rename = "G4")]
    G4,
    #[serde(rename = "G5_PETERSEN")]
    G5Petersen,
    #[serde(rename = "G5_NC")]
    G5NeighborConnected,
    #[serde(rename = "G5")]
    G5,
    #[serde(rename = "G6_NC")]
    G6NeighborConnected,
    #[serde(rename = "G6")]
    G6,
    #[serde(rename = "G7PLUS")]
    G7Plus,
}

impl Stratum {
    pub fn name(self) -> &'static str {
        match self {
            Stratum::G3K4 => "G3_K4",
            Stratum::G3 => "G3",
            Stratum::G4 => "G4",
            Stratum::G5Petersen => "G5_PETERSEN",
            Stratum::G5NeighborConnected => "G5_NC",
            Stratum::G5 => "G5",
            Stratum::G6NeighborConnected => "G6_NC",
            Stratum::G6 => "G6",
            Stratum::G7Plus => "G7PLUS",
        }
    }
}

pub fn stratum(g: &Graph) -> Stratum {
    match girth(g) {
        Girth::Finite(3) => {
            let k4 = named("K4").expect("K4 is a valid name");
            if crate::atoms::is_induced_subgraph(&k4, g) {
                Stratum::G3K4
            } else {
                Stratum::G3
            }
        }
        Girth::Finite(4) => Stratum::G4,
        Girth::Finite(5) => {
            let petersen = named("petersen").expect("petersen is a valid name");
            if crate::atoms::is_induced_subgraph(&petersen, g) {
                Stratum::G5Petersen
            } else if !neighbor_connected_induced_cycles(g, 5).is_empty() {
                Stratum::G5NeighborConnected
            } else {
                Stratum::G5
            }
        }
        Girth::Finite(6) => {
            if neighbor_connected_induced_cycles(g, 6).is_empty() {
                Stratum::G6
            } else {
                Stratum::G6NeighborConnected
            }
        }
        _ => Stratum::G7Plus,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub r: Option<usize>,
    pub girth: Girth,
    pub c4_free: bool,
    pub grundy: Option<usize>,
    pub partial_grundy: Option<usize>,
    pub twin_bound: usize,
    pub stratum: Option<Stratum>,
    pub outcome: Outcome,
    pub detail: Option<String>,
    /// Solver search nodes spent on this graph.
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub claim: Claim,
    pub r: Option<usize>,
    pub max_n: usize,
    pub budget: u64,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub unknown: usize,
    pub skipped: usize,
    pub verdict: Verdict,
    /// graph6 strings of failing records.
    pub counterexamples: Vec<String>,
    pub strata: BTreeMap<&'static str, usize>,
    pub constants: BTreeMap<&'static str, u64>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub records: Vec<Record>,
    pub summary: Summary,
    /// Not part of the serialized report, which must be reproducible.
    pub wall_time: Duration,
}

/// One unit of work: a graph and, for constructed graphs, how it was made.
#[derive(Clone, Debug)]
struct Item {
    graph: Graph,
    origin: Option<String>,
    /// Expected Γ for GRKI items.
    expected: Option<usize>,
}

/// Reads graph6 lines, ignoring blank lines and an optional `>>graph6<<`
/// prefix.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>, HarnessError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        out.push(parse_graph6(line).map_err(|e| HarnessError::Parse {
            line: i + 1,
            reason: e.to_string(),
        })?);
    }
    Ok(out)
}

fn claim_r(cfg: &CampaignConfig) -> Result<usize, HarnessError> {
    let claim = cfg.claim;
    match claim {
        Claim::CubicChar | Claim::CubicPartial => match cfg.r {
            None | Some(3) => Ok(3),
            Some(r) => Err(HarnessError::BadR { claim, r }),
        },
        Claim::C4FreeR => cfg.r.ok_or(HarnessError::MissingR { claim }),
        Claim::GrSound => match cfg.r {
            Some(r) if r >= 2 => Ok(r),
            Some(r) => Err(HarnessError::BadR { claim, r }),
            None => Err(HarnessError::MissingR { claim }),
        },
        Claim::AtomEq | Claim::Grki => Ok(cfg.r.unwrap_or(0)),
    }
}

fn plain(graph: Graph) -> Item {
    Item {
        graph,
        origin: None,
        expected: None,
    }
}

fn items(cfg: &CampaignConfig, source: &Source) -> Result<Vec<Item>, HarnessError> {
    let r = claim_r(cfg)?;
    if let Source::Graphs(graphs) = source {
        if !cfg.claim.takes_input() {
            return Err(HarnessError::InputNotAccepted { claim: cfg.claim });
        }
        return Ok(graphs.iter().cloned().map(plain).collect());
    }
    let mut out = Vec::new();
    match cfg.claim {
        Claim::CubicChar | Claim::CubicPartial | Claim::C4FreeR => {
            for n in r + 1..=cfg.max_n {
                if n * r % 2 == 0 {
                    out.extend(enumerate_regular_graphs(r, n, true)?.into_iter().map(plain));
                }
            }
        }
        Claim::AtomEq => {
            for n in 1..=cfg.max_n {
                out.extend(enumerate_graphs(n, true)?.into_iter().map(plain));
            }
        }
        Claim::Grki => {
            let rs: Vec<usize> = match cfg.r {
                Some(r) => vec![r],
                None => vec![3, 4, 5],
            };
            for r in rs {
                for k in 3..=r + 1 {
                    for parts in compositions(r, k - 1) {
                        let mut i = 2;
                        while 2 * i * r <= cfg.max_n {
                            out.push(Item {
                                graph: build_g_rki(r, k, &parts, i)?,
                                origin: Some(format!("r={r} k={k} parts={parts:?} i={i}")),
                                expected: Some(k),
                            });
                            i += 1;
                        }
                    }
                }
            }
        }
        Claim::GrSound => {
            // Draw until `samples` scripts end regular; the others are kept
            // as skipped records. The attempt cap only guards degenerate
            // settings such as a `max_n` below every base graph.
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut regular = 0;
            let mut attempts = 0;
            while regular < cfg.samples && attempts < 100 * cfg.samples.max(1) {
                attempts += 1;
                let script = random_script(Family::GStar(r), cfg.max_n, &mut rng)?;
                let graph = run_script(&script, Family::GStar(r))?.graph;
                if graph.regularity() == Some(r) {
                    regular += 1;
                }
                out.push(Item {
                    graph,
                    origin: Some(write_script(&script).trim_end().replace('\n', "; ")),
                    expected: None,
                });
            }
        }
    }
    Ok(out)
}

/// Ordered ways to write `total` as a sum of `parts` positive integers.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for x in 1..=left.saturating_sub(parts - 1) {
            cur.push(x);
            go(left - x, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

enum Solve<T> {
    Done(T),
    Unknown(String),
}

fn solved<T>(res: Result<T, SolverError>) -> Result<Solve<T>, HarnessError> {
    match res {
        Ok(v) => Ok(Solve::Done(v)),
        Err(e @ (SolverError::BudgetExceeded { .. } | SolverError::TooLarge { .. })) => Ok(Solve::Unknown(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn evaluate(cfg: &CampaignConfig, r_claim: usize, index: usize, item: &Item) -> Result<Record, HarnessError> {
    let g = &item.graph;
    let opts = SolveOptions { budget: cfg.budget };
    let mut rec = Record {
        index,
        graph6: write_graph6(g),
        n: g.n(),
        r: g.regularity(),
        girth: girth(g),
        c4_free: !has_induced_cycle(g, 4),
        grundy: None,
        partial_grundy: None,
        twin_bound: twin_grundy_upper_bound(g),
        stratum: None,
        outcome: Outcome::Pass,
        detail: item.origin.clone(),
        nodes: 0,
    };
    let regular_connected = |r: usize| g.regularity() == Some(r) && g.is_connected() && g.n() > 0;
    let skip = |mut rec: Record, why: &str| {
        rec.outcome = Outcome::Skipped;
        rec.detail = Some(why.to_string());
        rec
    };
    let unknown = |mut rec: Record, why: String| {
        rec.outcome = Outcome::Unknown;
        rec.detail = Some(why);
        rec
    };
    let fail = |rec: &mut Record, why: String| {
        rec.outcome = Outcome::Fail;
        rec.detail = Some(match rec.detail.take() {
            Some(origin) => format!("{why} ({origin})"),
            None => why,
        });
    };

    match cfg.claim {
        Claim::CubicChar | Claim::CubicPartial | Claim::C4FreeR | Claim::GrSound => {
            let r = r_claim;
            if !regular_connected(r) && cfg.claim != Claim::GrSound {
                return Ok(skip(rec, "not a connected regular graph of the required degree"));
            }
            if cfg.claim == Claim::GrSound && g.regularity() != Some(r) {
                return Ok(skip(rec, "script output is not regular"));
            }
            if cfg.claim == Claim::C4FreeR && r >= 3 && !rec.c4_free {
                return Ok(skip(rec, "contains an induced C4"));
            }
            if cfg.claim == Claim::C4FreeR && r == 4 {
                rec.stratum = Some(stratum(g));
            }
        }
        Claim::AtomEq | Claim::Grki => {}
    }

    let sol = match solved(grundy_exact_with(g, &opts))? {
        Solve::Done(s) => s,
        Solve::Unknown(why) => return Ok(unknown(rec, why)),
    };
    rec.grundy = Some(sol.value);
    rec.nodes = sol.nodes;
    let gamma = sol.value;

    match cfg.claim {
        Claim::CubicChar => {
            let linear = cubic_grundy_linear(&SparseGraph::from(g))?;
            let in_f3 = f3_membership(g)?;
            if usize::from(linear) != gamma {
                fail(&mut rec, format!("linear classifier gives {linear}, exact gives {gamma}"));
            } else if in_f3 != (gamma <= 3) {
                fail(&mut rec, format!("F3 membership {in_f3} but exact gives {gamma}"));
            }
        }
        Claim::CubicPartial => {
            let p = match solved(partial_grundy_exact_with(g, &opts))? {
                Solve::Done(p) => p,
                Solve::Unknown(why) => return Ok(unknown(rec, why)),
            };
            rec.partial_grundy = Some(p.value);
            rec.nodes += p.nodes;
            let expected = if g.is_complete_bipartite() { 2 } else { 4 };
            if p.value != expected {
                fail(&mut rec, format!("partial Grundy number {} but expected {expected}", p.value));
            }
        }
        Claim::C4FreeR => {
            let r = r_claim;
            let exception = r == 2 && !rec.c4_free;
            let expected = if exception { 2 } else { r + 1 };
            if gamma != expected {
                fail(&mut rec, format!("Grundy number {gamma} but expected {expected}"));
            } else if exception {
                rec.detail = Some("listed exception C4".into());
            }
        }
        Claim::AtomEq => {
            for t in 1..=ATOM_EQ_MAX_LEVEL {
                let has = has_induced_minimal_atom(g, t)?;
                if has != (gamma >= t) {
                    fail(&mut rec, format!("t={t}: induced minimal atom {has} but Grundy number {gamma}"));
                    break;
                }
            }
        }
        Claim::Grki => {
            let k = item.expected.unwrap_or(0);
            if gamma != k {
                fail(&mut rec, format!("Grundy number {gamma} but expected {k}"));
            }
        }
        Claim::GrSound => {
            if gamma > r_claim {
                fail(&mut rec, format!("Grundy number {gamma} reaches r+1"));
            }
        }
    }
    Ok(rec)
}

fn thread_count(cfg: &CampaignConfig) -> usize {
    cfg.threads
        .or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse().ok()))
        .filter(|&t| t > 0)
        .unwrap_or(0)
}

/// Runs a campaign. Records come back in source order whatever the thread
/// count, so the serialized report is deterministic.
pub fn run_campaign(cfg: &CampaignConfig, source: &Source) -> Result<VerificationReport, HarnessError> {
    let start = Instant::now();
    let r_claim = claim_r(cfg)?;
    let work = items(cfg, source)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count(cfg))
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    let records: Vec<Record> = pool.install(|| {
        work.par_iter()
            .enumerate()
            .map(|(i, item)| evaluate(cfg, r_claim, i, item))
            .collect::<Result<_, _>>()
    })?;
    let summary = summarize(cfg, &records);
    Ok(VerificationReport {
        records,
        summary,
        wall_time: start.elapsed(),
    })
}

fn summarize(cfg: &CampaignConfig, records: &[Record]) -> Summary {
    let count = |o: Outcome| records.iter().filter(|r| r.outcome == o).count();
    let (passed, failed, unknown, skipped) = (
        count(Outcome::Pass),
        count(Outcome::Fail),
        count(Outcome::Unknown),
        count(Outcome::Skipped),
    );
    let verdict = if failed > 0 {
        Verdict::Fail
    } else if unknown > 0 {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    let mut strata = BTreeMap::new();
    for s in records.iter().filter_map(|r| r.stratum) {
        *strata.entry(s.name()).or_insert(0) += 1;
    }
    let mut constants = BTreeMap::new();
    if cfg.claim == Claim::CubicPartial {
        constants.insert("n_r_bound", n_r_bound(3));
    }
    Summary {
        claim: cfg.claim,
        r: cfg.r,
        max_n: cfg.max_n,
        budget: cfg.budget,
        total: records.len(),
        passed,
        failed,
        unknown,
        skipped,
        verdict,
        counterexamples: records
            .iter()
            .filter(|r| r.outcome == Outcome::Fail)
            .map(|r| r.graph6.clone())
            .collect(),
        strata,
        constants,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(claim: Claim, r: Option<usize>, max_n: usize) -> VerificationReport {
        let mut cfg = CampaignConfig::new(claim, r, max_n);
        cfg.threads = Some(1);
        run_campaign(&cfg, &Source::Enumerate).unwrap()
    }

    #[test]
    fn claim_ids_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
        }
        assert!("nope".parse::<Claim>().is_err());
        assert_eq!("cubic-char".parse::<Claim>().unwrap(), Claim::CubicChar);
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(5, 5), vec![vec![1; 5]]);
        assert!(compositions(2, 3).is_empty());
    }

    #[test]
    fn n_r_constant() {
        assert_eq!(n_r_bound(3), 48);
        assert_eq!(n_r_bound(4), 116);
    }

    #[test]
    fn cycles_have_one_exception() {
        let rep = run(Claim::C4FreeR, Some(2), 12);
        assert_eq!(rep.summary.verdict, Verdict::Pass);
        assert_eq!(rep.summary.total, 10);
        let exceptions: Vec<&Record> = rep.records.iter().filter(|r| !r.c4_free).collect();
        assert_eq!(exceptions.len(), 1);
        assert_eq!(exceptions[0].n, 4);
        assert_eq!(exceptions[0].grundy, Some(2));
        assert!(rep.records.iter().filter(|r| r.c4_free).all(|r| r.grundy == Some(3)));
    }

    #[test]
    fn cubic_campaigns_pass() {
        let rep = run(Claim::CubicChar, None, 10);
        assert_eq!(rep.summary.verdict, Verdict::Pass);
        assert_eq!(rep.summary.passed, 1 + 2 + 5 + 19);
        let rep = run(Claim::CubicPartial, Some(3), 8);
        assert_eq!(rep.summary.verdict, Verdict::Pass);
        assert_eq!(rep.summary.constants.get("n_r_bound"), Some(&48));
        let k33 = rep.records.iter().find(|r| r.partial_grundy == Some(2)).unwrap();
        assert_eq!(k33.n, 6);
    }

    #[test]
    fn hypotheses_are_skipped_not_failed() {
        let graphs = vec![named("K4").unwrap(), named("P5").unwrap(), named("C4").unwrap()];
        let mut cfg = CampaignConfig::new(Claim::C4FreeR, Some(3), 0);
        cfg.threads = Some(1);
        let rep = run_campaign(&cfg, &Source::Graphs(graphs)).unwrap();
        assert_eq!(rep.summary.skipped, 2);
        assert_eq!(rep.summary.passed, 1);
        assert_eq!(rep.summary.verdict, Verdict::Pass);
    }

    #[test]
    fn square_of_c7_is_skipped() {
        // C7² is 4-regular with Γ = 4, but 0-2-4-5 is an induced C4.
        let c72 = crate::graph::power_graph(&named("C7").unwrap(), 2);
        let mut cfg = CampaignConfig::new(Claim::C4FreeR, Some(4), 0);
        cfg.threads = Some(1);
        let rep = run_campaign(&cfg, &Source::Graphs(vec![c72.clone()])).unwrap();
        assert_eq!(rep.records[0].outcome, Outcome::Skipped);
        assert!(!rep.records[0].c4_free);
        assert_eq!(stratum(&c72), Stratum::G3);
    }

    #[test]
    fn failures_flip_the_verdict() {
        let cfg = CampaignConfig::new(Claim::C4FreeR, Some(4), 0);
        let mut cfg1 = cfg.clone();
        cfg1.threads = Some(1);
        let mut records = run_campaign(&cfg1, &Source::Graphs(vec![named("K5").unwrap()])).unwrap().records;
        assert_eq!(summarize(&cfg, &records).verdict, Verdict::Pass);
        records[0].outcome = Outcome::Unknown;
        assert_eq!(summarize(&cfg, &records).verdict, Verdict::Inconclusive);
        records.push(records[0].clone());
        records[1].outcome = Outcome::Fail;
        let summary = summarize(&cfg, &records);
        assert_eq!(summary.verdict, Verdict::Fail);
        assert_eq!(summary.counterexamples, vec![write_graph6(&named("K5").unwrap())]);
        assert_eq!(summary.strata.get("G3_K4"), Some(&2));
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let mut cfg = CampaignConfig::new(Claim::CubicPartial, None, 10);
        cfg.threads = Some(1);
        cfg.budget = 1;
        let rep = run_campaign(&cfg, &Source::Enumerate).unwrap();
        assert_eq!(rep.summary.verdict, Verdict::Inconclusive);
        assert!(rep.summary.unknown > 0);
        assert_eq!(rep.summary.failed, 0);
    }

    #[test]
    fn constructed_claims() {
        let rep = run(Claim::Grki, None, 20);
        assert_eq!(rep.summary.verdict, Verdict::Pass);
        // Compositions of r into k-1 parts for k = 3..=r+1 number 2^(r-1) - 1;
        // r = 3 also fits i = 3 within 20 vertices.
        assert_eq!(rep.summary.total, 2 * 3 + 7 + 15);
        let rep = run(Claim::GrSound, Some(3), 12);
        assert_eq!(rep.summary.verdict, Verdict::Pass);
        assert_eq!(rep.summary.passed, 200);
        let mut cfg = CampaignConfig::new(Claim::Grki, None, 20);
        cfg.threads = Some(1);
        assert!(matches!(
            run_campaign(&cfg, &Source::Graphs(vec![])),
            Err(HarnessError::InputNotAccepted { .. })
        ));
    }

    #[test]
    fn atom_equivalence_small() {
        let rep = run(Claim::AtomEq, None, 5);
        assert_eq!(rep.summary.verdict, Verdict::Pass);
        assert_eq!(rep.summary.total, 1 + 1 + 2 + 6 + 21);
    }

    #[test]
    fn reading_graph6_lines() {
        let gs = read_graph6_lines(">>graph6<<Bw\n\nC~\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert!(matches!(read_graph6_lines("Bw\n!!\n"), Err(HarnessError::Parse { line: 2, .. })));
    }
}
