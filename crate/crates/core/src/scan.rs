//! Graph-stream scans for the clique-root conjectures.
//!
//! A scan reads graphs from the builtin enumeration or a graph6 stream,
//! applies the target's filters, decides real-rootedness exactly and writes
//! one JSON line per reported graph followed by a summary line. Work is
//! split into batches that a fixed-size thread pool evaluates; results are
//! written in input order, so output does not depend on the worker count.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cliquepoly::{
    check_identities, clique_counts, naive_clique_counts, CliqueVector, IdentityReport,
    MAX_ORACLE_VERTICES,
};
use crate::graph::{labeled_graph_count, labeled_graph_from_index, Graph, GraphError};
use crate::poly::isolate_real_roots;
use crate::theorems::{verify, ClaimId};

const BATCH: usize = 4096;
const CACHE_LIMIT: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Conj1,
    Conj2,
    /// Carries the connectivity parameter `l ≥ 1`.
    Conj3(usize),
    Quest1,
    Prop(ClaimId),
    Identities,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Conj1 => f.write_str("conj1"),
            Target::Conj2 => f.write_str("conj2"),
            Target::Conj3(l) => write!(f, "conj3:{l}"),
            Target::Quest1 => f.write_str("quest1"),
            Target::Prop(c) => write!(f, "prop:{c}"),
            Target::Identities => f.write_str("identities"),
        }
    }
}

impl FromStr for Target {
    type Err = ScanError;

    /// Accepts `conj1`, `conj2`, `conj3:L` (or `conj3(L)`), `quest1`,
    /// `prop:<claim>` and `identities`, case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| ScanError::Config(format!("invalid target {s:?}: {why}"));
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "conj1" => return Ok(Target::Conj1),
            "conj2" => return Ok(Target::Conj2),
            "quest1" => return Ok(Target::Quest1),
            "identities" => return Ok(Target::Identities),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("conj3") {
            let arg = rest
                .strip_prefix(':')
                .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
                .ok_or_else(|| bad("conj3 needs a connectivity parameter, e.g. conj3:2"))?;
            let l: usize = arg
                .trim()
                .parse()
                .map_err(|_| bad("l must be a positive integer"))?;
            if l == 0 {
                return Err(bad("l must be at least 1"));
            }
            return Ok(Target::Conj3(l));
        }
        if let Some(claim) = t.strip_prefix("prop:") {
            return claim
                .parse()
                .map(Target::Prop)
                .map_err(|e| bad(&e.to_string()));
        }
        Err(bad(
            "expected conj1, conj2, conj3:L, quest1, prop:<claim> or identities",
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Every labeled graph on exactly `n` vertices, `n ≤ 7`.
    Builtin(usize),
    Graph6File(PathBuf),
    Stdin,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Emit {
    #[default]
    All,
    /// Counterexamples and hits only.
    Hits,
    Summary,
}

impl FromStr for Emit {
    type Err = ScanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "all" => Ok(Emit::All),
            "hits" => Ok(Emit::Hits),
            "summary" => Ok(Emit::Summary),
            _ => Err(ScanError::Config(format!(
                "invalid emit policy {s:?}: expected all, hits or summary"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub target: Target,
    pub source: Source,
    /// Worker threads; 0 is treated as 1.
    pub jobs: usize,
    pub emit: Emit,
}

impl ScanConfig {
    pub fn new(target: Target, source: Source) -> Self {
        ScanConfig {
            target,
            source,
            jobs: 1,
            emit: Emit::All,
        }
    }

    pub fn validate(&self) -> Result<(), ScanError> {
        if let Source::Builtin(n) = self.source {
            labeled_graph_count(n)?;
        }
        if let Target::Conj3(0) = self.target {
            return Err(ScanError::Config("conj3 needs l >= 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("graph {seq} ({graph6}) failed the counterexample double-check: {reason}")]
    DoubleCheck {
        seq: u64,
        graph6: String,
        reason: String,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub counterexample: bool,
    pub hit: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Checks {
    Identities(IdentityReport),
    Proposition {
        claim_id: ClaimId,
        conclusion_holds: bool,
    },
}

/// One reported graph. `seq` is the 0-based position in the input stream.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRecord {
    pub seq: u64,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub filters: BTreeMap<String, bool>,
    pub coeffs: CliqueVector,
    pub real_rooted: bool,
    pub flags: Flags,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Checks>,
}

/// Tallies written as the last output line. `filtered` counts graphs that
/// passed every filter of the target.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub target: String,
    pub seen: u64,
    pub filtered: u64,
    pub counterexamples: u64,
    pub hits: u64,
    pub malformed: u64,
}

thread_local! {
    static REAL_ROOTED: RefCell<HashMap<Vec<u64>, bool>> = RefCell::new(HashMap::new());
}

fn is_real_rooted(counts: &CliqueVector) -> bool {
    REAL_ROOTED.with(|cache| {
        if let Some(&v) = cache.borrow().get(counts.counts()) {
            return v;
        }
        let v = isolate_real_roots(&counts.to_polynomial())
            .expect("clique polynomials are nonzero")
            .is_real_rooted;
        let mut cache = cache.borrow_mut();
        if cache.len() >= CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(counts.counts().to_vec(), v);
        v
    })
}

/// Evaluates filters in order, stopping at the first failure.
struct FilterRun<'a> {
    g: &'a Graph,
    counts: &'a CliqueVector,
    map: BTreeMap<String, bool>,
    pass: bool,
}

impl<'a> FilterRun<'a> {
    fn new(g: &'a Graph, counts: &'a CliqueVector) -> Self {
        FilterRun {
            g,
            counts,
            map: BTreeMap::new(),
            pass: true,
        }
    }

    fn check(&mut self, name: &str, f: impl FnOnce(&Graph, &CliqueVector) -> bool) -> &mut Self {
        if self.pass {
            let v = f(self.g, self.counts);
            self.map.insert(name.to_string(), v);
            self.pass = v;
        }
        self
    }
}

enum Outcome {
    Malformed,
    /// Did not pass the filters.
    Skipped,
    Matched(Box<ScanRecord>),
}

fn evaluate(target: Target, seq: u64, g: &Graph) -> Result<Outcome, ScanError> {
    let counts = clique_counts(g);
    let mut run = FilterRun::new(g, &counts);
    let mut checks = None;
    let mut prop_failed = false;
    match target {
        Target::Conj1 => {
            run.check("connected", |g, _| g.is_connected())
                .check("k4_free", |_, c| c.clique_number() < 4);
        }
        Target::Conj2 => {
            run.check("max_triangles_per_edge_le_2", |g, _| {
                g.max_triangles_per_edge() <= 2
            })
            .check("k5_free", |_, c| c.clique_number() < 5)
            .check("kappa_ge_2", |g, _| g.vertex_connectivity() >= 2);
        }
        Target::Conj3(l) => {
            run.check(&format!("k{}_free", l + 3), |_, c| {
                c.clique_number() < l + 3
            })
            .check("chordal", |g, _| g.is_chordal())
            .check(&format!("kappa_ge_{l}"), |g, _| {
                g.vertex_connectivity() >= l
            });
        }
        Target::Quest1 => {
            run.check("k5_free", |_, c| c.clique_number() < 5)
                .check("non_chordal", |g, _| !g.is_chordal())
                .check("kappa_ge_2", |g, _| g.vertex_connectivity() >= 2);
        }
        Target::Prop(claim) => {
            let res = verify(claim, g);
            run.check("hypothesis_met", |_, _| res.hypothesis_met);
            if let Some(holds) = res.conclusion_holds {
                prop_failed = !holds;
                checks = Some(Checks::Proposition {
                    claim_id: claim,
                    conclusion_holds: holds,
                });
            }
        }
        Target::Identities => {
            let report = check_identities(g);
            prop_failed = !report.all_hold();
            checks = Some(Checks::Identities(report));
        }
    }
    if !run.pass {
        return Ok(Outcome::Skipped);
    }
    let filters = std::mem::take(&mut run.map);
    let real_rooted = is_real_rooted(&counts);
    let flags = match target {
        Target::Conj1 | Target::Conj2 | Target::Conj3(_) => Flags {
            counterexample: !real_rooted,
            hit: false,
        },
        Target::Quest1 => Flags {
            counterexample: false,
            hit: real_rooted,
        },
        Target::Prop(_) | Target::Identities => Flags {
            counterexample: prop_failed,
            hit: false,
        },
    };
    let graph6 = g.to_graph6().map_err(GraphError::from)?;
    if flags.counterexample {
        double_check(target, seq, &graph6, g, &counts)?;
    }
    Ok(Outcome::Matched(Box::new(ScanRecord {
        seq,
        graph6,
        n: g.n(),
        m: g.edge_count(),
        filters,
        coeffs: counts,
        real_rooted,
        flags,
        checks,
    })))
}

/// Re-derives the clique vector independently and re-decides the verdict
/// on a freshly built polynomial without the cache.
fn double_check(
    target: Target,
    seq: u64,
    graph6: &str,
    g: &Graph,
    counts: &CliqueVector,
) -> Result<(), ScanError> {
    let fail = |reason: String| ScanError::DoubleCheck {
        seq,
        graph6: graph6.to_string(),
        reason,
    };
    let fresh = if g.n() <= MAX_ORACLE_VERTICES {
        naive_clique_counts(g).expect("within oracle range")
    } else {
        log::warn!(
            "graph {seq}: {} vertices exceed the subset oracle; recounting on the reversed labeling",
            g.n()
        );
        let n = g.n();
        let edges: Vec<_> = g.edges().map(|(u, v)| (n - 1 - u, n - 1 - v)).collect();
        clique_counts(&Graph::from_edge_list(n, &edges)?)
    };
    if &fresh != counts {
        return Err(fail(format!(
            "clique vector {:?} differs from subset oracle {:?}",
            counts.counts(),
            fresh.counts()
        )));
    }
    match target {
        Target::Prop(claim) => {
            if verify(claim, g).conclusion_holds != Some(false) {
                return Err(fail("verifier verdict changed on re-run".into()));
            }
        }
        Target::Identities => {
            if check_identities(g).all_hold() {
                return Err(fail("identity verdict changed on re-run".into()));
            }
        }
        _ => {
            let report =
                isolate_real_roots(&fresh.to_polynomial()).expect("clique polynomials are nonzero");
            if report.is_real_rooted {
                return Err(fail(
                    "fresh isolation finds the polynomial real-rooted".into(),
                ));
            }
        }
    }
    Ok(())
}

type Item = (u64, Option<Graph>);

/// Pulls the next batch of graphs from a source.
trait Feed {
    fn next_batch(&mut self, out: &mut Vec<Item>) -> Result<(), ScanError>;
}

struct BuiltinFeed {
    n: usize,
    next: u64,
    total: u64,
}

impl Feed for BuiltinFeed {
    fn next_batch(&mut self, out: &mut Vec<Item>) -> Result<(), ScanError> {
        let end = self.total.min(self.next + BATCH as u64);
        out.extend((self.next..end).map(|i| (i, Some(labeled_graph_from_index(self.n, i)))));
        self.next = end;
        Ok(())
    }
}

/// graph6 lines; blank lines are ignored and do not take a sequence number.
struct Graph6Feed<R> {
    reader: R,
    line_no: usize,
    seq: u64,
    buf: String,
}

impl<R: BufRead> Feed for Graph6Feed<R> {
    fn next_batch(&mut self, out: &mut Vec<Item>) -> Result<(), ScanError> {
        while out.len() < BATCH {
            self.buf.clear();
            if self.reader.read_line(&mut self.buf)? == 0 {
                break;
            }
            self.line_no += 1;
            let line = self.buf.trim();
            if line.is_empty() {
                continue;
            }
            let g = match Graph::parse_graph6(line) {
                Ok(g) => Some(g),
                Err(e) => {
                    log::warn!("line {}: skipping malformed graph6: {e}", self.line_no);
                    None
                }
            };
            out.push((self.seq, g));
            self.seq += 1;
        }
        Ok(())
    }
}

fn open_feed(source: &Source) -> Result<Box<dyn Feed>, ScanError> {
    let graph6 = |reader: Box<dyn BufRead>| -> Box<dyn Feed> {
        Box::new(Graph6Feed {
            reader,
            line_no: 0,
            seq: 0,
            buf: String::new(),
        })
    };
    Ok(match source {
        Source::Builtin(n) => Box::new(BuiltinFeed {
            n: *n,
            next: 0,
            total: labeled_graph_count(*n)?,
        }),
        Source::Graph6File(path) => {
            let file = File::open(path)
                .map_err(|e| ScanError::Config(format!("cannot open {}: {e}", path.display())))?;
            graph6(Box::new(BufReader::new(file)))
        }
        Source::Stdin => graph6(Box::new(BufReader::new(io::stdin()))),
    })
}

/// Runs a scan, writing JSON lines to `out`, and returns the summary (which
/// is also the last line written).
pub fn run_scan<W: Write>(config: &ScanConfig, out: &mut W) -> Result<ScanSummary, ScanError> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| ScanError::Config(format!("cannot start worker pool: {e}")))?;
    let mut feed = open_feed(&config.source)?;
    let mut summary = ScanSummary {
        target: config.target.to_string(),
        ..ScanSummary::default()
    };
    let target = config.target;
    let mut batch = Vec::with_capacity(BATCH);
    loop {
        batch.clear();
        feed.next_batch(&mut batch)?;
        if batch.is_empty() {
            break;
        }
        let results: Vec<Result<Outcome, ScanError>> = pool.install(|| {
            batch
                .par_iter()
                .map(|(seq, g)| match g {
                    Some(g) => evaluate(target, *seq, g),
                    None => Ok(Outcome::Malformed),
                })
                .collect()
        });
        for r in results {
            summary.seen += 1;
            match r? {
                Outcome::Malformed => {
                    summary.seen -= 1;
                    summary.malformed += 1;
                }
                Outcome::Skipped => {}
                Outcome::Matched(rec) => {
                    summary.filtered += 1;
                    summary.counterexamples += rec.flags.counterexample as u64;
                    summary.hits += rec.flags.hit as u64;
                    let report = match config.emit {
                        Emit::All => true,
                        Emit::Hits => rec.flags.counterexample || rec.flags.hit,
                        Emit::Summary => false,
                    };
                    if report {
                        serde_json::to_writer(&mut *out, &*rec).map_err(io::Error::from)?;
                        out.write_all(b"\n")?;
                    }
                }
            }
        }
        log::debug!("{}: {} graphs seen", summary.target, summary.seen);
    }
    #[derive(Serialize)]
    struct Wrapper<'a> {
        summary: &'a ScanSummary,
    }
    serde_json::to_writer(&mut *out, &Wrapper { summary: &summary }).map_err(io::Error::from)?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::NamedTempFile;

    fn scan(target: Target, source: Source, emit: Emit, jobs: usize) -> (ScanSummary, String) {
        let mut cfg = ScanConfig::new(target, source);
        cfg.emit = emit;
        cfg.jobs = jobs;
        let mut out = Vec::new();
        let s = run_scan(&cfg, &mut out).unwrap();
        (s, String::from_utf8(out).unwrap())
    }

    #[test]
    fn target_syntax() {
        assert_eq!("conj1".parse::<Target>().unwrap(), Target::Conj1);
        assert_eq!("CONJ3:2".parse::<Target>().unwrap(), Target::Conj3(2));
        assert_eq!("conj3(1)".parse::<Target>().unwrap(), Target::Conj3(1));
        assert_eq!(
            "prop:k4_chordal".parse::<Target>().unwrap(),
            Target::Prop(ClaimId::K4Chordal)
        );
        assert!("conj3".parse::<Target>().is_err());
        assert!("conj3:0".parse::<Target>().is_err());
        assert!("conj4".parse::<Target>().is_err());
        for t in [
            "conj1",
            "conj2",
            "conj3:4",
            "quest1",
            "prop:TREE",
            "identities",
        ] {
            assert_eq!(t.parse::<Target>().unwrap().to_string(), t);
        }
    }

    #[test]
    fn conj1_on_three_vertices() {
        let (s, out) = scan(Target::Conj1, Source::Builtin(3), Emit::All, 1);
        assert_eq!(s.seen, 8);
        assert_eq!(s.filtered, 4);
        assert_eq!(s.counterexamples, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[4].starts_with("{\"summary\":"));
        let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(first["filters"]["connected"], true);
        assert_eq!(first["real_rooted"], true);
    }

    #[test]
    fn quest1_registers_the_wheel_as_a_hit() {
        let mut file = NamedTempFile::new().unwrap();
        let wheel = Graph::from_edge_list(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
                (1, 3),
            ],
        )
        .unwrap();
        writeln!(file, "{}", Graph::path(4).to_graph6().unwrap()).unwrap();
        writeln!(file, "{}", wheel.to_graph6().unwrap()).unwrap();
        let path = file.path().to_path_buf();
        let (s, out) = scan(Target::Quest1, Source::Graph6File(path), Emit::Hits, 1);
        assert_eq!(s.seen, 2);
        assert_eq!(s.hits, 1);
        assert_eq!(s.counterexamples, 0);
        let rec: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
        assert_eq!(rec["seq"], 1);
        assert_eq!(rec["coeffs"], serde_json::json!([1, 6, 11, 7, 1]));
        assert_eq!(rec["flags"]["hit"], true);
    }

    #[test]
    fn identities_on_four_vertices() {
        let (s, _) = scan(Target::Identities, Source::Builtin(4), Emit::Summary, 2);
        assert_eq!(s.seen, 64);
        assert_eq!(s.filtered, 64);
        assert_eq!(s.counterexamples, 0);
    }

    #[test]
    fn malformed_lines_are_counted_and_skipped() {
        let mut file = NamedTempFile::new().unwrap();
        writeln!(file, "Bw\n\n!!\nBg").unwrap();
        let path = file.path().to_path_buf();
        let (s, out) = scan(Target::Conj1, Source::Graph6File(path), Emit::All, 1);
        assert_eq!(s.malformed, 1);
        assert_eq!(s.seen, 2);
        assert_eq!(s.filtered, 2);
        // "Bg" is the third non-blank line
        assert!(out.contains("\"seq\":2"));
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let (_, a) = scan(Target::Conj2, Source::Builtin(5), Emit::All, 1);
        let (_, b) = scan(Target::Conj2, Source::Builtin(5), Emit::All, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn builtin_size_is_checked() {
        let cfg = ScanConfig::new(Target::Conj1, Source::Builtin(8));
        assert!(run_scan(&cfg, &mut Vec::new()).is_err());
    }
}
