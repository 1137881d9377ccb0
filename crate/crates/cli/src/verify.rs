//! Runs the statement suites over a corpus and assembles the report.

use std::cmp::Ordering;
use std::fmt;
use std::io;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use blockscope_core::arith::prime_factors;
use blockscope_core::blocks::{
    analyze, brauer_bound_holds, brauer_count_identity, cyclic_defect_count, divisibility2_holds,
    divisibility3_holds, height_zero_holds, small_k_holds, theorem_a_holds, BlockDecomposition,
};
use blockscope_core::chartab::{compute_table, CharacterTable};
use blockscope_core::normal::{
    check_blockabove, check_covering, check_isomblocks, check_onlycovering, check_quotient_inflation,
    check_restnumber, check_tech, check_unique_block, harness_normal_subgroups, sylow_with_centralizer,
    CheckOutcome, NormalPair,
};
use blockscope_core::perm::{is_solvable, PermGroup};
use blockscope_core::Error;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::corpus::{load_corpus, CorpusEntry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    ThmA,
    Smaller4,
    Div2,
    Div3,
    HeightZero,
    Cyclic,
    BrauerIdentity,
    KbBound,
    Covering,
    Inflation,
    Isomblocks,
    Tech,
    UniqueBlock,
    ClassNumber,
    All,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::ThmA,
        Suite::Smaller4,
        Suite::Div2,
        Suite::Div3,
        Suite::HeightZero,
        Suite::Cyclic,
        Suite::BrauerIdentity,
        Suite::KbBound,
        Suite::Covering,
        Suite::Inflation,
        Suite::Isomblocks,
        Suite::Tech,
        Suite::UniqueBlock,
        Suite::ClassNumber,
        Suite::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::ThmA => "thmA",
            Suite::Smaller4 => "smaller4",
            Suite::Div2 => "div2",
            Suite::Div3 => "div3",
            Suite::HeightZero => "heightzero",
            Suite::Cyclic => "cyclic",
            Suite::BrauerIdentity => "brauer-identity",
            Suite::KbBound => "kB-bound",
            Suite::Covering => "covering",
            Suite::Inflation => "inflation",
            Suite::Isomblocks => "isomblocks",
            Suite::Tech => "tech",
            Suite::UniqueBlock => "unique-block",
            Suite::ClassNumber => "class-number",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }

    fn needs_normal_pairs(self) -> bool {
        [Suite::Covering, Suite::Isomblocks, Suite::Tech].iter().any(|&s| self.includes(s))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl Serialize for Suite {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Suite {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Capacity,
}

/// The normal subgroup a finding refers to: its position in the harness
/// enumeration of the group, and its order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalRef {
    pub index: usize,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub suite: Suite,
    pub check: String,
    pub group: String,
    pub file: String,
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub normal: Option<NormalRef>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub seed: u64,
    pub payload: Value,
}

impl Finding {
    fn order_key(&self) -> (&str, &str, Option<u64>, Suite, &str, Option<NormalRef>) {
        (&self.group, &self.file, self.p, self.suite, &self.check, self.normal)
    }
}

fn canonical_order(a: &Finding, b: &Finding) -> Ordering {
    a.order_key().cmp(&b.order_key())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub capacity: usize,
}

impl Summary {
    pub fn of(findings: &[Finding]) -> Self {
        let mut s = Summary::default();
        for f in findings {
            match f.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
                Status::Capacity => s.capacity += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: Suite,
    pub seed: u64,
    pub findings: Vec<Finding>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: Suite, seed: u64, findings: Vec<Finding>) -> Self {
        let summary = Summary::of(&findings);
        Report { suite, seed, findings, summary }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Per-check counts followed by every failing finding.
    pub fn human(&self) -> String {
        use std::collections::BTreeMap;
        use std::fmt::Write;
        let mut rows: BTreeMap<(Suite, &str), Summary> = BTreeMap::new();
        for f in &self.findings {
            let e = rows.entry((f.suite, &f.check)).or_default();
            match f.status {
                Status::Pass => e.pass += 1,
                Status::Fail => e.fail += 1,
                Status::Skipped => e.skipped += 1,
                Status::Capacity => e.capacity += 1,
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "{:<16} {:<16} {:>6} {:>6} {:>8} {:>8}", "suite", "check", "pass", "fail", "skipped", "capacity");
        for ((suite, check), s) in &rows {
            let _ = writeln!(out, "{:<16} {:<16} {:>6} {:>6} {:>8} {:>8}", suite.as_str(), check, s.pass, s.fail, s.skipped, s.capacity);
        }
        let s = self.summary;
        let _ = writeln!(out, "{:<33} {:>6} {:>6} {:>8} {:>8}", "total", s.pass, s.fail, s.skipped, s.capacity);
        for f in self.findings.iter().filter(|f| f.status == Status::Fail) {
            let p = f.p.map_or("-".to_string(), |p| p.to_string());
            let n = f.normal.map_or(String::new(), |n| format!(" N#{} (order {})", n.index, n.order));
            let _ = writeln!(
                out,
                "FAIL {} {} {} ({}) p={}{}: {}",
                f.suite,
                f.check,
                f.group,
                f.file,
                p,
                n,
                f.reason.clone().unwrap_or_else(|| f.payload.to_string())
            );
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Worker threads; `None` uses every available core.
    pub jobs: Option<usize>,
    pub seed: u64,
    /// Restricts the primes examined; `None` uses every prime dividing `|G|`.
    pub primes: Option<Vec<u64>>,
}

/// Solvable groups with at most five classes, as `(k(G), |G|)`.
const SMALL_CLASS_NUMBER: [(usize, u64); 13] = [
    (1, 1),
    (2, 2),
    (3, 3),
    (3, 6),
    (4, 4),
    (4, 10),
    (4, 12),
    (5, 5),
    (5, 8),
    (5, 14),
    (5, 20),
    (5, 21),
    (5, 24),
];

struct GroupContext {
    file: String,
    name: String,
    group: PermGroup,
    table: Arc<CharacterTable>,
    pairs: Vec<(NormalRef, NormalPair)>,
}

enum Verdict {
    Pass(Value),
    Fail(Value),
    Skipped(String, Value),
    Capacity(String),
    Error(String),
}

impl From<CheckOutcome> for Verdict {
    fn from(o: CheckOutcome) -> Self {
        match (o.applicable, o.holds) {
            (false, _) => Verdict::Skipped("hypotheses not met".into(), o.detail),
            (true, true) => Verdict::Pass(o.detail),
            (true, false) => Verdict::Fail(o.detail),
        }
    }
}

impl From<Error> for Verdict {
    fn from(e: Error) -> Self {
        match e {
            Error::Capacity { .. } => Verdict::Capacity(e.to_string()),
            other => Verdict::Error(other.to_string()),
        }
    }
}

fn verdict(holds: bool, payload: Value) -> Verdict {
    if holds {
        Verdict::Pass(payload)
    } else {
        Verdict::Fail(payload)
    }
}

struct Sink<'a> {
    suite: Suite,
    group: &'a str,
    file: &'a str,
    seed: u64,
    out: Vec<Finding>,
}

impl Sink<'_> {
    fn push(&mut self, check: &str, p: Option<u64>, normal: Option<NormalRef>, v: Verdict) {
        let (status, reason, payload) = match v {
            Verdict::Pass(x) => (Status::Pass, None, x),
            Verdict::Fail(x) => (Status::Fail, None, x),
            Verdict::Skipped(r, x) => (Status::Skipped, Some(r), x),
            Verdict::Capacity(r) => (Status::Capacity, Some(r), Value::Null),
            Verdict::Error(r) => (Status::Fail, Some(r), Value::Null),
        };
        self.out.push(Finding {
            suite: self.suite,
            check: check.to_string(),
            group: self.group.to_string(),
            file: self.file.to_string(),
            p,
            normal,
            status,
            reason,
            seed: self.seed,
            payload,
        });
    }
}

/// Runs `suite` over every group file in `corpus`. Only an unreadable corpus
/// directory is an error; per-file problems become findings.
pub fn run_suite(suite: Suite, corpus: &Path, opts: &Options) -> io::Result<Vec<Finding>> {
    let (entries, rejected) = load_corpus(corpus)?;
    let mut findings: Vec<Finding> = rejected
        .into_iter()
        .map(|r| Finding {
            suite,
            check: "load".into(),
            group: String::new(),
            file: r.file,
            p: None,
            normal: None,
            status: Status::Skipped,
            reason: Some(r.reason),
            seed: opts.seed,
            payload: Value::Null,
        })
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.unwrap_or(0))
        .build()
        .map_err(io::Error::other)?;
    pool.install(|| findings.extend(run_entries(suite, &entries, opts)));
    findings.sort_by(canonical_order);
    Ok(findings)
}

fn run_entries(suite: Suite, entries: &[CorpusEntry], opts: &Options) -> Vec<Finding> {
    let staged: Vec<(Option<GroupContext>, Vec<Finding>)> =
        entries.par_iter().map(|e| prepare_group(suite, e, opts.seed)).collect();
    let mut findings = Vec::new();
    let mut contexts = Vec::new();
    for (ctx, f) in staged {
        findings.extend(f);
        if let Some(ctx) = ctx {
            contexts.push(ctx);
        }
    }
    let mut jobs: Vec<(usize, u64)> = contexts
        .iter()
        .enumerate()
        .flat_map(|(i, c)| {
            prime_factors(c.group.order())
                .into_iter()
                .filter(|p| opts.primes.as_ref().is_none_or(|ps| ps.contains(p)))
                .map(move |p| (i, p))
        })
        .collect();
    // scheduling order only; the findings are sorted afterwards
    jobs.shuffle(&mut ChaCha8Rng::seed_from_u64(opts.seed));
    let per_job: Vec<Vec<Finding>> = jobs.par_iter().map(|&(i, p)| run_job(suite, &contexts[i], p, opts.seed)).collect();
    findings.extend(per_job.into_iter().flatten());
    findings
}

fn prepare_group(suite: Suite, e: &CorpusEntry, seed: u64) -> (Option<GroupContext>, Vec<Finding>) {
    let mut sink = Sink { suite, group: &e.name, file: &e.file, seed, out: Vec::new() };
    let table = match compute_table(&e.group, &e.name) {
        Ok(t) => Arc::new(t),
        Err(err) => {
            sink.push("table", None, None, err.into());
            return (None, sink.out);
        }
    };
    let mut pairs = Vec::new();
    if suite.needs_normal_pairs() {
        let built = harness_normal_subgroups(&e.group).and_then(|subs| {
            subs.iter()
                .enumerate()
                .map(|(index, n)| {
                    let r = NormalRef { index, order: n.order() };
                    NormalPair::new(&e.group, table.clone(), n).map(|pr| (r, pr))
                })
                .collect::<Result<Vec<_>, _>>()
        });
        match built {
            Ok(p) => pairs = p,
            Err(err) => {
                sink.push("normal-subgroups", None, None, err.into());
                return (None, sink.out);
            }
        }
    }
    if suite.includes(Suite::Covering) {
        for (r, pr) in &pairs {
            let v = check_restnumber(pr).map_or_else(Verdict::from, Verdict::from);
            sink.push("restnumber", None, Some(*r), v);
        }
    }
    if suite.includes(Suite::ClassNumber) {
        let v = class_number(&e.group, &table).unwrap_or_else(Verdict::from);
        sink.push("class-number", None, None, v);
    }
    let ctx = GroupContext { file: e.file.clone(), name: e.name.clone(), group: e.group.clone(), table, pairs };
    (Some(ctx), sink.out)
}

fn class_number(g: &PermGroup, t: &CharacterTable) -> Result<Verdict, Error> {
    let k = t.num_classes();
    if k > 5 || !is_solvable(g)? {
        return Ok(Verdict::Skipped("not a solvable group with k(G) ≤ 5".into(), json!({ "k": k })));
    }
    let listed = SMALL_CLASS_NUMBER.contains(&(k, g.order()));
    Ok(verdict(listed, json!({ "k": k, "order": g.order() })))
}

fn run_job(suite: Suite, ctx: &GroupContext, p: u64, seed: u64) -> Vec<Finding> {
    let mut sink = Sink { suite, group: &ctx.name, file: &ctx.file, seed, out: Vec::new() };
    let d = match analyze(&ctx.group, &ctx.table, p) {
        Ok(d) => d,
        Err(err) => {
            sink.push("blocks", Some(p), None, err.into());
            return sink.out;
        }
    };
    group_checks(&mut sink, suite, ctx, &d);
    if suite.needs_normal_pairs() || suite.includes(Suite::Inflation) {
        if let Err(err) = normal_checks(&mut sink, suite, ctx, &d) {
            sink.push("normal", Some(p), None, err.into());
        }
    }
    sink.out
}

fn group_checks(sink: &mut Sink<'_>, suite: Suite, ctx: &GroupContext, d: &BlockDecomposition) {
    let p = d.p;
    let sylow = d.sylow.clone().expect("analyze records the Sylow descriptor");
    let b0 = d.principal();
    let base = json!({ "k_B0": b0.k, "k0_B0": b0.k0, "l_B0": b0.l, "sylow": sylow });
    let sp = Some(p);

    if suite.includes(Suite::ThmA) {
        let v = if b0.k == 5 {
            verdict(theorem_a_holds(b0.k, &sylow), base.clone())
        } else {
            Verdict::Skipped("k(B0) ≠ 5".into(), base.clone())
        };
        sink.push("thmA", sp, None, v);
    }
    if suite.includes(Suite::Smaller4) {
        sink.push("smaller4", sp, None, verdict(small_k_holds(b0.k, &sylow), base.clone()));
    }
    if suite.includes(Suite::Div2) && p == 2 {
        let bad: Vec<usize> = (0..d.blocks.len()).filter(|&i| !divisibility2_holds(&d.blocks[i])).collect();
        let blocks: Vec<Value> = d.blocks.iter().map(|b| json!({ "defect": b.defect, "k0": b.k0 })).collect();
        sink.push("div2", sp, None, verdict(bad.is_empty(), json!({ "blocks": blocks, "violations": bad })));
    }
    if suite.includes(Suite::Div3) && p == 3 {
        let payload = json!({ "defect": b0.defect, "k0_B0": b0.k0 });
        sink.push("div3", sp, None, verdict(divisibility3_holds(b0), payload));
    }
    if suite.includes(Suite::HeightZero) {
        let v = if sylow.is_abelian() {
            verdict(height_zero_holds(b0, &sylow), base.clone())
        } else {
            Verdict::Skipped("Sylow subgroup is not abelian".into(), base.clone())
        };
        sink.push("heightzero", sp, None, v);
    }
    if suite.includes(Suite::Cyclic) {
        let v = if sylow.is_cyclic() {
            match cyclic_defect_count(&ctx.group, p) {
                Ok(c) => verdict(
                    c.predicted == b0.k as u64,
                    json!({ "e": c.e, "sylow_order": c.sylow_order, "predicted": c.predicted, "k_B0": b0.k }),
                ),
                Err(e) => e.into(),
            }
        } else {
            Verdict::Skipped("Sylow subgroup is not cyclic".into(), base.clone())
        };
        sink.push("cyclic", sp, None, v);
    }
    if suite.includes(Suite::BrauerIdentity) {
        let v = match brauer_count_identity(&ctx.group, &ctx.table, p) {
            Ok(id) => verdict(id.holds(), serde_json::to_value(&id).expect("identity serializes")),
            Err(e) => e.into(),
        };
        sink.push("brauer-identity", sp, None, v);
    }
    if suite.includes(Suite::KbBound) {
        let bad: Vec<usize> = (0..d.blocks.len()).filter(|&i| !brauer_bound_holds(&d.blocks[i])).collect();
        let blocks: Vec<Value> = d.blocks.iter().map(|b| json!({ "k": b.k, "defect": b.defect })).collect();
        sink.push("kB-bound", sp, None, verdict(bad.is_empty(), json!({ "blocks": blocks, "violations": bad })));
    }
    if suite.includes(Suite::UniqueBlock) {
        let v = check_unique_block(&ctx.group, d).map_or_else(Verdict::from, Verdict::from);
        sink.push("unique-block", sp, None, v);
    }
}

fn normal_checks(sink: &mut Sink<'_>, suite: Suite, ctx: &GroupContext, dg: &BlockDecomposition) -> Result<(), Error> {
    let p = dg.p;
    let sp = Some(p);
    if suite.includes(Suite::Inflation) {
        let v = check_quotient_inflation(&ctx.group, &ctx.table, dg).map_or_else(Verdict::from, Verdict::from);
        sink.push("inflation", sp, None, v);
    }
    if !suite.needs_normal_pairs() {
        return Ok(());
    }
    let (sylow, pc) = sylow_with_centralizer(&ctx.group, p)?;
    for (r, pair) in &ctx.pairs {
        let dn = match blockscope_core::blocks::block_partition(&pair.t_n, p) {
            Ok(dn) => dn,
            Err(e) => {
                sink.push("normal-blocks", sp, Some(*r), e.into());
                continue;
            }
        };
        let n = Some(*r);
        if suite.includes(Suite::Covering) {
            sink.push("blockabove", sp, n, check_blockabove(pair, dg, &dn).into());
            sink.push("covering", sp, n, check_covering(pair, dg, &dn).into());
            sink.push("onlycovering", sp, n, check_onlycovering(pair, dg, &dn, &pc, sylow.order()).into());
        }
        if suite.includes(Suite::Isomblocks) {
            sink.push("isomblocks", sp, n, check_isomblocks(pair, dg, &dn, &pc).into());
        }
        if suite.includes(Suite::Tech) {
            sink.push("tech", sp, n, check_tech(pair, dg, &dn, &pc).into());
        }
    }
    Ok(())
}
