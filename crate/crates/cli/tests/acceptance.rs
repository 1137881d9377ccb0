//! Acceptance criteria 1 to 10. Prints one line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use blockscope::corpus::load_corpus;
use blockscope::verify::{run_suite, Finding, Options, Report, Status, Suite};
use blockscope_core::arith::prime_factors;
use blockscope_core::chartab::{compute_table, CharacterTable, ClassInfo};
use blockscope_core::cyclo::Cyclotomic;
use blockscope_core::perm::PermGroup;

fn corpus(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(sub)
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn opts(jobs: usize) -> Options {
    Options { jobs: Some(jobs), seed: 42, primes: None }
}

fn of_check<'a>(findings: &'a [Finding], check: &'a str) -> impl Iterator<Item = &'a Finding> + 'a {
    findings.iter().filter(move |f| f.check == check)
}

fn no_failures(findings: &[Finding], checks: &[&str]) -> Result<usize, String> {
    let mut passes = 0;
    for &c in checks {
        for f in of_check(findings, c) {
            match f.status {
                Status::Fail => return Err(format!("{c} fails on {} p={:?}: {}", f.group, f.p, f.payload)),
                Status::Capacity => return Err(format!("{c} exceeded capacity on {}", f.group)),
                Status::Pass => passes += 1,
                Status::Skipped => {}
            }
        }
    }
    Ok(passes)
}

fn find<'a>(findings: &'a [Finding], check: &str, group: &str, p: u64) -> Result<&'a Finding, String> {
    findings
        .iter()
        .find(|f| f.check == check && f.group == group && f.p == Some(p))
        .ok_or_else(|| format!("no {check} finding for {group}@{p}"))
}

fn witness_suite() -> Outcome {
    let start = Instant::now();
    let findings = run_suite(Suite::ThmA, &corpus("witness"), &opts(4)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let passes: BTreeSet<(String, u64)> = findings
        .iter()
        .filter(|f| f.status == Status::Pass)
        .map(|f| (f.group.clone(), f.p.unwrap()))
        .collect();
    let expected: BTreeSet<(String, u64)> =
        [("C5", 5), ("D14", 7), ("D8", 2), ("Q8", 2), ("C5:C4", 5), ("C7:C3", 7), ("S4", 2)]
            .into_iter()
            .map(|(g, p)| (g.to_string(), p))
            .collect();
    ensure(passes == expected, format!("witness passes {passes:?}"))?;
    ensure(findings.iter().all(|f| f.status != Status::Fail), "a witness fails")?;
    for f in findings.iter().filter(|f| f.status == Status::Pass) {
        ensure(f.payload["k_B0"] == 5, format!("{} has k(B0) = {}", f.group, f.payload["k_B0"]))?;
        let tag = f.payload["sylow"]["tag"].as_str().unwrap_or("");
        ensure(["C5", "C7", "D8", "Q8"].contains(&tag), format!("{} has Sylow {tag}", f.group))?;
    }
    ensure(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))?;
    Ok(format!("7 witnesses with k(B0) = 5 and legal descriptors in {:.2?}", elapsed))
}

fn theorem_a_scan(all: &[Finding], elapsed: Duration) -> Outcome {
    let passes = no_failures(all, &["thmA"])?;
    ensure(passes >= 7, format!("only {passes} groups with k(B0) = 5"))?;
    ensure(elapsed < Duration::from_secs(600), format!("took {elapsed:?}"))?;
    Ok(format!("{passes} (G, p) with k(B0) = 5, all legal, full run in {:.2?}", elapsed))
}

fn small_k_scan(all: &[Finding]) -> Outcome {
    let passes = no_failures(all, &["smaller4"])?;
    let a5 = find(all, "smaller4", "A5", 2)?;
    ensure(a5.payload["k_B0"] == 4, "A5@2 k(B0) ≠ 4")?;
    ensure(a5.payload["sylow"]["tag"] == "C2xC2", "A5@2 Sylow is not C2xC2")?;
    Ok(format!("{passes} (G, p) consistent; A5@2 gives k(B0) = 4 with C2xC2"))
}

fn divisibility(all: &[Finding]) -> Outcome {
    let two = no_failures(all, &["div2"])?;
    let three = no_failures(all, &["div3"])?;
    ensure(two > 0 && three > 0, "no findings")?;
    Ok(format!("{two} groups at p = 2 (every block), {three} principal 3-blocks"))
}

fn brauer_identity(all: &[Finding]) -> Outcome {
    let passes = no_failures(all, &["brauer-identity"])?;
    let q8 = find(all, "brauer-identity", "Q8", 2)?;
    let x = &q8.payload;
    ensure(x["lhs"] == 5 && x["rhs"] == 5, "Q8 sides differ from 5")?;
    ensure(x["center_p_part"] == 2 && x["l_principal"] == 1, "Q8 central term is not 2·1")?;
    let terms = x["terms"].as_array().ok_or("Q8 terms missing")?;
    ensure(terms.len() == 3 && terms.iter().all(|t| t["l"] == 1), "Q8 class terms are not 3·1")?;
    Ok(format!("{passes} (G, p) balanced; Q8@2 is 2·1 + 3·1 = 5"))
}

fn cyclic_defect(all: &[Finding]) -> Outcome {
    let passes = no_failures(all, &["cyclic"])?;
    let d14 = find(all, "cyclic", "D14", 7)?;
    ensure(d14.payload["e"] == 2 && d14.payload["k_B0"] == 5, "D14@7 is not e = 2, k = 5")?;
    Ok(format!("{passes} cyclic Sylow cases match e + (|P| - 1)/e; D14@7 gives e = 2, k = 5"))
}

fn height_zero(all: &[Finding]) -> Outcome {
    let passes = no_failures(all, &["heightzero"])?;
    Ok(format!("{passes} abelian Sylow cases with k(B0) = k0(B0)"))
}

fn structural(all: &[Finding]) -> Outcome {
    let checks = ["blockabove", "onlycovering", "inflation", "isomblocks", "tech", "covering", "restnumber", "unique-block"];
    no_failures(all, &checks)?;
    let counted = ["blockabove", "onlycovering", "inflation", "isomblocks", "tech"];
    let applicable = all.iter().filter(|f| counted.contains(&f.check.as_str()) && f.status == Status::Pass).count();
    ensure(applicable >= 200, format!("only {applicable} applicable configurations"))?;
    let per: Vec<String> = counted
        .iter()
        .map(|c| format!("{c} {}", of_check(all, c).filter(|f| f.status == Status::Pass).count()))
        .collect();
    Ok(format!("{applicable} applicable configurations hold ({})", per.join(", ")))
}

/// Independent table of an abelian group: homomorphisms to the roots of unity,
/// found by assigning exponents to the generators and propagating.
fn dual_group_table(g: &PermGroup) -> CharacterTable {
    let cd = g.class_data().unwrap();
    let elems = cd.elements().clone();
    let n = g.exponent().unwrap();
    let gens = g.generators().to_vec();
    let mut choices: Vec<Vec<u64>> = vec![vec![]];
    for s in &gens {
        let o = s.order();
        choices = choices
            .iter()
            .flat_map(|c| {
                (0..o).map(move |a| {
                    let mut c = c.clone();
                    c.push(a * (n / o));
                    c
                })
            })
            .collect();
    }
    let id = elems.index_of(&g.identity()).unwrap();
    let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
    let mut seen = HashSet::new();
    'outer: for c in choices {
        let mut exp: HashMap<usize, u64> = HashMap::from([(id, 0)]);
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for (s, &a) in gens.iter().zip(&c) {
                let y = elems.index_of(&(elems.get(x) * s)).unwrap();
                let e = (exp[&x] + a) % n;
                match exp.get(&y) {
                    Some(&f) if f != e => continue 'outer,
                    Some(_) => {}
                    None => {
                        exp.insert(y, e);
                        queue.push(y);
                    }
                }
            }
        }
        let row: Vec<u64> = cd.classes().iter().map(|k| exp[&elems.index_of(&k.representative).unwrap()]).collect();
        if seen.insert(row.clone()) {
            rows.push(row.iter().map(|&e| Cyclotomic::root_of_unity(n as u32, e as i64)).collect());
        }
    }
    let primes = prime_factors(n);
    let classes = cd
        .classes()
        .iter()
        .map(|c| ClassInfo {
            size: 1,
            order: c.element_order,
            powermaps: primes.iter().map(|&p| (p, cd.class_of(&c.representative.pow(p as i64)).unwrap())).collect(),
        })
        .collect();
    rows.sort_by_key(|r| r.iter().any(|v| v.to_integer() != Some(1)));
    CharacterTable::new("dual", g.order(), n as u32, classes, rows).unwrap()
}

fn table_integrity() -> Outcome {
    let (entries, rejected) = load_corpus(&corpus("groups")).map_err(|e| e.to_string())?;
    ensure(rejected.is_empty(), "unreadable corpus files")?;
    let mut abelian = 0;
    for e in &entries {
        let t = compute_table(&e.group, &e.name).map_err(|err| format!("{}: {err}", e.name))?;
        t.validate().map_err(|err| format!("{}: {err}", e.name))?;
        let sum: u64 = t.degrees().iter().map(|d| d * d).sum();
        ensure(sum == e.group.order(), format!("{}: Σ χ(1)² = {sum}", e.name))?;
        if e.group.is_abelian() {
            abelian += 1;
            let ours = t.with_name("x").canonicalize();
            let dual = dual_group_table(&e.group).with_name("x").canonicalize();
            ensure(ours.to_json() == dual.to_json(), format!("{}: differs from the dual group", e.name))?;
        }
    }
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/s4_external.json");
    let text = std::fs::read_to_string(&fixture).map_err(|e| e.to_string())?;
    let ingested = CharacterTable::from_json(&text, "s4_external.json").map_err(|e| e.to_string())?;
    ingested.validate().map_err(|e| e.to_string())?;
    Ok(format!("{} computed tables and 1 ingested table valid; {abelian} abelian tables equal their dual", entries.len()))
}

fn determinism(first: &Report) -> Outcome {
    let again = run_suite(Suite::All, &corpus("groups"), &opts(1)).map_err(|e| e.to_string())?;
    let again = Report::new(Suite::All, 42, again);
    ensure(first.to_json() == again.to_json(), "reports differ between runs")?;
    Ok(format!("two seed-42 runs (4 and 1 workers) give identical {}-byte reports", first.to_json().len()))
}

fn main() {
    let start = Instant::now();
    let all = run_suite(Suite::All, &corpus("groups"), &opts(4)).expect("corpus is readable");
    let elapsed = start.elapsed();
    let report = Report::new(Suite::All, 42, all);
    let f = &report.findings;
    let criteria: Vec<(&str, Outcome)> = vec![
        ("witness suite", witness_suite()),
        ("k(B0) = 5 scan", theorem_a_scan(f, elapsed)),
        ("k(B0) ≤ 4 scan", small_k_scan(f)),
        ("divisibility of k0", divisibility(f)),
        ("class-count identity", brauer_identity(f)),
        ("cyclic defect", cyclic_defect(f)),
        ("abelian Sylow height zero", height_zero(f)),
        ("structural lemmas", structural(f)),
        ("table integrity", table_integrity()),
        ("determinism", determinism(&report)),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in criteria.iter().enumerate() {
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
