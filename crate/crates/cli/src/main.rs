use std::path::{Path, PathBuf};
use std::process::ExitCode;

use blockscope::verify::{run_suite, Options, Report, Status, Suite};
use blockscope_core::blocks::{analyze, block_partition, BlockDecomposition, BlockReport};
use blockscope_core::chartab::{compute_table, CharacterTable};
use blockscope_core::io::GroupFile;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "blockscope", version, about = "Character tables and p-blocks of finite permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the character table of a group file.
    Table {
        group: PathBuf,
        /// Write the table here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose the characters of a group or table file into p-blocks.
    Blocks {
        file: PathBuf,
        #[arg(short)]
        p: u64,
        /// Print the block report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite over a corpus directory of group files.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Only examine these primes (comma separated).
        #[arg(long = "p", value_delimiter = ',')]
        primes: Vec<u64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn locus(path: &Path) -> String {
    path.display().to_string()
}

fn run(cmd: Command) -> Result<ExitCode, String> {
    match cmd {
        Command::Table { group, out } => {
            let gf = GroupFile::from_json(&read(&group)?, &locus(&group)).map_err(|e| e.to_string())?;
            let g = gf.to_group().map_err(|e| e.to_string())?;
            let t = compute_table(&g, &gf.name).map_err(|e| e.to_string())?;
            match out {
                Some(path) => write(&path, &t.to_json())?,
                None => println!("{}", t.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Blocks { file, p, json } => {
            let text = read(&file)?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| format!("{}:{}:{}: {e}", locus(&file), e.line(), e.column()))?;
            let (name, d) = if value.get("generators").is_some() {
                let gf = GroupFile::from_json(&text, &locus(&file)).map_err(|e| e.to_string())?;
                let g = gf.to_group().map_err(|e| e.to_string())?;
                let t = compute_table(&g, &gf.name).map_err(|e| e.to_string())?;
                (gf.name, analyze(&g, &t, p).map_err(|e| e.to_string())?)
            } else {
                let t = CharacterTable::from_json(&text, &locus(&file)).map_err(|e| e.to_string())?;
                (t.name().to_string(), block_partition(&t, p).map_err(|e| e.to_string())?)
            };
            let report = BlockReport::new(name, &d);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("block reports serialize"));
            } else {
                print!("{}", human_blocks(&report, &d));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, corpus, jobs, seed, report, primes } => {
            let opts = Options { jobs, seed, primes: (!primes.is_empty()).then_some(primes) };
            let findings = run_suite(suite, &corpus, &opts).map_err(|e| format!("{}: {e}", corpus.display()))?;
            let rep = Report::new(suite, seed, findings);
            if let Some(path) = report {
                write(&path, &rep.to_json())?;
            }
            print!("{}", rep.human());
            let failed = rep.findings.iter().any(|f| f.status == Status::Fail);
            Ok(if failed { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
    }
}

fn human_blocks(r: &BlockReport, d: &BlockDecomposition) -> String {
    let mut out = format!("{}  p = {}", r.group, r.p);
    if let Some(s) = &r.sylow {
        out.push_str(&format!("  Sylow {} (order {})", s.tag, s.order));
    }
    out.push('\n');
    out.push_str(&format!("{:>5} {:>9} {:>6} {:>4} {:>4} {:>4}  chars\n", "block", "principal", "defect", "k", "k0", "l"));
    for (i, b) in r.blocks.iter().enumerate() {
        let chars: Vec<String> = b.chars.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!(
            "{:>5} {:>9} {:>6} {:>4} {:>4} {:>4}  {}\n",
            i,
            if b.principal { "yes" } else { "" },
            b.defect,
            b.k,
            b.k0,
            b.l,
            chars.join(",")
        ));
    }
    debug_assert_eq!(d.blocks.len(), r.blocks.len());
    out
}
