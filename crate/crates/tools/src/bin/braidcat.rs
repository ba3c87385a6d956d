use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use braidcat::fincat::{check_enriched, check_kfold, verify_theorem41, Report};
use braidcat::lk::LkRepresentation;
use braidcat::{
    braids_equal, check, derived_braid, handle_equal, left_normal_form, BraidWord, CheckKind, DerivedKind,
    HandleVerdict, DEFAULT_FUEL,
};
use braidcat_tools::{fuzz, instance, scans, search};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "braidcat", version, about = "Braid-group oracles, derived-braid searches and finite category checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Normal forms and equality in B_n.
    Braid {
        #[command(subcommand)]
        cmd: BraidCmd,
    },
    /// Prints a derived B_6 braid of a B_4 word.
    Derive {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Runs the associativity and functoriality checks on a B_4 word.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_delimiter = ',', default_value = "assoc,funct")]
        tests: Vec<Test>,
    },
    Search {
        #[command(subcommand)]
        cmd: SearchCmd,
    },
    Coset {
        #[command(subcommand)]
        cmd: CosetCmd,
    },
    Obstruction {
        #[command(subcommand)]
        cmd: ObstructionCmd,
    },
    /// Cross-checks the three equality oracles on random word pairs.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    Fincat {
        #[command(subcommand)]
        cmd: FincatCmd,
    },
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Left normal form of a word.
    Nf {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Decides a = b.
    Eq {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum, default_value = "all")]
        oracle: Oracle,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Exhaustive search for braids passing both checks.
    Conjecture {
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Accepted for interface stability; the search is exhaustive and
        /// uses no randomness.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CosetCmd {
    Scan {
        #[arg(long)]
        range: i64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Subcommand)]
enum ObstructionCmd {
    Scan {
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Subcommand)]
enum FincatCmd {
    /// Loads an instance file and runs every applicable checker.
    Check {
        #[arg(long)]
        file: PathBuf,
        /// Number of products to check as a k-fold structure.
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "L")]
    L,
    #[value(name = "R")]
    R,
    #[value(name = "FL")]
    Fl,
    #[value(name = "FR")]
    Fr,
}

#[derive(Clone, Copy, ValueEnum)]
enum Test {
    Assoc,
    Funct,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Oracle {
    Nf,
    Handle,
    Lk,
    All,
}

/// Outcome of a command that ran to completion.
enum Verdict {
    Ok,
    Violation,
}

fn parse_word(text: &str, n: usize) -> anyhow::Result<BraidWord> {
    BraidWord::parse(text, n).with_context(|| format!("cannot parse braid word {text:?} on {n} strands"))
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Ok
    } else {
        Verdict::Violation
    }
}

fn braid_eq(n: usize, a: &str, b: &str, oracle: Oracle) -> anyhow::Result<Verdict> {
    let (a, b) = (parse_word(a, n)?, parse_word(b, n)?);
    let mut answers = Vec::new();
    if matches!(oracle, Oracle::Nf | Oracle::All) {
        let eq = braids_equal(&a, &b);
        println!("nf: {}", if eq { "equal" } else { "unequal" });
        answers.push(eq);
    }
    if matches!(oracle, Oracle::Handle | Oracle::All) {
        match handle_equal(&a, &b, DEFAULT_FUEL)? {
            HandleVerdict::Equal => answers.push(true),
            HandleVerdict::Unequal => answers.push(false),
            HandleVerdict::BudgetExhausted => {
                println!("handle: budget exhausted");
                return Ok(Verdict::Violation);
            }
        }
        println!("handle: {}", if answers[answers.len() - 1] { "equal" } else { "unequal" });
    }
    if matches!(oracle, Oracle::Lk | Oracle::All) {
        let eq = LkRepresentation::new(n)?.equal(&a, &b)?;
        println!("lk: {}", if eq { "equal" } else { "unequal" });
        answers.push(eq);
    }
    if answers.windows(2).any(|p| p[0] != p[1]) {
        println!("oracles disagree");
        return Ok(Verdict::Violation);
    }
    println!("{}", if answers[0] { "equal" } else { "unequal" });
    Ok(Verdict::Ok)
}

fn print_report(title: &str, r: &Report) {
    println!("== {title}");
    print!("{r}");
}

fn fincat_check(file: &PathBuf, k: Option<usize>) -> anyhow::Result<Verdict> {
    let text = std::fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    let loaded = match instance::load_instance(&text) {
        Ok(l) => l,
        Err(instance::LoadError::Invalid { section, source }) => {
            println!("instance rejected in {section}: {source}");
            return Ok(Verdict::Violation);
        }
        Err(e) => return Err(e.into()),
    };
    let v = &loaded.v;
    println!(
        "loaded: {} objects, {} morphisms, {} products, {} enriched categories",
        v.base().objects(),
        v.base().morphisms(),
        v.products(),
        loaded.enriched.len()
    );
    let mut ok = true;
    let k = k.unwrap_or(if v.products() >= 2 && v.has_eta(1, 2) { v.products() } else { 1 });
    if k >= 2 {
        let r = check_kfold(v, k)?;
        print_report(&format!("{k}-fold monoidal"), &r);
        ok &= r.passed();
    }
    for (e, a) in loaded.enriched.iter().enumerate() {
        let r = check_enriched(v, a)?;
        print_report(&format!("enriched {e}"), &r);
        ok &= r.passed();
    }
    if ok && k >= 2 && !loaded.enriched.is_empty() {
        let r = verify_theorem41(v, k, &loaded.enriched)?;
        print_report("products of enriched categories", &r);
        ok &= r.passed();
    }
    println!("{}", if ok { "all checks passed" } else { "violation found" });
    Ok(verdict(ok))
}

fn run(cli: Cli) -> anyhow::Result<Verdict> {
    match cli.cmd {
        Cmd::Braid {
            cmd: BraidCmd::Nf { n, word },
        } => {
            let w = parse_word(&word, n)?;
            println!("{}", left_normal_form(&w).serialize());
            Ok(Verdict::Ok)
        }
        Cmd::Braid {
            cmd: BraidCmd::Eq { n, a, b, oracle },
        } => braid_eq(n, &a, &b, oracle),
        Cmd::Derive { kind, word } => {
            let kind = match kind {
                Kind::L => DerivedKind::L,
                Kind::R => DerivedKind::R,
                Kind::Fl => DerivedKind::FL,
                Kind::Fr => DerivedKind::FR,
            };
            let d = derived_braid(&parse_word(&word, 4)?, kind)?;
            println!("{}", d.format());
            Ok(Verdict::Ok)
        }
        Cmd::Check { word, tests } => {
            let w = parse_word(&word, 4)?;
            let mut ok = true;
            for t in tests {
                let (name, kind) = match t {
                    Test::Assoc => ("assoc", CheckKind::Assoc),
                    Test::Funct => ("funct", CheckKind::Funct),
                };
                let pass = check(&w, kind)?;
                println!("{name}: {}", if pass { "pass" } else { "fail" });
                ok &= pass;
            }
            Ok(verdict(ok))
        }
        Cmd::Search {
            cmd: SearchCmd::Conjecture { max_len, jobs, seed: _, out },
        } => {
            if max_len == 0 {
                bail!("--max-len must be at least 1");
            }
            let r = search::conjecture_search(max_len, jobs)?;
            if let Some(path) = out {
                std::fs::write(&path, r.to_json() + "\n").with_context(|| format!("cannot write {}", path.display()))?;
            }
            print!("{}", r.summary());
            Ok(verdict(r.counterexamples == 0))
        }
        Cmd::Coset {
            cmd: CosetCmd::Scan { range, jobs },
        } => {
            let r = scans::coset_scan(range, jobs)?;
            println!("coset scan range {}: {}/{} pass", r.range, r.passed, r.total);
            for [m, p, q] in &r.failures {
                println!("  failure at (m, p, q) = ({m}, {p}, {q})");
            }
            Ok(verdict(r.failures.is_empty()))
        }
        Cmd::Obstruction {
            cmd: ObstructionCmd::Scan { max_len, jobs },
        } => {
            let r = scans::obstruction_scan(max_len, jobs)?;
            println!(
                "obstruction scan max_len {}: {} words, {} classes, {} witnesses",
                r.max_len,
                r.words_enumerated,
                r.classes,
                r.witnesses.len()
            );
            for w in &r.witnesses {
                println!("  witness [{}] {}", w.word, w.normal_form);
            }
            Ok(verdict(r.witnesses.is_empty()))
        }
        Cmd::Fuzz { trials, seed, jobs } => {
            let r = fuzz::oracle_fuzz(trials, seed, jobs)?;
            println!(
                "fuzz seed {}: {} trials, {} equal, {} unequal, {} disagreements",
                r.seed,
                r.trials,
                r.equal_pairs,
                r.unequal_pairs,
                r.disagreements.len()
            );
            for d in &r.disagreements {
                println!("  B_{}: [{}] vs [{}]", d.strands, d.a, d.b);
            }
            Ok(verdict(r.disagreements.is_empty()))
        }
        Cmd::Fincat {
            cmd: FincatCmd::Check { file, k },
        } => fincat_check(&file, k),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
