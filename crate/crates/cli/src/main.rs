use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pgroup::constructions::corpus;
use pgroup::group::{set_table_cap, MAX_TABLE_CAP};
use pgroup::harness::{self, Subject, TheoremReport};
use pgroup::subgroup::{
    exponent, is_maximal_class, is_powerful, is_regular, min_generators, omega_set,
    omega_subgroup,
};
use pgroup::verbal::{
    find_minimal_c_member_in, is_interchangeable_in, is_omega_maximal_in, verbal_subgroup,
    Caps, Lattice, VerbalMode,
};
use pgroup::{Error, GroupSpec, Word};

#[derive(Parser, Debug)]
#[command(name = "pgroup", version, about = "Exact computations in finite p-groups")]
struct Cli {
    /// Largest order whose subgroup lattice is enumerated.
    #[arg(long, global = true, default_value_t = 729)]
    cap_subgroups: usize,
    /// Largest |G|^arity evaluated when computing a verbal subgroup exhaustively.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    cap_tuples: u64,
    /// Largest order that gets a precomputed multiplication table.
    #[arg(long, global = true, default_value_t = 4096)]
    cap_table: usize,
    /// Largest |G|^2 scanned by the regularity check.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    cap_pairs: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Human)]
    output: Output,
    /// Seed for the sampled axiom check on large groups.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    A,
    B,
    C,
    #[value(name = "HL")]
    Hl,
    #[value(name = "L1")]
    L1,
    #[value(name = "T2")]
    T2,
    #[value(name = "L6")]
    L6,
    #[value(name = "CONG")]
    Cong,
    #[value(name = "REG")]
    Reg,
    #[value(name = "ORACLE")]
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    ClosedForm,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, d(G), class, omega sets, powerful and regular flags.
    Analyze {
        /// Group spec, as a file path or inline text.
        spec: String,
    },
    /// Runs one theorem check.
    Check {
        #[arg(value_enum, ignore_case = true)]
        theorem: Theorem,
        /// Group spec (not used by C).
        spec: Option<String>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        i: Option<u32>,
    },
    /// Runs every check over the corpus.
    CorpusRun {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 729)]
        max_order: u64,
    },
    /// Lists the corpus members.
    Corpus {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 729)]
        max_order: u64,
    },
    /// Verbal subgroup of a word, with omega-maximality and
    /// interchangeability when the lattice fits the cap.
    Verbal {
        spec: String,
        /// `short(i,k)`, `long(i)` or a free-form word such as "x^9 [y1,y2]".
        #[arg(long)]
        word: String,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
}

/// Exit status 2: usage, parse or parameter errors.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn load_spec(arg: &str) -> Result<GroupSpec, Usage> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {arg}: {e}")))?
    } else {
        arg.to_string()
    };
    GroupSpec::parse(&text).map_err(Usage::from)
}

fn subject_of(spec: &GroupSpec) -> Result<Subject, Usage> {
    let g = spec.build()?;
    Ok(Subject::new(spec.to_string(), &g)?)
}

fn emit_reports(reports: &[TheoremReport], output: Output) {
    match output {
        Output::Human => print!("{}", harness::summary_table(reports)),
        Output::Structured => {
            for r in reports {
                println!("{}", r.to_json_line());
            }
        }
    }
}

fn emit_record(record: &Value, output: Output) {
    match output {
        Output::Structured => println!("{record}"),
        Output::Human => {
            if let Value::Object(map) = record {
                let w = map.keys().map(String::len).max().unwrap_or(0);
                for (k, v) in map {
                    let shown = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    println!("{k:<w$}  {shown}");
                }
            }
        }
    }
}

fn status(reports: &[TheoremReport]) -> ExitCode {
    if harness::all_passed(reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cap_or<T: Into<Value>>(r: pgroup::Result<T>) -> pgroup::Result<Value> {
    match r {
        Ok(v) => Ok(v.into()),
        Err(e) if e.is_cap_exceeded() => Ok(Value::String(format!("skipped ({e})"))),
        Err(e) => Err(e),
    }
}

fn analyze(cli: &Cli, spec: &str) -> Result<ExitCode, Usage> {
    let spec = load_spec(spec)?;
    let s = subject_of(&spec)?;
    let g = s.whole();
    let series = s.profile().series()?;
    let axioms = g.parent().verify_axioms(100_000, cli.seed)?;
    let record = json!({
        "spec": spec.to_string(),
        "order": s.order(),
        "p": s.p,
        "backend": g.parent().backend_name(),
        "d": min_generators(g)?,
        "class": series.class,
        "series_orders": series.terms.iter().map(|t| t.order()).collect::<Vec<_>>(),
        "maximal_class": is_maximal_class(g)?,
        "exponent": exponent(g),
        "center_order": s.center().order(),
        "omega_set_1": omega_set(g, 1)?.len(),
        "omega_set_2": omega_set(g, 2)?.len(),
        "omega_subgroup_1": omega_subgroup(g, 1)?.order(),
        "omega_subgroup_2": omega_subgroup(g, 2)?.order(),
        "index_power_1": s.order() / s.power(1)?.order(),
        "index_power_2": s.order() / s.power(2)?.order(),
        "powerful": is_powerful(g)?,
        "regular": cap_or(is_regular(g, cli.cap_pairs))?,
        "axioms": if axioms.exhaustive { "exhaustive" } else { "sampled" },
    });
    emit_record(&record, cli.output);
    Ok(ExitCode::SUCCESS)
}

fn hypothesis(theorem: Theorem) -> &'static str {
    match theorem {
        Theorem::B => "B needs --k and --i; asserted for k <= p-2, i >= 1 or k = p-1, i >= 2",
        Theorem::C => "C needs --p (odd prime) and --s (s >= p+1)",
        Theorem::Cong | Theorem::L6 => "this check needs --i >= 2 (defaults to 2)",
        _ => "this check needs a group spec",
    }
}

fn check(
    cli: &Cli,
    theorem: Theorem,
    spec: Option<&str>,
    p: Option<u32>,
    s: Option<u32>,
    k: Option<u32>,
    i: Option<u32>,
) -> Result<ExitCode, Usage> {
    let caps = caps(cli);
    let usage = |msg: &str| Usage(format!("{msg}\n{}", hypothesis(theorem)));
    if theorem == Theorem::C {
        let (Some(p), Some(s)) = (p, s) else {
            return Err(usage("missing --p or --s"));
        };
        if p == 2 || !pgroup::arith::is_prime(p as u64) || s < 2 {
            return Err(usage(&format!("invalid parameters p = {p}, s = {s}")));
        }
        let r = harness::check_theorem_c(p, s);
        emit_reports(std::slice::from_ref(&r), cli.output);
        return Ok(status(&[r]));
    }
    let spec = spec.ok_or_else(|| usage("missing group spec"))?;
    let subject = subject_of(&load_spec(spec)?)?;
    if let Some(p) = p {
        if p != subject.p {
            return Err(usage(&format!("--p {p} does not match the group prime {}", subject.p)));
        }
    }
    let report = match theorem {
        Theorem::A => harness::check_theorem_a(&subject, &caps),
        Theorem::B => {
            let (Some(k), Some(i)) = (k, i) else {
                return Err(usage("missing --k or --i"));
            };
            if k == 0 || i == 0 {
                return Err(usage("k and i must be positive"));
            }
            harness::check_theorem_b(&subject, k, i)
        }
        Theorem::Hl => harness::check_hethelyi_levai(&subject),
        Theorem::L1 => harness::check_lemma1(&subject, &caps),
        Theorem::T2 => harness::check_theorem2(&subject, &caps),
        Theorem::L6 => harness::check_lemma6(&subject, i.unwrap_or(2), &caps),
        Theorem::Cong => harness::check_congruences(&subject, i.unwrap_or(2), &caps),
        Theorem::Reg => harness::check_regular_equality(&subject, &caps),
        Theorem::Oracle => harness::check_oracle_equivalence(&subject, &caps),
        Theorem::C => unreachable!("handled above"),
    };
    let reports = [report];
    emit_reports(&reports, cli.output);
    Ok(status(&reports))
}

fn check_prime(p: u32) -> Result<(), Usage> {
    if p == 2 || !pgroup::arith::is_prime(p as u64) {
        return Err(Usage(format!("--p must be an odd prime, got {p}")));
    }
    Ok(())
}

fn verbal(cli: &Cli, spec: &str, word: &str, mode: Option<Mode>) -> Result<ExitCode, Usage> {
    let caps = caps(cli);
    let subject = subject_of(&load_spec(spec)?)?;
    let w = Word::parse_with_prime(word, subject.p)?;
    let mode = match mode {
        Some(Mode::Exhaustive) => VerbalMode::Exhaustive,
        Some(Mode::ClosedForm) => VerbalMode::ClosedForm,
        None if w.family().is_some() => VerbalMode::ClosedForm,
        None => VerbalMode::Exhaustive,
    };
    let g = subject.whole();
    let v = verbal_subgroup(&w, g, mode, &caps)?;
    let mut record = json!({
        "word": w.to_string(),
        "arity": w.arity(),
        "mode": if mode == VerbalMode::Exhaustive { "exhaustive" } else { "closed_form" },
        "order": g.order(),
        "verbal_order": v.order(),
        "index": g.order() / v.order(),
        "verbal_in_center": v.is_subgroup_of(subject.center()),
    });
    let extra = match Lattice::new(g, caps.subgroups) {
        Ok(lattice) => {
            let m = is_omega_maximal_in(&w, &lattice, &caps)?;
            let ic = is_interchangeable_in(&w, &lattice, &caps)?;
            let k = find_minimal_c_member_in(&w, &lattice, &caps)?;
            json!({
                "subgroups": lattice.len(),
                "omega_maximal": m.holds,
                "omega_maximal_witness_order": m.witness.map(|h| h.order()),
                "interchangeable": ic.holds,
                "interchangeable_witness_order": ic.witness.map(|h| h.order()),
                "minimal_c_member_order": k.order(),
            })
        }
        Err(e) if e.is_cap_exceeded() => json!({ "lattice": format!("skipped ({e})") }),
        Err(e) => return Err(e.into()),
    };
    if let (Value::Object(a), Value::Object(b)) = (&mut record, extra) {
        a.extend(b);
    }
    emit_record(&record, cli.output);
    Ok(ExitCode::SUCCESS)
}

fn caps(cli: &Cli) -> Caps {
    Caps {
        subgroups: cli.cap_subgroups,
        tuples: cli.cap_tuples,
        pairs: cli.cap_pairs,
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Usage> {
    if cli.cap_subgroups == 0 || cli.cap_tuples == 0 || cli.cap_pairs == 0 {
        return Err(Usage("caps must be positive".into()));
    }
    if cli.cap_table > MAX_TABLE_CAP {
        return Err(Usage(format!("--cap-table must be at most {MAX_TABLE_CAP}")));
    }
    set_table_cap(cli.cap_table);
    match &cli.command {
        Command::Analyze { spec } => analyze(cli, spec),
        Command::Check {
            theorem,
            spec,
            p,
            s,
            k,
            i,
        } => check(cli, *theorem, spec.as_deref(), *p, *s, *k, *i),
        Command::CorpusRun { p, max_order } => {
            check_prime(*p)?;
            let reports = harness::run_all(*p, *max_order, &caps(cli))?;
            emit_reports(&reports, cli.output);
            Ok(status(&reports))
        }
        Command::Corpus { p, max_order } => {
            check_prime(*p)?;
            let c = corpus(*p, *max_order)?;
            for e in c.manifest() {
                match cli.output {
                    Output::Structured => println!("{}", serde_json::to_string(&e).expect("serialises")),
                    Output::Human => println!("{:<16} {:>7}  {:<13} {}", e.name, e.order, e.backend, e.spec),
                }
            }
            for name in &c.skipped {
                eprintln!("skipped {name}: order above {max_order}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verbal { spec, word, mode } => verbal(cli, spec, word, *mode),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

