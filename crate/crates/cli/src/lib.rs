//! Command-line toolkit for automata with translucent letters: validation,
//! exact runs, jump-count profiling, the constant/linear classifier, the
//! binary regularity decider, and equivalence of constant-jump machines.
//!
//! Exit codes: 0 success, 1 negative verdict (rejected word, non-regular
//! language, inequivalent machines), 2 usage or parse error, 3 precondition
//! violation (non-binary alphabet, non-constant machine).

pub mod format;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use report::Report;
use wtl_core::amortize::{self, EquivalenceVerdict};
use wtl_core::classical::Nfa;
use wtl_core::jumpcx::{self, ComplexityVerdict, LinearWitness, Trigger};
use wtl_core::model::{Alphabet, DfaWtl, Word};
use wtl_core::regular::{self, NonRegularWitness, RegularError, RegularityVerdict};
use wtl_core::sim::{self, Outcome, StepKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "wtl",
    about = "Analysis toolkit for deterministic automata with translucent letters",
    version
)]
pub struct Cli {
    /// Emit a single-line JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Length ceiling for exhaustive enumeration (profile).
    #[arg(long, global = true, default_value_t = 12)]
    pub max_len: usize,
    /// Pump iterations checked when verifying witnesses.
    #[arg(long, global = true, default_value_t = 8)]
    pub verify_depth: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a description against the deterministic model.
    Validate(FileArg),
    /// Run the machine on a word and print the trace.
    Run(FileWordArgs),
    /// Jump count of the unique computation on a word.
    Jc(FileWordArgs),
    /// Per-length maximum jump counts up to --max-len.
    Profile(FileArg),
    /// Decide constant versus linear jump complexity.
    Classify(FileArg),
    /// Decide regularity of a binary-alphabet machine.
    Regular(RegularArgs),
    /// Decide language equivalence of two constant-jump machines.
    Equiv(EquivArgs),
    /// Write the amortizing NFA of a constant-jump machine.
    ToNfa(ToNfaArgs),
}

#[derive(Args, Debug)]
pub struct FileArg {
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct FileWordArgs {
    pub file: PathBuf,
    pub word: String,
}

#[derive(Args, Debug)]
pub struct RegularArgs {
    pub file: PathBuf,
    /// Write the counter NFA here when the language is regular.
    #[arg(long)]
    pub emit_nfa: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EquivArgs {
    pub file1: PathBuf,
    pub file2: PathBuf,
}

#[derive(Args, Debug)]
pub struct ToNfaArgs {
    pub file: PathBuf,
    /// Output path for the NFA description.
    #[arg(long)]
    pub out: PathBuf,
}

/// Outcome of one invocation.
#[derive(Debug)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn failure(code: i32, message: String) -> CliOutcome {
    CliOutcome {
        code,
        stdout: String::new(),
        stderr: message,
    }
}

/// Parses the argument list and executes the command.
pub fn dispatch<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not failures.
            let code = if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            };
            return CliOutcome {
                code,
                stdout: if code == EXIT_OK {
                    err.to_string()
                } else {
                    String::new()
                },
                stderr: if code == EXIT_OK {
                    String::new()
                } else {
                    err.to_string()
                },
            };
        }
    };
    execute(cli)
}

fn load_machine(path: &Path) -> Result<DfaWtl, CliOutcome> {
    let text = fs::read_to_string(path).map_err(|e| {
        failure(
            EXIT_USAGE,
            format!("error: cannot read {}: {e}\n", path.display()),
        )
    })?;
    let doc = format::parse_automaton(&text).map_err(|errs| {
        let mut msg = String::new();
        for e in errs {
            msg.push_str(&format!("error: {}: {e}\n", path.display()));
        }
        failure(EXIT_USAGE, msg)
    })?;
    wtl_core::validate(&doc).map_err(|errs| {
        let mut msg = String::new();
        for e in errs {
            msg.push_str(&format!("error: {}: {e}\n", path.display()));
        }
        failure(EXIT_USAGE, msg)
    })
}

fn parse_word(m: &DfaWtl, text: &str) -> Result<Word, CliOutcome> {
    m.alphabet()
        .parse_word(text)
        .map_err(|e| failure(EXIT_USAGE, format!("error: {e}\n")))
}

/// Word rendering for the JSON report: plain symbol concatenation, empty
/// string for the empty word.
fn plain_word(alphabet: &Alphabet, w: &[usize]) -> String {
    if alphabet.symbols().iter().all(|s| s.chars().count() == 1) {
        w.iter().map(|&l| alphabet.symbol(l)).collect()
    } else {
        w.iter()
            .map(|&l| alphabet.symbol(l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn execute(cli: Cli) -> CliOutcome {
    let started = Instant::now();
    let result = match &cli.command {
        Command::Validate(args) => cmd_validate(args),
        Command::Run(args) => cmd_run(args),
        Command::Jc(args) => cmd_jc(args),
        Command::Profile(args) => cmd_profile(args, cli.max_len),
        Command::Classify(args) => cmd_classify(args, cli.verify_depth),
        Command::Regular(args) => cmd_regular(args, cli.verify_depth),
        Command::Equiv(args) => cmd_equiv(args),
        Command::ToNfa(args) => cmd_to_nfa(args),
    };
    match result {
        Err(outcome) => outcome,
        Ok((code, mut report)) => {
            report.elapsed_ms = started.elapsed().as_millis();
            CliOutcome {
                code,
                stdout: report.render(cli.json),
                stderr: String::new(),
            }
        }
    }
}

type CmdResult = Result<(i32, Report), CliOutcome>;

fn cmd_validate(args: &FileArg) -> CmdResult {
    let m = load_machine(&args.file)?;
    let mut report = Report::new("validate", "Valid");
    report.line(format!(
        "{} states, {} letters, {} final",
        m.state_count(),
        m.alphabet().len(),
        m.final_states().len()
    ));
    report.evidence = json!({
        "states": m.state_count(),
        "letters": m.alphabet().len(),
        "finals": m.final_states().len(),
    });
    Ok((EXIT_OK, report))
}

fn cmd_run(args: &FileWordArgs) -> CmdResult {
    let m = load_machine(&args.file)?;
    let w = parse_word(&m, &args.word)?;
    let trace = sim::run(&m, &w).map_err(|e| failure(EXIT_USAGE, format!("error: {e}\n")))?;
    let verdict = outcome_name(trace.outcome);
    let mut report = Report::new("run", verdict);
    let mut steps_json = Vec::new();
    for step in &trace.steps {
        let tag = match step.kind {
            StepKind::Sequential => "seq".to_string(),
            StepKind::Jump => format!("jump@{}", step.consumed_index),
        };
        report.line(format!(
            "{} -{}-> {}  [{}]",
            m.state_name(step.from),
            m.alphabet().symbol(step.letter),
            m.state_name(step.to),
            tag
        ));
        steps_json.push(json!({
            "from": m.state_name(step.from),
            "to": m.state_name(step.to),
            "letter": m.alphabet().symbol(step.letter),
            "kind": match step.kind { StepKind::Sequential => "sequential", StepKind::Jump => "jump" },
            "consumed_index": step.consumed_index,
        }));
    }
    report.line(format!("jumps: {}", trace.jump_count));
    report.evidence = json!({"steps": steps_json, "jumps": trace.jump_count});
    let code = if trace.outcome == Outcome::Accepted {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    Ok((code, report))
}

fn cmd_jc(args: &FileWordArgs) -> CmdResult {
    let m = load_machine(&args.file)?;
    let w = parse_word(&m, &args.word)?;
    let jumps = sim::jc_word(&m, &w).map_err(|e| failure(EXIT_USAGE, format!("error: {e}\n")))?;
    let (code, verdict) = match jumps {
        Some(n) => (EXIT_OK, n.to_string()),
        None => (EXIT_NEGATIVE, "Undefined".to_string()),
    };
    let mut report = Report::new("jc", verdict);
    report.line(format!("word: {}", m.alphabet().render_word(&w)));
    report.evidence = json!({"jumps": jumps});
    Ok((code, report))
}

fn cmd_profile(args: &FileArg, max_len: usize) -> CmdResult {
    let m = load_machine(&args.file)?;
    let profile = sim::jc_profile_with_limit(&m, max_len, max_len)
        .map_err(|e| failure(EXIT_USAGE, format!("error: {e}\n")))?;
    let mut report = Report::new("profile", "Profiled");
    report.line("n\tJC".to_string());
    let mut table = Vec::new();
    for (n, entry) in profile.iter().enumerate() {
        match entry {
            Some(j) => report.line(format!("{n}\t{j}")),
            None => report.line(format!("{n}\t-")),
        };
        table.push(json!([n, entry]));
    }
    report.evidence = json!({"profile": table});
    Ok((EXIT_OK, report))
}

fn trigger_json(m: &DfaWtl, trigger: &Trigger) -> serde_json::Value {
    match trigger {
        Trigger::ReadBack {
            state,
            jumped,
            consumed,
            via,
            back,
        } => json!({
            "kind": "read-back",
            "state": m.state_name(*state),
            "jumped": m.alphabet().symbol(*jumped),
            "consumed": m.alphabet().symbol(*consumed),
            "via": m.state_name(*via),
            "back": m.state_name(*back),
        }),
        Trigger::DeficientCycle {
            letter,
            cycle_states,
            cycle_labels,
            escape,
        } => json!({
            "kind": "deficient-cycle",
            "letter": m.alphabet().symbol(*letter),
            "cycle": cycle_states.iter().map(|&q| m.state_name(q)).collect::<Vec<_>>(),
            "labels": cycle_labels.iter().map(|&l| m.alphabet().symbol(l)).collect::<Vec<_>>(),
            "escape": escape
                .iter()
                .map(|&(l, q)| json!([m.alphabet().symbol(l), m.state_name(q)]))
                .collect::<Vec<_>>(),
        }),
    }
}

fn describe_trigger(m: &DfaWtl, trigger: &Trigger) -> String {
    match trigger {
        Trigger::ReadBack {
            state,
            jumped,
            consumed,
            via,
            back,
        } => format!(
            "trigger: {0} jumps over '{1}', reads '{2}' to {3}, which reads '{1}' into {4} and returns",
            m.state_name(*state),
            m.alphabet().symbol(*jumped),
            m.alphabet().symbol(*consumed),
            m.state_name(*via),
            m.state_name(*back),
        ),
        Trigger::DeficientCycle {
            letter,
            cycle_states,
            escape,
            ..
        } => {
            let cycle: Vec<&str> = cycle_states.iter().map(|&q| m.state_name(q)).collect();
            let reader = escape.last().map(|&(_, q)| m.state_name(q)).unwrap_or("?");
            format!(
                "trigger: cycle {{{}}} is deficient on '{}', escaping to reader {}",
                cycle.join(" "),
                m.alphabet().symbol(*letter),
                reader
            )
        }
    }
}

fn witness_json(alphabet: &Alphabet, w: &LinearWitness) -> serde_json::Value {
    json!({
        "prefix": plain_word(alphabet, &w.prefix),
        "pump": plain_word(alphabet, &w.pump),
        "suffix": plain_word(alphabet, &w.suffix),
        "jumps_per_iteration": w.jumps_per_iteration,
    })
}

fn cmd_classify(args: &FileArg, verify_depth: usize) -> CmdResult {
    let m = load_machine(&args.file)?.trim();
    match jumpcx::classify(&m) {
        ComplexityVerdict::Constant => {
            let mut report = Report::new("classify", "Constant");
            report.line("no linear trigger exists; jump counts are bounded".to_string());
            Ok((EXIT_OK, report))
        }
        ComplexityVerdict::Linear { trigger, witness } => {
            let mut report = Report::new("classify", "Linear");
            report.line(describe_trigger(&m, &trigger));
            report.line(format!(
                "witness: prefix={} pump={} suffix={} jumps/iter={}",
                m.alphabet().render_word(&witness.prefix),
                m.alphabet().render_word(&witness.pump),
                m.alphabet().render_word(&witness.suffix),
                witness.jumps_per_iteration
            ));
            let check = jumpcx::verify_witness(&m, &witness, verify_depth);
            if !check.passed() {
                return Err(failure(
                    EXIT_USAGE,
                    format!("internal error: witness failed verification: {check:?}\n"),
                ));
            }
            report.line(format!(
                "verified: pump family holds for i <= {verify_depth}"
            ));
            report.witness = witness_json(m.alphabet(), &witness);
            report.evidence = json!({
                "trigger": trigger_json(&m, &trigger),
                "verified_depth": verify_depth,
            });
            Ok((EXIT_OK, report))
        }
    }
}

fn nonregular_witness_json(alphabet: &Alphabet, w: &NonRegularWitness) -> serde_json::Value {
    json!({
        "prefix": plain_word(alphabet, &w.prefix),
        "first_block": plain_word(alphabet, &w.first_block),
        "second_block": plain_word(alphabet, &w.second_block),
        "suffix": plain_word(alphabet, &w.suffix),
    })
}

fn write_nfa(path: &Path, nfa: &Nfa) -> Result<(), CliOutcome> {
    let text = format::serialize_automaton(&nfa.to_raw());
    fs::write(path, text).map_err(|e| {
        failure(
            EXIT_USAGE,
            format!("error: cannot write {}: {e}\n", path.display()),
        )
    })
}

fn cmd_regular(args: &RegularArgs, verify_depth: usize) -> CmdResult {
    let m = load_machine(&args.file)?.trim();
    match regular::decide_regular(&m) {
        Err(RegularError::AlphabetNotBinary(n)) => {
            let mut report = Report::new("regular", "AlphabetNotBinary");
            report.line(format!(
                "regularity is decided for binary alphabets only; this machine has {n} letters"
            ));
            Ok((EXIT_PRECONDITION, report))
        }
        Err(other) => Err(failure(EXIT_USAGE, format!("error: {other}\n"))),
        Ok(RegularityVerdict::Regular { counter_nfa }) => {
            let mut report = Report::new("regular", "Regular");
            report.line(format!(
                "counter NFA with {} states certifies regularity",
                counter_nfa.state_count()
            ));
            let mut evidence = json!({"counter_states": counter_nfa.state_count()});
            if let Some(path) = &args.emit_nfa {
                write_nfa(path, &counter_nfa)?;
                report.line(format!("nfa written: {}", path.display()));
                evidence["nfa"] = json!(path.display().to_string());
            }
            report.evidence = evidence;
            Ok((EXIT_OK, report))
        }
        Ok(RegularityVerdict::NonRegular { cycle, witness }) => {
            let mut report = Report::new("regular", "NonRegular");
            let states: Vec<&str> = cycle.states.iter().map(|&q| m.state_name(q)).collect();
            report.line(format!(
                "jumping cycle on '{}' through {{{}}}",
                m.alphabet().symbol(cycle.letter),
                states.join(" ")
            ));
            report.line(format!(
                "witness: prefix={} blocks=({}, {}) suffix={} pumped in tandem",
                m.alphabet().render_word(&witness.prefix),
                m.alphabet().render_word(&witness.first_block),
                m.alphabet().render_word(&witness.second_block),
                m.alphabet().render_word(&witness.suffix),
            ));
            for i in 0..=verify_depth {
                let w = witness.family_word(i);
                if sim::jc_word(&m, &w)
                    .map_err(|e| failure(EXIT_USAGE, format!("error: {e}\n")))?
                    .is_none()
                {
                    return Err(failure(
                        EXIT_USAGE,
                        format!("internal error: witness family rejected at i={i}\n"),
                    ));
                }
            }
            report.line(format!("verified: family accepted for i <= {verify_depth}"));
            report.witness = nonregular_witness_json(m.alphabet(), &witness);
            report.evidence = json!({
                "cycle": {
                    "letter": m.alphabet().symbol(cycle.letter),
                    "states": states,
                    "labels": cycle.labels.iter().map(|&l| m.alphabet().symbol(l)).collect::<Vec<_>>(),
                },
                "verified_depth": verify_depth,
            });
            Ok((EXIT_NEGATIVE, report))
        }
    }
}

fn cmd_equiv(args: &EquivArgs) -> CmdResult {
    let left = load_machine(&args.file1)?;
    let right = load_machine(&args.file2)?;
    match amortize::decide_equivalence(&left, &right) {
        Err(err) => {
            let mut report = Report::new("equiv", "AlphabetMismatch");
            report.line(err.to_string());
            Ok((EXIT_PRECONDITION, report))
        }
        Ok(EquivalenceVerdict::Equal) => {
            let mut report = Report::new("equiv", "Equal");
            report.line("the machines accept the same language".to_string());
            Ok((EXIT_OK, report))
        }
        Ok(EquivalenceVerdict::NotEqual { witness }) => {
            let mut report = Report::new("equiv", "NotEqual");
            report.line(format!(
                "witness: {}",
                left.alphabet().render_word(&witness)
            ));
            report.witness = json!(plain_word(left.alphabet(), &witness));
            Ok((EXIT_NEGATIVE, report))
        }
        Ok(EquivalenceVerdict::NotApplicable { side }) => {
            let mut report = Report::new("equiv", "NotApplicable");
            report.line(format!(
                "the {side} machine has linear jump complexity; equivalence is decided for constant-jump machines"
            ));
            report.evidence = json!({"side": side.to_string()});
            Ok((EXIT_PRECONDITION, report))
        }
    }
}

fn cmd_to_nfa(args: &ToNfaArgs) -> CmdResult {
    let m = load_machine(&args.file)?;
    match amortize::build_amortizing_nfa(&m) {
        Err(err) => {
            let mut report = Report::new("to-nfa", "NotConstant");
            report.line(err.to_string());
            Ok((EXIT_PRECONDITION, report))
        }
        Ok(nfa) => {
            write_nfa(&args.out, &nfa)?;
            let mut report = Report::new("to-nfa", "Converted");
            report.line(format!(
                "nfa with {} states written: {}",
                nfa.state_count(),
                args.out.display()
            ));
            report.evidence = json!({
                "out": args.out.display().to_string(),
                "states": nfa.state_count(),
            });
            Ok((EXIT_OK, report))
        }
    }
}

fn outcome_name(outcome: Outcome) -> &'static str {
    match outcome {
        Outcome::Accepted => "Accepted",
        Outcome::RejectedStuck => "RejectedStuck",
        Outcome::RejectedNonFinal => "RejectedNonFinal",
    }
}
