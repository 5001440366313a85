//! Command-line surface: `determinize`, `quasiorder`, `eval`, `compare`,
//! and `validate` over `.fza` files.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse/validation error,
//! 3 budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::automaton::{FuzzyAutomaton, Word};
use crate::determinize::{run_method, DetMethod};
use crate::dot::emit_dot;
use crate::format::parse_automaton;
use crate::invariants::{
    greatest_left_invariant, greatest_right_invariant, greatest_weakly_left_invariant,
    greatest_weakly_right_invariant, Budget, QuasiOrderReport,
};
use crate::report::{det_result_json, quasi_order_json};
use crate::{FzaError, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "fza",
    version,
    about = "Determinization and state reduction for fuzzy finite automata"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QoKind {
    Ri,
    Li,
    Wri,
    Wli,
}

#[derive(Subcommand)]
enum Cmd {
    /// Determinize an automaton with the chosen method
    Determinize {
        file: PathBuf,
        /// nerode|ri|wri|children-nerode|children-ri|children-wri|
        /// reverse-nerode|li|wli|brzozowski|brzozowski-li|brzozowski-wli
        #[arg(long, default_value = "nerode")]
        method: String,
        /// Cap on constructed states
        #[arg(long, default_value_t = 10_000)]
        max_states: usize,
        /// Cap on fixpoint iterations for quasi-order computation
        #[arg(long, default_value_t = 10_000)]
        max_iters: usize,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a greatest invariant fuzzy quasi-order
    Quasiorder {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: QoKind,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Evaluate the degree to which the automaton recognizes a word
    Eval {
        file: PathBuf,
        /// Word as concatenated single-character symbols or a
        /// comma-separated symbol list; empty for ε
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Run several methods and compare sizes and languages
    Compare {
        file: PathBuf,
        /// Comma-separated method names (default: all)
        #[arg(long)]
        methods: Option<String>,
        /// Check language equivalence for all words up to this length
        #[arg(long, default_value_t = 4)]
        maxlen: usize,
        #[arg(long, default_value_t = 10_000)]
        max_states: usize,
    },
    /// Parse and validate an automaton file
    Validate { file: PathBuf },
}

/// Parses and runs a command line, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                FzaError::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn load(path: &PathBuf) -> Result<FuzzyAutomaton> {
    let text = fs::read_to_string(path)
        .map_err(|e| FzaError::Semantic(format!("cannot read {}: {e}", path.display())))?;
    parse_automaton(&text)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| FzaError::Semantic(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn parse_word(s: &str, a: &FuzzyAutomaton) -> Result<Word> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let symbols: Vec<String> = if s.contains(',') {
        s.split(',').map(str::to_string).collect()
    } else if s.chars().all(|c| a.alphabet.contains(&c.to_string())) {
        s.chars().map(|c| c.to_string()).collect()
    } else if a.alphabet.contains(&s.to_string()) {
        vec![s.to_string()]
    } else {
        return Err(FzaError::UnknownSymbol(s.to_string()));
    };
    for sym in &symbols {
        a.symbol_index(sym)?;
    }
    Ok(symbols)
}

fn quasi_order(a: &FuzzyAutomaton, kind: QoKind, budget: &Budget) -> Result<QuasiOrderReport> {
    match kind {
        QoKind::Ri => greatest_right_invariant(a, budget),
        QoKind::Li => greatest_left_invariant(a, budget),
        QoKind::Wri => greatest_weakly_right_invariant(a, budget),
        QoKind::Wli => greatest_weakly_left_invariant(a, budget),
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Determinize {
            file,
            method,
            max_states,
            max_iters,
            format,
            out,
        } => {
            let a = load(&file)?;
            let method: DetMethod = method.parse()?;
            let budget = Budget {
                max_states,
                max_iterations: max_iters,
                ..Budget::default()
            };
            let result = run_method(&a, method, &budget)?;
            let content = match format {
                OutFormat::Text => {
                    let c = &result.cdfa;
                    let mut text = format!("method: {method}\nstates: {}\n", c.size());
                    text.push_str(&format!("initial: {}\n", c.states[c.initial].label));
                    for (i, st) in c.states.iter().enumerate() {
                        text.push_str(&format!("q{i} {} term {}\n", st.label, st.term));
                    }
                    for (i, succs) in c.next.iter().enumerate() {
                        for (xi, &t) in succs.iter().enumerate() {
                            text.push_str(&format!("q{i} --{}--> q{t}\n", c.alphabet[xi]));
                        }
                    }
                    text
                }
                OutFormat::Json => {
                    let mut s =
                        serde_json::to_string_pretty(&det_result_json(&result, a.n)).unwrap();
                    s.push('\n');
                    s
                }
                OutFormat::Dot => emit_dot(&result.cdfa),
            };
            emit(&out, &content)
        }
        Cmd::Quasiorder { file, kind, format } => {
            let a = load(&file)?;
            let q = quasi_order(&a, kind, &Budget::default())?;
            match format {
                OutFormat::Text => {
                    let (distinct, _) = q.relation.distinct_rows();
                    println!("kind: {}", q.class_checked);
                    for i in 0..q.relation.rows {
                        let row: Vec<String> =
                            q.relation.row(i).iter().map(|v| v.to_string()).collect();
                        println!("{}", row.join(" "));
                    }
                    println!("distinct rows: {distinct}");
                    Ok(())
                }
                OutFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&quasi_order_json(&q)).unwrap());
                    Ok(())
                }
                OutFormat::Dot => Err(FzaError::Semantic(
                    "dot output is not defined for quasi-orders".into(),
                )),
            }
        }
        Cmd::Eval { file, word } => {
            let a = load(&file)?;
            let u = parse_word(&word, &a)?;
            println!("{}", a.language_degree(&u)?);
            Ok(())
        }
        Cmd::Compare {
            file,
            methods,
            maxlen,
            max_states,
        } => {
            let a = load(&file)?;
            let mut list: Vec<DetMethod> = match methods {
                Some(s) => s
                    .split(',')
                    .map(|m| m.trim().parse())
                    .collect::<Result<_>>()?,
                None => DetMethod::ALL.to_vec(),
            };
            list.sort_by_key(|m| m.to_string());
            list.dedup();
            let budget = Budget {
                max_states,
                ..Budget::default()
            };
            let mut all_equal = true;
            for method in list {
                match run_method(&a, method, &budget) {
                    Ok(result) => {
                        let ok = check_equivalence(&a, &result.cdfa, method, maxlen)?;
                        all_equal &= ok;
                        println!(
                            "{method}: states {} {}",
                            result.cdfa.size(),
                            if ok {
                                format!("equivalent ≤ {maxlen}")
                            } else {
                                "MISMATCH".to_string()
                            }
                        );
                    }
                    Err(FzaError::BudgetExceeded { what, limit }) => {
                        println!("{method}: budget exceeded ({what} {limit})");
                    }
                    Err(e) => return Err(e),
                }
            }
            if all_equal {
                Ok(())
            } else {
                Err(FzaError::Semantic(
                    "language mismatch between a method and the source automaton".into(),
                ))
            }
        }
        Cmd::Validate { file } => {
            let a = load(&file)?;
            println!(
                "ok: {} states, alphabet {{{}}}, lattice {}",
                a.n,
                a.alphabet.join(", "),
                a.kind
            );
            Ok(())
        }
    }
}

/// Exhaustively compares the CDFA against the source language (reverse
/// language for the reverse constructions) on all words up to `maxlen`.
fn check_equivalence(
    a: &FuzzyAutomaton,
    c: &crate::automaton::Cdfa,
    method: DetMethod,
    maxlen: usize,
) -> Result<bool> {
    let mut frontier: Vec<Word> = vec![Vec::new()];
    for _ in 0..=maxlen {
        for u in &frontier {
            let expected = if method.is_forward() {
                a.language_degree(u)?
            } else {
                let rev: Word = u.iter().rev().cloned().collect();
                a.language_degree(&rev)?
            };
            if c.eval(u)? != expected {
                return Ok(false);
            }
        }
        let mut next = Vec::with_capacity(frontier.len() * a.alphabet.len());
        for u in &frontier {
            for x in &a.alphabet {
                let mut v = u.clone();
                v.push(x.clone());
                next.push(v);
            }
        }
        frontier = next;
    }
    Ok(true)
}
