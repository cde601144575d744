//! Command-line surface. All results go to the output stream, diagnostics
//! to the error stream.
//!
//! Exit codes: 0 success (or a true classification query), 1 a false
//! classification query, 2 usage or parse errors, 3 enumeration budget
//! exhausted.

mod mealy_file;

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use autsg::canon::Budgets;
use autsg::cayley::{
    cayley_automaton, classify, freeness_check, pi, sigma, ClassificationReport, Freeness,
    SigmaResult,
};
use autsg::constructions as cons;
use autsg::dot::export_dot;
use autsg::eggbox::render_eggbox;
use autsg::mealy::{CompositeState, Equivalence, MealyAutomaton};
use autsg::tables::{parse_table, write_table};
use autsg::FiniteSemigroup;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "autsg",
    version,
    about = "Finite semigroups, their Cayley automata and the semigroups they generate",
    long_about = "Works on two file formats: multiplication tables (header \
`elements: ...`, one row per element, row = left factor) and transducers \
(headers `states: ...` and `alphabet: ...`, then `STATE SYMBOL -> STATE \
SYMBOL` lines). Words are written in algebraic product order: in `--word \
\"s,t\"` the letter t acts on the sequence first."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a table or transducer file
    Validate { file: PathBuf },
    /// Structural flags and Green's class counts of a table
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// ASCII egg-box diagram of the D-class structure
    Eggbox { file: PathBuf },
    /// DOT export of a transducer (for a table, of its Cayley automaton)
    Automaton {
        file: PathBuf,
        /// Write the DOT text to this file instead of the output stream
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
    },
    /// Run a word of states on a symbol sequence
    Act {
        file: PathBuf,
        /// Comma-separated states in product order (leftmost applied last)
        #[arg(long)]
        word: String,
        /// Comma-separated input symbols
        #[arg(long)]
        seq: String,
    },
    /// Decide whether two words act identically on all sequences
    Equal {
        file: PathBuf,
        #[arg(long)]
        word1: String,
        #[arg(long)]
        word2: String,
    },
    /// Enumerate the semigroup generated by the Cayley automaton
    Sigma {
        file: PathBuf,
        #[arg(long, default_value_t = Budgets::default().max_elements)]
        max_elements: usize,
        #[arg(long, default_value_t = Budgets::default().max_length)]
        max_length: usize,
        /// Attempt enumeration even when the input is not aperiodic
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the dual semigroup (states acting from the right)
    Pi {
        file: PathBuf,
        #[arg(long, default_value_t = Budgets::default().max_elements)]
        max_elements: usize,
        #[arg(long, default_value_t = Budgets::default().max_length)]
        max_length: usize,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full classification report (exit 0 when self-automaton, 1 when not)
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = Budgets::default().max_elements)]
        max_elements: usize,
        #[arg(long, default_value_t = Budgets::default().max_length)]
        max_length: usize,
    },
    /// Check that all words up to a length act pairwise distinctly
    Free {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Generate a built-in table (see `gen help` for the kinds)
    Gen {
        kind: String,
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// For zero_union: identify existing absorbing zeros with the new one
        #[arg(long)]
        merge_zeros: bool,
    },
    /// Classify every table in a directory into CSV (rows sorted by file)
    Census {
        dir: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = Budgets::default().max_elements)]
        max_elements: usize,
        #[arg(long, default_value_t = Budgets::default().max_length)]
        max_length: usize,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type CmdResult = Result<i32, Failure>;

pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut argv = vec!["autsg".to_string()];
    argv.extend_from_slice(args);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{e}");
                2
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "{}", failure.message);
            failure.code
        }
    }
}

enum Input {
    Table(FiniteSemigroup),
    Machine(MealyAutomaton),
}

fn read_input(path: &Path) -> Result<Input, Failure> {
    let text = fs::read_to_string(path).map_err(|e| fail(2, format!("{}: {e}", path.display())))?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with("states:") {
        mealy_file::parse_mealy(&text)
            .map(Input::Machine)
            .map_err(|e| fail(2, format!("{}: {e}", path.display())))
    } else {
        parse_table(&text)
            .map(Input::Table)
            .map_err(|e| fail(2, format!("{}: {e}", path.display())))
    }
}

fn read_table(path: &Path) -> Result<FiniteSemigroup, Failure> {
    match read_input(path)? {
        Input::Table(s) => Ok(s),
        Input::Machine(_) => Err(fail(
            2,
            format!("{}: expected a table, found a transducer", path.display()),
        )),
    }
}

/// The automaton a file denotes: a transducer file denotes itself, a table
/// denotes its Cayley automaton.
fn read_automaton(path: &Path) -> Result<MealyAutomaton, Failure> {
    Ok(match read_input(path)? {
        Input::Machine(a) => a,
        Input::Table(s) => cayley_automaton(&s),
    })
}

fn emit(target: &Option<PathBuf>, content: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match target {
        Some(path) => {
            fs::write(path, content).map_err(|e| fail(2, format!("{}: {e}", path.display())))
        }
        None => out
            .write_all(content.as_bytes())
            .map_err(|e| fail(2, e.to_string())),
    }
}

fn parse_word(a: &MealyAutomaton, word: &str) -> Result<CompositeState, Failure> {
    let letters: Result<Vec<usize>, Failure> = word
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|token| {
            a.state_index(token)
                .ok_or_else(|| fail(2, format!("unknown state `{token}`")))
        })
        .collect();
    CompositeState::from_algebraic(&letters?).map_err(|e| fail(2, e.to_string()))
}

fn parse_seq(a: &MealyAutomaton, seq: &str) -> Result<Vec<usize>, Failure> {
    seq.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|token| {
            a.symbol_index(token)
                .ok_or_else(|| fail(2, format!("unknown symbol `{token}`")))
        })
        .collect()
}

fn symbols_csv(a: &MealyAutomaton, seq: &[usize]) -> String {
    seq.iter()
        .map(|&b| a.symbol_name(b))
        .collect::<Vec<_>>()
        .join(",")
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::Validate { file } => {
            match read_input(&file)? {
                Input::Table(s) => {
                    writeln!(out, "ok: semigroup with {} element(s)", s.size()).ok();
                }
                Input::Machine(a) => {
                    writeln!(
                        out,
                        "ok: transducer with {} state(s) over {} symbol(s)",
                        a.state_count(),
                        a.alphabet_len()
                    )
                    .ok();
                }
            }
            Ok(0)
        }
        Command::Analyze { file, json } => {
            let s = read_table(&file)?;
            let green = s.green();
            let lrr = s.left_regular();
            let regular = green.regular.iter().filter(|&&r| r).count();
            if json {
                let value = serde_json::json!({
                    "n": s.size(),
                    "band": s.is_band(),
                    "aperiodic": s.is_aperiodic(),
                    "monoid": s.is_monoid(),
                    "relative_identities": s.has_relative_identities(),
                    "lrr_faithful": lrr.faithful(),
                    "s_squared_band": s.square().semigroup.is_band(),
                    "r_classes": green.r_classes.len(),
                    "l_classes": green.l_classes.len(),
                    "h_classes": green.h_classes.len(),
                    "d_classes": green.d_classes.len(),
                    "regular_elements": regular,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap()).ok();
            } else {
                let mut text = String::new();
                writeln!(text, "n: {}", s.size()).unwrap();
                writeln!(text, "band: {}", s.is_band()).unwrap();
                writeln!(text, "aperiodic: {}", s.is_aperiodic()).unwrap();
                writeln!(text, "monoid: {}", s.is_monoid()).unwrap();
                writeln!(text, "relative_identities: {}", s.has_relative_identities()).unwrap();
                writeln!(text, "lrr_faithful: {}", lrr.faithful()).unwrap();
                writeln!(text, "s_squared_band: {}", s.square().semigroup.is_band()).unwrap();
                writeln!(text, "r_classes: {}", green.r_classes.len()).unwrap();
                writeln!(text, "l_classes: {}", green.l_classes.len()).unwrap();
                writeln!(text, "h_classes: {}", green.h_classes.len()).unwrap();
                writeln!(text, "d_classes: {}", green.d_classes.len()).unwrap();
                writeln!(text, "regular_elements: {regular}").unwrap();
                out.write_all(text.as_bytes()).ok();
            }
            Ok(0)
        }
        Command::Eggbox { file } => {
            let s = read_table(&file)?;
            out.write_all(render_eggbox(&s).as_bytes()).ok();
            Ok(0)
        }
        Command::Automaton { file, dot } => {
            let a = read_automaton(&file)?;
            emit(&dot, &export_dot(&a), out)?;
            Ok(0)
        }
        Command::Act { file, word, seq } => {
            let a = read_automaton(&file)?;
            let w = parse_word(&a, &word)?;
            let input = parse_seq(&a, &seq)?;
            let output = a.act(&w, &input).map_err(|e| fail(2, e.to_string()))?;
            writeln!(out, "{}", symbols_csv(&a, &output)).ok();
            Ok(0)
        }
        Command::Equal { file, word1, word2 } => {
            let a = read_automaton(&file)?;
            let u = parse_word(&a, &word1)?;
            let v = parse_word(&a, &word2)?;
            match a.words_equal(&u, &v) {
                Equivalence::Equal => {
                    writeln!(out, "EQUAL").ok();
                    Ok(0)
                }
                Equivalence::Distinct { witness } => {
                    writeln!(out, "DISTINCT: {}", symbols_csv(&a, &witness)).ok();
                    Ok(1)
                }
            }
        }
        Command::Sigma {
            file,
            max_elements,
            max_length,
            force,
            out: target,
        } => {
            let s = read_table(&file)?;
            let budgets = Budgets {
                max_elements,
                max_length,
            };
            sigma_like(sigma(&s, &budgets, force), &s, target, out, err)
        }
        Command::Pi {
            file,
            max_elements,
            max_length,
            force,
            out: target,
        } => {
            let s = read_table(&file)?;
            let budgets = Budgets {
                max_elements,
                max_length,
            };
            sigma_like(pi(&s, &budgets, force), &s, target, out, err)
        }
        Command::Classify {
            file,
            json,
            max_elements,
            max_length,
        } => {
            let s = read_table(&file)?;
            let budgets = Budgets {
                max_elements,
                max_length,
            };
            let report = classify(&s, &budgets);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap()).ok();
            } else {
                out.write_all(report_text(&report).as_bytes()).ok();
            }
            Ok(if report.self_automaton { 0 } else { 1 })
        }
        Command::Free { file, max_len } => {
            let s = read_table(&file)?;
            match freeness_check(&s, max_len) {
                Freeness::Free { words_checked } => {
                    writeln!(
                        out,
                        "free: {words_checked} word(s) act pairwise distinctly up to length {max_len}"
                    )
                    .ok();
                    Ok(0)
                }
                Freeness::Collision { first, second } => {
                    let show =
                        |w: &[usize]| w.iter().map(|&q| s.name(q)).collect::<Vec<_>>().join("·");
                    writeln!(out, "collision: {} = {}", show(&first), show(&second)).ok();
                    Ok(1)
                }
            }
        }
        Command::Gen {
            kind,
            params,
            out: target,
            merge_zeros,
        } => {
            let s = generate(&kind, &params, merge_zeros)?;
            emit(&target, &write_table(&s), out)?;
            Ok(0)
        }
        Command::Census {
            dir,
            out: target,
            max_elements,
            max_length,
        } => {
            let budgets = Budgets {
                max_elements,
                max_length,
            };
            census(&dir, &budgets, target, out, err)
        }
    }
}

fn sigma_like(
    result: SigmaResult,
    s: &FiniteSemigroup,
    target: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    match result {
        SigmaResult::Finite(enumeration) => {
            emit(&target, &write_table(&enumeration.semigroup), out)?;
            Ok(0)
        }
        SigmaResult::KnownInfinite(witness) => {
            writeln!(
                out,
                "infinite: element {} has period {} (index {}); rerun with --force to explore anyway",
                s.name(witness.element),
                witness.period,
                witness.index
            )
            .ok();
            Ok(0)
        }
        SigmaResult::Exhausted(report) => {
            writeln!(err, "{report}").ok();
            Ok(3)
        }
    }
}

fn report_text(report: &ClassificationReport) -> String {
    let mut text = String::new();
    let option_bool = |o: Option<bool>| o.map_or("?".to_string(), |b| b.to_string());
    writeln!(text, "n: {}", report.n).unwrap();
    writeln!(text, "band: {}", report.band).unwrap();
    writeln!(text, "aperiodic: {}", report.aperiodic).unwrap();
    writeln!(text, "monoid: {}", report.monoid).unwrap();
    writeln!(text, "relative_identities: {}", report.relative_identities).unwrap();
    writeln!(text, "lrr_faithful: {}", report.lrr_faithful).unwrap();
    writeln!(text, "s_squared_band: {}", report.s_squared_band).unwrap();
    writeln!(text, "canonical_injective: {}", report.canonical_injective).unwrap();
    writeln!(
        text,
        "canonical_homomorphism: {}",
        report.canonical_homomorphism
    )
    .unwrap();
    writeln!(text, "self_automaton: {}", report.self_automaton).unwrap();
    writeln!(text, "self_dual: {}", report.self_dual).unwrap();
    writeln!(
        text,
        "c_self_automaton: {}",
        option_bool(report.c_self_automaton)
    )
    .unwrap();
    let sigma_size = match (report.sigma_size, report.aperiodic) {
        (Some(n), _) => n.to_string(),
        (None, false) => "inf".into(),
        (None, true) => "?".into(),
    };
    writeln!(text, "sigma_size: {sigma_size}").unwrap();
    if !report.kernel_pairs.is_empty() {
        let pairs: Vec<String> = report
            .kernel_pairs
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        writeln!(text, "kernel_pairs: {}", pairs.join(" ")).unwrap();
    }
    if let Some(h) = &report.homomorphism_counterexample {
        writeln!(
            text,
            "homomorphism_counterexample: ({},{}) on {}",
            h.left,
            h.right,
            h.sequence.join(",")
        )
        .unwrap();
    }
    if let Some(p) = &report.period_witness {
        writeln!(
            text,
            "period_witness: {} index {} period {}",
            p.element, p.index, p.period
        )
        .unwrap();
    }
    if let Some(map) = &report.anti_isomorphism {
        writeln!(text, "anti_isomorphism: {}", map.join(",")).unwrap();
    }
    text
}

fn usize_param(params: &[String], at: usize, kind: &str) -> Result<usize, Failure> {
    params
        .get(at)
        .ok_or_else(|| fail(2, format!("{kind}: missing parameter {}", at + 1)))?
        .parse()
        .map_err(|_| fail(2, format!("{kind}: parameter {} must be a number", at + 1)))
}

fn table_param(params: &[String], at: usize, kind: &str) -> Result<FiniteSemigroup, Failure> {
    let path = params.get(at).ok_or_else(|| {
        fail(
            2,
            format!("{kind}: missing table file parameter {}", at + 1),
        )
    })?;
    read_table(Path::new(path))
}

fn generate(kind: &str, params: &[String], merge_zeros: bool) -> Result<FiniteSemigroup, Failure> {
    let cons_err = |e: cons::ParamError| fail(2, e.to_string());
    match kind {
        "left_zero" => cons::left_zero(usize_param(params, 0, kind)?).map_err(cons_err),
        "right_zero" => cons::right_zero(usize_param(params, 0, kind)?).map_err(cons_err),
        "rectangular_band" => {
            cons::rectangular_band(usize_param(params, 0, kind)?, usize_param(params, 1, kind)?)
                .map_err(cons_err)
        }
        "chain_semilattice" => {
            cons::chain_semilattice(usize_param(params, 0, kind)?).map_err(cons_err)
        }
        "cyclic_group" => cons::cyclic_group(usize_param(params, 0, kind)?).map_err(cons_err),
        "nilpotent_monogenic" => {
            cons::nilpotent_monogenic(usize_param(params, 0, kind)?).map_err(cons_err)
        }
        "ex_nonband" => Ok(cons::example_table(cons::ExampleTable::NonBand)),
        "ex_collapse" => Ok(cons::example_table(cons::ExampleTable::Collapse)),
        "steinberg" => {
            let bundle = cons::steinberg();
            match params.first().map(String::as_str).unwrap_or("s") {
                "t" => Ok(bundle.t),
                "tprime" => Ok(bundle.tprime),
                "that" => Ok(bundle.that),
                "r" => Ok(bundle.r),
                "s" => Ok(bundle.s),
                other => Err(fail(
                    2,
                    format!("steinberg: unknown component `{other}` (t, tprime, that, r, s)"),
                )),
            }
        }
        "adjoin_identity" => Ok(cons::adjoin_identity(&table_param(params, 0, kind)?)),
        "zero_union" => Ok(cons::zero_union(
            &table_param(params, 0, kind)?,
            &table_param(params, 1, kind)?,
            merge_zeros,
        )),
        "direct_product" => {
            Ok(table_param(params, 0, kind)?.direct_product(&table_param(params, 1, kind)?))
        }
        "tails" => {
            let files = params
                .first()
                .ok_or_else(|| fail(2, "tails: missing comma-separated table files"))?;
            let counts = params
                .get(1)
                .ok_or_else(|| fail(2, "tails: missing comma-separated tail counts"))?;
            let parts: Result<Vec<FiniteSemigroup>, Failure> =
                files.split(',').map(|p| read_table(Path::new(p))).collect();
            let counts: Result<Vec<usize>, Failure> = counts
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse()
                        .map_err(|_| fail(2, format!("tails: bad count `{c}`")))
                })
                .collect();
            cons::tails_construction(&parts?, &counts?).map_err(cons_err)
        }
        other => Err(fail(
            2,
            format!(
                "unknown kind `{other}`; expected one of left_zero, right_zero, \
                 rectangular_band, chain_semilattice, cyclic_group, \
                 nilpotent_monogenic, ex_nonband, ex_collapse, steinberg, \
                 adjoin_identity, zero_union, direct_product, tails"
            ),
        )),
    }
}

const CENSUS_HEADER: &str =
    "file,n,band,aperiodic,monoid,lrr_faithful,s2_band,self_dual,self_automaton,c_self_automaton,sigma_size";

fn census(
    dir: &Path,
    budgets: &Budgets,
    target: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let entries = fs::read_dir(dir).map_err(|e| fail(2, format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|path| path.is_file())
        .collect();
    files.sort_by_key(|path| path.file_name().map(|n| n.to_os_string()));

    let mut all_parsed = true;
    let mut csv = String::from(CENSUS_HEADER);
    csv.push('\n');
    for path in files {
        let display = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) => {
                writeln!(err, "{display}: {e}").ok();
                all_parsed = false;
                continue;
            }
        };
        let table = match parse_table(&text) {
            Ok(table) => table,
            Err(e) => {
                writeln!(err, "{display}: {e}").ok();
                all_parsed = false;
                continue;
            }
        };
        let report = classify(&table, budgets);
        csv.push_str(&census_row(&display, &report));
        csv.push('\n');
    }
    emit(&target, &csv, out)?;
    Ok(if all_parsed { 0 } else { 2 })
}

fn census_row(file: &str, report: &ClassificationReport) -> String {
    let c_self = report
        .c_self_automaton
        .map_or("?".to_string(), |b| b.to_string());
    let sigma_size = match (report.sigma_size, report.aperiodic) {
        (Some(n), _) => n.to_string(),
        (None, false) => "inf".into(),
        (None, true) => "?".into(),
    };
    format!(
        "{file},{},{},{},{},{},{},{},{},{},{}",
        report.n,
        report.band,
        report.aperiodic,
        report.monoid,
        report.lrr_faithful,
        report.s_squared_band,
        report.self_dual,
        report.self_automaton,
        c_self,
        sigma_size
    )
}

/// Used by the census column test to keep the header and rows in sync.
pub fn census_columns() -> &'static str {
    CENSUS_HEADER
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_vec(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let code = run(&args, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn unknown_subcommand_is_a_usage_error() {
        let (code, _, err) = run_vec(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
    }

    #[test]
    fn help_prints_to_stdout() {
        let (code, out, _) = run_vec(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("census"));
    }

    #[test]
    fn gen_writes_a_parsable_table() {
        let (code, out, _) = run_vec(&["gen", "left_zero", "3"]);
        assert_eq!(code, 0);
        let parsed = parse_table(&out).unwrap();
        assert_eq!(parsed.size(), 3);
    }

    #[test]
    fn gen_rejects_bad_kinds() {
        let (code, _, err) = run_vec(&["gen", "octonions"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown kind"));
    }
}
