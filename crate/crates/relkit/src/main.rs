//! `relkit` — command-line front end over the relation toolkit.
//!
//! Exit status contract:
//! * `0` — success (analysis positive, or pure computation done)
//! * `1` — valid input, negative analysis (e.g. "not block-ordered")
//! * `2` — usage or parse error
//! * `3` — internal law violation (a library invariant panicked)

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use relkit::condense::condense;
use relkit::diagonal::diagonal;
use relkit::dot::{condensation_dot, decomposition_dot, rel_dot};
use relkit::generate::Budget;
use relkit::index::{are_isomorphic, core_of, rel_index, IsoVerdict};
use relkit::laws::{recheck, run_laws, summarize, summary_jsonl};
use relkit::order::{block_decompose, staircase_battery};
use relkit::pair::{adjoints, check_complete_lattice};
use relkit::rel::Rel;
use relkit::textfmt::{file_of, RelFile};

#[derive(Parser)]
#[command(
    name = "relkit",
    version,
    about = "Analyze finite relations: diagonals, block orders, staircases, indexes, cores, \
             condensations, pair algebras, and the library's law suite.",
    after_help = "Relation files declare carriers (`carrier A = x y z`) and relations \
                  (`rel R : A ~ B`, one `<target> <source>` pair per line, closed by `end`)."
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable text; emitted relations re-parse as relation files.
    Text,
    /// Graphviz DOT rendering of the computed structure.
    Dot,
    /// Machine-readable JSON.
    Report,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Exhaustive enumeration bound for law instances (carrier sizes).
    #[arg(long)]
    exhaustive: Option<usize>,
    /// Seed for randomized instance generation.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of randomized instances per law.
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Subcommand)]
enum Verb {
    /// Compute the diagonal ΔR = R ∩ (R\R/R)˘ of a relation.
    Diagonal {
        file: PathBuf,
        /// Relation name (defaults to the file's only relation).
        rel: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Decide block-orderedness; on success emit the decomposition (f, T, g).
    #[command(name = "block-order")]
    BlockOrder {
        file: PathBuf,
        rel: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether a relation is a staircase (nested columns).
    Staircase {
        file: PathBuf,
        rel: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Compute the index J = R<per ∘ R ∘ R>per of a relation.
    Index {
        file: PathBuf,
        rel: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Compute the core (C, λ, ρ) of a relation.
    Core {
        file: PathBuf,
        rel: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Condense a digraph by strongly connected components.
    Scc {
        file: PathBuf,
        rel: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Test a relation against two complete-lattice orders for Galois adjoints.
    #[command(name = "pair-algebra")]
    PairAlgebra {
        file: PathBuf,
        /// The relation R : A ~ B.
        rel: String,
        /// A complete-lattice order on A.
        order_a: String,
        /// A complete-lattice order on B.
        order_b: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run the registered law suite (all laws, or those matching a filter).
    #[command(name = "check-laws")]
    CheckLaws {
        /// Only run laws whose id contains this substring.
        filter: Option<String>,
        /// Re-run one law on a serialized counterexample file.
        #[arg(long, value_name = "LAW_ID")]
        recheck: Option<String>,
        /// Counterexample file for --recheck.
        #[arg(long, requires = "recheck", value_name = "PATH")]
        counterexample: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Decide isomorphism of two relations, with explicit witnesses.
    Iso {
        file: PathBuf,
        rel: String,
        other: String,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors.
            e.exit();
        }
    };
    // Invariant violations panic; report them on one line instead of a backtrace.
    let saved_hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = std::panic::catch_unwind(|| run(cli));
    std::panic::set_hook(saved_hook);
    match outcome {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(msg)) => {
            eprintln!("relkit: {msg}");
            ExitCode::from(2)
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| panic.downcast_ref::<&str>().copied())
                .unwrap_or("unknown panic");
            eprintln!("relkit: internal law violation: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    if std::env::var_os("RELKIT_INTERNAL_PANIC").is_some() {
        panic!("deliberate internal panic requested via RELKIT_INTERNAL_PANIC");
    }
    match cli.verb {
        Verb::Diagonal { file, rel, common } => {
            let parsed = load(&file)?;
            let (name, r) = pick(&parsed, rel.as_deref())?;
            let d = diagonal(&r);
            let text = match common.format {
                Format::Text => {
                    let mut out = format!("# diagonal of {name}: {} pairs\n", d.count());
                    out.push_str(&file_of([("Delta", &d)]).to_text());
                    out
                }
                Format::Dot => rel_dot(&format!("diagonal of {name}"), &d),
                Format::Report => json_line(serde_json::json!({
                    "verb": "diagonal",
                    "rel": name,
                    "pairs": d.count(),
                    "text": file_of([("Delta", &d)]).to_text(),
                })),
            };
            emit(&common, &text)?;
            Ok(0)
        }
        Verb::BlockOrder { file, rel, common } => {
            let parsed = load(&file)?;
            let (name, r) = pick(&parsed, rel.as_deref())?;
            match block_decompose(&r) {
                Ok(bd) => {
                    let blocks = bd.t.target().size();
                    let text = match common.format {
                        Format::Text => {
                            let mut out =
                                format!("# block-ordered: true ({blocks} blocks)\n");
                            out.push_str(
                                &file_of([("F", &bd.f), ("T", &bd.t), ("G", &bd.g)]).to_text(),
                            );
                            out
                        }
                        Format::Dot => decomposition_dot(&format!("{name} blocks"), &bd),
                        Format::Report => json_line(serde_json::json!({
                            "verb": "block-order",
                            "rel": name,
                            "block_ordered": true,
                            "blocks": blocks,
                            "text": file_of([("F", &bd.f), ("T", &bd.t), ("G", &bd.g)]).to_text(),
                        })),
                    };
                    emit(&common, &text)?;
                    Ok(0)
                }
                Err(_) => {
                    let text = match common.format {
                        Format::Text | Format::Dot => "block-ordered: false\n".to_string(),
                        Format::Report => json_line(serde_json::json!({
                            "verb": "block-order",
                            "rel": name,
                            "block_ordered": false,
                        })),
                    };
                    emit(&common, &text)?;
                    Ok(1)
                }
            }
        }
        Verb::Staircase { file, rel, common } => {
            let parsed = load(&file)?;
            let (name, r) = pick(&parsed, rel.as_deref())?;
            let battery = staircase_battery(&r);
            let verdict = battery.verdict();
            let agreeing = battery.forms.iter().filter(|&&(_, v)| v == verdict).count();
            let text = match common.format {
                Format::Text => format!(
                    "staircase: {verdict} ({agreeing}/{} formulations agree)\n",
                    battery.forms.len()
                ),
                Format::Dot => {
                    return Err("dot output is not defined for `staircase`".to_string())
                }
                Format::Report => json_line(serde_json::json!({
                    "verb": "staircase",
                    "rel": name,
                    "staircase": verdict,
                    "formulations": battery.forms.iter()
                        .map(|(n, v)| serde_json::json!({"name": n, "holds": v}))
                        .collect::<Vec<_>>(),
                })),
            };
            emit(&common, &text)?;
            Ok(u8::from(!verdict))
        }
        Verb::Index { file, rel, common } => {
            let parsed = load(&file)?;
            let (name, r) = pick(&parsed, rel.as_deref())?;
            let j = rel_index(&r);
            let text = match common.format {
                Format::Text => {
                    let mut out = format!(
                        "# index of {name}: {} pairs on {}x{}\n",
                        j.count(),
                        j.target().size(),
                        j.source().size()
                    );
                    out.push_str(&file_of([("J", &j)]).to_text());
                    out
                }
                Format::Dot => rel_dot(&format!("index of {name}"), &j),
                Format::Report => json_line(serde_json::json!({
                    "verb": "index",
                    "rel": name,
                    "pairs": j.count(),
                    "text": file_of([("J", &j)]).to_text(),
                })),
            };
            emit(&common, &text)?;
            Ok(0)
        }
        Verb::Core { file, rel, common } => {
            let parsed = load(&file)?;
            let (name, r) = pick(&parsed, rel.as_deref())?;
            let cw = core_of(&r);
            let text = match common.format {
                Format::Text => {
                    let mut out = format!(
                        "# core of {name}: {}x{}\n",
                        cw.core.target().size(),
                        cw.core.source().size()
                    );
                    out.push_str(
                        &file_of([("C", &cw.core), ("Lambda", &cw.lambda), ("Rho", &cw.rho)])
                            .to_text(),
                    );
                    out
                }
                Format::Dot => rel_dot(&format!("core of {name}"), &cw.core),
                Format::Report => json_line(serde_json::json!({
                    "verb": "core",
                    "rel": name,
                    "rows": cw.core.target().size(),
                    "cols": cw.core.source().size(),
                    "text": file_of([("C", &cw.core), ("Lambda", &cw.lambda), ("Rho", &cw.rho)])
                        .to_text(),
                })),
            };
            emit(&common, &text)?;
            Ok(0)
        }
        Verb::Scc { file, rel, common } => {
            let parsed = load(&file)?;
            let (name, r) = pick(&parsed, rel.as_deref())?;
            if !r.is_homogeneous() {
                return Err(format!(
                    "`scc` needs a homogeneous relation, but `{name}` has type `{}` ~ `{}`",
                    r.target().name(),
                    r.source().name()
                ));
            }
            let cond = condense(&r);
            let text = match common.format {
                Format::Text => {
                    let mut out = format!("components: {}\n", cond.components.len());
                    for (c, members) in cond.components.iter().enumerate() {
                        let mut members = members.clone();
                        members.sort();
                        out.push_str(&format!(
                            "component {}: {}\n",
                            cond.sc.target().label(c),
                            members.join(" ")
                        ));
                    }
                    let mut edges: Vec<String> = cond
                        .dag
                        .pairs()
                        .into_iter()
                        .map(|(i, j)| {
                            format!(
                                "{} -> {}",
                                cond.sc.target().label(i),
                                cond.sc.target().label(j)
                            )
                        })
                        .collect();
                    edges.sort();
                    out.push_str(&format!("edges: {}\n", edges.join(", ")));
                    out
                }
                Format::Dot => condensation_dot(&format!("{name} condensed"), &cond),
                Format::Report => json_line(serde_json::json!({
                    "verb": "scc",
                    "rel": name,
                    "components": cond.components,
                    "edges": cond.dag.pairs().into_iter()
                        .map(|(i, j)| vec![
                            cond.sc.target().label(i).to_string(),
                            cond.sc.target().label(j).to_string(),
                        ])
                        .collect::<Vec<_>>(),
                })),
            };
            emit(&common, &text)?;
            Ok(0)
        }
        Verb::PairAlgebra { file, rel, order_a, order_b, common } => {
            let parsed = load(&file)?;
            let r = named(&parsed, &rel)?;
            let pa = named(&parsed, &order_a)?;
            let pb = named(&parsed, &order_b)?;
            check_complete_lattice(&pa)
                .map_err(|e| format!("`{order_a}` is not a complete lattice: {e}"))?;
            check_complete_lattice(&pb)
                .map_err(|e| format!("`{order_b}` is not a complete lattice: {e}"))?;
            if r.target() != pa.target() || r.source() != pb.target() {
                return Err(format!(
                    "`{rel}` must be typed over the carriers of `{order_a}` and `{order_b}`"
                ));
            }
            let (lower, upper) = adjoints(&r, &pa, &pb).map_err(|e| e.to_string())?;
            let both = lower.is_some() && upper.is_some();
            let presence =
                |o: &Option<Rel>| if o.is_some() { "present" } else { "absent" };
            let text = match common.format {
                Format::Text => {
                    let mut out = format!(
                        "pair-algebra: {both} (lower adjoint: {}, upper adjoint: {})\n",
                        presence(&lower),
                        presence(&upper)
                    );
                    let mut rels: Vec<(&str, &Rel)> = Vec::new();
                    if let Some(f) = &lower {
                        rels.push(("Lower", f));
                    }
                    if let Some(g) = &upper {
                        rels.push(("Upper", g));
                    }
                    if !rels.is_empty() {
                        out.push_str(&file_of(rels).to_text());
                    }
                    out
                }
                Format::Dot => {
                    return Err("dot output is not defined for `pair-algebra`".to_string())
                }
                Format::Report => json_line(serde_json::json!({
                    "verb": "pair-algebra",
                    "rel": rel,
                    "pair_algebra": both,
                    "lower_adjoint": lower.as_ref().map(|f| file_of([("Lower", f)]).to_text()),
                    "upper_adjoint": upper.as_ref().map(|g| file_of([("Upper", g)]).to_text()),
                })),
            };
            emit(&common, &text)?;
            Ok(u8::from(!both))
        }
        Verb::CheckLaws { filter, recheck: law_id, counterexample, common } => {
            if let Some(law_id) = law_id {
                let path = counterexample
                    .ok_or("--recheck needs --counterexample <PATH>".to_string())?;
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                let report = recheck(&law_id, &text).map_err(|e| e.to_string())?;
                let line = match common.format {
                    Format::Report => json_line(serde_json::to_value(&report).unwrap()),
                    _ => format!(
                        "law {}: {}{}\n",
                        report.law_id,
                        if report.passed { "pass" } else { "FAIL" },
                        if report.detail.is_empty() {
                            String::new()
                        } else {
                            format!(" ({})", report.detail)
                        }
                    ),
                };
                emit(&common, &line)?;
                return Ok(if report.passed { 0 } else { 3 });
            }
            let mut budget = Budget::default();
            if let Some(u) = common.exhaustive {
                budget.exhaustive_unary = u;
            }
            if let Some(s) = common.seed {
                budget = budget.with_seed(s);
            }
            if let Some(n) = common.budget {
                budget = budget.with_instances(n);
            }
            let reports = run_laws(filter.as_deref(), &budget);
            if reports.is_empty() {
                return Err(format!(
                    "no law id contains `{}`",
                    filter.as_deref().unwrap_or("")
                ));
            }
            let summaries = summarize(&reports);
            let failures: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
            let text = match common.format {
                Format::Text => {
                    let mut out = String::new();
                    for s in &summaries {
                        out.push_str(&format!(
                            "law {}: {} instances, {} failures\n",
                            s.law, s.instances, s.failures
                        ));
                    }
                    out.push_str(&format!(
                        "total: {} laws, {} instances, {} failures\n",
                        summaries.len(),
                        reports.len(),
                        failures.len()
                    ));
                    for f in &failures {
                        out.push_str(&format!(
                            "\nFAIL {} instance {}: {}\n{}",
                            f.law_id,
                            f.instance,
                            f.detail,
                            f.counterexample.as_deref().unwrap_or("")
                        ));
                    }
                    out
                }
                Format::Dot => {
                    return Err("dot output is not defined for `check-laws`".to_string())
                }
                Format::Report => {
                    let mut out = summary_jsonl(&reports);
                    for f in &failures {
                        out.push_str(&json_line(serde_json::to_value(f).unwrap()));
                    }
                    out
                }
            };
            emit(&common, &text)?;
            Ok(if failures.is_empty() { 0 } else { 3 })
        }
        Verb::Iso { file, rel, other, common } => {
            let parsed = load(&file)?;
            let r = named(&parsed, &rel)?;
            let s = named(&parsed, &other)?;
            let verdict = are_isomorphic(&r, &s);
            let (text, code) = match &verdict {
                IsoVerdict::Found { phi, psi } => {
                    let text = match common.format {
                        Format::Text => {
                            let mut out = "# isomorphic: true\n".to_string();
                            out.push_str(&file_of([("Phi", phi), ("Psi", psi)]).to_text());
                            out
                        }
                        Format::Dot => {
                            return Err("dot output is not defined for `iso`".to_string())
                        }
                        Format::Report => json_line(serde_json::json!({
                            "verb": "iso",
                            "rels": [rel, other],
                            "isomorphic": "true",
                            "text": file_of([("Phi", phi), ("Psi", psi)]).to_text(),
                        })),
                    };
                    (text, 0)
                }
                IsoVerdict::Absent => {
                    let text = match common.format {
                        Format::Report => json_line(serde_json::json!({
                            "verb": "iso",
                            "rels": [rel, other],
                            "isomorphic": "false",
                        })),
                        Format::Dot => {
                            return Err("dot output is not defined for `iso`".to_string())
                        }
                        Format::Text => "isomorphic: false\n".to_string(),
                    };
                    (text, 1)
                }
                IsoVerdict::Unknown => {
                    let text = match common.format {
                        Format::Report => json_line(serde_json::json!({
                            "verb": "iso",
                            "rels": [rel, other],
                            "isomorphic": "unknown",
                        })),
                        Format::Dot => {
                            return Err("dot output is not defined for `iso`".to_string())
                        }
                        Format::Text => {
                            "isomorphic: unknown (search budget exceeded)\n".to_string()
                        }
                    };
                    (text, 1)
                }
            };
            emit(&common, &text)?;
            Ok(code)
        }
    }
}

fn load(path: &PathBuf) -> Result<RelFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    RelFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// The named relation, or the file's only relation when no name is given.
fn pick(file: &RelFile, name: Option<&str>) -> Result<(String, Rel), String> {
    match name {
        Some(n) => Ok((n.to_string(), named(file, n)?)),
        None => match file.rels.as_slice() {
            [(n, r)] => Ok((n.clone(), r.clone())),
            [] => Err("the file declares no relations".to_string()),
            many => Err(format!(
                "the file declares {} relations ({}); name one",
                many.len(),
                many.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", ")
            )),
        },
    }
}

fn named(file: &RelFile, name: &str) -> Result<Rel, String> {
    file.rel(name).cloned().map_err(|e| e.to_string())
}

fn json_line(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string(&v).expect("json serializes");
    s.push('\n');
    s
}

fn emit(common: &Common, content: &str) -> Result<(), String> {
    match &common.out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
