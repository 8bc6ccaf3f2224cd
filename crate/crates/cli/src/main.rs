use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use shd_core::admissibility::{area_certificate, AdmissibilityError};
use shd_core::corpus;
use shd_core::diagram::{parse_diagram, validate, SuturedDiagram};
use shd_core::floer::{differential, trajectory_min, FloerError};
use shd_core::report::{self, region_map, Report};
use shd_core::tangle::shi_upper_bound;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "shd", version, about = "Balanced sutured Heegaard diagram calculator")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every structural invariant of a diagram.
    Validate { file: String },
    /// List the generators.
    Generators { file: String },
    /// Periodic-domain lattice and H_1 data.
    Lattice { file: String },
    /// Admissibility verdict with its witness.
    Admissible { file: String },
    /// Positive integer area certificate.
    Areas { file: String },
    /// Admissibility, certificate, full tangle, sign count and the resulting bound.
    Bound { file: String },
    /// Sutured Floer rank of a nice admissible diagram.
    Sfh { file: String },
    /// Strong-diagram and L-space classification.
    Classify { file: String },
    /// Every report section at once.
    Report { file: String },
    /// Minimum generator count over admissible diagrams of one manifold.
    Trajectory {
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Bundled corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Run every invariant suite.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
    /// Write corpus files to a directory.
    Export {
        #[arg(long, default_value = "corpus")]
        dir: PathBuf,
        /// Entries to export (all when omitted).
        names: Vec<String>,
    },
}

enum Failure {
    /// Exit 1: the diagram is fine but the requested result does not exist.
    Domain(String),
    /// Exit 2: unreadable, malformed or invalid input.
    Input(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        match self {
            Failure::Domain(m) => {
                eprintln!("error: {m}");
                ExitCode::from(1)
            }
            Failure::Input(m) => {
                eprintln!("error: {m}");
                ExitCode::from(2)
            }
        }
    }
}

/// Literal path, then `$SHD_CORPUS_DIR`, then the bundled corpus.
fn read_source(arg: &str) -> Result<String, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{arg}: {e}")));
    }
    if let (Some(dir), Some(file)) = (std::env::var_os("SHD_CORPUS_DIR"), path.file_name()) {
        let candidate = Path::new(&dir).join(file);
        if candidate.is_file() {
            return std::fs::read_to_string(&candidate).map_err(|e| Failure::Input(format!("{}: {e}", candidate.display())));
        }
    }
    corpus::text(arg).map(str::to_string).ok_or_else(|| Failure::Input(format!("{arg}: no such file or corpus entry")))
}

fn parse(arg: &str) -> Result<SuturedDiagram, Failure> {
    parse_diagram(&read_source(arg)?).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

fn load_valid(arg: &str) -> Result<SuturedDiagram, Failure> {
    let d = parse(arg)?;
    let report = validate(&d);
    if !report.is_valid() {
        let list: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(Failure::Input(format!("{arg} is not a valid diagram:\n  {}", list.join("\n  "))));
    }
    Ok(d)
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", "))
        }
        Value::Object(map) if map.values().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}: {}", scalar(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

/// Aligned `key  value` lines; arrays of composite values get one line each.
fn render_section(name: &str, section: &Value, out: &mut String) {
    out.push_str(&format!("[{name}]\n"));
    let Some(map) = section.as_object() else {
        out.push_str(&format!("  {}\n", scalar(section)));
        return;
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    for (k, v) in map {
        match v {
            Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) || items.len() > 8 => {
                out.push_str(&format!("  {k:width$}  ({} entries)\n", items.len()));
                for item in items {
                    out.push_str(&format!("    {}\n", scalar(item)));
                }
            }
            Value::Array(items) if items.iter().all(Value::is_string) && !items.is_empty() && k == "statements" => {
                out.push_str(&format!("  {k}\n"));
                for item in items {
                    out.push_str(&format!("    {}\n", scalar(item)));
                }
            }
            _ => out.push_str(&format!("  {k:width$}  {}\n", scalar(v))),
        }
    }
}

fn render(report: &Report) -> String {
    let mut out = format!("diagram  {}\n", report.diagram_name);
    for (name, section) in &report.sections {
        render_section(name, section, &mut out);
    }
    out
}

fn emit(report: &Report, json: bool) {
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", render(report));
    }
}

fn single(file: &str, sections: &[&str], json: bool) -> Result<(SuturedDiagram, Report), Failure> {
    let d = load_valid(file)?;
    let r = sections.iter().fold(Report::new(VERSION, d.name()), |r, s| r.section(&d, s));
    emit(&r, json);
    Ok((d, r))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Validate { file } => {
            let d = parse(&file)?;
            let r = Report::new(VERSION, d.name()).section(&d, "validation");
            emit(&r, json);
            if !validate(&d).is_valid() {
                return Err(Failure::Input(format!("{file} is not a valid diagram")));
            }
        }
        Command::Generators { file } => {
            single(&file, &["generators"], json)?;
        }
        Command::Lattice { file } => {
            single(&file, &["lattice"], json)?;
        }
        Command::Admissible { file } => {
            single(&file, &["admissibility"], json)?;
        }
        Command::Areas { file } => {
            let d = load_valid(&file)?;
            let mut r = Report::new(VERSION, d.name());
            let result = area_certificate(&d);
            let section = match &result {
                Ok(c) => json!({ "certificate": region_map(&d, &c.areas), "total_area": c.total() }),
                Err(AdmissibilityError::NotAdmissible { witness }) => {
                    json!({ "certificate": Value::Null, "witness": region_map(&d, &witness.0) })
                }
            };
            r.sections.insert("areas".into(), section);
            emit(&r, json);
            if let Err(AdmissibilityError::NotAdmissible { witness }) = result {
                return Err(not_admissible(&d, &witness.0));
            }
        }
        Command::Bound { file } => {
            let (d, _) = single(&file, &["bound"], json)?;
            let b = shi_upper_bound(&d);
            if let Some(w) = b.witness {
                return Err(Failure::Domain(format!(
                    "{}; no bound is asserted",
                    not_admissible_message(&d, &w.0)
                )));
            }
        }
        Command::Sfh { file } => {
            let (d, _) = single(&file, &["floer"], json)?;
            match differential(&d) {
                Ok(_) => {}
                Err(FloerError::NotAdmissible { witness }) => return Err(not_admissible(&d, &witness.0)),
                Err(e) => return Err(Failure::Domain(e.to_string())),
            }
        }
        Command::Classify { file } => {
            single(&file, &["classification"], json)?;
        }
        Command::Report { file } => {
            let d = load_valid(&file)?;
            emit(&report::full_report(VERSION, &d), json);
        }
        Command::Trajectory { files } => {
            let diagrams = files.iter().map(|f| load_valid(f)).collect::<Result<Vec<_>, _>>()?;
            let t = trajectory_min(&diagrams);
            let names: Vec<&str> = diagrams.iter().map(|d| d.name()).collect();
            let mut r = Report::new(VERSION, &names.join(","));
            r.sections.insert(
                "trajectory".into(),
                json!({
                    "min": t.min,
                    "per_diagram": t.per_diagram.iter().map(|e| json!({
                        "name": e.name,
                        "admissible": e.admissible,
                        "generator_count": e.generator_count,
                    })).collect::<Vec<_>>(),
                    "skipped": t.skipped().map(|e| e.name.clone()).collect::<Vec<_>>(),
                }),
            );
            emit(&r, json);
        }
        Command::Corpus { action: CorpusAction::List } => {
            if json {
                let list: Vec<Value> = corpus::entries()
                    .iter()
                    .map(|e| json!({ "name": e.name, "file": e.file_name(), "description": e.description }))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&list).expect("serializes"));
            } else {
                let width = corpus::entries().iter().map(|e| e.name.len()).max().unwrap_or(0);
                for e in corpus::entries() {
                    println!("{:width$}  {}", e.name, e.description);
                }
            }
        }
        Command::Corpus { action: CorpusAction::Export { dir, names } } => {
            let entries: Vec<&corpus::CorpusEntry> = if names.is_empty() {
                corpus::entries().iter().collect()
            } else {
                names
                    .iter()
                    .map(|n| corpus::find(n).ok_or_else(|| Failure::Input(format!("no corpus entry {n}"))))
                    .collect::<Result<_, _>>()?
            };
            std::fs::create_dir_all(&dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
            for e in entries {
                let path = dir.join(e.file_name());
                std::fs::write(&path, e.text).map_err(|err| Failure::Input(format!("{}: {err}", path.display())))?;
                println!("{}", path.display());
            }
        }
        Command::Selftest { seed } => {
            let r = shd_core::selftest::run(seed);
            if json {
                let checks: Vec<Value> = r
                    .checks
                    .iter()
                    .map(|c| json!({ "suite": c.suite, "passed": c.passed, "detail": c.detail }))
                    .collect();
                let mut map = Map::new();
                map.insert("tool_version".into(), json!(VERSION));
                map.insert("seed".into(), json!(seed));
                map.insert("passed".into(), json!(r.passed()));
                map.insert("checks".into(), Value::Array(checks));
                println!("{}", serde_json::to_string_pretty(&Value::Object(map)).expect("serializes"));
            } else {
                let width = r.checks.iter().map(|c| c.suite.len()).max().unwrap_or(0);
                for c in &r.checks {
                    let status = if c.passed { "ok  " } else { "FAIL" };
                    println!("{status}  {:width$}  {}", c.suite, c.detail);
                }
            }
            if !r.passed() {
                return Err(Failure::Domain("selftest failed".into()));
            }
        }
    }
    Ok(())
}

fn not_admissible_message(d: &SuturedDiagram, witness: &[i64]) -> String {
    format!(
        "{} is not admissible: the periodic domain {} is nonnegative",
        d.name(),
        scalar(&region_map(d, witness))
    )
}

fn not_admissible(d: &SuturedDiagram, witness: &[i64]) -> Failure {
    Failure::Domain(not_admissible_message(d, witness))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.exit(),
    }
}
