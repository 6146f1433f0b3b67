//! The `gla` command line. Exit codes: 0 success, 1 mathematical validation failure,
//! 2 internal-consistency failure, 64 usage or format error.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::admissibility::{
    btheta_metric, check_admissible, check_equivariance_direct, cotangent_standard_metric, Involution,
};
use crate::ctg;
use crate::hodge::{AdaptedMetric, Hodge};
use crate::io::{AlgebraDocument, DocumentError, FamilyDocument};
use crate::lie::{Axiom, GradedLieAlgebra};
use crate::normalization::Normalizer;
use crate::prolongation;
use crate::registry;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable overriding the directory for relative output paths.
pub const OUT_DIR_VAR: &str = "GLA_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "gla", version, about = "Exact cohomology, Hodge theory and admissibility for graded Lie algebras")]
pub struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Compute independent blocks in parallel (output is identical).
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricSource {
    /// The document's metric if present, otherwise the identity.
    Auto,
    Identity,
    Document,
    /// `-B(·, θ·)` from the document's involution.
    Btheta,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Built-in algebras.
    Registry {
        #[command(subcommand)]
        action: RegistryAction,
    },
    /// Check the graded Lie algebra axioms.
    Validate {
        path: PathBuf,
        /// Also require a fundamental gradation.
        #[arg(long)]
        fundamental: bool,
    },
    /// Dimensions of `H^k_l` by harmonic forms and by `ker/im`.
    Cohomology {
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Inclusive range `a..b`; defaults to every degree occurring in `C^k`.
        #[arg(long)]
        l: Option<String>,
        #[arg(long, value_enum, default_value_t = MetricSource::Auto)]
        metric: MetricSource,
    },
    /// Admissibility verdict with witness.
    Admissible {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = MetricSource::Auto)]
        metric: MetricSource,
    },
    /// Build `t*(g)`; embeds the standard metric when the input carries one.
    Cotangent {
        path: PathBuf,
        /// Write the document here and print a report; otherwise print the document.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tanaka prolongation dimensions.
    Prolong {
        path: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_k: i32,
    },
    /// Normalize a formal curvature family.
    Normalize {
        path: PathBuf,
        curvature: PathBuf,
        #[arg(long, default_value = "normal_curvature.json")]
        out_curvature: PathBuf,
        #[arg(long, default_value = "gauge.json")]
        out_gauge: PathBuf,
        #[arg(long, value_enum, default_value_t = MetricSource::Auto)]
        metric: MetricSource,
    },
    /// Closed-form first cohomology of `t*(g)` against the general computation.
    CtgReport { path: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum RegistryAction {
    List,
    /// Print the document of a built-in algebra.
    Emit {
        name: String,
    },
}

#[derive(Debug, Clone, Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

#[derive(Debug, Clone, Serialize)]
struct RunReport {
    command: Vec<String>,
    inputs: Vec<InputDigest>,
    results: Value,
    exit_status: i32,
}

/// Failure carrying the exit code and a message.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INVALID, message: message.into() }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Metric(_) | DocumentError::Involution(_) => Failure::invalid(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

enum Output {
    Report { results: Value, code: i32 },
    Raw(String),
}

struct Context {
    inputs: Vec<InputDigest>,
    stdin: Option<String>,
    parallel: bool,
    pending_writes: Vec<(PathBuf, String)>,
}

impl Context {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let text = if path == Path::new("-") {
            if self.stdin.is_none() {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
                self.stdin = Some(s);
            }
            self.stdin.clone().unwrap_or_default()
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        };
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(text.as_bytes())),
        });
        Ok(text)
    }

    fn load(&mut self, path: &Path) -> Result<(AlgebraDocument, GradedLieAlgebra), Failure> {
        let doc = AlgebraDocument::parse(&self.read(path)?)?;
        let g = doc.to_algebra()?;
        Ok((doc, g))
    }
}

fn out_path(p: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_VAR) {
        Some(dir) if p.is_relative() => Path::new(&dir).join(p),
        _ => p.to_path_buf(),
    }
}

/// Writes every file through a temporary sibling and a rename, after all computation is done.
fn commit_writes(writes: &[(PathBuf, String)]) -> Result<Vec<String>, Failure> {
    let mut staged = Vec::new();
    for (path, text) in writes {
        let tmp = path.with_extension("tmp-gla");
        if let Err(e) = std::fs::write(&tmp, text) {
            for t in &staged {
                let _ = std::fs::remove_file(t);
            }
            let _ = std::fs::remove_file(&tmp);
            return Err(Failure::usage(format!("{}: {e}", path.display())));
        }
        staged.push(tmp);
    }
    for ((path, _), tmp) in writes.iter().zip(&staged) {
        std::fs::rename(tmp, path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    Ok(writes.iter().map(|(p, _)| p.display().to_string()).collect())
}

fn require_valid(g: &GradedLieAlgebra) -> Result<(), Failure> {
    let report = g.validate(false);
    if report.is_valid() {
        Ok(())
    } else {
        Err(Failure::invalid(report.summary()))
    }
}

fn select_metric(
    doc: &AlgebraDocument,
    g: &GradedLieAlgebra,
    source: MetricSource,
) -> Result<(AdaptedMetric, &'static str), Failure> {
    match source {
        MetricSource::Identity => Ok((AdaptedMetric::identity(g), "identity")),
        MetricSource::Auto => Ok(match doc.metric(g)? {
            Some(m) => (m, "document"),
            None => (AdaptedMetric::identity(g), "identity"),
        }),
        MetricSource::Document => {
            doc.metric(g)?.map(|m| (m, "document")).ok_or_else(|| Failure::usage("document has no metric"))
        }
        MetricSource::Btheta => {
            let theta = doc.involution(g)?.ok_or_else(|| Failure::usage("document has no involution"))?;
            let theta = Involution::new(g, theta).map_err(|e| Failure::invalid(e.to_string()))?;
            Ok((btheta_metric(g, &theta).map_err(|e| Failure::invalid(e.to_string()))?, "btheta"))
        }
    }
}

fn parse_range(s: &str) -> Result<Vec<i32>, Failure> {
    let (a, b) = s.split_once("..").ok_or_else(|| Failure::usage(format!("bad range {s:?}, expected a..b")))?;
    let a: i32 = a.trim().parse().map_err(|_| Failure::usage(format!("bad range start {a:?}")))?;
    let b: i32 = b.trim().parse().map_err(|_| Failure::usage(format!("bad range end {b:?}")))?;
    Ok((a..=b).collect())
}

fn map_maybe_parallel<T, R, F>(items: Vec<T>, parallel: bool, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    if parallel {
        items.into_par_iter().map(f).collect()
    } else {
        items.into_iter().map(f).collect()
    }
}

fn execute(command: &Command, ctx: &mut Context) -> Result<Output, Failure> {
    match command {
        Command::Registry { action: RegistryAction::List } => {
            let entries: Vec<Value> = registry::list()
                .into_iter()
                .map(|n| {
                    let g = registry::get(n).expect("registry entry");
                    json!({"name": n, "dim": g.dim(), "depth": g.depth(), "height": g.height()})
                })
                .collect();
            Ok(Output::Report { results: json!({"algebras": entries}), code: EXIT_OK })
        }
        Command::Registry { action: RegistryAction::Emit { name } } => {
            let g = registry::get(name).map_err(|e| Failure::usage(e.to_string()))?;
            let mut doc = AlgebraDocument::from_algebra(&g);
            if let Some(theta) = registry::standard_involution(name) {
                doc = doc.with_involution(&theta);
            }
            Ok(Output::Raw(doc.emit()))
        }
        Command::Validate { path, fundamental } => {
            let (_, g) = ctx.load(path)?;
            let report = g.validate(*fundamental);
            let code = if report.is_valid() { EXIT_OK } else { EXIT_INVALID };
            Ok(Output::Report {
                results: json!({
                    "algebra": g.name(),
                    "dim": g.dim(),
                    "fundamental_required": fundamental,
                    "valid": report.is_valid(),
                    "valid_except_exactness": report.is_valid_except(&[Axiom::ExactAction]),
                    "failures": report.failures,
                }),
                code,
            })
        }
        Command::Cohomology { path, k, l, metric } => {
            let (doc, g) = ctx.load(path)?;
            require_valid(&g)?;
            let (metric, source) = select_metric(&doc, &g, *metric)?;
            let hodge = Hodge::new(&g, &metric);
            let degrees = match l {
                Some(r) => parse_range(r)?,
                None => hodge.complex().degrees(*k),
            };
            let rows = map_maybe_parallel(degrees, ctx.parallel, |l| (l, hodge.cohomology_dim(*k, l)));
            let mut code = EXIT_OK;
            let table: Vec<Value> = rows
                .into_iter()
                .map(|(l, r)| match r {
                    Ok(d) => json!({"quantity": "cohomology_dim", "k": k, "l": l, "harmonic": d.harmonic, "ker_im": d.ker_im, "agree": true}),
                    Err(e) => {
                        code = EXIT_INTERNAL;
                        json!({"quantity": "cohomology_dim", "k": k, "l": l, "error": e.to_string(), "agree": false})
                    }
                })
                .collect();
            Ok(Output::Report { results: json!({"algebra": g.name(), "metric": source, "table": table}), code })
        }
        Command::Admissible { path, metric } => {
            let (doc, g) = ctx.load(path)?;
            require_valid(&g)?;
            let (metric, source) = select_metric(&doc, &g, *metric)?;
            let verdict = check_admissible(&g, &metric);
            let direct: Vec<bool> = map_maybe_parallel(vec![0usize, 1], ctx.parallel, |k| {
                check_equivariance_direct(&g, &metric, k).commutes
            });
            let direct_all = direct.iter().all(|&b| b);
            let code = if direct_all == verdict.admissible { EXIT_OK } else { EXIT_INTERNAL };
            Ok(Output::Report {
                results: json!({
                    "algebra": g.name(),
                    "metric": source,
                    "admissible": verdict.admissible,
                    "witness": verdict.witness,
                    "direct_equivariance": {"k0": direct[0], "k1": direct[1]},
                    "criterion_matches_direct": direct_all == verdict.admissible,
                }),
                code,
            })
        }
        Command::Cotangent { path, out } => {
            let (doc, g) = ctx.load(path)?;
            require_valid(&g)?;
            if g.height() > 0 {
                return Err(Failure::invalid("cotangent algebra needs a non-positively graded input"));
            }
            let h_doc = match doc.metric(&g)? {
                Some(m) => {
                    let (h, hm, theta, _) =
                        cotangent_standard_metric(&g, &m.full_gram(&g)).map_err(|e| Failure::invalid(e.to_string()))?;
                    AlgebraDocument::from_algebra(&h).with_metric(&hm).with_involution(theta.matrix())
                }
                None => AlgebraDocument::from_algebra(&g.cotangent().map_err(|e| Failure::invalid(e.to_string()))?),
            };
            match out {
                None => Ok(Output::Raw(h_doc.emit())),
                Some(p) => {
                    let target = out_path(p);
                    ctx.pending_writes.push((target.clone(), h_doc.emit()));
                    Ok(Output::Report {
                        results: json!({"algebra": h_doc.name, "dim": h_doc.basis.len(), "metric_embedded": h_doc.metric.is_some(), "written": [target.display().to_string()]}),
                        code: EXIT_OK,
                    })
                }
            }
        }
        Command::Prolong { path, max_k } => {
            let (_, g) = ctx.load(path)?;
            if *max_k < 1 {
                return Err(Failure::usage("--max-k must be at least 1"));
            }
            let p = prolongation::prolong(&g, *max_k).map_err(|e| Failure::invalid(e.to_string()))?;
            let verified = prolongation::verify_levels(&g, &p);
            let code = if verified && p.determined_by_generators { EXIT_OK } else { EXIT_INTERNAL };
            Ok(Output::Report {
                results: json!({
                    "algebra": g.name(),
                    "dims": p.dims(),
                    "finite_type": p.finite_type,
                    "determined_by_generators": p.determined_by_generators,
                    "levels_satisfy_condition": verified,
                }),
                code,
            })
        }
        Command::Normalize { path, curvature, out_curvature, out_gauge, metric } => {
            let (doc, g) = ctx.load(path)?;
            require_valid(&g)?;
            let (metric, source) = select_metric(&doc, &g, *metric)?;
            let fam = FamilyDocument::parse(&ctx.read(curvature)?)?;
            if fam.form_degree != 2 {
                return Err(Failure::usage("curvature must have form_degree 2"));
            }
            let n = Normalizer::new(&g, &metric);
            let result = n.normalize(&fam.family(), None).map_err(|e| Failure::usage(e.to_string()))?;
            let normal = n.is_normal(&result.curvature);
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            let probe = n.uniqueness_probe(&fam.family(), 3, &mut rng);
            let code = if normal && probe.all_invariant() { EXIT_OK } else { EXIT_INTERNAL };
            let (pc, pg) = (out_path(out_curvature), out_path(out_gauge));
            if code == EXIT_OK {
                ctx.pending_writes.push((pc.clone(), FamilyDocument::new(2, &result.curvature).emit()));
                ctx.pending_writes.push((pg.clone(), FamilyDocument::new(1, &result.gauge).emit()));
            }
            Ok(Output::Report {
                results: json!({
                    "algebra": g.name(),
                    "metric": source,
                    "m_max": n.m_max(),
                    "trace": result.trace,
                    "normal": normal,
                    "exact_perturbation_invariant": probe.all_invariant(),
                    "uniqueness_hypothesis_h1_vanishes": probe.h1_positive_vanishes,
                    "nonvanishing_h1_degrees": probe.nonvanishing_h1,
                    "written": if code == EXIT_OK { vec![pc.display().to_string(), pg.display().to_string()] } else { vec![] },
                }),
                code,
            })
        }
        Command::CtgReport { path } => {
            let (_, g) = ctx.load(path)?;
            require_valid(&g)?;
            let report = ctg::adunat_report_with(&g, ctx.parallel).map_err(|e| match e {
                ctg::CtgError::Hodge(h) => Failure { code: EXIT_INTERNAL, message: h.to_string() },
                other => Failure::invalid(other.to_string()),
            })?;
            let depth_one = if g.depth() == 1 {
                let d =
                    ctg::depth_one_report(&g).map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() })?;
                json!({"report": d, "structural_formula_holds": d.formulas_hold()})
            } else {
                Value::Null
            };
            let code = if report.all_agree() { EXIT_OK } else { EXIT_INTERNAL };
            Ok(Output::Report {
                results: json!({"closed_form_vs_general": report, "all_agree": report.all_agree(), "depth_one": depth_one}),
                code,
            })
        }
    }
}

fn render_text(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                render_text(x, &p, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                render_text(x, &format!("{prefix}[{i}]"), out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
        other => out.push_str(&format!("{prefix}: {other}\n")),
    }
}

fn render(report: &RunReport, as_json: bool) -> String {
    if as_json {
        let mut s = serde_json::to_string_pretty(report).expect("report serializes");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        render_text(&serde_json::to_value(report).expect("report serializes"), "", &mut s);
        s
    }
}

fn echo(args: &[String]) -> Vec<String> {
    std::iter::once("gla".to_string()).chain(args.iter().skip(1).cloned()).collect()
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    let mut ctx = Context { inputs: Vec::new(), stdin: None, parallel: cli.parallel, pending_writes: Vec::new() };
    let result = execute(&cli.command, &mut ctx).and_then(|out| {
        if let Output::Report { results, code } = out {
            let mut results = results;
            if !ctx.pending_writes.is_empty() {
                commit_writes(&ctx.pending_writes)?;
                if let Some(obj) = results.as_object_mut() {
                    obj.entry("written").or_insert(json!(ctx
                        .pending_writes
                        .iter()
                        .map(|(p, _)| p.display().to_string())
                        .collect::<Vec<_>>()));
                }
            }
            Ok(Output::Report { results, code })
        } else {
            Ok(out)
        }
    });
    match result {
        Ok(Output::Raw(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Ok(Output::Report { results, code }) => {
            let report = RunReport { command: echo(args), inputs: ctx.inputs, results, exit_status: code };
            let _ = stdout.write_all(render(&report, cli.json).as_bytes());
            code
        }
        Err(f) => {
            if f.code != EXIT_USAGE {
                let report = RunReport {
                    command: echo(args),
                    inputs: ctx.inputs,
                    results: json!({"error": f.message}),
                    exit_status: f.code,
                };
                let _ = stdout.write_all(render(&report, cli.json).as_bytes());
            }
            let _ = writeln!(stderr, "gla: {}", f.message);
            f.code
        }
    }
}
