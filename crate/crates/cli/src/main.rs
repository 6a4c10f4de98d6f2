//! Command-line front end: file ingestion, check orchestration, and
//! report emission in human-readable text or machine-readable JSON.
//!
//! Exit codes: 0 all checks pass, 1 a required check fails, 2 parse or
//! structural error, 3 a search was inconclusive within its bound.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use nervecheck::double::{transpose, validate_double_category};
use nervecheck::enumerate::{Budget, DEFAULT_BUDGET};
use nervecheck::fincat::validate_category;
use nervecheck::io::{
    self, category_to_file, double_category_to_file, triple_category_to_file, Document,
    DocumentFile,
};
use nervecheck::iterate::{
    lifted_double_monad, triple_from_distributive_law, validate_lifted_double_monad,
    validate_triple_category,
};
use nervecheck::monad::{
    kleisli_category, validate_distributive_law, validate_kl_2cell, validate_monad,
    validate_monad_morphism, DistributiveLaw,
};
use nervecheck::nerve::{
    check_faithfulness, check_fullness_bounded, check_horizontal_closure, check_theorem_axioms,
    check_vertical_closure, check_whisker_closure, nerve_double_category, Theory,
};
use nervecheck::report::{Finding, Report, Status};
use nervecheck::Monad;

#[derive(Parser)]
#[command(name = "nervecheck", version, about = "Verification engine for nerves of monads")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

fn parse_theory(s: &str) -> Result<Theory, String> {
    Theory::parse(s)
        .ok_or_else(|| format!("unknown theory `{s}`; expected kleisli|embedding|splitepi|multi:<n>"))
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate any document; the check is selected by its `kind`.
    Validate { file: PathBuf },
    /// Emit the Kleisli category of a monad as a category file.
    Kleisli {
        file: PathBuf,
        /// Output path for the category file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a nerve double category and run the theorem axiom suite.
    Nerve {
        #[arg(long, value_parser = parse_theory)]
        theory: Theory,
        /// Emit the transpose instead.
        #[arg(long)]
        transpose: bool,
        file: PathBuf,
        /// Output path for the double-category file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the theorem axiom suite on the nerve of a monad.
    Axioms {
        #[arg(long, value_parser = parse_theory)]
        theory: Theory,
        file: PathBuf,
    },
    /// Closure of cells under vertical, whisker, and horizontal composition.
    Closure {
        #[arg(long, value_parser = parse_theory)]
        theory: Theory,
        p: PathBuf,
        /// Second monad (defaults to P).
        q: Option<PathBuf>,
        /// Third monad (defaults to Q).
        r: Option<PathBuf>,
        /// Candidate-evaluation bound per search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        bound: u64,
    },
    /// Faithfulness and bounded fullness of the whiskering functor.
    Faithful {
        #[arg(long, value_parser = parse_theory)]
        theory: Theory,
        p: PathBuf,
        q: PathBuf,
        /// Candidate-evaluation bound per search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        bound: u64,
    },
    /// Assemble and validate the triple category of a distributive law.
    Triple {
        #[arg(long, value_parser = parse_theory)]
        theory1: Theory,
        #[arg(long, value_parser = parse_theory)]
        theory2: Theory,
        file: PathBuf,
        /// Output path for the triple-category file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// One command run: inputs with digests, the echoed bound if any, and
/// the findings.
struct RunReport {
    inputs: Vec<(String, String)>,
    bound: Option<u64>,
    report: Report,
    /// Force exit 2 (structural) even though findings were produced.
    structural: bool,
}

impl RunReport {
    fn new() -> Self {
        RunReport { inputs: Vec::new(), bound: None, report: Report::new(), structural: false }
    }

    fn input(&mut self, path: &Path) -> Result<()> {
        let bytes = std::fs::read(path)
            .with_context(|| format!("cannot read `{}`", path.display()))?;
        let digest = hex(&Sha256::digest(&bytes));
        self.inputs.push((path.display().to_string(), digest));
        Ok(())
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Inconclusive => "inconclusive",
    }
}

fn workers() -> Option<String> {
    std::env::var("NERVECHECK_WORKERS").ok()
}

fn emit(format: Format, run: &RunReport) {
    let overall = run.report.overall_required();
    match format {
        Format::Machine => {
            let findings: Vec<_> = run
                .report
                .findings
                .iter()
                .map(|f| {
                    serde_json::json!({
                        "check": f.check,
                        "status": status_str(f.status),
                        "witnesses": f.witnesses,
                    })
                })
                .collect();
            let inputs: Vec<_> = run
                .inputs
                .iter()
                .map(|(p, d)| serde_json::json!({"path": p, "sha256": d}))
                .collect();
            let doc = serde_json::json!({
                "schema": "nervecheck-report/1",
                "version": env!("CARGO_PKG_VERSION"),
                "workers": workers(),
                "inputs": inputs,
                "bound": run.bound,
                "findings": findings,
                "overall": status_str(overall),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        }
        Format::Text => {
            println!("nervecheck {}", env!("CARGO_PKG_VERSION"));
            if let Some(w) = workers() {
                println!("workers {w} (requested; execution is sequential)");
            }
            for (p, d) in &run.inputs {
                println!("input {p} sha256={d}");
            }
            if let Some(b) = run.bound {
                println!("bound {b}");
            }
            for f in &run.report.findings {
                let mut line = format!("{}: {}", f.check, status_str(f.status));
                if !f.witnesses.is_empty() {
                    let shown: Vec<&str> =
                        f.witnesses.iter().take(5).map(|s| s.as_str()).collect();
                    line.push_str(&format!(" -- {}", shown.join("; ")));
                    if f.witnesses.len() > 5 {
                        line.push_str(&format!(" (+{} more)", f.witnesses.len() - 5));
                    }
                }
                println!("{line}");
            }
            println!("overall: {}", status_str(overall));
        }
    }
}

fn load(path: &Path) -> Result<Document> {
    io::load_document(path).with_context(|| format!("cannot load `{}`", path.display()))
}

fn expect_monad(path: &Path) -> Result<Monad> {
    match load(path)? {
        Document::Monad(m) => Ok(m),
        d => bail!("`{}` is a {} document, expected a monad", path.display(), d.kind()),
    }
}

fn expect_law(path: &Path) -> Result<DistributiveLaw> {
    match load(path)? {
        Document::DistributiveLaw(d) => Ok(d),
        d => bail!(
            "`{}` is a {} document, expected a distributive_law",
            path.display(),
            d.kind()
        ),
    }
}

fn write_out(out: &Option<PathBuf>, file: &DocumentFile) -> Result<()> {
    match out {
        Some(path) => io::save_document(path, file)
            .with_context(|| format!("cannot write `{}`", path.display())),
        None => Ok(()),
    }
}

fn cmd_validate(file: &Path, run: &mut RunReport) -> Result<()> {
    run.input(file)?;
    let doc = load(file)?;
    let vr = match &doc {
        Document::Category(c) => validate_category(c),
        Document::Monad(m) => validate_monad(m),
        Document::MonadMorphism(mm) => validate_monad_morphism(mm),
        Document::KlTwoCell(c) => validate_kl_2cell(c),
        Document::DistributiveLaw(d) => validate_distributive_law(d),
        Document::DoubleCategory(d) => validate_double_category(d),
        Document::TripleCategory(t) => validate_triple_category(t),
    };
    run.structural = vr.has_structural_errors();
    run.report.push(Finding::from_violations(
        format!("validate-{}", doc.kind()),
        vr.messages().iter().map(|s| s.to_string()).collect(),
    ));
    Ok(())
}

fn cmd_kleisli(file: &Path, out: &Option<PathBuf>, run: &mut RunReport) -> Result<()> {
    run.input(file)?;
    let m = expect_monad(file)?;
    match kleisli_category(&m) {
        Err(e) => run.report.push(Finding::fail("kleisli-category", vec![e.to_string()])),
        Ok(k) => {
            let vr = validate_category(&k);
            run.report.push(Finding::from_violations(
                "kleisli-category",
                vr.messages().iter().map(|s| s.to_string()).collect(),
            ));
            write_out(out, &DocumentFile::Category(category_to_file(&k)))?;
        }
    }
    Ok(())
}

fn cmd_nerve(
    theory: Theory,
    transpose_out: bool,
    file: &Path,
    out: &Option<PathBuf>,
    run: &mut RunReport,
) -> Result<()> {
    run.input(file)?;
    let m = expect_monad(file)?;
    let n = match nerve_double_category(theory, &m) {
        Ok(n) => n,
        Err(e) => {
            run.report.push(Finding::fail("nerve-construction", vec![e.to_string()]));
            return Ok(());
        }
    };
    run.report.push(Finding::pass("nerve-construction"));
    run.report.extend(check_theorem_axioms(&n));
    let dc = if transpose_out { transpose(&n.dc) } else { n.dc.clone() };
    write_out(out, &DocumentFile::DoubleCategory(double_category_to_file(&dc)))?;
    Ok(())
}

fn cmd_axioms(theory: Theory, file: &Path, run: &mut RunReport) -> Result<()> {
    run.input(file)?;
    let m = expect_monad(file)?;
    match nerve_double_category(theory, &m) {
        Err(e) => run.report.push(Finding::fail("nerve-construction", vec![e.to_string()])),
        Ok(n) => run.report.extend(check_theorem_axioms(&n)),
    }
    Ok(())
}

fn cmd_closure(
    theory: Theory,
    p: &Path,
    q: &Option<PathBuf>,
    r: &Option<PathBuf>,
    bound: u64,
    run: &mut RunReport,
) -> Result<()> {
    run.bound = Some(bound);
    run.input(p)?;
    let pm = expect_monad(p)?;
    let qm = match q {
        Some(q) => {
            run.input(q)?;
            expect_monad(q)?
        }
        None => pm.clone(),
    };
    let rm = match r {
        Some(r) => {
            run.input(r)?;
            expect_monad(r)?
        }
        None => qm.clone(),
    };
    match nerve_double_category(theory, &pm) {
        Err(e) => run.report.push(Finding::fail("vertical-closure", vec![e.to_string()])),
        Ok(n) => run.report.extend(check_vertical_closure(&n)),
    }
    run.report
        .extend(check_whisker_closure(theory, &pm, &qm, &mut Budget::new(bound)));
    run.report
        .extend(check_horizontal_closure(theory, &pm, &qm, &rm, &mut Budget::new(bound)));
    Ok(())
}

fn cmd_faithful(theory: Theory, p: &Path, q: &Path, bound: u64, run: &mut RunReport) -> Result<()> {
    run.bound = Some(bound);
    run.input(p)?;
    run.input(q)?;
    let pm = expect_monad(p)?;
    let qm = expect_monad(q)?;
    run.report
        .extend(check_faithfulness(theory, &pm, &qm, &mut Budget::new(bound)));
    run.report.extend(check_fullness_bounded(theory, &pm, &qm, bound));
    Ok(())
}

fn cmd_triple(
    theory1: Theory,
    theory2: Theory,
    file: &Path,
    out: &Option<PathBuf>,
    run: &mut RunReport,
) -> Result<()> {
    run.input(file)?;
    let d = expect_law(file)?;
    match lifted_double_monad(theory1, &d) {
        Err(e) => {
            run.report.push(Finding::fail("lifted-double-monad", vec![e.to_string()]));
            return Ok(());
        }
        Ok(l) => {
            let vr = validate_lifted_double_monad(&l);
            run.report.push(Finding::from_violations(
                "lifted-double-monad",
                vr.messages().iter().map(|s| s.to_string()).collect(),
            ));
        }
    }
    match triple_from_distributive_law(theory1, theory2, &d) {
        Err(e) => run.report.push(Finding::fail("triple-category", vec![e.to_string()])),
        Ok(t) => {
            let vr = validate_triple_category(&t);
            run.report.push(Finding::from_violations(
                "triple-category",
                vr.messages().iter().map(|s| s.to_string()).collect(),
            ));
            write_out(out, &DocumentFile::TripleCategory(triple_category_to_file(&t)))?;
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(RunReport, Format)> {
    if let Some(w) = workers() {
        if w.parse::<usize>().map(|n| n == 0).unwrap_or(true) {
            bail!("NERVECHECK_WORKERS must be a positive integer, got `{w}`");
        }
    }
    let mut run = RunReport::new();
    match &cli.cmd {
        Cmd::Validate { file } => cmd_validate(file, &mut run)?,
        Cmd::Kleisli { file, out } => cmd_kleisli(file, out, &mut run)?,
        Cmd::Nerve { theory, transpose, file, out } => {
            cmd_nerve(*theory, *transpose, file, out, &mut run)?
        }
        Cmd::Axioms { theory, file } => cmd_axioms(*theory, file, &mut run)?,
        Cmd::Closure { theory, p, q, r, bound } => {
            cmd_closure(*theory, p, q, r, *bound, &mut run)?
        }
        Cmd::Faithful { theory, p, q, bound } => cmd_faithful(*theory, p, q, *bound, &mut run)?,
        Cmd::Triple { theory1, theory2, file, out } => {
            cmd_triple(*theory1, *theory2, file, out, &mut run)?
        }
    }
    run.report.sort_by_check();
    Ok((run, cli.format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Ok((run, format)) => {
            emit(format, &run);
            if run.structural {
                return ExitCode::from(2);
            }
            match run.report.overall_required() {
                Status::Pass => ExitCode::SUCCESS,
                Status::Fail => ExitCode::from(1),
                Status::Inconclusive => ExitCode::from(3),
            }
        }
    }
}
