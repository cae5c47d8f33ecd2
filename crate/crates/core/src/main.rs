use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use algebroidkit::algebroid::{RandomJacobi, Suite};
use algebroidkit::corpus;
use algebroidkit::files::{self, Document};
use algebroidkit::runner::{execute, Command, Options, Outcome};

// stdout writes that tolerate a closed pipe
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

const SEED_ENV: &str = "ALGEBROIDKIT_SEED";
const DEFAULT_SEED: u64 = 42;

/// Exact verification of Lie algebroids over polynomial charts.
#[derive(Parser)]
#[command(name = "algebroidkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the algebroid axioms.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[command(flatten)]
        random: RandomArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check a morphism (anchor and bracket compatibility).
    CheckMorphism {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check a derivation against its algebroid.
    CheckDerivation {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check an infinitesimal action.
    CheckAction {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build an algebroid and report its checks.
    Build {
        #[arg(value_enum)]
        what: BuildKind,
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Build a semi-direct product even when the action check fails.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[command(flatten)]
        random: RandomArgs,
        #[arg(long)]
        json: bool,
    },
    /// Curvature of a split extension and its flatness.
    Curvature {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Rebuild a split extension with zero curvature as a semi-direct product.
    Reconstruct {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The bundled fixture corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusCmd,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Run every fixture and compare with the expected verdicts.
    Run {
        #[command(flatten)]
        random: RandomArgs,
        #[arg(long)]
        json: bool,
    },
    /// List fixtures with their command and expected verdict.
    List,
    /// Write the fixtures into a directory.
    Export { dir: PathBuf },
}

#[derive(Args, Clone, Copy)]
struct RandomArgs {
    /// Random section triples for jacobi_random.
    #[arg(long = "random", value_name = "N", default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Seed; defaults to $ALGEBROIDKIT_SEED, then 42.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 2)]
    max_degree: u32,
}

#[derive(ValueEnum, Clone, Copy)]
enum SuiteArg {
    Axioms,
    Jacobi,
    All,
}

#[derive(ValueEnum, Clone, Copy)]
enum BuildKind {
    Transformation,
    Semidirect,
    Poisson,
}

/// Usage, parse and I/O failures.
struct Fatal(String);

impl RandomArgs {
    fn resolve(self) -> Result<RandomJacobi, Fatal> {
        let seed = match self.seed {
            Some(s) => s,
            None => match std::env::var(SEED_ENV) {
                Ok(v) => {
                    v.trim().parse().map_err(|_| Fatal(format!("{SEED_ENV}={v:?} is not a non-negative integer")))?
                }
                Err(_) => DEFAULT_SEED,
            },
        };
        Ok(RandomJacobi { trials: self.trials as usize, max_degree: self.max_degree, seed })
    }
}

fn suite(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Axioms => Suite::Axioms,
        SuiteArg::Jacobi => Suite::Jacobi,
        SuiteArg::All => Suite::All,
    }
}

fn subject(path: &Path) -> String {
    path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| path.display().to_string())
}

fn run_file(command: Command, path: &Path, opts: &Options) -> Result<Outcome, Fatal> {
    let doc = files::parse_file(path, command.input()).map_err(|e| Fatal(e.to_string()))?;
    execute(command, &doc, &subject(path), opts).map_err(|e| Fatal(e.to_string()))
}

fn emit(outcome: &Outcome, json: bool) {
    if json {
        outln!("{}", outcome.report.to_json());
    } else {
        out!("{}", outcome.report);
        for n in &outcome.notes {
            outln!("{n}");
        }
    }
}

fn verdict(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn write_output(outcome: &Outcome, out: &Path) -> Result<(), Fatal> {
    if let Some(alg) = &outcome.output {
        let text = files::to_pretty_string(&files::to_json(&Document::Algebroid(alg.clone())));
        std::fs::write(out, text).map_err(|e| Fatal(format!("cannot write {}: {e}", out.display())))?;
    }
    Ok(())
}

fn simple(command: Command, file: &Path, json: bool) -> Result<ExitCode, Fatal> {
    let outcome = run_file(command, file, &Options::default())?;
    emit(&outcome, json);
    Ok(verdict(outcome.report.passed()))
}

fn run(cli: Cli) -> Result<ExitCode, Fatal> {
    match cli.command {
        Cmd::Check { file, suite: s, random, json } => {
            let opts = Options { suite: suite(s), random: random.resolve()?, force: false };
            let outcome = run_file(Command::Check, &file, &opts)?;
            emit(&outcome, json);
            Ok(verdict(outcome.report.passed()))
        }
        Cmd::CheckMorphism { file, json } => simple(Command::CheckMorphism, &file, json),
        Cmd::CheckDerivation { file, json } => simple(Command::CheckDerivation, &file, json),
        Cmd::CheckAction { file, json } => simple(Command::CheckAction, &file, json),
        Cmd::Curvature { file, json } => simple(Command::Curvature, &file, json),
        Cmd::Build { what, file, output, force, suite: s, random, json } => {
            let command = match what {
                BuildKind::Transformation => Command::BuildTransformation,
                BuildKind::Semidirect => Command::BuildSemidirect,
                BuildKind::Poisson => Command::BuildPoisson,
            };
            let opts = Options { suite: suite(s), random: random.resolve()?, force };
            let outcome = run_file(command, &file, &opts)?;
            write_output(&outcome, &output)?;
            emit(&outcome, json);
            Ok(verdict(outcome.report.passed()))
        }
        Cmd::Reconstruct { file, output, json } => {
            let outcome = run_file(Command::Reconstruct, &file, &Options::default())?;
            write_output(&outcome, &output)?;
            emit(&outcome, json);
            Ok(verdict(outcome.report.passed()))
        }
        Cmd::Corpus { action } => corpus_cmd(action),
    }
}

fn corpus_cmd(action: CorpusCmd) -> Result<ExitCode, Fatal> {
    match action {
        CorpusCmd::Run { random, json } => {
            let opts = Options { random: random.resolve()?, ..Options::default() };
            let results = corpus::run(&opts).map_err(|e| Fatal(e.to_string()))?;
            let all = results.iter().all(corpus::EntryResult::matched);
            if json {
                outln!("{}", files::to_pretty_string(&corpus::results_json(&results)).trim_end());
            } else {
                for r in &results {
                    out!("{}", r.report);
                    let status = if r.matched() { "ok" } else { "MISMATCH" };
                    outln!("expected: {}  {status}\n", r.entry.expect);
                }
                let matched = results.iter().filter(|r| r.matched()).count();
                outln!("corpus: {matched}/{} verdicts match the manifest", results.len());
            }
            Ok(verdict(all))
        }
        CorpusCmd::List => {
            for e in corpus::manifest() {
                outln!("{:<36} {:<22} {}", e.fixture, e.command, e.expect);
            }
            Ok(ExitCode::SUCCESS)
        }
        CorpusCmd::Export { dir } => {
            std::fs::create_dir_all(&dir).map_err(|e| Fatal(format!("cannot create {}: {e}", dir.display())))?;
            for (name, text) in corpus::FIXTURES {
                let p = dir.join(name);
                std::fs::write(&p, text).map_err(|e| Fatal(format!("cannot write {}: {e}", p.display())))?;
            }
            let p = dir.join("manifest.json");
            std::fs::write(&p, corpus::MANIFEST).map_err(|e| Fatal(format!("cannot write {}: {e}", p.display())))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Fatal(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
