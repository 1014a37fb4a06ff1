use std::ops::RangeInclusive;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use slopekit::bracket::{jones, kauffman_bracket, BracketError, StateSumConfig};
use slopekit::diagram::{parse_pd, LinkDiagram};
use slopekit::fixtures::{FixtureError, FixtureSet};
use slopekit::fox::{alexander_knot, alexander_link2, FoxError};
use slopekit::surgery::{first_homology, format_homology, FramedLink, SurgeryError};
use slopekit::twistfam::{distinctness_report, TwistError};
use slopekit::verify::{run_checks, Status};

/// Knot polynomials, twist families and surgery homology.
#[derive(Debug, Parser)]
#[command(name = "slopekit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Prints a polynomial invariant of a PD diagram.
    Invariant {
        kind: Invariant,
        /// A file holding a PD code, or `fixtures:NAME`.
        source: String,
    },
    /// Alexander polynomials of a twist family, one line per twist count.
    Family {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        /// Inclusive range `a..b`.
        #[arg(long, allow_hyphen_values = true)]
        range: String,
    },
    /// First homology of the manifold given by a framed link.
    Homology {
        /// A framed-link file, or `fixtures:NAME`.
        source: String,
    },
    /// Runs the golden-value checks.
    VerifyPaper {
        /// Only checks with this tag or id.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Invariant {
    Alex,
    Malex,
    Jones,
    Bracket,
}

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

struct Failure {
    code: u8,
    msg: String,
}

fn input(e: impl ToString) -> Failure {
    Failure { code: EXIT_INPUT, msg: e.to_string() }
}

fn precondition(e: impl ToString) -> Failure {
    Failure { code: EXIT_PRECONDITION, msg: e.to_string() }
}

impl From<FixtureError> for Failure {
    fn from(e: FixtureError) -> Self {
        input(e)
    }
}

impl From<FoxError> for Failure {
    fn from(e: FoxError) -> Self {
        precondition(e)
    }
}

impl From<BracketError> for Failure {
    fn from(e: BracketError) -> Self {
        precondition(e)
    }
}

impl From<TwistError> for Failure {
    fn from(e: TwistError) -> Self {
        precondition(e)
    }
}

impl From<SurgeryError> for Failure {
    fn from(e: SurgeryError) -> Self {
        match e {
            SurgeryError::Parse(_) => input(e),
            _ => precondition(e),
        }
    }
}

/// Text behind a source argument: a fixture name or a file.
enum Source<'a> {
    Fixture(&'a str),
    File(String),
}

fn source(arg: &str) -> Result<Source<'_>, Failure> {
    match arg.strip_prefix("fixtures:") {
        Some(name) => Ok(Source::Fixture(name)),
        None => std::fs::read_to_string(Path::new(arg))
            .map(Source::File)
            .map_err(|e| input(format!("cannot read {arg}: {e}"))),
    }
}

fn load_diagram(arg: &str) -> Result<LinkDiagram, Failure> {
    match source(arg)? {
        Source::Fixture(name) => Ok(FixtureSet::load()?.diagram(name)?),
        Source::File(text) => parse_pd(&text).map_err(input),
    }
}

fn load_framed(arg: &str) -> Result<FramedLink, Failure> {
    match source(arg)? {
        Source::Fixture(name) => Ok(FixtureSet::load()?.framed(name)?),
        Source::File(text) => Ok(FramedLink::parse(&text)?),
    }
}

fn parse_range(text: &str) -> Result<RangeInclusive<i64>, Failure> {
    let bad = || input(format!("range `{text}` is not of the form a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    Ok(a.trim().parse().map_err(|_| bad())?..=b.trim().parse().map_err(|_| bad())?)
}

fn invariant(kind: Invariant, arg: &str) -> Result<String, Failure> {
    let d = load_diagram(arg)?;
    let cfg = StateSumConfig::default();
    Ok(match kind {
        Invariant::Alex => alexander_knot(&d)?.to_string(),
        Invariant::Malex => alexander_link2(&d)?.to_string(),
        Invariant::Jones => jones(&d, &cfg)?.to_string(),
        Invariant::Bracket => kauffman_bracket(&d, &cfg)?.to_string(),
    })
}

fn family(which: u8, range: &str) -> Result<String, Failure> {
    let range = parse_range(range)?;
    let fam = FixtureSet::load()?.family(&format!("family{which}"))?;
    let report = distinctness_report(&fam, range)?;
    Ok(report.members.iter().map(|(n, p, class)| format!("{n}\t{p}\tclass {class}\n")).collect())
}

fn homology(arg: &str) -> Result<String, Failure> {
    let fl = load_framed(arg)?;
    Ok(format!("{}\n", format_homology(&first_homology(&fl)?)))
}

fn verify(only: Option<&str>) -> Result<(String, bool), Failure> {
    let fixtures = FixtureSet::load()?;
    let results = run_checks(&fixtures, only);
    if results.is_empty() {
        return Err(input(format!("no check matches `{}`", only.unwrap_or(""))));
    }
    let mut out: String = results.iter().map(|r| format!("{r}\n")).collect();
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    let failed = count(Status::Fail);
    out.push_str(&format!(
        "summary: {} passed, {failed} failed, {} excluded\n",
        count(Status::Pass),
        count(Status::Excluded)
    ));
    Ok((out, failed == 0))
}

fn dispatch(cli: Cli) -> Result<(String, bool), Failure> {
    match cli.command {
        Command::Invariant { kind, source } => invariant(kind, &source).map(|s| (format!("{s}\n"), true)),
        Command::Family { which, range } => family(which, &range).map(|s| (s, true)),
        Command::Homology { source } => homology(&source).map(|s| (s, true)),
        Command::VerifyPaper { only } => verify(only.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
