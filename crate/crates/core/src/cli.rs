//! The `fock` command line.
//!
//! Exit codes: 0 success, 1 failed verification or I/O trouble, 2 domain or
//! parse errors, 3 precision budget exhausted, 64 usage errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::{Error, Result};
use crate::export::{self, Format};
use crate::farey::{reduce_to_fundamental, ContinuedFraction, Fraction, Side};
use crate::fock::{
    beta, corner_gap, geodesic_length, hole_length, irrational_slope_bracket, one_sided_slopes, psi, stable_norm,
    unit_ball, HomologyClass, Precision, SlopeSequence,
};
use crate::markov::{
    enumerate_tree, markov_number, parse_rational, parse_rational_triple, tree_json_line, FrickeSeed, Surface, Trace,
};
use crate::verify::{self, Suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "fock", version, about = "Markov numbers, Fock's function and the stable norm of hyperbolic tori")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub run: RunConfig,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// a-family surface parameter (a >= 1); omit for the punctured torus.
    #[arg(long, global = true, conflicts_with = "seed_triple")]
    pub a: Option<u32>,
    /// Expected Fricke constant c of the seed triple.
    #[arg(long = "fricke-c", global = true, requires = "seed_triple", allow_hyphen_values = true)]
    pub fricke_c: Option<String>,
    /// Seed traces trA,trB,trAB of a real one-holed torus.
    #[arg(long = "seed-triple", global = true)]
    pub seed_triple: Option<String>,
    /// Absolute error target of real outputs.
    #[arg(long, global = true, default_value_t = Precision::DEFAULT_TARGET)]
    pub precision: f64,
    /// Largest trace (in decimal digits) that may be computed.
    #[arg(long = "digit-budget", global = true, default_value_t = Precision::DEFAULT_DIGIT_BUDGET)]
    pub digit_budget: u64,
    /// text, csv or json; each subcommand has its own default.
    #[arg(long, global = true)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for parallel batches (output order never depends on it).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn surface(&self) -> Result<Surface> {
        match (&self.a, &self.seed_triple) {
            (Some(a), _) => Surface::a_family(*a),
            (None, Some(t)) => {
                let [x, y, z] = parse_rational_triple(t)?;
                let seed = match &self.fricke_c {
                    Some(c) => FrickeSeed::with_c(x, y, z, &parse_rational(c)?)?,
                    None => FrickeSeed::new(x, y, z)?,
                };
                Ok(Surface::fricke(seed))
            }
            (None, None) => Ok(Surface::Classical),
        }
    }

    pub fn prec(&self) -> Result<Precision> {
        Ok(Precision::new(self.precision)?.with_digit_budget(self.digit_budget))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Markov number (or trace) attached to a fraction.
    Markov {
        #[arg(long)]
        frac: Fraction,
    },
    /// Markov tree down to a depth, one node per line.
    Tree {
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Fock's function psi at a fraction.
    Fock {
        #[arg(long)]
        frac: Fraction,
    },
    /// Length of the simple closed geodesic of slope `frac`, or of the boundary.
    Length {
        #[arg(long, required_unless_present = "hole")]
        frac: Option<Fraction>,
        #[arg(long, conflicts_with = "frac")]
        hole: bool,
    },
    /// Stable norm of an integral class.
    Norm {
        #[arg(long, allow_hyphen_values = true)]
        class: HomologyClass,
    },
    /// Mather's beta function of an integral class.
    Beta {
        #[arg(long, allow_hyphen_values = true)]
        class: HomologyClass,
    },
    /// Boundary points of the unit ball of the stable norm.
    Ball {
        #[arg(long = "max-q", default_value_t = 8)]
        max_q: i64,
    },
    /// One-sided difference quotients of psi at a fraction.
    Derivative {
        #[arg(long)]
        frac: Fraction,
        /// left, right or both.
        #[arg(long, default_value = "both")]
        side: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Certified bounds on the corner of psi at a fraction.
    Corner {
        #[arg(long)]
        frac: Fraction,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Slope brackets at an irrational given by its continued fraction.
    Irrational {
        #[arg(long)]
        cf: ContinuedFraction,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
    /// Property suites (markov, conservation, traces, fricke, convexity,
    /// corner, irrational, norm, beta, hole, all).
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

/// Maps a library error onto the process exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Parse(_) => EXIT_DOMAIN,
        Error::Precision(_) => EXIT_PRECISION,
        Error::Invariant(_) | Error::Io(_) => EXIT_FAILURE,
    }
}

/// Output of one run: bytes for stdout/file and whether checks passed.
pub struct Outcome {
    pub bytes: Vec<u8>,
    pub ok: bool,
}

/// Parses `args` (including the program name) and runs the command; returns
/// the exit code after writing output and diagnostics.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // values rejected by our parsers are domain errors, not usage errors
            let code = match e.kind() {
                _ if !e.use_stderr() => EXIT_OK,
                clap::error::ErrorKind::ValueValidation => EXIT_DOMAIN,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fock: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let outcome = match cli.run.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Domain(format!("--threads: {e}")))?;
            pool.install(|| run(cli))?
        }
        None => run(cli)?,
    };
    match &cli.run.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            w.write_all(&outcome.bytes)?;
            w.flush()?;
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(&outcome.bytes)?;
            out.flush()?;
        }
    }
    Ok(if outcome.ok { EXIT_OK } else { EXIT_FAILURE })
}

/// Runs a parsed command and returns its output without touching stdout.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let s = cli.run.surface()?;
    let prec = cli.run.prec()?;
    let fmt = |default| cli.run.format.unwrap_or(default);
    let mut buf = Vec::new();
    let mut ok = true;
    match &cli.command {
        Command::Markov { frac } => {
            let v = markov_value(*frac, &s)?;
            match fmt(Format::Text) {
                Format::Json => export::write_json(
                    &json!({"fraction": frac.to_string(), "surface": s.to_string(), "value": v.to_string()}),
                    &mut buf,
                )?,
                Format::Csv => writeln!(buf, "fraction,value\n{frac},{v}")?,
                Format::Text => writeln!(buf, "{v}")?,
            }
        }
        Command::Tree { depth } => {
            let nodes = enumerate_tree(&s, *depth)?;
            match fmt(Format::Json) {
                Format::Json => {
                    for n in &nodes {
                        writeln!(buf, "{}", tree_json_line(n))?;
                    }
                }
                Format::Csv => {
                    writeln!(buf, "fraction,x,y,z")?;
                    for n in &nodes {
                        let [x, y, z] = n.triple.entries();
                        writeln!(buf, "{},{x},{y},{z}", n.fraction)?;
                    }
                }
                Format::Text => {
                    for n in &nodes {
                        writeln!(buf, "{} {}", n.fraction, n.triple)?;
                    }
                }
            }
        }
        Command::Fock { frac } => {
            let v = psi(*frac, &s, prec)?;
            match fmt(Format::Text) {
                Format::Json => export::write_json(&export::psi_json(&v), &mut buf)?,
                Format::Csv => writeln!(buf, "fraction,trace,psi\n{},{},{}", v.x, v.trace, v.psi)?,
                Format::Text => writeln!(buf, "{}", v.psi)?,
            }
        }
        Command::Length { frac, hole } => {
            let (label, v) = match frac {
                Some(x) if !*hole => (x.to_string(), geodesic_length(*x, &s, prec)?),
                _ => ("hole".to_string(), hole_length(&s, prec)?),
            };
            scalar(&mut buf, fmt(Format::Text), &s, &label, "length", &v.to_string())?;
        }
        Command::Norm { class } => {
            let v = stable_norm(*class, &s, prec)?;
            scalar(&mut buf, fmt(Format::Text), &s, &class.to_string(), "norm", &v.to_string())?;
        }
        Command::Beta { class } => {
            let v = beta(*class, &s, prec)?;
            scalar(&mut buf, fmt(Format::Text), &s, &class.to_string(), "beta", &v.to_string())?;
        }
        Command::Ball { max_q } => {
            let pts = unit_ball(&s, *max_q, prec)?;
            match fmt(Format::Csv) {
                Format::Json => export::write_json(&export::ball_json(&pts, &s, *max_q), &mut buf)?,
                Format::Csv => export::ball_csv(&pts, &mut buf)?,
                Format::Text => {
                    for p in &pts {
                        writeln!(buf, "{} {} {}", p.class, p.x, p.y)?;
                    }
                }
            }
        }
        Command::Derivative { frac, side, depth } => {
            let sides: Vec<Side> = match side.as_str() {
                "both" => vec![Side::Left, Side::Right],
                one => vec![one.parse()?],
            };
            let seqs = sides
                .iter()
                .map(|&d| Ok((d, one_sided_slopes(*frac, d, *depth, &s, prec)?)))
                .collect::<Result<Vec<_>>>()?;
            match fmt(Format::Csv) {
                Format::Json => {
                    let v: serde_json::Map<_, _> =
                        seqs.iter().map(|(d, q)| (d.to_string(), export::slopes_json(q, &s))).collect();
                    export::write_json(&v.into(), &mut buf)?
                }
                Format::Csv => sided_csv(&seqs, &mut buf)?,
                Format::Text => {
                    for (d, q) in &seqs {
                        for p in &q.points {
                            writeln!(buf, "{d} {} {} {}", p.depth, p.approach, p.slope)?;
                        }
                    }
                }
            }
        }
        Command::Corner { frac, depth } => {
            let g = corner_gap(*frac, *depth, &s, prec)?;
            match fmt(Format::Json) {
                Format::Text => {
                    let lower =
                        g.lower.as_ref().map_or("none".into(), |l| l.bound_string(crate::hpreal::Round::Down, 20));
                    writeln!(
                        buf,
                        "gap in [{lower}, {}], certified_positive={}",
                        g.upper.bound_string(crate::hpreal::Round::Up, 20),
                        g.certified_positive
                    )?
                }
                _ => export::write_json(&export::corner_json(&g, &s), &mut buf)?,
            }
        }
        Command::Irrational { cf, depth } => {
            let seq = irrational_slope_bracket(cf, *depth, &s, prec)?;
            match fmt(Format::Csv) {
                Format::Json => export::write_json(&export::slopes_json(&seq, &s), &mut buf)?,
                Format::Csv => export::slopes_csv(&seq, &mut buf)?,
                Format::Text => {
                    for b in &seq.brackets {
                        writeln!(
                            buf,
                            "{} [{}, {}] width {}",
                            b.depth,
                            b.lower.bound_string(crate::hpreal::Round::Down, 20),
                            b.upper.bound_string(crate::hpreal::Round::Up, 20),
                            b.width()
                        )?;
                    }
                }
            }
        }
        Command::Verify { suite, count, seed } => {
            let suites = Suite::parse_list(suite)?;
            let cfg = VerifyConfig { seed: *seed, count: *count, prec };
            let (text, passed) = verify::report(&suites, &cfg);
            buf.extend_from_slice(text.as_bytes());
            ok = passed;
        }
    }
    Ok(Outcome { bytes: buf, ok })
}

// Classical values outside [0, 1/2] are reduced by the torus symmetries.
fn markov_value(x: Fraction, s: &Surface) -> Result<Trace> {
    if s.is_classical() && !x.in_fundamental_domain() {
        if x.is_infinite() || x.q() <= 0 {
            return Err(Error::Domain(format!("markov needs a finite fraction, got {x}")));
        }
        return markov_number(reduce_to_fundamental(x).0, s);
    }
    markov_number(x, s).or_else(|_| crate::markov::trace_value(x, s))
}

fn scalar(buf: &mut Vec<u8>, f: Format, s: &Surface, key: &str, name: &str, value: &str) -> Result<()> {
    match f {
        Format::Json => export::write_json(&json!({"input": key, "surface": s.to_string(), name: value}), buf),
        Format::Csv => Ok(writeln!(buf, "input,{name}\n\"{key}\",{value}")?),
        Format::Text => Ok(writeln!(buf, "{value}")?),
    }
}

// CSV of several one-sided sequences with a leading `side` column.
fn sided_csv(seqs: &[(Side, SlopeSequence)], buf: &mut Vec<u8>) -> Result<()> {
    for (i, (d, q)) in seqs.iter().enumerate() {
        let mut part = Vec::new();
        export::slopes_csv(q, &mut part)?;
        let text = String::from_utf8(part).map_err(|e| Error::Invariant(e.to_string()))?;
        for (k, line) in text.lines().enumerate() {
            match (k, i) {
                (0, 0) => writeln!(buf, "side,{line}")?,
                (0, _) => {}
                _ => writeln!(buf, "{d},{line}")?,
            }
        }
    }
    Ok(())
}
