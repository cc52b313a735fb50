//! Property suites behind `fock verify`.
//!
//! Every suite is deterministic for a given [`VerifyConfig`]: random inputs
//! come from a seeded ChaCha stream and reports contain no timings, so two
//! runs with the same seed print byte-identical text.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cohn::{commutator_trace, fricke_check, random_pairs, trace_of};
use crate::error::{Error, Result};
use crate::farey::{ContinuedFraction, Fraction, SbPath, Step};
use crate::fock::{
    agree_within, beta, convexity_sweep, corner_gap, hole_length, hole_length_from_c, irrational_slope_bracket,
    stable_norm, unit_norms, HomologyClass, Precision,
};
use crate::hpreal::{arcosh_of_ratio_bits, Cmp, HpReal};
use crate::markov::{
    child_node, enumerate_tree, markov_number, node_from_path, parse_rational_triple, walk_tree, FrickeSeed,
    MarkovTriple, Slot, Surface, Trace,
};

/// The first thirteen Markov numbers.
pub const MARKOV_PREFIX: [u64; 13] = [1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985];

/// Threshold for the certified corner at `1/2` (the gap is about `0.23557`).
pub const HALF_CORNER_THRESHOLD: f64 = 0.23;

/// Required shrink of the golden-mean bracket from depth 4 to depth 12.
pub const BRACKET_SHRINK_FACTOR: f64 = 10.0;

/// Tolerance for equalities that hold exactly in theory.
pub const EQUALITY_TOL: f64 = 1e-25;

/// Seed triple of the sampled real Fricke surface, `c = -19/4`.
pub const FRICKE_SAMPLE_SEED: &str = "3,4,8.5";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Markov,
    Conservation,
    Traces,
    Fricke,
    Convexity,
    Corner,
    Irrational,
    Norm,
    Beta,
    Hole,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Markov,
        Suite::Conservation,
        Suite::Traces,
        Suite::Fricke,
        Suite::Convexity,
        Suite::Corner,
        Suite::Irrational,
        Suite::Norm,
        Suite::Beta,
        Suite::Hole,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Markov => "markov",
            Suite::Conservation => "conservation",
            Suite::Traces => "traces",
            Suite::Fricke => "fricke",
            Suite::Convexity => "convexity",
            Suite::Corner => "corner",
            Suite::Irrational => "irrational",
            Suite::Norm => "norm",
            Suite::Beta => "beta",
            Suite::Hole => "hole",
        }
    }

    /// Parses a suite name; `"all"` yields every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Suite::ALL
            .iter()
            .find(|x| x.name() == s)
            .map(|x| vec![*x])
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Sample size for randomized checks; each suite has its own default.
    pub count: Option<usize>,
    pub prec: Precision,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 7, count: None, prec: Precision::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub passed: bool,
    pub summary: String,
    pub details: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, failures: Vec<String>, ok_summary: String, mut details: Vec<String>) -> Self {
        let passed = failures.is_empty();
        let summary = if passed { format!("OK ({ok_summary})") } else { format!("FAIL ({})", failures[0]) };
        if failures.len() > 1 {
            details.extend(failures[1..].iter().map(|f| format!("also failed: {f}")));
        }
        SuiteReport { suite: suite.name(), passed, summary, details }
    }

    fn error(suite: Suite, e: Error) -> Self {
        SuiteReport { suite: suite.name(), passed: false, summary: format!("FAIL ({e})"), details: Vec::new() }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.summary)?;
        for d in &self.details {
            write!(f, "\n  {d}")?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let r = match suite {
        Suite::Markov => markov_suite(cfg),
        Suite::Conservation => conservation_suite(cfg),
        Suite::Traces => traces_suite(),
        Suite::Fricke => fricke_suite(cfg),
        Suite::Convexity => convexity_suite(cfg),
        Suite::Corner => corner_suite(cfg),
        Suite::Irrational => irrational_suite(cfg),
        Suite::Norm => norm_suite(cfg),
        Suite::Beta => beta_suite(cfg),
        Suite::Hole => hole_suite(cfg),
    };
    r.unwrap_or_else(|e| SuiteReport::error(suite, e))
}

/// Text report: a single suite prints its summary; several are prefixed by name
/// and followed by a total line.
pub fn report(suites: &[Suite], cfg: &VerifyConfig) -> (String, bool) {
    let reports: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s, cfg)).collect();
    let ok = reports.iter().all(|r| r.passed);
    let mut out = String::new();
    if let [r] = reports.as_slice() {
        out.push_str(&format!("{r}\n"));
    } else {
        for r in &reports {
            out.push_str(&format!("{}: {r}\n", r.suite));
        }
        let failed = reports.iter().filter(|r| !r.passed).count();
        if failed == 0 {
            out.push_str(&format!("all: OK ({} suites, seed {})\n", reports.len(), cfg.seed));
        } else {
            out.push_str(&format!("all: FAIL ({failed} of {} suites failed, seed {})\n", reports.len(), cfg.seed));
        }
    }
    (out, ok)
}

/// Reduced fractions in `[0, 1/2]` with denominator `<= max_q`.
pub fn fundamental_fractions(max_q: i64) -> Vec<Fraction> {
    let mut out = Vec::new();
    for q in 1..=max_q {
        for p in 0..=q / 2 {
            if num_integer::Integer::gcd(&p, &q) == 1 {
                out.push(Fraction::new(p, q).expect("q >= 1"));
            }
        }
    }
    out
}

fn random_path(rng: &mut ChaCha8Rng, max_len: usize) -> SbPath {
    let len = rng.gen_range(0..=max_len);
    SbPath((0..len).map(|_| if rng.gen_bool(0.5) { Step::L } else { Step::R }).collect())
}

fn int(t: &Trace) -> BigInt {
    t.as_int().cloned().unwrap_or_default()
}

fn markov_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut failures = Vec::new();
    let values: BTreeSet<BigInt> = fundamental_fractions(10)
        .into_iter()
        .map(|x| markov_number(x, &Surface::Classical).map(|t| int(&t)))
        .collect::<Result<_>>()?;
    let first: Vec<BigInt> = values.iter().take(13).cloned().collect();
    let want: Vec<BigInt> = MARKOV_PREFIX.iter().map(|&v| BigInt::from(v)).collect();
    if first != want {
        failures.push(format!("first Markov numbers are {first:?}"));
    }

    let count = cfg.count.unwrap_or(1000);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..count {
        let surface = match rng.gen_range(0..=5u32) {
            0 => Surface::Classical,
            a => Surface::AFamily(a),
        };
        let node = node_from_path(&random_path(&mut rng, 20), &surface);
        let slot = [Slot::X, Slot::Y, Slot::Z][rng.gen_range(0..3)];
        if node.vieta_step(slot).vieta_step(slot) != node {
            failures.push(format!("Vieta step is not an involution at {node}"));
            break;
        }
    }

    let classical = enumerate_tree(&Surface::Classical, 10)?;
    let a1 = enumerate_tree(&Surface::AFamily(1), 10)?;
    let scaled = classical
        .iter()
        .zip(&a1)
        .all(|(c, a)| c.triple.traces() == [a.triple.x.clone(), a.triple.y.clone(), a.triple.z.clone()]);
    if !scaled {
        failures.push("a=1 tree differs from 3x the classical tree".into());
    }
    let details = vec![format!("first 13 values: {}", MARKOV_PREFIX.map(|v| v.to_string()).join(", "))];
    Ok(SuiteReport::new(
        Suite::Markov,
        failures,
        format!("13 values for q <= 10, {count} involutions, a=1 tree = 3x classical to depth 10"),
        details,
    ))
}

fn conservation_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let count = cfg.count.unwrap_or(1000);
    let surfaces: Vec<Surface> = std::iter::once(Surface::Classical).chain((1..=5).map(Surface::AFamily)).collect();
    let results: Vec<(usize, Vec<String>)> = surfaces
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let mut visited = 0usize;
            let mut bad = Vec::new();
            let mut check = |x: Option<Fraction>, t: &MarkovTriple| {
                visited += 1;
                if bad.is_empty() && (!t.residual().is_zero() || !t.is_positive()) {
                    bad.push(format!(
                        "{s}: residual {} at {}",
                        t.residual(),
                        x.map_or("path".into(), |x| x.to_string())
                    ));
                }
            };
            walk_tree(s, 14, |x, t| check(Some(x), t));
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (i as u64 + 1));
            for _ in 0..count {
                let path = random_path(&mut rng, 20);
                let mut node = node_from_path(&SbPath(Vec::new()), s);
                check(None, &node);
                for &step in path.steps() {
                    node = child_node(&node, step);
                    check(None, &node);
                }
            }
            (visited, bad)
        })
        .collect();
    let nodes: usize = results.iter().map(|r| r.0).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    Ok(SuiteReport::new(
        Suite::Conservation,
        failures,
        format!("{nodes} nodes, residuals 0"),
        vec![format!("classical and a=1..5: full tree to depth 14, {count} random paths to depth 20 each")],
    ))
}

fn traces_suite() -> Result<SuiteReport> {
    let mut failures = Vec::new();
    let classical = fundamental_fractions(40);
    for &x in &classical {
        let m = int(&markov_number(x, &Surface::Classical)?);
        if trace_of(x, &Surface::Classical)? != m * 3 {
            failures.push(format!("tr W({x}) != 3 m({x})"));
        }
    }
    let small = fundamental_fractions(25);
    for a in 1..=4 {
        let s = Surface::AFamily(a);
        for &x in &small {
            if trace_of(x, &s)? != int(&markov_number(x, &s)?) {
                failures.push(format!("tr W_a({x}) != X_a({x}) at a={a}"));
            }
        }
    }
    Ok(SuiteReport::new(
        Suite::Traces,
        failures,
        format!(
            "{} classical fractions q <= 40, {} a-family checks for a <= 4, q <= 25",
            classical.len(),
            4 * small.len()
        ),
        Vec::new(),
    ))
}

fn fricke_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let count = cfg.count.unwrap_or(10_000);
    let pairs = random_pairs(cfg.seed, count, 1000);
    let bad = pairs
        .par_iter()
        .map(|(a, b)| fricke_check(a, b))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(r1, r2)| r1 != &BigInt::default() || r2 != &BigInt::default())
        .count();
    let mut failures = Vec::new();
    if bad > 0 {
        failures.push(format!("{bad} of {count} pairs have nonzero residuals"));
    }
    let mut comm = vec![format!("classical: {}", commutator_trace(&Surface::Classical)?)];
    if commutator_trace(&Surface::Classical)? != BigInt::from(-2) {
        failures.push("classical commutator trace is not -2".into());
    }
    for a in 1..=6u32 {
        let t = commutator_trace(&Surface::AFamily(a))?;
        let want = BigInt::from(2) - BigInt::from(4) * num_traits::pow(BigInt::from(a), 6);
        if t != want {
            failures.push(format!("commutator trace {t} != 2-4a^6 at a={a}"));
        }
        comm.push(format!("a={a}: {t}"));
    }
    Ok(SuiteReport::new(
        Suite::Fricke,
        failures,
        format!("{count} pairs, residuals 0"),
        vec![format!("commutator traces: {}", comm.join(", "))],
    ))
}

fn convexity_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let seed = {
        let [x, y, z] = parse_rational_triple(FRICKE_SAMPLE_SEED)?;
        Surface::fricke(FrickeSeed::new(x, y, z)?)
    };
    let runs = [(Surface::Classical, 200), (Surface::AFamily(2), 200), (Surface::AFamily(3), 200), (seed, 60)];
    let mut details = Vec::new();
    let mut total = 0;
    for (s, max_q) in &runs {
        let r = convexity_sweep(s, *max_q, cfg.prec)?;
        total += r.triples;
        let (_, err) = r.min_margin.decimal_parts();
        details.push(format!(
            "{s}, q <= {max_q}: {} triples, smallest margin {} at {} (err {err})",
            r.triples,
            sci(&r.min_margin),
            r.at
        ));
    }
    Ok(SuiteReport::new(
        Suite::Convexity,
        Vec::new(),
        format!("{total} Farey triples, strict chord inequality certified"),
        details,
    ))
}

// Short scientific rendering of the midpoint; works below the f64 range.
fn sci(v: &HpReal) -> String {
    let f = v.to_f64();
    let mid = v.mid();
    if mid.is_zero() || f.is_normal() {
        return format!("{f:.3e}");
    }
    let shift = mid.mantissa().bits().saturating_sub(53);
    let top = (mid.mantissa() >> shift).to_f64().unwrap_or(f64::NAN);
    let log10 = top.abs().log10() + (mid.exponent() + shift as i64) as f64 * std::f64::consts::LOG10_2;
    let k = log10.floor();
    format!("{:.3}e{}", top.signum() * 10f64.powf(log10 - k), k as i64)
}

fn corner_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for x in ["1/2", "1/3", "2/5"] {
        let x: Fraction = x.parse()?;
        let g = corner_gap(x, 8, &Surface::Classical, cfg.prec)?;
        let lower = g.lower.as_ref().map_or("none".to_string(), |l| l.bound_string(crate::hpreal::Round::Down, 12));
        details.push(format!(
            "{x}: gap in [{lower}, {}], certified_positive={}",
            g.upper.bound_string(crate::hpreal::Round::Up, 12),
            g.certified_positive
        ));
        if !g.certified_positive {
            failures.push(format!("gap at {x} not certified positive"));
        }
        if x == Fraction::HALF && !g.lower.as_ref().is_some_and(|l| l.lo().to_f64() > HALF_CORNER_THRESHOLD) {
            failures.push(format!("gap lower bound at 1/2 is not above {HALF_CORNER_THRESHOLD}"));
        }
    }
    Ok(SuiteReport::new(Suite::Corner, failures, "positive corners at 1/2, 1/3, 2/5 (depth 8)".into(), details))
}

fn irrational_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for (cf, depth, from) in [("0;2,(1)", 12, 4), ("0;2,2,2,(2)", 8, 3)] {
        let cf: ContinuedFraction = cf.parse()?;
        let seq = irrational_slope_bracket(&cf, depth, &Surface::Classical, cfg.prec)?;
        let widths: Vec<(usize, HpReal)> =
            seq.brackets.iter().filter(|b| b.depth >= from).map(|b| (b.depth, b.width())).collect();
        let monotone = widths.windows(2).all(|w| w[1].1.compare(&w[0].1) == Cmp::Less);
        if !monotone {
            failures.push(format!("bracket widths at [{cf}] are not strictly decreasing"));
        }
        let (first, last) = (&widths[0].1, &widths[widths.len() - 1].1);
        // certified: last * factor < first
        let shrunk = last.mul_int(BRACKET_SHRINK_FACTOR as i64).compare(first) == Cmp::Less;
        if !shrunk {
            failures.push(format!("bracket at [{cf}] shrank by less than {BRACKET_SHRINK_FACTOR}"));
        }
        details.push(format!("[{cf}] depth {from}..{depth}: width {} -> {}", sci(first), sci(last)));
    }
    Ok(SuiteReport::new(
        Suite::Irrational,
        failures,
        format!("brackets shrink monotonically, factor >= {BRACKET_SHRINK_FACTOR}"),
        details,
    ))
}

/// All nonzero classes with `|h1|, |h2| <= r`.
pub fn class_box(r: i64) -> Vec<HomologyClass> {
    (-r..=r).flat_map(|a| (-r..=r).filter_map(move |b| HomologyClass::new(a, b).ok())).collect()
}

struct NormTable {
    units: HashMap<Fraction, HpReal>,
}

impl NormTable {
    fn new(classes: &[HomologyClass], s: &Surface, prec: Precision) -> Result<Self> {
        let dirs: Vec<Fraction> = classes.iter().map(|h| h.direction()).collect();
        Ok(NormTable { units: unit_norms(&dirs, s, prec)? })
    }

    fn norm(&self, h: &HomologyClass) -> HpReal {
        self.units[&h.direction()].mul_int(h.multiplicity())
    }
}

fn norm_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let s = Surface::Classical;
    let classes = class_box(12);
    let reach = class_box(24);
    let table = NormTable::new(&reach, &s, cfg.prec)?;
    let mut failures = Vec::new();

    // triangle inequality over unordered pairs
    let pairs: Vec<(usize, usize)> = (0..classes.len()).flat_map(|i| (i..classes.len()).map(move |j| (i, j))).collect();
    let outcome: Vec<(bool, bool)> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let (a, b) = (&classes[i], &classes[j]);
            let sum = a.checked_add(b)?;
            let margin = &(&table.norm(a) + &table.norm(b)) - &table.norm(&sum);
            let independent = a.det(b) != 0;
            Some((independent, margin.is_positive() || (!independent && margin.hi().signum() >= 0)))
        })
        .collect();
    let mut unresolved: Vec<(usize, usize)> = Vec::new();
    let checked = outcome.len();
    let strict = outcome.iter().filter(|o| o.0).count();
    let failed_pairs: Vec<(usize, usize)> = pairs
        .iter()
        .filter(|&&(i, j)| classes[i].checked_add(&classes[j]).is_some())
        .zip(&outcome)
        .filter(|(_, o)| !o.1)
        .map(|(p, _)| *p)
        .collect();
    if !failed_pairs.is_empty() {
        // retry the undecided pairs with much finer enclosures
        let fine = Precision::from_bits(cfg.prec.bits() * 4);
        for &(i, j) in &failed_pairs {
            let (a, b) = (classes[i], classes[j]);
            let sum = a.checked_add(&b).expect("filtered");
            let margin = &(&stable_norm(a, &s, fine)? + &stable_norm(b, &s, fine)?) - &stable_norm(sum, &s, fine)?;
            let ok = if a.det(&b) != 0 { margin.is_positive() } else { margin.hi().signum() >= 0 };
            if !ok {
                unresolved.push((i, j));
            }
        }
    }
    if let Some(&(i, j)) = unresolved.first() {
        failures.push(format!(
            "triangle inequality not certified for {} + {} ({} pairs)",
            classes[i],
            classes[j],
            unresolved.len()
        ));
    }

    // symmetry group
    let mut worst = 0f64;
    for h in &classes {
        let (p, q) = (h.h1(), h.h2());
        let base = table.norm(h);
        for other in [HomologyClass::new(q, p)?, HomologyClass::new(q - p, q)?, HomologyClass::new(-p, -q)?] {
            let v = table.norm(&other);
            let d = (&base - &v).abs();
            worst = worst.max(d.hi().to_f64());
            if !base.intersects(&v) || d.hi().to_f64() > EQUALITY_TOL {
                failures.push(format!("|{h}| != |{other}|"));
            }
        }
    }

    // homogeneity
    for h in class_box(3).iter().filter(|h| h.is_primitive()) {
        let unit = stable_norm(*h, &s, cfg.prec)?;
        for n in 1..=10 {
            let v = stable_norm(h.scale(n)?, &s, cfg.prec)?;
            if !agree_within(&v, &unit.mul_int(n), EQUALITY_TOL) {
                failures.push(format!("|{n} {h}| != {n} |{h}|"));
            }
        }
    }
    failures.truncate(5);
    Ok(SuiteReport::new(
        Suite::Norm,
        failures,
        format!("{checked} pairs with |coords| <= 12, {strict} strict; symmetry and homogeneity hold"),
        vec![format!("largest symmetry discrepancy bound {worst:.1e} (tolerance {EQUALITY_TOL:.0e})")],
    ))
}

fn beta_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for s in [Surface::Classical, Surface::AFamily(2)] {
        for h in class_box(4).iter().filter(|h| h.is_primitive()) {
            let b = beta(*h, &s, cfg.prec)?;
            let norm = stable_norm(*h, &s, cfg.prec)?;
            let half_sq = norm.square().div_i64(2)?;
            if !b.intersects(&half_sq) {
                failures.push(format!("{s}: beta{h} != |h|^2/2"));
            }
            for n in 1..=10 {
                let bn = beta(h.scale(n)?, &s, cfg.prec)?;
                if !bn.intersects(&b.mul_int(n * n)) && !agree_within(&bn, &b.mul_int(n * n), 0.0) {
                    failures.push(format!("{s}: beta({n}{h}) != {}^2 beta{h}", n));
                }
                checked += 1;
            }
        }
    }
    failures.truncate(5);
    Ok(SuiteReport::new(
        Suite::Beta,
        failures,
        format!("{checked} checks of beta(h) = |h|^2/2 and beta(nh) = n^2 beta(h), n <= 10"),
        vec!["classical and a=2, primitive classes with |coords| <= 4".into()],
    ))
}

fn hole_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for a in 1..=6u32 {
        let s = Surface::AFamily(a);
        let by_a = hole_length(&s, cfg.prec)?;
        let c = BigRational::from_integer(BigInt::from(4) - BigInt::from(4) * num_traits::pow(BigInt::from(a), 6));
        let by_c = hole_length_from_c(&c, cfg.prec)?;
        // the boundary is the commutator: -2 cosh(l/2) = tr [A, B]
        let tr = commutator_trace(&s)?;
        let by_comm = arcosh_of_ratio_bits(&-tr, &BigInt::from(2), cfg.prec.bits() + 1)?.mul_int(2);
        for (name, v) in [("c", &by_c), ("commutator", &by_comm)] {
            if !agree_within(&by_a, v, EQUALITY_TOL) {
                failures.push(format!("a={a}: hole length via {name} disagrees"));
            }
        }
        details.push(format!("a={a}: l = {}", by_a.bound_string(crate::hpreal::Round::Down, 15)));
    }
    let classical = hole_length(&Surface::Classical, cfg.prec)?;
    if !classical.is_exact() || !classical.contains_zero() {
        failures.push("punctured torus hole length is not 0".into());
    }
    Ok(SuiteReport::new(
        Suite::Hole,
        failures,
        format!("2 arcosh(2a^6-1) = 2 arcosh((2-c)/2) within {EQUALITY_TOL:.0e} for a <= 6"),
        details,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fricke_report_text() {
        let cfg = VerifyConfig { seed: 7, count: Some(1000), ..Default::default() };
        let (text, ok) = report(&[Suite::Fricke], &cfg);
        assert!(ok);
        assert!(text.starts_with("OK (1000 pairs, residuals 0)\n"), "{text}");
    }

    #[test]
    fn fast_suites_pass() {
        let cfg = VerifyConfig { count: Some(50), ..Default::default() };
        for s in [Suite::Markov, Suite::Traces, Suite::Hole, Suite::Corner, Suite::Irrational] {
            let r = run_suite(s, &cfg);
            assert!(r.passed, "{}: {r}", r.suite);
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!(Suite::parse_list("all").unwrap().len(), 10);
        assert_eq!(Suite::parse_list("norm").unwrap(), vec![Suite::Norm]);
        assert!(Suite::parse_list("nope").is_err());
    }
}
