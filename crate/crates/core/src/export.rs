//! CSV and JSON writers. Every number is written as a decimal string; inexact
//! values carry their error bound (`"v±e"` in JSON, an `err` column in CSV).

use std::io::Write;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fock::{BallPoint, CornerGap, PsiValue, SlopeSequence};
use crate::hpreal::{HpReal, Round};
use crate::markov::Surface;

/// Output encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?} (text, csv, json)"))),
        }
    }
}

/// Digits kept in rigorous one-sided bounds.
pub const BOUND_DIGITS: usize = 30;

fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Io(std::io::Error::other(format!("{other:?}"))),
    }
}

fn larger_err(a: &HpReal, b: &HpReal) -> String {
    let (ea, eb) = (a.decimal_parts().1, b.decimal_parts().1);
    let fa: f64 = ea.parse().unwrap_or(f64::INFINITY);
    let fb: f64 = eb.parse().unwrap_or(f64::INFINITY);
    if fa >= fb {
        ea
    } else {
        eb
    }
}

/// Columns `p, q, x, y, err`.
pub fn ball_csv(points: &[BallPoint], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["p", "q", "x", "y", "err"]).map_err(csv_err)?;
    for b in points {
        w.write_record([
            b.class.h1().to_string(),
            b.class.h2().to_string(),
            b.x.decimal_parts().0,
            b.y.decimal_parts().0,
            larger_err(&b.x, &b.y),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn ball_json(points: &[BallPoint], s: &Surface, max_q: i64) -> Value {
    json!({
        "surface": s.to_string(),
        "max_q": max_q,
        "points": points.iter().map(|b| json!({
            "p": b.class.h1(),
            "q": b.class.h2(),
            "x": b.x.to_string(),
            "y": b.y.to_string(),
        })).collect::<Vec<_>>(),
    })
}

/// Columns `depth, approach_p, approach_q, slope, err`, plus the bracket
/// columns `lower, upper, width` for irrational targets.
pub fn slopes_csv(seq: &SlopeSequence, out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let with_brackets = !seq.brackets.is_empty();
    let mut header = vec!["depth", "approach_p", "approach_q", "slope", "err"];
    if with_brackets {
        header.extend(["lower", "upper", "width"]);
    }
    w.write_record(&header).map_err(csv_err)?;
    for p in &seq.points {
        let (v, e) = p.slope.decimal_parts();
        let mut row = vec![p.depth.to_string(), p.approach.p().to_string(), p.approach.q().to_string(), v, e];
        if with_brackets {
            match seq.brackets.iter().find(|b| b.depth == p.depth) {
                Some(b) => row.extend([
                    b.lower.bound_string(Round::Down, BOUND_DIGITS),
                    b.upper.bound_string(Round::Up, BOUND_DIGITS),
                    b.width().to_string(),
                ]),
                None => row.extend([String::new(), String::new(), String::new()]),
            }
        }
        w.write_record(&row).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn slopes_json(seq: &SlopeSequence, s: &Surface) -> Value {
    json!({
        "target": seq.target.to_string(),
        "side": seq.side.to_string(),
        "surface": s.to_string(),
        "points": seq.points.iter().map(|p| json!({
            "depth": p.depth,
            "approach": p.approach.to_string(),
            "slope": p.slope.to_string(),
        })).collect::<Vec<_>>(),
        "brackets": seq.brackets.iter().map(|b| json!({
            "depth": b.depth,
            "lower": b.lower.bound_string(Round::Down, BOUND_DIGITS),
            "upper": b.upper.bound_string(Round::Up, BOUND_DIGITS),
            "width": b.width().to_string(),
        })).collect::<Vec<_>>(),
        "truncated": seq.truncated,
    })
}

pub fn corner_json(g: &CornerGap, s: &Surface) -> Value {
    let lower = |v: &Option<HpReal>| v.as_ref().map(|b| b.bound_string(Round::Down, BOUND_DIGITS));
    json!({
        "fraction": g.x.to_string(),
        "depth": g.depth,
        "surface": s.to_string(),
        "gap_lower_bound": lower(&g.lower),
        "gap_upper_bound": g.upper.bound_string(Round::Up, BOUND_DIGITS),
        "left_derivative": g.d_minus.as_ref().map(|d| d.to_string()),
        "right_derivative": g.d_plus.as_ref().map(|d| d.to_string()),
        "lower_bound_by_depth": g.lower_by_depth.iter().map(lower).collect::<Vec<_>>(),
        "left_slopes": g.left.points.iter().map(|p| json!({"approach": p.approach.to_string(), "slope": p.slope.to_string()})).collect::<Vec<_>>(),
        "right_slopes": g.right.points.iter().map(|p| json!({"approach": p.approach.to_string(), "slope": p.slope.to_string()})).collect::<Vec<_>>(),
        "certified_positive": g.certified_positive,
    })
}

#[derive(Serialize)]
struct PsiJson {
    fraction: String,
    surface: String,
    trace: String,
    psi: String,
    half_length: String,
}

pub fn psi_json(v: &PsiValue) -> Value {
    serde_json::to_value(PsiJson {
        fraction: v.x.to_string(),
        surface: v.surface.to_string(),
        trace: v.trace.to_string(),
        psi: v.psi.to_string(),
        half_length: v.half_length.to_string(),
    })
    .expect("plain strings serialise")
}

/// Pretty JSON followed by a newline.
pub fn write_json(v: &Value, mut out: impl Write) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, v).map_err(|e| Error::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}
