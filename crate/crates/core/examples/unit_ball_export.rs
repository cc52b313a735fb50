//! Samples the unit sphere of the stable norm and writes CSV and JSON.

use markov_fock::export::{ball_csv, ball_json, write_json};
use markov_fock::fock::{unit_ball, Precision};
use markov_fock::markov::Surface;

fn main() -> markov_fock::Result<()> {
    let s = Surface::Classical;
    let pts = unit_ball(&s, 3, Precision::default())?;
    ball_csv(&pts, std::io::stdout())?;

    let small = unit_ball(&s, 1, Precision::default())?;
    write_json(&ball_json(&small, &s, 1), std::io::stdout())
}
