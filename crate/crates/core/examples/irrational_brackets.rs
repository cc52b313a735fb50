//! Slope brackets at quadratic irrationals shrink towards a single derivative.

use markov_fock::farey::ContinuedFraction;
use markov_fock::fock::{irrational_slope_bracket, Precision};
use markov_fock::hpreal::Round;
use markov_fock::markov::Surface;

fn main() -> markov_fock::Result<()> {
    for cf in ["0;2,(1)", "0;2,2,(2)", "0;3,(1,2)"] {
        let cf: ContinuedFraction = cf.parse()?;
        let seq = irrational_slope_bracket(&cf, 9, &Surface::Classical, Precision::default())?;
        println!("[{cf}]");
        for b in &seq.brackets {
            println!(
                "  depth {:>2}: [{}, {}]  width {:.3e}",
                b.depth,
                b.lower.bound_string(Round::Down, 12),
                b.upper.bound_string(Round::Up, 12),
                b.width().to_f64()
            );
        }
    }
    Ok(())
}
