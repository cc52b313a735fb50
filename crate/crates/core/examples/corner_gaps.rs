//! Corners of psi at rationals: certified lower and upper bounds on D+ - D-.

use markov_fock::farey::Side;
use markov_fock::fock::{corner_gap, one_sided_slopes, Precision};
use markov_fock::hpreal::Round;
use markov_fock::markov::Surface;

fn main() -> markov_fock::Result<()> {
    let prec = Precision::default();
    let s = Surface::Classical;

    let left = one_sided_slopes("1/2".parse()?, Side::Left, 5, &s, prec)?;
    for p in &left.points {
        println!("left secant via {:>6}: {}", p.approach.to_string(), p.slope);
    }

    for x in ["1/2", "1/3", "2/5", "3/8"] {
        let g = corner_gap(x.parse()?, 8, &s, prec)?;
        let lower = g.lower.as_ref().map(|l| l.bound_string(Round::Down, 15));
        println!(
            "{x:>4}: gap in [{}, {}]  certified {}",
            lower.as_deref().unwrap_or("-"),
            g.upper.bound_string(Round::Up, 15),
            g.certified_positive
        );
    }
    Ok(())
}
