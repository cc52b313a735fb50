//! Stable norm, beta function and the triangle inequality on a few classes.

use markov_fock::fock::{beta, stable_norm, HomologyClass, Precision};
use markov_fock::markov::Surface;

fn main() -> markov_fock::Result<()> {
    let prec = Precision::default();
    let s = Surface::Classical;
    let classes = [(1, 0), (0, 1), (1, 1), (1, 2), (2, 4), (3, -5)];
    for (p, q) in classes {
        let h = HomologyClass::new(p, q)?;
        println!("|{h}| = {}   beta = {}", stable_norm(h, &s, prec)?, beta(h, &s, prec)?);
    }

    let (a, b) = (HomologyClass::new(1, 0)?, HomologyClass::new(0, 1)?);
    let sum = a.checked_add(&b).expect("small");
    let slack = &(&stable_norm(a, &s, prec)? + &stable_norm(b, &s, prec)?) - &stable_norm(sum, &s, prec)?;
    println!("|a| + |b| - |a+b| = {slack} (positive: {})", slack.is_positive());
    Ok(())
}
