//! Fock's function psi along a few fractions, with certified error bounds.

use markov_fock::fock::{psi, Precision};
use markov_fock::markov::Surface;

fn main() -> markov_fock::Result<()> {
    let prec = Precision::new(1e-40)?;
    for s in [Surface::Classical, Surface::AFamily(2)] {
        println!("{s}");
        for x in ["0/1", "1/5", "1/4", "2/7", "1/3", "3/8", "2/5", "3/7", "1/2"] {
            let v = psi(x.parse()?, &s, prec)?;
            println!("  psi({x:>3}) = {}   (trace {})", v.psi, v.trace);
        }
    }
    Ok(())
}
