//! One-holed tori: the a-family, a real Fricke seed, and their boundary lengths.

use markov_fock::cohn::commutator_trace;
use markov_fock::fock::{geodesic_length, hole_length, Precision};
use markov_fock::markov::{parse_rational_triple, FrickeSeed, Surface};

fn main() -> markov_fock::Result<()> {
    let prec = Precision::default();
    for a in 1..=4 {
        let s = Surface::a_family(a)?;
        println!(
            "a={a}: c = {}, tr[A,B] = {}, hole = {}, l(1/3) = {}",
            s.trace_constant(),
            commutator_trace(&s)?,
            hole_length(&s, prec)?,
            geodesic_length("1/3".parse()?, &s, prec)?
        );
    }

    let [x, y, z] = parse_rational_triple("3,4,8.5")?;
    let s = Surface::fricke(FrickeSeed::new(x, y, z)?);
    println!("{s}: hole = {}", hole_length(&s, prec)?);
    for f in ["0/1", "1/3", "1/2", "2/1"] {
        println!("  l({f}) = {}", geodesic_length(f.parse()?, &s, prec)?);
    }
    Ok(())
}
