//! Christoffel words in the Cohn matrices and their traces.

use markov_fock::cohn::{christoffel_word, commutator_trace, fricke_check, random_pairs, trace_of};
use markov_fock::farey::Fraction;
use markov_fock::markov::{markov_number, Surface};

fn main() -> markov_fock::Result<()> {
    let s = Surface::Classical;
    for x in ["1/3", "2/5", "3/7", "3/8", "4/11"] {
        let x: Fraction = x.parse()?;
        let w = christoffel_word(x)?;
        println!("{x:>5}  {w:<12} tr = {:>6}  3m = {}", trace_of(x, &s)?, markov_number(x, &s)?.scale(3));
    }
    println!("tr[A,B] classical = {}", commutator_trace(&s)?);
    for a in 1..=3 {
        println!("tr[A,B] a={a} = {}", commutator_trace(&Surface::AFamily(a))?);
    }

    let pairs = random_pairs(1, 3, 50);
    for (a, b) in &pairs {
        let (r1, r2) = fricke_check(a, b)?;
        println!("A = {a}, B = {b}: residuals {r1}, {r2}");
    }
    Ok(())
}
