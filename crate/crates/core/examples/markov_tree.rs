//! Walks the Markov tree and shows the Vieta involution at each node.

use markov_fock::markov::{enumerate_tree, Slot, Surface};

fn main() -> markov_fock::Result<()> {
    for node in enumerate_tree(&Surface::Classical, 3)? {
        let t = &node.triple;
        println!("{:>5}  {t}  residual {}", node.fraction.to_string(), t.residual());
    }

    // the same tree on the a=2 surface: X^2 + Y^2 + Z^2 = XYZ + c
    let nodes = enumerate_tree(&Surface::AFamily(2), 2)?;
    for node in &nodes {
        let flipped = node.triple.vieta_step(Slot::Z);
        println!("a=2 {}: {} -> flip Z -> {}", node.fraction, node.triple, flipped);
    }
    Ok(())
}
