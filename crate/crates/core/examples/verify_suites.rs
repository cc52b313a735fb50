//! Runs a few property suites from the library, as `fock verify` does.

use markov_fock::verify::{report, Suite, VerifyConfig};

fn main() {
    let cfg = VerifyConfig { seed: 11, count: Some(200), ..Default::default() };
    let (text, ok) = report(&[Suite::Markov, Suite::Fricke, Suite::Hole], &cfg);
    print!("{text}");
    std::process::exit(if ok { 0 } else { 1 });
}
