//! Runs every randomized verification suite on a small seeded corpus.
//! Usage: `cargo run --release --example verify_corpus -- [seed] [count] [max_n]`.

use koszul::verify::{examples_suite, randomized_suite, RANDOMIZED_SUITES};

fn main() -> koszul::error::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let seed = args.first().copied().unwrap_or(2024);
    let count = args.get(1).copied().unwrap_or(40) as usize;
    let max_n = args.get(2).copied().unwrap_or(6) as usize;

    let mut ok = true;
    let examples = examples_suite();
    println!("{}", examples.summary());
    ok &= examples.passed();
    for name in RANDOMIZED_SUITES {
        let report = randomized_suite(name, seed, count, max_n)?;
        println!("{}", report.summary());
        for failure in report.failures() {
            println!("  {}: {}", failure.id, failure.details);
        }
        ok &= report.passed();
    }
    std::process::exit(if ok { 0 } else { 1 });
}
