//! Graded Betti numbers, projective dimension and regularity of W_1 for cycles,
//! together with the general bounds.

use koszul::complex::SimplicialComplex;
use koszul::koszul::betti::regularity_report;
use koszul::koszul::{betti_table, build_W};

fn main() -> koszul::error::Result<()> {
    for n in 4..=8 {
        let cycle = SimplicialComplex::cycle(n)?;
        let table = betti_table(&build_W(&cycle, 1)?);
        let report = regularity_report(&cycle, 1, &table)?;
        println!(
            "C_{n}: pdim {}, reg {:?}, reg after shift by 2 {:?}, bounds reg <= {} pdim <= {}, total betti numbers {:?}",
            table.pdim(),
            table.regularity(),
            table.regularity_shifted(2),
            report.regularity_bound,
            report.pdim_bound,
            (0..=table.pdim() as usize).map(|h| table.total(h)).collect::<Vec<_>>(),
        );
        assert!(report.passed());
    }
    let c5 = SimplicialComplex::cycle(5)?;
    println!("\ngraded table of W_1(C_5) as (h, |b|) -> beta:");
    for ((h, size), beta) in betti_table(&build_W(&c5, 1)?).graded_table() {
        println!("  ({h}, {size}) -> {beta}");
    }
    Ok(())
}
