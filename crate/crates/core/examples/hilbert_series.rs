//! Multigraded Hilbert series of W_1 of the 4-cycle by two routes, then the single grading
//! checked against brute-force strand dimensions.

use koszul::complex::SimplicialComplex;
use koszul::koszul::{build_W, hilbert_series_combinatorial, hilbert_series_from_module, single_graded_by_strands, specialize_single};

fn main() -> koszul::error::Result<()> {
    let c4 = SimplicialComplex::cycle(4)?;
    let combinatorial = hilbert_series_combinatorial(&c4, 1)?;
    let from_module = hilbert_series_from_module(&build_W(&c4, 1)?);
    println!("from homology of restrictions: {combinatorial}");
    println!("from the square-free module:   {from_module}");
    assert_eq!(combinatorial, from_module);

    let single = specialize_single(&combinatorial, 8)?;
    let brute = single_graded_by_strands(&c4, 1, 8);
    println!("dim [W_1]_a, a = 0..8: {single:?}");
    assert_eq!(single, brute);

    for i in 2..=3 {
        println!("W_{i}: {}", hilbert_series_combinatorial(&c4, i)?);
    }
    Ok(())
}
