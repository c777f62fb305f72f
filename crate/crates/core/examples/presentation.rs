//! Linear presentation of the top Koszul module for complexes with a complete
//! codimension-one skeleton, and the same Hilbert function from the pair-module calculator.

use koszul::complex::SimplicialComplex;
use koszul::koszul::presentation::monomial_subspace;
use koszul::koszul::{hilbert_series_combinatorial, pair_module_hilbert, presentation_matrix, specialize_single};

fn main() -> koszul::error::Result<()> {
    let examples = [
        ("path", SimplicialComplex::path(4)?),
        ("4-cycle", SimplicialComplex::cycle(4)?),
        ("tetra minus face", SimplicialComplex::from_facets(4, &[vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]])?),
        ("5-cycle", SimplicialComplex::cycle(5)?),
    ];
    for (name, complex) in examples {
        let d = complex.skeleton_complete_degree()?.expect("nonempty");
        let p = presentation_matrix(&complex)?;
        let (rows, cols) = p.shape();
        let coker = p.cokernel_hilbert(6);
        let pair = pair_module_hilbert(complex.n(), d, &monomial_subspace(&complex, d), 6)?;
        let series = specialize_single(&hilbert_series_combinatorial(&complex, d)?, 6)?;
        println!("{name}: d = {d}, {rows} x {cols} presentation");
        println!("  cokernel {coker:?}\n  pair module {pair:?}\n  series {series:?}");
        assert!(coker == series && pair == series);
    }
    Ok(())
}
