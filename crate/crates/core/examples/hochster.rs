//! Hochster-type sums of link homology against the cohomology of multiplication by a
//! degree-one element, which only depends on the element's support.

use koszul::complex::SimplicialComplex;
use koszul::exactlin::rat_frac;
use koszul::resonance::{delta_a_cohomology, hochster_check};

fn main() -> koszul::error::Result<()> {
    let tetra = SimplicialComplex::from_facets(4, &[vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]])?;
    for mask in [0b0111u64, 0b1111, 0b1000] {
        let report = hochster_check(&tetra, mask)?;
        println!("support {:?}: hochster {:?}, direct {:?}", report.support, report.hochster, report.direct);
        for term in report.terms.iter().filter(|t| t.dim > 0) {
            println!("  i = {}, sigma = {:?}: {}", term.i, term.sigma, term.dim);
        }
    }
    let a = [rat_frac(3, 2), rat_frac(-7, 1), rat_frac(1, 5), rat_frac(0, 1)];
    println!("a = {:?}: {:?}", a.iter().map(|x| x.to_string()).collect::<Vec<_>>(), delta_a_cohomology(&tetra, &a)?);
    Ok(())
}
