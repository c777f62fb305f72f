//! Reduced homology of a complex and of every induced subcomplex.

use koszul::complex::SimplicialComplex;
use koszul::homology::{all_subset_homology, reduced_homology};
use koszul::bits;

fn main() -> koszul::error::Result<()> {
    let complex = SimplicialComplex::parse(include_str!("../data/tetra_minus_face.txt"))?;
    println!("{complex}");
    println!("f-vector {:?}", complex.f_vector());
    let profile = reduced_homology(&complex);
    println!("whole complex: {:?}, euler characteristic {}", profile.nonzero(), profile.euler_characteristic());

    for i in 0..3 {
        let table = all_subset_homology(&complex, i as usize)?;
        for (mask, dim) in table.nonzero() {
            println!("h~_{} of the restriction to {:?} = {dim}", i as isize - 1, bits::to_vertices(mask));
        }
    }
    Ok(())
}
