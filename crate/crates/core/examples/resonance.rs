//! Jump and support resonance for two disjoint edges and for the tetrahedron boundary
//! with one face removed.

use koszul::complex::SimplicialComplex;
use koszul::resonance::{annihilator, fixed_degree_resonance_check, jump_resonance, propagation_check, support_resonance};

fn main() -> koszul::error::Result<()> {
    let two_edges = SimplicialComplex::parse(include_str!("../data/two_edges.txt"))?;
    for i in 1..=2 {
        println!("two edges: R^{i} = {}, support R_{i} = {}", jump_resonance(&two_edges, i)?, support_resonance(&two_edges, i)?);
    }
    let prop = propagation_check(&two_edges)?;
    println!("Cohen-Macaulay {}, resonance propagates {}", prop.cohen_macaulay, prop.propagates);

    let tetra = SimplicialComplex::parse(include_str!("../data/tetra_minus_face.txt"))?;
    let report = fixed_degree_resonance_check(&tetra)?;
    for (i, support, jump) in &report.pairs {
        println!("tetra minus face: i = {i}: support {support}, jump {jump}");
    }
    println!("Ann W_2 = {}", annihilator(&tetra, 2)?.ideal);

    let path = SimplicialComplex::parse(include_str!("../data/path4.txt"))?;
    println!("path: support R_1 = {}, Ann W_1 = {}", support_resonance(&path, 1)?, annihilator(&path, 1)?.ideal);
    Ok(())
}
