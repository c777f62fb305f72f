//! Chen ranks of right-angled Artin groups from the disconnection polynomial of the graph.

use koszul::complex::SimplicialComplex;
use koszul::koszul::chen_ranks;

fn main() -> koszul::error::Result<()> {
    let graphs = [
        ("4-cycle", SimplicialComplex::cycle(4)?),
        ("5-cycle", SimplicialComplex::cycle(5)?),
        ("path on 4 vertices", SimplicialComplex::path(4)?),
        ("K_5", SimplicialComplex::complete_graph(5)?),
    ];
    for (name, graph) in graphs {
        let chen = chen_ranks(&graph, 8)?;
        println!("{name}: Q = {}, ranks {:?}", chen.q_string(), chen.shifted_hilbert);
    }
    Ok(())
}
