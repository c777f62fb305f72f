//! Annihilator and zeroth Fitting ideal of W_1 for the path on four vertices, compared by
//! reduced Gröbner bases.

use koszul::complex::SimplicialComplex;
use koszul::koszul::presentation_matrix;
use koszul::verify::fitting_path4;

fn main() -> koszul::error::Result<()> {
    let path = SimplicialComplex::path(4)?;
    println!("presentation of W_1:\n{}", presentation_matrix(&path)?);

    let cert = fitting_path4()?;
    let show = |label: &str, ideal: &koszul::grobner::PolynomialIdeal| {
        let gb: Vec<String> = ideal.groebner_basis().iter().map(|g| g.to_string()).collect();
        println!("{label}: [{}]", gb.join(", "));
    };
    show("Ann W_1", &cert.annihilator);
    show("(x2) ∩ (x3)", &cert.annihilator_expected);
    show("Fitt_0 W_1", &cert.fitting);
    show("(x2) ∩ (x3) ∩ (x1, x2^2, x3^2, x4)", &cert.fitting_expected);
    println!("annihilator equal: {}, fitting equal: {}", cert.annihilator_equal, cert.fitting_equal);
    println!("Fitting scheme non-reduced: {} ({:?})", cert.radical.non_reduced(), cert.radical);
    assert!(cert.holds());
    Ok(())
}
