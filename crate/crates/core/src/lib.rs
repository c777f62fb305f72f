pub mod bits;
pub mod complex;
pub mod error;
pub mod exactlin;
pub mod homology;
pub mod koszul;
pub mod grobner;
pub mod resonance;
pub mod verify;
pub mod cli;
