//! Koszul modules `W_i(Δ)`: strands, square-free module data, Hilbert series,
//! Betti tables and linear presentations.

pub mod betti;
pub mod hilbert;
pub mod module;
pub mod presentation;
pub mod strand;

pub use betti::{betti_table, regularity_bounds_check, verify_duality, BettiTable, DualityReport, RegularityReport};
pub use hilbert::{
    chen_ranks, hilbert_series_combinatorial, hilbert_series_from_module, single_graded_by_strands,
    single_graded_by_strands_all, specialize_single, ChenRanks, HilbertSeriesMulti,
};
pub use module::{build_W, koszul_strand_piece, verify_on_support, ModulePiece, SquareFreeModule};
pub use presentation::{pair_module_hilbert, presentation_matrix, PresentationMatrix};
pub use strand::{koszul_module_dim, koszul_module_dims_all, tor_stanley_reisner, RankCache, StrandComplex};

use crate::bits;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// For `Δ` of dimension `d` with complete `(d-1)`-skeleton, the strand at position
/// `d + 1` has no incoming differential in any square-free degree, so
/// `[W_{d+1}(Δ)]_b` is the kernel of the outgoing map inside a free strand space.
pub fn top_module_is_kernel(complex: &SimplicialComplex) -> Result<bool> {
    let Some(d) = complex.skeleton_complete_degree()? else {
        return Err(Error::Precondition("complex does not have a complete codimension-one skeleton".into()));
    };
    let n = complex.n();
    for mask in 0..(1u64 << n) {
        let a = strand::square_free(n, mask);
        let s = StrandComplex::new(complex, d + 1, &a);
        if !s.d_in.is_zero() || s.upper.iter().any(|e| bits::popcount(e.face) != d + 2) {
            return Ok(false);
        }
    }
    Ok(true)
}
