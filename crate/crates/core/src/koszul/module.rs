//! Finite models of `ℕ^n`-graded square-free modules, and the construction
//! of `W_i(Δ)` as one.
//!
//! A square-free module is determined by its pieces in square-free degrees
//! together with the multiplication maps `x_j : M_b → M_{b ∪ j}` for
//! `j ∉ Supp(b)`; multiplication by `x_j` with `j ∈ Supp(b)` is an
//! isomorphism and is not stored.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::strand::{square_free, StrandComplex};
use crate::bits::{self, full_mask};
use crate::complex::{join_vertices, SimplicialComplex, SquareFreeDegree, SUBSET_GUARD};
use crate::error::{Error, Result};
use crate::exactlin::{Homology, Rational, RationalMatrix};

/// The piece of a module in one square-free degree.
#[derive(Clone, Debug)]
pub struct ModulePiece {
    pub dimension: usize,
    /// Representative vectors for a basis, in whatever ambient space the module came from.
    pub representatives: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug)]
pub struct SquareFreeModule {
    n: usize,
    pieces: BTreeMap<u64, ModulePiece>,
    /// `(b, j) ↦` matrix of `x_j : M_b → M_{b ∪ j}`, stored only when both pieces are nonzero.
    mult: BTreeMap<(u64, usize), RationalMatrix>,
}

impl SquareFreeModule {
    pub fn zero(n: usize) -> Self {
        SquareFreeModule { n, pieces: BTreeMap::new(), mult: BTreeMap::new() }
    }

    /// Assembles a module from explicit data. Checks shapes and commutativity.
    pub fn from_parts(
        n: usize,
        pieces: BTreeMap<u64, ModulePiece>,
        mult: BTreeMap<(u64, usize), RationalMatrix>,
    ) -> Result<Self> {
        let pieces: BTreeMap<u64, ModulePiece> = pieces.into_iter().filter(|(_, p)| p.dimension > 0).collect();
        let mut module = SquareFreeModule { n, pieces, mult: BTreeMap::new() };
        for ((b, j), m) in mult {
            if b & (1u64 << j) != 0 {
                return Err(Error::Precondition(format!(
                    "multiplication by x_{} on degree {{{}}} is on-support",
                    j + 1,
                    join_vertices(b)
                )));
            }
            let (src, dst) = (module.dim(b), module.dim(b | (1u64 << j)));
            if m.cols() != src || m.rows() != dst {
                return Err(Error::DimensionMismatch(format!(
                    "x_{} on {{{}}} is {}x{}, expected {}x{}",
                    j + 1,
                    join_vertices(b),
                    m.rows(),
                    m.cols(),
                    dst,
                    src
                )));
            }
            if src > 0 && dst > 0 {
                module.mult.insert((b, j), m);
            }
        }
        module.check_commutativity()?;
        Ok(module)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self, mask: u64) -> usize {
        self.pieces.get(&mask).map(|p| p.dimension).unwrap_or(0)
    }

    pub fn piece(&self, mask: u64) -> Option<&ModulePiece> {
        self.pieces.get(&mask)
    }

    /// Nonzero pieces in ascending mask order.
    pub fn pieces(&self) -> impl Iterator<Item = (u64, &ModulePiece)> {
        self.pieces.iter().map(|(m, p)| (*m, p))
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    /// `dim M_a` for an arbitrary multidegree, via square-freeness.
    pub fn dim_at(&self, a: &[u32]) -> usize {
        self.dim(super::strand::support_mask(a))
    }

    /// `x_j : M_b → M_{b ∪ j}` for `j ∉ Supp(b)` (0-based `j`).
    pub fn mult(&self, b: u64, j: usize) -> RationalMatrix {
        debug_assert!(b & (1u64 << j) == 0);
        match self.mult.get(&(b, j)) {
            Some(m) => m.clone(),
            None => RationalMatrix::zeros(self.dim(b | (1u64 << j)), self.dim(b)),
        }
    }

    /// Matrix of multiplication by the square-free monomial `x^T` from `M_b` to `M_{b ∪ T}`,
    /// on-support factors acting as the identity.
    pub fn monomial_action(&self, b: u64, t: u64) -> RationalMatrix {
        let mut current = b;
        let mut acc = RationalMatrix::identity(self.dim(b));
        for j in bits::bit_positions(t & !b) {
            let step = self.mult(current, j);
            acc = step.mul(&acc).expect("shapes chain");
            current |= 1u64 << j;
        }
        acc
    }

    /// `mult(b∪j, k) ∘ mult(b, j) = mult(b∪k, j) ∘ mult(b, k)` for all `j ≠ k` off `Supp(b)`.
    pub fn check_commutativity(&self) -> Result<()> {
        let full = full_mask(self.n);
        for b in 0..=full {
            if self.dim(b) == 0 {
                continue;
            }
            let free: Vec<usize> = bits::bit_positions(full & !b).collect();
            for (x, &j) in free.iter().enumerate() {
                for &k in &free[x + 1..] {
                    let lhs = self.mult(b | (1u64 << j), k).mul(&self.mult(b, j))?;
                    let rhs = self.mult(b | (1u64 << k), j).mul(&self.mult(b, k))?;
                    if lhs != rhs {
                        return Err(Error::Internal(format!(
                            "multiplication squares do not commute at b = {{{}}}, j = {}, k = {}",
                            join_vertices(b),
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Maximal supports of nonzero pieces (the support variety's components).
    pub fn maximal_supports(&self) -> Vec<u64> {
        let masks: Vec<u64> = self.pieces.keys().copied().collect();
        let mut out: Vec<u64> =
            masks.iter().copied().filter(|&m| !masks.iter().any(|&o| o != m && o & m == m)).collect();
        out.sort_unstable();
        out
    }

    /// Whether the square-free monomial `x^T` annihilates the module.
    pub fn annihilated_by(&self, t: u64) -> bool {
        self.pieces.keys().all(|&b| self.monomial_action(b, t).is_zero())
    }
}

/// `dim [W_i(Δ)]_b` and representative cycles, from the strand complex.
#[derive(Clone, Debug)]
pub struct StrandPiece {
    pub dimension: usize,
    pub representatives: Vec<Vec<Rational>>,
}

/// The multidegree-`b` piece of `W_i(Δ)`.
pub fn koszul_strand_piece(complex: &SimplicialComplex, i: usize, b: SquareFreeDegree) -> Result<StrandPiece> {
    let strand = StrandComplex::new(complex, i, &square_free(complex.n(), b.mask()));
    let h = strand.homology()?;
    Ok(StrandPiece { dimension: h.dimension, representatives: h.basis })
}

/// Per-degree data kept while assembling `W_i(Δ)`.
struct StrandData {
    strand: StrandComplex,
    homology: Homology,
}

/// Multiplies a cycle of the strand at `source` by `x_j` and expresses it in the
/// coordinates of `target`'s middle basis.
fn push_cycle(source: &StrandComplex, target: &StrandComplex, j: usize, cycle: &[Rational]) -> Result<Vec<Rational>> {
    let index = target.middle_index();
    let mut out = vec![Rational::zero(); target.middle.len()];
    for (coef, el) in cycle.iter().zip(&source.middle) {
        if coef.is_zero() {
            continue;
        }
        let mut moved = el.clone();
        moved.monomial[j] += 1;
        let pos = index
            .get(&moved)
            .ok_or_else(|| Error::Internal("multiplied basis element missing from target strand".into()))?;
        out[*pos] = coef.clone();
    }
    Ok(out)
}

/// Matrix of `x_j` on homology, from the strand at `source` to the strand at `target`.
fn induced_map(source: &StrandData, target: &StrandData, j: usize) -> Result<RationalMatrix> {
    let mut columns = Vec::with_capacity(source.homology.dimension);
    for rep in &source.homology.basis {
        let pushed = push_cycle(&source.strand, &target.strand, j, rep)?;
        columns.push(target.homology.class_of(&pushed)?);
    }
    RationalMatrix::from_columns(target.homology.dimension, &columns)
}

/// Builds `W_i(Δ)` as a square-free module: every square-free piece, plus the
/// multiplication maps lifted through strand representatives.
#[allow(non_snake_case)]
pub fn build_W(complex: &SimplicialComplex, i: usize) -> Result<SquareFreeModule> {
    let n = complex.n();
    if n > SUBSET_GUARD {
        return Err(Error::GuardExceeded { n, limit: SUBSET_GUARD });
    }
    let data: Vec<(u64, StrandData)> = (0..(1u64 << n))
        .into_par_iter()
        .map(|mask| {
            let strand = StrandComplex::new(complex, i, &square_free(n, mask));
            let homology = strand.homology()?;
            Ok((mask, StrandData { strand, homology }))
        })
        .collect::<Result<Vec<_>>>()?;
    let by_mask: BTreeMap<u64, &StrandData> =
        data.iter().filter(|(_, d)| d.homology.dimension > 0).map(|(m, d)| (*m, d)).collect();

    let pairs: Vec<(u64, usize)> = by_mask
        .keys()
        .flat_map(|&b| (0..n).filter(move |j| b & (1u64 << j) == 0).map(move |j| (b, j)))
        .filter(|(b, j)| by_mask.contains_key(&(b | (1u64 << j))))
        .collect();
    let mult: BTreeMap<(u64, usize), RationalMatrix> = pairs
        .into_par_iter()
        .map(|(b, j)| Ok(((b, j), induced_map(by_mask[&b], by_mask[&(b | (1u64 << j))], j)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;

    let pieces: BTreeMap<u64, ModulePiece> = by_mask
        .iter()
        .map(|(m, d)| {
            (*m, ModulePiece { dimension: d.homology.dimension, representatives: d.homology.basis.clone() })
        })
        .collect();
    SquareFreeModule::from_parts(n, pieces, mult)
}

/// Checks the on-support identification of `W_i(Δ)`: for every square-free `b`
/// and `j ∈ Supp(b)`, multiplication by `x_j : [W_i]_b → [W_i]_{b + e_j}` is an
/// isomorphism. The non-square-free strand at `b + e_j` is computed directly.
pub fn verify_on_support(complex: &SimplicialComplex, i: usize) -> Result<usize> {
    let n = complex.n();
    let checked: Vec<usize> = (0..(1u64 << n))
        .into_par_iter()
        .map(|mask| {
            let a = square_free(n, mask);
            let source_strand = StrandComplex::new(complex, i, &a);
            let source = StrandData { homology: source_strand.homology()?, strand: source_strand };
            let mut count = 0;
            for j in bits::bit_positions(mask) {
                let mut bumped = a.clone();
                bumped[j] += 1;
                let target_strand = StrandComplex::new(complex, i, &bumped);
                let target = StrandData { homology: target_strand.homology()?, strand: target_strand };
                if source.homology.dimension != target.homology.dimension {
                    return Err(Error::Oracle(format!(
                        "dim W_{i} at {{{}}} is {} but {} after x_{}",
                        join_vertices(mask),
                        source.homology.dimension,
                        target.homology.dimension,
                        j + 1
                    )));
                }
                let map = induced_map(&source, &target, j)?;
                if map.rank() != source.homology.dimension {
                    return Err(Error::Oracle(format!(
                        "x_{} is not injective on W_{i} at {{{}}}",
                        j + 1,
                        join_vertices(mask)
                    )));
                }
                count += 1;
            }
            Ok(count)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(checked.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::from_vertices;

    fn deg(n: usize, v: &[usize]) -> SquareFreeDegree {
        SquareFreeDegree::from_vertices(n, v).unwrap()
    }

    #[test]
    fn strand_piece_examples() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        assert_eq!(koszul_strand_piece(&c4, 1, deg(4, &[1, 3])).unwrap().dimension, 1);
        assert_eq!(koszul_strand_piece(&c4, 0, deg(4, &[])).unwrap().dimension, 1);
        let simplex = SimplicialComplex::simplex(4).unwrap();
        for mask in 0..16u64 {
            for i in 1..=4 {
                let b = SquareFreeDegree::new(4, mask).unwrap();
                assert_eq!(koszul_strand_piece(&simplex, i, b).unwrap().dimension, 0);
            }
        }
    }

    #[test]
    fn w1_of_the_four_cycle() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let w = build_W(&c4, 1).unwrap();
        let supports: Vec<u64> = w.pieces().map(|(m, _)| m).collect();
        assert_eq!(supports, vec![from_vertices(&[1, 3]), from_vertices(&[2, 4])]);
        for (b, _) in w.pieces() {
            for j in 0..4 {
                if b & (1 << j) == 0 {
                    assert!(w.mult(b, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn w1_of_the_path() {
        let p = SimplicialComplex::path(4).unwrap();
        let w = build_W(&p, 1).unwrap();
        let supports: Vec<Vec<usize>> = w.pieces().map(|(m, _)| bits::to_vertices(m)).collect();
        assert_eq!(supports, vec![vec![1, 3], vec![1, 4], vec![2, 4], vec![1, 2, 4], vec![1, 3, 4]]);
        // {1,4} -> {1,2,4} by x_2 is an isomorphism
        let m = w.mult(from_vertices(&[1, 4]), 1);
        assert_eq!((m.rows(), m.cols(), m.rank()), (1, 1, 1));
        // {1,3} -> {1,3,4} by x_4 also (the component {1,3,4} stays disconnected)
        assert_eq!(w.mult(from_vertices(&[1, 3]), 3).rank(), 1);
        // x_2 x_3 kills everything
        assert!(w.annihilated_by(from_vertices(&[2, 3])));
        assert!(!w.annihilated_by(from_vertices(&[2])));
        w.check_commutativity().unwrap();
        assert!(verify_on_support(&p, 1).unwrap() > 0);
    }

    #[test]
    fn two_edges_w2_vanishes() {
        let d = SimplicialComplex::from_facets(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert!(build_W(&d, 2).unwrap().is_zero());
    }

    #[test]
    fn from_parts_rejects_bad_shapes() {
        let mut pieces = BTreeMap::new();
        pieces.insert(1u64, ModulePiece { dimension: 1, representatives: vec![] });
        pieces.insert(3u64, ModulePiece { dimension: 1, representatives: vec![] });
        let mut mult = BTreeMap::new();
        mult.insert((1u64, 1usize), RationalMatrix::zeros(2, 1));
        assert!(matches!(SquareFreeModule::from_parts(2, pieces.clone(), mult), Err(Error::DimensionMismatch(_))));
        let mut mult = BTreeMap::new();
        mult.insert((1u64, 0usize), RationalMatrix::zeros(1, 1));
        assert!(matches!(SquareFreeModule::from_parts(2, pieces, mult), Err(Error::Precondition(_))));
    }

    #[test]
    fn commutativity_violation_names_the_square() {
        // M = k at ∅, {1}, {2}, {1,2} with x_1 x_2 ≠ x_2 x_1
        let one = || ModulePiece { dimension: 1, representatives: vec![] };
        let pieces: BTreeMap<u64, ModulePiece> = [(0, one()), (1, one()), (2, one()), (3, one())].into();
        let id = RationalMatrix::identity(1);
        let neg = RationalMatrix::from_i64(&[vec![-1]]).unwrap();
        let mult: BTreeMap<(u64, usize), RationalMatrix> =
            [((0, 0), id.clone()), ((0, 1), id.clone()), ((1, 1), id.clone()), ((2, 0), neg)].into();
        match SquareFreeModule::from_parts(2, pieces, mult) {
            Err(Error::Internal(msg)) => assert!(msg.contains("j = 1, k = 2"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
