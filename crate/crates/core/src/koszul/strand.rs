//! Multidegree strands of the two Koszul-type complexes used in this crate:
//! the `Δ`-restricted Koszul complex `K^Δ` (whose homology is `W_i(Δ)`), and
//! the Koszul complex `k[Δ] ⊗ ΛV` computing `Tor^S(k, k[Δ])`.
//!
//! Both are built from monomial arithmetic on explicit bases, for arbitrary
//! (not necessarily square-free) multidegrees.

use std::collections::HashMap;

use crate::bits::{self, popcount};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exactlin::{self, rat, Homology, Rational, RationalMatrix};

/// Exponent vector of a monomial / multidegree in `ℕ^n`.
pub type Multidegree = Vec<u32>;

pub fn support_mask(a: &[u32]) -> u64 {
    a.iter().enumerate().filter(|(_, e)| **e > 0).fold(0u64, |acc, (j, _)| acc | (1u64 << j))
}

pub fn square_free(n: usize, mask: u64) -> Multidegree {
    (0..n).map(|j| ((mask >> j) & 1) as u32).collect()
}

/// `a - e_σ`, or `None` if some coordinate would go negative.
fn minus_face(a: &[u32], face: u64) -> Option<Multidegree> {
    let mut out = a.to_vec();
    for j in bits::bit_positions(face) {
        if out[j] == 0 {
            return None;
        }
        out[j] -= 1;
    }
    Some(out)
}

/// All multidegrees in `ℕ^n` of total degree `total`, in lex order.
pub fn multidegrees_of_total(n: usize, total: u32) -> Vec<Multidegree> {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Multidegree>) {
        if prefix.len() == n - 1 {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, total, &mut Vec::with_capacity(n), &mut out);
    out
}

/// A basis element `e_σ ⊗ x^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrandBasisElement {
    pub face: u64,
    pub monomial: Multidegree,
}

/// Basis of `[A_p ⊗ S]_a`: faces `σ ∈ Δ`, `|σ| = p`, with `x^{a - e_σ}`.
pub fn koszul_basis(complex: &SimplicialComplex, a: &[u32], p: usize) -> Vec<StrandBasisElement> {
    let supp = support_mask(a);
    complex
        .faces_of_size(p)
        .iter()
        .filter(|f| **f & !supp == 0)
        .filter_map(|&face| minus_face(a, face).map(|monomial| StrandBasisElement { face, monomial }))
        .collect()
}

/// Matrix of `∂(e_σ ⊗ m) = Σ_r (-1)^{r-1} e_{σ∖j_r} ⊗ x_{j_r} m` between two bases.
fn koszul_map(upper: &[StrandBasisElement], lower: &[StrandBasisElement]) -> RationalMatrix {
    let index: HashMap<&StrandBasisElement, usize> = lower.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut m = RationalMatrix::zeros(lower.len(), upper.len());
    for (col, el) in upper.iter().enumerate() {
        for (r, j) in bits::bit_positions(el.face).enumerate() {
            let mut monomial = el.monomial.clone();
            monomial[j] += 1;
            let target = StrandBasisElement { face: el.face & !(1u64 << j), monomial };
            let row = *index.get(&target).expect("Koszul boundary stays inside the complex");
            m.set(row, col, rat(bits::sign(r)));
        }
    }
    m
}

/// `[A_{i+1} ⊗ S]_a → [A_i ⊗ S]_a → [A_{i-1} ⊗ S]_a`.
#[derive(Clone, Debug)]
pub struct StrandComplex {
    pub degree: Multidegree,
    pub position: usize,
    pub upper: Vec<StrandBasisElement>,
    pub middle: Vec<StrandBasisElement>,
    pub lower: Vec<StrandBasisElement>,
    pub d_in: RationalMatrix,
    pub d_out: RationalMatrix,
}

impl StrandComplex {
    pub fn new(complex: &SimplicialComplex, position: usize, a: &[u32]) -> Self {
        let upper = koszul_basis(complex, a, position + 1);
        let middle = koszul_basis(complex, a, position);
        let lower = if position == 0 { Vec::new() } else { koszul_basis(complex, a, position - 1) };
        let d_in = koszul_map(&upper, &middle);
        let d_out = koszul_map(&middle, &lower);
        StrandComplex { degree: a.to_vec(), position, upper, middle, lower, d_in, d_out }
    }

    pub fn homology(&self) -> Result<Homology> {
        exactlin::homology(&self.d_in, &self.d_out)
    }

    pub fn homology_dim(&self) -> Result<usize> {
        exactlin::homology_dim(&self.d_in, &self.d_out)
    }

    /// Index of `e_σ ⊗ x^m` in the middle basis.
    pub fn middle_index(&self) -> HashMap<&StrandBasisElement, usize> {
        self.middle.iter().enumerate().map(|(i, e)| (e, i)).collect()
    }
}

/// `dim [W_i(Δ)]_a` for any multidegree `a`.
pub fn koszul_module_dim(complex: &SimplicialComplex, i: usize, a: &[u32]) -> Result<usize> {
    StrandComplex::new(complex, i, a).homology_dim()
}

/// Dimensions of `[W_p(Δ)]_a` for all positions `p` at once.
pub fn koszul_module_dims_all(complex: &SimplicialComplex, a: &[u32]) -> Vec<usize> {
    let supp = popcount(support_mask(a));
    let top = supp.min(complex.f_vector().len().saturating_sub(1));
    let bases: Vec<Vec<StrandBasisElement>> = (0..=top + 1).map(|p| koszul_basis(complex, a, p)).collect();
    // ranks[p] = rank of ∂ from position p to p-1 (ranks[0] = 0)
    let mut ranks = vec![0usize; top + 2];
    for p in 1..=top + 1 {
        ranks[p] = koszul_map(&bases[p], &bases[p - 1]).rank();
    }
    (0..=top).map(|p| bases[p].len() - ranks[p] - ranks[p + 1]).collect()
}

/// Memoized ranks of strand differentials, keyed by the full matrix content.
#[derive(Default)]
pub struct RankCache {
    ranks: HashMap<(usize, usize, Vec<(usize, usize, bool)>), usize>,
}

impl RankCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&mut self, m: &RationalMatrix) -> usize {
        let mut entries: Vec<(usize, usize, bool)> =
            m.entries().map(|(r, c, v)| (r, c, *v > Rational::from_integer(0.into()))).collect();
        entries.sort_unstable();
        *self.ranks.entry((m.rows(), m.cols(), entries)).or_insert_with(|| m.rank())
    }
}

/// [`koszul_module_dims_all`] with ranks shared through `cache`.
pub fn koszul_module_dims_all_cached(complex: &SimplicialComplex, a: &[u32], cache: &mut RankCache) -> Vec<usize> {
    let supp = popcount(support_mask(a));
    let top = supp.min(complex.f_vector().len().saturating_sub(1));
    let bases: Vec<Vec<StrandBasisElement>> = (0..=top + 1).map(|p| koszul_basis(complex, a, p)).collect();
    let mut ranks = vec![0usize; top + 2];
    for p in 1..=top + 1 {
        ranks[p] = cache.rank(&koszul_map(&bases[p], &bases[p - 1]));
    }
    (0..=top).map(|p| bases[p].len() - ranks[p] - ranks[p + 1]).collect()
}

/// Basis of `[k[Δ] ⊗ Λ^p V]_a`: subsets `F`, `|F| = p`, with `x^{a - e_F}` nonzero in `k[Δ]`.
fn tor_basis(complex: &SimplicialComplex, a: &[u32], p: usize) -> Vec<StrandBasisElement> {
    let n = a.len();
    let supp = support_mask(a);
    bits::subsets_of_size(n, p)
        .into_iter()
        .filter(|f| f & !supp == 0)
        .filter_map(|face| minus_face(a, face).map(|monomial| StrandBasisElement { face, monomial }))
        .filter(|el| complex.contains(support_mask(&el.monomial)))
        .collect()
}

/// `d(e_F ⊗ m) = Σ_r (-1)^{r-1} e_{F∖f_r} ⊗ x_{f_r} m`, dropping monomials that vanish in `k[Δ]`.
fn tor_map(complex: &SimplicialComplex, upper: &[StrandBasisElement], lower: &[StrandBasisElement]) -> RationalMatrix {
    let index: HashMap<&StrandBasisElement, usize> = lower.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut m = RationalMatrix::zeros(lower.len(), upper.len());
    for (col, el) in upper.iter().enumerate() {
        for (r, j) in bits::bit_positions(el.face).enumerate() {
            let mut monomial = el.monomial.clone();
            monomial[j] += 1;
            if !complex.contains(support_mask(&monomial)) {
                continue;
            }
            let target = StrandBasisElement { face: el.face & !(1u64 << j), monomial };
            let row = *index.get(&target).expect("target monomial is nonzero in k[Δ]");
            m.set(row, col, rat(bits::sign(r)));
        }
    }
    m
}

/// `dim [Tor^S_j(k, k[Δ])]_a`, from the Koszul complex of `k[Δ]` in multidegree `a`.
pub fn tor_stanley_reisner(complex: &SimplicialComplex, j: usize, a: &[u32]) -> Result<usize> {
    if a.len() != complex.n() {
        return Err(Error::DimensionMismatch(format!("multidegree of length {} for n = {}", a.len(), complex.n())));
    }
    let upper = tor_basis(complex, a, j + 1);
    let middle = tor_basis(complex, a, j);
    let lower = if j == 0 { Vec::new() } else { tor_basis(complex, a, j - 1) };
    let d_in = tor_map(complex, &upper, &middle);
    let d_out = tor_map(complex, &middle, &lower);
    exactlin::homology_dim(&d_in, &d_out)
}
