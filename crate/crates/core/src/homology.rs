//! Reduced simplicial homology over ℚ.
//!
//! The augmented chain complex is used throughout, so `{∅}` has
//! `h̃_{-1} = 1` and the void complex has no homology in any degree.
//! Boundary signs: `∂[j_1 < … < j_s] = Σ_r (-1)^{r-1} [… ĵ_r …]`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::bits::{self, popcount};
use crate::complex::{SimplicialComplex, SquareFreeDegree, SUBSET_GUARD};
use crate::error::{Error, Result};
use crate::exactlin::{rat, RationalMatrix};

/// Reduced Betti numbers `h̃_i`, `i ≥ -1`, of one complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomologyProfile {
    /// Vertex support the complex lives on.
    pub vertex_set: u64,
    /// `dims[k]` is `h̃_{k-1}`.
    dims: Vec<usize>,
}

impl ReducedHomologyProfile {
    /// `h̃_i`; zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(i, h̃_i)`.
    pub fn nonzero(&self) -> Vec<(isize, usize)> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, d)| **d > 0)
            .map(|(k, d)| (k as isize - 1, *d))
            .collect()
    }

    /// Entries `(i, h̃_i)` for `-1 ≤ i ≤ top`.
    pub fn entries(&self) -> Vec<(isize, usize)> {
        self.dims.iter().enumerate().map(|(k, d)| (k as isize - 1, *d)).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|d| *d == 0)
    }

    /// `Σ_i (-1)^i h̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.entries().iter().map(|(i, d)| if i.rem_euclid(2) == 0 { *d as i64 } else { -(*d as i64) }).sum()
    }
}

/// Boundary matrix from faces of size `size` to faces of size `size - 1`.
fn boundary_matrix(upper: &[u64], lower: &[u64]) -> RationalMatrix {
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut m = RationalMatrix::zeros(lower.len(), upper.len());
    for (col, &face) in upper.iter().enumerate() {
        for (r, bit) in bits::bit_positions(face).enumerate() {
            let row = index[&(face & !(1u64 << bit))];
            m.set(row, col, rat(bits::sign(r)));
        }
    }
    m
}

/// Coboundary matrix from faces of size `size` to faces of size `size + 1`,
/// built directly from `δ[σ] = Σ_{j ∉ σ} (-1)^{#{s ∈ σ : s < j}} [σ ∪ j]`.
fn coboundary_matrix(lower: &[u64], upper: &[u64]) -> RationalMatrix {
    let index: HashMap<u64, usize> = upper.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut m = RationalMatrix::zeros(upper.len(), lower.len());
    for (col, &face) in lower.iter().enumerate() {
        for bit in 0..64 {
            if face & (1u64 << bit) != 0 {
                continue;
            }
            if let Some(&row) = index.get(&(face | (1u64 << bit))) {
                m.set(row, col, rat(bits::sign(bits::rank_below(face, bit))));
            }
        }
    }
    m
}

/// Reduced homology of `Δ` over ℚ.
pub fn reduced_homology(complex: &SimplicialComplex) -> ReducedHomologyProfile {
    let top = complex.f_vector().len();
    let layers: Vec<&[u64]> = (0..top).map(|s| complex.faces_of_size(s)).collect();
    let ranks: Vec<usize> = (1..top).map(|s| boundary_matrix(layers[s], layers[s - 1]).rank()).collect();
    // ranks[s-1] is the rank of ∂ from size s to size s-1
    let dims = (0..top)
        .map(|s| {
            let outgoing = if s >= 1 { ranks[s - 1] } else { 0 };
            let incoming = ranks.get(s).copied().unwrap_or(0);
            layers[s].len() - outgoing - incoming
        })
        .collect();
    ReducedHomologyProfile { vertex_set: complex.vertex_set(), dims }
}

/// Reduced cohomology dimensions `h̃^i`, computed from coboundary matrices.
pub fn reduced_cohomology(complex: &SimplicialComplex) -> ReducedHomologyProfile {
    let top = complex.f_vector().len();
    let layers: Vec<&[u64]> = (0..top).map(|s| complex.faces_of_size(s)).collect();
    // delta[s] : size s -> size s+1
    let ranks: Vec<usize> = (0..top.saturating_sub(1)).map(|s| coboundary_matrix(layers[s], layers[s + 1]).rank()).collect();
    let dims = (0..top)
        .map(|s| {
            let outgoing = ranks.get(s).copied().unwrap_or(0);
            let incoming = if s >= 1 { ranks[s - 1] } else { 0 };
            layers[s].len() - outgoing - incoming
        })
        .collect();
    ReducedHomologyProfile { vertex_set: complex.vertex_set(), dims }
}

/// `h̃_k(Δ_B)` for a single vertex mask `B`, without materializing `Δ_B`.
pub fn restricted_homology_dim(complex: &SimplicialComplex, mask: u64, k: isize) -> usize {
    if k < -1 {
        return 0;
    }
    let size = (k + 1) as usize;
    let pick = |s: usize| -> Vec<u64> {
        complex.faces_of_size(s).iter().copied().filter(|f| f & !mask == 0).collect()
    };
    let middle = pick(size);
    if middle.is_empty() {
        return 0;
    }
    let lower = if size == 0 { Vec::new() } else { pick(size - 1) };
    let upper = pick(size + 1);
    let out_rank = if size == 0 { 0 } else { boundary_matrix(&middle, &lower).rank() };
    let in_rank = boundary_matrix(&upper, &middle).rank();
    middle.len() - out_rank - in_rank
}

/// `b ↦ h̃_{i-1}(Δ_b)` for every square-free `b`, indexed by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetHomology {
    pub n: usize,
    pub i: usize,
    values: Vec<usize>,
}

impl SubsetHomology {
    pub fn get(&self, b: SquareFreeDegree) -> usize {
        self.values[b.mask() as usize]
    }

    pub fn get_mask(&self, mask: u64) -> usize {
        self.values[mask as usize]
    }

    /// Nonzero entries in ascending mask order.
    pub fn nonzero(&self) -> BTreeMap<u64, usize> {
        self.values.iter().enumerate().filter(|(_, v)| **v > 0).map(|(m, v)| (m as u64, *v)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, usize)> + '_ {
        self.values.iter().enumerate().map(|(m, v)| (m as u64, *v))
    }
}

type CacheKey = (usize, Vec<u64>, usize);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<SubsetHomology>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<SubsetHomology>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `h̃_{i-1}(Δ_b)` for every square-free `b`, memoized per (complex, i).
pub fn all_subset_homology(complex: &SimplicialComplex, i: usize) -> Result<Arc<SubsetHomology>> {
    all_subset_homology_guarded(complex, i, SUBSET_GUARD)
}

pub fn all_subset_homology_guarded(complex: &SimplicialComplex, i: usize, guard: usize) -> Result<Arc<SubsetHomology>> {
    let n = complex.n();
    if n > guard {
        return Err(Error::GuardExceeded { n, limit: guard });
    }
    let key: CacheKey = (n, complex.facet_masks().to_vec(), i);
    if let Some(hit) = cache().lock().expect("cache poisoned").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let k = i as isize - 1;
    let values: Vec<usize> = (0..(1u64 << n))
        .into_par_iter()
        .map(|mask| {
            if (popcount(mask) as isize) < k + 1 {
                0
            } else {
                restricted_homology_dim(complex, mask, k)
            }
        })
        .collect();
    let result = Arc::new(SubsetHomology { n, i, values });
    cache().lock().expect("cache poisoned").insert(key, Arc::clone(&result));
    Ok(result)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::bits::from_vertices;
    use proptest::prelude::*;

    #[test]
    fn basic_profiles() {
        let pts = SimplicialComplex::from_facets(2, &[vec![1], vec![2]]).unwrap();
        assert_eq!(reduced_homology(&pts).nonzero(), vec![(0, 1)]);
        let c3 = SimplicialComplex::cycle(3).unwrap();
        let h = reduced_homology(&c3);
        assert_eq!(h.get(1), 1);
        assert_eq!(h.get(0), 0);
        let irr = SimplicialComplex::irrelevant(3).unwrap();
        assert_eq!(reduced_homology(&irr).nonzero(), vec![(-1, 1)]);
        let void = SimplicialComplex::void(3).unwrap();
        assert!(reduced_homology(&void).is_acyclic());
        let simplex = SimplicialComplex::simplex(4).unwrap();
        assert!(reduced_homology(&simplex).is_acyclic());
        let sphere = SimplicialComplex::simplex_boundary(4).unwrap();
        assert_eq!(reduced_homology(&sphere).nonzero(), vec![(2, 1)]);
    }

    #[test]
    fn subset_homology_c4() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let h = all_subset_homology(&c4, 1).unwrap();
        let expected: BTreeMap<u64, usize> = [(from_vertices(&[1, 3]), 1), (from_vertices(&[2, 4]), 1)].into();
        assert_eq!(h.nonzero(), expected);
    }

    #[test]
    fn subset_homology_path4() {
        let p = SimplicialComplex::path(4).unwrap();
        let h = all_subset_homology(&p, 1).unwrap();
        let expected: BTreeMap<u64, usize> =
            [[1, 3].as_slice(), &[1, 4], &[2, 4], &[1, 2, 4], &[1, 3, 4]].iter().map(|v| (from_vertices(v), 1)).collect();
        assert_eq!(h.nonzero(), expected);
    }

    #[test]
    fn subset_homology_simplex_vanishes() {
        let s = SimplicialComplex::simplex(5).unwrap();
        for i in 1..=5 {
            assert!(all_subset_homology(&s, i).unwrap().nonzero().is_empty());
        }
    }

    #[test]
    fn guard_is_enforced() {
        let c = SimplicialComplex::cycle(6).unwrap();
        assert!(matches!(all_subset_homology_guarded(&c, 1, 5), Err(Error::GuardExceeded { n: 6, limit: 5 })));
    }

    #[test]
    fn restricted_matches_materialized() {
        let t = SimplicialComplex::from_facets(5, &[vec![1, 2, 3], vec![3, 4], vec![4, 5], vec![1, 5]]).unwrap();
        for mask in 0..32u64 {
            let prof = reduced_homology(&t.restrict_mask(mask));
            for k in -1..3 {
                assert_eq!(restricted_homology_dim(&t, mask, k), prof.get(k), "mask {mask} k {k}");
            }
        }
    }

    pub(crate) fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0u64..(1u64 << n), 0..8)
                .prop_map(move |gens| SimplicialComplex::from_facet_masks(n, bits::full_mask(n), &gens))
        })
    }

    proptest! {
        #[test]
        fn euler_characteristic_matches_f_vector(c in arb_complex(7)) {
            let h = reduced_homology(&c);
            // faces of size s have dimension s - 1
            let f: i64 = c.f_vector().iter().enumerate().map(|(s, cnt)| {
                let dim = s as i64 - 1;
                if dim.rem_euclid(2) == 0 { *cnt as i64 } else { -(*cnt as i64) }
            }).sum();
            prop_assert_eq!(h.euler_characteristic(), f);
        }

        #[test]
        fn homology_equals_cohomology(c in arb_complex(8)) {
            let h = reduced_homology(&c);
            let co = reduced_cohomology(&c);
            prop_assert_eq!(h.entries(), co.entries());
        }
    }
}
