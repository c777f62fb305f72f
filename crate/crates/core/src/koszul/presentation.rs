//! Linear presentations of top-degree Koszul modules.
//!
//! For `Δ` with complete `(d-1)`-skeleton, `W_d(Δ)` is the cokernel of
//! `V_{d+2} ⊗ S → V_{d+1} ⊗ S`, where `V_i` is spanned by the `i`-dimensional
//! missing faces of the flag-type completion `Δ̃`. The module for a general
//! subspace `K ⊆ Λ^{d+1}V` is handled by [`pair_module_hilbert`].

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::strand::{multidegrees_of_total, Multidegree};
use crate::bits::{self, popcount};
use crate::complex::{join_vertices, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactlin::{rat, Rational, RationalMatrix};

/// One entry `sign · x_{var}` of a presentation matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinearEntry {
    pub row: usize,
    pub col: usize,
    pub sign: i64,
    /// 0-based variable index.
    pub var: usize,
}

/// Matrix of linear forms with rows indexed by missing `d`-faces and columns by
/// missing `(d+1)`-faces of `Δ̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatrix {
    pub n: usize,
    pub d: usize,
    pub rows: Vec<u64>,
    pub cols: Vec<u64>,
    pub entries: Vec<LinearEntry>,
}

impl PresentationMatrix {
    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    /// Dense form with entries `Some((sign, var))`.
    pub fn dense(&self) -> Vec<Vec<Option<(i64, usize)>>> {
        let mut out = vec![vec![None; self.cols.len()]; self.rows.len()];
        for e in &self.entries {
            out[e.row][e.col] = Some((e.sign, e.var));
        }
        out
    }

    /// The `S`-linear map in multidegree `a`: columns `(σ, x^{a - e_σ})`, rows `(τ, x^{a - e_τ})`.
    fn strand(&self, a: &[u32]) -> (usize, RationalMatrix) {
        let basis = |faces: &[u64]| -> Vec<(usize, Multidegree)> {
            faces
                .iter()
                .enumerate()
                .filter_map(|(idx, f)| {
                    let mut m = a.to_vec();
                    for j in bits::bit_positions(*f) {
                        if m[j] == 0 {
                            return None;
                        }
                        m[j] -= 1;
                    }
                    Some((idx, m))
                })
                .collect()
        };
        let row_basis = basis(&self.rows);
        let col_basis = basis(&self.cols);
        let row_index: HashMap<(usize, &Multidegree), usize> =
            row_basis.iter().enumerate().map(|(k, (idx, m))| ((*idx, m), k)).collect();
        let col_index: HashMap<usize, Vec<(usize, &Multidegree)>> =
            col_basis.iter().enumerate().fold(HashMap::new(), |mut acc, (k, (idx, m))| {
                acc.entry(*idx).or_default().push((k, m));
                acc
            });
        let mut mat = RationalMatrix::zeros(row_basis.len(), col_basis.len());
        for e in &self.entries {
            for (k, m) in col_index.get(&e.col).into_iter().flatten() {
                let mut target = (*m).clone();
                target[e.var] += 1;
                if let Some(&r) = row_index.get(&(e.row, &target)) {
                    mat.set(r, *k, rat(e.sign));
                }
            }
        }
        (row_basis.len(), mat)
    }

    /// Hilbert function of the cokernel in total degrees `0..=max_degree`
    /// (generators sit in degree `d + 1`).
    pub fn cokernel_hilbert(&self, max_degree: usize) -> Vec<u128> {
        (0..=max_degree)
            .map(|total| {
                multidegrees_of_total(self.n, total as u32)
                    .iter()
                    .map(|a| {
                        let (rows, m) = self.strand(a);
                        (rows - m.rank()) as u128
                    })
                    .sum()
            })
            .collect()
    }
}

impl fmt::Display for PresentationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (r, c) = self.shape();
        writeln!(f, "{r} x {c} presentation (d = {})", self.d)?;
        let cols: Vec<String> = self.cols.iter().map(|m| format!("{{{}}}", join_vertices(*m))).collect();
        writeln!(f, "columns: {}", cols.join(" "))?;
        for (ri, row) in self.dense().into_iter().enumerate() {
            let cells: Vec<String> = row
                .into_iter()
                .map(|e| match e {
                    None => "0".into(),
                    Some((1, v)) => format!("x{}", v + 1),
                    Some((_, v)) => format!("-x{}", v + 1),
                })
                .collect();
            writeln!(f, "{{{}}}: [{}]", join_vertices(self.rows[ri]), cells.join(", "))?;
        }
        Ok(())
    }
}

/// The linear presentation of `W_d(Δ)`, `d = skeleton_complete_degree(Δ) ≥ 1`.
pub fn presentation_matrix(complex: &SimplicialComplex) -> Result<PresentationMatrix> {
    let d = match complex.skeleton_complete_degree()? {
        Some(d) if d >= 1 => d,
        Some(d) => return Err(Error::Precondition(format!("presentation needs a complete skeleton of degree >= 1, got {d}"))),
        None => return Err(Error::Precondition("complex does not have a complete codimension-one skeleton".into())),
    };
    let n = complex.n();
    let completion = complex.flag_completion()?;
    let rows = completion.missing_faces(d);
    let cols = completion.missing_faces(d + 1);
    let row_index: HashMap<u64, usize> = rows.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut entries = Vec::new();
    for (c, sigma) in cols.iter().enumerate() {
        for (r, j) in bits::bit_positions(*sigma).enumerate() {
            if let Some(&row) = row_index.get(&(sigma & !(1u64 << j))) {
                entries.push(LinearEntry { row, col: c, sign: bits::sign(r), var: j });
            }
        }
    }
    Ok(PresentationMatrix { n, d, rows, cols, entries })
}

/// All monomials of total degree `m` in `n` variables, with an index.
fn monomial_index(n: usize, m: usize) -> (Vec<Multidegree>, HashMap<Multidegree, usize>) {
    let list = multidegrees_of_total(n, m as u32);
    let index = list.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    (list, index)
}

/// Hilbert function of `W_d(V, K) = coker(Λ^{d+2}V ⊗ S → (Λ^{d+1}V / K) ⊗ S)` in total
/// degrees `0..=max_degree`, with `Λ^{d+1}V` placed in degree `d + 1`.
///
/// `k_basis` holds coordinate vectors in the basis of `(d+1)`-subsets of `[n]` in lex order.
pub fn pair_module_hilbert(n: usize, d: usize, k_basis: &[Vec<Rational>], max_degree: usize) -> Result<Vec<u128>> {
    if n == 0 || n > 12 {
        return Err(Error::InvalidVertexCount(n));
    }
    let mut wedge = bits::subsets_of_size(n, d + 1);
    wedge.sort_by(|a, b| bits::lex_cmp(*a, *b));
    let wedge_index: HashMap<u64, usize> = wedge.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    for (i, v) in k_basis.iter().enumerate() {
        if v.len() != wedge.len() {
            return Err(Error::DimensionMismatch(format!(
                "vector {i} of K has length {}, expected {}",
                v.len(),
                wedge.len()
            )));
        }
    }
    let mut upper = bits::subsets_of_size(n, d + 2);
    upper.sort_by(|a, b| bits::lex_cmp(*a, *b));

    let mut out = vec![0u128; max_degree + 1];
    for (total, slot) in out.iter_mut().enumerate() {
        if total < d + 1 {
            continue;
        }
        let m = total - d - 1;
        let (monos, mono_index) = monomial_index(n, m);
        let rows = wedge.len() * monos.len();
        let mut columns: Vec<Vec<(usize, Rational)>> = Vec::new();
        // K ⊗ S_m
        for v in k_basis {
            for (mi, _) in monos.iter().enumerate() {
                columns.push(
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                        .map(|(w, c)| (w * monos.len() + mi, c.clone()))
                        .collect(),
                );
            }
        }
        // ∂(Λ^{d+2} ⊗ S_{m-1})
        if m >= 1 {
            let (lower_monos, _) = monomial_index(n, m - 1);
            for sigma in &upper {
                for mono in &lower_monos {
                    let mut col = Vec::new();
                    for (r, j) in bits::bit_positions(*sigma).enumerate() {
                        let mut target = mono.clone();
                        target[j] += 1;
                        let w = wedge_index[&(sigma & !(1u64 << j))];
                        col.push((w * monos.len() + mono_index[&target], rat(bits::sign(r))));
                    }
                    columns.push(col);
                }
            }
        }
        let mut mat = RationalMatrix::zeros(rows, columns.len());
        for (c, col) in columns.into_iter().enumerate() {
            for (r, v) in col {
                mat.set(r, c, v);
            }
        }
        *slot = (rows - mat.rank()) as u128;
    }
    Ok(out)
}

/// Coordinate vectors of the faces of `Δ` of size `d + 1`, the monomial `K` attached to `Δ`.
pub fn monomial_subspace(complex: &SimplicialComplex, d: usize) -> Vec<Vec<Rational>> {
    let mut wedge = bits::subsets_of_size(complex.n(), d + 1);
    wedge.sort_by(|a, b| bits::lex_cmp(*a, *b));
    complex
        .faces_of_size(d + 1)
        .iter()
        .map(|f| wedge.iter().map(|w| if w == f { rat(1) } else { rat(0) }).collect())
        .collect()
}

/// Check that every row of the presentation is a missing face of size `d + 1`.
pub fn rows_are_missing_faces(complex: &SimplicialComplex, p: &PresentationMatrix) -> bool {
    p.rows.iter().all(|r| popcount(*r) == p.d + 1 && !complex.contains(*r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koszul::hilbert::{hilbert_series_combinatorial, specialize_single};

    #[test]
    fn path4_shape() {
        let p = SimplicialComplex::path(4).unwrap();
        let m = presentation_matrix(&p).unwrap();
        assert_eq!(m.shape(), (3, 4));
        assert!(rows_are_missing_faces(&p, &m));
        assert_eq!(m.entries.len(), 6);
        let expected = specialize_single(&hilbert_series_combinatorial(&p, 1).unwrap(), 7).unwrap();
        assert_eq!(m.cokernel_hilbert(7), expected);
    }

    #[test]
    fn c4_and_complete_graph() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let m = presentation_matrix(&c4).unwrap();
        assert_eq!(m.shape(), (2, 4));
        assert_eq!(m.cokernel_hilbert(6), vec![0, 0, 2, 4, 6, 8, 10]);
        let k5 = SimplicialComplex::complete_graph(5).unwrap();
        let m = presentation_matrix(&k5).unwrap();
        assert_eq!(m.shape(), (0, 0));
        assert_eq!(m.cokernel_hilbert(4), vec![0; 5]);
    }

    #[test]
    fn presentation_needs_full_skeleton() {
        let c = SimplicialComplex::from_facets(4, &[vec![1, 2], vec![3]]).unwrap();
        assert!(matches!(presentation_matrix(&c), Err(Error::Precondition(_))));
    }

    #[test]
    fn tetra_minus_face_presentation() {
        let t = SimplicialComplex::from_facets(4, &[vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]).unwrap();
        let m = presentation_matrix(&t).unwrap();
        assert_eq!(m.d, 2);
        assert_eq!(m.shape(), (1, 1));
        assert_eq!(m.entries, vec![LinearEntry { row: 0, col: 0, sign: -1, var: 3 }]);
        let expected = specialize_single(&hilbert_series_combinatorial(&t, 2).unwrap(), 6).unwrap();
        assert_eq!(m.cokernel_hilbert(6), expected);
    }

    #[test]
    fn pair_module_extremes() {
        let full: Vec<Vec<Rational>> = (0..3).map(|i| (0..3).map(|j| rat((i == j) as i64)).collect()).collect();
        assert_eq!(pair_module_hilbert(3, 1, &full, 5).unwrap(), vec![0; 6]);
        let zero = pair_module_hilbert(3, 1, &[], 4).unwrap();
        assert_eq!(zero[..4], [0, 0, 3, 8]);
        let isolated = SimplicialComplex::from_facets(3, &[vec![1], vec![2], vec![3]]).unwrap();
        let expected = specialize_single(&hilbert_series_combinatorial(&isolated, 1).unwrap(), 4).unwrap();
        assert_eq!(zero, expected);
        assert!(matches!(pair_module_hilbert(3, 1, &[vec![rat(1)]], 3), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn pair_module_matches_graphs() {
        for g in [SimplicialComplex::cycle(4).unwrap(), SimplicialComplex::path(4).unwrap(), SimplicialComplex::cycle(5).unwrap()] {
            let k = monomial_subspace(&g, 1);
            let expected = specialize_single(&hilbert_series_combinatorial(&g, 1).unwrap(), 5).unwrap();
            assert_eq!(pair_module_hilbert(g.n(), 1, &k, 5).unwrap(), expected);
        }
    }

    #[test]
    fn pair_module_non_monomial() {
        // K spanned by e12 + e34 on four vertices
        let mut v = vec![rat(0); 6];
        v[0] = rat(1);
        v[5] = rat(1);
        let h = pair_module_hilbert(4, 1, &[v], 4).unwrap();
        assert_eq!(h[2], 5);
        assert!(h[3] < pair_module_hilbert(4, 1, &[], 4).unwrap()[3]);
    }
}
