//! Multigraded and single-graded Hilbert series of Koszul modules.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::module::SquareFreeModule;
use super::strand::{koszul_module_dims_all, koszul_module_dims_all_cached, multidegrees_of_total, RankCache};
use crate::bits::{self, popcount};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::all_subset_homology;

/// `Σ_b c_b · t^b / ∏_{j ∈ Supp(b)} (1 - t_j)` over square-free `b`, with `c_b > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HilbertSeriesMulti {
    pub n: usize,
    terms: BTreeMap<u64, u64>,
}

impl HilbertSeriesMulti {
    pub fn new(n: usize, terms: impl IntoIterator<Item = (u64, u64)>) -> Self {
        HilbertSeriesMulti { n, terms: terms.into_iter().filter(|(_, c)| *c > 0).collect() }
    }

    pub fn terms(&self) -> &BTreeMap<u64, u64> {
        &self.terms
    }

    pub fn coefficient(&self, mask: u64) -> u64 {
        self.terms.get(&mask).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> HilbertJson {
        HilbertJson {
            terms: self.terms.iter().map(|(m, c)| HilbertTerm { support: bits::to_vertices(*m), coeff: *c }).collect(),
        }
    }
}

impl fmt::Display for HilbertSeriesMulti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let verts = bits::to_vertices(*m);
                let num: String = if verts.is_empty() {
                    "1".into()
                } else {
                    verts.iter().map(|v| format!("t{v}")).collect::<Vec<_>>().join("*")
                };
                let den: String = verts.iter().map(|v| format!("(1-t{v})")).collect();
                let coeff = if *c == 1 { String::new() } else { format!("{c}*") };
                if den.is_empty() {
                    format!("{coeff}{num}")
                } else {
                    format!("{coeff}{num}/{den}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HilbertTerm {
    pub support: Vec<usize>,
    pub coeff: u64,
}

/// JSON shape `{"terms":[{"support":[...],"coeff":c}, ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HilbertJson {
    pub terms: Vec<HilbertTerm>,
}

/// `c_b = h̃_{i-1}(Δ_b)` for every square-free `b`.
pub fn hilbert_series_combinatorial(complex: &SimplicialComplex, i: usize) -> Result<HilbertSeriesMulti> {
    let table = all_subset_homology(complex, i)?;
    Ok(HilbertSeriesMulti::new(complex.n(), table.iter().map(|(m, v)| (m, v as u64))))
}

/// `c_b = dim M_b`, read off a square-free module.
pub fn hilbert_series_from_module(module: &SquareFreeModule) -> HilbertSeriesMulti {
    HilbertSeriesMulti::new(module.n(), module.pieces().map(|(m, p)| (m, p.dimension as u64)))
}

/// `dim M_a` for total degrees `a = 0..=max_degree`.
///
/// A term `c_b t^b / ∏(1 - t_j)` with `|b| = s ≥ 1` contributes `c_b · C(a-1, s-1)`
/// in each degree `a ≥ s`; the constant term contributes only in degree 0.
pub fn specialize_single(series: &HilbertSeriesMulti, max_degree: usize) -> Result<Vec<u128>> {
    let mut out = vec![0u128; max_degree + 1];
    for (mask, c) in series.terms() {
        let s = popcount(*mask);
        if s == 0 {
            out[0] += *c as u128;
            continue;
        }
        for (a, slot) in out.iter_mut().enumerate().skip(s) {
            let term = binomial_u128(a - 1, s - 1)
                .checked_mul(*c as u128)
                .ok_or_else(|| Error::Internal(format!("Hilbert coefficient overflow in degree {a}")))?;
            *slot = slot.checked_add(term).ok_or_else(|| Error::Internal(format!("Hilbert coefficient overflow in degree {a}")))?;
        }
    }
    Ok(out)
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Single-graded Hilbert function of `W_i(Δ)` by brute force: the strand homology
/// of every multidegree `a ∈ ℕ^n` with `|a| ≤ max_degree`, summed by total degree.
pub fn single_graded_by_strands(complex: &SimplicialComplex, i: usize, max_degree: usize) -> Vec<u128> {
    let n = complex.n();
    (0..=max_degree)
        .map(|total| {
            multidegrees_of_total(n, total as u32)
                .iter()
                .map(|a| koszul_module_dims_all(complex, a).get(i).copied().unwrap_or(0) as u128)
                .sum()
        })
        .collect()
}

/// Single-graded Hilbert functions of `W_p(Δ)` for every weight `p` at once, by brute force.
/// `result[p][a] = dim [W_p(Δ)]_a`.
pub fn single_graded_by_strands_all(complex: &SimplicialComplex, max_degree: usize) -> Vec<Vec<u128>> {
    let n = complex.n();
    let weights = n + 1;
    let mut out = vec![vec![0u128; max_degree + 1]; weights];
    let mut cache = RankCache::new();
    for total in 0..=max_degree {
        for a in multidegrees_of_total(n, total as u32) {
            for (p, d) in koszul_module_dims_all_cached(complex, &a, &mut cache).into_iter().enumerate() {
                if p < weights {
                    out[p][total] += d as u128;
                }
            }
        }
    }
    out
}

/// Chen-rank data of a graph `Γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChenRanks {
    /// `Q_Γ(t) = Σ_j c_j t^j`, `c_j = Σ_{|V'| = j} h̃_0(Γ_{V'})`, indexed by `j`.
    pub q: Vec<u64>,
    /// Hilbert function of `W_Γ = W_1(Γ)(2)`, degrees `0..=max_degree`.
    pub shifted_hilbert: Vec<u128>,
}

impl ChenRanks {
    pub fn q_string(&self) -> String {
        let parts: Vec<String> = self
            .q
            .iter()
            .enumerate()
            .filter(|(_, c)| **c > 0)
            .map(|(j, c)| match j {
                0 => c.to_string(),
                1 => format!("{c}t"),
                _ => format!("{c}t^{j}"),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// `Hilb(W_Γ, t) = t^{-2} Q_Γ(t / (1 - t))` for a graph `Γ`.
pub fn chen_ranks(graph: &SimplicialComplex, max_degree: usize) -> Result<ChenRanks> {
    if graph.dimension().unwrap_or(-1) > 1 {
        return Err(Error::Precondition(format!(
            "Chen ranks need a graph, got a complex of dimension {}",
            graph.dimension().unwrap_or(-1)
        )));
    }
    let table = all_subset_homology(graph, 1)?;
    let mut q = vec![0u64; graph.n() + 1];
    for (mask, v) in table.iter() {
        q[popcount(mask)] += v as u64;
    }
    let series = hilbert_series_combinatorial(graph, 1)?;
    let unshifted = specialize_single(&series, max_degree + 2)?;
    Ok(ChenRanks { q, shifted_hilbert: unshifted[2..].to_vec() })
}

/// `Σ_b c_b` grouped by `|b|`, i.e. the coefficients of `Σ_s N_s (t/(1-t))^s`.
pub fn coefficients_by_size(series: &HilbertSeriesMulti) -> Vec<u64> {
    let mut out = vec![0u64; series.n + 1];
    for (m, c) in series.terms() {
        out[popcount(*m)] += c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::from_vertices;
    use crate::koszul::module::build_W;

    #[test]
    fn c4_multigraded_series() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let h = hilbert_series_combinatorial(&c4, 1).unwrap();
        let expected = HilbertSeriesMulti::new(4, [(from_vertices(&[1, 3]), 1), (from_vertices(&[2, 4]), 1)]);
        assert_eq!(h, expected);
        assert_eq!(h.to_string(), "t1*t3/(1-t1)(1-t3) + t2*t4/(1-t2)(1-t4)");
        assert_eq!(hilbert_series_from_module(&build_W(&c4, 1).unwrap()), expected);
        assert_eq!(specialize_single(&h, 4).unwrap(), vec![0, 0, 2, 4, 6]);
    }

    #[test]
    fn path4_series() {
        let p = SimplicialComplex::path(4).unwrap();
        let h = hilbert_series_combinatorial(&p, 1).unwrap();
        assert_eq!(coefficients_by_size(&h), vec![0, 0, 3, 2, 0]);
        assert_eq!(specialize_single(&h, 3).unwrap(), vec![0, 0, 3, 8]);
        assert_eq!(single_graded_by_strands(&p, 1, 6), specialize_single(&h, 6).unwrap());
    }

    #[test]
    fn zero_series() {
        let simplex = SimplicialComplex::simplex(4).unwrap();
        for i in 1..=4 {
            let h = hilbert_series_combinatorial(&simplex, i).unwrap();
            assert!(h.is_zero());
            assert_eq!(specialize_single(&h, 5).unwrap(), vec![0; 6]);
        }
    }

    #[test]
    fn weight_zero_is_the_residue_field() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let h = hilbert_series_combinatorial(&c4, 0).unwrap();
        assert_eq!(h, HilbertSeriesMulti::new(4, [(0, 1)]));
        assert_eq!(specialize_single(&h, 3).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn chen_ranks_examples() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let chen = chen_ranks(&c4, 4).unwrap();
        assert_eq!(chen.q, vec![0, 0, 2, 0, 0]);
        assert_eq!(chen.q_string(), "2t^2");
        assert_eq!(chen.shifted_hilbert, vec![2, 4, 6, 8, 10]);

        let k5 = SimplicialComplex::complete_graph(5).unwrap();
        let chen = chen_ranks(&k5, 6).unwrap();
        assert!(chen.q.iter().all(|c| *c == 0));
        assert!(chen.shifted_hilbert.iter().all(|c| *c == 0));

        let p = SimplicialComplex::path(4).unwrap();
        assert_eq!(chen_ranks(&p, 2).unwrap().q_string(), "3t^2 + 2t^3");

        let tri = SimplicialComplex::simplex(3).unwrap();
        assert!(matches!(chen_ranks(&tri, 3), Err(Error::Precondition(_))));
    }
}
