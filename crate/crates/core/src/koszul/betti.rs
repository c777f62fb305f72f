//! Graded Betti numbers of square-free modules, and the checks built on them.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::module::{build_W, SquareFreeModule};
use super::strand::{multidegrees_of_total, square_free, support_mask, tor_stanley_reisner, StrandComplex};
use crate::bits::{self, popcount};
use crate::complex::{join_vertices, SimplicialComplex, SquareFreeDegree};
use crate::error::{Error, Result};
use crate::exactlin::{rat, RationalMatrix};
use crate::homology::reduced_homology;

/// `β_{h,b} = dim Tor^S_h(M, k)_b` over square-free `b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    entries: BTreeMap<(usize, u64), usize>,
}

impl BettiTable {
    pub fn entries(&self) -> &BTreeMap<(usize, u64), usize> {
        &self.entries
    }

    pub fn get(&self, h: usize, mask: u64) -> usize {
        self.entries.get(&(h, mask)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max(|b| - h)` over nonzero entries; `None` (−∞) for the zero module.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|(h, b)| popcount(*b) as i64 - *h as i64).max()
    }

    /// Regularity of the module shifted by `(shift)`, i.e. with degrees lowered by `shift`.
    pub fn regularity_shifted(&self, shift: i64) -> Option<i64> {
        self.regularity().map(|r| r - shift)
    }

    /// `max h` over nonzero entries; `-1` for the zero module.
    pub fn pdim(&self) -> i64 {
        self.entries.keys().map(|(h, _)| *h as i64).max().unwrap_or(-1)
    }

    /// `Σ_b β_{h,b}`.
    pub fn total(&self, h: usize) -> usize {
        self.entries.iter().filter(|((hh, _), _)| *hh == h).map(|(_, v)| *v).sum()
    }

    /// Rows `h`, columns `j = |b| - h`, in the usual Macaulay2-style layout.
    pub fn graded_table(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for ((h, b), v) in &self.entries {
            *out.entry((*h, popcount(*b))).or_insert(0) += v;
        }
        out
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            entries: self
                .entries
                .iter()
                .map(|((h, b), v)| BettiEntry { h: *h, support: bits::to_vertices(*b), beta: *v })
                .collect(),
            reg: match self.regularity() {
                Some(r) => serde_json::Value::from(r),
                None => serde_json::Value::from("-inf"),
            },
            pdim: self.pdim(),
        }
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "zero module");
        }
        for ((h, b), v) in &self.entries {
            writeln!(f, "beta_{h},{{{}}} = {v}", join_vertices(*b))?;
        }
        write!(f, "reg = {}, pdim = {}", self.regularity().expect("nonzero"), self.pdim())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BettiEntry {
    pub h: usize,
    pub support: Vec<usize>,
    pub beta: usize,
}

/// JSON shape `{"entries":[{"h":h,"support":[...],"beta":b}...],"reg":r,"pdim":p}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BettiJson {
    pub entries: Vec<BettiEntry>,
    pub reg: serde_json::Value,
    pub pdim: i64,
}

/// Differential `C_h → C_{h-1}` of the degree-`a` Koszul strand
/// `C_h = ⊕_{|F| = h, e_F ≤ a} M_{a - e_F}`: the `(F, F∖f_r)` block is `(-1)^{r-1} x_{f_r}`.
/// Pieces at non-square-free degrees are read off their supports, with `x_j` acting
/// as the identity when `j` is already in the support.
fn tor_differential(module: &SquareFreeModule, a: &[u32], h: usize) -> (RationalMatrix, usize) {
    let supp = support_mask(a);
    let layout = |size: usize| -> (Vec<(u64, u64, usize)>, usize) {
        let mut offset = 0;
        let mut blocks = Vec::new();
        for f in bits::subsets_of_size(module.n(), size) {
            if f & !supp != 0 {
                continue;
            }
            let c = bits::bit_positions(supp).filter(|&j| f & (1u64 << j) == 0 || a[j] >= 2).fold(0u64, |m, j| m | (1u64 << j));
            let d = module.dim(c);
            if d > 0 {
                blocks.push((f, c, offset));
                offset += d;
            }
        }
        (blocks, offset)
    };
    let (upper, up_dim) = layout(h);
    let (lower, low_dim) = if h == 0 { (Vec::new(), 0) } else { layout(h - 1) };
    let lower_index: BTreeMap<u64, usize> = lower.into_iter().map(|(f, _, off)| (f, off)).collect();
    let mut m = RationalMatrix::zeros(low_dim, up_dim);
    for (f, source, col_off) in upper {
        for (r, j) in bits::bit_positions(f).enumerate() {
            let Some(&row_off) = lower_index.get(&(f & !(1u64 << j))) else { continue };
            let block = if source & (1u64 << j) != 0 {
                RationalMatrix::identity(module.dim(source))
            } else {
                module.mult(source, j)
            };
            let sign = rat(bits::sign(r));
            for (rr, cc, v) in block.entries() {
                m.set(row_off + rr, col_off + cc, v * &sign);
            }
        }
    }
    (m, up_dim)
}

/// `dim Tor^S_h(M, k)_a` for `h = 0..=|Supp(a)|`, at any multidegree `a`.
pub fn tor_module_at(module: &SquareFreeModule, a: &[u32]) -> Vec<usize> {
    let size = popcount(support_mask(a));
    let mut dims = vec![0usize; size + 2];
    let mut ranks = vec![0usize; size + 2];
    for h in 0..=size {
        let (d, up) = tor_differential(module, a, h);
        dims[h] = up;
        ranks[h] = if h == 0 { 0 } else { d.rank() };
    }
    (0..=size).map(|h| dims[h] - ranks[h] - ranks[h + 1]).collect()
}

/// Multidegrees `a` with `|a| ≤ max_total` and some exponent `≥ 2` at which `Tor^S_*(M, k)_a ≠ 0`.
pub fn non_square_free_betti(module: &SquareFreeModule, max_total: usize) -> Vec<(Vec<u32>, Vec<usize>)> {
    let mut out = Vec::new();
    for total in 2..=max_total {
        for a in multidegrees_of_total(module.n(), total as u32) {
            if a.iter().all(|e| *e <= 1) {
                continue;
            }
            let t = tor_module_at(module, &a);
            if t.iter().any(|d| *d > 0) {
                out.push((a, t));
            }
        }
    }
    out
}

/// Graded Betti numbers of a square-free module, computed from the Koszul strands.
pub fn betti_table(module: &SquareFreeModule) -> BettiTable {
    let n = module.n();
    let entries: Vec<((usize, u64), usize)> = (0..(1u64 << n))
        .into_par_iter()
        .flat_map_iter(|b| {
            // only degrees b ⊇ some nonzero piece can carry Tor
            let relevant = module.pieces().any(|(m, _)| m & !b == 0);
            let mut local = Vec::new();
            if relevant {
                for (h, beta) in tor_module_at(module, &square_free(n, b)).into_iter().enumerate() {
                    if beta > 0 {
                        local.push(((h, b), beta));
                    }
                }
            }
            local
        })
        .collect();
    BettiTable { n, entries: entries.into_iter().collect() }
}

/// Three independently computed dimensions for one `(Δ, i, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub i: usize,
    pub support: Vec<usize>,
    /// `dim [W_i(Δ)]_b` from the `K^Δ` strand.
    pub koszul_module: usize,
    /// `dim [Tor^S_{|b|-i}(k, k[Δ])]_b` from the Koszul complex of `k[Δ]`.
    pub tor: usize,
    /// `h̃_{i-1}(Δ_b)` from simplicial homology.
    pub homology: usize,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.koszul_module == self.tor && self.tor == self.homology
    }

    pub fn into_result(self, complex: &SimplicialComplex) -> Result<Self> {
        if self.holds() {
            Ok(self)
        } else {
            Err(Error::Oracle(format!(
                "duality mismatch for {complex}, i = {}, b = {{{}}}: W = {}, Tor = {}, h = {}",
                self.i,
                self.support.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
                self.koszul_module,
                self.tor,
                self.homology
            )))
        }
    }
}

/// `dim [W_i]_b`, `dim [Tor_{|b|-i}(k, k[Δ])]_b`, and `h̃_{i-1}(Δ_b)` side by side.
pub fn verify_duality(complex: &SimplicialComplex, i: usize, b: SquareFreeDegree) -> Result<DualityReport> {
    if i == 0 {
        return Err(Error::Precondition("duality is stated for i >= 1".into()));
    }
    let a = square_free(complex.n(), b.mask());
    let koszul_module = StrandComplex::new(complex, i, &a).homology_dim()?;
    let size = b.total_degree();
    let tor = if size >= i { tor_stanley_reisner(complex, size - i, &a)? } else { 0 };
    let homology = reduced_homology(&complex.restriction(b)).get(i as isize - 1);
    Ok(DualityReport { i, support: b.support(), koszul_module, tor, homology })
}

/// Outcome of comparing the regularity / projective dimension of `W_i(Δ)` with the known bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub n: usize,
    pub i: usize,
    pub zero_module: bool,
    pub regularity: Option<i64>,
    pub pdim: i64,
    /// `reg ≤ n`.
    pub regularity_bound: i64,
    /// `pdim ≤ n - i - 1`.
    pub pdim_bound: i64,
    /// `reg ≤ n - 2`, when `Δ` has a complete `(i-1)`-skeleton, `dim Δ = i`, `n ≥ 4`, `i ≤ n - 3`.
    pub sharp_bound: Option<i64>,
    /// Smallest `|b|` among generators (`β_{0,b} ≠ 0`).
    pub min_generator_degree: Option<usize>,
    pub violations: Vec<String>,
}

impl RegularityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Betti-table regularity and projective dimension of `W_i(Δ)` against the general
/// bounds, the sharper bound for complexes with full codimension-one skeleton, and
/// the generator degree floor `|b| ≥ i + 1`.
pub fn regularity_bounds_check(complex: &SimplicialComplex, i: usize) -> Result<RegularityReport> {
    if i == 0 {
        return Err(Error::Precondition("regularity bounds are stated for i >= 1".into()));
    }
    let module = build_W(complex, i)?;
    let table = betti_table(&module);
    regularity_report(complex, i, &table)
}

pub fn regularity_report(complex: &SimplicialComplex, i: usize, table: &BettiTable) -> Result<RegularityReport> {
    let n = complex.n();
    let regularity = table.regularity();
    let pdim = table.pdim();
    let regularity_bound = n as i64;
    let pdim_bound = n as i64 - i as i64 - 1;
    let skeleton = complex.skeleton_complete_degree().ok().flatten();
    let sharp_bound = match skeleton {
        Some(d) if d == i && n >= 4 && d >= 1 && d + 3 <= n => Some(n as i64 - 2),
        _ => None,
    };
    let min_generator_degree = table.entries().keys().filter(|(h, _)| *h == 0).map(|(_, b)| popcount(*b)).min();
    let mut violations = Vec::new();
    if let Some(r) = regularity {
        if r > regularity_bound {
            violations.push(format!("reg W_{i} = {r} exceeds n = {n}"));
        }
        if pdim > pdim_bound {
            violations.push(format!("pdim W_{i} = {pdim} exceeds n - i - 1 = {pdim_bound}"));
        }
        if let Some(bound) = sharp_bound {
            if r > bound {
                violations.push(format!("reg W_{i} = {r} exceeds n - 2 = {bound}"));
            }
        }
    }
    if let Some(g) = min_generator_degree {
        if g < i + 1 {
            violations.push(format!("W_{i} has a generator in degree {g} < i + 1"));
        }
    }
    Ok(RegularityReport {
        n,
        i,
        zero_module: table.is_zero(),
        regularity,
        pdim,
        regularity_bound,
        pdim_bound,
        sharp_bound,
        min_generator_degree,
        violations,
    })
}
