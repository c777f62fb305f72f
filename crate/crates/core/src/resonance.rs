//! Jump and support resonance of a simplicial complex, annihilators of Koszul
//! modules, the Hochster-type formula for `δ_a`-cohomology, and the comparison
//! checks between the two kinds of resonance.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, full_mask, popcount};
use crate::complex::{join_vertices, SimplicialComplex, SUBSET_GUARD};
use crate::error::{Error, Result};
use crate::exactlin::{rat, Rational, RationalMatrix};
use crate::homology::{all_subset_homology, reduced_homology};
use crate::koszul::module::build_W;

fn guard(n: usize) -> Result<()> {
    if n > SUBSET_GUARD {
        Err(Error::GuardExceeded { n, limit: SUBSET_GUARD })
    } else {
        Ok(())
    }
}

/// Keep the inclusion-maximal masks, sorted ascending.
fn maximal(masks: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut all: Vec<u64> = masks.into_iter().collect();
    all.sort_unstable();
    all.dedup();
    let mut out: Vec<u64> = all.iter().copied().filter(|&m| !all.iter().any(|&o| o != m && o & m == m)).collect();
    out.sort_unstable();
    out
}

/// Keep the inclusion-minimal masks, sorted ascending.
fn minimal(masks: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut all: Vec<u64> = masks.into_iter().collect();
    all.sort_unstable();
    all.dedup();
    let mut out: Vec<u64> = all.iter().copied().filter(|&m| !all.iter().any(|&o| o != m && o & m == o)).collect();
    out.sort_unstable();
    out
}

/// A union of coordinate subspaces `k^{V'}`, stored as the antichain of maximal `V'`.
///
/// The origin `{0}` is the arrangement whose only component is `V' = ∅`;
/// the empty variety has no components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoordinateSubspaceArrangement {
    pub n: usize,
    components: Vec<u64>,
}

impl CoordinateSubspaceArrangement {
    pub fn new(n: usize, components: impl IntoIterator<Item = u64>) -> Self {
        CoordinateSubspaceArrangement { n, components: maximal(components) }
    }

    pub fn from_vertex_sets(n: usize, components: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::new();
        for c in components {
            if let Some(&v) = c.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            masks.push(bits::from_vertices(c));
        }
        Ok(Self::new(n, masks))
    }

    pub fn empty(n: usize) -> Self {
        CoordinateSubspaceArrangement { n, components: Vec::new() }
    }

    pub fn origin(n: usize) -> Self {
        CoordinateSubspaceArrangement { n, components: vec![0] }
    }

    pub fn whole(n: usize) -> Self {
        CoordinateSubspaceArrangement { n, components: vec![full_mask(n)] }
    }

    pub fn components(&self) -> &[u64] {
        &self.components
    }

    pub fn component_vertices(&self) -> Vec<Vec<usize>> {
        self.components.iter().map(|m| bits::to_vertices(*m)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_origin(&self) -> bool {
        self.components == [0]
    }

    pub fn is_whole(&self) -> bool {
        self.components == [full_mask(self.n)]
    }

    /// Whether a point with support `mask` lies on the arrangement.
    pub fn contains_support(&self, mask: u64) -> bool {
        self.components.iter().any(|c| mask & !c == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::new(self.n, self.components.iter().chain(&other.components).copied())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self::new(
            self.n,
            self.components.iter().flat_map(|a| other.components.iter().map(move |b| a & b)),
        )
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.components.iter().all(|c| other.contains_support(*c))
    }

    /// The same set once the origin is disregarded (`{0}` compares equal to `∅`).
    pub fn without_origin(&self) -> Self {
        if self.is_origin() {
            Self::empty(self.n)
        } else {
            self.clone()
        }
    }

    pub fn equal_away_from_origin(&self, other: &Self) -> bool {
        self.without_origin() == other.without_origin()
    }

    /// `"origin"`, `"empty"`, or `"components"`.
    pub fn kind_label(&self) -> &'static str {
        if self.is_empty() {
            "empty"
        } else if self.is_origin() {
            "origin"
        } else {
            "components"
        }
    }
}

impl fmt::Display for CoordinateSubspaceArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "empty");
        }
        if self.is_origin() {
            return write!(f, "origin");
        }
        let parts: Vec<String> = self.components.iter().map(|m| format!("k^{{{}}}", join_vertices(*m))).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

/// Square-free monomial ideal given by its minimal generators (vertex sets).
/// The unit ideal has the single generator `∅`; the zero ideal has none.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareFreeMonomialIdeal {
    pub n: usize,
    generators: Vec<u64>,
}

impl SquareFreeMonomialIdeal {
    pub fn new(n: usize, generators: impl IntoIterator<Item = u64>) -> Self {
        SquareFreeMonomialIdeal { n, generators: minimal(generators) }
    }

    pub fn zero(n: usize) -> Self {
        SquareFreeMonomialIdeal { n, generators: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        SquareFreeMonomialIdeal { n, generators: vec![0] }
    }

    /// The prime `(x_j : j ∈ vars)`.
    pub fn prime(n: usize, vars: u64) -> Self {
        Self::new(n, bits::bit_positions(vars).map(|j| 1u64 << j))
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn generator_vertices(&self) -> Vec<Vec<usize>> {
        self.generators.iter().map(|m| bits::to_vertices(*m)).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.generators == [0]
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Membership of the square-free monomial `x^T`.
    pub fn contains(&self, t: u64) -> bool {
        self.generators.iter().any(|g| g & !t == 0)
    }

    /// Pairwise lcm's, minimalized.
    pub fn intersect(&self, other: &Self) -> Self {
        Self::new(self.n, self.generators.iter().flat_map(|a| other.generators.iter().map(move |b| a | b)))
    }

    /// `∩_{V'} (x_j : j ∉ V')` over the components of an arrangement.
    pub fn vanishing_ideal(arrangement: &CoordinateSubspaceArrangement) -> Self {
        let full = full_mask(arrangement.n);
        arrangement
            .components()
            .iter()
            .fold(Self::unit(arrangement.n), |acc, c| acc.intersect(&Self::prime(arrangement.n, full & !c)))
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson { generators: self.generator_vertices() }
    }
}

impl fmt::Display for SquareFreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|g| {
                if *g == 0 {
                    "1".to_string()
                } else {
                    bits::to_vertices(*g).iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join("*")
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdealJson {
    pub generators: Vec<Vec<usize>>,
}

/// Support resonance `R̃_i(Δ)`: maximal `V'` with `h̃_{i-1}(Δ_{V'}) ≠ 0`.
/// For `i = 0` this is the origin.
pub fn support_resonance(complex: &SimplicialComplex, i: usize) -> Result<CoordinateSubspaceArrangement> {
    if i == 0 {
        return Ok(CoordinateSubspaceArrangement::origin(complex.n()));
    }
    let table = all_subset_homology(complex, i)?;
    Ok(CoordinateSubspaceArrangement::new(complex.n(), table.nonzero().into_keys()))
}

/// `Ann(W_i(Δ))` together with how it was certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorReport {
    pub ideal: SquareFreeMonomialIdeal,
    /// Square-free monomials checked against the module.
    pub monomials_checked: usize,
}

/// `Ann(W_i(Δ)) = ∩ (x_j : j ∉ V')` over the support components, certified against
/// the module built from strands: every square-free monomial is in the ideal exactly
/// when it acts as zero on `W_i(Δ)`.
pub fn annihilator(complex: &SimplicialComplex, i: usize) -> Result<AnnihilatorReport> {
    if i == 0 {
        return Err(Error::Precondition("annihilators are computed for i >= 1".into()));
    }
    let n = complex.n();
    let support = support_resonance(complex, i)?;
    let ideal = SquareFreeMonomialIdeal::vanishing_ideal(&support);
    let module = build_W(complex, i)?;
    let module_support = CoordinateSubspaceArrangement::new(n, module.maximal_supports());
    if module_support != support {
        return Err(Error::Oracle(format!(
            "support of W_{i}({complex}) is {module_support}, homology gives {support}"
        )));
    }
    let bad = (0..(1u64 << n)).into_par_iter().find_first(|&t| module.annihilated_by(t) != ideal.contains(t));
    if let Some(t) = bad {
        return Err(Error::Oracle(format!(
            "x^{{{}}} {} W_{i}({complex}) but the ideal {ideal} says otherwise",
            join_vertices(t),
            if module.annihilated_by(t) { "annihilates" } else { "does not annihilate" }
        )));
    }
    Ok(AnnihilatorReport { ideal, monomials_checked: 1usize << n })
}

/// One nonzero summand `h̃_{i-1-|σ|}(lk_{Δ_{V'}} σ)` of the Hochster-type sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HochsterTerm {
    pub i: usize,
    pub sigma: Vec<usize>,
    pub dim: usize,
}

/// Per-`i` Hochster sums for one support, with breakdown and the direct computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HochsterReport {
    pub support: Vec<usize>,
    pub hochster: Vec<usize>,
    pub direct: Vec<usize>,
    pub terms: Vec<HochsterTerm>,
}

impl HochsterReport {
    pub fn agrees(&self) -> bool {
        self.hochster == self.direct
    }
}

/// `Σ_{σ ∈ Δ_{V∖V'}} h̃_{i-1-|σ|}(lk_{Δ_{V'}} σ)` for every `i`, with its nonzero terms.
pub fn hochster_sum(complex: &SimplicialComplex, support: u64) -> (Vec<usize>, Vec<HochsterTerm>) {
    let len = complex.f_vector().len();
    let mut dims = vec![0usize; len];
    let mut terms = Vec::new();
    let complement = complex.vertex_set() & !support;
    for sigma in complex.all_faces() {
        if sigma & !complement != 0 {
            continue;
        }
        let link = complex.link_mask(support, sigma);
        for (k, d) in reduced_homology(&link).nonzero() {
            let i = (k + 1) as usize + popcount(sigma);
            if i < len {
                dims[i] += d;
                terms.push(HochsterTerm { i, sigma: bits::to_vertices(sigma), dim: d });
            }
        }
    }
    terms.sort_by(|a, b| (a.i, &a.sigma).cmp(&(b.i, &b.sigma)));
    (dims, terms)
}

/// Matrix of `δ_a : A^p → A^{p+1}`, `e_σ ↦ Σ_j a_j e_j ∧ e_σ`, on the face basis.
fn delta_matrix(complex: &SimplicialComplex, a: &[Rational], p: usize) -> RationalMatrix {
    let source = complex.faces_of_size(p);
    let target = complex.faces_of_size(p + 1);
    let index: HashMap<u64, usize> = target.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut m = RationalMatrix::zeros(target.len(), source.len());
    for (col, &sigma) in source.iter().enumerate() {
        for (j, aj) in a.iter().enumerate() {
            if aj.is_zero() || sigma & (1u64 << j) != 0 {
                continue;
            }
            if let Some(&row) = index.get(&(sigma | (1u64 << j))) {
                let before = popcount(sigma & ((1u64 << j) - 1));
                m.set(row, col, aj * rat(bits::sign(before)));
            }
        }
    }
    m
}

/// `dim H^p(k⟨Δ⟩, δ_a)` for `p = 0..=dim Δ + 1`.
pub fn delta_a_cohomology(complex: &SimplicialComplex, a: &[Rational]) -> Result<Vec<usize>> {
    if a.len() != complex.n() {
        return Err(Error::DimensionMismatch(format!("vector of length {} for n = {}", a.len(), complex.n())));
    }
    let f = complex.f_vector();
    let len = f.len();
    // ranks[p] = rank of δ : A^{p-1} → A^p
    let mut ranks = vec![0usize; len + 1];
    for p in 1..len {
        ranks[p] = delta_matrix(complex, a, p - 1).rank();
    }
    Ok((0..len).map(|p| f[p] - ranks[p] - ranks[p + 1]).collect())
}

pub fn indicator(n: usize, mask: u64) -> Vec<Rational> {
    (0..n).map(|j| rat(((mask >> j) & 1) as i64)).collect()
}

/// Compare the Hochster sum at support `V'` with the cohomology of `δ_a` at its indicator.
pub fn hochster_check(complex: &SimplicialComplex, support: u64) -> Result<HochsterReport> {
    let (hochster, terms) = hochster_sum(complex, support);
    let direct = delta_a_cohomology(complex, &indicator(complex.n(), support))?;
    let report = HochsterReport { support: bits::to_vertices(support), hochster, direct, terms };
    if report.agrees() {
        Ok(report)
    } else {
        Err(Error::Oracle(format!(
            "Hochster sum {:?} differs from δ_a cohomology {:?} for {complex} at support {{{}}}",
            report.hochster,
            report.direct,
            join_vertices(support)
        )))
    }
}

/// Hochster sums for every support `V' ⊆ [n]`, indexed by mask.
pub fn hochster_table(complex: &SimplicialComplex) -> Result<Vec<Vec<usize>>> {
    guard(complex.n())?;
    Ok((0..(1u64 << complex.n())).into_par_iter().map(|s| hochster_sum(complex, s).0).collect())
}

/// Jump resonance `R^i(Δ)`: maximal `V'` for which some `σ ∈ Δ_{V∖V'}` has
/// `h̃_{i-1-|σ|}(lk_{Δ_{V'}} σ) ≠ 0`.
pub fn jump_resonance(complex: &SimplicialComplex, i: usize) -> Result<CoordinateSubspaceArrangement> {
    let table = hochster_table(complex)?;
    Ok(jump_from_table(complex.n(), &table, i))
}

/// `R^i(Δ)` for `i = 0..=dim Δ + 1` from a single pass over supports.
pub fn jump_resonance_all(complex: &SimplicialComplex) -> Result<Vec<CoordinateSubspaceArrangement>> {
    let table = hochster_table(complex)?;
    let len = complex.f_vector().len();
    Ok((0..len).map(|i| jump_from_table(complex.n(), &table, i)).collect())
}

fn jump_from_table(n: usize, table: &[Vec<usize>], i: usize) -> CoordinateSubspaceArrangement {
    CoordinateSubspaceArrangement::new(
        n,
        table.iter().enumerate().filter(|(_, d)| d.get(i).copied().unwrap_or(0) > 0).map(|(m, _)| m as u64),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    SkippedHypothesis,
}

/// Outcome of `∪_{j≤i} R̃_j = ∪_{j≤i} R^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionReport {
    pub status: CheckStatus,
    pub support_union: CoordinateSubspaceArrangement,
    pub jump_union: CoordinateSubspaceArrangement,
    pub reason: Option<String>,
}

/// `∪_{j≤i} R̃_j(Δ) = ∪_{j≤i} R^j(Δ)`, asserted when `W_j(Δ) ≠ 0` for `1 ≤ j ≤ i`
/// and every vertex of `[n]` is a vertex of `Δ`.
pub fn union_consistency_check(complex: &SimplicialComplex, i: usize) -> Result<UnionReport> {
    let n = complex.n();
    let mut support_union = CoordinateSubspaceArrangement::origin(n);
    let mut jump_union = CoordinateSubspaceArrangement::origin(n);
    let jumps = jump_resonance_all(complex)?;
    let mut reason = None;
    if complex.vertex_set() != full_mask(n) {
        reason = Some("some vertex of [n] is not a vertex of the complex".to_string());
    }
    for j in 1..=i {
        let support = support_resonance(complex, j)?;
        if support.is_empty() && reason.is_none() {
            reason = Some(format!("W_{j} = 0"));
        }
        support_union = support_union.union(&support);
        if let Some(r) = jumps.get(j) {
            jump_union = jump_union.union(r);
        }
    }
    let status = if reason.is_some() {
        CheckStatus::SkippedHypothesis
    } else if support_union == jump_union {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    let report = UnionReport { status, support_union, jump_union, reason };
    if status == CheckStatus::Fail {
        return Err(Error::Oracle(format!(
            "for {complex}, i = {i}: union of support resonance {} differs from union of jump resonance {}",
            report.support_union, report.jump_union
        )));
    }
    Ok(report)
}

/// Whether every link `lk_Δ σ`, `σ ∈ Δ`, has reduced homology only in degree `dim Δ - |σ|`.
pub fn is_cohen_macaulay(complex: &SimplicialComplex) -> Result<bool> {
    let dim = complex.dimension().ok_or(Error::VoidComplex)?;
    let full = full_mask(complex.n());
    let faces: Vec<u64> = complex.all_faces().collect();
    Ok(faces.par_iter().all(|&sigma| {
        let top = dim - popcount(sigma) as isize;
        reduced_homology(&complex.link_mask(full, sigma)).nonzero().iter().all(|(k, _)| *k == top)
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropagationReport {
    pub cohen_macaulay: bool,
    pub propagates: bool,
    /// `(i, R^i, R^{i+1})` where `R^i ⊄ R^{i+1}`.
    pub failures: Vec<(usize, CoordinateSubspaceArrangement, CoordinateSubspaceArrangement)>,
}

/// Cohen–Macaulay test and the chain `R^1 ⊆ R^2 ⊆ … ⊆ R^{dim Δ + 1}`.
/// Cohen–Macaulay without propagation is an oracle failure.
pub fn propagation_check(complex: &SimplicialComplex) -> Result<PropagationReport> {
    let cohen_macaulay = is_cohen_macaulay(complex)?;
    let jumps = jump_resonance_all(complex)?;
    let mut failures = Vec::new();
    for i in 1..jumps.len().saturating_sub(1) {
        if !jumps[i].is_subset_of(&jumps[i + 1]) {
            failures.push((i, jumps[i].clone(), jumps[i + 1].clone()));
        }
    }
    let report = PropagationReport { cohen_macaulay, propagates: failures.is_empty(), failures };
    if report.cohen_macaulay && !report.propagates {
        let (i, a, b) = &report.failures[0];
        return Err(Error::Oracle(format!(
            "{complex} is Cohen-Macaulay but R^{i} = {a} is not contained in R^{} = {b}",
            i + 1
        )));
    }
    Ok(report)
}

/// Verdicts for a complex with complete `(d-1)`-skeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedDegreeReport {
    pub d: usize,
    /// `(i, R̃_i, R^i)` for `1 ≤ i ≤ n`.
    pub pairs: Vec<(usize, CoordinateSubspaceArrangement, CoordinateSubspaceArrangement)>,
    /// `R̃_i = R^i` away from the origin for every `i ≠ d + 1`.
    pub equal_off_top: bool,
    /// `R̃_{d+1}` is `∅` or `k^n`.
    pub top_trivial: bool,
    /// `R^d` equals the union of `k^{V'}` over maximal `V'` with `h̃_{d-1}(Δ_{V'}) ≠ 0`.
    pub jump_d_formula: bool,
}

impl FixedDegreeReport {
    pub fn passed(&self) -> bool {
        self.equal_off_top && self.top_trivial && self.jump_d_formula
    }
}

/// The three resonance statements for complexes with complete codimension-one skeleton.
/// Jump and support resonance are compared away from the origin, since `0 ∈ R^i`
/// whenever `Δ` has faces of size `i`, whereas `R̃_i` is empty when `W_i = 0`.
pub fn fixed_degree_resonance_check(complex: &SimplicialComplex) -> Result<FixedDegreeReport> {
    let d = complex
        .skeleton_complete_degree()?
        .ok_or_else(|| Error::Precondition("complex does not have a complete codimension-one skeleton".into()))?;
    let n = complex.n();
    let jumps = jump_resonance_all(complex)?;
    let empty = CoordinateSubspaceArrangement::empty(n);
    let mut pairs = Vec::new();
    for i in 1..=n {
        let jump = jumps.get(i).cloned().unwrap_or_else(|| empty.clone());
        pairs.push((i, support_resonance(complex, i)?, jump));
    }
    let equal_off_top = pairs.iter().filter(|(i, _, _)| *i != d + 1).all(|(_, s, j)| s.equal_away_from_origin(j));
    let top_trivial = pairs.iter().find(|(i, _, _)| *i == d + 1).map_or(true, |(_, s, _)| s.is_empty() || s.is_whole());
    let jump_d = jumps.get(d).cloned().unwrap_or_else(|| empty.clone());
    let jump_d_formula = if d == 0 { true } else { jump_d.equal_away_from_origin(&support_resonance(complex, d)?) };
    let report = FixedDegreeReport { d, pairs, equal_off_top, top_trivial, jump_d_formula };
    if !report.passed() {
        return Err(Error::Oracle(format!("fixed-degree resonance statements fail for {complex}: {report:?}")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat_frac;
    use crate::homology::tests::arb_complex;
    use proptest::prelude::*;

    fn two_edges() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, &[vec![1, 2], vec![3, 4]]).unwrap()
    }

    fn tetra_minus_face() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, &[vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]).unwrap()
    }

    fn arr(n: usize, comps: &[&[usize]]) -> CoordinateSubspaceArrangement {
        CoordinateSubspaceArrangement::from_vertex_sets(n, &comps.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn support_resonance_examples() {
        assert_eq!(support_resonance(&tetra_minus_face(), 2).unwrap(), arr(4, &[&[1, 2, 3]]));
        assert!(support_resonance(&two_edges(), 2).unwrap().is_empty());
        let path = SimplicialComplex::path(4).unwrap();
        assert_eq!(support_resonance(&path, 1).unwrap(), arr(4, &[&[1, 2, 4], &[1, 3, 4]]));
    }

    #[test]
    fn annihilator_examples() {
        let path = SimplicialComplex::path(4).unwrap();
        let ann = annihilator(&path, 1).unwrap();
        assert_eq!(ann.ideal.generator_vertices(), vec![vec![2, 3]]);
        assert_eq!(ann.ideal.to_string(), "(x2*x3)");
        let simplex = SimplicialComplex::simplex(4).unwrap();
        assert!(annihilator(&simplex, 1).unwrap().ideal.is_unit());
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let ann = annihilator(&c4, 1).unwrap().ideal;
        let expected = SquareFreeMonomialIdeal::prime(4, bits::from_vertices(&[2, 4]))
            .intersect(&SquareFreeMonomialIdeal::prime(4, bits::from_vertices(&[1, 3])));
        assert_eq!(ann, expected);
        assert_eq!(ann.generator_vertices(), vec![vec![1, 2], vec![2, 3], vec![1, 4], vec![3, 4]].into_iter().fold(
            Vec::new(),
            |mut acc: Vec<Vec<usize>>, g| {
                acc.push(g);
                acc.sort_by_key(|v| bits::from_vertices(v));
                acc
            }
        ));
    }

    #[test]
    fn jump_resonance_examples() {
        let te = two_edges();
        assert!(jump_resonance(&te, 1).unwrap().is_whole());
        assert_eq!(jump_resonance(&te, 2).unwrap(), arr(4, &[&[1, 2], &[3, 4]]));
        assert_eq!(jump_resonance(&tetra_minus_face(), 2).unwrap(), arr(4, &[&[1, 2, 3]]));
        for c in [te, tetra_minus_face(), SimplicialComplex::cycle(5).unwrap()] {
            assert!(jump_resonance(&c, 0).unwrap().is_origin());
        }
    }

    #[test]
    fn delta_cohomology_examples() {
        let te = two_edges();
        let zero = vec![rat(0); 4];
        assert_eq!(delta_a_cohomology(&te, &zero).unwrap(), te.f_vector());
        let a = indicator(4, bits::from_vertices(&[1, 2]));
        assert_eq!(delta_a_cohomology(&te, &a).unwrap()[2], 1);
        let r = hochster_check(&te, bits::from_vertices(&[1, 2])).unwrap();
        assert!(r.terms.contains(&HochsterTerm { i: 2, sigma: vec![3, 4], dim: 1 }));
        let t = tetra_minus_face();
        let r = hochster_check(&t, full_mask(4)).unwrap();
        assert!(r.terms.iter().all(|term| term.sigma.is_empty()));
        let r = hochster_check(&t, bits::from_vertices(&[1, 2, 3])).unwrap();
        assert!(r.hochster[2] >= 1);
        assert!(r.terms.contains(&HochsterTerm { i: 2, sigma: vec![], dim: 1 }));
    }

    #[test]
    fn union_examples() {
        let path = SimplicialComplex::path(4).unwrap();
        assert_eq!(union_consistency_check(&path, 1).unwrap().status, CheckStatus::Pass);
        assert_eq!(union_consistency_check(&two_edges(), 2).unwrap().status, CheckStatus::SkippedHypothesis);
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let r = union_consistency_check(&c4, 1).unwrap();
        assert_eq!(r.status, CheckStatus::Pass);
        assert_eq!(r.jump_union, arr(4, &[&[1, 3], &[2, 4]]));
    }

    #[test]
    fn cohen_macaulay_examples() {
        let r = propagation_check(&two_edges()).unwrap();
        assert!(!r.cohen_macaulay && !r.propagates);
        for n in 3..=6 {
            let r = propagation_check(&SimplicialComplex::simplex_boundary(n).unwrap()).unwrap();
            assert!(r.cohen_macaulay && r.propagates);
        }
        assert!(is_cohen_macaulay(&SimplicialComplex::simplex(4).unwrap()).unwrap());
    }

    #[test]
    fn fixed_degree_examples() {
        let r = fixed_degree_resonance_check(&tetra_minus_face()).unwrap();
        assert_eq!(r.d, 2);
        assert_eq!(r.pairs[1].1, arr(4, &[&[1, 2, 3]]));
        assert_eq!(r.pairs[1].2, arr(4, &[&[1, 2, 3]]));
        assert!(r.pairs[2].1.is_empty());
        let r = fixed_degree_resonance_check(&two_edges()).unwrap();
        assert_eq!(r.d, 1);
        assert!(r.pairs[1].1.is_empty() && !r.pairs[1].2.is_empty());
        let r = fixed_degree_resonance_check(&SimplicialComplex::complete_graph(5).unwrap()).unwrap();
        assert!(r.pairs.iter().filter(|(i, _, _)| *i != 2).all(|(_, s, _)| s.is_empty()));
        assert!(r.pairs[1].1.is_whole());
    }

    fn brute_contains(a: &CoordinateSubspaceArrangement, mask: u64) -> bool {
        a.components().iter().any(|c| mask & !c == 0)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn arrangement_operations_match_membership(
            a in proptest::collection::vec(0u64..64, 0..5),
            b in proptest::collection::vec(0u64..64, 0..5),
        ) {
            let x = CoordinateSubspaceArrangement::new(6, a.clone());
            let y = CoordinateSubspaceArrangement::new(6, b.clone());
            let u = x.union(&y);
            let i = x.intersection(&y);
            for m in 0..64u64 {
                let in_x = a.iter().any(|c| m & !c == 0);
                let in_y = b.iter().any(|c| m & !c == 0);
                prop_assert_eq!(brute_contains(&u, m), in_x || in_y);
                prop_assert_eq!(brute_contains(&i, m), in_x && in_y);
            }
            let subset = (0..64u64).all(|m| !brute_contains(&x, m) || brute_contains(&y, m));
            prop_assert_eq!(x.is_subset_of(&y), subset);
            for (k, c) in x.components().iter().enumerate() {
                for d in &x.components()[k + 1..] {
                    prop_assert!(c & d != *c && c & d != *d);
                }
            }
        }

        #[test]
        fn ideal_intersection_matches_membership(
            a in proptest::collection::vec(0u64..32, 0..4),
            b in proptest::collection::vec(0u64..32, 0..4),
        ) {
            let x = SquareFreeMonomialIdeal::new(5, a);
            let y = SquareFreeMonomialIdeal::new(5, b);
            let z = x.intersect(&y);
            for t in 0..32u64 {
                prop_assert_eq!(z.contains(t), x.contains(t) && y.contains(t));
            }
        }

        #[test]
        fn hochster_matches_delta_cohomology(c in arb_complex(5), support in 0u64..32) {
            let support = support & full_mask(c.n());
            prop_assert!(hochster_check(&c, support).is_ok());
        }

        #[test]
        fn cohomology_depends_only_on_support(c in arb_complex(5), coeffs in proptest::collection::vec((-3i64..=3, 1i64..4), 5)) {
            let a: Vec<Rational> = coeffs.iter().take(c.n()).map(|(p, q)| rat_frac(*p, *q)).collect();
            let mask = a.iter().enumerate().filter(|(_, v)| !v.is_zero()).fold(0u64, |m, (j, _)| m | (1u64 << j));
            prop_assert_eq!(delta_a_cohomology(&c, &a).unwrap(), delta_a_cohomology(&c, &indicator(c.n(), mask)).unwrap());
        }
    }
}
