//! Verification harness: named example complexes, a seeded random-complex
//! generator, and suites that cross-check independent computations.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bits::{self, full_mask, popcount};
use crate::complex::{SimplicialComplex, SquareFreeDegree};
use crate::error::{Error, Result};
use crate::exactlin::{rat_frac, Rational};
use crate::grobner::{fitting_ideal, ideal_intersect, is_radical_vs, polynomial_matrix, Polynomial, PolynomialIdeal, RadicalReport};
use crate::koszul::betti::{non_square_free_betti, regularity_report};
use crate::koszul::presentation::monomial_subspace;
use crate::koszul::{
    betti_table, build_W, chen_ranks, hilbert_series_combinatorial, hilbert_series_from_module, pair_module_hilbert,
    presentation_matrix, single_graded_by_strands_all, specialize_single, top_module_is_kernel, verify_duality,
    verify_on_support,
};
use crate::resonance::{
    annihilator, delta_a_cohomology, fixed_degree_resonance_check, hochster_check, indicator, jump_resonance,
    propagation_check, support_resonance, union_consistency_check, CoordinateSubspaceArrangement,
};

pub use crate::resonance::CheckStatus;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub status: CheckStatus,
    pub details: String,
}

/// Outcome of one suite; a run fails iff some case failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn merge(suite: &str, reports: Vec<VerificationReport>) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            wall_time_ms: reports.iter().map(|r| r.wall_time_ms).sum(),
            cases: reports.into_iter().flat_map(|r| r.cases).collect(),
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} passed, {} failed, {} skipped ({} ms)",
            self.suite,
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::SkippedHypothesis),
            self.wall_time_ms
        )
    }
}

struct Suite {
    name: String,
    start: Instant,
    cases: Vec<CaseResult>,
}

impl Suite {
    fn new(name: &str) -> Self {
        Suite { name: name.to_string(), start: Instant::now(), cases: Vec::new() }
    }

    fn record(&mut self, id: impl Into<String>, outcome: Result<String>) {
        let (status, details) = match outcome {
            Ok(d) => (CheckStatus::Pass, d),
            Err(e) => (CheckStatus::Fail, e.to_string()),
        };
        self.cases.push(CaseResult { id: id.into(), status, details });
    }

    fn skip(&mut self, id: impl Into<String>, reason: impl Into<String>) {
        self.cases.push(CaseResult { id: id.into(), status: CheckStatus::SkippedHypothesis, details: reason.into() });
    }

    fn finish(self) -> VerificationReport {
        VerificationReport { suite: self.name, cases: self.cases, wall_time_ms: self.start.elapsed().as_millis() }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Oracle(msg()))
    }
}

/// Named complexes used throughout the examples and the CLI.
pub fn named_example(name: &str) -> Option<SimplicialComplex> {
    let c = match name {
        "path4" => SimplicialComplex::path(4),
        "c4" => SimplicialComplex::cycle(4),
        "two-edges" => SimplicialComplex::from_facets(4, &[vec![1, 2], vec![3, 4]]),
        "tetra-minus-face" => SimplicialComplex::from_facets(4, &[vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]),
        "tetra-boundary" => SimplicialComplex::simplex_boundary(4),
        "k4" => SimplicialComplex::complete_graph(4),
        "simplex4" => SimplicialComplex::simplex(4),
        other => {
            let n: usize = other.strip_prefix("cycle")?.parse().ok()?;
            SimplicialComplex::cycle(n)
        }
    };
    c.ok()
}

pub const EXAMPLE_NAMES: &[&str] =
    &["path4", "c4", "two-edges", "tetra-minus-face", "tetra-boundary", "k4", "simplex4", "cycle<n>"];

/// Include each `k`-subset independently (sizes up to a random cap, probability
/// drawn per complex), then take the downward closure.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    let cap = rng.gen_range(1..=n);
    let p: f64 = rng.gen_range(0.15..0.6);
    let mut facets = Vec::new();
    for k in 1..=cap {
        for s in bits::subsets_of_size(n, k) {
            if rng.gen_bool(p) {
                facets.push(bits::to_vertices(s));
            }
        }
    }
    SimplicialComplex::from_facets(n, &facets).expect("vertices in range")
}

/// A complex on `[n]` with complete `(d-1)`-skeleton and dimension `d`.
pub fn random_skeleton_complete<R: Rng>(rng: &mut R, n: usize, d: usize) -> SimplicialComplex {
    let p: f64 = rng.gen_range(0.1..0.7);
    let mut facets: Vec<Vec<usize>> = bits::subsets_of_size(n, d).into_iter().map(bits::to_vertices).collect();
    let top: Vec<u64> = bits::subsets_of_size(n, d + 1);
    let mut chosen: Vec<u64> = top.iter().copied().filter(|_| rng.gen_bool(p)).collect();
    if chosen.is_empty() {
        chosen.push(*top.choose(rng).expect("d < n"));
    }
    facets.extend(chosen.into_iter().map(bits::to_vertices));
    SimplicialComplex::from_facets(n, &facets).expect("vertices in range")
}

/// `count` random complexes with `1 ≤ n ≤ max_n`, reproducible from `seed`.
pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            random_complex(&mut rng, n)
        })
        .collect()
}

/// `count` complexes with complete codimension-one skeleton, `3 ≤ n ≤ max_n`, `1 ≤ d ≤ n - 1`.
pub fn skeleton_corpus(seed: u64, count: usize, max_n: usize) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5eed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(3..=max_n.max(3));
            let d = rng.gen_range(1..n);
            random_skeleton_complete(&mut rng, n, d)
        })
        .collect()
}

fn label(k: usize, c: &SimplicialComplex) -> String {
    format!("#{k} {c}")
}

/// dim `[W_i]_b` = dim `[Tor_{|b|-i}(k, k[Δ])]_b` = `h̃_{i-1}(Δ_b)` for every `i ≥ 1` and square-free `b`.
pub fn duality_suite(complexes: &[SimplicialComplex]) -> VerificationReport {
    let mut suite = Suite::new("duality");
    for (k, c) in complexes.iter().enumerate() {
        let outcome = (|| {
            let n = c.n();
            let mut checked = 0usize;
            for i in 1..=n {
                for mask in 0..(1u64 << n) {
                    verify_duality(c, i, SquareFreeDegree::new(n, mask)?)?.into_result(c)?;
                    checked += 1;
                }
            }
            Ok(format!("{checked} triples"))
        })();
        suite.record(label(k, c), outcome);
    }
    suite.finish()
}

/// Multigraded series from homology vs from the module, and the single grading
/// vs brute-force strand dimensions in every multidegree of total degree `≤ 2n`.
pub fn hilbert_suite(complexes: &[SimplicialComplex]) -> VerificationReport {
    let mut suite = Suite::new("hilbert");
    for (k, c) in complexes.iter().enumerate() {
        let outcome = (|| {
            let n = c.n();
            let max_degree = 2 * n;
            let brute = single_graded_by_strands_all(c, max_degree);
            for i in 0..=n {
                let combinatorial = hilbert_series_combinatorial(c, i)?;
                let module = build_W(c, i)?;
                let from_module = hilbert_series_from_module(&module);
                ensure(combinatorial == from_module, || format!("W_{i}: {combinatorial} vs {from_module}"))?;
                ensure(module.is_zero() == combinatorial.is_zero(), || format!("W_{i}: zero module vs zero series"))?;
                let single = specialize_single(&combinatorial, max_degree)?;
                let strands = brute.get(i).cloned().unwrap_or_else(|| vec![0; max_degree + 1]);
                ensure(single == strands, || format!("W_{i}: single grading {single:?} vs strands {strands:?}"))?;
            }
            Ok(format!("weights 0..={n}, degrees 0..={max_degree}"))
        })();
        suite.record(label(k, c), outcome);
    }
    suite.finish()
}

/// Hochster sums against `δ_a` cohomology for every support, and support dependence
/// for a random rational `a` per support.
pub fn hochster_suite(complexes: &[SimplicialComplex], seed: u64) -> VerificationReport {
    let mut suite = Suite::new("hochster");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x40c5);
    for (k, c) in complexes.iter().enumerate() {
        let n = c.n();
        if n > 6 {
            continue;
        }
        let coeffs: Vec<Vec<Rational>> = (0..(1u64 << n))
            .map(|mask| {
                (0..n)
                    .map(|j| {
                        if mask >> j & 1 == 1 {
                            let mut num = rng.gen_range(-9i64..=9);
                            if num == 0 {
                                num = 1;
                            }
                            rat_frac(num, rng.gen_range(1..=7))
                        } else {
                            rat_frac(0, 1)
                        }
                    })
                    .collect()
            })
            .collect();
        let outcome = (|| {
            for mask in 0..(1u64 << n) {
                let report = hochster_check(c, mask)?;
                let general = delta_a_cohomology(c, &coeffs[mask as usize])?;
                ensure(general == report.direct, || {
                    format!("support {:?}: δ_a dims {general:?} vs indicator {:?}", bits::to_vertices(mask), report.direct)
                })?;
            }
            Ok(format!("{} supports", 1u64 << n))
        })();
        suite.record(label(k, c), outcome);
    }
    suite.finish()
}

/// On-support multiplications are isomorphisms, squares commute, supports match
/// support resonance, and Betti numbers live in square-free degrees only.
pub fn module_suite(complexes: &[SimplicialComplex]) -> VerificationReport {
    let mut suite = Suite::new("module");
    for (k, c) in complexes.iter().enumerate() {
        let outcome = (|| {
            let n = c.n();
            let mut on_support = 0;
            for i in 1..=n {
                let module = build_W(c, i)?;
                module.check_commutativity()?;
                on_support += verify_on_support(c, i)?;
                let components = CoordinateSubspaceArrangement::new(n, module.maximal_supports());
                let support = support_resonance(c, i)?;
                ensure(components == support, || format!("W_{i}: module support {components} vs {support}"))?;
                if module.is_zero() {
                    continue;
                }
                let table = betti_table(&module);
                ensure(table.entries().keys().all(|(_, b)| *b & !full_mask(n) == 0), || "Betti degree out of range".into())?;
                let off = non_square_free_betti(&module, n + 2);
                ensure(off.is_empty(), || format!("W_{i}: Tor at non-square-free degree {:?}", off[0]))?;
                if n <= 5 {
                    annihilator(c, i)?;
                }
            }
            Ok(format!("{on_support} on-support maps"))
        })();
        suite.record(label(k, c), outcome);
    }
    suite.finish()
}

/// Regularity and projective dimension bounds, generator degrees, fixed-degree vanishing,
/// and the top module as a kernel.
pub fn bounds_suite(complexes: &[SimplicialComplex]) -> VerificationReport {
    let mut suite = Suite::new("bounds");
    for (k, c) in complexes.iter().enumerate() {
        let outcome = (|| {
            let n = c.n();
            let skeleton = if c.is_void() { None } else { c.skeleton_complete_degree()? };
            let mut notes = Vec::new();
            for i in 1..=n {
                let module = build_W(c, i)?;
                let table = betti_table(&module);
                let report = regularity_report(c, i, &table)?;
                ensure(report.passed(), || format!("W_{i}: {:?}", report.violations))?;
                if report.sharp_bound.is_some() {
                    notes.push(format!("reg W_{i} = {:?} <= {}", report.regularity, n - 2));
                }
                if let Some(d) = skeleton {
                    if i != d && i != d + 1 {
                        ensure(module.is_zero(), || format!("W_{i} != 0 although d = {d}"))?;
                    }
                }
            }
            if let Some(d) = skeleton {
                ensure(top_module_is_kernel(c)?, || format!("strand at position {} has incoming maps", d + 1))?;
            }
            Ok(if notes.is_empty() { "bounds hold".into() } else { notes.join("; ") })
        })();
        suite.record(label(k, c), outcome);
    }
    suite.finish()
}

/// Presentation cokernel and pair-module Hilbert functions vs the combinatorial series
/// for complexes with complete codimension-one skeleton.
pub fn presentation_suite(complexes: &[SimplicialComplex]) -> VerificationReport {
    let mut suite = Suite::new("presentation");
    for (k, c) in complexes.iter().enumerate() {
        let d = match c.skeleton_complete_degree() {
            Ok(Some(d)) if d >= 1 => d,
            _ => {
                suite.skip(label(k, c), "no complete codimension-one skeleton");
                continue;
            }
        };
        let outcome = (|| {
            let n = c.n();
            let max_degree = (d + 3).min(2 * n);
            let expected = specialize_single(&hilbert_series_combinatorial(c, d)?, max_degree)?;
            let p = presentation_matrix(c)?;
            let coker = p.cokernel_hilbert(max_degree);
            ensure(coker == expected, || format!("cokernel {coker:?} vs series {expected:?}"))?;
            if n <= 6 {
                let pair = pair_module_hilbert(n, d, &monomial_subspace(c, d), max_degree)?;
                ensure(pair == expected, || format!("pair module {pair:?} vs series {expected:?}"))?;
            }
            Ok(format!("{} x {} presentation, degrees 0..={max_degree}", p.rows.len(), p.cols.len()))
        })();
        suite.record(label(k, c), outcome);
    }
    suite.finish()
}

/// Resonance comparisons: union formula, Cohen–Macaulay propagation, fixed-degree statements.
pub fn resonance_suite(complexes: &[SimplicialComplex]) -> VerificationReport {
    let mut suite = Suite::new("resonance");
    for (k, c) in complexes.iter().enumerate() {
        if c.is_void() || c.n() > 7 {
            continue;
        }
        let id = label(k, c);
        for i in 1..=c.n() {
            match union_consistency_check(c, i) {
                Ok(r) if r.status == CheckStatus::SkippedHypothesis => {
                    suite.skip(format!("{id} union i={i}"), r.reason.unwrap_or_default())
                }
                Ok(r) => suite.record(format!("{id} union i={i}"), Ok(r.jump_union.to_string())),
                Err(e) => suite.record(format!("{id} union i={i}"), Err(e)),
            }
        }
        suite.record(format!("{id} propagation"), propagation_check(c).map(|r| format!("CM = {}, propagates = {}", r.cohen_macaulay, r.propagates)));
        if matches!(c.skeleton_complete_degree(), Ok(Some(_))) {
            suite.record(format!("{id} fixed-degree"), fixed_degree_resonance_check(c).map(|r| format!("d = {}", r.d)));
        }
    }
    suite.finish()
}

/// Certified ideals for the path on four vertices.
#[derive(Clone, Debug)]
pub struct FittingCertificate {
    pub annihilator: PolynomialIdeal,
    pub annihilator_expected: PolynomialIdeal,
    pub fitting: PolynomialIdeal,
    pub fitting_expected: PolynomialIdeal,
    pub annihilator_equal: bool,
    pub fitting_equal: bool,
    pub radical: RadicalReport,
}

impl FittingCertificate {
    pub fn holds(&self) -> bool {
        self.annihilator_equal && self.fitting_equal && self.radical.non_reduced()
    }
}

/// `Ann(W_1) = (x_2) ∩ (x_3)` and `Fitt_0(W_1) = (x_2) ∩ (x_3) ∩ (x_1, x_2², x_3², x_4)`
/// for the path `1-2-3-4`, by reduced Gröbner basis equality.
pub fn fitting_path4() -> Result<FittingCertificate> {
    let path = SimplicialComplex::path(4)?;
    let n = 4;
    let ann = annihilator(&path, 1)?.ideal;
    let annihilator = PolynomialIdeal::monomial(n, &ann.generator_vertices());
    let x2 = PolynomialIdeal::monomial(n, &[vec![2]]);
    let x3 = PolynomialIdeal::monomial(n, &[vec![3]]);
    let annihilator_expected = ideal_intersect(&x2, &x3)?;
    let p = presentation_matrix(&path)?;
    let fitting = fitting_ideal(&polynomial_matrix(&p), n, 0)?;
    let sq = |j: usize| Polynomial::var(n, j - 1).pow(2);
    let embedded = PolynomialIdeal::new(n, vec![Polynomial::var(n, 0), sq(2), sq(3), Polynomial::var(n, 3)])?;
    let fitting_expected = ideal_intersect(&annihilator_expected, &embedded)?;
    let radical = is_radical_vs(&fitting, &annihilator);
    Ok(FittingCertificate {
        annihilator_equal: annihilator == annihilator_expected,
        fitting_equal: fitting == fitting_expected,
        annihilator,
        annihilator_expected,
        fitting,
        fitting_expected,
        radical,
    })
}

fn basis_string(ideal: &PolynomialIdeal) -> String {
    let parts: Vec<String> = ideal.groebner_basis().iter().map(|g| g.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

pub fn fitting_path4_suite() -> VerificationReport {
    let mut suite = Suite::new("fitting-path4");
    match fitting_path4() {
        Ok(cert) => {
            suite.record(
                "annihilator",
                ensure(cert.annihilator_equal, || "annihilator differs from (x2) ∩ (x3)".into())
                    .map(|_| format!("GB {}", basis_string(&cert.annihilator))),
            );
            suite.record(
                "fitting",
                ensure(cert.fitting_equal, || {
                    format!("Fitt_0 GB {} vs {}", basis_string(&cert.fitting), basis_string(&cert.fitting_expected))
                })
                .map(|_| format!("GB {}", basis_string(&cert.fitting))),
            );
            suite.record(
                "non-reduced",
                ensure(cert.radical.non_reduced(), || format!("{:?}", cert.radical))
                    .map(|_| format!("Fitt_0 ⊊ Ann, x2*x3 to the power {:?} lies in Fitt_0", cert.radical.exponent)),
            );
        }
        Err(e) => suite.record("pipeline", Err(e)),
    }
    suite.finish()
}

fn arrangement(n: usize, comps: &[&[usize]]) -> CoordinateSubspaceArrangement {
    CoordinateSubspaceArrangement::from_vertex_sets(n, &comps.iter().map(|c| c.to_vec()).collect::<Vec<_>>())
        .expect("valid components")
}

/// Worked examples: cycles, two disjoint edges, tetrahedron boundary minus a face, Chen ranks.
pub fn examples_suite() -> VerificationReport {
    let mut suite = Suite::new("examples");
    let fitting = fitting_path4_suite();
    suite.cases.extend(fitting.cases.into_iter().map(|mut c| {
        c.id = format!("path4 {}", c.id);
        c
    }));

    for n in 4..=9 {
        suite.record(
            format!("cycle{n} betti"),
            (|| {
                let c = SimplicialComplex::cycle(n)?;
                let t = betti_table(&build_W(&c, 1)?);
                let (reg, pdim) = (t.regularity(), t.pdim());
                let n = n as i64;
                ensure(pdim == n - 2, || format!("pdim {pdim}"))?;
                ensure(reg == Some(n - 2), || format!("reg {reg:?}"))?;
                ensure(t.regularity_shifted(2) == Some(n - 4), || format!("shifted reg {:?}", t.regularity_shifted(2)))?;
                Ok(format!("pdim {pdim}, reg {} (shifted {})", n - 2, n - 4))
            })(),
        );
    }

    let two_edges = named_example("two-edges").expect("named");
    suite.record(
        "two-edges resonance",
        (|| {
            let r1 = jump_resonance(&two_edges, 1)?;
            let r2 = jump_resonance(&two_edges, 2)?;
            let s2 = support_resonance(&two_edges, 2)?;
            ensure(r1.is_whole(), || format!("R^1 = {r1}"))?;
            ensure(r2 == arrangement(4, &[&[1, 2], &[3, 4]]), || format!("R^2 = {r2}"))?;
            ensure(s2.is_empty(), || format!("support R_2 = {s2}"))?;
            ensure(s2 != r2, || "support and jump resonance agree".into())?;
            let prop = propagation_check(&two_edges)?;
            ensure(!prop.propagates, || "resonance propagates".into())?;
            Ok(format!("R^1 = {r1}, R^2 = {r2}, support R_2 = {s2}"))
        })(),
    );

    let tetra = named_example("tetra-minus-face").expect("named");
    suite.record(
        "tetra-minus-face resonance",
        (|| {
            let expected = arrangement(4, &[&[1, 2, 3]]);
            let r2 = jump_resonance(&tetra, 2)?;
            let s2 = support_resonance(&tetra, 2)?;
            ensure(r2 == expected && s2 == expected, || format!("R^2 = {r2}, support R_2 = {s2}"))?;
            let fixed = fixed_degree_resonance_check(&tetra)?;
            ensure(fixed.d == 2, || format!("d = {}", fixed.d))?;
            let s3 = support_resonance(&tetra, 3)?;
            ensure(s3.is_empty(), || format!("support R_3 = {s3}"))?;
            Ok(format!("R^2 = support R_2 = {r2}, support R_3 = {s3}"))
        })(),
    );
    suite.record(
        "tetra-minus-face duality",
        (|| {
            let r = verify_duality(&tetra, 2, SquareFreeDegree::from_vertices(4, &[1, 2, 3])?)?.into_result(&tetra)?;
            ensure(r.homology == 1, || format!("{r:?}"))?;
            Ok("(1, 1, 1)".into())
        })(),
    );

    suite.record(
        "chen c4",
        (|| {
            let chen = chen_ranks(&SimplicialComplex::cycle(4)?, 8)?;
            let expected: Vec<u128> = (0..=8).map(|a| 2 * (a + 1)).collect();
            ensure(chen.shifted_hilbert == expected, || format!("{:?}", chen.shifted_hilbert))?;
            ensure(chen.q_string() == "2t^2", || chen.q_string())?;
            Ok(format!("Q = {}, ranks {:?}", chen.q_string(), chen.shifted_hilbert))
        })(),
    );
    for n in 3..=7 {
        suite.record(
            format!("chen k{n}"),
            (|| {
                let chen = chen_ranks(&SimplicialComplex::complete_graph(n)?, 2 * n)?;
                ensure(chen.q.iter().all(|c| *c == 0) && chen.shifted_hilbert.iter().all(|c| *c == 0), || {
                    format!("{chen:?}")
                })?;
                Ok("Q = 0".into())
            })(),
        );
    }

    let path = named_example("path4").expect("named");
    suite.record(
        "path4 support resonance",
        (|| {
            let s = support_resonance(&path, 1)?;
            ensure(s == arrangement(4, &[&[1, 2, 4], &[1, 3, 4]]), || s.to_string())?;
            let h = specialize_single(&hilbert_series_combinatorial(&path, 1)?, 3)?;
            ensure(h == vec![0, 0, 3, 8], || format!("{h:?}"))?;
            Ok(s.to_string())
        })(),
    );
    suite.finish()
}

/// A randomized suite by name over the seeded corpus.
pub fn randomized_suite(name: &str, seed: u64, count: usize, max_n: usize) -> Result<VerificationReport> {
    let complexes = corpus(seed, count, max_n);
    let skeletal = skeleton_corpus(seed, count / 2, max_n);
    let both: Vec<SimplicialComplex> = complexes.iter().chain(&skeletal).cloned().collect();
    Ok(match name {
        "duality" => duality_suite(&complexes),
        "hilbert" => hilbert_suite(&complexes),
        "hochster" => hochster_suite(&complexes, seed),
        "module" => module_suite(&complexes),
        "bounds" => bounds_suite(&both),
        "presentation" => presentation_suite(&skeletal),
        "resonance" => resonance_suite(&both),
        other => return Err(Error::Precondition(format!("unknown suite {other}"))),
    })
}

pub const RANDOMIZED_SUITES: &[&str] = &["duality", "hilbert", "hochster", "module", "bounds", "presentation", "resonance"];

/// Dimension of `[W_i]` at total degree `a` predicted from the support count, used in docs.
pub fn support_sizes(complex: &SimplicialComplex, i: usize) -> Result<Vec<u64>> {
    let h = hilbert_series_combinatorial(complex, i)?;
    let mut out = vec![0u64; complex.n() + 1];
    for (m, c) in h.terms() {
        out[popcount(*m)] += c;
    }
    Ok(out)
}

/// Indicator vector helper re-exported for examples.
pub fn support_vector(n: usize, vertices: &[usize]) -> Vec<Rational> {
    indicator(n, bits::from_vertices(vertices))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible() {
        assert_eq!(corpus(7, 10, 6), corpus(7, 10, 6));
        assert_ne!(corpus(7, 10, 6), corpus(8, 10, 6));
        for c in skeleton_corpus(3, 20, 6) {
            assert!(matches!(c.skeleton_complete_degree(), Ok(Some(d)) if d >= 1));
        }
    }

    #[test]
    fn examples_pass() {
        let r = examples_suite();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn small_randomized_suites_pass() {
        for name in RANDOMIZED_SUITES {
            let r = randomized_suite(name, 1, 6, 5).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
