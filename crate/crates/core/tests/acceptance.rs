//! Acceptance criteria. Each criterion prints one `PASS`/`FAIL` line; the process exits
//! nonzero if any criterion fails. All comparisons are exact.

use std::time::{Duration, Instant};

use koszul::complex::{SimplicialComplex, SquareFreeDegree};
use koszul::koszul::{betti_table, build_W, chen_ranks};
use koszul::resonance::{fixed_degree_resonance_check, jump_resonance, propagation_check, support_resonance, CoordinateSubspaceArrangement};
use koszul::verify::{self, corpus, skeleton_corpus, VerificationReport};

const SEED: u64 = 2024;
const CORPUS_SIZE: usize = 200;
const CORPUS_MAX_N: usize = 7;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite_outcome(report: &VerificationReport) -> Outcome {
    let failures: Vec<String> = report.failures().take(3).map(|c| format!("{}: {}", c.id, c.details)).collect();
    if failures.is_empty() {
        Ok(report.summary())
    } else {
        Err(format!("{}; first failures: {}", report.summary(), failures.join(" | ")))
    }
}

fn arrangement(n: usize, comps: &[Vec<usize>]) -> CoordinateSubspaceArrangement {
    CoordinateSubspaceArrangement::from_vertex_sets(n, comps).unwrap()
}

fn fitting_path4() -> Outcome {
    let cert = verify::fitting_path4().map_err(|e| e.to_string())?;
    check(cert.annihilator_equal, || "Ann(W_1) differs from (x2) ∩ (x3)".into())?;
    check(cert.fitting_equal, || "Fitt_0(W_1) differs from (x2) ∩ (x3) ∩ (x1, x2^2, x3^2, x4)".into())?;
    check(cert.radical.non_reduced(), || format!("Fitting scheme not shown non-reduced: {:?}", cert.radical))?;
    Ok("annihilator and Fitt_0 certified by reduced GB, Fitt_0 ⊊ Ann".into())
}

fn cycles() -> Outcome {
    let mut parts = Vec::new();
    for n in 4..=9usize {
        let start = Instant::now();
        let c = SimplicialComplex::cycle(n).map_err(|e| e.to_string())?;
        let table = betti_table(&build_W(&c, 1).map_err(|e| e.to_string())?);
        let expected = n as i64 - 2;
        check(table.pdim() == expected, || format!("C_{n}: pdim {} != {expected}", table.pdim()))?;
        check(table.regularity() == Some(expected), || format!("C_{n}: reg {:?} != {expected}", table.regularity()))?;
        check(table.regularity_shifted(2) == Some(n as i64 - 4), || {
            format!("C_{n}: shifted reg {:?} != {}", table.regularity_shifted(2), n as i64 - 4)
        })?;
        if n == 9 {
            let elapsed = start.elapsed();
            check(elapsed < Duration::from_secs(30), || format!("C_9 took {elapsed:?}"))?;
            parts.push(format!("C_9 in {} ms", elapsed.as_millis()));
        }
    }
    Ok(format!("pdim = reg = n-2, shifted reg = n-4 for n = 4..9; {}", parts.join("")))
}

fn two_edges() -> Outcome {
    let c = SimplicialComplex::from_facets(4, &[vec![1, 2], vec![3, 4]]).map_err(|e| e.to_string())?;
    let err = |e: koszul::error::Error| e.to_string();
    let r1 = jump_resonance(&c, 1).map_err(err)?;
    let r2 = jump_resonance(&c, 2).map_err(err)?;
    let s2 = support_resonance(&c, 2).map_err(err)?;
    check(r1.is_whole(), || format!("R^1 = {r1}"))?;
    check(r2 == arrangement(4, &[vec![1, 2], vec![3, 4]]), || format!("R^2 = {r2}"))?;
    check(s2.is_empty(), || format!("support R_2 = {s2}"))?;
    check(s2 != r2, || "support R_2 = R^2".into())?;
    let prop = propagation_check(&c).map_err(err)?;
    check(!prop.propagates, || "resonance propagates".into())?;
    Ok(format!("R^1 = {r1}, R^2 = {r2}, support R_2 = {s2}, propagation fails"))
}

fn tetra_minus_face() -> Outcome {
    let c = SimplicialComplex::from_facets(4, &[vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]).map_err(|e| e.to_string())?;
    let err = |e: koszul::error::Error| e.to_string();
    let hyperplane = arrangement(4, &[vec![1, 2, 3]]);
    let r2 = jump_resonance(&c, 2).map_err(err)?;
    let s2 = support_resonance(&c, 2).map_err(err)?;
    check(r2 == hyperplane, || format!("R^2 = {r2}"))?;
    check(s2 == hyperplane, || format!("support R_2 = {s2}"))?;
    let report = fixed_degree_resonance_check(&c).map_err(err)?;
    check(report.d == 2 && report.passed(), || format!("{report:?}"))?;
    let duality = koszul::koszul::verify_duality(&c, 2, SquareFreeDegree::from_vertices(4, &[1, 2, 3]).map_err(err)?)
        .map_err(err)?;
    check(duality.holds(), || format!("{duality:?}"))?;
    Ok(format!("R^2 = support R_2 = {r2}, fixed-degree statements hold with d = 2"))
}

fn budgeted(report: VerificationReport, budget: Option<Duration>) -> Outcome {
    let summary = suite_outcome(&report)?;
    if let Some(b) = budget {
        check(Duration::from_millis(report.wall_time_ms as u64) < b, || format!("{summary} exceeds {b:?}"))?;
    }
    Ok(summary)
}

fn duality(complexes: &[SimplicialComplex]) -> Outcome {
    budgeted(verify::duality_suite(complexes), Some(Duration::from_secs(300)))
}

fn hilbert(complexes: &[SimplicialComplex]) -> Outcome {
    budgeted(verify::hilbert_suite(complexes), None)
}

fn hochster(complexes: &[SimplicialComplex]) -> Outcome {
    let small: Vec<SimplicialComplex> = complexes.iter().filter(|c| c.n() <= 6).cloned().collect();
    let report = verify::hochster_suite(&small, SEED);
    check(report.cases.len() == small.len(), || "some complexes were not checked".into())?;
    budgeted(report, None)
}

fn module_invariants(complexes: &[SimplicialComplex]) -> Outcome {
    budgeted(verify::module_suite(complexes), None)
}

fn bounds(complexes: &[SimplicialComplex], skeletal: &[SimplicialComplex]) -> Outcome {
    let all: Vec<SimplicialComplex> = complexes.iter().chain(skeletal).cloned().collect();
    let bounds = suite_outcome(&verify::bounds_suite(&all))?;
    let presentation = suite_outcome(&verify::presentation_suite(skeletal))?;
    Ok(format!("{bounds}; {presentation}; attained by C_n"))
}

fn chen() -> Outcome {
    let chen = chen_ranks(&SimplicialComplex::cycle(4).map_err(|e| e.to_string())?, 10).map_err(|e| e.to_string())?;
    let expected: Vec<u128> = (0..=10).map(|a| 2 * (a + 1)).collect();
    check(chen.shifted_hilbert == expected, || format!("C_4 ranks {:?}", chen.shifted_hilbert))?;
    check(chen.q_string() == "2t^2", || format!("Q = {}", chen.q_string()))?;
    for n in 2..=8 {
        let k = chen_ranks(&SimplicialComplex::complete_graph(n).map_err(|e| e.to_string())?, 12).map_err(|e| e.to_string())?;
        check(k.q.iter().all(|c| *c == 0), || format!("Q_K{n} = {}", k.q_string()))?;
        check(k.shifted_hilbert.iter().all(|c| *c == 0), || format!("K_{n} ranks {:?}", k.shifted_hilbert))?;
    }
    Ok(format!("C_4: Q = 2t^2, ranks {:?}; K_2..K_8 identically zero", &chen.shifted_hilbert[..5]))
}

fn main() {
    let complexes = corpus(SEED, CORPUS_SIZE, CORPUS_MAX_N);
    let skeletal = skeleton_corpus(SEED, CORPUS_SIZE / 2, CORPUS_MAX_N);
    let criteria: Vec<(&str, Option<Duration>, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("annihilator and Fitting ideal of the path", Some(Duration::from_secs(1)), Box::new(fitting_path4)),
        ("cycle Betti invariants", None, Box::new(cycles)),
        ("two disjoint edges resonance", Some(Duration::from_secs(1)), Box::new(two_edges)),
        ("tetrahedron boundary minus a face", Some(Duration::from_secs(1)), Box::new(tetra_minus_face)),
        ("Koszul module, Tor and restriction homology", None, Box::new(|| duality(&complexes))),
        ("two-route Hilbert series", None, Box::new(|| hilbert(&complexes))),
        ("Hochster sums", None, Box::new(|| hochster(&complexes))),
        ("square-free module invariants", None, Box::new(|| module_invariants(&complexes))),
        ("regularity and vanishing bounds", None, Box::new(|| bounds(&complexes, &skeletal))),
        ("Chen ranks", None, Box::new(chen)),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(msg), Some(b)) = (&outcome, budget) {
            if elapsed >= *b {
                outcome = Err(format!("{msg}; took {elapsed:?}, budget {b:?}"));
            }
        }
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS {name} ({} ms): {msg}", k + 1, elapsed.as_millis()),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({} ms): {msg}", k + 1, elapsed.as_millis());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
