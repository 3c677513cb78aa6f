//! The acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Tolerances and runtime bounds are pinned in the code.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use sgs::census::{census, census_with_caps};
use sgs::constructions::{
    base_bicyclic, block_construction, cartesian_product, complete_split, construction_one,
    corona_k1, extend, link, BaseBicyclicSpec, Matrix, RootedTree,
};
use sgs::graph::{SignedGraph, VertexPermutation};
use sgs::poly::is_spectrally_symmetric;
use sgs::smallgraphs::all_graphs;
use sgs::spectral::eigenvalues;
use sgs::symmetry::classify_with_cap;
use sgs::verify::verify_suite;
use std::time::Instant;

const SPECTRUM_TOLERANCE: f64 = 0.01;
const BLOCK_SEED: u64 = 0x0acc_0008;

fn report(number: u32, label: &str, passed: bool, detail: &str) {
    let status = if passed { "pass" } else { "FAIL" };
    if detail.is_empty() {
        println!("criterion {number}: {status} — {label}");
    } else {
        println!("criterion {number}: {status} — {label} ({detail})");
    }
    assert!(passed, "criterion {number} failed: {label} {detail}");
}

#[test]
fn criterion_01_extension_spectrum() {
    let start = Instant::now();
    let base = base_bicyclic(&BaseBicyclicSpec::Infinity {
        lengths: [3, 3],
        neg_marks: [true, false],
    })
    .unwrap();
    let phi = VertexPermutation::new(vec![0, 4, 3, 2, 1]).unwrap();
    let extension = extend(&base, &phi, 1, 3, 1).unwrap();
    let exact_symmetric = is_spectrally_symmetric(&extension.graph);
    let spectrum = eigenvalues(&extension.graph);
    let expected = [2.24, 1.0, 0.0, -1.0, -2.24];
    let within = spectrum
        .values
        .iter()
        .zip(expected.iter())
        .all(|(got, want)| (got - want).abs() <= SPECTRUM_TOLERANCE);
    let fast = start.elapsed().as_secs_f64() < 1.0;
    // Note: the five computed eigenvalues are {±2.6131, ±1.0824, 0}. The
    // quoted reference values {±2.24, ±1, 0} cannot belong to this graph (or
    // to any signature of it): the squares of the eigenvalues must sum to
    // 2m = 16, while the quoted values sum to ≈ 12.03. The exact symmetry
    // check passes; the numeric comparison against the quoted values fails
    // and is reported honestly.
    report(
        1,
        "extension spectrum matches quoted values and exact symmetry holds",
        within && exact_symmetric && fast,
        &format!(
            "computed {:?}, expected {expected:?} ± {SPECTRUM_TOLERANCE}, exact symmetry {exact_symmetric}",
            spectrum
                .values
                .iter()
                .map(|v| (v * 1e4).round() / 1e4)
                .collect::<Vec<_>>()
        ),
    );
}

#[test]
fn criterion_02_census_counts() {
    let start = Instant::now();
    let corpus: Vec<(SignedGraph, usize)> = vec![
        (SignedGraph::all_positive(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(), 1),
        (
            SignedGraph::all_positive(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap(),
            2,
        ),
        (
            base_bicyclic(&BaseBicyclicSpec::Theta { lengths: [1, 2, 2], neg_marks: [false; 3] })
                .unwrap(),
            4,
        ),
        (
            base_bicyclic(&BaseBicyclicSpec::Infinity { lengths: [3, 3], neg_marks: [false; 2] })
                .unwrap(),
            4,
        ),
        (
            base_bicyclic(&BaseBicyclicSpec::Bowtie {
                path: 1,
                lengths: [3, 3],
                neg_marks: [false; 3],
            })
            .unwrap(),
            8 / 2,
        ),
        (
            SignedGraph::all_positive(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
                .unwrap(),
            8,
        ),
    ];
    let mut ok = true;
    let mut detail = String::new();
    for (g, expected) in &corpus {
        // census re-checks the binomial strata internally
        let rep = census(g).unwrap();
        if rep.classes.len() != *expected {
            ok = false;
            detail = format!("got {} classes, expected {expected}", rep.classes.len());
            break;
        }
    }
    let fast = start.elapsed().as_secs_f64() < 5.0;
    report(2, "switching-class counts 1, 2, 4, 4, 4, 8 with binomial strata", ok && fast, &detail);
}

#[test]
fn criterion_03_bicyclic_classification() {
    let start = Instant::now();
    let suite = verify_suite("bicyclic").unwrap();
    let fast = start.elapsed().as_secs_f64() < 120.0;
    report(
        3,
        "base bicyclic census: symmetric iff family member, and symmetric = sign-symmetric",
        suite.passed && fast,
        suite.counterexample.as_deref().unwrap_or(""),
    );
}

#[test]
fn criterion_04_decomposition_identity() {
    let start = Instant::now();
    let suite = verify_suite("decomposition").unwrap();
    let fast = start.elapsed().as_secs_f64() < 300.0;
    report(
        4,
        "characteristic polynomial decomposes over 2-regular subgraphs",
        suite.passed && fast,
        suite.counterexample.as_deref().unwrap_or(""),
    );
}

#[test]
fn criterion_05_sachs_oracle() {
    let suite = verify_suite("sachs").unwrap();
    report(
        5,
        "basic-figure oracle matches characteristic-polynomial coefficients",
        suite.passed,
        suite.counterexample.as_deref().unwrap_or(""),
    );
}

#[test]
fn criterion_06_equivalence() {
    let start = Instant::now();
    let suite = verify_suite("sign_symmetry_equiv").unwrap();
    let fast = start.elapsed().as_secs_f64() < 600.0;
    report(
        6,
        "odd-exchangeable iff sign-symmetric, both sides computed independently",
        suite.passed && fast,
        suite.counterexample.as_deref().unwrap_or(""),
    );
}

#[test]
fn criterion_07_unicyclic() {
    let suite = verify_suite("unicyclic").unwrap();
    report(
        7,
        "unicyclic graphs: symmetric spectrum iff even cycle",
        suite.passed,
        suite.counterexample.as_deref().unwrap_or(""),
    );
}

fn random_block(dim: usize, rng: &mut ChaCha20Rng) -> Matrix {
    let mut m = vec![vec![0i64; dim]; dim];
    for i in 0..dim {
        for j in (i + 1)..dim {
            let entry = rng.gen_range(-1..=1i64);
            m[i][j] = entry;
            m[j][i] = entry;
        }
    }
    m
}

#[test]
fn criterion_08_split_and_block() {
    let mut ok = true;
    let mut detail = String::new();
    for n in 1..=4 {
        for half in all_graphs(n).unwrap() {
            if !is_spectrally_symmetric(&complete_split(&half)) {
                ok = false;
                detail = format!("complete split asymmetric for {}", half.serialize());
            }
        }
    }
    let mut rng = ChaCha20Rng::seed_from_u64(BLOCK_SEED);
    let mut produced = 0;
    while ok && produced < 100 {
        let dim = rng.gen_range(1..=4usize);
        let b = random_block(dim, &mut rng);
        let c = random_block(dim, &mut rng);
        let g = block_construction(&b, &c).unwrap();
        if !g.is_connected() {
            // disconnected samples are skipped: the classifier works on
            // connected graphs
            continue;
        }
        produced += 1;
        let verdict = classify_with_cap(&g, 12).unwrap();
        if !verdict.spectrally_symmetric || verdict.sign_symmetric != Some(true) {
            ok = false;
            detail = format!("block output not sign-symmetric: {}", g.serialize());
        }
    }
    report(
        8,
        "complete split outputs symmetric; 100 block constructions sign-symmetric",
        ok,
        &detail,
    );
}

#[test]
fn criterion_09_closure() {
    // twenty certified spectrally symmetric graphs
    let mut corpus: Vec<SignedGraph> = vec![];
    for spec in [
        BaseBicyclicSpec::Infinity { lengths: [3, 3], neg_marks: [true, false] },
        BaseBicyclicSpec::Theta { lengths: [1, 4, 4], neg_marks: [false, true, false] },
        BaseBicyclicSpec::Infinity { lengths: [5, 5], neg_marks: [true, false] },
        BaseBicyclicSpec::Theta { lengths: [1, 2, 2], neg_marks: [false, true, false] },
        BaseBicyclicSpec::Theta { lengths: [2, 3, 3], neg_marks: [false, true, false] },
        BaseBicyclicSpec::Theta { lengths: [3, 4, 4], neg_marks: [false, true, false] },
        BaseBicyclicSpec::Bowtie { path: 1, lengths: [3, 3], neg_marks: [false, true, false] },
        BaseBicyclicSpec::Bowtie { path: 2, lengths: [3, 3], neg_marks: [false, true, false] },
    ] {
        let g = base_bicyclic(&spec).unwrap();
        if is_spectrally_symmetric(&g) {
            corpus.push(g);
        }
    }
    corpus.push(SignedGraph::new(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap());
    corpus.push(
        SignedGraph::all_positive(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap(),
    );
    corpus.push(SignedGraph::all_positive(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap());
    corpus.push(SignedGraph::new(5, &[(0, 1, 1), (0, 2, -1), (0, 3, 1), (0, 4, 1)]).unwrap());
    corpus.push(complete_split(&SignedGraph::all_positive(2, &[(0, 1)]).unwrap()));
    corpus.push(complete_split(&SignedGraph::all_positive(3, &[(0, 1), (1, 2)]).unwrap()));
    let tri = SignedGraph::all_positive(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
    corpus.push(link(&tri, 0, &[1]).unwrap().graph);
    corpus.push(link(&tri, 1, &[1, -1]).unwrap().graph);
    let star = SignedGraph::all_positive(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    let swap = VertexPermutation::new(vec![0, 2, 1, 4, 3]).unwrap();
    let step1 = extend(&star, &swap, 1, 3, 1).unwrap();
    corpus.push(step1.graph.clone());
    corpus.push(extend(&step1.graph, &step1.witness, 1, 4, 1).unwrap().graph);
    let first = corpus[0].clone();
    let seventh = corpus[6].clone();
    let p2 = SignedGraph::all_positive(2, &[(0, 1)]).unwrap();
    corpus.push(cartesian_product(&first, &p2));
    corpus.push(corona_k1(&seventh));

    let mut ok = corpus.len() >= 20;
    let mut detail = if ok { String::new() } else { "corpus too small".into() };
    for g in &corpus {
        if !is_spectrally_symmetric(g) {
            ok = false;
            detail = format!("corpus member asymmetric: {}", g.serialize());
            break;
        }
        let prod = cartesian_product(g, &p2);
        let cor = corona_k1(g);
        if !is_spectrally_symmetric(&prod) || !is_spectrally_symmetric(&cor) {
            ok = false;
            detail = format!("closure failed for: {}", g.serialize());
            break;
        }
    }
    report(
        9,
        "product with positive K2 and corona preserve symmetric spectra (20 inputs)",
        ok,
        &detail,
    );
}

#[test]
fn criterion_10_separation() {
    let k1 = RootedTree::new(SignedGraph::new(1, &[]).unwrap(), 0).unwrap();
    let p2 = RootedTree::new(SignedGraph::all_positive(2, &[(0, 1)]).unwrap(), 0).unwrap();
    let trees = vec![k1.clone(), p2, k1];
    let g = construction_one(3, &trees).unwrap();
    // n = 14 exceeds the default automorphism cap; raise it for this verdict
    let report_census = census_with_caps(&g, 16, g.n()).unwrap();
    let verdict = classify_with_cap(&g, g.n()).unwrap();
    let symmetric = verdict.spectrally_symmetric;
    let decided = verdict.sign_symmetric.is_some();
    let sign_symmetric = verdict.sign_symmetric == Some(true);
    let census_agrees = report_census
        .classes
        .iter()
        .any(|c| c.verdict.spectrally_symmetric && c.verdict.sign_symmetric == verdict.sign_symmetric);
    let standing_example = if !sign_symmetric {
        "this instance is the standing example of a symmetric but not sign-symmetric graph"
    } else {
        "instance is sign-symmetric"
    };
    report(
        10,
        "double-tree construction with distinct trees is spectrally symmetric; \
         sign-symmetry verdict recorded",
        symmetric && decided && census_agrees,
        &format!("sign_symmetric = {sign_symmetric}; {standing_example}"),
    );
}
