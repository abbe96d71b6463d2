//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Expected values are frozen here independently of the
//! library code they check.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use drg_core::classifier::{
    appendix_inequality_verify, babai_case_analysis, hamming_pipeline, johnson_hypotheses,
    multiplicity_dichotomy, ClassifierConfig, Label,
};
use drg_core::dual::{build_dual, dual_spectrum_check, root_graph_m2};
use drg_core::geometry::{detect_clique_geometry, verify_geometric_identities, GeometryInfo};
use drg_core::graph::{generate, Family, GeneratorSpec, Graph};
use drg_core::motion::{
    distinguishing_bound, exact_motion, max_common_neighbors, mixing_lemma_bound,
    zero_weight_spectral_radius,
};
use drg_core::params::{check_distance_regular, IntersectionArray};
use drg_core::spectral::{adjacency_eigenvalues, closed_form_spectrum, eigen_solve, solve_vartheta};

// ---------------------------------------------------------------------------
// Frozen closed forms (independent of the library's own constructors).
// ---------------------------------------------------------------------------

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// J(s,d): b_i = (d-i)(s-d-i), c_i = i^2.
fn johnson_bc(s: u64, d: u64) -> (Vec<u64>, Vec<u64>) {
    (
        (0..d).map(|i| (d - i) * (s - d - i)).collect(),
        (1..=d).map(|i| i * i).collect(),
    )
}

/// H(d,s): b_i = (d-i)(s-1), c_i = i.
fn hamming_bc(d: u64, s: u64) -> (Vec<u64>, Vec<u64>) {
    (
        (0..d).map(|i| (d - i) * (s - 1)).collect(),
        (1..=d).collect(),
    )
}

/// Johnson spectrum: theta_j = (d-j)(s-d-j) - j with multiplicity
/// C(s,j) - C(s,j-1).
fn johnson_spectrum(s: u64, d: u64) -> (Vec<f64>, Vec<f64>) {
    let eigenvalues = (0..=d)
        .map(|j| ((d - j) * (s - d - j)) as f64 - j as f64)
        .collect();
    let multiplicities = (0..=d)
        .map(|j| {
            if j == 0 {
                1.0
            } else {
                (binom(s, j) - binom(s, j - 1)) as f64
            }
        })
        .collect();
    (eigenvalues, multiplicities)
}

/// Hamming spectrum: theta_j = d(s-1) - js with multiplicity
/// C(d,j)(s-1)^j.
fn hamming_spectrum(d: u64, s: u64) -> (Vec<f64>, Vec<f64>) {
    let eigenvalues = (0..=d)
        .map(|j| (d * (s - 1)) as f64 - (j * s) as f64)
        .collect();
    let multiplicities = (0..=d)
        .map(|j| (binom(d, j) * (s - 1).pow(j as u32)) as f64)
        .collect();
    (eigenvalues, multiplicities)
}

fn johnson_graph(s: u64, d: u64) -> Graph {
    generate(&GeneratorSpec::new(Family::Johnson, s as usize, d as usize)).expect("J(s,d)")
}

fn hamming_graph(d: u64, s: u64) -> Graph {
    generate(&GeneratorSpec::new(Family::Hamming, s as usize, d as usize)).expect("H(d,s)")
}

/// The criterion grids: J(s,d) for d <= 4, 2d+1 <= s <= 12; H(d,s) for
/// d <= 4, 2 <= s <= 8. Diameter starts at 2 (a diameter-1 array has no
/// distance-2 structure to verify).
fn johnson_grid() -> Vec<(u64, u64)> {
    let mut grid = Vec::new();
    for d in 2..=4u64 {
        for s in (2 * d + 1)..=12 {
            grid.push((s, d));
        }
    }
    grid
}

fn hamming_grid() -> Vec<(u64, u64)> {
    let mut grid = Vec::new();
    for d in 2..=4u64 {
        for s in 2..=8u64 {
            grid.push((d, s));
        }
    }
    grid
}

fn assert_no_contradiction(notes: &[String], what: &str) {
    for note in notes {
        assert!(
            !note.contains("theorem-contradiction"),
            "{what}: contradiction event: {note}"
        );
    }
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

/// Every grid member generates, verifies as distance-regular by exhaustive
/// counting, and extracts exactly the frozen closed-form array.
#[test]
fn criterion_01_parameter_oracles_on_the_family_grids() {
    let start = Instant::now();
    for (s, d) in johnson_grid() {
        let g = johnson_graph(s, d);
        assert_eq!(g.n() as u64, binom(s, d), "J({s},{d}) vertex count");
        let arr = check_distance_regular(&g).expect("J(s,d) is distance-regular");
        let (b, c) = johnson_bc(s, d);
        assert_eq!(arr.b_sequence(), &b[..], "J({s},{d}) b-sequence");
        assert_eq!(arr.c_sequence(), &c[..], "J({s},{d}) c-sequence");
    }
    for (d, s) in hamming_grid() {
        let g = hamming_graph(d, s);
        assert_eq!(g.n() as u64, s.pow(d as u32), "H({d},{s}) vertex count");
        let arr = check_distance_regular(&g).expect("H(d,s) is distance-regular");
        let (b, c) = hamming_bc(d, s);
        assert_eq!(arr.b_sequence(), &b[..], "H({d},{s}) b-sequence");
        assert_eq!(arr.c_sequence(), &c[..], "H({d},{s}) c-sequence");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "criterion 1 budget exceeded: {elapsed:?}"
    );
}

/// The numeric eigensolver agrees with the closed-form spectra on the full
/// grid: identical eigenvalues after integer snapping, exactly integral
/// multiplicities, and the Biggs formula's F(2,3) check f_1 = 4.
#[test]
fn criterion_02_spectrum_oracles_match_closed_forms() {
    let mut checked = 0;
    for (s, d) in johnson_grid() {
        let (b, c) = johnson_bc(s, d);
        let arr = IntersectionArray::from_sequences(&b, &c).unwrap();
        let solved = eigen_solve(&arr).expect("eigen_solve on J(s,d)");
        let spec = GeneratorSpec::new(Family::Johnson, s as usize, d as usize);
        let closed = closed_form_spectrum(&spec).expect("closed form for J(s,d)");
        let (eigenvalues, multiplicities) = johnson_spectrum(s, d);
        assert_eq!(solved.eigenvalues, eigenvalues, "J({s},{d}) eigenvalues");
        assert_eq!(closed.eigenvalues, eigenvalues, "J({s},{d}) closed-form eigenvalues");
        assert_eq!(solved.multiplicities, multiplicities, "J({s},{d}) multiplicities");
        assert_eq!(closed.multiplicities, multiplicities);
        assert!(solved.integral_flags.iter().all(|&f| f), "J({s},{d}) integrality");
        assert!(
            solved
                .multiplicity_residuals
                .iter()
                .all(|r| r.abs() < 1e-6),
            "J({s},{d}) multiplicities are exactly integral after snapping"
        );
        checked += 1;
    }
    for (d, s) in hamming_grid() {
        let (b, c) = hamming_bc(d, s);
        let arr = IntersectionArray::from_sequences(&b, &c).unwrap();
        let solved = eigen_solve(&arr).expect("eigen_solve on H(d,s)");
        let spec = GeneratorSpec::new(Family::Hamming, s as usize, d as usize);
        let closed = closed_form_spectrum(&spec).expect("closed form for H(d,s)");
        let (eigenvalues, multiplicities) = hamming_spectrum(d, s);
        assert_eq!(solved.eigenvalues, eigenvalues, "H({d},{s}) eigenvalues");
        assert_eq!(closed.eigenvalues, eigenvalues);
        assert_eq!(solved.multiplicities, multiplicities, "H({d},{s}) multiplicities");
        assert_eq!(closed.multiplicities, multiplicities);
        assert!(solved.integral_flags.iter().all(|&f| f));
        checked += 1;
    }
    assert_eq!(checked, 18 + 21, "full grid covered");

    // Biggs multiplicity formula spot check on H(2,3) at theta_1 = 1.
    let h23 = IntersectionArray::from_sequences(&[4, 2], &[1, 2]).unwrap();
    let profile = eigen_solve(&h23).unwrap();
    assert_eq!(profile.eigenvalues[1], 1.0);
    assert_eq!(profile.multiplicities[1], 4.0, "f_1(H(2,3)) = 4 exactly");
}

/// The smallest-eigenvalue threshold constant and its derived bound.
#[test]
fn criterion_03_vartheta_constants() {
    let range = solve_vartheta(1e-12).expect("bisection converges");
    assert!(
        (range.vartheta_1 - (-2.006594)).abs() < 1e-5,
        "vartheta_1 = {}",
        range.vartheta_1
    );
    assert!(
        range.epsilon_star > 0.00654 && range.epsilon_star < 0.00656,
        "epsilon_star = {}",
        range.epsilon_star
    );
    // Residual of the defining polynomial at the root.
    let t = range.vartheta_1 * range.vartheta_1;
    let residual = (t * (t - 1.0).powi(2) * (t - 3.0) * (t - 4.0) - 1.0).abs();
    assert!(residual < 1e-8, "defining-polynomial residual {residual}");
}

/// Clique geometries detected by direct counting on explicit graphs match
/// the closed-form parameters: H(d,s) has m = d cliques per vertex with
/// psi_i = 1 and tau_i = i; J(s,d) has m = d with psi_i = i and tau_i = i.
#[test]
fn criterion_04_clique_geometry_parameters() {
    for d in 2..=3u64 {
        for s in (2 * d + 1)..=9 {
            let g = johnson_graph(s, d);
            let arr = check_distance_regular(&g).unwrap();
            let profile = eigen_solve(&arr).unwrap();
            let report = detect_clique_geometry(&g, &arr, &profile).unwrap();
            assert!(report.is_geometric, "J({s},{d}) is geometric");
            assert_eq!(report.m, Some(d), "J({s},{d}) m");
            let psi: Vec<u64> = (1..=d).collect();
            let tau: Vec<u64> = (1..=d).collect();
            assert_eq!(report.psi, psi, "J({s},{d}) psi");
            assert_eq!(report.tau, tau, "J({s},{d}) tau");
            let identities = verify_geometric_identities(&report, &arr);
            assert!(
                identities.iter().all(|r| !r.applicable || r.holds),
                "J({s},{d}) identities: {identities:?}"
            );
        }
    }
    for d in 2..=3u64 {
        for s in 2..=8u64 {
            let g = hamming_graph(d, s);
            let arr = check_distance_regular(&g).unwrap();
            let profile = eigen_solve(&arr).unwrap();
            let report = detect_clique_geometry(&g, &arr, &profile).unwrap();
            assert!(report.is_geometric, "H({d},{s}) is geometric");
            assert_eq!(report.m, Some(d), "H({d},{s}) m");
            let psi: Vec<u64> = vec![1; d as usize];
            let tau: Vec<u64> = (1..=d).collect();
            assert_eq!(report.psi, psi, "H({d},{s}) psi");
            assert_eq!(report.tau, tau, "H({d},{s}) tau");
            let identities = verify_geometric_identities(&report, &arr);
            assert!(
                identities.iter().all(|r| !r.applicable || r.holds),
                "H({d},{s}) identities: {identities:?}"
            );
        }
    }
}

/// Dual graphs: H(2,3) dualizes to K_{3,3} and J(5,2) to K_5; the dual's
/// spectrum is contained in the predicted set; and for m = 2 the line graph
/// of the dual reconstructs the original.
#[test]
fn criterion_05_dual_graphs() {
    // H(2,3) -> K_{3,3}: the unique triangle-free cubic graph on 6
    // vertices, with intersection array {3,2;1,3}.
    let g = hamming_graph(2, 3);
    let arr = check_distance_regular(&g).unwrap();
    let profile = eigen_solve(&arr).unwrap();
    let detection = detect_clique_geometry(&g, &arr, &profile).unwrap();
    let dual = build_dual(&g, &detection).unwrap();
    assert_eq!(dual.graph.n(), 6);
    assert_eq!(dual.graph.edge_count(), 9);
    assert_eq!(dual.k_tilde, 3);
    assert_eq!(dual.lambda_tilde, Some(0));
    let dual_arr = check_distance_regular(&dual.graph).unwrap();
    assert_eq!(dual_arr.b_sequence(), &[3, 2]);
    assert_eq!(dual_arr.c_sequence(), &[1, 3]);
    let containment = dual_spectrum_check(&g, &dual, &profile);
    assert!(containment.holds && containment.applicable, "{containment:?}");
    assert!(root_graph_m2(&g, &detection).is_ok(), "H(2,3) line-graph round trip");

    // J(5,2) -> K_5: complete on 5 vertices.
    let g = johnson_graph(5, 2);
    let arr = check_distance_regular(&g).unwrap();
    let profile = eigen_solve(&arr).unwrap();
    let detection = detect_clique_geometry(&g, &arr, &profile).unwrap();
    let dual = build_dual(&g, &detection).unwrap();
    assert_eq!(dual.graph.n(), 5);
    assert_eq!(dual.graph.edge_count(), 10, "K_5");
    assert_eq!(dual.k_tilde, 4);
    let containment = dual_spectrum_check(&g, &dual, &profile);
    assert!(containment.holds && containment.applicable, "{containment:?}");
    assert!(root_graph_m2(&g, &detection).is_ok(), "J(5,2) line-graph round trip");
}

/// Exact motion by full automorphism enumeration on the four reference
/// graphs, with the frozen group orders.
#[test]
fn criterion_06_exact_motion_reference_values() {
    let start = Instant::now();
    let cases: Vec<(Graph, &str, u64, u64)> = vec![
        (johnson_graph(5, 2), "J(5,2)", 6, 120),
        (johnson_graph(8, 2), "J(8,2)", 12, 40_320),
        (hamming_graph(2, 3), "H(2,3)", 6, 72),
        (hamming_graph(2, 4), "H(2,4)", 8, 1_152),
    ];
    for (g, name, motion, order) in &cases {
        let report = exact_motion(g, 100_000);
        assert_eq!(report.exact_motion, Some(*motion), "{name} motion");
        assert_eq!(report.group_order, Some(*order), "{name} group order");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(300),
        "criterion 6 budget exceeded: {elapsed:?}"
    );
}

/// Every motion lower bound stays below the exact value on the criterion-6
/// graphs; J(8,2)'s mixing bound is exactly 14/3.
#[test]
fn criterion_07_lower_bounds_never_exceed_exact_motion() {
    let cases: Vec<(Graph, &str)> = vec![
        (johnson_graph(5, 2), "J(5,2)"),
        (johnson_graph(8, 2), "J(8,2)"),
        (hamming_graph(2, 3), "H(2,3)"),
        (hamming_graph(2, 4), "H(2,4)"),
    ];
    for (g, name) in &cases {
        let arr = check_distance_regular(g).unwrap();
        let exact = exact_motion(g, 100_000)
            .exact_motion
            .expect("group enumerates") as f64;
        let xi = zero_weight_spectral_radius(g);
        let q = max_common_neighbors(g);
        let mixing = mixing_lemma_bound(g.n() as u64, arr.degree(), xi, q);
        assert!(
            mixing <= exact + 1e-9,
            "{name}: mixing bound {mixing} exceeds exact {exact}"
        );
        if *name == "J(8,2)" {
            assert!(
                (mixing - 14.0 / 3.0).abs() < 1e-9,
                "J(8,2) mixing bound should be 14/3, got {mixing}"
            );
            assert_eq!(exact, 12.0);
        }
        for j in 1..arr.diameter() {
            let alpha =
                (arr.b(j).min(arr.c(j + 1)) as f64) / arr.degree() as f64;
            if alpha <= 0.0 {
                continue;
            }
            let bound = distinguishing_bound(&arr, alpha, j).unwrap();
            assert!(
                bound <= exact + 1e-9,
                "{name}: distinguishing bound {bound} at j={j} exceeds exact {exact}"
            );
        }
    }
}

/// The Hamming recognition pipeline accepts H(3,s) at array level for
/// s >= 1460 (where epsilon = 1/(s-1) clears every hypothesis) within the
/// per-array time budget.
#[test]
fn criterion_08_hamming_pipeline_at_scale() {
    for s in [1460u64, 2000, 4096, 9999] {
        let start = Instant::now();
        let (b, c) = hamming_bc(3, s);
        let arr = IntersectionArray::from_sequences(&b, &c).unwrap();
        let profile = eigen_solve(&arr).unwrap();
        let geometry = GeometryInfo::from_array(&arr, 3).unwrap();
        let mut config = ClassifierConfig::for_diameter(3).unwrap();
        config.epsilon = 1.0 / (s - 1) as f64;
        config.validate().unwrap();
        let outcome = hamming_pipeline(&arr, &profile, &geometry, &config);
        assert!(
            outcome.checklist.iter().all(|row| row.holds),
            "H(3,{s}) checklist: {:?}",
            outcome.checklist
        );
        match outcome.label {
            Label::Hamming { d, s: got_s } => {
                assert_eq!((d, got_s), (3, s), "H(3,{s}) label");
            }
            ref other => panic!("H(3,{s}) classified as {other:?}"),
        }
        assert_no_contradiction(&outcome.notes, "criterion 8");
        let elapsed = start.elapsed();
        assert!(
            elapsed < Duration::from_secs(1),
            "H(3,{s}) took {elapsed:?}, budget is 1s per array"
        );
    }
}

/// The Johnson recognition pipeline accepts J(s,3) for every s with
/// k = 3(s-3) >= 29, and the spectral-gap hypothesis
/// theta_1 + 1 > (1 - epsilon*) b_1 holds numerically throughout.
#[test]
fn criterion_09_johnson_hypotheses_across_the_range() {
    let config = ClassifierConfig::for_diameter(3).unwrap();
    for s in 13..=40u64 {
        assert!(3 * (s - 3) >= 29);
        let (b, c) = johnson_bc(s, 3);
        let arr = IntersectionArray::from_sequences(&b, &c).unwrap();
        let profile = eigen_solve(&arr).unwrap();
        let geometry = GeometryInfo::from_array(&arr, 3).unwrap();

        let theta_1 = profile.eigenvalues[1];
        let b_1 = arr.b(1) as f64;
        assert!(
            theta_1 + 1.0 > (1.0 - config.epsilon_star) * b_1,
            "J({s},3) spectral-gap hypothesis: {} vs {}",
            theta_1 + 1.0,
            (1.0 - config.epsilon_star) * b_1
        );

        let outcome = johnson_hypotheses(&arr, &profile, &geometry, &config);
        assert!(
            outcome.checklist.iter().all(|row| row.holds),
            "J({s},3) checklist: {:?}",
            outcome.checklist
        );
        match outcome.label {
            Label::Johnson { s: got_s, d } => assert_eq!((got_s, d), (s, 3)),
            ref other => panic!("J({s},3) classified as {other:?}"),
        }
        assert_no_contradiction(&outcome.notes, "criterion 9");
    }
}

/// Every grid Hamming array lands in the dichotomy's exceptional branch
/// (m = d, t = d, c_d = d): its first multiplicity equals k, so the
/// bounded branch f_1 <= k - 1 fails, yet no contradiction event fires —
/// neither in the dichotomy nor in the full case analysis.
#[test]
fn criterion_10_multiplicity_dichotomy_lands_exceptional() {
    let check = |d: u64, s: u64| {
        let (b, c) = hamming_bc(d, s);
        let arr = IntersectionArray::from_sequences(&b, &c).unwrap();
        let profile = eigen_solve(&arr).unwrap();
        let geometry = GeometryInfo::from_array(&arr, d).unwrap();
        let m = d as f64;
        let epsilon = 1.0 / (12.0 * m.powi(4) * d as f64);
        let outcome =
            multiplicity_dichotomy(&profile, &geometry, &arr, epsilon, d as usize);

        let branch = outcome
            .checklist
            .iter()
            .find(|row| row.name.starts_with("exceptional branch"))
            .expect("exceptional-branch row present");
        assert!(branch.holds, "H({d},{s}) exceptional branch: {branch:?}");
        // f_1 = k for these arrays, so the bounded branch is the one that
        // fails; the exceptional branch is what saves the dichotomy.
        let f1 = outcome
            .checklist
            .iter()
            .find(|row| row.name.starts_with("f_1"))
            .expect("bounded-branch row present");
        assert!(!f1.holds, "H({d},{s}) should exceed k - 1: {f1:?}");
        assert_no_contradiction(&outcome.notes, "criterion 10 dichotomy");

        // The full case analysis on the same arrays is also contradiction-free.
        let config = ClassifierConfig::for_diameter(d as usize).unwrap();
        let case = babai_case_analysis(&arr, &profile, Some(&geometry), None, &config);
        assert_no_contradiction(&case.notes, "criterion 10 case analysis");
        outcome
    };

    for (d, s) in hamming_grid() {
        check(d, s);
    }

    // At s = 385 every hypothesis holds with epsilon = 1/(12 m^4 d), so
    // the dichotomy itself (not just its branch rows) selects the
    // exceptional branch.
    let outcome = check(2, 385);
    assert!(
        outcome
            .notes
            .iter()
            .any(|n| n.contains("multiplicity branch: exceptional")),
        "H(2,385) should select the exceptional branch: {:?}",
        outcome.notes
    );
}

/// The clique-intersection inequality verified exhaustively in exact
/// integer arithmetic up to m = 200, within budget.
#[test]
fn criterion_11_appendix_inequality_exact() {
    let start = Instant::now();
    let report = appendix_inequality_verify(200).expect("m_max = 200 is valid");
    assert!(report.holds, "zero violations expected: {report:?}");
    assert_eq!(report.witness.get("min_slack"), Some(&0.0));
    assert_eq!(report.witness.get("m"), Some(&2.0));
    assert_eq!(report.witness.get("x"), Some(&1.0));
    assert_eq!(report.witness.get("t"), Some(&2.0));
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "criterion 11 budget exceeded: {elapsed:?}"
    );
}

/// Local spectral window: in every family member with at most 300
/// vertices, each vertex's neighborhood graph has its smallest eigenvalue
/// >= -1 - b+ and its second-largest <= -1 - b-, within 1e-6.
#[test]
fn criterion_12_local_eigenvalue_window() {
    let mut members: Vec<(String, Graph)> = Vec::new();
    for (s, d) in johnson_grid() {
        if binom(s, d) <= 300 {
            members.push((format!("J({s},{d})"), johnson_graph(s, d)));
        }
    }
    for (d, s) in hamming_grid() {
        if s.pow(d as u32) <= 300 {
            members.push((format!("H({d},{s})"), hamming_graph(d, s)));
        }
    }
    assert!(members.len() >= 20, "grid restricted to n <= 300 still has many members");

    for (name, g) in &members {
        let arr = check_distance_regular(g).unwrap();
        let profile = eigen_solve(&arr).unwrap();
        let b_plus = profile.b_plus.expect("diameter >= 2");
        let b_minus = profile.b_minus.expect("diameter >= 2");
        let lower = -1.0 - b_plus;
        let upper = -1.0 - b_minus;
        for v in 0..g.n() {
            let (local, _) = g.neighborhood_subgraph(v).unwrap();
            let eigs = adjacency_eigenvalues(&local);
            let smallest = *eigs.last().unwrap();
            let second = eigs[1];
            assert!(
                smallest >= lower - 1e-6,
                "{name} vertex {v}: local eigenvalue {smallest} below {lower}"
            );
            assert!(
                second <= upper + 1e-6,
                "{name} vertex {v}: local second eigenvalue {second} above {upper}"
            );
        }
    }
}

/// Two scan runs over d = 2, k <= 12 are byte-identical and the feasible
/// output includes the reference arrays: J(5,2), H(2,3), H(2,4), and the
/// Petersen graph.
#[test]
fn criterion_13_scan_determinism_and_content() {
    let run = || {
        let output = Command::new(env!("CARGO_BIN_EXE_drg"))
            .args(["scan", "--d", "2", "--k-max", "12"])
            .output()
            .expect("binary runs");
        assert!(output.status.success(), "scan exits 0");
        output.stdout
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "scan output must be byte-identical across runs");

    let text = String::from_utf8(first).unwrap();
    let mut found: BTreeSet<&str> = BTreeSet::new();
    for line in text.lines() {
        let doc: serde_json::Value = serde_json::from_str(line).expect("NDJSON line");
        let b = doc["report"]["b"].clone();
        let c = doc["report"]["c"].clone();
        let pair = (b, c);
        if pair == (serde_json::json!([6, 2]), serde_json::json!([1, 4])) {
            found.insert("J(5,2)");
        } else if pair == (serde_json::json!([4, 2]), serde_json::json!([1, 2])) {
            found.insert("H(2,3)");
        } else if pair == (serde_json::json!([6, 3]), serde_json::json!([1, 2])) {
            found.insert("H(2,4)");
        } else if pair == (serde_json::json!([3, 2]), serde_json::json!([1, 1])) {
            found.insert("Petersen");
        }
    }
    for expected in ["J(5,2)", "H(2,3)", "H(2,4)", "Petersen"] {
        assert!(found.contains(expected), "{expected} missing from scan output");
    }
}
