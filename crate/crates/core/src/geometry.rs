//! Clique geometries in distance-regular graphs.
//!
//! A connected regular graph of degree `k` whose least adjacency eigenvalue
//! is the integer `−m` may carry a *clique geometry*: a collection 𝒞 of
//! cliques, each of the maximum size `1 + k/m` allowed by the Delsarte bound,
//! such that every edge lies in exactly one member of 𝒞. When it does, every
//! vertex lies in exactly `m` members, and the local parameters
//!
//! * `ψᵢ` — how many vertices of a clique `C` are at distance `i` from a
//!   vertex `x` with `dist(x, C) = i`, and
//! * `τᵢ` — how many cliques through `x` come within distance `i − 1` of a
//!   vertex `y` with `dist(x, y) = i`
//!
//! are well defined and tie back to the intersection array via
//! `cᵢ = τᵢ ψ_{i−1}` and `bᵢ = (m − τᵢ)(k/m + 1 − ψᵢ)`. This module detects
//! such geometries by exhaustive search, re-verifies the parameter identities
//! by direct counting, evaluates Metsch's sufficient criterion for a line
//! system, and classifies vertex neighborhoods (connected vs. a disjoint
//! union of equal cliques vs. a rook's-graph local structure).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{enumerate_maximal_cliques, Graph};
use crate::params::IntersectionArray;
use crate::report::{witness, InequalityReport};
use crate::spectral::SpectralProfile;

/// Tolerance for deciding that the Delsarte bound `1 − k/θ_min` or the
/// clique-per-vertex count `−θ_min` is an integer.
pub const GEOMETRY_INT_TOL: f64 = 1e-6;

/// How the neighborhood graph X(v) of a vertex decomposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NeighborhoodKind {
    /// X(v) is connected (a single clique counts as connected but is
    /// reported as `DisjointCliquesLocal` with one clique).
    ConnectedLocal,
    /// X(v) is a disjoint union of equal-size cliques.
    DisjointCliquesLocal,
}

/// Outcome of searching a graph for a clique geometry.
///
/// When `is_geometric` is false only `delsarte_size` is meaningful: `m` is
/// `None` and the remaining collections are empty.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CliqueGeometryReport {
    /// Whether a clique geometry (an exact edge cover by maximum cliques)
    /// was found.
    pub is_geometric: bool,
    /// Number of geometry cliques through each vertex; equals `−θ_min`.
    pub m: Option<u64>,
    /// The Delsarte clique bound `1 − k/θ_min`, not necessarily integral.
    pub delsarte_size: f64,
    /// The geometry 𝒞 itself: each clique as a sorted vertex list, the list
    /// of cliques sorted lexicographically.
    pub cliques: Vec<Vec<usize>>,
    /// `ψ₀ .. ψ_{d−1}`, counted exhaustively over all (clique, vertex) pairs.
    pub psi: Vec<u64>,
    /// `τ₁ .. τ_d`, counted exhaustively over all ordered vertex pairs.
    pub tau: Vec<u64>,
    /// Local structure implied by `ψ₁` (`DisjointCliquesLocal` iff `ψ₁ = 1`).
    pub neighborhood_kind: Option<NeighborhoodKind>,
}

impl CliqueGeometryReport {
    fn non_geometric(delsarte_size: f64) -> CliqueGeometryReport {
        CliqueGeometryReport {
            is_geometric: false,
            m: None,
            delsarte_size,
            cliques: Vec::new(),
            psi: Vec::new(),
            tau: Vec::new(),
            neighborhood_kind: None,
        }
    }
}

/// The Delsarte clique bound: a clique in a regular graph of degree `k`
/// with least adjacency eigenvalue `theta_min < 0` has at most
/// `1 − k/theta_min` vertices.
pub fn delsarte_bound(k: u64, theta_min: f64) -> Result<f64> {
    if !theta_min.is_finite() || theta_min >= 0.0 {
        return Err(Error::InvalidParameters(format!(
            "Delsarte bound needs a negative least eigenvalue, got {theta_min}"
        )));
    }
    Ok(1.0 - k as f64 / theta_min)
}

/// Searches `g` for a clique geometry and, when one exists, computes `m`,
/// the clique list, and the local parameters `ψᵢ`/`τᵢ` by direct counting.
///
/// The candidate cliques are the maximal cliques of exactly the Delsarte
/// size; the geometry, if any, is an exact edge cover chosen from them. A
/// non-integral Delsarte bound short-circuits to "not geometric". Finding a
/// cover while `θ_min` is not an integer is impossible for a genuine
/// distance-regular graph and reported as a structural violation, as is any
/// non-constant `ψᵢ`/`τᵢ` count.
pub fn detect_clique_geometry(
    g: &Graph,
    arr: &IntersectionArray,
    profile: &SpectralProfile,
) -> Result<CliqueGeometryReport> {
    let n = g.n();
    let k = arr.degree();
    let d = arr.diameter();
    let theta_min = profile.theta_min();
    let delsarte_size = delsarte_bound(k, theta_min)?;

    let size_round = delsarte_size.round();
    if (delsarte_size - size_round).abs() > GEOMETRY_INT_TOL || size_round < 2.0 {
        return Ok(CliqueGeometryReport::non_geometric(delsarte_size));
    }
    let size = size_round as usize;

    let mut candidates = enumerate_maximal_cliques(g, size);
    candidates.retain(|c| c.len() == size);

    // Index the edges and map each to the candidate cliques containing it.
    let edges = g.edges();
    let mut edge_id = std::collections::HashMap::with_capacity(edges.len());
    for (idx, &e) in edges.iter().enumerate() {
        edge_id.insert(e, idx);
    }
    let mut cand_edges: Vec<Vec<usize>> = Vec::with_capacity(candidates.len());
    let mut edge_cands: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for (ci, clique) in candidates.iter().enumerate() {
        let mut ids = Vec::with_capacity(size * (size - 1) / 2);
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                let id = edge_id[&(u.min(v), u.max(v))];
                ids.push(id);
                edge_cands[id].push(ci);
            }
        }
        cand_edges.push(ids);
    }
    if edge_cands.iter().any(Vec::is_empty) {
        // Some edge lies in no maximum clique: no geometry can exist.
        return Ok(CliqueGeometryReport::non_geometric(delsarte_size));
    }

    let chosen = match exact_edge_cover(edges.len(), &cand_edges, &edge_cands) {
        Some(chosen) => chosen,
        None => return Ok(CliqueGeometryReport::non_geometric(delsarte_size)),
    };

    // A cover exists, so the least eigenvalue must be the integer −m.
    let m_f = -theta_min;
    if (m_f - m_f.round()).abs() > GEOMETRY_INT_TOL {
        return Err(Error::StructuralViolation(format!(
            "an edge cover by cliques of size {size} exists, yet the least \
             eigenvalue {theta_min} is not an integer"
        )));
    }
    let m = m_f.round() as u64;
    if m * (size as u64 - 1) != k {
        return Err(Error::Internal(format!(
            "clique size {size} and least eigenvalue {theta_min} disagree \
             with degree {k}"
        )));
    }

    let mut cliques: Vec<Vec<usize>> = chosen.into_iter().map(|c| candidates[c].clone()).collect();
    cliques.sort();

    // Every vertex must lie in exactly m cliques of the geometry.
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ci, clique) in cliques.iter().enumerate() {
        for &v in clique {
            membership[v].push(ci);
        }
    }
    if let Some(v) = (0..n).find(|&v| membership[v].len() as u64 != m) {
        return Err(Error::StructuralViolation(format!(
            "vertex {v} lies in {} geometry cliques, expected m = {m}",
            membership[v].len()
        )));
    }

    let dist: Vec<Vec<usize>> = (0..n).map(|v| g.bfs_distances(v)).collect();

    // ψᵢ: for every clique C and vertex x at distance i = dist(x, C), the
    // number of members of C at distance exactly i from x. Constant by the
    // theory; verified over every (clique, vertex) pair.
    let mut psi: Vec<Option<u64>> = vec![None; d];
    for clique in &cliques {
        for x in 0..n {
            let i = clique.iter().map(|&y| dist[x][y]).min().expect("nonempty");
            let count = clique.iter().filter(|&&y| dist[x][y] == i).count() as u64;
            if i >= d {
                return Err(Error::StructuralViolation(format!(
                    "vertex {x} is at distance {i} from a geometry clique; \
                     the covering radius must be at most {}",
                    d - 1
                )));
            }
            match psi[i] {
                None => psi[i] = Some(count),
                Some(prev) if prev != count => {
                    return Err(Error::StructuralViolation(format!(
                        "psi_{i} is not constant: found {prev} and {count}"
                    )));
                }
                Some(_) => {}
            }
        }
    }

    // τᵢ: for every ordered pair (x, y) at distance i ≥ 1, the number of
    // geometry cliques through x whose distance to y is i − 1.
    let mut tau: Vec<Option<u64>> = vec![None; d];
    for x in 0..n {
        for y in 0..n {
            let i = dist[x][y];
            if i == 0 {
                continue;
            }
            let count = membership[x]
                .iter()
                .filter(|&&ci| {
                    let c_dist = cliques[ci].iter().map(|&z| dist[y][z]).min().expect("nonempty");
                    c_dist == i - 1
                })
                .count() as u64;
            match tau[i - 1] {
                None => tau[i - 1] = Some(count),
                Some(prev) if prev != count => {
                    return Err(Error::StructuralViolation(format!(
                        "tau_{i} is not constant: found {prev} and {count}"
                    )));
                }
                Some(_) => {}
            }
        }
    }

    let psi: Vec<u64> = psi
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            p.ok_or_else(|| {
                Error::StructuralViolation(format!("no (clique, vertex) pair at distance {i}"))
            })
        })
        .collect::<Result<_>>()?;
    let tau: Vec<u64> = tau
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            t.ok_or_else(|| {
                Error::StructuralViolation(format!("no vertex pair at distance {}", i + 1))
            })
        })
        .collect::<Result<_>>()?;

    let neighborhood_kind = if d >= 2 && psi[1] >= 2 {
        NeighborhoodKind::ConnectedLocal
    } else {
        NeighborhoodKind::DisjointCliquesLocal
    };

    Ok(CliqueGeometryReport {
        is_geometric: true,
        m: Some(m),
        delsarte_size,
        cliques,
        psi,
        tau,
        neighborhood_kind: Some(neighborhood_kind),
    })
}

/// Deterministic exact-cover backtracking: choose a subset of the candidate
/// cliques covering every edge exactly once. Always branches on the
/// uncovered edge with the fewest still-usable candidates (lowest edge index
/// on ties, candidates tried in ascending order), so the result is
/// reproducible. Families whose edges each lie in a single maximum clique
/// are resolved without branching.
fn exact_edge_cover(
    num_edges: usize,
    cand_edges: &[Vec<usize>],
    edge_cands: &[Vec<usize>],
) -> Option<Vec<usize>> {
    fn usable(cand: usize, cand_edges: &[Vec<usize>], covered: &[bool]) -> bool {
        cand_edges[cand].iter().all(|&e| !covered[e])
    }

    fn search(
        covered: &mut Vec<bool>,
        covered_count: usize,
        from: usize,
        chosen: &mut Vec<usize>,
        cand_edges: &[Vec<usize>],
        edge_cands: &[Vec<usize>],
    ) -> bool {
        if covered_count == covered.len() {
            return true;
        }
        let mut from = from;
        while covered[from] {
            from += 1;
        }
        // Most-constrained uncovered edge; stop early on a forced one.
        let mut best_edge = usize::MAX;
        let mut best: Vec<usize> = Vec::new();
        for e in from..covered.len() {
            if covered[e] {
                continue;
            }
            let avail: Vec<usize> = edge_cands[e]
                .iter()
                .copied()
                .filter(|&c| usable(c, cand_edges, covered))
                .collect();
            if avail.is_empty() {
                return false;
            }
            if best_edge == usize::MAX || avail.len() < best.len() {
                best_edge = e;
                let forced = avail.len() == 1;
                best = avail;
                if forced {
                    break;
                }
            }
        }
        for cand in best {
            for &e in &cand_edges[cand] {
                covered[e] = true;
            }
            chosen.push(cand);
            if search(
                covered,
                covered_count + cand_edges[cand].len(),
                from,
                chosen,
                cand_edges,
                edge_cands,
            ) {
                return true;
            }
            chosen.pop();
            for &e in &cand_edges[cand] {
                covered[e] = false;
            }
        }
        false
    }

    let mut covered = vec![false; num_edges];
    let mut chosen = Vec::new();
    if num_edges == 0 {
        return Some(chosen);
    }
    if search(&mut covered, 0, 0, &mut chosen, cand_edges, edge_cands) {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

/// Clique-geometry parameters derived from an intersection array alone.
///
/// Given a hypothetical clique count `m` per vertex, the identities
/// `cᵢ = τᵢ ψ_{i−1}` and `bᵢ = (m − τᵢ)(k/m + 1 − ψᵢ)` determine every `ψᵢ`
/// and `τᵢ` by exact integer inversion — or prove that no geometry with this
/// `m` is possible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometryInfo {
    /// Cliques per vertex.
    pub m: u64,
    /// Size of each geometry clique, `1 + k/m`.
    pub clique_size: u64,
    /// `ψ₀ .. ψ_{d−1}`.
    pub psi: Vec<u64>,
    /// `τ₁ .. τ_d`.
    pub tau: Vec<u64>,
}

impl GeometryInfo {
    /// Inverts the parameter identities on `arr` for the given `m`.
    ///
    /// Fails with an infeasibility error when any division is inexact, some
    /// `τᵢ` leaves `1..=m`, some `ψᵢ` leaves `1..=k/m+1`, or `τ_d ≠ m` —
    /// each of which rules out a clique geometry with `m` cliques per vertex.
    pub fn from_array(arr: &IntersectionArray, m: u64) -> Result<GeometryInfo> {
        if m == 0 {
            return Err(Error::InvalidParameters(
                "clique count m must be at least 1".into(),
            ));
        }
        let k = arr.degree();
        let d = arr.diameter();
        if k % m != 0 {
            return Err(Error::InfeasibleArray(format!(
                "degree {k} is not divisible by m = {m}"
            )));
        }
        let km = k / m;
        let mut psi: Vec<u64> = vec![1];
        let mut tau: Vec<u64> = Vec::with_capacity(d);
        for i in 1..=d {
            let psi_prev = psi[i - 1];
            let c_i = arr.c(i);
            if psi_prev == 0 || c_i % psi_prev != 0 {
                return Err(Error::InfeasibleArray(format!(
                    "c_{i} = {c_i} is not divisible by psi_{} = {psi_prev}",
                    i - 1
                )));
            }
            let tau_i = c_i / psi_prev;
            if tau_i == 0 || tau_i > m {
                return Err(Error::InfeasibleArray(format!(
                    "tau_{i} = {tau_i} falls outside 1..={m}"
                )));
            }
            tau.push(tau_i);
            if i < d {
                let b_i = arr.b(i);
                if tau_i == m {
                    return Err(Error::InfeasibleArray(format!(
                        "tau_{i} = m forces b_{i} = 0, but b_{i} = {b_i}"
                    )));
                }
                if b_i % (m - tau_i) != 0 {
                    return Err(Error::InfeasibleArray(format!(
                        "b_{i} = {b_i} is not divisible by m - tau_{i} = {}",
                        m - tau_i
                    )));
                }
                let q = b_i / (m - tau_i);
                if q > km {
                    return Err(Error::InfeasibleArray(format!(
                        "psi_{i} = {} would not be positive",
                        km as i128 + 1 - q as i128
                    )));
                }
                psi.push(km + 1 - q);
            }
        }
        if tau[d - 1] != m {
            return Err(Error::InfeasibleArray(format!(
                "tau_d = {} but the clique count is m = {m}",
                tau[d - 1]
            )));
        }
        Ok(GeometryInfo {
            m,
            clique_size: km + 1,
            psi,
            tau,
        })
    }
}

/// Re-checks the parameter identities on a detected geometry:
/// `cᵢ = τᵢ ψ_{i−1}` for `1 ≤ i ≤ d`, `bᵢ = (m − τᵢ)(k/m + 1 − ψᵢ)` for
/// `1 ≤ i ≤ d − 1`, `τ₂ ≥ ψ₁`, and `μ = τ₂ ψ₁ ≤ m²`. Failures come back as
/// non-holding reports, never errors. On a non-geometric report every check
/// is marked not applicable.
pub fn verify_geometric_identities(
    report: &CliqueGeometryReport,
    arr: &IntersectionArray,
) -> Vec<InequalityReport> {
    let names = [
        "c-identity",
        "b-identity",
        "tau2-lower-bound",
        "mu-m2-bound",
    ];
    if !report.is_geometric {
        return names
            .iter()
            .map(|name| InequalityReport::not_applicable(name, "graph is not geometric"))
            .collect();
    }
    let m = report.m.expect("geometric report carries m") as f64;
    let k = arr.degree() as f64;
    let d = arr.diameter();
    let psi = &report.psi;
    let tau = &report.tau;
    let mut out = Vec::with_capacity(4);

    // cᵢ = τᵢ ψ_{i−1}: slack is −max_i |cᵢ − τᵢψ_{i−1}|, zero when exact.
    let mut worst = (0.0f64, 1usize);
    for i in 1..=d {
        let dev = (arr.c(i) as f64 - tau[i - 1] as f64 * psi[i - 1] as f64).abs();
        if dev > worst.0 {
            worst = (dev, i);
        }
    }
    out.push(
        InequalityReport::evaluated(
            names[0],
            -worst.0,
            witness(&[
                ("i", worst.1 as f64),
                ("c_i", arr.c(worst.1) as f64),
                ("tau_i", tau[worst.1 - 1] as f64),
                ("psi_prev", psi[worst.1 - 1] as f64),
            ]),
        )
        .with_note("slack is minus the largest deviation over i = 1..d"),
    );

    // bᵢ = (m − τᵢ)(k/m + 1 − ψᵢ) for i = 1..d−1.
    if d >= 2 {
        let mut worst = (0.0f64, 1usize);
        for i in 1..d {
            let rhs = (m - tau[i - 1] as f64) * (k / m + 1.0 - psi[i] as f64);
            let dev = (arr.b(i) as f64 - rhs).abs();
            if dev > worst.0 {
                worst = (dev, i);
            }
        }
        out.push(
            InequalityReport::evaluated(
                names[1],
                -worst.0,
                witness(&[
                    ("i", worst.1 as f64),
                    ("b_i", arr.b(worst.1) as f64),
                    ("m", m),
                    ("tau_i", tau[worst.1 - 1] as f64),
                    ("psi_i", psi[worst.1] as f64),
                ]),
            )
            .with_note("slack is minus the largest deviation over i = 1..d-1"),
        );
    } else {
        out.push(InequalityReport::not_applicable(
            names[1],
            "diameter 1 leaves no index 1 <= i <= d-1",
        ));
    }

    if d >= 2 {
        let (t2, p1) = (tau[1] as f64, psi[1] as f64);
        out.push(InequalityReport::evaluated(
            names[2],
            t2 - p1,
            witness(&[("tau_2", t2), ("psi_1", p1)]),
        ));
        let mu = arr.mu().expect("diameter >= 2 has mu") as f64;
        out.push(InequalityReport::evaluated(
            names[3],
            m * m - mu,
            witness(&[("mu", mu), ("m", m)]),
        ));
    } else {
        out.push(InequalityReport::not_applicable(
            names[2],
            "tau_2 needs diameter at least 2",
        ));
        out.push(InequalityReport::not_applicable(
            names[3],
            "mu needs diameter at least 2",
        ));
    }
    out
}

/// Numeric record of Metsch's sufficient criterion for a regular graph to
/// carry a line system with at most `m` lines per vertex.
///
/// Specialized to a distance-regular graph, the hypothesis constants are
/// `λ⁽¹⁾ = λ⁽²⁾ = λ` (adjacent pairs have exactly `λ` common neighbors) and
/// `μ_bound = μ` (non-adjacent pairs have at most `c₂` common neighbors), so
/// conditions 1 and 2 hold by definition and only the two strict
/// inequalities carry information:
///
/// 3. `2λ⁽¹⁾ − λ⁽²⁾ > (2m − 1)(μ − 1) − 1`, and
/// 4. `k < (m + 1)(λ⁽¹⁾ + 1) − ½ m(m + 1)(μ − 1)`.
///
/// When all four hold, the maximal cliques of size at least `line_threshold`
/// form a line system: every vertex is on at most `m` of them and every edge
/// on exactly one.
#[derive(Debug, Clone, Serialize)]
pub struct MetschReport {
    /// The clique-count bound being tested.
    pub m: u64,
    /// Lower bound on common neighbors of adjacent pairs (here `λ`).
    pub lambda1: u64,
    /// Upper bound on common neighbors of adjacent pairs (here `λ`).
    pub lambda2: u64,
    /// Upper bound on common neighbors of non-adjacent pairs (here `μ`).
    pub mu_bound: u64,
    /// Conditions 1–4 in order.
    pub conditions_hold: [bool; 4],
    /// Minimum size `λ⁽¹⁾ + 2 − (m − 1)(μ − 1)` of a clique that counts as
    /// a line; may be non-positive, in which case the criterion is vacuous.
    pub line_threshold: i64,
}

impl MetschReport {
    /// True when all four conditions hold.
    pub fn all_hold(&self) -> bool {
        self.conditions_hold.iter().all(|&c| c)
    }
}

/// Evaluates Metsch's criterion on an intersection array for a given clique
/// count `m ≥ 1`. For a diameter-1 (complete-graph) array there are no
/// vertex pairs at distance two, so `μ` is taken as 1 and the criterion
/// degenerates gracefully.
pub fn metsch_criterion(arr: &IntersectionArray, m: u64) -> MetschReport {
    debug_assert!(m >= 1, "Metsch criterion needs m >= 1");
    let k = arr.degree() as i128;
    let lambda = arr.lambda() as i128;
    let mu = arr.mu().unwrap_or(1) as i128;
    let m_i = m as i128;

    // Conditions 1 and 2 compare the graph's common-neighbor counts against
    // the hypothesis constants; with λ⁽¹⁾ = λ⁽²⁾ = λ and μ_bound = μ they
    // hold identically for a distance-regular graph.
    let cond1 = true;
    let cond2 = true;
    let cond3 = 2 * lambda - lambda > (2 * m_i - 1) * (mu - 1) - 1;
    let cond4 = k < (m_i + 1) * (lambda + 1) - m_i * (m_i + 1) / 2 * (mu - 1);
    let line_threshold = (lambda + 2 - (m_i - 1) * (mu - 1)) as i64;

    MetschReport {
        m,
        lambda1: arr.lambda(),
        lambda2: arr.lambda(),
        mu_bound: mu as u64,
        conditions_hold: [cond1, cond2, cond3, cond4],
        line_threshold,
    }
}

/// How the vertex neighborhoods of a regular graph decompose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NeighborhoodClassification {
    /// The kind observed at vertex 0.
    pub kind: NeighborhoodKind,
    /// Whether every vertex shows the same kind (and, for disjoint cliques,
    /// the same clique count and size).
    pub uniform: bool,
    /// Cliques per neighborhood when uniformly `DisjointCliquesLocal`.
    pub cliques_per_vertex: Option<u64>,
    /// Clique size when uniformly `DisjointCliquesLocal`.
    pub clique_size: Option<u64>,
}

/// Classifies every vertex neighborhood X(v) as connected or a disjoint
/// union of equal-size cliques, and reports whether the kind is uniform
/// across vertices.
///
/// A complete X(v) is reported as `DisjointCliquesLocal` with a single
/// clique. A neighborhood that is neither connected nor a disjoint union of
/// *equal complete* components contradicts the local dichotomy for geometric
/// distance-regular graphs and is a structural violation.
pub fn classify_neighborhood(g: &Graph) -> Result<NeighborhoodClassification> {
    if g.n() == 0 {
        return Err(Error::InvalidParameters("empty graph".into()));
    }
    if g.regular_degree().is_none() {
        return Err(Error::InvalidParameters(
            "neighborhood classification needs a regular graph".into(),
        ));
    }

    // (kind, cliques, size) per vertex.
    let mut first: Option<(NeighborhoodKind, Option<(u64, u64)>)> = None;
    let mut uniform = true;
    for v in 0..g.n() {
        let (h, _) = g.neighborhood_subgraph(v)?;
        let this = classify_one(&h, v)?;
        match &first {
            None => first = Some(this),
            Some(prev) => {
                if *prev != this {
                    uniform = false;
                }
            }
        }
    }
    let (kind, shape) = first.expect("nonempty graph");
    let (cliques_per_vertex, clique_size) = match (uniform, shape) {
        (true, Some((count, size))) => (Some(count), Some(size)),
        _ => (None, None),
    };
    Ok(NeighborhoodClassification {
        kind,
        uniform,
        cliques_per_vertex,
        clique_size,
    })
}

fn classify_one(h: &Graph, v: usize) -> Result<(NeighborhoodKind, Option<(u64, u64)>)> {
    let n = h.n();
    if n == 0 {
        return Err(Error::InvalidParameters(format!(
            "vertex {v} has no neighbors"
        )));
    }
    // Component decomposition by BFS.
    let mut comp = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let mut queue = std::collections::VecDeque::from([start]);
        comp[start] = id;
        let mut size = 0usize;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &w in h.neighbors(u) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    queue.push_back(w);
                }
            }
        }
        sizes.push(size);
    }

    if sizes.len() == 1 {
        let complete = h.edge_count() == n * (n - 1) / 2;
        return Ok(if complete {
            (NeighborhoodKind::DisjointCliquesLocal, Some((1, n as u64)))
        } else {
            (NeighborhoodKind::ConnectedLocal, None)
        });
    }

    // Disconnected: every component must be a clique of one common size.
    let size0 = sizes[0];
    let equal = sizes.iter().all(|&s| s == size0);
    let all_cliques = (0..n).all(|u| h.degree(u) + 1 == sizes[comp[u]]);
    if equal && all_cliques {
        Ok((
            NeighborhoodKind::DisjointCliquesLocal,
            Some((sizes.len() as u64, size0 as u64)),
        ))
    } else {
        Err(Error::StructuralViolation(format!(
            "neighborhood of vertex {v} is disconnected but not a disjoint \
             union of equal cliques (component sizes {sizes:?})"
        )))
    }
}

/// Tests, vertex by vertex, whether each neighborhood X(v) is the `m × k/m`
/// rook's graph — the line graph of the complete bipartite graph
/// `K_{m, k/m}` — by structural recognition: the maximal cliques must split
/// into two transversal families (one of `m` cliques of size `k/m`, one of
/// `k/m` cliques of size `m`), each family partitioning the vertex set, with
/// every cross-family pair meeting in exactly one vertex.
pub fn local_line_graph_check(g: &Graph, m: u64) -> Result<Vec<bool>> {
    if m == 0 {
        return Err(Error::InvalidParameters(
            "clique count m must be at least 1".into(),
        ));
    }
    let k = g
        .regular_degree()
        .ok_or_else(|| Error::InvalidParameters("rook check needs a regular graph".into()))?
        as u64;
    if k % m != 0 {
        return Err(Error::InvalidParameters(format!(
            "degree {k} is not divisible by m = {m}"
        )));
    }
    let rows = m as usize;
    let cols = (k / m) as usize;
    let mut verdicts = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let (h, _) = g.neighborhood_subgraph(v)?;
        verdicts.push(is_rook_graph(&h, rows, cols));
    }
    Ok(verdicts)
}

/// Structural recognition of the `a × b` rook's graph.
fn is_rook_graph(h: &Graph, a: usize, b: usize) -> bool {
    let n = h.n();
    if n != a * b || h.regular_degree() != Some(a + b - 2) {
        return false;
    }
    if a == 1 || b == 1 {
        // Degree n − 1 on n vertices: already complete.
        return true;
    }
    let cliques = enumerate_maximal_cliques(h, 2);
    // Family A: a cliques of size b (the "rows"); family B: b cliques of
    // size a (the "columns"). For a == b the families are separated by
    // disjointness from an arbitrary seed clique.
    let (fam_a, fam_b): (Vec<&Vec<usize>>, Vec<&Vec<usize>>) = if a != b {
        if cliques.iter().any(|c| c.len() != a && c.len() != b) {
            return false;
        }
        (
            cliques.iter().filter(|c| c.len() == b).collect(),
            cliques.iter().filter(|c| c.len() == a).collect(),
        )
    } else {
        if cliques.iter().any(|c| c.len() != a) {
            return false;
        }
        let Some(seed) = cliques.first() else {
            return false;
        };
        let disjoint_from_seed =
            |c: &Vec<usize>| c.iter().all(|x| !seed.contains(x)) || c == seed;
        (
            cliques.iter().filter(|c| disjoint_from_seed(c)).collect(),
            cliques.iter().filter(|c| !disjoint_from_seed(c)).collect(),
        )
    };
    if fam_a.len() != a || fam_b.len() != b {
        return false;
    }
    let partitions = |fam: &[&Vec<usize>]| {
        let mut seen = vec![false; n];
        for c in fam {
            for &x in *c {
                if seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        seen.into_iter().all(|s| s)
    };
    if !partitions(&fam_a) || !partitions(&fam_b) {
        return false;
    }
    fam_a.iter().all(|ra| {
        fam_b
            .iter()
            .all(|cb| ra.iter().filter(|x| cb.contains(x)).count() == 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, GeneratorSpec};
    use crate::params::check_distance_regular;
    use crate::spectral::eigen_solve;

    fn family_graph(family: Family, s: usize, d: usize) -> Graph {
        generate(&GeneratorSpec::new(family, s, d)).expect("generator")
    }

    fn petersen() -> Graph {
        // Vertices are the 2-subsets of {0..4}, adjacent when disjoint.
        let mut pairs = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                pairs.push((i, j));
            }
        }
        let mut edges = Vec::new();
        for (u, &(a, b)) in pairs.iter().enumerate() {
            for (v, &(c, d)) in pairs.iter().enumerate().skip(u + 1) {
                if a != c && a != d && b != c && b != d {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(10, &edges).expect("petersen")
    }

    fn detect(family: Family, s: usize, d: usize) -> CliqueGeometryReport {
        let g = family_graph(family, s, d);
        let arr = check_distance_regular(&g).expect("drg");
        let profile = eigen_solve(&arr).expect("spectrum");
        detect_clique_geometry(&g, &arr, &profile).expect("detect")
    }

    #[test]
    fn delsarte_bound_examples() {
        assert_eq!(delsarte_bound(4, -2.0).unwrap(), 3.0);
        assert_eq!(delsarte_bound(6, -2.0).unwrap(), 4.0);
        assert_eq!(delsarte_bound(7, -1.0).unwrap(), 8.0);
        assert!(delsarte_bound(4, 0.0).is_err());
        assert!(delsarte_bound(4, 2.0).is_err());
    }

    #[test]
    fn hamming_2_3_geometry_is_the_grid_lines() {
        let report = detect(Family::Hamming, 3, 2);
        assert!(report.is_geometric);
        assert_eq!(report.m, Some(2));
        assert_eq!(report.delsarte_size, 3.0);
        assert_eq!(
            report.cliques,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 6],
                vec![1, 4, 7],
                vec![2, 5, 8],
                vec![3, 4, 5],
                vec![6, 7, 8],
            ]
        );
        assert_eq!(report.psi, vec![1, 1]);
        assert_eq!(report.tau, vec![1, 2]);
        assert_eq!(
            report.neighborhood_kind,
            Some(NeighborhoodKind::DisjointCliquesLocal)
        );
    }

    #[test]
    fn johnson_5_2_geometry() {
        let report = detect(Family::Johnson, 5, 2);
        assert!(report.is_geometric);
        assert_eq!(report.m, Some(2));
        assert_eq!(report.delsarte_size, 4.0);
        assert_eq!(report.cliques.len(), 5);
        assert!(report.cliques.iter().all(|c| c.len() == 4));
        assert_eq!(report.psi, vec![1, 2]);
        assert_eq!(report.tau, vec![1, 2]);
        assert_eq!(
            report.neighborhood_kind,
            Some(NeighborhoodKind::ConnectedLocal)
        );
    }

    #[test]
    fn petersen_is_not_geometric() {
        let g = petersen();
        let arr = check_distance_regular(&g).expect("drg");
        let profile = eigen_solve(&arr).expect("spectrum");
        let report = detect_clique_geometry(&g, &arr, &profile).expect("detect");
        assert!(!report.is_geometric);
        assert_eq!(report.m, None);
        assert!((report.delsarte_size - 2.5).abs() < 1e-12);
        assert!(report.cliques.is_empty());
        assert_eq!(report.neighborhood_kind, None);
    }

    #[test]
    fn octahedron_geometry_needs_cover_selection() {
        // J(4,2): every edge lies in two maximum cliques, so the geometry is
        // a proper sub-collection of the candidates.
        let report = detect(Family::Johnson, 4, 2);
        assert!(report.is_geometric);
        assert_eq!(report.m, Some(2));
        assert_eq!(report.cliques.len(), 4);
        assert_eq!(report.psi, vec![1, 2]);
        assert_eq!(report.tau, vec![1, 2]);
    }

    #[test]
    fn johnson_6_3_geometry_among_overlapping_candidates() {
        // Stars and co-stars both reach the Delsarte size here.
        let report = detect(Family::Johnson, 6, 3);
        assert!(report.is_geometric);
        assert_eq!(report.m, Some(3));
        assert_eq!(report.cliques.len(), 15);
        assert_eq!(report.psi, vec![1, 2, 3]);
        assert_eq!(report.tau, vec![1, 2, 3]);
    }

    #[test]
    fn identities_hold_on_detected_geometries() {
        for (family, s, d) in [
            (Family::Hamming, 3, 2),
            (Family::Hamming, 4, 3),
            (Family::Johnson, 5, 2),
            (Family::Johnson, 7, 3),
        ] {
            let g = family_graph(family, s, d);
            let arr = check_distance_regular(&g).expect("drg");
            let profile = eigen_solve(&arr).expect("spectrum");
            let report = detect_clique_geometry(&g, &arr, &profile).expect("detect");
            assert!(report.is_geometric, "{family:?}({s},{d})");
            let checks = verify_geometric_identities(&report, &arr);
            assert_eq!(checks.len(), 4);
            for check in &checks {
                assert!(check.applicable, "{family:?}({s},{d}): {}", check.name);
                assert!(
                    check.holds,
                    "{family:?}({s},{d}): {} slack {:?}",
                    check.name, check.slack
                );
            }
        }
    }

    #[test]
    fn identity_slacks_on_hamming_2_3() {
        let report = detect(Family::Hamming, 3, 2);
        let arr = IntersectionArray::hamming(2, 3).unwrap();
        let checks = verify_geometric_identities(&report, &arr);
        assert_eq!(checks[0].name, "c-identity");
        assert_eq!(checks[0].slack, Some(0.0));
        assert_eq!(checks[1].name, "b-identity");
        assert_eq!(checks[1].slack, Some(0.0));
        // tau_2 - psi_1 = 2 - 1 and m^2 - mu = 4 - 2.
        assert_eq!(checks[2].slack, Some(1.0));
        assert_eq!(checks[3].slack, Some(2.0));
    }

    #[test]
    fn identities_not_applicable_without_geometry() {
        let g = petersen();
        let arr = check_distance_regular(&g).expect("drg");
        let profile = eigen_solve(&arr).expect("spectrum");
        let report = detect_clique_geometry(&g, &arr, &profile).expect("detect");
        let checks = verify_geometric_identities(&report, &arr);
        assert!(checks.iter().all(|c| !c.applicable && c.holds));
    }

    #[test]
    fn array_level_geometry_parameters() {
        let hamming = IntersectionArray::hamming(3, 4).unwrap();
        let info = GeometryInfo::from_array(&hamming, 3).unwrap();
        assert_eq!(info.clique_size, 4);
        assert_eq!(info.psi, vec![1, 1, 1]);
        assert_eq!(info.tau, vec![1, 2, 3]);

        let johnson = IntersectionArray::johnson(8, 3).unwrap();
        let info = GeometryInfo::from_array(&johnson, 3).unwrap();
        assert_eq!(info.clique_size, 6);
        assert_eq!(info.psi, vec![1, 2, 3]);
        assert_eq!(info.tau, vec![1, 2, 3]);
    }

    #[test]
    fn array_level_geometry_rejections() {
        // Petersen's degree 3 is not divisible by m = 2.
        let petersen_arr = IntersectionArray::from_sequences(&[3, 2], &[1, 1]).unwrap();
        assert!(GeometryInfo::from_array(&petersen_arr, 2).is_err());
        // The infeasible {6,2;1,5} array: c_2 = 5 is not a multiple of
        // psi_1 = 2.
        let arr = IntersectionArray::from_sequences(&[6, 2], &[1, 5]).unwrap();
        assert!(GeometryInfo::from_array(&arr, 2).is_err());
        // tau_d must come out to m.
        let cycle = IntersectionArray::from_sequences(&[2, 1], &[1, 1]).unwrap();
        assert!(GeometryInfo::from_array(&cycle, 2).is_err());
        assert!(GeometryInfo::from_array(&cycle, 0).is_err());
    }

    #[test]
    fn metsch_examples() {
        let h29 = IntersectionArray::hamming(2, 9).unwrap();
        let report = metsch_criterion(&h29, 2);
        assert_eq!(report.lambda1, 7);
        assert_eq!(report.mu_bound, 2);
        assert!(report.all_hold());
        assert_eq!(report.line_threshold, 8);

        // Condition 4 needs k < 3(lambda+1) - 3(mu-1) = 3, but k = 4; the
        // strict inequality of condition 3 fails too (1 > 2 is false).
        let h23 = IntersectionArray::hamming(2, 3).unwrap();
        let report = metsch_criterion(&h23, 2);
        assert_eq!(report.conditions_hold, [true, true, false, false]);
        assert!(!report.all_hold());

        let complete = IntersectionArray::complete(4).unwrap();
        let report = metsch_criterion(&complete, 1);
        assert!(report.all_hold());
        assert_eq!(report.mu_bound, 1);
    }

    #[test]
    fn neighborhood_classification_examples() {
        // H(3,4): three disjoint triangles per vertex.
        let h34 = family_graph(Family::Hamming, 4, 3);
        let class = classify_neighborhood(&h34).unwrap();
        assert_eq!(class.kind, NeighborhoodKind::DisjointCliquesLocal);
        assert!(class.uniform);
        assert_eq!(class.cliques_per_vertex, Some(3));
        assert_eq!(class.clique_size, Some(3));

        // J(6,3): the 3x3 rook's graph, connected.
        let j63 = family_graph(Family::Johnson, 6, 3);
        let class = classify_neighborhood(&j63).unwrap();
        assert_eq!(class.kind, NeighborhoodKind::ConnectedLocal);
        assert!(class.uniform);
        assert_eq!(class.cliques_per_vertex, None);

        // K_5: one clique per vertex (degenerate disjoint-cliques kind).
        let k5 = family_graph(Family::Complete, 5, 1);
        let class = classify_neighborhood(&k5).unwrap();
        assert_eq!(class.kind, NeighborhoodKind::DisjointCliquesLocal);
        assert!(class.uniform);
        assert_eq!(class.cliques_per_vertex, Some(1));
        assert_eq!(class.clique_size, Some(4));

        // C_5: two isolated vertices per neighborhood.
        let c5 = family_graph(Family::Cycle, 5, 2);
        let class = classify_neighborhood(&c5).unwrap();
        assert_eq!(class.kind, NeighborhoodKind::DisjointCliquesLocal);
        assert!(class.uniform);
        assert_eq!(class.cliques_per_vertex, Some(2));
        assert_eq!(class.clique_size, Some(1));
    }

    #[test]
    fn neighborhood_violation_and_mixed_kinds() {
        // C_9 with connections {±1, ±3}: X(v) is an edge plus two isolated
        // vertices — disconnected but not equal cliques.
        let mut edges = Vec::new();
        for v in 0..9 {
            edges.push((v, (v + 1) % 9));
            edges.push((v, (v + 3) % 9));
        }
        edges = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort();
        edges.dedup();
        let circulant = Graph::new(9, &edges).unwrap();
        assert!(matches!(
            classify_neighborhood(&circulant),
            Err(Error::StructuralViolation(_))
        ));

        // Octahedron (neighborhoods are 4-cycles) next to H(2,3)
        // (neighborhoods are two disjoint edges): same degree, mixed kinds.
        let octa = family_graph(Family::Johnson, 4, 2);
        let h23 = family_graph(Family::Hamming, 3, 2);
        let mut edges = octa.edges();
        for (u, v) in h23.edges() {
            edges.push((u + 6, v + 6));
        }
        let mixed = Graph::new(6 + 9, &edges).unwrap();
        let class = classify_neighborhood(&mixed).unwrap();
        assert!(!class.uniform);
        assert_eq!(class.kind, NeighborhoodKind::ConnectedLocal);
        assert_eq!(class.cliques_per_vertex, None);
    }

    #[test]
    fn rook_graph_recognition() {
        // J(5,2) is locally the 2x3 rook's graph.
        let j52 = family_graph(Family::Johnson, 5, 2);
        let verdicts = local_line_graph_check(&j52, 2).unwrap();
        assert!(verdicts.iter().all(|&v| v));

        // The octahedron is locally a 4-cycle, the 2x2 rook's graph.
        let octa = family_graph(Family::Johnson, 4, 2);
        let verdicts = local_line_graph_check(&octa, 2).unwrap();
        assert!(verdicts.iter().all(|&v| v));

        // H(2,3) is locally two disjoint edges: not a rook's graph.
        let h23 = family_graph(Family::Hamming, 3, 2);
        let verdicts = local_line_graph_check(&h23, 2).unwrap();
        assert!(verdicts.iter().all(|&v| !v));

        // C_5 is locally two isolated vertices.
        let c5 = family_graph(Family::Cycle, 5, 2);
        let verdicts = local_line_graph_check(&c5, 1).unwrap();
        assert!(verdicts.iter().all(|&v| !v));

        // Degree must split as m * (k/m).
        let pet = petersen();
        assert!(local_line_graph_check(&pet, 2).is_err());
        assert!(local_line_graph_check(&pet, 0).is_err());
    }

    #[test]
    fn report_serializes_cliques_as_sorted_arrays() {
        let report = detect(Family::Hamming, 3, 2);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["is_geometric"], serde_json::json!(true));
        assert_eq!(json["m"], serde_json::json!(2));
        assert_eq!(json["cliques"][0], serde_json::json!([0, 1, 2]));
        assert_eq!(
            json["neighborhood_kind"],
            serde_json::json!("DisjointCliquesLocal")
        );
    }
}
