//! Automorphisms, motion, and computable motion lower bounds.
//!
//! The *motion* of a graph is the minimum number of vertices moved by a
//! non-identity automorphism (the minimal degree of the automorphism
//! group). At desk scale the group is enumerated outright by
//! individualization–refinement and the motion read off exactly; past the
//! enumeration cap only bounds are reported. The bounds implemented are the
//! zero-weight spectral-radius mixing bound, the distance-class
//! distinguishing bound, the dual-transfer halving, and Wielandt's
//! thickness corollary.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::IntersectionArray;
use crate::spectral::adjacency_eigenvalues;

/// Default cap on the number of group elements `exact_motion` will
/// enumerate before falling back to bounds.
pub const DEFAULT_MAX_GROUP: u64 = 1_000_000;

/// One adjacency-preserving vertex permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Automorphism {
    /// Image of each vertex.
    pub perm: Vec<usize>,
    /// Number of vertices with `perm[v] != v`.
    pub support: usize,
}

/// The non-identity automorphisms found by enumeration, sorted
/// lexicographically by permutation.
#[derive(Debug, Clone)]
pub struct AutomorphismList {
    pub elements: Vec<Automorphism>,
    /// True when enumeration stopped at the cap instead of exhausting the
    /// group.
    pub truncated: bool,
}

impl AutomorphismList {
    /// Group order (identity included) when enumeration was complete.
    pub fn group_order(&self) -> Option<u64> {
        (!self.truncated).then(|| self.elements.len() as u64 + 1)
    }
}

/// One motion lower bound with its origin.
#[derive(Debug, Clone, Serialize)]
pub struct MotionBound {
    pub name: String,
    pub value: f64,
    pub provenance: String,
}

/// Exact motion when available, otherwise every bound that could be
/// computed.
#[derive(Debug, Clone, Serialize)]
pub struct MotionReport {
    /// Minimum support over all non-identity automorphisms; absent when the
    /// group was truncated or the graph is rigid.
    pub exact_motion: Option<u64>,
    /// Full group order (identity included) when enumeration completed.
    pub group_order: Option<u64>,
    /// True when the graph has no non-identity automorphism at all, the
    /// "motion = +infinity" sentinel.
    pub no_mover: bool,
    /// Minimum support among the elements that were found; an upper bound
    /// on motion when enumeration was truncated, equal to `exact_motion`
    /// when it was not.
    pub min_support_found: Option<u64>,
    /// Computable lower bounds on motion (absolute counts, not fractions).
    pub bounds: Vec<MotionBound>,
    /// Wielandt thickness bound `3·ln(n)/alpha` for the best motion
    /// fraction `alpha` established above; absent when none is positive.
    pub thickness_bound: Option<f64>,
}

fn splitmix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Pairwise color refinement: refine `src` and `tgt` in lockstep with a
/// shared renumbering until stable. Returns false when the class-size
/// profiles diverge, which rules out any automorphism extending the current
/// individualization.
fn refine_pair(g: &Graph, src: &mut Vec<u32>, tgt: &mut Vec<u32>) -> bool {
    let n = g.n();
    loop {
        // Order-independent neighbor signature: commutative sum of mixed
        // neighbor colors. A collision can only under-refine; the final
        // adjacency check keeps emissions sound.
        let signature = |colors: &[u32]| -> Vec<(u32, u64)> {
            (0..n)
                .map(|v| {
                    let sum = g
                        .neighbors(v)
                        .iter()
                        .fold(0u64, |acc, &w| acc.wrapping_add(splitmix(colors[w] as u64 + 1)));
                    (colors[v], sum)
                })
                .collect()
        };
        let keys_src = signature(src);
        let keys_tgt = signature(tgt);

        let mut all: Vec<(u32, u64)> = keys_src.iter().chain(keys_tgt.iter()).copied().collect();
        all.sort_unstable();
        all.dedup();
        let id_of = |key: &(u32, u64)| all.binary_search(key).expect("key present") as u32;

        let new_src: Vec<u32> = keys_src.iter().map(id_of).collect();
        let new_tgt: Vec<u32> = keys_tgt.iter().map(id_of).collect();

        let classes = all.len();
        let mut count_src = vec![0u32; classes];
        let mut count_tgt = vec![0u32; classes];
        for &c in &new_src {
            count_src[c as usize] += 1;
        }
        for &c in &new_tgt {
            count_tgt[c as usize] += 1;
        }
        if count_src != count_tgt {
            return false;
        }

        let old_classes = {
            let mut cs: Vec<u32> = src.clone();
            cs.sort_unstable();
            cs.dedup();
            cs.len()
        };
        *src = new_src;
        *tgt = new_tgt;
        if classes == old_classes {
            // Refinement only ever splits classes; an unchanged count means
            // the partition is stable.
            return true;
        }
    }
}

struct AutoSearch<'a> {
    g: &'a Graph,
    limit: u64,
    leaves: u64,
    truncated: bool,
    found: Vec<Automorphism>,
}

impl AutoSearch<'_> {
    /// Depth-first individualization–refinement. Returns false when the
    /// enumeration cap was hit and the search should unwind.
    fn search(&mut self, src: Vec<u32>, tgt: Vec<u32>) -> bool {
        let n = self.g.n();
        let mut src = src;
        let mut tgt = tgt;
        if !refine_pair(self.g, &mut src, &mut tgt) {
            return true;
        }

        let distinct = {
            let mut cs = src.clone();
            cs.sort_unstable();
            cs.dedup();
            cs.len()
        };
        if distinct == n {
            return self.emit_leaf(&src, &tgt);
        }
        // After refinement the color ids are exactly 0..distinct, so
        // `distinct` itself is the smallest color guaranteed fresh on both
        // sides. (A depth counter would not do: it can alias a compact id
        // and silently merge the individualized vertex into another class.)
        let fresh = distinct as u32;

        // First smallest non-singleton cell of the source coloring (ties by
        // lowest color id), individualize its lowest-index vertex against
        // every target-cell member in index order.
        let mut size = vec![0u32; 2 * n];
        for &c in &src {
            size[c as usize] += 1;
        }
        let cell = (0..2 * n)
            .filter(|&c| size[c] >= 2)
            .min_by_key(|&c| (size[c], c))
            .expect("non-discrete partition has a big cell") as u32;
        let s = (0..n).find(|&v| src[v] == cell).expect("cell member");
        for t in 0..n {
            if tgt[t] != cell {
                continue;
            }
            let mut src2 = src.clone();
            let mut tgt2 = tgt.clone();
            src2[s] = fresh;
            tgt2[t] = fresh;
            if !self.search(src2, tgt2) {
                return false;
            }
        }
        true
    }

    fn emit_leaf(&mut self, src: &[u32], tgt: &[u32]) -> bool {
        let n = self.g.n();
        let mut by_color = vec![usize::MAX; 2 * n];
        for (v, &c) in tgt.iter().enumerate() {
            by_color[c as usize] = v;
        }
        let perm: Vec<usize> = src.iter().map(|&c| by_color[c as usize]).collect();
        // Discrete leaves are candidates only; re-check adjacency before
        // accepting (a bijection mapping every edge to an edge is an
        // automorphism).
        for (u, v) in self.g.edges() {
            if !self.g.has_edge(perm[u], perm[v]) {
                return true;
            }
        }
        if self.leaves == self.limit {
            self.truncated = true;
            return false;
        }
        self.leaves += 1;
        let support = perm.iter().enumerate().filter(|&(v, &w)| v != w).count();
        if support > 0 {
            self.found.push(Automorphism { perm, support });
        }
        true
    }
}

/// Enumerates the automorphism group by individualization–refinement,
/// returning every non-identity element (sorted by permutation) unless the
/// group has more than `max_count` elements, in which case the list is
/// truncated and flagged.
pub fn enumerate_automorphisms(g: &Graph, max_count: u64) -> AutomorphismList {
    if g.n() == 0 {
        return AutomorphismList {
            elements: Vec::new(),
            truncated: false,
        };
    }
    let mut state = AutoSearch {
        g,
        limit: max_count,
        leaves: 0,
        truncated: false,
        found: Vec::new(),
    };
    let n = g.n();
    state.search(vec![0; n], vec![0; n]);
    let mut elements = state.found;
    elements.sort_by(|a, b| a.perm.cmp(&b.perm));
    // Distinct branch targets pin the individualized vertex to distinct
    // images, so leaves are pairwise distinct permutations by construction.
    debug_assert!(
        elements.windows(2).all(|w| w[0].perm != w[1].perm),
        "duplicate automorphism emitted"
    );
    AutomorphismList {
        elements,
        truncated: state.truncated,
    }
}

/// Largest common-neighbor count over all vertex pairs (adjacent or not).
/// For a distance-regular graph this is `max(lambda, mu)`.
pub fn max_common_neighbors(g: &Graph) -> u64 {
    let (bits, words) = g.adjacency_bitsets();
    let mut best = 0u64;
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let common: u32 = (0..words)
                .map(|w| (bits[u * words + w] & bits[v * words + w]).count_ones())
                .sum();
            best = best.max(common as u64);
        }
    }
    best
}

/// Zero-weight spectral radius: the largest absolute eigenvalue of the
/// adjacency matrix excluding the principal one.
pub fn zero_weight_spectral_radius(g: &Graph) -> f64 {
    let eigs = adjacency_eigenvalues(g);
    if eigs.len() < 2 {
        return 0.0;
    }
    let second = eigs[1].abs();
    let last = eigs[eigs.len() - 1].abs();
    second.max(last)
}

/// Spectral mixing bound on motion: `n(k − xi − q)/k`, clamped at zero.
/// `xi` is the zero-weight spectral radius and `q` the largest
/// common-neighbor count over all vertex pairs.
pub fn mixing_lemma_bound(n: u64, k: u64, xi: f64, q: u64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    (n as f64 * (k as f64 - xi - q as f64) / k as f64).max(0.0)
}

/// Distance-class distinguishing bound: when `b_j >= alpha*k` and
/// `c_{j+1} >= alpha*k`, motion is at least `alpha*n/d`. Returns zero when
/// the hypothesis fails at this `alpha`. The underlying statement also
/// assumes primitivity, which is not tested here — callers surface that as
/// an unchecked-hypothesis note.
pub fn distinguishing_bound(arr: &IntersectionArray, alpha: f64, j: usize) -> Result<f64> {
    let d = arr.diameter();
    if j == 0 || j >= d {
        return Err(Error::InvalidParameters(format!(
            "distinguishing index j = {j} must satisfy 1 <= j <= d-1 = {}",
            d.saturating_sub(1)
        )));
    }
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidParameters(format!(
            "distinguishing fraction alpha = {alpha} must be positive"
        )));
    }
    let k = arr.degree() as f64;
    let n = arr.vertex_count()? as f64;
    if (arr.b(j) as f64) < alpha * k || (arr.c(j + 1) as f64) < alpha * k {
        return Ok(0.0);
    }
    Ok(alpha * n / d as f64)
}

/// Transfers a motion fraction from the dual graph back to the original:
/// `motion(dual) >= gamma * n_dual` implies `motion >= (gamma/2) * n`.
pub fn dual_motion_transfer(dual_bound_fraction: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&dual_bound_fraction) {
        return Err(Error::InvalidParameters(format!(
            "a motion fraction must lie in [0, 1], got {dual_bound_fraction}"
        )));
    }
    Ok(dual_bound_fraction / 2.0)
}

/// Wielandt thickness bound: a transitive group whose every element-rich
/// subgroup... for a graph with `motion >= alpha*n`, the thickness of its
/// automorphism group is at most `3*ln(n)/alpha`.
pub fn thickness_bound(n: u64, alpha: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "thickness bound needs n >= 2, got {n}"
        )));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidParameters(format!(
            "motion fraction alpha = {alpha} must lie in (0, 1]"
        )));
    }
    Ok(3.0 * (n as f64).ln() / alpha)
}

/// Enumerates automorphisms up to `max_group` elements and reports motion:
/// exact when enumeration completes, otherwise the surviving upper bound
/// plus every computable lower bound (currently the spectral mixing bound,
/// when the graph is regular).
pub fn exact_motion(g: &Graph, max_group: u64) -> MotionReport {
    let autos = enumerate_automorphisms(g, max_group);
    let n = g.n() as u64;
    let min_support_found = autos.elements.iter().map(|a| a.support as u64).min();
    let (exact_motion, group_order, no_mover) = if autos.truncated {
        (None, None, false)
    } else if autos.elements.is_empty() {
        (None, Some(1), true)
    } else {
        (min_support_found, autos.group_order(), false)
    };

    let mut bounds = Vec::new();
    if let Some(k) = g.regular_degree() {
        if k > 0 && n >= 2 {
            let xi = zero_weight_spectral_radius(g);
            let q = max_common_neighbors(g);
            bounds.push(MotionBound {
                name: "mixing-lemma".into(),
                value: mixing_lemma_bound(n, k as u64, xi, q),
                provenance: "Babai's zero-weight spectral radius mixing bound".into(),
            });
        }
    }

    let best_fraction = exact_motion
        .map(|m| m as f64 / n as f64)
        .into_iter()
        .chain(bounds.iter().map(|b| b.value / n as f64))
        .fold(0.0f64, f64::max);
    let thickness = (n >= 2 && best_fraction > 0.0)
        .then(|| thickness_bound(n, best_fraction.min(1.0)).expect("valid fraction"));

    MotionReport {
        exact_motion,
        group_order,
        no_mover,
        min_support_found,
        bounds,
        thickness_bound: thickness,
    }
}
