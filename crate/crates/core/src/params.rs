//! Intersection arrays of distance-regular graphs: detection on explicit
//! graphs, exact parameter arithmetic, intersection-number tables, and the
//! elementary parameter inequalities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{witness, InequalityReport};

/// Parameter array `{b_0, …, b_{d−1}; c_1, …, c_d}` of a putative
/// distance-regular graph of diameter `d`, with the derived quantities
/// `a_i = k − b_i − c_i` and layer sizes `k_i` (when integral).
///
/// Construction enforces the shape invariants every distance-regular graph
/// satisfies: positive `b_i`/`c_i`, `c_1 = 1`, `b` non-increasing, `c`
/// non-decreasing, and `a_i ≥ 0`. Layer-size integrality is deliberately
/// *not* required here — arrays violating it are representable so that the
/// feasibility machinery can report exactly which realizability condition
/// fails.
///
/// Out-of-range index conventions follow the usual recurrences: `b(d) = 0`,
/// `c(0) = 0`, and all three sequences are 0 outside `0..=d`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "RawArray", into = "RawArray")]
pub struct IntersectionArray {
    d: usize,
    b: Vec<u64>,
    c: Vec<u64>,
    a: Vec<u64>,
    /// `k_0..k_d` when all are integral and fit in u64.
    layers: Option<Vec<u64>>,
    /// Whether a realizing graph has been verified for this array.
    from_graph: bool,
}

/// Wire form: `{"d": int, "b": [ints], "c": [ints]}`.
#[derive(Serialize, Deserialize)]
struct RawArray {
    d: usize,
    b: Vec<u64>,
    c: Vec<u64>,
}

impl TryFrom<RawArray> for IntersectionArray {
    type Error = Error;
    fn try_from(raw: RawArray) -> Result<Self> {
        if raw.b.len() != raw.d {
            return Err(Error::InvalidParameters(format!(
                "d = {} but b has {} entries",
                raw.d,
                raw.b.len()
            )));
        }
        IntersectionArray::from_sequences(&raw.b, &raw.c)
    }
}

impl From<IntersectionArray> for RawArray {
    fn from(arr: IntersectionArray) -> Self {
        RawArray {
            d: arr.d,
            b: arr.b,
            c: arr.c,
        }
    }
}

impl PartialEq for IntersectionArray {
    fn eq(&self, other: &Self) -> bool {
        self.b == other.b && self.c == other.c
    }
}
impl Eq for IntersectionArray {}

impl std::fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |xs: &[u64]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl IntersectionArray {
    /// Builds and validates an array from `b_0..b_{d−1}` and `c_1..c_d`.
    pub fn from_sequences(b: &[u64], c: &[u64]) -> Result<Self> {
        let d = b.len();
        if d == 0 {
            return Err(Error::InvalidParameters(
                "intersection array needs diameter >= 1".into(),
            ));
        }
        if c.len() != d {
            return Err(Error::InvalidParameters(format!(
                "b has {d} entries but c has {}",
                c.len()
            )));
        }
        if b.iter().any(|&x| x == 0) || c.iter().any(|&x| x == 0) {
            return Err(Error::InvalidParameters(
                "all b_i (i < d) and c_i (i >= 1) must be positive".into(),
            ));
        }
        if c[0] != 1 {
            return Err(Error::InvalidParameters(format!("c_1 must be 1, got {}", c[0])));
        }
        if b.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::InvalidParameters(
                "b sequence must be non-increasing".into(),
            ));
        }
        if c.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidParameters(
                "c sequence must be non-decreasing".into(),
            ));
        }
        let k = b[0];
        let mut a = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let bi = if i < d { b[i] } else { 0 };
            let ci = if i == 0 { 0 } else { c[i - 1] };
            let ai = k
                .checked_sub(bi)
                .and_then(|x| x.checked_sub(ci))
                .ok_or_else(|| {
                    Error::InvalidParameters(format!(
                        "a_{i} = k - b_{i} - c_{i} = {k} - {bi} - {ci} is negative"
                    ))
                })?;
            a.push(ai);
        }
        let mut arr = IntersectionArray {
            d,
            b: b.to_vec(),
            c: c.to_vec(),
            a,
            layers: None,
            from_graph: false,
        };
        arr.layers = arr.compute_integral_layers()?;
        Ok(arr)
    }

    /// `k_0..k_d` as integers when every `k_i·b_i / c_{i+1}` step divides
    /// exactly; `None` if some layer is non-integral. Errors only on u64
    /// overflow (parameter ranges beyond this toolkit's scope).
    fn compute_integral_layers(&self) -> Result<Option<Vec<u64>>> {
        let mut layers = vec![1u64];
        for i in 0..self.d {
            let prod = (layers[i] as u128) * (self.b[i] as u128);
            let ci1 = self.c[i] as u128; // c_{i+1} is self.c[i]
            if prod % ci1 != 0 {
                return Ok(None);
            }
            let next = prod / ci1;
            let next = u64::try_from(next).map_err(|_| {
                Error::InvalidParameters(format!("layer size k_{} exceeds u64", i + 1))
            })?;
            layers.push(next);
        }
        Ok(Some(layers))
    }

    /// Diameter `d`.
    pub fn diameter(&self) -> usize {
        self.d
    }

    /// Degree `k = b_0`.
    pub fn degree(&self) -> u64 {
        self.b[0]
    }

    /// `b_i`, with `b_d = 0` and 0 beyond the diameter.
    pub fn b(&self, i: usize) -> u64 {
        if i < self.d {
            self.b[i]
        } else {
            0
        }
    }

    /// `c_i`, with `c_0 = 0` and 0 beyond the diameter.
    pub fn c(&self, i: usize) -> u64 {
        if i >= 1 && i <= self.d {
            self.c[i - 1]
        } else {
            0
        }
    }

    /// `a_i = k − b_i − c_i`, 0 outside `0..=d`.
    pub fn a(&self, i: usize) -> u64 {
        if i <= self.d {
            self.a[i]
        } else {
            0
        }
    }

    /// `λ = a_1`, the common-neighbor count of an edge.
    pub fn lambda(&self) -> u64 {
        self.a(1)
    }

    /// `μ = c_2`, the common-neighbor count of a pair at distance 2
    /// (`None` for diameter 1).
    pub fn mu(&self) -> Option<u64> {
        (self.d >= 2).then(|| self.c(2))
    }

    /// `b_0..b_{d−1}` as stored.
    pub fn b_sequence(&self) -> &[u64] {
        &self.b
    }

    /// `c_1..c_d` as stored.
    pub fn c_sequence(&self) -> &[u64] {
        &self.c
    }

    /// Layer sizes `k_0..k_d`; errors if some layer is non-integral.
    pub fn layer_sizes(&self) -> Result<&[u64]> {
        self.layers.as_deref().ok_or_else(|| {
            Error::InfeasibleArray(format!("{self}: non-integral layer size"))
        })
    }

    /// Layer sizes as exact rationals (defined for every array shape).
    pub fn layer_sizes_exact(&self) -> Vec<BigRational> {
        let mut layers = vec![BigRational::one()];
        for i in 0..self.d {
            let next = &layers[i] * BigRational::from_integer(BigInt::from(self.b[i]))
                / BigRational::from_integer(BigInt::from(self.c[i]));
            layers.push(next);
        }
        layers
    }

    /// Total vertex count `n = Σ k_i`; errors if layers are non-integral.
    pub fn vertex_count(&self) -> Result<u64> {
        let layers = self.layer_sizes()?;
        layers
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .ok_or_else(|| Error::InvalidParameters("vertex count exceeds u64".into()))
    }

    /// `n` as an exact rational.
    pub fn vertex_count_exact(&self) -> BigRational {
        self.layer_sizes_exact().iter().sum()
    }

    /// Whether this array was extracted from (and verified against) an
    /// explicit graph, rather than asserted numerically.
    pub fn is_from_graph(&self) -> bool {
        self.from_graph
    }

    /// Closed-form array of the Johnson graph J(s, d): `b_i = (d−i)(s−d−i)`,
    /// `c_i = i²`. Requires `s ≥ 2d ≥ 2`.
    pub fn johnson(s: u64, d: u64) -> Result<Self> {
        if d < 1 || s < 2 * d {
            return Err(Error::InvalidParameters(format!(
                "Johnson array needs s >= 2d >= 2, got s = {s}, d = {d}"
            )));
        }
        let b: Vec<u64> = (0..d)
            .map(|i| {
                (d - i)
                    .checked_mul(s - d - i)
                    .ok_or_else(|| Error::InvalidParameters("Johnson b_i exceeds u64".into()))
            })
            .collect::<Result<_>>()?;
        let c: Vec<u64> = (1..=d).map(|i| i * i).collect();
        let mut arr = Self::from_sequences(&b, &c)?;
        arr.from_graph = false;
        Ok(arr)
    }

    /// Closed-form array of the Hamming graph H(d, s): `b_i = (d−i)(s−1)`,
    /// `c_i = i`. Requires `d ≥ 1`, `s ≥ 2`.
    pub fn hamming(d: u64, s: u64) -> Result<Self> {
        if d < 1 || s < 2 {
            return Err(Error::InvalidParameters(format!(
                "Hamming array needs d >= 1 and s >= 2, got d = {d}, s = {s}"
            )));
        }
        let b: Vec<u64> = (0..d)
            .map(|i| {
                (d - i)
                    .checked_mul(s - 1)
                    .ok_or_else(|| Error::InvalidParameters("Hamming b_i exceeds u64".into()))
            })
            .collect::<Result<_>>()?;
        let c: Vec<u64> = (1..=d).collect();
        Self::from_sequences(&b, &c)
    }

    /// Array of the complete graph K_{k+1}: `{k; 1}`.
    pub fn complete(k: u64) -> Result<Self> {
        Self::from_sequences(&[k], &[1])
    }
}

/// Verifies distance-regularity exhaustively over all vertex pairs and
/// extracts the intersection array. Every vertex is used as a base point;
/// for each ordered pair the neighbor counts toward the previous, same, and
/// next layer are compared against the counts established by the first pair
/// at that distance.
pub fn check_distance_regular(g: &Graph) -> Result<IntersectionArray> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameters("graph has no vertices".into()));
    }
    let k = g.degree(0);
    for v in 1..n {
        if g.degree(v) != k {
            return Err(Error::NotRegular {
                vertex: v,
                found: g.degree(v),
                expected: k,
            });
        }
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if k == 0 {
        return Err(Error::InvalidParameters(
            "single-vertex graph has no intersection array".into(),
        ));
    }

    let d = *g.bfs_distances(0).iter().max().unwrap();
    let mut b_counts: Vec<Option<usize>> = vec![None; d + 1];
    let mut c_counts: Vec<Option<usize>> = vec![None; d + 1];
    let mut a_counts: Vec<Option<usize>> = vec![None; d + 1];

    for v in 0..n {
        let dist = g.bfs_distances(v);
        let ecc = *dist.iter().max().unwrap();
        if ecc != d {
            return Err(Error::NotDistanceRegular {
                base: 0,
                other: v,
                msg: format!("eccentricity {ecc} differs from {d}"),
            });
        }
        for w in 0..n {
            let i = dist[w];
            let (mut toward, mut level, mut away) = (0usize, 0usize, 0usize);
            for &x in g.neighbors(w) {
                let dx = dist[x];
                if dx + 1 == i {
                    toward += 1;
                } else if dx == i {
                    level += 1;
                } else {
                    away += 1;
                }
            }
            for (name, slot, count) in [
                ("c", &mut c_counts[i], toward),
                ("a", &mut a_counts[i], level),
                ("b", &mut b_counts[i], away),
            ] {
                match slot {
                    None => *slot = Some(count),
                    Some(expected) if *expected != count => {
                        return Err(Error::NotDistanceRegular {
                            base: v,
                            other: w,
                            msg: format!(
                                "{name}_{i} = {count} here but {expected} elsewhere"
                            ),
                        });
                    }
                    _ => {}
                }
            }
        }
    }

    let b_seq: Vec<u64> = (0..d).map(|i| b_counts[i].unwrap() as u64).collect();
    let c_seq: Vec<u64> = (1..=d).map(|i| c_counts[i].unwrap() as u64).collect();
    let mut arr = IntersectionArray::from_sequences(&b_seq, &c_seq)?;
    debug_assert_eq!(arr.vertex_count().ok(), Some(n as u64));
    arr.from_graph = true;
    Ok(arr)
}

/// Full table of intersection numbers `p[s][i][j] = |N_i(u) ∩ N_j(v)|` for
/// vertices at distance `s`, computed by the three-term layer recurrence in
/// exact integer arithmetic. Any division with remainder or negative entry
/// marks the array unrealizable.
pub fn intersection_numbers(arr: &IntersectionArray) -> Result<Vec<Vec<Vec<i128>>>> {
    let d = arr.diameter();
    let layers = arr.layer_sizes()?;
    let mut p = vec![vec![vec![0i128; d + 1]; d + 1]; d + 1];

    for s in 0..=d {
        p[s][0][s] = 1;
        for j in 0..=d {
            let val = if j + 1 == s {
                arr.c(s)
            } else if j == s {
                arr.a(s)
            } else if j == s + 1 {
                arr.b(s)
            } else {
                continue;
            };
            p[s][1][j] = val as i128;
        }
    }

    for i in 1..d {
        for s in 0..=d {
            for j in 0..=d {
                let prev_s = if s > 0 { p[s - 1][i][j] } else { 0 };
                let next_s = if s < d { p[s + 1][i][j] } else { 0 };
                let prev_i = p[s][i - 1][j];
                let num = arr.c(s) as i128 * prev_s
                    + arr.a(s) as i128 * p[s][i][j]
                    + arr.b(s) as i128 * next_s
                    - arr.a(i) as i128 * p[s][i][j]
                    - arr.b(i - 1) as i128 * prev_i;
                let den = arr.c(i + 1) as i128;
                if num % den != 0 {
                    return Err(Error::InfeasibleArray(format!(
                        "{arr}: p^{s}_{{{},{j}}} = {num}/{den} is not an integer",
                        i + 1
                    )));
                }
                let val = num / den;
                if val < 0 {
                    return Err(Error::InfeasibleArray(format!(
                        "{arr}: p^{s}_{{{},{j}}} = {val} is negative",
                        i + 1
                    )));
                }
                p[s][i + 1][j] = val;
            }
        }
    }

    for s in 0..=d {
        for i in 0..=d {
            for j in 0..=d {
                if p[s][i][j] != p[s][j][i] {
                    return Err(Error::InfeasibleArray(format!(
                        "{arr}: p^{s}_{{{i},{j}}} = {} but p^{s}_{{{j},{i}}} = {}",
                        p[s][i][j], p[s][j][i]
                    )));
                }
            }
            let row: i128 = p[s][i].iter().sum();
            if row != layers[i] as i128 {
                return Err(Error::InfeasibleArray(format!(
                    "{arr}: Σ_j p^{s}_{{{i},j}} = {row} but k_{i} = {}",
                    layers[i]
                )));
            }
        }
    }

    Ok(p)
}

/// Checks the elementary parameter inequalities, one report each:
///
/// * `lambda-mu-bound` — for diameter ≥ 2, `2λ ≤ k + μ`.
/// * `terwilliger-quadrangle` — when an induced quadrangle is present,
///   `c_i − b_i ≥ c_{i−1} − b_{i−1} + λ + 2` for every `i = 1..d`
///   (slack = tightest index).
/// * `c3-lower-bound` — for diameter ≥ 3 and `μ ≥ 2`, `c_3 ≥ 3μ/2`, or
///   `c_3 ≥ μ + b_2` when the diameter is exactly 3.
/// * `c3-exceeds-mu` — for diameter ≥ 3 and `μ ≥ 2`, `c_3 > μ`.
///
/// `has_quadrangle` comes from a structure search when a graph is available
/// and is asserted by the caller otherwise.
pub fn basic_inequalities(
    arr: &IntersectionArray,
    has_quadrangle: bool,
) -> Vec<InequalityReport> {
    let d = arr.diameter();
    let k = arr.degree() as f64;
    let lambda = arr.lambda() as f64;
    let mut reports = Vec::with_capacity(4);

    reports.push(match arr.mu() {
        Some(mu) => {
            let slack = k + mu as f64 - 2.0 * lambda;
            InequalityReport::evaluated(
                "lambda-mu-bound",
                slack,
                witness(&[("k", k), ("lambda", lambda), ("mu", mu as f64)]),
            )
        }
        None => InequalityReport::not_applicable("lambda-mu-bound", "requires diameter >= 2"),
    });

    reports.push(if has_quadrangle {
        let mut worst: Option<(usize, i128)> = None;
        for i in 1..=d {
            let lhs = arr.c(i) as i128 - arr.b(i) as i128;
            let rhs = arr.c(i - 1) as i128 - arr.b(i - 1) as i128 + arr.lambda() as i128 + 2;
            let slack = lhs - rhs;
            if worst.map_or(true, |(_, w)| slack < w) {
                worst = Some((i, slack));
            }
        }
        let (i, slack) = worst.expect("d >= 1");
        InequalityReport::evaluated(
            "terwilliger-quadrangle",
            slack as f64,
            witness(&[
                ("i", i as f64),
                ("lhs", (arr.c(i) as i128 - arr.b(i) as i128) as f64),
                ("lambda", lambda),
            ]),
        )
        .with_note("slack is the minimum over i = 1..d")
    } else {
        InequalityReport::not_applicable(
            "terwilliger-quadrangle",
            "no induced quadrangle asserted",
        )
    });

    let mu_ge_2 = arr.mu().filter(|&mu| mu >= 2);
    match (d >= 3, mu_ge_2) {
        (true, Some(mu)) => {
            let c3 = arr.c(3) as f64;
            let mu = mu as f64;
            let b2 = arr.b(2) as f64;
            let branch_any_d = c3 - 1.5 * mu;
            let slack = if d == 3 {
                branch_any_d.max(c3 - (mu + b2))
            } else {
                branch_any_d
            };
            reports.push(InequalityReport::evaluated(
                "c3-lower-bound",
                slack,
                witness(&[("c3", c3), ("mu", mu), ("b2", b2), ("d", d as f64)]),
            ));
            reports.push(InequalityReport::evaluated(
                "c3-exceeds-mu",
                c3 - mu - 1.0,
                witness(&[("c3", c3), ("mu", mu)]),
            ));
        }
        _ => {
            let note = if d < 3 {
                "requires diameter >= 3"
            } else {
                "requires mu >= 2"
            };
            reports.push(InequalityReport::not_applicable("c3-lower-bound", note));
            reports.push(InequalityReport::not_applicable("c3-exceeds-mu", note));
        }
    }

    reports
}

/// Exhaustive triple-count oracle for `p[s][i][j]` on an explicit graph:
/// picks the first pair at each distance `s` and counts directly. Quadratic
/// in `n`; intended for small verification graphs.
pub fn count_intersection_numbers(g: &Graph, d: usize) -> Vec<Vec<Vec<i128>>> {
    let n = g.n();
    let mut table = vec![vec![vec![0i128; d + 1]; d + 1]; d + 1];
    let mut seen = vec![false; d + 1];
    let all_dists: Vec<Vec<usize>> = (0..n).map(|v| g.bfs_distances(v)).collect();
    for u in 0..n {
        for v in 0..n {
            let s = all_dists[u][v];
            if s > d || seen[s] {
                continue;
            }
            seen[s] = true;
            for w in 0..n {
                let (i, j) = (all_dists[u][w], all_dists[v][w]);
                if i <= d && j <= d {
                    table[s][i][j] += 1;
                }
            }
        }
    }
    table
}
