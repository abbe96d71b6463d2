//! Eigen-theory of intersection arrays: the tridiagonal quotient matrix, its
//! spectrum, standard sequences, multiplicities, the local-eigenvalue
//! quantities b⁺/b⁻, the zero-weight spectral radius, closed-form spectra
//! for the Johnson and Hamming families, and the smallest-eigenvalue
//! constants ϑ₁ and ε*.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Family, GeneratorSpec, Graph};
use crate::params::IntersectionArray;
use crate::report::{witness, InequalityReport};
use crate::scalar::{biggs_multiplicity, standard_sequence};

/// Eigenvalues snap to integers within this distance.
pub const INTEGER_SNAP_TOL: f64 = 1e-6;
/// Eigenvalues closer than this are treated as repeated (infeasible).
pub const DISTINCTNESS_TOL: f64 = 1e-9;
/// Limit of the smallest-eigenvalue thresholds ϑ_k as the valency grows:
/// no graph of large minimal valency has smallest eigenvalue in (−1−√2, −2)
/// other than via the finitely many exceptional cases below each ϑ_k.
pub const VARTHETA_LIMIT: f64 = -1.0 - std::f64::consts::SQRT_2;

/// Spectrum of an intersection array: eigenvalues in strictly descending
/// order with their standard sequences and multiplicities.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralProfile {
    /// θ_0 > θ_1 > … > θ_d, integer-snapped where flagged.
    pub eigenvalues: Vec<f64>,
    /// Multiplicities f_j snapped to the nearest integer.
    pub multiplicities: Vec<f64>,
    /// Raw multiplicity minus its snapped integer.
    pub multiplicity_residuals: Vec<f64>,
    /// Standard sequence u_0(θ_j)..u_d(θ_j) for each eigenvalue.
    pub standard_sequences: Vec<Vec<f64>>,
    /// Whether each eigenvalue snapped to an integer.
    pub integral_flags: Vec<bool>,
    /// b_1/(θ_1 + 1); `None` for diameter 1.
    pub b_plus: Option<f64>,
    /// b_1/(θ_d + 1); `None` for diameter 1.
    pub b_minus: Option<f64>,
    /// Zero-weight spectral radius: max(|θ_1|, |θ_d|).
    pub xi: f64,
}

impl SpectralProfile {
    /// Second-largest eigenvalue θ_1.
    pub fn theta_1(&self) -> f64 {
        self.eigenvalues[1]
    }

    /// Smallest eigenvalue θ_d.
    pub fn theta_min(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }
}

/// Smallest-eigenvalue constants: the diameter-free threshold ϑ₁ and the
/// derived relaxation bound ε*.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EigRange {
    /// Largest value < −2 attainable as the smallest eigenvalue of a graph
    /// of minimal valency 1: root of θ²(θ²−1)²(θ²−3)(θ²−4) = 1 near −2.0066.
    pub vartheta_1: f64,
    /// ε* = (−2 − ϑ₁)/(−1 − ϑ₁) ≈ 0.006551.
    pub epsilon_star: f64,
}

/// Tridiagonal quotient matrix of the distance partition: subdiagonal c_i,
/// diagonal a_i, superdiagonal b_i.
pub fn intersection_matrix(arr: &IntersectionArray) -> DMatrix<f64> {
    let d = arr.diameter();
    DMatrix::from_fn(d + 1, d + 1, |i, j| {
        if j + 1 == i {
            arr.c(i) as f64
        } else if j == i {
            arr.a(i) as f64
        } else if j == i + 1 {
            arr.b(i) as f64
        } else {
            0.0
        }
    })
}

/// Eigenvalues and multiplicities of an intersection array.
///
/// The quotient matrix is similar (by diagonal scaling with √k_i) to a
/// symmetric tridiagonal matrix with off-diagonal √(b_i·c_{i+1}), which is
/// what gets solved. Eigenvalues are snapped to integers within
/// [`INTEGER_SNAP_TOL`]; integral eigenvalues take the exact rational path
/// for their standard sequences and multiplicities, the rest are computed in
/// floating point. Repeated eigenvalues (within [`DISTINCTNESS_TOL`]) mean
/// the array is unrealizable: a diameter-d distance-regular graph has
/// exactly d+1 distinct eigenvalues.
pub fn eigen_solve(arr: &IntersectionArray) -> Result<SpectralProfile> {
    let d = arr.diameter();
    let sym = DMatrix::from_fn(d + 1, d + 1, |i, j| {
        if j == i {
            arr.a(i) as f64
        } else if j == i + 1 || i == j + 1 {
            let lo = i.min(j);
            ((arr.b(lo) as f64) * (arr.c(lo + 1) as f64)).sqrt()
        } else {
            0.0
        }
    });
    let mut eigenvalues: Vec<f64> = sym.symmetric_eigen().eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));

    let mut integral_flags = Vec::with_capacity(d + 1);
    for theta in eigenvalues.iter_mut() {
        let snapped = theta.round();
        if (*theta - snapped).abs() <= INTEGER_SNAP_TOL {
            *theta = snapped;
            integral_flags.push(true);
        } else {
            integral_flags.push(false);
        }
    }
    for w in eigenvalues.windows(2) {
        if (w[0] - w[1]).abs() < DISTINCTNESS_TOL {
            return Err(Error::InfeasibleArray(format!(
                "{arr}: repeated eigenvalue near {:.6} (needs {} distinct values)",
                w[0],
                d + 1
            )));
        }
    }

    let k = arr.degree() as f64;
    if (eigenvalues[0] - k).abs() > INTEGER_SNAP_TOL * k.max(1.0) {
        return Err(Error::Internal(format!(
            "{arr}: leading eigenvalue {} drifted from degree {k}",
            eigenvalues[0]
        )));
    }
    eigenvalues[0] = k;

    build_profile(arr, eigenvalues, integral_flags, None)
}

/// Assembles a profile from known eigenvalues. `multiplicity_override`
/// bypasses the multiplicity computation (used by closed forms).
fn build_profile(
    arr: &IntersectionArray,
    eigenvalues: Vec<f64>,
    integral_flags: Vec<bool>,
    multiplicity_override: Option<Vec<f64>>,
) -> Result<SpectralProfile> {
    let d = arr.diameter();
    let layers_exact = arr.layer_sizes_exact();
    let n_exact = arr.vertex_count_exact();
    let layers_f64: Vec<f64> = layers_exact
        .iter()
        .map(|x| x.to_f64().expect("layer size in f64 range"))
        .collect();
    let n_f64 = n_exact.to_f64().expect("vertex count in f64 range");

    let mut multiplicities = Vec::with_capacity(d + 1);
    let mut residuals = Vec::with_capacity(d + 1);
    let mut sequences = Vec::with_capacity(d + 1);

    for (j, &theta) in eigenvalues.iter().enumerate() {
        if integral_flags[j] {
            let theta_q = BigRational::from_integer(BigInt::from(theta as i64));
            let u = standard_sequence(arr, &theta_q);
            let f = biggs_multiplicity(&n_exact, &layers_exact, &u);
            let snapped = f.round();
            residuals.push((&f - &snapped).to_f64().expect("small residual"));
            multiplicities.push(snapped.to_f64().expect("multiplicity in f64 range"));
            sequences.push(
                u.iter()
                    .map(|x| x.to_f64().expect("sequence value in f64 range"))
                    .collect(),
            );
        } else {
            let u = standard_sequence(arr, &theta);
            let f = biggs_multiplicity(&n_f64, &layers_f64, &u);
            let snapped = f.round();
            residuals.push(f - snapped);
            multiplicities.push(snapped);
            sequences.push(u);
        }
    }
    if let Some(given) = multiplicity_override {
        multiplicities = given;
        residuals = vec![0.0; d + 1];
    }

    let theta_1 = eigenvalues[1];
    let theta_d = *eigenvalues.last().unwrap();
    let (b_plus, b_minus) = if d >= 2 {
        let b1 = arr.b(1) as f64;
        let safe = |den: f64| (den.abs() > 1e-12).then(|| b1 / den);
        (safe(theta_1 + 1.0), safe(theta_d + 1.0))
    } else {
        (None, None)
    };

    Ok(SpectralProfile {
        xi: theta_1.abs().max(theta_d.abs()),
        eigenvalues,
        multiplicities,
        multiplicity_residuals: residuals,
        standard_sequences: sequences,
        integral_flags,
        b_plus,
        b_minus,
    })
}

fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or_else(|| Error::InvalidParameters("binomial exceeds u128".into()))?
            / (i + 1) as u128;
    }
    u64::try_from(acc).map_err(|_| Error::InvalidParameters("binomial exceeds u64".into()))
}

/// Exact spectrum of a Johnson or Hamming graph from the closed forms:
/// J(s,d) has θ_j = (d−j)(s−d−j) − j with multiplicity C(s,j) − C(s,j−1);
/// H(d,s) has θ_j = d(s−1) − js with multiplicity C(d,j)(s−1)^j.
pub fn closed_form_spectrum(spec: &GeneratorSpec) -> Result<SpectralProfile> {
    let (arr, eigenvalues, multiplicities): (IntersectionArray, Vec<f64>, Vec<f64>) =
        match spec.family {
            Family::Johnson => {
                let (s, d) = (spec.s as u64, spec.d as u64);
                let arr = IntersectionArray::johnson(s, d)?;
                let thetas = (0..=d)
                    .map(|j| ((d - j) * (s - d - j)) as i128 - j as i128)
                    .map(|x| x as f64)
                    .collect();
                let mults = (0..=d)
                    .map(|j| {
                        let prev = if j == 0 { 0 } else { binomial(s, j - 1)? };
                        Ok((binomial(s, j)? - prev) as f64)
                    })
                    .collect::<Result<_>>()?;
                (arr, thetas, mults)
            }
            Family::Hamming => {
                let (d, s) = (spec.d as u64, spec.s as u64);
                let arr = IntersectionArray::hamming(d, s)?;
                let thetas = (0..=d)
                    .map(|j| (d * (s - 1)) as i128 - (j * s) as i128)
                    .map(|x| x as f64)
                    .collect();
                let mults = (0..=d)
                    .map(|j| {
                        let pw = (s - 1).checked_pow(j as u32).ok_or_else(|| {
                            Error::InvalidParameters("multiplicity exceeds u64".into())
                        })?;
                        let prod = binomial(d, j)?.checked_mul(pw).ok_or_else(|| {
                            Error::InvalidParameters("multiplicity exceeds u64".into())
                        })?;
                        Ok(prod as f64)
                    })
                    .collect::<Result<_>>()?;
                (arr, thetas, mults)
            }
            _ => {
                return Err(Error::InvalidParameters(format!(
                    "closed-form spectrum covers the Johnson and Hamming families, not {:?}",
                    spec.family
                )))
            }
        };
    let flags = vec![true; eigenvalues.len()];
    build_profile(&arr, eigenvalues, flags, Some(multiplicities))
}

/// Realizability reports for an array, one per condition:
///
/// * `layer-sizes-integral` — every k_i is a non-negative integer.
/// * `multiplicities-integral` — every Biggs multiplicity is within 10⁻⁶ of
///   a positive integer.
/// * `multiplicity-sum` — Σ f_j = n within 10⁻⁶·n.
pub fn feasibility_check(arr: &IntersectionArray) -> Vec<InequalityReport> {
    let mut reports = Vec::with_capacity(3);

    let layers = arr.layer_sizes_exact();
    let max_dev = layers
        .iter()
        .map(|x| (x - x.round()).abs().to_f64().expect("deviation in [0, 0.5]"))
        .fold(0.0f64, f64::max);
    let n_f64 = arr.vertex_count_exact().to_f64().unwrap_or(f64::NAN);
    reports.push(InequalityReport::evaluated(
        "layer-sizes-integral",
        -max_dev,
        witness(&[("n", n_f64), ("max_deviation", max_dev)]),
    ));

    match eigen_solve(arr) {
        Ok(profile) => {
            let max_res = profile
                .multiplicity_residuals
                .iter()
                .fold(0.0f64, |acc, r| acc.max(r.abs()));
            let min_mult = profile
                .multiplicities
                .iter()
                .fold(f64::INFINITY, |acc, &m| acc.min(m));
            reports.push(InequalityReport::evaluated(
                "multiplicities-integral",
                (INTEGER_SNAP_TOL - max_res).min(min_mult - 1.0),
                witness(&[("max_residual", max_res), ("min_multiplicity", min_mult)]),
            ));

            let total: f64 = profile
                .multiplicities
                .iter()
                .zip(&profile.multiplicity_residuals)
                .map(|(m, r)| m + r)
                .sum();
            let tol = 1e-6 * n_f64.max(1.0);
            reports.push(InequalityReport::evaluated(
                "multiplicity-sum",
                tol - (total - n_f64).abs(),
                witness(&[("sum", total), ("n", n_f64)]),
            ));
        }
        Err(e) => {
            for name in ["multiplicities-integral", "multiplicity-sum"] {
                reports.push(
                    InequalityReport::evaluated(name, -1.0, witness(&[]))
                        .with_note(&e.to_string()),
                );
            }
        }
    }
    reports
}

/// Computes ϑ₁ by bisecting p(θ) = θ²(θ²−1)²(θ²−3)(θ²−4) − 1 over
/// [−2.1, −2.0], then ε* = (−2 − ϑ₁)/(−1 − ϑ₁).
///
/// `tolerance` is the coarsest acceptable bracket width; the bracket is
/// always refined further, to near machine precision, because downstream
/// thresholds need the defining-polynomial residual below 10⁻⁸ and the
/// polynomial's slope at the root is ≈ −160 (a 10⁻⁹ bracket alone would
/// leave a residual near 10⁻⁷).
pub fn solve_vartheta(tolerance: f64) -> Result<EigRange> {
    if tolerance <= 0.0 {
        return Err(Error::InvalidParameters(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let p = |theta: f64| {
        let t = theta * theta;
        t * (t - 1.0).powi(2) * (t - 3.0) * (t - 4.0) - 1.0
    };
    let (mut lo, mut hi) = (-2.1f64, -2.0f64);
    if !(p(lo) > 0.0 && p(hi) < 0.0) {
        return Err(Error::Internal(
            "bracket [-2.1, -2.0] does not straddle the root".into(),
        ));
    }
    let width = tolerance.min(1e-14);
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket at floating-point resolution
        }
        if p(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let vartheta_1 = 0.5 * (lo + hi);
    Ok(EigRange {
        vartheta_1,
        epsilon_star: (-2.0 - vartheta_1) / (-1.0 - vartheta_1),
    })
}

/// Adjacency eigenvalues of an explicit graph, descending (dense symmetric
/// solve; intended for neighborhood-sized inputs).
pub fn adjacency_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let m = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut eig: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    eig.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
    eig
}
