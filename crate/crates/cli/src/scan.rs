//! Parameter-space scan: enumerate candidate intersection arrays in
//! lexicographic order, keep the ones passing every feasibility filter, and
//! classify each survivor. Output is NDJSON, one envelope per feasible
//! array, byte-identical across runs.

use std::thread;

use drg_core::classifier::{babai_case_analysis, ClassifierConfig};
use drg_core::error::{Error, Result};
use drg_core::geometry::GeometryInfo;
use drg_core::params::{basic_inequalities, IntersectionArray};
use drg_core::spectral::{eigen_solve, feasibility_check};
use serde_json::json;

/// Hard ceiling on the scanned degree range.
pub const SCAN_K_MAX_LIMIT: u64 = 10_000;

pub struct ScanParams {
    pub d: usize,
    pub k_max: u64,
    pub config: ClassifierConfig,
}

/// Runs the scan and returns the NDJSON body (possibly empty). Work fans
/// out across threads by leading degree `b_0`; results are merged back in
/// `b_0` order so the output is independent of scheduling.
pub fn scan(params: &ScanParams) -> Result<String> {
    if params.d < 2 {
        return Err(Error::InvalidParameters(format!(
            "scan needs diameter d >= 2, got {}",
            params.d
        )));
    }
    if params.k_max < 2 || params.k_max > SCAN_K_MAX_LIMIT {
        return Err(Error::InvalidParameters(format!(
            "scan needs 2 <= k-max <= {SCAN_K_MAX_LIMIT}, got {}",
            params.k_max
        )));
    }

    let degrees: Vec<u64> = (2..=params.k_max).collect();
    let threads = thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(8)
        .min(degrees.len().max(1));

    // One bucket per leading degree, filled by whichever thread owns it,
    // then concatenated in order.
    let mut buckets: Vec<Vec<String>> = vec![Vec::new(); degrees.len()];
    thread::scope(|scope| {
        let mut handles = Vec::with_capacity(threads);
        for t in 0..threads {
            let degrees = &degrees;
            let params = &params;
            handles.push(scope.spawn(move || {
                let mut done: Vec<(usize, Vec<String>)> = Vec::new();
                let mut idx = t;
                while idx < degrees.len() {
                    done.push((idx, scan_degree(degrees[idx], params)));
                    idx += threads;
                }
                done
            }));
        }
        for handle in handles {
            for (idx, lines) in handle.join().expect("scan worker panicked") {
                buckets[idx] = lines;
            }
        }
    });

    Ok(buckets.concat().concat())
}

/// All feasible arrays with `b_0 = k`, in lexicographic order over
/// `(b_1, …, b_{d−1}, c_2, …, c_d)`.
fn scan_degree(k: u64, params: &ScanParams) -> Vec<String> {
    let mut lines = Vec::new();
    let mut b = Vec::with_capacity(params.d);
    b.push(k);
    let mut c = Vec::with_capacity(params.d);
    extend_b(&mut b, &mut c, params, &mut lines);
    lines
}

fn extend_b(b: &mut Vec<u64>, c: &mut Vec<u64>, params: &ScanParams, lines: &mut Vec<String>) {
    if b.len() == params.d {
        c.push(1);
        extend_c(b, c, params, lines);
        c.pop();
        return;
    }
    // b_1 <= k - 1 (the edge's own a_1 >= 0); deeper entries non-increasing.
    let hi = if b.len() == 1 { b[0] - 1 } else { *b.last().unwrap() };
    for v in 1..=hi {
        b.push(v);
        extend_b(b, c, params, lines);
        b.pop();
    }
}

fn extend_c(b: &mut Vec<u64>, c: &mut Vec<u64>, params: &ScanParams, lines: &mut Vec<String>) {
    let j = c.len();
    if j == params.d {
        if let Some(line) = evaluate(b, c, params) {
            lines.push(line);
        }
        return;
    }
    // c_{j+1} >= c_j, and a_{j+1} = k - b_{j+1} - c_{j+1} >= 0.
    let k = b[0];
    let b_next = if j + 1 < params.d { b[j + 1] } else { 0 };
    let lo = *c.last().unwrap();
    if b_next >= k {
        return;
    }
    for v in lo..=(k - b_next) {
        c.push(v);
        extend_c(b, c, params, lines);
        c.pop();
    }
}

/// Applies the filter chain to one candidate; returns its NDJSON line when
/// every realizability condition passes.
fn evaluate(b: &[u64], c: &[u64], params: &ScanParams) -> Option<String> {
    let arr = IntersectionArray::from_sequences(b, c).ok()?;
    let n = arr.vertex_count().ok()?;

    let elementary = basic_inequalities(&arr, false);
    if elementary.iter().any(|r| r.applicable && !r.holds) {
        return None;
    }
    let feasibility = feasibility_check(&arr);
    if feasibility.iter().any(|r| r.applicable && !r.holds) {
        return None;
    }
    let profile = eigen_solve(&arr).ok()?;

    // Geometric structure is available exactly when the smallest eigenvalue
    // is a negative integer -m and the array fits a clique geometry with
    // that m.
    let theta_min = profile.theta_min();
    let geometry = if *profile.integral_flags.last().unwrap() && theta_min <= -1.0 {
        GeometryInfo::from_array(&arr, (-theta_min).round() as u64).ok()
    } else {
        None
    };
    let outcome = babai_case_analysis(&arr, &profile, geometry.as_ref(), None, &params.config);

    let record = json!({
        "b": b,
        "c": c,
        "d": params.d,
        "k": arr.degree(),
        "n": n,
        "eigenvalues": profile.eigenvalues,
        "multiplicities": profile.multiplicities,
        "geometric": geometry.is_some(),
        "m": geometry.as_ref().map(|g| g.m),
        "outcome": outcome,
    });
    let envelope = json!({ "command": "scan", "report": record });
    let mut line = serde_json::to_string(&envelope).expect("scan record serializes");
    line.push('\n');
    Some(line)
}
