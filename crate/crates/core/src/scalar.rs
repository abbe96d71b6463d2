//! Scalar abstraction for the spectral recurrences. The same kernels run in
//! floating point for irrational eigenvalues and in exact rational
//! arithmetic for integral ones; anything satisfying the numeric traits
//! (f32, f64, arbitrary-precision rationals) plugs in.

use num_traits::{FromPrimitive, Num};

use crate::params::IntersectionArray;

/// Field-like scalar the recurrences are generic over.
pub trait Scalar: Num + FromPrimitive + Clone + std::fmt::Debug {
    /// Embeds an exact counting number (degree, layer size, …).
    fn from_count(x: u64) -> Self {
        Self::from_u64(x).expect("count representable in scalar")
    }
}

impl<T: Num + FromPrimitive + Clone + std::fmt::Debug> Scalar for T {}

/// Standard sequence `u_0(θ), …, u_d(θ)` of an intersection array:
/// `u_0 = 1`, `u_1 = θ/k`, and the three-term recurrence
/// `c_i·u_{i−1} + a_i·u_i + b_i·u_{i+1} = θ·u_i`.
pub fn standard_sequence<S: Scalar>(arr: &IntersectionArray, theta: &S) -> Vec<S> {
    let d = arr.diameter();
    let k = S::from_count(arr.degree());
    let mut u = Vec::with_capacity(d + 1);
    u.push(S::one());
    u.push(theta.clone() / k);
    for i in 1..d {
        let a_i = S::from_count(arr.a(i));
        let b_i = S::from_count(arr.b(i));
        let c_i = S::from_count(arr.c(i));
        let next = ((theta.clone() - a_i) * u[i].clone() - c_i * u[i - 1].clone()) / b_i;
        u.push(next);
    }
    u
}

/// Eigenvalue multiplicity from the standard sequence:
/// `f(θ) = n / Σ_i k_i·u_i(θ)²`.
pub fn biggs_multiplicity<S: Scalar>(vertex_count: &S, layers: &[S], seq: &[S]) -> S {
    let denom = layers
        .iter()
        .zip(seq)
        .fold(S::zero(), |acc, (k_i, u_i)| {
            acc + k_i.clone() * u_i.clone() * u_i.clone()
        });
    vertex_count.clone() / denom
}
