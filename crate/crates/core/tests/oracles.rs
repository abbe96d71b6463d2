//! Independent oracles for derived quantities, frozen as standalone
//! formulas in this file: binomial-coefficient layer sizes and vertex
//! counts, eigenvalue/multiplicity closed forms, geometric parameters, and
//! automorphism-group orders. Each oracle is computed here from first
//! principles and compared against the library's output, so a regression
//! in either the closed forms or the solvers trips a disagreement.

use drg_core::geometry::GeometryInfo;
use drg_core::graph::{generate, Family, GeneratorSpec};
use drg_core::motion::enumerate_automorphisms;
use drg_core::params::{check_distance_regular, IntersectionArray};
use drg_core::spectral::eigen_solve;

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1u64;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// J(s,d): b_i = (d-i)(s-d-i), c_i = i^2.
fn johnson_oracle(s: u64, d: u64) -> (Vec<u64>, Vec<u64>) {
    let b = (0..d).map(|i| (d - i) * (s - d - i)).collect();
    let c = (1..=d).map(|i| i * i).collect();
    (b, c)
}

/// H(d,s): b_i = (d-i)(s-1), c_i = i.
fn hamming_oracle(d: u64, s: u64) -> (Vec<u64>, Vec<u64>) {
    let b = (0..d).map(|i| (d - i) * (s - 1)).collect();
    let c = (1..=d).map(|i| i).collect();
    (b, c)
}

#[test]
fn johnson_arrays_layers_and_counts() {
    for d in 2..=4u64 {
        for s in (2 * d + 1)..=12 {
            let arr = IntersectionArray::johnson(s, d).unwrap();
            let (b, c) = johnson_oracle(s, d);
            assert_eq!(arr.b_sequence(), &b[..], "J({s},{d}) b-sequence");
            assert_eq!(arr.c_sequence(), &c[..], "J({s},{d}) c-sequence");
            // Layer i holds C(d,i) * C(s-d,i) vertices; they sum to C(s,d).
            let layers: Vec<u64> = (0..=d).map(|i| binomial(d, i) * binomial(s - d, i)).collect();
            assert_eq!(arr.layer_sizes().unwrap(), &layers[..]);
            assert_eq!(arr.vertex_count().unwrap(), binomial(s, d));
        }
    }
}

#[test]
fn hamming_arrays_layers_and_counts() {
    for d in 2..=4u64 {
        for s in 2..=8u64 {
            let arr = IntersectionArray::hamming(d, s).unwrap();
            let (b, c) = hamming_oracle(d, s);
            assert_eq!(arr.b_sequence(), &b[..], "H({d},{s}) b-sequence");
            assert_eq!(arr.c_sequence(), &c[..], "H({d},{s}) c-sequence");
            // Layer i holds C(d,i) * (s-1)^i vertices; they sum to s^d.
            let layers: Vec<u64> = (0..=d).map(|i| binomial(d, i) * (s - 1).pow(i as u32)).collect();
            assert_eq!(arr.layer_sizes().unwrap(), &layers[..]);
            assert_eq!(arr.vertex_count().unwrap(), s.pow(d as u32));
        }
    }
}

#[test]
fn johnson_spectrum_oracle() {
    // Eigenvalues (d-j)(s-d-j) - j with multiplicity C(s,j) - C(s,j-1).
    for d in 2..=3u64 {
        for s in (2 * d + 1)..=9 {
            let arr = IntersectionArray::johnson(s, d).unwrap();
            let profile = eigen_solve(&arr).unwrap();
            for j in 0..=d {
                let theta = ((d - j) * (s - d - j)) as f64 - j as f64;
                let mult = if j == 0 {
                    1
                } else {
                    binomial(s, j) - binomial(s, j - 1)
                };
                assert!(
                    (profile.eigenvalues[j as usize] - theta).abs() < 1e-9,
                    "J({s},{d}) eigenvalue {j}"
                );
                assert!(
                    (profile.multiplicities[j as usize] - mult as f64).abs() < 1e-6,
                    "J({s},{d}) multiplicity {j}"
                );
            }
        }
    }
}

#[test]
fn hamming_spectrum_oracle() {
    // Eigenvalues d(s-1) - js with multiplicity C(d,j)(s-1)^j.
    for d in 2..=3u64 {
        for s in 2..=8u64 {
            let arr = IntersectionArray::hamming(d, s).unwrap();
            let profile = eigen_solve(&arr).unwrap();
            for j in 0..=d {
                let theta = (d * (s - 1)) as f64 - (j * s) as f64;
                let mult = binomial(d, j) * (s - 1).pow(j as u32);
                assert!(
                    (profile.eigenvalues[j as usize] - theta).abs() < 1e-9,
                    "H({d},{s}) eigenvalue {j}"
                );
                assert!(
                    (profile.multiplicities[j as usize] - mult as f64).abs() < 1e-6,
                    "H({d},{s}) multiplicity {j}"
                );
            }
        }
    }
}

#[test]
fn geometric_parameter_oracles() {
    // H(d,s): m = d, psi_i = 1, tau_i = i. J(s,d): m = d, psi_i = i + 1,
    // tau_i = i. Both make c_i = tau_i * psi_{i-1} an identity.
    for d in 2..=4u64 {
        for s in 2..=8u64 {
            let arr = IntersectionArray::hamming(d, s).unwrap();
            let info = GeometryInfo::from_array(&arr, d).unwrap();
            assert_eq!(info.m, d);
            assert_eq!(info.clique_size, s);
            assert!(info.psi.iter().all(|&p| p == 1), "H({d},{s}) psi");
            let tau: Vec<u64> = (1..=d).collect();
            assert_eq!(info.tau, tau, "H({d},{s}) tau");
        }
    }
    for d in 2..=4u64 {
        for s in (2 * d + 1)..=12 {
            let arr = IntersectionArray::johnson(s, d).unwrap();
            let info = GeometryInfo::from_array(&arr, d).unwrap();
            assert_eq!(info.m, d);
            assert_eq!(info.clique_size, s - d + 1);
            let psi: Vec<u64> = (1..=d).collect();
            assert_eq!(info.psi, psi, "J({s},{d}) psi");
            let tau: Vec<u64> = (1..=d).collect();
            assert_eq!(info.tau, tau, "J({s},{d}) tau");
        }
    }
}

#[test]
fn extraction_agrees_with_closed_forms_on_small_members() {
    for (spec, expected) in [
        (
            GeneratorSpec::new(Family::Johnson, 6, 2),
            IntersectionArray::johnson(6, 2).unwrap(),
        ),
        (
            GeneratorSpec::new(Family::Johnson, 7, 3),
            IntersectionArray::johnson(7, 3).unwrap(),
        ),
        (
            GeneratorSpec::new(Family::Hamming, 4, 2),
            IntersectionArray::hamming(2, 4).unwrap(),
        ),
        (
            GeneratorSpec::new(Family::Hamming, 3, 3),
            IntersectionArray::hamming(3, 3).unwrap(),
        ),
    ] {
        let g = generate(&spec).unwrap();
        let arr = check_distance_regular(&g).unwrap();
        assert_eq!(arr.b_sequence(), expected.b_sequence());
        assert_eq!(arr.c_sequence(), expected.c_sequence());
    }
}

#[test]
fn automorphism_group_order_oracles() {
    // Closed-form orders: Aut(J(s,2)) = S_s for s != 4 (order s!), and
    // Aut(H(2,s)) = (S_s x S_s) : 2 (order 2 * s!^2).
    let factorial = |n: u64| (1..=n).product::<u64>();
    for s in 5..=7usize {
        let g = generate(&GeneratorSpec::new(Family::Johnson, s, 2)).unwrap();
        let list = enumerate_automorphisms(&g, 1_000_000);
        assert_eq!(list.group_order(), Some(factorial(s as u64)), "J({s},2)");
    }
    for s in 3..=4usize {
        let g = generate(&GeneratorSpec::new(Family::Hamming, s, 2)).unwrap();
        let list = enumerate_automorphisms(&g, 1_000_000);
        let expected = 2 * factorial(s as u64).pow(2);
        assert_eq!(list.group_order(), Some(expected), "H(2,{s})");
    }
}

#[test]
fn vartheta_constants_against_frozen_decimals() {
    // Frozen from an independent high-precision (30-digit) bisection of
    // t(t-1)^2(t-3)(t-4) = 1 at t = theta^2: the root is
    // theta = -2.00659361834601673..., epsilon_star = 0.00655042732821...
    let range = drg_core::spectral::solve_vartheta(1e-12).unwrap();
    assert!((range.vartheta_1 + 2.00659361834602).abs() < 1e-12);
    assert!((range.epsilon_star - 0.00655042732821).abs() < 1e-12);
}
