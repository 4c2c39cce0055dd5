//! Seeded random constructions: Haar-like unitaries, random states, and the
//! two gate generators used for experiments and property suites.
//!
//! Everything is driven by an explicit seed through ChaCha, so identical
//! seeds produce identical gates on every run and platform.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::f64::consts::PI;

use crate::eigen::orthonormalize;
use crate::error::{Error, Result};
use crate::gate::ControlledGate;
use crate::matrix::{ComplexMatrix, ComplexVector};

fn gaussian_complex(rng: &mut impl Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// A random state vector, uniform on the unit sphere.
pub fn random_state(n: usize, rng: &mut impl Rng) -> ComplexVector {
    loop {
        let v = ComplexVector::new((0..n).map(|_| gaussian_complex(rng)).collect());
        if v.norm() > 1e-6 {
            return v.normalized();
        }
    }
}

/// Haar-distributed random unitary: Gram–Schmidt of a complex Gaussian
/// matrix (the positive-diagonal R makes the distribution exactly Haar).
pub fn random_unitary(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    loop {
        let raw: Vec<ComplexVector> = (0..n)
            .map(|_| ComplexVector::new((0..n).map(|_| gaussian_complex(rng)).collect()))
            .collect();
        let basis = orthonormalize(&raw, 1e-8);
        if basis.len() == n {
            return ComplexMatrix::from_columns(&basis);
        }
    }
}

/// Extend `first` (unit norm) to a full unitary with random remaining columns.
pub fn complete_to_unitary(first: &ComplexVector, rng: &mut impl Rng) -> ComplexMatrix {
    let n = first.dim();
    let mut columns = vec![first.normalized()];
    while columns.len() < n {
        let candidate = ComplexVector::new((0..n).map(|_| gaussian_complex(rng)).collect());
        let mut trial = columns.clone();
        trial.push(candidate);
        let ortho = orthonormalize(&trial, 1e-8);
        if ortho.len() == columns.len() + 1 {
            columns = ortho;
        }
    }
    ComplexMatrix::from_columns(&columns)
}

/// Generate a symmetric orthogonal gate of cardinality `n`:
/// U_m = T·Σ_r e^{iφ_m(r)}|λ_r⟩⟨λ_r| with Fourier phases φ_m(r) = 2πmr/N,
/// a Haar-random T and a Haar-random eigenbasis {|λ_r⟩}. The reference state
/// is the uniform eigenbasis superposition (γ = 0), which the Fourier
/// orthogonality makes a valid orthogonal-gate reference.
pub fn random_symmetric_gate(n: usize, seed: u64) -> Result<ControlledGate> {
    if n == 0 {
        return Err(Error::Validation("cardinality must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = random_unitary(n, &mut rng);
    let basis = random_unitary(n, &mut rng);

    let mut unitaries = Vec::with_capacity(n);
    for m in 0..n {
        let phases: Vec<Complex64> = (0..n)
            .map(|r| Complex64::from_polar(1.0, 2.0 * PI * (m * r) as f64 / n as f64))
            .collect();
        unitaries.push(t.matmul(&ComplexMatrix::from_eigen(&basis, &phases)));
    }
    let scale = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
    let mut reference = ComplexVector::zeros(n);
    for r in 0..n {
        reference = reference.add(&basis.column(r).scale(scale));
    }
    ControlledGate::new(
        format!("random-symmetric-n{n}-seed{seed}"),
        unitaries,
        Some(reference),
        crate::DEFAULT_TOL,
    )
}

/// Generate a generic orthogonal gate of cardinality `n`: a random reference,
/// a random orthonormal target basis, and independent random completions for
/// each U_n. For n ≥ 3 such gates are asymmetric with overwhelming
/// probability; every cardinality-2 orthogonal gate is symmetric.
pub fn random_orthogonal_gate(n: usize, seed: u64) -> Result<ControlledGate> {
    if n == 0 {
        return Err(Error::Validation("cardinality must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reference = random_state(n, &mut rng);
    let targets = random_unitary(n, &mut rng);
    let source = complete_to_unitary(&reference, &mut rng);

    let mut unitaries = Vec::with_capacity(n);
    for m in 0..n {
        // U_m maps reference → targets[:,m]; the rest of the action is an
        // independent random completion.
        let image = complete_to_unitary(&targets.column(m), &mut rng);
        unitaries.push(image.matmul(&source.adjoint()));
    }
    ControlledGate::new(
        format!("random-orthogonal-n{n}-seed{seed}"),
        unitaries,
        Some(reference),
        crate::DEFAULT_TOL,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::verify_orthogonal;
    use crate::symmetry::check_commuting;
    use crate::DEFAULT_TOL;

    #[test]
    fn random_unitary_is_unitary_and_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let u = random_unitary(5, &mut rng);
        assert!(u.is_unitary(1e-10).unwrap());
        let mut rng2 = ChaCha8Rng::seed_from_u64(11);
        let v = random_unitary(5, &mut rng2);
        assert_eq!(u.entries(), v.entries());
    }

    #[test]
    fn symmetric_generator_passes_both_checks() {
        for n in 2..=6 {
            let g = random_symmetric_gate(n, 40 + n as u64).unwrap();
            assert!(check_commuting(&g, DEFAULT_TOL).is_none(), "n={n}");
            let r = verify_orthogonal(g.unitaries(), g.reference().unwrap(), DEFAULT_TOL)
                .unwrap();
            assert!(r.holds, "n={n}");
        }
    }

    #[test]
    fn orthogonal_generator_is_orthogonal_and_generically_asymmetric() {
        let g = random_orthogonal_gate(4, 7).unwrap();
        let r = verify_orthogonal(g.unitaries(), g.reference().unwrap(), DEFAULT_TOL).unwrap();
        assert!(r.holds);
        assert!(check_commuting(&g, DEFAULT_TOL).is_some());
    }

    #[test]
    fn cardinality_two_random_gates_are_always_symmetric() {
        for seed in 0..10 {
            let g = random_orthogonal_gate(2, seed).unwrap();
            assert!(check_commuting(&g, DEFAULT_TOL).is_none(), "seed={seed}");
        }
    }

    #[test]
    fn complete_to_unitary_keeps_first_column() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let v = random_state(4, &mut rng);
        let u = complete_to_unitary(&v, &mut rng);
        assert!(u.is_unitary(1e-10).unwrap());
        assert!(u.column(0).max_abs_diff(&v) < 1e-12);
    }
}
