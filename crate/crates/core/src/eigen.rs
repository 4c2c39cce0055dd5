//! Eigendecomposition of unitary matrices and commuting unitary families.
//!
//! The kernel is a complex Hermitian Jacobi solver. Unitary (normal) input is
//! reduced to it by diagonalizing a random real combination of the Hermitian
//! and anti-Hermitian parts, with recursion into clusters that the combination
//! failed to separate. Fresh coefficients are drawn on every retry, up to
//! [`MAX_ATTEMPTS`] attempts, before giving up with a numerical error.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ComplexVector};

/// Retries of the randomized joint diagonalization before reporting failure.
pub const MAX_ATTEMPTS: usize = 8;

const RECURSION_CAP: usize = 32;

/// Eigenvalues and a shared orthonormal eigenvector block for one matrix.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    /// Eigenvalues; unimodular for unitary input.
    pub values: Vec<Complex64>,
    /// Orthonormal eigenvectors as columns, aligned with `values`.
    pub vectors: ComplexMatrix,
}

/// One orthonormal basis diagonalizing every member of a commuting family.
#[derive(Debug, Clone)]
pub struct JointEigenSystem {
    /// Shared eigenvector columns |λ_r⟩.
    pub vectors: ComplexMatrix,
    /// Eigenvalues per matrix: `values[i][r]` belongs to matrix i, column r.
    pub values: Vec<Vec<Complex64>>,
    /// Eigenphases in (−π, π]: `phases[i][r]` = arg(values[i][r]).
    pub phases: Vec<Vec<f64>>,
}

impl JointEigenSystem {
    /// View of matrix `i` as a standalone eigensystem over the shared block.
    pub fn eigen_system(&self, i: usize) -> EigenSystem {
        EigenSystem {
            values: self.values[i].clone(),
            vectors: self.vectors.clone(),
        }
    }
}

/// Map an angle to the principal branch (−π, π], absorbing −π jitter into +π.
pub fn principal_phase(z: Complex64) -> f64 {
    let mut t = z.arg();
    if t <= -PI + 1e-9 {
        t += 2.0 * PI;
    }
    t
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Returns eigenvalues ascending with matching eigenvector columns.
pub fn jacobi_hermitian(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "hermitian eigensolver needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    // Work on the Hermitian part; this also scrubs round-off asymmetry.
    let mut a = m.add(&m.adjoint()).scale(Complex64::new(0.5, 0.0));
    let mut v = ComplexMatrix::identity(n);
    let scale = a.max_abs().max(1.0);
    let threshold = scale * 1e-15;

    let max_rotations = 60 * n * n + 60;
    let mut converged = n < 2;
    for _ in 0..max_rotations {
        // Classical Jacobi: annihilate the largest off-diagonal entry.
        let (mut p, mut q, mut off) = (0, 0, 0.0);
        for i in 0..n {
            for j in (i + 1)..n {
                let mag = a.get(i, j).norm();
                if mag > off {
                    off = mag;
                    p = i;
                    q = j;
                }
            }
        }
        if off <= threshold {
            converged = true;
            break;
        }

        let apq = a.get(p, q);
        let b = apq.norm();
        let phi = apq.arg();
        let app = a.get(p, p).re;
        let aqq = a.get(q, q).re;
        // Plane rotation J: J[p][p]=c, J[p][q]=−s, J[q][p]=s·e^{−iφ},
        // J[q][q]=c·e^{−iφ}; J†AJ zeroes the (p,q) entry.
        let theta = 0.5 * (2.0 * b).atan2(app - aqq);
        let (s, c) = theta.sin_cos();
        let ephi = Complex64::from_polar(1.0, -phi);

        // Column update A ← A·J.
        for i in 0..n {
            let aip = a.get(i, p);
            let aiq = a.get(i, q);
            a.set(i, p, aip * c + aiq * s * ephi);
            a.set(i, q, -aip * s + aiq * c * ephi);
        }
        // Row update A ← J†·A.
        for j in 0..n {
            let apj = a.get(p, j);
            let aqj = a.get(q, j);
            a.set(p, j, apj * c + aqj * s * ephi.conj());
            a.set(q, j, -apj * s + aqj * c * ephi.conj());
        }
        // Accumulate V ← V·J.
        for i in 0..n {
            let vip = v.get(i, p);
            let viq = v.get(i, q);
            v.set(i, p, vip * c + viq * s * ephi);
            v.set(i, q, -vip * s + viq * c * ephi);
        }
    }
    if !converged {
        return Err(Error::Numerical(
            "Jacobi eigensolver did not converge".into(),
        ));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.partial_cmp(&a.get(j, j).re).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let vectors = ComplexMatrix::from_columns(
        &order.iter().map(|&i| v.column(i)).collect::<Vec<_>>(),
    );
    Ok((values, vectors))
}

fn check_unitary_member(m: &ComplexMatrix, index: usize, dim: usize, tol: f64) -> Result<()> {
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::Dimension(format!(
            "matrix {} is {}x{}, expected {}x{}",
            index,
            m.rows(),
            m.cols(),
            dim,
            dim
        )));
    }
    if !m.is_unitary(tol)? {
        return Err(Error::NonUnitary(format!(
            "matrix {} fails the unitarity check (error {:.3e})",
            index,
            m.unitarity_error()
        )));
    }
    Ok(())
}

/// Random real combination Σ c_i·(M_i+M_i†)/2 + d_i·(M_i−M_i†)/(2i); Hermitian,
/// and commuting with every family member when the family commutes.
fn random_hermitian_combination(ms: &[ComplexMatrix], rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let n = ms[0].rows();
    let mut a = ComplexMatrix::zeros(n, n);
    for m in ms {
        let adj = m.adjoint();
        let c = random_coefficient(rng);
        let d = random_coefficient(rng);
        let herm = m.add(&adj).scale(Complex64::new(0.5 * c, 0.0));
        let anti = m.sub(&adj).scale(Complex64::new(0.0, -0.5 * d));
        a = a.add(&herm).add(&anti);
    }
    a
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> f64 {
    let magnitude = rng.random_range(0.5..1.5);
    if rng.random_bool(0.5) {
        magnitude
    } else {
        -magnitude
    }
}

/// Does the restricted block Q†MQ act as a scalar on the subspace?
fn restricted_scalar_error(block: &ComplexMatrix) -> f64 {
    let k = block.rows();
    let mean = block.trace() / Complex64::new(k as f64, 0.0);
    let mut err: f64 = 0.0;
    for i in 0..k {
        for j in 0..k {
            let expect = if i == j { mean } else { Complex64::ZERO };
            err = err.max((block.get(i, j) - expect).norm());
        }
    }
    err
}

fn restrict(m: &ComplexMatrix, basis: &[ComplexVector]) -> ComplexMatrix {
    let q = ComplexMatrix::from_columns(basis);
    q.adjoint().matmul(m).matmul(&q)
}

fn lift(basis: &[ComplexVector], sub: &ComplexVector) -> ComplexVector {
    let mut out = ComplexVector::zeros(basis[0].dim());
    for (b, coeff) in basis.iter().zip(sub.entries()) {
        out = out.add(&b.scale(*coeff));
    }
    out
}

fn joint_basis_attempt(
    ms: &[ComplexMatrix],
    tol: f64,
    rng: &mut ChaCha8Rng,
    depth: usize,
) -> Result<Vec<ComplexVector>> {
    let n = ms[0].rows();
    if n == 1 {
        return Ok(vec![ComplexVector::basis_state(1, 0)]);
    }
    if depth > RECURSION_CAP {
        return Err(Error::Numerical(
            "joint diagonalization recursion exceeded its depth cap".into(),
        ));
    }

    let combo = random_hermitian_combination(ms, rng);
    let (evals, vecs) = jacobi_hermitian(&combo)?;
    let scale = evals.iter().fold(1.0f64, |acc, &e| acc.max(e.abs()));
    let cluster_eps = 1e-7 * scale;

    let mut basis = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && evals[end] - evals[end - 1] <= cluster_eps {
            end += 1;
        }
        if end - start == 1 {
            basis.push(vecs.column(start));
        } else {
            let block: Vec<ComplexVector> = (start..end).map(|j| vecs.column(j)).collect();
            let restricted: Vec<ComplexMatrix> =
                ms.iter().map(|m| restrict(m, &block)).collect();
            let scalar = restricted
                .iter()
                .all(|b| restricted_scalar_error(b) <= tol.max(1e-12));
            if scalar {
                // Genuine joint eigenspace: any orthonormal basis of it works.
                basis.extend(block);
            } else {
                let sub = joint_basis_attempt(&restricted, tol, rng, depth + 1)?;
                basis.extend(sub.iter().map(|s| lift(&block, s)));
            }
        }
        start = end;
    }
    Ok(basis)
}

fn rayleigh(m: &ComplexMatrix, v: &ComplexVector) -> Complex64 {
    v.inner(&m.matvec(v))
}

fn basis_residual(ms: &[ComplexMatrix], basis: &[ComplexVector]) -> f64 {
    let mut worst: f64 = 0.0;
    for m in ms {
        for v in basis {
            let mu = rayleigh(m, v);
            worst = worst.max(m.matvec(v).sub(&v.scale(mu)).max_abs());
        }
    }
    worst
}

/// Compare two phases with a tolerance window; `None` means "tie".
fn cmp_phase(a: f64, b: f64, eps: f64) -> Option<Ordering> {
    if (a - b).abs() <= eps {
        None
    } else {
        a.partial_cmp(&b)
    }
}

/// Deterministic tie-break: rotate each vector so its first nonzero entry is
/// real positive, then compare entrywise by (re, im).
fn cmp_vectors(a: &ComplexVector, b: &ComplexVector) -> Ordering {
    let rotate = |v: &ComplexVector| -> ComplexVector {
        match v.entries().iter().find(|e| e.norm() > 1e-9) {
            Some(pivot) => v.scale(pivot.conj() / pivot.norm()),
            None => v.clone(),
        }
    };
    let (ra, rb) = (rotate(a), rotate(b));
    for (x, y) in ra.entries().iter().zip(rb.entries()) {
        if let Some(ord) = cmp_phase(x.re, y.re, 1e-9) {
            return ord;
        }
        if let Some(ord) = cmp_phase(x.im, y.im, 1e-9) {
            return ord;
        }
    }
    Ordering::Equal
}

/// One orthonormal basis and phase table for a family of pairwise-commuting
/// unitaries: M_i·|λ_r⟩ = e^{iθ_i(r)}·|λ_r⟩ within `tol`.
///
/// Columns are ordered by the phase tuple (θ_0(r), θ_1(r), …) ascending, ties
/// broken by the canonical eigenvector comparison, so the output is
/// deterministic.
pub fn simultaneous_eigenbasis(ms: &[ComplexMatrix], tol: f64) -> Result<JointEigenSystem> {
    if ms.is_empty() {
        return Err(Error::Dimension("empty matrix family".into()));
    }
    let n = ms[0].rows();
    for (i, m) in ms.iter().enumerate() {
        check_unitary_member(m, i, n, tol)?;
    }
    for i in 0..ms.len() {
        for j in (i + 1)..ms.len() {
            let norm = ms[i].commutator_norm(&ms[j]);
            if norm > tol {
                return Err(Error::Commutation { i, j, norm });
            }
        }
    }

    let mut basis = None;
    let mut last_residual = f64::INFINITY;
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6f72_7468 + attempt as u64);
        match joint_basis_attempt(ms, tol, &mut rng, 0) {
            Ok(candidate) => {
                let residual = basis_residual(ms, &candidate);
                if residual <= tol.max(1e-13) {
                    basis = Some(candidate);
                    break;
                }
                last_residual = last_residual.min(residual);
            }
            Err(Error::Numerical(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let basis = basis.ok_or_else(|| {
        Error::Numerical(format!(
            "joint diagonalization residual {:.3e} exceeds tolerance {:.3e} after {} attempts",
            last_residual, tol, MAX_ATTEMPTS
        ))
    })?;

    // Canonical global phase per column, then canonical column order.
    let mut columns: Vec<ComplexVector> = basis.iter().map(|v| v.canonicalized()).collect();
    let phase_of = |v: &ComplexVector| -> Vec<f64> {
        ms.iter().map(|m| principal_phase(rayleigh(m, v))).collect()
    };
    columns.sort_by(|a, b| {
        let (pa, pb) = (phase_of(a), phase_of(b));
        for (x, y) in pa.iter().zip(&pb) {
            if let Some(ord) = cmp_phase(*x, *y, 1e-7) {
                return ord;
            }
        }
        cmp_vectors(a, b)
    });

    let mut values = Vec::with_capacity(ms.len());
    let mut phases = Vec::with_capacity(ms.len());
    for m in ms {
        let vals: Vec<Complex64> = columns.iter().map(|v| rayleigh(m, v)).collect();
        phases.push(vals.iter().map(|z| principal_phase(*z)).collect());
        values.push(vals);
    }
    Ok(JointEigenSystem {
        vectors: ComplexMatrix::from_columns(&columns),
        values,
        phases,
    })
}

/// Full eigendecomposition of a single unitary matrix.
///
/// Eigenvalues are ordered by phase ascending in (−π, π]; degenerate
/// eigenspaces come back with an orthonormal basis and the canonical
/// tie-break order.
pub fn eig_unitary(m: &ComplexMatrix, tol: f64) -> Result<EigenSystem> {
    let joint = simultaneous_eigenbasis(std::slice::from_ref(m), tol)?;
    Ok(joint.eigen_system(0))
}

/// Schmidt decomposition of a bipartite state of dimension `dim_a · dim_b`.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    /// Schmidt coefficients, descending, Σσ² = ‖state‖².
    pub coefficients: Vec<f64>,
    /// Alice-side Schmidt vectors (unit norm where σ is non-negligible).
    pub alice: Vec<ComplexVector>,
    /// Bob-side Schmidt vectors.
    pub bob: Vec<ComplexVector>,
}

impl SchmidtDecomposition {
    /// Rank-1 (product state) test: σ₁ ≥ 1 − tol for a normalized state.
    pub fn is_product(&self, tol: f64) -> bool {
        self.coefficients.first().is_some_and(|s| *s >= 1.0 - tol)
    }
}

/// Decompose `state` over A⊗B with A-major indexing (index = a·dim_b + b).
pub fn schmidt_decompose(
    state: &ComplexVector,
    dim_a: usize,
    dim_b: usize,
) -> Result<SchmidtDecomposition> {
    if state.dim() != dim_a * dim_b {
        return Err(Error::Dimension(format!(
            "state has dimension {}, expected {}x{}={}",
            state.dim(),
            dim_a,
            dim_b,
            dim_a * dim_b
        )));
    }
    let mut psi = ComplexMatrix::zeros(dim_a, dim_b);
    for i in 0..dim_a {
        for j in 0..dim_b {
            psi.set(i, j, state.get(i * dim_b + j));
        }
    }
    let g = psi.adjoint().matmul(&psi);
    let (evals, right) = jacobi_hermitian(&g)?;

    let k = dim_a.min(dim_b);
    // Ascending eigenvalues of ψ†ψ; take the top k, descending.
    let mut coefficients = Vec::with_capacity(k);
    let mut alice = Vec::with_capacity(k);
    let mut bob = Vec::with_capacity(k);
    for idx in (dim_b - k..dim_b).rev() {
        let sigma = evals[idx].max(0.0).sqrt();
        let bob_vec = ComplexVector::new(
            right.column(idx).entries().iter().map(|e| e.conj()).collect(),
        )
        .canonicalized();
        let v_used = ComplexVector::new(bob_vec.entries().iter().map(|e| e.conj()).collect());
        let mut alice_vec = psi.matvec(&v_used);
        if sigma > 1e-12 {
            alice_vec = alice_vec.scale(Complex64::new(1.0 / sigma, 0.0));
        }
        coefficients.push(sigma);
        alice.push(alice_vec);
        bob.push(bob_vec);
    }
    Ok(SchmidtDecomposition {
        coefficients,
        alice,
        bob,
    })
}

/// Orthonormalize a spanning set by modified Gram–Schmidt, dropping directions
/// whose residual norm falls below `rank_tol`.
pub fn orthonormalize(vectors: &[ComplexVector], rank_tol: f64) -> Vec<ComplexVector> {
    let mut basis: Vec<ComplexVector> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &basis {
            let overlap = b.inner(&w);
            w = w.sub(&b.scale(overlap));
        }
        // Second pass for numerical orthogonality.
        for b in &basis {
            let overlap = b.inner(&w);
            w = w.sub(&b.scale(overlap));
        }
        if w.norm() > rank_tol {
            basis.push(w.normalized());
        }
    }
    basis
}

/// Intersection of two subspaces given by orthonormal bases, via principal
/// angles: directions whose cosine is at least `cos_cutoff` are kept.
pub fn intersect_subspaces(
    a: &[ComplexVector],
    b: &[ComplexVector],
    cos_cutoff: f64,
) -> Result<Vec<ComplexVector>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut m = ComplexMatrix::zeros(a.len(), b.len());
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            m.set(i, j, ai.inner(bj));
        }
    }
    let g = m.adjoint().matmul(&m);
    let (evals, right) = jacobi_hermitian(&g)?;
    let mut out = Vec::new();
    for idx in (0..b.len()).rev() {
        let sigma = evals[idx].max(0.0).sqrt();
        if sigma < cos_cutoff {
            break;
        }
        let y = right.column(idx);
        let x = m.matvec(&y).scale(Complex64::new(1.0 / sigma, 0.0));
        let mut dir = ComplexVector::zeros(a[0].dim());
        for (ai, coeff) in a.iter().zip(x.entries()) {
            dir = dir.add(&ai.scale(*coeff));
        }
        out.push(dir.normalized());
    }
    // Guard against round-off drift in near-degenerate intersections.
    Ok(orthonormalize(&out, 1e-8))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::gram;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]])
    }

    fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, -1.0]])
    }

    fn cyclic_shift(n: usize) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(n, n);
        for col in 0..n {
            m.set((col + 1) % n, col, Complex64::ONE);
        }
        m
    }

    #[test]
    fn jacobi_diagonalizes_pauli_x() {
        let (vals, vecs) = jacobi_hermitian(&sigma_x()).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-12);
        assert!((vals[1] - 1.0).abs() < 1e-12);
        let d: Vec<Complex64> = vals.iter().map(|&v| c(v, 0.0)).collect();
        let recon = ComplexMatrix::from_eigen(&vecs, &d);
        assert!(recon.max_abs_diff(&sigma_x()) < 1e-12);
    }

    #[test]
    fn eig_unitary_sigma_x_golden() {
        // Hand diagonalization: σ_x has +1 at (1,1)/√2 and −1 at (1,−1)/√2.
        let sys = eig_unitary(&sigma_x(), 1e-9).unwrap();
        let s = 1.0 / 2.0f64.sqrt();
        assert!((sys.values[0] - c(1.0, 0.0)).norm() < 1e-12);
        assert!((sys.values[1] - c(-1.0, 0.0)).norm() < 1e-12);
        let plus = ComplexVector::from_real(&[s, s]);
        let minus = ComplexVector::from_real(&[s, -s]);
        assert!(sys.vectors.column(0).max_abs_diff(&plus) < 1e-12);
        assert!(sys.vectors.column(1).max_abs_diff(&minus) < 1e-12);
    }

    #[test]
    fn eig_unitary_identity_any_orthonormal_basis() {
        let sys = eig_unitary(&ComplexMatrix::identity(5), 1e-9).unwrap();
        for v in &sys.values {
            assert!((v - Complex64::ONE).norm() < 1e-12);
        }
        let g = gram(&sys.vectors.columns()).unwrap();
        assert!(g.max_abs_diff(&ComplexMatrix::identity(5)) < 1e-12);
    }

    #[test]
    fn eig_unitary_cyclic_shift_3_golden() {
        // Brute-force roots of unity: phases −2π/3, 0, 2π/3 ascending, with
        // Fourier-mode eigenvectors (1, λ̄, λ̄²)/√3.
        let sys = eig_unitary(&cyclic_shift(3), 1e-9).unwrap();
        let third = 2.0 * PI / 3.0;
        let expected_phases = [-third, 0.0, third];
        for (r, expect) in expected_phases.iter().enumerate() {
            assert!(
                (principal_phase(sys.values[r]) - expect).abs() < 1e-12,
                "phase {} mismatch",
                r
            );
            let lam = sys.values[r];
            let s = 1.0 / 3.0f64.sqrt();
            let expect_vec = ComplexVector::new(vec![
                c(s, 0.0),
                lam.conj() * s,
                (lam * lam).conj() * s,
            ]);
            assert!(sys.vectors.column(r).max_abs_diff(&expect_vec) < 1e-12);
        }
    }

    #[test]
    fn eig_unitary_rejects_non_unitary() {
        let shear = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]);
        assert!(matches!(
            eig_unitary(&shear, 1e-9),
            Err(Error::NonUnitary(_))
        ));
    }

    #[test]
    fn joint_basis_of_diagonal_family() {
        let family = vec![ComplexMatrix::identity(2), sigma_z()];
        let joint = simultaneous_eigenbasis(&family, 1e-9).unwrap();
        // Shared basis {|0⟩, |1⟩}; phases (0,0) and (0,π).
        assert!(joint
            .vectors
            .max_abs_diff(&ComplexMatrix::identity(2))
            < 1e-12);
        assert!(joint.phases[0][0].abs() < 1e-12);
        assert!(joint.phases[0][1].abs() < 1e-12);
        assert!(joint.phases[1][0].abs() < 1e-12);
        assert!((joint.phases[1][1] - PI).abs() < 1e-12);
    }

    #[test]
    fn joint_basis_cprime_sign_patterns() {
        // Diagonal ±1 family; canonical order sorts the joint phase tuples.
        let d = |signs: [f64; 4]| {
            ComplexMatrix::diagonal(&signs.map(|s| c(s, 0.0)))
        };
        let family = vec![
            d([1.0, 1.0, 1.0, 1.0]),
            d([1.0, -1.0, 1.0, -1.0]),
            d([1.0, 1.0, -1.0, -1.0]),
            d([1.0, -1.0, -1.0, 1.0]),
        ];
        let joint = simultaneous_eigenbasis(&family, 1e-9).unwrap();
        let expected_columns = [0usize, 2, 1, 3];
        for (r, &idx) in expected_columns.iter().enumerate() {
            let expect = ComplexVector::basis_state(4, idx);
            assert!(joint.vectors.column(r).max_abs_diff(&expect) < 1e-12);
        }
        let expect_phases = [
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, PI, PI],
            [0.0, PI, 0.0, PI],
            [0.0, PI, PI, 0.0],
        ];
        for (i, row) in expect_phases.iter().enumerate() {
            for (r, expect) in row.iter().enumerate() {
                assert!(
                    (joint.phases[i][r] - expect).abs() < 1e-12,
                    "phase table mismatch at ({}, {})",
                    i,
                    r
                );
            }
        }
    }

    #[test]
    fn anticommuting_pair_reports_commutation_error() {
        let err = simultaneous_eigenbasis(&[sigma_x(), sigma_z()], 1e-9).unwrap_err();
        match err {
            Error::Commutation { i, j, norm } => {
                assert_eq!((i, j), (0, 1));
                assert!((norm - 2.0).abs() < 1e-12);
            }
            other => panic!("expected commutation error, got {other:?}"),
        }
    }

    #[test]
    fn schmidt_of_product_state_is_rank_one() {
        let s = ComplexVector::basis_state(2, 0).tensor(&ComplexVector::basis_state(2, 1));
        let dec = schmidt_decompose(&s, 2, 2).unwrap();
        assert!(dec.is_product(1e-12));
        assert!((dec.coefficients[0] - 1.0).abs() < 1e-12);
        assert!(dec.coefficients[1].abs() < 1e-12);
        let recon = dec.alice[0].tensor(&dec.bob[0]);
        assert!(recon.distance_up_to_phase(&s) < 1e-12);
    }

    #[test]
    fn schmidt_of_bell_state_is_balanced() {
        let s = 1.0 / 2.0f64.sqrt();
        let bell = ComplexVector::from_real(&[s, 0.0, 0.0, s]);
        let dec = schmidt_decompose(&bell, 2, 2).unwrap();
        assert!(!dec.is_product(1e-6));
        assert!((dec.coefficients[0] - s).abs() < 1e-12);
        assert!((dec.coefficients[1] - s).abs() < 1e-12);
    }

    #[test]
    fn subspace_intersection_picks_common_direction() {
        let e0 = ComplexVector::basis_state(3, 0);
        let e1 = ComplexVector::basis_state(3, 1);
        let e2 = ComplexVector::basis_state(3, 2);
        let inter = intersect_subspaces(
            &[e0.clone(), e1.clone()],
            &[e1.clone(), e2.clone()],
            1.0 - 1e-8,
        )
        .unwrap();
        assert_eq!(inter.len(), 1);
        assert!(inter[0].distance_up_to_phase(&e1) < 1e-10);
    }

    #[test]
    fn disjoint_subspaces_have_empty_intersection() {
        let e0 = ComplexVector::basis_state(2, 0);
        let e1 = ComplexVector::basis_state(2, 1);
        let inter = intersect_subspaces(&[e0], &[e1], 1.0 - 1e-8).unwrap();
        assert!(inter.is_empty());
    }
}
