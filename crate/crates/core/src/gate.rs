//! The controlled-gate model: validation, orthogonality verification, gate
//! action on product inputs, and the built-in gate catalog.
//!
//! A gate of cardinality N applies one of N unitaries {U_n} to Bob's
//! N-dimensional system, selected by Alice's control index. Joint states are
//! stored Alice-major: entry n·N + m is Alice index n, Bob index m.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ComplexVector};

/// Hard cap on cardinality; the numerics are sized for small dense problems.
pub const MAX_CARDINALITY: usize = 64;

/// A two-party controlled gate: Alice's index n selects U_n on Bob's system.
#[derive(Debug, Clone)]
pub struct ControlledGate {
    label: String,
    unitaries: Vec<ComplexMatrix>,
    reference: Option<ComplexVector>,
}

impl ControlledGate {
    /// Validate and build a gate. Every U_n must be an N×N unitary where N is
    /// the number of operations; a supplied reference state must be unit norm
    /// and must generate an orthonormal basis under the family.
    pub fn new(
        label: impl Into<String>,
        unitaries: Vec<ComplexMatrix>,
        reference: Option<ComplexVector>,
        tol: f64,
    ) -> Result<Self> {
        let n = unitaries.len();
        if n == 0 {
            return Err(Error::Validation("a gate needs at least one operation".into()));
        }
        if n > MAX_CARDINALITY {
            return Err(Error::Validation(format!(
                "cardinality {} exceeds the supported maximum {}",
                n, MAX_CARDINALITY
            )));
        }
        for (i, u) in unitaries.iter().enumerate() {
            if u.rows() != n || u.cols() != n {
                return Err(Error::Dimension(format!(
                    "operation {} is {}x{}, expected {}x{} (Bob's dimension equals the cardinality)",
                    i,
                    u.rows(),
                    u.cols(),
                    n,
                    n
                )));
            }
            if u.entries().iter().any(|e| !e.re.is_finite() || !e.im.is_finite()) {
                return Err(Error::Validation(format!(
                    "operation {} contains a non-finite entry",
                    i
                )));
            }
            if !u.is_unitary(tol)? {
                return Err(Error::NonUnitary(format!(
                    "operation {} (error {:.3e})",
                    i,
                    u.unitarity_error()
                )));
            }
        }
        if let Some(r) = &reference {
            if r.dim() != n {
                return Err(Error::Dimension(format!(
                    "reference state has dimension {}, expected {}",
                    r.dim(),
                    n
                )));
            }
            let report = verify_orthogonal(&unitaries, r, tol)?;
            if !report.holds {
                return Err(Error::Validation(format!(
                    "orthogonality failed: worst overlap error {:.3e} exceeds tol {:.1e}",
                    report.worst_overlap_error, tol
                )));
            }
        }
        Ok(Self {
            label: label.into(),
            unitaries,
            reference,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Cardinality N: the number of controlled operations.
    pub fn cardinality(&self) -> usize {
        self.unitaries.len()
    }

    /// Alice's dimension; fixed to N in this model.
    pub fn alice_dim(&self) -> usize {
        self.cardinality()
    }

    /// Bob's dimension; exactly N by assumption.
    pub fn bob_dim(&self) -> usize {
        self.cardinality()
    }

    pub fn unitaries(&self) -> &[ComplexMatrix] {
        &self.unitaries
    }

    pub fn unitary(&self, n: usize) -> &ComplexMatrix {
        &self.unitaries[n]
    }

    pub fn reference(&self) -> Option<&ComplexVector> {
        self.reference.as_ref()
    }

    /// Pairwise product U_m†·U_n.
    pub fn pair_product(&self, m: usize, n: usize) -> ComplexMatrix {
        self.unitaries[m].adjoint().matmul(&self.unitaries[n])
    }

    pub fn with_reference(&self, reference: ComplexVector, tol: f64) -> Result<Self> {
        Self::new(self.label.clone(), self.unitaries.clone(), Some(reference), tol)
    }
}

/// Normalized product input |ψ⟩_A ⊗ |φ⟩_B.
#[derive(Debug, Clone)]
pub struct ProductInput {
    alice: ComplexVector,
    bob: ComplexVector,
}

impl ProductInput {
    pub fn new(alice: ComplexVector, bob: ComplexVector, tol: f64) -> Result<Self> {
        for (name, v) in [("alice", &alice), ("bob", &bob)] {
            if (v.norm() - 1.0).abs() > tol {
                return Err(Error::Validation(format!(
                    "{} amplitudes are not unit norm (norm {})",
                    name,
                    v.norm()
                )));
            }
        }
        Ok(Self { alice, bob })
    }

    pub fn alice(&self) -> &ComplexVector {
        &self.alice
    }

    pub fn bob(&self) -> &ComplexVector {
        &self.bob
    }
}

/// Outcome of checking U_n|R⟩ ⊥ U_m|R⟩ for all pairs.
#[derive(Debug, Clone)]
pub struct OrthogonalityReport {
    /// True iff the generated states are orthonormal within tolerance.
    pub holds: bool,
    /// The generated basis candidates |n⟩ = U_n|R⟩.
    pub basis: Vec<ComplexVector>,
    /// Worst deviation: max cross overlap or norm defect.
    pub worst_overlap_error: f64,
}

/// Check the orthogonal-gate property: the unitaries map `reference` to
/// mutually orthogonal unit vectors.
pub fn verify_orthogonal(
    unitaries: &[ComplexMatrix],
    reference: &ComplexVector,
    tol: f64,
) -> Result<OrthogonalityReport> {
    let n = reference.dim();
    for (i, u) in unitaries.iter().enumerate() {
        if u.rows() != n || u.cols() != n {
            return Err(Error::Dimension(format!(
                "operation {} is {}x{}, expected {}x{}",
                i,
                u.rows(),
                u.cols(),
                n,
                n
            )));
        }
        if !u.is_unitary(tol)? {
            return Err(Error::NonUnitary(format!(
                "operation {} (error {:.3e})",
                i,
                u.unitarity_error()
            )));
        }
    }
    let basis: Vec<ComplexVector> = unitaries.iter().map(|u| u.matvec(reference)).collect();
    let mut worst: f64 = 0.0;
    for (i, b) in basis.iter().enumerate() {
        worst = worst.max((b.norm() - 1.0).abs());
        for other in basis.iter().skip(i + 1) {
            worst = worst.max(b.inner(other).norm());
        }
    }
    Ok(OrthogonalityReport {
        holds: worst <= tol,
        basis,
        worst_overlap_error: worst,
    })
}

/// Apply the gate to a product input: output block n equals a_n·(U_n·b),
/// Alice-major.
pub fn apply(gate: &ControlledGate, input: &ProductInput) -> Result<ComplexVector> {
    let n = gate.cardinality();
    if input.alice.dim() != n || input.bob.dim() != n {
        return Err(Error::Dimension(format!(
            "input dimensions ({}, {}) do not match the gate cardinality {}",
            input.alice.dim(),
            input.bob.dim(),
            n
        )));
    }
    let mut out = ComplexVector::zeros(n * n);
    for idx in 0..n {
        let amp = input.alice.get(idx);
        if amp == Complex64::ZERO {
            continue;
        }
        let branch = gate.unitary(idx).matvec(&input.bob);
        for m in 0..n {
            out.set(idx * n + m, amp * branch.get(m));
        }
    }
    Ok(out)
}

/// Parameters for [`catalog`] lookups; unused fields are ignored per gate.
#[derive(Debug, Clone, Default)]
pub struct CatalogParams {
    /// Cardinality for shift / shifted-u.
    pub n: Option<usize>,
    /// Phase α of controlled-u.
    pub alpha: f64,
    /// Off-diagonal amplitude b of controlled-u; must be unimodular.
    pub b: Option<Complex64>,
    /// Eigenbasis for cprime (columns); defaults to the computational basis.
    pub basis: Option<ComplexMatrix>,
    /// Fixed unitary T for shifted-u.
    pub t: Option<ComplexMatrix>,
}

/// Names understood by [`catalog`].
pub const CATALOG_NAMES: [&str; 6] = [
    "cnot",
    "controlled-u",
    "controlled-pauli",
    "cprime",
    "shift",
    "shifted-u",
];

/// Look up a built-in gate by name.
pub fn catalog(name: &str, params: &CatalogParams) -> Result<ControlledGate> {
    match name {
        "cnot" => cnot(),
        "controlled-u" => {
            let b = params.b.unwrap_or(Complex64::ONE);
            controlled_u(params.alpha, b)
        }
        "controlled-pauli" => controlled_pauli(),
        "cprime" => cprime(params.basis.as_ref()),
        "shift" => shift(params.n.ok_or_else(|| {
            Error::Validation("shift requires a cardinality parameter".into())
        })?),
        "shifted-u" => {
            let n = params.n.ok_or_else(|| {
                Error::Validation("shifted-u requires a cardinality parameter".into())
            })?;
            let t = params.t.clone().ok_or_else(|| {
                Error::Validation("shifted-u requires the fixed unitary T".into())
            })?;
            shifted_u(n, &t)
        }
        other => Err(Error::Validation(format!(
            "unknown catalog gate '{}'; known names: {}",
            other,
            CATALOG_NAMES.join(", ")
        ))),
    }
}

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]])
}

pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![Complex64::ZERO, Complex64::new(0.0, -1.0)],
        vec![Complex64::new(0.0, 1.0), Complex64::ZERO],
    ])
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, -1.0]])
}

/// The controlled-NOT gate {1, σ_x} with reference |0⟩.
pub fn cnot() -> Result<ControlledGate> {
    ControlledGate::new(
        "cnot",
        vec![ComplexMatrix::identity(2), pauli_x()],
        Some(ComplexVector::basis_state(2, 0)),
        crate::DEFAULT_TOL,
    )
}

/// Cardinality-2 controlled-U gate: U_1 = 1 and U_2 = e^{iα}·[[0, b], [b̄, 0]]
/// with |b| = 1, the family anticommuting with σ_z; (α=0, b=1) is the CNOT.
pub fn controlled_u(alpha: f64, b: Complex64) -> Result<ControlledGate> {
    if (b.norm_sqr() - 1.0).abs() > 1e-12 {
        return Err(Error::Validation(format!(
            "controlled-u requires |b|^2 = 1, got {}",
            b.norm_sqr()
        )));
    }
    let phase = Complex64::from_polar(1.0, alpha);
    let u2 = ComplexMatrix::from_rows(&[
        vec![Complex64::ZERO, phase * b],
        vec![phase * b.conj(), Complex64::ZERO],
    ]);
    ControlledGate::new(
        "controlled-u",
        vec![ComplexMatrix::identity(2), u2],
        Some(ComplexVector::basis_state(2, 0)),
        crate::DEFAULT_TOL,
    )
}

/// The controlled-Pauli gate: {1⊗1, σ_x⊗1, σ_y⊗1, σ_z⊗1} on Bob's two qubits
/// (modeled as one 4-dimensional system), reference = the Bell state |φ⁺⟩.
pub fn controlled_pauli() -> Result<ControlledGate> {
    let i2 = ComplexMatrix::identity(2);
    let unitaries = vec![
        ComplexMatrix::identity(4),
        pauli_x().tensor(&i2),
        pauli_y().tensor(&i2),
        pauli_z().tensor(&i2),
    ];
    let s = 1.0 / 2.0f64.sqrt();
    let bell = ComplexVector::from_real(&[s, 0.0, 0.0, s]);
    ControlledGate::new("controlled-pauli", unitaries, Some(bell), crate::DEFAULT_TOL)
}

/// Symmetric cardinality-4 gate built from ±1 sign patterns over an arbitrary
/// orthonormal basis (columns of `basis`); defaults to the computational one.
pub fn cprime(basis: Option<&ComplexMatrix>) -> Result<ControlledGate> {
    let v = match basis {
        Some(b) => {
            if b.rows() != 4 || b.cols() != 4 {
                return Err(Error::Dimension("cprime basis must be 4x4".into()));
            }
            if !b.is_unitary(crate::DEFAULT_TOL)? {
                return Err(Error::NonUnitary("cprime basis columns".into()));
            }
            b.clone()
        }
        None => ComplexMatrix::identity(4),
    };
    let signs = [
        [1.0, 1.0, 1.0, 1.0],
        [1.0, -1.0, 1.0, -1.0],
        [1.0, 1.0, -1.0, -1.0],
        [1.0, -1.0, -1.0, 1.0],
    ];
    let unitaries: Vec<ComplexMatrix> = signs
        .iter()
        .map(|row| {
            let diag: Vec<Complex64> = row.iter().map(|&s| Complex64::new(s, 0.0)).collect();
            ComplexMatrix::from_eigen(&v, &diag)
        })
        .collect();
    // Reference ½·Σ_n |λ_n⟩.
    let mut reference = ComplexVector::zeros(4);
    for j in 0..4 {
        reference = reference.add(&v.column(j).scale(Complex64::new(0.5, 0.0)));
    }
    ControlledGate::new("cprime", unitaries, Some(reference), crate::DEFAULT_TOL)
}

/// Cyclic shift operator: basis state |m⟩ moves to |(m+k) mod n⟩.
pub fn shift_operator(n: usize, k: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    for col in 0..n {
        m.set((col + k) % n, col, Complex64::ONE);
    }
    m
}

/// The controlled-shift gate of cardinality `n`; reference is the first
/// basis state (any member of the shifted basis works).
pub fn shift(n: usize) -> Result<ControlledGate> {
    if n == 0 {
        return Err(Error::Validation("shift requires cardinality >= 1".into()));
    }
    let unitaries: Vec<ComplexMatrix> = (0..n).map(|k| shift_operator(n, k)).collect();
    ControlledGate::new(
        format!("shift-{n}"),
        unitaries,
        Some(ComplexVector::basis_state(n, 0)),
        crate::DEFAULT_TOL,
    )
}

/// Controlled gate applying T·C″_k for a fixed unitary T over the shift family.
pub fn shifted_u(n: usize, t: &ComplexMatrix) -> Result<ControlledGate> {
    if n == 0 {
        return Err(Error::Validation("shifted-u requires cardinality >= 1".into()));
    }
    if t.rows() != n || t.cols() != n {
        return Err(Error::Dimension(format!(
            "T is {}x{}, expected {}x{}",
            t.rows(),
            t.cols(),
            n,
            n
        )));
    }
    if !t.is_unitary(crate::DEFAULT_TOL)? {
        return Err(Error::NonUnitary("shifted-u fixed unitary T".into()));
    }
    let unitaries: Vec<ComplexMatrix> = (0..n)
        .map(|k| t.matmul(&shift_operator(n, k)))
        .collect();
    ControlledGate::new(
        format!("shifted-u-{n}"),
        unitaries,
        Some(ComplexVector::basis_state(n, 0)),
        crate::DEFAULT_TOL,
    )
}
