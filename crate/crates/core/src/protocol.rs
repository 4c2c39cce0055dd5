//! Forward (control → target) and reverse (target → control) single-use
//! classical-communication protocols on explicit state vectors.
//!
//! Forward: Alice inputs |n⟩, Bob inputs the reference state, and Bob decodes
//! n from the orthogonal basis the gate generates. Reverse: Bob inputs a
//! shared eigenstate |λ_r⟩, Alice inputs a uniform-amplitude superposition
//! with free phases η_n, the joint output factorizes, and Alice decodes r
//! from her orthogonal output family.

use num_complex::Complex64;

use crate::eigen::schmidt_decompose;
use crate::error::{Error, Result};
use crate::gate::{apply, verify_orthogonal, ControlledGate, ProductInput};
use crate::matrix::{gram, ComplexMatrix, ComplexVector};
use crate::symmetry::SymmetryReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Reverse,
}

/// Record of one protocol run. `decoded` is `None` when the best overlap is
/// ambiguous (the zero-error protocols never produce that on valid inputs).
#[derive(Debug, Clone)]
pub struct ProtocolTranscript {
    pub direction: Direction,
    pub gate_label: String,
    /// The encoded message: n for forward runs, r for reverse runs, or the
    /// Bob-state index for general reverse attempts.
    pub message: usize,
    /// Alice's phase choices for reverse runs.
    pub eta: Option<Vec<f64>>,
    pub input: ProductInput,
    pub joint_output: ComplexVector,
    /// Alice's reduced output |Ψ_r⟩; present when the output factorizes.
    pub alice_output: Option<ComplexVector>,
    /// Bob's reduced output |Φ_r⟩; present when the output factorizes.
    pub bob_output: Option<ComplexVector>,
    pub factorized: bool,
    pub decoded: Option<usize>,
}

/// Index of the candidate with the largest squared overlap, or `None` when
/// even the best candidate falls short of certainty (overlap² < 1 − 10·tol).
pub fn decode_by_overlap(
    candidates: &[ComplexVector],
    state: &ComplexVector,
    tol: f64,
) -> Option<usize> {
    let mut best = 0usize;
    let mut best_sq = -1.0f64;
    for (idx, cand) in candidates.iter().enumerate() {
        let sq = cand.inner(state).norm_sqr();
        if sq > best_sq {
            best_sq = sq;
            best = idx;
        }
    }
    if best_sq >= 1.0 - 10.0 * tol {
        Some(best)
    } else {
        None
    }
}

/// Run the forward protocol: Alice encodes `n`, Bob decodes it from the
/// generated orthogonal basis.
pub fn run_forward(gate: &ControlledGate, n: usize, tol: f64) -> Result<ProtocolTranscript> {
    let dim = gate.cardinality();
    if n >= dim {
        return Err(Error::Validation(format!(
            "message index {} out of range for cardinality {}",
            n, dim
        )));
    }
    let reference = gate.reference().ok_or_else(|| {
        Error::Validation("the forward protocol requires a gate with a reference state".into())
    })?;
    let basis = verify_orthogonal(gate.unitaries(), reference, tol)?;
    if !basis.holds {
        return Err(Error::Validation(
            "the reference state does not generate an orthogonal basis".into(),
        ));
    }
    let input = ProductInput::new(
        ComplexVector::basis_state(dim, n),
        reference.clone(),
        tol,
    )?;
    let joint = apply(gate, &input)?;
    // With a = e_n the joint output is |n⟩ ⊗ U_n|R⟩ exactly.
    let bob_output = gate.unitary(n).matvec(reference);
    let decoded = decode_by_overlap(&basis.basis, &bob_output, tol);
    Ok(ProtocolTranscript {
        direction: Direction::Forward,
        gate_label: gate.label().to_string(),
        message: n,
        eta: None,
        input,
        joint_output: joint,
        alice_output: Some(ComplexVector::basis_state(dim, n)),
        bob_output: Some(bob_output),
        factorized: true,
        decoded,
    })
}

/// Ideal reverse-protocol Alice outputs Ψ_r = (1/√N)·Σ_n e^{i[φ_n(r)+η_n]}|n⟩.
fn ideal_alice_outputs(phase_table: &[Vec<f64>], eta: &[f64]) -> Vec<ComplexVector> {
    let n = phase_table.len();
    let scale = 1.0 / (n as f64).sqrt();
    (0..n)
        .map(|r| {
            ComplexVector::new(
                (0..n)
                    .map(|m| Complex64::from_polar(scale, phase_table[m][r] + eta[m]))
                    .collect(),
            )
        })
        .collect()
}

/// Run the reverse protocol for message `r` with Alice phases `eta`.
pub fn run_reverse(
    gate: &ControlledGate,
    report: &SymmetryReport,
    r: usize,
    eta: &[f64],
) -> Result<ProtocolTranscript> {
    let analysis = report.analysis()?;
    let n = gate.cardinality();
    if r >= n {
        return Err(Error::Validation(format!(
            "message index {} out of range for cardinality {}",
            r, n
        )));
    }
    if eta.len() != n {
        return Err(Error::Dimension(format!(
            "eta has length {}, expected {}",
            eta.len(),
            n
        )));
    }
    let tol = analysis.tol;
    let scale = 1.0 / (n as f64).sqrt();
    let alice_in = ComplexVector::new(
        eta.iter()
            .map(|&e| Complex64::from_polar(scale, e))
            .collect(),
    );
    let input = ProductInput::new(alice_in, analysis.eigenbasis.column(r), tol)?;
    let joint = apply(gate, &input)?;

    let schmidt = schmidt_decompose(&joint, n, n)?;
    let factorized = schmidt.is_product(tol);
    let (alice_output, bob_output) = if factorized {
        (Some(schmidt.alice[0].clone()), Some(schmidt.bob[0].clone()))
    } else {
        (None, None)
    };
    let decoded = alice_output
        .as_ref()
        .and_then(|a| decode_by_overlap(&ideal_alice_outputs(&analysis.phase_table, eta), a, tol));
    Ok(ProtocolTranscript {
        direction: Direction::Reverse,
        gate_label: gate.label().to_string(),
        message: r,
        eta: Some(eta.to_vec()),
        input,
        joint_output: joint,
        alice_output,
        bob_output,
        factorized,
        decoded,
    })
}

/// Gram matrix of the Alice outputs of a transcript family, plus the verdict
/// ‖G − 1‖_max ≤ tol. All transcripts must come from the same gate and the
/// same η choice, and must have factorized.
pub fn check_distinguishability(
    transcripts: &[ProtocolTranscript],
    tol: f64,
) -> Result<(ComplexMatrix, bool)> {
    if transcripts.is_empty() {
        return Err(Error::Validation("no transcripts to compare".into()));
    }
    let label = &transcripts[0].gate_label;
    let eta = &transcripts[0].eta;
    let mut alice_outputs = Vec::with_capacity(transcripts.len());
    for t in transcripts {
        if &t.gate_label != label || &t.eta != eta {
            return Err(Error::Validation(
                "transcripts mix different gates or eta choices".into(),
            ));
        }
        match &t.alice_output {
            Some(a) => alice_outputs.push(a.clone()),
            None => {
                return Err(Error::Validation(format!(
                    "transcript for message {} did not factorize; no Alice output",
                    t.message
                )))
            }
        }
    }
    let g = gram(&alice_outputs)?;
    let n = alice_outputs.len();
    let ok = g.max_abs_diff(&ComplexMatrix::identity(n)) <= tol;
    Ok((g, ok))
}

/// General reverse attempt: arbitrary Alice amplitudes against a family of
/// orthonormal Bob input states. Each transcript records whether the joint
/// output factorized (Schmidt rank 1 within tol); no decoding is attempted.
pub fn attempt_reverse_general(
    gate: &ControlledGate,
    alice_amplitudes: &ComplexVector,
    bob_states: &[ComplexVector],
    tol: f64,
) -> Result<Vec<ProtocolTranscript>> {
    let n = gate.cardinality();
    let mut transcripts = Vec::with_capacity(bob_states.len());
    for (idx, bob) in bob_states.iter().enumerate() {
        let input = ProductInput::new(alice_amplitudes.clone(), bob.clone(), tol)?;
        let joint = apply(gate, &input)?;
        let schmidt = schmidt_decompose(&joint, n, n)?;
        let factorized = schmidt.is_product(tol);
        let (alice_output, bob_output) = if factorized {
            (Some(schmidt.alice[0].clone()), Some(schmidt.bob[0].clone()))
        } else {
            (None, None)
        };
        transcripts.push(ProtocolTranscript {
            direction: Direction::Reverse,
            gate_label: gate.label().to_string(),
            message: idx,
            eta: None,
            input,
            joint_output: joint,
            alice_output,
            bob_output,
            factorized,
            decoded: None,
        });
    }
    Ok(transcripts)
}
