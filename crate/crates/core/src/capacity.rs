//! Reverse classical capacity of orthogonal gates: the maximum number N_B of
//! zero-error messages the target party can send per gate use.
//!
//! Necessary condition: if Alice's amplitudes are supported on 𝓡, every
//! pairwise product U_m†U_n over 𝓡 must admit at least N_B common
//! eigenstates, with Bob's inputs drawn from them. Achievability on top of
//! that is a linear feasibility problem in the weights p_n = |a_n|²: the
//! Alice-output Gram off-diagonals Σ_n p_n·e^{i[ξ_n(r)−ξ_n(r′)]} must vanish.
//! The search scans message counts from N downward, subsets largest-first,
//! and certifies the first feasible strategy by simulating the protocol.

use num_complex::Complex64;

use crate::eigen::{eig_unitary, intersect_subspaces, principal_phase};
use crate::error::{Error, Result};
use crate::gate::{verify_orthogonal, ControlledGate};
use crate::matrix::ComplexVector;
use crate::protocol::{
    attempt_reverse_general, check_distinguishability, decode_by_overlap, ProtocolTranscript,
};
use crate::simplex::feasible_point;

/// Residual tolerance of the weight feasibility problem.
pub const FEASIBILITY_TOL: f64 = 1e-8;

/// Tolerance at which a found strategy is re-certified by simulation; the
/// LP residual bound makes anything tighter unattainable in general.
pub const CERTIFICATION_TOL: f64 = 1e-7;

/// Scope statement attached to every capacity result.
pub const SCOPE_NOTE: &str = "certified achievable maximum over product Alice inputs and \
     common-eigenvector Bob inputs; the necessary condition makes this the \
     exact zero-error maximum for the gates studied here";

/// Outcome of the reverse-capacity search.
#[derive(Debug, Clone)]
pub struct CapacityResult {
    /// Number of zero-error reverse messages certified.
    pub n_b: usize,
    /// Support set 𝓡 of Alice's amplitudes (sorted operation indices).
    pub subset_r: Vec<usize>,
    /// Bob's input strategy Λ: the N_B shared eigenstates used.
    pub shared_states: Vec<ComplexVector>,
    /// Weights p_n = |a_n|² over the full index range; zero outside 𝓡.
    pub weights: Vec<f64>,
    /// Relative eigenphases ξ_n(r) − ξ_min(r); rows follow `subset_r`,
    /// columns follow `shared_states`.
    pub xi_table: Vec<Vec<f64>>,
    /// Simulated transcripts proving zero-error decoding.
    pub certificate: Vec<ProtocolTranscript>,
    /// Scope of the claim (see module docs).
    pub scope: &'static str,
}

/// Maximal orthonormal set of common eigenvectors of all pairwise products
/// over `subset`, with the relative phase table ξ_n(r) − ξ_min(r).
///
/// Eigenspaces are intersected product by product; the set may be empty.
pub fn shared_eigenstates(
    gate: &ControlledGate,
    subset: &[usize],
    tol: f64,
) -> Result<(Vec<ComplexVector>, Vec<Vec<f64>>)> {
    if subset.is_empty() {
        return Err(Error::Validation("subset must be nonempty".into()));
    }
    let n = gate.cardinality();
    if subset.iter().any(|&i| i >= n) {
        return Err(Error::Validation(format!(
            "subset index out of range for cardinality {n}"
        )));
    }
    let cos_cutoff = 1.0 - 1e-8;
    let cluster_eps = (100.0 * tol).max(1e-7);

    // Joint eigenspace candidates, refined one pairwise product at a time.
    let mut spaces: Vec<Vec<ComplexVector>> =
        vec![(0..n).map(|i| ComplexVector::basis_state(n, i)).collect()];
    for (ai, &m) in subset.iter().enumerate() {
        for &q in subset.iter().skip(ai + 1) {
            let product = gate.pair_product(m, q);
            let sys = eig_unitary(&product, tol)?;
            // Group eigenvectors into eigenspaces by eigenvalue proximity.
            let mut groups: Vec<(Complex64, Vec<ComplexVector>)> = Vec::new();
            for r in 0..n {
                let value = sys.values[r];
                let column = sys.vectors.column(r);
                match groups.iter_mut().find(|(v, _)| (*v - value).norm() <= cluster_eps) {
                    Some((_, members)) => members.push(column),
                    None => groups.push((value, vec![column])),
                }
            }
            let mut refined = Vec::new();
            for space in &spaces {
                for (_, eigenspace) in &groups {
                    let common = intersect_subspaces(space, eigenspace, cos_cutoff)?;
                    if !common.is_empty() {
                        refined.push(common);
                    }
                }
            }
            spaces = refined;
            if spaces.is_empty() {
                return Ok((Vec::new(), vec![Vec::new(); subset.len()]));
            }
        }
    }

    let states: Vec<ComplexVector> = spaces
        .into_iter()
        .flatten()
        .map(|v| v.canonicalized())
        .collect();
    let base = subset[0];
    let mut xi_table = Vec::with_capacity(subset.len());
    for &member in subset {
        let row: Vec<f64> = if member == base {
            vec![0.0; states.len()]
        } else {
            let product = gate.pair_product(base, member);
            states
                .iter()
                .map(|s| principal_phase(s.inner(&product.matvec(s))))
                .collect()
        };
        xi_table.push(row);
    }
    Ok((states, xi_table))
}

/// A feasible strategy found by [`achievable`].
#[derive(Debug, Clone)]
pub struct Strategy {
    /// Indices into the shared-state list, ascending.
    pub state_indices: Vec<usize>,
    /// Weights aligned with the subset members.
    pub weights: Vec<f64>,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // Advance to the next combination in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in (i + 1)..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Search for weights p ≥ 0 supported on `subset` with Σp = 1 making `k` of
/// the shared states give orthogonal Alice outputs. k-subsets of the states
/// are tried in lexicographic order; the first feasible one wins.
pub fn achievable(
    shared_states: &[ComplexVector],
    xi_table: &[Vec<f64>],
    subset_len: usize,
    k: usize,
    _tol: f64,
) -> Option<Strategy> {
    if k == 0 || k > shared_states.len() {
        return None;
    }
    for combo in combinations(shared_states.len(), k) {
        // Rows: Σ p = 1, then Re/Im of Σ_j p_j·e^{i[ξ_j(a)−ξ_j(b)]} = 0.
        let mut rows: Vec<Vec<f64>> = vec![vec![1.0; subset_len]];
        let mut rhs = vec![1.0];
        for (pos, &a) in combo.iter().enumerate() {
            for &b in combo.iter().skip(pos + 1) {
                let mut re_row = Vec::with_capacity(subset_len);
                let mut im_row = Vec::with_capacity(subset_len);
                for xi_row in xi_table.iter() {
                    let delta = xi_row[a] - xi_row[b];
                    re_row.push(delta.cos());
                    im_row.push(delta.sin());
                }
                rows.push(re_row);
                rhs.push(0.0);
                rows.push(im_row);
                rhs.push(0.0);
            }
        }
        if let Some(p) = feasible_point(&rows, &rhs, FEASIBILITY_TOL) {
            return Some(Strategy {
                state_indices: combo,
                weights: p,
            });
        }
    }
    None
}

/// Compute the maximum certified number of zero-error reverse messages.
///
/// Scans k from N down to 1 and, per k, support sets 𝓡 by decreasing size
/// then lexicographic order. The first feasible strategy is certified by
/// simulating the protocol with a_n = √p_n and checking the Alice Gram.
pub fn max_reverse_messages(gate: &ControlledGate, tol: f64) -> Result<CapacityResult> {
    let n = gate.cardinality();
    let reference = gate.reference().ok_or_else(|| {
        Error::Validation("capacity analysis requires a gate with a reference state".into())
    })?;
    let ortho = verify_orthogonal(gate.unitaries(), reference, tol)?;
    if !ortho.holds {
        return Err(Error::Validation(
            "capacity analysis requires the orthogonal-gate property".into(),
        ));
    }

    for k in (1..=n).rev() {
        for size in (k..=n).rev() {
            for subset in combinations(n, size) {
                let (states, xi_table) = shared_eigenstates(gate, &subset, tol)?;
                if states.len() < k {
                    continue;
                }
                if let Some(strategy) = achievable(&states, &xi_table, subset.len(), k, tol) {
                    return certify(gate, &subset, &states, &xi_table, &strategy, k);
                }
            }
        }
    }
    Err(Error::Inconsistency(
        "the k = 1 strategy must always exist".into(),
    ))
}

fn certify(
    gate: &ControlledGate,
    subset: &[usize],
    states: &[ComplexVector],
    xi_table: &[Vec<f64>],
    strategy: &Strategy,
    k: usize,
) -> Result<CapacityResult> {
    let n = gate.cardinality();
    let mut weights = vec![0.0; n];
    for (j, &member) in subset.iter().enumerate() {
        weights[member] = strategy.weights[j];
    }
    let alice = ComplexVector::new(
        weights
            .iter()
            .map(|&p| Complex64::new(p.max(0.0).sqrt(), 0.0))
            .collect(),
    )
    .normalized();
    let chosen: Vec<ComplexVector> = strategy
        .state_indices
        .iter()
        .map(|&i| states[i].clone())
        .collect();

    let mut certificate = attempt_reverse_general(gate, &alice, &chosen, CERTIFICATION_TOL)?;
    if certificate.iter().any(|t| !t.factorized) {
        return Err(Error::Inconsistency(
            "search claimed achievable but a joint output failed to factorize".into(),
        ));
    }
    let (_, distinguishable) = check_distinguishability(&certificate, CERTIFICATION_TOL)?;
    if !distinguishable {
        return Err(Error::Inconsistency(
            "search claimed achievable but the Alice outputs are not orthogonal".into(),
        ));
    }
    let alice_outputs: Vec<ComplexVector> = certificate
        .iter()
        .map(|t| t.alice_output.clone().expect("factorized"))
        .collect();
    for (idx, t) in certificate.iter_mut().enumerate() {
        t.decoded = decode_by_overlap(
            &alice_outputs,
            t.alice_output.as_ref().expect("factorized"),
            CERTIFICATION_TOL,
        );
        debug_assert_eq!(t.decoded, Some(idx));
    }

    let chosen_xi: Vec<Vec<f64>> = xi_table
        .iter()
        .map(|row| strategy.state_indices.iter().map(|&i| row[i]).collect())
        .collect();
    Ok(CapacityResult {
        n_b: k,
        subset_r: subset.to_vec(),
        shared_states: chosen,
        weights,
        xi_table: chosen_xi,
        certificate,
        scope: SCOPE_NOTE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate;
    use crate::DEFAULT_TOL;
    use std::f64::consts::PI;

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn pauli_pair_subset_shares_four_states() {
        // Only one nontrivial product (σ_x⊗1), so its full eigenbasis is
        // shared: four states with ξ phases {0, 0, π, π}.
        let g = gate::controlled_pauli().unwrap();
        let (states, xi) = shared_eigenstates(&g, &[0, 1], DEFAULT_TOL).unwrap();
        assert_eq!(states.len(), 4);
        let mut phases: Vec<f64> = xi[1].clone();
        phases.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(phases[0].abs() < 1e-9 && phases[1].abs() < 1e-9);
        assert!((phases[2] - PI).abs() < 1e-9 && (phases[3] - PI).abs() < 1e-9);
        for s in &states {
            let p = g.pair_product(0, 1);
            let mu = s.inner(&p.matvec(s));
            assert!(p.matvec(s).sub(&s.scale(mu)).max_abs() < 1e-9);
        }
    }

    #[test]
    fn pauli_triple_subset_shares_nothing() {
        let g = gate::controlled_pauli().unwrap();
        let (states, _) = shared_eigenstates(&g, &[0, 1, 2], DEFAULT_TOL).unwrap();
        assert!(states.len() < 3);
        assert_eq!(states.len(), 0);
    }

    #[test]
    fn symmetric_gate_shares_full_basis() {
        for g in [gate::cprime(None).unwrap(), gate::shift(5).unwrap()] {
            let n = g.cardinality();
            let subset: Vec<usize> = (0..n).collect();
            let (states, _) = shared_eigenstates(&g, &subset, DEFAULT_TOL).unwrap();
            assert_eq!(states.len(), n, "{}", g.label());
        }
    }

    #[test]
    fn achievable_uniform_for_symmetric_gate() {
        let g = gate::shift(3).unwrap();
        let subset = [0, 1, 2];
        let (states, xi) = shared_eigenstates(&g, &subset, DEFAULT_TOL).unwrap();
        let strategy = achievable(&states, &xi, 3, 3, DEFAULT_TOL).unwrap();
        for w in &strategy.weights {
            assert!((w - 1.0 / 3.0).abs() < 1e-8);
        }
    }

    #[test]
    fn achievable_pair_strategy_on_pauli() {
        let g = gate::controlled_pauli().unwrap();
        let (states, xi) = shared_eigenstates(&g, &[0, 1], DEFAULT_TOL).unwrap();
        let strategy = achievable(&states, &xi, 2, 2, DEFAULT_TOL).unwrap();
        assert!((strategy.weights[0] - 0.5).abs() < 1e-8);
        assert!((strategy.weights[1] - 0.5).abs() < 1e-8);
    }

    #[test]
    fn three_messages_infeasible_on_pauli_pair() {
        let g = gate::controlled_pauli().unwrap();
        let (states, xi) = shared_eigenstates(&g, &[0, 1], DEFAULT_TOL).unwrap();
        assert!(achievable(&states, &xi, 2, 3, DEFAULT_TOL).is_none());
    }

    #[test]
    fn capacity_of_controlled_pauli_is_two() {
        let g = gate::controlled_pauli().unwrap();
        let result = max_reverse_messages(&g, DEFAULT_TOL).unwrap();
        assert_eq!(result.n_b, 2);
        assert_eq!(result.subset_r, vec![0, 1]);
        assert!((result.weights[0] - 0.5).abs() < 1e-8);
        assert!((result.weights[1] - 0.5).abs() < 1e-8);
        assert_eq!(result.certificate.len(), 2);
        for (i, t) in result.certificate.iter().enumerate() {
            assert_eq!(t.decoded, Some(i));
        }
    }

    #[test]
    fn capacity_of_cnot_is_two() {
        let g = gate::cnot().unwrap();
        let result = max_reverse_messages(&g, DEFAULT_TOL).unwrap();
        assert_eq!(result.n_b, 2);
    }

    #[test]
    fn capacity_of_shift_is_n() {
        for n in [2usize, 3, 5] {
            let g = gate::shift(n).unwrap();
            let result = max_reverse_messages(&g, DEFAULT_TOL).unwrap();
            assert_eq!(result.n_b, n, "shift({n})");
            for w in result.weights.iter() {
                assert!((w - 1.0 / n as f64).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn certificate_satisfies_distinguishability() {
        let g = gate::controlled_pauli().unwrap();
        let result = max_reverse_messages(&g, DEFAULT_TOL).unwrap();
        let (_, ok) = check_distinguishability(&result.certificate, CERTIFICATION_TOL).unwrap();
        assert!(ok);
    }

    #[test]
    fn dropping_messages_preserves_the_certificate() {
        let g = gate::shift(4).unwrap();
        let result = max_reverse_messages(&g, DEFAULT_TOL).unwrap();
        let reduced: Vec<_> = result.certificate[..2].to_vec();
        let (_, ok) = check_distinguishability(&reduced, CERTIFICATION_TOL).unwrap();
        assert!(ok);
    }

    #[test]
    fn capacity_requires_a_reference() {
        let g = gate::ControlledGate::new(
            "bare",
            vec![crate::ComplexMatrix::identity(2), gate::pauli_x()],
            None,
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(matches!(
            max_reverse_messages(&g, DEFAULT_TOL),
            Err(Error::Validation(_))
        ));
    }
}
