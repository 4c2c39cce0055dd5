//! Phase-1 simplex for tiny dense linear feasibility problems:
//! find x ≥ 0 with A·x = b.
//!
//! One artificial variable per row, minimize their sum with Bland's rule
//! (lowest-index entering and leaving), which cannot cycle. The systems here
//! have at most a few dozen rows and columns, so a dense tableau is plenty.

const PIVOT_EPS: f64 = 1e-10;

/// Solve the feasibility problem. Returns a nonnegative `x` with
/// ‖A·x − b‖_∞ ≤ feas_tol, or `None` when the phase-1 optimum stays positive.
pub fn feasible_point(a: &[Vec<f64>], b: &[f64], feas_tol: f64) -> Option<Vec<f64>> {
    let m = a.len();
    assert_eq!(b.len(), m, "row count mismatch");
    if m == 0 {
        return Some(Vec::new());
    }
    let n = a[0].len();
    assert!(a.iter().all(|row| row.len() == n), "ragged constraint rows");

    // Tableau rows: [A | I | b], with rows flipped so b ≥ 0.
    let width = n + m + 1;
    let mut tab: Vec<Vec<f64>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let flip = if b[i] < 0.0 { -1.0 } else { 1.0 };
        let mut row = vec![0.0; width];
        for j in 0..n {
            row[j] = flip * a[i][j];
        }
        row[n + i] = 1.0;
        row[width - 1] = flip * b[i];
        tab.push(row);
    }
    // Reduced-cost row for minimizing the artificial sum: r_j = −Σ_i ā_ij for
    // the structural columns, 0 for the artificials; the corner holds −z so
    // it transforms like every other row under pivoting.
    let mut cost = vec![0.0; width];
    for j in 0..n {
        cost[j] = -(0..m).map(|i| tab[i][j]).sum::<f64>();
    }
    cost[width - 1] = -(0..m).map(|i| tab[i][width - 1]).sum::<f64>();

    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        // Bland: lowest-index column with a negative reduced cost.
        let entering = (0..n + m).find(|&j| cost[j] < -PIVOT_EPS);
        let Some(col) = entering else { break };

        // Ratio test; ties resolved by the lowest basis variable index.
        let mut leave: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            if tab[i][col] > PIVOT_EPS {
                let ratio = tab[i][width - 1] / tab[i][col];
                let better = match leave {
                    None => true,
                    Some(prev) => {
                        ratio < best_ratio - PIVOT_EPS
                            || (ratio < best_ratio + PIVOT_EPS && basis[i] < basis[prev])
                    }
                };
                if better {
                    best_ratio = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(row) = leave else {
            // Unbounded phase-1 objective cannot happen (bounded below by 0);
            // a missing ratio means the column is numerically free.
            return None;
        };

        let pivot = tab[row][col];
        for v in tab[row].iter_mut() {
            *v /= pivot;
        }
        let pivot_row = tab[row].clone();
        for (i, r) in tab.iter_mut().enumerate() {
            if i != row {
                let factor = r[col];
                if factor != 0.0 {
                    for (v, p) in r.iter_mut().zip(&pivot_row) {
                        *v -= factor * p;
                    }
                }
            }
        }
        let factor = cost[col];
        if factor != 0.0 {
            for (v, p) in cost.iter_mut().zip(&pivot_row) {
                *v -= factor * p;
            }
        }
        basis[row] = col;
    }

    if cost[width - 1].abs() > feas_tol {
        return None;
    }
    let mut x = vec![0.0; n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = tab[i][width - 1].max(0.0);
        }
    }
    // Residual check guards against pivots that went numerically sour.
    for i in 0..m {
        let lhs: f64 = (0..n).map(|j| a[i][j] * x[j]).sum();
        if (lhs - b[i]).abs() > feas_tol {
            return None;
        }
    }
    Some(x)
}
