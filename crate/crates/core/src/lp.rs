//! Exact-rational linear-programming feasibility.
//!
//! A dense phase-1 simplex over `BigRational` with Bland's pivoting rule,
//! which rules out cycling, so termination is unconditional. Problem sizes
//! here are tiny (a handful of rows and columns), so a dense tableau is the
//! right tool.
//!
//! This is the membership route for Newton polyhedra that is independent of
//! the facet enumeration in `dd`; the two cross-validate each other in the
//! test suites.

use num::{Signed, Zero};

use crate::lattice::{Rat, rat_int};
use crate::newton::SupportSet;

/// Is there a `z >= 0` with `a z = b`? (`a` given row-major, `m x k`.)
pub fn feasible_eq(a: &[Vec<Rat>], b: &[Rat]) -> bool {
    let m = a.len();
    assert_eq!(b.len(), m);
    let k = if m == 0 { 0 } else { a[0].len() };
    if m == 0 {
        return true;
    }

    // Tableau columns: k structural vars, m artificials, then the rhs.
    // Rows are scaled so every rhs is nonnegative.
    let cols = k + m;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Rat> = Vec::with_capacity(cols + 1);
        let flip = b[i].is_negative();
        for j in 0..k {
            row.push(if flip { -&a[i][j] } else { a[i][j].clone() });
        }
        for j in 0..m {
            row.push(if i == j { rat_int(1) } else { rat_int(0) });
        }
        row.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(row);
    }

    // Objective: minimize the sum of artificials. Stored as the reduced-cost
    // row for the current basis (artificials start basic).
    let mut obj: Vec<Rat> = vec![rat_int(0); cols + 1];
    for row in &t {
        for (j, cell) in row.iter().enumerate() {
            obj[j] += cell;
        }
    }
    // Reduced costs: artificial columns have cost 1.
    for j in k..cols {
        obj[j] -= rat_int(1);
    }

    let mut basis: Vec<usize> = (k..cols).collect();

    loop {
        // Bland: entering column = smallest index with positive reduced cost.
        let Some(enter) = (0..cols).find(|&j| obj[j].is_positive()) else {
            break;
        };
        // Ratio test, ties broken by smallest basis variable (Bland).
        let mut leave: Option<(usize, Rat)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[cols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && basis[i] < basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((li, _)) = leave else {
            // Unbounded phase-1 objective cannot happen (bounded below by 0),
            // but an entering column with no positive entries means the
            // objective cannot improve along it; treat as done.
            break;
        };

        // Pivot at (li, enter).
        let pivot = t[li][enter].clone();
        for cell in t[li].iter_mut() {
            *cell /= &pivot;
        }
        for i in 0..m {
            if i != li && !t[i][enter].is_zero() {
                let factor = t[i][enter].clone();
                for j in 0..=cols {
                    let delta = &factor * &t[li][j];
                    t[i][j] -= delta;
                }
            }
        }
        if !obj[enter].is_zero() {
            let factor = obj[enter].clone();
            for j in 0..=cols {
                let delta = &factor * &t[li][j];
                obj[j] -= delta;
            }
        }
        basis[li] = enter;
    }

    // Feasible iff all artificials can be driven to zero: the phase-1
    // optimum equals sum(b') - obj_value; after optimization the residual
    // artificial mass is the objective cell.
    let residual: Rat = t
        .iter()
        .enumerate()
        .filter(|(i, _)| basis[*i] >= k)
        .map(|(_, row)| row[cols].clone())
        .fold(rat_int(0), |acc, v| acc + v);
    residual.is_zero()
}

/// LP membership of a rational point in `conv(support) + nonnegative orthant`.
///
/// Solves for `lambda >= 0, s >= 0` with `sum lambda = 1` and
/// `sum lambda_i m_i + s = x`.
pub fn contains_lp(f: &SupportSet, x: &[Rat]) -> bool {
    let n = f.dim();
    assert_eq!(x.len(), n);
    let pts = f.points();
    let k = pts.len();

    // Rows: n coordinate equations + 1 convexity equation.
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(n + 1);
    for coord in 0..n {
        let mut row: Vec<Rat> = Vec::with_capacity(k + n);
        for p in pts {
            row.push(Rat::from_integer(p.get(coord).clone()));
        }
        for j in 0..n {
            row.push(if j == coord { rat_int(1) } else { rat_int(0) });
        }
        a.push(row);
    }
    let mut conv_row: Vec<Rat> = vec![rat_int(1); k];
    conv_row.extend(std::iter::repeat(rat_int(0)).take(n));
    a.push(conv_row);

    let mut b: Vec<Rat> = x.to_vec();
    b.push(rat_int(1));

    feasible_eq(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rat;

    fn support(n: usize, pts: &[&[i64]]) -> SupportSet {
        SupportSet::from_rows(n, pts).unwrap()
    }

    #[test]
    fn simple_feasibility() {
        // x + y = 2 with x, y >= 0: feasible.
        let a = vec![vec![rat_int(1), rat_int(1)]];
        assert!(feasible_eq(&a, &[rat_int(2)]));
        // x + y = -1 with x, y >= 0: infeasible.
        assert!(!feasible_eq(&a, &[rat_int(-1)]));
        // x - y = 3, x + y = 1 => x = 2, y = -1: infeasible.
        let a = vec![
            vec![rat_int(1), rat_int(-1)],
            vec![rat_int(1), rat_int(1)],
        ];
        assert!(!feasible_eq(&a, &[rat_int(3), rat_int(1)]));
        // Same but rhs (1, 3) => x = 2, y = 1: feasible.
        assert!(feasible_eq(&a, &[rat_int(1), rat_int(3)]));
    }

    #[test]
    fn membership_matches_geometry() {
        // conv{(2,0),(0,2)} + orthant: the halfplane x + y >= 2 in the quadrant.
        let f = support(2, &[&[2, 0], &[0, 2]]);
        assert!(contains_lp(&f, &[rat_int(1), rat_int(1)]));
        assert!(contains_lp(&f, &[rat(1, 2), rat(3, 2)]));
        assert!(contains_lp(&f, &[rat_int(5), rat_int(0)]));
        assert!(!contains_lp(&f, &[rat(1, 2), rat(5, 4)]));
        assert!(!contains_lp(&f, &[rat_int(-1), rat_int(4)]));
    }
}
