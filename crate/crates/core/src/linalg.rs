//! Exact null spaces by Gauss-Jordan elimination over an exact field
//! (`BigRational`, `Ratio<i64>`, ...). Pivots are chosen by exact
//! nonzero-ness, so this is not meant for floating-point scalars.

use num_traits::Num;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
pub fn rref<F: Num + Clone>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][col].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() / lead.clone();
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            let (pivot_row, other) = if i < r {
                let (lo, hi) = rows.split_at_mut(r);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = rows.split_at_mut(i);
                (&lo[r], &mut hi[0])
            };
            for (x, p) in other.iter_mut().zip(pivot_row) {
                if !p.is_zero() {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Num + Clone>(mut rows: Vec<Vec<F>>, ncols: usize) -> usize {
    rref(&mut rows, ncols).len()
}

/// Basis of `{x : A x = 0}`, one vector per free column in ascending order.
/// Each basis vector has a 1 at its free column and 0 at the other free
/// columns.
pub fn nullspace<F: Num + Clone>(mut rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let pivots = rref(&mut rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![F::zero(); ncols];
            v[free] = F::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = F::zero() - row[free].clone();
            }
            v
        })
        .collect()
}
