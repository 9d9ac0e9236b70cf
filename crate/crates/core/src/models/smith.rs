//! Smith normal form of small integer matrices.

/// `row_ops · B · col_ops = diag(d_1, …, d_s, 0, …)` with d_i | d_{i+1}, d_i > 0.
///
/// Only the column transform and its inverse are retained.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub invariants: Vec<i128>,
    pub col_ops: Vec<Vec<i128>>,
    pub col_ops_inv: Vec<Vec<i128>>,
}

pub fn smith_normal_form(b: &[Vec<i128>]) -> SmithForm {
    let rows = b.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = b.to_vec();
    let mut q = identity(cols);
    let mut qinv = identity(cols);

    // column helpers keep q and qinv in step with a
    let swap_cols = |a: &mut Vec<Vec<i128>>, q: &mut Vec<Vec<i128>>, qinv: &mut Vec<Vec<i128>>, i: usize, j: usize| {
        for r in a.iter_mut() {
            r.swap(i, j);
        }
        for r in q.iter_mut() {
            r.swap(i, j);
        }
        qinv.swap(i, j);
    };
    // col_i += c · col_j
    let add_col = |a: &mut Vec<Vec<i128>>, q: &mut Vec<Vec<i128>>, qinv: &mut Vec<Vec<i128>>, i: usize, j: usize, c: i128| {
        for r in a.iter_mut() {
            r[i] += c * r[j];
        }
        for r in q.iter_mut() {
            r[i] += c * r[j];
        }
        let (ri, rj) = (qinv[i].clone(), &mut qinv[j]);
        for (x, y) in rj.iter_mut().zip(ri) {
            *x -= c * y;
        }
    };

    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, &mut q, &mut qinv, t, pj);

        let mut settled = true;
        for i in t + 1..rows {
            let f = a[i][t] / a[t][t];
            if f != 0 {
                let pivot_row = a[t].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
            settled &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let f = a[t][j] / a[t][t];
            if f != 0 {
                add_col(&mut a, &mut q, &mut qinv, j, t, -f);
            }
            settled &= a[t][j] == 0;
        }
        if !settled {
            continue;
        }
        // divisibility: fold an offending row into the pivot row and retry
        let p = a[t][t];
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0)) {
            let row = a[i].clone();
            for (x, y) in a[t].iter_mut().zip(row) {
                *x += y;
            }
            continue;
        }
        if p < 0 {
            for x in a[t].iter_mut() {
                *x = -*x;
            }
        }
        t += 1;
    }
    let invariants = (0..rows.min(cols)).map(|i| a[i][i]).filter(|&d| d != 0).collect();
    SmithForm { invariants, col_ops: q, col_ops_inv: qinv }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

pub(crate) fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect())
        .collect()
}
