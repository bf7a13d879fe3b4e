//! Integer row lattices and their normal forms.
//!
//! Lattices are given by generator rows over `Z^n`. [`hnf`] produces the
//! canonical row Hermite normal form (pivots positive, strictly increasing
//! pivot columns, entries above each pivot reduced into `[0, pivot)`), so two
//! generator sets span the same lattice exactly when their forms are equal.
//! All arithmetic is `i128`; the dimensions used here are small.

/// Dense integer matrix as rows.
pub type Mat = Vec<Vec<i128>>;

fn swap_rows(m: &mut Mat, i: usize, j: usize) {
    m.swap(i, j);
}

fn row_axpy(m: &mut Mat, target: usize, source: usize, factor: i128) {
    if factor == 0 {
        return;
    }
    let src = m[source].clone();
    for (t, s) in m[target].iter_mut().zip(src.iter()) {
        *t -= factor * s;
    }
}

fn negate_row(row: &mut [i128]) {
    for v in row {
        *v = -*v;
    }
}

fn div_floor(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

/// Row Hermite normal form with zero rows dropped.
pub fn hnf(rows: Mat) -> Mat {
    let (h, _) = hnf_with_transform(rows);
    h
}

/// Row Hermite normal form `H` together with a unimodular `U` where
/// `U * A` equals `H` padded with the zero rows that were dropped.
/// Rows of `U` beyond `H.len()` span the left kernel of `A`.
pub fn hnf_with_transform(rows: Mat) -> (Mat, Mat) {
    let m = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    let mut a = rows;
    let mut u: Mat = (0..m)
        .map(|i| (0..m).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut r = 0usize;
    for c in 0..n {
        // Euclidean elimination in column c over rows r..m.
        loop {
            let mut pivot: Option<usize> = None;
            for i in r..m {
                if a[i][c] != 0 {
                    pivot = match pivot {
                        Some(p) if a[p][c].abs() <= a[i][c].abs() => Some(p),
                        _ => Some(i),
                    };
                }
            }
            let Some(p) = pivot else { break };
            swap_rows(&mut a, r, p);
            swap_rows(&mut u, r, p);
            let mut any = false;
            for i in (r + 1)..m {
                let q = div_floor(a[i][c], a[r][c]);
                if a[i][c] != 0 {
                    any = true;
                }
                row_axpy(&mut a, i, r, q);
                row_axpy(&mut u, i, r, q);
            }
            if !any {
                break;
            }
        }
        if r < m && a[r][c] != 0 {
            if a[r][c] < 0 {
                negate_row(&mut a[r]);
                negate_row(&mut u[r]);
            }
            for i in 0..r {
                let q = div_floor(a[i][c], a[r][c]);
                row_axpy(&mut a, i, r, q);
                row_axpy(&mut u, i, r, q);
            }
            r += 1;
        }
    }
    a.truncate(r);
    (a, u)
}

/// Rows spanning the left kernel `{ v : v A = 0 }` of `a`.
pub fn left_kernel(a: Mat) -> Mat {
    let m = a.len();
    let (h, u) = hnf_with_transform(a);
    u[h.len()..m].to_vec()
}

/// Membership of `v` in the lattice spanned by the HNF rows `h`.
pub fn in_lattice(h: &Mat, v: &[i128]) -> bool {
    let mut v = v.to_vec();
    for row in h {
        let c = match row.iter().position(|&x| x != 0) {
            Some(c) => c,
            None => continue,
        };
        if v[c] % row[c] != 0 {
            // Still reduce as far as possible; a nonzero residue below the
            // pivot will be caught at the end.
            let q = div_floor(v[c], row[c]);
            for (t, s) in v.iter_mut().zip(row.iter()) {
                *t -= q * s;
            }
            continue;
        }
        let q = v[c] / row[c];
        for (t, s) in v.iter_mut().zip(row.iter()) {
            *t -= q * s;
        }
    }
    v.iter().all(|&x| x == 0)
}

/// Coefficients expressing `v` in the HNF basis `h`, if `v` is in the lattice.
pub fn coords_in_basis(h: &Mat, v: &[i128]) -> Option<Vec<i128>> {
    let mut v = v.to_vec();
    let mut coeffs = vec![0i128; h.len()];
    for (i, row) in h.iter().enumerate() {
        let c = row.iter().position(|&x| x != 0)?;
        if v[c] % row[c] != 0 {
            return None;
        }
        let q = v[c] / row[c];
        coeffs[i] = q;
        for (t, s) in v.iter_mut().zip(row.iter()) {
            *t -= q * s;
        }
    }
    if v.iter().all(|&x| x == 0) {
        Some(coeffs)
    } else {
        None
    }
}

/// Product of the pivots of an HNF of full column rank; the index of the
/// lattice in `Z^n`. Returns `None` when the rank is deficient.
pub fn full_rank_index(h: &Mat, n: usize) -> Option<i128> {
    if h.len() != n {
        return None;
    }
    let mut idx = 1i128;
    for row in h {
        let c = row.iter().position(|&x| x != 0)?;
        idx *= row[c];
        let _ = c;
    }
    Some(idx)
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of the matrix (Smith form).
pub fn snf_diagonal(a: Mat) -> Vec<i128> {
    let mut a = a;
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut t = 0usize;
    while t < m.min(n) {
        // Find a nonzero entry in the submatrix at (t.., t..).
        let mut found = None;
        'outer: for i in t..m {
            for j in t..n {
                if a[i][j] != 0 {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((pi, pj)) = found else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            // Clear column t by row reductions.
            let mut clean = true;
            for i in (t + 1)..m {
                if a[i][t] != 0 {
                    let q = div_floor(a[i][t], a[t][t]);
                    row_axpy(&mut a, i, t, q);
                    if a[i][t] != 0 {
                        a.swap(t, i);
                        clean = false;
                    }
                }
            }
            // Clear row t by column reductions.
            for j in (t + 1)..n {
                if a[t][j] != 0 {
                    let q = div_floor(a[t][j], a[t][t]);
                    for row in a.iter_mut() {
                        let s = row[t];
                        row[j] -= q * s;
                    }
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        // Ensure the pivot divides the rest of the submatrix.
        let mut redo = false;
        'divis: for i in (t + 1)..m {
            for j in (t + 1)..n {
                if a[i][j] % a[t][t] != 0 {
                    // Add row i to row t and restart the elimination at t.
                    let extra = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(extra.iter()) {
                        *x += y;
                    }
                    redo = true;
                    break 'divis;
                }
            }
        }
        if redo {
            continue;
        }
        if a[t][t] < 0 {
            for row in a.iter_mut() {
                row[t] = -row[t];
            }
        }
        t += 1;
    }
    (0..t).map(|i| a[i][i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_is_canonical_for_equal_lattices() {
        // 2Z x 3Z from two different generator sets.
        let a = hnf(vec![vec![2, 0], vec![0, 3]]);
        let b = hnf(vec![vec![2, 3], vec![2, -3], vec![4, 3]]);
        assert_eq!(a, b);
        assert_eq!(a, vec![vec![2, 0], vec![0, 3]]);
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let h = hnf(vec![vec![1, 7], vec![0, 3]]);
        assert_eq!(h, vec![vec![1, 1], vec![0, 3]]);
    }

    #[test]
    fn kernel_of_projection() {
        // v * A = 0 for A = [[1],[2]] means v1 + 2 v2 = 0.
        let k = left_kernel(vec![vec![1], vec![2]]);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(v[0] + 2 * v[1], 0);
        assert!(v[0] != 0 || v[1] != 0);
        assert_eq!(v[0].abs(), 2);
    }

    #[test]
    fn membership_and_coordinates() {
        let h = hnf(vec![vec![2, 1], vec![0, 2]]);
        assert!(in_lattice(&h, &[2, 1]));
        assert!(in_lattice(&h, &[4, 0])); // 2*(2,1) - (0,2)
        assert!(!in_lattice(&h, &[1, 0]));
        assert!(!in_lattice(&h, &[2, 0]));
        let c = coords_in_basis(&h, &[4, 0]).unwrap();
        let back: Vec<i128> = (0..2)
            .map(|j| c.iter().zip(h.iter()).map(|(ci, row)| ci * row[j]).sum())
            .collect();
        assert_eq!(back, vec![4, 0]);
        assert_eq!(coords_in_basis(&h, &[1, 1]), None);
    }

    #[test]
    fn index_is_pivot_product() {
        let h = hnf(vec![vec![2, 1], vec![0, 2]]);
        assert_eq!(full_rank_index(&h, 2), Some(4));
        let deficient = hnf(vec![vec![1, 2]]);
        assert_eq!(full_rank_index(&deficient, 2), None);
    }

    #[test]
    fn smith_form_divisibility() {
        // Z^2 / <(2,0),(0,3)> = Z/2 x Z/3 = Z/6, invariant factors 1 | 6.
        let d = snf_diagonal(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(d, vec![1, 6]);
        let d = snf_diagonal(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        // Known example: invariant factors 2 | 2 | 156.
        assert_eq!(d, vec![2, 2, 156]);
        let d = snf_diagonal(vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(d, vec![1]);
    }

    #[test]
    fn kernel_rows_annihilate() {
        let a = vec![vec![6, 4], vec![2, 2], vec![4, 2]];
        let k = left_kernel(a.clone());
        assert_eq!(k.len(), 1);
        for row in &k {
            for j in 0..2 {
                let s: i128 = row.iter().zip(a.iter()).map(|(v, ar)| v * ar[j]).sum();
                assert_eq!(s, 0);
            }
        }
    }
}
