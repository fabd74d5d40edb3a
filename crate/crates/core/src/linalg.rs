//! Small dense linear-algebra kernels shared by the lattice machinery:
//! Gram-Schmidt data, LLL reduction with unimodular transform tracking,
//! exact integer determinants and integer kernels, and a 2D convex hull.

use nalgebra::{DMatrix, DVector};

/// Gram-Schmidt orthogonalization of the rows of `b`.
///
/// Returns `(bstar, mu)` where `bstar` rows are the orthogonal vectors and
/// `mu[(i,j)]` (j < i) are the projection coefficients.
pub fn gram_schmidt(b: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    let n = b.nrows();
    let mut bstar = b.clone();
    let mut mu = DMatrix::<f64>::identity(n, n);
    for i in 0..n {
        for j in 0..i {
            let denom = bstar.row(j).dot(&bstar.row(j));
            let m = if denom > 0.0 {
                b.row(i).dot(&bstar.row(j)) / denom
            } else {
                0.0
            };
            mu[(i, j)] = m;
            let update = bstar.row(j) * m;
            let mut row = bstar.row_mut(i);
            row -= update;
        }
    }
    (bstar, mu)
}

/// LLL-reduce the rows of `basis` with Lovász factor `delta`.
///
/// Returns the reduced basis and the unimodular transform `u` with
/// `reduced = u * basis` (integer entries, |det u| = 1).
pub fn lll_reduce(basis: &DMatrix<f64>, delta: f64) -> (DMatrix<f64>, Vec<Vec<i64>>) {
    let n = basis.nrows();
    let mut b = basis.clone();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    if n <= 1 {
        return (b, u);
    }
    let (mut bstar, mut mu) = gram_schmidt(&b);
    let mut k = 1usize;
    let mut steps = 0usize;
    let max_steps = 10_000 * n * n;
    while k < n {
        steps += 1;
        if steps > max_steps {
            break; // refuse to loop forever on degenerate input
        }
        // size reduction of row k against rows k-1..0
        for j in (0..k).rev() {
            let q = mu[(k, j)].round();
            if q != 0.0 {
                let sub = b.row(j) * q;
                let mut row = b.row_mut(k);
                row -= sub;
                for c in 0..n {
                    u[k][c] -= q as i64 * u[j][c];
                }
                for l in 0..j {
                    let m = mu[(j, l)];
                    mu[(k, l)] -= q * m;
                }
                mu[(k, j)] -= q;
            }
        }
        let lhs = bstar.row(k).dot(&bstar.row(k));
        let rhs = (delta - mu[(k, k - 1)] * mu[(k, k - 1)]) * bstar.row(k - 1).dot(&bstar.row(k - 1));
        if lhs >= rhs {
            k += 1;
        } else {
            b.swap_rows(k, k - 1);
            u.swap(k, k - 1);
            let refreshed = gram_schmidt(&b);
            bstar = refreshed.0;
            mu = refreshed.1;
            k = k.max(2) - 1;
            if k == 0 {
                k = 1;
            }
        }
    }
    (b, u)
}

/// Exact determinant of an integer matrix (Bareiss fraction-free elimination).
pub fn int_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let swap = (k + 1..n).find(|&i| a[i][k] != 0);
            match swap {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Integer kernel of `k` acting on the left: a basis of `{ m in Z^n : m K = 0 }`.
///
/// `k` is an `n x c` integer matrix given by rows. Row-reduces `k` with
/// unimodular row operations; the transform rows mapping to zero rows span
/// the kernel.
pub fn int_left_kernel(k: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = k.len();
    if n == 0 {
        return Vec::new();
    }
    let c = k[0].len();
    let mut a: Vec<Vec<i128>> = k
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut pivot_row = 0usize;
    for col in 0..c {
        if pivot_row >= n {
            break;
        }
        // Euclidean elimination in this column below pivot_row.
        loop {
            let mut min_row = None;
            let mut min_abs = i128::MAX;
            for r in pivot_row..n {
                let v = a[r][col].abs();
                if v != 0 && v < min_abs {
                    min_abs = v;
                    min_row = Some(r);
                }
            }
            let Some(mr) = min_row else { break };
            a.swap(pivot_row, mr);
            u.swap(pivot_row, mr);
            let mut any_nonzero = false;
            for r in pivot_row + 1..n {
                if a[r][col] != 0 {
                    let q = a[r][col] / a[pivot_row][col];
                    for j in 0..c {
                        let sub = q * a[pivot_row][j];
                        a[r][j] -= sub;
                    }
                    for j in 0..n {
                        let sub = q * u[pivot_row][j];
                        u[r][j] -= sub;
                    }
                    if a[r][col] != 0 {
                        any_nonzero = true;
                    }
                }
            }
            if !any_nonzero {
                break;
            }
        }
        if a[pivot_row][col] != 0 {
            pivot_row += 1;
        }
    }
    let mut kernel = Vec::new();
    for r in 0..n {
        if a[r].iter().all(|&x| x == 0) {
            kernel.push(u[r].iter().map(|&x| x as i64).collect());
        }
    }
    kernel
}

/// Convex hull of 2D points, counter-clockwise, no repeated endpoint
/// (Andrew's monotone chain). Collinear points on the hull are dropped.
pub fn convex_hull_2d(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut pts: Vec<[f64; 2]> = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup_by(|a, b| (a[0] - b[0]).abs() < 1e-12 && (a[1] - b[1]).abs() < 1e-12);
    let n = pts.len();
    if n < 3 {
        return pts;
    }
    let cross = |o: &[f64; 2], a: &[f64; 2], b: &[f64; 2]| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut hull: Vec<[f64; 2]> = Vec::with_capacity(2 * n);
    for p in pts.iter() {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 1e-14 {
            hull.pop();
        }
        hull.push(*p);
    }
    let lower_len = hull.len() + 1;
    for p in pts.iter().rev() {
        while hull.len() >= lower_len
            && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 1e-14
        {
            hull.pop();
        }
        hull.push(*p);
    }
    hull.pop();
    hull
}

/// Shoelace area of a simple polygon given in order.
pub fn polygon_area(poly: &[[f64; 2]]) -> f64 {
    let n = poly.len();
    if n < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..n {
        let j = (i + 1) % n;
        acc += poly[i][0] * poly[j][1] - poly[j][0] * poly[i][1];
    }
    acc.abs() / 2.0
}

/// Multiply integer matrix (rows) by a float basis: rows of `t` combine rows of `b`.
pub fn int_rows_times(t: &[Vec<i64>], b: &DMatrix<f64>) -> DMatrix<f64> {
    let rows = t.len();
    let cols = b.ncols();
    let mut out = DMatrix::<f64>::zeros(rows, cols);
    for (i, trow) in t.iter().enumerate() {
        let mut acc = DVector::<f64>::zeros(cols);
        for (j, &c) in trow.iter().enumerate() {
            if c != 0 {
                acc += b.row(j).transpose() * c as f64;
            }
        }
        out.row_mut(i).copy_from(&acc.transpose());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_schmidt_orthogonal() {
        let b = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 100.0, 1.0]);
        let (bstar, _) = gram_schmidt(&b);
        assert!(bstar.row(0).dot(&bstar.row(1)).abs() < 1e-9);
    }

    #[test]
    fn lll_reduces_skew_basis() {
        let b = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 100.0, 1.0]);
        let (red, u) = lll_reduce(&b, 0.99);
        for i in 0..2 {
            assert!(red.row(i).norm() <= 2.0, "row {i} norm {}", red.row(i).norm());
        }
        assert_eq!(int_det(&u).abs(), 1);
        // reduced = u * basis
        let rebuilt = int_rows_times(&u, &b);
        assert!((rebuilt - red).norm() < 1e-9);
    }

    #[test]
    fn int_det_examples() {
        assert_eq!(int_det(&[vec![2, 0], vec![0, 3]]), 6);
        assert_eq!(int_det(&[vec![1, 2], vec![2, 4]]), 0);
        assert_eq!(
            int_det(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]),
            -1
        );
    }

    #[test]
    fn kernel_of_column_of_ones() {
        let k: Vec<Vec<i64>> = (0..5).map(|_| vec![1]).collect();
        let ker = int_left_kernel(&k);
        assert_eq!(ker.len(), 4);
        for row in &ker {
            assert_eq!(row.iter().sum::<i64>(), 0);
        }
        // rows are linearly independent: the 4x5 matrix has a nonzero 4x4 minor
        let mut found = false;
        for drop in 0..5 {
            let minor: Vec<Vec<i64>> = ker
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != drop)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            if int_det(&minor) != 0 {
                found = true;
                break;
            }
        }
        assert!(found);
    }

    #[test]
    fn hull_of_square() {
        let pts = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.5, 0.5]];
        let hull = convex_hull_2d(&pts);
        assert_eq!(hull.len(), 4);
        assert!((polygon_area(&hull) - 1.0).abs() < 1e-12);
    }
}
