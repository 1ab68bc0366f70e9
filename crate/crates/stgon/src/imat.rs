//! Exact integer linear algebra for the small matrices used throughout the
//! crate (rank <= 15): products, powers, unimodular inverses, determinants,
//! characteristic polynomials and fraction-free rank computation.

pub type IMat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for t in 0..k {
            let a_it = a[i][t];
            if a_it == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += a_it * b[t][j];
            }
        }
    }
    out
}

pub fn mat_vec(m: &IMat, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn transpose(m: &IMat) -> IMat {
    let n = m.len();
    let c = m[0].len();
    (0..c).map(|j| (0..n).map(|i| m[i][j]).collect()).collect()
}

pub fn mat_pow(m: &IMat, k: usize) -> IMat {
    let mut out = identity(m.len());
    for _ in 0..k {
        out = mat_mul(&out, m);
    }
    out
}

pub fn neg(m: &IMat) -> IMat {
    m.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

pub fn sub(a: &IMat, b: &IMat) -> IMat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &IMat) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut prev: i128 = 1;
    let mut sign: i128 = 1;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn minor(m: &IMat, skip_row: usize, skip_col: usize) -> IMat {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Inverse of an integer matrix with determinant +-1, via the adjugate.
/// Panics on any other determinant.
pub fn inverse_unimodular(m: &IMat) -> IMat {
    let n = m.len();
    let d = det(m);
    assert!(d == 1 || d == -1, "matrix is not unimodular (det {d})");
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let cof = det(&minor(m, j, i));
            let signed = if (i + j) % 2 == 0 { cof } else { -cof };
            inv[i][j] = i64::try_from(signed * d).expect("adjugate overflow");
        }
    }
    inv
}

/// Coefficients `c[0..=n]` of the characteristic polynomial
/// `det(x I - M) = c[n] x^n + ... + c[0]`, computed exactly
/// (Faddeev-LeVerrier; the interior divisions are exact).
pub fn char_poly(m: &IMat) -> Vec<i128> {
    let n = m.len();
    let a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mul = |x: &Vec<Vec<i128>>, y: &Vec<Vec<i128>>| -> Vec<Vec<i128>> {
        let mut out = vec![vec![0i128; n]; n];
        for i in 0..n {
            for t in 0..n {
                if x[i][t] == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i][j] += x[i][t] * y[t][j];
                }
            }
        }
        out
    };
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mk: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    for k in 1..=n {
        let am = mul(&a, &mk);
        let trace: i128 = (0..n).map(|i| am[i][i]).sum();
        let c = -trace / k as i128;
        coeffs[n - k] = c;
        mk = am;
        for i in 0..n {
            mk[i][i] += c;
        }
    }
    coeffs
}

/// Rank of an integer matrix over the rationals, by fraction-free
/// Gaussian elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let nrows = a.len();
    let ncols = a[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse() {
        let m = vec![vec![1, 0], vec![1, 1]];
        assert_eq!(det(&m), 1);
        let inv = inverse_unimodular(&m);
        assert_eq!(mat_mul(&m, &inv), identity(2));
    }

    #[test]
    fn char_poly_small() {
        // Companion-style check: [[0,-1],[1,-1]] has x^2 + x + 1.
        let m = vec![vec![0, -1], vec![1, -1]];
        assert_eq!(char_poly(&m), vec![1, 1, 1]);
    }

    #[test]
    fn rank_with_dependent_rows() {
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&rows), 2);
    }
}
