use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, LinalgError};

/// Signed determinant of a square matrix by fraction-free elimination.
///
/// Runs in `i128` with overflow checks and restarts over big integers
/// when an intermediate value does not fit.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    if m.rows() == 0 {
        return BigInt::one();
    }
    if let Some(rows) = m.to_i128_rows() {
        if let Some(d) = bareiss_i64(&rows) {
            return BigInt::from(d);
        }
        if let Some(d) = bareiss_i128(rows) {
            return BigInt::from(d);
        }
    }
    bareiss_big((0..m.rows()).map(|r| m.row(r).to_vec()).collect())
}

/// Absolute value of the minor obtained by deleting one row and one column.
/// A 1x1 matrix has the empty minor, whose determinant is 1.
pub fn minor_determinant(
    m: &IntMatrix,
    drop_row: usize,
    drop_col: usize,
) -> Result<BigInt, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if drop_row >= m.rows() || drop_col >= m.cols() {
        return Err(LinalgError::IndexOutOfRange {
            row: drop_row,
            col: drop_col,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(determinant(&m.without(drop_row, drop_col)).abs())
}

/// Flat row-major elimination in machine words; coloring matrices keep
/// their intermediate minors small, so this is the common path.
fn bareiss_i64(rows: &[Vec<i128>]) -> Option<i64> {
    let n = rows.len();
    let mut a = Vec::with_capacity(n * n);
    for r in rows {
        for &v in r {
            a.push(i64::try_from(v).ok()?);
        }
    }
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n {
        if a[k * n + k] == 0 {
            let r = (k + 1..n).find(|&r| a[r * n + k] != 0);
            match r {
                Some(r) => {
                    for j in 0..n {
                        a.swap(k * n + j, r * n + j);
                    }
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        let (head, tail) = a.split_at_mut((k + 1) * n);
        let pivot_row = &head[k * n..];
        let akk = pivot_row[k];
        for row in tail.chunks_exact_mut(n) {
            let aik = row[k];
            if aik == 0 {
                if akk != prev {
                    for x in &mut row[k + 1..] {
                        *x = x.checked_mul(akk)? / prev;
                    }
                }
                continue;
            }
            for (x, &pkj) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..n]) {
                let t = x.checked_mul(akk)?.checked_sub(aik.checked_mul(pkj)?)?;
                *x = if prev == 1 { t } else { t / prev };
            }
        }
        prev = akk;
    }
    a[n * n - 1].checked_mul(sign)
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].checked_mul(a[k][k])?.checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = t / prev;
            }
        }
        prev = a[k][k];
    }
    a[n - 1][n - 1].checked_mul(sign)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Laplace expansion along the first row; exponential, test-only.
    fn cofactor(a: &[Vec<i64>]) -> i64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let sub: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * a[0][j] * cofactor(&sub)
            })
            .sum()
    }

    #[test]
    fn trefoil_minor_is_three() {
        let m = IntMatrix::from_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]);
        assert_eq!(minor_determinant(&m, 0, 0).unwrap(), BigInt::from(3));
        let sub: Vec<Vec<i64>> = vec![vec![2, -1], vec![-1, 2]];
        assert_eq!(cofactor(&sub), 3);
    }

    #[test]
    fn empty_minor_is_one() {
        let m = IntMatrix::from_rows(&[[0]]);
        assert_eq!(minor_determinant(&m, 0, 0).unwrap(), BigInt::one());
    }

    #[test]
    fn hopf_minor_is_two() {
        let m = IntMatrix::from_rows(&[[2, -2], [-2, 2]]);
        assert_eq!(minor_determinant(&m, 0, 0).unwrap(), BigInt::from(2));
    }

    #[test]
    fn index_errors() {
        let m = IntMatrix::from_rows(&[[1, 2], [3, 4]]);
        assert!(matches!(minor_determinant(&m, 2, 0), Err(LinalgError::IndexOutOfRange { .. })));
        let r = IntMatrix::from_rows(&[[1, 2, 3]]);
        assert!(matches!(minor_determinant(&r, 0, 0), Err(LinalgError::NotSquare { .. })));
    }

    #[test]
    fn pivoting_and_sign() {
        let m = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
        assert_eq!(determinant(&m), BigInt::from(-1));
        let rows = vec![vec![0, 2, -1, 3], vec![1, 0, 4, -2], vec![5, -3, 0, 1], vec![2, 2, 2, 0]];
        let m = IntMatrix::from_rows(&rows);
        assert_eq!(determinant(&m), BigInt::from(cofactor(&rows)));
    }

    #[test]
    fn big_path_agrees_when_i128_overflows() {
        let big = 1i64 << 40;
        let rows = vec![vec![big, 3, 1], vec![7, big, 2], vec![1, 5, big]];
        let m = IntMatrix::from_rows(&rows);
        let fast = determinant(&m);
        assert_eq!(bareiss_i64(&m.to_i128_rows().unwrap()), None);
        let slow = bareiss_big((0..3).map(|r| m.row(r).to_vec()).collect());
        assert_eq!(fast, slow);
        let huge = IntMatrix::from_rows(&[[i64::MAX, i64::MAX], [i64::MAX, i64::MIN]]);
        let expected = BigInt::from(i64::MAX) * BigInt::from(i64::MIN) - BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        assert_eq!(determinant(&huge), expected);
    }

    proptest::proptest! {
        #[test]
        fn bareiss_matches_cofactor(rows in proptest::collection::vec(proptest::collection::vec(-6i64..=6, 5), 5)) {
            let m = IntMatrix::from_rows(&rows);
            proptest::prop_assert_eq!(determinant(&m), BigInt::from(cofactor(&rows)));
        }
    }
}
