use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Invariant factors `d1 | d2 | ... | dr` followed by zeros, one per
/// diagonal position (`min(rows, cols)` entries).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| !d.is_zero()).count()
    }

    /// Product of the first `k` invariant factors; zero when `k` exceeds
    /// the number of diagonal positions.
    pub fn determinantal_divisor(&self, k: usize) -> BigInt {
        if k > self.invariant_factors.len() {
            return BigInt::zero();
        }
        self.invariant_factors[..k].iter().product()
    }
}

/// Unimodular `left` and `right` with `left * m * right = diag(factors)`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub form: SmithForm,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    Reducer::new(m, false).run().form
}

pub fn smith_decomposition(m: &IntMatrix) -> SmithDecomposition {
    Reducer::new(m, true).run()
}

struct Reducer {
    a: Vec<Vec<BigInt>>,
    left: Option<Vec<Vec<BigInt>>>,
    right: Option<Vec<Vec<BigInt>>>,
    rows: usize,
    cols: usize,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

impl Reducer {
    fn new(m: &IntMatrix, track: bool) -> Self {
        Reducer {
            a: (0..m.rows()).map(|r| m.row(r).to_vec()).collect(),
            left: track.then(|| identity(m.rows())),
            right: track.then(|| identity(m.cols())),
            rows: m.rows(),
            cols: m.cols(),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            if let Some(u) = &mut self.left {
                u.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a {
                row.swap(i, j);
            }
            if let Some(v) = &mut self.right {
                for row in v.iter_mut() {
                    row.swap(i, j);
                }
            }
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for c in 0..self.cols {
            let t = &self.a[src][c] * factor;
            self.a[dst][c] += t;
        }
        if let Some(u) = &mut self.left {
            for c in 0..self.rows {
                let t = &u[src][c] * factor;
                u[dst][c] += t;
            }
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for r in 0..self.rows {
            let t = &self.a[r][src] * factor;
            self.a[r][dst] += t;
        }
        if let Some(v) = &mut self.right {
            for row in v.iter_mut() {
                let t = &row[src] * factor;
                row[dst] += t;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for x in &mut self.a[r] {
            *x = -&*x;
        }
        if let Some(u) = &mut self.left {
            for x in &mut u[r] {
                *x = -&*x;
            }
        }
    }

    /// Smallest nonzero entry (by absolute value) of the trailing block.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = &self.a[i][j];
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn run(mut self) -> SmithDecomposition {
        let n = self.rows.min(self.cols);
        for t in 0..n {
            let Some((pi, pj)) = self.min_entry(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..self.rows {
                    if !self.a[i][t].is_zero() {
                        let q = &self.a[i][t] / &self.a[t][t];
                        self.add_row(i, t, &-q);
                        clean &= self.a[i][t].is_zero();
                    }
                }
                for j in t + 1..self.cols {
                    if !self.a[t][j].is_zero() {
                        let q = &self.a[t][j] / &self.a[t][t];
                        self.add_col(j, t, &-q);
                        clean &= self.a[t][j].is_zero();
                    }
                }
                if !clean {
                    // A remainder smaller than the pivot is left in row or column t.
                    let (mut bi, mut bj) = (t, t);
                    for i in t + 1..self.rows {
                        let v = &self.a[i][t];
                        if !v.is_zero() && v.abs() < self.a[bi][bj].abs() {
                            (bi, bj) = (i, t);
                        }
                    }
                    for j in t + 1..self.cols {
                        let v = &self.a[t][j];
                        if !v.is_zero() && v.abs() < self.a[bi][bj].abs() {
                            (bi, bj) = (t, j);
                        }
                    }
                    self.swap_rows(t, bi);
                    self.swap_cols(t, bj);
                    continue;
                }
                let pivot = self.a[t][t].clone();
                let offender = (t + 1..self.rows)
                    .find(|&i| (t + 1..self.cols).any(|j| !self.a[i][j].is_multiple_of(&pivot)));
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
        }
        let factors = (0..n).map(|i| self.a[i][i].clone()).collect();
        let to_matrix = |rows: Option<Vec<Vec<BigInt>>>, n: usize| {
            let mut m = IntMatrix::zeros(n, n);
            if let Some(rows) = rows {
                for (i, r) in rows.into_iter().enumerate() {
                    for (j, v) in r.into_iter().enumerate() {
                        m.set(i, j, v);
                    }
                }
            }
            m
        };
        SmithDecomposition {
            form: SmithForm { invariant_factors: factors },
            left: to_matrix(self.left, self.rows),
            right: to_matrix(self.right, self.cols),
        }
    }
}
