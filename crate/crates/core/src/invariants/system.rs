use num_bigint::BigInt;

use crate::diagram::{Arcs, NodeArcs, PseudoDiagram};
use crate::linalg::IntMatrix;

/// Linear system over the arcs of a diagram: `2 over - under - under = 0`
/// at each classical crossing and, for the strong system, `a - b = 0` for
/// the two arcs through each precrossing.
#[derive(Clone, Debug)]
pub struct ColoringSystem {
    matrix: IntMatrix,
    arcs: Arcs,
    classical_rows: usize,
}

impl ColoringSystem {
    pub fn new(d: &PseudoDiagram, strong: bool) -> Self {
        let arcs = Arcs::of(d);
        let m = arcs.count();
        let mut matrix = IntMatrix::zeros(0, m);
        for node in arcs.nodes() {
            if let NodeArcs::Classical { over, under } = *node {
                let mut row = vec![BigInt::from(0); m];
                row[over] += 2;
                row[under[0]] -= 1;
                row[under[1]] -= 1;
                matrix.push_row(row);
            }
        }
        let classical_rows = matrix.rows();
        if strong {
            for node in arcs.nodes() {
                if let NodeArcs::Pre { through: [a, b] } = *node {
                    if a != b {
                        let mut row = vec![BigInt::from(0); m];
                        row[a] += 1;
                        row[b] -= 1;
                        matrix.push_row(row);
                    }
                }
            }
        }
        ColoringSystem { matrix, arcs, classical_rows }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.matrix
    }

    pub fn arcs(&self) -> &Arcs {
        &self.arcs
    }

    pub fn classical_rows(&self) -> usize {
        self.classical_rows
    }

    pub fn strong_rows(&self) -> usize {
        self.matrix.rows() - self.classical_rows
    }

    /// Whether `values` (one residue per arc) satisfies every equation.
    pub fn is_solution(&self, values: &[u64], modulus: u64) -> bool {
        let p = BigInt::from(modulus);
        (0..self.matrix.rows()).all(|r| {
            let s: BigInt = self.matrix.row(r).iter().zip(values).map(|(a, &v)| a * v).sum();
            (s % &p) == BigInt::from(0)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn system(s: &str, strong: bool) -> ColoringSystem {
        ColoringSystem::new(&PseudoDiagram::from_symbol(s).unwrap(), strong)
    }

    #[test]
    fn trefoil_rows() {
        let sys = system("3", false);
        assert_eq!((sys.matrix().rows(), sys.matrix().cols()), (3, 3));
        for r in 0..3 {
            let mut row: Vec<i64> = sys.matrix().row(r).iter().map(|x| x.try_into().unwrap()).collect();
            row.sort();
            assert_eq!(row, vec![-1, -1, 2]);
        }
    }

    #[test]
    fn rows_sum_to_zero() {
        for s in ["3 i 3", "2 1 i,3,-3", "6*2.2 0.i.1.1.1", "2", "i,1"] {
            let sys = system(s, false);
            assert_eq!(sys.matrix().cols(), sys.arcs().count());
            for r in 0..sys.matrix().rows() {
                assert!(sys.matrix().row(r).iter().sum::<BigInt>().is_zero(), "{s}");
            }
        }
    }

    #[test]
    fn shadow_has_only_strong_rows() {
        // Two components meeting at two precrossings.
        let sys = system("i^2", true);
        assert_eq!(sys.classical_rows(), 0);
        assert_eq!(sys.strong_rows(), 2);
        assert_eq!(system("i^2", false).matrix().rows(), 0);
        // A single strand meets itself: no constraint.
        assert_eq!(system("i^3", true).matrix().rows(), 0);
    }

    #[test]
    fn constants_always_solve() {
        let sys = system("2 1 i,3,-3", true);
        assert!(sys.is_solution(&vec![4; sys.arcs().count()], 7));
    }
}
