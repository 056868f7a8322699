use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::smith::smith_decomposition;
use super::{IntMatrix, LinalgError};

/// Default upper bound on the number of vectors an enumerator will produce.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Homogeneous solutions of `m x = 0` over `Z/modulus`.
///
/// With `m = U^-1 D V^-1` from the Smith decomposition, the solutions are
/// `x = V y` where each `y_i` ranges over the multiples of
/// `modulus / gcd(d_i, modulus)`.
#[derive(Clone, Debug)]
pub struct SolutionSpace {
    modulus: u64,
    /// Column transform `V`, reduced mod `modulus`.
    right: Vec<Vec<u64>>,
    /// Step and number of values for each coordinate of `y`.
    radices: Vec<(u64, u64)>,
}

impl SolutionSpace {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Exact number of solutions.
    pub fn count(&self) -> BigUint {
        self.radices.iter().map(|&(_, n)| BigUint::from(n)).product()
    }

    /// Whether some solution is not a constant vector. For coloring
    /// systems, where constants always solve, this is `count > modulus`.
    pub fn has_nonconstant(&self) -> bool {
        self.count() > BigUint::from(self.modulus)
    }

    /// Iterate every solution exactly once, refusing spaces above `cap`.
    pub fn enumerate(&self, cap: u64) -> Result<SolutionIter<'_>, LinalgError> {
        let count = self.count();
        if count > BigUint::from(cap) {
            return Err(LinalgError::EnumerationTooLarge { cap });
        }
        Ok(SolutionIter {
            space: self,
            digits: vec![0; self.radices.len()],
            remaining: count.to_u64().expect("bounded by cap"),
        })
    }
}

pub struct SolutionIter<'a> {
    space: &'a SolutionSpace,
    digits: Vec<u64>,
    remaining: u64,
}

impl Iterator for SolutionIter<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let p = self.space.modulus as u128;
        let y: Vec<u128> = self
            .digits
            .iter()
            .zip(&self.space.radices)
            .map(|(&d, &(step, _))| (d as u128 * step as u128) % p)
            .collect();
        let x = self
            .space
            .right
            .iter()
            .map(|row| (row.iter().zip(&y).map(|(&v, &yi)| v as u128 * yi % p).sum::<u128>() % p) as u64)
            .collect();
        // Advance the mixed-radix counter.
        for (d, &(_, n)) in self.digits.iter_mut().zip(&self.space.radices) {
            *d += 1;
            if *d < n {
                break;
            }
            *d = 0;
        }
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

pub fn solution_space_mod(m: &IntMatrix, modulus: u64) -> Result<SolutionSpace, LinalgError> {
    if modulus < 2 {
        return Err(LinalgError::BadModulus(modulus));
    }
    let dec = smith_decomposition(m);
    let p = BigInt::from(modulus);
    let radices = (0..m.cols())
        .map(|i| {
            let d = dec.form.invariant_factors.get(i).cloned().unwrap_or_else(BigInt::zero);
            let g = d.gcd(&p).to_u64().expect("divides modulus");
            (modulus / g, g)
        })
        .collect();
    let right = (0..m.cols())
        .map(|r| {
            (0..m.cols())
                .map(|c| dec.right.get(r, c).mod_floor(&p).to_u64().expect("reduced"))
                .collect()
        })
        .collect();
    Ok(SolutionSpace { modulus, right, radices })
}
