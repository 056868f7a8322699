//! Coloring invariants: coloring systems, determinants, pseudodeterminants,
//! (strong) colorability, explicit colorings and the Kauffman-Harary
//! property.

mod coloring;
mod system;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{DiagramError, PseudoDiagram, Resolution, DEFAULT_MAX_PRECROSSINGS};
use crate::exec::Strategy;
use crate::linalg::{self, LinalgError, DEFAULT_ENUMERATION_CAP};

pub use coloring::{color_count_spectrum, count_colors, find_colorings, kh_property, Coloring, KhReport};
pub use system::ColoringSystem;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("diagram still has {0} precrossings")]
    HasPrecrossings(usize),
    #[error("determinant {0} does not fit in 64 bits")]
    Overflow(String),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("the Kauffman-Harary property needs a pseudodeterminant of at least 2, got {0}")]
    UndefinedForPseudodetBelow2(u64),
}

/// Knobs shared by the resolution-enumerating operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub strategy: Strategy,
    pub max_precrossings: usize,
    pub enumeration_cap: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            strategy: Strategy::default(),
            max_precrossings: DEFAULT_MAX_PRECROSSINGS,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl Settings {
    pub fn with_strategy(self, strategy: Strategy) -> Self {
        Settings { strategy, ..self }
    }

    pub fn with_max_precrossings(self, max_precrossings: usize) -> Self {
        Settings { max_precrossings, ..self }
    }
}

/// Determinant of a classical diagram.
///
/// With one column per arc, a square system gives the absolute value of
/// its first minor. Circular arcs make the system wider than tall; then the
/// value is the gcd of all maximal-but-one minors (the product of all but
/// the last invariant factor), which agrees with the first minor in the
/// square case. A diagram without crossings has determinant 1 if it is a
/// single loop and 0 otherwise.
pub fn determinant(d: &PseudoDiagram) -> Result<u64, InvariantError> {
    let pre = d.precrossing_count();
    if pre > 0 {
        return Err(InvariantError::HasPrecrossings(pre));
    }
    if d.node_count() == 0 {
        return Ok(u64::from(d.component_count() == 1));
    }
    let m = ColoringSystem::new(d, false).into_matrix();
    to_u64(determinant_of_system(&m))
}

fn determinant_of_system(m: &linalg::IntMatrix) -> BigInt {
    if m.is_square() {
        return linalg::minor_determinant(m, 0, 0).expect("non-empty square matrix");
    }
    let k = m.cols() - 1;
    if k > m.rows() {
        return BigInt::zero();
    }
    linalg::smith_normal_form(m).determinantal_divisor(k)
}

fn to_u64(v: BigInt) -> Result<u64, InvariantError> {
    v.to_u64().ok_or_else(|| InvariantError::Overflow(v.to_string()))
}

/// Determinant of one resolution together with its assignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionDet {
    pub assignment: String,
    pub det: u64,
    #[serde(skip)]
    pub resolution: Resolution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudoDetReport {
    pub symbol: String,
    pub resolutions: Vec<ResolutionDet>,
    pub pseudodet: u64,
}

impl PseudoDetReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Full resolutions of `d`, in enumeration order.
fn resolutions(d: &PseudoDiagram, s: &Settings) -> Result<Vec<Resolution>, InvariantError> {
    Ok(d.resolutions(s.max_precrossings)?.collect())
}

/// Determinants of all full resolutions, in enumeration order.
pub fn resolution_determinants(d: &PseudoDiagram, s: &Settings) -> Result<Vec<ResolutionDet>, InvariantError> {
    let all = resolutions(d, s)?;
    s.strategy
        .map(&all, |r| {
            let det = determinant(&d.resolve(r)?)?;
            Ok(ResolutionDet { assignment: r.to_string(), det, resolution: r.clone() })
        })
        .into_iter()
        .collect()
}

/// `gcd` of the resolution determinants; 0 is the identity of `gcd`.
pub fn pseudodeterminant(d: &PseudoDiagram) -> Result<u64, InvariantError> {
    pseudodeterminant_with(d, &Settings::default())
}

pub fn pseudodeterminant_with(d: &PseudoDiagram, s: &Settings) -> Result<u64, InvariantError> {
    Ok(pseudodet_report_with(d, "", s)?.pseudodet)
}

pub fn pseudodet_report(d: &PseudoDiagram, symbol: &str) -> Result<PseudoDetReport, InvariantError> {
    pseudodet_report_with(d, symbol, &Settings::default())
}

pub fn pseudodet_report_with(
    d: &PseudoDiagram,
    symbol: &str,
    s: &Settings,
) -> Result<PseudoDetReport, InvariantError> {
    let resolutions = resolution_determinants(d, s)?;
    let pseudodet = resolutions.iter().fold(0u64, |g, r| g.gcd(&r.det));
    Ok(PseudoDetReport { symbol: symbol.to_string(), resolutions, pseudodet })
}

fn check_modulus(p: u64) -> Result<(), InvariantError> {
    if p < 2 {
        return Err(InvariantError::BadModulus(p));
    }
    Ok(())
}

/// Whether the given system has a nonconstant solution mod `p`.
fn has_nontrivial(d: &PseudoDiagram, strong: bool, p: u64) -> Result<bool, InvariantError> {
    let m = ColoringSystem::new(d, strong).into_matrix();
    if m.rows() == 0 {
        // No equations: every assignment is a coloring.
        return Ok(m.cols() > 1);
    }
    Ok(linalg::solution_space_mod(&m, p)?.has_nonconstant())
}

/// Every full resolution has a nontrivial coloring mod `p`, decided by
/// solving each system.
pub fn is_colorable(d: &PseudoDiagram, p: u64) -> Result<bool, InvariantError> {
    is_colorable_with(d, p, &Settings::default())
}

pub fn is_colorable_with(d: &PseudoDiagram, p: u64, s: &Settings) -> Result<bool, InvariantError> {
    check_modulus(p)?;
    let all = resolutions(d, s)?;
    let each: Result<Vec<bool>, InvariantError> =
        s.strategy.map(&all, |r| has_nontrivial(&d.resolve(r)?, false, p)).into_iter().collect();
    Ok(each?.into_iter().all(|b| b))
}

/// The system with an equality constraint at every precrossing has a
/// nontrivial solution mod `p`.
pub fn is_strong_colorable(d: &PseudoDiagram, p: u64) -> Result<bool, InvariantError> {
    check_modulus(p)?;
    has_nontrivial(d, true, p)
}

/// All `p` in `2..=bound` for which `d` is colorable mod `p`, using
/// `gcd(p, det) > 1` for each resolution determinant.
pub fn coloring_numbers(d: &PseudoDiagram, bound: u64) -> Result<Vec<u64>, InvariantError> {
    coloring_numbers_with(d, bound, &Settings::default())
}

pub fn coloring_numbers_with(d: &PseudoDiagram, bound: u64, s: &Settings) -> Result<Vec<u64>, InvariantError> {
    let dets: Vec<u64> = resolution_determinants(d, s)?.into_iter().map(|r| r.det).collect();
    Ok((2..=bound).filter(|p| dets.iter().all(|det| p.gcd(det) > 1)).collect())
}

/// Upper end of the color-count range, taken to be the pseudodeterminant.
pub fn max_colors(d: &PseudoDiagram) -> Result<u64, InvariantError> {
    pseudodeterminant(d)
}

/// Whether determinants of three members of a twist family, taken at twist
/// lengths `n`, `n + 2`, `n + 4`, have constant difference.
pub fn det_progression(members: &[PseudoDiagram; 3]) -> Result<bool, InvariantError> {
    let [a, b, c] = [determinant(&members[0])?, determinant(&members[1])?, determinant(&members[2])?];
    let (a, b, c) = (i128::from(a), i128::from(b), i128::from(c));
    Ok(b - a == c - b)
}
