use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;

use super::{check_modulus, pseudodeterminant_with, resolutions, ColoringSystem, InvariantError, Settings};
use crate::diagram::PseudoDiagram;
use crate::linalg::{self, IntMatrix};

/// Residues mod `modulus`, one per arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl Coloring {
    pub fn is_trivial(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }
}

/// Number of distinct residues used.
pub fn count_colors(c: &Coloring) -> usize {
    c.values.iter().collect::<BTreeSet<_>>().len()
}

fn solvable_matrix(sys: &ColoringSystem) -> IntMatrix {
    let mut m = sys.matrix().clone();
    if m.rows() == 0 {
        m.push_row(vec![BigInt::from(0); m.cols()]);
    }
    m
}

/// All nontrivial colorings mod `p` of the diagram's system. Precrossings
/// impose nothing unless `strong` is set.
pub fn find_colorings(d: &PseudoDiagram, p: u64, strong: bool, cap: u64) -> Result<Vec<Coloring>, InvariantError> {
    check_modulus(p)?;
    let sys = ColoringSystem::new(d, strong);
    if sys.arcs().count() == 0 {
        return Ok(Vec::new());
    }
    let space = linalg::solution_space_mod(&solvable_matrix(&sys), p)?;
    Ok(space
        .enumerate(cap)?
        .map(|values| Coloring { modulus: p, values })
        .filter(|c| !c.is_trivial())
        .collect())
}

/// Outcome of the Kauffman-Harary check at the pseudodeterminant modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KhReport {
    pub modulus: u64,
    pub holds: bool,
    /// One coloring with pairwise distinct arc colors per resolution, keyed
    /// by assignment; complete only when `holds`.
    pub witnesses: BTreeMap<String, Coloring>,
    /// Assignments of resolutions without such a coloring.
    pub failures: Vec<String>,
}

/// Whether every resolution has a coloring mod the pseudodeterminant that
/// gives every arc its own color.
pub fn kh_property(d: &PseudoDiagram, s: &Settings) -> Result<KhReport, InvariantError> {
    let modulus = pseudodeterminant_with(d, s)?;
    if modulus < 2 {
        return Err(InvariantError::UndefinedForPseudodetBelow2(modulus));
    }
    let all = resolutions(d, s)?;
    let found: Result<Vec<Option<Coloring>>, InvariantError> = s
        .strategy
        .map(&all, |r| {
            let colorings = find_colorings(&d.resolve(r)?, modulus, false, s.enumeration_cap)?;
            Ok(colorings.into_iter().find(|c| count_colors(c) == c.values.len()))
        })
        .into_iter()
        .collect();
    let mut witnesses = BTreeMap::new();
    let mut failures = Vec::new();
    for (r, w) in all.iter().zip(found?) {
        match w {
            Some(c) => {
                witnesses.insert(r.to_string(), c);
            }
            None => failures.push(r.to_string()),
        }
    }
    Ok(KhReport { modulus, holds: failures.is_empty(), witnesses, failures })
}

/// Color counts of all nontrivial colorings mod `p`, over every resolution.
pub fn color_count_spectrum(d: &PseudoDiagram, p: u64, s: &Settings) -> Result<BTreeSet<usize>, InvariantError> {
    let all = resolutions(d, s)?;
    let per: Result<Vec<BTreeSet<usize>>, InvariantError> = s
        .strategy
        .map(&all, |r| {
            let cs = find_colorings(&d.resolve(r)?, p, false, s.enumeration_cap)?;
            Ok(cs.iter().map(count_colors).collect())
        })
        .into_iter()
        .collect();
    Ok(per?.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> PseudoDiagram {
        PseudoDiagram::from_symbol(s).unwrap()
    }

    #[test]
    fn trefoil_colorings_use_three_colors() {
        let cs = find_colorings(&d("3"), 3, false, 1000).unwrap();
        assert_eq!(cs.len(), 6);
        assert!(cs.iter().all(|c| count_colors(c) == 3));
    }

    #[test]
    fn constant_coloring_counts_one() {
        let c = Coloring { modulus: 5, values: vec![2, 2, 2] };
        assert!(c.is_trivial());
        assert_eq!(count_colors(&c), 1);
    }

    #[test]
    fn knot_without_coloring() {
        assert!(find_colorings(&d("3"), 5, false, 1000).unwrap().is_empty());
    }

    #[test]
    fn figure_eight_mod_five() {
        let r = kh_property(&d("2 2"), &Settings::default()).unwrap();
        assert_eq!(r.modulus, 5);
        assert!(r.holds);
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn kh_needs_modulus() {
        assert!(matches!(
            kh_property(&d("1"), &Settings::default()),
            Err(InvariantError::UndefinedForPseudodetBelow2(1))
        ));
    }
}
