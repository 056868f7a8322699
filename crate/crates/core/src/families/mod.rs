//! Parametric pseudoknot families with closed-form pseudodeterminants.
//!
//! Each row pairs a Conway-notation template with a formula. Verification
//! instantiates the template over a grid of parameter values, computes the
//! pseudodeterminant of every member and compares it with the formula.
//! Disagreements are reported, not treated as errors.

mod formula;
mod table;

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{polyhedra, DiagramError, PseudoDiagram};
use crate::invariants::{self, InvariantError, Settings};
use crate::notation::{self, ConwayExpr, Elementary, ParseError};

pub use formula::{evaluate, variables, Params};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("formula {formula}: {message}")]
    Formula { formula: String, message: String },
    #[error("unknown family row {0}")]
    UnknownRow(u32),
    #[error("parameter {name} = {value} is below 1")]
    OutOfDomain { name: char, value: i64 },
    #[error("missing value for parameter {0}")]
    MissingParameter(char),
    #[error("formula value {0} is negative")]
    NegativeFormula(i128),
    #[error("template {template}: {source}")]
    Template { template: String, source: ParseError },
    #[error("no pseudotwist at location {0}")]
    NoPseudotwistAtLocation(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// One row of the family table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub row: u32,
    /// Conway notation with `{...}` placeholders over the parameters.
    pub template: &'static str,
    pub formula: &'static str,
}

/// All rows, ordered by row number.
pub fn family_table() -> &'static [FamilySpec] {
    &table::TABLE
}

pub fn family(row: u32) -> Result<&'static FamilySpec, FamilyError> {
    family_table().iter().find(|f| f.row == row).ok_or(FamilyError::UnknownRow(row))
}

impl FamilySpec {
    /// Parameters in alphabetical order.
    pub fn parameters(&self) -> Vec<char> {
        let mut vars = variables(self.formula);
        for c in placeholders(self.template).iter().flat_map(|p| variables(p)) {
            if !vars.contains(&c) {
                vars.push(c);
            }
        }
        vars.sort_unstable();
        vars
    }

    fn check(&self, params: &Params) -> Result<(), FamilyError> {
        for name in self.parameters() {
            let value = *params.get(&name).ok_or(FamilyError::MissingParameter(name))?;
            if value < 1 {
                return Err(FamilyError::OutOfDomain { name, value });
            }
        }
        Ok(())
    }

    /// The member's Conway symbol.
    pub fn symbol(&self, params: &Params) -> Result<String, FamilyError> {
        self.check(params)?;
        let mut out = String::new();
        let mut rest = self.template;
        while let Some(open) = rest.find('{') {
            let close = open + rest[open..].find('}').expect("balanced placeholder");
            out.push_str(&rest[..open]);
            write!(out, "{}", evaluate(&rest[open + 1..close], params)?).expect("write to string");
            rest = &rest[close + 1..];
        }
        out.push_str(rest);
        Ok(out)
    }

    pub fn expression(&self, params: &Params) -> Result<ConwayExpr, FamilyError> {
        let symbol = self.symbol(params)?;
        notation::parse(&symbol).map_err(|source| FamilyError::Template { template: symbol, source })
    }

    pub fn instantiate(&self, params: &Params) -> Result<PseudoDiagram, FamilyError> {
        Ok(PseudoDiagram::from_expr(&self.expression(params)?)?)
    }

    /// Instantiate with a given set of polyhedron templates.
    pub fn instantiate_in(&self, registry: &polyhedra::Registry, params: &Params) -> Result<PseudoDiagram, FamilyError> {
        Ok(registry.build(&self.expression(params)?)?)
    }

    pub fn predicted_d(&self, params: &Params) -> Result<u64, FamilyError> {
        self.check(params)?;
        let v = evaluate(self.formula, params)?;
        u64::try_from(v).map_err(|_| FamilyError::NegativeFormula(v))
    }

    /// Every combination of `values` for each parameter, in lexicographic
    /// order of the sorted parameter names.
    pub fn grid(&self, values: &[i64]) -> Vec<Params> {
        let mut points = vec![Params::new()];
        for name in self.parameters() {
            points = points
                .into_iter()
                .flat_map(|p| {
                    values.iter().map(move |&v| {
                        let mut q = p.clone();
                        q.insert(name, v);
                        q
                    })
                })
                .collect();
        }
        points
    }

    /// The default grid: every parameter over `{1, 2}`.
    pub fn default_grid(&self) -> Vec<Params> {
        self.grid(&DEFAULT_GRID)
    }
}

pub const DEFAULT_GRID: [i64; 2] = [1, 2];

fn placeholders(template: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut rest = template;
    while let Some(open) = rest.find('{') {
        let close = open + rest[open..].find('}').expect("balanced placeholder");
        out.push(&rest[open + 1..close]);
        rest = &rest[close + 1..];
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointResult {
    pub params: Params,
    pub symbol: String,
    pub computed: Option<u64>,
    pub predicted: Option<u64>,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    /// Every point matches.
    Pass,
    /// Some point disagrees with the formula.
    Flagged,
    /// Some point could not be computed.
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub row: u32,
    pub template: String,
    pub formula: String,
    pub results: Vec<PointResult>,
    pub status: RowStatus,
}

impl VerificationReport {
    fn new(spec: &FamilySpec, results: Vec<PointResult>) -> Self {
        let status = if results.iter().any(|r| r.error.is_some()) {
            RowStatus::Fail
        } else if results.iter().all(|r| r.matches) {
            RowStatus::Pass
        } else {
            RowStatus::Flagged
        };
        VerificationReport {
            row: spec.row,
            template: spec.template.to_string(),
            formula: spec.formula.to_string(),
            results,
            status,
        }
    }

    pub fn mismatches(&self) -> usize {
        self.results.iter().filter(|r| !r.matches).count()
    }
}

fn evaluate_point(spec: &FamilySpec, params: &Params, s: &Settings) -> PointResult {
    let symbol = spec.symbol(params).unwrap_or_default();
    let predicted = spec.predicted_d(params);
    let computed = spec
        .instantiate(params)
        .and_then(|d| Ok(invariants::pseudodeterminant_with(&d, &Settings { strategy: crate::exec::Strategy::Sequential, ..*s })?));
    let error = match (&predicted, &computed) {
        (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
        _ => None,
    };
    let (computed, predicted) = (computed.ok(), predicted.ok());
    PointResult { params: params.clone(), symbol, matches: error.is_none() && computed == predicted, computed, predicted, error }
}

/// Compare computed and predicted values over `grid`.
pub fn verify_row(spec: &FamilySpec, grid: &[Params], s: &Settings) -> VerificationReport {
    let results = s.strategy.map(grid, |p| evaluate_point(spec, p, s));
    VerificationReport::new(spec, results)
}

/// Verify several rows, each over `values` for every parameter. Work is
/// spread over all (row, point) pairs; reports come back in row order.
pub fn verify_rows(rows: &[&FamilySpec], values: &[i64], s: &Settings) -> Vec<VerificationReport> {
    let jobs: Vec<(usize, Params)> =
        rows.iter().enumerate().flat_map(|(i, spec)| spec.grid(values).into_iter().map(move |p| (i, p))).collect();
    let mut results = s.strategy.map(&jobs, |(i, p)| evaluate_point(rows[*i], p, s)).into_iter();
    rows.iter()
        .map(|spec| {
            let n = spec.grid(values).len();
            VerificationReport::new(spec, results.by_ref().take(n).collect())
        })
        .collect()
}

/// Plain-text summary table.
pub fn render_reports(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    writeln!(out, "{:>4}  {:<8} {:>7}  template", "row", "status", "matches").expect("write");
    for r in reports {
        let status = match r.status {
            RowStatus::Pass => "pass",
            RowStatus::Flagged => "FLAGGED",
            RowStatus::Fail => "FAIL",
        };
        writeln!(out, "{:>4}  {:<8} {:>3}/{:<3}  {}", r.row, status, r.results.len() - r.mismatches(), r.results.len(), r.template)
            .expect("write");
        for p in r.results.iter().filter(|p| !p.matches) {
            let params: Vec<String> = p.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let show = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
            match &p.error {
                Some(e) => writeln!(out, "        {}: {} error: {e}", params.join(","), p.symbol),
                None => writeln!(
                    out,
                    "        {}: {} computed {} predicted {}",
                    params.join(","),
                    p.symbol,
                    show(p.computed),
                    show(p.predicted)
                ),
            }
            .expect("write");
        }
    }
    out
}

/// Tangles that may stand in for a single pseudotwist `(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Replacement {
    IOneOne,
    IMinusOneMinusOne,
    IIOne,
    IIMinusOne,
    III,
    IOneMinusOne,
}

impl Replacement {
    pub const ALL: [Replacement; 6] = [
        Replacement::IOneOne,
        Replacement::IMinusOneMinusOne,
        Replacement::IIOne,
        Replacement::IIMinusOne,
        Replacement::III,
        Replacement::IOneMinusOne,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Replacement::IOneOne => "(i,1,1)",
            Replacement::IMinusOneMinusOne => "(i,-1,-1)",
            Replacement::IIOne => "(i,i,1)",
            Replacement::IIMinusOne => "(i,i,-1)",
            Replacement::III => "(i,i,i)",
            Replacement::IOneMinusOne => "(i,1,-1)",
        }
    }

    pub fn expression(self) -> ConwayExpr {
        notation::parse(self.symbol()).expect("replacement symbols parse")
    }
}

/// Number of single pseudotwists `i` in the expression.
pub fn pseudotwist_count(expr: &ConwayExpr) -> usize {
    match expr {
        ConwayExpr::Elementary(Elementary::Pre) => 1,
        ConwayExpr::Elementary(_) | ConwayExpr::Twist { .. } => 0,
        ConwayExpr::Product(a, b) | ConwayExpr::Sum(a, b) => pseudotwist_count(a) + pseudotwist_count(b),
        ConwayExpr::Mirror(a) => pseudotwist_count(a),
        ConwayExpr::Ramification(v) | ConwayExpr::Polyhedral { slots: v, .. } => v.iter().map(pseudotwist_count).sum(),
    }
}

/// Replace the `location`-th pseudotwist `i` (counting from 0 in reading
/// order) by `with`.
pub fn replace_pseudotwist(expr: &ConwayExpr, location: usize, with: &ConwayExpr) -> Result<ConwayExpr, FamilyError> {
    fn go(e: &ConwayExpr, seen: &mut usize, at: usize, with: &ConwayExpr) -> ConwayExpr {
        let mut rec = |x: &ConwayExpr| go(x, seen, at, with);
        match e {
            ConwayExpr::Elementary(Elementary::Pre) => {
                let hit = *seen == at;
                *seen += 1;
                if hit {
                    with.clone()
                } else {
                    e.clone()
                }
            }
            ConwayExpr::Elementary(_) | ConwayExpr::Twist { .. } => e.clone(),
            ConwayExpr::Product(a, b) => {
                let a = rec(a);
                ConwayExpr::Product(Box::new(a), Box::new(rec(b)))
            }
            ConwayExpr::Sum(a, b) => {
                let a = rec(a);
                ConwayExpr::Sum(Box::new(a), Box::new(rec(b)))
            }
            ConwayExpr::Mirror(a) => ConwayExpr::Mirror(Box::new(rec(a))),
            ConwayExpr::Ramification(v) => ConwayExpr::Ramification(v.iter().map(rec).collect()),
            ConwayExpr::Polyhedral { vertices, index, slots } => {
                ConwayExpr::Polyhedral { vertices: *vertices, index: *index, slots: slots.iter().map(rec).collect() }
            }
        }
    }
    if location >= pseudotwist_count(expr) {
        return Err(FamilyError::NoPseudotwistAtLocation(location));
    }
    Ok(go(expr, &mut 0, location, with))
}

/// Whether replacing a pseudotwist leaves the pseudodeterminant unchanged.
pub fn twist_replacement_check(expr: &ConwayExpr, location: usize, replacement: Replacement) -> Result<bool, FamilyError> {
    let replaced = replace_pseudotwist(expr, location, &replacement.expression())?;
    let before = invariants::pseudodeterminant(&PseudoDiagram::from_expr(expr)?)?;
    let after = invariants::pseudodeterminant(&PseudoDiagram::from_expr(&replaced)?)?;
    Ok(before == after)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(pairs: &[(char, i64)]) -> Params {
        pairs.iter().copied().collect()
    }

    #[test]
    fn table_is_complete_and_ordered() {
        let t = family_table();
        assert_eq!(t.len(), 62);
        assert!(t.iter().enumerate().all(|(i, f)| f.row == i as u32 + 1));
    }

    #[test]
    fn every_row_instantiates() {
        for f in family_table() {
            for p in f.default_grid() {
                let symbol = f.symbol(&p).unwrap();
                notation::parse(&symbol).unwrap_or_else(|e| panic!("row {}: {symbol}: {e}", f.row));
                assert!(f.predicted_d(&p).is_ok(), "row {}", f.row);
            }
        }
    }

    #[test]
    fn symbols() {
        let one = at(&[('p', 1), ('q', 1), ('k', 1)]);
        assert_eq!(family(1).unwrap().symbol(&one).unwrap(), "(3) (i^1) (3)");
        assert_eq!(family(2).unwrap().symbol(&one).unwrap(), "(3) (i^1) -(3)");
        let big = at(&[('p', 22), ('q', 4), ('k', 1)]);
        assert_eq!(family(1).unwrap().symbol(&big).unwrap(), "(45) (i^1) (9)");
        assert_eq!(family(1).unwrap().predicted_d(&big).unwrap(), 27);
        assert_eq!(family(1).unwrap().parameters(), vec!['k', 'p', 'q']);
        assert_eq!(family(17).unwrap().parameters(), vec!['k', 'm']);
    }

    #[test]
    fn domain_checks() {
        let f = family(1).unwrap();
        assert_eq!(f.symbol(&at(&[('p', 0), ('q', 1), ('k', 1)])), Err(FamilyError::OutOfDomain { name: 'p', value: 0 }));
        assert_eq!(f.symbol(&at(&[('p', 1), ('k', 1)])), Err(FamilyError::MissingParameter('q')));
        assert_eq!(family(99), Err(FamilyError::UnknownRow(99)));
    }

    #[test]
    fn grid_order() {
        let g = family(17).unwrap().default_grid();
        let pts: Vec<(i64, i64)> = g.iter().map(|p| (p[&'k'], p[&'m'])).collect();
        assert_eq!(pts, vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
    }

    #[test]
    fn replacement_locations() {
        let e = notation::parse("3 i 3").unwrap();
        assert_eq!(pseudotwist_count(&e), 1);
        let r = replace_pseudotwist(&e, 0, &Replacement::III.expression()).unwrap();
        assert_eq!(r, notation::parse("3 (i,i,i) 3").unwrap());
        assert_eq!(replace_pseudotwist(&e, 1, &r), Err(FamilyError::NoPseudotwistAtLocation(1)));
    }

    #[test]
    fn row_one_base_point() {
        let f = family(1).unwrap();
        let r = verify_row(f, &[at(&[('p', 1), ('q', 1), ('k', 1)])], &Settings::default());
        assert_eq!(r.status, RowStatus::Pass);
        assert_eq!(r.results[0].computed, Some(3));
    }
}
