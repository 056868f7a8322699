use std::collections::BTreeMap;
use std::fmt::Write as _;

use pseudoknot::diagram::DiagramJson;
use pseudoknot::exec::Strategy;
use pseudoknot::families::{self, FamilySpec, VerificationReport};
use pseudoknot::invariants::{self, count_colors, Coloring, KhReport, PseudoDetReport, Settings};
use pseudoknot::notation::{self, ConwayExpr};
use pseudoknot::PseudoDiagram;
use serde::Serialize;

/// How a command failed; decides the exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad symbol, cap exceeded and similar. Exit 1.
    Domain(String),
    /// Bad flags or arguments. Exit 2.
    Usage(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Usage(m) => m,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

/// A command result printable as JSON or plain text.
pub trait Render: Serialize {
    fn text(&self) -> String;
}

fn diagram(symbol: &str) -> Result<PseudoDiagram, Failure> {
    PseudoDiagram::from_symbol(symbol).map_err(domain)
}

#[derive(Serialize)]
pub struct ParseOutput {
    pub symbol: String,
    pub unreduced: String,
    pub reduced: String,
    pub root: &'static str,
    pub crossings: usize,
    pub precrossings: usize,
    pub components: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<DiagramJson>,
}

fn root_kind(e: &ConwayExpr) -> &'static str {
    match e {
        ConwayExpr::Elementary(_) => "elementary",
        ConwayExpr::Twist { .. } => "twist",
        ConwayExpr::Product(..) => "product",
        ConwayExpr::Sum(..) => "sum",
        ConwayExpr::Ramification(_) => "ramification",
        ConwayExpr::Mirror(_) => "mirror",
        ConwayExpr::Polyhedral { .. } => "polyhedral",
    }
}

pub fn parse(symbol: &str, emit_diagram: bool) -> Result<ParseOutput, Failure> {
    let expr = notation::parse(symbol).map_err(domain)?;
    let d = PseudoDiagram::from_expr(&expr).map_err(domain)?;
    Ok(ParseOutput {
        symbol: symbol.to_string(),
        unreduced: notation::render(&expr, false),
        reduced: notation::render(&expr, true),
        root: root_kind(&expr),
        crossings: d.node_count(),
        precrossings: d.precrossing_count(),
        components: d.component_count(),
        diagram: emit_diagram.then(|| d.to_json()),
    })
}

impl Render for ParseOutput {
    fn text(&self) -> String {
        let mut out = format!(
            "{}\nreduced: {}\nroot: {}\ncrossings: {} ({} precrossings)\ncomponents: {}\n",
            self.unreduced, self.reduced, self.root, self.crossings, self.precrossings, self.components
        );
        if let Some(d) = &self.diagram {
            out.push_str(&serde_json::to_string_pretty(d).expect("diagram serializes"));
            out.push('\n');
        }
        out
    }
}

#[derive(Serialize)]
pub struct DetOutput {
    pub symbol: String,
    pub determinant: u64,
}

pub fn det(symbol: &str) -> Result<DetOutput, Failure> {
    let determinant = invariants::determinant(&diagram(symbol)?).map_err(domain)?;
    Ok(DetOutput { symbol: symbol.to_string(), determinant })
}

impl Render for DetOutput {
    fn text(&self) -> String {
        format!("{}\n", self.determinant)
    }
}

pub fn pseudodet(symbol: &str, s: &Settings) -> Result<PseudoDetReport, Failure> {
    invariants::pseudodet_report_with(&diagram(symbol)?, symbol, s).map_err(domain)
}

impl Render for PseudoDetReport {
    fn text(&self) -> String {
        let mut out = format!("{}\n", self.pseudodet);
        for r in &self.resolutions {
            let label = if r.assignment.is_empty() { "(classical)" } else { &r.assignment };
            writeln!(out, "  {label} {}", r.det).expect("write");
        }
        out
    }
}

#[derive(Serialize)]
pub struct ColoringView {
    pub values: Vec<u64>,
    pub colors: usize,
}

impl From<&Coloring> for ColoringView {
    fn from(c: &Coloring) -> Self {
        ColoringView { values: c.values.clone(), colors: count_colors(c) }
    }
}

fn values_text(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
pub struct ColorableOutput {
    pub symbol: String,
    pub modulus: u64,
    pub colorable: bool,
    /// One nontrivial coloring per resolution, when asked for and colorable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<BTreeMap<String, ColoringView>>,
}

pub fn colorable(symbol: &str, p: u64, witness: bool, s: &Settings) -> Result<ColorableOutput, Failure> {
    let d = diagram(symbol)?;
    let ok = invariants::is_colorable_with(&d, p, s).map_err(domain)?;
    let witnesses = if witness && ok {
        let mut map = BTreeMap::new();
        for r in d.resolutions(s.max_precrossings).map_err(domain)? {
            let resolved = d.resolve(&r).map_err(domain)?;
            let found = invariants::find_colorings(&resolved, p, false, s.enumeration_cap).map_err(domain)?;
            if let Some(c) = found.first() {
                map.insert(r.to_string(), c.into());
            }
        }
        Some(map)
    } else {
        None
    };
    Ok(ColorableOutput { symbol: symbol.to_string(), modulus: p, colorable: ok, witnesses })
}

impl Render for ColorableOutput {
    fn text(&self) -> String {
        let mut out = format!("{}\n", self.colorable);
        for (a, c) in self.witnesses.iter().flatten() {
            let label = if a.is_empty() { "(classical)" } else { a };
            writeln!(out, "  {label}: {} ({} colors)", values_text(&c.values), c.colors).expect("write");
        }
        out
    }
}

#[derive(Serialize)]
pub struct StrongOutput {
    pub symbol: String,
    pub modulus: u64,
    pub strong: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ColoringView>,
}

pub fn strong(symbol: &str, p: u64, witness: bool, s: &Settings) -> Result<StrongOutput, Failure> {
    let d = diagram(symbol)?;
    let ok = invariants::is_strong_colorable(&d, p).map_err(domain)?;
    let witness = if witness && ok {
        let found = invariants::find_colorings(&d, p, true, s.enumeration_cap).map_err(domain)?;
        found.first().map(ColoringView::from)
    } else {
        None
    };
    Ok(StrongOutput { symbol: symbol.to_string(), modulus: p, strong: ok, witness })
}

impl Render for StrongOutput {
    fn text(&self) -> String {
        let mut out = format!("{}\n", self.strong);
        if let Some(c) = &self.witness {
            writeln!(out, "  {} ({} colors)", values_text(&c.values), c.colors).expect("write");
        }
        out
    }
}

#[derive(Serialize)]
pub struct SystemColorings {
    /// Resolution assignment; empty for a classical diagram or for the
    /// strong system of the unresolved diagram.
    pub assignment: String,
    pub colorings: Vec<ColoringView>,
}

#[derive(Serialize)]
pub struct ColoringsOutput {
    pub symbol: String,
    pub modulus: u64,
    pub strong: bool,
    pub systems: Vec<SystemColorings>,
    /// Sorted distinct color counts over all listed colorings.
    pub spectrum: Vec<usize>,
}

pub fn colorings(symbol: &str, p: u64, strong: bool, s: &Settings) -> Result<ColoringsOutput, Failure> {
    let d = diagram(symbol)?;
    let mut systems = Vec::new();
    if strong {
        let found = invariants::find_colorings(&d, p, true, s.enumeration_cap).map_err(domain)?;
        systems.push(SystemColorings { assignment: String::new(), colorings: found.iter().map(Into::into).collect() });
    } else {
        for r in d.resolutions(s.max_precrossings).map_err(domain)? {
            let resolved = d.resolve(&r).map_err(domain)?;
            let found = invariants::find_colorings(&resolved, p, false, s.enumeration_cap).map_err(domain)?;
            systems.push(SystemColorings { assignment: r.to_string(), colorings: found.iter().map(Into::into).collect() });
        }
    }
    let mut spectrum: Vec<usize> = systems.iter().flat_map(|x| x.colorings.iter().map(|c| c.colors)).collect();
    spectrum.sort_unstable();
    spectrum.dedup();
    Ok(ColoringsOutput { symbol: symbol.to_string(), modulus: p, strong, systems, spectrum })
}

impl Render for ColoringsOutput {
    fn text(&self) -> String {
        let counts: Vec<String> = self.spectrum.iter().map(usize::to_string).collect();
        let mut out = format!("color counts: {}\n", counts.join(" "));
        for sys in &self.systems {
            let label = match (self.strong, sys.assignment.is_empty()) {
                (true, _) => "strong",
                (false, true) => "(classical)",
                (false, false) => &sys.assignment,
            };
            writeln!(out, "{label}: {} nontrivial colorings", sys.colorings.len()).expect("write");
            for c in &sys.colorings {
                writeln!(out, "  {} ({} colors)", values_text(&c.values), c.colors).expect("write");
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct KhOutput {
    pub symbol: String,
    pub pseudoalternating: bool,
    #[serde(flatten)]
    pub report: KhReport,
    /// Only affects plain-text output.
    #[serde(skip)]
    pub show_witnesses: bool,
}

pub fn kh(symbol: &str, witness: bool, s: &Settings) -> Result<KhOutput, Failure> {
    let d = diagram(symbol)?;
    let report = invariants::kh_property(&d, s).map_err(domain)?;
    Ok(KhOutput { symbol: symbol.to_string(), pseudoalternating: d.is_pseudoalternating(), report, show_witnesses: witness })
}

impl Render for KhOutput {
    fn text(&self) -> String {
        let r = &self.report;
        let mut out = format!("{}\nmodulus: {}\npseudoalternating: {}\n", r.holds, r.modulus, self.pseudoalternating);
        if self.show_witnesses {
            for (a, c) in &r.witnesses {
                let label = if a.is_empty() { "(classical)" } else { a };
                writeln!(out, "  {label}: {} ({} colors)", values_text(&c.values), count_colors(c)).expect("write");
            }
        }
        for f in &r.failures {
            writeln!(out, "  no witness for {f}").expect("write");
        }
        out
    }
}

#[derive(Serialize)]
pub struct ColoringNumbersOutput {
    pub symbol: String,
    pub bound: u64,
    pub numbers: Vec<u64>,
}

pub fn coloring_numbers(symbol: &str, bound: u64, s: &Settings) -> Result<ColoringNumbersOutput, Failure> {
    let numbers = invariants::coloring_numbers_with(&diagram(symbol)?, bound, s).map_err(domain)?;
    Ok(ColoringNumbersOutput { symbol: symbol.to_string(), bound, numbers })
}

impl Render for ColoringNumbersOutput {
    fn text(&self) -> String {
        let ns: Vec<String> = self.numbers.iter().map(u64::to_string).collect();
        format!("{}\n", ns.join(" "))
    }
}

#[derive(Serialize)]
pub struct CensusEntry {
    pub line: usize,
    pub symbol: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pseudodet: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring_numbers: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Serialize)]
pub struct CensusOutput {
    pub bound: u64,
    pub entries: Vec<CensusEntry>,
    /// Number of symbols per pseudodeterminant.
    pub histogram: BTreeMap<u64, usize>,
}

impl CensusOutput {
    pub fn all_failed(&self) -> bool {
        !self.entries.is_empty() && self.entries.iter().all(|e| e.error.is_some())
    }
}

/// Lines of a census file that carry a symbol, with 1-based line numbers.
pub fn symbol_lines(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| {
            let l = l.split('#').next().unwrap_or("").trim();
            (!l.is_empty()).then(|| (i + 1, l.to_string()))
        })
        .collect()
}

pub fn census(text: &str, bound: u64, s: &Settings) -> CensusOutput {
    let lines = symbol_lines(text);
    let inner = Settings { strategy: Strategy::Sequential, ..*s };
    let entries = s.strategy.map(&lines, |(line, symbol)| {
        let computed = diagram(symbol).and_then(|d| {
            let pd = invariants::pseudodeterminant_with(&d, &inner).map_err(domain)?;
            let ns = invariants::coloring_numbers_with(&d, bound, &inner).map_err(domain)?;
            Ok((pd, ns))
        });
        match computed {
            Ok((pd, ns)) => CensusEntry {
                line: *line,
                symbol: symbol.clone(),
                pseudodet: Some(pd),
                coloring_numbers: Some(ns),
                error: None,
            },
            Err(e) => CensusEntry {
                line: *line,
                symbol: symbol.clone(),
                pseudodet: None,
                coloring_numbers: None,
                error: Some(e.message().to_string()),
            },
        }
    });
    let mut histogram = BTreeMap::new();
    for d in entries.iter().filter_map(|e| e.pseudodet) {
        *histogram.entry(d).or_insert(0) += 1;
    }
    CensusOutput { bound, entries, histogram }
}

impl Render for CensusOutput {
    fn text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            match (&e.error, e.pseudodet, &e.coloring_numbers) {
                (Some(err), _, _) => writeln!(out, "{:>4}  {}  error: {err}", e.line, e.symbol),
                (None, Some(d), Some(ns)) => {
                    let ns: Vec<String> = ns.iter().map(u64::to_string).collect();
                    writeln!(out, "{:>4}  {}  d={d}  colorable mod: {}", e.line, e.symbol, ns.join(" "))
                }
                _ => unreachable!("entries carry either an error or both values"),
            }
            .expect("write");
        }
        let parts: Vec<String> = self.histogram.iter().map(|(d, n)| format!("{n} with d={d}")).collect();
        let total: usize = self.histogram.values().sum();
        writeln!(out, "{total} computed: {}", parts.join(", ")).expect("write");
        out
    }
}

#[derive(Serialize)]
pub struct FamilyView {
    pub row: u32,
    pub template: String,
    pub formula: String,
    pub parameters: Vec<String>,
}

impl From<&FamilySpec> for FamilyView {
    fn from(f: &FamilySpec) -> Self {
        FamilyView {
            row: f.row,
            template: f.template.to_string(),
            formula: f.formula.to_string(),
            parameters: f.parameters().iter().map(char::to_string).collect(),
        }
    }
}

#[derive(Serialize)]
#[serde(transparent)]
pub struct FamilyList(pub Vec<FamilyView>);

pub fn families_list() -> FamilyList {
    FamilyList(families::family_table().iter().map(Into::into).collect())
}

impl Render for FamilyList {
    fn text(&self) -> String {
        let mut out = String::new();
        for f in &self.0 {
            writeln!(out, "{:>4}  {:<40} {}", f.row, f.template, f.formula).expect("write");
        }
        out
    }
}

pub fn family_row(row: i64) -> Result<&'static FamilySpec, Failure> {
    u32::try_from(row)
        .ok()
        .and_then(|r| families::family(r).ok())
        .ok_or_else(|| Failure::Usage(format!("no family row {row}")))
}

#[derive(Serialize)]
pub struct FamilyShow {
    #[serde(flatten)]
    pub family: FamilyView,
    /// The member with every parameter set to 1.
    pub example: String,
}

pub fn families_show(row: i64) -> Result<FamilyShow, Failure> {
    let spec = family_row(row)?;
    let ones = spec.parameters().into_iter().map(|c| (c, 1)).collect();
    let example = spec.symbol(&ones).map_err(domain)?;
    Ok(FamilyShow { family: spec.into(), example })
}

impl Render for FamilyShow {
    fn text(&self) -> String {
        format!(
            "row {}\ntemplate: {}\nformula: {}\nparameters: {}\nexample: {}\n",
            self.family.row,
            self.family.template,
            self.family.formula,
            self.family.parameters.join(" "),
            self.example
        )
    }
}

#[derive(Serialize)]
#[serde(transparent)]
pub struct Verification(pub Vec<VerificationReport>);

impl Verification {
    /// A point could not be computed; FLAGGED rows do not count.
    pub fn has_errors(&self) -> bool {
        self.0.iter().any(|r| r.status == families::RowStatus::Fail)
    }
}

pub fn families_verify(rows: Option<&[i64]>, grid: &[i64], s: &Settings) -> Result<Verification, Failure> {
    let specs: Vec<&FamilySpec> = match rows {
        Some(rows) => rows.iter().map(|&r| family_row(r)).collect::<Result<_, _>>()?,
        None => families::family_table().iter().collect(),
    };
    Ok(Verification(families::verify_rows(&specs, grid, s)))
}

impl Render for Verification {
    fn text(&self) -> String {
        families::render_reports(&self.0)
    }
}
