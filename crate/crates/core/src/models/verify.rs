use serde::Serialize;

use crate::calculus::{extend_differential, maurer_cartan_defect};
use crate::error::{Error, Result};
use crate::lie::serial::{series_spec, SeriesSpec};
use crate::lie::{AlgebraElement, GeneratorMorphism};

use super::CellModel;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// The offending nonzero element when the check fails.
    pub witness: Option<AlgebraElement>,
}

impl Check {
    /// Passes iff `residual` is zero; otherwise keeps it as the witness.
    pub fn vanishing(name: impl Into<String>, residual: AlgebraElement) -> Self {
        let passed = residual.is_zero();
        Self { name: name.into(), passed, witness: (!passed).then_some(residual) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub model: String,
    pub order: usize,
    pub checks: Vec<Check>,
}

#[derive(Serialize)]
struct CheckJson {
    name: String,
    passed: bool,
    witness: Option<SeriesSpec>,
}

#[derive(Serialize)]
struct ReportJson {
    model: String,
    order: usize,
    passed: bool,
    checks: Vec<CheckJson>,
}

impl VerificationReport {
    pub fn new(model: impl Into<String>, order: usize) -> Self {
        Self { model: model.into(), order, checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let report = ReportJson {
            model: self.model.clone(),
            order: self.order,
            passed: self.passed(),
            checks: self
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.name.clone(),
                    passed: c.passed,
                    witness: c.witness.as_ref().map(|w| series_spec(w, &c.name)),
                })
                .collect(),
        };
        serde_json::to_value(report).expect("report serializes")
    }
}

/// Runs, per generator: `D²c = 0`, the Maurer-Cartan equation for vertices,
/// `weight-1 part of Dc = ∂₀c`, and locality of `Dc`.
pub fn verify_model(m: &CellModel) -> Result<VerificationReport> {
    let ctx = m.context();
    let mut report = VerificationReport::new(m.name(), m.order());
    for (g, cell) in ctx.generators().iter().zip(m.cells()) {
        let dd = extend_differential(m, &cell.differential)?;
        report.push(Check::vanishing(format!("d_squared({})", g.name), dd));
    }
    for g in ctx.generators().iter().filter(|g| g.degree == -1) {
        let defect = maurer_cartan_defect(m, &AlgebraElement::generator(ctx, g.index))?;
        report.push(Check::vanishing(format!("maurer_cartan({})", g.name), defect));
    }
    for (g, cell) in ctx.generators().iter().zip(m.cells()) {
        let mismatch = &cell.differential.weight_component(1) - &cell.boundary;
        report.push(Check::vanishing(format!("boundary({})", g.name), mismatch));
    }
    for (g, cell) in ctx.generators().iter().zip(m.cells()) {
        let outside = AlgebraElement::from_terms(
            ctx,
            cell.differential
                .terms()
                .filter(|(w, _)| w.letters().iter().any(|l| !cell.closure.contains(&(*l as usize))))
                .map(|(w, c)| (w.clone(), c.clone())),
        )?;
        report.push(Check::vanishing(format!("locality({})", g.name), outside));
    }
    Ok(report)
}

/// Passes iff `mor(Dc) = D(mor c)` for every generator `c`.
pub fn check_equivariance(m: &CellModel, mor: &GeneratorMorphism, label: &str) -> Result<VerificationReport> {
    if **mor.context() != **m.context() {
        return Err(Error::ContextMismatch);
    }
    let mut report = VerificationReport::new(m.name(), m.order());
    for (i, g) in m.context().generators().iter().enumerate() {
        let lhs = mor.apply(&m.cell(i).differential)?;
        let rhs = extend_differential(m, &mor.apply_generator(i))?;
        report.push(Check::vanishing(format!("equivariance[{label}]({})", g.name), lhs - rhs));
    }
    Ok(report)
}
