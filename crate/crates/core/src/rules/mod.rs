//! Structural rules for block systems of Hopf algebras, checked on concrete
//! inputs. A failing rule on valid input means a bug somewhere upstream (or
//! a counterexample), so every `Fail` carries a witness.

mod blocks;
mod translate;

pub use blocks::{verify_cor2, verify_cor3, verify_cor4_prop3, verify_prop1_3};
pub use translate::verify_cor1;

use serde::Serialize;

use crate::coalgebra::HopfData;
use crate::exactlin::Field;
use crate::filtration::{Analysis, BlockSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleId {
    Cor1,
    Cor2,
    Cor3,
    Cor4,
    Prop1_3,
    Prop3_1,
    Prop3_2,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        match self {
            RuleId::Cor1 => "cor1",
            RuleId::Cor2 => "cor2",
            RuleId::Cor3 => "cor3",
            RuleId::Cor4 => "cor4",
            RuleId::Prop1_3 => "prop1-3",
            RuleId::Prop3_1 => "prop3-1",
            RuleId::Prop3_2 => "prop3-2",
        }
    }
}

impl std::fmt::Display for RuleId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleReport {
    pub rule: RuleId,
    pub applicable: bool,
    pub verdict: Verdict,
    /// Offending block or indices; present exactly when `verdict == Fail`.
    pub witness: Option<String>,
    /// Number of individual conditions evaluated.
    pub checks: usize,
    /// Why the rule does not apply, when it does not.
    pub note: Option<String>,
}

impl RuleReport {
    pub(crate) fn not_applicable(rule: RuleId, why: &str) -> Self {
        RuleReport { rule, applicable: false, verdict: Verdict::NotApplicable, witness: None, checks: 0, note: Some(why.into()) }
    }

    pub(crate) fn from_checks(rule: RuleId, checks: usize, failure: Option<String>) -> Self {
        let verdict = if failure.is_some() { Verdict::Fail } else { Verdict::Pass };
        RuleReport { rule, applicable: true, verdict, witness: failure, checks, note: None }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

/// Accumulates checks and keeps the first failure.
#[derive(Default)]
pub(crate) struct Checker {
    checks: usize,
    failure: Option<String>,
}

impl Checker {
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    pub fn report(self, rule: RuleId) -> RuleReport {
        RuleReport::from_checks(rule, self.checks, self.failure)
    }
}

/// All rules on an analyzed Hopf algebra, in rule order.
pub fn verify_all<F: Field>(h: &HopfData<F>, analysis: &Analysis<F>) -> Vec<RuleReport> {
    verify_all_with(h, analysis, &analysis.block_system)
}

/// As [`verify_all`], but reading block data from `bs` (which may differ
/// from the computed one in tests).
pub fn verify_all_with<F: Field>(h: &HopfData<F>, analysis: &Analysis<F>, bs: &BlockSystem) -> Vec<RuleReport> {
    let mut out = vec![verify_cor1(h, analysis, bs), verify_cor2(bs), verify_cor3(bs)];
    out.extend(verify_cor4_prop3(bs));
    out.push(verify_prop1_3(bs));
    out
}
