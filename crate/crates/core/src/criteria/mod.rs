//! The decision engine: existence rules first, then the nonexistence
//! criteria in a fixed order, producing a [`Verdict`].

mod existence;
mod nonexist;
mod report;

use serde::{Deserialize, Serialize};

pub use existence::{build_witness, construction_steps, existence_rule, rule_exists};
pub use nonexist::{
    crit_lam_leung, crit_p3_x_p5, crit_p7, crit_p7_x_p35, crit_semiprimitive, evaluate, Outcome,
};
pub use report::{
    Branch, CriterionId, CriterionReport, Descent, Evidence, ExcludedRange, OrderOfTwo,
    Propagation, RSearch, RuleId, SemiprimitiveCase,
};

use crate::error::{Error, Result};
use crate::gbf::{is_gbf, FunctionTable, GbfType};

/// Largest `n` [`decide`] accepts.
pub const MAX_DECIDE_VARS: u32 = 24;

/// Largest `n` for which [`decide`] materializes and verifies the witness.
pub const WITNESS_VARS: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AttemptStatus {
    NotApplicable,
    Abstained,
    DoesNotFire,
}

/// One criterion's outcome on a type it did not settle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attempt {
    pub criterion: CriterionId,
    pub status: AttemptStatus,
    pub detail: String,
    pub report: Option<CriterionReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    Exists {
        gbf_type: GbfType,
        rule: RuleId,
        construction: Vec<String>,
        /// Present when `n <= WITNESS_VARS`.
        witness: Option<FunctionTable>,
        /// The witness passed the exact bentness check.
        verified: bool,
    },
    NotExists {
        report: CriterionReport,
    },
    Unknown {
        gbf_type: GbfType,
        attempts: Vec<Attempt>,
    },
}

impl Verdict {
    pub fn gbf_type(&self) -> GbfType {
        match self {
            Verdict::Exists { gbf_type, .. } | Verdict::Unknown { gbf_type, .. } => *gbf_type,
            Verdict::NotExists { report } => report.gbf_type,
        }
    }

    /// 0 for Exists, 1 for NotExists, 2 for Unknown.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Exists { .. } => 0,
            Verdict::NotExists { .. } => 1,
            Verdict::Unknown { .. } => 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Exists { .. } => "Exists",
            Verdict::NotExists { .. } => "NotExists",
            Verdict::Unknown { .. } => "Unknown",
        }
    }

    /// The rule or criterion id behind the verdict; empty for Unknown.
    pub fn citation(&self) -> String {
        match self {
            Verdict::Exists { rule, .. } => rule.to_string(),
            Verdict::NotExists { report } => report.cited().to_string(),
            Verdict::Unknown { .. } => String::new(),
        }
    }

    pub fn report(&self) -> Option<&CriterionReport> {
        match self {
            Verdict::NotExists { report } => Some(report),
            _ => None,
        }
    }
}

/// Decides whether a GBF of type `t` exists. Deterministic.
pub fn decide(t: GbfType) -> Result<Verdict> {
    if t.n > MAX_DECIDE_VARS {
        return Err(Error::OutOfRange { what: "n", value: t.n as u64 });
    }
    if let Some(rule) = existence_rule(t) {
        let construction = construction_steps(t, rule);
        let witness = if t.n <= WITNESS_VARS { Some(build_witness(t, rule)?) } else { None };
        let verified = witness.as_ref().is_some_and(is_gbf);
        assert!(witness.is_none() || verified, "construction for {t} failed verification");
        return Ok(Verdict::Exists { gbf_type: t, rule, construction, witness, verified });
    }
    let outcomes: Vec<(CriterionId, Outcome)> =
        CriterionId::ALL.iter().map(|&id| (id, evaluate(id, t))).collect();
    let firing: Vec<&CriterionReport> = outcomes.iter().filter_map(|(_, o)| o.fired()).collect();
    if let Some((first, rest)) = firing.split_first() {
        let mut report = (*first).clone();
        report.also_applicable = rest.iter().map(|r| r.criterion).collect();
        return Ok(Verdict::NotExists { report });
    }
    let attempts = outcomes
        .into_iter()
        .map(|(criterion, o)| match o {
            Outcome::NotApplicable(detail) => {
                Attempt { criterion, status: AttemptStatus::NotApplicable, detail, report: None }
            }
            Outcome::Abstain(detail) => {
                Attempt { criterion, status: AttemptStatus::Abstained, detail, report: None }
            }
            Outcome::Evaluated(r) => Attempt {
                criterion,
                status: AttemptStatus::DoesNotFire,
                detail: format!("{}; excludes {}", r.summary(), r.excluded),
                report: Some(r),
            },
        })
        .collect();
    Ok(Verdict::Unknown { gbf_type: t, attempts })
}
