use super::report::RuleId;
use crate::error::{Error, Result};
use crate::gbf::{
    construct_boolean_bent, construct_even_even, construct_mod4_from_bent, is_gbf, lift_modulus,
    FunctionTable, GbfType, MAX_TABLE_VARS,
};

/// The existence rule covering `t`, if any. Checked as: boolean bent,
/// then even/even, then `4 | m`.
pub fn existence_rule(t: GbfType) -> Option<RuleId> {
    match (t.m, t.n % 2 == 0) {
        (2, true) => Some(RuleId::BooleanBent),
        (m, true) if m % 2 == 0 => Some(RuleId::EvenEven),
        (m, _) if m % 4 == 0 => Some(RuleId::Mod4Lift),
        _ => None,
    }
}

/// Human-readable steps of the construction behind `rule`.
pub fn construction_steps(t: GbfType, rule: RuleId) -> Vec<String> {
    let GbfType { m, n } = t;
    match rule {
        RuleId::BooleanBent => vec![format!("{} on {n} variables", pairing_sum(n))],
        RuleId::EvenEven => vec![format!(
            "f(x, y) = {}*(x . y) with x, y in Z_2^{} (g = 0, sigma = identity)",
            m / 2,
            n / 2
        )],
        RuleId::Mod4Lift => {
            let mut steps = vec![
                format!("boolean bent {} on {} variables", pairing_sum(n + 1), n + 1),
                format!("split on the top variable into a {{4,{n}}} GBF"),
            ];
            if m > 4 {
                steps.push(format!("multiply by {} to reach {{{m},{n}}}", m / 4));
            }
            steps
        }
    }
}

/// `x1x2 + x3x4 + ... ` over `k` (even) variables.
fn pairing_sum(k: u32) -> String {
    if k <= 6 {
        (1..k).step_by(2).map(|i| format!("x{i}x{}", i + 1)).collect::<Vec<_>>().join(" + ")
    } else {
        format!("x1x2 + x3x4 + ... + x{}x{k}", k - 1)
    }
}

/// The witness table for `t` under `rule`, unverified.
pub fn build_witness(t: GbfType, rule: RuleId) -> Result<FunctionTable> {
    if existence_rule(t) != Some(rule) {
        return Err(Error::NoConstruction { m: t.m, n: t.n });
    }
    match rule {
        RuleId::BooleanBent => construct_boolean_bent(t.n),
        RuleId::EvenEven => construct_even_even(t.m, t.n, None, None),
        RuleId::Mod4Lift => {
            if t.n + 1 > MAX_TABLE_VARS {
                return Err(Error::OutOfRange { what: "table variables", value: t.n as u64 + 1 });
            }
            let f4 = construct_mod4_from_bent(&construct_boolean_bent(t.n + 1)?)?;
            if t.m == 4 {
                Ok(f4)
            } else {
                lift_modulus(&f4, t.m / 4)
            }
        }
    }
}

/// A verified witness for `t`, with the rule that produced it.
pub fn rule_exists(t: GbfType) -> Option<(FunctionTable, RuleId)> {
    let rule = existence_rule(t)?;
    let f = build_witness(t, rule).ok()?;
    is_gbf(&f).then_some((f, rule))
}
