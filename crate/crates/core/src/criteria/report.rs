use serde::{Deserialize, Serialize};

use crate::gbf::GbfType;
use crate::numtheory::{
    class_number, euler_phi, factorize, jacobi, mult_order_2, pow_mod, Factorization, PrimePower,
    QuadForm, QuadSolution, SemiprimitiveCheck,
};

/// Frozen identifiers of the nonexistence criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CriterionId {
    #[serde(rename = "C1-LamLeung")]
    LamLeung,
    #[serde(rename = "C2-Semiprimitive")]
    Semiprimitive,
    #[serde(rename = "C3-P7")]
    P7,
    #[serde(rename = "C4-P7xP35")]
    P7xP35,
    #[serde(rename = "C5-P3xP5")]
    P3xP5,
    #[serde(rename = "DIV-Propagation")]
    DivPropagation,
}

impl CriterionId {
    pub const ALL: [CriterionId; 5] = [
        CriterionId::LamLeung,
        CriterionId::Semiprimitive,
        CriterionId::P7,
        CriterionId::P7xP35,
        CriterionId::P3xP5,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CriterionId::LamLeung => "C1-LamLeung",
            CriterionId::Semiprimitive => "C2-Semiprimitive",
            CriterionId::P7 => "C3-P7",
            CriterionId::P7xP35 => "C4-P7xP35",
            CriterionId::P3xP5 => "C5-P3xP5",
            CriterionId::DivPropagation => "DIV-Propagation",
        }
    }
}

impl std::fmt::Display for CriterionId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Frozen identifiers of the existence rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RuleId {
    /// `m` and `n` both even.
    #[serde(rename = "E1-EvenEven")]
    EvenEven,
    /// `4 | m`, via the `{4, n}` split of a boolean bent function.
    #[serde(rename = "E2-Mod4Lift")]
    Mod4Lift,
    /// `m = 2`, `n` even.
    #[serde(rename = "E3-BooleanBent")]
    BooleanBent,
}

impl RuleId {
    pub fn as_str(&self) -> &'static str {
        match self {
            RuleId::EvenEven => "E1-EvenEven",
            RuleId::Mod4Lift => "E2-Mod4Lift",
            RuleId::BooleanBent => "E3-BooleanBent",
        }
    }
}

impl std::fmt::Display for RuleId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which `n` a report rules out for its modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExcludedRange {
    /// No `n`.
    Empty,
    /// Every `n >= 1`.
    All,
    /// Every odd `n`.
    AllOdd,
    /// Odd `n` up to and including `max_n`.
    OddUpTo { max_n: u64 },
    /// Exactly these `n` (all others up to `checked_to` are not excluded).
    Listed { ns: Vec<u32>, checked_to: u32 },
}

impl ExcludedRange {
    pub fn contains(&self, n: u32) -> bool {
        match self {
            ExcludedRange::Empty => false,
            ExcludedRange::All => true,
            ExcludedRange::AllOdd => n % 2 == 1,
            ExcludedRange::OddUpTo { max_n } => n % 2 == 1 && n as u64 <= *max_n,
            ExcludedRange::Listed { ns, .. } => ns.contains(&n),
        }
    }
}

impl std::fmt::Display for ExcludedRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExcludedRange::Empty => f.write_str("no n"),
            ExcludedRange::All => f.write_str("all n"),
            ExcludedRange::AllOdd => f.write_str("all odd n"),
            ExcludedRange::OddUpTo { max_n } => write!(f, "odd n <= {max_n}"),
            ExcludedRange::Listed { ns, .. } => {
                let ns: Vec<String> = ns.iter().map(u32::to_string).collect();
                write!(f, "n in {{{}}}", ns.join(" "))
            }
        }
    }
}

/// Order of 2 modulo a prime power, with Euler's totient of that modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderOfTwo {
    pub modulus: u64,
    pub order: u64,
    pub phi: u64,
}

/// Degree data of the decomposition field of 2: `g = phi(m0) / ord(2)`,
/// `s = g / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descent {
    pub orders: Vec<OrderOfTwo>,
    pub g: u64,
    pub s: u64,
}

/// Result of a search for the least odd `r` making `form = 2^(r+2) * multiplier`
/// solvable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RSearch {
    pub form: QuadForm,
    pub multiplier: u64,
    /// Every odd `r <= searched_to` was tried.
    pub searched_to: u64,
    /// Class-number bound on `r`, when the search was allowed to reach it.
    pub proven_bound: Option<u64>,
    pub witness: Option<QuadSolution>,
}

impl RSearch {
    pub fn value(&self) -> Option<u64> {
        self.witness.map(|w| w.r)
    }

    /// Largest `v` with `r > v` established.
    pub fn lower_bound(&self) -> u64 {
        self.witness.map_or(self.searched_to, |w| w.r - 1)
    }
}

impl std::fmt::Display for RSearch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.witness {
            Some(w) => write!(f, "{}", w.r),
            None => write!(f, ">{}", self.searched_to),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    I,
    II,
}

/// Which pattern of `v2(d_p)` makes the semiprimitive condition hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SemiprimitiveCase {
    /// Odd part 1: the condition holds vacuously.
    Trivial,
    /// Common valuation 1 (all `p = 3 mod 8`, or `p = 1 mod 8` with `r_p = 1`).
    R1,
    /// Common valuation 2 (all `p = 5 mod 8`, or `p = 1 mod 8` with `r_p = 2`).
    R2,
    /// Common valuation at least 3 (only primes `p = 1 mod 8`).
    R3Plus,
}

/// Criterion-specific quantities, enough to replay the conclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Evidence {
    #[serde(rename = "lam_leung")]
    LamLeung {
        primes: Vec<u64>,
        /// `2^n`.
        target: u64,
        /// Coefficients writing `target` over `primes`, when it can be.
        representation: Option<Vec<u64>>,
    },
    #[serde(rename = "semiprimitive")]
    Semiprimitive {
        check: SemiprimitiveCheck,
        case: Option<SemiprimitiveCase>,
    },
    #[serde(rename = "p7")]
    P7 {
        prime: PrimePower,
        descent: Descent,
        /// Order of 2 modulo `p` itself.
        order_mod_p: u64,
        wieferich_ok: bool,
        class_number: u64,
        r: RSearch,
    },
    #[serde(rename = "p7_x_p35")]
    P7xP35 {
        p1: PrimePower,
        p2: PrimePower,
        descent: Descent,
        /// `(-p1 / p2)`.
        symbol: i32,
        branch: Branch,
        class_number: u64,
        r1: RSearch,
        r2: RSearch,
        /// Solutions of `x^2 + p1 y^2 = 2^(l+2) p2` with even `l`, noted
        /// while scanning.
        even_l: Vec<QuadSolution>,
    },
    #[serde(rename = "p3_x_p5")]
    P3xP5 {
        p1: PrimePower,
        p2: PrimePower,
        descent: Descent,
        /// `(p2 / p1)`.
        symbol: i32,
        branch: Branch,
        class_number: Option<u64>,
        r: Option<RSearch>,
    },
}

/// A conclusion transferred from the modulus a criterion speaks about to a
/// divisor of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Propagation {
    pub from: u64,
    pub to: u64,
}

/// Everything a nonexistence criterion computed for one type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub criterion: CriterionId,
    pub gbf_type: GbfType,
    /// The modulus the criterion's statement was applied to.
    pub evaluated_modulus: u64,
    pub odd_part: u64,
    pub factorization: Factorization,
    pub fires: bool,
    pub excluded: ExcludedRange,
    pub evidence: Evidence,
    pub propagation: Option<Propagation>,
    /// Other criteria that also rule the type out.
    #[serde(default)]
    pub also_applicable: Vec<CriterionId>,
}

impl CriterionReport {
    /// The id to cite: `DIV-Propagation` when the conclusion was transferred.
    pub fn cited(&self) -> CriterionId {
        if self.propagation.is_some() {
            CriterionId::DivPropagation
        } else {
            self.criterion
        }
    }

    /// The decisive quantities as `; `-separated fields, free of commas.
    pub fn summary(&self) -> String {
        let mut out = match &self.evidence {
            Evidence::LamLeung { primes, target, .. } => {
                let ps: Vec<String> = primes.iter().map(u64::to_string).collect();
                format!("{target} not in <{}>", ps.join(" "))
            }
            Evidence::Semiprimitive { check, .. } => match check.l {
                Some(l) => format!("2^{l} = -1 mod {}", check.modulus),
                None => format!("2 not semiprimitive mod {}", check.modulus),
            },
            Evidence::P7 { descent, r, .. } => format!("s={}; r={r}", descent.s),
            Evidence::P7xP35 { descent, branch, r1, r2, .. } => {
                format!("branch {branch:?}; s={}; r1={r1}; r2={r2}", descent.s)
            }
            Evidence::P3xP5 { descent, branch, r, .. } => match r {
                Some(r) => format!("branch {branch:?}; s={}; r={r}", descent.s),
                None => format!("branch {branch:?}; s={}", descent.s),
            },
        };
        if let Some(p) = self.propagation {
            out.push_str(&format!("; from {}", p.from));
        }
        out
    }

    /// Recomputes every recorded quantity from scratch and checks the
    /// conclusion against it.
    pub fn revalidate(&self) -> Result<(), String> {
        let t = self.gbf_type;
        let m0 = t.m >> t.m.trailing_zeros();
        ensure(self.odd_part == m0, "odd part")?;
        ensure(self.factorization == factorize(m0), "factorization")?;
        ensure(self.fires == self.excluded.contains(t.n), "excluded range disagrees with verdict")?;
        match self.propagation {
            Some(p) => ensure(
                p.to == t.m && p.from % t.m == 0 && p.from == self.evaluated_modulus,
                "propagation must go to a divisor",
            )?,
            None => ensure(self.evaluated_modulus == t.m, "evaluated modulus")?,
        }
        match &self.evidence {
            Evidence::LamLeung { primes, target, representation } => {
                if let Some(c) = representation {
                    let sum: u64 = c.iter().zip(primes).map(|(k, p)| k * p).sum();
                    ensure(sum == *target && c.len() == primes.len(), "semigroup certificate")?;
                }
                ensure(*primes == self.factorization.primes().collect::<Vec<_>>(), "primes")?;
                ensure(*target == 1u64 << t.n, "target")?;
                ensure(
                    self.fires == !brute_representable(*target, primes),
                    "semigroup membership",
                )?;
            }
            Evidence::Semiprimitive { check, .. } => {
                ensure(check.modulus == m0 && check.consistent(), "semiprimitive check")?;
                if let Some(l) = check.l {
                    ensure(m0 == 1 || pow_mod(2, l, m0) == m0 - 1, "2^l = -1")?;
                }
                ensure(self.fires == (t.n % 2 == 1 && check.l.is_some()), "fires")?;
            }
            Evidence::P7 { prime, descent, class_number: h, r, .. } => {
                check_descent(descent, &[*prime])?;
                check_class_number(prime.p, *h)?;
                check_search(r, None)?;
                ensure(
                    self.fires == (t.n % 2 == 1 && t.n as u64 * descent.s <= r.lower_bound()),
                    "n < r/s",
                )?;
            }
            Evidence::P7xP35 { p1, p2, descent, symbol, branch, class_number: h, r1, r2, even_l } => {
                check_descent(descent, &[*p1, *p2])?;
                check_class_number(p1.p, *h)?;
                ensure(*symbol == euler_symbol(-(p1.p as i64), p2.p), "(-p1/p2)")?;
                ensure(*branch == if *symbol == -1 { Branch::I } else { Branch::II }, "branch")?;
                check_search(r1, None)?;
                check_search(r2, Some(r1))?;
                ensure(even_l.iter().all(|w| w.holds() && w.r % 2 == 0), "even l diagnostics")?;
                let bound = match branch {
                    Branch::I => r1.lower_bound(),
                    Branch::II => r1.lower_bound().min(r2.lower_bound()),
                };
                ensure(self.fires == (t.n % 2 == 1 && t.n as u64 * descent.s <= bound), "n < r/s")?;
            }
            Evidence::P3xP5 { p1, p2, descent, symbol, branch, class_number: h, r } => {
                check_descent(descent, &[*p1, *p2])?;
                ensure(*symbol == euler_symbol(p2.p as i64, p1.p), "(p2/p1)")?;
                ensure(*branch == if *symbol == 1 { Branch::I } else { Branch::II }, "branch")?;
                match (branch, r, h) {
                    (Branch::I, None, None) => ensure(self.fires == (t.n % 2 == 1), "fires")?,
                    (Branch::II, Some(r), Some(h)) => {
                        check_class_number(p1.p * p2.p, *h)?;
                        check_search(r, None)?;
                        ensure(
                            self.fires == (t.n % 2 == 1 && t.n as u64 * descent.s <= r.lower_bound()),
                            "n < r/s",
                        )?;
                    }
                    _ => return Err("branch data".into()),
                }
            }
        }
        Ok(())
    }
}

fn ensure(ok: bool, what: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(format!("re-validation failed: {what}"))
    }
}

fn brute_representable(target: u64, primes: &[u64]) -> bool {
    if let [a, b, ..] = primes {
        if target >= (a - 1) * (b - 1) {
            return true;
        }
    }
    match primes.split_first() {
        None => target == 0,
        Some((&p, rest)) => (0..=target / p).any(|k| brute_representable(target - k * p, rest)),
    }
}

/// Legendre symbol by Euler's criterion, independent of [`jacobi`].
fn euler_symbol(a: i64, p: u64) -> i32 {
    let r = pow_mod(a.rem_euclid(p as i64) as u64, (p - 1) / 2, p);
    let via_euler = if r == 0 { 0 } else if r == 1 { 1 } else { -1 };
    debug_assert_eq!(via_euler, jacobi(a, p));
    via_euler
}

fn check_descent(d: &Descent, parts: &[PrimePower]) -> Result<(), String> {
    ensure(d.orders.len() == parts.len(), "order count")?;
    let mut m0 = 1u64;
    for (o, pp) in d.orders.iter().zip(parts) {
        let q = pp.value();
        m0 *= q;
        ensure(o.modulus == q && o.phi == euler_phi(q), "prime power data")?;
        ensure(pow_mod(2, o.order, q) == 1, "2^f = 1")?;
        let minimal = factorize(o.order).primes().all(|l| pow_mod(2, o.order / l, q) != 1);
        ensure(minimal, "f is the least exponent")?;
    }
    let ord = mult_order_2(m0).map_err(|e| e.to_string())?;
    ensure(d.g * ord == euler_phi(m0), "g = phi / ord")?;
    ensure(d.g == 2 * d.s && d.s % 2 == 1, "g = 2s with s odd")
}

fn check_class_number(d: u64, h: u64) -> Result<(), String> {
    ensure(class_number(d).ok() == Some(h), "class number")
}

/// Witness re-substitution and minimality of the recorded `r`. With `cap`,
/// the search must have gone up to the capped search's bound.
fn check_search(r: &RSearch, cap: Option<&RSearch>) -> Result<(), String> {
    let top = r.value().map_or(r.searched_to, |v| v.saturating_sub(2));
    for odd in (1..=top).step_by(2) {
        let rhs = (1u128 << (odd + 2)) * r.multiplier as u128;
        ensure(r.form.solve(rhs).is_none(), "an odd r below the recorded one is solvable")?;
    }
    if let Some(w) = r.witness {
        ensure(w.holds() && w.r % 2 == 1 && w.form == r.form && w.multiplier == r.multiplier, "witness")?;
        if let Some(b) = r.proven_bound {
            ensure(w.r <= b, "r exceeds its class-number bound")?;
        }
    }
    if let Some(cap) = cap {
        ensure(r.searched_to <= cap.lower_bound() + 1, "r2 scan reaches past r1")?;
    }
    Ok(())
}
