//! The nonexistence criteria. Each one either does not apply, abstains, or
//! produces a [`CriterionReport`] saying whether it rules the type out.

use num_integer::Integer;

use super::report::{
    Branch, CriterionId, CriterionReport, Descent, Evidence, ExcludedRange, OrderOfTwo,
    Propagation, RSearch, SemiprimitiveCase,
};
use crate::gbf::GbfType;
use crate::numtheory::{
    class_number, euler_phi, factorize, jacobi, min_odd_r, mult_order_2, semigroup_member,
    semiprimitive_check, wieferich_ok, PrimePower, QuadForm, QuadSolution,
};

/// Total `y` steps a single `r` search may take.
const SCAN_BUDGET: u128 = 1 << 28;

/// Largest `2^n` the semigroup table is built for.
const SEMIGROUP_LIMIT_BITS: u32 = 26;

/// What running one criterion on one type produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    NotApplicable(String),
    /// Hypotheses hold but an internal check failed or a search was too large.
    Abstain(String),
    Evaluated(CriterionReport),
}

impl Outcome {
    pub fn fired(&self) -> Option<&CriterionReport> {
        match self {
            Outcome::Evaluated(r) if r.fires => Some(r),
            _ => None,
        }
    }
}

pub fn evaluate(id: CriterionId, t: GbfType) -> Outcome {
    match id {
        CriterionId::LamLeung => lam_leung(t),
        CriterionId::Semiprimitive => semiprimitive(t),
        CriterionId::P7 => p7(t),
        CriterionId::P7xP35 => p7_x_p35(t),
        CriterionId::P3xP5 => p3_x_p5(t),
        CriterionId::DivPropagation => {
            Outcome::NotApplicable("propagation is attached to the other criteria".into())
        }
    }
}

/// C1: `2^n` is not a nonnegative combination of the primes of odd `m`.
pub fn crit_lam_leung(t: GbfType) -> Option<CriterionReport> {
    lam_leung(t).fired().cloned()
}

/// C2: `2^l = -1 (mod m0)` for some `l`, `n` odd.
pub fn crit_semiprimitive(t: GbfType) -> Option<CriterionReport> {
    semiprimitive(t).fired().cloned()
}

/// C3: odd part `p^l` with `p = 7 (mod 8)`, odd `n < r/s`.
pub fn crit_p7(t: GbfType) -> Option<CriterionReport> {
    p7(t).fired().cloned()
}

/// C4: odd part `p1^a1 p2^a2`, `p1 = 7`, `p2 = 3, 5 (mod 8)`.
pub fn crit_p7_x_p35(t: GbfType) -> Option<CriterionReport> {
    p7_x_p35(t).fired().cloned()
}

/// C5: odd part `p1^a1 p2^a2`, `p1 = 3`, `p2 = 5 (mod 8)`.
pub fn crit_p3_x_p5(t: GbfType) -> Option<CriterionReport> {
    p3_x_p5(t).fired().cloned()
}

fn report(
    criterion: CriterionId,
    t: GbfType,
    evaluated_modulus: u64,
    excluded: ExcludedRange,
    evidence: Evidence,
) -> CriterionReport {
    let odd_part = t.m >> t.m.trailing_zeros();
    let propagation = (evaluated_modulus != t.m).then_some(Propagation { from: evaluated_modulus, to: t.m });
    CriterionReport {
        criterion,
        gbf_type: t,
        evaluated_modulus,
        odd_part,
        factorization: factorize(odd_part),
        fires: excluded.contains(t.n),
        excluded,
        evidence,
        propagation,
        also_applicable: Vec::new(),
    }
}

/// Guards shared by C2 to C5: odd `n` and `m` not divisible by 4.
fn odd_n_and_m(t: GbfType) -> Result<u64, Outcome> {
    if t.n % 2 == 0 {
        return Err(Outcome::NotApplicable("n is even".into()));
    }
    if t.m % 4 == 0 {
        return Err(Outcome::NotApplicable("4 divides m".into()));
    }
    Ok(if t.m % 2 == 0 { t.m / 2 } else { t.m })
}

fn lam_leung(t: GbfType) -> Outcome {
    if t.m % 2 == 0 {
        return Outcome::NotApplicable("m is even".into());
    }
    let primes: Vec<u64> = factorize(t.m).primes().collect();
    if t.n >= 64 {
        return Outcome::Abstain("2^n does not fit in 64 bits".into());
    }
    let target = 1u64 << t.n;
    if primes.len() == 1 {
        let ev = Evidence::LamLeung { primes, target, representation: None };
        return Outcome::Evaluated(report(CriterionId::LamLeung, t, t.m, ExcludedRange::All, ev));
    }
    // Every 2^k at or past the conductor of the two smallest primes is representable.
    let conductor = (primes[0] as u128 - 1) * (primes[1] as u128 - 1);
    let last_gap = (1..64u32).find(|&k| 1u128 << k >= conductor).unwrap_or(64) - 1;
    let checked_to = last_gap.min(SEMIGROUP_LIMIT_BITS);
    if t.n > checked_to && t.n <= last_gap {
        return Outcome::Abstain(format!("semigroup table for 2^{} is too large", t.n));
    }
    let ns = (1..=checked_to).filter(|&k| semigroup_member(1 << k, &primes).is_none()).collect();
    let representation = semigroup_member(target, &primes);
    let ev = Evidence::LamLeung { primes, target, representation };
    Outcome::Evaluated(report(CriterionId::LamLeung, t, t.m, ExcludedRange::Listed { ns, checked_to }, ev))
}

fn semiprimitive(t: GbfType) -> Outcome {
    let m0 = match odd_n_and_m(t) {
        Ok(m0) => m0,
        Err(o) => return o,
    };
    let check = match semiprimitive_check(m0) {
        Ok(c) => c,
        Err(e) => return Outcome::Abstain(e.to_string()),
    };
    if !check.consistent() {
        return Outcome::Abstain("order test and valuation test disagree".into());
    }
    let case = if m0 == 1 {
        Some(SemiprimitiveCase::Trivial)
    } else {
        check.common_r().map(|r| match r {
            1 => SemiprimitiveCase::R1,
            2 => SemiprimitiveCase::R2,
            _ => SemiprimitiveCase::R3Plus,
        })
    };
    let excluded = if check.l.is_some() { ExcludedRange::AllOdd } else { ExcludedRange::Empty };
    let ev = Evidence::Semiprimitive { check, case };
    Outcome::Evaluated(report(CriterionId::Semiprimitive, t, t.m, excluded, ev))
}

fn descent(parts: &[PrimePower]) -> Result<Descent, String> {
    let orders = parts
        .iter()
        .map(|pp| {
            let q = pp.value();
            Ok(OrderOfTwo { modulus: q, order: mult_order_2(q).map_err(|e| e.to_string())?, phi: euler_phi(q) })
        })
        .collect::<Result<Vec<_>, String>>()?;
    let g = match orders.as_slice() {
        [a] => a.phi / a.order,
        [a, b] => (a.phi / a.order) * (b.phi / b.order) * a.order.gcd(&b.order),
        _ => return Err("one or two prime powers expected".into()),
    };
    if g % 4 != 2 {
        return Err(format!("s = g/2 is not an odd integer (g = {g})"));
    }
    Ok(Descent { orders, g, s: g / 2 })
}

/// `y` steps needed to try every odd `r <= upto`.
fn scan_cost(form: QuadForm, multiplier: u64, upto: u64) -> u128 {
    (1..=upto).step_by(2).try_fold(0u128, |acc, r| {
        let rhs = 1u128.checked_shl(u32::try_from(r + 2).ok()?).filter(|_| r + 2 < 128)?;
        Some(acc + form.scan_len(rhs.checked_mul(multiplier as u128)?))
    }).unwrap_or(u128::MAX)
}

/// Least odd `r` for `form = 2^(r+2) * multiplier`. Searches up to `proven`
/// when affordable; otherwise only far enough to settle `needed`.
fn search_r(form: QuadForm, multiplier: u64, proven: Option<u64>, cap: u64, needed: u64) -> Result<RSearch, String> {
    let full = proven.map_or(cap, |b| b.min(cap));
    let upto = if scan_cost(form, multiplier, full) <= SCAN_BUDGET {
        full
    } else if needed < full && scan_cost(form, multiplier, needed) <= SCAN_BUDGET {
        needed
    } else {
        return Err(format!("searching {form} = 2^(r+2)*{multiplier} is too large"));
    };
    let witness = min_odd_r(form, multiplier, upto);
    let reached_bound = upto == full && proven == Some(full);
    if witness.is_none() && proven.is_some() && reached_bound {
        return Err(format!("no odd r <= {full} solves {form} = 2^(r+2)*{multiplier}"));
    }
    Ok(RSearch {
        form,
        multiplier,
        searched_to: witness.map_or(upto, |w| w.r),
        proven_bound: reached_bound.then_some(full),
        witness,
    })
}

fn excluded_below(bound: u64, s: u64) -> ExcludedRange {
    let q = bound / s;
    let max_n = if q % 2 == 1 { q } else { q.saturating_sub(1) };
    if max_n == 0 {
        ExcludedRange::Empty
    } else {
        ExcludedRange::OddUpTo { max_n }
    }
}

fn p7(t: GbfType) -> Outcome {
    let m0 = match odd_n_and_m(t) {
        Ok(m0) => m0,
        Err(o) => return o,
    };
    let fact = factorize(m0);
    let [pp] = fact.factors.as_slice() else {
        return Outcome::NotApplicable("odd part is not a prime power".into());
    };
    if pp.p % 8 != 7 {
        return Outcome::NotApplicable("p is not 7 mod 8".into());
    }
    let descent = match descent(&[*pp]) {
        Ok(d) => d,
        Err(e) => return Outcome::Abstain(e),
    };
    let h = match class_number(pp.p) {
        Ok(h) => h,
        Err(e) => return Outcome::Abstain(e.to_string()),
    };
    let needed = t.n as u64 * descent.s;
    let r = match search_r(QuadForm::Principal { d: pp.p }, 1, Some(h), h, needed) {
        Ok(r) => r,
        Err(e) => return Outcome::Abstain(e),
    };
    let excluded = excluded_below(r.lower_bound(), descent.s);
    let ev = Evidence::P7 {
        prime: *pp,
        order_mod_p: mult_order_2(pp.p).expect("odd prime"),
        wieferich_ok: pp.p >= 1 << 32 || wieferich_ok(pp.p),
        descent,
        class_number: h,
        r,
    };
    Outcome::Evaluated(report(CriterionId::P7, t, 2 * m0, excluded, ev))
}

/// The two prime powers of `m0`, ordered so that the first has residue
/// `first` mod 8 and the second one of `second`.
fn two_primes(m0: u64, first: &[u64], second: &[u64]) -> Option<(PrimePower, PrimePower)> {
    let fact = factorize(m0);
    let [a, b] = fact.factors.as_slice() else {
        return None;
    };
    let fits = |x: &PrimePower, y: &PrimePower| first.contains(&(x.p % 8)) && second.contains(&(y.p % 8));
    if fits(a, b) {
        Some((*a, *b))
    } else if fits(b, a) {
        Some((*b, *a))
    } else {
        None
    }
}

fn p7_x_p35(t: GbfType) -> Outcome {
    let m0 = match odd_n_and_m(t) {
        Ok(m0) => m0,
        Err(o) => return o,
    };
    let Some((p1, p2)) = two_primes(m0, &[7], &[3, 5]) else {
        return Outcome::NotApplicable("odd part is not p1^a p2^b with p1 = 7 and p2 = 3 or 5 mod 8".into());
    };
    let descent = match descent(&[p1, p2]) {
        Ok(d) => d,
        Err(e) => return Outcome::Abstain(e),
    };
    let h = match class_number(p1.p) {
        Ok(h) => h,
        Err(e) => return Outcome::Abstain(e.to_string()),
    };
    let symbol = jacobi(-(p1.p as i64), p2.p);
    let branch = if symbol == -1 { Branch::I } else { Branch::II };
    let needed = t.n as u64 * descent.s;
    let form = QuadForm::Principal { d: p1.p };
    let r1 = match search_r(form, 1, Some(h), h, needed) {
        Ok(r) => r,
        Err(e) => return Outcome::Abstain(e),
    };
    // r2 only matters up to r1.
    let scan_to = r1.value().unwrap_or(r1.searched_to);
    let r2 = match search_r(form, p2.p, None, scan_to, needed) {
        Ok(r) => r,
        Err(e) => return Outcome::Abstain(e),
    };
    let even_l = if scan_cost(form, p2.p, scan_to) <= SCAN_BUDGET {
        (0..=scan_to)
            .step_by(2)
            .filter_map(|l| {
                let rhs = (1u128 << (l + 2)) * p2.p as u128;
                form.solve(rhs).map(|(x, y)| QuadSolution { form, multiplier: p2.p, x, y, r: l })
            })
            .collect()
    } else {
        Vec::new()
    };
    let bound = match branch {
        Branch::I => r1.lower_bound(),
        Branch::II => r1.lower_bound().min(r2.lower_bound()),
    };
    let excluded = excluded_below(bound, descent.s);
    let ev = Evidence::P7xP35 { p1, p2, descent, symbol, branch, class_number: h, r1, r2, even_l };
    Outcome::Evaluated(report(CriterionId::P7xP35, t, t.m, excluded, ev))
}

fn p3_x_p5(t: GbfType) -> Outcome {
    let m0 = match odd_n_and_m(t) {
        Ok(m0) => m0,
        Err(o) => return o,
    };
    let Some((p1, p2)) = two_primes(m0, &[3], &[5]) else {
        return Outcome::NotApplicable("odd part is not p1^a p2^b with p1 = 3 and p2 = 5 mod 8".into());
    };
    let descent = match descent(&[p1, p2]) {
        Ok(d) => d,
        Err(e) => return Outcome::Abstain(e),
    };
    let symbol = jacobi(p2.p as i64, p1.p);
    let (branch, class_number, r, excluded) = if symbol == 1 {
        (Branch::I, None, None, ExcludedRange::AllOdd)
    } else {
        let Some(d) = p1.p.checked_mul(p2.p) else {
            return Outcome::Abstain("p1 * p2 overflows".into());
        };
        let h = match class_number(d) {
            Ok(h) => h,
            Err(e) => return Outcome::Abstain(e.to_string()),
        };
        let needed = t.n as u64 * descent.s;
        let r = match search_r(QuadForm::Diagonal { a: p1.p, b: p2.p }, 1, Some(h), h, needed) {
            Ok(r) => r,
            Err(e) => return Outcome::Abstain(e),
        };
        let excluded = excluded_below(r.lower_bound(), descent.s);
        (Branch::II, Some(h), Some(r), excluded)
    };
    let ev = Evidence::P3xP5 { p1, p2, descent, symbol, branch, class_number, r };
    Outcome::Evaluated(report(CriterionId::P3xP5, t, t.m, excluded, ev))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(m: u64, n: u32) -> GbfType {
        GbfType::new(m, n).unwrap()
    }

    fn r_of(rep: &CriterionReport) -> Option<u64> {
        match &rep.evidence {
            Evidence::P7 { r, .. } => r.value(),
            Evidence::P3xP5 { r, .. } => r.as_ref().and_then(RSearch::value),
            _ => None,
        }
    }

    #[test]
    fn lam_leung_examples() {
        for n in 1..=6 {
            assert!(crit_lam_leung(ty(7 * 7 * 13, n)).is_some(), "n={n}");
        }
        assert!(crit_lam_leung(ty(7 * 13, 7)).is_none());
        assert!(crit_lam_leung(ty(15, 3)).is_none());
        let rep = crit_lam_leung(ty(9, 5)).unwrap();
        assert_eq!(rep.excluded, ExcludedRange::All);
        let Outcome::Evaluated(rep) = lam_leung(ty(91, 7)) else { panic!() };
        assert_eq!(rep.excluded, ExcludedRange::Listed { ns: vec![1, 2, 3, 4, 5, 6], checked_to: 6 });
    }

    #[test]
    fn semiprimitive_examples() {
        assert!(crit_semiprimitive(ty(6, 3)).is_some());
        let rep = crit_semiprimitive(ty(2 * 5 * 13, 1)).unwrap();
        let Evidence::Semiprimitive { case, .. } = rep.evidence else { panic!() };
        assert_eq!(case, Some(SemiprimitiveCase::R2));
        assert!(crit_semiprimitive(ty(14, 3)).is_none());
        assert!(crit_semiprimitive(ty(2, 3)).is_some());
        assert!(matches!(semiprimitive(ty(6, 2)), Outcome::NotApplicable(_)));
    }

    #[test]
    fn p7_examples() {
        let rep = crit_p7(ty(2 * 47, 3)).unwrap();
        assert_eq!(r_of(&rep), Some(5));
        let rep = crit_p7(ty(2 * 191, 11)).unwrap();
        assert_eq!(r_of(&rep), Some(13));
        assert!(crit_p7(ty(14, 1)).is_none());
        let rep = crit_p7(ty(2 * 199, 7)).unwrap();
        assert_eq!(rep.excluded, ExcludedRange::OddUpTo { max_n: 7 });
        assert!(crit_p7(ty(2 * 199, 9)).is_none());
        let rep = crit_p7(ty(199, 3)).unwrap();
        assert_eq!(rep.propagation, Some(Propagation { from: 398, to: 199 }));
        assert_eq!(rep.cited(), CriterionId::DivPropagation);
    }

    #[test]
    fn p7_x_p35_examples() {
        let rep = crit_p7_x_p35(ty(2 * 199 * 59, 7)).unwrap();
        let Evidence::P7xP35 { branch, ref r1, .. } = rep.evidence else { panic!() };
        assert_eq!((branch, r1.value()), (Branch::I, Some(9)));
        let rep = crit_p7_x_p35(ty(2 * 199 * 5, 3)).unwrap();
        let Evidence::P7xP35 { branch, ref r2, ref even_l, .. } = rep.evidence else { panic!() };
        assert_eq!(branch, Branch::II);
        let w = r2.witness.unwrap();
        assert_eq!((w.r, w.x, w.y), (5, 21, 1));
        assert!(even_l.iter().any(|s| s.r == 4));
        assert!(crit_p7_x_p35(ty(2 * 199 * 5, 5)).is_none());
    }

    #[test]
    fn p3_x_p5_examples() {
        let rep = crit_p3_x_p5(ty(2 * 19 * 29, 11)).unwrap();
        assert_eq!(r_of(&rep), Some(13));
        let Outcome::Evaluated(rep) = p3_x_p5(ty(15, 1)) else { panic!() };
        let Evidence::P3xP5 { branch, .. } = rep.evidence else { panic!() };
        assert_eq!(branch, Branch::II);
        let rep = crit_p3_x_p5(ty(2 * 11 * 5, 23)).unwrap();
        assert_eq!(rep.excluded, ExcludedRange::AllOdd);
    }

    #[test]
    fn reports_revalidate() {
        for (m, n) in [(637, 3), (130, 1), (94, 3), (382, 11), (398 * 59, 7), (1990, 3), (1102, 11), (110, 5), (9, 2)] {
            for id in CriterionId::ALL {
                if let Outcome::Evaluated(rep) = evaluate(id, ty(m, n)) {
                    rep.revalidate().unwrap_or_else(|e| panic!("{m} {n} {id}: {e}"));
                }
            }
        }
    }
}
