//! Invariants of the decision engine across many types.

use gbf_core::criteria::{evaluate, CriterionId, Outcome, Verdict};
use gbf_core::{decide, is_gbf, GbfType};

fn ty(m: u64, n: u32) -> GbfType {
    GbfType::new(m, n).unwrap()
}

#[test]
fn every_verdict_is_self_consistent() {
    for m in 2..=400u64 {
        for n in 1..=9u32 {
            let v = decide(ty(m, n)).unwrap();
            match &v {
                Verdict::Exists { witness, verified, .. } => {
                    let w = witness.as_ref().unwrap();
                    assert!(*verified && is_gbf(w) && w.gbf_type() == ty(m, n));
                }
                Verdict::NotExists { report } => {
                    report.revalidate().unwrap_or_else(|e| panic!("{{{m},{n}}}: {e}"));
                    assert!(report.fires && report.excluded.contains(n));
                }
                Verdict::Unknown { attempts, .. } => {
                    for a in attempts {
                        if let Some(r) = &a.report {
                            r.revalidate().unwrap_or_else(|e| panic!("{{{m},{n}}} {}: {e}", a.criterion));
                            assert!(!r.fires);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn nonexistence_passes_to_divisors() {
    for m in 2..=300u64 {
        for n in (1..=9u32).step_by(2) {
            if !matches!(decide(ty(m, n)).unwrap(), Verdict::NotExists { .. }) {
                continue;
            }
            for d in (2..m).filter(|d| m % d == 0) {
                assert!(
                    !matches!(decide(ty(d, n)).unwrap(), Verdict::Exists { .. }),
                    "{{{m},{n}}} ruled out but divisor {d} has a GBF"
                );
            }
        }
    }
}

#[test]
fn decide_is_deterministic() {
    for (m, n) in [(398, 7), (1102, 11), (14, 1), (4, 5), (1990, 3), (637, 2), (2 * 199 * 59, 5)] {
        let a = decide(ty(m, n)).unwrap();
        let b = decide(ty(m, n)).unwrap();
        assert_eq!(a, b);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}

#[test]
fn json_round_trip_on_grid() {
    for m in 2..=120u64 {
        for n in 1..=5u32 {
            let v = decide(ty(m, n)).unwrap();
            let back: Verdict = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
            assert_eq!(back, v);
        }
    }
}

#[test]
fn criteria_respect_their_hypotheses() {
    // Nothing fires for even n, nor when 4 divides m.
    for m in 2..=200u64 {
        for n in 1..=8u32 {
            for id in CriterionId::ALL {
                if let Outcome::Evaluated(r) = evaluate(id, ty(m, n)) {
                    if n % 2 == 0 || m % 4 == 0 {
                        assert!(id == CriterionId::LamLeung || !r.fires, "{id} on {{{m},{n}}}");
                    }
                }
            }
        }
    }
}

#[test]
fn unknown_is_reported_for_14_1() {
    let v = decide(ty(14, 1)).unwrap();
    let Verdict::Unknown { attempts, .. } = v else { panic!("expected Unknown") };
    assert_eq!(attempts.len(), 5);
}
