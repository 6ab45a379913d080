/// Nonnegative `(n_1, ..., n_s)` with `sum n_i * gens[i] = target`, or `None`.
///
/// Dynamic programming over `0..=target`; each reachable value remembers the
/// generator that reached it first, which yields the certificate on the way
/// back down.
pub fn semigroup_member(target: u64, gens: &[u64]) -> Option<Vec<u64>> {
    assert!(!gens.is_empty(), "need at least one generator");
    assert!(gens.iter().all(|&g| g >= 1), "generators must be positive");
    assert!(gens.len() < u8::MAX as usize);
    let n = usize::try_from(target).expect("target fits in memory");
    // 0 = unreachable, k = reached via gens[k - 1]; slot 0 marks the origin.
    let mut via = vec![0u8; n + 1];
    via[0] = u8::MAX;
    for v in 1..=n {
        for (k, &g) in gens.iter().enumerate() {
            let g = g as usize;
            if g <= v && via[v - g] != 0 {
                via[v] = k as u8 + 1;
                break;
            }
        }
    }
    if via[n] == 0 {
        return None;
    }
    let mut coeffs = vec![0u64; gens.len()];
    let mut v = n;
    while v > 0 {
        let k = via[v] as usize - 1;
        coeffs[k] += 1;
        v -= gens[k] as usize;
    }
    Some(coeffs)
}
