//! Exhaustive enumeration of all `m^(2^n)` tables of a small type.
//!
//! The hot loop walks the tables in odometer order and keeps `W_f(y)` and
//! its conjugate reduced modulo a prime `q = 1 (mod m)`, with `zeta_m` sent
//! to an element of order `m`. Each step changes one entry and so moves
//! every Walsh value by `(-1)^(x.y) (w^b - w^a)`. A GBF satisfies
//! `W * conj(W) = 2^n` in `Z[zeta_m]` and hence modulo `q`, so the filter
//! never drops one; tables passing it are confirmed with the exact check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gbf::{is_gbf, parity, FunctionTable, GbfType};
use crate::numtheory::{factorize, is_prime, pow_mod};

pub const DEFAULT_BUDGET: u128 = 10_000_000;
pub const DEFAULT_WITNESSES: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub gbf_type: GbfType,
    pub total_candidates: u128,
    pub gbf_count: u128,
    /// The first GBFs in enumeration order.
    pub witnesses: Vec<FunctionTable>,
}

/// Counts the GBFs of type `t`, keeping the first [`DEFAULT_WITNESSES`].
pub fn enumerate(t: GbfType, budget: u128) -> Result<OracleResult> {
    enumerate_with(t, budget, DEFAULT_WITNESSES)
}

/// As [`enumerate`], keeping up to `keep` witnesses.
pub fn enumerate_with(t: GbfType, budget: u128, keep: usize) -> Result<OracleResult> {
    let total = t.table_count();
    if total > budget {
        return Err(Error::BudgetExceeded { required: total, budget });
    }
    let field = Field::new(t.m);
    let shards: Vec<(u128, Vec<FunctionTable>)> =
        (0..t.m).into_par_iter().map(|v| run_shard(t, &field, v, keep)).collect();
    let mut gbf_count = 0;
    let mut witnesses = Vec::new();
    for (count, found) in shards {
        gbf_count += count;
        witnesses.extend(found.into_iter().take(keep.saturating_sub(witnesses.len())));
    }
    Ok(OracleResult { gbf_type: t, total_candidates: total, gbf_count, witnesses })
}

/// Powers of an element of order `m` in `F_q`.
struct Field {
    q: u64,
    pow: Vec<u64>,
    inv_pow: Vec<u64>,
}

impl Field {
    fn new(m: u64) -> Field {
        let q = (1..)
            .map(|k| k * m + 1)
            .find(|&q| is_prime(q))
            .filter(|&q| q < 1 << 31)
            .expect("a prime 1 mod m below 2^31");
        let primes: Vec<u64> = factorize(m).primes().collect();
        let w = (2..q)
            .map(|c| pow_mod(c, (q - 1) / m, q))
            .find(|&w| primes.iter().all(|&l| pow_mod(w, m / l, q) != 1))
            .expect("F_q* is cyclic");
        let pow: Vec<u64> = (0..m).map(|k| pow_mod(w, k, q)).collect();
        let inv_pow = (0..m as usize).map(|k| pow[(m as usize - k) % m as usize]).collect();
        Field { q, pow, inv_pow }
    }
}

/// All tables whose last entry is `last`, in odometer order.
///
/// `c[y]` and `d[y]` hold the sums over `x >= 1`; the first entry, which
/// turns fastest, is added on the fly since `(-1)^(0.y) = 1`.
fn run_shard(t: GbfType, field: &Field, last: u64, keep: usize) -> (u128, Vec<FunctionTable>) {
    let size = t.domain_size();
    let q = field.q;
    let target = pow_mod(2, t.n as u64, q);
    let barrett = u64::MAX / q;
    // `x mod q` for `x < 2^62` without a division.
    let reduce = |x: u64| {
        let mut r = x - ((x as u128 * barrett as u128) >> 64) as u64 * q;
        while r >= q {
            r -= q;
        }
        r
    };
    let add = |v: u64, d: u64| if v + d >= q { v + d - q } else { v + d };
    let apply = |c: &mut [u64], d: &mut [u64], x: usize, from: u64, to: u64| {
        let dc = add(field.pow[to as usize], q - field.pow[from as usize]);
        let dd = add(field.inv_pow[to as usize], q - field.inv_pow[from as usize]);
        let (nc, nd) = (add(0, q - dc), add(0, q - dd));
        for y in 0..size {
            let (sc, sd) = if parity(x, y) { (nc, nd) } else { (dc, dd) };
            c[y] = add(c[y], sc);
            d[y] = add(d[y], sd);
        }
    };
    let mut vals = vec![0u64; size];
    vals[size - 1] = last;
    // Entries 1.. all zero: each contributes (-1)^(x.y), summing to 2^n [y = 0] - 1.
    let mut c: Vec<u64> = (0..size).map(|y| if y == 0 { (size as u64 - 1) % q } else { q - 1 }).collect();
    let mut d = c.clone();
    apply(&mut c, &mut d, size - 1, 0, last);
    let mut count = 0u128;
    let mut found = Vec::new();
    loop {
        for v in 0..t.m as usize {
            let (pv, iv) = (field.pow[v], field.inv_pow[v]);
            if (0..size).all(|y| reduce(add(c[y], pv) * add(d[y], iv)) == target) {
                vals[0] = v as u64;
                let f = FunctionTable::new(t, vals.clone()).expect("values reduced");
                if is_gbf(&f) {
                    count += 1;
                    if found.len() < keep {
                        found.push(f);
                    }
                }
            }
        }
        let mut x = 1;
        loop {
            if x >= size - 1 {
                return (count, found);
            }
            let from = vals[x];
            let to = if from + 1 == t.m { 0 } else { from + 1 };
            apply(&mut c, &mut d, x, from, to);
            vals[x] = to;
            if to != 0 {
                break;
            }
            x += 1;
        }
    }
}

/// Every table of type `t` in odometer order.
fn all_tables(t: GbfType) -> impl Iterator<Item = FunctionTable> {
    let size = t.domain_size();
    let total = t.table_count();
    (0..total).map(move |mut i| {
        let values = (0..size)
            .map(|_| {
                let d = (i % t.m as u128) as u64;
                i /= t.m as u128;
                d
            })
            .collect();
        FunctionTable::new(t, values).expect("values reduced")
    })
}

/// `samples` seeded random tables with their exact verdicts. When the whole
/// type has at most `samples` tables, returns all of them in odometer order.
pub fn spot_check(t: GbfType, samples: usize, seed: u64) -> Vec<(FunctionTable, bool)> {
    if t.table_count() <= samples as u128 {
        return all_tables(t).map(|f| {
            let ok = is_gbf(&f);
            (f, ok)
        }).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let values = (0..t.domain_size()).map(|_| rng.gen_range(0..t.m)).collect();
            let f = FunctionTable::new(t, values).expect("values reduced");
            let ok = is_gbf(&f);
            (f, ok)
        })
        .collect()
}

/// Random bentness-preserving variants of `f`: a constant added, for even
/// `m` a multiple `m/2` of a linear form added, and the input translated.
pub fn spot_check_variants(f: &FunctionTable, samples: usize, seed: u64) -> Vec<(FunctionTable, bool)> {
    let t = f.gbf_type();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let c = rng.gen_range(0..t.m);
            let lin = if t.m % 2 == 0 { rng.gen_range(0..t.domain_size()) } else { 0 };
            let shift = rng.gen_range(0..t.domain_size());
            let g = FunctionTable::from_fn(t, |x| {
                let flip = if parity(lin, x) { t.m / 2 } else { 0 };
                f.value(x ^ shift) + c + flip
            })
            .expect("same type");
            let ok = is_gbf(&g);
            (g, ok)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(m: u64, n: u32) -> GbfType {
        GbfType::new(m, n).unwrap()
    }

    fn naive_count(t: GbfType) -> u128 {
        all_tables(t).filter(is_gbf).count() as u128
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate(ty(2, 2), DEFAULT_BUDGET).unwrap().gbf_count, 8);
        assert_eq!(enumerate(ty(3, 1), DEFAULT_BUDGET).unwrap().gbf_count, 0);
        let r = enumerate(ty(4, 1), DEFAULT_BUDGET).unwrap();
        assert_eq!((r.gbf_count, r.total_candidates), (8, 16));
        assert!(r.witnesses.iter().all(|w| (w.value(0) + 4 - w.value(1)) % 2 == 1));
        assert_eq!(enumerate(ty(6, 1), DEFAULT_BUDGET).unwrap().gbf_count, 0);
    }

    #[test]
    fn matches_naive_enumeration() {
        for (m, n) in [(2, 1), (2, 2), (3, 2), (4, 1), (4, 2), (5, 1), (6, 1), (8, 1), (12, 1)] {
            let t = ty(m, n);
            let r = enumerate_with(t, DEFAULT_BUDGET, usize::MAX).unwrap();
            assert_eq!(r.gbf_count, naive_count(t), "{t}");
            let first: Vec<FunctionTable> = all_tables(t).filter(is_gbf).collect();
            assert_eq!(r.witnesses, first, "{t}");
        }
    }

    #[test]
    fn budget_refusal() {
        assert_eq!(
            enumerate(ty(5, 3), 1000),
            Err(Error::BudgetExceeded { required: 390_625, budget: 1000 })
        );
    }

    #[test]
    fn spot_checks() {
        let all = spot_check(ty(6, 1), 36, 0);
        assert_eq!(all.len(), 36);
        assert!(all.iter().all(|(_, ok)| !ok));
        assert_eq!(spot_check(ty(5, 2), 100, 7), spot_check(ty(5, 2), 100, 7));
        let base = crate::gbf::construct_mod4_from_bent(&crate::gbf::construct_boolean_bent(4).unwrap()).unwrap();
        assert!(spot_check_variants(&base, 100, 3).iter().all(|(_, ok)| *ok));
    }
}
