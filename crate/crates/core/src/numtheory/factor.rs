use serde::{Deserialize, Serialize};

use super::order::{mul_mod, pow_mod};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimePower {
    pub p: u64,
    pub a: u32,
}

impl PrimePower {
    pub fn value(&self) -> u64 {
        self.p.pow(self.a)
    }
}

/// Prime factorization with strictly increasing primes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    pub factors: Vec<PrimePower>,
}

impl Factorization {
    pub fn product(&self) -> u128 {
        self.factors.iter().map(|f| (f.p as u128).pow(f.a)).product()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|f| f.p)
    }

    /// Drops the prime 2, leaving the factorization of the odd part.
    pub fn odd_part(&self) -> Factorization {
        Factorization { factors: self.factors.iter().copied().filter(|f| f.p != 2).collect() }
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.iter().find(|f| f.p == p).map_or(0, |f| f.a)
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, pp) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if pp.a == 1 {
                write!(f, "{}", pp.p)?;
            } else {
                write!(f, "{}^{}", pp.p, pp.a)?;
            }
        }
        Ok(())
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Complete factorization of `m >= 1` (`m = 1` gives the empty product).
///
/// Trial division up to 10^6; a remaining cofactor is certified prime by
/// Miller-Rabin, or split with Pollard's rho when composite.
pub fn factorize(m: u64) -> Factorization {
    assert!(m >= 1, "cannot factor 0");
    let mut primes = Vec::new();
    let mut n = m;
    let mut p = 2u64;
    while p <= TRIAL_LIMIT && p * p <= n {
        while n % p == 0 {
            primes.push(p);
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        split(n, &mut primes);
    }
    primes.sort_unstable();
    let mut factors: Vec<PrimePower> = Vec::new();
    for q in primes {
        match factors.last_mut() {
            Some(last) if last.p == q => last.a += 1,
            _ => factors.push(PrimePower { p: q, a: 1 }),
        }
    }
    Factorization { factors }
}

fn split(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = num_integer::gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

pub fn euler_phi(m: u64) -> u64 {
    factorize(m).factors.iter().map(|f| (f.p - 1) * f.p.pow(f.a - 1)).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(m: u64) -> Vec<(u64, u32)> {
        factorize(m).factors.iter().map(|f| (f.p, f.a)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(pairs(12), vec![(2, 2), (3, 1)]);
        assert_eq!(pairs(7 * 7 * 13), vec![(7, 2), (13, 1)]);
        assert_eq!(pairs(2 * 199 * 5), vec![(2, 1), (5, 1), (199, 1)]);
        assert_eq!(pairs(1), vec![]);
        assert_eq!(pairs(65537), vec![(65537, 1)]);
    }

    #[test]
    fn large_cofactors() {
        // two primes above the trial-division limit
        let (p, q) = (1_000_003u64, 1_000_033u64);
        assert_eq!(pairs(p * q), vec![(p, 1), (q, 1)]);
        assert_eq!(pairs((1 << 61) - 1), vec![((1 << 61) - 1, 1)]);
        let m = i64::MAX as u64;
        assert_eq!(factorize(m).product(), m as u128);
    }

    #[test]
    fn reconstructs_and_is_sorted() {
        for m in 1..5000u64 {
            let f = factorize(m);
            assert_eq!(f.product(), m as u128);
            assert!(f.factors.windows(2).all(|w| w[0].p < w[1].p));
            assert!(f.factors.iter().all(|pp| is_prime(pp.p)));
        }
    }

    #[test]
    fn totient() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(49), 42);
    }
}
