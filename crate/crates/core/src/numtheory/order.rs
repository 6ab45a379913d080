use serde::{Deserialize, Serialize};

use super::factor::{euler_phi, factorize};
use crate::error::{Error, Result};

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut b = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of 2 modulo an odd `modulus`.
///
/// Starts from `phi(modulus)` and strips prime factors while `2^(f/q) = 1`.
pub fn mult_order_2(modulus: u64) -> Result<u64> {
    if modulus % 2 == 0 {
        return Err(Error::EvenModulus(modulus));
    }
    if modulus == 1 {
        return Ok(1);
    }
    let mut f = euler_phi(modulus);
    for q in factorize(f).primes().collect::<Vec<_>>() {
        while f % q == 0 && pow_mod(2, f / q, modulus) == 1 {
            f /= q;
        }
    }
    Ok(f)
}

/// 2-adic valuation.
pub fn v2(d: u64) -> Result<u32> {
    if d == 0 {
        return Err(Error::OutOfRange { what: "2-adic valuation argument", value: 0 });
    }
    Ok(d.trailing_zeros())
}

/// Least `l >= 1` with `2^l = -1 (mod m)`, for odd `m`.
///
/// Such `l` exists iff the order `f` of 2 is even and `2^(f/2) = -1`; the
/// least one is then `f/2`. For `m = 1` the congruence holds trivially.
pub fn semiprimitive(m_odd: u64) -> Result<Option<u64>> {
    if m_odd % 2 == 0 {
        return Err(Error::EvenModulus(m_odd));
    }
    if m_odd == 1 {
        return Ok(Some(1));
    }
    let f = mult_order_2(m_odd)?;
    Ok((f % 2 == 0 && pow_mod(2, f / 2, m_odd) == m_odd - 1).then_some(f / 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeValuation {
    pub p: u64,
    /// Order of 2 modulo `p`.
    pub d_p: u64,
    pub v2: u32,
}

/// Both characterizations of the semiprimitive condition, side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiprimitiveCheck {
    pub modulus: u64,
    /// From the order of 2 modulo `m`.
    pub l: Option<u64>,
    pub primes: Vec<PrimeValuation>,
    /// All `v2(d_p)` equal to a common `r >= 1`.
    pub valuation_test: bool,
}

impl SemiprimitiveCheck {
    pub fn consistent(&self) -> bool {
        self.l.is_some() == self.valuation_test
    }

    /// The common valuation `r`, when the valuation test passes.
    pub fn common_r(&self) -> Option<u32> {
        if !self.valuation_test {
            return None;
        }
        self.primes.first().map(|p| p.v2)
    }
}

pub fn semiprimitive_check(m_odd: u64) -> Result<SemiprimitiveCheck> {
    let l = semiprimitive(m_odd)?;
    let primes = factorize(m_odd)
        .primes()
        .map(|p| {
            let d_p = mult_order_2(p)?;
            Ok(PrimeValuation { p, d_p, v2: d_p.trailing_zeros() })
        })
        .collect::<Result<Vec<_>>>()?;
    let valuation_test = match primes.first() {
        None => true,
        Some(first) => first.v2 >= 1 && primes.iter().all(|pv| pv.v2 == first.v2),
    };
    Ok(SemiprimitiveCheck { modulus: m_odd, l, primes, valuation_test })
}

/// `2^(p-1) != 1 (mod p^2)`, for an odd prime `p < 2^32`.
pub fn wieferich_ok(p: u64) -> bool {
    assert!(p % 2 == 1 && p < 1 << 32, "odd prime below 2^32 expected");
    pow_mod(2, p - 1, p * p) != 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(mult_order_2(7), Ok(3));
        assert_eq!(mult_order_2(17), Ok(8));
        assert_eq!(mult_order_2(9), Ok(6));
        assert_eq!(mult_order_2(65537), Ok(32));
        assert_eq!(mult_order_2(10), Err(Error::EvenModulus(10)));
    }

    #[test]
    fn valuations() {
        assert_eq!(v2(8), Ok(3));
        assert_eq!(v2(20), Ok(2));
        assert_eq!(v2(99), Ok(0));
        assert!(v2(0).is_err());
    }

    #[test]
    fn semiprimitive_examples() {
        assert_eq!(semiprimitive(3), Ok(Some(1)));
        assert_eq!(semiprimitive(9), Ok(Some(3)));
        assert_eq!(semiprimitive(15), Ok(None));
        assert_eq!(semiprimitive(1), Ok(Some(1)));
        let c = semiprimitive_check(15).unwrap();
        assert_eq!(c.primes.iter().map(|p| p.v2).collect::<Vec<_>>(), vec![1, 2]);
        assert!(!c.valuation_test && c.consistent());
        let c = semiprimitive_check(5 * 13).unwrap();
        assert_eq!(c.common_r(), Some(2));
        assert!(c.l.is_some());
    }

    #[test]
    fn wieferich() {
        assert!(wieferich_ok(7));
        assert!(!wieferich_ok(1093));
        assert!(!wieferich_ok(3511));
    }
}
