//! Exact arithmetic in the ring of cyclotomic integers `Z[zeta_m]`.
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^(m-1)`, i.e. as
//! polynomials modulo `x^m - 1`. That representation is redundant (the ring
//! has rank `phi(m)`), so two vectors may denote the same element. Reduction
//! modulo the cyclotomic polynomial `Phi_m` happens only in [`CycInt::canonical`],
//! which every equality test goes through.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense integer polynomial, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^k - 1`.
    pub fn x_pow_minus_one(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[k] = BigInt::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Quotient and remainder by a monic divisor. Exact over the integers.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (IntPoly::new(Vec::new()), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in divisor.coeffs[..d].iter().enumerate() {
                rem[i - d + j] -= &c * dj;
            }
            quot[i - d] = c;
        }
        rem.truncate(d);
        (IntPoly::new(quot), IntPoly::new(rem))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "x")
    }
}

fn phi_cache() -> &'static RwLock<HashMap<usize, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The cyclotomic polynomial `Phi_m`, memoized process-wide.
///
/// Computed as the exact quotient of `x^m - 1` by the product of `Phi_d` over
/// the proper divisors `d` of `m`.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn cyclotomic_poly(m: usize) -> Arc<IntPoly> {
    assert!(m >= 1, "Phi_0 is undefined");
    if let Some(p) = phi_cache().read().expect("phi cache poisoned").get(&m) {
        return Arc::clone(p);
    }
    let mut denom = IntPoly::from_i64(&[1]);
    for d in (1..m).filter(|d| m % d == 0) {
        denom = denom.mul(&cyclotomic_poly(d));
    }
    let (quot, rem) = IntPoly::x_pow_minus_one(m).div_rem_monic(&denom);
    debug_assert!(rem.is_zero(), "x^{m}-1 not divisible by lower cyclotomic factors");
    let quot = Arc::new(quot);
    phi_cache()
        .write()
        .expect("phi cache poisoned")
        .entry(m)
        .or_insert(quot)
        .clone()
}

/// Degree of `Phi_m`, i.e. Euler's totient of `m`.
pub fn phi_degree(m: usize) -> usize {
    cyclotomic_poly(m).degree().expect("Phi_m is nonzero")
}

/// An element of `Z[zeta_m]` as a length-`m` coefficient vector over the
/// power basis.
///
/// `PartialEq` compares representations. Two vectors denote the same ring
/// element iff their [`canonical`](CycInt::canonical) forms are equal; use
/// [`same_element`](CycInt::same_element) for that.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycInt {
    modulus: usize,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn new(modulus: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::OutOfRange { what: "cyclotomic modulus", value: 0 });
        }
        if coeffs.len() != modulus {
            return Err(Error::BadLength { expected: modulus, got: coeffs.len() });
        }
        Ok(CycInt { modulus, coeffs })
    }

    pub fn from_i64(modulus: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(modulus, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(modulus: usize) -> Self {
        Self::from_integer(modulus, 0)
    }

    pub fn one(modulus: usize) -> Self {
        Self::from_integer(modulus, 1)
    }

    pub fn from_integer(modulus: usize, c: impl Into<BigInt>) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let mut coeffs = vec![BigInt::zero(); modulus];
        coeffs[0] = c.into();
        CycInt { modulus, coeffs }
    }

    /// `zeta_m^k`; the exponent is reduced modulo `m` (negative `k` allowed).
    pub fn zeta_pow(modulus: usize, k: i64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let mut coeffs = vec![BigInt::zero(); modulus];
        coeffs[k.rem_euclid(modulus as i64) as usize] = BigInt::one();
        CycInt { modulus, coeffs }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn check_same(&self, other: &CycInt) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    pub fn add(&self, other: &CycInt) -> Result<CycInt> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycInt { modulus: self.modulus, coeffs })
    }

    pub fn sub(&self, other: &CycInt) -> Result<CycInt> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycInt { modulus: self.modulus, coeffs })
    }

    /// Product as cyclic convolution (indices mod `m`).
    pub fn mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check_same(other)?;
        let m = self.modulus;
        let mut coeffs = vec![BigInt::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                coeffs[(i + j) % m] += a * b;
            }
        }
        Ok(CycInt { modulus: m, coeffs })
    }

    pub fn scale(&self, c: &BigInt) -> CycInt {
        CycInt { modulus: self.modulus, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// The automorphism `zeta -> zeta^a`; requires `gcd(a, m) = 1`.
    pub fn galois(&self, a: i64) -> Result<CycInt> {
        let m = self.modulus as i64;
        let a = a.rem_euclid(m);
        if a.gcd(&m) != 1 {
            return Err(Error::NotCoprime { a, m: self.modulus });
        }
        let mut coeffs = vec![BigInt::zero(); self.modulus];
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = ((i as i128 * a as i128) % m as i128) as usize;
            coeffs[j] += c;
        }
        Ok(CycInt { modulus: self.modulus, coeffs })
    }

    /// Complex conjugation, i.e. `galois(-1)`.
    pub fn conj(&self) -> CycInt {
        let m = self.modulus;
        let mut coeffs = vec![BigInt::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(m - i) % m] = c.clone();
        }
        CycInt { modulus: m, coeffs }
    }

    /// Remainder modulo `Phi_m`: coefficients at indices `>= phi(m)` are zero.
    /// Canonical forms are equal exactly when the ring elements are.
    pub fn canonical(&self) -> CycInt {
        let phi = cyclotomic_poly(self.modulus);
        let d = phi.degree().expect("Phi_m is nonzero");
        let mut c = self.coeffs.clone();
        for i in (d..c.len()).rev() {
            let top = std::mem::take(&mut c[i]);
            if top.is_zero() {
                continue;
            }
            for (j, pj) in phi.coeffs()[..d].iter().enumerate() {
                if !pj.is_zero() {
                    c[i - d + j] -= &top * pj;
                }
            }
        }
        CycInt { modulus: self.modulus, coeffs: c }
    }

    pub fn same_element(&self, other: &CycInt) -> Result<bool> {
        Ok(self.sub(other)?.canonical().coeffs.iter().all(Zero::is_zero))
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().coeffs.iter().all(Zero::is_zero)
    }

    /// `|alpha|^2 = alpha * conj(alpha)`, in canonical form.
    pub fn abs_square(&self) -> CycInt {
        self.mul(&self.conj()).expect("same modulus").canonical()
    }

    /// The rational integer this element equals, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        let c = self.canonical();
        if c.coeffs[1..].iter().all(Zero::is_zero) {
            Some(c.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Image under `Z[zeta_m] -> Z[zeta_(l*m)]`, `zeta_m -> zeta_(l*m)^l`.
    pub fn embed(&self, l: usize) -> CycInt {
        assert!(l >= 1);
        let mut coeffs = vec![BigInt::zero(); self.modulus * l];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * l] = c.clone();
        }
        CycInt { modulus: self.modulus * l, coeffs }
    }

    /// Floating-point value at `zeta_m = exp(2 pi i / m)`. Diagnostics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.modulus as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = std::f64::consts::TAU * k as f64 / m;
            (re + c * t.cos(), im + c * t.sin())
        })
    }
}

impl std::ops::Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl std::ops::Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        -&self
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "z")
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt], var: &str) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let a = c.abs();
        match (k, a.is_one()) {
            (0, _) => write!(f, "{a}")?,
            (1, true) => write!(f, "{var}")?,
            (1, false) => write!(f, "{a}*{var}")?,
            (_, true) => write!(f, "{var}^{k}")?,
            (_, false) => write!(f, "{a}*{var}^{k}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Rows `canonical(zeta^k)` for `k in 0..m`, as `i64`, if they fit.
///
/// Memoized, but the cache is dropped wholesale once it holds more than
/// [`ROWS_CACHE_LIMIT`] entries so sweeps over many moduli stay bounded.
fn reduction_rows(m: usize) -> Option<Arc<Vec<Vec<i64>>>> {
    type Rows = Option<Arc<Vec<Vec<i64>>>>;
    static CACHE: OnceLock<RwLock<(usize, HashMap<usize, Rows>)>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.read().expect("rows cache poisoned").1.get(&m) {
        return r.clone();
    }
    let rows = build_rows(m).map(Arc::new);
    let size = rows.as_ref().map_or(0, |r| r.len() * r[0].len());
    let mut guard = cache.write().expect("rows cache poisoned");
    if guard.0 + size > ROWS_CACHE_LIMIT {
        *guard = Default::default();
    }
    guard.0 += size;
    guard.1.insert(m, rows.clone());
    rows
}

fn build_rows(m: usize) -> Option<Vec<Vec<i64>>> {
    let phi = cyclotomic_poly(m);
    let d = phi.degree()?;
    let low: Vec<i64> = phi.coeffs()[..d].iter().map(|c| c.to_i64()).collect::<Option<_>>()?;
    let mut rows = Vec::with_capacity(m);
    let mut cur = vec![0i64; d];
    cur[0] = 1;
    for _ in 0..m {
        rows.push(cur.clone());
        // multiply by x, then fold x^d = -sum low[j] x^j
        let top = cur[d - 1];
        for j in (1..d).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..d {
                cur[j] = cur[j].checked_sub(top.checked_mul(low[j])?)?;
            }
        }
    }
    Some(rows)
}

/// Largest `m * phi(m)` for which the reduction rows are tabulated.
const ROWS_LIMIT: usize = 1 << 24;

/// Total entries kept across all memoized row tables.
const ROWS_CACHE_LIMIT: usize = 1 << 25;

/// Decides `|alpha|^2 == target` for `alpha = sum c_k zeta^k` given by its
/// nonzero `(k, c_k)` pairs, with checked fixed-width arithmetic. `None` when
/// an intermediate value would overflow or `m` is too large to tabulate;
/// callers then fall back to [`CycInt`].
pub(crate) fn norm_equals_small(m: usize, nz: &[(usize, i64)], target: i128) -> Option<bool> {
    if m.saturating_mul(phi_degree(m)) > ROWS_LIMIT {
        return None;
    }
    let rows = reduction_rows(m)?;
    let d = rows[0].len();
    let mut acc = vec![0i128; d];
    for &(i, a) in nz {
        for &(j, b) in nz {
            let k = (i + m - j) % m;
            let w = (a as i128).checked_mul(b as i128)?;
            for (slot, &r) in acc.iter_mut().zip(&rows[k]) {
                if r != 0 {
                    *slot = slot.checked_add(w.checked_mul(r as i128)?)?;
                }
            }
        }
    }
    acc[0] = acc[0].checked_sub(target)?;
    Some(acc.iter().all(|&c| c == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(m: usize, c: &[i64]) -> CycInt {
        CycInt::from_i64(m, c).unwrap()
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(*cyclotomic_poly(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(*cyclotomic_poly(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(*cyclotomic_poly(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(phi_degree(12), 4);
        assert_eq!(phi_degree(105), 48);
    }

    #[test]
    fn phi12_vanishes_at_zeta() {
        // Phi_12(zeta_12) as an element, then reduced.
        let p = cyclotomic_poly(12);
        let mut c = vec![0i64; 12];
        for (i, v) in p.coeffs().iter().enumerate() {
            c[i] = v.to_i64().unwrap();
        }
        assert!(ci(12, &c).is_zero());
    }

    #[test]
    fn zeta_pow_reduces_exponent() {
        let z = CycInt::zeta_pow(5, 7);
        assert_eq!(z, ci(5, &[0, 0, 1, 0, 0]));
        assert_eq!(CycInt::zeta_pow(2, 1).as_integer(), Some(BigInt::from(-1)));
        assert_eq!(CycInt::zeta_pow(6, 3).as_integer(), Some(BigInt::from(-1)));
        assert_eq!(CycInt::zeta_pow(4, -1), CycInt::zeta_pow(4, 3));
    }

    #[test]
    fn ring_examples() {
        let a = ci(5, &[3, -1, 0, 2, 7]);
        assert_eq!(a.add(&CycInt::zero(5)).unwrap(), a);
        for m in 1..10 {
            let p = CycInt::zeta_pow(m, 1).mul(&CycInt::zeta_pow(m, m as i64 - 1)).unwrap();
            assert_eq!(p.canonical(), CycInt::one(m));
        }
        let lhs = ci(5, &[1, 1, 0, 0, 0]).mul(&ci(5, &[1, 0, 0, 0, 1])).unwrap();
        assert!(lhs.same_element(&ci(5, &[2, 1, 0, 0, 1])).unwrap());
        assert_eq!(
            ci(3, &[1, 0, 0]).add(&ci(4, &[0; 4])),
            Err(Error::ModulusMismatch(3, 4))
        );
    }

    #[test]
    fn galois_and_conj() {
        let a = ci(7, &[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(a.galois(1).unwrap(), a);
        assert_eq!(a.galois(6).unwrap(), a.conj());
        let thrice = a.galois(2).unwrap().galois(2).unwrap().galois(2).unwrap();
        assert!(thrice.same_element(&a).unwrap());
        assert_eq!(a.conj().conj(), a);
        assert!(matches!(ci(6, &[1; 6]).galois(3), Err(Error::NotCoprime { .. })));
        // m <= 2: conjugation is the identity
        let b = ci(2, &[4, -3]);
        assert_eq!(b.conj(), b);
        assert_eq!(ci(1, &[9]).conj(), ci(1, &[9]));
    }

    #[test]
    fn canonical_examples() {
        assert!(ci(3, &[1, 1, 1]).is_zero());
        assert!(ci(7, &[1; 7]).is_zero());
        assert_eq!(CycInt::zeta_pow(4, 2).canonical(), ci(4, &[-1, 0, 0, 0]));
        let a = ci(12, &[1, -2, 3, 0, 5, 6, 0, 1, 1, 2, 0, 9]);
        assert_eq!(a.canonical().canonical(), a.canonical());
        assert!(a.canonical().coeffs()[phi_degree(12)..].iter().all(Zero::is_zero));
    }

    #[test]
    fn abs_square_examples() {
        for m in [1, 2, 3, 5, 8, 12] {
            for k in 0..m as i64 {
                assert_eq!(CycInt::zeta_pow(m, k).abs_square().as_integer(), Some(BigInt::one()));
            }
        }
        assert_eq!(ci(4, &[1, 1, 0, 0]).abs_square().as_integer(), Some(BigInt::from(2)));
        assert_eq!(ci(3, &[1, 1, 0]).abs_square().as_integer(), Some(BigInt::from(1)));
    }

    #[test]
    fn as_integer_examples() {
        assert_eq!(CycInt::zero(9).as_integer(), Some(BigInt::zero()));
        assert_eq!(ci(3, &[6, 1, 1]).as_integer(), Some(BigInt::from(5)));
        assert_eq!(CycInt::zeta_pow(5, 1).as_integer(), None);
    }

    #[test]
    fn embed_matches_zeta_identification() {
        let a = ci(4, &[1, -2, 0, 3]);
        let e = a.embed(3);
        assert_eq!(e.modulus(), 12);
        let (re, im) = a.to_complex();
        let (re2, im2) = e.to_complex();
        assert!((re - re2).abs() < 1e-9 && (im - im2).abs() < 1e-9);
    }

    #[test]
    fn small_norm_path_agrees() {
        for m in 1..=16usize {
            for seed in 0..20i64 {
                let c: Vec<i64> = (0..m as i64).map(|i| (i * 7 + seed * 13) % 5 - 2).collect();
                let a = CycInt::from_i64(m, &c).unwrap();
                let n = a.abs_square().as_integer();
                let nz: Vec<(usize, i64)> =
                    c.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, &v)| (i, v)).collect();
                let t = n.clone().map_or(-1, |v| v.to_i128().unwrap());
                assert_eq!(norm_equals_small(m, &nz, t), Some(n.is_some()));
                assert_eq!(norm_equals_small(m, &nz, t + 1), Some(false));
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(ci(4, &[2, -1, 0, 3]).to_string(), "2 - z + 3*z^3");
        assert_eq!(CycInt::zero(3).to_string(), "0");
        assert_eq!(cyclotomic_poly(4).to_string(), "1 + x^2");
    }
}
