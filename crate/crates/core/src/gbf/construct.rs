//! Known constructions of generalized bent functions and the two
//! combinators that preserve bentness.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{is_gbf, parity, FunctionTable, GbfType};
use crate::error::{Error, Result};

/// `x_1 x_2 + x_3 x_4 + ... + x_(n-1) x_n` over `Z_2`.
pub fn construct_boolean_bent(n: u32) -> Result<FunctionTable> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Parity("boolean bent functions need an even number of variables"));
    }
    let pairs = (0..n / 2).fold(0usize, |acc, i| acc | 1 << (2 * i));
    FunctionTable::from_fn(GbfType::new(2, n)?, |x| ((x & (x >> 1) & pairs).count_ones() & 1) as u64)
}

/// `f(x, y) = g(y) + (m/2) * (x . sigma(y))` for even `m` and `n = 2t`.
///
/// `x` is the low `t` index bits, `y` the high `t` bits. `g` is a table of
/// type `{m, t}` (zero when absent) and `sigma` a permutation of `0..2^t`
/// (identity when absent).
pub fn construct_even_even(
    m: u64,
    n: u32,
    g: Option<&FunctionTable>,
    sigma: Option<&[usize]>,
) -> Result<FunctionTable> {
    if m % 2 == 1 || n % 2 == 1 {
        return Err(Error::Parity("this construction needs both m and n even"));
    }
    let gbf_type = GbfType::new(m, n)?;
    let t = n / 2;
    let half = 1usize << t;
    if let Some(g) = g {
        let want = GbfType::new(m, t)?;
        if g.gbf_type() != want {
            return Err(Error::InvalidType { m: g.gbf_type().m, n: g.gbf_type().n, reason: "g must have type {m, n/2}" });
        }
    }
    if let Some(s) = sigma {
        let mut seen = vec![false; half];
        if s.len() != half || !s.iter().all(|&v| v < half && !std::mem::replace(&mut seen[v], true)) {
            return Err(Error::NotPermutation(half));
        }
    }
    let l = m / 2;
    FunctionTable::from_fn(gbf_type, |i| {
        let (x, y) = (i & (half - 1), i >> t);
        let sy = sigma.map_or(y, |s| s[y]);
        let gy = g.map_or(0, |g| g.value(y));
        (gy + if parity(x, sy) { l } else { 0 }) % m
    })
}

/// [`construct_even_even`] with `g` and `sigma` drawn from a seeded RNG.
pub fn construct_even_even_seeded(m: u64, n: u32, seed: u64) -> Result<FunctionTable> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Parity("this construction needs both m and n even"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = n / 2;
    let g = FunctionTable::new(
        GbfType::new(m, t)?,
        (0..1usize << t).map(|_| rng.gen_range(0..m)).collect(),
    )?;
    let mut sigma: Vec<usize> = (0..1usize << t).collect();
    sigma.shuffle(&mut rng);
    construct_even_even(m, n, Some(&g), Some(&sigma))
}

/// A `{4, n}` GBF from a boolean bent function `b` on `n + 1` variables.
///
/// With `x'` the top variable, `F(x)` is 0, 1, 2, 3 according as
/// `(b(x,0), b(x,1))` is `(0,0)`, `(0,1)`, `(1,1)`, `(1,0)`.
pub fn construct_mod4_from_bent(b: &FunctionTable) -> Result<FunctionTable> {
    let bt = b.gbf_type();
    if bt.m != 2 || bt.n < 2 {
        return Err(Error::InvalidType { m: bt.m, n: bt.n, reason: "expected a boolean table on at least 2 variables" });
    }
    if !is_gbf(b) {
        return Err(Error::NotBent);
    }
    let n = bt.n - 1;
    let top = 1usize << n;
    FunctionTable::from_fn(GbfType::new(4, n)?, |x| match (b.value(x), b.value(x | top)) {
        (0, 0) => 0,
        (0, _) => 1,
        (_, 0) => 3,
        _ => 2,
    })
}

/// `F(x, x') = f(x) + f'(x')`, `x` occupying the low index bits.
pub fn direct_sum(f: &FunctionTable, g: &FunctionTable) -> Result<FunctionTable> {
    let (ft, gt) = (f.gbf_type(), g.gbf_type());
    if ft.m != gt.m {
        return Err(Error::InvalidType { m: gt.m, n: gt.n, reason: "direct sum needs equal moduli" });
    }
    let t = GbfType::new(ft.m, ft.n + gt.n)?;
    let mask = (1usize << ft.n) - 1;
    FunctionTable::from_fn(t, |i| {
        ((f.value(i & mask) as u128 + g.value(i >> ft.n) as u128) % ft.m as u128) as u64
    })
}

/// `F = l * f`, of type `{l*m, n}`.
pub fn lift_modulus(f: &FunctionTable, l: u64) -> Result<FunctionTable> {
    let ft = f.gbf_type();
    if l == 0 {
        return Err(Error::OutOfRange { what: "lift factor", value: 0 });
    }
    let m = ft.m.checked_mul(l).ok_or(Error::OutOfRange { what: "lifted modulus", value: l })?;
    FunctionTable::new(GbfType::new(m, ft.n)?, f.values().iter().map(|&v| v * l).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_bent() {
        assert_eq!(construct_boolean_bent(2).unwrap().values(), &[0, 0, 0, 1]);
        for n in [2, 4, 6] {
            assert!(is_gbf(&construct_boolean_bent(n).unwrap()));
        }
        assert!(construct_boolean_bent(3).is_err());
    }

    #[test]
    fn even_even() {
        assert!(is_gbf(&construct_even_even(6, 2, None, None).unwrap()));
        let b = construct_even_even(2, 2, None, None).unwrap();
        assert_eq!(b.values(), &[0, 0, 0, 1]);
        for seed in 0..5 {
            assert!(is_gbf(&construct_even_even_seeded(10, 4, seed).unwrap()));
        }
        assert!(construct_even_even(5, 2, None, None).is_err());
        assert!(construct_even_even(6, 3, None, None).is_err());
        assert!(matches!(
            construct_even_even(6, 4, None, Some(&[0, 0, 1, 2])),
            Err(Error::NotPermutation(4))
        ));
    }

    #[test]
    fn mod4_from_bent() {
        let f = construct_mod4_from_bent(&construct_boolean_bent(2).unwrap()).unwrap();
        assert_eq!(f.values(), &[0, 1]);
        assert!(is_gbf(&f));
        let f = construct_mod4_from_bent(&construct_boolean_bent(4).unwrap()).unwrap();
        assert_eq!(f.gbf_type(), GbfType::new(4, 3).unwrap());
        assert!(is_gbf(&f));
        let constant = FunctionTable::constant(GbfType::new(2, 2).unwrap(), 0).unwrap();
        assert_eq!(construct_mod4_from_bent(&constant), Err(Error::NotBent));
    }

    #[test]
    fn combinators() {
        let z4 = FunctionTable::new(GbfType::new(4, 1).unwrap(), vec![0, 1]).unwrap();
        assert!(is_gbf(&direct_sum(&z4, &z4).unwrap()));
        let b2 = construct_boolean_bent(2).unwrap();
        let b4 = direct_sum(&b2, &b2).unwrap();
        assert_eq!(b4.gbf_type(), GbfType::new(2, 4).unwrap());
        assert!(is_gbf(&b4));
        assert!(direct_sum(&z4, &b2).is_err());

        assert_eq!(lift_modulus(&b2, 1).unwrap(), b2);
        let l3 = lift_modulus(&b2, 3).unwrap();
        assert_eq!(l3.values(), &[0, 0, 0, 3]);
        assert!(is_gbf(&l3));
        assert!(is_gbf(&lift_modulus(&z4, 2).unwrap()));
    }
}
