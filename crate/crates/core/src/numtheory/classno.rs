use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;

use super::factor::factorize;
use crate::error::{Error, Result};

pub fn is_squarefree(d: u64) -> bool {
    d >= 1 && factorize(d).factors.iter().all(|f| f.a == 1)
}

/// Discriminant of the imaginary quadratic field `Q(sqrt(-d))`, `d` squarefree.
pub fn discriminant(d: u64) -> i64 {
    if d % 4 == 3 {
        -(d as i64)
    } else {
        -4 * d as i64
    }
}

/// Reduced primitive forms `(a, b, c)` of negative discriminant `disc`:
/// `|b| <= a <= c`, with `b >= 0` whenever `|b| = a` or `a = c`.
pub fn reduced_forms(disc: i64) -> Vec<(i64, i64, i64)> {
    assert!(disc < 0 && disc.rem_euclid(4) <= 1, "not a negative discriminant");
    let abs = -disc;
    let mut forms = Vec::new();
    let mut b = abs & 1;
    while 3 * b * b <= abs {
        let k = (b * b + abs) / 4;
        let mut a = b.max(1);
        while a * a <= k {
            if k % a == 0 {
                let c = k / a;
                if a.gcd(&b).gcd(&c) == 1 {
                    forms.push((a, b, c));
                    if b > 0 && b < a && a < c {
                        forms.push((a, -b, c));
                    }
                }
            }
            a += 1;
        }
        b += 2;
    }
    forms.sort_unstable();
    forms
}

/// Class number of `Q(sqrt(-d))` by counting reduced forms. Memoized.
pub fn class_number(d: u64) -> Result<u64> {
    static CACHE: OnceLock<Mutex<HashMap<u64, u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&h) = cache.lock().expect("class number cache poisoned").get(&d) {
        return Ok(h);
    }
    if !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    let h = reduced_forms(discriminant(d)).len() as u64;
    cache.lock().expect("class number cache poisoned").insert(d, h);
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(class_number(1), Ok(1));
        assert_eq!(class_number(5), Ok(2));
        assert_eq!(class_number(7), Ok(1));
        assert_eq!(class_number(23), Ok(3));
        assert_eq!(class_number(191), Ok(13));
        assert_eq!(class_number(199), Ok(9));
        assert_eq!(class_number(163), Ok(1));
        assert_eq!(class_number(12), Err(Error::NotSquarefree(12)));
    }

    #[test]
    fn forms_of_minus_23() {
        assert_eq!(reduced_forms(-23), vec![(1, 1, 6), (2, -1, 3), (2, 1, 3)]);
    }
}
