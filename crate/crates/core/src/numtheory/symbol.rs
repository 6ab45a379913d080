/// Jacobi symbol `(a/n)` for odd `n >= 1`; the Legendre symbol when `n` is
/// an odd prime.
pub fn jacobi(a: i64, n: u64) -> i32 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut t = 1i32;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(jacobi(2, 7), 1);
        assert_eq!(jacobi(29, 19), -1);
        assert_eq!(jacobi(-199, 5), 1);
        assert_eq!(jacobi(-199, 59), -1);
        assert_eq!(jacobi(-199, 101), -1);
        assert_eq!(jacobi(5, 11), 1);
        assert_eq!(jacobi(5, 3), -1);
        assert_eq!(jacobi(3, 9), 0);
        assert_eq!(jacobi(0, 1), 1);
    }
}
