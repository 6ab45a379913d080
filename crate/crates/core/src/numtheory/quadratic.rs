use serde::{Deserialize, Serialize};

pub fn isqrt(n: u128) -> u128 {
    n.isqrt()
}

fn exact_sqrt(n: u128) -> Option<u128> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// Some nonnegative `(x, y)` with `x^2 + d*y^2 = n`, scanning `y` upwards.
pub fn solve_x2_dy2(d: u64, n: u128) -> Option<(u64, u64)> {
    solve_ax2_by2(1, d, n)
}

/// Some nonnegative `(x, y)` with `a*x^2 + b*y^2 = n`, scanning `y` upwards.
pub fn solve_ax2_by2(a: u64, b: u64, n: u128) -> Option<(u64, u64)> {
    assert!(a >= 1 && b >= 1, "coefficients must be positive");
    let (a, b) = (a as u128, b as u128);
    let mut y = 0u128;
    while b * y * y <= n {
        let rest = n - b * y * y;
        if rest % a == 0 {
            if let Some(x) = exact_sqrt(rest / a) {
                return Some((x as u64, y as u64));
            }
        }
        y += 1;
    }
    None
}

/// The binary forms the descent criteria search over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuadForm {
    /// `x^2 + d*y^2`
    Principal { d: u64 },
    /// `a*x^2 + b*y^2`
    Diagonal { a: u64, b: u64 },
}

impl QuadForm {
    fn coeffs(&self) -> (u64, u64) {
        match *self {
            QuadForm::Principal { d } => (1, d),
            QuadForm::Diagonal { a, b } => (a, b),
        }
    }

    pub fn eval(&self, x: u64, y: u64) -> u128 {
        let (a, b) = self.coeffs();
        a as u128 * x as u128 * x as u128 + b as u128 * y as u128 * y as u128
    }

    pub fn solve(&self, n: u128) -> Option<(u64, u64)> {
        let (a, b) = self.coeffs();
        solve_ax2_by2(a, b, n)
    }

    /// Number of `y` values [`solve`](Self::solve) visits for right-hand side `n`.
    pub fn scan_len(&self, n: u128) -> u128 {
        isqrt(n / self.coeffs().1 as u128) + 1
    }
}

impl std::fmt::Display for QuadForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            QuadForm::Principal { d } => write!(f, "x^2+{d}y^2"),
            QuadForm::Diagonal { a, b } => write!(f, "{a}x^2+{b}y^2"),
        }
    }
}

/// `form(x, y) = 2^(r+2) * multiplier`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadSolution {
    pub form: QuadForm,
    pub multiplier: u64,
    pub x: u64,
    pub y: u64,
    pub r: u64,
}

impl QuadSolution {
    pub fn rhs(&self) -> Option<u128> {
        rhs(self.r, self.multiplier)
    }

    /// Re-substitutes the solution into its equation.
    pub fn holds(&self) -> bool {
        self.rhs().is_some_and(|n| self.form.eval(self.x, self.y) == n)
    }
}

fn rhs(r: u64, multiplier: u64) -> Option<u128> {
    let e = u32::try_from(r + 2).ok()?;
    1u128.checked_shl(e).filter(|_| e < 128)?.checked_mul(multiplier as u128)
}

/// Least odd `r <= bound` for which `form = 2^(r+2) * multiplier` is
/// solvable, with a witness.
pub fn min_odd_r(form: QuadForm, multiplier: u64, bound: u64) -> Option<QuadSolution> {
    (1..=bound).step_by(2).find_map(|r| {
        let n = rhs(r, multiplier)?;
        form.solve(n).map(|(x, y)| QuadSolution { form, multiplier, x, y, r })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_examples() {
        assert_eq!(solve_x2_dy2(7, 8), Some((1, 1)));
        assert_eq!(solve_x2_dy2(23, 32), Some((3, 1)));
        assert_eq!(solve_x2_dy2(199, 640), Some((21, 1)));
        assert_eq!(solve_x2_dy2(7, 3), None);
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(solve_ax2_by2(19, 29, 1 << 15), Some((21, 29)));
        assert_eq!(solve_ax2_by2(19, 29, 8), None);
        assert_eq!(solve_ax2_by2(3, 5, 8), Some((1, 1)));
    }

    #[test]
    fn min_odd_r_examples() {
        let s = min_odd_r(QuadForm::Principal { d: 47 }, 1, 5).unwrap();
        assert_eq!((s.r, s.x, s.y), (5, 9, 1));
        assert!(s.holds());
        let s = min_odd_r(QuadForm::Principal { d: 199 }, 5, 9).unwrap();
        assert_eq!((s.r, s.x, s.y), (5, 21, 1));
        let s = min_odd_r(QuadForm::Diagonal { a: 19, b: 29 }, 1, 26).unwrap();
        assert_eq!((s.r, s.x, s.y), (13, 21, 29));
        assert_eq!(min_odd_r(QuadForm::Diagonal { a: 19, b: 29 }, 1, 11), None);
    }
}
