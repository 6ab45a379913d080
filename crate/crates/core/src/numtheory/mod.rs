//! Elementary and quadratic number theory behind the nonexistence criteria.

mod classno;
mod factor;
mod order;
mod quadratic;
mod semigroup;
mod symbol;

pub use classno::{class_number, discriminant, is_squarefree, reduced_forms};
pub use factor::{euler_phi, factorize, is_prime, Factorization, PrimePower};
pub use order::{
    mul_mod, mult_order_2, pow_mod, semiprimitive, semiprimitive_check, v2, wieferich_ok,
    PrimeValuation, SemiprimitiveCheck,
};
pub use quadratic::{isqrt, min_odd_r, solve_ax2_by2, solve_x2_dy2, QuadForm, QuadSolution};
pub use semigroup::semigroup_member;
pub use symbol::jacobi;
