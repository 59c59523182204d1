//! Seeded generators of exact random matrices for property checks and reports.
//!
//! Rank-one matrices are drawn as `k·c·rᵀ` with primitive integer vectors `c`,
//! `r` from a box and a random nonzero rational `k`.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::mat2::{Mat2, Vec2};
use crate::number::{int, Rational};
use num_traits::Zero;

/// Entry box: numerators in `[-int_bound, int_bound]`, denominators in
/// `[1, den_bound]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleBox {
    pub int_bound: i64,
    pub den_bound: i64,
}

impl Default for SampleBox {
    fn default() -> Self {
        SampleBox {
            int_bound: 5,
            den_bound: 4,
        }
    }
}

/// Independent generator for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn rational<R: Rng + ?Sized>(rng: &mut R, bx: SampleBox) -> Rational {
    let n = rng.random_range(-bx.int_bound..=bx.int_bound);
    let d = rng.random_range(1..=bx.den_bound.max(1));
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R, bx: SampleBox) -> Rational {
    loop {
        let q = rational(rng, bx);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, bx: SampleBox) -> Mat2 {
    Mat2::new(
        rational(rng, bx),
        rational(rng, bx),
        rational(rng, bx),
        rational(rng, bx),
    )
}

/// Nonzero integer vector with coprime entries.
pub fn primitive_vector<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Vec2 {
    let bound = bound.max(1);
    loop {
        let a: i64 = rng.random_range(-bound..=bound);
        let b: i64 = rng.random_range(-bound..=bound);
        if (a, b) != (0, 0) && a.gcd(&b) == 1 {
            return [int(a), int(b)];
        }
    }
}

pub fn rank_one<R: Rng + ?Sized>(rng: &mut R, bx: SampleBox) -> Mat2 {
    let c = primitive_vector(rng, bx.int_bound);
    let r = primitive_vector(rng, bx.int_bound);
    Mat2::outer(&c, &r).scale(&nonzero_rational(rng, bx))
}

pub fn nonsingular<R: Rng + ?Sized>(rng: &mut R, bx: SampleBox) -> Mat2 {
    loop {
        let m = matrix(rng, bx);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// A singular matrix; zero with probability 1/16, rank one otherwise.
pub fn singular<R: Rng + ?Sized>(rng: &mut R, bx: SampleBox) -> Mat2 {
    if rng.random_range(0..16) == 0 {
        Mat2::zero()
    } else {
        rank_one(rng, bx)
    }
}

/// `u·vᵀ/(vᵀu)` for primitive `u`, `v` with `vᵀu ≠ 0`.
pub fn idempotent_rank_one<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Mat2 {
    loop {
        let u = primitive_vector(rng, bound);
        let v = primitive_vector(rng, bound);
        let pairing = &u[0] * &v[0] + &u[1] * &v[1];
        if !pairing.is_zero() {
            return Mat2::outer(&u, &v).scale(&(Rational::from_integer(1.into()) / pairing));
        }
    }
}
