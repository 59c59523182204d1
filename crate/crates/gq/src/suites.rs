//! Seeded property suites behind `gq check`.
//!
//! Trial `i` of invariant `k` (numbered globally across suites) draws from
//! stream `(k << 32) | i`, so the output is a function of seed and trial count
//! alone.

use std::fmt;

use gq_core::green::{self, ClassKind, GreenRelation, PlaneVerdict};
use gq_core::number::{int, parse_rational};
use gq_core::random::{self, trial_rng, SampleBox};
use gq_core::sections::{self, Hyperplane};
use gq_core::sets::{self, Family, LineMeet};
use gq_core::{Mat2, QuadExt, Rational};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_TRIALS: usize = 200;
pub const TRIALS_ENV: &str = "GQ_DEFAULT_TRIALS";

/// Trial count from `GQ_DEFAULT_TRIALS`, falling back to [`DEFAULT_TRIALS`].
pub fn default_trials() -> usize {
    std::env::var(TRIALS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_TRIALS)
}

type Check = fn(&mut ChaCha8Rng) -> bool;

pub struct Invariant {
    pub name: &'static str,
    check: Check,
}

pub struct Suite {
    pub name: &'static str,
    pub invariants: &'static [Invariant],
}

pub const SUITE_NAMES: [&str; 5] = ["exact", "core", "green", "sets", "sections"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub suite: &'static str,
    pub invariant: &'static str,
    pub trials: usize,
    pub failures: usize,
    pub first_failure: Option<usize>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {}::{} {}/{}",
            self.suite,
            self.invariant,
            self.trials - self.failures,
            self.trials
        )?;
        if let Some(i) = self.first_failure {
            write!(f, " first_failure={i}")?;
        }
        Ok(())
    }
}

pub fn suites() -> &'static [Suite] {
    &SUITES
}

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

/// Runs the named suites (all of them when `only` is `None`) in a fixed order.
pub fn run(seed: u64, trials: usize, only: Option<&str>) -> Vec<Outcome> {
    let mut out = Vec::new();
    let mut id: u64 = 0;
    for suite in SUITES.iter() {
        for inv in suite.invariants {
            id += 1;
            if only.is_some_and(|n| n != suite.name) {
                continue;
            }
            let mut failures = 0;
            let mut first_failure = None;
            for i in 0..trials {
                let mut rng = trial_rng(seed, (id << 32) | i as u64);
                if !(inv.check)(&mut rng) {
                    failures += 1;
                    first_failure.get_or_insert(i);
                }
            }
            out.push(Outcome {
                suite: suite.name,
                invariant: inv.name,
                trials,
                failures,
                first_failure,
            });
        }
    }
    out
}

const BX: SampleBox = SampleBox {
    int_bound: 5,
    den_bound: 4,
};

fn quad(rng: &mut ChaCha8Rng) -> QuadExt {
    QuadExt::new(random::rational(rng, BX), random::rational(rng, BX))
}

fn mixed_rank(rng: &mut ChaCha8Rng) -> Mat2 {
    match rng.random_range(0..4) {
        0 => random::singular(rng, BX),
        1 => random::rank_one(rng, BX),
        _ => random::matrix(rng, BX),
    }
}

fn lambda(rng: &mut ChaCha8Rng) -> Rational {
    if rng.random_bool(0.3) {
        Rational::zero()
    } else {
        random::rational(rng, BX)
    }
}

static SUITES: [Suite; 5] = [
    Suite {
        name: "exact",
        invariants: &[
            Invariant {
                name: "rational_display_roundtrip",
                check: exact_roundtrip,
            },
            Invariant {
                name: "quad_field_inverse",
                check: quad_inverse,
            },
            Invariant {
                name: "quad_distributive",
                check: quad_distributive,
            },
            Invariant {
                name: "quad_norm_multiplicative",
                check: quad_norm,
            },
            Invariant {
                name: "quad_sign_matches_float",
                check: quad_sign,
            },
        ],
    },
    Suite {
        name: "core",
        invariants: &[
            Invariant {
                name: "cayley_hamilton",
                check: cayley_hamilton,
            },
            Invariant {
                name: "det_multiplicative",
                check: det_multiplicative,
            },
            Invariant {
                name: "inverse_is_two_sided",
                check: inverse_two_sided,
            },
            Invariant {
                name: "det_polarization",
                check: det_polarization,
            },
            Invariant {
                name: "trace_inner_product",
                check: trace_inner,
            },
            Invariant {
                name: "matrix_display_roundtrip",
                check: matrix_roundtrip,
            },
        ],
    },
    Suite {
        name: "green",
        invariants: &[
            Invariant {
                name: "d_is_equal_rank",
                check: d_is_rank,
            },
            Invariant {
                name: "h_is_l_and_r",
                check: h_is_l_and_r,
            },
            Invariant {
                name: "l_is_left_divisibility",
                check: l_left_divisibility,
            },
            Invariant {
                name: "class_plane_roundtrip",
                check: class_plane_roundtrip,
            },
            Invariant {
                name: "h_class_line_members",
                check: h_line_members,
            },
        ],
    },
    Suite {
        name: "sets",
        invariants: &[
            Invariant {
                name: "idempotent_trace_det",
                check: idempotent_trace_det,
            },
            Invariant {
                name: "nilpotent_trace_det",
                check: nilpotent_trace_det,
            },
            Invariant {
                name: "inverse_chart_roundtrip",
                check: inverse_chart_roundtrip,
            },
            Invariant {
                name: "inverse_membership",
                check: inverse_membership,
            },
            Invariant {
                name: "generator_lines_meet_at_base",
                check: generator_lines,
            },
            Invariant {
                name: "natural_order_is_minus_order",
                check: natural_vs_minus,
            },
        ],
    },
    Suite {
        name: "sections",
        invariants: &[
            Invariant {
                name: "bell_identity",
                check: bell_identity,
            },
            Invariant {
                name: "bell_roundtrip",
                check: bell_roundtrip,
            },
            Invariant {
                name: "restriction_is_det",
                check: restriction_is_det,
            },
            Invariant {
                name: "table_matches_affine_classifier",
                check: table_vs_affine,
            },
            Invariant {
                name: "section_inverse_image",
                check: section_inverse_image,
            },
        ],
    },
];

fn exact_roundtrip(rng: &mut ChaCha8Rng) -> bool {
    let q = random::rational(
        rng,
        SampleBox {
            int_bound: 1000,
            den_bound: 1000,
        },
    );
    let x = quad(rng);
    parse_rational(&q.to_string()).as_ref() == Ok(&q) && x.to_string().parse::<QuadExt>() == Ok(x)
}

fn quad_inverse(rng: &mut ChaCha8Rng) -> bool {
    let q = quad(rng);
    match q.inv() {
        Ok(inv) => &q * &inv == QuadExt::one(),
        Err(_) => q.is_zero(),
    }
}

fn quad_distributive(rng: &mut ChaCha8Rng) -> bool {
    let (a, b, c) = (quad(rng), quad(rng), quad(rng));
    &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
}

fn quad_norm(rng: &mut ChaCha8Rng) -> bool {
    let (a, b) = (quad(rng), quad(rng));
    (&a * &b).norm() == a.norm() * b.norm()
        && &a * &a.conjugate() == QuadExt::from_rational(a.norm())
}

fn quad_sign(rng: &mut ChaCha8Rng) -> bool {
    let q = quad(rng);
    let f = q.to_f64();
    match q.sign() {
        gq_core::Sign::Zero => f == 0.0,
        gq_core::Sign::Positive => f > 0.0,
        gq_core::Sign::Negative => f < 0.0,
    }
}

fn cayley_hamilton(rng: &mut ChaCha8Rng) -> bool {
    let x = random::matrix(rng, BX);
    let lhs = &(&x.square() - &x.scale(&x.trace())) + &Mat2::identity().scale(&x.det());
    lhs.is_zero()
}

fn det_multiplicative(rng: &mut ChaCha8Rng) -> bool {
    let (x, y) = (random::matrix(rng, BX), random::matrix(rng, BX));
    (&x * &y).det() == x.det() * y.det()
}

fn inverse_two_sided(rng: &mut ChaCha8Rng) -> bool {
    let x = random::nonsingular(rng, BX);
    let inv = x.inverse().expect("nonsingular");
    &x * &inv == Mat2::identity() && &inv * &x == Mat2::identity()
}

fn det_polarization(rng: &mut ChaCha8Rng) -> bool {
    let (x, y) = (random::matrix(rng, BX), random::matrix(rng, BX));
    (&x + &y).det() == x.det() + y.det() + x.det_polar(&y)
}

fn trace_inner(rng: &mut ChaCha8Rng) -> bool {
    let (x, y) = (random::matrix(rng, BX), random::matrix(rng, BX));
    x.inner(&y) == (&x.transpose() * &y).trace() && x.inner(&x) == x.norm_sq()
}

fn matrix_roundtrip(rng: &mut ChaCha8Rng) -> bool {
    let x = random::matrix(rng, BX);
    x.to_string().parse::<Mat2>() == Ok(x)
}

fn d_is_rank(rng: &mut ChaCha8Rng) -> bool {
    let (x, y) = (mixed_rank(rng), mixed_rank(rng));
    let d = green::green_eq(GreenRelation::D, &x, &y);
    d == green::green_eq(GreenRelation::J, &x, &y) && d == (x.rank() == y.rank())
}

fn h_is_l_and_r(rng: &mut ChaCha8Rng) -> bool {
    let x = random::rank_one(rng, BX);
    // Bias towards related pairs: share a row or column line half the time.
    let y = match rng.random_range(0..3) {
        0 => &Mat2::outer(&random::primitive_vector(rng, 3), &[int(1), int(0)]) * &x,
        1 => &x * &Mat2::outer(&[int(1), int(0)], &random::primitive_vector(rng, 3)),
        _ => random::rank_one(rng, BX),
    };
    let l = green::green_eq(GreenRelation::L, &x, &y);
    let r = green::green_eq(GreenRelation::R, &x, &y);
    green::green_eq(GreenRelation::H, &x, &y) == (l && r)
}

fn l_left_divisibility(rng: &mut ChaCha8Rng) -> bool {
    // y = s·x with s invertible stays in the L-class of x.
    let x = mixed_rank(rng);
    let s = random::nonsingular(rng, BX);
    let y = &s * &x;
    green::green_eq(GreenRelation::L, &x, &y) && green::green_eq(GreenRelation::R, &x, &(&x * &s))
}

fn class_plane_roundtrip(rng: &mut ChaCha8Rng) -> bool {
    let x = random::rank_one(rng, BX);
    let kind = if rng.random_bool(0.5) {
        ClassKind::L
    } else {
        ClassKind::R
    };
    let (b1, b2) = green::class_plane(kind, &x).expect("rank one");
    let s = random::nonzero_rational(rng, BX);
    let t = random::rational(rng, BX);
    let member = &b1.scale(&s) + &b2.scale(&t);
    let rel = match kind {
        ClassKind::L => GreenRelation::L,
        ClassKind::R => GreenRelation::R,
    };
    let verdict = green::classify_plane(&b1, &b2)
        .expect("independent")
        .verdict;
    let verdict_ok = match (kind, verdict) {
        (ClassKind::L, PlaneVerdict::LClass { rep }) => green::green_eq(GreenRelation::L, &rep, &x),
        (ClassKind::R, PlaneVerdict::RClass { rep }) => green::green_eq(GreenRelation::R, &rep, &x),
        _ => false,
    };
    green::green_eq(rel, &member, &x) && verdict_ok
}

fn h_line_members(rng: &mut ChaCha8Rng) -> bool {
    let x = random::rank_one(rng, BX);
    let line = green::h_class_line(&x).expect("rank one");
    let t = random::nonzero_rational(rng, BX);
    let p = line.point(&t).expect("nonzero parameter");
    line.contains(&x) && green::green_eq(GreenRelation::H, &p, &x)
}

fn idempotent_trace_det(rng: &mut ChaCha8Rng) -> bool {
    let e = random::idempotent_rank_one(rng, 5);
    let x = random::matrix(rng, BX);
    let char_ok = sets::is_idempotent(&x)
        == (x.is_zero() || x == Mat2::identity() || (x.trace().is_one() && x.det().is_zero()));
    sets::is_idempotent(&e) && e.trace().is_one() && e.det().is_zero() && char_ok
}

fn nilpotent_trace_det(rng: &mut ChaCha8Rng) -> bool {
    let c = random::primitive_vector(rng, 5);
    let k = random::nonzero_rational(rng, BX);
    // c·(c⊥)ᵀ is the general nonzero nilpotent up to scale.
    let n = Mat2::outer(&c, &[-c[1].clone(), c[0].clone()]).scale(&k);
    let x = random::matrix(rng, BX);
    let cone = (&n.x2 - &n.x3) * (&n.x2 - &n.x3) == n.norm_sq();
    sets::is_nilpotent(&n)
        && cone
        && sets::is_nilpotent(&x) == (x.trace().is_zero() && x.det().is_zero())
}

fn inverse_chart_roundtrip(rng: &mut ChaCha8Rng) -> bool {
    let a = random::rank_one(rng, BX);
    let chart = sets::inverse_chart(&a).expect("rank one");
    let (s, t) = (random::rational(rng, BX), random::rational(rng, BX));
    let x = chart.eval(&s, &t);
    sets::is_inverse_pair(&a, &x) && chart.locate(&x) == Some((s, t))
}

fn inverse_membership(rng: &mut ChaCha8Rng) -> bool {
    let a = random::rank_one(rng, BX);
    let chart = sets::inverse_chart(&a).expect("rank one");
    let x = if rng.random_bool(0.5) {
        chart.eval(&random::rational(rng, BX), &random::rational(rng, BX))
    } else {
        random::singular(rng, BX)
    };
    sets::inverse_membership(&a, &x) == Ok(sets::is_inverse_pair(&a, &x))
}

fn generator_lines(rng: &mut ChaCha8Rng) -> bool {
    let e = random::idempotent_rank_one(rng, 5);
    let l1 = sets::generator_line(Family::L1, &e).expect("idempotent");
    let l2 = sets::generator_line(Family::L2, &e).expect("idempotent");
    let t = random::rational(rng, BX);
    let on_surface = [l1.point(&t), l2.point(&t)].iter().all(sets::is_idempotent);
    on_surface && sets::line_meet(&l1, &l2) == LineMeet::Point(e)
}

fn natural_vs_minus(rng: &mut ChaCha8Rng) -> bool {
    let y = mixed_rank(rng);
    let x = match rng.random_range(0..3) {
        0 => {
            let f = random::idempotent_rank_one(rng, 3);
            &f * &y
        }
        1 => random::rank_one(rng, BX),
        _ => mixed_rank(rng),
    };
    sets::natural_le(&x, &y) == sets::minus_le(&x, &y)
}

fn bell_identity(rng: &mut ChaCha8Rng) -> bool {
    let m = random::singular(rng, BX);
    let l = m.trace();
    let Ok(p) = sections::to_bell(&m, &l) else {
        return false;
    };
    let lhs = &(&(&p.x * &p.x) + &(&p.y * &p.y)) - &(&p.z * &p.z);
    sections::bell_residual(&m).is_zero() && lhs == QuadExt::from_rational(&l * &l / int(2))
}

fn bell_roundtrip(rng: &mut ChaCha8Rng) -> bool {
    let m = random::matrix(rng, BX);
    let l = m.trace();
    match sections::to_bell(&m, &l) {
        Ok(p) => sections::from_bell(&p).to_rational() == Some(m),
        Err(_) => false,
    }
}

fn restriction_is_det(rng: &mut ChaCha8Rng) -> bool {
    let a = mixed_rank(rng);
    if a.is_zero() {
        return true;
    }
    let h = Hyperplane::new(a, lambda(rng));
    let quad = sections::restrict_quadric(&h).expect("nonzero functional");
    let t = [
        random::rational(rng, BX),
        random::rational(rng, BX),
        random::rational(rng, BX),
    ];
    let x = quad.point(&t);
    h.contains(&x) && quad.eval(&t) == x.det() && quad.coordinates(&x) == Some(t)
}

fn table_vs_affine(rng: &mut ChaCha8Rng) -> bool {
    let a = mixed_rank(rng);
    let l = lambda(rng);
    let class = sections::classify_section(&a, &l);
    match class.expected_quadric() {
        None => a.is_zero(),
        Some(expected) => {
            let quad =
                sections::restrict_quadric(&Hyperplane::new(a, l)).expect("nonzero functional");
            sections::classify_affine_quadric(&quad) == expected
        }
    }
}

fn section_inverse_image(rng: &mut ChaCha8Rng) -> bool {
    // x ∈ SP(I;λ) ⟺ a⁻¹x ∈ SP(a;λ).
    let a = random::nonsingular(rng, BX);
    let l = lambda(rng);
    let y = random::singular(rng, BX);
    let a_inv = a.inverse().expect("nonsingular");
    let x = &a_inv * &y;
    Hyperplane::new(a, l.clone()).section_contains(&x)
        == Hyperplane::new(Mat2::identity(), l).section_contains(&y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_invariants_pass_and_are_reproducible() {
        let a = run(7, 30, None);
        assert!(a.iter().all(Outcome::passed), "{a:#?}");
        assert_eq!(a, run(7, 30, None));
        let total: usize = SUITES.iter().map(|s| s.invariants.len()).sum();
        assert_eq!(a.len(), total);
    }

    #[test]
    fn suite_filter_keeps_streams() {
        let all = run(3, 5, None);
        let sets_only = run(3, 5, Some("sets"));
        let expected: Vec<_> = all.into_iter().filter(|o| o.suite == "sets").collect();
        assert_eq!(sets_only, expected);
        assert!(find("green").is_some() && find("nope").is_none());
        assert_eq!(
            SUITES.iter().map(|s| s.name).collect::<Vec<_>>(),
            SUITE_NAMES
        );
    }

    #[test]
    fn outcome_lines() {
        let o = Outcome {
            suite: "x",
            invariant: "y",
            trials: 4,
            failures: 1,
            first_failure: Some(2),
        };
        assert_eq!(o.to_string(), "FAIL x::y 3/4 first_failure=2");
    }
}
