//! Idempotents, nilpotents and semigroup inverses of `M2`, the generating
//! lines of the idempotent hyperboloid, and the natural partial order.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::green::{self, rank_factorization, ProjLine};
use crate::mat2::{Mat2, Vec2};
use crate::number::Rational;
use crate::random::{self, SampleBox};

pub fn is_idempotent(x: &Mat2) -> bool {
    &x.square() == x
}

pub fn is_nilpotent(x: &Mat2) -> bool {
    x.square().is_zero()
}

/// `a·x·a = a` and `x·a·x = x`.
pub fn is_inverse_pair(a: &Mat2, x: &Mat2) -> bool {
    &(a * x) * a == *a && &(x * a) * x == *x
}

/// Membership in the section `tr(a·x) = 1, det x = 0`, which for rank-one `a`
/// is exactly the set of inverses of `a`.
pub fn inverse_membership(a: &Mat2, x: &Mat2) -> Result<bool> {
    if a.rank() != 1 {
        return Err(Error::NotRankOne);
    }
    Ok((a * x).trace().is_one() && x.det().is_zero())
}

/// The Moore–Penrose inverse `aᵀ/⟨a,a⟩` of a rank-one matrix.
pub fn pinv_rank1(a: &Mat2) -> Result<Mat2> {
    if a.rank() != 1 {
        return Err(Error::NotRankOne);
    }
    Ok(a.transpose().scale(&(Rational::one() / a.norm_sq())))
}

/// Affine parametrization of the line `{d : wᵀd = 1}` as `d0 + s·d1`.
///
/// With `k` the first nonzero coordinate of `w` and `j` the other one,
/// `d0 = e_k / w_k` and `d1 = e_j − (w_j / w_k)·e_k`; so `s` is the `j`-th
/// coordinate of `d`.
fn unit_pairing_line(w: &Vec2) -> (Vec2, Vec2, usize) {
    let k = if w[0].is_zero() { 1 } else { 0 };
    let j = 1 - k;
    let mut d0 = [Rational::zero(), Rational::zero()];
    d0[k] = Rational::one() / &w[k];
    let mut d1 = [Rational::zero(), Rational::zero()];
    d1[j] = Rational::one();
    d1[k] = -(&w[j] / &w[k]);
    (d0, d1, j)
}

fn axpy(base: &Vec2, t: &Rational, dir: &Vec2) -> Vec2 {
    [&base[0] + t * &dir[0], &base[1] + t * &dir[1]]
}

fn dot(u: &Vec2, v: &Vec2) -> Rational {
    &u[0] * &v[0] + &u[1] * &v[1]
}

/// Bilinear chart `(s, t) ↦ (d0 + s·d1)·(q0 + t·q1)ᵀ` onto the inverses of a
/// rank-one `a = c·rᵀ`, normalized by `rᵀd = 1` and `qᵀc = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseChart {
    pub a: Mat2,
    pub d0: Vec2,
    pub d1: Vec2,
    pub q0: Vec2,
    pub q1: Vec2,
    c: Vec2,
    r: Vec2,
    d_coord: usize,
    q_coord: usize,
}

pub fn inverse_chart(a: &Mat2) -> Result<InverseChart> {
    let (c, r) = rank_factorization(a)?;
    let (d0, d1, d_coord) = unit_pairing_line(&r);
    let (q0, q1, q_coord) = unit_pairing_line(&c);
    Ok(InverseChart {
        a: a.clone(),
        d0,
        d1,
        q0,
        q1,
        c,
        r,
        d_coord,
        q_coord,
    })
}

impl InverseChart {
    pub fn eval(&self, s: &Rational, t: &Rational) -> Mat2 {
        Mat2::outer(&axpy(&self.d0, s, &self.d1), &axpy(&self.q0, t, &self.q1))
    }

    /// Chart parameters of `x`, or `None` if `x` is not an inverse of `a`.
    pub fn locate(&self, x: &Mat2) -> Option<(Rational, Rational)> {
        if !is_inverse_pair(&self.a, x) {
            return None;
        }
        // x = d·qᵀ with rᵀd = qᵀc = 1 forces d = x·c and q = xᵀ·r.
        let d = x.apply(&self.c);
        let q = x.apply_left(&self.r);
        Some((d[self.d_coord].clone(), q[self.q_coord].clone()))
    }
}

/// The two rulings of the idempotent hyperboloid: `L1` lines are `E(L_e)`,
/// `L2` lines are `E(R_e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    L1,
    L2,
}

/// The line `{base + t·dir}` of rank-one idempotents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorLine {
    pub base: Mat2,
    pub dir: Mat2,
    pub family: Family,
}

impl GeneratorLine {
    pub fn point(&self, t: &Rational) -> Mat2 {
        &self.base + &self.dir.scale(t)
    }
}

fn is_rank1_idempotent(e: &Mat2) -> bool {
    e.rank() == 1 && is_idempotent(e)
}

/// The generating line through `e`: `e + (I−e)·M2·e` for `L1` and
/// `e + e·M2·(I−e)` for `L2`.
pub fn generator_line(family: Family, e: &Mat2) -> Result<GeneratorLine> {
    if !is_rank1_idempotent(e) {
        return Err(Error::NotIdempotentRank1);
    }
    let complement = &Mat2::identity() - e;
    // The image of M2 under m ↦ (I−e)·m·e is one-dimensional; the first
    // nonzero image of a standard basis matrix spans it.
    let dir = (0..4)
        .map(|k| {
            let m = Mat2::unit(k);
            match family {
                Family::L1 => &(&complement * &m) * e,
                Family::L2 => &(e * &m) * &complement,
            }
        })
        .find(|d| !d.is_zero())
        .expect("(I-e)M2e is a line for rank-one idempotent e");
    Ok(GeneratorLine {
        base: e.clone(),
        dir,
        family,
    })
}

/// Outcome of intersecting two generator lines.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineMeet {
    Point(Mat2),
    Disjoint,
    /// The two descriptions give the same line.
    Same,
}

impl LineMeet {
    pub fn point(&self) -> Option<&Mat2> {
        match self {
            LineMeet::Point(m) => Some(m),
            _ => None,
        }
    }
}

/// Exact solution of `base1 + t·dir1 = base2 + u·dir2`.
pub fn line_meet(g1: &GeneratorLine, g2: &GeneratorLine) -> LineMeet {
    let d1 = g1.dir.entries();
    let d2 = g2.dir.entries();
    let rhs = &g2.base - &g1.base;
    let rhs = rhs.entries();

    // t·d1 − u·d2 = rhs: pick a nonsingular 2×2 subsystem, then verify all four rows.
    let minor = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, -(d1[i] * d2[j]) + d1[j] * d2[i]))
        .find(|(_, _, det)| !det.is_zero());
    let Some((i, j, det)) = minor else {
        // Parallel directions.
        let on_line = !green::independent(&Mat2::from_entries(rhs.map(Clone::clone)), &g1.dir);
        return if on_line {
            LineMeet::Same
        } else {
            LineMeet::Disjoint
        };
    };
    // Cramer on [[d1_i, -d2_i], [d1_j, -d2_j]]·(t, u) = (rhs_i, rhs_j).
    let t = (-(rhs[i] * d2[j]) + rhs[j] * d2[i]) / &det;
    let p = g1.point(&t);
    let u = (d1[i] * rhs[j] - d1[j] * rhs[i]) / &det;
    if g2.point(&u) == p {
        LineMeet::Point(p)
    } else {
        LineMeet::Disjoint
    }
}

/// The unique idempotent with column line `col` and row line `row`:
/// `u·vᵀ/(vᵀu)`.
pub fn idempotent_from_spaces(col: &ProjLine, row: &ProjLine) -> Result<Mat2> {
    let u = col.to_vec();
    let v = row.to_vec();
    let pairing = dot(&u, &v);
    if pairing.is_zero() {
        return Err(Error::DegeneratePairing);
    }
    Ok(Mat2::outer(&u, &v).scale(&(Rational::one() / pairing)))
}

/// Natural partial order: `x ≤ y` iff the column line of `x` is contained in
/// that of `y` and `x = f·y` for an idempotent `f` with the column line of `x`.
pub fn natural_le(x: &Mat2, y: &Mat2) -> bool {
    if x == y {
        return true;
    }
    match x.rank() {
        0 => return true,
        // Only f = I has full column space, forcing x = y.
        2 => return false,
        _ => {}
    }
    let ux = green::colspace(x).expect("rank one");
    match y.rank() {
        0 => return false,
        1 if green::colspace(y).as_ref() != Some(&ux) => return false,
        _ => {}
    }
    let u = ux.to_vec();
    // x = u·pᵀ; candidates f = u·vᵀ with vᵀu = 1, v = v0 + s·w.
    let k = if u[0].is_zero() { 1 } else { 0 };
    let row = x.row(k);
    let p = [&row[0] / &u[k], &row[1] / &u[k]];
    let (v0, w, _) = unit_pairing_line(&u);
    // Need vᵀ·y = pᵀ, i.e. s·(wᵀy) = pᵀ − v0ᵀy.
    let g = y.apply_left(&w);
    let h0 = y.apply_left(&v0);
    let h = [&p[0] - &h0[0], &p[1] - &h0[1]];
    match g.iter().position(|gi| !gi.is_zero()) {
        None => h.iter().all(Zero::is_zero),
        Some(i) => {
            let s = &h[i] / &g[i];
            let v = axpy(&v0, &s, &w);
            let f = Mat2::outer(&u, &v);
            &f * y == *x
        }
    }
}

/// Minus order: `rank(y − x) = rank(y) − rank(x)`.
pub fn minus_le(x: &Mat2, y: &Mat2) -> bool {
    i16::from((y - x).rank()) == i16::from(y.rank()) - i16::from(x.rank())
}

/// Tabulation of the natural order against the sections `SP(a;1)` and
/// `SP(a⁻¹;1)` over random nonzero singular `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSectionReport {
    pub a: Mat2,
    pub seed: u64,
    pub trials: usize,
    pub le_count: usize,
    pub section_count: usize,
    pub inv_section_count: usize,
    /// Trials where `x ≤ a` agrees with `x ∈ SP(a⁻¹;1)`.
    pub agree_le_vs_inv_section: usize,
    /// Trials where `x ≤ a` agrees with `x ∈ SP(a;1)`.
    pub agree_le_vs_section: usize,
    /// Up to ten `x` where `x ≤ a` and `x ∈ SP(a⁻¹;1)` disagree.
    pub counterexamples: Vec<Mat2>,
    /// Up to ten `x` where `x ≤ a` and `x ∈ SP(a;1)` disagree.
    pub section_mismatches: Vec<Mat2>,
}

const MAX_EXAMPLES: usize = 10;

/// Runs `trials` deterministic trials. Trial `i` draws from its own stream:
/// `i mod 3 = 0` gives `x = f·a`, `1` gives `x = a⁻¹·f` for a random rank-one
/// idempotent `f`, and `2` gives a generic rank-one `x`.
pub fn order_section_report(a: &Mat2, trials: usize, seed: u64) -> Result<OrderSectionReport> {
    let a_inv = a.inverse()?;
    let bx = SampleBox::default();
    let mut report = OrderSectionReport {
        a: a.clone(),
        seed,
        trials,
        le_count: 0,
        section_count: 0,
        inv_section_count: 0,
        agree_le_vs_inv_section: 0,
        agree_le_vs_section: 0,
        counterexamples: Vec::new(),
        section_mismatches: Vec::new(),
    };
    let in_section = |m: &Mat2, x: &Mat2| (m * x).trace().is_one() && x.det().is_zero();
    for i in 0..trials {
        let mut rng = random::trial_rng(seed, i as u64);
        let x = match i % 3 {
            0 => &random::idempotent_rank_one(&mut rng, bx.int_bound) * a,
            1 => &a_inv * &random::idempotent_rank_one(&mut rng, bx.int_bound),
            _ => random::rank_one(&mut rng, bx),
        };
        let le = natural_le(&x, a);
        let sec = in_section(a, &x);
        let inv_sec = in_section(&a_inv, &x);
        report.le_count += usize::from(le);
        report.section_count += usize::from(sec);
        report.inv_section_count += usize::from(inv_sec);
        if le == inv_sec {
            report.agree_le_vs_inv_section += 1;
        } else if report.counterexamples.len() < MAX_EXAMPLES {
            report.counterexamples.push(x.clone());
        }
        if le == sec {
            report.agree_le_vs_section += 1;
        } else if report.section_mismatches.len() < MAX_EXAMPLES {
            report.section_mismatches.push(x);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{int, rat};

    fn e() -> Mat2 {
        Mat2::int(1, 0, 0, 0)
    }

    #[test]
    fn idempotent_and_nilpotent_examples() {
        assert!(is_idempotent(&e()));
        assert!(is_nilpotent(&Mat2::int(1, 1, -1, -1)));
        let half = rat(1, 2);
        assert!(is_idempotent(&Mat2::new(
            half.clone(),
            half.clone(),
            half.clone(),
            half
        )));
        assert!(!is_nilpotent(&e()));
        assert!(!is_idempotent(&Mat2::int(0, 1, 0, 0)));
    }

    #[test]
    fn inverse_pairs() {
        assert!(is_inverse_pair(&Mat2::identity(), &Mat2::identity()));
        assert!(is_inverse_pair(
            &Mat2::int(0, 1, 0, 0),
            &Mat2::int(0, 0, 1, 0)
        ));
        assert!(!is_inverse_pair(
            &Mat2::int(0, 1, 0, 0),
            &Mat2::int(0, 1, 0, 0)
        ));
    }

    #[test]
    fn membership_examples() {
        assert!(inverse_membership(&e(), &Mat2::int(1, 2, 3, 6)).unwrap());
        assert!(is_inverse_pair(&e(), &Mat2::int(1, 2, 3, 6)));
        assert!(!inverse_membership(&e(), &Mat2::identity()).unwrap());
        assert!(inverse_membership(&Mat2::int(0, 1, 0, 0), &Mat2::int(5, 10, 1, 2)).unwrap());
        assert_eq!(
            inverse_membership(&Mat2::identity(), &e()),
            Err(Error::NotRankOne)
        );
    }

    #[test]
    fn pseudo_inverses() {
        assert_eq!(pinv_rank1(&e()).unwrap(), e());
        assert_eq!(
            pinv_rank1(&Mat2::int(0, 1, 0, 0)).unwrap(),
            Mat2::int(0, 0, 1, 0)
        );
        let q = rat(1, 4);
        assert_eq!(
            pinv_rank1(&Mat2::int(1, 1, 1, 1)).unwrap(),
            Mat2::new(q.clone(), q.clone(), q.clone(), q)
        );
        assert_eq!(pinv_rank1(&Mat2::zero()), Err(Error::NotRankOne));
    }

    #[test]
    fn chart_examples() {
        let ch = inverse_chart(&e()).unwrap();
        for (s, t) in [(0, 0), (2, -3), (-1, 5)] {
            let (s, t) = (int(s), int(t));
            let expected = Mat2::new(int(1), t.clone(), s.clone(), &s * &t);
            assert_eq!(ch.eval(&s, &t), expected);
            assert_eq!(ch.locate(&expected), Some((s, t)));
        }
        let ch = inverse_chart(&Mat2::int(0, 1, 0, 0)).unwrap();
        let (s, t) = (rat(3, 2), int(-4));
        assert_eq!(
            ch.eval(&s, &t),
            Mat2::new(s.clone(), &s * &t, int(1), t.clone())
        );
        assert_eq!(ch.locate(&Mat2::identity()), None);
        assert!(inverse_chart(&Mat2::identity()).is_err());
    }

    #[test]
    fn generator_line_examples() {
        let l1 = generator_line(Family::L1, &e()).unwrap();
        assert_eq!(
            (l1.base.clone(), l1.dir.clone()),
            (e(), Mat2::int(0, 0, 1, 0))
        );
        let l2 = generator_line(Family::L2, &e()).unwrap();
        assert_eq!(l2.dir, Mat2::int(0, 1, 0, 0));
        assert_eq!(
            generator_line(Family::L1, &Mat2::identity()),
            Err(Error::NotIdempotentRank1)
        );
        assert_eq!(
            generator_line(Family::L2, &Mat2::int(2, 0, 0, 0)),
            Err(Error::NotIdempotentRank1)
        );
    }

    #[test]
    fn meet_examples() {
        let f = Mat2::int(0, 0, 0, 1);
        let l1e = generator_line(Family::L1, &e()).unwrap();
        let l2e = generator_line(Family::L2, &e()).unwrap();
        let l1f = generator_line(Family::L1, &f).unwrap();
        let l2f = generator_line(Family::L2, &f).unwrap();
        assert_eq!(line_meet(&l1e, &l2e), LineMeet::Point(e()));
        assert_eq!(line_meet(&l1e, &l1f), LineMeet::Disjoint);
        assert_eq!(line_meet(&l1e, &l2f), LineMeet::Disjoint);
        assert_eq!(line_meet(&l1e, &l1e), LineMeet::Same);
        // L1(e) meets the L2 line of the idempotent with column line (1,1).
        let g = idempotent_from_spaces(
            &ProjLine::from_ints(1, 1).unwrap(),
            &ProjLine::from_ints(0, 1).unwrap(),
        )
        .unwrap();
        let l2g = generator_line(Family::L2, &g).unwrap();
        assert_eq!(
            line_meet(&l1e, &l2g),
            LineMeet::Point(Mat2::int(1, 0, 1, 0))
        );
    }

    #[test]
    fn idempotents_from_spaces() {
        let p = |a, b| ProjLine::from_ints(a, b).unwrap();
        assert_eq!(idempotent_from_spaces(&p(1, 0), &p(1, 0)).unwrap(), e());
        assert_eq!(
            idempotent_from_spaces(&p(1, 1), &p(1, 0)).unwrap(),
            Mat2::int(1, 0, 1, 0)
        );
        assert_eq!(
            idempotent_from_spaces(&p(1, 0), &p(0, 1)),
            Err(Error::DegeneratePairing)
        );
    }

    #[test]
    fn order_examples() {
        let y = Mat2::int(3, -1, 2, 7);
        assert!(natural_le(&Mat2::zero(), &y));
        assert!(natural_le(&e(), &Mat2::identity()));
        assert!(natural_le(&y, &y));
        let x = Mat2::diag(rat(1, 2), int(0));
        let y = Mat2::diag(int(2), rat(1, 2));
        assert!(!natural_le(&x, &y));
        assert!(!minus_le(&x, &y));
        assert!(natural_le(&Mat2::diag(int(2), int(0)), &y));
        assert!(!natural_le(&Mat2::identity(), &e()));
        assert!(!natural_le(&e(), &Mat2::zero()));
    }

    #[test]
    fn report_examples() {
        let r = order_section_report(&Mat2::identity(), 60, 1).unwrap();
        assert_eq!(r.agree_le_vs_inv_section, 60);
        assert_eq!(r.agree_le_vs_section, 60);
        assert!(r.le_count > 0);

        let a = Mat2::diag(int(2), rat(1, 2));
        let x = Mat2::diag(int(2), int(0));
        let a_inv = a.inverse().unwrap();
        assert!(natural_le(&x, &a));
        assert_eq!((&a * &x).trace(), int(4));
        assert_eq!((&a_inv * &x).trace(), int(1));
        let x = Mat2::diag(rat(1, 2), int(0));
        assert!(!natural_le(&x, &a));
        assert_eq!((&a * &x).trace(), int(1));

        let r = order_section_report(&a, 90, 9).unwrap();
        assert!(r.counterexamples.is_empty());
        assert!(r.agree_le_vs_section < 90);
        assert_eq!(order_section_report(&e(), 3, 0), Err(Error::Singular));
    }
}
