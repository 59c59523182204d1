//! Float point and segment clouds on the special surfaces, for export.
//!
//! Exact data (inverse charts, generator lines, group inverses) is computed in
//! `gq-core` and only the final coordinates are rounded to `f64`. Point `i`
//! draws from its own seeded stream, so output depends only on the seed and
//! the index.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

use gq_core::green::{self, rank_factorization};
use gq_core::number::rational_to_f64;
use gq_core::random::trial_rng;
use gq_core::sections::{self, Hyperplane};
use gq_core::sets::{self, Family};
use gq_core::{Mat2, Rational};
use num_traits::Zero;
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceKind {
    /// Rank-one idempotents: `SP(I;1)`.
    Idempotents,
    /// Nilpotents: the cone `SP(I;0)`.
    Nilpotents,
    Section {
        a: Mat2,
        lambda: Rational,
    },
    /// Both rulings of the idempotent hyperboloid, starting with the lines through `e`.
    GeneratorLines {
        e: Mat2,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SampleError {
    #[error("unknown surface kind '{0}' (expected one of idempotents, nilpotents, section, generator-lines)")]
    UnknownKind(String),
    #[error("surface kind '{0}' needs {1}")]
    MissingParameter(&'static str, &'static str),
    #[error("sample count must be at least 1")]
    NoSamples,
    #[error(transparent)]
    Domain(#[from] gq_core::Error),
}

/// A kind name without its parameters, as typed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindName {
    Idempotents,
    Nilpotents,
    Section,
    GeneratorLines,
}

impl FromStr for KindName {
    type Err = SampleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "idempotents" => Ok(KindName::Idempotents),
            "nilpotents" => Ok(KindName::Nilpotents),
            "section" => Ok(KindName::Section),
            "generator-lines" | "generator_lines" => Ok(KindName::GeneratorLines),
            other => Err(SampleError::UnknownKind(other.to_string())),
        }
    }
}

impl fmt::Display for KindName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KindName::Idempotents => "idempotents",
            KindName::Nilpotents => "nilpotents",
            KindName::Section => "section",
            KindName::GeneratorLines => "generator-lines",
        })
    }
}

impl SurfaceKind {
    pub fn from_parts(
        name: KindName,
        a: Option<Mat2>,
        lambda: Option<Rational>,
        e: Option<Mat2>,
    ) -> Result<SurfaceKind, SampleError> {
        Ok(match name {
            KindName::Idempotents => SurfaceKind::Idempotents,
            KindName::Nilpotents => SurfaceKind::Nilpotents,
            KindName::Section => SurfaceKind::Section {
                a: a.ok_or(SampleError::MissingParameter("section", "--a"))?,
                lambda: lambda.ok_or(SampleError::MissingParameter("section", "--lambda"))?,
            },
            KindName::GeneratorLines => SurfaceKind::GeneratorLines {
                e: e.ok_or(SampleError::MissingParameter("generator-lines", "--e"))?,
            },
        })
    }

    pub fn label(&self) -> String {
        match self {
            SurfaceKind::Idempotents => "idempotents".into(),
            SurfaceKind::Nilpotents => "nilpotents".into(),
            SurfaceKind::Section { a, lambda } => format!("section(a={a},lambda={lambda})"),
            SurfaceKind::GeneratorLines { e } => format!("generator-lines(e={e})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplePoint {
    /// Ambient coordinates, row-major.
    pub x: [f64; 4],
    /// Bell coordinates when the hyperplane is `P(I;λ)`.
    pub bell: Option<[f64; 3]>,
    /// Coordinates in the exported 3-dimensional chart.
    pub chart: [f64; 3],
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceSample {
    pub label: String,
    pub seed: u64,
    pub requested: usize,
    pub points: Vec<SamplePoint>,
    /// Index pairs into `points`.
    pub segments: Vec<(usize, usize)>,
}

/// Options for [`sample_surface`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleOptions {
    /// Range of the Bell `Z` coordinate on hyperboloids and cones; defaults to
    /// `[-3|λ|-1, 3|λ|+1]`.
    pub z_range: Option<(f64, f64)>,
    /// Half-range of chart parameters on paraboloids and planes, and of the
    /// line parameter on generator segments.
    pub extent: f64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            z_range: None,
            extent: 3.0,
        }
    }
}

pub const DEFAULT_SAMPLES: usize = 2000;

fn bell_to_ambient(lambda: f64, [x, y, z]: [f64; 3]) -> [f64; 4] {
    let h = lambda / 2.0;
    [
        h + x * FRAC_1_SQRT_2,
        (y - z) * FRAC_1_SQRT_2,
        (y + z) * FRAC_1_SQRT_2,
        h - x * FRAC_1_SQRT_2,
    ]
}

fn ambient_to_bell(x: &[f64; 4]) -> [f64; 3] {
    [
        (x[0] - x[3]) * FRAC_1_SQRT_2,
        (x[1] + x[2]) * FRAC_1_SQRT_2,
        (x[2] - x[1]) * FRAC_1_SQRT_2,
    ]
}

fn apply(m: &[f64; 4], x: &[f64; 4]) -> [f64; 4] {
    [
        m[0] * x[0] + m[1] * x[2],
        m[0] * x[1] + m[1] * x[3],
        m[2] * x[0] + m[3] * x[2],
        m[2] * x[1] + m[3] * x[3],
    ]
}

fn outer(u: [f64; 2], v: [f64; 2]) -> [f64; 4] {
    [u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]]
}

fn vec_f64(v: &[Rational; 2]) -> [f64; 2] {
    [rational_to_f64(&v[0]), rational_to_f64(&v[1])]
}

fn drop_coordinate(x: &[f64; 4], k: usize) -> [f64; 3] {
    let mut out = [0.0; 3];
    let mut j = 0;
    for (i, v) in x.iter().enumerate() {
        if i != k {
            out[j] = *v;
            j += 1;
        }
    }
    out
}

/// Point on `X² + Y² − Z² = λ²/2` with uniform `θ` and `Z`.
fn hyperboloid_bell<R: Rng>(rng: &mut R, lambda: f64, z_range: (f64, f64)) -> [f64; 3] {
    let z = if z_range.0 < z_range.1 {
        rng.random_range(z_range.0..z_range.1)
    } else {
        z_range.0
    };
    let theta = rng.random_range(0.0..2.0 * PI);
    let rho = (lambda * lambda / 2.0 + z * z).sqrt();
    [rho * theta.cos(), rho * theta.sin(), z]
}

fn default_z_range(lambda: f64) -> (f64, f64) {
    let r = 3.0 * lambda.abs() + 1.0;
    (-r, r)
}

fn bell_point(lambda: f64, bell: [f64; 3]) -> SamplePoint {
    SamplePoint {
        x: bell_to_ambient(lambda, bell),
        bell: Some(bell),
        chart: bell,
    }
}

/// Samples `n` points (or `n` lines per ruling for generator lines).
pub fn sample_surface(
    kind: &SurfaceKind,
    n: usize,
    seed: u64,
    opts: &SampleOptions,
) -> Result<SurfaceSample, SampleError> {
    if n == 0 {
        return Err(SampleError::NoSamples);
    }
    let mut sample = SurfaceSample {
        label: kind.label(),
        seed,
        requested: n,
        points: Vec::with_capacity(n),
        segments: Vec::new(),
    };
    match kind {
        SurfaceKind::Idempotents => sample_bell_family(&mut sample, 1.0, n, seed, opts),
        SurfaceKind::Nilpotents => sample_bell_family(&mut sample, 0.0, n, seed, opts),
        SurfaceKind::Section { a, lambda } => {
            sample_section(&mut sample, a, lambda, n, seed, opts)?
        }
        SurfaceKind::GeneratorLines { e } => sample_generator_lines(&mut sample, e, n, seed, opts)?,
    }
    Ok(sample)
}

fn sample_bell_family(
    sample: &mut SurfaceSample,
    lambda: f64,
    n: usize,
    seed: u64,
    opts: &SampleOptions,
) {
    let z_range = opts.z_range.unwrap_or_else(|| default_z_range(lambda));
    sample.points.extend((0..n).map(|i| {
        let mut rng = trial_rng(seed, i as u64);
        bell_point(lambda, hyperboloid_bell(&mut rng, lambda, z_range))
    }));
}

fn sample_section(
    sample: &mut SurfaceSample,
    a: &Mat2,
    lambda: &Rational,
    n: usize,
    seed: u64,
    opts: &SampleOptions,
) -> Result<(), SampleError> {
    let ext = opts.extent;
    match a.rank() {
        0 => {
            if !lambda.is_zero() {
                // SP(0;λ) is empty for λ ≠ 0.
                return Ok(());
            }
            sample.points.extend((0..n).map(|i| {
                let mut rng = trial_rng(seed, i as u64);
                let u = [rng.random_range(-ext..ext), rng.random_range(-ext..ext)];
                let v = [rng.random_range(-ext..ext), rng.random_range(-ext..ext)];
                let x = outer(u, v);
                SamplePoint {
                    x,
                    bell: None,
                    chart: [x[0], x[1], x[2]],
                }
            }));
        }
        2 => {
            let scalar = a.x2.is_zero() && a.x3.is_zero() && a.x1 == a.x4;
            if scalar {
                // SP(αI;λ) = SP(I;λ/α), which has a Bell frame.
                let l = rational_to_f64(&(lambda / &a.x1));
                sample_bell_family(sample, l, n, seed, opts);
                return Ok(());
            }
            // SP(a;λ) = a⁻¹·SP(I;λ).
            let inv = a.inverse()?.to_f64();
            let l = rational_to_f64(lambda);
            let k = sections::standard_chart_pivot(&Hyperplane::new(a.clone(), lambda.clone()))?;
            let z_range = opts.z_range.unwrap_or_else(|| default_z_range(l));
            sample.points.extend((0..n).map(|i| {
                let mut rng = trial_rng(seed, i as u64);
                let y = bell_to_ambient(l, hyperboloid_bell(&mut rng, l, z_range));
                let x = apply(&inv, &y);
                SamplePoint {
                    x,
                    bell: None,
                    chart: drop_coordinate(&x, k),
                }
            }));
        }
        _ => {
            let k = sections::standard_chart_pivot(&Hyperplane::new(a.clone(), lambda.clone()))?;
            if !lambda.is_zero() {
                // Inverses of a/λ through the bilinear chart.
                let chart =
                    sets::inverse_chart(&a.scale(&(Rational::from_integer(1.into()) / lambda)))?;
                let (d0, d1, q0, q1) = (
                    vec_f64(&chart.d0),
                    vec_f64(&chart.d1),
                    vec_f64(&chart.q0),
                    vec_f64(&chart.q1),
                );
                sample.points.extend((0..n).map(|i| {
                    let mut rng = trial_rng(seed, i as u64);
                    let s = rng.random_range(-ext..ext);
                    let t = rng.random_range(-ext..ext);
                    let d = [d0[0] + s * d1[0], d0[1] + s * d1[1]];
                    let q = [q0[0] + t * q1[0], q0[1] + t * q1[1]];
                    let x = outer(d, q);
                    SamplePoint {
                        x,
                        bell: None,
                        chart: drop_coordinate(&x, k),
                    }
                }));
            } else {
                // a = c·rᵀ: alternate between {x·c = 0} (row line c⊥) and
                // {rᵀ·x = 0} (column line r⊥).
                let (c, r) = rank_factorization(a)?;
                let c_perp = vec_f64(
                    &green::ProjLine::spanned_by(&c)
                        .expect("nonzero")
                        .perp()
                        .to_vec(),
                );
                let r_perp = vec_f64(
                    &green::ProjLine::spanned_by(&r)
                        .expect("nonzero")
                        .perp()
                        .to_vec(),
                );
                sample.points.extend((0..n).map(|i| {
                    let mut rng = trial_rng(seed, i as u64);
                    let w = [rng.random_range(-ext..ext), rng.random_range(-ext..ext)];
                    let x = if i % 2 == 0 {
                        outer(w, c_perp)
                    } else {
                        outer(r_perp, w)
                    };
                    SamplePoint {
                        x,
                        bell: None,
                        chart: drop_coordinate(&x, k),
                    }
                }));
            }
        }
    }
    Ok(())
}

fn sample_generator_lines(
    sample: &mut SurfaceSample,
    e: &Mat2,
    n: usize,
    seed: u64,
    opts: &SampleOptions,
) -> Result<(), SampleError> {
    let ext = opts.extent;
    let mut push_segment = |base: [f64; 4], dir: [f64; 4]| {
        let norm = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
        let ends = [-ext, ext].map(|t| {
            let x: [f64; 4] = std::array::from_fn(|k| base[k] + t * dir[k] / norm);
            SamplePoint {
                x,
                bell: Some(ambient_to_bell(&x)),
                chart: ambient_to_bell(&x),
            }
        });
        let i = sample.points.len();
        sample.points.extend(ends);
        sample.segments.push((i, i + 1));
    };

    for family in [Family::L1, Family::L2] {
        let line = sets::generator_line(family, e)?;
        push_segment(line.base.to_f64(), line.dir.to_f64());
    }
    // Further rulings: L1 lines are {(r + t·r⊥)·rᵀ}, L2 lines {c·(c + t·c⊥)ᵀ}
    // for unit r, c.
    for i in 1..n {
        let mut rng = trial_rng(seed, i as u64);
        let phi: f64 = rng.random_range(0.0..PI);
        let u = [phi.cos(), phi.sin()];
        let perp = [-u[1], u[0]];
        push_segment(outer(u, u), outer(perp, u));
        let psi: f64 = rng.random_range(0.0..PI);
        let u = [psi.cos(), psi.sin()];
        let perp = [-u[1], u[0]];
        push_segment(outer(u, u), outer(u, perp));
    }
    Ok(())
}

/// `|x1·x4 − x2·x3| ≤ tol · max(1, ‖x‖²)`.
pub fn near_singular(x: &[f64; 4], tol: f64) -> bool {
    let det = x[0] * x[3] - x[1] * x[2];
    let norm_sq: f64 = x.iter().map(|v| v * v).sum();
    det.abs() <= tol * norm_sq.max(1.0)
}
