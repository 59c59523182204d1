//! Exact arithmetic for the semigroup `M2` of 2×2 rational matrices.
//!
//! The crate ties the algebraic structure of `M2` (Green's relations,
//! idempotents, nilpotents, semigroup inverses, the natural partial order)
//! to the quadric surfaces cut out of the determinant variety
//! `S2 = {x : det x = 0}` by affine hyperplanes. Every predicate is decided
//! with exact arithmetic in `Q` or `Q(√2)`; floating point only appears in
//! [`number::rational_to_f64`] and [`QuadExt::to_f64`], which exist for export.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod green;
pub mod mat2;
pub mod number;
pub mod random;
pub mod sections;
pub mod sets;
pub mod symmetric;

pub use error::Error;
pub use green::{GreenDescriptor, GreenRelation, PlaneInVariety, PlaneVerdict, ProjLine};
pub use mat2::{Mat2, Mat2Ext, Vec4};
pub use number::{QuadExt, Rational, Sign};
pub use sections::{
    AffineQuadric3, BellPoint, HyperboloidMetrics, Hyperplane, QuadricClass, SectionClass,
};
pub use sets::{Family, GeneratorLine, InverseChart, LineMeet, OrderSectionReport};
pub use symmetric::{Inertia, SymMatrix};
