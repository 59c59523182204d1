//! Small dense symmetric rational matrices: Sylvester inertia by exact
//! congruence diagonalization, and an exact linear solver.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::number::Rational;

/// Counts of positive, negative and zero entries of a congruence-diagonal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn rank(&self) -> usize {
        self.plus + self.minus
    }

    /// The inertia of the negated form.
    pub fn negated(&self) -> Inertia {
        Inertia {
            plus: self.minus,
            minus: self.plus,
            zero: self.zero,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let mut m = SymMatrix::zeros(entries.len());
        for (i, d) in entries.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Builds from rows; returns `None` if the rows are ragged or not symmetric.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        let data: Vec<Rational> = rows.iter().flatten().cloned().collect();
        let m = SymMatrix { n, data };
        (0..n)
            .all(|i| (0..i).all(|j| m.get(i, j) == m.get(j, i)))
            .then_some(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[j * self.n + i] = v.clone();
        self.data[i * self.n + j] = v;
    }

    /// `tᵀ·self·t`.
    pub fn quadratic_form(&self, t: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                acc += self.get(i, j) * &t[i] * &t[j];
            }
        }
        acc
    }

    pub fn mul_vec(&self, t: &[Rational]) -> Vec<Rational> {
        (0..self.n)
            .map(|i| (0..self.n).fold(Rational::zero(), |acc, j| acc + self.get(i, j) * &t[j]))
            .collect()
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.data
            .chunks(self.n.max(1))
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Sylvester inertia.
    ///
    /// Symmetric Gaussian elimination: a nonzero diagonal pivot is taken when
    /// one exists; otherwise a nonzero off-diagonal entry `q` at `(i, j)` forms
    /// the 2×2 pivot block `[[0, q], [q, 0]]`, which contributes one positive
    /// and one negative square, and its Schur complement is eliminated.
    pub fn inertia(&self) -> Inertia {
        let mut a = self.rows();
        let mut active: Vec<usize> = (0..self.n).collect();
        let mut out = Inertia {
            plus: 0,
            minus: 0,
            zero: 0,
        };

        while !active.is_empty() {
            if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
                let p = active.remove(pos);
                let pivot = a[p][p].clone();
                if pivot.is_positive() {
                    out.plus += 1;
                } else {
                    out.minus += 1;
                }
                for &i in &active {
                    let f = &a[i][p] / &pivot;
                    if f.is_zero() {
                        continue;
                    }
                    for &j in &active {
                        let delta = &f * &a[p][j];
                        a[i][j] -= delta;
                    }
                }
                continue;
            }

            let pair = active.iter().enumerate().find_map(|(ai, &i)| {
                active[ai + 1..]
                    .iter()
                    .find(|&&j| !a[i][j].is_zero())
                    .map(|&j| (i, j))
            });
            let Some((p, r)) = pair else {
                out.zero += active.len();
                break;
            };
            active.retain(|&k| k != p && k != r);
            out.plus += 1;
            out.minus += 1;
            // Block inverse of [[0, q], [q, 0]] is [[0, 1/q], [1/q, 0]].
            let inv_q = Rational::one() / &a[p][r];
            for &i in &active {
                for &j in &active {
                    let delta = (&a[i][p] * &a[r][j] + &a[i][r] * &a[p][j]) * &inv_q;
                    a[i][j] -= delta;
                }
            }
        }
        out
    }
}

/// Rank of a dense rational matrix (rows of equal length).
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for row in &mut m[r + 1..] {
            let f = &row[c] / &pivot[c];
            if !f.is_zero() {
                sub_scaled(&mut row[c..cols], &pivot[c..cols], &f);
            }
        }
        r += 1;
    }
    r
}

/// `target -= f·src`, entrywise.
fn sub_scaled(target: &mut [Rational], src: &[Rational], f: &Rational) {
    for (t, s) in target.iter_mut().zip(src) {
        *t -= f * s;
    }
}

/// One solution of `A·x = b`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for v in &mut m[r][c..] {
            *v *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            sub_scaled(&mut row[c..], &pivot[c..], &f);
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}
