//! Uniform cubic B-splines along the strips, Hermite cubics across them, and
//! end-condition transforms on spline amplitudes.
//!
//! Spline index `i` runs over `-1..=m+1` (`m + 3` functions), and `ψ_i` is
//! centred on knot `y_i = i·h` with support `[y_{i-2}, y_{i+2}]`. Amplitude
//! vectors are stored with offset `i + 1`, so slot 0 holds `α_{-1}`.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform knot grid of `m_sections` spans over `[0, length_a]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KnotGrid {
    length_a: f64,
    m_sections: usize,
}

impl KnotGrid {
    pub fn new(length_a: f64, m_sections: usize) -> Result<Self> {
        if !(length_a.is_finite() && length_a > 0.0) {
            return Err(Error::Domain(format!("strip length must be positive, got {length_a}")));
        }
        if m_sections < 3 {
            return Err(Error::Domain(format!(
                "at least 3 spline sections are required, got {m_sections}"
            )));
        }
        Ok(Self { length_a, m_sections })
    }

    pub fn length_a(&self) -> f64 {
        self.length_a
    }

    pub fn m_sections(&self) -> usize {
        self.m_sections
    }

    pub fn h_knot(&self) -> f64 {
        self.length_a / self.m_sections as f64
    }

    /// Number of active splines, `m + 3`.
    pub fn n_splines(&self) -> usize {
        self.m_sections + 3
    }

    pub fn knot(&self, i: isize) -> f64 {
        i as f64 * self.h_knot()
    }

    /// Spline indices `-1..=m+1`.
    pub fn indices(&self) -> std::ops::RangeInclusive<isize> {
        -1..=(self.m_sections as isize + 1)
    }

    /// Knot span containing `y`, clamped to `0..m`.
    pub fn span_of(&self, y: f64) -> usize {
        let s = (y / self.h_knot()).floor();
        (s.max(0.0) as usize).min(self.m_sections - 1)
    }

    /// Values (row = derivative order 0..=2) of the four splines that are
    /// nonzero on span `span`, together with the storage slot of the first.
    ///
    /// The splines on span `s` are `ψ_{s-1} … ψ_{s+2}`, i.e. slots `s..s+4`.
    pub fn span_values(&self, span: usize, y: f64) -> (usize, [[f64; 4]; 3]) {
        let h = self.h_knot();
        let u = (y - span as f64 * h) / h;
        let mut out = [[0.0; 4]; 3];
        for j in 0..4 {
            // ψ_{s-1+j} sees this span as its segment 3 - j.
            let seg = 3 - j;
            for (d, row) in out.iter_mut().enumerate() {
                row[j] = segment(seg, u, d) / h.powi(d as i32);
            }
        }
        (span, out)
    }
}

/// One of the four cubic pieces of the unit B-spline, with `u ∈ [0, 1]`
/// measured from the left end of the piece, differentiated `deriv` times
/// with respect to `u`.
pub fn segment(seg: usize, u: f64, deriv: usize) -> f64 {
    let v = 1.0 - u;
    let val = match (seg, deriv) {
        (0, 0) => u * u * u,
        (0, 1) => 3.0 * u * u,
        (0, 2) => 6.0 * u,
        (1, 0) => 1.0 + 3.0 * u + 3.0 * u * u - 3.0 * u * u * u,
        (1, 1) => 3.0 + 6.0 * u - 9.0 * u * u,
        (1, 2) => 6.0 - 18.0 * u,
        (2, 0) => 1.0 + 3.0 * v + 3.0 * v * v - 3.0 * v * v * v,
        (2, 1) => -(3.0 + 6.0 * v - 9.0 * v * v),
        (2, 2) => 6.0 - 18.0 * v,
        (3, 0) => v * v * v,
        (3, 1) => -3.0 * v * v,
        (3, 2) => 6.0 * v,
        _ => panic!("segment {seg} / derivative {deriv} out of range"),
    };
    val / 6.0
}

/// `ψ_i(y)` or one of its first two derivatives. Zero outside the support.
pub fn eval_b3(grid: &KnotGrid, i: isize, y: f64, deriv: usize) -> f64 {
    assert!(deriv <= 2, "B3 derivatives above the second are not supported");
    let h = grid.h_knot();
    let offset = y - grid.knot(i);
    if offset.abs() >= 2.0 * h {
        return 0.0;
    }
    let t = (offset / h + 2.0).clamp(0.0, 4.0);
    let seg = (t.floor() as usize).min(3);
    segment(seg, t - seg as f64, deriv) / h.powi(deriv as i32)
}

/// `Σ α_i ψ_i(y)` and derivatives.
pub fn eval_series(grid: &KnotGrid, amplitudes: &[f64], y: f64, deriv: usize) -> Result<f64> {
    if amplitudes.len() != grid.n_splines() {
        return Err(Error::LengthMismatch {
            expected: grid.n_splines(),
            got: amplitudes.len(),
        });
    }
    Ok(grid
        .indices()
        .zip(amplitudes)
        .map(|(i, a)| a * eval_b3(grid, i, y, deriv))
        .sum())
}

/// Complete cubic spline interpolation: matches `f` at every knot of
/// `[0, a]` and `df` at both ends.
pub fn interpolate_series<F, D>(grid: &KnotGrid, f: F, df: D) -> Vec<f64>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let n = grid.n_splines();
    let m = grid.m_sections();
    let mut a = DMatrix::zeros(n, n);
    let mut rhs = DVector::zeros(n);
    let h = grid.h_knot();
    // Knot values: ψ_{j-1}, ψ_j, ψ_{j+1} at y_j are 1/6, 2/3, 1/6.
    for j in 0..=m {
        a[(j, j)] = 1.0 / 6.0;
        a[(j, j + 1)] = 2.0 / 3.0;
        a[(j, j + 2)] = 1.0 / 6.0;
        rhs[j] = f(grid.knot(j as isize));
    }
    a[(m + 1, 0)] = -0.5 / h;
    a[(m + 1, 2)] = 0.5 / h;
    rhs[m + 1] = df(0.0);
    a[(m + 2, m)] = -0.5 / h;
    a[(m + 2, m + 2)] = 0.5 / h;
    rhs[m + 2] = df(grid.length_a());
    let sol = a
        .lu()
        .solve(&rhs)
        .expect("complete spline interpolation system is nonsingular");
    sol.iter().copied().collect()
}

/// Hermite cubic `N_k` (k = 1..=4) on a strip of width `b`, or a derivative.
pub fn eval_hermite(strip_width_b: f64, k: usize, x: f64, deriv: usize) -> Result<f64> {
    let b = strip_width_b;
    let slack = 1e-12 * b;
    if x < -slack || x > b + slack {
        return Err(Error::Domain(format!("x = {x} lies outside the strip [0, {b}]")));
    }
    if !(1..=4).contains(&k) || deriv > 2 {
        return Err(Error::Domain(format!("no Hermite function N_{k} derivative {deriv}")));
    }
    Ok(hermite_all(b, x)[deriv][k - 1])
}

/// All four Hermite cubics (columns) and their first two derivatives (rows).
pub fn hermite_all(b: f64, x: f64) -> [[f64; 4]; 3] {
    let s = x / b;
    [
        [
            1.0 - 3.0 * s * s + 2.0 * s * s * s,
            x * (1.0 - 2.0 * s + s * s),
            3.0 * s * s - 2.0 * s * s * s,
            x * (s * s - s),
        ],
        [
            (-6.0 * s + 6.0 * s * s) / b,
            1.0 - 4.0 * s + 3.0 * s * s,
            (6.0 * s - 6.0 * s * s) / b,
            3.0 * s * s - 2.0 * s,
        ],
        [
            (-6.0 + 12.0 * s) / (b * b),
            (-4.0 + 6.0 * s) / b,
            (6.0 - 12.0 * s) / (b * b),
            (6.0 * s - 2.0) / b,
        ],
    ]
}

/// Support condition at one end of a strip or along one plate edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EndCondition {
    Free,
    Simple,
    Clamped,
}

impl EndCondition {
    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'F' => Some(Self::Free),
            'S' => Some(Self::Simple),
            'C' => Some(Self::Clamped),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Self::Free => 'F',
            Self::Simple => 'S',
            Self::Clamped => 'C',
        }
    }
}

/// Maps reduced amplitudes onto the full `m + 3` amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintTransform {
    pub matrix: DMatrix<f64>,
}

impl ConstraintTransform {
    pub fn n_full(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn n_reduced(&self) -> usize {
        self.matrix.ncols()
    }
}

/// Builds the amplitude subspace honouring the conditions at `y = 0` and
/// `y = a` by eliminating the outermost amplitudes.
///
/// At `y = 0`, `w = (α_{-1} + 4α_0 + α_1)/6` and `w' = (α_1 - α_{-1})/(2h)`.
/// Simple eliminates `α_{-1}`; clamped eliminates `α_{-1}` and `α_0`. The far
/// end mirrors this on `α_{m+1}` and `α_m`.
pub fn build_constraint_transform(grid: &KnotGrid, end0: EndCondition, end1: EndCondition) -> ConstraintTransform {
    let n = grid.n_splines();
    let last = n - 1;
    // Each dependent slot is a combination of (coefficient, independent slot).
    let mut dependent: Vec<(usize, Vec<(f64, usize)>)> = Vec::new();
    match end0 {
        EndCondition::Free => {}
        EndCondition::Simple => dependent.push((0, vec![(-4.0, 1), (-1.0, 2)])),
        EndCondition::Clamped => {
            dependent.push((0, vec![(1.0, 2)]));
            dependent.push((1, vec![(-0.5, 2)]));
        }
    }
    match end1 {
        EndCondition::Free => {}
        EndCondition::Simple => dependent.push((last, vec![(-4.0, last - 1), (-1.0, last - 2)])),
        EndCondition::Clamped => {
            dependent.push((last, vec![(1.0, last - 2)]));
            dependent.push((last - 1, vec![(-0.5, last - 2)]));
        }
    }

    let is_dependent = |slot: usize| dependent.iter().any(|(d, _)| *d == slot);
    let free: Vec<usize> = (0..n).filter(|&s| !is_dependent(s)).collect();
    let mut t = DMatrix::zeros(n, free.len());
    for (col, &slot) in free.iter().enumerate() {
        t[(slot, col)] = 1.0;
    }
    for (slot, combo) in &dependent {
        for &(c, src) in combo {
            let col = free.iter().position(|&f| f == src).expect("independent slot");
            t[(*slot, col)] += c;
        }
    }
    ConstraintTransform { matrix: t }
}
