//! Finite strip discretization of a rectangular plate.
//!
//! Strips run along `y` (the plate length `length_a`) and are stacked across
//! `x` (the plate width `plate_width_b`). Each nodal line carries two spline
//! amplitude blocks: deflection `w` and slope `θ = ∂w/∂x`. Within a strip the
//! deflection is `Σ_k Σ_j N_k(x) ψ_j(y) δ_kj` with Hermite cubics `N_k`.
//!
//! Stresses are compression positive: the critical state is where
//! `K - σ·Kg` becomes singular, `Kg` being built from the reference load.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::micromechanics::ReducedStiffness;
use crate::quadrature::GaussLegendre;
use crate::spline::{
    build_constraint_transform, hermite_all, interpolate_series, ConstraintTransform, EndCondition, KnotGrid,
};

/// Gauss points per strip in `x` and per knot span in `y`.
pub const GAUSS_POINTS: usize = 4;

/// Largest thickness-to-width ratio accepted as a thin plate.
pub const THIN_PLATE_LIMIT: f64 = 1.0 / 20.0;

/// Four-letter edge code: loaded end `y = 0`, side `x = 0`, loaded end
/// `y = a`, side `x = b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BcCode(pub [EndCondition; 4]);

impl BcCode {
    pub fn end_y0(&self) -> EndCondition {
        self.0[0]
    }
    pub fn side_x0(&self) -> EndCondition {
        self.0[1]
    }
    pub fn end_ya(&self) -> EndCondition {
        self.0[2]
    }
    pub fn side_xb(&self) -> EndCondition {
        self.0[3]
    }
}

impl FromStr for BcCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters: Vec<char> = s.chars().collect();
        if letters.len() != 4 {
            return Err(Error::InvalidBcCode(s.to_string()));
        }
        let mut out = [EndCondition::Free; 4];
        for (slot, c) in out.iter_mut().zip(&letters) {
            *slot = EndCondition::from_letter(*c).ok_or_else(|| Error::InvalidBcCode(s.to_string()))?;
        }
        Ok(Self(out))
    }
}

impl fmt::Display for BcCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.0 {
            write!(f, "{}", c.letter())?;
        }
        Ok(())
    }
}

/// Reference in-plane stresses (GPa), compression positive for `sx0`, `sy0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LoadState {
    pub sx0: f64,
    pub sy0: f64,
    pub sxy0: f64,
}

impl LoadState {
    pub fn new(sx0: f64, sy0: f64, sxy0: f64) -> Result<Self> {
        let l = Self { sx0, sy0, sxy0 };
        l.validate()?;
        Ok(l)
    }

    /// Unit compression along the strips.
    pub fn uniaxial() -> Self {
        Self {
            sx0: 0.0,
            sy0: 1.0,
            sxy0: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.sx0, self.sy0, self.sxy0];
        if all.iter().any(|v| !v.is_finite()) || all.iter().all(|&v| v == 0.0) {
            return Err(Error::Domain(
                "load state needs at least one finite nonzero stress".into(),
            ));
        }
        Ok(())
    }

    fn matrix(&self) -> [[f64; 2]; 2] {
        [[self.sx0, self.sxy0], [self.sxy0, self.sy0]]
    }
}

/// Curvatures `(-w_xx, -w_yy, -2w_xy)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvatureVector {
    pub rho_x: f64,
    pub rho_y: f64,
    pub rho_xy: f64,
}

/// Flexural rigidity matrix `D = t³/12 · Q` (GPa·m³).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlexuralRigidity(pub [[f64; 3]; 3]);

pub fn flexural_rigidity(q: &ReducedStiffness, thickness: f64) -> FlexuralRigidity {
    let c = thickness.powi(3) / 12.0;
    let mut d = q.matrix();
    d.iter_mut().flatten().for_each(|v| *v *= c);
    FlexuralRigidity(d)
}

/// Global numbering of nodal-line amplitude blocks. Block `2n` holds the
/// `w` amplitudes of nodal line `n`, block `2n + 1` its `θ` amplitudes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DofMap {
    pub n_lines: usize,
    pub n_splines: usize,
}

/// Which amplitude block of a nodal line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineDof {
    W = 0,
    Theta = 1,
}

impl DofMap {
    pub fn total(&self) -> usize {
        2 * self.n_lines * self.n_splines
    }

    pub fn index(&self, line: usize, dof: LineDof, slot: usize) -> usize {
        debug_assert!(line < self.n_lines && slot < self.n_splines);
        (2 * line + dof as usize) * self.n_splines + slot
    }

    /// First global index of strip `s`; its `4(m+3)` local DOFs are contiguous.
    pub fn strip_offset(&self, s: usize) -> usize {
        2 * s * self.n_splines
    }
}

/// One strip: local `x ∈ [0, width]` starts at plate coordinate `x0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Strip {
    pub index: usize,
    pub x0: f64,
    pub width: f64,
    pub grid: KnotGrid,
}

impl Strip {
    pub fn n_dofs(&self) -> usize {
        4 * self.grid.n_splines()
    }

    fn check_inside(&self, x: f64, y: f64) -> Result<()> {
        let tol = 1e-12 * (self.width + self.grid.length_a());
        if x < -tol || x > self.width + tol || y < -tol || y > self.grid.length_a() + tol {
            return Err(Error::Domain(format!(
                "point ({x}, {y}) outside strip of width {} and length {}",
                self.width,
                self.grid.length_a()
            )));
        }
        Ok(())
    }

    /// Nonzero shape products at a point: `(local index, [N_kψ_j derivatives])`
    /// where the array holds `[f, f_x, f_y, f_xx, f_yy, f_xy]`.
    fn shape_products(&self, x: f64, y: f64) -> impl Iterator<Item = (usize, [f64; 6])> {
        let n = self.grid.n_splines();
        let hx = hermite_all(self.width, x);
        let (first, psi) = self.grid.span_values(self.grid.span_of(y), y);
        (0..4).flat_map(move |k| {
            (0..4).map(move |j| {
                let idx = k * n + first + j;
                let v = [
                    hx[0][k] * psi[0][j],
                    hx[1][k] * psi[0][j],
                    hx[0][k] * psi[1][j],
                    hx[2][k] * psi[0][j],
                    hx[0][k] * psi[2][j],
                    hx[1][k] * psi[1][j],
                ];
                (idx, v)
            })
        })
    }
}

/// `3 × 4(m+3)` curvature operator at local point `(x, y)`.
pub fn bending_strain_matrix(strip: &Strip, x: f64, y: f64) -> Result<DMatrix<f64>> {
    strip.check_inside(x, y)?;
    let mut b = DMatrix::zeros(3, strip.n_dofs());
    for (idx, v) in strip.shape_products(x, y) {
        b[(0, idx)] = -v[3];
        b[(1, idx)] = -v[4];
        b[(2, idx)] = -2.0 * v[5];
    }
    Ok(b)
}

/// `2 × 4(m+3)` slope operator at local point `(x, y)`.
pub fn geometric_strain_matrix(strip: &Strip, x: f64, y: f64) -> Result<DMatrix<f64>> {
    strip.check_inside(x, y)?;
    let mut b = DMatrix::zeros(2, strip.n_dofs());
    for (idx, v) in strip.shape_products(x, y) {
        b[(0, idx)] = v[1];
        b[(1, idx)] = v[2];
    }
    Ok(b)
}

/// Integrates `Σ w · Bᵀ C B` over the strip, with the nonzero columns of
/// `B` produced by `columns` at each Gauss point.
fn integrate_strip<const R: usize>(
    strip: &Strip,
    rule: &GaussLegendre,
    c: &[[f64; R]; R],
    columns: impl Fn(&[f64; 6]) -> [f64; R],
) -> DMatrix<f64> {
    let n = strip.n_dofs();
    let mut k = DMatrix::zeros(n, n);
    let h = strip.grid.h_knot();
    let mut cols: Vec<(usize, [f64; R], [f64; R])> = Vec::with_capacity(16);
    for span in 0..strip.grid.m_sections() {
        let y0 = span as f64 * h;
        for (y, wy) in rule.on_interval(y0, y0 + h) {
            for (x, wx) in rule.on_interval(0.0, strip.width) {
                let w = wx * wy;
                cols.clear();
                for (idx, v) in strip.shape_products(x, y) {
                    let b = columns(&v);
                    let mut cb = [0.0; R];
                    for (r, out) in cb.iter_mut().enumerate() {
                        *out = (0..R).map(|s| c[r][s] * b[s]).sum::<f64>();
                    }
                    cols.push((idx, b, cb));
                }
                for (ia, _, cba) in &cols {
                    for (ib, bb, _) in &cols {
                        let dot: f64 = (0..R).map(|r| cba[r] * bb[r]).sum();
                        k[(*ia, *ib)] += w * dot;
                    }
                }
            }
        }
    }
    k
}

/// Elastic stiffness `∫∫ B_fᵀ D B_f dA` of one strip.
pub fn strip_stiffness(strip: &Strip, d: &FlexuralRigidity) -> DMatrix<f64> {
    strip_stiffness_with(strip, d, &GaussLegendre::new(GAUSS_POINTS))
}

pub fn strip_stiffness_with(strip: &Strip, d: &FlexuralRigidity, rule: &GaussLegendre) -> DMatrix<f64> {
    let k = integrate_strip(strip, rule, &d.0, |v| [-v[3], -v[4], -2.0 * v[5]]);
    symmetrize(k)
}

/// Geometric stiffness `t ∫∫ B_gᵀ σ B_g dA` of one strip.
pub fn strip_geometric(strip: &Strip, load: &LoadState, thickness: f64) -> DMatrix<f64> {
    strip_geometric_with(strip, load, thickness, &GaussLegendre::new(GAUSS_POINTS))
}

pub fn strip_geometric_with(strip: &Strip, load: &LoadState, thickness: f64, rule: &GaussLegendre) -> DMatrix<f64> {
    let mut s = load.matrix();
    s.iter_mut().flatten().for_each(|v| *v *= thickness);
    symmetrize(integrate_strip(strip, rule, &s, |v| [v[1], v[2]]))
}

fn symmetrize(k: DMatrix<f64>) -> DMatrix<f64> {
    let t = k.transpose();
    (k + t) * 0.5
}

/// Everything needed to discretize one plate.
#[derive(Debug, Clone, PartialEq)]
pub struct PlateModel {
    pub plate_width_b: f64,
    pub length_a: f64,
    pub thickness: f64,
    pub q: ReducedStiffness,
    pub n_strips: usize,
    pub grid: KnotGrid,
    pub bc: BcCode,
    pub load: LoadState,
}

impl PlateModel {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        plate_width_b: f64,
        length_a: f64,
        thickness: f64,
        q: ReducedStiffness,
        n_strips: usize,
        m_sections: usize,
        bc: BcCode,
        load: LoadState,
    ) -> Result<Self> {
        if !(plate_width_b > 0.0 && plate_width_b.is_finite()) {
            return Err(Error::Domain(format!(
                "plate width must be positive, got {plate_width_b}"
            )));
        }
        if !(thickness > 0.0 && thickness.is_finite()) {
            return Err(Error::Domain(format!("thickness must be positive, got {thickness}")));
        }
        if thickness / plate_width_b > THIN_PLATE_LIMIT * (1.0 + 1e-12) {
            return Err(Error::Domain(format!(
                "thickness/width = {} exceeds the thin-plate limit 1/20",
                thickness / plate_width_b
            )));
        }
        if n_strips < 2 {
            return Err(Error::Domain(format!("at least 2 strips are required, got {n_strips}")));
        }
        load.validate()?;
        let grid = KnotGrid::new(length_a, m_sections)?;
        Ok(Self {
            plate_width_b,
            length_a,
            thickness,
            q,
            n_strips,
            grid,
            bc,
            load,
        })
    }

    pub fn dof_map(&self) -> DofMap {
        DofMap {
            n_lines: self.n_strips + 1,
            n_splines: self.grid.n_splines(),
        }
    }

    pub fn strip_width(&self) -> f64 {
        self.plate_width_b / self.n_strips as f64
    }

    pub fn strip(&self, s: usize) -> Strip {
        Strip {
            index: s,
            x0: s as f64 * self.strip_width(),
            width: self.strip_width(),
            grid: self.grid,
        }
    }

    pub fn rigidity(&self) -> FlexuralRigidity {
        flexural_rigidity(&self.q, self.thickness)
    }

    /// Deflection `w(x, y)` (plate coordinates) from a full DOF vector.
    pub fn deflection(&self, full: &[f64], x: f64, y: f64) -> f64 {
        let map = self.dof_map();
        let s = ((x / self.strip_width()).floor().max(0.0) as usize).min(self.n_strips - 1);
        let strip = self.strip(s);
        let local = (x - strip.x0).clamp(0.0, strip.width);
        let off = map.strip_offset(s);
        strip
            .shape_products(local, y.clamp(0.0, self.length_a))
            .map(|(i, v)| v[0] * full[off + i])
            .sum()
    }

    /// Curvatures at plate coordinates `(x, y)` from a full DOF vector.
    pub fn curvature(&self, full: &[f64], x: f64, y: f64) -> CurvatureVector {
        let map = self.dof_map();
        let s = ((x / self.strip_width()).floor().max(0.0) as usize).min(self.n_strips - 1);
        let strip = self.strip(s);
        let local = (x - strip.x0).clamp(0.0, strip.width);
        let off = map.strip_offset(s);
        let mut c = CurvatureVector {
            rho_x: 0.0,
            rho_y: 0.0,
            rho_xy: 0.0,
        };
        for (i, v) in strip.shape_products(local, y.clamp(0.0, self.length_a)) {
            let a = full[off + i];
            c.rho_x -= v[3] * a;
            c.rho_y -= v[4] * a;
            c.rho_xy -= 2.0 * v[5] * a;
        }
        c
    }

    /// Full DOF vector interpolating a smooth field. `field(x, y)` returns
    /// `[w, w_x, w_y, w_xy]`.
    pub fn interpolate_field<F>(&self, field: F) -> Vec<f64>
    where
        F: Fn(f64, f64) -> [f64; 4],
    {
        let map = self.dof_map();
        let mut full = vec![0.0; map.total()];
        for line in 0..map.n_lines {
            let x = line as f64 * self.strip_width();
            let w = interpolate_series(&self.grid, |y| field(x, y)[0], |y| field(x, y)[2]);
            let t = interpolate_series(&self.grid, |y| field(x, y)[1], |y| field(x, y)[3]);
            for slot in 0..map.n_splines {
                full[map.index(line, LineDof::W, slot)] = w[slot];
                full[map.index(line, LineDof::Theta, slot)] = t[slot];
            }
        }
        full
    }
}

/// Unconstrained global matrices.
#[derive(Debug, Clone)]
pub struct FullSystem {
    pub k: DMatrix<f64>,
    pub kg: DMatrix<f64>,
    pub dofs: DofMap,
}

/// Scatters all strip matrices into the unconstrained global system.
pub fn assemble_unconstrained(model: &PlateModel) -> FullSystem {
    let dofs = model.dof_map();
    let d = model.rigidity();
    let strips: Vec<(DMatrix<f64>, DMatrix<f64>)> = (0..model.n_strips)
        .into_par_iter()
        .map(|s| {
            let strip = model.strip(s);
            (
                strip_stiffness(&strip, &d),
                strip_geometric(&strip, &model.load, model.thickness),
            )
        })
        .collect();

    let n = dofs.total();
    let mut k = DMatrix::zeros(n, n);
    let mut kg = DMatrix::zeros(n, n);
    for (s, (ks, kgs)) in strips.iter().enumerate() {
        let off = dofs.strip_offset(s);
        let len = ks.nrows();
        let mut view = k.view_mut((off, off), (len, len));
        view += ks;
        let mut view = kg.view_mut((off, off), (len, len));
        view += kgs;
    }
    FullSystem { k, kg, dofs }
}

/// Retained amplitude blocks and the end transform shared by all of them.
#[derive(Debug, Clone)]
pub struct ReducedLayout {
    pub dofs: DofMap,
    /// Global block ids (`2·line + kind`) kept after side-edge elimination.
    pub blocks: Vec<usize>,
    pub end_transform: ConstraintTransform,
}

impl ReducedLayout {
    pub fn new(model: &PlateModel) -> Self {
        let dofs = model.dof_map();
        let last = dofs.n_lines - 1;
        let eliminated = |line: usize, kind: usize| {
            let cond = match line {
                0 => model.bc.side_x0(),
                l if l == last => model.bc.side_xb(),
                _ => EndCondition::Free,
            };
            match cond {
                EndCondition::Free => false,
                EndCondition::Simple => kind == LineDof::W as usize,
                EndCondition::Clamped => true,
            }
        };
        let blocks = (0..dofs.n_lines)
            .flat_map(|line| (0..2).map(move |kind| (line, kind)))
            .filter(|&(line, kind)| !eliminated(line, kind))
            .map(|(line, kind)| 2 * line + kind)
            .collect();
        let end_transform = build_constraint_transform(&model.grid, model.bc.end_y0(), model.bc.end_ya());
        Self {
            dofs,
            blocks,
            end_transform,
        }
    }

    pub fn n_reduced(&self) -> usize {
        self.blocks.len() * self.end_transform.n_reduced()
    }

    /// Maps a reduced vector back to the full DOF vector.
    pub fn expand(&self, reduced: &[f64]) -> Vec<f64> {
        let t = &self.end_transform.matrix;
        let (nf, nr) = (t.nrows(), t.ncols());
        let mut full = vec![0.0; self.dofs.total()];
        for (pos, &blk) in self.blocks.iter().enumerate() {
            for r in 0..nf {
                full[blk * nf + r] = (0..nr).map(|c| t[(r, c)] * reduced[pos * nr + c]).sum();
            }
        }
        full
    }

    /// `Tᵀ A T` exploiting the block-diagonal transform and the fact that
    /// only blocks on the same or adjacent nodal lines couple.
    pub fn reduce(&self, a: &DMatrix<f64>) -> DMatrix<f64> {
        let t = &self.end_transform.matrix;
        let tt = t.transpose();
        let (nf, nr) = (t.nrows(), t.ncols());
        let n = self.n_reduced();
        let mut out = DMatrix::zeros(n, n);
        for (p, &bp) in self.blocks.iter().enumerate() {
            for (q, &bq) in self.blocks.iter().enumerate() {
                if (bp / 2).abs_diff(bq / 2) > 1 {
                    continue;
                }
                let sub = a.view((bp * nf, bq * nf), (nf, nf));
                let red = &tt * sub * t;
                out.view_mut((p * nr, q * nr), (nr, nr)).copy_from(&red);
            }
        }
        out
    }
}

/// Constrained elastic and geometric stiffness.
#[derive(Debug, Clone)]
pub struct AssembledSystem {
    pub k: DMatrix<f64>,
    pub kg: DMatrix<f64>,
    pub layout: ReducedLayout,
    pub bc: BcCode,
}

impl AssembledSystem {
    pub fn n_dofs(&self) -> usize {
        self.k.nrows()
    }

    /// Largest `|i - j|` with a nonzero entry in `K` or `Kg`.
    pub fn bandwidth(&self) -> usize {
        let n = self.n_dofs();
        let mut bw = 0;
        for i in 0..n {
            for j in i..n {
                if self.k[(i, j)] != 0.0 || self.kg[(i, j)] != 0.0 {
                    bw = bw.max(j - i);
                }
            }
        }
        bw
    }
}

/// Applies end and side-edge constraints without checking for mechanisms.
pub fn constrain(model: &PlateModel, full: &FullSystem) -> AssembledSystem {
    let layout = ReducedLayout::new(model);
    let k = symmetrize(layout.reduce(&full.k));
    let kg = symmetrize(layout.reduce(&full.kg));
    AssembledSystem {
        k,
        kg,
        layout,
        bc: model.bc,
    }
}

/// Assembles and constrains the plate, rejecting codes that leave a mechanism.
pub fn assemble_global(model: &PlateModel) -> Result<AssembledSystem> {
    let sys = constrain(model, &assemble_unconstrained(model));
    if !is_positive_definite(&sys.k) {
        return Err(Error::Mechanism {
            bc_code: Some(model.bc.to_string()),
        });
    }
    Ok(sys)
}

/// Cholesky test with a relative pivot floor.
pub fn is_positive_definite(k: &DMatrix<f64>) -> bool {
    let n = k.nrows();
    if n == 0 {
        return false;
    }
    let max_diag = (0..n).map(|i| k[(i, i)]).fold(0.0f64, f64::max);
    match k.clone().cholesky() {
        None => false,
        Some(ch) => {
            let l = ch.l_dirty();
            (0..n).all(|i| l[(i, i)] * l[(i, i)] > 1e-12 * max_diag)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::micromechanics::{reduced_stiffness, IsotropicElastic};

    fn q() -> ReducedStiffness {
        reduced_stiffness(IsotropicElastic { e: 2.1, nu: 0.34 }, 2.1 / (2.0 * 1.34)).unwrap()
    }

    fn strip() -> Strip {
        Strip {
            index: 0,
            x0: 0.0,
            width: 0.3,
            grid: KnotGrid::new(1.2, 6).unwrap(),
        }
    }

    #[test]
    fn bc_code_parsing() {
        let c: BcCode = "SCSF".parse().unwrap();
        assert_eq!(c.end_y0(), EndCondition::Simple);
        assert_eq!(c.side_x0(), EndCondition::Clamped);
        assert_eq!(c.end_ya(), EndCondition::Simple);
        assert_eq!(c.side_xb(), EndCondition::Free);
        assert_eq!(c.to_string(), "SCSF");
        assert!("SSXS".parse::<BcCode>().is_err());
        assert!("SSS".parse::<BcCode>().is_err());
        assert!("ssss".parse::<BcCode>().is_err());
    }

    #[test]
    fn rigidity_values() {
        let d = flexural_rigidity(&q(), 0.01);
        assert!((d.0[0][0] - 1.978_742_650_384_441_4e-7).abs() < 1e-19);
        let d2 = flexural_rigidity(&q(), 0.02);
        for r in 0..3 {
            for c in 0..3 {
                assert!((d2.0[r][c] - 8.0 * d.0[r][c]).abs() <= 1e-15 * d2.0[r][c].abs());
            }
        }
        let mut q0 = q();
        q0.q12 = 0.0;
        assert_eq!(flexural_rigidity(&q0, 0.01).0[0][1], 0.0);
    }

    #[test]
    fn dof_map_is_bijective() {
        let map = DofMap {
            n_lines: 4,
            n_splines: 7,
        };
        let mut seen = vec![false; map.total()];
        for line in 0..4 {
            for dof in [LineDof::W, LineDof::Theta] {
                for slot in 0..7 {
                    let i = map.index(line, dof, slot);
                    assert!(!seen[i]);
                    seen[i] = true;
                }
            }
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(map.total(), 2 * 4 * 7);
    }

    #[test]
    fn strip_point_checks() {
        let s = strip();
        assert!(bending_strain_matrix(&s, 0.31, 0.5).is_err());
        assert!(geometric_strain_matrix(&s, 0.1, -0.1).is_err());
        assert_eq!(bending_strain_matrix(&s, 0.1, 0.5).unwrap().shape(), (3, 36));
        assert_eq!(geometric_strain_matrix(&s, 0.1, 0.5).unwrap().shape(), (2, 36));
    }

    #[test]
    fn zero_load_gives_zero_geometric() {
        let s = strip();
        let kg = strip_geometric(
            &s,
            &LoadState {
                sx0: 0.0,
                sy0: 0.0,
                sxy0: 0.0,
            },
            0.01,
        );
        assert!(kg.iter().all(|&v| v == 0.0));
        assert!(LoadState::new(0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn stiffness_scales_linearly() {
        let s = strip();
        let d = flexural_rigidity(&q(), 0.01);
        let mut d2 = d;
        d2.0.iter_mut().flatten().for_each(|v| *v *= 2.0);
        let k = strip_stiffness(&s, &d);
        let k2 = strip_stiffness(&s, &d2);
        assert!((k2 - k * 2.0).amax() == 0.0);
    }

    #[test]
    fn model_validation() {
        let bc: BcCode = "SSSS".parse().unwrap();
        let l = LoadState::uniaxial();
        assert!(PlateModel::new(1.0, 1.0, 0.01, q(), 8, 12, bc, l).is_ok());
        assert!(PlateModel::new(1.0, 1.0, 0.06, q(), 8, 12, bc, l).is_err());
        assert!(PlateModel::new(1.0, 1.0, 0.01, q(), 1, 12, bc, l).is_err());
        assert!(PlateModel::new(1.0, 1.0, 0.01, q(), 8, 2, bc, l).is_err());
    }
}
