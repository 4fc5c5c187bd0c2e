//! Forward far-field solvers.
//!
//! Two data-generation routes, mirroring how the reconstruction experiments
//! are driven:
//! - the exact separation-of-variables solution for a disk, where the four
//!   transmission conditions (value, normal derivative, Laplacian, normal
//!   derivative of the Laplacian) at r = eps yield a 4x4 system per angular
//!   order, and the far field is the truncated series
//!   u_inf(theta, phi) = (4/i) sum a_l exp(i l (theta - phi));
//! - the Born approximation for weak scatterers of any shape,
//!   u_inf = (kappa^2/2) (n-1) int_D exp(-i kappa y.(xhat - d)) dy,
//!   evaluated with midpoint quadrature, plus a closed-form disk oracle.

use crate::geometry::QuadratureSet;
use crate::specfun::{self, SpecfunError};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ForwardError {
    #[error("wavenumber {0} must be positive")]
    InvalidWavenumber(f64),
    #[error("refractive index has negative imaginary part {0} (gain medium)")]
    NegativeAbsorption(f64),
    #[error("disk radius {0} outside (0, 1]")]
    InvalidRadius(f64),
    #[error("mode order {0} outside supported range")]
    InvalidOrder(i32),
    #[error("modal system is numerically singular at order {order} (pivot {pivot:.3e})")]
    SingularSystem { order: i32, pivot: f64 },
    #[error("empty quadrature set")]
    EmptyQuadrature,
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
}

pub type Result<T> = std::result::Result<T, ForwardError>;

/// Default series truncation: orders |l| <= 10, i.e. 21 terms.
pub const DEFAULT_LMAX: i32 = 10;

/// Background wavenumber and constant complex refractive index of the
/// scatterer. The theory requires Im(n) > 0 (absorbing); Im(n) = 0 is
/// accepted but flagged through [`Medium::is_absorbing`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Medium {
    kappa: f64,
    n: Complex64,
}

impl Medium {
    pub fn new(kappa: f64, n: Complex64) -> Result<Medium> {
        if !(kappa > 0.0) {
            return Err(ForwardError::InvalidWavenumber(kappa));
        }
        if n.im < 0.0 {
            return Err(ForwardError::NegativeAbsorption(n.im));
        }
        Ok(Medium { kappa, n })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn n(&self) -> Complex64 {
        self.n
    }

    /// True when Im(n) > 0, the condition backing coercivity of Im(F).
    pub fn is_absorbing(&self) -> bool {
        self.n.im > 0.0
    }

    /// Principal branch of n^(1/2); Re >= 0 for the media used here.
    pub fn n_sqrt(&self) -> Complex64 {
        self.n.sqrt()
    }

    /// Principal branch of n^(1/4): argument in (-pi/4, pi/4].
    pub fn n_quarter_root(&self) -> Complex64 {
        self.n.sqrt().sqrt()
    }
}

/// The 4x4 transmission-condition system M u = f at angular order l. Rows are
/// ordered as (value, normal derivative, Laplacian, normal derivative of the
/// Laplacian) at r = eps; the unknown is u = (a_l, b_l, c_l, d_l).
///
/// The far-field normalization constant gamma = e^{i pi/4} / sqrt(8 pi kappa)
/// is already absorbed into the 4/i prefactor of [`disk_farfield`]; the
/// coefficients a_l are used as-is.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskModeSystem {
    pub order: i32,
    pub matrix: [[Complex64; 4]; 4],
    pub rhs: [Complex64; 4],
}

/// Solved modal coefficients (a_l, b_l, c_l, d_l) for 0 <= l <= lmax; integer
/// orders satisfy a_{-l} = a_l, so only nonnegative orders are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskModeCoefficients {
    pub lmax: i32,
    coeffs: Vec<[Complex64; 4]>,
}

impl DiskModeCoefficients {
    pub fn a(&self, l: i32) -> Complex64 {
        self.coeffs[l.unsigned_abs() as usize][0]
    }

    pub fn b(&self, l: i32) -> Complex64 {
        self.coeffs[l.unsigned_abs() as usize][1]
    }

    pub fn c(&self, l: i32) -> Complex64 {
        self.coeffs[l.unsigned_abs() as usize][2]
    }

    pub fn d(&self, l: i32) -> Complex64 {
        self.coeffs[l.unsigned_abs() as usize][3]
    }

    pub fn max_a_modulus(&self) -> f64 {
        self.coeffs.iter().map(|u| u[0].norm()).fold(0.0, f64::max)
    }
}

/// Assemble the transmission-condition system at order l.
///
/// All entries depend on the order only through |l| (integer-order
/// reflection), so l and -l produce identical systems.
pub fn disk_mode_system(l: i32, medium: &Medium, eps: f64) -> Result<DiskModeSystem> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(ForwardError::InvalidRadius(eps));
    }
    let la = l.unsigned_abs() as i32;
    let k = medium.kappa;
    let n4 = medium.n_quarter_root();
    let n2 = medium.n_sqrt();
    let i = Complex64::i();

    let z1 = Complex64::new(k * eps, 0.0); // kappa eps
    let z2 = i * (k * eps); // i kappa eps
    let z3 = n4 * (k * eps); // kappa n^(1/4) eps
    let z4 = i * n4 * (k * eps); // i kappa n^(1/4) eps

    let h = |z| specfun::hankel1(la, z);
    let hp = |z| specfun::hankel1_prime(la, z);
    let j = |z| specfun::bessel_j(la, z);
    let jp = |z| specfun::bessel_j_prime(la, z);

    let k1 = Complex64::new(k, 0.0);
    let k2 = Complex64::new(k * k, 0.0);
    let k3 = Complex64::new(k * k * k, 0.0);

    let matrix = [
        [h(z1)?, h(z2)?, -j(z3)?, -j(z4)?],
        [
            k1 * hp(z1)?,
            i * k1 * hp(z2)?,
            -k1 * n4 * jp(z3)?,
            -i * k1 * n4 * jp(z4)?,
        ],
        [
            -k2 * h(z1)?,
            k2 * h(z2)?,
            k2 * n2 * j(z3)?,
            -k2 * n2 * j(z4)?,
        ],
        [
            -k3 * hp(z1)?,
            i * k3 * hp(z2)?,
            k3 * n4 * n4 * n4 * jp(z3)?,
            -i * k3 * n4 * n4 * n4 * jp(z4)?,
        ],
    ];
    let rhs = [-j(z1)?, -k1 * jp(z1)?, k2 * j(z1)?, k3 * jp(z1)?];
    Ok(DiskModeSystem {
        order: l,
        matrix,
        rhs,
    })
}

/// Solve a 4x4 complex system by Gaussian elimination with partial pivoting.
/// A pivot below 1e-13 times the largest entry magnitude signals a
/// non-physical parameter combination.
fn solve4(system: &DiskModeSystem) -> Result<[Complex64; 4]> {
    let mut a = system.matrix;
    let mut b = system.rhs;
    let scale = a
        .iter()
        .flatten()
        .map(|e| e.norm())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    for col in 0..4 {
        let (pivot_row, pivot_norm) = (col..4)
            .map(|r| (r, a[r][col].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if pivot_norm < 1e-13 * scale {
            return Err(ForwardError::SingularSystem {
                order: system.order,
                pivot: pivot_norm,
            });
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for r in col + 1..4 {
            let factor = a[r][col] / a[col][col];
            for c in col..4 {
                let sub = factor * a[col][c];
                a[r][c] -= sub;
            }
            b[r] -= factor * b[col];
        }
    }
    let mut x = [Complex64::ZERO; 4];
    for row in (0..4).rev() {
        let mut s = b[row];
        for c in row + 1..4 {
            s -= a[row][c] * x[c];
        }
        x[row] = s / a[row][row];
    }
    Ok(x)
}

/// Solve the modal systems for all orders 0..=lmax.
///
/// Warns through the returned flag when the truncation order has not decayed:
/// callers should increase lmax if `decayed` is false.
pub fn solve_disk_modes(medium: &Medium, eps: f64, lmax: i32) -> Result<DiskModeCoefficients> {
    if lmax < 0 {
        return Err(ForwardError::InvalidOrder(lmax));
    }
    let mut coeffs = Vec::with_capacity(lmax as usize + 1);
    for l in 0..=lmax {
        let system = disk_mode_system(l, medium, eps)?;
        coeffs.push(solve4(&system)?);
    }
    Ok(DiskModeCoefficients { lmax, coeffs })
}

/// True when the last retained coefficient is negligible against the peak,
/// i.e. the series truncation is converged.
pub fn truncation_decayed(coeffs: &DiskModeCoefficients) -> bool {
    let peak = coeffs.max_a_modulus();
    peak == 0.0 || coeffs.a(coeffs.lmax).norm() <= 1e-8 * peak
}

/// Exact disk far field u_inf(theta, phi) = (4/i) sum_{|l|<=lmax} a_l
/// exp(i l (theta - phi)); depends on the angles only through theta - phi.
pub fn disk_farfield(coeffs: &DiskModeCoefficients, theta: f64, phi: f64) -> Complex64 {
    let delta = theta - phi;
    let mut s = coeffs.a(0);
    for l in 1..=coeffs.lmax {
        let phase = Complex64::from_polar(1.0, l as f64 * delta);
        // a_l (e^{il delta} + e^{-il delta})
        s += coeffs.a(l) * (phase + phase.conj());
    }
    4.0 / Complex64::i() * s
}

/// Born far field for an arbitrary shape by midpoint quadrature:
/// (kappa^2/2)(n-1) sum_m h^2 exp(-i kappa y_m.(xhat - d)).
pub fn born_farfield(
    medium: &Medium,
    xhat: [f64; 2],
    d: [f64; 2],
    quad: &QuadratureSet,
) -> Result<Complex64> {
    if quad.nodes.is_empty() {
        return Err(ForwardError::EmptyQuadrature);
    }
    let k = medium.kappa;
    let qx = k * (xhat[0] - d[0]);
    let qy = k * (xhat[1] - d[1]);
    let mut s = Complex64::ZERO;
    for node in &quad.nodes {
        s += Complex64::from_polar(1.0, -(qx * node[0] + qy * node[1]));
    }
    Ok(born_prefactor(medium) * quad.weight * s)
}

/// Full multistatic Born matrix over a set of directions, sharing the phase
/// table exp(-i kappa y.xhat_i) across entries: entry (i, j) equals
/// born_farfield at (xhat_i, d_j). Row-major N x N output.
pub fn born_farfield_matrix(
    medium: &Medium,
    directions: &[[f64; 2]],
    quad: &QuadratureSet,
) -> Result<Vec<Complex64>> {
    if quad.nodes.is_empty() {
        return Err(ForwardError::EmptyQuadrature);
    }
    let n = directions.len();
    let k = medium.kappa;
    // phases[m*n + i] = exp(-i kappa y_m . xhat_i)
    let mut phases = vec![Complex64::ZERO; quad.nodes.len() * n];
    for (m, node) in quad.nodes.iter().enumerate() {
        for (i, dir) in directions.iter().enumerate() {
            let arg = -k * (node[0] * dir[0] + node[1] * dir[1]);
            phases[m * n + i] = Complex64::from_polar(1.0, arg);
        }
    }
    // exp(-i k y.(x_i - d_j)) = phases[m][i] * conj(phases[m][j])
    let mut entries = vec![Complex64::ZERO; n * n];
    for m in 0..quad.nodes.len() {
        let row = &phases[m * n..(m + 1) * n];
        for i in 0..n {
            let pi = row[i];
            for j in 0..n {
                entries[i * n + j] += pi * row[j].conj();
            }
        }
    }
    let c = born_prefactor(medium) * quad.weight;
    for e in &mut entries {
        *e *= c;
    }
    Ok(entries)
}

fn born_prefactor(medium: &Medium) -> Complex64 {
    0.5 * medium.kappa * medium.kappa * (medium.n - 1.0)
}

/// Closed-form Born far field for a disk: with q = kappa (xhat - d),
/// (kappa^2/2)(n-1) e^{-i q.c} 2 pi eps J_1(|q| eps) / |q|, reducing to
/// (kappa^2/2)(n-1) pi eps^2 at xhat = d.
pub fn born_disk_analytic(
    eps: f64,
    center: [f64; 2],
    medium: &Medium,
    xhat: [f64; 2],
    d: [f64; 2],
) -> Result<Complex64> {
    let k = medium.kappa;
    let qx = k * (xhat[0] - d[0]);
    let qy = k * (xhat[1] - d[1]);
    let qn = qx.hypot(qy);
    let pre = born_prefactor(medium);
    if qn < 1e-12 {
        return Ok(pre * std::f64::consts::PI * eps * eps);
    }
    let j1 = specfun::bessel_j(1, Complex64::new(qn * eps, 0.0))?;
    let phase = Complex64::from_polar(1.0, -(qx * center[0] + qy * center[1]));
    Ok(pre * phase * 2.0 * std::f64::consts::PI * eps * j1 / qn)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{builtin_shape, quadrature_nodes};
    use std::f64::consts::PI;

    fn medium() -> Medium {
        Medium::new(2.0, Complex64::new(1.0, 0.5)).unwrap()
    }

    fn assert_close(a: Complex64, b: Complex64, tol: f64) {
        assert!((a - b).norm() <= tol * (1.0 + b.norm()), "{a} vs {b}");
    }

    #[test]
    fn medium_validation() {
        assert!(Medium::new(0.0, Complex64::new(1.0, 0.5)).is_err());
        assert!(Medium::new(2.0, Complex64::new(1.0, -0.1)).is_err());
        let lossless = Medium::new(2.0, Complex64::new(2.0, 0.0)).unwrap();
        assert!(!lossless.is_absorbing());
        assert!(medium().is_absorbing());
    }

    #[test]
    fn quarter_root_principal_branch() {
        let m = Medium::new(2.0, Complex64::new(1.0, 0.5)).unwrap();
        let r = m.n_quarter_root();
        assert!(r.re > 0.0);
        assert_close(r * r * r * r, m.n(), 1e-15);
    }

    #[test]
    fn unit_contrast_system_solved_by_background_vector() {
        // n = 1: u = (0, 0, 1, 0) satisfies M u = f (no scattering)
        let m = Medium::new(2.0, Complex64::new(1.0, 0.0)).unwrap();
        for l in [0, 1, 4] {
            let sys = disk_mode_system(l, &m, 0.5).unwrap();
            for row in 0..4 {
                let lhs = sys.matrix[row][2];
                assert_close(lhs, sys.rhs[row], 1e-14);
            }
        }
    }

    #[test]
    fn system_is_even_in_order() {
        let sys_pos = disk_mode_system(3, &medium(), 0.5).unwrap();
        let sys_neg = disk_mode_system(-3, &medium(), 0.5).unwrap();
        assert_eq!(sys_pos.matrix, sys_neg.matrix);
        assert_eq!(sys_pos.rhs, sys_neg.rhs);
    }

    #[test]
    fn system_entry_is_hankel_value() {
        // at l = 0, kappa = 2, eps = 0.5 the (1,1) entry is H1_0(1)
        let sys = disk_mode_system(0, &medium(), 0.5).unwrap();
        let h = specfun::hankel1(0, Complex64::new(1.0, 0.0)).unwrap();
        assert_eq!(sys.matrix[0][0], h);
    }

    #[test]
    fn zero_contrast_modes_vanish() {
        let m = Medium::new(2.0, Complex64::new(1.0, 0.0)).unwrap();
        let coeffs = solve_disk_modes(&m, 0.5, 10).unwrap();
        assert!(coeffs.max_a_modulus() < 1e-12);
    }

    #[test]
    fn modal_solve_residuals() {
        let coeffs = solve_disk_modes(&medium(), 0.5, 10).unwrap();
        for l in 0..=10 {
            let sys = disk_mode_system(l, &medium(), 0.5).unwrap();
            let u = [coeffs.a(l), coeffs.b(l), coeffs.c(l), coeffs.d(l)];
            let fnorm: f64 = sys.rhs.iter().map(|e| e.norm()).fold(0.0, f64::max);
            for row in 0..4 {
                let mut r = -sys.rhs[row];
                for col in 0..4 {
                    r += sys.matrix[row][col] * u[col];
                }
                assert!(r.norm() < 1e-12 * fnorm, "l={l} row={row}: {}", r.norm());
            }
        }
    }

    #[test]
    fn modal_decay() {
        let coeffs = solve_disk_modes(&medium(), 0.5, 10).unwrap();
        assert!(coeffs.a(10).norm() < 1e-6 * coeffs.a(0).norm());
        assert!(truncation_decayed(&coeffs));
    }

    #[test]
    fn farfield_zero_coeffs() {
        let m = Medium::new(2.0, Complex64::new(1.0, 0.0)).unwrap();
        let coeffs = solve_disk_modes(&m, 0.5, 10).unwrap();
        assert!(disk_farfield(&coeffs, 0.3, 1.2).norm() < 1e-11);
    }

    #[test]
    fn farfield_shift_invariance() {
        let coeffs = solve_disk_modes(&medium(), 0.5, 10).unwrap();
        let base = disk_farfield(&coeffs, 0.7, 0.2);
        for s in [0.5, 1.9, -2.4] {
            assert!((disk_farfield(&coeffs, 0.7 + s, 0.2 + s) - base).norm() < 1e-12);
        }
    }

    #[test]
    fn farfield_reciprocity() {
        let coeffs = solve_disk_modes(&medium(), 0.5, 10).unwrap();
        let a = disk_farfield(&coeffs, 0.7, 2.2);
        let b = disk_farfield(&coeffs, 2.2, 0.7);
        assert!((a - b).norm() < 1e-10 * (1.0 + a.norm()));
    }

    #[test]
    fn born_forward_direction_is_area_integral() {
        let shape = builtin_shape("disk", Some(0.5), [0.0, 0.0], None).unwrap();
        let quad = quadrature_nodes(&shape, 0.5 / 50.0).unwrap();
        let d = [1.0, 0.0];
        let v = born_farfield(&medium(), d, d, &quad).unwrap();
        let expected = 0.5 * 4.0 * Complex64::new(0.0, 0.5) * quad.total_weight();
        assert_close(v, expected, 1e-13);
    }

    #[test]
    fn born_zero_contrast() {
        let m = Medium::new(2.0, Complex64::new(1.0, 0.0)).unwrap();
        let shape = builtin_shape("disk", Some(0.5), [0.0, 0.0], None).unwrap();
        let quad = quadrature_nodes(&shape, 0.5 / 50.0).unwrap();
        let v = born_farfield(&m, [1.0, 0.0], [0.0, 1.0], &quad).unwrap();
        assert!(v.norm() < 1e-12);
    }

    #[test]
    fn born_quadrature_matches_analytic_disk() {
        let shape = builtin_shape("disk", Some(0.5), [0.0, 0.0], None).unwrap();
        let quad = quadrature_nodes(&shape, 0.5 / 200.0).unwrap();
        let xhat = [1.0, 0.0];
        let d = [0.0, 1.0];
        let num = born_farfield(&medium(), xhat, d, &quad).unwrap();
        let ana = born_disk_analytic(0.5, [0.0, 0.0], &medium(), xhat, d).unwrap();
        assert!((num - ana).norm() < 1e-3 * ana.norm());
    }

    #[test]
    fn born_analytic_forward_value() {
        // xhat = d: (kappa^2/2)(n-1) pi eps^2 = 0.25 pi i for these parameters
        let v = born_disk_analytic(0.5, [0.0, 0.0], &medium(), [1.0, 0.0], [1.0, 0.0]).unwrap();
        assert_close(v, Complex64::new(0.0, 0.25 * PI), 1e-15);
    }

    #[test]
    fn born_analytic_center_shift_is_phase() {
        let m = medium();
        let xhat = [1.0, 0.0];
        let d = [0.0, 1.0];
        let centered = born_disk_analytic(0.5, [0.0, 0.0], &m, xhat, d).unwrap();
        let shift = [0.3, -0.2];
        let shifted = born_disk_analytic(0.5, shift, &m, xhat, d).unwrap();
        let q = [m.kappa() * (xhat[0] - d[0]), m.kappa() * (xhat[1] - d[1])];
        let phase = Complex64::from_polar(1.0, -(q[0] * shift[0] + q[1] * shift[1]));
        assert_close(shifted, centered * phase, 1e-14);
    }

    #[test]
    fn born_matrix_matches_pointwise() {
        let shape = builtin_shape("disk", Some(0.5), [0.1, -0.2], None).unwrap();
        let quad = quadrature_nodes(&shape, 0.5 / 40.0).unwrap();
        let dirs: Vec<[f64; 2]> = (0..8)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / 8.0;
                [t.cos(), t.sin()]
            })
            .collect();
        let m = medium();
        let mat = born_farfield_matrix(&m, &dirs, &quad).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let v = born_farfield(&m, dirs[i], dirs[j], &quad).unwrap();
                assert!((mat[i * 8 + j] - v).norm() < 1e-10 * (1.0 + v.norm()));
            }
        }
    }
}
