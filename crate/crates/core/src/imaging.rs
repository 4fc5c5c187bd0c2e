//! Factorization-method imaging from the spectral data of Im(F).
//!
//! The positive self-adjoint operator Im(F) is diagonalized by cyclic Jacobi
//! rotations; a sampling point z is classified through the Tikhonov-filtered
//! Picard series
//!
//!   W(z) = [ sum_j phi^2(sigma_j; alpha) / sigma_j  |<u_j, l_z>|^2 ]^(-1),
//!   phi(t; alpha) = t^2 / (t^2 + alpha),
//!   l_z = [ exp(-i kappa xhat_i . z) ]_i ,
//!
//! which stays bounded exactly when z lies inside the scatterer. The module
//! also carries the sampling grid, field serialization (CSV and 8-bit PGM),
//! and the mask metrics used to quantify reconstructions.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::io::Write;
use thiserror::Error;

use crate::operator::DirectionSet;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ImagingError {
    #[error("matrix is not square: {0} entries")]
    NotSquare(usize),
    #[error("Jacobi sweep limit reached without convergence (off-diagonal {0:.3e})")]
    NoConvergence(f64),
    #[error("degenerate spectrum: no mode above the negligible threshold")]
    DegenerateSpectrum,
    #[error("{negative} of {total} eigenvalues are negative; data is not consistent with an absorbing scatterer")]
    MostlyNegativeSpectrum { negative: usize, total: usize },
    #[error("invalid sampling grid: {0}")]
    InvalidGrid(String),
    #[error("invalid imaging parameter: {0}")]
    InvalidParameter(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for ImagingError {
    fn from(e: std::io::Error) -> Self {
        ImagingError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, ImagingError>;

/// Eigenvalues below `NEGLIGIBLE_FACTOR * sigma_max` are excluded from Picard
/// sums rather than clamped.
pub const NEGLIGIBLE_FACTOR: f64 = 1e-14;

/// Eigensystem of a Hermitian matrix, sorted by descending eigenvalue.
#[derive(Debug, Clone)]
pub struct SpectralSystem {
    /// Eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors, one per eigenvalue, each of length n.
    pub eigenvectors: Vec<Vec<Complex64>>,
    /// Count of modes at or below the negligible threshold.
    pub negligible: usize,
    /// Count of strictly negative eigenvalues (possible under noise).
    pub negative: usize,
}

impl SpectralSystem {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Indices of the modes retained by the Picard sums: sigma_j positive and
    /// above the negligible threshold.
    fn usable(&self) -> impl Iterator<Item = usize> + '_ {
        let sigma_max = self.eigenvalues.first().copied().unwrap_or(0.0);
        let floor = NEGLIGIBLE_FACTOR * sigma_max;
        self.eigenvalues
            .iter()
            .enumerate()
            .filter(move |(_, s)| **s > floor)
            .map(|(j, _)| j)
    }
}

/// Diagonalize a Hermitian matrix (row-major n x n) by cyclic Jacobi
/// rotations, sweeping until every off-diagonal modulus is at most
/// 1e-13 times the Frobenius norm. Fails after 100 sweeps.
pub fn hermitian_eig(entries: &[Complex64], n: usize) -> Result<SpectralSystem> {
    if entries.len() != n * n {
        return Err(ImagingError::NotSquare(entries.len()));
    }
    let mut a = entries.to_vec();
    // eigenvector accumulator, starts as identity
    let mut q = vec![Complex64::ZERO; n * n];
    for i in 0..n {
        q[i * n + i] = Complex64::new(1.0, 0.0);
    }
    let fro: f64 = a.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt();
    let tol = 1e-13 * fro;
    if fro == 0.0 {
        // zero matrix: spectrum is all zeros with the standard basis
        return finalize_eig(vec![0.0; n], q, n);
    }
    let mut converged = false;
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for r in p + 1..n {
                off = off.max(a[p * n + r].norm());
            }
        }
        if off <= tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for r in p + 1..n {
                let apq = a[p * n + r];
                if apq.norm() <= tol * 1e-2 {
                    continue;
                }
                // Zero A[p][r] with the unitary rotation diag-phase * Givens:
                // columns (p, r) mix as  col_p' = c col_p - s conj(ph) col_r,
                //                        col_r' = s ph col_p + c col_r.
                let app = a[p * n + p].re;
                let arr = a[r * n + r].re;
                let abs = apq.norm();
                let ph = apq / abs;
                let tau = (arr - app) / (2.0 * abs);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let t = if tau == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // rows/columns update: A <- U* A U with U acting on (p, r)
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akr = a[k * n + r];
                    a[k * n + p] = c * akp - s * ph.conj() * akr;
                    a[k * n + r] = c * akr + s * ph * akp;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let ark = a[r * n + k];
                    a[p * n + k] = c * apk - s * ph * ark;
                    a[r * n + k] = c * ark + s * ph.conj() * apk;
                }
                for k in 0..n {
                    let qkp = q[k * n + p];
                    let qkr = q[k * n + r];
                    q[k * n + p] = c * qkp - s * ph.conj() * qkr;
                    q[k * n + r] = c * qkr + s * ph * qkp;
                }
            }
        }
    }
    if !converged {
        let mut off = 0.0f64;
        for p in 0..n {
            for r in p + 1..n {
                off = off.max(a[p * n + r].norm());
            }
        }
        return Err(ImagingError::NoConvergence(off));
    }
    let eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    finalize_eig(eigenvalues, q, n)
}

fn finalize_eig(eigenvalues: Vec<f64>, q: Vec<Complex64>, n: usize) -> Result<SpectralSystem> {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eigenvalues[j].total_cmp(&eigenvalues[i]));
    let sorted_values: Vec<f64> = order.iter().map(|&i| eigenvalues[i]).collect();
    let eigenvectors: Vec<Vec<Complex64>> = order
        .iter()
        .map(|&col| (0..n).map(|row| q[row * n + col]).collect())
        .collect();
    let sigma_max = sorted_values.first().copied().unwrap_or(0.0).max(0.0);
    let negligible = sorted_values
        .iter()
        .filter(|s| **s <= NEGLIGIBLE_FACTOR * sigma_max)
        .count();
    let negative = sorted_values.iter().filter(|s| **s < 0.0).count();
    Ok(SpectralSystem {
        eigenvalues: sorted_values,
        eigenvectors,
        negligible,
        negative,
    })
}

/// Discrete test vector l_z(i) = exp(-i kappa xhat_i . z).
pub fn test_vector(z: [f64; 2], dirs: &DirectionSet, kappa: f64) -> Vec<Complex64> {
    dirs.vectors()
        .iter()
        .map(|x| Complex64::from_polar(1.0, -kappa * (x[0] * z[0] + x[1] * z[1])))
        .collect()
}

/// Tikhonov spectral filter phi(t; alpha) = t^2 / (t^2 + alpha), in [0, 1).
pub fn tikhonov_filter(t: f64, alpha: f64) -> f64 {
    let t2 = t * t;
    t2 / (t2 + alpha)
}

fn validate_spectrum(spec: &SpectralSystem) -> Result<()> {
    let total = spec.dim();
    if spec.negative * 2 > total {
        return Err(ImagingError::MostlyNegativeSpectrum {
            negative: spec.negative,
            total,
        });
    }
    if spec.usable().next().is_none() {
        return Err(ImagingError::DegenerateSpectrum);
    }
    Ok(())
}

/// Tikhonov-filtered factorization-method indicator at a sampling point.
pub fn indicator_fm(
    z: [f64; 2],
    spec: &SpectralSystem,
    dirs: &DirectionSet,
    kappa: f64,
    alpha: f64,
) -> Result<f64> {
    if alpha <= 0.0 {
        return Err(ImagingError::InvalidParameter(format!(
            "alpha {alpha} must be positive"
        )));
    }
    validate_spectrum(spec)?;
    let lz = test_vector(z, dirs, kappa);
    Ok(1.0 / picard_sum(spec, &lz, |s| {
        let f = tikhonov_filter(s, alpha);
        f * f / s
    }))
}

/// Unregularized Picard-series indicator.
pub fn indicator_picard(
    z: [f64; 2],
    spec: &SpectralSystem,
    dirs: &DirectionSet,
    kappa: f64,
) -> Result<f64> {
    validate_spectrum(spec)?;
    let lz = test_vector(z, dirs, kappa);
    Ok(1.0 / picard_sum(spec, &lz, |s| 1.0 / s))
}

fn picard_sum(spec: &SpectralSystem, lz: &[Complex64], weight: impl Fn(f64) -> f64) -> f64 {
    let mut total = 0.0;
    for j in spec.usable() {
        let u = &spec.eigenvectors[j];
        let mut inner = Complex64::ZERO;
        for (uk, lk) in u.iter().zip(lz) {
            inner += uk.conj() * lk;
        }
        total += weight(spec.eigenvalues[j]) * inner.norm_sqr();
    }
    total
}

/// Rectangular sampling grid with inclusive, equally spaced points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplingGrid {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    pub nx: usize,
    pub ny: usize,
}

impl SamplingGrid {
    pub fn validate(&self) -> Result<()> {
        if self.nx < 2 || self.ny < 2 {
            return Err(ImagingError::InvalidGrid(format!(
                "nx = {}, ny = {} must both be >= 2",
                self.nx, self.ny
            )));
        }
        if !(self.xmax > self.xmin) || !(self.ymax > self.ymin) {
            return Err(ImagingError::InvalidGrid("degenerate range".into()));
        }
        Ok(())
    }

    pub fn x(&self, ix: usize) -> f64 {
        self.xmin + (self.xmax - self.xmin) * ix as f64 / (self.nx - 1) as f64
    }

    pub fn y(&self, iy: usize) -> f64 {
        self.ymin + (self.ymax - self.ymin) * iy as f64 / (self.ny - 1) as f64
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Indicator mode selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ImagingMode {
    /// Tikhonov-filtered factorization-method sum at a fixed alpha.
    #[default]
    TikhonovFm,
    /// Plain Picard series (no filter).
    Unregularized,
    /// The filtered sum on a decreasing alpha sequence (alpha, alpha/10,
    /// alpha/100); the field at the smallest alpha is returned and the trend
    /// across the sequence is reported by [`indicator_field_with_trend`].
    RegularizedLiminf,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImagingConfig {
    pub alpha: f64,
    pub grid: SamplingGrid,
    pub mode: ImagingMode,
}

impl ImagingConfig {
    pub fn validate(&self) -> Result<()> {
        self.grid.validate()?;
        if self.mode != ImagingMode::Unregularized && self.alpha <= 0.0 {
            return Err(ImagingError::InvalidParameter(format!(
                "alpha {} must be positive for filtered modes",
                self.alpha
            )));
        }
        Ok(())
    }
}

/// Sampled indicator values over a grid; values[ix * ny + iy] pairs with
/// (x(ix), y(iy)).
#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorField {
    pub grid: SamplingGrid,
    pub values: Vec<f64>,
}

/// Max over a decreasing alpha sequence, reported alongside the liminf field.
#[derive(Debug, Clone, Serialize)]
pub struct AlphaTrend {
    pub alphas: Vec<f64>,
    pub max_values: Vec<f64>,
}

/// Evaluate the configured indicator at every grid point (deterministic
/// ordering, single-threaded).
pub fn indicator_field(
    config: &ImagingConfig,
    spec: &SpectralSystem,
    dirs: &DirectionSet,
    kappa: f64,
) -> Result<IndicatorField> {
    indicator_field_with_trend(config, spec, dirs, kappa).map(|(f, _)| f)
}

/// Like [`indicator_field`] but also reporting the alpha trend in the
/// liminf mode (`None` otherwise).
pub fn indicator_field_with_trend(
    config: &ImagingConfig,
    spec: &SpectralSystem,
    dirs: &DirectionSet,
    kappa: f64,
) -> Result<(IndicatorField, Option<AlphaTrend>)> {
    config.validate()?;
    validate_spectrum(spec)?;
    match config.mode {
        ImagingMode::TikhonovFm => {
            let field = field_for(config.grid, spec, dirs, kappa, Some(config.alpha))?;
            Ok((field, None))
        }
        ImagingMode::Unregularized => {
            let field = field_for(config.grid, spec, dirs, kappa, None)?;
            Ok((field, None))
        }
        ImagingMode::RegularizedLiminf => {
            let alphas = vec![config.alpha, config.alpha / 10.0, config.alpha / 100.0];
            let mut last = None;
            let mut max_values = Vec::new();
            for &a in &alphas {
                let f = field_for(config.grid, spec, dirs, kappa, Some(a))?;
                max_values.push(f.values.iter().cloned().fold(0.0, f64::max));
                last = Some(f);
            }
            Ok((
                last.expect("alpha sequence is nonempty"),
                Some(AlphaTrend { alphas, max_values }),
            ))
        }
    }
}

fn field_for(
    grid: SamplingGrid,
    spec: &SpectralSystem,
    dirs: &DirectionSet,
    kappa: f64,
    alpha: Option<f64>,
) -> Result<IndicatorField> {
    let mut values = Vec::with_capacity(grid.len());
    for ix in 0..grid.nx {
        for iy in 0..grid.ny {
            let z = [grid.x(ix), grid.y(iy)];
            let v = match alpha {
                Some(a) => indicator_fm(z, spec, dirs, kappa, a)?,
                None => indicator_picard(z, spec, dirs, kappa)?,
            };
            values.push(v);
        }
    }
    Ok(IndicatorField { grid, values })
}

impl IndicatorField {
    pub fn get(&self, ix: usize, iy: usize) -> f64 {
        self.values[ix * self.grid.ny + iy]
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Grid coordinates of the maximum value.
    pub fn argmax(&self) -> [f64; 2] {
        let (k, _) = self
            .values
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .expect("fields are nonempty");
        [self.grid.x(k / self.grid.ny), self.grid.y(k % self.grid.ny)]
    }

    /// CSV rows `x,y,w`, y fastest (row-major in the storage order).
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        let mut buf = String::from("x,y,w\n");
        for ix in 0..self.grid.nx {
            for iy in 0..self.grid.ny {
                buf.push_str(&format!(
                    "{},{},{}\n",
                    self.grid.x(ix),
                    self.grid.y(iy),
                    self.get(ix, iy)
                ));
            }
        }
        out.write_all(buf.as_bytes())?;
        Ok(())
    }

    /// Binary 8-bit PGM, min-max normalized; the top image row is max y.
    pub fn write_pgm<W: Write>(&self, mut out: W) -> Result<()> {
        let lo = self.values.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = self.max_value();
        let span = if hi > lo { hi - lo } else { 1.0 };
        out.write_all(format!("P5\n{} {}\n255\n", self.grid.nx, self.grid.ny).as_bytes())?;
        let mut pixels = Vec::with_capacity(self.grid.len());
        for iy in (0..self.grid.ny).rev() {
            for ix in 0..self.grid.nx {
                let v = (self.get(ix, iy) - lo) / span;
                pixels.push((v * 255.0).round().clamp(0.0, 255.0) as u8);
            }
        }
        out.write_all(&pixels)?;
        Ok(())
    }
}

/// Boolean mask of cells at or above `level * max(values)`, level in (0, 1).
pub fn threshold_mask(field: &IndicatorField, level: f64) -> Vec<bool> {
    let cut = level * field.max_value();
    field.values.iter().map(|v| *v >= cut).collect()
}

/// Jaccard index |A and B| / |A or B|; two empty masks count as identical.
pub fn jaccard(a: &[bool], b: &[bool]) -> f64 {
    let inter = a.iter().zip(b).filter(|(x, y)| **x && **y).count();
    let union = a.iter().zip(b).filter(|(x, y)| **x || **y).count();
    if union == 0 {
        1.0
    } else {
        inter as f64 / union as f64
    }
}

/// Mean position of the true cells of a mask over its grid.
pub fn mask_centroid(mask: &[bool], grid: &SamplingGrid) -> Option<[f64; 2]> {
    let mut count = 0usize;
    let mut sx = 0.0;
    let mut sy = 0.0;
    for ix in 0..grid.nx {
        for iy in 0..grid.ny {
            if mask[ix * grid.ny + iy] {
                count += 1;
                sx += grid.x(ix);
                sy += grid.y(iy);
            }
        }
    }
    if count == 0 {
        None
    } else {
        Some([sx / count as f64, sy / count as f64])
    }
}
