//! Far-field scattering simulation and factorization-method imaging for
//! penetrable absorbing scatterers in thin elastic (Kirchhoff-Love) plates.
//!
//! Flexural waves in a thin plate obey the fourth-order equation
//! (Laplacian^2 - kappa^4 n) u = 0. This crate simulates the far-field pattern
//! produced by plane-wave illumination of a penetrable scatterer - exactly for
//! disks through a separation-of-variables modal system, and through the Born
//! approximation for general weak scatterers - and reconstructs the scatterer
//! support from multistatic far-field data by the factorization method: the
//! spectral decomposition of the positive operator Im(F) feeds a
//! Tikhonov-filtered Picard series whose reciprocal peaks inside the scatterer.
//!
//! Module map:
//! - [`specfun`]: complex-argument cylinder functions (J, H1, derivatives).
//! - [`geometry`]: scatterer shapes, membership tests, area quadrature.
//! - [`forward`]: exact disk modal solver and Born far fields.
//! - [`operator`]: multistatic matrix assembly, noise model, Im(F), norms.
//! - [`imaging`]: Hermitian eigensolver, indicator functions, grids, metrics.

pub mod forward;
pub mod geometry;
pub mod imaging;
pub mod operator;
pub mod specfun;

pub use num_complex::Complex64;
