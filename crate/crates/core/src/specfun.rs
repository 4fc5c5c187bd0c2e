//! Cylinder functions of integer order for complex arguments.
//!
//! Provides the Bessel function of the first kind J_l(z), the Hankel function
//! of the first kind H1_l(z) = J_l(z) + i Y_l(z), and their derivatives, for
//! |l| <= 32 and |z| <= 50. This is the whole special-function surface needed
//! by the modal disk solver, which evaluates at arguments kappa*eps,
//! i*kappa*eps, kappa*n^(1/4)*eps and i*kappa*n^(1/4)*eps.
//!
//! Evaluation regions:
//! - |z| <= 12: ascending power series with compensated summation (J), and the
//!   logarithmic/digamma series (Y).
//! - |z| > 12: Miller-type downward recurrence for the J sequence, normalized
//!   by the Jacobi-Anger sums 1 = J_0 + 2*sum J_2k (real axis) or
//!   e^(i*sigma*z) = J_0 + 2*sum (i*sigma)^k J_k with sigma chosen so the
//!   target is large; Y_0, Y_1 from Neumann-type sums over the same sequence.
//! - Im(z) > 3: H1 directly through the modified Bessel functions
//!   K_0, K_1 of w = -iz (Temme's continued fraction), because J + iY loses
//!   about 2*Im(z)/ln(10) digits to cancellation there while H1 itself is
//!   exponentially small.
//!
//! Higher orders follow by stable upward recurrence (Y, H1 are dominant in
//! that direction). All routines return explicit errors outside the supported
//! domain instead of degrading silently.

use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

/// Largest supported |order|.
pub const MAX_ORDER: i32 = 32;
/// Largest supported |z|.
pub const MAX_ARGUMENT: f64 = 50.0;
/// Smallest |z| accepted by the Hankel routines (logarithmic singularity at 0).
pub const MIN_HANKEL_ARGUMENT: f64 = 1e-12;

const SERIES_CUTOFF: f64 = 12.0;
const UPPER_IM_CUTOFF: f64 = 3.0;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const MAX_SERIES_TERMS: usize = 300;
const MAX_CF_ITER: usize = 1000;

/// Errors raised by the cylinder-function routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("order {0} outside supported range |order| <= {MAX_ORDER}")]
    OrderOutOfRange(i32),
    #[error("argument modulus {0:.3e} outside supported range |z| <= {MAX_ARGUMENT}")]
    ArgumentOutOfRange(f64),
    #[error("argument modulus {0:.3e} too close to the z = 0 singularity")]
    NearSingularity(f64),
    #[error("value exceeds double-precision range at order {order}, |z| = {modulus:.3e}")]
    Overflow { order: i32, modulus: f64 },
    #[error("continued fraction did not converge")]
    NoConvergence,
}

pub type Result<T> = std::result::Result<T, SpecfunError>;

/// Kahan-compensated accumulator for complex sums.
#[derive(Clone, Copy, Default)]
struct CompensatedSum {
    sum: Complex64,
    carry: Complex64,
}

impl CompensatedSum {
    fn add(&mut self, x: Complex64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    fn value(&self) -> Complex64 {
        self.sum
    }
}

fn check_order(order: i32) -> Result<u32> {
    if order.unsigned_abs() > MAX_ORDER as u32 {
        return Err(SpecfunError::OrderOutOfRange(order));
    }
    Ok(order.unsigned_abs())
}

fn reflection_sign(order: i32) -> f64 {
    if order < 0 && order % 2 != 0 {
        -1.0
    } else {
        1.0
    }
}

/// Bessel function of the first kind J_order(z).
///
/// z = 0 is allowed and handled analytically (J_0(0) = 1, J_l(0) = 0).
pub fn bessel_j(order: i32, z: Complex64) -> Result<Complex64> {
    let l = check_order(order)?;
    let r = z.norm();
    if r > MAX_ARGUMENT {
        return Err(SpecfunError::ArgumentOutOfRange(r));
    }
    let value = if r <= SERIES_CUTOFF {
        j_series(l, z)
    } else {
        miller_j_sequence(l as usize, z)[l as usize]
    };
    Ok(reflection_sign(order) * value)
}

/// Hankel function of the first kind H1_order(z) = J_order(z) + i Y_order(z).
pub fn hankel1(order: i32, z: Complex64) -> Result<Complex64> {
    let l = check_order(order)?;
    let r = z.norm();
    if r > MAX_ARGUMENT {
        return Err(SpecfunError::ArgumentOutOfRange(r));
    }
    if r < MIN_HANKEL_ARGUMENT {
        return Err(SpecfunError::NearSingularity(r));
    }
    let (h0, h1) = if z.im > UPPER_IM_CUTOFF {
        hankel1_01_via_k(z)?
    } else {
        hankel1_01_via_y(z)
    };
    let value = recur_up(l, z, h0, h1).ok_or(SpecfunError::Overflow {
        order,
        modulus: r,
    })?;
    Ok(reflection_sign(order) * value)
}

/// Derivative J'_order(z) via J'_l = (J_{l-1} - J_{l+1}) / 2.
pub fn bessel_j_prime(order: i32, z: Complex64) -> Result<Complex64> {
    check_order(order)?;
    Ok((bessel_j(order - 1, z)? - bessel_j(order + 1, z)?) / 2.0)
}

/// Derivative H1'_order(z) via H1'_l = (H1_{l-1} - H1_{l+1}) / 2.
pub fn hankel1_prime(order: i32, z: Complex64) -> Result<Complex64> {
    check_order(order)?;
    Ok((hankel1(order - 1, z)? - hankel1(order + 1, z)?) / 2.0)
}

/// Ascending power series for J_l(z), l >= 0, |z| <= SERIES_CUTOFF.
fn j_series(l: u32, z: Complex64) -> Complex64 {
    if z == Complex64::ZERO {
        return if l == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::ZERO
        };
    }
    let zh = z / 2.0;
    // (z/2)^l / l!, built factor by factor to keep intermediates moderate
    let mut prefix = Complex64::new(1.0, 0.0);
    for k in 1..=l {
        prefix *= zh / k as f64;
    }
    let zh2 = zh * zh;
    let mut term = Complex64::new(1.0, 0.0);
    let mut acc = CompensatedSum::default();
    acc.add(term);
    for k in 1..MAX_SERIES_TERMS {
        term *= -zh2 / (k as f64 * (l as usize + k) as f64);
        acc.add(term);
        if term.norm() < 1e-17 * acc.value().norm() + f64::MIN_POSITIVE {
            break;
        }
    }
    prefix * acc.value()
}

/// J_0..J_lmax by downward recurrence with Jacobi-Anger normalization.
fn miller_j_sequence(lmax: usize, z: Complex64) -> Vec<Complex64> {
    let mut start = lmax.max(z.norm().ceil() as usize) + 40;
    if start % 2 == 1 {
        start += 1;
    }
    let mut seq = vec![Complex64::ZERO; start + 2];
    seq[start] = Complex64::new(1e-30, 0.0);
    let two_over_z = 2.0 / z;
    for k in (1..=start).rev() {
        let next = k as f64 * two_over_z * seq[k] - seq[k + 1];
        seq[k - 1] = next;
        if next.norm() > 1e250 {
            for v in seq[k - 1..].iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    let scale = if z.im == 0.0 {
        // 1 = J_0 + 2 sum_{k even} J_k
        let mut s = CompensatedSum::default();
        s.add(seq[0]);
        for k in (2..=start).step_by(2) {
            s.add(2.0 * seq[k]);
        }
        Complex64::new(1.0, 0.0) / s.value()
    } else {
        // e^(i sigma z) = J_0 + 2 sum_k (i sigma)^k J_k, with |target| >= 1
        let sigma = if z.im > 0.0 { -1.0 } else { 1.0 };
        let step = Complex64::new(0.0, sigma);
        let mut c = Complex64::new(1.0, 0.0);
        let mut s = CompensatedSum::default();
        s.add(seq[0]);
        for item in seq.iter().take(start + 1).skip(1) {
            c *= step;
            s.add(2.0 * c * item);
        }
        (Complex64::new(0.0, sigma) * z).exp() / s.value()
    };
    seq.truncate(lmax + 1);
    for v in &mut seq {
        *v *= scale;
    }
    seq
}

/// H1_0, H1_1 through J + iY, valid for Im(z) <= UPPER_IM_CUTOFF.
fn hankel1_01_via_y(z: Complex64) -> (Complex64, Complex64) {
    if z.norm() <= SERIES_CUTOFF {
        let (y0, y1) = y01_series(z);
        (j_series(0, z) + Complex64::i() * y0, j_series(1, z) + Complex64::i() * y1)
    } else {
        let seq = miller_j_sequence(z.norm().ceil() as usize + 40, z);
        let (y0, y1) = y01_from_sequence(z, &seq);
        (seq[0] + Complex64::i() * y0, seq[1] + Complex64::i() * y1)
    }
}

/// Logarithmic/digamma power series for Y_0(z), Y_1(z), |z| <= SERIES_CUTOFF.
fn y01_series(z: Complex64) -> (Complex64, Complex64) {
    let j0 = j_series(0, z);
    let j1 = j_series(1, z);
    let log_term = (z / 2.0).ln() + EULER_GAMMA;
    let zh = z / 2.0;
    let zh2 = zh * zh;

    // Y_0 = (2/pi) [ (ln(z/2)+gamma) J_0 + sum_{k>=1} (-1)^{k+1} H_k (z^2/4)^k / (k!)^2 ]
    let mut term = Complex64::new(1.0, 0.0);
    let mut harmonic = 0.0;
    let mut sign = -1.0;
    let mut acc0 = CompensatedSum::default();
    for k in 1..MAX_SERIES_TERMS {
        term *= zh2 / ((k * k) as f64);
        harmonic += 1.0 / k as f64;
        sign = -sign;
        let contrib = sign * harmonic * term;
        acc0.add(contrib);
        if contrib.norm() < 1e-17 * (acc0.value().norm() + 1e-30) {
            break;
        }
    }
    let y0 = (2.0 / PI) * (log_term * j0 + acc0.value());

    // Y_1 = (2/pi) [ (ln(z/2)+gamma) J_1 - 1/z
    //               - (1/2) sum_{k>=0} (-1)^k (H_k + H_{k+1}) (z/2)^{2k+1} / (k!(k+1)!) ]
    let mut term = zh;
    let mut hk = 0.0;
    let mut hk1 = 1.0;
    let mut acc1 = CompensatedSum::default();
    acc1.add((hk + hk1) * term);
    for k in 1..MAX_SERIES_TERMS {
        term *= -zh2 / ((k * (k + 1)) as f64);
        hk += 1.0 / k as f64;
        hk1 += 1.0 / (k + 1) as f64;
        let contrib = (hk + hk1) * term;
        acc1.add(contrib);
        if contrib.norm() < 1e-17 * (acc1.value().norm() + 1e-30) {
            break;
        }
    }
    let y1 = (2.0 / PI) * (log_term * j1 - 1.0 / z - 0.5 * acc1.value());
    (y0, y1)
}

/// Y_0, Y_1 from Neumann-type sums over a normalized J sequence:
/// Y_0 = (2/pi) [ (ln(z/2)+gamma) J_0 - 2 sum_k (-1)^k J_2k / k ] and the
/// term-by-term derivative of that identity for Y_1 = -Y_0'.
fn y01_from_sequence(z: Complex64, seq: &[Complex64]) -> (Complex64, Complex64) {
    let log_term = (z / 2.0).ln() + EULER_GAMMA;
    let kmax = (seq.len() - 2) / 2;
    let mut s0 = CompensatedSum::default();
    let mut s1 = CompensatedSum::default();
    let mut sign = 1.0;
    for k in 1..kmax {
        sign = -sign;
        let kf = k as f64;
        s0.add(sign / kf * seq[2 * k]);
        s1.add(sign / kf * (seq[2 * k - 1] - seq[2 * k + 1]));
    }
    let y0 = (2.0 / PI) * (log_term * seq[0] - 2.0 * s0.value());
    let y1 = (2.0 / PI) * (-seq[0] / z + log_term * seq[1] + s1.value());
    (y0, y1)
}

/// H1_0, H1_1 for Im(z) > UPPER_IM_CUTOFF through K_0, K_1 of w = -iz:
/// H1_l(z) = (2/pi) (-i)^(l+1) K_l(-iz) on the upper half-plane.
fn hankel1_01_via_k(z: Complex64) -> Result<(Complex64, Complex64)> {
    let w = Complex64::new(z.im, -z.re); // -i z, Re(w) = Im(z) > 0
    let (k0, k1) = temme_k01(w)?;
    let h0 = Complex64::new(0.0, -2.0 / PI) * k0;
    let h1 = Complex64::new(-2.0 / PI, 0.0) * k1;
    Ok((h0, h1))
}

/// Temme's continued fraction for K_0(w), K_1(w), Re(w) > 0.
fn temme_k01(w: Complex64) -> Result<(Complex64, Complex64)> {
    let one = Complex64::new(1.0, 0.0);
    let mut b = 2.0 * (one + w);
    let mut d = one / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = Complex64::ZERO;
    let mut q2 = one;
    let a1 = 0.25;
    let mut q = Complex64::new(a1, 0.0);
    let mut c = a1;
    let mut a = -a1;
    let mut s = one + q * delh;
    let mut converged = false;
    for i in 2..MAX_CF_ITER {
        a -= 2.0 * (i - 1) as f64;
        c = -a * c / i as f64;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = one / (b + a * d);
        delh = (b * d - one) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if dels.norm() < 1e-16 * s.norm() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(SpecfunError::NoConvergence);
    }
    let k0 = (PI / (2.0 * w)).sqrt() * (-w).exp() / s;
    let k1 = k0 * (w + 0.5 - a1 * h) / w;
    Ok((k0, k1))
}

/// C_l from (C_0, C_1) by the three-term recurrence, stable for the dominant
/// solutions Y and H1. Returns None on double overflow.
fn recur_up(l: u32, z: Complex64, c0: Complex64, c1: Complex64) -> Option<Complex64> {
    match l {
        0 => return Some(c0),
        1 => return Some(c1),
        _ => {}
    }
    let two_over_z = 2.0 / z;
    let mut prev = c0;
    let mut curr = c1;
    for k in 1..l {
        let next = k as f64 * two_over_z * curr - prev;
        if !next.re.is_finite() || !next.im.is_finite() {
            return None;
        }
        prev = curr;
        curr = next;
    }
    Some(curr)
}
