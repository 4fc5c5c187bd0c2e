//! The discrete multistatic far-field matrix: assembly over equispaced
//! directions, the multiplicative noise model, the Hermitian Im(F) operator
//! feeding the factorization method, and the matrix error norms used to
//! compare exact and Born data.

use crate::forward::ForwardError;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::io::{BufRead, Write};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OperatorError {
    #[error("direction count {0} below the minimum of 4")]
    TooFewDirections(usize),
    #[error("matrix dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("noise level {0} outside [0, 1)")]
    InvalidNoiseLevel(f64),
    #[error("malformed far-field CSV: {0}")]
    MalformedCsv(String),
    #[error(transparent)]
    Forward(#[from] ForwardError),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for OperatorError {
    fn from(e: std::io::Error) -> Self {
        OperatorError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, OperatorError>;

/// N equispaced observation/incidence directions on the unit circle,
/// theta_i = 2 pi (i - 1) / N in 1-based numbering.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectionSet {
    angles: Vec<f64>,
    vectors: Vec<[f64; 2]>,
}

impl DirectionSet {
    pub fn equispaced(n: usize) -> Result<DirectionSet> {
        if n < 4 {
            return Err(OperatorError::TooFewDirections(n));
        }
        let angles: Vec<f64> = (0..n)
            .map(|i| std::f64::consts::TAU * i as f64 / n as f64)
            .collect();
        let vectors = angles.iter().map(|t| [t.cos(), t.sin()]).collect();
        Ok(DirectionSet { angles, vectors })
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn angle(&self, i: usize) -> f64 {
        self.angles[i]
    }

    pub fn vector(&self, i: usize) -> [f64; 2] {
        self.vectors[i]
    }

    pub fn vectors(&self) -> &[[f64; 2]] {
        &self.vectors
    }
}

/// Multiplicative noise description: level delta in [0, 1) and the RNG seed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseSpec {
    pub delta: f64,
    pub seed: u64,
}

/// How the perturbation matrix R is normalized before use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseNormalization {
    /// Divide by the spectral norm of R (the convention used throughout).
    #[default]
    Spectral,
    /// Divide by the largest entry modulus, for sensitivity checks.
    EntrywiseMax,
}

/// Description of how a far-field matrix was produced, carried along with the
/// data and echoed into serialized outputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub model: String,
    pub kappa: f64,
    pub n_re: f64,
    pub n_im: f64,
    pub shape: Option<String>,
    pub noise: Option<NoiseSpec>,
}

/// Dense N x N multistatic matrix F(i, j) = u_inf(xhat_i, d_j), row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct FarFieldMatrix {
    n: usize,
    entries: Vec<Complex64>,
    pub provenance: Provenance,
}

impl FarFieldMatrix {
    pub fn from_entries(n: usize, entries: Vec<Complex64>, provenance: Provenance) -> Result<Self> {
        if entries.len() != n * n {
            return Err(OperatorError::DimensionMismatch(entries.len(), n * n));
        }
        Ok(FarFieldMatrix {
            n,
            entries,
            provenance,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Serialize as CSV: a header line `N,kappa,n_re,n_im,model,delta,seed`
    /// followed by one `i,j,re,im` row per entry (1-based indices, shortest
    /// round-trip float formatting).
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        let (delta, seed) = match self.provenance.noise {
            Some(ns) => (ns.delta, ns.seed),
            None => (0.0, 0),
        };
        let mut buf = String::new();
        writeln!(
            buf,
            "{},{},{},{},{},{},{}",
            self.n,
            self.provenance.kappa,
            self.provenance.n_re,
            self.provenance.n_im,
            self.provenance.model,
            delta,
            seed
        )
        .expect("string write");
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.get(i, j);
                writeln!(buf, "{},{},{},{}", i + 1, j + 1, e.re, e.im).expect("string write");
            }
        }
        out.write_all(buf.as_bytes())?;
        Ok(())
    }

    pub fn read_csv<R: BufRead>(reader: R) -> Result<Self> {
        let mut lines = reader.lines();
        let header = lines
            .next()
            .ok_or_else(|| OperatorError::MalformedCsv("empty file".into()))??;
        let fields: Vec<&str> = header.trim().split(',').collect();
        if fields.len() != 7 {
            return Err(OperatorError::MalformedCsv(format!(
                "expected 7 header fields, found {}",
                fields.len()
            )));
        }
        let parse_f = |s: &str, what: &str| {
            s.parse::<f64>()
                .map_err(|_| OperatorError::MalformedCsv(format!("bad {what}: {s:?}")))
        };
        let n: usize = fields[0]
            .parse()
            .map_err(|_| OperatorError::MalformedCsv(format!("bad N: {:?}", fields[0])))?;
        let kappa = parse_f(fields[1], "kappa")?;
        let n_re = parse_f(fields[2], "n_re")?;
        let n_im = parse_f(fields[3], "n_im")?;
        let model = fields[4].to_string();
        let delta = parse_f(fields[5], "delta")?;
        let seed: u64 = fields[6]
            .parse()
            .map_err(|_| OperatorError::MalformedCsv(format!("bad seed: {:?}", fields[6])))?;
        let mut entries = vec![Complex64::ZERO; n * n];
        let mut seen = 0usize;
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let f: Vec<&str> = line.trim().split(',').collect();
            if f.len() != 4 {
                return Err(OperatorError::MalformedCsv(format!("bad row: {line:?}")));
            }
            let i: usize = f[0]
                .parse()
                .map_err(|_| OperatorError::MalformedCsv(format!("bad i: {:?}", f[0])))?;
            let j: usize = f[1]
                .parse()
                .map_err(|_| OperatorError::MalformedCsv(format!("bad j: {:?}", f[1])))?;
            if i == 0 || j == 0 || i > n || j > n {
                return Err(OperatorError::MalformedCsv(format!(
                    "index ({i},{j}) outside 1..={n}"
                )));
            }
            entries[(i - 1) * n + (j - 1)] =
                Complex64::new(parse_f(f[2], "re")?, parse_f(f[3], "im")?);
            seen += 1;
        }
        if seen != n * n {
            return Err(OperatorError::MalformedCsv(format!(
                "expected {} rows, found {seen}",
                n * n
            )));
        }
        let noise = if delta > 0.0 {
            Some(NoiseSpec { delta, seed })
        } else {
            None
        };
        Ok(FarFieldMatrix {
            n,
            entries,
            provenance: Provenance {
                model,
                kappa,
                n_re,
                n_im,
                shape: None,
                noise,
            },
        })
    }
}

/// Assemble the multistatic matrix from a far-field closure over direction
/// pairs: entry (i, j) = farfield(xhat_i, d_j).
pub fn assemble<F>(mut farfield: F, dirs: &DirectionSet, provenance: Provenance) -> Result<FarFieldMatrix>
where
    F: FnMut([f64; 2], [f64; 2]) -> std::result::Result<Complex64, ForwardError>,
{
    let n = dirs.len();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(farfield(dirs.vector(i), dirs.vector(j))?);
        }
    }
    FarFieldMatrix::from_entries(n, entries, provenance)
}

/// The normalized random perturbation matrix R used by [`add_noise`].
///
/// Stream contract (bit-exact across platforms): a ChaCha8 generator seeded
/// with `spec.seed` first draws all real parts in row-major order, then all
/// imaginary parts in row-major order, each uniform on [-1, 1] as
/// `2 * gen::<f64>() - 1`; R is then divided by its spectral norm (or largest
/// entry modulus under [`NoiseNormalization::EntrywiseMax`]).
pub fn noise_matrix(n: usize, spec: &NoiseSpec, norm: NoiseNormalization) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut re = vec![0.0f64; n * n];
    let mut im = vec![0.0f64; n * n];
    for v in re.iter_mut() {
        *v = 2.0 * rng.gen::<f64>() - 1.0;
    }
    for v in im.iter_mut() {
        *v = 2.0 * rng.gen::<f64>() - 1.0;
    }
    let mut r: Vec<Complex64> = re
        .into_iter()
        .zip(im)
        .map(|(a, b)| Complex64::new(a, b))
        .collect();
    let scale = match norm {
        NoiseNormalization::Spectral => spectral_norm(&r, n),
        NoiseNormalization::EntrywiseMax => r.iter().map(|e| e.norm()).fold(0.0, f64::max),
    };
    for e in &mut r {
        *e /= scale;
    }
    r
}

/// Multiplicative noise: F_delta(i, j) = F(i, j) (1 + delta R(i, j)).
pub fn add_noise(
    f: &FarFieldMatrix,
    spec: &NoiseSpec,
    norm: NoiseNormalization,
) -> Result<FarFieldMatrix> {
    if !(0.0..1.0).contains(&spec.delta) {
        return Err(OperatorError::InvalidNoiseLevel(spec.delta));
    }
    let n = f.dim();
    let r = noise_matrix(n, spec, norm);
    let entries: Vec<Complex64> = f
        .entries
        .iter()
        .zip(&r)
        .map(|(e, rr)| e * (1.0 + spec.delta * rr))
        .collect();
    let mut provenance = f.provenance.clone();
    provenance.noise = Some(*spec);
    FarFieldMatrix::from_entries(n, entries, provenance)
}

/// Largest singular value by power iteration on R* R; deterministic start.
pub fn spectral_norm(entries: &[Complex64], n: usize) -> f64 {
    let mut v = vec![Complex64::new(1.0, 0.0); n];
    let mut norm = (n as f64).sqrt();
    for x in &mut v {
        *x /= norm;
    }
    let mut sigma2 = 0.0;
    for _ in 0..500 {
        // w = R v ; u = R* w
        let mut w = vec![Complex64::ZERO; n];
        for i in 0..n {
            let mut s = Complex64::ZERO;
            for j in 0..n {
                s += entries[i * n + j] * v[j];
            }
            w[i] = s;
        }
        let mut u = vec![Complex64::ZERO; n];
        for j in 0..n {
            let mut s = Complex64::ZERO;
            for i in 0..n {
                s += entries[i * n + j].conj() * w[i];
            }
            u[j] = s;
        }
        norm = u.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        let new_sigma2 = norm;
        for (x, y) in v.iter_mut().zip(&u) {
            *x = y / norm;
        }
        if (new_sigma2 - sigma2).abs() <= 1e-14 * new_sigma2 {
            sigma2 = new_sigma2;
            break;
        }
        sigma2 = new_sigma2;
    }
    sigma2.sqrt()
}

/// Im(F) = (F - F*) / (2i), assembled entrywise so the result is Hermitian
/// to the last bit: entry (i, j) = ((Im F_ij + Im F_ji)/2, (Re F_ji - Re F_ij)/2).
pub fn imag_part_operator(f: &FarFieldMatrix) -> Vec<Complex64> {
    let n = f.dim();
    let mut out = vec![Complex64::ZERO; n * n];
    for i in 0..n {
        for j in 0..n {
            let a = f.get(i, j);
            let b = f.get(j, i);
            out[i * n + j] = Complex64::new((a.im + b.im) / 2.0, (b.re - a.re) / 2.0);
        }
    }
    out
}

/// Matrix error norm conventions for exact-vs-Born comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormConvention {
    /// max_{i,j} |A_ij - B_ij|
    EntrywiseMax,
    /// max_i sum_j |A_ij - B_ij| (induced infinity norm)
    InducedInf,
}

/// Error between two far-field matrices under the chosen convention.
pub fn matrix_error(a: &FarFieldMatrix, b: &FarFieldMatrix, convention: NormConvention) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(OperatorError::DimensionMismatch(a.dim(), b.dim()));
    }
    let n = a.dim();
    let mut result: f64 = 0.0;
    for i in 0..n {
        let mut row_sum = 0.0;
        for j in 0..n {
            let d = (a.get(i, j) - b.get(i, j)).norm();
            match convention {
                NormConvention::EntrywiseMax => result = result.max(d),
                NormConvention::InducedInf => row_sum += d,
            }
        }
        if convention == NormConvention::InducedInf {
            result = result.max(row_sum);
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn provenance() -> Provenance {
        Provenance {
            model: "test".into(),
            kappa: 2.0,
            n_re: 1.0,
            n_im: 0.5,
            shape: None,
            noise: None,
        }
    }

    fn matrix_from(n: usize, f: impl Fn(usize, usize) -> Complex64) -> FarFieldMatrix {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        FarFieldMatrix::from_entries(n, entries, provenance()).unwrap()
    }

    #[test]
    fn direction_set_spacing() {
        let d = DirectionSet::equispaced(64).unwrap();
        assert_eq!(d.len(), 64);
        assert_eq!(d.angle(0), 0.0);
        assert!((d.angle(1) - std::f64::consts::TAU / 64.0).abs() < 1e-15);
        assert!(DirectionSet::equispaced(3).is_err());
    }

    #[test]
    fn assemble_zero_map() {
        let dirs = DirectionSet::equispaced(8).unwrap();
        let f = assemble(|_, _| Ok(Complex64::ZERO), &dirs, provenance()).unwrap();
        assert!(f.entries().iter().all(|e| *e == Complex64::ZERO));
    }

    #[test]
    fn noise_zero_delta_is_identity() {
        let f = matrix_from(6, |i, j| Complex64::new(i as f64, j as f64));
        let g = add_noise(
            &f,
            &NoiseSpec {
                delta: 0.0,
                seed: 42,
            },
            NoiseNormalization::Spectral,
        )
        .unwrap();
        assert_eq!(f.entries(), g.entries());
    }

    #[test]
    fn noise_is_seed_deterministic() {
        let f = matrix_from(6, |i, j| Complex64::new(1.0 + i as f64, j as f64));
        let spec = NoiseSpec {
            delta: 0.05,
            seed: 7,
        };
        let a = add_noise(&f, &spec, NoiseNormalization::Spectral).unwrap();
        let b = add_noise(&f, &spec, NoiseNormalization::Spectral).unwrap();
        assert_eq!(a.entries(), b.entries());
        let c = add_noise(
            &f,
            &NoiseSpec {
                delta: 0.05,
                seed: 8,
            },
            NoiseNormalization::Spectral,
        )
        .unwrap();
        assert_ne!(a.entries(), c.entries());
    }

    #[test]
    fn noise_perturbation_is_exactly_delta_f_hadamard_r() {
        let f = matrix_from(5, |i, j| Complex64::new(0.3 + i as f64, 1.0 - j as f64));
        let spec = NoiseSpec {
            delta: 0.1,
            seed: 3,
        };
        let r = noise_matrix(5, &spec, NoiseNormalization::Spectral);
        let g = add_noise(&f, &spec, NoiseNormalization::Spectral).unwrap();
        for (k, (fe, ge)) in f.entries().iter().zip(g.entries()).enumerate() {
            assert_eq!(*ge, fe * (1.0 + spec.delta * r[k]));
        }
    }

    #[test]
    fn noise_spectral_norm_is_one() {
        let spec = NoiseSpec {
            delta: 0.05,
            seed: 11,
        };
        let r = noise_matrix(16, &spec, NoiseNormalization::Spectral);
        assert!((spectral_norm(&r, 16) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn imag_part_of_real_symmetric_is_zero() {
        let f = matrix_from(4, |i, j| Complex64::new((i + j) as f64, 0.0));
        let a = imag_part_operator(&f);
        assert!(a.iter().all(|e| *e == Complex64::ZERO));
    }

    #[test]
    fn imag_part_of_i_times_identity() {
        let f = matrix_from(4, |i, j| {
            if i == j {
                Complex64::i()
            } else {
                Complex64::ZERO
            }
        });
        let a = imag_part_operator(&f);
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::ZERO
                };
                assert_eq!(a[i * 4 + j], want);
            }
        }
    }

    #[test]
    fn imag_part_is_bitwise_hermitian() {
        let f = matrix_from(7, |i, j| {
            Complex64::new((i * 3 + j) as f64 * 0.137, (j * 5 + i) as f64 * -0.731)
        });
        let a = imag_part_operator(&f);
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(a[i * 7 + j], a[j * 7 + i].conj());
            }
        }
    }

    #[test]
    fn matrix_error_conventions() {
        let a = matrix_from(3, |_, _| Complex64::ZERO);
        let mut entries = vec![Complex64::ZERO; 9];
        entries[5] = Complex64::new(0.0, -2.5);
        let b = FarFieldMatrix::from_entries(3, entries, provenance()).unwrap();
        assert_eq!(matrix_error(&a, &b, NormConvention::EntrywiseMax).unwrap(), 2.5);
        assert_eq!(matrix_error(&a, &b, NormConvention::InducedInf).unwrap(), 2.5);
        assert_eq!(matrix_error(&a, &a, NormConvention::EntrywiseMax).unwrap(), 0.0);
    }

    #[test]
    fn csv_round_trip() {
        let f = matrix_from(5, |i, j| {
            Complex64::new((i as f64).sin() * 0.1, (j as f64).cos() * 0.2)
        });
        let mut buf = Vec::new();
        f.write_csv(&mut buf).unwrap();
        let g = FarFieldMatrix::read_csv(std::io::Cursor::new(&buf)).unwrap();
        assert_eq!(f.dim(), g.dim());
        assert_eq!(f.entries(), g.entries());
        assert_eq!(g.provenance.kappa, 2.0);
    }
}
