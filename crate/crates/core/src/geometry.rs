//! Scatterer geometry: parametric shapes, point membership, and the area
//! quadrature nodes feeding the Born integral.
//!
//! Built-in shapes are the disk, the five-petal star
//! 0.175(0.3 cos 5t + 2)(cos t, sin t), the kite
//! 0.5(0.75 cos t + 0.3 cos 2t, sin t), and the two-disk union with radius-0.5
//! parts at (-0.5, 0.5) and (1, 1.5). Star and kite are carried as closed
//! polylines (default 2048 samples) and classified by even-odd ray casting;
//! disks use the exact radial test. Points within 1e-12 of a boundary
//! classify as interior so quadrature node sets are reproducible.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Boundary tie-break band: points this close to a boundary count as interior.
pub const BOUNDARY_TIE: f64 = 1e-12;

/// Default number of boundary samples for parametric shapes.
pub const DEFAULT_BOUNDARY_SAMPLES: usize = 2048;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("unknown shape name {0:?} (expected disk, star, kite or two_disks)")]
    UnknownShape(String),
    #[error("invalid shape parameter: {0}")]
    InvalidParameter(String),
    #[error("quadrature spacing {h} outside (0, {max}] for this shape")]
    InvalidResolution { h: f64, max: f64 },
    #[error("no quadrature node fell inside the shape (h too coarse)")]
    EmptyQuadrature,
}

/// Geometric description of a scatterer support.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ShapeSpec {
    /// Disk of the given radius centered at `center`.
    Disk { radius: f64, center: [f64; 2] },
    /// Radial shape: tabulated radii at equally spaced angles in [0, 2pi),
    /// linearly interpolated in angle.
    RadialCurve { radii: Vec<f64>, center: [f64; 2] },
    /// Simple closed polyline; the last sample repeats the first.
    ParametricCurve { points: Vec<[f64; 2]> },
    /// Disjoint union of parts.
    Union { parts: Vec<ShapeSpec> },
}

/// Midpoint-rule nodes over the interior of a shape: uniform cell weight h^2.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSet {
    pub nodes: Vec<[f64; 2]>,
    pub weight: f64,
    pub h: f64,
}

impl QuadratureSet {
    pub fn total_weight(&self) -> f64 {
        self.weight * self.nodes.len() as f64
    }
}

/// Axis-aligned bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub min: [f64; 2],
    pub max: [f64; 2],
}

impl BoundingBox {
    fn merge(self, other: BoundingBox) -> BoundingBox {
        BoundingBox {
            min: [self.min[0].min(other.min[0]), self.min[1].min(other.min[1])],
            max: [self.max[0].max(other.max[0]), self.max[1].max(other.max[1])],
        }
    }

    pub fn width(&self) -> f64 {
        self.max[0] - self.min[0]
    }

    pub fn height(&self) -> f64 {
        self.max[1] - self.min[1]
    }
}

/// Construct one of the built-in shapes.
///
/// `center` shifts the shape; `samples` controls the polyline resolution of
/// the star and kite boundaries (ignored for disks).
pub fn builtin_shape(
    name: &str,
    radius: Option<f64>,
    center: [f64; 2],
    samples: Option<usize>,
) -> Result<ShapeSpec, GeometryError> {
    let m = samples.unwrap_or(DEFAULT_BOUNDARY_SAMPLES);
    if m < 8 {
        return Err(GeometryError::InvalidParameter(format!(
            "boundary sample count {m} < 8"
        )));
    }
    let shape = match name {
        "disk" => {
            let r = radius.unwrap_or(0.5);
            if r <= 0.0 {
                return Err(GeometryError::InvalidParameter(format!(
                    "disk radius {r} must be positive"
                )));
            }
            ShapeSpec::Disk { radius: r, center }
        }
        "star" => parametric(m, center, |t| {
            let r = 0.175 * (0.3 * (5.0 * t).cos() + 2.0);
            [r * t.cos(), r * t.sin()]
        }),
        "kite" => parametric(m, center, |t| {
            [0.5 * (0.75 * t.cos() + 0.3 * (2.0 * t).cos()), 0.5 * t.sin()]
        }),
        "two_disks" => ShapeSpec::Union {
            parts: vec![
                ShapeSpec::Disk {
                    radius: 0.5,
                    center: [center[0] - 0.5, center[1] + 0.5],
                },
                ShapeSpec::Disk {
                    radius: 0.5,
                    center: [center[0] + 1.0, center[1] + 1.5],
                },
            ],
        },
        other => return Err(GeometryError::UnknownShape(other.to_string())),
    };
    shape.validate()?;
    Ok(shape)
}

fn parametric(m: usize, center: [f64; 2], f: impl Fn(f64) -> [f64; 2]) -> ShapeSpec {
    let mut points = Vec::with_capacity(m + 1);
    for k in 0..m {
        let t = std::f64::consts::TAU * k as f64 / m as f64;
        let p = f(t);
        points.push([p[0] + center[0], p[1] + center[1]]);
    }
    points.push(points[0]); // close the polyline exactly
    ShapeSpec::ParametricCurve { points }
}

impl ShapeSpec {
    /// Check the structural invariants: positive radii, closed simple
    /// polylines, pairwise-disjoint union parts.
    pub fn validate(&self) -> Result<(), GeometryError> {
        match self {
            ShapeSpec::Disk { radius, .. } => {
                if *radius <= 0.0 {
                    return Err(GeometryError::InvalidParameter(format!(
                        "disk radius {radius} must be positive"
                    )));
                }
            }
            ShapeSpec::RadialCurve { radii, .. } => {
                if radii.len() < 3 {
                    return Err(GeometryError::InvalidParameter(
                        "radial table needs at least 3 samples".into(),
                    ));
                }
                if radii.iter().any(|r| *r <= 0.0) {
                    return Err(GeometryError::InvalidParameter(
                        "radial table must be strictly positive".into(),
                    ));
                }
            }
            ShapeSpec::ParametricCurve { points } => {
                if points.len() < 4 {
                    return Err(GeometryError::InvalidParameter(
                        "polyline needs at least 3 distinct samples".into(),
                    ));
                }
                let first = points[0];
                let last = points[points.len() - 1];
                if (first[0] - last[0]).hypot(first[1] - last[1]) > BOUNDARY_TIE {
                    return Err(GeometryError::InvalidParameter(
                        "polyline is not closed".into(),
                    ));
                }
            }
            ShapeSpec::Union { parts } => {
                if parts.is_empty() {
                    return Err(GeometryError::InvalidParameter("empty union".into()));
                }
                for p in parts {
                    p.validate()?;
                }
                for i in 0..parts.len() {
                    for j in i + 1..parts.len() {
                        if parts_overlap(&parts[i], &parts[j]) {
                            return Err(GeometryError::InvalidParameter(format!(
                                "union parts {i} and {j} overlap"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn bounding_box(&self) -> BoundingBox {
        match self {
            ShapeSpec::Disk { radius, center } => BoundingBox {
                min: [center[0] - radius, center[1] - radius],
                max: [center[0] + radius, center[1] + radius],
            },
            ShapeSpec::RadialCurve { radii, center } => {
                let r = radii.iter().cloned().fold(0.0, f64::max);
                BoundingBox {
                    min: [center[0] - r, center[1] - r],
                    max: [center[0] + r, center[1] + r],
                }
            }
            ShapeSpec::ParametricCurve { points } => {
                let mut bb = BoundingBox {
                    min: [f64::INFINITY; 2],
                    max: [f64::NEG_INFINITY; 2],
                };
                for p in points {
                    bb.min[0] = bb.min[0].min(p[0]);
                    bb.min[1] = bb.min[1].min(p[1]);
                    bb.max[0] = bb.max[0].max(p[0]);
                    bb.max[1] = bb.max[1].max(p[1]);
                }
                bb
            }
            ShapeSpec::Union { parts } => parts
                .iter()
                .map(|p| p.bounding_box())
                .reduce(BoundingBox::merge)
                .expect("validated unions are nonempty"),
        }
    }

    /// Largest axis-aligned extent, used to scale quadrature resolutions.
    pub fn diameter(&self) -> f64 {
        let bb = self.bounding_box();
        bb.width().max(bb.height())
    }
}

fn parts_overlap(a: &ShapeSpec, b: &ShapeSpec) -> bool {
    if let (ShapeSpec::Disk { radius: ra, center: ca }, ShapeSpec::Disk { radius: rb, center: cb }) =
        (a, b)
    {
        let d = (ca[0] - cb[0]).hypot(ca[1] - cb[1]);
        return d < ra + rb;
    }
    // Coarse check for general parts: bounding boxes first, then boundary
    // samples of one part tested against the other.
    let (ba, bb) = (a.bounding_box(), b.bounding_box());
    if ba.max[0] < bb.min[0] || bb.max[0] < ba.min[0] || ba.max[1] < bb.min[1] || bb.max[1] < ba.min[1]
    {
        return false;
    }
    boundary_samples(a).iter().any(|p| contains(b, *p))
        || boundary_samples(b).iter().any(|p| contains(a, *p))
}

fn boundary_samples(shape: &ShapeSpec) -> Vec<[f64; 2]> {
    match shape {
        ShapeSpec::Disk { radius, center } => (0..64)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / 64.0;
                [center[0] + radius * t.cos(), center[1] + radius * t.sin()]
            })
            .collect(),
        ShapeSpec::RadialCurve { radii, center } => radii
            .iter()
            .enumerate()
            .map(|(k, r)| {
                let t = std::f64::consts::TAU * k as f64 / radii.len() as f64;
                [center[0] + r * t.cos(), center[1] + r * t.sin()]
            })
            .collect(),
        ShapeSpec::ParametricCurve { points } => points.clone(),
        ShapeSpec::Union { parts } => parts.iter().flat_map(boundary_samples).collect(),
    }
}

/// Point membership. Exact radial test for disks and radial curves, even-odd
/// ray casting for polylines, disjunction over union parts. Points within
/// [`BOUNDARY_TIE`] of the boundary classify as interior.
pub fn contains(shape: &ShapeSpec, p: [f64; 2]) -> bool {
    match shape {
        ShapeSpec::Disk { radius, center } => {
            (p[0] - center[0]).hypot(p[1] - center[1]) <= radius + BOUNDARY_TIE
        }
        ShapeSpec::RadialCurve { radii, center } => {
            let dx = p[0] - center[0];
            let dy = p[1] - center[1];
            let r = dx.hypot(dy);
            let theta = dy.atan2(dx).rem_euclid(std::f64::consts::TAU);
            let m = radii.len() as f64;
            let pos = theta / std::f64::consts::TAU * m;
            let k = (pos.floor() as usize) % radii.len();
            let frac = pos - pos.floor();
            let bound = radii[k] * (1.0 - frac) + radii[(k + 1) % radii.len()] * frac;
            r <= bound + BOUNDARY_TIE
        }
        ShapeSpec::ParametricCurve { points } => polyline_contains(points, p),
        ShapeSpec::Union { parts } => parts.iter().any(|s| contains(s, p)),
    }
}

/// Even-odd rule with a half-open edge convention, plus the near-boundary
/// tie-break in a single pass over the segments.
fn polyline_contains(points: &[[f64; 2]], p: [f64; 2]) -> bool {
    let mut inside = false;
    let mut dist2 = f64::INFINITY;
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        // crossing test for the horizontal ray towards +x
        if (a[1] <= p[1]) != (b[1] <= p[1]) {
            let t = (p[1] - a[1]) / (b[1] - a[1]);
            let x = a[0] + t * (b[0] - a[0]);
            if x > p[0] {
                inside = !inside;
            }
        }
        // squared distance from p to segment ab
        let ex = b[0] - a[0];
        let ey = b[1] - a[1];
        let len2 = ex * ex + ey * ey;
        let t = if len2 > 0.0 {
            (((p[0] - a[0]) * ex + (p[1] - a[1]) * ey) / len2).clamp(0.0, 1.0)
        } else {
            0.0
        };
        let qx = a[0] + t * ex - p[0];
        let qy = a[1] + t * ey - p[1];
        dist2 = dist2.min(qx * qx + qy * qy);
    }
    inside || dist2 <= BOUNDARY_TIE * BOUNDARY_TIE
}

/// Midpoints of an axis-aligned h-grid over the bounding box, filtered by
/// membership; every node carries weight h^2.
pub fn quadrature_nodes(shape: &ShapeSpec, h: f64) -> Result<QuadratureSet, GeometryError> {
    let max_h = shape.diameter() / 8.0;
    if h <= 0.0 || h > max_h {
        return Err(GeometryError::InvalidResolution { h, max: max_h });
    }
    let bb = shape.bounding_box();
    let nx = (bb.width() / h).ceil() as usize;
    let ny = (bb.height() / h).ceil() as usize;
    let mut nodes = Vec::new();
    for ix in 0..nx {
        let x = bb.min[0] + (ix as f64 + 0.5) * h;
        for iy in 0..ny {
            let y = bb.min[1] + (iy as f64 + 0.5) * h;
            if contains(shape, [x, y]) {
                nodes.push([x, y]);
            }
        }
    }
    if nodes.is_empty() {
        return Err(GeometryError::EmptyQuadrature);
    }
    Ok(QuadratureSet {
        nodes,
        weight: h * h,
        h,
    })
}
