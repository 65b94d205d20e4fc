//! Arclength-sampled planar and profile curves: resampling, Hausdorff
//! distance, and CSV serialization.

use super::SolutionsError;
use super::spline::CubicSpline;
use crate::scalar::Real;
use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write};

/// Whether the two columns are planar `(x, y)` or profile `(r, z)` data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurveKind {
    Planar,
    Profile,
}

/// A polyline sample of a curve. Closed curves do not repeat the first
/// point; the wrap segment is implicit.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledCurve<T> {
    pub points: Vec<[T; 2]>,
    pub closed: bool,
    pub kind: CurveKind,
    /// whether consecutive samples are (approximately) equally spaced in
    /// arclength
    pub arclength: bool,
}

impl<T: Real> SampledCurve<T> {
    pub fn new(points: Vec<[T; 2]>, closed: bool, kind: CurveKind) -> Self {
        SampledCurve {
            points,
            closed,
            kind,
            arclength: false,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Segment lengths; for closed curves the last entry is the wrap gap.
    pub fn segment_lengths(&self) -> Vec<T> {
        let n = self.points.len();
        let segs = if self.closed { n } else { n - 1 };
        (0..segs)
            .map(|i| {
                let p = self.points[i];
                let q = self.points[(i + 1) % n];
                ((q[0] - p[0]).powi(2) + (q[1] - p[1]).powi(2)).sqrt()
            })
            .collect()
    }

    pub fn total_length(&self) -> T {
        self.segment_lengths()
            .into_iter()
            .fold(T::zero(), |a, b| a + b)
    }

    /// Cumulative arclength parameter of each sample (starts at zero).
    pub fn params(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.points.len());
        let mut acc = T::zero();
        out.push(acc);
        let lens = self.segment_lengths();
        for len in lens.iter().take(self.points.len() - 1) {
            acc += *len;
            out.push(acc);
        }
        out
    }

    /// Spacing within 2x of the median, positive radii for profiles, and a
    /// consistent wrap gap for closed curves.
    pub fn validate(&self) -> Result<(), SolutionsError<T>> {
        if self.points.len() < 4 {
            return Err(SolutionsError::InvalidCurve {
                reason: "too few points",
            });
        }
        let mut lens = self.segment_lengths();
        if lens.iter().any(|&l| !(l > T::zero())) {
            return Err(SolutionsError::InvalidCurve {
                reason: "repeated consecutive points",
            });
        }
        lens.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = lens[lens.len() / 2];
        if lens[lens.len() - 1] > T::of(2.0) * median {
            return Err(SolutionsError::InvalidCurve {
                reason: "spacing exceeds 2x the median",
            });
        }
        if self.kind == CurveKind::Profile && self.points.iter().any(|p| !(p[0] > T::zero())) {
            return Err(SolutionsError::InvalidCurve {
                reason: "profile radius must stay positive",
            });
        }
        Ok(())
    }

    pub fn scaled(&self, c: T) -> Self {
        SampledCurve {
            points: self.points.iter().map(|p| [p[0] * c, p[1] * c]).collect(),
            ..self.clone()
        }
    }

    /// Uniform-arclength resample through a cubic spline (periodic for
    /// closed curves, natural for open ones).
    pub fn resample_spline(&self, n: usize) -> Self {
        assert!(n >= 4);
        let params = self.params();
        let total = self.total_length();
        let xs: Vec<T> = self.points.iter().map(|p| p[0]).collect();
        let ys: Vec<T> = self.points.iter().map(|p| p[1]).collect();
        let (sx, sy) = if self.closed {
            (
                CubicSpline::periodic(params.clone(), xs, total),
                CubicSpline::periodic(params, ys, total),
            )
        } else {
            (
                CubicSpline::natural(params.clone(), xs),
                CubicSpline::natural(params, ys),
            )
        };
        let denom = if self.closed { n } else { n - 1 };
        let points = (0..n)
            .map(|i| {
                let u = total * T::of(i as f64) / T::of(denom as f64);
                [sx.eval(u), sy.eval(u)]
            })
            .collect();
        SampledCurve {
            points,
            closed: self.closed,
            kind: self.kind,
            arclength: true,
        }
    }

    /// Regular `n`-gon sample of a circle (exact vertices).
    pub fn circle(radius: T, n: usize) -> Self {
        let points = (0..n)
            .map(|i| {
                let t = T::TAU() * T::of(i as f64) / T::of(n as f64);
                [radius * t.cos(), radius * t.sin()]
            })
            .collect();
        SampledCurve {
            points,
            closed: true,
            kind: CurveKind::Planar,
            arclength: true,
        }
    }

    /// Axis-aligned square of the given side, centered at the origin,
    /// sampled with `per_side` points per side.
    pub fn square(side: T, per_side: usize) -> Self {
        let h = side * T::of(0.5);
        let mut points = Vec::with_capacity(4 * per_side);
        let step = side / T::of(per_side as f64);
        for i in 0..per_side {
            let u = -h + step * T::of(i as f64);
            points.push([u, -h]);
        }
        for i in 0..per_side {
            let u = -h + step * T::of(i as f64);
            points.push([h, u]);
        }
        for i in 0..per_side {
            let u = h - step * T::of(i as f64);
            points.push([u, h]);
        }
        for i in 0..per_side {
            let u = h - step * T::of(i as f64);
            points.push([-h, u]);
        }
        SampledCurve {
            points,
            closed: true,
            kind: CurveKind::Planar,
            arclength: true,
        }
    }

    /// Largest distance of a sample from the origin.
    pub fn max_radius(&self) -> T {
        self.points
            .iter()
            .map(|p| (p[0] * p[0] + p[1] * p[1]).sqrt())
            .fold(T::zero(), T::max)
    }

    /// CSV with header `s,x,y` (planar) or `s,r,z` (profile). Closed curves
    /// repeat the first point on the last row so the format is
    /// self-describing.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        match self.kind {
            CurveKind::Planar => writeln!(w, "s,x,y")?,
            CurveKind::Profile => writeln!(w, "s,r,z")?,
        }
        let params = self.params();
        for (p, s) in self.points.iter().zip(&params) {
            writeln!(w, "{},{},{}", s, p[0], p[1])?;
        }
        if self.closed {
            let p = self.points[0];
            writeln!(w, "{},{},{}", self.total_length(), p[0], p[1])?;
        }
        Ok(())
    }

    /// Parse the CSV format written by [`SampledCurve::write_csv`]. A final
    /// row equal to the first marks a closed curve and is dropped.
    pub fn read_csv<R: BufRead>(r: R) -> Result<Self, SolutionsError<T>> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or(SolutionsError::InvalidCurve {
                reason: "empty curve file",
            })?
            .map_err(|_| SolutionsError::InvalidCurve {
                reason: "unreadable curve file",
            })?;
        let kind = match header.trim() {
            "s,x,y" => CurveKind::Planar,
            "s,r,z" => CurveKind::Profile,
            _ => {
                return Err(SolutionsError::InvalidCurve {
                    reason: "unknown CSV header",
                });
            }
        };
        let mut points: Vec<[T; 2]> = Vec::new();
        for line in lines {
            let line = line.map_err(|_| SolutionsError::InvalidCurve {
                reason: "unreadable curve file",
            })?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut cells = line.split(',');
            let _s = cells.next();
            let x: f64 = cells.next().and_then(|c| c.trim().parse().ok()).ok_or(
                SolutionsError::InvalidCurve {
                    reason: "bad CSV row",
                },
            )?;
            let y: f64 = cells.next().and_then(|c| c.trim().parse().ok()).ok_or(
                SolutionsError::InvalidCurve {
                    reason: "bad CSV row",
                },
            )?;
            points.push([T::of(x), T::of(y)]);
        }
        if points.len() < 2 {
            return Err(SolutionsError::InvalidCurve {
                reason: "too few points",
            });
        }
        let first = points[0];
        let last = points[points.len() - 1];
        let scale = points
            .iter()
            .map(|p| p[0].abs().max(p[1].abs()))
            .fold(T::one(), T::max);
        let closed =
            (first[0] - last[0]).abs() + (first[1] - last[1]).abs() <= T::of(1e-12) * scale;
        if closed {
            points.pop();
        }
        Ok(SampledCurve {
            points,
            closed,
            kind,
            arclength: false,
        })
    }
}

fn point_segment_distance<T: Real>(p: [T; 2], a: [T; 2], b: [T; 2]) -> T {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let ap = [p[0] - a[0], p[1] - a[1]];
    let len_sq = ab[0] * ab[0] + ab[1] * ab[1];
    let t = if len_sq > T::zero() {
        ((ap[0] * ab[0] + ap[1] * ab[1]) / len_sq)
            .max(T::zero())
            .min(T::one())
    } else {
        T::zero()
    };
    let d = [ap[0] - t * ab[0], ap[1] - t * ab[1]];
    (d[0] * d[0] + d[1] * d[1]).sqrt()
}

fn directed_hausdorff<T: Real>(a: &SampledCurve<T>, b: &SampledCurve<T>) -> T {
    let nb = b.points.len();
    let segs = if b.closed { nb } else { nb - 1 };
    a.points
        .iter()
        .map(|&p| {
            (0..segs)
                .map(|i| point_segment_distance(p, b.points[i], b.points[(i + 1) % nb]))
                .fold(T::infinity(), T::min)
        })
        .fold(T::zero(), T::max)
}

/// Symmetric Hausdorff distance between two polylines.
pub fn hausdorff_distance<T: Real>(a: &SampledCurve<T>, b: &SampledCurve<T>) -> T {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_has_expected_length() {
        let c = SampledCurve::circle(1.0_f64, 512);
        assert!((c.total_length() - std::f64::consts::TAU).abs() < 1e-3);
        c.validate().unwrap();
    }

    #[test]
    fn resample_preserves_the_circle() {
        let c = SampledCurve::circle(2.0_f64, 300);
        let r = c.resample_spline(511);
        for p in &r.points {
            let rad = (p[0] * p[0] + p[1] * p[1]).sqrt();
            assert!((rad - 2.0).abs() < 1e-7);
        }
    }

    #[test]
    fn hausdorff_of_concentric_circles_is_radius_gap() {
        let a = SampledCurve::circle(1.0_f64, 512);
        let b = SampledCurve::circle(1.25_f64, 512);
        let d = hausdorff_distance(&a, &b);
        assert!((d - 0.25).abs() < 1e-4, "d = {d}");
    }

    #[test]
    fn csv_round_trip() {
        let c = SampledCurve::circle(1.5_f64, 64);
        let mut buf = Vec::new();
        c.write_csv(&mut buf).unwrap();
        let back = SampledCurve::<f64>::read_csv(&buf[..]).unwrap();
        assert!(back.closed);
        assert_eq!(back.kind, CurveKind::Planar);
        assert_eq!(back.points.len(), 64);
        for (p, q) in c.points.iter().zip(&back.points) {
            assert!((p[0] - q[0]).abs() < 1e-12 && (p[1] - q[1]).abs() < 1e-12);
        }
    }

    #[test]
    fn validate_rejects_uneven_spacing() {
        let mut pts: Vec<[f64; 2]> = (0..32)
            .map(|i| {
                let t = i as f64 / 32.0 * std::f64::consts::TAU;
                [t.cos(), t.sin()]
            })
            .collect();
        pts.remove(5);
        pts.remove(5);
        pts.remove(5); // a 4x gap
        let c = SampledCurve::new(pts, true, CurveKind::Planar);
        assert!(c.validate().is_err());
    }

    #[test]
    fn profile_requires_positive_radius() {
        let pts: Vec<[f64; 2]> = vec![[1.0, 0.0], [0.5, 0.5], [-0.1, 1.0], [0.5, 1.5], [1.0, 2.0]];
        let c = SampledCurve::new(pts, false, CurveKind::Profile);
        assert!(c.validate().is_err());
    }
}
