//! Image container, rotation resampling, sector masks, and the two
//! rotational symmetrizers.
//!
//! A symmetrizer projects an image toward n-fold rotational symmetry about a
//! configurable center, inside an inscribed disk:
//!
//! - rotate-and-average: pixel-wise mean of the image rotated by `2*pi*k/n`
//!   for `k = 0..n-1`;
//! - sector-stitch: one reference sector is kept and copied (rotated) into
//!   every other sector.
//!
//! Pixels outside the disk are zeroed by both symmetrizers; wheel-like
//! content is circular and the frame corners are not rotation-closed.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::math;
use crate::{Error, Result};

/// H x W x C raster of unit-interval intensities, row-major per channel.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageGrid {
    height: usize,
    width: usize,
    channels: usize,
    data: Vec<f64>,
}

impl ImageGrid {
    /// All-zero image.
    pub fn zeros(height: usize, width: usize, channels: usize) -> Self {
        ImageGrid {
            height,
            width,
            channels,
            data: vec![0.0; height * width * channels],
        }
    }

    /// Constant-intensity image.
    pub fn constant(height: usize, width: usize, channels: usize, value: f64) -> Self {
        ImageGrid {
            height,
            width,
            channels,
            data: vec![value; height * width * channels],
        }
    }

    /// Wraps raw planar data; validates length and the `[0, 1]` range.
    pub fn from_data(height: usize, width: usize, channels: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != height * width * channels {
            return Err(Error::DimensionMismatch {
                expected: format!("{} values", height * width * channels),
                found: format!("{}", data.len()),
            });
        }
        if data.iter().any(|v| !v.is_finite() || *v < 0.0 || *v > 1.0) {
            return Err(Error::InvalidParams(String::from(
                "intensities must be finite and in [0, 1]",
            )));
        }
        Ok(ImageGrid {
            height,
            width,
            channels,
            data,
        })
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn is_square(&self) -> bool {
        self.height == self.width
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    fn idx(&self, channel: usize, row: usize, col: usize) -> usize {
        (channel * self.height + row) * self.width + col
    }

    #[inline]
    pub fn get(&self, channel: usize, row: usize, col: usize) -> f64 {
        self.data[self.idx(channel, row, col)]
    }

    #[inline]
    pub fn set(&mut self, channel: usize, row: usize, col: usize, value: f64) {
        let i = self.idx(channel, row, col);
        self.data[i] = value;
    }

    /// Mean intensity over all pixels and channels.
    pub fn mean(&self) -> f64 {
        self.data.iter().sum::<f64>() / self.data.len() as f64
    }

    /// Mean absolute difference against another image of the same shape.
    pub fn mean_abs_diff(&self, other: &ImageGrid) -> Result<f64> {
        self.check_same_shape(other)?;
        let sum: f64 = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| math::abs(a - b))
            .sum();
        Ok(sum / self.data.len() as f64)
    }

    pub(crate) fn check_same_shape(&self, other: &ImageGrid) -> Result<()> {
        if (self.height, self.width, self.channels)
            != (other.height, other.width, other.channels)
        {
            return Err(Error::DimensionMismatch {
                expected: format!("{}x{}x{}", self.height, self.width, self.channels),
                found: format!("{}x{}x{}", other.height, other.width, other.channels),
            });
        }
        Ok(())
    }
}

/// Resampling rule for rotations.
///
/// Bilinear is the default; nearest exists so that 90/180 degree rotations
/// become exact index permutations usable as test oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Resampling {
    Bilinear,
    Nearest,
}

/// Geometry of an n-fold rotational symmetry: repeat count, rotation center
/// (row, col), and the disk the constraint acts on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SymmetrySpec {
    pub n_fold: u32,
    pub center: (f64, f64),
    pub disk_radius: f64,
    pub resampling: Resampling,
}

impl SymmetrySpec {
    /// Default geometry for a square image: center at the pixel-grid center
    /// `((size-1)/2, (size-1)/2)`, disk radius `size/2 - 1`.
    pub fn for_size(size: usize, n_fold: u32) -> Self {
        let c = (size as f64 - 1.0) / 2.0;
        SymmetrySpec {
            n_fold,
            center: (c, c),
            disk_radius: size as f64 / 2.0 - 1.0,
            resampling: Resampling::Bilinear,
        }
    }

    pub fn with_resampling(mut self, resampling: Resampling) -> Self {
        self.resampling = resampling;
        self
    }

    /// Checks the spec against image dimensions: `n_fold >= 2`, positive
    /// radius, and the disk contained in the pixel bounds.
    pub fn validate_for_dims(&self, height: usize, width: usize) -> Result<()> {
        if self.n_fold < 2 {
            return Err(Error::InvalidSpec(format!(
                "n_fold must be >= 2, got {}",
                self.n_fold
            )));
        }
        if !(self.disk_radius > 0.0) {
            return Err(Error::InvalidSpec(format!(
                "disk_radius must be > 0, got {}",
                self.disk_radius
            )));
        }
        let (cy, cx) = self.center;
        let r = self.disk_radius;
        if cy - r < 0.0
            || cx - r < 0.0
            || cy + r > height as f64 - 1.0
            || cx + r > width as f64 - 1.0
        {
            return Err(Error::InvalidSpec(format!(
                "disk (center ({cy}, {cx}), radius {r}) exceeds {height}x{width} bounds"
            )));
        }
        Ok(())
    }

    #[inline]
    fn in_disk(&self, dy: f64, dx: f64) -> bool {
        dy * dy + dx * dx <= self.disk_radius * self.disk_radius
    }

    /// Polar angle of a pixel offset, normalized to `[0, 2*pi)`.
    #[inline]
    fn angle_of(dy: f64, dx: f64) -> f64 {
        let theta = math::atan2(dy, dx);
        if theta < 0.0 {
            let t = theta + math::TAU;
            if t >= math::TAU {
                0.0
            } else {
                t
            }
        } else {
            theta
        }
    }

    /// Sector index of an angle under the half-open partition
    /// `[2*pi*k/n, 2*pi*(k+1)/n)`.
    fn sector_of(&self, theta: f64) -> u32 {
        let n = self.n_fold;
        for k in (0..n).rev() {
            if theta >= math::TAU * k as f64 / n as f64 {
                return k;
            }
        }
        0
    }
}

fn require_square(img: &ImageGrid) -> Result<()> {
    if !img.is_square() {
        return Err(Error::NonSquareImage {
            height: img.height(),
            width: img.width(),
        });
    }
    Ok(())
}

/// Samples one channel at a fractional source coordinate. Taps outside the
/// image bounds read as 0.
fn sample(img: &ImageGrid, channel: usize, y: f64, x: f64, resampling: Resampling) -> f64 {
    let h = img.height() as i64;
    let w = img.width() as i64;
    let tap = |r: i64, c: i64| -> f64 {
        if r < 0 || c < 0 || r >= h || c >= w {
            0.0
        } else {
            img.get(channel, r as usize, c as usize)
        }
    };
    match resampling {
        Resampling::Nearest => tap(math::round(y) as i64, math::round(x) as i64),
        Resampling::Bilinear => {
            let y0 = math::floor(y);
            let x0 = math::floor(x);
            let fy = y - y0;
            let fx = x - x0;
            let (r0, c0) = (y0 as i64, x0 as i64);
            tap(r0, c0) * (1.0 - fy) * (1.0 - fx)
                + tap(r0, c0 + 1) * (1.0 - fy) * fx
                + tap(r0 + 1, c0) * fy * (1.0 - fx)
                + tap(r0 + 1, c0 + 1) * fy * fx
        }
    }
}

/// Rotates image content by `angle` radians about `spec.center` using
/// inverse-mapping resampling. Source coordinates outside the disk of
/// `spec.disk_radius` read as 0, so everything outside the disk is zeroed.
pub fn rotate(img: &ImageGrid, angle: f64, spec: &SymmetrySpec) -> Result<ImageGrid> {
    require_square(img)?;
    spec.validate_for_dims(img.height(), img.width())?;
    let (cy, cx) = spec.center;
    let (sin_a, cos_a) = (math::sin(angle), math::cos(angle));
    let mut out = ImageGrid::zeros(img.height(), img.width(), img.channels());
    for row in 0..img.height() {
        for col in 0..img.width() {
            let dy = row as f64 - cy;
            let dx = col as f64 - cx;
            if !spec.in_disk(dy, dx) {
                continue;
            }
            // Content moves from angle theta to theta + angle, so the
            // destination reads the source rotated back by `angle`.
            let sx = cx + cos_a * dx + sin_a * dy;
            let sy = cy - sin_a * dx + cos_a * dy;
            if !spec.in_disk(sy - cy, sx - cx) {
                continue;
            }
            for channel in 0..img.channels() {
                let v = sample(img, channel, sy, sx, spec.resampling);
                out.set(channel, row, col, math::clamp01(v));
            }
        }
    }
    Ok(out)
}

/// Binary single-channel mask of radial sector `k`: pixels whose polar angle
/// lies in `[2*pi*k/n, 2*pi*(k+1)/n)` and whose radius is within the disk.
/// Masks for `k = 0..n-1` are pairwise disjoint and cover the disk exactly.
pub fn sector_mask(spec: &SymmetrySpec, k: u32, height: usize, width: usize) -> Result<ImageGrid> {
    if k >= spec.n_fold {
        return Err(Error::SectorOutOfRange {
            index: k,
            n_fold: spec.n_fold,
        });
    }
    spec.validate_for_dims(height, width)?;
    let (cy, cx) = spec.center;
    let n = spec.n_fold as f64;
    let lo = math::TAU * k as f64 / n;
    let hi = math::TAU * (k + 1) as f64 / n;
    let last = k + 1 == spec.n_fold;
    let mut out = ImageGrid::zeros(height, width, 1);
    for row in 0..height {
        for col in 0..width {
            let dy = row as f64 - cy;
            let dx = col as f64 - cx;
            if !spec.in_disk(dy, dx) {
                continue;
            }
            let theta = SymmetrySpec::angle_of(dy, dx);
            if theta >= lo && (last || theta < hi) {
                out.set(0, row, col, 1.0);
            }
        }
    }
    Ok(out)
}

/// Rotate-and-average symmetrizer: pixel-wise mean of the image rotated by
/// `2*pi*k/n` for `k = 0..n-1`. Pixels outside the disk are 0.
pub fn symmetrize_ra(img: &ImageGrid, spec: &SymmetrySpec) -> Result<ImageGrid> {
    require_square(img)?;
    spec.validate_for_dims(img.height(), img.width())?;
    let n = spec.n_fold;
    let mut acc = vec![0.0f64; img.data().len()];
    for k in 0..n {
        let angle = math::TAU * k as f64 / n as f64;
        let rotated = rotate(img, angle, spec)?;
        for (a, v) in acc.iter_mut().zip(rotated.data()) {
            *a += v;
        }
    }
    let inv = n as f64;
    let data: Vec<f64> = acc.into_iter().map(|v| math::clamp01(v / inv)).collect();
    Ok(ImageGrid {
        height: img.height(),
        width: img.width(),
        channels: img.channels(),
        data,
    })
}

/// Sector-stitch symmetrizer: sector `reference` is copied unchanged and
/// every other sector receives the reference sector rotated into place.
/// Pixels outside the disk are 0.
pub fn symmetrize_ss(img: &ImageGrid, spec: &SymmetrySpec, reference: u32) -> Result<ImageGrid> {
    require_square(img)?;
    spec.validate_for_dims(img.height(), img.width())?;
    if reference >= spec.n_fold {
        return Err(Error::SectorOutOfRange {
            index: reference,
            n_fold: spec.n_fold,
        });
    }
    let (cy, cx) = spec.center;
    let n = spec.n_fold;
    // Per-sector rotation taking the destination back into the reference
    // sector: sector k content comes from a rotation by 2*pi*(k - ref)/n.
    let trig: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let angle = math::TAU * (k as f64 - reference as f64) / n as f64;
            (math::sin(angle), math::cos(angle))
        })
        .collect();
    let mut out = ImageGrid::zeros(img.height(), img.width(), img.channels());
    for row in 0..img.height() {
        for col in 0..img.width() {
            let dy = row as f64 - cy;
            let dx = col as f64 - cx;
            if !spec.in_disk(dy, dx) {
                continue;
            }
            let theta = SymmetrySpec::angle_of(dy, dx);
            let k = spec.sector_of(theta);
            if k == reference {
                for channel in 0..img.channels() {
                    out.set(channel, row, col, img.get(channel, row, col));
                }
                continue;
            }
            let (sin_a, cos_a) = trig[k as usize];
            let sx = cx + cos_a * dx + sin_a * dy;
            let sy = cy - sin_a * dx + cos_a * dy;
            if !spec.in_disk(sy - cy, sx - cx) {
                continue;
            }
            for channel in 0..img.channels() {
                let v = sample(img, channel, sy, sx, spec.resampling);
                out.set(channel, row, col, math::clamp01(v));
            }
        }
    }
    Ok(out)
}

/// Zeroes everything outside the spec's disk.
pub fn zero_outside_disk(img: &ImageGrid, spec: &SymmetrySpec) -> ImageGrid {
    let (cy, cx) = spec.center;
    let mut out = img.clone();
    for row in 0..img.height() {
        for col in 0..img.width() {
            let dy = row as f64 - cy;
            let dx = col as f64 - cx;
            if !spec.in_disk(dy, dx) {
                for channel in 0..img.channels() {
                    out.set(channel, row, col, 0.0);
                }
            }
        }
    }
    out
}

/// Mean absolute difference between two images over the disk pixels only.
pub fn disk_mean_abs_diff(a: &ImageGrid, b: &ImageGrid, spec: &SymmetrySpec) -> Result<f64> {
    a.check_same_shape(b)?;
    let (cy, cx) = spec.center;
    let mut sum = 0.0;
    let mut count = 0usize;
    for row in 0..a.height() {
        for col in 0..a.width() {
            let dy = row as f64 - cy;
            let dx = col as f64 - cx;
            if !spec.in_disk(dy, dx) {
                continue;
            }
            for channel in 0..a.channels() {
                sum += math::abs(a.get(channel, row, col) - b.get(channel, row, col));
                count += 1;
            }
        }
    }
    if count == 0 {
        return Err(Error::InvalidSpec(String::from("disk contains no pixels")));
    }
    Ok(sum / count as f64)
}

/// Which projection an image is regularized with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetrizerKind {
    /// Rotate-and-average.
    Ra,
    /// Sector-stitch.
    Ss,
    /// Identity (no regularization).
    None,
}

/// A configured symmetrizing operator `R`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Symmetrizer {
    pub kind: SymmetrizerKind,
    pub spec: SymmetrySpec,
    pub ss_reference_sector: u32,
}

impl Symmetrizer {
    pub fn rotate_average(spec: SymmetrySpec) -> Self {
        Symmetrizer {
            kind: SymmetrizerKind::Ra,
            spec,
            ss_reference_sector: 0,
        }
    }

    pub fn sector_stitch(spec: SymmetrySpec, reference: u32) -> Self {
        Symmetrizer {
            kind: SymmetrizerKind::Ss,
            spec,
            ss_reference_sector: reference,
        }
    }

    pub fn identity(spec: SymmetrySpec) -> Self {
        Symmetrizer {
            kind: SymmetrizerKind::None,
            spec,
            ss_reference_sector: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.kind == SymmetrizerKind::Ss && self.ss_reference_sector >= self.spec.n_fold {
            return Err(Error::SectorOutOfRange {
                index: self.ss_reference_sector,
                n_fold: self.spec.n_fold,
            });
        }
        Ok(())
    }

    /// Applies the projection `R`. `None` returns the image unchanged.
    pub fn apply(&self, img: &ImageGrid) -> Result<ImageGrid> {
        match self.kind {
            SymmetrizerKind::Ra => symmetrize_ra(img, &self.spec),
            SymmetrizerKind::Ss => symmetrize_ss(img, &self.spec, self.ss_reference_sector),
            SymmetrizerKind::None => Ok(img.clone()),
        }
    }

    /// Disk masking consistent with the projection; identity for `None`.
    pub fn mask_to_disk(&self, img: &ImageGrid) -> ImageGrid {
        match self.kind {
            SymmetrizerKind::None => img.clone(),
            _ => zero_outside_disk(img, &self.spec),
        }
    }
}
