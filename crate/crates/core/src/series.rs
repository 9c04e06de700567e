//! Raw time series and the segmentations every reduced representation is
//! built on.

use std::ops::{Deref, Range};

use serde::Serialize;

use crate::error::{invalid, Result};

/// An ordered, non-empty sequence of finite samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct TimeSeries(Vec<f64>);

impl TimeSeries {
    /// Validates that `values` is non-empty and contains only finite samples.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(invalid("time series must contain at least one sample"));
        }
        if let Some(j) = values.iter().position(|v| !v.is_finite()) {
            return Err(invalid(format!("sample {j} is not finite ({})", values[j])));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn into_values(self) -> Vec<f64> {
        self.0
    }

    pub fn mean(&self) -> f64 {
        self.0.iter().sum::<f64>() / self.0.len() as f64
    }
}

impl Deref for TimeSeries {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for TimeSeries {
    type Error = crate::Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Self::new(values)
    }
}

impl TryFrom<&[f64]> for TimeSeries {
    type Error = crate::Error;

    fn try_from(values: &[f64]) -> Result<Self> {
        Self::new(values.to_vec())
    }
}

/// A partition of `[0, n)` into `w` contiguous, non-empty segments.
///
/// Boundary `i` sits at `floor(i * n / w)`, so when `w` divides `n` every
/// segment has exactly `n / w` points and otherwise lengths differ by at
/// most one. Because the boundaries are a pure function of `(n, w)`, two
/// segmentations are equal exactly when their `n` and `w` agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segmentation {
    n: usize,
    boundaries: Vec<usize>,
}

impl Segmentation {
    pub fn new(n: usize, w: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("series length must be positive"));
        }
        if w == 0 || w > n {
            return Err(invalid(format!(
                "segment count must be in [1, {n}], got {w}"
            )));
        }
        let boundaries = (0..=w).map(|i| i * n / w).collect();
        Ok(Self { n, boundaries })
    }

    /// Source series length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of segments.
    pub fn w(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    pub fn segment(&self, i: usize) -> Range<usize> {
        self.boundaries[i]..self.boundaries[i + 1]
    }

    pub fn segment_len(&self, i: usize) -> usize {
        self.boundaries[i + 1] - self.boundaries[i]
    }

    pub fn segments(&self) -> impl ExactSizeIterator<Item = Range<usize>> + '_ {
        self.boundaries.windows(2).map(|b| b[0]..b[1])
    }

    /// Cheap compatibility check used by every distance.
    pub fn same_as(&self, other: &Segmentation) -> bool {
        self.n == other.n && self.w() == other.w()
    }
}

/// Builds the floor-boundary segmentation of `[0, n)` into `w` parts.
pub fn make_segmentation(n: usize, w: usize) -> Result<Segmentation> {
    Segmentation::new(n, w)
}

const ZERO_STD: f64 = 1e-12;

/// Rescales to zero mean and unit population standard deviation. Series whose
/// standard deviation is below `1e-12` map to all zeros.
pub fn z_normalize(ts: &TimeSeries) -> TimeSeries {
    let n = ts.len() as f64;
    let mean = ts.mean();
    let var = ts.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    let std = var.sqrt();
    if std < ZERO_STD {
        return TimeSeries(vec![0.0; ts.len()]);
    }
    TimeSeries(ts.iter().map(|v| (v - mean) / std).collect())
}
