//! Similarity measures over raw series and reduced representations.
//!
//! Segment-weighted measures use the actual length of each segment as its
//! weight, which equals the constant `n / w` whenever `w` divides `n`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::repr::{BtRepr, NtRepr, NtSegmentStats, PaaRepr};
use crate::series::{Segmentation, TimeSeries};

/// Which series' up/below counts weight the per-segment trend term when the
/// two series split a segment differently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum NtCountPolicy {
    /// Counts of the first (query) argument.
    Query,
    /// Counts of the second (reference) argument.
    Reference,
    /// Element-wise minimum; symmetric.
    #[default]
    Min,
    /// Element-wise maximum; symmetric.
    Max,
}

impl NtCountPolicy {
    /// Returns the `(up, below)` weights for a pair of segments.
    pub fn select(self, q: &NtSegmentStats, c: &NtSegmentStats) -> (usize, usize) {
        self.pick(q.up_count, q.below_count, c.up_count, c.below_count)
    }

    #[inline]
    fn pick(self, qu: usize, qb: usize, cu: usize, cb: usize) -> (usize, usize) {
        match self {
            Self::Query => (qu, qb),
            Self::Reference => (cu, cb),
            Self::Min => (qu.min(cu), qb.min(cb)),
            Self::Max => (qu.max(cu), qb.max(cb)),
        }
    }
}

fn check_lengths(q: &[f64], p: &[f64]) -> Result<()> {
    if q.len() != p.len() {
        return Err(invalid(format!(
            "series lengths differ: {} vs {}",
            q.len(),
            p.len()
        )));
    }
    Ok(())
}

fn check_segmentation(a: &Segmentation, b: &Segmentation) -> Result<()> {
    if !a.same_as(b) {
        return Err(invalid(format!(
            "segmentations differ: n={} w={} vs n={} w={}",
            a.n(),
            a.w(),
            b.n(),
            b.w()
        )));
    }
    Ok(())
}

pub fn euclidean(q: &TimeSeries, p: &TimeSeries) -> Result<f64> {
    check_lengths(q, p)?;
    Ok(squared_euclidean(q, p).sqrt())
}

pub(crate) fn squared_euclidean(q: &[f64], p: &[f64]) -> f64 {
    q.iter().zip(p).map(|(a, b)| (a - b) * (a - b)).sum()
}

/// Length-weighted sum of squared mean differences, the quantity under the
/// PAA radical.
#[inline]
fn weighted_mean_gap(seg: &Segmentation, q: &[f64], p: &[f64]) -> f64 {
    let b = seg.boundaries();
    let mut acc = 0.0;
    for i in 0..q.len() {
        let d = q[i] - p[i];
        acc += (b[i + 1] - b[i]) as f64 * d * d;
    }
    acc
}

pub fn paa_distance(q: &PaaRepr, p: &PaaRepr) -> Result<f64> {
    check_segmentation(&q.seg, &p.seg)?;
    Ok(weighted_mean_gap(&q.seg, &q.means, &p.means).sqrt())
}

/// Trend distance between two segments' up/below statistics.
pub fn nt_segment_distance(q: &NtSegmentStats, c: &NtSegmentStats, policy: NtCountPolicy) -> f64 {
    let (u, b) = policy.select(q, c);
    let du = q.up_mean - c.up_mean;
    let db = q.below_mean - c.below_mean;
    (u as f64 * du * du + b as f64 * db * db).sqrt()
}

/// PAA distance with the per-segment trend terms added under the same
/// radical.
pub fn nt_distance(q: &NtRepr, c: &NtRepr, policy: NtCountPolicy) -> Result<f64> {
    check_segmentation(&q.seg, &c.seg)?;
    let bounds = q.seg.boundaries();
    let mut acc = 0.0;
    for i in 0..q.means.len() {
        let d = q.means[i] - c.means[i];
        let (u, b) = policy.pick(
            q.up_counts[i],
            q.below_counts[i],
            c.up_counts[i],
            c.below_counts[i],
        );
        let du = q.up_means[i] - c.up_means[i];
        let db = q.below_means[i] - c.below_means[i];
        acc += (bounds[i + 1] - bounds[i]) as f64 * d * d + u as f64 * du * du + b as f64 * db * db;
    }
    Ok(acc.sqrt())
}

/// `sqrt((w / n) * popcount(B_q XOR B_p))`.
pub fn bt_distance(q: &BtRepr, p: &BtRepr) -> Result<f64> {
    check_segmentation(&q.seg, &p.seg)?;
    Ok(bt_term(q, p))
}

#[inline]
fn bt_term(q: &BtRepr, p: &BtRepr) -> f64 {
    let scale = q.seg.w() as f64 / q.seg.n() as f64;
    (scale * q.bits.hamming(&p.bits) as f64).sqrt()
}

/// PAA distance plus the binary trend distance, each under its own radical.
pub fn bit_dist(q: &BtRepr, p: &BtRepr) -> Result<f64> {
    check_segmentation(&q.seg, &p.seg)?;
    Ok(weighted_mean_gap(&q.seg, &q.means, &p.means).sqrt() + bt_term(q, p))
}

/// One minus the cosine similarity of the two mean vectors.
pub fn cosine_distance(q: &PaaRepr, p: &PaaRepr) -> Result<f64> {
    check_segmentation(&q.seg, &p.seg)?;
    let (mut dot, mut qq, mut pp) = (0.0, 0.0, 0.0);
    for (a, b) in q.means.iter().zip(&p.means) {
        dot += a * b;
        qq += a * a;
        pp += b * b;
    }
    if qq == 0.0 || pp == 0.0 {
        return Err(Error::DegenerateInput(
            "cosine distance is undefined for an all-zero representation".into(),
        ));
    }
    let sim = (dot / (qq.sqrt() * pp.sqrt())).clamp(-1.0, 1.0);
    Ok(1.0 - sim)
}

/// Ratio of an approximate distance to the Euclidean distance.
pub fn tightness(approx_dist: f64, ed: f64) -> Result<f64> {
    if ed.is_nan() || ed <= 0.0 {
        return Err(Error::DegenerateInput(format!(
            "tightness needs a positive Euclidean distance, got {ed}"
        )));
    }
    Ok(approx_dist / ed)
}
