//! Reduced representations: segment means (PAA), means plus up/below-mean
//! deviations (numerical trend), and means plus a per-point trend bit string
//! (binary trend).

use serde::Serialize;

use crate::bits::BitString;
use crate::error::Result;
use crate::series::{Segmentation, TimeSeries};

/// Segment means of a series.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PaaRepr {
    pub seg: Segmentation,
    pub means: Vec<f64>,
}

/// Per-segment numerical trend summary.
///
/// Points at or above the segment mean form the up set, points strictly below
/// form the below set. `up_means[i]` is the mean of `value - mean` over the up
/// set and `below_means[i]` the mean of `mean - value` over the below set
/// (zero when the below set is empty).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NtRepr {
    pub seg: Segmentation,
    pub means: Vec<f64>,
    pub up_means: Vec<f64>,
    pub below_means: Vec<f64>,
    pub up_counts: Vec<usize>,
    pub below_counts: Vec<usize>,
}

/// The up/below statistics of one segment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NtSegmentStats {
    pub up_mean: f64,
    pub below_mean: f64,
    pub up_count: usize,
    pub below_count: usize,
}

impl NtSegmentStats {
    /// Computes the statistics of `values` about `mean`.
    pub fn of(values: &[f64], mean: f64) -> Self {
        let (mut up_sum, mut below_sum) = (0.0, 0.0);
        let (mut up_count, mut below_count) = (0, 0);
        for &v in values {
            if v >= mean {
                up_sum += v - mean;
                up_count += 1;
            } else {
                below_sum += mean - v;
                below_count += 1;
            }
        }
        Self {
            up_mean: if up_count > 0 {
                up_sum / up_count as f64
            } else {
                0.0
            },
            below_mean: if below_count > 0 {
                below_sum / below_count as f64
            } else {
                0.0
            },
            up_count,
            below_count,
        }
    }
}

impl NtRepr {
    pub fn segment(&self, i: usize) -> NtSegmentStats {
        NtSegmentStats {
            up_mean: self.up_means[i],
            below_mean: self.below_means[i],
            up_count: self.up_counts[i],
            below_count: self.below_counts[i],
        }
    }

    pub fn paa(&self) -> PaaRepr {
        PaaRepr {
            seg: self.seg.clone(),
            means: self.means.clone(),
        }
    }
}

/// Segment means plus one trend bit per raw point: 1 iff the point is at or
/// above its segment's mean.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BtRepr {
    pub seg: Segmentation,
    pub means: Vec<f64>,
    pub bits: BitString,
}

impl BtRepr {
    pub fn paa(&self) -> PaaRepr {
        PaaRepr {
            seg: self.seg.clone(),
            means: self.means.clone(),
        }
    }
}

fn segment_means(ts: &TimeSeries, seg: &Segmentation) -> Vec<f64> {
    seg.segments()
        .map(|r| {
            let len = r.len() as f64;
            ts[r].iter().sum::<f64>() / len
        })
        .collect()
}

pub fn paa_transform(ts: &TimeSeries, w: usize) -> Result<PaaRepr> {
    let seg = Segmentation::new(ts.len(), w)?;
    let means = segment_means(ts, &seg);
    Ok(PaaRepr { seg, means })
}

pub fn nt_transform(ts: &TimeSeries, w: usize) -> Result<NtRepr> {
    let seg = Segmentation::new(ts.len(), w)?;
    let means = segment_means(ts, &seg);
    let w = seg.w();
    let mut repr = NtRepr {
        up_means: Vec::with_capacity(w),
        below_means: Vec::with_capacity(w),
        up_counts: Vec::with_capacity(w),
        below_counts: Vec::with_capacity(w),
        means,
        seg,
    };
    for (i, r) in repr.seg.segments().enumerate() {
        let stats = NtSegmentStats::of(&ts[r], repr.means[i]);
        repr.up_means.push(stats.up_mean);
        repr.below_means.push(stats.below_mean);
        repr.up_counts.push(stats.up_count);
        repr.below_counts.push(stats.below_count);
    }
    Ok(repr)
}

pub fn bt_transform(ts: &TimeSeries, w: usize) -> Result<BtRepr> {
    let seg = Segmentation::new(ts.len(), w)?;
    let means = segment_means(ts, &seg);
    let bits = seg
        .segments()
        .zip(&means)
        .flat_map(|(r, &m)| ts[r].iter().map(move |&v| v >= m))
        .collect();
    Ok(BtRepr { seg, means, bits })
}

/// Expands segment means back into a step function of the original length.
pub fn paa_reconstruct(repr: &PaaRepr) -> TimeSeries {
    let mut out = Vec::with_capacity(repr.seg.n());
    for (r, &m) in repr.seg.segments().zip(&repr.means) {
        out.extend(std::iter::repeat_n(m, r.len()));
    }
    TimeSeries::new(out).expect("means of finite samples are finite")
}
