//! Piecewise aggregate approximation (PAA) of time series, extended with two
//! trend-aware variants:
//!
//! * **NT_PAA** keeps, per segment, the mean deviation of the points at or
//!   above the segment mean and of the points below it, and adds the
//!   difference of those deviations to the PAA distance under one radical.
//! * **BT_PAA** keeps one bit per point (1 iff the point is at or above its
//!   segment mean) and adds `sqrt((w / n) * hamming)` to the PAA distance.
//!
//! On top of the representations the crate provides Euclidean, cosine and
//! tightness diagnostics, k-NN classification with leave-one-out selection
//! of the reduction ratio `s = n / w`, LOF anomaly scoring with rank-based
//! AUC, UCR-format I/O and the experiment tables behind the `trendpaa` CLI.
//!
//! ```
//! use trendpaa::{bit_dist, bt_transform, euclidean, nt_distance, nt_transform, NtCountPolicy, TimeSeries};
//!
//! let q = TimeSeries::new(vec![0.0, 2.0]).unwrap();
//! let c = TimeSeries::new(vec![2.0, 0.0]).unwrap();
//! // Same mean and same deviation magnitudes: NT cannot tell them apart...
//! let nt = nt_distance(&nt_transform(&q, 1).unwrap(), &nt_transform(&c, 1).unwrap(), NtCountPolicy::Min).unwrap();
//! assert_eq!(nt, 0.0);
//! // ...but the trend bits differ ("01" vs "10").
//! let bit = bit_dist(&bt_transform(&q, 1).unwrap(), &bt_transform(&c, 1).unwrap()).unwrap();
//! assert_eq!(bit, 1.0);
//! assert!(bit <= euclidean(&q, &c).unwrap());
//! ```

pub mod bits;
pub mod dataset;
pub mod distance;
pub mod error;
pub mod harness;
pub mod mining;
pub mod repr;
pub mod series;
pub mod synthetic;
pub mod ucr;

pub use bits::BitString;
pub use dataset::{dataset_summary, DatasetPair, DatasetSummary, LabeledDataset};
pub use distance::{
    bit_dist, bt_distance, cosine_distance, euclidean, nt_distance, nt_segment_distance,
    paa_distance, tightness, NtCountPolicy,
};
pub use error::{Error, Result};
pub use mining::{EvalReport, Measure, MeasureConfig};
pub use repr::{
    bt_transform, nt_transform, paa_reconstruct, paa_transform, BtRepr, NtRepr, NtSegmentStats,
    PaaRepr,
};
pub use series::{make_segmentation, z_normalize, Segmentation, TimeSeries};
