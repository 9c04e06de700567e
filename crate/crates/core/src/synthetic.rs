//! Seeded synthetic data: Gaussian random walks and the classic
//! cylinder-bell-funnel classification problem.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::dataset::LabeledDataset;
use crate::series::TimeSeries;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One Gaussian random walk: cumulative sums of standard normal steps.
pub fn gaussian_walk<R: Rng + ?Sized>(rng: &mut R, len: usize) -> TimeSeries {
    let mut acc = 0.0;
    let values = (0..len)
        .map(|_| {
            let step: f64 = StandardNormal.sample(rng);
            acc += step;
            acc
        })
        .collect();
    TimeSeries::new(values).expect("random walk of positive length")
}

pub fn gaussian_walks(count: usize, len: usize, seed: u64) -> Vec<TimeSeries> {
    let mut rng = rng(seed);
    (0..count).map(|_| gaussian_walk(&mut rng, len)).collect()
}

/// Cylinder-bell-funnel shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CbfShape {
    Cylinder = 1,
    Bell = 2,
    Funnel = 3,
}

/// One noisy cylinder, bell or funnel of length `len` (at least 8). The
/// plateau starts in `[len/8, len/4)` and spans `[len/4, 3*len/4)` points.
pub fn cbf_series<R: Rng + ?Sized>(rng: &mut R, shape: CbfShape, len: usize) -> TimeSeries {
    assert!(len >= 8, "cylinder-bell-funnel needs at least 8 points");
    let a = rng.random_range(len / 8..len / 4);
    let span = rng.random_range(len / 4..3 * len / 4);
    let b = (a + span).min(len - 1);
    let jitter: f64 = StandardNormal.sample(rng);
    let height = 6.0 + jitter;
    let values = (0..len)
        .map(|t| {
            let noise: f64 = StandardNormal.sample(rng);
            let inside = (a..=b).contains(&t);
            let frac = (t as f64 - a as f64) / (b - a) as f64;
            let signal = match (inside, shape) {
                (false, _) => 0.0,
                (true, CbfShape::Cylinder) => height,
                (true, CbfShape::Bell) => height * frac,
                (true, CbfShape::Funnel) => height * (1.0 - frac),
            };
            signal + noise
        })
        .collect();
    TimeSeries::new(values).expect("finite synthetic samples")
}

/// A labeled dataset with `per_class` series of each listed shape, labels
/// 1, 2, 3 for cylinder, bell, funnel.
pub fn cbf_dataset(shapes: &[CbfShape], per_class: usize, len: usize, seed: u64) -> LabeledDataset {
    let mut rng = rng(seed);
    let mut series = Vec::new();
    let mut labels = Vec::new();
    for _ in 0..per_class {
        for &shape in shapes {
            series.push(cbf_series(&mut rng, shape, len));
            labels.push(shape as i64);
        }
    }
    LabeledDataset::new(series, labels).expect("non-empty equal-length dataset")
}

/// Two-class anomaly set: `normal` bells plus `anomalies` funnels, labels 0
/// (normal) and 1 (anomaly).
pub fn shape_anomaly_dataset(
    normal: usize,
    anomalies: usize,
    len: usize,
    seed: u64,
) -> LabeledDataset {
    let mut rng = rng(seed);
    let mut labels: Vec<i64> = std::iter::repeat_n(0, normal)
        .chain(std::iter::repeat_n(1, anomalies))
        .collect();
    labels.shuffle(&mut rng);
    let series = labels
        .iter()
        .map(|&l| {
            let shape = if l == 1 {
                CbfShape::Funnel
            } else {
                CbfShape::Bell
            };
            cbf_series(&mut rng, shape, len)
        })
        .collect();
    LabeledDataset::new(series, labels).expect("non-empty equal-length dataset")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walks_are_seeded() {
        assert_eq!(gaussian_walks(3, 10, 7), gaussian_walks(3, 10, 7));
        assert_ne!(gaussian_walks(3, 10, 7), gaussian_walks(3, 10, 8));
    }

    #[test]
    fn cbf_labels_and_shapes() {
        let ds = cbf_dataset(
            &[CbfShape::Cylinder, CbfShape::Bell, CbfShape::Funnel],
            4,
            64,
            1,
        );
        assert_eq!(ds.len(), 12);
        assert_eq!(ds.class_counts().len(), 3);
        assert_eq!(ds.series_len(), 64);
    }

    #[test]
    fn anomaly_set_has_requested_split() {
        let ds = shape_anomaly_dataset(40, 8, 64, 3);
        let counts = ds.class_counts();
        assert_eq!(counts[&0], 40);
        assert_eq!(counts[&1], 8);
    }
}
