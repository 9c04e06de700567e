use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::series::{z_normalize, TimeSeries};

/// Equal-length series with integer class labels.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    series: Vec<TimeSeries>,
    labels: Vec<i64>,
}

impl LabeledDataset {
    pub fn new(series: Vec<TimeSeries>, labels: Vec<i64>) -> Result<Self> {
        if series.is_empty() {
            return Err(invalid("dataset must contain at least one series"));
        }
        if series.len() != labels.len() {
            return Err(invalid(format!(
                "{} series but {} labels",
                series.len(),
                labels.len()
            )));
        }
        let n = series[0].len();
        if let Some(i) = series.iter().position(|s| s.len() != n) {
            return Err(invalid(format!(
                "series {i} has length {} but series 0 has length {n}",
                series[i].len()
            )));
        }
        Ok(Self { series, labels })
    }

    pub fn series(&self) -> &[TimeSeries] {
        &self.series
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.series.len()
    }

    pub fn is_empty(&self) -> bool {
        self.series.is_empty()
    }

    /// Length shared by every series.
    pub fn series_len(&self) -> usize {
        self.series[0].len()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = (&TimeSeries, i64)> {
        self.series.iter().zip(self.labels.iter().copied())
    }

    /// Number of series per label, in ascending label order.
    pub fn class_counts(&self) -> BTreeMap<i64, usize> {
        let mut counts = BTreeMap::new();
        for &l in &self.labels {
            *counts.entry(l).or_insert(0) += 1;
        }
        counts
    }

    pub fn z_normalized(&self) -> Self {
        Self {
            series: self.series.iter().map(z_normalize).collect(),
            labels: self.labels.clone(),
        }
    }
}

/// A named train/test split.
#[derive(Debug, Clone)]
pub struct DatasetPair {
    pub name: String,
    pub train: LabeledDataset,
    pub test: LabeledDataset,
}

impl DatasetPair {
    pub fn new(
        name: impl Into<String>,
        train: LabeledDataset,
        test: LabeledDataset,
    ) -> Result<Self> {
        if train.series_len() != test.series_len() {
            return Err(invalid(format!(
                "train series have length {} but test series have length {}",
                train.series_len(),
                test.series_len()
            )));
        }
        Ok(Self {
            name: name.into(),
            train,
            test,
        })
    }

    pub fn summary(&self) -> DatasetSummary {
        dataset_summary(self)
    }
}

/// One row of a dataset description table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DatasetSummary {
    pub name: String,
    pub classes: usize,
    pub train_size: usize,
    pub test_size: usize,
    pub length: usize,
}

pub fn dataset_summary(pair: &DatasetPair) -> DatasetSummary {
    let mut labels = pair.train.class_counts();
    labels.extend(pair.test.class_counts());
    DatasetSummary {
        name: pair.name.clone(),
        classes: labels.len(),
        train_size: pair.train.len(),
        test_size: pair.test.len(),
        length: pair.train.series_len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(v: &[f64]) -> TimeSeries {
        TimeSeries::try_from(v).unwrap()
    }

    #[test]
    fn rejects_ragged_and_empty() {
        assert!(LabeledDataset::new(vec![], vec![]).is_err());
        assert!(LabeledDataset::new(vec![ts(&[1.0]), ts(&[1.0, 2.0])], vec![0, 1]).is_err());
        assert!(LabeledDataset::new(vec![ts(&[1.0])], vec![0, 1]).is_err());
    }

    #[test]
    fn minimal_pair_summary() {
        let d = LabeledDataset::new(vec![ts(&[1.0, 2.0])], vec![3]).unwrap();
        let pair = DatasetPair::new("tiny", d.clone(), d).unwrap();
        assert_eq!(
            pair.summary(),
            DatasetSummary {
                name: "tiny".into(),
                classes: 1,
                train_size: 1,
                test_size: 1,
                length: 2
            }
        );
    }
}
