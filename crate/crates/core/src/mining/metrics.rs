//! Classification and ranking metrics.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassMetrics {
    pub label: i64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub support: usize,
}

/// Confusion counts keyed by `(true label, predicted label)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Confusion {
    labels: Vec<i64>,
    counts: BTreeMap<(i64, i64), usize>,
    total: usize,
}

impl Confusion {
    pub fn new(truth: &[i64], predicted: &[i64]) -> Result<Self> {
        if truth.len() != predicted.len() {
            return Err(invalid(format!(
                "{} true labels but {} predictions",
                truth.len(),
                predicted.len()
            )));
        }
        if truth.is_empty() {
            return Err(invalid("no predictions to score"));
        }
        let mut counts = BTreeMap::new();
        for (&t, &p) in truth.iter().zip(predicted) {
            *counts.entry((t, p)).or_insert(0) += 1;
        }
        let mut labels: Vec<i64> = truth.iter().chain(predicted).copied().collect();
        labels.sort_unstable();
        labels.dedup();
        Ok(Self {
            labels,
            counts,
            total: truth.len(),
        })
    }

    pub fn count(&self, truth: i64, predicted: i64) -> usize {
        self.counts.get(&(truth, predicted)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn correct(&self) -> usize {
        self.labels.iter().map(|&l| self.count(l, l)).sum()
    }

    pub fn errors(&self) -> usize {
        self.total - self.correct()
    }

    pub fn error_rate(&self) -> f64 {
        self.errors() as f64 / self.total as f64
    }

    /// Per-class precision, recall and F1 over every label that occurs as a
    /// truth or a prediction. Empty ratios (0/0) count as 0.
    pub fn per_class(&self) -> Vec<ClassMetrics> {
        self.labels
            .iter()
            .map(|&l| {
                let tp = self.count(l, l) as f64;
                let predicted: usize = self.labels.iter().map(|&t| self.count(t, l)).sum();
                let support: usize = self.labels.iter().map(|&p| self.count(l, p)).sum();
                let precision = ratio(tp, predicted as f64);
                let recall = ratio(tp, support as f64);
                ClassMetrics {
                    label: l,
                    precision,
                    recall,
                    f1: f1_score(precision, recall),
                    support,
                }
            })
            .collect()
    }

    /// Unweighted mean of per-class F1.
    pub fn macro_f1(&self) -> f64 {
        let per = self.per_class();
        per.iter().map(|c| c.f1).sum::<f64>() / per.len() as f64
    }
}

fn ratio(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// Harmonic mean of precision and recall; 0 when both are 0.
pub fn f1_score(precision: f64, recall: f64) -> f64 {
    ratio(2.0 * precision * recall, precision + recall)
}

/// Area under the ROC curve via the Mann-Whitney rank statistic, with tied
/// scores sharing their average rank. `is_anomaly[i]` marks the positives;
/// higher scores are more anomalous.
pub fn auc(scores: &[f64], is_anomaly: &[bool]) -> Result<f64> {
    if scores.len() != is_anomaly.len() {
        return Err(invalid(format!(
            "{} scores but {} labels",
            scores.len(),
            is_anomaly.len()
        )));
    }
    if let Some(s) = scores.iter().find(|s| s.is_nan()) {
        return Err(invalid(format!("score {s} is not a number")));
    }
    let pos = is_anomaly.iter().filter(|&&a| a).count();
    let neg = is_anomaly.len() - pos;
    if pos == 0 || neg == 0 {
        return Err(invalid("AUC needs both normal and anomalous examples"));
    }

    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_unstable_by(|&a, &b| scores[a].total_cmp(&scores[b]));
    let mut pos_rank_sum = 0.0;
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && scores[order[j]] == scores[order[i]] {
            j += 1;
        }
        // ranks i+1 ..= j share their mean
        let avg = (i + 1 + j) as f64 / 2.0;
        let tied_pos = order[i..j].iter().filter(|&&t| is_anomaly[t]).count();
        pos_rank_sum += avg * tied_pos as f64;
        i = j;
    }
    let u = pos_rank_sum - (pos * (pos + 1)) as f64 / 2.0;
    Ok(u / (pos as f64 * neg as f64))
}
