//! End-to-end evaluation: classification reports, leave-one-out selection
//! of the reduction ratio, and LOF anomaly-detection runs.

use std::ops::RangeInclusive;
use std::time::Instant;

use serde::Serialize;

use super::knn::{knn_predict, loo_predict};
use super::lof::lof_from_matrix;
use super::measure::{DistanceMatrix, Measure, MeasureConfig};
use super::metrics::{auc, ClassMetrics, Confusion};
use crate::dataset::LabeledDataset;
use crate::distance::NtCountPolicy;
use crate::error::{invalid, Result};

/// How F1 is aggregated across classes in every report.
pub const F1_AVERAGING: &str = "macro (unweighted mean of per-class F1)";

/// How anomaly runs are set up.
pub const ANOMALY_PROTOCOL: &str = "LOF scores computed on the test split only; \
     anomaly = minority test class (ties -> larger label); \
     labels used only for AUC; LOF k chosen from the given range by best test AUC";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub measure: Measure,
    pub chosen_s: Option<usize>,
    pub error_rate: Option<f64>,
    pub per_class: Vec<ClassMetrics>,
    pub macro_f1: Option<f64>,
    pub auc: Option<f64>,
    pub anomaly_label: Option<i64>,
    pub chosen_k: Option<usize>,
    pub wall_clock_secs: f64,
    pub notes: Vec<String>,
}

impl EvalReport {
    fn empty(cfg: &MeasureConfig) -> Self {
        Self {
            measure: cfg.measure,
            chosen_s: cfg.measure.uses_s().then_some(cfg.s),
            error_rate: None,
            per_class: Vec::new(),
            macro_f1: None,
            auc: None,
            anomaly_label: None,
            chosen_k: None,
            wall_clock_secs: 0.0,
            notes: Vec::new(),
        }
    }
}

/// Classifies every test series with k-NN over `train` and scores the
/// predictions.
pub fn evaluate_classification(
    train: &LabeledDataset,
    test: &LabeledDataset,
    cfg: &MeasureConfig,
    k: usize,
) -> Result<EvalReport> {
    let start = Instant::now();
    let pred = knn_predict(train, test, cfg, k)?;
    let confusion = Confusion::new(test.labels(), &pred)?;
    let mut report = EvalReport::empty(cfg);
    report.error_rate = Some(confusion.error_rate());
    report.per_class = confusion.per_class();
    report.macro_f1 = Some(confusion.macro_f1());
    report.notes.push(format!("f1 averaging: {F1_AVERAGING}"));
    report.wall_clock_secs = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Leave-one-out k-NN error on `train` for each `s` in `s_range`.
pub fn cv_errors(
    train: &LabeledDataset,
    measure: Measure,
    nt_policy: NtCountPolicy,
    k: usize,
    s_range: RangeInclusive<usize>,
) -> Result<Vec<(usize, f64)>> {
    let n = train.series_len();
    if s_range.is_empty() {
        return Err(invalid("s range is empty"));
    }
    if *s_range.start() < 1 || *s_range.end() > n {
        return Err(invalid(format!(
            "s range {}..={} must lie within [1, {n}]",
            s_range.start(),
            s_range.end()
        )));
    }
    if train.len() < 2 {
        return Err(invalid("leave-one-out needs at least two training series"));
    }
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    s_range
        .map(|s| {
            let cfg = MeasureConfig::new(measure, s)?.with_policy(nt_policy);
            let enc = cfg.encode_all(train.series())?;
            let m = DistanceMatrix::pairwise(&cfg, &enc)?;
            let pred = loo_predict(&m, train.labels(), k);
            Ok((s, Confusion::new(train.labels(), &pred)?.error_rate()))
        })
        .collect()
}

/// The `s` with the lowest leave-one-out error on `train`, preferring the
/// smaller `s` on ties. ED ignores `s`, so it returns the range start.
pub fn select_s_by_cv(
    train: &LabeledDataset,
    measure: Measure,
    nt_policy: NtCountPolicy,
    k: usize,
    s_range: RangeInclusive<usize>,
) -> Result<usize> {
    let range = if measure.uses_s() {
        s_range
    } else {
        *s_range.start()..=*s_range.start()
    };
    let errors = cv_errors(train, measure, nt_policy, k, range)?;
    let mut best = errors[0];
    for &(s, e) in &errors[1..] {
        if e < best.1 {
            best = (s, e);
        }
    }
    Ok(best.0)
}

/// Selects `s` on the training split, then evaluates on the test split.
pub fn classify_with_cv(
    train: &LabeledDataset,
    test: &LabeledDataset,
    measure: Measure,
    nt_policy: NtCountPolicy,
    k: usize,
    s_range: RangeInclusive<usize>,
) -> Result<EvalReport> {
    let start = Instant::now();
    let s = select_s_by_cv(train, measure, nt_policy, k, s_range)?;
    let cfg = MeasureConfig::new(measure, s)?.with_policy(nt_policy);
    let mut report = evaluate_classification(train, test, &cfg, k)?;
    report
        .notes
        .push("s chosen by leave-one-out k-NN error on the training split".into());
    report.wall_clock_secs = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Label treated as anomalous: the rarer class, the larger label on a tie.
pub fn anomaly_label(ds: &LabeledDataset) -> Result<i64> {
    let counts = ds.class_counts();
    if counts.len() != 2 {
        return Err(invalid(format!(
            "anomaly detection needs exactly 2 classes, found {}",
            counts.len()
        )));
    }
    let mut it = counts.into_iter();
    let (small, small_n) = it.next().unwrap();
    let (large, large_n) = it.next().unwrap();
    Ok(if small_n < large_n { small } else { large })
}

/// Runs LOF on the test split under `cfg` for each neighbour count in
/// `k_range` and reports the best AUC. The training split only has to be
/// length-compatible; it is never used as reference context.
pub fn evaluate_anomaly(
    train: &LabeledDataset,
    test: &LabeledDataset,
    cfg: &MeasureConfig,
    k_range: RangeInclusive<usize>,
) -> Result<EvalReport> {
    let start = Instant::now();
    if train.series_len() != test.series_len() {
        return Err(invalid(format!(
            "train length {} does not match test length {}",
            train.series_len(),
            test.series_len()
        )));
    }
    let target = anomaly_label(test)?;
    let is_anomaly: Vec<bool> = test.labels().iter().map(|&l| l == target).collect();

    let lo = (*k_range.start()).max(1);
    let hi = (*k_range.end()).min(test.len() - 1);
    if lo > hi {
        return Err(invalid(format!(
            "no LOF neighbour count in {}..={} fits {} test series",
            k_range.start(),
            k_range.end(),
            test.len()
        )));
    }

    let enc = cfg.encode_all(test.series())?;
    let m = DistanceMatrix::pairwise(cfg, &enc)?;
    let mut best: Option<(usize, f64)> = None;
    for k in lo..=hi {
        let scores = lof_from_matrix(&m, k)?;
        let a = auc(&scores, &is_anomaly)?;
        if best.is_none_or(|(_, b)| a > b) {
            best = Some((k, a));
        }
    }
    let (k, a) = best.expect("non-empty k range");

    let mut report = EvalReport::empty(cfg);
    report.auc = Some(a);
    report.chosen_k = Some(k);
    report.anomaly_label = Some(target);
    report.notes.push(format!("protocol: {ANOMALY_PROTOCOL}"));
    report.wall_clock_secs = start.elapsed().as_secs_f64();
    Ok(report)
}
