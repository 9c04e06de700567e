//! The experiment tables behind each CLI command, usable without any I/O.

use std::ops::RangeInclusive;
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::dataset::{DatasetPair, LabeledDataset};
use crate::distance::{euclidean, nt_distance, paa_distance, NtCountPolicy};
use crate::error::{invalid, Result};
use crate::mining::{classify_with_cv, evaluate_anomaly, Measure, MeasureConfig};
use crate::repr::{nt_transform, paa_reconstruct, paa_transform};
use crate::series::TimeSeries;

fn na_if_none<S: Serializer>(v: &Option<usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_u64(*v as u64),
        None => s.serialize_str("NA"),
    }
}

/// One row per measure: the dataset, chosen `s`, test error and macro-F1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyRow {
    pub dataset: String,
    pub measure: Measure,
    #[serde(serialize_with = "na_if_none")]
    pub s: Option<usize>,
    pub error: f64,
    pub f1: f64,
}

/// Runs k-NN for each measure with `s` selected by leave-one-out on the
/// training split. `s_range` is clipped to the series length.
pub fn classify_table(
    pair: &DatasetPair,
    measures: &[Measure],
    k: usize,
    s_range: RangeInclusive<usize>,
    policy: NtCountPolicy,
) -> Result<Vec<ClassifyRow>> {
    let s_range = clip_s_range(s_range, pair.train.series_len())?;
    measures
        .iter()
        .map(|&m| {
            let r = classify_with_cv(&pair.train, &pair.test, m, policy, k, s_range.clone())?;
            Ok(ClassifyRow {
                dataset: pair.name.clone(),
                measure: m,
                s: r.chosen_s,
                error: r
                    .error_rate
                    .expect("classification report has an error rate"),
                f1: r.macro_f1.expect("classification report has macro-F1"),
            })
        })
        .collect()
}

/// One row per measure: best AUC over the `(s, k)` grid and where it was hit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DetectRow {
    pub dataset: String,
    pub measure: Measure,
    #[serde(serialize_with = "na_if_none")]
    pub s: Option<usize>,
    pub auc: f64,
    pub k: usize,
    pub anomaly_label: i64,
}

/// LOF anomaly detection on the test split for each measure, keeping the
/// best AUC over every `s` in `s_range` (smaller `s` wins ties) and every
/// LOF neighbour count in `k_range`.
pub fn detect_table(
    pair: &DatasetPair,
    measures: &[Measure],
    s_range: RangeInclusive<usize>,
    k_range: RangeInclusive<usize>,
    policy: NtCountPolicy,
) -> Result<Vec<DetectRow>> {
    let s_range = clip_s_range(s_range, pair.test.series_len())?;
    measures
        .iter()
        .map(|&m| {
            let candidates = if m.uses_s() {
                s_range.clone()
            } else {
                *s_range.start()..=*s_range.start()
            };
            let mut best: Option<DetectRow> = None;
            for s in candidates {
                let cfg = MeasureConfig::new(m, s)?.with_policy(policy);
                let r = evaluate_anomaly(&pair.train, &pair.test, &cfg, k_range.clone())?;
                let auc = r.auc.expect("anomaly report has an AUC");
                if best.as_ref().is_none_or(|b| auc > b.auc) {
                    best = Some(DetectRow {
                        dataset: pair.name.clone(),
                        measure: m,
                        s: r.chosen_s,
                        auc,
                        k: r.chosen_k.expect("anomaly report has a k"),
                        anomaly_label: r.anomaly_label.expect("anomaly report has a label"),
                    });
                }
            }
            Ok(best.expect("non-empty s range"))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessRow {
    pub s: usize,
    pub w: usize,
    pub paa: f64,
    pub nt_paa: f64,
    pub pairs: usize,
}

/// Mean tightness (approximate distance over Euclidean distance) of PAA
/// and NT_PAA over all pairs of `series` with non-zero Euclidean distance.
pub fn tightness_table(
    series: &[TimeSeries],
    s_range: RangeInclusive<usize>,
    policy: NtCountPolicy,
) -> Result<Vec<TightnessRow>> {
    if series.len() < 2 {
        return Err(invalid("tightness needs at least two series"));
    }
    let n = series[0].len();
    let s_range = clip_s_range(s_range, n)?;
    let mut pairs = Vec::new();
    for i in 0..series.len() {
        for j in i + 1..series.len() {
            let ed = euclidean(&series[i], &series[j])?;
            if ed > 0.0 {
                pairs.push((i, j, ed));
            }
        }
    }
    if pairs.is_empty() {
        return Err(invalid("every pair of series is identical"));
    }
    s_range
        .map(|s| {
            let w = (n / s).max(1);
            let nts = series
                .iter()
                .map(|x| nt_transform(x, w))
                .collect::<Result<Vec<_>>>()?;
            let paas: Vec<_> = nts.iter().map(|r| r.paa()).collect();
            let (mut paa_sum, mut nt_sum) = (0.0, 0.0);
            for &(i, j, ed) in &pairs {
                paa_sum += paa_distance(&paas[i], &paas[j])? / ed;
                nt_sum += nt_distance(&nts[i], &nts[j], policy)? / ed;
            }
            let count = pairs.len() as f64;
            Ok(TightnessRow {
                s,
                w,
                paa: paa_sum / count,
                nt_paa: nt_sum / count,
                pairs: pairs.len(),
            })
        })
        .collect()
}

/// Raw series plus its PAA step reconstruction at each `w`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReconstructTable {
    pub widths: Vec<usize>,
    pub raw: TimeSeries,
    pub columns: Vec<TimeSeries>,
}

impl ReconstructTable {
    pub fn header(&self) -> Vec<String> {
        ["index".to_string(), "raw".to_string()]
            .into_iter()
            .chain(self.widths.iter().map(|w| format!("paa_w{w}")))
            .collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = Vec<f64>> + '_ {
        (0..self.raw.len()).map(move |j| {
            std::iter::once(j as f64)
                .chain(std::iter::once(self.raw[j]))
                .chain(self.columns.iter().map(move |c| c[j]))
                .collect()
        })
    }
}

pub fn reconstruct_table(ts: &TimeSeries, widths: &[usize]) -> Result<ReconstructTable> {
    if widths.is_empty() {
        return Err(invalid("at least one segment count is required"));
    }
    let columns = widths
        .iter()
        .map(|&w| Ok(paa_reconstruct(&paa_transform(ts, w)?)))
        .collect::<Result<_>>()?;
    Ok(ReconstructTable {
        widths: widths.to_vec(),
        raw: ts.clone(),
        columns,
    })
}

/// Measures timed by the benchmark, in report order.
pub const BENCH_MEASURES: [Measure; 3] = [Measure::Paa, Measure::BtPaa, Measure::NtPaa];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub dataset: String,
    pub measure: Measure,
    pub s: usize,
    pub median_secs: f64,
    pub repeats: usize,
}

/// Median wall-clock seconds of a full LOF anomaly-detection run (encode,
/// distance matrix, LOF for every k, AUC) per dataset, measure and `s`.
/// Measures are interleaved within each repeat so drift hits them evenly.
/// Runs on the calling thread's rayon pool.
pub fn bench_table(
    datasets: &[(String, LabeledDataset)],
    s_range: RangeInclusive<usize>,
    k_range: RangeInclusive<usize>,
    repeats: usize,
) -> Result<Vec<BenchRow>> {
    if s_range.is_empty() {
        return Err(invalid("s range is empty"));
    }
    if repeats == 0 {
        return Err(invalid("repeats must be at least 1"));
    }
    let mut rows = Vec::new();
    for (name, ds) in datasets {
        let s_range = clip_s_range(s_range.clone(), ds.series_len())?;
        for s in s_range {
            let mut times = vec![Vec::with_capacity(repeats); BENCH_MEASURES.len()];
            for rep in 0..repeats {
                for off in 0..BENCH_MEASURES.len() {
                    let idx = (rep + off) % BENCH_MEASURES.len();
                    let cfg = MeasureConfig::new(BENCH_MEASURES[idx], s)?;
                    let start = Instant::now();
                    std::hint::black_box(evaluate_anomaly(ds, ds, &cfg, k_range.clone())?);
                    times[idx].push(start.elapsed().as_secs_f64());
                }
            }
            for (idx, mut t) in times.into_iter().enumerate() {
                rows.push(BenchRow {
                    dataset: name.clone(),
                    measure: BENCH_MEASURES[idx],
                    s,
                    median_secs: median(&mut t),
                    repeats,
                });
            }
        }
    }
    Ok(rows)
}

fn median(v: &mut [f64]) -> f64 {
    v.sort_unstable_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        (v[mid - 1] + v[mid]) / 2.0
    }
}

fn clip_s_range(r: RangeInclusive<usize>, n: usize) -> Result<RangeInclusive<usize>> {
    let (lo, hi) = (*r.start(), (*r.end()).min(n));
    if lo == 0 || lo > hi {
        return Err(invalid(format!(
            "s range {}..={} is empty for series of length {n}",
            r.start(),
            r.end()
        )));
    }
    Ok(lo..=hi)
}
