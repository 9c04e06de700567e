//! k-nearest-neighbour classification with deterministic tie rules.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::measure::{DistanceMatrix, MeasureConfig};
use crate::dataset::LabeledDataset;
use crate::error::{invalid, Result};
use crate::series::TimeSeries;

/// Majority vote among the `k` nearest neighbours described by `dists`
/// (distance to each reference) and `labels`, skipping index `exclude`.
///
/// Neighbours are ranked by `(distance, label)`, so the result depends only
/// on the multiset of `(distance, label)` pairs and never on reference
/// order. Class ties go to the smaller summed neighbour distance, then to
/// the smaller label.
pub fn knn_vote(dists: &[f64], labels: &[i64], k: usize, exclude: Option<usize>) -> i64 {
    let mut cand: Vec<(f64, i64)> = dists
        .iter()
        .zip(labels)
        .enumerate()
        .filter(|(j, _)| Some(*j) != exclude)
        .map(|(_, (&d, &l))| (d, l))
        .collect();
    let k = k.min(cand.len());
    assert!(k > 0, "k-NN vote needs at least one neighbour");
    let by_rank = |a: &(f64, i64), b: &(f64, i64)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
    if k < cand.len() {
        cand.select_nth_unstable_by(k - 1, by_rank);
        cand.truncate(k);
    }
    cand.sort_unstable_by(by_rank);

    let mut tally: BTreeMap<i64, (usize, f64)> = BTreeMap::new();
    for &(d, l) in &cand {
        let e = tally.entry(l).or_insert((0, 0.0));
        e.0 += 1;
        e.1 += d;
    }
    // BTreeMap iterates labels ascending, so strict comparisons keep the
    // smaller label on a full tie.
    let mut best: Option<(i64, usize, f64)> = None;
    for (&label, &(count, sum)) in &tally {
        let better = match best {
            None => true,
            Some((_, bc, bs)) => count > bc || (count == bc && sum < bs),
        };
        if better {
            best = Some((label, count, sum));
        }
    }
    best.expect("non-empty tally").0
}

/// Classifies one query against a training set.
pub fn knn_classify(
    train: &LabeledDataset,
    query: &TimeSeries,
    cfg: &MeasureConfig,
    k: usize,
) -> Result<i64> {
    check_k(k, train.len())?;
    if query.len() != train.series_len() {
        return Err(invalid(format!(
            "query length {} does not match training length {}",
            query.len(),
            train.series_len()
        )));
    }
    let q = cfg.encode(query)?;
    let dists = train
        .series()
        .iter()
        .map(|s| cfg.distance(&q, &cfg.encode(s)?))
        .collect::<Result<Vec<f64>>>()?;
    Ok(knn_vote(&dists, train.labels(), k, None))
}

/// Classifies every test series; predictions are returned in test order.
pub fn knn_predict(
    train: &LabeledDataset,
    test: &LabeledDataset,
    cfg: &MeasureConfig,
    k: usize,
) -> Result<Vec<i64>> {
    check_k(k, train.len())?;
    if test.series_len() != train.series_len() {
        return Err(invalid(format!(
            "test length {} does not match training length {}",
            test.series_len(),
            train.series_len()
        )));
    }
    let refs = cfg.encode_all(train.series())?;
    let queries = cfg.encode_all(test.series())?;
    let m = DistanceMatrix::cross(cfg, &queries, &refs)?;
    Ok((0..m.rows())
        .into_par_iter()
        .map(|i| knn_vote(m.row(i), train.labels(), k, None))
        .collect())
}

/// Leave-one-out predictions over a precomputed pairwise matrix. `k` is
/// capped at `n - 1`.
pub fn loo_predict(m: &DistanceMatrix, labels: &[i64], k: usize) -> Vec<i64> {
    let k = k.min(labels.len() - 1);
    (0..m.rows())
        .map(|i| knn_vote(m.row(i), labels, k, Some(i)))
        .collect()
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(invalid(format!(
            "k must be in [1, {n}] for a training set of {n} series, got {k}"
        )));
    }
    Ok(())
}
