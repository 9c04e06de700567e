//! Local Outlier Factor over an arbitrary distance matrix.

use rayon::prelude::*;

use super::measure::{DistanceMatrix, MeasureConfig};
use crate::error::{invalid, Result};
use crate::series::TimeSeries;

/// Upper bound on local reachability density. Duplicated points have zero
/// reachability distance and would otherwise get infinite density.
pub const MAX_LRD: f64 = 1e12;

/// The k-distance neighbourhood of one point.
struct Neighbourhood {
    k_distance: f64,
    members: Vec<usize>,
}

fn neighbourhood(row: &[f64], p: usize, k: usize, scratch: &mut Vec<f64>) -> Neighbourhood {
    scratch.clear();
    scratch.extend(
        row.iter()
            .enumerate()
            .filter(|&(o, _)| o != p)
            .map(|(_, &d)| d),
    );
    let (_, kth, _) = scratch.select_nth_unstable_by(k - 1, f64::total_cmp);
    let k_distance = *kth;
    let members = row
        .iter()
        .enumerate()
        .filter(|&(o, &d)| o != p && d <= k_distance)
        .map(|(o, _)| o)
        .collect();
    Neighbourhood {
        k_distance,
        members,
    }
}

/// LOF score of every point given its full distance matrix. Ties at the
/// k-distance enlarge the neighbourhood, so it can exceed `k` members.
pub fn lof_from_matrix(m: &DistanceMatrix, k: usize) -> Result<Vec<f64>> {
    let n = m.rows();
    if m.cols() != n {
        return Err(invalid("LOF needs a square distance matrix"));
    }
    if k == 0 || k >= n {
        return Err(invalid(format!(
            "LOF neighbour count must be in [1, {}] for {n} points, got {k}",
            n.saturating_sub(1)
        )));
    }

    let hoods: Vec<Neighbourhood> = (0..n)
        .into_par_iter()
        .map_init(Vec::new, |scratch, p| {
            neighbourhood(m.row(p), p, k, scratch)
        })
        .collect();

    let lrd: Vec<f64> = (0..n)
        .map(|p| {
            let h = &hoods[p];
            let reach: f64 = h
                .members
                .iter()
                .map(|&o| hoods[o].k_distance.max(m.get(p, o)))
                .sum();
            if reach == 0.0 {
                MAX_LRD
            } else {
                (h.members.len() as f64 / reach).min(MAX_LRD)
            }
        })
        .collect();

    Ok((0..n)
        .map(|p| {
            let h = &hoods[p];
            let neighbour_lrd: f64 = h.members.iter().map(|&o| lrd[o]).sum();
            neighbour_lrd / (h.members.len() as f64 * lrd[p])
        })
        .collect())
}

/// Encodes `data` under `cfg` and scores every series.
pub fn lof_scores(
    data: &[TimeSeries],
    cfg: &MeasureConfig,
    k_neighbors: usize,
) -> Result<Vec<f64>> {
    if k_neighbors >= data.len() {
        return Err(invalid(format!(
            "LOF needs more than {k_neighbors} series, got {}",
            data.len()
        )));
    }
    if let Some(s) = data.iter().find(|s| s.len() != data[0].len()) {
        return Err(invalid(format!(
            "series lengths differ: {} vs {}",
            data[0].len(),
            s.len()
        )));
    }
    let enc = cfg.encode_all(data)?;
    let m = DistanceMatrix::pairwise(cfg, &enc)?;
    lof_from_matrix(&m, k_neighbors)
}
