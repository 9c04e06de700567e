use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distance::{
    bit_dist, cosine_distance, euclidean, nt_distance, paa_distance, NtCountPolicy,
};
use crate::error::{invalid, Result};
use crate::repr::{bt_transform, nt_transform, paa_transform, BtRepr, NtRepr, PaaRepr};
use crate::series::TimeSeries;

/// The similarity measures compared by the mining pipelines.
#[derive(
    Debug,
    Clone,
    Copy,
    PartialEq,
    Eq,
    PartialOrd,
    Ord,
    Hash,
    Serialize,
    Deserialize,
    clap::ValueEnum,
)]
pub enum Measure {
    #[serde(rename = "ED")]
    #[value(name = "ed")]
    Ed,
    #[serde(rename = "COSINE")]
    #[value(name = "cosine")]
    Cosine,
    #[serde(rename = "PAA")]
    #[value(name = "paa")]
    Paa,
    #[serde(rename = "NT_PAA")]
    #[value(name = "nt")]
    NtPaa,
    #[serde(rename = "BT_PAA")]
    #[value(name = "bt")]
    BtPaa,
}

impl Measure {
    pub const ALL: [Measure; 5] = [
        Measure::BtPaa,
        Measure::NtPaa,
        Measure::Paa,
        Measure::Cosine,
        Measure::Ed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Ed => "ED",
            Measure::Cosine => "COSINE",
            Measure::Paa => "PAA",
            Measure::NtPaa => "NT_PAA",
            Measure::BtPaa => "BT_PAA",
        }
    }

    /// Whether the reduction ratio changes the result.
    pub fn uses_s(self) -> bool {
        self != Measure::Ed
    }
}

impl std::fmt::Display for Measure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A measure together with its reduction ratio `s` (points per segment).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MeasureConfig {
    pub measure: Measure,
    pub s: usize,
    pub nt_policy: NtCountPolicy,
}

/// A series encoded for one measure.
#[derive(Debug, Clone)]
pub enum Encoded {
    Raw(TimeSeries),
    Paa(PaaRepr),
    Nt(NtRepr),
    Bt(BtRepr),
}

impl MeasureConfig {
    pub fn new(measure: Measure, s: usize) -> Result<Self> {
        if s == 0 {
            return Err(invalid("reduction ratio s must be at least 1"));
        }
        Ok(Self {
            measure,
            s,
            nt_policy: NtCountPolicy::default(),
        })
    }

    pub fn with_policy(mut self, nt_policy: NtCountPolicy) -> Self {
        self.nt_policy = nt_policy;
        self
    }

    /// Segment count used for series of length `n`: `max(1, floor(n / s))`.
    pub fn segments_for(&self, n: usize) -> usize {
        (n / self.s).max(1)
    }

    pub fn is_symmetric(&self) -> bool {
        !(self.measure == Measure::NtPaa
            && matches!(
                self.nt_policy,
                NtCountPolicy::Query | NtCountPolicy::Reference
            ))
    }

    pub fn encode(&self, ts: &TimeSeries) -> Result<Encoded> {
        let w = self.segments_for(ts.len());
        Ok(match self.measure {
            Measure::Ed => Encoded::Raw(ts.clone()),
            Measure::Cosine | Measure::Paa => Encoded::Paa(paa_transform(ts, w)?),
            Measure::NtPaa => Encoded::Nt(nt_transform(ts, w)?),
            Measure::BtPaa => Encoded::Bt(bt_transform(ts, w)?),
        })
    }

    pub fn encode_all(&self, series: &[TimeSeries]) -> Result<Vec<Encoded>> {
        series.iter().map(|s| self.encode(s)).collect()
    }

    /// Distance between two series encoded by this configuration.
    pub fn distance(&self, a: &Encoded, b: &Encoded) -> Result<f64> {
        match (self.measure, a, b) {
            (Measure::Ed, Encoded::Raw(a), Encoded::Raw(b)) => euclidean(a, b),
            (Measure::Cosine, Encoded::Paa(a), Encoded::Paa(b)) => cosine_distance(a, b),
            (Measure::Paa, Encoded::Paa(a), Encoded::Paa(b)) => paa_distance(a, b),
            (Measure::NtPaa, Encoded::Nt(a), Encoded::Nt(b)) => nt_distance(a, b, self.nt_policy),
            (Measure::BtPaa, Encoded::Bt(a), Encoded::Bt(b)) => bit_dist(a, b),
            _ => Err(invalid(format!(
                "encoding does not match measure {}",
                self.measure
            ))),
        }
    }

    /// Encodes both raw series and measures them.
    pub fn between(&self, a: &TimeSeries, b: &TimeSeries) -> Result<f64> {
        self.distance(&self.encode(a)?, &self.encode(b)?)
    }
}

/// A dense row-major matrix of distances: `get(i, j)` is the distance from
/// row item `i` to column item `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    /// All pairwise distances within one collection. The diagonal is zero.
    pub fn pairwise(cfg: &MeasureConfig, items: &[Encoded]) -> Result<Self> {
        let n = items.len();
        let symmetric = cfg.is_symmetric();
        let rows: Vec<Vec<f64>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let start = if symmetric { i + 1 } else { 0 };
                (start..n)
                    .map(|j| {
                        if i == j {
                            Ok(0.0)
                        } else {
                            cfg.distance(&items[i], &items[j])
                        }
                    })
                    .collect::<Result<Vec<f64>>>()
            })
            .collect::<Result<_>>()?;
        let mut data = vec![0.0; n * n];
        for (i, row) in rows.into_iter().enumerate() {
            if symmetric {
                for (off, d) in row.into_iter().enumerate() {
                    let j = i + 1 + off;
                    data[i * n + j] = d;
                    data[j * n + i] = d;
                }
            } else {
                data[i * n..(i + 1) * n].copy_from_slice(&row);
            }
        }
        Ok(Self {
            rows: n,
            cols: n,
            data,
        })
    }

    /// Distances from every query (rows) to every reference (columns).
    pub fn cross(cfg: &MeasureConfig, queries: &[Encoded], refs: &[Encoded]) -> Result<Self> {
        let rows: Vec<Vec<f64>> = queries
            .par_iter()
            .map(|q| {
                refs.iter()
                    .map(|r| cfg.distance(q, r))
                    .collect::<Result<Vec<f64>>>()
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            rows: queries.len(),
            cols: refs.len(),
            data: rows.concat(),
        })
    }

    /// Builds a matrix from explicit rows. Panics if rows are ragged.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged distance rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(v: &[f64]) -> TimeSeries {
        TimeSeries::try_from(v).unwrap()
    }

    #[test]
    fn segments_for_floors_and_clamps() {
        let cfg = MeasureConfig::new(Measure::Paa, 4).unwrap();
        assert_eq!(cfg.segments_for(96), 24);
        assert_eq!(cfg.segments_for(10), 2);
        assert_eq!(cfg.segments_for(3), 1);
        assert!(MeasureConfig::new(Measure::Paa, 0).is_err());
    }

    #[test]
    fn ed_ignores_s() {
        let (a, b) = (ts(&[0.0, 1.0, 5.0, 2.0]), ts(&[1.0, 1.0, 0.0, 2.0]));
        let d1 = MeasureConfig::new(Measure::Ed, 1)
            .unwrap()
            .between(&a, &b)
            .unwrap();
        let d3 = MeasureConfig::new(Measure::Ed, 3)
            .unwrap()
            .between(&a, &b)
            .unwrap();
        assert_eq!(d1, d3);
    }

    #[test]
    fn mismatched_encoding_is_rejected() {
        let paa = MeasureConfig::new(Measure::Paa, 1).unwrap();
        let bt = MeasureConfig::new(Measure::BtPaa, 1).unwrap();
        let x = ts(&[1.0, 2.0]);
        assert!(paa
            .distance(&bt.encode(&x).unwrap(), &bt.encode(&x).unwrap())
            .is_err());
    }

    #[test]
    fn pairwise_matches_direct_evaluation() {
        let items: Vec<TimeSeries> = (0..6)
            .map(|i| {
                ts(&(0..8)
                    .map(|j| ((i * 7 + j * 3) % 5) as f64)
                    .collect::<Vec<_>>())
            })
            .collect();
        for policy in [NtCountPolicy::Min, NtCountPolicy::Query] {
            let cfg = MeasureConfig::new(Measure::NtPaa, 2)
                .unwrap()
                .with_policy(policy);
            let enc = cfg.encode_all(&items).unwrap();
            let m = DistanceMatrix::pairwise(&cfg, &enc).unwrap();
            for i in 0..6 {
                for j in 0..6 {
                    let want = if i == j {
                        0.0
                    } else {
                        cfg.distance(&enc[i], &enc[j]).unwrap()
                    };
                    assert_eq!(m.get(i, j), want);
                }
            }
        }
    }
}
