//! LOF anomaly detection: a handful of funnels hidden among bells, scored
//! with each measure. Reports the best AUC over s and the LOF neighbour
//! count.

use trendpaa::dataset::DatasetPair;
use trendpaa::harness::detect_table;
use trendpaa::mining::{auc, lof_scores};
use trendpaa::synthetic::shape_anomaly_dataset;
use trendpaa::{Measure, MeasureConfig, NtCountPolicy};

fn main() -> trendpaa::Result<()> {
    let test = shape_anomaly_dataset(90, 6, 128, 7);

    let cfg = MeasureConfig::new(Measure::BtPaa, 4)?;
    let scores = lof_scores(test.series(), &cfg, 5)?;
    let truth: Vec<bool> = test.labels().iter().map(|&l| l == 1).collect();
    let mut ranked: Vec<(f64, bool)> = scores.iter().copied().zip(truth.iter().copied()).collect();
    ranked.sort_by(|a, b| b.0.total_cmp(&a.0));
    println!("BT_PAA, s = 4, k = 5: AUC {:.3}", auc(&scores, &truth)?);
    println!("top scores (LOF, is anomaly):");
    for (score, anomalous) in ranked.iter().take(8) {
        println!("  {score:.3} {anomalous}");
    }

    println!();
    let pair = DatasetPair::new("bells+funnels", test.clone(), test)?;
    println!("{:<8} {:>4} {:>6} {:>3}", "measure", "s", "AUC", "k");
    for r in detect_table(&pair, &Measure::ALL, 2..=10, 2..=10, NtCountPolicy::Min)? {
        let s = r.s.map_or("NA".to_string(), |s| s.to_string());
        println!("{:<8} {:>4} {:>6.3} {:>3}", r.measure.name(), s, r.auc, r.k);
    }
    Ok(())
}
