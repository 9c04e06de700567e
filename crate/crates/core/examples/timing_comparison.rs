//! Median single-thread time of a full LOF anomaly-detection run with PAA,
//! BT_PAA and NT_PAA for s = 2..=10.
//!
//!     cargo run --release --example timing_comparison

use trendpaa::harness::bench_table;
use trendpaa::synthetic::shape_anomaly_dataset;
use trendpaa::Measure;

fn main() -> trendpaa::Result<()> {
    let data = vec![(
        "bells+funnels".to_string(),
        shape_anomaly_dataset(200, 10, 1024, 3),
    )];
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("thread pool");
    let rows = pool.install(|| bench_table(&data, 2..=10, 2..=10, 5))?;

    println!(
        "{:>3} {:>10} {:>10} {:>10} {:>7}",
        "s", "PAA", "BT_PAA", "NT_PAA", "NT/PAA"
    );
    for s in 2..=10 {
        let t = |m: Measure| {
            rows.iter()
                .find(|r| r.s == s && r.measure == m)
                .unwrap()
                .median_secs
        };
        let (paa, bt, nt) = (t(Measure::Paa), t(Measure::BtPaa), t(Measure::NtPaa));
        println!(
            "{s:>3} {:>9.2}ms {:>9.2}ms {:>9.2}ms {:>7.2}",
            paa * 1e3,
            bt * 1e3,
            nt * 1e3,
            nt / paa
        );
    }
    Ok(())
}
