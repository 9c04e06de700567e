//! Step reconstructions of a noisy sine at several segment counts, with the
//! reconstruction error of each.
//!
//!     cargo run --example paa_reconstruct

use trendpaa::harness::reconstruct_table;
use trendpaa::{euclidean, TimeSeries};

fn main() -> trendpaa::Result<()> {
    let raw: Vec<f64> = (0..96)
        .map(|i| {
            let t = i as f64 / 96.0;
            (6.0 * t).sin() + 0.3 * (40.0 * t).cos()
        })
        .collect();
    let ts = TimeSeries::new(raw)?;
    let table = reconstruct_table(&ts, &[2, 8, 16, 24])?;

    for (w, col) in table.widths.iter().zip(&table.columns) {
        println!(
            "w = {w:>2}: reconstruction error {:.4}",
            euclidean(&ts, col)?
        );
    }
    println!();
    println!("{}", table.header().join(","));
    for row in table.rows().take(12) {
        let cells: Vec<String> = row[1..].iter().map(|v| format!("{v:.3}")).collect();
        println!("{},{}", row[0], cells.join(","));
    }
    println!("... ({} rows)", ts.len());
    Ok(())
}
