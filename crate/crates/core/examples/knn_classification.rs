//! 3-NN classification of a synthetic cylinder-bell-funnel problem with
//! every measure, choosing s by leave-one-out on the training split.
//!
//! With a UCR archive on disk, pass a directory and dataset name instead:
//!
//!     cargo run --release --example knn_classification -- ~/UCRArchive Coffee

use trendpaa::dataset::DatasetPair;
use trendpaa::harness::classify_table;
use trendpaa::synthetic::{cbf_dataset, CbfShape};
use trendpaa::ucr::load_pair;
use trendpaa::{Measure, NtCountPolicy};

fn main() -> trendpaa::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pair = match args.as_slice() {
        [dir, name] => load_pair(dir, name)?,
        _ => {
            let shapes = [CbfShape::Cylinder, CbfShape::Bell, CbfShape::Funnel];
            DatasetPair::new(
                "CBF (synthetic)",
                cbf_dataset(&shapes, 10, 128, 1),
                cbf_dataset(&shapes, 100, 128, 2),
            )?
        }
    };
    let s = pair.summary();
    println!(
        "{}: {} classes, train {}, test {}, length {}",
        s.name, s.classes, s.train_size, s.test_size, s.length
    );
    println!("{:<8} {:>4} {:>7} {:>7}", "measure", "s", "error", "F1");
    for r in classify_table(&pair, &Measure::ALL, 3, 2..=19, NtCountPolicy::Min)? {
        let s = r.s.map_or("NA".to_string(), |s| s.to_string());
        println!(
            "{:<8} {:>4} {:>7.3} {:>7.3}",
            r.measure.name(),
            s,
            r.error,
            r.f1
        );
    }
    Ok(())
}
