//! Writes a synthetic dataset in UCR layout, reads it back and prints its
//! summary. Any UCR `_TRAIN`/`_TEST` pair loads the same way.

use trendpaa::dataset::DatasetPair;
use trendpaa::synthetic::{cbf_dataset, CbfShape};
use trendpaa::ucr::{load_ucr_file, save_ucr_file, Delimiter};

fn main() -> trendpaa::Result<()> {
    let dir = std::env::temp_dir().join("trendpaa-ucr-example");
    std::fs::create_dir_all(&dir).map_err(|source| trendpaa::Error::Io {
        path: dir.clone(),
        source,
    })?;
    let shapes = [CbfShape::Cylinder, CbfShape::Bell, CbfShape::Funnel];
    for (split, seed) in [("TRAIN", 1), ("TEST", 2)] {
        let path = dir.join(format!("CBF_{split}.tsv"));
        save_ucr_file(&cbf_dataset(&shapes, 10, 128, seed), Delimiter::Tab, &path)?;
        println!("wrote {}", path.display());
    }
    let pair = DatasetPair::new(
        "CBF",
        load_ucr_file(dir.join("CBF_TRAIN.tsv"), Delimiter::Auto)?,
        load_ucr_file(dir.join("CBF_TEST.tsv"), Delimiter::Auto)?,
    )?;
    println!("{:?}", pair.summary());
    println!("class counts: {:?}", pair.train.class_counts());
    Ok(())
}
