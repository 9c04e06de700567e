//! Mean tightness of PAA and NT_PAA over 200 Gaussian random walks of
//! length 150, for s = 1..=15.
//!
//!     cargo run --release --example tightness_study

use trendpaa::harness::tightness_table;
use trendpaa::synthetic::gaussian_walks;
use trendpaa::NtCountPolicy;

fn main() -> trendpaa::Result<()> {
    let walks = gaussian_walks(200, 150, 0);
    println!("{:>3} {:>4} {:>8} {:>8}", "s", "w", "PAA", "NT_PAA");
    for r in tightness_table(&walks, 1..=15, NtCountPolicy::Min)? {
        println!("{:>3} {:>4} {:>8.4} {:>8.4}", r.s, r.w, r.paa, r.nt_paa);
    }
    Ok(())
}
