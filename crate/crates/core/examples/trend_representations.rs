//! Encodes two short series with PAA, NT_PAA and BT_PAA and compares the
//! distances each representation produces.

use trendpaa::{
    bit_dist, bt_transform, euclidean, nt_distance, nt_transform, paa_distance, paa_transform,
    NtCountPolicy, TimeSeries,
};

fn main() -> trendpaa::Result<()> {
    let p = TimeSeries::new(vec![0.4, 2.7, 1.6, 0.5, 0.5, 0.5, 0.5])?;
    let q = TimeSeries::new(vec![0.6, 3.2, 1.6, 0.9, 2.8, 2.1, 0.5])?;

    let nt = nt_transform(&q, 1)?;
    let s = nt.segment(0);
    println!("Q mean {:.4}", nt.means[0]);
    println!(
        "  up:    {} points, mean deviation {:.4}",
        s.up_count, s.up_mean
    );
    println!(
        "  below: {} points, mean deviation {:.4}",
        s.below_count, s.below_mean
    );
    println!("trend bits P = {}", bt_transform(&p, 1)?.bits);
    println!("trend bits Q = {}", bt_transform(&q, 1)?.bits);

    println!();
    println!("ED      {:.4}", euclidean(&p, &q)?);
    println!(
        "PAA     {:.4}",
        paa_distance(&paa_transform(&p, 1)?, &paa_transform(&q, 1)?)?
    );
    println!(
        "NT_PAA  {:.4}",
        nt_distance(&nt_transform(&p, 1)?, &nt, NtCountPolicy::Min)?
    );
    println!(
        "BT_PAA  {:.4}",
        bit_dist(&bt_transform(&p, 1)?, &bt_transform(&q, 1)?)?
    );
    Ok(())
}
