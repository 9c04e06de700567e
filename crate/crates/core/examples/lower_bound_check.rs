//! Counts how often PAA and NT_PAA exceed the Euclidean distance on random
//! pairs. PAA never does; NT_PAA can when the two series split a segment
//! into different up/below sets.
//!
//!     cargo run --release --example lower_bound_check -- 20000

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use trendpaa::{euclidean, nt_distance, nt_transform, NtCountPolicy, TimeSeries};

fn series(rng: &mut ChaCha8Rng, n: usize) -> TimeSeries {
    let v = (0..n)
        .map(|_| {
            let z: f64 = StandardNormal.sample(rng);
            z
        })
        .collect();
    TimeSeries::new(v).unwrap()
}

fn main() -> trendpaa::Result<()> {
    let pairs: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5_000);
    let policies = [NtCountPolicy::Min, NtCountPolicy::Query, NtCountPolicy::Max];
    let mut paa_violations = 0;
    let mut nt_violations = [0usize; 3];
    let mut first = [None; 3];

    for seed in 0..pairs {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(4..=64);
        let w = rng.random_range(1..=n);
        let (q, c) = (series(&mut rng, n), series(&mut rng, n));
        let ed = euclidean(&q, &c)?;
        let (nq, nc) = (nt_transform(&q, w)?, nt_transform(&c, w)?);
        if trendpaa::paa_distance(&nq.paa(), &nc.paa())? > ed + 1e-9 {
            paa_violations += 1;
        }
        for (i, &policy) in policies.iter().enumerate() {
            if nt_distance(&nq, &nc, policy)? > ed + 1e-9 {
                nt_violations[i] += 1;
                first[i].get_or_insert((seed, n, w));
            }
        }
    }

    println!("{pairs} random pairs");
    println!("PAA above ED: {paa_violations}");
    for (i, policy) in policies.iter().enumerate() {
        print!("NT_PAA ({policy:?}) above ED: {}", nt_violations[i]);
        match first[i] {
            Some((seed, n, w)) => println!("  first at seed {seed} (n = {n}, w = {w})"),
            None => println!(),
        }
    }
    Ok(())
}
