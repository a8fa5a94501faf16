//! Wall-clock scaling of the two engines.

use std::fmt::Write;
use std::time::{Duration, Instant};

use optimal1p::{random_optimal, recognize_with, Algorithm, Options};

#[derive(Debug, Clone)]
pub struct Row {
    pub n: usize,
    pub algorithm: &'static str,
    pub repeats: usize,
    pub median: Duration,
    pub accepted: bool,
}

pub fn algorithm_name(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Linear => "linear",
        Algorithm::Quadratic => "quadratic",
        Algorithm::FiveConnected => "sr-only",
    }
}

/// Median time of `recognize_with` over fresh graphs. Certification is off
/// so only the reduction itself is timed.
pub fn measure(n: usize, algorithm: Algorithm, repeats: usize, seed: u64) -> optimal1p::Result<Row> {
    let opts = Options {
        algorithm,
        certify: false,
        ..Options::default()
    };
    let mut times = Vec::with_capacity(repeats);
    let mut accepted = true;
    for r in 0..repeats.max(1) {
        let g = random_optimal(n, seed.wrapping_add(r as u64))?.graph;
        let t = Instant::now();
        let res = recognize_with(&g, &opts);
        times.push(t.elapsed());
        accepted &= res.accepted;
    }
    times.sort_unstable();
    Ok(Row {
        n,
        algorithm: algorithm_name(algorithm),
        repeats: times.len(),
        median: times[times.len() / 2],
        accepted,
    })
}

pub fn csv(rows: &[Row]) -> String {
    let mut out = String::from("n,algorithm,repeats,median_seconds,accepted\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{:.6},{}",
            r.n,
            r.algorithm,
            r.repeats,
            r.median.as_secs_f64(),
            r.accepted
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_instance_is_fast() {
        let r = measure(8, Algorithm::Linear, 1, 0).unwrap();
        assert!(r.accepted);
        assert!(r.median < Duration::from_millis(1));
        assert!(csv(&[r]).lines().nth(1).unwrap().starts_with("8,linear,1,"));
    }
}
