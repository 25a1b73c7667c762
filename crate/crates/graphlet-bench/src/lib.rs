//! Seeded graph generators shared by the benchmark suite.

use graphlet_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// G(n, p) with a fixed seed, generated by geometric gap skipping so the
/// cost is proportional to the number of edges rather than vertex pairs.
pub fn gnp(n: u64, p: f64, seed: u64) -> Graph {
    assert!((0.0..1.0).contains(&p), "p must be in [0, 1)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    if p > 0.0 {
        let log_q = (1.0 - p).ln();
        let mut v: u64 = 1;
        let mut w: i64 = -1;
        while v < n {
            let r: f64 = rng.random();
            w += 1 + ((1.0 - r).ln() / log_q) as i64;
            while v < n && w >= v as i64 {
                w -= v as i64;
                v += 1;
            }
            if v < n {
                edges.push((w as u64, v));
            }
        }
    }
    Graph::from_edges(n as usize, &edges).expect("generator stays in range")
}

#[cfg(test)]
mod tests {
    use super::gnp;

    #[test]
    fn edge_count_tracks_density() {
        let g = gnp(1000, 0.01, 1);
        let expected = 0.01 * 999.0 * 500.0;
        let m = g.edge_count() as f64;
        assert!((m - expected).abs() < expected * 0.2, "m = {m}, expected about {expected}");
    }

    #[test]
    fn zero_probability_yields_no_edges() {
        assert_eq!(gnp(100, 0.0, 1).edge_count(), 0);
    }

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(gnp(200, 0.05, 9).edges(), gnp(200, 0.05, 9).edges());
    }
}
