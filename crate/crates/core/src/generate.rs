use rand::{Rng, RngExt};

use crate::graph::Graph;

/// Parameters for Erdos-Renyi style generation: each ordered pair (u, v),
/// u != v, gets an edge with probability `density`, weighted uniformly from
/// `[weight_min, weight_max]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GraphSpec {
    pub n: usize,
    pub density: f64,
    pub weight_min: i64,
    pub weight_max: i64,
}

impl GraphSpec {
    /// The magnitude bound the generated graph declares.
    pub fn weight_bound(&self) -> i64 {
        self.weight_min.abs().max(self.weight_max.abs())
    }

    pub fn allows_negative(&self) -> bool {
        self.weight_min < 0
    }
}

/// One random graph. May contain negative cycles when the weight range
/// allows negative edges.
pub fn random_graph<R: Rng + ?Sized>(spec: &GraphSpec, rng: &mut R) -> Graph {
    assert!(spec.n >= 1, "graphs need at least one vertex");
    assert!(
        spec.weight_min <= spec.weight_max,
        "empty weight range [{}, {}]",
        spec.weight_min,
        spec.weight_max
    );
    assert!(
        (0.0..=1.0).contains(&spec.density),
        "density outside [0, 1]"
    );
    let mut edges = Vec::new();
    for u in 0..spec.n {
        for v in 0..spec.n {
            if u != v && rng.random_bool(spec.density) {
                edges.push((u, v, rng.random_range(spec.weight_min..=spec.weight_max)));
            }
        }
    }
    Graph::new(spec.n, edges, spec.weight_bound())
        .expect("generated edges satisfy the declared bound; check (n + 1) * bound against W_MAX")
}

/// Rejection-sample until the graph has no negative cycle, up to
/// `max_attempts` draws. Returns `None` if every draw was rejected; with a
/// nonnegative weight range the first draw always succeeds.
pub fn random_cycle_free_graph<R: Rng + ?Sized>(
    spec: &GraphSpec,
    rng: &mut R,
    max_attempts: usize,
) -> Option<Graph> {
    for _ in 0..max_attempts {
        let g = random_graph(spec, rng);
        if g.negative_cycle_free() {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generation_is_deterministic_per_seed() {
        let spec = GraphSpec {
            n: 8,
            density: 0.4,
            weight_min: -3,
            weight_max: 9,
        };
        let a = random_graph(&spec, &mut ChaCha8Rng::seed_from_u64(11));
        let b = random_graph(&spec, &mut ChaCha8Rng::seed_from_u64(11));
        let c = random_graph(&spec, &mut ChaCha8Rng::seed_from_u64(12));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn density_extremes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let empty = GraphSpec {
            n: 6,
            density: 0.0,
            weight_min: 1,
            weight_max: 4,
        };
        assert!(random_graph(&empty, &mut rng).edges().is_empty());
        let full = GraphSpec {
            n: 6,
            density: 1.0,
            weight_min: 1,
            weight_max: 4,
        };
        assert_eq!(random_graph(&full, &mut rng).edges().len(), 30);
    }

    #[test]
    fn weights_stay_in_range() {
        let spec = GraphSpec {
            n: 10,
            density: 0.8,
            weight_min: -2,
            weight_max: 5,
        };
        let g = random_graph(&spec, &mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(g.weight_bound(), 5);
        assert!(g.edges().iter().all(|e| (-2..=5).contains(&e.weight)));
    }

    #[test]
    fn rejection_sampling_yields_cycle_free_graphs() {
        let spec = GraphSpec {
            n: 6,
            density: 0.5,
            weight_min: -4,
            weight_max: 8,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..25 {
            let g = random_cycle_free_graph(&spec, &mut rng, 300).expect("a draw should succeed");
            assert!(g.negative_cycle_free());
        }
    }

    #[test]
    fn hopeless_spec_exhausts_the_retry_cap() {
        // Density 1 with strictly negative weights always contains a
        // negative two-cycle once n >= 2.
        let spec = GraphSpec {
            n: 4,
            density: 1.0,
            weight_min: -9,
            weight_max: -1,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(random_cycle_free_graph(&spec, &mut rng, 50), None);
    }
}
