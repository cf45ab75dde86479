mod common;

use common::{cross_check, random_connected, random_disconnected};
use proptest::prelude::*;
use pst_apsp::graph::{gen_hypercube, gen_scale_free};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn connected_graphs_agree(seed in any::<u64>(), n in 2usize..48, p in 0.0f64..=1.0) {
        let g = random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, p);
        let c = cross_check(&g).map_err(TestCaseError::fail)?;
        prop_assert!(c.pst_accesses <= c.bfs_accesses);
    }

    #[test]
    fn disconnected_graphs_agree(seed in any::<u64>(), n in 2usize..48, p in 0.0f64..=1.0) {
        let g = random_disconnected(&mut ChaCha8Rng::seed_from_u64(seed), n, p);
        prop_assert!(!g.is_connected());
        cross_check(&g).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn scale_free_graphs_agree(seed in any::<u64>(), n in 3usize..80, np in 2usize..8) {
        prop_assume!(np < n);
        let g = gen_scale_free(n, np, seed).unwrap();
        cross_check(&g).map_err(TestCaseError::fail)?;
    }
}

#[test]
fn hypercubes_agree() {
    for k in 1..=7 {
        cross_check(&gen_hypercube(k).unwrap()).unwrap();
    }
}
