mod common;

use common::{check_dqueue_ops, check_pst_queues, random_connected, Op};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        3 => (0u32..=1).prop_map(|bump| Op::Enqueue { bump }),
        2 => (0u32..=2).prop_map(|offset| Op::Dequeue { offset }),
    ]
}

proptest! {
    #[test]
    fn matches_model(cap in 1usize..24, ops in prop::collection::vec(op(), 0..200)) {
        check_dqueue_ops(cap, &ops).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn fill_to_capacity(cap in 1usize..64) {
        let mut ops = vec![Op::Enqueue { bump: 0 }; cap + 3];
        ops.extend(std::iter::repeat_n(Op::Dequeue { offset: 0 }, cap + 1));
        check_dqueue_ops(cap, &ops).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn pst_queues_stay_level_sorted(seed in any::<u64>(), n in 2usize..40, p in 0.0f64..0.6) {
        let g = random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, p);
        check_pst_queues(&g).map_err(TestCaseError::fail)?;
    }
}
