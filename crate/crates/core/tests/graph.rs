use proptest::prelude::*;
use pst_apsp::bfs::bfs_apsp;
use pst_apsp::graph::{format_edge_list, gen_hypercube, gen_scale_free, parse_edge_list, GenSpec};

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

proptest! {
    #[test]
    fn edge_list_round_trip(n in 3usize..200, np in 2usize..10, seed in any::<u64>()) {
        prop_assume!(np < n);
        let g = gen_scale_free(n, np, seed).unwrap();
        let back = parse_edge_list(&format_edge_list(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn scale_free_shape(n in 3usize..300, np in 2usize..12, seed in any::<u64>()) {
        prop_assume!(np < n);
        let g = gen_scale_free(n, np, seed).unwrap();
        prop_assert_eq!(g.edge_count(), np * (np - 1) / 2 + (n - np) * np);
        prop_assert!(g.is_connected());
        prop_assert!(g.validate().is_ok());
        prop_assert!(g.vertices().skip(np).all(|v| g.degree(v) >= np));
    }
}

#[test]
fn hypercube_diameter_is_dimension() {
    for k in 1..=8u32 {
        let g = gen_hypercube(k).unwrap();
        let d = bfs_apsp(&g).distances;
        let n = g.vertex_count();
        let diameter = (0..n).flat_map(|j| d.column(j).to_vec()).max().unwrap();
        assert_eq!(diameter, k);
        for v in 0..n {
            assert_eq!(d.get(v, 0), (v as u32).count_ones());
        }
    }
}

#[test]
fn hypercube_round_trip() {
    let g = GenSpec::hypercube(256).generate().unwrap();
    assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
}

// Frozen output of the seeded generator. A change here changes every
// benchmark graph.
#[test]
fn scale_free_fingerprint() {
    let cases = [(64, 2, 1), (256, 16, 7), (1000, 5, 42)];
    let got: Vec<u64> = cases
        .iter()
        .map(|&(n, np, seed)| {
            fnv1a(format_edge_list(&gen_scale_free(n, np, seed).unwrap()).as_bytes())
        })
        .collect();
    assert_eq!(got, FINGERPRINTS);
}

const FINGERPRINTS: [u64; 3] = [
    796505211974389806,
    9502914065581887834,
    12283648122023003914,
];
