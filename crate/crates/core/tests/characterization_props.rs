use std::collections::BTreeSet;

use blockcolor::characterization::{
    apply_operation, find_decomposition, generate_with_alphamin, legal_anchors, replay, verify_certificate,
    Attachment, OpDescriptor, OpKind,
};
use blockcolor::oracle::brute_alpha_min;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_certificates_verify(r in 1usize..=5, max_clique in 2usize..=4, seed in any::<u64>()) {
        let (g, cert) = generate_with_alphamin(r, max_clique, seed).unwrap();
        let report = verify_certificate(&cert).unwrap();
        prop_assert!(report.valid, "{:?}", report.violation);
        prop_assert_eq!(report.r, r);
        prop_assert_eq!(brute_alpha_min(&g, 64).unwrap(), r);
    }

    #[test]
    fn certificate_graphs_grow_as_induced_prefixes(r in 2usize..=5, seed in any::<u64>()) {
        let (_, cert) = generate_with_alphamin(r, 3, seed).unwrap();
        let graphs = replay(&cert).unwrap();
        for pair in graphs.windows(2) {
            let (small, big) = (&pair[0], &pair[1]);
            prop_assert!(big.n() > small.n());
            let prefix: Vec<usize> = (0..small.n()).collect();
            prop_assert_eq!(&big.induced(&prefix).0, small.graph());
        }
    }

    #[test]
    fn generated_graphs_decompose_back(r in 1usize..=4, seed in any::<u64>()) {
        let (g, _) = generate_with_alphamin(r, 3, seed).unwrap();
        prop_assume!(g.n() <= 20);
        let d = find_decomposition(&g).unwrap().expect("certificate exists");
        let report = verify_certificate(&d.certificate).unwrap();
        prop_assert!(report.valid);
        prop_assert_eq!(report.r, r);
        let mapped: BTreeSet<usize> = d.vertex_map.iter().copied().collect();
        prop_assert_eq!(mapped.len(), g.n());
    }
}

#[test]
fn every_legal_anchor_applies() {
    for seed in 0..20 {
        let (g, cert) = generate_with_alphamin(2 + seed as usize % 3, 3, seed).unwrap();
        let v = cert.base_vertex;
        for kind in OpKind::ALL {
            for anchors in legal_anchors(&g, v, kind).unwrap() {
                let op = OpDescriptor {
                    kind,
                    attachments: anchors.iter().map(|&anchor| Attachment { anchor, size: 2 }).collect(),
                    star_extension: None,
                };
                let next = apply_operation(&g, v, &op).unwrap();
                assert!(next.n() > g.n());
            }
        }
    }
}

#[test]
fn bad_generation_parameters_are_rejected() {
    assert!(generate_with_alphamin(0, 3, 1).is_err());
    assert!(generate_with_alphamin(2, 1, 1).is_err());
}
