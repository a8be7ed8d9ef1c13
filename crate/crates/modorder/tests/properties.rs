//! Property-based consistency checks on randomly shaped modules outside the
//! builtin catalog: document round-trips, decider/matrix agreement, and
//! certificate replay. The matrix builders use separable per-witness scans
//! while the deciders scan per pair, so agreement is a genuine cross-check
//! of two independent implementations.

use modorder::context::Ctx;
use modorder::io as doc_io;
use modorder::module::FiniteModule;
use modorder::order::{self, Rel};
use proptest::prelude::*;

/// Cyclic groups and products of two cyclic groups, as integer modules.
fn random_module() -> impl Strategy<Value = FiniteModule> {
    prop_oneof![
        (1usize..=12).prop_map(|n| FiniteModule::zmodule(n).expect("cyclic module builds")),
        (2usize..=6, 2usize..=6).prop_map(|(a, b)| {
            let a = FiniteModule::zmodule(a).expect("factor builds");
            let b = FiniteModule::zmodule(b).expect("factor builds");
            FiniteModule::module_product(&a, &b).expect("product builds")
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn instance_documents_round_trip(m in random_module()) {
        let text = doc_io::save_instance_string(&m);
        let back = doc_io::load_instance_str(&text).expect("serialized instance parses");
        prop_assert_eq!(m.size(), back.size());
        prop_assert_eq!(m.element_names(), back.element_names());
        prop_assert_eq!(doc_io::save_instance_string(&back), text);
    }

    #[test]
    fn deciders_agree_with_matrices_and_certificates_replay(module in random_module()) {
        let ctx = Ctx::new("random", "property-test instance", module, None);
        let m = ctx.module();
        let homs = ctx.homs().expect("homs enumerate");
        let dual = ctx.dual().expect("dual enumerates");
        for rel in Rel::ALL {
            let p = ctx.poset(rel).expect("matrix builds");
            for i in 0..m.size() {
                for j in 0..m.size() {
                    let cert = match rel {
                        Rel::Mitsch => order::mitsch_leq(m, &homs, i, j),
                        Rel::Minus => order::minus_leq(m, &dual, i, j),
                        Rel::Jones => order::jones_leq(m, &homs, i, j),
                        Rel::Dsum => order::dsum_leq(m, i, j),
                        Rel::Space => order::space_leq(m, &homs, i, j),
                    };
                    prop_assert_eq!(
                        cert.is_some(),
                        p.related(i, j),
                        "decider/matrix disagree: {} ({},{}) on {} elements",
                        rel,
                        i,
                        j,
                        m.size()
                    );
                    if let Some(cert) = cert {
                        prop_assert!(
                            order::replay_certificate(m, &homs, &dual, i, j, &cert),
                            "certificate fails replay: {} ({},{})",
                            rel,
                            i,
                            j
                        );
                    }
                }
            }
        }
    }
}
