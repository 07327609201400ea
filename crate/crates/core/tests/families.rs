use nsq_core::families::{
    arithmetical_family, generalized_arithmetical_family, nointersection_family, noquotient_family,
    verify_nointersection_instance, verify_noquotient_instance,
};
use nsq_core::rank::{full_rank_certificate, not_k_quotient_search, pm_ordering};
use nsq_core::{Error, RankCertificate, SearchBudget};

#[test]
fn noquotient_instances_verify() {
    for k in 1..=5u32 {
        for i in 0..10 {
            let a = (1u64 << k) + 5 * i;
            let (inst, s) = noquotient_family(k, a).unwrap();
            assert_eq!(s.min_gens(), inst.gens.as_slice(), "generators are minimal");
            assert_eq!(s.embedding_dimension(), k as usize + 1);
            verify_noquotient_instance(&inst).unwrap();
            assert!(matches!(
                full_rank_certificate(&s).unwrap(),
                RankCertificate::FullRank { .. }
            ));
            if k <= 3 {
                let budget = SearchBudget {
                    pool: 200,
                    ..SearchBudget::default()
                };
                let cert =
                    not_k_quotient_search(&s, k as usize, inst.gens[k as usize], &budget).unwrap();
                assert!(
                    matches!(cert, RankCertificate::NotKQuotient { .. }),
                    "k={k} a={a}"
                );
                assert!(cert.check(&s).unwrap());
            }
        }
    }
}

#[test]
fn witness_can_fall_inside_for_small_a() {
    // 2·a_5 = 196 = 5·33 + 31 = b_31, so this instance has no proof table.
    let (inst, s) = noquotient_family(5, 33).unwrap();
    assert!(s.contains(196));
    assert!(matches!(
        verify_noquotient_instance(&inst),
        Err(Error::VerificationFailed(_))
    ));
}

#[test]
fn nointersection_instances_verify() {
    for k in [2u32, 3] {
        let min = (k as u64) << k;
        for a in [min + 1, min + 3, min + 8, min + 20, min + 41] {
            let (inst, _) = nointersection_family(k, a, false).unwrap();
            let proof = verify_nointersection_instance(&inst).unwrap();
            assert_eq!(proof.threshold, (2 * k as u64 + 1) * a);
            assert_eq!(proof.table.len(), (1 << k) - 1);
        }
    }
}

#[test]
fn arithmetical_instances_have_pm_orderings() {
    for a in 2..25u64 {
        for d in 1..15u64 {
            for k in 1..6u64 {
                let Ok(s) = arithmetical_family(a, d, k) else {
                    continue;
                };
                if s.embedding_dimension() >= 2 {
                    assert!(pm_ordering(&s).is_some(), "{s}");
                }
            }
        }
    }
}

#[test]
fn generalized_family_parameters() {
    let s = generalized_arithmetical_family(7, 2, 3, 3).unwrap();
    assert_eq!(s.min_gens(), &[7, 17, 20, 23]);
    assert_eq!(
        generalized_arithmetical_family(6, 1, 4, 2),
        Err(Error::NotCoprime(6, 4))
    );
}
