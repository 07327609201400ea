use nsq_core::explore::{
    box_experiment, enumerate_fixed, rank_census, BoxModelParams, ExperimentRecord, Sampler,
};
use nsq_core::rank::full_rank_certificate;
use nsq_core::{RankCertificate, SearchBudget};

fn params(n: usize, trials: u64, seed: u64) -> BoxModelParams {
    BoxModelParams {
        n,
        bound: 10,
        trials,
        seed,
        coprime_only: false,
    }
}

fn run_with_threads(threads: usize, p: &BoxModelParams, bounds: &[u64]) -> Vec<ExperimentRecord> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(|| box_experiment(p, bounds, Sampler::Random).unwrap())
}

#[test]
fn records_do_not_depend_on_thread_count() {
    let p = params(3, 500, 7);
    let one = run_with_threads(1, &p, &[50, 500]);
    let four = run_with_threads(4, &p, &[50, 500]);
    assert_eq!(one, four);
    for r in &one {
        assert_eq!(r.count_a + r.count_full_rank, r.trials);
    }
}

#[test]
fn exhaustive_small_boxes_match_divisibility() {
    for bound in 1..=12u64 {
        let rec = &box_experiment(&params(2, 1, 0), &[bound], Sampler::Exhaustive).unwrap()[0];
        let expected = (1..=bound)
            .flat_map(|a| (1..=bound).map(move |b| (a, b)))
            .filter(|&(a, b)| a % b == 0 || b % a == 0)
            .count() as u64;
        assert_eq!(rec.trials, bound * bound);
        assert_eq!(rec.count_a, expected, "M = {bound}");
    }
}

#[test]
fn estimates_do_not_increase_across_decades() {
    for n in [2usize, 3] {
        let recs =
            box_experiment(&params(n, 2000, 11), &[100, 1000, 10_000], Sampler::Random).unwrap();
        for w in recs.windows(2) {
            let slack =
                2.0 * ((w[0].wilson_hi - w[0].wilson_lo) + (w[1].wilson_hi - w[1].wilson_lo)) / 2.0;
            assert!(
                w[1].p_a <= w[0].p_a + slack,
                "n={n}: {} then {}",
                w[0].p_a,
                w[1].p_a
            );
        }
    }
}

#[test]
fn coprime_filter_keeps_only_primitive_draws() {
    let p = BoxModelParams {
        coprime_only: true,
        ..params(2, 200, 3)
    };
    for t in 0..200 {
        let (draws, s) = nsq_core::explore::sample_box(&p, t).unwrap();
        assert_eq!(num_integer::gcd(draws[0], draws[1]), 1);
        assert!(s.is_primitive());
    }
}

#[test]
fn med_semigroups_are_never_full_rank() {
    for m in 3..=6u32 {
        for g in (m - 1)..=10 {
            for s in enumerate_fixed(m, g).unwrap() {
                if s.is_med() {
                    assert!(!matches!(
                        full_rank_certificate(&s).unwrap(),
                        RankCertificate::FullRank { .. }
                    ));
                }
            }
        }
    }
}

#[test]
fn census_bounds_are_consistent() {
    let population = enumerate_fixed(4, 7).unwrap();
    let census = rank_census(&population, &SearchBudget::default());
    assert_eq!(census.rows.len(), population.len());
    for (row, s) in census.rows.iter().zip(&population) {
        assert_eq!(row.gens, s.min_gens());
        assert!(row.bounds.lower <= row.bounds.upper);
        assert!(row.bounds.lower_certificate.check(s).unwrap());
        assert!(row.bounds.upper_certificate.check(s).unwrap());
        if row.med {
            assert!(row.bounds.upper <= 3);
        }
    }
}
