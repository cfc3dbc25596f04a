use runforge::parallel;
use runforge_core::anneal::{anneal_max_trl, AnnealConfig};
use runforge_core::extremal::{tau_exhaustive, Mode};
use runforge_core::Alphabet;

#[test]
fn tau_does_not_depend_on_worker_count() {
    let ternary = Alphabet::new(3).unwrap();
    for (n, alphabet) in [(14, Alphabet::BINARY), (17, Alphabet::BINARY), (8, ternary)] {
        for mode in [Mode::Max, Mode::Min] {
            let serial = tau_exhaustive(n, alphabet, mode).unwrap();
            for jobs in [1, 2, 7] {
                assert_eq!(
                    parallel::tau_exhaustive(n, alphabet, mode, jobs).unwrap(),
                    serial,
                    "n {n}, jobs {jobs}"
                );
            }
        }
    }
}

#[test]
fn anneal_does_not_depend_on_worker_count() {
    let mut config = AnnealConfig::new(14, 7);
    config.iterations = 5_000;
    config.restarts = 6;
    let serial = anneal_max_trl(&config).unwrap();
    for jobs in [1, 3, 8] {
        assert_eq!(parallel::anneal_max_trl(&config, jobs).unwrap(), serial);
    }
}

#[test]
fn tau_is_monotone() {
    let values: Vec<u64> = (1..=18)
        .map(|n| parallel::tau_exhaustive(n, Alphabet::BINARY, Mode::Max, 2).unwrap().value)
        .collect();
    assert!(values.windows(2).all(|w| w[0] <= w[1]), "{values:?}");
}
