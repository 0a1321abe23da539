use proptest::prelude::*;
use speccover::convert::{cnf_to_decomposition, decomposition_to_cnf};
use speccover::covering::{all_coverings, find_covering, is_covering};
use speccover::io::{
    emit_dimacs, emit_sdec, emit_trace, parse_dimacs, parse_sdec, parse_trace,
    random_decomposition, random_instance, random_satisfied_by,
};
use speccover::transform::{generate_trace, generate_trace_extended, replay, replay_with};
use speccover::{sat, BoolTuple, CnfMatrix};

fn cnf() -> impl Strategy<Value = CnfMatrix> {
    (1usize..7, 1usize..7, any::<u64>())
        .prop_map(|(n, m, seed)| random_instance(n, m, seed, false).unwrap())
}

fn cells() -> impl Strategy<Value = (usize, usize, Vec<i8>)> {
    (1usize..5, 1usize..5).prop_flat_map(|(n, m)| {
        (Just(n), Just(m), prop::collection::vec(-1i8..=1, n * m))
    })
}

fn tuple(n: usize) -> impl Strategy<Value = BoolTuple> {
    prop::collection::vec(any::<bool>(), n).prop_map(BoolTuple::new)
}

/// Two functions sharing a planted tuple, with at least two clauses.
fn planted_pair() -> impl Strategy<Value = (CnfMatrix, CnfMatrix, BoolTuple)> {
    (1usize..7, 2usize..7).prop_flat_map(|(n, m)| {
        (tuple(n), any::<u64>(), any::<u64>()).prop_map(move |(sigma, a, b)| {
            let f = random_satisfied_by(m, &sigma, a).unwrap();
            let h = random_satisfied_by(m, &sigma, b).unwrap();
            (f, h, sigma)
        })
    })
}

proptest! {
    #[test]
    fn dimacs_round_trip(f in cnf()) {
        let text = emit_dimacs(&f);
        let back = parse_dimacs(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(emit_dimacs(&back), text);
    }

    #[test]
    fn sdec_round_trip(n in 1usize..7, m in 1usize..7, seed: u64) {
        let d = random_decomposition(n, m, seed).unwrap();
        let text = emit_sdec(&d);
        prop_assert_eq!(parse_sdec(&text).unwrap(), d);
    }

    #[test]
    fn conversions_invert(f in cnf()) {
        prop_assert_eq!(decomposition_to_cnf(&cnf_to_decomposition(&f)), f);
    }

    #[test]
    fn from_cells_accepts_exactly_valid_grids((n, m, g) in cells()) {
        let rows_ok = g.chunks(n).all(|r| r.iter().any(|&c| c != 0));
        let cols_ok = (0..n).all(|i| (0..m).any(|j| g[j * n + i] != 0));
        prop_assert_eq!(CnfMatrix::from_cells(n, m, g).is_ok(), rows_ok && cols_ok);
    }

    #[test]
    fn satisfaction_is_covering(f in cnf(), bits: u64) {
        let t = BoolTuple::from_index(f.n(), bits);
        let d = cnf_to_decomposition(&f);
        prop_assert_eq!(sat::evaluate(&f, &t).unwrap(), is_covering(&d, &t).unwrap());
    }

    #[test]
    fn pruning_keeps_every_covering(n in 1usize..7, m in 1usize..7, seed: u64) {
        let d = random_decomposition(n, m, seed).unwrap();
        let plain = all_coverings(&d, false);
        prop_assert_eq!(&all_coverings(&d, true), &plain);
        prop_assert_eq!(find_covering(&d, true).is_some(), !plain.is_empty());
    }

    #[test]
    fn generated_traces_stay_valid((f, h, sigma) in planted_pair()) {
        let trace = generate_trace(&f, &h, &sigma).unwrap();
        let mut states = 0;
        let end = replay_with(&f, &trace, |_, d, t| {
            assert!(d.check().is_ok());
            assert!(d.covered_by(t));
            states += 1;
        })
        .unwrap();
        prop_assert_eq!(end, h);
        prop_assert_eq!(states, trace.len() + 1);
    }

    #[test]
    fn trace_text_round_trip((f, h, sigma) in planted_pair()) {
        let trace = generate_trace(&f, &h, &sigma).unwrap();
        let back = parse_trace(&emit_trace(&trace)).unwrap();
        prop_assert_eq!(&back.steps, &trace.steps);
        prop_assert_eq!(&back.sigma, &trace.sigma);
    }

    #[test]
    fn extended_traces_end_at_target(
        (n, m) in (1usize..6, 2usize..6),
        seeds: (u64, u64),
        bits: (u64, u64),
    ) {
        let sigma = BoolTuple::from_index(n, bits.0);
        let delta = BoolTuple::from_index(n, bits.1);
        let f = random_satisfied_by(m, &sigma, seeds.0).unwrap();
        let h = random_satisfied_by(m, &delta, seeds.1).unwrap();
        let trace = generate_trace_extended(&f, &sigma, &h, &delta).unwrap();
        prop_assert_eq!(replay(&f, &trace).unwrap(), h);
        prop_assert_eq!(trace.final_tuple(), delta);
    }
}
