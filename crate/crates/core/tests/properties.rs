use proptest::prelude::*;

use quasiprob_core::conditioning::{
    conditional_quasi, reconstruct_preprob, relative_preprob, synchronize, total_preprob,
    total_quasi, CellData, FrameAssignment,
};
use quasiprob_core::values::{int, GaugeMap};
use quasiprob_core::verify::{check_additivity, check_frame_gauges, check_levels, check_negation, random};
use quasiprob_core::{PreProb, Rational};

fn valuation() -> impl Strategy<Value = (u64, PreProb)> {
    (any::<u64>(), 1usize..=5, 1usize..=3).prop_map(|(seed, n, dim)| {
        let mut rng = random::rng(seed);
        (seed, random::preprob(&mut rng, n, dim))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn additivity_negation_levels((_, r) in valuation()) {
        prop_assert!(check_additivity(&r).unwrap().passed());
        prop_assert!(check_negation(&r).unwrap().passed());
        prop_assert!(check_levels(&r).unwrap().passed());
    }

    #[test]
    fn gauges_preserve_frames((seed, r) in valuation()) {
        let mut rng = random::rng(seed ^ 1);
        let gauges: Vec<GaugeMap> = (0..4).map(|_| random::gauge(&mut rng, r.dim())).collect();
        prop_assert!(check_frame_gauges(&r, &gauges).passed());
    }

    #[test]
    fn frame_components_sum_back((_, r) in valuation()) {
        let frame = r.canonical_frame(!r.top_value().is_zero()).unwrap();
        prop_assert_eq!(frame.len(), r.semantic_dimension());
        let zero = PreProb::zero(r.universe().clone(), r.basis().clone());
        let sum = r
            .components_frame(&frame)
            .unwrap()
            .iter()
            .try_fold(zero, |acc, c| acc.checked_add(c))
            .unwrap();
        prop_assert_eq!(sum, r);
    }

    #[test]
    fn canonical_split_reconstructs(seed in any::<u64>(), n in 1usize..=5, dim in 1usize..=3) {
        let mut rng = random::rng(seed);
        let r = random::preprob_nonzero_top(&mut rng, n, dim);
        let split = r.canonical_split().unwrap();
        prop_assert_eq!(split.quasi.eval(r.universe().top()).unwrap(), int(1));
        prop_assert!(split.residuals.iter().all(|c| c.top_value().is_zero()));
        prop_assert_eq!(split.reconstruct(&r).unwrap(), r);
    }

    #[test]
    fn scalar_gauge_leaves_quasi_unchanged(seed in any::<u64>(), n in 1usize..=5, c in -9i64..=9) {
        prop_assume!(c != 0);
        let mut rng = random::rng(seed);
        let r = random::preprob_nonzero_top(&mut rng, n, 1);
        let scaled = r.apply_gauge(&GaugeMap::scalar(1, int(c)).unwrap()).unwrap();
        prop_assert_eq!(scaled.to_quasi().unwrap(), r.to_quasi().unwrap());
    }

    #[test]
    fn conditional_constant_on_class(seed in any::<u64>(), n in 2usize..=5) {
        let mut rng = random::rng(seed);
        let q = random::quasi(&mut rng, n);
        let u = q.universe().clone();
        let t = random::statement(&mut rng, &u);
        prop_assume!(q.eval(t).unwrap() != int(0));
        for s in u.enumerate().unwrap() {
            let s2 = u.statement(s.bits() & t.bits() | (random::statement(&mut rng, &u).bits() & !t.bits())).unwrap();
            prop_assert_eq!(conditional_quasi(&q, s, t).unwrap(), conditional_quasi(&q, s2, t).unwrap());
        }
    }

    #[test]
    fn synchronisation_round_trip((seed, r) in valuation()) {
        let mut rng = random::rng(seed ^ 2);
        let gauged = r.apply_gauge(&random::gauge(&mut rng, r.dim())).unwrap();
        let t = random::statement(&mut rng, r.universe());
        prop_assume!(!t.is_bottom());
        let local = relative_preprob(&gauged, t).unwrap();
        let frame = FrameAssignment::from_ambient(&local, &r).unwrap();
        let synced = synchronize(&local, &frame).unwrap();
        let direct = relative_preprob(&r, t).unwrap();
        prop_assert_eq!(synced.values(), direct.values());
        let back = FrameAssignment::from_ambient(&local, &gauged).unwrap();
        let restored = synchronize(&synced, &back).unwrap();
        prop_assert_eq!(restored.values(), local.values());
    }

    #[test]
    fn total_rules_match_eval((seed, r) in valuation()) {
        let mut rng = random::rng(seed ^ 3);
        let cells = random::partition(&mut rng, r.universe());
        let locals: Vec<_> = cells
            .cells()
            .iter()
            .map(|&c| {
                let gauged = r.apply_gauge(&random::gauge(&mut rng, r.dim())).unwrap();
                let local = relative_preprob(&gauged, c).unwrap();
                let frame = FrameAssignment::from_ambient(&local, &r).unwrap();
                (local, frame)
            })
            .collect();
        prop_assert_eq!(&reconstruct_preprob(&cells, &locals).unwrap(), &r);
        let s = random::statement(&mut rng, r.universe());
        prop_assert_eq!(total_preprob(&cells, &locals, s).unwrap(), r.eval(s).unwrap());

        let q = random::quasi(&mut rng, r.universe().atom_count());
        let data: Vec<CellData> = cells.cells().iter().map(|&c| CellData::derive(&q, c).unwrap()).collect();
        let total: Rational = total_quasi(&cells, &data, s).unwrap();
        prop_assert_eq!(total, q.eval(s).unwrap());
    }
}
