use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use super::random;
use super::report::{CheckReport, Counterexample};
use crate::valuation::PreProb;
use crate::values::{int, GaugeMap, IndependentSet, Rational, SemValue};

const NAME: &str = "frame-lemma";

/// A gauge that is the identity on the span of `fixed` and otherwise
/// random.
pub fn gauge_fixing<R: Rng>(rng: &mut R, fixed: &[SemValue], dim: usize) -> GaugeMap {
    let mut set = IndependentSet::new();
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    for v in fixed {
        if set.insert(v.coeffs()) {
            columns.push(v.coeffs().to_vec());
        }
    }
    let f = columns.len();
    for j in 0..dim {
        let e = SemValue::along(dim, j, int(1));
        if set.insert(e.coeffs()) {
            columns.push(e.into_coeffs());
        }
    }
    let b = GaugeMap::new((0..dim).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect())
        .expect("columns form a basis");
    // block upper-triangular: identity on the fixed span, 2 on the rest
    let t = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|k| match (i < f, k < f) {
                    (_, true) => int((i == k) as i64),
                    (true, false) => random::small_rational(rng),
                    (false, false) => int(2 * (i == k) as i64),
                })
                .collect()
        })
        .collect();
    let t = GaugeMap::new(t).expect("triangular with nonzero diagonal");
    b.compose(&t)
        .and_then(|bt| bt.compose(&b.inverse()))
        .expect("dimensions agree")
}

fn violation(r: &PreProb, seed: u64) -> Option<String> {
    let mut rng = random::rng(seed);
    let gauge = random::gauge(&mut rng, r.dim());
    violation_for(r, &gauge, &mut rng)
}

fn violation_for<R: Rng>(r: &PreProb, gauge: &GaugeMap, rng: &mut R) -> Option<String> {
    let gauged = r.apply_gauge(gauge).ok()?;

    let mut tops = alloc::vec![false];
    if !r.top_value().is_zero() {
        tops.push(true);
    }
    for include_top in tops {
        let f = r.canonical_frame(include_top).expect("top checked");
        let g = gauged.canonical_frame(include_top).expect("gauges keep ⊤ nonzero");
        if f.statement_set() != g.statement_set() {
            return Some(format!("canonical frames differ (include_top = {include_top})"));
        }
        if f.values().iter().chain(g.values()).any(SemValue::is_zero) {
            return Some("a frame statement has value zero".into());
        }
    }
    if r.semantic_dimension() != gauged.semantic_dimension() {
        return Some("semantic dimension changed".into());
    }

    let frame = r.canonical_frame(false).expect("no top requested");
    let agrees_on_frame = |other: &PreProb| {
        frame
            .statements()
            .iter()
            .all(|s| other.eval(*s).ok().as_ref() == r.eval(*s).ok().as_ref())
    };
    if agrees_on_frame(&gauged) && gauged != *r {
        return Some("agreement on the frame without global agreement".into());
    }
    let fixing = gauge_fixing(rng, frame.values(), r.dim());
    let fixed = r.apply_gauge(&fixing).expect("dimensions agree");
    if !agrees_on_frame(&fixed) || fixed != *r {
        return Some("a gauge fixing the frame values moved another value".into());
    }
    None
}

/// For each seeded gauge `A`: `R` and `A∘R` share their canonical frames,
/// no frame statement is zero, the dimension is unchanged, and agreeing on
/// a frame forces agreement everywhere.
pub fn check_frame_lemma(r: &PreProb, seeds: &[u64]) -> CheckReport {
    for (k, &seed) in seeds.iter().enumerate() {
        if let Some(note) = violation(r, seed) {
            return CheckReport::fail(NAME, k as u64 + 1, Counterexample::Seed(seed), note);
        }
    }
    CheckReport::pass(NAME, seeds.len() as u64)
}

/// The same checks for explicitly given gauges. A counterexample carries
/// the index of the failing gauge.
pub fn check_frame_gauges(r: &PreProb, gauges: &[GaugeMap]) -> CheckReport {
    for (k, gauge) in gauges.iter().enumerate() {
        if gauge.dim() != r.dim() {
            return CheckReport::fail(NAME, k as u64 + 1, Counterexample::Seed(k as u64), "gauge has the wrong size".into());
        }
        if let Some(note) = violation_for(r, gauge, &mut random::rng(k as u64)) {
            return CheckReport::fail(NAME, k as u64 + 1, Counterexample::Seed(k as u64), note);
        }
    }
    CheckReport::pass(NAME, gauges.len() as u64)
}

/// Re-runs the failing seed of a frame-lemma report.
pub fn replay_frame_lemma(r: &PreProb, report: &CheckReport) -> bool {
    match report.counterexample {
        Some(Counterexample::Seed(seed)) => violation(r, seed).is_some(),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Universe;
    use crate::values::{rat, Basis};
    use alloc::vec;

    #[test]
    fn fixing_gauge_fixes_the_span() {
        let mut rng = random::rng(5);
        let fixed = [SemValue::new(vec![int(1), int(1), int(0)])];
        for _ in 0..20 {
            let g = gauge_fixing(&mut rng, &fixed, 3);
            assert_eq!(g.apply(&fixed[0]).unwrap(), fixed[0]);
            assert_ne!(g, GaugeMap::identity(3));
        }
    }

    #[test]
    fn irrational_example_passes() {
        let basis = Basis::rational().with_symbol("sqrt2", None).unwrap();
        let p = PreProb::new(
            Universe::letters(2).unwrap(),
            basis,
            vec![SemValue::new(vec![rat(1, 2), rat(-1, 10)]), SemValue::new(vec![rat(1, 2), rat(1, 10)])],
        )
        .unwrap();
        let seeds: Vec<u64> = (0..20).collect();
        assert!(check_frame_lemma(&p, &seeds).passed());
        let gauges = [GaugeMap::diagonal(vec![int(1), int(2)]).unwrap(), GaugeMap::identity(2)];
        assert!(check_frame_gauges(&p, &gauges).passed());
        assert!(!check_frame_gauges(&p, &[GaugeMap::identity(3)]).passed());
    }

    #[test]
    fn random_sweep_passes() {
        let mut rng = random::rng(1);
        for _ in 0..10 {
            let r = random::preprob(&mut rng, 4, 2);
            let seeds: Vec<u64> = (0..20).collect();
            let report = check_frame_lemma(&r, &seeds);
            assert!(report.passed(), "{:?}", report.note);
            assert!(!replay_frame_lemma(&r, &report));
        }
    }
}
