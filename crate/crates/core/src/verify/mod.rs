//! Brute-force checks of the calculus on explicit and random valuations.

mod frames;
pub mod random;
mod report;
mod representation;
mod stability;
mod table;

use alloc::vec::Vec;

use rand::Rng;

pub use frames::{check_frame_gauges, check_frame_lemma, gauge_fixing, replay_frame_lemma};
pub use report::{CheckReport, Counterexample, Verdict};
pub use representation::{check_representation, GaugeTable};
pub use stability::{check_stability_suite, engineered_unstable, replay_stability};
pub use table::{check_additivity, check_levels, check_negation, StatementTable, EXHAUSTIVE_ATOMS};

use crate::demos;
use crate::error::Result;
use crate::valuation::PreProb;
use crate::values::{rat, GaugeMap, SemValue};

fn named(mut report: CheckReport, prefix: &str) -> CheckReport {
    report.name = alloc::format!("{prefix}/{}", report.name);
    report
}

fn table_checks(r: &PreProb, prefix: &str, out: &mut Vec<CheckReport>) -> Result<()> {
    let table = StatementTable::from_preprob(r)?;
    out.push(named(table.check_additivity(), prefix));
    out.push(named(table.check_negation(), prefix));
    out.push(named(table.check_levels(), prefix));
    Ok(())
}

/// The full suite on the shipped examples and on random valuations drawn
/// from `root_seed`. Reports are sorted by name.
pub fn run_suite(root_seed: u64) -> Result<Vec<CheckReport>> {
    let mut seeds = random::rng(root_seed);
    let mut out = Vec::new();

    let standard = demos::standard_conditionals().to_preprob();
    let irrational = demos::sqrt2_pair();
    table_checks(&standard, "standard-conditionals", &mut out)?;
    table_checks(&irrational, "sqrt2-pair", &mut out)?;
    let uniform = PreProb::rational(
        crate::lattice::Universe::letters(5)?,
        &[rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5)],
    )?;
    table_checks(&uniform, "uniform", &mut out)?;

    let mut mutated = StatementTable::from_preprob(&standard)?;
    let s = standard.universe().atom(0);
    mutated.set(s, SemValue::rational(1, rat(1, 2)))?;
    let caught = !mutated.check_additivity().passed() && !mutated.check_negation().passed();
    out.push(if caught {
        CheckReport::pass("mutation/corrupted-table-detected", 2)
    } else {
        CheckReport::fail(
            "mutation/corrupted-table-detected",
            2,
            Counterexample::Statements(alloc::vec![s]),
            "a corrupted table passed".into(),
        )
    });

    for k in 0..8 {
        let n = seeds.random_range(3..=6);
        let dim = seeds.random_range(1..=3);
        let r = random::preprob(&mut seeds, n, dim);
        table_checks(&r, &alloc::format!("random-{k}"), &mut out)?;
        let gauge_seeds: Vec<u64> = (0..25).map(|_| seeds.random()).collect();
        out.push(named(check_frame_lemma(&r, &gauge_seeds), &alloc::format!("random-{k}")));
    }
    let gauges = [GaugeMap::diagonal(alloc::vec![rat(1, 1), rat(2, 1)])?, GaugeMap::identity(2)];
    out.push(named(check_frame_gauges(&irrational, &gauges), "sqrt2-pair"));

    let values: Vec<SemValue> = (0..=4).map(|k| SemValue::rational(1, rat(k, 4))).collect();
    let uniform4 = PreProb::rational(
        crate::lattice::Universe::letters(4)?,
        &[rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4)],
    )?;
    out.push(named(check_representation(&GaugeTable::identity(&values)?, &uniform4)?, "identity-table"));
    let transported = GaugeTable::new(
        [(2, 0), (0, 1), (4, 2), (1, 3), (3, 4)]
            .iter()
            .map(|&(x, y)| (values[x].clone(), values[y].clone()))
            .collect(),
    )?;
    out.push(named(check_representation(&transported, &uniform4)?, "transported-table"));

    out.push(check_stability_suite(seeds.random(), 200));
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}
