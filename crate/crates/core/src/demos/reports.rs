use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Signed;

use super::examples::{sqrt2_pair, rtp_valuation, standard_conditionals};
use super::printer::{printer_joint, printer_single, CoinSequence};
use crate::conditioning::{
    bayes_invariant, conditional_quasi, relative_preprob, relative_quasi, total_quasi, CellData,
    LocalPreProb,
};
use crate::error::{Error, Result};
use crate::lattice::{Partition, Universe};
use crate::valuation::QuasiProb;
use crate::values::{int, rat, sv_sign, zero, GaugeMap, Rational, SemValue};

/// Horizon of the printer demos.
pub const PRINTER_HORIZON: u64 = 1 << 20;

/// Tail gaps of the printer frequencies at [`PRINTER_HORIZON`], fixed by an
/// independent simulation.
pub const SINGLE_ZERO_GAP: (i64, i64) = (262_145, 1_572_864);
pub const JOINT_00_GAP: (i64, i64) = (174_763, 1_048_575);
pub const JOINT_11_GAP: (i64, i64) = (91_626_318_507, 549_754_765_312);

/// Tolerance on the joint printer's column marginals.
pub const MARGINAL_TOLERANCE: (i64, i64) = (1, 100);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemoRow {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemoReport {
    pub name: String,
    pub rows: Vec<DemoRow>,
}

impl DemoReport {
    fn new(name: &str) -> Self {
        DemoReport {
            name: name.into(),
            rows: Vec::new(),
        }
    }

    fn row(&mut self, label: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>) {
        let (expected, computed) = (expected.into(), computed.into());
        self.rows.push(DemoRow {
            label: label.into(),
            matches: expected == computed,
            expected,
            computed,
        });
    }

    fn check(&mut self, label: impl Into<String>, holds: bool) {
        self.row(label, "true", if holds { "true" } else { "false" });
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }
}

fn show<T: ToString>(r: Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => e.name().into(),
    }
}

fn ev(u: &Universe, e: &str) -> crate::lattice::Statement {
    u.event(e).expect("well-formed event")
}

/// Marginals and conditionals of the two-variable example, and the failure
/// of quasi-probabilistic conditioning on A=0.
pub fn demo_standard_conditionals() -> Result<DemoReport> {
    let q = standard_conditionals();
    let u = q.universe().clone();
    let mut report = DemoReport::new("standard-conditionals");
    for (e, want) in [("A=0", "0"), ("A=1", "1"), ("B=0", "9/10"), ("B=1", "1/10")] {
        report.row(format!("Q({e})"), want, show(q.eval(ev(&u, e))));
    }
    for (s, t, want) in [
        ("A=0", "B=0", "1/3"),
        ("A=1", "B=0", "2/3"),
        ("B=0", "A=1", "3/5"),
        ("B=1", "A=1", "2/5"),
    ] {
        let value = conditional_quasi(&q, ev(&u, s), ev(&u, t));
        report.row(format!("Q({s}|{t})"), want, show(value));
    }
    let a0 = ev(&u, "A=0");
    report.row(
        "Q(·|A=0)",
        "RelativisationUnstable",
        show(relative_quasi(&q, a0).map(|_| "defined")),
    );
    let local = relative_preprob(&q.to_preprob(), a0)?;
    let shown: Vec<String> = local.values().iter().map(|v| local.basis().format_value(v)).collect();
    report.row("R(·|A=0) on (A=0,B=0), (A=0,B=1)", "3/10, -3/10", shown.join(", "));
    Ok(report)
}

fn by_a(u: &Universe) -> Partition {
    Partition::of_top(vec![ev(u, "A=0"), ev(u, "A=1")]).expect("cells cover ⊤")
}

fn by_b(u: &Universe) -> Partition {
    Partition::of_top(vec![ev(u, "B=0"), ev(u, "B=1")]).expect("cells cover ⊤")
}

fn stable_terms(q: &QuasiProb, target: &str, cells: &[&str]) -> Result<Rational> {
    let u = q.universe();
    cells.iter().try_fold(zero(), |acc, c| {
        let c = ev(u, c);
        Ok(acc + conditional_quasi(q, ev(u, target), c)? * q.eval(c)?)
    })
}

/// The total rule over the cells A=0, A=1 in its stable, mixed and
/// invariant forms.
pub fn demo_rtp(case: u8) -> Result<DemoReport> {
    let q = rtp_valuation(case).ok_or_else(|| Error::UnknownDemo(format!("rtp-{case}")))?;
    let u = q.universe().clone();
    let mut report = DemoReport::new(&format!("rtp-{case}"));
    let cells = by_a(&u);
    match case {
        1 => {
            let data = [CellData::derive(&q, cells.cells()[0])?, CellData::derive(&q, cells.cells()[1])?];
            report.row("cells over A", "stable, stable", format!("{}, {}", data[0].kind(), data[1].kind()));
            for i in ["0", "1"] {
                let b = format!("B={i}");
                let want = q.eval(ev(&u, &b))?.to_string();
                report.row(format!("Q({b}) by total rule"), want.clone(), total_quasi(&cells, &data, ev(&u, &b))?.to_string());
                report.row(format!("Q({b}|A=0)Q(A=0) + Q({b}|A=1)Q(A=1)"), want, stable_terms(&q, &b, &["A=0", "A=1"])?.to_string());
            }
            let cells_b = by_b(&u);
            let data_b = [CellData::derive(&q, cells_b.cells()[0])?, CellData::derive(&q, cells_b.cells()[1])?];
            for i in ["0", "1"] {
                let a = format!("A={i}");
                let want = q.eval(ev(&u, &a))?.to_string();
                report.row(format!("Q({a}) by total rule"), want.clone(), total_quasi(&cells_b, &data_b, ev(&u, &a))?.to_string());
                report.row(format!("Q({a}|B=0)Q(B=0) + Q({a}|B=1)Q(B=1)"), want, stable_terms(&q, &a, &["B=0", "B=1"])?.to_string());
            }
        }
        2 => {
            let a1 = ev(&u, "A=1");
            let anchor = ev(&u, "A=1,B=1");
            report.row("Q(A=1)", "0", q.eval(a1)?.to_string());
            report.row("Q(A=1,B=1)", "1/5", q.eval(anchor)?.to_string());
            report.row("Q(·|A=1)", "RelativisationUnstable", show(relative_quasi(&q, a1).map(|_| "defined")));
            // the A=1 cell as seen in some other gauge: −7 times the ambient values
            let ambient = relative_preprob(&q.to_preprob(), a1)?;
            let local = LocalPreProb::new(
                u.clone(),
                a1,
                ambient.basis().clone(),
                ambient.values().iter().map(|v| v.scale(&int(-7))).collect(),
            )?;
            let anchor_ambient = q.eval(anchor)?;
            let data = [
                CellData::derive(&q, cells.cells()[0])?,
                CellData::unstable(local.clone(), anchor, anchor_ambient.clone())?,
            ];
            report.row("cells over A", "stable, unstable", format!("{}, {}", data[0].kind(), data[1].kind()));
            let reference = local.eval(anchor)?;
            for i in ["0", "1"] {
                let b = format!("B={i}");
                let s = ev(&u, &b);
                let want = q.eval(s)?.to_string();
                report.row(format!("Q({b}) by mixed rule"), want.clone(), total_quasi(&cells, &data, s)?.to_string());
                let display = stable_terms(&q, &b, &["A=0"])?
                    + local.conditional(s)?.ratio(&reference)? * &anchor_ambient;
                report.row(format!("Q({b}|A=0)Q(A=0) + R({b}|A=1)Q(A=1,B=1)/R(B=1|A=1)"), want, display.to_string());
            }
        }
        _ => {
            let a1 = ev(&u, "A=1");
            for e in ["A=1", "A=1,B=0", "A=1,B=1"] {
                report.row(format!("Q({e})"), "0", q.eval(ev(&u, e))?.to_string());
            }
            let data = [CellData::derive(&q, cells.cells()[0])?, CellData::derive(&q, a1)?];
            report.row("cells over A", "stable, invariant", format!("{}, {}", data[0].kind(), data[1].kind()));
            for i in ["0", "1"] {
                let b = format!("B={i}");
                let s = ev(&u, &b);
                let want = conditional_quasi(&q, s, ev(&u, "A=0"))?.to_string();
                report.row(format!("Q({b}) = Q({b}|A=0)"), want.clone(), q.eval(s)?.to_string());
                report.row(format!("Q({b}) by total rule"), want, total_quasi(&cells, &data, s)?.to_string());
            }
            report.row("Q(B=1|A=1) on the invariant cell", "0", bayes_invariant().to_string());
        }
    }
    Ok(report)
}

/// A two-atom valuation with irrational values: dimension, basis split,
/// a gauge and a sign decision.
pub fn demo_sqrt2_pair() -> Result<DemoReport> {
    let p = sqrt2_pair();
    let u = p.universe().clone();
    let b = p.basis().clone();
    let fmt = |v: &SemValue| b.format_value(v);
    let mut report = DemoReport::new("sqrt2-pair");
    report.row("P(a)", "1/2 - 1/10*sqrt2", fmt(&p.eval(u.atom(0))?));
    report.row("P(⊤)", "1", fmt(&p.top_value()));
    report.row("semantic dimension", "2", p.semantic_dimension().to_string());
    let comps = p.components_basis();
    let atoms = |r: &crate::valuation::PreProb| {
        r.atomic().iter().map(|v| b.format_value(v)).collect::<Vec<_>>().join(", ")
    };
    report.row("rational part on a, b", "1/2, 1/2", atoms(&comps[0]));
    report.row("irrational part on a, b", "-1/10*sqrt2, 1/10*sqrt2", atoms(&comps[1]));
    report.row("irrational part at ⊤", "0", fmt(&comps[1].top_value()));
    let frame = p.canonical_frame(true)?;
    let names: Vec<String> = frame.statements().iter().map(|s| u.display(*s)).collect();
    report.row("canonical frame with ⊤", "⊤, a", names.join(", "));
    let gauge = GaugeMap::diagonal(vec![int(1), int(2)])?;
    let gauged = p.apply_gauge(&gauge)?;
    let pa = gauged.eval(u.atom(0))?;
    report.row("P'(a) under diag(1, 2)", "1/2 - 1/5*sqrt2", fmt(&pa));
    report.row("P'(⊤) under diag(1, 2)", "1", fmt(&gauged.top_value()));
    report.row("sign of P'(a)", "Positive", format!("{:?}", sv_sign(&pa, &b)?));
    Ok(report)
}

/// The single printer under the power-of-two coin: the 0-frequency stays
/// above 1/2 and keeps oscillating.
pub fn demo_printer_single() -> Result<DemoReport> {
    let mut report = DemoReport::new("printer-single");
    let x = printer_single(CoinSequence::X, 10_000)?;
    report.row("coin x: freq of 0 at n = 10^4", "1/2", x.freq(10_000)?.to_string());
    let y = printer_single(CoinSequence::Y, PRINTER_HORIZON)?;
    report.check("coin y: freq of 0 > 1/2 for every n", y.stays_above(1, 2, 1));
    let tail = y.tail()?;
    report.row("coin y: tail minimum", "2/3", tail.min.to_string());
    report.row("coin y: tail maximum", "436907/524288", tail.max.to_string());
    let oracle = rat(SINGLE_ZERO_GAP.0, SINGLE_ZERO_GAP.1);
    report.row("coin y: tail gap", oracle.to_string(), tail.gap().to_string());
    Ok(report)
}

/// The two-column printer under the power-of-two coin: column marginals
/// settle at 1/2 while joint frequencies keep oscillating.
pub fn demo_printer_joint() -> Result<DemoReport> {
    let mut report = DemoReport::new("printer-joint");
    let series = printer_joint(CoinSequence::Y, PRINTER_HORIZON)?;
    let tolerance = rat(MARGINAL_TOLERANCE.0, MARGINAL_TOLERANCE.1);
    let half = rat(1, 2);
    for (k, m) in series.marginal_zero.iter().enumerate() {
        let tail = m.tail()?;
        let deviation = core::cmp::max((&tail.max - &half).abs(), (&half - &tail.min).abs());
        report.check(format!("column {}: tail |freq of 0 − 1/2| ≤ 1/100", k + 1), deviation <= tolerance);
    }
    for (k, label, gap) in [(0usize, "(0,0)", JOINT_00_GAP), (3, "(1,1)", JOINT_11_GAP)] {
        let tail = series.joint[k].tail()?;
        report.row(format!("joint {label}: tail gap"), rat(gap.0, gap.1).to_string(), tail.gap().to_string());
    }
    let x = printer_joint(CoinSequence::X, 10_000)?;
    let finals: Vec<String> = x.joint.iter().map(|s| s.freq(10_000).map(|f| f.to_string())).collect::<Result<_>>()?;
    report.row("coin x: joint freqs at n = 10^4", "0, 1/2, 1/2, 0", finals.join(", "));
    Ok(report)
}
