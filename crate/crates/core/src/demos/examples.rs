use alloc::vec;

use crate::lattice::Universe;
use crate::valuation::{PreProb, QuasiProb};
use crate::values::{int, rat, Basis, Enclosure, SemValue};

/// Two binary variables, atoms in the order (A,B) = 00, 01, 10, 11.
pub fn ab_universe() -> Universe {
    Universe::product(&[2, 2], &["A", "B"]).expect("four atoms")
}

/// Joint values 3/10, −3/10, 3/5, 2/5: a quasi-probability with `Q(A=0) = 0`.
pub fn standard_conditionals() -> QuasiProb {
    QuasiProb::new(ab_universe(), vec![rat(3, 10), rat(-3, 10), rat(3, 5), rat(2, 5)])
        .expect("normalised")
}

/// The valuation behind each of the three cases of the total rule over the
/// cells A=0, A=1: both stable; A=1 unstable; A=1 invariant.
pub fn rtp_valuation(case: u8) -> Option<QuasiProb> {
    let atomic = match case {
        1 => vec![rat(1, 2), rat(-1, 5), rat(3, 10), rat(2, 5)],
        2 => vec![rat(3, 5), rat(2, 5), rat(-1, 5), rat(1, 5)],
        3 => vec![rat(1, 4), rat(3, 4), int(0), int(0)],
        _ => return None,
    };
    Some(QuasiProb::new(ab_universe(), atomic).expect("normalised"))
}

/// `{1, √2}` with √2 enclosed in [1414/1000, 1415/1000].
pub fn sqrt2_basis() -> Basis {
    Basis::rational()
        .with_symbol("sqrt2", Some(Enclosure::real(rat(1414, 1000), rat(1415, 1000))))
        .expect("fresh symbol")
}

/// Two atoms with values 1/2 − √2/10 and 1/2 + √2/10.
pub fn sqrt2_pair() -> PreProb {
    PreProb::new(
        Universe::letters(2).expect("two atoms"),
        sqrt2_basis(),
        vec![
            SemValue::new(vec![rat(1, 2), rat(-1, 10)]),
            SemValue::new(vec![rat(1, 2), rat(1, 10)]),
        ],
    )
    .expect("consistent")
}
