//! Worked examples and the printer experiments, with expected values
//! checked inline.

mod examples;
mod printer;
mod reports;

pub use examples::{ab_universe, sqrt2_pair, rtp_valuation, sqrt2_basis, standard_conditionals};
pub use printer::{
    coin_seq_x, coin_seq_y, printer_joint, printer_single, Coin, CoinSequence, FrequencySeries,
    JointSeries, TailWindow, MAX_HORIZON,
};
pub use reports::{
    demo_sqrt2_pair, demo_printer_joint, demo_printer_single, demo_rtp, demo_standard_conditionals,
    DemoReport, DemoRow, JOINT_00_GAP, JOINT_11_GAP, MARGINAL_TOLERANCE, PRINTER_HORIZON,
    SINGLE_ZERO_GAP,
};

use crate::error::{Error, Result};

pub const DEMO_NAMES: [&str; 7] = [
    "standard-conditionals",
    "rtp-1",
    "rtp-2",
    "rtp-3",
    "sqrt2-pair",
    "printer-single",
    "printer-joint",
];

pub fn run_demo(name: &str) -> Result<DemoReport> {
    match name {
        "standard-conditionals" => demo_standard_conditionals(),
        "rtp-1" => demo_rtp(1),
        "rtp-2" => demo_rtp(2),
        "rtp-3" => demo_rtp(3),
        "sqrt2-pair" => demo_sqrt2_pair(),
        "printer-single" => demo_printer_single(),
        "printer-joint" => demo_printer_joint(),
        other => Err(Error::UnknownDemo(other.into())),
    }
}
