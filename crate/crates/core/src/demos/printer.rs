use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::values::{rat, Rational};

/// Largest simulated horizon.
pub const MAX_HORIZON: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coin {
    Head,
    Tail,
}

/// Always tails.
pub fn coin_seq_x(n: u64) -> Result<Coin> {
    if n == 0 {
        return Err(Error::ZeroTime);
    }
    Ok(Coin::Tail)
}

/// Heads exactly at powers of two, including `n = 1`.
pub fn coin_seq_y(n: u64) -> Result<Coin> {
    if n == 0 {
        return Err(Error::ZeroTime);
    }
    Ok(if n.is_power_of_two() { Coin::Head } else { Coin::Tail })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoinSequence {
    X,
    Y,
}

impl CoinSequence {
    pub fn at(self, n: u64) -> Result<Coin> {
        match self {
            CoinSequence::X => coin_seq_x(n),
            CoinSequence::Y => coin_seq_y(n),
        }
    }
}

/// Prefix counts of one symbol: `count(n)` among the first `n` prints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencySeries {
    counts: Vec<u32>,
}

/// Extremes of a frequency over a window of prefix lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailWindow {
    pub from: u64,
    pub to: u64,
    pub min: Rational,
    pub max: Rational,
}

impl TailWindow {
    pub fn gap(&self) -> Rational {
        &self.max - &self.min
    }
}

impl FrequencySeries {
    fn with_capacity(horizon: u64) -> Self {
        let mut counts = Vec::with_capacity(horizon as usize + 1);
        counts.push(0);
        FrequencySeries { counts }
    }

    fn record(&mut self, hit: bool) {
        let last = *self.counts.last().expect("starts at 0");
        self.counts.push(last + hit as u32);
    }

    pub fn horizon(&self) -> u64 {
        self.counts.len() as u64 - 1
    }

    pub fn count(&self, n: u64) -> u64 {
        self.counts[n as usize] as u64
    }

    /// `count(n)/n` for `1 ≤ n ≤ horizon`.
    pub fn freq(&self, n: u64) -> Result<Rational> {
        if n == 0 {
            return Err(Error::ZeroTime);
        }
        if n > self.horizon() {
            return Err(Error::HorizonTooLarge(n));
        }
        Ok(rat(self.count(n) as i64, n as i64))
    }

    /// Exact extremes of `freq(n)` for `from ≤ n ≤ to`.
    pub fn window(&self, from: u64, to: u64) -> Result<TailWindow> {
        if from == 0 {
            return Err(Error::ZeroTime);
        }
        if to > self.horizon() || from > to {
            return Err(Error::HorizonTooLarge(to));
        }
        // fractions compared by cross-multiplication; counts fit in u32
        let less = |a: (u64, u64), b: (u64, u64)| a.0 * b.1 < b.0 * a.1;
        let mut lo = (self.count(from), from);
        let mut hi = lo;
        for n in from + 1..=to {
            let f = (self.count(n), n);
            if less(f, lo) {
                lo = f;
            }
            if less(hi, f) {
                hi = f;
            }
        }
        Ok(TailWindow {
            from,
            to,
            min: rat(lo.0 as i64, lo.1 as i64),
            max: rat(hi.0 as i64, hi.1 as i64),
        })
    }

    /// The window `[horizon/4, horizon]`.
    pub fn tail(&self) -> Result<TailWindow> {
        let h = self.horizon();
        self.window((h / 4).max(1), h)
    }

    /// True iff `count(n)/n > p/q` for every `from ≤ n ≤ horizon`.
    pub fn stays_above(&self, p: u64, q: u64, from: u64) -> bool {
        (from.max(1)..=self.horizon()).all(|n| self.count(n) as u128 * q as u128 > p as u128 * n as u128)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    A,
    B,
}

fn run(coin: CoinSequence, horizon: u64, mut print: impl FnMut(State, u64)) -> Result<()> {
    if horizon > MAX_HORIZON {
        return Err(Error::HorizonTooLarge(horizon));
    }
    if horizon == 0 {
        return Err(Error::ZeroTime);
    }
    let mut state = State::A;
    for t in 1..=horizon {
        if coin.at(t)? == Coin::Head {
            state = match state {
                State::A => State::B,
                State::B => State::A,
            };
        }
        print(state, t);
    }
    Ok(())
}

/// One symbol per second: state A prints 0 at even `t` and 1 at odd `t`,
/// state B always prints 0. Returns the prefix frequencies of 0.
pub fn printer_single(coin: CoinSequence, horizon: u64) -> Result<FrequencySeries> {
    let mut zeros = FrequencySeries::with_capacity(horizon);
    run(coin, horizon, |state, t| {
        let symbol = match state {
            State::A => (t % 2) as u8,
            State::B => 0,
        };
        zeros.record(symbol == 0);
    })?;
    Ok(zeros)
}

/// Frequencies of the two-column printer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointSeries {
    /// Symbols (0,0), (0,1), (1,0), (1,1).
    pub joint: [FrequencySeries; 4],
    /// 0 in the first and in the second column.
    pub marginal_zero: [FrequencySeries; 2],
}

/// Two symbols per second: state A prints (0,1) at even `t` and (1,0) at
/// odd `t`; state B prints (0,0) and (1,1).
pub fn printer_joint(coin: CoinSequence, horizon: u64) -> Result<JointSeries> {
    let mut joint: [FrequencySeries; 4] = core::array::from_fn(|_| FrequencySeries::with_capacity(horizon));
    let mut marginal_zero: [FrequencySeries; 2] = core::array::from_fn(|_| FrequencySeries::with_capacity(horizon));
    run(coin, horizon, |state, t| {
        let odd = (t % 2) as u8;
        let (x, y) = match state {
            State::A => (odd, 1 - odd),
            State::B => (odd, odd),
        };
        let k = (2 * x + y) as usize;
        for (j, series) in joint.iter_mut().enumerate() {
            series.record(j == k);
        }
        marginal_zero[0].record(x == 0);
        marginal_zero[1].record(y == 0);
    })?;
    Ok(JointSeries { joint, marginal_zero })
}
