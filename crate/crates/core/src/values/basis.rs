use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::semvalue::SemValue;
use crate::error::{Error, Result};

pub const UNIT_SYMBOL: &str = "1";

/// Rational box around a symbol's complex value: real × imaginary interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub re: (Rational, Rational),
    pub im: (Rational, Rational),
}

impl Enclosure {
    pub fn real(lo: Rational, hi: Rational) -> Self {
        Enclosure {
            re: (lo, hi),
            im: (Rational::zero(), Rational::zero()),
        }
    }

    fn is_real(&self) -> bool {
        self.im.0.is_zero() && self.im.1.is_zero()
    }
}

/// Ordered symbols spanning the value space over ℚ. Symbol 0 is the
/// rational unit.
///
/// The symbols are trusted to be ℚ-linearly independent; nothing here can
/// certify that (`{1, √2, √8}` would be accepted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    symbols: Vec<String>,
    enclosures: Vec<Option<Enclosure>>,
}

impl Basis {
    /// The basis `{1}`: purely rational values.
    pub fn rational() -> Self {
        Basis {
            symbols: alloc::vec![UNIT_SYMBOL.to_string()],
            enclosures: alloc::vec![Some(Enclosure::real(Rational::one(), Rational::one()))],
        }
    }

    /// Appends an irrational symbol.
    pub fn with_symbol(mut self, symbol: impl Into<String>, enclosure: Option<Enclosure>) -> Result<Self> {
        let symbol = symbol.into();
        if symbol.is_empty() || symbol == UNIT_SYMBOL {
            return Err(Error::InvalidBasis(alloc::format!(
                "symbol {symbol:?} is reserved or empty"
            )));
        }
        if self.symbols.contains(&symbol) {
            return Err(Error::InvalidBasis(alloc::format!("duplicate symbol {symbol:?}")));
        }
        if let Some(e) = &enclosure {
            if e.re.0 > e.re.1 || e.im.0 > e.im.1 {
                return Err(Error::InvalidBasis(alloc::format!(
                    "enclosure of {symbol:?} has lo > hi"
                )));
            }
        }
        self.symbols.push(symbol);
        self.enclosures.push(enclosure);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, j: usize) -> &str {
        &self.symbols[j]
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }

    pub fn enclosure(&self, j: usize) -> Option<&Enclosure> {
        self.enclosures[j].as_ref()
    }

    pub fn zero(&self) -> SemValue {
        SemValue::zero(self.dim())
    }

    pub fn rational_value(&self, q: Rational) -> SemValue {
        SemValue::rational(self.dim(), q)
    }

    /// Human form such as `1/2 - 1/10*sqrt2`; `0` for the zero value.
    pub fn format_value(&self, v: &SemValue) -> String {
        let mut out = String::new();
        for (j, c) in v.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if j == 0 {
                out.push_str(&magnitude.to_string());
            } else {
                if !magnitude.is_one() {
                    out.push_str(&magnitude.to_string());
                    out.push('*');
                }
                out.push_str(self.symbol(j));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
    Unknown,
}

/// Sign of a real value from an exact interval enclosure of
/// `Σ coeff_j · symbol_j`.
pub fn sv_sign(v: &SemValue, basis: &Basis) -> Result<Sign> {
    if v.dim() != basis.dim() {
        return Err(Error::BasisMismatch {
            left: v.dim(),
            right: basis.dim(),
        });
    }
    if v.is_zero() {
        return Ok(Sign::Zero);
    }
    let mut lo = v.coeff(0).clone();
    let mut hi = lo.clone();
    for j in 1..v.dim() {
        let c = v.coeff(j);
        if c.is_zero() {
            continue;
        }
        let e = basis
            .enclosure(j)
            .ok_or_else(|| Error::MissingEnclosure(basis.symbol(j).to_string()))?;
        if !e.is_real() {
            return Err(Error::ComplexValued(basis.symbol(j).to_string()));
        }
        let (a, b) = (c * &e.re.0, c * &e.re.1);
        if c.is_negative() {
            lo += b;
            hi += a;
        } else {
            lo += a;
            hi += b;
        }
    }
    Ok(if lo.is_positive() {
        Sign::Positive
    } else if hi.is_negative() {
        Sign::Negative
    } else if lo.is_zero() && hi.is_zero() {
        Sign::Zero
    } else {
        Sign::Unknown
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::values::rational::{int, rat};

    fn sqrt2_basis() -> Basis {
        Basis::rational()
            .with_symbol("sqrt2", Some(Enclosure::real(rat(1414, 1000), rat(1415, 1000))))
            .unwrap()
    }

    #[test]
    fn formatting() {
        let b = sqrt2_basis();
        let v = |x, y| SemValue::new(alloc::vec![x, y]);
        assert_eq!(b.format_value(&v(rat(1, 2), rat(-1, 10))), "1/2 - 1/10*sqrt2");
        assert_eq!(b.format_value(&v(int(0), int(-1))), "-sqrt2");
        assert_eq!(b.format_value(&v(rat(-3, 4), int(0))), "-3/4");
        assert_eq!(b.format_value(&b.zero()), "0");
    }

    #[test]
    fn half_minus_sqrt2_over_ten_is_positive() {
        // 1/2 - 1415/10000 > 0
        let v = SemValue::new(alloc::vec![rat(1, 2), rat(-1, 10)]);
        assert_eq!(sv_sign(&v, &sqrt2_basis()).unwrap(), Sign::Positive);
        let w = SemValue::new(alloc::vec![rat(-1, 2), rat(1, 10)]);
        assert_eq!(sv_sign(&w, &sqrt2_basis()).unwrap(), Sign::Negative);
    }

    #[test]
    fn zero_and_straddling() {
        assert_eq!(sv_sign(&SemValue::zero(2), &sqrt2_basis()).unwrap(), Sign::Zero);
        let wide = Basis::rational()
            .with_symbol("x", Some(Enclosure::real(int(-2), int(2))))
            .unwrap();
        let v = SemValue::new(alloc::vec![int(0), rat(1, 10)]);
        assert_eq!(sv_sign(&v, &wide).unwrap(), Sign::Unknown);
    }

    #[test]
    fn enclosure_errors() {
        let bare = Basis::rational().with_symbol("pi", None).unwrap();
        let v = SemValue::new(alloc::vec![int(1), int(1)]);
        assert!(matches!(sv_sign(&v, &bare), Err(Error::MissingEnclosure(_))));
        // An unused symbol needs no enclosure.
        let r = SemValue::new(alloc::vec![int(1), int(0)]);
        assert_eq!(sv_sign(&r, &bare).unwrap(), Sign::Positive);
        let complex = Basis::rational()
            .with_symbol(
                "i",
                Some(Enclosure {
                    re: (int(0), int(0)),
                    im: (int(1), int(1)),
                }),
            )
            .unwrap();
        assert!(matches!(sv_sign(&v, &complex), Err(Error::ComplexValued(_))));
    }

    #[test]
    fn basis_validation() {
        assert!(Basis::rational().with_symbol("1", None).is_err());
        assert!(Basis::rational()
            .with_symbol("a", None)
            .unwrap()
            .with_symbol("a", None)
            .is_err());
        assert!(Basis::rational()
            .with_symbol("a", Some(Enclosure::real(int(2), int(1))))
            .is_err());
        let b = sqrt2_basis();
        assert_eq!(b.dim(), 2);
        assert_eq!(b.index_of("sqrt2"), Some(1));
        assert_eq!(b.enclosure(0), Some(&Enclosure::real(int(1), int(1))));
    }
}
