use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::statement::{mask, Statement, MAX_ATOMS};
use crate::error::{Error, Result};

/// Hard cap on materialised statement lists.
pub const MAX_ENUMERATION: u64 = 1 << 20;

/// Variable names and sizes of a product universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductShape {
    pub names: Vec<String>,
    pub sizes: Vec<usize>,
}

impl ProductShape {
    /// Outcome of variable `var` in atom `atom`. The first variable is the
    /// most significant digit, so with `[A, B]` the atoms run
    /// (A=0,B=0), (A=0,B=1), (A=1,B=0), (A=1,B=1).
    pub fn outcome(&self, atom: usize, var: usize) -> usize {
        let stride: usize = self.sizes[var + 1..].iter().product();
        (atom / stride) % self.sizes[var]
    }

    pub fn variable(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A finite Boolean universe given by its labelled atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
    product: Option<ProductShape>,
}

impl Universe {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        Self::validate_labels(&labels)?;
        Ok(Universe {
            labels,
            product: None,
        })
    }

    /// Universe with atoms labelled `a`, `b`, `c`, ...
    pub fn letters(count: usize) -> Result<Self> {
        Self::new((0..count).map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("a{i}")
            }
        }))
    }

    fn validate_labels(labels: &[String]) -> Result<()> {
        if labels.is_empty() {
            return Err(Error::NoAtoms);
        }
        if labels.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms {
                count: labels.len(),
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(())
    }

    /// Universe whose atoms are joint outcomes of independent finite
    /// variables, labelled like `A=0,B=1`.
    pub fn product<S: AsRef<str>>(sizes: &[usize], names: &[S]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidProduct("no variables"));
        }
        if sizes.len() != names.len() {
            return Err(Error::InvalidProduct("sizes and names differ in length"));
        }
        if sizes.iter().any(|&k| k < 2) {
            return Err(Error::InvalidProduct("every variable needs at least 2 outcomes"));
        }
        let names: Vec<String> = names.iter().map(|n| n.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains([',', '=', '|', '&', '!', ' ']) {
                return Err(Error::InvalidProduct("variable names must be plain identifiers"));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidProduct("variable names must be distinct"));
            }
        }
        let count = sizes.iter().fold(1u128, |acc, &k| acc.saturating_mul(k as u128));
        if count > 1 << MAX_ATOMS {
            return Err(Error::ProductTooLarge { count });
        }
        // Bitsets are one word wide, so the atom cap still applies.
        if count as usize > MAX_ATOMS {
            return Err(Error::TooManyAtoms {
                count: count as usize,
            });
        }
        let shape = ProductShape {
            names,
            sizes: sizes.to_vec(),
        };
        let labels = (0..count as usize)
            .map(|atom| {
                let parts: Vec<String> = (0..shape.sizes.len())
                    .map(|v| format!("{}={}", shape.names[v], shape.outcome(atom, v)))
                    .collect();
                parts.join(",")
            })
            .collect();
        Ok(Universe {
            labels,
            product: Some(shape),
        })
    }

    pub fn atom_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, atom: usize) -> &str {
        &self.labels[atom]
    }

    pub fn product_shape(&self) -> Option<&ProductShape> {
        self.product.as_ref()
    }

    pub fn atom_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn top(&self) -> Statement {
        Statement::top(self.atom_count())
    }

    pub fn bottom(&self) -> Statement {
        Statement::bottom(self.atom_count())
    }

    pub fn atom(&self, index: usize) -> Statement {
        Statement::atom(self.atom_count(), index)
    }

    pub fn statement(&self, bits: u32) -> Result<Statement> {
        Statement::new(self.atom_count(), bits)
    }

    /// Errors unless `s` has this universe's width.
    pub fn check(&self, s: Statement) -> Result<()> {
        if s.width() == self.atom_count() {
            Ok(())
        } else {
            Err(Error::WidthMismatch {
                expected: self.atom_count(),
                found: s.width(),
            })
        }
    }

    pub fn statement_count(&self) -> u64 {
        1u64 << self.atom_count()
    }

    /// Every statement, ascending. Capped at 2^20 statements.
    pub fn enumerate(&self) -> Result<Statements> {
        let count = self.statement_count();
        if count > MAX_ENUMERATION {
            return Err(Error::EnumerationTooLarge { count });
        }
        Ok(Statements {
            width: self.atom_count(),
            next: 0,
            end: count,
        })
    }

    pub fn from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Statement> {
        let mut bits = 0u32;
        for l in labels {
            let i = self
                .atom_index(l.as_ref())
                .ok_or_else(|| Error::UnknownAtom(l.as_ref().to_string()))?;
            bits |= 1 << i;
        }
        Ok(Statement::from_raw(self.atom_count(), bits))
    }

    /// Atom labels of `s` in atom order.
    pub fn labels_of(&self, s: Statement) -> Vec<&str> {
        s.atoms().map(|i| self.labels[i].as_str()).collect()
    }

    /// Compact human form: `⊥`, `⊤`, or `{a,b}`.
    pub fn display(&self, s: Statement) -> String {
        if s.is_bottom() {
            return "⊥".to_string();
        }
        if s.is_top() {
            return "⊤".to_string();
        }
        if s.is_atom() {
            return self.labels_of(s).concat();
        }
        let sep = if self.product.is_some() { " | " } else { "," };
        format!("{{{}}}", self.labels_of(s).join(sep))
    }

    /// Event expression on a product universe, e.g. `A=0`, `A=B`, `A!=1`,
    /// `A=0,B=1` (conjunction; `&` also accepted) or `A=0|B=1` (disjunction).
    pub fn event(&self, expr: &str) -> Result<Statement> {
        let shape = self.product.as_ref().ok_or(Error::NotProduct)?;
        let n = self.atom_count();
        let mut result = 0u32;
        for conj in expr.split('|') {
            let mut acc = mask(n);
            for term in conj.split([',', '&']) {
                acc &= self.term_bits(shape, term.trim(), expr)?;
            }
            result |= acc;
        }
        Ok(Statement::from_raw(n, result))
    }

    fn term_bits(&self, shape: &ProductShape, term: &str, expr: &str) -> Result<u32> {
        let syntax = || Error::EventSyntax(expr.to_string());
        let (lhs, rhs, negate) = if let Some((l, r)) = term.split_once("!=") {
            (l, r, true)
        } else if let Some((l, r)) = term.split_once('=') {
            (l, r, false)
        } else {
            return Err(syntax());
        };
        let (lhs, rhs) = (lhs.trim(), rhs.trim());
        if lhs.is_empty() || rhs.is_empty() {
            return Err(syntax());
        }
        let var = shape
            .variable(lhs)
            .ok_or_else(|| Error::UnknownVariable(lhs.to_string()))?;
        enum Rhs {
            Value(usize),
            Var(usize),
        }
        let rhs = if let Some(other) = shape.variable(rhs) {
            Rhs::Var(other)
        } else {
            let value: usize = rhs.parse().map_err(|_| {
                if rhs.chars().all(|c| c.is_ascii_digit()) {
                    syntax()
                } else {
                    Error::UnknownVariable(rhs.to_string())
                }
            })?;
            if value >= shape.sizes[var] {
                return Err(Error::UnknownOutcome {
                    name: lhs.to_string(),
                    value: rhs.to_string(),
                });
            }
            Rhs::Value(value)
        };
        let mut bits = 0u32;
        for atom in 0..self.atom_count() {
            let x = shape.outcome(atom, var);
            let hit = match rhs {
                Rhs::Value(v) => x == v,
                Rhs::Var(o) => x == shape.outcome(atom, o),
            };
            if hit != negate {
                bits |= 1 << atom;
            }
        }
        Ok(bits)
    }

    /// Resolves the textual statement forms accepted by front ends:
    /// `top`/`⊤`, `bottom`/`⊥`, a bracketed label list `[a,b]` or `{a,b}`,
    /// a single atom label, or an event expression on product universes.
    pub fn resolve(&self, text: &str) -> Result<Statement> {
        let t = text.trim();
        match t {
            "top" | "⊤" | "T" => return Ok(self.top()),
            "bottom" | "⊥" | "F" => return Ok(self.bottom()),
            _ => {}
        }
        if let Some(inner) = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| t.strip_prefix('{').and_then(|r| r.strip_suffix('}')))
        {
            let inner = inner.trim();
            if inner.is_empty() {
                return Ok(self.bottom());
            }
            // Product labels contain commas themselves, so match greedily
            // against known labels before splitting.
            return self.parse_label_list(inner);
        }
        if let Some(i) = self.atom_index(t) {
            return Ok(self.atom(i));
        }
        if self.product.is_some() {
            return self.event(t);
        }
        Err(Error::UnknownAtom(t.to_string()))
    }

    fn parse_label_list(&self, inner: &str) -> Result<Statement> {
        let pieces: Vec<&str> = inner
            .split(['|', ';'])
            .flat_map(|p| {
                if self.product.is_some() {
                    alloc::vec![p]
                } else {
                    p.split(',').collect()
                }
            })
            .map(|p| p.trim().trim_matches('"').trim())
            .filter(|p| !p.is_empty())
            .collect();
        let mut bits = 0u32;
        for p in pieces {
            match self.atom_index(p) {
                Some(i) => bits |= 1 << i,
                None => bits |= self.resolve(p)?.bits(),
            }
        }
        Ok(Statement::from_raw(self.atom_count(), bits))
    }
}

/// Ascending iterator over every statement of a universe.
#[derive(Clone, Debug)]
pub struct Statements {
    width: usize,
    next: u64,
    end: u64,
}

impl Iterator for Statements {
    type Item = Statement;

    fn next(&mut self) -> Option<Statement> {
        if self.next >= self.end {
            return None;
        }
        let s = Statement::from_raw(self.width, self.next as u32);
        self.next += 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Statements {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_validated() {
        assert_eq!(Universe::new(Vec::<String>::new()), Err(Error::NoAtoms));
        assert_eq!(
            Universe::new(["a", "a"]),
            Err(Error::DuplicateLabel("a".into()))
        );
        assert_eq!(Universe::new(["a", ""]), Err(Error::EmptyLabel));
        assert!(matches!(
            Universe::letters(25),
            Err(Error::TooManyAtoms { count: 25 })
        ));
    }

    #[test]
    fn ab_labelling() {
        let u = Universe::product(&[2, 2], &["A", "B"]).unwrap();
        assert_eq!(
            u.labels(),
            ["A=0,B=0", "A=0,B=1", "A=1,B=0", "A=1,B=1"]
        );
        assert_eq!(u.event("A=0").unwrap().bits(), 0b0011);
        assert_eq!(u.event("A=1").unwrap().bits(), 0b1100);
        assert_eq!(u.event("B=0").unwrap().bits(), 0b0101);
        assert_eq!(u.event("B=1").unwrap().bits(), 0b1010);
        assert_eq!(u.event("A=B").unwrap().bits(), 0b1001);
        assert_eq!(u.event("A!=B").unwrap().bits(), 0b0110);
        assert_eq!(u.event("A=0,B=1").unwrap().bits(), 0b0010);
        assert_eq!(u.event("A=0|B=0").unwrap().bits(), 0b0111);
    }

    #[test]
    fn single_variable_product() {
        let u = Universe::product(&[2], &["A"]).unwrap();
        assert_eq!(u.atom_count(), 2);
    }

    #[test]
    fn product_errors() {
        assert!(matches!(
            Universe::product(&[1 << 13, 1 << 12], &["A", "B"]),
            Err(Error::ProductTooLarge { .. })
        ));
        assert!(Universe::product(&[1, 2], &["A", "B"]).is_err());
        assert!(Universe::product(&[2, 2], &["A", "A"]).is_err());
        let u = Universe::product(&[2, 3], &["A", "B"]).unwrap();
        assert!(matches!(u.event("C=0"), Err(Error::UnknownVariable(_))));
        assert!(matches!(u.event("B=3"), Err(Error::UnknownOutcome { .. })));
        assert!(matches!(u.event("B"), Err(Error::EventSyntax(_))));
    }

    #[test]
    fn resolve_forms() {
        let u = Universe::product(&[2, 2], &["A", "B"]).unwrap();
        assert_eq!(u.resolve("top").unwrap(), u.top());
        assert_eq!(u.resolve("⊥").unwrap(), u.bottom());
        assert_eq!(u.resolve("A=0,B=1").unwrap().bits(), 0b0010);
        assert_eq!(u.resolve("[A=0,B=0 | A=1,B=1]").unwrap().bits(), 0b1001);
        let v = Universe::letters(4).unwrap();
        assert_eq!(v.resolve("[a,c]").unwrap().bits(), 0b0101);
        assert_eq!(v.resolve("{b}").unwrap().bits(), 0b0010);
        assert_eq!(v.resolve("[]").unwrap(), v.bottom());
        assert_eq!(v.resolve("d").unwrap().bits(), 0b1000);
        assert!(matches!(v.resolve("q"), Err(Error::UnknownAtom(_))));
    }

    #[test]
    fn enumerate_full_universe() {
        let u = Universe::letters(3).unwrap();
        let all: Vec<_> = u.enumerate().unwrap().collect();
        assert_eq!(all.len(), 8);
        assert!(all[0].is_bottom());
        assert!(all[7].is_top());
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(Universe::letters(21).unwrap().enumerate().is_err());
    }

    #[test]
    fn label_round_trip() {
        let u = Universe::letters(4).unwrap();
        let s = u.from_labels(&["b", "d"]).unwrap();
        assert_eq!(u.labels_of(s), ["b", "d"]);
        assert!(u.from_labels(&["z"]).is_err());
    }
}
