//! The JSON workspace format: basis, universe, named valuations,
//! partitions and stored queries.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use quasiprob_core::lattice::{Partition, Statement, Universe};
use quasiprob_core::values::{
    format_rational, parse_rational, zero, Basis, Enclosure, Rational, SemValue, UNIT_SYMBOL,
};
use quasiprob_core::PreProb;
use serde::{Deserialize, Serialize};
use serde_json::Map;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid {field}: {message}")]
    Invalid { field: String, message: String },
}

fn invalid(field: impl Into<String>, message: impl ToString) -> LoadError {
    LoadError::Invalid {
        field: field.into(),
        message: message.to_string(),
    }
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSymbol {
    symbol: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    enclosure_re: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    enclosure_im: Option<[String; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVar {
    name: String,
    size: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProduct {
    vars: Vec<RawVar>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "lowercase")]
enum RawUniverse {
    Atoms(Vec<String>),
    Product(RawProduct),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RawCell {
    Labels(Vec<String>),
    Expr(String),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWorkspace {
    #[serde(default)]
    basis: Vec<RawSymbol>,
    universe: RawUniverse,
    #[serde(default)]
    valuations: Map<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    partitions: Map<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    queries: Map<String, serde_json::Value>,
}

/// A validated workspace. Names keep their file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Workspace {
    pub basis: Basis,
    pub universe: Universe,
    pub valuations: Vec<(String, PreProb)>,
    pub partitions: Vec<(String, Partition)>,
    pub queries: Vec<(String, Vec<String>)>,
}

fn rational(field: &str, text: &str) -> Result<Rational, LoadError> {
    parse_rational(text).ok_or_else(|| invalid(field, format!("{text:?} is not an exact rational")))
}

fn interval(field: &str, pair: &[String; 2]) -> Result<(Rational, Rational), LoadError> {
    let lo = rational(field, &pair[0])?;
    let hi = rational(field, &pair[1])?;
    if lo > hi {
        return Err(invalid(field, "lower bound exceeds upper bound"));
    }
    Ok((lo, hi))
}

fn basis_from(raw: &[RawSymbol]) -> Result<Basis, LoadError> {
    let mut basis = Basis::rational();
    for (i, s) in raw.iter().enumerate() {
        let field = format!("basis[{i}]");
        if s.symbol == UNIT_SYMBOL {
            if i != 0 || s.enclosure_re.is_some() || s.enclosure_im.is_some() {
                return Err(invalid(field, "the unit symbol \"1\" may only appear first, without an enclosure"));
            }
            continue;
        }
        let enclosure = match (&s.enclosure_re, &s.enclosure_im) {
            (None, None) => None,
            (re, im) => {
                let zero = ["0".to_string(), "0".to_string()];
                let re = interval(&format!("{field}.enclosure_re"), re.as_ref().unwrap_or(&zero))?;
                let im = interval(&format!("{field}.enclosure_im"), im.as_ref().unwrap_or(&zero))?;
                Some(Enclosure { re, im })
            }
        };
        basis = basis
            .with_symbol(s.symbol.clone(), enclosure)
            .map_err(|e| invalid(format!("{field}.symbol"), e))?;
    }
    Ok(basis)
}

fn universe_from(raw: &RawUniverse) -> Result<Universe, LoadError> {
    match raw {
        RawUniverse::Atoms(labels) => {
            Universe::new(labels.iter().cloned()).map_err(|e| invalid("universe.atoms", e))
        }
        RawUniverse::Product(p) => {
            let sizes: Vec<usize> = p.vars.iter().map(|v| v.size).collect();
            let names: Vec<&str> = p.vars.iter().map(|v| v.name.as_str()).collect();
            Universe::product(&sizes, &names).map_err(|e| invalid("universe.product", e))
        }
    }
}

fn valuation_from(
    name: &str,
    raw: &serde_json::Value,
    universe: &Universe,
    basis: &Basis,
) -> Result<PreProb, LoadError> {
    let field = format!("valuations.{name}");
    let atoms: BTreeMap<String, BTreeMap<String, String>> =
        serde_json::from_value(raw.clone()).map_err(|e| invalid(&field, e))?;
    let mut atomic = vec![basis.zero(); universe.atom_count()];
    for (label, coeffs) in &atoms {
        let i = universe
            .atom_index(label)
            .ok_or_else(|| invalid(format!("{field}.{label}"), "no such atom"))?;
        let mut c = basis.zero().into_coeffs();
        for (symbol, text) in coeffs {
            let f = format!("{field}.{label}.{symbol}");
            let j = basis.index_of(symbol).ok_or_else(|| invalid(&f, "symbol not declared in the basis"))?;
            c[j] = rational(&f, text)?;
        }
        atomic[i] = SemValue::new(c);
    }
    PreProb::new(universe.clone(), basis.clone(), atomic).map_err(|e| invalid(field, e))
}

fn partition_from(name: &str, raw: &serde_json::Value, universe: &Universe) -> Result<Partition, LoadError> {
    let field = format!("partitions.{name}");
    let cells: Vec<RawCell> = serde_json::from_value(raw.clone()).map_err(|e| invalid(&field, e))?;
    let cells = cells
        .iter()
        .enumerate()
        .map(|(k, cell)| {
            let f = format!("{field}[{k}]");
            match cell {
                RawCell::Labels(labels) => universe.from_labels(labels),
                RawCell::Expr(text) => universe.resolve(text),
            }
            .map_err(|e| invalid(f, e))
        })
        .collect::<Result<Vec<Statement>, _>>()?;
    Partition::of_top(cells).map_err(|e| invalid(field, e))
}

impl Workspace {
    pub fn parse(text: &str) -> Result<Workspace, LoadError> {
        let raw: RawWorkspace = serde_json::from_str(text).map_err(|e| LoadError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let basis = basis_from(&raw.basis)?;
        let universe = universe_from(&raw.universe)?;
        let valuations = raw
            .valuations
            .iter()
            .map(|(name, v)| Ok((name.clone(), valuation_from(name, v, &universe, &basis)?)))
            .collect::<Result<_, LoadError>>()?;
        let partitions = raw
            .partitions
            .iter()
            .map(|(name, v)| Ok((name.clone(), partition_from(name, v, &universe)?)))
            .collect::<Result<_, LoadError>>()?;
        let queries = raw
            .queries
            .iter()
            .map(|(name, v)| {
                let argv: Vec<String> = serde_json::from_value(v.clone())
                    .map_err(|e| invalid(format!("queries.{name}"), e))?;
                Ok((name.clone(), argv))
            })
            .collect::<Result<_, LoadError>>()?;
        Ok(Workspace {
            basis,
            universe,
            valuations,
            partitions,
            queries,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Workspace, LoadError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| LoadError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn valuation(&self, name: &str) -> Option<&PreProb> {
        self.valuations.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn partition(&self, name: &str) -> Option<&Partition> {
        self.partitions.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn query(&self, name: &str) -> Option<&[String]> {
        self.queries.iter().find(|(n, _)| n == name).map(|(_, q)| q.as_slice())
    }

    fn to_raw(&self) -> RawWorkspace {
        let basis = (1..self.basis.dim())
            .map(|j| {
                let e = self.basis.enclosure(j);
                let pair = |(lo, hi): &(Rational, Rational)| [format_rational(lo), format_rational(hi)];
                RawSymbol {
                    symbol: self.basis.symbol(j).to_string(),
                    enclosure_re: e.map(|e| pair(&e.re)),
                    enclosure_im: e.map(|e| pair(&e.im)),
                }
            })
            .collect();
        let universe = match self.universe.product_shape() {
            Some(shape) => RawUniverse::Product(RawProduct {
                vars: shape
                    .names
                    .iter()
                    .zip(&shape.sizes)
                    .map(|(name, &size)| RawVar {
                        name: name.clone(),
                        size,
                    })
                    .collect(),
            }),
            None => RawUniverse::Atoms(self.universe.labels().to_vec()),
        };
        let valuations = self
            .valuations
            .iter()
            .map(|(name, r)| {
                let mut atoms = Map::new();
                for (i, v) in r.atomic().iter().enumerate() {
                    let mut coeffs = Map::new();
                    for (j, c) in v.coeffs().iter().enumerate() {
                        if *c != zero() {
                            coeffs.insert(self.basis.symbol(j).to_string(), format_rational(c).into());
                        }
                    }
                    atoms.insert(self.universe.label(i).to_string(), coeffs.into());
                }
                (name.clone(), atoms.into())
            })
            .collect();
        let partitions = self
            .partitions
            .iter()
            .map(|(name, p)| {
                let cells: Vec<serde_json::Value> = p
                    .cells()
                    .iter()
                    .map(|c| self.universe.labels_of(*c).into())
                    .collect();
                (name.clone(), cells.into())
            })
            .collect();
        let queries = self
            .queries
            .iter()
            .map(|(name, argv)| (name.clone(), argv.clone().into()))
            .collect();
        RawWorkspace {
            basis,
            universe,
            valuations,
            partitions,
            queries,
        }
    }

    /// Pretty JSON that [`Workspace::parse`] reads back to an equal workspace.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("plain data serialises")
    }
}
