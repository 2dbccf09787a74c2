//! Structure files.
//!
//! The canonical format is JSON with integer tables and sorted keys:
//!
//! ```text
//! {"add":[[0,1],[1,0]],"kind":"ring","meta":{},"mul":[[0,0],[0,1]],"n":2,"one":1}
//! ```
//!
//! A plain-text form is accepted on input: a `kind n` line, `n` rows of the
//! addition table, a blank line, `n` rows of the multiplication table and a
//! final `one=k` line (the last two parts only for `lnr` and `ring`).
//! Lines starting with `#` are ignored.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::axioms;
use crate::error::{Error, Result, ValidationError};
use crate::generators::Structure;
use crate::loops::validate_loop;
use crate::nearrings::validate_lnr;
use crate::rings::validate_ring;
use crate::table::Table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Loop,
    Lnr,
    Ring,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Loop => "loop",
            Kind::Lnr => "lnr",
            Kind::Ring => "ring",
        }
    }

    fn parse(s: &str) -> Result<Kind> {
        match s {
            "loop" => Ok(Kind::Loop),
            "lnr" => Ok(Kind::Lnr),
            "ring" => Ok(Kind::Ring),
            other => Err(Error::Parse(format!("unknown kind '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub kind: Kind,
    pub n: usize,
    pub add: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<usize>,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

impl StructureFile {
    /// Parses JSON or the plain-text form and checks table shapes.
    pub fn parse(text: &str) -> Result<StructureFile> {
        let file = if text.trim_start().starts_with('{') {
            serde_json::from_str::<StructureFile>(text).map_err(|e| Error::Parse(e.to_string()))?
        } else {
            parse_text(text)?
        };
        file.check_shape()?;
        Ok(file)
    }

    fn check_shape(&self) -> Result<()> {
        let square = |t: &Vec<Vec<usize>>, name: &str| -> Result<()> {
            if t.len() != self.n || t.iter().any(|r| r.len() != self.n) {
                return Err(Error::Parse(format!("{name} table is not {0}x{0}", self.n)));
            }
            Ok(())
        };
        if self.n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        square(&self.add, "add")?;
        match (self.kind, &self.mul, self.one) {
            (Kind::Loop, None, None) => Ok(()),
            (Kind::Loop, _, _) => Err(Error::Parse("a loop has no multiplication".into())),
            (_, Some(mul), Some(_)) => square(mul, "mul"),
            _ => Err(Error::Parse(format!("kind '{}' needs 'mul' and 'one'", self.kind.as_str()))),
        }
    }

    /// Runs the validator for the declared kind.
    pub fn to_structure(&self) -> std::result::Result<Structure, ValidationError> {
        match self.kind {
            Kind::Loop => Ok(Structure::Loop(validate_loop(&self.add)?)),
            Kind::Lnr | Kind::Ring => {
                let mul = self.mul.as_ref().expect("shape checked");
                let lnr = validate_lnr(&self.add, mul, self.one.expect("shape checked"))?;
                if self.kind == Kind::Ring {
                    Ok(Structure::Ring(validate_ring(lnr)?))
                } else {
                    Ok(Structure::NearRing(lnr))
                }
            }
        }
    }

    /// Every violated axiom of the declared kind; empty iff
    /// [`to_structure`](Self::to_structure) succeeds.
    pub fn audit(&self) -> Vec<ValidationError> {
        let add = match Table::from_rows(&self.add) {
            Ok(t) => t,
            Err(e) => return vec![e],
        };
        let mul = match self.mul.as_deref().map(Table::from_rows).transpose() {
            Ok(m) => m,
            Err(e) => return vec![e],
        };
        axioms::audit(self.kind.as_str(), &add, mul.as_ref(), self.one)
    }

    pub fn from_structure(s: &Structure, meta: BTreeMap<String, String>) -> StructureFile {
        let add = s.additive().add_table().to_rows();
        let (kind, mul, one) = match s {
            Structure::Loop(_) => (Kind::Loop, None, None),
            Structure::NearRing(n) => (Kind::Lnr, Some(n.mul_table().to_rows()), Some(n.one())),
            Structure::Ring(r) => (Kind::Ring, Some(r.lnr().mul_table().to_rows()), Some(r.one())),
        };
        StructureFile { kind, n: s.n(), add, mul, one, meta }
    }

    /// Compact JSON with sorted keys.
    pub fn to_canonical_json(&self) -> String {
        canonical_json(&serde_json::to_value(self).expect("serializable"))
    }

    /// SHA-256 of the canonical JSON with `meta` cleared.
    pub fn content_hash(&self) -> String {
        let mut bare = self.clone();
        bare.meta.clear();
        sha256_hex(bare.to_canonical_json().as_bytes())
    }
}

fn parse_text(text: &str) -> Result<StructureFile> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.starts_with('#'));
    let header = lines.by_ref().find(|l| !l.is_empty()).ok_or_else(|| Error::Parse("empty file".into()))?;
    let mut parts = header.split_whitespace();
    let kind = Kind::parse(parts.next().unwrap_or(""))?;
    let n: usize = parts
        .next()
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Parse("header must be 'kind n'".into()))?;
    if parts.next().is_some() {
        return Err(Error::Parse("header must be 'kind n'".into()));
    }
    let mut rows = Vec::new();
    let mut one = None;
    for line in lines {
        if line.is_empty() {
            continue;
        }
        if let Some(v) = line.strip_prefix("one=") {
            one = Some(v.trim().parse().map_err(|_| Error::Parse(format!("bad '{line}'")))?);
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    let (add, mul) = match kind {
        Kind::Loop if rows.len() == n => (rows, None),
        Kind::Lnr | Kind::Ring if rows.len() == 2 * n => {
            let mul = rows.split_off(n);
            (rows, Some(mul))
        }
        _ => return Err(Error::Parse(format!("expected {} table rows, found {}", if kind == Kind::Loop { n } else { 2 * n }, rows.len()))),
    };
    Ok(StructureFile { kind, n, add, mul, one, meta: BTreeMap::new() })
}

/// Total element map for a homomorphism: `{"map":[...]}` or whitespace-separated integers.
pub fn parse_map(text: &str) -> Result<Vec<usize>> {
    if text.trim_start().starts_with('{') {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct MapFile {
            map: Vec<usize>,
        }
        let f: MapFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(f.map)
    } else {
        text.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad map entry '{t}'"))))
            .collect()
    }
}

pub fn map_to_json(map: &[usize]) -> String {
    canonical_json(&json!({ "map": map }))
}

/// `serde_json` objects are ordered maps, so plain serialization already
/// yields sorted keys.
pub fn canonical_json(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}
