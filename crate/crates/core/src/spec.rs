//! Group and automorphism spec strings.
//!
//! ```text
//! group := "cyclic:" N | "dihedral:" M | "symmetric:" K | "alternating:" K
//!        | "quaternion" | "product:" group ("," group)+ | "file:" PATH
//! aut   := "id" | "inv" | "perm:" i ("," i)* | "conj:" g | "file:" PATH
//! ```
//!
//! `dihedral:M` has order `2M`. A nested `product:` consumes the rest of the
//! list, and `file:` paths end at the next comma.

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

use crate::group::constructors::{
    alternating, cyclic, dihedral, direct_product, quaternion, symmetric,
};
use crate::group::{
    inversion_automorphism, validate_automorphism, validate_group, FiniteGroup, GroupAutomorphism,
    GroupError,
};
use crate::io::{parse_permutation, parse_table, TableError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("spec parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("unsupported order: {0}")]
    UnsupportedOrder(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    Table { path: String, source: TableError },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion,
    Product(Vec<GroupSpec>),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub raw: String,
    pub kind: GroupKind,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupKind::Dihedral(m) => write!(f, "dihedral:{m}"),
            GroupKind::Symmetric(k) => write!(f, "symmetric:{k}"),
            GroupKind::Alternating(k) => write!(f, "alternating:{k}"),
            GroupKind::Quaternion => f.write_str("quaternion"),
            GroupKind::Product(parts) => {
                f.write_str("product:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            GroupKind::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, SpecError> {
        Err(SpecError::Parse {
            offset,
            message: message.into(),
        })
    }

    fn rest(&self) -> &str {
        &self.s[self.pos..]
    }

    fn eat(&mut self, prefix: &str) -> bool {
        if self.rest().starts_with(prefix) {
            self.pos += prefix.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize, SpecError> {
        let start = self.pos;
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err(start, "expected a non-negative decimal integer");
        }
        self.pos += digits;
        self.s[start..self.pos]
            .parse()
            .or_else(|_| self.err(start, "integer out of range"))
    }

    fn group(&mut self) -> Result<GroupSpec, SpecError> {
        let start = self.pos;
        let kind = if self.eat("cyclic:") {
            GroupKind::Cyclic(self.number()?)
        } else if self.eat("dihedral:") {
            GroupKind::Dihedral(self.number()?)
        } else if self.eat("symmetric:") {
            GroupKind::Symmetric(self.number()?)
        } else if self.eat("alternating:") {
            GroupKind::Alternating(self.number()?)
        } else if self.eat("quaternion") {
            GroupKind::Quaternion
        } else if self.eat("product:") {
            let mut parts = vec![self.group()?];
            while self.eat(",") {
                parts.push(self.group()?);
            }
            if parts.len() < 2 {
                return self.err(self.pos, "product needs at least two factors");
            }
            GroupKind::Product(parts)
        } else if self.eat("file:") {
            let len = self.rest().find(',').unwrap_or(self.rest().len());
            if len == 0 {
                return self.err(self.pos, "empty file path");
            }
            let path = PathBuf::from(&self.rest()[..len]);
            self.pos += len;
            GroupKind::File(path)
        } else {
            return self.err(
                start,
                "expected cyclic:, dihedral:, symmetric:, alternating:, quaternion, product: or file:",
            );
        };
        Ok(GroupSpec {
            raw: self.s[start..self.pos].to_string(),
            kind,
        })
    }
}

pub fn parse_group_spec(s: &str) -> Result<GroupSpec, SpecError> {
    let mut p = Parser { s, pos: 0 };
    let spec = p.group()?;
    if p.pos != s.len() {
        return p.err(p.pos, "unexpected trailing input");
    }
    Ok(spec)
}

fn read_file(path: &std::path::Path) -> Result<String, SpecError> {
    std::fs::read_to_string(path).map_err(|e| SpecError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Reads and validates a group table file.
pub fn load_group_table(path: &std::path::Path) -> Result<FiniteGroup, SpecError> {
    let rows = parse_table(&read_file(path)?).map_err(|source| SpecError::Table {
        path: path.display().to_string(),
        source,
    })?;
    Ok(validate_group(&rows)?)
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, SpecError> {
        let unsupported = |e: GroupError| match e {
            GroupError::UnsupportedOrder(m) => SpecError::UnsupportedOrder(m),
            other => SpecError::Group(other),
        };
        match &self.kind {
            GroupKind::Cyclic(n) => cyclic(*n).map_err(unsupported),
            GroupKind::Dihedral(m) => dihedral(*m).map_err(unsupported),
            GroupKind::Symmetric(k) => symmetric(*k).map_err(unsupported),
            GroupKind::Alternating(k) => alternating(*k).map_err(unsupported),
            GroupKind::Quaternion => Ok(quaternion()),
            GroupKind::Product(parts) => {
                let factors = parts
                    .iter()
                    .map(GroupSpec::build)
                    .collect::<Result<Vec<_>, _>>()?;
                direct_product(&factors).map_err(unsupported)
            }
            GroupKind::File(path) => load_group_table(path),
        }
    }
}

pub fn build_group(s: &str) -> Result<FiniteGroup, SpecError> {
    parse_group_spec(s)?.build()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutSpec {
    Identity,
    Inversion,
    Perm(Vec<usize>),
    Conjugation(usize),
    File(PathBuf),
}

pub fn parse_aut_kind(s: &str) -> Result<AutSpec, SpecError> {
    let mut p = Parser { s, pos: 0 };
    let spec = if p.eat("id") {
        AutSpec::Identity
    } else if p.eat("inv") {
        AutSpec::Inversion
    } else if p.eat("perm:") {
        let mut images = vec![p.number()?];
        while p.eat(",") {
            images.push(p.number()?);
        }
        AutSpec::Perm(images)
    } else if p.eat("conj:") {
        AutSpec::Conjugation(p.number()?)
    } else if p.eat("file:") {
        if p.rest().is_empty() {
            return p.err(p.pos, "empty file path");
        }
        let path = PathBuf::from(p.rest());
        p.pos = s.len();
        AutSpec::File(path)
    } else {
        return p.err(0, "expected id, inv, perm:, conj: or file:");
    };
    if p.pos != s.len() {
        return p.err(p.pos, "unexpected trailing input");
    }
    Ok(spec)
}

impl AutSpec {
    pub fn resolve(&self, group: &FiniteGroup) -> Result<GroupAutomorphism, SpecError> {
        Ok(match self {
            AutSpec::Identity => GroupAutomorphism::identity(group),
            AutSpec::Inversion => inversion_automorphism(group)?,
            AutSpec::Perm(images) => validate_automorphism(group, images.clone())?,
            AutSpec::Conjugation(g) => {
                let g = *g;
                if g >= group.order() {
                    return Err(GroupError::BadElement(g, group.order()).into());
                }
                let gi = group.inv(g);
                validate_automorphism(
                    group,
                    group
                        .elements()
                        .map(|x| group.mul(group.mul(g, x), gi))
                        .collect(),
                )?
            }
            AutSpec::File(path) => {
                let images =
                    parse_permutation(&read_file(path)?).map_err(|source| SpecError::Table {
                        path: path.display().to_string(),
                        source,
                    })?;
                validate_automorphism(group, images)?
            }
        })
    }
}

pub fn parse_aut_spec(s: &str, group: &FiniteGroup) -> Result<GroupAutomorphism, SpecError> {
    parse_aut_kind(s)?.resolve(group)
}
