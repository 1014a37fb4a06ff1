//! Bundled named diagrams, twisting pairs, polynomials and framed links.
//!
//! Fixture files are lists of blocks. Each block starts with a
//! `name: <string>` line; `%` starts a comment. The bundled copies are
//! compiled in, and the `SLOPEKIT_FIXTURES` environment variable points
//! [`FixtureSet::load`] at a directory holding replacements.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::diagram::{parse_pd, DiagramError, LinkDiagram};
use crate::laurent::{LPoly, LaurentError};
use crate::surgery::{FramedLink, SurgeryError};
use crate::twistfam::{parse_gate, AnnotatedPair, TwistError, TwistFamily};

pub const ENV_VAR: &str = "SLOPEKIT_FIXTURES";

pub const FILES: [(&str, &str); 4] = [
    ("diagrams.txt", include_str!("../fixtures/diagrams.txt")),
    ("pairs.txt", include_str!("../fixtures/pairs.txt")),
    ("polynomials.txt", include_str!("../fixtures/polynomials.txt")),
    ("framed.txt", include_str!("../fixtures/framed.txt")),
];

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("unknown fixture `{0}`")]
    Unknown(String),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{file}: {msg}")]
    Format { file: String, msg: String },
    #[error("fixture `{name}`: {source}")]
    Diagram { name: String, source: DiagramError },
    #[error("fixture `{name}`: {source}")]
    Pair { name: String, source: TwistError },
    #[error("fixture `{name}`: {source}")]
    Polynomial { name: String, source: LaurentError },
    #[error("fixture `{name}`: {source}")]
    Framed { name: String, source: SurgeryError },
}

/// One named block: `key: value` fields and the remaining body lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Block {
    pub fields: Vec<(String, String)>,
    pub body: String,
}

impl Block {
    pub fn field(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Body plus every field line, for formats that are themselves `key: value`.
    pub fn raw(&self) -> String {
        let mut s: String = self.fields.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
        s.push_str(&self.body);
        s
    }
}

/// Splits a fixture file into named blocks, keeping their order.
pub fn parse_blocks(file: &str, text: &str) -> Result<Vec<(String, Block)>, FixtureError> {
    let mut out: Vec<(String, Block)> = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('%').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix("name:") {
            let name = name.trim().to_string();
            if out.iter().any(|(n, _)| *n == name) {
                return Err(FixtureError::Format { file: file.into(), msg: format!("duplicate name `{name}`") });
            }
            out.push((name, Block::default()));
            continue;
        }
        let Some((_, block)) = out.last_mut() else {
            return Err(FixtureError::Format {
                file: file.into(),
                msg: format!("line {}: content before the first `name:`", no + 1),
            });
        };
        match line.split_once(':') {
            Some((k, v)) => block.fields.push((k.trim().to_string(), v.trim().to_string())),
            None => {
                block.body.push_str(line);
                block.body.push('\n');
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct FixtureSet {
    files: BTreeMap<String, Vec<(String, Block)>>,
}

impl FixtureSet {
    /// The compiled-in fixtures.
    pub fn embedded() -> Self {
        Self::from_texts(FILES.iter().map(|&(f, t)| (f.to_string(), t.to_string())))
            .expect("bundled fixtures are well formed")
    }

    /// Reads `dir/<file>` for every fixture file.
    pub fn from_dir(dir: &Path) -> Result<Self, FixtureError> {
        let mut texts = Vec::new();
        for (f, _) in FILES {
            let path = dir.join(f);
            let t = std::fs::read_to_string(&path).map_err(|source| FixtureError::Io { path, source })?;
            texts.push((f.to_string(), t));
        }
        Self::from_texts(texts)
    }

    /// The directory named by `SLOPEKIT_FIXTURES`, or the embedded set.
    pub fn load() -> Result<Self, FixtureError> {
        match std::env::var_os(ENV_VAR) {
            Some(dir) if !dir.is_empty() => Self::from_dir(Path::new(&dir)),
            _ => Ok(Self::embedded()),
        }
    }

    fn from_texts(texts: impl IntoIterator<Item = (String, String)>) -> Result<Self, FixtureError> {
        let mut files = BTreeMap::new();
        for (f, t) in texts {
            let blocks = parse_blocks(&f, &t)?;
            files.insert(f, blocks);
        }
        Ok(Self { files })
    }

    fn block(&self, file: &str, name: &str) -> Result<&Block, FixtureError> {
        self.files
            .get(file)
            .and_then(|bs| bs.iter().find(|(n, _)| n == name))
            .map(|(_, b)| b)
            .ok_or_else(|| FixtureError::Unknown(name.to_string()))
    }

    fn names(&self, file: &str) -> Vec<String> {
        self.files.get(file).map(|bs| bs.iter().map(|(n, _)| n.clone()).collect()).unwrap_or_default()
    }

    pub fn diagram_names(&self) -> Vec<String> {
        self.names("diagrams.txt")
    }

    pub fn pair_names(&self) -> Vec<String> {
        self.names("pairs.txt")
    }

    pub fn polynomial_names(&self) -> Vec<String> {
        self.names("polynomials.txt")
    }

    pub fn framed_names(&self) -> Vec<String> {
        self.names("framed.txt")
    }

    /// A diagram by name; twisting pairs are found too.
    pub fn diagram(&self, name: &str) -> Result<LinkDiagram, FixtureError> {
        let b = self.block("diagrams.txt", name).or_else(|_| self.block("pairs.txt", name))?;
        parse_pd(&b.body).map_err(|source| FixtureError::Diagram { name: name.into(), source })
    }

    pub fn pair(&self, name: &str) -> Result<AnnotatedPair, FixtureError> {
        let b = self.block("pairs.txt", name)?;
        parse_pair_block(name, b)
    }

    pub fn pairs(&self) -> Result<Vec<(String, AnnotatedPair)>, FixtureError> {
        self.pair_names().into_iter().map(|n| self.pair(&n).map(|p| (n, p))).collect()
    }

    /// A polynomial by name, in the variables it is written in.
    pub fn polynomial<const N: usize>(&self, name: &str) -> Result<LPoly<N>, FixtureError> {
        let b = self.block("polynomials.txt", name)?;
        let text = b.field("poly").ok_or_else(|| FixtureError::Format {
            file: "polynomials.txt".into(),
            msg: format!("`{name}` has no `poly:` line"),
        })?;
        let vars: Vec<char> = b.field("vars").unwrap_or(if N == 1 { "t" } else { "x y" }).split_whitespace().filter_map(|v| v.chars().next()).collect();
        let vars: [char; N] = vars.try_into().map_err(|_| FixtureError::Format {
            file: "polynomials.txt".into(),
            msg: format!("`{name}` is not in {N} variables"),
        })?;
        LPoly::parse_with_vars(text, vars).map_err(|source| FixtureError::Polynomial { name: name.into(), source })
    }

    /// A twist family stored as its two-variable polynomial and linking number.
    pub fn family(&self, name: &str) -> Result<TwistFamily, FixtureError> {
        let b = self.block("polynomials.txt", name)?;
        let omega = b
            .field("omega")
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| FixtureError::Format { file: "polynomials.txt".into(), msg: format!("`{name}` has no omega") })?;
        Ok(TwistFamily::new(self.polynomial::<2>(name)?, omega))
    }

    pub fn framed(&self, name: &str) -> Result<FramedLink, FixtureError> {
        let b = self.block("framed.txt", name)?;
        FramedLink::parse(&b.raw()).map_err(|source| FixtureError::Framed { name: name.into(), source })
    }
}

/// Reads a pair block: the PD body plus `c:` and `gate:` fields.
pub fn parse_pair_block(name: &str, b: &Block) -> Result<AnnotatedPair, FixtureError> {
    let d = parse_pd(&b.body).map_err(|source| FixtureError::Diagram { name: name.into(), source })?;
    let pair_err = |source| FixtureError::Pair { name: name.into(), source };
    let c = b
        .field("c")
        .ok_or_else(|| pair_err(TwistError::NotAPair("missing `c:`".into())))?
        .parse()
        .map_err(|_| pair_err(TwistError::NotAPair("bad `c:`".into())))?;
    let gate = parse_gate(b.field("gate").unwrap_or("[]")).map_err(pair_err)?;
    AnnotatedPair::new(d, c, &gate).map_err(pair_err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{LPoly1, LPoly2};

    #[test]
    fn every_fixture_parses() {
        let f = FixtureSet::embedded();
        for n in f.diagram_names() {
            f.diagram(&n).unwrap();
        }
        for n in f.pair_names() {
            f.pair(&n).unwrap();
        }
        for n in f.polynomial_names() {
            let b = f.block("polynomials.txt", &n).unwrap();
            if b.field("vars").is_some_and(|v| v.split_whitespace().count() == 2) {
                f.polynomial::<2>(&n).unwrap();
            } else {
                f.polynomial::<1>(&n).unwrap();
            }
        }
        for n in f.framed_names() {
            f.framed(&n).unwrap();
        }
    }

    #[test]
    fn lookups() {
        let f = FixtureSet::embedded();
        assert_eq!(f.diagram("unknot").unwrap(), LinkDiagram::unknot());
        assert!(matches!(f.diagram("nope"), Err(FixtureError::Unknown(_))));
        let fam = f.family("family1").unwrap();
        assert_eq!(fam.omega, 1);
        let _: LPoly2 = fam.delta2;
        let _: LPoly1 = f.polynomial("jones_9_42").unwrap();
    }

    #[test]
    fn block_errors() {
        assert!(parse_blocks("f", "X[1,1,2,2]").is_err());
        assert!(parse_blocks("f", "name: a\nname: a").is_err());
        let bs = parse_blocks("f", "name: a % note\n% comment\nX[1,1,2,2]\nc: 0\n").unwrap();
        assert_eq!(bs[0].1.body, "X[1,1,2,2]\n");
        assert_eq!(bs[0].1.field("c"), Some("0"));
    }
}
