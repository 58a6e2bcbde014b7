//! Input documents: an INI-like text format with `[ring]`, `[splitting]`,
//! and `[ideal <name>]` sections, plus a parallel JSON path with the same
//! schema. Polynomials are validated at build time against the declared
//! ring.

use crate::error::Error;
use crate::field::PrimeField;
use crate::ideal::{DeclaredFlags, Ideal};
use crate::monomial::MonomialOrder;
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::ring::Ring;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

pub const KNOWN_OPTIONS: &[&str] = &["max-members", "include-zero-ideal"];

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplittingSpec {
    pub e: u32,
    pub u: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealSpec {
    pub name: String,
    pub gens: Vec<String>,
    #[serde(default)]
    pub flags: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingSpec {
    pub p: u32,
    pub vars: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InputDocument {
    pub ring: RingSpec,
    #[serde(default)]
    pub splitting: Option<SplittingSpec>,
    #[serde(default)]
    pub ideals: Vec<IdealSpec>,
    #[serde(default)]
    pub options: BTreeMap<String, String>,
}

impl InputDocument {
    /// Parse either format: JSON if the first non-blank byte is `{`,
    /// otherwise the INI-like text format.
    pub fn parse(src: &str) -> Result<InputDocument, Error> {
        let doc = if src.trim_start().starts_with('{') {
            serde_json::from_str(src).map_err(|e| Error::Parse {
                line: e.line(),
                col: e.column(),
                msg: e.to_string(),
            })?
        } else {
            parse_ini(src)?
        };
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<(), Error> {
        PrimeField::new(self.ring.p)?;
        let mut seen = Vec::new();
        for i in &self.ideals {
            if seen.contains(&&i.name) {
                return Err(Error::Input(format!("duplicate ideal name {}", i.name)));
            }
            seen.push(&i.name);
            for f in &i.flags {
                if !["prime", "radical", "equidimensional"].contains(&f.as_str()) {
                    return Err(Error::Input(format!("unknown flag {f} on ideal {}", i.name)));
                }
            }
        }
        for k in self.options.keys() {
            if !KNOWN_OPTIONS.contains(&k.as_str()) {
                return Err(Error::Input(format!("unknown option key {k}")));
            }
        }
        Ok(())
    }

    pub fn build_ring(&self) -> Result<Arc<Ring>, Error> {
        Ring::new(
            PrimeField::new(self.ring.p)?,
            self.ring.vars.clone(),
            MonomialOrder::GrevLex,
        )
    }

    pub fn build_ideals(&self, ring: &Arc<Ring>) -> Result<Vec<Ideal>, Error> {
        self.ideals
            .iter()
            .map(|spec| {
                let gens = spec
                    .gens
                    .iter()
                    .map(|g| {
                        parse_polynomial(g, ring).map_err(|e| {
                            Error::Input(format!("ideal {}: {e}", spec.name))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let flags = DeclaredFlags {
                    prime: spec.flags.iter().any(|f| f == "prime"),
                    radical: spec.flags.iter().any(|f| f == "radical"),
                    equidimensional: spec.flags.iter().any(|f| f == "equidimensional"),
                };
                Ok(Ideal::new(ring, gens)?.with_flags(flags))
            })
            .collect()
    }

    pub fn build_splitting_u(&self, ring: &Arc<Ring>) -> Result<Option<(u32, Polynomial)>, Error> {
        match &self.splitting {
            None => Ok(None),
            Some(s) => {
                if s.e == 0 {
                    return Err(Error::Input("splitting exponent e must be >= 1".into()));
                }
                let u = parse_polynomial(&s.u, ring)
                    .map_err(|e| Error::Input(format!("splitting element u: {e}")))?;
                Ok(Some((s.e, u)))
            }
        }
    }

    pub fn option_usize(&self, key: &str) -> Result<Option<usize>, Error> {
        match self.options.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Error::Input(format!("option {key}: expected an integer, got {v}"))),
        }
    }

    pub fn option_bool(&self, key: &str) -> Result<Option<bool>, Error> {
        match self.options.get(key).map(|s| s.as_str()) {
            None => Ok(None),
            Some("true") => Ok(Some(true)),
            Some("false") => Ok(Some(false)),
            Some(v) => Err(Error::Input(format!("option {key}: expected true/false, got {v}"))),
        }
    }
}

fn parse_ini(src: &str) -> Result<InputDocument, Error> {
    enum Section {
        None,
        Ring,
        Splitting,
        Ideal(usize),
        Options,
    }
    let mut ring: Option<RingSpec> = None;
    let mut ring_p: Option<u32> = None;
    let mut ring_vars: Option<Vec<String>> = None;
    let mut splitting_e: Option<u32> = None;
    let mut splitting_u: Option<String> = None;
    let mut ideals: Vec<IdealSpec> = Vec::new();
    let mut options = BTreeMap::new();
    let mut section = Section::None;

    let err = |line: usize, col: usize, msg: &str| Error::Parse {
        line,
        col,
        msg: msg.to_string(),
    };

    for (lineno, raw) in src.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let inner = rest
                .strip_suffix(']')
                .ok_or_else(|| err(lineno, raw.len(), "unterminated section header"))?
                .trim();
            section = match inner {
                "ring" => Section::Ring,
                "splitting" => Section::Splitting,
                "options" => Section::Options,
                other => match other.strip_prefix("ideal ") {
                    Some(name) => {
                        let name = name.trim().to_string();
                        if name.is_empty() {
                            return Err(err(lineno, 1, "ideal section needs a name"));
                        }
                        ideals.push(IdealSpec { name, gens: Vec::new(), flags: Vec::new() });
                        Section::Ideal(ideals.len() - 1)
                    }
                    None => return Err(err(lineno, 1, &format!("unknown section [{inner}]"))),
                },
            };
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(lineno, 1, "expected key = value"))?;
        let (key, value) = (key.trim(), value.trim());
        let int = |v: &str| -> Result<u32, Error> {
            v.parse().map_err(|_| err(lineno, 1, &format!("{key}: expected an integer, got {v}")))
        };
        let list = |v: &str| -> Vec<String> {
            v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
        };
        match (&section, key) {
            (Section::Ring, "p") => ring_p = Some(int(value)?),
            (Section::Ring, "vars") => ring_vars = Some(list(value)),
            (Section::Splitting, "e") => splitting_e = Some(int(value)?),
            (Section::Splitting, "u") => splitting_u = Some(value.to_string()),
            (Section::Ideal(i), "gens") => ideals[*i].gens = list(value),
            (Section::Ideal(i), "flags") => ideals[*i].flags = list(value),
            (Section::Options, k) => {
                options.insert(k.to_string(), value.to_string());
            }
            (Section::None, _) => return Err(err(lineno, 1, "key before any section header")),
            _ => return Err(err(lineno, 1, &format!("unknown key {key} in this section"))),
        }
    }
    if let (Some(p), Some(vars)) = (ring_p, ring_vars) {
        ring = Some(RingSpec { p, vars });
    }
    let ring = ring.ok_or_else(|| Error::Input("missing [ring] section with p and vars".into()))?;
    let splitting = match (splitting_e, splitting_u) {
        (None, None) => None,
        (Some(e), Some(u)) => Some(SplittingSpec { e, u }),
        _ => return Err(Error::Input("[splitting] needs both e and u".into())),
    };
    Ok(InputDocument { ring, splitting, ideals, options })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# non-example over F_2
[ring]
p = 2
vars = x, y

[splitting]
e = 1
u = x*y

[ideal M]
gens = x, y
[ideal A]
gens = x
[ideal D]
gens = x + y
flags = prime

[options]
max-members = 12
";

    #[test]
    fn parses_sample() {
        let doc = InputDocument::parse(SAMPLE).unwrap();
        assert_eq!(doc.ring.p, 2);
        assert_eq!(doc.ring.vars, vec!["x", "y"]);
        assert_eq!(doc.splitting.as_ref().unwrap().e, 1);
        assert_eq!(doc.ideals.len(), 3);
        assert!(doc.ideals[2].flags.contains(&"prime".to_string()));
        assert_eq!(doc.option_usize("max-members").unwrap(), Some(12));
        let ring = doc.build_ring().unwrap();
        let ideals = doc.build_ideals(&ring).unwrap();
        assert!(ideals[2].flags().prime);
        let (e, u) = doc.build_splitting_u(&ring).unwrap().unwrap();
        assert_eq!(e, 1);
        assert_eq!(u.render(), "x*y");
    }

    #[test]
    fn minimal_document() {
        let doc = InputDocument::parse("[ring]\np = 2\nvars = x, y\n[ideal A]\ngens = x\n").unwrap();
        assert_eq!(doc.ideals.len(), 1);
        assert!(doc.splitting.is_none());
    }

    #[test]
    fn json_path_same_schema() {
        let doc = InputDocument::parse(
            r#"{"ring": {"p": 3, "vars": ["x", "y"]},
                "splitting": {"e": 1, "u": "x^2*y^2"},
                "ideals": [{"name": "A", "gens": ["x*y"]}]}"#,
        )
        .unwrap();
        assert_eq!(doc.ring.p, 3);
        let ring = doc.build_ring().unwrap();
        assert_eq!(doc.build_ideals(&ring).unwrap()[0].render(), "<x*y>");
    }

    #[test]
    fn non_prime_p_rejected() {
        let e = InputDocument::parse("[ring]\np = 4\nvars = x\n").unwrap_err();
        assert!(matches!(e, Error::NotPrime(4)));
    }

    #[test]
    fn duplicate_ideal_names_rejected() {
        let src = "[ring]\np = 2\nvars = x\n[ideal A]\ngens = x\n[ideal A]\ngens = x\n";
        assert!(InputDocument::parse(src).is_err());
    }

    #[test]
    fn unknown_option_rejected() {
        let src = "[ring]\np = 2\nvars = x\n[options]\nspeed = fast\n";
        assert!(InputDocument::parse(src).is_err());
    }

    #[test]
    fn syntax_error_position() {
        let src = "[ring]\np = 2\nvars = x\nbogus line without equals\n";
        match InputDocument::parse(src).unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn bad_generator_reported_with_ideal_name() {
        let doc = InputDocument::parse("[ring]\np = 2\nvars = x\n[ideal A]\ngens = q\n").unwrap();
        let ring = doc.build_ring().unwrap();
        let e = doc.build_ideals(&ring).unwrap_err();
        assert!(e.to_string().contains("ideal A"));
    }
}
