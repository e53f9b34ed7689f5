//! Generator catalog: the config file mapping group kinds to generator
//! quaternions, plus the closed-form generators of the cyclic and dihedral
//! families.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::spec::GroupSpec;

const BUILTIN: &str = include_str!("../data/generators.cfg");

const KINDS: [&str; 6] =
    ["tetra", "octa", "icosa", "binary-tetra", "binary-octa", "binary-icosa"];

/// Parsed generator catalog. The builtin one ships with the crate; custom
/// ones can be parsed from the documented config format.
#[derive(Clone, Debug)]
pub struct Catalog {
    generators: HashMap<String, Vec<Quaternion>>,
}

impl Catalog {
    /// The catalog shipped in `data/generators.cfg`.
    pub fn builtin() -> Catalog {
        Catalog::parse(BUILTIN).expect("builtin generator catalog must parse")
    }

    /// Parses the config format: `[kind]` headers followed by `w x y z`
    /// generator lines.
    pub fn parse(text: &str) -> Result<Catalog> {
        let mut generators: HashMap<String, Vec<Quaternion>> = HashMap::new();
        let mut current: Option<String> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(kind) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                if !KINDS.contains(&kind) {
                    return Err(Error::ConfigParse {
                        line: lineno,
                        msg: format!("unknown kind `{kind}`"),
                    });
                }
                generators.entry(kind.to_string()).or_default();
                current = Some(kind.to_string());
                continue;
            }
            let kind = current.clone().ok_or(Error::ConfigParse {
                line: lineno,
                msg: "generator line before any [kind] header".into(),
            })?;
            let fields: Vec<f64> = line
                .split_whitespace()
                .map(|f| f.parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::ConfigParse { line: lineno, msg: e.to_string() })?;
            if fields.len() != 4 {
                return Err(Error::ConfigParse {
                    line: lineno,
                    msg: format!("expected 4 decimal fields, got {}", fields.len()),
                });
            }
            let q = Quaternion::new(fields[0], fields[1], fields[2], fields[3])
                .map_err(|e| Error::ConfigParse { line: lineno, msg: e.to_string() })?;
            generators.get_mut(&kind).unwrap().push(q);
        }
        for kind in KINDS {
            match generators.get(kind) {
                Some(gens) if !gens.is_empty() => {}
                _ => {
                    return Err(Error::ConfigParse {
                        line: 0,
                        msg: format!("missing generators for `{kind}`"),
                    })
                }
            }
        }
        Ok(Catalog { generators })
    }

    pub fn generators(&self, kind: &str) -> Option<&[Quaternion]> {
        self.generators.get(kind).map(|v| v.as_slice())
    }

    /// Generator list for an atomic (non-product) spec, together with the
    /// flag saying whether to identify q with -q (SO(3) realization).
    pub(crate) fn generators_for(&self, spec: &GroupSpec) -> Result<(Vec<Quaternion>, bool)> {
        use GroupSpec::*;
        let fixed = |kind: &str| self.generators[kind].clone();
        let rot = |n: u32| Quaternion::rotation_z(2.0 * std::f64::consts::PI / n as f64);
        let flip = Quaternion { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
        let out = match spec {
            Cyclic(n) => (vec![rot(*n)], true),
            Dihedral(n) => (vec![rot(*n), flip], true),
            Tetra => (fixed("tetra"), true),
            Octa => (fixed("octa"), true),
            Icosa => (fixed("icosa"), true),
            BinaryCyclic(n) => (vec![rot(*n)], false),
            BinaryDihedral(n) => (vec![rot(*n), flip], false),
            BinaryTetra => (fixed("binary-tetra"), false),
            BinaryOcta => (fixed("binary-octa"), false),
            BinaryIcosa => (fixed("binary-icosa"), false),
            Product(_, _) => {
                return Err(Error::InvalidSpec(
                    "product specs have no single generator list".into(),
                ))
            }
        };
        Ok(out)
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::builtin()
    }
}
