//! Group catalog specifications and their compact string codes.
//!
//! Codes: `Z<n>` cyclic, `D<n>` dihedral, `T`/`O`/`I` the polyhedral groups
//! (aliases `A4`/`S4`/`A5`), prefix `2` for the binary (SU(2)) covers, infix
//! `x` for products, e.g. `2T`, `Z5`, `2D4`, `TxT`.

use crate::error::{Error, Result};

/// Hard cap on group order; the largest supported case is 2I x 2I.
pub const MAX_ORDER: usize = 14_400;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u32),
    Dihedral(u32),
    Tetra,
    Octa,
    Icosa,
    BinaryCyclic(u32),
    BinaryDihedral(u32),
    BinaryTetra,
    BinaryOcta,
    BinaryIcosa,
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    /// Catalog order of the group this spec describes.
    pub fn predicted_order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n as usize,
            GroupSpec::Dihedral(n) => 2 * *n as usize,
            GroupSpec::Tetra => 12,
            GroupSpec::Octa => 24,
            GroupSpec::Icosa => 60,
            GroupSpec::BinaryCyclic(n) => 2 * *n as usize,
            GroupSpec::BinaryDihedral(n) => 4 * *n as usize,
            GroupSpec::BinaryTetra => 24,
            GroupSpec::BinaryOcta => 48,
            GroupSpec::BinaryIcosa => 120,
            GroupSpec::Product(a, b) => a.predicted_order() * b.predicted_order(),
        }
    }

    fn product_depth(&self) -> usize {
        match self {
            GroupSpec::Product(a, b) => 1 + a.product_depth().max(b.product_depth()),
            _ => 0,
        }
    }

    /// Validates the catalog constraints: n >= 1, product nesting <= 2,
    /// predicted order within [`MAX_ORDER`].
    pub fn validate(&self) -> Result<()> {
        self.validate_inner()?;
        if self.product_depth() > 2 {
            return Err(Error::InvalidSpec("product nesting deeper than 2".into()));
        }
        let order = self.predicted_order();
        if order > MAX_ORDER {
            return Err(Error::InvalidSpec(format!(
                "predicted order {order} exceeds the cap of {MAX_ORDER}"
            )));
        }
        Ok(())
    }

    fn validate_inner(&self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(n)
            | GroupSpec::Dihedral(n)
            | GroupSpec::BinaryCyclic(n)
            | GroupSpec::BinaryDihedral(n) => {
                if *n == 0 {
                    return Err(Error::InvalidSpec("n = 0".into()));
                }
            }
            GroupSpec::Product(a, b) => {
                a.validate_inner()?;
                b.validate_inner()?;
            }
            _ => {}
        }
        Ok(())
    }

    /// Compact code, parseable by [`GroupSpec::parse`].
    pub fn code(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("Z{n}"),
            GroupSpec::Dihedral(n) => format!("D{n}"),
            GroupSpec::Tetra => "T".into(),
            GroupSpec::Octa => "O".into(),
            GroupSpec::Icosa => "I".into(),
            GroupSpec::BinaryCyclic(n) => format!("2Z{n}"),
            GroupSpec::BinaryDihedral(n) => format!("2D{n}"),
            GroupSpec::BinaryTetra => "2T".into(),
            GroupSpec::BinaryOcta => "2O".into(),
            GroupSpec::BinaryIcosa => "2I".into(),
            GroupSpec::Product(a, b) => format!("{}x{}", a.code(), b.code()),
        }
    }

    /// Long descriptive name, e.g. `Tetra`, `Cyclic(5)`, `BinaryIcosa`.
    pub fn name(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("Cyclic({n})"),
            GroupSpec::Dihedral(n) => format!("Dihedral({n})"),
            GroupSpec::Tetra => "Tetra".into(),
            GroupSpec::Octa => "Octa".into(),
            GroupSpec::Icosa => "Icosa".into(),
            GroupSpec::BinaryCyclic(n) => format!("BinaryCyclic({n})"),
            GroupSpec::BinaryDihedral(n) => format!("BinaryDihedral({n})"),
            GroupSpec::BinaryTetra => "BinaryTetra".into(),
            GroupSpec::BinaryOcta => "BinaryOcta".into(),
            GroupSpec::BinaryIcosa => "BinaryIcosa".into(),
            GroupSpec::Product(a, b) => format!("Product({}, {})", a.name(), b.name()),
        }
    }

    /// Parses a compact code like `2T`, `Z5`, `TxT`, `A4`.
    pub fn parse(code: &str) -> Result<GroupSpec> {
        let code = code.trim();
        if code.is_empty() {
            return Err(Error::InvalidSpec("empty group spec".into()));
        }
        let mut spec: Option<GroupSpec> = None;
        for token in code.split('x') {
            let atom = Self::parse_atom(token)?;
            spec = Some(match spec {
                None => atom,
                Some(s) => GroupSpec::Product(Box::new(s), Box::new(atom)),
            });
        }
        let spec = spec.unwrap();
        spec.validate()?;
        Ok(spec)
    }

    fn parse_atom(token: &str) -> Result<GroupSpec> {
        let token = token.trim();
        let bad = || Error::InvalidSpec(format!("unknown group spec `{token}`"));
        let (binary, rest) = match token.strip_prefix('2') {
            Some(rest) => (true, rest),
            None => (false, token),
        };
        let spec = match rest {
            "T" => {
                if binary { GroupSpec::BinaryTetra } else { GroupSpec::Tetra }
            }
            "O" => {
                if binary { GroupSpec::BinaryOcta } else { GroupSpec::Octa }
            }
            "I" => {
                if binary { GroupSpec::BinaryIcosa } else { GroupSpec::Icosa }
            }
            "A4" if !binary => GroupSpec::Tetra,
            "S4" if !binary => GroupSpec::Octa,
            "A5" if !binary => GroupSpec::Icosa,
            _ => {
                let (family, digits) = rest.split_at(1);
                let n: u32 = digits.parse().map_err(|_| bad())?;
                if n == 0 {
                    return Err(Error::InvalidSpec(format!("n = 0 in `{token}`")));
                }
                match (family, binary) {
                    ("Z", false) => GroupSpec::Cyclic(n),
                    ("Z", true) => GroupSpec::BinaryCyclic(n),
                    ("D", false) => GroupSpec::Dihedral(n),
                    ("D", true) => GroupSpec::BinaryDihedral(n),
                    _ => return Err(bad()),
                }
            }
        };
        Ok(spec)
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.code())
    }
}

/// The SO(3) catalog up to `max_order`: cyclic, dihedral, and the three
/// polyhedral groups, in a deterministic order.
pub fn so3_catalog(max_order: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(GroupSpec::Cyclic(n as u32));
    }
    for n in 1..=(max_order / 2) {
        out.push(GroupSpec::Dihedral(n as u32));
    }
    for g in [GroupSpec::Tetra, GroupSpec::Octa, GroupSpec::Icosa] {
        if g.predicted_order() <= max_order {
            out.push(g);
        }
    }
    out
}

/// The binary (SU(2)) catalog up to `max_order`.
pub fn binary_catalog(max_order: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for n in 1..=(max_order / 2) {
        out.push(GroupSpec::BinaryCyclic(n as u32));
    }
    for n in 1..=(max_order / 4) {
        out.push(GroupSpec::BinaryDihedral(n as u32));
    }
    for g in [GroupSpec::BinaryTetra, GroupSpec::BinaryOcta, GroupSpec::BinaryIcosa] {
        if g.predicted_order() <= max_order {
            out.push(g);
        }
    }
    out
}

/// Both catalogs merged.
pub fn full_catalog(max_order: usize) -> Vec<GroupSpec> {
    let mut out = so3_catalog(max_order);
    out.extend(binary_catalog(max_order));
    out
}
