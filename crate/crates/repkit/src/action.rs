//! The module-category action of Rep(SO(3))/Rep(SU(2)) on Rep(Gamma):
//! restriction of spins, action matrices, the module axiom against SU(2)
//! fusion, and induction via Frobenius reciprocity.

use num_complex::Complex64;

use crate::chartable::CharacterTable;
use crate::error::{Error, Result};
use crate::fusion::round_multiplicity;
use crate::group::Realization;
use crate::labels::SpinLabel;

/// SU(2) character of spin j at rotation angle theta in [0, 2pi]:
/// sin((2j+1) theta/2) / sin(theta/2), with the limit branch at the
/// endpoints.
pub fn su2_character_at(j: SpinLabel, theta: f64) -> f64 {
    let half = theta / 2.0;
    let s = half.sin();
    if s.abs() < 1e-9 {
        // theta ~ 0 gives 2j+1; theta ~ 2pi gives (-1)^(2j) (2j+1)
        let sign = if theta > std::f64::consts::PI && j.twice_j % 2 == 1 { -1.0 } else { 1.0 };
        return sign * j.dim() as f64;
    }
    ((j.dim() as f64) * half).sin() / s
}

/// Checks that a spin is admissible for the group: any spin for binary
/// groups, integer spins for plain SO(3) subgroups, nothing for products.
pub(crate) fn check_spin(t: &CharacterTable, j: SpinLabel) -> Result<()> {
    match t.group.realization {
        Realization::Product => Err(Error::RequiresRotationGroup(format!(
            "group {} is a product and carries no class rotation angles",
            t.group.spec
        ))),
        Realization::So3 if !j.is_integer() => {
            Err(Error::HalfIntegerOnNonBinary { twice_j: j.twice_j })
        }
        _ => Ok(()),
    }
}

/// Spins admissible for the group, up to and including `j_max`.
pub fn admissible_spins(t: &CharacterTable, j_max: SpinLabel) -> Result<Vec<SpinLabel>> {
    check_spin(t, SpinLabel::ZERO)?;
    let step = match t.group.realization {
        Realization::Su2 => 1,
        _ => 2,
    };
    Ok((0..=j_max.twice_j).step_by(step).map(SpinLabel::from_twice).collect())
}

/// Multiplicities of the Gamma-irreps in the restriction of spin j.
pub fn restrict_spin(t: &CharacterTable, j: SpinLabel) -> Result<Vec<u32>> {
    check_spin(t, j)?;
    let g = &t.group;
    let order = g.order as f64;
    let spin_char: Vec<f64> =
        g.classes.iter().map(|c| su2_character_at(j, c.angle)).collect();
    let mut out = Vec::with_capacity(t.irreps.len());
    for row in &t.chi {
        let mut s = Complex64::new(0.0, 0.0);
        for (k, class) in g.classes.iter().enumerate() {
            s += class.size as f64 * spin_char[k] * row[k].conj();
        }
        out.push(round_multiplicity(s / order)?);
    }
    Ok(out)
}

/// Action of spin j on Rep(Gamma) at multiplicity level:
/// `m[rho][sigma]` counts sigma inside Res(j) (x) rho.
#[derive(Clone, Debug)]
pub struct ActionMatrix {
    pub j: SpinLabel,
    pub m: Vec<Vec<u32>>,
}

impl ActionMatrix {
    pub fn as_i64(&self) -> Vec<Vec<i64>> {
        self.m.iter().map(|row| row.iter().map(|&v| v as i64).collect()).collect()
    }
}

pub fn action_matrix(t: &CharacterTable, j: SpinLabel) -> Result<ActionMatrix> {
    check_spin(t, j)?;
    let g = &t.group;
    let order = g.order as f64;
    let n = t.irreps.len();
    let spin_char: Vec<f64> =
        g.classes.iter().map(|c| su2_character_at(j, c.angle)).collect();
    let mut m = vec![vec![0u32; n]; n];
    for rho in 0..n {
        for sigma in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for (k, class) in g.classes.iter().enumerate() {
                s += class.size as f64 * spin_char[k] * t.chi[rho][k] * t.chi[sigma][k].conj();
            }
            m[rho][sigma] = round_multiplicity(s / order)?;
        }
    }
    Ok(ActionMatrix { j, m })
}

/// SU(2) fusion rule: 1 iff the triangle inequality holds and the total
/// twice-spin is even, else 0.
pub fn su2_fusion(j1: SpinLabel, j2: SpinLabel, j3: SpinLabel) -> u32 {
    let (a, b, c) = (j1.twice_j as i64, j2.twice_j as i64, j3.twice_j as i64);
    let triangle = (a - b).abs() <= c && c <= a + b;
    let parity = (a + b + c) % 2 == 0;
    u32::from(triangle && parity)
}

#[derive(Clone, Debug)]
pub struct ModuleAxiomViolation {
    pub twice_j1: u32,
    pub twice_j2: u32,
    pub rho: usize,
    pub sigma: usize,
    pub lhs: i64,
    pub rhs: i64,
}

/// Result of checking M_{j1} M_{j2} = sum_{j3} N(j1,j2,j3) M_{j3} over all
/// admissible pairs up to j_max. Violations indicate an implementation
/// bug, not a property of the group.
#[derive(Clone, Debug)]
pub struct ModuleAxiomReport {
    pub group: String,
    pub twice_j_max: u32,
    pub pairs_checked: usize,
    pub violations: Vec<ModuleAxiomViolation>,
}

impl ModuleAxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_module_axiom(t: &CharacterTable, j_max: SpinLabel) -> Result<ModuleAxiomReport> {
    let spins = admissible_spins(t, j_max)?;
    // the right-hand side runs over j3 <= j1 + j2
    let top = SpinLabel::from_twice(2 * j_max.twice_j);
    let all_spins = admissible_spins(t, top)?;
    let mut matrices = std::collections::HashMap::new();
    for &j in &all_spins {
        matrices.insert(j.twice_j, action_matrix(t, j)?.as_i64());
    }

    let n = t.irreps.len();
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for &j1 in &spins {
        for &j2 in &spins {
            pairs_checked += 1;
            let m1 = &matrices[&j1.twice_j];
            let m2 = &matrices[&j2.twice_j];
            let mut rhs = vec![vec![0i64; n]; n];
            for &j3 in &all_spins {
                let coupling = su2_fusion(j1, j2, j3) as i64;
                if coupling == 0 {
                    continue;
                }
                let m3 = &matrices[&j3.twice_j];
                for r in 0..n {
                    for c in 0..n {
                        rhs[r][c] += coupling * m3[r][c];
                    }
                }
            }
            for r in 0..n {
                for c in 0..n {
                    let mut lhs = 0i64;
                    for e in 0..n {
                        lhs += m1[r][e] * m2[e][c];
                    }
                    if lhs != rhs[r][c] {
                        violations.push(ModuleAxiomViolation {
                            twice_j1: j1.twice_j,
                            twice_j2: j2.twice_j,
                            rho: r,
                            sigma: c,
                            lhs,
                            rhs: rhs[r][c],
                        });
                    }
                }
            }
        }
    }
    Ok(ModuleAxiomReport {
        group: t.group.spec.code(),
        twice_j_max: j_max.twice_j,
        pairs_checked,
        violations,
    })
}

/// Induction multiplicities of the irrep `rho` into spins j <= j_max,
/// defined by Frobenius reciprocity.
#[derive(Clone, Debug)]
pub struct InductionRow {
    pub rho: usize,
    pub spins: Vec<SpinLabel>,
    pub multiplicities: Vec<u32>,
}

pub fn induction_row(t: &CharacterTable, rho: usize, j_max: SpinLabel) -> Result<InductionRow> {
    let spins = admissible_spins(t, j_max)?;
    let g = &t.group;
    let order = g.order as f64;
    let mut multiplicities = Vec::with_capacity(spins.len());
    for &j in &spins {
        let mut s = Complex64::new(0.0, 0.0);
        for (k, class) in g.classes.iter().enumerate() {
            s += class.size as f64 * t.chi[rho][k] * su2_character_at(j, class.angle);
        }
        multiplicities.push(round_multiplicity(s.conj() / order)?);
    }
    Ok(InductionRow { rho, spins, multiplicities })
}
