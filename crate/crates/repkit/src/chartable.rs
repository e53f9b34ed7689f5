//! Character tables by simultaneous diagonalization of class-sum matrices.
//!
//! The class algebra gives exact integer structure constants
//! `a[i][j][k] = #{(x, y) in C_i x C_j : xy = z_k}`. Conjugating the class
//! matrices `N_i = a[i][.][.]` by `D = diag(sqrt|C_k|)` makes them a
//! commuting normal family whose common eigenvectors are, up to scale, the
//! columns `sqrt(|C_k|) chi(g_k) / dim`. A seeded random combination is
//! split into its symmetric and antisymmetric parts; the symmetric part
//! separates irreps up to complex conjugation and the antisymmetric part
//! splits conjugate pairs. Every candidate table is verified against
//! orthogonality, integrality, and the class-algebra equations before it is
//! accepted; failures retry with the next seed.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{splitmix64, FiniteGroup, Realization};

/// Absolute tolerance for row/column orthogonality residuals.
pub const ORTHO_TOL: f64 = 1e-8;
/// Tolerance for irrep dimensions to be integral.
pub const DIM_TOL: f64 = 1e-8;
/// Tolerance for multiplicity rounding (fusion, restriction).
pub const MULT_TOL: f64 = 1e-6;

const RETRIES: u64 = 8;

#[derive(Clone, Debug)]
pub struct Irrep {
    pub index: usize,
    pub dim: usize,
    /// Paper-style tag: dimension with prime marks for repeats, e.g.
    /// `1`, `1'`, `1''`, `3`.
    pub name: String,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: Arc<FiniteGroup>,
    pub irreps: Vec<Irrep>,
    /// Rows = irreps (sorted by dim, then by descending rounded character
    /// vector so the trivial character is row 0), columns = classes.
    pub chi: Vec<Vec<Complex64>>,
}

impl CharacterTable {
    pub fn n_classes(&self) -> usize {
        self.group.classes.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.irreps.iter().map(|r| r.dim).collect()
    }

    /// Looks an irrep up by its name tag, falling back to a numeric index.
    pub fn irrep_by_name(&self, name: &str) -> Option<usize> {
        if let Some(idx) = self.irreps.iter().position(|r| r.name == name) {
            return Some(idx);
        }
        name.parse::<usize>().ok().filter(|&i| i < self.irreps.len())
    }

    /// Index of the complex-conjugate irrep.
    pub fn dual_of(&self, a: usize) -> usize {
        let want: Vec<Complex64> = self.chi[a].iter().map(|z| z.conj()).collect();
        for (i, row) in self.chi.iter().enumerate() {
            if row
                .iter()
                .zip(&want)
                .all(|(x, y)| (x - y).norm() < 1e-6)
            {
                return i;
            }
        }
        unreachable!("character table closed under conjugation");
    }

    /// max_{i,j} |<chi_i, chi_j> - |G| delta_ij| over rows.
    pub fn row_orthogonality_residual(&self) -> f64 {
        let g = &self.group;
        let n = self.irreps.len();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let mut s = Complex64::new(0.0, 0.0);
                for (c, class) in g.classes.iter().enumerate() {
                    s += class.size as f64 * self.chi[i][c] * self.chi[j][c].conj();
                }
                let target = if i == j { g.order as f64 } else { 0.0 };
                worst = worst.max((s - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }

    /// max over class pairs of the column-orthogonality residual.
    pub fn column_orthogonality_residual(&self) -> f64 {
        let g = &self.group;
        let ncl = g.classes.len();
        let mut worst = 0.0f64;
        for c in 0..ncl {
            for d in 0..ncl {
                let mut s = Complex64::new(0.0, 0.0);
                for row in &self.chi {
                    s += row[c] * row[d].conj();
                }
                let target = if c == d { g.order as f64 / g.classes[c].size as f64 } else { 0.0 };
                worst = worst.max((s - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }
}

/// Character table with the default seed 0.
pub fn character_table(group: &Arc<FiniteGroup>) -> Result<CharacterTable> {
    character_table_seeded(group, 0)
}

/// Character table with an explicit diagonalization seed (the CLI wires
/// REPKIT_SEED here). Retries up to 8 consecutive seeds before giving up.
pub fn character_table_seeded(group: &Arc<FiniteGroup>, seed: u64) -> Result<CharacterTable> {
    if group.realization == Realization::Product {
        return product_table(group, seed);
    }
    let ncl = group.classes.len();
    let constants = StructureConstants::compute(group);
    let mut last_err = String::new();
    for attempt in 0..RETRIES {
        match burnside_attempt(group, &constants, seed.wrapping_add(attempt)) {
            Ok(rows) => return finish_table(group, rows),
            Err(e) => last_err = e.to_string(),
        }
    }
    Err(Error::NumericalDegeneracy(format!(
        "failed to separate {ncl} eigenspaces after {RETRIES} seeds: {last_err}"
    )))
}

/// Exact integer class-algebra structure constants, flattened as
/// `a[(i * ncl + j) * ncl + k]`.
struct StructureConstants {
    ncl: usize,
    a: Vec<i64>,
}

impl StructureConstants {
    fn compute(group: &FiniteGroup) -> StructureConstants {
        let ncl = group.classes.len();
        let mut a = vec![0i64; ncl * ncl * ncl];
        for (k, class) in group.classes.iter().enumerate() {
            let z = class.representative;
            for x in 0..group.order {
                let i = group.class_of(x);
                let j = group.class_of(group.mult(group.inv(x), z));
                a[(i * ncl + j) * ncl + k] += 1;
            }
        }
        StructureConstants { ncl, a }
    }

    #[inline]
    fn at(&self, i: usize, j: usize, k: usize) -> i64 {
        self.a[(i * self.ncl + j) * self.ncl + k]
    }
}

/// One diagonalization attempt; returns unsorted character rows.
fn burnside_attempt(
    group: &FiniteGroup,
    constants: &StructureConstants,
    seed: u64,
) -> Result<Vec<Vec<Complex64>>> {
    let ncl = constants.ncl;
    let order = group.order as f64;
    let sqrt_size: Vec<f64> = group.classes.iter().map(|c| (c.size as f64).sqrt()).collect();

    // Seeded coefficients in [-1, 1].
    let mut state = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ 0x5bd1_e995;
    let mut coeff = || {
        state = splitmix64(state);
        (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    };

    // Normalized class matrices combined into symmetric and antisymmetric
    // parts with independent coefficients.
    let mut sym = DMatrix::<f64>::zeros(ncl, ncl);
    let mut asym = DMatrix::<f64>::zeros(ncl, ncl);
    for i in 0..ncl {
        let t = coeff();
        let s = coeff();
        for j in 0..ncl {
            for k in 0..ncl {
                let njk = constants.at(i, j, k) as f64 * sqrt_size[k] / sqrt_size[j];
                let nkj = constants.at(i, k, j) as f64 * sqrt_size[j] / sqrt_size[k];
                sym[(j, k)] += t * (njk + nkj) / 2.0;
                asym[(j, k)] += s * (njk - nkj) / 2.0;
            }
        }
    }

    let eig = nalgebra::SymmetricEigen::new(sym);
    let mut idx: Vec<usize> = (0..ncl).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let scale = 1.0 + eig.eigenvalues.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let gap_tol = 1e-7 * scale;

    // Eigenvectors of the symmetric part, clustered by eigenvalue; each
    // cluster is refined with the antisymmetric part.
    let mut vectors: Vec<DVector<Complex64>> = Vec::new();
    let mut start = 0;
    while start < ncl {
        let mut end = start + 1;
        while end < ncl
            && eig.eigenvalues[idx[end]] - eig.eigenvalues[idx[end - 1]] < gap_tol
        {
            end += 1;
        }
        let k = end - start;
        let basis = DMatrix::<f64>::from_fn(ncl, k, |r, c| eig.eigenvectors[(r, idx[start + c])]);
        if k == 1 {
            vectors.push(basis.column(0).map(|v| Complex64::new(v, 0.0)));
        } else {
            split_cluster(&basis, &asym, gap_tol, &mut vectors)?;
        }
        start = end;
    }
    if vectors.len() != ncl {
        return Err(Error::NumericalDegeneracy(format!(
            "{} candidate eigenvectors for {ncl} classes",
            vectors.len()
        )));
    }

    // Candidate eigenvector -> character row.
    let e_class = group.class_of(0);
    let mut rows = Vec::with_capacity(ncl);
    for v in &vectors {
        let x: Vec<Complex64> =
            (0..ncl).map(|kk| v[kk] / Complex64::new(sqrt_size[kk], 0.0)).collect();
        let xe = x[e_class];
        if xe.norm() < 1e-10 {
            return Err(Error::NumericalDegeneracy(
                "candidate vanishes on the identity class".into(),
            ));
        }
        let y: Vec<Complex64> = x.iter().map(|z| z / xe).collect();
        let weight: f64 =
            y.iter().zip(&group.classes).map(|(z, c)| c.size as f64 * z.norm_sqr()).sum();
        let dim = (order / weight).sqrt();
        if (dim - dim.round()).abs() > DIM_TOL || dim.round() < 1.0 {
            return Err(Error::NumericalDegeneracy(format!(
                "non-integral irrep dimension {dim}"
            )));
        }
        rows.push(y.into_iter().map(|z| z * dim).collect::<Vec<_>>());
    }

    verify_rows(group, constants, &rows)?;
    Ok(rows)
}

/// Splits a degenerate eigenspace of the symmetric combination using the
/// antisymmetric one. Conjugate character pairs show up as 2-dimensional
/// rotation blocks; real characters sit in the kernel.
fn split_cluster(
    basis: &DMatrix<f64>,
    asym: &DMatrix<f64>,
    gap_tol: f64,
    out: &mut Vec<DVector<Complex64>>,
) -> Result<()> {
    let k = basis.ncols();
    let restricted = basis.transpose() * asym * basis;
    // enforce exact antisymmetry of the restriction
    let restricted = (&restricted - restricted.transpose()) * 0.5;
    let squared = restricted.transpose() * &restricted; // = -K^2, PSD
    let eig = nalgebra::SymmetricEigen::new(squared);
    let mut idx: Vec<usize> = (0..k).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let bmax = eig.eigenvalues[idx[k - 1]].max(0.0).sqrt();
    let zero_tol = (1e-6 * (1.0 + bmax)).powi(2);

    let mut used = vec![false; k];
    for &col in &idx {
        if used[col] {
            continue;
        }
        used[col] = true;
        let p = eig.eigenvectors.column(col).into_owned();
        if eig.eigenvalues[col] <= zero_tol {
            // kernel: real character direction
            let v = basis * p;
            out.push(v.map(|x| Complex64::new(x, 0.0)));
            continue;
        }
        let b = eig.eigenvalues[col].sqrt();
        let u = &restricted * &p / b;
        // mark the partner eigenvector of the rotation block as consumed
        let mut best = None;
        let mut best_overlap = gap_tol.max(0.5); // overlap is ~1 for the true partner
        for &other in &idx {
            if !used[other] {
                let overlap = eig.eigenvectors.column(other).dot(&u).abs();
                if overlap > best_overlap {
                    best_overlap = overlap;
                    best = Some(other);
                }
            }
        }
        let partner = best.ok_or_else(|| {
            Error::NumericalDegeneracy("unpaired rotation block in cluster split".into())
        })?;
        used[partner] = true;
        let re = basis * p;
        let im = basis * u;
        let plus = DVector::from_fn(re.nrows(), |r, _| Complex64::new(re[r], im[r]));
        let minus = DVector::from_fn(re.nrows(), |r, _| Complex64::new(re[r], -im[r]));
        out.push(plus / Complex64::new(2.0f64.sqrt(), 0.0));
        out.push(minus / Complex64::new(2.0f64.sqrt(), 0.0));
    }
    Ok(())
}

/// Full verification of a candidate table: orthogonality, dimension sum,
/// and sampled class-algebra consistency.
fn verify_rows(
    group: &FiniteGroup,
    constants: &StructureConstants,
    rows: &[Vec<Complex64>],
) -> Result<()> {
    let ncl = constants.ncl;
    let order = group.order as f64;
    let e_class = group.class_of(0);

    let mut dim_sq = 0i64;
    for row in rows {
        dim_sq += (row[e_class].re.round() as i64).pow(2);
    }
    if dim_sq != group.order as i64 {
        return Err(Error::NumericalDegeneracy(format!(
            "sum of squared dims {dim_sq} != group order {}",
            group.order
        )));
    }

    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate() {
            let mut s = Complex64::new(0.0, 0.0);
            for (c, class) in group.classes.iter().enumerate() {
                s += class.size as f64 * a[c] * b[c].conj();
            }
            let target = if i == j { order } else { 0.0 };
            if (s - Complex64::new(target, 0.0)).norm() > ORTHO_TOL {
                return Err(Error::NumericalDegeneracy(format!(
                    "orthogonality residual {:.3e} between rows {i} and {j}",
                    (s - Complex64::new(target, 0.0)).norm()
                )));
            }
        }
    }

    // omega_i omega_j = sum_k a_ijk omega_k on a deterministic sample of
    // class pairs, with omega_i = |C_i| chi_i / dim.
    let mut state = 0xc1a55_a16e8_u64;
    for row in rows {
        let dim = row[e_class].re;
        let omega: Vec<Complex64> = (0..ncl)
            .map(|c| row[c] * (group.classes[c].size as f64) / dim)
            .collect();
        let pairs = (4 * ncl).min(ncl * ncl);
        for _ in 0..pairs {
            state = splitmix64(state);
            let i = (state % ncl as u64) as usize;
            state = splitmix64(state);
            let j = (state % ncl as u64) as usize;
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..ncl {
                s += Complex64::new(constants.at(i, j, k) as f64, 0.0) * omega[k];
            }
            let lhs = omega[i] * omega[j];
            let tol = 1e-7 * (1.0 + lhs.norm());
            if (lhs - s).norm() > tol {
                return Err(Error::NumericalDegeneracy(format!(
                    "class algebra residual {:.3e} at pair ({i}, {j})",
                    (lhs - s).norm()
                )));
            }
        }
    }
    Ok(())
}

fn round9(v: f64) -> i64 {
    let r = (v * 1e9).round();
    if r == 0.0 {
        0
    } else {
        r as i64
    }
}

/// Sorts rows (dim ascending, then descending rounded character vector, so
/// the all-ones trivial character lands in row 0), assigns names, and
/// packages the table.
fn finish_table(group: &Arc<FiniteGroup>, rows: Vec<Vec<Complex64>>) -> Result<CharacterTable> {
    let e_class = group.class_of(0);
    let mut keyed: Vec<(i64, Vec<i64>, Vec<Complex64>)> = rows
        .into_iter()
        .map(|row| {
            let dim = row[e_class].re.round() as i64;
            let mut key = Vec::with_capacity(2 * row.len());
            for z in &row {
                key.push(-round9(z.re));
                key.push(-round9(z.im));
            }
            (dim, key, row)
        })
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    let trivial_ok = keyed[0].2.iter().all(|z| (z - Complex64::new(1.0, 0.0)).norm() < 1e-6);
    if !trivial_ok {
        return Err(Error::NumericalDegeneracy(
            "trivial character did not sort to row 0".into(),
        ));
    }

    let mut seen: std::collections::HashMap<i64, usize> = std::collections::HashMap::new();
    let mut irreps = Vec::with_capacity(keyed.len());
    let mut chi = Vec::with_capacity(keyed.len());
    for (index, (dim, _, row)) in keyed.into_iter().enumerate() {
        let repeat = seen.entry(dim).or_insert(0);
        let name = match *repeat {
            0 => format!("{dim}"),
            r @ 1..=3 => format!("{dim}{}", "'".repeat(r)),
            r => format!("{dim}({r})"),
        };
        *repeat += 1;
        irreps.push(Irrep { index, dim: dim as usize, name });
        chi.push(row);
    }
    Ok(CharacterTable { group: Arc::clone(group), irreps, chi })
}

/// Product groups: the table is the tensor product of the factor tables,
/// evaluated on the product classes.
fn product_table(group: &Arc<FiniteGroup>, seed: u64) -> Result<CharacterTable> {
    let (sa, sb) = match &group.spec {
        crate::spec::GroupSpec::Product(a, b) => (a.as_ref().clone(), b.as_ref().clone()),
        _ => unreachable!("product realization implies product spec"),
    };
    let ga = Arc::new(crate::group::build_group(&sa)?);
    let gb = Arc::new(crate::group::build_group(&sb)?);
    let ta = character_table_seeded(&ga, seed)?;
    let tb = character_table_seeded(&gb, seed)?;

    let nb = gb.order;
    // product class -> (left factor class, right factor class)
    let factor_classes: Vec<(usize, usize)> = group
        .classes
        .iter()
        .map(|c| (ga.class_of(c.representative / nb), gb.class_of(c.representative % nb)))
        .collect();

    let mut rows = Vec::with_capacity(ta.irreps.len() * tb.irreps.len());
    for ra in &ta.chi {
        for rb in &tb.chi {
            let row: Vec<Complex64> =
                factor_classes.iter().map(|&(ca, cb)| ra[ca] * rb[cb]).collect();
            rows.push(row);
        }
    }
    let table = finish_table(group, rows)?;
    let residual = table.row_orthogonality_residual();
    if residual > ORTHO_TOL {
        return Err(Error::NumericalDegeneracy(format!(
            "product table orthogonality residual {residual:.3e}"
        )));
    }
    Ok(table)
}
