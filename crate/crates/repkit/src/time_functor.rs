//! The time functor at label level, in both signatures, and its module
//! structure: the colax multiplicity check, the Euclidean product-group
//! module functor, and the injective-homomorphism search between a space
//! group and a spacetime group. Together with the ample predicate in
//! [`crate::diagram`] this realizes the colax + amply-renormalizable pair.

use std::sync::Arc;

use num_complex::Complex64;

use crate::action::{action_matrix, admissible_spins, su2_character_at, su2_fusion};
use crate::chartable::{character_table_seeded, CharacterTable};
use crate::error::{Error, Result};
use crate::fusion::round_multiplicity;
use crate::group::{product_group, FiniteGroup, Realization};
use crate::labels::{EuclideanLabel, ImmirziParam, LorentzianLabel, SpinLabel};

/// Euclidean signature: spin j maps to the SO(4) label (j, j).
pub fn ft_euclidean(j: SpinLabel) -> EuclideanLabel {
    EuclideanLabel { twice_jl: j.twice_j, twice_jr: j.twice_j }
}

/// Entrywise extension to direct sums, order preserving.
pub fn ft_euclidean_sum(spins: &[SpinLabel]) -> Vec<EuclideanLabel> {
    spins.iter().map(|&j| ft_euclidean(j)).collect()
}

/// Lorentzian signature: k maps to the principal-series label (k, gamma k).
/// gamma = 0 is degenerate and rejected.
pub fn ft_lorentzian(k: SpinLabel, gamma: ImmirziParam) -> Result<LorentzianLabel> {
    if gamma.gamma == 0.0 {
        return Err(Error::DegenerateImmirzi);
    }
    Ok(LorentzianLabel { twice_k: k.twice_j, rho: gamma.gamma * k.j() })
}

/// Multiplicity bookkeeping for the colax injection
/// F(a (x) b) -> F(a) (x) F(b) at a fusion channel c.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColaxReport {
    /// Multiplicity of c in a (x) b in the domain.
    pub n_abc: u32,
    /// Multiplicity of (c, c) in (a, a) (x) (b, b), one fusion factor per
    /// SU(2) copy.
    pub image_mult: u32,
    pub injective: bool,
}

pub fn colax_check(a: SpinLabel, b: SpinLabel, c: SpinLabel) -> ColaxReport {
    let n_abc = su2_fusion(a, b, c);
    let image_mult = su2_fusion(a, b, c) * su2_fusion(a, b, c);
    ColaxReport { n_abc, image_mult, injective: n_abc == 0 || image_mult >= n_abc }
}

/// One multiplicity comparison in the product-module check.
#[derive(Clone, Copy, Debug)]
pub struct ProductModuleEntry {
    pub twice_j: u32,
    /// Irrep indices in the base group's character table.
    pub m: usize,
    pub c: usize,
    /// Multiplicity of c (x) c in mu(j |> m).
    pub left: u32,
    /// Multiplicity of c (x) c in F_t(j) |> mu(m).
    pub right: u32,
}

/// Outcome of checking that mu: m -> m (x) m intertwines the spin action
/// on Rep(G) with the F_t action on Rep(G x G): left <= right everywhere,
/// with equality exactly on multiplicity-free entries.
#[derive(Clone, Debug)]
pub struct ProductModuleReport {
    pub group: String,
    pub twice_j_max: u32,
    pub entries: Vec<ProductModuleEntry>,
    pub injection_violations: Vec<ProductModuleEntry>,
    pub equality_failures: Vec<ProductModuleEntry>,
}

impl ProductModuleReport {
    pub fn injection_holds(&self) -> bool {
        self.injection_violations.is_empty()
    }
}

/// Checks the Euclidean product-group module over F_t for an SO(3)
/// subgroup G, with multiplicities computed by character inner products in
/// the constructed product group G x G.
pub fn product_module_check(
    t: &CharacterTable,
    j_max: SpinLabel,
) -> Result<ProductModuleReport> {
    if t.group.realization != Realization::So3 {
        return Err(Error::RequiresSo3Group(format!(
            "product-module check needs a plain SO(3) subgroup, got {}",
            t.group.spec
        )));
    }
    let g = &t.group;
    let n = t.irreps.len();

    let h = Arc::new(product_group(g, g)?);
    let th = character_table_seeded(&h, 0)?;
    let nb = g.order;
    let h_factor_classes: Vec<(usize, usize)> = h
        .classes
        .iter()
        .map(|c| (g.class_of(c.representative / nb), g.class_of(c.representative % nb)))
        .collect();

    // (sigma, tau) -> row of the product table carrying chi_sigma x chi_tau
    let pair_row = |sigma: usize, tau: usize| -> Result<usize> {
        'rows: for (r, row) in th.chi.iter().enumerate() {
            for (hc, &(ca, cb)) in h_factor_classes.iter().enumerate() {
                if (row[hc] - t.chi[sigma][ca] * t.chi[tau][cb]).norm() > 1e-6 {
                    continue 'rows;
                }
            }
            return Ok(r);
        }
        Err(Error::NumericalDegeneracy(format!(
            "no product-table row matches irrep pair ({sigma}, {tau})"
        )))
    };
    let mut diag_rows = Vec::with_capacity(n);
    for sigma in 0..n {
        diag_rows.push(pair_row(sigma, sigma)?);
    }

    let h_order = h.order as f64;
    let h_inner = |values: &[Complex64], row: usize| -> Result<u32> {
        let mut s = Complex64::new(0.0, 0.0);
        for (hc, class) in h.classes.iter().enumerate() {
            s += class.size as f64 * values[hc] * th.chi[row][hc].conj();
        }
        round_multiplicity(s / h_order)
    };

    let mut entries = Vec::new();
    let mut injection_violations = Vec::new();
    let mut equality_failures = Vec::new();
    for j in admissible_spins(t, j_max)? {
        let action = action_matrix(t, j)?;
        let spin_char: Vec<f64> =
            g.classes.iter().map(|c| su2_character_at(j, c.angle)).collect();
        for m in 0..n {
            // mu(j |> m) = sum_sigma M_j[m][sigma] (sigma x sigma)
            let mu_char: Vec<Complex64> = h_factor_classes
                .iter()
                .map(|&(ca, cb)| {
                    (0..n)
                        .map(|sigma| {
                            action.m[m][sigma] as f64 * t.chi[sigma][ca] * t.chi[sigma][cb]
                        })
                        .sum()
                })
                .collect();
            // F_t(j) |> mu(m) = (Res j (x) m) x (Res j (x) m)
            let x_char: Vec<Complex64> =
                (0..g.classes.len()).map(|c| spin_char[c] * t.chi[m][c]).collect();
            let ft_char: Vec<Complex64> = h_factor_classes
                .iter()
                .map(|&(ca, cb)| x_char[ca] * x_char[cb])
                .collect();
            for c in 0..n {
                let left = h_inner(&mu_char, diag_rows[c])?;
                let right = h_inner(&ft_char, diag_rows[c])?;
                let entry =
                    ProductModuleEntry { twice_j: j.twice_j, m, c, left, right };
                if left > right {
                    injection_violations.push(entry);
                }
                if left != right {
                    equality_failures.push(entry);
                }
                entries.push(entry);
            }
        }
    }
    Ok(ProductModuleReport {
        group: g.spec.code(),
        twice_j_max: j_max.twice_j,
        entries,
        injection_violations,
        equality_failures,
    })
}

/// Search budget for generator-image tuples.
pub const HOM_SEARCH_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug)]
pub struct HomSearch {
    /// Generator ids of the source group used for the search.
    pub generators: Vec<usize>,
    /// Image tuples (one id in the target per generator) that extend to
    /// injective homomorphisms, in lexicographic order.
    pub witnesses: Vec<Vec<usize>>,
}

impl HomSearch {
    pub fn count(&self) -> usize {
        self.witnesses.len()
    }
}

/// Greedy generating set: scan elements in id order and keep those that
/// enlarge the generated subgroup.
fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = subgroup_closure(g, &gens);
    for id in 1..g.order {
        if span.len() == g.order {
            break;
        }
        if !span.contains(&id) {
            gens.push(id);
            span = subgroup_closure(g, &gens);
        }
    }
    gens
}

fn subgroup_closure(g: &FiniteGroup, gens: &[usize]) -> std::collections::BTreeSet<usize> {
    let mut seen: std::collections::BTreeSet<usize> = [0].into();
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for &gen in gens {
            let y = g.mult(x, gen);
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    seen
}

/// Brute-force search for injective homomorphisms g -> h over
/// generator-image tuples. Candidate images are pre-filtered by element
/// order; surviving maps are verified on the full multiplication table.
pub fn find_injective_homs(g: &FiniteGroup, h: &FiniteGroup) -> Result<HomSearch> {
    if g.order > 60 || h.order > crate::spec::MAX_ORDER {
        return Err(Error::SearchBudgetExceeded {
            budget: HOM_SEARCH_BUDGET,
            required: u64::MAX,
        });
    }
    let gens = generating_set(g);

    // discovery order and parent words for extending a generator map
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.order];
    let mut bfs_order = vec![0usize];
    let mut seen = vec![false; g.order];
    seen[0] = true;
    let mut cursor = 0;
    while cursor < bfs_order.len() {
        let x = bfs_order[cursor];
        cursor += 1;
        for (gi, &gen) in gens.iter().enumerate() {
            let y = g.mult(x, gen);
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, gi));
                bfs_order.push(y);
            }
        }
    }

    let gen_orders: Vec<usize> = gens.iter().map(|&id| g.element_order(id)).collect();
    let candidates: Vec<Vec<usize>> = gen_orders
        .iter()
        .map(|&ord| (0..h.order).filter(|&m| h.element_order(m) == ord).collect())
        .collect();
    let required: u64 = candidates.iter().map(|c| c.len() as u64).product();
    if required > HOM_SEARCH_BUDGET {
        return Err(Error::SearchBudgetExceeded { budget: HOM_SEARCH_BUDGET, required });
    }

    let mut witnesses = Vec::new();
    let mut images = vec![0usize; gens.len()];
    search_tuples(g, h, &gens, &candidates, &bfs_order, &parent, 0, &mut images, &mut witnesses);
    Ok(HomSearch { generators: gens, witnesses })
}

#[allow(clippy::too_many_arguments)]
fn search_tuples(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    bfs_order: &[usize],
    parent: &[Option<(usize, usize)>],
    position: usize,
    images: &mut Vec<usize>,
    witnesses: &mut Vec<Vec<usize>>,
) {
    if position == gens.len() {
        if extends_to_injective_hom(g, h, bfs_order, parent, images) {
            witnesses.push(images.clone());
        }
        return;
    }
    for &m in &candidates[position] {
        images[position] = m;
        search_tuples(g, h, gens, candidates, bfs_order, parent, position + 1, images, witnesses);
    }
}

fn extends_to_injective_hom(
    g: &FiniteGroup,
    h: &FiniteGroup,
    bfs_order: &[usize],
    parent: &[Option<(usize, usize)>],
    images: &[usize],
) -> bool {
    let mut phi = vec![0usize; g.order];
    for &x in bfs_order {
        if let Some((p, gi)) = parent[x] {
            phi[x] = h.mult(phi[p], images[gi]);
        }
    }
    // injectivity first: it is the cheap screen
    let distinct: std::collections::BTreeSet<usize> = phi.iter().copied().collect();
    if distinct.len() != g.order {
        return false;
    }
    // full-table homomorphism check
    for a in 0..g.order {
        for b in 0..g.order {
            if phi[g.mult(a, b)] != h.mult(phi[a], phi[b]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::character_table;
    use crate::group::build_group;
    use crate::spec::GroupSpec;

    fn group(code: &str) -> FiniteGroup {
        build_group(&GroupSpec::parse(code).unwrap()).unwrap()
    }

    fn table(code: &str) -> CharacterTable {
        let g = Arc::new(group(code));
        character_table(&g).unwrap()
    }

    #[test]
    fn euclidean_labels() {
        assert_eq!(ft_euclidean(SpinLabel::ZERO), EuclideanLabel { twice_jl: 0, twice_jr: 0 });
        assert_eq!(
            ft_euclidean(SpinLabel::from_twice(1)),
            EuclideanLabel { twice_jl: 1, twice_jr: 1 }
        );
        assert_eq!(
            ft_euclidean(SpinLabel::integer(2)),
            EuclideanLabel { twice_jl: 4, twice_jr: 4 }
        );
        let sums = ft_euclidean_sum(&[SpinLabel::integer(2), SpinLabel::ZERO]);
        assert_eq!(sums[0].twice_jl, 4);
        assert_eq!(sums[1].twice_jl, 0);
    }

    #[test]
    fn lorentzian_labels() {
        let l = ft_lorentzian(SpinLabel::integer(1), ImmirziParam::new(0.2)).unwrap();
        assert_eq!(l.twice_k, 2);
        assert!((l.rho - 0.2).abs() < 1e-15);
        let err = ft_lorentzian(SpinLabel::integer(1), ImmirziParam::new(0.0)).unwrap_err();
        assert_eq!(err.name(), "DegenerateImmirzi");
        let zero = ft_lorentzian(SpinLabel::ZERO, ImmirziParam::new(3.5)).unwrap();
        assert_eq!(zero.twice_k, 0);
        assert_eq!(zero.rho, 0.0);
    }

    #[test]
    fn rho_over_k_recovers_gamma() {
        for twice_k in 1..=20u32 {
            for gamma in [0.1, -2.0, 0.237, 16.0] {
                let l =
                    ft_lorentzian(SpinLabel::from_twice(twice_k), ImmirziParam::new(gamma))
                        .unwrap();
                let k = twice_k as f64 / 2.0;
                assert!((l.rho / k - gamma).abs() <= 1e-12 * gamma.abs());
            }
        }
    }

    #[test]
    fn colax_examples() {
        let h = SpinLabel::from_twice(1);
        let r = colax_check(h, h, SpinLabel::ZERO);
        assert_eq!((r.n_abc, r.image_mult, r.injective), (1, 1, true));
        let r = colax_check(h, h, SpinLabel::from_twice(3));
        assert_eq!((r.n_abc, r.image_mult, r.injective), (0, 0, true));
        let one = SpinLabel::integer(1);
        let r = colax_check(one, one, one);
        assert_eq!((r.n_abc, r.image_mult, r.injective), (1, 1, true));
    }

    #[test]
    fn product_module_tetra() {
        let t = table("T");
        let report = product_module_check(&t, SpinLabel::integer(2)).unwrap();
        assert!(report.injection_holds());
        // left equals the action multiplicity, right its square
        for entry in &report.entries {
            let j = SpinLabel::from_twice(entry.twice_j);
            let m = action_matrix(&t, j).unwrap().m;
            assert_eq!(entry.left, m[entry.m][entry.c]);
            assert_eq!(entry.right, entry.left * entry.left);
        }
        // j = 0 acts as the identity
        for entry in report.entries.iter().filter(|e| e.twice_j == 0) {
            let expect = u32::from(entry.m == entry.c);
            assert_eq!(entry.left, expect);
            assert_eq!(entry.right, expect);
        }
    }

    #[test]
    fn product_module_cyclic3_multiplicity_free_at_j1() {
        let t = table("Z3");
        let report = product_module_check(&t, SpinLabel::integer(1)).unwrap();
        assert!(report.injection_holds());
        assert!(report.equality_failures.is_empty());
        assert!(report.entries.iter().all(|e| e.left <= 1));
    }

    #[test]
    fn product_module_equality_exactly_on_zero_one() {
        for code in ["T", "Z3"] {
            let t = table(code);
            let report = product_module_check(&t, SpinLabel::integer(2)).unwrap();
            for e in &report.entries {
                assert!(e.left <= e.right, "{code}");
                assert_eq!(e.left == e.right, e.left <= 1, "{code}");
            }
        }
    }

    #[test]
    fn product_module_rejects_binary_and_products() {
        assert_eq!(
            product_module_check(&table("2T"), SpinLabel::ZERO).unwrap_err().name(),
            "RequiresSo3Group"
        );
        assert_eq!(
            product_module_check(&table("TxT"), SpinLabel::ZERO).unwrap_err().name(),
            "RequiresSo3Group"
        );
    }

    #[test]
    fn homs_tetra_into_octa() {
        let t = group("T");
        let o = group("O");
        let search = find_injective_homs(&t, &o).unwrap();
        // the 24 monomorphisms A4 -> S4: one A4 subgroup, |Aut(A4)| = 24
        assert_eq!(search.count(), 24);
    }

    #[test]
    fn homs_none_into_abelian() {
        let t = group("T");
        let z = group("Z12");
        assert_eq!(find_injective_homs(&t, &z).unwrap().count(), 0);
    }

    #[test]
    fn homs_identity_found() {
        let t = group("T");
        let search = find_injective_homs(&t, &t).unwrap();
        assert_eq!(search.count(), 24); // Aut(A4) = S4
        let identity: Vec<usize> = search.generators.clone();
        assert!(search.witnesses.contains(&identity));
    }

    #[test]
    fn hom_witnesses_verify() {
        let t = group("T");
        let i = group("I");
        let search = find_injective_homs(&t, &i).unwrap();
        assert!(search.count() > 0); // A4 embeds in A5
        // lexicographic witness order
        let mut sorted = search.witnesses.clone();
        sorted.sort();
        assert_eq!(sorted, search.witnesses);
    }

    #[test]
    fn hom_search_budget() {
        let g = group("Z2");
        let err = find_injective_homs(&group("I"), &g);
        assert!(err.is_ok()); // 60 is within the source bound
        let too_big = group("TxT"); // order 144 > 60 as a source
        assert_eq!(
            find_injective_homs(&too_big, &g).unwrap_err().name(),
            "SearchBudgetExceeded"
        );
    }

    #[test]
    fn trivial_source_has_one_hom() {
        let z1 = group("Z1");
        let o = group("O");
        let search = find_injective_homs(&z1, &o).unwrap();
        assert_eq!(search.count(), 1);
        assert!(search.witnesses[0].is_empty());
    }
}
