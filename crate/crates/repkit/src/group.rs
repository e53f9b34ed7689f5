//! Concrete finite groups: multiplication tables built by breadth-first
//! closure from quaternion generators, conjugacy classes with rotation
//! angles, and direct products.

use std::collections::HashMap;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::spec::{GroupSpec, MAX_ORDER};

/// Angle agreement required of members of one conjugacy class.
pub const CLASS_ANGLE_TOL: f64 = 1e-9;

/// How the element set is realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realization {
    /// Subgroup of SU(2); elements are unit quaternions.
    Su2,
    /// Subgroup of SO(3); elements are pairs {q, -q} with a canonical
    /// sign representative.
    So3,
    /// Direct product; elements are id pairs, no rotation angle.
    Product,
}

#[derive(Clone, Debug)]
pub struct ConjClass {
    /// Smallest element id in the class.
    pub representative: usize,
    pub size: usize,
    /// Rotation angle theta: in [0, 2pi] with cos(theta/2) = w for SU(2)
    /// groups, in [0, pi] for SO(3) groups, 0 for products.
    pub angle: f64,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub spec: GroupSpec,
    pub order: usize,
    pub is_binary: bool,
    pub realization: Realization,
    pub classes: Vec<ConjClass>,
    table: Vec<u16>,
    inverse: Vec<u16>,
    class_of: Vec<u32>,
    quats: Option<Vec<Quaternion>>,
}

impl FiniteGroup {
    /// Product of element ids.
    #[inline]
    pub fn mult(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    #[inline]
    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a] as usize
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mult(x, a);
            n += 1;
        }
        n
    }

    /// Quaternion representative of an element, when the group is realized
    /// by rotations.
    pub fn quaternion(&self, a: usize) -> Option<&Quaternion> {
        self.quats.as_ref().map(|q| &q[a])
    }

    /// Index of the class of the central -1 element, if present.
    pub fn minus_one_class(&self) -> Option<usize> {
        self.quats.as_ref().and_then(|qs| {
            qs.iter()
                .position(|q| *q == Quaternion::MINUS_IDENTITY)
                .map(|id| self.class_of(id))
        })
    }

    /// Deterministically sampled associativity check; exhaustive when
    /// `order^3` stays below ~220k (order <= 60).
    pub fn check_associativity(&self, samples: usize) -> bool {
        let n = self.order;
        let assoc = |a: usize, b: usize, c: usize| {
            self.mult(self.mult(a, b), c) == self.mult(a, self.mult(b, c))
        };
        if n <= 60 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return false;
                        }
                    }
                }
            }
            return true;
        }
        let mut state = 0x5eed_0f_a55_0c1au64;
        for _ in 0..samples {
            let mut next = || {
                state = splitmix64(state);
                (state % n as u64) as usize
            };
            let (a, b, c) = (next(), next(), next());
            if !assoc(a, b, c) {
                return false;
            }
        }
        true
    }
}

pub(crate) fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Resolves computed quaternions to element ids. Lookup is by a coarse
/// grid bucket with +-1 neighbor probing, so results reached along
/// different multiplication paths land on the same id.
struct Resolver {
    buckets: HashMap<[i64; 4], u16>,
}

impl Resolver {
    fn new() -> Resolver {
        Resolver { buckets: HashMap::new() }
    }

    fn insert(&mut self, q: &Quaternion, id: u16) {
        self.buckets.insert(q.bucket_key(), id);
    }

    fn lookup(&self, q: &Quaternion) -> Option<u16> {
        let key = q.bucket_key();
        if let Some(&id) = self.buckets.get(&key) {
            return Some(id);
        }
        // Probe the 80 neighboring buckets; distinct group elements are
        // separated by far more than one bucket, so a hit is unambiguous.
        for dw in -1i64..=1 {
            for dx in -1i64..=1 {
                for dy in -1i64..=1 {
                    for dz in -1i64..=1 {
                        if (dw, dx, dy, dz) == (0, 0, 0, 0) {
                            continue;
                        }
                        let probe = [key[0] + dw, key[1] + dx, key[2] + dy, key[3] + dz];
                        if let Some(&id) = self.buckets.get(&probe) {
                            return Some(id);
                        }
                    }
                }
            }
        }
        None
    }
}

/// Breadth-first closure from generators. Element ids are assigned in
/// discovery order with the identity at id 0, which makes tables
/// reproducible for a fixed generator list.
fn close_generators(
    gens: &[Quaternion],
    so3: bool,
    expected: usize,
) -> Result<Vec<Quaternion>> {
    let canon = |q: Quaternion| if so3 { q.canonical_sign() } else { q };
    let gens: Vec<Quaternion> = gens.iter().map(|q| canon(*q)).collect();

    let mut elements = vec![Quaternion::IDENTITY];
    let mut resolver = Resolver::new();
    resolver.insert(&Quaternion::IDENTITY, 0);

    let mut cursor = 0;
    while cursor < elements.len() {
        let base = elements[cursor];
        for g in &gens {
            let p = canon(base.mul(g));
            if resolver.lookup(&p).is_none() {
                if elements.len() >= expected {
                    return Err(Error::ClosureOverflow { expected });
                }
                resolver.insert(&p, elements.len() as u16);
                elements.push(p);
            }
        }
        cursor += 1;
    }
    if elements.len() != expected {
        return Err(Error::ClosureOverflow { expected });
    }
    Ok(elements)
}

fn build_table(elements: &[Quaternion], so3: bool) -> Result<Vec<u16>> {
    let n = elements.len();
    let mut resolver = Resolver::new();
    for (id, q) in elements.iter().enumerate() {
        resolver.insert(q, id as u16);
    }
    let mut table = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            let mut p = elements[a].mul(&elements[b]);
            if so3 {
                p = p.canonical_sign();
            }
            let id = resolver.lookup(&p).ok_or(Error::ClosureOverflow { expected: n })?;
            table[a * n + b] = id;
        }
    }
    Ok(table)
}

fn invert_table(table: &[u16], n: usize) -> Vec<u16> {
    let mut inv = vec![0u16; n];
    for a in 0..n {
        for b in 0..n {
            if table[a * n + b] == 0 {
                inv[a] = b as u16;
                break;
            }
        }
    }
    inv
}

/// Partitions elements into conjugacy classes and orders them by
/// (ascending angle, ascending size, smallest representative id).
fn conjugacy_partition(
    table: &[u16],
    inverse: &[u16],
    n: usize,
    angle_of: impl Fn(usize) -> f64,
) -> (Vec<ConjClass>, Vec<u32>) {
    let mult = |a: usize, b: usize| table[a * n + b] as usize;
    let mut assigned = vec![false; n];
    let mut classes: Vec<ConjClass> = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let mut members = Vec::new();
        for g in 0..n {
            let y = mult(mult(g, x), inverse[g] as usize);
            if !assigned[y] {
                assigned[y] = true;
                members.push(y);
            }
        }
        members.sort_unstable();
        classes.push(ConjClass {
            representative: members[0],
            size: members.len(),
            angle: angle_of(members[0]),
            members,
        });
    }
    // Angles agree within a class to ~1e-12, so a 9-digit key is a stable
    // sort key.
    let angle_key = |a: f64| (a * 1e9).round() as i64;
    classes.sort_by(|a, b| {
        (angle_key(a.angle), a.size, a.representative)
            .cmp(&(angle_key(b.angle), b.size, b.representative))
    });
    let mut class_of = vec![0u32; n];
    for (idx, class) in classes.iter().enumerate() {
        for &m in &class.members {
            class_of[m] = idx as u32;
        }
    }
    (classes, class_of)
}

/// Builds a catalog group with the builtin generator catalog.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    build_group_with(&Catalog::builtin(), spec)
}

/// Builds a catalog group with an explicit generator catalog.
pub fn build_group_with(catalog: &Catalog, spec: &GroupSpec) -> Result<FiniteGroup> {
    spec.validate()?;
    if let GroupSpec::Product(a, b) = spec {
        let left = build_group_with(catalog, a)?;
        let right = build_group_with(catalog, b)?;
        return product_group(&left, &right);
    }

    let (gens, so3) = catalog.generators_for(spec)?;
    let expected = spec.predicted_order();
    debug_assert!(expected <= MAX_ORDER);
    let elements = close_generators(&gens, so3, expected)?;
    let order = elements.len();
    let table = build_table(&elements, so3)?;
    let inverse = invert_table(&table, order);
    let is_binary = !so3 && elements.iter().any(|q| *q == Quaternion::MINUS_IDENTITY);
    let angle_of = |id: usize| {
        if so3 {
            elements[id].rotation_angle_so3()
        } else {
            elements[id].rotation_angle_su2()
        }
    };
    let (classes, class_of) = conjugacy_partition(&table, &inverse, order, angle_of);
    Ok(FiniteGroup {
        spec: spec.clone(),
        order,
        is_binary,
        realization: if so3 { Realization::So3 } else { Realization::Su2 },
        classes,
        table,
        inverse,
        class_of,
        quats: Some(elements),
    })
}

/// Direct product with elements (x, y) -> id x*|b| + y and componentwise
/// multiplication. Conjugacy classes are pairs of factor classes.
pub fn product_group(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let order = a.order * b.order;
    if order > MAX_ORDER {
        return Err(Error::ClosureOverflow { expected: MAX_ORDER });
    }
    let nb = b.order;
    let mut table = vec![0u16; order * order];
    for xa in 0..a.order {
        for ya in 0..b.order {
            let lhs = xa * nb + ya;
            for xb in 0..a.order {
                let pa = a.mult(xa, xb) * nb;
                let row = lhs * order + xb * nb;
                for yb in 0..b.order {
                    table[row + yb] = (pa + b.mult(ya, yb)) as u16;
                }
            }
        }
    }
    let mut inverse = vec![0u16; order];
    for xa in 0..a.order {
        for ya in 0..b.order {
            inverse[xa * nb + ya] = (a.inv(xa) * nb + b.inv(ya)) as u16;
        }
    }
    // Product classes carry no rotation angle; 0 keeps the class ordering
    // (angle, size, representative) deterministic.
    let (classes, class_of) = conjugacy_partition(&table, &inverse, order, |_| 0.0);
    Ok(FiniteGroup {
        spec: GroupSpec::Product(Box::new(a.spec.clone()), Box::new(b.spec.clone())),
        order,
        is_binary: false,
        realization: Realization::Product,
        classes,
        table,
        inverse,
        class_of,
        quats: None,
    })
}

/// Accessor mirroring the stored partition.
pub fn conjugacy_classes(g: &FiniteGroup) -> &[ConjClass] {
    &g.classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(code: &str) -> FiniteGroup {
        build_group(&GroupSpec::parse(code).unwrap()).unwrap()
    }

    fn class_sizes(g: &FiniteGroup) -> Vec<usize> {
        g.classes.iter().map(|c| c.size).collect()
    }

    #[test]
    fn binary_tetra_is_the_hurwitz_unit_group() {
        let g = build("2T");
        assert_eq!(g.order, 24);
        assert!(g.is_binary);
        // independent enumeration: 8 Lipschitz units + 16 half units
        let mut expected = std::collections::HashSet::new();
        for i in 0..4 {
            for s in [1.0, -1.0] {
                let mut c = [0.0; 4];
                c[i] = s;
                expected.insert(
                    Quaternion::new(c[0], c[1], c[2], c[3]).unwrap().canonical_key(),
                );
            }
        }
        for sw in [0.5, -0.5] {
            for sx in [0.5, -0.5] {
                for sy in [0.5, -0.5] {
                    for sz in [0.5, -0.5] {
                        expected.insert(
                            Quaternion::new(sw, sx, sy, sz).unwrap().canonical_key(),
                        );
                    }
                }
            }
        }
        let got: std::collections::HashSet<_> =
            (0..24).map(|i| g.quaternion(i).unwrap().canonical_key()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn tetra_orders_and_classes() {
        let g = build("T");
        assert_eq!(g.order, 12);
        assert!(!g.is_binary);
        let mut sizes = class_sizes(&g);
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 4, 4]);
        // identity alone in its class, first by ordering
        assert_eq!(g.classes[0].size, 1);
        assert_eq!(g.classes[0].representative, 0);
        assert_eq!(g.classes[0].angle, 0.0);
    }

    #[test]
    fn binary_tetra_has_seven_classes() {
        let g = build("2T");
        assert_eq!(g.classes.len(), 7);
        assert_eq!(class_sizes(&g).iter().sum::<usize>(), 24);
    }

    #[test]
    fn trivial_group() {
        let g = build("Z1");
        assert_eq!(g.order, 1);
        assert_eq!(g.classes.len(), 1);
        assert_eq!(g.classes[0].angle, 0.0);
    }

    #[test]
    fn catalog_orders() {
        for (code, order) in [
            ("Z5", 5),
            ("D4", 8),
            ("T", 12),
            ("O", 24),
            ("I", 60),
            ("2Z5", 10),
            ("2D4", 16),
            ("2T", 24),
            ("2O", 48),
            ("2I", 120),
        ] {
            let g = build(code);
            assert_eq!(g.order, order, "{code}");
            assert!(g.check_associativity(1000), "{code}");
            assert_eq!(
                class_sizes(&g).iter().sum::<usize>(),
                g.order,
                "{code} class sizes"
            );
            for class in &g.classes {
                assert_eq!(g.order % class.size, 0, "{code} class size divides order");
            }
        }
    }

    #[test]
    fn table_rows_and_columns_are_permutations() {
        for code in ["D3", "2T", "O"] {
            let g = build(code);
            let n = g.order;
            for a in 0..n {
                let mut row: Vec<usize> = (0..n).map(|b| g.mult(a, b)).collect();
                let mut col: Vec<usize> = (0..n).map(|b| g.mult(b, a)).collect();
                row.sort_unstable();
                col.sort_unstable();
                let id: Vec<usize> = (0..n).collect();
                assert_eq!(row, id);
                assert_eq!(col, id);
            }
        }
    }

    #[test]
    fn minus_one_is_central_and_squares_to_identity() {
        for code in ["2Z1", "2Z6", "2D3", "2T", "2O", "2I"] {
            let g = build(code);
            let minus =
                (0..g.order).find(|&i| *g.quaternion(i).unwrap() == Quaternion::MINUS_IDENTITY);
            let m = minus.unwrap_or_else(|| panic!("{code}: -1 not found"));
            assert_eq!(g.mult(m, m), 0, "{code}");
            for x in 0..g.order {
                assert_eq!(g.mult(m, x), g.mult(x, m), "{code}: -1 not central");
            }
            let theta = g.classes[g.class_of(m)].angle;
            assert!((theta - 2.0 * std::f64::consts::PI).abs() < 1e-9, "{code}");
        }
    }

    #[test]
    fn class_members_share_angle() {
        for code in ["T", "O", "I", "2T", "2O", "2I", "D6", "2D6", "Z12", "2Z12"] {
            let g = build(code);
            for class in &g.classes {
                for &m in &class.members {
                    let q = g.quaternion(m).unwrap();
                    let theta = match g.realization {
                        Realization::So3 => q.rotation_angle_so3(),
                        _ => q.rotation_angle_su2(),
                    };
                    assert!(
                        (theta - class.angle).abs() < CLASS_ANGLE_TOL,
                        "{code}: angle spread in class"
                    );
                }
            }
        }
    }

    #[test]
    fn so3_angles_fold_binary_cover_angles() {
        // Class angle multisets of T/O/I equal those of 2T/2O/2I folded by
        // theta -> min(theta, 2pi - theta), weighted by class size.
        let tau = 2.0 * std::f64::consts::PI;
        for (plain, cover) in [("T", "2T"), ("O", "2O"), ("I", "2I")] {
            let g = build(plain);
            let b = build(cover);
            let mut plain_angles: Vec<i64> = Vec::new();
            for c in &g.classes {
                for _ in 0..(2 * c.size) {
                    plain_angles.push((c.angle * 1e9).round() as i64);
                }
            }
            let mut folded: Vec<i64> = Vec::new();
            for c in &b.classes {
                let t = c.angle.min(tau - c.angle);
                for _ in 0..c.size {
                    folded.push((t * 1e9).round() as i64);
                }
            }
            plain_angles.sort_unstable();
            folded.sort_unstable();
            assert_eq!(plain_angles, folded, "{plain} vs {cover}");
        }
    }

    #[test]
    fn product_tetra_tetra() {
        let t = build("T");
        let p = product_group(&t, &t).unwrap();
        assert_eq!(p.order, 144);
        assert_eq!(p.classes.len(), 16);
        assert!(!p.is_binary);
        assert!(p.check_associativity(1000));
        // componentwise multiplication
        let nb = t.order;
        for (xa, ya, xb, yb) in [(1, 2, 3, 4), (5, 0, 2, 7), (11, 11, 11, 11)] {
            let lhs = p.mult(xa * nb + ya, xb * nb + yb);
            assert_eq!(lhs, t.mult(xa, xb) * nb + t.mult(ya, yb));
        }
    }

    #[test]
    fn product_with_trivial_is_isomorphic() {
        let g = build("O");
        let one = build("Z1");
        let p = product_group(&g, &one).unwrap();
        assert_eq!(p.order, g.order);
        let mut ps: Vec<usize> = p.classes.iter().map(|c| c.size).collect();
        let mut gs: Vec<usize> = g.classes.iter().map(|c| c.size).collect();
        ps.sort_unstable();
        gs.sort_unstable();
        assert_eq!(ps, gs);
    }

    #[test]
    fn klein_four_as_product() {
        let z2 = build("Z2");
        let p = product_group(&z2, &z2).unwrap();
        assert_eq!(p.order, 4);
        assert_eq!(p.classes.len(), 4);
    }

    #[test]
    fn closure_overflow_on_bad_generators() {
        // pretend the icosahedral generators close at order 12
        let cat = Catalog::builtin();
        let (gens, so3) = cat.generators_for(&GroupSpec::Icosa).unwrap();
        let err = close_generators(&gens, so3, 12).unwrap_err();
        assert_eq!(err.name(), "ClosureOverflow");
    }

    #[test]
    fn invalid_spec_rejected() {
        let err = build_group(&GroupSpec::Cyclic(0)).unwrap_err();
        assert_eq!(err.name(), "InvalidSpec");
    }

    #[test]
    fn element_orders() {
        let g = build("2T");
        assert_eq!(g.element_order(0), 1);
        let orders: std::collections::HashSet<usize> =
            (0..g.order).map(|i| g.element_order(i)).collect();
        assert_eq!(orders, [1, 2, 3, 4, 6].into_iter().collect());
    }
}
