//! McKay graphs of binary subgroups of SU(2) and their classification as
//! affine ADE Dynkin diagrams. Vertices are the irreps of Gamma; edges
//! count the multiplicity of irrep j inside (defining 2-dim) (x) irrep i,
//! where the defining character on a class of angle theta is 2 cos(theta/2).

use num_complex::Complex64;

use crate::chartable::CharacterTable;
use crate::error::{Error, Result};
use crate::fusion::round_multiplicity;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AdeType {
    AffineA(usize),
    AffineD(usize),
    AffineE6,
    AffineE7,
    AffineE8,
    Unrecognized,
}

impl std::fmt::Display for AdeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AdeType::AffineA(n) => write!(f, "AffineA({n})"),
            AdeType::AffineD(n) => write!(f, "AffineD({n})"),
            AdeType::AffineE6 => write!(f, "AffineE6"),
            AdeType::AffineE7 => write!(f, "AffineE7"),
            AdeType::AffineE8 => write!(f, "AffineE8"),
            AdeType::Unrecognized => write!(f, "Unrecognized"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct McKayGraph {
    /// (irrep name, dimension) per vertex, in character-table row order.
    pub nodes: Vec<(String, usize)>,
    /// Symmetric multiplicity matrix.
    pub adjacency: Vec<Vec<u32>>,
    pub ade_type: AdeType,
}

/// Builds the McKay graph of a binary group from its character table.
pub fn mckay_graph(t: &CharacterTable) -> Result<McKayGraph> {
    let g = &t.group;
    if !g.is_binary {
        return Err(Error::NotBinaryGroup(format!(
            "group {} does not contain the central -1 of SU(2)",
            g.spec
        )));
    }
    let order = g.order as f64;
    let n = t.irreps.len();
    // character of the defining SU(2) embedding
    let defining: Vec<f64> = g.classes.iter().map(|c| 2.0 * (c.angle / 2.0).cos()).collect();
    let mut adjacency = vec![vec![0u32; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for (k, class) in g.classes.iter().enumerate() {
                s += class.size as f64 * defining[k] * t.chi[i][k] * t.chi[j][k].conj();
            }
            adjacency[i][j] = round_multiplicity(s / order)?;
        }
    }
    let nodes = t.irreps.iter().map(|r| (r.name.clone(), r.dim)).collect();
    let ade_type = classify_affine_ade(&adjacency);
    Ok(McKayGraph { nodes, adjacency, ade_type })
}

fn degrees(a: &[Vec<u32>]) -> Vec<u32> {
    a.iter().map(|row| row.iter().sum()).collect()
}

fn is_connected(a: &[Vec<u32>]) -> bool {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for (u, &w) in a[v].iter().enumerate() {
            if w > 0 && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Arm lengths hanging off a branch vertex of a tree: lengths of the
/// simple paths from `start` walking away from the branch until a leaf.
fn arm_lengths(a: &[Vec<u32>], branch: usize) -> Option<Vec<usize>> {
    let mut arms = Vec::new();
    for (first, &w) in a[branch].iter().enumerate() {
        if w == 0 {
            continue;
        }
        let mut length = 1;
        let mut prev = branch;
        let mut cur = first;
        loop {
            let next: Vec<usize> = a[cur]
                .iter()
                .enumerate()
                .filter(|&(u, &w)| w > 0 && u != prev)
                .map(|(u, _)| u)
                .collect();
            match next.len() {
                0 => break,
                1 => {
                    length += 1;
                    prev = cur;
                    cur = next[0];
                }
                // a second branch vertex inside an arm
                _ => return None,
            }
        }
        arms.push(length);
    }
    arms.sort_unstable();
    Some(arms)
}

/// Shape-based classification of a symmetric adjacency matrix as an
/// affine ADE diagram. `Unrecognized` is a value, not an error; finite
/// (non-extended) diagrams land there.
pub fn classify_affine_ade(a: &[Vec<u32>]) -> AdeType {
    let n = a.len();
    if n == 0 {
        return AdeType::Unrecognized;
    }
    if a.iter().enumerate().any(|(i, row)| row.len() != n || row[i] != 0) {
        return AdeType::Unrecognized;
    }
    for i in 0..n {
        for j in 0..n {
            if a[i][j] != a[j][i] {
                return AdeType::Unrecognized;
            }
        }
    }
    // the doubled edge on two vertices
    if n == 2 {
        return if a[0][1] == 2 { AdeType::AffineA(1) } else { AdeType::Unrecognized };
    }
    if a.iter().any(|row| row.iter().any(|&w| w > 1)) {
        return AdeType::Unrecognized;
    }
    if !is_connected(a) {
        return AdeType::Unrecognized;
    }
    let deg = degrees(a);
    let edges: u32 = deg.iter().sum::<u32>() / 2;

    // single cycle: n vertices, n edges, all degree 2
    if edges as usize == n && deg.iter().all(|&d| d == 2) {
        return AdeType::AffineA(n - 1);
    }
    if edges as usize != n - 1 {
        return AdeType::Unrecognized;
    }
    // now a tree
    let branches: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branches.len() {
        1 => {
            let b = branches[0];
            let arms = match arm_lengths(a, b) {
                Some(arms) => arms,
                None => return AdeType::Unrecognized,
            };
            match (deg[b], arms.as_slice()) {
                (4, [1, 1, 1, 1]) => AdeType::AffineD(4),
                (3, [2, 2, 2]) => AdeType::AffineE6,
                (3, [1, 3, 3]) => AdeType::AffineE7,
                (3, [1, 2, 5]) => AdeType::AffineE8,
                _ => AdeType::Unrecognized,
            }
        }
        2 => {
            // affine D_n, n >= 5: two degree-3 forks, each carrying two
            // single-edge arms, joined by a path
            let (b1, b2) = (branches[0], branches[1]);
            if deg[b1] != 3 || deg[b2] != 3 {
                return AdeType::Unrecognized;
            }
            for &b in &[b1, b2] {
                let leaf_neighbors =
                    a[b].iter().enumerate().filter(|&(u, &w)| w > 0 && deg[u] == 1).count();
                if leaf_neighbors != 2 {
                    return AdeType::Unrecognized;
                }
            }
            AdeType::AffineD(n - 1)
        }
        _ => AdeType::Unrecognized,
    }
}

/// Integer check of the affine null-vector property: (2I - A) dims = 0.
pub fn cartan_null_check(g: &McKayGraph) -> bool {
    let n = g.nodes.len();
    for i in 0..n {
        let mut acc: i64 = 2 * g.nodes[i].1 as i64;
        for j in 0..n {
            acc -= g.adjacency[i][j] as i64 * g.nodes[j].1 as i64;
        }
        if acc != 0 {
            return false;
        }
    }
    true
}

/// Graphviz DOT rendering; nodes labelled `name(dim)` in table order,
/// multiplicities >= 2 rendered as an edge label.
pub fn to_dot(g: &McKayGraph, title: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph \"{title}\" {{\n"));
    out.push_str(&format!("  // ade_type: {}\n", g.ade_type));
    for (i, (name, dim)) in g.nodes.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{name}({dim})\"];\n"));
    }
    for i in 0..g.nodes.len() {
        for j in (i + 1)..g.nodes.len() {
            let m = g.adjacency[i][j];
            if m == 1 {
                out.push_str(&format!("  n{i} -- n{j};\n"));
            } else if m >= 2 {
                out.push_str(&format!("  n{i} -- n{j} [label={m}];\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::character_table;
    use crate::group::build_group;
    use crate::spec::GroupSpec;
    use std::sync::Arc;

    fn graph(code: &str) -> McKayGraph {
        let g = Arc::new(build_group(&GroupSpec::parse(code).unwrap()).unwrap());
        let t = character_table(&g).unwrap();
        mckay_graph(&t).unwrap()
    }

    fn cycle(n: usize) -> Vec<Vec<u32>> {
        let mut a = vec![vec![0u32; n]; n];
        for i in 0..n {
            a[i][(i + 1) % n] = 1;
            a[(i + 1) % n][i] = 1;
        }
        a
    }

    #[test]
    fn exceptional_covers() {
        let e6 = graph("2T");
        assert_eq!(e6.ade_type, AdeType::AffineE6);
        assert_eq!(e6.nodes.len(), 7);
        let mut dims: Vec<usize> = e6.nodes.iter().map(|n| n.1).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 1, 2, 2, 2, 3]);

        let e7 = graph("2O");
        assert_eq!(e7.ade_type, AdeType::AffineE7);
        assert_eq!(e7.nodes.len(), 8);

        let e8 = graph("2I");
        assert_eq!(e8.ade_type, AdeType::AffineE8);
        assert_eq!(e8.nodes.len(), 9);
    }

    #[test]
    fn binary_cyclic_gives_cycles() {
        assert_eq!(graph("2Z1").ade_type, AdeType::AffineA(1));
        for n in 2..=6usize {
            let g = graph(&format!("2Z{n}"));
            assert_eq!(g.ade_type, AdeType::AffineA(2 * n - 1), "n = {n}");
            assert!(g.nodes.iter().all(|node| node.1 == 1));
            // brute-force square: a cycle on 2n one-dimensional irreps
            let deg: Vec<u32> = g.adjacency.iter().map(|r| r.iter().sum()).collect();
            assert!(deg.iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn binary_dihedral_gives_affine_d() {
        for n in 2..=6usize {
            let g = graph(&format!("2D{n}"));
            assert_eq!(g.ade_type, AdeType::AffineD(n + 2), "n = {n}");
            assert_eq!(g.nodes.len(), n + 3);
        }
        // n = 1 is the Ade coincidence D~3 = A~3: the group is Z4
        assert_eq!(graph("2D1").ade_type, AdeType::AffineA(3));
    }

    #[test]
    fn rejects_non_binary() {
        let g = Arc::new(build_group(&GroupSpec::Tetra).unwrap());
        let t = character_table(&g).unwrap();
        assert_eq!(mckay_graph(&t).unwrap_err().name(), "NotBinaryGroup");
        let p = Arc::new(build_group(&GroupSpec::parse("2TxZ1").unwrap()).unwrap());
        let tp = character_table(&p).unwrap();
        assert_eq!(mckay_graph(&tp).unwrap_err().name(), "NotBinaryGroup");
    }

    #[test]
    fn classify_shapes() {
        // 7-node star with three arms of length 2
        let mut star = vec![vec![0u32; 7]; 7];
        for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)] {
            star[a][b] = 1;
            star[b][a] = 1;
        }
        assert_eq!(classify_affine_ade(&star), AdeType::AffineE6);

        assert_eq!(classify_affine_ade(&cycle(3)), AdeType::AffineA(2));

        // path on 3 nodes: finite A3, not affine
        let mut path = vec![vec![0u32; 3]; 3];
        path[0][1] = 1;
        path[1][0] = 1;
        path[1][2] = 1;
        path[2][1] = 1;
        assert_eq!(classify_affine_ade(&path), AdeType::Unrecognized);

        // two disjoint triangles: degree-2 everywhere but disconnected
        let mut two = vec![vec![0u32; 6]; 6];
        for (a, b) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            two[a][b] = 1;
            two[b][a] = 1;
        }
        assert_eq!(classify_affine_ade(&two), AdeType::Unrecognized);

        // star with four length-1 arms: affine D4
        let mut d4 = vec![vec![0u32; 5]; 5];
        for leaf in 1..5 {
            d4[0][leaf] = 1;
            d4[leaf][0] = 1;
        }
        assert_eq!(classify_affine_ade(&d4), AdeType::AffineD(4));

        assert_eq!(classify_affine_ade(&[vec![0u32]]), AdeType::Unrecognized);
    }

    #[test]
    fn null_vector() {
        for code in ["2Z2", "2Z6", "2D3", "2T", "2O", "2I"] {
            let g = graph(code);
            assert!(cartan_null_check(&g), "{code}");
            // perturbing the first dimension breaks it
            let mut bad = g.clone();
            bad.nodes[0].1 += 1;
            assert!(!cartan_null_check(&bad), "{code}");
        }
    }

    #[test]
    fn adjacency_matches_largest_eigenvalue_two() {
        // affine criterion: Perron eigenvalue of A equals 2
        for code in ["2Z4", "2D4", "2T", "2O", "2I"] {
            let g = graph(code);
            let n = g.nodes.len();
            let m = nalgebra::DMatrix::<f64>::from_fn(n, n, |i, j| g.adjacency[i][j] as f64);
            let eig = nalgebra::SymmetricEigen::new(m);
            let top = eig.eigenvalues.iter().fold(f64::MIN, |a, &b| a.max(b));
            assert!((top - 2.0).abs() < 1e-8, "{code}: {top}");
        }
    }

    #[test]
    fn dot_output() {
        let g = graph("2T");
        let dot = to_dot(&g, "2T");
        assert!(dot.contains("// ade_type: AffineE6"));
        assert_eq!(dot.matches("label=\"").count(), 7);
        assert_eq!(dot.matches(" -- ").count(), 6);

        let one = graph("2Z1");
        let dot = to_dot(&one, "2Z1");
        assert!(dot.contains("[label=2]"));
    }
}
