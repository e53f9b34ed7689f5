//! Closed spin-network diagrams (multigraphs without loops) and the ample
//! predicate: a diagram is ample when it refines the complete graph on 4
//! or 5 vertices by adding edges.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    vertex_count: usize,
    /// Normalized multiset: pairs with u < v, sorted.
    edges: Vec<(usize, usize)>,
}

impl Diagram {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Diagram> {
        if vertex_count == 0 {
            return Err(Error::InvalidDiagram("no vertices".into()));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidDiagram(format!("loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidDiagram(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        Ok(Diagram { vertex_count, edges: normalized })
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Diagram {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Diagram { vertex_count: n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The diagram plus one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Diagram> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Diagram::new(self.vertex_count, &edges)
    }

    /// True when the diagram has 4 or 5 vertices and its underlying simple
    /// graph contains every vertex pair; extra multi-edges are allowed.
    pub fn is_ample(&self) -> bool {
        if self.vertex_count != 4 && self.vertex_count != 5 {
            return false;
        }
        for u in 0..self.vertex_count {
            for v in (u + 1)..self.vertex_count {
                if !self.edges.contains(&(u, v)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Free-function spelling of [`Diagram::is_ample`].
pub fn is_ample(d: &Diagram) -> bool {
    d.is_ample()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs_are_ample() {
        assert!(Diagram::complete(4).is_ample());
        assert!(Diagram::complete(5).is_ample());
        assert!(!Diagram::complete(3).is_ample());
        assert!(!Diagram::complete(6).is_ample());
    }

    #[test]
    fn multi_edges_allowed() {
        let k5 = Diagram::complete(5);
        let doubled = k5.with_edge(0, 1).unwrap();
        assert!(doubled.is_ample());
        assert_eq!(doubled.edges().len(), 11);
    }

    #[test]
    fn missing_pair_is_not_ample() {
        let k4 = Diagram::complete(4);
        let edges: Vec<(usize, usize)> =
            k4.edges().iter().skip(1).copied().collect();
        let short = Diagram::new(4, &edges).unwrap();
        assert!(!short.is_ample());
        // path on 5 vertices
        let path = Diagram::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!path.is_ample());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Diagram::new(4, &[(0, 0)]).unwrap_err().name(), "InvalidDiagram");
        assert_eq!(Diagram::new(4, &[(0, 4)]).unwrap_err().name(), "InvalidDiagram");
        assert_eq!(Diagram::new(0, &[]).unwrap_err().name(), "InvalidDiagram");
    }

    #[test]
    fn edge_order_is_normalized() {
        let a = Diagram::new(4, &[(1, 0), (3, 2)]).unwrap();
        let b = Diagram::new(4, &[(2, 3), (0, 1)]).unwrap();
        assert_eq!(a, b);
    }
}
