//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` neighbor mask per vertex, so edge tests,
//! degree computations and breadth-first searches are all word operations.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    OrderOutOfRange { order: usize },
    VertexOutOfRange { vertex: usize, order: usize },
    SelfLoop { vertex: usize },
    CycleTooSmall { order: usize },
    UnknownFamily,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::OrderOutOfRange { order } => {
                write!(
                    f,
                    "graph order {order} outside supported range 1..={MAX_ORDER}"
                )
            }
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::CycleTooSmall { order } => {
                write!(f, "cycle requires at least 3 vertices, got {order}")
            }
            GraphError::UnknownFamily => {
                write!(
                    f,
                    "unknown graph family (expected star, path, complete or cycle)"
                )
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
    size: usize,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange { order });
        }
        Ok(Graph {
            rows: alloc::vec![0; order],
            size: 0,
        })
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor masks. The masks must be
    /// symmetric with an empty diagonal.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        let size = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        debug_assert!(rows.iter().enumerate().all(|(i, r)| r & (1 << i) == 0));
        Graph { rows, size }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let order = self.order();
        for w in [u, v] {
            if w >= order {
                return Err(GraphError::VertexOutOfRange { vertex: w, order });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if self.rows[u] & (1 << v) == 0 {
            self.rows[u] |= 1 << v;
            self.rows[v] |= 1 << u;
            self.size += 1;
        }
        Ok(())
    }

    /// Number of vertices `n`.
    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Number of edges `m`.
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.rows[u] & (1 << v) != 0
    }

    /// Neighbor set of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| BitIter(row & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Dense row-major adjacency matrix as floats.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.order();
        let mut a = alloc::vec![0.0; n * n];
        for (u, v) in self.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }

    /// The graph with vertex `v` of `self` renamed to `perm[v]`.
    ///
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length must equal graph order");
        let mut rows = alloc::vec![0u64; n];
        for (u, v) in self.edges() {
            let (a, b) = (perm[u], perm[v]);
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        Graph::from_rows_unchecked(rows)
    }

    /// Adds a new vertex adjacent to every vertex in `neighbors`.
    pub fn with_new_vertex(&self, neighbors: u64) -> Result<Graph, GraphError> {
        let n = self.order();
        if n >= MAX_ORDER {
            return Err(GraphError::OrderOutOfRange { order: n + 1 });
        }
        let neighbors = neighbors & low_mask(n);
        let mut rows = self.rows.clone();
        for v in BitIter(neighbors) {
            rows[v] |= 1 << n;
        }
        rows.push(neighbors);
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.order();
        let total = n + other.order();
        if total > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange { order: total });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << n));
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// True iff a search from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let all = low_mask(self.order());
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// A proper 2-colouring, or `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.order();
        let mut colour = alloc::vec![u8::MAX; n];
        let mut stack = Vec::new();
        for root in 0..n {
            if colour[root] != u8::MAX {
                continue;
            }
            colour[root] = 0;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for w in BitIter(self.rows[v]) {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        stack.push(w);
                    } else if colour[w] == colour[v] {
                        return None;
                    }
                }
            }
        }
        Some(Bipartition { colour })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Structural test for the star `S_n` (also true for `K_1` and `K_2`).
    pub fn is_star(&self) -> bool {
        let n = self.order();
        if n <= 2 {
            return self.size == n - 1;
        }
        self.size == n - 1 && (0..n).any(|v| self.degree(v) == n - 1)
    }

    /// Structural test for the complete graph `K_n`.
    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size == n * (n - 1) / 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Two-colouring returned by [`Graph::bipartition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    colour: Vec<u8>,
}

impl Bipartition {
    /// Colour (0 or 1) of vertex `v`.
    pub fn colour(&self, v: usize) -> u8 {
        self.colour[v]
    }

    /// Vertices of the given colour.
    pub fn side(&self, colour: u8) -> Vec<usize> {
        (0..self.colour.len())
            .filter(|&v| self.colour[v] == colour)
            .collect()
    }

    /// Sizes of the two colour classes.
    pub fn sizes(&self) -> (usize, usize) {
        let zeros = self.colour.iter().filter(|&&c| c == 0).count();
        (zeros, self.colour.len() - zeros)
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Star,
    Path,
    Complete,
    Cycle,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::Path => "path",
            Family::Complete => "complete",
            Family::Cycle => "cycle",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "star" => Ok(Family::Star),
            "path" => Ok(Family::Path),
            "complete" => Ok(Family::Complete),
            "cycle" => Ok(Family::Cycle),
            _ => Err(GraphError::UnknownFamily),
        }
    }
}

/// Member of a named family on `n` vertices.
///
/// The star has its centre at vertex 0; the path and cycle visit vertices in
/// index order.
pub fn named_graph(family: Family, n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    match family {
        Family::Star => {
            for v in 1..n {
                g.insert_edge(0, v)?;
            }
        }
        Family::Path => {
            for v in 1..n {
                g.insert_edge(v - 1, v)?;
            }
        }
        Family::Complete => {
            for u in 0..n {
                for v in u + 1..n {
                    g.insert_edge(u, v)?;
                }
            }
        }
        Family::Cycle => {
            if n < 3 {
                return Err(GraphError::CycleTooSmall { order: n });
            }
            for v in 0..n {
                g.insert_edge(v, (v + 1) % n)?;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn named_families() {
        let star = named_graph(Family::Star, 4).unwrap();
        assert_eq!(sorted_degrees(&star), vec![3, 1, 1, 1]);
        let path = named_graph(Family::Path, 4).unwrap();
        assert_eq!(path.degrees(), vec![1, 2, 2, 1]);
        for n in 1..=12 {
            assert_eq!(named_graph(Family::Star, n).unwrap().size(), n - 1);
            assert_eq!(named_graph(Family::Path, n).unwrap().size(), n - 1);
            assert_eq!(
                named_graph(Family::Complete, n).unwrap().size(),
                n * (n - 1) / 2
            );
        }
        let k2 = named_graph(Family::Complete, 2).unwrap();
        assert_eq!(named_graph(Family::Star, 2).unwrap(), k2);
        assert_eq!(named_graph(Family::Path, 2).unwrap(), k2);
        assert_eq!(named_graph(Family::Star, 1).unwrap().size(), 0);
    }

    #[test]
    fn cycle_needs_three_vertices() {
        assert_eq!(
            named_graph(Family::Cycle, 2),
            Err(GraphError::CycleTooSmall { order: 2 })
        );
        assert_eq!(named_graph(Family::Cycle, 5).unwrap().size(), 5);
    }

    #[test]
    fn order_limits() {
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(MAX_ORDER).is_ok());
        assert!(Graph::empty(MAX_ORDER + 1).is_err());
        let g = named_graph(Family::Complete, MAX_ORDER).unwrap();
        assert_eq!(g.size(), 64 * 63 / 2);
        assert!(g.is_connected());
    }

    #[test]
    fn edge_errors() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        let g = Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn connectivity() {
        assert!(named_graph(Family::Star, 7).unwrap().is_connected());
        assert!(named_graph(Family::Path, 8).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        let k2 = named_graph(Family::Complete, 2).unwrap();
        assert!(!k2.disjoint_union(&k2).unwrap().is_connected());
    }

    #[test]
    fn bipartitions() {
        let c4 = named_graph(Family::Cycle, 4).unwrap();
        assert_eq!(c4.bipartition().unwrap().sizes(), (2, 2));
        assert!(named_graph(Family::Complete, 3)
            .unwrap()
            .bipartition()
            .is_none());
        let s6 = named_graph(Family::Star, 6).unwrap();
        let b = s6.bipartition().unwrap();
        let (a, c) = b.sizes();
        assert_eq!((a.min(c), a.max(c)), (1, 5));
        for (u, v) in s6.edges() {
            assert_ne!(b.colour(u), b.colour(v));
        }
    }

    #[test]
    fn star_and_complete_recognition() {
        for n in 1..=9 {
            assert!(named_graph(Family::Star, n).unwrap().is_star());
            assert!(named_graph(Family::Complete, n).unwrap().is_complete());
        }
        assert!(!named_graph(Family::Path, 4).unwrap().is_star());
        assert!(named_graph(Family::Path, 3).unwrap().is_star());
    }

    #[test]
    fn relabel_and_extend() {
        let p = named_graph(Family::Path, 4).unwrap();
        let r = p.relabel(&[3, 2, 1, 0]);
        assert_eq!(r, p);
        let paw = named_graph(Family::Complete, 3)
            .unwrap()
            .with_new_vertex(0b001)
            .unwrap();
        assert_eq!(paw.size(), 4);
        assert_eq!(paw.degrees(), vec![3, 2, 2, 1]);
    }
}
