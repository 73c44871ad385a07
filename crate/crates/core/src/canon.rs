//! Canonical labelling by colour refinement and individualization.
//!
//! Vertices are first partitioned by iterated degree refinement. Non-discrete
//! partitions are resolved by individualizing each vertex of the first
//! non-singleton cell in turn and refining again; every discrete leaf gives a
//! relabelling, and the lexicographically smallest graph6 encoding over all
//! leaves is the canonical form. Twin vertices (equal neighborhoods up to each
//! other) are interchangeable by an automorphism, so only one twin per class
//! is branched on.

use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{BitIter, Graph};
use crate::graph6::emit_graph6_bytes;

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_MAX_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonError {
    OrderTooLarge { order: usize },
}

impl fmt::Display for CanonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonError::OrderTooLarge { order } => write!(
                f,
                "canonical form supports order <= {CANONICAL_MAX_ORDER}, got {order}"
            ),
        }
    }
}

impl core::error::Error for CanonError {}

/// Label-invariant encoding: graph6 bytes of the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "alloc::string::String", try_from = "alloc::string::String")]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative as a graph6 string.
    pub fn as_graph6(&self) -> &str {
        core::str::from_utf8(&self.0).expect("graph6 bytes are ASCII")
    }

    /// Decodes the canonical representative.
    pub fn to_graph(&self) -> Graph {
        crate::graph6::parse_graph6(self.as_graph6()).expect("canonical form is valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_graph6())
    }
}

impl From<CanonicalForm> for alloc::string::String {
    fn from(c: CanonicalForm) -> Self {
        alloc::string::String::from(c.as_graph6())
    }
}

impl TryFrom<alloc::string::String> for CanonicalForm {
    type Error = crate::graph6::Graph6Error;

    fn try_from(s: alloc::string::String) -> Result<Self, Self::Error> {
        let g = crate::graph6::parse_graph6(&s)?;
        Ok(canonical_form(&g).unwrap_or_else(|_| CanonicalForm(s.into_bytes())))
    }
}

/// Canonical form of `g`.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    let labelling = canonical_labelling(g)?;
    Ok(CanonicalForm(emit_graph6_bytes(&g.relabel(&labelling))))
}

/// A permutation `perm` such that `g.relabel(&perm)` is the canonical
/// representative of `g`'s isomorphism class.
pub fn canonical_labelling(g: &Graph) -> Result<Vec<usize>, CanonError> {
    let n = g.order();
    if n > CANONICAL_MAX_ORDER {
        return Err(CanonError::OrderTooLarge { order: n });
    }
    let mut search = Search {
        g,
        twins: twin_classes(g),
        best: None,
    };
    let initial = refine(g, alloc::vec![(0..n).collect()]);
    search.descend(initial);
    let (_, order) = search.best.expect("search visits at least one leaf");
    // `order[i]` is the vertex placed at position i; invert to a relabelling.
    let mut perm = alloc::vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    twins: Vec<usize>,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Partition) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut tried_classes: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            let class = self.twins[v];
            if tried_classes.contains(&class) {
                continue;
            }
            tried_classes.push(class);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(alloc::vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.descend(refine(self.g, next));
        }
    }

    fn leaf(&mut self, cells: &Partition) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut perm = alloc::vec![0; order.len()];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        let code = emit_graph6_bytes(&self.g.relabel(&perm));
        match &self.best {
            Some((best, _)) if *best <= code => {}
            _ => self.best = Some((code, order)),
        }
    }
}

/// Iterated degree refinement to an equitable partition. Split cells are
/// ordered by their neighbor-count signature, so the result depends only on
/// the isomorphism class of `(g, cells)`.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let nb = g.neighbors(v);
                    (masks.iter().map(|m| (nb & m).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort();
            split |= keyed[0].0 != keyed[keyed.len() - 1].0;
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

/// Class representative per vertex, where `u ~ v` iff
/// `N(u) \ {v} == N(v) \ {u}`. The relation is an equivalence.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut class: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if class[v] != v {
            continue;
        }
        for w in BitIter(!0u64 << v << 1 & crate::graph::low_mask(n)) {
            if class[w] == w {
                let nv = g.neighbors(v) & !(1 << w);
                let nw = g.neighbors(w) & !(1 << v);
                if nv == nw {
                    class[w] = v;
                }
            }
        }
    }
    class
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, Family};

    fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return alloc::vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn reversal_invariance() {
        let p = named_graph(Family::Path, 4).unwrap();
        let r = p.relabel(&[3, 2, 1, 0]);
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&r).unwrap());
    }

    #[test]
    fn star_differs_from_path() {
        let s = named_graph(Family::Star, 4).unwrap();
        let p = named_graph(Family::Path, 4).unwrap();
        assert_ne!(canonical_form(&s).unwrap(), canonical_form(&p).unwrap());
    }

    #[test]
    fn paw_has_single_form_over_all_relabellings() {
        let g = paw();
        let mut forms: Vec<CanonicalForm> = permutations(4)
            .iter()
            .map(|p| canonical_form(&g.relabel(p)).unwrap())
            .collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), 1);
        assert_eq!(forms[0].to_graph().size(), 4);
    }

    #[test]
    fn labelling_reproduces_form() {
        let g = paw();
        let perm = canonical_labelling(&g).unwrap();
        let form = canonical_form(&g).unwrap();
        assert_eq!(emit_graph6_bytes(&g.relabel(&perm)), form.as_bytes());
    }

    #[test]
    fn order_limit() {
        let g = named_graph(Family::Path, CANONICAL_MAX_ORDER + 1).unwrap();
        assert_eq!(
            canonical_form(&g),
            Err(CanonError::OrderTooLarge {
                order: CANONICAL_MAX_ORDER + 1
            })
        );
        let big = named_graph(Family::Complete, CANONICAL_MAX_ORDER).unwrap();
        assert!(canonical_form(&big).is_ok());
    }

    #[test]
    fn vertex_transitive_graphs() {
        // Petersen graph: outer 5-cycle, inner pentagram, spokes.
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        let petersen = Graph::from_edges(10, &edges).unwrap();
        let shuffled = petersen.relabel(&[3, 7, 1, 9, 0, 5, 2, 8, 6, 4]);
        assert_eq!(
            canonical_form(&petersen).unwrap(),
            canonical_form(&shuffled).unwrap()
        );
        let c10 = named_graph(Family::Cycle, 10).unwrap();
        assert_ne!(
            canonical_form(&petersen).unwrap(),
            canonical_form(&c10).unwrap()
        );
    }
}
