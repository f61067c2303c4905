use std::collections::BTreeSet;

use crate::error::InstanceError;

/// Largest supported vertex count; vertex sets are `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

/// Iterates the indices of the set bits of `mask`, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A finite simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<u64>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and dangling endpoints.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, InstanceError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count == 0 {
            return Err(InstanceError::NoVertices);
        }
        if vertex_count > MAX_VERTICES {
            return Err(InstanceError::TooManyVertices(vertex_count));
        }
        let mut adjacency = vec![0u64; vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(InstanceError::DanglingEdge(u, v));
            }
            if u == v {
                return Err(InstanceError::SelfLoop(u));
            }
            if adjacency[u] & (1 << v) != 0 {
                return Err(InstanceError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
        }
        Ok(Graph { adjacency })
    }

    /// Builds a graph from any edge list, silently merging duplicates.
    pub(crate) fn from_edge_set(vertex_count: usize, edges: &BTreeSet<(usize, usize)>) -> Self {
        Graph::new(vertex_count, edges.iter().copied()).expect("edge set is simple and in range")
    }

    pub fn path(n: usize) -> Result<Self, InstanceError> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Self, InstanceError> {
        if n < 3 {
            return Graph::path(n);
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self, InstanceError> {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self, InstanceError> {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adjacency[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && v < self.vertex_count() && self.adjacency[u] & (1 << v) != 0
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn all_vertices_mask(&self) -> u64 {
        if self.vertex_count() == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertex_count()) - 1
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adjacency[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.all_vertices_mask()
    }

    /// Disjoint union; vertex `v` of `parts[i]` becomes `offsets[i] + v`.
    pub fn disjoint_union(parts: &[&Graph]) -> Result<(Graph, Vec<usize>), InstanceError> {
        let mut offsets = Vec::with_capacity(parts.len());
        let mut edges = Vec::new();
        let mut total = 0;
        for g in parts {
            offsets.push(total);
            edges.extend(g.edges().into_iter().map(|(u, v)| (u + total, v + total)));
            total += g.vertex_count();
        }
        Ok((Graph::new(total, edges)?, offsets))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_simple_input() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(InstanceError::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(InstanceError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(InstanceError::DanglingEdge(0, 3))
        );
        assert_eq!(Graph::new(0, []), Err(InstanceError::NoVertices));
        assert_eq!(Graph::new(65, []), Err(InstanceError::TooManyVertices(65)));
    }

    #[test]
    fn edges_are_sorted_pairs() {
        let g = Graph::new(4, [(3, 1), (2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(3, 1));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(5).unwrap().is_connected());
        assert!(Graph::new(1, []).unwrap().is_connected());
        assert!(!Graph::new(3, [(0, 1)]).unwrap().is_connected());
        assert!(Graph::new(64, (1..64).map(|i| (0, i)))
            .unwrap()
            .is_connected());
    }

    #[test]
    fn union_shifts_ids() {
        let p = Graph::path(3).unwrap();
        let k = Graph::complete(3).unwrap();
        let (u, offsets) = Graph::disjoint_union(&[&p, &k]).unwrap();
        assert_eq!(offsets, vec![0, 3]);
        assert_eq!(u.edges(), vec![(0, 1), (1, 2), (3, 4), (3, 5), (4, 5)]);
    }
}
