//! Brute-force Hamiltonian path oracles, independent of the game solver.

use crate::error::{Error, Result};
use crate::graph_model::{bits, Graph};

/// Largest graph the oracles accept.
pub const ORACLE_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamPathMethod {
    /// Depth-first extension with a dead-end cache.
    Dfs,
    /// Scan of all vertex orderings.
    Permutations,
}

fn check_budget(g: &Graph, start: Option<usize>) -> Result<()> {
    if g.vertex_count() > ORACLE_MAX_VERTICES {
        return Err(Error::BudgetExceeded {
            limit: ORACLE_MAX_VERTICES as u64,
        });
    }
    if let Some(s) = start {
        if s >= g.vertex_count() {
            return Err(Error::InvalidArgument(format!(
                "start vertex {s} out of range"
            )));
        }
    }
    Ok(())
}

/// Does `g` have a Hamiltonian path (starting at `start`, if given)?
pub fn hampath_oracle(g: &Graph, start: Option<usize>) -> Result<bool> {
    hampath_with(g, start, HamPathMethod::Dfs)
}

pub fn hampath_with(g: &Graph, start: Option<usize>, method: HamPathMethod) -> Result<bool> {
    check_budget(g, start)?;
    Ok(match method {
        HamPathMethod::Dfs => dfs(g, start),
        HamPathMethod::Permutations => permutations(g, start),
    })
}

fn dfs(g: &Graph, start: Option<usize>) -> bool {
    fn extend(
        g: &Graph,
        at: usize,
        seen: u64,
        full: u64,
        dead: &mut std::collections::HashSet<(usize, u64)>,
    ) -> bool {
        if seen == full {
            return true;
        }
        if dead.contains(&(at, seen)) {
            return false;
        }
        for next in bits(g.neighbor_mask(at) & !seen) {
            if extend(g, next, seen | 1 << next, full, dead) {
                return true;
            }
        }
        dead.insert((at, seen));
        false
    }
    let full = g.all_vertices_mask();
    let mut dead = std::collections::HashSet::new();
    let starts: Vec<usize> = match start {
        Some(s) => vec![s],
        None => (0..g.vertex_count()).collect(),
    };
    starts
        .into_iter()
        .any(|s| extend(g, s, 1 << s, full, &mut dead))
}

/// Advances `perm` to the next lexicographic permutation.
fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = perm
        .iter()
        .rposition(|&x| x > perm[i])
        .expect("pivot has a successor");
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

fn permutations(g: &Graph, start: Option<usize>) -> bool {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let rooted = start.is_none_or(|s| order[0] == s);
        if rooted && order.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return true;
        }
        if !next_permutation(&mut order) {
            return false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_model::grid_graph;

    fn both(g: &Graph, start: Option<usize>) -> bool {
        let a = hampath_with(g, start, HamPathMethod::Dfs).unwrap();
        let b = hampath_with(g, start, HamPathMethod::Permutations).unwrap();
        assert_eq!(a, b);
        a
    }

    #[test]
    fn known_graphs() {
        let p4 = Graph::path(4).unwrap();
        assert!(both(&p4, Some(0)));
        assert!(!both(&p4, Some(1)));
        assert!(both(&p4, None));
        assert!(!both(&Graph::star(3).unwrap(), None));
        assert!(both(&grid_graph(2, 3).unwrap(), Some(0)));
        assert!(both(&Graph::cycle(5).unwrap(), Some(3)));
        assert!(both(&Graph::new(1, []).unwrap(), Some(0)));
        assert!(!both(&Graph::new(2, []).unwrap(), None));
    }

    #[test]
    fn permutation_stepper() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 1, 0]);
    }

    #[test]
    fn budget() {
        let big = Graph::path(13).unwrap();
        assert!(matches!(
            hampath_oracle(&big, None),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(hampath_oracle(&Graph::path(3).unwrap(), Some(3)).is_err());
    }
}
