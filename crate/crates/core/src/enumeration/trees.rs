//! Free trees via canonical level sequences.
//!
//! A rooted tree is a preorder list of depths. Successive sequences are
//! produced by the rooted-tree successor rule, and free trees are filtered by
//! keeping only the sequence rooted at a (bi)centre whose first subtree is
//! not larger than the rest.

use crate::graph::{Graph, Result};

/// Next rooted level sequence, modifying positions from `p` onward.
fn next_rooted(seq: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = seq.len() - 1;
            while seq[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while seq[q] != seq[p] - 1 {
        q -= 1;
    }
    let mut out = seq.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits at the second depth-1 entry: the first subtree of the root (as a
/// rooted sequence) and the remainder with the root kept.
fn split(seq: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = seq
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 1)
        .nth(1)
        .map_or(seq.len(), |(i, _)| i);
    let left = seq[1..m].iter().map(|d| d - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&seq[m..]);
    (left, rest)
}

fn next_free(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split(&candidate);
    let lh = left.iter().copied().max().unwrap_or(0);
    let rh = rest.iter().copied().max().unwrap_or(0);
    let valid = rh > lh || (rh == lh && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (k, slot) in next[len - (h + 1)..].iter_mut().enumerate() {
            *slot = k + 1;
        }
    }
    Some(next)
}

fn from_levels(seq: &[usize]) -> Result<Graph> {
    let mut edges = Vec::with_capacity(seq.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &d) in seq.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if seq[top] >= d {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&parent) = stack.last() {
            edges.push((parent, i));
        }
        stack.push(i);
    }
    Graph::from_edges(seq.len(), edges)
}

/// All free trees of order `n`, one per isomorphism class.
pub fn free_trees(n: usize) -> Result<Vec<Graph>> {
    if n <= 2 {
        return Ok(vec![Graph::path(n)?]);
    }
    let mut seq: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
    let mut out = Vec::new();
    while let Some(tree) = next_free(seq) {
        out.push(from_levels(&tree)?);
        match next_rooted(&tree, None) {
            Some(s) => seq = s,
            None => break,
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_sequence_to_graph() {
        let g = from_levels(&[0, 1, 2, 1]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=9).map(|n| free_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
        for n in 1..=9 {
            assert!(free_trees(n).unwrap().iter().all(|t| t.is_tree() && t.order() == n));
        }
    }
}
