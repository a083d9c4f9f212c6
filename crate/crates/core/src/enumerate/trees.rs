//! Free trees by the Wright-Richmond-Odlyzko-McKay successor on level
//! sequences, which visits each unlabelled tree exactly once in constant
//! amortized time.

use crate::graph::Graph;

/// Iterator over the free trees on `n` vertices, one per isomorphism class.
pub struct FreeTrees {
    n: usize,
    layout: Option<Vec<usize>>,
}

/// Free trees on `n` vertices; `n = 0` yields nothing.
pub fn free_trees(n: usize) -> FreeTrees {
    let layout = match n {
        0 => None,
        1 => Some(vec![0]),
        // path rooted at its centre
        _ => Some((0..=n / 2).chain(1..n.div_ceil(2)).collect()),
    };
    FreeTrees { n, layout }
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let current = self.layout.take()?;
        if self.n == 1 {
            return Some(Graph::empty(1).expect("one vertex"));
        }
        let tree = next_tree(current)?;
        let g = layout_to_graph(&tree);
        self.layout = next_rooted_tree(&tree, None);
        Some(g)
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (k, slot) in next[len - (h + 1)..].iter_mut().enumerate() {
            *slot = k + 1;
        }
    }
    Some(next)
}

/// Splits a level sequence into the leftmost subtree of the root (levels
/// shifted up by one) and the rest of the tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout.iter().enumerate().skip(1).filter(|&(_, &l)| l == 1).nth(1).map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(layout.len() - 1);
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                edges.push((j, i));
                break;
            }
        }
        stack.push(i);
    }
    Graph::from_edges(layout.len(), &edges).expect("level sequence within vertex cap")
}
