//! Candidate non-trees for signless-Laplacian censuses: one tree component
//! plus `l >= 1` odd unicyclic components, with `|tree| * 4^l = n`.

use std::collections::HashSet;

use crate::graph::{bits, canonical_form, Graph};

use super::free_trees;

/// Connected odd unicyclic graphs on `n` vertices, one per isomorphism
/// class, obtained by closing an odd cycle in each free tree.
pub fn odd_unicyclic(n: usize) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    for t in free_trees(n) {
        for u in 0..n {
            let dist = distances(&t, u);
            for (v, &d) in dist.iter().enumerate().skip(u + 1) {
                // path of even length plus the new edge is an odd cycle
                if d >= 2 && d.is_multiple_of(2) {
                    let g = t.with_edge(u, v).expect("non-edge of a tree");
                    if seen.insert(canonical_form(&g).0) {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

fn distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut frontier = 1u32 << s;
    let mut seen = frontier;
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let mut next = 0u32;
        for v in bits(frontier) {
            next |= g.neighbors(v);
        }
        next &= !seen;
        for v in bits(next) {
            dist[v] = d;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

/// Nonincreasing sequences of `parts` integers, each at least 3, summing to `total`.
fn size_partitions(total: usize, parts: usize, max: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (3..=max.min(total)).rev() {
        for mut rest in size_partitions(total - first, parts - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All `(tree size, number of odd unicyclic components)` pairs for `n`.
pub fn q_shapes(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    if n == 0 || !n.is_multiple_of(4) {
        return out;
    }
    let mut l = 1;
    let mut pow = 4;
    while n.is_multiple_of(pow) {
        out.push((n / pow, l));
        l += 1;
        pow *= 4;
    }
    out
}

/// Every graph (up to isomorphism) made of one tree `T'` and `l >= 1` odd
/// unicyclic components with `|T'| * 4^l = n`. Empty unless `4 | n`.
pub fn q_candidates(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut unicyclic_cache: Vec<Option<Vec<Graph>>> = vec![None; n + 1];
    for (t, l) in q_shapes(n) {
        let trees: Vec<Graph> = free_trees(t).collect();
        for sizes in size_partitions(n - t, l, n - t) {
            for &s in &sizes {
                if unicyclic_cache[s].is_none() {
                    unicyclic_cache[s] = Some(odd_unicyclic(s));
                }
            }
            let pools: Vec<&Vec<Graph>> = sizes.iter().map(|&s| unicyclic_cache[s].as_ref().unwrap()).collect();
            let mut combo = Vec::with_capacity(l);
            multisets(&sizes, &pools, 0, &mut combo, &mut |parts: &[&Graph]| {
                let mut body = *parts[0];
                for p in &parts[1..] {
                    body = body.disjoint_union(p).expect("within vertex cap");
                }
                for tree in &trees {
                    out.push(tree.disjoint_union(&body).expect("within vertex cap"));
                }
            });
        }
    }
    out
}

/// Chooses one graph per size slot; equal consecutive sizes take
/// nondecreasing indices so each multiset appears once.
fn multisets<'a>(
    sizes: &[usize],
    pools: &[&'a Vec<Graph>],
    slot: usize,
    chosen: &mut Vec<(usize, &'a Graph)>,
    emit: &mut impl FnMut(&[&Graph]),
) {
    if slot == sizes.len() {
        let parts: Vec<&Graph> = chosen.iter().map(|&(_, g)| g).collect();
        emit(&parts);
        return;
    }
    let start = match chosen.last() {
        Some(&(idx, _)) if sizes[slot - 1] == sizes[slot] => idx,
        _ => 0,
    };
    for (i, g) in pools[slot].iter().enumerate().skip(start) {
        chosen.push((i, g));
        multisets(sizes, pools, slot + 1, chosen, emit);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::complete;
    use std::collections::HashSet;

    #[test]
    fn unicyclic_counts() {
        // five vertices: C5 and three ways of hanging two vertices on a triangle
        assert_eq!(odd_unicyclic(3).len(), 1);
        assert_eq!(odd_unicyclic(4).len(), 1);
        assert_eq!(odd_unicyclic(5).len(), 4);
        for g in odd_unicyclic(7) {
            assert!(g.is_odd_unicyclic());
        }
    }

    #[test]
    fn shapes() {
        assert_eq!(q_shapes(4), vec![(1, 1)]);
        assert_eq!(q_shapes(16), vec![(4, 1), (1, 2)]);
        assert!(q_shapes(6).is_empty());
        assert_eq!(size_partitions(15, 2, 15).len(), 5);
    }

    #[test]
    fn candidates() {
        let four = q_candidates(4);
        assert_eq!(four.len(), 1);
        assert_eq!(
            canonical_form(&four[0]).0,
            canonical_form(&complete(3).disjoint_union(&Graph::empty(1).unwrap()).unwrap()).0
        );
        assert!(q_candidates(6).is_empty());
        for g in q_candidates(8) {
            let mut sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
            sizes.sort();
            assert_eq!(sizes, vec![2, 6]);
        }
        let sixteen = q_candidates(16);
        let unique: HashSet<_> = sixteen.iter().map(|g| canonical_form(g).0).collect();
        assert_eq!(unique.len(), sixteen.len());
    }
}
