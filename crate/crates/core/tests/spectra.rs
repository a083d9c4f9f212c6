use fauxtree::algebra::{BigInt, BigRational};
use fauxtree::graph::named::{cycle, path, star};
use fauxtree::graph::Graph;
use fauxtree::spectra::{
    char_poly, cospectral, nonzero_eigenvalue_product, root_multiplicity, spanning_tree_count, MatrixKind,
};
use fauxtree::Error;
use proptest::prelude::*;

fn graph_from_bits(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> (i % 64) & 1 == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Sum of eigenvalues, from the second highest coefficient.
fn trace(g: &Graph, kind: MatrixKind) -> BigRational {
    let p = char_poly(g, kind).unwrap().charpoly.to_rat();
    -p.coeff(g.n() - 1)
}

#[test]
fn known_polynomials() {
    use fauxtree::algebra::IntPoly;
    use fauxtree::spectra::CharPoly;
    let a = char_poly(&path(3), MatrixKind::Adjacency).unwrap().charpoly;
    assert_eq!(a, CharPoly::Int(IntPoly::from_i64(&[0, -2, 0, 1])));
    let l = char_poly(&star(3), MatrixKind::Laplacian).unwrap().charpoly;
    // x (x - 1)^2 (x - 4)
    assert_eq!(l, CharPoly::Int(IntPoly::from_i64(&[0, -4, 9, -6, 1])));
    assert!(matches!(
        char_poly(&Graph::empty(2).unwrap(), MatrixKind::NormalizedAdjacency),
        Err(Error::IsolatedVertex(0))
    ));
    assert!(matches!(cospectral(&path(3), &path(4), MatrixKind::Adjacency), Err(Error::VertexCountMismatch(3, 4))));
}

#[test]
fn odd_unicyclic_signless_determinant() {
    for n in [3, 5, 7] {
        let q = char_poly(&cycle(n), MatrixKind::SignlessLaplacian).unwrap();
        assert_eq!(fauxtree::spectra::det_from_spectrum(&q), int(4));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn trace_identities(n in 1usize..=10, mask in any::<u64>()) {
        let g = graph_from_bits(n, mask);
        let m = g.edge_count() as i64;
        prop_assert_eq!(trace(&g, MatrixKind::Adjacency), int(0));
        prop_assert_eq!(trace(&g, MatrixKind::Laplacian), int(2 * m));
        prop_assert_eq!(trace(&g, MatrixKind::SignlessLaplacian), int(2 * m));
    }

    #[test]
    fn zero_multiplicities(n in 1usize..=10, mask in any::<u64>()) {
        let g = graph_from_bits(n, mask);
        let l = char_poly(&g, MatrixKind::Laplacian).unwrap();
        let q = char_poly(&g, MatrixKind::SignlessLaplacian).unwrap();
        prop_assert_eq!(root_multiplicity(&l, &int(0)), g.components().len());
        prop_assert_eq!(root_multiplicity(&q, &int(0)), g.bipartite_component_count());
    }

    #[test]
    fn bipartite_laplacians_agree(n in 1usize..=10, mask in any::<u64>()) {
        let g = graph_from_bits(n, mask);
        let same = char_poly(&g, MatrixKind::Laplacian).unwrap().charpoly == char_poly(&g, MatrixKind::SignlessLaplacian).unwrap().charpoly;
        if g.is_bipartite() {
            prop_assert!(same);
        }
    }

    #[test]
    fn matrix_tree_theorem(n in 1usize..=10, mask in any::<u64>()) {
        let g = graph_from_bits(n, mask);
        let l = char_poly(&g, MatrixKind::Laplacian).unwrap();
        let count = BigRational::from_integer(spanning_tree_count(&g));
        if g.is_connected() {
            prop_assert_eq!(nonzero_eigenvalue_product(&l), count * int(n as i64));
        } else {
            prop_assert_eq!(count, int(0));
        }
    }

    #[test]
    fn normalized_eigenvalue_one_counts_components(n in 2usize..=9, mask in any::<u64>()) {
        let g = graph_from_bits(n, mask);
        prop_assume!(g.isolated_vertex().is_none());
        let na = char_poly(&g, MatrixKind::NormalizedAdjacency).unwrap();
        prop_assert_eq!(root_multiplicity(&na, &int(1)), g.components().len());
        prop_assert_eq!(na.charpoly.to_rat().coeff(n - 1), int(0));
    }
}
