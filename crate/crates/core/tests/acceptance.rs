//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p fauxtree --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fauxtree::algebra::{BigInt, BigRational};
use fauxtree::constructions::{
    build_ornamented, kary_example_pair, limb_occurrences, limb_pair, limb_swap, q_attach, q_base_pair, OrnamentSpec,
};
use fauxtree::cycle_decomp::{ktt_full_sum, na_charpoly_by_decomposition};
use fauxtree::enumerate::{all_graphs, census, free_trees, CensusMode, GraphFilter};
use fauxtree::graph::named::star;
use fauxtree::graph::{coalesce, Graph, RootedGraph};
use fauxtree::spectra::{
    char_poly, cospectral, det_from_spectrum, nonzero_eigenvalue_product, root_multiplicity, spanning_tree_count,
    MatrixKind,
};
use fauxtree::word::{transfer_charpoly, verify_intertwiner, ExtendedWord, WordTree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn counts(n: usize, kind: MatrixKind, mode: CensusMode, prune: bool) -> Result<(usize, usize), String> {
    let t = census(n, kind, mode, prune).map_err(|e| e.to_string())?;
    Ok((t.faux_tree_count, t.trees_with_mate_count))
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

fn c1_tree_counts() -> Outcome {
    let expected = [
        (4, 2),
        (5, 3),
        (6, 6),
        (7, 11),
        (8, 23),
        (9, 47),
        (10, 106),
        (11, 235),
        (12, 551),
        (13, 1301),
        (14, 3159),
        (16, 19320),
    ];
    for (n, want) in expected {
        let got = free_trees(n).count();
        check(got == want, || format!("n = {n}: {got} trees, expected {want}"))?;
    }
    Ok("n = 4..14 and 16".into())
}

fn census_sweep(kind: MatrixKind, expected: &[(usize, (usize, usize))]) -> Outcome {
    for &(n, want) in expected {
        let got = counts(n, kind, CensusMode::Brute, true)?;
        check(got == want, || format!("{kind} n = {n}: {got:?}, expected {want:?}"))?;
    }
    Ok(format!("{kind} n = {}..{}", expected[0].0, expected[expected.len() - 1].0))
}

fn c2_adjacency() -> Outcome {
    census_sweep(
        MatrixKind::Adjacency,
        &[(4, (0, 0)), (5, (1, 1)), (6, (1, 1)), (7, (6, 6)), (8, (5, 5)), (9, (30, 24))],
    )
}

fn c3_normalized() -> Outcome {
    let kind = MatrixKind::NormalizedAdjacency;
    census_sweep(kind, &[(4, (1, 1)), (5, (1, 1)), (6, (2, 1)), (7, (4, 2)), (8, (3, 1)), (9, (8, 4))])?;
    for n in 2..=7 {
        let a = census(n, kind, CensusMode::Brute, true).map_err(|e| e.to_string())?;
        let b = census(n, kind, CensusMode::Brute, false).map_err(|e| e.to_string())?;
        check(a.classes == b.classes, || format!("pruned and unpruned runs differ at n = {n}"))?;
    }
    Ok("NA n = 4..9; pruned = unpruned for n <= 7".into())
}

fn c4_signless() -> Outcome {
    let q = MatrixKind::SignlessLaplacian;
    for (n, mode, want) in
        [(4, CensusMode::Brute, (1, 1)), (8, CensusMode::Brute, (2, 2)), (12, CensusMode::Structured, (9, 9))]
    {
        let got = counts(n, q, mode, true)?;
        check(got == want, || format!("Q {mode} n = {n}: {got:?}, expected {want:?}"))?;
    }
    let start = Instant::now();
    let got = counts(16, q, CensusMode::Structured, true)?;
    let took = start.elapsed();
    check(got == (48, 34), || format!("Q structured n = 16: {got:?}, expected (48, 34)"))?;
    check(took < Duration::from_secs(600), || format!("structured n = 16 took {took:.1?}"))?;
    Ok(format!("structured n = 16 in {took:.1?}"))
}

fn c5_laplacian() -> Outcome {
    for n in 1..=9 {
        let (faux, _) = counts(n, MatrixKind::Laplacian, CensusMode::Brute, true)?;
        check(faux == 0, || format!("L n = {n}: {faux} faux trees"))?;
    }
    Ok("L n = 1..9".into())
}

fn c6_cycle_oracle() -> Outcome {
    let mut total = 0;
    for n in 2..=6 {
        let graphs = all_graphs(n, GraphFilter::connected());
        if n == 6 {
            check(graphs.len() == 112, || format!("{} connected graphs on 6 vertices", graphs.len()))?;
        }
        for g in graphs {
            let direct = char_poly(&g, MatrixKind::NormalizedAdjacency).map_err(|e| e.to_string())?.charpoly.to_rat();
            let sum = na_charpoly_by_decomposition(&g).map_err(|e| e.to_string())?;
            check(direct == sum, || format!("mismatch on {g}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} connected graphs on 2..6 vertices"))
}

fn c7_ktt() -> Outcome {
    for t in 1..=5 {
        let want = if t == 1 { BigInt::from(-1) } else { BigInt::from(0) };
        let got = ktt_full_sum(t).map_err(|e| e.to_string())?;
        check(got == want, || format!("t = {t}: {got}"))?;
    }
    Ok("t = 1..5".into())
}

fn c8_ornaments() -> Outcome {
    let words: Vec<WordTree> = (1..=4).flat_map(WordTree::all_with_letters).collect();
    let mut cases = 0;
    for w in &words {
        let ext = ExtendedWord::new(w.clone());
        for c in 4..=8 {
            let mut reference = None;
            for p in 1..=c - 2 {
                let q = c - p;
                let spec = OrnamentSpec::new(w.clone(), p, q).map_err(|e| e.to_string())?;
                let g = build_ornamented(&spec).map_err(|e| e.to_string())?;
                let direct =
                    char_poly(&g, MatrixKind::NormalizedAdjacency).map_err(|e| e.to_string())?.charpoly.to_rat();
                let transfer = transfer_charpoly(&ext, p, q).map_err(|e| e.to_string())?;
                check(transfer == direct, || format!("transfer differs from direct for {ext} ({p},{q})"))?;
                match &reference {
                    None => reference = Some(direct),
                    Some(r) => check(*r == direct, || format!("{ext}: ({p},{q}) not cospectral with (1,{})", c - 1))?,
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{} words, {cases} ornaments", words.len()))
}

fn c9_intertwiner() -> Outcome {
    let mut count = 0;
    for p in 1..=6 {
        for q in 2..=8 {
            if p + q < 4 {
                continue;
            }
            let ok = verify_intertwiner(p, q).map_err(|e| e.to_string())?;
            check(ok, || format!("identities fail at ({p},{q})"))?;
            count += 1;
        }
    }
    Ok(format!("{count} parameter pairs"))
}

fn c10_limb_swap() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let t1 = limb_pair().t1;
    for trial in 0..100 {
        let k = rng.gen_range(1..=7);
        let edges: Vec<(usize, usize)> = (1..k).map(|v| (rng.gen_range(0..v), v)).collect();
        let h = Graph::from_edges(k, &edges).map_err(|e| e.to_string())?;
        let host = RootedGraph::new(h, rng.gen_range(0..k)).map_err(|e| e.to_string())?;
        let s = coalesce(&host, &t1).map_err(|e| e.to_string())?;
        let occ = limb_occurrences(&s, &t1)
            .map_err(|e| e.to_string())?
            .into_iter()
            .find(|o| o.vertex == host.root())
            .ok_or_else(|| format!("trial {trial}: limb not found in {s}"))?;
        let swapped = limb_swap(&s, &occ).map_err(|e| e.to_string())?;
        check(!swapped.is_tree(), || format!("trial {trial}: swapped graph is a tree"))?;
        let same = cospectral(&s, &swapped, MatrixKind::Adjacency).map_err(|e| e.to_string())?;
        check(same, || format!("trial {trial}: {s} and {swapped} not A-cospectral"))?;
    }
    Ok("100 seeded hosts, up to 13 vertices".into())
}

fn c11_q_attach() -> Outcome {
    let mut cases = 0;
    for k in 1..=5 {
        for t in free_trees(k) {
            for r in 0..k {
                let (a, b) =
                    q_attach(&RootedGraph::new(t, r).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                check(a.n() == 4 * k && b.n() == 4 * k, || format!("wrong size for {t} rooted at {r}"))?;
                let same = cospectral(&a, &b, MatrixKind::SignlessLaplacian).map_err(|e| e.to_string())?;
                check(same, || format!("{t} rooted at {r}: not Q-cospectral"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} rooted trees"))
}

fn c12_fixed_examples() -> Outcome {
    let q = MatrixKind::SignlessLaplacian;
    let (a, b) = q_base_pair();
    check(cospectral(&a, &b, q).map_err(|e| e.to_string())?, || "base pair not Q-cospectral".into())?;
    let (a, b) = q_attach(&RootedGraph::new(star(3), 0).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    check(a.n() == 16 && cospectral(&a, &b, q).map_err(|e| e.to_string())?, || {
        "star pair not Q-cospectral on 16 vertices".into()
    })?;
    let (t, f) = kary_example_pair();
    let same = cospectral(&t, &f, MatrixKind::NormalizedAdjacency).map_err(|e| e.to_string())?;
    check(same && (t.is_tree() ^ f.is_tree()), || "ternary pair fails".into())?;
    Ok("base pair, star pair, ternary pair".into())
}

fn c13_invariants() -> Outcome {
    let mut checked = 0;
    let mut unicyclic = 0;
    for n in 1..=7 {
        for g in all_graphs(n, GraphFilter::all()) {
            let m = g.edge_count() as i64;
            let spec = |kind| char_poly(&g, kind).map_err(|e| e.to_string());
            let l = spec(MatrixKind::Laplacian)?;
            let q = spec(MatrixKind::SignlessLaplacian)?;
            let lp = l.charpoly.to_rat();
            let qp = q.charpoly.to_rat();
            check(-lp.coeff(n - 1) == int(2 * m), || format!("trace L on {g}"))?;
            check(-qp.coeff(n - 1) == int(2 * m), || format!("trace Q on {g}"))?;
            check(root_multiplicity(&l, &int(0)) == g.components().len(), || format!("L zero multiplicity on {g}"))?;
            check(root_multiplicity(&q, &int(0)) == g.bipartite_component_count(), || {
                format!("Q zero multiplicity on {g}")
            })?;
            if g.is_bipartite() {
                check(l.charpoly == q.charpoly, || format!("bipartite L != Q on {g}"))?;
            }
            let tau = BigRational::from_integer(spanning_tree_count(&g));
            if g.is_connected() {
                check(nonzero_eigenvalue_product(&l) == tau * int(n as i64), || format!("matrix tree theorem on {g}"))?;
            }
            if g.is_odd_unicyclic() {
                check(det_from_spectrum(&q) == int(4), || format!("det Q != 4 on {g}"))?;
                unicyclic += 1;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs, {unicyclic} odd unicyclic"))
}

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "tree counts", limit: secs(5), run: c1_tree_counts },
        Criterion { id: 2, name: "adjacency census", limit: secs(300), run: c2_adjacency },
        Criterion { id: 3, name: "normalized adjacency census", limit: secs(600), run: c3_normalized },
        Criterion { id: 4, name: "signless Laplacian census", limit: secs(600), run: c4_signless },
        Criterion { id: 5, name: "no Laplacian faux trees", limit: secs(300), run: c5_laplacian },
        Criterion { id: 6, name: "cycle decomposition oracle", limit: secs(60), run: c6_cycle_oracle },
        Criterion { id: 7, name: "K_{t,t} cancellation", limit: secs(1), run: c7_ktt },
        Criterion { id: 8, name: "ornament cospectrality", limit: secs(120), run: c8_ornaments },
        Criterion { id: 9, name: "intertwiner sweep", limit: secs(60), run: c9_intertwiner },
        Criterion { id: 10, name: "limb swap", limit: secs(60), run: c10_limb_swap },
        Criterion { id: 11, name: "Q attachment", limit: secs(60), run: c11_q_attach },
        Criterion { id: 12, name: "fixed examples", limit: secs(1), run: c12_fixed_examples },
        Criterion { id: 13, name: "spectral invariants", limit: secs(120), run: c13_invariants },
    ];
    let mut failures = 0;
    let mut adjacency_time = Duration::ZERO;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        // the Laplacian sweep shares the adjacency census budget
        let budget_used = if c.id == 5 { took + adjacency_time } else { took };
        if c.id == 2 {
            adjacency_time = took;
        }
        let outcome = match outcome {
            Ok(_) if budget_used > c.limit => Err(format!("exceeded {:?}", c.limit)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {} ({took:.2?}): {detail}", c.id, c.name),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {} ({took:.2?}): {why}", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
