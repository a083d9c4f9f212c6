use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use fauxtree::algebra::RatPoly;
use fauxtree::constructions::{
    build_ornamented, certify, limb_occurrences, limb_pair, limb_swap, q_attach, CospectralityCertificate,
    LimbOccurrence, OrnamentSpec,
};
use fauxtree::enumerate::{census, free_trees};
use fauxtree::graph::{coalesce, graph6_decode, graph6_encode, Graph, RootedGraph};
use fauxtree::spectra::char_poly;
use fauxtree::word::{intertwiner_identities, parse_word_lenient, transfer_evaluation};
use fauxtree::MatrixKind;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{Command, GlobalOpts};

const SCHEMA: u32 = 1;
pub const CSV_HEADER: &str = "n,kind,trees,faux_trees,trees_with_mate";

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: u32,
    config: Config<'a>,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct Config<'a> {
    #[serde(flatten)]
    global: &'a GlobalOpts,
    #[serde(flatten)]
    command: &'a Command,
}

fn json<T: Serialize>(global: &GlobalOpts, command: &Command, body: T) -> Result<String> {
    let env = Envelope { schema: SCHEMA, config: Config { global, command }, body };
    Ok(serde_json::to_string_pretty(&env)? + "\n")
}

fn write_file(global: &GlobalOpts, name: &str, contents: &str) -> Result<()> {
    if let Some(dir) = &global.out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let path = Path::new(dir).join(name);
        fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

/// Runs one command; `Ok(false)` means a verification failed.
pub fn run(global: &GlobalOpts, command: &Command) -> Result<bool> {
    match command {
        Command::Trees { n } => trees(global, *n),
        Command::Census { n, matrix, mode, no_prune } => {
            let table = census(*n, *matrix, *mode, !no_prune)?;
            let csv = format!(
                "{CSV_HEADER}\n{},{},{},{},{}\n",
                table.n, table.kind, table.tree_count, table.faux_tree_count, table.trees_with_mate_count
            );
            print!("{csv}");
            let stem = format!("census_{}_{}_n{}", table.kind, table.mode, table.n);
            write_file(global, &format!("{stem}.csv"), &csv)?;
            write_file(global, &format!("{stem}.json"), &json(global, command, TableBody { table: &table })?)?;
            Ok(true)
        }
        Command::Ornament { word, p, q, states } => ornament(global, command, word, p, q, *states),
        Command::VerifyU { p, q, p_max, q_max } => {
            let pairs: Vec<(usize, usize)> = match (p, q) {
                (Some(p), Some(q)) => vec![(*p, *q)],
                _ => (1..=*p_max).flat_map(|p| (2..=*q_max).map(move |q| (p, q))).collect(),
            };
            verify_u(global, command, &pairs)
        }
        Command::Limbswap { graph6, random_host } => {
            let s = match (graph6, random_host) {
                (Some(text), _) => graph6_decode(text.trim())?,
                (None, Some(k)) => random_limb_host(*k, global.seed)?,
                (None, None) => bail!("limbswap needs --graph6 or --random-host"),
            };
            limbswap(global, command, &s)
        }
        Command::Qfamily { graph6, root } => {
            let g = graph6_decode(graph6.trim())?;
            let (faux, tree) = q_attach(&RootedGraph::new(g, *root)?)?;
            let cert = certify(&faux, &tree, MatrixKind::SignlessLaplacian)?;
            finish_pair(global, command, "qfamily", &QfamilyBody { certificate: &cert })?;
            Ok(cert.cospectral)
        }
    }
}

#[derive(Serialize)]
struct TableBody<'a> {
    table: &'a fauxtree::enumerate::CensusTable,
}

fn trees(global: &GlobalOpts, n: usize) -> Result<bool> {
    let mut text = String::new();
    let mut count = 0;
    for t in free_trees(n) {
        writeln!(text, "{}", graph6_encode(&t))?;
        count += 1;
    }
    print!("{text}");
    eprintln!("{count} trees on {n} vertices");
    write_file(global, &format!("trees_n{n}.g6"), &text)?;
    Ok(true)
}

#[derive(Serialize)]
struct OrnamentEntry {
    p: usize,
    q: usize,
    graph6: String,
    vertices: usize,
    is_tree: bool,
    direct_charpoly: RatPoly,
    transfer_charpoly: RatPoly,
    direct_text: String,
    agrees: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    states: Option<Vec<(String, Vec<RatPoly>)>>,
}

#[derive(Serialize)]
struct OrnamentBody {
    word: String,
    ornaments: Vec<OrnamentEntry>,
    verdict: &'static str,
}

fn ornament(
    global: &GlobalOpts,
    command: &Command,
    word: &str,
    ps: &[usize],
    qs: &[usize],
    states: bool,
) -> Result<bool> {
    if ps.len() != qs.len() {
        bail!("give --p and --q the same number of times");
    }
    let w = parse_word_lenient(word)?;
    let mut ornaments = Vec::new();
    for (&p, &q) in ps.iter().zip(qs) {
        let g = build_ornamented(&OrnamentSpec::from_extended(&w, p, q)?)?;
        let direct = char_poly(&g, MatrixKind::NormalizedAdjacency)?.charpoly.to_rat();
        let eval = transfer_evaluation(&w, p, q)?;
        ornaments.push(OrnamentEntry {
            p,
            q,
            graph6: graph6_encode(&g),
            vertices: g.n(),
            is_tree: g.is_tree(),
            direct_text: direct.to_string(),
            agrees: direct == eval.charpoly,
            direct_charpoly: direct,
            transfer_charpoly: eval.charpoly,
            states: states.then_some(eval.states),
        });
    }
    let agree = ornaments.iter().all(|o| o.agrees);
    let same = ornaments.windows(2).all(|pair| pair[0].direct_charpoly == pair[1].direct_charpoly);
    let verdict = match (agree, same, ornaments.len()) {
        (false, _, _) => "transfer mismatch",
        (true, _, 1) => "transfer agrees",
        (true, true, _) => "cospectral",
        (true, false, _) => "not cospectral",
    };
    let body = OrnamentBody { word: w.to_string(), ornaments, verdict };
    let text = json(global, command, &body)?;
    print!("{text}");
    write_file(global, "ornament.json", &text)?;
    let graphs: String = body.ornaments.iter().map(|o| o.graph6.clone() + "\n").collect();
    write_file(global, "ornament.g6", &graphs)?;
    Ok(agree && same)
}

#[derive(Serialize)]
struct IntertwinerResult {
    p: usize,
    q: usize,
    /// `None` where `U` is undefined.
    verified: Option<bool>,
    identities: Option<[bool; 4]>,
}

#[derive(Serialize)]
struct VerifyBody {
    results: Vec<IntertwinerResult>,
}

fn verify_u(global: &GlobalOpts, command: &Command, pairs: &[(usize, usize)]) -> Result<bool> {
    let mut results = Vec::new();
    for &(p, q) in pairs {
        let identities = if p >= 1 && q >= 2 && p + q >= 4 { Some(intertwiner_identities(p, q)?) } else { None };
        results.push(IntertwinerResult { p, q, verified: identities.map(|i| i.iter().all(|&b| b)), identities });
    }
    let ps: Vec<usize> = dedup(pairs.iter().map(|&(p, _)| p));
    let qs: Vec<usize> = dedup(pairs.iter().map(|&(_, q)| q));
    let mut table = String::from("p\\q");
    for q in &qs {
        write!(table, " {q:>2}")?;
    }
    table.push('\n');
    for &p in &ps {
        write!(table, "{p:>3}")?;
        for &q in &qs {
            let mark = match results.iter().find(|r| r.p == p && r.q == q).and_then(|r| r.verified) {
                Some(true) => "T",
                Some(false) => "F",
                None => "-",
            };
            write!(table, " {mark:>2}")?;
        }
        table.push('\n');
    }
    print!("{table}");
    let ok = results.iter().all(|r| r.verified != Some(false));
    write_file(global, "verify_u.txt", &table)?;
    write_file(global, "verify_u.json", &json(global, command, VerifyBody { results })?)?;
    Ok(ok)
}

fn dedup(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// A random tree on `k` vertices with the spider limb coalesced at a random vertex.
fn random_limb_host(k: usize, seed: u64) -> Result<Graph> {
    if k == 0 {
        bail!("--random-host needs at least one vertex");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (1..k).map(|v| (rng.gen_range(0..v), v)).collect();
    let host = RootedGraph::new(Graph::from_edges(k, &edges)?, rng.gen_range(0..k))?;
    Ok(coalesce(&host, &limb_pair().t1)?)
}

#[derive(Serialize)]
struct LimbBody<'a> {
    occurrence: &'a LimbOccurrence,
    certificate: &'a CospectralityCertificate,
}

fn limbswap(global: &GlobalOpts, command: &Command, s: &Graph) -> Result<bool> {
    let occs = limb_occurrences(s, &limb_pair().t1)?;
    let Some(occ) = occs.first() else {
        bail!("no occurrence of the spider limb in {}", graph6_encode(s));
    };
    let swapped = limb_swap(s, occ)?;
    let cert = certify(s, &swapped, MatrixKind::Adjacency)?;
    finish_pair(global, command, "limbswap", &LimbBody { occurrence: occ, certificate: &cert })?;
    Ok(cert.cospectral)
}

#[derive(Serialize)]
struct QfamilyBody<'a> {
    certificate: &'a CospectralityCertificate,
}

trait HasCertificate {
    fn certificate(&self) -> &CospectralityCertificate;
}

impl HasCertificate for LimbBody<'_> {
    fn certificate(&self) -> &CospectralityCertificate {
        self.certificate
    }
}

impl HasCertificate for QfamilyBody<'_> {
    fn certificate(&self) -> &CospectralityCertificate {
        self.certificate
    }
}

fn finish_pair<T: Serialize + HasCertificate>(
    global: &GlobalOpts,
    command: &Command,
    stem: &str,
    body: &T,
) -> Result<()> {
    let text = json(global, command, body)?;
    print!("{text}");
    let c = body.certificate();
    write_file(global, &format!("{stem}.json"), &text)?;
    write_file(global, &format!("{stem}.g6"), &format!("{}\n{}\n", c.first, c.second))?;
    Ok(())
}
