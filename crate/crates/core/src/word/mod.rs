//! Words for full binary trees and their transfer-matrix evaluation.
//!
//! A word is built from the letters `e` (both children are leaves), `S`
//! (exactly one child is internal) and `D` (both children are internal):
//!
//! ```text
//! extended ::= "i" word
//! word     ::= "e" | "S" word | "D((" word ")*(" word "))"
//! ```
//!
//! Whitespace is ignored. The lenient parser also accepts `⊗` for `*`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bits, RootedGraph};

mod transfer;

pub use transfer::{
    intertwiner, intertwiner_identities, transfer_charpoly, transfer_evaluation, transfer_matrices, verify_intertwiner,
    IntertwinerU, TransferEvaluation, TransferMatrixSet, STATE_LABELS,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordTree {
    End,
    Single(Box<WordTree>),
    /// First child attaches through `+`, second through `-`.
    Double(Box<WordTree>, Box<WordTree>),
}

impl WordTree {
    pub fn single(w: WordTree) -> Self {
        WordTree::Single(Box::new(w))
    }

    pub fn double(a: WordTree, b: WordTree) -> Self {
        WordTree::Double(Box::new(a), Box::new(b))
    }

    /// Number of letters, which is the number of internal vertices.
    pub fn letters(&self) -> usize {
        match self {
            WordTree::End => 1,
            WordTree::Single(w) => 1 + w.letters(),
            WordTree::Double(a, b) => 1 + a.letters() + b.letters(),
        }
    }

    /// The same tree with the children of every `D` exchanged.
    pub fn mirrored(&self) -> WordTree {
        match self {
            WordTree::End => WordTree::End,
            WordTree::Single(w) => WordTree::single(w.mirrored()),
            WordTree::Double(a, b) => WordTree::double(b.mirrored(), a.mirrored()),
        }
    }

    /// Every word with exactly `k` letters, children of `D` ordered.
    pub fn all_with_letters(k: usize) -> Vec<WordTree> {
        let mut memo: Vec<Vec<WordTree>> = vec![Vec::new()];
        for size in 1..=k {
            let mut here = Vec::new();
            if size == 1 {
                here.push(WordTree::End);
            } else {
                here.extend(memo[size - 1].iter().map(|w| WordTree::single(w.clone())));
                for left in 1..size - 1 {
                    for a in &memo[left] {
                        for b in &memo[size - 1 - left] {
                            here.push(WordTree::double(a.clone(), b.clone()));
                        }
                    }
                }
            }
            memo.push(here);
        }
        memo.swap_remove(k)
    }
}

impl fmt::Display for WordTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordTree::End => f.write_str("e"),
            WordTree::Single(w) => write!(f, "S{w}"),
            WordTree::Double(a, b) => write!(f, "D(({a})*({b}))"),
        }
    }
}

/// A word preceded by the initial letter `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedWord {
    pub body: WordTree,
}

impl ExtendedWord {
    pub fn new(body: WordTree) -> Self {
        ExtendedWord { body }
    }

    pub fn letters(&self) -> usize {
        self.body.letters()
    }
}

impl fmt::Display for ExtendedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i{}", self.body)
    }
}

impl std::str::FromStr for ExtendedWord {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        parse_word(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("word parse error at position {position}: expected {}, found {}", expected.join(" or "), found.map_or("end of input".to_string(), |c| format!("{c:?}")))]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub found: Option<char>,
    pub expected: Vec<&'static str>,
}

/// Parses an extended word; `*` is the only product symbol.
pub fn parse_word(text: &str) -> std::result::Result<ExtendedWord, ParseError> {
    Parser::new(text, false).extended()
}

/// As [`parse_word`], also accepting `⊗` for `*`.
pub fn parse_word_lenient(text: &str) -> std::result::Result<ExtendedWord, ParseError> {
    Parser::new(text, true).extended()
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    lenient: bool,
    len: usize,
}

impl Parser {
    fn new(text: &str, lenient: bool) -> Self {
        let chars: Vec<(usize, char)> = text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { chars, at: 0, lenient, len: text.chars().count() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let position = self.chars.get(self.at).map_or(self.len, |&(i, _)| i);
        ParseError { position, found: self.peek(), expected }
    }

    fn expect(&mut self, want: char, label: &'static str) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(want) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.error(vec![label]))
        }
    }

    fn extended(mut self) -> std::result::Result<ExtendedWord, ParseError> {
        self.expect('i', "\"i\"")?;
        let body = self.word()?;
        if self.peek().is_some() {
            return Err(self.error(vec!["end of input"]));
        }
        Ok(ExtendedWord { body })
    }

    fn word(&mut self) -> std::result::Result<WordTree, ParseError> {
        match self.peek() {
            Some('e') => {
                self.at += 1;
                Ok(WordTree::End)
            }
            Some('S') => {
                self.at += 1;
                Ok(WordTree::single(self.word()?))
            }
            Some('D') => {
                self.at += 1;
                self.expect('(', "\"(\"")?;
                self.expect('(', "\"(\"")?;
                let a = self.word()?;
                self.expect(')', "\")\"")?;
                match self.peek() {
                    Some('*') => self.at += 1,
                    Some('⊗') if self.lenient => self.at += 1,
                    _ => return Err(self.error(if self.lenient { vec!["\"*\"", "\"⊗\""] } else { vec!["\"*\""] })),
                }
                self.expect('(', "\"(\"")?;
                let b = self.word()?;
                self.expect(')', "\")\"")?;
                self.expect(')', "\")\"")?;
                Ok(WordTree::double(a, b))
            }
            _ => Err(self.error(vec!["\"e\"", "\"S\"", "\"D\""])),
        }
    }
}

/// Word of a rooted full binary tree (every vertex has zero or two children,
/// at least three vertices). The children of a `D` are ordered by the
/// canonical certificates of their rooted subtrees, smaller first.
pub fn word_of_tree(t: &RootedGraph) -> Result<ExtendedWord> {
    let g = t.graph();
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    if g.n() < 3 {
        return Err(Error::NotFullBinary(t.root(), g.degree(t.root())));
    }
    Ok(ExtendedWord { body: subtree_word(t, t.root(), None)? })
}

fn children(t: &RootedGraph, v: usize, parent: Option<usize>) -> Vec<usize> {
    bits(t.graph().neighbors(v)).filter(|&w| Some(w) != parent).collect()
}

fn subtree_word(t: &RootedGraph, v: usize, parent: Option<usize>) -> Result<WordTree> {
    let kids = children(t, v, parent);
    if kids.len() != 2 {
        return Err(Error::NotFullBinary(v, kids.len()));
    }
    let internal: Vec<usize> = kids.iter().copied().filter(|&c| !children(t, c, Some(v)).is_empty()).collect();
    for &c in &kids {
        let k = children(t, c, Some(v)).len();
        if k != 0 && k != 2 {
            return Err(Error::NotFullBinary(c, k));
        }
    }
    match internal.as_slice() {
        [] => Ok(WordTree::End),
        [c] => Ok(WordTree::single(subtree_word(t, *c, Some(v))?)),
        [a, b] => {
            let (ka, kb) = (rooted_subtree(t, *a, v).certificate(), rooted_subtree(t, *b, v).certificate());
            let (first, second) = if kb < ka { (*b, *a) } else { (*a, *b) };
            Ok(WordTree::double(subtree_word(t, first, Some(v))?, subtree_word(t, second, Some(v))?))
        }
        _ => unreachable!("at most two children"),
    }
}

/// The subtree hanging from `v` away from `parent`, rooted at `v`.
fn rooted_subtree(t: &RootedGraph, v: usize, parent: usize) -> RootedGraph {
    let g = t.graph();
    let mut mask = 1u32 << v;
    let mut frontier = mask;
    while frontier != 0 {
        let mut next = 0;
        for u in bits(frontier) {
            next |= g.neighbors(u);
        }
        next &= !mask & !(1 << parent);
        mask |= next;
        frontier = next;
    }
    let root = (mask & ((1u32 << v) - 1)).count_ones() as usize;
    RootedGraph::new(g.induced(mask), root).expect("root inside subtree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_word("ie").unwrap().body, WordTree::End);
        let fig5 = parse_word("iSSD((e)*(Se))").unwrap();
        assert_eq!(
            fig5.body,
            WordTree::single(WordTree::single(WordTree::double(WordTree::End, WordTree::single(WordTree::End))))
        );
        assert_eq!(fig5.to_string(), "iSSD((e)*(Se))");
        assert_eq!(fig5.letters(), 6);
        assert_eq!(parse_word(" i S S D ( ( e ) * ( S e ) ) ").unwrap(), fig5);
        assert_eq!(parse_word_lenient("iSSD((e)⊗(Se))").unwrap(), fig5);
    }

    #[test]
    fn parse_errors() {
        let err = parse_word("iD(e)(e)").unwrap_err();
        assert_eq!(err.position, 3);
        assert_eq!(err.found, Some('e'));
        assert_eq!(parse_word("e").unwrap_err().position, 0);
        assert_eq!(parse_word("iD((e)*(e)").unwrap_err().found, None);
        assert_eq!(parse_word("iee").unwrap_err().expected, vec!["end of input"]);
        assert!(parse_word("iSSD((e)⊗(Se))").is_err());
        assert!(parse_word("").is_err());
        assert!(parse_word("iX").unwrap_err().to_string().contains("'X'"));
    }

    #[test]
    fn word_counts() {
        let counts: Vec<usize> = (1..=5).map(|k| WordTree::all_with_letters(k).len()).collect();
        // S w, plus ordered pairs for D
        assert_eq!(counts, vec![1, 1, 2, 4, 9]);
    }

    #[test]
    fn words_of_trees() {
        let cherry = RootedGraph::new(Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap(), 0).unwrap();
        assert_eq!(word_of_tree(&cherry).unwrap().to_string(), "ie");
        let complete = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(word_of_tree(&RootedGraph::new(complete, 0).unwrap()).unwrap().to_string(), "iD((e)*(e))");
        let p3_end = RootedGraph::new(Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap(), 0).unwrap();
        assert!(matches!(word_of_tree(&p3_end), Err(Error::NotFullBinary(0, 1))));
        let cyc = RootedGraph::new(crate::graph::named::cycle(3), 0).unwrap();
        assert!(matches!(word_of_tree(&cyc), Err(Error::NotATree)));
    }
}
