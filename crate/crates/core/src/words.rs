//! Finite words, alphabets and the brute-force oracles used to cross-check
//! every closed formula in the crate.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::ops::{Deref, Index, Range};
use std::slice::SliceIndex;

use num_rational::Ratio;

use crate::{Error, Result};

/// An opaque letter id. Names live in an [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, x: Letter) {
        self.0.push(x);
    }

    pub fn factor(&self, range: Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn count(&self, x: Letter) -> usize {
        self.0.iter().filter(|&&y| y == x).count()
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl<I: SliceIndex<[Letter]>> Index<I> for Word {
    type Output = I::Output;

    fn index(&self, i: I) -> &I::Output {
        &self.0[i]
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl From<&[Letter]> for Word {
    fn from(s: &[Letter]) -> Self {
        Word(s.to_vec())
    }
}

/// Letter names, interned to ids `0..len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut alphabet = Alphabet {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            let name = name.into();
            if alphabet.index.contains_key(&name) {
                return Err(Error::DuplicateLetter(name));
            }
            alphabet.intern(name);
        }
        Ok(alphabet)
    }

    /// One letter per character, e.g. `Alphabet::from_chars("ab")`.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Alphabet::new(chars.chars().map(String::from))
    }

    fn intern(&mut self, name: String) -> Letter {
        if let Some(&x) = self.index.get(&name) {
            return x;
        }
        let x = Letter(self.names.len() as u16);
        self.index.insert(name.clone(), x);
        self.names.push(name);
        x
    }

    /// Splits `text` into letter names and builds the alphabet in order of
    /// first appearance.
    pub fn infer(text: &str) -> Result<(Alphabet, Word)> {
        let mut alphabet = Alphabet {
            names: Vec::new(),
            index: HashMap::new(),
        };
        let word = split_names(text)?
            .into_iter()
            .map(|name| alphabet.intern(name))
            .collect();
        Ok((alphabet, word))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len()).map(|i| Letter(i as u16))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    pub fn name(&self, x: Letter) -> &str {
        &self.names[x.0 as usize]
    }

    pub fn contains(&self, x: Letter) -> bool {
        (x.0 as usize) < self.names.len()
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        split_names(text)?
            .into_iter()
            .map(|name| self.letter(&name).ok_or(Error::UnknownLetter(name)))
            .collect()
    }

    fn separator(&self) -> &'static str {
        if self.names.iter().all(|n| n.chars().count() == 1) {
            ""
        } else {
            ","
        }
    }

    pub fn render(&self, w: &[Letter]) -> String {
        let names: Vec<&str> = w.iter().map(|&x| self.name(x)).collect();
        names.join(self.separator())
    }
}

fn split_names(text: &str) -> Result<Vec<String>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    if text.contains(',') {
        text.split(',')
            .map(|s| {
                let s = s.trim();
                if s.is_empty() {
                    Err(Error::UnknownLetter(String::new()))
                } else {
                    Ok(s.to_string())
                }
            })
            .collect()
    } else {
        Ok(text.chars().map(String::from).collect())
    }
}

/// Letter counts of a word.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParikhVector(BTreeMap<Letter, usize>);

impl ParikhVector {
    pub fn get(&self, x: Letter) -> usize {
        self.0.get(&x).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn counts(&self) -> &BTreeMap<Letter, usize> {
        &self.0
    }
}

impl std::ops::Add for &ParikhVector {
    type Output = ParikhVector;

    fn add(self, other: &ParikhVector) -> ParikhVector {
        let mut out = self.0.clone();
        for (&x, &c) in &other.0 {
            *out.entry(x).or_insert(0) += c;
        }
        ParikhVector(out)
    }
}

pub fn parikh(w: &[Letter]) -> ParikhVector {
    let mut counts = BTreeMap::new();
    for &x in w {
        *counts.entry(x).or_insert(0) += 1;
    }
    ParikhVector(counts)
}

/// Every start position of `w` in `text`, overlaps included.
pub fn occurrences(w: &[Letter], text: &[Letter]) -> Vec<usize> {
    if w.is_empty() || w.len() > text.len() {
        return Vec::new();
    }
    text.windows(w.len())
        .enumerate()
        .filter(|(_, win)| *win == w)
        .map(|(i, _)| i)
        .collect()
}

/// Return words to `w` seen in `text`: the segments between consecutive
/// occurrences.
pub fn return_words_bruteforce(w: &[Letter], text: &[Letter]) -> Result<BTreeSet<Word>> {
    let occ = occurrences(w, text);
    if occ.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "{} occurrence(s), need at least 2",
            occ.len()
        )));
    }
    Ok(occ.windows(2).map(|p| Word::from(&text[p[0]..p[1]])).collect())
}

/// A factor `witness` of the form `root^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalPower {
    pub root: Word,
    pub exponent: Ratio<u64>,
    pub witness: Word,
    pub start: usize,
}

/// Largest exponent of a factor of `text` with root length at most
/// `max_root_len`. For each root length `p` this walks the runs of
/// `text[i] == text[i + p]`; a run of `r` matches starting at `i` is the
/// factor `text[i..i + r + p]` of period `p`. Ties keep the shortest root.
///
/// Returns `None` for empty text.
pub fn max_fractional_power(text: &[Letter], max_root_len: usize) -> Option<FractionalPower> {
    let n = text.len();
    if n == 0 {
        return None;
    }
    // (length, period, start)
    let mut best = (1usize, 1usize, 0usize);
    let better = |len: usize, p: usize, best: &(usize, usize, usize)| {
        (len as u128) * (best.1 as u128) > (best.0 as u128) * (p as u128)
    };
    for p in 1..=max_root_len.min(n) {
        let mut run = 0usize;
        for (i, (x, y)) in text.iter().zip(&text[p..]).enumerate() {
            if x == y {
                run += 1;
            } else {
                if run > 0 && better(run + p, p, &best) {
                    best = (run + p, p, i - run);
                }
                run = 0;
            }
        }
        if run > 0 && better(run + p, p, &best) {
            best = (run + p, p, n - p - run);
        }
    }
    let (len, p, start) = best;
    Some(FractionalPower {
        root: Word::from(&text[start..start + p]),
        exponent: Ratio::new(len as u64, p as u64),
        witness: Word::from(&text[start..start + len]),
        start,
    })
}

/// Distinct factors of length `n`.
pub fn factors(text: &[Letter], n: usize) -> HashSet<&[Letter]> {
    if n > text.len() {
        return HashSet::new();
    }
    text.windows(n.max(1))
        .map(|w| &w[..n])
        .chain(std::iter::once(&text[..0]).filter(|_| n == 0))
        .collect()
}

/// Left and right extensions of each factor of length `n`, observed at
/// positions with a letter on both sides.
fn extensions(text: &[Letter], n: usize) -> HashMap<&[Letter], (BTreeSet<Letter>, BTreeSet<Letter>)> {
    let mut map: HashMap<&[Letter], (BTreeSet<Letter>, BTreeSet<Letter>)> = HashMap::new();
    if text.len() < n + 2 {
        return map;
    }
    for i in 1..text.len() - n {
        let e = map.entry(&text[i..i + n]).or_default();
        e.0.insert(text[i - 1]);
        e.1.insert(text[i + n]);
    }
    map
}

/// Factors of length at most `max_len` with at least two left and two right
/// extensions, sorted by length and then lexicographically.
pub fn bispecials_bruteforce(text: &[Letter], max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for n in 0..=max_len {
        let mut level: Vec<Word> = extensions(text, n)
            .into_iter()
            .filter(|(_, (l, r))| l.len() >= 2 && r.len() >= 2)
            .map(|(w, _)| Word::from(w))
            .collect();
        level.sort();
        out.extend(level);
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtensionGraph {
    pub left: BTreeSet<Letter>,
    pub right: BTreeSet<Letter>,
    pub edges: BTreeSet<(Letter, Letter)>,
}

impl ExtensionGraph {
    /// Connected and acyclic, as a bipartite graph.
    pub fn is_tree(&self) -> bool {
        let vertices = self.left.len() + self.right.len();
        if vertices == 0 || self.edges.len() + 1 != vertices {
            return false;
        }
        // union-find over left letters (as is) and right letters (offset)
        let left: Vec<Letter> = self.left.iter().copied().collect();
        let right: Vec<Letter> = self.right.iter().copied().collect();
        let mut parent: Vec<usize> = (0..vertices).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = vertices;
        for &(l, r) in &self.edges {
            let (Ok(i), Ok(j)) = (left.binary_search(&l), right.binary_search(&r)) else {
                return false;
            };
            let (a, b) = (find(&mut parent, i), find(&mut parent, left.len() + j));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    }
}

/// Extension graph of `w` over the two-sided occurrences in `text`.
pub fn extension_graph(w: &[Letter], text: &[Letter]) -> ExtensionGraph {
    let mut g = ExtensionGraph::default();
    let n = w.len();
    if text.len() < n + 2 {
        return g;
    }
    for i in 1..text.len() - n {
        if &text[i..i + n] == w {
            let (l, r) = (text[i - 1], text[i + n]);
            g.left.insert(l);
            g.right.insert(r);
            g.edges.insert((l, r));
        }
    }
    g
}

/// `w` is balanced: per-letter counts of equal-length factors (up to
/// `max_window`) differ by at most one.
pub fn is_balanced(text: &[Letter], max_window: usize) -> bool {
    let letters: BTreeSet<Letter> = text.iter().copied().collect();
    for &x in &letters {
        let mut prefix = Vec::with_capacity(text.len() + 1);
        prefix.push(0usize);
        for &y in text {
            prefix.push(prefix.last().unwrap() + usize::from(y == x));
        }
        for n in 1..=max_window.min(text.len()) {
            let (mut lo, mut hi) = (usize::MAX, 0);
            for i in 0..=text.len() - n {
                let c = prefix[i + n] - prefix[i];
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if hi - lo > 1 {
                return false;
            }
        }
    }
    true
}
