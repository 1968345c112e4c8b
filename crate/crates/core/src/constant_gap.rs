//! Constant gap sequences: periodic sequences in which every letter recurs at
//! a fixed distance.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_integer::Integer;

use crate::words::{Alphabet, Letter, Word};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantGapSeq {
    alphabet: Alphabet,
    period_word: Word,
    letter_gaps: BTreeMap<Letter, usize>,
    beta: usize,
    /// `gap_sets[n]` for `n <= per`.
    gap_sets: Vec<BTreeSet<usize>>,
}

impl ConstantGapSeq {
    /// Parses one period, e.g. `"0102"` or `"x,y,x,z"`.
    pub fn parse(text: &str) -> Result<Self> {
        let (alphabet, word) = Alphabet::infer(text)?;
        ConstantGapSeq::validate(alphabet, word)
    }

    pub fn validate(alphabet: Alphabet, word: Word) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = word.len();
        let per = (1..=n)
            .find(|&p| n % p == 0 && (0..n).all(|i| word[i] == word[i % p]))
            .unwrap_or(n);
        let period_word = word.factor(0..per);

        let mut letter_gaps = BTreeMap::new();
        for x in alphabet.letters() {
            let pos: Vec<usize> = (0..per).filter(|&i| period_word[i] == x).collect();
            let Some(&first) = pos.first() else { continue };
            let gaps = pos
                .windows(2)
                .map(|w| w[1] - w[0])
                .chain(std::iter::once(first + per - pos[pos.len() - 1]));
            let mut seen: Option<usize> = None;
            for g in gaps {
                match seen {
                    Some(s) if s != g => {
                        return Err(Error::NotConstantGap {
                            letter: alphabet.name(x).to_string(),
                            first: s,
                            second: g,
                        })
                    }
                    _ => seen = Some(g),
                }
            }
            letter_gaps.insert(x, seen.expect("letter occurs"));
        }

        let mut seq = ConstantGapSeq {
            alphabet,
            period_word,
            letter_gaps,
            beta: 0,
            gap_sets: Vec::new(),
        };
        seq.beta = seq.scan_beta();
        seq.gap_sets = (0..=per)
            .map(|len| {
                seq.cyclic_factors(len)
                    .iter()
                    .map(|u| seq.lcm_of_gaps(u))
                    .collect()
            })
            .collect();
        Ok(seq)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn period_word(&self) -> &Word {
        &self.period_word
    }

    pub fn per(&self) -> usize {
        self.period_word.len()
    }

    pub fn letter_gaps(&self) -> &BTreeMap<Letter, usize> {
        &self.letter_gaps
    }

    pub fn letter_gap(&self, x: Letter) -> Option<usize> {
        self.letter_gaps.get(&x).copied()
    }

    /// Length of the longest bispecial factor; 0 for a one-letter sequence.
    pub fn beta(&self) -> usize {
        self.beta
    }

    /// The letter at position `i` of the bi-infinite periodic sequence.
    pub fn at(&self, i: usize) -> Letter {
        self.period_word[i % self.per()]
    }

    fn cyclic_factor(&self, start: usize, len: usize) -> Word {
        (start..start + len).map(|i| self.at(i)).collect()
    }

    fn cyclic_factors(&self, len: usize) -> BTreeSet<Word> {
        (0..self.per()).map(|i| self.cyclic_factor(i, len)).collect()
    }

    fn scan_beta(&self) -> usize {
        if self.letter_gaps.len() < 2 {
            return 0;
        }
        let per = self.per();
        let mut beta = 0;
        for len in 0..=per {
            let mut ext: HashMap<Word, (BTreeSet<Letter>, BTreeSet<Letter>)> = HashMap::new();
            for i in 0..per {
                let e = ext.entry(self.cyclic_factor(i + per, len)).or_default();
                e.0.insert(self.at(i + per - 1));
                e.1.insert(self.at(i + per + len));
            }
            if ext.values().any(|(l, r)| l.len() >= 2 && r.len() >= 2) {
                beta = len;
            }
        }
        beta
    }

    fn lcm_of_gaps(&self, u: &[Letter]) -> usize {
        u.iter()
            .map(|x| self.letter_gaps[x])
            .fold(1, |acc, g| acc.lcm(&g))
    }

    pub fn is_factor(&self, u: &[Letter]) -> bool {
        (0..self.per()).any(|i| (0..u.len()).all(|j| self.at(i + j) == u[j]))
    }

    /// `lcm` of the gaps of the letters of `u`; 1 for the empty word.
    pub fn gap_of_factor(&self, u: &[Letter]) -> Result<usize> {
        if !self.is_factor(u) {
            return Err(Error::NotAFactor(self.alphabet.render(u)));
        }
        Ok(self.lcm_of_gaps(u))
    }

    /// Gaps of all factors of length `n`.
    pub fn gap_set(&self, n: usize) -> BTreeSet<usize> {
        match self.gap_sets.get(n) {
            Some(s) => s.clone(),
            None => BTreeSet::from([self.per()]),
        }
    }

    /// The period rotated left by `shift`.
    pub fn rotated(&self, shift: usize) -> Word {
        self.cyclic_factor(shift, self.per())
    }

    pub fn render(&self) -> String {
        self.alphabet.render(&self.period_word)
    }
}
