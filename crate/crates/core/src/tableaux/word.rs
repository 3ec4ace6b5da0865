use std::fmt;

use serde::{Deserialize, Serialize};

use super::alphabet::Letter;
use crate::crystal::{pairing, Direction};
use crate::error::{Error, Result};

/// A word `w_1 … w_r`, identified with `w_1 ⊗ … ⊗ w_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

/// Uncancelled part of the `i`-signature of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    /// Positions of the unmatched `-` letters, left to right.
    pub minus: Vec<usize>,
    /// Positions of the unmatched `+` letters, left to right.
    pub plus: Vec<usize>,
}

impl Signature {
    pub fn epsilon(&self) -> i64 {
        self.minus.len() as i64
    }

    pub fn phi(&self) -> i64 {
        self.plus.len() as i64
    }
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn from_ints(v: &[i32]) -> Word {
        Word(v.iter().map(|&x| Letter(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Cancels adjacent `+ -` pairs (a `+` to the left of a `-`).
    pub fn signature(&self, i: usize) -> Signature {
        signature_of(&self.0, i)
    }

    /// `(ε_i, φ_i)` of the word.
    pub fn stats(&self, i: usize) -> (i64, i64) {
        let s = self.signature(i);
        (s.epsilon(), s.phi())
    }

    pub fn weight(&self, n: usize) -> Vec<i64> {
        let mut wt = vec![0; n];
        for l in &self.0 {
            l.add_weight(&mut wt);
        }
        wt
    }

    /// Position changed by the operator, or `None` if it kills the word.
    pub fn operator_position(&self, i: usize, dir: Direction) -> Option<usize> {
        let s = self.signature(i);
        match dir {
            Direction::Raise => s.minus.last().copied(),
            Direction::Lower => s.plus.first().copied(),
        }
    }

    /// `e_i` / `f_i` by the signature rule, without range checks.
    pub fn apply(&self, i: usize, dir: Direction) -> Option<Word> {
        let pos = self.operator_position(i, dir)?;
        let mut out = self.clone();
        out.0[pos] = match dir {
            Direction::Raise => out.0[pos].raised(),
            Direction::Lower => out.0[pos].lowered(),
        };
        Some(out)
    }

    /// `e_i` / `f_i` for a word over an alphabet of size `n`.
    pub fn apply_checked(&self, n: usize, i: usize, dir: Direction) -> Result<Option<Word>> {
        check_index(n, i)?;
        Ok(self.apply(i, dir))
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

pub(crate) fn signature_of(letters: &[Letter], i: usize) -> Signature {
    let mut minus = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for (pos, l) in letters.iter().enumerate() {
        if l.is_plus(i) {
            plus.push(pos);
        } else if l.is_minus(i) && plus.pop().is_none() {
            minus.push(pos);
        }
    }
    Signature { minus, plus }
}

pub(crate) fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        })
    } else {
        Ok(())
    }
}

/// `⟨wt(w), h_i⟩` straight from the signature counts.
pub fn word_pairing(w: &Word, n: usize, i: usize) -> i64 {
    pairing(&w.weight(n), i)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}
