use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter of `[n]` or `[n̄]`.
///
/// The unbarred letter `k` is stored as `k`, the barred letter `k̄` as `-k`.
/// With that encoding the integer order is the alphabet order in both cases:
/// `1 < 2 < … < n` and `n̄ < … < 2̄ < 1̄` (that is, `-n < … < -1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub i32);

impl Letter {
    pub fn unbarred(k: u32) -> Letter {
        Letter(k as i32)
    }

    pub fn barred(k: u32) -> Letter {
        Letter(-(k as i32))
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// `k` for both `k` and `k̄`.
    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    /// `wt(k) = ε_k`, `wt(k̄) = -ε_k`, added into `wt`.
    pub fn add_weight(self, wt: &mut [i64]) {
        let k = self.index() as usize;
        wt[k - 1] += if self.is_barred() { -1 } else { 1 };
    }

    /// Contributes a `+` to the `i`-signature (`φ_i = 1`): `i` or `(i+1)̄`.
    pub(crate) fn is_plus(self, i: usize) -> bool {
        let i = i as i32;
        self.0 == i || self.0 == -(i + 1)
    }

    /// Contributes a `-` to the `i`-signature (`ε_i = 1`): `i+1` or `ī`.
    pub(crate) fn is_minus(self, i: usize) -> bool {
        let i = i as i32;
        self.0 == i + 1 || self.0 == -i
    }

    /// `f_i` on a `+` letter: `i ↦ i+1`, `(i+1)̄ ↦ ī`.
    pub(crate) fn lowered(self) -> Letter {
        Letter(self.0 + 1)
    }

    /// `e_i` on a `-` letter: `i+1 ↦ i`, `ī ↦ (i+1)̄`.
    pub(crate) fn raised(self) -> Letter {
        Letter(self.0 - 1)
    }

    /// The order-reversing bijection `x ↦ -x` (exchanges `k` and `k̄`).
    pub fn flipped(self) -> Letter {
        Letter(-self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_barred() {
            write!(f, "{}\u{0304}", self.index())
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlphabetKind {
    Unbarred,
    Barred,
}

/// `[n]` or `[n̄]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    pub kind: AlphabetKind,
    pub n: u32,
}

impl Alphabet {
    pub fn unbarred(n: u32) -> Alphabet {
        Alphabet {
            kind: AlphabetKind::Unbarred,
            n,
        }
    }

    pub fn barred(n: u32) -> Alphabet {
        Alphabet {
            kind: AlphabetKind::Barred,
            n,
        }
    }

    pub fn is_barred(&self) -> bool {
        self.kind == AlphabetKind::Barred
    }

    /// The alphabet with the bar exchanged, `[n] ↔ [n̄]`.
    pub fn dual(&self) -> Alphabet {
        match self.kind {
            AlphabetKind::Unbarred => Alphabet::barred(self.n),
            AlphabetKind::Barred => Alphabet::unbarred(self.n),
        }
    }

    pub fn letter(&self, k: u32) -> Letter {
        match self.kind {
            AlphabetKind::Unbarred => Letter::unbarred(k),
            AlphabetKind::Barred => Letter::barred(k),
        }
    }

    pub fn contains(&self, l: Letter) -> bool {
        l.is_barred() == self.is_barred() && (1..=self.n).contains(&l.index())
    }

    pub fn check(&self, l: Letter) -> Result<()> {
        if self.contains(l) {
            Ok(())
        } else {
            Err(Error::LetterOutOfAlphabet {
                letter: l.0,
                alphabet: self.to_string(),
            })
        }
    }

    /// All letters in increasing alphabet order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut v: Vec<Letter> = (1..=self.n).map(|k| self.letter(k)).collect();
        v.sort();
        v
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AlphabetKind::Unbarred => write!(f, "[{}]", self.n),
            AlphabetKind::Barred => write!(f, "[{}\u{0304}]", self.n),
        }
    }
}
