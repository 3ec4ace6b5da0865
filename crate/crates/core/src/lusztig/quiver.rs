use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The type `A_{n-1}` quiver `1 → … → r ← … ← n-1` with a single sink `r`.
///
/// `r = 1` is the orientation with every arrow pointing left (`Ω^+`), and
/// `r = n - 1` the one with every arrow pointing right (`Ω^-`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    pub n: usize,
    pub sink: usize,
}

/// A positive root `ε_i - ε_j` with `i < j`.
pub type Root = (usize, usize);

impl Quiver {
    pub fn new(n: usize, sink: usize) -> Result<Quiver> {
        if n < 2 {
            return Err(Error::InvalidQuiver(format!("need n ≥ 2, got {n}")));
        }
        if sink == 0 || sink >= n {
            return Err(Error::InvalidQuiver(format!(
                "sink {sink} outside 1..={}",
                n - 1
            )));
        }
        Ok(Quiver { n, sink })
    }

    pub fn plus(n: usize) -> Result<Quiver> {
        Quiver::new(n, 1)
    }

    pub fn minus(n: usize) -> Result<Quiver> {
        Quiver::new(n, n.saturating_sub(1))
    }

    /// `|Φ^+| = n(n-1)/2`.
    pub fn num_roots(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn rank(&self) -> usize {
        self.n - 1
    }

    /// All positive roots in lexicographic order.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        let n = self.n;
        (1..n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
    }

    /// The image under the diagram automorphism `k ↦ n - k`.
    pub fn reflected(&self) -> Quiver {
        Quiver {
            n: self.n,
            sink: self.n - self.sink,
        }
    }

    /// Arrow between `k` and `k + 1` (`1 ≤ k ≤ n-2`) points towards `k + 1`.
    fn points_right(&self, k: usize) -> bool {
        k < self.sink
    }

    /// A reduced word of `w_0` adapted to the quiver: a sink of the quiver
    /// followed by an adapted word for the quiver reflected at that sink.
    ///
    /// The smallest admissible sink is taken first, backtracking if the word
    /// would stop being reduced.
    pub fn adapted_word(&self) -> Vec<usize> {
        let n = self.n;
        let right: Vec<bool> = (1..n.saturating_sub(1))
            .map(|k| self.points_right(k))
            .collect();
        let perm: Vec<usize> = (1..=n).collect();
        let mut word = Vec::with_capacity(self.num_roots());
        let found = search(
            n,
            &mut right.clone(),
            &mut perm.clone(),
            &mut word,
            self.num_roots(),
        );
        assert!(found, "every Dynkin quiver admits an adapted reduced word");
        word
    }

    /// Checks that `word` is a reduced word of `w_0` adapted to the quiver.
    pub fn validate_word(&self, word: &[usize]) -> Result<()> {
        let n = self.n;
        let fail = |reason: String| Error::NotAdapted {
            word: word.to_vec(),
            reason,
        };
        if word.len() != self.num_roots() {
            return Err(fail(format!(
                "length {} instead of {}",
                word.len(),
                self.num_roots()
            )));
        }
        let mut right: Vec<bool> = (1..n - 1).map(|k| self.points_right(k)).collect();
        let mut perm: Vec<usize> = (1..=n).collect();
        for (pos, &v) in word.iter().enumerate() {
            if v == 0 || v >= n {
                return Err(fail(format!(
                    "letter {v} at position {} is not a vertex",
                    pos + 1
                )));
            }
            if !is_sink(&right, v) {
                return Err(fail(format!(
                    "letter {v} at position {} is not a sink",
                    pos + 1
                )));
            }
            if perm[v - 1] > perm[v] {
                return Err(fail(format!("not reduced at position {}", pos + 1)));
            }
            reflect_at(&mut right, v);
            perm.swap(v - 1, v);
        }
        Ok(())
    }

    /// The convex order `β_k = s_{i_1} ⋯ s_{i_{k-1}}(α_{i_k})` on `Φ^+`.
    pub fn root_order(&self, word: &[usize]) -> Vec<Root> {
        let mut perm: Vec<usize> = (1..=self.n).collect();
        word.iter()
            .map(|&v| {
                let (a, b) = (perm[v - 1], perm[v]);
                perm.swap(v - 1, v);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// `J_1 = {1, …, r-1}`.
    pub fn j1(&self) -> std::ops::Range<usize> {
        1..self.sink
    }

    /// `J_2 = {r+1, …, n-1}`.
    pub fn j2(&self) -> std::ops::Range<usize> {
        self.sink + 1..self.n
    }
}

// right[k-1]: arrow between k and k+1 points to k+1
fn is_sink(right: &[bool], v: usize) -> bool {
    let from_left = v < 2 || right[v - 2];
    let from_right = v > right.len() || !right[v - 1];
    from_left && from_right
}

fn reflect_at(right: &mut [bool], v: usize) {
    if v >= 2 {
        right[v - 2] = !right[v - 2];
    }
    if v <= right.len() {
        right[v - 1] = !right[v - 1];
    }
}

fn search(
    n: usize,
    right: &mut Vec<bool>,
    perm: &mut Vec<usize>,
    word: &mut Vec<usize>,
    len: usize,
) -> bool {
    if word.len() == len {
        return true;
    }
    for v in 1..n {
        if !is_sink(right, v) || perm[v - 1] > perm[v] {
            continue;
        }
        reflect_at(right, v);
        perm.swap(v - 1, v);
        word.push(v);
        if search(n, right, perm, word, len) {
            return true;
        }
        word.pop();
        perm.swap(v - 1, v);
        reflect_at(right, v);
    }
    false
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.n, self.sink)
    }
}

impl FromStr for Quiver {
    type Err = Error;

    /// Parses `"n,r"`.
    fn from_str(s: &str) -> Result<Quiver> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Malformed(format!("quiver {s:?} is not of the form n,r")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Malformed(format!("quiver {s:?}: {e}")))
        };
        Quiver::new(parse(a)?, parse(b)?)
    }
}
