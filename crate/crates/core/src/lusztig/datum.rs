use std::fmt;

use serde::{Deserialize, Serialize};

use super::quiver::{Quiver, Root};
use crate::crystal::pairing;
use crate::error::{Error, Result};

/// A Lusztig datum `c = (c_ij)` on a single-sink quiver, keyed by positive
/// root `ε_i - ε_j` rather than by word position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DatumJson", into = "DatumJson")]
pub struct LusztigDatum {
    quiver: Quiver,
    c: Vec<u32>,
}

impl PartialOrd for Quiver {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Quiver {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.sink).cmp(&(other.n, other.sink))
    }
}

// index of (i, j) in the lexicographic list of roots
fn slot(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n, "root ({i}, {j}) for n = {n}");
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

impl LusztigDatum {
    pub fn zero(quiver: Quiver) -> LusztigDatum {
        LusztigDatum {
            quiver,
            c: vec![0; quiver.num_roots()],
        }
    }

    pub fn from_entries(quiver: Quiver, entries: &[(usize, usize, u32)]) -> Result<LusztigDatum> {
        let mut d = LusztigDatum::zero(quiver);
        for &(i, j, k) in entries {
            if !(1 <= i && i < j && j <= quiver.n) {
                return Err(Error::Malformed(format!(
                    "({i}, {j}) is not a positive root for n = {}",
                    quiver.n
                )));
            }
            d.c[slot(quiver.n, i, j)] += k;
        }
        Ok(d)
    }

    /// Coordinates in lexicographic root order.
    pub fn from_vec(quiver: Quiver, c: Vec<u32>) -> Result<LusztigDatum> {
        if c.len() != quiver.num_roots() {
            return Err(Error::Malformed(format!(
                "{} coordinates for {} roots",
                c.len(),
                quiver.num_roots()
            )));
        }
        Ok(LusztigDatum { quiver, c })
    }

    pub fn quiver(&self) -> Quiver {
        self.quiver
    }

    pub fn n(&self) -> usize {
        self.quiver.n
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.c
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.c[slot(self.quiver.n, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        let n = self.quiver.n;
        self.c[slot(n, i, j)] = v;
    }

    pub(crate) fn inc(&mut self, i: usize, j: usize) {
        let n = self.quiver.n;
        self.c[slot(n, i, j)] += 1;
    }

    pub(crate) fn dec(&mut self, i: usize, j: usize) {
        let n = self.quiver.n;
        let s = slot(n, i, j);
        debug_assert!(self.c[s] > 0, "c_{i}{j} would become negative");
        self.c[s] -= 1;
    }

    /// Nonzero coordinates `(i, j, c_ij)` in lexicographic order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.quiver
            .roots()
            .zip(self.c.iter())
            .filter(|(_, &v)| v > 0)
            .map(|((i, j), &v)| (i, j, v))
    }

    pub fn total(&self) -> u32 {
        self.c.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }

    /// `wt(c) = -Σ c_ij (ε_i - ε_j)`.
    pub fn weight(&self) -> Vec<i64> {
        let mut wt = vec![0; self.quiver.n];
        for (i, j, v) in self.nonzero() {
            wt[i - 1] -= v as i64;
            wt[j - 1] += v as i64;
        }
        wt
    }

    pub fn pairing(&self, i: usize) -> i64 {
        pairing(&self.weight(), i)
    }

    /// Coordinates in the order `β_1, …, β_N` of a reduced word.
    pub fn word_coordinates(&self, word: &[usize]) -> Vec<u32> {
        self.quiver
            .root_order(word)
            .into_iter()
            .map(|(i, j)| self.get(i, j))
            .collect()
    }

    /// Same coordinates on a different quiver of the same size.
    pub fn with_quiver(&self, quiver: Quiver) -> Result<LusztigDatum> {
        if quiver.n != self.quiver.n {
            return Err(Error::QuiverMismatch(
                self.quiver.to_string(),
                quiver.to_string(),
            ));
        }
        Ok(LusztigDatum {
            quiver,
            c: self.c.clone(),
        })
    }

    /// Image under `(i, j) ↦ (n+1-j, n+1-i)` on the reflected quiver.
    pub fn reflected(&self) -> LusztigDatum {
        let n = self.quiver.n;
        let mut out = LusztigDatum::zero(self.quiver.reflected());
        for (i, j, v) in self.nonzero() {
            out.set(n + 1 - j, n + 1 - i, v);
        }
        out
    }

    /// Restriction to the given roots, other coordinates set to zero.
    pub fn restricted(&self, keep: impl Fn(Root) -> bool) -> LusztigDatum {
        let mut out = LusztigDatum::zero(self.quiver);
        for (i, j, v) in self.nonzero() {
            if keep((i, j)) {
                out.set(i, j, v);
            }
        }
        out
    }
}

/// Which of the three root blocks of a single-sink quiver contains `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    /// `i ≤ r < j`
    Cross,
    /// `j ≤ r`
    Left,
    /// `r < i`
    Right,
}

pub fn block(q: Quiver, (i, j): Root) -> Block {
    if j <= q.sink {
        Block::Left
    } else if i > q.sink {
        Block::Right
    } else {
        Block::Cross
    }
}

/// `c = c^J ⊗ c_{J_1} ⊗ c_{J_2}`, each part kept on the original quiver.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DatumSplit {
    pub cj: LusztigDatum,
    pub cj1: LusztigDatum,
    pub cj2: LusztigDatum,
}

pub fn split(c: &LusztigDatum) -> DatumSplit {
    let q = c.quiver;
    DatumSplit {
        cj: c.restricted(|r| block(q, r) == Block::Cross),
        cj1: c.restricted(|r| block(q, r) == Block::Left),
        cj2: c.restricted(|r| block(q, r) == Block::Right),
    }
}

pub fn merge(s: &DatumSplit) -> Result<LusztigDatum> {
    let q = s.cj.quiver;
    for part in [&s.cj1, &s.cj2] {
        if part.quiver != q {
            return Err(Error::QuiverMismatch(
                part.quiver.to_string(),
                q.to_string(),
            ));
        }
    }
    let mut out = LusztigDatum::zero(q);
    for (part, want) in [
        (&s.cj, Block::Cross),
        (&s.cj1, Block::Left),
        (&s.cj2, Block::Right),
    ] {
        for (i, j, v) in part.nonzero() {
            if block(q, (i, j)) != want {
                return Err(Error::OverlappingSupport(i, j));
            }
            out.set(i, j, v);
        }
    }
    Ok(out)
}

impl fmt::Display for LusztigDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nonzero()
            .map(|(i, j, v)| format!("c{i},{j}={v}"))
            .collect();
        write!(f, "[{}; {}]", self.quiver, parts.join(" "))
    }
}

/// Wire form: nonzero coordinates only.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatumJson {
    pub n: usize,
    pub sink: usize,
    pub c: Vec<(usize, usize, u32)>,
}

impl TryFrom<DatumJson> for LusztigDatum {
    type Error = Error;

    fn try_from(j: DatumJson) -> Result<LusztigDatum> {
        LusztigDatum::from_entries(Quiver::new(j.n, j.sink)?, &j.c)
    }
}

impl From<LusztigDatum> for DatumJson {
    fn from(d: LusztigDatum) -> DatumJson {
        DatumJson {
            n: d.quiver.n,
            sink: d.quiver.sink,
            c: d.nonzero().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slots_are_dense() {
        for n in 2..8 {
            let q = Quiver::plus(n).unwrap();
            let s: Vec<usize> = q.roots().map(|(i, j)| slot(n, i, j)).collect();
            assert_eq!(s, (0..q.num_roots()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn weight_of_simple_datum() {
        let q = Quiver::new(4, 2).unwrap();
        let d = LusztigDatum::from_entries(q, &[(1, 3, 2), (2, 3, 1)]).unwrap();
        assert_eq!(d.weight(), vec![-2, -1, 3, 0]);
        assert_eq!(d.pairing(2), -4);
    }

    #[test]
    fn split_and_merge() {
        let q = Quiver::new(6, 3).unwrap();
        let d =
            LusztigDatum::from_entries(q, &[(1, 2, 1), (3, 4, 2), (5, 6, 1), (2, 3, 4)]).unwrap();
        let s = split(&d);
        assert_eq!(s.cj.nonzero().collect::<Vec<_>>(), vec![(3, 4, 2)]);
        assert_eq!(s.cj1.total(), 5);
        assert_eq!(s.cj2.nonzero().collect::<Vec<_>>(), vec![(5, 6, 1)]);
        assert_eq!(merge(&s).unwrap(), d);
        let zero = split(&LusztigDatum::zero(q));
        assert!(zero.cj.is_zero() && zero.cj1.is_zero() && zero.cj2.is_zero());
        let bad = DatumSplit { cj: d.clone(), ..s };
        assert_eq!(merge(&bad), Err(Error::OverlappingSupport(1, 2)));
    }

    #[test]
    fn reflection_is_an_involution() {
        let q = Quiver::new(5, 2).unwrap();
        let d = LusztigDatum::from_entries(q, &[(1, 2, 1), (1, 5, 3), (3, 4, 2)]).unwrap();
        let r = d.reflected();
        assert_eq!(r.quiver(), Quiver::new(5, 3).unwrap());
        assert_eq!(r.get(4, 5), 1);
        assert_eq!(r.get(1, 5), 3);
        assert_eq!(r.reflected(), d);
    }

    #[test]
    fn json_lists_nonzero_entries() {
        let q = Quiver::new(3, 1).unwrap();
        let d = LusztigDatum::from_entries(q, &[(1, 3, 2)]).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"n":3,"sink":1,"c":[[1,3,2]]}"#);
        assert_eq!(serde_json::from_str::<LusztigDatum>(&s).unwrap(), d);
        assert!(serde_json::from_str::<LusztigDatum>(r#"{"n":3,"sink":1,"c":[[3,1,2]]}"#).is_err());
    }
}
