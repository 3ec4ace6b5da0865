use std::fmt;

use serde::{Deserialize, Serialize};

use super::alphabet::{Alphabet, Letter};
use super::shape::{Partition, SkewShape};
use super::word::{check_index, Word};
use crate::crystal::{pairing, CrystalStats, Direction, Ext};
use crate::error::{Error, Result};

/// A semistandard filling of a (possibly rotated) skew shape.
///
/// `rows` are listed in display order, top to bottom, each left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct Tableau {
    shape: SkewShape,
    alphabet: Alphabet,
    rows: Vec<Vec<Letter>>,
}

impl PartialOrd for SkewShape {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SkewShape {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.outer, &self.inner, self.rotated).cmp(&(&other.outer, &other.inner, other.rotated))
    }
}

impl PartialOrd for Alphabet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Alphabet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.is_barred(), self.n).cmp(&(other.is_barred(), other.n))
    }
}

impl Tableau {
    /// Validates row lengths, alphabet membership and semistandardness.
    pub fn new(shape: SkewShape, alphabet: Alphabet, rows: Vec<Vec<Letter>>) -> Result<Tableau> {
        let t = Tableau {
            shape,
            alphabet,
            rows,
        };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(
        shape: SkewShape,
        alphabet: Alphabet,
        rows: Vec<Vec<Letter>>,
    ) -> Tableau {
        let t = Tableau {
            shape,
            alphabet,
            rows,
        };
        debug_assert!(t.validate().is_ok(), "{:?}", t.validate());
        t
    }

    /// Normal straight-shape tableau from integer rows (barred letters negative).
    pub fn from_rows(alphabet: Alphabet, rows: &[&[i32]]) -> Result<Tableau> {
        let parts = rows.iter().map(|r| r.len() as u32).collect();
        let shape = SkewShape::normal(Partition::new(parts)?);
        Tableau::new(shape, alphabet, to_letters(rows))
    }

    /// Rotated straight-shape tableau from integer rows in display order.
    pub fn rotated_from_rows(alphabet: Alphabet, rows: &[&[i32]]) -> Result<Tableau> {
        let mut parts: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        parts.reverse();
        let shape = SkewShape::rotated(Partition::new(parts)?);
        Tableau::new(shape, alphabet, to_letters(rows))
    }

    pub fn empty(alphabet: Alphabet, rotated: bool) -> Tableau {
        let shape = SkewShape {
            outer: Partition::empty(),
            inner: Partition::empty(),
            rotated,
        };
        Tableau {
            shape,
            alphabet,
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn is_rotated(&self) -> bool {
        self.shape.rotated
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn validate(&self) -> Result<()> {
        if self.rows.len() != self.shape.rows() {
            return Err(Error::InvalidShape(format!(
                "{} rows given for a shape with {} rows",
                self.rows.len(),
                self.shape.rows()
            )));
        }
        for (k, row) in self.rows.iter().enumerate() {
            if row.len() != self.shape.row_len(k) {
                return Err(Error::InvalidShape(format!(
                    "row {} has {} entries, shape needs {}",
                    k + 1,
                    row.len(),
                    self.shape.row_len(k)
                )));
            }
            for &l in row {
                self.alphabet.check(l)?;
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::NotSemistandard(format!("row {} decreases", k + 1)));
            }
        }
        for k in 1..self.rows.len() {
            let (s_up, s_dn) = (self.shape.row_start(k - 1), self.shape.row_start(k));
            for (c, &below) in self.rows[k].iter().enumerate() {
                let col = s_dn + c as i64;
                let idx = col - s_up;
                if idx >= 0 && (idx as usize) < self.rows[k - 1].len() {
                    let above = self.rows[k - 1][idx as usize];
                    if above >= below {
                        return Err(Error::NotSemistandard(format!(
                            "column {} does not strictly increase at rows {}-{}",
                            col + 1,
                            k,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> Word {
        Word(
            self.rows
                .iter()
                .flat_map(|r| r.iter().rev().copied())
                .collect(),
        )
    }

    fn word_position(&self, pos: usize) -> (usize, usize) {
        let mut rem = pos;
        for (k, row) in self.rows.iter().enumerate() {
            if rem < row.len() {
                return (k, row.len() - 1 - rem);
            }
            rem -= row.len();
        }
        unreachable!("position past the end of the reading word")
    }

    pub fn weight(&self) -> Vec<i64> {
        self.reading_word().weight(self.alphabet.n as usize)
    }

    pub fn epsilon(&self, i: usize) -> i64 {
        self.reading_word().signature(i).epsilon()
    }

    pub fn phi(&self, i: usize) -> i64 {
        self.reading_word().signature(i).phi()
    }

    pub fn stats(&self) -> CrystalStats {
        let n = self.alphabet.n as usize;
        let w = self.reading_word();
        let (eps, phi) = (1..n)
            .map(|i| {
                let s = w.signature(i);
                (Ext::Fin(s.epsilon()), Ext::Fin(s.phi()))
            })
            .unzip();
        CrystalStats {
            wt: w.weight(n),
            eps,
            phi,
        }
    }

    /// `e_i` / `f_i` through the reading word; the letter changes in place.
    pub fn apply(&self, i: usize, dir: Direction) -> Option<Tableau> {
        let pos = self.reading_word().operator_position(i, dir)?;
        let (k, c) = self.word_position(pos);
        let mut out = self.clone();
        out.rows[k][c] = match dir {
            Direction::Raise => out.rows[k][c].raised(),
            Direction::Lower => out.rows[k][c].lowered(),
        };
        debug_assert!(out.validate().is_ok());
        Some(out)
    }

    pub fn apply_checked(&self, i: usize, dir: Direction) -> Result<Option<Tableau>> {
        check_index(self.alphabet.n as usize, i)?;
        Ok(self.apply(i, dir))
    }

    /// `⟨wt, h_i⟩`.
    pub fn pairing(&self, i: usize) -> i64 {
        pairing(&self.weight(), i)
    }

    /// The highest weight element of `SST(λ)`: row `k` filled with the `k`-th
    /// smallest letter.
    pub fn highest_weight(alphabet: Alphabet, lambda: &Partition) -> Result<Tableau> {
        if lambda.length() > alphabet.n as usize {
            return Err(Error::InvalidShape(format!(
                "{:?} has more than {} rows",
                lambda.parts(),
                alphabet.n
            )));
        }
        let letters = alphabet.letters();
        let rows = (0..lambda.rows())
            .map(|k| vec![letters.get(k).copied().unwrap_or(letters[0]); lambda.part(k) as usize])
            .collect();
        Tableau::new(SkewShape::normal(lambda.clone()), alphabet, rows)
    }

    /// Every semistandard tableau of normal shape `λ` over `alphabet`, by
    /// direct cell-by-cell enumeration.
    pub fn all_semistandard(alphabet: Alphabet, lambda: &Partition) -> Vec<Tableau> {
        let letters = alphabet.letters();
        let shape = SkewShape::normal(lambda.clone());
        let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); lambda.rows()];
        let cells: Vec<(usize, usize)> = (0..lambda.rows())
            .flat_map(|k| (0..lambda.part(k) as usize).map(move |c| (k, c)))
            .collect();
        let mut out = Vec::new();
        fn go(
            idx: usize,
            cells: &[(usize, usize)],
            letters: &[Letter],
            rows: &mut Vec<Vec<Letter>>,
            out: &mut Vec<Tableau>,
            shape: &SkewShape,
            alphabet: Alphabet,
        ) {
            if idx == cells.len() {
                out.push(Tableau::new_unchecked(
                    shape.clone(),
                    alphabet,
                    rows.clone(),
                ));
                return;
            }
            let (k, c) = cells[idx];
            for &l in letters {
                if c > 0 && rows[k][c - 1] > l {
                    continue;
                }
                if k > 0 && rows[k - 1][c] >= l {
                    continue;
                }
                rows[k].push(l);
                go(idx + 1, cells, letters, rows, out, shape, alphabet);
                rows[k].pop();
            }
        }
        go(0, &cells, &letters, &mut rows, &mut out, &shape, alphabet);
        out
    }

    /// Rotated tableaux as normal tableaux: rotate by 180° and apply the
    /// order-reversing bijection `x ↦ -x` to the letters. Rows are returned in
    /// partition order, each left to right, as raw integers.
    pub(crate) fn flipped_rows(&self) -> Vec<Vec<i32>> {
        debug_assert!(self.is_rotated());
        self.rows
            .iter()
            .rev()
            .map(|r| r.iter().rev().map(|l| -l.0).collect())
            .collect()
    }

    /// Inverse of [`Tableau::flipped_rows`] for straight shapes. Empty trailing
    /// rows are dropped.
    pub(crate) fn from_flipped_rows(alphabet: Alphabet, flipped: &[Vec<i32>]) -> Tableau {
        let keep = flipped.iter().take_while(|r| !r.is_empty()).count();
        let flipped = &flipped[..keep];
        let parts = flipped.iter().map(|r| r.len() as u32).collect();
        let shape = SkewShape::rotated(
            Partition::new(parts).expect("rows of a tableau are weakly decreasing"),
        );
        let rows = flipped
            .iter()
            .rev()
            .map(|r| r.iter().rev().map(|&x| Letter(-x)).collect())
            .collect();
        Tableau::new_unchecked(shape, alphabet, rows)
    }

    /// Display row `k` read as a row of the normal shape's partition index.
    pub fn row_of_partition_row(&self, p: usize) -> &[Letter] {
        let k = if self.is_rotated() {
            self.shape.rows() - 1 - p
        } else {
            p
        };
        &self.rows[k]
    }

    /// Count of letter `l` in partition row `p` (zero for missing rows).
    pub fn count_in_row(&self, p: usize, l: Letter) -> u32 {
        if p >= self.shape.rows() {
            return 0;
        }
        self.row_of_partition_row(p)
            .iter()
            .filter(|&&x| x == l)
            .count() as u32
    }
}

fn to_letters(rows: &[&[i32]]) -> Vec<Vec<Letter>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Letter(x)).collect())
        .collect()
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// Wire form shared by every command: barred letters as negative integers.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauJson {
    pub alphabet: Alphabet,
    pub outer: Vec<u32>,
    #[serde(default)]
    pub inner: Vec<u32>,
    #[serde(default)]
    pub rotated: bool,
    pub rows: Vec<Vec<i32>>,
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;

    fn try_from(j: TableauJson) -> Result<Tableau> {
        let shape = SkewShape::new(
            Partition::new(j.outer)?,
            Partition::new(j.inner)?,
            j.rotated,
        )?;
        let rows = j
            .rows
            .into_iter()
            .map(|r| r.into_iter().map(Letter).collect())
            .collect();
        Tableau::new(shape, j.alphabet, rows)
    }
}

impl From<Tableau> for TableauJson {
    fn from(t: Tableau) -> TableauJson {
        TableauJson {
            alphabet: t.alphabet,
            outer: t.shape.outer.parts().to_vec(),
            inner: t.shape.inner.trimmed().parts().to_vec(),
            rotated: t.shape.rotated,
            rows: t
                .rows
                .into_iter()
                .map(|r| r.into_iter().map(|l| l.0).collect())
                .collect(),
        }
    }
}
