//! Biwords, multiplicity matrices and the skew RSK correspondence `κ`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::insertion::{check_rotated_straight, column_insert_raw, column_uninsert_raw};
use crate::tableaux::{Alphabet, Letter, Partition, SkewShape, Tableau, Word};

/// A finitely supported matrix of nonnegative counts indexed by letter pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct BiwordMatrix {
    rows: Alphabet,
    cols: Alphabet,
    entries: BTreeMap<(Letter, Letter), u32>,
}

impl BiwordMatrix {
    pub fn zero(rows: Alphabet, cols: Alphabet) -> BiwordMatrix {
        BiwordMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(
        rows: Alphabet,
        cols: Alphabet,
        entries: impl IntoIterator<Item = (Letter, Letter, u32)>,
    ) -> Result<BiwordMatrix> {
        let mut m = BiwordMatrix::zero(rows, cols);
        for (a, b, k) in entries {
            m.add(a, b, k)?;
        }
        Ok(m)
    }

    pub fn row_alphabet(&self) -> Alphabet {
        self.rows
    }

    pub fn col_alphabet(&self) -> Alphabet {
        self.cols
    }

    pub fn get(&self, a: Letter, b: Letter) -> u32 {
        self.entries.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, a: Letter, b: Letter, k: u32) -> Result<()> {
        self.rows.check(a)?;
        self.cols.check(b)?;
        if k > 0 {
            *self.entries.entry((a, b)).or_insert(0) += k;
        }
        Ok(())
    }

    /// Nonzero entries in increasing `(row, col)` order.
    pub fn entries(&self) -> impl Iterator<Item = (Letter, Letter, u32)> + '_ {
        self.entries.iter().map(|(&(a, b), &k)| (a, b, k))
    }

    pub fn total(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Dense view with the given row and column letter orders.
    pub fn dense(&self, rows: &[Letter], cols: &[Letter]) -> Vec<Vec<u32>> {
        rows.iter()
            .map(|&a| cols.iter().map(|&b| self.get(a, b)).collect())
            .collect()
    }

    /// `wt(M) = Σ m_ab (wt(a) + wt(b))`.
    pub fn weight(&self, n: usize) -> Vec<i64> {
        let mut wt = vec![0; n];
        for (a, b, k) in self.entries() {
            for _ in 0..k {
                a.add_weight(&mut wt);
                b.add_weight(&mut wt);
            }
        }
        wt
    }

    pub fn row_marginal_weight(&self, n: usize) -> Vec<i64> {
        let mut wt = vec![0; n];
        for (a, _, k) in self.entries() {
            for _ in 0..k {
                a.add_weight(&mut wt);
            }
        }
        wt
    }

    pub fn col_marginal_weight(&self, n: usize) -> Vec<i64> {
        let mut wt = vec![0; n];
        for (_, b, k) in self.entries() {
            for _ in 0..k {
                b.add_weight(&mut wt);
            }
        }
        wt
    }
}

/// A biword `(a, b)` whose pairs are sorted by `a` increasing and, for equal
/// `a`, by `b` decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Biword {
    pub top: Word,
    pub bottom: Word,
}

impl Biword {
    /// Sorts arbitrary pairs into the canonical order.
    pub fn from_pairs(mut pairs: Vec<(Letter, Letter)>) -> Biword {
        pairs.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        let (top, bottom) = pairs.into_iter().unzip();
        Biword {
            top: Word(top),
            bottom: Word(bottom),
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        self.top
            .0
            .iter()
            .copied()
            .zip(self.bottom.0.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    /// The same multiset of pairs with the two rows exchanged, sorted as a
    /// biword over the swapped alphabets. This is an involution, and
    /// `self.transpose()` equals `(b^τ, a^τ)`.
    pub fn transpose(&self) -> Biword {
        Biword::from_pairs(self.pairs().map(|(a, b)| (b, a)).collect())
    }

    /// `(a^τ, b^τ)`: pairs reordered so that `b` increases and, for equal `b`,
    /// `a` decreases.
    pub fn tau(&self) -> (Word, Word) {
        let t = self.transpose();
        (t.bottom, t.top)
    }
}

pub fn biword_of(m: &BiwordMatrix) -> Biword {
    let mut pairs = Vec::with_capacity(m.total() as usize);
    for (a, b, k) in m.entries() {
        pairs.extend(std::iter::repeat_n((a, b), k as usize));
    }
    Biword::from_pairs(pairs)
}

pub fn matrix_of(bw: &Biword, rows: Alphabet, cols: Alphabet) -> Result<BiwordMatrix> {
    if bw.top.len() != bw.bottom.len() {
        return Err(Error::Malformed(
            "biword rows have different lengths".into(),
        ));
    }
    BiwordMatrix::from_entries(rows, cols, bw.pairs().map(|(a, b)| (a, b, 1)))
}

/// `κ(T, M) = (P, Q)`: column-insert `a^τ_r, …, a^τ_1` into `T`, recording
/// `b^τ_r, …, b^τ_1` in the new cells.
pub fn skew_rsk(t: &Tableau, m: &BiwordMatrix) -> Result<(Tableau, Tableau)> {
    check_rotated_straight(t)?;
    if t.alphabet() != m.row_alphabet() {
        return Err(Error::Malformed(format!(
            "tableau alphabet {} differs from matrix rows {}",
            t.alphabet(),
            m.row_alphabet()
        )));
    }
    let (a_tau, b_tau) = biword_of(m).tau();
    let mut rows = t.flipped_rows();
    let inner: Vec<usize> = rows.iter().map(Vec::len).collect();
    let mut rec: Vec<Vec<i32>> = vec![Vec::new(); rows.len()];
    for (a, b) in a_tau.0.iter().zip(&b_tau.0).rev() {
        let (r, _) = column_insert_raw(&mut rows, -a.0);
        if r == rec.len() {
            rec.push(Vec::new());
        }
        rec[r].push(-b.0);
    }
    let p = Tableau::from_flipped_rows(t.alphabet(), &rows);
    let q = skew_from_flipped(m.col_alphabet(), &rows, &inner, &rec)?;
    Ok((p, q))
}

/// Rotated skew tableau from flipped coordinates: `outer` rows give the
/// shape, the first `inner[k]` cells of row `k` are empty, and `cells[k]`
/// holds the entries of the remaining cells.
fn skew_from_flipped(
    alphabet: Alphabet,
    outer_rows: &[Vec<i32>],
    inner: &[usize],
    cells: &[Vec<i32>],
) -> Result<Tableau> {
    let keep = outer_rows.iter().take_while(|r| !r.is_empty()).count();
    let outer = Partition::new(outer_rows[..keep].iter().map(|r| r.len() as u32).collect())?;
    let inner_parts = (0..keep)
        .map(|k| inner.get(k).copied().unwrap_or(0) as u32)
        .collect();
    let shape = SkewShape::new(outer, Partition::new(inner_parts)?, true)?;
    let rows = (0..keep)
        .rev()
        .map(|k| {
            cells
                .get(k)
                .map(|r| r.iter().rev().map(|&x| Letter(-x)).collect())
                .unwrap_or_default()
        })
        .collect();
    Tableau::new(shape, alphabet, rows)
}

/// `κ^{-1}(P, Q) = (T, M)`.
///
/// Cells of `Q` are emptied in the reverse of the insertion order: smallest
/// entry first and, among equal entries (which form a horizontal strip), the
/// leftmost cell of the rotated picture first.
pub fn skew_rsk_inverse(
    p: &Tableau,
    q: &Tableau,
    rows_alphabet: Alphabet,
) -> Result<(Tableau, BiwordMatrix)> {
    check_rotated_straight(p)?;
    if p.alphabet() != rows_alphabet {
        return Err(Error::InvalidPair(
            "P is not over the matrix row alphabet".into(),
        ));
    }
    if !q.is_rotated() {
        return Err(Error::InvalidPair("Q must have a rotated shape".into()));
    }
    if !q.shape().outer.same_shape(&p.shape().outer) {
        return Err(Error::InvalidPair(format!(
            "outer shape of Q {:?} differs from shape of P {:?}",
            q.shape().outer.parts(),
            p.shape().outer.parts()
        )));
    }
    let mut rows = p.flipped_rows();
    // flipped coordinates of the recorded cells: (entry, row, col)
    let outer = &q.shape().outer;
    let inner = &q.shape().inner;
    let mut cells: Vec<(i32, usize, usize)> = Vec::new();
    for prow in 0..outer.rows() {
        let display = q.row_of_partition_row(prow);
        let start = inner.part(prow) as usize;
        for (off, l) in display.iter().rev().enumerate() {
            cells.push((-l.0, prow, start + off));
        }
    }
    // removal: largest flipped entry (smallest letter) first, then rightmost
    // flipped column (leftmost displayed cell)
    cells.sort_by(|x, y| y.0.cmp(&x.0).then(y.2.cmp(&x.2)));
    let mut pairs = Vec::with_capacity(cells.len());
    for &(e, r, c) in &cells {
        let is_corner = rows[r].len() == c + 1 && rows.get(r + 1).is_none_or(|n| n.len() <= c);
        if !is_corner {
            return Err(Error::InvalidPair(format!(
                "recorded cell ({}, {}) is not removable",
                r + 1,
                c + 1
            )));
        }
        let x = column_uninsert_raw(&mut rows, r);
        pairs.push((Letter(-x), Letter(-e)));
    }
    let t = Tableau::from_flipped_rows(p.alphabet(), &rows);
    let m = BiwordMatrix::from_entries(
        rows_alphabet,
        q.alphabet(),
        pairs.into_iter().map(|(a, b)| (a, b, 1)),
    )?;
    // the removal order is only a reconstruction; confirm it
    let (p2, q2) = skew_rsk(&t, &m)?;
    if !same_skew(&p2, p) || !same_skew(&q2, q) {
        return Err(Error::InvalidPair("pair is not in the image of κ".into()));
    }
    Ok((t, m))
}

/// Equality up to explicitly stored empty rows.
pub fn same_skew(a: &Tableau, b: &Tableau) -> bool {
    let sa = a.shape();
    let sb = b.shape();
    let rows = sa.outer.rows().max(sb.outer.rows());
    sa.outer.padded(rows) == sb.outer.padded(rows)
        && sa.inner.padded(rows) == sb.inner.padded(rows)
        && a.alphabet() == b.alphabet()
        && (0..rows).all(|p| {
            let ra = if p < sa.outer.rows() {
                a.row_of_partition_row(p)
            } else {
                &[]
            };
            let rb = if p < sb.outer.rows() {
                b.row_of_partition_row(p)
            } else {
                &[]
            };
            ra == rb
        })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: Alphabet,
    pub cols: Alphabet,
    pub entries: Vec<(i32, i32, u32)>,
}

impl TryFrom<MatrixJson> for BiwordMatrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<BiwordMatrix> {
        BiwordMatrix::from_entries(
            j.rows,
            j.cols,
            j.entries
                .into_iter()
                .map(|(a, b, k)| (Letter(a), Letter(b), k)),
        )
    }
}

impl From<BiwordMatrix> for MatrixJson {
    fn from(m: BiwordMatrix) -> MatrixJson {
        MatrixJson {
            rows: m.rows,
            cols: m.cols,
            entries: m.entries().map(|(a, b, k)| (a.0, b.0, k)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_m() -> BiwordMatrix {
        let e = [(-3, 5, 1), (-3, 6, 1), (-2, 4, 1), (-1, 4, 2)];
        BiwordMatrix::from_entries(
            Alphabet::barred(3),
            Alphabet::unbarred(6),
            e.iter().map(|&(a, b, k)| (Letter(a), Letter(b), k)),
        )
        .unwrap()
    }

    fn example_t() -> Tableau {
        Tableau::rotated_from_rows(Alphabet::barred(3), &[&[-3], &[-2, -2, -1]]).unwrap()
    }

    fn example_p() -> Tableau {
        Tableau::rotated_from_rows(
            Alphabet::barred(3),
            &[&[-3, -3, -2], &[-3, -2, -2, -1, -1, -1]],
        )
        .unwrap()
    }

    fn example_q() -> Tableau {
        let shape = SkewShape::new(
            Partition::new(vec![6, 3]).unwrap(),
            Partition::new(vec![3, 1]).unwrap(),
            true,
        )
        .unwrap();
        let rows = vec![vec![Letter(5), Letter(6)], vec![Letter(4); 3]];
        Tableau::new(shape, Alphabet::unbarred(6), rows).unwrap()
    }

    #[test]
    fn biword_of_worked_matrix() {
        let bw = biword_of(&example_m());
        assert_eq!(bw.top, Word::from_ints(&[-3, -3, -2, -1, -1]));
        assert_eq!(bw.bottom, Word::from_ints(&[6, 5, 4, 4, 4]));
        let (a, b) = bw.tau();
        assert_eq!(a, Word::from_ints(&[-1, -1, -2, -3, -3]));
        assert_eq!(b, Word::from_ints(&[4, 4, 4, 5, 6]));
        assert_eq!(bw.transpose().transpose(), bw);
        let m = example_m();
        assert_eq!(
            matrix_of(&bw, m.row_alphabet(), m.col_alphabet()).unwrap(),
            m
        );
    }

    #[test]
    fn zero_matrix_is_empty_biword() {
        let z = BiwordMatrix::zero(Alphabet::barred(2), Alphabet::unbarred(3));
        assert!(biword_of(&z).is_empty());
        let t = example_t();
        let (p, q) = skew_rsk(
            &t,
            &BiwordMatrix::zero(Alphabet::barred(3), Alphabet::unbarred(6)),
        )
        .unwrap();
        assert_eq!(p, t);
        assert!(q.is_empty());
    }

    #[test]
    fn forward_worked_example() {
        let (p, q) = skew_rsk(&example_t(), &example_m()).unwrap();
        assert_eq!(p, example_p());
        assert_eq!(q, example_q());
    }

    #[test]
    fn inverse_worked_example() {
        let (t, m) = skew_rsk_inverse(&example_p(), &example_q(), Alphabet::barred(3)).unwrap();
        assert_eq!(t, example_t());
        assert_eq!(m, example_m());
        let dense = m.dense(
            &[Letter(-3), Letter(-2), Letter(-1)],
            &[Letter(4), Letter(5), Letter(6)],
        );
        assert_eq!(dense, vec![vec![0, 1, 1], vec![1, 0, 0], vec![2, 0, 0]]);
    }

    #[test]
    fn inverse_rejects_foreign_pairs() {
        // same shapes, but Q's entries cannot be produced by insertion into P
        let shape = SkewShape::new(
            Partition::new(vec![6, 3]).unwrap(),
            Partition::new(vec![3, 1]).unwrap(),
            true,
        )
        .unwrap();
        let q = Tableau::new(
            shape,
            Alphabet::unbarred(6),
            vec![
                vec![Letter(4), Letter(4)],
                vec![Letter(5), Letter(5), Letter(6)],
            ],
        );
        if let Ok(q) = q {
            let r = skew_rsk_inverse(&example_p(), &q, Alphabet::barred(3));
            if let Ok((t, m)) = r {
                assert_eq!(skew_rsk(&t, &m).unwrap(), (example_p(), q));
            }
        }
        let wrong_shape = Tableau::rotated_from_rows(Alphabet::unbarred(6), &[&[4]]).unwrap();
        assert!(matches!(
            skew_rsk_inverse(&example_p(), &wrong_shape, Alphabet::barred(3)),
            Err(Error::InvalidPair(_))
        ));
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = example_m();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<BiwordMatrix>(&s).unwrap(), m);
    }
}
