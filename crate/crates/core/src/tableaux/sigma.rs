//! The complementation map `σ^{-d}`.
//!
//! Place a straight-shape tableau over an `n`-letter alphabet in a box with `n`
//! rows and `d` columns (normal shapes top-left justified, rotated shapes
//! bottom-right justified). Each output column is the complement of the
//! corresponding input column in the exchanged alphabet, stacked at the
//! opposite end of the box. Normal inputs become rotated and vice versa.

use super::alphabet::Letter;
use super::shape::{Partition, SkewShape};
use super::tableau::Tableau;
use crate::error::{Error, Result};

pub fn sigma_complement(t: &Tableau, d: u32) -> Result<Tableau> {
    if !t.shape().is_straight() {
        return Err(Error::InvalidShape(
            "σ complement expects a straight shape".into(),
        ));
    }
    let n = t.alphabet().n as usize;
    let outer = &t.shape().outer;
    if outer.length() > n {
        return Err(Error::InvalidShape(format!(
            "shape {:?} has more than {n} rows",
            outer.parts()
        )));
    }
    if d < outer.first() {
        return Err(Error::PaddingTooSmall {
            d,
            first_row: outer.first(),
        });
    }
    let d = d as usize;
    let rotated = t.is_rotated();

    // present[c][k] = letter index k+1 occurs in box column c
    let mut present = vec![vec![false; n]; d];
    for p in 0..outer.length() {
        let row = t.row_of_partition_row(p);
        let start = if rotated { d - row.len() } else { 0 };
        for (off, l) in row.iter().enumerate() {
            present[start + off][l.index() as usize - 1] = true;
        }
    }

    let dual = t.alphabet().dual();
    let columns: Vec<Vec<Letter>> = present
        .iter()
        .map(|col| {
            let mut v: Vec<Letter> = (0..n)
                .filter(|&k| !col[k])
                .map(|k| dual.letter(k as u32 + 1))
                .collect();
            v.sort();
            v
        })
        .collect();

    // Output partition row p collects the p-th cell from the stacked end of
    // each column long enough to have one.
    let mut part_rows: Vec<Vec<Letter>> = vec![Vec::new(); n];
    for col in &columns {
        let m = col.len();
        for (p, slot) in part_rows.iter_mut().enumerate().take(m) {
            // normal output stacks at the top; rotated output stacks at the
            // bottom, where partition row p is the p-th cell from the bottom
            slot.push(if rotated { col[p] } else { col[m - 1 - p] });
        }
    }
    // columns were visited left to right, so every row is already in order
    let out_rotated = !rotated;
    let parts: Vec<u32> = part_rows.iter().map(|r| r.len() as u32).collect();
    if out_rotated {
        let shape = SkewShape::rotated(Partition::new(parts)?);
        let rows = part_rows.into_iter().rev().collect();
        Tableau::new(shape, dual, rows)
    } else {
        let keep = parts.iter().take_while(|&&x| x > 0).count();
        let shape = SkewShape::normal(Partition::new(parts[..keep].to_vec())?);
        part_rows.truncate(keep);
        Tableau::new(shape, dual, part_rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::alphabet::Alphabet;
    use crate::tableaux::insertion::rectify;

    fn s() -> Tableau {
        Tableau::from_rows(
            Alphabet::unbarred(6),
            &[
                &[1, 1, 1, 2, 2, 3],
                &[2, 3, 3, 5, 6],
                &[4, 4, 4],
                &[5, 5, 6],
                &[6, 6],
            ],
        )
        .unwrap()
    }

    fn rows(t: &Tableau) -> Vec<Vec<i32>> {
        t.rows()
            .iter()
            .map(|r| r.iter().map(|l| l.0).collect())
            .collect()
    }

    #[test]
    fn worked_example_complement() {
        let c = sigma_complement(&s(), 6).unwrap();
        assert!(c.is_rotated());
        assert_eq!(
            rows(&c),
            vec![
                vec![],
                vec![-6],
                vec![-6, -5, -5],
                vec![-4, -4, -4],
                vec![-5, -3, -3, -2],
                vec![-3, -2, -2, -1, -1, -1],
            ]
        );
        assert_eq!(
            rows(&rectify(&c)),
            vec![
                vec![-6, -6, -5, -4, -1, -1],
                vec![-5, -5, -4, -2],
                vec![-4, -3, -3],
                vec![-3, -2, -1],
                vec![-2],
            ]
        );
    }

    #[test]
    fn single_column() {
        let t = Tableau::from_rows(Alphabet::unbarred(4), &[&[1], &[3]]).unwrap();
        let c = sigma_complement(&t, 1).unwrap();
        assert_eq!(rows(&c), vec![vec![], vec![], vec![-4], vec![-2]]);
        let empty = Tableau::empty(Alphabet::unbarred(2), false);
        let full = sigma_complement(&empty, 1).unwrap();
        assert_eq!(rows(&full), vec![vec![-2], vec![-1]]);
    }

    #[test]
    fn round_trip_and_weight() {
        let c = sigma_complement(&s(), 7).unwrap();
        assert_eq!(sigma_complement(&c, 7).unwrap(), s());
        let ws = s().weight();
        let wc = c.weight();
        for k in 0..6 {
            assert_eq!(wc[k], ws[k] - 7);
        }
    }

    #[test]
    fn padding_must_cover_first_row() {
        assert_eq!(
            sigma_complement(&s(), 5),
            Err(Error::PaddingTooSmall { d: 5, first_row: 6 })
        );
    }
}
