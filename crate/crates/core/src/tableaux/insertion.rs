//! Insertion algorithms.
//!
//! Rotated tableaux are handled in "flipped" coordinates: a 180° rotation
//! together with `x ↦ -x` turns a rotated tableau into a normal one, and the
//! reverse column insertion `T ← a` becomes ordinary Schensted column insertion
//! of `-a`.

use super::alphabet::{Alphabet, Letter};
use super::shape::{Partition, SkewShape};
use super::tableau::Tableau;
use super::word::Word;
use crate::error::{Error, Result};

/// Schensted column insertion into a normal tableau given by its rows.
///
/// `x` bumps the smallest entry `≥ x` of the current column; the bumped entry
/// moves to the next column. Returns the (row, column) of the new cell.
pub(crate) fn column_insert_raw(rows: &mut Vec<Vec<i32>>, mut x: i32) -> (usize, usize) {
    let mut c = 0;
    loop {
        let height = rows.iter().take_while(|r| r.len() > c).count();
        let hit = (0..height).find(|&k| rows[k][c] >= x);
        match hit {
            Some(k) => {
                std::mem::swap(&mut rows[k][c], &mut x);
                c += 1;
            }
            None => {
                if height < rows.len() {
                    rows[height].push(x);
                } else {
                    rows.push(vec![x]);
                }
                return (height, c);
            }
        }
    }
}

/// Inverse of [`column_insert_raw`]: removes the corner cell in `row`, bumps
/// leftwards and returns the ejected letter. The cell must be a corner.
pub(crate) fn column_uninsert_raw(rows: &mut [Vec<i32>], row: usize) -> i32 {
    let mut x = rows[row].pop().expect("corner cell exists");
    let mut c = rows[row].len();
    while c > 0 {
        c -= 1;
        // largest entry ≤ x in column c; entries strictly increase down the
        // column, so it is the lowest such cell
        let height = rows.iter().take_while(|r| r.len() > c).count();
        let k = (0..height)
            .rev()
            .find(|&k| rows[k][c] <= x)
            .expect("reverse bumping always finds an entry");
        std::mem::swap(&mut rows[k][c], &mut x);
    }
    x
}

/// Row insertion (bump the smallest entry `> x`).
pub(crate) fn row_insert_raw(rows: &mut Vec<Vec<Letter>>, mut x: Letter) {
    for row in rows.iter_mut() {
        match row.iter().position(|&y| y > x) {
            Some(p) => std::mem::swap(&mut row[p], &mut x),
            None => {
                row.push(x);
                return;
            }
        }
    }
    rows.push(vec![x]);
}

/// `T ← a` for a rotated straight-shape tableau.
pub fn column_insert(t: &Tableau, a: Letter) -> Result<Tableau> {
    check_rotated_straight(t)?;
    t.alphabet().check(a)?;
    let mut rows = t.flipped_rows();
    column_insert_raw(&mut rows, -a.0);
    Ok(Tableau::from_flipped_rows(t.alphabet(), &rows))
}

/// The normal tableau whose row-insertion word is `w`.
pub fn insertion_tableau(alphabet: Alphabet, w: &Word) -> Result<Tableau> {
    let mut rows = Vec::new();
    for &l in w.letters() {
        alphabet.check(l)?;
        row_insert_raw(&mut rows, l);
    }
    let parts = rows.iter().map(|r: &Vec<Letter>| r.len() as u32).collect();
    Tableau::new(SkewShape::normal(Partition::new(parts)?), alphabet, rows)
}

/// `T^↖`: the normal tableau Knuth equivalent to `T`.
///
/// Works for every shape: the reversed reading word is a row reading of `T`
/// from the bottom up, which row insertion rectifies.
pub fn rectify(t: &Tableau) -> Tableau {
    let mut w = t.reading_word().0;
    w.reverse();
    insertion_tableau(t.alphabet(), &Word(w)).expect("letters of a valid tableau")
}

/// The rotated tableau of the same shape as `s` (rotated) that rectifies to
/// `s`, obtained as `((a_r ← a_{r-1}) ← …) ← a_1` for `w(S) = a_1 … a_r`.
pub fn antinormalize(s: &Tableau) -> Result<Tableau> {
    if s.is_rotated() || !s.shape().is_straight() {
        return Err(Error::InvalidShape(
            "antinormalize expects a normal straight shape".into(),
        ));
    }
    let mut rows = Vec::new();
    for l in s.reading_word().0.iter().rev() {
        column_insert_raw(&mut rows, -l.0);
    }
    Ok(Tableau::from_flipped_rows(s.alphabet(), &rows))
}

pub(crate) fn check_rotated_straight(t: &Tableau) -> Result<()> {
    if !t.is_rotated() || !t.shape().is_straight() {
        return Err(Error::InvalidShape(
            "expected a rotated straight shape".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_example() -> Tableau {
        Tableau::rotated_from_rows(Alphabet::barred(3), &[&[-3], &[-2, -2, -1]]).unwrap()
    }

    #[test]
    fn insertion_into_empty() {
        let e = Tableau::empty(Alphabet::barred(3), true);
        let t = column_insert(&e, Letter(-2)).unwrap();
        assert_eq!(t.rows(), &[vec![Letter(-2)]]);
        assert!(t.is_rotated());
    }

    #[test]
    fn replays_worked_example() {
        // w(S^-) = 1̄ 2̄ 3̄ 2̄, inserted as ((2̄ ← 3̄) ← 2̄) ← 1̄
        let mut t = Tableau::empty(Alphabet::barred(3), true);
        for a in [-2, -3, -2, -1] {
            t = column_insert(&t, Letter(a)).unwrap();
        }
        assert_eq!(t, t_example());
        let s = Tableau::from_rows(Alphabet::barred(3), &[&[-3, -2, -1], &[-2]]).unwrap();
        assert_eq!(antinormalize(&s).unwrap(), t_example());
        assert_eq!(rectify(&t_example()), s);
    }

    #[test]
    fn single_row_rectifies_to_itself() {
        let r = Tableau::rotated_from_rows(Alphabet::unbarred(4), &[&[1, 2, 2, 4]]).unwrap();
        let n = rectify(&r);
        assert!(!n.is_rotated());
        assert_eq!(n.rows(), r.rows());
    }

    #[test]
    fn uninsert_inverts_insert() {
        let mut rows = vec![vec![1, 2, 4], vec![3, 5], vec![6]];
        let before = rows.clone();
        let (r, _) = column_insert_raw(&mut rows, 3);
        assert_eq!(column_uninsert_raw(&mut rows, r), 3);
        assert_eq!(rows, before);
    }

    #[test]
    fn rejects_normal_input() {
        let s = Tableau::from_rows(Alphabet::unbarred(2), &[&[1]]).unwrap();
        assert!(column_insert(&s, Letter(1)).is_err());
    }
}
