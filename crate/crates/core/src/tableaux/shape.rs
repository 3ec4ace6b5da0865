use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of row lengths.
///
/// Trailing zero parts are kept: they stand for explicit empty rows, which
/// matter for row-indexed counting and for the position of rows in rotated
/// shapes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of stored rows, including empty ones.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `λ_{k+1}` (0-based `k`), zero past the end.
    pub fn part(&self, k: usize) -> u32 {
        self.parts.get(k).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Same parts with the stored row count forced to `rows`.
    pub fn padded(&self, rows: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.resize(rows.max(self.length()), 0);
        Partition { parts }
    }

    pub fn trimmed(&self) -> Partition {
        self.padded(self.length())
    }

    /// Equality up to trailing empty rows.
    pub fn same_shape(&self, other: &Partition) -> bool {
        self.trimmed() == other.trimmed()
    }

    /// Cell-wise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.rows().max(self.rows())).all(|k| other.part(k) <= self.part(k))
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.first())
            .map(|c| self.parts.iter().filter(|&&p| p > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All partitions of `size` with at most `max_rows` parts, in
    /// reverse-lexicographic order.
    pub fn all_of_size(size: u32, max_rows: usize) -> Vec<Partition> {
        fn go(rest: u32, cap: u32, rows_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if rows_left == 0 {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_rows, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// `outer / inner`, optionally rotated by 180°.
///
/// A rotated shape `(λ/μ)^π` is drawn bottom-right justified: display row `k`
/// (0-based, top to bottom) is partition row `L - 1 - k` where `L` is the
/// stored row count of `outer`, and its cells sit `μ_p .. λ_p` columns in from
/// the right edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
    pub rotated: bool,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition, rotated: bool) -> Result<SkewShape> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!(
                "inner {:?} is not contained in outer {:?}",
                inner.parts(),
                outer.parts()
            )));
        }
        if inner.length() > outer.rows() {
            return Err(Error::InvalidShape("inner has more rows than outer".into()));
        }
        let inner = inner.padded(outer.rows());
        Ok(SkewShape {
            outer,
            inner,
            rotated,
        })
    }

    pub fn normal(outer: Partition) -> SkewShape {
        let rows = outer.rows();
        SkewShape {
            outer,
            inner: Partition::empty().padded(rows),
            rotated: false,
        }
    }

    pub fn rotated(outer: Partition) -> SkewShape {
        SkewShape {
            rotated: true,
            ..SkewShape::normal(outer)
        }
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of display rows.
    pub fn rows(&self) -> usize {
        self.outer.rows()
    }

    pub fn cells(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Partition row shown at display row `k`.
    pub fn partition_row(&self, k: usize) -> usize {
        if self.rotated {
            self.rows() - 1 - k
        } else {
            k
        }
    }

    pub fn row_len(&self, k: usize) -> usize {
        let p = self.partition_row(k);
        (self.outer.part(p) - self.inner.part(p)) as usize
    }

    /// Absolute column (0-based, from the left of the bounding box) of the
    /// first cell of display row `k`.
    pub fn row_start(&self, k: usize) -> i64 {
        let p = self.partition_row(k);
        if self.rotated {
            self.outer.first() as i64 - self.outer.part(p) as i64
        } else {
            self.inner.part(p) as i64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 2, 0]).is_ok());
    }

    #[test]
    fn counts_and_conjugate() {
        let p = Partition::new(vec![6, 5, 3, 3, 2, 0]).unwrap();
        assert_eq!(p.rows(), 6);
        assert_eq!(p.length(), 5);
        assert_eq!(p.size(), 19);
        assert_eq!(p.conjugate().parts(), &[5, 5, 4, 2, 2, 1]);
        assert!(p.same_shape(&Partition::new(vec![6, 5, 3, 3, 2]).unwrap()));
    }

    #[test]
    fn enumerates_partitions() {
        assert_eq!(Partition::all_of_size(4, 4).len(), 5);
        assert_eq!(Partition::all_of_size(4, 2).len(), 3);
        assert_eq!(Partition::all_of_size(0, 3), vec![Partition::empty()]);
        let total: usize = (0..=8).map(|s| Partition::all_of_size(s, 4).len()).sum();
        assert_eq!(total, 1 + 1 + 2 + 3 + 5 + 6 + 9 + 11 + 15);
    }

    #[test]
    fn rotated_geometry() {
        // ((6,3)/(3,1))^π: top display row is partition row 1.
        let s = SkewShape::new(
            Partition::new(vec![6, 3]).unwrap(),
            Partition::new(vec![3, 1]).unwrap(),
            true,
        )
        .unwrap();
        assert_eq!(s.row_len(0), 2);
        assert_eq!(s.row_start(0), 3);
        assert_eq!(s.row_len(1), 3);
        assert_eq!(s.row_start(1), 0);
    }
}
