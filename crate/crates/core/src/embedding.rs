//! Embeddings `B(λ) ⊗ T_{-λ} ↪ B_Ω` for single-sink quivers, and transition
//! maps between the Lusztig data of two such quivers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lusztig::{LusztigDatum, Quiver};
use crate::rsk::{skew_rsk, skew_rsk_inverse, BiwordMatrix};
use crate::tableaux::{
    antinormalize, rectify, sigma_complement, Alphabet, Letter, Partition, SkewShape, Tableau,
};

fn check_normal(s: &Tableau, n: usize) -> Result<()> {
    if s.is_rotated() || !s.shape().is_straight() {
        return Err(Error::InvalidShape(
            "expected a normal straight shape".into(),
        ));
    }
    if s.alphabet() != Alphabet::unbarred(n as u32) && s.alphabet() != Alphabet::barred(n as u32) {
        return Err(Error::Malformed(format!(
            "tableau over {} for n = {n}",
            s.alphabet()
        )));
    }
    if s.shape().outer.length() > n {
        return Err(Error::InvalidShape(format!(
            "shape {:?} has more than {n} rows",
            s.shape().outer.parts()
        )));
    }
    Ok(())
}

fn check_padding(s: &Tableau, d: u32) -> Result<()> {
    let first = s.shape().outer.first();
    if d < first {
        return Err(Error::PaddingTooSmall {
            d,
            first_row: first,
        });
    }
    Ok(())
}

/// `c_ij` = number of `j`'s in row `i`, on the all-left quiver.
pub fn c_plus(s: &Tableau) -> Result<LusztigDatum> {
    let n = s.alphabet().n as usize;
    if s.alphabet().is_barred() {
        return Err(Error::Malformed(
            "c_plus expects an unbarred tableau".into(),
        ));
    }
    check_normal(s, n)?;
    let mut c = LusztigDatum::zero(Quiver::plus(n)?);
    for (i, j, v) in plus_counts(s, 0) {
        c.set(i, j, v);
    }
    Ok(c)
}

/// `(i, j, count of j in row i - offset)` for the rows of a normal tableau,
/// with row `k` standing for datum row `k + offset`.
fn plus_counts(s: &Tableau, offset: usize) -> Vec<(usize, usize, u32)> {
    let mut out = Vec::new();
    for (k, row) in s.rows().iter().enumerate() {
        let i = k + 1 + offset;
        for j in i + 1..=s.alphabet().n as usize {
            let v = row.iter().filter(|l| l.0 == j as i32).count() as u32;
            if v > 0 {
                out.push((i, j, v));
            }
        }
    }
    out
}

/// `c_ij` = number of `ī`'s in row `m - j + 1` of a normal tableau over `[m̄]`.
fn minus_counts(t: &Tableau) -> Vec<(usize, usize, u32)> {
    let m = t.alphabet().n as usize;
    let mut out = Vec::new();
    for j in 2..=m {
        let p = m - j; // 0-based row m - j + 1
        for i in 1..j {
            let v = t.count_in_row(p, Letter::barred(i as u32));
            if v > 0 {
                out.push((i, j, v));
            }
        }
    }
    out
}

/// `c^-(T)` for a normal tableau over `[n̄]`, on the all-right quiver.
pub fn c_minus_barred(t: &Tableau) -> Result<LusztigDatum> {
    let n = t.alphabet().n as usize;
    if !t.alphabet().is_barred() {
        return Err(Error::Malformed(
            "c_minus_barred expects a barred tableau".into(),
        ));
    }
    check_normal(t, n)?;
    LusztigDatum::from_entries(Quiver::minus(n)?, &minus_counts(t))
}

/// `c_-(S) = c^-(σ^{-d}(S)^↖)`; independent of `d ≥ λ_1`.
pub fn c_minus(s: &Tableau, d: u32) -> Result<LusztigDatum> {
    check_padding(s, d)?;
    let c = sigma_complement(s, d)?;
    c_minus_barred(&rectify(&c))
}

/// Shape data of the embedding for a fixed `λ`, sink and padding `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingContext {
    pub lambda: Partition,
    pub quiver: Quiver,
    pub d: u32,
    /// `(d - λ_r, …, d - λ_1)`
    pub eta: Partition,
    /// `(λ_{r+1}, …, λ_n)`
    pub zeta: Partition,
}

impl EmbeddingContext {
    pub fn new(lambda: Partition, quiver: Quiver, d: u32) -> Result<EmbeddingContext> {
        if lambda.length() > quiver.n {
            return Err(Error::InvalidShape(format!(
                "shape {:?} has more than {} rows",
                lambda.parts(),
                quiver.n
            )));
        }
        if d < lambda.first() {
            return Err(Error::PaddingTooSmall {
                d,
                first_row: lambda.first(),
            });
        }
        let r = quiver.sink;
        let eta = Partition::new((0..r).map(|k| d - lambda.part(r - 1 - k)).collect())?;
        let zeta = Partition::new((r..quiver.n).map(|k| lambda.part(k)).collect())?.trimmed();
        Ok(EmbeddingContext {
            lambda,
            quiver,
            d,
            eta,
            zeta,
        })
    }
}

/// `S ↦ (S^+, S^-, M)` together with the intermediate pair `(P, Q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitTriple {
    /// Rows below row `r`, over `[n]`.
    pub s_plus: Tableau,
    /// Normal tableau over `[r̄]`.
    pub s_minus: Tableau,
    /// Matrix over `[r̄] × [n]`, supported on columns `> r`.
    pub m: BiwordMatrix,
    /// Letters `≤ r` of the first `r` rows.
    pub p_prime: Tableau,
    /// `σ^{-d}(P')`, rotated over `[r̄]`.
    pub p: Tableau,
    /// Letters `> r` of the first `r` rows, as a rotated skew tableau.
    pub q: Tableau,
}

pub fn split_tableau(s: &Tableau, ctx: &EmbeddingContext) -> Result<SplitTriple> {
    let n = ctx.quiver.n;
    let r = ctx.quiver.sink;
    if s.alphabet() != Alphabet::unbarred(n as u32) {
        return Err(Error::Malformed(format!("expected a tableau over [{n}]")));
    }
    check_normal(s, n)?;
    if !s.shape().outer.same_shape(&ctx.lambda) {
        return Err(Error::InvalidShape(format!(
            "tableau shape {:?} differs from {:?}",
            s.shape().outer.parts(),
            ctx.lambda.parts()
        )));
    }
    let d = ctx.d;
    let row = |k: usize| -> &[Letter] { s.rows().get(k).map(Vec::as_slice).unwrap_or(&[]) };
    let big = Alphabet::unbarred(n as u32);

    // (i) S^+
    let plus_rows: Vec<Vec<Letter>> = (r..n).map(|k| row(k).to_vec()).collect();
    let s_plus = normal_from_rows(big, plus_rows)?;

    // (ii) P' and Q
    let cut = |k: usize| row(k).iter().take_while(|l| l.0 <= r as i32).count();
    let pp_rows: Vec<Vec<Letter>> = (0..r).map(|k| row(k)[..cut(k)].to_vec()).collect();
    let p_prime = normal_from_rows(Alphabet::unbarred(r as u32), pp_rows)?;
    // box row k holds the letters > r of S row k
    let nu: Vec<u32> = (0..r).map(|p| d - cut(r - 1 - p) as u32).collect();
    let q_shape = SkewShape::new(Partition::new(nu)?, ctx.eta.clone(), true)?;
    let q_rows = (0..r).map(|k| row(k)[cut(k)..].to_vec()).collect();
    let q = Tableau::new(q_shape, big, q_rows)?;

    // (iii) P = σ^{-d}(P')
    let p = sigma_complement(&p_prime, d)?;

    // (iv) (T, M) = κ^{-1}(P, Q)
    let (t, m) = skew_rsk_inverse(&p, &q, Alphabet::barred(r as u32))?;

    // (v) S^- = T^↖
    let s_minus = rectify(&t);
    Ok(SplitTriple {
        s_plus,
        s_minus,
        m,
        p_prime,
        p,
        q,
    })
}

fn normal_from_rows(alphabet: Alphabet, mut rows: Vec<Vec<Letter>>) -> Result<Tableau> {
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    let parts = rows.iter().map(|r| r.len() as u32).collect();
    Tableau::new(SkewShape::normal(Partition::new(parts)?), alphabet, rows)
}

/// `c(S)` assembled from a split: `c_ij = M(ī, j)` on the cross block,
/// `c^-(S^-)` left of the sink and `c^+(S^+)` right of it.
pub fn assemble(quiver: Quiver, split: &SplitTriple) -> Result<LusztigDatum> {
    let r = quiver.sink;
    let mut entries = Vec::new();
    for (a, b, v) in split.m.entries() {
        entries.push((a.index() as usize, b.0 as usize, v));
    }
    entries.extend(minus_counts(&split.s_minus));
    entries.extend(plus_counts(&split.s_plus, r));
    LusztigDatum::from_entries(quiver, &entries)
}

/// `c(S)` through the five-step split, valid for every sink.
pub fn embed_five_step(s: &Tableau, q: Quiver, d: u32) -> Result<LusztigDatum> {
    let ctx = EmbeddingContext::new(s.shape().outer.clone(), q, d)?;
    assemble(q, &split_tableau(s, &ctx)?)
}

/// The embedding `ψ_λ(S) = c(S)`. The all-left and all-right quivers use the
/// row-counting formulas directly.
pub fn embed(s: &Tableau, q: Quiver, d: u32) -> Result<LusztigDatum> {
    if s.alphabet() != Alphabet::unbarred(q.n as u32) {
        return Err(Error::Malformed(format!(
            "tableau over {} cannot be embedded for n = {}",
            s.alphabet(),
            q.n
        )));
    }
    check_padding(s, d)?;
    if q.sink == 1 {
        c_plus(s)
    } else if q.sink == q.n - 1 {
        c_minus(s, d)?.with_quiver(q)
    } else {
        embed_five_step(s, q, d)
    }
}

/// Embedding with the smallest padding `d = λ_1`.
pub fn embed_default(s: &Tableau, q: Quiver) -> Result<LusztigDatum> {
    embed(s, q, s.shape().outer.first())
}

/// A marginally large tableau `S` with `c(S) = c` on `c`'s quiver, and the
/// padding `d = λ_1` it was built for.
///
/// Row gaps are `Σ c_ij + 1`, so every row keeps at least one baseline letter
/// and the counted letters never sit above another row.
pub fn large_tableau(c: &LusztigDatum) -> Result<(Tableau, u32)> {
    let q = c.quiver();
    let (n, r) = (q.n, q.sink);
    let g = c.total() + 1;
    let lambda: Vec<u32> = (1..=n).map(|k| (n - k) as u32 * g).collect();
    let d = lambda[0];
    let fail = |e: Error| Error::Reconstruction(e.to_string());

    // S^+: row k has baseline r + k followed by the counted larger letters
    let plus_rows: Vec<Vec<Letter>> = (r + 1..=n)
        .map(|i| {
            let counted: Vec<Letter> = (i + 1..=n)
                .flat_map(|j| std::iter::repeat_n(Letter::unbarred(j as u32), c.get(i, j) as usize))
                .collect();
            let base = lambda[i - 1] as usize - counted.len();
            std::iter::repeat_n(Letter::unbarred(i as u32), base)
                .chain(counted)
                .collect()
        })
        .collect();

    // S^-: row k has baseline j̄ (j = r - k + 1) followed by ī for i < j
    let minus_rows: Vec<Vec<Letter>> = (1..=r)
        .map(|k| {
            let j = r - k + 1;
            let len = (d - lambda[j - 1]) as usize;
            let counted: Vec<Letter> = (1..j)
                .rev()
                .flat_map(|i| std::iter::repeat_n(Letter::barred(i as u32), c.get(i, j) as usize))
                .collect();
            std::iter::repeat_n(Letter::barred(j as u32), len - counted.len())
                .chain(counted)
                .collect()
        })
        .collect();
    let s_minus = normal_from_rows(Alphabet::barred(r as u32), minus_rows).map_err(fail)?;

    let mut m = BiwordMatrix::zero(Alphabet::barred(r as u32), Alphabet::unbarred(n as u32));
    for i in 1..=r {
        for j in r + 1..=n {
            m.add(
                Letter::barred(i as u32),
                Letter::unbarred(j as u32),
                c.get(i, j),
            )?;
        }
    }

    let t = antinormalize(&s_minus).map_err(fail)?;
    let (p, qt) = skew_rsk(&t, &m).map_err(fail)?;
    let p_prime = sigma_complement(&p, d).map_err(fail)?;

    let mut rows: Vec<Vec<Letter>> = Vec::with_capacity(n);
    let q_rows = qt.shape().rows();
    for k in 0..r {
        let mut row: Vec<Letter> = p_prime.rows().get(k).cloned().unwrap_or_default();
        // box row k is partition row r - 1 - k of Q
        let prow = r - 1 - k;
        if prow < q_rows {
            row.extend_from_slice(qt.row_of_partition_row(prow));
        }
        rows.push(row);
    }
    rows.extend(plus_rows);
    let s = Tableau::new(
        SkewShape::normal(
            Partition::new(rows.iter().map(|r| r.len() as u32).collect()).map_err(fail)?,
        ),
        Alphabet::unbarred(n as u32),
        rows,
    )
    .map_err(fail)?;
    if s.shape().outer.parts() != lambda.as_slice() {
        return Err(Error::Reconstruction(format!(
            "rebuilt shape {:?} instead of {:?}",
            s.shape().outer.parts(),
            lambda
        )));
    }
    Ok((s, d))
}

/// `R_Ω^{Ω'}(c)`: embed a marginally large tableau for `c` along `target`.
pub fn transition(c: &LusztigDatum, target: Quiver) -> Result<LusztigDatum> {
    if target.n != c.n() {
        return Err(Error::QuiverMismatch(
            c.quiver().to_string(),
            target.to_string(),
        ));
    }
    if target == c.quiver() {
        return Ok(c.clone());
    }
    let (s, d) = large_tableau(c)?;
    embed(&s, target, d)
}
