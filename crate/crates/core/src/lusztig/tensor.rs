//! Crystal operators on `B_Ω` through the decomposition
//! `c ↦ c^J ⊗ c_{J_1} ⊗ c_{J_2}`: each factor is encoded as a biword, the
//! operator is routed by the tensor product rule and applied to one word.

use super::datum::{split, Block, DatumSplit, LusztigDatum};
use super::quiver::Quiver;
use crate::crystal::{tensor_route, tensor_stats, Direction, Ext, FactorStats};
use crate::error::Result;
use crate::rsk::Biword;
use crate::tableaux::word::check_index;
use crate::tableaux::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Part {
    Cross,
    Left,
    Right,
}

fn parts(q: Quiver) -> Vec<Part> {
    let mut v = vec![Part::Cross];
    if q.sink > 1 {
        v.push(Part::Left);
    }
    if q.sink < q.n - 1 {
        v.push(Part::Right);
    }
    v
}

fn pick(s: &DatumSplit, p: Part) -> &LusztigDatum {
    match p {
        Part::Cross => &s.cj,
        Part::Left => &s.cj1,
        Part::Right => &s.cj2,
    }
}

fn acts_on(q: Quiver, p: Part, i: usize) -> bool {
    match p {
        Part::Cross => true,
        Part::Left => i < q.sink,
        Part::Right => i > q.sink,
    }
}

/// Pairs `(a, b)` with multiplicities, sorted as a biword.
fn biword(pairs: impl Iterator<Item = ((i32, i32), u32)>) -> Biword {
    let mut v = Vec::new();
    for ((a, b), k) in pairs {
        v.extend(std::iter::repeat_n((Letter(a), Letter(b)), k as usize));
    }
    Biword::from_pairs(v)
}

// Encodings. Cross: (ī, j) for c_ij. Left: (r-j+1, ī) for c_ij.
// Right: (i, j) for c_ij.
fn encode(c: &LusztigDatum, p: Part) -> Biword {
    let r = c.quiver().sink as i32;
    biword(c.nonzero().map(|(i, j, v)| {
        let (i, j) = (i as i32, j as i32);
        let pair = match p {
            Part::Cross => (-i, j),
            Part::Left => (r - j + 1, -i),
            Part::Right => (i, j),
        };
        (pair, v)
    }))
}

/// Recounts pairs into a datum; pairs that fall outside the block are
/// dropped (the projection onto the image of the encoding).
fn decode(q: Quiver, p: Part, pairs: impl Iterator<Item = (Letter, Letter)>) -> LusztigDatum {
    let r = q.sink as i32;
    let mut out = LusztigDatum::zero(q);
    for (a, b) in pairs {
        let (i, j) = match p {
            Part::Cross => (-a.0, b.0),
            Part::Left => (-b.0, r + 1 - a.0),
            Part::Right => (a.0, b.0),
        };
        if i >= 1 && i < j && j as usize <= q.n {
            out.inc(i as usize, j as usize);
        }
    }
    out
}

/// The word the operators act on, and whether it is the top row of the
/// (possibly τ-rearranged) biword.
fn active_word(c: &LusztigDatum, p: Part, i: usize) -> (Word, Word, bool) {
    let bw = encode(c, p);
    if p == Part::Cross && i < c.quiver().sink {
        let (a, b) = bw.tau();
        (a, b, true)
    } else {
        (bw.bottom, bw.top, false)
    }
}

fn factor_stats(c: &LusztigDatum, p: Part, i: usize) -> FactorStats {
    let q = c.quiver();
    let h = c.pairing(i);
    if !acts_on(q, p, i) {
        return FactorStats::inert(h);
    }
    let eps = if p == Part::Cross && i == q.sink {
        c.get(i, i + 1) as i64
    } else {
        let (w, _, _) = active_word(c, p, i);
        w.signature(i).epsilon()
    };
    FactorStats {
        eps: Ext::Fin(eps),
        phi: Ext::Fin(eps + h),
        h,
    }
}

fn factor_apply(c: &LusztigDatum, p: Part, i: usize, dir: Direction) -> Option<LusztigDatum> {
    let q = c.quiver();
    if p == Part::Cross && i == q.sink {
        let mut out = c.clone();
        match dir {
            Direction::Lower => out.inc(i, i + 1),
            Direction::Raise => {
                if c.get(i, i + 1) == 0 {
                    return None;
                }
                out.dec(i, i + 1);
            }
        }
        return Some(out);
    }
    let (w, other, is_top) = active_word(c, p, i);
    match w.apply(i, dir) {
        Some(w2) => {
            let pairs: Vec<(Letter, Letter)> = if is_top {
                w2.0.into_iter().zip(other.0).collect()
            } else {
                other.0.into_iter().zip(w2.0).collect()
            };
            Some(decode(q, p, pairs.into_iter()))
        }
        None => match (p, dir) {
            // f on a word killed by f_i: add the root ε_i - ε_{i+1}
            (Part::Left | Part::Right, Direction::Lower) => {
                let mut out = c.clone();
                out.inc(i, i + 1);
                Some(out)
            }
            _ => None,
        },
    }
}

fn stats_of(s: &DatumSplit, q: Quiver, i: usize) -> (Vec<Part>, Vec<FactorStats>) {
    let ps = parts(q);
    let st = ps.iter().map(|&p| factor_stats(pick(s, p), p, i)).collect();
    (ps, st)
}

/// `ε_i(c)` through the tensor product rule.
pub fn epsilon_tensor(c: &LusztigDatum, i: usize) -> i64 {
    let q = c.quiver();
    let (_, st) = stats_of(&split(c), q, i);
    tensor_stats(&st)
        .and_then(|s| s.eps.finite())
        .expect("the first factor always carries finite statistics")
}

/// `e_i` / `f_i` on `B_Ω` through the tensor decomposition.
pub fn apply_tensor(c: &LusztigDatum, i: usize, dir: Direction) -> Result<Option<LusztigDatum>> {
    check_index(c.n(), i)?;
    let q = c.quiver();
    let mut s = split(c);
    let (ps, st) = stats_of(&s, q, i);
    let Some(k) = tensor_route(&st, dir) else {
        return Ok(None);
    };
    let p = ps[k];
    let Some(new) = factor_apply(pick(&s, p), p, i, dir) else {
        return Ok(None);
    };
    debug_assert!(new.nonzero().all(|(a, b, _)| {
        let blk = super::datum::block(q, (a, b));
        matches!(
            (p, blk),
            (Part::Cross, Block::Cross) | (Part::Left, Block::Left) | (Part::Right, Block::Right)
        )
    }));
    match p {
        Part::Cross => s.cj = new,
        Part::Left => s.cj1 = new,
        Part::Right => s.cj2 = new,
    }
    Ok(Some(
        super::datum::merge(&s).expect("factor operators stay in their block"),
    ))
}

/// `f_i` on the cross block alone, `None` when the result would leave it.
pub fn lower_in_cross_block(c: &LusztigDatum, i: usize) -> Option<LusztigDatum> {
    factor_apply(c, Part::Cross, i, Direction::Lower)
}
