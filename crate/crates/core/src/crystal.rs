//! Shared crystal vocabulary: extended integers, operator directions, the
//! statistics record of an element, and the tensor product rule.
//!
//! The tensor product convention is Kashiwara's: for `b1 ⊗ b2`,
//!
//! ```text
//! e_i(b1 ⊗ b2) = e_i b1 ⊗ b2   if φ_i(b1) ≥ ε_i(b2),  else b1 ⊗ e_i b2
//! f_i(b1 ⊗ b2) = f_i b1 ⊗ b2   if φ_i(b1) > ε_i(b2),  else b1 ⊗ f_i b2
//! ```

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// An element of `Z ∪ {-∞}`. Variant order makes `NegInf` the minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    NegInf,
    Fin(i64),
}

impl Ext {
    pub fn is_finite(self) -> bool {
        matches!(self, Ext::Fin(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Ext::Fin(v) => Some(v),
            Ext::NegInf => None,
        }
    }
}

impl Add<i64> for Ext {
    type Output = Ext;

    fn add(self, rhs: i64) -> Ext {
        match self {
            Ext::Fin(v) => Ext::Fin(v + rhs),
            Ext::NegInf => Ext::NegInf,
        }
    }
}

impl From<i64> for Ext {
    fn from(v: i64) -> Self {
        Ext::Fin(v)
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Fin(v) => write!(f, "{v}"),
            Ext::NegInf => write!(f, "-inf"),
        }
    }
}

impl Serialize for Ext {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Ext::Fin(v) => s.serialize_i64(*v),
            Ext::NegInf => s.serialize_none(),
        }
    }
}

impl<'de> Deserialize<'de> for Ext {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(match Option::<i64>::deserialize(d)? {
            Some(v) => Ext::Fin(v),
            None => Ext::NegInf,
        })
    }
}

/// Raising (`e_i`) or lowering (`f_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Raise,
    Lower,
}

impl Direction {
    pub fn opposite(self) -> Direction {
        match self {
            Direction::Raise => Direction::Lower,
            Direction::Lower => Direction::Raise,
        }
    }
}

impl std::str::FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "raise" | "e" => Ok(Direction::Raise),
            "lower" | "f" => Ok(Direction::Lower),
            other => Err(format!(
                "unknown direction {other:?} (expected raise|lower)"
            )),
        }
    }
}

/// `⟨μ, h_i⟩ = μ_i - μ_{i+1}` for a weight written in the `ε` basis (1-based `i`).
pub fn pairing(wt: &[i64], i: usize) -> i64 {
    wt[i - 1] - wt[i]
}

/// The simple root `α_i = ε_i - ε_{i+1}` as a vector of length `n`.
pub fn simple_root(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i - 1] = 1;
    v[i] = -1;
    v
}

/// Weight and string lengths of one crystal element.
///
/// `eps[i - 1]` and `phi[i - 1]` hold `ε_i` and `φ_i`. The crystal `T_μ` is the
/// element with weight `μ` and every statistic equal to `-∞`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalStats {
    pub wt: Vec<i64>,
    pub eps: Vec<Ext>,
    pub phi: Vec<Ext>,
}

impl CrystalStats {
    pub fn t_mu(wt: Vec<i64>) -> Self {
        let rank = wt.len().saturating_sub(1);
        CrystalStats {
            wt,
            eps: vec![Ext::NegInf; rank],
            phi: vec![Ext::NegInf; rank],
        }
    }

    /// Axiom (1): `φ_i = ⟨wt, h_i⟩ + ε_i` wherever both sides are finite.
    pub fn satisfies_weight_axiom(&self) -> bool {
        (1..self.wt.len()).all(|i| match (self.eps[i - 1], self.phi[i - 1]) {
            (Ext::Fin(e), Ext::Fin(p)) => p == pairing(&self.wt, i) + e,
            (Ext::NegInf, Ext::NegInf) => true,
            _ => false,
        })
    }
}

/// The `i`-data of one tensor factor: `ε_i`, `φ_i` and `⟨wt, h_i⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorStats {
    pub eps: Ext,
    pub phi: Ext,
    pub h: i64,
}

impl FactorStats {
    pub fn finite(eps: i64, phi: i64) -> Self {
        FactorStats {
            eps: Ext::Fin(eps),
            phi: Ext::Fin(phi),
            h: phi - eps,
        }
    }

    /// A factor on which the `i`-operators are undefined but whose weight still
    /// contributes `h` to the pairing.
    pub fn inert(h: i64) -> Self {
        FactorStats {
            eps: Ext::NegInf,
            phi: Ext::NegInf,
            h,
        }
    }

    /// Statistics of `self ⊗ right`.
    pub fn tensor(self, right: FactorStats) -> FactorStats {
        FactorStats {
            eps: self.eps.max(right.eps + (-self.h)),
            phi: (self.phi + right.h).max(right.phi),
            h: self.h + right.h,
        }
    }
}

/// Statistics of `b_1 ⊗ … ⊗ b_m`.
pub fn tensor_stats(factors: &[FactorStats]) -> Option<FactorStats> {
    let (first, rest) = factors.split_first()?;
    Some(rest.iter().fold(*first, |acc, &f| acc.tensor(f)))
}

/// Index of the factor that the operator acts on in `b_1 ⊗ … ⊗ b_m`, or
/// `None` when the whole product has `φ_i = -∞`.
pub fn tensor_route(factors: &[FactorStats], dir: Direction) -> Option<usize> {
    if factors.is_empty() {
        return None;
    }
    let mut prefix = Vec::with_capacity(factors.len());
    let mut acc = factors[0];
    prefix.push(acc);
    for f in &factors[1..] {
        acc = acc.tensor(*f);
        prefix.push(acc);
    }
    if !acc.phi.is_finite() {
        return None;
    }
    for k in (1..factors.len()).rev() {
        let left = prefix[k - 1];
        let right = factors[k];
        let goes_left = match dir {
            Direction::Raise => left.phi >= right.eps,
            Direction::Lower => left.phi > right.eps,
        };
        if !goes_left {
            return Some(k);
        }
    }
    Some(0)
}
