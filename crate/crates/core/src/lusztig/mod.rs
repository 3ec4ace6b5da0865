//! Lusztig data of single-sink quivers and the crystal `B_Ω`.

pub mod datum;
pub mod direct;
pub mod quiver;
pub mod tensor;

pub use datum::{merge, split, DatumJson, DatumSplit, LusztigDatum};
pub use direct::{apply_direct, apply_minus, apply_plus, epsilon_direct, OperatorScan};
pub use quiver::{Quiver, Root};
pub use tensor::{apply_tensor, epsilon_tensor};

use crate::crystal::{CrystalStats, Ext};

/// Weight and string lengths of `c` at every index.
pub fn stats(c: &LusztigDatum) -> CrystalStats {
    let wt = c.weight();
    let n = c.n();
    let eps: Vec<Ext> = (1..n).map(|i| Ext::Fin(epsilon_direct(c, i))).collect();
    let phi = (1..n)
        .map(|i| eps[i - 1] + crate::crystal::pairing(&wt, i))
        .collect();
    CrystalStats { wt, eps, phi }
}
