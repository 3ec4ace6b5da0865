//! Finite crystal graphs: breadth-first generation, axiom checks, morphism
//! checks and export.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::{self, Debug, Write as _};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::crystal::{pairing, simple_root, CrystalStats, Direction, Ext};
use crate::error::{Error, Result};
use crate::lusztig::{
    apply_direct, apply_tensor, epsilon_direct, epsilon_tensor, LusztigDatum, Quiver,
};
use crate::tableaux::{Alphabet, Partition, Tableau};

pub const DEFAULT_NODE_LIMIT: usize = 1_000_000;

/// A crystal of type `A_{n-1}` given by its operators.
pub trait Crystal {
    type Element: Clone + Eq + Hash + Debug;

    /// Size of the weight vectors; indices run over `1..n`.
    fn n(&self) -> usize;
    fn stats(&self, b: &Self::Element) -> CrystalStats;
    fn apply(&self, b: &Self::Element, i: usize, dir: Direction) -> Option<Self::Element>;
    /// Canonical serialized form, used for deduplication-independent output.
    fn label(&self, b: &Self::Element) -> String;
}

/// `B(λ)` realized on semistandard tableaux over `[n]`.
#[derive(Debug, Clone, Copy)]
pub struct TableauCrystal {
    pub n: usize,
}

impl Crystal for TableauCrystal {
    type Element = Tableau;

    fn n(&self) -> usize {
        self.n
    }

    fn stats(&self, b: &Tableau) -> CrystalStats {
        b.stats()
    }

    fn apply(&self, b: &Tableau, i: usize, dir: Direction) -> Option<Tableau> {
        b.apply(i, dir)
    }

    fn label(&self, b: &Tableau) -> String {
        b.to_string()
    }
}

/// Which implementation of the operators on `B_Ω` to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Route {
    Direct,
    Tensor,
}

/// `B_Ω ≅ B(∞)` on Lusztig data of a single-sink quiver.
#[derive(Debug, Clone, Copy)]
pub struct LusztigCrystal {
    pub quiver: Quiver,
    pub route: Route,
}

impl Crystal for LusztigCrystal {
    type Element = LusztigDatum;

    fn n(&self) -> usize {
        self.quiver.n
    }

    fn stats(&self, c: &LusztigDatum) -> CrystalStats {
        let wt = c.weight();
        let eps: Vec<Ext> = (1..self.quiver.n)
            .map(|i| {
                Ext::Fin(match self.route {
                    Route::Direct => epsilon_direct(c, i),
                    Route::Tensor => epsilon_tensor(c, i),
                })
            })
            .collect();
        let phi = (1..self.quiver.n)
            .map(|i| eps[i - 1] + pairing(&wt, i))
            .collect();
        CrystalStats { wt, eps, phi }
    }

    fn apply(&self, c: &LusztigDatum, i: usize, dir: Direction) -> Option<LusztigDatum> {
        let r = match self.route {
            Route::Direct => apply_direct(c, i, dir),
            Route::Tensor => apply_tensor(c, i, dir),
        };
        r.expect("index in range")
    }

    fn label(&self, c: &LusztigDatum) -> String {
        let parts: Vec<String> = c.nonzero().map(|(i, j, v)| format!("{i}{j}:{v}")).collect();
        format!("({})", parts.join(","))
    }
}

/// The subgraph reachable from `highest` by lowering operators.
#[derive(Debug, Clone)]
pub struct CrystalGraph<E> {
    pub nodes: Vec<E>,
    /// `(source, i, target)` for `f_i(source) = target`.
    pub edges: Vec<(usize, usize, usize)>,
    pub highest: usize,
    index: HashMap<E, usize>,
}

impl<E: Clone + Eq + Hash> CrystalGraph<E> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn node_set(&self) -> HashSet<E> {
        self.nodes.iter().cloned().collect()
    }
}

/// Traversal options for [`generate`].
#[derive(Debug, Clone)]
pub struct GenerateOptions {
    pub node_limit: usize,
    /// Order in which the lowering operators are tried at each node.
    pub index_order: Option<Vec<usize>>,
    /// Use a stack instead of a queue.
    pub depth_first: bool,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        GenerateOptions {
            node_limit: DEFAULT_NODE_LIMIT,
            index_order: None,
            depth_first: false,
        }
    }
}

/// Closure of `start` under the lowering operators, keeping only elements
/// accepted by `admit` (use `|_| true` for finite crystals).
pub fn generate<C: Crystal>(
    crystal: &C,
    start: C::Element,
    admit: impl Fn(&C::Element) -> bool,
    opts: &GenerateOptions,
) -> Result<CrystalGraph<C::Element>> {
    let order: Vec<usize> = opts
        .index_order
        .clone()
        .unwrap_or_else(|| (1..crystal.n()).collect());
    let mut g = CrystalGraph {
        nodes: vec![start.clone()],
        edges: Vec::new(),
        highest: 0,
        index: HashMap::from([(start, 0)]),
    };
    let mut work = VecDeque::from([0usize]);
    while let Some(u) = if opts.depth_first {
        work.pop_back()
    } else {
        work.pop_front()
    } {
        for &i in &order {
            let Some(v) = crystal.apply(&g.nodes[u], i, Direction::Lower) else {
                continue;
            };
            if !admit(&v) {
                continue;
            }
            let id = match g.index.get(&v) {
                Some(&id) => id,
                None => {
                    if g.nodes.len() >= opts.node_limit {
                        return Err(Error::NodeLimit(opts.node_limit));
                    }
                    let id = g.nodes.len();
                    g.index.insert(v.clone(), id);
                    g.nodes.push(v);
                    work.push_back(id);
                    id
                }
            };
            g.edges.push((u, i, id));
        }
    }
    g.edges.sort_unstable();
    Ok(g)
}

/// `B(λ)` over `[n]`, generated from its highest weight tableau.
pub fn tableau_graph(
    n: usize,
    lambda: &Partition,
    opts: &GenerateOptions,
) -> Result<CrystalGraph<Tableau>> {
    let hw = Tableau::highest_weight(Alphabet::unbarred(n as u32), lambda)?;
    generate(&TableauCrystal { n }, hw, |_| true, opts)
}

/// The part of `B_Ω` with total coordinate sum at most `depth`.
pub fn truncated_lusztig_graph(
    crystal: &LusztigCrystal,
    depth: u32,
    opts: &GenerateOptions,
) -> Result<CrystalGraph<LusztigDatum>> {
    let zero = LusztigDatum::zero(crystal.quiver);
    generate(crystal, zero, |c| c.total() <= depth, opts)
}

/// One failed check, attached to the node where it was observed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub node: String,
    pub index: Option<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{} (i = {i}): {}", self.node, self.message),
            None => write!(f, "{}: {}", self.node, self.message),
        }
    }
}

fn add_weights(a: &[i64], b: &[i64], sign: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + sign * y).collect()
}

/// The five crystal axioms, checked at every node of `g` (operators are
/// evaluated even when their result lies outside the graph).
pub fn check_axioms<C: Crystal>(crystal: &C, g: &CrystalGraph<C::Element>) -> Vec<Violation> {
    let n = crystal.n();
    let mut out = Vec::new();
    for b in &g.nodes {
        let sb = crystal.stats(b);
        let mut bad = |i: Option<usize>, message: String| {
            out.push(Violation {
                node: crystal.label(b),
                index: i,
                message,
            })
        };
        if sb.wt.len() != n || sb.eps.len() != n - 1 || sb.phi.len() != n - 1 {
            bad(None, "statistics have the wrong length".into());
            continue;
        }
        if !sb.satisfies_weight_axiom() {
            bad(None, "φ_i ≠ ⟨wt, h_i⟩ + ε_i".into());
        }
        for i in 1..n {
            let alpha = simple_root(n, i);
            let (eps, phi) = (sb.eps[i - 1], sb.phi[i - 1]);
            let e = crystal.apply(b, i, Direction::Raise);
            let f = crystal.apply(b, i, Direction::Lower);
            if phi == Ext::NegInf && (e.is_some() || f.is_some()) {
                bad(Some(i), "φ_i = -∞ but an operator acts".into());
            }
            if let Some(e) = &e {
                let se = crystal.stats(e);
                if se.wt != add_weights(&sb.wt, &alpha, 1) {
                    bad(Some(i), "wt(e_i b) ≠ wt(b) + α_i".into());
                }
                if se.eps[i - 1] != eps + (-1) || se.phi[i - 1] != phi + 1 {
                    bad(Some(i), "e_i does not shift (ε_i, φ_i) by (-1, +1)".into());
                }
                if crystal.apply(e, i, Direction::Lower).as_ref() != Some(b) {
                    bad(Some(i), "f_i e_i b ≠ b".into());
                }
            } else if eps.finite().is_some_and(|v| v > 0) {
                bad(Some(i), "e_i b = 0 although ε_i(b) > 0".into());
            }
            if let Some(f) = &f {
                let sf = crystal.stats(f);
                if sf.wt != add_weights(&sb.wt, &alpha, -1) {
                    bad(Some(i), "wt(f_i b) ≠ wt(b) - α_i".into());
                }
                if sf.eps[i - 1] != eps + 1 || sf.phi[i - 1] != phi + (-1) {
                    bad(Some(i), "f_i does not shift (ε_i, φ_i) by (+1, -1)".into());
                }
                if crystal.apply(f, i, Direction::Raise).as_ref() != Some(b) {
                    bad(Some(i), "e_i f_i b ≠ b".into());
                }
            }
        }
    }
    out
}

/// Checks that `map` is a strict embedding `C1 ⊗ T_shift → C2` on the nodes
/// of `g`: weights shift by `shift`, `ε_i` is preserved, `φ_i` shifts by
/// `⟨shift, h_i⟩`, the operators commute wherever they act in `C1`, and the
/// map is injective.
pub fn check_morphism<C1: Crystal, C2: Crystal>(
    c1: &C1,
    g: &CrystalGraph<C1::Element>,
    c2: &C2,
    shift: &[i64],
    map: impl Fn(&C1::Element) -> Result<C2::Element>,
) -> Vec<Violation> {
    let n = c1.n();
    let mut out = Vec::new();
    let mut images: Vec<Option<C2::Element>> = Vec::with_capacity(g.len());
    let mut seen: HashMap<C2::Element, usize> = HashMap::new();
    for (k, b) in g.nodes.iter().enumerate() {
        match map(b) {
            Ok(m) => {
                if let Some(&other) = seen.get(&m) {
                    out.push(Violation {
                        node: c1.label(b),
                        index: None,
                        message: format!("same image as {}", c1.label(&g.nodes[other])),
                    });
                } else {
                    seen.insert(m.clone(), k);
                }
                images.push(Some(m));
            }
            Err(e) => {
                out.push(Violation {
                    node: c1.label(b),
                    index: None,
                    message: format!("map failed: {e}"),
                });
                images.push(None);
            }
        }
    }
    let image_of = |b: &C1::Element| -> Option<C2::Element> {
        match g.index_of(b) {
            Some(k) => images[k].clone(),
            None => map(b).ok(),
        }
    };
    for (k, b) in g.nodes.iter().enumerate() {
        let Some(m) = &images[k] else { continue };
        let (s1, s2) = (c1.stats(b), c2.stats(m));
        let mut bad = |i: Option<usize>, message: String| {
            out.push(Violation {
                node: c1.label(b),
                index: i,
                message,
            })
        };
        if s2.wt != add_weights(&s1.wt, shift, 1) {
            bad(None, format!("weight {:?} maps to {:?}", s1.wt, s2.wt));
        }
        for i in 1..n {
            if s1.eps[i - 1] != s2.eps[i - 1] {
                bad(
                    Some(i),
                    format!("ε_i {} maps to {}", s1.eps[i - 1], s2.eps[i - 1]),
                );
            }
            if s1.phi[i - 1] + pairing(shift, i) != s2.phi[i - 1] {
                bad(
                    Some(i),
                    format!("φ_i {} maps to {}", s1.phi[i - 1], s2.phi[i - 1]),
                );
            }
            for dir in [Direction::Raise, Direction::Lower] {
                if let Some(b2) = c1.apply(b, i, dir) {
                    let lhs = image_of(&b2);
                    let rhs = c2.apply(m, i, dir);
                    if lhs != rhs {
                        bad(Some(i), format!("{dir:?} does not commute with the map"));
                    }
                }
            }
        }
    }
    out
}

/// Graphviz rendering; node labels carry the element and its weight.
pub fn to_dot<C: Crystal>(crystal: &C, g: &CrystalGraph<C::Element>) -> String {
    let mut s = String::from("digraph crystal {\n");
    for (k, b) in g.nodes.iter().enumerate() {
        let wt = crystal.stats(b).wt;
        let label = format!("{} {:?}", crystal.label(b), wt).replace('"', "\\\"");
        let _ = writeln!(s, "  n{k} [label=\"{label}\"];");
    }
    for &(u, i, v) in &g.edges {
        let _ = writeln!(s, "  n{u} -> n{v} [label=\"{i}\"];");
    }
    s.push_str("}\n");
    s
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphJson<E> {
    pub nodes: Vec<NodeJson<E>>,
    pub edges: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeJson<E> {
    pub element: E,
    pub weight: Vec<i64>,
}

pub fn to_json<C: Crystal>(crystal: &C, g: &CrystalGraph<C::Element>) -> GraphJson<C::Element> {
    GraphJson {
        nodes: g
            .nodes
            .iter()
            .map(|b| NodeJson {
                element: b.clone(),
                weight: crystal.stats(b).wt,
            })
            .collect(),
        edges: g.edges.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_tableau_graphs() {
        let g = tableau_graph(2, &p(&[1]), &GenerateOptions::default()).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.edges, vec![(0, 1, 1)]);
        let g = tableau_graph(3, &p(&[1]), &GenerateOptions::default()).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.edges, vec![(0, 1, 1), (1, 2, 2)]);
    }

    #[test]
    fn node_counts_match_enumeration() {
        for lambda in [p(&[2, 1]), p(&[3, 1, 1]), p(&[2, 2])] {
            let g = tableau_graph(4, &lambda, &GenerateOptions::default()).unwrap();
            let direct = Tableau::all_semistandard(Alphabet::unbarred(4), &lambda);
            assert_eq!(g.len(), direct.len());
            assert!(check_axioms(&TableauCrystal { n: 4 }, &g).is_empty());
        }
    }

    #[test]
    fn traversal_order_does_not_matter() {
        let lambda = p(&[3, 2]);
        let a = tableau_graph(4, &lambda, &GenerateOptions::default()).unwrap();
        let opts = GenerateOptions {
            index_order: Some(vec![3, 1, 2]),
            depth_first: true,
            ..Default::default()
        };
        let b = tableau_graph(4, &lambda, &opts).unwrap();
        assert_eq!(a.node_set(), b.node_set());
        assert_eq!(a.edges.len(), b.edges.len());
    }

    #[test]
    fn truncated_lusztig_graph_size() {
        // every datum with Σ c ≤ 2 on n = 3 is reachable: C(2 + 3, 3) = 10
        let q = Quiver::plus(3).unwrap();
        for route in [Route::Direct, Route::Tensor] {
            let cr = LusztigCrystal { quiver: q, route };
            let g = truncated_lusztig_graph(&cr, 2, &GenerateOptions::default()).unwrap();
            assert_eq!(g.len(), 10);
            assert!(check_axioms(&cr, &g).is_empty());
        }
    }

    #[test]
    fn node_limit_is_enforced() {
        let opts = GenerateOptions {
            node_limit: 3,
            ..Default::default()
        };
        assert_eq!(
            tableau_graph(3, &p(&[2, 1]), &opts).unwrap_err(),
            Error::NodeLimit(3)
        );
    }

    #[test]
    fn identity_and_corrupted_maps() {
        let cr = TableauCrystal { n: 3 };
        let g = tableau_graph(3, &p(&[2, 1]), &GenerateOptions::default()).unwrap();
        let zero = vec![0; 3];
        assert!(check_morphism(&cr, &g, &cr, &zero, |b| Ok(b.clone())).is_empty());
        let victim = g.nodes[3].clone();
        let other = g.nodes[4].clone();
        let report = check_morphism(&cr, &g, &cr, &zero, |b| {
            Ok(if *b == victim {
                other.clone()
            } else {
                b.clone()
            })
        });
        assert!(report.iter().any(|v| v.node == cr.label(&victim)));
    }

    #[test]
    fn exports() {
        let cr = TableauCrystal { n: 2 };
        let g = tableau_graph(2, &p(&[1]), &GenerateOptions::default()).unwrap();
        let dot = to_dot(&cr, &g);
        assert!(dot.contains("n0 -> n1 [label=\"1\"]"));
        let json = serde_json::to_value(to_json(&cr, &g)).unwrap();
        assert_eq!(json["edges"], serde_json::json!([[0, 1, 1]]));
        assert_eq!(json["nodes"].as_array().unwrap().len(), 2);
    }
}
