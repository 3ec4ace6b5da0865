//! Property suites shared by the command line tool and the acceptance tests.

use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::crystal::Direction;
use crate::embedding::{embed_default, transition};
use crate::graph::{
    check_axioms, check_morphism, tableau_graph, truncated_lusztig_graph, GenerateOptions,
    LusztigCrystal, Route, TableauCrystal,
};
use crate::lusztig::{
    apply_direct, apply_tensor, epsilon_direct, epsilon_tensor, LusztigDatum, Quiver,
};
use crate::rsk::{same_skew, skew_rsk, skew_rsk_inverse, BiwordMatrix};
use crate::tableaux::{
    antinormalize, insertion_tableau, Alphabet, Letter, Partition, Tableau, Word,
};

const KEPT_FAILURES: usize = 20;

/// Outcome of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: u64,
    pub failed: u64,
    /// The first few failures, in the order they were found.
    pub failures: Vec<String>,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl Report {
    fn new(suite: &str) -> Report {
        Report {
            suite: suite.to_string(),
            checks: 0,
            failed: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failed += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(what);
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} checks, {} failed, {:.2}s",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.checks,
            self.failed,
            self.elapsed.as_secs_f64()
        )?;
        for x in &self.failures {
            write!(f, "\n  {x}")?;
        }
        Ok(())
    }
}

fn timed(suite: &str, body: impl FnOnce(&mut Report)) -> Report {
    let start = Instant::now();
    let mut r = Report::new(suite);
    body(&mut r);
    r.elapsed = start.elapsed();
    r
}

/// Uniform datum with every coordinate at most `max`.
pub fn random_datum(rng: &mut impl Rng, q: Quiver, max: u32) -> LusztigDatum {
    let v = (0..q.num_roots()).map(|_| rng.gen_range(0..=max)).collect();
    LusztigDatum::from_vec(q, v).expect("length matches the quiver")
}

/// Every datum on `q` with coordinates at most `max`, in counting order.
pub fn all_data(q: Quiver, max: u32) -> impl Iterator<Item = LusztigDatum> {
    let roots = q.num_roots();
    let base = max as u64 + 1;
    (0..base.pow(roots as u32)).map(move |code| {
        let mut x = code;
        let v = (0..roots)
            .map(|_| {
                let d = (x % base) as u32;
                x /= base;
                d
            })
            .collect();
        LusztigDatum::from_vec(q, v).expect("length matches the quiver")
    })
}

fn random_alphabet(rng: &mut impl Rng, max: u32) -> Alphabet {
    let n = rng.gen_range(1..=max);
    if rng.gen_bool(0.5) {
        Alphabet::barred(n)
    } else {
        Alphabet::unbarred(n)
    }
}

/// A rotated straight-shape tableau: the antinormal form of the insertion
/// tableau of a random word.
pub fn random_rotated(rng: &mut impl Rng, alphabet: Alphabet, max_len: usize) -> Tableau {
    let letters = alphabet.letters();
    let len = rng.gen_range(0..=max_len);
    let w = Word::new((0..len).map(|_| *letters.choose(rng).unwrap()).collect());
    let s = insertion_tableau(alphabet, &w).expect("letters come from the alphabet");
    antinormalize(&s).expect("straight shape")
}

/// A matrix with `total` at most `max_total`, entries placed uniformly.
pub fn random_matrix(
    rng: &mut impl Rng,
    rows: Alphabet,
    cols: Alphabet,
    max_total: u32,
) -> BiwordMatrix {
    let (rl, cl) = (rows.letters(), cols.letters());
    let mut m = BiwordMatrix::zero(rows, cols);
    for _ in 0..rng.gen_range(0..=max_total) {
        let a: Letter = *rl.choose(rng).unwrap();
        let b: Letter = *cl.choose(rng).unwrap();
        m.add(a, b, 1).expect("letters come from the alphabets");
    }
    m
}

#[derive(Debug, Clone)]
pub struct RouteParams {
    pub exhaustive_n: usize,
    pub exhaustive_max: u32,
    pub samples: usize,
    pub max_n: usize,
    pub sample_max: u32,
    pub seed: u64,
}

impl Default for RouteParams {
    fn default() -> Self {
        RouteParams {
            exhaustive_n: 4,
            exhaustive_max: 2,
            samples: 10_000,
            max_n: 7,
            sample_max: 4,
            seed: 44,
        }
    }
}

fn compare_routes(rep: &mut Report, c: &LusztigDatum, i: usize, dir: Direction) {
    let a = apply_direct(c, i, dir).expect("index in range");
    let b = apply_tensor(c, i, dir).expect("index in range");
    rep.check(a == b, || {
        format!(
            "{c} ({}) i = {i} {dir:?}: direct {a:?}, tensor {b:?}",
            c.quiver()
        )
    });
}

/// The scan formulas on `B_Ω` against the tensor decomposition.
pub fn routes(p: &RouteParams) -> Report {
    timed("thm44", |rep| {
        let n = p.exhaustive_n;
        for r in 1..n {
            let q = Quiver::new(n, r).expect("valid sink");
            for c in all_data(q, p.exhaustive_max) {
                for i in 1..n {
                    rep.check(epsilon_direct(&c, i) == epsilon_tensor(&c, i), || {
                        format!("{c} ({q}) i = {i}: ε differs")
                    });
                    for dir in [Direction::Raise, Direction::Lower] {
                        compare_routes(rep, &c, i, dir);
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
        for _ in 0..p.samples {
            let n = rng.gen_range(2..=p.max_n);
            let q = Quiver::new(n, rng.gen_range(1..n)).expect("valid sink");
            let c = random_datum(&mut rng, q, p.sample_max);
            let i = rng.gen_range(1..n);
            let dir = if rng.gen_bool(0.5) {
                Direction::Raise
            } else {
                Direction::Lower
            };
            compare_routes(rep, &c, i, dir);
        }
    })
}

#[derive(Debug, Clone)]
pub struct EmbeddingParams {
    pub n: usize,
    pub max_size: u32,
}

impl Default for EmbeddingParams {
    fn default() -> Self {
        EmbeddingParams { n: 4, max_size: 8 }
    }
}

/// `S ↦ c(S)` is an embedding `B(λ) ⊗ T_{-λ} → B_Ω` for every `λ` and sink.
pub fn embeddings(p: &EmbeddingParams) -> Report {
    timed("thm54", |rep| {
        let n = p.n;
        let tc = TableauCrystal { n };
        for size in 0..=p.max_size {
            for lambda in Partition::all_of_size(size, n) {
                let g = match tableau_graph(n, &lambda, &GenerateOptions::default()) {
                    Ok(g) => g,
                    Err(e) => {
                        rep.fail(format!("B({:?}): {e}", lambda.parts()));
                        continue;
                    }
                };
                let shift: Vec<i64> = lambda
                    .padded(n)
                    .parts()
                    .iter()
                    .map(|&x| -(x as i64))
                    .collect();
                for r in 1..n {
                    let q = Quiver::new(n, r).expect("valid sink");
                    let lc = LusztigCrystal {
                        quiver: q,
                        route: Route::Direct,
                    };
                    let v = check_morphism(&tc, &g, &lc, &shift, |s| embed_default(s, q));
                    rep.checks += g.len() as u64;
                    for x in v {
                        rep.fail(format!("λ = {:?}, {q}: {x}", lambda.parts()));
                    }
                }
            }
        }
    })
}

#[derive(Debug, Clone)]
pub struct RskParams {
    pub samples: usize,
    pub max_alphabet: u32,
    pub max_insertions: u32,
    pub seed: u64,
}

impl Default for RskParams {
    fn default() -> Self {
        RskParams {
            samples: 10_000,
            max_alphabet: 5,
            max_insertions: 8,
            seed: 7,
        }
    }
}

fn random_pair(rng: &mut impl Rng, p: &RskParams) -> (Tableau, BiwordMatrix) {
    let rows = random_alphabet(rng, p.max_alphabet);
    let cols = random_alphabet(rng, p.max_alphabet);
    let t = random_rotated(rng, rows, 2 * p.max_alphabet as usize);
    let m = random_matrix(rng, rows, cols, p.max_insertions);
    (t, m)
}

/// `κ^{-1} ∘ κ = id` and `κ ∘ κ^{-1} = id`.
pub fn rsk(p: &RskParams) -> Report {
    timed("rsk", |rep| {
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
        for _ in 0..p.samples {
            let (t, m) = random_pair(&mut rng, p);
            match skew_rsk(&t, &m).and_then(|(pt, qt)| skew_rsk_inverse(&pt, &qt, m.row_alphabet()))
            {
                Ok((t2, m2)) => rep.check(same_skew(&t, &t2) && m == m2, || {
                    format!("κ^-1 κ moved {t:?} / {m:?}")
                }),
                Err(e) => rep.fail(format!("{t:?} / {m:?}: {e}")),
            }
            // a fresh pair in the image of κ
            let (t, m) = random_pair(&mut rng, p);
            let (pt, qt) = skew_rsk(&t, &m).expect("valid input");
            match skew_rsk_inverse(&pt, &qt, m.row_alphabet())
                .and_then(|(t2, m2)| skew_rsk(&t2, &m2))
            {
                Ok((p2, q2)) => rep.check(same_skew(&pt, &p2) && same_skew(&qt, &q2), || {
                    format!("κ κ^-1 moved {pt:?} / {qt:?}")
                }),
                Err(e) => rep.fail(format!("{pt:?} / {qt:?}: {e}")),
            }
        }
    })
}

#[derive(Debug, Clone)]
pub struct TransitionParams {
    pub max_n: usize,
    /// Random data per `n` for the identity, composition and weight checks.
    pub data_per_n: usize,
    pub max_coordinate: u32,
    /// Sampled `(datum, i)` pairs for the operator commutation check.
    pub operator_samples: usize,
    pub seed: u64,
}

impl Default for TransitionParams {
    fn default() -> Self {
        TransitionParams {
            max_n: 5,
            data_per_n: 12,
            max_coordinate: 3,
            operator_samples: 1_000,
            seed: 11,
        }
    }
}

/// Coherence of the transition maps between single-sink quivers.
pub fn transitions(p: &TransitionParams) -> Report {
    timed("transition", |rep| {
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
        for n in 2..=p.max_n {
            for _ in 0..p.data_per_n {
                let r1 = rng.gen_range(1..n);
                let q1 = Quiver::new(n, r1).expect("valid sink");
                let c = random_datum(&mut rng, q1, p.max_coordinate);
                rep.check(transition(&c, q1).as_ref() == Ok(&c), || {
                    format!("{c} ({q1}): identity")
                });
                for r2 in 1..n {
                    let q2 = Quiver::new(n, r2).expect("valid sink");
                    let c2 = match transition(&c, q2) {
                        Ok(x) => x,
                        Err(e) => {
                            rep.fail(format!("{c} ({q1}) → {q2}: {e}"));
                            continue;
                        }
                    };
                    rep.check(c2.weight() == c.weight(), || {
                        format!("{c} ({q1}) → {q2}: weight changed")
                    });
                    for r3 in 1..n {
                        let q3 = Quiver::new(n, r3).expect("valid sink");
                        let direct = transition(&c, q3);
                        let composed = transition(&c2, q3);
                        rep.check(direct.is_ok() && direct == composed, || {
                            format!("{c} ({q1}) → {q2} → {q3}: {composed:?} vs {direct:?}")
                        });
                    }
                }
            }
        }
        for _ in 0..p.operator_samples {
            let n = rng.gen_range(2..=p.max_n);
            let q1 = Quiver::new(n, rng.gen_range(1..n)).expect("valid sink");
            let q2 = Quiver::new(n, rng.gen_range(1..n)).expect("valid sink");
            let c = random_datum(&mut rng, q1, p.max_coordinate);
            let i = rng.gen_range(1..n);
            for dir in [Direction::Raise, Direction::Lower] {
                let lhs = apply_direct(&c, i, dir)
                    .expect("index in range")
                    .map(|x| transition(&x, q2));
                let rhs =
                    transition(&c, q2).map(|y| apply_direct(&y, i, dir).expect("index in range"));
                let ok = match (lhs, rhs) {
                    (None, Ok(None)) => true,
                    (Some(Ok(a)), Ok(Some(b))) => a == b,
                    _ => false,
                };
                rep.check(ok, || {
                    format!("{c} ({q1}) → {q2}: {dir:?}_{i} does not commute")
                });
            }
        }
    })
}

#[derive(Debug, Clone)]
pub struct AxiomParams {
    pub n: usize,
    pub max_size: u32,
    pub max_n_lusztig: usize,
    pub depth: u32,
}

impl Default for AxiomParams {
    fn default() -> Self {
        AxiomParams {
            n: 4,
            max_size: 8,
            max_n_lusztig: 4,
            depth: 4,
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, t| acc * (n - k + t) / t)
}

/// Crystal axioms on the generated graphs, and their sizes.
pub fn axioms(p: &AxiomParams) -> Report {
    timed("axioms", |rep| {
        let tc = TableauCrystal { n: p.n };
        for size in 0..=p.max_size {
            for lambda in Partition::all_of_size(size, p.n) {
                let g = match tableau_graph(p.n, &lambda, &GenerateOptions::default()) {
                    Ok(g) => g,
                    Err(e) => {
                        rep.fail(format!("B({:?}): {e}", lambda.parts()));
                        continue;
                    }
                };
                let expected =
                    Tableau::all_semistandard(Alphabet::unbarred(p.n as u32), &lambda).len();
                rep.check(g.len() == expected, || {
                    format!(
                        "B({:?}) has {} nodes, expected {expected}",
                        lambda.parts(),
                        g.len()
                    )
                });
                rep.checks += g.len() as u64;
                for v in check_axioms(&tc, &g) {
                    rep.fail(format!("B({:?}): {v}", lambda.parts()));
                }
            }
        }
        for n in 2..=p.max_n_lusztig {
            for r in 1..n {
                let q = Quiver::new(n, r).expect("valid sink");
                for route in [Route::Direct, Route::Tensor] {
                    let lc = LusztigCrystal { quiver: q, route };
                    let g = match truncated_lusztig_graph(&lc, p.depth, &GenerateOptions::default())
                    {
                        Ok(g) => g,
                        Err(e) => {
                            rep.fail(format!("{q} {route:?}: {e}"));
                            continue;
                        }
                    };
                    let roots = q.num_roots() as u64;
                    let expected = binomial(p.depth as u64 + roots, roots) as usize;
                    rep.check(g.len() == expected, || {
                        format!(
                            "{q} {route:?}: {} nodes at depth {}, expected {expected}",
                            g.len(),
                            p.depth
                        )
                    });
                    rep.checks += g.len() as u64;
                    for v in check_axioms(&lc, &g) {
                        rep.fail(format!("{q} {route:?}: {v}"));
                    }
                }
            }
        }
    })
}

/// Names accepted by [`run`].
pub const SUITES: [&str; 5] = ["thm44", "thm54", "rsk", "transition", "axioms"];

/// Runs one named suite with default parameters, or all of them for `"all"`.
pub fn run(name: &str) -> Option<Vec<Report>> {
    let one = |s: &str| -> Option<Report> {
        Some(match s {
            "thm44" => routes(&RouteParams::default()),
            "thm54" => embeddings(&EmbeddingParams::default()),
            "rsk" => rsk(&RskParams::default()),
            "transition" => transitions(&TransitionParams::default()),
            "axioms" => axioms(&AxiomParams::default()),
            _ => return None,
        })
    };
    if name == "all" {
        SUITES.iter().map(|s| one(s)).collect()
    } else {
        one(name).map(|r| vec![r])
    }
}
