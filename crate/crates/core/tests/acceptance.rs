//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! report is printed on every `cargo test`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lusztig_core::embedding::{c_minus, c_plus, embed, split_tableau, EmbeddingContext};
use lusztig_core::lusztig::{split, LusztigDatum, Quiver};
use lusztig_core::tableaux::{Alphabet, Letter, Partition, Tableau};
use lusztig_core::verify::{
    self, AxiomParams, EmbeddingParams, Report, RouteParams, RskParams, TransitionParams,
};

type Check = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Check);

fn worked_example() -> Tableau {
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

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn from_report(r: Report) -> Check {
    if r.passed() {
        Ok(format!("{} checks", r.checks))
    } else {
        Err(r.to_string())
    }
}

// Coordinates listed as c_12, c_13, …, c_16, c_23, …, c_56.
const C_PLUS: [u32; 15] = [2, 1, 0, 0, 0, 2, 0, 1, 1, 3, 0, 0, 2, 1, 2];
const C_MINUS: [u32; 15] = [0, 1, 0, 0, 2, 1, 0, 1, 0, 2, 0, 0, 1, 1, 1];

fn criterion_1() -> Check {
    let c = c_plus(&worked_example()).map_err(|e| e.to_string())?;
    expect("c^+(S)", c.as_slice(), &C_PLUS[..])?;
    Ok("15 coordinates exact".into())
}

fn criterion_2() -> Check {
    for d in [6, 7, 10] {
        let c = c_minus(&worked_example(), d).map_err(|e| e.to_string())?;
        expect(&format!("c_-(S), d = {d}"), c.as_slice(), &C_MINUS[..])?;
    }
    Ok("15 coordinates exact for d = 6, 7, 10".into())
}

fn criterion_3() -> Check {
    let s = worked_example();
    let q = Quiver::new(6, 3).unwrap();
    let ctx = EmbeddingContext::new(s.shape().outer.clone(), q, 6).map_err(|e| e.to_string())?;
    let sp = split_tableau(&s, &ctx).map_err(|e| e.to_string())?;
    let rows = |t: &Tableau| -> Vec<Vec<i32>> {
        t.rows()
            .iter()
            .map(|r| r.iter().map(|l| l.0).collect())
            .collect()
    };
    expect("S^+", rows(&sp.s_plus), vec![vec![5, 5, 6], vec![6, 6]])?;
    expect("S^-", rows(&sp.s_minus), vec![vec![-3, -2, -1], vec![-2]])?;
    expect(
        "P'",
        rows(&sp.p_prime),
        vec![vec![1, 1, 1, 2, 2, 3], vec![2, 3, 3]],
    )?;
    expect(
        "P",
        rows(&sp.p).into_iter().filter(|r| !r.is_empty()).collect(),
        vec![vec![-3, -3, -2], vec![-3, -2, -2, -1, -1, -1]],
    )?;
    // Q keeps the empty rows of the r-row box; compare without them
    let sh = sp.q.shape();
    expect(
        "sh(Q)",
        (sh.rotated, sh.outer.trimmed(), sh.inner.trimmed()),
        (
            true,
            Partition::new(vec![6, 3]).unwrap(),
            Partition::new(vec![3, 1]).unwrap(),
        ),
    )?;
    let q_rows: Vec<Vec<i32>> = rows(&sp.q).into_iter().filter(|r| !r.is_empty()).collect();
    expect("Q", q_rows, vec![vec![5, 6], vec![4, 4, 4]])?;
    let dense = sp.m.dense(
        &[Letter(-3), Letter(-2), Letter(-1)],
        &[Letter(4), Letter(5), Letter(6)],
    );
    expect(
        "M",
        dense,
        vec![vec![0, 1, 1], vec![1, 0, 0], vec![2, 0, 0]],
    )?;

    let c = embed(&s, q, 6).map_err(|e| e.to_string())?;
    let parts = split(&c);
    let nz = |d: &LusztigDatum| d.nonzero().collect::<Vec<_>>();
    expect(
        "c^J",
        nz(&parts.cj),
        vec![(1, 4, 2), (2, 4, 1), (3, 5, 1), (3, 6, 1)],
    )?;
    expect("c_J1", nz(&parts.cj1), vec![(1, 3, 1), (2, 3, 1)])?;
    expect(
        "c_J2",
        nz(&parts.cj2),
        vec![(4, 5, 2), (4, 6, 1), (5, 6, 2)],
    )?;
    Ok("S^+, S^-, M, P', P, Q, c^J, c_J1, c_J2 exact".into())
}

fn criterion_4() -> Check {
    from_report(verify::routes(&RouteParams::default()))
}

fn criterion_5() -> Check {
    from_report(verify::embeddings(&EmbeddingParams::default()))
}

fn criterion_6() -> Check {
    from_report(verify::rsk(&RskParams::default()))
}

fn criterion_7() -> Check {
    from_report(verify::transitions(&TransitionParams::default()))
}

fn criterion_8() -> Check {
    from_report(verify::axioms(&AxiomParams::default()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            1,
            "c^+ of the n = 6 worked example",
            Duration::from_secs(1),
            criterion_1,
        ),
        (
            2,
            "c_- of the n = 6 worked example, d-independent",
            Duration::from_secs(1),
            criterion_2,
        ),
        (
            3,
            "five-step split at r = 3",
            Duration::from_secs(1),
            criterion_3,
        ),
        (
            4,
            "direct and tensor operators agree",
            Duration::from_secs(60),
            criterion_4,
        ),
        (
            5,
            "tableau crystals embed into B(∞) at every sink",
            Duration::from_secs(120),
            criterion_5,
        ),
        (
            6,
            "skew RSK round trips",
            Duration::from_secs(30),
            criterion_6,
        ),
        (
            7,
            "transition maps are coherent",
            Duration::from_secs(60),
            criterion_7,
        ),
        (
            8,
            "crystal axioms and node counts",
            Duration::from_secs(60),
            criterion_8,
        ),
    ];
    let mut all = true;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; too slow")),
            Err(e) => (false, e),
        };
        all &= ok;
        println!(
            "criterion {id} {}: {name} ({detail}; {:.3}s, limit {}s)",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
