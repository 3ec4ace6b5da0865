use lusztig_core::embedding::embed_default;
use lusztig_core::graph::{
    check_axioms, check_morphism, generate, tableau_graph, to_dot, to_json,
    truncated_lusztig_graph, GenerateOptions, LusztigCrystal, Route, TableauCrystal,
};
use lusztig_core::lusztig::{LusztigDatum, Quiver};
use lusztig_core::tableaux::{Alphabet, Partition, Tableau};
use lusztig_core::Error;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn smallest_graphs() {
    let g = tableau_graph(2, &p(&[1]), &GenerateOptions::default()).unwrap();
    let json = serde_json::to_value(to_json(&TableauCrystal { n: 2 }, &g)).unwrap();
    assert_eq!(json["nodes"].as_array().unwrap().len(), 2);
    assert_eq!(json["edges"], serde_json::json!([[0, 1, 1]]));

    let g = tableau_graph(3, &p(&[1]), &GenerateOptions::default()).unwrap();
    assert_eq!(g.edges, vec![(0, 1, 1), (1, 2, 2)]);
    let dot = to_dot(&TableauCrystal { n: 3 }, &g);
    assert!(dot.contains("n0 -> n1 [label=\"1\"]") && dot.contains("n1 -> n2 [label=\"2\"]"));
}

#[test]
fn truncated_b_infinity_has_binomial_size() {
    // all data with Σ c ≤ D: C(D + N, N) with N positive roots
    for n in 2..=4 {
        for r in 1..n {
            let cr = LusztigCrystal {
                quiver: Quiver::new(n, r).unwrap(),
                route: Route::Tensor,
            };
            let g = truncated_lusztig_graph(&cr, 3, &GenerateOptions::default()).unwrap();
            let roots = n * (n - 1) / 2;
            let expected = (1..=roots).fold(1, |acc, k| acc * (3 + k) / k);
            assert_eq!(g.len(), expected, "n = {n}, r = {r}");
            assert!(g.nodes.iter().all(|c| c.total() <= 3));
        }
    }
}

#[test]
fn embedding_is_a_morphism_and_corruption_is_caught() {
    let lambda = p(&[2, 1]);
    let n = 4;
    let tc = TableauCrystal { n };
    let g = tableau_graph(n, &lambda, &GenerateOptions::default()).unwrap();
    let shift = vec![-2, -1, 0, 0];
    for r in 1..n {
        let q = Quiver::new(n, r).unwrap();
        let lc = LusztigCrystal {
            quiver: q,
            route: Route::Direct,
        };
        assert!(check_morphism(&tc, &g, &lc, &shift, |s| embed_default(s, q)).is_empty());

        // send one tableau to the zero datum
        let victim = g.nodes[5].clone();
        let report = check_morphism(&tc, &g, &lc, &shift, |s| {
            if *s == victim {
                Ok(LusztigDatum::zero(q))
            } else {
                embed_default(s, q)
            }
        });
        assert!(!report.is_empty());
        assert!(report.iter().any(|v| v.node == victim.to_string()));
    }
}

#[test]
fn wrong_shift_is_reported() {
    let n = 3;
    let tc = TableauCrystal { n };
    let g = tableau_graph(n, &p(&[1]), &GenerateOptions::default()).unwrap();
    let q = Quiver::plus(n).unwrap();
    let lc = LusztigCrystal {
        quiver: q,
        route: Route::Direct,
    };
    let report = check_morphism(&tc, &g, &lc, &[0, 0, 0], |s| embed_default(s, q));
    // the true shift is -ε_1: every node fails the weight check and φ_1
    assert_eq!(report.len(), 2 * g.len());
    assert!(report
        .iter()
        .all(|v| v.index.is_none() || v.index == Some(1)));
}

#[test]
fn axioms_hold_on_tableau_crystals_over_barred_letters() {
    // B(λ) over [n̄] is generated from its own highest weight element
    let alphabet = Alphabet::barred(3);
    let hw = Tableau::highest_weight(alphabet, &p(&[2, 1])).unwrap();
    let g = generate(
        &TableauCrystal { n: 3 },
        hw,
        |_| true,
        &GenerateOptions::default(),
    )
    .unwrap();
    assert_eq!(g.len(), 8);
    assert!(check_axioms(&TableauCrystal { n: 3 }, &g).is_empty());
}

#[test]
fn node_limit_error() {
    let opts = GenerateOptions {
        node_limit: 10,
        ..Default::default()
    };
    let cr = LusztigCrystal {
        quiver: Quiver::new(4, 2).unwrap(),
        route: Route::Direct,
    };
    assert_eq!(
        truncated_lusztig_graph(&cr, 5, &opts).unwrap_err(),
        Error::NodeLimit(10)
    );
}
