//! Reduction of classical instances to basic systems: concrete instances of
//! every row pattern of the type B, C and D reduction tables, the pairwise
//! θ cancellation behind the vanishing theorem, and coherence of the chain.

use proptest::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use verma::basics::golden::parse_root_expr;
use verma::classical::vanishing_pairs;
use verma::jantzen::{psi_sets, theta_expand};
use verma::reduction::{basic_triple, reduce, triple_is_simple, Decider};
use verma::rootsys::{ratio, standard, Realization};
use verma::weyl::{is_in_lambda_i_plus, reflect};
use verma::{CartanType, Parabolic, Weight};

struct Row {
    system: &'static str,
    crossed: &'static [usize],
    lambda: &'static str,
    beta: &'static str,
    /// `Ψ⁺ ∩ Φ(β)` and `Ψ⁺⁺ ∩ Φ(β)`.
    psi_plus: &'static [&'static str],
    psi_plus_plus: &'static [&'static str],
    basic: (&'static str, usize, usize),
    simple: bool,
}

const ROWS: &[Row] = &[
    // Type B.
    Row { system: "B3", crossed: &[3], lambda: "2,1,-2", beta: "e1", psi_plus: &["e1"], psi_plus_plus: &[], basic: ("B2", 2, 2), simple: true },
    Row {
        system: "B3",
        crossed: &[2],
        lambda: "1/2,-3/2,1/2",
        beta: "e1",
        psi_plus: &["e1", "e1+e3"],
        psi_plus_plus: &["e1", "e1+e3"],
        basic: ("B2", 1, 2),
        simple: true,
    },
    Row { system: "B3", crossed: &[2], lambda: "1,-1,1", beta: "e1", psi_plus: &["e1", "e1+e3"], psi_plus_plus: &[], basic: ("B3", 2, 3), simple: true },
    Row {
        system: "B4",
        crossed: &[2, 4],
        lambda: "2,0,5,4",
        beta: "e1",
        psi_plus: &["e1", "e1+e2"],
        psi_plus_plus: &["e1", "e1+e2"],
        basic: ("B2", 2, 1),
        simple: true,
    },
    Row { system: "B2", crossed: &[1], lambda: "0,1", beta: "e1+e2", psi_plus: &["e1+e2"], psi_plus_plus: &[], basic: ("B2", 1, 1), simple: true },
    Row { system: "B3", crossed: &[3], lambda: "1,0,-1", beta: "e1", psi_plus: &["e1", "e1+e2"], psi_plus_plus: &[], basic: ("B3", 3, 2), simple: true },
    Row {
        system: "B3",
        crossed: &[2],
        lambda: "1,0,1",
        beta: "e1+e2",
        psi_plus: &["e1", "e1+e2", "e1+e3", "e2+e3"],
        psi_plus_plus: &["e1", "e1+e2", "e1+e3"],
        basic: ("B3", 2, 2),
        simple: false,
    },
    Row { system: "B3", crossed: &[2], lambda: "0,-1,1", beta: "e1+e3", psi_plus: &["e1+e3"], psi_plus_plus: &[], basic: ("B3", 2, 2), simple: true },
    Row {
        system: "B4",
        crossed: &[3],
        lambda: "1,0,-1,1",
        beta: "e1",
        psi_plus: &["e1", "e1+e2", "e1+e4", "e2+e4"],
        psi_plus_plus: &[],
        basic: ("B4", 3, 3),
        simple: true,
    },
    // Type D.
    Row {
        system: "D4",
        crossed: &[2],
        lambda: "1,0,1,0",
        beta: "e1+e2",
        // λ_n = 0, so e_j − e_n pairs exactly like e_j + e_n.
        psi_plus: &["e1+e2", "e1+e3", "e1+e4", "e1-e4", "e2+e3"],
        psi_plus_plus: &["e1+e2", "e1+e3"],
        basic: ("D4", 2, 2),
        simple: true,
    },
    Row { system: "D4", crossed: &[2], lambda: "0,-1,1,0", beta: "e1+e3", psi_plus: &["e1+e3"], psi_plus_plus: &[], basic: ("D4", 2, 2), simple: true },
    Row {
        system: "D5",
        crossed: &[3],
        lambda: "1,0,-1,1,0",
        beta: "e1+e2",
        psi_plus: &["e1+e2", "e1+e4", "e1+e5", "e1-e5", "e2+e4"],
        psi_plus_plus: &[],
        basic: ("D5", 3, 3),
        simple: true,
    },
    // Type C.
    Row {
        system: "C3",
        crossed: &[2],
        lambda: "1,-2,1",
        beta: "2e1",
        psi_plus: &["2e1", "e1+e3"],
        psi_plus_plus: &["2e1", "e1+e3"],
        basic: ("C2", 1, 2),
        simple: true,
    },
    Row {
        system: "C4",
        crossed: &[2, 4],
        lambda: "2,0,5,4",
        beta: "2e1",
        psi_plus: &["2e1", "e1+e2"],
        psi_plus_plus: &["2e1", "e1+e2"],
        basic: ("C2", 2, 1),
        simple: true,
    },
    Row { system: "C2", crossed: &[1], lambda: "0,1", beta: "e1+e2", psi_plus: &["e1+e2"], psi_plus_plus: &[], basic: ("C2", 1, 1), simple: true },
    Row {
        system: "C3",
        crossed: &[2],
        lambda: "1,0,1",
        beta: "2e1",
        psi_plus: &["2e1", "e1+e2", "e1+e3", "e2+e3"],
        psi_plus_plus: &["2e1", "e1+e2", "e1+e3"],
        basic: ("C3", 2, 2),
        simple: false,
    },
];

fn roots(real: &Realization, list: &[&str]) -> BTreeSet<usize> {
    list.iter().map(|r| real.root_index(&parse_root_expr(r, real.dim).unwrap()).unwrap()).collect()
}

#[test]
fn reduction_table_rows() {
    for row in ROWS {
        let kind: CartanType = row.system.parse().unwrap();
        let real = standard(kind).unwrap();
        let par = Parabolic::standard(&real, row.crossed).unwrap();
        let lambda = Weight::parse(row.lambda).unwrap();
        let ctx = format!("{} crossed {:?} λ=({})", row.system, row.crossed, row.lambda);
        assert!(is_in_lambda_i_plus(&real, &lambda, &par), "{ctx}: not in Λ_I⁺");
        let beta = real.root_index(&parse_root_expr(row.beta, real.dim).unwrap()).unwrap();
        let trace = reduce(&real, &lambda, &par, beta).unwrap();
        let triple = basic_triple(&real, &lambda, &par, &trace).unwrap();
        let psi = psi_sets(&real, &lambda, &par).unwrap();
        let within = |set: &[usize]| set.iter().copied().filter(|&r| trace.terminal.contains(r)).collect::<BTreeSet<usize>>();
        assert_eq!(within(&psi.psi_plus), roots(&real, row.psi_plus), "{ctx}: Ψ⁺ ∩ Φ(β)");
        assert_eq!(within(&psi.psi_plus_plus), roots(&real, row.psi_plus_plus), "{ctx}: Ψ⁺⁺ ∩ Φ(β)");
        let label = &triple.label;
        assert_eq!(label.kind.to_string(), row.basic.0, "{ctx}: basic system type");
        assert!(label.variants.contains(&(row.basic.1, row.basic.2)), "{ctx}: got {label}, want {:?}", row.basic);
        assert_eq!(triple_is_simple(&real, &triple, Decider::Both).unwrap(), row.simple, "{ctx}: verdict");
        // Every root of Ψ⁺ inside Φ(β) reduces to the same subsystem.
        for &g in &within(&psi.psi_plus) {
            assert_eq!(reduce(&real, &lambda, &par, g).unwrap().terminal, trace.terminal, "{ctx}: coherence at {}", real.roots[g]);
        }
    }
}

fn add_sums(a: &BTreeMap<Weight, i64>, b: &BTreeMap<Weight, i64>) -> BTreeMap<Weight, i64> {
    let mut out = a.clone();
    for (k, v) in b {
        *out.entry(k.clone()).or_insert(0) += v;
    }
    out.retain(|_, v| *v != 0);
    out
}

#[test]
fn vanishing_pairs_cancel_in_theta() {
    let cases: &[(&str, &[usize], &str)] =
        &[("B2", &[1], "1/2,1/2"), ("B2", &[2], "1,0"), ("C2", &[1], "1,1"), ("D4", &[2], "1,0,1,0"), ("B4", &[2, 4], "2,0,5,4")];
    for &(system, crossed, lambda) in cases {
        let real = standard(system.parse().unwrap()).unwrap();
        let par = Parabolic::standard(&real, crossed).unwrap();
        let w = Weight::parse(lambda).unwrap();
        let pairs = vanishing_pairs(&real, &par, &w).unwrap();
        assert!(!pairs.is_empty(), "{system} ({lambda}): expected a vanishing pair");
        for (a, b) in pairs {
            let ta = theta_expand(&real, &reflect(&real, &w, a), &par).unwrap();
            let tb = theta_expand(&real, &reflect(&real, &w, b), &par).unwrap();
            assert!(add_sums(&ta, &tb).is_empty(), "{system} ({lambda}): θ(s_β λ) + θ(s_β′ λ) ≠ 0");
        }
    }
}

/// A classical system, a crossed set and Dynkin labels that put the weight
/// in `Λ_I⁺` (positive integers on `I`, small rationals elsewhere).
fn classical_instance() -> impl Strategy<Value = (String, Vec<usize>, Vec<(i64, i64)>)> {
    prop::sample::select(vec!["B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5"]).prop_flat_map(|s| {
        let n: usize = s[1..].parse().unwrap();
        (
            Just(s.to_string()),
            prop::collection::btree_set(1..=n, 0..n).prop_map(|c| c.into_iter().collect()),
            prop::collection::vec((-3i64..=3, 1i64..=2), n),
            prop::collection::vec(1i64..=3, n),
        )
            .prop_map(|(s, crossed, free, pos): (String, Vec<usize>, Vec<(i64, i64)>, Vec<i64>)| {
                let labels = (0..free.len()).map(|k| if crossed.contains(&(k + 1)) { free[k] } else { (pos[k], 1) }).collect();
                (s, crossed, labels)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// If `γ ∈ Ψ⁺ ∩ Φ(β)` then `Φ(γ) = Φ(β)`; θ-pairs from the vanishing
    /// conditions always cancel.
    #[test]
    fn chain_is_coherent((system, crossed, labels) in classical_instance()) {
        let real = standard(system.parse().unwrap()).unwrap();
        let par = Parabolic::standard(&real, &crossed).unwrap();
        let w = real.from_labels(&labels.iter().map(|&(n, d)| ratio(n, d)).collect::<Vec<_>>());
        prop_assert!(is_in_lambda_i_plus(&real, &w, &par));
        let psi = psi_sets(&real, &w, &par).unwrap();
        for &beta in &psi.psi_plus {
            let terminal = reduce(&real, &w, &par, beta).unwrap().terminal;
            for &g in psi.psi_plus.iter().filter(|&&g| terminal.contains(g)) {
                prop_assert_eq!(&reduce(&real, &w, &par, g).unwrap().terminal, &terminal);
            }
        }
        for (a, b) in vanishing_pairs(&real, &par, &w).unwrap() {
            let ta = theta_expand(&real, &reflect(&real, &w, a), &par).unwrap();
            let tb = theta_expand(&real, &reflect(&real, &w, b), &par).unwrap();
            prop_assert!(add_sums(&ta, &tb).is_empty());
        }
    }
}
