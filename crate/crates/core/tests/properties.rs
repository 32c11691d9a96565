use proptest::prelude::*;
use proptest::sample::Index;

use spinfock::canonical::a_vector;
use spinfock::crystal::{eps, etilde, ftilde, phi};
use spinfock::fock::{
    apply_cartan_bracket, apply_e, apply_f, normal_order_by, straighten, weight, FockVector, WedgeWord,
};
use spinfock::partitions::{
    dominance_leq, enumerate_dp, enumerate_dp_h, enumerate_dpr_h, hbar_core, hbar_core_by, ladders, residue,
    residue_content, shift_by_h_multiple,
};
use spinfock::{LaurentPoly, Modulus, Partition};

fn modulus() -> impl Strategy<Value = Modulus> {
    prop::sample::select(vec![3usize, 5, 7]).prop_map(|h| Modulus::new(h).unwrap())
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -5i64..=5), 0..6).prop_map(LaurentPoly::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// `(h, λ)` with `λ ∈ DP_h(m)`, `m <= max_m`.
fn dp_h_partition(max_m: usize) -> impl Strategy<Value = (Modulus, Partition)> {
    (modulus(), 0..=max_m, any::<Index>()).prop_map(|(h, m, i)| {
        let pool = enumerate_dp_h(h, m);
        (h, i.get(&pool).clone())
    })
}

fn strict_partition(max_m: usize) -> impl Strategy<Value = Partition> {
    (0..=max_m, any::<Index>()).prop_map(|(m, i)| i.get(&enumerate_dp(m)).clone())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn exact_division_inverts_products(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn bar_is_a_ring_involution(a in poly(), b in poly()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&json).unwrap(), a);
    }

    /// The bar-invariant `γ` with `c - γ ∈ qZ[q]` is unique; brute force over
    /// all bar-invariant candidates with exponents and coefficients in [-3, 3].
    #[test]
    fn symmetrize_tail_is_unique(terms in prop::collection::vec((-3i64..=3, -3i64..=3), 0..5)) {
        let c = LaurentPoly::from_terms(terms);
        let gamma = c.symmetrize_tail();
        prop_assert!(gamma.is_bar_invariant());
        prop_assert!((&c - &gamma).in_q_zq());
        let range: Vec<i64> = (-6..=6).collect();
        let mut solutions = 0;
        for &g0 in &range {
            for &g1 in &range {
                for &g2 in &range {
                    for &g3 in &range {
                        let cand = LaurentPoly::from_terms([
                            (0, g0), (1, g1), (-1, g1), (2, g2), (-2, g2), (3, g3), (-3, g3),
                        ]);
                        if (&c - &cand).in_q_zq() {
                            solutions += 1;
                            prop_assert_eq!(&cand, &gamma);
                        }
                    }
                }
            }
        }
        prop_assert_eq!(solutions, 1);
    }

    #[test]
    fn partition_labels_round_trip(lambda in strict_partition(30)) {
        prop_assert_eq!(Partition::parse(&lambda.to_csv_label()).unwrap(), lambda.clone());
        prop_assert_eq!(Partition::parse_spaced(&lambda.to_spaced_label()).unwrap(), lambda);
    }

    /// Ladders partition the cells, carry one residue each, and build a vector
    /// of the right weight with `|μ⟩` on the diagonal.
    #[test]
    fn ladder_consistency((h, lambda) in dp_h_partition(12)) {
        let d = ladders(h, &lambda).unwrap();
        prop_assert_eq!(d.total_cells(), lambda.degree());
        let mut cells_by_index = std::collections::BTreeMap::<usize, Vec<usize>>::new();
        for (row, col) in lambda.cells() {
            cells_by_index.entry(spinfock::partitions::ladder_index(h, row, col)).or_default().push(residue(h, col));
        }
        for (l, residues) in d.ladders.iter().zip(cells_by_index.values()) {
            prop_assert!(residues.iter().all(|&r| r == l.residue));
            prop_assert_eq!(residues.len(), l.cells);
        }
        if lambda.is_regular(h) {
            let a = a_vector(h, &lambda).unwrap();
            prop_assert!(a.coeff(&lambda).is_one());
            if !lambda.is_empty() {
                prop_assert_eq!(weight(h, &a).unwrap(), residue_content(h, &lambda));
            }
        }
    }

    #[test]
    fn bar_core_is_confluent(h in modulus(), lambda in strict_partition(24), seed in any::<u64>()) {
        let mut state = seed;
        let core = hbar_core_by(h, &lambda, |n| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % n
        }).unwrap();
        prop_assert_eq!(core, hbar_core(h, &lambda).unwrap());
    }

    #[test]
    fn dominance_implies_lex((h, a) in dp_h_partition(14), i in any::<Index>()) {
        let pool = enumerate_dp_h(h, a.degree());
        let b = i.get(&pool);
        if dominance_leq(&a, b).unwrap() {
            prop_assert!(a <= *b);
        }
    }

    /// Straightening a generator-action word does not depend on which
    /// disorder is resolved first.
    #[test]
    fn normal_order_is_confluent((h, lambda) in dp_h_partition(14), k in any::<Index>(), up in any::<bool>(), picks in prop::collection::vec(any::<usize>(), 64)) {
        let mut w = lambda.parts().to_vec();
        let pos = k.index(w.len() + 1);
        if pos == w.len() {
            w.push(1);
        } else if up {
            w[pos] += 1;
        } else {
            w[pos] -= 1;
        }
        let word = WedgeWord::new(w);
        let mut it = picks.iter().cycle();
        let reference = straighten(h, &word).unwrap();
        let random = normal_order_by(h, &word, |p| it.next().unwrap() % p.len()).unwrap();
        prop_assert_eq!(reference, random);
    }

    #[test]
    fn commutator_relation((h, lambda) in dp_h_partition(8), (_, other) in dp_h_partition(8), c in nonzero_poly()) {
        let mut v = FockVector::basis(lambda);
        if other.in_dp_h(h) {
            v.add_term(other, &c);
        }
        for i in h.colors() {
            for j in h.colors() {
                let ef = apply_e(h, i, &apply_f(h, j, &v).unwrap()).unwrap();
                let fe = apply_f(h, j, &apply_e(h, i, &v).unwrap()).unwrap();
                let expected = if i == j { apply_cartan_bracket(h, i, &v).unwrap() } else { FockVector::zero() };
                prop_assert_eq!(ef.sub(&fe), expected);
            }
        }
    }

    #[test]
    fn string_lengths((h, lambda) in dp_h_partition(14)) {
        for i in h.colors() {
            let mut down = 0;
            let mut cur = lambda.clone();
            while let Some(next) = etilde(h, i, &cur).unwrap() {
                prop_assert_eq!(ftilde(h, i, &next).unwrap(), Some(cur.clone()));
                cur = next;
                down += 1;
            }
            prop_assert_eq!(down, eps(h, i, &lambda).unwrap());
            let mut up = 0;
            let mut cur = lambda.clone();
            while let Some(next) = ftilde(h, i, &cur).unwrap() {
                cur = next;
                up += 1;
            }
            prop_assert_eq!(up, phi(h, i, &lambda).unwrap());
        }
    }

    #[test]
    fn shift_commutes_with_kashiwara_operators(m in 0usize..=10, i in any::<Index>(), nu in strict_partition(4), h in modulus()) {
        let pool = enumerate_dpr_h(h, m);
        let lambda = i.get(&pool);
        let shifted = shift_by_h_multiple(h, lambda, &nu);
        for c in h.colors() {
            prop_assert_eq!(
                ftilde(h, c, lambda).unwrap().map(|x| shift_by_h_multiple(h, &x, &nu)),
                ftilde(h, c, &shifted).unwrap()
            );
            prop_assert_eq!(
                etilde(h, c, lambda).unwrap().map(|x| shift_by_h_multiple(h, &x, &nu)),
                etilde(h, c, &shifted).unwrap()
            );
        }
    }
}

#[test]
fn content_determines_core_up_to_16() {
    let (ok, detail) = spinfock::verify::check_content_core(16).unwrap();
    assert!(ok, "{detail}");
}

#[test]
fn dpr_counts_match_product_series() {
    for h in [3, 5, 7] {
        let p = Modulus::new(h).unwrap();
        let series = spinfock::modular::regular_series(p, 40);
        for (m, &s) in series.iter().enumerate() {
            assert_eq!(enumerate_dpr_h(p, m).len() as u64, s, "p={h} m={m}");
        }
    }
}

#[test]
fn vacuum_is_weightless_for_every_color() {
    for h in [3, 5, 7] {
        let h = Modulus::new(h).unwrap();
        for i in h.colors() {
            let v = apply_e(h, i, &FockVector::vacuum()).unwrap();
            assert!(v.is_zero());
        }
    }
}
