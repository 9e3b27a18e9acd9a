//! Property tests against brute-force oracles that share no code with the
//! library: plain reachability tables and definitional scans.

use proptest::prelude::*;

use nsring_core::{
    canonical_ideal, classify, enumerate_by_genus, trace, NumericalSemigroup, RelativeIdeal,
    ReportDocument,
};

/// `reach[m]` iff `m` is a nonnegative combination of `gens`.
fn reachable(gens: &[i64], limit: i64) -> Vec<bool> {
    let mut reach = vec![false; limit as usize + 1];
    reach[0] = true;
    for m in 1..=limit {
        reach[m as usize] = gens.iter().any(|&g| g <= m && reach[(m - g) as usize]);
    }
    reach
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Random generator sets with gcd 1 and multiplicity at most 30.
fn generator_set() -> impl Strategy<Value = Vec<i64>> {
    (2i64..=30, prop::collection::vec(2i64..=60, 1..5)).prop_filter_map("gcd 1", |(m, mut rest)| {
        rest.retain(|&x| x > m);
        rest.push(m);
        let g = rest.iter().fold(0, |a, &b| gcd(a, b));
        (g == 1).then_some(rest)
    })
}

fn small_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    generator_set().prop_map(|g| NumericalSemigroup::from_generators(&g).unwrap())
}

proptest! {
    #[test]
    fn membership_matches_reachability(gens in generator_set()) {
        let h = NumericalSemigroup::from_generators(&gens).unwrap();
        let limit = 3 * h.frobenius() + 3;
        let reach = reachable(&gens, limit.max(0));
        for m in 0..=limit {
            prop_assert_eq!(h.contains(m), reach[m as usize], "m = {}", m);
        }
        prop_assert!(!h.contains(-1));
    }

    #[test]
    fn minimal_generators_are_minimal(gens in generator_set()) {
        let h = NumericalSemigroup::from_generators(&gens).unwrap();
        let mg = h.min_gens();
        prop_assert!(mg.windows(2).all(|w| w[0] < w[1]));
        for (i, &g) in mg.iter().enumerate() {
            let others: Vec<i64> = mg.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            prop_assert!(!reachable(&others, g)[g as usize], "{} redundant in {:?}", g, mg);
        }
        // same semigroup as the input
        let limit = 2 * h.frobenius() + 2;
        prop_assert_eq!(reachable(mg, limit.max(0)), reachable(&gens, limit.max(0)));
    }

    #[test]
    fn frobenius_genus_and_apery(gens in generator_set()) {
        let h = NumericalSemigroup::from_generators(&gens).unwrap();
        let reach = reachable(&gens, h.frobenius() + 2 * h.multiplicity() + 2);
        let gaps: Vec<i64> = (0..reach.len() as i64).filter(|&m| !reach[m as usize]).collect();
        prop_assert_eq!(h.gaps(), gaps.clone());
        prop_assert_eq!(h.genus(), gaps.len());
        prop_assert_eq!(h.frobenius(), gaps.last().copied().unwrap_or(-1));
        prop_assert!(!h.contains(h.frobenius()));
        for m in h.conductor()..h.conductor() + h.multiplicity() {
            prop_assert!(h.contains(m));
        }
        let a1 = h.multiplicity();
        prop_assert_eq!(h.apery().len(), a1 as usize);
        for (r, &w) in h.apery().iter().enumerate() {
            prop_assert_eq!(w % a1, r as i64);
            prop_assert!(h.contains(w) && !h.contains(w - a1));
        }
    }

    #[test]
    fn pseudo_frobenius_matches_definition(h in small_semigroup()) {
        prop_assume!(!h.is_natural());
        let nonzero: Vec<i64> = (1..=h.frobenius() + h.multiplicity()).filter(|&x| h.contains(x)).collect();
        let expect: Vec<i64> = h.gaps().into_iter()
            .filter(|&x| nonzero.iter().all(|&e| h.contains(x + e)))
            .collect();
        let pf = h.pseudo_frobenius().unwrap();
        prop_assert_eq!(pf, &expect[..]);
        prop_assert_eq!(pf.last().copied(), Some(h.frobenius()));
        prop_assert!(!pf.is_empty());
    }

    #[test]
    fn colon_matches_definition(
        h in small_semigroup(),
        i_gens in prop::collection::vec(-10i64..20, 1..4),
        j_gens in prop::collection::vec(-10i64..20, 1..4),
    ) {
        let i = RelativeIdeal::new(&h, i_gens).unwrap();
        let j = RelativeIdeal::new(&h, j_gens).unwrap();
        let c = j.colon(&i).unwrap();
        let hi = 2 * h.conductor() + 60;
        for m in -60..hi {
            let expect = i.minimal_generators().iter().all(|&g| j.contains_exponent(m + g));
            prop_assert_eq!(c.contains_exponent(m), expect, "m = {}", m);
        }
        let p = i.product(&j).unwrap();
        for m in -60..hi {
            let expect = i.minimal_generators().iter()
                .any(|&a| j.minimal_generators().iter().any(|&b| h.contains(m - a - b)));
            prop_assert_eq!(p.contains_exponent(m), expect, "m = {}", m);
        }
    }

    #[test]
    fn minimalization_is_canonical(h in small_semigroup(), mut gens in prop::collection::vec(-10i64..30, 1..8)) {
        let a = RelativeIdeal::new(&h, gens.clone()).unwrap();
        gens.reverse();
        let b = RelativeIdeal::new(&h, gens).unwrap();
        prop_assert_eq!(&a, &b);
        let again = RelativeIdeal::new(&h, a.minimal_generators().to_vec()).unwrap();
        prop_assert_eq!(&a, &again);
    }

    #[test]
    fn trace_inside_semigroup(h in small_semigroup()) {
        prop_assume!(!h.is_natural());
        let tr = trace(&h).unwrap();
        prop_assert_eq!(tr.is_unit(), h.cm_type() == 1);
        if h.cm_type() > 1 {
            prop_assert!(tr.minimal_generators().iter().all(|&g| g > 0 && h.contains(g)));
        }
    }

    #[test]
    fn report_document_round_trips(h in small_semigroup()) {
        let doc = ReportDocument::for_semigroup(&h);
        let text = serde_json::to_string(&doc).unwrap();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        prop_assert_eq!(back.report, classify(&h));
    }
}

#[test]
fn canonical_ideal_exponents_up_to_genus_10() {
    for h in enumerate_by_genus(10).unwrap().filter(|h| !h.is_natural()) {
        let omega = canonical_ideal(&h).unwrap();
        let f = h.frobenius();
        for m in -f - 1..=f + 1 {
            assert_eq!(omega.contains_exponent(m), !h.contains(-m), "{h}, m = {m}");
        }
    }
}
