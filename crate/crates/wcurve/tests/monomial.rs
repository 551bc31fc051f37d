use proptest::prelude::*;
use wcurve::monomial::{
    binomial_fhj, cyclic_action_check, monomial_annihilator_holds, structure_b, toric_relations, trace_monomials,
    zeta_repr,
};
use wcurve::NumericalSemigroup;

fn h(g: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::new(g).unwrap()
}

#[test]
fn trace_table_4679() {
    let s = h(&[4, 6, 7, 9]);
    let t = trace_monomials(&s, s.minimal_valid_trace_degree()).unwrap();
    assert_eq!(t.d_h, 13);
    assert_eq!(t.ehat, vec![13, 7, 6, 4]);
    assert_eq!(t.delta[0], 1);
}

#[test]
fn trace_table_sextic() {
    let s = h(&[6, 13, 14, 15, 16]);
    let t = trace_monomials(&s, 29).unwrap();
    assert_eq!(t.ehat, vec![29, 16, 15, 14, 13, 0]);
    assert!(t.symmetric);
}

#[test]
fn trace_table_5_7_11_13_at_25() {
    let s = h(&[5, 7, 11, 13]);
    let t = trace_monomials(&s, 25).unwrap();
    // Z14 is realized as Z7^2.
    assert_eq!(t.render(&s), "Z5^5 + Z5 Z13 Z7' + Z7^2 Z11' + Z5 Z7 Z13' + Z11 Z7'^2");
    assert_eq!(s.minimal_valid_trace_degree(), 24);
}

#[test]
fn representations_and_structure_constants() {
    let s = h(&[5, 7, 11]);
    assert_eq!(zeta_repr(&s, 18).unwrap().exponents, vec![0, 1, 1]);
    assert_eq!(zeta_repr(&h(&[4, 6, 7, 9]), 13).unwrap().exponents, vec![1, 0, 0, 1]);
    // Zeta_7 Zeta_8 = Z_3^5 in <3,7,8>.
    assert_eq!(structure_b(&h(&[3, 7, 8]), 1, 2), Ok((0, 5)));
    // Zeta_7^2 = Zeta_14 in <5,7,11>.
    assert_eq!(structure_b(&s, 1, 1), Ok((3, 0)));
    assert_eq!(binomial_fhj(&h(&[3, 7, 8]), 1), Ok((3, 7)));
    let sextic = h(&[6, 13, 14, 15, 16]);
    assert_eq!(binomial_fhj(&sextic, 3), Ok((2, 5)));
    assert_eq!(binomial_fhj(&sextic, 2), Ok((3, 7)));
}

#[test]
fn toric_relations_378() {
    let s = h(&[3, 7, 8]);
    let rels = toric_relations(&s, 30);
    let gens = s.generators();
    let shown: Vec<(String, String)> =
        rels.iter().map(|(u, v)| (u.display(gens).to_string(), v.display(gens).to_string())).collect();
    let has = |a: &str, b: &str| shown.iter().any(|(u, v)| (u == a && v == b) || (u == b && v == a));
    assert!(has("Z7 Z8", "Z3^5"), "{shown:?}");
    assert!(has("Z7^2", "Z3^2 Z8"), "{shown:?}");
    assert!(has("Z8^2", "Z3^3 Z7"), "{shown:?}");
    assert_eq!(rels.len(), 3);
}

fn semigroup_strategy() -> impl Strategy<Value = NumericalSemigroup> {
    proptest::collection::vec(2u64..16, 1..4).prop_filter_map("gcd must be 1", |gens| {
        let g = gens.iter().fold(0u64, |a, &b| num::integer::gcd(a, b));
        (g == 1).then(|| NumericalSemigroup::new(&NumericalSemigroup::minimize(&gens)).unwrap())
    })
}

proptest! {
    #[test]
    fn trace_monomials_are_homogeneous(s in semigroup_strategy(), extra in 0u64..3) {
        let degrees = s.valid_trace_degrees(s.minimal_valid_trace_degree() + 3 * s.r());
        let d = degrees[extra as usize % degrees.len()];
        let t = trace_monomials(&s, d).unwrap();
        let gens = s.generators();
        for (left, i) in &t.monomials {
            prop_assert_eq!(left.weight(gens) + s.e()[*i], d);
        }
        prop_assert!(monomial_annihilator_holds(&s, d));
        let rels = toric_relations(&s, s.conductor() + 2 * gens[gens.len() - 1]);
        prop_assert!(cyclic_action_check(&s, &rels, Some(&t)).violations.is_empty());
    }

    #[test]
    fn zeta_repr_has_the_right_weight(s in semigroup_strategy(), n in 0u64..60) {
        match zeta_repr(&s, n) {
            Ok(m) => prop_assert_eq!(m.weight(s.generators()), n),
            Err(_) => prop_assert!(!s.contains(n as i64)),
        }
    }

    #[test]
    fn toric_relations_balance(s in semigroup_strategy()) {
        let gens = s.generators();
        for (u, v) in toric_relations(&s, 40) {
            prop_assert_eq!(u.weight(gens), v.weight(gens));
            prop_assert_ne!(u, v);
        }
    }
}
