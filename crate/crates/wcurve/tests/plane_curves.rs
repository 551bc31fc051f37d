//! Random plane curves `y^r + A_1 y^(r-1) + ... + A_r = 0` (`A_r = -x^s + ...`).
//! For these the trace element is known in closed form: the divided
//! difference of `f`, with diagonal `df/dy`.

use proptest::prelude::*;
use wcurve::exactalg::{rat, Poly};
use wcurve::{AlgebraElement, CurveAlgebra};

#[derive(Clone, Debug)]
struct Plane {
    r: u64,
    s: u64,
    a: Vec<Poly>,
}

fn plane_strategy() -> impl Strategy<Value = Plane> {
    let rs = (2u64..=4, 3u64..=9).prop_filter("coprime with s > r", |(r, s)| s > r && num::integer::gcd(*r, *s) == 1);
    rs.prop_flat_map(|(r, s)| {
        let coeffs: Vec<_> = (1..=r).map(|i| proptest::collection::vec(-3i64..4, ((i * s) / r + 1) as usize)).collect();
        (Just(r), Just(s), coeffs)
    })
    .prop_map(|(r, s, mut coeffs)| {
        let last = coeffs.last_mut().unwrap();
        last[s as usize] = -1;
        Plane { r, s, a: coeffs.iter().map(|c| Poly::from_ints(c)).collect() }
    })
}

fn build(p: &Plane) -> CurveAlgebra {
    CurveAlgebra::from_plane(p.r, p.s, p.a.clone()).unwrap()
}

/// `df/dy = sum_l (r - l) A_l y^(r-l-1)` with `A_0 = 1`.
fn df_dy(p: &Plane) -> AlgebraElement {
    let r = p.r as usize;
    let mut out = AlgebraElement::zero(r);
    for l in 0..r {
        let al = if l == 0 { Poly::one() } else { p.a[l - 1].clone() };
        out.coeffs[r - l - 1] = al.scale(&rat((r - l) as i64));
    }
    out
}

#[test]
fn elliptic_curve_example() {
    // y^2 = x^3 + 1.
    let p = Plane { r: 2, s: 3, a: vec![Poly::zero(), Poly::from_ints(&[-1, 0, 0, -1])] };
    let alg = build(&p);
    let kit = alg.annihilator_solve(None).unwrap();
    assert_eq!(kit.d_h, 3);
    assert_eq!(kit.hx, AlgebraElement::term(2, 1, Poly::constant(rat(2))));
    assert_eq!(alg.trace_form().det().degree(), Some(3));
    let f = alg.minimal_poly_of_generator(1).unwrap();
    assert_eq!(f.a, vec![Poly::one(), p.a[0].clone(), p.a[1].clone()]);
}

#[test]
fn std_trace_of_y_is_minus_a1() {
    let p = Plane {
        r: 3,
        s: 4,
        a: vec![Poly::from_ints(&[2, 1]), Poly::from_ints(&[0, 0, 1]), Poly::from_ints(&[5, 0, 0, 0, -1])],
    };
    let alg = build(&p);
    assert_eq!(alg.std_trace(&alg.basis(1)), -&p.a[0]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn trace_element_is_the_divided_difference(p in plane_strategy()) {
        let alg = build(&p);
        let kit = alg.annihilator_solve(None).unwrap();
        prop_assert_eq!(&kit.htilde, &alg.divided_difference(1).unwrap());
        prop_assert_eq!(&kit.hx, &df_dy(&p));
        let f = alg.minimal_poly_of_generator(1).unwrap();
        let mut expected = vec![Poly::one()];
        expected.extend(p.a.iter().cloned());
        prop_assert_eq!(f.a, expected);
    }

    #[test]
    fn identity_suite(p in plane_strategy(), v in proptest::collection::vec(proptest::collection::vec(-4i64..5, 0..3), 4)) {
        let alg = build(&p);
        let h = alg.semigroup();
        let kit = alg.annihilator_solve(None).unwrap();
        let inv = kit.invariants_report(&alg).unwrap();
        prop_assert!(inv.all_hold(), "{:?}", inv);
        // <r, s> is symmetric, so the excess vanishes.
        prop_assert_eq!(inv.kx, 0);
        prop_assert_eq!(inv.c_hat, 2 * h.genus() as i64);
        prop_assert_eq!(inv.c_x, h.conductor() as i64);
        let g = h.genus();
        prop_assert_eq!(alg.trace_form().det().degree(), Some(2 * g + alg.r() - 1));
        let v = AlgebraElement { coeffs: v[..alg.r()].iter().map(|c| Poly::from_ints(c)).collect() };
        prop_assert!(kit.trace_composition_holds(&alg, &v).unwrap());
        prop_assert_eq!(kit.duality_matrix(&alg).unwrap(), wcurve::PolyMatrix::identity(alg.r()));
        let module = kit.complementary_module(&alg, wcurve::curve::YhatMode::Truncated).unwrap();
        prop_assert!(module.principal);
        let expected: Vec<AlgebraElement> = (0..alg.r()).map(|i| alg.basis(alg.r() - 1 - i)).collect();
        prop_assert_eq!(module.generators, expected);
        let basis = alg.differential_basis(&kit, g + h.conductor() as usize);
        prop_assert!(basis.gap_theorem_holds(h));
    }
}
