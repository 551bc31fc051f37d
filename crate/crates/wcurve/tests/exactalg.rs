use num::{One, Zero};
use proptest::prelude::*;
use wcurve::exactalg::{rat, rat_root, ratio, resultant_y, solve_linear, Poly, PolyMatrix, Rat, Series};

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-20i64..20, 1i64..6).prop_map(|(n, d)| ratio(n, d))
}

fn poly_strategy(max_deg: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(rat_strategy(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

/// Series with nonzero leading coefficient.
fn unit_series_strategy() -> impl Strategy<Value = Series> {
    (-3i64..4, rat_strategy().prop_filter("nonzero", |c| !c.is_zero()), proptest::collection::vec(rat_strategy(), 0..6))
        .prop_map(|(val, lead, rest)| {
            let mut coeffs = vec![lead];
            coeffs.extend(rest);
            Series::new(val, coeffs)
        })
}

fn matrix_strategy(n: usize) -> impl Strategy<Value = PolyMatrix> {
    proptest::collection::vec(poly_strategy(2), n * n)
        .prop_map(move |v| PolyMatrix::from_rows(v.chunks(n).map(|c| c.to_vec()).collect()))
}

#[test]
fn resultant_of_y2_minus_x_and_2y() {
    // Sylvester determinant of y^2 - x and 2y is 4x up to sign.
    let f = [-Poly::x(), Poly::zero(), Poly::one()];
    let g = [Poly::zero(), Poly::constant(rat(2))];
    let res = resultant_y(&f, &g);
    assert!(res == Poly::from_ints(&[0, 4]) || res == Poly::from_ints(&[0, -4]));
}

#[test]
fn binomial_series_oracle() {
    // y^2 = x^3 + 1 with x = t^-2: y = t^-3 (1 + t^6/2 - t^12/8 + t^18/16 ...).
    let x = Series::monomial(rat(1), -2, 40);
    let rhs = x.pow(3).unwrap().add(&Series::monomial(rat(1), 0, 40));
    let y = Series::monomial(rat(1), -3, 40);
    // One Newton step is exact here to the tested order after a few iterations.
    let mut y = y;
    for _ in 0..6 {
        let corr = y.mul(&y).sub(&rhs).div(&y.scale(&rat(2))).unwrap();
        y = y.sub(&corr);
    }
    assert_eq!(y.valuation(), -3);
    assert_eq!(y.coeff(-3), Some(rat(1)));
    assert_eq!(y.coeff(3), Some(ratio(1, 2)));
    assert_eq!(y.coeff(9), Some(ratio(-1, 8)));
    assert_eq!(y.coeff(15), Some(ratio(1, 16)));
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in poly_strategy(4), b in poly_strategy(4), c in poly_strategy(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
        }
    }

    #[test]
    fn poly_division(a in poly_strategy(6), b in poly_strategy(3)) {
        match a.divmod(&b) {
            Ok((q, r)) => {
                prop_assert_eq!(&(&q * &b) + &r, a.clone());
                prop_assert!(r.deg_i64() < b.deg_i64());
                prop_assert_eq!((&a * &b).exact_div(&b), if b.is_zero() { None } else { Some(a.clone()) });
            }
            Err(_) => prop_assert!(b.is_zero()),
        }
    }

    #[test]
    fn poly_gcd_divides(a in poly_strategy(3), b in poly_strategy(3), c in poly_strategy(2)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc);
        if !g.is_zero() {
            prop_assert_eq!(g.lc().cloned(), Some(Rat::one()));
            prop_assert!(ac.exact_div(&g).is_some());
            prop_assert!(bc.exact_div(&g).is_some());
            if !c.is_zero() {
                prop_assert!(g.exact_div(&c.monic()).is_some());
            }
        }
    }

    #[test]
    fn poly_eval_is_a_homomorphism(a in poly_strategy(4), b in poly_strategy(4), t in rat_strategy()) {
        prop_assert_eq!((&a * &b).eval(&t), a.eval(&t) * b.eval(&t));
        prop_assert_eq!(a.compose(&b).eval(&t), a.eval(&b.eval(&t)));
        let d = (&a * &b).derivative();
        prop_assert_eq!(d, &(&a.derivative() * &b) + &(&a * &b.derivative()));
    }

    #[test]
    fn series_field_operations(a in unit_series_strategy(), b in unit_series_strategy()) {
        let ab = a.mul(&b);
        prop_assert_eq!(ab.valuation(), a.valuation() + b.valuation());
        prop_assert_eq!(ab.rel_order(), a.rel_order().min(b.rel_order()));
        let back = ab.div(&b).unwrap();
        let n = back.rel_order() as i64;
        prop_assert!(n >= 1);
        for k in 0..n {
            let e = a.valuation() + k;
            prop_assert_eq!(back.coeff(e), a.coeff(e));
        }
        let one = a.mul(&a.inv().unwrap());
        prop_assert_eq!(one.valuation(), 0);
        for k in 0..one.rel_order() as i64 {
            prop_assert_eq!(one.coeff(k), Some(if k == 0 { rat(1) } else { rat(0) }));
        }
    }

    #[test]
    fn series_power_matches_repeated_product(a in unit_series_strategy(), e in 0i64..4) {
        let mut acc = Series::monomial(rat(1), 0, a.rel_order() as i64);
        for _ in 0..e {
            acc = acc.mul(&a);
        }
        let p = a.pow(e).unwrap();
        prop_assert_eq!(p.valuation(), acc.valuation());
        for k in 0..p.rel_order().min(acc.rel_order()) as i64 {
            let idx = p.valuation() + k;
            prop_assert_eq!(p.coeff(idx), acc.coeff(idx));
        }
    }

    #[test]
    fn linear_solutions_satisfy_the_system(
        rows in proptest::collection::vec(proptest::collection::vec(rat_strategy(), 4), 1..6),
        z in proptest::collection::vec(rat_strategy(), 4),
    ) {
        let b: Vec<Rat> = rows.iter().map(|row| row.iter().zip(&z).map(|(a, z)| a * z).sum()).collect();
        let sol = solve_linear(&rows, &b).unwrap();
        let apply = |v: &[Rat]| -> Vec<Rat> { rows.iter().map(|row| row.iter().zip(v).map(|(a, z)| a * z).sum()).collect() };
        prop_assert_eq!(apply(&sol.particular), b.clone());
        for n in &sol.nullspace {
            prop_assert!(apply(n).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn det_is_multiplicative(a in matrix_strategy(3), b in matrix_strategy(3)) {
        prop_assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
        let adj = a.adjugate();
        prop_assert_eq!(a.mul(&adj), PolyMatrix::identity(3).scale(&a.det()));
    }

    #[test]
    fn rational_roots(n in -30i64..30, d in 1i64..30, r in 1u32..5) {
        let q = ratio(n, d);
        let p = num::pow(q.clone(), r as usize);
        let root = rat_root(&p, r).unwrap();
        prop_assert_eq!(num::pow(root.clone(), r as usize), p);
        if r % 2 == 1 {
            prop_assert_eq!(root, q);
        }
    }
}
