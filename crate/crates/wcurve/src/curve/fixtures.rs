//! The three worked examples: a non-cyclic trigonal curve with semigroup
//! `<3,7,8>`, a cyclic pentagonal curve `<5,7,11>` and a symmetric curve
//! `<6,13,14,15,16>`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{AlgebraElement, CurveAlgebra, CurveError};
use crate::exactalg::{rat, Poly, Rat};
use crate::semigroup::NumericalSemigroup;

/// Rational parameters of a fixture: branch values `b` (pairwise distinct)
/// and coefficients `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct FixtureParams {
    pub b: Vec<Rat>,
    pub a: Vec<Rat>,
}

impl FixtureParams {
    /// `b = (1, 2, ..., nb)`, `a = (1, ..., 1)`.
    pub fn default_for(name: &str) -> Result<Self, CurveError> {
        let (nb, na) = shape(name)?;
        Ok(FixtureParams { b: (1..=nb as i64).map(rat).collect(), a: vec![rat(1); na] })
    }
}

/// Fixture names accepted by [`fixture`].
pub fn fixture_names() -> &'static [&'static str] {
    &["trigonal378", "pentagonal", "sextic"]
}

fn shape(name: &str) -> Result<(usize, usize), CurveError> {
    match name {
        "trigonal378" => Ok((7, 2)),
        "pentagonal" => Ok((5, 0)),
        "sextic" => Ok((7, 0)),
        _ => Err(CurveError::UnknownFixture(name.to_string())),
    }
}

/// Builds a fixture algebra from its defining relations.
pub fn fixture(name: &str, params: &FixtureParams) -> Result<CurveAlgebra, CurveError> {
    let (nb, na) = shape(name)?;
    let count = |param: &str, expected: usize, got: usize| CurveError::ParamCount {
        name: name.to_string(),
        param: param.to_string(),
        expected,
        got,
    };
    if params.b.len() != nb {
        return Err(count("b", nb, params.b.len()));
    }
    if params.a.len() != na {
        return Err(count("a", na, params.a.len()));
    }
    for i in 0..nb {
        if params.b[..i].contains(&params.b[i]) {
            return Err(CurveError::DuplicateBranchParam);
        }
    }
    let mut named = BTreeMap::new();
    for (i, b) in params.b.iter().enumerate() {
        named.insert(format!("b{}", i + 1), b.clone());
    }
    for (i, a) in params.a.iter().enumerate() {
        named.insert(format!("a{}", i + 1), a.clone());
    }
    let k = |idx: &[usize]| Poly::from_roots(&idx.iter().map(|&i| params.b[i - 1].clone()).collect::<Vec<_>>());
    match name {
        "trigonal378" => {
            let (k2, k3, kt2) = (k(&[1, 2]), k(&[3, 4, 5]), k(&[6, 7]));
            let (a1, a2) = (&params.a[0], &params.a[1]);
            let el = |c: [Poly; 3]| AlgebraElement { coeffs: c.to_vec() };
            let products = vec![
                ((1, 1), el([-(&k2 * &kt2).scale(a2), -k2.scale(a1), -&k2])),
                ((1, 2), el([&k2 * &k3, Poly::zero(), Poly::zero()])),
                ((2, 2), el([-(&k2 * &k3).scale(a1), -&k3, -kt2.scale(a2)])),
            ];
            build(&[3, 7, 8], products, named, &["1", "y", "w"])
        }
        "pentagonal" => {
            let (k2, k3) = (k(&[1, 2]), k(&[3, 4, 5]));
            let k23 = &k2 * &k3;
            // Basis 1, y, w, y^2, yw; y^3 = k2 w, w^2 = k3 y, y^2 w = k2 k3.
            let t = |i: usize, p: Poly| AlgebraElement::term(5, i, p);
            let products = vec![
                ((1, 1), t(3, Poly::one())),
                ((1, 2), t(4, Poly::one())),
                ((1, 3), t(2, k2.clone())),
                ((1, 4), t(0, k23.clone())),
                ((2, 2), t(1, k3.clone())),
                ((2, 3), t(0, k23.clone())),
                ((2, 4), t(3, k3.clone())),
                ((3, 3), t(4, k2.clone())),
                ((3, 4), t(1, k23.clone())),
                ((4, 4), t(2, k23.clone())),
            ];
            build(&[5, 7, 11], products, named, &["1", "y", "w", "y^2", "y*w"])
        }
        "sextic" => {
            let (k3, k2, kh2) = (k(&[1, 2, 3]), k(&[4, 5]), k(&[6, 7]));
            let t = |i: usize, p: Poly| AlgebraElement::term(6, i, p);
            // Basis 1, y13, y14, y15, y16, Y = y13 y16 = y14 y15.
            let products = vec![
                ((1, 1), t(2, kh2.clone())),
                ((1, 2), t(3, k2.clone())),
                ((1, 3), t(4, kh2.clone())),
                ((1, 4), t(5, Poly::one())),
                ((1, 5), t(0, &(&kh2 * &k2) * &k3)),
                ((2, 2), t(4, k2.clone())),
                ((2, 3), t(5, Poly::one())),
                ((2, 4), t(0, &k2 * &k3)),
                ((2, 5), t(1, &k2 * &k3)),
                ((3, 3), t(0, &kh2 * &k3)),
                ((3, 4), t(1, k3.clone())),
                ((3, 5), t(2, &k3 * &kh2)),
                ((4, 4), t(2, k3.clone())),
                ((4, 5), t(3, &k3 * &k2)),
                ((5, 5), t(4, &(&kh2 * &k3) * &k2)),
            ];
            build(&[6, 13, 14, 15, 16], products, named, &["1", "y13", "y14", "y15", "y16", "y13*y16"])
        }
        _ => unreachable!("shape() rejected unknown names"),
    }
}

fn build(
    gens: &[u64],
    products: Vec<((usize, usize), AlgebraElement)>,
    params: BTreeMap<String, Rat>,
    names: &[&str],
) -> Result<CurveAlgebra, CurveError> {
    let h = NumericalSemigroup::new(gens)?;
    let r = h.e().len();
    let mut table: Vec<Vec<AlgebraElement>> = vec![vec![AlgebraElement::zero(r); r]; r];
    for j in 0..r {
        table[0][j] = AlgebraElement::basis(r, j);
        table[j][0] = AlgebraElement::basis(r, j);
    }
    for ((i, j), v) in products {
        table[i][j] = v.clone();
        table[j][i] = v;
    }
    CurveAlgebra::from_table(h, table, params, Some(names.iter().map(|s| s.to_string()).collect()))
}
