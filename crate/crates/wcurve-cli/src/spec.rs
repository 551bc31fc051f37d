//! Curve-spec files (TOML).
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`); polynomials in `x` as
//! lists of such strings, lowest degree first.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use wcurve::curve::{fixture, AlgebraElement, CurveAlgebra, FixtureParams};
use wcurve::exactalg::{fmt_rat, parse_rat, Poly, Rat};
use wcurve::NumericalSemigroup;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Plane,
    Table,
    Fixture,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupSpec {
    pub generators: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureSpec {
    pub name: String,
    #[serde(default)]
    pub b: Vec<String>,
    #[serde(default)]
    pub a: Vec<String>,
}

/// `y^r + A_1 y^(r-1) + ... + A_r`, with `a = [A_1, ..., A_r]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaneSpec {
    pub r: u64,
    pub s: u64,
    pub a: Vec<Vec<String>>,
}

/// `y_i y_j = sum_k value[k] y_k` for `1 <= i <= j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductSpec {
    pub i: usize,
    pub j: usize,
    pub value: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    pub product: Vec<ProductSpec>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dh_override: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub kind: CurveKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semigroup: Option<SemigroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<FixtureSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plane: Option<PlaneSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<TableSpec>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub options: OptionsSpec,
}

fn is_default(o: &OptionsSpec) -> bool {
    *o == OptionsSpec::default()
}

fn rats(v: &[String]) -> Result<Vec<Rat>, CliError> {
    v.iter().map(|s| parse_rat(s).map_err(|e| CliError::Input(e.to_string()))).collect()
}

fn poly(v: &[String]) -> Result<Poly, CliError> {
    Ok(Poly::from_coeffs(rats(v)?))
}

fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(fmt_rat).collect()
}

impl CurveSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Input(format!("spec: {e}")))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("spec serializes")
    }

    /// Spec for a named fixture with default parameters.
    pub fn for_fixture(name: &str) -> Result<Self, CliError> {
        let params = FixtureParams::default_for(name)?;
        let gens = fixture(name, &params)?.semigroup().generators().to_vec();
        Ok(CurveSpec {
            kind: CurveKind::Fixture,
            semigroup: Some(SemigroupSpec { generators: gens }),
            fixture: Some(FixtureSpec {
                name: name.to_string(),
                b: params.b.iter().map(fmt_rat).collect(),
                a: params.a.iter().map(fmt_rat).collect(),
            }),
            plane: None,
            table: None,
            options: OptionsSpec::default(),
        })
    }

    /// Spec for a plane curve.
    pub fn for_plane(r: u64, s: u64, a: &[Poly]) -> Self {
        CurveSpec {
            kind: CurveKind::Plane,
            semigroup: None,
            fixture: None,
            plane: Some(PlaneSpec { r, s, a: a.iter().map(poly_strings).collect() }),
            table: None,
            options: OptionsSpec::default(),
        }
    }

    /// Builds and validates the algebra.
    pub fn build(&self) -> Result<CurveAlgebra, CliError> {
        let missing = |what: &str| CliError::Input(format!("kind requires a [{what}] section"));
        let alg = match self.kind {
            CurveKind::Fixture => {
                let f = self.fixture.as_ref().ok_or_else(|| missing("fixture"))?;
                let mut params = FixtureParams::default_for(&f.name)?;
                if !f.b.is_empty() || !f.a.is_empty() {
                    params = FixtureParams { b: rats(&f.b)?, a: rats(&f.a)? };
                }
                fixture(&f.name, &params)?
            }
            CurveKind::Plane => {
                let p = self.plane.as_ref().ok_or_else(|| missing("plane"))?;
                let a = p.a.iter().map(|c| poly(c)).collect::<Result<Vec<_>, _>>()?;
                CurveAlgebra::from_plane(p.r, p.s, a)?
            }
            CurveKind::Table => {
                let t = self.table.as_ref().ok_or_else(|| missing("table"))?;
                let gens = &self.semigroup.as_ref().ok_or_else(|| missing("semigroup"))?.generators;
                let h = NumericalSemigroup::new(gens)?;
                let r = h.e().len();
                let mut table: Vec<Vec<Option<AlgebraElement>>> = vec![vec![None; r]; r];
                for j in 0..r {
                    table[0][j] = Some(AlgebraElement::basis(r, j));
                    table[j][0] = Some(AlgebraElement::basis(r, j));
                }
                for p in &t.product {
                    if p.i == 0 || p.i > p.j || p.j >= r {
                        return Err(CliError::Input(format!(
                            "product ({}, {}) must satisfy 1 <= i <= j < {r}",
                            p.i, p.j
                        )));
                    }
                    if p.value.len() > r {
                        return Err(CliError::Input(format!(
                            "product ({}, {}) has more than {r} components",
                            p.i, p.j
                        )));
                    }
                    let mut v = AlgebraElement::zero(r);
                    for (k, c) in p.value.iter().enumerate() {
                        v.coeffs[k] = poly(c)?;
                    }
                    table[p.i][p.j] = Some(v.clone());
                    table[p.j][p.i] = Some(v);
                }
                let mut full = Vec::with_capacity(r);
                for (i, row) in table.into_iter().enumerate() {
                    let mut out = Vec::with_capacity(r);
                    for (j, v) in row.into_iter().enumerate() {
                        out.push(
                            v.ok_or_else(|| CliError::Input(format!("missing product ({}, {})", i.min(j), i.max(j))))?,
                        );
                    }
                    full.push(out);
                }
                let params = t
                    .params
                    .iter()
                    .map(|(k, v)| parse_rat(v).map(|q| (k.clone(), q)).map_err(|e| CliError::Input(e.to_string())))
                    .collect::<Result<BTreeMap<_, _>, _>>()?;
                CurveAlgebra::from_table(h, full, params, t.names.clone())?
            }
        };
        if let Some(s) = &self.semigroup {
            let mut want = s.generators.clone();
            want.sort_unstable();
            if alg.semigroup().generators() != want.as_slice() {
                return Err(CliError::Input(format!(
                    "declared generators {:?} differ from the curve's {:?}",
                    s.generators,
                    alg.semigroup().generators()
                )));
            }
        }
        Ok(alg)
    }
}
