use std::fmt;

use num::{One, Signed, Zero};

use super::{fmt_rat, rat, AlgError, Rat};

/// Truncated Laurent series `sum_{k >= val} c_k t^k + O(t^prec)` with exact
/// rational coefficients.
///
/// Every coefficient below `prec` is stored, the leading one is nonzero
/// unless the series is zero to the stated precision, and the relative
/// precision of a product is the minimum of the operands' relative precisions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    val: i64,
    coeffs: Vec<Rat>,
    prec: i64,
}

impl Series {
    /// Builds from the coefficients of `t^val, t^(val+1), ...`; the length
    /// fixes the precision.
    pub fn new(val: i64, coeffs: Vec<Rat>) -> Self {
        let prec = val + coeffs.len() as i64;
        let mut s = Series { val, coeffs, prec };
        s.normalize();
        s
    }

    /// `c t^e + O(t^prec)`.
    pub fn monomial(c: Rat, e: i64, prec: i64) -> Self {
        assert!(prec > e, "precision must exceed the exponent");
        let mut coeffs = vec![Rat::zero(); (prec - e) as usize];
        coeffs[0] = c;
        Series::new(e, coeffs)
    }

    /// Zero known up to `O(t^prec)`.
    pub fn zero(prec: i64) -> Self {
        Series { val: prec, coeffs: Vec::new(), prec }
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
        self.val += lead as i64;
    }

    /// Exponent of the leading term (equals `prec` for a zero series).
    pub fn valuation(&self) -> i64 {
        self.val
    }

    /// Absolute precision: terms `t^k` with `k < prec` are exact.
    pub fn prec(&self) -> i64 {
        self.prec
    }

    /// Number of known coefficients from the leading term on.
    pub fn rel_order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.first()
    }

    /// Coefficient of `t^k`, or `None` beyond the precision.
    pub fn coeff(&self, k: i64) -> Option<Rat> {
        if k >= self.prec {
            None
        } else if k < self.val {
            Some(Rat::zero())
        } else {
            Some(self.coeffs[(k - self.val) as usize].clone())
        }
    }

    /// Drops terms at or above `t^prec`.
    pub fn truncate(&self, prec: i64) -> Series {
        if prec >= self.prec {
            return self.clone();
        }
        if prec <= self.val {
            return Series::zero(prec);
        }
        Series { val: self.val, coeffs: self.coeffs[..(prec - self.val) as usize].to_vec(), prec }
    }

    pub fn scale(&self, c: &Rat) -> Series {
        if c.is_zero() {
            return Series::zero(self.prec);
        }
        Series { val: self.val, coeffs: self.coeffs.iter().map(|a| a * c).collect(), prec: self.prec }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Series {
        Series { val: self.val + k, coeffs: self.coeffs.clone(), prec: self.prec + k }
    }

    pub fn add(&self, other: &Series) -> Series {
        let prec = self.prec.min(other.prec);
        let val = self.val.min(other.val).min(prec);
        let coeffs =
            (val..prec).map(|k| self.coeff(k).unwrap_or_default() + other.coeff(k).unwrap_or_default()).collect();
        Series::new(val, coeffs)
    }

    pub fn neg(&self) -> Series {
        self.scale(&-Rat::one())
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Series) -> Series {
        let prec = (self.val + other.prec).min(other.val + self.prec);
        let val = self.val + other.val;
        if prec <= val {
            return Series::zero(prec);
        }
        let n = (prec - val) as usize;
        let mut coeffs = vec![Rat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                coeffs[i + j] += a * b;
            }
        }
        Series::new(val, coeffs)
    }

    /// Multiplicative inverse; the leading coefficient must be known.
    pub fn inv(&self) -> Result<Series, AlgError> {
        let a0 = self.leading_coeff().ok_or(AlgError::SeriesNotInvertible)?;
        let n = self.coeffs.len();
        let a0_inv = a0.recip();
        let mut b: Vec<Rat> = Vec::with_capacity(n);
        b.push(a0_inv.clone());
        for k in 1..n {
            let s = (1..=k).fold(Rat::zero(), |acc, i| acc + &self.coeffs[i] * &b[k - i]);
            b.push(-s * &a0_inv);
        }
        Ok(Series::new(-self.val, b))
    }

    pub fn div(&self, other: &Series) -> Result<Series, AlgError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power (negative exponents invert first).
    pub fn pow(&self, e: i64) -> Result<Series, AlgError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Series::monomial(Rat::one(), 0, base.rel_order().max(1) as i64);
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Derivative in `t`.
    pub fn derivative(&self) -> Series {
        let coeffs = self.coeffs.iter().enumerate().map(|(i, c)| c * rat(self.val + i as i64)).collect();
        let mut s = Series { val: self.val - 1, coeffs, prec: self.prec - 1 };
        s.normalize();
        s
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.val + i as i64;
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{}", fmt_rat(&mag))?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{}*t^{k}", fmt_rat(&mag))?,
            }
        }
        if first {
            write!(f, "O(t^{})", self.prec)
        } else {
            write!(f, " + O(t^{})", self.prec)
        }
    }
}

/// One term `coeff * t^t_exp * prod_v V_v^{powers[v]}` of a series equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTerm {
    pub coeff: Rat,
    pub t_exp: i64,
    pub powers: Vec<u32>,
}

/// A polynomial relation `sum terms = 0` among unknown series `V_v`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SeriesEquation {
    pub terms: Vec<SeriesTerm>,
}

/// Running coefficients of `prod_v U_v^{p_v}` built as a chain of products.
struct ProductChain {
    factors: Vec<usize>,
    partial: Vec<Vec<Rat>>,
}

impl ProductChain {
    fn new(powers: &[u32]) -> Self {
        let factors: Vec<usize> =
            powers.iter().enumerate().flat_map(|(v, &p)| std::iter::repeat_n(v, p as usize)).collect();
        let partial = vec![Vec::new(); factors.len()];
        ProductChain { factors, partial }
    }

    /// Appends coefficient `n` of every partial product given unit series
    /// known through `n`.
    fn push(&mut self, units: &[Vec<Rat>], n: usize) {
        for k in 0..self.factors.len() {
            let u = &units[self.factors[k]];
            let c = if k == 0 {
                u[n].clone()
            } else {
                let prev = &self.partial[k - 1];
                (0..=n).fold(Rat::zero(), |acc, a| acc + &prev[a] * &u[n - a])
            };
            self.partial[k].push(c);
        }
    }

    fn pop(&mut self) {
        for p in &mut self.partial {
            p.pop();
        }
    }

    fn coeff(&self, n: usize) -> Rat {
        match self.partial.last() {
            Some(p) => p[n].clone(),
            None if n == 0 => Rat::one(),
            None => Rat::zero(),
        }
    }
}

/// Solves polynomial relations among Laurent series order by order.
///
/// Unknown `V_v = lead_v t^{exp_v} (1 + c_{v,1} t + c_{v,2} t^2 + ...)`. The
/// leading terms must cancel in every equation; each further order is a
/// linear system whose matrix comes from the leading terms only. Returns the
/// series with relative order `order + 1` (`order = 0` echoes the leads).
pub fn series_newton_solve(
    equations: &[SeriesEquation],
    leads: &[(Rat, i64)],
    order: usize,
) -> Result<Vec<Series>, AlgError> {
    let nv = leads.len();
    for eq in equations {
        if eq.terms.iter().any(|t| t.powers.len() != nv) {
            return Err(AlgError::DimensionMismatch("term arity differs from unknown count".into()));
        }
    }
    // Per term: leading value, exponent offset above the equation minimum.
    struct Prepared {
        value: Rat,
        offset: usize,
        chain: usize,
        powers: Vec<u32>,
    }
    let mut chains: Vec<ProductChain> = Vec::new();
    let mut chain_keys: Vec<Vec<u32>> = Vec::new();
    let mut prepared: Vec<Vec<Prepared>> = Vec::new();
    for eq in equations {
        let raw: Vec<(Rat, i64, &SeriesTerm)> = eq
            .terms
            .iter()
            .map(|t| {
                let mut v = t.coeff.clone();
                let mut e = t.t_exp;
                for (var, &p) in t.powers.iter().enumerate() {
                    v *= num::pow(leads[var].0.clone(), p as usize);
                    e += p as i64 * leads[var].1;
                }
                (v, e, t)
            })
            .filter(|(v, _, _)| !v.is_zero())
            .collect();
        let Some(emin) = raw.iter().map(|r| r.1).min() else { continue };
        let lead_sum = raw.iter().filter(|r| r.1 == emin).fold(Rat::zero(), |acc, r| acc + &r.0);
        if !lead_sum.is_zero() {
            return Err(AlgError::SingularJet { order: 0, reason: "leading terms do not cancel".into() });
        }
        let mut terms = Vec::new();
        for (value, e, t) in raw {
            let chain = match chain_keys.iter().position(|k| *k == t.powers) {
                Some(c) => c,
                None => {
                    chain_keys.push(t.powers.clone());
                    chains.push(ProductChain::new(&t.powers));
                    chains.len() - 1
                }
            };
            terms.push(Prepared { value, offset: (e - emin) as usize, chain, powers: t.powers.clone() });
        }
        prepared.push(terms);
    }

    let mut units: Vec<Vec<Rat>> = vec![vec![Rat::one()]; nv];
    for ch in &mut chains {
        ch.push(&units, 0);
    }
    let residual = |chains: &[ProductChain], n: usize| -> Vec<Rat> {
        prepared
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .filter(|t| t.offset <= n)
                    .fold(Rat::zero(), |acc, t| acc + &t.value * chains[t.chain].coeff(n - t.offset))
            })
            .collect()
    };
    let jacobian: Vec<Vec<Rat>> = prepared
        .iter()
        .map(|terms| {
            (0..nv)
                .map(|v| {
                    terms
                        .iter()
                        .filter(|t| t.offset == 0)
                        .fold(Rat::zero(), |acc, t| acc + &t.value * rat(t.powers[v] as i64))
                })
                .collect()
        })
        .collect();
    for n in 1..=order {
        for u in &mut units {
            u.push(Rat::zero());
        }
        for ch in &mut chains {
            ch.push(&units, n);
        }
        let rhs: Vec<Rat> = residual(&chains, n).into_iter().map(|r| -r).collect();
        let sol = solve_step(&jacobian, &rhs, n)?;
        for (u, c) in units.iter_mut().zip(sol) {
            u[n] = c;
        }
        for ch in &mut chains {
            ch.pop();
            ch.push(&units, n);
        }
        if residual(&chains, n).iter().any(|r| !r.is_zero()) {
            return Err(AlgError::SingularJet { order: n, reason: "nonzero residual after step".into() });
        }
    }
    Ok(units
        .into_iter()
        .zip(leads)
        .map(|(u, (lead, exp))| Series::new(*exp, u.iter().map(|c| c * lead).collect()))
        .collect())
}

fn solve_step(jacobian: &[Vec<Rat>], rhs: &[Rat], n: usize) -> Result<Vec<Rat>, AlgError> {
    let sol = super::solve_linear(jacobian, rhs)
        .map_err(|_| AlgError::SingularJet { order: n, reason: "order-by-order system inconsistent".into() })?;
    if !sol.nullspace.is_empty() {
        return Err(AlgError::SingularJet { order: n, reason: "order-by-order system underdetermined".into() });
    }
    Ok(sol.particular)
}
