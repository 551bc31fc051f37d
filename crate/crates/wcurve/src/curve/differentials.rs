//! Weight-sorted basis `phi^ dx / h_X` of Abelian differentials.

use serde::Serialize;

use super::{AlgebraElement, CurveAlgebra, TraceKit};
use crate::exactalg::Poly;
use crate::semigroup::NumericalSemigroup;

/// One numerator `x^k * yhat_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferentialEntry {
    pub k: u64,
    pub i: usize,
    /// Pole order `e^_i + k r` of the numerator.
    pub weight: u64,
    /// `wt(nu) + 1 = e_i - (k+1) r`; positive exactly for holomorphic forms.
    pub gap_weight: i64,
    pub numerator: AlgebraElement,
}

/// The first `count` numerators in ascending pole order.
#[derive(Clone, Debug, Serialize)]
pub struct DifferentialBasis {
    pub entries: Vec<DifferentialEntry>,
    pub denominator: AlgebraElement,
    pub genus: usize,
}

impl DifferentialBasis {
    /// Entries with positive gap weight (the holomorphic ones).
    pub fn holomorphic(&self) -> &[DifferentialEntry] {
        let n = self.entries.iter().take_while(|e| e.gap_weight > 0).count();
        &self.entries[..n]
    }

    pub fn gap_weights(&self) -> Vec<i64> {
        self.entries.iter().map(|e| e.gap_weight).collect()
    }

    /// The first `g` gap weights are the gaps of `h`, and the first
    /// `g + c` enumerate `(Z \ H) cap [-c, c]` without repetition.
    pub fn gap_theorem_holds(&self, h: &NumericalSemigroup) -> bool {
        let g = h.genus();
        let c = h.conductor() as i64;
        let n = g + c as usize;
        if self.entries.len() < n {
            return false;
        }
        let w = self.gap_weights();
        let mut first: Vec<i64> = w[..g].to_vec();
        first.sort_unstable();
        let gaps: Vec<i64> = h.gaps().iter().map(|&x| x as i64).collect();
        let mut stream: Vec<i64> = w[..n].to_vec();
        stream.sort_unstable();
        let expected: Vec<i64> = (-c..=c).filter(|&k| !h.contains(k)).collect();
        first == gaps && stream == expected
    }
}

impl CurveAlgebra {
    /// Numerators `x^k yhat_i` sorted by `e^_i + k r`.
    ///
    /// Weights are distinct because the `e^_i` run over distinct classes mod `r`.
    pub fn differential_basis(&self, kit: &TraceKit, count: usize) -> DifferentialBasis {
        let r = self.r();
        let rr = self.semigroup().r();
        let e = self.e();
        let mut entries = Vec::with_capacity(count);
        let mut next_k = vec![0u64; r];
        while entries.len() < count {
            let i = (0..r).min_by_key(|&i| kit.ehat[i] + next_k[i] * rr).expect("r >= 1");
            let k = next_k[i];
            next_k[i] += 1;
            entries.push(DifferentialEntry {
                k,
                i,
                weight: kit.ehat[i] + k * rr,
                gap_weight: e[i] as i64 - ((k + 1) * rr) as i64,
                numerator: kit.yhat[i].scale_poly(&Poly::monomial(num::One::one(), k as usize)),
            });
        }
        DifferentialBasis { entries, denominator: kit.hx.clone(), genus: self.semigroup().genus() }
    }
}
