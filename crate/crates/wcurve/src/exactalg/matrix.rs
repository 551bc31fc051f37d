use nalgebra::DMatrix;
use num::complex::Complex64;
use num::One;

use super::{Poly, Rat, RatFunc};

/// Dense rectangular matrix with polynomial entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: Vec<Vec<Poly>>,
    ncols: usize,
}

impl PolyMatrix {
    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged PolyMatrix");
        PolyMatrix { rows, ncols }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        PolyMatrix { rows: vec![vec![Poly::zero(); ncols]; nrows], ncols }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = Poly::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.rows[i][j] = p;
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Poly::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let rows = (0..self.ncols).map(|j| self.rows.iter().map(|r| r[j].clone()).collect()).collect();
        PolyMatrix { rows, ncols: self.nrows() }
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.ncols, other.nrows(), "shape mismatch in PolyMatrix product");
        let mut out = PolyMatrix::zeros(self.nrows(), other.ncols);
        for i in 0..self.nrows() {
            for k in 0..self.ncols {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    if !other.rows[k][j].is_zero() {
                        out.rows[i][j] += &(&self.rows[i][k] * &other.rows[k][j]);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &PolyMatrix, f: impl Fn(&Poly, &Poly) -> Poly) -> PolyMatrix {
        assert_eq!((self.nrows(), self.ncols), (other.nrows(), other.ncols), "shape mismatch");
        let rows =
            self.rows.iter().zip(&other.rows).map(|(a, b)| a.iter().zip(b).map(|(p, q)| f(p, q)).collect()).collect();
        PolyMatrix { rows, ncols: self.ncols }
    }

    pub fn scale(&self, p: &Poly) -> PolyMatrix {
        let rows = self.rows.iter().map(|r| r.iter().map(|q| q * p).collect()).collect();
        PolyMatrix { rows, ncols: self.ncols }
    }

    pub fn trace(&self) -> Poly {
        (0..self.nrows().min(self.ncols)).fold(Poly::zero(), |acc, i| &acc + &self.rows[i][i])
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Poly {
        let n = self.nrows();
        assert_eq!(n, self.ncols, "determinant of a non-square matrix");
        if n == 0 {
            return Poly::one();
        }
        let mut m = self.rows.clone();
        let mut sign = Rat::one();
        let mut prev = Poly::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Poly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[i][k] = Poly::zero();
            }
            prev = m[k][k].clone();
        }
        m[n - 1][n - 1].scale(&sign)
    }

    /// Removes row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> PolyMatrix {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|(a, _)| *a != i)
            .map(|(_, r)| r.iter().enumerate().filter(|(b, _)| *b != j).map(|(_, p)| p.clone()).collect())
            .collect();
        PolyMatrix { rows, ncols: self.ncols - 1 }
    }

    /// Classical adjugate, so that `M * adj(M) = det(M) * I`.
    pub fn adjugate(&self) -> PolyMatrix {
        let n = self.nrows();
        assert_eq!(n, self.ncols, "adjugate of a non-square matrix");
        if n == 1 {
            return PolyMatrix::identity(1);
        }
        let mut out = PolyMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let d = self.minor(j, i).det();
                out.rows[i][j] = if (i + j) % 2 == 0 { d } else { -d };
            }
        }
        out
    }

    /// Entrywise evaluation at a complex point.
    pub fn eval_complex(&self, x0: Complex64) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.nrows(), self.ncols, |i, j| self.rows[i][j].eval_complex(x0))
    }
}

/// Monic minimal polynomial of a square matrix over `Q(x)`, low-to-high,
/// assuming its coefficients are polynomials (true for integral elements).
pub fn matrix_minimal_poly(m: &PolyMatrix) -> Vec<Poly> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "minimal polynomial of a non-square matrix");
    let flat =
        |p: &PolyMatrix| -> Vec<RatFunc> { p.rows().iter().flatten().map(|q| RatFunc::from_poly(q.clone())).collect() };
    let mut power = PolyMatrix::identity(n);
    krylov_dependency(n, || {
        let v = flat(&power);
        power = power.mul(m);
        v
    })
}

/// First linear dependency among the vectors `next()` yields, returned as
/// the monic combination ending in the newest vector.
fn krylov_dependency(n: usize, mut next: impl FnMut() -> Vec<RatFunc>) -> Vec<Poly> {
    // Echelon rows: (pivot column, vector, combination of Krylov vectors).
    let mut echelon: Vec<(usize, Vec<RatFunc>, Vec<RatFunc>)> = Vec::new();
    for k in 0..=n {
        let mut v = next();
        let mut comb = vec![RatFunc::zero(); k + 1];
        comb[k] = RatFunc::one();
        for (pc, row, rcomb) in &echelon {
            if v[*pc].is_zero() {
                continue;
            }
            let f = v[*pc].clone();
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a = &*a - &(&f * b);
                }
            }
            for (a, b) in comb.iter_mut().zip(rcomb) {
                if !b.is_zero() {
                    *a = &*a - &(&f * b);
                }
            }
        }
        match v.iter().position(|e| !e.is_zero()) {
            Some(pc) => {
                let inv = v[pc].recip();
                let v: Vec<RatFunc> = v.iter().map(|e| e * &inv).collect();
                let comb: Vec<RatFunc> = comb.iter().map(|e| e * &inv).collect();
                echelon.push((pc, v, comb));
            }
            None => {
                // comb is monic in the top power by construction.
                return comb.iter().map(|c| c.to_poly().expect("minimal polynomial over Q[x]")).collect();
            }
        }
    }
    unreachable!("Cayley-Hamilton bounds the Krylov dimension")
}

/// Sylvester resultant in `y` of two polynomials given as low-to-high
/// coefficient lists in `y` with coefficients in `Q[x]`.
pub fn resultant_y(f: &[Poly], g: &[Poly]) -> Poly {
    let trim = |p: &[Poly]| -> Vec<Poly> {
        let mut v = p.to_vec();
        while v.last().is_some_and(Poly::is_zero) {
            v.pop();
        }
        v
    };
    let (f, g) = (trim(f), trim(g));
    if f.is_empty() || g.is_empty() {
        return Poly::zero();
    }
    let (m, n) = (f.len() - 1, g.len() - 1);
    if m + n == 0 {
        return Poly::one();
    }
    let size = m + n;
    let mut s = PolyMatrix::zeros(size, size);
    for i in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            s.set(i, i + k, c.clone());
        }
    }
    for i in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            s.set(n + i, i + k, c.clone());
        }
    }
    s.det()
}
