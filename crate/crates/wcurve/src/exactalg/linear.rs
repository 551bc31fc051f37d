use num::{One, Zero};

use super::{AlgError, Rat};

/// Solution set `particular + span(nullspace)` of a rational linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Vec<Rat>,
    pub nullspace: Vec<Vec<Rat>>,
}

/// Solves `A z = b` exactly.
///
/// Rows are reduced one at a time against the pivots found so far, so only
/// `rank` pivot rows are ever stored; the reduced system is then brought to
/// reduced row echelon form. The nullspace basis has one vector per free
/// column, with a `1` in that column.
pub fn solve_linear(a: &[Vec<Rat>], b: &[Rat]) -> Result<LinearSolution, AlgError> {
    if a.len() != b.len() {
        return Err(AlgError::DimensionMismatch(format!("{} rows but {} right-hand sides", a.len(), b.len())));
    }
    let ncols = a.first().map_or(0, |r| r.len());
    if a.iter().any(|r| r.len() != ncols) {
        return Err(AlgError::DimensionMismatch("ragged matrix".into()));
    }
    // Pivot rows carry the augmented entry in the last slot.
    let mut pivots: Vec<(usize, Vec<Rat>)> = Vec::new();
    for (row, rhs) in a.iter().zip(b) {
        let mut v: Vec<Rat> = row.iter().cloned().chain(std::iter::once(rhs.clone())).collect();
        for (pc, prow) in &pivots {
            if v[*pc].is_zero() {
                continue;
            }
            let f = v[*pc].clone();
            for (x, p) in v.iter_mut().zip(prow).skip(*pc) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        match (0..ncols).find(|&c| !v[c].is_zero()) {
            Some(pc) => {
                let inv = v[pc].recip();
                for x in v.iter_mut().skip(pc) {
                    if !x.is_zero() {
                        *x *= &inv;
                    }
                }
                pivots.push((pc, v));
            }
            None => {
                if !v[ncols].is_zero() {
                    return Err(AlgError::Inconsistent);
                }
            }
        }
    }
    // Back-substitution to reduced echelon form.
    pivots.sort_by_key(|(c, _)| *c);
    for i in (0..pivots.len()).rev() {
        let (pc, prow) = pivots[i].clone();
        for (_, other) in pivots.iter_mut().take(i) {
            if other[pc].is_zero() {
                continue;
            }
            let f = other[pc].clone();
            for (x, p) in other.iter_mut().zip(&prow).skip(pc) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
    }
    let mut is_pivot = vec![false; ncols];
    let mut particular = vec![Rat::zero(); ncols];
    for (pc, prow) in &pivots {
        is_pivot[*pc] = true;
        particular[*pc] = prow[ncols].clone();
    }
    let nullspace = (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut z = vec![Rat::zero(); ncols];
            z[free] = Rat::one();
            for (pc, prow) in &pivots {
                z[*pc] = -prow[free].clone();
            }
            z
        })
        .collect();
    Ok(LinearSolution { particular, nullspace })
}
