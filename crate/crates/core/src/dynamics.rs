//! Iterates `φⁿ` and their degrees.

use crate::error::Result;
use crate::matrix::{ExponentMatrix, MonomialMap};

/// `[φ, φ², …, φⁿ]`, reducing after every composition.
pub fn iterate(m: &MonomialMap, n: usize) -> Result<Vec<MonomialMap>> {
    iterate_with(m, n, |_| Ok(()))
}

/// As [`iterate`], calling `check` on each power before the next is formed.
pub fn iterate_with(
    m: &MonomialMap,
    n: usize,
    mut check: impl FnMut(&MonomialMap) -> Result<()>,
) -> Result<Vec<MonomialMap>> {
    let mut powers = Vec::with_capacity(n);
    let mut current = *m;
    for k in 0..n {
        if k > 0 {
            current = m.compose(&current)?;
        }
        check(&current)?;
        powers.push(current);
    }
    Ok(powers)
}

/// `[d₁, …, dₙ]` with `d_k` the degree of `φᵏ`.
pub fn degree_sequence(m: &MonomialMap, n: usize) -> Result<Vec<u64>> {
    Ok(iterate(m, n)?.iter().map(MonomialMap::delta).collect())
}

/// The `k`-fold raw product, reduced only once at the end.
pub fn raw_power(m: &ExponentMatrix, k: usize) -> Result<ExponentMatrix> {
    let mut acc = ExponentMatrix::identity();
    for _ in 0..k {
        acc = m.product(&acc)?;
    }
    Ok(acc.reduce())
}
