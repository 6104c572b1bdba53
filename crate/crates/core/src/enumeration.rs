//! Listing monomial Cremona maps of a given degree, constructively and by
//! exhaustive search, and their orbits under permutation similarity.

use std::collections::BTreeSet;

use num_integer::Integer;
use rayon::prelude::*;

use crate::classification::family_two;
use crate::error::{Error, Result};
use crate::matrix::{ExponentMatrix, MonomialMap};
use crate::multidegree::{multidegree, Multidegree};
use crate::permutation::Permutation;

/// Largest degree accepted by [`brute_force_cremona`].
pub const BRUTE_FORCE_MAX_DEGREE: u64 = 12;

/// One normal form per class under independent row and column swaps: the
/// family II matrix and, for `δ ≥ 3`, one family III matrix per unit
/// `a ≠ 1` modulo δ. For `δ = 2` the standard involution replaces the
/// family III list.
pub fn enumerate_cremona(delta: u64) -> Result<Vec<ExponentMatrix>> {
    if delta < 2 {
        return Err(Error::DegreeOutOfRange(
            delta,
            "enumeration starts at degree 2".into(),
        ));
    }
    let mut out = BTreeSet::new();
    out.insert(family_two(delta));
    if delta == 2 {
        out.insert(ExponentMatrix::standard_involution());
    } else {
        for a in 2..delta {
            if let Some(m) = family_three_for_unit(delta, a)? {
                out.insert(m);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Solves `δa - δc - ae = 1` for the unit `a`: `e ≡ -a⁻¹ (mod δ)`,
/// `r = (ae + 1) / δ`, `c = a - r`, `d = δ - c - e`, `b = δ - a`.
fn family_three_for_unit(delta: u64, a: u64) -> Result<Option<ExponentMatrix>> {
    let (d128, a128) = (i128::from(delta), i128::from(a));
    let egcd = a128.extended_gcd(&d128);
    if egcd.gcd != 1 {
        return Ok(None);
    }
    let a_inv = egcd.x.rem_euclid(d128);
    let e = ((d128 - 1) * a_inv).rem_euclid(d128);
    if e == d128 - 1 {
        return Ok(None);
    }
    let num = a128
        .checked_mul(e)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow("enumeration"))?;
    debug_assert_eq!(num % d128, 0);
    let r = num / d128;
    let c = a128 - r;
    let d = d128 - c - e;
    if c <= 0 || d <= 0 {
        return Ok(None);
    }
    let to_u64 = |x: i128| u64::try_from(x).map_err(|_| Error::Overflow("enumeration"));
    Ok(Some(ExponentMatrix::new([
        [0, 0, delta],
        [a, delta - a, 0],
        [to_u64(c)?, to_u64(d)?, to_u64(e)?],
    ])))
}

/// Every nonnegative exponent row of total degree `delta`.
pub fn rows_of_degree(delta: u64) -> Vec<[u64; 3]> {
    (0..=delta)
        .flat_map(|x| (0..=delta - x).map(move |y| [x, y, delta - x - y]))
        .collect()
}

/// Exhaustive search over all reduced equidegree matrices, keeping those
/// whose multidegree is `(1, δ, 1)`. Results are canonical forms under
/// independent row and column permutations, sorted.
pub fn brute_force_cremona(delta: u64) -> Result<Vec<ExponentMatrix>> {
    if delta < 2 {
        return Err(Error::DegreeOutOfRange(
            delta,
            "search starts at degree 2".into(),
        ));
    }
    if delta > BRUTE_FORCE_MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(
            delta,
            format!(
                "exhaustive search is limited to degree {BRUTE_FORCE_MAX_DEGREE}; use enumerate_cremona"
            ),
        ));
    }
    let rows = rows_of_degree(delta);
    let target = Multidegree::new(1, delta, 1);
    let shards: Vec<Result<BTreeSet<ExponentMatrix>>> = rows
        .par_iter()
        .map(|&r0| {
            let mut found = BTreeSet::new();
            for &r1 in &rows {
                for &r2 in &rows {
                    let m = ExponentMatrix::new([r0, r1, r2]);
                    if !m.is_reduced() {
                        continue;
                    }
                    let map = MonomialMap::new(m)?;
                    if multidegree(&map)? == target {
                        found.insert(m.row_column_canonical_form());
                    }
                }
            }
            Ok(found)
        })
        .collect();
    let mut all = BTreeSet::new();
    for shard in shards {
        all.extend(shard?);
    }
    Ok(all.into_iter().collect())
}

/// `{σ ⋆ m : σ ∈ S₃}`, sorted and deduplicated.
pub fn orbit(m: &ExponentMatrix) -> Vec<ExponentMatrix> {
    Permutation::all()
        .map(|s| m.sigma_star(s))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// The permutations fixing `m` under similarity.
pub fn stabilizer(m: &ExponentMatrix) -> Vec<Permutation> {
    Permutation::all()
        .filter(|s| m.sigma_star(*s) == *m)
        .collect()
}

/// Union of the similarity orbits of the enumerated normal forms.
pub fn enumerate_with_orbits(delta: u64) -> Result<Vec<ExponentMatrix>> {
    let all: BTreeSet<ExponentMatrix> = enumerate_cremona(delta)?.iter().flat_map(orbit).collect();
    Ok(all.into_iter().collect())
}
