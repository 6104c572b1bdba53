//! Closed-form recognition of monomial Cremona transformations and their inverses.
//!
//! Up to independent row and column permutations a reduced monomial Cremona
//! map of degree `δ ≥ 2` is one of
//!
//! * (I)   the standard involution `[[0,1,1],[1,0,1],[1,1,0]]`,
//! * (II)  `[[0,0,δ],[1,δ-1,0],[0,1,δ-1]]`,
//! * (III) `[[0,0,δ],[a,b,0],[c,d,e]]` with `c, d > 0`, `a + b = δ`,
//!   `c + d + e = δ` and `ad - bc = 1`.
//!
//! Degree one maps are coordinate permutations and are tagged [`Family::Linear`].

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{ExponentMatrix, MonomialMap};
use crate::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    I,
    II,
    III,
    Linear,
    None,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::I => "I",
            Family::II => "II",
            Family::III => "III",
            Family::Linear => "linear",
            Family::None => "none",
        })
    }
}

/// Entries of the normal form `[[0,0,δ],[a,b,0],[c,d,e]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub e: u64,
    pub delta: u64,
}

impl Params {
    pub fn matrix(&self) -> ExponentMatrix {
        ExponentMatrix::new([
            [0, 0, self.delta],
            [self.a, self.b, 0],
            [self.c, self.d, self.e],
        ])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub is_cremona: bool,
    pub family: Family,
    /// Degree of the reduced matrix, when it is equidegree.
    pub delta: Option<u64>,
    pub params: Option<Params>,
    /// Row and column permutations taking the reduced input to its normal form.
    pub witness: Option<(Permutation, Permutation)>,
    /// Why the map is not Cremona, if it is not.
    pub reason: Option<String>,
}

impl Classification {
    fn rejected(delta: Option<u64>, reason: impl Into<String>) -> Self {
        Classification {
            is_cremona: false,
            family: Family::None,
            delta,
            params: None,
            witness: None,
            reason: Some(reason.into()),
        }
    }
}

pub fn family_two(delta: u64) -> ExponentMatrix {
    ExponentMatrix::new([[0, 0, delta], [1, delta - 1, 0], [0, 1, delta - 1]])
}

/// Classifies the map defined by `m`. The matrix is reduced first, since
/// dividing out a common monomial factor does not change the map.
pub fn classify(m: &ExponentMatrix) -> Classification {
    let reduced = m.reduce();
    let delta = match reduced.degree() {
        Ok(d) => d,
        Err(e) => return Classification::rejected(None, e.to_string()),
    };

    let pairs = || Permutation::all().flat_map(|r| Permutation::all().map(move |c| (r, c)));

    if delta == 1 {
        return match reduced.determinant() {
            Ok(d) if d.abs() == 1 => Classification {
                is_cremona: true,
                family: Family::Linear,
                delta: Some(1),
                params: None,
                witness: pairs()
                    .find(|(r, c)| reduced.permute(*r, *c) == ExponentMatrix::identity()),
                reason: None,
            },
            _ => Classification::rejected(Some(1), "degree one map with a repeated coordinate"),
        };
    }

    let accept = |family, params, witness| Classification {
        is_cremona: true,
        family,
        delta: Some(delta),
        params,
        witness: Some(witness),
        reason: None,
    };

    if delta == 2 {
        if let Some(w) =
            pairs().find(|(r, c)| reduced.permute(*r, *c) == ExponentMatrix::standard_involution())
        {
            return accept(Family::I, None, w);
        }
    }

    let two = family_two(delta);
    if let Some(w) = pairs().find(|(r, c)| reduced.permute(*r, *c) == two) {
        let params = Params {
            a: 1,
            b: delta - 1,
            c: 0,
            d: 1,
            e: delta - 1,
            delta,
        };
        return accept(Family::II, Some(params), w);
    }

    for (r, c) in pairs() {
        if let Some(params) = match_family_three(&reduced.permute(r, c), delta) {
            return accept(Family::III, Some(params), (r, c));
        }
    }

    let reason = match reduced.determinant() {
        Ok(0) => "determinant is zero".to_string(),
        Ok(d) if d.unsigned_abs() != u128::from(delta) => {
            format!(
                "|det| = {} differs from the degree {delta}",
                d.unsigned_abs()
            )
        }
        Ok(_) => "no row/column arrangement matches a Cremona normal form".to_string(),
        Err(e) => e.to_string(),
    };
    Classification::rejected(Some(delta), reason)
}

fn match_family_three(p: &ExponentMatrix, delta: u64) -> Option<Params> {
    let rows = p.rows();
    if rows[0] != [0, 0, delta] || rows[1][2] != 0 {
        return None;
    }
    let [a, b, _] = rows[1];
    let [c, d, e] = rows[2];
    if c == 0 || d == 0 {
        return None;
    }
    // row sums already hold; ad - bc = 1 after the column swap normalization
    let det = i128::from(a) * i128::from(d) - i128::from(b) * i128::from(c);
    (det == 1).then_some(Params {
        a,
        b,
        c,
        d,
        e,
        delta,
    })
}

/// Inverse of a Cremona map, reduced.
///
/// With `|det M| = δ`, every column of `sign(det) · adj(M)` is constant
/// modulo δ; shifting each column so its minimum is zero and dividing by δ
/// gives a nonnegative exponent matrix `N` with `M·N` equal to the identity
/// up to a common row shift.
pub fn inverse(m: &MonomialMap) -> Result<MonomialMap> {
    let class = classify(m.matrix());
    if !class.is_cremona {
        return Err(Error::NotCremona(
            class.reason.unwrap_or_else(|| "not Cremona".into()),
        ));
    }
    let delta = i128::from(m.delta());
    let det = m.matrix().determinant()?;
    if det.abs() != delta {
        return Err(Error::NotCremona(format!("|det| = {} ≠ δ", det.abs())));
    }
    let adj = m.matrix().adjugate()?;
    let sign = det.signum();
    let mut rows = [[0u64; 3]; 3];
    for j in 0..3 {
        let column: [i128; 3] = std::array::from_fn(|i| sign * adj[i][j]);
        let low = *column.iter().min().unwrap();
        for i in 0..3 {
            let shifted = column[i] - low;
            if shifted % delta != 0 {
                return Err(Error::NotCremona(format!(
                    "adjugate column {} is not constant modulo δ",
                    j + 1
                )));
            }
            rows[i][j] = u64::try_from(shifted / delta).map_err(|_| Error::Overflow("inverse"))?;
        }
    }
    MonomialMap::new(ExponentMatrix::new(rows))
}

/// Whether `a` and `b` define the same map: equal after reduction.
pub fn same_map(a: &ExponentMatrix, b: &ExponentMatrix) -> bool {
    a.reduce() == b.reduce()
}
