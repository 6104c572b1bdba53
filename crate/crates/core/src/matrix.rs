//! Exponent matrices of monomial maps `P² ⇢ P²`.
//!
//! Row `i` holds the exponents of the `i`-th output monomial, column `j` the
//! exponents of the `j`-th input variable. All arithmetic is exact and every
//! overflow surfaces as [`Error::Overflow`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A 3×3 matrix of nonnegative integer exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExponentMatrix {
    rows: [[u64; 3]; 3],
}

impl ExponentMatrix {
    pub const fn new(rows: [[u64; 3]; 3]) -> Self {
        ExponentMatrix { rows }
    }

    pub const fn identity() -> Self {
        ExponentMatrix::new([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    /// The standard quadratic involution `(x:y:z) ↦ (yz:xz:xy)`.
    pub const fn standard_involution() -> Self {
        ExponentMatrix::new([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    }

    pub const fn zero() -> Self {
        ExponentMatrix::new([[0; 3]; 3])
    }

    pub fn rows(&self) -> &[[u64; 3]; 3] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> [u64; 3] {
        self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j]
    }

    pub fn max_entry(&self) -> u64 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn column_minima(&self) -> [u64; 3] {
        std::array::from_fn(|j| (0..3).map(|i| self.rows[i][j]).min().unwrap())
    }

    pub fn row_sums(&self) -> Result<[u64; 3]> {
        let mut sums = [0u64; 3];
        for (sum, row) in sums.iter_mut().zip(&self.rows) {
            *sum = row
                .iter()
                .try_fold(0u64, |acc, &x| acc.checked_add(x))
                .ok_or(Error::Overflow("row sum"))?;
        }
        Ok(sums)
    }

    pub fn is_reduced(&self) -> bool {
        self.column_minima() == [0, 0, 0]
    }

    pub fn is_equidegree(&self) -> bool {
        matches!(self.row_sums(), Ok([a, b, c]) if a == b && b == c)
    }

    /// Divides out the common monomial factor of the three rows, i.e.
    /// subtracts each column's minimum from that column.
    pub fn reduce(&self) -> ExponentMatrix {
        let minima = self.column_minima();
        let mut rows = self.rows;
        for row in rows.iter_mut() {
            for (x, m) in row.iter_mut().zip(minima) {
                *x -= m;
            }
        }
        ExponentMatrix::new(rows)
    }

    /// Adds `shift` to every row. On exponents this multiplies all three
    /// monomials by the same monomial, which leaves the projective map unchanged.
    pub fn shift_rows(&self, shift: [u64; 3]) -> Result<ExponentMatrix> {
        let mut rows = self.rows;
        for row in rows.iter_mut() {
            for (x, s) in row.iter_mut().zip(shift) {
                *x = x.checked_add(s).ok_or(Error::Overflow("row shift"))?;
            }
        }
        Ok(ExponentMatrix::new(rows))
    }

    /// The common row sum δ.
    pub fn degree(&self) -> Result<u64> {
        let [a, b, c] = self.row_sums()?;
        if a != b || b != c {
            return Err(Error::NotEquidegree(a, b, c));
        }
        if a == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(a)
    }

    pub fn determinant(&self) -> Result<i128> {
        let m = self.to_i128();
        det3(&m).ok_or(Error::Overflow("determinant"))
    }

    /// Classical adjugate: `self · adj = det · I`.
    pub fn adjugate(&self) -> Result<[[i128; 3]; 3]> {
        let m = self.to_i128();
        let mut adj = [[0i128; 3]; 3];
        for (i, adj_row) in adj.iter_mut().enumerate() {
            for (j, out) in adj_row.iter_mut().enumerate() {
                // cofactor C_ji, transposed into place
                let (r0, r1) = others(j);
                let (c0, c1) = others(i);
                let minor = m[r0][c0]
                    .checked_mul(m[r1][c1])
                    .zip(m[r0][c1].checked_mul(m[r1][c0]))
                    .and_then(|(p, q)| p.checked_sub(q))
                    .ok_or(Error::Overflow("adjugate"))?;
                *out = if (i + j) % 2 == 0 { minor } else { -minor };
            }
        }
        Ok(adj)
    }

    /// Raw matrix product `self · rhs`, no reduction.
    pub fn product(&self, rhs: &ExponentMatrix) -> Result<ExponentMatrix> {
        let mut rows = [[0u64; 3]; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                *out = (0..3)
                    .try_fold(0u64, |acc, k| {
                        self.rows[i][k]
                            .checked_mul(rhs.rows[k][j])
                            .and_then(|p| acc.checked_add(p))
                    })
                    .ok_or(Error::Overflow("matrix product"))?;
            }
        }
        Ok(ExponentMatrix::new(rows))
    }

    /// Exponent matrix of `outer ∘ inner`, reduced.
    pub fn compose(outer: &ExponentMatrix, inner: &ExponentMatrix) -> Result<ExponentMatrix> {
        outer.degree()?;
        inner.degree()?;
        Ok(outer.product(inner)?.reduce())
    }

    /// Applies row permutation `rows` and column permutation `cols`
    /// independently: entry `(i, j)` moves to `(rows(i), cols(j))`.
    pub fn permute(&self, rows: Permutation, cols: Permutation) -> ExponentMatrix {
        let mut out = [[0u64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[rows.apply(i)][cols.apply(j)] = self.rows[i][j];
            }
        }
        ExponentMatrix::new(out)
    }

    /// Permutation similarity `σ ⋆ M = Zᵀ M Z`: rows and columns permuted by the same σ.
    pub fn sigma_star(&self, sigma: Permutation) -> ExponentMatrix {
        self.permute(sigma, sigma)
    }

    /// Lexicographically least (row-major) element of the similarity orbit.
    pub fn canonical_form(&self) -> ExponentMatrix {
        Permutation::all()
            .map(|s| self.sigma_star(s))
            .min()
            .unwrap()
    }

    /// Lexicographically least element of the orbit under independent row
    /// and column permutations (36 group elements).
    pub fn row_column_canonical_form(&self) -> ExponentMatrix {
        let mut best = *self;
        for r in Permutation::all() {
            for c in Permutation::all() {
                best = best.min(self.permute(r, c));
            }
        }
        best
    }

    pub fn transpose(&self) -> ExponentMatrix {
        ExponentMatrix::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.rows[j][i])
        }))
    }

    fn to_i128(self) -> [[i128; 3]; 3] {
        self.rows.map(|r| r.map(i128::from))
    }
}

fn others(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

pub(crate) fn det3(m: &[[i128; 3]; 3]) -> Option<i128> {
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
        m[r0][c0]
            .checked_mul(m[r1][c1])?
            .checked_sub(m[r0][c1].checked_mul(m[r1][c0])?)
    };
    let t0 = m[0][0].checked_mul(minor(1, 2, 1, 2)?)?;
    let t1 = m[0][1].checked_mul(minor(1, 2, 0, 2)?)?;
    let t2 = m[0][2].checked_mul(minor(1, 2, 0, 1)?)?;
    t0.checked_sub(t1)?.checked_add(t2)
}

impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{},{},{}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

impl FromStr for ExponentMatrix {
    type Err = Error;

    /// Parses `"a,b,c;d,e,f;g,h,i"`. Whitespace is ignored.
    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let rows: Vec<&str> = compact.split(';').collect();
        if rows.len() != 3 {
            return Err(Error::Shape(format!(
                "expected 3 rows separated by ';', found {}",
                rows.len()
            )));
        }
        let mut out = [[0u64; 3]; 3];
        for (i, row) in rows.iter().enumerate() {
            let entries: Vec<&str> = row.split(',').collect();
            if entries.len() != 3 {
                return Err(Error::Shape(format!(
                    "row {} has {} entries, expected 3",
                    i + 1,
                    entries.len()
                )));
            }
            for (j, entry) in entries.iter().enumerate() {
                let err = |message: String| Error::Parse {
                    row: i + 1,
                    column: j + 1,
                    message,
                };
                if entry.is_empty() {
                    return Err(err("empty entry".into()));
                }
                if entry.starts_with('-') && entry[1..].parse::<u64>().is_ok() {
                    return Err(err(format!("negative entry {entry}")));
                }
                out[i][j] = entry
                    .parse::<u64>()
                    .map_err(|e| err(format!("{entry:?}: {e}")))?;
            }
        }
        Ok(ExponentMatrix::new(out))
    }
}

impl From<[[u64; 3]; 3]> for ExponentMatrix {
    fn from(rows: [[u64; 3]; 3]) -> Self {
        ExponentMatrix::new(rows)
    }
}

/// A reduced, equidegree exponent matrix together with its degree δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialMap {
    matrix: ExponentMatrix,
    delta: u64,
}

impl MonomialMap {
    pub fn new(matrix: ExponentMatrix) -> Result<Self> {
        let delta = matrix.degree()?;
        if !matrix.is_reduced() {
            return Err(Error::NotReduced(matrix.column_minima()));
        }
        Ok(MonomialMap { matrix, delta })
    }

    /// Reduces first; fails only when the reduced matrix is not equidegree
    /// of positive degree.
    pub fn from_unreduced(matrix: ExponentMatrix) -> Result<Self> {
        MonomialMap::new(matrix.reduce())
    }

    pub fn matrix(&self) -> &ExponentMatrix {
        &self.matrix
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn compose(&self, inner: &MonomialMap) -> Result<MonomialMap> {
        MonomialMap::new(ExponentMatrix::compose(&self.matrix, &inner.matrix)?)
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

impl FromStr for MonomialMap {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        MonomialMap::new(text.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: [[u64; 3]; 3]) -> ExponentMatrix {
        ExponentMatrix::new(rows)
    }

    #[test]
    fn parses_reference_matrices() {
        let inv: ExponentMatrix = "0,1,1;1,0,1;1,1,0".parse().unwrap();
        assert_eq!(inv, ExponentMatrix::standard_involution());
        let m1: ExponentMatrix = "0,0,5;4,1,0;3,1,1".parse().unwrap();
        assert_eq!(m1, m([[0, 0, 5], [4, 1, 0], [3, 1, 1]]));
        let spaced: ExponentMatrix = " 0, 0,5 ;4,1, 0;3,1,1\n".parse().unwrap();
        assert_eq!(spaced, m1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "1,2;3,4".parse::<ExponentMatrix>(),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            "1,2,3;4,5;6,7,8".parse::<ExponentMatrix>(),
            Err(Error::Shape(_))
        ));
        match "0,0,1;1,-2,0;0,1,0".parse::<ExponentMatrix>() {
            Err(Error::Parse {
                row: 2,
                column: 2,
                message,
            }) => {
                assert!(message.contains("negative"))
            }
            other => panic!("unexpected {other:?}"),
        }
        match "0,0,1;1,x,0;0,1,0".parse::<ExponentMatrix>() {
            Err(Error::Parse {
                row: 2, column: 2, ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "0,0,1;1,,0;0,1,0".parse::<ExponentMatrix>(),
            Err(Error::Parse {
                row: 2,
                column: 2,
                ..
            })
        ));
    }

    #[test]
    fn display_round_trips() {
        let m1 = m([[0, 0, 5], [4, 1, 0], [3, 1, 1]]);
        assert_eq!(m1.to_string(), "0,0,5;4,1,0;3,1,1");
        assert_eq!(m1.to_string().parse::<ExponentMatrix>().unwrap(), m1);
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(
            ExponentMatrix::identity().reduce(),
            ExponentMatrix::identity()
        );
        assert_eq!(
            m([[1, 1, 2], [2, 1, 1], [1, 2, 1]]).reduce(),
            m([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
        );
        let squared = m([[15, 5, 5], [4, 1, 20], [7, 2, 16]]);
        assert_eq!(squared.reduce(), m([[11, 4, 0], [0, 0, 15], [3, 1, 11]]));
        assert_eq!(squared.reduce().degree().unwrap(), 15);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(ExponentMatrix::standard_involution().degree().unwrap(), 2);
        assert_eq!(m([[0, 0, 5], [4, 1, 0], [3, 1, 1]]).degree().unwrap(), 5);
        assert_eq!(
            m([[0, 0, 1], [1, 0, 0], [0, 2, 0]]).degree(),
            Err(Error::NotEquidegree(1, 1, 2))
        );
        assert_eq!(ExponentMatrix::zero().degree(), Err(Error::ZeroDegree));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            ExponentMatrix::standard_involution().determinant().unwrap(),
            2
        );
        assert_eq!(
            m([[0, 0, 3], [0, 3, 0], [2, 1, 0]]).determinant().unwrap(),
            -18
        );
        assert_eq!(ExponentMatrix::identity().determinant().unwrap(), 1);
    }

    #[test]
    fn determinant_overflow_is_reported() {
        let big = u64::MAX;
        let huge = m([[big, big, 0], [0, big, big], [big, 0, big]]);
        assert_eq!(huge.determinant(), Err(Error::Overflow("determinant")));
        assert!(matches!(huge.product(&huge), Err(Error::Overflow(_))));
        assert!(matches!(huge.row_sums(), Err(Error::Overflow(_))));
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn adjugate_is_inverse_up_to_det() {
        let a = m([[0, 0, 3], [2, 1, 0], [1, 1, 1]]);
        let adj = a.adjugate().unwrap();
        let det = a.determinant().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let s: i128 = (0..3).map(|k| a.get(i, k) as i128 * adj[k][j]).sum();
                assert_eq!(s, if i == j { det } else { 0 });
            }
        }
    }

    #[test]
    fn compose_examples() {
        let m1 = m([[0, 0, 5], [4, 1, 0], [3, 1, 1]]);
        assert_eq!(
            m1.product(&m1).unwrap(),
            m([[15, 5, 5], [4, 1, 20], [7, 2, 16]])
        );
        let sq = ExponentMatrix::compose(&m1, &m1).unwrap();
        assert_eq!(sq, m([[11, 4, 0], [0, 0, 15], [3, 1, 11]]));
        assert_eq!(sq.degree().unwrap(), 15);
        assert_eq!(
            ExponentMatrix::compose(&ExponentMatrix::identity(), &m1).unwrap(),
            m1.reduce()
        );
        assert!(ExponentMatrix::compose(&m([[0, 0, 1], [1, 0, 0], [0, 2, 0]]), &m1).is_err());
    }

    #[test]
    fn sigma_star_examples() {
        let swap = Permutation::transposition(0, 1);
        let a = m([[0, 0, 3], [2, 1, 0], [1, 1, 1]]);
        assert_eq!(a.sigma_star(Permutation::identity()), a);
        assert_eq!(a.sigma_star(swap), m([[1, 2, 0], [0, 0, 3], [1, 1, 1]]));
        let inv = ExponentMatrix::standard_involution();
        assert_eq!(inv.sigma_star(swap), inv);
    }

    #[test]
    fn canonical_form_examples() {
        let inv = ExponentMatrix::standard_involution();
        assert_eq!(inv.canonical_form(), inv);
        let a = m([[1, 2, 0], [0, 0, 3], [1, 1, 1]]);
        let b = m([[0, 0, 3], [2, 1, 0], [1, 1, 1]]);
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_eq!(a.canonical_form().canonical_form(), a.canonical_form());
    }

    #[test]
    fn monomial_map_validation() {
        assert!(MonomialMap::new(ExponentMatrix::standard_involution()).is_ok());
        assert_eq!(
            MonomialMap::new(m([[1, 1, 2], [2, 1, 1], [1, 2, 1]])),
            Err(Error::NotReduced([1, 1, 1]))
        );
        let reduced = MonomialMap::from_unreduced(m([[1, 1, 2], [2, 1, 1], [1, 2, 1]])).unwrap();
        assert_eq!(reduced.delta(), 1);
        assert!(MonomialMap::new(m([[0, 0, 1], [1, 0, 0], [0, 2, 0]])).is_err());
    }
}
