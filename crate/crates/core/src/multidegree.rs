//! Multidegree `(γ₀, γ₁, γ₂)` of a monomial map from normalized volumes of
//! its triangulated Newton polyhedron.
//!
//! A simplicial cell `⟨S;V⟩` is projected onto the coordinate subspace
//! spanned by the axes not in `V`; its projection is a lattice simplex of
//! dimension `|S| - 1`, and `γᵢ` sums the normalized volumes of the cells
//! with `|S| = i + 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::MonomialMap;
use crate::polyhedron::{Axis, Cell, LatticePoint, NewtonPolyhedron};
use crate::triangulation::{triangulate, triangulate_default, Triangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Multidegree {
    pub gamma0: u64,
    pub gamma1: u64,
    pub gamma2: u64,
}

impl Multidegree {
    pub const fn new(gamma0: u64, gamma1: u64, gamma2: u64) -> Self {
        Multidegree {
            gamma0,
            gamma1,
            gamma2,
        }
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.gamma0, self.gamma1, self.gamma2]
    }

    /// The Cremona signature `(1, δ, 1)`.
    pub fn is_cremona_for(&self, delta: u64) -> bool {
        *self == Multidegree::new(1, delta, 1)
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.gamma0, self.gamma1, self.gamma2)
    }
}

/// Coordinates of `S` restricted to the axes not in `V`.
pub fn project(cell: &Cell) -> Result<Vec<Vec<i64>>> {
    if cell.order() != 4 {
        return Err(Error::NotSimplicial(cell.to_string(), cell.order()));
    }
    let kept: Vec<usize> = Axis::ALL
        .iter()
        .filter(|a| !cell.has_ray(**a))
        .map(|a| a.index())
        .collect();
    Ok(cell
        .points()
        .iter()
        .map(|p: &LatticePoint| {
            let c = p.coords();
            kept.iter().map(|&i| c[i]).collect()
        })
        .collect())
}

/// `i!` times the Euclidean volume of the simplex spanned by `i + 1`
/// lattice points in `ℝⁱ`, for `i ≤ 2`.
pub fn normalized_volume(points: &[Vec<i64>]) -> Result<u64> {
    let dimension = points.first().map(Vec::len).unwrap_or(0);
    if points.len() != dimension + 1 || points.iter().any(|p| p.len() != dimension) {
        return Err(Error::PointCount {
            expected: dimension + 1,
            dimension,
            got: points.len(),
        });
    }
    let overflow = || Error::Overflow("normalized volume");
    let p: Vec<Vec<i128>> = points
        .iter()
        .map(|q| q.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let v = match dimension {
        0 => 1,
        1 => (p[1][0] - p[0][0]).abs(),
        2 => {
            // |det [[x0,y0,1],[x1,y1,1],[x2,y2,1]]|
            let (dx1, dy1) = (p[1][0] - p[0][0], p[1][1] - p[0][1]);
            let (dx2, dy2) = (p[2][0] - p[0][0], p[2][1] - p[0][1]);
            dx1.checked_mul(dy2)
                .zip(dx2.checked_mul(dy1))
                .and_then(|(a, b)| a.checked_sub(b))
                .ok_or_else(overflow)?
                .abs()
        }
        _ => {
            return Err(Error::PointCount {
                expected: 3,
                dimension,
                got: points.len(),
            })
        }
    };
    u64::try_from(v).map_err(|_| overflow())
}

/// Sums projected volumes per `|S| - 1` bucket.
pub fn multidegree_of(t: &Triangulation) -> Result<Multidegree> {
    let mut gammas = [0u64; 3];
    for cell in t.cells() {
        let bucket = cell.points().len() - 1;
        let volume = normalized_volume(&project(cell)?)?;
        gammas[bucket] = gammas[bucket]
            .checked_add(volume)
            .ok_or(Error::Overflow("multidegree"))?;
    }
    Ok(Multidegree::new(gammas[0], gammas[1], gammas[2]))
}

pub fn multidegree(m: &MonomialMap) -> Result<Multidegree> {
    let n = NewtonPolyhedron::new(m.matrix())?;
    multidegree_of(&triangulate_default(&n)?)
}

/// Multidegree computed from an explicitly chosen distinguished vertex.
pub fn multidegree_from_vertex(m: &MonomialMap, p: &LatticePoint) -> Result<Multidegree> {
    let n = NewtonPolyhedron::new(m.matrix())?;
    multidegree_of(&triangulate(&n, p)?)
}

/// `|det(M)| / δ`, computed as the 2×2 determinant of `(B - A, C - A)` with
/// the third coordinate dropped.
pub fn torus_degree(m: &MonomialMap) -> Result<u64> {
    torus_degree_dropping(m, Axis::E3)
}

/// As [`torus_degree`], dehomogenizing by `axis` instead.
pub fn torus_degree_dropping(m: &MonomialMap, axis: Axis) -> Result<u64> {
    if m.matrix().determinant()? == 0 {
        return Err(Error::NonDominant);
    }
    let kept: Vec<usize> = (0..3).filter(|&i| i != axis.index()).collect();
    let row = |r: usize| -> Vec<i128> {
        kept.iter()
            .map(|&j| i128::from(m.matrix().get(r, j)) - i128::from(m.matrix().get(0, j)))
            .collect()
    };
    let (u, v) = (row(1), row(2));
    let det = u[0]
        .checked_mul(v[1])
        .zip(u[1].checked_mul(v[0]))
        .and_then(|(a, b)| a.checked_sub(b))
        .ok_or(Error::Overflow("torus degree"))?;
    u64::try_from(det.abs()).map_err(|_| Error::Overflow("torus degree"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ExponentMatrix;
    use crate::polyhedron::Axis::{E1, E2, E3};

    fn map(rows: [[u64; 3]; 3]) -> MonomialMap {
        MonomialMap::new(ExponentMatrix::new(rows)).unwrap()
    }

    fn pt(x: i64, y: i64, z: i64) -> LatticePoint {
        LatticePoint::new([x, y, z]).unwrap()
    }

    #[test]
    fn projection_examples() {
        let (delta, a, b) = (5, 4, 1);
        let pa = pt(0, 0, delta);
        let pb = pt(a, b, 0);
        let pc = pt(3, 1, 1);
        let segment = Cell::new([pa, pb], [E2, E3]).unwrap();
        let mut proj = project(&segment).unwrap();
        proj.sort();
        assert_eq!(proj, vec![vec![0], vec![a]]);
        assert_eq!(normalized_volume(&proj).unwrap(), a as u64);

        let apex = Cell::new([pb], [E1, E2, E3]).unwrap();
        assert_eq!(project(&apex).unwrap(), vec![Vec::<i64>::new()]);
        assert_eq!(normalized_volume(&project(&apex).unwrap()).unwrap(), 1);

        let tri = Cell::new([pa, pb, pc], [E1]).unwrap();
        let proj = project(&tri).unwrap();
        let mut got = proj.clone();
        got.sort();
        assert_eq!(got, vec![vec![0, delta], vec![1, 0], vec![1, 1]]);
        // |δd + be - δb| with d = 1, e = 1
        assert_eq!(
            normalized_volume(&proj).unwrap(),
            (delta + b - delta * b).unsigned_abs()
        );
    }

    #[test]
    fn projection_requires_order_four() {
        let c = Cell::new([pt(0, 0, 1)], [E1]).unwrap();
        assert!(matches!(project(&c), Err(Error::NotSimplicial(_, 2))));
    }

    #[test]
    fn volume_point_count_errors() {
        assert!(normalized_volume(&[]).is_err());
        assert!(normalized_volume(&[vec![0], vec![1], vec![2]]).is_err());
        assert!(normalized_volume(&[vec![0, 0], vec![1]]).is_err());
        assert!(
            normalized_volume(&[vec![0; 3], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).is_err()
        );
        assert_eq!(
            normalized_volume(&[vec![0, 3], vec![0, 0], vec![2, 0]]).unwrap(),
            6
        );
    }

    #[test]
    fn golden_multidegrees() {
        assert_eq!(
            multidegree(&map([[0, 1, 1], [1, 0, 1], [1, 1, 0]])).unwrap(),
            Multidegree::new(1, 2, 1)
        );
        assert_eq!(
            multidegree(&map([[0, 0, 3], [0, 3, 0], [2, 1, 0]])).unwrap(),
            Multidegree::new(1, 3, 6)
        );
        assert_eq!(
            multidegree(&map([[0, 0, 2], [1, 1, 0], [0, 1, 1]])).unwrap(),
            Multidegree::new(1, 2, 1)
        );
    }

    #[test]
    fn torus_degree_examples() {
        assert_eq!(
            torus_degree(&map([[0, 1, 1], [1, 0, 1], [1, 1, 0]])).unwrap(),
            1
        );
        assert_eq!(
            torus_degree(&map([[0, 0, 3], [0, 3, 0], [2, 1, 0]])).unwrap(),
            6
        );
        assert_eq!(
            torus_degree(&map([[0, 0, 5], [4, 1, 0], [3, 1, 1]])).unwrap(),
            1
        );
        assert_eq!(
            torus_degree(&map([[0, 0, 2], [1, 0, 1], [2, 0, 0]])),
            Err(Error::NonDominant)
        );
    }

    #[test]
    fn torus_degree_independent_of_dropped_axis() {
        for rows in [
            [[0, 0, 3], [0, 3, 0], [2, 1, 0]],
            [[0, 2, 5], [4, 3, 0], [1, 0, 6]],
            [[0, 0, 5], [4, 1, 0], [3, 1, 1]],
        ] {
            let m = map(rows);
            let expected = torus_degree(&m).unwrap();
            for axis in Axis::ALL {
                assert_eq!(torus_degree_dropping(&m, axis).unwrap(), expected);
            }
        }
    }

    #[test]
    fn duplicate_rows_have_no_gamma2() {
        let m = map([[0, 0, 2], [0, 0, 2], [1, 1, 0]]);
        let md = multidegree(&m).unwrap();
        assert_eq!(md.gamma0, 1);
        assert_eq!(md.gamma2, 0);
    }
}
