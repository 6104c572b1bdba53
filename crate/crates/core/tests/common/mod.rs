//! Test-only oracles, kept independent of the library's geometry code.

#![allow(dead_code)]

use cremona_core::{Axis, Cell, ExponentMatrix};
use rand::Rng;

/// A rational point `coords / denom` with `denom > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalPoint {
    pub coords: [i128; 3],
    pub denom: i128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Outside,
    Boundary,
    Interior,
}

fn det3(m: [[i128; 3]; 3]) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

pub fn det4(m: &[[i128; 4]; 4]) -> i128 {
    (0..4)
        .map(|c| {
            let minor: [[i128; 3]; 3] = std::array::from_fn(|r| {
                let mut row = [0; 3];
                let mut k = 0;
                for (j, &x) in m[r + 1].iter().enumerate() {
                    if j != c {
                        row[k] = x;
                        k += 1;
                    }
                }
                row
            });
            let t = m[0][c] * det3(minor);
            if c % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

fn generator_columns(cell: &Cell) -> Vec<[i128; 4]> {
    cell.points()
        .iter()
        .map(|p| {
            let c = p.coords();
            [c[0] as i128, c[1] as i128, c[2] as i128, 1]
        })
        .chain(cell.rays().iter().map(|r| {
            let mut v = [0i128; 4];
            v[r.index()] = 1;
            v
        }))
        .collect()
}

/// Exact membership in a simplicial cell by Cramer's rule on the 4×4 system
/// `Σ λ_s (s, 1) + Σ μ_r (e_r, 0) = (x, 1)`.
pub fn locate(cell: &Cell, x: &RationalPoint) -> Membership {
    let cols = generator_columns(cell);
    assert_eq!(cols.len(), 4, "oracle needs a simplicial cell, got {cell}");
    let matrix: [[i128; 4]; 4] = std::array::from_fn(|r| std::array::from_fn(|c| cols[c][r]));
    let d = det4(&matrix);
    assert_ne!(d, 0, "degenerate cell {cell}");
    let target = [x.coords[0], x.coords[1], x.coords[2], x.denom];
    let mut on_boundary = false;
    for k in 0..4 {
        let mut mk = matrix;
        for r in 0..4 {
            mk[r][k] = target[r];
        }
        let dk = det4(&mk);
        if dk == 0 {
            on_boundary = true;
        } else if (dk > 0) != (d > 0) {
            return Membership::Outside;
        }
    }
    if on_boundary {
        Membership::Boundary
    } else {
        Membership::Interior
    }
}

/// A random point of `ch(rows) + cone(e₁,e₂,e₃)`; weights and ray
/// coefficients are sometimes zero so boundaries get sampled too.
pub fn sample_newton_point<R: Rng>(rng: &mut R, m: &ExponentMatrix) -> RationalPoint {
    let mut weights = [0i128; 3];
    loop {
        for w in weights.iter_mut() {
            *w = if rng.gen_bool(0.25) {
                0
            } else {
                rng.gen_range(1..=40)
            };
        }
        if weights.iter().sum::<i128>() > 0 {
            break;
        }
    }
    let denom: i128 = weights.iter().sum();
    let mut coords = [0i128; 3];
    for (i, row) in m.rows().iter().enumerate() {
        for j in 0..3 {
            coords[j] += weights[i] * row[j] as i128;
        }
    }
    for c in coords.iter_mut() {
        if !rng.gen_bool(0.3) {
            *c += rng.gen_range(0..=6 * denom);
        }
    }
    RationalPoint { coords, denom }
}

/// A strictly interior point of a simplicial cell.
pub fn sample_interior_point<R: Rng>(rng: &mut R, cell: &Cell) -> RationalPoint {
    let n = cell.points().len();
    let weights: Vec<i128> = (0..n).map(|_| rng.gen_range(1..=30)).collect();
    let denom: i128 = weights.iter().sum();
    let mut coords = [0i128; 3];
    for (p, w) in cell.points().iter().zip(&weights) {
        for (c, x) in coords.iter_mut().zip(p.coords()) {
            *c += w * x as i128;
        }
    }
    for r in cell.rays() {
        coords[r.index()] += rng.gen_range(1..=5 * denom);
    }
    RationalPoint { coords, denom }
}

/// Euler's totient by counting.
pub fn totient(n: u64) -> usize {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

/// `|det M| / δ` via the 2×2 exponent differences, written out by hand.
pub fn lattice_index(m: &ExponentMatrix) -> u64 {
    let r = m.rows();
    let u = [
        r[1][0] as i128 - r[0][0] as i128,
        r[1][1] as i128 - r[0][1] as i128,
    ];
    let v = [
        r[2][0] as i128 - r[0][0] as i128,
        r[2][1] as i128 - r[0][1] as i128,
    ];
    (u[0] * v[1] - u[1] * v[0]).unsigned_abs() as u64
}

/// All reduced 3×3 matrices whose rows sum to `delta`.
pub fn reduced_equidegree(delta: u64) -> Vec<ExponentMatrix> {
    let rows: Vec<[u64; 3]> = (0..=delta)
        .flat_map(|x| (0..=delta - x).map(move |y| [x, y, delta - x - y]))
        .collect();
    let mut out = Vec::new();
    for &a in &rows {
        for &b in &rows {
            for &c in &rows {
                let m = ExponentMatrix::new([a, b, c]);
                if m.column_minima() == [0, 0, 0] {
                    out.push(m);
                }
            }
        }
    }
    out
}

/// A uniformly random reduced matrix of degree `delta`.
pub fn random_reduced<R: Rng>(rng: &mut R, delta: u64) -> ExponentMatrix {
    loop {
        let rows: [[u64; 3]; 3] = std::array::from_fn(|_| {
            let x = rng.gen_range(0..=delta);
            let y = rng.gen_range(0..=delta - x);
            [x, y, delta - x - y]
        });
        let m = ExponentMatrix::new(rows);
        if m.is_reduced() {
            return m;
        }
    }
}

pub fn axes(names: &[u8]) -> Vec<Axis> {
    names
        .iter()
        .map(|&i| Axis::from_index(i as usize - 1).unwrap())
        .collect()
}
