//! Newton polyhedra `N = ch({A,B,C}) + cone(e₁,e₂,e₃)` and their faces.
//!
//! Everything here is exact integer arithmetic. Faces are found by
//! enumerating candidate linear functionals built from cross products of the
//! generator directions; with at most three points and three rays the
//! candidate list is tiny.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::matrix::{ExponentMatrix, MonomialMap};

/// Largest coordinate accepted by the geometry code. Keeps every
/// intermediate product comfortably inside `i128`.
pub const GEOMETRY_LIMIT: u64 = 1 << 24;

type Vec3 = [i128; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint([i64; 3]);

impl LatticePoint {
    pub fn new(coords: [i64; 3]) -> Result<Self> {
        for &c in &coords {
            if c < 0 {
                return Err(Error::InvalidCell(format!("negative coordinate {c}")));
            }
            if c as u64 > GEOMETRY_LIMIT {
                return Err(Error::EntryTooLarge(c as u64, GEOMETRY_LIMIT));
            }
        }
        Ok(LatticePoint(coords))
    }

    pub fn coords(&self) -> [i64; 3] {
        self.0
    }

    fn as_vec(&self) -> Vec3 {
        self.0.map(i128::from)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Accepts `(x,y,z)` or a bare `x,y,z`.
impl FromStr for LatticePoint {
    type Err = Error;

    fn from_str(text: &str) -> Result<LatticePoint> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidCell(format!("cannot parse point {text:?}"));
        let body = compact
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(&compact);
        let parsed: Vec<i64> = body
            .split(',')
            .map(|c| c.parse::<i64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        LatticePoint::new(parsed.try_into().map_err(|_| bad())?)
    }
}

/// A recession direction, one of the standard basis vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    E1,
    E2,
    E3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::E1, Axis::E2, Axis::E3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Axis> {
        Axis::ALL.get(i).copied()
    }

    fn as_vec(self) -> Vec3 {
        let mut v = [0; 3];
        v[self.index()] = 1;
        v
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.index() + 1)
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Axis> {
        match s {
            "e1" => Ok(Axis::E1),
            "e2" => Ok(Axis::E2),
            "e3" => Ok(Axis::E3),
            _ => Err(Error::InvalidCell(format!("unknown axis {s:?}"))),
        }
    }
}

/// The polyhedron `⟨S;V⟩ = ch(S) + cone(V)`.
///
/// Points and rays are kept sorted and deduplicated, so two cells compare
/// equal exactly when their generator sets are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    points: Vec<LatticePoint>,
    rays: Vec<Axis>,
}

impl Cell {
    pub fn new(
        points: impl IntoIterator<Item = LatticePoint>,
        rays: impl IntoIterator<Item = Axis>,
    ) -> Result<Cell> {
        let points: BTreeSet<_> = points.into_iter().collect();
        let rays: BTreeSet<_> = rays.into_iter().collect();
        if points.is_empty() {
            return Err(Error::InvalidCell("a cell needs at least one point".into()));
        }
        if points.len() > 3 {
            return Err(Error::InvalidCell(format!(
                "{} points; at most 3 are supported",
                points.len()
            )));
        }
        Ok(Cell {
            points: points.into_iter().collect(),
            rays: rays.into_iter().collect(),
        })
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn rays(&self) -> &[Axis] {
        &self.rays
    }

    /// `|S| + |V|`.
    pub fn order(&self) -> usize {
        self.points.len() + self.rays.len()
    }

    pub fn contains_point(&self, p: &LatticePoint) -> bool {
        self.points.contains(p)
    }

    pub fn has_ray(&self, axis: Axis) -> bool {
        self.rays.contains(&axis)
    }

    /// Dimension of the affine hull.
    pub fn dimension(&self) -> usize {
        rank(&self.directions())
    }

    /// The pyramid `⟨{apex} ∪ S; V⟩`.
    pub fn cone_from(&self, apex: LatticePoint) -> Cell {
        let mut points = self.points.clone();
        if !points.contains(&apex) {
            points.push(apex);
            points.sort();
        }
        Cell {
            points,
            rays: self.rays.clone(),
        }
    }

    /// Codimension-one faces, with redundant generators removed.
    pub fn faces(&self) -> Vec<Cell> {
        let dim = self.dimension();
        if dim == 0 {
            return Vec::new();
        }
        face_candidates(&self.points, &self.rays, dim)
            .into_iter()
            .map(|f| f.cell)
            .collect()
    }

    /// Drops points that are not vertices of the cell.
    pub fn minimized(&self) -> Cell {
        let points = self
            .points
            .iter()
            .filter(|p| {
                let others: Vec<_> = self.points.iter().filter(|q| q != p).copied().collect();
                !in_hull_plus_cone(p, &others, &self.rays)
            })
            .copied()
            .collect();
        Cell {
            points,
            rays: self.rays.clone(),
        }
    }

    fn directions(&self) -> Vec<Vec3> {
        directions(&self.points, &self.rays)
    }
}

/// Serialized as `<(x,y,z);(x,y,z)|e1,e2>`.
impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("|")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(">")
    }
}

impl FromStr for Cell {
    type Err = Error;

    fn from_str(text: &str) -> Result<Cell> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidCell(format!("cannot parse cell {text:?}"));
        let inner = compact
            .strip_prefix('<')
            .and_then(|s| s.strip_suffix('>'))
            .ok_or_else(bad)?;
        let (pts, rays) = inner.split_once('|').ok_or_else(bad)?;
        let mut points = Vec::new();
        for p in pts.split(';') {
            if !(p.starts_with('(') && p.ends_with(')')) {
                return Err(bad());
            }
            points.push(p.parse()?);
        }
        let rays = if rays.is_empty() {
            Vec::new()
        } else {
            rays.split(',')
                .map(str::parse)
                .collect::<Result<Vec<Axis>>>()?
        };
        Cell::new(points, rays)
    }
}

/// A facet together with its supporting inequality `normal · x ≥ offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub cell: Cell,
    /// Primitive integer normal, nonnegative in every coordinate.
    pub normal: [i64; 3],
    pub offset: i128,
}

impl Facet {
    pub fn evaluate(&self, p: &LatticePoint) -> i128 {
        dot(&self.normal.map(i128::from), &p.as_vec())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    generators: [LatticePoint; 3],
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    /// Builds the polyhedron from the three rows of `m`.
    pub fn new(m: &ExponentMatrix) -> Result<NewtonPolyhedron> {
        let mut generators = [LatticePoint([0; 3]); 3];
        for (g, row) in generators.iter_mut().zip(m.rows()) {
            let mut coords = [0i64; 3];
            for (c, &x) in coords.iter_mut().zip(row) {
                if x > GEOMETRY_LIMIT {
                    return Err(Error::EntryTooLarge(x, GEOMETRY_LIMIT));
                }
                *c = x as i64;
            }
            *g = LatticePoint(coords);
        }

        let distinct: Vec<LatticePoint> = generators
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let vertices: Vec<LatticePoint> = distinct
            .iter()
            .filter(|p| {
                let others: Vec<_> = distinct.iter().filter(|q| q != p).copied().collect();
                !in_hull_plus_cone(p, &others, &Axis::ALL)
            })
            .copied()
            .collect();

        let mut facets = face_candidates(&vertices, &Axis::ALL, 3);
        facets.sort_by(|a, b| a.cell.cmp(&b.cell));

        Ok(NewtonPolyhedron {
            generators,
            vertices,
            facets,
        })
    }

    /// The three row points `A, B, C`, duplicates included.
    pub fn generators(&self) -> &[LatticePoint; 3] {
        &self.generators
    }

    /// Generators that are genuine 0-faces, sorted lexicographically.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn is_vertex(&self, p: &LatticePoint) -> bool {
        self.vertices.contains(p)
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn facet_cells(&self) -> impl Iterator<Item = &Cell> {
        self.facets.iter().map(|f| &f.cell)
    }

    /// Always 3: the recession cone is the full positive orthant.
    pub fn dimension(&self) -> usize {
        3
    }

    /// The bounded facets (no rays).
    pub fn bounded_facets(&self) -> impl Iterator<Item = &Cell> {
        self.facet_cells().filter(|c| c.rays().is_empty())
    }

    /// The facets whose generator set excludes the vertex `p`.
    pub fn facets_avoiding(&self, p: &LatticePoint) -> Result<Vec<Cell>> {
        if !self.is_vertex(p) {
            return Err(Error::NotAVertex(p.to_string()));
        }
        Ok(self
            .facet_cells()
            .filter(|c| !c.contains_point(p))
            .cloned()
            .collect())
    }

    /// The cell `⟨S;V⟩` describing the whole polyhedron.
    pub fn as_cell(&self) -> Cell {
        Cell {
            points: self.vertices.clone(),
            rays: Axis::ALL.to_vec(),
        }
    }
}

pub fn newton_polyhedron(m: &MonomialMap) -> Result<NewtonPolyhedron> {
    NewtonPolyhedron::new(m.matrix())
}

pub fn facets_avoiding(n: &NewtonPolyhedron, p: &LatticePoint) -> Result<Vec<Cell>> {
    n.facets_avoiding(p)
}

pub fn faces_of(cell: &Cell) -> Vec<Cell> {
    cell.faces()
}

/// Faces of dimension `dim - 1` of `ch(points) + cone(rays)`, which is
/// assumed to have dimension `dim`.
fn face_candidates(points: &[LatticePoint], rays: &[Axis], dim: usize) -> Vec<Facet> {
    let dirs = directions(points, rays);
    let mut functionals: Vec<Vec3> = Vec::new();
    match dim {
        3 => {
            for (i, u) in dirs.iter().enumerate() {
                for v in &dirs[i + 1..] {
                    functionals.push(cross(u, v));
                }
            }
        }
        2 => {
            let normal = dirs
                .iter()
                .enumerate()
                .flat_map(|(i, u)| dirs[i + 1..].iter().map(move |v| cross(u, v)))
                .find(|n| *n != [0; 3]);
            if let Some(n) = normal {
                let n = primitive(&n);
                functionals.extend(dirs.iter().map(|u| cross(&n, u)));
            }
        }
        1 => functionals.extend(dirs.iter().copied()),
        _ => {}
    }

    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for f in functionals {
        if f == [0; 3] {
            continue;
        }
        let f = primitive(&f);
        for m in [f, f.map(|x| -x)] {
            if rays.iter().any(|r| dot(&m, &r.as_vec()) < 0) {
                continue;
            }
            let offset = points.iter().map(|p| dot(&m, &p.as_vec())).min().unwrap();
            let face_points: Vec<_> = points
                .iter()
                .filter(|p| dot(&m, &p.as_vec()) == offset)
                .copied()
                .collect();
            let face_rays: Vec<_> = rays
                .iter()
                .filter(|r| dot(&m, &r.as_vec()) == 0)
                .copied()
                .collect();
            if face_points.len() == points.len() && face_rays.len() == rays.len() {
                continue;
            }
            let face = Cell {
                points: face_points,
                rays: face_rays,
            };
            if face.dimension() + 1 != dim {
                continue;
            }
            let face = face.minimized();
            if seen.insert(face.clone()) {
                out.push(Facet {
                    cell: face,
                    normal: m.map(|x| x as i64),
                    offset,
                });
            }
        }
    }
    out
}

/// Whether `p ∈ ch(others) + cone(rays)`, for at most two other points.
fn in_hull_plus_cone(p: &LatticePoint, others: &[LatticePoint], rays: &[Axis]) -> bool {
    let free = |i: usize| rays.iter().any(|r| r.index() == i);
    let p = p.as_vec();
    match others {
        [] => false,
        [q] => {
            let q = q.as_vec();
            (0..3).all(|i| if free(i) { p[i] >= q[i] } else { p[i] == q[i] })
        }
        [q1, q2] => {
            // p - (q2 + t (q1 - q2)) must lie in cone(rays) for some t in [0, 1]
            let (q1, q2) = (q1.as_vec(), q2.as_vec());
            let mut lo = Ratio::from_integer(0i128);
            let mut hi = Ratio::from_integer(1i128);
            for i in 0..3 {
                let slope = q1[i] - q2[i];
                let gap = p[i] - q2[i];
                // constraint: gap - t * slope >= 0 (or == 0 when not free)
                if slope == 0 {
                    let ok = if free(i) { gap >= 0 } else { gap == 0 };
                    if !ok {
                        return false;
                    }
                    continue;
                }
                let bound = Ratio::new(gap, slope);
                if !free(i) {
                    lo = lo.max(bound);
                    hi = hi.min(bound);
                } else if slope > 0 {
                    hi = hi.min(bound);
                } else {
                    lo = lo.max(bound);
                }
            }
            lo <= hi
        }
        _ => unreachable!("cells have at most three points"),
    }
}

fn directions(points: &[LatticePoint], rays: &[Axis]) -> Vec<Vec3> {
    let mut dirs = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            dirs.push(sub(&q.as_vec(), &p.as_vec()));
        }
    }
    dirs.extend(rays.iter().map(|r| r.as_vec()));
    dirs
}

fn rank(dirs: &[Vec3]) -> usize {
    if dirs.iter().all(|d| *d == [0; 3]) {
        return 0;
    }
    let mut planes = Vec::new();
    for (i, u) in dirs.iter().enumerate() {
        for v in &dirs[i + 1..] {
            let c = cross(u, v);
            if c != [0; 3] {
                planes.push(c);
            }
        }
    }
    if planes.is_empty() {
        return 1;
    }
    if planes.iter().any(|n| dirs.iter().any(|w| dot(n, w) != 0)) {
        3
    } else {
        2
    }
}

fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: &Vec3, b: &Vec3) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn primitive(v: &Vec3) -> Vec3 {
    let g = gcd(gcd(v[0], v[1]), v[2]);
    if g == 0 {
        *v
    } else {
        v.map(|x| x / g)
    }
}
