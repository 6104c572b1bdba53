//! Monomial maps of the projective plane: exponent-matrix algebra, Newton
//! polyhedra, pulling triangulations, multidegrees and the classification
//! of monomial Cremona transformations.
//!
//! ```
//! use cremona_core::{classify, multidegree, ExponentMatrix, MonomialMap, Multidegree};
//!
//! let m: ExponentMatrix = "0,0,5;4,1,0;3,1,1".parse().unwrap();
//! assert!(classify(&m).is_cremona);
//! let map = MonomialMap::new(m).unwrap();
//! assert_eq!(multidegree(&map).unwrap(), Multidegree::new(1, 5, 1));
//! ```

pub mod classification;
pub mod dynamics;
pub mod enumeration;
pub mod error;
pub mod matrix;
pub mod multidegree;
pub mod permutation;
pub mod polyhedron;
pub mod triangulation;

pub use classification::{classify, inverse, Classification, Family, Params};
pub use dynamics::{degree_sequence, iterate};
pub use enumeration::{brute_force_cremona, enumerate_cremona, orbit};
pub use error::{Error, Result};
pub use matrix::{ExponentMatrix, MonomialMap};
pub use multidegree::{multidegree, normalized_volume, project, torus_degree, Multidegree};
pub use permutation::Permutation;
pub use polyhedron::{Axis, Cell, LatticePoint, NewtonPolyhedron};
pub use triangulation::{triangulate, triangulate_default, Triangulation};
