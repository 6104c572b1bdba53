//! Pulling triangulation of a Newton polyhedron from a distinguished vertex.
//!
//! Starting from `⟨p; e₁,e₂,e₃⟩`, every facet `f` that avoids `p` contributes
//! the pyramid `⟨{p} ∪ S; V⟩` over each simplicial piece `⟨S;V⟩` of `f`.
//! Facets of order 3 are already simplicial; larger ones are triangulated
//! by the same rule one dimension down, pulling from their lexicographically
//! smallest vertex.

use crate::error::{Error, Result};
use crate::polyhedron::{Cell, LatticePoint, NewtonPolyhedron};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    cells: Vec<Cell>,
    distinguished: LatticePoint,
}

impl Triangulation {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn distinguished(&self) -> LatticePoint {
        self.distinguished
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

pub fn triangulate(n: &NewtonPolyhedron, p: &LatticePoint) -> Result<Triangulation> {
    let avoiding = n.facets_avoiding(p)?;
    let cells = pull(&n.as_cell(), *p, avoiding);
    Ok(Triangulation {
        cells,
        distinguished: *p,
    })
}

/// Triangulates from the lexicographically smallest vertex.
pub fn triangulate_default(n: &NewtonPolyhedron) -> Result<Triangulation> {
    let p = n
        .vertices()
        .first()
        .ok_or_else(|| Error::InvalidCell("polyhedron has no vertex".into()))?;
    triangulate(n, p)
}

/// `avoiding` must be the facets of `cell` that do not contain `apex`.
fn pull(cell: &Cell, apex: LatticePoint, avoiding: Vec<Cell>) -> Vec<Cell> {
    let dim = cell.dimension();
    let mut out = Vec::new();
    if cell.rays().len() == dim {
        out.push(Cell::new([apex], cell.rays().iter().copied()).expect("one point"));
    }
    for facet in avoiding {
        if facet.order() == dim {
            out.push(facet.cone_from(apex));
        } else {
            let sub_apex = facet.points()[0];
            let sub_avoiding = facet
                .faces()
                .into_iter()
                .filter(|f| !f.contains_point(&sub_apex))
                .collect();
            out.extend(
                pull(&facet, sub_apex, sub_avoiding)
                    .into_iter()
                    .map(|t| t.cone_from(apex)),
            );
        }
    }
    out
}
