use super::{dual_poly, stellar_subdivide_facet, VertexFacetPolytope, VertexSet};
use crate::error::{Error, Result};

pub fn is_simple_vertex(p: &VertexFacetPolytope, v: usize) -> bool {
    v < p.vertex_count() && p.facets_containing(VertexSet::singleton(v)).count() == p.dim()
}

pub fn simple_vertices(p: &VertexFacetPolytope) -> Vec<usize> {
    (0..p.vertex_count())
        .filter(|&v| is_simple_vertex(p, v))
        .collect()
}

pub fn has_simple_vertex(p: &VertexFacetPolytope) -> bool {
    (0..p.vertex_count()).any(|v| is_simple_vertex(p, v))
}

/// Facets with exactly `d` vertices, which are then simplices.
pub fn simplex_facets(p: &VertexFacetPolytope) -> Vec<VertexSet> {
    p.facets()
        .iter()
        .copied()
        .filter(|f| f.len() == p.dim())
        .collect()
}

pub fn min_facet_size(p: &VertexFacetPolytope) -> usize {
    p.facets().iter().map(|f| f.len()).min().unwrap_or(0)
}

/// A simple vertex lying only in simplex facets, together with a further
/// simplex facet avoiding it. Smallest vertex first, then the
/// lexicographically smallest facet.
pub fn adapter_witness(p: &VertexFacetPolytope) -> Option<(usize, VertexSet)> {
    let d = p.dim();
    let simplices = simplex_facets(p);
    (0..p.vertex_count()).find_map(|v| {
        let star_ok = is_simple_vertex(p, v)
            && p.facets_containing(VertexSet::singleton(v))
                .all(|f| f.len() == d);
        if !star_ok {
            return None;
        }
        simplices.iter().find(|f| !f.contains(v)).map(|f| (v, *f))
    })
}

pub fn is_adapter(p: &VertexFacetPolytope) -> bool {
    adapter_witness(p).is_some()
}

/// A simple vertex and a simplex facet not containing it: what a connected
/// sum needs on both sides.
pub fn cso_witness(p: &VertexFacetPolytope) -> Option<(usize, VertexSet)> {
    let simplices = simplex_facets(p);
    simple_vertices(p)
        .into_iter()
        .find_map(|v| simplices.iter().find(|f| !f.contains(v)).map(|f| (v, *f)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdapterPolytope {
    pub polytope: VertexFacetPolytope,
    /// Simple vertex whose facets are all simplices.
    pub vertex: usize,
    /// Simplex facet not containing `vertex`.
    pub facet: VertexSet,
    /// Vertex count of the facet subdivided first.
    pub first_facet_size: usize,
}

fn smallest(facets: impl Iterator<Item = VertexSet>) -> Option<VertexSet> {
    facets.min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)))
}

/// Three stellar subdivisions turning a 4-polytope into an adapter: on a
/// facet with fewest vertices, then on the smallest of the new facets, then
/// on a tetrahedron among the facets created by the second step. Ties break
/// lexicographically.
pub fn make_adapter_4(p: &VertexFacetPolytope) -> Result<AdapterPolytope> {
    if p.dim() != 4 {
        return Err(Error::InvalidDimension {
            got: p.dim(),
            reason: "adapter modification is defined for d = 4",
        });
    }
    let f1 = smallest(p.facets().iter().copied())
        .ok_or_else(|| Error::Internal("polytope without facets".into()))?;
    let p1 = stellar_subdivide_facet(p, f1)?;
    let a1 = p.vertex_count();

    let f2 = smallest(p1.facets_containing(VertexSet::singleton(a1)))
        .ok_or_else(|| Error::Internal("stellar subdivision created no facets".into()))?;
    let p2 = stellar_subdivide_facet(&p1, f2)?;
    let a2 = a1 + 1;

    let f3 = p2
        .facets_containing(VertexSet::singleton(a2))
        .filter(|f| f.len() == 4)
        .min()
        .ok_or_else(|| Error::Internal("second subdivision created no tetrahedron".into()))?;
    let p3 = stellar_subdivide_facet(&p2, f3)?;
    let a3 = a2 + 1;

    let facet = simplex_facets(&p3)
        .into_iter()
        .find(|f| !f.contains(a3))
        .ok_or_else(|| Error::Internal("no simplex facet avoids the last apex".into()))?;
    Ok(AdapterPolytope {
        polytope: p3,
        vertex: a3,
        facet,
        first_facet_size: f1.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueablePolytope {
    pub polytope: VertexFacetPolytope,
    pub simple_vertex: usize,
    /// Simplex facet not containing `simple_vertex`.
    pub simplex_facet: VertexSet,
    /// Whether the modification was carried out on the dual.
    pub dualized: bool,
    pub first_facet_size: usize,
}

/// Local modification of a 4-polytope so that it can take part in a
/// connected sum on either side. Works on whichever of `p` and its dual has
/// no more vertices than facets, and returns to the original side.
pub fn modify_for_glueing_4(p: &VertexFacetPolytope) -> Result<GlueablePolytope> {
    if p.dim() != 4 {
        return Err(Error::InvalidDimension {
            got: p.dim(),
            reason: "adapter modification is defined for d = 4",
        });
    }
    let dualized = p.vertex_count() > p.facets().len();
    let rep = if dualized { dual_poly(p)? } else { p.clone() };
    let a = make_adapter_4(&rep)?;
    let polytope = if dualized {
        dual_poly(&a.polytope)?
    } else {
        a.polytope
    };
    let (simple_vertex, simplex_facet) = cso_witness(&polytope)
        .ok_or_else(|| Error::Internal("modified polytope cannot be glued".into()))?;
    Ok(GlueablePolytope {
        polytope,
        simple_vertex,
        simplex_facet,
        dualized,
        first_facet_size: a.first_facet_size,
    })
}
