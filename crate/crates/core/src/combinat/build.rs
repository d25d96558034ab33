use super::{VertexFacetPolytope, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// The 0-dimensional polytope. Its only facet is the empty face.
pub fn point_poly() -> VertexFacetPolytope {
    VertexFacetPolytope {
        d: 0,
        vertex_count: 1,
        facets: vec![VertexSet::EMPTY],
    }
}

pub fn simplex_poly(d: usize) -> Result<VertexFacetPolytope> {
    if d == 0 {
        return Ok(point_poly());
    }
    if d + 1 > MAX_VERTICES {
        return Err(Error::OutOfRange(format!(
            "simplex of dimension {d} is too large"
        )));
    }
    let all = VertexSet::full(d + 1);
    VertexFacetPolytope::new(d, d + 1, (0..=d).map(|v| all.without(v)))
}

pub fn polygon_poly(n: usize) -> Result<VertexFacetPolytope> {
    if n < 3 {
        return Err(Error::OutOfRange(format!(
            "a polygon needs at least 3 vertices, got {n}"
        )));
    }
    VertexFacetPolytope::new(
        2,
        n,
        (0..n).map(|i| VertexSet::from_indices([i, (i + 1) % n])),
    )
}

fn check_total(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::OutOfRange(format!("result would have {n} vertices")));
    }
    Ok(())
}

/// The pyramid over `p`; the apex is the last vertex.
pub fn pyramid_poly(p: &VertexFacetPolytope) -> Result<VertexFacetPolytope> {
    join_poly(p, &point_poly())
}

/// The join `p * q`; vertices of `q` follow those of `p`.
pub fn join_poly(p: &VertexFacetPolytope, q: &VertexFacetPolytope) -> Result<VertexFacetPolytope> {
    let n = p.vertex_count + q.vertex_count;
    check_total(n)?;
    let off = p.vertex_count;
    let shift = |s: VertexSet| s.map(|v| v + off);
    let vp = p.vertices();
    let vq = shift(q.vertices());
    let facets = p
        .facets
        .iter()
        .map(|f| f.union(vq))
        .chain(q.facets.iter().map(|g| vp.union(shift(*g))));
    VertexFacetPolytope::new(p.d + q.d + 1, n, facets)
}

/// The direct sum `p ⊕ q` with both origins in the relative interiors.
/// A point summand is absorbed.
pub fn direct_sum_poly(
    p: &VertexFacetPolytope,
    q: &VertexFacetPolytope,
) -> Result<VertexFacetPolytope> {
    if p.d == 0 {
        return Ok(q.clone());
    }
    if q.d == 0 {
        return Ok(p.clone());
    }
    let n = p.vertex_count + q.vertex_count;
    check_total(n)?;
    let off = p.vertex_count;
    let facets = p
        .facets
        .iter()
        .flat_map(|f| q.facets.iter().map(move |g| f.union(g.map(|v| v + off))));
    VertexFacetPolytope::new(p.d + q.d, n, facets)
}

/// The product `p × q`; vertex `(u, w)` gets index `u * |V(q)| + w`.
pub fn product_poly(
    p: &VertexFacetPolytope,
    q: &VertexFacetPolytope,
) -> Result<VertexFacetPolytope> {
    let nq = q.vertex_count;
    let n = p.vertex_count * nq;
    check_total(n)?;
    if p.d == 0 {
        return Ok(q.clone());
    }
    if q.d == 0 {
        return Ok(p.clone());
    }
    let lift_p = |f: VertexSet| {
        VertexSet::from_indices(f.iter().flat_map(|u| (0..nq).map(move |w| u * nq + w)))
    };
    let lift_q = |g: VertexSet| {
        VertexSet::from_indices(
            (0..p.vertex_count).flat_map(move |u| g.iter().map(move |w| u * nq + w)),
        )
    };
    let facets = p
        .facets
        .iter()
        .map(|f| lift_p(*f))
        .chain(q.facets.iter().map(|g| lift_q(*g)));
    VertexFacetPolytope::new(p.d + q.d, n, facets)
}

/// The cyclic polytope `C(n, d)`, facets by Gale's evenness condition.
pub fn cyclic_poly(n: usize, d: usize) -> Result<VertexFacetPolytope> {
    if d < 2 || n <= d {
        return Err(Error::OutOfRange(format!(
            "cyclic polytope needs 2 <= d < n, got n = {n}, d = {d}"
        )));
    }
    check_total(n)?;
    if n > 30 {
        return Err(Error::OutOfRange(format!(
            "cyclic polytope enumeration limited to n <= 30, got {n}"
        )));
    }
    let mut facets = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != d {
            continue;
        }
        let member = |i: usize| mask >> i & 1 == 1;
        let even = (0..n).all(|i| {
            (i + 1..n).all(|j| {
                if member(i) || member(j) {
                    return true;
                }
                (i + 1..j).filter(|&k| member(k)).count() % 2 == 0
            })
        });
        if even {
            facets.push(VertexSet::from_indices((0..n).filter(|&i| member(i))));
        }
    }
    VertexFacetPolytope::new(d, n, facets)
}
