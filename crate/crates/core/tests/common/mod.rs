#![allow(dead_code)]

use fvec_core::combinat::{
    beyond_face, cyclic_poly, direct_sum_poly, dual_poly, face_lattice, join_poly, polygon_poly,
    product_poly, pyramid_poly, simplex_poly, stellar_subdivide_facet, VertexFacetPolytope,
};
use fvec_core::fvec::FVec;
use num_bigint::BigInt;

pub fn counts(p: &VertexFacetPolytope) -> Vec<usize> {
    face_lattice(p).unwrap().counts()
}

pub fn fvec(p: &VertexFacetPolytope) -> FVec<BigInt> {
    face_lattice(p).unwrap().fvector().unwrap()
}

pub fn big(v: &[i64]) -> FVec<BigInt> {
    FVec::from_i64s(v).unwrap()
}

pub fn square_pyramid() -> VertexFacetPolytope {
    pyramid_poly(&polygon_poly(4).unwrap()).unwrap()
}

pub fn triangular_prism() -> VertexFacetPolytope {
    product_poly(&polygon_poly(3).unwrap(), &simplex_poly(1).unwrap()).unwrap()
}

/// Square pyramid with a tetrahedron stacked on a triangle, `(6,11,7)`.
/// The new apex (vertex 5) is simple and sees only triangles.
pub fn stacked_square_pyramid() -> VertexFacetPolytope {
    let p = square_pyramid();
    let tri = *p.facets().iter().find(|f| f.len() == 3).unwrap();
    stellar_subdivide_facet(&p, tri).unwrap()
}

pub fn family_3d() -> Vec<(String, VertexFacetPolytope)> {
    let seg = simplex_poly(1).unwrap();
    let mut out = vec![
        ("tetrahedron".to_string(), simplex_poly(3).unwrap()),
        ("square pyramid".into(), square_pyramid()),
        ("triangular prism".into(), triangular_prism()),
        (
            "bipyramid".into(),
            direct_sum_poly(&polygon_poly(3).unwrap(), &seg).unwrap(),
        ),
        (
            "cube".into(),
            product_poly(&polygon_poly(4).unwrap(), &seg).unwrap(),
        ),
        (
            "octahedron".into(),
            direct_sum_poly(&polygon_poly(4).unwrap(), &seg).unwrap(),
        ),
        (
            "pentagonal pyramid".into(),
            pyramid_poly(&polygon_poly(5).unwrap()).unwrap(),
        ),
        ("stacked square pyramid".into(), stacked_square_pyramid()),
    ];
    let t = simplex_poly(3).unwrap();
    let stacked = stellar_subdivide_facet(&t, t.facets()[0]).unwrap();
    out.push(("stacked tetrahedron".into(), stacked));
    out
}

pub fn family_4d() -> Vec<(String, VertexFacetPolytope)> {
    let seg = simplex_poly(1).unwrap();
    let tri = polygon_poly(3).unwrap();
    let sq = polygon_poly(4).unwrap();
    let mut out = vec![
        ("simplex".to_string(), simplex_poly(4).unwrap()),
        (
            "pyramid over square pyramid".into(),
            pyramid_poly(&square_pyramid()).unwrap(),
        ),
        (
            "prism over tetrahedron".into(),
            product_poly(&simplex_poly(3).unwrap(), &seg).unwrap(),
        ),
        (
            "bipyramid over tetrahedron".into(),
            direct_sum_poly(&simplex_poly(3).unwrap(), &seg).unwrap(),
        ),
        (
            "triangle x triangle".into(),
            product_poly(&tri, &tri).unwrap(),
        ),
        (
            "triangle + triangle".into(),
            direct_sum_poly(&tri, &tri).unwrap(),
        ),
        ("square x triangle".into(), product_poly(&sq, &tri).unwrap()),
        ("triangle * segment".into(), join_poly(&tri, &seg).unwrap()),
        (
            "prism over square pyramid".into(),
            product_poly(&square_pyramid(), &seg).unwrap(),
        ),
        ("cyclic(6,4)".into(), cyclic_poly(6, 4).unwrap()),
        ("cyclic(7,4)".into(), cyclic_poly(7, 4).unwrap()),
        (
            "tesseract".into(),
            product_poly(&product_poly(&sq, &seg).unwrap(), &seg).unwrap(),
        ),
        ("cross polytope".into(), direct_sum_poly(&sq, &sq).unwrap()),
    ];
    let s = simplex_poly(4).unwrap();
    out.push((
        "stacked simplex".into(),
        stellar_subdivide_facet(&s, s.facets()[0]).unwrap(),
    ));
    let v0 = fvec_core::combinat::VertexSet::singleton(0);
    out.push((
        "simplex beyond a vertex".into(),
        beyond_face(&s, v0).unwrap(),
    ));
    let c = cyclic_poly(7, 4).unwrap();
    out.push(("dual cyclic(7,4)".into(), dual_poly(&c).unwrap()));
    out
}
