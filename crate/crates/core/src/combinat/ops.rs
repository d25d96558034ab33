use super::{face_lattice, VertexFacetPolytope, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// The polar polytope: vertex `i` of the dual is facet `i` of `p`.
pub fn dual_poly(p: &VertexFacetPolytope) -> Result<VertexFacetPolytope> {
    if p.d == 0 {
        return Ok(p.clone());
    }
    let m = p.facets.len();
    if m > MAX_VERTICES {
        return Err(Error::OutOfRange(format!("dual would have {m} vertices")));
    }
    let facets = (0..p.vertex_count).map(|v| {
        VertexSet::from_indices(
            p.facets
                .iter()
                .enumerate()
                .filter(|(_, f)| f.contains(v))
                .map(|(i, _)| i),
        )
    });
    VertexFacetPolytope::new(p.d, m, facets)
}

fn require_facet(p: &VertexFacetPolytope, f: VertexSet) -> Result<()> {
    if !p.has_facet(f) {
        return Err(Error::NotApplicable(format!("{f:?} is not a facet")));
    }
    Ok(())
}

fn require_room(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::OutOfRange(format!("result would have {n} vertices")));
    }
    Ok(())
}

/// The other facet through a ridge `r` of `g`.
fn across(p: &VertexFacetPolytope, g: VertexSet, r: VertexSet) -> Result<VertexSet> {
    let mut it = p.facets_containing(r).filter(|h| *h != g);
    match (it.next(), it.next()) {
        (Some(h), None) => Ok(h),
        _ => Err(Error::NotAPolytope(format!(
            "ridge {r:?} does not lie in exactly two facets"
        ))),
    }
}

/// Stellar subdivision of a facet: a new vertex (the last index) placed just
/// beyond `f` and beneath every other facet.
pub fn stellar_subdivide_facet(
    p: &VertexFacetPolytope,
    f: VertexSet,
) -> Result<VertexFacetPolytope> {
    require_facet(p, f)?;
    require_room(p.vertex_count + 1)?;
    let apex = p.vertex_count;
    let facets = p
        .facets
        .iter()
        .copied()
        .filter(|g| *g != f)
        .chain(p.ridges_of(f).into_iter().map(|r| r.with(apex)));
    VertexFacetPolytope::new(p.d, p.vertex_count + 1, facets)
}

/// `conv(p ∪ {x})` for a point `x` beyond exactly the facets containing the
/// face `h`. Vertices of `h` that end up inside are dropped; survivors keep
/// their relative order and `x` comes last.
pub fn beyond_face(p: &VertexFacetPolytope, h: VertexSet) -> Result<VertexFacetPolytope> {
    check_face(p, h)?;
    let visible: Vec<VertexSet> = p.facets_containing(h).collect();
    place_point(p, &visible, &[])
}

/// Where a point placed near a face sits relative to the facets through a
/// larger face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    /// Beneath the facets through the larger face.
    Beneath,
    /// On the hyperplanes of the facets through the larger face.
    OnHyperplanes,
}

/// `conv(p ∪ {x})` for `x` close to the relative interior of the face `h`,
/// beyond the facets through `h` that miss the larger face `h2`, and beneath
/// or on the facets through `h2` as `placement` says.
///
/// Such points exist because the facets through `h2` form a face of the dual
/// face of `h`, which an affine function can separate from the rest.
pub fn beyond_face_except(
    p: &VertexFacetPolytope,
    h: VertexSet,
    h2: VertexSet,
    placement: Placement,
) -> Result<VertexFacetPolytope> {
    check_face(p, h)?;
    check_face(p, h2)?;
    if h == h2 || !h.is_subset(h2) {
        return Err(Error::NotApplicable(format!(
            "{h2:?} is not a larger face than {h:?}"
        )));
    }
    let beyond: Vec<VertexSet> = p
        .facets_containing(h)
        .filter(|g| !h2.is_subset(*g))
        .collect();
    let on: Vec<VertexSet> = match placement {
        Placement::Beneath => Vec::new(),
        Placement::OnHyperplanes => p.facets_containing(h2).collect(),
    };
    place_point(p, &beyond, &on)
}

/// Position of a new point relative to one facet hyperplane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Beyond,
    On,
    Beneath,
}

/// The facets through `h` in cyclic order, when `h` has codimension 3 and
/// the facets around it therefore form a polygon.
pub fn facets_around(p: &VertexFacetPolytope, h: VertexSet) -> Result<Vec<VertexSet>> {
    let around: Vec<VertexSet> = p.facets_containing(h).collect();
    let adjacent =
        |a: VertexSet, b: VertexSet| a != b && p.ridges_of(a).contains(&a.intersection(b));
    let mut order = vec![around[0]];
    while order.len() < around.len() {
        let last = *order.last().expect("non-empty");
        let next = around
            .iter()
            .copied()
            .find(|g| !order.contains(g) && adjacent(last, *g))
            .ok_or_else(|| {
                Error::NotApplicable(format!("facets around {h:?} do not form a cycle"))
            })?;
        order.push(next);
    }
    if order.len() < 3 || !adjacent(order[0], *order.last().expect("non-empty")) {
        return Err(Error::NotApplicable(format!(
            "facets around {h:?} do not form a cycle"
        )));
    }
    Ok(order)
}

/// Whether the sign sequence, read around a convex polygon, can come from
/// an affine function: at most two zeros, no zeros adjacent to a sign
/// change they do not explain, and at most two sign changes.
pub(super) fn polygon_pattern_ok(signs: &[Side]) -> bool {
    let k = signs.len();
    let zeros: Vec<usize> = (0..k).filter(|&i| signs[i] == Side::On).collect();
    let changes = |seq: &[Side]| seq.windows(2).filter(|w| w[0] != w[1]).count();
    match zeros.as_slice() {
        [] => {
            let mut cyc = signs.to_vec();
            cyc.push(signs[0]);
            changes(&cyc) <= 2
        }
        [i] => {
            let path: Vec<Side> = (1..k).map(|t| signs[(i + t) % k]).collect();
            changes(&path) <= 1
        }
        [i, j] => {
            let arc1: Vec<Side> = (i + 1..*j).map(|t| signs[t]).collect();
            let arc2: Vec<Side> = (j + 1..i + k).map(|t| signs[t % k]).collect();
            let uniform = |a: &[Side]| a.windows(2).all(|w| w[0] == w[1]);
            if !uniform(&arc1) || !uniform(&arc2) {
                return false;
            }
            match (arc1.first(), arc2.first()) {
                (Some(a), Some(b)) => a != b,
                _ => true,
            }
        }
        _ => false,
    }
}

/// `conv(p ∪ {x})` for `x` near the relative interior of the face `h`, on
/// the given side of each facet through `h` (listed in `pattern`) and
/// beneath all other facets.
///
/// Only sign patterns whose realizability follows from the combinatorics are
/// accepted: any pattern when the facets through `h` are exactly
/// `d - dim h` many, and line patterns when they form a polygon (listed in
/// cyclic order, see [`facets_around`]).
pub fn place_near_face(
    p: &VertexFacetPolytope,
    h: VertexSet,
    pattern: &[(VertexSet, Side)],
) -> Result<VertexFacetPolytope> {
    check_face(p, h)?;
    let lattice = face_lattice(p)?;
    let dim_h = lattice.dim_of(h).expect("checked face") as usize;
    let around: Vec<VertexSet> = p.facets_containing(h).collect();
    let mut sorted: Vec<VertexSet> = pattern.iter().map(|(g, _)| *g).collect();
    sorted.sort();
    if sorted != around {
        return Err(Error::NotApplicable(format!(
            "pattern must list each facet through {h:?} once"
        )));
    }
    let signs: Vec<Side> = pattern.iter().map(|(_, s)| *s).collect();
    let certified = if around.len() == p.d - dim_h {
        true
    } else if p.d >= 3 && dim_h == p.d - 3 {
        let cyc = facets_around(p, h)?;
        let start = cyc
            .iter()
            .position(|g| *g == pattern[0].0)
            .expect("facet listed");
        let forward = (0..cyc.len()).all(|t| cyc[(start + t) % cyc.len()] == pattern[t].0);
        let backward =
            (0..cyc.len()).all(|t| cyc[(start + cyc.len() - t) % cyc.len()] == pattern[t].0);
        (forward || backward) && polygon_pattern_ok(&signs)
    } else {
        false
    };
    if !certified {
        return Err(Error::NotApplicable(format!(
            "sign pattern near {h:?} is not known to be realizable"
        )));
    }
    let pick = |side: Side| {
        pattern
            .iter()
            .filter(|(_, s)| *s == side)
            .map(|(g, _)| *g)
            .collect::<Vec<_>>()
    };
    place_point(p, &pick(Side::Beyond), &pick(Side::On))
}

fn check_face(p: &VertexFacetPolytope, h: VertexSet) -> Result<()> {
    if h.is_empty() || h == p.vertices() {
        return Err(Error::NotApplicable("need a non-empty proper face".into()));
    }
    let closure = p
        .facets_containing(h)
        .fold(p.vertices(), |acc, f| acc.intersection(f));
    if closure != h {
        return Err(Error::NotApplicable(format!("{h:?} is not a face")));
    }
    Ok(())
}

/// Beneath-beyond step for a point beyond the facets `beyond`, on the
/// hyperplanes of `on`, and beneath all others.
pub(super) fn place_point(
    p: &VertexFacetPolytope,
    beyond: &[VertexSet],
    on: &[VertexSet],
) -> Result<VertexFacetPolytope> {
    if beyond.is_empty() {
        return Err(Error::NotApplicable(
            "the new point must lie beyond some facet".into(),
        ));
    }
    let is_beyond = |g: &VertexSet| beyond.contains(g);
    let is_on = |g: &VertexSet| on.contains(g);
    let beneath: Vec<VertexSet> = p
        .facets
        .iter()
        .copied()
        .filter(|g| !is_beyond(g) && !is_on(g))
        .collect();
    let mut horizon = Vec::new();
    for &g in beyond {
        for r in p.ridges_of(g) {
            let other = across(p, g, r)?;
            if !is_beyond(&other) && !is_on(&other) {
                horizon.push(r);
            }
        }
    }
    // A vertex stays exactly when some facet through it stays beneath x.
    let survivors = beneath
        .iter()
        .fold(VertexSet::EMPTY, |acc, g| acc.union(*g));
    let mut relabel = vec![usize::MAX; p.vertex_count];
    for (i, v) in survivors.iter().enumerate() {
        relabel[v] = i;
    }
    let apex = survivors.len();
    require_room(apex + 1)?;
    let facets = beneath
        .into_iter()
        .map(|g| g.map(|v| relabel[v]))
        .chain(
            on.iter()
                .map(|g| g.intersection(survivors).map(|v| relabel[v]).with(apex)),
        )
        .chain(
            horizon
                .into_iter()
                .map(|r| r.map(|v| relabel[v]).with(apex)),
        );
    let q = VertexFacetPolytope::new(p.d, apex + 1, facets)?;
    face_lattice(&q)?;
    Ok(q)
}

/// Cuts off the face `h` by a hyperplane, the dual of [`beyond_face`].
pub fn truncate_face(p: &VertexFacetPolytope, h: VertexSet) -> Result<VertexFacetPolytope> {
    if h.is_empty() || h == p.vertices() {
        return Err(Error::NotApplicable("need a non-empty proper face".into()));
    }
    let dual_face = VertexSet::from_indices(
        p.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| h.is_subset(**f))
            .map(|(i, _)| i),
    );
    dual_poly(&beyond_face(&dual_poly(p)?, dual_face)?)
}

fn drop_vertex(v: usize) -> impl Fn(usize) -> usize {
    move |w| if w > v { w - 1 } else { w }
}

/// Truncates a simple vertex `v`. Returns the new polytope and its new
/// simplex facet; the `d` new vertices take the last indices.
pub fn truncate_simple_vertex(
    p: &VertexFacetPolytope,
    v: usize,
) -> Result<(VertexFacetPolytope, VertexSet)> {
    let d = p.d;
    let star: Vec<VertexSet> = p.facets_containing(VertexSet::singleton(v)).collect();
    if v >= p.vertex_count || star.len() != d {
        return Err(Error::NotApplicable(format!("vertex {v} is not simple")));
    }
    let base = p.vertex_count - 1;
    require_room(base + d)?;
    let relabel = drop_vertex(v);
    let new_vertex = |j: usize| base + j;
    let mut facets: Vec<VertexSet> = p
        .facets
        .iter()
        .filter(|g| !g.contains(v))
        .map(|g| g.map(&relabel))
        .collect();
    for (j, g) in star.iter().enumerate() {
        let mut g2 = g.without(v).map(&relabel);
        for k in (0..d).filter(|&k| k != j) {
            g2 = g2.with(new_vertex(k));
        }
        facets.push(g2);
    }
    let cap = VertexSet::from_indices((0..d).map(new_vertex));
    facets.push(cap);
    let t = VertexFacetPolytope::new(d, base + d, facets)?;
    Ok((t, cap))
}

/// Removes a simple vertex all of whose facets are simplices. The neighbours
/// of `v` span the new simplex facet, which is returned alongside.
pub fn delete_simple_vertex(
    p: &VertexFacetPolytope,
    v: usize,
) -> Result<(VertexFacetPolytope, VertexSet)> {
    let d = p.d;
    let star: Vec<VertexSet> = p.facets_containing(VertexSet::singleton(v)).collect();
    if v >= p.vertex_count || star.len() != d {
        return Err(Error::NotApplicable(format!("vertex {v} is not simple")));
    }
    if star.iter().any(|g| g.len() != d) {
        return Err(Error::NotApplicable(format!(
            "not every facet at vertex {v} is a simplex"
        )));
    }
    let relabel = drop_vertex(v);
    let link = star
        .iter()
        .fold(VertexSet::EMPTY, |acc, g| acc.union(*g))
        .without(v)
        .map(&relabel);
    let facets = p
        .facets
        .iter()
        .filter(|g| !g.contains(v))
        .map(|g| g.map(&relabel))
        .chain(std::iter::once(link));
    let q = VertexFacetPolytope::new(d, p.vertex_count - 1, facets).map_err(|e| {
        Error::NotApplicable(format!("deleting vertex {v} leaves no polytope: {e}"))
    })?;
    face_lattice(&q).map_err(|e| {
        Error::NotApplicable(format!("deleting vertex {v} leaves no polytope: {e}"))
    })?;
    Ok((q, link))
}

/// Glues `q` onto `p` along simplex facets `f1` of `p` and `f2` of `q`.
///
/// `pairs` lists `(vertex of f1, vertex of f2)`; by default the two facets
/// are matched in increasing vertex order. Vertices of `p` keep their
/// indices, the remaining vertices of `q` follow in order.
pub fn glue_in_simplex_facet(
    p: &VertexFacetPolytope,
    f1: VertexSet,
    q: &VertexFacetPolytope,
    f2: VertexSet,
    pairs: Option<&[(usize, usize)]>,
) -> Result<VertexFacetPolytope> {
    let d = p.d;
    if q.d != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: q.d,
        });
    }
    if d < 2 {
        return Err(Error::NotApplicable(
            "glueing needs dimension at least 2".into(),
        ));
    }
    require_facet(p, f1)?;
    require_facet(q, f2)?;
    if f1.len() != d || f2.len() != d {
        return Err(Error::NotApplicable(
            "glueing facets must be simplices".into(),
        ));
    }
    let mut map = vec![usize::MAX; q.vertex_count];
    match pairs {
        None => {
            for (a, b) in f1.iter().zip(f2.iter()) {
                map[b] = a;
            }
        }
        Some(pairs) => {
            let lhs = VertexSet::from_indices(pairs.iter().map(|&(a, _)| a));
            let rhs = VertexSet::from_indices(pairs.iter().map(|&(_, b)| b));
            if pairs.len() != d || lhs != f1 || rhs != f2 {
                return Err(Error::NotApplicable(
                    "vertex pairing is not a bijection between the facets".into(),
                ));
            }
            for &(a, b) in pairs {
                map[b] = a;
            }
        }
    }
    let mut next = p.vertex_count;
    for w in q.vertices().difference(f2).iter() {
        map[w] = next;
        next += 1;
    }
    require_room(next)?;
    let facets = p.facets.iter().copied().filter(|g| *g != f1).chain(
        q.facets
            .iter()
            .filter(|g| **g != f2)
            .map(|g| g.map(|w| map[w])),
    );
    VertexFacetPolytope::new(d, next, facets)
}

/// Connected sum: truncate the simple vertex `v` of `p`, then glue `q` along
/// its simplex facet `f2` onto the cut.
pub fn connected_sum(
    p: &VertexFacetPolytope,
    v: usize,
    q: &VertexFacetPolytope,
    f2: VertexSet,
) -> Result<VertexFacetPolytope> {
    let (t, cap) = truncate_simple_vertex(p, v)?;
    glue_in_simplex_facet(&t, cap, q, f2, None)
}

/// Deletes the simple vertex `v` of the adapter `p` and glues `q` along its
/// simplex facet `f2` into the hole.
pub fn adapter_glue(
    p: &VertexFacetPolytope,
    v: usize,
    q: &VertexFacetPolytope,
    f2: VertexSet,
) -> Result<VertexFacetPolytope> {
    let (t, link) = delete_simple_vertex(p, v)?;
    glue_in_simplex_facet(&t, link, q, f2, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{polygon_poly, product_poly, pyramid_poly, simplex_poly};

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().copied())
    }

    fn counts(p: &VertexFacetPolytope) -> Vec<usize> {
        let l = face_lattice(p).unwrap();
        l.check_diamond().unwrap();
        l.counts()
    }

    fn square_pyramid() -> VertexFacetPolytope {
        VertexFacetPolytope::new(
            3,
            5,
            [
                vs(&[0, 1, 2, 3]),
                vs(&[0, 1, 4]),
                vs(&[1, 2, 4]),
                vs(&[2, 3, 4]),
                vs(&[0, 3, 4]),
            ],
        )
        .unwrap()
    }

    fn prism() -> VertexFacetPolytope {
        product_poly(&polygon_poly(3).unwrap(), &simplex_poly(1).unwrap()).unwrap()
    }

    #[test]
    fn stellar_subdivisions() {
        let q = stellar_subdivide_facet(&square_pyramid(), vs(&[0, 1, 2, 3])).unwrap();
        assert_eq!(counts(&q), vec![6, 12, 8]);
        let s4 = simplex_poly(4).unwrap();
        let f = s4.facets()[0];
        assert_eq!(
            counts(&stellar_subdivide_facet(&s4, f).unwrap()),
            vec![6, 14, 16, 8]
        );
        assert!(stellar_subdivide_facet(&s4, vs(&[0, 1])).is_err());
    }

    #[test]
    fn beyond_a_facet_is_stellar() {
        let p = square_pyramid();
        for &f in p.facets() {
            assert_eq!(
                beyond_face(&p, f).unwrap(),
                stellar_subdivide_facet(&p, f).unwrap()
            );
        }
    }

    #[test]
    fn beyond_a_vertex() {
        let s3 = simplex_poly(3).unwrap();
        assert_eq!(
            counts(&beyond_face(&s3, VertexSet::singleton(0)).unwrap()),
            vec![4, 6, 4]
        );
        // The vertex disappears; both squares through it turn into triangles.
        let p = prism();
        for v in 0..p.vertex_count() {
            assert_eq!(
                counts(&beyond_face(&p, VertexSet::singleton(v)).unwrap()),
                vec![6, 11, 7]
            );
        }
        assert!(beyond_face(&p, vs(&[0, 3])).is_err());
    }

    #[test]
    fn truncations() {
        let cube_corner =
            truncate_face(&simplex_poly(3).unwrap(), VertexSet::singleton(0)).unwrap();
        assert_eq!(counts(&cube_corner), vec![6, 9, 5]);
        let (t, cap) = truncate_simple_vertex(&simplex_poly(3).unwrap(), 0).unwrap();
        assert_eq!(counts(&t), vec![6, 9, 5]);
        assert_eq!(cap.len(), 3);
        let edge_cut = truncate_face(&simplex_poly(3).unwrap(), vs(&[0, 1])).unwrap();
        assert_eq!(counts(&edge_cut), vec![6, 9, 5]);
    }

    #[test]
    fn duality() {
        assert_eq!(counts(&dual_poly(&prism()).unwrap()), vec![5, 9, 6]);
        let p = square_pyramid();
        assert_eq!(
            counts(&dual_poly(&dual_poly(&p).unwrap()).unwrap()),
            counts(&p)
        );
    }

    #[test]
    fn vertex_deletion() {
        // Bipyramid over a triangle: deleting an apex leaves the tetrahedron.
        let bip =
            crate::combinat::direct_sum_poly(&polygon_poly(3).unwrap(), &simplex_poly(1).unwrap())
                .unwrap();
        let (t, link) = delete_simple_vertex(&bip, 3).unwrap();
        assert_eq!(counts(&t), vec![4, 6, 4]);
        assert_eq!(link, vs(&[0, 1, 2]));
        assert!(delete_simple_vertex(&simplex_poly(3).unwrap(), 0).is_err());
        assert!(delete_simple_vertex(&prism(), 0).is_err());
    }

    #[test]
    fn glueing_examples() {
        let bip =
            crate::combinat::direct_sum_poly(&polygon_poly(3).unwrap(), &simplex_poly(1).unwrap())
                .unwrap();
        let pyr = square_pyramid();
        let f1 = bip.facets()[0];
        let f2 = pyr.facets()[1];
        assert_eq!(
            counts(&glue_in_simplex_facet(&bip, f1, &pyr, f2, None).unwrap()),
            vec![7, 14, 9]
        );
        let tri = prism()
            .facets()
            .iter()
            .copied()
            .find(|f| f.len() == 3)
            .unwrap();
        assert_eq!(
            counts(&glue_in_simplex_facet(&pyr, f2, &prism(), tri, None).unwrap()),
            vec![8, 14, 8]
        );

        let s3 = simplex_poly(3).unwrap();
        let sum = connected_sum(&prism(), 0, &s3, s3.facets()[0]).unwrap();
        // (6,9,5) + (4,6,4) - (1,0,1)
        assert_eq!(counts(&sum), vec![9, 15, 8]);

        let glued = adapter_glue(&bip, 3, &s3, s3.facets()[0]).unwrap();
        assert_eq!(counts(&glued), vec![5, 9, 6]);

        let pyr4 = pyramid_poly(&s3).unwrap();
        let bad = glue_in_simplex_facet(&bip, f1, &pyr4, pyr4.facets()[0], None);
        assert!(matches!(bad, Err(Error::DimensionMismatch { .. })));
        let wrong_pairs =
            glue_in_simplex_facet(&bip, f1, &pyr, f2, Some(&[(0, 0), (1, 1), (2, 2)]));
        assert!(wrong_pairs.is_err());
    }
}
