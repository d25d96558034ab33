//! Combinatorial polytopes given by vertex-facet incidences.
//!
//! A polytope is stored as its number of vertices and the vertex sets of its
//! facets. Everything else (faces, f-vector, duals) is derived from the
//! intersection closure of the facets. No coordinates are involved; the
//! operations here are the combinatorial shadows of geometric constructions
//! that are known to be realizable.

mod adapter;
mod build;
pub mod census;
mod face_lattice;
pub mod hull;
mod ops;

pub use adapter::{
    adapter_witness, cso_witness, has_simple_vertex, is_adapter, is_simple_vertex, make_adapter_4,
    min_facet_size, modify_for_glueing_4, simple_vertices, simplex_facets, AdapterPolytope,
    GlueablePolytope,
};
pub use build::{
    cyclic_poly, direct_sum_poly, join_poly, point_poly, polygon_poly, product_poly, pyramid_poly,
    simplex_poly,
};
pub use face_lattice::{face_lattice, fvector_of, FaceLattice};
pub use ops::{
    adapter_glue, beyond_face, beyond_face_except, connected_sum, delete_simple_vertex, dual_poly,
    facets_around, glue_in_simplex_facet, place_near_face, stellar_subdivide_facet, truncate_face,
    truncate_simple_vertex, Placement, Side,
};

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count a [`VertexSet`] can hold.
pub const MAX_VERTICES: usize = 128;

/// A set of vertex indices below [`MAX_VERTICES`].
///
/// Ordered lexicographically by the ascending list of members, so
/// `{0,1,5} < {0,2} < {1}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    pub fn from_indices(it: impl IntoIterator<Item = usize>) -> Self {
        it.into_iter().fold(Self::EMPTY, |s, v| s.with(v))
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u128 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u128 << v) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Applies a vertex relabelling.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_indices(self.iter().map(f))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let x = diff.trailing_zeros();
        let above = if x == 127 { 0 } else { u128::MAX << (x + 1) };
        // The set holding x is smaller unless the other list has run out.
        let (holder_is_self, other_bits) = if self.0 >> x & 1 == 1 {
            (true, other.0)
        } else {
            (false, self.0)
        };
        let other_continues = other_bits & above != 0;
        match (holder_is_self, other_continues) {
            (true, true) | (false, false) => Ordering::Less,
            (true, false) | (false, true) => Ordering::Greater,
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A `d`-polytope given combinatorially by its facets' vertex sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexFacetPolytope {
    d: usize,
    vertex_count: usize,
    facets: Vec<VertexSet>,
}

impl VertexFacetPolytope {
    /// Validates the cheap necessary conditions: facets are distinct and
    /// pairwise incomparable, every vertex lies in at least `d` facets, and
    /// no vertex lies in all of them.
    pub fn new(
        d: usize,
        vertex_count: usize,
        facets: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::OutOfRange(format!(
                "{vertex_count} vertices exceed the engine limit of {MAX_VERTICES}"
            )));
        }
        let mut facets: Vec<VertexSet> = facets.into_iter().collect();
        facets.sort();
        let all = VertexSet::full(vertex_count);
        for (i, f) in facets.iter().enumerate() {
            if !f.is_subset(all) {
                return Err(Error::NotAPolytope(format!(
                    "facet {f:?} uses a vertex >= {vertex_count}"
                )));
            }
            for g in &facets[i + 1..] {
                if f.is_subset(*g) || g.is_subset(*f) {
                    return Err(Error::NotAPolytope(format!(
                        "facet {f:?} and facet {g:?} are nested"
                    )));
                }
            }
        }
        if facets.len() < d + 1 && d > 0 {
            return Err(Error::NotAPolytope(format!(
                "{} facets cannot bound a {d}-polytope",
                facets.len()
            )));
        }
        for v in 0..vertex_count {
            let k = facets.iter().filter(|f| f.contains(v)).count();
            if k < d {
                return Err(Error::NotAPolytope(format!(
                    "vertex {v} lies in only {k} facets (d = {d})"
                )));
            }
            if d > 0 && k == facets.len() {
                return Err(Error::NotAPolytope(format!(
                    "vertex {v} lies in every facet"
                )));
            }
        }
        Ok(Self {
            d,
            vertex_count,
            facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count)
    }

    pub fn has_facet(&self, f: VertexSet) -> bool {
        self.facets.binary_search(&f).is_ok()
    }

    pub fn facets_containing(&self, s: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        self.facets.iter().copied().filter(move |f| s.is_subset(*f))
    }

    /// Number of vertex-facet incidences, `f_03` for a 4-polytope.
    pub fn incidence_count(&self) -> usize {
        self.facets.iter().map(|f| f.len()).sum()
    }

    /// The ridges contained in `facet`: the maximal sets among its
    /// intersections with the other facets.
    pub fn ridges_of(&self, facet: VertexSet) -> Vec<VertexSet> {
        let mut cands: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|g| **g != facet)
            .map(|g| g.intersection(facet))
            .filter(|s| !s.is_empty())
            .collect();
        cands.sort();
        cands.dedup();
        let maximal: Vec<VertexSet> = cands
            .iter()
            .copied()
            .filter(|s| !cands.iter().any(|t| t != s && s.is_subset(*t)))
            .collect();
        maximal
    }

    pub fn to_json(&self) -> PolytopeJson {
        PolytopeJson {
            d: self.d,
            vertices: self.vertex_count,
            facets: self.facets.iter().map(|f| f.iter().collect()).collect(),
        }
    }

    pub fn from_json(j: &PolytopeJson) -> Result<Self> {
        if let Some(bad) = j
            .facets
            .iter()
            .flatten()
            .find(|&&v| v >= j.vertices.min(MAX_VERTICES))
        {
            return Err(Error::NotAPolytope(format!(
                "facet vertex {bad} out of range"
            )));
        }
        Self::new(
            j.d,
            j.vertices,
            j.facets
                .iter()
                .map(|f| VertexSet::from_indices(f.iter().copied())),
        )
    }
}

/// `{"d": 3, "vertices": 6, "facets": [[0,1,2], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub d: usize,
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl Serialize for VertexFacetPolytope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexFacetPolytope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolytopeJson::deserialize(d)?;
        Self::from_json(&j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().copied())
    }

    #[test]
    fn vertex_sets_order_lexicographically() {
        let mut sets = vec![
            vs(&[1]),
            vs(&[0, 2]),
            vs(&[0, 1, 5]),
            vs(&[0, 1]),
            vs(&[]),
            vs(&[127]),
        ];
        sets.sort();
        assert_eq!(
            sets,
            vec![
                vs(&[]),
                vs(&[0, 1]),
                vs(&[0, 1, 5]),
                vs(&[0, 2]),
                vs(&[1]),
                vs(&[127])
            ]
        );
        let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.iter().collect()).collect();
        let mut sorted = lists.clone();
        sorted.sort();
        assert_eq!(lists, sorted);
    }

    #[test]
    fn vertex_set_basics() {
        let s = vs(&[0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(4));
        assert_eq!(s.without(3), vs(&[0, 5]));
        assert_eq!(s.min(), Some(0));
        assert_eq!(VertexSet::full(128).len(), 128);
        assert_eq!(format!("{s:?}"), "{0, 3, 5}");
    }

    #[test]
    fn rejects_non_polytopes() {
        let nested = VertexFacetPolytope::new(2, 3, [vs(&[0, 1]), vs(&[0, 1, 2]), vs(&[1, 2])]);
        assert!(matches!(nested, Err(Error::NotAPolytope(_))));
        let lonely =
            VertexFacetPolytope::new(2, 4, [vs(&[0, 1]), vs(&[1, 2]), vs(&[2, 0]), vs(&[3])]);
        assert!(lonely.is_err());
        assert!(VertexFacetPolytope::new(2, 200, []).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = simplex_poly(3).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(
            text,
            r#"{"d":3,"vertices":4,"facets":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]}"#
        );
        let back: VertexFacetPolytope = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        let bad: std::result::Result<VertexFacetPolytope, _> =
            serde_json::from_str(r#"{"d":2,"vertices":3,"facets":[[0,1],[1,2],[2,7]]}"#);
        assert!(bad.is_err());
    }
}
