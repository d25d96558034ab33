//! Enumeration of f-vectors realized by polytopes the engine can build.
//!
//! Starting from standard constructions, the search repeatedly places a new
//! point beyond a single face and takes duals. Every step corresponds to a
//! geometric construction, so each f-vector found belongs to a polytope.
//! Completeness is not guaranteed by the search itself.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::ops::{place_point, polygon_pattern_ok};
use super::{
    beyond_face, beyond_face_except, cyclic_poly, direct_sum_poly, dual_poly, face_lattice,
    facets_around, join_poly, polygon_poly, product_poly, pyramid_poly, simplex_poly, Placement,
    Side, VertexFacetPolytope, VertexSet,
};
use crate::error::{Error, Result};

/// Options for [`census`].
#[derive(Clone, Copy, Debug)]
pub struct CensusOptions {
    pub d: usize,
    /// Keep polytopes with `f_0 + f_{d-1}` at most this.
    pub bound: usize,
    /// Distinct combinatorial signatures retained per f-vector.
    pub reps_per_fvector: usize,
    /// Intermediate polytopes may exceed the bound by this much.
    pub slack: usize,
}

/// Cheap isomorphism invariant used to tell representatives apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Signature {
    counts: Vec<usize>,
    facet_sizes: Vec<usize>,
    vertex_degrees: Vec<usize>,
}

fn signature(p: &VertexFacetPolytope, counts: Vec<usize>) -> Signature {
    let mut facet_sizes: Vec<usize> = p.facets().iter().map(|f| f.len()).collect();
    facet_sizes.sort_unstable();
    let mut vertex_degrees: Vec<usize> = (0..p.vertex_count())
        .map(|v| p.facets().iter().filter(|f| f.contains(v)).count())
        .collect();
    vertex_degrees.sort_unstable();
    Signature {
        counts,
        facet_sizes,
        vertex_degrees,
    }
}

fn size(p: &VertexFacetPolytope) -> usize {
    p.vertex_count() + p.facets().len()
}

fn seeds(opts: &CensusOptions) -> Result<Vec<VertexFacetPolytope>> {
    let d = opts.d;
    let mut out = vec![simplex_poly(d)?];
    let small = |p: &VertexFacetPolytope| size(p) <= opts.bound + opts.slack;
    match d {
        2 => {}
        3 => {
            for n in 3..opts.bound {
                let poly = polygon_poly(n)?;
                for q in [
                    pyramid_poly(&poly)?,
                    product_poly(&poly, &simplex_poly(1)?)?,
                ] {
                    if small(&q) {
                        out.push(q);
                    }
                }
            }
        }
        4 => {
            let lower = census(CensusOptions { d: 3, ..*opts })?;
            let seg = simplex_poly(1)?;
            for q in lower.into_values().flatten() {
                for r in [pyramid_poly(&q)?, product_poly(&q, &seg)?] {
                    if small(&r) {
                        out.push(r);
                    }
                }
            }
            for m in 3..opts.bound {
                for n in m..opts.bound {
                    if m * n + m + n > opts.bound {
                        break;
                    }
                    out.push(product_poly(&polygon_poly(m)?, &polygon_poly(n)?)?);
                }
                let j = join_poly(&polygon_poly(m)?, &seg)?;
                if small(&j) {
                    out.push(j);
                }
            }
            for n in 6..opts.bound {
                let c = cyclic_poly(n, 4)?;
                if small(&c) {
                    out.push(c);
                }
            }
            let sq = polygon_poly(4)?;
            out.push(direct_sum_poly(&sq, &sq)?);
        }
        _ => {
            return Err(Error::InvalidDimension {
                got: d,
                reason: "census supports d = 2, 3, 4",
            })
        }
    }
    let mut with_duals = Vec::new();
    for p in out {
        with_duals.push(dual_poly(&p)?);
        with_duals.push(p);
    }
    Ok(with_duals.into_iter().filter(small).collect())
}

fn children(p: &VertexFacetPolytope, bound: usize) -> Vec<VertexFacetPolytope> {
    let Ok(lattice) = face_lattice(p) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if let Ok(q) = dual_poly(p) {
        out.push(q);
    }
    let mut keep = |q: Result<VertexFacetPolytope>| {
        if let Ok(q) = q {
            if size(&q) <= bound {
                out.push(q);
            }
        }
    };
    let d = p.dim() as isize;
    for r in 0..d {
        for &h in lattice.faces(r) {
            let around: Vec<VertexSet> = p.facets_containing(h).collect();
            let cyclic = if around.len() as isize == d - r {
                Some((around.clone(), false))
            } else if r == d - 3 && around.len() <= 9 {
                facets_around(p, h).ok().map(|c| (c, true))
            } else {
                None
            };
            if let Some((order, polygon)) = cyclic {
                for signs in sign_vectors(order.len()) {
                    if !signs.contains(&Side::Beyond) || (polygon && !polygon_pattern_ok(&signs)) {
                        continue;
                    }
                    let pick = |side: Side| -> Vec<VertexSet> {
                        order
                            .iter()
                            .zip(&signs)
                            .filter(|(_, s)| **s == side)
                            .map(|(g, _)| *g)
                            .collect()
                    };
                    keep(place_point(p, &pick(Side::Beyond), &pick(Side::On)));
                }
                continue;
            }
            keep(beyond_face(p, h));
            for r2 in r + 1..d {
                for &h2 in lattice.faces(r2).iter().filter(|h2| h.is_subset(**h2)) {
                    keep(beyond_face_except(p, h, h2, Placement::Beneath));
                    keep(beyond_face_except(p, h, h2, Placement::OnHyperplanes));
                }
            }
        }
    }
    out
}

fn sign_vectors(k: usize) -> Vec<Vec<Side>> {
    let sides = [Side::Beyond, Side::On, Side::Beneath];
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| sides.iter().map(move |s| [v.clone(), vec![*s]].concat()))
            .collect();
    }
    out
}

/// Realized f-vectors (as `(f_0, ..., f_{d-1})`) with their retained
/// representatives, for all polytopes reached with `f_0 + f_{d-1}` within
/// the bound.
pub fn census(opts: CensusOptions) -> Result<BTreeMap<Vec<usize>, Vec<VertexFacetPolytope>>> {
    census_with_seeds(opts, Vec::new())
}

/// [`census`] with additional starting polytopes of dimension `opts.d`.
pub fn census_with_seeds(
    opts: CensusOptions,
    extra: Vec<VertexFacetPolytope>,
) -> Result<BTreeMap<Vec<usize>, Vec<VertexFacetPolytope>>> {
    if let Some(p) = extra.iter().find(|p| p.dim() != opts.d) {
        return Err(Error::DimensionMismatch {
            expected: opts.d,
            got: p.dim(),
        });
    }
    let mut found: BTreeMap<Vec<usize>, Vec<VertexFacetPolytope>> = BTreeMap::new();
    let mut seen: HashSet<Signature> = HashSet::new();
    let mut frontier = seeds(&opts)?;
    frontier.extend(extra);
    while !frontier.is_empty() {
        let evaluated: Vec<Option<(Signature, VertexFacetPolytope)>> = frontier
            .into_par_iter()
            .map(|p| {
                let counts = face_lattice(&p).ok()?.counts();
                Some((signature(&p, counts), p))
            })
            .collect();
        let mut fresh = Vec::new();
        for (sig, p) in evaluated.into_iter().flatten() {
            let reps = found.entry(sig.counts.clone()).or_default();
            if reps.len() >= opts.reps_per_fvector || seen.contains(&sig) {
                continue;
            }
            seen.insert(sig);
            reps.push(p.clone());
            fresh.push(p);
        }
        frontier = fresh
            .par_iter()
            .flat_map_iter(|p| children(p, opts.bound + opts.slack))
            .collect();
    }
    found.retain(|counts, _| counts[0] + counts[counts.len() - 1] <= opts.bound);
    Ok(found)
}
