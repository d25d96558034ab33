use std::collections::{HashMap, HashSet};

use super::{VertexFacetPolytope, VertexSet};
use crate::error::{Error, Result};
use crate::fvec::FVec;
use crate::scalar::Int;

/// Faces of a polytope grouped by dimension, from the empty face up to the
/// polytope itself.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    d: usize,
    // levels[r + 1] holds the faces of dimension r.
    levels: Vec<Vec<VertexSet>>,
    rank: HashMap<VertexSet, usize>,
}

impl FaceLattice {
    pub fn dim(&self) -> usize {
        self.d
    }

    /// Faces of dimension `r`, for `-1 <= r <= d`, in lexicographic order.
    pub fn faces(&self, r: isize) -> &[VertexSet] {
        let idx = r + 1;
        if idx < 0 || idx as usize >= self.levels.len() {
            return &[];
        }
        &self.levels[idx as usize]
    }

    pub fn face_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        self.rank.contains_key(&s)
    }

    /// Dimension of a face, `None` if `s` is not a face.
    pub fn dim_of(&self, s: VertexSet) -> Option<isize> {
        self.rank.get(&s).map(|&r| r as isize - 1)
    }

    /// `(f_0, ..., f_{d-1})`.
    pub fn counts(&self) -> Vec<usize> {
        (0..self.d).map(|r| self.levels[r + 1].len()).collect()
    }

    pub fn fvector<T: Int>(&self) -> Result<FVec<T>> {
        if self.d == 0 {
            return Err(Error::InvalidDimension {
                got: 0,
                reason: "a point has an empty f-vector",
            });
        }
        FVec::new(
            self.counts()
                .into_iter()
                .map(|c| T::from_usize_exact(c))
                .collect(),
        )
    }

    /// Checks that every interval of length two has exactly two middle
    /// elements. Face lattices of polytopes always pass.
    pub fn check_diamond(&self) -> Result<()> {
        for r in 0..self.levels.len().saturating_sub(2) {
            let upper = &self.levels[r + 2];
            let mid = &self.levels[r + 1];
            for &lo in &self.levels[r] {
                for &hi in upper {
                    if !lo.is_subset(hi) {
                        continue;
                    }
                    let between = mid
                        .iter()
                        .filter(|m| lo.is_subset(**m) && m.is_subset(hi))
                        .count();
                    if between != 2 {
                        return Err(Error::NotAPolytope(format!(
                            "interval [{lo:?}, {hi:?}] has {between} middle elements"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds the face lattice as the intersection closure of the facets and
/// checks that it is graded of height `d + 1`, atomic (vertices are exactly
/// the singletons) and coatomic.
pub fn face_lattice(p: &VertexFacetPolytope) -> Result<FaceLattice> {
    let d = p.dim();
    let all = p.vertices();
    let mut faces: HashSet<VertexSet> = HashSet::new();
    faces.insert(all);
    let mut frontier: Vec<VertexSet> = p.facets().to_vec();
    for f in &frontier {
        faces.insert(*f);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for f in p.facets() {
                let t = s.intersection(*f);
                if faces.insert(t) {
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    faces.insert(VertexSet::EMPTY);

    let mut by_size: Vec<VertexSet> = faces.into_iter().collect();
    by_size.sort_by_key(|s| (s.len(), *s));

    let mut rank: HashMap<VertexSet, usize> = HashMap::with_capacity(by_size.len());
    for (i, &s) in by_size.iter().enumerate() {
        let below = by_size[..i]
            .iter()
            .filter(|t| t.is_subset(s))
            .map(|t| rank[t] + 1)
            .max();
        rank.insert(s, below.unwrap_or(0));
    }

    let height = rank[&all];
    if height != d + 1 {
        return Err(Error::NotAPolytope(format!(
            "face poset has height {height}, expected {}",
            d + 1
        )));
    }
    // Graded: every cover relation raises rank by one.
    for (i, &s) in by_size.iter().enumerate() {
        let subs: Vec<VertexSet> = by_size[..i]
            .iter()
            .copied()
            .filter(|t| t.is_subset(s))
            .collect();
        for &t in &subs {
            let covered = !subs.iter().any(|u| *u != t && t.is_subset(*u));
            if covered && rank[&t] + 1 != rank[&s] {
                return Err(Error::NotAPolytope(format!(
                    "face poset is not graded at {t:?} < {s:?}"
                )));
            }
        }
    }

    let mut levels = vec![Vec::new(); d + 2];
    for (&s, &r) in &rank {
        levels[r].push(s);
    }
    for level in &mut levels {
        level.sort();
    }
    if d > 0 {
        let atoms_ok =
            levels[1].len() == p.vertex_count() && levels[1].iter().all(|s| s.len() == 1);
        if !atoms_ok {
            return Err(Error::NotAPolytope(
                "vertices are not the atoms of the face poset".into(),
            ));
        }
        if levels[d] != p.facets() {
            return Err(Error::NotAPolytope(
                "facets are not the coatoms of the face poset".into(),
            ));
        }
    }
    Ok(FaceLattice { d, levels, rank })
}

pub fn fvector_of<T: Int>(p: &VertexFacetPolytope) -> Result<FVec<T>> {
    face_lattice(p)?.fvector()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{polygon_poly, simplex_poly};

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().copied())
    }

    #[test]
    fn square_pyramid() {
        let p = VertexFacetPolytope::new(
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
        .unwrap();
        let l = face_lattice(&p).unwrap();
        assert_eq!(l.counts(), vec![5, 8, 5]);
        assert_eq!(l.dim_of(vs(&[0, 1])), Some(1));
        assert_eq!(l.dim_of(vs(&[0, 2])), None);
        l.check_diamond().unwrap();
    }

    #[test]
    fn simplices_and_polygons() {
        for d in 1..=6 {
            let l = face_lattice(&simplex_poly(d).unwrap()).unwrap();
            let expected: Vec<usize> = (1..=d)
                .map(|k| crate::fvec::binomial::<i64>(d as i64 + 1, k as i64) as usize)
                .collect();
            assert_eq!(l.counts(), expected);
            l.check_diamond().unwrap();
        }
        for n in 3..10 {
            assert_eq!(
                face_lattice(&polygon_poly(n).unwrap()).unwrap().counts(),
                vec![n, n]
            );
        }
    }

    #[test]
    fn too_few_facets_or_bad_diamonds() {
        assert!(
            VertexFacetPolytope::new(3, 4, [vs(&[0, 1, 2]), vs(&[0, 1, 3]), vs(&[2, 3])]).is_err()
        );
        // A quadrilateral with a diagonal: graded, but vertex 0 sits on three edges.
        let p = VertexFacetPolytope::new(
            2,
            4,
            [
                vs(&[0, 1]),
                vs(&[1, 2]),
                vs(&[2, 3]),
                vs(&[0, 3]),
                vs(&[0, 2]),
            ],
        )
        .unwrap();
        assert!(face_lattice(&p).unwrap().check_diamond().is_err());
    }
}
