//! Exact convex hulls of small integer point sets.
//!
//! Facets are found by testing every hyperplane through `d` of the points,
//! so this is only meant for a few dozen points. Arithmetic is exact in
//! `i128`; coordinates are expected to stay small.

use std::collections::HashSet;

use super::{VertexFacetPolytope, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

fn det(mut m: Vec<Vec<i128>>) -> i128 {
    // Bareiss fraction-free elimination.
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Normal of the hyperplane through `pts` (d points in R^d), zero if they
/// are affinely dependent.
fn normal(pts: &[&[i64]]) -> Vec<i128> {
    let d = pts[0].len();
    let rows: Vec<Vec<i128>> = pts[1..]
        .iter()
        .map(|p| (0..d).map(|c| p[c] as i128 - pts[0][c] as i128).collect())
        .collect();
    (0..d)
        .map(|k| {
            let minor: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != k)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let m = if minor.is_empty() { 1 } else { det(minor) };
            if k % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .collect()
}

fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Convex hull of `points` in R^d as a vertex-facet polytope. Vertices are
/// the extreme points, numbered in input order after dropping the others.
/// Also returns the input index of every vertex.
pub fn convex_hull(points: &[Vec<i64>]) -> Result<(VertexFacetPolytope, Vec<usize>)> {
    let d = points
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::NotAPolytope("no points".into()))?;
    if d < 2 || points.iter().any(|p| p.len() != d) {
        return Err(Error::NotAPolytope(
            "points must share a dimension of at least 2".into(),
        ));
    }
    let mut uniq: Vec<Vec<i64>> = Vec::new();
    for p in points {
        if !uniq.contains(p) {
            uniq.push(p.clone());
        }
    }
    if uniq.len() > MAX_VERTICES {
        return Err(Error::OutOfRange(format!(
            "{} points exceed the engine limit",
            uniq.len()
        )));
    }
    let n = uniq.len();
    if n < d + 1 {
        return Err(Error::NotAPolytope(
            "too few points for a full-dimensional hull".into(),
        ));
    }
    let mut facets: HashSet<VertexSet> = HashSet::new();
    combinations(n, d, &mut |idx: &[usize]| {
        let pts: Vec<&[i64]> = idx.iter().map(|&i| uniq[i].as_slice()).collect();
        let nv = normal(&pts);
        if nv.iter().all(|&x| x == 0) {
            return;
        }
        let dot = |p: &[i64]| -> i128 { nv.iter().zip(p).map(|(a, b)| a * *b as i128).sum() };
        let c = dot(pts[0]);
        let (mut pos, mut neg, mut on) = (false, false, VertexSet::EMPTY);
        for (j, p) in uniq.iter().enumerate() {
            match dot(p).cmp(&c) {
                std::cmp::Ordering::Greater => pos = true,
                std::cmp::Ordering::Less => neg = true,
                std::cmp::Ordering::Equal => on = on.with(j),
            }
        }
        if !(pos && neg) {
            facets.insert(on);
        }
    });
    if facets.len() < d + 1 {
        return Err(Error::NotAPolytope(
            "points are not full-dimensional".into(),
        ));
    }
    let facets: Vec<VertexSet> = facets.into_iter().collect();
    let vertices: Vec<usize> = (0..n)
        .filter(|&j| {
            let meet = facets
                .iter()
                .filter(|f| f.contains(j))
                .fold(VertexSet::full(n), |acc, f| acc.intersection(*f));
            meet == VertexSet::singleton(j)
        })
        .collect();
    let mut relabel = vec![usize::MAX; n];
    for (i, &v) in vertices.iter().enumerate() {
        relabel[v] = i;
    }
    let vset = VertexSet::from_indices(vertices.iter().copied());
    let poly = VertexFacetPolytope::new(
        d,
        vertices.len(),
        facets
            .iter()
            .map(|f| f.intersection(vset).map(|v| relabel[v])),
    )?;
    let input_index = vertices
        .iter()
        .map(|&v| points.iter().position(|p| *p == uniq[v]).expect("present"))
        .collect();
    Ok((poly, input_index))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::face_lattice;

    fn counts(p: &VertexFacetPolytope) -> Vec<usize> {
        face_lattice(p).unwrap().counts()
    }

    #[test]
    fn cubes_and_cross_polytopes() {
        let cube: Vec<Vec<i64>> = (0..16)
            .map(|m| (0..4).map(|b| (m >> b) & 1).collect())
            .collect();
        assert_eq!(counts(&convex_hull(&cube).unwrap().0), vec![16, 32, 24, 8]);
        let mut cross = Vec::new();
        for i in 0..4 {
            for s in [-1, 1] {
                let mut v = vec![0; 4];
                v[i] = s;
                cross.push(v);
            }
        }
        cross.push(vec![0, 0, 0, 0]);
        let (p, idx) = convex_hull(&cross).unwrap();
        assert_eq!(counts(&p), vec![8, 24, 32, 16]);
        assert_eq!(idx, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn square_pyramid_with_an_edge_midpoint() {
        let pts = vec![
            vec![0, 0, 0],
            vec![2, 0, 0],
            vec![2, 2, 0],
            vec![0, 2, 0],
            vec![1, 1, 1],
            vec![1, 0, 0],
        ];
        let (p, idx) = convex_hull(&pts).unwrap();
        assert_eq!(counts(&p), vec![5, 8, 5]);
        assert_eq!(idx, vec![0, 1, 2, 3, 4]);
        assert!(
            convex_hull(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]).is_err()
        );
    }
}
