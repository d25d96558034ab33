//! The Euler monoid and the complete f-vector descriptions in dimensions two
//! and three.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fvec::{euler_defect, simplex_fvector, FVec};
use crate::scalar::{int, Int};

/// A finite set of generators for a monoid under `⊞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet<T> {
    d: usize,
    generators: BTreeSet<FVec<T>>,
}

impl<T: Int> GeneratorSet<T> {
    pub fn new(d: usize, generators: impl IntoIterator<Item = FVec<T>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for g in generators {
            if g.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: g.dim(),
                });
            }
            if !euler_defect(&g).is_zero() {
                return Err(Error::InvalidVector(format!(
                    "generator {g} is off the Euler hyperplane"
                )));
            }
            if !set.insert(g.clone()) {
                return Err(Error::InvalidVector(format!("duplicate generator {g}")));
            }
        }
        Ok(Self { d, generators: set })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, f: &FVec<T>) -> bool {
        self.generators.contains(f)
    }

    pub fn iter(&self) -> impl Iterator<Item = &FVec<T>> {
        self.generators.iter()
    }
}

/// `x` on the Euler hyperplane with `x >= f(Δ_d)`.
pub fn euler_monoid_member<T: Int>(f: &FVec<T>) -> bool {
    euler_monoid_violation(f).is_none()
}

pub fn euler_monoid_violation<T: Int>(f: &FVec<T>) -> Option<String> {
    if !euler_defect(f).is_zero() {
        return Some("Euler equation violated".into());
    }
    let simplex = simplex_fvector::<T>(f.dim()).expect("dimension is positive");
    (0..f.dim())
        .find(|&i| f.get(i) < simplex.get(i))
        .map(|i| format!("f{i} >= {} violated", simplex.get(i)))
}

/// `f(Δ_d) + e_i + e_j` over even `i` and odd `j` in `0..d`.
pub fn euler_monoid_hilbert_basis<T: Int>(d: usize) -> Result<GeneratorSet<T>> {
    if d < 2 {
        return Err(Error::InvalidDimension {
            got: d,
            reason: "the Euler monoid needs d >= 2",
        });
    }
    let simplex = simplex_fvector::<T>(d)?;
    let mut gens = Vec::new();
    for i in (0..d).step_by(2) {
        for j in (1..d).step_by(2) {
            let mut e = simplex.entries().to_vec();
            e[i] = e[i].clone() + T::one();
            e[j] = e[j].clone() + T::one();
            gens.push(FVec::new(e)?);
        }
    }
    GeneratorSet::new(d, gens)
}

/// Elements of a finite member set that are not `⊞`-sums of two non-neutral
/// members. The set must contain, with each `x`, every member `y <= x`.
pub fn irreducible_members<T: Int>(members: &[FVec<T>], neutral: &FVec<T>) -> Vec<FVec<T>> {
    let lookup: HashSet<&FVec<T>> = members.iter().collect();
    let mut out: Vec<FVec<T>> = members
        .par_iter()
        .filter(|x| *x != neutral)
        .filter(|x| {
            !members.iter().any(|y| {
                if y == neutral || y == *x || !x.dominates(y) {
                    return false;
                }
                let z = x
                    .sub(y)
                    .and_then(|r| r.add(neutral))
                    .expect("same dimension");
                lookup.contains(&z)
            })
        })
        .cloned()
        .collect();
    out.sort();
    out
}

/// Monoid elements with every entry within `radius` of `f(Δ_d)`, then the
/// irreducible ones among them.
pub fn hilbert_basis_bruteforce<T: Int>(d: usize, radius: u32) -> Result<GeneratorSet<T>> {
    if d < 2 {
        return Err(Error::InvalidDimension {
            got: d,
            reason: "the Euler monoid needs d >= 2",
        });
    }
    if radius < 1 {
        return Err(Error::OutOfRange("radius must be at least 1".into()));
    }
    let simplex = simplex_fvector::<T>(d)?;
    let members: Vec<FVec<T>> = box_points(d, radius)
        .into_iter()
        .map(|off| {
            FVec::new(
                simplex
                    .entries()
                    .iter()
                    .zip(off)
                    .map(|(s, o)| s.clone() + T::from_u32(o).unwrap())
                    .collect(),
            )
            .expect("entries are positive")
        })
        .filter(euler_monoid_member)
        .collect();
    GeneratorSet::new(d, irreducible_members(&members, &simplex))
}

fn box_points(d: usize, radius: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=radius).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Greedy decomposition into Hilbert basis elements: repeatedly remove
/// `e_i + e_j` with `i` the smallest even and `j` the smallest odd index
/// still above the simplex bound.
pub fn euler_monoid_decompose<T: Int>(f: &FVec<T>) -> Result<Vec<FVec<T>>> {
    if f.dim() < 2 || !euler_monoid_member(f) {
        return Err(Error::NotAMember(f.to_string()));
    }
    let simplex = simplex_fvector::<T>(f.dim())?;
    let mut rest = f.entries().to_vec();
    let mut parts = Vec::new();
    loop {
        let above = |k: &usize| rest[*k] > *simplex.get(*k);
        let i = (0..f.dim()).step_by(2).find(above);
        let j = (1..f.dim()).step_by(2).find(above);
        match (i, j) {
            (Some(i), Some(j)) => {
                rest[i] = rest[i].clone() - T::one();
                rest[j] = rest[j].clone() - T::one();
                let mut g = simplex.entries().to_vec();
                g[i] = g[i].clone() + T::one();
                g[j] = g[j].clone() + T::one();
                parts.push(FVec::new(g)?);
            }
            (None, None) => return Ok(parts),
            _ => return Err(Error::Internal(format!("decomposition of {f} stalled"))),
        }
    }
}

/// Steinitz: `f_1 = f_0 + f_2 - 2`, `f_2 <= 2 f_0 - 4`, `f_0 <= 2 f_2 - 4`.
pub fn steinitz_member<T: Int>(f: &FVec<T>) -> Result<bool> {
    Ok(steinitz_violation(f)?.is_none())
}

pub fn steinitz_violation<T: Int>(f: &FVec<T>) -> Result<Option<&'static str>> {
    if f.dim() != 3 {
        return Err(Error::InvalidDimension {
            got: f.dim(),
            reason: "Steinitz's conditions are for d = 3",
        });
    }
    let (f0, f1, f2) = (f.get(0).clone(), f.get(1).clone(), f.get(2).clone());
    let two = int::<T>(2);
    let four = int::<T>(4);
    Ok(if f1 != f0.clone() + f2.clone() - two.clone() {
        Some("f1 = f0 + f2 - 2 violated")
    } else if f2 > two.clone() * f0.clone() - four.clone() {
        Some("f2 <= 2 f0 - 4 violated")
    } else if f0 > two * f2 - four {
        Some("f0 <= 2 f2 - 4 violated")
    } else {
        None
    })
}

/// Bipyramid, prism and square pyramid.
pub fn steinitz_hilbert_basis<T: Int>() -> GeneratorSet<T> {
    let gens = [[5, 9, 6], [6, 9, 5], [5, 8, 5]].map(|g| FVec::from_i64s(&g).expect("positive"));
    GeneratorSet::new(3, gens).expect("generators are distinct and Eulerian")
}

/// `(n, n)` with `n >= 3`.
pub fn polygon_member<T: Int>(f: &FVec<T>) -> Result<bool> {
    Ok(polygon_violation(f)?.is_none())
}

pub fn polygon_violation<T: Int>(f: &FVec<T>) -> Result<Option<&'static str>> {
    if f.dim() != 2 {
        return Err(Error::InvalidDimension {
            got: f.dim(),
            reason: "polygons have d = 2",
        });
    }
    Ok(if f.get(0) != f.get(1) {
        Some("f0 = f1 violated")
    } else if *f.get(0) < int(3) {
        Some("f0 >= 3 violated")
    } else {
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fvec::{dual_fvector, reduced_add, Reduction, ReductionBase};
    use num_bigint::BigInt;

    type V = FVec<BigInt>;

    fn v(s: &str) -> V {
        s.parse().unwrap()
    }

    fn vs(list: &[&str]) -> Vec<V> {
        list.iter().map(|s| v(s)).collect()
    }

    #[test]
    fn euler_monoid_examples() {
        assert!(euler_monoid_member(&v("(4,6,4)")));
        assert!(euler_monoid_member(&v("(9,21,22,10)")));
        assert!(euler_monoid_member(&v("(4,7,5)")));
        assert!(!euler_monoid_member(&v("(3,4,3)")));
        assert_eq!(
            euler_monoid_violation(&v("(4,7,4)")).unwrap(),
            "Euler equation violated"
        );
    }

    #[test]
    fn formula_basis_examples() {
        let b3 = euler_monoid_hilbert_basis::<BigInt>(3).unwrap();
        assert_eq!(
            b3.iter().cloned().collect::<Vec<_>>(),
            vs(&["(4,7,5)", "(5,7,4)"])
        );
        let b2 = euler_monoid_hilbert_basis::<BigInt>(2).unwrap();
        assert_eq!(b2.iter().cloned().collect::<Vec<_>>(), vs(&["(4,4)"]));
        let b4 = euler_monoid_hilbert_basis::<BigInt>(4).unwrap();
        let mut expect = vs(&["(6,11,10,5)", "(6,10,10,6)", "(5,11,11,5)", "(5,10,11,6)"]);
        expect.sort();
        assert_eq!(b4.iter().cloned().collect::<Vec<_>>(), expect);
        assert!(euler_monoid_hilbert_basis::<BigInt>(1).is_err());
        for d in 2..=8 {
            assert_eq!(
                euler_monoid_hilbert_basis::<i64>(d).unwrap().len(),
                d.div_ceil(2) * (d / 2)
            );
        }
    }

    #[test]
    fn bruteforce_basis_examples() {
        assert_eq!(
            hilbert_basis_bruteforce::<i64>(3, 3).unwrap(),
            euler_monoid_hilbert_basis(3).unwrap()
        );
        assert_eq!(
            hilbert_basis_bruteforce::<i64>(2, 5).unwrap(),
            euler_monoid_hilbert_basis(2).unwrap()
        );
        assert_eq!(
            hilbert_basis_bruteforce::<i64>(4, 2).unwrap(),
            euler_monoid_hilbert_basis(4).unwrap()
        );
        assert!(hilbert_basis_bruteforce::<i64>(3, 0).is_err());
    }

    #[test]
    fn decompose_examples() {
        assert!(euler_monoid_decompose(&v("(4,6,4)")).unwrap().is_empty());
        assert_eq!(
            euler_monoid_decompose(&v("(5,7,4)")).unwrap(),
            vs(&["(5,7,4)"])
        );
        assert_eq!(
            euler_monoid_decompose(&v("(6,8,4)")).unwrap(),
            vs(&["(5,7,4)", "(5,7,4)"])
        );
        assert!(matches!(
            euler_monoid_decompose(&v("(4,7,4)")),
            Err(Error::NotAMember(_))
        ));
    }

    #[test]
    fn every_small_member_decomposes_over_formula_basis() {
        for d in 2..=6 {
            let basis = euler_monoid_hilbert_basis::<i64>(d).unwrap();
            let simplex = simplex_fvector::<i64>(d).unwrap();
            let b = ReductionBase::new(Reduction::Simplex, d).unwrap();
            for off in box_points(d, 4) {
                let x = FVec::new(
                    simplex
                        .entries()
                        .iter()
                        .zip(&off)
                        .map(|(s, o)| s + *o as i64)
                        .collect(),
                )
                .unwrap();
                if !euler_monoid_member(&x) {
                    continue;
                }
                let parts = euler_monoid_decompose(&x).unwrap();
                assert!(parts.iter().all(|p| basis.contains(p)));
                let sum = parts.iter().fold(simplex.clone(), |acc, p| {
                    reduced_add(&acc, p, &b).unwrap().vector
                });
                assert_eq!(sum, x);
            }
        }
    }

    #[test]
    fn steinitz_examples() {
        assert!(steinitz_member(&v("(4,6,4)")).unwrap());
        assert!(steinitz_member(&v("(6,9,5)")).unwrap());
        assert!(!steinitz_member(&v("(5,10,7)")).unwrap());
        assert_eq!(
            steinitz_violation(&v("(5,10,7)")).unwrap(),
            Some("f2 <= 2 f0 - 4 violated")
        );
        assert!(steinitz_member(&v("(4,6,4,2)")).is_err());
    }

    #[test]
    fn steinitz_basis_is_minimal_by_bruteforce() {
        let basis = steinitz_hilbert_basis::<i64>();
        assert!(basis.contains(&FVec::from_i64s(&[5, 9, 6]).unwrap()));
        assert!(basis.contains(&FVec::from_i64s(&[6, 9, 5]).unwrap()));
        let mut members = Vec::new();
        for f0 in 4..=10i64 {
            for f2 in 4..=10i64 {
                let f = FVec::from_i64s(&[f0, f0 + f2 - 2, f2]).unwrap();
                if steinitz_member(&f).unwrap() {
                    members.push(f);
                }
            }
        }
        let neutral = FVec::from_i64s(&[4, 6, 4]).unwrap();
        let found = GeneratorSet::new(3, irreducible_members(&members, &neutral)).unwrap();
        assert_eq!(found, basis);
    }

    #[test]
    fn steinitz_is_dual_symmetric() {
        for f0 in 4..=20i64 {
            for f2 in 4..=20i64 {
                let f = FVec::<i64>::from_i64s(&[f0, f0 + f2 - 2, f2]).unwrap();
                let m = steinitz_member(&f).unwrap();
                assert_eq!(m, steinitz_member(&dual_fvector(&f)).unwrap());
                assert!(!m || euler_monoid_member(&f));
            }
        }
    }

    #[test]
    fn polygon_examples() {
        assert!(polygon_member(&v("(3,3)")).unwrap());
        assert!(polygon_member(&v("(7,7)")).unwrap());
        assert!(!polygon_member(&v("(4,5)")).unwrap());
        assert!(!polygon_member(&v("(2,2)")).unwrap());
        assert!(polygon_member(&v("(3,3,2)")).is_err());
    }

    #[test]
    fn generator_set_rejects_bad_input() {
        assert!(GeneratorSet::new(3, vs(&["(4,6,5)"])).is_err());
        assert!(GeneratorSet::new(3, vs(&["(4,6,4)", "(4,6,4)"])).is_err());
        assert!(GeneratorSet::new(3, vs(&["(4,4)"])).is_err());
    }
}
