//! Dimension 4: fatness, a necessary-condition filter, the small-facet and
//! incidence bounds behind the approximate closure theorem, and dataset
//! reports for the three reduced additions.
//!
//! Bounds that involve cube roots are decided exactly by comparing cubes of
//! integers, so no floating point enters any verdict.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fvec::{choose, euler_defect, reduced_add, FVec, Reduction, ReductionBase};
use crate::lattice::euler_lattice_member;
use crate::scalar::{cbrt_ceil, int, largest_cube_below, Int, Rational};

fn check_dim4<T: Int>(f: &FVec<T>) -> Result<()> {
    if f.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: f.dim(),
        });
    }
    Ok(())
}

/// `(f_1 + f_2 - 20) / (f_0 + f_3 - 10)`.
pub fn fatness<T: Int>(f: &FVec<T>) -> Result<Rational<T>> {
    check_dim4(f)?;
    let e = f.entries();
    let den = e[0].clone() + e[3].clone() - int(10);
    if !den.is_positive() {
        return Err(Error::UndefinedFatness(den.to_string()));
    }
    Ok(Ratio::new(e[1].clone() + e[2].clone() - int(20), den))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Excluded,
    NotExcluded,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Excluded => "EXCLUDED",
            Verdict::NotExcluded => "NOT_EXCLUDED",
        })
    }
}

/// One named inequality. `slack` is `lhs - rhs` for the form `lhs >= rhs`;
/// for the Euler equation it is minus the absolute defect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check<T: Int> {
    pub name: &'static str,
    pub holds: bool,
    pub slack: Rational<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport<T: Int> {
    pub vector: FVec<T>,
    pub checks: Vec<Check<T>>,
    pub verdict: Verdict,
}

impl<T: Int> ConditionReport<T> {
    pub fn failed(&self) -> impl Iterator<Item = &Check<T>> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vector": self.vector,
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "holds": c.holds,
                "slack": c.slack.to_string(),
            })).collect::<Vec<_>>(),
            "verdict": self.verdict,
        })
    }
}

impl<T: Int> fmt::Display for ConditionReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.vector, self.verdict)?;
        for c in &self.checks {
            writeln!(f, "  {:<12} {:<5} slack {}", c.name, c.holds, c.slack)?;
        }
        Ok(())
    }
}

/// Evaluates the standard necessary conditions for 4-polytope f-vectors.
/// Passing them says nothing about realizability.
pub fn necessary_conditions_4<T: Int>(f: &FVec<T>) -> Result<ConditionReport<T>> {
    check_dim4(f)?;
    let e = f.entries();
    let (f0, f1, f2, f3) = (&e[0], &e[1], &e[2], &e[3]);
    let mut checks = Vec::with_capacity(8);
    let mut ge = |name: &'static str, lhs: T, rhs: T| {
        let slack = lhs - rhs;
        checks.push(Check {
            name,
            holds: !slack.is_negative(),
            slack: Ratio::from_integer(slack),
        });
    };
    ge("euler", -euler_defect(f).abs(), T::zero());
    ge("f0>=5", f0.clone(), int(5));
    ge("f3>=5", f3.clone(), int(5));
    ge("f1>=2f0", f1.clone(), int::<T>(2) * f0.clone());
    ge("f2>=2f3", f2.clone(), int::<T>(2) * f3.clone());
    ge("f1<=C(f0,2)", choose(f0, 2), f1.clone());
    ge("f2<=C(f3,2)", choose(f3, 2), f2.clone());
    if let Ok(fat) = fatness(f) {
        let slack = fat - Ratio::new(int(5), int(2));
        checks.push(Check {
            name: "fatness>=5/2",
            holds: !slack.is_negative(),
            slack,
        });
    }
    let verdict = if checks.iter().all(|c| c.holds) {
        Verdict::NotExcluded
    } else {
        Verdict::Excluded
    };
    Ok(ConditionReport {
        vector: f.clone(),
        checks,
        verdict,
    })
}

fn positive<T: Int>(x: &T, what: &str) -> Result<()> {
    if *x < T::one() {
        return Err(Error::OutOfRange(format!(
            "{what} must be at least 1, got {x}"
        )));
    }
    Ok(())
}

/// `ceil(2^(1/3) (f0 - 2) f3^(2/3) + 2 f3)`, the Kővári-Sós-Turán bound on
/// vertex-facet incidences of a 4-polytope.
pub fn kst_edge_bound<T: Int>(f0: &T, f3: &T) -> Result<T> {
    positive(f0, "f0")?;
    positive(f3, "f3")?;
    let a = f0.clone() - int(2);
    // 2^(1/3) a f3^(2/3) = cbrt(2 a^3 f3^2), so the ceiling needs one exact
    // cube root. For a < 0 the term is negative and ceil(-y) = -floor(y).
    let cube = int::<T>(2) * a.clone() * a.clone() * a.clone() * f3.clone() * f3.clone();
    let term = if cube.is_negative() {
        -(-cube).cbrt()
    } else {
        cbrt_ceil(&cube)
    };
    Ok(term + int::<T>(2) * f3.clone())
}

/// Largest integer `n` with `n < 2 f0 / f3^(1/3) + 2`. A 4-polytope with
/// `f0 <= f3` has a facet with at most this many vertices.
pub fn small_facet_bound<T: Int>(f0: &T, f3: &T) -> Result<T> {
    positive(f0, "f0")?;
    positive(f3, "f3")?;
    if f0 > f3 {
        return Err(Error::OutOfRange(format!(
            "the bound assumes f0 <= f3, got f0 = {f0} > f3 = {f3}"
        )));
    }
    // n - 2 = m with m^3 f3 < 8 f0^3, i.e. m^3 < ceil(8 f0^3 / f3).
    let x = int::<T>(8) * f0.clone() * f0.clone() * f0.clone();
    let m = largest_cube_below(&x.div_ceil(f3));
    Ok(m + int(2))
}

/// Componentwise bound on `f(P_adapter) - f(P)` when the adapter is built by
/// three stellar subdivisions starting at a facet with `n` vertices:
/// `(1, n, 3n-6, 2n-5) + (1, 6, 10, 5) + (1, 4, 6, 3)`.
pub fn modification_delta<T: Int>(n: &T) -> Result<FVec<T>> {
    if *n < int(4) {
        return Err(Error::OutOfRange(format!(
            "a facet of a 4-polytope has at least 4 vertices, got {n}"
        )));
    }
    let n = n.clone();
    FVec::new(vec![
        int(3),
        n.clone() + int(10),
        int::<T>(3) * n.clone() + int(10),
        int::<T>(2) * n + int(3),
    ])
}

/// Largest integer strictly below `12 q^(2/3) + 33`.
pub fn approx_sum_tolerance<T: Int>(q: &T) -> Result<T> {
    positive(q, "entry")?;
    // s < 12 q^(2/3) iff s^3 < 1728 q^2 (s >= 0).
    Ok(largest_cube_below(&(int::<T>(1728) * q.clone() * q.clone())) + int(33))
}

/// Whether `fq` is within the approximate-sum tolerance of `fp + fpp`.
pub fn check_approximate_closure<T: Int>(
    fp: &FVec<T>,
    fpp: &FVec<T>,
    fq: &FVec<T>,
) -> Result<bool> {
    for f in [fp, fpp, fq] {
        check_dim4(f)?;
    }
    for i in 0..4 {
        let dev = (fq.get(i).clone() - fp.get(i).clone() - fpp.get(i).clone()).abs();
        if dev > approx_sum_tolerance(fq.get(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Range a dataset covers: every f-vector with `f_0 + f_{d-1}` at most
/// `f0_plus_f3` is meant to be listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessBound {
    pub f0_plus_f3: u64,
}

impl CompletenessBound {
    pub fn admits<T: Int>(&self, f: &FVec<T>) -> bool {
        let s = f.get(0).clone() + f.get(f.dim() - 1).clone();
        s <= T::from_u64(self.f0_plus_f3).expect("bound fits the scalar")
    }
}

impl fmt::Display for CompletenessBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f_0 + f_3 <= {}", self.f0_plus_f3)
    }
}

#[derive(Deserialize, Serialize)]
#[serde(bound(serialize = "T: Int", deserialize = "T: Int"))]
struct DatasetJson<T> {
    d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    complete_up_to: Option<CompletenessBound>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    vectors: Vec<FVec<T>>,
}

/// A set of f-vectors of one dimension, optionally with the range it is
/// supposed to cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVectorDataset<T> {
    d: usize,
    vectors: BTreeSet<FVec<T>>,
    completeness: Option<CompletenessBound>,
    note: Option<String>,
}

const BUILTIN_4D: &str = include_str!("../data/fvectors_4d_f0f3_le22.json");

impl<T: Int> FVectorDataset<T> {
    pub fn new(
        d: usize,
        vectors: impl IntoIterator<Item = FVec<T>>,
        completeness: Option<CompletenessBound>,
    ) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDimension {
                got: 0,
                reason: "datasets need d >= 1",
            });
        }
        let vectors: BTreeSet<FVec<T>> = vectors.into_iter().collect();
        for v in &vectors {
            if v.dim() != d {
                return Err(Error::Dataset(format!(
                    "{v} has dimension {}, expected {d}",
                    v.dim()
                )));
            }
            if !euler_lattice_member(v) {
                return Err(Error::Dataset(format!("{v} violates the Euler equation")));
            }
        }
        Ok(Self {
            d,
            vectors,
            completeness,
            note: None,
        })
    }

    /// The shipped list of 4-polytope f-vectors with `f_0 + f_3 <= 22`.
    /// See the dataset note for how it was obtained.
    pub fn builtin_4d() -> Self {
        Self::from_json(BUILTIN_4D).expect("shipped dataset is valid")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: DatasetJson<T> =
            serde_json::from_str(s).map_err(|e| Error::Dataset(e.to_string()))?;
        let mut ds = Self::new(raw.d, raw.vectors, raw.complete_up_to)?;
        ds.note = raw.note;
        Ok(ds)
    }

    pub fn to_json(&self) -> String {
        let raw = DatasetJson {
            d: self.d,
            complete_up_to: self.completeness,
            note: self.note.clone(),
            vectors: self.vectors.iter().cloned().collect(),
        };
        serde_json::to_string(&raw).expect("datasets serialize")
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, f: &FVec<T>) -> bool {
        self.vectors.contains(f)
    }

    pub fn iter(&self) -> impl Iterator<Item = &FVec<T>> {
        self.vectors.iter()
    }

    pub fn completeness(&self) -> Option<CompletenessBound> {
        self.completeness
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn in_range(&self, f: &FVec<T>) -> bool {
        self.completeness.is_none_or(|b| b.admits(f))
    }
}

/// A pair of members and their reduced or exact sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: Int"))]
pub struct PairSum<T> {
    pub x: FVec<T>,
    pub y: FVec<T>,
    pub sum: FVec<T>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: Int"))]
pub struct ClosureReport<T> {
    pub base: String,
    pub pairs_checked: usize,
    pub absent_sums: Vec<PairSum<T>>,
}

impl<T: Int> ClosureReport<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Unordered pairs of members, each pair once, including `x = y`.
fn member_pairs<T: Int>(ds: &FVectorDataset<T>) -> Vec<(&FVec<T>, &FVec<T>)> {
    let v: Vec<&FVec<T>> = ds.iter().collect();
    (0..v.len())
        .flat_map(|i| {
            (i..v.len()).map({
                let v = &v;
                move |j| (v[i], v[j])
            })
        })
        .collect()
}

/// Reduced sums of all member pairs that stay in the dataset's range, and
/// those among them that are missing from the dataset.
pub fn closure_report<T: Int>(
    ds: &FVectorDataset<T>,
    base: &ReductionBase<T>,
) -> Result<ClosureReport<T>> {
    if ds.is_empty() {
        return Err(Error::Dataset("closure report of an empty dataset".into()));
    }
    if base.dim() != ds.dim() {
        return Err(Error::DimensionMismatch {
            expected: ds.dim(),
            got: base.dim(),
        });
    }
    let pairs = member_pairs(ds);
    let results: Vec<Option<(bool, PairSum<T>)>> = pairs
        .par_iter()
        .map(|(x, y)| {
            let s = reduced_add(x, y, base).expect("dimensions checked").vector;
            if !ds.in_range(&s) {
                return None;
            }
            Some((
                ds.contains(&s),
                PairSum {
                    x: (*x).clone(),
                    y: (*y).clone(),
                    sum: s,
                },
            ))
        })
        .collect();
    let checked: Vec<(bool, PairSum<T>)> = results.into_iter().flatten().collect();
    let pairs_checked = checked.len();
    let mut absent_sums: Vec<PairSum<T>> = checked
        .into_iter()
        .filter(|(p, _)| !p)
        .map(|(_, s)| s)
        .collect();
    absent_sums.sort_by(|a, b| (&a.sum, &a.x, &a.y).cmp(&(&b.sum, &b.x, &b.y)));
    Ok(ClosureReport {
        base: base.variant().name().to_string(),
        pairs_checked,
        absent_sums,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: Int"))]
pub struct ApproximationReport<T> {
    pub pairs_checked: usize,
    pub unmatched: Vec<PairSum<T>>,
}

impl<T: Int> ApproximationReport<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// For every member pair `(v, w)` whose connected-sum vector
/// `v + w - (1,0,0,1)` lies in the dataset's range, looks for a member `u`
/// that dominates that vector and is within the approximate-sum tolerance
/// of `v + w`. Domination reflects the construction: modifying the
/// summands only adds faces.
pub fn approximate_semigroup_check<T: Int>(
    ds: &FVectorDataset<T>,
) -> Result<ApproximationReport<T>> {
    if ds.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: ds.dim(),
        });
    }
    let base = ReductionBase::new(Reduction::VertexFacet, 4)?;
    let members: Vec<&FVec<T>> = ds.iter().collect();
    let pairs = member_pairs(ds);
    let results: Vec<Option<(bool, PairSum<T>)>> = pairs
        .par_iter()
        .map(|(v, w)| {
            let floor = reduced_add(v, w, &base).expect("dimension 4").vector;
            if !ds.in_range(&floor) {
                return None;
            }
            let sum = v.add(w).expect("dimension 4");
            let matched = ds.contains(&floor)
                || members.iter().any(|u| {
                    u.dominates(&floor) && check_approximate_closure(v, w, u).expect("dimension 4")
                });
            Some((
                matched,
                PairSum {
                    x: (*v).clone(),
                    y: (*w).clone(),
                    sum,
                },
            ))
        })
        .collect();
    let checked: Vec<(bool, PairSum<T>)> = results.into_iter().flatten().collect();
    let pairs_checked = checked.len();
    let unmatched = checked
        .into_iter()
        .filter(|(m, _)| !m)
        .map(|(_, s)| s)
        .collect();
    Ok(ApproximationReport {
        pairs_checked,
        unmatched,
    })
}
