//! The Dehn-Sommerville monoid: g-vectors, Macaulay's M-sequences and the
//! membership oracle for f-vectors of simplicial polytopes.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fvec::{choose, FVec};
use crate::lattice::{
    build_m_matrix, solve_row_combination, triangularize_by_row_subtraction, IntegerMatrix,
    RowSolution,
};
use crate::scalar::{Int, Rational};

/// `(g_0, ..., g_{floor(d/2)})` with `g_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GVec<T> {
    d: usize,
    entries: Vec<T>,
}

impl<T: Int> GVec<T> {
    pub fn new(d: usize, entries: Vec<T>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidDimension {
                got: d,
                reason: "g-vectors need d >= 2",
            });
        }
        if entries.len() != d / 2 + 1 {
            return Err(Error::DimensionMismatch {
                expected: d / 2 + 1,
                got: entries.len(),
            });
        }
        if !entries[0].is_one() {
            return Err(Error::InvalidVector(format!(
                "g_0 = {}, expected 1",
                entries[0]
            )));
        }
        Ok(Self { d, entries })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }
}

impl<T: Int> fmt::Display for GVec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// JSON form: array of integers (the dimension travels separately).
impl<T: Int> Serialize for GVec<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::fvec::serialize_ints(&self.entries, s)
    }
}

impl<'de, T: Int> Deserialize<'de> for GVec<T> {
    /// Infers `d = 2 * (len - 1)`; use [`GVec::new`] for odd dimensions.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries: Vec<T> = crate::fvec::deserialize_ints(d)?;
        let dim = 2 * entries.len().saturating_sub(1);
        GVec::new(dim, entries).map_err(serde::de::Error::custom)
    }
}

/// `a^{<i>}`: write `a = C(a_i, i) + ... + C(a_j, j)` with
/// `a_i > ... > a_j >= j >= 1` and return `C(a_i+1, i+1) + ... + C(a_j+1, j+1)`.
pub fn macaulay_pseudopower<T: Int>(a: &T, i: u32) -> Result<T> {
    if i < 1 {
        return Err(Error::OutOfRange(
            "the Macaulay pseudopower needs i >= 1".into(),
        ));
    }
    if a.is_negative() {
        return Err(Error::OutOfRange(format!(
            "the Macaulay pseudopower needs a >= 0, got {a}"
        )));
    }
    let mut rest = a.clone();
    let mut out = T::zero();
    let mut k = i as u64;
    while k >= 1 && !rest.is_zero() {
        let top = largest_with_choose_at_most(&rest, k);
        rest = rest - choose(&top, k);
        out = out + choose(&(top + T::one()), k + 1);
        k -= 1;
    }
    Ok(out)
}

/// Largest `n` with `C(n, k) <= a`, for `a >= 1`.
fn largest_with_choose_at_most<T: Int>(a: &T, k: u64) -> T {
    let kk = T::from_u64(k).expect("k fits");
    // C(n, k) >= n - k + 1, so n <= a + k - 1 bounds the search.
    let mut lo = kk.clone();
    let mut hi = a.clone() + kk;
    while lo < hi {
        let mid = (lo.clone() + hi.clone() + T::one()) / T::from_u8(2).unwrap();
        if choose(&mid, k) <= *a {
            lo = mid;
        } else {
            hi = mid - T::one();
        }
    }
    lo
}

/// Macaulay's condition: `g_0 = 1`, `g_i >= 0` and `g_{i+1} <= g_i^{<i>}` for
/// `i >= 1`. Once an entry is zero all later entries must be zero.
pub fn is_m_sequence<T: Int>(g: &[T]) -> bool {
    if g.first().is_none_or(|g0| !g0.is_one()) || g.iter().any(|x| x.is_negative()) {
        return false;
    }
    (1..g.len().saturating_sub(1))
        .all(|i| g[i + 1] <= macaulay_pseudopower(&g[i], i as u32).expect("arguments are valid"))
}

/// Outcome of solving `(1, x) · M_d = (1, f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GSolution<T: Int> {
    Integral(GVec<T>),
    /// On the Dehn-Sommerville subspace but with fractional coordinates.
    NotInLattice(Vec<Rational<T>>),
    NotInSubspace,
}

/// The McMullen matrix `M_d` (the triangularized `M̃_d`).
pub fn mcmullen_matrix<T: Int>(d: usize) -> Result<IntegerMatrix<T>> {
    Ok(triangularize_by_row_subtraction(&build_m_matrix(d)?))
}

pub fn f_to_g<T: Int>(f: &FVec<T>) -> Result<GSolution<T>> {
    let d = f.dim();
    if d < 2 {
        return Err(Error::InvalidDimension {
            got: d,
            reason: "g-vectors need d >= 2",
        });
    }
    let m = mcmullen_matrix::<T>(d)?;
    Ok(match solve_row_combination(f.extend().entries(), &m)? {
        RowSolution::Integral(g) => GSolution::Integral(GVec::new(d, g)?),
        RowSolution::Fractional(q) => GSolution::NotInLattice(q),
        RowSolution::NotInRowSpace => GSolution::NotInSubspace,
    })
}

/// `(g) · M_d` with the leading 1 dropped.
pub fn g_to_f<T: Int>(g: &GVec<T>) -> FVec<T> {
    let m = mcmullen_matrix::<T>(g.dim()).expect("d >= 2");
    let ext = m
        .left_multiply(g.entries())
        .expect("g has floor(d/2)+1 entries");
    FVec::from_raw(ext[1..].to_vec()).expect("d >= 2")
}

/// g-theorem: `f` is the f-vector of a simplicial `d`-polytope iff its
/// g-vector is integral and an M-sequence.
pub fn simplicial_member<T: Int>(f: &FVec<T>) -> bool {
    simplicial_violation(f).is_none()
}

pub fn simplicial_violation<T: Int>(f: &FVec<T>) -> Option<String> {
    match f_to_g(f) {
        Err(e) => Some(e.to_string()),
        Ok(GSolution::NotInSubspace) => Some("not on the Dehn-Sommerville subspace".into()),
        Ok(GSolution::NotInLattice(_)) => Some("g-vector is not integral".into()),
        Ok(GSolution::Integral(g)) if !is_m_sequence(g.entries()) => {
            Some(format!("g-vector {g} is not an M-sequence"))
        }
        Ok(GSolution::Integral(_)) => None,
    }
}
