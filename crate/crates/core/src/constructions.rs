//! Closed-form f-vectors of named polytope families and of the standard
//! construction operators.
//!
//! The operators work on *complete* face vectors `(f_-1, f_0, ..., f_d)` with
//! `f_-1 = f_d = 1`, which turns joins, products and direct sums into
//! convolutions.

use crate::error::{Error, Result};
use crate::fvec::{binomial, ExtendedFVec, FVec};
use crate::scalar::{int, Int};

/// Parameters of `P^m_{k,l} = Δ_{m-1} * (Δ_k ⊕ Δ_l)`, a `(k+l+m)`-polytope
/// with at most `d+2` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PklmParams {
    pub k: usize,
    pub l: usize,
    pub m: usize,
}

impl PklmParams {
    pub fn new(k: usize, l: usize, m: usize) -> Result<Self> {
        if k + l + m < 1 {
            return Err(Error::OutOfRange("k + l + m must be at least 1".into()));
        }
        Ok(Self { k, l, m })
    }

    pub fn dim(&self) -> usize {
        self.k + self.l + self.m
    }
}

/// `f_i = C(k+l+m+2, i+1) - C(l+m+1, i-k) - C(k+m+1, i-l) + C(m+1, i-k-l)`.
pub fn pklm_fvector<T: Int>(p: PklmParams) -> FVec<T> {
    let (k, l, m) = (p.k as i64, p.l as i64, p.m as i64);
    let entries = (0..p.dim() as i64)
        .map(|i| {
            binomial::<T>(k + l + m + 2, i + 1)
                - binomial::<T>(l + m + 1, i - k)
                - binomial::<T>(k + m + 1, i - l)
                + binomial::<T>(m + 1, i - k - l)
        })
        .collect();
    FVec::from_raw(entries).expect("dimension is positive")
}

/// Extended f-vector of `P_k(d) = P^{d-k-1}_{k,1}`.
pub fn pkd_fvector<T: Int>(k: usize, d: usize) -> Result<ExtendedFVec<T>> {
    if d < 2 {
        return Err(Error::InvalidDimension {
            got: d,
            reason: "P_k(d) needs d >= 2",
        });
    }
    if k >= d {
        return Err(Error::OutOfRange(format!(
            "P_k(d) needs 0 <= k <= d-1, got k={k}, d={d}"
        )));
    }
    let (k, d) = (k as i64, d as i64);
    let entries = (-1..d)
        .map(|i| binomial::<T>(d + 1, i + 1) + binomial::<T>(d, i) - binomial::<T>(d - k, d - i))
        .collect();
    ExtendedFVec::new(entries)
}

/// Extended f-vector of `S_k(d) = Δ_k ⊕ Δ_{d-k}`.
pub fn skd_fvector<T: Int>(k: usize, d: usize) -> Result<ExtendedFVec<T>> {
    if d < 2 {
        return Err(Error::InvalidDimension {
            got: d,
            reason: "S_k(d) needs d >= 2",
        });
    }
    if k > d / 2 {
        return Err(Error::OutOfRange(format!(
            "S_k(d) needs 0 <= k <= floor(d/2), got k={k}, d={d}"
        )));
    }
    let (k, d) = (k as i64, d as i64);
    let entries = (-1..d)
        .map(|i| {
            binomial::<T>(d + 2, i + 1)
                - binomial::<T>(k + 1, i - d + k)
                - binomial::<T>(d - k + 1, i - k)
        })
        .collect();
    ExtendedFVec::new(entries)
}

/// `(1, f_0, ..., f_{d-1}, 1)`
fn complete<T: Int>(f: &FVec<T>) -> Vec<T> {
    let mut v = Vec::with_capacity(f.dim() + 2);
    v.push(T::one());
    v.extend(f.entries().iter().cloned());
    v.push(T::one());
    v
}

/// Convolution of complete face vectors; `out[a+b] += x[a]*y[b]`.
fn convolve<T: Int>(x: &[T], y: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); x.len() + y.len() - 1];
    for (a, xa) in x.iter().enumerate() {
        for (b, yb) in y.iter().enumerate() {
            out[a + b] = out[a + b].clone() + xa.clone() * yb.clone();
        }
    }
    out
}

fn from_complete<T: Int>(c: &[T]) -> FVec<T> {
    FVec::from_raw(c[1..c.len() - 1].to_vec()).expect("dimension is positive")
}

/// Complete face vector of the join. The shift by one in the index convention
/// makes this a plain convolution: the join of an `i`-face and a `j`-face has
/// dimension `i+j+1`, i.e. index `(i+1)+(j+1)`.
fn join_complete<T: Int>(x: &[T], y: &[T]) -> Vec<T> {
    convolve(x, y)
}

pub fn pyramid_fvector<T: Int>(f: &FVec<T>) -> FVec<T> {
    let point = [T::one(), T::one()];
    from_complete(&join_complete(&complete(f), &point))
}

pub fn join_fvector<T: Int>(f: &FVec<T>, g: &FVec<T>) -> FVec<T> {
    from_complete(&join_complete(&complete(f), &complete(g)))
}

/// Nonempty faces of `P × Q` are products of nonempty faces.
pub fn product_fvector<T: Int>(f: &FVec<T>, g: &FVec<T>) -> FVec<T> {
    let x = &complete(f)[1..];
    let y = &complete(g)[1..];
    let c = convolve(x, y);
    FVec::from_raw(c[..c.len() - 1].to_vec()).expect("dimension is positive")
}

/// Proper faces of `P ⊕ Q` are joins of proper faces (empty included).
pub fn direct_sum_fvector<T: Int>(f: &FVec<T>, g: &FVec<T>) -> FVec<T> {
    let cf = complete(f);
    let cg = complete(g);
    let c = convolve(&cf[..cf.len() - 1], &cg[..cg.len() - 1]);
    FVec::from_raw(c[1..].to_vec()).expect("dimension is positive")
}

/// `C_n * C_n`, the self-dual 5-polytope `(2n, n²+2n, 2n²+2, n²+2n, 2n)`.
pub fn join_polygons_fvector<T: Int>(n: u64) -> Result<FVec<T>> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("polygons need n >= 3, got {n}")));
    }
    let n = T::from_u64(n).expect("n fits the scalar type");
    let two = int::<T>(2);
    let sq = n.clone() * n.clone();
    let entries = vec![
        two.clone() * n.clone(),
        sq.clone() + two.clone() * n.clone(),
        two.clone() * sq.clone() + two.clone(),
        sq + two.clone() * n.clone(),
        two * n,
    ];
    FVec::from_raw(entries)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SteinitzMove {
    /// Stack a tetrahedron onto a triangle facet: `+ (1, 3, 2)`.
    StackTriangle,
    /// Cut off a simple vertex: `+ (2, 3, 1)`.
    TruncateSimpleVertex,
}

pub fn steinitz_move<T: Int>(f: &FVec<T>, mv: SteinitzMove) -> Result<FVec<T>> {
    if f.dim() != 3 {
        return Err(Error::InvalidDimension {
            got: f.dim(),
            reason: "Steinitz moves act on 3-polytopes",
        });
    }
    let delta: [i64; 3] = match mv {
        SteinitzMove::StackTriangle => [1, 3, 2],
        SteinitzMove::TruncateSimpleVertex => [2, 3, 1],
    };
    f.add(&FVec::from_raw(delta.iter().map(|&x| int(x)).collect())?)
}
