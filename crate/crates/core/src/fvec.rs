//! f-vectors, the Euler relation, duality and the three reduced additions.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{int, Int};

/// Binomial coefficient with the convention `C(n, k) = 0` outside `0 <= k <= n`.
pub fn binomial<T: Int>(n: i64, k: i64) -> T {
    if n < 0 || k < 0 || k > n {
        return T::zero();
    }
    choose(&int::<T>(n), k.min(n - k) as u64)
}

/// `C(n, k)` for a scalar upper argument; zero when `n < k` or `n < 0`.
pub fn choose<T: Int>(n: &T, k: u64) -> T {
    if n.is_negative() || *n < T::from_u64(k).expect("k fits the scalar type") {
        return T::zero();
    }
    let mut acc = T::one();
    for j in 0..k {
        let jj = T::from_u64(j).expect("k fits the scalar type");
        acc = acc * (n.clone() - jj.clone()) / (jj + T::one());
    }
    acc
}

/// Face numbers `(f_0, ..., f_{d-1})` of a `d`-dimensional object.
///
/// [`FVec::new`] enforces the f-vector shape (every entry at least one).
/// [`FVec::from_raw`] accepts any integer vector of positive length; reduced
/// sums, lattice points and base vectors live there.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FVec<T> {
    entries: Vec<T>,
}

impl<T: Int> FVec<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        let v = Self::from_raw(entries)?;
        if let Some(i) = v.entries.iter().position(|e| *e < T::one()) {
            return Err(Error::InvalidVector(format!(
                "entry f_{i} = {} of {v} is below 1",
                v.entries[i]
            )));
        }
        Ok(v)
    }

    pub fn from_raw(entries: Vec<T>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidDimension {
                got: 0,
                reason: "an f-vector needs at least one entry",
            });
        }
        Ok(Self { entries })
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| int(e)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn get(&self, i: usize) -> &T {
        &self.entries[i]
    }

    /// All entries are at least one.
    pub fn is_positive(&self) -> bool {
        self.entries.iter().all(|e| *e >= T::one())
    }

    /// `f_0 - f_1 + f_2 - ...`
    pub fn alternating_sum(&self) -> T {
        self.entries
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (i, e)| {
                if i % 2 == 0 {
                    acc + e.clone()
                } else {
                    acc - e.clone()
                }
            })
    }

    pub fn extend(&self) -> ExtendedFVec<T> {
        let mut entries = Vec::with_capacity(self.dim() + 1);
        entries.push(T::one());
        entries.extend(self.entries.iter().cloned());
        ExtendedFVec { entries }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.zip_with(other, |a, b| a.clone() + b.clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.zip_with(other, |a, b| a.clone() - b.clone()))
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.entries.iter().zip(&other.entries).all(|(a, b)| a >= b)
    }

    pub fn map<U: Int>(&self, f: impl Fn(&T) -> U) -> FVec<U> {
        FVec {
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

impl<T: Int> fmt::Display for FVec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, entries: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str(")")
}

/// Parses `"(a,b,c)"`, `"[a, b, c]"` or a bare `"a,b,c"` into integers.
pub fn parse_integer_list<T: Int>(s: &str) -> Result<Vec<T>> {
    let t = s.trim();
    let inner = match (t.chars().next(), t.chars().last()) {
        (Some('('), Some(')')) | (Some('['), Some(']')) => &t[1..t.len() - 1],
        _ => t,
    };
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            T::from_str_radix(tok, 10)
                .map_err(|_| Error::Parse(format!("`{tok}` is not an integer")))
        })
        .collect()
}

impl<T: Int> FromStr for FVec<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_integer_list(s)?)
    }
}

/// `(1, f_0, ..., f_{d-1})`: the f-vector with the empty face counted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedFVec<T> {
    entries: Vec<T>,
}

impl<T: Int> ExtendedFVec<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidDimension {
                got: entries.len().saturating_sub(1),
                reason: "an extended f-vector needs at least two entries",
            });
        }
        if !entries[0].is_one() {
            return Err(Error::InvalidVector(format!(
                "leading entry is {}, expected 1",
                entries[0]
            )));
        }
        Ok(Self { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    /// Drops the leading 1.
    pub fn truncate(&self) -> FVec<T> {
        FVec {
            entries: self.entries[1..].to_vec(),
        }
    }
}

impl<T: Int> fmt::Display for ExtendedFVec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

/// `f(Δ_d)`, a row of Pascal's triangle.
pub fn simplex_fvector<T: Int>(d: usize) -> Result<FVec<T>> {
    if d < 1 {
        return Err(Error::InvalidDimension {
            got: d,
            reason: "the simplex needs d >= 1",
        });
    }
    Ok(FVec {
        entries: (0..d)
            .map(|i| binomial(d as i64 + 1, i as i64 + 1))
            .collect(),
    })
}

/// Alternating sum minus `1 - (-1)^d`; zero exactly on the Euler hyperplane.
pub fn euler_defect<T: Int>(f: &FVec<T>) -> T {
    f.alternating_sum() - euler_constant(f.dim())
}

pub(crate) fn euler_constant<T: Int>(d: usize) -> T {
    if d.is_multiple_of(2) {
        T::zero()
    } else {
        int(2)
    }
}

/// Entry reversal, the f-vector of the polar polytope.
pub fn dual_fvector<T: Int>(f: &FVec<T>) -> FVec<T> {
    FVec {
        entries: f.entries.iter().rev().cloned().collect(),
    }
}

/// `f >= f(Δ_d)` componentwise.
pub fn trivial_lower_bound_holds<T: Int>(f: &FVec<T>) -> bool {
    let simplex = simplex_fvector::<T>(f.dim()).expect("dimension is positive");
    f.dominates(&simplex)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reduction {
    /// `x ⊞ y = x + y - f(Δ_d)`
    Simplex,
    /// `x ⊞′ y = x + y - (f(Δ_{d-1}), 2)`
    SimplexFacetSphere,
    /// `x ⊞″ y = x + y - (1, 0, ..., 0, 1)`
    VertexFacet,
}

impl Reduction {
    pub const ALL: [Reduction; 3] = [
        Reduction::Simplex,
        Reduction::SimplexFacetSphere,
        Reduction::VertexFacet,
    ];

    /// Name used in reports and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Reduction::Simplex => "box",
            Reduction::SimplexFacetSphere => "box-prime",
            Reduction::VertexFacet => "box-dblprime",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown reduced addition `{s}`")))
    }
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The vector subtracted by one of the reduced additions in dimension `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionBase<T> {
    variant: Reduction,
    vector: FVec<T>,
}

impl<T: Int> ReductionBase<T> {
    pub fn new(variant: Reduction, d: usize) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidDimension {
                got: d,
                reason: "reduced additions need d >= 1",
            });
        }
        let entries: Vec<T> = match variant {
            Reduction::Simplex => simplex_fvector::<T>(d)?.into_entries(),
            Reduction::SimplexFacetSphere => (0..d)
                .map(|i| {
                    if i + 1 == d {
                        int(2)
                    } else {
                        binomial(d as i64, i as i64 + 1)
                    }
                })
                .collect(),
            Reduction::VertexFacet => (0..d)
                .map(|i| {
                    let ones = usize::from(i == 0) + usize::from(i + 1 == d);
                    T::from_usize_exact(ones)
                })
                .collect(),
        };
        Ok(Self {
            variant,
            vector: FVec { entries },
        })
    }

    pub fn variant(&self) -> Reduction {
        self.variant
    }

    pub fn dim(&self) -> usize {
        self.vector.dim()
    }

    pub fn vector(&self) -> &FVec<T> {
        &self.vector
    }
}

/// Result of a reduced addition. `candidate` is false when some entry
/// dropped below one, so the sum cannot be an f-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSum<T> {
    pub vector: FVec<T>,
    pub candidate: bool,
}

pub fn reduced_add<T: Int>(
    x: &FVec<T>,
    y: &FVec<T>,
    base: &ReductionBase<T>,
) -> Result<ReducedSum<T>> {
    check_dim(base.dim(), x.dim())?;
    check_dim(base.dim(), y.dim())?;
    let vector = x.add(y)?.sub(base.vector())?;
    let candidate = vector.is_positive();
    Ok(ReducedSum { vector, candidate })
}

/// Integers serialize as JSON numbers when they fit in 128 bits, as decimal
/// strings beyond that.
pub(crate) fn serialize_int<T: Int, S: Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i128() {
        Some(x) if i64::try_from(x).is_ok() => s.serialize_i64(x as i64),
        Some(x) => s.serialize_i128(x),
        None => s.serialize_str(&v.to_string()),
    }
}

struct IntVisitor<T>(std::marker::PhantomData<T>);

impl<T: Int> Visitor<'_> for IntVisitor<T> {
    type Value = T;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<T, E> {
        T::from_i64(v).ok_or_else(|| E::custom("integer out of range"))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<T, E> {
        T::from_u64(v).ok_or_else(|| E::custom("integer out of range"))
    }

    fn visit_i128<E: de::Error>(self, v: i128) -> std::result::Result<T, E> {
        T::from_i128(v).ok_or_else(|| E::custom("integer out of range"))
    }

    fn visit_u128<E: de::Error>(self, v: u128) -> std::result::Result<T, E> {
        T::from_u128(v).ok_or_else(|| E::custom("integer out of range"))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<T, E> {
        T::from_str_radix(v.trim(), 10).map_err(|_| E::custom(format!("`{v}` is not an integer")))
    }
}

pub(crate) struct IntSeed<T>(pub std::marker::PhantomData<T>);

impl<'de, T: Int> de::DeserializeSeed<'de> for IntSeed<T> {
    type Value = T;

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> std::result::Result<T, D::Error> {
        d.deserialize_any(IntVisitor(std::marker::PhantomData))
    }
}

pub(crate) fn serialize_ints<T: Int, S: Serializer>(
    v: &[T],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    struct One<'a, T>(&'a T);
    impl<T: Int> Serialize for One<'_, T> {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            serialize_int(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for e in v {
        seq.serialize_element(&One(e))?;
    }
    seq.end()
}

pub(crate) fn deserialize_ints<'de, T: Int, D: Deserializer<'de>>(
    d: D,
) -> std::result::Result<Vec<T>, D::Error> {
    struct SeqVisitor<T>(std::marker::PhantomData<T>);
    impl<'de, T: Int> Visitor<'de> for SeqVisitor<T> {
        type Value = Vec<T>;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("an array of integers")
        }

        fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Vec<T>, A::Error> {
            let mut out = Vec::new();
            while let Some(v) = seq.next_element_seed(IntSeed(std::marker::PhantomData))? {
                out.push(v);
            }
            Ok(out)
        }
    }
    d.deserialize_seq(SeqVisitor(std::marker::PhantomData))
}

impl<T: Int> Serialize for FVec<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_ints(&self.entries, s)
    }
}

impl<'de, T: Int> Deserialize<'de> for FVec<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = deserialize_ints(d)?;
        FVec::from_raw(entries).map_err(de::Error::custom)
    }
}

impl<T: Int> Serialize for ExtendedFVec<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_ints(&self.entries, s)
    }
}

impl<'de, T: Int> Deserialize<'de> for ExtendedFVec<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = deserialize_ints(d)?;
        ExtendedFVec::new(entries).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type V = FVec<BigInt>;

    fn v(s: &str) -> V {
        s.parse().unwrap()
    }

    fn base(r: Reduction, d: usize) -> ReductionBase<BigInt> {
        ReductionBase::new(r, d).unwrap()
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial::<i64>(5, 2), 10);
        assert_eq!(binomial::<i64>(3, -1), 0);
        assert_eq!(binomial::<i64>(2, 3), 0);
        assert_eq!(binomial::<i64>(-1, 0), 0);
        assert_eq!(binomial::<i64>(0, 0), 1);
        assert_eq!(
            binomial::<BigInt>(60, 30),
            "118264581564861424".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn simplex_vectors() {
        assert_eq!(simplex_fvector::<BigInt>(3).unwrap(), v("(4,6,4)"));
        assert_eq!(simplex_fvector::<BigInt>(4).unwrap(), v("(5,10,10,5)"));
        assert_eq!(simplex_fvector::<BigInt>(1).unwrap(), v("(2)"));
        assert!(matches!(
            simplex_fvector::<BigInt>(0),
            Err(Error::InvalidDimension { .. })
        ));
    }

    #[test]
    fn euler_defect_examples() {
        assert_eq!(euler_defect(&v("(4,6,4)")), BigInt::from(0));
        assert_eq!(euler_defect(&v("(9,21,22,10)")), BigInt::from(0));
        assert_eq!(euler_defect(&v("(4,6,5)")), BigInt::from(1));
    }

    #[test]
    fn duality_examples() {
        assert_eq!(dual_fvector(&v("(8,16,14,6)")), v("(6,14,16,8)"));
        assert_eq!(dual_fvector(&v("(4,6,4)")), v("(4,6,4)"));
        assert_eq!(dual_fvector(&v("(6,9,5)")), v("(5,9,6)"));
    }

    #[test]
    fn reduced_add_examples() {
        let s = reduced_add(
            &v("(8,16,14,6)"),
            &v("(6,15,18,9)"),
            &base(Reduction::Simplex, 4),
        )
        .unwrap();
        assert_eq!(s.vector, v("(9,21,22,10)"));
        assert!(s.candidate);
        let s = reduced_add(
            &v("(5,10,10,5)"),
            &v("(9,18,15,6)"),
            &base(Reduction::SimplexFacetSphere, 4),
        )
        .unwrap();
        assert_eq!(s.vector, v("(10,22,21,9)"));
        let s = reduced_add(
            &v("(6,11,7)"),
            &v("(4,6,4)"),
            &base(Reduction::VertexFacet, 3),
        )
        .unwrap();
        assert_eq!(s.vector, v("(9,17,10)"));
        let s = reduced_add(&v("(4,6,4)"), &v("(4,6,4)"), &base(Reduction::Simplex, 3)).unwrap();
        assert_eq!(s.vector, v("(4,6,4)"));
    }

    #[test]
    fn reduced_add_flags_and_errors() {
        let x = V::from_raw(vec![1.into(), 1.into(), 1.into()]).unwrap();
        let s = reduced_add(&x, &x, &base(Reduction::Simplex, 3)).unwrap();
        assert!(!s.candidate);
        assert_eq!(s.vector.entries()[0], BigInt::from(-2));
        let err = reduced_add(
            &v("(4,6,4)"),
            &v("(5,10,10,5)"),
            &base(Reduction::Simplex, 3),
        );
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn base_vectors() {
        assert_eq!(
            base(Reduction::SimplexFacetSphere, 4).vector(),
            &v("(4,6,4,2)")
        );
        assert_eq!(
            base(Reduction::VertexFacet, 4).vector(),
            &V::from_raw([1, 0, 0, 1].map(BigInt::from).to_vec()).unwrap()
        );
        assert_eq!(base(Reduction::Simplex, 3).vector(), &v("(4,6,4)"));
    }

    #[test]
    fn base_vectors_lie_on_euler_hyperplane() {
        for d in 2..=10 {
            for r in Reduction::ALL {
                assert_eq!(
                    euler_defect(base(r, d).vector()),
                    BigInt::from(0),
                    "{r} d={d}"
                );
            }
        }
    }

    #[test]
    fn trivial_lower_bound_examples() {
        assert!(trivial_lower_bound_holds(&v("(4,6,4)")));
        assert!(trivial_lower_bound_holds(&v("(5,8,5)")));
        assert!(!trivial_lower_bound_holds(&v("(3,6,4)")));
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(v("[4, 6, 4]"), v("(4,6,4)"));
        assert_eq!(v("(4,6,4)").to_string(), "(4,6,4)");
        assert!("(4,x,4)".parse::<V>().is_err());
        assert!("(0,6,4)".parse::<V>().is_err());
        let json = serde_json::to_string(&v("(9,21,22,10)")).unwrap();
        assert_eq!(json, "[9,21,22,10]");
        let big: V = V::new(vec![BigInt::from(10u8).pow(40)]).unwrap();
        let back: V = serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }

    fn arb_vec(d: usize) -> impl Strategy<Value = FVec<i64>> {
        proptest::collection::vec(-1000i64..1000, d).prop_map(|e| FVec::from_raw(e).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (FVec<i64>, FVec<i64>, FVec<i64>, usize)> {
        (1usize..=10).prop_flat_map(|d| (arb_vec(d), arb_vec(d), arb_vec(d), Just(d)))
    }

    proptest! {
        #[test]
        fn reduced_add_is_commutative_and_associative((x, y, z, d) in arb_triple()) {
            for r in Reduction::ALL {
                let b = ReductionBase::<i64>::new(r, d).unwrap();
                let xy = reduced_add(&x, &y, &b).unwrap().vector;
                let yx = reduced_add(&y, &x, &b).unwrap().vector;
                prop_assert_eq!(&xy, &yx);
                let l = reduced_add(&xy, &z, &b).unwrap().vector;
                let yz = reduced_add(&y, &z, &b).unwrap().vector;
                let rr = reduced_add(&x, &yz, &b).unwrap().vector;
                prop_assert_eq!(l, rr);
            }
        }

        #[test]
        fn simplex_is_neutral((x, _y, _z, d) in arb_triple()) {
            let b = ReductionBase::<i64>::new(Reduction::Simplex, d).unwrap();
            let s = simplex_fvector::<i64>(d).unwrap();
            prop_assert_eq!(&reduced_add(&x, &s, &b).unwrap().vector, &x);
            prop_assert_eq!(&reduced_add(&s, &x, &b).unwrap().vector, &x);
        }

        #[test]
        fn euler_defect_is_additive((x, y, _z, d) in arb_triple()) {
            for r in Reduction::ALL {
                let b = ReductionBase::<i64>::new(r, d).unwrap();
                let s = reduced_add(&x, &y, &b).unwrap().vector;
                prop_assert_eq!(euler_defect(&s), euler_defect(&x) + euler_defect(&y));
            }
        }

        #[test]
        fn duality_is_an_involution((x, _y, _z, _d) in arb_triple()) {
            prop_assert_eq!(&dual_fvector(&dual_fvector(&x)), &x);
        }

        #[test]
        fn euler_defect_is_dual_invariant_on_the_hyperplane((x, _y, _z, d) in arb_triple()) {
            // Reversal maps the hyperplane to itself; off it the defect may
            // change sign in even dimension.
            let mut e = x.entries().to_vec();
            let fix = euler_defect(&x);
            let sign = if (d - 1) % 2 == 0 { 1 } else { -1 };
            e[d - 1] -= sign * fix;
            let on = FVec::from_raw(e).unwrap();
            prop_assert_eq!(euler_defect(&on), 0);
            prop_assert_eq!(euler_defect(&dual_fvector(&on)), 0);
            if d % 2 == 1 {
                prop_assert_eq!(euler_defect(&dual_fvector(&x)), euler_defect(&x));
            }
        }
    }
}
