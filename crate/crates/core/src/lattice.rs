//! Integer matrices of small-polytope f-vectors and exact membership in the
//! affine lattices they span.

use std::fmt;

use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::constructions::{pkd_fvector, skd_fvector};
use crate::error::{Error, Result};
use crate::fvec::{euler_defect, ExtendedFVec, FVec};
use crate::scalar::{Int, Rational};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Int> IntegerMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            entries.extend(r);
        }
        Self::new(n, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Column of the first nonzero entry of each row, if the matrix is in row
    /// echelon form with strictly increasing pivots.
    pub fn echelon_pivots(&self) -> Option<Vec<usize>> {
        let mut pivots = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let p = self.row(r).iter().position(|e| !e.is_zero())?;
            if pivots.last().is_some_and(|&q| q >= p) {
                return None;
            }
            pivots.push(p);
        }
        Some(pivots)
    }

    /// `(c_0, ..., c_{rows-1}) · self`
    pub fn left_multiply(&self, coeffs: &[T]) -> Result<Vec<T>> {
        if coeffs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: coeffs.len(),
            });
        }
        let mut out = vec![T::zero(); self.cols];
        for (r, c) in coeffs.iter().enumerate() {
            for (o, e) in out.iter_mut().zip(self.row(r)) {
                *o = o.clone() + c.clone() * e.clone();
            }
        }
        Ok(out)
    }
}

impl<T: Int> fmt::Display for IntegerMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|e| format!("{e:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// JSON form: array of row arrays.
impl<T: Int> Serialize for IntegerMatrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Row<'a, T>(&'a [T]);
        impl<T: Int> Serialize for Row<'_, T> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                crate::fvec::serialize_ints(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            seq.serialize_element(&Row(self.row(r)))?;
        }
        seq.end()
    }
}

fn assert_leading_ones<T: Int>(m: &IntegerMatrix<T>) -> Result<()> {
    for r in 0..m.rows() {
        if !m.get(r, 0).is_one() {
            return Err(Error::Internal(format!("row {r} does not start with 1")));
        }
    }
    Ok(())
}

/// `Ñ_d`: rows are the extended f-vectors of `P_k(d)`, `k = 0..d-1`.
pub fn build_n_matrix<T: Int>(d: usize) -> Result<IntegerMatrix<T>> {
    if d < 2 {
        return Err(Error::InvalidDimension {
            got: d,
            reason: "the N matrix needs d >= 2",
        });
    }
    let rows = (0..d)
        .map(|k| pkd_fvector::<T>(k, d).map(|v| v.entries().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let m = IntegerMatrix::from_rows(rows)?;
    assert_leading_ones(&m)?;
    Ok(m)
}

/// `M̃_d`: rows are the extended f-vectors of `S_k(d)`, `k = 0..floor(d/2)`.
pub fn build_m_matrix<T: Int>(d: usize) -> Result<IntegerMatrix<T>> {
    if d < 2 {
        return Err(Error::InvalidDimension {
            got: d,
            reason: "the M matrix needs d >= 2",
        });
    }
    let rows = (0..=d / 2)
        .map(|k| skd_fvector::<T>(k, d).map(|v| v.entries().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let m = IntegerMatrix::from_rows(rows)?;
    assert_leading_ones(&m)?;
    Ok(m)
}

/// One bottom-up pass `row_k -= row_{k-1}` for `k = last..1`. Unimodular.
pub fn triangularize_by_row_subtraction<T: Int>(m: &IntegerMatrix<T>) -> IntegerMatrix<T> {
    let mut out = m.clone();
    for r in (1..m.rows()).rev() {
        for c in 0..m.cols() {
            out.entries[r * m.cols + c] = m.get(r, c).clone() - m.get(r - 1, c).clone();
        }
    }
    out
}

/// Outcome of solving `c · B = v` for the row coefficients `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowSolution<T: Int> {
    Integral(Vec<T>),
    Fractional(Vec<Rational<T>>),
    NotInRowSpace,
}

/// Solves `c · B = v` by forward substitution along the pivots of an echelon
/// matrix `B`, over exact rationals.
pub fn solve_row_combination<T: Int>(
    v: &[T],
    echelon: &IntegerMatrix<T>,
) -> Result<RowSolution<T>> {
    if v.len() != echelon.cols() {
        return Err(Error::DimensionMismatch {
            expected: echelon.cols(),
            got: v.len(),
        });
    }
    let pivots = echelon
        .echelon_pivots()
        .ok_or_else(|| Error::Internal("basis is not in row echelon form".into()))?;
    let mut coeffs: Vec<Rational<T>> = Vec::with_capacity(pivots.len());
    for (r, &p) in pivots.iter().enumerate() {
        let mut acc = Rational::from_integer(v[p].clone());
        for (s, c) in coeffs.iter().enumerate() {
            acc = acc - c.clone() * Rational::from_integer(echelon.get(s, p).clone());
        }
        coeffs.push(acc / Rational::from_integer(echelon.get(r, p).clone()));
    }
    for (col, target) in v.iter().enumerate() {
        let mut acc = Rational::<T>::zero();
        for (s, c) in coeffs.iter().enumerate() {
            acc = acc + c.clone() * Rational::from_integer(echelon.get(s, col).clone());
        }
        if acc != Rational::from_integer(target.clone()) {
            return Ok(RowSolution::NotInRowSpace);
        }
    }
    if coeffs.iter().all(|c| c.is_integer()) {
        Ok(RowSolution::Integral(
            coeffs.into_iter().map(|c| c.to_integer()).collect(),
        ))
    } else {
        Ok(RowSolution::Fractional(coeffs))
    }
}

/// True iff `v` is an integer combination of the rows of `basis`. With every
/// row of the untriangularized basis starting at 1, coordinate 0 forces the
/// coefficient sum to 1, so this decides affine-lattice membership.
///
/// A basis that is not already in echelon form is triangularized first.
pub fn affine_lattice_member<T: Int>(
    v: &ExtendedFVec<T>,
    basis: &IntegerMatrix<T>,
) -> Result<bool> {
    if v.entries().len() != basis.cols() {
        return Err(Error::DimensionMismatch {
            expected: basis.cols(),
            got: v.entries().len(),
        });
    }
    let tri;
    let echelon = if basis.echelon_pivots().is_some() {
        basis
    } else {
        tri = triangularize_by_row_subtraction(basis);
        &tri
    };
    Ok(matches!(
        solve_row_combination(v.entries(), echelon)?,
        RowSolution::Integral(_)
    ))
}

/// Lattice spanned by all f-vectors of `d`-polytopes: the integer points of
/// the Euler hyperplane.
pub fn euler_lattice_member<T: Int>(f: &FVec<T>) -> bool {
    euler_defect(f).is_zero()
}

/// Lattice spanned by the f-vectors of simplicial `d`-polytopes: integer
/// points of the Dehn-Sommerville subspace, decided through `M_d`.
pub fn ds_lattice_member<T: Int>(f: &FVec<T>) -> bool {
    if f.dim() < 2 {
        return false;
    }
    let m = triangularize_by_row_subtraction(&build_m_matrix::<T>(f.dim()).expect("d >= 2"));
    matches!(
        solve_row_combination(f.extend().entries(), &m).expect("widths agree"),
        RowSolution::Integral(_)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fvec::binomial;
    use num_bigint::BigInt;

    fn mat(rows: &[&[i64]]) -> IntegerMatrix<BigInt> {
        IntegerMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn ext(s: &str) -> ExtendedFVec<BigInt> {
        ExtendedFVec::new(crate::fvec::parse_integer_list(s).unwrap()).unwrap()
    }

    fn v(s: &str) -> FVec<BigInt> {
        s.parse().unwrap()
    }

    #[test]
    fn n_matrix_examples() {
        let n3 = build_n_matrix::<BigInt>(3).unwrap();
        assert_eq!(n3, mat(&[&[1, 4, 6, 4], &[1, 5, 8, 5], &[1, 5, 9, 6]]));
        assert_eq!(
            build_n_matrix::<BigInt>(2).unwrap(),
            mat(&[&[1, 3, 3], &[1, 4, 4]])
        );
        assert_eq!(
            build_n_matrix::<BigInt>(4).unwrap().row(0),
            mat(&[&[1, 5, 10, 10, 5]]).row(0)
        );
        assert!(build_n_matrix::<BigInt>(1).is_err());
        assert_eq!(
            triangularize_by_row_subtraction(&n3),
            mat(&[&[1, 4, 6, 4], &[0, 1, 2, 1], &[0, 0, 1, 1]])
        );
    }

    #[test]
    fn m_matrix_examples() {
        let m4 = build_m_matrix::<BigInt>(4).unwrap();
        assert_eq!(
            m4,
            mat(&[&[1, 5, 10, 10, 5], &[1, 6, 14, 16, 8], &[1, 6, 15, 18, 9]])
        );
        assert_eq!(
            build_m_matrix::<BigInt>(2).unwrap(),
            mat(&[&[1, 3, 3], &[1, 4, 4]])
        );
        assert_eq!(
            triangularize_by_row_subtraction(&m4),
            mat(&[&[1, 5, 10, 10, 5], &[0, 1, 4, 6, 3], &[0, 0, 1, 2, 1]])
        );
    }

    #[test]
    fn single_row_is_unchanged() {
        let m = mat(&[&[1, 2, 3]]);
        assert_eq!(triangularize_by_row_subtraction(&m), m);
    }

    #[test]
    fn triangular_n_matches_closed_form() {
        for d in 2..=10usize {
            let n = triangularize_by_row_subtraction(&build_n_matrix::<i64>(d).unwrap());
            assert_eq!(n.echelon_pivots().unwrap(), (0..d).collect::<Vec<_>>());
            for k in 1..d {
                assert_eq!(*n.get(k, k), 1);
                for col in 0..=d {
                    let i = col as i64 - 1;
                    let expect = binomial::<i64>((d - k) as i64, d as i64 - i - 1);
                    assert_eq!(*n.get(k, col), expect, "d={d} k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn triangular_m_matches_closed_form() {
        for d in 2..=10usize {
            let m = triangularize_by_row_subtraction(&build_m_matrix::<i64>(d).unwrap());
            for k in 1..=d / 2 {
                assert_eq!(*m.get(k, k), 1);
                for col in 0..=d {
                    let (i, k, d) = (col as i64 - 1, k as i64, d as i64);
                    let expect =
                        -binomial::<i64>(k, i - d + k) + binomial::<i64>(d - k + 1, i - k + 1);
                    assert_eq!(*m.get(k as usize, col), expect, "d={d} k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn affine_membership_examples() {
        let n3 = triangularize_by_row_subtraction(&build_n_matrix::<BigInt>(3).unwrap());
        assert!(affine_lattice_member(&ext("(1,6,9,5)"), &n3).unwrap());
        assert!(!affine_lattice_member(&ext("(1,4,7,4)"), &n3).unwrap());
        // The raw matrix is triangularized on the fly.
        assert!(affine_lattice_member(&ext("(1,6,9,5)"), &build_n_matrix(3).unwrap()).unwrap());
        let m4 = triangularize_by_row_subtraction(&build_m_matrix::<BigInt>(4).unwrap());
        assert!(affine_lattice_member(&ext("(1,5,10,10,5)"), &m4).unwrap());
        assert!(matches!(
            affine_lattice_member(&ext("(1,5,10,10)"), &m4),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn euler_and_ds_examples() {
        assert!(euler_lattice_member(&v("(6,15,18,9)")));
        assert!(euler_lattice_member(&v("(9,21,22,10)")));
        assert!(!euler_lattice_member(&v("(5,8,6)")));
        assert!(ds_lattice_member(&v("(6,15,18,9)")));
        assert!(!ds_lattice_member(&v("(6,11,7)")));
        assert!(ds_lattice_member(&v("(6,12,8)")));
    }

    #[test]
    fn fractional_and_out_of_space_solutions() {
        let m = mat(&[&[1, 0, 0], &[0, 2, 2]]);
        let r = solve_row_combination(&[1, 1, 1].map(BigInt::from), &m).unwrap();
        assert!(matches!(r, RowSolution::Fractional(_)));
        let r = solve_row_combination(&[1, 1, 2].map(BigInt::from), &m).unwrap();
        assert_eq!(r, RowSolution::NotInRowSpace);
    }

    #[test]
    fn euler_membership_agrees_with_n_matrix() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut hits = 0;
        for _ in 0..10_000 {
            let d = rng.gen_range(2..=6usize);
            let mut e: Vec<i64> = (0..d).map(|_| rng.gen_range(1..=100)).collect();
            // Push a third of the samples onto the hyperplane.
            if rng.gen_ratio(1, 3) {
                let f = FVec::from_raw(e.clone()).unwrap();
                let fix = euler_defect(&f);
                let last = d - 1;
                e[last] -= if last % 2 == 0 { fix } else { -fix };
            }
            let f = FVec::from_raw(e).unwrap();
            let n = build_n_matrix::<i64>(d).unwrap();
            let a = euler_lattice_member(&f);
            let b = affine_lattice_member(&f.extend(), &n).unwrap();
            assert_eq!(a, b, "{f}");
            hits += usize::from(a);
        }
        assert!(hits > 1000);
    }
}
