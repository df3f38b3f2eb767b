//! Exact linear algebra over rational fields: row reduction, nullspaces and
//! canonical subspace comparison.
//!
//! Everything here is generic over [`ExactField`], which is implemented for
//! `num_rational::Ratio<I>` (so both `Ratio<i64>` and `BigRational` work).
//! Floating point types are deliberately not fields here: subspace equality
//! is only decidable with exact arithmetic.

use std::fmt::{self, Debug, Display};
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Num;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A field with exact arithmetic.
pub trait ExactField: Clone + Debug + PartialEq + Num + Neg<Output = Self> {}

impl<I> ExactField for Ratio<I> where I: Clone + Debug + Integer + Neg<Output = I> {}

/// Sum of the entries of `w` indexed by `s`.
pub fn set_weight<T: ExactField>(w: &[T], s: VertexSet) -> T {
    s.iter().fold(T::zero(), |acc, v| acc + w[v].clone())
}

/// Characteristic vector of `s` in dimension `n`.
pub fn indicator<T: ExactField>(s: VertexSet, n: usize) -> Vec<T> {
    (0..n)
        .map(|v| if s.contains(v) { T::one() } else { T::zero() })
        .collect()
}

/// A dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: Vec<Vec<T>>,
    cols: usize,
}

impl<T: ExactField> Matrix<T> {
    /// A matrix with no rows and `cols` columns.
    pub fn new(cols: usize) -> Self {
        Matrix { rows: Vec::new(), cols }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::domain(format!(
                "row {i} has length {}, expected {cols}",
                r.len()
            )));
        }
        Ok(Matrix { rows, cols })
    }

    pub fn push_row(&mut self, row: Vec<T>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduced row echelon form with zero rows dropped, plus pivot columns.
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = T::one() / rows[r][c].clone();
            for x in rows[r].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (Matrix { rows, cols: self.cols }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Subspace<T> {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![T::zero(); self.cols];
                x[f] = T::one();
                for (row, &p) in reduced.rows.iter().zip(&pivots) {
                    x[p] = -row[f].clone();
                }
                x
            })
            .collect();
        Subspace::span(self.cols, vectors).expect("vectors have matching length")
    }

    /// `self * x`.
    pub fn apply(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.cols);
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }
}

impl<T: Debug> Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

/// A linear subspace of `T^ambient_dim`, stored as the RREF of a spanning set.
/// Two subspaces are equal exactly when their stored forms are identical.
#[derive(Clone, PartialEq)]
pub struct Subspace<T> {
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: ExactField> Subspace<T> {
    /// The span of `vectors`.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<T>>) -> Result<Self> {
        let (basis, pivots) = Matrix::from_rows(ambient_dim, vectors)?.rref();
        Ok(Subspace { basis, pivots })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { basis: Matrix::new(ambient_dim), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim)
            .map(|i| (0..ambient_dim).map(|j| if i == j { T::one() } else { T::zero() }).collect())
            .collect();
        Subspace {
            basis: Matrix { rows, cols: ambient_dim },
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Constant functions (dimension 1, or 0 in the zero-dimensional space).
    pub fn constants(ambient_dim: usize) -> Self {
        let v = vec![vec![T::one(); ambient_dim]];
        if ambient_dim == 0 {
            return Self::zero(0);
        }
        Self::span(ambient_dim, v).expect("length matches")
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    pub fn dim(&self) -> usize {
        self.basis.rows.len()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Whether `v` lies in the subspace.
    pub fn contains_vector(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ambient_dim(), "ambient dimension mismatch");
        let mut residual = v.to_vec();
        for (row, &p) in self.basis.rows.iter().zip(&self.pivots) {
            if residual[p].is_zero() {
                continue;
            }
            let factor = residual[p].clone();
            for (x, b) in residual.iter_mut().zip(row) {
                *x = x.clone() - factor.clone() * b.clone();
            }
        }
        residual.iter().all(|x| x.is_zero())
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::domain(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient_dim(),
                other.ambient_dim()
            )));
        }
        Ok(())
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis().iter().all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    /// `self + other`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let vectors = self.basis().iter().chain(other.basis()).cloned().collect();
        Self::span(self.ambient_dim(), vectors)
    }

    /// Image under the coordinate embedding `i -> coords[i]` into a space of
    /// dimension `ambient_dim`.
    pub fn embed(&self, coords: &[usize], ambient_dim: usize) -> Self {
        assert_eq!(coords.len(), self.ambient_dim());
        let vectors = self
            .basis()
            .iter()
            .map(|v| {
                let mut out = vec![T::zero(); ambient_dim];
                for (x, &c) in v.iter().zip(coords) {
                    out[c] = x.clone();
                }
                out
            })
            .collect();
        Self::span(ambient_dim, vectors).expect("lengths match")
    }
}

impl<T: Debug> Debug for Subspace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("ambient_dim", &self.basis.cols)
            .field("basis", &self.basis.rows)
            .finish()
    }
}

/// `"num/den"` with a positive denominator.
pub fn ratio_text<I: Clone + Integer + Display>(r: &Ratio<I>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

struct RationalRows<'a, I>(&'a [Vec<Ratio<I>>]);

impl<I: Clone + Integer + Display> Serialize for RationalRows<'_, I> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(
            self.0
                .iter()
                .map(|row| row.iter().map(ratio_text).collect::<Vec<_>>()),
        )
    }
}

impl<I> Serialize for Subspace<Ratio<I>>
where
    I: Clone + Integer + Display,
{
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Subspace", 4)?;
        st.serialize_field("ambient_dim", &self.basis.cols)?;
        st.serialize_field("dim", &self.basis.rows.len())?;
        st.serialize_field("pivots", &self.pivots)?;
        st.serialize_field("basis", &RationalRows(&self.basis.rows))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    fn q(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rational64> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rref_examples() {
        let (r, p) = m(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r.rows(), &[vec![q(1), q(2)]]);
        assert_eq!(p, vec![0]);

        let id = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));

        let (z, p) = m(&[&[0, 0], &[0, 0]]).rref();
        assert_eq!(z.row_count(), 0);
        assert!(p.is_empty());
    }

    #[test]
    fn nullspace_examples() {
        let ns = m(&[&[1, -1]]).nullspace();
        assert_eq!(ns.basis(), &[vec![q(1), q(1)]]);
        assert_eq!(Matrix::<Rational64>::new(3).nullspace().dim(), 3);
    }

    #[test]
    fn subspace_comparisons() {
        let a = Subspace::span(2, vec![vec![q(1), q(1)]]).unwrap();
        let b = Subspace::span(2, vec![vec![q(2), q(2)]]).unwrap();
        assert!(a.equals(&b).unwrap());

        let line = Subspace::span(2, vec![vec![q(1), q(0)]]).unwrap();
        let plane = Subspace::<Rational64>::full(2);
        assert!(plane.contains(&line).unwrap());
        assert!(!line.contains(&plane).unwrap());
        assert!(!plane.equals(&line).unwrap());
        assert!(plane.contains(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn serializes_as_fraction_strings() {
        let s = Subspace::span(2, vec![vec![q(2), Rational64::new(1, 3)]]).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"ambient_dim":2,"dim":1,"pivots":[0],"basis":[["1/1","1/6"]]}"#
        );
    }

    #[test]
    fn embed_and_sum() {
        let c = Subspace::<Rational64>::constants(2);
        let e = c.embed(&[0, 2], 3);
        assert_eq!(e.basis(), &[vec![q(1), q(0), q(1)]]);
        let s = e.sum(&Subspace::span(3, vec![vec![q(0), q(1), q(0)]]).unwrap()).unwrap();
        assert_eq!(s.dim(), 2);
    }
}
