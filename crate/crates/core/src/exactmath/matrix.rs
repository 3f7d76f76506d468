use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::Error;

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Output of [`rank_and_basis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub rref: RationalMatrix,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(RationalMatrix { rows: rows.len(), cols, entries: rows.concat() })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, Error> {
        let rows: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::Shape("inner dimensions differ".into()));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + &(a * other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        rank_and_basis(self).rank
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let e = rank_and_basis(&aug);
        if e.pivots.iter().copied().take(n).ne(0..n) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, e.rref.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Option<Rational> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let p = (c..n).find(|&r| !m.get(r, c).is_zero());
            let Some(p) = p else { return Some(Rational::zero()) };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            for r in c + 1..n {
                let f = m.get(r, c) / &piv;
                if !f.is_zero() {
                    for k in c..n {
                        let v = m.get(r, k) - &(&f * m.get(c, k));
                        m.set(r, k, v);
                    }
                }
            }
        }
        Some(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Plain Gaussian elimination to reduced row echelon form, taking the
/// first nonzero entry in each column as pivot.
pub fn rank_and_basis(m: &RationalMatrix) -> Echelon {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else { continue };
        a.swap_rows(p, row);
        let inv = a.get(row, col).recip().expect("pivot is nonzero");
        for k in col..a.cols {
            let v = a.get(row, k) * &inv;
            a.set(row, k, v);
        }
        for r in 0..a.rows {
            if r == row {
                continue;
            }
            let f = a.get(r, col).clone();
            if f.is_zero() {
                continue;
            }
            for k in col..a.cols {
                let v = a.get(r, k) - &(&f * a.get(row, k));
                a.set(r, k, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Echelon { rank: pivots.len(), pivots, rref: a }
}

/// Sparse vector: sorted `(index, value)` pairs with no zero values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseVec(Vec<(usize, Rational)>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    pub fn from_map(m: BTreeMap<usize, Rational>) -> Self {
        SparseVec(m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVec(
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.0
    }

    pub fn leading(&self) -> Option<&(usize, Rational)> {
        self.0.first()
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.0.binary_search_by_key(&i, |(k, _)| *k) {
            Ok(p) => self.0[p].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// `self - f·other`
    pub fn axpy_neg(&self, f: &Rational, other: &SparseVec) -> SparseVec {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ka = a.get(i).map(|x| x.0);
            let kb = b.get(j).map(|x| x.0);
            match (ka, kb) {
                (Some(x), Some(y)) if x == y => {
                    let v = &a[i].1 - &(f * &b[j].1);
                    if !v.is_zero() {
                        out.push((x, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    out.push(a[i].clone());
                    i += 1;
                }
                (Some(_), None) => {
                    out.push(a[i].clone());
                    i += 1;
                }
                (_, Some(y)) => {
                    out.push((y, -(f * &b[j].1)));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SparseVec(out)
    }

    pub fn scale(&self, f: &Rational) -> SparseVec {
        if f.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|(k, v)| (*k, v * f)).collect())
    }
}

/// Incremental row echelon basis over ℚ for sparse vectors.
///
/// Each stored row has a distinct leading index, normalized to 1.
#[derive(Clone, Debug, Default)]
pub struct SpanBuilder {
    rows: BTreeMap<usize, SparseVec>,
}

impl SpanBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut floor = 0usize;
        loop {
            // first entry at or beyond `floor` whose index is a pivot
            let hit = v
                .0
                .iter()
                .find(|(k, _)| *k >= floor && self.rows.contains_key(k))
                .cloned();
            match hit {
                None => return v,
                Some((k, c)) => {
                    v = v.axpy_neg(&c, &self.rows[&k]);
                    floor = k + 1;
                }
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Add `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        match r.leading() {
            None => false,
            Some((k, c)) => {
                let k = *k;
                let inv = c.recip().expect("leading entry nonzero");
                self.rows.insert(k, r.scale(&inv));
                true
            }
        }
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ranks() {
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
        assert_eq!(RationalMatrix::zeros(3, 4).rank(), 0);
        let m = RationalMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        let e = rank_and_basis(&m);
        assert_eq!(e.rank, 1);
        assert_eq!(e.pivots, vec![0]);
        assert_eq!(e.rref.get(0, 1), &Rational::from(2));
    }

    #[test]
    fn inverse_and_det() {
        let m = RationalMatrix::from_i64_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.determinant().unwrap(), Rational::one());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(2));
        let s = RationalMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(s.inverse().is_none());
    }

    #[test]
    fn span_builder_matches_dense() {
        let rows = [vec![1, 2, 0, 3], vec![0, 1, 1, 0], vec![1, 3, 1, 3], vec![0, 0, 0, 5]];
        let mut sb = SpanBuilder::new();
        for r in &rows {
            let v: Vec<Rational> = r.iter().map(|&x| Rational::from(x)).collect();
            sb.insert(&SparseVec::from_dense(&v));
        }
        let dense = RationalMatrix::from_i64_rows(&rows).unwrap();
        assert_eq!(sb.rank(), dense.rank());
        assert_eq!(sb.rank(), 3);
    }
}
