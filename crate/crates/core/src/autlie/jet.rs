use std::fmt;

use serde::Serialize;

use crate::exactmath::{Rational, RationalMatrix};
use crate::fox::{EndomorphismWords, SeriesMatrix};
use crate::freegroup::MagnusTable;
use crate::series::TruncatedSeries;
use crate::Error;

/// Magnus images of `x_i^φ` truncated at degree N: an endomorphism of
/// the series ring that is determined by where it sends each `1 + X_i`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct EndomorphismJet {
    rank: usize,
    trunc: usize,
    images: Vec<TruncatedSeries>,
}

impl EndomorphismJet {
    pub fn identity(rank: usize, trunc: usize) -> Self {
        let one = TruncatedSeries::one(rank, trunc);
        let images = (1..=rank).map(|i| one.add(&TruncatedSeries::variable(rank, trunc, i).unwrap()).unwrap()).collect();
        EndomorphismJet { rank, trunc, images }
    }

    pub fn from_images(images: Vec<TruncatedSeries>) -> Result<Self, Error> {
        let rank = images.len();
        let trunc = images.first().map_or(0, |s| s.truncation());
        for (i, s) in images.iter().enumerate() {
            if s.rank() != rank || s.truncation() != trunc {
                return Err(Error::Mismatch(format!("image {} has rank {}, N={}", i + 1, s.rank(), s.truncation())));
            }
            if !s.constant_term().is_one() {
                return Err(Error::Domain(format!("image {} has constant term {}", i + 1, s.constant_term())));
            }
            if s.graded_part(1.min(trunc))?.terms().any(|(_, c)| !c.is_integer()) {
                return Err(Error::Domain(format!("image {} has a non-integral linear part", i + 1)));
            }
        }
        Ok(EndomorphismJet { rank, trunc, images })
    }

    pub fn from_words(phi: &EndomorphismWords, trunc: usize) -> Self {
        let table = MagnusTable::new(phi.rank(), trunc);
        EndomorphismJet { rank: phi.rank(), trunc, images: phi.images().iter().map(|w| table.word(w)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn images(&self) -> &[TruncatedSeries] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &TruncatedSeries {
        &self.images[i - 1]
    }

    /// `X_i ↦ image_i − 1`, the induced ring substitution.
    fn shifts(&self) -> Vec<TruncatedSeries> {
        let one = TruncatedSeries::one(self.rank, self.trunc);
        self.images.iter().map(|s| s.sub(&one).unwrap()).collect()
    }

    /// `x^{φψ} = (x^φ)^ψ`.
    pub fn compose(&self, psi: &EndomorphismJet) -> Result<Self, Error> {
        if self.rank != psi.rank || self.trunc != psi.trunc {
            return Err(Error::Mismatch("jets of different shape".into()));
        }
        let sh = psi.shifts();
        let images = self.images.iter().map(|s| s.substitute(&sh)).collect::<Result<_, _>>()?;
        Ok(EndomorphismJet { rank: self.rank, trunc: self.trunc, images })
    }

    /// Integer matrix of linear coefficients, `A[i][j]` = coefficient of `X_j` in image `i`.
    pub fn linear_part(&self) -> RationalMatrix {
        let r = self.rank;
        let mut m = RationalMatrix::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                m.set(i, j, self.images[i].coeff_of(&[j + 1]));
            }
        }
        m
    }

    /// Two-sided inverse; the linear part must be unimodular.
    pub fn invert(&self) -> Result<Self, Error> {
        let a = self.linear_part();
        let det = a.determinant().expect("square");
        if !(det.is_one() || det == Rational::from(-1)) {
            return Err(Error::NotInvertible(format!("linear part has determinant {det}")));
        }
        let ainv = a.inverse().expect("unimodular");
        let (r, n) = (self.rank, self.trunc);
        let one = TruncatedSeries::one(r, n);
        let xs: Vec<TruncatedSeries> = (1..=r).map(|i| TruncatedSeries::variable(r, n, i).unwrap()).collect();
        // ψ_j − 1 starts as Σ_k (A⁻¹)_{jk} X_k
        let mut shifts: Vec<TruncatedSeries> = (0..r)
            .map(|j| {
                let mut s = TruncatedSeries::zero(r, n);
                for k in 0..r {
                    s = s.add(&xs[k].scalar_mul(ainv.get(j, k))).unwrap();
                }
                s
            })
            .collect();
        for d in 2..=n {
            // error of φ∘ψ against the identity, corrected in degree d
            let errs: Vec<TruncatedSeries> = (0..r)
                .map(|i| {
                    let v = self.images[i].substitute(&shifts)?;
                    v.sub(&one)?.sub(&xs[i])?.graded_part(d)
                })
                .collect::<Result<_, Error>>()?;
            if errs.iter().all(|e| e.is_zero()) {
                continue;
            }
            for j in 0..r {
                let mut delta = TruncatedSeries::zero(r, n);
                for i in 0..r {
                    delta = delta.sub(&errs[i].scalar_mul(ainv.get(j, i)))?;
                }
                shifts[j] = shifts[j].add(&delta)?;
            }
        }
        let images = shifts.iter().map(|s| s.add(&one)).collect::<Result<_, _>>()?;
        Ok(EndomorphismJet { rank: r, trunc: n, images })
    }

    /// `[φ,χ] = φ⁻¹χ⁻¹φχ`.
    pub fn commutator(&self, chi: &EndomorphismJet) -> Result<Self, Error> {
        self.invert()?.compose(&chi.invert()?)?.compose(self)?.compose(chi)
    }

    /// Commutator when both inverses are already known.
    pub fn commutator_with_inverses(a: &Self, a_inv: &Self, b: &Self, b_inv: &Self) -> Result<Self, Error> {
        a_inv.compose(b_inv)?.compose(a)?.compose(b)
    }

    /// `D̄φ` read off the images through the fundamental relation:
    /// entry `(i,j)` is the right derivative of `image_i` by `X_j`, minus `δ_ij`.
    /// Exact through degree N−1.
    pub fn reduced_jacobian(&self) -> SeriesMatrix {
        let r = self.rank;
        let mut entries = Vec::with_capacity(r * r);
        for i in 0..r {
            for j in 1..=r {
                let mut e = self.images[i].strip_right(j);
                if i + 1 == j {
                    e = e.sub(&TruncatedSeries::one(r, self.trunc)).unwrap();
                }
                entries.push(e);
            }
        }
        SeriesMatrix::from_entries(r, self.trunc, entries).expect("shapes agree")
    }

    /// Same images at a lower truncation.
    pub fn truncate(&self, trunc: usize) -> Self {
        EndomorphismJet { rank: self.rank, trunc, images: self.images.iter().map(|s| s.with_truncation(trunc)).collect() }
    }

    /// Agreement with the identity up to degree N.
    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank, self.trunc)
    }
}

impl fmt::Debug for EndomorphismJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.images.iter().enumerate() {
            writeln!(f, "x{} -> {}", i + 1, s)?;
        }
        Ok(())
    }
}
