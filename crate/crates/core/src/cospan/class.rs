use std::fmt;

use crate::abcat::{LinMap, VecObj};
use crate::error::{Error, Result};
use crate::exactlin::{image_basis, Matrix};

/// A subspace of `foot0 ⊕ foot1` held in canonical (RREF-derived) basis form.
///
/// For a cospan this is the kernel of `[f0 | f1]`; for a span the image of `(g0, g1)`.
/// Two (co)spans with equal feet are equivalent exactly when their classes are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalClass {
    foot0: VecObj,
    foot1: VecObj,
    basis: Matrix,
}

impl CanonicalClass {
    /// Canonicalize the column span of `spanning` as a subspace of `foot0 ⊕ foot1`.
    pub fn from_spanning(foot0: VecObj, foot1: VecObj, spanning: &Matrix) -> Result<CanonicalClass> {
        if spanning.rows() != foot0.dim + foot1.dim || spanning.field() != foot0.field {
            return Err(Error::ShapeError(format!(
                "spanning set lives in {}-dimensional space, expected {}",
                spanning.rows(),
                foot0.dim + foot1.dim
            )));
        }
        Ok(CanonicalClass {
            foot0,
            foot1,
            basis: image_basis(spanning),
        })
    }

    pub fn foot0(&self) -> VecObj {
        self.foot0
    }

    pub fn foot1(&self) -> VecObj {
        self.foot1
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    fn blocks(&self) -> (Matrix, Matrix) {
        let a = self.foot0.dim;
        (
            self.basis.row_block(0, a),
            self.basis.row_block(a, a + self.foot1.dim),
        )
    }

    /// Swap the two feet.
    pub fn dagger(&self) -> CanonicalClass {
        let (top, bottom) = self.blocks();
        let swapped = bottom.vstack(&top).expect("same field");
        CanonicalClass::from_spanning(self.foot1, self.foot0, &swapped).expect("ambient")
    }

    /// Negate the coordinates of one foot; this converts between the cospan kernel
    /// convention and the span image convention.
    pub fn negate_foot(&self, which: usize) -> CanonicalClass {
        let (top, bottom) = self.blocks();
        let (top, bottom) = if which == 0 { (top.neg(), bottom) } else { (top, bottom.neg()) };
        CanonicalClass::from_spanning(self.foot0, self.foot1, &top.vstack(&bottom).expect("same field"))
            .expect("ambient")
    }

    /// Block sum living in `(A0 ⊕ A0') ⊕ (A1 ⊕ A1')`.
    pub fn tensor(&self, other: &CanonicalClass) -> Result<CanonicalClass> {
        let (a0, a1) = self.blocks();
        let (b0, b1) = other.blocks();
        let left = a0.direct_sum(&b0)?;
        let right = a1.direct_sum(&b1)?;
        CanonicalClass::from_spanning(
            self.foot0.sum(other.foot0),
            self.foot1.sum(other.foot1),
            &left.vstack(&right)?,
        )
    }

    /// Image under `phi0 ⊕ phi1`, for isomorphisms of feet.
    pub fn transport(&self, phi0: &LinMap, phi1: &LinMap) -> Result<CanonicalClass> {
        if phi0.src() != self.foot0 || phi1.src() != self.foot1 {
            return Err(Error::FootMismatch(
                "transport maps do not start at the feet".to_string(),
            ));
        }
        let (top, bottom) = self.blocks();
        let moved = phi0.matrix().mul(&top)?.vstack(&phi1.matrix().mul(&bottom)?)?;
        CanonicalClass::from_spanning(phi0.dst(), phi1.dst(), &moved)
    }
}

impl fmt::Display for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊕ {} ⊇ span {}", self.foot0, self.foot1, self.basis)
    }
}
