//! Exact dense linear algebra over GF(p) and the rationals.
//!
//! Every subspace is represented by a canonical basis derived from reduced row-echelon
//! form, so equal subspaces have bit-identical representatives.

mod arith;
mod field;
mod matrix;

pub use field::{Field, Scalar};
pub use matrix::{solve_left, solve_right, Matrix, Rref};

use crate::error::{Error, Result};

pub fn rref(m: &Matrix) -> Rref {
    m.rref()
}

pub fn kernel_basis(m: &Matrix) -> Matrix {
    m.kernel_basis()
}

pub fn image_basis(m: &Matrix) -> Matrix {
    m.image_basis()
}

pub fn direct_sum(m: &Matrix, n: &Matrix) -> Result<Matrix> {
    m.direct_sum(n)
}

fn check_ambient(b1: &Matrix, b2: &Matrix) -> Result<()> {
    if b1.field() != b2.field() {
        return Err(Error::FieldMismatch(b1.field().to_string(), b2.field().to_string()));
    }
    if b1.rows() != b2.rows() {
        return Err(Error::ShapeError(format!(
            "ambient dimensions {} and {} differ",
            b1.rows(),
            b2.rows()
        )));
    }
    Ok(())
}

/// `span(b2) ⊆ span(b1)`.
pub fn subspace_contains(b1: &Matrix, b2: &Matrix) -> Result<bool> {
    check_ambient(b1, b2)?;
    Ok(b1.hstack(b2)?.rank() == b1.rank())
}

pub fn subspace_equal(b1: &Matrix, b2: &Matrix) -> Result<bool> {
    check_ambient(b1, b2)?;
    Ok(b1.image_basis() == b2.image_basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn gf2(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(Field::GF2, rows)
    }

    fn q(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(Field::RATIONAL, rows)
    }

    #[test]
    fn rref_examples() {
        let r = rref(&gf2(&[&[1, 1], &[1, 1]]));
        assert_eq!(r.reduced, gf2(&[&[1, 1], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);

        let id = Matrix::identity(Field::RATIONAL, 3);
        let r = rref(&id);
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank(), 3);

        let z = Matrix::zeros(Field::GF3, 2, 3);
        let r = rref(&z);
        assert_eq!(r.reduced, z);
        assert_eq!(r.rank(), 0);
    }

    #[test]
    fn rref_over_rationals_normalizes() {
        let r = rref(&q(&[&[2, 4], &[3, 1]]));
        assert_eq!(r.reduced, Matrix::identity(Field::RATIONAL, 2));
        let r = rref(&q(&[&[2, 3]]));
        let half3 = Scalar::Rational(BigRational::new(3.into(), 2.into()));
        assert_eq!(r.reduced.entry(0, 1), half3);
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = gf2(&[&[1]]);
        let b = q(&[&[1]]);
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch(..))));
        assert!(matches!(direct_sum(&a, &b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&gf2(&[&[1, 1]])), gf2(&[&[1], &[1]]));
        assert_eq!(kernel_basis(&Matrix::identity(Field::GF2, 3)).cols(), 0);
        assert_eq!(kernel_basis(&q(&[&[1, 0], &[0, 0]])), q(&[&[0], &[1]]));
        // x + y = 0 over Q gives (-1, 1)
        assert_eq!(kernel_basis(&q(&[&[1, 1]])), q(&[&[-1], &[1]]));
    }

    #[test]
    fn image_and_subspace_examples() {
        assert_eq!(image_basis(&gf2(&[&[1, 1], &[1, 1]])), gf2(&[&[1], &[1]]));
        let line = gf2(&[&[1], &[1]]);
        assert!(subspace_equal(&line, &line).unwrap());
        let plane = Matrix::identity(Field::GF2, 2);
        assert!(subspace_contains(&plane, &gf2(&[&[1], &[0]])).unwrap());
        assert!(!subspace_contains(&line, &gf2(&[&[1], &[0]])).unwrap());
        assert!(matches!(
            subspace_equal(&line, &Matrix::identity(Field::GF2, 3)),
            Err(Error::ShapeError(_))
        ));
    }

    #[test]
    fn solve_left_examples() {
        let id = Matrix::identity(Field::GF3, 2);
        assert_eq!(solve_left(&id, &id).unwrap(), Some(id.clone()));
        assert_eq!(solve_left(&gf2(&[&[1, 1]]), &gf2(&[&[1, 0]])).unwrap(), None);
        let g = solve_left(&q(&[&[1], &[1]]), &q(&[&[1]])).unwrap().unwrap();
        assert_eq!(g, q(&[&[1, 0]]));
        assert!(matches!(
            solve_left(&gf2(&[&[1, 1]]), &gf2(&[&[1]])),
            Err(Error::ShapeError(_))
        ));
    }

    #[test]
    fn direct_sum_examples() {
        let one = gf2(&[&[1]]);
        assert_eq!(direct_sum(&one, &one).unwrap(), Matrix::identity(Field::GF2, 2));
        assert_eq!(
            direct_sum(&gf2(&[&[1, 1]]), &gf2(&[&[0]])).unwrap(),
            gf2(&[&[1, 1, 0], &[0, 0, 0]])
        );
        let m = gf2(&[&[1, 0], &[1, 1]]);
        assert_eq!(direct_sum(&m, &Matrix::zeros(Field::GF2, 0, 0)).unwrap(), m);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = q(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Field::RATIONAL, 2));
        assert!(gf2(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }
}
