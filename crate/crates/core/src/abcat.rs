//! The abelian category of finite-dimensional vector spaces over a fixed field:
//! kernels, cokernels, biproducts, and the exact-square criterion.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{solve_left, solve_right, subspace_equal, Field, Matrix};

/// An object `k^dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VecObj {
    pub field: Field,
    pub dim: usize,
}

impl VecObj {
    pub fn new(field: Field, dim: usize) -> VecObj {
        VecObj { field, dim }
    }

    pub fn zero(field: Field) -> VecObj {
        VecObj { field, dim: 0 }
    }

    pub fn sum(self, other: VecObj) -> VecObj {
        debug_assert_eq!(self.field, other.field);
        VecObj {
            field: self.field,
            dim: self.dim + other.dim,
        }
    }
}

impl fmt::Display for VecObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.field, self.dim)
    }
}

fn check_same_field(a: Field, b: Field) -> Result<()> {
    if a != b {
        return Err(Error::FieldMismatch(a.to_string(), b.to_string()));
    }
    Ok(())
}

/// A linear map `src -> dst`, stored as a `dst.dim × src.dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap {
    src: VecObj,
    dst: VecObj,
    mat: Matrix,
}

impl LinMap {
    pub fn new(src: VecObj, dst: VecObj, mat: Matrix) -> Result<LinMap> {
        check_same_field(src.field, dst.field)?;
        check_same_field(src.field, mat.field())?;
        if mat.shape() != (dst.dim, src.dim) {
            return Err(Error::ShapeError(format!(
                "matrix {}×{} does not realize a map {src} -> {dst}",
                mat.rows(),
                mat.cols()
            )));
        }
        Ok(LinMap { src, dst, mat })
    }

    /// Wrap a matrix, reading the objects off its shape.
    pub fn from_matrix(mat: Matrix) -> LinMap {
        let field = mat.field();
        LinMap {
            src: VecObj::new(field, mat.cols()),
            dst: VecObj::new(field, mat.rows()),
            mat,
        }
    }

    pub fn zero(src: VecObj, dst: VecObj) -> LinMap {
        LinMap::from_matrix(Matrix::zeros(src.field, dst.dim, src.dim))
    }

    pub fn src(&self) -> VecObj {
        self.src
    }

    pub fn dst(&self) -> VecObj {
        self.dst
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn field(&self) -> Field {
        self.src.field
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    pub fn neg(&self) -> LinMap {
        LinMap {
            mat: self.mat.neg(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        if self.src != other.src || self.dst != other.dst {
            return Err(Error::CompositionMismatch(format!(
                "cannot add maps {} -> {} and {} -> {}",
                self.src, self.dst, other.src, other.dst
            )));
        }
        Ok(LinMap::from_matrix(self.mat.add(&other.mat)?))
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap> {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &LinMap) -> Result<LinMap> {
        compose(self, f)
    }
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: {}", self.src, self.dst, self.mat)
    }
}

/// `g ∘ f`.
pub fn compose(g: &LinMap, f: &LinMap) -> Result<LinMap> {
    check_same_field(g.field(), f.field())?;
    if f.dst != g.src {
        return Err(Error::CompositionMismatch(format!(
            "target {} of first map differs from source {} of second",
            f.dst, g.src
        )));
    }
    Ok(LinMap {
        src: f.src,
        dst: g.dst,
        mat: g.mat.mul(&f.mat)?,
    })
}

pub fn identity(a: VecObj) -> LinMap {
    LinMap::from_matrix(Matrix::identity(a.field, a.dim))
}

/// `f ⊕ g : A ⊕ C -> B ⊕ D`.
pub fn biproduct(f: &LinMap, g: &LinMap) -> Result<LinMap> {
    check_same_field(f.field(), g.field())?;
    Ok(LinMap {
        src: f.src.sum(g.src),
        dst: f.dst.sum(g.dst),
        mat: f.mat.direct_sum(&g.mat)?,
    })
}

/// `Δ_A : A -> A ⊕ A`.
pub fn diagonal(a: VecObj) -> LinMap {
    let id = Matrix::identity(a.field, a.dim);
    LinMap::from_matrix(id.vstack(&id).expect("same shape"))
}

/// `∇_A : A ⊕ A -> A`.
pub fn codiagonal(a: VecObj) -> LinMap {
    let id = Matrix::identity(a.field, a.dim);
    LinMap::from_matrix(id.hstack(&id).expect("same shape"))
}

/// `(f ⊕ g) ∘ Δ : A -> B ⊕ C`.
pub fn pair(f: &LinMap, g: &LinMap) -> Result<LinMap> {
    if f.src != g.src {
        return Err(Error::CompositionMismatch(format!(
            "pairing maps with sources {} and {}",
            f.src, g.src
        )));
    }
    compose(&biproduct(f, g)?, &diagonal(f.src))
}

/// `∇ ∘ (f ⊕ g) : A ⊕ B -> C`.
pub fn copair(f: &LinMap, g: &LinMap) -> Result<LinMap> {
    if f.dst != g.dst {
        return Err(Error::CompositionMismatch(format!(
            "copairing maps with targets {} and {}",
            f.dst, g.dst
        )));
    }
    compose(&codiagonal(f.dst), &biproduct(f, g)?)
}

/// Inclusion of the left summand `A -> A ⊕ B`.
pub fn inclusion_left(a: VecObj, b: VecObj) -> LinMap {
    let m = Matrix::identity(a.field, a.dim)
        .vstack(&Matrix::zeros(a.field, b.dim, a.dim))
        .expect("same field");
    LinMap::from_matrix(m)
}

/// Inclusion of the right summand `B -> A ⊕ B`.
pub fn inclusion_right(a: VecObj, b: VecObj) -> LinMap {
    let m = Matrix::zeros(a.field, a.dim, b.dim)
        .vstack(&Matrix::identity(a.field, b.dim))
        .expect("same field");
    LinMap::from_matrix(m)
}

/// Projection onto the left summand `A ⊕ B -> A`.
pub fn projection_left(a: VecObj, b: VecObj) -> LinMap {
    let m = Matrix::identity(a.field, a.dim)
        .hstack(&Matrix::zeros(a.field, a.dim, b.dim))
        .expect("same field");
    LinMap::from_matrix(m)
}

/// Projection onto the right summand `A ⊕ B -> B`.
pub fn projection_right(a: VecObj, b: VecObj) -> LinMap {
    let m = Matrix::zeros(a.field, b.dim, a.dim)
        .hstack(&Matrix::identity(a.field, b.dim))
        .expect("same field");
    LinMap::from_matrix(m)
}

/// Canonical kernel inclusion `Ker f -> src`.
pub fn kernel(f: &LinMap) -> LinMap {
    LinMap::from_matrix(f.mat.kernel_basis())
}

/// Canonical cokernel projection `dst -> dst / im f`.
///
/// The canonical image basis has a pivot coordinate per vector; completing it by
/// the unit vectors at the remaining coordinates gives a basis of `dst`, and the
/// projection reads off those remaining coordinates after reducing modulo `im f`.
pub fn cokernel(f: &LinMap) -> LinMap {
    let field = f.field();
    let n = f.dst.dim;
    let image = f.mat.image_basis();
    let pivots = image.transpose().rref().pivots;
    let free: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    // Reduce y to y - Σ y_{p_i} u_i and keep the free coordinates.
    let reduce = Matrix::identity(field, n)
        .sub(&image.mul(&Matrix::identity(field, n).select_rows(&pivots)).expect("shapes"))
        .expect("shapes");
    LinMap::from_matrix(reduce.select_rows(&free))
}

pub fn is_mono(f: &LinMap) -> bool {
    f.rank() == f.src.dim
}

pub fn is_epi(f: &LinMap) -> bool {
    f.rank() == f.dst.dim
}

pub fn is_iso(f: &LinMap) -> bool {
    f.src.dim == f.dst.dim && is_mono(f)
}

/// The unique `h` with `h ∘ e = f`, when `e` is epi and `f` vanishes on `ker e`.
pub fn factor_through_epi(f: &LinMap, e: &LinMap) -> Result<Option<LinMap>> {
    if f.src != e.src {
        return Err(Error::CompositionMismatch(format!(
            "factor_through_epi: sources {} and {}",
            f.src, e.src
        )));
    }
    Ok(solve_left(&e.mat, &f.mat)?.map(|h| LinMap {
        src: e.dst,
        dst: f.dst,
        mat: h,
    }))
}

/// The `h` with `m ∘ h = f`, when `im f ⊆ im m` (unique if `m` is mono).
pub fn factor_through_mono(f: &LinMap, m: &LinMap) -> Result<Option<LinMap>> {
    if f.dst != m.dst {
        return Err(Error::CompositionMismatch(format!(
            "factor_through_mono: targets {} and {}",
            f.dst, m.dst
        )));
    }
    Ok(solve_right(&m.mat, &f.mat)?.map(|h| LinMap {
        src: f.src,
        dst: m.src,
        mat: h,
    }))
}

/// A square
///
/// ```text
/// B --g--> D
/// ^        ^
/// f        g'
/// |        |
/// A --f'-> C
/// ```
///
/// Commutativity is not enforced here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareDiagram {
    pub f: LinMap,
    pub f_prime: LinMap,
    pub g: LinMap,
    pub g_prime: LinMap,
}

impl SquareDiagram {
    pub fn new(f: LinMap, f_prime: LinMap, g: LinMap, g_prime: LinMap) -> Result<SquareDiagram> {
        if f.src != f_prime.src || f.dst != g.src || f_prime.dst != g_prime.src || g.dst != g_prime.dst {
            return Err(Error::CompositionMismatch(
                "maps do not form a square".to_string(),
            ));
        }
        Ok(SquareDiagram { f, f_prime, g, g_prime })
    }

    pub fn commutes(&self) -> bool {
        let top = compose(&self.g, &self.f).expect("square shape");
        let bottom = compose(&self.g_prime, &self.f_prime).expect("square shape");
        top == bottom
    }

    /// Glue `other` to the right: `other.f` must equal `self.g_prime`.
    pub fn glue_horizontal(&self, other: &SquareDiagram) -> Result<SquareDiagram> {
        if other.f != self.g_prime {
            return Err(Error::CompositionMismatch(
                "shared side of horizontally glued squares differs".to_string(),
            ));
        }
        SquareDiagram::new(
            self.f.clone(),
            compose(&other.f_prime, &self.f_prime)?,
            compose(&other.g, &self.g)?,
            other.g_prime.clone(),
        )
    }

    /// Glue `other` on top: `other.f_prime` must equal `self.g`.
    pub fn glue_vertical(&self, other: &SquareDiagram) -> Result<SquareDiagram> {
        if other.f_prime != self.g {
            return Err(Error::CompositionMismatch(
                "shared side of vertically glued squares differs".to_string(),
            ));
        }
        SquareDiagram::new(
            compose(&other.f, &self.f)?,
            self.f_prime.clone(),
            other.g.clone(),
            compose(&other.g_prime, &self.g_prime)?,
        )
    }
}

/// `X --u--> Y --v--> Z` with `v ∘ u = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTermComplex {
    u: LinMap,
    v: LinMap,
}

impl ThreeTermComplex {
    pub fn new(u: LinMap, v: LinMap) -> Result<ThreeTermComplex> {
        if !compose(&v, &u)?.is_zero() {
            return Err(Error::NotAComplex);
        }
        Ok(ThreeTermComplex { u, v })
    }

    pub fn u(&self) -> &LinMap {
        &self.u
    }

    pub fn v(&self) -> &LinMap {
        &self.v
    }

    /// Dimension of `ker v / im u`.
    pub fn middle_homology_dim(&self) -> usize {
        self.v.src.dim - self.v.rank() - self.u.rank()
    }
}

/// `C(□) = A --(f ⊕ -f')∘Δ--> B ⊕ C --∇∘(g ⊕ g')--> D`.
pub fn square_complex(sq: &SquareDiagram) -> Result<ThreeTermComplex> {
    if !sq.commutes() {
        return Err(Error::NonCommutingSquare);
    }
    let u = pair(&sq.f, &sq.f_prime.neg())?;
    let v = copair(&sq.g, &sq.g_prime)?;
    ThreeTermComplex::new(u, v)
}

pub fn is_exact_at_middle(c: &ThreeTermComplex) -> bool {
    let ker_v = c.v.mat.kernel_basis();
    subspace_equal(&ker_v, &c.u.mat).expect("same ambient")
}

/// `k_□ : Ker f' -> Ker g`, induced by `f`.
pub fn kernel_comparison(sq: &SquareDiagram) -> Result<LinMap> {
    if !sq.commutes() {
        return Err(Error::NonCommutingSquare);
    }
    let kf = kernel(&sq.f_prime);
    let kg = kernel(&sq.g);
    let along = compose(&sq.f, &kf)?;
    Ok(factor_through_mono(&along, &kg)?.expect("f maps Ker f' into Ker g"))
}

/// `c_□ : Cok f' -> Cok g`, induced by `g'`.
pub fn cokernel_comparison(sq: &SquareDiagram) -> Result<LinMap> {
    if !sq.commutes() {
        return Err(Error::NonCommutingSquare);
    }
    let qf = cokernel(&sq.f_prime);
    let qg = cokernel(&sq.g);
    let along = compose(&qg, &sq.g_prime)?;
    Ok(factor_through_epi(&along, &qf)?.expect("g' maps im f' into im g"))
}

/// Exactness by definition: `k_□` epi and `c_□` mono.
pub fn is_exact_square(sq: &SquareDiagram) -> Result<bool> {
    let k = kernel_comparison(sq)?;
    let c = cokernel_comparison(sq)?;
    Ok(is_epi(&k) && is_mono(&c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> VecObj {
        VecObj::new(Field::GF2, 1)
    }

    fn m(field: Field, rows: &[&[i64]]) -> LinMap {
        LinMap::from_matrix(Matrix::from_rows(field, rows))
    }

    #[test]
    fn diagonal_and_codiagonal() {
        assert_eq!(diagonal(k2()).matrix(), &Matrix::from_rows(Field::GF2, &[&[1], &[1]]));
        let twice = compose(&codiagonal(k2()), &diagonal(k2())).unwrap();
        assert!(twice.is_zero());
        let kq = VecObj::new(Field::RATIONAL, 1);
        let twice = compose(&codiagonal(kq), &diagonal(kq)).unwrap();
        assert_eq!(twice.matrix(), &Matrix::from_rows(Field::RATIONAL, &[&[2]]));
        let f = m(Field::GF3, &[&[1, 2], &[0, 1]]);
        assert_eq!(compose(&identity(f.dst()), &f).unwrap(), f);
    }

    #[test]
    fn composition_mismatch() {
        let f = m(Field::GF2, &[&[1, 1]]);
        assert!(matches!(compose(&f, &f), Err(Error::CompositionMismatch(_))));
    }

    #[test]
    fn kernel_and_cokernel_examples() {
        let d = diagonal(k2());
        assert_eq!(kernel(&d).src().dim, 0);
        assert!(is_mono(&kernel(&d)));
        assert_eq!(cokernel(&d).matrix(), &Matrix::from_rows(Field::GF2, &[&[1, 1]]));
        let id = identity(VecObj::new(Field::RATIONAL, 2));
        assert_eq!(cokernel(&id).dst().dim, 0);
        let f = m(Field::RATIONAL, &[&[1, 2], &[2, 4], &[0, 0]]);
        let q = cokernel(&f);
        assert!(is_epi(&q));
        assert!(compose(&q, &f).unwrap().is_zero());
        assert!(compose(&f, &kernel(&f)).unwrap().is_zero());
    }

    #[test]
    fn mono_epi_examples() {
        assert!(is_mono(&diagonal(k2())));
        assert!(is_epi(&codiagonal(k2())));
        let z = LinMap::zero(k2(), k2());
        assert!(!is_mono(&z) && !is_epi(&z));
    }

    #[test]
    fn square_complex_examples() {
        let kq = VecObj::new(Field::RATIONAL, 1);
        let id = identity(kq);
        let sq = SquareDiagram::new(id.clone(), id.clone(), id.clone(), id.clone()).unwrap();
        let c = square_complex(&sq).unwrap();
        assert_eq!(c.u().matrix(), &Matrix::from_rows(Field::RATIONAL, &[&[1], &[-1]]));
        assert_eq!(c.v().matrix(), &Matrix::from_rows(Field::RATIONAL, &[&[1, 1]]));

        let id2 = identity(k2());
        let sq2 = SquareDiagram::new(id2.clone(), id2.clone(), id2.clone(), id2.clone()).unwrap();
        assert_eq!(
            square_complex(&sq2).unwrap().u().matrix(),
            &Matrix::from_rows(Field::GF2, &[&[1], &[1]])
        );

        let z = LinMap::zero(k2(), k2());
        let zsq = SquareDiagram::new(z.clone(), z.clone(), z.clone(), z.clone()).unwrap();
        let zc = square_complex(&zsq).unwrap();
        assert!(zc.u().is_zero() && zc.v().is_zero());

        let k = k2();
        let sq3 = SquareDiagram::new(
            id2.clone(),
            id2.clone(),
            inclusion_left(k, k),
            inclusion_right(k, k),
        )
        .unwrap();
        assert_eq!(square_complex(&sq3), Err(Error::NonCommutingSquare));
    }

    #[test]
    fn middle_exactness_examples() {
        let f = Field::GF2;
        let zero = VecObj::zero(f);
        let k = VecObj::new(f, 1);
        let id = identity(k);
        let c = ThreeTermComplex::new(LinMap::zero(zero, k), id.clone()).unwrap();
        assert!(is_exact_at_middle(&c));
        let c = ThreeTermComplex::new(id.clone(), LinMap::zero(k, zero)).unwrap();
        assert!(is_exact_at_middle(&c));
        let c = ThreeTermComplex::new(LinMap::zero(zero, k), LinMap::zero(k, zero)).unwrap();
        assert!(!is_exact_at_middle(&c));
        assert_eq!(c.middle_homology_dim(), 1);
        assert_eq!(
            ThreeTermComplex::new(id.clone(), id.clone()),
            Err(Error::NotAComplex)
        );
    }

    #[test]
    fn exact_square_examples() {
        let f = Field::GF2;
        let k = VecObj::new(f, 1);
        let zero = VecObj::zero(f);
        let id = identity(k);
        let sq = SquareDiagram::new(id.clone(), id.clone(), id.clone(), id.clone()).unwrap();
        assert!(is_exact_square(&sq).unwrap());

        // A = 0, B = C = k, D = k², g = i0, g' = i1
        let sq = SquareDiagram::new(
            LinMap::zero(zero, k),
            LinMap::zero(zero, k),
            inclusion_left(k, k),
            inclusion_right(k, k),
        )
        .unwrap();
        assert!(is_exact_square(&sq).unwrap());
        assert!(is_exact_at_middle(&square_complex(&sq).unwrap()));

        // A = k, B = C = 0, D = k, zero maps
        let sq = SquareDiagram::new(
            LinMap::zero(k, zero),
            LinMap::zero(k, zero),
            LinMap::zero(zero, k),
            LinMap::zero(zero, k),
        )
        .unwrap();
        assert!(is_exact_square(&sq).unwrap());
        assert!(is_exact_at_middle(&square_complex(&sq).unwrap()));

        // all-zero square on k: k_□ = 0 : k -> k is not epi
        let z = LinMap::zero(k, k);
        let sq = SquareDiagram::new(z.clone(), z.clone(), z.clone(), z.clone()).unwrap();
        assert!(!is_exact_square(&sq).unwrap());
        assert!(!is_exact_at_middle(&square_complex(&sq).unwrap()));
    }

    #[test]
    fn biproduct_interchange() {
        let f = m(Field::GF3, &[&[1, 2]]);
        let g = m(Field::GF3, &[&[2], &[1]]);
        let f2 = m(Field::GF3, &[&[1], &[1]]);
        let g2 = m(Field::GF3, &[&[1, 1]]);
        let lhs = compose(&biproduct(&f, &g).unwrap(), &biproduct(&f2, &g2).unwrap()).unwrap();
        let rhs = biproduct(&compose(&f, &f2).unwrap(), &compose(&g, &g2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gluing_requires_shared_side() {
        let k = k2();
        let id = identity(k);
        let sq = SquareDiagram::new(id.clone(), id.clone(), id.clone(), id.clone()).unwrap();
        let glued = sq.glue_horizontal(&sq).unwrap();
        assert!(glued.commutes());
        assert!(is_exact_square(&glued).unwrap());
        let other = SquareDiagram::new(
            LinMap::zero(k, k),
            id.clone(),
            id.clone(),
            LinMap::zero(k, k),
        )
        .unwrap();
        assert!(sq.glue_horizontal(&other).is_err());
    }
}
