use std::fmt;

use super::{check_feet, CanonicalClass};
use crate::abcat::{
    biproduct, cokernel, compose, copair, factor_through_mono, identity, inclusion_left,
    inclusion_right, is_mono, kernel, pair, projection_left, projection_right, LinMap, VecObj,
};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

/// `A0 --f0--> B <--f1-- A1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cospan {
    f0: LinMap,
    f1: LinMap,
}

impl Cospan {
    pub fn new(f0: LinMap, f1: LinMap) -> Result<Cospan> {
        if f0.field() != f1.field() {
            return Err(Error::FieldMismatch(f0.field().to_string(), f1.field().to_string()));
        }
        if f0.dst() != f1.dst() {
            return Err(Error::ShapeError(format!(
                "cospan legs land in {} and {}",
                f0.dst(),
                f1.dst()
            )));
        }
        Ok(Cospan { f0, f1 })
    }

    pub fn f0(&self) -> &LinMap {
        &self.f0
    }

    pub fn f1(&self) -> &LinMap {
        &self.f1
    }

    pub fn foot0(&self) -> VecObj {
        self.f0.src()
    }

    pub fn foot1(&self) -> VecObj {
        self.f1.src()
    }

    pub fn bulk(&self) -> VecObj {
        self.f0.dst()
    }

    pub fn field(&self) -> Field {
        self.f0.field()
    }

    /// `[f0 | f1] : A0 ⊕ A1 -> B`.
    pub fn copair_map(&self) -> LinMap {
        copair(&self.f0, &self.f1).expect("legs share a target")
    }
}

impl fmt::Display for Cospan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} --{}--> {} <--{}-- {}",
            self.foot0(),
            self.f0.matrix(),
            self.bulk(),
            self.f1.matrix(),
            self.foot1()
        )
    }
}

/// An upper bound `(bound, B -> W, B' -> W)` or a lower bound `(bound, B0 -> B, B0 -> B')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundWitness {
    pub bound: Cospan,
    pub w_left: LinMap,
    pub w_right: LinMap,
}

pub fn iota_cosp(f: &LinMap) -> Cospan {
    Cospan {
        f0: f.clone(),
        f1: identity(f.dst()),
    }
}

pub fn dagger_cosp(l: &Cospan) -> Cospan {
    Cospan {
        f0: l.f1.clone(),
        f1: l.f0.clone(),
    }
}

pub fn tensor_cosp(l: &Cospan, m: &Cospan) -> Result<Cospan> {
    Cospan::new(biproduct(&l.f0, &m.f0)?, biproduct(&l.f1, &m.f1)?)
}

/// Pushout-style composite: the bulk is the cokernel of `(f1, -f1') : A1 -> B ⊕ B'`.
pub fn compose_cosp(l: &Cospan, m: &Cospan) -> Result<Cospan> {
    if l.foot1() != m.foot0() {
        return Err(Error::CompositionMismatch(format!(
            "cospan ending at {} composed with one starting at {}",
            l.foot1(),
            m.foot0()
        )));
    }
    let u = pair(&l.f1, &m.f0.neg())?;
    let c = cokernel(&u);
    let (b, b2) = (l.bulk(), m.bulk());
    let g0 = compose(&compose(&c, &inclusion_left(b, b2))?, &l.f0)?;
    let g2 = compose(&compose(&c, &inclusion_right(b, b2))?, &m.f1)?;
    Cospan::new(g0, g2)
}

pub fn canonical_cosp(l: &Cospan) -> CanonicalClass {
    let k = kernel(&l.copair_map());
    CanonicalClass::from_spanning(l.foot0(), l.foot1(), k.matrix()).expect("ambient")
}

/// The cospan with bulk `(A0 ⊕ A1) / ker [f0 | f1]` and legs the induced maps.
pub fn minimal_rep(l: &Cospan) -> Cospan {
    let k = kernel(&l.copair_map());
    let q = cokernel(&k);
    let (a0, a1) = (l.foot0(), l.foot1());
    Cospan {
        f0: compose(&q, &inclusion_left(a0, a1)).expect("shapes"),
        f1: compose(&q, &inclusion_right(a0, a1)).expect("shapes"),
    }
}

/// Unit columns of `k^n` extending the independent columns of `basis` to a basis.
fn unit_completion(basis: &Matrix) -> Matrix {
    let n = basis.rows();
    let field = basis.field();
    let r = basis.cols();
    let stacked = basis.hstack(&Matrix::identity(field, n)).expect("shapes");
    let extra: Vec<usize> = stacked
        .rref()
        .pivots
        .into_iter()
        .filter(|&p| p >= r)
        .map(|p| p - r)
        .collect();
    Matrix::identity(field, n).select_cols(&extra)
}

/// A mono `g : B -> B'` with `g ∘ f0 = f0'` and `g ∘ f1 = f1'`, if one exists.
///
/// Such a `g` exists exactly when `[f0 | f1]` and `[f0' | f1']` have the same kernel
/// and `dim B <= dim B'`.
pub fn leq_cosp(l: &Cospan, m: &Cospan) -> Result<Option<LinMap>> {
    check_feet(l.foot0(), l.foot1(), m.foot0(), m.foot1())?;
    if l.bulk().dim > m.bulk().dim || canonical_cosp(l) != canonical_cosp(m) {
        return Ok(None);
    }
    let v = l.copair_map();
    let vm = m.copair_map();
    let pivots = v.matrix().rref().pivots;
    let v_j = v.matrix().select_cols(&pivots);
    // Equal kernels make the same columns of v' independent.
    let vm_j = vm.matrix().select_cols(&pivots);
    let source_basis = v_j.hstack(&unit_completion(&v_j))?;
    let spare = l.bulk().dim - pivots.len();
    let target_extra = unit_completion(&vm_j);
    let target_sel: Vec<usize> = (0..spare).collect();
    let target = vm_j.hstack(&target_extra.select_cols(&target_sel))?;
    let inv = source_basis.inverse().expect("completed basis is invertible");
    let g = LinMap::new(l.bulk(), m.bulk(), target.mul(&inv)?)?;
    debug_assert!(is_mono(&g));
    debug_assert_eq!(compose(&g, &l.f0)?, m.f0);
    debug_assert_eq!(compose(&g, &l.f1)?, m.f1);
    Ok(Some(g))
}

pub fn equiv_cosp(l: &Cospan, m: &Cospan) -> Result<bool> {
    check_feet(l.foot0(), l.foot1(), m.foot0(), m.foot1())?;
    let same = canonical_cosp(l) == canonical_cosp(m);
    debug_assert_eq!(same, upper_bound(l, m)?.is_some());
    Ok(same)
}

/// Glue the two bulks along the joint image of the feet and keep the result when
/// both comparison maps are mono.
pub fn upper_bound(l: &Cospan, m: &Cospan) -> Result<Option<BoundWitness>> {
    check_feet(l.foot0(), l.foot1(), m.foot0(), m.foot1())?;
    let v = l.copair_map();
    let vm = m.copair_map();
    let c = cokernel(&pair(&v, &vm.neg())?);
    let g = compose(&c, &inclusion_left(l.bulk(), m.bulk()))?;
    let gm = compose(&c, &inclusion_right(l.bulk(), m.bulk()))?;
    if !is_mono(&g) || !is_mono(&gm) {
        return Ok(None);
    }
    let bound = Cospan::new(compose(&g, &l.f0)?, compose(&g, &l.f1)?)?;
    debug_assert_eq!(bound.f0, compose(&gm, &m.f0)?);
    debug_assert_eq!(bound.f1, compose(&gm, &m.f1)?);
    Ok(Some(BoundWitness {
        bound,
        w_left: g,
        w_right: gm,
    }))
}

/// Pull an upper bound back: `B0 = ker [g | -g'] ⊆ B ⊕ B'`, legs induced by `(f_i, f_i')`.
pub fn lower_bound(l: &Cospan, m: &Cospan) -> Result<Option<BoundWitness>> {
    let Some(up) = upper_bound(l, m)? else {
        return Ok(None);
    };
    let (b, bm) = (l.bulk(), m.bulk());
    let k = kernel(&copair(&up.w_left, &up.w_right.neg())?);
    let w_left = compose(&projection_left(b, bm), &k)?;
    let w_right = compose(&projection_right(b, bm), &k)?;
    let h0 = factor_through_mono(&pair(&l.f0, &m.f0)?, &k)?.expect("legs land in the kernel");
    let h1 = factor_through_mono(&pair(&l.f1, &m.f1)?, &k)?.expect("legs land in the kernel");
    Ok(Some(BoundWitness {
        bound: Cospan::new(h0, h1)?,
        w_left,
        w_right,
    }))
}
