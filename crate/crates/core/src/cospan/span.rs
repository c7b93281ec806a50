use std::fmt;

use super::{check_feet, CanonicalClass, Cospan};
use crate::abcat::{
    biproduct, cokernel, compose, copair, identity, inclusion_left, inclusion_right, kernel,
    pair, projection_left, projection_right, LinMap, VecObj,
};
use crate::error::{Error, Result};
use crate::exactlin::Field;

use super::leq_cosp;

/// `A0 <--g0-- C --g1--> A1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Span {
    g0: LinMap,
    g1: LinMap,
}

impl Span {
    pub fn new(g0: LinMap, g1: LinMap) -> Result<Span> {
        if g0.field() != g1.field() {
            return Err(Error::FieldMismatch(g0.field().to_string(), g1.field().to_string()));
        }
        if g0.src() != g1.src() {
            return Err(Error::ShapeError(format!(
                "span legs leave {} and {}",
                g0.src(),
                g1.src()
            )));
        }
        Ok(Span { g0, g1 })
    }

    pub fn g0(&self) -> &LinMap {
        &self.g0
    }

    pub fn g1(&self) -> &LinMap {
        &self.g1
    }

    pub fn foot0(&self) -> VecObj {
        self.g0.dst()
    }

    pub fn foot1(&self) -> VecObj {
        self.g1.dst()
    }

    pub fn apex(&self) -> VecObj {
        self.g0.src()
    }

    pub fn field(&self) -> Field {
        self.g0.field()
    }

    /// `(g0, g1) : C -> A0 ⊕ A1`.
    pub fn pair_map(&self) -> LinMap {
        pair(&self.g0, &self.g1).expect("legs share a source")
    }

    /// The same legs read in the opposite category, as a cospan of transposed matrices.
    fn opposite(&self) -> Cospan {
        Cospan::new(
            LinMap::from_matrix(self.g0.matrix().transpose()),
            LinMap::from_matrix(self.g1.matrix().transpose()),
        )
        .expect("legs share a source")
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} <--{}-- {} --{}--> {}",
            self.foot0(),
            self.g0.matrix(),
            self.apex(),
            self.g1.matrix(),
            self.foot1()
        )
    }
}

/// `K <--id-- K --f--> L`.
pub fn iota_span(f: &LinMap) -> Span {
    Span {
        g0: identity(f.src()),
        g1: f.clone(),
    }
}

pub fn dagger_span(v: &Span) -> Span {
    Span {
        g0: v.g1.clone(),
        g1: v.g0.clone(),
    }
}

pub fn tensor_span(v: &Span, w: &Span) -> Result<Span> {
    Span::new(biproduct(&v.g0, &w.g0)?, biproduct(&v.g1, &w.g1)?)
}

/// Pullback composite: the apex is `ker [g1 | -g0'] ⊆ C ⊕ C'`.
pub fn compose_span(v: &Span, w: &Span) -> Result<Span> {
    if v.foot1() != w.foot0() {
        return Err(Error::CompositionMismatch(format!(
            "span ending at {} composed with one starting at {}",
            v.foot1(),
            w.foot0()
        )));
    }
    let p = kernel(&copair(&v.g1, &w.g0.neg())?);
    let (c, c2) = (v.apex(), w.apex());
    let h0 = compose(&v.g0, &compose(&projection_left(c, c2), &p)?)?;
    let h2 = compose(&w.g1, &compose(&projection_right(c, c2), &p)?)?;
    Span::new(h0, h2)
}

pub fn canonical_span(v: &Span) -> CanonicalClass {
    CanonicalClass::from_spanning(v.foot0(), v.foot1(), v.pair_map().matrix()).expect("ambient")
}

pub fn equiv_span(v: &Span, w: &Span) -> Result<bool> {
    check_feet(v.foot0(), v.foot1(), w.foot0(), w.foot1())?;
    Ok(canonical_span(v) == canonical_span(w))
}

/// An epi `e : C' -> C` with `g0 ∘ e = g0'` and `g1 ∘ e = g1'`, if one exists.
///
/// Transposing all matrices turns this into the mono search for cospans.
pub fn leq_span(v: &Span, w: &Span) -> Result<Option<LinMap>> {
    check_feet(v.foot0(), v.foot1(), w.foot0(), w.foot1())?;
    let mono = leq_cosp(&v.opposite(), &w.opposite())?;
    Ok(mono.map(|g| LinMap::from_matrix(g.matrix().transpose())))
}

/// `T(Λ)`: apex `ker [f0 | f1]` with legs `(pr0, -pr1)` restricted to it.
pub fn transpose_cosp(l: &Cospan) -> Span {
    let k = kernel(&l.copair_map());
    let (a0, a1) = (l.foot0(), l.foot1());
    let g0 = compose(&projection_left(a0, a1), &k).expect("shapes");
    let g1 = compose(&projection_right(a0, a1), &k).expect("shapes").neg();
    Span { g0, g1 }
}

/// `T(V)`: bulk `cok (g0, -g1)` with the induced inclusions as legs.
pub fn transpose_span(v: &Span) -> Cospan {
    let c = cokernel(&pair(&v.g0, &v.g1.neg()).expect("legs share a source"));
    let (a0, a1) = (v.foot0(), v.foot1());
    let f0 = compose(&c, &inclusion_left(a0, a1)).expect("shapes");
    let f1 = compose(&c, &inclusion_right(a0, a1)).expect("shapes");
    Cospan::new(f0, f1).expect("legs share a target")
}
