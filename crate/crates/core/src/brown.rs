//! Reduced simplicial homology in one degree as a Brown functor, and its extensions
//! to cospans of spaces (through the chain-level gluing model) and to spans (through
//! the suspension cone construction).

use std::fmt;

use crate::abcat::{copair, LinMap, VecObj};
use crate::cospan::{
    canonical_cosp, canonical_span, compose_cosp, compose_span, dagger_cosp, iota_cosp,
    iota_span, leq_cosp, leq_span, transpose_cosp, CanonicalClass, Cospan, Span,
};
use crate::cw::{
    chain_map_of, compose_chain_cospans, homology, induced_on_homology, reduced_chains,
    suspend_map, t_sigma, wedge_inclusions, ChainCospan, ChainSpan, SimplicialComplex,
    SimplicialMap, SpaceCospan,
};
use crate::error::{Error, Result};
use crate::exactlin::Field;

/// `E_q = H̃_q(-; field)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BrownFunctor {
    pub field: Field,
    pub q: i64,
}

impl BrownFunctor {
    pub fn new(field: Field, q: i64) -> Result<BrownFunctor> {
        if q < 0 {
            return Err(Error::DegreeTooLow(q));
        }
        Ok(BrownFunctor { field, q })
    }

    pub fn object(&self, k: &SimplicialComplex) -> VecObj {
        homology(&reduced_chains(k, self.field), self.q).space
    }

    pub fn morphism(&self, f: &SimplicialMap) -> LinMap {
        induced_on_homology(&chain_map_of(f, self.field), self.q)
    }

    /// `E(Σf)`, computed on the shifted chain map.
    pub fn suspended_morphism(&self, f: &SimplicialMap) -> LinMap {
        induced_on_homology(&suspend_map(&chain_map_of(f, self.field)), self.q)
    }

    /// The cospan `E(C0) -> H_q(B) <- E(C1)` of a chain cospan.
    pub fn image_cospan(&self, c: &ChainCospan) -> Cospan {
        Cospan::new(
            induced_on_homology(&c.leg0, self.q),
            induced_on_homology(&c.leg1, self.q),
        )
        .expect("legs share a target")
    }

    /// The span `H_q(C0) <- H_q(M) -> H_q(C1)` of a chain span.
    pub fn image_span(&self, s: &ChainSpan) -> Span {
        Span::new(
            induced_on_homology(&s.p0, self.q),
            induced_on_homology(&s.p1, self.q),
        )
        .expect("legs share a source")
    }

    fn require_spanical(&self) -> Result<()> {
        if self.q < 1 {
            return Err(Error::DegreeTooLow(self.q));
        }
        Ok(())
    }
}

pub fn brown_object(e: &BrownFunctor, k: &SimplicialComplex) -> VecObj {
    e.object(k)
}

pub fn brown_morphism(e: &BrownFunctor, f: &SimplicialMap) -> LinMap {
    e.morphism(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtensionKind {
    Cospanical,
    Spanical,
}

/// The value of an extension on one space cospan, as a canonical class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedMorphism {
    pub kind: ExtensionKind,
    pub degree: i64,
    pub class: CanonicalClass,
    /// Bulk (or apex) dimension of the homology-level representative.
    pub bulk_dim: usize,
}

impl ExtendedMorphism {
    pub fn feet(&self) -> (VecObj, VecObj) {
        (self.class.foot0(), self.class.foot1())
    }
}

impl fmt::Display for ExtendedMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ExtensionKind::Cospanical => "cospanical",
            ExtensionKind::Spanical => "spanical",
        };
        write!(f, "{kind} extension in degree {}: {}", self.degree, self.class)
    }
}

pub fn cospanical_extend_chain(e: &BrownFunctor, c: &ChainCospan) -> ExtendedMorphism {
    let rep = e.image_cospan(c);
    ExtendedMorphism {
        kind: ExtensionKind::Cospanical,
        degree: e.q,
        class: canonical_cosp(&rep),
        bulk_dim: rep.bulk().dim,
    }
}

pub fn spanical_extend_chain(e: &BrownFunctor, c: &ChainCospan) -> Result<ExtendedMorphism> {
    e.require_spanical()?;
    let rep = e.image_span(&t_sigma(c)?);
    Ok(ExtendedMorphism {
        kind: ExtensionKind::Spanical,
        degree: e.q,
        class: canonical_span(&rep),
        bulk_dim: rep.apex().dim,
    })
}

pub fn cospanical_extend(e: &BrownFunctor, l: &SpaceCospan) -> ExtendedMorphism {
    cospanical_extend_chain(e, &ChainCospan::of_space(l, e.field))
}

pub fn spanical_extend(e: &BrownFunctor, l: &SpaceCospan) -> Result<ExtendedMorphism> {
    spanical_extend_chain(e, &ChainCospan::of_space(l, e.field))
}

/// One named check inside a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl Check {
    fn equal(name: &str, lhs: &CanonicalClass, rhs: &CanonicalClass) -> Check {
        let passed = lhs == rhs;
        Check {
            name: name.to_string(),
            passed,
            counterexample: (!passed).then(|| format!("{lhs} vs {rhs}")),
        }
    }

    fn witness(name: &str, found: bool, detail: impl FnOnce() -> String) -> Check {
        Check {
            name: name.to_string(),
            passed: found,
            counterexample: (!found).then(detail),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

/// Composite of images against image of the composite, on chain cospans.
pub fn verify_functoriality_chain(
    e: &BrownFunctor,
    a: &ChainCospan,
    b: &ChainCospan,
) -> Result<VerificationReport> {
    let composite = compose_chain_cospans(a, b)?;
    let mut report = VerificationReport::default();

    let lhs = compose_cosp(&e.image_cospan(a), &e.image_cospan(b))?;
    let rhs = e.image_cospan(&composite);
    let leq = leq_cosp(&lhs, &rhs)?;
    report.checks.push(Check::witness("cospanical leq", leq.is_some(), || {
        format!("no mono from {lhs} into {rhs}")
    }));
    report
        .checks
        .push(Check::equal("cospanical composition", &canonical_cosp(&lhs), &canonical_cosp(&rhs)));

    if e.q >= 1 {
        let lhs = compose_span(&e.image_span(&t_sigma(a)?), &e.image_span(&t_sigma(b)?))?;
        let rhs = e.image_span(&t_sigma(&composite)?);
        let leq = leq_span(&lhs, &rhs)?;
        report.checks.push(Check::witness("spanical leq", leq.is_some(), || {
            format!("no epi from {rhs} onto {lhs}")
        }));
        report
            .checks
            .push(Check::equal("spanical composition", &canonical_span(&lhs), &canonical_span(&rhs)));
    }
    Ok(report)
}

pub fn verify_extension_functoriality(
    e: &BrownFunctor,
    l: &SpaceCospan,
    m: &SpaceCospan,
) -> Result<VerificationReport> {
    if l.foot1() != m.foot0() {
        return Err(Error::FootMismatch(
            "the space cospans do not share a middle foot".to_string(),
        ));
    }
    verify_functoriality_chain(
        e,
        &ChainCospan::of_space(l, e.field),
        &ChainCospan::of_space(m, e.field),
    )
}

pub fn verify_extension_dagger(e: &BrownFunctor, l: &SpaceCospan) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let forward = cospanical_extend(e, l);
    let back = cospanical_extend(e, &l.dagger());
    report
        .checks
        .push(Check::equal("cospanical dagger", &back.class, &forward.class.dagger()));
    let rep = e.image_cospan(&ChainCospan::of_space(l, e.field));
    report.checks.push(Check::equal(
        "cospanical dagger representative",
        &back.class,
        &canonical_cosp(&dagger_cosp(&rep)),
    ));
    if e.q >= 1 {
        let forward = spanical_extend(e, l)?;
        let back = spanical_extend(e, &l.dagger())?;
        report
            .checks
            .push(Check::equal("spanical dagger", &back.class, &forward.class.dagger()));
    }
    Ok(report)
}

/// The iso `E(K) ⊕ E(K') -> E(K ∨ K')` induced by the summand inclusions.
fn wedge_identification(e: &BrownFunctor, k: &SimplicialComplex, k2: &SimplicialComplex) -> LinMap {
    let (a, b) = wedge_inclusions(k, k2);
    copair(&e.morphism(&a), &e.morphism(&b)).expect("same target")
}

fn inverse_map(f: &LinMap) -> Option<LinMap> {
    f.matrix().inverse().map(LinMap::from_matrix)
}

pub fn verify_extension_monoidal(
    e: &BrownFunctor,
    l: &SpaceCospan,
    m: &SpaceCospan,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let joint = cospanical_extend(e, &l.wedge(m));
    let separate = cospanical_extend(e, l).class.tensor(&cospanical_extend(e, m).class)?;
    let phi0 = wedge_identification(e, l.foot0(), m.foot0());
    let phi1 = wedge_identification(e, l.foot1(), m.foot1());
    match (inverse_map(&phi0), inverse_map(&phi1)) {
        (Some(i0), Some(i1)) => {
            let moved = joint.class.transport(&i0, &i1)?;
            report.checks.push(Check::equal("cospanical monoidal", &moved, &separate));
        }
        _ => report.checks.push(Check::witness("wedge identification", false, || {
            "summand inclusions do not induce an isomorphism".to_string()
        })),
    }
    Ok(report)
}

/// `Ê(ι(f)) = [ι(E f)]` and, for `q >= 1`, `Ě(ι(f)) = [ι(E Σf)]`.
pub fn verify_iota_compatibility(e: &BrownFunctor, f: &SimplicialMap) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let iota = SpaceCospan::iota(f);
    report.checks.push(Check::equal(
        "cospanical iota",
        &cospanical_extend(e, &iota).class,
        &canonical_cosp(&iota_cosp(&e.morphism(f))),
    ));
    if e.q >= 1 {
        report.checks.push(Check::equal(
            "spanical iota",
            &spanical_extend(e, &iota)?.class,
            &canonical_span(&iota_span(&e.suspended_morphism(f))),
        ));
    }
    Ok(report)
}

/// `Ê(Λ) = Ê(ι(f1))† ∘ Ê(ι(f0))`.
pub fn verify_iota_decomposition(e: &BrownFunctor, l: &SpaceCospan) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let decomposed = compose_cosp(
        &iota_cosp(&e.morphism(l.f0())),
        &dagger_cosp(&iota_cosp(&e.morphism(l.f1()))),
    )?;
    report.checks.push(Check::equal(
        "iota decomposition",
        &cospanical_extend(e, l).class,
        &canonical_cosp(&decomposed),
    ));
    Ok(report)
}

/// `Ě_q(Λ)` against the transpose of `Ê_{q-1}(Λ)`.
pub fn verify_transposition_compatibility(e: &BrownFunctor, l: &SpaceCospan) -> Result<VerificationReport> {
    e.require_spanical()?;
    let lower = BrownFunctor::new(e.field, e.q - 1)?;
    let transposed = transpose_cosp(&lower.image_cospan(&ChainCospan::of_space(l, e.field)));
    let mut report = VerificationReport::default();
    report.checks.push(Check::equal(
        "transposition compatibility",
        &spanical_extend(e, l)?.class,
        &canonical_span(&transposed),
    ));
    Ok(report)
}

/// Every extension check that applies to a single composable pair.
pub fn verify_all(e: &BrownFunctor, l: &SpaceCospan, m: &SpaceCospan) -> Result<VerificationReport> {
    let mut report = verify_extension_functoriality(e, l, m)?;
    report.extend(verify_extension_dagger(e, l)?);
    report.extend(verify_extension_dagger(e, m)?);
    report.extend(verify_extension_monoidal(e, l, m)?);
    report.extend(verify_iota_decomposition(e, l)?);
    report.extend(verify_iota_decomposition(e, m)?);
    for f in [l.f0(), l.f1(), m.f0(), m.f1()] {
        report.extend(verify_iota_compatibility(e, f)?);
    }
    if e.q >= 1 {
        report.extend(verify_transposition_compatibility(e, l)?);
        report.extend(verify_transposition_compatibility(e, m)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cw::wedge;
    use crate::exactlin::Matrix;

    fn s0() -> SimplicialComplex {
        SimplicialComplex::from_maximal(2, &[]).unwrap()
    }

    fn edge() -> SimplicialComplex {
        SimplicialComplex::simplex(1)
    }

    fn endpoints() -> SimplicialMap {
        SimplicialMap::new(s0(), edge(), vec![0, 1]).unwrap()
    }

    fn base() -> SimplicialMap {
        SimplicialMap::constant(&SimplicialComplex::point(), &edge())
    }

    #[test]
    fn objects_and_morphisms() {
        let f = Field::RATIONAL;
        let e1 = BrownFunctor::new(f, 1).unwrap();
        assert_eq!(e1.object(&SimplicialComplex::sphere_boundary(1)).dim, 1);
        assert_eq!(e1.object(&SimplicialComplex::point()).dim, 0);
        let e0 = BrownFunctor::new(f, 0).unwrap();
        assert_eq!(e0.object(&wedge(&s0(), &s0())).dim, 2);
        let tri = SimplicialComplex::sphere_boundary(1);
        let swap = SimplicialMap::new(tri.clone(), tri.clone(), vec![0, 2, 1]).unwrap();
        let composed = e1.morphism(&swap.after(&swap).unwrap());
        assert_eq!(composed, crate::abcat::compose(&e1.morphism(&swap), &e1.morphism(&swap)).unwrap());
        assert!(matches!(BrownFunctor::new(f, -1), Err(Error::DegreeTooLow(-1))));
    }

    #[test]
    fn cospanical_examples() {
        let f = Field::RATIONAL;
        let e0 = BrownFunctor::new(f, 0).unwrap();
        let id = SpaceCospan::iota(&SimplicialMap::identity(&s0()));
        assert_eq!(
            cospanical_extend(&e0, &id).class.basis(),
            &Matrix::from_rows(f, &[&[1], &[-1]])
        );
        let l = SpaceCospan::new(endpoints(), base()).unwrap();
        let x = cospanical_extend(&e0, &l);
        assert_eq!(x.feet().0.dim, 1);
        assert_eq!(x.feet().1.dim, 0);
        assert_eq!(x.class.basis(), &Matrix::from_rows(f, &[&[1]]));
    }

    #[test]
    fn spanical_examples() {
        let f = Field::GF3;
        let e1 = BrownFunctor::new(f, 1).unwrap();
        let id = SpaceCospan::iota(&SimplicialMap::identity(&s0()));
        let x = spanical_extend(&e1, &id).unwrap();
        assert_eq!(x.class.basis(), &Matrix::from_rows(f, &[&[1], &[1]]));
        let l = SpaceCospan::new(endpoints(), base()).unwrap();
        let x = spanical_extend(&e1, &l).unwrap();
        assert_eq!((x.feet().0.dim, x.feet().1.dim), (1, 0));
        assert_eq!(x.class.basis(), &Matrix::from_rows(f, &[&[1]]));
        let e0 = BrownFunctor::new(f, 0).unwrap();
        assert!(matches!(spanical_extend(&e0, &l), Err(Error::DegreeTooLow(0))));
    }

    #[test]
    fn circle_pair_passes_every_check() {
        for field in [Field::GF2, Field::GF3, Field::RATIONAL] {
            let l = SpaceCospan::new(base(), endpoints()).unwrap();
            let m = SpaceCospan::new(endpoints(), base()).unwrap();
            for q in 0..=2 {
                let e = BrownFunctor::new(field, q).unwrap();
                let report = verify_all(&e, &l, &m).unwrap();
                assert!(report.passed(), "{field} q={q}: {:?}", report.first_failure());
            }
        }
    }

    #[test]
    fn monoidal_on_independent_pair() {
        let f = Field::RATIONAL;
        let tri = SimplicialComplex::sphere_boundary(1);
        let l = SpaceCospan::new(endpoints(), base()).unwrap();
        let m = SpaceCospan::iota(&SimplicialMap::identity(&tri));
        for q in 0..=1 {
            let e = BrownFunctor::new(f, q).unwrap();
            assert!(verify_extension_monoidal(&e, &l, &m).unwrap().passed());
        }
    }
}
