use crate::error::{Error, Result};
use crate::exactlin::Field;

use super::chain::{
    augmented_chain, chain_map_of, conjugate_sign, mapping_cone, suspend_map, suspension_shift,
    sum_inclusions, sum_projections, ChainComplex, ChainMap,
};
use super::simplicial::SpaceCospan;

/// A cospan of chain complexes `C0 --leg0--> B <--leg1-- C1`, the chain-level shadow
/// of a space cospan and of its composites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCospan {
    pub leg0: ChainMap,
    pub leg1: ChainMap,
}

/// `C0 <--p0-- M --p1--> C1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSpan {
    pub p0: ChainMap,
    pub p1: ChainMap,
}

impl ChainCospan {
    pub fn new(leg0: ChainMap, leg1: ChainMap) -> Result<ChainCospan> {
        if leg0.dst() != leg1.dst() {
            return Err(Error::FootMismatch("chain cospan legs have different targets".to_string()));
        }
        Ok(ChainCospan { leg0, leg1 })
    }

    /// Reduced chains of the feet and bulk with the induced legs.
    pub fn of_space(l: &SpaceCospan, field: Field) -> ChainCospan {
        ChainCospan {
            leg0: chain_map_of(l.f0(), field),
            leg1: chain_map_of(l.f1(), field),
        }
    }

    pub fn foot0(&self) -> &ChainComplex {
        self.leg0.src()
    }

    pub fn foot1(&self) -> &ChainComplex {
        self.leg1.src()
    }

    pub fn bulk(&self) -> &ChainComplex {
        self.leg0.dst()
    }

    pub fn dagger(&self) -> ChainCospan {
        ChainCospan {
            leg0: self.leg1.clone(),
            leg1: self.leg0.clone(),
        }
    }
}

impl ChainSpan {
    pub fn mid(&self) -> &ChainComplex {
        self.p0.src()
    }

    pub fn foot0(&self) -> &ChainComplex {
        self.p0.dst()
    }

    pub fn foot1(&self) -> &ChainComplex {
        self.p1.dst()
    }
}

/// The composite glued along the shared foot: bulk `cone((leg1, -leg1'))`.
pub fn compose_chain_cospans(a: &ChainCospan, b: &ChainCospan) -> Result<ChainCospan> {
    if a.foot1() != b.foot0() {
        return Err(Error::FootMismatch(
            "the composed cospans do not share a middle foot".to_string(),
        ));
    }
    let psi = ChainMap::pair(&a.leg1, &b.leg0.neg())?;
    let cone = mapping_cone(&psi);
    let (i0, i1) = sum_inclusions(a.bulk(), b.bulk())?;
    let leg0 = cone.inclusion.after(&i0.after(&a.leg0)?)?;
    let leg2 = cone.inclusion.after(&i1.after(&b.leg1)?)?;
    ChainCospan::new(leg0, leg2)
}

/// Chain model of the composite of two space cospans.
pub fn space_compose_chain_model(l: &SpaceCospan, m: &SpaceCospan, field: Field) -> Result<ChainCospan> {
    if l.foot1() != m.foot0() {
        return Err(Error::FootMismatch(
            "the composed space cospans do not share a middle foot".to_string(),
        ));
    }
    compose_chain_cospans(&ChainCospan::of_space(l, field), &ChainCospan::of_space(m, field))
}

/// `ΣC0 <--τ∘p0-- cone([leg0 | leg1]) --p1--> ΣC1`.
pub fn t_sigma(c: &ChainCospan) -> Result<ChainSpan> {
    let phi = ChainMap::copair(&c.leg0, &c.leg1)?;
    let cone = mapping_cone(&phi);
    let (pr0, pr1) = sum_projections(c.foot0(), c.foot1())?;
    let to0 = suspend_map(&pr0).after(&cone.projection)?;
    let to1 = suspend_map(&pr1).after(&cone.projection)?;
    let tau = conjugate_sign(&suspension_shift(c.foot0()));
    Ok(ChainSpan {
        p0: tau.after(&to0)?,
        p1: to1,
    })
}

pub fn t_sigma_chain(l: &SpaceCospan, field: Field) -> ChainSpan {
    t_sigma(&ChainCospan::of_space(l, field)).expect("legs share a target")
}

/// Reduced chains of a single complex, exposed for feet comparisons.
pub fn reduced_chains(k: &super::SimplicialComplex, field: Field) -> ChainComplex {
    augmented_chain(k, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cw::homology::{homology, induced_on_homology};
    use crate::cw::simplicial::{SimplicialComplex, SimplicialMap};

    fn s0() -> SimplicialComplex {
        SimplicialComplex::from_maximal(2, &[]).unwrap()
    }

    fn endpoints() -> SimplicialMap {
        SimplicialMap::new(s0(), SimplicialComplex::simplex(1), vec![0, 1]).unwrap()
    }

    fn base_in(k: &SimplicialComplex) -> SimplicialMap {
        SimplicialMap::constant(&SimplicialComplex::point(), k)
    }

    #[test]
    fn two_edges_glue_to_a_circle() {
        let edge = SimplicialComplex::simplex(1);
        for field in [Field::GF2, Field::RATIONAL] {
            let l = SpaceCospan::new(base_in(&edge), endpoints()).unwrap();
            let m = SpaceCospan::new(endpoints(), base_in(&edge)).unwrap();
            let c = space_compose_chain_model(&l, &m, field).unwrap();
            assert_eq!(homology(c.bulk(), 1).space.dim, 1);
            assert_eq!(homology(c.bulk(), 0).space.dim, 0);

            let p = SpaceCospan::new(base_in(&edge), base_in(&edge)).unwrap();
            let c = space_compose_chain_model(&p, &p, field).unwrap();
            for q in -1..=2 {
                assert_eq!(homology(c.bulk(), q).space.dim, 0);
            }
        }
        let l = SpaceCospan::new(base_in(&edge), endpoints()).unwrap();
        assert!(matches!(
            space_compose_chain_model(&l, &l, Field::GF2),
            Err(Error::FootMismatch(_))
        ));
    }

    #[test]
    fn composing_with_identity_keeps_homology() {
        let f = Field::GF3;
        let tri = SimplicialComplex::sphere_boundary(1);
        let l = SpaceCospan::new(base_in(&tri), SimplicialMap::identity(&tri)).unwrap();
        let id = SpaceCospan::iota(&SimplicialMap::identity(&tri));
        let c = space_compose_chain_model(&l, &id, f).unwrap();
        for q in 0..=2 {
            assert_eq!(
                homology(c.bulk(), q).space.dim,
                homology(&reduced_chains(&tri, f), q).space.dim
            );
        }
    }

    #[test]
    fn t_sigma_examples() {
        let f = Field::RATIONAL;
        let id = t_sigma_chain(&SpaceCospan::iota(&SimplicialMap::identity(&s0())), f);
        assert_eq!(homology(id.mid(), 1).space.dim, 1);
        assert_eq!(induced_on_homology(&id.p0, 1).rank(), 1);
        assert_eq!(induced_on_homology(&id.p1, 1).rank(), 1);

        let edge = SimplicialComplex::simplex(1);
        let l = SpaceCospan::new(endpoints(), base_in(&edge)).unwrap();
        let t = t_sigma_chain(&l, f);
        assert_eq!(homology(t.mid(), 1).space.dim, 1);
        assert_eq!(induced_on_homology(&t.p0, 1).rank(), 1);
        assert!(induced_on_homology(&t.p1, 1).is_zero());

        let pts = SpaceCospan::new(base_in(&edge), base_in(&edge)).unwrap();
        let t = t_sigma_chain(&pts, f);
        for q in 1..=2 {
            assert_eq!(induced_on_homology(&t.p0, q).dst().dim, 0);
            assert_eq!(induced_on_homology(&t.p1, q).dst().dim, 0);
            assert_eq!(homology(t.mid(), q).space.dim, homology(&reduced_chains(&edge, f), q).space.dim);
        }
    }
}
