use std::collections::BTreeSet;

use crate::abcat::{copair, is_exact_at_middle, pair, LinMap, ThreeTermComplex, VecObj};
use crate::error::{Error, Result};
use crate::exactlin::{solve_left, Field, Matrix};

use super::chain::{augmented_chain, chain_map_of, ChainComplex, ChainMap};
use super::simplicial::{generated_subcomplex, relabeled_inclusion, SimplicialComplex};

/// `H_q = ker d_q / im d_{q+1}` with a fixed basis of cycle representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub degree: i64,
    pub space: VecObj,
    /// Representative cycles as columns, one per basis vector of `space`.
    pub cycles: Matrix,
    /// Canonical basis of the boundaries.
    pub boundaries: Matrix,
    /// A left inverse on cycles: `coords · z` is the class of the cycle `z`.
    pub coords: Matrix,
}

pub fn homology(c: &ChainComplex, q: i64) -> Homology {
    let field = c.field();
    let z = c.d(q).kernel_basis();
    let b = c.d(q + 1).image_basis();
    let nb = b.cols();
    let pivots = b.hstack(&z).expect("shapes").rref().pivots;
    let chosen: Vec<usize> = pivots.into_iter().filter(|&p| p >= nb).map(|p| p - nb).collect();
    let cycles = z.select_cols(&chosen);
    let h = cycles.cols();
    let basis = b.hstack(&cycles).expect("shapes");
    let target = Matrix::zeros(field, h, nb)
        .hstack(&Matrix::identity(field, h))
        .expect("shapes");
    let coords = solve_left(&basis, &target)
        .expect("shapes")
        .expect("independent columns admit a left inverse");
    Homology {
        degree: q,
        space: VecObj::new(field, h),
        cycles,
        boundaries: b,
        coords,
    }
}

/// `H_q(φ)` in the representative bases of source and target.
pub fn induced_on_homology(phi: &ChainMap, q: i64) -> LinMap {
    let hs = homology(phi.src(), q);
    let ht = homology(phi.dst(), q);
    let m = ht
        .coords
        .mul(&phi.component(q))
        .and_then(|m| m.mul(&hs.cycles))
        .expect("shapes");
    LinMap::new(hs.space, ht.space, m).expect("shapes")
}

fn closure(faces: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for s in faces {
        let mut s = s.clone();
        s.sort_unstable();
        s.dedup();
        let n = s.len();
        for mask in 1u64..(1u64 << n) {
            out.insert((0..n).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect::<Vec<_>>());
        }
    }
    out
}

/// Exactness of `E(T) -> E(K0) ⊕ E(K1) -> E(L)` in degree `q`.
///
/// `k0`, `k1` and `t` are generating simplices in the vertex labels of `l`; their
/// closures, with the basepoint adjoined to each, must satisfy `K0 ∪ K1 = L` and
/// `K0 ∩ K1 = T`.
pub fn mv_exactness_check(
    l: &SimplicialComplex,
    k0: &[Vec<usize>],
    k1: &[Vec<usize>],
    t: &[Vec<usize>],
    q: i64,
    field: Field,
) -> Result<bool> {
    let point = vec![vec![0]];
    let with_base = |faces: &[Vec<usize>]| {
        let mut v = faces.to_vec();
        v.extend(point.iter().cloned());
        v
    };
    let (c0, c1, ct) = (closure(&with_base(k0)), closure(&with_base(k1)), closure(&with_base(t)));
    let cl: BTreeSet<Vec<usize>> = l.all_simplices().cloned().collect();
    let union: BTreeSet<Vec<usize>> = c0.union(&c1).cloned().collect();
    if union != cl {
        return Err(Error::NotATriad("K0 ∪ K1 is not the whole complex".to_string()));
    }
    let inter: BTreeSet<Vec<usize>> = c0.intersection(&c1).cloned().collect();
    if inter != ct {
        return Err(Error::NotATriad("K0 ∩ K1 differs from T".to_string()));
    }
    let (kt, lt) = generated_subcomplex(l, &with_base(t))?;
    let (ka, la) = generated_subcomplex(l, &with_base(k0))?;
    let (kb, lb) = generated_subcomplex(l, &with_base(k1))?;
    let lall: Vec<usize> = (0..l.n_vertices()).collect();
    let e = |m| induced_on_homology(&chain_map_of(&m, field), q);
    let ta = e(relabeled_inclusion(&kt, &lt, &ka, &la)?);
    let tb = e(relabeled_inclusion(&kt, &lt, &kb, &lb)?);
    let al = e(relabeled_inclusion(&ka, &la, l, &lall)?);
    let bl = e(relabeled_inclusion(&kb, &lb, l, &lall)?);
    let u = pair(&ta, &tb.neg())?;
    let v = copair(&al, &bl)?;
    Ok(is_exact_at_middle(&ThreeTermComplex::new(u, v)?))
}

/// `dim H_q(cone φ) = dim coker H_q(φ) + dim ker H_{q-1}(φ)`.
pub fn cone_rank_identity(phi: &ChainMap, cone: &ChainComplex, q: i64) -> bool {
    let hq = induced_on_homology(phi, q);
    let hq1 = induced_on_homology(phi, q - 1);
    let coker = hq.dst().dim - hq.rank();
    let ker = hq1.src().dim - hq1.rank();
    homology(cone, q).space.dim == coker + ker
}

pub fn reduced_homology_dims(k: &SimplicialComplex, field: Field) -> Vec<usize> {
    let c = augmented_chain(k, field);
    (0..=k.dim() as i64).map(|q| homology(&c, q).space.dim).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cw::chain::mapping_cone;
    use crate::cw::simplicial::SimplicialMap;

    #[test]
    fn sphere_and_point_homology() {
        for field in [Field::GF2, Field::GF3, Field::RATIONAL] {
            assert_eq!(reduced_homology_dims(&SimplicialComplex::point(), field), vec![0]);
            assert_eq!(reduced_homology_dims(&SimplicialComplex::sphere_boundary(1), field), vec![0, 1]);
            let s0 = SimplicialComplex::from_maximal(2, &[]).unwrap();
            assert_eq!(reduced_homology_dims(&s0, field), vec![1]);
            let c = augmented_chain(&SimplicialComplex::sphere_boundary(1), field);
            assert_eq!(c.d(1).rank(), 2);
        }
    }

    #[test]
    fn induced_maps() {
        let f = Field::RATIONAL;
        let tri = SimplicialComplex::sphere_boundary(1);
        let id = induced_on_homology(&chain_map_of(&SimplicialMap::identity(&tri), f), 1);
        assert_eq!(id.matrix(), &Matrix::identity(f, 1));
        let collapse = SimplicialMap::constant(&tri, &SimplicialComplex::point());
        assert!(induced_on_homology(&chain_map_of(&collapse, f), 1).is_zero());
        let swap = SimplicialMap::new(tri.clone(), tri.clone(), vec![0, 2, 1]).unwrap();
        assert_eq!(
            induced_on_homology(&chain_map_of(&swap, f), 1).matrix(),
            &Matrix::from_rows(f, &[&[-1]])
        );
    }

    #[test]
    fn mayer_vietoris_examples() {
        let f = Field::RATIONAL;
        let circle = SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        let upper = [vec![0, 1], vec![1, 2]];
        let lower = [vec![2, 3], vec![0, 3]];
        let ends = [vec![0], vec![2]];
        for q in 0..=2 {
            assert!(mv_exactness_check(&circle, &upper, &lower, &ends, q, f).unwrap());
        }
        let all = circle.maximal_simplices();
        assert!(mv_exactness_check(&circle, &all, &all, &all, 1, f).unwrap());
        let tri = SimplicialComplex::simplex(2);
        assert!(mv_exactness_check(&tri, &[vec![0, 1, 2]], &[vec![1, 2]], &[vec![1, 2]], 1, f).unwrap());
        assert!(matches!(
            mv_exactness_check(&circle, &upper, &lower, &[vec![0]], 0, f),
            Err(Error::NotATriad(_))
        ));
        assert!(matches!(
            mv_exactness_check(&circle, &upper, &upper, &upper, 0, f),
            Err(Error::NotATriad(_))
        ));
    }

    #[test]
    fn cone_rank_identity_on_inclusion() {
        let f = Field::GF2;
        let s0 = SimplicialComplex::from_maximal(2, &[]).unwrap();
        let edge = SimplicialComplex::simplex(1);
        let phi = chain_map_of(&SimplicialMap::new(s0, edge, vec![0, 1]).unwrap(), f);
        let cone = mapping_cone(&phi).cone;
        for q in -1..=2 {
            assert!(cone_rank_identity(&phi, &cone, q));
        }
    }

    #[test]
    fn subdivision_preserves_homology() {
        let k = SimplicialComplex::from_maximal(4, &[vec![0, 1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        let split = k.subdivide_edge(1, 2).unwrap().subdivide_edge(0, 3).unwrap();
        for f in [Field::GF2, Field::RATIONAL] {
            let a = reduced_homology_dims(&k, f);
            let b = reduced_homology_dims(&split, f);
            assert_eq!(a, b);
        }
    }
}
