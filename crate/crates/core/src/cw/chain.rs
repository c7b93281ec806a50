use crate::abcat::{LinMap, VecObj};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

use super::simplicial::{SimplicialComplex, SimplicialMap};

/// A bounded chain complex `C_hi -> ... -> C_lo` of finite-dimensional spaces.
///
/// `diffs[i]` is the differential `C_{lo+i+1} -> C_{lo+i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainComplex {
    field: Field,
    lo: i64,
    dims: Vec<usize>,
    diffs: Vec<Matrix>,
}

impl ChainComplex {
    pub fn new(field: Field, lo: i64, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<ChainComplex> {
        if diffs.len() != dims.len().saturating_sub(1) {
            return Err(Error::InvalidChain(format!(
                "{} differentials for {} chain groups",
                diffs.len(),
                dims.len()
            )));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), d.field().to_string()));
            }
            if d.shape() != (dims[i], dims[i + 1]) {
                return Err(Error::InvalidChain(format!(
                    "differential out of degree {} has shape {:?}, expected {:?}",
                    lo + i as i64 + 1,
                    d.shape(),
                    (dims[i], dims[i + 1])
                )));
            }
        }
        for i in 1..diffs.len() {
            if !diffs[i - 1].mul(&diffs[i])?.is_zero() {
                return Err(Error::InvalidChain(format!(
                    "d∘d ≠ 0 out of degree {}",
                    lo + i as i64 + 1
                )));
            }
        }
        Ok(ChainComplex {
            field,
            lo,
            dims,
            diffs,
        })
    }

    /// The complex with every group zero.
    pub fn zero(field: Field) -> ChainComplex {
        ChainComplex {
            field,
            lo: 0,
            dims: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// Build from per-degree dimensions and a differential oracle over `lo..=hi`.
    fn build(field: Field, lo: i64, hi: i64, dims: impl Fn(i64) -> usize, diff: impl Fn(i64) -> Matrix) -> ChainComplex {
        if hi < lo {
            return ChainComplex::zero(field);
        }
        let dims: Vec<usize> = (lo..=hi).map(&dims).collect();
        let diffs: Vec<Matrix> = (lo + 1..=hi).map(diff).collect();
        ChainComplex::new(field, lo, dims, diffs).expect("constructed complex is valid")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Top degree; `lo - 1` for the empty complex.
    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn dim(&self, q: i64) -> usize {
        if q < self.lo || q > self.hi() {
            0
        } else {
            self.dims[(q - self.lo) as usize]
        }
    }

    pub fn obj(&self, q: i64) -> VecObj {
        VecObj::new(self.field, self.dim(q))
    }

    /// `d_q : C_q -> C_{q-1}` as a matrix.
    pub fn d(&self, q: i64) -> Matrix {
        if q <= self.lo || q > self.hi() {
            Matrix::zeros(self.field, self.dim(q - 1), self.dim(q))
        } else {
            self.diffs[(q - self.lo - 1) as usize].clone()
        }
    }

    pub fn differential(&self, q: i64) -> LinMap {
        LinMap::from_matrix(self.d(q))
    }

    /// `C ⊕ D` degreewise.
    pub fn direct_sum(&self, other: &ChainComplex) -> Result<ChainComplex> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        let (lo, hi) = span_of(&[self, other]);
        Ok(ChainComplex::build(
            self.field,
            lo,
            hi,
            |q| self.dim(q) + other.dim(q),
            |q| self.d(q).direct_sum(&other.d(q)).expect("same field"),
        ))
    }
}

fn span_of(cs: &[&ChainComplex]) -> (i64, i64) {
    let nonempty: Vec<&&ChainComplex> = cs.iter().filter(|c| !c.dims.is_empty()).collect();
    if nonempty.is_empty() {
        return (0, -1);
    }
    let lo = nonempty.iter().map(|c| c.lo).min().expect("nonempty");
    let hi = nonempty.iter().map(|c| c.hi()).max().expect("nonempty");
    (lo, hi)
}

/// A degree-preserving map of complexes; `comps[i]` acts on degree `src.lo + i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainMap {
    src: ChainComplex,
    dst: ChainComplex,
    comps: Vec<Matrix>,
}

impl ChainMap {
    pub fn new(src: ChainComplex, dst: ChainComplex, comps: Vec<Matrix>) -> Result<ChainMap> {
        if src.field != dst.field {
            return Err(Error::FieldMismatch(src.field.to_string(), dst.field.to_string()));
        }
        if comps.len() != src.dims.len() {
            return Err(Error::InvalidChain(format!(
                "{} components for {} source degrees",
                comps.len(),
                src.dims.len()
            )));
        }
        let map = ChainMap { src, dst, comps };
        for q in map.src.lo..=map.src.hi() {
            let c = &map.comps[(q - map.src.lo) as usize];
            if c.shape() != (map.dst.dim(q), map.src.dim(q)) {
                return Err(Error::InvalidChain(format!(
                    "component in degree {q} has shape {:?}, expected {:?}",
                    c.shape(),
                    (map.dst.dim(q), map.src.dim(q))
                )));
            }
        }
        for q in map.src.lo..=map.src.hi() {
            let lhs = map.dst.d(q).mul(&map.component(q))?;
            let rhs = map.component(q - 1).mul(&map.src.d(q))?;
            if lhs != rhs {
                return Err(Error::InvalidChain(format!(
                    "map does not commute with the differential in degree {q}"
                )));
            }
        }
        Ok(map)
    }

    fn build(src: &ChainComplex, dst: &ChainComplex, comp: impl Fn(i64) -> Matrix) -> ChainMap {
        let comps = (src.lo..=src.hi()).map(comp).collect();
        ChainMap::new(src.clone(), dst.clone(), comps).expect("constructed chain map is valid")
    }

    pub fn identity(c: &ChainComplex) -> ChainMap {
        ChainMap::build(c, c, |q| Matrix::identity(c.field, c.dim(q)))
    }

    pub fn zero(src: &ChainComplex, dst: &ChainComplex) -> ChainMap {
        ChainMap::build(src, dst, |q| Matrix::zeros(src.field, dst.dim(q), src.dim(q)))
    }

    pub fn src(&self) -> &ChainComplex {
        &self.src
    }

    pub fn dst(&self) -> &ChainComplex {
        &self.dst
    }

    pub fn component(&self, q: i64) -> Matrix {
        if q < self.src.lo || q > self.src.hi() {
            Matrix::zeros(self.src.field, self.dst.dim(q), self.src.dim(q))
        } else {
            self.comps[(q - self.src.lo) as usize].clone()
        }
    }

    pub fn linmap(&self, q: i64) -> LinMap {
        LinMap::from_matrix(self.component(q))
    }

    pub fn neg(&self) -> ChainMap {
        ChainMap {
            src: self.src.clone(),
            dst: self.dst.clone(),
            comps: self.comps.iter().map(Matrix::neg).collect(),
        }
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &ChainMap) -> Result<ChainMap> {
        if f.dst != self.src {
            return Err(Error::CompositionMismatch(
                "chain maps do not compose".to_string(),
            ));
        }
        Ok(ChainMap::build(&f.src, &self.dst, |q| {
            self.component(q).mul(&f.component(q)).expect("shapes")
        }))
    }

    /// `(f, g) : C -> D ⊕ E`.
    pub fn pair(f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
        if f.src != g.src {
            return Err(Error::CompositionMismatch("pairing chain maps with different sources".to_string()));
        }
        let dst = f.dst.direct_sum(&g.dst)?;
        Ok(ChainMap::build(&f.src, &dst, |q| {
            f.component(q).vstack(&g.component(q)).expect("shapes")
        }))
    }

    /// `[f | g] : C ⊕ D -> E`.
    pub fn copair(f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
        if f.dst != g.dst {
            return Err(Error::CompositionMismatch("copairing chain maps with different targets".to_string()));
        }
        let src = f.src.direct_sum(&g.src)?;
        Ok(ChainMap::build(&src, &f.dst, |q| {
            f.component(q).hstack(&g.component(q)).expect("shapes")
        }))
    }
}

/// Inclusion and projection maps of `C ⊕ D`.
pub fn sum_inclusions(c: &ChainComplex, d: &ChainComplex) -> Result<(ChainMap, ChainMap)> {
    let s = c.direct_sum(d)?;
    let f = c.field;
    let left = ChainMap::build(c, &s, |q| {
        Matrix::identity(f, c.dim(q)).vstack(&Matrix::zeros(f, d.dim(q), c.dim(q))).expect("shapes")
    });
    let right = ChainMap::build(d, &s, |q| {
        Matrix::zeros(f, c.dim(q), d.dim(q)).vstack(&Matrix::identity(f, d.dim(q))).expect("shapes")
    });
    Ok((left, right))
}

pub fn sum_projections(c: &ChainComplex, d: &ChainComplex) -> Result<(ChainMap, ChainMap)> {
    let s = c.direct_sum(d)?;
    let f = c.field;
    let left = ChainMap::build(&s, c, |q| {
        Matrix::identity(f, c.dim(q)).hstack(&Matrix::zeros(f, c.dim(q), d.dim(q))).expect("shapes")
    });
    let right = ChainMap::build(&s, d, |q| {
        Matrix::zeros(f, d.dim(q), c.dim(q)).hstack(&Matrix::identity(f, d.dim(q))).expect("shapes")
    });
    Ok((left, right))
}

/// `ΣC`: degrees raised by one, differential negated.
pub fn suspension_shift(c: &ChainComplex) -> ChainComplex {
    ChainComplex {
        field: c.field,
        lo: c.lo + 1,
        dims: c.dims.clone(),
        diffs: c.diffs.iter().map(Matrix::neg).collect(),
    }
}

/// `Σφ`, the same components one degree up.
pub fn suspend_map(phi: &ChainMap) -> ChainMap {
    ChainMap {
        src: suspension_shift(&phi.src),
        dst: suspension_shift(&phi.dst),
        comps: phi.comps.clone(),
    }
}

/// `-id`, the chain model of the suspension-coordinate flip.
pub fn conjugate_sign(c: &ChainComplex) -> ChainMap {
    ChainMap::identity(c).neg()
}

/// The mapping cone of `φ : C -> D` with its structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingCone {
    pub cone: ChainComplex,
    /// `D -> cone φ`.
    pub inclusion: ChainMap,
    /// `cone φ -> ΣC`.
    pub projection: ChainMap,
}

/// `cone_q = D_q ⊕ C_{q-1}` with differential `[[d_D, φ], [0, -d_C]]`.
pub fn mapping_cone(phi: &ChainMap) -> MappingCone {
    let (c, d) = (&phi.src, &phi.dst);
    let f = c.field;
    let shifted = suspension_shift(c);
    let (lo, hi) = span_of(&[d, &shifted]);
    let cone = ChainComplex::build(
        f,
        lo,
        hi,
        |q| d.dim(q) + c.dim(q - 1),
        |q| {
            let top = d.d(q).hstack(&phi.component(q - 1)).expect("shapes");
            let bottom = Matrix::zeros(f, c.dim(q - 2), d.dim(q))
                .hstack(&c.d(q - 1).neg())
                .expect("shapes");
            top.vstack(&bottom).expect("shapes")
        },
    );
    let inclusion = ChainMap::build(d, &cone, |q| {
        Matrix::identity(f, d.dim(q)).vstack(&Matrix::zeros(f, c.dim(q - 1), d.dim(q))).expect("shapes")
    });
    let projection = ChainMap::build(&cone, &shifted, |q| {
        Matrix::zeros(f, c.dim(q - 1), d.dim(q))
            .hstack(&Matrix::identity(f, c.dim(q - 1)))
            .expect("shapes")
    });
    MappingCone {
        cone,
        inclusion,
        projection,
    }
}

/// The augmented simplicial chain complex: degree `-1` is the field, `d_0` sums vertices.
pub fn augmented_chain(k: &SimplicialComplex, field: Field) -> ChainComplex {
    let top = k.dim() as i64;
    ChainComplex::build(
        field,
        -1,
        top,
        |q| if q < 0 { 1 } else { k.count(q as usize) },
        |q| {
            if q == 0 {
                return Matrix::from_i64_fn(field, 1, k.count(0), |_, _| 1);
            }
            let q = q as usize;
            let faces = k.simplices(q - 1);
            let mut entries = vec![vec![0i64; k.count(q)]; faces.len()];
            for (j, s) in k.simplices(q).iter().enumerate() {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    let row = k.index_of(&face).expect("face-closed");
                    entries[row][j] = if i % 2 == 0 { 1 } else { -1 };
                }
            }
            Matrix::from_i64_rows(field, faces.len(), k.count(q), &entries).expect("shapes")
        },
    )
}

/// Sign of the permutation sorting `v`, or `None` if `v` has a repeat.
fn sort_sign(v: &[usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] == v[j] {
                return None;
            }
            if v[i] > v[j] {
                sign = -sign;
            }
        }
    }
    Some(sign)
}

/// `f_* : C̃(K) -> C̃(L)`; degenerate images go to zero.
pub fn chain_map_of(f: &SimplicialMap, field: Field) -> ChainMap {
    let src = augmented_chain(f.src(), field);
    let dst = augmented_chain(f.dst(), field);
    let (k, l) = (f.src(), f.dst());
    ChainMap::build(&src, &dst, |q| {
        if q < 0 {
            return Matrix::identity(field, 1);
        }
        let qu = q as usize;
        let mut entries = vec![vec![0i64; k.count(qu)]; l.count(qu)];
        for (j, s) in k.simplices(qu).iter().enumerate() {
            let image: Vec<usize> = s.iter().map(|&v| f.vertex_map()[v]).collect();
            if let Some(sign) = sort_sign(&image) {
                let mut sorted = image;
                sorted.sort_unstable();
                let row = l.index_of(&sorted).expect("valid simplicial map");
                entries[row][j] = sign;
            }
        }
        Matrix::from_i64_rows(field, l.count(qu), k.count(qu), &entries).expect("shapes")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cw::homology::homology;

    #[test]
    fn boundary_squares_to_zero() {
        for n in 0..4 {
            let k = SimplicialComplex::simplex(n);
            for field in [Field::GF2, Field::GF3, Field::RATIONAL] {
                let c = augmented_chain(&k, field);
                for q in c.lo()..=c.hi() {
                    assert!(c.d(q - 1).mul(&c.d(q)).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn rejects_non_complexes() {
        let f = Field::RATIONAL;
        let d1 = Matrix::from_rows(f, &[&[1]]);
        let r = ChainComplex::new(f, 0, vec![1, 1, 1], vec![d1.clone(), d1]);
        assert!(matches!(r, Err(Error::InvalidChain(_))));
    }

    #[test]
    fn chain_maps_of_simplicial_maps() {
        let f = Field::RATIONAL;
        let tri = SimplicialComplex::sphere_boundary(1);
        let id = chain_map_of(&SimplicialMap::identity(&tri), f);
        assert_eq!(id, ChainMap::identity(&augmented_chain(&tri, f)));
        let collapse = chain_map_of(&SimplicialMap::constant(&tri, &SimplicialComplex::point()), f);
        assert!(collapse.component(1).is_zero());
        let swap = SimplicialMap::new(tri.clone(), tri.clone(), vec![0, 2, 1]).unwrap();
        let s = chain_map_of(&swap, f);
        // edges (01, 02, 12) go to (02, 01, -12)
        assert_eq!(
            s.component(1),
            Matrix::from_rows(f, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]])
        );
    }

    #[test]
    fn shifts_and_signs() {
        let f = Field::RATIONAL;
        let s0 = augmented_chain(&SimplicialComplex::from_maximal(2, &[]).unwrap(), f);
        let shifted = suspension_shift(&s0);
        assert_eq!(homology(&shifted, 1).space.dim, 1);
        assert_eq!(suspension_shift(&shifted).lo(), s0.lo() + 2);
        let c = conjugate_sign(&shifted);
        assert_eq!(c.after(&c).unwrap(), ChainMap::identity(&shifted));
    }

    #[test]
    fn cones() {
        let f = Field::GF3;
        let tri = augmented_chain(&SimplicialComplex::sphere_boundary(1), f);
        let cone = mapping_cone(&ChainMap::identity(&tri)).cone;
        for q in -1..=3 {
            assert_eq!(homology(&cone, q).space.dim, 0);
        }
        let pt = augmented_chain(&SimplicialComplex::point(), f);
        let cone = mapping_cone(&ChainMap::zero(&pt, &pt)).cone;
        assert_eq!(cone.dim(0), 2);
        for q in -1..=2 {
            assert_eq!(homology(&cone, q).space.dim, 0);
        }
        let s0 = SimplicialComplex::from_maximal(2, &[]).unwrap();
        let edge = SimplicialComplex::simplex(1);
        let incl = chain_map_of(&SimplicialMap::new(s0, edge, vec![0, 1]).unwrap(), f);
        let cone = mapping_cone(&incl).cone;
        assert_eq!(homology(&cone, 1).space.dim, 1);
        assert_eq!(homology(&cone, 0).space.dim, 0);
    }
}
