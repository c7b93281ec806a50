use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simplicial complex on vertices `0..n_vertices`, pointed at vertex 0.
///
/// Simplices are stored per dimension as sorted vertex lists in lexicographic order;
/// that order fixes the chain basis and the orientation of every simplex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n_vertices: usize,
    simplices: Vec<Vec<Vec<usize>>>,
}

fn faces_of(simplex: &[usize], out: &mut [BTreeSet<Vec<usize>>]) {
    let n = simplex.len();
    for mask in 1u32..(1u32 << n) {
        let face: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| simplex[i]).collect();
        out[face.len() - 1].insert(face);
    }
}

impl SimplicialComplex {
    /// Face closure of the given simplices; every vertex becomes a 0-simplex.
    pub fn from_maximal(n_vertices: usize, maximal: &[Vec<usize>]) -> Result<SimplicialComplex> {
        if n_vertices == 0 {
            return Err(Error::BadVertexIndex {
                index: 0,
                n_vertices,
            });
        }
        let mut cleaned = Vec::with_capacity(maximal.len());
        let mut top = 1;
        for s in maximal {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            if let Some(&bad) = s.iter().find(|&&v| v >= n_vertices) {
                return Err(Error::BadVertexIndex {
                    index: bad,
                    n_vertices,
                });
            }
            if s.len() > 20 {
                return Err(Error::InvalidChain(format!(
                    "simplex with {} vertices is too large",
                    s.len()
                )));
            }
            top = top.max(s.len());
            cleaned.push(s);
        }
        let mut sets = vec![BTreeSet::new(); top];
        for v in 0..n_vertices {
            sets[0].insert(vec![v]);
        }
        for s in cleaned.iter().filter(|s| !s.is_empty()) {
            faces_of(s, &mut sets);
        }
        Ok(SimplicialComplex {
            n_vertices,
            simplices: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn point() -> SimplicialComplex {
        SimplicialComplex::from_maximal(1, &[]).expect("one vertex")
    }

    /// The full simplex on `n + 1` vertices.
    pub fn simplex(n: usize) -> SimplicialComplex {
        SimplicialComplex::from_maximal(n + 1, &[(0..=n).collect()]).expect("valid")
    }

    /// The boundary of the `(n + 1)`-simplex, a model of the `n`-sphere.
    pub fn sphere_boundary(n: usize) -> SimplicialComplex {
        let verts: Vec<usize> = (0..n + 2).collect();
        let facets: Vec<Vec<usize>> = (0..n + 2)
            .map(|skip| verts.iter().copied().filter(|&v| v != skip).collect())
            .collect();
        SimplicialComplex::from_maximal(n + 2, &facets).expect("valid")
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn basepoint(&self) -> usize {
        0
    }

    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    /// The `q`-simplices in basis order (empty outside `0..=dim`).
    pub fn simplices(&self, q: usize) -> &[Vec<usize>] {
        self.simplices.get(q).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, q: usize) -> usize {
        self.simplices(q).len()
    }

    /// Total number of nonempty simplices.
    pub fn size(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    /// Position of a sorted simplex in the basis of its dimension.
    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        if simplex.is_empty() {
            return None;
        }
        self.simplices(simplex.len() - 1)
            .binary_search_by(|s| s.as_slice().cmp(simplex))
            .ok()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        let mut s = simplex.to_vec();
        s.sort_unstable();
        s.dedup();
        self.index_of(&s).is_some()
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter().flatten()
    }

    /// Simplices that are not a proper face of another simplex, by dimension then lex.
    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for q in 0..=self.dim() {
            for s in self.simplices(q) {
                let covered = self.simplices(q + 1).iter().any(|t| s.iter().all(|v| t.contains(v)));
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// The join with a new apex vertex `n_vertices`; always contractible.
    pub fn cone(&self) -> SimplicialComplex {
        let apex = self.n_vertices;
        let facets: Vec<Vec<usize>> = self
            .maximal_simplices()
            .into_iter()
            .map(|mut s| {
                s.push(apex);
                s
            })
            .collect();
        SimplicialComplex::from_maximal(apex + 1, &facets).expect("valid")
    }

    /// Split the edge `{a, b}` by a new vertex `n_vertices`.
    pub fn subdivide_edge(&self, a: usize, b: usize) -> Result<SimplicialComplex> {
        let (a, b) = (a.min(b), a.max(b));
        if a == b || self.index_of(&[a, b]).is_none() {
            return Err(Error::InvalidChain(format!("({a}, {b}) is not an edge")));
        }
        let m = self.n_vertices;
        let mut facets = Vec::new();
        for s in self.maximal_simplices() {
            if s.contains(&a) && s.contains(&b) {
                for drop in [a, b] {
                    let mut t: Vec<usize> = s.iter().copied().filter(|&v| v != drop).collect();
                    t.push(m);
                    facets.push(t);
                }
            } else {
                facets.push(s);
            }
        }
        SimplicialComplex::from_maximal(m + 1, &facets)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex on {} vertices, maximal {:?}", self.n_vertices, self.maximal_simplices())
    }
}

/// A pointed simplicial map given by its vertex assignment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialMap {
    src: SimplicialComplex,
    dst: SimplicialComplex,
    vertex_map: Vec<usize>,
}

impl SimplicialMap {
    pub fn new(src: SimplicialComplex, dst: SimplicialComplex, vertex_map: Vec<usize>) -> Result<SimplicialMap> {
        if vertex_map.len() != src.n_vertices {
            return Err(Error::InvalidSimplicialMap(format!(
                "{} vertex images for {} vertices",
                vertex_map.len(),
                src.n_vertices
            )));
        }
        if let Some(&bad) = vertex_map.iter().find(|&&v| v >= dst.n_vertices) {
            return Err(Error::InvalidSimplicialMap(format!(
                "image vertex {bad} outside target with {} vertices",
                dst.n_vertices
            )));
        }
        if vertex_map[0] != 0 {
            return Err(Error::InvalidSimplicialMap(format!(
                "basepoint sent to {}",
                vertex_map[0]
            )));
        }
        for s in src.maximal_simplices() {
            let image: Vec<usize> = s.iter().map(|&v| vertex_map[v]).collect();
            if !dst.contains(&image) {
                return Err(Error::InvalidSimplicialMap(format!(
                    "simplex {s:?} maps to {image:?}, which is not a simplex of the target"
                )));
            }
        }
        Ok(SimplicialMap {
            src,
            dst,
            vertex_map,
        })
    }

    pub fn identity(k: &SimplicialComplex) -> SimplicialMap {
        SimplicialMap {
            src: k.clone(),
            dst: k.clone(),
            vertex_map: (0..k.n_vertices).collect(),
        }
    }

    /// Everything to the basepoint.
    pub fn constant(src: &SimplicialComplex, dst: &SimplicialComplex) -> SimplicialMap {
        SimplicialMap {
            src: src.clone(),
            dst: dst.clone(),
            vertex_map: vec![0; src.n_vertices],
        }
    }

    pub fn src(&self) -> &SimplicialComplex {
        &self.src
    }

    pub fn dst(&self) -> &SimplicialComplex {
        &self.dst
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &SimplicialMap) -> Result<SimplicialMap> {
        if f.dst != self.src {
            return Err(Error::CompositionMismatch(
                "simplicial maps do not compose".to_string(),
            ));
        }
        Ok(SimplicialMap {
            src: f.src.clone(),
            dst: self.dst.clone(),
            vertex_map: f.vertex_map.iter().map(|&v| self.vertex_map[v]).collect(),
        })
    }
}

/// Renumbering of the second summand of a wedge: its basepoint goes to 0 and the
/// remaining vertices follow the first complex's vertices.
fn wedge_shift(first: usize, v: usize) -> usize {
    if v == 0 {
        0
    } else {
        first + v - 1
    }
}

/// `K ∨ K'`: disjoint union with basepoints identified, `K`'s vertices first.
pub fn wedge(k: &SimplicialComplex, k2: &SimplicialComplex) -> SimplicialComplex {
    let n = k.n_vertices;
    let mut facets = k.maximal_simplices();
    for s in k2.maximal_simplices() {
        facets.push(s.iter().map(|&v| wedge_shift(n, v)).collect());
    }
    SimplicialComplex::from_maximal(n + k2.n_vertices - 1, &facets).expect("valid wedge")
}

/// The summand inclusions `K -> K ∨ K'` and `K' -> K ∨ K'`.
pub fn wedge_inclusions(k: &SimplicialComplex, k2: &SimplicialComplex) -> (SimplicialMap, SimplicialMap) {
    let w = wedge(k, k2);
    let n = k.n_vertices;
    let left = SimplicialMap {
        src: k.clone(),
        dst: w.clone(),
        vertex_map: (0..n).collect(),
    };
    let right = SimplicialMap {
        src: k2.clone(),
        dst: w,
        vertex_map: (0..k2.n_vertices).map(|v| wedge_shift(n, v)).collect(),
    };
    (left, right)
}

/// `f ∨ g : K ∨ K' -> L ∨ L'`.
pub fn wedge_maps(f: &SimplicialMap, g: &SimplicialMap) -> SimplicialMap {
    let src = wedge(&f.src, &g.src);
    let dst = wedge(&f.dst, &g.dst);
    let m = f.dst.n_vertices;
    let mut vertex_map = f.vertex_map.clone();
    for v in 1..g.src.n_vertices {
        vertex_map.push(wedge_shift(m, g.vertex_map[v]));
    }
    debug_assert_eq!(vertex_map.len(), src.n_vertices);
    SimplicialMap {
        src,
        dst,
        vertex_map,
    }
}

/// The closed subcomplex generated by `faces` (vertex labels of `l`), relabeled onto
/// `0..m` in increasing label order, together with the list of labels used.
pub fn generated_subcomplex(
    l: &SimplicialComplex,
    faces: &[Vec<usize>],
) -> Result<(SimplicialComplex, Vec<usize>)> {
    let mut labels: BTreeSet<usize> = BTreeSet::new();
    labels.insert(0);
    for s in faces {
        if !l.contains(s) {
            return Err(Error::NotATriad(format!("{s:?} is not a simplex of the ambient complex")));
        }
        labels.extend(s.iter().copied());
    }
    let labels: Vec<usize> = labels.into_iter().collect();
    let relabel = |v: usize| labels.binary_search(&v).expect("label present");
    let facets: Vec<Vec<usize>> = faces.iter().map(|s| s.iter().map(|&v| relabel(v)).collect()).collect();
    Ok((SimplicialComplex::from_maximal(labels.len(), &facets)?, labels))
}

/// Inclusion of one relabeled subcomplex into another (both from [`generated_subcomplex`]).
pub fn relabeled_inclusion(
    small: &SimplicialComplex,
    small_labels: &[usize],
    big: &SimplicialComplex,
    big_labels: &[usize],
) -> Result<SimplicialMap> {
    let vertex_map = small_labels
        .iter()
        .map(|v| {
            big_labels
                .binary_search(v)
                .map_err(|_| Error::NotATriad(format!("vertex {v} missing from the larger subcomplex")))
        })
        .collect::<Result<Vec<usize>>>()?;
    SimplicialMap::new(small.clone(), big.clone(), vertex_map)
}

/// `K0 --f0--> L <--f1-- K1` in pointed simplicial complexes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceCospan {
    f0: SimplicialMap,
    f1: SimplicialMap,
}

impl SpaceCospan {
    pub fn new(f0: SimplicialMap, f1: SimplicialMap) -> Result<SpaceCospan> {
        if f0.dst != f1.dst {
            return Err(Error::InvalidSimplicialMap(
                "space cospan legs have different targets".to_string(),
            ));
        }
        Ok(SpaceCospan { f0, f1 })
    }

    /// `K --f--> L <--id-- L`.
    pub fn iota(f: &SimplicialMap) -> SpaceCospan {
        SpaceCospan {
            f0: f.clone(),
            f1: SimplicialMap::identity(&f.dst),
        }
    }

    pub fn f0(&self) -> &SimplicialMap {
        &self.f0
    }

    pub fn f1(&self) -> &SimplicialMap {
        &self.f1
    }

    pub fn foot0(&self) -> &SimplicialComplex {
        &self.f0.src
    }

    pub fn foot1(&self) -> &SimplicialComplex {
        &self.f1.src
    }

    pub fn bulk(&self) -> &SimplicialComplex {
        &self.f0.dst
    }

    pub fn dagger(&self) -> SpaceCospan {
        SpaceCospan {
            f0: self.f1.clone(),
            f1: self.f0.clone(),
        }
    }

    pub fn wedge(&self, other: &SpaceCospan) -> SpaceCospan {
        SpaceCospan {
            f0: wedge_maps(&self.f0, &other.f0),
            f1: wedge_maps(&self.f1, &other.f1),
        }
    }
}

/// `dim K0 <= d - 1`, `dim K1 <= d - 1` and `dim L <= d`; `None` means no bound.
pub fn dimension_filter(l: &SpaceCospan, d: Option<usize>) -> bool {
    match d {
        None => true,
        Some(d) => {
            l.foot0().dim() < d && l.foot1().dim() < d && l.bulk().dim() <= d
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_examples() {
        let tri = SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!((tri.count(0), tri.count(1), tri.dim()), (3, 3, 1));
        assert_eq!(tri, SimplicialComplex::sphere_boundary(1));
        let pt = SimplicialComplex::point();
        assert_eq!((pt.size(), pt.dim()), (1, 0));
        let full = SimplicialComplex::simplex(2);
        assert_eq!(full.size(), 7);
        assert_eq!(full.simplices(1), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(matches!(
            SimplicialComplex::from_maximal(2, &[vec![0, 2]]),
            Err(Error::BadVertexIndex { index: 2, n_vertices: 2 })
        ));
    }

    #[test]
    fn maximal_simplices_round_trip() {
        let k = SimplicialComplex::from_maximal(4, &[vec![0, 1, 2], vec![2, 3], vec![1, 2]]).unwrap();
        assert_eq!(k.maximal_simplices(), vec![vec![2, 3], vec![0, 1, 2]]);
        assert_eq!(SimplicialComplex::from_maximal(4, &k.maximal_simplices()).unwrap(), k);
    }

    #[test]
    fn map_validation() {
        let edge = SimplicialComplex::simplex(1);
        let s0 = SimplicialComplex::from_maximal(2, &[]).unwrap();
        assert!(SimplicialMap::new(s0.clone(), edge.clone(), vec![0, 1]).is_ok());
        assert!(SimplicialMap::new(s0.clone(), edge.clone(), vec![1, 0]).is_err());
        let two_edges = SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2]]).unwrap();
        assert!(matches!(
            SimplicialMap::new(edge.clone(), two_edges, vec![0, 2]),
            Err(Error::InvalidSimplicialMap(_))
        ));
        let id = SimplicialMap::identity(&edge);
        let f = SimplicialMap::new(s0, edge, vec![0, 1]).unwrap();
        assert_eq!(id.after(&f).unwrap(), f);
    }

    #[test]
    fn wedges() {
        let s0 = SimplicialComplex::from_maximal(2, &[]).unwrap();
        let w = wedge(&s0, &s0);
        assert_eq!(w.n_vertices(), 3);
        let pt = SimplicialComplex::point();
        let k = SimplicialComplex::sphere_boundary(1);
        assert_eq!(wedge(&pt, &k), k);
        assert_eq!(wedge(&k, &pt), k);
        let id = wedge_maps(&SimplicialMap::identity(&k), &SimplicialMap::identity(&s0));
        assert_eq!(id, SimplicialMap::identity(&wedge(&k, &s0)));
        let (a, b) = wedge_inclusions(&k, &s0);
        assert!(SimplicialMap::new(a.src.clone(), a.dst.clone(), a.vertex_map.clone()).is_ok());
        assert!(SimplicialMap::new(b.src.clone(), b.dst.clone(), b.vertex_map.clone()).is_ok());
    }

    #[test]
    fn subdivision_and_filter() {
        let edge = SimplicialComplex::simplex(1);
        let split = edge.subdivide_edge(0, 1).unwrap();
        assert_eq!(split.maximal_simplices(), vec![vec![0, 2], vec![1, 2]]);
        let s0 = SimplicialComplex::from_maximal(2, &[]).unwrap();
        let l = SpaceCospan::new(
            SimplicialMap::new(s0, edge.clone(), vec![0, 1]).unwrap(),
            SimplicialMap::constant(&SimplicialComplex::point(), &edge),
        )
        .unwrap();
        assert!(dimension_filter(&l, Some(1)));
        assert!(!dimension_filter(&l, Some(0)));
        assert!(dimension_filter(&l, None));
    }
}
