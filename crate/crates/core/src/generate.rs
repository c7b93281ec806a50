//! Seeded random instances for the property suites.

use num::{BigInt, BigRational};
use rand::Rng;

use crate::abcat::{cokernel, compose, inclusion_left, inclusion_right, is_mono, pair, LinMap, VecObj};
use crate::cospan::Cospan;
use crate::cw::{SimplicialComplex, SimplicialMap, SpaceCospan};
use crate::exactlin::{Field, Matrix, Scalar};

pub fn random_scalar<R: Rng>(field: Field, rng: &mut R) -> Scalar {
    if field.is_rational() {
        // Mostly small integers, sometimes halves and thirds.
        let num = rng.gen_range(-3i64..=3);
        let den = *[1i64, 1, 1, 2, 3].get(rng.gen_range(0..5)).expect("index");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    } else {
        Scalar::Residue(rng.gen_range(0..field.characteristic()) as u32)
    }
}

pub fn random_matrix<R: Rng>(field: Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    // Sparse-ish entries make kernels and degenerate cases common.
    let entries = (0..rows * cols)
        .map(|_| {
            if rng.gen_bool(0.35) {
                Scalar::Rational(BigRational::from_integer(0.into()))
            } else {
                random_scalar(field, rng)
            }
        })
        .map(|s| field.coerce(&s).expect("coercible"))
        .collect();
    Matrix::from_scalars(field, rows, cols, entries).expect("shape")
}

pub fn random_map<R: Rng>(src: VecObj, dst: VecObj, rng: &mut R) -> LinMap {
    LinMap::from_matrix(random_matrix(src.field, dst.dim, src.dim, rng))
}

pub fn random_mono<R: Rng>(src: VecObj, dst: VecObj, rng: &mut R) -> LinMap {
    assert!(src.dim <= dst.dim, "no mono from a larger space");
    loop {
        let f = random_map(src, dst, rng);
        if is_mono(&f) {
            return f;
        }
    }
}

pub fn random_iso<R: Rng>(a: VecObj, rng: &mut R) -> LinMap {
    random_mono(a, a, rng)
}

pub fn random_cospan<R: Rng>(a0: VecObj, a1: VecObj, bulk: usize, rng: &mut R) -> Cospan {
    let b = VecObj::new(a0.field, bulk);
    Cospan::new(random_map(a0, b, rng), random_map(a1, b, rng)).expect("shared bulk")
}

/// Size limits for random linear data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearSizes {
    pub max_foot: usize,
    pub max_bulk: usize,
}

impl Default for LinearSizes {
    fn default() -> Self {
        LinearSizes {
            max_foot: 3,
            max_bulk: 4,
        }
    }
}

pub fn random_obj<R: Rng>(field: Field, max: usize, rng: &mut R) -> VecObj {
    VecObj::new(field, rng.gen_range(0..=max))
}

/// A cospan with random feet and bulk within the limits.
pub fn random_cospan_in<R: Rng>(field: Field, sizes: LinearSizes, rng: &mut R) -> Cospan {
    let a0 = random_obj(field, sizes.max_foot, rng);
    let a1 = random_obj(field, sizes.max_foot, rng);
    random_cospan(a0, a1, rng.gen_range(0..=sizes.max_bulk), rng)
}

/// A cospan between the given feet with random bulk.
pub fn random_cospan_between<R: Rng>(a0: VecObj, a1: VecObj, sizes: LinearSizes, rng: &mut R) -> Cospan {
    random_cospan(a0, a1, rng.gen_range(0..=sizes.max_bulk), rng)
}

/// A cospan above `l`: its legs pushed along a random mono into a bulk at most two larger.
pub fn random_above<R: Rng>(l: &Cospan, rng: &mut R) -> (Cospan, LinMap) {
    let extra = rng.gen_range(0..=2);
    let bigger = VecObj::new(l.field(), l.bulk().dim + extra);
    let g = random_mono(l.bulk(), bigger, rng);
    let up = Cospan::new(compose(&g, l.f0()).expect("shapes"), compose(&g, l.f1()).expect("shapes"))
        .expect("shared bulk");
    (up, g)
}

/// An exact square with random `f : A -> B`, `f' : A -> C`, completed by the pushout
/// and followed by a random mono out of it.
pub fn random_exact_square<R: Rng>(
    field: Field,
    sizes: LinearSizes,
    rng: &mut R,
) -> (LinMap, LinMap, LinMap, LinMap) {
    let a = random_obj(field, sizes.max_foot, rng);
    let b = random_obj(field, sizes.max_bulk, rng);
    let c = random_obj(field, sizes.max_bulk, rng);
    let f = random_map(a, b, rng);
    let fp = random_map(a, c, rng);
    let q = cokernel(&pair(&f, &fp.neg()).expect("same source"));
    let d = q.dst();
    let extra = VecObj::new(field, d.dim + rng.gen_range(0..=1));
    let m = random_mono(d, extra, rng);
    let g = compose(&m, &compose(&q, &inclusion_left(b, c)).expect("shapes")).expect("shapes");
    let gp = compose(&m, &compose(&q, &inclusion_right(b, c)).expect("shapes")).expect("shapes");
    (f, fp, g, gp)
}

/// Size limits for random simplicial data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpaceSizes {
    pub max_vertices: usize,
    pub max_simplex: usize,
    pub max_facets: usize,
}

impl Default for SpaceSizes {
    fn default() -> Self {
        SpaceSizes {
            max_vertices: 8,
            max_simplex: 4,
            max_facets: 5,
        }
    }
}

fn random_facet<R: Rng>(n: usize, max_size: usize, rng: &mut R) -> Vec<usize> {
    let size = rng.gen_range(1..=max_size.min(n));
    let mut verts: Vec<usize> = (0..n).collect();
    for i in 0..size {
        let j = rng.gen_range(i..n);
        verts.swap(i, j);
    }
    verts.truncate(size);
    verts.sort_unstable();
    verts
}

pub fn random_complex<R: Rng>(n_vertices: usize, sizes: SpaceSizes, rng: &mut R) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = (0..rng.gen_range(0..=sizes.max_facets))
        .map(|_| random_facet(n_vertices, sizes.max_simplex, rng))
        .collect();
    SimplicialComplex::from_maximal(n_vertices, &facets).expect("vertices in range")
}

fn random_vertex_map<R: Rng>(n_src: usize, n_dst: usize, rng: &mut R) -> Vec<usize> {
    let mut vm: Vec<usize> = (0..n_src).map(|_| rng.gen_range(0..n_dst)).collect();
    vm[0] = 0;
    vm
}

/// A target complex on `n_vertices` containing the image of every given source under
/// its vertex map, plus some random facets.
fn random_target<R: Rng>(
    n_vertices: usize,
    sources: &[(&SimplicialComplex, &[usize])],
    sizes: SpaceSizes,
    rng: &mut R,
) -> SimplicialComplex {
    let mut facets: Vec<Vec<usize>> = (0..rng.gen_range(0..=sizes.max_facets))
        .map(|_| random_facet(n_vertices, sizes.max_simplex, rng))
        .collect();
    for (k, vm) in sources {
        for s in k.maximal_simplices() {
            facets.push(s.iter().map(|&v| vm[v]).collect());
        }
    }
    SimplicialComplex::from_maximal(n_vertices, &facets).expect("vertices in range")
}

/// A space cospan whose bulk is built around the images of random vertex maps.
pub fn random_space_cospan_on<R: Rng>(
    k0: &SimplicialComplex,
    k1: &SimplicialComplex,
    sizes: SpaceSizes,
    rng: &mut R,
) -> SpaceCospan {
    let n = rng.gen_range(1..=sizes.max_vertices);
    let vm0 = random_vertex_map(k0.n_vertices(), n, rng);
    let vm1 = random_vertex_map(k1.n_vertices(), n, rng);
    let l = random_target(n, &[(k0, &vm0), (k1, &vm1)], sizes, rng);
    SpaceCospan::new(
        SimplicialMap::new(k0.clone(), l.clone(), vm0).expect("target built around the image"),
        SimplicialMap::new(k1.clone(), l, vm1).expect("target built around the image"),
    )
    .expect("shared target")
}

/// Feet are kept smaller than bulks so composites stay within the vertex budget.
fn random_foot<R: Rng>(sizes: SpaceSizes, rng: &mut R) -> SimplicialComplex {
    let n = rng.gen_range(1..=(sizes.max_vertices / 2).max(1));
    let foot_sizes = SpaceSizes {
        max_simplex: sizes.max_simplex.min(3),
        ..sizes
    };
    random_complex(n, foot_sizes, rng)
}

pub fn random_space_cospan<R: Rng>(sizes: SpaceSizes, rng: &mut R) -> SpaceCospan {
    let k0 = random_foot(sizes, rng);
    let k1 = random_foot(sizes, rng);
    random_space_cospan_on(&k0, &k1, sizes, rng)
}

/// Two space cospans sharing the middle foot.
pub fn random_composable_pair<R: Rng>(sizes: SpaceSizes, rng: &mut R) -> (SpaceCospan, SpaceCospan) {
    let k0 = random_foot(sizes, rng);
    let k1 = random_foot(sizes, rng);
    let k2 = random_foot(sizes, rng);
    (
        random_space_cospan_on(&k0, &k1, sizes, rng),
        random_space_cospan_on(&k1, &k2, sizes, rng),
    )
}

/// A simplicial map between random complexes.
pub fn random_simplicial_map<R: Rng>(sizes: SpaceSizes, rng: &mut R) -> SimplicialMap {
    let k = random_foot(sizes, rng);
    let pt = SimplicialComplex::point();
    random_space_cospan_on(&k, &pt, sizes, rng).f0().clone()
}

/// A triad `(L, K0, K1, T)`: the facets of `L` are dealt to `K0`, `K1` or both and `T` is
/// the intersection, all in the labels of `L`.
pub struct Triad {
    pub l: SimplicialComplex,
    pub k0: Vec<Vec<usize>>,
    pub k1: Vec<Vec<usize>>,
    pub t: Vec<Vec<usize>>,
}

pub fn random_triad<R: Rng>(sizes: SpaceSizes, rng: &mut R) -> Triad {
    let n = rng.gen_range(1..=sizes.max_vertices);
    let l = random_complex(n, sizes, rng);
    let (mut k0, mut k1) = (vec![vec![0]], vec![vec![0]]);
    for s in l.maximal_simplices() {
        match rng.gen_range(0..4) {
            0 => k0.push(s),
            1 => k1.push(s),
            2 => {
                k0.push(s.clone());
                k1.push(s);
            }
            _ => {
                // Split the facet between both sides along a shared face where possible.
                if s.len() > 1 {
                    let mut a = s.clone();
                    a.pop();
                    let b = s[1..].to_vec();
                    if rng.gen_bool(0.5) {
                        k0.push(s);
                        k1.push(a);
                        k1.push(b);
                    } else {
                        k1.push(s);
                        k0.push(a);
                        k0.push(b);
                    }
                } else {
                    k0.push(s);
                }
            }
        }
    }
    let close = |faces: &[Vec<usize>]| SimplicialComplex::from_maximal(n, faces).expect("in range");
    let (c0, c1) = (close(&k0), close(&k1));
    let used = |c: &SimplicialComplex, faces: &[Vec<usize>]| -> Vec<Vec<usize>> {
        let verts: std::collections::BTreeSet<usize> = faces.iter().flatten().copied().collect();
        c.all_simplices()
            .filter(|s| s.iter().all(|v| verts.contains(v)))
            .cloned()
            .collect()
    };
    let s0: std::collections::BTreeSet<Vec<usize>> = used(&c0, &k0).into_iter().collect();
    let t: Vec<Vec<usize>> = used(&c1, &k1).into_iter().filter(|s| s0.contains(s)).collect();
    Triad { l, k0, k1, t }
}
