//! Property and oracle suites over seeded or exhaustive instance families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abcat::{
    compose, identity, is_exact_at_middle, is_exact_square, is_mono, square_complex, LinMap,
    SquareDiagram, VecObj,
};
use crate::brown::{cospanical_extend, spanical_extend, verify_extension_functoriality, BrownFunctor};
use crate::cospan::{
    canonical_cosp, canonical_span, compose_cosp, compose_span, dagger_cosp, dagger_span,
    equiv_cosp, equiv_span, iota_cosp, iota_span, leq_cosp, leq_span, lower_bound, tensor_cosp,
    tensor_span, transpose_cosp, transpose_span, upper_bound, Cospan, Span,
};
use crate::cw::{
    augmented_chain, cone_rank_identity, homology, mapping_cone, mv_exactness_check,
    space_compose_chain_model, ChainMap, SimplicialComplex, SimplicialMap, SpaceCospan,
};
use crate::error::Result;
use crate::exactlin::{Field, Matrix};
use crate::generate::{
    random_above, random_complex, random_composable_pair, random_cospan_between,
    random_exact_square, random_iso, random_map, random_obj, random_triad, LinearSizes, SpaceSizes,
};
use crate::oracle::{
    all_commuting_squares, brute_leq, brute_lower_bound, brute_upper_bound, BitCospan, BitSquare,
};

pub const FIELDS: [Field; 3] = [Field::GF2, Field::GF3, Field::RATIONAL];

/// Outcome of one suite: how many instances were checked and the first failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

impl SuiteResult {
    pub fn new(name: &str) -> SuiteResult {
        SuiteResult {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(detail());
            }
        }
    }

    /// Record every check of a fallible block, counting errors as failures.
    fn record_result(&mut self, r: Result<bool>, detail: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, detail),
            Err(e) => self.record(false, || format!("{}: error {e}", detail())),
        }
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Exact-square criterion against middle exactness and a bitwise search, on every
/// commuting GF(2) square with dimensions at most `max_dim` (reservoir-sampled down
/// to `cap` squares when there are more).
pub fn exact_square_oracle(max_dim: u8, cap: usize, seed: u64) -> SuiteResult {
    let mut rng = rng_for(seed, 1);
    let mut sample: Vec<BitSquare> = Vec::with_capacity(cap);
    let mut seen = 0usize;
    for sq in all_commuting_squares(max_dim) {
        seen += 1;
        if sample.len() < cap {
            sample.push(sq);
        } else {
            let j = rng.gen_range(0..seen);
            if j < cap {
                sample[j] = sq;
            }
        }
    }
    let mut res = SuiteResult::new("exact squares");
    for sq in &sample {
        let diagram = SquareDiagram::new(
            sq.f.to_linmap(),
            sq.f_prime.to_linmap(),
            sq.g.to_linmap(),
            sq.g_prime.to_linmap(),
        );
        let r = diagram.and_then(|d| {
            let direct = is_exact_square(&d)?;
            let middle = is_exact_at_middle(&square_complex(&d)?);
            Ok(direct == middle && middle == sq.brute_middle_exact())
        });
        res.record_result(r, || format!("square {sq:?}"));
    }
    res
}

/// Every pair of GF(2) cospans with equal feet, feet and bulks at most `max_dim`.
fn all_cospan_pairs(max_dim: u8) -> Vec<(BitCospan, BitCospan)> {
    let mut out = Vec::new();
    for a0 in 0..=max_dim {
        for a1 in 0..=max_dim {
            let all: Vec<BitCospan> = (0..=max_dim).flat_map(|b| BitCospan::all(a0, a1, b)).collect();
            for l in &all {
                for m in &all {
                    out.push((*l, *m));
                }
            }
        }
    }
    out
}

/// `leq_cosp` against exhaustive mono search, with every witness verified.
pub fn leq_oracle(max_dim: u8) -> SuiteResult {
    let mut res = SuiteResult::new("leq decision");
    for (bl, bm) in all_cospan_pairs(max_dim) {
        let (l, m) = (bl.to_cospan(), bm.to_cospan());
        let r = leq_cosp(&l, &m).map(|w| {
            let brute = brute_leq(&bl, &bm);
            match w {
                None => !brute,
                Some(g) => {
                    brute
                        && is_mono(&g)
                        && compose(&g, l.f0()).ok().as_ref() == Some(m.f0())
                        && compose(&g, l.f1()).ok().as_ref() == Some(m.f1())
                }
            }
        });
        res.record_result(r, || format!("{l}  vs  {m}"));
    }
    res
}

/// `equiv_cosp` against exhaustive upper-bound search with bulks up to `max_bound`,
/// and existence of upper and lower bounds against each other and a lower-bound search.
pub fn equiv_oracle(max_dim: u8, max_bound: u8) -> (SuiteResult, SuiteResult) {
    let mut eq = SuiteResult::new("equiv decision");
    let mut bounds = SuiteResult::new("bound duality");
    for (bl, bm) in all_cospan_pairs(max_dim) {
        let (l, m) = (bl.to_cospan(), bm.to_cospan());
        let brute_up = brute_upper_bound(&bl, &bm, max_bound);
        eq.record_result(equiv_cosp(&l, &m).map(|e| e == brute_up), || format!("{l}  vs  {m}"));
        let r = (|| {
            let up = upper_bound(&l, &m)?;
            let low = lower_bound(&l, &m)?;
            let low_ok = match &low {
                None => true,
                Some(w) => leq_cosp(&w.bound, &l)?.is_some() && leq_cosp(&w.bound, &m)?.is_some(),
            };
            let up_ok = match &up {
                None => true,
                Some(w) => leq_cosp(&l, &w.bound)?.is_some() && leq_cosp(&m, &w.bound)?.is_some(),
            };
            Ok(up.is_some() == low.is_some()
                && low.is_some() == brute_lower_bound(&bl, &bm)
                && up.is_some() == brute_up
                && low_ok
                && up_ok)
        })();
        bounds.record_result(r, || format!("{l}  vs  {m}"));
    }
    (eq, bounds)
}

fn pick_field<R: Rng>(i: usize, _rng: &mut R) -> Field {
    FIELDS[i % FIELDS.len()]
}

fn same_class(a: &Cospan, b: &Cospan) -> Result<bool> {
    equiv_cosp(a, b)
}

/// Category, dagger and monoidal laws plus monotonicity of the preorder.
pub fn category_laws(seed: u64, count: usize, sizes: LinearSizes) -> Vec<SuiteResult> {
    let mut rng = rng_for(seed, 4);
    let mut assoc = SuiteResult::new("associativity");
    let mut units = SuiteResult::new("units");
    let mut iota = SuiteResult::new("iota functoriality");
    let mut dagger = SuiteResult::new("dagger laws");
    let mut interchange = SuiteResult::new("monoidal interchange");
    let mut mono = SuiteResult::new("monotonicity");
    let mut preorder = SuiteResult::new("preorder");
    let mut squares = SuiteResult::new("exact square composite");
    let mut bounds = SuiteResult::new("bounds");
    for i in 0..count {
        let field = pick_field(i, &mut rng);
        let objs: Vec<VecObj> = (0..4).map(|_| random_obj(field, sizes.max_foot, &mut rng)).collect();
        let a = random_cospan_between(objs[0], objs[1], sizes, &mut rng);
        let b = random_cospan_between(objs[1], objs[2], sizes, &mut rng);
        let c = random_cospan_between(objs[2], objs[3], sizes, &mut rng);
        let show = || format!("{a} ; {b} ; {c}");

        assoc.record_result(
            (|| {
                let left = compose_cosp(&compose_cosp(&a, &b)?, &c)?;
                let right = compose_cosp(&a, &compose_cosp(&b, &c)?)?;
                same_class(&left, &right)
            })(),
            show,
        );
        units.record_result(
            (|| {
                let left = compose_cosp(&iota_cosp(&identity(a.foot0())), &a)?;
                let right = compose_cosp(&a, &iota_cosp(&identity(a.foot1())))?;
                Ok(same_class(&left, &a)? && same_class(&right, &a)?)
            })(),
            show,
        );
        let f = random_map(objs[0], objs[1], &mut rng);
        let g = random_map(objs[1], objs[2], &mut rng);
        iota.record_result(
            (|| {
                let composite = compose_cosp(&iota_cosp(&f), &iota_cosp(&g))?;
                same_class(&composite, &iota_cosp(&compose(&g, &f)?))
            })(),
            || format!("{f:?} then {g:?}"),
        );
        let iso = random_iso(objs[0], &mut rng);
        dagger.record_result(
            (|| {
                let left = dagger_cosp(&compose_cosp(&a, &b)?);
                let right = compose_cosp(&dagger_cosp(&b), &dagger_cosp(&a))?;
                let inverse = LinMap::from_matrix(iso.matrix().inverse().expect("iso"));
                Ok(same_class(&left, &right)?
                    && same_class(&iota_cosp(&inverse), &dagger_cosp(&iota_cosp(&iso)))?
                    && dagger_cosp(&dagger_cosp(&a)) == a)
            })(),
            show,
        );
        interchange.record_result(
            (|| {
                let left = tensor_cosp(&compose_cosp(&a, &b)?, &compose_cosp(&b, &c)?)?;
                let right = compose_cosp(&tensor_cosp(&a, &b)?, &tensor_cosp(&b, &c)?)?;
                same_class(&left, &right)
            })(),
            show,
        );
        let (a_up, ga) = random_above(&a, &mut rng);
        let (b_up, _) = random_above(&b, &mut rng);
        mono.record_result(
            (|| {
                let comp = leq_cosp(&compose_cosp(&a, &b)?, &compose_cosp(&a_up, &b_up)?)?;
                let tens = leq_cosp(&tensor_cosp(&a, &b)?, &tensor_cosp(&a_up, &b_up)?)?;
                Ok(comp.is_some() && tens.is_some())
            })(),
            show,
        );
        let (a_up2, gb) = random_above(&a_up, &mut rng);
        preorder.record_result(
            (|| {
                let w = compose(&gb, &ga)?;
                let chained = is_mono(&w)
                    && &compose(&w, a.f0())? == a_up2.f0()
                    && &compose(&w, a.f1())? == a_up2.f1();
                Ok(leq_cosp(&a, &a)?.is_some()
                    && leq_cosp(&a, &a_up)?.is_some()
                    && leq_cosp(&a, &a_up2)?.is_some()
                    && chained
                    && equiv_cosp(&a, &a_up2)?)
            })(),
            show,
        );
        let (sf, sfp, sg, sgp) = random_exact_square(field, sizes, &mut rng);
        let x = random_obj(field, sizes.max_foot, &mut rng);
        let y = random_obj(field, sizes.max_foot, &mut rng);
        let xm = random_map(x, sf.dst(), &mut rng);
        let ym = random_map(y, sfp.dst(), &mut rng);
        squares.record_result(
            (|| {
                let l0 = Cospan::new(xm.clone(), sf.clone())?;
                let l1 = Cospan::new(sfp.clone(), ym.clone())?;
                let l2 = Cospan::new(compose(&sg, &xm)?, compose(&sgp, &ym)?)?;
                Ok(leq_cosp(&compose_cosp(&l0, &l1)?, &l2)?.is_some())
            })(),
            || format!("square {sf:?} {sfp:?} {sg:?} {sgp:?}"),
        );
        let other = random_cospan_between(a.foot0(), a.foot1(), sizes, &mut rng);
        bounds.record_result(
            (|| {
                let mut ok = true;
                for m in [&a_up, &other] {
                    let up = upper_bound(&a, m)?.is_some();
                    let low = lower_bound(&a, m)?.is_some();
                    ok &= up == low && up == equiv_cosp(&a, m)?;
                }
                Ok(ok)
            })(),
            || format!("{a} vs {other}"),
        );
    }
    vec![assoc, units, iota, dagger, interchange, mono, preorder, squares, bounds]
}

fn random_span<R: Rng>(a0: VecObj, a1: VecObj, sizes: LinearSizes, rng: &mut R) -> Span {
    let c = random_obj(a0.field, sizes.max_bulk, rng);
    Span::new(random_map(c, a0, rng), random_map(c, a1, rng)).expect("shared apex")
}

/// Transposition round trips, functoriality, dagger and tensor compatibility.
pub fn transposition(seed: u64, count: usize, sizes: LinearSizes) -> Vec<SuiteResult> {
    let mut rng = rng_for(seed, 5);
    let mut round = SuiteResult::new("transpose round trip");
    let mut functor = SuiteResult::new("transpose functoriality");
    let mut dagger = SuiteResult::new("transpose dagger");
    let mut classes = SuiteResult::new("transpose classes");
    let mut monoidal = SuiteResult::new("transpose tensor");
    let mut spans = SuiteResult::new("span laws");
    for i in 0..count {
        let field = pick_field(i, &mut rng);
        let objs: Vec<VecObj> = (0..3).map(|_| random_obj(field, sizes.max_foot, &mut rng)).collect();
        let a = random_cospan_between(objs[0], objs[1], sizes, &mut rng);
        let b = random_cospan_between(objs[1], objs[2], sizes, &mut rng);
        let v = random_span(objs[0], objs[1], sizes, &mut rng);
        let w = random_span(objs[1], objs[2], sizes, &mut rng);
        let show = || format!("{a} ; {b}");
        round.record_result(
            (|| {
                Ok(equiv_cosp(&transpose_span(&transpose_cosp(&a)), &a)?
                    && equiv_span(&transpose_cosp(&transpose_span(&v)), &v)?)
            })(),
            show,
        );
        functor.record_result(
            (|| {
                let whole = transpose_cosp(&compose_cosp(&a, &b)?);
                let parts = compose_span(&transpose_cosp(&a), &transpose_cosp(&b))?;
                let back = transpose_span(&compose_span(&v, &w)?);
                let back_parts = compose_cosp(&transpose_span(&v), &transpose_span(&w))?;
                Ok(leq_span(&whole, &parts)?.is_some()
                    && equiv_span(&whole, &parts)?
                    && equiv_cosp(&back, &back_parts)?)
            })(),
            show,
        );
        dagger.record_result(
            equiv_span(&transpose_cosp(&dagger_cosp(&a)), &dagger_span(&transpose_cosp(&a))),
            show,
        );
        classes.record(
            canonical_span(&transpose_cosp(&a)) == canonical_cosp(&a).negate_foot(1),
            show,
        );
        monoidal.record_result(
            (|| {
                let t = transpose_cosp(&tensor_cosp(&a, &b)?);
                let parts = tensor_span(&transpose_cosp(&a), &transpose_cosp(&b))?;
                let id = transpose_cosp(&iota_cosp(&identity(a.foot0())));
                Ok(equiv_span(&t, &parts)? && equiv_span(&id, &iota_span(&identity(a.foot0())))?)
            })(),
            show,
        );
        spans.record_result(
            (|| {
                let id0 = iota_span(&identity(v.foot0()));
                let id1 = iota_span(&identity(v.foot1()));
                let units = equiv_span(&compose_span(&id0, &v)?, &v)? && equiv_span(&compose_span(&v, &id1)?, &v)?;
                let dag = equiv_span(
                    &dagger_span(&compose_span(&v, &w)?),
                    &compose_span(&dagger_span(&w), &dagger_span(&v))?,
                )?;
                Ok(units && dag && dagger_span(&dagger_span(&v)) == v && leq_span(&v, &v)?.is_some())
            })(),
            || format!("{v} ; {w}"),
        );
    }
    vec![round, functor, dagger, classes, monoidal, spans]
}

/// Reduced homology of boundary spheres, and acyclicity of cones.
pub fn homology_goldens(seed: u64, random_cones: usize) -> Vec<SuiteResult> {
    let mut spheres = SuiteResult::new("sphere homology");
    for n in 0..=2usize {
        let k = SimplicialComplex::sphere_boundary(n);
        for field in FIELDS {
            let c = augmented_chain(&k, field);
            for q in -1..=(n as i64 + 2) {
                let dim = homology(&c, q).space.dim;
                let expected = usize::from(q == n as i64);
                spheres.record(dim == expected, || {
                    format!("H_{q} of the {n}-sphere over {field} has dimension {dim}")
                });
            }
        }
    }
    let mut cones = SuiteResult::new("contractible cones");
    let mut rng = rng_for(seed, 6);
    let sizes = SpaceSizes::default();
    for i in 0..random_cones {
        let field = pick_field(i, &mut rng);
        let n = rng.gen_range(1..sizes.max_vertices);
        let k = random_complex(n, sizes, &mut rng);
        let simplicial = augmented_chain(&k.cone(), field);
        let chains = augmented_chain(&k, field);
        let algebraic = mapping_cone(&ChainMap::identity(&chains)).cone;
        let full = augmented_chain(&SimplicialComplex::simplex(i % 5), field);
        for q in -1..=(k.dim() as i64 + 2) {
            let dims = [
                homology(&simplicial, q).space.dim,
                homology(&algebraic, q).space.dim,
                homology(&full, q).space.dim,
            ];
            cones.record(dims == [0, 0, 0], || format!("{k} over {field}: H_{q} dims {dims:?}"));
        }
    }
    vec![spheres, cones]
}

/// Mayer-Vietoris exactness on random triads in degrees `0..=3`.
pub fn mayer_vietoris(seed: u64, count: usize, sizes: SpaceSizes) -> SuiteResult {
    let mut rng = rng_for(seed, 7);
    let mut res = SuiteResult::new("mayer-vietoris");
    for i in 0..count {
        let field = pick_field(i, &mut rng);
        let t = random_triad(sizes, &mut rng);
        for q in 0..=3 {
            res.record_result(mv_exactness_check(&t.l, &t.k0, &t.k1, &t.t, q, field), || {
                format!("{} with K0 {:?}, K1 {:?}, T {:?}, q = {q}, {field}", t.l, t.k0, t.k1, t.t)
            });
        }
    }
    res
}

/// Cone rank identity on the legs of random space cospans.
pub fn cone_ranks(seed: u64, count: usize, sizes: SpaceSizes) -> SuiteResult {
    let mut rng = rng_for(seed, 8);
    let mut res = SuiteResult::new("cone rank identity");
    for i in 0..count {
        let field = pick_field(i, &mut rng);
        let (l, _) = random_composable_pair(sizes, &mut rng);
        let phi = crate::cw::chain_map_of(l.f0(), field);
        let cone = mapping_cone(&phi).cone;
        for q in -1..=3 {
            res.record(cone_rank_identity(&phi, &cone, q), || format!("{:?} in degree {q}", l.f0()));
        }
    }
    res
}

/// Extension lemmas on random composable pairs: the cospanical witness and class
/// equality for `q ∈ {0, 1, 2}`, the spanical ones for `q ∈ {1, 2}`, and compatibility
/// with the inclusion of maps on every leg.
pub fn brown_extension(seed: u64, count: usize, sizes: SpaceSizes) -> Vec<SuiteResult> {
    let mut rng = rng_for(seed, 9);
    let mut cosp_leq = SuiteResult::new("cospanical leq");
    let mut cosp_eq = SuiteResult::new("cospanical composition");
    let mut span_leq = SuiteResult::new("spanical leq");
    let mut span_eq = SuiteResult::new("spanical composition");
    let mut iota = SuiteResult::new("iota compatibility");
    for i in 0..count {
        let field = pick_field(i, &mut rng);
        let (l, m) = random_composable_pair(sizes, &mut rng);
        let show = || format!("{:?} ; {:?}", l, m);
        for q in 0..=2 {
            let e = BrownFunctor::new(field, q).expect("nonnegative degree");
            match verify_extension_functoriality(&e, &l, &m) {
                Ok(report) => {
                    for c in &report.checks {
                        let target = match c.name.as_str() {
                            "cospanical leq" => &mut cosp_leq,
                            "cospanical composition" => &mut cosp_eq,
                            "spanical leq" => &mut span_leq,
                            _ => &mut span_eq,
                        };
                        target.record(c.passed, || format!("q = {q}, {field}: {} in {}", c.counterexample.clone().unwrap_or_default(), show()));
                    }
                }
                Err(err) => cosp_eq.record(false, || format!("error {err} on {}", show())),
            }
            for f in [l.f0(), l.f1(), m.f0(), m.f1()] {
                iota.record_result(iota_check(&e, f), || format!("q = {q}, {field}: {f:?}"));
            }
        }
    }
    vec![cosp_leq, cosp_eq, span_leq, span_eq, iota]
}

fn iota_check(e: &BrownFunctor, f: &SimplicialMap) -> Result<bool> {
    let iota = SpaceCospan::iota(f);
    let cosp = cospanical_extend(e, &iota).class == canonical_cosp(&iota_cosp(&e.morphism(f)));
    if e.q < 1 {
        return Ok(cosp);
    }
    let span = spanical_extend(e, &iota)?.class == canonical_span(&iota_span(&e.suspended_morphism(f)));
    Ok(cosp && span)
}

/// The two arcs `pt -> E <- S⁰` and `S⁰ -> E <- pt` glued into a circle, and the
/// two-sided `S⁰ -> E <- S⁰` glued to itself.
pub fn worked_pairs() -> Vec<(&'static str, SpaceCospan, SpaceCospan)> {
    let s0 = SimplicialComplex::from_maximal(2, &[]).expect("valid");
    let edge = SimplicialComplex::simplex(1);
    let pt = SimplicialComplex::point();
    let ends = SimplicialMap::new(s0, edge.clone(), vec![0, 1]).expect("valid");
    let base = SimplicialMap::constant(&pt, &edge);
    let arc_in = SpaceCospan::new(base.clone(), ends.clone()).expect("valid");
    let arc_out = SpaceCospan::new(ends.clone(), base).expect("valid");
    let tube = SpaceCospan::new(ends.clone(), ends).expect("valid");
    vec![("arcs", arc_in, arc_out), ("tubes", tube.clone(), tube)]
}

fn show_matrix(m: &Matrix) -> String {
    format!("{}x{} {}", m.rows(), m.cols(), m)
}

/// Canonical outputs of the worked instances, one `name = value` line each.
pub fn worked_instance_lines(field: Field) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (name, l, m) in worked_pairs() {
        let composite = space_compose_chain_model(&l, &m, field)?;
        for q in 0..=1 {
            let e = BrownFunctor::new(field, q)?;
            let el = cospanical_extend(&e, &l);
            let em = cospanical_extend(&e, &m);
            let images = compose_cosp(
                &e.image_cospan(&crate::cw::ChainCospan::of_space(&l, field)),
                &e.image_cospan(&crate::cw::ChainCospan::of_space(&m, field)),
            )?;
            let whole = e.image_cospan(&composite);
            out.push(format!("{name} q={q} cosp first = {}", show_matrix(el.class.basis())));
            out.push(format!("{name} q={q} cosp second = {}", show_matrix(em.class.basis())));
            out.push(format!(
                "{name} q={q} cosp composite of images = {}",
                show_matrix(canonical_cosp(&images).basis())
            ));
            out.push(format!(
                "{name} q={q} cosp image of composite = {}",
                show_matrix(canonical_cosp(&whole).basis())
            ));
            out.push(format!(
                "{name} q={q} bulk dims = {} <= {}",
                images.bulk().dim,
                whole.bulk().dim
            ));
            if q >= 1 {
                let sl = spanical_extend(&e, &l)?;
                let sm = spanical_extend(&e, &m)?;
                out.push(format!("{name} q={q} span first = {}", show_matrix(sl.class.basis())));
                out.push(format!("{name} q={q} span second = {}", show_matrix(sm.class.basis())));
            }
        }
    }
    Ok(out)
}

/// All random suites with the given seed and counts.
pub fn random_suite(
    seed: u64,
    count: usize,
    linear: LinearSizes,
    spaces: SpaceSizes,
) -> Vec<SuiteResult> {
    let mut out = category_laws(seed, count, linear);
    out.extend(transposition(seed, count, linear));
    if count > 0 {
        out.extend(homology_goldens(seed, count.min(50)));
    }
    out.push(mayer_vietoris(seed, count, spaces));
    out.push(cone_ranks(seed, count, spaces));
    out.extend(brown_extension(seed, count, spaces));
    out
}

/// Exhaustive GF(2) oracle suites.
pub fn oracle_suite(seed: u64) -> Vec<SuiteResult> {
    let mut out = vec![exact_square_oracle(2, 100_000, seed), leq_oracle(2)];
    let (eq, bounds) = equiv_oracle(2, 4);
    out.push(eq);
    out.push(bounds);
    out
}
