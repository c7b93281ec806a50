use indexmap::IndexMap;
use num::{BigInt, BigRational, Integer};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use abcosp::abcat::{compose, VecObj};
use abcosp::cli::document::{
    parse, validate, ComplexSpec, CospanSpec, Document, Entry, FieldSpec, MapSpec, MatrixSpec,
    SpanSpec, TriadSpec,
};
use abcosp::cospan::{
    canonical_cosp, canonical_span, dagger_cosp, equiv_cosp, leq_cosp, minimal_rep, transpose_cosp,
    transpose_span, Cospan,
};
use abcosp::cw::{augmented_chain, homology, mapping_cone, chain_map_of, cone_rank_identity};
use abcosp::exactlin::{solve_left, Field, Matrix};
use abcosp::generate::{
    random_complex, random_cospan_in, random_iso, random_matrix, random_simplicial_map, LinearSizes,
    SpaceSizes,
};
use abcosp::suites;

const FIELDS: [Field; 4] = [Field::GF2, Field::GF3, Field::RATIONAL, Field::RATIONAL];

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn field_of(i: usize) -> Field {
    FIELDS[i % FIELDS.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_nullity(seed: u64, fi in 0usize..4, r in 0usize..6, c in 0usize..6) {
        let m = random_matrix(field_of(fi), r, c, &mut rng(seed));
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), c);
        prop_assert!(m.mul(&k).unwrap().is_zero());
        prop_assert_eq!(m.image_basis().cols(), m.rank());
    }

    #[test]
    fn rref_is_idempotent_and_row_invariant(seed: u64, fi in 0usize..4, r in 1usize..5, c in 0usize..5) {
        let mut g = rng(seed);
        let field = field_of(fi);
        let m = random_matrix(field, r, c, &mut g);
        let once = m.rref();
        prop_assert_eq!(&once.reduced.rref().reduced, &once.reduced);
        let p = random_iso(VecObj { field, dim: r }, &mut g);
        prop_assert_eq!(p.matrix().mul(&m).unwrap().rref().reduced, once.reduced);
    }

    #[test]
    fn solve_left_solves(seed: u64, fi in 0usize..4, r in 0usize..5, c in 0usize..5, k in 0usize..4) {
        let mut g = rng(seed);
        let field = field_of(fi);
        let v = random_matrix(field, r, c, &mut g);
        let x = random_matrix(field, k, r, &mut g);
        let w = x.mul(&v).unwrap();
        let sol = solve_left(&v, &w).unwrap().expect("consistent");
        prop_assert_eq!(sol.mul(&v).unwrap(), w);
    }

    #[test]
    fn class_is_invariant_under_bulk_isomorphism(seed: u64, fi in 0usize..4) {
        let mut g = rng(seed);
        let l = random_cospan_in(field_of(fi), LinearSizes::default(), &mut g);
        let iso = random_iso(l.bulk(), &mut g);
        let moved = Cospan::new(compose(&iso, l.f0()).unwrap(), compose(&iso, l.f1()).unwrap()).unwrap();
        prop_assert_eq!(canonical_cosp(&moved), canonical_cosp(&l));
        prop_assert!(leq_cosp(&l, &moved).unwrap().is_some());
    }

    #[test]
    fn minimal_rep_is_below_and_equivalent(seed: u64, fi in 0usize..4) {
        let l = random_cospan_in(field_of(fi), LinearSizes::default(), &mut rng(seed));
        let m = minimal_rep(&l);
        prop_assert!(leq_cosp(&m, &l).unwrap().is_some());
        prop_assert!(equiv_cosp(&m, &l).unwrap());
        prop_assert_eq!(dagger_cosp(&dagger_cosp(&l)), l.clone());
    }

    #[test]
    fn transposition_round_trips(seed: u64, fi in 0usize..4) {
        let l = random_cospan_in(field_of(fi), LinearSizes::default(), &mut rng(seed));
        let t = transpose_cosp(&l);
        prop_assert_eq!(canonical_span(&t), canonical_cosp(&l).negate_foot(1));
        prop_assert!(equiv_cosp(&transpose_span(&t), &l).unwrap());
    }

    #[test]
    fn reduced_euler_characteristic(seed: u64, fi in 0usize..4, n in 1usize..8) {
        let k = random_complex(n, SpaceSizes::default(), &mut rng(seed));
        let c = augmented_chain(&k, field_of(fi));
        let mut chi_chains = -1i64;
        let mut chi_homology = 0i64;
        for q in -1..=(k.dim() as i64 + 1) {
            let sign = if q.rem_euclid(2) == 0 { 1 } else { -1 };
            if q >= 0 {
                chi_chains += sign * k.count(q as usize) as i64;
            }
            chi_homology += sign * homology(&c, q).space.dim as i64;
        }
        prop_assert_eq!(chi_chains, chi_homology);
    }

    #[test]
    fn subdivision_preserves_homology(seed: u64, fi in 0usize..4, n in 2usize..7) {
        let mut g = rng(seed);
        let k = random_complex(n, SpaceSizes::default(), &mut g);
        let edges = k.simplices(1).to_vec();
        prop_assume!(!edges.is_empty());
        let e = &edges[g.gen_range(0..edges.len())];
        let s = k.subdivide_edge(e[0], e[1]).unwrap();
        let field = field_of(fi);
        let (ck, cs) = (augmented_chain(&k, field), augmented_chain(&s, field));
        for q in -1..=(k.dim() as i64) {
            prop_assert_eq!(homology(&ck, q).space.dim, homology(&cs, q).space.dim);
        }
    }

    #[test]
    fn cone_rank_identity_holds(seed: u64, fi in 0usize..4) {
        let f = random_simplicial_map(SpaceSizes::default(), &mut rng(seed));
        let phi = chain_map_of(&f, field_of(fi));
        let cone = mapping_cone(&phi).cone;
        for q in -1..=4 {
            prop_assert!(cone_rank_identity(&phi, &cone, q));
        }
    }

    #[test]
    fn seeded_suites_are_deterministic(seed in 0u64..1000) {
        let a = suites::category_laws(seed, 3, LinearSizes::default());
        let b = suites::category_laws(seed, 3, LinearSizes::default());
        prop_assert_eq!(&a, &b);
        prop_assert!(a.iter().all(|r| r.passed()));
    }
}

fn name() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_]{0,5}"
}

fn entry() -> impl Strategy<Value = Entry> {
    prop_oneof![
        (-6i64..7).prop_map(Entry::Int),
        (-9i64..10, 1i64..10).prop_map(|(n, d)| {
            let g = n.gcd(&d);
            Entry::Str(format!("{}/{}", n / g, d / g))
        }),
    ]
}

fn rows() -> impl Strategy<Value = Vec<Vec<Entry>>> {
    (0usize..4, 0usize..4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(entry(), c), r))
}

fn matrix_spec() -> impl Strategy<Value = MatrixSpec> {
    prop_oneof![
        rows().prop_filter("non-empty", |r| !r.is_empty()).prop_map(MatrixSpec::Rows),
        rows().prop_map(|data| MatrixSpec::Shaped {
            rows: data.len(),
            cols: data.first().map_or(0, Vec::len),
            data,
        }),
        name().prop_map(|identity| MatrixSpec::Identity { identity }),
        (name(), name()).prop_map(|zero| MatrixSpec::Zero { zero }),
    ]
}

fn faces() -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::vec(0usize..8, 1..4), 0..4)
}

fn map_of<T: std::fmt::Debug>(s: impl Strategy<Value = T>) -> impl Strategy<Value = IndexMap<String, T>> {
    prop::collection::vec((name(), s), 0..4).prop_map(|v| v.into_iter().collect())
}

fn document() -> impl Strategy<Value = Document> {
    (
        prop::sample::select(vec![0u64, 2, 3, 5]),
        map_of(0usize..5),
        map_of(matrix_spec()),
        map_of((name(), name()).prop_map(|(f0, f1)| CospanSpec { f0, f1 })),
        map_of((name(), name()).prop_map(|(g0, g1)| SpanSpec { g0, g1 })),
        map_of((0usize..8, faces()).prop_map(|(vertices, facets)| ComplexSpec { vertices, facets })),
        map_of((name(), name(), prop::collection::vec(0usize..8, 0..5)).prop_map(|(src, dst, vertices)| MapSpec {
            src,
            dst,
            vertices,
        })),
        map_of((name(), name()).prop_map(|(f0, f1)| CospanSpec { f0, f1 })),
        map_of((name(), faces(), faces(), faces()).prop_map(|(l, k0, k1, t)| TriadSpec { l, k0, k1, t })),
    )
        .prop_map(|(c, objects, matrices, cospans, spans, complexes, maps, space_cospans, triads)| Document {
            version: "1".into(),
            field: FieldSpec { characteristic: c },
            objects,
            matrices,
            cospans,
            spans,
            complexes,
            maps,
            space_cospans,
            triads,
        })
}

fn matrix_rows(m: &Matrix) -> MatrixSpec {
    let data = m
        .to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| match x {
                    abcosp::exactlin::Scalar::Residue(v) => Entry::Int(*v as i64),
                    q => Entry::Str(q.to_string()),
                })
                .collect()
        })
        .collect();
    MatrixSpec::Shaped { rows: m.rows(), cols: m.cols(), data }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn document_round_trip(doc in document()) {
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let back = parse(&text).unwrap();
        prop_assert_eq!(back, doc);
    }

    #[test]
    fn validated_cospans_round_trip(seed: u64, fi in 0usize..4) {
        let field = field_of(fi);
        let l = random_cospan_in(field, LinearSizes::default(), &mut rng(seed));
        let doc = Document {
            version: "1".into(),
            field: FieldSpec { characteristic: field.characteristic() },
            objects: IndexMap::new(),
            matrices: [("a".to_string(), matrix_rows(l.f0().matrix())), ("b".to_string(), matrix_rows(l.f1().matrix()))]
                .into_iter()
                .collect(),
            cospans: [("l".to_string(), CospanSpec { f0: "a".into(), f1: "b".into() })].into_iter().collect(),
            spans: IndexMap::new(),
            complexes: IndexMap::new(),
            maps: IndexMap::new(),
            space_cospans: IndexMap::new(),
            triads: IndexMap::new(),
        };
        let loaded = validate(&parse(&serde_json::to_string(&doc).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(&loaded.cospans["l"], &l);
    }

    #[test]
    fn rationals_parse_only_in_lowest_terms(n in -20i64..20, d in -6i64..12) {
        let s = format!("{n}/{d}");
        let r = abcosp::cli::document::parse_rational(&s);
        let reduced = d > 0 && (n.gcd(&d) == 1 || (n == 0 && d == 1));
        prop_assert_eq!(r.is_ok(), reduced);
        if let Ok(q) = r {
            prop_assert_eq!(q, BigRational::new(BigInt::from(n), BigInt::from(d)));
        }
    }
}
