//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.

use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use enrich_core::base::VMorphism;
use enrich_core::chain::{
    adjoint_chain, adjoint_chain_inv, assoc_chain, compose_hom, eval_chain, hom_complex, homology,
    symmetry_chain, tensor_chainmap, tensor_complex, ChainComplex, ChainMap,
};
use enrich_core::derived::{
    compactness_check, derived_hom_functor_cat, detect_acyclic, generator_object, natural_iso_check,
};
use enrich_core::dg::{
    check_structure_condition, functor_cone, to_dg_functor, to_functor_complex, FunctorComplex,
    FunctorComplexMap,
};
use enrich_core::enriched::catalog::a2;
use enrich_core::enriched::{representable, VCategory};
use enrich_core::functor_cat::{coend_check, coend_functor, hom_end, yoneda_check};
use enrich_core::gen;
use enrich_core::linalg::{Matrix, PresentedModule, RingSpec};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn rings() -> Vec<RingSpec> {
    vec![
        RingSpec::prime_field(2).unwrap(),
        RingSpec::prime_field(5).unwrap(),
        RingSpec::Rationals,
        RingSpec::Integers,
    ]
}

fn e<E: std::fmt::Display>(ctx: &str) -> impl Fn(E) -> String + '_ {
    move |err| format!("{ctx}: {err}")
}

fn square_zero(x: &ChainComplex) -> bool {
    x.degrees()
        .skip(2)
        .all(|n| x.diff(n - 1).matmul(&x.diff(n)).unwrap().is_zero())
}

fn c1_square_zero() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut count = 0;
    for ring in rings() {
        for _ in 0..50 {
            let x = gen::random_complex(&mut rng, &ring, 4, 3);
            let y = gen::random_complex(&mut rng, &ring, 3, 3);
            for (name, z) in [
                ("tensor", tensor_complex(&x, &y)),
                ("hom", hom_complex(&x, &y)),
            ] {
                let z = z.map_err(e(name))?;
                if !square_zero(&z) {
                    return Err(format!("{name} over {ring}: d∘d ≠ 0"));
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} pairs over F2, F5, Q, Z"))
}

/// All tuples of components `X_n → Y_n` over F2 satisfying `d f = f d`,
/// counted by enumeration.
fn brute_count_chain_maps(x: &ChainComplex, y: &ChainComplex) -> Option<u64> {
    let ring = x.ring().clone();
    let degs: Vec<i64> = x.degrees().filter(|&n| y.contains(n)).collect();
    let sizes: Vec<usize> = degs.iter().map(|&n| x.rank(n) * y.rank(n)).collect();
    let bits: usize = sizes.iter().sum();
    if bits > 16 {
        return None;
    }
    let mut count = 0;
    for word in 0u32..(1 << bits) {
        let mut off = 0;
        let comps: Vec<Matrix> = degs
            .iter()
            .zip(&sizes)
            .map(|(&n, &s)| {
                let data: Vec<i64> = (0..s).map(|k| ((word >> (off + k)) & 1) as i64).collect();
                off += s;
                Matrix::from_i64(ring.clone(), y.rank(n), x.rank(n), &data).unwrap()
            })
            .collect();
        let f = |n: i64| -> Matrix {
            match degs.iter().position(|&d| d == n) {
                Some(k) => comps[k].clone(),
                None => Matrix::zeros(ring.clone(), y.rank(n), x.rank(n)),
            }
        };
        let ok = (x.lo().min(y.lo()) + 1..=x.hi().max(y.hi())).all(|n| {
            let l = y.diff(n).matmul(&f(n)).unwrap();
            let r = f(n - 1).matmul(&x.diff(n)).unwrap();
            l == r
        });
        count += ok as u64;
    }
    Some(count)
}

fn c2_adjunction() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let mut trips = 0;
    for ring in rings() {
        while trips < 50 * (rings().iter().position(|r| *r == ring).unwrap() + 1) {
            let x = gen::random_complex(&mut rng, &ring, 2, 2);
            let y = gen::random_complex(&mut rng, &ring, 2, 2);
            let z = gen::random_complex(&mut rng, &ring, 3, 2);
            let xy = tensor_complex(&x, &y).map_err(e("tensor"))?;
            let k = gen::random_chain_map(&mut rng, &xy, &z).map_err(e("random map"))?;
            let g = adjoint_chain(&k, &x, &y).map_err(e("adjoint"))?;
            if !g.failing_degrees().unwrap().is_empty() {
                return Err("adjoint is not a chain map".into());
            }
            let back = adjoint_chain_inv(&g, &y, &z).map_err(e("adjoint inverse"))?;
            if back != k {
                return Err(format!("round trip over {ring} differs"));
            }
            let hyz = hom_complex(&y, &z).unwrap();
            let g2 = gen::random_chain_map(&mut rng, &x, &hyz).map_err(e("random map"))?;
            let k2 = adjoint_chain_inv(&g2, &y, &z).map_err(e("adjoint inverse"))?;
            if adjoint_chain(&k2, &x, &y).map_err(e("adjoint"))? != g2 {
                return Err(format!("inverse round trip over {ring} differs"));
            }
            trips += 1;
        }
    }
    let f2 = RingSpec::prime_field(2).unwrap();
    let mut counted = 0;
    while counted < 15 {
        let x = gen::random_complex(&mut rng, &f2, 2, 2);
        let y = gen::random_complex(&mut rng, &f2, 2, 1);
        let z = gen::random_complex(&mut rng, &f2, 2, 2);
        let xy = tensor_complex(&x, &y).unwrap();
        let hyz = hom_complex(&y, &z).unwrap();
        let (Some(a), Some(b)) = (
            brute_count_chain_maps(&xy, &z),
            brute_count_chain_maps(&x, &hyz),
        ) else {
            continue;
        };
        if a != b {
            return Err(format!("F2 counts differ: {a} vs {b}"));
        }
        counted += 1;
    }
    Ok(format!(
        "{trips} round trips, {counted} exhaustive F2 counts agree"
    ))
}

/// Hom element `Hom(A, B)_p` as the family `f_s: A_s → B_{s+p}`.
fn decode(a: &ChainComplex, b: &ChainComplex, p: i64, v: &Matrix) -> Vec<Matrix> {
    let mut off = 0;
    a.degrees()
        .map(|s| {
            let size = a.rank(s) * b.rank(s + p);
            let m = v
                .block(off, size, 0, 1)
                .unvectorize(b.rank(s + p), a.rank(s))
                .unwrap();
            off += size;
            m
        })
        .collect()
}

fn encode(fam: &[Matrix], ring: &RingSpec) -> Matrix {
    let parts: Vec<Matrix> = fam.iter().map(Matrix::vectorize).collect();
    Matrix::vstack(ring, 1, &parts).unwrap()
}

fn c3_signs() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let mut checked = 0;
    for ring in rings() {
        for _ in 0..15 {
            let x = gen::random_complex(&mut rng, &ring, 3, 2);
            let y = gen::random_complex(&mut rng, &ring, 3, 2);
            let s = symmetry_chain(&x, &y).map_err(e("symmetry"))?;
            if !s.failing_degrees().unwrap().is_empty() {
                return Err(format!("symmetry over {ring} is not a chain map"));
            }
            if symmetry_chain(&y, &x).unwrap().compose(&s).unwrap()
                != ChainMap::identity(s.source())
            {
                return Err(format!(
                    "symmetry over {ring} does not square to the identity"
                ));
            }
            let z = gen::random_complex(&mut rng, &ring, 2, 2);
            let comp = compose_hom(&x, &y, &z).map_err(e("compose_hom"))?;
            if !comp.failing_degrees().unwrap().is_empty() {
                return Err("internal composition is not a chain map".into());
            }
            let hxy = hom_complex(&x, &y).unwrap();
            let hyz = hom_complex(&y, &z).unwrap();
            for p in hxy.degrees() {
                for q in hyz.degrees() {
                    if hxy.rank(p) == 0 || hyz.rank(q) == 0 {
                        continue;
                    }
                    let fv = gen::random_matrix(&mut rng, &ring, hxy.rank(p), 1);
                    let gv = gen::random_matrix(&mut rng, &ring, hyz.rank(q), 1);
                    let (f, g) = (decode(&x, &y, p, &fv), decode(&y, &z, q, &gv));
                    let sign = ring.sign(p * q);
                    let expected: Vec<Matrix> = x
                        .degrees()
                        .enumerate()
                        .map(|(k, s)| {
                            let gs = if y.contains(s + p) {
                                g[(s + p - y.lo()) as usize].clone()
                            } else {
                                Matrix::zeros(ring.clone(), z.rank(s + p + q), y.rank(s + p))
                            };
                            gs.matmul(&f[k]).unwrap().scale(&sign).unwrap()
                        })
                        .collect();
                    let n = p + q;
                    // tensor summands of degree n, p decreasing
                    let mut offset = 0;
                    for pp in (hxy.lo()..=hxy.hi()).rev() {
                        if pp == p {
                            break;
                        }
                        offset += hxy.rank(pp) * hyz.rank(n - pp);
                    }
                    let mut t = Matrix::zeros(ring.clone(), comp.source().rank(n), 1);
                    t.set_block(offset, 0, &fv.kronecker(&gv).unwrap());
                    let got = comp.component(n).matmul(&t).unwrap();
                    if got != encode(&expected, &ring) {
                        return Err(format!(
                            "compose_hom differs from direct composition at p={p}, q={q}"
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    let mut curried = 0;
    for ring in rings() {
        for _ in 0..10 {
            let a = gen::random_complex(&mut rng, &ring, 2, 2);
            let b = gen::random_complex(&mut rng, &ring, 2, 2);
            let c = gen::random_complex(&mut rng, &ring, 2, 2);
            if adjoint_composite(&a, &b, &c).map_err(e("adjoint composite"))?
                != compose_hom(&a, &b, &c).unwrap()
            {
                return Err(format!(
                    "compose_hom over {ring} differs from the curried evaluation"
                ));
            }
            curried += 1;
        }
    }
    Ok(format!(
        "symmetry on 60 pairs, {checked} composites against direct composition, {curried} against curried evaluation"
    ))
}

/// Composition rebuilt as the adjoint of
/// `(Hom(A,B) ⊙ Hom(B,C)) ⊙ A → (Hom(B,C) ⊙ Hom(A,B)) ⊙ A → Hom(B,C) ⊙ (Hom(A,B) ⊙ A) → Hom(B,C) ⊙ B → C`.
fn adjoint_composite(
    a: &ChainComplex,
    b: &ChainComplex,
    c: &ChainComplex,
) -> enrich_core::Result<ChainMap> {
    let hab = hom_complex(a, b)?;
    let hbc = hom_complex(b, c)?;
    let swap = tensor_chainmap(&symmetry_chain(&hab, &hbc)?, &ChainMap::identity(a))?;
    let regroup = assoc_chain(&hbc, &hab, a)?;
    let inner = tensor_chainmap(&ChainMap::identity(&hbc), &eval_chain(a, b)?)?;
    let k = eval_chain(b, c)?
        .compose(&inner)?
        .compose(&regroup)?
        .compose(&swap)?;
    adjoint_chain(&k, &tensor_complex(&hab, &hbc)?, a)
}

fn c4_ext() -> Check {
    let z = RingSpec::Integers;
    let eps = ChainComplex::unit(z.clone());
    for m in [2i64, 3, 4, 6] {
        let q = ChainComplex::new(
            z.clone(),
            0,
            vec![1, 1],
            vec![Matrix::from_rows(z.clone(), &[&[m]])],
        )
        .unwrap();
        let torsion = PresentedModule {
            ring: z.clone(),
            free_rank: 0,
            invariant_factors: vec![BigInt::from(m)],
        };
        if homology(&q, 0).unwrap() != torsion {
            return Err(format!("H_0 of Z --{m}--> Z"));
        }
        let ext1 = enrich_core::derived::derived_hom_v(&q, &eps, -1).map_err(e("derived hom"))?;
        let ext0 = enrich_core::derived::derived_hom_v(&q, &eps, 0).map_err(e("derived hom"))?;
        if ext1 != torsion || !ext0.is_zero() {
            return Err(format!("Ext(Z/{m}, Z) = {ext0}, {ext1}"));
        }
    }
    Ok("Ext(Z/m, Z) = Z/m in degree -1 and 0 in degree 0 for m = 2, 3, 4, 6".into())
}

fn yoneda_coend_on(
    cat: &VCategory,
    x: &enrich_core::enriched::VFunctor,
) -> std::result::Result<(), String> {
    for c in 0..cat.len() {
        yoneda_check(cat, c, x).map_err(e("yoneda"))?;
        let r = representable(cat, c).unwrap();
        let rank = hom_end(&r, x).unwrap().rank();
        if rank != x.value(c).rank {
            return Err(format!(
                "Hom(R_c, X) has rank {rank}, X(c) has rank {}",
                x.value(c).rank
            ));
        }
    }
    coend_check(cat, x).map_err(e("coend"))?;
    let co = coend_functor(cat, x).map_err(e("coend"))?;
    for c in 0..cat.len() {
        if co.functor.value(c).rank != x.value(c).rank {
            return Err("coend has the wrong rank".into());
        }
    }
    Ok(())
}

fn c5_yoneda_coend() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for ring in [RingSpec::Integers, RingSpec::Rationals] {
        let cat = a2(&ring);
        for c in 0..2 {
            yoneda_coend_on(&cat, &representable(&cat, c).unwrap())?;
        }
        for _ in 0..5 {
            let x = gen::random_functor(&mut rng, &cat, 3).map_err(e("random functor"))?;
            yoneda_coend_on(&cat, &x)?;
        }
    }
    let f2 = RingSpec::prime_field(2).unwrap();
    for _ in 0..50 {
        let cat = gen::random_thin_category(&mut rng, &f2, 3);
        let x = gen::random_functor(&mut rng, &cat, 3).map_err(e("random functor"))?;
        yoneda_coend_on(&cat, &x)?;
    }
    Ok("A2 over Z and Q, 50 random F2 categories on 3 objects".into())
}

fn c6_translation() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    for i in 0..100 {
        let ring = if i % 2 == 0 {
            RingSpec::prime_field(2).unwrap()
        } else {
            RingSpec::Rationals
        };
        let cat = gen::random_thin_category(&mut rng, &ring, 3);
        let x = gen::random_functor_complex(&mut rng, &cat, 3, 2).map_err(e("random complex"))?;
        let dg = to_dg_functor(&x).map_err(e("to dg"))?;
        if !check_structure_condition(&dg).unwrap().is_ok() {
            return Err(format!("instance {i}: structure condition fails"));
        }
        let back = to_functor_complex(&dg).map_err(e("to functor complex"))?;
        if back != x {
            return Err(format!("instance {i}: round trip differs"));
        }
        if to_dg_functor(&back).unwrap() != dg {
            return Err(format!("instance {i}: dg round trip differs"));
        }
    }
    let q = RingSpec::Rationals;
    let mut dg = to_dg_functor(&a2_cone(&q)).unwrap();
    let (a, b, p) = (1, 1, dg.window().0);
    let m = dg.structure(a, b, p);
    let scaled = VMorphism::new(
        m.source.clone(),
        m.target.clone(),
        m.matrix.scale(&q.from_i64(3)).unwrap(),
    )
    .unwrap();
    dg.set_structure(a, b, p, scaled).unwrap();
    if check_structure_condition(&dg).unwrap().is_ok() {
        return Err("perturbed structure map not detected".into());
    }
    Ok("100 round trips, perturbed structure map detected".into())
}

/// Cone of the inclusion of representables on A2, concentrated in degrees 0 and 1.
fn a2_cone(ring: &RingSpec) -> FunctorComplex {
    let cat = a2(ring);
    let (ra, rb) = (
        representable(&cat, 0).unwrap(),
        representable(&cat, 1).unwrap(),
    );
    let (s, t) = if hom_end(&rb, &ra).unwrap().rank() > 0 {
        (rb, ra)
    } else {
        (ra, rb)
    };
    let alpha = hom_end(&s, &t)
        .unwrap()
        .to_nat(&s, &t, &Matrix::identity(ring.clone(), 1))
        .unwrap();
    let map = FunctorComplexMap::new(
        FunctorComplex::concentrated(&s, 0),
        FunctorComplex::concentrated(&t, 0),
        vec![alpha],
    )
    .unwrap();
    functor_cone(&map).unwrap()
}

fn c7_natural_iso() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let mut count = 0;
    for ring in [
        RingSpec::Integers,
        RingSpec::Rationals,
        RingSpec::prime_field(2).unwrap(),
    ] {
        let cat = a2(&ring);
        let eps = ChainComplex::unit(ring.clone());
        let family = [
            a2_cone(&ring),
            FunctorComplex::concentrated(&representable(&cat, 0).unwrap(), 0),
            generator_object(&cat, 1, &eps).unwrap().shift(1),
        ];
        for x in &family {
            for c in 0..2 {
                let test = gen::random_functor_complex_map(&mut rng, x, x).unwrap();
                let r = natural_iso_check(&cat, c, &eps, x, (-3, 3), Some(&test))
                    .map_err(e("natural iso"))?;
                if !r.is_ok() {
                    return Err(format!("A2 family over {ring}:\n{r}"));
                }
                count += 1;
            }
        }
    }
    for i in 0..100 {
        let ring = if i % 2 == 0 {
            RingSpec::prime_field(2).unwrap()
        } else {
            RingSpec::Rationals
        };
        let cat = gen::random_thin_category(&mut rng, &ring, 3);
        let q = gen::random_complex(&mut rng, &ring, 2, 2);
        let x = gen::random_functor_complex(&mut rng, &cat, 3, 2).unwrap();
        let y = gen::random_functor_complex(&mut rng, &cat, 2, 2).unwrap();
        let test = gen::random_functor_complex_map(&mut rng, &x, &y).unwrap();
        let c = rng.random_range(0..3);
        let r =
            natural_iso_check(&cat, c, &q, &x, (-3, 3), Some(&test)).map_err(e("natural iso"))?;
        if !r.is_ok() {
            return Err(format!("random instance {i}:\n{r}"));
        }
        count += 1;
    }
    Ok(format!("{count} instances, degrees -3..3"))
}

fn pointwise_acyclic(x: &FunctorComplex) -> bool {
    (0..x.category().len()).all(|c| {
        let xc = x.at(c).unwrap();
        xc.degrees().all(|n| homology(&xc, n).unwrap().is_zero())
    })
}

fn c8_detection() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let (mut acyclic, mut cyclic) = (0, 0);
    for i in 0..100 {
        let ring = if i % 2 == 0 {
            RingSpec::prime_field(2).unwrap()
        } else {
            RingSpec::Rationals
        };
        let cat = gen::random_thin_category(&mut rng, &ring, 3);
        let y = gen::random_functor_complex(&mut rng, &cat, 2, 2).unwrap();
        let x = if rng.random_bool(0.4) {
            functor_cone(&FunctorComplexMap::identity(&y)).unwrap()
        } else {
            y
        };
        let (lo, hi) = x.window();
        let eps = ChainComplex::unit(ring.clone());
        let detected = detect_acyclic(&cat, &x, &[eps], (lo - 1, hi + 1)).map_err(e("detect"))?;
        let oracle = pointwise_acyclic(&x);
        if detected != oracle {
            return Err(format!(
                "instance {i}: detected {detected}, pointwise homology says {oracle}"
            ));
        }
        if oracle {
            acyclic += 1;
        } else {
            cyclic += 1;
        }
    }
    for i in 0..30 {
        let ring = if i % 2 == 0 {
            RingSpec::prime_field(2).unwrap()
        } else {
            RingSpec::Rationals
        };
        let cat = gen::random_thin_category(&mut rng, &ring, 3);
        let k = rng.random_range(1..=4);
        let xs: Vec<FunctorComplex> = (0..k)
            .map(|_| gen::random_functor_complex(&mut rng, &cat, 2, 2).unwrap())
            .collect();
        let q = gen::random_complex(&mut rng, &ring, 2, 2);
        let c = rng.random_range(0..3);
        let n = rng.random_range(-2..=2);
        let r = compactness_check(&cat, c, &q, &xs, n).map_err(e("compactness"))?;
        if !r.is_ok() {
            return Err(format!("compactness instance {i}:\n{r}"));
        }
        let direct: usize = xs
            .iter()
            .map(|x| {
                derived_hom_functor_cat(&cat, c, &q, x, n)
                    .unwrap()
                    .free_rank
            })
            .sum();
        let sum = enrich_core::dg::functor_complex_sum(&cat, &xs).unwrap();
        if derived_hom_functor_cat(&cat, c, &q, &sum, n)
            .unwrap()
            .free_rank
            != direct
        {
            return Err(format!("compactness instance {i}: dimensions differ"));
        }
    }
    Ok(format!("{acyclic} acyclic and {cyclic} non-acyclic agree with pointwise homology, 30 sums of at most 4"))
}

fn cli(args: &[String]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["enrich".to_string()];
    full.extend(args.iter().cloned());
    let code = enrich_cli::run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn c9_cli() -> Check {
    let mut cases: Vec<(Vec<String>, i32, &str)> = vec![
        (
            vec![
                "homology".into(),
                fixture("z_mod_3.txt"),
                "--degree".into(),
                "0".into(),
            ],
            0,
            "H_0 = Z/3",
        ),
        (
            vec!["axioms".into(), fixture("a2_mutated_z.txt")],
            1,
            "failure: associativity",
        ),
        (
            vec!["axioms".into(), fixture("a2_z.txt")],
            0,
            "result: pass",
        ),
        (
            vec![
                "natural-iso".into(),
                fixture("unit_z.txt"),
                fixture("a2_cone_z.txt"),
                "--range".into(),
                "-3:3".into(),
            ],
            0,
            "result: pass",
        ),
        (
            vec!["translate".into(), fixture("a2_cone_dg_q.txt")],
            0,
            "functor-complex 0 1",
        ),
        (
            vec![
                "adjunction-check".into(),
                fixture("z_mod_3.txt"),
                fixture("z_mod_2.txt"),
                fixture("z_mod_3.txt"),
            ],
            0,
            "result: pass",
        ),
        (
            vec!["quasi-iso".into(), fixture("times_two_z_mod_3.txt")],
            0,
            "quasi-isomorphism: true",
        ),
        (vec!["self-test".into()], 0, "result: pass"),
        (vec!["homology".into(), fixture("missing.txt")], 2, ""),
    ];
    let mut corpus: Vec<String> = std::fs::read_dir(fixture(""))
        .unwrap()
        .map(|entry| entry.unwrap().path().display().to_string())
        .collect();
    corpus.sort();
    for path in &corpus {
        let (code, out, _) = cli(&["format".to_string(), path.clone()]);
        if code != 0 || out != std::fs::read_to_string(path).unwrap() {
            return Err(format!("{path} is not in canonical form"));
        }
        cases.push((vec!["format".into(), path.clone()], 0, "format 1"));
    }
    for (args, code, needle) in &cases {
        let mut seen = Vec::new();
        for threads in ["1", "4"] {
            for _ in 0..2 {
                let mut a = args.clone();
                a.extend(["--threads".to_string(), threads.to_string()]);
                let (got, out, _) = cli(&a);
                if got != *code {
                    return Err(format!("{} exited {got}, expected {code}", args[0]));
                }
                if !out.contains(needle) {
                    return Err(format!("{} output lacks `{needle}`", args[0]));
                }
                seen.push(out);
            }
        }
        if seen.windows(2).any(|w| w[0] != w[1]) {
            return Err(format!(
                "{} output depends on the run or thread count",
                args[0]
            ));
        }
    }
    Ok(format!(
        "{} fixtures, two runs each at 1 and 4 threads",
        cases.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 differentials square to zero", c1_square_zero),
        ("2 tensor-hom adjunction", c2_adjunction),
        ("3 symmetry and composition signs", c3_signs),
        ("4 Ext over the integers", c4_ext),
        ("5 Yoneda and coend", c5_yoneda_coend),
        ("6 dg translation", c6_translation),
        ("7 generator natural isomorphism", c7_natural_iso),
        ("8 acyclicity detection and compactness", c8_detection),
        ("9 CLI determinism", c9_cli),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} ({detail}; {secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of 9 criteria pass", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
