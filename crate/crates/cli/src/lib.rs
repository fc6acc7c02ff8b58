//! Command-line front end. Every subcommand delegates to one library
//! operation; `self-test` prints the mapping.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use enrich_core::base::VObject;
use enrich_core::chain::{
    adjoint_chain, adjoint_chain_inv, hom_complex, homology, mapping_cone, shift, symmetry_chain,
    tensor_complex, ChainComplex, ChainMap,
};
use enrich_core::derived::{
    compactness_check, derived_hom_functor_cat, derived_hom_v, detect_acyclic, evaluate_complex,
    generator_object, is_quasi_iso, natural_iso_check,
};
use enrich_core::dg::{
    check_structure_condition, to_dg_functor, to_functor_complex, FunctorComplex,
};
use enrich_core::enriched::catalog::{a2, unit_category};
use enrich_core::enriched::{VCategory, VFunctor};
use enrich_core::functor_cat::{coend_check, hom_end, oslash, yoneda_check};
use enrich_core::gen;
use enrich_core::io::{parse, serialize, verify_axioms, Document, Payload};
use enrich_core::linalg::RingSpec;
use enrich_core::{Error, Report};

#[derive(Parser, Debug)]
#[command(
    name = "enrich",
    version,
    about = "Exact chain complexes over enriched functor categories"
)]
pub struct Cli {
    /// Ring for generated values; inputs must match it when given.
    #[arg(long, global = true)]
    ring: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    degree: Option<i64>,
    /// Inclusive degree range `LO:HI`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    range: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Run the axiom checks on every input value.
    #[arg(long, global = true)]
    verify_axioms: bool,
    /// Worker threads; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Tensor product of two complexes.
    Tensor { x: PathBuf, y: PathBuf },
    /// Internal Hom complex.
    Hom { x: PathBuf, y: PathBuf },
    /// Homology in one degree or over the window.
    Homology { x: PathBuf },
    /// Symmetry is a chain map and squares to the identity.
    SymCheck { x: PathBuf, y: PathBuf },
    /// Tensor-Hom adjunction round trips on seeded random chain maps.
    AdjunctionCheck {
        x: PathBuf,
        y: PathBuf,
        z: PathBuf,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Axioms of a category, functor, natural transformation or complex.
    Axioms { file: PathBuf },
    /// Yoneda isomorphism at an object.
    Yoneda {
        functor: PathBuf,
        #[arg(long)]
        object: String,
    },
    /// Coend decomposition of a functor.
    Coend { functor: PathBuf },
    /// Functor complex to dg functor and back.
    Translate { file: PathBuf },
    /// Derived Hom out of a bounded free complex.
    DerivedHom {
        q: PathBuf,
        x: PathBuf,
        #[arg(long)]
        object: Option<String>,
    },
    /// Generator natural isomorphism, with a seeded test endomorphism.
    NaturalIso {
        q: PathBuf,
        x: PathBuf,
        #[arg(long)]
        object: Option<String>,
    },
    /// Acyclicity detected by the generators `(c, -) ⊘ Q`.
    DetectAcyclic {
        x: PathBuf,
        generators: Vec<PathBuf>,
    },
    /// Derived Hom out of a generator commutes with finite sums.
    Compactness {
        q: PathBuf,
        #[arg(required = true)]
        xs: Vec<PathBuf>,
        #[arg(long)]
        object: String,
    },
    /// Mapping cone of a chain map.
    Cone { map: PathBuf },
    /// Shift a complex by `--degree`.
    Shift { x: PathBuf },
    /// Whether a chain map is a quasi-isomorphism.
    QuasiIso { map: PathBuf },
    /// Structure-map condition of a dg functor.
    StructureCheck { file: PathBuf },
    /// The generator `(c, -) ⊘ Q`.
    Generator {
        category: PathBuf,
        q: PathBuf,
        #[arg(long)]
        object: String,
    },
    /// A functor complex at one object.
    Evaluate {
        x: PathBuf,
        #[arg(long)]
        object: String,
    },
    /// Rank of the end `Hom(X, Y)` of two functors.
    End { x: PathBuf, y: PathBuf },
    /// `X ⊘ A` with `rank(A)` from `--degree`.
    Oslash { functor: PathBuf },
    /// Named small categories.
    Catalog { name: String },
    /// Seeded random value of the given kind.
    Random { kind: String },
    /// Parse and print in canonical form.
    Format { file: PathBuf },
    /// Print the subcommand to operation table and check it.
    SelfTest,
}

/// Subcommand and the library operation it reaches.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("tensor", "chain::tensor_complex"),
    ("hom", "chain::hom_complex"),
    ("homology", "chain::homology"),
    ("sym-check", "chain::symmetry_chain"),
    ("adjunction-check", "chain::adjoint_chain"),
    ("axioms", "io::verify_axioms"),
    ("yoneda", "functor_cat::yoneda_check"),
    ("coend", "functor_cat::coend_check"),
    ("translate", "dg::to_dg_functor / dg::to_functor_complex"),
    (
        "derived-hom",
        "derived::derived_hom_v / derived::derived_hom_functor_cat",
    ),
    ("natural-iso", "derived::natural_iso_check"),
    ("detect-acyclic", "derived::detect_acyclic"),
    ("compactness", "derived::compactness_check"),
    ("cone", "chain::mapping_cone"),
    ("shift", "chain::shift"),
    ("quasi-iso", "derived::is_quasi_iso"),
    ("structure-check", "dg::check_structure_condition"),
    ("generator", "derived::generator_object"),
    ("evaluate", "derived::evaluate_complex"),
    ("end", "functor_cat::hom_end"),
    ("oslash", "functor_cat::oslash"),
    ("catalog", "enriched::catalog"),
    ("random", "gen"),
    ("format", "io::parse / io::serialize"),
    ("self-test", "cli::OPERATIONS"),
];

enum Failure {
    Input(String),
    CheckWith(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

struct Ctx {
    ring: Option<RingSpec>,
    verify: bool,
}

impl Ctx {
    fn load(&self, path: &PathBuf) -> std::result::Result<Document, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let doc = parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        if let Some(r) = &self.ring {
            if *r != doc.ring {
                return Err(Failure::Input(format!(
                    "{}: ring {} does not match --ring {r}",
                    path.display(),
                    doc.ring
                )));
            }
        }
        if self.verify {
            let report = verify_axioms(&doc)?;
            if !report.is_ok() {
                return Err(Failure::Input(format!(
                    "{}: axioms fail\n{report}",
                    path.display()
                )));
            }
        }
        Ok(doc)
    }

    fn complex(&self, path: &PathBuf) -> std::result::Result<ChainComplex, Failure> {
        match self.load(path)?.payload {
            Payload::Complex(x) => Ok(x),
            p => Err(wrong(path, "complex", p.tag())),
        }
    }

    fn chain_map(&self, path: &PathBuf) -> std::result::Result<ChainMap, Failure> {
        match self.load(path)?.payload {
            Payload::ChainMap(f) => Ok(f),
            p => Err(wrong(path, "chain-map", p.tag())),
        }
    }

    fn functor(&self, path: &PathBuf) -> std::result::Result<VFunctor, Failure> {
        match self.load(path)?.payload {
            Payload::Functor(f) => Ok(f),
            p => Err(wrong(path, "v-functor", p.tag())),
        }
    }

    fn category(&self, path: &PathBuf) -> std::result::Result<VCategory, Failure> {
        match self.load(path)?.payload {
            Payload::Category(c) => Ok(c),
            p => Err(wrong(path, "v-category", p.tag())),
        }
    }

    fn functor_complex(&self, path: &PathBuf) -> std::result::Result<FunctorComplex, Failure> {
        match self.load(path)?.payload {
            Payload::FunctorComplex(x) => Ok(x),
            Payload::Functor(f) => Ok(FunctorComplex::concentrated(&f, 0)),
            p => Err(wrong(path, "functor-complex", p.tag())),
        }
    }
}

fn wrong(path: &Path, want: &str, got: &str) -> Failure {
    Failure::Input(format!(
        "{}: expected a {want}, found a {got}",
        path.display()
    ))
}

fn object(cat: &VCategory, name: &str) -> std::result::Result<usize, Failure> {
    Ok(cat.index_of(name)?)
}

fn document(ring: &RingSpec, payload: Payload) -> String {
    serialize(&Document::new(ring.clone(), payload))
}

fn report(r: &Report) -> Outcome {
    if r.is_ok() {
        Ok(r.to_string())
    } else {
        let mut s = r.to_string();
        s.insert_str(0, "");
        Err(Failure::CheckWith(s))
    }
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), Failure> {
    let bad = || Failure::Input(format!("--range expects LO:HI, found `{s}`"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let lo: i64 = a.trim().parse().map_err(|_| bad())?;
    let hi: i64 = b.trim().parse().map_err(|_| bad())?;
    if hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn execute(cli: &Cli) -> Outcome {
    let ring = cli
        .ring
        .as_deref()
        .map(str::parse::<RingSpec>)
        .transpose()?;
    let ctx = Ctx {
        ring: ring.clone(),
        verify: cli.verify_axioms,
    };
    let range = cli.range.as_deref().map(parse_range).transpose()?;
    match &cli.cmd {
        Cmd::Tensor { x, y } => {
            let (x, y) = (ctx.complex(x)?, ctx.complex(y)?);
            Ok(document(
                x.ring(),
                Payload::Complex(tensor_complex(&x, &y)?),
            ))
        }
        Cmd::Hom { x, y } => {
            let (x, y) = (ctx.complex(x)?, ctx.complex(y)?);
            Ok(document(x.ring(), Payload::Complex(hom_complex(&x, &y)?)))
        }
        Cmd::Homology { x } => {
            let x = ctx.complex(x)?;
            let (lo, hi) = match (cli.degree, range) {
                (Some(n), _) => (n, n),
                (None, Some(r)) => r,
                (None, None) => x.window(),
            };
            let mut out = String::new();
            for n in lo..=hi {
                writeln!(out, "H_{n} = {}", homology(&x, n)?).unwrap();
            }
            Ok(out)
        }
        Cmd::SymCheck { x, y } => {
            let (x, y) = (ctx.complex(x)?, ctx.complex(y)?);
            let mut r = Report::new("symmetry of the tensor product");
            let s = symmetry_chain(&x, &y)?;
            let bad = s.failing_degrees()?;
            if !bad.is_empty() {
                r.fail(
                    "symmetry is a chain map",
                    bad.iter().map(|n| format!("n={n}")).collect(),
                    "",
                );
            }
            let back = symmetry_chain(&y, &x)?.compose(&s)?;
            if back != ChainMap::identity(s.source()) {
                r.fail("symmetry squares to the identity", vec![], "");
            }
            report(&r)
        }
        Cmd::AdjunctionCheck { x, y, z, trials } => {
            let (x, y, z) = (ctx.complex(x)?, ctx.complex(y)?, ctx.complex(z)?);
            let xy = tensor_complex(&x, &y)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let maps = (0..*trials)
                .map(|_| gen::random_chain_map(&mut rng, &xy, &z))
                .collect::<enrich_core::Result<Vec<_>>>()?;
            let rows: Vec<enrich_core::Result<Option<String>>> = maps
                .par_iter()
                .enumerate()
                .map(|(t, k)| {
                    let g = adjoint_chain(k, &x, &y)?;
                    let back = adjoint_chain_inv(&g, &y, &z)?;
                    let again = adjoint_chain(&back, &x, &y)?;
                    Ok((back != *k || again != g).then(|| format!("trial={t}")))
                })
                .collect();
            let mut r = Report::new("tensor-hom adjunction");
            r.note(format!("{trials} seeded chain maps, seed {}", cli.seed));
            for row in rows {
                if let Some(at) = row? {
                    r.fail("adjoint round trip", vec![at], "");
                }
            }
            report(&r)
        }
        Cmd::Axioms { file } => {
            let doc = ctx.load(file)?;
            report(&verify_axioms(&doc)?)
        }
        Cmd::Yoneda {
            functor,
            object: name,
        } => {
            let f = ctx.functor(functor)?;
            let c = object(f.source(), name)?;
            let w = yoneda_check(f.source(), c, &f)?;
            let mut r = Report::new("enriched Yoneda isomorphism");
            r.note(format!(
                "rank {} at {name}, inverse pair verified",
                w.forward[0].source.rank
            ));
            report(&r)
        }
        Cmd::Coend { functor } => {
            let f = ctx.functor(functor)?;
            let w = coend_check(f.source(), &f)?;
            let mut r = Report::new("coend decomposition");
            let ranks: Vec<String> = w
                .forward
                .iter()
                .map(|m| m.source.rank.to_string())
                .collect();
            r.note(format!("ranks {}, inverse pairs verified", ranks.join(" ")));
            report(&r)
        }
        Cmd::Translate { file } => {
            let doc = ctx.load(file)?;
            match doc.payload {
                Payload::FunctorComplex(x) => {
                    Ok(document(&doc.ring, Payload::DgFunctor(to_dg_functor(&x)?)))
                }
                Payload::DgFunctor(f) => Ok(document(
                    &doc.ring,
                    Payload::FunctorComplex(to_functor_complex(&f)?),
                )),
                p => Err(wrong(file, "functor-complex or dg-functor", p.tag())),
            }
        }
        Cmd::DerivedHom { q, x, object: name } => {
            let q = ctx.complex(q)?;
            let doc = ctx.load(x)?;
            let n = cli.degree.unwrap_or(0);
            let m = match (doc.payload, name) {
                (Payload::Complex(x), None) => derived_hom_v(&q, &x, n)?,
                (Payload::FunctorComplex(x), Some(name)) => {
                    let c = object(x.category(), name)?;
                    derived_hom_functor_cat(x.category(), c, &q, &x, n)?
                }
                (Payload::FunctorComplex(_), None) => {
                    return Err(Failure::Input("a functor complex needs --object".into()))
                }
                (p, _) => return Err(wrong(x, "complex or functor-complex", p.tag())),
            };
            Ok(format!("D_{n} = {m}\n"))
        }
        Cmd::NaturalIso { q, x, object: name } => {
            let q = ctx.complex(q)?;
            let x = ctx.functor_complex(x)?;
            let cat = x.category();
            let objects: Vec<usize> = match name {
                Some(n) => vec![object(cat, n)?],
                None => (0..cat.len()).collect(),
            };
            let range = range.unwrap_or((-3, 3));
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let test = gen::random_functor_complex_map(&mut rng, &x, &x)?;
            let parts: Vec<enrich_core::Result<Report>> = objects
                .par_iter()
                .map(|&c| {
                    let mut r = natural_iso_check(cat, c, &q, &x, range, Some(&test))?;
                    for f in &mut r.failures {
                        f.at.insert(0, cat.name(c).to_string());
                    }
                    Ok(r)
                })
                .collect();
            let mut r = Report::new("generator natural isomorphism");
            r.note(enrich_core::derived::SCOPE_NOTE);
            r.note(format!(
                "degrees {}..{}, objects {}",
                range.0,
                range.1,
                objects.len()
            ));
            for p in parts {
                let p = p?;
                r.failures.extend(p.failures);
            }
            report(&r)
        }
        Cmd::DetectAcyclic { x, generators } => {
            let x = ctx.functor_complex(x)?;
            let qs = if generators.is_empty() {
                vec![ChainComplex::unit(x.category().ring().clone())]
            } else {
                generators
                    .iter()
                    .map(|g| ctx.complex(g))
                    .collect::<std::result::Result<_, _>>()?
            };
            let range = range.unwrap_or((-3, 3));
            let acyclic = detect_acyclic(x.category(), &x, &qs, range)?;
            Ok(format!("acyclic: {acyclic}\n"))
        }
        Cmd::Compactness {
            q,
            xs,
            object: name,
        } => {
            let q = ctx.complex(q)?;
            let xs = xs
                .iter()
                .map(|p| ctx.functor_complex(p))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            let cat = xs[0].category().clone();
            let c = object(&cat, name)?;
            report(&compactness_check(
                &cat,
                c,
                &q,
                &xs,
                cli.degree.unwrap_or(0),
            )?)
        }
        Cmd::Cone { map } => {
            let f = ctx.chain_map(map)?;
            Ok(document(f.ring(), Payload::Complex(mapping_cone(&f)?)))
        }
        Cmd::Shift { x } => {
            let x = ctx.complex(x)?;
            Ok(document(
                x.ring(),
                Payload::Complex(shift(&x, cli.degree.unwrap_or(1))),
            ))
        }
        Cmd::QuasiIso { map } => {
            let f = ctx.chain_map(map)?;
            Ok(format!("quasi-isomorphism: {}\n", is_quasi_iso(&f)?))
        }
        Cmd::StructureCheck { file } => match ctx.load(file)?.payload {
            Payload::DgFunctor(f) => report(&check_structure_condition(&f)?),
            p => Err(wrong(file, "dg-functor", p.tag())),
        },
        Cmd::Generator {
            category,
            q,
            object: name,
        } => {
            let cat = ctx.category(category)?;
            let q = ctx.complex(q)?;
            let c = object(&cat, name)?;
            Ok(document(
                cat.ring(),
                Payload::FunctorComplex(generator_object(&cat, c, &q)?),
            ))
        }
        Cmd::Evaluate { x, object: name } => {
            let x = ctx.functor_complex(x)?;
            let c = object(x.category(), name)?;
            Ok(document(
                x.category().ring(),
                Payload::Complex(evaluate_complex(&x, c)?),
            ))
        }
        Cmd::End { x, y } => {
            let (x, y) = (ctx.functor(x)?, ctx.functor(y)?);
            Ok(format!("rank: {}\n", hom_end(&x, &y)?.rank()))
        }
        Cmd::Oslash { functor } => {
            let f = ctx.functor(functor)?;
            let rank = usize::try_from(cli.degree.unwrap_or(1))
                .map_err(|_| Failure::Input("--degree must be a rank here".into()))?;
            let a = VObject::new(f.source().ring().clone(), rank);
            Ok(document(
                f.source().ring(),
                Payload::Functor(oslash(&f, &a)?),
            ))
        }
        Cmd::Catalog { name } => {
            let ring = ring.unwrap_or(RingSpec::Integers);
            let cat = match name.as_str() {
                "a2" => a2(&ring),
                "point" => unit_category(&ring),
                other => {
                    return Err(Failure::Input(format!(
                        "unknown catalog entry `{other}` (a2, point)"
                    )))
                }
            };
            Ok(document(&ring, Payload::Category(cat)))
        }
        Cmd::Random { kind } => {
            let ring = ring.unwrap_or(RingSpec::prime_field(2)?);
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let payload = match kind.as_str() {
                "complex" => Payload::Complex(gen::random_complex(&mut rng, &ring, 4, 3)),
                "category" => Payload::Category(gen::random_thin_category(&mut rng, &ring, 3)),
                "functor" => {
                    let cat = gen::random_thin_category(&mut rng, &ring, 3);
                    Payload::Functor(gen::random_functor(&mut rng, &cat, 2)?)
                }
                "functor-complex" => {
                    let cat = gen::random_thin_category(&mut rng, &ring, 3);
                    Payload::FunctorComplex(gen::random_functor_complex(&mut rng, &cat, 2, 2)?)
                }
                other => {
                    return Err(Failure::Input(format!(
                        "unknown kind `{other}` (complex, category, functor, functor-complex)"
                    )))
                }
            };
            Ok(document(&ring, payload))
        }
        Cmd::Format { file } => Ok(serialize(&ctx.load(file)?)),
        Cmd::SelfTest => {
            let mut r = Report::new("subcommand coverage");
            let names: Vec<&str> = OPERATIONS.iter().map(|(c, _)| *c).collect();
            let mut out = String::new();
            for (cmd, op) in OPERATIONS {
                writeln!(out, "{cmd:<18} {op}").unwrap();
            }
            for (i, (cmd, op)) in OPERATIONS.iter().enumerate() {
                if names[..i].contains(cmd) || OPERATIONS[..i].iter().any(|(_, o)| o == op) {
                    r.fail("one subcommand per operation", vec![cmd.to_string()], "");
                }
            }
            use clap::CommandFactory;
            for sub in Cli::command().get_subcommands() {
                if !names.contains(&sub.get_name()) {
                    r.fail("subcommand listed", vec![sub.get_name().to_string()], "");
                }
            }
            if names.len() != Cli::command().get_subcommands().count() {
                r.fail("subcommand listed", vec!["table has extra rows".into()], "");
            }
            match report(&r) {
                Ok(s) => Ok(out + &s),
                Err(Failure::CheckWith(s)) => Err(Failure::CheckWith(out + &s)),
                Err(e) => Err(e),
            }
        }
    }
}

/// Runs the CLI on `args` (including the program name). Returns the exit
/// code: 0 on success, 1 on a failing check, 2 on an input error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.max(1))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match pool.install(|| execute(&cli)) {
        Ok(s) => {
            let _ = out.write_all(s.as_bytes());
            0
        }
        Err(Failure::CheckWith(s)) => {
            let _ = out.write_all(s.as_bytes());
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("enrich").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-3:3").ok(), Some((-3, 3)));
        assert!(parse_range("3:-3").is_err());
        assert!(parse_range("3").is_err());
    }

    #[test]
    fn self_test_covers_every_subcommand() {
        let (code, out, _) = run_str(&["self-test"]);
        assert_eq!(code, 0);
        assert_eq!(
            out.lines()
                .filter(|l| l.contains("::") || l.ends_with(" gen"))
                .count(),
            OPERATIONS.len()
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["no-such-command"]).0, 2);
        assert_eq!(run_str(&["--ring", "F6", "catalog", "a2"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn catalog_output_parses_back() {
        let (code, out, _) = run_str(&["--ring", "F3", "catalog", "a2"]);
        assert_eq!(code, 0);
        assert_eq!(serialize(&parse(&out).unwrap()), out);
    }
}
