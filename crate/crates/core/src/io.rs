//! Line-oriented text format. Every document starts with `format 1` and a
//! `ring` line followed by one tagged value; indentation is two spaces per
//! nesting level and is ignored on input. Serialization is canonical, so
//! `serialize(parse(s)) == s` for any canonical `s`.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::base::{hom_obj, tensor_obj, VMorphism, VObject};
use crate::chain::{ChainComplex, ChainMap};
use crate::dg::{check_dg_functor_axioms, check_structure_condition, DgFunctor, FunctorComplex};
use crate::enriched::{
    check_category_axioms, check_functor_axioms, check_vnat, EnrichedCategory, EnrichedNat,
    VCategory, VFunctor, VNat,
};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RingSpec, Scalar};
use crate::report::Report;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Matrix(Matrix),
    Object(VObject),
    Morphism(VMorphism),
    Complex(ChainComplex),
    ChainMap(ChainMap),
    Category(VCategory),
    Functor(VFunctor),
    Nat(VNat),
    FunctorComplex(FunctorComplex),
    DgFunctor(DgFunctor),
}

impl Payload {
    pub fn tag(&self) -> &'static str {
        match self {
            Payload::Matrix(_) => "matrix",
            Payload::Object(_) => "v-object",
            Payload::Morphism(_) => "v-morphism",
            Payload::Complex(_) => "complex",
            Payload::ChainMap(_) => "chain-map",
            Payload::Category(_) => "v-category",
            Payload::Functor(_) => "v-functor",
            Payload::Nat(_) => "v-nat",
            Payload::FunctorComplex(_) => "functor-complex",
            Payload::DgFunctor(_) => "dg-functor",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub version: u64,
    pub ring: RingSpec,
    pub payload: Payload,
}

impl Document {
    pub fn new(ring: RingSpec, payload: Payload) -> Self {
        Document {
            version: FORMAT_VERSION,
            ring,
            payload,
        }
    }
}

// ---------------------------------------------------------------- writing

struct Writer {
    out: String,
    depth: usize,
}

impl Writer {
    fn line(&mut self, s: impl AsRef<str>) {
        for _ in 0..self.depth {
            self.out.push_str("  ");
        }
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn nested(&mut self, f: impl FnOnce(&mut Writer)) {
        self.depth += 1;
        f(self);
        self.depth -= 1;
    }

    fn matrix(&mut self, m: &Matrix) {
        self.line(format!("matrix {} {}", m.rows(), m.cols()));
        if m.cols() == 0 {
            return;
        }
        self.nested(|w| {
            for i in 0..m.rows() {
                let mut row = String::new();
                for j in 0..m.cols() {
                    if j > 0 {
                        row.push(' ');
                    }
                    write!(row, "{}", m.get(i, j)).unwrap();
                }
                w.line(row);
            }
        });
    }

    fn complex(&mut self, x: &ChainComplex) {
        if x.is_empty() {
            self.line("complex empty");
            return;
        }
        self.line(format!("complex {} {}", x.lo(), x.hi()));
        self.nested(|w| {
            for n in x.degrees() {
                w.line(format!("rank {n} {}", x.rank(n)));
            }
            for n in x.degrees().skip(1) {
                w.line(format!("diff {n}"));
                w.nested(|w| w.matrix(&x.diff(n)));
            }
        });
    }

    fn chain_map(&mut self, f: &ChainMap) {
        self.line("chain-map");
        self.nested(|w| {
            w.line("source");
            w.nested(|w| w.complex(f.source()));
            w.line("target");
            w.nested(|w| w.complex(f.target()));
            for n in f.source().degrees() {
                w.line(format!("component {n}"));
                w.nested(|w| w.matrix(&f.component(n)));
            }
        });
    }

    fn category(&mut self, c: &VCategory) {
        let n = c.len();
        self.line(format!("v-category {n}"));
        self.nested(|w| {
            for a in 0..n {
                w.line(format!("object {}", c.name(a)));
            }
            for a in 0..n {
                for b in 0..n {
                    w.line(format!(
                        "hom {} {} {}",
                        c.name(a),
                        c.name(b),
                        c.hom(a, b).rank
                    ));
                }
            }
            for a in 0..n {
                for b in 0..n {
                    for x in 0..n {
                        w.line(format!("comp {} {} {}", c.name(a), c.name(b), c.name(x)));
                        w.nested(|w| w.matrix(&c.comp(a, b, x).matrix));
                    }
                }
            }
            for a in 0..n {
                w.line(format!("unit {}", c.name(a)));
                w.nested(|w| w.matrix(&c.unit(a).matrix));
            }
        });
    }

    fn functor_body(&mut self, f: &VFunctor) {
        let c = f.source();
        let n = c.len();
        for a in 0..n {
            self.line(format!("value {} {}", c.name(a), f.value(a).rank));
        }
        for a in 0..n {
            for b in 0..n {
                self.line(format!("map {} {}", c.name(a), c.name(b)));
                self.nested(|w| w.matrix(&f.map(a, b).matrix));
            }
        }
    }

    fn functor(&mut self, f: &VFunctor) {
        self.line("v-functor");
        self.nested(|w| {
            w.category(f.source());
            w.functor_body(f);
        });
    }

    fn nat_components(&mut self, alpha: &VNat) {
        let c = alpha.source().source();
        for a in 0..c.len() {
            self.line(format!("component {}", c.name(a)));
            self.nested(|w| w.matrix(&alpha.component(a).matrix));
        }
    }

    fn nat(&mut self, alpha: &VNat) {
        self.line("v-nat");
        self.nested(|w| {
            w.line("source");
            w.nested(|w| w.functor(alpha.source()));
            w.line("target");
            w.nested(|w| w.functor(alpha.target()));
            w.nat_components(alpha);
        });
    }

    fn functor_complex(&mut self, x: &FunctorComplex) {
        if x.is_empty() {
            self.line("functor-complex empty");
            self.nested(|w| w.category(x.category()));
            return;
        }
        self.line(format!("functor-complex {} {}", x.lo(), x.hi()));
        self.nested(|w| {
            w.category(x.category());
            for n in x.degrees() {
                w.line(format!("level {n}"));
                w.nested(|w| w.functor_body(&x.level(n)));
            }
            for n in x.degrees().skip(1) {
                w.line(format!("diff {n}"));
                w.nested(|w| w.nat_components(&x.diff(n)));
            }
        });
    }

    fn dg_functor(&mut self, f: &DgFunctor) {
        let c = f.category();
        let n = c.len();
        self.line("dg-functor");
        self.nested(|w| {
            w.category(c);
            for a in 0..n {
                w.line(format!("value {}", c.name(a)));
                w.nested(|w| w.complex(f.value(a)));
            }
            for a in 0..n {
                for b in 0..n {
                    for p in f.degrees() {
                        w.line(format!("structure {} {} {p}", c.name(a), c.name(b)));
                        w.nested(|w| w.matrix(&f.structure(a, b, p).matrix));
                    }
                }
            }
        });
    }
}

pub fn serialize(doc: &Document) -> String {
    let mut w = Writer {
        out: String::new(),
        depth: 0,
    };
    w.line(format!("format {}", doc.version));
    w.line(format!("ring {}", doc.ring));
    match &doc.payload {
        Payload::Matrix(m) => w.matrix(m),
        Payload::Object(o) => w.line(format!("v-object {}", o.rank)),
        Payload::Morphism(f) => {
            w.line(format!("v-morphism {} {}", f.source.rank, f.target.rank));
            w.nested(|w| w.matrix(&f.matrix));
        }
        Payload::Complex(x) => w.complex(x),
        Payload::ChainMap(f) => w.chain_map(f),
        Payload::Category(c) => w.category(c),
        Payload::Functor(f) => w.functor(f),
        Payload::Nat(a) => w.nat(a),
        Payload::FunctorComplex(x) => w.functor_complex(x),
        Payload::DgFunctor(f) => w.dg_functor(f),
    }
    w.out
}

// ---------------------------------------------------------------- reading

#[derive(Clone, Copy)]
struct Tok<'a> {
    col: usize,
    text: &'a str,
}

struct Line<'a> {
    no: usize,
    toks: Vec<Tok<'a>>,
    width: usize,
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    ring: RingSpec,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut toks = Vec::new();
        let mut start = None;
        for (j, ch) in raw.char_indices() {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    toks.push(Tok {
                        col: raw[..s].chars().count() + 1,
                        text: &raw[s..j],
                    });
                }
            } else if start.is_none() {
                start = Some(j);
            }
        }
        if let Some(s) = start {
            toks.push(Tok {
                col: raw[..s].chars().count() + 1,
                text: &raw[s..],
            });
        }
        if !toks.is_empty() {
            out.push(Line {
                no: i + 1,
                toks,
                width: raw.chars().count(),
            });
        }
    }
    out
}

impl<'a> Parser<'a> {
    fn eof_error(&self, what: &str) -> Error {
        let line = self.lines.last().map_or(1, |l| l.no + 1);
        err(line, 1, format!("expected {what}, found end of input"))
    }

    /// Consumes a line `kw arg…` with exactly `nargs` arguments.
    fn expect(&mut self, kw: &str, nargs: usize) -> Result<(usize, Vec<Tok<'a>>)> {
        let Some(line) = self.lines.get(self.pos) else {
            return Err(self.eof_error(&format!("`{kw}`")));
        };
        let head = line.toks[0];
        if head.text != kw {
            return Err(err(
                line.no,
                head.col,
                format!("expected `{kw}`, found `{}`", head.text),
            ));
        }
        let args = line.toks[1..].to_vec();
        if args.len() != nargs {
            let col = args.get(nargs).map_or(line.width + 1, |t| t.col);
            return Err(err(
                line.no,
                col,
                format!("`{kw}` takes {nargs} argument(s), found {}", args.len()),
            ));
        }
        self.pos += 1;
        Ok((line.no, args))
    }

    fn number<T: FromStr>(&self, line: usize, t: Tok<'a>, what: &str) -> Result<T> {
        t.text
            .parse()
            .map_err(|_| err(line, t.col, format!("expected {what}, found `{}`", t.text)))
    }

    fn name(&self, line: usize, t: Tok<'a>, expected: &str) -> Result<()> {
        if t.text != expected {
            return Err(err(
                line,
                t.col,
                format!("expected object `{expected}`, found `{}`", t.text),
            ));
        }
        Ok(())
    }

    fn scalar(&self, line: usize, t: Tok<'a>) -> Result<Scalar> {
        let v: Scalar = t.text.parse().map_err(|_| {
            err(
                line,
                t.col,
                format!("expected a scalar, found `{}`", t.text),
            )
        })?;
        let c = self
            .ring
            .canonical(v)
            .map_err(|e| err(line, t.col, e.to_string()))?;
        if c.to_string() != t.text {
            return Err(err(
                line,
                t.col,
                format!("scalar `{}` is not in canonical form `{c}`", t.text),
            ));
        }
        Ok(c)
    }

    fn matrix(&mut self) -> Result<Matrix> {
        let (no, a) = self.expect("matrix", 2)?;
        let rows: usize = self.number(no, a[0], "a row count")?;
        let cols: usize = self.number(no, a[1], "a column count")?;
        let mut data = Vec::with_capacity(rows * cols);
        if cols > 0 {
            for _ in 0..rows {
                let Some(line) = self.lines.get(self.pos) else {
                    return Err(self.eof_error("a matrix row"));
                };
                if line.toks.len() != cols {
                    let col = line.toks.get(cols).map_or(line.width + 1, |t| t.col);
                    return Err(err(
                        line.no,
                        col,
                        format!("matrix row needs {cols} entries, found {}", line.toks.len()),
                    ));
                }
                for t in &line.toks {
                    data.push(self.scalar(line.no, *t)?);
                }
                self.pos += 1;
            }
        }
        Matrix::new(self.ring.clone(), rows, cols, data).map_err(|e| err(no, 1, e.to_string()))
    }

    fn invalid(line: usize) -> impl FnOnce(Error) -> Error {
        move |cause| Error::Invalid {
            line,
            cause: Box::new(cause),
        }
    }

    fn window(&self, no: usize, a: &[Tok<'a>]) -> Result<Option<(i64, i64)>> {
        match a {
            [t] if t.text == "empty" => Ok(None),
            [lo, hi] => {
                let lo: i64 = self.number(no, *lo, "a degree")?;
                let hi: i64 = self.number(no, *hi, "a degree")?;
                if hi < lo {
                    return Err(err(no, a[1].col, "window upper end below lower end"));
                }
                Ok(Some((lo, hi)))
            }
            _ => Err(err(
                no,
                a.first().map_or(1, |t| t.col),
                "expected `LO HI` or `empty`",
            )),
        }
    }

    fn header(&mut self, kw: &str) -> Result<(usize, Vec<Tok<'a>>)> {
        let Some(line) = self.lines.get(self.pos) else {
            return Err(self.eof_error(&format!("`{kw}`")));
        };
        let n = line.toks.len() - 1;
        self.expect(kw, n)
    }

    fn complex(&mut self) -> Result<ChainComplex> {
        let (no, a) = self.header("complex")?;
        let Some((lo, hi)) = self.window(no, &a)? else {
            return Ok(ChainComplex::zero(self.ring.clone()));
        };
        let mut ranks = Vec::new();
        for n in lo..=hi {
            let (l, a) = self.expect("rank", 2)?;
            let d: i64 = self.number(l, a[0], "a degree")?;
            if d != n {
                return Err(err(l, a[0].col, format!("expected degree {n}")));
            }
            ranks.push(self.number(l, a[1], "a rank")?);
        }
        let mut diffs = Vec::new();
        for n in lo + 1..=hi {
            let (l, a) = self.expect("diff", 1)?;
            let d: i64 = self.number(l, a[0], "a degree")?;
            if d != n {
                return Err(err(l, a[0].col, format!("expected degree {n}")));
            }
            diffs.push(self.matrix()?);
        }
        ChainComplex::new(self.ring.clone(), lo, ranks, diffs).map_err(Self::invalid(no))
    }

    fn chain_map(&mut self) -> Result<ChainMap> {
        let (no, _) = self.expect("chain-map", 0)?;
        self.expect("source", 0)?;
        let x = self.complex()?;
        self.expect("target", 0)?;
        let y = self.complex()?;
        let mut comps = Vec::new();
        for n in x.degrees() {
            let (l, a) = self.expect("component", 1)?;
            let d: i64 = self.number(l, a[0], "a degree")?;
            if d != n {
                return Err(err(l, a[0].col, format!("expected degree {n}")));
            }
            comps.push(self.matrix()?);
        }
        ChainMap::new(x, y, comps).map_err(Self::invalid(no))
    }

    fn category(&mut self) -> Result<VCategory> {
        let (no, a) = self.expect("v-category", 1)?;
        let n: usize = self.number(no, a[0], "an object count")?;
        let ring = self.ring.clone();
        let mut objects: Vec<String> = Vec::with_capacity(n);
        for _ in 0..n {
            let (l, a) = self.expect("object", 1)?;
            if objects.iter().any(|o| o == a[0].text) {
                return Err(err(
                    l,
                    a[0].col,
                    format!("duplicate object `{}`", a[0].text),
                ));
            }
            objects.push(a[0].text.to_string());
        }
        let mut homs = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (l, a) = self.expect("hom", 3)?;
                self.name(l, a[0], &objects[x])?;
                self.name(l, a[1], &objects[y])?;
                homs.push(VObject::new(ring.clone(), self.number(l, a[2], "a rank")?));
            }
        }
        let mut comps = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (l, a) = self.expect("comp", 3)?;
                    self.name(l, a[0], &objects[x])?;
                    self.name(l, a[1], &objects[y])?;
                    self.name(l, a[2], &objects[z])?;
                    let src = tensor_obj(&homs[x * n + y], &homs[y * n + z])?;
                    let m = self.matrix()?;
                    comps.push(
                        VMorphism::new(src, homs[x * n + z].clone(), m)
                            .map_err(Self::invalid(l))?,
                    );
                }
            }
        }
        let mut units = Vec::with_capacity(n);
        for x in 0..n {
            let (l, a) = self.expect("unit", 1)?;
            self.name(l, a[0], &objects[x])?;
            let m = self.matrix()?;
            units.push(
                VMorphism::new(VObject::unit(ring.clone()), homs[x * n + x].clone(), m)
                    .map_err(Self::invalid(l))?,
            );
        }
        EnrichedCategory::new(ring, objects, homs, comps, units).map_err(Self::invalid(no))
    }

    fn functor_body(&mut self, cat: &VCategory, no: usize) -> Result<VFunctor> {
        let n = cat.len();
        let mut values = Vec::with_capacity(n);
        for x in 0..n {
            let (l, a) = self.expect("value", 2)?;
            self.name(l, a[0], cat.name(x))?;
            values.push(VObject::new(
                self.ring.clone(),
                self.number(l, a[1], "a rank")?,
            ));
        }
        let mut maps = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (l, a) = self.expect("map", 2)?;
                self.name(l, a[0], cat.name(x))?;
                self.name(l, a[1], cat.name(y))?;
                let m = self.matrix()?;
                let tgt = hom_obj(&values[x], &values[y])?;
                maps.push(VMorphism::new(cat.hom(x, y).clone(), tgt, m).map_err(Self::invalid(l))?);
            }
        }
        VFunctor::new(cat.clone(), values, maps).map_err(Self::invalid(no))
    }

    fn functor(&mut self) -> Result<VFunctor> {
        let (no, _) = self.expect("v-functor", 0)?;
        let cat = self.category()?;
        self.functor_body(&cat, no)
    }

    fn nat_components(&mut self, src: &VFunctor, tgt: &VFunctor, no: usize) -> Result<VNat> {
        let cat = src.source();
        let mut comps = Vec::with_capacity(cat.len());
        for x in 0..cat.len() {
            let (l, a) = self.expect("component", 1)?;
            self.name(l, a[0], cat.name(x))?;
            let m = self.matrix()?;
            comps.push(
                VMorphism::new(src.value(x).clone(), tgt.value(x).clone(), m)
                    .map_err(Self::invalid(l))?,
            );
        }
        EnrichedNat::new(src.clone(), tgt.clone(), comps).map_err(Self::invalid(no))
    }

    fn nat(&mut self) -> Result<VNat> {
        let (no, _) = self.expect("v-nat", 0)?;
        self.expect("source", 0)?;
        let src = self.functor()?;
        self.expect("target", 0)?;
        let tgt = self.functor()?;
        self.nat_components(&src, &tgt, no)
    }

    fn functor_complex(&mut self) -> Result<FunctorComplex> {
        let (no, a) = self.header("functor-complex")?;
        let window = self.window(no, &a)?;
        let cat = self.category()?;
        let Some((lo, hi)) = window else {
            return Ok(FunctorComplex::zero(&cat));
        };
        let mut levels = Vec::new();
        for n in lo..=hi {
            let (l, a) = self.expect("level", 1)?;
            let d: i64 = self.number(l, a[0], "a degree")?;
            if d != n {
                return Err(err(l, a[0].col, format!("expected degree {n}")));
            }
            levels.push(self.functor_body(&cat, l)?);
        }
        let mut diffs = Vec::new();
        for n in lo + 1..=hi {
            let (l, a) = self.expect("diff", 1)?;
            let d: i64 = self.number(l, a[0], "a degree")?;
            if d != n {
                return Err(err(l, a[0].col, format!("expected degree {n}")));
            }
            let (src, tgt) = (&levels[(n - lo) as usize], &levels[(n - lo - 1) as usize]);
            diffs.push(self.nat_components(src, tgt, l)?);
        }
        FunctorComplex::new(cat, lo, levels, diffs).map_err(Self::invalid(no))
    }

    fn dg_functor(&mut self) -> Result<DgFunctor> {
        let (no, _) = self.expect("dg-functor", 0)?;
        let cat = self.category()?;
        let n = cat.len();
        let mut objects = Vec::with_capacity(n);
        for x in 0..n {
            let (l, a) = self.expect("value", 1)?;
            self.name(l, a[0], cat.name(x))?;
            objects.push(self.complex()?);
        }
        let live: Vec<&ChainComplex> = objects.iter().filter(|o| !o.is_empty()).collect();
        let degrees: Vec<i64> = match (
            live.iter().map(|o| o.lo()).min(),
            live.iter().map(|o| o.hi()).max(),
        ) {
            (Some(lo), Some(hi)) => (lo..=hi).collect(),
            _ => Vec::new(),
        };
        let mut structure = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let mut row = Vec::with_capacity(degrees.len());
                for &p in &degrees {
                    let (l, a) = self.expect("structure", 3)?;
                    self.name(l, a[0], cat.name(x))?;
                    self.name(l, a[1], cat.name(y))?;
                    let d: i64 = self.number(l, a[2], "a degree")?;
                    if d != p {
                        return Err(err(l, a[2].col, format!("expected degree {p}")));
                    }
                    let m = self.matrix()?;
                    let tgt =
                        VObject::new(self.ring.clone(), objects[x].rank(p) * objects[y].rank(p));
                    row.push(
                        VMorphism::new(cat.hom(x, y).clone(), tgt, m).map_err(Self::invalid(l))?,
                    );
                }
                structure.push(row);
            }
        }
        DgFunctor::new(cat, objects, structure).map_err(Self::invalid(no))
    }

    fn payload(&mut self) -> Result<Payload> {
        let Some(line) = self.lines.get(self.pos) else {
            return Err(self.eof_error("a value"));
        };
        let head = line.toks[0];
        Ok(match head.text {
            "matrix" => Payload::Matrix(self.matrix()?),
            "v-object" => {
                let (l, a) = self.expect("v-object", 1)?;
                Payload::Object(VObject::new(
                    self.ring.clone(),
                    self.number(l, a[0], "a rank")?,
                ))
            }
            "v-morphism" => {
                let (l, a) = self.expect("v-morphism", 2)?;
                let s = VObject::new(self.ring.clone(), self.number(l, a[0], "a rank")?);
                let t = VObject::new(self.ring.clone(), self.number(l, a[1], "a rank")?);
                let m = self.matrix()?;
                Payload::Morphism(VMorphism::new(s, t, m).map_err(Self::invalid(l))?)
            }
            "complex" => Payload::Complex(self.complex()?),
            "chain-map" => Payload::ChainMap(self.chain_map()?),
            "v-category" => Payload::Category(self.category()?),
            "v-functor" => Payload::Functor(self.functor()?),
            "v-nat" => Payload::Nat(self.nat()?),
            "functor-complex" => Payload::FunctorComplex(self.functor_complex()?),
            "dg-functor" => Payload::DgFunctor(self.dg_functor()?),
            other => {
                return Err(err(
                    line.no,
                    head.col,
                    format!("unknown value tag `{other}`"),
                ))
            }
        })
    }
}

pub fn parse(text: &str) -> Result<Document> {
    let mut p = Parser {
        lines: tokenize(text),
        pos: 0,
        ring: RingSpec::Integers,
    };
    let (no, a) = p.expect("format", 1)?;
    let version: u64 = p.number(no, a[0], "a format version")?;
    if version != FORMAT_VERSION {
        return Err(Error::UnsupportedVersion(version));
    }
    let (no, a) = p.expect("ring", 1)?;
    let ring: RingSpec = a[0]
        .text
        .parse()
        .map_err(|e: Error| err(no, a[0].col, e.to_string()))?;
    p.ring = ring.clone();
    let payload = p.payload()?;
    if let Some(extra) = p.lines.get(p.pos) {
        return Err(err(
            extra.no,
            extra.toks[0].col,
            "trailing content after the value",
        ));
    }
    Ok(Document {
        version,
        ring,
        payload,
    })
}

/// The opt-in axiom checks for values that carry them.
pub fn verify_axioms(doc: &Document) -> Result<Report> {
    match &doc.payload {
        Payload::Category(c) => check_category_axioms(c),
        Payload::Functor(f) => {
            let mut r = check_category_axioms(f.source())?;
            r.absorb(check_functor_axioms(f)?);
            Ok(r)
        }
        Payload::Nat(a) => {
            let mut r = check_functor_axioms(a.source())?;
            r.absorb(check_functor_axioms(a.target())?);
            r.absorb(check_vnat(a)?);
            Ok(r)
        }
        Payload::FunctorComplex(x) => {
            let mut r = check_category_axioms(x.category())?;
            r.absorb(x.check()?);
            Ok(r)
        }
        Payload::DgFunctor(f) => {
            let mut r = check_category_axioms(f.category())?;
            r.absorb(check_structure_condition(f)?);
            if r.is_ok() {
                r.absorb(check_dg_functor_axioms(f)?);
            }
            Ok(r)
        }
        _ => Ok(Report::new("value axioms")),
    }
}
