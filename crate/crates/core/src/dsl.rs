//! Line-oriented text format for categories, functors and natural transformations.
//!
//! ```text
//! category Diamond
//! object bot a b top
//! mor bot_a : bot -> a
//! compose a_top bot_a = bot_top   # a_top after bot_a
//!
//! functor F : Arrow -> Diamond
//! object 0 -> bot
//! mor f -> bot_a
//!
//! nattrans t : F => G
//! component 0 -> id_bot
//! ```
//!
//! Identities are implicit and named `id_<obj>`; compositions involving an
//! identity are implicit. A file may hold several documents, each starting at
//! its header line.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::category::{validate_category, FiniteCategory, MorId, Morphism, ObjId, RawCategory};
use crate::error::Error as CategoryError;
use crate::functor::{Functor, NatTrans};
use crate::guard::SizeGuard;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number, or 0 when no single line is responsible.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error, expected {expected}")]
    Syntax { expected: String },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("incomplete document: {0}")]
    Incomplete(String),
    #[error(transparent)]
    Category(CategoryError),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn syntax(line: usize, expected: &str) -> ParseError {
    err(
        line,
        ParseErrorKind::Syntax {
            expected: expected.to_string(),
        },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Category,
    Functor,
    NatTrans,
}

/// Everything loaded from one or more source files, by name.
#[derive(Debug, Clone, Default)]
pub struct Library {
    categories: Vec<Arc<FiniteCategory>>,
    functors: Vec<(String, Functor)>,
    transformations: Vec<(String, NatTrans)>,
    documents: Vec<(DocumentKind, String)>,
}

impl Library {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses every document in `text`; later documents may refer to earlier ones.
    pub fn load(&mut self, text: &str, guard: &SizeGuard) -> Result<(), ParseError> {
        for doc in split_documents(text)? {
            let (kind, name) = (doc.kind, doc.name.clone());
            if self.documents.iter().any(|(k, n)| *k == kind && *n == name) {
                return Err(err(doc.header_line, ParseErrorKind::DuplicateName(name)));
            }
            match kind {
                DocumentKind::Category => {
                    let c = build_category(&doc, guard)?;
                    self.categories.push(Arc::new(c));
                }
                DocumentKind::Functor => {
                    let f = build_functor(&doc, self)?;
                    self.functors.push((name.clone(), f));
                }
                DocumentKind::NatTrans => {
                    let t = build_nattrans(&doc, self)?;
                    self.transformations.push((name.clone(), t));
                }
            }
            self.documents.push((kind, name));
        }
        Ok(())
    }

    pub fn add_category(&mut self, c: Arc<FiniteCategory>) {
        self.documents
            .push((DocumentKind::Category, c.name().to_string()));
        self.categories.push(c);
    }

    pub fn category(&self, name: &str) -> Option<&Arc<FiniteCategory>> {
        self.categories.iter().find(|c| c.name() == name)
    }

    pub fn functor(&self, name: &str) -> Option<&Functor> {
        self.functors
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, f)| f)
    }

    pub fn nattrans(&self, name: &str) -> Option<&NatTrans> {
        self.transformations
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, t)| t)
    }

    /// Categories in load order.
    pub fn categories(&self) -> &[Arc<FiniteCategory>] {
        &self.categories
    }

    pub fn functors(&self) -> &[(String, Functor)] {
        &self.functors
    }

    pub fn transformations(&self) -> &[(String, NatTrans)] {
        &self.transformations
    }

    /// Every document in load order.
    pub fn documents(&self) -> &[(DocumentKind, String)] {
        &self.documents
    }
}

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

struct Document<'a> {
    kind: DocumentKind,
    name: String,
    header_line: usize,
    /// Header tokens after the name.
    header: Vec<&'a str>,
    body: Vec<Line<'a>>,
}

fn split_documents(text: &str) -> Result<Vec<Document<'_>>, ParseError> {
    let mut docs: Vec<Document> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some(&head) = tokens.first() else {
            continue;
        };
        let kind = match head {
            "category" => Some(DocumentKind::Category),
            "functor" => Some(DocumentKind::Functor),
            "nattrans" => Some(DocumentKind::NatTrans),
            _ => None,
        };
        match kind {
            Some(kind) => {
                let name = tokens
                    .get(1)
                    .ok_or_else(|| syntax(number, "a document name"))?
                    .to_string();
                docs.push(Document {
                    kind,
                    name,
                    header_line: number,
                    header: tokens[2..].to_vec(),
                    body: Vec::new(),
                });
            }
            None => match docs.last_mut() {
                Some(doc) => doc.body.push(Line { number, tokens }),
                None => return Err(syntax(number, "`category`, `functor` or `nattrans` header")),
            },
        }
    }
    Ok(docs)
}

fn build_category(doc: &Document, guard: &SizeGuard) -> Result<FiniteCategory, ParseError> {
    if !doc.header.is_empty() {
        return Err(syntax(doc.header_line, "`category <Name>`"));
    }
    let mut objects: Vec<String> = Vec::new();
    let mut object_lines = Vec::new();
    let mut obj_index: HashMap<&str, ObjId> = HashMap::new();
    // (name, src, tgt, line) of declared non-identity morphisms
    let mut declared: Vec<(&str, ObjId, ObjId, usize)> = Vec::new();
    let mut composes: Vec<(&str, &str, &str, usize)> = Vec::new();

    for line in &doc.body {
        let t = &line.tokens;
        match t[0] {
            "object" => {
                if t.len() < 2 {
                    return Err(syntax(line.number, "`object <name> ...`"));
                }
                for &o in &t[1..] {
                    if obj_index.insert(o, ObjId(objects.len())).is_some() {
                        return Err(err(
                            line.number,
                            ParseErrorKind::DuplicateName(o.to_string()),
                        ));
                    }
                    objects.push(o.to_string());
                    object_lines.push(line.number);
                }
            }
            "mor" => {
                if t.len() != 6 || t[2] != ":" || t[4] != "->" {
                    return Err(syntax(line.number, "`mor <name> : <src> -> <tgt>`"));
                }
                let lookup = |o: &str| {
                    obj_index
                        .get(o)
                        .copied()
                        .ok_or_else(|| err(line.number, ParseErrorKind::UnknownName(o.to_string())))
                };
                declared.push((t[1], lookup(t[3])?, lookup(t[5])?, line.number));
            }
            "compose" => {
                if t.len() != 5 || t[3] != "=" {
                    return Err(syntax(line.number, "`compose <g> <f> = <h>`"));
                }
                composes.push((t[1], t[2], t[4], line.number));
            }
            _ => return Err(syntax(line.number, "`object`, `mor` or `compose`")),
        }
    }

    let mut morphisms: Vec<Morphism> = objects
        .iter()
        .enumerate()
        .map(|(x, o)| Morphism {
            name: format!("id_{o}"),
            src: ObjId(x),
            tgt: ObjId(x),
        })
        .collect();
    let identities: Vec<MorId> = (0..objects.len()).map(MorId).collect();
    let mut mor_lines: Vec<usize> = object_lines.clone();
    let mut mor_index: HashMap<String, MorId> = morphisms
        .iter()
        .enumerate()
        .map(|(i, m)| (m.name.clone(), MorId(i)))
        .collect();
    for &(name, src, tgt, number) in &declared {
        if mor_index
            .insert(name.to_string(), MorId(morphisms.len()))
            .is_some()
        {
            return Err(err(number, ParseErrorKind::DuplicateName(name.to_string())));
        }
        morphisms.push(Morphism {
            name: name.to_string(),
            src,
            tgt,
        });
        mor_lines.push(number);
    }

    let mut composites = Vec::with_capacity(composes.len());
    let mut compose_lines: HashMap<(MorId, MorId), usize> = HashMap::new();
    for &(g, f, h, number) in &composes {
        let lookup = |m: &str| {
            mor_index
                .get(m)
                .copied()
                .ok_or_else(|| err(number, ParseErrorKind::UnknownName(m.to_string())))
        };
        let (g, f, h) = (lookup(g)?, lookup(f)?, lookup(h)?);
        let (mg, mf, mh) = (&morphisms[g.0], &morphisms[f.0], &morphisms[h.0]);
        if mf.tgt != mg.src || mh.src != mf.src || mh.tgt != mg.tgt {
            return Err(err(
                number,
                ParseErrorKind::Category(CategoryError::BoundaryMismatch(format!(
                    "compose {} {} = {}",
                    mg.name, mf.name, mh.name
                ))),
            ));
        }
        compose_lines.entry((g, f)).or_insert(number);
        if let Some(&first) = composites
            .iter()
            .find(|&&(g2, f2, _)| (g2, f2) == (g, f))
            .map(|(_, _, h2)| h2)
        {
            if first != h {
                compose_lines.insert((g, f), number);
            }
        }
        composites.push((g, f, h));
    }

    let raw = RawCategory {
        name: doc.name.clone(),
        objects,
        morphisms,
        identities,
        composites,
    };
    validate_category(raw, guard).map_err(|e| {
        let by_name = |n: &str| {
            mor_index
                .get(n)
                .map(|m| mor_lines[m.0])
                .unwrap_or(doc.header_line)
        };
        let at_pair = |g: &str, f: &str| match (mor_index.get(g), mor_index.get(f)) {
            (Some(&g), Some(&f)) => compose_lines
                .get(&(g, f))
                .copied()
                .unwrap_or(doc.header_line),
            _ => doc.header_line,
        };
        let line = match &e {
            CategoryError::MissingComposite { g, f } => by_name(g).max(by_name(f)),
            CategoryError::ConflictingComposite { g, f, .. }
            | CategoryError::IdentityLawViolation { g, f } => at_pair(g, f),
            CategoryError::AssociativityViolation { h, g, f } => {
                by_name(h).max(by_name(g)).max(by_name(f))
            }
            _ => doc.header_line,
        };
        err(line, ParseErrorKind::Category(e))
    })
}

fn header_arrow<'a>(
    doc: &Document<'a>,
    arrow: &str,
    expected: &str,
) -> Result<(&'a str, &'a str), ParseError> {
    match doc.header.as_slice() {
        [":", a, x, b] if *x == arrow => Ok((a, b)),
        _ => Err(syntax(doc.header_line, expected)),
    }
}

fn build_functor(doc: &Document, lib: &Library) -> Result<Functor, ParseError> {
    let (c, d) = header_arrow(doc, "->", "`functor <Name> : <Cat> -> <Cat>`")?;
    let find = |n: &str| {
        lib.category(n)
            .cloned()
            .ok_or_else(|| err(doc.header_line, ParseErrorKind::UnknownName(n.to_string())))
    };
    let (c, d) = (find(c)?, find(d)?);
    let mut objects: Vec<Option<ObjId>> = vec![None; c.object_count()];
    let mut morphisms: Vec<Option<MorId>> = vec![None; c.morphism_count()];
    for line in &doc.body {
        let t = &line.tokens;
        let unknown = |n: &str| err(line.number, ParseErrorKind::UnknownName(n.to_string()));
        match (t[0], t.len()) {
            ("object", 4) if t[2] == "->" => {
                let x = c.object_by_name(t[1]).ok_or_else(|| unknown(t[1]))?;
                let y = d.object_by_name(t[3]).ok_or_else(|| unknown(t[3]))?;
                if objects[x.0].replace(y).is_some() {
                    return Err(err(
                        line.number,
                        ParseErrorKind::DuplicateName(t[1].to_string()),
                    ));
                }
            }
            ("mor", 4) if t[2] == "->" => {
                let f = c.morphism_by_name(t[1]).ok_or_else(|| unknown(t[1]))?;
                let g = d.morphism_by_name(t[3]).ok_or_else(|| unknown(t[3]))?;
                if morphisms[f.0].replace(g).is_some() {
                    return Err(err(
                        line.number,
                        ParseErrorKind::DuplicateName(t[1].to_string()),
                    ));
                }
            }
            _ => {
                return Err(syntax(
                    line.number,
                    "`object <x> -> <y>` or `mor <f> -> <g>`",
                ))
            }
        }
    }
    let objects = objects
        .into_iter()
        .enumerate()
        .map(|(x, y)| {
            y.ok_or_else(|| {
                err(
                    doc.header_line,
                    ParseErrorKind::Incomplete(format!(
                        "no image for object `{}`",
                        c.obj_name(ObjId(x))
                    )),
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let morphisms = morphisms
        .into_iter()
        .enumerate()
        .map(|(f, g)| {
            let f = MorId(f);
            match g {
                Some(g) => Ok(g),
                None if c.is_identity(f) => Ok(d.identity(objects[c.src(f).0])),
                None => Err(err(
                    doc.header_line,
                    ParseErrorKind::Incomplete(format!(
                        "no image for morphism `{}`",
                        c.mor_name(f)
                    )),
                )),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Functor::new(c, d, objects, morphisms)
        .map_err(|e| err(doc.header_line, ParseErrorKind::Category(e)))
}

fn build_nattrans(doc: &Document, lib: &Library) -> Result<NatTrans, ParseError> {
    let (f, g) = header_arrow(doc, "=>", "`nattrans <Name> : <F> => <G>`")?;
    let find = |n: &str| {
        lib.functor(n)
            .cloned()
            .ok_or_else(|| err(doc.header_line, ParseErrorKind::UnknownName(n.to_string())))
    };
    let (f, g) = (find(f)?, find(g)?);
    let (c, d) = (f.source().clone(), f.target().clone());
    let mut components: Vec<Option<MorId>> = vec![None; c.object_count()];
    for line in &doc.body {
        let t = &line.tokens;
        if t.len() != 4 || t[0] != "component" || t[2] != "->" {
            return Err(syntax(line.number, "`component <obj> -> <mor>`"));
        }
        let unknown = |n: &str| err(line.number, ParseErrorKind::UnknownName(n.to_string()));
        let x = c.object_by_name(t[1]).ok_or_else(|| unknown(t[1]))?;
        let m = d.morphism_by_name(t[3]).ok_or_else(|| unknown(t[3]))?;
        if components[x.0].replace(m).is_some() {
            return Err(err(
                line.number,
                ParseErrorKind::DuplicateName(t[1].to_string()),
            ));
        }
    }
    let components = components
        .into_iter()
        .enumerate()
        .map(|(x, m)| {
            m.ok_or_else(|| {
                err(
                    doc.header_line,
                    ParseErrorKind::Incomplete(format!(
                        "no component at `{}`",
                        c.obj_name(ObjId(x))
                    )),
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    NatTrans::new(f, g, components).map_err(|e| err(doc.header_line, ParseErrorKind::Category(e)))
}

fn single<T>(mut items: Vec<T>, what: &str) -> Result<T, ParseError> {
    match items.len() {
        1 => Ok(items.pop().unwrap()),
        n => Err(err(
            0,
            ParseErrorKind::Incomplete(format!("expected exactly one {what} document, found {n}")),
        )),
    }
}

/// Parses a text holding exactly one category document.
pub fn parse_category(text: &str, guard: &SizeGuard) -> Result<FiniteCategory, ParseError> {
    let docs = split_documents(text)?;
    if let Some(d) = docs.iter().find(|d| d.kind != DocumentKind::Category) {
        return Err(syntax(d.header_line, "a category document"));
    }
    let doc = single(docs, "category")?;
    build_category(&doc, guard)
}

/// Parses a text holding one functor document whose categories live in `lib`.
pub fn parse_functor(text: &str, lib: &Library) -> Result<Functor, ParseError> {
    let docs = split_documents(text)?;
    if let Some(d) = docs.iter().find(|d| d.kind != DocumentKind::Functor) {
        return Err(syntax(d.header_line, "a functor document"));
    }
    build_functor(&single(docs, "functor")?, lib)
}

/// Parses a text holding one natural transformation document whose functors live in `lib`.
pub fn parse_nattrans(text: &str, lib: &Library) -> Result<NatTrans, ParseError> {
    let docs = split_documents(text)?;
    if let Some(d) = docs.iter().find(|d| d.kind != DocumentKind::NatTrans) {
        return Err(syntax(d.header_line, "a nattrans document"));
    }
    build_nattrans(&single(docs, "nattrans")?, lib)
}

/// Canonical text: objects on one line, then non-identity morphisms and
/// every composite of two non-identities, in index order.
pub fn serialize_category(c: &FiniteCategory) -> String {
    let mut out = format!("category {}\n", c.name());
    if c.object_count() > 0 {
        let names: Vec<&str> = c.object_ids().map(|x| c.obj_name(x)).collect();
        let _ = writeln!(out, "object {}", names.join(" "));
    }
    for f in c.morphism_ids().filter(|&f| !c.is_identity(f)) {
        let _ = writeln!(
            out,
            "mor {} : {} -> {}",
            c.mor_name(f),
            c.obj_name(c.src(f)),
            c.obj_name(c.tgt(f))
        );
    }
    for f in c.morphism_ids().filter(|&f| !c.is_identity(f)) {
        for &g in c.outgoing(c.tgt(f)) {
            if !c.is_identity(g) {
                let _ = writeln!(
                    out,
                    "compose {} {} = {}",
                    c.mor_name(g),
                    c.mor_name(f),
                    c.mor_name(c.comp(g, f))
                );
            }
        }
    }
    out
}

pub fn serialize_functor(name: &str, f: &Functor) -> String {
    let (c, d) = (f.source(), f.target());
    let mut out = format!("functor {name} : {} -> {}\n", c.name(), d.name());
    for x in c.object_ids() {
        let _ = writeln!(out, "object {} -> {}", c.obj_name(x), d.obj_name(f.obj(x)));
    }
    for m in c.morphism_ids().filter(|&m| !c.is_identity(m)) {
        let _ = writeln!(out, "mor {} -> {}", c.mor_name(m), d.mor_name(f.mor(m)));
    }
    out
}

pub fn serialize_nattrans(name: &str, source: &str, target: &str, t: &NatTrans) -> String {
    let (c, d) = (t.domain(), t.codomain());
    let mut out = format!("nattrans {name} : {source} => {target}\n");
    for x in c.object_ids() {
        let _ = writeln!(
            out,
            "component {} -> {}",
            c.obj_name(x),
            d.mor_name(t.component(x))
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn g() -> SizeGuard {
        SizeGuard::default()
    }

    #[test]
    fn one_serializes_to_two_lines() {
        assert_eq!(
            serialize_category(&fixtures::one()),
            "category One\nobject *\n"
        );
    }

    #[test]
    fn fixtures_round_trip() {
        for c in fixtures::all().iter().chain([&fixtures::v()]) {
            let back = parse_category(&serialize_category(c), &g()).unwrap();
            assert_eq!(&back, c.as_ref());
            assert_eq!(serialize_category(&back), serialize_category(c));
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text =
            "# header\n\ncategory A   # trailing\n  object x y\n\nmor f : x -> y # an arrow\n";
        let c = parse_category(text, &g()).unwrap();
        assert_eq!(c.morphism_count(), 3);
        assert_eq!(c.mor_name(MorId(2)), "f");
    }

    #[test]
    fn missing_composite_reported_at_later_declaration() {
        let text = "category D\nobject a b c\nmor f : a -> b\nmor g : b -> c\nmor h : a -> c\n";
        let e = parse_category(text, &g()).unwrap_err();
        assert_eq!(e.line, 4);
        assert!(matches!(
            e.kind,
            ParseErrorKind::Category(CategoryError::MissingComposite { .. })
        ));
    }

    #[test]
    fn duplicate_morphism_name() {
        let text = "category D\nobject bot a top\nmor f : bot -> a\nmor f : a -> top\n";
        let e = parse_category(text, &g()).unwrap_err();
        assert_eq!(e, err(4, ParseErrorKind::DuplicateName("f".into())));
    }

    #[test]
    fn declared_morphism_clashing_with_identity_name() {
        let e = parse_category("category X\nobject a\nmor id_a : a -> a\n", &g()).unwrap_err();
        assert_eq!(e, err(3, ParseErrorKind::DuplicateName("id_a".into())));
    }

    #[test]
    fn unknown_and_syntax_errors_carry_lines() {
        let e = parse_category("category X\nobject a\nmor f : a -> b\n", &g()).unwrap_err();
        assert_eq!(e, err(3, ParseErrorKind::UnknownName("b".into())));
        let e = parse_category("category X\nobject a\nmor f a -> a\n", &g()).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(e.kind, ParseErrorKind::Syntax { .. }));
        let e = parse_category("object a\n", &g()).unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn conflicting_composite_reported_at_second_entry() {
        let text = "category Z\nobject *\nmor s : * -> *\ncompose s s = id_*\ncompose s s = s\n";
        let e = parse_category(text, &g()).unwrap_err();
        assert_eq!(e.line, 5);
    }

    #[test]
    fn explicit_identity_composition_is_accepted() {
        let text = "category Arrow\nobject 0 1\nmor f : 0 -> 1\ncompose id_1 f = f\n";
        let c = parse_category(text, &g()).unwrap();
        assert_eq!(&c, fixtures::arrow().as_ref());
    }

    #[test]
    fn size_guard_applies_to_parsed_input() {
        let small = SizeGuard {
            max_objects: 3,
            ..SizeGuard::default()
        };
        let text = serialize_category(&fixtures::diamond());
        let e = parse_category(&text, &small).unwrap_err();
        assert!(matches!(
            e.kind,
            ParseErrorKind::Category(CategoryError::SizeGuardExceeded { .. })
        ));
    }

    #[test]
    fn functor_and_nattrans_documents() {
        let text = format!(
            "{}{}\
             functor F : Arrow -> Diamond\nobject 0 -> bot\nobject 1 -> a\nmor f -> bot_a\n\
             functor G : Arrow -> Diamond\nobject 0 -> bot\nobject 1 -> top\nmor f -> bot_top\n\
             nattrans t : F => G\ncomponent 0 -> id_bot\ncomponent 1 -> a_top\n",
            serialize_category(&fixtures::arrow()),
            serialize_category(&fixtures::diamond()),
        );
        let mut lib = Library::new();
        lib.load(&text, &g()).unwrap();
        assert_eq!(lib.categories().len(), 2);
        let f = lib.functor("F").unwrap();
        let t = lib.nattrans("t").unwrap();
        assert_eq!(parse_functor(&serialize_functor("F", f), &lib).unwrap(), *f);
        assert_eq!(
            parse_nattrans(&serialize_nattrans("t", "F", "G", t), &lib).unwrap(),
            *t
        );
    }

    #[test]
    fn incomplete_functor_is_rejected() {
        let mut lib = Library::new();
        lib.add_category(fixtures::arrow());
        let e = parse_functor(
            "functor F : Arrow -> Arrow\nobject 0 -> 0\nobject 1 -> 1\n",
            &lib,
        )
        .unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Incomplete(_)));
    }

    #[test]
    fn non_natural_transformation_is_rejected() {
        let mut lib = Library::new();
        lib.add_category(fixtures::z2());
        let text = "functor I : Z2 -> Z2\nobject * -> *\nmor s -> s\n\
                    functor K : Z2 -> Z2\nobject * -> *\nmor s -> id_*\n\
                    nattrans t : I => K\ncomponent * -> id_*\n";
        let e = lib.load(text, &g()).unwrap_err();
        assert_eq!(e.line, 7);
        assert!(matches!(
            e.kind,
            ParseErrorKind::Category(CategoryError::NaturalityViolation(_))
        ));
    }
}
