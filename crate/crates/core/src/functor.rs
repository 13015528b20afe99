//! Functors and natural transformations between finite categories.

use std::fmt;
use std::sync::Arc;

use crate::category::{FiniteCategory, MorId, ObjId};
use crate::error::{Error, Result};
use crate::guard::{NodeCounter, SizeGuard};
use crate::limits::{self, is_pullback_square, CommutingSquare, Cospan};

pub(crate) fn same_category(a: &Arc<FiniteCategory>, b: &Arc<FiniteCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A functor stored as its object and morphism maps.
///
/// Equality is extensional: same categories, same maps.
#[derive(Clone)]
pub struct Functor {
    source: Arc<FiniteCategory>,
    target: Arc<FiniteCategory>,
    objects: Vec<ObjId>,
    morphisms: Vec<MorId>,
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && same_category(&self.source, &other.source)
            && same_category(&self.target, &other.target)
    }
}

impl Eq for Functor {}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let objs: Vec<_> = self
            .source
            .object_ids()
            .map(|x| {
                format!(
                    "{}->{}",
                    self.source.obj_name(x),
                    self.target.obj_name(self.obj(x))
                )
            })
            .collect();
        write!(
            f,
            "Functor({} -> {}: {})",
            self.source.name(),
            self.target.name(),
            objs.join(", ")
        )
    }
}

impl Functor {
    /// Checks boundaries, identities and composites exhaustively (validate_functor).
    pub fn new(
        source: Arc<FiniteCategory>,
        target: Arc<FiniteCategory>,
        objects: Vec<ObjId>,
        morphisms: Vec<MorId>,
    ) -> Result<Functor> {
        if objects.len() != source.object_count() || morphisms.len() != source.morphism_count() {
            return Err(Error::IncompleteMap(format!(
                "functor out of `{}` must map {} objects and {} morphisms",
                source.name(),
                source.object_count(),
                source.morphism_count()
            )));
        }
        if objects.iter().any(|y| y.0 >= target.object_count())
            || morphisms.iter().any(|g| g.0 >= target.morphism_count())
        {
            return Err(Error::IncompleteMap(format!(
                "functor into `{}` refers to a missing object or morphism",
                target.name()
            )));
        }
        let f = Functor {
            source,
            target,
            objects,
            morphisms,
        };
        f.check()?;
        Ok(f)
    }

    fn check(&self) -> Result<()> {
        let (s, t) = (&*self.source, &*self.target);
        for m in s.morphism_ids() {
            let img = self.mor(m);
            if t.src(img) != self.obj(s.src(m)) || t.tgt(img) != self.obj(s.tgt(m)) {
                return Err(Error::BoundaryViolation(s.mor_name(m).to_string()));
            }
        }
        for x in s.object_ids() {
            if self.mor(s.identity(x)) != t.identity(self.obj(x)) {
                return Err(Error::IdentityNotPreserved(s.obj_name(x).to_string()));
            }
        }
        for f in s.morphism_ids() {
            for &g in s.outgoing(s.tgt(f)) {
                if self.mor(s.comp(g, f)) != t.comp(self.mor(g), self.mor(f)) {
                    return Err(Error::CompositionNotPreserved {
                        g: s.mor_name(g).to_string(),
                        f: s.mor_name(f).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn identity(c: &Arc<FiniteCategory>) -> Functor {
        Functor {
            source: c.clone(),
            target: c.clone(),
            objects: c.object_ids().collect(),
            morphisms: c.morphism_ids().collect(),
        }
    }

    /// The constant functor at `at`.
    pub fn constant(
        source: &Arc<FiniteCategory>,
        target: &Arc<FiniteCategory>,
        at: ObjId,
    ) -> Functor {
        Functor {
            source: source.clone(),
            target: target.clone(),
            objects: vec![at; source.object_count()],
            morphisms: vec![target.identity(at); source.morphism_count()],
        }
    }

    pub(crate) fn from_parts_unchecked(
        source: Arc<FiniteCategory>,
        target: Arc<FiniteCategory>,
        objects: Vec<ObjId>,
        morphisms: Vec<MorId>,
    ) -> Functor {
        Functor {
            source,
            target,
            objects,
            morphisms,
        }
    }

    pub fn source(&self) -> &Arc<FiniteCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteCategory> {
        &self.target
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.objects[x.0]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.morphisms[f.0]
    }

    pub fn object_map(&self) -> &[ObjId] {
        &self.objects
    }

    pub fn morphism_map(&self) -> &[MorId] {
        &self.morphisms
    }

    pub fn image_of_square(&self, s: &CommutingSquare) -> CommutingSquare {
        CommutingSquare {
            apex: self.obj(s.apex),
            to_left: self.mor(s.to_left),
            to_right: self.mor(s.to_right),
            left: self.mor(s.left),
            right: self.mor(s.right),
        }
    }
}

/// `g` after `f`.
pub fn compose_functors(g: &Functor, f: &Functor) -> Result<Functor> {
    if !same_category(f.target(), g.source()) {
        return Err(Error::MismatchedCategories(format!(
            "cannot compose a functor out of `{}` after one into `{}`",
            g.source().name(),
            f.target().name()
        )));
    }
    Ok(Functor {
        source: f.source.clone(),
        target: g.target.clone(),
        objects: f.objects.iter().map(|&x| g.obj(x)).collect(),
        morphisms: f.morphisms.iter().map(|&m| g.mor(m)).collect(),
    })
}

/// First source cospan whose canonical pullback is not sent to a pullback.
///
/// Cospans without a pullback in the source impose nothing.
pub fn pullback_preservation_counterexample(f: &Functor) -> Option<Cospan> {
    let t = f.target();
    limits::pullback_table(f.source())
        .entries()
        .iter()
        .find(|(_, sq)| matches!(sq, Some(sq) if !is_pullback_square(t, &f.image_of_square(sq))))
        .map(|(cospan, _)| *cospan)
}

pub fn preserves_pullbacks(f: &Functor) -> bool {
    pullback_preservation_counterexample(f).is_none()
}

/// Like [`pullback_preservation_counterexample`], but tries every pullback square,
/// not only the canonical one.
pub fn pullback_preservation_counterexample_exhaustive(f: &Functor) -> Option<Cospan> {
    let (s, t) = (f.source(), f.target());
    limits::cospans(s).find(|&cospan| {
        limits::pullback_squares_over(s, cospan)
            .iter()
            .any(|sq| !is_pullback_square(t, &f.image_of_square(sq)))
    })
}

/// Natural transformation given by one component per source object.
#[derive(Clone, PartialEq, Eq)]
pub struct NatTrans {
    source: Functor,
    target: Functor,
    components: Vec<MorId>,
}

impl fmt::Debug for NatTrans {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.codomain();
        let comps: Vec<_> = self.components.iter().map(|&m| c.mor_name(m)).collect();
        write!(f, "NatTrans[{}]", comps.join(", "))
    }
}

impl NatTrans {
    /// Checks that both functors are parallel, every component has the right
    /// boundary, and every naturality square commutes (validate_nattrans).
    pub fn new(source: Functor, target: Functor, components: Vec<MorId>) -> Result<NatTrans> {
        if !same_category(source.source(), target.source())
            || !same_category(source.target(), target.target())
        {
            return Err(Error::MismatchedCategories(
                "transformation between functors that are not parallel".into(),
            ));
        }
        let (a, b) = (source.source().clone(), source.target().clone());
        if components.len() != a.object_count() {
            return Err(Error::IncompleteMap(format!(
                "transformation needs one component per object of `{}`",
                a.name()
            )));
        }
        for x in a.object_ids() {
            let m = components[x.0];
            if m.0 >= b.morphism_count() || b.src(m) != source.obj(x) || b.tgt(m) != target.obj(x) {
                return Err(Error::BoundaryMismatch(format!(
                    "component at `{}` has the wrong source or target",
                    a.obj_name(x)
                )));
            }
        }
        let t = NatTrans {
            source,
            target,
            components,
        };
        if let Some(alpha) = a.morphism_ids().find(|&m| !t.is_natural_at(m)) {
            return Err(Error::NaturalityViolation(a.mor_name(alpha).to_string()));
        }
        Ok(t)
    }

    pub(crate) fn from_parts_unchecked(
        source: Functor,
        target: Functor,
        components: Vec<MorId>,
    ) -> NatTrans {
        NatTrans {
            source,
            target,
            components,
        }
    }

    pub fn identity(f: &Functor) -> NatTrans {
        let b = f.target();
        NatTrans {
            source: f.clone(),
            target: f.clone(),
            components: f.object_map().iter().map(|&y| b.identity(y)).collect(),
        }
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    pub fn component(&self, x: ObjId) -> MorId {
        self.components[x.0]
    }

    pub fn domain(&self) -> &Arc<FiniteCategory> {
        self.source.source()
    }

    pub fn codomain(&self) -> &Arc<FiniteCategory> {
        self.source.target()
    }

    fn is_natural_at(&self, alpha: MorId) -> bool {
        let (a, b) = (self.domain(), self.codomain());
        let (x, y) = (a.src(alpha), a.tgt(alpha));
        b.comp(self.component(y), self.source.mor(alpha))
            == b.comp(self.target.mor(alpha), self.component(x))
    }

    /// Naturality square at `alpha: x -> y`: apex `F x`, legs `t_x` and `F alpha`,
    /// cospan `G alpha` and `t_y`.
    pub fn naturality_square(&self, alpha: MorId) -> CommutingSquare {
        let a = self.domain();
        CommutingSquare {
            apex: self.source.obj(a.src(alpha)),
            to_left: self.component(a.src(alpha)),
            to_right: self.source.mor(alpha),
            left: self.target.mor(alpha),
            right: self.component(a.tgt(alpha)),
        }
    }
}

/// First source morphism whose naturality square is not a pullback.
pub fn cartesian_counterexample(t: &NatTrans) -> Option<MorId> {
    let b = t.codomain();
    t.domain()
        .morphism_ids()
        .find(|&alpha| !is_pullback_square(b, &t.naturality_square(alpha)))
}

pub fn is_cartesian(t: &NatTrans) -> bool {
    cartesian_counterexample(t).is_none()
}

/// `t2` after `t1`, componentwise.
pub fn vertical_compose(t2: &NatTrans, t1: &NatTrans) -> Result<NatTrans> {
    if t1.target() != t2.source() {
        return Err(Error::NotComposable {
            g: "second transformation".into(),
            f: "first transformation".into(),
        });
    }
    let b = t1.codomain();
    let components = t1
        .components
        .iter()
        .zip(&t2.components)
        .map(|(&c1, &c2)| b.comp(c2, c1))
        .collect();
    NatTrans::new(t1.source.clone(), t2.target.clone(), components)
}

/// All functors `a -> b` in canonical (object map, morphism map) order.
pub fn enumerate_functors(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    only_pullback_preserving: bool,
    guard: &SizeGuard,
) -> Result<Vec<Functor>> {
    let mut counter = guard.counter();
    enumerate_functors_counted(a, b, only_pullback_preserving, &mut counter)
}

pub(crate) fn enumerate_functors_counted(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    only_pullback_preserving: bool,
    counter: &mut NodeCounter,
) -> Result<Vec<Functor>> {
    if only_pullback_preserving {
        for c in [a, b] {
            if let Some(cospan) = limits::cospan_without_pullback(c) {
                return Err(Error::PreconditionFailed(format!(
                    "`{}` lacks a pullback of ({}, {})",
                    c.name(),
                    c.mor_name(cospan.left),
                    c.mor_name(cospan.right)
                )));
            }
        }
    }
    let mut search = FunctorSearch::new(a, b, counter);
    search.objects(0)?;
    let found = search.found;
    Ok(if only_pullback_preserving {
        found.into_iter().filter(preserves_pullbacks).collect()
    } else {
        found
    })
}

struct FunctorSearch<'a> {
    a: &'a Arc<FiniteCategory>,
    b: &'a Arc<FiniteCategory>,
    objects: Vec<ObjId>,
    morphisms: Vec<MorId>,
    /// Non-identity morphisms whose later endpoint is the given object.
    edges_closing_at: Vec<Vec<MorId>>,
    /// Composable non-identity pairs `(g, f, g∘f)`, grouped by their largest index.
    triples_closing_at: Vec<Vec<(MorId, MorId, MorId)>>,
    counter: &'a mut NodeCounter,
    found: Vec<Functor>,
}

impl<'a> FunctorSearch<'a> {
    fn new(
        a: &'a Arc<FiniteCategory>,
        b: &'a Arc<FiniteCategory>,
        counter: &'a mut NodeCounter,
    ) -> Self {
        let mut edges_closing_at = vec![Vec::new(); a.object_count()];
        let mut triples_closing_at = vec![Vec::new(); a.morphism_count()];
        for f in a.morphism_ids().filter(|&f| !a.is_identity(f)) {
            edges_closing_at[a.src(f).0.max(a.tgt(f).0)].push(f);
            for &g in a.outgoing(a.tgt(f)) {
                if a.is_identity(g) {
                    continue;
                }
                let h = a.comp(g, f);
                let last = g.0.max(f.0).max(h.0);
                triples_closing_at[last].push((g, f, h));
            }
        }
        FunctorSearch {
            a,
            b,
            objects: Vec::with_capacity(a.object_count()),
            morphisms: Vec::with_capacity(a.morphism_count()),
            edges_closing_at,
            triples_closing_at,
            counter,
            found: Vec::new(),
        }
    }

    fn objects(&mut self, i: usize) -> Result<()> {
        if i == self.a.object_count() {
            return self.morphisms(0);
        }
        for y in self.b.object_ids() {
            self.counter.tick()?;
            self.objects.push(y);
            let feasible = self.edges_closing_at[i].iter().all(|&f| {
                !self
                    .b
                    .hom(self.objects[self.a.src(f).0], self.objects[self.a.tgt(f).0])
                    .is_empty()
            });
            if feasible {
                self.objects(i + 1)?;
            }
            self.objects.pop();
        }
        Ok(())
    }

    fn consistent(&self, m: usize) -> bool {
        self.triples_closing_at[m].iter().all(|&(g, f, h)| {
            self.morphisms[h.0] == self.b.comp(self.morphisms[g.0], self.morphisms[f.0])
        })
    }

    fn morphisms(&mut self, m: usize) -> Result<()> {
        if m == self.a.morphism_count() {
            self.found.push(Functor::from_parts_unchecked(
                self.a.clone(),
                self.b.clone(),
                self.objects.clone(),
                self.morphisms.clone(),
            ));
            return Ok(());
        }
        let f = MorId(m);
        let (x, y) = (self.objects[self.a.src(f).0], self.objects[self.a.tgt(f).0]);
        if self.a.is_identity(f) {
            self.morphisms.push(self.b.identity(x));
            self.morphisms(m + 1)?;
            self.morphisms.pop();
            return Ok(());
        }
        let b = self.b.clone();
        for &g in b.hom(x, y) {
            self.counter.tick()?;
            self.morphisms.push(g);
            if self.consistent(m) {
                self.morphisms(m + 1)?;
            }
            self.morphisms.pop();
        }
        Ok(())
    }
}

/// All natural transformations `f => g` in component order, optionally only the cartesian ones.
pub fn enumerate_transformations(
    f: &Functor,
    g: &Functor,
    only_cartesian: bool,
    guard: &SizeGuard,
) -> Result<Vec<NatTrans>> {
    let mut counter = guard.counter();
    enumerate_transformations_counted(f, g, only_cartesian, &mut counter)
}

pub(crate) fn enumerate_transformations_counted(
    f: &Functor,
    g: &Functor,
    only_cartesian: bool,
    counter: &mut NodeCounter,
) -> Result<Vec<NatTrans>> {
    if !same_category(f.source(), g.source()) || !same_category(f.target(), g.target()) {
        return Err(Error::MismatchedCategories(
            "transformations need parallel functors".into(),
        ));
    }
    let a = f.source().clone();
    let mut closing_at = vec![Vec::new(); a.object_count()];
    for m in a.morphism_ids() {
        closing_at[a.src(m).0.max(a.tgt(m).0)].push(m);
    }
    let mut found = Vec::new();
    let mut comps = Vec::with_capacity(a.object_count());
    transformations_from(
        f,
        g,
        only_cartesian,
        &closing_at,
        &mut comps,
        &mut found,
        counter,
    )?;
    Ok(found)
}

fn transformations_from(
    f: &Functor,
    g: &Functor,
    only_cartesian: bool,
    closing_at: &[Vec<MorId>],
    comps: &mut Vec<MorId>,
    found: &mut Vec<NatTrans>,
    counter: &mut NodeCounter,
) -> Result<()> {
    let (a, b) = (f.source(), f.target());
    let x = comps.len();
    if x == a.object_count() {
        found.push(NatTrans::from_parts_unchecked(
            f.clone(),
            g.clone(),
            comps.clone(),
        ));
        return Ok(());
    }
    for &c in b.hom(f.obj(ObjId(x)), g.obj(ObjId(x))) {
        counter.tick()?;
        comps.push(c);
        let ok = closing_at[x].iter().all(|&alpha| {
            let (s, t) = (a.src(alpha), a.tgt(alpha));
            let sq = CommutingSquare {
                apex: f.obj(s),
                to_left: comps[s.0],
                to_right: f.mor(alpha),
                left: g.mor(alpha),
                right: comps[t.0],
            };
            if only_cartesian {
                is_pullback_square(b, &sq)
            } else {
                sq.commutes(b)
            }
        });
        if ok {
            transformations_from(f, g, only_cartesian, closing_at, comps, found, counter)?;
        }
        comps.pop();
    }
    Ok(())
}
