//! Product categories and internal homs of pullback-preserving functors.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::category::{FiniteCategory, MorId, Morphism, ObjId, RawCategory};
use crate::error::{Error, Result};
use crate::functor::{
    compose_functors, enumerate_functors_counted, enumerate_transformations_counted, is_cartesian,
    preserves_pullbacks, same_category, Functor, NatTrans,
};
use crate::guard::SizeGuard;
use crate::limits::{self, choose_pullback, CommutingSquare, Cospan, PullbackSquare};

/// Cartesian product of two finite categories with its projections.
///
/// Objects are pairs in lexicographic order. Morphisms list the identity
/// pairs first (in object order), then every other pair lexicographically.
#[derive(Clone)]
pub struct ProductCategory {
    left: Arc<FiniteCategory>,
    right: Arc<FiniteCategory>,
    category: Arc<FiniteCategory>,
    proj_left: Functor,
    proj_right: Functor,
    mor_pairs: Vec<(MorId, MorId)>,
    /// Product morphism for each pair, indexed `f * |mor right| + g`.
    pair_index: Vec<MorId>,
}

impl fmt::Debug for ProductCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProductCategory({})", self.category.name())
    }
}

pub fn product_category(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    guard: &SizeGuard,
) -> Result<ProductCategory> {
    let (na, nb) = (a.object_count(), b.object_count());
    let (ma, mb) = (a.morphism_count(), b.morphism_count());
    guard.check_table("product morphism count", (ma * mb) as u64)?;

    let objects: Vec<String> = a
        .object_ids()
        .flat_map(|x| b.object_ids().map(move |y| (x, y)))
        .map(|(x, y)| format!("({},{})", a.obj_name(x), b.obj_name(y)))
        .collect();
    let pair_obj = |x: ObjId, y: ObjId| ObjId(x.0 * nb + y.0);

    let mut mor_pairs = Vec::with_capacity(ma * mb);
    for x in a.object_ids() {
        for y in b.object_ids() {
            mor_pairs.push((a.identity(x), b.identity(y)));
        }
    }
    for f in a.morphism_ids() {
        for g in b.morphism_ids() {
            if !(a.is_identity(f) && b.is_identity(g)) {
                mor_pairs.push((f, g));
            }
        }
    }
    let mut pair_index = vec![MorId(0); ma * mb];
    for (i, &(f, g)) in mor_pairs.iter().enumerate() {
        pair_index[f.0 * mb + g.0] = MorId(i);
    }
    let morphisms: Vec<Morphism> = mor_pairs
        .iter()
        .enumerate()
        .map(|(i, &(f, g))| {
            let (src, tgt) = (pair_obj(a.src(f), b.src(g)), pair_obj(a.tgt(f), b.tgt(g)));
            let name = if i < na * nb {
                format!("id_{}", objects[src.0])
            } else {
                format!("({},{})", a.mor_name(f), b.mor_name(g))
            };
            Morphism { name, src, tgt }
        })
        .collect();

    let mut composites = Vec::new();
    for (i, &(f1, g1)) in mor_pairs.iter().enumerate() {
        for &f2 in a.outgoing(a.tgt(f1)) {
            for &g2 in b.outgoing(b.tgt(g1)) {
                let (f, g) = (a.comp(f2, f1), b.comp(g2, g1));
                composites.push((
                    pair_index[f2.0 * mb + g2.0],
                    MorId(i),
                    pair_index[f.0 * mb + g.0],
                ));
            }
        }
    }
    let category = Arc::new(FiniteCategory::from_raw(RawCategory {
        name: format!("{}*{}", a.name(), b.name()),
        objects,
        morphisms,
        identities: (0..na * nb).map(MorId).collect(),
        composites,
    })?);

    let proj_left = Functor::from_parts_unchecked(
        category.clone(),
        a.clone(),
        category.object_ids().map(|p| ObjId(p.0 / nb)).collect(),
        mor_pairs.iter().map(|&(f, _)| f).collect(),
    );
    let proj_right = Functor::from_parts_unchecked(
        category.clone(),
        b.clone(),
        category.object_ids().map(|p| ObjId(p.0 % nb)).collect(),
        mor_pairs.iter().map(|&(_, g)| g).collect(),
    );
    Ok(ProductCategory {
        left: a.clone(),
        right: b.clone(),
        category,
        proj_left,
        proj_right,
        mor_pairs,
        pair_index,
    })
}

impl ProductCategory {
    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }

    pub fn left(&self) -> &Arc<FiniteCategory> {
        &self.left
    }

    pub fn right(&self) -> &Arc<FiniteCategory> {
        &self.right
    }

    pub fn proj_left(&self) -> &Functor {
        &self.proj_left
    }

    pub fn proj_right(&self) -> &Functor {
        &self.proj_right
    }

    pub fn pair_object(&self, x: ObjId, y: ObjId) -> ObjId {
        ObjId(x.0 * self.right.object_count() + y.0)
    }

    pub fn pair_morphism(&self, f: MorId, g: MorId) -> MorId {
        self.pair_index[f.0 * self.right.morphism_count() + g.0]
    }

    pub fn unpair_object(&self, p: ObjId) -> (ObjId, ObjId) {
        let nb = self.right.object_count();
        (ObjId(p.0 / nb), ObjId(p.0 % nb))
    }

    pub fn unpair_morphism(&self, m: MorId) -> (MorId, MorId) {
        self.mor_pairs[m.0]
    }

    pub fn tables(&self) -> ProductTables {
        let (a, b, c) = (&self.left, &self.right, &self.category);
        ProductTables {
            kind: "product",
            category: c.name().to_string(),
            left: a.name().to_string(),
            right: b.name().to_string(),
            objects: c
                .object_ids()
                .map(|p| {
                    let (x, y) = self.unpair_object(p);
                    PairEntry {
                        name: c.obj_name(p).to_string(),
                        left: a.obj_name(x).to_string(),
                        right: b.obj_name(y).to_string(),
                    }
                })
                .collect(),
            morphisms: c
                .morphism_ids()
                .map(|m| {
                    let (f, g) = self.unpair_morphism(m);
                    PairEntry {
                        name: c.mor_name(m).to_string(),
                        left: a.mor_name(f).to_string(),
                        right: b.mor_name(g).to_string(),
                    }
                })
                .collect(),
        }
    }
}

/// Sidecar description of a product's generated names.
#[derive(Debug, Clone, Serialize)]
pub struct ProductTables {
    pub kind: &'static str,
    pub category: String,
    pub left: String,
    pub right: String,
    pub objects: Vec<PairEntry>,
    pub morphisms: Vec<PairEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairEntry {
    pub name: String,
    pub left: String,
    pub right: String,
}

/// The functor into `p` whose projections are `f` and `g`.
pub fn pair_functors(f: &Functor, g: &Functor, p: &ProductCategory) -> Result<Functor> {
    if !same_category(f.source(), g.source()) {
        return Err(Error::MismatchedCategories(
            "paired functors must share a source".into(),
        ));
    }
    if !same_category(f.target(), p.left()) || !same_category(g.target(), p.right()) {
        return Err(Error::MismatchedCategories(format!(
            "paired functors must land in the factors of `{}`",
            p.category().name()
        )));
    }
    let x = f.source();
    Ok(Functor::from_parts_unchecked(
        x.clone(),
        p.category().clone(),
        x.object_ids()
            .map(|o| p.pair_object(f.obj(o), g.obj(o)))
            .collect(),
        x.morphism_ids()
            .map(|m| p.pair_morphism(f.mor(m), g.mor(m)))
            .collect(),
    ))
}

/// `f × g : src_left × src_right -> tgt_left × tgt_right`.
pub fn product_map(
    f: &Functor,
    g: &Functor,
    src: &ProductCategory,
    tgt: &ProductCategory,
) -> Result<Functor> {
    let left = compose_functors(f, src.proj_left())?;
    let right = compose_functors(g, src.proj_right())?;
    pair_functors(&left, &right, tgt)
}

/// The category of pullback-preserving functors `domain -> codomain` and
/// cartesian transformations between them.
///
/// Objects follow functor enumeration order. Morphisms list identity
/// transformations first, then the remaining cartesian transformations
/// ordered by (source functor, target functor, components).
#[derive(Clone)]
pub struct HomCategory {
    domain: Arc<FiniteCategory>,
    codomain: Arc<FiniteCategory>,
    category: Arc<FiniteCategory>,
    functors: Vec<Functor>,
    transformations: Vec<NatTrans>,
    functor_index: HashMap<Vec<MorId>, ObjId>,
    transformation_index: HashMap<(ObjId, ObjId, Vec<MorId>), MorId>,
}

impl fmt::Debug for HomCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomCategory({})", self.category.name())
    }
}

pub fn internal_hom(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    guard: &SizeGuard,
) -> Result<HomCategory> {
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
    let mut counter = guard.counter();
    let functors = enumerate_functors_counted(a, b, true, &mut counter)?;
    let n = functors.len();
    let functor_index: HashMap<Vec<MorId>, ObjId> = functors
        .iter()
        .enumerate()
        .map(|(i, f)| (f.morphism_map().to_vec(), ObjId(i)))
        .collect();

    let mut identities = Vec::with_capacity(n);
    let mut others = Vec::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for t in enumerate_transformations_counted(f, g, true, &mut counter)? {
                if i == j && t == NatTrans::identity(f) {
                    identities.push((ObjId(i), ObjId(j), t));
                } else {
                    others.push((ObjId(i), ObjId(j), t));
                }
            }
        }
    }
    if identities.len() != n {
        return Err(Error::Internal(
            "an identity transformation failed the cartesian check".into(),
        ));
    }
    let entries: Vec<(ObjId, ObjId, NatTrans)> = identities.into_iter().chain(others).collect();
    guard.check_table("hom morphism count", entries.len() as u64)?;

    let object_names: Vec<String> = (0..n).map(|i| format!("F{i}")).collect();
    let morphisms: Vec<Morphism> = entries
        .iter()
        .enumerate()
        .map(|(k, (s, t, _))| Morphism {
            name: if k < n {
                format!("id_{}", object_names[s.0])
            } else {
                format!("t{}", k - n)
            },
            src: *s,
            tgt: *t,
        })
        .collect();
    let transformation_index: HashMap<(ObjId, ObjId, Vec<MorId>), MorId> = entries
        .iter()
        .enumerate()
        .map(|(k, (s, t, nt))| ((*s, *t, nt.components().to_vec()), MorId(k)))
        .collect();

    let mut outgoing = vec![Vec::new(); n];
    for (k, (s, _, _)) in entries.iter().enumerate() {
        outgoing[s.0].push(k);
    }
    let mut composites = Vec::new();
    for (k1, (s1, t1, nt1)) in entries.iter().enumerate() {
        for &k2 in &outgoing[t1.0] {
            counter.tick()?;
            let (_, t2, nt2) = &entries[k2];
            let comps: Vec<MorId> = nt1
                .components()
                .iter()
                .zip(nt2.components())
                .map(|(&c1, &c2)| b.comp(c2, c1))
                .collect();
            let Some(&k) = transformation_index.get(&(*s1, *t2, comps)) else {
                return Err(Error::Internal(
                    "composite of cartesian transformations is missing from the hom".into(),
                ));
            };
            composites.push((MorId(k2), MorId(k1), k));
        }
    }

    let category = Arc::new(FiniteCategory::from_raw(RawCategory {
        name: format!("[{},{}]", a.name(), b.name()),
        objects: object_names,
        morphisms,
        identities: (0..n).map(MorId).collect(),
        composites,
    })?);
    if let Some(cospan) = limits::cospan_without_pullback(&category) {
        return Err(Error::Internal(format!(
            "hom category lacks a pullback of ({}, {})",
            category.mor_name(cospan.left),
            category.mor_name(cospan.right)
        )));
    }
    Ok(HomCategory {
        domain: a.clone(),
        codomain: b.clone(),
        category,
        functors,
        transformations: entries.into_iter().map(|(_, _, t)| t).collect(),
        functor_index,
        transformation_index,
    })
}

impl HomCategory {
    pub fn domain(&self) -> &Arc<FiniteCategory> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteCategory> {
        &self.codomain
    }

    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }

    /// Functor behind a hom-object.
    pub fn functor(&self, x: ObjId) -> &Functor {
        &self.functors[x.0]
    }

    /// Transformation behind a hom-morphism.
    pub fn transformation(&self, m: MorId) -> &NatTrans {
        &self.transformations[m.0]
    }

    pub fn functors(&self) -> &[Functor] {
        &self.functors
    }

    pub fn transformations(&self) -> &[NatTrans] {
        &self.transformations
    }

    /// Hom-object whose functor is `f`.
    pub fn object_of(&self, f: &Functor) -> Option<ObjId> {
        if !same_category(f.source(), &self.domain) || !same_category(f.target(), &self.codomain) {
            return None;
        }
        self.functor_index.get(f.morphism_map()).copied()
    }

    /// Hom-morphism whose transformation is `t`.
    pub fn morphism_of(&self, t: &NatTrans) -> Option<MorId> {
        let s = self.object_of(t.source())?;
        let g = self.object_of(t.target())?;
        self.transformation_index
            .get(&(s, g, t.components().to_vec()))
            .copied()
    }

    pub(crate) fn morphism_between(
        &self,
        s: ObjId,
        g: ObjId,
        components: Vec<MorId>,
    ) -> Option<MorId> {
        self.transformation_index.get(&(s, g, components)).copied()
    }

    pub fn tables(&self) -> HomTables {
        let (a, b, h) = (&self.domain, &self.codomain, &self.category);
        HomTables {
            kind: "hom",
            category: h.name().to_string(),
            domain: a.name().to_string(),
            codomain: b.name().to_string(),
            objects: self
                .functors
                .iter()
                .enumerate()
                .map(|(i, f)| FunctorEntry {
                    name: h.obj_name(ObjId(i)).to_string(),
                    objects: a
                        .object_ids()
                        .map(|x| (a.obj_name(x).to_string(), b.obj_name(f.obj(x)).to_string()))
                        .collect(),
                    morphisms: a
                        .morphism_ids()
                        .map(|m| (a.mor_name(m).to_string(), b.mor_name(f.mor(m)).to_string()))
                        .collect(),
                })
                .collect(),
            morphisms: self
                .transformations
                .iter()
                .enumerate()
                .map(|(k, t)| {
                    let m = MorId(k);
                    TransformationEntry {
                        name: h.mor_name(m).to_string(),
                        source: h.obj_name(h.src(m)).to_string(),
                        target: h.obj_name(h.tgt(m)).to_string(),
                        components: a
                            .object_ids()
                            .map(|x| {
                                (
                                    a.obj_name(x).to_string(),
                                    b.mor_name(t.component(x)).to_string(),
                                )
                            })
                            .collect(),
                    }
                })
                .collect(),
        }
    }
}

/// Sidecar description of a hom category's generated names.
#[derive(Debug, Clone, Serialize)]
pub struct HomTables {
    pub kind: &'static str,
    pub category: String,
    pub domain: String,
    pub codomain: String,
    pub objects: Vec<FunctorEntry>,
    pub morphisms: Vec<TransformationEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FunctorEntry {
    pub name: String,
    pub objects: BTreeMap<String, String>,
    pub morphisms: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransformationEntry {
    pub name: String,
    pub source: String,
    pub target: String,
    pub components: BTreeMap<String, String>,
}

/// A pullback in a hom category built pointwise in the codomain.
#[derive(Debug, Clone)]
pub struct HomPullback {
    /// The certified square inside the hom category.
    pub square: PullbackSquare,
    pub apex: Functor,
    pub to_left: NatTrans,
    pub to_right: NatTrans,
    /// Canonical pullback square in the codomain at each domain object.
    pub component_squares: Vec<CommutingSquare>,
}

/// Pullback of `cospan` in `h`, constructed pointwise and certified inside `h`.
pub fn hom_pullback(h: &HomCategory, cospan: Cospan) -> Result<HomPullback> {
    let hc = h.category();
    let cospan = Cospan::new(hc, cospan.left, cospan.right)?;
    let (a, b) = (h.domain(), h.codomain());
    let t = h.transformation(cospan.left);
    let u = h.transformation(cospan.right);
    let (f, g) = (t.source(), u.source());

    let mut component_squares = Vec::with_capacity(a.object_count());
    for x in a.object_ids() {
        let c = Cospan::new(b, t.component(x), u.component(x))?;
        component_squares.push(*choose_pullback(b, c)?.square());
    }
    let apex_objects: Vec<ObjId> = component_squares.iter().map(|s| s.apex).collect();
    let mut apex_morphisms = Vec::with_capacity(a.morphism_count());
    for alpha in a.morphism_ids() {
        let (src, tgt) = (
            &component_squares[a.src(alpha).0],
            &component_squares[a.tgt(alpha).0],
        );
        let cone = CommutingSquare {
            apex: src.apex,
            to_left: b.comp(f.mor(alpha), src.to_left),
            to_right: b.comp(g.mor(alpha), src.to_right),
            left: tgt.left,
            right: tgt.right,
        };
        let mediators: Vec<MorId> = b
            .hom(src.apex, tgt.apex)
            .iter()
            .copied()
            .filter(|&m| {
                b.comp(tgt.to_left, m) == cone.to_left && b.comp(tgt.to_right, m) == cone.to_right
            })
            .collect();
        match mediators.as_slice() {
            [m] => apex_morphisms.push(*m),
            _ => {
                return Err(Error::Internal(format!(
                    "{} mediators for the pointwise apex at `{}`",
                    mediators.len(),
                    a.mor_name(alpha)
                )))
            }
        }
    }
    let apex = Functor::new(a.clone(), b.clone(), apex_objects, apex_morphisms)?;
    if !preserves_pullbacks(&apex) {
        return Err(Error::Internal(
            "pointwise pullback functor does not preserve pullbacks".into(),
        ));
    }
    let to_left = NatTrans::new(
        apex.clone(),
        f.clone(),
        component_squares.iter().map(|s| s.to_left).collect(),
    )?;
    let to_right = NatTrans::new(
        apex.clone(),
        g.clone(),
        component_squares.iter().map(|s| s.to_right).collect(),
    )?;
    if !is_cartesian(&to_left) || !is_cartesian(&to_right) {
        return Err(Error::Internal(
            "pointwise pullback projections are not cartesian".into(),
        ));
    }
    let p = h
        .object_of(&apex)
        .ok_or_else(|| Error::Internal("pointwise pullback functor is not a hom-object".into()))?;
    let r = h
        .morphism_of(&to_left)
        .ok_or_else(|| Error::Internal("left projection is not a hom-morphism".into()))?;
    let s = h
        .morphism_of(&to_right)
        .ok_or_else(|| Error::Internal("right projection is not a hom-morphism".into()))?;
    let square = CommutingSquare::new(hc, p, r, s, cospan.left, cospan.right)?;
    let square = PullbackSquare::certify(hc, square)
        .ok_or_else(|| Error::Internal("pointwise square is not a pullback in the hom".into()))?;
    Ok(HomPullback {
        square,
        apex,
        to_left,
        to_right,
        component_squares,
    })
}

/// Whiskers `t` by `f` on the left: components `f(t_x)`.
fn whisker_left(f: &Functor, t: &NatTrans) -> Result<NatTrans> {
    Ok(NatTrans::from_parts_unchecked(
        compose_functors(f, t.source())?,
        compose_functors(f, t.target())?,
        t.components().iter().map(|&m| f.mor(m)).collect(),
    ))
}

/// The functor `[A,B]_pb -> [A,C]_pb` given by composition with `f: B -> C`.
pub fn postcompose(f: &Functor, h_ab: &HomCategory, h_ac: &HomCategory) -> Result<Functor> {
    if !same_category(h_ab.domain(), h_ac.domain())
        || !same_category(h_ab.codomain(), f.source())
        || !same_category(h_ac.codomain(), f.target())
    {
        return Err(Error::MismatchedCategories(
            "postcomposition needs homs [A,B] and [A,C] for f: B -> C".into(),
        ));
    }
    if let Some(c) = crate::functor::pullback_preservation_counterexample(f) {
        return Err(Error::PreconditionFailed(format!(
            "functor does not preserve the pullback of ({}, {})",
            f.source().mor_name(c.left),
            f.source().mor_name(c.right)
        )));
    }
    let (hab, hac) = (h_ab.category(), h_ac.category());
    let mut objects = Vec::with_capacity(hab.object_count());
    for g in h_ab.functors() {
        let fg = compose_functors(f, g)?;
        objects.push(
            h_ac.object_of(&fg).ok_or_else(|| {
                Error::Internal("composite functor is not in the target hom".into())
            })?,
        );
    }
    let mut morphisms = Vec::with_capacity(hab.morphism_count());
    for t in h_ab.transformations() {
        let ft = whisker_left(f, t)?;
        morphisms.push(h_ac.morphism_of(&ft).ok_or_else(|| {
            Error::Internal("whiskered transformation is not in the target hom".into())
        })?);
    }
    let out = Functor::new(hab.clone(), hac.clone(), objects, morphisms)?;
    if !preserves_pullbacks(&out) {
        return Err(Error::Internal(
            "postcomposition does not preserve pullbacks".into(),
        ));
    }
    Ok(out)
}

/// The functor `[A,C]_pb -> [A',C]_pb` given by precomposition with `l: A' -> A`.
pub fn precompose(l: &Functor, h_ac: &HomCategory, h_a2c: &HomCategory) -> Result<Functor> {
    if !same_category(h_ac.domain(), l.target())
        || !same_category(h_a2c.domain(), l.source())
        || !same_category(h_ac.codomain(), h_a2c.codomain())
    {
        return Err(Error::MismatchedCategories(
            "precomposition needs homs [A,C] and [A',C] for l: A' -> A".into(),
        ));
    }
    if !preserves_pullbacks(l) {
        return Err(Error::PreconditionFailed(
            "precomposed functor does not preserve pullbacks".into(),
        ));
    }
    let (hac, ha2c) = (h_ac.category(), h_a2c.category());
    let mut objects = Vec::with_capacity(hac.object_count());
    for g in h_ac.functors() {
        let gl = compose_functors(g, l)?;
        objects.push(h_a2c.object_of(&gl).ok_or_else(|| {
            Error::Internal("precomposed functor is not in the target hom".into())
        })?);
    }
    let mut morphisms = Vec::with_capacity(hac.morphism_count());
    for (k, t) in h_ac.transformations().iter().enumerate() {
        let m = MorId(k);
        let comps = l.object_map().iter().map(|&x| t.component(x)).collect();
        morphisms.push(
            h_a2c
                .morphism_between(objects[hac.src(m).0], objects[hac.tgt(m).0], comps)
                .ok_or_else(|| {
                    Error::Internal("restricted transformation is not in the target hom".into())
                })?,
        );
    }
    Functor::new(hac.clone(), ha2c.clone(), objects, morphisms)
}
