//! Evaluation, coevaluation, currying and the checks that make
//! categories-with-pullbacks cartesian closed on concrete instances.

use std::sync::Arc;

use crate::category::{FiniteCategory, MorId, ObjId};
use crate::construct::{
    internal_hom, pair_functors, postcompose, precompose, product_category, product_map,
    HomCategory, ProductCategory,
};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::functor::{
    cartesian_counterexample, compose_functors, is_cartesian, pullback_preservation_counterexample,
    same_category, Functor, NatTrans,
};
use crate::guard::SizeGuard;
use crate::iso::CategoryIso;
use crate::report::{Check, Counterexample};

fn expect_factors(
    p: &ProductCategory,
    left: &Arc<FiniteCategory>,
    right: &Arc<FiniteCategory>,
) -> Result<()> {
    if !same_category(p.left(), left) || !same_category(p.right(), right) {
        return Err(Error::MismatchedCategories(format!(
            "`{}` is not the product of `{}` and `{}`",
            p.category().name(),
            left.name(),
            right.name()
        )));
    }
    Ok(())
}

/// Evaluation `[A,B]_pb × A -> B`.
///
/// On morphisms `(t: F => G, α: a -> a')` it returns `G α ∘ t_a`, after
/// checking that it agrees with `t_a' ∘ F α`.
pub fn eval_functor(h: &HomCategory, p: &ProductCategory) -> Result<Functor> {
    expect_factors(p, h.category(), h.domain())?;
    let (a, b, pc) = (h.domain(), h.codomain(), p.category());
    let objects = pc
        .object_ids()
        .map(|q| {
            let (f, x) = p.unpair_object(q);
            h.functor(f).obj(x)
        })
        .collect();
    let mut morphisms = Vec::with_capacity(pc.morphism_count());
    for m in pc.morphism_ids() {
        let (tm, alpha) = p.unpair_morphism(m);
        let t = h.transformation(tm);
        let (x, y) = (a.src(alpha), a.tgt(alpha));
        let via_target = b.comp(t.target().mor(alpha), t.component(x));
        let via_source = b.comp(t.component(y), t.source().mor(alpha));
        if via_target != via_source {
            return Err(Error::Internal(format!(
                "evaluation at ({}, {}) disagrees between the two naturality composites",
                h.category().mor_name(tm),
                a.mor_name(alpha)
            )));
        }
        morphisms.push(via_target);
    }
    Functor::new(pc.clone(), b.clone(), objects, morphisms)
}

/// Coevaluation `B -> [A, B×A]_pb`: `b ↦ (Δ b, 1_A)` and `β ↦ (β, id)`.
pub fn coeval_functor(
    b: &Arc<FiniteCategory>,
    a: &Arc<FiniteCategory>,
    h: &HomCategory,
    bxa: &ProductCategory,
) -> Result<Functor> {
    expect_factors(bxa, b, a)?;
    if !same_category(h.domain(), a) || !same_category(h.codomain(), bxa.category()) {
        return Err(Error::MismatchedCategories(format!(
            "`{}` is not the hom out of `{}` into `{}`",
            h.category().name(),
            a.name(),
            bxa.category().name()
        )));
    }
    let id_a = Functor::identity(a);
    let mut objects = Vec::with_capacity(b.object_count());
    for y in b.object_ids() {
        let delta = Functor::constant(a, b, y);
        let paired = pair_functors(&delta, &id_a, bxa)?;
        objects.push(h.object_of(&paired).ok_or_else(|| {
            Error::Internal(format!(
                "coev({}) is not an object of the hom",
                b.obj_name(y)
            ))
        })?);
    }
    let mut morphisms = Vec::with_capacity(b.morphism_count());
    for beta in b.morphism_ids() {
        let comps = a
            .object_ids()
            .map(|x| bxa.pair_morphism(beta, a.identity(x)))
            .collect();
        let (s, t) = (objects[b.src(beta).0], objects[b.tgt(beta).0]);
        morphisms.push(h.morphism_between(s, t, comps).ok_or_else(|| {
            Error::Internal(format!(
                "coev({}) is not a morphism of the hom",
                b.mor_name(beta)
            ))
        })?);
    }
    Functor::new(b.clone(), h.category().clone(), objects, morphisms)
}

fn expect_curry_shapes(p: &ProductCategory, hom_bc: &HomCategory) -> Result<()> {
    if !same_category(p.right(), hom_bc.domain()) {
        return Err(Error::MismatchedCategories(format!(
            "`{}` does not start at the second factor of `{}`",
            hom_bc.category().name(),
            p.category().name()
        )));
    }
    Ok(())
}

/// The hom-object `b ↦ F(a, b)`.
fn partial_object(
    f: &Functor,
    p: &ProductCategory,
    hom_bc: &HomCategory,
    x: ObjId,
) -> Result<ObjId> {
    let (a, b) = (p.left(), p.right());
    let partial = Functor::new(
        b.clone(),
        f.target().clone(),
        b.object_ids().map(|y| f.obj(p.pair_object(x, y))).collect(),
        b.morphism_ids()
            .map(|beta| f.mor(p.pair_morphism(a.identity(x), beta)))
            .collect(),
    )?;
    if let Some(c) = pullback_preservation_counterexample(&partial) {
        return Err(Error::CurryImageNotInHom(format!(
            "partial application at `{}` does not preserve the pullback of ({}, {})",
            a.obj_name(x),
            b.mor_name(c.left),
            b.mor_name(c.right)
        )));
    }
    hom_bc.object_of(&partial).ok_or_else(|| {
        Error::CurryImageNotInHom(format!("partial application at `{}`", a.obj_name(x)))
    })
}

/// The hom-morphism with components `b ↦ t(a, b)` between the partial applications at `x`.
fn partial_morphism(
    t: &NatTrans,
    p: &ProductCategory,
    hom_bc: &HomCategory,
    x: ObjId,
    src: ObjId,
    tgt: ObjId,
) -> Result<MorId> {
    let b = p.right();
    let comps = b
        .object_ids()
        .map(|y| t.component(p.pair_object(x, y)))
        .collect();
    hom_bc.morphism_between(src, tgt, comps).ok_or_else(|| {
        Error::CurryImageNotInHom(format!(
            "transformation restricted to `{}` is not cartesian",
            p.left().obj_name(x)
        ))
    })
}

/// Curries `f: A×B -> C` into `A -> [B,C]_pb`.
pub fn curry(f: &Functor, p: &ProductCategory, hom_bc: &HomCategory) -> Result<Functor> {
    expect_curry_shapes(p, hom_bc)?;
    if !same_category(f.source(), p.category()) || !same_category(f.target(), hom_bc.codomain()) {
        return Err(Error::MismatchedCategories(
            "curried functor must run from the product into the hom codomain".into(),
        ));
    }
    let (a, b) = (p.left(), p.right());
    let objects = a
        .object_ids()
        .map(|x| partial_object(f, p, hom_bc, x))
        .collect::<Result<Vec<_>>>()?;
    let mut morphisms = Vec::with_capacity(a.morphism_count());
    for alpha in a.morphism_ids() {
        let (x, y) = (a.src(alpha), a.tgt(alpha));
        let (s, t) = (objects[x.0], objects[y.0]);
        let comps: Vec<MorId> = b
            .object_ids()
            .map(|z| f.mor(p.pair_morphism(alpha, b.identity(z))))
            .collect();
        let nt = NatTrans::from_parts_unchecked(
            hom_bc.functor(s).clone(),
            hom_bc.functor(t).clone(),
            comps,
        );
        if let Some(beta) = cartesian_counterexample(&nt) {
            return Err(Error::CurryImageNotInHom(format!(
                "curried `{}` is not cartesian at `{}`",
                a.mor_name(alpha),
                b.mor_name(beta)
            )));
        }
        morphisms.push(hom_bc.morphism_of(&nt).ok_or_else(|| {
            Error::CurryImageNotInHom(format!("curried `{}`", a.mor_name(alpha)))
        })?);
    }
    Functor::new(a.clone(), hom_bc.category().clone(), objects, morphisms)
}

/// Uncurries `g: A -> [B,C]_pb` into `A×B -> C`.
pub fn uncurry(g: &Functor, p: &ProductCategory, hom_bc: &HomCategory) -> Result<Functor> {
    expect_curry_shapes(p, hom_bc)?;
    if !same_category(g.source(), p.left()) || !same_category(g.target(), hom_bc.category()) {
        return Err(Error::MismatchedCategories(
            "uncurried functor must run from the first factor into the hom".into(),
        ));
    }
    let (b, c, pc) = (p.right(), hom_bc.codomain(), p.category());
    let objects = pc
        .object_ids()
        .map(|q| {
            let (x, y) = p.unpair_object(q);
            hom_bc.functor(g.obj(x)).obj(y)
        })
        .collect();
    let mut morphisms = Vec::with_capacity(pc.morphism_count());
    for m in pc.morphism_ids() {
        let (alpha, beta) = p.unpair_morphism(m);
        let t = hom_bc.transformation(g.mor(alpha));
        let (y, y2) = (b.src(beta), b.tgt(beta));
        let first = c.comp(t.component(y2), t.source().mor(beta));
        let second = c.comp(t.target().mor(beta), t.component(y));
        if first != second {
            return Err(Error::Internal(format!(
                "uncurried ({}, {}) disagrees between the two naturality composites",
                p.left().mor_name(alpha),
                b.mor_name(beta)
            )));
        }
        morphisms.push(first);
    }
    Functor::new(pc.clone(), c.clone(), objects, morphisms)
}

/// Outcome of [`check_triangles`].
#[derive(Debug, Clone)]
pub struct CCCWitness {
    pub a: Arc<FiniteCategory>,
    pub b: Arc<FiniteCategory>,
    /// `ev_B : [A,B]_pb × A -> B`
    pub ev: Functor,
    /// `coev_B : B -> [A, B×A]_pb`
    pub coev: Functor,
    pub triangle1: bool,
    pub triangle2: bool,
    pub checks: Vec<Check>,
}

impl CCCWitness {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

fn pb_check(name: String, f: &Functor) -> Check {
    Check::from_counterexample(
        name,
        pullback_preservation_counterexample(f).map(|c| Counterexample::cospan(f.source(), c)),
    )
}

fn identity_check(name: String, composite: &Functor, c: &Arc<FiniteCategory>) -> Check {
    let id = Functor::identity(c);
    match c.object_ids().find(|&x| composite.obj(x) != id.obj(x)) {
        Some(x) => Check::fail(name, Some(Counterexample::object(c, x))),
        None => Check::from_counterexample(
            name,
            c.morphism_ids()
                .find(|&m| composite.mor(m) != m)
                .map(|m| Counterexample::morphism(c, m)),
        ),
    }
}

fn hom_checks(h: &HomCategory, checks: &mut Vec<Check>) {
    let hc = h.category();
    let bad_obj = hc
        .object_ids()
        .find(|&x| pullback_preservation_counterexample(h.functor(x)).is_some());
    checks.push(Check::from_counterexample(
        format!("objects of {} preserve pullbacks", hc.name()),
        bad_obj.map(|x| Counterexample::object(hc, x)),
    ));
    let bad_mor = hc
        .morphism_ids()
        .find(|&m| !is_cartesian(h.transformation(m)));
    checks.push(Check::from_counterexample(
        format!("morphisms of {} are cartesian", hc.name()),
        bad_mor.map(|m| Counterexample::morphism(hc, m)),
    ));
    checks.push(Check::from_counterexample(
        format!("{} has all pullbacks", hc.name()),
        crate::limits::cospan_without_pullback(hc).map(|c| Counterexample::cospan(hc, c)),
    ));
}

/// Verifies both triangle identities for `(- × A) ⊣ [A, -]_pb` at `B`,
/// together with pullback preservation of ev and coev and naturality of
/// both along the identity of `B` and the functor `B -> One`.
pub fn check_triangles(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    guard: &SizeGuard,
) -> Result<CCCWitness> {
    let one = fixtures::one();
    let tests = [
        (format!("1_{}", b.name()), Functor::identity(b)),
        (
            format!("{} -> One", b.name()),
            Functor::constant(b, &one, ObjId(0)),
        ),
    ];
    check_triangles_with(a, b, &tests, guard)
}

/// [`check_triangles`] with caller-supplied, labelled test functors out of `B`
/// for the naturality checks.
pub fn check_triangles_with(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    tests: &[(String, Functor)],
    guard: &SizeGuard,
) -> Result<CCCWitness> {
    let mut checks = Vec::new();
    let id_a = Functor::identity(a);

    let h_b = internal_hom(a, b, guard)?;
    hom_checks(&h_b, &mut checks);
    let hxa = product_category(h_b.category(), a, guard)?;
    let ev = eval_functor(&h_b, &hxa)?;
    checks.push(Check::pass(format!("ev_{} is a functor", b.name())));
    checks.push(pb_check(
        format!("ev_{} preserves pullbacks", b.name()),
        &ev,
    ));

    let bxa = product_category(b, a, guard)?;
    let h_bxa = internal_hom(a, bxa.category(), guard)?;
    let coev = coeval_functor(b, a, &h_bxa, &bxa)?;
    checks.push(Check::pass(format!("coev_{} is a functor", b.name())));
    checks.push(pb_check(
        format!("coev_{} preserves pullbacks", b.name()),
        &coev,
    ));
    let bad_obj = b
        .object_ids()
        .find(|&y| pullback_preservation_counterexample(h_bxa.functor(coev.obj(y))).is_some());
    checks.push(Check::from_counterexample(
        format!("coev_{}(b) preserves pullbacks for every b", b.name()),
        bad_obj.map(|y| Counterexample::object(b, y)),
    ));
    let bad_mor = b
        .morphism_ids()
        .find(|&beta| !is_cartesian(h_bxa.transformation(coev.mor(beta))));
    checks.push(Check::from_counterexample(
        format!("coev_{}(beta) is cartesian for every beta", b.name()),
        bad_mor.map(|m| Counterexample::morphism(b, m)),
    ));

    // ev_{B×A} ∘ (coev_B × 1_A) = 1_{B×A}
    let q = product_category(h_bxa.category(), a, guard)?;
    let ev_bxa = eval_functor(&h_bxa, &q)?;
    let coev_x_id = product_map(&coev, &id_a, &bxa, &q)?;
    let first = compose_functors(&ev_bxa, &coev_x_id)?;
    let t1 = identity_check(
        format!(
            "triangle ev_{0} . (coev_{1} x 1) = 1_{0}",
            bxa.category().name(),
            b.name()
        ),
        &first,
        bxa.category(),
    );

    // [A, ev_B] ∘ coev_{[A,B]} = 1_{[A,B]}
    let h_hxa = internal_hom(a, hxa.category(), guard)?;
    let coev_h = coeval_functor(h_b.category(), a, &h_hxa, &hxa)?;
    let post_ev = postcompose(&ev, &h_hxa, &h_b)?;
    let second = compose_functors(&post_ev, &coev_h)?;
    let t2 = identity_check(
        format!(
            "triangle [{0},ev_{1}] . coev_{2} = 1_{2}",
            a.name(),
            b.name(),
            h_b.category().name()
        ),
        &second,
        h_b.category(),
    );
    let (triangle1, triangle2) = (t1.passed(), t2.passed());
    checks.push(t1);
    checks.push(t2);

    for (label, k) in tests {
        checks.extend(naturality_checks(
            a, b, label, k, &h_b, &hxa, &ev, &bxa, &h_bxa, &coev, guard,
        )?);
    }

    Ok(CCCWitness {
        a: a.clone(),
        b: b.clone(),
        ev,
        coev,
        triangle1,
        triangle2,
        checks,
    })
}

#[allow(clippy::too_many_arguments)]
fn naturality_checks(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    label: &str,
    k: &Functor,
    h_b: &HomCategory,
    hxa: &ProductCategory,
    ev_b: &Functor,
    bxa: &ProductCategory,
    h_bxa: &HomCategory,
    coev_b: &Functor,
    guard: &SizeGuard,
) -> Result<Vec<Check>> {
    if !same_category(k.source(), b) {
        return Err(Error::MismatchedCategories(format!(
            "naturality test functor must start at `{}`",
            b.name()
        )));
    }
    let c = k.target();
    let id_a = Functor::identity(a);

    // ev_C ∘ ([A,K] × 1_A) = K ∘ ev_B
    let h_c = internal_hom(a, c, guard)?;
    let q_c = product_category(h_c.category(), a, guard)?;
    let ev_c = eval_functor(&h_c, &q_c)?;
    let post = postcompose(k, h_b, &h_c)?;
    let lhs = compose_functors(&ev_c, &product_map(&post, &id_a, hxa, &q_c)?)?;
    let rhs = compose_functors(k, ev_b)?;
    let ev_nat = Check::from_bool(format!("ev natural along {label}"), lhs == rhs);

    // coev_C ∘ K = [A, K × 1_A] ∘ coev_B
    let cxa = product_category(c, a, guard)?;
    let h_cxa = internal_hom(a, cxa.category(), guard)?;
    let coev_c = coeval_functor(c, a, &h_cxa, &cxa)?;
    let post = postcompose(&product_map(k, &id_a, bxa, &cxa)?, h_bxa, &h_cxa)?;
    let lhs = compose_functors(&coev_c, k)?;
    let rhs = compose_functors(&post, coev_b)?;
    let coev_nat = Check::from_bool(format!("coev natural along {label}"), lhs == rhs);
    Ok(vec![ev_nat, coev_nat])
}

/// The currying isomorphism `[A×B, C]_pb ≅ [A, [B,C]_pb]_pb` with its ingredients.
#[derive(Debug, Clone)]
pub struct HomIsoWitness {
    pub product: ProductCategory,
    /// `[A×B, C]_pb`
    pub hom_product: HomCategory,
    /// `[B, C]_pb`
    pub hom_bc: HomCategory,
    /// `[A, [B,C]_pb]_pb`
    pub hom_nested: HomCategory,
    pub forward: Functor,
    pub backward: Functor,
    pub checks: Vec<Check>,
}

impl HomIsoWitness {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// The witness as an isomorphism, when both roundtrips are identities.
    pub fn iso(&self) -> Option<CategoryIso> {
        self.passed().then(|| CategoryIso {
            forward: self.forward.clone(),
            backward: self.backward.clone(),
        })
    }
}

/// Builds curry (forward) and uncurry (backward) between the two homs and
/// checks that they are mutually inverse.
pub fn hom_iso(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    c: &Arc<FiniteCategory>,
    guard: &SizeGuard,
) -> Result<HomIsoWitness> {
    let product = product_category(a, b, guard)?;
    let hom_product = internal_hom(product.category(), c, guard)?;
    let hom_bc = internal_hom(b, c, guard)?;
    let hom_nested = internal_hom(a, hom_bc.category(), guard)?;
    let (h1, h2) = (hom_product.category(), hom_nested.category());

    let mut curried = Vec::with_capacity(h1.object_count());
    for f in hom_product.functors() {
        let g = curry(f, &product, &hom_bc)?;
        curried.push(hom_nested.object_of(&g).ok_or_else(|| {
            Error::CurryImageNotInHom("curried functor is not an object of the nested hom".into())
        })?);
    }
    let mut curried_mor = Vec::with_capacity(h1.morphism_count());
    for (k, t) in hom_product.transformations().iter().enumerate() {
        let m = MorId(k);
        let (s, g) = (curried[h1.src(m).0], curried[h1.tgt(m).0]);
        let (fs, fg) = (hom_nested.functor(s), hom_nested.functor(g));
        let comps = a
            .object_ids()
            .map(|x| partial_morphism(t, &product, &hom_bc, x, fs.obj(x), fg.obj(x)))
            .collect::<Result<Vec<_>>>()?;
        curried_mor.push(hom_nested.morphism_between(s, g, comps).ok_or_else(|| {
            Error::CurryImageNotInHom(
                "curried transformation is not a morphism of the nested hom".into(),
            )
        })?);
    }

    let mut uncurried = Vec::with_capacity(h2.object_count());
    for g in hom_nested.functors() {
        let f = uncurry(g, &product, &hom_bc)?;
        uncurried.push(hom_product.object_of(&f).ok_or_else(|| {
            Error::Internal("uncurried functor is not an object of the product hom".into())
        })?);
    }
    let mut uncurried_mor = Vec::with_capacity(h2.morphism_count());
    for (k, s) in hom_nested.transformations().iter().enumerate() {
        let m = MorId(k);
        let comps = product
            .category()
            .object_ids()
            .map(|q| {
                let (x, y) = product.unpair_object(q);
                hom_bc.transformation(s.component(x)).component(y)
            })
            .collect();
        let (src, tgt) = (uncurried[h2.src(m).0], uncurried[h2.tgt(m).0]);
        uncurried_mor.push(
            hom_product
                .morphism_between(src, tgt, comps)
                .ok_or_else(|| {
                    Error::Internal(
                        "uncurried transformation is not a morphism of the product hom".into(),
                    )
                })?,
        );
    }

    let mut checks = Vec::new();
    let forward = Functor::new(h1.clone(), h2.clone(), curried, curried_mor)?;
    checks.push(Check::pass(format!(
        "curry {} -> {} is a functor",
        h1.name(),
        h2.name()
    )));
    let backward = Functor::new(h2.clone(), h1.clone(), uncurried, uncurried_mor)?;
    checks.push(Check::pass(format!(
        "uncurry {} -> {} is a functor",
        h2.name(),
        h1.name()
    )));
    checks.push(identity_check(
        format!("uncurry . curry = 1 on {}", h1.name()),
        &compose_functors(&backward, &forward)?,
        h1,
    ));
    checks.push(identity_check(
        format!("curry . uncurry = 1 on {}", h2.name()),
        &compose_functors(&forward, &backward)?,
        h2,
    ));
    Ok(HomIsoWitness {
        product,
        hom_product,
        hom_bc,
        hom_nested,
        forward,
        backward,
        checks,
    })
}

/// Naturality of the currying iso in `C` along `k: C -> C'`.
///
/// `w` is the witness over `(A, B, C)` and `w2` the one over `(A, B, C')`.
pub fn hom_iso_natural_in_codomain(
    w: &HomIsoWitness,
    w2: &HomIsoWitness,
    k: &Functor,
) -> Result<bool> {
    let post_product = postcompose(k, &w.hom_product, &w2.hom_product)?;
    let post_bc = postcompose(k, &w.hom_bc, &w2.hom_bc)?;
    let post_nested = postcompose(&post_bc, &w.hom_nested, &w2.hom_nested)?;
    Ok(
        compose_functors(&w2.forward, &post_product)?
            == compose_functors(&post_nested, &w.forward)?,
    )
}

/// Naturality of the currying iso in `A` along `l: A' -> A`.
///
/// `w` is the witness over `(A, B, C)` and `w2` the one over `(A', B, C)`.
pub fn hom_iso_natural_in_domain(
    w: &HomIsoWitness,
    w2: &HomIsoWitness,
    l: &Functor,
) -> Result<bool> {
    let id_b = Functor::identity(w.product.right());
    let l_x_id = product_map(l, &id_b, &w2.product, &w.product)?;
    let pre_product = precompose(&l_x_id, &w.hom_product, &w2.hom_product)?;
    let pre_nested = precompose(l, &w.hom_nested, &w2.hom_nested)?;
    Ok(compose_functors(&w2.forward, &pre_product)? == compose_functors(&pre_nested, &w.forward)?)
}

/// [`hom_iso`] at `(A, B, C)` plus its naturality in `C` along `C -> One` and
/// in `A` along every object `One -> A`.
pub fn check_hom_iso(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
    c: &Arc<FiniteCategory>,
    guard: &SizeGuard,
) -> Result<HomIsoWitness> {
    let one = fixtures::one();
    let mut w = hom_iso(a, b, c, guard)?;
    let to_one = hom_iso(a, b, &one, guard)?;
    let bang = Functor::constant(c, &one, ObjId(0));
    let natural = hom_iso_natural_in_codomain(&w, &to_one, &bang)?;
    w.checks.push(Check::from_bool(
        format!("currying natural along {} -> One", c.name()),
        natural,
    ));
    let at_point = hom_iso(&one, b, c, guard)?;
    for x in a.object_ids() {
        let pick = Functor::constant(&one, a, x);
        let natural = hom_iso_natural_in_domain(&w, &at_point, &pick)?;
        w.checks.push(Check::from_bool(
            format!(
                "currying natural along One -> {} at {}",
                a.name(),
                a.obj_name(x)
            ),
            natural,
        ));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::{enumerate_functors, preserves_pullbacks};

    fn g() -> SizeGuard {
        SizeGuard::default()
    }

    #[test]
    fn eval_maps_identity_pairs_to_identities() {
        let (one, d) = (fixtures::one(), fixtures::diamond());
        let h = internal_hom(&one, &d, &g()).unwrap();
        let p = product_category(h.category(), &one, &g()).unwrap();
        let ev = eval_functor(&h, &p).unwrap();
        for x in p.category().object_ids() {
            assert_eq!(ev.mor(p.category().identity(x)), d.identity(ev.obj(x)));
        }
        assert!(preserves_pullbacks(&ev));
    }

    #[test]
    fn coev_out_of_one() {
        let (one, arrow) = (fixtures::one(), fixtures::arrow());
        let bxa = product_category(&one, &arrow, &g()).unwrap();
        let h = internal_hom(&arrow, bxa.category(), &g()).unwrap();
        let coev = coeval_functor(&one, &arrow, &h, &bxa).unwrap();
        let f = h.functor(coev.obj(ObjId(0)));
        for x in arrow.object_ids() {
            assert_eq!(f.obj(x), bxa.pair_object(ObjId(0), x));
        }
    }

    #[test]
    fn coev_objects_are_pairings_of_constant_and_identity() {
        let (arrow, d) = (fixtures::arrow(), fixtures::diamond());
        let bxa = product_category(&d, &arrow, &g()).unwrap();
        let h = internal_hom(&arrow, bxa.category(), &g()).unwrap();
        let coev = coeval_functor(&d, &arrow, &h, &bxa).unwrap();
        for y in d.object_ids() {
            let delta = Functor::constant(&arrow, &d, y);
            let paired = pair_functors(&delta, &Functor::identity(&arrow), &bxa).unwrap();
            assert_eq!(h.functor(coev.obj(y)), &paired);
        }
    }

    #[test]
    fn curry_of_right_projection_is_constant_at_identity() {
        let (arrow, d) = (fixtures::arrow(), fixtures::diamond());
        let p = product_category(&arrow, &d, &g()).unwrap();
        let h_dd = internal_hom(&d, &d, &g()).unwrap();
        let c = curry(p.proj_right(), &p, &h_dd).unwrap();
        let id_obj = h_dd.object_of(&Functor::identity(&d)).unwrap();
        assert_eq!(c, Functor::constant(&arrow, h_dd.category(), id_obj));
        assert_eq!(&uncurry(&c, &p, &h_dd).unwrap(), p.proj_right());
    }

    #[test]
    fn curry_uncurry_roundtrip_on_arrow_times_one() {
        let (arrow, one, d) = (fixtures::arrow(), fixtures::one(), fixtures::diamond());
        let p = product_category(&arrow, &one, &g()).unwrap();
        let h_1d = internal_hom(&one, &d, &g()).unwrap();
        for f in enumerate_functors(p.category(), &d, true, &g()).unwrap() {
            let c = curry(&f, &p, &h_1d).unwrap();
            assert_eq!(uncurry(&c, &p, &h_1d).unwrap(), f);
        }
    }

    #[test]
    fn uncurry_of_coev_is_identity() {
        let (arrow, d) = (fixtures::arrow(), fixtures::diamond());
        let bxa = product_category(&d, &arrow, &g()).unwrap();
        let h = internal_hom(&arrow, bxa.category(), &g()).unwrap();
        let coev = coeval_functor(&d, &arrow, &h, &bxa).unwrap();
        assert!(preserves_pullbacks(&coev));
        assert_eq!(
            uncurry(&coev, &bxa, &h).unwrap(),
            Functor::identity(bxa.category())
        );
        assert_eq!(
            curry(&Functor::identity(bxa.category()), &bxa, &h).unwrap(),
            coev
        );
    }

    #[test]
    fn curry_of_eval_is_identity() {
        let (arrow, d) = (fixtures::arrow(), fixtures::diamond());
        let h = internal_hom(&arrow, &d, &g()).unwrap();
        let p = product_category(h.category(), &arrow, &g()).unwrap();
        let ev = eval_functor(&h, &p).unwrap();
        assert_eq!(curry(&ev, &p, &h).unwrap(), Functor::identity(h.category()));
    }

    #[test]
    fn coev_components_for_diamond_over_arrow() {
        let (arrow, d) = (fixtures::arrow(), fixtures::diamond());
        let bxa = product_category(&d, &arrow, &g()).unwrap();
        let h = internal_hom(&arrow, bxa.category(), &g()).unwrap();
        let coev = coeval_functor(&d, &arrow, &h, &bxa).unwrap();
        let bot_top = d.morphism_by_name("bot_top").unwrap();
        let t = h.transformation(coev.mor(bot_top));
        let names: Vec<_> = t
            .components()
            .iter()
            .map(|&m| bxa.category().mor_name(m))
            .collect();
        assert_eq!(names, ["(bot_top,id_0)", "(bot_top,id_1)"]);
        assert!(is_cartesian(t));
    }

    #[test]
    fn eval_out_of_one_is_an_isomorphism() {
        let (one, d) = (fixtures::one(), fixtures::diamond());
        let h = internal_hom(&one, &d, &g()).unwrap();
        let p = product_category(h.category(), &one, &g()).unwrap();
        let ev = eval_functor(&h, &p).unwrap();
        let mut objs = ev.object_map().to_vec();
        objs.sort();
        assert_eq!(objs, d.object_ids().collect::<Vec<_>>());
        let mut mors = ev.morphism_map().to_vec();
        mors.sort();
        assert_eq!(mors, d.morphism_ids().collect::<Vec<_>>());
        assert!(crate::iso::categories_isomorphic(p.category(), &d, &g())
            .unwrap()
            .is_some());
    }

    #[test]
    fn curry_after_uncurry_on_one_arrow_diamond() {
        let (one, arrow, d) = (fixtures::one(), fixtures::arrow(), fixtures::diamond());
        let p = product_category(&one, &arrow, &g()).unwrap();
        let h_ad = internal_hom(&arrow, &d, &g()).unwrap();
        let gs = enumerate_functors(&one, h_ad.category(), true, &g()).unwrap();
        assert_eq!(gs.len(), 9);
        for gf in gs {
            let u = uncurry(&gf, &p, &h_ad).unwrap();
            assert!(preserves_pullbacks(&u));
            assert_eq!(curry(&u, &p, &h_ad).unwrap(), gf);
        }
    }

    #[test]
    fn triangles_for_pairs_with_diamond() {
        let (one, arrow, d) = (fixtures::one(), fixtures::arrow(), fixtures::diamond());
        for a in [&one, &arrow] {
            let w = check_triangles(a, &d, &g()).unwrap();
            assert!(w.triangle1 && w.triangle2 && w.passed(), "{:#?}", w.checks);
        }
    }

    #[test]
    fn hom_iso_sides_have_the_expected_shape() {
        let (one, arrow, d) = (fixtures::one(), fixtures::arrow(), fixtures::diamond());
        let iso = |x: &Arc<FiniteCategory>, y: &Arc<FiniteCategory>| {
            crate::iso::categories_isomorphic(x, y, &g())
                .unwrap()
                .is_some()
        };
        let w = hom_iso(&one, &one, &d, &g()).unwrap();
        assert!(iso(w.hom_product.category(), &d) && iso(w.hom_nested.category(), &d));
        let w = hom_iso(&arrow, &one, &d, &g()).unwrap();
        let h_ad = internal_hom(&arrow, &d, &g()).unwrap();
        assert!(iso(w.hom_product.category(), h_ad.category()));
        assert!(iso(w.hom_nested.category(), h_ad.category()));
        assert!(hom_iso(&one, &arrow, &d, &g()).unwrap().iso().is_some());
    }

    #[test]
    fn check_hom_iso_adds_naturality() {
        let (one, arrow, d) = (fixtures::one(), fixtures::arrow(), fixtures::diamond());
        let w = check_hom_iso(&arrow, &one, &d, &g()).unwrap();
        assert!(w.passed());
        assert_eq!(
            w.checks
                .iter()
                .filter(|c| c.name.starts_with("currying natural"))
                .count(),
            3
        );
    }

    #[test]
    fn triangles_for_one_one() {
        let one = fixtures::one();
        let w = check_triangles(&one, &one, &g()).unwrap();
        assert!(w.triangle1 && w.triangle2);
        assert!(w.passed(), "{:#?}", w.checks);
    }

    #[test]
    fn hom_iso_one_one_diamond() {
        let (one, d) = (fixtures::one(), fixtures::diamond());
        let w = hom_iso(&one, &one, &d, &g()).unwrap();
        assert!(w.passed());
        assert!(w.iso().unwrap().is_inverse_pair());
    }

    #[test]
    fn hom_iso_is_natural_in_both_variables() {
        let (one, arrow, d) = (fixtures::one(), fixtures::arrow(), fixtures::diamond());
        let w = hom_iso(&arrow, &one, &d, &g()).unwrap();
        // C -> C' along Diamond -> One
        let w_one = hom_iso(&arrow, &one, &one, &g()).unwrap();
        let bang = Functor::constant(&d, &one, ObjId(0));
        assert!(hom_iso_natural_in_codomain(&w, &w_one, &bang).unwrap());
        // A' -> A along One -> Arrow picking 1
        let w_pt = hom_iso(&one, &one, &d, &g()).unwrap();
        let pick = Functor::constant(&one, &arrow, ObjId(1));
        assert!(hom_iso_natural_in_domain(&w, &w_pt, &pick).unwrap());
    }
}
