//! Isomorphism search between finite categories.

use std::sync::Arc;

use crate::category::{FiniteCategory, MorId, ObjId};
use crate::error::Result;
use crate::functor::{compose_functors, Functor};
use crate::guard::{NodeCounter, SizeGuard};

/// A pair of mutually inverse functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryIso {
    pub forward: Functor,
    pub backward: Functor,
}

impl CategoryIso {
    /// Checks that both composites are identity functors.
    pub fn is_inverse_pair(&self) -> bool {
        let (c, d) = (self.forward.source(), self.forward.target());
        matches!(compose_functors(&self.backward, &self.forward), Ok(f) if f == Functor::identity(c))
            && matches!(compose_functors(&self.forward, &self.backward), Ok(f) if f == Functor::identity(d))
    }

    pub fn inverse(&self) -> CategoryIso {
        CategoryIso {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }
}

/// Finds the lexicographically least isomorphism `c -> d`, if one exists.
pub fn categories_isomorphic(
    c: &Arc<FiniteCategory>,
    d: &Arc<FiniteCategory>,
    guard: &SizeGuard,
) -> Result<Option<CategoryIso>> {
    if c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count() {
        return Ok(None);
    }
    let mut counter = guard.counter();
    let mut search = IsoSearch {
        c,
        d,
        obj: Vec::new(),
        obj_used: vec![false; d.object_count()],
        mor: Vec::new(),
        mor_used: vec![false; d.morphism_count()],
        triples_closing_at: triples_by_last(c),
        counter: &mut counter,
    };
    if !search.objects()? {
        return Ok(None);
    }
    let forward =
        Functor::from_parts_unchecked(c.clone(), d.clone(), search.obj.clone(), search.mor.clone());
    let mut inv_obj = vec![ObjId(0); d.object_count()];
    for (x, y) in search.obj.iter().enumerate() {
        inv_obj[y.0] = ObjId(x);
    }
    let mut inv_mor = vec![MorId(0); d.morphism_count()];
    for (f, g) in search.mor.iter().enumerate() {
        inv_mor[g.0] = MorId(f);
    }
    let backward = Functor::from_parts_unchecked(d.clone(), c.clone(), inv_obj, inv_mor);
    Ok(Some(CategoryIso { forward, backward }))
}

fn triples_by_last(c: &FiniteCategory) -> Vec<Vec<(MorId, MorId, MorId)>> {
    let mut out = vec![Vec::new(); c.morphism_count()];
    for f in c.morphism_ids() {
        for &g in c.outgoing(c.tgt(f)) {
            let h = c.comp(g, f);
            out[g.0.max(f.0).max(h.0)].push((g, f, h));
        }
    }
    out
}

struct IsoSearch<'a> {
    c: &'a FiniteCategory,
    d: &'a FiniteCategory,
    obj: Vec<ObjId>,
    obj_used: Vec<bool>,
    mor: Vec<MorId>,
    mor_used: Vec<bool>,
    triples_closing_at: Vec<Vec<(MorId, MorId, MorId)>>,
    counter: &'a mut NodeCounter,
}

impl IsoSearch<'_> {
    /// Hom-set sizes between `x` and every already-placed object must match.
    fn object_fits(&self, x: ObjId, y: ObjId) -> bool {
        let (c, d) = (self.c, self.d);
        if c.hom(x, x).len() != d.hom(y, y).len() {
            return false;
        }
        self.obj.iter().enumerate().all(|(x2, &y2)| {
            let x2 = ObjId(x2);
            c.hom(x, x2).len() == d.hom(y, y2).len() && c.hom(x2, x).len() == d.hom(y2, y).len()
        })
    }

    fn objects(&mut self) -> Result<bool> {
        let x = ObjId(self.obj.len());
        if x.0 == self.c.object_count() {
            return self.morphisms();
        }
        for y in self.d.object_ids() {
            if self.obj_used[y.0] || !self.object_fits(x, y) {
                continue;
            }
            self.counter.tick()?;
            self.obj.push(y);
            self.obj_used[y.0] = true;
            if self.objects()? {
                return Ok(true);
            }
            self.obj_used[y.0] = false;
            self.obj.pop();
        }
        Ok(false)
    }

    fn morphisms(&mut self) -> Result<bool> {
        let f = MorId(self.mor.len());
        if f.0 == self.c.morphism_count() {
            return Ok(true);
        }
        let (c, d) = (self.c, self.d);
        let (x, y) = (self.obj[c.src(f).0], self.obj[c.tgt(f).0]);
        let candidates: Vec<MorId> = if c.is_identity(f) {
            vec![d.identity(x)]
        } else {
            d.hom(x, y)
                .iter()
                .copied()
                .filter(|&g| !d.is_identity(g))
                .collect()
        };
        for g in candidates {
            if self.mor_used[g.0] {
                continue;
            }
            self.counter.tick()?;
            self.mor.push(g);
            self.mor_used[g.0] = true;
            let consistent = self.triples_closing_at[f.0]
                .iter()
                .all(|&(a, b, h)| self.mor[h.0] == d.comp(self.mor[a.0], self.mor[b.0]));
            if consistent && self.morphisms()? {
                return Ok(true);
            }
            self.mor_used[g.0] = false;
            self.mor.pop();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::functor::Functor;

    #[test]
    fn one_is_isomorphic_to_itself_by_the_identity() {
        let one = fixtures::one();
        let iso = categories_isomorphic(&one, &one, &SizeGuard::default())
            .unwrap()
            .unwrap();
        assert_eq!(iso.forward, Functor::identity(&one));
        assert!(iso.is_inverse_pair());
    }

    #[test]
    fn differently_sized_categories_are_not_isomorphic() {
        let g = SizeGuard::default();
        assert!(
            categories_isomorphic(&fixtures::diamond(), &fixtures::v(), &g)
                .unwrap()
                .is_none()
        );
        assert!(categories_isomorphic(&fixtures::z2(), &fixtures::one(), &g)
            .unwrap()
            .is_none());
    }

    #[test]
    fn same_shape_different_structure() {
        // Arrow and the discrete two-object category with one extra loop have
        // the same counts but no iso; build the latter from Z2 + One.
        let g = SizeGuard::default();
        let arrow = fixtures::arrow();
        let two_loops = crate::dsl::parse_category(
            "category L\nobject p q\nmor l : p -> p\ncompose l l = l\n",
            &g,
        )
        .unwrap();
        let two_loops = Arc::new(two_loops);
        assert!(categories_isomorphic(&arrow, &two_loops, &g)
            .unwrap()
            .is_none());
    }

    #[test]
    fn diamond_automorphism_search_is_least() {
        let d = fixtures::diamond();
        let iso = categories_isomorphic(&d, &d, &SizeGuard::default())
            .unwrap()
            .unwrap();
        assert_eq!(iso.forward, Functor::identity(&d));
    }
}
