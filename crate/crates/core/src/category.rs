//! Finite categories presented as explicit tables.
//!
//! Composition follows the "g after f" convention throughout: `compose(g, f)`
//! is defined exactly when `tgt(f) == src(g)`.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::guard::SizeGuard;
use crate::limits::PullbackTable;

/// Dense, zero-based object index into its owning category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ObjId(pub usize);

/// Dense, zero-based morphism index into its owning category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MorId(pub usize);

impl ObjId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl MorId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub src: ObjId,
    pub tgt: ObjId,
}

/// Unvalidated category tables, as produced by a parser or a construction.
///
/// Composition entries involving an identity may be omitted; they are filled
/// in during validation. Every other composable pair must have an entry.
#[derive(Debug, Clone, Default)]
pub struct RawCategory {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    pub identities: Vec<MorId>,
    /// Entries `(g, f, h)` meaning `g` after `f` equals `h`.
    pub composites: Vec<(MorId, MorId, MorId)>,
}

/// A validated, immutable finite category.
pub struct FiniteCategory {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    /// Morphisms leaving each object, in index order.
    outgoing: Vec<Vec<MorId>>,
    /// Morphisms entering each object, in index order.
    incoming: Vec<Vec<MorId>>,
    /// Position of each morphism inside `outgoing[src]`.
    out_pos: Vec<usize>,
    /// `after[f][out_pos[g]]` is `g` after `f`, for every `g` leaving `tgt(f)`.
    after: Vec<Vec<MorId>>,
    /// Hom-sets, indexed by `src * object_count + tgt`.
    homs: Vec<Vec<MorId>>,
    pub(crate) pullback_cache: OnceLock<PullbackTable>,
}

impl Clone for FiniteCategory {
    fn clone(&self) -> Self {
        FiniteCategory {
            name: self.name.clone(),
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            identities: self.identities.clone(),
            outgoing: self.outgoing.clone(),
            incoming: self.incoming.clone(),
            out_pos: self.out_pos.clone(),
            after: self.after.clone(),
            homs: self.homs.clone(),
            pullback_cache: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteCategory {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.after == other.after
    }
}

impl Eq for FiniteCategory {}

impl fmt::Debug for FiniteCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteCategory")
            .field("name", &self.name)
            .field("objects", &self.objects)
            .field("morphisms", &self.morphisms.len())
            .finish()
    }
}

/// Validates raw tables against the size guard and the category axioms.
pub fn validate_category(raw: RawCategory, guard: &SizeGuard) -> Result<FiniteCategory> {
    guard.check_input(raw.objects.len(), raw.morphisms.len())?;
    FiniteCategory::from_raw(raw)
}

impl FiniteCategory {
    /// Validates raw tables without applying input size caps.
    pub fn from_raw(raw: RawCategory) -> Result<FiniteCategory> {
        let RawCategory {
            name,
            objects,
            morphisms,
            identities,
            composites,
        } = raw;
        let n_obj = objects.len();
        let n_mor = morphisms.len();

        let mut seen = HashSet::new();
        for o in &objects {
            if !seen.insert(o.as_str()) {
                return Err(Error::DuplicateName(o.clone()));
            }
        }
        let mut seen = HashSet::new();
        for m in &morphisms {
            if !seen.insert(m.name.as_str()) {
                return Err(Error::DuplicateName(m.name.clone()));
            }
            if m.src.0 >= n_obj || m.tgt.0 >= n_obj {
                return Err(Error::BoundaryMismatch(format!(
                    "morphism `{}` refers to a missing object",
                    m.name
                )));
            }
        }
        if identities.len() != n_obj {
            return Err(Error::BoundaryMismatch(format!(
                "{} identities declared for {} objects",
                identities.len(),
                n_obj
            )));
        }
        for (x, id) in identities.iter().enumerate() {
            let ok = morphisms
                .get(id.0)
                .is_some_and(|m| m.src.0 == x && m.tgt.0 == x);
            if !ok {
                return Err(Error::BoundaryMismatch(format!(
                    "identity of `{}` is not an endomorphism of it",
                    objects[x]
                )));
            }
        }

        let mut outgoing = vec![Vec::new(); n_obj];
        let mut incoming = vec![Vec::new(); n_obj];
        let mut out_pos = vec![0; n_mor];
        let mut homs = vec![Vec::new(); n_obj * n_obj];
        for (i, m) in morphisms.iter().enumerate() {
            out_pos[i] = outgoing[m.src.0].len();
            outgoing[m.src.0].push(MorId(i));
            incoming[m.tgt.0].push(MorId(i));
            homs[m.src.0 * n_obj + m.tgt.0].push(MorId(i));
        }

        let name_of = |m: MorId| morphisms[m.0].name.clone();
        let is_identity = |m: MorId| identities[morphisms[m.0].src.0] == m;

        let mut slots: Vec<Vec<Option<MorId>>> = morphisms
            .iter()
            .map(|m| vec![None; outgoing[m.tgt.0].len()])
            .collect();

        for &(g, f, h) in &composites {
            if g.0 >= n_mor || f.0 >= n_mor || h.0 >= n_mor {
                return Err(Error::BoundaryMismatch(
                    "composition entry refers to a missing morphism".into(),
                ));
            }
            let (mg, mf, mh) = (&morphisms[g.0], &morphisms[f.0], &morphisms[h.0]);
            if mf.tgt != mg.src {
                return Err(Error::BoundaryMismatch(format!(
                    "compose {} {}: `{}` does not start where `{}` ends",
                    mg.name, mf.name, mg.name, mf.name
                )));
            }
            if mh.src != mf.src || mh.tgt != mg.tgt {
                return Err(Error::BoundaryMismatch(format!(
                    "compose {} {} = {}: result has the wrong source or target",
                    mg.name, mf.name, mh.name
                )));
            }
            if (is_identity(g) && h != f) || (is_identity(f) && h != g) {
                return Err(Error::IdentityLawViolation {
                    g: name_of(g),
                    f: name_of(f),
                });
            }
            let slot = &mut slots[f.0][out_pos[g.0]];
            match *slot {
                Some(prev) if prev != h => {
                    return Err(Error::ConflictingComposite {
                        g: name_of(g),
                        f: name_of(f),
                        first: name_of(prev),
                        second: name_of(h),
                    })
                }
                _ => *slot = Some(h),
            }
        }

        for (f, mf) in morphisms.iter().enumerate() {
            let f = MorId(f);
            for &g in &outgoing[mf.tgt.0] {
                let slot = &mut slots[f.0][out_pos[g.0]];
                if is_identity(g) {
                    *slot = Some(f);
                } else if is_identity(f) {
                    *slot = Some(g);
                }
            }
        }

        let mut after = Vec::with_capacity(n_mor);
        for (f, row) in slots.into_iter().enumerate() {
            let mut filled = Vec::with_capacity(row.len());
            for (pos, entry) in row.into_iter().enumerate() {
                match entry {
                    Some(h) => filled.push(h),
                    None => {
                        let g = outgoing[morphisms[f].tgt.0][pos];
                        return Err(Error::MissingComposite {
                            g: name_of(g),
                            f: morphisms[f].name.clone(),
                        });
                    }
                }
            }
            after.push(filled);
        }

        let cat = FiniteCategory {
            name,
            objects,
            morphisms,
            identities,
            outgoing,
            incoming,
            out_pos,
            after,
            homs,
            pullback_cache: OnceLock::new(),
        };
        cat.check_associativity()?;
        Ok(cat)
    }

    fn check_associativity(&self) -> Result<()> {
        for f in self.morphism_ids() {
            for &g in self.outgoing(self.tgt(f)) {
                let gf = self.comp(g, f);
                for &h in self.outgoing(self.tgt(g)) {
                    if self.comp(h, gf) != self.comp(self.comp(h, g), f) {
                        return Err(Error::AssociativityViolation {
                            h: self.mor_name(h).to_string(),
                            g: self.mor_name(g).to_string(),
                            f: self.mor_name(f).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Tables of this category in raw form; `from_raw` of the result is equal to `self`.
    pub fn to_raw(&self) -> RawCategory {
        let mut composites = Vec::new();
        for f in self.morphism_ids() {
            for &g in self.outgoing(self.tgt(f)) {
                composites.push((g, f, self.comp(g, f)));
            }
        }
        RawCategory {
            name: self.name.clone(),
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            identities: self.identities.clone(),
            composites,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_ids(&self) -> impl Iterator<Item = ObjId> + Clone {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = MorId> + Clone {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn obj_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn mor_name(&self, f: MorId) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn morphism(&self, f: MorId) -> &Morphism {
        &self.morphisms[f.0]
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<MorId> {
        self.morphisms
            .iter()
            .position(|m| m.name == name)
            .map(MorId)
    }

    pub fn src(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].src
    }

    pub fn tgt(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].tgt
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x.0]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identities[self.src(f).0] == f
    }

    /// Morphisms `x -> y` in index order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x.0 * self.objects.len() + y.0]
    }

    pub fn outgoing(&self, x: ObjId) -> &[MorId] {
        &self.outgoing[x.0]
    }

    pub fn incoming(&self, x: ObjId) -> &[MorId] {
        &self.incoming[x.0]
    }

    /// `g` after `f`.
    pub fn compose(&self, g: MorId, f: MorId) -> Result<MorId> {
        if self.tgt(f) != self.src(g) {
            return Err(Error::NotComposable {
                g: self.mor_name(g).to_string(),
                f: self.mor_name(f).to_string(),
            });
        }
        Ok(self.comp(g, f))
    }

    /// `g` after `f`, for callers that already know the pair is composable.
    ///
    /// Panics if `tgt(f) != src(g)`.
    pub fn comp(&self, g: MorId, f: MorId) -> MorId {
        assert_eq!(
            self.tgt(f),
            self.src(g),
            "`{}` cannot follow `{}`",
            self.mor_name(g),
            self.mor_name(f)
        );
        self.after[f.0][self.out_pos[g.0]]
    }
}
