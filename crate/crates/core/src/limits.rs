//! Pullbacks in finite categories, decided by exhaustive universal-property search.
//!
//! A square is drawn with its apex top-left:
//!
//! ```text
//!   apex --to_left--> a
//!    |                |
//! to_right          left
//!    v                v
//!    b  ----right---> c
//! ```
//!
//! and commutes when `left ∘ to_left == right ∘ to_right`.

use serde::{Deserialize, Serialize};

use crate::category::{FiniteCategory, MorId, ObjId};
use crate::error::{Error, Result};

/// Two morphisms with a common target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cospan {
    pub left: MorId,
    pub right: MorId,
}

impl Cospan {
    pub fn new(c: &FiniteCategory, left: MorId, right: MorId) -> Result<Cospan> {
        if c.tgt(left) != c.tgt(right) {
            return Err(Error::BoundaryMismatch(format!(
                "cospan arms `{}` and `{}` have different targets",
                c.mor_name(left),
                c.mor_name(right)
            )));
        }
        Ok(Cospan { left, right })
    }

    pub fn swapped(self) -> Cospan {
        Cospan {
            left: self.right,
            right: self.left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CommutingSquare {
    pub apex: ObjId,
    pub to_left: MorId,
    pub to_right: MorId,
    pub left: MorId,
    pub right: MorId,
}

impl CommutingSquare {
    /// Checks boundaries and commutativity.
    pub fn new(
        c: &FiniteCategory,
        apex: ObjId,
        to_left: MorId,
        to_right: MorId,
        left: MorId,
        right: MorId,
    ) -> Result<CommutingSquare> {
        let sq = CommutingSquare {
            apex,
            to_left,
            to_right,
            left,
            right,
        };
        if !sq.has_consistent_boundary(c) {
            return Err(Error::BoundaryMismatch(format!(
                "square `{}`: {}, {} over {}, {} has inconsistent corners",
                c.obj_name(apex),
                c.mor_name(to_left),
                c.mor_name(to_right),
                c.mor_name(left),
                c.mor_name(right)
            )));
        }
        if !sq.commutes(c) {
            return Err(Error::NotCommuting(format!(
                "{} after {} differs from {} after {}",
                c.mor_name(left),
                c.mor_name(to_left),
                c.mor_name(right),
                c.mor_name(to_right)
            )));
        }
        Ok(sq)
    }

    pub fn cospan(&self) -> Cospan {
        Cospan {
            left: self.left,
            right: self.right,
        }
    }

    pub fn has_consistent_boundary(&self, c: &FiniteCategory) -> bool {
        c.src(self.to_left) == self.apex
            && c.src(self.to_right) == self.apex
            && c.tgt(self.to_left) == c.src(self.left)
            && c.tgt(self.to_right) == c.src(self.right)
            && c.tgt(self.left) == c.tgt(self.right)
    }

    pub fn commutes(&self, c: &FiniteCategory) -> bool {
        self.has_consistent_boundary(c)
            && c.comp(self.left, self.to_left) == c.comp(self.right, self.to_right)
    }

    /// Mirror image: legs and cospan arms exchanged together.
    pub fn transposed(&self) -> CommutingSquare {
        CommutingSquare {
            apex: self.apex,
            to_left: self.to_right,
            to_right: self.to_left,
            left: self.right,
            right: self.left,
        }
    }
}

/// A commuting square certified to be a pullback.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PullbackSquare {
    square: CommutingSquare,
    verified: bool,
}

impl PullbackSquare {
    /// Certifies `square`, or returns `None` when it is not a pullback.
    pub fn certify(c: &FiniteCategory, square: CommutingSquare) -> Option<PullbackSquare> {
        is_pullback_square(c, &square).then_some(PullbackSquare {
            square,
            verified: true,
        })
    }

    pub fn square(&self) -> &CommutingSquare {
        &self.square
    }

    pub fn verified(&self) -> bool {
        self.verified
    }

    pub fn apex(&self) -> ObjId {
        self.square.apex
    }
}

/// Decides the universal property by enumerating every cone over the cospan.
pub fn is_pullback_square(c: &FiniteCategory, s: &CommutingSquare) -> bool {
    if !s.commutes(c) {
        return false;
    }
    let a = c.src(s.left);
    let b = c.src(s.right);
    for x in c.object_ids() {
        let to_apex = c.hom(x, s.apex);
        for &u in c.hom(x, a) {
            let lu = c.comp(s.left, u);
            for &v in c.hom(x, b) {
                if lu != c.comp(s.right, v) {
                    continue;
                }
                let mut mediators = to_apex
                    .iter()
                    .filter(|&&h| c.comp(s.to_left, h) == u && c.comp(s.to_right, h) == v);
                if mediators.next().is_none() || mediators.next().is_some() {
                    return false;
                }
            }
        }
    }
    true
}

/// Every commuting square over `cospan`, in (apex, to_left, to_right) order.
pub fn commuting_squares_over(c: &FiniteCategory, cospan: Cospan) -> Vec<CommutingSquare> {
    let a = c.src(cospan.left);
    let b = c.src(cospan.right);
    let mut out = Vec::new();
    for p in c.object_ids() {
        for &u in c.hom(p, a) {
            let lu = c.comp(cospan.left, u);
            for &v in c.hom(p, b) {
                if lu == c.comp(cospan.right, v) {
                    out.push(CommutingSquare {
                        apex: p,
                        to_left: u,
                        to_right: v,
                        left: cospan.left,
                        right: cospan.right,
                    });
                }
            }
        }
    }
    out
}

/// Every pullback square over `cospan`, in canonical order.
pub fn pullback_squares_over(c: &FiniteCategory, cospan: Cospan) -> Vec<CommutingSquare> {
    commuting_squares_over(c, cospan)
        .into_iter()
        .filter(|s| is_pullback_square(c, s))
        .collect()
}

fn find_pullback(c: &FiniteCategory, cospan: Cospan) -> Option<CommutingSquare> {
    let cones = commuting_squares_over(c, cospan);
    cones.iter().copied().find(|cand| {
        cones.iter().all(|cone| {
            let mut mediators = c.hom(cone.apex, cand.apex).iter().filter(|&&h| {
                c.comp(cand.to_left, h) == cone.to_left && c.comp(cand.to_right, h) == cone.to_right
            });
            mediators.next().is_some() && mediators.next().is_none()
        })
    })
}

/// The canonical pullback: the least passing square in (apex, to_left, to_right) order.
pub fn choose_pullback(c: &FiniteCategory, cospan: Cospan) -> Result<PullbackSquare> {
    match canonical_pullback(c, cospan) {
        Some(square) => Ok(PullbackSquare {
            square,
            verified: true,
        }),
        None => Err(Error::NoPullback {
            left: c.mor_name(cospan.left).to_string(),
            right: c.mor_name(cospan.right).to_string(),
        }),
    }
}

/// All cospans of `c` in canonical (left index, right index) order.
pub fn cospans(c: &FiniteCategory) -> impl Iterator<Item = Cospan> + '_ {
    c.morphism_ids().flat_map(move |left| {
        c.incoming(c.tgt(left))
            .iter()
            .map(move |&right| Cospan { left, right })
    })
}

/// Canonical pullback of every cospan, in canonical cospan order.
#[derive(Debug, Clone)]
pub struct PullbackTable {
    entries: Vec<(Cospan, Option<CommutingSquare>)>,
    /// Offset into `entries` of the first cospan with each left arm.
    row_start: Vec<usize>,
    /// Position of each morphism inside `incoming[tgt]`.
    in_pos: Vec<usize>,
}

impl PullbackTable {
    fn build(c: &FiniteCategory) -> PullbackTable {
        let mut in_pos = vec![0; c.morphism_count()];
        for x in c.object_ids() {
            for (i, &m) in c.incoming(x).iter().enumerate() {
                in_pos[m.0] = i;
            }
        }
        let mut row_start = Vec::with_capacity(c.morphism_count());
        let mut entries = Vec::new();
        for left in c.morphism_ids() {
            row_start.push(entries.len());
            for &right in c.incoming(c.tgt(left)) {
                let cospan = Cospan { left, right };
                entries.push((cospan, find_pullback(c, cospan)));
            }
        }
        PullbackTable {
            entries,
            row_start,
            in_pos,
        }
    }

    pub fn entries(&self) -> &[(Cospan, Option<CommutingSquare>)] {
        &self.entries
    }

    pub fn get(&self, cospan: Cospan) -> Option<CommutingSquare> {
        self.entries[self.row_start[cospan.left.0] + self.in_pos[cospan.right.0]].1
    }
}

/// Memoized canonical pullbacks of `c`.
pub fn pullback_table(c: &FiniteCategory) -> &PullbackTable {
    c.pullback_cache.get_or_init(|| PullbackTable::build(c))
}

fn canonical_pullback(c: &FiniteCategory, cospan: Cospan) -> Option<CommutingSquare> {
    if c.tgt(cospan.left) != c.tgt(cospan.right) {
        return None;
    }
    pullback_table(c).get(cospan)
}

/// The first cospan in canonical order without a pullback, if any.
pub fn cospan_without_pullback(c: &FiniteCategory) -> Option<Cospan> {
    pullback_table(c)
        .entries()
        .iter()
        .find(|(_, sq)| sq.is_none())
        .map(|(cospan, _)| *cospan)
}

pub fn has_all_pullbacks(c: &FiniteCategory) -> bool {
    cospan_without_pullback(c).is_none()
}

/// The unique morphism from the apex of `cone` into `target` commuting with both legs.
pub fn mediator(
    c: &FiniteCategory,
    cone: &CommutingSquare,
    target: &CommutingSquare,
) -> Option<MorId> {
    let mut found = c.hom(cone.apex, target.apex).iter().copied().filter(|&h| {
        c.comp(target.to_left, h) == cone.to_left && c.comp(target.to_right, h) == cone.to_right
    });
    let first = found.next()?;
    found.next().is_none().then_some(first)
}

/// Mediators between two pullbacks over the same cospan, checked to be mutually inverse.
pub fn compare_pullbacks(
    c: &FiniteCategory,
    p: &CommutingSquare,
    q: &CommutingSquare,
) -> Option<(MorId, MorId)> {
    if p.cospan() != q.cospan() || !is_pullback_square(c, p) || !is_pullback_square(c, q) {
        return None;
    }
    let there = mediator(c, p, q)?;
    let back = mediator(c, q, p)?;
    let roundtrip =
        c.comp(back, there) == c.identity(p.apex) && c.comp(there, back) == c.identity(q.apex);
    roundtrip.then_some((there, back))
}

/// Pastes `left` beside `right`, where the right edge of `left` is the left edge of `right`.
///
/// ```text
///  p --> a1 --> a2
///  |     |      |
///  v     v      v
///  b1 -> c1 --> c2
/// ```
pub fn paste_horizontal(
    c: &FiniteCategory,
    left: &CommutingSquare,
    right: &CommutingSquare,
) -> Option<CommutingSquare> {
    if left.left != right.to_right {
        return None;
    }
    Some(CommutingSquare {
        apex: left.apex,
        to_left: c.comp(right.to_left, left.to_left),
        to_right: left.to_right,
        left: right.left,
        right: c.comp(right.right, left.right),
    })
}

/// Every commuting square of `c`.
pub fn all_commuting_squares(c: &FiniteCategory) -> Vec<CommutingSquare> {
    cospans(c)
        .flat_map(|cospan| commuting_squares_over(c, cospan))
        .collect()
}
