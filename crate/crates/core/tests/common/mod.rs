#![allow(dead_code, clippy::needless_range_loop)]

use std::sync::Arc;

use catpb::{FiniteCategory, Functor, MorId, NatTrans, ObjId, SizeGuard};

pub fn parse(text: &str) -> Arc<FiniteCategory> {
    Arc::new(catpb::parse_category(text, &SizeGuard::unbounded()).unwrap())
}

/// Reflexive-transitive closure of the relation given by `bits` over `i < j`.
pub fn poset_relation(n: usize, bits: &[bool]) -> Vec<Vec<bool>> {
    let mut le = vec![vec![false; n]; n];
    let mut k = 0;
    for i in 0..n {
        le[i][i] = true;
        for j in i + 1..n {
            le[i][j] = bits.get(k).copied().unwrap_or(false);
            k += 1;
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][m] && le[m][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    le
}

/// A poset as a category text: objects `p<i>`, morphisms `r<i>_<j>` for `i < j` related.
pub fn poset_text(name: &str, le: &[Vec<bool>]) -> String {
    let n = le.len();
    let mut out = format!("category {name}\nobject");
    for i in 0..n {
        out += &format!(" p{i}");
    }
    out += "\n";
    let strict = |i: usize, j: usize| i != j && le[i][j];
    for i in 0..n {
        for j in 0..n {
            if strict(i, j) {
                out += &format!("mor r{i}_{j} : p{i} -> p{j}\n");
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if strict(i, j) && strict(j, k) {
                    out += &format!("compose r{j}_{k} r{i}_{j} = r{i}_{k}\n");
                }
            }
        }
    }
    out
}

/// The cyclic group of order `n` on one object `*`; `g<k>` is the k-th power.
pub fn cyclic_group_text(n: usize) -> String {
    let name = |k: usize| {
        if k.is_multiple_of(n) {
            "id_*".to_string()
        } else {
            format!("g{}", k % n)
        }
    };
    let mut out = format!("category C{n}\nobject *\n");
    for k in 1..n {
        out += &format!("mor g{k} : * -> *\n");
    }
    for a in 1..n {
        for b in 1..n {
            out += &format!("compose {} {} = {}\n", name(a), name(b), name(a + b));
        }
    }
    out
}

/// Universal property straight from the definition: every cone factors uniquely.
pub fn oracle_is_pullback(
    c: &FiniteCategory,
    apex: ObjId,
    p: MorId,
    q: MorId,
    f: MorId,
    g: MorId,
) -> bool {
    if c.compose(f, p).ok() != c.compose(g, q).ok() {
        return false;
    }
    for m1 in c.morphism_ids() {
        for m2 in c.morphism_ids() {
            if c.src(m1) != c.src(m2) || c.tgt(m1) != c.src(f) || c.tgt(m2) != c.src(g) {
                continue;
            }
            if c.comp(f, m1) != c.comp(g, m2) {
                continue;
            }
            let count = c
                .morphism_ids()
                .filter(|&h| c.src(h) == c.src(m1) && c.tgt(h) == apex)
                .filter(|&h| c.comp(p, h) == m1 && c.comp(q, h) == m2)
                .count();
            if count != 1 {
                return false;
            }
        }
    }
    true
}

/// Every pullback square `(apex, p, q)` over `(f, g)`, in (apex, p, q) order.
pub fn oracle_pullbacks(c: &FiniteCategory, f: MorId, g: MorId) -> Vec<(ObjId, MorId, MorId)> {
    let mut out = Vec::new();
    for apex in c.object_ids() {
        for p in c.morphism_ids() {
            for q in c.morphism_ids() {
                if c.src(p) == apex
                    && c.src(q) == apex
                    && c.tgt(p) == c.src(f)
                    && c.tgt(q) == c.src(g)
                    && oracle_is_pullback(c, apex, p, q, f, g)
                {
                    out.push((apex, p, q));
                }
            }
        }
    }
    out
}

/// First cospan `(f, g)` lacking a pullback, scanning pairs in index order.
pub fn oracle_missing_pullback(c: &FiniteCategory) -> Option<(MorId, MorId)> {
    for f in c.morphism_ids() {
        for g in c.morphism_ids() {
            if c.tgt(f) == c.tgt(g) && oracle_pullbacks(c, f, g).is_empty() {
                return Some((f, g));
            }
        }
    }
    None
}

/// Functor laws checked directly on maps.
pub fn oracle_is_functor(
    a: &FiniteCategory,
    b: &FiniteCategory,
    obj: &[ObjId],
    mor: &[MorId],
) -> bool {
    for m in a.morphism_ids() {
        let fm = mor[m.0];
        if b.src(fm) != obj[a.src(m).0] || b.tgt(fm) != obj[a.tgt(m).0] {
            return false;
        }
    }
    for x in a.object_ids() {
        if mor[a.identity(x).0] != b.identity(obj[x.0]) {
            return false;
        }
    }
    for f in a.morphism_ids() {
        for g in a.morphism_ids() {
            if a.tgt(f) == a.src(g) && mor[a.comp(g, f).0] != b.comp(mor[g.0], mor[f.0]) {
                return false;
            }
        }
    }
    true
}

/// Every functor `a -> b`, by trying every boundary-respecting assignment.
pub fn oracle_functors(
    a: &Arc<FiniteCategory>,
    b: &Arc<FiniteCategory>,
) -> Vec<(Vec<ObjId>, Vec<MorId>)> {
    let mut out = Vec::new();
    let na = a.object_count();
    let nb = b.object_count();
    let total = nb.pow(na as u32);
    for code in 0..total {
        let mut obj = vec![ObjId(0); na];
        let mut rest = code;
        for x in (0..na).rev() {
            obj[x] = ObjId(rest % nb);
            rest /= nb;
        }
        let choices: Vec<Vec<MorId>> = a
            .morphism_ids()
            .map(|m| b.hom(obj[a.src(m).0], obj[a.tgt(m).0]).to_vec())
            .collect();
        for mor in cartesian_product(&choices) {
            if oracle_is_functor(a, b, &obj, &mor) {
                out.push((obj.clone(), mor));
            }
        }
    }
    out
}

pub fn cartesian_product<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for options in choices {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for o in options {
                let mut v = prefix.clone();
                v.push(o.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Sends every pullback square of the source to a pullback square.
pub fn oracle_preserves_pullbacks(
    a: &FiniteCategory,
    b: &FiniteCategory,
    obj: &[ObjId],
    mor: &[MorId],
) -> bool {
    for f in a.morphism_ids() {
        for g in a.morphism_ids() {
            if a.tgt(f) != a.tgt(g) {
                continue;
            }
            for (apex, p, q) in oracle_pullbacks(a, f, g) {
                if !oracle_is_pullback(b, obj[apex.0], mor[p.0], mor[q.0], mor[f.0], mor[g.0]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every natural transformation `f => g` by trying every component choice.
pub fn oracle_transformations(f: &Functor, g: &Functor) -> Vec<Vec<MorId>> {
    let (a, b) = (f.source(), f.target());
    let choices: Vec<Vec<MorId>> = a
        .object_ids()
        .map(|x| b.hom(f.obj(x), g.obj(x)).to_vec())
        .collect();
    cartesian_product(&choices)
        .into_iter()
        .filter(|t| {
            a.morphism_ids()
                .all(|m| b.comp(g.mor(m), t[a.src(m).0]) == b.comp(t[a.tgt(m).0], f.mor(m)))
        })
        .collect()
}

/// Every naturality square is a pullback.
pub fn oracle_is_cartesian(t: &NatTrans) -> bool {
    let (a, b) = (t.domain(), t.codomain());
    a.morphism_ids().all(|m| {
        let (x, y) = (a.src(m), a.tgt(m));
        oracle_is_pullback(
            b,
            t.source().obj(x),
            t.component(x),
            t.source().mor(m),
            t.target().mor(m),
            t.component(y),
        )
    })
}
