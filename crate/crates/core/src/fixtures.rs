//! Small named categories used in examples and tests.

use std::sync::Arc;

use crate::category::FiniteCategory;
use crate::dsl::parse_category;
use crate::guard::SizeGuard;

pub const ONE: &str = include_str!("../fixtures/one.cat");
pub const ARROW: &str = include_str!("../fixtures/arrow.cat");
pub const DIAMOND: &str = include_str!("../fixtures/diamond.cat");
pub const Z2: &str = include_str!("../fixtures/z2.cat");
pub const V: &str = include_str!("../fixtures/v.cat");

fn load(text: &str) -> Arc<FiniteCategory> {
    Arc::new(parse_category(text, &SizeGuard::default()).expect("bundled fixture is valid"))
}

/// The terminal category: one object, its identity.
pub fn one() -> Arc<FiniteCategory> {
    load(ONE)
}

/// The poset `0 < 1`.
pub fn arrow() -> Arc<FiniteCategory> {
    load(ARROW)
}

/// The four-element lattice `bot < a, b < top`.
pub fn diamond() -> Arc<FiniteCategory> {
    load(DIAMOND)
}

/// The two-element group as a one-object category.
pub fn z2() -> Arc<FiniteCategory> {
    load(Z2)
}

/// The cospan shape `a -> c <- b`; it lacks pullbacks.
pub fn v() -> Arc<FiniteCategory> {
    load(V)
}

/// The fixtures that have all pullbacks.
pub fn all() -> Vec<Arc<FiniteCategory>> {
    vec![one(), arrow(), diamond(), z2()]
}
