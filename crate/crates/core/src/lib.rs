//! Finite categories with pullbacks, pullback-preserving functors, cartesian
//! natural transformations, and the internal homs that make this setting
//! cartesian closed, all checked by exhaustive search on explicit tables.

pub mod category;
pub mod ccc;
pub mod construct;
pub mod dsl;
pub mod error;
pub mod fixtures;
pub mod functor;
pub mod guard;
pub mod iso;
pub mod limits;
pub mod report;

pub use category::{validate_category, FiniteCategory, MorId, Morphism, ObjId, RawCategory};
pub use ccc::{
    check_triangles, coeval_functor, curry, eval_functor, hom_iso, uncurry, CCCWitness,
    HomIsoWitness,
};
pub use construct::{internal_hom, product_category, HomCategory, ProductCategory};
pub use dsl::{parse_category, serialize_category, Library, ParseError};
pub use error::{Error, Result};
pub use functor::{is_cartesian, preserves_pullbacks, Functor, NatTrans};
pub use guard::SizeGuard;
pub use iso::{categories_isomorphic, CategoryIso};
pub use limits::{choose_pullback, has_all_pullbacks, CommutingSquare, Cospan, PullbackSquare};
pub use report::{Check, CheckVerdict, Counterexample};
