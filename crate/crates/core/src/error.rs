use thiserror::Error;

/// Errors raised while building or checking finite categorical data.
///
/// Names, not indices, are carried so messages stay readable after the
/// originating category has been dropped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("composable pair (`{g}` after `{f}`) has no composite")]
    MissingComposite { g: String, f: String },
    #[error("conflicting composites for `{g}` after `{f}`: `{first}` and `{second}`")]
    ConflictingComposite {
        g: String,
        f: String,
        first: String,
        second: String,
    },
    #[error("identity law violated by the entry `{g}` after `{f}`")]
    IdentityLawViolation { g: String, f: String },
    #[error("associativity fails for `{h}`, `{g}`, `{f}`")]
    AssociativityViolation { h: String, g: String, f: String },
    #[error("`{g}` cannot follow `{f}`: target of `{f}` is not the source of `{g}`")]
    NotComposable { g: String, f: String },
    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    SizeGuardExceeded {
        what: &'static str,
        actual: u64,
        limit: u64,
    },
    #[error("cospan (`{left}`, `{right}`) has no pullback")]
    NoPullback { left: String, right: String },
    #[error("square does not commute: {0}")]
    NotCommuting(String),
    #[error("functor does not respect the boundary of `{0}`")]
    BoundaryViolation(String),
    #[error("functor does not preserve the identity of `{0}`")]
    IdentityNotPreserved(String),
    #[error("functor does not preserve the composite `{g}` after `{f}`")]
    CompositionNotPreserved { g: String, f: String },
    #[error("naturality fails at `{0}`")]
    NaturalityViolation(String),
    #[error("incomplete map: {0}")]
    IncompleteMap(String),
    #[error("mismatched categories: {0}")]
    MismatchedCategories(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("curried image is not in the internal hom: {0}")]
    CurryImageNotInHom(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
