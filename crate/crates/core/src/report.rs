//! Named check results with serializable counterexamples.

use serde::Serialize;

use crate::category::{FiniteCategory, MorId, ObjId};
use crate::limits::{CommutingSquare, Cospan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckVerdict {
    Pass,
    Fail,
}

/// A diagram piece that witnesses a failed check, by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Counterexample {
    Cospan {
        category: String,
        left: String,
        right: String,
        target: String,
    },
    Square {
        category: String,
        apex: String,
        to_left: String,
        to_right: String,
        left: String,
        right: String,
    },
    Morphism {
        category: String,
        name: String,
        source: String,
        target: String,
    },
    Object {
        category: String,
        name: String,
    },
    Mismatch {
        description: String,
    },
}

impl Counterexample {
    pub fn cospan(c: &FiniteCategory, cospan: Cospan) -> Self {
        Counterexample::Cospan {
            category: c.name().to_string(),
            left: c.mor_name(cospan.left).to_string(),
            right: c.mor_name(cospan.right).to_string(),
            target: c.obj_name(c.tgt(cospan.left)).to_string(),
        }
    }

    pub fn square(c: &FiniteCategory, s: &CommutingSquare) -> Self {
        Counterexample::Square {
            category: c.name().to_string(),
            apex: c.obj_name(s.apex).to_string(),
            to_left: c.mor_name(s.to_left).to_string(),
            to_right: c.mor_name(s.to_right).to_string(),
            left: c.mor_name(s.left).to_string(),
            right: c.mor_name(s.right).to_string(),
        }
    }

    pub fn morphism(c: &FiniteCategory, m: MorId) -> Self {
        Counterexample::Morphism {
            category: c.name().to_string(),
            name: c.mor_name(m).to_string(),
            source: c.obj_name(c.src(m)).to_string(),
            target: c.obj_name(c.tgt(m)).to_string(),
        }
    }

    pub fn object(c: &FiniteCategory, x: ObjId) -> Self {
        Counterexample::Object {
            category: c.name().to_string(),
            name: c.obj_name(x).to_string(),
        }
    }

    pub fn mismatch(description: impl Into<String>) -> Self {
        Counterexample::Mismatch {
            description: description.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: CheckVerdict,
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            verdict: CheckVerdict::Pass,
            counterexample: None,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, counterexample: Option<Counterexample>) -> Self {
        Check {
            name: name.into(),
            verdict: CheckVerdict::Fail,
            counterexample,
            detail: None,
        }
    }

    /// Pass when `counterexample` is `None`.
    pub fn from_counterexample(
        name: impl Into<String>,
        counterexample: Option<Counterexample>,
    ) -> Self {
        match counterexample {
            None => Check::pass(name),
            Some(c) => Check::fail(name, Some(c)),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, None)
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == CheckVerdict::Pass
    }
}
