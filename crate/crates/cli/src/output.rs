use serde::Serialize;

use catpb::{Check, CommutingSquare, FiniteCategory};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Error => 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    Pullback {
        category: String,
        cospan: [String; 2],
        apex: String,
        to_left: String,
        to_right: String,
    },
    Construction {
        name: String,
        objects: usize,
        morphisms: usize,
        text: String,
        tables: serde_json::Value,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        written: Vec<String>,
    },
    Functor {
        name: String,
        text: String,
    },
}

impl Witness {
    pub fn pullback(c: &FiniteCategory, s: &CommutingSquare) -> Self {
        Witness::Pullback {
            category: c.name().to_string(),
            cospan: [
                c.mor_name(s.left).to_string(),
                c.mor_name(s.right).to_string(),
            ],
            apex: c.obj_name(s.apex).to_string(),
            to_left: c.mor_name(s.to_left).to_string(),
            to_right: c.mor_name(s.to_right).to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<String>) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            verdict: Verdict::Pass,
            checks: Vec::new(),
            witnesses: Vec::new(),
            error: None,
            timing_ms: 0,
        }
    }

    /// Sets the verdict from the checks unless an error was recorded.
    pub fn finish(&mut self) {
        self.verdict = if self.error.is_some() {
            Verdict::Error
        } else if self.checks.iter().all(Check::passed) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Error => "ERROR",
        };
        out += &format!("catpb {}: {verdict}\n", self.command);
        if let Some(e) = &self.error {
            out += &format!("  error: {e}\n");
        }
        for c in &self.checks {
            let mark = if c.passed() { "pass" } else { "FAIL" };
            out += &format!("  [{mark}] {}\n", c.name);
            if let Some(ce) = &c.counterexample {
                out += &format!("         counterexample: {}\n", describe(ce));
            }
            if let Some(d) = &c.detail {
                out += &format!("         {d}\n");
            }
        }
        for w in &self.witnesses {
            match w {
                Witness::Pullback {
                    category,
                    cospan,
                    apex,
                    to_left,
                    to_right,
                } => {
                    out += &format!(
                        "  pullback in {category} of ({}, {}): apex {apex}, legs {to_left}, {to_right}\n",
                        cospan[0], cospan[1]
                    );
                }
                Witness::Construction {
                    name,
                    objects,
                    morphisms,
                    text,
                    written,
                    ..
                } => {
                    out += &format!(
                        "  constructed {name}: {objects} objects, {morphisms} morphisms\n"
                    );
                    if written.is_empty() {
                        out += text;
                    } else {
                        for w in written {
                            out += &format!("  wrote {w}\n");
                        }
                    }
                }
                Witness::Functor { name, text } => {
                    out += &format!("  witness {name}:\n");
                    out += text;
                }
            }
        }
        out
    }
}

fn describe(ce: &catpb::Counterexample) -> String {
    use catpb::Counterexample::*;
    match ce {
        Cospan {
            category,
            left,
            right,
            target,
        } => format!("cospan {left} -> {target} <- {right} in {category}"),
        Square {
            category,
            apex,
            to_left,
            to_right,
            left,
            right,
        } => format!("square {apex} ({to_left}, {to_right}) over ({left}, {right}) in {category}"),
        Morphism {
            category,
            name,
            source,
            target,
        } => format!("morphism {name} : {source} -> {target} in {category}"),
        Object { category, name } => format!("object {name} in {category}"),
        Mismatch { description } => description.clone(),
    }
}
