//! Condition batteries: several statements that a theorem says are
//! equivalent, each evaluated independently and carried with a witness
//! when it fails.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Map, Value};

/// Evidence for a failed condition, named by the items involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Object { object: String },
    Module { carrier: String, structure: String },
    Morphism { morphism: String, source: String, target: String },
    Detail { detail: String },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Object { object } => write!(f, "object {object}"),
            Witness::Module { carrier, structure } => write!(f, "module ({carrier}, {structure})"),
            Witness::Morphism { morphism, source, target } => {
                write!(f, "morphism {morphism}: {source} -> {target}")
            }
            Witness::Detail { detail } => f.write_str(detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub key: String,
    pub statement: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Condition {
    pub fn new(key: &str, statement: &str, witness: Option<Witness>) -> Self {
        Condition {
            key: key.to_string(),
            statement: statement.to_string(),
            holds: witness.is_none(),
            witness,
        }
    }
}

/// How the conditions of a battery relate to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    AllTrue,
    AllFalse,
    Disagree,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::AllTrue => "all-true",
            Verdict::AllFalse => "all-false",
            Verdict::Disagree => "disagree",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Battery {
    pub title: String,
    pub conditions: Vec<Condition>,
}

impl Battery {
    pub fn new(title: &str) -> Self {
        Battery {
            title: title.to_string(),
            conditions: Vec::new(),
        }
    }

    pub fn push(&mut self, key: &str, statement: &str, witness: Option<Witness>) {
        self.conditions.push(Condition::new(key, statement, witness));
    }

    pub fn get(&self, key: &str) -> Option<bool> {
        self.conditions.iter().find(|c| c.key == key).map(|c| c.holds)
    }

    pub fn values(&self) -> Vec<bool> {
        self.conditions.iter().map(|c| c.holds).collect()
    }

    pub fn verdict(&self) -> Verdict {
        if self.conditions.iter().all(|c| c.holds) {
            Verdict::AllTrue
        } else if self.conditions.iter().all(|c| !c.holds) {
            Verdict::AllFalse
        } else {
            Verdict::Disagree
        }
    }

    pub fn agrees(&self) -> bool {
        self.verdict() != Verdict::Disagree
    }

    pub fn conjunction(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    /// `{"conditions": {key: bool}, "witnesses": {key: witness}, "verdict": ...}`.
    pub fn to_json(&self) -> Value {
        let mut conditions = Map::new();
        let mut witnesses = Map::new();
        for c in &self.conditions {
            conditions.insert(c.key.clone(), Value::Bool(c.holds));
            if let Some(w) = &c.witness {
                witnesses.insert(c.key.clone(), serde_json::to_value(w).unwrap_or(Value::Null));
            }
        }
        json!({
            "title": self.title,
            "conditions": conditions,
            "witnesses": witnesses,
            "conjunction": self.conjunction(),
            "verdict": self.verdict(),
        })
    }
}

impl fmt::Display for Battery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.conditions {
            write!(f, "  ({}) {:<5} {}", c.key, c.holds, c.statement)?;
            if let Some(w) = &c.witness {
                write!(f, "  [witness: {w}]")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "  verdict: {}", self.verdict())
    }
}
