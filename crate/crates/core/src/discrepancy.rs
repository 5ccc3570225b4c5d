//! Records of computed values that disagree with a published claim.
//!
//! Entries are findings, not failures: they are written to reports next to
//! the computed value and never used to correct or override a result. A
//! comparison that was run and agreed is kept as a `confirmed` entry so the
//! report shows it was checked.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Discrepancy,
    Confirmed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discrepancy {
    /// Stable kebab-case identifier, e.g. `gauss-component-signs`.
    pub id: String,
    pub status: Status,
    /// Where the claim applies (scene name, formula, component).
    pub context: String,
    /// The claim as published.
    pub claimed: String,
    /// What was computed instead.
    pub computed: String,
    pub detail: serde_json::Value,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Ledger {
    pub entries: Vec<Discrepancy>,
}

impl Ledger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(
        &mut self,
        id: &str,
        status: Status,
        context: impl Into<String>,
        claimed: impl Into<String>,
        computed: impl Into<String>,
        detail: serde_json::Value,
    ) {
        self.entries.push(Discrepancy {
            id: id.to_string(),
            status,
            context: context.into(),
            claimed: claimed.into(),
            computed: computed.into(),
            detail,
        });
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|d| d.id.as_str())
    }

    pub fn get(&self, id: &str) -> Option<&Discrepancy> {
        self.entries.iter().find(|d| d.id == id)
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &Discrepancy> {
        self.entries.iter().filter(|d| d.status == Status::Discrepancy)
    }
}
