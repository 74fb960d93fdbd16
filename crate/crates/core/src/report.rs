//! Structured outcomes of inequality checks.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Lt,
    Ge,
    Gt,
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: i128, rhs: i128) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Eq => "==",
        }
    }
}

/// One evaluated inequality `lhs rel rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub lhs: i128,
    pub relation: Relation,
    pub rhs: i128,
}

impl Check {
    pub fn holds(&self) -> bool {
        self.relation.holds(self.lhs, self.rhs)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} [{}]",
            self.label,
            self.lhs,
            self.relation.symbol(),
            self.rhs,
            if self.holds() { "ok" } else { "FAILED" }
        )
    }
}

/// The list of checks performed for one subject, plus named witness values.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    pub witnesses: Vec<(String, i128)>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn check(
        &mut self,
        label: impl Into<String>,
        lhs: impl Into<i128>,
        relation: Relation,
        rhs: impl Into<i128>,
    ) -> bool {
        let c = Check {
            label: label.into(),
            lhs: lhs.into(),
            relation,
            rhs: rhs.into(),
        };
        let ok = c.holds();
        self.checks.push(c);
        ok
    }

    /// Records a yes/no condition as `[cond] == 1`.
    pub fn require(&mut self, label: impl Into<String>, cond: bool) -> bool {
        self.check(label, cond as i128, Relation::Eq, 1)
    }

    pub fn witness(&mut self, name: impl Into<String>, value: impl Into<i128>) {
        self.witnesses.push((name.into(), value.into()));
    }

    pub fn witness_value(&self, name: &str) -> Option<i128> {
        self.witnesses
            .iter()
            .find(|(k, _)| k == name)
            .map(|&(_, v)| v)
    }

    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(Check::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds())
    }

    /// Appends every check of `other`, prefixing labels with its subject.
    pub fn absorb(&mut self, other: Report) {
        for mut c in other.checks {
            c.label = alloc::format!("{}: {}", other.subject, c.label);
            self.checks.push(c);
        }
        for (k, v) in other.witnesses {
            self.witnesses
                .push((alloc::format!("{}: {}", other.subject, k), v));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} ({})",
            self.subject,
            if self.is_ok() { "ok" } else { "FAILED" }
        )?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}
