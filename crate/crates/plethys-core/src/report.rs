//! Pass/fail report types shared by the axiom and structure verifiers.

use alloc::string::String;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
}

impl CheckItem {
    pub fn named(name: impl Into<String>, pass: bool) -> Self {
        CheckItem {
            name: name.into(),
            pass,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub degree: usize,
    pub checks: Vec<CheckItem>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
