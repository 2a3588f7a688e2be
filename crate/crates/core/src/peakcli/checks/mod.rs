//! The verification battery behind `verify-paper`.
//!
//! Every statement is recomputed from scratch and compared exactly. Work is
//! split into independent tasks; results are collected in task order, so the
//! report does not depend on the number of worker threads.

mod ano;
mod bridge;
mod conjecture;
mod peak;
mod tables;
mod typea;
mod typeb;

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use crate::peakcore::PeakAlgebraModel;
use crate::reptheory::{peak_cartan, CartanData};
use crate::symcore::AlgebraError;

use super::report::{Check, Section};

#[derive(Clone, Debug)]
pub struct Scope {
    pub sections: BTreeSet<Section>,
    /// Upper bound on the weight n of every check.
    pub max_n: usize,
    pub jobs: usize,
}

impl Default for Scope {
    fn default() -> Self {
        Scope {
            sections: Section::ALL.into_iter().collect(),
            max_n: 9,
            jobs: 1,
        }
    }
}

impl Scope {
    pub fn with_sections(sections: &[Section]) -> Self {
        Scope {
            sections: sections.iter().copied().collect(),
            ..Scope::default()
        }
    }

    /// 1..=min(limit, max_n).
    pub(crate) fn upto(&self, limit: usize) -> std::ops::RangeInclusive<usize> {
        1..=limit.min(self.max_n)
    }
}

pub(crate) type Task = Box<dyn FnOnce() -> Vec<Check> + Send>;

/// Runs `f` as one check; an `Err` or a panic counts as a failure.
pub(crate) fn check(
    section: Section,
    id: impl Into<String>,
    criterion: Option<u8>,
    f: impl FnOnce() -> Result<(), String>,
) -> Check {
    let id = id.into();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Check::new(section, id, criterion, true),
        Ok(Err(d)) => Check::new(section, id, criterion, false).detail(d),
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Check::new(section, id, criterion, false).detail(format!("panicked: {msg}"))
        }
    }
}

pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub(crate) fn err(e: AlgebraError) -> String {
    e.to_string()
}

type PeakEntry = Arc<OnceLock<Result<Arc<(PeakAlgebraModel, CartanData)>, String>>>;

/// 𝒫^(r)_n with its Cartan data, computed once per run and shared between
/// sections.
pub(crate) fn peak_data(n: usize, r: usize) -> Result<Arc<(PeakAlgebraModel, CartanData)>, String> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), PeakEntry>>> = OnceLock::new();
    let cell = CACHE
        .get_or_init(|| Mutex::new(HashMap::new()))
        .lock()
        .unwrap()
        .entry((n, r))
        .or_default()
        .clone();
    cell.get_or_init(|| peak_cartan(n, r).map(Arc::new).map_err(err))
        .clone()
}

fn tasks(scope: &Scope) -> Vec<Task> {
    let mut out = Vec::new();
    for s in &scope.sections {
        match s {
            Section::Tables => out.extend(tables::tasks(scope)),
            Section::TypeA => out.extend(typea::tasks(scope)),
            Section::TypeB => out.extend(typeb::tasks(scope)),
            Section::Peak => out.extend(peak::tasks(scope)),
            Section::Bridge => out.extend(bridge::tasks(scope)),
            Section::Ano => out.extend(ano::tasks(scope)),
            Section::Conjecture => out.extend(conjecture::tasks(scope)),
        }
    }
    out
}

/// Runs every check in scope on `scope.jobs` threads.
pub fn run_checks(scope: &Scope) -> Vec<Check> {
    let tasks = tasks(scope);
    let n = tasks.len();
    let slots: Vec<Mutex<Option<Task>>> = tasks.into_iter().map(|t| Mutex::new(Some(t))).collect();
    let results: Vec<Mutex<Vec<Check>>> = (0..n).map(|_| Mutex::new(Vec::new())).collect();
    let next = AtomicUsize::new(0);
    let workers = scope.jobs.clamp(1, n.max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= n {
                    break;
                }
                let task = slots[i].lock().unwrap().take().expect("each task runs once");
                *results[i].lock().unwrap() = task();
            });
        }
    });
    results.into_iter().flat_map(|m| m.into_inner().unwrap()).collect()
}
