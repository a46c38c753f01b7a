use num_bigint::BigUint;
use rayon::prelude::*;

use super::enumerate::{lead_values, SparseEnumerator};
use super::{Checkpoint, PowerTester, SearchHit, SearchSpec};
use crate::error::{Error, Result};
use crate::natural::Natural;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; 1 runs on the calling thread.
    pub threads: usize,
    /// Screen candidates by power residues before taking roots.
    pub prune: bool,
    pub resume: Option<Checkpoint>,
    /// Stop after this many exponent tuples (sequential runs only).
    pub stop_after: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            threads: 1,
            prune: true,
            resume: None,
            stop_after: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    /// Hits in ascending order of value.
    pub hits: Vec<SearchHit>,
    /// Candidates examined.
    pub candidates: u64,
    /// Exponent tuples examined.
    pub tuples: u64,
    /// Where to resume, if the run stopped early.
    pub next: Option<Checkpoint>,
    pub feasible: bool,
}

/// All hits for `spec`, sorted by value.
pub fn find_sparse_powers(spec: &SearchSpec) -> Result<Vec<SearchHit>> {
    Ok(search(spec, &SearchOptions::default())?.hits)
}

pub fn search(spec: &SearchSpec, opts: &SearchOptions) -> Result<SearchReport> {
    spec.validate()?;
    if opts.threads == 0 {
        return Err(Error::InvalidInput(
            "thread count must be at least 1".into(),
        ));
    }
    if opts.threads > 1 && opts.stop_after.is_some() {
        return Err(Error::InvalidInput(
            "a tuple budget needs a single thread".into(),
        ));
    }
    if let Some(c) = &opts.resume {
        c.validate(spec)?;
    }
    // Narrowest scalar that holds x^{M+1} - 1.
    let largest = spec.value_bound() - 1u32;
    if largest <= BigUint::from(u64::MAX) {
        run::<u64>(spec, opts)
    } else if largest <= BigUint::from(u128::MAX) {
        run::<u128>(spec, opts)
    } else {
        run::<BigUint>(spec, opts)
    }
}

#[derive(Default)]
struct Partial {
    hits: Vec<SearchHit>,
    candidates: u64,
    tuples: u64,
    next: Option<Checkpoint>,
}

fn run<T: Natural>(spec: &SearchSpec, opts: &SearchOptions) -> Result<SearchReport> {
    let tester = PowerTester::new(spec.degrees.clone(), spec.value_bound().bits(), opts.prune);
    let feasible = spec.is_feasible();
    let merged = if opts.threads == 1 {
        let en = match &opts.resume {
            Some(c) => SparseEnumerator::<T>::resume(spec, c)?,
            None => SparseEnumerator::<T>::new(spec)?,
        };
        scan(en, &tester, opts.stop_after)
    } else {
        let enumerators = partitions::<T>(spec, opts.resume.as_ref())?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
        let parts: Vec<Partial> = pool.install(|| {
            enumerators
                .into_par_iter()
                .map(|en| scan(en, &tester, None))
                .collect()
        });
        let mut all = Partial::default();
        for p in parts {
            all.hits.extend(p.hits);
            all.candidates += p.candidates;
            all.tuples += p.tuples;
        }
        all
    };
    let mut hits = merged.hits;
    hits.sort_by(|a, b| a.value.cmp(&b.value));
    Ok(SearchReport {
        hits,
        candidates: merged.candidates,
        tuples: merged.tuples,
        next: merged.next,
        feasible,
    })
}

/// Enumerators covering the search space from `resume` on, one per leading
/// exponent.
fn partitions<T: Natural>(
    spec: &SearchSpec,
    resume: Option<&Checkpoint>,
) -> Result<Vec<SparseEnumerator<T>>> {
    let li = spec.lead_index();
    let start_lead = resume.and_then(|c| c.exponents().get(li).copied());
    let mut out = Vec::new();
    if let Some(c) = resume {
        out.push(SparseEnumerator::partition_from(spec, c)?);
    }
    for lead in lead_values(spec) {
        if start_lead.is_some_and(|s| lead <= s) || (resume.is_some() && start_lead.is_none()) {
            continue;
        }
        out.push(SparseEnumerator::partition(spec, lead)?);
    }
    Ok(out)
}

fn scan<T: Natural>(
    mut en: SparseEnumerator<T>,
    tester: &PowerTester,
    budget: Option<u64>,
) -> Partial {
    let mut out = Partial::default();
    while en.current_tuple().is_some() {
        if budget.is_some_and(|b| out.tuples >= b) {
            out.next = en.position();
            break;
        }
        en.visit_tuple_with(|e| {
            out.candidates += 1;
            if let Some(w) = tester.test(e.value()) {
                out.hits.push(SearchHit {
                    value: e.value().to_biguint(),
                    witness: w.to_big(),
                    sparse: e
                        .current_sparse()
                        .expect("enumerated digits form a sparse form"),
                });
            }
        });
        out.tuples += 1;
    }
    out
}
