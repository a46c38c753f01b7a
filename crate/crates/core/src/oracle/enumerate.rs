use super::{Checkpoint, SearchSpec};
use crate::error::{Error, Result};
use crate::natural::Natural;
use crate::repr::{SparseForm, SparseTerm};

/// Stream of every value with exactly `k` non-zero digits at exponents
/// `<= M`, in exponent-tuple-major lexicographic order.
pub struct SparseEnumerator<T> {
    base: u32,
    k: usize,
    max_exp: u32,
    lead: usize,
    lead_limit: Option<u32>,
    feasible: bool,
    pows: Vec<T>,
    tuple: Option<Vec<u32>>,
    coeffs: Vec<u32>,
    /// `(x - 2) * x^{m_i}`: what resetting digit `i` from `x-1` to 1 removes.
    span: Vec<T>,
    value: T,
    in_tuple: bool,
}

pub fn enumerate_sparse<T: Natural>(spec: &SearchSpec) -> Result<SparseEnumerator<T>> {
    SparseEnumerator::new(spec)
}

impl<T: Natural> SparseEnumerator<T> {
    pub fn new(spec: &SearchSpec) -> Result<Self> {
        let first = first_tuple(spec, None);
        Self::build(spec, first, None)
    }

    /// Continue from a checkpointed exponent tuple, inclusive.
    pub fn resume(spec: &SearchSpec, from: &Checkpoint) -> Result<Self> {
        from.validate(spec)?;
        Self::build(spec, Some(from.exponents().to_vec()), None)
    }

    /// Only the tuples whose leading free exponent equals `lead`.
    pub fn partition(spec: &SearchSpec, lead: u32) -> Result<Self> {
        let first = first_tuple(spec, Some(lead));
        Self::build(spec, first, Some(lead))
    }

    /// The part of partition `lead` at or after `from`.
    pub(crate) fn partition_from(spec: &SearchSpec, from: &Checkpoint) -> Result<Self> {
        from.validate(spec)?;
        let lead = from.exponents().get(spec.lead_index()).copied();
        Self::build(spec, Some(from.exponents().to_vec()), lead)
    }

    fn build(spec: &SearchSpec, first: Option<Vec<u32>>, lead_limit: Option<u32>) -> Result<Self> {
        spec.validate()?;
        let feasible = spec.is_feasible();
        let b = T::small(spec.base);
        let mut pows = Vec::new();
        if feasible {
            let mut p = T::one();
            for e in 0..=spec.max_exponent {
                pows.push(p.clone());
                if e < spec.max_exponent {
                    p = p.checked_mul(&b).ok_or(Error::Overflow)?;
                }
            }
            // Largest candidate (x-1)(x^M + ... + 1) = x^{M+1} - 1 must fit.
            p.checked_mul(&(b - T::one()))
                .and_then(|top| top.checked_add(&(p - T::one())))
                .ok_or(Error::Overflow)?;
        }
        Ok(Self {
            base: spec.base,
            k: spec.digits as usize,
            max_exp: spec.max_exponent,
            lead: spec.lead_index(),
            lead_limit,
            feasible,
            pows,
            tuple: if feasible { first } else { None },
            coeffs: Vec::new(),
            span: Vec::new(),
            value: T::zero(),
            in_tuple: false,
        })
    }

    /// False when `k > M + 1`; the stream is then empty.
    pub fn is_feasible(&self) -> bool {
        self.feasible
    }

    /// The exponent tuple currently being (or next to be) processed.
    pub fn position(&self) -> Option<Checkpoint> {
        self.tuple.clone().map(Checkpoint::new)
    }

    pub fn current_tuple(&self) -> Option<&[u32]> {
        self.tuple.as_deref()
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coeffs
    }

    /// Sparse form of the value most recently produced.
    pub fn current_sparse(&self) -> Option<SparseForm> {
        let tuple = self.tuple.as_ref()?;
        let terms = tuple
            .iter()
            .zip(&self.coeffs)
            .map(|(&exponent, &coefficient)| SparseTerm {
                exponent,
                coefficient,
            })
            .collect();
        SparseForm::new(self.base, terms).ok()
    }

    fn start_tuple(&mut self) {
        let tuple = self.tuple.as_ref().expect("active tuple");
        self.coeffs.clear();
        self.coeffs.resize(self.k, 1);
        let spread = T::small(self.base - 2);
        self.span.clear();
        self.span.extend(
            tuple
                .iter()
                .map(|&m| self.pows[m as usize].clone() * spread.clone()),
        );
        self.value = tuple
            .iter()
            .fold(T::zero(), |acc, &m| acc + self.pows[m as usize].clone());
        self.in_tuple = true;
    }

    /// Odometer step over coefficient tuples; false once they are exhausted.
    fn bump_coeffs(&mut self) -> bool {
        let tuple = self.tuple.as_ref().expect("active tuple");
        let top = self.base - 1;
        for i in (0..self.k).rev() {
            if self.coeffs[i] < top {
                self.coeffs[i] += 1;
                self.value = self.value.clone() + self.pows[tuple[i] as usize].clone();
                return true;
            }
            self.coeffs[i] = 1;
            self.value = self.value.clone() - self.span[i].clone();
        }
        false
    }

    /// Move to the next exponent tuple in lexicographic order.
    pub fn step_tuple(&mut self) {
        self.in_tuple = false;
        let Some(tuple) = self.tuple.as_mut() else {
            return;
        };
        let k = self.k;
        let fixed = self.lead;
        let mut advanced = false;
        for i in (fixed..k).rev() {
            let cap = self.max_exp - (k - 1 - i) as u32;
            if tuple[i] < cap {
                tuple[i] += 1;
                for j in i + 1..k {
                    tuple[j] = tuple[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.tuple = None;
            return;
        }
        if let Some(limit) = self.lead_limit {
            if tuple.get(self.lead).is_some_and(|&l| l > limit) {
                self.tuple = None;
            }
        }
    }

    /// Call `f` on every value of the current exponent tuple, then move on.
    /// Returns false when the stream is exhausted.
    pub fn visit_tuple(&mut self, mut f: impl FnMut(&T, &[u32])) -> bool {
        if self.tuple.is_none() {
            return false;
        }
        self.start_tuple();
        f(&self.value, &self.coeffs);
        while self.bump_coeffs() {
            f(&self.value, &self.coeffs);
        }
        self.step_tuple();
        true
    }

    /// Like `visit_tuple`, but the callback sees the enumerator itself.
    pub(crate) fn visit_tuple_with(&mut self, mut f: impl FnMut(&Self)) -> bool {
        if self.tuple.is_none() {
            return false;
        }
        self.start_tuple();
        f(self);
        while self.bump_coeffs() {
            f(self);
        }
        self.step_tuple();
        true
    }

    pub fn value(&self) -> &T {
        &self.value
    }
}

impl<T: Natural> Iterator for SparseEnumerator<T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        loop {
            self.tuple.as_ref()?;
            if !self.in_tuple {
                self.start_tuple();
                return Some(self.value.clone());
            }
            if self.bump_coeffs() {
                return Some(self.value.clone());
            }
            self.step_tuple();
        }
    }
}

/// Lexicographically first tuple, optionally with a fixed leading exponent.
fn first_tuple(spec: &SearchSpec, lead: Option<u32>) -> Option<Vec<u32>> {
    if !spec.is_feasible() {
        return None;
    }
    let k = spec.digits as usize;
    let li = spec.lead_index();
    let mut t: Vec<u32> = (0..k as u32).collect();
    if let Some(l) = lead {
        if li >= k {
            // k = 1 with a forced constant digit: the only tuple is (0).
            return (l == 0).then_some(t);
        }
        let start = if spec.coprime_only { 1 } else { 0 };
        if l < start {
            return None;
        }
        for (j, slot) in t.iter_mut().enumerate().skip(li) {
            *slot = l + (j - li) as u32;
        }
        if t[k - 1] > spec.max_exponent {
            return None;
        }
    }
    Some(t)
}

/// Values the leading free exponent takes; one partition each.
pub(crate) fn lead_values(spec: &SearchSpec) -> Vec<u32> {
    if !spec.is_feasible() {
        return Vec::new();
    }
    let k = spec.digits;
    let m = spec.max_exponent;
    if spec.coprime_only {
        if k == 1 {
            vec![0]
        } else {
            (1..=m + 2 - k).collect()
        }
    } else {
        (0..=m + 1 - k).collect()
    }
}
