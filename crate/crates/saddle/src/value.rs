//! Opaque totally ordered entry values and shared instrumentation counters.
//!
//! Algorithms in this crate never do arithmetic on matrix entries: a
//! [`Value`] can only be cloned and compared. Every comparison is charged to
//! the counter of the root view the value came from, so query/comparison
//! budgets can be checked externally without touching algorithm code.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrder};
use std::sync::Arc;

/// Shared per-root-view instrumentation. Increments are relaxed atomics:
/// counts must survive concurrent use but never order anything.
#[derive(Debug, Default)]
pub(crate) struct Counters {
    pub(crate) queries: AtomicU64,
    pub(crate) comparisons: AtomicU64,
}

impl Counters {
    pub(crate) fn bump_query(&self) {
        self.queries.fetch_add(1, AtomicOrder::Relaxed);
    }

    fn bump_comparison(&self) {
        self.comparisons.fetch_add(1, AtomicOrder::Relaxed);
    }

    pub(crate) fn snapshot(&self) -> QueryStats {
        QueryStats {
            queries: self.queries.load(AtomicOrder::Relaxed),
            comparisons: self.comparisons.load(AtomicOrder::Relaxed),
        }
    }
}

/// Snapshot of a root view's query and comparison counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QueryStats {
    /// Base entry accesses. Reads answered by a diagonal overlay do not count.
    pub queries: u64,
    /// Pairwise value comparisons performed on values of this root.
    pub comparisons: u64,
}

impl QueryStats {
    /// Counter increments between `earlier` and `self`.
    pub fn since(self, earlier: QueryStats) -> QueryStats {
        QueryStats {
            queries: self.queries - earlier.queries,
            comparisons: self.comparisons - earlier.comparisons,
        }
    }
}

/// A matrix entry value: totally ordered, opaque, copyable.
///
/// Values produced by a reflected view carry reversed comparison polarity so
/// that `reflect` is an order-reversal wrapper rather than arithmetic
/// negation. Values must only be compared against values of the same
/// polarity (i.e. values obtained through the same view stack, or probes
/// built with [`crate::matrix::MatrixView::probe`]).
#[derive(Clone)]
pub struct Value {
    key: f64,
    rev: bool,
    meter: Option<Arc<Counters>>,
}

impl Value {
    /// A free-standing probe value, e.g. a threshold supplied on the command
    /// line. Probes compare with root (non-reflected) polarity.
    pub fn new(raw: f64) -> Value {
        Value { key: raw, rev: false, meter: None }
    }

    pub(crate) fn in_frame(key: f64, rev: bool, meter: Option<Arc<Counters>>) -> Value {
        Value { key, rev, meter }
    }

    /// The underlying payload. Intended for output formatting and for the
    /// brute-force oracle; algorithm code sticks to comparisons.
    pub fn raw(&self) -> f64 {
        self.key
    }

    /// Whether this value compares in reversed (descending-key) order, as
    /// values probed through a reflected view do.
    pub fn reversed(&self) -> bool {
        self.rev
    }

    pub(crate) fn flipped(mut self) -> Value {
        self.rev = !self.rev;
        self
    }

    fn meter(&self) -> Option<&Arc<Counters>> {
        self.meter.as_ref()
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Value) -> Ordering {
        if let Some(counters) = self.meter().or_else(|| other.meter()) {
            counters.bump_comparison();
        }
        debug_assert_eq!(
            self.rev, other.rev,
            "compared values of mixed comparison polarity"
        );
        let natural = self.key.total_cmp(&other.key);
        if self.rev {
            natural.reverse()
        } else {
            natural
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Value) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Value) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Value {}

impl std::fmt::Debug for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.rev {
            write!(f, "Value({} rev)", self.key)
        } else {
            write!(f, "Value({})", self.key)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_order_over_probes() {
        let a = Value::new(-1.5);
        let b = Value::new(0.0);
        let c = Value::new(0.0);
        assert!(a < b);
        assert!(b == c);
        assert!(b > a);
    }

    #[test]
    fn reversed_polarity_flips_order() {
        let lo = Value::in_frame(1.0, true, None);
        let hi = Value::in_frame(2.0, true, None);
        assert!(lo > hi);
        assert_eq!(lo.clone().flipped().cmp(&hi.clone().flipped()), Ordering::Less);
    }

    #[test]
    fn comparisons_are_metered() {
        let counters = Arc::new(Counters::default());
        let a = Value::in_frame(1.0, false, Some(counters.clone()));
        let b = Value::in_frame(2.0, false, Some(counters.clone()));
        let _ = a < b;
        let _ = a == b;
        let _ = b.cmp(&Value::new(7.0)); // meter picked up from either side
        assert_eq!(counters.snapshot().comparisons, 3);
    }

    #[test]
    fn infinite_probes_bracket_finite_values() {
        let top = Value::new(f64::INFINITY);
        let bot = Value::new(f64::NEG_INFINITY);
        let mid = Value::new(1e300);
        assert!(bot < mid && mid < top);
    }
}
