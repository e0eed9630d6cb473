//! Order statistics and logarithm helpers used by the solvers.
//!
//! Selection is worst-case linear (median-of-medians with groups of five),
//! which keeps every caller's comparison budget deterministic instead of
//! expected-case. The three-way partition reports its swaps so callers can
//! mirror the permutation onto co-indexed state (the transform layer swaps
//! matrix rows and columns in lockstep with its scratch array).

use std::cmp::Ordering;

use crate::value::Value;

/// `ceil(log2(n))` for `n >= 1` (0 when `n == 1`).
pub fn ceil_lg(n: usize) -> u32 {
    assert!(n >= 1, "ceil_lg needs a positive argument");
    n.next_power_of_two().trailing_zeros()
}

/// The iterated logarithm: how many times `ceil_lg` must be applied to
/// bring `n` down to 1. Grows so slowly it is at most 5 for any
/// representable input.
pub fn lg_star(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        1 + lg_star(ceil_lg(n) as usize)
    }
}

/// Three-way (Dutch national flag) partition of `items` in place.
///
/// `rank_of` classifies each element against the caller's pivot. On return,
/// with `(lt, eq)` the reported pair, `items[..lt]` ranks `Less`,
/// `items[lt..eq]` ranks `Equal`, and `items[eq..]` ranks `Greater`.
///
/// Every swap applied to `items` is also reported to `on_swap`, including
/// trivial self-swaps, so the caller can replay the exact permutation on
/// parallel state.
pub fn partition_three_way<T>(
    items: &mut [T],
    mut rank_of: impl FnMut(&T) -> Ordering,
    mut on_swap: impl FnMut(usize, usize),
) -> (usize, usize) {
    let mut lo = 0;
    let mut i = 0;
    let mut hi = items.len();
    while i < hi {
        match rank_of(&items[i]) {
            Ordering::Less => {
                items.swap(lo, i);
                on_swap(lo, i);
                lo += 1;
                i += 1;
            }
            Ordering::Equal => i += 1,
            Ordering::Greater => {
                hi -= 1;
                items.swap(i, hi);
                on_swap(i, hi);
            }
        }
    }
    (lo, hi)
}

/// The `k`-th smallest of `items` (1-based, duplicates counted with
/// multiplicity), computed in worst-case linear time. The input is cloned
/// into scratch space and left untouched.
pub fn select_rank(items: &[Value], k: usize) -> Value {
    assert!(
        k >= 1 && k <= items.len(),
        "rank {k} out of range for {} items",
        items.len()
    );
    let mut scratch: Vec<Value> = items.to_vec();
    select_slice(&mut scratch, k)
}

fn select_slice(items: &mut [Value], k: usize) -> Value {
    debug_assert!(k >= 1 && k <= items.len());
    if items.len() <= 5 {
        items.sort_unstable();
        return items[k - 1].clone();
    }
    let mut medians: Vec<Value> = items
        .chunks_mut(5)
        .map(|chunk| {
            chunk.sort_unstable();
            chunk[chunk.len() / 2].clone()
        })
        .collect();
    let mid = medians.len().div_ceil(2);
    let pivot = select_slice(&mut medians, mid);
    let (lt, eq) = partition_three_way(items, |v| v.cmp(&pivot), |_, _| {});
    if k <= lt {
        select_slice(&mut items[..lt], k)
    } else if k <= eq {
        pivot
    } else {
        select_slice(&mut items[eq..], k - eq)
    }
}
