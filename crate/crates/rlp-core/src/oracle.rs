//! Brute-force generators for cross-checking the codec.
//!
//! Nothing here consults the decoder: trees are enumerated or sampled
//! structurally and turned into bytes by the encoder alone, so the results
//! serve as an independent reference for what the decoder must accept.
//!
//! The exhaustive generators are only feasible at toy sizes — the space
//! grows like 256 to the power of the leaf bytes — which is the point:
//! small enough to enumerate completely, large enough to pin down every
//! header rule.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::encoder::{encode_tree, SHORT_FORM_MAX};
use crate::numeric::nat_to_be_bytes_min;
use crate::tree::RlpTree;

/// Bounds that make tree enumeration finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeBudget {
    /// Most nodes — leaves and branches together — a tree may have.
    pub max_total_nodes: usize,
    /// Most payload bytes any single leaf may carry.
    pub max_leaf_bytes: usize,
    /// Most children any single branch may have.
    pub max_branching: usize,
}

/// Every tree within `budget`, each exactly once, in a deterministic order:
/// fewer nodes first, then [`canonical_order`] within a node count.
///
/// Counts explode quickly — `max_leaf_bytes` beyond 2 or budgets much past
/// (3 nodes, 1 byte, 2 children) are impractical.
pub fn enumerate_trees(budget: TreeBudget) -> Vec<RlpTree> {
    // by_count[n - 1] holds every tree with exactly n nodes.
    let mut by_count: Vec<Vec<RlpTree>> = Vec::new();
    for n in 1..=budget.max_total_nodes {
        let mut trees = Vec::new();
        if n == 1 {
            for bytes in byte_arrays_up_to(budget.max_leaf_bytes) {
                trees.push(RlpTree::Leaf(bytes));
            }
            trees.push(RlpTree::Branch(Vec::new()));
        } else {
            // A root branch plus n-1 descendant nodes split across children.
            for split in compositions(n - 1, budget.max_branching) {
                append_child_products(&by_count, &split, &mut trees);
            }
        }
        trees.sort_by(canonical_order);
        by_count.push(trees);
    }
    by_count.into_iter().flatten().collect()
}

/// Every valid encoding of length at most `max_len`: each tree whose
/// encoding fits is enumerated and run through the encoder.
///
/// Exhaustive over roughly 256^`max_len` candidates, so keep `max_len` tiny
/// (the test suites use at most 3).
pub fn enumerate_valid_encodings(max_len: usize) -> BTreeSet<Vec<u8>> {
    trees_with_encoding_at_most(max_len)
        .iter()
        .map(|tree| {
            let encoding = encode_tree(tree).expect("enumerated trees are tiny");
            debug_assert!(encoding.len() <= max_len);
            encoding
        })
        .collect()
}

/// Every tree whose encoding is at most `max_len` bytes, grouped by
/// encoding length ascending. The trees are pairwise distinct, so comparing
/// the count against the resulting encoding set checks injectivity.
pub fn trees_with_encoding_at_most(max_len: usize) -> Vec<RlpTree> {
    let mut by_len: Vec<Vec<RlpTree>> = Vec::new();
    for encoded_len in 1..=max_len {
        let exact = trees_with_encoding_exactly(encoded_len, &by_len);
        by_len.push(exact);
    }
    by_len.into_iter().flatten().collect()
}

/// A reproducible tree drawn from `seed`, respecting `budget`.
///
/// The stream of choices comes from [`SplitMix64`], so a failing seed
/// reproduces anywhere. Each node flips a coin between leaf and branch
/// (forced to leaf when the node budget is spent), leaves draw a uniform
/// length and uniform bytes, and branches deal the remaining node budget
/// out to a uniform number of children.
pub fn random_tree(seed: u64, budget: TreeBudget) -> RlpTree {
    let mut rng = SplitMix64::new(seed);
    grow_tree(&mut rng, &budget, budget.max_total_nodes.max(1))
}

fn grow_tree(rng: &mut SplitMix64, budget: &TreeBudget, max_nodes: usize) -> RlpTree {
    if max_nodes == 1 || rng.below(2) == 0 {
        let len = rng.below(budget.max_leaf_bytes as u64 + 1) as usize;
        return RlpTree::Leaf((0..len).map(|_| rng.below(256) as u8).collect());
    }
    let most_children = budget.max_branching.min(max_nodes - 1);
    let child_count = rng.below(most_children as u64 + 1) as usize;
    let mut node_pool = max_nodes - 1;
    let mut subtrees = Vec::with_capacity(child_count);
    for remaining_siblings in (0..child_count).rev() {
        // Keep one node in the pool for each sibling still to come.
        let available = node_pool - remaining_siblings;
        let share = 1 + rng.below(available as u64) as usize;
        subtrees.push(grow_tree(rng, budget, share));
        node_pool -= share;
    }
    RlpTree::Branch(subtrees)
}

/// The order [`enumerate_trees`] lists trees in: fewer nodes first, then
/// leaves before branches, then payloads or child sequences
/// lexicographically.
pub fn canonical_order(a: &RlpTree, b: &RlpTree) -> Ordering {
    a.node_count().cmp(&b.node_count()).then_with(|| structural_order(a, b))
}

fn structural_order(a: &RlpTree, b: &RlpTree) -> Ordering {
    match (a, b) {
        (RlpTree::Leaf(x), RlpTree::Leaf(y)) => x.cmp(y),
        (RlpTree::Leaf(_), RlpTree::Branch(_)) => Ordering::Less,
        (RlpTree::Branch(_), RlpTree::Leaf(_)) => Ordering::Greater,
        (RlpTree::Branch(x), RlpTree::Branch(y)) => {
            for (cx, cy) in x.iter().zip(y.iter()) {
                let ord = canonical_order(cx, cy);
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            x.len().cmp(&y.len())
        }
    }
}

/// The splitmix64 generator (Steele, Lea & Flood): one 64-bit add per step,
/// finished by two xor-shift-multiply rounds. Chosen for the oracle because
/// it is trivially seedable and its reference outputs are widely published,
/// so failing seeds reproduce outside this crate too.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    /// A generator whose entire future is determined by `seed`.
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// The next 64 pseudorandom bits.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// A draw in `0..bound`. The modulo bias is irrelevant at oracle scale.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Every byte array of length at most `max_len`, prefixes first.
fn byte_arrays_up_to(max_len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    push_byte_arrays(max_len, &mut current, &mut out);
    out
}

fn push_byte_arrays(max_len: usize, current: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    out.push(current.clone());
    if current.len() == max_len {
        return;
    }
    for byte in 0..=255u8 {
        current.push(byte);
        push_byte_arrays(max_len, current, out);
        current.pop();
    }
}

/// All ways to write `total` as an ordered sum of 1..=`max_parts` positive
/// parts.
fn compositions(total: usize, max_parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    compose_into(total, max_parts, &mut current, &mut out);
    out
}

fn compose_into(
    remaining: usize,
    parts_left: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    if parts_left == 0 {
        return;
    }
    for first in 1..=remaining {
        current.push(first);
        compose_into(remaining - first, parts_left - 1, current, out);
        current.pop();
    }
}

/// Appends one branch per way of picking each child from the node-count
/// pool its `split` entry names.
fn append_child_products(by_count: &[Vec<RlpTree>], split: &[usize], out: &mut Vec<RlpTree>) {
    let pools: Vec<&[RlpTree]> = split.iter().map(|&s| by_count[s - 1].as_slice()).collect();
    if pools.iter().any(|pool| pool.is_empty()) {
        return;
    }
    let mut picks = vec![0usize; pools.len()];
    loop {
        let subtrees: Vec<RlpTree> =
            picks.iter().zip(&pools).map(|(&i, pool)| pool[i].clone()).collect();
        out.push(RlpTree::Branch(subtrees));
        // Advance the odometer; done once it wraps all the way.
        let mut slot = pools.len();
        loop {
            if slot == 0 {
                return;
            }
            slot -= 1;
            picks[slot] += 1;
            if picks[slot] < pools[slot].len() {
                break;
            }
            picks[slot] = 0;
        }
    }
}

/// Every tree whose encoding is exactly `encoded_len` bytes; `shorter[m-1]`
/// must already hold the trees of encoding length m.
fn trees_with_encoding_exactly(encoded_len: usize, shorter: &[Vec<RlpTree>]) -> Vec<RlpTree> {
    let mut out = Vec::new();
    if encoded_len == 1 {
        // Single bytes below 0x80 and the empty leaf (0x80 itself).
        for byte in 0..0x80u8 {
            out.push(RlpTree::Leaf(vec![byte]));
        }
        out.push(RlpTree::Leaf(Vec::new()));
    } else {
        // Header-framed leaves; a one-byte payload must be 0x80 or above,
        // anything longer is unconstrained.
        for payload_len in framed_payload_lens(encoded_len) {
            if payload_len == 1 {
                for byte in 0x80..=0xffu8 {
                    out.push(RlpTree::Leaf(vec![byte]));
                }
            } else {
                append_all_leaves(payload_len, &mut out);
            }
        }
    }
    // Branches: children's encodings tile the payload exactly.
    for payload_len in framed_payload_lens(encoded_len) {
        for subtrees in child_lists_with_total(payload_len, shorter) {
            out.push(RlpTree::Branch(subtrees));
        }
    }
    out
}

/// The payload lengths a header-framed encoding of exactly `encoded_len`
/// bytes can announce. At most one short-form and one long-form candidate
/// exist for any length.
fn framed_payload_lens(encoded_len: usize) -> Vec<usize> {
    let mut lens = Vec::new();
    // Short form: one header byte.
    if encoded_len >= 1 {
        let payload_len = encoded_len - 1;
        if payload_len as u128 <= SHORT_FORM_MAX {
            lens.push(payload_len);
        }
    }
    // Long form: marker, minimal digits, payload of 56 or more bytes.
    for digit_count in 1..=8usize {
        if encoded_len > 1 + digit_count {
            let payload_len = encoded_len - 1 - digit_count;
            if payload_len as u128 > SHORT_FORM_MAX
                && nat_to_be_bytes_min(payload_len as u128).len() == digit_count
            {
                lens.push(payload_len);
            }
        }
    }
    lens
}

/// Appends every leaf with exactly `payload_len` payload bytes. 256^len
/// leaves — callers keep `payload_len` tiny.
fn append_all_leaves(payload_len: usize, out: &mut Vec<RlpTree>) {
    let mut bytes = vec![0u8; payload_len];
    loop {
        out.push(RlpTree::Leaf(bytes.clone()));
        // Step the payload as one big base-256 counter.
        let mut i = payload_len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            bytes[i] = bytes[i].wrapping_add(1);
            if bytes[i] != 0 {
                break;
            }
        }
    }
}

/// Every sequence of trees whose encodings sum to exactly `total` bytes.
fn child_lists_with_total(total: usize, by_len: &[Vec<RlpTree>]) -> Vec<Vec<RlpTree>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut lists = Vec::new();
    for first_len in 1..=total.min(by_len.len()) {
        for tail in child_lists_with_total(total - first_len, by_len) {
            for first in &by_len[first_len - 1] {
                let mut subtrees = Vec::with_capacity(1 + tail.len());
                subtrees.push(first.clone());
                subtrees.extend(tail.iter().cloned());
                lists.push(subtrees);
            }
        }
    }
    lists
}
