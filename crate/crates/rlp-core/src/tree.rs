//! The tree values RLP serializes.

use alloc::vec::Vec;

/// A finitely branching ordered tree with byte-array leaves.
///
/// This is the whole domain of RLP: a value is either a byte array
/// ("string") or an ordered sequence of values ("list"). An empty leaf and
/// an empty branch are distinct values with distinct encodings.
///
/// Trees nested hundreds of thousands of levels deep are legitimate decoder
/// output, so `Drop` and `PartialEq` walk the tree with explicit work lists
/// rather than recursion; neither can overflow the call stack. `Debug` and
/// `Clone` are derived and do recurse — avoid them on pathologically deep
/// values.
#[derive(Debug, Clone)]
pub enum RlpTree {
    /// A byte array.
    Leaf(Vec<u8>),
    /// An ordered sequence of subtrees.
    Branch(Vec<RlpTree>),
}

impl RlpTree {
    /// Builds a leaf from anything convertible to bytes.
    pub fn leaf(bytes: impl Into<Vec<u8>>) -> Self {
        RlpTree::Leaf(bytes.into())
    }

    /// Builds a branch from anything convertible to a sequence of subtrees.
    pub fn branch(subtrees: impl Into<Vec<RlpTree>>) -> Self {
        RlpTree::Branch(subtrees.into())
    }

    /// True for leaves.
    pub fn is_leaf(&self) -> bool {
        matches!(self, RlpTree::Leaf(_))
    }

    /// True for branches.
    pub fn is_branch(&self) -> bool {
        matches!(self, RlpTree::Branch(_))
    }

    /// The leaf payload, if this is a leaf.
    pub fn as_leaf(&self) -> Option<&[u8]> {
        match self {
            RlpTree::Leaf(bytes) => Some(bytes),
            RlpTree::Branch(_) => None,
        }
    }

    /// The subtrees, if this is a branch.
    pub fn as_branch(&self) -> Option<&[RlpTree]> {
        match self {
            RlpTree::Leaf(_) => None,
            RlpTree::Branch(subtrees) => Some(subtrees),
        }
    }

    /// Total number of nodes: every leaf and every branch counts as one.
    pub fn node_count(&self) -> usize {
        let mut count = 0;
        let mut work = alloc::vec![self];
        while let Some(node) = work.pop() {
            count += 1;
            if let RlpTree::Branch(subtrees) = node {
                work.extend(subtrees.iter());
            }
        }
        count
    }
}

impl PartialEq for RlpTree {
    fn eq(&self, other: &Self) -> bool {
        let mut work = alloc::vec![(self, other)];
        while let Some(pair) = work.pop() {
            match pair {
                (RlpTree::Leaf(a), RlpTree::Leaf(b)) => {
                    if a != b {
                        return false;
                    }
                }
                (RlpTree::Branch(a), RlpTree::Branch(b)) => {
                    if a.len() != b.len() {
                        return false;
                    }
                    work.extend(a.iter().zip(b.iter()));
                }
                _ => return false,
            }
        }
        true
    }
}

impl Eq for RlpTree {}

impl Drop for RlpTree {
    fn drop(&mut self) {
        // Detach all descendants into a flat work list so the automatic
        // drop glue never recurses more than one level.
        let RlpTree::Branch(subtrees) = self else { return };
        if subtrees.is_empty() {
            return;
        }
        let mut work = core::mem::take(subtrees);
        while let Some(mut node) = work.pop() {
            if let RlpTree::Branch(grandchildren) = &mut node {
                work.append(grandchildren);
            }
        }
    }
}
