//! Canonical tree-to-bytes encoding.
//!
//! Every tree encodes to exactly one byte string, built from three rules:
//!
//! - a single byte below 0x80 stands for itself;
//! - any other leaf is its payload behind a leaf header;
//! - a branch is the concatenation of its children's encodings behind a
//!   branch header.
//!
//! A header is one byte for payloads up to 55 bytes (the short form) and a
//! marker byte followed by the payload length's minimal big-endian digits
//! for longer payloads (the long form). With at most eight length digits,
//! payloads of 2^64 bytes or more are not encodable at all.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::RlpError;
use crate::numeric::nat_to_be_bytes_min;
use crate::tree::RlpTree;

/// Longest payload the short header form can announce.
pub const SHORT_FORM_MAX: u128 = 55;

/// Longest payload any header can announce: 2^64 - 1.
pub const MAX_PAYLOAD_LEN: u128 = (1 << 64) - 1;

/// Which header family a length prefix belongs to.
///
/// Short leaf headers start at 0x80 and short branch headers at 0xc0; each
/// family's long-form marker base sits 55 above its short base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeaderKind {
    /// Byte-array payloads: headers 0x80..=0xbf.
    Leaf,
    /// Concatenated-subtree payloads: headers 0xc0..=0xff.
    Branch,
}

impl HeaderKind {
    /// Base of the short form: the header byte for an empty payload.
    pub fn short_offset(self) -> u8 {
        match self {
            HeaderKind::Leaf => 0x80,
            HeaderKind::Branch => 0xc0,
        }
    }

    /// Base of the long form: add the digit count to get the marker byte.
    pub fn long_offset(self) -> u8 {
        self.short_offset() + SHORT_FORM_MAX as u8
    }
}

/// Builds the header announcing a payload of `payload_len` bytes.
///
/// Payloads up to 55 bytes get the one-byte short form; payloads below 2^64
/// get the long form, a marker byte followed by one to eight big-endian
/// length digits. Anything longer is not encodable.
pub fn encode_length_prefix(payload_len: u128, kind: HeaderKind) -> Result<Vec<u8>, RlpError> {
    if payload_len <= SHORT_FORM_MAX {
        return Ok(vec![kind.short_offset() + payload_len as u8]);
    }
    if payload_len > MAX_PAYLOAD_LEN {
        return Err(RlpError::InputTooLong { len: payload_len });
    }
    let digits = nat_to_be_bytes_min(payload_len);
    let mut header = Vec::with_capacity(1 + digits.len());
    header.push(kind.long_offset() + digits.len() as u8);
    header.extend_from_slice(&digits);
    Ok(header)
}

/// Encodes a byte array as a leaf.
pub fn encode_bytes(bytes: &[u8]) -> Result<Vec<u8>, RlpError> {
    // A single byte below 0x80 is its own encoding.
    if bytes.len() == 1 && bytes[0] < 0x80 {
        return Ok(vec![bytes[0]]);
    }
    let mut out = encode_length_prefix(bytes.len() as u128, HeaderKind::Leaf)?;
    out.extend_from_slice(bytes);
    Ok(out)
}

/// Encodes a tree into its unique byte-string form.
///
/// Two explicit work-list passes — sizes bottom-up, then emission top-down —
/// so nesting depth is bounded by memory, not the call stack. The first
/// oversized payload anywhere in the tree aborts the encode.
pub fn encode_tree(tree: &RlpTree) -> Result<Vec<u8>, RlpError> {
    let (total, branch_payload_lens) = encoded_sizes(tree)?;
    let mut out = Vec::with_capacity(total as usize);
    let mut next_branch = 0;
    let mut work = vec![tree];
    while let Some(node) = work.pop() {
        match node {
            RlpTree::Leaf(bytes) => out.extend_from_slice(&encode_bytes(bytes)?),
            RlpTree::Branch(subtrees) => {
                let payload_len = branch_payload_lens[next_branch];
                next_branch += 1;
                out.extend_from_slice(&encode_length_prefix(payload_len, HeaderKind::Branch)?);
                work.extend(subtrees.iter().rev());
            }
        }
    }
    debug_assert_eq!(out.len() as u128, total);
    Ok(out)
}

/// Concatenates the encodings of a sequence of trees — a branch payload
/// without its header. Empty input yields empty output.
pub fn encode_tree_list(trees: &[RlpTree]) -> Result<Vec<u8>, RlpError> {
    let mut out = Vec::new();
    for tree in trees {
        out.extend_from_slice(&encode_tree(tree)?);
    }
    Ok(out)
}

/// Work items for the sizing pass.
enum SizeTask<'a> {
    /// Measure this node.
    Node(&'a RlpTree),
    /// All `children` sizes are ready; fill the branch's preorder `slot`.
    Close { children: usize, slot: usize },
}

/// Computes the total encoded size and every branch's payload length, the
/// latter in preorder so the emission pass can write headers first.
fn encoded_sizes(root: &RlpTree) -> Result<(u128, Vec<u128>), RlpError> {
    let mut branch_payload_lens: Vec<u128> = Vec::new();
    let mut sizes: Vec<u128> = Vec::new();
    let mut work = vec![SizeTask::Node(root)];
    while let Some(task) = work.pop() {
        match task {
            SizeTask::Node(RlpTree::Leaf(bytes)) => {
                let len = bytes.len() as u128;
                if len > MAX_PAYLOAD_LEN {
                    return Err(RlpError::InputTooLong { len });
                }
                let size =
                    if bytes.len() == 1 && bytes[0] < 0x80 { 1 } else { header_size(len) + len };
                sizes.push(size);
            }
            SizeTask::Node(RlpTree::Branch(subtrees)) => {
                let slot = branch_payload_lens.len();
                branch_payload_lens.push(0);
                work.push(SizeTask::Close { children: subtrees.len(), slot });
                work.extend(subtrees.iter().rev().map(SizeTask::Node));
            }
            SizeTask::Close { children, slot } => {
                let payload_len: u128 = sizes.drain(sizes.len() - children..).sum();
                if payload_len > MAX_PAYLOAD_LEN {
                    return Err(RlpError::InputTooLong { len: payload_len });
                }
                branch_payload_lens[slot] = payload_len;
                sizes.push(header_size(payload_len) + payload_len);
            }
        }
    }
    debug_assert_eq!(sizes.len(), 1);
    Ok((sizes[0], branch_payload_lens))
}

/// Size of the header announcing a payload of `payload_len` bytes.
fn header_size(payload_len: u128) -> u128 {
    if payload_len <= SHORT_FORM_MAX {
        1
    } else {
        1 + nat_to_be_bytes_min(payload_len).len() as u128
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_form_headers() {
        assert_eq!(encode_length_prefix(0, HeaderKind::Leaf).unwrap(), [0x80]);
        assert_eq!(encode_length_prefix(3, HeaderKind::Leaf).unwrap(), [0x83]);
        assert_eq!(encode_length_prefix(9, HeaderKind::Branch).unwrap(), [0xc9]);
        assert_eq!(encode_length_prefix(55, HeaderKind::Leaf).unwrap(), [0xb7]);
        assert_eq!(encode_length_prefix(55, HeaderKind::Branch).unwrap(), [0xf7]);
    }

    #[test]
    fn long_form_headers() {
        assert_eq!(encode_length_prefix(56, HeaderKind::Leaf).unwrap(), [0xb8, 56]);
        assert_eq!(encode_length_prefix(56, HeaderKind::Branch).unwrap(), [0xf8, 56]);
        assert_eq!(encode_length_prefix(256, HeaderKind::Leaf).unwrap(), [0xb9, 1, 0]);
        assert_eq!(
            encode_length_prefix(MAX_PAYLOAD_LEN, HeaderKind::Leaf).unwrap(),
            [0xbf, 255, 255, 255, 255, 255, 255, 255, 255]
        );
        assert_eq!(
            encode_length_prefix(MAX_PAYLOAD_LEN, HeaderKind::Branch).unwrap(),
            [0xff, 255, 255, 255, 255, 255, 255, 255, 255]
        );
    }

    #[test]
    fn payloads_of_2_to_the_64_or_more_are_rejected() {
        let too_long = MAX_PAYLOAD_LEN + 1;
        assert_eq!(
            encode_length_prefix(too_long, HeaderKind::Leaf),
            Err(RlpError::InputTooLong { len: too_long })
        );
        assert_eq!(
            encode_length_prefix(u128::MAX, HeaderKind::Branch),
            Err(RlpError::InputTooLong { len: u128::MAX })
        );
    }

    #[test]
    fn single_bytes_below_0x80_encode_as_themselves() {
        assert_eq!(encode_bytes(&[0]).unwrap(), [0x00]);
        assert_eq!(encode_bytes(&[0x7f]).unwrap(), [0x7f]);
        // 0x80 is the first byte that needs a header.
        assert_eq!(encode_bytes(&[0x80]).unwrap(), [0x81, 0x80]);
        assert_eq!(encode_bytes(&[0xff]).unwrap(), [0x81, 0xff]);
    }

    #[test]
    fn leaf_encodings_frame_the_payload() {
        assert_eq!(encode_bytes(&[]).unwrap(), [0x80]);
        assert_eq!(encode_bytes(&[1, 2, 3]).unwrap(), [0x83, 1, 2, 3]);
        assert_eq!(encode_bytes(b"dog").unwrap(), [0x83, b'd', b'o', b'g']);

        let fifty_five = [7u8; 55];
        let mut expected = vec![0xb7];
        expected.extend_from_slice(&fifty_five);
        assert_eq!(encode_bytes(&fifty_five).unwrap(), expected);

        let fifty_six = [7u8; 56];
        let mut expected = vec![0xb8, 56];
        expected.extend_from_slice(&fifty_six);
        assert_eq!(encode_bytes(&fifty_six).unwrap(), expected);
    }

    #[test]
    fn trees_encode_depth_first() {
        assert_eq!(encode_tree(&RlpTree::leaf([])).unwrap(), [0x80]);
        assert_eq!(encode_tree(&RlpTree::branch([])).unwrap(), [0xc0]);

        let tree = RlpTree::branch([
            RlpTree::branch([RlpTree::leaf([1, 2, 3]), RlpTree::branch([])]),
            RlpTree::leaf([0xff]),
            RlpTree::leaf([]),
        ]);
        assert_eq!(
            encode_tree(&tree).unwrap(),
            [0xc9, 0xc5, 0x83, 1, 2, 3, 0xc0, 0x81, 0xff, 0x80]
        );
    }

    #[test]
    fn branch_payloads_above_55_bytes_use_the_long_form() {
        // 28 two-byte children make a 56-byte payload.
        let tree = RlpTree::branch(vec![RlpTree::leaf([0x80]); 28]);
        let encoding = encode_tree(&tree).unwrap();
        assert_eq!(encoding[..2], [0xf8, 56]);
        assert_eq!(encoding.len(), 58);
    }

    #[test]
    fn tree_lists_concatenate() {
        assert_eq!(encode_tree_list(&[]).unwrap(), [] as [u8; 0]);
        let trees = [RlpTree::leaf([1, 2, 3]), RlpTree::branch([])];
        assert_eq!(encode_tree_list(&trees).unwrap(), [0x83, 1, 2, 3, 0xc0]);
        assert_eq!(encode_tree_list(&[RlpTree::leaf([5])]).unwrap(), [0x05]);
    }

    #[test]
    fn deep_nesting_encodes_without_recursion() {
        let mut tree = RlpTree::branch([]);
        for _ in 0..150_000 {
            tree = RlpTree::branch(alloc::vec![tree]);
        }
        let encoding = encode_tree(&tree).unwrap();
        // Innermost empty branch, then one header per wrapping level.
        assert_eq!(*encoding.last().unwrap(), 0xc0);
        assert!(encoding.len() > 150_000);
    }
}
