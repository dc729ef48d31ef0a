//! Strict RLP (recursive length prefix) serialization.
//!
//! RLP encodes finitely branching trees whose leaves are byte arrays. Every
//! tree has exactly one encoding, and this crate accepts nothing else: the
//! decoder rejects every byte string that is not the canonical encoding of
//! some tree, so `encode` and `decode` are mutually inverse bijections
//! between trees and valid encodings.
//!
//! The crate is `no_std` (it allocates, but performs no IO) and splits into:
//!
//! - [`tree`]: the [`RlpTree`] value type;
//! - [`encoder`]: tree to bytes;
//! - [`decoder`]: bytes to tree, both streaming ([`parse_tree`]) and
//!   whole-input ([`decode_tree`]);
//! - [`scalar`]: non-negative integers as leaf encodings;
//! - [`numeric`]: minimal big-endian byte arithmetic shared by the above;
//! - [`oracle`]: exhaustive and randomized tree generators for testing.
//!
//! Encoding and decoding use explicit work lists instead of call-stack
//! recursion, so nesting depth is bounded by available memory only.
//!
//! ```
//! use rlp_core::{decode_tree, encode_tree, RlpTree};
//!
//! let tree = RlpTree::branch([
//!     RlpTree::branch([RlpTree::leaf([1, 2, 3]), RlpTree::branch([])]),
//!     RlpTree::leaf([0xff]),
//!     RlpTree::leaf([]),
//! ]);
//! let encoding = encode_tree(&tree).unwrap();
//! assert_eq!(encoding, [0xc9, 0xc5, 0x83, 1, 2, 3, 0xc0, 0x81, 0xff, 0x80]);
//! assert_eq!(decode_tree(&encoding).unwrap(), tree);
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod decoder;
pub mod encoder;
pub mod error;
pub mod numeric;
pub mod oracle;
pub mod scalar;
pub mod tree;

pub use decoder::{decode_tree, is_valid_encoding, parse_tree, parse_tree_list, Parsed};
pub use encoder::{encode_bytes, encode_length_prefix, encode_tree, encode_tree_list, HeaderKind};
pub use error::RlpError;
pub use scalar::{decode_scalar, encode_scalar};
pub use tree::RlpTree;
