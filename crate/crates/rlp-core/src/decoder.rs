//! Strict bytes-to-tree parsing and decoding.
//!
//! The parser accepts exactly the canonical encodings the encoder produces
//! and rejects everything else, including the well-formed-looking byte
//! strings that honest encoding never emits:
//!
//! - a header-framed single byte below 0x80 (the byte alone is canonical);
//! - long-form length digits with a leading zero;
//! - the long form announcing a payload of 55 bytes or fewer.
//!
//! [`parse_tree`] is streaming: it reads one complete tree off the front of
//! the input and hands back the rest, so valid encodings can be recognized
//! without knowing their length in advance. [`decode_tree`] additionally
//! demands the tree span the whole input. Both use an explicit stack of open
//! branches instead of call-stack recursion, and both bound every announced
//! payload against the bytes actually present before allocating anything, so
//! a tiny input claiming a 2^64-byte payload fails immediately.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::error::RlpError;
use crate::numeric::be_bytes_to_nat;
use crate::tree::RlpTree;

/// A successful [`parse_tree`]: one tree read off the front of the input.
#[derive(Debug)]
pub struct Parsed<'a> {
    /// The decoded tree.
    pub tree: RlpTree,
    /// The untouched remainder of the input.
    pub rest: &'a [u8],
    /// How many bytes the tree's encoding occupied: always at least 1, and
    /// always `input.len() - rest.len()`.
    pub consumed: usize,
}

/// Parses one complete tree from the front of `input`.
///
/// Fails if the input is empty, truncated, or not canonical. Errors deep in
/// nested branches come wrapped in one
/// [`MalformedSubencoding`](RlpError::MalformedSubencoding) layer per
/// enclosing branch; all offsets refer to `input`.
pub fn parse_tree(input: &[u8]) -> Result<Parsed<'_>, RlpError> {
    let (tree, end) = parse_tree_at(input, 0)?;
    Ok(Parsed { tree, rest: &input[end..], consumed: end })
}

/// Parses a byte string that must be exactly the concatenated encodings of
/// zero or more trees — a branch payload without its header.
pub fn parse_tree_list(input: &[u8]) -> Result<Vec<RlpTree>, RlpError> {
    let mut trees = Vec::new();
    let mut pos = 0;
    while pos < input.len() {
        let (tree, end) = parse_tree_at(input, pos)?;
        trees.push(tree);
        pos = end;
    }
    Ok(trees)
}

/// Decodes a byte string that must be exactly one complete encoding.
pub fn decode_tree(encoding: &[u8]) -> Result<RlpTree, RlpError> {
    let parsed = parse_tree(encoding)?;
    if !parsed.rest.is_empty() {
        return Err(RlpError::TrailingBytes { offset: parsed.consumed });
    }
    Ok(parsed.tree)
}

/// True exactly when `bytes` is the encoding of some tree.
pub fn is_valid_encoding(bytes: &[u8]) -> bool {
    decode_tree(bytes).is_ok()
}

/// A branch whose payload window is still being filled.
struct OpenBranch {
    /// Where this branch's header starts, for error wrapping.
    header_offset: usize,
    /// One past the last byte of this branch's payload.
    window_end: usize,
    /// Children parsed so far.
    subtrees: Vec<RlpTree>,
}

/// Parses one tree starting at `start`, returning it with its end offset.
///
/// The work-list core: branch headers push a payload window onto `open`,
/// and a window consumed exactly to its end pops into the parent. Leaves
/// and branches alike must fit inside the innermost open window.
fn parse_tree_at(input: &[u8], start: usize) -> Result<(RlpTree, usize), RlpError> {
    let mut open: Vec<OpenBranch> = Vec::new();
    let mut pos = start;
    loop {
        // Close every branch whose window is exhausted; finished subtrees
        // attach to their parent, and a finished root is the answer.
        while open.last().is_some_and(|branch| branch.window_end == pos) {
            let branch = open.pop().unwrap();
            let tree = RlpTree::Branch(branch.subtrees);
            match open.last_mut() {
                Some(parent) => parent.subtrees.push(tree),
                None => return Ok((tree, pos)),
            }
        }
        let limit = open.last().map_or(input.len(), |branch| branch.window_end);
        match parse_header(input, pos, limit) {
            Ok(Header::Leaf { payload_start, payload_len }) => {
                let payload = &input[payload_start..payload_start + payload_len];
                let tree = RlpTree::Leaf(payload.to_vec());
                pos = payload_start + payload_len;
                match open.last_mut() {
                    Some(parent) => parent.subtrees.push(tree),
                    None => return Ok((tree, pos)),
                }
            }
            Ok(Header::Branch { payload_start, payload_len }) => {
                open.push(OpenBranch {
                    header_offset: pos,
                    window_end: payload_start + payload_len,
                    subtrees: Vec::new(),
                });
                pos = payload_start;
            }
            Err(mut err) => {
                // Wrap once per enclosing branch, innermost cause first.
                while let Some(branch) = open.pop() {
                    err = RlpError::MalformedSubencoding {
                        offset: branch.header_offset,
                        inner: Box::new(err),
                    };
                }
                return Err(err);
            }
        }
    }
}

/// A validated header: what the payload is and where it sits.
enum Header {
    Leaf { payload_start: usize, payload_len: usize },
    Branch { payload_start: usize, payload_len: usize },
}

/// Reads and validates one header at `offset`. The payload must end by
/// `limit`, the end of the innermost enclosing branch window (or of the
/// input itself).
fn parse_header(input: &[u8], offset: usize, limit: usize) -> Result<Header, RlpError> {
    debug_assert!(offset <= limit && limit <= input.len());
    if offset == limit {
        return Err(RlpError::EmptyInput { offset });
    }
    match input[offset] {
        // A byte below 0x80 is itself a one-byte leaf.
        0x00..=0x7f => Ok(Header::Leaf { payload_start: offset, payload_len: 1 }),
        // Short leaf: payload length in the header byte.
        marker @ 0x80..=0xb7 => {
            let payload_len = usize::from(marker - 0x80);
            let payload_start = offset + 1;
            if payload_len > limit - payload_start {
                return Err(RlpError::TruncatedPayload { offset: limit });
            }
            // Reject leaves that should have been single bytes.
            if payload_len == 1 && input[payload_start] < 0x80 {
                return Err(RlpError::NonMinimalSingleByte { offset });
            }
            Ok(Header::Leaf { payload_start, payload_len })
        }
        // Long leaf: explicit length digits follow the marker.
        marker @ 0xb8..=0xbf => {
            let (payload_start, payload_len) =
                parse_long_length(input, offset, limit, marker - 0xb7)?;
            Ok(Header::Leaf { payload_start, payload_len })
        }
        // Short branch.
        marker @ 0xc0..=0xf7 => {
            let payload_len = usize::from(marker - 0xc0);
            let payload_start = offset + 1;
            if payload_len > limit - payload_start {
                return Err(RlpError::TruncatedPayload { offset: limit });
            }
            Ok(Header::Branch { payload_start, payload_len })
        }
        // Long branch.
        marker @ 0xf8..=0xff => {
            let (payload_start, payload_len) =
                parse_long_length(input, offset, limit, marker - 0xf7)?;
            Ok(Header::Branch { payload_start, payload_len })
        }
    }
}

/// Validates the one to eight explicit length digits of a long-form header
/// at `offset` and bounds the announced payload against `limit`.
fn parse_long_length(
    input: &[u8],
    offset: usize,
    limit: usize,
    digit_count: u8,
) -> Result<(usize, usize), RlpError> {
    let digits_start = offset + 1;
    let digit_count = usize::from(digit_count);
    if digit_count > limit - digits_start {
        return Err(RlpError::TruncatedLength { offset: limit });
    }
    let digits = &input[digits_start..digits_start + digit_count];
    // Canonical length digits are minimal: no leading zero.
    if digits[0] == 0 {
        return Err(RlpError::LeadingZerosInLength { offset });
    }
    let payload_len = be_bytes_to_nat(digits);
    // Lengths the short form covers must use the short form.
    if payload_len <= crate::encoder::SHORT_FORM_MAX {
        return Err(RlpError::LengthBelowLongThreshold { offset });
    }
    let payload_start = digits_start + digit_count;
    // Bound the announced length by the bytes actually present before
    // converting to usize or allocating: an 8-digit claim of 2^64 - 1
    // bytes must fail here, cheaply.
    if payload_len > (limit - payload_start) as u128 {
        return Err(RlpError::TruncatedPayload { offset: limit });
    }
    Ok((payload_start, payload_len as usize))
}
