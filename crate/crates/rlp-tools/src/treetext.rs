//! The textual tree notation the CLI speaks.
//!
//! A tree is JSON with two value shapes: a leaf is a string — `"0x..."` for
//! explicit bytes or `"#..."` for a non-negative decimal scalar — and a
//! branch is an array. The worked-example tree, for instance:
//!
//! ```text
//! [["0x010203",[]],"0xff","0x"]
//! ```
//!
//! Formatting always emits compact JSON with lowercase `0x` leaves; `#`
//! scalars are an input convenience and render back as the bytes they
//! became. Scalars have no size ceiling (they go through a big integer), so
//! suite vectors with 2^256-scale values work.

use num_bigint::BigUint;
use rlp_core::RlpTree;
use std::fmt;

use crate::hexstr::{format_hex, parse_hex, HexError};

/// Tree text that did not parse.
#[derive(Debug)]
pub enum TreeTextError {
    /// Not well-formed JSON.
    Json(serde_json::Error),
    /// A leaf string with neither the `0x` nor the `#` shape.
    BadLeaf(String),
    /// The digits after `0x` did not parse as hex.
    BadHex(HexError),
    /// The characters after `#` are not a plain decimal number.
    BadScalar(String),
    /// A JSON value that is neither a string nor an array.
    UnsupportedValue(&'static str),
}

impl fmt::Display for TreeTextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeTextError::Json(err) => write!(f, "tree text is not valid JSON: {err}"),
            TreeTextError::BadLeaf(leaf) => {
                write!(f, "leaf {leaf:?} must start with \"0x\" (hex) or \"#\" (decimal)")
            }
            TreeTextError::BadHex(err) => write!(f, "bad hex leaf: {err}"),
            TreeTextError::BadScalar(text) => {
                write!(f, "scalar {text:?} must be \"#\" followed by decimal digits")
            }
            TreeTextError::UnsupportedValue(kind) => {
                write!(f, "JSON {kind} has no tree meaning; use strings and arrays")
            }
        }
    }
}

impl std::error::Error for TreeTextError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            TreeTextError::Json(err) => Some(err),
            TreeTextError::BadHex(err) => Some(err),
            _ => None,
        }
    }
}

/// Parses the textual notation into a tree.
pub fn parse_tree_text(text: &str) -> Result<RlpTree, TreeTextError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(TreeTextError::Json)?;
    value_to_tree(&value)
}

fn value_to_tree(value: &serde_json::Value) -> Result<RlpTree, TreeTextError> {
    match value {
        serde_json::Value::String(text) => leaf_from_text(text),
        serde_json::Value::Array(items) => {
            let subtrees: Result<Vec<RlpTree>, TreeTextError> =
                items.iter().map(value_to_tree).collect();
            Ok(RlpTree::Branch(subtrees?))
        }
        serde_json::Value::Null => Err(TreeTextError::UnsupportedValue("null")),
        serde_json::Value::Bool(_) => Err(TreeTextError::UnsupportedValue("booleans")),
        serde_json::Value::Number(_) => Err(TreeTextError::UnsupportedValue("numbers")),
        serde_json::Value::Object(_) => Err(TreeTextError::UnsupportedValue("objects")),
    }
}

fn leaf_from_text(text: &str) -> Result<RlpTree, TreeTextError> {
    if text.starts_with("0x") || text.starts_with("0X") {
        return parse_hex(text).map(RlpTree::Leaf).map_err(TreeTextError::BadHex);
    }
    if let Some(digits) = text.strip_prefix('#') {
        let number = parse_decimal(digits).ok_or_else(|| TreeTextError::BadScalar(text.into()))?;
        return Ok(RlpTree::Leaf(biguint_min_be(&number)));
    }
    Err(TreeTextError::BadLeaf(text.into()))
}

/// Strictly decimal, at least one digit, no sign, no whitespace.
fn parse_decimal(digits: &str) -> Option<BigUint> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// The scalar payload convention: minimal big-endian bytes, empty for zero.
pub fn biguint_min_be(number: &BigUint) -> Vec<u8> {
    if number.bits() == 0 {
        Vec::new()
    } else {
        number.to_bytes_be()
    }
}

/// Formats a tree back into compact notation: hex leaves, arrays, no
/// whitespace. Walks with an explicit stack, so trees of any depth format
/// safely.
pub fn format_tree_text(tree: &RlpTree) -> String {
    enum Step<'a> {
        Node(&'a RlpTree),
        Text(&'static str),
    }
    let mut out = String::new();
    let mut work = vec![Step::Node(tree)];
    while let Some(step) = work.pop() {
        match step {
            Step::Text(text) => out.push_str(text),
            Step::Node(RlpTree::Leaf(bytes)) => {
                out.push('"');
                out.push_str(&format_hex(bytes));
                out.push('"');
            }
            Step::Node(RlpTree::Branch(subtrees)) => {
                out.push('[');
                work.push(Step::Text("]"));
                for (index, subtree) in subtrees.iter().enumerate().rev() {
                    work.push(Step::Node(subtree));
                    if index > 0 {
                        work.push(Step::Text(","));
                    }
                }
            }
        }
    }
    out
}
