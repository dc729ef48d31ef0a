//! Minimal big-endian byte representations of non-negative integers.
//!
//! RLP frames every number the same way: the shortest base-256 big-endian
//! digit string, which is empty exactly for zero and never has a leading
//! zero byte. Header length bytes and scalar payloads both use it.

use alloc::vec::Vec;

/// The shortest big-endian representation of `n`: empty for zero, otherwise
/// no leading zero byte.
pub fn nat_to_be_bytes_min(n: u128) -> Vec<u8> {
    let bytes = n.to_be_bytes();
    trim_leading_zeros(&bytes).to_vec()
}

/// The number with big-endian digits `bytes`. Leading zeros are allowed and
/// ignored, so this is total on all inputs that fit: at most 16 digits may
/// remain after trimming.
///
/// # Panics
///
/// Panics if the value does not fit in `u128`.
pub fn be_bytes_to_nat(bytes: &[u8]) -> u128 {
    let digits = trim_leading_zeros(bytes);
    assert!(digits.len() <= 16, "value does not fit in u128");
    digits.iter().fold(0u128, |acc, &b| (acc << 8) | u128::from(b))
}

/// `bytes` without its leading zero bytes; empty if all bytes are zero.
///
/// A byte array is a fixed point of this function exactly when it is empty
/// or starts with a nonzero byte — the decoder's canonicality test for
/// header length bytes.
pub fn trim_leading_zeros(bytes: &[u8]) -> &[u8] {
    let significant = bytes.iter().position(|&b| b != 0).unwrap_or(bytes.len());
    &bytes[significant..]
}
