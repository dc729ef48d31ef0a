//! Non-negative integers as RLP leaves.
//!
//! A scalar's payload is its minimal big-endian representation: zero is the
//! empty leaf, and no payload starts with a zero byte. Decoding enforces
//! minimality, so scalars inherit the codec's one-encoding-per-value
//! property.

use alloc::vec::Vec;

use crate::decoder::decode_tree;
use crate::encoder::encode_bytes;
use crate::error::RlpError;
use crate::numeric::{be_bytes_to_nat, nat_to_be_bytes_min};
use crate::tree::RlpTree;

/// Encodes a non-negative integer: minimal big-endian bytes, framed as a
/// leaf. Zero becomes the empty leaf, 0x80.
pub fn encode_scalar(n: u128) -> Result<Vec<u8>, RlpError> {
    encode_bytes(&nat_to_be_bytes_min(n))
}

/// Decodes a scalar from a complete encoding.
///
/// The input must decode to a leaf (not a branch), the payload must carry
/// no leading zero byte, and the value must fit in `u128`. Payload-level
/// errors point at the payload's position in the input.
pub fn decode_scalar(encoding: &[u8]) -> Result<u128, RlpError> {
    let tree = decode_tree(encoding)?;
    let RlpTree::Leaf(payload) = &tree else {
        return Err(RlpError::ExpectedLeaf { offset: 0 });
    };
    // The payload of a whole-input leaf encoding is its suffix.
    let payload_offset = encoding.len() - payload.len();
    if payload.first() == Some(&0) {
        return Err(RlpError::NonCanonicalScalar { offset: payload_offset });
    }
    if payload.len() > 16 {
        return Err(RlpError::ScalarOverflow { offset: payload_offset });
    }
    Ok(be_bytes_to_nat(payload))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    #[test]
    fn small_scalars_encode_like_their_byte() {
        assert_eq!(encode_scalar(0).unwrap(), [0x80]);
        assert_eq!(encode_scalar(5).unwrap(), [0x05]);
        assert_eq!(encode_scalar(0x7f).unwrap(), [0x7f]);
        assert_eq!(encode_scalar(0x80).unwrap(), [0x81, 0x80]);
        assert_eq!(encode_scalar(255).unwrap(), [0x81, 0xff]);
        assert_eq!(encode_scalar(1024).unwrap(), [0x82, 4, 0]);
    }

    #[test]
    fn decoding_inverts_encoding() {
        for n in [0u128, 1, 0x7f, 0x80, 255, 256, 1024, u64::MAX as u128, 1 << 64, u128::MAX] {
            assert_eq!(decode_scalar(&encode_scalar(n).unwrap()).unwrap(), n);
        }
    }

    #[test]
    fn leading_zero_payloads_are_rejected() {
        assert_eq!(
            decode_scalar(&[0x82, 0, 5]).unwrap_err(),
            RlpError::NonCanonicalScalar { offset: 1 }
        );
        // The single byte 0x00 is the leaf <0>, but zero's minimal payload
        // is empty — only 0x80 decodes as zero.
        assert_eq!(decode_scalar(&[0x00]).unwrap_err(), RlpError::NonCanonicalScalar { offset: 0 });
        assert_eq!(decode_scalar(&[0x80]).unwrap(), 0);
    }

    #[test]
    fn branches_are_rejected() {
        assert_eq!(decode_scalar(&[0xc0]).unwrap_err(), RlpError::ExpectedLeaf { offset: 0 });
        assert_eq!(
            decode_scalar(&[0xc2, 0x80, 0x80]).unwrap_err(),
            RlpError::ExpectedLeaf { offset: 0 }
        );
    }

    #[test]
    fn malformed_encodings_fail_before_scalar_checks() {
        assert_eq!(
            decode_scalar(&[0x81, 0x05]).unwrap_err(),
            RlpError::NonMinimalSingleByte { offset: 0 }
        );
        assert_eq!(
            decode_scalar(&[0x80, 0x80]).unwrap_err(),
            RlpError::TrailingBytes { offset: 1 }
        );
    }

    #[test]
    fn values_above_u128_overflow() {
        // A 17-byte minimal payload is a fine leaf but no u128.
        let mut encoding = vec![0x80 + 17];
        encoding.push(1);
        encoding.extend_from_slice(&[0; 16]);
        assert_eq!(decode_scalar(&encoding).unwrap_err(), RlpError::ScalarOverflow { offset: 1 });

        // 16 payload bytes is the ceiling and works.
        let max: Vec<u8> = encode_scalar(u128::MAX).unwrap();
        assert_eq!(max[0], 0x90);
        assert_eq!(decode_scalar(&max).unwrap(), u128::MAX);
    }
}
