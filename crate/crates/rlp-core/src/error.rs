//! Everything that can go wrong while encoding or decoding.

use alloc::boxed::Box;
use core::fmt;

/// An encode, parse, or decode failure.
///
/// Offsets are 0-based byte positions in the input given to the outermost
/// call, even for errors raised deep inside nested branches. For the two
/// truncation variants the offset is where the first missing byte would
/// have been; everywhere else it points at the first byte of the offending
/// header or payload.
///
/// Decode errors inside a branch payload surface as
/// [`MalformedSubencoding`](RlpError::MalformedSubencoding), wrapped once
/// per enclosing branch, innermost cause first. The chain can be as deep as
/// the input's nesting, so `Drop` and `Display` walk it iteratively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RlpError {
    /// Encode: a payload of `len` bytes cannot be framed, because the long
    /// header form carries at most eight length bytes (lengths below 2^64).
    InputTooLong { len: u128 },
    /// A tree was expected but no bytes remain.
    EmptyInput { offset: usize },
    /// A long-form header announced more length bytes than are available.
    TruncatedLength { offset: usize },
    /// A header announced more payload bytes than are available.
    TruncatedPayload { offset: usize },
    /// A one-byte leaf below 0x80 was header-framed; its canonical encoding
    /// is the byte itself.
    NonMinimalSingleByte { offset: usize },
    /// The explicit length bytes of a long-form header start with zero.
    LeadingZerosInLength { offset: usize },
    /// The long header form was used for a payload of at most 55 bytes,
    /// which only the short form may carry.
    LengthBelowLongThreshold { offset: usize },
    /// Whole-input decode: a complete tree ended before the input did.
    TrailingBytes { offset: usize },
    /// A subtree inside the branch headed at `offset` failed to parse.
    MalformedSubencoding { offset: usize, inner: Box<RlpError> },
    /// Scalar decode: the input encodes a branch, not a leaf.
    ExpectedLeaf { offset: usize },
    /// Scalar decode: the leaf payload has a leading zero byte, so it is
    /// not the minimal representation of any number.
    NonCanonicalScalar { offset: usize },
    /// Scalar decode: the value does not fit the 128-bit scalar type.
    ScalarOverflow { offset: usize },
}

impl RlpError {
    /// The byte offset the error points at; `None` only for
    /// [`InputTooLong`](RlpError::InputTooLong), which has no input bytes.
    pub fn offset(&self) -> Option<usize> {
        match self {
            RlpError::InputTooLong { .. } => None,
            RlpError::EmptyInput { offset }
            | RlpError::TruncatedLength { offset }
            | RlpError::TruncatedPayload { offset }
            | RlpError::NonMinimalSingleByte { offset }
            | RlpError::LeadingZerosInLength { offset }
            | RlpError::LengthBelowLongThreshold { offset }
            | RlpError::TrailingBytes { offset }
            | RlpError::MalformedSubencoding { offset, .. }
            | RlpError::ExpectedLeaf { offset }
            | RlpError::NonCanonicalScalar { offset }
            | RlpError::ScalarOverflow { offset } => Some(*offset),
        }
    }

    /// The variant name, e.g. `"NonMinimalSingleByte"`.
    pub fn variant_name(&self) -> &'static str {
        match self {
            RlpError::InputTooLong { .. } => "InputTooLong",
            RlpError::EmptyInput { .. } => "EmptyInput",
            RlpError::TruncatedLength { .. } => "TruncatedLength",
            RlpError::TruncatedPayload { .. } => "TruncatedPayload",
            RlpError::NonMinimalSingleByte { .. } => "NonMinimalSingleByte",
            RlpError::LeadingZerosInLength { .. } => "LeadingZerosInLength",
            RlpError::LengthBelowLongThreshold { .. } => "LengthBelowLongThreshold",
            RlpError::TrailingBytes { .. } => "TrailingBytes",
            RlpError::MalformedSubencoding { .. } => "MalformedSubencoding",
            RlpError::ExpectedLeaf { .. } => "ExpectedLeaf",
            RlpError::NonCanonicalScalar { .. } => "NonCanonicalScalar",
            RlpError::ScalarOverflow { .. } => "ScalarOverflow",
        }
    }

    /// The innermost cause: follows the
    /// [`MalformedSubencoding`](RlpError::MalformedSubencoding) chain to its
    /// end. Returns `self` for every other variant.
    pub fn root_cause(&self) -> &RlpError {
        let mut err = self;
        while let RlpError::MalformedSubencoding { inner, .. } = err {
            err = inner;
        }
        err
    }
}

impl fmt::Display for RlpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut err = self;
        loop {
            match err {
                RlpError::InputTooLong { len } => {
                    return write!(
                        f,
                        "InputTooLong: payload of {len} bytes exceeds the encodable maximum"
                    );
                }
                RlpError::MalformedSubencoding { offset, inner } => {
                    write!(f, "MalformedSubencoding at offset {offset}: ")?;
                    err = inner;
                }
                other => {
                    // Every remaining variant carries exactly an offset.
                    return write!(
                        f,
                        "{} at offset {}",
                        other.variant_name(),
                        other.offset().unwrap()
                    );
                }
            }
        }
    }
}

impl core::error::Error for RlpError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            RlpError::MalformedSubencoding { inner, .. } => Some(inner),
            _ => None,
        }
    }
}

impl Drop for RlpError {
    fn drop(&mut self) {
        // Flatten the cause chain so drop glue never recurses deeply.
        let RlpError::MalformedSubencoding { inner, .. } = self else { return };
        let mut next = core::mem::replace(inner.as_mut(), RlpError::EmptyInput { offset: 0 });
        while let RlpError::MalformedSubencoding { inner, .. } = &mut next {
            next = core::mem::replace(inner.as_mut(), RlpError::EmptyInput { offset: 0 });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;

    #[test]
    fn display_names_variant_and_offset() {
        let err = RlpError::NonMinimalSingleByte { offset: 7 };
        assert_eq!(err.to_string(), "NonMinimalSingleByte at offset 7");
        let err = RlpError::InputTooLong { len: 1 << 64 };
        assert_eq!(
            err.to_string(),
            format!("InputTooLong: payload of {} bytes exceeds the encodable maximum", 1u128 << 64)
        );
    }

    #[test]
    fn display_unwraps_nested_causes() {
        let err = RlpError::MalformedSubencoding {
            offset: 0,
            inner: Box::new(RlpError::MalformedSubencoding {
                offset: 1,
                inner: Box::new(RlpError::TruncatedPayload { offset: 4 }),
            }),
        };
        assert_eq!(
            err.to_string(),
            "MalformedSubencoding at offset 0: MalformedSubencoding at offset 1: TruncatedPayload at offset 4"
        );
        assert_eq!(err.root_cause(), &RlpError::TruncatedPayload { offset: 4 });
        assert_eq!(err.offset(), Some(0));
    }

    #[test]
    fn deep_cause_chains_drop_without_recursion() {
        let mut err = RlpError::EmptyInput { offset: 200_000 };
        for offset in (0..200_000).rev() {
            err = RlpError::MalformedSubencoding { offset, inner: Box::new(err) };
        }
        assert_eq!(err.offset(), Some(0));
        drop(err);
    }
}
