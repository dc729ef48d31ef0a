//! Hexadecimal text for byte strings: the CLI's wire format.

use std::fmt;

/// A hex string that did not parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HexError {
    /// Hex digits come in pairs.
    OddLength,
    /// Something other than 0-9, a-f, A-F after the prefix.
    InvalidDigit { digit: char, position: usize },
}

impl fmt::Display for HexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HexError::OddLength => write!(f, "hex input has an odd number of digits"),
            HexError::InvalidDigit { digit, position } => {
                write!(f, "invalid hex digit {digit:?} at position {position}")
            }
        }
    }
}

impl std::error::Error for HexError {}

/// Parses hex into bytes. The `0x`/`0X` prefix is optional, digits may be
/// either case, and the empty string (or bare prefix) is the empty byte
/// string. Digit positions in errors count from after the prefix.
pub fn parse_hex(text: &str) -> Result<Vec<u8>, HexError> {
    let digits = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")).unwrap_or(text);
    hex::decode(digits).map_err(|err| match err {
        hex::FromHexError::InvalidHexCharacter { c, index } => {
            HexError::InvalidDigit { digit: c, position: index }
        }
        hex::FromHexError::OddLength | hex::FromHexError::InvalidStringLength => {
            HexError::OddLength
        }
    })
}

/// Formats bytes as lowercase hex with the `0x` prefix; empty bytes become
/// the bare `0x`.
pub fn format_hex(bytes: &[u8]) -> String {
    format!("0x{}", hex::encode(bytes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_and_case_are_flexible() {
        assert_eq!(parse_hex("0xc0").unwrap(), [0xc0]);
        assert_eq!(parse_hex("0XC0").unwrap(), [0xc0]);
        assert_eq!(parse_hex("c0").unwrap(), [0xc0]);
        assert_eq!(parse_hex("0xDeAdBeEf").unwrap(), [0xde, 0xad, 0xbe, 0xef]);
    }

    #[test]
    fn empty_means_no_bytes() {
        assert_eq!(parse_hex("").unwrap(), [] as [u8; 0]);
        assert_eq!(parse_hex("0x").unwrap(), [] as [u8; 0]);
    }

    #[test]
    fn bad_digits_and_odd_lengths_are_rejected() {
        assert_eq!(parse_hex("0x0"), Err(HexError::OddLength));
        assert_eq!(parse_hex("0xzz"), Err(HexError::InvalidDigit { digit: 'z', position: 0 }));
        assert_eq!(parse_hex("01qq"), Err(HexError::InvalidDigit { digit: 'q', position: 2 }));
    }

    #[test]
    fn formatting_is_lowercase_and_prefixed() {
        assert_eq!(format_hex(&[]), "0x");
        assert_eq!(
            format_hex(&[0xc9, 0xc5, 0x83, 1, 2, 3, 0xc0, 0x81, 0xff, 0x80]),
            "0xc9c583010203c081ff80"
        );
    }
}
