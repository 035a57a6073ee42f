//! Optional replacement table for S-box slot 1: a text file of 256
//! whitespace-separated integers (decimal or 0x-hex) forming a permutation
//! of 0..=255.

use std::fs;
use std::io;
use std::path::Path;

use henox_core::sbox::SBox;

#[derive(Debug, thiserror::Error)]
pub enum SBoxFileError {
    #[error("bad S-box entry {0:?}: expected an integer in 0..=255")]
    BadToken(String),
    #[error("S-box table must have 256 entries, found {0}")]
    BadCount(usize),
    #[error("S-box table is not a permutation of 0..=255")]
    NotAPermutation,
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub fn parse(text: &str) -> Result<SBox, SBoxFileError> {
    let mut entries = Vec::with_capacity(256);
    for token in text.split_whitespace() {
        let value = if let Some(hex) = token
            .strip_prefix("0x")
            .or_else(|| token.strip_prefix("0X"))
        {
            u16::from_str_radix(hex, 16)
        } else {
            token.parse::<u16>()
        }
        .map_err(|_| SBoxFileError::BadToken(token.to_owned()))?;
        if value > 255 {
            return Err(SBoxFileError::BadToken(token.to_owned()));
        }
        entries.push(value as u8);
    }
    let count = entries.len();
    let table: [u8; 256] = entries
        .try_into()
        .map_err(|_| SBoxFileError::BadCount(count))?;
    SBox::from_table(table).map_err(|_| SBoxFileError::NotAPermutation)
}

pub fn load(path: &Path) -> Result<SBox, SBoxFileError> {
    parse(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fmt::Write as _;

    fn identity_text() -> String {
        let mut text = String::new();
        for v in 0..256 {
            let _ = write!(text, "{v} ");
            if v % 16 == 15 {
                text.push('\n');
            }
        }
        text
    }

    #[test]
    fn decimal_table_parses() {
        let sbox = parse(&identity_text()).unwrap();
        for v in 0..=255u8 {
            assert_eq!(sbox.table()[v as usize], v);
        }
    }

    #[test]
    fn hex_tokens_parse() {
        let text = identity_text().replace("255", "0xFF").replace("254", "0Xfe");
        let sbox = parse(&text).unwrap();
        assert_eq!(sbox.table()[255], 255);
        assert_eq!(sbox.table()[254], 254);
    }

    #[test]
    fn wrong_counts_are_rejected() {
        assert!(matches!(parse(""), Err(SBoxFileError::BadCount(0))));
        let long = identity_text() + " 0";
        assert!(matches!(parse(&long), Err(SBoxFileError::BadCount(257))));
    }

    #[test]
    fn bad_tokens_are_rejected() {
        let text = identity_text().replace("17", "banana");
        assert!(matches!(parse(&text), Err(SBoxFileError::BadToken(_))));
        let big = identity_text().replace("17", "300");
        assert!(matches!(parse(&big), Err(SBoxFileError::BadToken(_))));
        let neg = identity_text().replace("17", "-1");
        assert!(matches!(parse(&neg), Err(SBoxFileError::BadToken(_))));
    }

    #[test]
    fn duplicate_entries_are_rejected() {
        let text = identity_text().replace("255", "0");
        assert!(matches!(parse(&text), Err(SBoxFileError::NotAPermutation)));
    }
}
