//! Binary PGM (P5) reading and writing, bit-exact, maxval 255 only.

use std::fs;
use std::io;
use std::path::Path;

use henox_core::GrayImage;

/// Refuse to parse dimensions whose product cannot be a real image.
const MAX_DIMENSION: u64 = 1 << 20;

#[derive(Debug, thiserror::Error)]
pub enum PgmError {
    #[error("not a binary PGM: missing P5 magic")]
    BadMagic,
    #[error("malformed PGM header")]
    BadHeader,
    #[error("unsupported maxval {0}: only 255 is accepted")]
    UnsupportedMaxval(u64),
    #[error("image dimensions must be nonzero")]
    ZeroDimension,
    #[error("truncated pixel payload: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Parses a P5 image from raw bytes.
pub fn decode(data: &[u8]) -> Result<GrayImage, PgmError> {
    if data.len() < 2 || &data[..2] != b"P5" {
        return Err(PgmError::BadMagic);
    }
    // The magic is its own token: something must separate it from the width.
    match data.get(2) {
        Some(b) if b.is_ascii_whitespace() || *b == b'#' => {}
        _ => return Err(PgmError::BadMagic),
    }
    let mut pos = 2;
    let width = read_header_value(data, &mut pos)?;
    let height = read_header_value(data, &mut pos)?;
    let maxval = read_header_value(data, &mut pos)?;
    if maxval != 255 {
        return Err(PgmError::UnsupportedMaxval(maxval));
    }
    // Exactly one whitespace byte separates the header from the payload.
    match data.get(pos) {
        Some(b) if b.is_ascii_whitespace() => pos += 1,
        _ => return Err(PgmError::BadHeader),
    }
    if width == 0 || height == 0 {
        return Err(PgmError::ZeroDimension);
    }

    let expected = (width as usize) * (height as usize);
    let payload = &data[pos..];
    if payload.len() < expected {
        return Err(PgmError::Truncated {
            expected,
            found: payload.len(),
        });
    }
    Ok(GrayImage::new(height as usize, width as usize, payload[..expected].to_vec())
        .expect("header dimensions match the payload slice"))
}

/// Reads the next whitespace-delimited integer, skipping `#` comments.
fn read_header_value(data: &[u8], pos: &mut usize) -> Result<u64, PgmError> {
    loop {
        match data.get(*pos) {
            Some(b) if b.is_ascii_whitespace() => *pos += 1,
            Some(b'#') => {
                while let Some(&b) = data.get(*pos) {
                    *pos += 1;
                    if b == b'\n' {
                        break;
                    }
                }
            }
            _ => break,
        }
    }
    let start = *pos;
    let mut value: u64 = 0;
    while let Some(b) = data.get(*pos) {
        if !b.is_ascii_digit() {
            break;
        }
        value = value * 10 + u64::from(b - b'0');
        if value > MAX_DIMENSION {
            return Err(PgmError::BadHeader);
        }
        *pos += 1;
    }
    if *pos == start {
        return Err(PgmError::BadHeader);
    }
    Ok(value)
}

/// Renders an image as P5 bytes.
pub fn encode(img: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.cols(), img.rows()).into_bytes();
    out.extend_from_slice(img.as_bytes());
    out
}

pub fn load(path: &Path) -> Result<GrayImage, PgmError> {
    decode(&fs::read(path)?)
}

pub fn save(path: &Path, img: &GrayImage) -> Result<(), PgmError> {
    fs::write(path, encode(img))?;
    Ok(())
}
