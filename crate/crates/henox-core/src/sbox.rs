//! The three byte-substitution tables and the dynamic substitution step.
//!
//! Box 0 is the AES S-box built from first principles (multiplicative
//! inverse in GF(2^8), then the affine transform). Box 2 re-codes the AES
//! outputs as Gray codes. Box 1 defaults to a logistic-map ranking table and
//! can be replaced by a caller-supplied bijection. A chaotic selector picks
//! one of the three boxes per pixel.

use crate::Error;

/// A bijective byte substitution table with its precomputed inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SBox {
    table: [u8; 256],
    inverse: [u8; 256],
}

impl SBox {
    /// Validates the table as a permutation of `0..=255` and derives its
    /// inverse.
    pub fn from_table(table: [u8; 256]) -> Result<Self, Error> {
        let mut inverse = [0u8; 256];
        let mut seen = [false; 256];
        for (input, &output) in table.iter().enumerate() {
            if seen[output as usize] {
                return Err(Error::NotAPermutation);
            }
            seen[output as usize] = true;
            inverse[output as usize] = input as u8;
        }
        Ok(Self { table, inverse })
    }

    pub fn table(&self) -> &[u8; 256] {
        &self.table
    }

    pub fn inverse(&self) -> &[u8; 256] {
        &self.inverse
    }
}

/// Multiplication in GF(2^8) with the AES reduction polynomial x^8 + x^4 +
/// x^3 + x + 1.
fn gf_mul(mut a: u8, mut b: u8) -> u8 {
    let mut product = 0u8;
    while b != 0 {
        if b & 1 != 0 {
            product ^= a;
        }
        let carry = a & 0x80 != 0;
        a <<= 1;
        if carry {
            a ^= 0x1B;
        }
        b >>= 1;
    }
    product
}

/// Multiplicative inverse in GF(2^8), with 0 mapped to 0.
fn gf_inv(a: u8) -> u8 {
    if a == 0 {
        return 0;
    }
    for candidate in 1..=255u8 {
        if gf_mul(a, candidate) == 1 {
            return candidate;
        }
    }
    unreachable!("every nonzero element of a field has an inverse")
}

/// The AES forward S-box from its algebraic definition.
pub fn build_aes_sbox() -> SBox {
    let mut table = [0u8; 256];
    for (input, slot) in table.iter_mut().enumerate() {
        let v = gf_inv(input as u8);
        *slot = v
            ^ v.rotate_left(1)
            ^ v.rotate_left(2)
            ^ v.rotate_left(3)
            ^ v.rotate_left(4)
            ^ 0x63;
    }
    SBox::from_table(table).expect("the AES construction is bijective")
}

/// The AES S-box with every output re-coded as its Gray code `v ^ (v >> 1)`.
pub fn build_gray_sbox() -> SBox {
    let aes = build_aes_sbox();
    let mut table = [0u8; 256];
    for (slot, &v) in table.iter_mut().zip(aes.table()) {
        *slot = v ^ (v >> 1);
    }
    SBox::from_table(table).expect("Gray coding is bijective")
}

/// Deterministic default for box 1: 256 logistic-map iterates (r = 3.99,
/// z0 = 0.5, 100 discarded) ranked into a permutation, ties broken by index.
pub fn build_default_sbox2() -> SBox {
    const R: f64 = 3.99;
    let mut z = 0.5f64;
    for _ in 0..100 {
        z = (R * z) * (1.0 - z);
    }
    let mut values = [0.0f64; 256];
    for value in values.iter_mut() {
        z = (R * z) * (1.0 - z);
        *value = z;
    }
    let mut order: [usize; 256] = core::array::from_fn(|i| i);
    order.sort_unstable_by(|&p, &q| values[p].total_cmp(&values[q]).then(p.cmp(&q)));
    let mut table = [0u8; 256];
    for (rank, &index) in order.iter().enumerate() {
        table[index] = rank as u8;
    }
    SBox::from_table(table).expect("ranking 256 slots yields a permutation")
}

/// The three substitution boxes in selector order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SBoxSet {
    boxes: [SBox; 3],
}

impl SBoxSet {
    /// AES, logistic ranking, Gray-coded AES, for selectors 0, 1 and 2.
    pub fn standard() -> Self {
        Self {
            boxes: [build_aes_sbox(), build_default_sbox2(), build_gray_sbox()],
        }
    }

    /// The standard set with box 1 replaced by a caller-supplied bijection.
    pub fn with_sbox2(sbox2: SBox) -> Self {
        Self {
            boxes: [build_aes_sbox(), sbox2, build_gray_sbox()],
        }
    }

    /// Box for a selector in 0..=2; panics otherwise.
    pub fn get(&self, selector: u8) -> &SBox {
        &self.boxes[selector as usize]
    }
}

impl Default for SBoxSet {
    fn default() -> Self {
        Self::standard()
    }
}

/// Substitutes one byte through the selected box. The byte's high nibble is
/// the table row and the low nibble the column, so this is a plain lookup at
/// index `byte`.
pub fn substitute(byte: u8, selector: u8, set: &SBoxSet) -> u8 {
    let row = (byte >> 4) as usize;
    let col = (byte & 0x0F) as usize;
    set.get(selector).table[row * 16 + col]
}

/// Inverse of [`substitute`] for the same selector.
pub fn inverse_substitute(byte: u8, selector: u8, set: &SBoxSet) -> u8 {
    set.get(selector).inverse[byte as usize]
}
