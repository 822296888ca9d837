//! Binary matrix format.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! magic  b"GFPM"   4 bytes
//! version u16      format version, currently 1
//! p       u32
//! rows    u32
//! cols    u32
//! entries          row-major; one byte each when p < 256, else two bytes
//! ```

use super::field::Fp;
use super::matrix::Matrix;
use crate::error::{Error, Result};

pub const MAGIC: &[u8; 4] = b"GFPM";
pub const FORMAT_VERSION: u16 = 1;
const HEADER_LEN: usize = 4 + 2 + 4 + 4 + 4;

pub fn entry_width(p: u32) -> usize {
    if p < 256 {
        1
    } else {
        2
    }
}

pub fn encode(m: &Matrix, out: &mut Vec<u8>) {
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    out.extend_from_slice(&m.p().to_le_bytes());
    out.extend_from_slice(&(m.rows() as u32).to_le_bytes());
    out.extend_from_slice(&(m.cols() as u32).to_le_bytes());
    if entry_width(m.p()) == 1 {
        out.extend(m.data().iter().map(|&x| x as u8));
    } else {
        for &x in m.data() {
            out.extend_from_slice(&(x as u16).to_le_bytes());
        }
    }
}

pub fn to_bytes(m: &Matrix) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN + m.data().len() * entry_width(m.p()));
    encode(m, &mut out);
    out
}

/// Decodes one matrix from the front of `bytes`, returning it and the
/// number of bytes consumed.
pub fn decode(bytes: &[u8]) -> Result<(Matrix, usize)> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::Decode("truncated header".into()));
    }
    if &bytes[0..4] != MAGIC {
        return Err(Error::Decode("bad magic".into()));
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != FORMAT_VERSION {
        return Err(Error::Decode(format!("unsupported version {version}")));
    }
    let word = |o: usize| u32::from_le_bytes(bytes[o..o + 4].try_into().unwrap());
    let p = word(6);
    let rows = word(10) as usize;
    let cols = word(14) as usize;
    let f = Fp::new(p).map_err(|_| Error::Decode(format!("bad modulus {p}")))?;
    let width = entry_width(p);
    let len = rows
        .checked_mul(cols)
        .and_then(|n| n.checked_mul(width))
        .ok_or_else(|| Error::Decode("size overflow".into()))?;
    let body = bytes
        .get(HEADER_LEN..HEADER_LEN + len)
        .ok_or_else(|| Error::Decode("truncated body".into()))?;
    let data: Vec<u32> = if width == 1 {
        body.iter().map(|&b| b as u32).collect()
    } else {
        body.chunks_exact(2).map(|c| u16::from_le_bytes([c[0], c[1]]) as u32).collect()
    };
    let m = Matrix::from_vec(f, rows, cols, data).map_err(|e| Error::Decode(e.to_string()))?;
    Ok((m, HEADER_LEN + len))
}

pub fn from_bytes(bytes: &[u8]) -> Result<Matrix> {
    let (m, used) = decode(bytes)?;
    if used != bytes.len() {
        return Err(Error::Decode("trailing bytes".into()));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn header_layout() {
        let f = Fp::new(5).unwrap();
        let m = Matrix::from_rows(f, &[[1, 2, 3], [4, 0, 1]]);
        let b = to_bytes(&m);
        assert_eq!(&b[..4], b"GFPM");
        assert_eq!(&b[4..6], &[1, 0]);
        assert_eq!(&b[6..10], &[5, 0, 0, 0]);
        assert_eq!(&b[10..14], &[2, 0, 0, 0]);
        assert_eq!(&b[14..18], &[3, 0, 0, 0]);
        assert_eq!(&b[18..], &[1, 2, 3, 4, 0, 1]);
    }

    #[test]
    fn rejects_corruption() {
        let f = Fp::new(5).unwrap();
        let mut b = to_bytes(&Matrix::identity(f, 2));
        assert!(from_bytes(&b[..b.len() - 1]).is_err());
        b[18] = 9; // not reduced mod 5
        assert!(from_bytes(&b).is_err());
        b[0] = b'X';
        assert!(from_bytes(&b).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(p in prop::sample::select(vec![2u32, 5, 251, 257, 65521]),
                      r in 0usize..5, c in 0usize..5, seed in prop::collection::vec(any::<u32>(), 25)) {
            let f = Fp::new(p).unwrap();
            let m = Matrix::from_fn(f, r, c, |i, j| seed[i * 5 + j] % p);
            prop_assert_eq!(from_bytes(&to_bytes(&m)).unwrap(), m);
        }
    }
}
