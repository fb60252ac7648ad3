//! Bit-packed vectors and dense matrices over GF(2).
//!
//! Rows are stored as [`Bits`], a fixed-length word-packed bit vector whose
//! padding bits are always zero. Elimination and products are word-parallel
//! XOR/AND folds.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{dim, Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// Fixed-length bit vector, bit `i` stored in word `i / 64` at position `i % 64`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits { len, words: vec![0; words_for(len)] }
    }

    pub fn ones(len: usize) -> Self {
        let mut b = Bits { len, words: vec![u64::MAX; words_for(len)] };
        b.clear_padding();
        b
    }

    /// Unit vector with bit `i` set.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut b = Bits::zeros(len);
        b.set(i, true);
        b
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut b = Bits::zeros(bits.len());
        for (i, &v) in bits.iter().enumerate() {
            if v {
                b.set(i, true);
            }
        }
        b
    }

    /// Low `len` bits of `value`, bit `i` of the integer becoming bit `i`.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= WORD, "from_u64 supports at most 64 bits");
        let mut b = Bits::zeros(len);
        if len > 0 {
            b.words[0] = value;
            b.clear_padding();
        }
        b
    }

    /// Bits as an integer (bit `i` at position `i`); `None` past 64 bits.
    pub fn to_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn from_positions(len: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Bits::zeros(len);
        for p in positions {
            b.set(p, true);
        }
        b
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if v {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &Bits) {
        assert_eq!(self.len, other.len, "xor of unequal lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Bits) -> Bits {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn or(&self, other: &Bits) -> Bits {
        assert_eq!(self.len, other.len, "or of unequal lengths");
        Bits { len: self.len, words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect() }
    }

    /// Inner product over GF(2).
    #[inline]
    pub fn dot(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones()) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Indices of set bits, ascending.
    pub fn ones_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    /// Bits `range.start..range.end` as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> Bits {
        assert!(start <= end && end <= self.len);
        let mut out = Bits::zeros(end - start);
        for i in self.ones_positions().filter(|&i| i >= start && i < end) {
            out.set(i - start, true);
        }
        out
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Bits) -> Bits {
        let mut out = Bits::zeros(self.len + other.len);
        for i in self.ones_positions() {
            out.set(i, true);
        }
        for i in other.ones_positions() {
            out.set(self.len + i, true);
        }
        out
    }

    /// `count` zero bits followed by `self`.
    pub fn prepend_zeros(&self, count: usize) -> Bits {
        Bits::zeros(count).concat(self)
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

/// Lexicographic order reading bit 0 first, with `0 < 1`.
impl Ord for Bits {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return if (a >> bit) & 1 == 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits({self})")
    }
}

impl FromStr for Bits {
    type Err = Error;

    /// Parses a 0/1 string, first character is bit 0.
    fn from_str(s: &str) -> Result<Self> {
        let mut b = Bits::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => b.set(i, true),
                other => return Err(Error::Parse(format!("invalid bit character {other:?}"))),
            }
        }
        Ok(b)
    }
}

impl Serialize for Bits {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Bits {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Dense GF(2) matrix with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Bits>,
}

/// Output of [`BinaryMatrix::row_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduced {
    pub reduced: BinaryMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl RowReduced {
    /// Whether `v` is a GF(2) combination of the reduced rows.
    pub fn contains(&self, v: &Bits) -> bool {
        self.residue(v).is_zero()
    }

    /// `v` with every pivot column cleared by reduced rows.
    pub fn residue(&self, v: &Bits) -> Bits {
        let mut v = v.clone();
        for (r, &c) in self.pivot_cols.iter().enumerate() {
            if v.get(c) {
                v.xor_assign(self.reduced.row(r));
            }
        }
        v
    }
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix { rows, cols, data: vec![Bits::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        BinaryMatrix { rows: n, cols: n, data: (0..n).map(|i| Bits::unit(n, i)).collect() }
    }

    /// Builds a matrix from rows of equal length. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Bits>) -> Result<Self> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(dim(format!("row {i} has {} bits, expected {cols}", r.len())));
        }
        Ok(BinaryMatrix { rows: rows.len(), cols, data: rows })
    }

    /// Parses rows of 0/1 strings; rejects ragged input.
    pub fn from_row_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let parsed = rows.iter().map(|r| r.as_ref().trim().parse()).collect::<Result<Vec<Bits>>>()?;
        let cols = parsed.first().map_or(0, Bits::len);
        Self::from_rows(cols, parsed).map_err(|e| Error::Parse(format!("ragged rows: {e}")))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &Bits {
        &self.data[i]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &Bits> {
        self.data.iter()
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.data[r].set(c, v)
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones_positions() {
                t.data[c].set(r, true);
            }
        }
        t
    }

    /// Matrix product over GF(2). Each output row is the XOR of the rows of
    /// `other` selected by the set bits of the matching row of `self`.
    pub fn mul(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.rows {
            return Err(dim(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = Bits::zeros(other.cols);
                for k in row.ones_positions() {
                    acc.xor_assign(&other.data[k]);
                }
                acc
            })
            .collect();
        Ok(BinaryMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// `M v` for a column vector `v` of length `cols`.
    pub fn mul_vec(&self, v: &Bits) -> Result<Bits> {
        if v.len() != self.cols {
            return Err(dim(format!("vector length {} vs {} columns", v.len(), self.cols)));
        }
        let mut out = Bits::zeros(self.rows);
        for (i, row) in self.data.iter().enumerate() {
            if row.dot(v) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// `v M` for a row vector `v` of length `rows`.
    pub fn vec_mul(&self, v: &Bits) -> Result<Bits> {
        if v.len() != self.rows {
            return Err(dim(format!("vector length {} vs {} rows", v.len(), self.rows)));
        }
        let mut out = Bits::zeros(self.cols);
        for i in v.ones_positions() {
            out.xor_assign(&self.data[i]);
        }
        Ok(out)
    }

    /// Entry-wise XOR.
    pub fn add(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(dim("matrix sum of different shapes"));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.xor(b)).collect();
        Ok(BinaryMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.rows != other.rows {
            return Err(dim("hstack of different row counts"));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.concat(b)).collect();
        Ok(BinaryMatrix { rows: self.rows, cols: self.cols + other.cols, data })
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.cols {
            return Err(dim("vstack of different column counts"));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(BinaryMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Columns `start..end` of every row.
    pub fn column_slice(&self, start: usize, end: usize) -> BinaryMatrix {
        BinaryMatrix {
            rows: self.rows,
            cols: end - start,
            data: self.data.iter().map(|r| r.slice(start, end)).collect(),
        }
    }

    /// Rows `start..end`.
    pub fn row_slice(&self, start: usize, end: usize) -> BinaryMatrix {
        BinaryMatrix { rows: end - start, cols: self.cols, data: self.data[start..end].to_vec() }
    }

    /// Reduced row-echelon form. Pivots are chosen column by column from
    /// the left, taking the first row at or below the current pivot row with
    /// a set bit in that column.
    pub fn row_reduce(&self) -> RowReduced {
        let mut data = self.data.clone();
        let mut pivot_cols = Vec::new();
        let mut pr = 0;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(found) = (pr..self.rows).find(|&r| data[r].get(c)) else {
                continue;
            };
            data.swap(pr, found);
            let pivot = data[pr].clone();
            for (r, row) in data.iter_mut().enumerate() {
                if r != pr && row.get(c) {
                    row.xor_assign(&pivot);
                }
            }
            pivot_cols.push(c);
            pr += 1;
        }
        RowReduced {
            reduced: BinaryMatrix { rows: self.rows, cols: self.cols, data },
            rank: pivot_cols.len(),
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Whether `v` is a GF(2) combination of the rows.
    pub fn in_row_space(&self, v: &Bits) -> Result<bool> {
        if v.len() != self.cols {
            return Err(dim(format!("vector length {} vs {} columns", v.len(), self.cols)));
        }
        Ok(self.row_reduce().contains(v))
    }

    /// Plain-text form: `rows cols` then one 0/1 string per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in &self.data {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(Error::Parse(format!("header must be `rows cols`, got {header:?}")));
        };
        let data = lines.map(str::parse).collect::<Result<Vec<Bits>>>()?;
        if data.len() != rows {
            return Err(Error::Parse(format!("expected {rows} rows, found {}", data.len())));
        }
        Self::from_rows(cols, data).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.rows, self.cols)?;
        for r in &self.data {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    data: Vec<Bits>,
}

impl Serialize for BinaryMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr { rows: self.rows, cols: self.cols, data: self.data.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BinaryMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(d)?;
        if repr.data.len() != repr.rows {
            return Err(serde::de::Error::custom(format!("expected {} rows, found {}", repr.rows, repr.data.len())));
        }
        BinaryMatrix::from_rows(repr.cols, repr.data).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> BinaryMatrix {
        let data = (0..rows).map(|_| Bits::from_bools(&(0..cols).map(|_| rng.gen()).collect::<Vec<bool>>())).collect();
        BinaryMatrix::from_rows(cols, data).unwrap()
    }

    fn hamming() -> BinaryMatrix {
        BinaryMatrix::from_row_strings(&["1010101", "0110011", "0001111"]).unwrap()
    }

    /// Entry-wise triple loop.
    fn naive_mul(a: &BinaryMatrix, b: &BinaryMatrix) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(a.rows(), b.cols());
        for i in 0..a.rows() {
            for j in 0..b.cols() {
                let mut acc = false;
                for k in 0..a.cols() {
                    acc ^= a.get(i, k) & b.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    #[test]
    fn bits_padding_and_order() {
        let b = Bits::ones(70);
        assert_eq!(b.count_ones(), 70);
        assert_eq!(b.words()[1], (1 << 6) - 1);
        let a: Bits = "0100".parse().unwrap();
        let c: Bits = "1000".parse().unwrap();
        assert!(a < c);
        assert_eq!(a.to_string(), "0100");
        assert!("01a".parse::<Bits>().is_err());
    }

    #[test]
    fn identity_is_neutral() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = random_matrix(&mut rng, 3, 9);
        assert_eq!(BinaryMatrix::identity(3).mul(&m).unwrap(), m);
    }

    #[test]
    fn mul_matches_triple_loop_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = random_matrix(&mut rng, 8, 8);
            let b = random_matrix(&mut rng, 8, 8);
            assert_eq!(a.mul(&b).unwrap(), naive_mul(&a, &b));
        }
        let a = random_matrix(&mut rng, 5, 70);
        let b = random_matrix(&mut rng, 70, 130);
        assert_eq!(a.mul(&b).unwrap(), naive_mul(&a, &b));
    }

    #[test]
    fn mul_dimension_mismatch() {
        let a = BinaryMatrix::zeros(2, 3);
        assert!(matches!(a.mul(&a), Err(Error::Dimension(_))));
    }

    #[test]
    fn rank_cases() {
        assert_eq!(BinaryMatrix::zeros(4, 5).rank(), 0);
        assert_eq!(hamming().rank(), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let m = random_matrix(&mut rng, 10, 14);
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn row_reduce_pivots_are_leftmost() {
        let m = BinaryMatrix::from_row_strings(&["0110", "0011", "0101"]).unwrap();
        let rr = m.row_reduce();
        assert_eq!(rr.rank, 2);
        assert_eq!(rr.pivot_cols, vec![1, 2]);
        assert_eq!(rr.reduced.row(0).to_string(), "0101");
        assert_eq!(rr.reduced.row(1).to_string(), "0011");
        assert!(rr.reduced.row(2).is_zero());
    }

    #[test]
    fn row_space_membership() {
        let h = hamming();
        assert!(h.in_row_space(&Bits::zeros(7)).unwrap());
        assert!(h.in_row_space(&h.row(0).xor(h.row(2))).unwrap());
        assert!(!h.in_row_space(&Bits::unit(7, 0)).unwrap());
        assert!(h.in_row_space(&Bits::zeros(6)).is_err());
    }

    #[test]
    fn row_space_matches_exhaustive_span() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            // rank-deficient: 8 rows, 12 columns, last two rows are sums
            let mut m = random_matrix(&mut rng, 6, 12);
            let s1 = m.row(0).xor(m.row(1));
            let s2 = m.row(2).xor(m.row(5));
            m = m.vstack(&BinaryMatrix::from_rows(12, vec![s1, s2]).unwrap()).unwrap();
            let mut span = std::collections::HashSet::new();
            for mask in 0u32..(1 << m.rows()) {
                let mut acc = Bits::zeros(12);
                for r in 0..m.rows() {
                    if mask >> r & 1 == 1 {
                        acc.xor_assign(m.row(r));
                    }
                }
                span.insert(acc);
            }
            let rr = m.row_reduce();
            for v in 0u64..(1 << 12) {
                let v = Bits::from_u64(v, 12);
                assert_eq!(rr.contains(&v), span.contains(&v));
            }
        }
    }

    #[test]
    fn text_round_trip_and_ragged_rejection() {
        let h = hamming();
        let text = h.to_text();
        assert!(text.starts_with("3 7\n1010101\n"));
        assert_eq!(BinaryMatrix::from_text(&text).unwrap(), h);
        assert!(BinaryMatrix::from_text("2 3\n101\n10\n").is_err());
        assert!(BinaryMatrix::from_text("3 3\n101\n100\n").is_err());
        assert!(BinaryMatrix::from_row_strings(&["101", "1"]).is_err());
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(json, r#"{"rows":3,"cols":7,"data":["1010101","0110011","0001111"]}"#);
        assert_eq!(serde_json::from_str::<BinaryMatrix>(&json).unwrap(), h);
        assert!(serde_json::from_str::<BinaryMatrix>(r#"{"rows":2,"cols":3,"data":["101","11"]}"#).is_err());
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = BinaryMatrix> {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), cols), rows).prop_map(move |rows| {
            BinaryMatrix::from_rows(cols, rows.iter().map(|r| Bits::from_bools(r)).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn mul_is_associative(a in arb_matrix(4, 6), b in arb_matrix(6, 5), c in arb_matrix(5, 7)) {
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn mul_distributes_over_xor(a in arb_matrix(4, 6), b in arb_matrix(6, 5), c in arb_matrix(6, 5)) {
            let left = a.mul(&b.add(&c).unwrap()).unwrap();
            let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn row_reduce_is_idempotent(m in arb_matrix(7, 9)) {
            let once = m.row_reduce();
            let twice = once.reduced.row_reduce();
            prop_assert_eq!(&once.reduced, &twice.reduced);
            prop_assert!(once.rank <= 7);
            prop_assert_eq!(once.rank, twice.rank);
        }
    }
}
