//! Finite-field substrate: polynomials over GF(2), log/antilog tables for
//! GF(2^m), cyclotomic cosets and minimal polynomials, and the four-element
//! field GF(4) used for the Pauli correspondence.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{dim, Error, Result};

/// Smallest and largest supported extension degree.
pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

/// Default primitive polynomial per degree, as a coefficient mask
/// (bit i = coefficient of x^i). Index is `m`.
const DEFAULT_PRIMITIVES: [u32; 17] = [
    0, 0, 0x7,     // x^2+x+1
    0xB,     // x^3+x+1
    0x13,    // x^4+x+1
    0x25,    // x^5+x^2+1
    0x43,    // x^6+x+1
    0x89,    // x^7+x^3+1
    0x11D,   // x^8+x^4+x^3+x^2+1
    0x211,   // x^9+x^4+1
    0x409,   // x^10+x^3+1
    0x805,   // x^11+x^2+1
    0x1053,  // x^12+x^6+x^4+x+1
    0x201B,  // x^13+x^4+x^3+x+1
    0x4443,  // x^14+x^10+x^6+x+1
    0x8003,  // x^15+x+1
    0x1100B, // x^16+x^12+x^3+x+1
];

/// Polynomial over GF(2). Bit `i` of the packed words is the coefficient of
/// `x^i`; trailing zero words are trimmed so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldPolynomial {
    words: Vec<u64>,
}

impl FieldPolynomial {
    pub fn zero() -> Self {
        FieldPolynomial { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_mask(1)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0; k / 64 + 1];
        words[k / 64] = 1 << (k % 64);
        FieldPolynomial { words }
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut p = FieldPolynomial { words: vec![mask] };
        p.trim();
        p
    }

    /// Polynomial with a 1 coefficient at every listed exponent (repeats cancel).
    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        let mut p = FieldPolynomial::zero();
        for e in exps {
            p.toggle(e);
        }
        p
    }

    /// Coefficient mask as an integer, if the degree is below 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// Degree, with the zero polynomial at -1.
    pub fn degree(&self) -> isize {
        match self.words.last() {
            None => -1,
            Some(&top) => ((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize) as isize,
        }
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn toggle(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
        self.trim();
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        let len = (self.degree() + 1) as usize;
        (0..len).filter(move |&i| self.coeff(i))
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs != 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = FieldPolynomial { words };
        p.trim();
        p
    }

    fn xor_assign(&mut self, other: &Self) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        self.trim();
    }

    /// Quotient and remainder of division by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dd = divisor.degree();
        let mut rem = self.clone();
        let mut quot = FieldPolynomial::zero();
        while rem.degree() >= dd {
            let shift = (rem.degree() - dd) as usize;
            quot.toggle(shift);
            rem.xor_assign(&divisor.shifted(shift));
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    /// Evaluates at a GF(2^m) element given in polynomial (bit) form.
    pub fn eval(&self, field: &FiniteField, x: u32) -> u32 {
        // Horner from the top coefficient down.
        let mut acc = 0u32;
        for i in (0..(self.degree() + 1) as usize).rev() {
            acc = field.mul(acc, x);
            if self.coeff(i) {
                acc ^= 1;
            }
        }
        acc
    }

    /// Lowercase hexadecimal coefficient mask, e.g. `0x25` for x^5+x^2+1.
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0x0".into();
        }
        let mut s = format!("0x{:x}", self.words.last().unwrap());
        for w in self.words.iter().rev().skip(1) {
            s.push_str(&format!("{w:016x}"));
        }
        s
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let digits = s.trim().trim_start_matches("0x").trim_start_matches("0X");
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(Error::Parse(format!("invalid hex polynomial {s:?}")));
        }
        let mut p = FieldPolynomial::zero();
        for (i, c) in digits.chars().rev().enumerate() {
            let nib = c.to_digit(16).unwrap();
            for b in 0..4 {
                if nib >> b & 1 == 1 {
                    p.toggle(4 * i + b);
                }
            }
        }
        Ok(p)
    }
}

impl Mul for &FieldPolynomial {
    type Output = FieldPolynomial;

    fn mul(self, rhs: &FieldPolynomial) -> FieldPolynomial {
        let mut out = FieldPolynomial::zero();
        for e in rhs.exponents() {
            out.xor_assign(&self.shifted(e));
        }
        out
    }
}

impl Add for &FieldPolynomial {
    type Output = FieldPolynomial;

    fn add(self, rhs: &FieldPolynomial) -> FieldPolynomial {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl fmt::Display for FieldPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for FieldPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldPolynomial({})", self.to_hex())
    }
}

impl FromStr for FieldPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_hex(s)
    }
}

impl Serialize for FieldPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for FieldPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

/// Monic least common multiple of nonzero polynomials.
pub fn poly_lcm(ps: &[FieldPolynomial]) -> Result<FieldPolynomial> {
    let mut acc = FieldPolynomial::one();
    for p in ps {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = acc.gcd(p);
        let (q, _) = (&acc * p).div_rem(&g)?;
        acc = q;
    }
    Ok(acc)
}

/// GF(2^m) with elements in polynomial form (`u32` masks below `2^m`) and
/// multiplication through exponent tables.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    m: u32,
    primitive: FieldPolynomial,
    /// `exp[i] = α^i`, doubled in length so index sums need no reduction.
    exp: Vec<u32>,
    /// `log[α^i] = i`; `log[0]` is unused.
    log: Vec<u32>,
}

impl FiniteField {
    /// Field from the default primitive polynomial for `m`.
    pub fn new(m: u32) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        Self::with_polynomial(m, FieldPolynomial::from_mask(DEFAULT_PRIMITIVES[m as usize] as u64))
    }

    /// Field from a caller-supplied polynomial, rejected unless primitive.
    pub fn with_polynomial(m: u32, primitive: FieldPolynomial) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        if primitive.degree() != m as isize {
            return Err(Error::NotPrimitive(primitive.to_hex()));
        }
        let poly = primitive.to_mask().unwrap() as u32;
        let n = (1usize << m) - 1;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; n + 1];
        let mut x = 1u32;
        for (i, slot) in exp.iter_mut().take(n).enumerate() {
            // α^i returning to 1 early means α has order < n.
            if i > 0 && x == 1 {
                return Err(Error::NotPrimitive(primitive.to_hex()));
            }
            *slot = x;
            log[x as usize] = i as u32;
            x <<= 1;
            if x >> m & 1 == 1 {
                x ^= poly;
            }
        }
        if x != 1 {
            return Err(Error::NotPrimitive(primitive.to_hex()));
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        Ok(FiniteField { m, primitive, exp, log })
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn primitive_polynomial(&self) -> &FieldPolynomial {
        &self.primitive
    }

    /// Multiplicative group order `2^m - 1`.
    #[inline]
    pub fn order(&self) -> usize {
        (1usize << self.m) - 1
    }

    /// `α^i` for any integer exponent (reduced modulo the group order).
    #[inline]
    pub fn alpha_pow(&self, i: i64) -> u32 {
        let n = self.order() as i64;
        self.exp[i.rem_euclid(n) as usize]
    }

    #[inline]
    pub fn log(&self, x: u32) -> Option<u32> {
        (x != 0).then(|| self.log[x as usize])
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.exp[(self.order() - self.log[a as usize] as usize) % self.order()])
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = self.order() as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// Monic irreducible polynomial over GF(2) with `α^exponent` as a root.
    pub fn minimal_polynomial(&self, exponent: usize) -> Result<FieldPolynomial> {
        if exponent >= self.order() {
            return Err(Error::Parameter(format!("exponent {exponent} must be below {}", self.order())));
        }
        let coset = coset_of(self.m, exponent);
        // Product of (x + α^j) with coefficients in GF(2^m), lowest degree first.
        let mut coeffs = vec![1u32];
        for &j in &coset {
            let root = self.alpha_pow(j as i64);
            let mut next = vec![0u32; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] ^= c;
                next[i] ^= self.mul(c, root);
            }
            coeffs = next;
        }
        debug_assert!(coeffs.iter().all(|&c| c <= 1), "minimal polynomial left GF(2)");
        Ok(FieldPolynomial::from_exponents(coeffs.iter().enumerate().filter(|(_, &c)| c == 1).map(|(i, _)| i)))
    }
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {}", self.m, self.primitive.to_hex())
    }
}

#[derive(Serialize, Deserialize)]
struct FieldRepr {
    m: u32,
    primitive_polynomial: FieldPolynomial,
}

impl Serialize for FiniteField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FieldRepr { m: self.m, primitive_polynomial: self.primitive.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = FieldRepr::deserialize(d)?;
        FiniteField::with_polynomial(r.m, r.primitive_polynomial).map_err(serde::de::Error::custom)
    }
}

/// Cyclotomic coset of `e` modulo `2^m - 1`, listed `e, 2e, 4e, ...`.
pub fn coset_of(m: u32, e: usize) -> Vec<usize> {
    let n = (1usize << m) - 1;
    let start = e % n;
    let mut coset = vec![start];
    let mut j = (2 * start) % n;
    while j != start {
        coset.push(j);
        j = (2 * j) % n;
    }
    coset
}

/// Partition of `{0, .., 2^m - 2}` into cyclotomic cosets, ordered by
/// smallest element.
pub fn cyclotomic_cosets(m: u32) -> Result<Vec<Vec<usize>>> {
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
        return Err(Error::DegreeOutOfRange(m));
    }
    let n = (1usize << m) - 1;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if !seen[i] {
            let c = coset_of(m, i);
            for &j in &c {
                seen[j] = true;
            }
            out.push(c);
        }
    }
    Ok(out)
}

/// Element of GF(4) = {0, 1, ω, ω̄} stored as the symplectic bit pair
/// `(x, z)`: 0↔(0,0), 1↔(1,0), ω↔(0,1), ω̄↔(1,1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gf4 {
    pub x: bool,
    pub z: bool,
}

impl Gf4 {
    pub const ZERO: Gf4 = Gf4 { x: false, z: false };
    pub const ONE: Gf4 = Gf4 { x: true, z: false };
    pub const OMEGA: Gf4 = Gf4 { x: false, z: true };
    pub const OMEGA_BAR: Gf4 = Gf4 { x: true, z: true };

    /// Conjugation (Frobenius squaring): swaps ω and ω̄.
    pub fn conj(self) -> Gf4 {
        // a + bω ↦ a + bω̄ = (a + b) + bω
        Gf4 { x: self.x ^ self.z, z: self.z }
    }

    /// Trace to GF(2): `t + t̄`.
    pub fn trace(self) -> bool {
        let s = self + self.conj();
        debug_assert!(!s.z);
        s.x
    }
}

impl Add for Gf4 {
    type Output = Gf4;

    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4 { x: self.x ^ rhs.x, z: self.z ^ rhs.z }
    }
}

impl Mul for Gf4 {
    type Output = Gf4;

    /// `(a + bω)(c + dω)` with `ω² = ω + 1`.
    fn mul(self, rhs: Gf4) -> Gf4 {
        let (a, b, c, d) = (self.x, self.z, rhs.x, rhs.z);
        Gf4 { x: (a & c) ^ (b & d), z: (a & d) ^ (b & c) ^ (b & d) }
    }
}

/// Trace inner product `Σ x_i ȳ_i + x̄_i y_i` over GF(4)^n; 1 iff the
/// represented Pauli operators anticommute.
pub fn gf4_trace_inner_product(x: &[Gf4], y: &[Gf4]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(dim(format!("trace inner product of lengths {} and {}", x.len(), y.len())));
    }
    Ok(x.iter().zip(y).fold(false, |acc, (&a, &b)| acc ^ (a * b.conj()).trace()))
}
