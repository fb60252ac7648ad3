//! Primitive narrow-sense binary BCH codes.
//!
//! Coordinate `j` of a codeword is the coefficient of `x^j`. The code of
//! length `n = 2^m - 1` and designed distance `2t + 1` is generated by
//! `g(x) = lcm(M_1, ..., M_2t)` where `M_i` is the minimal polynomial of
//! `α^i`; its degree `r = R(m, t)` is the number of parity bits.
//!
//! Encoding is systematic with the identity block leftmost: message bit `i`
//! sits at coordinate `i < k` and the parity occupies `k..n`. Shortening by
//! `a` keeps the codewords that vanish on the first `a` coordinates and
//! deletes those coordinates, so `r` is unchanged.
//!
//! Decoding pads the `a` deleted zeros back, computes the syndromes
//! `S_j = r(α^j)` for `j = 1..=2t`, runs Berlekamp-Massey for the error
//! locator `Λ(x)`, and finds its roots with a Chien search over all `n`
//! coordinates. A root count different from `deg Λ`, or a located error
//! inside the padded prefix, means more than `t` errors occurred.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::fields::{coset_of, poly_lcm, FieldPolynomial, FiniteField, MAX_DEGREE, MIN_DEGREE};
use crate::linalg::{BinaryMatrix, Bits};

/// Rule used to pick the extension degree for a given `(ell, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MSelection {
    /// Smallest `m` with `ell <= 2^m - m t - 1`, the parity-count bound.
    #[default]
    Bound,
    /// Smallest `m` whose exact dimension `2^m - 1 - R(m, t)` is at least `ell`.
    Exact,
}

#[derive(Clone)]
pub struct BchCode {
    field: Arc<FiniteField>,
    t: usize,
    generator: FieldPolynomial,
    shorten_by: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BchDecoded {
    pub message: Bits,
    /// Flipped coordinates in the (shortened) received word, ascending.
    pub corrected_positions: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BchDecodeError {
    #[error("received word has {found} bits, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("error locator degree {degree} exceeds t={t}")]
    LocatorDegree { degree: usize, t: usize },
    #[error("error locator of degree {degree} has {roots} roots")]
    RootCount { degree: usize, roots: usize },
    #[error("error located at padded coordinate {position}")]
    ShortenedPrefix { position: usize },
    #[error("corrected word is not a codeword")]
    ResidualSyndrome,
}

impl BchCode {
    /// Unshortened code of length `2^m - 1` over the default field.
    pub fn new(m: u32, t: usize) -> Result<Self> {
        Self::with_field(Arc::new(FiniteField::new(m)?), t)
    }

    pub fn with_field(field: Arc<FiniteField>, t: usize) -> Result<Self> {
        let n = field.order();
        if t == 0 || 2 * t >= n {
            return Err(Error::Parameter(format!("t={t} invalid for length {n}: need 1 <= t and 2t < n")));
        }
        // one minimal polynomial per cyclotomic coset meeting 1..=2t
        let leaders: std::collections::BTreeSet<usize> =
            (1..=2 * t).map(|e| *coset_of(field.m(), e).iter().min().expect("cosets are nonempty")).collect();
        let mins = leaders.into_iter().map(|e| field.minimal_polynomial(e)).collect::<Result<Vec<_>>>()?;
        let generator = poly_lcm(&mins)?;
        Ok(BchCode { field, t, generator, shorten_by: 0 })
    }

    /// Same parent code shortened by `a` coordinates (absolute, not cumulative).
    pub fn shorten(&self, a: usize) -> Result<Self> {
        if a >= self.parent_k() {
            return Err(Error::Parameter(format!("cannot shorten by {a}: parent dimension is {}", self.parent_k())));
        }
        Ok(BchCode { shorten_by: a, ..self.clone() })
    }

    /// Smallest `m` (per `rule`) that carries `ell` message bits with
    /// designed distance `2t + 1`, shortened to dimension exactly `ell`.
    pub fn select(ell: usize, t: usize, rule: MSelection) -> Result<Self> {
        if ell == 0 || t == 0 {
            return Err(Error::Parameter("ell and t must be at least 1".into()));
        }
        for m in MIN_DEGREE..=MAX_DEGREE {
            let n = (1usize << m) - 1;
            if 2 * t >= n {
                continue;
            }
            if rule == MSelection::Bound && (m as usize) * t + ell > n {
                continue;
            }
            let code = BchCode::new(m, t)?;
            if code.parent_k() >= ell {
                return code.shorten(code.parent_k() - ell);
            }
        }
        Err(Error::Parameter(format!("no m <= {MAX_DEGREE} encodes ell={ell} with t={t}")))
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn m(&self) -> u32 {
        self.field.m()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Designed distance `2t + 1`.
    pub fn d(&self) -> usize {
        2 * self.t + 1
    }

    /// `R(m, t)`, the generator degree and number of parity bits.
    pub fn r(&self) -> usize {
        self.generator.degree() as usize
    }

    pub fn generator_poly(&self) -> &FieldPolynomial {
        &self.generator
    }

    pub fn shorten_by(&self) -> usize {
        self.shorten_by
    }

    pub fn parent_n(&self) -> usize {
        self.field.order()
    }

    pub fn parent_k(&self) -> usize {
        self.parent_n() - self.r()
    }

    /// Effective length `n - a`.
    pub fn n(&self) -> usize {
        self.parent_n() - self.shorten_by
    }

    /// Effective dimension `k - a`.
    pub fn k(&self) -> usize {
        self.parent_k() - self.shorten_by
    }

    /// Parity of the full-length message polynomial `m(x)`:
    /// `x^r m(x) mod g(x)`, placed at coordinates `k..n`.
    fn parity(&self, full_msg: &FieldPolynomial) -> FieldPolynomial {
        let shifted = full_msg * &FieldPolynomial::monomial(self.r());
        shifted.rem(&self.generator).expect("generator is nonzero")
    }

    /// Systematic `(k - a) × (n - a)` generator matrix `[I | P]`.
    pub fn generator_matrix(&self) -> BinaryMatrix {
        let rows = (0..self.k()).map(|i| self.encode(&Bits::unit(self.k(), i)).expect("length matches")).collect();
        BinaryMatrix::from_rows(self.n(), rows).expect("uniform rows")
    }

    /// `msg · G` for a message of `k - a` bits; the first `k - a` output bits
    /// equal the message.
    pub fn encode(&self, msg: &Bits) -> Result<Bits> {
        if msg.len() != self.k() {
            return Err(Error::Dimension(format!("message has {} bits, code dimension is {}", msg.len(), self.k())));
        }
        let a = self.shorten_by;
        let full = FieldPolynomial::from_exponents(msg.ones_positions().map(|i| i + a));
        let parity = self.parity(&full);
        let mut out = Bits::zeros(self.n());
        for i in msg.ones_positions() {
            out.set(i, true);
        }
        for j in parity.exponents() {
            out.set(self.parent_k() - a + j, true);
        }
        Ok(out)
    }

    /// Full-length syndromes `S_1..=S_2t` of a word given by its set coordinates.
    fn syndromes(&self, ones: &[usize]) -> Vec<u32> {
        let f = &self.field;
        (1..=2 * self.t as i64).map(|j| ones.iter().fold(0u32, |acc, &p| acc ^ f.alpha_pow(j * p as i64))).collect()
    }

    /// Error-locator polynomial `Λ(x)` by Berlekamp-Massey, lowest degree first.
    fn berlekamp_massey(&self, s: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut c = vec![1u32];
        let mut b = vec![1u32];
        let mut l = 0usize;
        let mut shift = 1usize;
        let mut last_disc = 1u32;
        for step in 0..s.len() {
            let mut disc = s[step];
            for i in 1..=l.min(c.len() - 1) {
                disc ^= f.mul(c[i], s[step - i]);
            }
            if disc == 0 {
                shift += 1;
                continue;
            }
            let coef = f.div(disc, last_disc).expect("nonzero discrepancy");
            let prev = c.clone();
            if c.len() < b.len() + shift {
                c.resize(b.len() + shift, 0);
            }
            for (i, &bi) in b.iter().enumerate() {
                c[i + shift] ^= f.mul(coef, bi);
            }
            if 2 * l <= step {
                l = step + 1 - l;
                b = prev;
                last_disc = disc;
                shift = 1;
            } else {
                shift += 1;
            }
        }
        while c.len() > 1 && *c.last().unwrap() == 0 {
            c.pop();
        }
        c
    }

    /// Bounded-distance decode of an `n - a` bit word.
    pub fn decode(&self, received: &Bits) -> Result<BchDecoded, BchDecodeError> {
        if received.len() != self.n() {
            return Err(BchDecodeError::Length { expected: self.n(), found: received.len() });
        }
        let a = self.shorten_by;
        let n = self.parent_n();
        let mut ones: Vec<usize> = received.ones_positions().map(|p| p + a).collect();
        let s = self.syndromes(&ones);
        let message_of = |word: &Bits| word.slice(0, self.k());
        if s.iter().all(|&x| x == 0) {
            return Ok(BchDecoded { message: message_of(received), corrected_positions: vec![] });
        }

        let locator = self.berlekamp_massey(&s);
        let degree = locator.len() - 1;
        if degree > self.t {
            return Err(BchDecodeError::LocatorDegree { degree, t: self.t });
        }

        // Chien search: coordinate p is in error iff Λ(α^{-p}) = 0.
        let f = &self.field;
        let mut terms = locator.clone();
        let steps: Vec<u32> = (0..=degree).map(|i| f.alpha_pow(-(i as i64))).collect();
        let mut positions = Vec::with_capacity(degree);
        for p in 0..n {
            if terms.iter().fold(0, |acc, &x| acc ^ x) == 0 {
                positions.push(p);
                if positions.len() > degree {
                    break;
                }
            }
            for (term, &step) in terms.iter_mut().zip(&steps) {
                *term = f.mul(*term, step);
            }
        }
        if positions.len() != degree {
            return Err(BchDecodeError::RootCount { degree, roots: positions.len() });
        }
        if let Some(&p) = positions.iter().find(|&&p| p < a) {
            return Err(BchDecodeError::ShortenedPrefix { position: p });
        }

        let mut corrected = received.clone();
        for &p in &positions {
            corrected.flip(p - a);
            match ones.binary_search(&p) {
                Ok(i) => {
                    ones.remove(i);
                }
                Err(i) => ones.insert(i, p),
            }
        }
        if self.syndromes(&ones).iter().any(|&x| x != 0) {
            return Err(BchDecodeError::ResidualSyndrome);
        }
        Ok(BchDecoded {
            message: message_of(&corrected),
            corrected_positions: positions.iter().map(|p| p - a).collect(),
        })
    }
}

impl PartialEq for BchCode {
    fn eq(&self, other: &Self) -> bool {
        self.field.primitive_polynomial() == other.field.primitive_polynomial()
            && self.t == other.t
            && self.shorten_by == other.shorten_by
    }
}

impl Eq for BchCode {}

impl fmt::Display for BchCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.n(), self.k(), self.d())
    }
}

impl fmt::Debug for BchCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BchCode{} m={} t={} a={} g={}", self, self.m(), self.t, self.shorten_by, self.generator.to_hex())
    }
}

#[derive(Serialize, Deserialize)]
struct BchRepr {
    m: u32,
    t: usize,
    a: usize,
    primitive_polynomial: FieldPolynomial,
}

impl Serialize for BchCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BchRepr {
            m: self.m(),
            t: self.t,
            a: self.shorten_by,
            primitive_polynomial: self.field.primitive_polynomial().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BchCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = BchRepr::deserialize(d)?;
        let field = FiniteField::with_polynomial(r.m, r.primitive_polynomial).map_err(D::Error::custom)?;
        BchCode::with_field(Arc::new(field), r.t).and_then(|c| c.shorten(r.a)).map_err(D::Error::custom)
    }
}
