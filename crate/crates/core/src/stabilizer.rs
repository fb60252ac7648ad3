//! Pauli operators in symplectic form, stabilizer codes and their syndromes,
//! and a minimum-weight lookup decoder.
//!
//! A Pauli on `n` qubits is a pair of bit vectors `(x, z)`: X ⇔ (1,0),
//! Z ⇔ (0,1), Y ⇔ (1,1). Global phases are dropped. Two Paulis anticommute
//! iff `x·z' + z·x' = 1` over GF(2), which is the GF(4) trace inner product
//! under the bit-pair encoding of [`Gf4`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{dim, Error, Result};
use crate::fields::Gf4;
use crate::linalg::{BinaryMatrix, Bits, RowReduced};

/// Syndrome bits, one per generator, in generator order.
pub type Syndrome = Bits;

/// Default enumeration budget for lookup-table construction.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 10_000_000;

/// n-qubit Pauli operator without phase. Ordered lexicographically by
/// `(x, z)` reading qubit 0 first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    x: Bits,
    z: Bits,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const NONTRIVIAL: [PauliLetter; 3] = [PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        }
    }
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator { x: Bits::zeros(n), z: Bits::zeros(n) }
    }

    pub fn from_bits(x: Bits, z: Bits) -> Result<Self> {
        if x.len() != z.len() {
            return Err(dim(format!("x part has {} bits, z part {}", x.len(), z.len())));
        }
        Ok(PauliOperator { x, z })
    }

    /// Splits a `[x | z]` row of length `2n`.
    pub fn from_symplectic(row: &Bits) -> Result<Self> {
        if !row.len().is_multiple_of(2) {
            return Err(dim("symplectic row has odd length"));
        }
        let n = row.len() / 2;
        Ok(PauliOperator { x: row.slice(0, n), z: row.slice(n, 2 * n) })
    }

    /// Single-qubit Pauli `letter` on `qubit`.
    pub fn single(n: usize, qubit: usize, letter: PauliLetter) -> Self {
        let mut p = PauliOperator::identity(n);
        p.set(qubit, letter);
        p
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &Bits {
        &self.x
    }

    pub fn z_bits(&self) -> &Bits {
        &self.z
    }

    pub fn letter(&self, q: usize) -> PauliLetter {
        match (self.x.get(q), self.z.get(q)) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }

    pub fn set(&mut self, q: usize, letter: PauliLetter) {
        let (x, z) = letter.bits();
        self.x.set(q, x);
        self.z.set(q, z);
    }

    pub fn weight(&self) -> usize {
        self.x.or(&self.z).count_ones()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Product up to phase.
    pub fn mul(&self, other: &PauliOperator) -> Result<PauliOperator> {
        self.check_len(other)?;
        Ok(PauliOperator { x: self.x.xor(&other.x), z: self.z.xor(&other.z) })
    }

    pub fn anticommutes(&self, other: &PauliOperator) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.x.dot(&other.z) ^ self.z.dot(&other.x))
    }

    /// `[x | z]`, the row this operator occupies in a check matrix.
    pub fn symplectic(&self) -> Bits {
        self.x.concat(&self.z)
    }

    /// `[z | x]`: dotting a check-matrix row with this gives the symplectic
    /// product.
    pub fn symplectic_dual(&self) -> Bits {
        self.z.concat(&self.x)
    }

    /// The GF(4) vector τ(P).
    pub fn to_gf4(&self) -> Vec<Gf4> {
        (0..self.n()).map(|q| Gf4 { x: self.x.get(q), z: self.z.get(q) }).collect()
    }

    pub fn from_gf4(v: &[Gf4]) -> Self {
        let x = Bits::from_bools(&v.iter().map(|g| g.x).collect::<Vec<_>>());
        let z = Bits::from_bools(&v.iter().map(|g| g.z).collect::<Vec<_>>());
        PauliOperator { x, z }
    }

    fn check_len(&self, other: &PauliOperator) -> Result<()> {
        if self.n() != other.n() {
            return Err(dim(format!("Pauli on {} qubits vs {}", self.n(), other.n())));
        }
        Ok(())
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut p = PauliOperator::identity(s.chars().count());
        for (q, c) in s.chars().enumerate() {
            let letter = match c {
                'I' => PauliLetter::I,
                'X' => PauliLetter::X,
                'Y' => PauliLetter::Y,
                'Z' => PauliLetter::Z,
                other => return Err(Error::Parse(format!("invalid Pauli character {other:?}"))),
            };
            p.set(q, letter);
        }
        Ok(p)
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n() {
            let c = match self.letter(q) {
                PauliLetter::I => 'I',
                PauliLetter::X => 'X',
                PauliLetter::Y => 'Y',
                PauliLetter::Z => 'Z',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

/// `C(n, k)` as u128; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of weight-`w` Paulis on `n` qubits, `C(n, w) 3^w`.
pub fn pauli_count(n: usize, w: usize) -> u128 {
    binomial(n as u64, w as u64).saturating_mul(3u128.saturating_pow(w as u32))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let cur = idx.clone()?;
        // advance to the next subset
        let next = {
            let mut v = cur.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if v[i] < n - k + i {
                    v[i] += 1;
                    for j in i + 1..k {
                        v[j] = v[j - 1] + 1;
                    }
                    break Some(v);
                }
            }
        };
        idx = next;
        Some(cur)
    })
}

/// Every weight-`w` Pauli on `n` qubits: supports in lexicographic order,
/// letters cycling X, Y, Z with the first support qubit varying slowest.
pub fn paulis_of_weight(n: usize, w: usize) -> impl Iterator<Item = PauliOperator> {
    combinations(n, w).flat_map(move |support| {
        let total = 3usize.pow(w as u32);
        (0..total).map(move |mut code| {
            let mut p = PauliOperator::identity(n);
            for &q in support.iter().rev() {
                p.set(q, PauliLetter::NONTRIVIAL[code % 3]);
                code /= 3;
            }
            p
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidualClass {
    /// In the stabilizer group.
    Trivial,
    /// Commutes with every generator but is not a stabilizer.
    Logical,
    /// Anticommutes with some generator.
    Detectable,
}

/// Stabilizer code given by `ell = n - k` independent commuting generators.
#[derive(Clone)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<PauliOperator>,
    check_matrix: BinaryMatrix,
    reduced: RowReduced,
}

impl StabilizerCode {
    /// Validates commutativity and independence.
    pub fn new(generators: Vec<PauliOperator>) -> Result<Self> {
        let n = generators.first().map(PauliOperator::n).ok_or_else(|| Error::InvalidCode("no generators".into()))?;
        if let Some(g) = generators.iter().find(|g| g.n() != n) {
            return Err(Error::InvalidCode(format!("generator {g} is not on {n} qubits")));
        }
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if a.anticommutes(b)? {
                    return Err(Error::InvalidCode(format!("generators {a} and {b} anticommute")));
                }
            }
        }
        let check_matrix = BinaryMatrix::from_rows(2 * n, generators.iter().map(PauliOperator::symplectic).collect())?;
        let reduced = check_matrix.row_reduce();
        if reduced.rank != generators.len() {
            return Err(Error::InvalidCode(format!(
                "generators are dependent: rank {} of {}",
                reduced.rank,
                generators.len()
            )));
        }
        Ok(StabilizerCode { n, generators, check_matrix, reduced })
    }

    /// CSS code from a self-orthogonal full-rank parity-check matrix `h`:
    /// X-type generators from the rows of `h`, then Z-type, so the check
    /// matrix is `[[h, 0], [0, h]]` in `[x | z]` columns.
    pub fn css_from_parity(h: &BinaryMatrix) -> Result<Self> {
        if h.rank() != h.rows() {
            return Err(Error::InvalidCode(format!("parity matrix has rank {} < {} rows", h.rank(), h.rows())));
        }
        if !h.mul(&h.transpose())?.row_iter().all(Bits::is_zero) {
            return Err(Error::InvalidCode("parity matrix is not self-orthogonal (h hᵀ ≠ 0)".into()));
        }
        let n = h.cols();
        let xs = h.row_iter().map(|r| PauliOperator { x: r.clone(), z: Bits::zeros(n) });
        let zs = h.row_iter().map(|r| PauliOperator { x: Bits::zeros(n), z: r.clone() });
        Self::new(xs.chain(zs).collect())
    }

    /// The `[[7,1,3]]` Steane code from the `[7,4,3]` Hamming check matrix.
    pub fn steane() -> Self {
        Self::css_from_parity(&hamming_7_4()).expect("Steane code is valid")
    }

    /// Text format: `n k` on the first line, then `n - k` Pauli strings.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty code file".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        let [n, k] = nums[..] else {
            return Err(Error::Parse(format!("header must be `n k`, got {header:?}")));
        };
        let generators = lines.map(str::parse).collect::<Result<Vec<PauliOperator>>>()?;
        if k > n || generators.len() != n - k {
            return Err(Error::Parse(format!(
                "expected {} generators for n={n}, k={k}, found {}",
                n.saturating_sub(k),
                generators.len()
            )));
        }
        if generators.iter().any(|g| g.n() != n) {
            return Err(Error::Parse(format!("every generator must have {n} letters")));
        }
        Self::new(generators)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.k());
        for g in &self.generators {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.n - self.generators.len()
    }

    /// Number of generators, `n - k`.
    #[inline]
    pub fn ell(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// `ell × 2n` matrix with rows `[x | z]`.
    pub fn check_matrix(&self) -> &BinaryMatrix {
        &self.check_matrix
    }

    pub fn syndrome_of(&self, e: &PauliOperator) -> Result<Syndrome> {
        if e.n() != self.n {
            return Err(dim(format!("error on {} qubits, code has {}", e.n(), self.n)));
        }
        self.check_matrix.mul_vec(&e.symplectic_dual())
    }

    /// Whether the operator is in the stabilizer group (up to phase).
    pub fn is_stabilizer(&self, p: &PauliOperator) -> Result<bool> {
        if p.n() != self.n {
            return Err(dim(format!("operator on {} qubits, code has {}", p.n(), self.n)));
        }
        Ok(self.reduced.contains(&p.symplectic()))
    }

    pub fn classify_residual(&self, residual: &PauliOperator) -> Result<ResidualClass> {
        if !self.syndrome_of(residual)?.is_zero() {
            Ok(ResidualClass::Detectable)
        } else if self.is_stabilizer(residual)? {
            Ok(ResidualClass::Trivial)
        } else {
            Ok(ResidualClass::Logical)
        }
    }

    /// Smallest weight of a logical operator, found by enumeration in weight
    /// order. `None` when `k = 0`.
    pub fn min_distance(&self, budget: u128) -> Result<Option<usize>> {
        if self.k() == 0 {
            return Ok(None);
        }
        let mut spent = 0u128;
        for w in 1..=self.n {
            spent = spent.saturating_add(pauli_count(self.n, w));
            if spent > budget {
                return Err(Error::Budget { required: spent, budget });
            }
            for p in paulis_of_weight(self.n, w) {
                if self.classify_residual(&p)? == ResidualClass::Logical {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }
}

impl fmt::Debug for StabilizerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "StabilizerCode[[{}, {}]] <{}>", self.n, self.k(), gens.join(", "))
    }
}

/// The `[7,4,3]` Hamming parity-check matrix, column j is the binary form of j+1.
pub fn hamming_7_4() -> BinaryMatrix {
    BinaryMatrix::from_row_strings(&["1010101", "0110011", "0001111"]).expect("valid literal")
}

/// Syndrome → minimum-weight Pauli correction.
#[derive(Clone, Debug)]
pub struct LookupDecoder {
    n: usize,
    ell: usize,
    max_weight: usize,
    table: HashMap<Syndrome, PauliOperator>,
}

impl LookupDecoder {
    /// Table over every Pauli of weight ≤ `max_weight`. Syndromes not reached
    /// are uncorrectable.
    pub fn build(code: &StabilizerCode, max_weight: usize) -> Result<Self> {
        Self::build_with_budget(code, max_weight, DEFAULT_ENUMERATION_BUDGET)
    }

    pub fn build_with_budget(code: &StabilizerCode, max_weight: usize, budget: u128) -> Result<Self> {
        let required =
            (0..=max_weight.min(code.n())).map(|w| pauli_count(code.n(), w)).fold(0u128, u128::saturating_add);
        if required > budget {
            return Err(Error::Budget { required, budget });
        }
        let mut dec = LookupDecoder { n: code.n(), ell: code.ell(), max_weight: 0, table: HashMap::new() };
        for w in 0..=max_weight.min(code.n()) {
            dec.add_layer(code, w)?;
        }
        Ok(dec)
    }

    /// Extends the enumeration weight until all `2^ell` syndromes have a
    /// representative, each at the weight it was first reached.
    pub fn build_complete(code: &StabilizerCode, budget: u128) -> Result<Self> {
        if code.ell() >= 64 {
            return Err(Error::Budget { required: u128::MAX, budget });
        }
        let target = 1usize << code.ell();
        let mut dec = LookupDecoder { n: code.n(), ell: code.ell(), max_weight: 0, table: HashMap::new() };
        let mut spent = 0u128;
        for w in 0..=code.n() {
            spent = spent.saturating_add(pauli_count(code.n(), w));
            if spent > budget {
                return Err(Error::Budget { required: spent, budget });
            }
            dec.add_layer(code, w)?;
            if dec.table.len() == target {
                break;
            }
        }
        Ok(dec)
    }

    fn add_layer(&mut self, code: &StabilizerCode, w: usize) -> Result<()> {
        let mut layer: HashMap<Syndrome, PauliOperator> = HashMap::new();
        for p in paulis_of_weight(code.n(), w) {
            let s = code.syndrome_of(&p)?;
            if self.table.contains_key(&s) {
                continue;
            }
            match layer.get_mut(&s) {
                Some(best) if p < *best => *best = p,
                Some(_) => {}
                None => {
                    layer.insert(s, p);
                }
            }
        }
        self.table.extend(layer);
        self.max_weight = w;
        Ok(())
    }

    pub fn decode(&self, syndrome: &Syndrome) -> Option<&PauliOperator> {
        self.table.get(syndrome)
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Largest representative weight enumerated.
    pub fn max_weight(&self) -> usize {
        self.max_weight
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let g = p("XIXIXIX");
        assert_eq!(g.x_bits().to_string(), "1010101");
        assert_eq!(g.z_bits().to_string(), "0000000");
        assert!(p("III").is_identity());
        assert_eq!(p("IXY").to_gf4(), vec![Gf4::ZERO, Gf4::ONE, Gf4::OMEGA_BAR]);
        assert_eq!(p("XYZI").to_string(), "XYZI");
        assert!("XQ".parse::<PauliOperator>().is_err());
        assert_eq!(p("IXYZ").weight(), 3);
    }

    #[test]
    fn steane_generators() {
        let code = StabilizerCode::steane();
        let gens: Vec<String> = code.generators().iter().map(ToString::to_string).collect();
        assert_eq!(gens, ["XIXIXIX", "IXXIIXX", "IIIXXXX", "ZIZIZIZ", "IZZIIZZ", "IIIZZZZ"]);
        assert_eq!((code.n(), code.k(), code.ell()), (7, 1, 6));
        for a in code.generators() {
            for b in code.generators() {
                assert!(!crate::fields::gf4_trace_inner_product(&a.to_gf4(), &b.to_gf4()).unwrap());
            }
        }
        assert_eq!(code.min_distance(DEFAULT_ENUMERATION_BUDGET).unwrap(), Some(3));
    }

    #[test]
    fn css_rejections() {
        let dependent = BinaryMatrix::from_row_strings(&["1111", "1111"]).unwrap();
        assert!(StabilizerCode::css_from_parity(&dependent).is_err());
        let not_orthogonal = BinaryMatrix::from_row_strings(&["1100", "0110"]).unwrap();
        assert!(StabilizerCode::css_from_parity(&not_orthogonal).is_err());
    }

    #[test]
    fn syndrome_examples() {
        let code = StabilizerCode::steane();
        assert!(code.syndrome_of(&PauliOperator::identity(7)).unwrap().is_zero());
        assert_eq!(code.syndrome_of(&p("IIIIIIX")).unwrap().to_string(), "000111");
        for g in code.generators() {
            assert!(code.syndrome_of(g).unwrap().is_zero());
        }
        assert!(code.syndrome_of(&p("XX")).is_err());
    }

    #[test]
    fn syndrome_agrees_with_trace_inner_product() {
        let code = StabilizerCode::steane();
        for e in (0..=2).flat_map(|w| paulis_of_weight(7, w)) {
            let s = code.syndrome_of(&e).unwrap();
            for (i, g) in code.generators().iter().enumerate() {
                assert_eq!(s.get(i), crate::fields::gf4_trace_inner_product(&g.to_gf4(), &e.to_gf4()).unwrap());
            }
        }
    }

    #[test]
    fn syndrome_is_multiplicative() {
        let code = StabilizerCode::steane();
        let errs: Vec<_> = (0..=2).flat_map(|w| paulis_of_weight(7, w)).step_by(7).collect();
        for a in &errs {
            for b in &errs {
                let lhs = code.syndrome_of(&a.mul(b).unwrap()).unwrap();
                let rhs = code.syndrome_of(a).unwrap().xor(&code.syndrome_of(b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn weight_one_syndromes_distinct() {
        let code = StabilizerCode::steane();
        let mut seen = std::collections::HashSet::new();
        for e in paulis_of_weight(7, 1) {
            let s = code.syndrome_of(&e).unwrap();
            assert!(!s.is_zero());
            assert!(seen.insert(s));
        }
        assert_eq!(seen.len(), 21);
    }

    #[test]
    fn classify_examples() {
        let code = StabilizerCode::steane();
        assert_eq!(code.classify_residual(&PauliOperator::identity(7)).unwrap(), ResidualClass::Trivial);
        for g in code.generators() {
            assert_eq!(code.classify_residual(g).unwrap(), ResidualClass::Trivial);
        }
        assert_eq!(code.classify_residual(&p("XXXXXXX")).unwrap(), ResidualClass::Logical);
        assert_eq!(code.classify_residual(&p("XIIIIII")).unwrap(), ResidualClass::Detectable);
        // every element of the stabilizer group
        for mask in 0u32..64 {
            let mut acc = PauliOperator::identity(7);
            for (i, g) in code.generators().iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc = acc.mul(g).unwrap();
                }
            }
            assert_eq!(code.classify_residual(&acc).unwrap(), ResidualClass::Trivial);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(combinations(5, 2).count(), 10);
        assert_eq!(combinations(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3).count(), 0);
        assert_eq!(paulis_of_weight(7, 2).count() as u128, pauli_count(7, 2));
        assert_eq!(binomial(21, 3), 1330);
        assert_eq!(binomial(4, 6), 0);
    }

    #[test]
    fn lookup_decoder_steane() {
        let code = StabilizerCode::steane();
        let dec = LookupDecoder::build(&code, 1).unwrap();
        assert_eq!(dec.len(), 22);
        assert!(dec.decode(&Bits::zeros(6)).unwrap().is_identity());
        let e = p("XIIIIII");
        assert_eq!(dec.decode(&code.syndrome_of(&e).unwrap()), Some(&e));
        for e in paulis_of_weight(7, 1) {
            assert_eq!(dec.decode(&code.syndrome_of(&e).unwrap()), Some(&e));
        }

        let full = LookupDecoder::build_complete(&code, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(full.len(), 64);
        assert_eq!(full.max_weight(), 2);
        for e in (0..=1).flat_map(|w| paulis_of_weight(7, w)) {
            let c = full.decode(&code.syndrome_of(&e).unwrap()).unwrap();
            let residual = e.mul(c).unwrap();
            assert_eq!(code.classify_residual(&residual).unwrap(), ResidualClass::Trivial);
        }
    }

    #[test]
    fn lookup_tie_break_is_lexicographic() {
        let code = StabilizerCode::steane();
        let full = LookupDecoder::build_complete(&code, DEFAULT_ENUMERATION_BUDGET).unwrap();
        for (s, rep) in &full.table {
            let w = rep.weight();
            let min = paulis_of_weight(7, w).filter(|q| &code.syndrome_of(q).unwrap() == s).min().unwrap();
            assert_eq!(&min, rep);
        }
    }

    #[test]
    fn lookup_budget_guard() {
        let code = StabilizerCode::steane();
        assert!(matches!(LookupDecoder::build_with_budget(&code, 3, 100), Err(Error::Budget { .. })));
    }

    #[test]
    fn text_format() {
        let code = StabilizerCode::steane();
        let text = code.to_text();
        assert!(text.starts_with("7 1\nXIXIXIX\n"));
        let back = StabilizerCode::from_text(&text).unwrap();
        assert_eq!(back.check_matrix(), code.check_matrix());
        assert!(StabilizerCode::from_text("2 0\nXX\nZI\n").is_err()); // anticommute
        assert!(StabilizerCode::from_text("2 0\nXX\nXX\n").is_err()); // dependent
        assert!(StabilizerCode::from_text("3 1\nXXI\n").is_err()); // wrong count
    }
}
