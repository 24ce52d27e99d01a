//! Cyclic codes over GF(q) built from defining sets, plus the locator-code
//! families consumed by the locator-based distance bound.
//!
//! A defining set here is a bare subset of Z_n tagged with an alphabet size.
//! Coprimality of n and q is a *code* requirement, not a set requirement:
//! locator specs such as the length-2 parity check over GF(2) are legal
//! objects even though they have no cyclic realization.

use std::collections::BTreeSet;
use std::fmt;

use crate::field::{ord_mod, prime_power, Element, Embedding, Field, DEFAULT_FIELD_CAP};
use crate::poly::Poly;
use crate::{Error, Result};

pub(crate) fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn stable_under(members: &BTreeSet<u64>, q: u64, n: u64) -> bool {
    members.iter().all(|&r| members.contains(&mulmod(r, q, n)))
}

/// A subset of Z_n with the alphabet size used for closure tests.
#[derive(Clone, PartialEq, Eq)]
pub struct DefiningSet {
    n: u64,
    q: u64,
    members: BTreeSet<u64>,
    closed: bool,
}

impl DefiningSet {
    /// Reduces `elems` modulo n and records whether the result is stable
    /// under multiplication by q.
    pub fn new(n: u64, q: u64, elems: &[i64]) -> Result<DefiningSet> {
        if n == 0 {
            return Err(Error::BadParameter("length must be positive".into()));
        }
        if q < 2 {
            return Err(Error::BadParameter(
                "alphabet size must be at least 2".into(),
            ));
        }
        let members: BTreeSet<u64> = elems
            .iter()
            .map(|&v| v.rem_euclid(n as i64) as u64)
            .collect();
        let closed = stable_under(&members, q, n);
        Ok(DefiningSet { n, q, members, closed })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn len(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn contains(&self, i: i64) -> bool {
        self.members.contains(&(i.rem_euclid(self.n as i64) as u64))
    }

    pub(crate) fn contains_raw(&self, r: u64) -> bool {
        self.members.contains(&r)
    }

    /// Members in ascending order.
    pub fn members(&self) -> Vec<u64> {
        self.members.iter().copied().collect()
    }

    /// Union of the q-multiplication orbits through every member.
    pub fn closure(&self) -> DefiningSet {
        let mut members = BTreeSet::new();
        for &r in &self.members {
            let mut c = r;
            while members.insert(c) {
                c = mulmod(c, self.q, self.n);
            }
        }
        DefiningSet { n: self.n, q: self.q, members, closed: true }
    }

    /// The set u * S mod n for a unit u.
    pub fn unit_multiple(&self, u: u64) -> Result<DefiningSet> {
        let u = u % self.n;
        if num_integer::gcd(u, self.n) != 1 {
            return Err(Error::NotCoprime { a: u, b: self.n });
        }
        let members: BTreeSet<u64> = self
            .members
            .iter()
            .map(|&r| mulmod(r, u, self.n))
            .collect();
        let closed = stable_under(&members, self.q, self.n);
        Ok(DefiningSet { n: self.n, q: self.q, members, closed })
    }

    /// Smallest member of each q-orbit, ascending. The set must be closed.
    pub fn coset_representatives(&self) -> Result<Vec<u64>> {
        if !self.closed {
            return Err(Error::NotClosed { q: self.q });
        }
        let mut seen = BTreeSet::new();
        let mut reps = Vec::new();
        for &r in &self.members {
            if seen.contains(&r) {
                continue;
            }
            reps.push(r);
            let mut c = r;
            while seen.insert(c) {
                c = mulmod(c, self.q, self.n);
            }
        }
        Ok(reps)
    }
}

impl fmt::Display for DefiningSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for DefiningSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DefiningSet(n={}, q={}, {})", self.n, self.q, self)
    }
}

/// The q-cyclotomic coset of r modulo n, ascending.
pub fn cyclotomic_coset(n: u64, q: u64, r: i64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::BadParameter("length must be positive".into()));
    }
    if num_integer::gcd(q % n, n) != 1 {
        return Err(Error::NotCoprime { a: q, b: n });
    }
    let start = r.rem_euclid(n as i64) as u64;
    let mut coset = vec![start];
    let mut c = mulmod(start, q, n);
    while c != start {
        coset.push(c);
        c = mulmod(c, q, n);
    }
    coset.sort_unstable();
    Ok(coset)
}

/// The minimal polynomial over GF(q) of alpha^r, where alpha is the
/// designated primitive n-th root of unity in the splitting field.
pub fn minimal_polynomial(n: u64, q: u64, r: i64) -> Result<Poly> {
    minimal_polynomial_with_cap(n, q, r, DEFAULT_FIELD_CAP)
}

pub fn minimal_polynomial_with_cap(n: u64, q: u64, r: i64, field_cap: u64) -> Result<Poly> {
    let coset = cyclotomic_coset(n, q, r)?;
    let ds = DefiningSet::new(n, q, &coset.iter().map(|&x| x as i64).collect::<Vec<_>>())?;
    let scaffold = SplittingData::build(&ds, field_cap)?;
    scaffold.subfield_poly_from_roots(&coset)
}

// Field tower shared by code construction and minimal polynomials.
struct SplittingData {
    field: Field,
    splitting: Field,
    embedding: Embedding,
    alpha: Element,
}

impl SplittingData {
    fn build(ds: &DefiningSet, field_cap: u64) -> Result<SplittingData> {
        let (n, q) = (ds.n(), ds.q());
        let (p, a) = prime_power(q)?;
        if n < 2 {
            return Err(Error::BadParameter("code length must be at least 2".into()));
        }
        if num_integer::gcd(n, q) != 1 {
            return Err(Error::NotCoprime { a: n, b: q });
        }
        let s = ord_mod(q, n)?;
        let t = (a as u64)
            .checked_mul(s)
            .and_then(|t| u32::try_from(t).ok())
            .ok_or(Error::FieldCapExceeded { p, t: u32::MAX, cap: field_cap })?;
        let field = Field::with_cap(p, a, field_cap)?;
        let splitting = Field::with_cap(p, t, field_cap)?;
        let embedding = field.embedding_into(&splitting)?;
        let alpha = splitting.nth_root_of_unity(n)?;
        Ok(SplittingData { field, splitting, embedding, alpha })
    }

    // Product of (x - alpha^i) over `exponents`, pulled back to GF(q).
    // The exponent set must be closed under multiplication by q.
    fn subfield_poly_from_roots(&self, exponents: &[u64]) -> Result<Poly> {
        let roots: Vec<Element> = exponents
            .iter()
            .map(|&i| self.alpha.pow(i as i64).expect("nonzero base"))
            .collect();
        let lifted = Poly::from_roots(&self.splitting, &roots)?;
        let coeffs: Vec<u64> = lifted
            .coeff_values()
            .iter()
            .map(|&v| {
                self.embedding
                    .preimage_raw(v)
                    .expect("closed exponent set keeps coefficients in GF(q)")
            })
            .collect();
        Ok(Poly::from_raw(&self.field, coeffs))
    }
}

/// A cyclic code of length n over GF(q), cut out by a closed defining set.
#[derive(Clone)]
pub struct CyclicCode {
    field: Field,
    splitting: Field,
    embedding: Embedding,
    alpha: Element,
    defining: DefiningSet,
    generator: Poly,
    k: u64,
}

impl CyclicCode {
    /// Code whose defining set is the union of the q-cyclotomic cosets of
    /// the given representatives.
    pub fn build(q: u64, n: u64, coset_reps: &[i64]) -> Result<CyclicCode> {
        CyclicCode::build_with_cap(q, n, coset_reps, DEFAULT_FIELD_CAP)
    }

    pub fn build_with_cap(
        q: u64,
        n: u64,
        coset_reps: &[i64],
        field_cap: u64,
    ) -> Result<CyclicCode> {
        let ds = DefiningSet::new(n, q, coset_reps)?.closure();
        CyclicCode::from_defining_set_with_cap(&ds, field_cap)
    }

    pub fn from_defining_set(ds: &DefiningSet) -> Result<CyclicCode> {
        CyclicCode::from_defining_set_with_cap(ds, DEFAULT_FIELD_CAP)
    }

    pub fn from_defining_set_with_cap(ds: &DefiningSet, field_cap: u64) -> Result<CyclicCode> {
        if !ds.is_closed() {
            return Err(Error::NotClosed { q: ds.q() });
        }
        if ds.is_full() {
            return Err(Error::FullDefiningSet);
        }
        let scaffold = SplittingData::build(ds, field_cap)?;
        let generator = scaffold.subfield_poly_from_roots(&ds.members())?;
        let k = ds.n() - ds.len();
        Ok(CyclicCode {
            field: scaffold.field,
            splitting: scaffold.splitting,
            embedding: scaffold.embedding,
            alpha: scaffold.alpha,
            defining: ds.clone(),
            generator,
            k,
        })
    }

    pub fn q(&self) -> u64 {
        self.field.size()
    }

    pub fn n(&self) -> u64 {
        self.defining.n()
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn alphabet(&self) -> &Field {
        &self.field
    }

    pub fn splitting_field(&self) -> &Field {
        &self.splitting
    }

    /// Embedding of the alphabet into the splitting field.
    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    /// Designated primitive n-th root of unity in the splitting field.
    pub fn alpha(&self) -> &Element {
        &self.alpha
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining
    }

    /// Encodes a message polynomial of degree < k.
    pub fn encode(&self, message: &Poly) -> Result<Codeword> {
        if message.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if let Some(d) = message.degree() {
            if d as u64 >= self.k {
                return Err(Error::DegreeTooLarge { degree: d, k: self.k as usize });
            }
        }
        let c = message * &self.generator;
        Ok(Codeword::from_poly(&self.field, &c, self.n()))
    }

    /// Encodes a message given as at most k coefficient values.
    pub fn encode_values(&self, message: &[u64]) -> Result<Codeword> {
        if message.len() as u64 > self.k {
            return Err(Error::DegreeTooLarge {
                degree: message.len().saturating_sub(1),
                k: self.k as usize,
            });
        }
        let m = Poly::from_values(&self.field, message)?;
        self.encode(&m)
    }

    pub fn contains(&self, word: &Codeword) -> Result<bool> {
        if word.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        self.contains_values(word.values())
    }

    /// Membership test for a raw length-n coefficient vector.
    pub fn contains_values(&self, values: &[u64]) -> Result<bool> {
        if values.len() as u64 != self.n() {
            return Err(Error::BadParameter(format!(
                "word length {} does not match code length {}",
                values.len(),
                self.n()
            )));
        }
        let w = Poly::from_values(&self.field, values)?;
        self.generator.divides(&w)
    }
}

impl fmt::Debug for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}[{}, {}]", self.q(), self.n(), self.k)
    }
}

/// A length-n word over the code alphabet.
#[derive(Clone, PartialEq, Eq)]
pub struct Codeword {
    field: Field,
    coeffs: Vec<u64>,
}

impl Codeword {
    pub(crate) fn from_poly(field: &Field, poly: &Poly, n: u64) -> Codeword {
        let mut coeffs = poly.coeff_values().to_vec();
        coeffs.resize(n as usize, 0);
        Codeword { field: field.clone(), coeffs }
    }

    pub fn from_values(field: &Field, values: &[u64]) -> Result<Codeword> {
        for &v in values {
            if v >= field.size() {
                return Err(Error::BadParameter(format!(
                    "{v} is not an element value of {field}"
                )));
            }
        }
        Ok(Codeword { field: field.clone(), coeffs: values.to_vec() })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Raw element values, one per coordinate.
    pub fn values(&self) -> &[u64] {
        &self.coeffs
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> u64 {
        self.coeffs.iter().filter(|&&v| v != 0).count() as u64
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn support(&self) -> Vec<u64> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, _)| i as u64)
            .collect()
    }

    pub fn poly(&self) -> Poly {
        Poly::from_raw(&self.field, self.coeffs.clone())
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Smallest power q^j with n_l dividing q^j - 1.
pub fn verification_alphabet(q: u64, n_l: u64) -> Result<u64> {
    let j = ord_mod(q, n_l)?;
    let mut out: u64 = 1;
    for _ in 0..j {
        out = out.checked_mul(q).ok_or_else(|| {
            Error::BadParameter(format!("q^{j} overflows u64 for q = {q}"))
        })?;
    }
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LocatorFamily {
    ParityCheck,
    ReedSolomon { delta: u64 },
    Custom,
}

/// A locator code given by its combinatorial data: alphabet size, length,
/// dimension, defining set, and minimum distance.
#[derive(Clone)]
pub struct Locator {
    family: LocatorFamily,
    q_l: u64,
    k_l: u64,
    d_l: u64,
    defining: DefiningSet,
}

impl Locator {
    /// Length-n_l parity-check code over GF(2): defining set {0}, distance 2.
    pub fn parity_check(n_l: u64) -> Result<Locator> {
        if n_l < 2 {
            return Err(Error::BadParameter(
                "parity-check length must be at least 2".into(),
            ));
        }
        let defining = DefiningSet::new(n_l, 2, &[0])?;
        Ok(Locator {
            family: LocatorFamily::ParityCheck,
            q_l: 2,
            k_l: n_l - 1,
            d_l: 2,
            defining,
        })
    }

    /// Reed-Solomon code over GF(q_l) of length n_l | q_l - 1 and dimension
    /// k_l, with defining set {delta, ..., delta + n_l - k_l - 1}.
    pub fn reed_solomon(q_l: u64, n_l: u64, k_l: u64, delta: i64) -> Result<Locator> {
        prime_power(q_l)?;
        if n_l < 2 {
            return Err(Error::BadParameter(
                "Reed-Solomon length must be at least 2".into(),
            ));
        }
        if k_l == 0 || k_l > n_l {
            return Err(Error::BadParameter(format!(
                "Reed-Solomon dimension {k_l} must lie in 1..={n_l}"
            )));
        }
        if (q_l - 1) % n_l != 0 {
            return Err(Error::RsLength { q_l, n_l: n_l as usize });
        }
        let elems: Vec<i64> = (0..(n_l - k_l) as i64).map(|j| delta + j).collect();
        let defining = DefiningSet::new(n_l, q_l, &elems)?;
        let delta = delta.rem_euclid(n_l as i64) as u64;
        Ok(Locator {
            family: LocatorFamily::ReedSolomon { delta },
            q_l,
            k_l,
            d_l: n_l - k_l + 1,
            defining,
        })
    }

    /// Reed-Solomon locator over the smallest extension of GF(q) whose
    /// multiplicative group order is divisible by n_l.
    pub fn reed_solomon_for(q: u64, n_l: u64, k_l: u64, delta: i64) -> Result<Locator> {
        let q_l = verification_alphabet(q, n_l)?;
        Locator::reed_solomon(q_l, n_l, k_l, delta)
    }

    /// Arbitrary cyclic locator; its distance is measured by enumeration.
    pub fn custom(defining: &DefiningSet, enum_cap: u64, field_cap: u64) -> Result<Locator> {
        prime_power(defining.q())?;
        let n_l = defining.n();
        if n_l < 2 {
            return Err(Error::BadParameter(
                "locator length must be at least 2".into(),
            ));
        }
        let d_l = if defining.is_empty() {
            1
        } else {
            let code = CyclicCode::from_defining_set_with_cap(defining, field_cap)?;
            crate::oracle::min_distance(&code, enum_cap)?.distance
        };
        Ok(Locator {
            family: LocatorFamily::Custom,
            q_l: defining.q(),
            k_l: n_l - defining.len(),
            d_l,
            defining: defining.clone(),
        })
    }

    pub fn family(&self) -> &LocatorFamily {
        &self.family
    }

    pub fn family_name(&self) -> &'static str {
        match self.family {
            LocatorFamily::ParityCheck => "parity_check",
            LocatorFamily::ReedSolomon { .. } => "reed_solomon",
            LocatorFamily::Custom => "custom",
        }
    }

    pub fn q_l(&self) -> u64 {
        self.q_l
    }

    pub fn n_l(&self) -> u64 {
        self.defining.n()
    }

    pub fn k_l(&self) -> u64 {
        self.k_l
    }

    pub fn d_l(&self) -> u64 {
        self.d_l
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining
    }

    /// Whether position j mod n_l lies in the defining set.
    pub fn covers(&self, j: u64) -> bool {
        self.defining.contains_raw(j % self.defining.n())
    }

    /// The locator as an actual cyclic code over GF(q_l).
    pub fn realize(&self, field_cap: u64) -> Result<CyclicCode> {
        CyclicCode::from_defining_set_with_cap(&self.defining, field_cap)
    }
}

impl fmt::Debug for Locator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "L_{}[{}, {}, {}] ({})",
            self.q_l,
            self.n_l(),
            self.k_l,
            self.d_l,
            self.family_name()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_of_twenty_one() {
        assert_eq!(cyclotomic_coset(21, 2, 1).unwrap(), vec![1, 2, 4, 8, 11, 16]);
        assert_eq!(cyclotomic_coset(21, 2, 9).unwrap(), vec![9, 15, 18]);
        assert_eq!(cyclotomic_coset(21, 2, 0).unwrap(), vec![0]);
        assert_eq!(
            cyclotomic_coset(21, 2, -5).unwrap(),
            cyclotomic_coset(21, 2, 16).unwrap()
        );
        assert!(matches!(
            cyclotomic_coset(21, 7, 1),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn cosets_partition_the_residues() {
        for &(n, q) in &[(21u64, 2u64), (15, 2), (13, 3), (11, 3), (8, 3), (26, 5)] {
            let mut seen = vec![false; n as usize];
            let mut total = 0u64;
            for r in 0..n {
                let coset = cyclotomic_coset(n, q, r as i64).unwrap();
                if coset[0] == r {
                    for &x in &coset {
                        assert!(!seen[x as usize]);
                        seen[x as usize] = true;
                    }
                    total += coset.len() as u64;
                }
            }
            assert_eq!(total, n);
        }
    }

    #[test]
    fn minimal_polynomials_multiply_to_x_n_minus_one() {
        let field = Field::new(2, 1).unwrap();
        let mut prod = Poly::one(&field);
        for r in 0..21 {
            let coset = cyclotomic_coset(21, 2, r).unwrap();
            if coset[0] == r as u64 {
                prod = &prod * &minimal_polynomial(21, 2, r).unwrap();
            }
        }
        assert_eq!(prod, Poly::x_pow_minus_one(&field, 21));
        assert_eq!(minimal_polynomial(21, 2, 7).unwrap().degree(), Some(2));
        assert_eq!(minimal_polynomial(21, 2, 1).unwrap().degree(), Some(6));
        assert_eq!(minimal_polynomial(21, 2, 0).unwrap().coeff_values(), &[1, 1]);
        assert_eq!(minimal_polynomial(13, 3, 0).unwrap().coeff_values(), &[2, 1]);
    }

    #[test]
    fn binary_21_7_code() {
        let code = CyclicCode::build(2, 21, &[1, 3, 7, 9]).unwrap();
        assert_eq!(
            code.defining_set().members(),
            vec![1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 14, 15, 16, 18]
        );
        assert_eq!(code.k(), 7);
        assert_eq!(code.generator().degree(), Some(14));
        assert!(code.generator().is_monic());
        assert_eq!(
            code.defining_set().coset_representatives().unwrap(),
            vec![1, 3, 7, 9]
        );
        let emb = code.embedding();
        for i in 0..21i64 {
            let x = code.alpha().pow(i).unwrap();
            let v = code.generator().eval_via(emb, &x);
            assert_eq!(v.is_zero(), code.defining_set().contains(i), "exponent {i}");
        }
    }

    #[test]
    fn parity_check_code_of_length_seven() {
        let code = CyclicCode::build(2, 7, &[0]).unwrap();
        assert_eq!((code.n(), code.k()), (7, 6));
        assert_eq!(code.generator().coeff_values(), &[1, 1]);
    }

    #[test]
    fn single_coset_dimension() {
        let code = CyclicCode::build(2, 21, &[1]).unwrap();
        assert_eq!(code.k(), 15);
    }

    #[test]
    fn dimension_counts_cosets() {
        let cases: [(u64, u64, Vec<i64>); 4] = [
            (2, 15, vec![1, 3]),
            (3, 13, vec![1]),
            (2, 23, vec![1]),
            (5, 6, vec![1, 2]),
        ];
        for (q, n, reps) in cases {
            let code = CyclicCode::build(q, n, &reps).unwrap();
            let total: u64 = code
                .defining_set()
                .coset_representatives()
                .unwrap()
                .iter()
                .map(|&r| cyclotomic_coset(n, q, r as i64).unwrap().len() as u64)
                .sum();
            assert_eq!(code.k(), n - total);
        }
    }

    #[test]
    fn encode_and_membership() {
        let code = CyclicCode::build(2, 21, &[1, 3, 7, 9]).unwrap();
        let g = code.encode_values(&[1]).unwrap();
        assert_eq!(g.poly(), *code.generator());
        let c = code.encode_values(&[1, 0, 1, 1]).unwrap();
        assert_eq!(c.len(), 21);
        assert!(code.contains(&c).unwrap());
        let mut shifted = c.values().to_vec();
        shifted.rotate_right(1);
        assert!(code.contains_values(&shifted).unwrap());
        let mut bad = c.values().to_vec();
        bad[0] ^= 1;
        assert!(!code.contains_values(&bad).unwrap());
        assert!(matches!(
            code.encode_values(&[0; 8]),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn defining_set_closure_and_units() {
        let open = DefiningSet::new(21, 2, &[1]).unwrap();
        assert!(!open.is_closed());
        let closed = open.closure();
        assert_eq!(closed.members(), vec![1, 2, 4, 8, 11, 16]);
        assert!(closed.is_closed());
        let doubled = closed.unit_multiple(2).unwrap();
        assert_eq!(doubled.members(), closed.members());
        let fived = closed.unit_multiple(5).unwrap();
        assert_eq!(fived.members(), vec![5, 10, 13, 17, 19, 20]);
        assert!(matches!(
            closed.unit_multiple(7),
            Err(Error::NotCoprime { .. })
        ));
        let reduced = DefiningSet::new(13, 3, &[-5, -4, -2, -1, 1, 2, 4, 5]).unwrap();
        assert_eq!(reduced.members(), vec![1, 2, 4, 5, 8, 9, 11, 12]);
        assert!(!reduced.is_closed());
    }

    #[test]
    fn from_defining_set_validations() {
        let open = DefiningSet::new(21, 2, &[1]).unwrap();
        assert!(matches!(
            CyclicCode::from_defining_set(&open),
            Err(Error::NotClosed { q: 2 })
        ));
        let full = DefiningSet::new(3, 2, &[0, 1, 2]).unwrap();
        assert!(matches!(
            CyclicCode::from_defining_set(&full),
            Err(Error::FullDefiningSet)
        ));
        let empty = DefiningSet::new(7, 2, &[]).unwrap();
        let code = CyclicCode::from_defining_set(&empty).unwrap();
        assert_eq!(code.k(), 7);
        assert_eq!(code.generator().coeff_values(), &[1]);
        let even = DefiningSet::new(6, 2, &[0]).unwrap();
        assert!(matches!(
            CyclicCode::from_defining_set(&even),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn locator_families() {
        let p5 = Locator::parity_check(5).unwrap();
        assert_eq!((p5.n_l(), p5.k_l(), p5.d_l(), p5.q_l()), (5, 4, 2, 2));
        assert_eq!(p5.defining_set().members(), vec![0]);
        assert!(p5.covers(10) && !p5.covers(7));
        assert!(Locator::parity_check(2).is_ok());
        assert!(Locator::parity_check(1).is_err());

        let rs = Locator::reed_solomon(16, 5, 4, 0).unwrap();
        assert_eq!((rs.n_l(), rs.k_l(), rs.d_l()), (5, 4, 2));
        assert_eq!(rs.defining_set().members(), vec![0]);

        let wrap = Locator::reed_solomon(16, 5, 3, 4).unwrap();
        assert_eq!(wrap.defining_set().members(), vec![0, 4]);
        assert_eq!(wrap.d_l(), 3);

        let whole = Locator::reed_solomon(16, 5, 5, 0).unwrap();
        assert_eq!((whole.k_l(), whole.d_l()), (5, 1));
        assert!(whole.defining_set().is_empty());

        assert!(matches!(
            Locator::reed_solomon(8, 5, 2, 0),
            Err(Error::RsLength { .. })
        ));
        assert_eq!(verification_alphabet(2, 5).unwrap(), 16);
        assert_eq!(verification_alphabet(2, 21).unwrap(), 64);
        assert_eq!(Locator::reed_solomon_for(2, 5, 4, 0).unwrap().q_l(), 16);
    }

    #[test]
    fn custom_locator_measures_distance() {
        let ds = DefiningSet::new(7, 2, &[1]).unwrap().closure();
        let loc = Locator::custom(&ds, 1 << 20, DEFAULT_FIELD_CAP).unwrap();
        assert_eq!((loc.n_l(), loc.k_l(), loc.d_l()), (7, 4, 3));
        assert_eq!(loc.family_name(), "custom");
    }

    #[test]
    fn realized_locators() {
        let rs = Locator::reed_solomon(16, 5, 4, 0).unwrap();
        let code = rs.realize(DEFAULT_FIELD_CAP).unwrap();
        assert_eq!((code.n(), code.k(), code.q()), (5, 4, 16));
        let p4 = Locator::parity_check(4).unwrap();
        assert!(matches!(
            p4.realize(DEFAULT_FIELD_CAP),
            Err(Error::NotCoprime { .. })
        ));
    }
}
