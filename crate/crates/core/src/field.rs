//! Finite fields GF(p^t) with deterministic construction.
//!
//! A field is determined by (p, t) alone. The modulus is the first monic
//! irreducible polynomial of degree t when coefficient vectors
//! [c_0, .., c_{t-1}] are compared lexicographically from the constant term,
//! and the generator is the first primitive element under the same ordering
//! of element coefficient vectors. Prime fields take the residues 0..p with
//! the modulus recorded as x - g for the smallest primitive root g.
//!
//! Elements are stored as the integer sum e_i * p^i of their coefficient
//! vector [e_0, .., e_{t-1}]. Fields of at most 2^20 elements carry exp/log
//! tables; larger ones fall back to direct modular arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::{Error, Result};

/// Default ceiling on the field size p^t.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 24;
/// Absolute ceiling accepted by [`Field::with_cap`].
pub const MAX_FIELD_CAP: u64 = 1 << 30;

// Fields up to this many elements carry discrete-log tables.
const TABLE_CAP: u64 = 1 << 20;

struct FieldCore {
    p: u64,
    t: u32,
    size: u64,
    // Monic, length t+1, coefficients low to high.
    modulus: Vec<u64>,
    generator: u64,
    // p^0 ..= p^t
    p_pows: Vec<u64>,
    // Distinct prime factors of size - 1.
    group_factors: Vec<u64>,
    // For p = 2 the modulus doubles as a bitmask.
    modulus_mask: u64,
    exp: Option<Vec<u32>>,
    log: Option<Vec<u32>>,
}

/// Handle to an immutable field description; cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldCore>);

/// An element of a [`Field`].
#[derive(Clone)]
pub struct Element {
    field: Field,
    val: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors, ascending.
pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Writes q as p^a for prime p, if possible.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let factors = distinct_prime_factors(q);
    if factors.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let p = factors[0];
    let mut a = 0u32;
    let mut m = q;
    while m > 1 {
        m /= p;
        a += 1;
    }
    if p.pow(a) != q {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, a))
}

/// Multiplicative order of q modulo n. Requires gcd(q, n) = 1.
pub fn ord_mod(q: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::BadParameter("modulus must be positive".into()));
    }
    if num_integer::gcd(q, n) != 1 {
        return Err(Error::NotCoprime { a: q, b: n });
    }
    let target = 1 % n;
    let mut cur = q % n;
    let mut s = 1u64;
    while cur != target {
        cur = (cur as u128 * q as u128 % n as u128) as u64;
        s += 1;
    }
    Ok(s)
}

fn registry() -> &'static Mutex<HashMap<(u64, u32), Field>> {
    static REG: OnceLock<Mutex<HashMap<(u64, u32), Field>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Field {
    /// Builds GF(p^t) under the default size cap.
    pub fn new(p: u64, t: u32) -> Result<Field> {
        Field::with_cap(p, t, DEFAULT_FIELD_CAP)
    }

    /// Builds GF(p^t) under an explicit size cap (at most 2^30).
    pub fn with_cap(p: u64, t: u32, cap: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if t == 0 {
            return Err(Error::BadParameter("extension degree must be positive".into()));
        }
        let cap = cap.min(MAX_FIELD_CAP);
        let mut size: u64 = 1;
        for _ in 0..t {
            size = size
                .checked_mul(p)
                .filter(|&s| s <= cap)
                .ok_or(Error::FieldCapExceeded { p, t, cap })?;
        }
        if let Some(f) = registry().lock().unwrap().get(&(p, t)) {
            return Ok(f.clone());
        }
        let field = Field(Arc::new(build_core(p, t, size)));
        registry()
            .lock()
            .unwrap()
            .entry((p, t))
            .or_insert_with(|| field.clone());
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn t(&self) -> u32 {
        self.0.t
    }

    /// Number of elements, p^t.
    pub fn size(&self) -> u64 {
        self.0.size
    }

    /// Order of the multiplicative group, p^t - 1.
    pub fn group_order(&self) -> u64 {
        self.0.size - 1
    }

    /// Modulus coefficients [c_0, .., c_t], monic.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Element {
        Element { field: self.clone(), val: 0 }
    }

    pub fn one(&self) -> Element {
        Element { field: self.clone(), val: 1 }
    }

    pub fn generator(&self) -> Element {
        Element { field: self.clone(), val: self.0.generator }
    }

    /// Element from its canonical integer value sum e_i p^i.
    pub fn element(&self, val: u64) -> Result<Element> {
        if val >= self.0.size {
            return Err(Error::BadParameter(format!(
                "value {} out of range for GF({})",
                val,
                self.0.size
            )));
        }
        Ok(Element { field: self.clone(), val })
    }

    /// Element from its coefficient vector [e_0, .., e_{t-1}] (short vectors
    /// are zero padded).
    pub fn element_from_digits(&self, digits: &[u64]) -> Result<Element> {
        if digits.len() > self.0.t as usize {
            return Err(Error::BadParameter("too many coefficients".into()));
        }
        if digits.iter().any(|&d| d >= self.0.p) {
            return Err(Error::BadParameter("coefficient out of range".into()));
        }
        let mut val = 0;
        for (i, &d) in digits.iter().enumerate() {
            val += d * self.0.p_pows[i];
        }
        Ok(Element { field: self.clone(), val })
    }

    /// The designated primitive n-th root of unity, generator^((p^t - 1)/n).
    pub fn nth_root_of_unity(&self, n: u64) -> Result<Element> {
        if n == 0 {
            return Err(Error::BadParameter("root order must be positive".into()));
        }
        let order = self.group_order();
        if order % n != 0 {
            return Err(Error::NoRootOfUnity { n, size: self.0.size });
        }
        let val = self.pow_raw(self.0.generator, order / n);
        Ok(Element { field: self.clone(), val })
    }

    pub(crate) fn add_raw(&self, a: u64, b: u64) -> u64 {
        let c = &self.0;
        if c.p == 2 {
            return a ^ b;
        }
        if c.t == 1 {
            return (a + b) % c.p;
        }
        let mut out = 0;
        let mut x = a;
        let mut y = b;
        for i in 0..c.t as usize {
            out += (x % c.p + y % c.p) % c.p * c.p_pows[i];
            x /= c.p;
            y /= c.p;
        }
        out
    }

    pub(crate) fn neg_raw(&self, a: u64) -> u64 {
        let c = &self.0;
        if c.p == 2 {
            return a;
        }
        if c.t == 1 {
            return (c.p - a) % c.p;
        }
        let mut out = 0;
        let mut x = a;
        for i in 0..c.t as usize {
            out += (c.p - x % c.p) % c.p * c.p_pows[i];
            x /= c.p;
        }
        out
    }

    pub(crate) fn sub_raw(&self, a: u64, b: u64) -> u64 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: u64, b: u64) -> u64 {
        let c = &self.0;
        if a == 0 || b == 0 {
            return 0;
        }
        if let (Some(exp), Some(log)) = (&c.exp, &c.log) {
            let order = c.size - 1;
            let s = (log[a as usize] as u64 + log[b as usize] as u64) % order;
            return exp[s as usize] as u64;
        }
        mul_generic(c, a, b)
    }

    pub(crate) fn inv_raw(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let c = &self.0;
        if let (Some(exp), Some(log)) = (&c.exp, &c.log) {
            let order = c.size - 1;
            let s = (order - log[a as usize] as u64) % order;
            return Ok(exp[s as usize] as u64);
        }
        Ok(self.pow_raw(a, c.size - 2))
    }

    pub(crate) fn div_raw(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul_raw(a, self.inv_raw(b)?))
    }

    pub(crate) fn pow_raw(&self, a: u64, k: u64) -> u64 {
        let c = &self.0;
        let order = c.size - 1;
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let k = if order == 0 { 0 } else { k % order };
        if let (Some(exp), Some(log)) = (&c.exp, &c.log) {
            let s = (log[a as usize] as u128 * k as u128 % order as u128) as u64;
            return exp[s as usize] as u64;
        }
        let mut acc = 1;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = mul_generic(c, acc, base);
            }
            base = mul_generic(c, base, base);
            k >>= 1;
        }
        acc
    }

    /// Coefficient vector of a raw value, length t.
    pub(crate) fn digits_raw(&self, val: u64) -> Vec<u64> {
        let c = &self.0;
        let mut out = Vec::with_capacity(c.t as usize);
        let mut v = val;
        for _ in 0..c.t {
            out.push(v % c.p);
            v /= c.p;
        }
        out
    }

    // Rank under the canonical element ordering (constant coefficient most
    // significant), used to pick deterministic representatives.
    fn rank_raw(&self, val: u64) -> u64 {
        let c = &self.0;
        let mut rank = 0;
        let mut v = val;
        for i in 0..c.t {
            rank += v % c.p * c.p_pows[(c.t - 1 - i) as usize];
            v /= c.p;
        }
        rank
    }

    /// The deterministic embedding of this field into `dst`.
    pub fn embedding_into(&self, dst: &Field) -> Result<Embedding> {
        Embedding::new(self, dst)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.t == other.0.t
                && self.0.modulus == other.0.modulus
                && self.0.generator == other.0.generator)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.t == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.t)
        }
    }
}

fn mul_generic(c: &FieldCore, a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    if c.t == 1 {
        return a * b % c.p;
    }
    if c.p == 2 {
        // Carry-less multiply, then reduce by the modulus bitmask.
        let mut prod: u64 = 0;
        let mut x = a;
        let mut y = b;
        while y != 0 {
            if y & 1 == 1 {
                prod ^= x;
            }
            x <<= 1;
            y >>= 1;
        }
        let t = c.t;
        let top = 63 - prod.leading_zeros();
        let mut d = top;
        while prod >> t != 0 {
            if prod >> d & 1 == 1 {
                prod ^= c.modulus_mask << (d - t);
            }
            d -= 1;
        }
        return prod;
    }
    let t = c.t as usize;
    let da = digits_of(c, a);
    let db = digits_of(c, b);
    let mut prod = vec![0u64; 2 * t - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % c.p;
        }
    }
    for i in (t..2 * t - 1).rev() {
        let coef = prod[i];
        if coef == 0 {
            continue;
        }
        for j in 0..t {
            let sub = coef * c.modulus[j] % c.p;
            prod[i - t + j] = (prod[i - t + j] + c.p - sub) % c.p;
        }
    }
    let mut val = 0;
    for i in 0..t {
        val += prod[i] * c.p_pows[i];
    }
    val
}

fn digits_of(c: &FieldCore, val: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(c.t as usize);
    let mut v = val;
    for _ in 0..c.t {
        out.push(v % c.p);
        v /= c.p;
    }
    out
}

// Remainder test for scalar coefficient vectors over GF(p); g monic.
fn divides(f: &[u64], g: &[u64], p: u64) -> bool {
    let d = g.len() - 1;
    let mut rem = f.to_vec();
    for i in (d..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        rem[i] = 0;
        for j in 0..d {
            let sub = c * g[j] % p;
            rem[i - d + j] = (rem[i - d + j] + p - sub) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}

fn irreducible(f: &[u64], p: u64) -> bool {
    let t = f.len() - 1;
    let mut g = vec![0u64; t / 2 + 1];
    for d in 1..=t / 2 {
        // All monic divisor candidates of degree d, low coefficients counting
        // up from zero.
        g[..d].iter_mut().for_each(|c| *c = 0);
        g[d] = 1;
        loop {
            if divides(f, &g[..=d], p) {
                return false;
            }
            let mut i = 0;
            loop {
                if i == d {
                    break;
                }
                g[i] += 1;
                if g[i] < p {
                    break;
                }
                g[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    true
}

fn build_core(p: u64, t: u32, size: u64) -> FieldCore {
    let mut p_pows = Vec::with_capacity(t as usize + 1);
    let mut acc = 1u64;
    for _ in 0..=t {
        p_pows.push(acc);
        acc = acc.saturating_mul(p);
    }
    let group_factors = distinct_prime_factors(size - 1);

    let mut core = FieldCore {
        p,
        t,
        size,
        modulus: Vec::new(),
        generator: 0,
        p_pows,
        group_factors,
        modulus_mask: 0,
        exp: None,
        log: None,
    };

    if t == 1 {
        let g = (1..p)
            .find(|&g| {
                core.group_factors
                    .iter()
                    .all(|&f| pow_mod(g, (p - 1) / f, p) != 1)
            })
            .expect("every prime field has a primitive root");
        core.generator = g;
        core.modulus = vec![(p - g) % p, 1];
    } else {
        // Lexicographically first monic irreducible of degree t, comparing
        // coefficient vectors from the constant term. Candidates with zero
        // constant term are divisible by x.
        let tt = t as usize;
        let mut found = None;
        'outer: for rank in 0..size {
            let mut f = vec![0u64; tt + 1];
            let mut r = rank;
            for i in (0..tt).rev() {
                f[i] = r % p;
                r /= p;
            }
            f[tt] = 1;
            if f[0] == 0 {
                continue;
            }
            if irreducible(&f, p) {
                found = Some(f);
                break 'outer;
            }
        }
        core.modulus = found.expect("an irreducible polynomial of every degree exists");
        if p == 2 {
            core.modulus_mask = core
                .modulus
                .iter()
                .enumerate()
                .fold(0, |m, (i, &c)| m | (c << i));
        }
        // First primitive element in canonical order.
        let mut gen = None;
        'search: for rank in 1..size {
            let mut val = 0;
            let mut r = rank;
            for i in (0..tt).rev() {
                val += r % p * core.p_pows[i];
                r /= p;
            }
            for &f in &core.group_factors {
                let mut acc = 1u64;
                let mut base = val;
                let mut k = (size - 1) / f;
                while k > 0 {
                    if k & 1 == 1 {
                        acc = mul_generic(&core, acc, base);
                    }
                    base = mul_generic(&core, base, base);
                    k >>= 1;
                }
                if acc == 1 {
                    continue 'search;
                }
            }
            gen = Some(val);
            break;
        }
        core.generator = gen.expect("the multiplicative group is cyclic");
    }

    if size <= TABLE_CAP {
        let order = (size - 1) as usize;
        let mut exp = vec![0u32; order.max(1)];
        let mut log = vec![u32::MAX; size as usize];
        let mut cur = 1u64;
        for i in 0..order {
            exp[i] = cur as u32;
            log[cur as usize] = i as u32;
            cur = mul_generic(&core, cur, core.generator);
        }
        debug_assert_eq!(cur, 1);
        core.exp = Some(exp);
        core.log = Some(log);
    }
    core
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

impl Element {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Canonical integer value, sum e_i p^i.
    pub fn value(&self) -> u64 {
        self.val
    }

    /// Coefficient vector [e_0, .., e_{t-1}].
    pub fn digits(&self) -> Vec<u64> {
        self.field.digits_raw(self.val)
    }

    pub fn is_zero(&self) -> bool {
        self.val == 0
    }

    pub fn inv(&self) -> Result<Element> {
        Ok(Element {
            field: self.field.clone(),
            val: self.field.inv_raw(self.val)?,
        })
    }

    pub fn div(&self, rhs: &Element) -> Result<Element> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        Ok(Element {
            field: self.field.clone(),
            val: self.field.div_raw(self.val, rhs.val)?,
        })
    }

    /// Raises to an integer power; negative exponents invert first.
    pub fn pow(&self, k: i64) -> Result<Element> {
        let (base, e) = if k < 0 {
            (self.field.inv_raw(self.val)?, k.unsigned_abs())
        } else {
            (self.val, k as u64)
        };
        Ok(Element {
            field: self.field.clone(),
            val: self.field.pow_raw(base, e),
        })
    }

    /// Multiplicative order; the zero element has none.
    pub fn order(&self) -> Result<u64> {
        if self.val == 0 {
            return Err(Error::ZeroElement);
        }
        let mut e = self.field.group_order();
        for &f in &self.field.0.group_factors {
            while e % f == 0 && self.field.pow_raw(self.val, e / f) == 1 {
                e /= f;
            }
        }
        Ok(e)
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.val == other.val
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.val, self.field)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.val)
    }
}

macro_rules! check_fields {
    ($a:expr, $b:expr) => {
        assert!(
            $a.field == $b.field,
            "elements of {} and {} cannot be combined",
            $a.field,
            $b.field
        );
    };
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        check_fields!(self, rhs);
        Element {
            field: self.field.clone(),
            val: self.field.add_raw(self.val, rhs.val),
        }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        check_fields!(self, rhs);
        Element {
            field: self.field.clone(),
            val: self.field.sub_raw(self.val, rhs.val),
        }
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        check_fields!(self, rhs);
        Element {
            field: self.field.clone(),
            val: self.field.mul_raw(self.val, rhs.val),
        }
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            field: self.field.clone(),
            val: self.field.neg_raw(self.val),
        }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        &self * &rhs
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Field homomorphism GF(p^t1) -> GF(p^t2) for t1 | t2.
///
/// The source generator maps to target_generator^((p^t2-1)/(p^t1-1)) when
/// that element is a conjugate of the source generator, and otherwise to the
/// canonically smallest root of the source generator's minimal polynomial in
/// the target. Either way the image generates the size-p^t1 subfield and the
/// map preserves addition, multiplication, and element order.
#[derive(Clone)]
pub struct Embedding {
    src: Field,
    dst: Field,
    identity: bool,
    table: Vec<u64>,
}

impl Embedding {
    pub fn new(src: &Field, dst: &Field) -> Result<Embedding> {
        let incompatible = || Error::IncompatibleFields {
            src_p: src.p(),
            src_t: src.t(),
            dst_p: dst.p(),
            dst_t: dst.t(),
        };
        if src.p() != dst.p() || dst.t() % src.t() != 0 {
            return Err(incompatible());
        }
        if src == dst {
            return Ok(Embedding {
                src: src.clone(),
                dst: dst.clone(),
                identity: true,
                table: Vec::new(),
            });
        }
        // Minimal polynomial of the source generator over the prime field:
        // the product of (x - g^(p^i)) has scalar coefficients.
        let t1 = src.t() as usize;
        let mut minpoly: Vec<u64> = vec![1];
        let mut conj = src.0.generator;
        for _ in 0..t1 {
            let mut next = vec![0u64; minpoly.len() + 1];
            for (i, &c) in minpoly.iter().enumerate() {
                next[i + 1] = src.add_raw(next[i + 1], c);
                next[i] = src.add_raw(next[i], src.mul_raw(src.neg_raw(conj), c));
            }
            minpoly = next;
            conj = src.pow_raw(conj, src.p());
        }
        assert!(
            minpoly.iter().all(|&c| c < src.p()),
            "generator minimal polynomial must have prime-field coefficients"
        );

        let m = (dst.size() - 1) / (src.size() - 1);
        let eval = |y: u64| -> u64 {
            let mut acc = 0u64;
            for &c in minpoly.iter().rev() {
                acc = dst.add_raw(dst.mul_raw(acc, y), c);
            }
            acc
        };
        let h = dst.pow_raw(dst.0.generator, m);
        let image = if eval(h) == 0 {
            h
        } else {
            let mut best: Option<(u64, u64)> = None;
            let mut y = 1u64;
            for _ in 0..src.size() - 1 {
                if eval(y) == 0 {
                    let rank = dst.rank_raw(y);
                    if best.map_or(true, |(r, _)| rank < r) {
                        best = Some((rank, y));
                    }
                }
                y = dst.mul_raw(y, h);
            }
            best.expect("the subfield contains the generator's conjugates").1
        };

        // Walk src powers g^i alongside dst powers image^i.
        let mut table = vec![0u64; src.size() as usize];
        let order = (src.size() - 1) as usize;
        let mut dst_cur = 1u64;
        let mut src_cur = 1u64;
        for _ in 0..order {
            table[src_cur as usize] = dst_cur;
            src_cur = src.mul_raw(src_cur, src.0.generator);
            dst_cur = dst.mul_raw(dst_cur, image);
        }
        Ok(Embedding {
            src: src.clone(),
            dst: dst.clone(),
            identity: false,
            table,
        })
    }

    pub fn src(&self) -> &Field {
        &self.src
    }

    pub fn dst(&self) -> &Field {
        &self.dst
    }

    pub fn apply(&self, x: &Element) -> Element {
        assert!(x.field == self.src, "element is not in the source field");
        Element {
            field: self.dst.clone(),
            val: self.apply_raw(x.val),
        }
    }

    pub(crate) fn apply_raw(&self, v: u64) -> u64 {
        if self.identity {
            v
        } else {
            self.table[v as usize]
        }
    }

    /// Pulls a target value back to the source field if it lies in the image.
    pub(crate) fn preimage_raw(&self, v: u64) -> Option<u64> {
        if self.identity {
            return Some(v);
        }
        self.table.iter().position(|&w| w == v).map(|i| i as u64)
    }

    pub fn preimage(&self, y: &Element) -> Option<Element> {
        assert!(y.field == self.dst, "element is not in the target field");
        self.preimage_raw(y.val).map(|val| Element {
            field: self.src.clone(),
            val,
        })
    }
}
