//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored low degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and `degree` is `None` for it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{Element, Embedding, Field};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    // Raw element values, low degree first, trimmed.
    coeffs: Vec<u64>,
}

fn trim(coeffs: &mut Vec<u64>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

impl Poly {
    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![1] }
    }

    pub fn x(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![0, 1] }
    }

    /// c * x^d.
    pub fn monomial(c: &Element, d: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero(c.field());
        }
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c.value();
        Poly { field: c.field().clone(), coeffs }
    }

    /// x^n - 1.
    pub fn x_pow_minus_one(field: &Field, n: usize) -> Poly {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg_raw(1);
        coeffs[n] = 1;
        Poly { field: field.clone(), coeffs }
    }

    pub fn from_coeffs(field: &Field, coeffs: &[Element]) -> Result<Poly> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let mut raw: Vec<u64> = coeffs.iter().map(|c| c.value()).collect();
        trim(&mut raw);
        Ok(Poly { field: field.clone(), coeffs: raw })
    }

    /// From canonical integer values, low degree first.
    pub fn from_values(field: &Field, values: &[u64]) -> Result<Poly> {
        if values.iter().any(|&v| v >= field.size()) {
            return Err(Error::BadParameter(format!(
                "coefficient out of range for {}",
                field
            )));
        }
        let mut raw = values.to_vec();
        trim(&mut raw);
        Ok(Poly { field: field.clone(), coeffs: raw })
    }

    pub(crate) fn from_raw(field: &Field, mut coeffs: Vec<u64>) -> Poly {
        trim(&mut coeffs);
        Poly { field: field.clone(), coeffs }
    }

    /// Product of (x - r) over the given roots.
    pub fn from_roots(field: &Field, roots: &[Element]) -> Result<Poly> {
        if roots.iter().any(|r| r.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let mut acc = vec![1u64];
        for r in roots {
            let neg_r = field.neg_raw(r.value());
            let mut next = vec![0u64; acc.len() + 1];
            for (i, &c) in acc.iter().enumerate() {
                next[i + 1] = field.add_raw(next[i + 1], c);
                next[i] = field.add_raw(next[i], field.mul_raw(neg_r, c));
            }
            acc = next;
        }
        Ok(Poly { field: field.clone(), coeffs: acc })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Element {
        let val = self.coeffs.get(i).copied().unwrap_or(0);
        self.field.element(val).unwrap()
    }

    /// Raw coefficient values, low degree first, trimmed.
    pub fn coeff_values(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<Element> {
        self.coeffs
            .last()
            .map(|&v| self.field.element(v).unwrap())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Result<Poly> {
        let lead = *self.coeffs.last().ok_or(Error::ZeroPolyDivision)?;
        if lead == 1 {
            return Ok(self.clone());
        }
        let inv = self.field.inv_raw(lead)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| self.field.mul_raw(c, inv))
            .collect();
        Ok(Poly { field: self.field.clone(), coeffs })
    }

    pub fn scale(&self, c: &Element) -> Poly {
        assert!(c.field() == &self.field, "scalar from a different field");
        if c.is_zero() {
            return Poly::zero(&self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|&v| self.field.mul_raw(v, c.value()))
            .collect();
        Poly { field: self.field.clone(), coeffs }
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        if self.field != divisor.field {
            return Err(Error::FieldMismatch);
        }
        let d = divisor.coeffs.len().checked_sub(1).ok_or(Error::ZeroPolyDivision)?;
        if self.coeffs.len() <= d {
            return Ok((Poly::zero(&self.field), self.clone()));
        }
        let f = &self.field;
        let lead_inv = f.inv_raw(divisor.coeffs[d])?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len() - d];
        for i in (d..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let q = f.mul_raw(c, lead_inv);
            quot[i - d] = q;
            for j in 0..=d {
                let sub = f.mul_raw(q, divisor.coeffs[j]);
                rem[i - d + j] = f.sub_raw(rem[i - d + j], sub);
            }
        }
        rem.truncate(d);
        trim(&mut rem);
        trim(&mut quot);
        Ok((
            Poly { field: f.clone(), coeffs: quot },
            Poly { field: f.clone(), coeffs: rem },
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    pub fn eval(&self, x: &Element) -> Element {
        assert!(x.field() == &self.field, "evaluation point from a different field");
        let f = &self.field;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = f.add_raw(f.mul_raw(acc, x.value()), c);
        }
        f.element(acc).unwrap()
    }

    /// Evaluates at a point of a larger field, mapping the coefficients
    /// through the embedding.
    pub fn eval_via(&self, emb: &Embedding, x: &Element) -> Element {
        assert!(emb.src() == &self.field, "embedding source mismatch");
        assert!(x.field() == emb.dst(), "evaluation point not in the target field");
        let f = emb.dst();
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = f.add_raw(f.mul_raw(acc, x.value()), emb.apply_raw(c));
        }
        f.element(acc).unwrap()
    }

    /// Maps every coefficient through the embedding.
    pub fn lift_via(&self, emb: &Embedding) -> Poly {
        assert!(emb.src() == &self.field, "embedding source mismatch");
        let coeffs = self.coeffs.iter().map(|&c| emb.apply_raw(c)).collect();
        Poly { field: emb.dst().clone(), coeffs }
    }

    /// Product reduced modulo x^n - 1 (exponents fold mod n).
    pub fn mul_mod_cyclic(&self, other: &Poly, n: usize) -> Result<Poly> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let mut out = vec![0u64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let k = (i + j) % n;
                out[k] = f.add_raw(out[k], f.mul_raw(a, b));
            }
        }
        trim(&mut out);
        Ok(Poly { field: f.clone(), coeffs: out })
    }

    /// First `len` coefficients of the power series num/den; requires a unit
    /// constant term in the denominator.
    pub fn series_quotient(num: &Poly, den: &Poly, len: usize) -> Result<Vec<Element>> {
        if num.field != den.field {
            return Err(Error::FieldMismatch);
        }
        let f = &num.field;
        let d0 = den.coeffs.first().copied().unwrap_or(0);
        if d0 == 0 {
            return Err(Error::SingularSeries);
        }
        let d0_inv = f.inv_raw(d0)?;
        let mut series = vec![0u64; len];
        for k in 0..len {
            let mut acc = num.coeffs.get(k).copied().unwrap_or(0);
            for j in 1..=k.min(den.coeffs.len().saturating_sub(1)) {
                let sub = f.mul_raw(den.coeffs[j], series[k - j]);
                acc = f.sub_raw(acc, sub);
            }
            series[k] = f.mul_raw(acc, d0_inv);
        }
        Ok(series
            .into_iter()
            .map(|v| f.element(v).unwrap())
            .collect())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "polynomials over different fields");
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            out.push(f.add_raw(a, b));
        }
        trim(&mut out);
        Poly { field: f.clone(), coeffs: out }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg_raw(c)).collect();
        Poly { field: self.field.clone(), coeffs }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "polynomials over different fields");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                out[i + j] = f.add_raw(out[i + j], f.mul_raw(a, b));
            }
        }
        Poly { field: f.clone(), coeffs: out }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, i) {
                (_, 0) => write!(f, "{}", c)?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "x^{}", i)?,
                (_, 1) => write!(f, "{}x", c)?,
                (_, _) => write!(f, "{}x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
