//! Finite-field arithmetic for GF(p) and small extensions GF(p^m).
//!
//! Elements of GF(p^m) are residues of degree < m modulo a monic irreducible
//! polynomial, packed into a single `u64` as base-p digits (low coefficient in
//! the least significant digit). Fields of order up to 256 precompute dense
//! multiplication and inverse tables.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::Error;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Orders up to this get dense multiplication/inverse tables.
const TABLE_LIMIT: u64 = 256;

#[derive(Debug)]
struct FieldInner {
    p: u64,
    m: usize,
    q: u64,
    /// Monic irreducible modulus, low-to-high coefficients, length m+1.
    modulus: Vec<u64>,
    /// p^0 ..= p^m
    pows: Vec<u64>,
    mul_table: Option<Vec<u64>>,
    inv_table: Option<Vec<u64>>,
}

/// A finite field GF(p^m) with a fixed monic irreducible modulus.
///
/// The handle is cheap to clone; all operations are pure, so a `Field` can be
/// shared freely between threads.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.m == other.0.m
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl Field {
    /// Builds GF(p^m). When `modulus` is omitted, degree 1 uses `x` and the
    /// extensions GF(4), GF(8), GF(9) use built-in irreducible polynomials;
    /// any other extension requires an explicit modulus (low-to-high
    /// coefficients, length m+1). Irreducibility is checked eagerly by trial
    /// division against all monic polynomials of degree at most m/2.
    pub fn new(p: u64, m: usize, modulus: Option<&[u64]>) -> Result<Field, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m < 1 {
            return Err(Error::BadDegree);
        }
        let mut q: u64 = 1;
        let mut pows = Vec::with_capacity(m + 1);
        for _ in 0..=m {
            pows.push(q);
            q = q.checked_mul(p).ok_or(Error::FieldTooLarge)?;
            if q > MAX_FIELD_ORDER {
                return Err(Error::FieldTooLarge);
            }
        }
        let q = pows[m];

        let modulus = match modulus {
            Some(coeffs) => {
                if coeffs.len() != m + 1 || coeffs[m] != 1 || coeffs.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus { expected: m });
                }
                coeffs.to_vec()
            }
            None => builtin_modulus(p, m).ok_or(Error::MissingModulus { p, m })?,
        };

        if m >= 2 {
            if let Some(factor) = find_monic_factor(&modulus, p) {
                return Err(Error::ReducibleModulus {
                    factor: poly_to_string(&factor),
                });
            }
        }

        let mut inner = FieldInner {
            p,
            m,
            q,
            modulus,
            pows,
            mul_table: None,
            inv_table: None,
        };
        if q <= TABLE_LIMIT {
            let mut mul = vec![0u64; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    mul[(a * q + b) as usize] = inner.mul_slow(a, b);
                }
            }
            let mut inv = vec![0u64; q as usize];
            for a in 1..q {
                inv[a as usize] = inner.inv_slow(a);
            }
            inner.mul_table = Some(mul);
            inner.inv_table = Some(inv);
        }
        Ok(Field(Arc::new(inner)))
    }

    /// Builds the field of the given order q = p^m, using built-in moduli.
    pub fn of_order(q: u64) -> Result<Field, Error> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let mut p = 2;
        while p * p <= q && !q.is_multiple_of(p) {
            p += 1;
        }
        if !q.is_multiple_of(p) {
            p = q; // q itself is prime
        }
        let mut m = 0usize;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            m += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        Field::new(p, m, None)
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.m
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients, low-to-high.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// For a field of order q^2, the subfield order q. Errors when the
    /// extension degree is odd.
    pub fn hermitian_subfield_order(&self) -> Result<u64, Error> {
        if !self.0.m.is_multiple_of(2) {
            return Err(Error::NonSquareOrder(self.0.q));
        }
        Ok(self.0.pows[self.0.m / 2])
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    /// The residue of the modulus variable (`w` in the literal syntax).
    /// Only defined for proper extensions.
    pub fn generator(&self) -> Result<FieldElement, Error> {
        if self.0.m < 2 {
            return Err(Error::BadDegree);
        }
        Ok(self.elem(self.0.p))
    }

    /// Embeds an integer as the constant k mod p.
    pub fn scalar(&self, k: u64) -> FieldElement {
        self.elem(k % self.0.p)
    }

    /// Builds an element from its coefficient list (low-to-high, length <= m).
    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement, Error> {
        if coeffs.len() > self.0.m || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::BadModulus {
                expected: self.0.m,
            });
        }
        let mut val = 0;
        for &c in coeffs.iter().rev() {
            val = val * self.0.p + c;
        }
        Ok(self.elem(val))
    }

    /// All q field elements in raw-value order (0, 1, ..., q-1).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |v| self.elem(v))
    }

    pub(crate) fn elem(&self, val: u64) -> FieldElement {
        debug_assert!(val < self.0.q);
        FieldElement {
            field: self.clone(),
            val,
        }
    }

    pub(crate) fn require_same(&self, other: &Field) -> Result<(), Error> {
        if self == other {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    #[inline]
    pub(crate) fn add_raw(&self, a: u64, b: u64) -> u64 {
        let f = &*self.0;
        if f.p == 2 {
            return a ^ b;
        }
        if f.m == 1 {
            return (a + b) % f.p;
        }
        let (mut out, mut mult, mut av, mut bv) = (0, 1, a, b);
        for _ in 0..f.m {
            out += (av % f.p + bv % f.p) % f.p * mult;
            mult *= f.p;
            av /= f.p;
            bv /= f.p;
        }
        out
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u64) -> u64 {
        let f = &*self.0;
        if f.p == 2 {
            return a;
        }
        if f.m == 1 {
            return (f.p - a) % f.p;
        }
        let (mut out, mut mult, mut av) = (0, 1, a);
        for _ in 0..f.m {
            out += (f.p - av % f.p) % f.p * mult;
            mult *= f.p;
            av /= f.p;
        }
        out
    }

    #[inline]
    pub(crate) fn sub_raw(&self, a: u64, b: u64) -> u64 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u64, b: u64) -> u64 {
        let f = &*self.0;
        if let Some(t) = &f.mul_table {
            return t[(a * f.q + b) as usize];
        }
        f.mul_slow(a, b)
    }

    /// Inverse of a nonzero raw value. Panics on zero; callers check.
    pub(crate) fn inv_raw(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no inverse");
        let f = &*self.0;
        if let Some(t) = &f.inv_table {
            return t[a as usize];
        }
        f.inv_slow(a)
    }

    pub(crate) fn pow_raw(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    /// Checks that `q_pow` is p^k with k <= m.
    pub(crate) fn check_char_power(&self, q_pow: u64) -> Result<(), Error> {
        if self.0.pows.contains(&q_pow) {
            Ok(())
        } else {
            Err(Error::NotCharPower(q_pow))
        }
    }

    /// Canonical literal for a raw value, e.g. `0`, `2`, `w`, `w+1`, `2*w^2+1`.
    pub(crate) fn format_raw(&self, val: u64) -> String {
        let f = &*self.0;
        if f.m == 1 {
            return val.to_string();
        }
        let mut parts = Vec::new();
        for i in (0..f.m).rev() {
            let c = val / f.pows[i] % f.p;
            if c == 0 {
                continue;
            }
            let part = match (i, c) {
                (0, _) => c.to_string(),
                (1, 1) => "w".to_string(),
                (1, _) => format!("{c}*w"),
                (_, 1) => format!("w^{i}"),
                (_, _) => format!("{c}*w^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

impl FieldInner {
    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        if self.m == 1 {
            return a * b % self.p;
        }
        let m = self.m;
        let mut conv = vec![0u64; 2 * m - 1];
        let mut av = a;
        for i in 0..m {
            let da = av % self.p;
            av /= self.p;
            if da == 0 {
                continue;
            }
            let mut bv = b;
            for (j, slot) in conv[i..i + m].iter_mut().enumerate() {
                let _ = j;
                let db = bv % self.p;
                bv /= self.p;
                *slot = (*slot + da * db) % self.p;
            }
        }
        // Fold x^i for i >= m back down using the monic modulus.
        for i in (m..2 * m - 1).rev() {
            let c = conv[i];
            if c == 0 {
                continue;
            }
            conv[i] = 0;
            for j in 0..m {
                if self.modulus[j] != 0 {
                    let s = c * self.modulus[j] % self.p;
                    conv[i - m + j] = (conv[i - m + j] + self.p - s) % self.p;
                }
            }
        }
        let mut val = 0;
        for &c in conv[..m].iter().rev() {
            val = val * self.p + c;
        }
        val
    }

    fn inv_slow(&self, a: u64) -> u64 {
        assert!(a != 0);
        if self.m == 1 {
            return int_pow_mod(a, self.p - 2, self.p);
        }
        // Extended Euclid over GF(p)[x] against the modulus.
        let mut r0 = self.modulus.clone();
        let mut r1 = self.decode_poly(a);
        let mut t0: Vec<u64> = vec![];
        let mut t1: Vec<u64> = vec![1];
        while poly_deg(&r1).unwrap_or(0) >= 1 {
            let (quot, rem) = poly_divmod(&r0, &r1, self.p);
            r0 = std::mem::replace(&mut r1, rem);
            let qt1 = poly_mul(&quot, &t1, self.p);
            let next = poly_sub(&t0, &qt1, self.p);
            t0 = std::mem::replace(&mut t1, next);
        }
        let c = *r1.first().expect("modulus is irreducible and a is nonzero");
        let scale = int_pow_mod(c, self.p - 2, self.p);
        let mut val = 0;
        for i in (0..self.m).rev() {
            let coeff = t1.get(i).copied().unwrap_or(0) * scale % self.p;
            val = val * self.p + coeff;
        }
        val
    }

    fn decode_poly(&self, mut val: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            out.push(val % self.p);
            val /= self.p;
        }
        poly_trim(&mut out);
        out
    }
}

/// A scalar of a particular [`Field`].
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: Field,
    val: u64,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.val == 0
    }

    /// Coefficients of the residue, low-to-high, length m.
    pub fn coeffs(&self) -> Vec<u64> {
        let f = &*self.field.0;
        let mut v = self.val;
        (0..f.m)
            .map(|_| {
                let c = v % f.p;
                v /= f.p;
                c
            })
            .collect()
    }

    pub(crate) fn raw(&self) -> u64 {
        self.val
    }

    pub fn checked_add(&self, rhs: &FieldElement) -> Result<FieldElement, Error> {
        self.field.require_same(&rhs.field)?;
        Ok(self.field.elem(self.field.add_raw(self.val, rhs.val)))
    }

    pub fn checked_sub(&self, rhs: &FieldElement) -> Result<FieldElement, Error> {
        self.field.require_same(&rhs.field)?;
        Ok(self.field.elem(self.field.sub_raw(self.val, rhs.val)))
    }

    pub fn checked_mul(&self, rhs: &FieldElement) -> Result<FieldElement, Error> {
        self.field.require_same(&rhs.field)?;
        Ok(self.field.elem(self.field.mul_raw(self.val, rhs.val)))
    }

    pub fn negated(&self) -> FieldElement {
        self.field.elem(self.field.neg_raw(self.val))
    }

    pub fn inv(&self) -> Result<FieldElement, Error> {
        if self.val == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.field.elem(self.field.inv_raw(self.val)))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.field.elem(self.field.pow_raw(self.val, e))
    }

    /// The q-power map a -> a^q for q a power of the characteristic.
    pub fn frobenius(&self, q_pow: u64) -> Result<FieldElement, Error> {
        self.field.check_char_power(q_pow)?;
        Ok(self.pow(q_pow))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.val == other.val
    }
}

impl Eq for FieldElement {}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_raw(self.val))
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("elements of different fields")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("elements of different fields")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("elements of different fields")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.negated()
    }
}

fn builtin_modulus(p: u64, m: usize) -> Option<Vec<u64>> {
    match (p, m) {
        (_, 1) => Some(vec![0, 1]),
        (2, 2) => Some(vec![1, 1, 1]),    // x^2 + x + 1
        (2, 3) => Some(vec![1, 1, 0, 1]), // x^3 + x + 1
        (3, 2) => Some(vec![1, 0, 1]),    // x^2 + 1
        _ => None,
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn int_pow_mod(a: u64, mut e: u64, p: u64) -> u64 {
    let mut base = a % p;
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Searches for a monic factor of degree in 1..=deg/2 by trial division.
fn find_monic_factor(modulus: &[u64], p: u64) -> Option<Vec<u64>> {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for k in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut kv = k;
            for _ in 0..d {
                cand.push(kv % p);
                kv /= p;
            }
            cand.push(1);
            let (_, rem) = poly_divmod(modulus, &cand, p);
            if rem.is_empty() {
                return Some(cand);
            }
        }
    }
    None
}

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_deg(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for (i, slot) in out.iter_mut().enumerate() {
        let av = a.get(i).copied().unwrap_or(0);
        let bv = b.get(i).copied().unwrap_or(0);
        *slot = (av + p - bv) % p;
    }
    poly_trim(&mut out);
    out
}

/// Division with remainder in GF(p)[x]; the divisor must be nonzero.
fn poly_divmod(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let dd = poly_deg(den).expect("division by the zero polynomial");
    let lead_inv = int_pow_mod(den[dd], p - 2, p);
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let mut quot = vec![0u64; rem.len().saturating_sub(dd)];
    while let Some(rd) = poly_deg(&rem) {
        if rd < dd {
            break;
        }
        let coeff = rem[rd] * lead_inv % p;
        let shift = rd - dd;
        quot[shift] = coeff;
        for (j, &dj) in den.iter().enumerate() {
            let s = coeff * dj % p;
            rem[shift + j] = (rem[shift + j] + p - s) % p;
        }
        poly_trim(&mut rem);
    }
    poly_trim(&mut quot);
    (quot, rem)
}

fn poly_to_string(poly: &[u64]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in poly.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match (i, c) {
            (0, _) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, _) => format!("{c}*x"),
            (_, 1) => format!("x^{i}"),
            (_, _) => format!("{c}*x^{i}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f2 = Field::new(2, 1, None).unwrap();
        assert_eq!(f2.order(), 2);
        let one = f2.one();
        assert!(one.checked_add(&one).unwrap().is_zero());

        let f7 = Field::new(7, 1, None).unwrap();
        let three = f7.scalar(3);
        assert_eq!(three.inv().unwrap(), f7.scalar(5));
    }

    #[test]
    fn gf4_built_in_modulus() {
        let f4 = Field::new(2, 2, None).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let w = f4.generator().unwrap();
        let w_plus_1 = w.checked_add(&f4.one()).unwrap();
        assert_eq!(w.checked_mul(&w).unwrap(), w_plus_1);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x+1)^2 over GF(2)
        let err = Field::new(2, 2, Some(&[1, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::ReducibleModulus { .. }));
    }

    #[test]
    fn non_prime_and_missing_modulus_rejected() {
        assert!(matches!(Field::new(6, 1, None), Err(Error::NotPrime(6))));
        assert!(matches!(
            Field::new(5, 2, None),
            Err(Error::MissingModulus { .. })
        ));
        assert!(matches!(Field::of_order(12), Err(Error::NotPrimePower(12))));
    }

    #[test]
    fn of_order_factors_prime_powers() {
        assert_eq!(Field::of_order(9).unwrap().characteristic(), 3);
        assert_eq!(Field::of_order(8).unwrap().degree(), 3);
        assert_eq!(Field::of_order(13).unwrap().degree(), 1);
    }

    #[test]
    fn frobenius_examples() {
        let f2 = Field::of_order(2).unwrap();
        assert_eq!(f2.one().frobenius(2).unwrap(), f2.one());

        let f4 = Field::of_order(4).unwrap();
        let w = f4.generator().unwrap();
        let w1 = w.checked_add(&f4.one()).unwrap();
        assert_eq!(w.frobenius(2).unwrap(), w1);
        assert_eq!(w.frobenius(2).unwrap().frobenius(2).unwrap(), w);
        assert!(matches!(w.frobenius(3), Err(Error::NotCharPower(3))));
    }

    #[test]
    fn mixed_field_operations_rejected() {
        let f2 = Field::of_order(2).unwrap();
        let f3 = Field::of_order(3).unwrap();
        assert!(matches!(
            f2.one().checked_add(&f3.one()),
            Err(Error::MixedFields)
        ));
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        let mut fields = vec![
            Field::of_order(2).unwrap(),
            Field::of_order(3).unwrap(),
            Field::of_order(4).unwrap(),
            Field::of_order(5).unwrap(),
            Field::of_order(7).unwrap(),
            Field::of_order(8).unwrap(),
            Field::of_order(9).unwrap(),
            Field::of_order(11).unwrap(),
            Field::of_order(13).unwrap(),
        ];
        // GF(16) needs a user-supplied modulus: x^4 + x + 1.
        fields.push(Field::new(2, 4, Some(&[1, 1, 0, 0, 1])).unwrap());

        for f in &fields {
            let q = f.order();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        a.checked_add(&b).unwrap(),
                        b.checked_add(&a).unwrap()
                    );
                    assert_eq!(
                        a.checked_mul(&b).unwrap(),
                        b.checked_mul(&a).unwrap()
                    );
                    for c in f.elements() {
                        // (a+b)+c = a+(b+c), (ab)c = a(bc), a(b+c) = ab+ac
                        assert_eq!(
                            a.checked_add(&b).unwrap().checked_add(&c).unwrap(),
                            a.checked_add(&b.checked_add(&c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.checked_mul(&b).unwrap().checked_mul(&c).unwrap(),
                            a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.checked_mul(&b.checked_add(&c).unwrap()).unwrap(),
                            a.checked_mul(&b)
                                .unwrap()
                                .checked_add(&a.checked_mul(&c).unwrap())
                                .unwrap()
                        );
                    }
                }
                if !a.is_zero() {
                    assert_eq!(a.checked_mul(&a.inv().unwrap()).unwrap(), f.one());
                }
                assert_eq!(a.checked_add(&a.negated()).unwrap(), f.zero());
            }
            // Frobenius by the characteristic is an automorphism.
            let p = f.characteristic();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        a.checked_add(&b).unwrap().frobenius(p).unwrap(),
                        a.frobenius(p)
                            .unwrap()
                            .checked_add(&b.frobenius(p).unwrap())
                            .unwrap()
                    );
                    assert_eq!(
                        a.checked_mul(&b).unwrap().frobenius(p).unwrap(),
                        a.frobenius(p)
                            .unwrap()
                            .checked_mul(&b.frobenius(p).unwrap())
                            .unwrap()
                    );
                }
            }
            let _ = q;
        }
    }

    #[test]
    fn frobenius_involution_on_quadratic_extensions() {
        for f in [Field::of_order(4).unwrap(), Field::of_order(9).unwrap()] {
            let q = f.hermitian_subfield_order().unwrap();
            for a in f.elements() {
                let twice = a.frobenius(q).unwrap().frobenius(q).unwrap();
                assert_eq!(twice, a);
            }
        }
    }

    #[test]
    fn literal_formatting() {
        let f9 = Field::of_order(9).unwrap();
        let w = f9.generator().unwrap();
        assert_eq!(w.to_string(), "w");
        let two_w = w.checked_add(&w).unwrap();
        assert_eq!(two_w.to_string(), "2*w");
        assert_eq!(f9.zero().to_string(), "0");
        let f4 = Field::of_order(4).unwrap();
        let w1 = f4.generator().unwrap().checked_add(&f4.one()).unwrap();
        assert_eq!(w1.to_string(), "w+1");
    }
}
