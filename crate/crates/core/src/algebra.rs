//! Elements of the group algebra KG and the operations on them: the
//! convolution product, the adjoint (hat) map, Hamming weight, the Euclidean
//! and Hermitian bilinear forms, and idempotency/centrality tests.
//!
//! An element a = sum over g of a_g * g is stored as the dense coefficient
//! vector indexed by group-element index; KG is identified with K^|G| through
//! that basis.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::Error;
use crate::expr;
use crate::field::{Field, FieldElement};
use crate::group::Group;

/// An element of the group algebra KG, immutable once built.
#[derive(Clone)]
pub struct AlgebraElement {
    field: Field,
    group: Group,
    coeffs: Vec<u64>,
}

impl AlgebraElement {
    pub fn zero(field: &Field, group: &Group) -> AlgebraElement {
        AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs: vec![0; group.order()],
        }
    }

    /// The unit of KG: coefficient 1 at the identity.
    pub fn one(field: &Field, group: &Group) -> AlgebraElement {
        let mut e = AlgebraElement::zero(field, group);
        e.coeffs[0] = 1;
        e
    }

    /// The group element of the given index as an algebra element.
    pub fn basis(field: &Field, group: &Group, index: usize) -> AlgebraElement {
        assert!(index < group.order());
        let mut e = AlgebraElement::zero(field, group);
        e.coeffs[index] = 1;
        e
    }

    /// The sum of all group elements.
    pub fn group_sum(field: &Field, group: &Group) -> AlgebraElement {
        AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs: vec![1; group.order()],
        }
    }

    pub fn from_coeffs(
        field: &Field,
        group: &Group,
        coeffs: &[FieldElement],
    ) -> Result<AlgebraElement, Error> {
        if coeffs.len() != group.order() {
            return Err(Error::AmbientMismatch);
        }
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            field.require_same(c.field())?;
            raw.push(c.raw());
        }
        Ok(AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs: raw,
        })
    }

    pub(crate) fn from_raw(field: &Field, group: &Group, coeffs: Vec<u64>) -> AlgebraElement {
        debug_assert_eq!(coeffs.len(), group.order());
        AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs,
        }
    }

    /// Parses an element expression such as `1 + a + a^2*b` or `(w+1)*x1`.
    pub fn parse(field: &Field, group: &Group, src: &str) -> Result<AlgebraElement, Error> {
        expr::parse_element(field, group, src)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coeff(&self, index: usize) -> FieldElement {
        self.field.elem(self.coeffs[index])
    }

    pub(crate) fn raw_coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn require_same_ambient(&self, other: &AlgebraElement) -> Result<(), Error> {
        if self.field != other.field || self.group != other.group {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &AlgebraElement) -> Result<AlgebraElement, Error> {
        self.require_same_ambient(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| self.field.add_raw(a, b))
            .collect();
        Ok(AlgebraElement::from_raw(&self.field, &self.group, coeffs))
    }

    pub fn checked_sub(&self, rhs: &AlgebraElement) -> Result<AlgebraElement, Error> {
        self.require_same_ambient(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| self.field.sub_raw(a, b))
            .collect();
        Ok(AlgebraElement::from_raw(&self.field, &self.group, coeffs))
    }

    pub fn negated(&self) -> AlgebraElement {
        let coeffs = self.coeffs.iter().map(|&a| self.field.neg_raw(a)).collect();
        AlgebraElement::from_raw(&self.field, &self.group, coeffs)
    }

    pub fn scale(&self, s: &FieldElement) -> Result<AlgebraElement, Error> {
        self.field.require_same(s.field())?;
        let sv = s.raw();
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| self.field.mul_raw(a, sv))
            .collect();
        Ok(AlgebraElement::from_raw(&self.field, &self.group, coeffs))
    }

    /// The algebra product: the coefficient of g in a*b is
    /// sum over h of a_h * b_{h^-1 g}.
    pub fn checked_mul(&self, rhs: &AlgebraElement) -> Result<AlgebraElement, Error> {
        self.require_same_ambient(rhs)?;
        let n = self.group.order();
        let mut out = vec![0u64; n];
        for h in 0..n {
            let ah = self.coeffs[h];
            if ah == 0 {
                continue;
            }
            for k in 0..n {
                let bk = rhs.coeffs[k];
                if bk == 0 {
                    continue;
                }
                let g = self.group.mul(h, k);
                out[g] = self.field.add_raw(out[g], self.field.mul_raw(ah, bk));
            }
        }
        Ok(AlgebraElement::from_raw(&self.field, &self.group, out))
    }

    /// The adjoint: coefficient a_g moves to g^-1. A pure coordinate
    /// permutation of K^|G|, and an anti-automorphism of KG.
    pub fn adjoint(&self) -> AlgebraElement {
        let n = self.group.order();
        let mut out = vec![0u64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[self.group.inverse(i)] = c;
        }
        AlgebraElement::from_raw(&self.field, &self.group, out)
    }

    /// Coefficientwise q-power map for q a power of the characteristic.
    pub fn frobenius(&self, q_pow: u64) -> Result<AlgebraElement, Error> {
        self.field.check_char_power(q_pow)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| self.field.pow_raw(c, q_pow))
            .collect();
        Ok(AlgebraElement::from_raw(&self.field, &self.group, coeffs))
    }

    /// Number of group elements with nonzero coefficient.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// The Euclidean form: sum over g of a_g * b_g.
    pub fn euclidean_form(&self, rhs: &AlgebraElement) -> Result<FieldElement, Error> {
        self.require_same_ambient(rhs)?;
        let mut acc = 0;
        for (&a, &b) in self.coeffs.iter().zip(&rhs.coeffs) {
            acc = self.field.add_raw(acc, self.field.mul_raw(a, b));
        }
        Ok(self.field.elem(acc))
    }

    /// The Hermitian form over GF(q^2): sum over g of a_g * b_g^q.
    pub fn hermitian_form(&self, rhs: &AlgebraElement, q: u64) -> Result<FieldElement, Error> {
        self.require_same_ambient(rhs)?;
        let order = self.field.order();
        if q.checked_mul(q) != Some(order) {
            return Err(Error::HermitianOrder { q, order });
        }
        let mut acc = 0;
        for (&a, &b) in self.coeffs.iter().zip(&rhs.coeffs) {
            acc = self
                .field
                .add_raw(acc, self.field.mul_raw(a, self.field.pow_raw(b, q)));
        }
        Ok(self.field.elem(acc))
    }

    pub fn is_idempotent(&self) -> bool {
        self.checked_mul(self).expect("same ambient") == *self
    }

    /// Whether the element commutes with every group basis element (and so,
    /// by bilinearity, with all of KG).
    pub fn is_central(&self) -> bool {
        let n = self.group.order();
        (0..n).all(|j| self.right_translate(j) == self.left_translate(j))
    }

    /// a * g for the group element of index j.
    pub(crate) fn right_translate(&self, j: usize) -> AlgebraElement {
        let n = self.group.order();
        let mut out = vec![0u64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                out[self.group.mul(i, j)] = c;
            }
        }
        AlgebraElement::from_raw(&self.field, &self.group, out)
    }

    /// g * a for the group element of index j.
    pub(crate) fn left_translate(&self, j: usize) -> AlgebraElement {
        let n = self.group.order();
        let mut out = vec![0u64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                out[self.group.mul(j, i)] = c;
            }
        }
        AlgebraElement::from_raw(&self.field, &self.group, out)
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.group == other.group && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

impl fmt::Display for AlgebraElement {
    /// Canonical printing mirrors the expression grammar: terms in group
    /// index order, zero coefficients omitted, `0` for the zero element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let lit = self.field.format_raw(c);
            let needs_paren = lit.contains('+') || lit.contains('-');
            let lit = if needs_paren { format!("({lit})") } else { lit };
            if i == 0 {
                terms.push(lit);
            } else if c == 1 {
                terms.push(self.group.label(i).to_string());
            } else {
                terms.push(format!("{}*{}", lit, self.group.label(i)));
            }
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("elements of different algebras")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_sub(rhs).expect("elements of different algebras")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_mul(rhs).expect("elements of different algebras")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Field {
        Field::of_order(2).unwrap()
    }

    fn c7() -> Group {
        Group::cyclic(7).unwrap()
    }

    fn d14() -> Group {
        Group::dihedral(7).unwrap()
    }

    /// The order-14 dihedral idempotent used throughout the tests.
    fn dihedral_e() -> AlgebraElement {
        AlgebraElement::parse(&gf2(), &d14(), "1+a+a^2+a^4+b+a^2*b+a^5*b+a^6*b").unwrap()
    }

    #[test]
    fn vector_space_operations() {
        let (f, g) = (gf2(), c7());
        let a = AlgebraElement::parse(&f, &g, "1 + a^3").unwrap();
        let zero = AlgebraElement::zero(&f, &g);
        assert_eq!(a.checked_add(&zero).unwrap(), a);
        assert_eq!(a.checked_add(&a).unwrap(), zero); // char 2
        assert_eq!(a.scale(&f.one()).unwrap(), a);
    }

    #[test]
    fn convolution_product() {
        let (f, g) = (gf2(), c7());
        let one = AlgebraElement::one(&f, &g);
        let a = AlgebraElement::parse(&f, &g, "1 + a + a^5").unwrap();
        assert_eq!(one.checked_mul(&a).unwrap(), a);

        // (1+a)(1+a+a^2) = 1 + a^3 in characteristic 2
        let x = AlgebraElement::parse(&f, &g, "1+a").unwrap();
        let y = AlgebraElement::parse(&f, &g, "1+a+a^2").unwrap();
        let expect = AlgebraElement::parse(&f, &g, "1+a^3").unwrap();
        assert_eq!(x.checked_mul(&y).unwrap(), expect);
    }

    #[test]
    fn dihedral_idempotent() {
        let e = dihedral_e();
        assert_eq!(e.weight(), 8);
        assert!(e.is_idempotent());
        assert!(!e.is_central());
    }

    #[test]
    fn adjoint_examples() {
        let (f, g) = (gf2(), c7());
        let one = AlgebraElement::one(&f, &g);
        assert_eq!(one.adjoint(), one);

        let a = AlgebraElement::parse(&f, &g, "a + a^3").unwrap();
        let expect = AlgebraElement::parse(&f, &g, "a^4 + a^6").unwrap();
        assert_eq!(a.adjoint(), expect);

        let e = dihedral_e();
        let expect =
            AlgebraElement::parse(&gf2(), &d14(), "1+a^3+a^5+a^6+b+a^2*b+a^5*b+a^6*b").unwrap();
        assert_eq!(e.adjoint(), expect);
        assert_eq!(e.adjoint().weight(), e.weight());
    }

    #[test]
    fn frobenius_examples() {
        let (f, g) = (gf2(), c7());
        let a = AlgebraElement::parse(&f, &g, "1 + a + a^4").unwrap();
        assert_eq!(a.frobenius(2).unwrap(), a); // GF(2) fixed by squaring

        let f4 = Field::of_order(4).unwrap();
        let c3 = Group::cyclic(3).unwrap();
        let x = AlgebraElement::parse(&f4, &c3, "w + a").unwrap();
        let expect = AlgebraElement::parse(&f4, &c3, "(w+1) + a").unwrap();
        assert_eq!(x.frobenius(2).unwrap(), expect);
        assert_eq!(x.frobenius(2).unwrap().frobenius(2).unwrap(), x);
    }

    #[test]
    fn weight_examples() {
        let (f, g) = (gf2(), c7());
        assert_eq!(AlgebraElement::zero(&f, &g).weight(), 0);
        let a = AlgebraElement::parse(&f, &g, "1 + a^3").unwrap();
        assert_eq!(a.weight(), 2);
    }

    #[test]
    fn euclidean_form_examples() {
        let (f, g) = (gf2(), c7());
        let one = AlgebraElement::one(&f, &g);
        let a = AlgebraElement::basis(&f, &g, 1);
        assert!(one.euclidean_form(&a).unwrap().is_zero());

        let c2 = Group::cyclic(2).unwrap();
        let v = AlgebraElement::parse(&f, &c2, "1 + a").unwrap();
        assert!(v.euclidean_form(&v).unwrap().is_zero()); // the self-dual seed

        // translation invariance spot value
        let x = AlgebraElement::parse(&f, &g, "1 + a").unwrap();
        let y = AlgebraElement::basis(&f, &g, 1);
        let g3 = 3;
        let lhs = x
            .right_translate(g3)
            .euclidean_form(&y.right_translate(g3))
            .unwrap();
        let rhs = x.euclidean_form(&y).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, f.one());
    }

    #[test]
    fn hermitian_form_examples() {
        let f4 = Field::of_order(4).unwrap();
        let c3 = Group::cyclic(3).unwrap();
        let w = f4.generator().unwrap();
        let one_elt = AlgebraElement::one(&f4, &c3);
        let w1 = one_elt.scale(&w).unwrap();
        // <w*1, w*1> = w * w^2 = w^3 = 1
        assert_eq!(w1.hermitian_form(&w1, 2).unwrap(), f4.one());

        let zero = AlgebraElement::zero(&f4, &c3);
        assert!(w1.hermitian_form(&zero, 2).unwrap().is_zero());

        let x = AlgebraElement::parse(&f4, &c3, "1 + w*a").unwrap();
        assert!(x.hermitian_form(&x, 2).unwrap().is_zero());

        // needs field of order q^2
        let f2 = gf2();
        let c2 = Group::cyclic(2).unwrap();
        let y = AlgebraElement::one(&f2, &c2);
        assert!(matches!(
            y.hermitian_form(&y, 2),
            Err(Error::HermitianOrder { .. })
        ));
    }

    #[test]
    fn idempotent_examples() {
        let (f, g) = (gf2(), c7());
        assert!(AlgebraElement::zero(&f, &g).is_idempotent());
        assert!(AlgebraElement::one(&f, &g).is_idempotent());
        // squaring permutes the exponent orbit {1,2,4} mod 7
        let e = AlgebraElement::parse(&f, &g, "a + a^2 + a^4").unwrap();
        assert!(e.is_idempotent());
    }

    #[test]
    fn centrality_examples() {
        let (f, g) = (gf2(), c7());
        let x = AlgebraElement::parse(&f, &g, "1 + a + a^5").unwrap();
        assert!(x.is_central()); // abelian group

        assert!(!dihedral_e().is_central());
        let sum = AlgebraElement::group_sum(&gf2(), &d14());
        assert!(sum.is_central());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let f = gf2();
        let a = AlgebraElement::one(&f, &c7());
        let b = AlgebraElement::one(&f, &d14());
        assert!(matches!(a.checked_add(&b), Err(Error::AmbientMismatch)));
        assert!(matches!(a.checked_mul(&b), Err(Error::AmbientMismatch)));
    }

    #[test]
    fn adjoint_laws_exhaustive_gf2_c4() {
        let f = gf2();
        let g = Group::cyclic(4).unwrap();
        let n = g.order();
        let all: Vec<AlgebraElement> = (0..1u32 << n)
            .map(|mask| {
                let coeffs = (0..n).map(|i| (mask >> i & 1) as u64).collect();
                AlgebraElement::from_raw(&f, &g, coeffs)
            })
            .collect();
        for a in &all {
            assert_eq!(a.adjoint().adjoint(), *a);
            for b in &all {
                let lhs = a.checked_mul(b).unwrap().adjoint();
                let rhs = b.adjoint().checked_mul(&a.adjoint()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn idempotent_closure_properties() {
        let e = dihedral_e();
        let one = AlgebraElement::one(e.field(), e.group());
        assert!(e.adjoint().is_idempotent());
        assert!(one.checked_sub(&e).unwrap().is_idempotent());
    }
}
