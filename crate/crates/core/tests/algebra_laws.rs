//! Law suite for the algebra toolkit: the adjoint anti-automorphism and
//! involution, the adjoint-transfer identity of the Euclidean form, and
//! invariance of the form under right translation. Each law runs on at
//! least 10^3 seeded random triples per test algebra and exhaustively over
//! GF(2)C4.

use group_codes::{AlgebraElement, Field, FieldElement, Group};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const RANDOM_TRIPLES: usize = 1_000;

fn random_element(field: &Field, group: &Group, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let scalars: Vec<FieldElement> = field.elements().collect();
    let coeffs: Vec<FieldElement> = (0..group.order())
        .map(|_| scalars[rng.random_range(0..scalars.len())].clone())
        .collect();
    AlgebraElement::from_coeffs(field, group, &coeffs).unwrap()
}

fn test_algebras() -> Vec<(Field, Group)> {
    vec![
        (Field::of_order(2).unwrap(), Group::dihedral(7).unwrap()),
        (Field::of_order(3).unwrap(), Group::cyclic(4).unwrap()),
        (Field::of_order(4).unwrap(), Group::cyclic(3).unwrap()),
    ]
}

fn check_laws(a: &AlgebraElement, b: &AlgebraElement, c: &AlgebraElement) {
    // anti-automorphism
    let ab = a.checked_mul(b).unwrap();
    assert_eq!(
        ab.adjoint(),
        b.adjoint().checked_mul(&a.adjoint()).unwrap()
    );
    // involution
    assert_eq!(a.adjoint().adjoint(), *a);
    // adjoint is a coordinate permutation
    assert_eq!(a.adjoint().weight(), a.weight());
    // adjoint transfer: <ab, c> = <b, adjoint(a) c>
    let lhs = ab.euclidean_form(c).unwrap();
    let rhs = b
        .euclidean_form(&a.adjoint().checked_mul(c).unwrap())
        .unwrap();
    assert_eq!(lhs, rhs);
    // invariance under right translation: <ag, bg> = <a, b>
    let group = a.group().clone();
    let field = a.field().clone();
    let form = a.euclidean_form(b).unwrap();
    for g in 0..group.order() {
        let gg = AlgebraElement::basis(&field, &group, g);
        let ag = a.checked_mul(&gg).unwrap();
        let bg = b.checked_mul(&gg).unwrap();
        assert_eq!(ag.euclidean_form(&bg).unwrap(), form);
    }
}

#[test]
fn random_triples_per_test_algebra() {
    for (field, group) in test_algebras() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..RANDOM_TRIPLES {
            let a = random_element(&field, &group, &mut rng);
            let b = random_element(&field, &group, &mut rng);
            let c = random_element(&field, &group, &mut rng);
            check_laws(&a, &b, &c);
        }
    }
}

#[test]
fn exhaustive_over_gf2_c4() {
    let field = Field::of_order(2).unwrap();
    let group = Group::cyclic(4).unwrap();
    let n = group.order();
    let all: Vec<AlgebraElement> = (0..1u32 << n)
        .map(|mask| {
            let coeffs: Vec<FieldElement> = (0..n)
                .map(|i| field.scalar((mask >> i & 1) as u64))
                .collect();
            AlgebraElement::from_coeffs(&field, &group, &coeffs).unwrap()
        })
        .collect();
    for a in &all {
        for b in &all {
            for c in &all {
                check_laws(a, b, c);
            }
        }
    }
}

#[test]
fn gram_matrix_of_the_group_basis_is_identity() {
    for (field, group) in test_algebras() {
        for i in 0..group.order() {
            let gi = AlgebraElement::basis(&field, &group, i);
            for j in 0..group.order() {
                let gj = AlgebraElement::basis(&field, &group, j);
                let form = gi.euclidean_form(&gj).unwrap();
                if i == j {
                    assert_eq!(form, field.one());
                } else {
                    assert!(form.is_zero());
                }
            }
        }
    }
}

#[test]
fn idempotents_are_closed_under_adjoint_complement_and_frobenius() {
    let field = Field::of_order(4).unwrap();
    let group = Group::cyclic(3).unwrap();
    let sweep = group_codes::lcp::idempotent_sweep(&field, &group, 1 << 20).unwrap();
    assert!(!sweep.is_empty());
    let one = AlgebraElement::one(&field, &group);
    for e in &sweep {
        assert!(e.adjoint().is_idempotent());
        assert!(one.checked_sub(e).unwrap().is_idempotent());
        if e.is_central() {
            assert!(e.frobenius(2).unwrap().is_central());
        }
    }
}
