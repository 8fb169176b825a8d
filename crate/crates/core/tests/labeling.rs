//! The product formula printed alongside the multiplication table uses the
//! opposite name for `U1·U2`. These tests pin down that relationship.

use proptest::prelude::*;

use shadow_bracket::bracket::{
    closure, compose, compose_with, power, pq_invariants, states_matrix_with, RsConvention,
};
use shadow_bracket::oracle::{compile_word, enumerate_states};
use shadow_bracket::{BracketVector, Generator, Polynomial};

/// Product formula transcribed term by term, `B` on the left and `D` on the right.
fn printed_product(bv: &BracketVector, dv: &BracketVector) -> BracketVector {
    let x = Polynomial::x();
    let BracketVector {
        a: ab,
        b: bb,
        c: cb,
        d: db,
        e: eb,
    } = bv;
    let BracketVector {
        a: ad,
        b: bd,
        c: cd,
        d: dd,
        e: ed,
    } = dv;
    let a_bx_d = &(ab + &(bb * &x)) + db;
    let dx_b = &(db * &x) + bb;
    let a_cx_e = &(ab + &(cb * &x)) + eb;
    let c_ex = cb + &(eb * &x);
    BracketVector::new(
        ab * ad,
        &(&(bb * ad) + &(&a_bx_d * bd)) + &(&dx_b * ed),
        &(&(cb * ad) + &(&a_cx_e * cd)) + &(&c_ex * dd),
        &(&(db * ad) + &(&dx_b * cd)) + &(&a_bx_d * dd),
        &(&(eb * ad) + &(&c_ex * bd)) + &(&a_cx_e * ed),
    )
}

fn tuple_strategy() -> impl Strategy<Value = BracketVector> {
    let entry = prop::collection::vec(-3i64..=3, 0..=2).prop_map(|c| Polynomial::from_i64s(&c));
    [
        entry.clone(),
        entry.clone(),
        entry.clone(),
        entry.clone(),
        entry,
    ]
    .prop_map(BracketVector::from_array)
}

#[test]
fn derived_square_of_t_from_oracle() {
    let t = Generator::T.word().unwrap();
    let oracle = enumerate_states(&compile_word(&t.repeat(2)))
        .unwrap()
        .into_tangle()
        .unwrap();
    assert_eq!(oracle.to_string(), "[1,x+3,x+3,1,2x+4]");
    assert_eq!(
        compose(&Generator::T.tuple(), &Generator::T.tuple()),
        oracle
    );
}

#[test]
fn printed_formula_disagrees_with_table_on_basis_products() {
    let u1 = BracketVector::basis(shadow_bracket::TlElement::U1);
    let u2 = BracketVector::basis(shadow_bracket::TlElement::U2);
    assert_eq!(compose(&u1, &u2), BracketVector::from_ints([0, 0, 0, 0, 1]));
    assert_eq!(
        printed_product(&u1, &u2),
        BracketVector::from_ints([0, 0, 0, 1, 0])
    );
}

#[test]
fn swapped_states_matrices_follow_the_printed_pattern() {
    for g in Generator::ALL {
        let v = g.tuple();
        let m = states_matrix_with(&v, RsConvention::Swapped);
        let x = Polynomial::x();
        assert_eq!(m.get(1, 1), &(&(&v.a + &(&v.b * &x)) + &v.d));
        assert_eq!(m.get(1, 4), &(&(&v.d * &x) + &v.b));
        assert_eq!(m.get(2, 3), &(&v.c + &(&v.e * &x)));
        assert_eq!(m.get(4, 4), &(&(&v.a + &(&v.c * &x)) + &v.e));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn printed_formula_is_the_swapped_convention(u in tuple_strategy(), w in tuple_strategy()) {
        prop_assert_eq!(printed_product(&u, &w), compose_with(&u, &w, RsConvention::Swapped));
    }

    #[test]
    fn closures_do_not_see_the_convention(u in tuple_strategy(), n in 0usize..=6) {
        let swapped = (0..n).fold(BracketVector::unit(), |acc, _| printed_product(&u, &acc));
        prop_assert_eq!(closure(&swapped), closure(&power(&u, n)));
        prop_assert_eq!(closure(&power(&u.mirror(), n)), closure(&power(&u, n)));
    }

    /// The y^2 coefficient printed in the general generating function is -m.
    #[test]
    fn printed_y2_coefficient_is_minus_m(v in tuple_strategy()) {
        let x = Polynomial::x();
        let BracketVector { a, b, c, d, e } = &v;
        let printed = &(&(&(&(d * e) - &(b * c)) * &x.pow(2)) + &(&(-&(&(a * c) + &(a * b))) * &x))
            + &(&(&(&(-&(d + a)) * e) - &(a * d)) + &(&(b * c) - &(a * a)));
        let m = pq_invariants(&v).eigen_product().unwrap();
        prop_assert_eq!(printed, -&m);
    }
}
